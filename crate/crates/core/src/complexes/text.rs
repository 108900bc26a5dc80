//! Plain-text formats for complexes and graphs.
//!
//! ```text
//! # comment
//! vertices: 1 2 3
//! 1 2
//! 2 3
//! ```
//!
//! Each body line is one facet. The token `{}` on its own line is the empty
//! facet, so the irrelevant complex is `vertices: ...` followed by `{}`.
//! Graphs use the same layout with exactly two labels per line.

use super::complex::SimplicialComplex;
use super::graph::Graph;
use crate::error::{Error, Result};
use crate::ideals::text::strip_comment;

struct Parsed {
    vertices: Vec<String>,
    rows: Vec<(usize, Vec<String>)>,
}

fn parse_rows(text: &str) -> Result<Parsed> {
    let mut header: Option<Vec<String>> = None;
    let mut rows = Vec::new();
    let mut seen_body = false;
    for (k, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices:") {
            if header.is_some() || seen_body {
                return Err(Error::parse(k + 1, "`vertices:` header must come first and only once"));
            }
            header = Some(rest.split_whitespace().map(str::to_string).collect());
            continue;
        }
        seen_body = true;
        if line == "{}" {
            rows.push((k + 1, Vec::new()));
        } else {
            rows.push((k + 1, line.split_whitespace().map(str::to_string).collect()));
        }
    }
    let vertices = match header {
        Some(h) => h,
        None => {
            let mut v: Vec<String> = Vec::new();
            for (_, row) in &rows {
                for label in row {
                    if !v.contains(label) {
                        v.push(label.clone());
                    }
                }
            }
            v
        }
    };
    Ok(Parsed { vertices, rows })
}

fn indices(vertices: &[String], line: usize, row: &[String]) -> Result<Vec<usize>> {
    row.iter()
        .map(|l| {
            vertices
                .iter()
                .position(|v| v == l)
                .ok_or_else(|| Error::parse(line, format!("unknown vertex `{l}`")))
        })
        .collect()
}

/// Parses the facet-list format. Without a header the vertex order is first
/// appearance.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let p = parse_rows(text)?;
    let mut facets = Vec::new();
    for (line, row) in &p.rows {
        facets.push(indices(&p.vertices, *line, row)?);
    }
    SimplicialComplex::from_facets(p.vertices, facets).map_err(|e| Error::parse(0, e.to_string()))
}

pub fn complex_to_text(c: &SimplicialComplex) -> String {
    let mut out = String::from("vertices:");
    for v in c.vertices() {
        out.push(' ');
        out.push_str(v);
    }
    out.push('\n');
    for f in c.facets() {
        if f.is_empty() {
            out.push_str("{}");
        } else {
            let labels: Vec<&str> = f.iter().map(|&v| c.vertices()[v as usize].as_str()).collect();
            out.push_str(&labels.join(" "));
        }
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let p = parse_rows(text)?;
    let mut edges = Vec::new();
    for (line, row) in &p.rows {
        if row.len() != 2 {
            return Err(Error::parse(*line, "an edge line needs exactly two vertices"));
        }
        let ix = indices(&p.vertices, *line, row)?;
        edges.push((ix[0], ix[1]));
    }
    Graph::new(p.vertices, edges).map_err(|e| Error::parse(0, e.to_string()))
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = String::from("vertices:");
    for v in g.vertices() {
        out.push(' ');
        out.push_str(v);
    }
    out.push('\n');
    for &(a, b) in g.edges() {
        out.push_str(&g.vertices()[a]);
        out.push(' ');
        out.push_str(&g.vertices()[b]);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_round_trip() {
        let text = "vertices: 1 2 3 4\n1 2 3\n3 4\n";
        let c = parse_complex(text).unwrap();
        assert_eq!(c.facets().len(), 2);
        assert_eq!(complex_to_text(&c), text);
    }

    #[test]
    fn irrelevant_and_void() {
        let c = parse_complex("vertices: a b\n{}\n").unwrap();
        assert!(c.is_irrelevant());
        let v = parse_complex("vertices: a b\n").unwrap();
        assert!(v.is_void());
        assert_eq!(complex_to_text(&c), "vertices: a b\n{}\n");
    }

    #[test]
    fn headerless_and_errors() {
        let c = parse_complex("# tri\nb a\na c\n").unwrap();
        assert_eq!(c.vertices(), ["b", "a", "c"]);
        assert!(matches!(
            parse_complex("vertices: 1 2\n1 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_graph("1 2 3\n").is_err());
        let g = parse_graph("1 2\n2 3\n").unwrap();
        assert_eq!(graph_to_text(&g), "vertices: 1 2 3\n1 2\n2 3\n");
    }
}
