//! Shipped corpus: checksums, canonical round trips and agreement with the
//! built-in constructions.

use std::path::PathBuf;

use lcmbetti::complexes::construct;
use lcmbetti::complexes::text::{complex_to_text, graph_to_text, parse_complex, parse_graph};
use lcmbetti::ideals::text::{ideal_to_text, parse_ideal};
use serde::Deserialize;
use sha2::{Digest, Sha256};

#[derive(Deserialize)]
struct Manifest {
    version: u32,
    entries: Vec<Entry>,
}

#[derive(Deserialize)]
struct Entry {
    file: String,
    name: String,
    p: Option<u32>,
    kind: String,
    sha256: String,
    extended: bool,
}

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn manifest() -> Manifest {
    let text = std::fs::read_to_string(corpus_dir().join("manifest.json")).unwrap();
    serde_json::from_str(&text).unwrap()
}

#[test]
fn checksums_match_manifest() {
    let m = manifest();
    assert_eq!(m.version, 1);
    let mut listed: Vec<&str> = m.entries.iter().map(|e| e.file.as_str()).collect();
    listed.sort_unstable();
    let mut on_disk: Vec<String> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n != "manifest.json")
        .collect();
    on_disk.sort_unstable();
    assert_eq!(listed, on_disk);
    for e in &m.entries {
        let bytes = std::fs::read(corpus_dir().join(&e.file)).unwrap();
        assert_eq!(hex::encode(Sha256::digest(&bytes)), e.sha256, "{} was edited", e.file);
    }
}

#[test]
fn files_round_trip_byte_identically() {
    for e in manifest().entries {
        let text = std::fs::read_to_string(corpus_dir().join(&e.file)).unwrap();
        let again = match e.kind.as_str() {
            "ideal" => ideal_to_text(&parse_ideal(&text).unwrap()),
            "complex" => complex_to_text(&parse_complex(&text).unwrap()),
            "graph" => graph_to_text(&parse_graph(&text).unwrap()),
            k => panic!("unknown kind {k}"),
        };
        assert_eq!(again, text, "{}", e.file);
    }
}

#[test]
fn files_agree_with_constructions() {
    for e in manifest().entries {
        let text = std::fs::read_to_string(corpus_dir().join(&e.file)).unwrap();
        let c = construct(&e.name, e.p).unwrap();
        let built = match (e.kind.as_str(), &c) {
            ("ideal", c) => ideal_to_text(&c.ideal()),
            ("complex", lcmbetti::complexes::Construction::Complex(x)) => complex_to_text(x),
            ("graph", lcmbetti::complexes::Construction::Graph(g)) => graph_to_text(g),
            (k, c) => panic!("{}: {k} from a {}", e.file, c.kind()),
        };
        assert_eq!(built, text, "{}", e.file);
    }
}

#[test]
fn expected_sizes() {
    let count = |f: &str| parse_ideal(&std::fs::read_to_string(corpus_dir().join(f)).unwrap()).unwrap().num_generators();
    assert_eq!(count("rp2.ideal"), 10);
    assert_eq!(count("klein_bottle.ideal"), 22);
    assert_eq!(count("kty.ideal"), 6);
    assert_eq!(count("katzman.ideal"), 23);
    assert_eq!(count("dunce_cap_3.ideal"), 27);
    let extended: Vec<String> = manifest().entries.into_iter().filter(|e| e.extended).map(|e| e.name).collect();
    assert!(!extended.is_empty() && extended.iter().all(|n| n == "edge_ideal_square_example"));
}
