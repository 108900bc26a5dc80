//! Divisibility index over exponent vectors.
//!
//! One trie level per variable; a query walks only the children whose
//! exponent does not exceed the query's, so "does any stored monomial divide
//! `m`" touches a small fraction of the stored set in practice.

#[derive(Debug, Default)]
struct Node {
    children: Vec<(u32, usize)>,
}

#[derive(Debug)]
pub(crate) struct DivisorTrie {
    nvars: usize,
    nodes: Vec<Node>,
    len: usize,
}

impl DivisorTrie {
    pub fn new(nvars: usize) -> Self {
        DivisorTrie {
            nvars,
            nodes: vec![Node::default()],
            len: 0,
        }
    }

    pub fn insert(&mut self, exps: &[u32]) {
        debug_assert_eq!(exps.len(), self.nvars);
        let mut cur = 0;
        for &e in exps {
            let found = self.nodes[cur].children.iter().find(|(x, _)| *x == e).map(|(_, c)| *c);
            cur = match found {
                Some(c) => c,
                None => {
                    let id = self.nodes.len();
                    self.nodes.push(Node::default());
                    self.nodes[cur].children.push((e, id));
                    id
                }
            };
        }
        self.len += 1;
    }

    /// Whether some stored vector is componentwise `<= exps`.
    pub fn any_divides(&self, exps: &[u32]) -> bool {
        if self.len == 0 {
            return false;
        }
        self.walk(0, 0, exps)
    }

    fn walk(&self, node: usize, depth: usize, exps: &[u32]) -> bool {
        if depth == self.nvars {
            return true;
        }
        let bound = exps[depth];
        self.nodes[node]
            .children
            .iter()
            .any(|&(e, c)| e <= bound && self.walk(c, depth + 1, exps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_divisors_only() {
        let mut t = DivisorTrie::new(3);
        t.insert(&[1, 1, 0]);
        t.insert(&[0, 0, 2]);
        assert!(t.any_divides(&[1, 1, 0]));
        assert!(t.any_divides(&[2, 1, 1]));
        assert!(t.any_divides(&[0, 3, 2]));
        assert!(!t.any_divides(&[1, 0, 1]));
        assert!(!DivisorTrie::new(3).any_divides(&[5, 5, 5]));
    }

    #[test]
    fn zero_variables() {
        let mut t = DivisorTrie::new(0);
        assert!(!t.any_divides(&[]));
        t.insert(&[]);
        assert!(t.any_divides(&[]));
    }
}
