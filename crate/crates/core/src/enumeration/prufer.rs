//! Labelled trees from Prüfer sequences, an enumeration route independent of
//! leaf-extension used to cross-check the tree generator.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Decodes a Prüfer sequence of length `n - 2` over `0..n` into its tree.
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Graph> {
    if n < 2 || seq.len() + 2 != n {
        return Err(Error::InvalidParameter(format!("Prüfer sequence of length {} cannot encode a tree on {n} vertices", seq.len())));
    }
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { index: bad, n });
    }
    let mut remaining = vec![1usize; n];
    for &v in seq {
        remaining[v] += 1;
    }
    let mut g = Graph::empty(n)?;
    for &v in seq {
        let leaf = (0..n).find(|&u| remaining[u] == 1).expect("a leaf always exists");
        g.add_edge(leaf, v)?;
        remaining[leaf] = 0;
        remaining[v] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&u| remaining[u] == 1).collect();
    g.add_edge(last[0], last[1])?;
    Ok(g)
}

/// All `n^(n-2)` labelled trees on `n` vertices, `2 <= n <= 8`.
pub fn labeled_trees(n: usize) -> Result<Vec<Graph>> {
    if !(2..=8).contains(&n) {
        return Err(Error::InvalidOrder { n, reason: "Prüfer enumeration supports 2..=8" });
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect();
            prufer_decode(&seq, n)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{degrees, is_tree};

    #[test]
    fn decodes_known_sequence() {
        // [3, 3, 3, 4] over 0..6: leaves 0, 1, 2 hang on 3, then 3-4, 4-5
        let g = prufer_decode(&[3, 3, 3, 4], 6).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(degrees(&g).0, vec![1, 1, 1, 4, 2, 1]);
    }

    #[test]
    fn cayley_counts() {
        for n in 2..=6 {
            let trees = labeled_trees(n).unwrap();
            assert_eq!(trees.len(), n.pow(n as u32 - 2));
            assert!(trees.iter().all(is_tree));
            let distinct: std::collections::HashSet<_> = trees.iter().collect();
            assert_eq!(distinct.len(), trees.len());
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(prufer_decode(&[0], 4).is_err());
        assert!(prufer_decode(&[5, 0], 4).is_err());
        assert!(labeled_trees(9).is_err());
    }
}
