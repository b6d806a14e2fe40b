//! Isomorphism-free generation of trees and connected unicyclic graphs.
//!
//! Trees of order `k` are obtained by hanging a leaf on every vertex of every
//! tree of order `k - 1`; unicyclic graphs by adding one edge to every tree of
//! the same order. Both are deduplicated by [`canonical_form`] and yielded in
//! ascending canonical-form order, each as its canonically labelled
//! representative.

mod canon;
pub mod prufer;

pub use canon::{canonical_form, canonical_graph, canonical_labeling, CanonicalForm, MAX_CANON_ORDER};

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the family generators accept.
pub const MAX_FAMILY_ORDER: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Tree,
    Unicyclic,
}

impl GraphClass {
    pub fn min_order(self) -> usize {
        match self {
            GraphClass::Tree => 1,
            GraphClass::Unicyclic => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Tree => "tree",
            GraphClass::Unicyclic => "unicyclic",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tree" | "trees" => Ok(GraphClass::Tree),
            "unicyclic" => Ok(GraphClass::Unicyclic),
            other => Err(Error::InvalidParameter(format!("unknown graph class `{other}`"))),
        }
    }
}

/// All isomorphism classes of one family at one order, in canonical order.
#[derive(Debug, Clone)]
pub struct FamilyIterator {
    order: usize,
    class: GraphClass,
    inner: std::vec::IntoIter<(CanonicalForm, Graph)>,
}

impl FamilyIterator {
    fn new(order: usize, class: GraphClass, members: BTreeMap<CanonicalForm, Graph>) -> Self {
        let inner = members.into_iter().collect::<Vec<_>>().into_iter();
        FamilyIterator { order, class, inner }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn class(&self) -> GraphClass {
        self.class
    }

    /// Yields `(canonical form, representative)` pairs instead of bare graphs.
    pub fn with_forms(self) -> std::vec::IntoIter<(CanonicalForm, Graph)> {
        self.inner
    }
}

impl Iterator for FamilyIterator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.inner.next().map(|(_, g)| g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.inner.size_hint()
    }
}

impl ExactSizeIterator for FamilyIterator {}

fn check_range(n: usize, class: GraphClass) -> Result<()> {
    if n < class.min_order() || n > MAX_FAMILY_ORDER {
        return Err(Error::InvalidOrder { n, reason: "family enumeration supports orders up to 12" });
    }
    Ok(())
}

fn dedup<I>(graphs: I) -> Result<BTreeMap<CanonicalForm, Graph>>
where
    I: IntoParallelIterator<Item = Graph>,
{
    let forms: Vec<(CanonicalForm, Graph)> =
        graphs.into_par_iter().map(|g| canonical_graph(&g)).collect::<Result<_>>()?;
    Ok(forms.into_iter().collect())
}

fn tree_classes(n: usize) -> Result<BTreeMap<CanonicalForm, Graph>> {
    let mut level = dedup(vec![Graph::empty(1)?])?;
    for k in 2..=n {
        let children: Vec<Graph> = level
            .values()
            .flat_map(|t| {
                (0..k - 1).map(move |v| {
                    let mut adj: Vec<(usize, usize)> = t.edges().collect();
                    adj.push((v, k - 1));
                    Graph::from_edges(k, adj)
                })
            })
            .collect::<Result<_>>()?;
        level = dedup(children)?;
    }
    Ok(level)
}

/// Every tree on `n` vertices up to isomorphism, `1 <= n <= 12`.
pub fn enumerate_trees(n: usize) -> Result<FamilyIterator> {
    check_range(n, GraphClass::Tree)?;
    Ok(FamilyIterator::new(n, GraphClass::Tree, tree_classes(n)?))
}

/// Every connected unicyclic graph on `n` vertices up to isomorphism,
/// `3 <= n <= 12`.
pub fn enumerate_unicyclic(n: usize) -> Result<FamilyIterator> {
    check_range(n, GraphClass::Unicyclic)?;
    let trees = tree_classes(n)?;
    let candidates: Vec<Graph> = trees
        .values()
        .flat_map(|t| t.non_edges().map(move |(u, v)| t.with_edge(u, v)))
        .collect::<Result<_>>()?;
    Ok(FamilyIterator::new(n, GraphClass::Unicyclic, dedup(candidates)?))
}

pub fn enumerate(class: GraphClass, n: usize) -> Result<FamilyIterator> {
    match class {
        GraphClass::Tree => enumerate_trees(n),
        GraphClass::Unicyclic => enumerate_unicyclic(n),
    }
}

/// `(order, class size)` for every order from the class minimum to `n_max`.
pub fn family_counts(class: GraphClass, n_max: usize) -> Result<Vec<(usize, usize)>> {
    (class.min_order()..=n_max).map(|n| Ok((n, enumerate(class, n)?.len()))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_tree, is_unicyclic, make_cycle, make_path, make_star};

    #[test]
    fn small_tree_families() {
        assert_eq!(enumerate_trees(1).unwrap().count(), 1);
        let four: Vec<_> = enumerate_trees(4).unwrap().with_forms().map(|(f, _)| f).collect();
        let mut expected = vec![
            canonical_form(&make_path(4).unwrap()).unwrap(),
            canonical_form(&make_star(4).unwrap()).unwrap(),
        ];
        expected.sort();
        assert_eq!(four, expected);
        assert_eq!(enumerate_trees(7).unwrap().count(), 11);
    }

    #[test]
    fn tree_counts_match_known_sequence() {
        let counts: Vec<usize> = family_counts(GraphClass::Tree, 10).unwrap().into_iter().map(|(_, c)| c).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn unicyclic_small_families() {
        let three: Vec<Graph> = enumerate_unicyclic(3).unwrap().collect();
        assert_eq!(three.len(), 1);
        assert_eq!(canonical_form(&three[0]).unwrap(), canonical_form(&make_cycle(3).unwrap()).unwrap());
        let counts: Vec<usize> =
            family_counts(GraphClass::Unicyclic, 7).unwrap().into_iter().map(|(_, c)| c).collect();
        assert_eq!(counts, vec![1, 2, 5, 13, 33]);
    }

    #[test]
    fn members_are_valid_and_pairwise_distinct() {
        for n in 3..=8 {
            let fam: Vec<_> = enumerate_unicyclic(n).unwrap().with_forms().collect();
            assert!(fam.windows(2).all(|w| w[0].0 < w[1].0));
            for (form, g) in &fam {
                assert!(is_unicyclic(g));
                assert_eq!(&canonical_form(g).unwrap(), form);
            }
            for g in enumerate_trees(n).unwrap() {
                assert!(is_tree(&g));
            }
        }
    }

    #[test]
    fn out_of_range_orders() {
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees(13).is_err());
        assert!(enumerate_unicyclic(2).is_err());
        assert!(enumerate_unicyclic(13).is_err());
    }

    #[test]
    fn output_is_deterministic() {
        let a: Vec<Graph> = enumerate_unicyclic(7).unwrap().collect();
        let b: Vec<Graph> = enumerate_unicyclic(7).unwrap().collect();
        assert_eq!(a, b);
    }
}
