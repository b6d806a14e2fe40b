use agspectra::enumeration::{canonical_form, enumerate_trees, enumerate_unicyclic};
use agspectra::graph::Graph;
use agspectra::io::{parse_graph6, write_graph6};
use agspectra::matrices::{build_weighted, WeightScheme};
use agspectra::spectra::{char_poly, full_spectrum, spectral_radius};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn family(n_max: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        out.extend(enumerate_trees(n).unwrap());
        if n >= 3 {
            out.extend(enumerate_unicyclic(n).unwrap());
        }
    }
    out
}

/// Minimum adjacency bitstring over all n! relabelings.
fn brute_canon(g: &Graph) -> Vec<bool> {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>>;
    fn bits(g: &Graph, p: &[usize]) -> Vec<bool> {
        let n = p.len();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| g.has_edge(p[i], p[j])).collect()
    }
    // Heap's algorithm
    let mut c = vec![0; n];
    let mut i = 0;
    best = Some(bits(g, &perm));
    while i < n {
        if c[i] < i {
            if i % 2 == 0 { perm.swap(0, i) } else { perm.swap(c[i], i) }
            let b = bits(g, &perm);
            if best.as_ref().map_or(true, |x| b < *x) {
                best = Some(b);
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best.unwrap()
}

#[test]
fn canonical_form_agrees_with_permutation_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in family(7) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        for k in (1..n).rev() {
            perm.swap(k, rng.gen_range(0..=k));
        }
        let h = g.relabel(&perm);
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        assert_eq!(brute_canon(&g), brute_canon(&h));
    }
    // Distinct classes give distinct forms under both routes.
    for n in 4..=7 {
        let uni: Vec<Graph> = enumerate_unicyclic(n).unwrap().collect();
        let mut forms: Vec<_> = uni.iter().map(|g| canonical_form(g).unwrap()).collect();
        let mut brute: Vec<_> = uni.iter().map(brute_canon).collect();
        forms.sort();
        forms.dedup();
        brute.sort();
        brute.dedup();
        assert_eq!(forms.len(), uni.len());
        assert_eq!(brute.len(), uni.len());
    }
}

#[test]
fn enumerated_graphs_are_canonically_labelled() {
    for g in family(8) {
        assert_eq!(write_graph6(&g).unwrap(), canonical_form(&g).unwrap().as_graph6());
    }
}

#[test]
fn radius_residual_bounded_on_small_families() {
    for g in family(8) {
        for scheme in WeightScheme::ALL {
            let m = build_weighted(&g, scheme, None).unwrap();
            let r = spectral_radius(&m, 1e-10).unwrap();
            assert!(r.residual <= 1e-9 * m.frobenius_norm().max(1.0), "{scheme} {:?}", write_graph6(&g));
        }
    }
}

#[test]
fn char_poly_vanishes_at_eigenvalues() {
    for g in family(8) {
        let m = build_weighted(&g, WeightScheme::ArithmeticGeometric, None).unwrap();
        let p = char_poly(&m).unwrap();
        let bound = 1e-6 * (1.0 + p.l1_norm());
        for lam in full_spectrum(&m, 1e-13).unwrap() {
            assert!(p.eval(lam).abs() <= bound, "{} at {lam}", write_graph6(&g).unwrap());
        }
    }
}

#[test]
fn full_spectrum_top_equals_radius_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..100 {
        let n = rng.gen_range(2..=12);
        let mut g = Graph::empty(n).unwrap();
        for j in 1..n {
            g.add_edge(rng.gen_range(0..j), j).unwrap();
        }
        for u in 0..n {
            for v in u + 1..n {
                if !g.has_edge(u, v) && rng.gen_bool(0.3) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        let m = build_weighted(&g, WeightScheme::ArithmeticGeometric, None).unwrap();
        let top = full_spectrum(&m, 1e-13).unwrap()[0];
        let r = spectral_radius(&m, 1e-12).unwrap().radius;
        assert!((top - r).abs() <= 1e-9 * r.max(1.0), "{top} vs {r}");
    }
}

proptest! {
    #[test]
    fn graph6_round_trips(n in 1usize..=20, density in 0.0f64..1.0, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(density) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        let s = write_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
