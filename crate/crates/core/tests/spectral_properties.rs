use cospec::cospectrality::Catalog;
use cospec::distance::{lambda_sq, sigma, sigma_from_complete, sigma_to_complete, spectral_distance, Norm};
use cospec::graph::*;
use cospec::spectrum::{char_poly, count_eigenvalues_at_least, eigenvalues, energy};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .zip(bits)
                .filter_map(|(e, b)| b.then_some(e))
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn trace_identities(g in arb_graph(12)) {
        let s = eigenvalues(&g).unwrap();
        let sum: f64 = s.values().iter().sum();
        let squares: f64 = s.values().iter().map(|x| x * x).sum();
        prop_assert!(sum.abs() < 1e-9);
        prop_assert!((squares - 2.0 * g.edge_count() as f64).abs() < 1e-9);
        prop_assert!(s.values().windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn eigenvalues_are_roots_of_the_char_poly(g in arb_graph(10)) {
        let s = eigenvalues(&g).unwrap();
        let p = char_poly(&g).unwrap();
        let guard = g.order() as f64 * p.l1_norm() * 1e-9;
        for &l in s.values() {
            prop_assert!(p.eval(l).abs() <= guard);
        }
        // exact and numeric counts agree away from the roots
        for t in [-2i64, -1, 0, 1, 2] {
            prop_assert_eq!(count_eigenvalues_at_least(&g, t as f64).unwrap(), p.roots_at_least(t, 1));
        }
    }

    #[test]
    fn vertex_deletion_interlaces(g in arb_graph(10), v in 0usize..10) {
        let n = g.order();
        prop_assume!(n >= 2);
        let v = v % n;
        let keep: Vec<usize> = (0..n).filter(|&u| u != v).collect();
        let (host, sub) = (eigenvalues(&g).unwrap(), eigenvalues(&g.induced_subgraph(&keep).unwrap()).unwrap());
        for i in 1..n {
            prop_assert!(host.lambda(i) + 1e-9 >= sub.lambda(i));
            prop_assert!(sub.lambda(i) + 1e-9 >= host.lambda(i + 1));
        }
    }

    #[test]
    fn energy_bound(g in arb_graph(12)) {
        let m = g.edge_count() as f64;
        prop_assert!(energy(&g).unwrap() >= 2.0 * m.sqrt() - 1e-8);
    }

    #[test]
    fn one_positive_eigenvalue_iff_multipartite(g in arb_graph(9)) {
        prop_assume!(g.edge_count() > 0);
        let positive = char_poly(&g).unwrap().roots_above(0, 1).0;
        prop_assert_eq!(positive == 1, is_complete_multipartite_plus_isolated(&g).is_some());
    }

    #[test]
    fn spectrum_is_a_relabelling_invariant(g in arb_graph(10), seed in any::<u64>()) {
        let n = g.order();
        let mut order: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            order.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let h = g.relabel(&order).unwrap();
        prop_assert_eq!(char_poly(&g).unwrap(), char_poly(&h).unwrap());
        prop_assert!(sigma(&g, &h).unwrap() < 1e-9);
    }
}

#[test]
fn distance_is_a_pseudometric_on_small_orders() {
    for n in 1..=6 {
        let catalog = Catalog::generate(n).unwrap();
        let entries = catalog.entries();
        for a in entries {
            assert_eq!(spectral_distance(Norm::L1, &a.data, &a.data).unwrap(), 0.0);
            for b in entries {
                let ab = spectral_distance(Norm::L1, &a.data, &b.data).unwrap();
                let ba = spectral_distance(Norm::L1, &b.data, &a.data).unwrap();
                assert!(ab >= 0.0 && ab == ba);
                let sq = spectral_distance(Norm::L2Sq, &a.data, &b.data).unwrap();
                assert!(sq <= ab * ab + 1e-9);
            }
        }
        // triangle inequality on a sample of triples
        for a in entries.iter().step_by(3) {
            for b in entries.iter().step_by(5) {
                for c in entries.iter().step_by(7) {
                    let d = |x: &cospec::cospectrality::CatalogEntry, y: &cospec::cospectrality::CatalogEntry| {
                        spectral_distance(Norm::L1, &x.data, &y.data).unwrap()
                    };
                    assert!(d(a, c) <= d(a, b) + d(b, c) + 1e-9);
                }
            }
        }
    }
}

#[test]
fn distance_to_the_empty_graph_is_energy() {
    for n in 1..=6 {
        for e in Catalog::generate(n).unwrap().entries() {
            let d = sigma(&empty(n), e.graph()).unwrap();
            assert!((d - energy(e.graph()).unwrap()).abs() < 1e-9);
            assert!(lambda_sq(&empty(n), e.graph()).unwrap() <= d * d + 1e-9);
        }
    }
}

#[test]
fn distance_to_complete_shortcut_up_to_seven() {
    for n in 1..=7 {
        for e in Catalog::generate(n).unwrap().entries() {
            let fast = sigma_to_complete(n, e.graph()).unwrap();
            let direct = sigma_from_complete(e.graph()).unwrap();
            assert!((fast - direct).abs() < 1e-8, "{:?}", e.form);
        }
    }
}
