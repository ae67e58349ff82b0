use nmseq::cliques::{enumerators, maximal_cliques, maximal_cliques_with, CliqueSequence};
use nmseq::descriptor::{descriptor_sequence, root_terms, sorted_equal};
use nmseq::nm::{nm_direct, nm_product, power_sequence};
use nmseq::{formats, Graph, IrrSequence, WeightSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            Graph::from_fn(n, |_, _| it.next().unwrap())
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

type LevelTerms = (Vec<(i64, i64)>, Vec<(i64, i64, i64)>);

fn sorted_terms(g: &Graph) -> Vec<LevelTerms> {
    let seq = power_sequence(g);
    let mut out = Vec::new();
    for m in seq.matrices() {
        let mut level: Vec<_> = (0..g.n())
            .map(|i| {
                let mut t = root_terms(m, i);
                t.m1.sort_unstable();
                t.m2.sort_unstable();
                (t.m1, t.m2)
            })
            .collect();
        level.sort();
        out.extend(level);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn constructors_keep_symmetry(g in graph(14)) {
        let a = g.adjacency_matrix();
        for i in 0..g.n() {
            prop_assert_eq!(a.get(i, i), 0);
            for j in 0..g.n() {
                prop_assert_eq!(a.get(i, j), a.get(j, i));
            }
        }
    }

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let back = formats::from_graph6(&formats::to_graph6(&g)).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn nm_builders_agree(g in graph(12)) {
        prop_assert_eq!(nm_direct(&g), nm_product(&g));
    }

    #[test]
    fn row_degree_and_monotone_closure(g in graph(12)) {
        let seq = power_sequence(&g);
        for m in seq.matrices() {
            for i in 0..g.n() {
                prop_assert_eq!(m.neighbour_set(i).len(), m.degree(i));
            }
        }
        for pair in seq.matrices().windows(2) {
            for i in 0..g.n() {
                for j in 0..g.n() {
                    if pair[0].get(i, j) != 0 {
                        prop_assert!(pair[1].get(i, j) != 0);
                    }
                }
            }
        }
    }

    #[test]
    fn descriptor_is_permutation_invariant((g, perm) in graph_and_perm(40)) {
        let w = WeightSet::default();
        let h = g.relabel(&perm);
        let a = descriptor_sequence(&g, &w);
        let b = descriptor_sequence(&h, &w);
        prop_assert!(sorted_equal(&a, &b, 1e-9));
        for (i, &pi) in perm.iter().enumerate() {
            prop_assert!((a.values[i] - b.values[pi]).abs() <= 1e-9);
        }
    }

    #[test]
    fn coefficient_multisets_match_under_isomorphism((g, perm) in graph_and_perm(16)) {
        prop_assert_eq!(sorted_terms(&g), sorted_terms(&g.relabel(&perm)));
    }

    #[test]
    fn clique_catalog_laws((g, perm) in graph_and_perm(11)) {
        let cat = maximal_cliques(&g).unwrap();
        for s in 1..=cat.omega() {
            let total: u64 = cat.counts()[s - 1].iter().sum();
            prop_assert_eq!(total, (s * cat.of_size(s).len()) as u64);
        }
        for q in cat.all() {
            for v in (0..g.n()).filter(|v| !q.contains(v)) {
                prop_assert!(q.iter().any(|&u| !g.has_edge(u, v)));
            }
        }
        for e in enumerators().iter() {
            prop_assert_eq!(&maximal_cliques_with(&g, e, 1 << 20).unwrap(), &cat);
        }
        let irr = IrrSequence::for_order(g.n());
        let a = CliqueSequence::from_catalog(&cat, &irr).unwrap();
        let b = CliqueSequence::from_catalog(&maximal_cliques(&g.relabel(&perm)).unwrap(), &irr).unwrap();
        prop_assert_eq!(a.omega(), b.omega());
        for s in 0..a.omega() {
            prop_assert!((a.cs[s] - b.cs[s]).abs() <= 1e-9);
        }
        for (v, &pv) in perm.iter().enumerate() {
            prop_assert!((a.r[v] - b.r[pv]).abs() <= 1e-9);
        }
    }
}
