mod common;

use nmseq::automorphism::{analyze_automorphisms, candidate_groups, AutConfig, GroupingKey};
use nmseq::oracles::oracle_automorphisms;
use nmseq::{named, Graph};
use rand::Rng;

#[test]
fn every_result_preserves_edges() {
    let mut r = common::rng(21);
    for _ in 0..100 {
        let n = r.gen_range(1..=12);
        let p = r.gen_range(0.1..0.9);
        let g = common::random_graph(&mut r, n, p);
        let a = analyze_automorphisms(&g, &AutConfig::default()).unwrap();
        for p in a.set.permutations() {
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(g.has_edge(u, v), g.has_edge(p.apply(u), p.apply(v)));
                }
            }
        }
    }
}

#[test]
fn descriptor_key_matches_oracle() {
    let mut r = common::rng(22);
    let cfg = AutConfig {
        key: GroupingKey::Descriptor,
        cross_component: true,
        ..AutConfig::default()
    };
    for _ in 0..60 {
        let n = r.gen_range(1..=7);
        let p = r.gen_range(0.1..0.9);
        let g = common::random_graph(&mut r, n, p);
        let a = analyze_automorphisms(&g, &cfg).unwrap();
        assert_eq!(a.set, oracle_automorphisms(&g).unwrap());
    }
}

#[test]
fn strongly_regular_groups() {
    let cfg = AutConfig {
        candidate_budget: 10,
        ..AutConfig::default()
    };
    // one group of 16 vertices is far beyond a budget of 10
    let err = analyze_automorphisms(&named::shrikhande(), &cfg).unwrap_err();
    assert!(err.is_resource());
    assert!(err.to_string().contains("[16]"));
    let groups = candidate_groups(&named::rook_4x4(), &AutConfig::default()).unwrap();
    assert_eq!(groups.blocks[0].groups.len(), 1);
}

#[test]
fn isolated_vertices_and_empty_graph() {
    let cfg = AutConfig::default();
    assert_eq!(
        analyze_automorphisms(&Graph::empty(0), &cfg)
            .unwrap()
            .set
            .len(),
        1
    );
    assert_eq!(
        analyze_automorphisms(&Graph::empty(4), &cfg)
            .unwrap()
            .set
            .len(),
        1
    );
    let global = AutConfig {
        cross_component: true,
        ..cfg
    };
    assert_eq!(
        analyze_automorphisms(&Graph::empty(4), &global)
            .unwrap()
            .set
            .len(),
        24
    );
}
