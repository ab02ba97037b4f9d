use hatcraft::strategy::{
    bipartite_strategy, blowup_strategy, clique_strategy, construct_epsilon, construct_kfree,
    cycle2_strategy, even_cycle_config, even_cycle_strategy, gadget_compose, k22_matrices,
    k22_strategy, make_gadget, mat2_inverse_mod, ColorPairCodec, EpsilonRoute, GadgetKind,
};
use hatcraft::verify::{evaluate, losing_set, verify, VerifyOptions, DEFAULT_MAX_CONFIGS};
use hatcraft::{Digraph, Execution, HatConfig, NamedGraph, Strategy, Verdict};
use num_rational::Ratio;

fn solved(g: &Digraph, q: usize, f: &Strategy) -> bool {
    verify(g, q, f, &VerifyOptions::default()).unwrap().is_solved()
}

#[test]
fn cliques_are_solved_by_the_sum_rule() {
    for q in 2..=6 {
        let (g, f) = clique_strategy(q).unwrap();
        assert_eq!(g.vertex_count(), q);
        assert!(solved(&g, q, &f), "K{q}");
    }
}

#[test]
fn k22_inverse_is_checked_by_multiplication() {
    let (a, inv) = k22_matrices();
    for i in 0..2 {
        for j in 0..2 {
            let entry: usize = (0..2).map(|k| a[i][k] * inv[k][j]).sum::<usize>() % 3;
            assert_eq!(entry, usize::from(i == j));
        }
    }
    assert_eq!(mat2_inverse_mod(a, 3), Some(inv));
    // det = 2 * 2 - 1 * 1 = 3, singular mod 3
    assert_eq!(mat2_inverse_mod([[2, 1], [1, 2]], 3), None);
}

#[test]
fn k22_is_three_solvable() {
    let (g, f) = k22_strategy().unwrap();
    let e = evaluate(&g, 3, &f, &VerifyOptions::default()).unwrap();
    assert_eq!(e.configs, 81);
    assert_eq!(e.verdict, Verdict::Solved);
}

#[test]
fn bipartite_strategies_for_small_q() {
    let (g, f) = bipartite_strategy(2).unwrap();
    assert_eq!(g, NamedGraph::CompleteBipartite(1, 1).build().unwrap());
    assert!(solved(&g, 2, &f));
    let (g, f) = bipartite_strategy(3).unwrap();
    assert_eq!(g, NamedGraph::CompleteBipartite(2, 4).build().unwrap());
    let e = evaluate(&g, 3, &f, &VerifyOptions::default()).unwrap();
    assert_eq!((e.configs, e.verdict), (729, Verdict::Solved));
}

#[test]
fn directed_cycles_at_two_colours() {
    for n in 3..=10 {
        let (g, f) = cycle2_strategy(n).unwrap();
        assert!(solved(&g, 2, &f), "C{n}");
    }
    let (_, f) = cycle2_strategy(4).unwrap();
    assert_eq!(f.guess(0, &[0, 0, 0, 0]), 0);
}

#[test]
fn blowups_stay_solved() {
    let (k2, f) = clique_strategy(2).unwrap();
    let (g, s) = blowup_strategy(&k2, &f, 2).unwrap();
    assert_eq!(g, NamedGraph::Clique(4).build().unwrap());
    assert!(solved(&g, 4, &s));

    let (c3, f) = cycle2_strategy(3).unwrap();
    for r in 1..=3 {
        let (g, s) = blowup_strategy(&c3, &f, r).unwrap();
        assert_eq!(g.vertex_count(), 3 * r);
        assert!(solved(&g, 2 * r, &s), "C3 blown up by {r}");
    }
}

#[test]
fn blowup_uses_the_colour_pair_codec() {
    let codec = ColorPairCodec::new(3, 2).unwrap();
    assert_eq!(codec.q(), 6);
    assert_eq!(codec.decode(5), (2, 1));
    assert_eq!(codec.encode(2, 1), 5);
    for c in 0..6 {
        let (x, y) = codec.decode(c);
        assert_eq!(codec.encode(x, y), c);
    }
}

#[test]
fn gadget_compositions_are_solved() {
    let unit = make_gadget(GadgetKind::Unit).unwrap();
    let (g, f) = gadget_compose(2, &unit).unwrap();
    assert_eq!(g.vertex_count(), 3);
    let e = evaluate(&g, 2, &f, &VerifyOptions::default()).unwrap();
    assert_eq!((e.configs, e.verdict), (8, Verdict::Solved));

    let cycle3 = make_gadget(GadgetKind::Cycle3).unwrap();
    let (g, f) = gadget_compose(3, &cycle3).unwrap();
    assert_eq!(g.vertex_count(), 12);
    assert!(g.is_oriented());
    let e = evaluate(&g, 3, &f, &VerifyOptions::default()).unwrap();
    assert_eq!((e.configs, e.verdict), (531_441, Verdict::Solved));
}

#[test]
fn even_cycles_follow_the_residue_of_n() {
    for n in 2..=6 {
        let (g, f) = even_cycle_strategy(n).unwrap();
        assert_eq!(g, NamedGraph::UndirectedCycle(2 * n).build().unwrap());
        let losing = losing_set(&g, 3, &f, DEFAULT_MAX_CONFIGS, Execution::default()).unwrap();
        let expected = if n % 3 == 0 { 0 } else { 3 };
        assert_eq!(losing.len(), expected, "C{}", 2 * n);
    }
}

fn listed_set(n: usize, x: impl Fn(u8) -> Vec<u8>, y: impl Fn(u8) -> Vec<u8>) -> Vec<HatConfig> {
    let mut out: Vec<HatConfig> = (0..3u8)
        .map(|a| {
            let x: Vec<u8> = x(a).into_iter().map(|c| c % 3).collect();
            let y: Vec<u8> = y(a).into_iter().map(|c| c % 3).collect();
            assert_eq!(x.len(), n);
            HatConfig::new(3, even_cycle_config(&x, &y)).unwrap()
        })
        .collect();
    out.sort();
    out
}

#[test]
fn even_cycle_losing_sets_match_the_listed_configurations() {
    let (g, f) = even_cycle_strategy(4).unwrap();
    let got = losing_set(&g, 3, &f, DEFAULT_MAX_CONFIGS, Execution::default()).unwrap();
    let word = |a: u8| vec![a, a + 2, a + 1, a];
    assert_eq!(got, listed_set(4, word, word));

    let (g, f) = even_cycle_strategy(5).unwrap();
    let got = losing_set(&g, 3, &f, DEFAULT_MAX_CONFIGS, Execution::default()).unwrap();
    let x = |a: u8| vec![a + 2, a, a + 1, a + 2, a];
    let y = |a: u8| vec![a, a + 1, a + 2, a, a + 1];
    assert_eq!(got, listed_set(5, x, y));
}

#[test]
fn epsilon_family_examples() {
    let c = construct_epsilon(6, Ratio::new(2, 3), EpsilonRoute::K22).unwrap();
    assert_eq!(c.report.vertex_count, 8);
    assert_eq!(c.report.clique_number, 4);
    assert_eq!(c.graph.clique_number(64).unwrap(), 4);
    let f = c.strategy.as_ref().unwrap();
    assert!(solved(&c.graph, 6, f));

    let c = construct_epsilon(4, Ratio::new(1, 1), EpsilonRoute::Bipartite).unwrap();
    assert_eq!((c.report.p, c.report.vertex_count, c.report.clique_number), (2, 4, 4));
    assert!(solved(&c.graph, 4, c.strategy.as_ref().unwrap()));
    // vertex count is the base size times q' / p
    assert_eq!(
        c.report.vertex_count,
        c.report.base_vertex_count * c.report.q_effective / c.report.p
    );
}

#[test]
fn kfree_family_examples() {
    let c = construct_kfree(4, 5, 1).unwrap();
    assert_eq!((c.report.p, c.report.vertex_count, c.report.clique_number), (2, 4, 4));
    assert!(c.report.clique_ok);
    assert!(solved(&c.graph, 4, c.strategy.as_ref().unwrap()));

    let c = construct_kfree(6, 5, 1).unwrap();
    assert_eq!((c.report.p, c.report.vertex_count, c.report.clique_number), (3, 12, 4));
    assert!(c.report.clique_ok && c.report.vertex_bound_ok);
    assert_eq!(c.graph.clique_number(64).unwrap(), 4);
}

#[test]
fn kfree_rejects_a_degenerate_base() {
    // floor(8 / 9) + 1 = 1 < 2
    assert!(construct_kfree(4, 9, 1).is_err());
}

#[test]
fn extra_arcs_keep_a_solution() {
    let (g, f) = k22_strategy().unwrap();
    let bigger = g.with_extra_arcs(&[(0, 1), (2, 3)]).unwrap();
    let lifted = f.extend_to(&bigger).unwrap();
    assert!(solved(&bigger, 3, &lifted));
}
