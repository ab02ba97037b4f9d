use hatcraft::graph::{parse_digraph, serialize_digraph};
use hatcraft::strategy::{clique_strategy, cycle2_strategy, k22_strategy, parse_strategy, serialize_strategy};
use hatcraft::verify::{correct_count_profile, evaluate, verify, VerifyOptions};
use hatcraft::{Digraph, Execution, Strategy};
use petgraph::algo::is_cyclic_directed;
use petgraph::graph::DiGraph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn digraph_from_bits(n: usize, bits: &[bool]) -> Digraph {
    let arcs = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .zip(bits)
        .filter(|&(_, &b)| b)
        .map(|(a, _)| a);
    Digraph::new(n, arcs).unwrap()
}

prop_compose! {
    fn arb_digraph(max_n: usize)(n in 1..=max_n)(
        bits in prop::collection::vec(any::<bool>(), n * (n - 1)),
        n in Just(n),
    ) -> Digraph {
        digraph_from_bits(n, &bits)
    }
}

fn random_strategy(g: &Digraph, q: usize, seed: u64) -> Strategy {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rules = (0..g.vertex_count())
        .map(|v| {
            let sees = g.in_neighbours(v).to_vec();
            let table = (0..q.pow(sees.len() as u32)).map(|_| rng.random_range(0..q) as u8).collect();
            (sees, table)
        })
        .collect();
    Strategy::from_tables(q, rules).unwrap()
}

/// Induced subgraph on `vertices` is acyclic, checked with petgraph.
fn petgraph_acyclic(g: &Digraph, vertices: &[usize]) -> bool {
    let mut pg = DiGraph::<(), ()>::new();
    let nodes: Vec<_> = vertices.iter().map(|_| pg.add_node(())).collect();
    for (i, &u) in vertices.iter().enumerate() {
        for (j, &v) in vertices.iter().enumerate() {
            if g.has_arc(u, v) {
                pg.add_edge(nodes[i], nodes[j], ());
            }
        }
    }
    !is_cyclic_directed(&pg)
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..1u32 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lex_product_counts(g in arb_digraph(6), r in 1usize..=3) {
        let p = g.lex_product(r).unwrap();
        let n = g.vertex_count();
        prop_assert_eq!(p.vertex_count(), n * r);
        prop_assert_eq!(p.arc_count(), r * r * g.arc_count() + n * r * (r - 1));
    }

    #[test]
    fn lex_product_multiplies_the_clique_number(g in arb_digraph(6), r in 1usize..=3) {
        let omega = g.clique_number(64).unwrap();
        prop_assert_eq!(g.lex_product(r).unwrap().clique_number(64).unwrap(), r * omega);
    }

    #[test]
    fn acyclic_witness_is_maximum(g in arb_digraph(7)) {
        let found = g.max_acyclic_induced(20).unwrap();
        prop_assert_eq!(found.vertices.len(), found.size);
        prop_assert!(petgraph_acyclic(&g, &found.vertices));
        let best = subsets(g.vertex_count())
            .filter(|s| petgraph_acyclic(&g, s))
            .map(|s| s.len())
            .max()
            .unwrap();
        prop_assert_eq!(found.size, best);
    }

    #[test]
    fn semibipartite_partitions_are_valid_and_extreme(g in arb_digraph(8)) {
        let independent = |s: &[usize]| s.iter().all(|&u| s.iter().all(|&v| !g.has_arc(u, v)));
        let n = g.vertex_count();
        let valid: Vec<Vec<usize>> = subsets(n)
            .filter(|l| {
                let r: Vec<usize> = (0..n).filter(|v| !l.contains(v)).collect();
                independent(l) && petgraph_acyclic(&g, &r)
            })
            .collect();
        let best = g.best_semibipartite(20).unwrap();
        let least = g.min_semibipartite(20).unwrap();
        prop_assert_eq!(best.is_some(), !valid.is_empty());
        prop_assert_eq!(least.is_some(), !valid.is_empty());
        if let (Some(best), Some(least)) = (best, least) {
            for p in [&best, &least] {
                prop_assert!(independent(&p.left));
                prop_assert!(petgraph_acyclic(&g, &p.right));
                prop_assert_eq!(p.m() + p.s(), n);
            }
            prop_assert_eq!(best.m(), valid.iter().map(Vec::len).max().unwrap());
            prop_assert_eq!(least.m(), valid.iter().map(Vec::len).min().unwrap());
        }
    }

    #[test]
    fn correct_guesses_total_n_q_pow_n_minus_one(g in arb_digraph(6), q in 2usize..=4, seed in any::<u64>()) {
        let f = random_strategy(&g, q, seed);
        let e = evaluate(&g, q, &f, &VerifyOptions::default()).unwrap();
        let n = g.vertex_count() as u32;
        prop_assert_eq!(e.correct_total, n as u64 * (q as u64).pow(n - 1));
    }

    #[test]
    fn parallel_matches_sequential(g in arb_digraph(7), q in 2usize..=3, seed in any::<u64>()) {
        let f = random_strategy(&g, q, seed);
        let opts = VerifyOptions::default().with_losing_cap(17);
        let par = evaluate(&g, q, &f, &opts.with_execution(Execution::Parallel)).unwrap();
        let seq = evaluate(&g, q, &f, &opts.with_execution(Execution::Sequential)).unwrap();
        prop_assert_eq!(par, seq);
    }

    #[test]
    fn digraph_text_round_trip(g in arb_digraph(8)) {
        prop_assert_eq!(parse_digraph(&serialize_digraph(&g)).unwrap(), g);
    }

    #[test]
    fn strategy_text_round_trip(g in arb_digraph(5), q in 2usize..=3, seed in any::<u64>()) {
        let f = random_strategy(&g, q, seed);
        prop_assert_eq!(parse_strategy(&serialize_strategy(&f).unwrap()).unwrap(), f);
    }

    #[test]
    fn extra_arcs_preserve_solutions(which in 0usize..3, bits in prop::collection::vec(any::<bool>(), 12)) {
        let (g, f, q) = match which {
            0 => { let (g, f) = clique_strategy(3).unwrap(); (g, f, 3) }
            1 => { let (g, f) = k22_strategy().unwrap(); (g, f, 3) }
            _ => { let (g, f) = cycle2_strategy(4).unwrap(); (g, f, 2) }
        };
        let n = g.vertex_count();
        let extra: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v && !g.has_arc(u, v))
            .zip(bits)
            .filter(|&(_, b)| b)
            .map(|(a, _)| a)
            .collect();
        let bigger = g.with_extra_arcs(&extra).unwrap();
        let lifted = f.extend_to(&bigger).unwrap();
        prop_assert!(verify(&bigger, q, &lifted, &VerifyOptions::default()).unwrap().is_solved());
    }
}

#[test]
fn acyclic_sets_have_binomial_correct_count_profiles() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..100u64 {
        let n = rng.random_range(2..=7usize);
        let bits: Vec<bool> = (0..n * (n - 1)).map(|_| rng.random_bool(0.4)).collect();
        let g = digraph_from_bits(n, &bits);
        let q = rng.random_range(2..=4usize);
        // a random acyclic subset: grow greedily in a shuffled order
        let mut order: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            order.swap(i, rng.random_range(0..=i));
        }
        let mut set: Vec<usize> = Vec::new();
        for v in order {
            set.push(v);
            if !petgraph_acyclic(&g, &set) {
                set.pop();
            }
        }
        set.sort_unstable();
        let f = random_strategy(&g, q, trial);
        let fixed: Vec<u8> = (0..n).map(|_| rng.random_range(0..q) as u8).collect();
        let profile = correct_count_profile(&f, &set, &fixed).unwrap();
        let i = set.len() as u64;
        for (d, &count) in profile.iter().enumerate() {
            let d = d as u64;
            assert_eq!(
                count,
                binomial(i, d) * (q as u64 - 1).pow((i - d) as u32),
                "trial {trial}, d = {d}"
            );
        }
    }
}
