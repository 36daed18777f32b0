mod common;

use chibound::coloring::{list_color_matching_complement, verify_coloring, Coloring, ListAssignment};
use chibound::graph::{parse_dimacs, random_graph, random_regular, write_dimacs, Matching};
use chibound::pipeline::{bound_chi, PipelineConfig};
use chibound::sparse::{complete_from_partial, naive_color_trial, regularize, SparseConfig};
use chibound::transversal::{extend_to_maximal, hitting_stable_set, HittingOutcome};
use chibound::Graph;
use common::{brute_max_degree, brute_maximum_cliques, brute_omega, is_stable};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0..=1.0f64, any::<u64>()).prop_map(|(n, p, seed)| random_graph(n, p, seed).unwrap())
}

fn arb_regular() -> impl Strategy<Value = (Graph, usize)> {
    (3usize..=9, 1usize..=6, any::<u64>())
        .prop_filter_map("parity", |(half, d, seed)| {
            let n = 2 * half;
            (d < n).then(|| (random_regular(n, d, seed).unwrap(), d))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn dimacs_round_trip(g in arb_graph(30)) {
        let back = parse_dimacs(&write_dimacs(&g, &["round trip"])).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn coloring_formats_round_trip(g in arb_graph(20)) {
        let c = bound_chi(&g, &PipelineConfig::default()).unwrap().coloring;
        let from_text = Coloring::from_text(&c.to_text(), g.n()).unwrap();
        prop_assert_eq!(from_text.colors(), c.colors());
        prop_assert_eq!(Coloring::from_json(&c.to_json(), g.n()).unwrap(), c);
    }

    #[test]
    fn trial_counts_satisfy_x_identity((g, d) in arb_regular(), seed in any::<u64>(), trial in 0u64..1000) {
        let cfg = SparseConfig::for_degree(d, 0, seed);
        let cfg = SparseConfig { c: cfg.c.max(1), ..cfg };
        let rec = naive_color_trial(&g, &cfg, trial).unwrap();
        for v in 0..g.n() {
            prop_assert_eq!(rec.x[v], rec.at[v] - rec.del[v]);
            prop_assert!(rec.x_prime[v] <= rec.x[v]);
        }
        prop_assert!(rec.retained_coloring(cfg.c).is_proper(&g));
        // Repeat the same trial: the stream is a pure function of (seed, trial).
        prop_assert_eq!(naive_color_trial(&g, &cfg, trial).unwrap(), rec);
    }

    #[test]
    fn completion_of_a_trial_stays_within_delta_plus_one((g, d) in arb_regular(), seed in any::<u64>()) {
        let cfg = SparseConfig::for_degree(d, 0, seed);
        let cfg = SparseConfig { c: cfg.c.max(1), ..cfg };
        let rec = naive_color_trial(&g, &cfg, 0).unwrap();
        let full = complete_from_partial(&g, &rec.retained_coloring(cfg.c), cfg.c, 0).unwrap();
        prop_assert!(verify_coloring(&g, &full));
        prop_assert!(full.max_color() as usize <= d + 1);
    }

    #[test]
    fn regularize_is_regular_and_induced(g in arb_graph(12)) {
        let reg = regularize(&g).unwrap();
        let h = &reg.graph;
        prop_assert!(h.is_regular());
        prop_assert_eq!(h.max_degree(), g.max_degree());
        prop_assert_eq!(h.n(), g.n() << reg.doublings);
        for u in 0..g.n() {
            for v in 0..g.n() {
                prop_assert_eq!(h.has_edge(u, v), g.has_edge(u, v));
            }
        }
        // Every copy reproduces g on its block.
        for block in 0..(1usize << reg.doublings) {
            let off = block * g.n();
            for (u, v) in g.edges() {
                prop_assert!(h.has_edge(off + u, off + v));
            }
        }
    }

    #[test]
    fn ert_colors_random_lists(n in 1usize..=12, seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let ell = rng.gen_range(0..=n / 2);
        let pairs: Vec<(usize, usize)> = (0..ell).map(|i| (order[2 * i], order[2 * i + 1])).collect();
        let pool: Vec<u32> = (1..=2 * n as u32).collect();
        let lists: Vec<Vec<u32>> = (0..n)
            .map(|_| pool.choose_multiple(&mut rng, n - ell).copied().collect())
            .collect();
        let m = Matching::new(pairs.iter().copied(), n).unwrap();
        let slices: Vec<&[u32]> = lists.iter().map(Vec::as_slice).collect();
        let la = ListAssignment::from_slices(&slices).unwrap();
        let c = list_color_matching_complement(n, &m, &la).unwrap();
        for u in 0..n {
            let cu = c.get(u).unwrap();
            prop_assert!(lists[u].contains(&cu));
            for v in u + 1..n {
                if !pairs.contains(&(u, v)) && !pairs.contains(&(v, u)) {
                    prop_assert_ne!(cu, c.get(v).unwrap());
                }
            }
        }
    }

    #[test]
    fn hitting_set_meets_every_maximum_clique(g in arb_graph(11)) {
        let (omega, delta) = (brute_omega(&g), brute_max_degree(&g));
        match hitting_stable_set(&g).unwrap() {
            HittingOutcome::Inapplicable { .. } => prop_assert!(3 * omega <= 2 * (delta + 1)),
            HittingOutcome::Found(h) => {
                prop_assert!(3 * omega > 2 * (delta + 1));
                prop_assert!(is_stable(&g, &h.set));
                for c in brute_maximum_cliques(&g) {
                    prop_assert!(c.iter().any(|v| h.set.contains(v)));
                }
                let s = extend_to_maximal(&g, &h.set).unwrap();
                prop_assert!(is_stable(&g, &s));
                prop_assert!((0..g.n()).all(|v| s.contains(&v) || g.neighbors(v).iter().any(|u| s.contains(u))));
            }
        }
    }

    #[test]
    fn pipeline_stays_within_delta_plus_one(g in arb_graph(40), seed in any::<u64>()) {
        let cfg = PipelineConfig { seed, ..PipelineConfig::default() };
        let r = bound_chi(&g, &cfg).unwrap();
        prop_assert!(verify_coloring(&g, &r.coloring));
        prop_assert!(r.colors_used <= g.max_degree() + 1);
        prop_assert!(r.colors_used as i64 <= r.bound);
    }
}
