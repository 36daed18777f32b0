mod common;

use chibound::cliques::clique_number;
use chibound::coloring::verify_coloring;
use chibound::pipeline::{bound_chi, BranchStep, PipelineConfig};
use chibound::Graph;
use common::benchmark;

// Published chromatic numbers of the benchmark files.
const KNOWN_CHI: [(&str, usize, usize); 5] = [
    ("myciel3", 4, 2),
    ("myciel4", 5, 2),
    ("myciel5", 6, 2),
    ("queen5_5", 5, 5),
    ("queen6_6", 7, 6),
];

#[test]
fn benchmarks_color_between_chi_and_delta() {
    for (name, chi, omega) in KNOWN_CHI {
        let g = benchmark(name);
        assert_eq!(clique_number(&g).unwrap(), omega, "{name}");
        let r = bound_chi(&g, &PipelineConfig::default()).unwrap();
        assert!(verify_coloring(&g, &r.coloring), "{name}");
        assert!(r.colors_used >= chi, "{name}: {} < χ = {chi}", r.colors_used);
        assert!(r.colors_used <= g.max_degree(), "{name}: Brooks bound");
        assert!(r.bound >= chi as i64, "{name}");
        if let Some(exact) = r.input.chi {
            assert_eq!(exact as usize, chi, "{name}");
        }
    }
}

#[test]
fn small_named_graphs() {
    let k5 = bound_chi(&Graph::complete(5), &PipelineConfig::default()).unwrap();
    assert_eq!((k5.colors_used, k5.bound), (5, 5));

    let two_k4 = Graph::disjoint_union(&[&Graph::complete(4), &Graph::complete(4)]);
    let r = bound_chi(&two_k4, &PipelineConfig::default()).unwrap();
    assert_eq!((r.colors_used, r.bound), (4, 4));
    assert!(matches!(r.branch_trace[0], BranchStep::Brooks { .. }));

    let c5 = bound_chi(&Graph::cycle(5), &PipelineConfig::default()).unwrap();
    assert_eq!((c5.colors_used, c5.bound, c5.passes), (3, 3, true));
}
