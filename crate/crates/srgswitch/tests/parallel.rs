use srgswitch::parallel::ParallelScanner;
use srgswitch_core::graphs::{lattice4, shrikhande, sp};
use srgswitch_core::search::{search_increase, search_increase_with, Enumeration, Scanner, SequentialScanner};
use srgswitch_core::product::named_graph;
use srgswitch_core::SearchConfig;

#[test]
fn parallel_scan_matches_sequential_order() {
    for g in [sp(2).unwrap(), lattice4(), shrikhande(), named_graph("clebsch").unwrap()] {
        let r = g.rank2();
        let seq = SequentialScanner.scan(&g, 4, r);
        for threads in [1, 3, 8] {
            assert_eq!(ParallelScanner::new(Some(threads)).scan(&g, 4, r), seq);
        }
    }
}

#[test]
fn thread_cap() {
    assert_eq!(ParallelScanner::new(Some(2)).threads(), 2);
    assert_eq!(ParallelScanner::new(Some(0)).threads(), 1);
}

#[test]
fn parallel_search_is_identical() {
    let g = sp(3).unwrap();
    for enumeration in [Enumeration::Exhaustive, Enumeration::Random] {
        let cfg = SearchConfig {
            max_rank: Some(10),
            rng_seed: 3,
            enumeration,
            ..SearchConfig::default()
        };
        let a = search_increase(&g, &cfg).unwrap();
        let b = search_increase_with(&g, &cfg, &ParallelScanner::new(Some(4))).unwrap();
        assert_eq!(a.path, b.path);
        assert_eq!(a.final_graph, b.final_graph);
    }
}
