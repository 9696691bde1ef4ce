use dagx::generators::{dag_from_mask, dag_count};
use dagx::predicates::{
    enumerate_paths, is_extremely_reduced, is_reduced, is_reduced_bruteforce, is_strongly_reduced,
    is_strongly_reduced_bruteforce, is_transitive, transitive_closure, DEFAULT_ORDER_CAP, DEFAULT_PATH_CAP,
};
use dagx::Dag;
use proptest::prelude::*;

/// Forward-edge DAG from a mask, relabelled by a random permutation so
/// vertex ids no longer agree with a topological order.
fn arb_dag(max_n: usize) -> impl Strategy<Value = Dag> {
    (1..=max_n).prop_flat_map(|n| {
        let perm = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
        (Just(n), 0..dag_count(n), perm).prop_map(|(n, mask, perm)| {
            let base = dag_from_mask(n, mask);
            let edges: Vec<_> = base.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
            Dag::from_edge_list(n, &edges).unwrap()
        })
    })
}

/// Reachability by plain DFS, independent of the bitset rows.
fn dfs_reach(g: &Dag, v: usize) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    let mut stack: Vec<usize> = g.successors(v).collect();
    while let Some(u) = stack.pop() {
        if !seen[u] {
            seen[u] = true;
            stack.extend(g.successors(u));
        }
    }
    seen
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn reachability_matches_dfs_and_is_a_strict_order(g in arb_dag(8)) {
        let reach = g.reachability();
        let n = g.n();
        for v in 0..n {
            let seen = dfs_reach(&g, v);
            prop_assert!(!reach.reaches(v, v));
            for (w, &seen_w) in seen.iter().enumerate() {
                prop_assert_eq!(reach.reaches(v, w), seen_w);
                prop_assert_eq!(reach.reaches(v, w), reach.ancestors(w).contains(v));
                for x in 0..n {
                    if reach.reaches(v, w) && reach.reaches(w, x) {
                        prop_assert!(reach.reaches(v, x));
                    }
                }
            }
        }
    }

    #[test]
    fn topological_order_points_edges_forward(g in arb_dag(9)) {
        let order = g.topological_order();
        prop_assert_eq!(order.len(), g.n());
        for &(u, v) in g.edges() {
            prop_assert!(order.position(u) < order.position(v));
        }
    }

    #[test]
    fn level_partition_invariants(g in arb_dag(9)) {
        let p = g.level_partition();
        let levels = g.levels();
        prop_assert_eq!(p.levels()[0].clone(), g.sources());
        let sinks = g.sinks();
        for v in &p.levels()[p.ell()] {
            prop_assert!(sinks.contains(v));
        }
        prop_assert_eq!(p.levels().iter().map(Vec::len).sum::<usize>(), g.n());
        for &(u, v) in g.edges() {
            prop_assert!(levels[u] < levels[v]);
        }
        for v in 0..g.n() {
            prop_assert_eq!(p.level_of(v), levels[v]);
            if levels[v] > 0 {
                prop_assert!(g.predecessors(v).any(|u| levels[u] + 1 == levels[v]));
            }
        }
        for level in p.levels() {
            for &a in level {
                for &b in level {
                    prop_assert!(!g.has_edge(a, b));
                }
            }
        }
    }

    #[test]
    fn longest_path_matches_path_enumeration(g in arb_dag(6)) {
        let mut best = 0;
        for v in 0..g.n() {
            for w in 0..g.n() {
                for p in enumerate_paths(&g, v, w, DEFAULT_PATH_CAP).unwrap() {
                    best = best.max(p.len());
                }
            }
        }
        prop_assert_eq!(g.longest_path_length(), best);
    }

    #[test]
    fn closure_is_idempotent_and_monotone(g in arb_dag(9)) {
        let c = transitive_closure(&g);
        prop_assert!(is_transitive(&c));
        prop_assert_eq!(transitive_closure(&c), c.clone());
        for &(u, v) in g.edges() {
            prop_assert!(c.has_edge(u, v));
        }
        let reach = g.reachability();
        prop_assert_eq!(c.reachability().matrix(), reach.matrix());
        // Adding one comparable pair to g keeps the closure unchanged.
        if let Some(&(u, v)) = c.edges().iter().find(|e| !g.has_edge(e.0, e.1)) {
            let mut edges = g.edges().to_vec();
            edges.push((u, v));
            let bigger = Dag::from_edge_list(g.n(), &edges).unwrap();
            prop_assert_eq!(transitive_closure(&bigger), c);
        }
    }

    #[test]
    fn implication_chain_and_oracles(g in arb_dag(7)) {
        let ext = is_extremely_reduced(&g);
        let strong = is_strongly_reduced(&g, DEFAULT_PATH_CAP).unwrap();
        let red = is_reduced(&g);
        prop_assert!(!ext || strong);
        prop_assert!(!strong || red);
        prop_assert_eq!(red, is_reduced_bruteforce(&g, DEFAULT_PATH_CAP).unwrap());
        if g.n() <= 6 {
            prop_assert_eq!(strong, is_strongly_reduced_bruteforce(&g, DEFAULT_ORDER_CAP, DEFAULT_PATH_CAP).unwrap());
        }
    }

    #[test]
    fn closure_of_reduced_passes_everything(g in arb_dag(7)) {
        if is_reduced(&g) {
            let c = transitive_closure(&g);
            prop_assert!(is_extremely_reduced(&c));
            prop_assert!(is_strongly_reduced(&c, DEFAULT_PATH_CAP).unwrap());
            prop_assert!(is_reduced(&c));
        }
    }
}

#[test]
fn transitive_dags_collapse_the_three_classes() {
    for n in 1..=5 {
        for mask in 0..dag_count(n) {
            let g = dag_from_mask(n, mask);
            if !is_transitive(&g) {
                continue;
            }
            let ext = is_extremely_reduced(&g);
            assert_eq!(ext, is_strongly_reduced(&g, DEFAULT_PATH_CAP).unwrap(), "{g:?}");
            assert_eq!(ext, is_reduced(&g), "{g:?}");
        }
    }
}
