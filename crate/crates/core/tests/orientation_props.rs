mod common;

use kclique::generate;
use kclique::graph::DirectedGraph;
use kclique::oracle;
use kclique::orientation::{self, OrientConfig, Strategy};
use kclique::par;

fn gp_round_bound(n: usize, eps: f64) -> usize {
    if n <= 1 {
        return 1;
    }
    ((n as f64).ln() / ((2.0 + eps) / 2.0).ln()).ceil() as usize + 1
}

#[test]
fn rankings_are_bijections() {
    for g in common::gnp_family(40, 0, 40, &[0.1, 0.3, 0.7], 11) {
        for s in Strategy::ALL {
            let r = orientation::rank(&g, &OrientConfig::new(s)).unwrap();
            let mut seen = vec![false; g.n()];
            for v in 0..g.n() as u32 {
                let x = r.rank(v) as usize;
                assert!(!seen[x], "rank {x} used twice by {s}");
                seen[x] = true;
            }
        }
    }
}

#[test]
fn goodrich_pszona_bounds_against_exact_arboricity() {
    for g in common::gnp_family(60, 2, 16, &[0.2, 0.4, 0.6, 0.9], 21) {
        let alpha = oracle::exact_arboricity(&g).unwrap() as usize;
        for eps in [0.5, 1.0, 2.0] {
            let order = orientation::goodrich_pszona_order(&g, eps).unwrap();
            let rounds = order.rounds();
            let dg = DirectedGraph::from_ranking(&g, order.ranking).unwrap();
            let bound = ((2.0 + eps) * alpha as f64).floor() as usize;
            assert!(
                dg.max_out_degree() <= bound.max(alpha),
                "out-degree {} above {bound} (eps {eps}, alpha {alpha})",
                dg.max_out_degree()
            );
            assert!(rounds <= gp_round_bound(g.n(), eps));
        }
    }
}

#[test]
fn barenboim_elkin_with_exact_arboricity() {
    for g in common::gnp_family(60, 2, 16, &[0.2, 0.5, 0.8], 22) {
        let alpha = oracle::exact_arboricity(&g).unwrap();
        if alpha == 0 {
            continue;
        }
        let order = orientation::barenboim_elkin_order(&g, 1.0, alpha).unwrap();
        let dg = DirectedGraph::from_ranking(&g, order.ranking).unwrap();
        assert!(dg.max_out_degree() <= 3 * alpha as usize);
    }
}

#[test]
fn kcore_out_degree_is_the_degeneracy() {
    let mut graphs = common::gnp_family(50, 1, 40, &[0.1, 0.3, 0.6], 23);
    graphs.push(generate::complete(9));
    graphs.push(generate::star(12));
    graphs.push(generate::cycle(10));
    for g in graphs {
        let dg = DirectedGraph::from_ranking(&g, orientation::rank_by_kcore(&g)).unwrap();
        assert_eq!(dg.max_out_degree(), common::reference_degeneracy(&g));
    }
}

#[test]
fn arboricity_estimate_is_bracketed() {
    let eps = 1.0;
    for g in common::gnp_family(60, 2, 16, &[0.2, 0.5, 0.8], 24) {
        if g.m() == 0 {
            continue;
        }
        let alpha = oracle::exact_arboricity(&g).unwrap();
        let (e, v) = oracle::max_edge_density(&g).unwrap();
        let est = orientation::estimate_arboricity(&g, eps).unwrap();
        let lower = (e as f64 / v as f64 / (2.0 * (1.0 + eps))).ceil() as u32;
        assert!(est >= lower, "estimate {est} below {lower}");
        assert!(
            est <= alpha.max(1),
            "estimate {est} above arboricity {alpha}"
        );
    }
}

#[test]
fn rankings_do_not_depend_on_thread_count() {
    for g in common::gnp_family(15, 10, 60, &[0.1, 0.4], 25) {
        for s in Strategy::ALL {
            let cfg = OrientConfig::new(s);
            let base = par::install(1, || orientation::rank(&g, &cfg).unwrap());
            for t in common::THREADS {
                assert_eq!(
                    par::install(t, || orientation::rank(&g, &cfg).unwrap()),
                    base
                );
            }
        }
    }
}

#[test]
fn star_and_tree_orientations() {
    let g = generate::star(9);
    let order = orientation::goodrich_pszona_order(&g, 1.0).unwrap();
    let dg = DirectedGraph::from_ranking(&g, order.ranking).unwrap();
    assert_eq!(dg.max_out_degree(), 1);

    let t = generate::random_tree(200, 8);
    for s in Strategy::ALL {
        if s == Strategy::Original {
            continue;
        }
        let dg = orientation::orient(&t, &OrientConfig::new(s)).unwrap();
        assert!(
            dg.max_out_degree() <= 3,
            "{s} gives {}",
            dg.max_out_degree()
        );
    }
}
