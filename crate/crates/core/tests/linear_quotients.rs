//! Linear quotients against co-chordality, exhaustively on small graphs.

use sqtree::chordality::is_cochordal;
use sqtree::enumerate::{enumerate_connected_graphs, enumerate_graphs};
use sqtree::homology::hochster_betti;
use sqtree::ideal::{
    betti_from_lq, edge_ideal, greedy_linear_quotients, search_linear_quotients, GreedyOutcome,
};

#[test]
fn search_succeeds_exactly_on_cochordal_graphs() {
    let mut stalls = Vec::new();
    let mut with_lq = 0;
    for n in 2..=7 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let ideal = edge_ideal(&g).unwrap();
            let cert = search_linear_quotients(&ideal).unwrap();
            assert_eq!(cert.is_some(), is_cochordal(&g), "edges {:?}", g.edges());
            if let Some(cert) = cert {
                with_lq += 1;
                assert_eq!(cert.r()[0], 0);
                assert!(cert.r().iter().all(|&r| r <= n - 2));
                let lq = betti_from_lq(&cert);
                assert_eq!(lq.betti[0] as usize, ideal.len());
                if let GreedyOutcome::Stalled { placed } = greedy_linear_quotients(&ideal).unwrap() {
                    stalls.push((g.edges(), placed));
                }
            }
        }
    }
    println!("connected graphs with linear quotients: {with_lq}");
    println!("greedy extension stalled on {} of them", stalls.len());
    for (edges, placed) in stalls.iter().take(5) {
        println!("  stalled after {placed}: {edges:?}");
    }
}

#[test]
fn lq_betti_numbers_match_the_oracle() {
    let mut compared = 0;
    for n in 2..=7 {
        for g in enumerate_graphs(n).unwrap() {
            if g.edge_count() == 0 || g.edge_count() > 12 || !is_cochordal(&g) {
                continue;
            }
            let cert = search_linear_quotients(&edge_ideal(&g).unwrap()).unwrap().unwrap();
            let lq = betti_from_lq(&cert);
            let totals = hochster_betti(&g).unwrap().totals();
            assert_eq!(lq.betti, totals[1..], "edges {:?}", g.edges());
            compared += 1;
        }
    }
    assert!(compared > 100);
}
