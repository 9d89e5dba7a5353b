//! The Hochster oracle against the chordal-graph shortcuts and the general
//! regularity bounds.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sqtree::chordality::is_chordal;
use sqtree::enumerate::enumerate_connected_graphs;
use sqtree::graph::{induced_subgraph, Graph};
use sqtree::homology::hochster_betti;
use sqtree::invariants::{chordal_report, d_prime, induced_matching_number, oracle_report};

/// Random connected chordal graph: each new vertex joins a random clique
/// inside the neighbourhood of an earlier vertex.
#[allow(clippy::needless_range_loop)]
fn random_chordal(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut adj = vec![vec![false; n]; n];
    for v in 1..n {
        let anchor = rng.gen_range(0..v);
        let mut clique = vec![anchor];
        for u in 0..v {
            if u != anchor && clique.iter().all(|&w| adj[u][w]) && rng.gen_bool(0.5) {
                clique.push(u);
            }
        }
        for &u in &clique {
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<_> = edges.filter(|&(u, v)| adj[u][v]).map(|(u, v)| (u + 1, v + 1)).collect();
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn chordal_shortcuts_match_the_oracle() {
    let check = |g: &Graph| {
        let table = hochster_betti(g).unwrap();
        assert_eq!(table.reg(), induced_matching_number(g).unwrap().0, "edges {:?}", g.edges());
        assert_eq!(table.projdim(), d_prime(g).unwrap().0, "edges {:?}", g.edges());
        let fast = chordal_report(g).unwrap();
        let slow = oracle_report(g).unwrap();
        assert_eq!(fast.reg.value, slow.reg.value);
        assert_eq!(fast.depth.value, slow.depth.value);
        // Big height equals projdim for chordal graphs.
        assert_eq!(fast.bight.value, fast.projdim_si.value);
    };
    for n in 2..=7 {
        for g in enumerate_connected_graphs(n).unwrap() {
            if is_chordal(&g) {
                check(&g);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..60 {
        let n = rng.gen_range(8..=9);
        let g = random_chordal(&mut rng, n);
        assert!(is_chordal(&g));
        check(&g);
    }
}

#[test]
fn regularity_bounds_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..80 {
        let n = rng.gen_range(2..=8);
        let p = rng.gen_range(0.2..0.7);
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        let reg = hochster_betti(&g).unwrap().reg();
        assert!(reg >= induced_matching_number(&g).unwrap().0);
        let w: Vec<usize> = g.vertices().filter(|_| rng.gen_bool(0.5)).collect();
        let (h, _) = induced_subgraph(&g, &w).unwrap();
        assert!(hochster_betti(&h).unwrap().reg() <= reg);
    }
}

#[test]
fn report_invariants() {
    let g = Graph::cycle(5);
    let r = oracle_report(&g).unwrap();
    assert_eq!(r.depth.value + r.projdim_si.value, r.n);
    assert!(r.reg.value >= r.indmat.value);
    assert!(chordal_report(&g).is_err());
}
