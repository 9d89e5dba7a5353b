//! Harary-Ross conditions on a tree square and on a cycle.

use sqtree::graph::{square, Graph};
use sqtree::recognize::harary_ross_check;

fn main() {
    for (name, g) in [("L_6^2", square(&Graph::path(6))), ("C_6", Graph::cycle(6))] {
        let report = harary_ross_check(&g).unwrap();
        println!("{name}: cliques {:?}", report.cliques);
        for c in &report.conditions {
            println!("  {c}");
        }
        println!("  accepted: {}", report.accepted());
    }
}
