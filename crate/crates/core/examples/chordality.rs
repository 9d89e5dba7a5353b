//! Elimination orders, gaps and co-chordality.

use sqtree::chordality::{find_gap, is_cochordal, perfect_elimination_order};
use sqtree::graph::{square, Graph};

fn main() {
    for n in 4..=7 {
        let sq = square(&Graph::path(n));
        let peo = perfect_elimination_order(&sq).expect("squares of trees are chordal");
        println!(
            "L_{n}^2: peo {:?}, co-chordal {}, gap {:?}",
            peo.as_slice(),
            is_cochordal(&sq),
            find_gap(&sq)
        );
    }
    println!("C_4 chordal: {}", perfect_elimination_order(&Graph::cycle(4)).is_some());
}
