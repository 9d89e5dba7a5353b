//! The double star on six vertices: I(T) has linear quotients, I(T^2) has
//! a gap and regularity 2.

use sqtree::chordality::find_gap;
use sqtree::graph::{square, Graph};
use sqtree::homology::hochster_betti;
use sqtree::ideal::{edge_ideal, search_linear_quotients};

fn main() {
    let t = Graph::from_edges(6, [(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)]).unwrap();
    let sq = square(&t);
    println!("I(T)   generators {:?}", edge_ideal(&t).unwrap().gens());
    println!("I(T^2) generators {:?}", edge_ideal(&sq).unwrap().gens());
    println!("gap in T^2: {:?}", find_gap(&sq));
    let cert = search_linear_quotients(&edge_ideal(&t).unwrap()).unwrap();
    print!("{}", cert.expect("I(T) has linear quotients").to_text());
    println!("I(T^2) linear quotients: {}", search_linear_quotients(&edge_ideal(&sq).unwrap()).unwrap().is_some());
    print!("{}", hochster_betti(&sq).unwrap().to_macaulay());
}
