//! Square of a tree as an edge list and as DOT.

use sqtree::graph::{distances, square, Graph};
use sqtree::io::{to_dot, write_edge_list};

fn main() {
    let t = Graph::from_edges(6, [(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)]).unwrap();
    let sq = square(&t);
    println!("diam(T) = {:?}", distances(&t).diameter());
    print!("{}", write_edge_list(&sq));
    print!("{}", to_dot(&sq, "T2"));
}
