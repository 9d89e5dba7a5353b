//! Counts of trees and small graphs up to isomorphism.

use sqtree::enumerate::{enumerate_connected_graphs, enumerate_graphs, enumerate_trees};

fn main() {
    for n in 2..=12 {
        println!("trees on {n:>2} vertices: {}", enumerate_trees(n).unwrap().len());
    }
    for n in 1..=7 {
        println!(
            "graphs on {n} vertices: {} ({} connected)",
            enumerate_graphs(n).unwrap().len(),
            enumerate_connected_graphs(n).unwrap().len()
        );
    }
}
