//! Families of all trees on 8 vertices and the linear-resolution verdict.

use sqtree::chordality::is_cochordal;
use sqtree::classify::{classify_tree, linear_resolution_by_classification};
use sqtree::enumerate::enumerate_trees;
use sqtree::graph::square;

fn main() {
    for t in enumerate_trees(8).unwrap() {
        let class = classify_tree(t.graph()).unwrap();
        let linear = linear_resolution_by_classification(t.graph()).unwrap();
        assert_eq!(linear, is_cochordal(&square(t.graph())));
        println!("{:<28} {:<32} {linear}", t.code(), class.to_string());
    }
}
