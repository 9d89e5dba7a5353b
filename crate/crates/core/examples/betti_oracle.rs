//! Graded Betti tables from Hochster's formula.

use sqtree::graph::{square, Graph};
use sqtree::homology::{hochster_betti, independence_complex, reduced_homology_ranks};

fn main() {
    let c4 = Graph::cycle(4);
    let ind = independence_complex(&c4).unwrap();
    println!("Ind(C_4) homology from dim -1: {:?}", reduced_homology_ranks(&ind).unwrap());
    for (name, g) in [("C_4", c4), ("L_7^2", square(&Graph::path(7)))] {
        let table = hochster_betti(&g).unwrap();
        println!("{name}: reg {}, projdim {}, depth {}", table.reg(), table.projdim(), table.depth());
        print!("{}", table.to_macaulay());
    }
}
