//! Closed forms for paths and double brooms next to the searched values.

use sqtree::classify::{double_broom, double_broom_formulas, path_formulas};
use sqtree::graph::{square, Graph};
use sqtree::invariants::chordal_report;

fn main() {
    for n in [3, 5, 9, 15] {
        let f = path_formulas(n).unwrap();
        let r = chordal_report(&square(&Graph::path(n))).unwrap();
        println!(
            "L_{n}: pd {} (search {}), reg {} (search {})",
            f.projdim_si.unwrap().value,
            r.projdim_si.value,
            f.reg.unwrap().value,
            r.reg.value
        );
    }
    for (n1, k, n2) in [(3, 2, 3), (3, 5, 3), (2, 13, 2)] {
        let f = double_broom_formulas(n1, k, n2).unwrap();
        let r = chordal_report(&square(&double_broom(n1 - 1, k, n2 - 1).unwrap())).unwrap();
        println!(
            "{}: pd {} (search {}), depth {} (search {}), dim {:?} (search {})",
            f.family,
            f.projdim_si.unwrap().value,
            r.projdim_si.value,
            f.depth.unwrap().value,
            r.depth.value,
            f.dim.map(|d| d.value),
            r.dim.value
        );
    }
}
