//! Invariant reports for squares of paths.

use sqtree::graph::{square, Graph};
use sqtree::invariants::{chordal_report, d_prime, REPORT_CSV_HEADER};

fn main() {
    println!("{REPORT_CSV_HEADER}");
    for n in 3..=12 {
        let report = chordal_report(&square(&Graph::path(n))).unwrap();
        println!("{}", report.csv_row());
    }
    let (size, bouquets) = d_prime(&square(&Graph::path(10))).unwrap();
    println!("d' of L_10^2 = {size}, roots {:?}, flowers {:?}", bouquets.roots, bouquets.flowers);
}
