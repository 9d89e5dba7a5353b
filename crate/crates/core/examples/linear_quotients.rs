//! Revlex linear quotients for a whiskered star square and the Betti
//! numbers they give.

use sqtree::classify::whiskered_star;
use sqtree::graph::square;
use sqtree::ideal::{betti_from_lq, edge_ideal, revlex_order, verify_linear_quotients, VariableOrder};

fn main() {
    let (n, m) = (3, 2);
    let ideal = edge_ideal(&square(&whiskered_star(n, m).unwrap())).unwrap();
    let order = revlex_order(&ideal, &VariableOrder::natural(n + m + 1)).unwrap();
    let cert = verify_linear_quotients(&ideal, &order).expect("revlex gives linear quotients");
    print!("{}", cert.to_text());
    let lq = betti_from_lq(&cert);
    println!("beta(I) = {:?}, projdim(I) = {}", lq.betti, lq.projdim);
}
