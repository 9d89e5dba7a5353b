//! Regularity and projective dimension of T versus T^2 for small trees.

use sqtree::scan::scan_conjectures;

fn main() {
    let (rows, summary) = scan_conjectures(9).unwrap();
    print!("{}", summary.to_text());
    let worst = rows.iter().max_by_key(|r| r.reg_t2 as isize - r.reg_t as isize).unwrap();
    println!("largest regularity jump: {} ({} -> {})", worst.code, worst.reg_t, worst.reg_t2);
}
