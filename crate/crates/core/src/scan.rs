//! Exhaustive comparison of `reg` and `projdim` for `S/I(T)` and
//! `S/I(T^2)` over small trees. Both graphs are chordal, so
//! `reg = indmat` and `projdim = d'`.

use std::fmt::Write as _;

use crate::enumerate::enumerate_trees;
use crate::error::{Error, Result};
use crate::graph::square;
use crate::invariants::{d_prime, induced_matching_number};

pub const SCAN_MAX: usize = 11;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub n: usize,
    pub code: String,
    pub reg_t: usize,
    pub reg_t2: usize,
    pub pd_t: usize,
    pub pd_t2: usize,
    pub depth_t: usize,
    pub depth_t2: usize,
    pub reg_increases: bool,
    pub pd_nondecreasing: bool,
}

pub const SCAN_CSV_HEADER: &str = "n,code,reg_T,reg_T2,pd_T,pd_T2,depth_T,depth_T2,\
reg_increases,pd_nondecreasing_within_scanned_range";

impl ScanRow {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.code,
            self.reg_t,
            self.reg_t2,
            self.pd_t,
            self.pd_t2,
            self.depth_t,
            self.depth_t2,
            self.reg_increases,
            self.pd_nondecreasing
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanSummary {
    pub n_max: usize,
    pub trees: usize,
    /// Codes of trees with `reg(T^2) > reg(T)`.
    pub reg_increases: Vec<String>,
    /// Codes of trees with `projdim(T) > projdim(T^2)`.
    pub pd_violations: Vec<String>,
}

impl ScanSummary {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "trees scanned (2 <= n <= {}): {}", self.n_max, self.trees);
        let _ = writeln!(
            out,
            "reg increases from T to T^2 within scanned range: {}",
            self.reg_increases.len()
        );
        for code in &self.reg_increases {
            let _ = writeln!(out, "  {code}");
        }
        let _ = writeln!(
            out,
            "projdim monotonicity violations within scanned range: {}",
            self.pd_violations.len()
        );
        for code in &self.pd_violations {
            let _ = writeln!(out, "  {code}");
        }
        out
    }
}

/// Scans every tree with `2 <= n <= n_max`; rows are sorted by `n`, then
/// code.
pub fn scan_conjectures(n_max: usize) -> Result<(Vec<ScanRow>, ScanSummary)> {
    if n_max > SCAN_MAX {
        return Err(Error::cap("scan tree size", n_max, SCAN_MAX));
    }
    if n_max < 2 {
        return Err(Error::InvalidParameters(format!("scan needs n_max >= 2, got {n_max}")));
    }
    let mut rows = Vec::new();
    for n in 2..=n_max {
        for t in enumerate_trees(n)? {
            let g = t.graph();
            let sq = square(g);
            let (reg_t, _) = induced_matching_number(g)?;
            let (reg_t2, _) = induced_matching_number(&sq)?;
            let (pd_t, _) = d_prime(g)?;
            let (pd_t2, _) = d_prime(&sq)?;
            rows.push(ScanRow {
                n,
                code: t.code().to_string(),
                reg_t,
                reg_t2,
                pd_t,
                pd_t2,
                depth_t: n - pd_t,
                depth_t2: n - pd_t2,
                reg_increases: reg_t2 > reg_t,
                pd_nondecreasing: pd_t <= pd_t2,
            });
        }
    }
    let summary = ScanSummary {
        n_max,
        trees: rows.len(),
        reg_increases: rows.iter().filter(|r| r.reg_increases).map(|r| r.code.clone()).collect(),
        pd_violations: rows
            .iter()
            .filter(|r| !r.pd_nondecreasing)
            .map(|r| r.code.clone())
            .collect(),
    };
    Ok((rows, summary))
}

pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from(SCAN_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::tree_code;
    use crate::graph::Graph;

    #[test]
    fn example_tree_raises_regularity() {
        let (rows, summary) = scan_conjectures(6).unwrap();
        let ex = Graph::from_edges(6, [(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)]).unwrap();
        let code = tree_code(&ex).unwrap();
        let row = rows.iter().find(|r| r.code == code).unwrap();
        assert_eq!((row.reg_t, row.reg_t2), (1, 2));
        assert!(summary.reg_increases.contains(&code));
        assert_eq!(summary.reg_increases.len(), 1);
    }

    #[test]
    fn small_scans() {
        let (_, summary) = scan_conjectures(5).unwrap();
        assert!(summary.reg_increases.is_empty());
        assert!(summary.pd_violations.is_empty());
        assert!(scan_conjectures(12).is_err());
        assert!(scan_conjectures(1).is_err());
    }

    #[test]
    fn path_depths() {
        let (rows, _) = scan_conjectures(9).unwrap();
        for n in 2..=9 {
            let code = tree_code(&Graph::path(n)).unwrap();
            let row = rows.iter().find(|r| r.code == code).unwrap();
            assert_eq!(row.depth_t, n.div_ceil(3));
            if n >= 3 {
                assert_eq!(row.depth_t2, n.div_ceil(5));
            }
            assert!(row.pd_nondecreasing);
        }
    }
}
