//! Graded Betti tables of `S/I(G)` from Hochster's formula:
//!
//! ```text
//! beta_{i,j}(S/I(G)) = sum over |W| = j of dim H~_{j-i-1}(Ind(G_W); Q)
//! ```
//!
//! Reduced homology is computed from boundary-matrix ranks with
//! fraction-free (Bareiss) elimination. The elimination runs in checked
//! `i128` and restarts over big integers if an entry would overflow.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{mask_bits, Graph};

pub const COMPLEX_VERTEX_CAP: usize = 16;
pub const FACE_CAP: usize = 1 << 16;
pub const HOCHSTER_CAP: usize = 12;

/// A simplicial complex on vertices `1..=nvertices`, faces grouped by
/// dimension. `faces[0]` holds the empty face (dimension -1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    nvertices: usize,
    faces: Vec<Vec<u32>>,
}

impl SimplicialComplex {
    /// Builds the complex from a downward-closed family of faces given as
    /// 0-indexed vertex masks. Panics if the family is not closed.
    fn from_masks(nvertices: usize, mut masks: Vec<u32>) -> SimplicialComplex {
        masks.sort_unstable_by_key(|&m| (m.count_ones(), m));
        masks.dedup();
        let top = masks.last().map_or(0, |m| m.count_ones() as usize);
        let mut faces = vec![Vec::new(); top + 1];
        for m in masks {
            faces[m.count_ones() as usize].push(m);
        }
        let c = SimplicialComplex { nvertices, faces };
        debug_assert!(c.is_closed());
        c
    }

    /// Builds a complex from explicit 1-indexed faces, adding all subsets.
    pub fn from_facets(nvertices: usize, facets: &[Vec<usize>]) -> Result<SimplicialComplex> {
        if nvertices > COMPLEX_VERTEX_CAP {
            return Err(Error::cap("complex vertices", nvertices, COMPLEX_VERTEX_CAP));
        }
        let mut masks = vec![0u32];
        for facet in facets {
            let mut m = 0u32;
            for &v in facet {
                if v == 0 || v > nvertices {
                    return Err(Error::VertexOutOfRange { vertex: v, n: nvertices });
                }
                m |= 1 << (v - 1);
            }
            // all submasks of m
            let mut s = m;
            loop {
                masks.push(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & m;
            }
            if masks.len() > 4 * FACE_CAP {
                masks.sort_unstable();
                masks.dedup();
                if masks.len() > FACE_CAP {
                    return Err(Error::cap("complex faces", masks.len(), FACE_CAP));
                }
            }
        }
        masks.sort_unstable();
        masks.dedup();
        if masks.len() > FACE_CAP {
            return Err(Error::cap("complex faces", masks.len(), FACE_CAP));
        }
        Ok(SimplicialComplex::from_masks(nvertices, masks))
    }

    fn is_closed(&self) -> bool {
        let all: std::collections::HashSet<u32> = self.faces.iter().flatten().copied().collect();
        all.iter()
            .all(|&f| mask_bits(u64::from(f)).all(|b| all.contains(&(f & !(1 << b)))))
    }

    pub fn nvertices(&self) -> usize {
        self.nvertices
    }

    /// Largest face dimension (`-1` for the complex `{∅}`).
    pub fn dimension(&self) -> isize {
        self.faces.len() as isize - 2
    }

    /// Faces of dimension `d >= -1`, as sorted 1-indexed vertex lists.
    pub fn faces(&self, d: isize) -> Vec<Vec<usize>> {
        let idx = (d + 1) as usize;
        self.faces.get(idx).map_or_else(Vec::new, |fs| {
            fs.iter()
                .map(|&m| mask_bits(u64::from(m)).map(|b| b + 1).collect())
                .collect()
        })
    }

    /// Face counts `f_{-1}, f_0, f_1, ...`.
    pub fn face_counts(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn face_total(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Reduced Euler characteristic `sum_{d >= -1} (-1)^d f_d`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        alternating_sum(&self.face_counts())
    }
}

/// `sum_k (-1)^(k-1) xs[k]`, for sequences indexed from dimension -1.
pub fn alternating_sum(xs: &[usize]) -> i64 {
    xs.iter()
        .enumerate()
        .map(|(k, &x)| if k % 2 == 0 { -(x as i64) } else { x as i64 })
        .sum()
}

fn independent_masks(g: &Graph, within: u64) -> Vec<u32> {
    fn grow(g: &Graph, face: u64, cand: u64, out: &mut Vec<u32>) {
        out.push(face as u32);
        for v in mask_bits(cand) {
            let later = cand & !((2u64 << v) - 1);
            grow(g, face | 1 << v, later & !g.mask(v), out);
        }
    }
    let mut out = Vec::new();
    grow(g, 0, within, &mut out);
    out
}

/// Independence complex: faces are the independent sets of `g`.
pub fn independence_complex(g: &Graph) -> Result<SimplicialComplex> {
    if g.n() > COMPLEX_VERTEX_CAP {
        return Err(Error::cap("independence complex vertices", g.n(), COMPLEX_VERTEX_CAP));
    }
    let all = (1u64 << g.n()) - 1;
    Ok(SimplicialComplex::from_masks(g.n(), independent_masks(g, all)))
}

/// Boundary matrix `C_d -> C_{d-1}` for `d >= 1` in face-index coordinates.
fn boundary_matrix(c: &SimplicialComplex, d: usize) -> Vec<Vec<i128>> {
    // faces[d + 1] are d-faces; faces[d] are (d-1)-faces.
    let rows: HashMap<u32, usize> = c.faces[d].iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut mat = vec![vec![0i128; c.faces[d + 1].len()]; c.faces[d].len()];
    for (col, &face) in c.faces[d + 1].iter().enumerate() {
        for (k, b) in mask_bits(u64::from(face)).enumerate() {
            let row = rows[&(face & !(1 << b))];
            mat[row][col] = if k % 2 == 0 { 1 } else { -1 };
        }
    }
    mat
}

#[allow(clippy::needless_range_loop)]
fn bareiss_rank_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col];
        for r in rank + 1..rows {
            let factor = a[r][col];
            for j in col + 1..cols {
                let lhs = a[r][j].checked_mul(pivot)?;
                let rhs = factor.checked_mul(a[rank][j])?;
                a[r][j] = lhs.checked_sub(rhs)? / prev;
            }
            a[r][col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

#[allow(clippy::needless_range_loop)]
fn bareiss_rank_big(a: &[Vec<i128>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let zero = BigInt::from(0);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| a[r][col] != zero) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for r in rank + 1..rows {
            let factor = a[r][col].clone();
            for j in col + 1..cols {
                a[r][j] = (&a[r][j] * &pivot - &factor * &a[rank][j]) / &prev;
            }
            a[r][col] = zero.clone();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Exact rank over the rationals.
pub(crate) fn exact_rank(a: Vec<Vec<i128>>) -> usize {
    match bareiss_rank_i128(a.clone()) {
        Some(r) => r,
        None => bareiss_rank_big(&a),
    }
}

/// Ranks of reduced homology `H~_d(c; Q)` for `d = -1, 0, ..., dim c`
/// (index 0 is dimension -1).
pub fn reduced_homology_ranks(c: &SimplicialComplex) -> Result<Vec<usize>> {
    let total = c.face_total();
    if total > FACE_CAP {
        return Err(Error::cap("complex faces", total, FACE_CAP));
    }
    assert!(!c.faces.is_empty() && c.faces[0] == [0], "void complex");
    let levels = c.faces.len();
    // rank of the boundary leaving level k (faces[k] -> faces[k - 1])
    let mut boundary_rank = vec![0usize; levels + 1];
    if levels > 1 {
        boundary_rank[1] = usize::from(!c.faces[1].is_empty());
    }
    for (k, rank) in boundary_rank.iter_mut().enumerate().take(levels).skip(2) {
        *rank = exact_rank(boundary_matrix(c, k - 1));
    }
    Ok((0..levels)
        .map(|k| c.faces[k].len() - boundary_rank[k] - boundary_rank[k + 1])
        .collect())
}

/// Graded Betti numbers `beta_{i,j}` of `S/I(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    nvars: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), beta_{i,j})` in ascending order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn projdim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn reg(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    pub fn depth(&self) -> usize {
        self.nvars - self.projdim()
    }

    /// Total Betti numbers `beta_i(S/I)` for `i = 0..=projdim`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = vec![0; self.projdim() + 1];
        for (&(i, _), &b) in &self.entries {
            out[i] += b;
        }
        out
    }

    /// Plain-text table in the Macaulay2 layout: one column per homological
    /// degree `i`, one row per `j - i`, zeros shown as `.`.
    pub fn to_macaulay(&self) -> String {
        let pd = self.projdim();
        let reg = self.reg();
        let mut grid: Vec<Vec<String>> = Vec::new();
        let mut labels = vec![String::new(), "total:".to_string()];
        grid.push((0..=pd).map(|i| i.to_string()).collect());
        grid.push(self.totals().iter().map(u64::to_string).collect());
        for row in 0..=reg {
            labels.push(format!("{row}:"));
            grid.push(
                (0..=pd)
                    .map(|i| match self.get(i, i + row) {
                        0 => ".".to_string(),
                        b => b.to_string(),
                    })
                    .collect(),
            );
        }
        let label_w = labels.iter().map(String::len).max().unwrap_or(0);
        let widths: Vec<usize> = (0..=pd)
            .map(|c| grid.iter().map(|r| r[c].len()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for (label, row) in labels.iter().zip(&grid) {
            let _ = write!(out, "{label:>label_w$}");
            for (cell, w) in row.iter().zip(&widths) {
                let _ = write!(out, " {cell:>w$}");
            }
            out.push('\n');
        }
        out
    }
}

/// `(reg, projdim, depth)` of `S/I` read off its Betti table.
pub fn reg_pd_depth(table: &BettiTable, nvars: usize) -> (usize, usize, usize) {
    let pd = table.projdim();
    (table.reg(), pd, nvars - pd)
}

/// Betti table of `S/I(G)` by Hochster's formula, for `n <= 12`.
pub fn hochster_betti(g: &Graph) -> Result<BettiTable> {
    if g.n() > HOCHSTER_CAP {
        return Err(Error::cap("Hochster oracle vertices", g.n(), HOCHSTER_CAP));
    }
    let n = g.n();
    let mut subsets: Vec<u64> = (0..1u64 << n).collect();
    subsets.sort_by_key(|&w| (w.count_ones(), w));
    let mut entries = BTreeMap::new();
    for w in subsets {
        let j = w.count_ones() as usize;
        // An isolated vertex of G_W makes Ind(G_W) a cone, hence acyclic.
        if w != 0 && mask_bits(w).any(|v| g.mask(v) & w == 0) {
            continue;
        }
        let complex = SimplicialComplex::from_masks(n, independent_masks(g, w));
        for (k, h) in reduced_homology_ranks(&complex)?.into_iter().enumerate() {
            if h == 0 {
                continue;
            }
            // homology in dimension d = k - 1 lands in i = j - d - 1 = j - k
            *entries.entry((j - k, j)).or_insert(0) += h as u64;
        }
    }
    Ok(BettiTable { nvars: n, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::square;

    #[test]
    fn independence_complex_examples() {
        let c = independence_complex(&Graph::complete(3)).unwrap();
        assert_eq!(c.faces(-1), vec![Vec::<usize>::new()]);
        assert_eq!(c.faces(0), vec![vec![1], vec![2], vec![3]]);
        assert_eq!(c.dimension(), 0);
        let c = independence_complex(&Graph::cycle(4)).unwrap();
        assert_eq!(c.faces(1), vec![vec![1, 3], vec![2, 4]]);
        let c = independence_complex(&Graph::edgeless(3).unwrap()).unwrap();
        assert_eq!(c.face_counts(), vec![1, 3, 3, 1]);
        assert!(independence_complex(&Graph::path(17)).is_err());
    }

    #[test]
    fn homology_examples() {
        let two_edges = SimplicialComplex::from_facets(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(reduced_homology_ranks(&two_edges).unwrap(), vec![0, 1, 0]);
        let hollow =
            SimplicialComplex::from_facets(3, &[vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        assert_eq!(reduced_homology_ranks(&hollow).unwrap(), vec![0, 0, 1]);
        let full = SimplicialComplex::from_facets(4, &[vec![1, 2, 3, 4]]).unwrap();
        assert!(reduced_homology_ranks(&full).unwrap().iter().all(|&h| h == 0));
        let empty = SimplicialComplex::from_facets(3, &[]).unwrap();
        assert_eq!(reduced_homology_ranks(&empty).unwrap(), vec![1]);
        // Octahedron boundary: a 2-sphere.
        let octa = independence_complex(&Graph::from_edges(6, [(1, 2), (3, 4), (5, 6)]).unwrap())
            .unwrap();
        assert_eq!(reduced_homology_ranks(&octa).unwrap(), vec![0, 0, 0, 1]);
    }

    #[test]
    fn bareiss_overflow_falls_back() {
        // Entries near i128 overflow force the big-integer path.
        let big = i128::MAX / 3;
        let m = vec![vec![big, 1, 0], vec![1, big, 1], vec![0, 1, big]];
        assert!(bareiss_rank_i128(m.clone()).is_none());
        assert_eq!(exact_rank(m), 3);
        let dependent = vec![vec![2, 4], vec![3, 6]];
        assert_eq!(exact_rank(dependent), 1);
    }

    #[test]
    fn betti_examples() {
        let t = hochster_betti(&Graph::path(2)).unwrap();
        assert_eq!(t.get(1, 2), 1);
        assert_eq!(reg_pd_depth(&t, 2), (1, 1, 1));
        let t = hochster_betti(&Graph::cycle(4)).unwrap();
        assert_eq!(t.get(3, 4), 1);
        assert_eq!(reg_pd_depth(&t, 4), (1, 3, 1));
        assert_eq!(t.totals(), vec![1, 4, 4, 1]);
        let t = hochster_betti(&square(&Graph::path(7))).unwrap();
        assert_eq!((t.projdim(), t.reg()), (5, 2));
        let t = hochster_betti(&square(&Graph::path(5))).unwrap();
        assert_eq!(t.reg(), 1);
        let t = hochster_betti(&Graph::edgeless(3).unwrap()).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 0), 1)]);
        assert!(hochster_betti(&Graph::path(13)).is_err());
    }

    #[test]
    fn macaulay_layout() {
        let t = hochster_betti(&Graph::cycle(4)).unwrap();
        assert_eq!(
            t.to_macaulay(),
            "       0 1 2 3\ntotal: 1 4 4 1\n    0: 1 . . .\n    1: . 4 4 1\n"
        );
    }

    #[test]
    fn euler_characteristic_matches_homology() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let n = rng.gen_range(1..=9);
            let mut edges = Vec::new();
            for u in 1..=n {
                for v in u + 1..=n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let c = independence_complex(&Graph::from_edges(n, edges).unwrap()).unwrap();
            let h = reduced_homology_ranks(&c).unwrap();
            assert_eq!(c.reduced_euler_characteristic(), alternating_sum(&h));
        }
    }

    #[test]
    fn betti_tables_are_relabeling_invariant() {
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let n = rng.gen_range(2..=8);
            let mut edges = Vec::new();
            for u in 1..=n {
                for v in u + 1..=n {
                    if rng.gen_bool(0.45) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let mut perm: Vec<usize> = (1..=n).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm).unwrap();
            assert_eq!(hochster_betti(&g).unwrap(), hochster_betti(&h).unwrap());
        }
    }
}
