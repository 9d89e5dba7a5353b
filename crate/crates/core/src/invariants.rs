//! Exact combinatorial invariants of graphs and the invariant report for
//! chordal graphs, where projective dimension and regularity of `S/I(G)`
//! reduce to bouquet packings and induced matchings.

use std::fmt;

use crate::chordality::is_chordal;
use crate::error::{Error, Result};
use crate::graph::{is_connected, mask_bits, mask_to_vertices, Graph};
use crate::matching::max_bipartite_matching;

pub const INDMAT_CAP: usize = 40;
pub const BOUQUET_CAP: usize = 24;
pub const BIGHT_CAP: usize = 24;

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Maximum independent set (the Krull dimension of `S/I(G)`) with a witness.
pub fn max_independent_set(g: &Graph) -> Result<(usize, Vec<usize>)> {
    g.ensure_mask("maximum independent set")?;
    let mut best = 0u64;
    mis_branch(g, full_mask(g.n()), 0, &mut best);
    Ok((best.count_ones() as usize, mask_to_vertices(best)))
}

fn mis_branch(g: &Graph, cand: u64, cur: u64, best: &mut u64) {
    if cur.count_ones() + cand.count_ones() <= best.count_ones() {
        return;
    }
    if cand == 0 {
        *best = cur;
        return;
    }
    let degree = |v: usize| (g.mask(v) & cand).count_ones();
    let low = mask_bits(cand).min_by_key(|&v| degree(v)).expect("cand nonempty");
    if degree(low) <= 1 {
        // A vertex of degree <= 1 lies in some maximum independent set.
        mis_branch(g, cand & !(g.mask(low) | 1 << low), cur | 1 << low, best);
        return;
    }
    let v = mask_bits(cand).max_by_key(|&v| degree(v)).expect("cand nonempty");
    mis_branch(g, cand & !(g.mask(v) | 1 << v), cur | 1 << v, best);
    mis_branch(g, cand & !(1 << v), cur, best);
}

/// Largest induced matching, with its edges as a witness.
pub fn induced_matching_number(g: &Graph) -> Result<(usize, Vec<(usize, usize)>)> {
    if g.n() > INDMAT_CAP {
        return Err(Error::cap("induced matching search", g.n(), INDMAT_CAP));
    }
    let mut best = Vec::new();
    let mut cur = Vec::new();
    im_branch(g, full_mask(g.n()), &mut cur, &mut best);
    let witness = best.iter().map(|&(a, b)| (a + 1, b + 1)).collect();
    Ok((best.len(), witness))
}

fn im_branch(g: &Graph, cand: u64, cur: &mut Vec<(usize, usize)>, best: &mut Vec<(usize, usize)>) {
    if cand == 0 {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        return;
    }
    if cur.len() + cand.count_ones() as usize / 2 <= best.len() {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    let closed_v = g.mask(v) | 1 << v;
    for u in mask_bits(g.mask(v) & cand) {
        cur.push((v, u));
        im_branch(g, cand & !(closed_v | g.mask(u) | 1 << u), cur, best);
        cur.pop();
    }
    im_branch(g, cand & !(1 << v), cur, best);
}

/// A semi-strongly disjoint set of bouquets: roots pairwise non-adjacent,
/// each root with a nonempty set of adjacent flowers, all vertex sets
/// pairwise disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BouquetSet {
    pub roots: Vec<usize>,
    /// `flowers[i]` belongs to `roots[i]`.
    pub flowers: Vec<Vec<usize>>,
}

impl BouquetSet {
    pub fn flower_count(&self) -> usize {
        self.flowers.iter().map(Vec::len).sum()
    }

    /// Checks every defining condition against `g`; returns the first
    /// violation found.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        if self.roots.len() != self.flowers.len() {
            return Err("roots and flower lists differ in length".into());
        }
        let mut used = vec![false; g.n() + 1];
        for (&r, fl) in self.roots.iter().zip(&self.flowers) {
            if fl.is_empty() {
                return Err(format!("root {r} has no flowers"));
            }
            for &f in fl {
                if !g.has_edge(r, f) {
                    return Err(format!("flower {f} is not adjacent to root {r}"));
                }
            }
            for &v in std::iter::once(&r).chain(fl) {
                if v == 0 || v > g.n() || std::mem::replace(&mut used[v], true) {
                    return Err(format!("vertex {v} appears in two bouquets"));
                }
            }
        }
        for (i, &r) in self.roots.iter().enumerate() {
            if let Some(&s) = self.roots[i + 1..].iter().find(|&&s| g.has_edge(r, s)) {
                return Err(format!("roots {r} and {s} are adjacent"));
            }
        }
        Ok(())
    }
}

struct BouquetSearch<'a> {
    g: &'a Graph,
    n: usize,
    best: usize,
    best_roots: Option<u64>,
}

impl BouquetSearch<'_> {
    fn neighborhood(&self, set: u64) -> u64 {
        mask_bits(set).fold(0, |acc, v| acc | self.g.mask(v))
    }

    fn feasible(&self, roots: u64, pool: u64) -> bool {
        let adj: Vec<u64> = mask_bits(roots).map(|r| self.g.mask(r) & pool).collect();
        max_bipartite_matching(&adj).0 == adj.len()
    }

    fn consider(&mut self, roots: u64) {
        let pool = self.neighborhood(roots) & !roots;
        let score = pool.count_ones() as usize;
        let better = match self.best_roots {
            None => true,
            Some(prev) => {
                score > self.best
                    || (score == self.best && mask_to_vertices(roots) < mask_to_vertices(prev))
            }
        };
        if better && (roots == 0 || self.feasible(roots, pool)) {
            self.best = score;
            self.best_roots = Some(roots);
        }
    }

    /// Visits independent root sets that extend `roots` using vertices
    /// `>= next`.
    fn walk(&mut self, roots: u64, blocked: u64, next: usize) {
        self.consider(roots);
        let cand = full_mask(self.n) & !blocked & !((1u64 << next) - 1);
        if cand == 0 {
            return;
        }
        let bound = ((self.neighborhood(roots) | self.neighborhood(cand)) & !roots).count_ones();
        if (bound as usize) < self.best {
            return;
        }
        for v in mask_bits(cand) {
            self.walk(roots | 1 << v, blocked | self.g.mask(v) | 1 << v, v + 1);
        }
    }
}

/// `d'_G`: the largest total flower count over semi-strongly disjoint
/// bouquet sets. Searches independent root sets `R`; `R` is usable iff
/// each root can be given a distinct private neighbor outside `R`, and then
/// every vertex of `N(R) \ R` can be a flower.
pub fn d_prime(g: &Graph) -> Result<(usize, BouquetSet)> {
    if g.n() > BOUQUET_CAP {
        return Err(Error::cap("bouquet search", g.n(), BOUQUET_CAP));
    }
    let mut search = BouquetSearch {
        g,
        n: g.n(),
        best: 0,
        best_roots: None,
    };
    search.walk(0, 0, 0);
    let roots = search.best_roots.unwrap_or(0);
    Ok((search.best, assemble_bouquets(g, roots)))
}

fn assemble_bouquets(g: &Graph, roots: u64) -> BouquetSet {
    let root_list: Vec<usize> = mask_bits(roots).collect();
    let pool = root_list.iter().fold(0u64, |acc, &r| acc | g.mask(r)) & !roots;
    let adj: Vec<u64> = root_list.iter().map(|&r| g.mask(r) & pool).collect();
    let (_, partner) = max_bipartite_matching(&adj);
    let mut flowers: Vec<Vec<usize>> = partner
        .iter()
        .map(|p| vec![p.expect("root set is feasible")])
        .collect();
    let matched: u64 = partner.iter().flatten().fold(0, |acc, &f| acc | 1 << f);
    for f in mask_bits(pool & !matched) {
        let idx = root_list
            .iter()
            .position(|&r| g.mask(r) >> f & 1 == 1)
            .expect("pool vertex has a root neighbor");
        flowers[idx].push(f);
    }
    BouquetSet {
        roots: root_list.iter().map(|&r| r + 1).collect(),
        flowers: flowers
            .into_iter()
            .map(|mut fl| {
                fl.sort_unstable();
                fl.into_iter().map(|f| f + 1).collect()
            })
            .collect(),
    }
}

/// Big height of `I(G)`: the largest minimal vertex cover, i.e. `n` minus
/// the smallest maximal independent set.
pub fn bight(g: &Graph) -> Result<usize> {
    if g.n() > BIGHT_CAP {
        return Err(Error::cap("big height search", g.n(), BIGHT_CAP));
    }
    let comp = crate::graph::complement(g);
    let smallest = crate::graph::maximal_clique_masks(&comp)
        .into_iter()
        .map(u64::count_ones)
        .min()
        .unwrap_or(0) as usize;
    Ok(g.n() - smallest)
}

/// Where a reported value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Closed-form family formula.
    Formula,
    /// Exact combinatorial search.
    Search,
    /// Hochster's formula over the rationals.
    Oracle,
    /// Derived from other fields through a structure theorem.
    Theorem,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Formula => "formula",
            Provenance::Search => "search",
            Provenance::Oracle => "oracle",
            Provenance::Theorem => "theorem",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sourced {
    pub value: usize,
    pub source: Provenance,
}

impl Sourced {
    pub fn new(value: usize, source: Provenance) -> Self {
        Sourced { value, source }
    }
}

/// Invariants of `S/I(G)`. `projdim_si` and `reg` are for `S/I`, so
/// `depth + projdim_si = n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub dim: Sourced,
    pub depth: Sourced,
    pub projdim_si: Sourced,
    pub reg: Sourced,
    pub bight: Sourced,
    pub indmat: Sourced,
    pub d_prime: Sourced,
    pub linear_resolution: bool,
}

pub const REPORT_CSV_HEADER: &str = "n,m,dim,depth,pd,reg,bight,indmat,dprime,linres,\
prov_dim,prov_depth,prov_pd,prov_reg,prov_bight,prov_indmat,prov_dprime";

impl InvariantReport {
    fn fields(&self) -> [Sourced; 7] {
        [
            self.dim,
            self.depth,
            self.projdim_si,
            self.reg,
            self.bight,
            self.indmat,
            self.d_prime,
        ]
    }

    pub fn csv_row(&self) -> String {
        let f = self.fields();
        let values: Vec<String> = f.iter().map(|s| s.value.to_string()).collect();
        let sources: Vec<String> = f.iter().map(|s| s.source.to_string()).collect();
        format!(
            "{},{},{},{},{}",
            self.n,
            self.m,
            values.join(","),
            self.linear_resolution,
            sources.join(",")
        )
    }
}

/// Invariant report for a connected chordal graph with at least one edge:
/// projdim from `d'`, regularity from the induced matching number.
pub fn chordal_report(g: &Graph) -> Result<InvariantReport> {
    if !is_chordal(g) {
        return Err(Error::NotChordal);
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    if g.edge_count() == 0 {
        return Err(Error::ZeroIdeal);
    }
    use Provenance::*;
    let (dim, _) = max_independent_set(g)?;
    let (indmat, _) = induced_matching_number(g)?;
    let (dp, _) = d_prime(g)?;
    let bight = bight(g)?;
    Ok(InvariantReport {
        n: g.n(),
        m: g.edge_count(),
        dim: Sourced::new(dim, Search),
        depth: Sourced::new(g.n() - dp, Theorem),
        projdim_si: Sourced::new(dp, Theorem),
        reg: Sourced::new(indmat, Theorem),
        bight: Sourced::new(bight, Search),
        indmat: Sourced::new(indmat, Search),
        d_prime: Sourced::new(dp, Search),
        linear_resolution: indmat == 1,
    })
}

/// Invariant report with depth, projdim and regularity read off the
/// Hochster Betti table. Works for any graph with `n <= 12` and an edge.
pub fn oracle_report(g: &Graph) -> Result<InvariantReport> {
    if g.edge_count() == 0 {
        return Err(Error::ZeroIdeal);
    }
    use Provenance::*;
    let table = crate::homology::hochster_betti(g)?;
    let (reg, pd, depth) = crate::homology::reg_pd_depth(&table, g.n());
    let (dim, _) = max_independent_set(g)?;
    let (indmat, _) = induced_matching_number(g)?;
    let (dp, _) = d_prime(g)?;
    Ok(InvariantReport {
        n: g.n(),
        m: g.edge_count(),
        dim: Sourced::new(dim, Search),
        depth: Sourced::new(depth, Oracle),
        projdim_si: Sourced::new(pd, Oracle),
        reg: Sourced::new(reg, Oracle),
        bight: Sourced::new(bight(g)?, Search),
        indmat: Sourced::new(indmat, Search),
        d_prime: Sourced::new(dp, Search),
        linear_resolution: reg == 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::square;
    use rand::{Rng, SeedableRng};

    fn ceil_div(a: usize, b: usize) -> usize {
        a.div_ceil(b)
    }

    fn example_tree() -> Graph {
        Graph::from_edges(6, [(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)]).unwrap()
    }

    fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    fn brute_mis(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&s| {
                (0..n).all(|a| s >> a & 1 == 0 || (0..n).all(|b| s >> b & 1 == 0 || !g.adjacent0(a, b)))
            })
            .map(u32::count_ones)
            .max()
            .unwrap() as usize
    }

    fn brute_indmat(g: &Graph) -> usize {
        let edges = g.edges();
        let m = edges.len();
        (0u32..1 << m)
            .filter(|&s| {
                let chosen: Vec<(usize, usize)> =
                    (0..m).filter(|i| s >> i & 1 == 1).map(|i| edges[i]).collect();
                chosen.iter().enumerate().all(|(i, &(a, b))| {
                    chosen[i + 1..].iter().all(|&(c, d)| {
                        a != c && a != d && b != c && b != d
                            && !g.has_edge(a, c)
                            && !g.has_edge(a, d)
                            && !g.has_edge(b, c)
                            && !g.has_edge(b, d)
                    })
                })
            })
            .map(u32::count_ones)
            .max()
            .unwrap() as usize
    }

    /// Definitional `d'`: pick independent roots, then give every other
    /// vertex either no role or one adjacent root as its bouquet.
    fn brute_d_prime(g: &Graph) -> usize {
        let n = g.n();
        let mut best = 0;
        for roots in 1u32..1 << n {
            let rs: Vec<usize> = (0..n).filter(|b| roots >> b & 1 == 1).collect();
            if rs.iter().any(|&a| rs.iter().any(|&b| g.adjacent0(a, b))) {
                continue;
            }
            let others: Vec<usize> = (0..n).filter(|b| roots >> b & 1 == 0).collect();
            let mut choice = vec![0usize; others.len()];
            loop {
                let mut per_root = vec![0usize; rs.len()];
                let mut ok = true;
                for (k, &v) in others.iter().enumerate() {
                    if choice[k] > 0 {
                        let r = rs[choice[k] - 1];
                        if !g.adjacent0(r, v) {
                            ok = false;
                            break;
                        }
                        per_root[choice[k] - 1] += 1;
                    }
                }
                if ok && per_root.iter().all(|&c| c > 0) {
                    best = best.max(per_root.iter().sum());
                }
                let mut k = 0;
                while k < choice.len() && choice[k] == rs.len() {
                    choice[k] = 0;
                    k += 1;
                }
                if k == choice.len() {
                    break;
                }
                choice[k] += 1;
            }
        }
        best
    }

    fn brute_bight(g: &Graph) -> usize {
        let n = g.n();
        let independent =
            |s: u32| (0..n).all(|a| s >> a & 1 == 0 || (0..n).all(|b| s >> b & 1 == 0 || !g.adjacent0(a, b)));
        let smallest_maximal = (0u32..1 << n)
            .filter(|&s| independent(s) && (0..n).all(|v| s >> v & 1 == 1 || !independent(s | 1 << v)))
            .map(u32::count_ones)
            .min()
            .unwrap() as usize;
        n - smallest_maximal
    }

    #[test]
    fn independent_set_examples() {
        assert_eq!(max_independent_set(&square(&Graph::path(9))).unwrap().0, 3);
        assert_eq!(max_independent_set(&Graph::complete(7)).unwrap().0, 1);
        assert!(max_independent_set(&Graph::path(65)).is_err());
    }

    #[test]
    fn induced_matching_examples() {
        assert_eq!(induced_matching_number(&square(&Graph::path(9))).unwrap().0, 2);
        assert_eq!(induced_matching_number(&Graph::complete(6)).unwrap().0, 1);
        let (k, w) = induced_matching_number(&square(&example_tree())).unwrap();
        assert_eq!(k, 2);
        assert_eq!(w, vec![(1, 2), (5, 6)]);
        assert_eq!(brute_indmat(&square(&example_tree())), 2);
        assert!(induced_matching_number(&Graph::path(41)).is_err());
    }

    #[test]
    fn d_prime_examples() {
        let (d, w) = d_prime(&square(&Graph::path(10))).unwrap();
        assert_eq!(d, 8);
        assert_eq!(w.flower_count(), 8);
        w.validate(&square(&Graph::path(10))).unwrap();
        for n in 2..8 {
            let (d, w) = d_prime(&Graph::complete(n)).unwrap();
            assert_eq!(d, n - 1);
            assert_eq!(w.roots.len(), 1);
        }
        // Double star with n1 = n2 = 3: root x gets every other vertex.
        let ds = Graph::from_edges(6, [(1, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        assert_eq!(d_prime(&square(&ds)).unwrap().0, 5);
        assert!(d_prime(&Graph::path(25)).is_err());
        assert_eq!(d_prime(&Graph::edgeless(3).unwrap()).unwrap(), (0, BouquetSet::default()));
    }

    #[test]
    fn bight_examples() {
        assert_eq!(bight(&square(&Graph::path(10))).unwrap(), 8);
        assert_eq!(bight(&Graph::complete(5)).unwrap(), 4);
        let two = Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(bight(&two).unwrap(), 2);
    }

    #[test]
    fn path_square_closed_forms() {
        for n in 3..=15 {
            let sq = square(&Graph::path(n));
            assert_eq!(max_independent_set(&sq).unwrap().0, ceil_div(n, 3));
            assert_eq!(induced_matching_number(&sq).unwrap().0, ceil_div(n - 1, 4));
            assert_eq!(d_prime(&sq).unwrap().0, n - ceil_div(n, 5));
            assert_eq!(bight(&sq).unwrap(), n - ceil_div(n, 5));
        }
    }

    #[test]
    fn searches_match_brute_force() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..150 {
            let n = rng.gen_range(2..=7);
            let p = rng.gen_range(0.2..0.8);
            let g = random_graph(&mut rng, n, p);
            let (mis, w) = max_independent_set(&g).unwrap();
            assert_eq!(mis, brute_mis(&g));
            assert!(w.iter().all(|&a| w.iter().all(|&b| !g.has_edge(a, b))));
            if g.edge_count() <= 12 {
                let (im, w) = induced_matching_number(&g).unwrap();
                assert_eq!(im, brute_indmat(&g), "{g:?}");
                assert_eq!(w.len(), im);
            }
            let (dp, bouquets) = d_prime(&g).unwrap();
            assert_eq!(dp, brute_d_prime(&g), "{g:?}");
            assert_eq!(bouquets.flower_count(), dp);
            bouquets.validate(&g).unwrap();
            assert_eq!(bight(&g).unwrap(), brute_bight(&g));
        }
    }

    #[test]
    fn d_prime_witness_is_locally_maximal() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let n = rng.gen_range(3..=12);
            let g = random_graph(&mut rng, n, 0.35);
            let (dp, w) = d_prime(&g).unwrap();
            w.validate(&g).unwrap();
            for skip in 0..w.roots.len() {
                let rest: Vec<usize> = w
                    .roots
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &r)| r)
                    .collect();
                let reach: std::collections::BTreeSet<usize> = rest
                    .iter()
                    .flat_map(|&r| g.neighbors(r))
                    .filter(|v| !rest.contains(v))
                    .collect();
                assert!(reach.len() <= dp);
            }
        }
    }

    #[test]
    fn chordal_report_examples() {
        let r = chordal_report(&square(&Graph::path(7))).unwrap();
        assert_eq!(
            (r.dim.value, r.depth.value, r.projdim_si.value, r.reg.value),
            (3, 2, 5, 2)
        );
        let r = chordal_report(&Graph::complete(3)).unwrap();
        assert_eq!(
            (r.dim.value, r.reg.value, r.projdim_si.value, r.depth.value),
            (1, 1, 2, 1)
        );
        assert!(r.linear_resolution);
        let r = chordal_report(&square(&example_tree())).unwrap();
        assert_eq!(r.reg.value, 2);
        assert!(!r.linear_resolution);
        assert_eq!(chordal_report(&Graph::cycle(5)), Err(Error::NotChordal));
        let forest = Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(chordal_report(&forest), Err(Error::Disconnected));
    }

    #[test]
    fn report_csv() {
        let r = chordal_report(&square(&Graph::path(9))).unwrap();
        assert_eq!(
            r.csv_row(),
            "9,15,3,2,7,2,7,2,7,false,search,theorem,theorem,theorem,search,search,search"
        );
        assert_eq!(REPORT_CSV_HEADER.split(',').count(), r.csv_row().split(',').count());
    }

    #[test]
    fn cochordal_tree_square_complements_have_indmat_one() {
        let whiskered = Graph::from_edges(6, [(1, 2), (1, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
        let family = [
            Graph::star(5),
            whiskered,
            Graph::path(2),
            Graph::path(3),
            Graph::path(4),
            Graph::path(5),
        ];
        for t in family {
            let c = crate::graph::complement(&square(&t));
            if c.edge_count() > 0 {
                assert_eq!(induced_matching_number(&c).unwrap().0, 1, "{t:?}");
            }
        }
    }
}
