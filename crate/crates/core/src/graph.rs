//! Simple undirected graphs on vertices `1..=n` and the elementary operations
//! on them: squares, complements, distances, induced subgraphs, cliques.
//!
//! Adjacency is stored as dense bit rows. Vertices are 1-indexed at every
//! public boundary; the bit rows are 0-indexed internally.

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count accepted by [`Graph`] constructors.
pub const MAX_VERTICES: usize = 4096;

/// Largest vertex count for the mask-based searches (cliques and friends).
pub const MASK_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    fn blank(n: usize) -> Graph {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
            m: 0,
        }
    }

    /// Builds a graph from 1-indexed edges. Loops, duplicates and vertices
    /// outside `1..=n` are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(Error::cap("vertex count", n, MAX_VERTICES));
        }
        let mut g = Graph::blank(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.link(u - 1, v - 1);
        }
        Ok(g)
    }

    pub fn edgeless(n: usize) -> Result<Graph> {
        Graph::from_edges(n, [])
    }

    /// Complete graph `K_n`. Panics when `n` is 0 or above [`MAX_VERTICES`].
    pub fn complete(n: usize) -> Graph {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("valid complete graph")
    }

    /// Path `L_n` on `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i, i + 1))).expect("valid path")
    }

    /// Cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_edges(n, (1..=n).map(|i| (i, i % n + 1))).expect("valid cycle")
    }

    /// Star with center 1 and leaves `2..=leaves + 1`.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (2..=leaves + 1).map(|v| (1, v))).expect("valid star")
    }

    #[inline]
    fn link(&mut self, a: usize, b: usize) {
        self.rows[a * self.words + b / 64] |= 1 << (b % 64);
        self.rows[b * self.words + a / 64] |= 1 << (a % 64);
        self.m += 1;
    }

    #[inline]
    pub(crate) fn row(&self, a: usize) -> &[u64] {
        &self.rows[a * self.words..(a + 1) * self.words]
    }

    #[inline]
    pub(crate) fn adjacent0(&self, a: usize, b: usize) -> bool {
        self.rows[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    /// Neighborhood of the 0-indexed vertex `a` as a bit mask. Only valid for
    /// graphs with at most 64 vertices.
    #[inline]
    pub(crate) fn mask(&self, a: usize) -> u64 {
        debug_assert!(self.n <= MASK_VERTICES);
        self.rows[a]
    }

    pub(crate) fn ensure_mask(&self, what: &'static str) -> Result<()> {
        if self.n > MASK_VERTICES {
            Err(Error::cap(what, self.n, MASK_VERTICES))
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    /// Adjacency query; out-of-range vertices are never adjacent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == 0 || v == 0 || u > self.n || v > self.n {
            return false;
        }
        self.adjacent0(u - 1, v - 1)
    }

    pub(crate) fn neighbors0(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(a))
    }

    /// Sorted neighborhood of `v`.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.neighbors0(v - 1).map(|b| b + 1).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v - 1).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for a in 0..self.n {
            for b in self.neighbors0(a).filter(|&b| b > a) {
                out.push((a + 1, b + 1));
            }
        }
        out
    }

    /// Copy of the graph with the extra edge `{u, v}`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut edges = self.edges();
        edges.push((u, v));
        Graph::from_edges(self.n, edges)
    }

    /// Relabels by `perm`, where vertex `v` becomes `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        assert_eq!(perm.len(), self.n, "permutation length");
        Graph::from_edges(
            self.n,
            self.edges().into_iter().map(|(u, v)| (perm[u - 1], perm[v - 1])),
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Iterates the set bit positions of a word slice.
pub(crate) fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

/// Iterates the set bit positions of a single mask.
pub(crate) fn mask_bits(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b)
        }
    })
}

/// Converts a 0-indexed mask to a sorted list of 1-indexed vertices.
pub(crate) fn mask_to_vertices(w: u64) -> Vec<usize> {
    mask_bits(w).map(|b| b + 1).collect()
}

/// Square: same vertices, edges between vertices at distance 1 or 2.
pub fn square(g: &Graph) -> Graph {
    let mut sq = Graph::blank(g.n);
    let words = g.words;
    let mut acc = vec![0u64; words];
    for a in 0..g.n {
        acc.copy_from_slice(g.row(a));
        for b in g.neighbors0(a) {
            for (x, y) in acc.iter_mut().zip(g.row(b)) {
                *x |= y;
            }
        }
        acc[a / 64] &= !(1 << (a % 64));
        sq.rows[a * words..(a + 1) * words].copy_from_slice(&acc);
    }
    sq.m = sq.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2;
    sq
}

pub fn complement(g: &Graph) -> Graph {
    let mut c = Graph::blank(g.n);
    for a in 0..g.n {
        for b in a + 1..g.n {
            if !g.adjacent0(a, b) {
                c.link(a, b);
            }
        }
    }
    c
}

/// Induced subgraph on `w`. The result is relabeled `1..=|w|` in ascending
/// order of the chosen vertices; the returned map sends new labels (index
/// `i` holds new vertex `i + 1`) to the original ones. The empty set yields a
/// graph with zero vertices.
pub fn induced_subgraph(g: &Graph, w: &[usize]) -> Result<(Graph, Vec<usize>)> {
    let mut keep: Vec<usize> = w.to_vec();
    keep.sort_unstable();
    keep.dedup();
    if let Some(&bad) = keep.iter().find(|&&v| v == 0 || v > g.n) {
        return Err(Error::VertexOutOfRange { vertex: bad, n: g.n });
    }
    let mut h = Graph::blank(keep.len());
    for (i, &u) in keep.iter().enumerate() {
        for (j, &v) in keep.iter().enumerate().skip(i + 1) {
            if g.adjacent0(u - 1, v - 1) {
                h.link(i, j);
            }
        }
    }
    Ok((h, keep))
}

/// Hop-count distances; unreachable pairs are `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

const UNREACHABLE: u32 = u32::MAX;

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.d[(u - 1) * self.n + (v - 1)] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Largest distance, or `None` when some pair is unreachable.
    pub fn diameter(&self) -> Option<u32> {
        self.d.iter().try_fold(0, |acc, &d| {
            if d == UNREACHABLE {
                None
            } else {
                Some(acc.max(d))
            }
        })
    }
}

pub fn distances(g: &Graph) -> DistanceMatrix {
    let n = g.n;
    let mut d = vec![UNREACHABLE; n * n];
    let mut queue = Vec::with_capacity(n);
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push(s);
        let mut head = 0;
        while head < queue.len() {
            let a = queue[head];
            head += 1;
            for b in g.neighbors0(a) {
                if row[b] == UNREACHABLE {
                    row[b] = row[a] + 1;
                    queue.push(b);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}

pub(crate) fn component_count(g: &Graph, removed: Option<usize>) -> usize {
    let mut seen = vec![false; g.n];
    if let Some(r) = removed {
        seen[r] = true;
    }
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..g.n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        stack.push(s);
        while let Some(a) = stack.pop() {
            for b in g.neighbors0(a) {
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    count
}

pub fn is_connected(g: &Graph) -> bool {
    component_count(g, None) <= 1
}

pub fn is_tree(g: &Graph) -> bool {
    g.n >= 1 && g.m + 1 == g.n && is_connected(g)
}

pub fn is_complete(g: &Graph) -> bool {
    g.m == g.n * g.n.saturating_sub(1) / 2
}

/// Degree-1 vertices.
pub fn free_vertices(g: &Graph) -> Vec<usize> {
    g.vertices().filter(|&v| g.degree(v) == 1).collect()
}

/// Vertices whose removal increases the number of connected components.
pub fn cut_points(g: &Graph) -> Vec<usize> {
    let base = component_count(g, None);
    g.vertices()
        .filter(|&v| component_count(g, Some(v - 1)) > base)
        .collect()
}

/// All inclusion-maximal cliques, each sorted, the list sorted
/// lexicographically. Requires `n <= 64`.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<Vec<usize>>> {
    g.ensure_mask("maximal clique enumeration")?;
    let all = if g.n == 64 { u64::MAX } else { (1u64 << g.n) - 1 };
    let mut out = Vec::new();
    bron_kerbosch(g, 0, all, 0, &mut out);
    let mut cliques: Vec<Vec<usize>> = out.into_iter().map(mask_to_vertices).collect();
    cliques.sort();
    Ok(cliques)
}

/// Maximal cliques as 0-indexed masks, unsorted.
pub(crate) fn maximal_clique_masks(g: &Graph) -> Vec<u64> {
    let all = if g.n == 64 { u64::MAX } else { (1u64 << g.n) - 1 };
    let mut out = Vec::new();
    bron_kerbosch(g, 0, all, 0, &mut out);
    out
}

fn bron_kerbosch(g: &Graph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 && r != 0 {
            out.push(r);
        }
        return;
    }
    // Pivot on the vertex of P ∪ X with the most neighbors in P.
    let pivot = mask_bits(p | x)
        .max_by_key(|&u| (g.mask(u) & p).count_ones())
        .expect("p is nonempty");
    for v in mask_bits(p & !g.mask(pivot)) {
        let nv = g.mask(v);
        bron_kerbosch(g, r | 1 << v, p & nv, x & nv, out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}
