//! Non-isomorphic trees (AHU codes rooted at the center) and small graphs
//! (canonical adjacency codes under refined vertex permutations).

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::graph::{is_connected, is_tree, mask_bits, Graph};

pub const TREE_MIN: usize = 2;
pub const TREE_MAX: usize = 12;
pub const GRAPH_ENUM_MAX: usize = 7;
pub const GRAPH_CODE_MAX: usize = 11;

/// One representative per isomorphism class of trees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalTree {
    n: usize,
    code: String,
    graph: Graph,
}

impl CanonicalTree {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Parenthesis code; equal codes iff isomorphic trees.
    pub fn code(&self) -> &str {
        &self.code
    }

    /// Representative labeled in preorder of the code, root = vertex 1.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

/// Centers of a tree: one or two vertices (0-indexed) left by repeated leaf
/// removal.
fn centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|a| g.degree(a + 1)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&a| deg[a] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &a in &layer {
            for b in g.neighbors0(a) {
                if deg[b] > 1 {
                    deg[b] -= 1;
                    if deg[b] == 1 {
                        next.push(b);
                    }
                }
            }
            deg[a] = 0;
        }
        layer = next;
    }
    let mut c: Vec<usize> = (0..n).filter(|&a| deg[a] > 0).collect();
    if c.is_empty() {
        c = layer;
    }
    c.sort_unstable();
    c
}

fn rooted_code(g: &Graph, root: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = g
        .neighbors0(root)
        .filter(|&b| Some(b) != parent)
        .map(|b| rooted_code(g, b, Some(root)))
        .collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

/// Canonical code of a tree.
pub fn tree_code(t: &Graph) -> Result<String> {
    if !is_tree(t) {
        return Err(Error::NotTree);
    }
    Ok(centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c, None))
        .min()
        .expect("a tree has a center"))
}

/// Rebuilds the representative tree of a code.
fn tree_from_code(code: &str) -> Graph {
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0;
    for ch in code.chars() {
        if ch == '(' {
            next += 1;
            if let Some(&p) = stack.last() {
                edges.push((p, next));
            }
            stack.push(next);
        } else {
            stack.pop();
        }
    }
    Graph::from_edges(next, edges).expect("well-formed code")
}

/// Canonical form of a tree.
pub fn canonical_tree(t: &Graph) -> Result<CanonicalTree> {
    let code = tree_code(t)?;
    Ok(CanonicalTree {
        n: t.n(),
        graph: tree_from_code(&code),
        code,
    })
}

/// All non-isomorphic trees on `n` vertices, sorted by code.
pub fn enumerate_trees(n: usize) -> Result<Vec<CanonicalTree>> {
    if !(TREE_MIN..=TREE_MAX).contains(&n) {
        return Err(Error::IndexOutOfRange {
            index: n,
            lo: TREE_MIN,
            hi: TREE_MAX,
        });
    }
    let mut codes: BTreeSet<String> = BTreeSet::from(["(())".to_string()]);
    for size in 3..=n {
        let mut grown = BTreeSet::new();
        for code in &codes {
            let t = tree_from_code(code);
            for v in t.vertices() {
                let edges = t.edges().into_iter().chain([(v, size)]);
                let bigger = Graph::from_edges(size, edges)?;
                grown.insert(tree_code(&bigger)?);
            }
        }
        codes = grown;
    }
    Ok(codes
        .into_iter()
        .map(|code| CanonicalTree {
            n,
            graph: tree_from_code(&code),
            code,
        })
        .collect())
}

/// Bit index of the pair `(i, j)`, `i < j`. Pairs are ordered by `j`
/// then `i`, with the earliest pair in the most significant bit, so the
/// bits fixed by the first `k` vertices form a prefix of the code.
fn pair_bit(n: usize, i: usize, j: usize) -> usize {
    n * (n - 1) / 2 - 1 - (j * (j - 1) / 2 + i)
}

/// Canonical adjacency code: the minimum, over vertex orderings compatible
/// with a degree-based refinement, of the upper-triangle bit mask. Two
/// graphs share `(n, code)` iff they are isomorphic.
pub fn canonical_graph_code(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > GRAPH_CODE_MAX {
        return Err(Error::cap("canonical form vertices", n, GRAPH_CODE_MAX));
    }
    // vertex invariant: degree, then sorted neighbor degrees
    let deg: Vec<usize> = (0..n).map(|a| g.degree(a + 1)).collect();
    let mut classes: BTreeMap<(usize, Vec<usize>), Vec<usize>> = BTreeMap::new();
    for a in 0..n {
        let mut nd: Vec<usize> = g.neighbors0(a).map(|b| deg[b]).collect();
        nd.sort_unstable();
        classes.entry((deg[a], nd)).or_default().push(a);
    }
    let blocks: Vec<u64> = classes
        .values()
        .map(|vs| vs.iter().fold(0u64, |m, &a| m | 1 << a))
        .collect();
    let mut slot_block = Vec::with_capacity(n);
    for (b, vs) in classes.values().enumerate() {
        slot_block.extend(std::iter::repeat_n(b, vs.len()));
    }
    let mut best = u64::MAX;
    let mut placed = vec![0usize; n];
    canon_walk(g, &blocks, &slot_block, 0, 0, 0, &mut placed, &mut best);
    Ok(best)
}

#[allow(clippy::too_many_arguments)]
fn canon_walk(
    g: &Graph,
    blocks: &[u64],
    slot_block: &[usize],
    slot: usize,
    used: u64,
    code: u64,
    placed: &mut [usize],
    best: &mut u64,
) {
    let n = slot_block.len();
    if slot == n {
        *best = (*best).min(code);
        return;
    }
    for a in mask_bits(blocks[slot_block[slot]] & !used) {
        let mut c = code;
        for (earlier, &b) in placed[..slot].iter().enumerate() {
            if g.adjacent0(a, b) {
                c |= 1 << pair_bit(n, earlier, slot);
            }
        }
        // the top slot * (slot + 1) / 2 bits are now final
        let total = n * (n - 1) / 2;
        let fixed = slot * (slot + 1) / 2;
        let prefix = if fixed == 0 { 0 } else { !0u64 << (total - fixed) };
        if c & prefix > *best & prefix {
            continue;
        }
        placed[slot] = a;
        canon_walk(g, blocks, slot_block, slot + 1, used | 1 << a, c, placed, best);
    }
}

/// Graph on `n` vertices whose upper triangle is `code`.
pub fn graph_from_code(n: usize, code: u64) -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if code >> pair_bit(n, i, j) & 1 == 1 {
                edges.push((i + 1, j + 1));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// All graphs on `n <= 7` vertices up to isomorphism, as canonical
/// representatives sorted by code.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n > GRAPH_ENUM_MAX {
        return Err(Error::cap("graph enumeration vertices", n, GRAPH_ENUM_MAX));
    }
    let mut reps = vec![Graph::edgeless(1)?];
    for size in 2..=n {
        let mut codes = HashSet::new();
        for g in &reps {
            for nbrs in 0u64..1 << (size - 1) {
                let edges = g
                    .edges()
                    .into_iter()
                    .chain(mask_bits(nbrs).map(|a| (a + 1, size)));
                codes.insert(canonical_graph_code(&Graph::from_edges(size, edges)?)?);
            }
        }
        let mut sorted: Vec<u64> = codes.into_iter().collect();
        sorted.sort_unstable();
        reps = sorted
            .into_iter()
            .map(|c| graph_from_code(size, c))
            .collect::<Result<_>>()?;
    }
    Ok(reps)
}

/// Connected graphs on `n <= 7` vertices up to isomorphism.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_graphs(n)?.into_iter().filter(is_connected).collect())
}
