//! Chordal and co-chordal recognition, gap detection, and the combinatorial
//! linear-resolution test for edge ideals.

use crate::error::{Error, Result};
use crate::graph::{complement, Graph};

/// A vertex ordering, 1-indexed. Orders returned by
/// [`perfect_elimination_order`] have already passed [`Self::is_perfect_for`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder {
    order: Vec<usize>,
}

impl EliminationOrder {
    pub fn new(order: Vec<usize>) -> Option<EliminationOrder> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return None;
            }
        }
        Some(EliminationOrder { order })
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    /// True iff every vertex's neighbors that come later in the order are
    /// pairwise adjacent.
    pub fn is_perfect_for(&self, g: &Graph) -> bool {
        if self.order.len() != g.n() {
            return false;
        }
        let mut position = vec![0; g.n()];
        for (i, &v) in self.order.iter().enumerate() {
            position[v - 1] = i;
        }
        for (i, &v) in self.order.iter().enumerate() {
            let later: Vec<usize> = g
                .neighbors0(v - 1)
                .filter(|&b| position[b] > i)
                .collect();
            for (k, &a) in later.iter().enumerate() {
                if later[k + 1..].iter().any(|&b| !g.adjacent0(a, b)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Maximum cardinality search; the reverse of the visit order is a perfect
/// elimination order whenever the graph is chordal.
fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let a = (0..n)
            .filter(|&a| !visited[a])
            .max_by_key(|&a| (weight[a], std::cmp::Reverse(a)))
            .expect("unvisited vertex remains");
        visited[a] = true;
        visit.push(a + 1);
        for b in g.neighbors0(a) {
            if !visited[b] {
                weight[b] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

/// A verified perfect elimination order, or `None` when `g` is not chordal.
pub fn perfect_elimination_order(g: &Graph) -> Option<EliminationOrder> {
    let order = EliminationOrder::new(maximum_cardinality_search(g))?;
    order.is_perfect_for(g).then_some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}

pub fn is_cochordal(g: &Graph) -> bool {
    is_chordal(&complement(g))
}

/// Two vertex-disjoint edges with no edges between their endpoints.
pub type Gap = ((usize, usize), (usize, usize));

/// The lexicographically smallest gap (induced `2K_2`), if any.
pub fn find_gap(g: &Graph) -> Option<Gap> {
    let edges = g.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if !(g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d)) {
                return Some(((a, b), (c, d)));
            }
        }
    }
    None
}

pub fn is_gap_free(g: &Graph) -> bool {
    find_gap(g).is_none()
}

/// Whether `I(g)` has a linear resolution, decided by co-chordality.
pub fn has_linear_resolution(g: &Graph) -> Result<bool> {
    if g.edge_count() == 0 {
        return Err(Error::ZeroIdeal);
    }
    Ok(is_cochordal(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::square;

    fn example_tree() -> Graph {
        Graph::from_edges(6, [(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)]).unwrap()
    }

    /// Definitional check: some vertex subset of size >= 4 induces a cycle.
    fn has_long_induced_cycle(g: &Graph) -> bool {
        let n = g.n();
        (0u32..1 << n).filter(|s| s.count_ones() >= 4).any(|s| {
            let vs: Vec<usize> = (0..n).filter(|b| s >> b & 1 == 1).map(|b| b + 1).collect();
            let (h, _) = crate::graph::induced_subgraph(g, &vs).unwrap();
            crate::graph::is_connected(&h) && h.vertices().all(|v| h.degree(v) == 2)
        })
    }

    fn random_graph(n: usize, seed: u64, p: f64) -> Graph {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
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

    #[test]
    fn trees_and_cycles() {
        assert!(perfect_elimination_order(&Graph::path(7)).is_some());
        assert!(perfect_elimination_order(&example_tree()).is_some());
        assert!(perfect_elimination_order(&Graph::cycle(4)).is_none());
        assert!(perfect_elimination_order(&square(&Graph::path(9))).is_some());
        assert!(perfect_elimination_order(&square(&example_tree())).is_some());
    }

    #[test]
    fn cochordal_examples() {
        let c4 = Graph::cycle(4);
        assert!(!is_chordal(&c4));
        assert!(is_cochordal(&c4));
        let sq = square(&example_tree());
        assert!(is_chordal(&sq));
        assert!(!is_cochordal(&sq));
        assert!(is_cochordal(&square(&Graph::path(5))));
    }

    #[test]
    fn gaps() {
        assert_eq!(find_gap(&square(&example_tree())), Some(((1, 2), (5, 6))));
        assert_eq!(find_gap(&Graph::complete(6)), None);
        let two = Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(find_gap(&two), Some(((1, 2), (3, 4))));
    }

    #[test]
    fn linear_resolution_examples() {
        // Whiskered star: center 1, spokes 2, 3, 4, whiskers on 2 and 3.
        let t = Graph::from_edges(6, [(1, 2), (1, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
        assert_eq!(has_linear_resolution(&square(&t)), Ok(true));
        assert_eq!(has_linear_resolution(&square(&Graph::path(6))), Ok(false));
        assert_eq!(has_linear_resolution(&square(&example_tree())), Ok(false));
        assert_eq!(
            has_linear_resolution(&Graph::edgeless(3).unwrap()),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn order_validation() {
        assert!(EliminationOrder::new(vec![1, 1]).is_none());
        assert!(EliminationOrder::new(vec![2, 3]).is_none());
        let c4 = Graph::cycle(4);
        let order = EliminationOrder::new(vec![1, 2, 3, 4]).unwrap();
        assert!(!order.is_perfect_for(&c4));
    }

    #[test]
    fn chordality_matches_brute_force() {
        for seed in 0..300 {
            let n = 4 + (seed as usize % 5);
            let g = random_graph(n, seed, 0.25 + 0.5 * (seed % 3) as f64 / 3.0);
            assert_eq!(is_chordal(&g), !has_long_induced_cycle(&g), "{g:?}");
            if g.edge_count() > 0 && has_linear_resolution(&g).unwrap() {
                assert!(is_gap_free(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn linear_resolution_of_tree_squares_forces_small_diameter() {
        use crate::graph::distances;
        use crate::enumerate::enumerate_trees;
        for n in 3..=10 {
            for t in enumerate_trees(n).unwrap() {
                let t = t.graph();
                let sq = square(t);
                if !is_cochordal(&sq) {
                    continue;
                }
                let diam = distances(t).diameter().unwrap();
                assert!(diam <= 4);
                if diam == 3 {
                    let big = t.vertices().filter(|&v| t.degree(v) >= 3).count();
                    assert!(big <= 1, "{t:?}");
                }
            }
        }
    }
}
