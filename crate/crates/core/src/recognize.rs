//! Harary–Ross conditions characterizing squares of non-star trees, read
//! with "clique" meaning inclusion-maximal clique.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{is_complete, is_connected, maximal_clique_masks, mask_bits, mask_to_vertices, Graph};
use crate::matching::max_bipartite_matching;

/// Verdict on one condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub label: char,
    pub holds: bool,
    pub detail: String,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.holds { "holds" } else { "fails" };
        write!(f, "({}) {verdict}: {}", self.label, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HararyRossReport {
    pub cliques: Vec<Vec<usize>>,
    pub multicliqual: Vec<usize>,
    /// Conditions (a) through (e).
    pub conditions: Vec<Condition>,
    /// Condition (b) under the weaker reading where the third clique meets
    /// the union of the first two in exactly two vertices. Squares of
    /// paths on five or more vertices already fail it, so it is reported
    /// but never used.
    pub b_union_reading: bool,
}

impl HararyRossReport {
    pub fn accepted(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }
}

fn cond(label: char, holds: bool, detail: String) -> Condition {
    Condition { label, holds, detail }
}

/// Evaluates the five conditions on a non-complete graph.
pub fn harary_ross_check(g: &Graph) -> Result<HararyRossReport> {
    if is_complete(g) {
        return Err(Error::CompleteGraph);
    }
    g.ensure_mask("Harary-Ross check")?;
    let cliques = maximal_clique_masks(g);
    let k = cliques.len();
    let n = g.n();
    let containing: Vec<usize> = (0..n)
        .map(|a| cliques.iter().filter(|&&c| c >> a & 1 == 1).count())
        .collect();
    let multi: u64 = (0..n).filter(|&a| containing[a] > 1).fold(0, |m, a| m | 1 << a);
    let meet = |i: usize, j: usize| (cliques[i] & cliques[j]).count_ones();

    // (a): every edge lies in a maximal clique, so only connectivity is left.
    let connected = is_connected(g);
    let a = cond(
        'a',
        connected,
        if connected {
            "connected; every vertex is neighbourly".into()
        } else {
            "graph is disconnected".into()
        },
    );

    // (b)
    let mut b_fail = None;
    let mut union_ok = true;
    for i in 0..k {
        for j in i + 1..k {
            let shared = cliques[i] & cliques[j];
            if shared.count_ones() != 1 {
                continue;
            }
            let each = (0..k).any(|t| {
                t != i
                    && t != j
                    && cliques[t] & shared != 0
                    && meet(t, i) == 2
                    && meet(t, j) == 2
            });
            let union = (0..k).any(|t| {
                t != i
                    && t != j
                    && cliques[t] & shared != 0
                    && (cliques[t] & (cliques[i] | cliques[j])).count_ones() == 2
            });
            union_ok &= union;
            if !each && b_fail.is_none() {
                b_fail = Some((i, j, shared.trailing_zeros() as usize + 1));
            }
        }
    }
    let b = match b_fail {
        None => cond('b', true, "every one-vertex meeting has a third clique".into()),
        Some((i, j, x)) => cond(
            'b',
            false,
            format!(
                "cliques {:?} and {:?} meet only at {x} with no third clique",
                mask_to_vertices(cliques[i]),
                mask_to_vertices(cliques[j])
            ),
        ),
    };

    // (c): match each multicliqual x to a clique containing x holding exactly
    // as many multicliqual vertices as there are cliques through x.
    let mverts: Vec<usize> = mask_bits(multi).collect();
    let adj: Vec<u64> = mverts
        .iter()
        .map(|&x| {
            (0..k)
                .filter(|&t| {
                    cliques[t] >> x & 1 == 1
                        && (cliques[t] & multi).count_ones() as usize == containing[x]
                })
                .fold(0u64, |m, t| m | 1 << t)
        })
        .collect();
    let c = if k > 64 {
        cond('c', false, format!("{k} cliques exceed the matching cap"))
    } else {
        let (size, _) = max_bipartite_matching(&adj);
        let holds = mverts.len() == k && size == k;
        cond(
            'c',
            holds,
            format!("{} multicliqual vertices, {k} cliques, matching of size {size}", mverts.len()),
        )
    };

    // (d), (e)
    let mut worst = 0;
    let mut two = 0;
    for i in 0..k {
        for j in i + 1..k {
            let s = meet(i, j);
            worst = worst.max(s);
            two += usize::from(s == 2);
        }
    }
    let d = cond('d', worst <= 2, format!("largest pairwise intersection {worst}"));
    let e = cond(
        'e',
        two + 1 == k,
        format!("{two} pairs meet in two vertices, {k} cliques"),
    );

    Ok(HararyRossReport {
        cliques: cliques.iter().map(|&c| mask_to_vertices(c)).collect(),
        multicliqual: mverts.iter().map(|&a| a + 1).collect(),
        conditions: vec![a, b, c, d, e],
        b_union_reading: union_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::square;

    #[test]
    fn path_square() {
        let r = harary_ross_check(&square(&Graph::path(4))).unwrap();
        assert!(r.accepted());
        // cliques are the closed neighbourhoods of the two cut points
        assert_eq!(r.cliques, vec![vec![1, 2, 3], vec![2, 3, 4]]);
        assert_eq!(r.multicliqual, vec![2, 3]);
    }

    #[test]
    fn union_reading_of_condition_b_rejects_tree_squares() {
        // N[2] and N[4] meet only at 3; N[3] meets their union in {2, 3, 4}.
        let r = harary_ross_check(&square(&Graph::path(5))).unwrap();
        assert!(r.accepted());
        assert!(!r.b_union_reading);
    }

    #[test]
    fn rejects() {
        let r = harary_ross_check(&Graph::cycle(6)).unwrap();
        assert!(!r.accepted());
        assert_eq!(harary_ross_check(&Graph::complete(4)), Err(Error::CompleteGraph));
        let forest = Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert!(!harary_ross_check(&forest).unwrap().conditions[0].holds);
    }

    #[test]
    fn accepts_squares_of_small_trees() {
        for n in 4..=9 {
            for t in crate::enumerate::enumerate_trees(n).unwrap() {
                let sq = square(t.graph());
                if is_complete(&sq) {
                    continue;
                }
                let r = harary_ross_check(&sq).unwrap();
                assert!(r.accepted(), "{}: {:?}", t.code(), r.conditions);
            }
        }
    }
}
