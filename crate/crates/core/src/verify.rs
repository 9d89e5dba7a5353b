//! The regression suite behind `sqtree verify-paper` and the acceptance
//! test: ten criteria, each checked exactly (tolerance 0).

use std::collections::HashSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chordality::{find_gap, is_cochordal};
use crate::classify::{
    double_broom, double_broom_formulas, linear_resolution_by_classification, path_formulas,
    whiskered_star,
};
use crate::enumerate::{canonical_graph_code, enumerate_connected_graphs, enumerate_trees, tree_code};
use crate::error::Result;
use crate::graph::{cut_points, induced_subgraph, is_complete, square, Graph};
use crate::homology::hochster_betti;
use crate::ideal::{
    betti_from_lq, colon_prefix, edge_ideal, revlex_order, search_linear_quotients,
    verify_linear_quotients, Generator, VariableOrder,
};
use crate::invariants::{bight, d_prime, induced_matching_number, max_independent_set};
use crate::recognize::harary_ross_check;
use crate::scan::scan_conjectures;

pub const CRITERIA: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    /// Checks performed, or the first mismatch.
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} {verdict}: {} ({})", self.id, self.title, self.detail)
    }
}

/// Records checks and keeps the first failure.
struct Tally {
    checks: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checks: 0, failure: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self, id: usize, title: &'static str) -> Outcome {
        match self.failure {
            None => Outcome {
                id,
                title,
                passed: true,
                detail: format!("{} checks", self.checks),
            },
            Some(msg) => Outcome {
                id,
                title,
                passed: false,
                detail: msg,
            },
        }
    }
}

fn example_tree() -> Graph {
    Graph::from_edges(6, [(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)]).expect("fixed tree")
}

pub fn criterion_1() -> Result<Outcome> {
    let mut t = Tally::new();
    for n in 3..=15 {
        let sq = square(&Graph::path(n));
        let f = path_formulas(n)?;
        let want = |o: Option<crate::classify::Formula>| o.map(|x| x.value).unwrap_or(usize::MAX);
        let dim = max_independent_set(&sq)?.0;
        let dp = d_prime(&sq)?.0;
        let im = induced_matching_number(&sq)?.0;
        let bh = bight(&sq)?;
        t.check(dim == want(f.dim), || format!("n={n}: dim {dim}"));
        t.check(dp == want(f.d_prime), || format!("n={n}: d' {dp}"));
        t.check(im == want(f.indmat), || format!("n={n}: indmat {im}"));
        t.check(bh == want(f.bight), || format!("n={n}: bight {bh}"));
        if n <= 9 {
            let table = hochster_betti(&sq)?;
            t.check(table.projdim() == want(f.projdim_si), || {
                format!("n={n}: oracle projdim {}", table.projdim())
            });
            t.check(table.reg() == want(f.reg), || format!("n={n}: oracle reg {}", table.reg()));
        }
    }
    Ok(t.finish(1, "path formulas"))
}

pub fn criterion_2() -> Result<Outcome> {
    let mut t = Tally::new();
    for n in 2..=15 {
        let co = is_cochordal(&square(&Graph::path(n)));
        t.check(co == (n <= 5), || format!("n={n}: co-chordal = {co}"));
    }
    Ok(t.finish(2, "linear-resolution threshold for paths"))
}

pub fn criterion_3() -> Result<Outcome> {
    let mut t = Tally::new();
    for n in 2..=10 {
        for tree in enumerate_trees(n)? {
            let by_class = linear_resolution_by_classification(tree.graph())?;
            let co = is_cochordal(&square(tree.graph()));
            t.check(by_class == co, || format!("{}: classification {by_class}", tree.code()));
        }
    }
    Ok(t.finish(3, "classification of trees with linear resolution"))
}

/// Colon variables of the revlex order on a whiskered star square, by the
/// three-case table. Labels: `x_0 = 1`, `x_i = 1 + i`, `y_j = n + 1 + j`.
fn whiskered_star_colon(n: usize, (p, q): Generator) -> Vec<usize> {
    let x = |i: usize| 1 + i;
    let y = |j: usize| n + 1 + j;
    if q <= n + 1 {
        let (a, b) = (p - 1, q - 1);
        (0..b).filter(|&i| i != a).map(x).collect()
    } else if p == 1 {
        let b = q - n - 1;
        (1..=n).map(x).chain((1..b).map(y)).collect()
    } else {
        let a = p - 1;
        (0..=n).filter(|&i| i != a).map(x).collect()
    }
}

pub fn criterion_4() -> Result<Outcome> {
    let mut t = Tally::new();
    for big_m in 3..=9 {
        for n in 1..big_m {
            let m = big_m - 1 - n;
            if m < 1 || m > n {
                continue;
            }
            let sq = square(&whiskered_star(n, m)?);
            let ideal = edge_ideal(&sq)?;
            let order = revlex_order(&ideal, &VariableOrder::natural(big_m))?;
            let Some(cert) = verify_linear_quotients(&ideal, &order) else {
                t.check(false, || format!("n={n}, m={m}: revlex order has no linear quotients"));
                continue;
            };
            for i in 2..=order.len() {
                let colon = colon_prefix(&ideal, &order, i)?;
                let u = order.as_slice()[i - 1];
                let mut want = whiskered_star_colon(n, u);
                want.sort_unstable();
                t.check(colon.variables() == want, || {
                    format!("n={n}, m={m}, u_{i} = {u:?}: colon {:?}", colon.variables())
                });
            }
            let lq = betti_from_lq(&cert);
            t.check(lq.projdim == big_m - 2, || {
                format!("n={n}, m={m}: projdim(I) = {}", lq.projdim)
            });
            let totals = hochster_betti(&sq)?.totals();
            let shifted: Vec<u64> = totals[1..].to_vec();
            t.check(lq.betti == shifted, || {
                format!("n={n}, m={m}: lq Betti {:?} vs oracle {:?}", lq.betti, shifted)
            });
        }
    }
    Ok(t.finish(4, "whiskered stars"))
}

pub fn criterion_5() -> Result<Outcome> {
    let mut t = Tally::new();
    let tree = example_tree();
    let sq = square(&tree);
    let it = edge_ideal(&tree)?;
    t.check(it.gens() == [(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)], || {
        format!("I(T) generators {:?}", it.gens())
    });
    let listed: [Generator; 11] = [
        (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (1, 2), (1, 4), (2, 4), (5, 6), (3, 5), (3, 6),
    ];
    let mut listed = listed.to_vec();
    listed.sort_unstable();
    let it2 = edge_ideal(&sq)?;
    t.check(it2.gens() == listed.as_slice(), || format!("I(T^2) generators {:?}", it2.gens()));
    let gap = find_gap(&sq);
    t.check(gap == Some(((1, 2), (5, 6))), || format!("gap {gap:?}"));
    t.check(search_linear_quotients(&it)?.is_some(), || "I(T) has no linear quotients".into());
    t.check(search_linear_quotients(&it2)?.is_none(), || "I(T^2) has linear quotients".into());
    let reg = hochster_betti(&sq)?.reg();
    t.check(reg == 2, || format!("oracle reg {reg}"));
    Ok(t.finish(5, "double star example"))
}

pub fn criterion_6() -> Result<Outcome> {
    let mut t = Tally::new();
    for n1 in 2..=4 {
        for n2 in 2..=4 {
            for k in 2..=12 {
                if n1 + n2 + k - 2 > 24 {
                    continue;
                }
                let f = double_broom_formulas(n1, k, n2)?;
                let sq = square(&double_broom(n1 - 1, k, n2 - 1)?);
                let dp = d_prime(&sq)?.0;
                let pd = f.projdim_si.map(|x| x.value);
                let depth = f.depth.map(|x| x.value);
                t.check(Some(dp) == pd, || format!("({n1},{k},{n2}): d' {dp} vs {pd:?}"));
                t.check(Some(f.n - dp) == depth, || {
                    format!("({n1},{k},{n2}): depth {} vs {depth:?}", f.n - dp)
                });
                if let Some(dim) = f.dim {
                    let mis = max_independent_set(&sq)?.0;
                    t.check(mis == dim.value, || {
                        format!("({n1},{k},{n2}): dim {mis} vs {}", dim.value)
                    });
                }
            }
        }
    }
    Ok(t.finish(6, "double brooms"))
}

#[allow(clippy::needless_range_loop)]
pub fn criterion_7() -> Result<Outcome> {
    let mut t = Tally::new();
    let mut square_codes: Vec<HashSet<u64>> = vec![HashSet::new(); 8];
    for n in 2..=9 {
        for tree in enumerate_trees(n)? {
            let g = tree.graph();
            let sq = square(g);
            let star = g.vertices().any(|v| g.degree(v) == n - 1);
            t.check(star == is_complete(&sq), || format!("{}: star/complete mismatch", tree.code()));
            if n >= 3 {
                t.check(cut_points(&sq).is_empty(), || format!("{}: T^2 has cut points", tree.code()));
            }
            if !star && n >= 4 {
                let r = harary_ross_check(&sq)?;
                t.check(r.accepted(), || format!("{}: square rejected", tree.code()));
            }
            if !star && n <= 7 {
                square_codes[n].insert(canonical_graph_code(&sq)?);
            }
        }
    }
    for n in 2..=7 {
        for g in enumerate_connected_graphs(n)? {
            if is_complete(&g) {
                continue;
            }
            let accepted = harary_ross_check(&g)?.accepted();
            let is_square = square_codes[n].contains(&canonical_graph_code(&g)?);
            t.check(accepted == is_square, || {
                format!("n={n}, edges {:?}: accepted {accepted}, tree square {is_square}", g.edges())
            });
        }
    }
    Ok(t.finish(7, "squares of trees"))
}

fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (2..=n).map(|v| (rng.gen_range(1..v), v)).collect();
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    Graph::from_edges(n, edges)
        .and_then(|g| g.relabel(&perm))
        .expect("random tree")
}

pub fn criterion_8() -> Result<Outcome> {
    let mut t = Tally::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let mut trees = 0;
    while trees < 500 {
        let n = rng.gen_range(3..=20);
        let tree = random_tree(&mut rng, n);
        let mut pairs = Vec::new();
        for x in tree.vertices() {
            let leaves: Vec<usize> =
                tree.neighbors(x).into_iter().filter(|&y| tree.degree(y) == 1).collect();
            for (i, &a) in leaves.iter().enumerate() {
                for &b in &leaves[i + 1..] {
                    pairs.push((a, b));
                }
            }
        }
        let Some(&(a, b)) = pairs.choose(&mut rng) else {
            continue;
        };
        trees += 1;
        let sq = square(&tree);
        let joined = square(&tree.with_edge(a, b)?);
        t.check(sq == joined, || format!("edges {:?} plus {{{a},{b}}}", tree.edges()));
    }
    Ok(t.finish(8, "free-vertex edge invariance"))
}

pub fn criterion_9() -> Result<Outcome> {
    let mut t = Tally::new();
    for n in 2..=7 {
        for g in enumerate_connected_graphs(n)? {
            let reg = hochster_betti(&g)?.reg();
            let im = induced_matching_number(&g)?.0;
            t.check(reg >= im, || format!("edges {:?}: reg {reg} < indmat {im}", g.edges()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    for _ in 0..200 {
        let n = rng.gen_range(2..=9);
        let p = rng.gen_range(0.2..0.8);
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges)?;
        let w: Vec<usize> = g.vertices().filter(|_| rng.gen_bool(0.6)).collect();
        let w = if w.is_empty() { vec![1] } else { w };
        let (h, _) = induced_subgraph(&g, &w)?;
        let (rg, rh) = (hochster_betti(&g)?.reg(), hochster_betti(&h)?.reg());
        t.check(rh <= rg, || format!("edges {:?}, W {w:?}: reg {rh} > {rg}", g.edges()));
    }
    Ok(t.finish(9, "regularity bounds"))
}

pub fn criterion_10() -> Result<Outcome> {
    let mut t = Tally::new();
    let (rows, summary) = scan_conjectures(9)?;
    t.check(!rows.is_empty(), || "empty scan".into());
    let code = tree_code(&example_tree())?;
    t.check(summary.reg_increases.contains(&code), || {
        "double star example missing from regularity increases".into()
    });
    t.check(summary.pd_violations.is_empty(), || {
        format!("projdim violations: {:?}", summary.pd_violations)
    });
    Ok(t.finish(10, "conjecture scan up to 9 vertices"))
}

/// Runs criterion `id` (1-based).
pub fn run_criterion(id: usize) -> Result<Outcome> {
    match id {
        1 => criterion_1(),
        2 => criterion_2(),
        3 => criterion_3(),
        4 => criterion_4(),
        5 => criterion_5(),
        6 => criterion_6(),
        7 => criterion_7(),
        8 => criterion_8(),
        9 => criterion_9(),
        10 => criterion_10(),
        _ => Err(crate::error::Error::IndexOutOfRange {
            index: id,
            lo: 1,
            hi: CRITERIA,
        }),
    }
}
