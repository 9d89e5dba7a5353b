//! Tree families whose squares are studied in the literature: paths, stars,
//! partially whiskered stars and double brooms, with closed-form invariant
//! formulas for paths and double brooms.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{distances, is_tree, Graph};

/// Family of a tree, with the vertex labels that witness it.
///
/// Overlaps are resolved in the order Path, Star, PartiallyWhiskeredStar,
/// DoubleBroom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeClass {
    /// `L_n`; `order` lists the vertices along the path.
    Path { n: usize, order: Vec<usize> },
    /// `K_{1,leaves}` with the given center.
    Star { leaves: usize, center: usize },
    /// Star with `spokes` leaves, `whiskers` of which carry one pendant edge.
    /// `whiskered` pairs each whiskered spoke with its whisker.
    PartiallyWhiskeredStar {
        spokes: usize,
        whiskers: usize,
        center: usize,
        bare: Vec<usize>,
        whiskered: Vec<(usize, usize)>,
    },
    /// Path `L_k` (the spine) with `left` pendants on its first vertex and
    /// `right` pendants on its last, `1 <= left <= right`.
    DoubleBroom {
        left: usize,
        k: usize,
        right: usize,
        spine: Vec<usize>,
        left_leaves: Vec<usize>,
        right_leaves: Vec<usize>,
    },
    Other,
}

impl fmt::Display for TreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeClass::Path { n, .. } => write!(f, "Path({n})"),
            TreeClass::Star { leaves, .. } => write!(f, "Star({leaves})"),
            TreeClass::PartiallyWhiskeredStar {
                spokes, whiskers, ..
            } => write!(f, "PartiallyWhiskeredStar({spokes},{whiskers})"),
            TreeClass::DoubleBroom { left, k, right, .. } => {
                write!(f, "DoubleBroom({left},{k},{right})")
            }
            TreeClass::Other => f.write_str("Other"),
        }
    }
}

impl TreeClass {
    /// Rebuilds a tree from the family parameters, with the standard labels
    /// of [`Graph::path`], [`Graph::star`], [`whiskered_star`] and
    /// [`double_broom`]. `None` for `Other`.
    pub fn reconstruct(&self) -> Option<Graph> {
        match *self {
            TreeClass::Path { n, .. } => Some(Graph::path(n)),
            TreeClass::Star { leaves, .. } => Some(Graph::star(leaves)),
            TreeClass::PartiallyWhiskeredStar {
                spokes, whiskers, ..
            } => whiskered_star(spokes, whiskers).ok(),
            TreeClass::DoubleBroom { left, k, right, .. } => double_broom(left, k, right).ok(),
            TreeClass::Other => None,
        }
    }
}

/// Whiskered star with center `x_0 = 1`, spokes `x_i = 1 + i` and whiskers
/// `y_j = n + 1 + j` hanging from `x_j`, for `1 <= m <= n`.
pub fn whiskered_star(n: usize, m: usize) -> Result<Graph> {
    if n == 0 || m > n {
        return Err(Error::InvalidParameters(format!(
            "whiskered star needs 0 <= m <= n and n >= 1, got n = {n}, m = {m}"
        )));
    }
    let spokes = (1..=n).map(|i| (1, 1 + i));
    let whiskers = (1..=m).map(|j| (1 + j, n + 1 + j));
    Graph::from_edges(n + m + 1, spokes.chain(whiskers))
}

/// Double broom `P(left, k, right)`: spine `1..=k`, then `left` pendants on
/// vertex 1 and `right` pendants on vertex `k`.
pub fn double_broom(left: usize, k: usize, right: usize) -> Result<Graph> {
    if k < 2 || left == 0 || right == 0 {
        return Err(Error::InvalidParameters(format!(
            "double broom needs k >= 2 and pendants on both ends, got ({left},{k},{right})"
        )));
    }
    let spine = (1..k).map(|i| (i, i + 1));
    let l = (0..left).map(|i| (1, k + 1 + i));
    let r = (0..right).map(|i| (k, k + left + 1 + i));
    Graph::from_edges(k + left + right, spine.chain(l).chain(r))
}

fn path_order(t: &Graph) -> Vec<usize> {
    let start = t.vertices().find(|&v| t.degree(v) <= 1).unwrap_or(1);
    let mut order = vec![start];
    let mut prev = 0;
    let mut cur = start;
    while let Some(&next) = t.neighbors(cur).iter().find(|&&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

fn as_whiskered_star(t: &Graph) -> Option<TreeClass> {
    let hubs: Vec<usize> = t.vertices().filter(|&v| t.degree(v) >= 3).collect();
    let [center] = hubs[..] else {
        return None;
    };
    let d = distances(t);
    if t.vertices().any(|v| d.get(center, v).is_none_or(|x| x > 2)) {
        return None;
    }
    let mut bare = Vec::new();
    let mut whiskered = Vec::new();
    for s in t.neighbors(center) {
        let outer: Vec<usize> = t.neighbors(s).into_iter().filter(|&w| w != center).collect();
        match outer[..] {
            [] => bare.push(s),
            [w] => whiskered.push((s, w)),
            _ => return None,
        }
    }
    if whiskered.is_empty() {
        return None;
    }
    Some(TreeClass::PartiallyWhiskeredStar {
        spokes: t.degree(center),
        whiskers: whiskered.len(),
        center,
        bare,
        whiskered,
    })
}

fn as_double_broom(t: &Graph) -> Option<TreeClass> {
    let inner: Vec<usize> = t.vertices().filter(|&v| t.degree(v) >= 2).collect();
    if inner.len() < 2 {
        return None;
    }
    let (spine_graph, labels) = crate::graph::induced_subgraph(t, &inner).ok()?;
    if spine_graph.max_degree() > 2 || !is_tree(&spine_graph) {
        return None;
    }
    let spine: Vec<usize> = path_order(&spine_graph).iter().map(|&v| labels[v - 1]).collect();
    let (a, b) = (spine[0], spine[spine.len() - 1]);
    let leaves_of = |x: usize| -> Vec<usize> {
        t.neighbors(x).into_iter().filter(|&w| t.degree(w) == 1).collect()
    };
    // interior spine vertices must carry no leaves
    if spine[1..spine.len() - 1].iter().any(|&x| !leaves_of(x).is_empty()) {
        return None;
    }
    let (mut la, mut lb) = (leaves_of(a), leaves_of(b));
    let mut spine = spine;
    if (la.len(), a) > (lb.len(), b) {
        std::mem::swap(&mut la, &mut lb);
        spine.reverse();
    }
    Some(TreeClass::DoubleBroom {
        left: la.len(),
        k: spine.len(),
        right: lb.len(),
        spine,
        left_leaves: la,
        right_leaves: lb,
    })
}

/// Family of a tree.
pub fn classify_tree(t: &Graph) -> Result<TreeClass> {
    if !is_tree(t) {
        return Err(Error::NotTree);
    }
    let n = t.n();
    if t.max_degree() <= 2 {
        return Ok(TreeClass::Path {
            n,
            order: path_order(t),
        });
    }
    if let Some(center) = t.vertices().find(|&v| t.degree(v) == n - 1) {
        return Ok(TreeClass::Star {
            leaves: n - 1,
            center,
        });
    }
    if let Some(c) = as_whiskered_star(t) {
        return Ok(c);
    }
    Ok(as_double_broom(t).unwrap_or(TreeClass::Other))
}

/// Whether `I(T^2)` has a linear resolution, decided from the family of `T`:
/// true exactly for `L_2..L_5`, stars and partially whiskered stars.
pub fn linear_resolution_by_classification(t: &Graph) -> Result<bool> {
    let class = classify_tree(t)?;
    if t.n() < 2 {
        return Err(Error::ZeroIdeal);
    }
    Ok(matches!(
        class,
        TreeClass::Path { n: 2..=5, .. }
            | TreeClass::Star { .. }
            | TreeClass::PartiallyWhiskeredStar { .. }
    ))
}

/// One line explaining the verdict of [`linear_resolution_by_classification`].
pub fn classification_justification(class: &TreeClass) -> String {
    match class {
        TreeClass::Path { n, .. } if *n <= 5 => {
            format!("path on {n} <= 5 vertices: the square is co-chordal")
        }
        TreeClass::Path { n, .. } => {
            format!("path on {n} > 5 vertices: the square has a gap")
        }
        TreeClass::Star { .. } => "star: the square is a complete graph".to_string(),
        TreeClass::PartiallyWhiskeredStar { .. } => {
            "partially whiskered star: the revlex order gives linear quotients".to_string()
        }
        TreeClass::DoubleBroom { .. } | TreeClass::Other => {
            "not a path on at most 5 vertices, a star or a partially whiskered star".to_string()
        }
    }
}

/// A predicted value and the result it comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Formula {
    pub value: usize,
    pub source: &'static str,
}

/// Closed-form invariants of `S/I(T^2)` for a tree family. Fields without a
/// published formula for the given parameters are `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaReport {
    pub family: String,
    pub n: usize,
    pub dim: Option<Formula>,
    pub depth: Option<Formula>,
    pub projdim_si: Option<Formula>,
    pub reg: Option<Formula>,
    pub bight: Option<Formula>,
    pub d_prime: Option<Formula>,
    pub indmat: Option<Formula>,
}

fn f(value: usize, source: &'static str) -> Option<Formula> {
    Some(Formula { value, source })
}

/// Formulas for `L_n^2`, `n >= 3`.
pub fn path_formulas(n: usize) -> Result<FormulaReport> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("path formulas need n >= 3, got {n}")));
    }
    let fifth = n.div_ceil(5);
    let quarter = (n - 1).div_ceil(4);
    Ok(FormulaReport {
        family: format!("L_{n}"),
        n,
        dim: f(n.div_ceil(3), "path dimension"),
        depth: f(fifth, "path depth"),
        projdim_si: f(n - fifth, "path projective dimension"),
        reg: f(quarter, "path regularity"),
        bight: f(n - fifth, "path big height"),
        d_prime: f(n - fifth, "path bouquet count"),
        indmat: f(quarter, "path induced matching"),
    })
}

/// Formulas for the double broom with `n1 - 1` and `n2 - 1` pendants on a
/// spine of `k` vertices (`n1, k, n2 >= 2`), so `n = n1 + n2 + k - 2`.
pub fn double_broom_formulas(n1: usize, k: usize, n2: usize) -> Result<FormulaReport> {
    if n1 < 2 || k < 2 || n2 < 2 {
        return Err(Error::InvalidParameters(format!(
            "double broom formulas need n1, k, n2 >= 2, got ({n1},{k},{n2})"
        )));
    }
    let n = n1 + n2 + k - 2;
    let (pd, depth) = match k {
        2 | 3 => (n - 1, 1),
        4..=8 => (n - 2, 2),
        _ => {
            let extra = (k - 8).div_ceil(5);
            (n - 2 - extra, 2 + extra)
        }
    };
    let dim = (k >= 4).then(|| Formula {
        value: (k - 4).div_ceil(3) + 2,
        source: "double broom dimension",
    });
    Ok(FormulaReport {
        family: format!("P({},{k},{})", n1 - 1, n2 - 1),
        n,
        dim,
        depth: f(depth, "double broom depth"),
        projdim_si: f(pd, "double broom projective dimension"),
        reg: None,
        bight: None,
        d_prime: f(pd, "double broom projective dimension"),
        indmat: None,
    })
}
