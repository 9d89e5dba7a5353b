//! Squarefree quadratic monomial ideals: edge ideals, colon ideals of
//! generator prefixes, linear quotients and the Betti numbers they determine.
//!
//! A generator `x_a x_b` is stored as the pair `(a, b)` with `a < b`.
//! Variables share the 1-indexed labels of the graph vertices.

use std::collections::HashSet;
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest generator count accepted by [`search_linear_quotients`].
pub const SEARCH_GENERATOR_CAP: usize = 24;

pub type Generator = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal2 {
    nvars: usize,
    gens: Vec<Generator>,
}

impl MonomialIdeal2 {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Generator>) -> Result<Self> {
        let mut out: Vec<Generator> = Vec::new();
        for (a, b) in gens {
            for v in [a, b] {
                if v == 0 || v > nvars {
                    return Err(Error::VertexOutOfRange { vertex: v, n: nvars });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        if out.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        Ok(MonomialIdeal2 { nvars, gens: out })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Generators sorted lexicographically.
    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

pub fn edge_ideal(g: &Graph) -> Result<MonomialIdeal2> {
    MonomialIdeal2::new(g.n(), g.edges())
}

/// A total order `u_1, ..., u_N` of the generators of an ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorOrder {
    seq: Vec<Generator>,
}

impl GeneratorOrder {
    pub fn new(ideal: &MonomialIdeal2, seq: Vec<Generator>) -> Result<Self> {
        let mut normalized: Vec<Generator> =
            seq.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        let mut sorted = normalized.clone();
        sorted.sort_unstable();
        if sorted != ideal.gens {
            return Err(Error::InvalidOrder(
                "not a permutation of the generators".into(),
            ));
        }
        normalized.shrink_to_fit();
        Ok(GeneratorOrder { seq: normalized })
    }

    pub fn as_slice(&self) -> &[Generator] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }
}

/// Variable ranking: `rank[0]` is the largest variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableOrder {
    rank: Vec<usize>,
}

impl VariableOrder {
    pub fn new(rank: Vec<usize>) -> Result<Self> {
        let n = rank.len();
        let mut seen = vec![false; n];
        for &v in &rank {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidOrder(format!(
                    "variable ranking {rank:?} is not a permutation of 1..={n}"
                )));
            }
        }
        Ok(VariableOrder { rank })
    }

    /// `x_1 > x_2 > ... > x_n`.
    pub fn natural(n: usize) -> Self {
        VariableOrder {
            rank: (1..=n).collect(),
        }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.rank
    }
}

/// Generators sorted descending in the reverse lexicographic order induced by
/// `vars`. For squarefree quadratics `u > v` iff the smallest variable of `u`
/// is larger than that of `v`, or they share it and the other variable of
/// `u` is larger.
pub fn revlex_order(ideal: &MonomialIdeal2, vars: &VariableOrder) -> Result<GeneratorOrder> {
    if vars.rank.len() != ideal.nvars {
        return Err(Error::InvalidOrder(format!(
            "variable ranking has {} entries for {} variables",
            vars.rank.len(),
            ideal.nvars
        )));
    }
    let mut pos = vec![0; ideal.nvars];
    for (p, &v) in vars.rank.iter().enumerate() {
        pos[v - 1] = p;
    }
    let mut seq = ideal.gens.clone();
    seq.sort_by_key(|&(a, b)| {
        let (pa, pb) = (pos[a - 1], pos[b - 1]);
        (pa.max(pb), pa.min(pb))
    });
    Ok(GeneratorOrder { seq })
}

/// A squarefree monomial, stored as its sorted support.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<usize>);

impl Monomial {
    pub fn support(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|v| other.0.contains(v))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| format!("x{v}")).collect();
        f.write_str(&parts.join("*"))
    }
}

/// Minimal generators of a colon ideal `<u_1..u_{i-1}> : <u_i>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColonIdeal {
    pub gens: Vec<Monomial>,
    pub variables_only: bool,
}

impl ColonIdeal {
    /// The variables among the minimal generators.
    pub fn variables(&self) -> Vec<usize> {
        self.gens
            .iter()
            .filter(|m| m.degree() == 1)
            .map(|m| m.0[0])
            .collect()
    }
}

/// Colon of the first `i - 1` generators by the `i`-th (1-indexed,
/// `2 <= i <= N`), from the quotients `u_k / gcd(u_k, u_i)`.
pub fn colon_prefix(ideal: &MonomialIdeal2, order: &GeneratorOrder, i: usize) -> Result<ColonIdeal> {
    let n = order.seq.len();
    if i < 2 || i > n {
        return Err(Error::IndexOutOfRange { index: i, lo: 2, hi: n });
    }
    debug_assert_eq!(n, ideal.gens.len());
    let (a, b) = order.seq[i - 1];
    let mut quotients: Vec<Monomial> = order.seq[..i - 1]
        .iter()
        .map(|&(c, d)| Monomial([c, d].into_iter().filter(|&v| v != a && v != b).collect()))
        .collect();
    quotients.sort_by(|p, q| p.degree().cmp(&q.degree()).then_with(|| p.cmp(q)));
    quotients.dedup();
    let mut minimal: Vec<Monomial> = Vec::new();
    for q in quotients {
        if !minimal.iter().any(|m| m.divides(&q)) {
            minimal.push(q);
        }
    }
    let variables_only = minimal.iter().all(|m| m.degree() == 1);
    Ok(ColonIdeal {
        gens: minimal,
        variables_only,
    })
}

/// Witness that an ideal has linear quotients with respect to `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearQuotientCertificate {
    order: GeneratorOrder,
    set_vars: Vec<Vec<usize>>,
}

impl LinearQuotientCertificate {
    pub fn order(&self) -> &GeneratorOrder {
        &self.order
    }

    /// `set(u_i)` for each generator, in order.
    pub fn set_vars(&self) -> &[Vec<usize>] {
        &self.set_vars
    }

    /// `r_i = |set(u_i)|`.
    pub fn r(&self) -> Vec<usize> {
        self.set_vars.iter().map(Vec::len).collect()
    }

    /// One line per generator: `u_i = (a,b); set = {...}; r = k`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, (&(a, b), set)) in self.order.seq.iter().zip(&self.set_vars).enumerate() {
            let vars: Vec<String> = set.iter().map(usize::to_string).collect();
            let _ = writeln!(
                out,
                "u_{} = ({a},{b}); set = {{{}}}; r = {}",
                i + 1,
                vars.join(","),
                set.len()
            );
        }
        out
    }
}

pub fn verify_linear_quotients(
    ideal: &MonomialIdeal2,
    order: &GeneratorOrder,
) -> Option<LinearQuotientCertificate> {
    let mut set_vars = vec![Vec::new()];
    for i in 2..=order.len() {
        let colon = colon_prefix(ideal, order, i).ok()?;
        if !colon.variables_only {
            return None;
        }
        set_vars.push(colon.variables());
    }
    Some(LinearQuotientCertificate {
        order: order.clone(),
        set_vars,
    })
}

/// Admissibility of appending `cand` to the generator set `prefix`: the
/// colon is generated by variables iff every quotient of degree two is
/// divisible by one of the degree-one quotients.
fn admissible(gens: &[Generator], prefix: u32, cand: usize) -> bool {
    let (a, b) = gens[cand];
    let mut linear = 0u64;
    let mut disjoint: Vec<u64> = Vec::new();
    for k in crate::graph::mask_bits(u64::from(prefix)) {
        let (c, d) = gens[k];
        let shared = [c, d].iter().filter(|&&v| v == a || v == b).count();
        match shared {
            1 => {
                let other = if c == a || c == b { d } else { c };
                linear |= 1 << (other - 1);
            }
            0 => disjoint.push(1 << (c - 1) | 1 << (d - 1)),
            _ => unreachable!("generators are distinct"),
        }
    }
    disjoint.iter().all(|&m| m & linear != 0)
}

struct Search<'a> {
    gens: &'a [Generator],
    dead: HashSet<u32>,
    path: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, used: u32) -> bool {
        if self.path.len() == self.gens.len() {
            return true;
        }
        if self.dead.contains(&used) {
            return false;
        }
        for cand in 0..self.gens.len() {
            if used >> cand & 1 == 1 || !admissible(self.gens, used, cand) {
                continue;
            }
            self.path.push(cand);
            if self.extend(used | 1 << cand) {
                return true;
            }
            self.path.pop();
        }
        // Admissibility depends only on the set of earlier generators, so a
        // failed set fails under every ordering of it.
        self.dead.insert(used);
        false
    }
}

fn check_search_caps(ideal: &MonomialIdeal2) -> Result<()> {
    if ideal.len() > SEARCH_GENERATOR_CAP {
        return Err(Error::cap("linear quotient search generators", ideal.len(), SEARCH_GENERATOR_CAP));
    }
    if ideal.nvars > 64 {
        return Err(Error::cap("linear quotient search variables", ideal.nvars, 64));
    }
    Ok(())
}

/// Depth-first search for a generator order with linear quotients, trying
/// the lexicographically smallest admissible generator first. The result is
/// re-verified through [`verify_linear_quotients`].
pub fn search_linear_quotients(ideal: &MonomialIdeal2) -> Result<Option<LinearQuotientCertificate>> {
    check_search_caps(ideal)?;
    let mut search = Search {
        gens: &ideal.gens,
        dead: HashSet::new(),
        path: Vec::with_capacity(ideal.len()),
    };
    if !search.extend(0) {
        return Ok(None);
    }
    let seq = search.path.iter().map(|&k| ideal.gens[k]).collect();
    let order = GeneratorOrder { seq };
    let cert = verify_linear_quotients(ideal, &order);
    assert!(cert.is_some(), "search produced an order that fails verification");
    Ok(cert)
}

/// Outcome of extending a generator order greedily, without backtracking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GreedyOutcome {
    Completed(GeneratorOrder),
    /// No admissible generator was left after placing `placed` of them.
    Stalled { placed: usize },
}

/// Always appends the lexicographically smallest admissible generator.
pub fn greedy_linear_quotients(ideal: &MonomialIdeal2) -> Result<GreedyOutcome> {
    check_search_caps(ideal)?;
    let mut used = 0u32;
    let mut seq = Vec::with_capacity(ideal.len());
    while seq.len() < ideal.len() {
        let next = (0..ideal.len()).find(|&c| used >> c & 1 == 0 && admissible(&ideal.gens, used, c));
        match next {
            Some(c) => {
                used |= 1 << c;
                seq.push(ideal.gens[c]);
            }
            None => return Ok(GreedyOutcome::Stalled { placed: seq.len() }),
        }
    }
    Ok(GreedyOutcome::Completed(GeneratorOrder { seq }))
}

/// Total Betti numbers of `I` (not `S/I`) read off a linear quotient
/// certificate: `beta_i(I) = sum_k C(r_k, i)`, and `projdim(I) = max r_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LqBetti {
    /// `betti[i] = beta_i(I)` for `i = 0..=projdim`.
    pub betti: Vec<u64>,
    pub projdim: usize,
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

pub fn betti_from_lq(cert: &LinearQuotientCertificate) -> LqBetti {
    let r = cert.r();
    let projdim = r.iter().copied().max().unwrap_or(0);
    let betti = (0..=projdim)
        .map(|i| r.iter().map(|&rk| binomial(rk, i)).sum())
        .collect();
    LqBetti { betti, projdim }
}
