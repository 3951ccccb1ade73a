//! Gröbner bases over the rationals, ideal membership, linear elimination
//! and dimension/degree from the Hilbert series of the initial ideal.

mod engine;
mod hilbert;

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{domain, Error, Result};
use crate::grassmann::ShuffleIdeal;
use crate::polyring::{
    Monomial, MonomialOrder, Polynomial, Rational, SparseEchelon, SparseVector,
};

pub use engine::Stats;
pub use hilbert::{hilbert_numerator, reduce_numerator};

use engine::{Ctx, IPoly};

/// Limits for long computations.
#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    pub deadline: Option<Instant>,
    pub seconds: f64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn seconds(s: f64) -> Self {
        Budget {
            deadline: Some(Instant::now() + Duration::from_secs_f64(s)),
            seconds: s,
        }
    }

    fn stamp<T>(&self, r: Result<T>) -> Result<T> {
        r.map_err(|e| match e {
            Error::Timeout(_) => Error::Timeout(self.seconds),
            other => other,
        })
    }
}

/// Maps external variable indices to engine positions and back.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Layout {
    nv: usize,
    order: MonomialOrder,
    /// `var_at[k]` is the variable in engine position `k`.
    var_at: Vec<usize>,
}

impl Layout {
    fn new(nv: usize, order: &MonomialOrder) -> Result<Layout> {
        if let Some(len) = order.precedence_len() {
            if len != nv {
                return domain(format!(
                    "order covers {len} variables but the ring has {nv}"
                ));
            }
        }
        let mut var_at = vec![0; nv];
        for v in 0..nv {
            var_at[order.rank(v)] = v;
        }
        Ok(Layout {
            nv,
            order: order.clone(),
            var_at,
        })
    }

    fn ctx(&self) -> Ctx {
        Ctx {
            nv: self.nv,
            kind: self.order.kind,
        }
    }

    fn to_engine(&self, p: &Polynomial) -> Result<IPoly> {
        let mut terms = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            let mut e = vec![0u8; self.nv];
            for (v, x) in m.iter() {
                if v >= self.nv {
                    return domain(format!("variable x{v} outside a ring of {} variables", self.nv));
                }
                if x > 200 {
                    return domain("exponent too large for the Groebner engine");
                }
                e[self.order.rank(v)] = x as u8;
            }
            terms.push((e, c.clone()));
        }
        Ok(IPoly::from_terms(&self.ctx(), terms))
    }

    fn from_engine(&self, p: &IPoly) -> Polynomial {
        let mut out = Polynomial::zero();
        for k in 0..p.len() {
            let e = p.exp(self.nv, k);
            let m = Monomial::from_pairs(
                e.iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(pos, &x)| (self.var_at[pos], x as u32)),
            );
            out.add_term(p.coeffs[k].clone(), m);
        }
        out
    }
}

/// A reduced Gröbner basis: monic, inter-reduced, sorted by increasing
/// leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    layout: Layout,
    elements: Vec<IPoly>,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.layout.nv
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.layout.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generators(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|p| self.layout.from_engine(p)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|p| {
                let mut one = IPoly::default();
                one.exps = p.exp(self.layout.nv, 0).to_vec();
                one.degs = vec![p.degs[0]];
                one.coeffs = vec![Rational::one()];
                self.layout
                    .from_engine(&one)
                    .terms()
                    .next()
                    .map(|(m, _)| m.clone())
                    .unwrap_or_default()
            })
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].degs[0] == 0
    }

    pub fn is_homogeneous(&self) -> bool {
        self.elements.iter().all(IPoly::is_homogeneous)
    }

    /// Remainder of `p` with no term divisible by a leading monomial.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        let f = self.layout.to_engine(p)?;
        let elems: Vec<engine::Element> = self
            .elements
            .iter()
            .map(|e| engine::Element::new(self.layout.nv, e.clone()))
            .collect();
        let active: Vec<usize> = (0..elems.len()).collect();
        let r = engine::reduce(&self.layout.ctx(), f, &elems, &active, None)?;
        Ok(self.layout.from_engine(&r))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    fn leading_exponents(&self) -> Vec<Vec<u8>> {
        self.elements
            .iter()
            .map(|p| p.exp(self.layout.nv, 0).to_vec())
            .collect()
    }
}

fn ring_size(gens: &[Polynomial], nvars: Option<usize>, order: &MonomialOrder) -> usize {
    let from_gens = gens.iter().map(Polynomial::var_bound).max().unwrap_or(0);
    nvars
        .or(order.precedence_len())
        .unwrap_or(from_gens)
        .max(from_gens)
}

/// The reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(gens, order, None, Budget::unlimited()).map(|(g, _)| g)
}

/// [`buchberger`] in a ring of `nvars` variables, with a time budget.
pub fn buchberger_with(
    gens: &[Polynomial],
    order: &MonomialOrder,
    nvars: Option<usize>,
    budget: Budget,
) -> Result<(GroebnerBasis, Stats)> {
    if gens.is_empty() {
        return domain("buchberger needs at least one generator");
    }
    let nv = ring_size(gens, nvars, order);
    let layout = Layout::new(nv, order)?;
    let input = linear_interreduce(gens, order)
        .iter()
        .map(|g| layout.to_engine(g))
        .collect::<Result<Vec<_>>>()?;
    let (elements, stats) = budget.stamp(engine::groebner(&layout.ctx(), input, budget.deadline))?;
    Ok((GroebnerBasis { layout, elements }, stats))
}

/// Row-reduces each group of homogeneous polynomials of equal degree as
/// vectors over their monomials, pivoting on leading monomials. The span is
/// unchanged; inhomogeneous inputs pass through.
pub fn linear_interreduce(polys: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let mut groups: BTreeMap<u32, Vec<&Polynomial>> = BTreeMap::new();
    let mut out = Vec::new();
    for p in polys {
        match p.degree() {
            None => {}
            Some(d) if p.is_homogeneous() => groups.entry(d).or_default().push(p),
            Some(_) => out.push(p.clone()),
        }
    }
    for group in groups.into_values() {
        let mut monos: Vec<&Monomial> = group.iter().flat_map(|p| p.terms().map(|(m, _)| m)).collect();
        monos.sort_by(|a, b| order.cmp(b, a));
        monos.dedup();
        let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        let mut e = SparseEchelon::new();
        for p in group {
            e.insert(SparseVector::from_map(
                p.terms().map(|(m, c)| (index[m], c.clone())).collect(),
            ));
        }
        for row in e.basis() {
            out.push(Polynomial::from_terms(
                row.entries().iter().map(|(&k, c)| (c.clone(), monos[k].clone())),
            ));
        }
    }
    out
}

pub fn normal_form(p: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    g.normal_form(p)
}

/// Linear forms solved for their pivot variables and substituted into the
/// remaining generators.
#[derive(Clone, Debug)]
pub struct LinearElimination {
    pub nvars: usize,
    /// Pivot variable ↦ its expression in the kept variables (original
    /// numbering).
    pub substitution: BTreeMap<usize, Polynomial>,
    /// Remaining generators, renumbered so kept variable `kept[k]` is `k`.
    pub gens: Vec<Polynomial>,
    pub kept: Vec<usize>,
}

impl LinearElimination {
    /// Rewrites a polynomial of the original ring in the kept variables.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        let pos: HashMap<usize, usize> = self.kept.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        p.substitute(&self.substitution)
            .rename(|v| pos.get(&v).copied())
            .map_err(|v| Error::Domain(format!("variable x{v} outside the ring")))
    }

    /// Maps a polynomial in the kept variables back to the original ring.
    pub fn lift(&self, p: &Polynomial) -> Polynomial {
        p.rename(|k| self.kept.get(k).copied())
            .expect("kept variables are in range")
    }

    pub fn rank(&self) -> usize {
        self.substitution.len()
    }
}

/// Splits off the linear generators, solves them by row reduction and
/// substitutes them into the others. Zero results are dropped.
pub fn eliminate_linear(gens: &[Polynomial], nvars: usize) -> Result<LinearElimination> {
    let mut echelon = SparseEchelon::new();
    let mut rest = Vec::new();
    for g in gens {
        if g.var_bound() > nvars {
            return domain(format!("generator uses variables beyond x{}", nvars - 1));
        }
        if g.is_linear_form() {
            echelon.insert(SparseVector::from_map(g.linear_coefficients()));
        } else if !g.is_zero() {
            rest.push(g.clone());
        }
    }
    let mut substitution = BTreeMap::new();
    for row in echelon.basis() {
        let (pivot, _) = row.leading().expect("echelon rows are nonzero");
        let expr = Polynomial::linear(
            row.entries()
                .iter()
                .filter(|(&v, _)| v != pivot)
                .map(|(&v, c)| (v, -c)),
        );
        substitution.insert(pivot, expr);
    }
    let kept: Vec<usize> = (0..nvars).filter(|v| !substitution.contains_key(v)).collect();
    let mut elim = LinearElimination {
        nvars,
        substitution,
        gens: Vec::new(),
        kept,
    };
    for g in rest {
        let h = elim.apply(&g)?;
        if !h.is_zero() {
            elim.gens.push(h);
        }
    }
    Ok(elim)
}

/// Projective dimension `δ` (−1 for the empty variety) and degree `γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub delta: i64,
    pub gamma: u64,
}

/// `δ = Krull dimension − 1` and `γ = h(1)` from the Hilbert series of the
/// initial ideal of a homogeneous ideal.
pub fn hilbert_data(g: &GroebnerBasis, nvars: usize) -> Result<HilbertData> {
    hilbert_data_with(g, nvars, Budget::unlimited())
}

pub fn hilbert_data_with(g: &GroebnerBasis, nvars: usize, budget: Budget) -> Result<HilbertData> {
    if g.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !g.is_homogeneous() {
        return domain("Hilbert series needs a homogeneous ideal");
    }
    if nvars < g.nvars() {
        return domain("ring smaller than the basis");
    }
    let mut lms = g.leading_exponents();
    for m in &mut lms {
        m.resize(nvars, 0);
    }
    let n = budget.stamp(hilbert_numerator(&lms, budget.deadline))?;
    let (h, k) = reduce_numerator(n);
    let krull = nvars as i64 - k as i64;
    let gamma: i128 = h.iter().sum();
    Ok(HilbertData {
        delta: krull - 1,
        gamma: gamma as u64,
    })
}

/// Minimal generator counts in degrees one and two of a shuffle ideal.
pub fn min_generators_deg2(ideal: &ShuffleIdeal) -> Result<(usize, usize)> {
    let elim = eliminate_linear(&ideal.generators(), ideal.nvars())?;
    Ok((elim.rank(), quadric_rank(&elim.gens)))
}

/// Dimension of the span of the degree-2 parts of the given polynomials.
pub fn quadric_rank(polys: &[Polynomial]) -> usize {
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    let mut e = SparseEchelon::new();
    for p in polys {
        let mut v = BTreeMap::new();
        for (m, c) in p.terms() {
            if m.degree() == 2 {
                let next = index.len();
                let k = *index.entry(m.clone()).or_insert(next);
                v.insert(k, c.clone());
            }
        }
        e.insert(SparseVector::from_map(v));
    }
    e.rank()
}

/// Membership by linear elimination followed by a degrevlex basis of what
/// remains.
pub fn member(p: &Polynomial, gens: &[Polynomial], nvars: usize) -> Result<bool> {
    member_with(p, gens, nvars, Budget::unlimited())
}

pub fn member_with(p: &Polynomial, gens: &[Polynomial], nvars: usize, budget: Budget) -> Result<bool> {
    let nvars = nvars.max(p.var_bound());
    let elim = eliminate_linear(gens, nvars)?;
    let q = elim.apply(p)?;
    if q.is_zero() {
        return Ok(true);
    }
    if elim.gens.is_empty() {
        return Ok(false);
    }
    let (g, _) = buchberger_with(
        &elim.gens,
        &MonomialOrder::degrevlex(),
        Some(elim.kept.len()),
        budget,
    )?;
    g.contains(&q)
}

/// Status of an analysis: complete, or cut short by the budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Complete,
    Incomplete,
}

/// One table cell: `[σ, δ, γ]` and optional minimal-generator counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    pub lambda: Partition,
    pub l: usize,
    pub sigma: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_linear: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_quadrics: Option<usize>,
    #[serde(skip_serializing_if = "is_complete", default = "complete")]
    pub status: Status,
}

fn is_complete(s: &Status) -> bool {
    *s == Status::Complete
}

fn complete() -> Status {
    Status::Complete
}

impl AnalysisRecord {
    pub fn triple(&self) -> Option<(usize, i64, u64)> {
        Some((self.sigma, self.delta?, self.gamma?))
    }
}
