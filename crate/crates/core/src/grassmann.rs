//! Nilpotent matrices, shuffle equations, Plücker quadrics and the duality
//! between `Gr(l,n)^T` and `Gr(n-l,n)^T`.
//!
//! Plücker variables of `Gr(l,n)` are numbered by the rank of their index
//! set in the lexicographic order of [`subsets`].

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::combinatorics::{binomial, sign_interleave, subsets, Partition, PluckerIndex};
use crate::error::{domain, Error, Result};
use crate::polyring::{
    Monomial, MonomialOrder, PolyMatrix, Polynomial, QMatrix, Rational, Ring, SparseEchelon,
    SparseVector,
};

/// An exactly nilpotent square matrix acting on row vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentMatrix {
    matrix: QMatrix,
    partition: Option<Partition>,
}

impl NilpotentMatrix {
    /// Checks `T^n = 0`.
    pub fn new(matrix: QMatrix) -> Result<Self> {
        let n = matrix.rows();
        if matrix.cols() != n {
            return domain(format!("{}x{} matrix is not square", n, matrix.cols()));
        }
        let mut power = QMatrix::identity(n);
        for _ in 0..n {
            power = power.mul(&matrix)?;
        }
        if !power.is_zero() {
            return domain("matrix is not nilpotent");
        }
        Ok(NilpotentMatrix {
            matrix,
            partition: None,
        })
    }

    /// The Jordan matrix `T_λ`: ones at `(j, j+1)` unless `j` is a partial
    /// sum `λ_1 + ... + λ_k`.
    pub fn jordan(lambda: &Partition) -> Result<Self> {
        if lambda.is_empty() {
            return domain("the empty partition has no Jordan matrix");
        }
        let n = lambda.size();
        let mut m = QMatrix::zeros(n, n);
        let mut start = 0;
        for &part in lambda.parts() {
            for j in start..start + part - 1 {
                m.set(j, j + 1, Rational::one());
            }
            start += part;
        }
        Ok(NilpotentMatrix {
            matrix: m,
            partition: Some(lambda.clone()),
        })
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn partition(&self) -> Option<&Partition> {
        self.partition.as_ref()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

pub fn jordan_matrix(lambda: &Partition) -> Result<NilpotentMatrix> {
    NilpotentMatrix::jordan(lambda)
}

/// Variable index of `p_I` in the Plücker ring of `Gr(|I|, n)`.
pub fn plucker_var(index: &PluckerIndex, n: usize) -> usize {
    index.rank(n)
}

fn form_from_vector(v: &SparseVector) -> Polynomial {
    Polynomial::linear(v.entries().iter().map(|(&k, c)| (k, c.clone())))
}

fn vector_from_form(f: &Polynomial) -> Result<SparseVector> {
    if !f.is_zero() && !f.is_linear_form() {
        return domain("expected a linear form");
    }
    Ok(SparseVector::from_map(f.linear_coefficients()))
}

/// The shuffle equations of a nilpotent matrix on `Gr(l,n)`.
#[derive(Clone, Debug)]
pub struct ShuffleSystem {
    pub n: usize,
    pub l: usize,
    /// Nonzero coordinates of `P·[∧_l(Id + zT)]_i`, `i = 1..l`, ordered by
    /// `i` and then by column.
    pub forms: Vec<Polynomial>,
    echelon: SparseEchelon,
}

impl ShuffleSystem {
    fn from_forms(n: usize, l: usize, forms: Vec<Polynomial>) -> Result<Self> {
        let mut echelon = SparseEchelon::new();
        for f in &forms {
            echelon.insert(vector_from_form(f)?);
        }
        Ok(ShuffleSystem {
            n,
            l,
            forms,
            echelon,
        })
    }

    /// Rank of the system.
    pub fn sigma(&self) -> usize {
        self.echelon.rank()
    }

    /// Reduced row-echelon basis, one form per pivot variable.
    pub fn basis(&self) -> Vec<Polynomial> {
        self.echelon.basis().map(form_from_vector).collect()
    }

    pub fn echelon(&self) -> &SparseEchelon {
        &self.echelon
    }

    pub fn contains(&self, form: &Polynomial) -> Result<bool> {
        Ok(self.echelon.contains(&vector_from_form(form)?))
    }

    pub fn same_span(&self, other: &ShuffleSystem) -> bool {
        self.n == other.n && self.l == other.l && self.echelon == other.echelon
    }

    pub fn ring(&self) -> Result<Ring> {
        Ring::plucker(self.n, self.l)
    }
}

/// Echelon form of the span of a list of linear forms.
pub fn span_of(forms: &[Polynomial]) -> Result<SparseEchelon> {
    let mut e = SparseEchelon::new();
    for f in forms {
        e.insert(vector_from_form(f)?);
    }
    Ok(e)
}

/// The row vector `P·∧_l(Id + zT)` as polynomials in the Plücker variables
/// and `z`, where `z` is variable number `C(n,l)`.
pub fn shuffle_row(t: &NilpotentMatrix, l: usize) -> Result<Vec<Polynomial>> {
    let n = t.n();
    if l > n {
        return domain(format!("l = {l} exceeds n = {n}"));
    }
    let size = binomial(n, l);
    let z = size;
    let w = PolyMatrix::identity_plus_scaled(t.matrix(), z)?.wedge_power(l)?;
    let mut out = vec![Polynomial::zero(); size];
    for i in 0..size {
        let p = Polynomial::var(i);
        for (&j, entry) in w.row(i) {
            out[j] = &out[j] + &(&p * entry);
        }
    }
    Ok(out)
}

/// All coordinates of `P·[∧_l(Id + zT)]_i` for `i = 1..l`.
pub fn shuffle_equations(t: &NilpotentMatrix, l: usize) -> Result<ShuffleSystem> {
    let n = t.n();
    if l > n {
        return domain(format!("l = {l} exceeds n = {n}"));
    }
    let z = binomial(n, l);
    let w = PolyMatrix::identity_plus_scaled(t.matrix(), z)?.wedge_power(l)?;
    let mut cols: BTreeMap<(u32, usize), BTreeMap<usize, Rational>> = BTreeMap::new();
    for i in 0..w.rows() {
        for (&j, entry) in w.row(i) {
            for (m, c) in entry.terms() {
                let e = m.exponent(z);
                if e == 0 {
                    continue;
                }
                let slot = cols.entry((e, j)).or_default();
                let v = slot.get(&i).cloned().unwrap_or_else(Rational::zero) + c;
                slot.insert(i, v);
            }
        }
    }
    let forms = cols
        .into_values()
        .map(|v| form_from_vector(&SparseVector::from_map(v)))
        .filter(|f| !f.is_zero())
        .collect();
    ShuffleSystem::from_forms(n, l, forms)
}

/// The rank `σ` of the shuffle equations of `T_λ`.
pub fn shuffle_rank(lambda: &Partition, l: usize) -> Result<usize> {
    Ok(shuffle_equations(&NilpotentMatrix::jordan(lambda)?, l)?.sigma())
}

/// The Grassmann–Plücker relations
/// `Σ_j (-1)^j p_{H ∪ k_j} p_{K \ k_j}` over all `(l-1)`-sets `H` and
/// `(l+1)`-sets `K = (k_0 < ... < k_l)`, where `p_{H ∪ k}` carries the sign
/// of sorting `(H, k)`. Zero and repeated relations are dropped and each is
/// scaled so that its lexicographically leading coefficient is positive.
pub fn plucker_quadrics(n: usize, l: usize) -> Result<Vec<Polynomial>> {
    if l > n {
        return domain(format!("l = {l} exceeds n = {n}"));
    }
    if l == 0 || l == n {
        return Ok(Vec::new());
    }
    let index: HashMap<u64, usize> = subsets(n, l)?
        .iter()
        .enumerate()
        .map(|(k, s)| (s.mask(), k))
        .collect();
    let lex = MonomialOrder::lex();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for h in subsets(n, l - 1)? {
        let hm = h.mask();
        for k in subsets(n, l + 1)? {
            let km = k.mask();
            let mut q = Polynomial::zero();
            for (j, &kj) in k.elements().iter().enumerate() {
                let bit = 1u64 << (kj - 1);
                if hm & bit != 0 {
                    continue;
                }
                let above = (hm >> kj).count_ones() as usize;
                let sign = if (j + above) % 2 == 0 { 1 } else { -1 };
                let a = index[&(hm | bit)];
                let b = index[&(km & !bit)];
                q.add_term(
                    Rational::from_int(sign),
                    Monomial::var(a).mul(&Monomial::var(b)),
                );
            }
            if q.is_zero() {
                continue;
            }
            if let Some((_, c)) = q.leading_term(&lex) {
                if c.is_negative() {
                    q = -q;
                }
            }
            if seen.insert(q.clone()) {
                out.push(q);
            }
        }
    }
    Ok(out)
}

/// Shuffle equations together with the Plücker quadrics.
#[derive(Clone, Debug)]
pub struct ShuffleIdeal {
    pub linear: ShuffleSystem,
    pub quadrics: Vec<Polynomial>,
}

impl ShuffleIdeal {
    pub fn n(&self) -> usize {
        self.linear.n
    }

    pub fn l(&self) -> usize {
        self.linear.l
    }

    pub fn nvars(&self) -> usize {
        binomial(self.n(), self.l())
    }

    /// The reduced linear basis followed by the quadrics.
    pub fn generators(&self) -> Vec<Polynomial> {
        let mut g = self.linear.basis();
        g.extend(self.quadrics.iter().cloned());
        g
    }

    pub fn ring(&self) -> Result<Ring> {
        Ring::plucker(self.n(), self.l())
    }

    /// Text form: a header line and one generator per line.
    pub fn to_text(&self) -> Result<String> {
        let ring = self.ring()?;
        let mut s = format!("# ring p, n={}, l={}\n", self.n(), self.l());
        for g in self.generators() {
            s.push_str(&ring.display(&g));
            s.push('\n');
        }
        Ok(s)
    }
}

/// An ideal read from the text format: `n`, `l` and its generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealText {
    pub n: usize,
    pub l: usize,
    pub generators: Vec<Polynomial>,
}

/// Parses a `# ring p, n=<n>, l=<l>` header followed by one generator per
/// line. Blank lines and further `#` lines are skipped.
pub fn parse_ideal_text(text: &str) -> Result<IdealText> {
    let mut lines = text.lines().map(str::trim).filter(|s| !s.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty ideal file".into()))?;
    let bad = || Error::Parse(format!("bad header {header:?}"));
    let rest = header
        .strip_prefix('#')
        .map(str::trim)
        .and_then(|h| h.strip_prefix("ring p,"))
        .ok_or_else(bad)?;
    let (mut n, mut l) = (None, None);
    for field in rest.split(',') {
        match field.trim().split_once('=') {
            Some(("n", v)) => n = Some(v.trim().parse().map_err(|_| bad())?),
            Some(("l", v)) => l = Some(v.trim().parse().map_err(|_| bad())?),
            _ => return Err(bad()),
        }
    }
    let (n, l) = (n.ok_or_else(bad)?, l.ok_or_else(bad)?);
    let ring = Ring::plucker(n, l)?;
    let generators = lines
        .filter(|s| !s.starts_with('#'))
        .map(|s| ring.parse(s))
        .collect::<Result<_>>()?;
    Ok(IdealText { n, l, generators })
}

pub fn shuffle_ideal(t: &NilpotentMatrix, l: usize) -> Result<ShuffleIdeal> {
    Ok(ShuffleIdeal {
        linear: shuffle_equations(t, l)?,
        quadrics: plucker_quadrics(t.n(), l)?,
    })
}

/// `B_λ = diag(B_{λ_1}, ..., B_{λ_s})` with `B_m` the `m × m` antidiagonal
/// identity.
pub fn antidiag_b(lambda: &Partition) -> QMatrix {
    let n = lambda.size();
    let mut b = QMatrix::zeros(n, n);
    let mut start = 0;
    for &m in lambda.parts() {
        for i in 0..m {
            b.set(start + i, start + m - 1 - i, Rational::one());
        }
        start += m;
    }
    b
}

/// Relabels each `p_I` of a linear form on `Gr(l,n)` as
/// `sign(I,J)·p_J` on `Gr(n-l,n)`, with `J` the complement of `I`.
pub fn hodge_star(form: &Polynomial, n: usize, l: usize) -> Result<Polynomial> {
    if l > n {
        return domain(format!("l = {l} exceeds n = {n}"));
    }
    if !form.is_zero() && !form.is_linear_form() {
        return domain("the Hodge star acts on linear forms");
    }
    let size = binomial(n, l);
    let mut out = Polynomial::zero();
    for (v, c) in form.linear_coefficients() {
        if v >= size {
            return domain(format!("variable x{v} is not a Plücker variable of Gr({l},{n})"));
        }
        let i = PluckerIndex::unrank(n, l, v)?;
        let j = i.complement(n);
        let s = sign_interleave(&i, &j)?;
        out.add_term(c * Rational::from_int(s as i64), Monomial::var(j.rank(n)));
    }
    Ok(out)
}

/// Image of a linear form under the coordinate change induced by
/// `P ↦ (P·∧_l B_λ)*`, i.e. the form `g` with `g(φ(P)) = f(P)`.
pub fn duality_map(lambda: &Partition, l: usize, form: &Polynomial) -> Result<Polynomial> {
    let n = lambda.size();
    if l > n {
        return domain(format!("l = {l} exceeds n = {n}"));
    }
    let w = PolyMatrix::from_rational(&antidiag_b(lambda)).wedge_power(l)?;
    // c' = (∧B)·c; ∧B is its own inverse
    let c = form.linear_coefficients();
    let mut moved = Polynomial::zero();
    for i in 0..w.rows() {
        let mut acc = Rational::zero();
        for (&k, entry) in w.row(i) {
            if let Some(ck) = c.get(&k) {
                acc += &(ck * &entry.coefficient(&Monomial::one()));
            }
        }
        moved.add_term(acc, Monomial::var(i));
    }
    hodge_star(&moved, n, l)
}

/// All coordinates `p_I` except `I = {n-l+1, ..., n}`.
pub fn onepart_shuffle_basis(n: usize, l: usize) -> Result<Vec<Polynomial>> {
    if l == 0 || l > n {
        return domain(format!("need 1 <= l <= n, got l = {l}, n = {n}"));
    }
    let last = binomial(n, l) - 1;
    Ok((0..last).map(Polynomial::var).collect())
}

/// Whether the duality map carries the shuffle span of `(λ, l)` onto the
/// shuffle span of `(λ, n-l)`.
pub fn dual_check(lambda: &Partition, l: usize) -> Result<bool> {
    let n = lambda.size();
    let t = NilpotentMatrix::jordan(lambda)?;
    let here = shuffle_equations(&t, l)?;
    let there = shuffle_equations(&t, n - l)?;
    let images = here
        .basis()
        .iter()
        .map(|f| duality_map(lambda, l, f))
        .collect::<Result<Vec<_>>>()?;
    Ok(span_of(&images)? == *there.echelon())
}
