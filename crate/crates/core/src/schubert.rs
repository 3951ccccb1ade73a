//! Rectangular partitions `λ = (r,…,r)` with `d` parts: lattice points `L_μ`,
//! the block-Toeplitz group action, orbit parametrizations of the Schubert
//! varieties `W_μ`, and their dimensions.
//!
//! The basis vector `t^k e_j` (`0 ≤ k < r`, `1 ≤ j ≤ d`) has index
//! `(j-1)·r + k + 1` in the vector-grouped basis, where `T_λ` is the Jordan
//! matrix, and `k·d + j` in the power-grouped basis, where the group acts by
//! block upper-triangular Toeplitz matrices.

use rand::Rng;
use serde::Serialize;

use crate::combinatorics::{binomial, mu_max, permutation_sign, subsets, Partition, PluckerIndex};
use crate::error::{domain, Result};
use crate::grassmann::{plucker_quadrics, shuffle_equations, shuffle_rank, NilpotentMatrix};
use crate::polyring::{maximal_minors, Polynomial, QMatrix, Rational};
use crate::sample::small_matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// `e_1, t e_1, …, t^{r-1} e_1, e_2, …`
    Vector,
    /// `e_1, …, e_d, t e_1, …, t e_d, …`
    Power,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RectangularContext {
    pub d: usize,
    pub r: usize,
    pub basis: Basis,
}

impl RectangularContext {
    pub fn new(d: usize, r: usize, basis: Basis) -> Result<Self> {
        if d == 0 || r == 0 {
            return domain("d and r must be positive");
        }
        if d * r > 63 {
            return domain("n = d·r must be at most 63");
        }
        Ok(RectangularContext { d, r, basis })
    }

    pub fn n(&self) -> usize {
        self.d * self.r
    }

    pub fn lambda(&self) -> Partition {
        Partition::rectangle(self.d, self.r)
    }

    pub fn with_basis(&self, basis: Basis) -> Self {
        RectangularContext { basis, ..*self }
    }

    /// 1-based index of `t^k e_j` in the active basis.
    pub fn index(&self, k: usize, j: usize) -> usize {
        match self.basis {
            Basis::Vector => (j - 1) * self.r + k + 1,
            Basis::Power => k * self.d + j,
        }
    }

    /// The perfect shuffle: `perm[i-1]` is the power-basis index of the
    /// vector-basis vector `i`.
    pub fn shuffle_permutation(&self) -> Vec<usize> {
        let v = self.with_basis(Basis::Vector);
        let p = self.with_basis(Basis::Power);
        let mut perm = vec![0; self.n()];
        for j in 1..=self.d {
            for k in 0..self.r {
                perm[v.index(k, j) - 1] = p.index(k, j);
            }
        }
        perm
    }

    /// Multiplication by `t` as a matrix acting on row vectors.
    pub fn nilpotent(&self) -> NilpotentMatrix {
        let mut m = QMatrix::zeros(self.n(), self.n());
        for j in 1..=self.d {
            for k in 0..self.r - 1 {
                m.set(self.index(k, j) - 1, self.index(k + 1, j) - 1, Rational::one());
            }
        }
        NilpotentMatrix::new(m).expect("t is nilpotent")
    }

    fn check(&self, mu: &Partition) -> Result<()> {
        if !mu.fits(self.d, self.r) {
            return domain(format!("{mu} does not fit in a {}×{} box", self.d, self.r));
        }
        Ok(())
    }
}

/// The coordinate subspace `L_μ = span{t^{r-i} e_j : 1 ≤ i ≤ μ_j}`.
pub fn lattice_subspace(mu: &Partition, ctx: &RectangularContext) -> Result<PluckerIndex> {
    ctx.check(mu)?;
    let mut idx = Vec::new();
    for j in 1..=ctx.d {
        for i in 1..=mu.part(j - 1) {
            idx.push(ctx.index(ctx.r - i, j));
        }
    }
    idx.sort_unstable();
    PluckerIndex::new(idx)
}

/// `A = A_0 + A_1 t + ⋯ + A_{r-1} t^{r-1}` as an `n×n` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMatrix {
    pub ctx: RectangularContext,
    pub blocks: Vec<QMatrix>,
}

impl BlockMatrix {
    /// The block upper-triangular Toeplitz matrix in the power basis:
    /// block `(p, q)` is `A_{q-p}`.
    pub fn power_matrix(&self) -> QMatrix {
        let (d, r) = (self.ctx.d, self.ctx.r);
        let mut m = QMatrix::zeros(d * r, d * r);
        for p in 0..r {
            for q in p..r {
                let b = &self.blocks[q - p];
                for i in 0..d {
                    for j in 0..d {
                        m.set(p * d + i, q * d + j, b.get(i, j).clone());
                    }
                }
            }
        }
        m
    }

    /// The same operator in the context's basis.
    pub fn matrix(&self) -> QMatrix {
        let pm = self.power_matrix();
        match self.ctx.basis {
            Basis::Power => pm,
            Basis::Vector => {
                let perm: Vec<usize> = self.ctx.shuffle_permutation().iter().map(|p| p - 1).collect();
                pm.select(&perm, &perm)
            }
        }
    }

    /// Truncated product: `(AB)_k = Σ_{i+j=k} A_i B_j`.
    pub fn mul(&self, other: &BlockMatrix) -> Result<BlockMatrix> {
        if self.ctx.d != other.ctx.d || self.ctx.r != other.ctx.r {
            return domain("block matrices of different shapes");
        }
        let d = self.ctx.d;
        let mut blocks = Vec::with_capacity(self.ctx.r);
        for k in 0..self.ctx.r {
            let mut acc = QMatrix::zeros(d, d);
            for i in 0..=k {
                let prod = self.blocks[i].mul(&other.blocks[k - i])?;
                for a in 0..d {
                    for b in 0..d {
                        acc.set(a, b, acc.get(a, b) + prod.get(a, b));
                    }
                }
            }
            blocks.push(acc);
        }
        Ok(BlockMatrix { ctx: self.ctx, blocks })
    }

    pub fn is_invertible(&self) -> bool {
        self.blocks[0].rank() == self.ctx.d
    }
}

pub fn assemble_block_matrix(blocks: Vec<QMatrix>, ctx: &RectangularContext) -> Result<BlockMatrix> {
    if blocks.len() != ctx.r {
        return domain(format!("expected {} blocks, got {}", ctx.r, blocks.len()));
    }
    if blocks.iter().any(|b| b.rows() != ctx.d || b.cols() != ctx.d) {
        return domain(format!("blocks must be {0}×{0}", ctx.d));
    }
    Ok(BlockMatrix { ctx: *ctx, blocks })
}

/// A random element of the group: small rational blocks with `det A_0 ≠ 0`.
pub fn random_block_matrix<R: Rng>(ctx: &RectangularContext, rng: &mut R) -> BlockMatrix {
    loop {
        let blocks = (0..ctx.r).map(|_| small_matrix(rng, ctx.d, ctx.d)).collect();
        let a = BlockMatrix { ctx: *ctx, blocks };
        if a.is_invertible() {
            return a;
        }
    }
}

/// Plücker vector of `L_μ·A`, the `e_μ` row of `∧_l A`, in the context's
/// basis.
pub fn orbit_point(mu: &Partition, a: &BlockMatrix) -> Result<Vec<Rational>> {
    if !a.is_invertible() {
        return domain("A_0 is singular");
    }
    let idx = lattice_subspace(mu, &a.ctx)?;
    let rows: Vec<usize> = idx.elements().iter().map(|i| i - 1).collect();
    let m = a.matrix();
    let all: Vec<usize> = (0..m.cols()).collect();
    maximal_minors(&m.select(&rows, &all))
}

/// `dℓ − Σ (μ*_i)²`.
pub fn schubert_dim(mu: &Partition, ctx: &RectangularContext) -> Result<usize> {
    ctx.check(mu)?;
    let stab: usize = mu.conjugate().parts().iter().map(|c| c * c).sum();
    Ok(ctx.d * mu.size() - stab)
}

/// `Σ_{1 ≤ i ≤ j ≤ d} (μ_i − μ_j)`.
pub fn schubert_dim_pairs(mu: &Partition, d: usize) -> usize {
    let parts = mu.padded(d.max(mu.len()));
    let mut s = 0;
    for i in 0..parts.len() {
        for j in i..parts.len() {
            s += parts[i] - parts[j];
        }
    }
    s
}

/// `(d − a)ℓ − (a + 1)b` with `ℓ = ar + b`, `0 ≤ b < r`.
pub fn grassfixed_dim(ctx: &RectangularContext, l: usize) -> Result<usize> {
    if l > ctx.n() {
        return domain(format!("l = {l} exceeds n = {}", ctx.n()));
    }
    let a = l / ctx.r;
    let b = l - a * ctx.r;
    Ok((ctx.d - a) * l - (a + 1) * b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub l: usize,
    pub sigma: usize,
    pub delta: usize,
}

/// `σ` and the dimension of `Gr(ℓ,n)^T` for every `ℓ = 0..=n`.
pub fn ball_strata(ctx: &RectangularContext) -> Result<Vec<Stratum>> {
    let lambda = ctx.lambda();
    (0..=ctx.n())
        .map(|l| {
            Ok(Stratum {
                l,
                sigma: shuffle_rank(&lambda, l)?,
                delta: grassfixed_dim(ctx, l)?,
            })
        })
        .collect()
}

/// Relabels a linear form along a permutation of `{1..n}` (`perm[i-1]` is the
/// image of `i`): `p_I ↦ sign · p_{π(I)}`, the sign being that of sorting
/// `π(I)`.
pub fn permute_form(form: &Polynomial, perm: &[usize], l: usize) -> Result<Polynomial> {
    let n = perm.len();
    let subsets = subsets(n, l)?;
    let mut terms = Vec::new();
    for (v, c) in form.linear_coefficients() {
        let Some(s) = subsets.get(v) else {
            return domain(format!("variable {v} out of range"));
        };
        let image: Vec<usize> = s.elements().iter().map(|&i| perm[i - 1]).collect();
        let sign = permutation_sign(&image);
        let mut sorted = image;
        sorted.sort_unstable();
        let target = PluckerIndex::new(sorted)?.rank(n);
        terms.push((target, if sign < 0 { -&c } else { c }));
    }
    Ok(Polynomial::linear(terms))
}

/// Whether a Plücker vector satisfies every shuffle equation of `T` in the
/// context's basis and every Plücker quadric.
pub fn on_fixed_locus(point: &[Rational], ctx: &RectangularContext, l: usize) -> Result<bool> {
    let n = ctx.n();
    if point.len() != binomial(n, l) {
        return domain("Plücker vector has the wrong length");
    }
    let shuffle = shuffle_equations(&ctx.nilpotent(), l)?;
    let quadrics = plucker_quadrics(n, l)?;
    Ok(shuffle
        .basis()
        .iter()
        .chain(quadrics.iter())
        .all(|f| f.evaluate(point).is_zero()))
}

/// Samples `trials` group elements and checks that every orbit point of
/// `L_μ` lies on `Gr(ℓ,n)^T`.
pub fn verify_containment<R: Rng>(
    mu: &Partition,
    ctx: &RectangularContext,
    trials: usize,
    rng: &mut R,
) -> Result<bool> {
    let l = mu.size();
    let n = ctx.n();
    let shuffle = shuffle_equations(&ctx.nilpotent(), l)?.basis();
    let quadrics = plucker_quadrics(n, l)?;
    for _ in 0..trials {
        let point = orbit_point(mu, &random_block_matrix(ctx, rng))?;
        if !shuffle.iter().chain(quadrics.iter()).all(|f| f.evaluate(&point).is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The dominant partition in the box and its dimension report.
#[derive(Clone, Debug, Serialize)]
pub struct SchubertReport {
    pub d: usize,
    pub r: usize,
    pub l: usize,
    pub mu_max: Partition,
    pub grassfixed_dim: usize,
    pub mu: Partition,
    pub schubert_dim: usize,
    pub lattice_point: String,
    pub contained: Option<bool>,
}

pub fn report<R: Rng>(
    ctx: &RectangularContext,
    l: usize,
    mu: Option<&Partition>,
    trials: usize,
    rng: &mut R,
) -> Result<SchubertReport> {
    let top = mu_max(ctx.d, ctx.r, l)?;
    let mu = mu.cloned().unwrap_or_else(|| top.clone());
    if mu.size() != l {
        return domain(format!("{mu} is not a partition of {l}"));
    }
    let contained = if trials > 0 {
        Some(verify_containment(&mu, ctx, trials, rng)?)
    } else {
        None
    };
    Ok(SchubertReport {
        d: ctx.d,
        r: ctx.r,
        l,
        grassfixed_dim: grassfixed_dim(ctx, l)?,
        schubert_dim: schubert_dim(&mu, ctx)?,
        lattice_point: lattice_subspace(&mu, ctx)?.to_string(),
        mu_max: top,
        mu,
        contained,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::bounded_partitions;
    use crate::grassmann::span_of;
    use crate::sample::rng;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ctx(d: usize, r: usize) -> RectangularContext {
        RectangularContext::new(d, r, Basis::Power).unwrap()
    }

    #[test]
    fn lattice_points() {
        assert_eq!(lattice_subspace(&part("2,1"), &ctx(3, 2)).unwrap().to_string(), "{1,4,5}");
        assert_eq!(lattice_subspace(&part("2,2,2"), &ctx(3, 2)).unwrap().elements(), &[1, 2, 3, 4, 5, 6]);
        assert!(lattice_subspace(&Partition::empty(), &ctx(3, 2)).unwrap().is_empty());
        assert!(lattice_subspace(&part("3"), &ctx(3, 2)).is_err());
        let v = ctx(3, 2).with_basis(Basis::Vector);
        assert_eq!(lattice_subspace(&part("2,1"), &v).unwrap().to_string(), "{1,2,4}");
    }

    #[test]
    fn vector_basis_gives_jordan_matrix() {
        let c = ctx(3, 2).with_basis(Basis::Vector);
        assert_eq!(c.nilpotent().matrix(), NilpotentMatrix::jordan(&part("2,2,2")).unwrap().matrix());
        assert_eq!(c.shuffle_permutation(), vec![1, 4, 2, 5, 3, 6]);
    }

    #[test]
    fn block_matrices() {
        let c = ctx(3, 2);
        let id = assemble_block_matrix(vec![QMatrix::identity(3), QMatrix::zeros(3, 3)], &c).unwrap();
        assert_eq!(id.power_matrix(), QMatrix::identity(6));
        assert!(assemble_block_matrix(vec![QMatrix::identity(3)], &c).is_err());
        let mut g = rng(3);
        let a = random_block_matrix(&ctx(2, 3), &mut g);
        let b = random_block_matrix(&ctx(2, 3), &mut g);
        assert_eq!(a.mul(&b).unwrap().power_matrix(), a.power_matrix().mul(&b.power_matrix()).unwrap());
        // the group commutes with t
        let t = c.nilpotent();
        let a = random_block_matrix(&c, &mut g);
        let m = a.power_matrix();
        assert_eq!(m.mul(t.matrix()).unwrap(), t.matrix().mul(&m).unwrap());
    }

    #[test]
    fn identity_orbit_point() {
        let c = ctx(3, 2);
        let id = assemble_block_matrix(vec![QMatrix::identity(3), QMatrix::zeros(3, 3)], &c).unwrap();
        let pt = orbit_point(&part("2,1"), &id).unwrap();
        let k = PluckerIndex::new(vec![1, 4, 5]).unwrap().rank(6);
        assert!(pt.iter().enumerate().all(|(i, x)| x.is_zero() == (i != k)));
        let singular = assemble_block_matrix(vec![QMatrix::zeros(3, 3), QMatrix::identity(3)], &c).unwrap();
        assert!(orbit_point(&part("2,1"), &singular).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(schubert_dim(&part("2,1"), &ctx(3, 2)).unwrap(), 4);
        assert_eq!(schubert_dim(&part("2,2,2"), &ctx(3, 2)).unwrap(), 0);
        assert_eq!(schubert_dim(&part("4"), &ctx(2, 4)).unwrap(), 4);
        let dims = |d, r| (0..=d * r).map(|l| grassfixed_dim(&ctx(d, r), l).unwrap()).collect::<Vec<_>>();
        assert_eq!(dims(2, 2), vec![0, 1, 2, 1, 0]);
        assert_eq!(dims(4, 2), vec![0, 3, 6, 7, 8, 7, 6, 3, 0]);
        assert_eq!(dims(2, 4), vec![0, 1, 2, 3, 4, 3, 2, 1, 0]);
        for d in 1..=4 {
            for r in 1..=4 {
                let c = ctx(d, r);
                for l in 0..=d * r {
                    let best = bounded_partitions(d, r, l)
                        .iter()
                        .map(|m| schubert_dim(m, &c).unwrap())
                        .max()
                        .unwrap();
                    assert_eq!(best, grassfixed_dim(&c, l).unwrap());
                    assert_eq!(schubert_dim(&mu_max(d, r, l).unwrap(), &c).unwrap(), best);
                }
            }
        }
    }

    #[test]
    fn strata() {
        let s = ball_strata(&ctx(2, 2)).unwrap();
        assert_eq!(s.iter().map(|x| x.delta).collect::<Vec<_>>(), vec![0, 1, 2, 1, 0]);
        assert_eq!(s[2].sigma, 2);
    }

    #[test]
    fn containment_and_control() {
        let c = ctx(3, 2);
        let mut g = rng(11);
        assert!(verify_containment(&part("2,1"), &c, 5, &mut g).unwrap());
        let mut a = random_block_matrix(&c, &mut g);
        let mut m = a.power_matrix();
        m.set(4, 0, Rational::one());
        let rows: Vec<usize> = vec![0, 3, 4];
        let all: Vec<usize> = (0..6).collect();
        let pt = maximal_minors(&m.select(&rows, &all)).unwrap();
        assert!(!on_fixed_locus(&pt, &c, 3).unwrap());
        a.blocks[1] = QMatrix::zeros(3, 3);
        assert!(on_fixed_locus(&orbit_point(&part("2,1"), &a).unwrap(), &c, 3).unwrap());
    }

    #[test]
    fn transport_between_bases() {
        for (d, r) in [(2, 2), (3, 2), (2, 3)] {
            let v = ctx(d, r).with_basis(Basis::Vector);
            let perm = v.shuffle_permutation();
            for l in 0..=d * r {
                let jordan = shuffle_equations(&v.nilpotent(), l).unwrap();
                let power = shuffle_equations(&v.with_basis(Basis::Power).nilpotent(), l).unwrap();
                let moved: Vec<Polynomial> =
                    jordan.basis().iter().map(|f| permute_form(f, &perm, l).unwrap()).collect();
                assert_eq!(span_of(&moved).unwrap(), *power.echelon(), "d={d} r={r} l={l}");
            }
        }
    }
}
