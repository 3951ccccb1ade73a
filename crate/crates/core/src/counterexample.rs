//! The fixed-point locus of `λ = (4,2,2)` on `Gr(4,8)`, whose shuffle ideal is
//! not radical: three components given by explicit matrix families, and the
//! coordinate `p_{1,4,6,8}` that lies in the radical but not in the ideal.

use rand::Rng;
use serde::Serialize;

use crate::combinatorics::{Partition, PluckerIndex};
use crate::error::{domain, Result};
use crate::grassmann::{plucker_var, shuffle_ideal, NilpotentMatrix, ShuffleIdeal};
use crate::groebner::{member_with, Budget};
use crate::polyring::{maximal_minors, Polynomial, QMatrix, Rational};
use crate::sample::{nonzero_small_rational, small_rational, SampleRng};

pub const N: usize = 8;
pub const L: usize = 4;

pub fn lambda() -> Partition {
    Partition::new(vec![4, 2, 2]).expect("valid partition")
}

pub fn nilpotent() -> NilpotentMatrix {
    NilpotentMatrix::jordan(&lambda()).expect("valid partition")
}

pub fn ideal() -> Result<ShuffleIdeal> {
    shuffle_ideal(&nilpotent(), L)
}

/// The coordinate `p_{1,4,6,8}`.
pub fn missing_form() -> Polynomial {
    coordinate(&[1, 4, 6, 8])
}

fn coordinate(elements: &[usize]) -> Polynomial {
    let idx = PluckerIndex::new(elements.to_vec()).expect("valid subset");
    Polynomial::var(plucker_var(&idx, N))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentName {
    SegreA,
    SegreB,
    Nonreduced,
}

impl ComponentName {
    pub fn as_str(self) -> &'static str {
        match self {
            ComponentName::SegreA => "segre_a",
            ComponentName::SegreB => "segre_b",
            ComponentName::Nonreduced => "nonreduced",
        }
    }
}

/// A `4×8` matrix whose entries are polynomials in named parameters, with
/// polynomial constraints on the parameters.
#[derive(Clone, Debug)]
pub struct ComponentParametrization {
    pub name: ComponentName,
    pub params: Vec<&'static str>,
    pub template: Vec<Vec<Polynomial>>,
    pub constraints: Vec<Polynomial>,
}

/// Builds a template from a grid of cells: `0`, `1`, or a parameter index.
fn grid(cells: [[i8; 8]; 4]) -> Vec<Vec<Polynomial>> {
    cells
        .iter()
        .map(|row| {
            row.iter()
                .map(|&c| match c {
                    0 => Polynomial::zero(),
                    1 => Polynomial::one(),
                    k => Polynomial::var((k - 2) as usize),
                })
                .collect()
        })
        .collect()
}

impl ComponentParametrization {
    pub fn evaluate(&self, values: &[Rational]) -> Result<QMatrix> {
        if values.len() != self.params.len() {
            return domain(format!("{} expects {} parameters", self.name.as_str(), self.params.len()));
        }
        let rows = self
            .template
            .iter()
            .map(|row| row.iter().map(|e| e.evaluate(values)).collect())
            .collect();
        QMatrix::from_rows(rows)
    }

    pub fn satisfies_constraints(&self, values: &[Rational]) -> bool {
        self.constraints.iter().all(|c| c.evaluate(values).is_zero())
    }

    /// Random admissible parameters. The rank-one trace-zero block of the
    /// non-reduced component is sampled as `u·vᵀ` with `v·u = 0`.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Vec<Rational> {
        match self.name {
            ComponentName::SegreA | ComponentName::SegreB => {
                (0..self.params.len()).map(|_| small_rational(rng)).collect()
            }
            ComponentName::Nonreduced => {
                let u = [small_rational(rng), small_rational(rng), nonzero_small_rational(rng)];
                let v1 = small_rational(rng);
                let v2 = small_rational(rng);
                let v3 = -(&v1 * &u[0] + &v2 * &u[1]) / &u[2];
                rank_one_block(&u, &[v1, v2, v3])
            }
        }
    }
}

/// Entries of `u·vᵀ` in row-major order.
pub fn rank_one_block(u: &[Rational; 3], v: &[Rational; 3]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(9);
    for ui in u {
        for vj in v {
            out.push(ui * vj);
        }
    }
    out
}

pub fn component_templates() -> Vec<ComponentParametrization> {
    // parameter k is written as k + 2 in the grids
    let (a, b, c, d, e, f, g, h, i) = (2, 3, 4, 5, 6, 7, 8, 9, 10);
    let segre_a = ComponentParametrization {
        name: ComponentName::SegreA,
        params: vec!["a", "b", "c", "d"],
        template: grid([
            [1, 0, 0, 0, a, b, c, d],
            [0, 1, 0, 0, 0, a, 0, c],
            [0, 0, 1, 0, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0, 0, 0],
        ]),
        constraints: vec![],
    };
    let segre_b = ComponentParametrization {
        name: ComponentName::SegreB,
        params: vec!["a", "b", "c", "d"],
        template: grid([
            [0, 0, a, b, 1, 0, 0, 0],
            [0, 0, 0, a, 0, 1, 0, 0],
            [0, 0, c, d, 0, 0, 1, 0],
            [0, 0, 0, c, 0, 0, 0, 1],
        ]),
        constraints: vec![],
    };
    let x = |k: usize| Polynomial::var(k);
    let mut constraints = vec![&(&x(0) + &x(4)) + &x(8)];
    for (r1, r2) in [(0, 1), (0, 2), (1, 2)] {
        for (c1, c2) in [(0, 1), (0, 2), (1, 2)] {
            constraints.push(&(&x(3 * r1 + c1) * &x(3 * r2 + c2)) - &(&x(3 * r1 + c2) * &x(3 * r2 + c1)));
        }
    }
    let nonreduced = ComponentParametrization {
        name: ComponentName::Nonreduced,
        params: vec!["a", "b", "c", "d", "e", "f", "g", "h", "i"],
        template: grid([
            [0, a, 1, 0, b, 0, c, 0],
            [0, 0, 0, 1, 0, 0, 0, 0],
            [0, d, 0, 0, e, 1, f, 0],
            [0, g, 0, 0, h, 0, i, 1],
        ]),
        constraints,
    };
    vec![segre_a, segre_b, nonreduced]
}

/// Plücker coordinates spanning the coordinate subspace that contains each
/// component.
pub fn ambient_support(name: ComponentName) -> Vec<PluckerIndex> {
    let sets: &[&str] = match name {
        ComponentName::SegreA => &[
            "1234", "1346", "1348", "2345", "2346", "2347", "2348", "3456", "3458", "3467", "3468", "3478",
        ],
        ComponentName::SegreB => &[
            "3456", "3458", "3467", "3468", "3478", "3568", "3678", "4567", "4568", "4578", "4678", "5678",
        ],
        ComponentName::Nonreduced => &[
            "3468", "2346", "2348", "2468", "3456", "3458", "3467", "3478", "4568", "4678",
        ],
    };
    sets.iter().map(|s| s.parse().expect("valid subset")).collect()
}

/// The Jordan type of `t` restricted to the row space of `basis`, from the
/// ranks of `basis·t^k`. Errors unless the row space is `t`-invariant.
pub fn jordan_type(t: &QMatrix, basis: &QMatrix) -> Result<Partition> {
    let dim = basis.rank();
    if !is_invariant(t, basis)? {
        return domain("subspace is not invariant");
    }
    let mut ranks = vec![dim];
    let mut power = basis.clone();
    while *ranks.last().unwrap() > 0 {
        power = power.mul(t)?;
        let r = power.rank();
        if r == *ranks.last().unwrap() {
            return domain("restriction is not nilpotent");
        }
        ranks.push(r);
    }
    // ranks[k-1] - ranks[k] counts blocks of size ≥ k
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Partition::new(at_least).map(|p| p.conjugate())
}

fn stack(a: &QMatrix, b: &QMatrix) -> Result<QMatrix> {
    let rows = (0..a.rows())
        .map(|i| a.row(i).to_vec())
        .chain((0..b.rows()).map(|i| b.row(i).to_vec()))
        .collect();
    QMatrix::from_rows(rows)
}

/// Whether the row space of `basis` is mapped into itself by `t`.
pub fn is_invariant(t: &QMatrix, basis: &QMatrix) -> Result<bool> {
    Ok(stack(basis, &basis.mul(t)?)?.rank() == basis.rank())
}

/// Checks that a point has rank 4, is `T`-fixed, and is a zero of every
/// generator of `J`.
pub fn check_point(m: &QMatrix, t: &NilpotentMatrix, gens: &[Polynomial]) -> Result<bool> {
    if m.rank() != L || !is_invariant(t.matrix(), m)? {
        return Ok(false);
    }
    let point = maximal_minors(m)?;
    Ok(gens.iter().all(|g| g.evaluate(&point).is_zero()))
}

/// Samples `trials` points of the component and checks each one.
pub fn verify_component(c: &ComponentParametrization, trials: usize, rng: &mut SampleRng) -> Result<bool> {
    let t = nilpotent();
    let gens = ideal()?.generators();
    for _ in 0..trials {
        let values = c.sample(rng);
        if !c.satisfies_constraints(&values) {
            return Ok(false);
        }
        if !check_point(&c.evaluate(&values)?, &t, &gens)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// Membership of `p` and `p²` in `J`.
pub fn membership(p: &Polynomial, budget: Budget) -> Result<(bool, bool)> {
    let j = ideal()?;
    let gens = j.generators();
    let nv = j.nvars();
    Ok((member_with(p, &gens, nv, budget)?, member_with(&p.pow(2), &gens, nv, budget)?))
}

/// `p_{1,4,6,8} ∉ J`, `p_{1,4,6,8}² ∈ J`, and `p_{1,4,6,8}` vanishes on
/// `trials` sampled points of every component.
pub fn verify_missing_linear_form(trials: usize, rng: &mut SampleRng, budget: Budget) -> Result<bool> {
    let p = missing_form();
    let (linear_in, square_in) = membership(&p, budget)?;
    if linear_in || !square_in {
        return Ok(false);
    }
    for c in component_templates() {
        for _ in 0..trials {
            let point = maximal_minors(&c.evaluate(&c.sample(rng))?)?;
            if !p.evaluate(&point).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every check, in a fixed order.
pub fn run_checks(trials: usize, rng: &mut SampleRng, budget: Budget) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let p = missing_form();
    let (linear_in, square_in) = membership(&p, budget)?;
    out.push(Check {
        name: "p_{1,4,6,8} not in J".into(),
        passed: !linear_in,
    });
    out.push(Check {
        name: "p_{1,4,6,8}^2 in J".into(),
        passed: square_in,
    });
    for c in component_templates() {
        out.push(Check {
            name: format!("{} points lie on J ({trials} trials)", c.name.as_str()),
            passed: verify_component(&c, trials, rng)?,
        });
        let support = ambient_support(c.name);
        let vars: Vec<usize> = support.iter().map(|s| plucker_var(s, N)).collect();
        let mut inside = true;
        let mut vanishes = true;
        for _ in 0..trials {
            let point = maximal_minors(&c.evaluate(&c.sample(rng))?)?;
            inside &= point.iter().enumerate().all(|(k, x)| x.is_zero() || vars.contains(&k));
            vanishes &= p.evaluate(&point).is_zero();
        }
        out.push(Check {
            name: format!("{} points lie in their coordinate subspace", c.name.as_str()),
            passed: inside,
        });
        out.push(Check {
            name: format!("p_{{1,4,6,8}} vanishes on {}", c.name.as_str()),
            passed: vanishes,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::rng;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn templates_at_zero() {
        let t = component_templates();
        let zeros = |c: &ComponentParametrization| vec![Rational::zero(); c.params.len()];
        let pa = maximal_minors(&t[0].evaluate(&zeros(&t[0])).unwrap()).unwrap();
        let pb = maximal_minors(&t[1].evaluate(&zeros(&t[1])).unwrap()).unwrap();
        let k1234 = plucker_var(&"{1,2,3,4}".parse().unwrap(), N);
        let k5678 = plucker_var(&"{5,6,7,8}".parse().unwrap(), N);
        assert!(pa.iter().enumerate().all(|(k, x)| x.is_zero() == (k != k1234)));
        assert!(pb.iter().enumerate().all(|(k, x)| x.is_zero() == (k != k5678)));
        assert!(t[2].satisfies_constraints(&zeros(&t[2])));
        let gens = ideal().unwrap().generators();
        assert!(check_point(&t[2].evaluate(&zeros(&t[2])).unwrap(), &nilpotent(), &gens).unwrap());
    }

    #[test]
    fn components_lie_on_j() {
        let mut g = rng(7);
        for c in component_templates() {
            assert!(verify_component(&c, 5, &mut g).unwrap(), "{}", c.name.as_str());
        }
    }

    #[test]
    fn perturbed_template_fails() {
        let mut c = component_templates().remove(0);
        c.template[1][4] = Polynomial::one();
        assert!(!verify_component(&c, 3, &mut rng(1)).unwrap());
    }

    #[test]
    fn module_types() {
        let t = nilpotent();
        let c = component_templates();
        let vals = [r(2), r(-1), r(3), r(5)];
        let ta = jordan_type(t.matrix(), &c[0].evaluate(&vals).unwrap()).unwrap();
        let tb = jordan_type(t.matrix(), &c[1].evaluate(&vals).unwrap()).unwrap();
        assert_eq!(ta, "4".parse().unwrap());
        assert_eq!(tb, "2,2".parse().unwrap());
        // u·vᵀ with v·u = 0: generic, zero first column, and a single row
        let cases = [
            ([r(1), r(2), r(1)], [r(1), r(1), r(-3)], "3,1"),
            ([r(1), r(2), r(1)], [r(0), r(1), r(-2)], "2,2"),
            ([r(1), r(0), r(0)], [r(0), r(1), r(1)], "2,1,1"),
        ];
        for (u, v, expected) in cases {
            let vals = rank_one_block(&u, &v);
            assert!(c[2].satisfies_constraints(&vals));
            let ty = jordan_type(t.matrix(), &c[2].evaluate(&vals).unwrap()).unwrap();
            assert_eq!(ty, expected.parse().unwrap());
        }
    }

    #[test]
    fn jordan_type_rejects_non_invariant() {
        let t = nilpotent();
        let mut m = QMatrix::zeros(1, 8);
        m.set(0, 0, Rational::one());
        assert!(jordan_type(t.matrix(), &m).is_err());
    }
}
