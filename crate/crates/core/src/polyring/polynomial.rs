use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::{Monomial, MonomialOrder};
use super::rational::Rational;

/// A sparse multivariate polynomial with rational coefficients.
///
/// Variables are plain indices; a [`Ring`](super::Ring) supplies their names.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: usize) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Linear form `Σ c_v x_v`.
    pub fn linear(coeffs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut p = Polynomial::zero();
        for (v, c) in coeffs {
            p.add_term(c, Monomial::var(v));
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, Monomial)>) -> Self {
        let mut p = Polynomial::zero();
        for (c, m) in terms {
            p.add_term(c, m);
        }
        p
    }

    pub fn add_term(&mut self, c: Rational, m: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms sorted decreasingly by `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| order.cmp(b.0, a.0));
        t
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Homogeneous of degree one.
    pub fn is_linear_form(&self) -> bool {
        !self.is_zero() && self.terms.keys().all(|m| m.degree() == 1)
    }

    /// Coefficients of a linear form, keyed by variable. Terms of other
    /// degrees are ignored.
    pub fn linear_coefficients(&self) -> BTreeMap<usize, Rational> {
        self.terms
            .iter()
            .filter(|(m, _)| m.degree() == 1)
            .map(|(m, c)| (m.max_var().unwrap(), c.clone()))
            .collect()
    }

    /// One past the largest variable index used.
    pub fn var_bound(&self) -> usize {
        self.terms
            .keys()
            .filter_map(|m| m.max_var())
            .max()
            .map_or(0, |v| v + 1)
    }

    pub fn variables(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .terms
            .keys()
            .flat_map(|m| m.iter().map(|(x, _)| x))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => Polynomial::zero(),
        }
    }

    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(t, x)| (t.mul(m), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a point given densely by variable index; missing
    /// coordinates count as zero.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut total = Rational::zero();
        'terms: for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, e) in m.iter() {
                match point.get(x) {
                    Some(val) if !val.is_zero() => v *= &val.pow(e),
                    _ => continue 'terms,
                }
            }
            total += &v;
        }
        total
    }

    /// Replaces variables by polynomials. Variables without a binding are
    /// kept.
    pub fn substitute(&self, bindings: &BTreeMap<usize, Polynomial>) -> Polynomial {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut out = Polynomial::zero();
        let mut power_cache: BTreeMap<(usize, u32), Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(c.clone());
            let mut kept = Vec::new();
            for (x, e) in m.iter() {
                match bindings.get(&x) {
                    Some(value) => {
                        let p = power_cache
                            .entry((x, e))
                            .or_insert_with(|| value.pow(e));
                        acc = &acc * &*p;
                    }
                    None => kept.push((x, e)),
                }
                if acc.is_zero() {
                    break;
                }
            }
            if acc.is_zero() {
                continue;
            }
            let rest = Monomial::from_pairs(kept);
            for (t, x) in acc.terms {
                out.add_term(x, t.mul(&rest));
            }
        }
        out
    }

    /// Renames variables through `map`; unmapped variables are an error
    /// reported as `Err(var)`.
    pub fn rename(&self, map: impl Fn(usize) -> Option<usize>) -> Result<Polynomial, usize> {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut pairs = Vec::new();
            for (x, e) in m.iter() {
                pairs.push((map(x).ok_or(x)?, e));
            }
            out.add_term(c.clone(), Monomial::from_pairs(pairs));
        }
        Ok(out)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-c, m.clone());
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(x * y, a.mul(b));
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&Rational::from_int(-1))
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(v: usize) -> Polynomial {
        Polynomial::var(v)
    }

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn substitution() {
        let p = &x(0) * &x(0);
        let mut b = BTreeMap::new();
        b.insert(0, Polynomial::constant(Rational::new(3, 2)));
        assert_eq!(p.substitute(&b), Polynomial::constant(Rational::new(9, 4)));
        assert_eq!(p.substitute(&BTreeMap::new()), p);
        // (x0 + x1)^2 with x1 -> -x0 vanishes
        let s = (&x(0) + &x(1)).pow(2);
        let mut b = BTreeMap::new();
        b.insert(1, -&x(0));
        assert!(s.substitute(&b).is_zero());
    }

    #[test]
    fn evaluation() {
        let p = &(&x(0) * &x(1)) - &x(2).scale(&q(3));
        assert_eq!(p.evaluate(&[q(2), q(5), q(1)]), q(7));
        assert_eq!(p.evaluate(&[q(2)]), Rational::zero());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((-5i64..5, 0u32..3, 0u32..3, 0u32..3), 0..5).prop_map(|ts| {
            Polynomial::from_terms(
                ts.into_iter()
                    .map(|(c, a, b, d)| (q(c), Monomial::from_dense(&[a, b, d]))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), v in proptest::collection::vec(-4i64..4, 3)) {
            let pt: Vec<Rational> = v.into_iter().map(q).collect();
            prop_assert_eq!((&a * &b).evaluate(&pt), &a.evaluate(&pt) * &b.evaluate(&pt));
            prop_assert_eq!((&a + &b).evaluate(&pt), &a.evaluate(&pt) + &b.evaluate(&pt));
        }
    }
}
