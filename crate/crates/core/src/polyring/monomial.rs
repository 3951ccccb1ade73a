use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// A power product stored sparsely as `(variable, exponent)` pairs sorted by
/// variable, with no zero exponents.
///
/// The derived `Ord` is a storage order only; term orders live in
/// [`MonomialOrder`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: usize) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: usize, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        Monomial {
            exps: vec![(v as u32, e)],
            degree: e,
        }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs,
    /// merging repeats and dropping zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut exps: Vec<(u32, u32)> = pairs
            .into_iter()
            .filter(|&(_, e)| e > 0)
            .map(|(v, e)| (v as u32, e))
            .collect();
        exps.sort_unstable();
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        let degree = merged.iter().map(|p| p.1).sum();
        Monomial {
            exps: merged,
            degree,
        }
    }

    /// Builds a monomial from a dense exponent vector.
    pub fn from_dense(exps: &[u32]) -> Self {
        Self::from_pairs(exps.iter().enumerate().map(|(v, &e)| (v, e)))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: usize) -> u32 {
        match self.exps.binary_search_by_key(&(v as u32), |p| p.0) {
            Ok(i) => self.exps[i].1,
            Err(_) => 0,
        }
    }

    /// `(variable, exponent)` pairs in increasing variable order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|&(v, e)| (v as usize, e))
    }

    /// Largest variable index present, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.exps.last().map(|p| p.0 as usize)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, b) = (self.exps[i], other.exps[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    exps.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.iter().all(|(v, e)| other.exponent(v) >= e)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::from_pairs(
            other.iter().map(|(v, e)| (v, e - self.exponent(v))),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let vars = self.iter().chain(other.iter()).map(|(v, _)| v);
        let mut pairs: Vec<(usize, u32)> = vars
            .map(|v| (v, self.exponent(v).max(other.exponent(v))))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        Monomial::from_pairs(pairs)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial::from_pairs(self.iter().map(|(v, x)| (v, x * e)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    DegRevLex,
    Lex,
}

/// A term order together with a variable precedence.
///
/// `precedence[k]` is the variable of rank `k`; rank 0 is the largest
/// variable. With no explicit precedence, variable 0 is the largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    rank_of: Option<Vec<usize>>,
}

impl MonomialOrder {
    pub fn degrevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::DegRevLex,
            rank_of: None,
        }
    }

    pub fn lex() -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            rank_of: None,
        }
    }

    /// Order of the given kind with `precedence[k]` the rank-`k` variable.
    /// Returns `None` unless `precedence` is a permutation of `0..len`.
    pub fn with_precedence(kind: OrderKind, precedence: &[usize]) -> Option<Self> {
        let mut rank_of = vec![usize::MAX; precedence.len()];
        for (rank, &v) in precedence.iter().enumerate() {
            if v >= precedence.len() || rank_of[v] != usize::MAX {
                return None;
            }
            rank_of[v] = rank;
        }
        Some(MonomialOrder {
            kind,
            rank_of: Some(rank_of),
        })
    }

    /// Rank of variable `v` (0 = largest).
    pub fn rank(&self, v: usize) -> usize {
        match &self.rank_of {
            Some(r) => r.get(v).copied().unwrap_or(v),
            None => v,
        }
    }

    /// Number of variables the precedence covers, if one was given.
    pub fn precedence_len(&self) -> Option<usize> {
        self.rank_of.as_ref().map(|r| r.len())
    }

    fn ranked(&self, m: &Monomial) -> Vec<(usize, u32)> {
        let mut v: Vec<(usize, u32)> = m.iter().map(|(x, e)| (self.rank(x), e)).collect();
        if self.rank_of.is_some() {
            v.sort_unstable();
        }
        v
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ra, rb) = (self.ranked(a), self.ranked(b));
        match self.kind {
            OrderKind::Lex => {
                // first rank where exponents differ; larger exponent wins
                let (mut i, mut j) = (0, 0);
                loop {
                    match (ra.get(i), rb.get(j)) {
                        (None, None) => return Ordering::Equal,
                        (Some(_), None) => return Ordering::Greater,
                        (None, Some(_)) => return Ordering::Less,
                        (Some(&(x, e)), Some(&(y, f))) => {
                            if x != y {
                                return if x < y {
                                    Ordering::Greater
                                } else {
                                    Ordering::Less
                                };
                            }
                            if e != f {
                                return e.cmp(&f);
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                }
            }
            OrderKind::DegRevLex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    o => return o,
                }
                // last rank where exponents differ; smaller exponent wins
                let (mut i, mut j) = (ra.len(), rb.len());
                loop {
                    match (i.checked_sub(1), j.checked_sub(1)) {
                        (None, None) => return Ordering::Equal,
                        (Some(_), None) => return Ordering::Less,
                        (None, Some(_)) => return Ordering::Greater,
                        (Some(ii), Some(jj)) => {
                            let ((x, e), (y, f)) = (ra[ii], rb[jj]);
                            if x != y {
                                return if x > y {
                                    Ordering::Less
                                } else {
                                    Ordering::Greater
                                };
                            }
                            if e != f {
                                return f.cmp(&e);
                            }
                            i = ii;
                            j = jj;
                        }
                    }
                }
            }
        }
    }
}

impl Default for MonomialOrder {
    fn default() -> Self {
        Self::degrevlex()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_dense(e)
    }

    #[test]
    fn arithmetic() {
        let a = m(&[1, 0, 2]);
        let b = m(&[0, 3, 1]);
        assert_eq!(a.mul(&b), m(&[1, 3, 3]));
        assert_eq!(a.lcm(&b), m(&[1, 3, 2]));
        assert!(m(&[1, 0, 1]).divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(m(&[1]).quotient_of(&a), Some(m(&[0, 0, 2])));
        assert_eq!(a.degree(), 3);
        assert_eq!(Monomial::from_pairs([(2, 1), (0, 1), (2, 0), (0, 2)]), m(&[3, 0, 1]));
    }

    #[test]
    fn degrevlex_matches_textbook() {
        let o = MonomialOrder::degrevlex();
        // x0 > x1 > x2; x1^2 > x0 x2 in degrevlex
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[0, 2, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[1, 1])), Ordering::Equal);
        let lex = MonomialOrder::lex();
        assert_eq!(lex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
        assert_eq!(lex.cmp(&m(&[0, 0, 3]), &m(&[1, 1, 0])), Ordering::Less);
    }

    #[test]
    fn precedence_reverses() {
        let o = MonomialOrder::with_precedence(OrderKind::Lex, &[2, 1, 0]).unwrap();
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[5, 0, 0])), Ordering::Greater);
        assert!(MonomialOrder::with_precedence(OrderKind::Lex, &[0, 0]).is_none());
    }
}
