//! Variable naming and the plain-text polynomial format.
//!
//! A polynomial prints as its terms sorted decreasingly by a monomial order,
//! e.g. `p_{1,2}*p_{3,4} - p_{1,3}*p_{2,4} + p_{1,4}*p_{2,3}`. Coefficients
//! are integers or `a/b`; unit coefficients are omitted and powers print as
//! `name^e`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::Polynomial;
use super::rational::Rational;
use crate::combinatorics::{subsets, PluckerIndex};
use crate::error::{domain, Error, Result};

/// Names for the variables of a polynomial ring over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    names: Vec<String>,
    lookup: HashMap<String, usize>,
}

pub fn plucker_name(index: &PluckerIndex) -> String {
    let s: Vec<String> = index.elements().iter().map(|e| e.to_string()).collect();
    format!("p_{{{}}}", s.join(","))
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut lookup = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.chars().any(|c| c.is_whitespace() || "+-*^/".contains(c)) {
                return domain(format!("invalid variable name {n:?}"));
            }
            if lookup.insert(n.clone(), i).is_some() {
                return domain(format!("duplicate variable name {n:?}"));
            }
        }
        Ok(Ring { names, lookup })
    }

    /// The coordinate ring of `P^(C(n,l)-1)` with variables `p_I` in the
    /// lexicographic subset order.
    pub fn plucker(n: usize, l: usize) -> Result<Self> {
        Ring::new(subsets(n, l)?.iter().map(plucker_name))
    }

    /// The subring on the listed variables of `self`, renumbered 0..k.
    pub fn restrict(&self, kept: &[usize]) -> Result<Ring> {
        Ring::new(kept.iter().map(|&v| self.names[v].clone()))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }

    pub fn gen(&self, name: &str) -> Result<Polynomial> {
        self.index_of(name)
            .map(Polynomial::var)
            .ok_or_else(|| Error::Domain(format!("unknown variable {name:?}")))
    }

    /// Substitution with bindings checked against this ring.
    pub fn substitute(
        &self,
        p: &Polynomial,
        bindings: &BTreeMap<usize, Polynomial>,
    ) -> Result<Polynomial> {
        if let Some(&v) = bindings.keys().find(|&&v| v >= self.nvars()) {
            return domain(format!("binding for unknown variable x{v}"));
        }
        Ok(p.substitute(bindings))
    }

    /// Substitution with bindings given by variable name.
    pub fn substitute_named(&self, p: &Polynomial, bindings: &[(&str, Polynomial)]) -> Result<Polynomial> {
        let mut map = BTreeMap::new();
        for (name, value) in bindings {
            let v = self
                .index_of(name)
                .ok_or_else(|| Error::Domain(format!("unknown variable {name:?}")))?;
            map.insert(v, value.clone());
        }
        Ok(p.substitute(&map))
    }

    fn write_monomial(&self, out: &mut String, m: &Monomial) {
        let mut first = true;
        for (v, e) in m.iter() {
            if !first {
                out.push('*');
            }
            first = false;
            out.push_str(&self.names[v]);
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
    }

    /// Renders `p` in the text format with terms sorted by `order`.
    pub fn format(&self, p: &Polynomial, order: &MonomialOrder) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in p.sorted_terms(order).into_iter().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let a = c.abs();
            if m.is_one() {
                let _ = write!(out, "{a}");
            } else {
                if !a.is_one() {
                    let _ = write!(out, "{a}*");
                }
                self.write_monomial(&mut out, m);
            }
        }
        out
    }

    /// Renders with terms in lexicographic order of the ring's variables.
    pub fn display(&self, p: &Polynomial) -> String {
        self.format(p, &MonomialOrder::lex())
    }

    /// Parses the text format. Whitespace inside `p_{...}` is ignored.
    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        Parser {
            ring: self,
            chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
        .polynomial()
    }
}

struct Parser<'a> {
    ring: &'a Ring,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err<T>(&self, what: &str) -> Result<T> {
        let text: String = self.chars.iter().collect();
        Err(Error::Parse(format!("{what} at offset {} in {text:?}", self.pos)))
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut p = Polynomial::zero();
        if self.chars.is_empty() {
            return self.err("empty polynomial");
        }
        let mut first = true;
        while self.pos < self.chars.len() {
            let mut sign = 1;
            match self.peek() {
                Some('+') => self.pos += 1,
                Some('-') => {
                    sign = -1;
                    self.pos += 1;
                }
                _ if first => {}
                _ => return self.err("expected + or -"),
            }
            first = false;
            let (c, m) = self.term()?;
            p.add_term(c * Rational::from_int(sign), m);
        }
        Ok(p)
    }

    fn term(&mut self) -> Result<(Rational, Monomial)> {
        let mut coeff = Rational::one();
        let mut pairs = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff = coeff * self.number()?,
                Some(c) if c.is_alphabetic() || c == '_' => {
                    let v = self.variable()?;
                    let mut e = 1u32;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        let start = self.pos;
                        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                            self.pos += 1;
                        }
                        let s: String = self.chars[start..self.pos].iter().collect();
                        e = match s.parse() {
                            Ok(e) => e,
                            Err(_) => return self.err("bad exponent"),
                        };
                    }
                    pairs.push((v, e));
                }
                _ => return self.err("expected a number or variable"),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((coeff, Monomial::from_pairs(pairs)))
    }

    fn number(&mut self) -> Result<Rational> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit() || c == '/') {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse()
    }

    fn variable(&mut self) -> Result<usize> {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        if self.peek() == Some('{') {
            while self.peek().is_some_and(|c| c != '}') {
                self.pos += 1;
            }
            if self.peek() != Some('}') {
                return self.err("unterminated '{'");
            }
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        match self.ring.index_of(&name) {
            Some(v) => Ok(v),
            None => self.err(&format!("unknown variable {name:?}")),
        }
    }
}
