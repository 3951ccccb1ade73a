//! Buchberger's algorithm on dense exponent vectors.
//!
//! Internally variable `0` is always the largest; callers renumber variables
//! through the order's precedence before entering the engine.

use std::cmp::Ordering;
use std::time::Instant;

use crate::error::{domain, Error, Result};
use crate::polyring::{OrderKind, Rational};

#[derive(Clone, Copy, Debug)]
pub(crate) struct Ctx {
    pub nv: usize,
    pub kind: OrderKind,
}

impl Ctx {
    pub fn cmp(&self, a: &[u8], da: u32, b: &[u8], db: u32) -> Ordering {
        match self.kind {
            OrderKind::DegRevLex => {
                if da != db {
                    return da.cmp(&db);
                }
                for i in (0..self.nv).rev() {
                    if a[i] != b[i] {
                        return b[i].cmp(&a[i]);
                    }
                }
                Ordering::Equal
            }
            OrderKind::Lex => {
                for i in 0..self.nv {
                    if a[i] != b[i] {
                        return a[i].cmp(&b[i]);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

pub(crate) fn support_mask(e: &[u8]) -> u64 {
    e.iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .fold(0, |m, (i, _)| m | 1u64 << (i % 64))
}

fn divides(a: &[u8], b: &[u8]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn coprime(a: &[u8], b: &[u8]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

fn lcm(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

fn degree(e: &[u8]) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

/// A polynomial with terms sorted decreasingly; exponent vectors are
/// stored back to back.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct IPoly {
    pub exps: Vec<u8>,
    pub degs: Vec<u32>,
    pub coeffs: Vec<Rational>,
}

impl IPoly {
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn exp(&self, nv: usize, k: usize) -> &[u8] {
        &self.exps[k * nv..(k + 1) * nv]
    }

    fn push(&mut self, e: &[u8], d: u32, c: Rational) {
        self.exps.extend_from_slice(e);
        self.degs.push(d);
        self.coeffs.push(c);
    }

    /// Builds a polynomial from unsorted terms, merging repeats.
    pub fn from_terms(ctx: &Ctx, mut terms: Vec<(Vec<u8>, Rational)>) -> IPoly {
        terms.sort_by(|a, b| ctx.cmp(&b.0, degree(&b.0), &a.0, degree(&a.0)));
        let mut out = IPoly::default();
        for (e, c) in terms {
            let n = out.len();
            if n > 0 && out.exp(ctx.nv, n - 1) == e.as_slice() {
                let v = &out.coeffs[n - 1] + &c;
                out.coeffs[n - 1] = v;
                continue;
            }
            let d = degree(&e);
            out.push(&e, d, c);
        }
        out.compact(ctx.nv)
    }

    fn compact(self, nv: usize) -> IPoly {
        if self.coeffs.iter().all(|c| !c.is_zero()) {
            return self;
        }
        let mut out = IPoly::default();
        for k in 0..self.len() {
            if !self.coeffs[k].is_zero() {
                out.push(self.exp(nv, k), self.degs[k], self.coeffs[k].clone());
            }
        }
        out
    }

    pub fn make_monic(&mut self) {
        if let Some(lc) = self.coeffs.first() {
            if !lc.is_one() {
                let inv = lc.recip();
                for c in &mut self.coeffs {
                    *c = &*c * &inv;
                }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degs.windows(2).all(|w| w[0] == w[1])
    }
}

/// `a[from..] - c·x^m·b[skip..]`, both already sorted.
fn sub_mul(
    ctx: &Ctx,
    a: &IPoly,
    from: usize,
    c: &Rational,
    m: &[u8],
    md: u32,
    b: &IPoly,
    skip: usize,
) -> Result<IPoly> {
    let nv = ctx.nv;
    let mut out = IPoly {
        exps: Vec::with_capacity((a.len() - from + b.len()) * nv),
        degs: Vec::with_capacity(a.len() - from + b.len()),
        coeffs: Vec::with_capacity(a.len() - from + b.len()),
    };
    let mut scratch = vec![0u8; nv];
    let (mut i, mut j) = (from, skip);
    let mut bt_valid = false;
    let mut bd = 0;
    loop {
        if !bt_valid && j < b.len() {
            let be = b.exp(nv, j);
            for v in 0..nv {
                let s = m[v] as u16 + be[v] as u16;
                if s > u8::MAX as u16 {
                    return Err(Error::Domain("exponent overflow in Groebner engine".into()));
                }
                scratch[v] = s as u8;
            }
            bd = b.degs[j] + md;
            bt_valid = true;
        }
        match (i < a.len(), j < b.len()) {
            (false, false) => break,
            (true, false) => {
                out.push(a.exp(nv, i), a.degs[i], a.coeffs[i].clone());
                i += 1;
            }
            (false, true) => {
                out.push(&scratch, bd, -(c * &b.coeffs[j]));
                j += 1;
                bt_valid = false;
            }
            (true, true) => match ctx.cmp(a.exp(nv, i), a.degs[i], &scratch, bd) {
                Ordering::Greater => {
                    out.push(a.exp(nv, i), a.degs[i], a.coeffs[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(&scratch, bd, -(c * &b.coeffs[j]));
                    j += 1;
                    bt_valid = false;
                }
                Ordering::Equal => {
                    let v = &a.coeffs[i] - &(c * &b.coeffs[j]);
                    if !v.is_zero() {
                        out.push(a.exp(nv, i), a.degs[i], v);
                    }
                    i += 1;
                    j += 1;
                    bt_valid = false;
                }
            },
        }
    }
    Ok(out)
}

/// Monic basis elements with cached leading data.
#[derive(Clone, Debug)]
pub(crate) struct Element {
    pub poly: IPoly,
    pub lm: Vec<u8>,
    pub lm_deg: u32,
    pub mask: u64,
}

impl Element {
    pub fn new(nv: usize, mut poly: IPoly) -> Element {
        poly.make_monic();
        let lm = poly.exp(nv, 0).to_vec();
        Element {
            lm_deg: poly.degs[0],
            mask: support_mask(&lm),
            lm,
            poly,
        }
    }
}

/// Fully reduces `f` modulo the elements listed in `active`.
pub(crate) fn reduce(
    ctx: &Ctx,
    f: IPoly,
    elems: &[Element],
    active: &[usize],
    deadline: Option<Instant>,
) -> Result<IPoly> {
    let nv = ctx.nv;
    let mut done = IPoly::default();
    let mut work = f;
    let mut start = 0usize;
    let mut steps = 0u32;
    let mut quotient = vec![0u8; nv];
    while start < work.len() {
        steps = steps.wrapping_add(1);
        if steps % 256 == 0 {
            check_deadline(deadline)?;
        }
        let e = work.exp(nv, start);
        let emask = support_mask(e);
        let divisor = active.iter().copied().find(|&g| {
            let el = &elems[g];
            el.mask & !emask == 0 && el.lm_deg <= work.degs[start] && divides(&el.lm, e)
        });
        match divisor {
            None => {
                done.push(e, work.degs[start], work.coeffs[start].clone());
                start += 1;
            }
            Some(g) => {
                let el = &elems[g];
                for v in 0..nv {
                    quotient[v] = e[v] - el.lm[v];
                }
                let qd = work.degs[start] - el.lm_deg;
                let c = work.coeffs[start].clone();
                work = sub_mul(ctx, &work, start + 1, &c, &quotient, qd, &el.poly, 1)?;
                start = 0;
            }
        }
    }
    Ok(done)
}

fn check_deadline(deadline: Option<Instant>) -> Result<()> {
    if let Some(d) = deadline {
        let now = Instant::now();
        if now > d {
            return Err(Error::Timeout(0.0));
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Vec<u8>,
    deg: u32,
}

fn spoly(ctx: &Ctx, a: &Element, b: &Element, l: &[u8], ld: u32) -> Result<IPoly> {
    let nv = ctx.nv;
    let ma: Vec<u8> = (0..nv).map(|v| l[v] - a.lm[v]).collect();
    let mb: Vec<u8> = (0..nv).map(|v| l[v] - b.lm[v]).collect();
    let zero = IPoly::default();
    let one = Rational::one();
    let left = sub_mul(ctx, &zero, 0, &-&one, &ma, ld - a.lm_deg, &a.poly, 1)?;
    sub_mul(ctx, &left, 0, &one, &mb, ld - b.lm_deg, &b.poly, 1)
}

/// Statistics of one run, useful for tuning.
#[derive(Clone, Copy, Debug, Default)]
pub struct Stats {
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub basis_size: usize,
}

/// Computes the reduced Gröbner basis of the given polynomials. Returns the
/// monic basis sorted by increasing leading monomial.
pub(crate) fn groebner(
    ctx: &Ctx,
    input: Vec<IPoly>,
    deadline: Option<Instant>,
) -> Result<(Vec<IPoly>, Stats)> {
    let nv = ctx.nv;
    if nv > 64 * 4 {
        return domain("too many variables for the Groebner engine");
    }
    let mut stats = Stats::default();
    let mut input: Vec<IPoly> = input.into_iter().filter(|p| !p.is_zero()).collect();
    input.sort_by(|a, b| ctx.cmp(a.exp(nv, 0), a.degs[0], b.exp(nv, 0), b.degs[0]));

    let mut elems: Vec<Element> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    // sorted so that the smallest lcm is last
    let mut pairs: Vec<Pair> = Vec::new();

    let add = |h: IPoly,
                   elems: &mut Vec<Element>,
                   active: &mut Vec<usize>,
                   pairs: &mut Vec<Pair>|
     -> bool {
        let el = Element::new(nv, h);
        if el.lm_deg == 0 {
            elems.push(el);
            active.clear();
            active.push(elems.len() - 1);
            pairs.clear();
            return true;
        }
        let hi = elems.len();
        elems.push(el);
        update(ctx, elems, active, pairs, hi);
        false
    };

    for f in input {
        check_deadline(deadline)?;
        let h = reduce(ctx, f, &elems, &active, deadline)?;
        if h.is_zero() {
            continue;
        }
        if add(h, &mut elems, &mut active, &mut pairs) {
            return finish(ctx, elems, active, stats, deadline);
        }
    }

    while let Some(p) = pairs.pop() {
        check_deadline(deadline)?;
        stats.pairs_reduced += 1;
        let s = spoly(ctx, &elems[p.i], &elems[p.j], &p.lcm, p.deg)?;
        let h = reduce(ctx, s, &elems, &active, deadline)?;
        if h.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        if add(h, &mut elems, &mut active, &mut pairs) {
            return finish(ctx, elems, active, stats, deadline);
        }
    }
    finish(ctx, elems, active, stats, deadline)
}

/// Gebauer–Möller installation of the new element `h`.
fn update(ctx: &Ctx, elems: &[Element], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let lh = &elems[h].lm;
    let cand: Vec<Pair> = active
        .iter()
        .map(|&g| {
            let l = lcm(lh, &elems[g].lm);
            let deg = degree(&l);
            Pair { i: g, j: h, lcm: l, deg }
        })
        .collect();
    let copr: Vec<bool> = cand.iter().map(|p| coprime(lh, &elems[p.i].lm)).collect();

    // chain criterion among the new pairs
    let mut keep = vec![true; cand.len()];
    for a in 0..cand.len() {
        if copr[a] {
            continue;
        }
        for b in 0..cand.len() {
            if a == b || !keep[b] {
                continue;
            }
            if divides(&cand[b].lcm, &cand[a].lcm) && (cand[b].lcm != cand[a].lcm || b < a) {
                keep[a] = false;
                break;
            }
        }
    }
    // a coprime pair kept by the chain test is dropped outright, and so is
    // every pair sharing its lcm
    let mut dropped_lcms: Vec<&[u8]> = Vec::new();
    for a in 0..cand.len() {
        if keep[a] && copr[a] {
            dropped_lcms.push(&cand[a].lcm);
        }
    }
    let mut fresh: Vec<Pair> = Vec::new();
    for a in 0..cand.len() {
        if keep[a] && !copr[a] && !dropped_lcms.iter().any(|l| *l == cand[a].lcm.as_slice()) {
            fresh.push(cand[a].clone());
        }
    }

    // old pairs made redundant by h
    pairs.retain(|p| {
        if !divides(lh, &p.lcm) {
            return true;
        }
        let li = lcm(&elems[p.i].lm, lh);
        let lj = lcm(&elems[p.j].lm, lh);
        li == p.lcm || lj == p.lcm
    });

    active.retain(|&g| !divides(lh, &elems[g].lm));
    active.push(h);

    // merge, keeping the smallest lcm last
    let key = |p: &Pair, q: &Pair| -> Ordering {
        ctx.cmp(&q.lcm, q.deg, &p.lcm, p.deg)
            .then_with(|| (q.j, q.i).cmp(&(p.j, p.i)))
    };
    fresh.sort_by(key);
    let old = std::mem::take(pairs);
    let mut merged = Vec::with_capacity(old.len() + fresh.len());
    let (mut a, mut b) = (old.into_iter().peekable(), fresh.into_iter().peekable());
    loop {
        match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => merged.push(a.next().unwrap()),
            (None, Some(_)) => merged.push(b.next().unwrap()),
            (Some(x), Some(y)) => {
                if key(x, y) != Ordering::Greater {
                    merged.push(a.next().unwrap());
                } else {
                    merged.push(b.next().unwrap());
                }
            }
        }
    }
    *pairs = merged;
}

fn finish(
    ctx: &Ctx,
    elems: Vec<Element>,
    active: Vec<usize>,
    mut stats: Stats,
    deadline: Option<Instant>,
) -> Result<(Vec<IPoly>, Stats)> {
    let nv = ctx.nv;
    let mut basis: Vec<Element> = active.iter().map(|&g| elems[g].clone()).collect();
    basis.sort_by(|a, b| ctx.cmp(&a.lm, a.lm_deg, &b.lm, b.lm_deg));
    // tails reduced against the other elements
    let mut reduced = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let others: Vec<usize> = (0..basis.len()).filter(|&o| o != k).collect();
        let p = &basis[k].poly;
        let mut head = IPoly::default();
        head.push(p.exp(nv, 0), p.degs[0], p.coeffs[0].clone());
        let tail = IPoly {
            exps: p.exps[nv..].to_vec(),
            degs: p.degs[1..].to_vec(),
            coeffs: p.coeffs[1..].to_vec(),
        };
        let t = reduce(ctx, tail, &basis, &others, deadline)?;
        head.exps.extend_from_slice(&t.exps);
        head.degs.extend_from_slice(&t.degs);
        head.coeffs.extend(t.coeffs);
        head.make_monic();
        reduced.push(head);
    }
    stats.basis_size = reduced.len();
    Ok((reduced, stats))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(nv: usize) -> Ctx {
        Ctx {
            nv,
            kind: OrderKind::DegRevLex,
        }
    }

    fn poly(c: &Ctx, terms: &[(i64, &[u8])]) -> IPoly {
        IPoly::from_terms(c, terms.iter().map(|(k, e)| (e.to_vec(), Rational::from_int(*k))).collect())
    }

    #[test]
    fn twisted_cubic() {
        // x z - y^2, x w - y z, y w - z^2 is already a Groebner basis
        let c = ctx(4);
        let gens = vec![
            poly(&c, &[(1, &[1, 0, 1, 0]), (-1, &[0, 2, 0, 0])]),
            poly(&c, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])]),
            poly(&c, &[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2, 0])]),
        ];
        let (g, _) = groebner(&c, gens, None).unwrap();
        assert_eq!(g.len(), 3);
    }

    #[test]
    fn unit_ideal() {
        let c = ctx(2);
        let gens = vec![
            poly(&c, &[(1, &[1, 0]), (-1, &[0, 0])]),
            poly(&c, &[(1, &[1, 0])]),
        ];
        let (g, _) = groebner(&c, gens, None).unwrap();
        assert_eq!(g, vec![poly(&c, &[(1, &[0, 0])])]);
    }
}
