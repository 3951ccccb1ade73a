//! Hilbert series numerators of monomial ideals.
//!
//! `HS(S/I) = N(t) / (1-t)^nvars`; `N` is computed by splitting on a pivot
//! variable `x`: `N(I) = N(I + (x)) + t·N(I : x)`.

use std::time::Instant;

use crate::error::{Error, Result};

type Mono = Vec<u8>;

fn divides(a: &[u8], b: &[u8]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimalize(mut gens: Vec<Mono>) -> Vec<Mono> {
    gens.sort_by_key(|m| m.iter().map(|&e| e as u32).sum::<u32>());
    gens.dedup();
    let mut out: Vec<Mono> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &mut Vec<i128>, b: &[i128], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &y) in b.iter().enumerate() {
        a[i + shift] += y;
    }
}

struct Search {
    deadline: Option<Instant>,
    calls: u64,
}

impl Search {
    fn numerator(&mut self, gens: Vec<Mono>) -> Result<Vec<i128>> {
        self.calls += 1;
        if self.calls % 1024 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    return Err(Error::Timeout(0.0));
                }
            }
        }
        let gens = minimalize(gens);
        if gens.is_empty() {
            return Ok(vec![1]);
        }
        let nv = gens[0].len();
        // generators that are single variables split off as (1 - t) factors
        let mut count = vec![0usize; nv];
        let mut linear = vec![false; nv];
        for g in &gens {
            let support: Vec<usize> = (0..nv).filter(|&v| g[v] > 0).collect();
            if support.len() == 1 && g[support[0]] == 1 {
                linear[support[0]] = true;
            }
            for v in support {
                count[v] += 1;
            }
        }
        let pairwise_coprime = count.iter().all(|&c| c <= 1);
        if pairwise_coprime {
            let mut acc = vec![1i128];
            for g in &gens {
                let d: usize = g.iter().map(|&e| e as usize).sum();
                let mut f = vec![0i128; d + 1];
                f[0] = 1;
                f[d] -= 1;
                acc = poly_mul(&acc, &f);
            }
            return Ok(acc);
        }
        if linear.iter().any(|&b| b) {
            let mut rest = Vec::with_capacity(gens.len());
            let mut factors = 0usize;
            for g in gens {
                let lone = (0..nv).find(|&v| g[v] > 0).map(|v| linear[v] && g.iter().map(|&e| e as u32).sum::<u32>() == 1);
                if lone == Some(true) {
                    factors += 1;
                } else {
                    rest.push(g);
                }
            }
            let mut acc = self.numerator(rest)?;
            for _ in 0..factors {
                acc = poly_mul(&acc, &[1, -1]);
            }
            return Ok(acc);
        }
        let pivot = (0..nv).max_by_key(|&v| (count[v], std::cmp::Reverse(v))).unwrap();
        // I + (x)
        let mut plus: Vec<Mono> = gens.iter().filter(|g| g[pivot] == 0).cloned().collect();
        let mut x = vec![0u8; nv];
        x[pivot] = 1;
        plus.push(x);
        // I : x
        let colon: Vec<Mono> = gens
            .iter()
            .map(|g| {
                let mut h = g.clone();
                if h[pivot] > 0 {
                    h[pivot] -= 1;
                }
                h
            })
            .collect();
        let mut a = self.numerator(plus)?;
        let b = self.numerator(colon)?;
        poly_add(&mut a, &b, 1);
        Ok(a)
    }
}

/// Numerator `N(t)` of the Hilbert series of `S/I` for the monomial ideal
/// generated by the given exponent vectors.
pub fn hilbert_numerator(gens: &[Vec<u8>], deadline: Option<Instant>) -> Result<Vec<i128>> {
    let mut s = Search { deadline, calls: 0 };
    let mut n = s.numerator(gens.to_vec())?;
    while n.len() > 1 && *n.last().unwrap() == 0 {
        n.pop();
    }
    Ok(n)
}

/// Divides out `(1-t)` as often as possible. Returns the reduced numerator
/// and the number of factors removed.
pub fn reduce_numerator(mut n: Vec<i128>) -> (Vec<i128>, usize) {
    let mut k = 0;
    while n.iter().sum::<i128>() == 0 && n.iter().any(|&c| c != 0) {
        // synthetic division by (1 - t): q_i = Σ_{j ≤ i} n_j
        let mut q = Vec::with_capacity(n.len() - 1);
        let mut acc = 0i128;
        for &c in &n[..n.len() - 1] {
            acc += c;
            q.push(acc);
        }
        n = q;
        k += 1;
    }
    (n, k)
}
