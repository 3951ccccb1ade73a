//! Partitions, Plücker index sets and permutation signs.
//!
//! All index sets are 1-based, matching the usual notation `p_{1,4,6,8}`.
//! (Macaulay2 numbers the same coordinate `p_{0,3,5,7}`.)

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Sign of the permutation given by a sequence of distinct integers,
/// computed from its inversion count.
pub fn permutation_sign(seq: &[usize]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction, so `(2,1,0)` and `(2,1)`
/// are the same value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return domain(format!("partition {parts:?} has an interior zero part"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("partition {parts:?} is not weakly decreasing"));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The rectangle `(r, r, ..., r)` with `d` parts.
    pub fn rectangle(d: usize, r: usize) -> Self {
        if r == 0 {
            return Self::empty();
        }
        Self { parts: vec![r; d] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        v.resize(len.max(v.len()), 0);
        v
    }

    /// Whether the partition fits in a `d × r` box.
    pub fn fits(&self, d: usize, r: usize) -> bool {
        self.len() <= d && self.largest() <= r
    }

    /// Conjugate partition: `μ*_i = #{ j : μ_j ≥ i }`.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Dominance order: `self ≤ other` iff every prefix sum of `self` is at
    /// most the matching prefix sum of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return domain(format!(
                "dominance order compares partitions of the same integer, got {} and {}",
                self.size(),
                other.size()
            ));
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Complement inside the `d × r` box: `(r - μ_d, ..., r - μ_1)`.
    pub fn complement(&self, d: usize, r: usize) -> Result<Partition> {
        if !self.fits(d, r) {
            return domain(format!("partition ({self}) does not fit in a {d}x{r} box"));
        }
        let padded = self.padded(d);
        Partition::new(padded.iter().rev().map(|&p| r - p).collect::<Vec<_>>())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `4,2,2`, `(4,2,2)` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// The largest element of `𝒫(d, r, l)` in dominance order: `a` parts equal
/// to `r` followed by the remainder `b`, where `l = a·r + b`.
pub fn mu_max(d: usize, r: usize, l: usize) -> Result<Partition> {
    if l > d * r {
        return domain(format!("l = {l} exceeds d·r = {}", d * r));
    }
    if r == 0 {
        return Ok(Partition::empty());
    }
    let (a, b) = (l / r, l % r);
    let mut parts = vec![r; a];
    if b > 0 {
        parts.push(b);
    }
    Partition::new(parts)
}

/// Complement of `mu` in the `d × r` box.
pub fn complement_partition(mu: &Partition, d: usize, r: usize) -> Result<Partition> {
    mu.complement(d, r)
}

/// All partitions of `n`, ordered by number of parts (descending) and then
/// lexicographically ascending. This is the row order of the classification
/// tables.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            current.push(p);
            rec(rest - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.parts.cmp(&b.parts)));
    out
}

/// Partitions of `l` with at most `d` parts, each at most `r`.
pub fn bounded_partitions(d: usize, r: usize, l: usize) -> Vec<Partition> {
    partitions(l).into_iter().filter(|p| p.fits(d, r)).collect()
}

/// A sorted subset of `{1..n}` naming one Plücker coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PluckerIndex {
    elements: Vec<usize>,
}

impl PluckerIndex {
    /// Builds an index from distinct positive integers, sorting them.
    pub fn new(elements: impl Into<Vec<usize>>) -> Result<Self> {
        let mut elements = elements.into();
        elements.sort_unstable();
        if elements.first() == Some(&0) {
            return domain("Plücker indices are 1-based");
        }
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return domain(format!("repeated element in index set {elements:?}"));
        }
        Ok(Self { elements })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    /// Bitmask with bit `i - 1` set for each element `i`.
    pub fn mask(&self) -> u64 {
        self.elements.iter().fold(0, |m, &i| m | 1 << (i - 1))
    }

    pub fn from_mask(mask: u64) -> Self {
        let elements = (0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
        Self { elements }
    }

    /// `{1..n}` minus this set.
    pub fn complement(&self, n: usize) -> PluckerIndex {
        let elements = (1..=n).filter(|&i| !self.contains(i)).collect();
        PluckerIndex { elements }
    }

    /// Position of this set in the lexicographic list of all
    /// `len()`-subsets of `{1..n}`.
    pub fn rank(&self, n: usize) -> usize {
        let l = self.len();
        let mut rank = 0;
        let mut prev = 0;
        for (i, &e) in self.elements.iter().enumerate() {
            for v in prev + 1..e {
                rank += binomial(n - v, l - i - 1);
            }
            prev = e;
        }
        rank
    }

    /// Inverse of [`PluckerIndex::rank`].
    pub fn unrank(n: usize, l: usize, mut rank: usize) -> Result<Self> {
        if l > n || rank >= binomial(n, l) {
            return domain(format!("rank {rank} out of range for {l}-subsets of {n}"));
        }
        let mut elements = Vec::with_capacity(l);
        let mut v = 1;
        for i in 0..l {
            loop {
                let block = binomial(n - v, l - i - 1);
                if rank < block {
                    break;
                }
                rank -= block;
                v += 1;
            }
            elements.push(v);
            v += 1;
        }
        Ok(Self { elements })
    }
}

impl fmt::Display for PluckerIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

impl FromStr for PluckerIndex {
    type Err = Error;

    /// Accepts `{1,4,6,8}`, `1,4,6,8` and the compact `1468` (single digits).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        if s.is_empty() {
            return Ok(PluckerIndex { elements: vec![] });
        }
        let elements: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad index element {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad index set {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        PluckerIndex::new(elements)
    }
}

/// All `l`-subsets of `{1..n}` in lexicographic order. This order fixes the
/// variable numbering of every Plücker ring in the crate.
pub fn subsets(n: usize, l: usize) -> Result<Vec<PluckerIndex>> {
    if l > n {
        return domain(format!("no {l}-subsets of a {n}-set"));
    }
    let mut out = Vec::with_capacity(binomial(n, l));
    let mut cur: Vec<usize> = (1..=l).collect();
    loop {
        out.push(PluckerIndex {
            elements: cur.clone(),
        });
        // rightmost position that can still be incremented
        let mut i = l;
        while i > 0 && cur[i - 1] == n - l + i {
            i -= 1;
        }
        if i == 0 {
            return Ok(out);
        }
        cur[i - 1] += 1;
        for j in i..l {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Sign of the permutation of `{1..n}` written as the sequence `(I, J)`,
/// for complementary `I` and `J`.
pub fn sign_interleave(i: &PluckerIndex, j: &PluckerIndex) -> Result<i32> {
    let n = i.len() + j.len();
    if i.mask() & j.mask() != 0 {
        return domain(format!("index sets {i} and {j} overlap"));
    }
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    if i.mask() | j.mask() != full {
        return domain(format!("{i} and {j} do not partition {{1..{n}}}"));
    }
    // inversions between the blocks only: both blocks are sorted
    let mut inversions = 0usize;
    for &a in i.elements() {
        inversions += j.elements().iter().filter(|&&b| b < a).count();
    }
    Ok(if inversions % 2 == 0 { 1 } else { -1 })
}
