//! Cyclic orders on `[n]`, bit-vector subsets, the dominance relation
//! between equal-size subsets, and the weak-separation predicate.
//!
//! Elements of the ground set are the integers `1..=n` (n bounded by 32 so a
//! subset fits in one machine word). The cyclic order `<_i` starts at `i`:
//! `i <_i i+1 <_i ... <_i n <_i 1 <_i ... <_i i-1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on the ground-set size; keeps every subset in one `u64`.
pub const MAX_N: usize = 32;

/// The ambient pair `(n, r)`: r-element subsets of `[n] = {1, ..., n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ground {
    n: usize,
    r: usize,
}

impl Ground {
    pub fn new(n: usize, r: usize) -> Result<Ground> {
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidInput(format!(
                "ground-set size n must be in 1..={MAX_N}, got {n}"
            )));
        }
        if r > n {
            return Err(Error::InvalidInput(format!(
                "subset cardinality r must satisfy 0 <= r <= n, got r={r}, n={n}"
            )));
        }
        Ok(Ground { n, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// All r-subsets of `[n]` in canonical order.
    pub fn subsets(&self) -> Vec<Subset> {
        let (n, r) = (self.n, self.r);
        if r == 0 {
            return vec![Subset::empty(n)];
        }
        let mut out = Vec::with_capacity(binomial(n, r) as usize);
        let limit: u64 = 1u64 << n;
        let mut v: u64 = (1u64 << r) - 1;
        while v < limit {
            out.push(Subset::from_mask(n, v));
            // Gosper's hack: next mask with the same popcount.
            let t = v | (v - 1);
            v = (t + 1) | (((!t & (t + 1)) - 1) >> (v.trailing_zeros() + 1));
        }
        out.sort();
        out
    }
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// A subset of `[n]`, stored as a bit mask (element `e` at bit `e-1`).
///
/// Value-semantic: equality is element-set equality; the ordering is
/// lexicographic on the ascending element sequence, which is the canonical
/// iteration order used everywhere a collection is materialized.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    mask: u64,
    n: u8,
}

impl Subset {
    pub fn empty(n: usize) -> Subset {
        assert!(n >= 1 && n <= MAX_N, "n out of range: {n}");
        Subset { mask: 0, n: n as u8 }
    }

    pub fn full(n: usize) -> Subset {
        assert!(n >= 1 && n <= MAX_N, "n out of range: {n}");
        Subset { mask: low_mask(n), n: n as u8 }
    }

    pub fn from_mask(n: usize, mask: u64) -> Subset {
        assert!(n >= 1 && n <= MAX_N, "n out of range: {n}");
        assert!(mask & !low_mask(n) == 0, "mask has bits outside [1, {n}]");
        Subset { mask, n: n as u8 }
    }

    pub fn from_elems(n: usize, elems: &[usize]) -> Result<Subset> {
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidInput(format!(
                "ground-set size n must be in 1..={MAX_N}, got {n}"
            )));
        }
        let mut mask = 0u64;
        for &e in elems {
            if e < 1 || e > n {
                return Err(Error::InvalidInput(format!(
                    "element {e} outside the ground set [1, {n}]"
                )));
            }
            let bit = 1u64 << (e - 1);
            if mask & bit != 0 {
                return Err(Error::InvalidInput(format!("duplicate element {e}")));
            }
            mask |= bit;
        }
        Ok(Subset { mask, n: n as u8 })
    }

    /// Parses a set literal: a digit string of sorted elements for small
    /// ground sets ("127" = {1,2,7}), a comma-separated list otherwise
    /// ("1,2,12"), or "{}" for the empty set. Both syntaxes are accepted
    /// regardless of `n`.
    pub fn parse(text: &str, n: usize) -> Result<Subset> {
        let t = text.trim();
        if t == "{}" {
            if n == 0 || n > MAX_N {
                return Err(Error::InvalidInput(format!("n out of range: {n}")));
            }
            return Ok(Subset::empty(n));
        }
        if t.is_empty() {
            return Err(Error::InvalidInput("empty set literal".into()));
        }
        let elems: Vec<usize> = if t.contains(',') {
            t.split(',')
                .map(|p| {
                    p.trim().parse::<usize>().map_err(|_| {
                        Error::InvalidInput(format!("bad element {:?} in set literal {t:?}", p.trim()))
                    })
                })
                .collect::<Result<_>>()?
        } else {
            t.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) if d >= 1 => Ok(d as usize),
                    _ => Err(Error::InvalidInput(format!(
                        "bad character {c:?} in set literal {t:?}"
                    ))),
                })
                .collect::<Result<_>>()?
        };
        Subset::from_elems(n, &elems)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn card(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.n() && self.mask & (1u64 << (e - 1)) != 0
    }

    /// Elements in ascending order.
    pub fn elems(&self) -> impl Iterator<Item = usize> + '_ {
        let mut m = self.mask;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let e = m.trailing_zeros() as usize + 1;
                m &= m - 1;
                Some(e)
            }
        })
    }

    pub fn with(&self, e: usize) -> Subset {
        assert!(e >= 1 && e <= self.n());
        Subset { mask: self.mask | 1u64 << (e - 1), n: self.n }
    }

    pub fn without(&self, e: usize) -> Subset {
        assert!(e >= 1 && e <= self.n());
        Subset { mask: self.mask & !(1u64 << (e - 1)), n: self.n }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        assert_eq!(self.n, other.n, "mismatched ground sets");
        Subset { mask: self.mask | other.mask, n: self.n }
    }

    pub fn inter(&self, other: &Subset) -> Subset {
        assert_eq!(self.n, other.n, "mismatched ground sets");
        Subset { mask: self.mask & other.mask, n: self.n }
    }

    pub fn minus(&self, other: &Subset) -> Subset {
        assert_eq!(self.n, other.n, "mismatched ground sets");
        Subset { mask: self.mask & !other.mask, n: self.n }
    }

    pub fn sym_diff(&self, other: &Subset) -> Subset {
        assert_eq!(self.n, other.n, "mismatched ground sets");
        Subset { mask: self.mask ^ other.mask, n: self.n }
    }

    pub fn complement(&self) -> Subset {
        Subset { mask: !self.mask & low_mask(self.n()), n: self.n }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        assert_eq!(self.n, other.n, "mismatched ground sets");
        self.mask & !other.mask == 0
    }
}

fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.mask;
        let mut b = other.mask;
        loop {
            match (a == 0, b == 0) {
                (true, true) => return self.n.cmp(&other.n),
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                _ => {}
            }
            let ea = a.trailing_zeros();
            let eb = b.trailing_zeros();
            match ea.cmp(&eb) {
                Ordering::Equal => {
                    a &= a - 1;
                    b &= b - 1;
                }
                ord => return ord,
            }
        }
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mask == 0 {
            return write!(f, "{{}}");
        }
        if self.n() <= 9 {
            for e in self.elems() {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.elems().map(|e| e.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}/{}", self.elems().map(|e| e.to_string()).collect::<Vec<_>>().join(","), self.n)
    }
}

/// Position of `a` in the cyclic order `<_i` (the start `i` has position 0).
pub fn cyclic_pos(i: usize, a: usize, n: usize) -> usize {
    debug_assert!(i >= 1 && i <= n && a >= 1 && a <= n);
    (a + n - i) % n
}

/// `a <_i b`: does `a` strictly precede `b` in the order starting at `i`?
pub fn cyclic_less(i: usize, a: usize, b: usize, n: usize) -> bool {
    assert!(i >= 1 && i <= n, "shift {i} outside [1, {n}]");
    assert!(a >= 1 && a <= n, "element {a} outside [1, {n}]");
    assert!(b >= 1 && b <= n, "element {b} outside [1, {n}]");
    cyclic_pos(i, a, n) < cyclic_pos(i, b, n)
}

/// `a <=_i b` (reflexive variant).
pub fn cyclic_le(i: usize, a: usize, b: usize, n: usize) -> bool {
    a == b || cyclic_less(i, a, b, n)
}

fn check_pair(x: &Subset, y: &Subset) {
    assert_eq!(x.n, y.n, "mismatched ground sets");
    assert_eq!(x.card(), y.card(), "mismatched cardinalities");
}

/// The dominance relation `X <<_i Y`: every element of `X - Y` precedes every
/// element of `Y - X` in the order `<_i`. Vacuously true when `X = Y`.
pub fn dominates(x: &Subset, y: &Subset, i: usize) -> bool {
    check_pair(x, y);
    let n = x.n();
    assert!(i >= 1 && i <= n, "shift {i} outside [1, {n}]");
    let a = x.mask & !y.mask;
    let b = y.mask & !x.mask;
    if a == 0 || b == 0 {
        return true;
    }
    // Rotate so that position 0 is element i, then compare extremes.
    let s = (i - 1) as u32;
    let nn = n as u32;
    let rot = |m: u64| ((m >> s) | (m << (nn - s))) & low_mask(n);
    let ra = rot(a);
    let rb = rot(b);
    (63 - ra.leading_zeros()) < rb.trailing_zeros()
}

/// Weak separation, decided by the run-count algorithm: label the positions
/// of `X - Y` and `Y - X` around the circle `1..=n`; the two sets are weakly
/// separated iff the circular label sequence has at most two maximal runs
/// (equivalently, the two difference sets do not interleave).
pub fn weakly_separated(x: &Subset, y: &Subset) -> bool {
    check_pair(x, y);
    let a = x.mask & !y.mask;
    let b = y.mask & !x.mask;
    if a == 0 || b == 0 {
        return true;
    }
    let mut runs = 0u32;
    let mut first = 0u8;
    let mut prev = 0u8;
    for e in 0..x.n() {
        let bit = 1u64 << e;
        let lab = if a & bit != 0 {
            1u8
        } else if b & bit != 0 {
            2u8
        } else {
            continue;
        };
        if prev == 0 {
            first = lab;
        } else if lab != prev {
            runs += 1;
        }
        prev = lab;
    }
    if prev != first {
        runs += 1;
    }
    runs <= 2
}

/// Reference implementation of weak separation: scan every shift `j` for
/// `X <<_j Y`. Kept as an independent oracle for the run-count algorithm.
pub fn weakly_separated_naive(x: &Subset, y: &Subset) -> bool {
    check_pair(x, y);
    (1..=x.n()).any(|j| dominates(x, y, j))
}

/// Neighbors: the symmetric difference has exactly two elements.
pub fn neighbors(x: &Subset, y: &Subset) -> bool {
    check_pair(x, y);
    (x.mask ^ y.mask).count_ones() == 2
}

/// The cyclic interval `{start, start+1, ..., start+length-1}` with
/// wrap-around modulo `n`.
pub fn cyclic_interval(start: usize, length: usize, n: usize) -> Subset {
    assert!(n >= 1 && n <= MAX_N);
    assert!(start >= 1 && start <= n, "start {start} outside [1, {n}]");
    assert!(length <= n, "interval length {length} exceeds {n}");
    let mut s = Subset::empty(n);
    for k in 0..length {
        s = s.with((start - 1 + k) % n + 1);
    }
    s
}
