//! Grassmann necklaces, their bijection with permutations, alignments and
//! the simple-alignment reduction, the "less than" order, and generalized
//! necklaces.

use std::fmt;

use crate::cyclic::{cyclic_interval, cyclic_pos, dominates, neighbors, weakly_separated, Ground, Subset};
use crate::error::{Error, Result};

/// A permutation of `[n]`, stored as the image sequence (1-based values).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    img: Vec<usize>,
}

impl Permutation {
    pub fn new(img: Vec<usize>) -> Result<Permutation> {
        let n = img.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty permutation".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &img {
            if v < 1 || v > n {
                return Err(Error::InvalidInput(format!(
                    "permutation value {v} outside [1, {n}]"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidInput(format!("permutation repeats {v}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { img })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation { img: (1..=n).collect() }
    }

    /// The rotation `i -> i + shift` (mod n, representatives in `[1, n]`).
    pub fn rotation(n: usize, shift: usize) -> Permutation {
        Permutation { img: (1..=n).map(|i| (i - 1 + shift) % n + 1).collect() }
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { img: inv }
    }

    /// Parses the literal "4,3,1,2" meaning 1->4, 2->3, 3->1, 4->2.
    pub fn parse(text: &str) -> Result<Permutation> {
        let img: Vec<usize> = text
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad permutation entry {:?}", p.trim())))
            })
            .collect::<Result<_>>()?;
        Permutation::new(img)
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation { img: cur.clone() }];
        while next_lex(&mut cur) {
            out.push(Permutation { img: cur.clone() });
        }
        out
    }
}

fn next_lex(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.img.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The average clockwise rotation of a permutation, which equals the common
/// cardinality of its necklace. A fixed point travels the full circle, so it
/// contributes n rather than 0.
pub fn average_rotation(p: &Permutation) -> usize {
    let n = p.n();
    let total: usize = (1..=n)
        .map(|i| {
            let d = (p.apply(i) + n - i) % n;
            if d == 0 {
                n
            } else {
                d
            }
        })
        .sum();
    assert!(total % n == 0, "rotation sum not divisible by n");
    total / n
}

/// An alignment `i => j` of a permutation: the arrows into `i` and `j` run
/// parallel (the quadruple preimage-of-i, i, j, preimage-of-j is cyclically
/// ordered).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alignment {
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for Alignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}=>{}", self.i, self.j)
    }
}

/// All alignments of `p`, in ascending order.
///
/// The quadruple is tested as weakly cyclically ordered where the only
/// permitted coincidence is a fixed right member (`j` with `p(j) = j`); a
/// fixed left member never aligns, and any other coincidence among the four
/// entries disqualifies the pair.
pub fn alignments(p: &Permutation) -> Vec<Alignment> {
    let n = p.n();
    let inv = p.inverse();
    let mut out = Vec::new();
    for i in 1..=n {
        if p.apply(i) == i {
            continue;
        }
        let a = inv.apply(i);
        for j in 1..=n {
            if j == i {
                continue;
            }
            let d = inv.apply(j);
            let pb = cyclic_pos(a, i, n);
            let pc = cyclic_pos(a, j, n);
            if d == j {
                // weak tail: a, i, j strictly ordered suffices
                if pb < pc {
                    out.push(Alignment { i, j });
                }
            } else {
                if a == j || d == i {
                    continue;
                }
                let pd = cyclic_pos(a, d, n);
                if pb < pc && pc < pd {
                    out.push(Alignment { i, j });
                }
            }
        }
    }
    out.sort();
    out
}

/// Is the alignment simple, i.e. do the two preimages sit on cyclically
/// consecutive positions (preimage of `j` immediately before preimage of `i`)?
pub fn is_simple_alignment(p: &Permutation, al: Alignment) -> bool {
    let n = p.n();
    let inv = p.inverse();
    inv.apply(al.i) == inv.apply(al.j) % n + 1
}

/// Some simple alignment of `p`, when `p` has any alignment at all.
pub fn find_simple_alignment(p: &Permutation) -> Option<Alignment> {
    alignments(p).into_iter().find(|&al| is_simple_alignment(p, al))
}

/// Removes the simple alignment `i => j` by swapping the images at the two
/// consecutive preimage positions; the resulting permutation has exactly the
/// remaining alignments.
pub fn reduce_simple_alignment(p: &Permutation, al: Alignment) -> Result<Permutation> {
    if !alignments(p).contains(&al) || !is_simple_alignment(p, al) {
        return Err(Error::InvalidInput(format!(
            "{al} is not a simple alignment of {p}"
        )));
    }
    let inv = p.inverse();
    let pos_i = inv.apply(al.i);
    let pos_j = inv.apply(al.j);
    let mut img = p.img.clone();
    img[pos_i - 1] = al.j;
    img[pos_j - 1] = al.i;
    Ok(Permutation { img })
}

/// A Grassmann necklace: a cyclic sequence `N_1, ..., N_n` of r-subsets with
/// `N_{i+1}` containing `N_i - {i}` (indices mod n).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Necklace {
    sets: Vec<Subset>,
    r: usize,
}

impl Necklace {
    /// Validates the chain condition and packages the sequence. The sequence
    /// length must equal the ground-set size of the members.
    pub fn validate(sets: Vec<Subset>) -> Result<Necklace> {
        if sets.is_empty() {
            return Err(Error::Validation("a necklace needs at least one set".into()));
        }
        let n = sets[0].n();
        if sets.len() != n {
            return Err(Error::Validation(format!(
                "necklace over [{}] must have exactly {} sets, got {}",
                n,
                n,
                sets.len()
            )));
        }
        let r = sets[0].card();
        for (k, s) in sets.iter().enumerate() {
            if s.n() != n {
                return Err(Error::Validation(format!(
                    "set #{} lives over [{}], expected [{}]",
                    k + 1,
                    s.n(),
                    n
                )));
            }
            if s.card() != r {
                return Err(Error::Validation(format!(
                    "set #{} has cardinality {}, expected {}",
                    k + 1,
                    s.card(),
                    r
                )));
            }
        }
        for i in 1..=n {
            let cur = sets[i - 1];
            let next = sets[i % n];
            let required = cur.without(i);
            if !required.is_subset_of(&next) {
                return Err(Error::Validation(format!(
                    "chain broken at i={i}: N_{} = {} does not contain N_{i} - {{{i}}} = {}",
                    i % n + 1,
                    next,
                    required
                )));
            }
        }
        Ok(Necklace { sets, r })
    }

    pub fn n(&self) -> usize {
        self.sets.len()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn ground(&self) -> Ground {
        Ground::new(self.n(), self.r).expect("validated necklace has a valid ground")
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    /// The member `N_i`, 1-based.
    pub fn member(&self, i: usize) -> Subset {
        self.sets[i - 1]
    }

    /// Element `i` is a dummy when `i` is missing from `N_i` (and then from
    /// every member).
    pub fn is_dummy(&self, i: usize) -> bool {
        !self.sets[i - 1].contains(i)
    }

    pub fn dummies(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.is_dummy(i)).collect()
    }

    pub fn is_dummy_free(&self) -> bool {
        (1..=self.n()).all(|i| !self.is_dummy(i))
    }

    /// Connected: all members pairwise distinct.
    pub fn is_connected(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.sets.iter().all(|s| seen.insert(*s))
    }

    /// Removes every dummy element, relabels the remaining ground set to
    /// `[n']`, and returns the reduced necklace together with the removed
    /// elements. A necklace with no dummies comes back unchanged.
    pub fn reduce_dummies(&self) -> Result<(Necklace, Vec<usize>)> {
        let removed = self.dummies();
        if removed.is_empty() {
            return Ok((self.clone(), removed));
        }
        let keep: Vec<usize> = (1..=self.n()).filter(|&i| !self.is_dummy(i)).collect();
        if keep.is_empty() {
            return Err(Error::Validation(
                "every element is a dummy; the reduction would empty the ground set".into(),
            ));
        }
        let np = keep.len();
        let mut rank = vec![0usize; self.n() + 1];
        for (k, &e) in keep.iter().enumerate() {
            rank[e] = k + 1;
        }
        let mut sets = Vec::with_capacity(np);
        for &i in &keep {
            let old = self.sets[i - 1];
            debug_assert!(removed.iter().all(|&d| !old.contains(d)));
            let elems: Vec<usize> = old.elems().map(|e| rank[e]).collect();
            sets.push(Subset::from_elems(np, &elems)?);
        }
        let reduced = Necklace::validate(sets)?;
        Ok((reduced, removed))
    }

    /// The permutation with `N_{i+1} = (N_i - {i}) + {p(i)}`. Requires a
    /// dummy-free necklace.
    pub fn to_permutation(&self) -> Result<Permutation> {
        if !self.is_dummy_free() {
            return Err(Error::Validation(format!(
                "necklace has dummy elements {:?}; reduce before converting",
                self.dummies()
            )));
        }
        let n = self.n();
        let mut img = Vec::with_capacity(n);
        for i in 1..=n {
            let cur = self.sets[i - 1];
            let next = self.sets[i % n];
            let added = next.minus(&cur.without(i));
            if added.card() != 1 {
                return Err(Error::Validation(format!(
                    "no unique element added between N_{i} and N_{}",
                    i % n + 1
                )));
            }
            img.push(added.elems().next().unwrap());
        }
        Permutation::new(img)
    }

    /// The necklace of a permutation: `N_i` collects every `j` that weakly
    /// precedes its own preimage in the order starting at `i`.
    pub fn from_permutation(p: &Permutation) -> Necklace {
        let n = p.n();
        let inv = p.inverse();
        let mut sets = Vec::with_capacity(n);
        for i in 1..=n {
            let mut s = Subset::empty(n);
            for j in 1..=n {
                if cyclic_pos(i, j, n) <= cyclic_pos(i, inv.apply(j), n) {
                    s = s.with(j);
                }
            }
            sets.push(s);
        }
        let nk = Necklace { sets, r: average_rotation(p) };
        debug_assert!(nk.sets.iter().all(|s| s.card() == nk.r));
        nk
    }

    /// The necklace of cyclic intervals `N_i = [i, i+r)`; its interior is the
    /// whole Grassmannian.
    pub fn largest(g: Ground) -> Necklace {
        assert!(g.r() >= 1, "the largest necklace needs r >= 1");
        let sets = (1..=g.n()).map(|i| cyclic_interval(i, g.r(), g.n())).collect();
        Necklace { sets, r: g.r() }
    }

    /// Interior membership test: `N_i <<_i x` for every i. Pure predicate;
    /// works for any necklace.
    pub fn interior_contains(&self, x: &Subset) -> bool {
        (1..=self.n()).all(|i| dominates(&self.sets[i - 1], x, i))
    }

    /// Is `x` weakly separated from every member?
    pub fn separates_with(&self, x: &Subset) -> bool {
        self.sets.iter().all(|s| weakly_separated(s, x))
    }

    /// The "less than" order: `self` is less than `other` when the interior
    /// of `self` is contained in the interior of `other`. Decided by the
    /// membership criterion: every member of `self` lies in the interior of
    /// `other`.
    pub fn is_less_than(&self, other: &Necklace) -> Result<bool> {
        if self.n() != other.n() || self.r != other.r {
            return Err(Error::InvalidInput(format!(
                "mismatched contexts: ({}, {}) vs ({}, {})",
                self.n(),
                self.r,
                other.n(),
                other.r
            )));
        }
        Ok(self.sets.iter().all(|s| other.interior_contains(s)))
    }

    /// Parses the necklace file format: one set literal per line in position
    /// order, '#' comments and blank lines ignored; n is the number of lines.
    pub fn parse(text: &str) -> Result<Necklace> {
        let lines = literal_lines(text);
        if lines.is_empty() {
            return Err(Error::InvalidInput("no sets in necklace input".into()));
        }
        let n = lines.len();
        if n > crate::cyclic::MAX_N {
            return Err(Error::InvalidInput(format!(
                "necklace length {n} exceeds the supported maximum {}",
                crate::cyclic::MAX_N
            )));
        }
        let sets: Vec<Subset> = lines
            .iter()
            .map(|line| Subset::parse(line, n))
            .collect::<Result<_>>()?;
        Necklace::validate(sets)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.sets {
            out.push_str(&s.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sets.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Strips comments and blank lines; returns the remaining trimmed lines.
pub(crate) fn literal_lines(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| {
            let l = match l.find('#') {
                Some(k) => &l[..k],
                None => l,
            };
            l.trim().to_string()
        })
        .filter(|l| !l.is_empty())
        .collect()
}

/// A generalized necklace: a cyclic sequence of pairwise-separated r-subsets
/// in which consecutive members are neighbors and whose embedded curve is
/// simple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedNecklace {
    sets: Vec<Subset>,
    r: usize,
}

impl GeneralizedNecklace {
    /// Checks the three defining conditions in order: consecutive
    /// neighborhood, pairwise separation, and simplicity of the embedded
    /// closed curve. Each failure is reported as a distinct error.
    pub fn validate(sets: Vec<Subset>) -> Result<GeneralizedNecklace> {
        let m = sets.len();
        if m < 3 {
            return Err(Error::Validation(format!(
                "a generalized necklace needs at least 3 sets, got {m}"
            )));
        }
        let n = sets[0].n();
        let r = sets[0].card();
        for s in &sets {
            if s.n() != n || s.card() != r {
                return Err(Error::Validation(
                    "all sets must share one ground set and one cardinality".into(),
                ));
            }
        }
        for t in 0..m {
            let a = &sets[t];
            let b = &sets[(t + 1) % m];
            if !neighbors(a, b) {
                return Err(Error::Validation(format!(
                    "consecutive sets {a} and {b} are not neighbors"
                )));
            }
        }
        for s in 0..m {
            for t in s + 1..m {
                if !weakly_separated(&sets[s], &sets[t]) {
                    return Err(Error::Validation(format!(
                        "members {} and {} are not weakly separated",
                        sets[s], sets[t]
                    )));
                }
            }
        }
        let curve = crate::plabic::Curve::through(&sets);
        if let Err(witness) = curve.check_simple() {
            return Err(Error::Validation(format!(
                "the embedded curve self-intersects: {witness}"
            )));
        }
        Ok(GeneralizedNecklace { sets, r })
    }

    pub fn n(&self) -> usize {
        self.sets[0].n()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    /// Does some rotation of the sequence (forward or reversed) form a
    /// dummy-free Grassmann necklace? Returns the witnessing necklace.
    pub fn as_grassmann(&self) -> Option<Necklace> {
        if self.len() != self.n() {
            return None;
        }
        let m = self.len();
        let mut candidates: Vec<Vec<Subset>> = Vec::new();
        for start in 0..m {
            let fwd: Vec<Subset> = (0..m).map(|k| self.sets[(start + k) % m]).collect();
            let rev: Vec<Subset> = (0..m).map(|k| self.sets[(start + m - k) % m]).collect();
            candidates.push(fwd);
            candidates.push(rev);
        }
        candidates
            .into_iter()
            .find_map(|sets| Necklace::validate(sets).ok().filter(|nk| nk.is_dummy_free()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::Ground;

    fn sub(n: usize, elems: &[usize]) -> Subset {
        Subset::from_elems(n, elems).unwrap()
    }

    fn nk(lits: &[&str]) -> Necklace {
        let n = lits.len();
        Necklace::validate(lits.iter().map(|l| Subset::parse(l, n).unwrap()).collect()).unwrap()
    }

    #[test]
    fn validate_examples() {
        let a = nk(&["12", "23", "34", "14"]);
        assert!(a.is_dummy_free());
        assert!(a.is_connected());

        let b = nk(&["12", "24", "34", "14"]);
        assert!(b.is_dummy_free());
        assert!(b.is_connected());

        let bad = Necklace::validate(vec![
            sub(4, &[1, 2]),
            sub(4, &[3, 4]),
            sub(4, &[2, 3]),
            sub(4, &[1, 4]),
        ]);
        let msg = bad.unwrap_err().to_string();
        assert!(msg.contains("i=1"), "got: {msg}");
    }

    #[test]
    fn reduce_dummies_examples() {
        let a = nk(&["12", "23", "34", "14"]);
        let (same, removed) = a.reduce_dummies().unwrap();
        assert_eq!(same, a);
        assert!(removed.is_empty());

        // n=3, r=1: (1, 1, 1) has dummies 2 and 3
        let c = Necklace::validate(vec![sub(3, &[1]), sub(3, &[1]), sub(3, &[1])]).unwrap();
        assert_eq!(c.dummies(), vec![2, 3]);
        let (red, removed) = c.reduce_dummies().unwrap();
        assert_eq!(removed, vec![2, 3]);
        assert_eq!(red.n(), 1);
        assert_eq!(red.member(1), sub(1, &[1]));
        let (red2, removed2) = red.reduce_dummies().unwrap();
        assert_eq!(red2, red);
        assert!(removed2.is_empty());

        let all_dummy = Necklace::validate(vec![Subset::empty(2), Subset::empty(2)]).unwrap();
        assert!(all_dummy.reduce_dummies().is_err());
    }

    #[test]
    fn necklace_to_permutation_examples() {
        let g = Ground::new(4, 2).unwrap();
        let largest = Necklace::largest(g);
        assert_eq!(largest.to_permutation().unwrap(), Permutation::rotation(4, 2));

        let b = nk(&["12", "24", "34", "14"]);
        assert_eq!(b.to_permutation().unwrap(), Permutation::parse("4,3,1,2").unwrap());
    }

    #[test]
    fn permutation_to_necklace_examples() {
        let rot = Permutation::rotation(4, 2);
        assert_eq!(Necklace::from_permutation(&rot), Necklace::largest(Ground::new(4, 2).unwrap()));

        // identity: reflexivity puts every j into every member
        let id = Permutation::identity(3);
        let nk_id = Necklace::from_permutation(&id);
        assert_eq!(nk_id.r(), 3);
        assert!(nk_id.sets().iter().all(|s| *s == Subset::full(3)));

        let p = Permutation::parse("4,3,1,2").unwrap();
        assert_eq!(Necklace::from_permutation(&p), nk(&["12", "24", "34", "14"]));
    }

    #[test]
    fn round_trip_over_all_permutations() {
        for n in 1..=6 {
            for p in Permutation::all(n) {
                let nk = Necklace::from_permutation(&p);
                assert!(nk.is_dummy_free(), "necklace of {p} has dummies");
                assert_eq!(nk.r(), average_rotation(&p));
                assert_eq!(nk.to_permutation().unwrap(), p, "round trip failed for {p}");
            }
        }
    }

    #[test]
    fn average_rotation_examples() {
        for n in 2..=6 {
            for r in 1..=n {
                assert_eq!(average_rotation(&Permutation::rotation(n, r)), r);
            }
        }
        assert_eq!(average_rotation(&Permutation::parse("4,3,1,2").unwrap()), 2);
        // fixed points travel the whole circle
        assert_eq!(average_rotation(&Permutation::identity(5)), 5);
    }

    #[test]
    fn alignment_examples() {
        assert!(alignments(&Permutation::rotation(6, 2)).is_empty());
        let p = Permutation::parse("4,3,1,2").unwrap();
        assert_eq!(alignments(&p), vec![Alignment { i: 3, j: 4 }]);
        assert_eq!(find_simple_alignment(&p), Some(Alignment { i: 3, j: 4 }));
        assert_eq!(find_simple_alignment(&Permutation::rotation(5, 2)), None);
    }

    #[test]
    fn simple_alignment_exists_whenever_any_alignment_does() {
        for n in 1..=6 {
            for p in Permutation::all(n) {
                let als = alignments(&p);
                if !als.is_empty() {
                    assert!(
                        find_simple_alignment(&p).is_some(),
                        "{p} has alignments {als:?} but no simple one"
                    );
                }
            }
        }
    }

    #[test]
    fn reduce_simple_alignment_decrements_and_terminates() {
        for n in 1..=5 {
            for p in Permutation::all(n) {
                let mut cur = p.clone();
                let mut count = alignments(&cur).len();
                while let Some(al) = find_simple_alignment(&cur) {
                    let before = alignments(&cur);
                    let next = reduce_simple_alignment(&cur, al).unwrap();
                    let after = alignments(&next);
                    assert_eq!(after.len(), count - 1, "reducing {al} of {cur}");
                    let mut expect = before.clone();
                    expect.retain(|&x| x != al);
                    assert_eq!(after, expect, "alignments changed beyond {al} for {cur}");
                    cur = next;
                    count -= 1;
                }
                // termination at the alignment-free permutation: a rotation
                assert_eq!(cur, Permutation::rotation(n, average_rotation(&cur)));
            }
        }
    }

    #[test]
    fn reduce_simple_alignment_rejects_non_simple() {
        let p = Permutation::parse("4,3,1,2").unwrap();
        assert!(reduce_simple_alignment(&p, Alignment { i: 1, j: 2 }).is_err());
    }

    #[test]
    fn largest_examples() {
        let g = Ground::new(7, 3).unwrap();
        let nk7 = Necklace::largest(g);
        let want = ["123", "234", "345", "456", "567", "167", "127"];
        for (i, lit) in want.iter().enumerate() {
            assert_eq!(nk7.member(i + 1), Subset::parse(lit, 7).unwrap());
        }
    }

    #[test]
    fn is_less_examples() {
        let b = nk(&["12", "24", "34", "14"]);
        let largest = Necklace::largest(Ground::new(4, 2).unwrap());
        assert!(b.is_less_than(&b).unwrap());
        assert!(b.is_less_than(&largest).unwrap());
        assert!(!largest.is_less_than(&b).unwrap());
    }

    #[test]
    fn lemma_difference_window() {
        // N_i - N_j sits inside the cyclic interval [i, j), for every
        // necklace of every permutation at small n; hence N_i <<_i N_j.
        for n in 1..=5 {
            for p in Permutation::all(n) {
                let nk = Necklace::from_permutation(&p);
                for i in 1..=n {
                    for j in 1..=n {
                        if i == j {
                            continue;
                        }
                        let diff = nk.member(i).minus(&nk.member(j));
                        let len = (j + n - i) % n;
                        let window = cyclic_interval(i, len, n);
                        assert!(diff.is_subset_of(&window), "n={n} p={p} i={i} j={j}");
                        assert!(dominates(&nk.member(i), &nk.member(j), i));
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_text_round_trip() {
        let text = "# a necklace over [4]\n12\n24\n\n34\n14 # last\n";
        let parsed = Necklace::parse(text).unwrap();
        assert_eq!(parsed, nk(&["12", "24", "34", "14"]));
        assert_eq!(Necklace::parse(&parsed.to_text()).unwrap(), parsed);
    }

    #[test]
    fn generalized_validation() {
        let quad = vec![sub(4, &[1, 2]), sub(4, &[2, 3]), sub(4, &[3, 4]), sub(4, &[1, 4])];
        let k = GeneralizedNecklace::validate(quad).unwrap();
        assert!(k.as_grassmann().is_some());

        let tri = vec![sub(4, &[1, 2]), sub(4, &[2, 3]), sub(4, &[1, 3])];
        assert!(GeneralizedNecklace::validate(tri).is_ok());

        let not_neighbors = vec![sub(4, &[1, 2]), sub(4, &[3, 4]), sub(4, &[1, 4])];
        let err = GeneralizedNecklace::validate(not_neighbors).unwrap_err().to_string();
        assert!(err.contains("neighbors"), "got: {err}");

        let not_separated = vec![
            sub(4, &[1, 3]),
            sub(4, &[3, 4]),
            sub(4, &[2, 4]),
            sub(4, &[1, 2]),
        ];
        let err = GeneralizedNecklace::validate(not_separated).unwrap_err().to_string();
        assert!(err.contains("separated"), "got: {err}");
    }
}
