//! Set systems over one ground context, and the regions cut out by a
//! necklace: the fan of sets separated from it, its interior, and its
//! exterior.

use std::collections::BTreeSet;
use std::fmt;

use crate::cyclic::{weakly_separated, Ground, Subset};
use crate::error::{Error, Result};
use crate::necklace::{alignments, average_rotation, GeneralizedNecklace, Necklace, Permutation};
use crate::plabic;

/// A finite system of r-subsets over one ground context. Members are kept in
/// canonical order (lexicographic on sorted element lists), so iteration and
/// the textual form are deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collection {
    ground: Ground,
    members: BTreeSet<Subset>,
}

impl Collection {
    pub fn new(ground: Ground, members: impl IntoIterator<Item = Subset>) -> Result<Collection> {
        let mut set = BTreeSet::new();
        for m in members {
            if m.n() != ground.n() {
                return Err(Error::InvalidInput(format!(
                    "member {m} lives over [{}], expected [{}]",
                    m.n(),
                    ground.n()
                )));
            }
            if m.card() != ground.r() {
                return Err(Error::InvalidInput(format!(
                    "member {m} has cardinality {}, expected {}",
                    m.card(),
                    ground.r()
                )));
            }
            set.insert(m);
        }
        Ok(Collection { ground, members: set })
    }

    pub fn empty(ground: Ground) -> Collection {
        Collection { ground, members: BTreeSet::new() }
    }

    /// The full discrete Grassmannian: every r-subset of `[n]`.
    pub fn grassmannian(ground: Ground) -> Collection {
        Collection { ground, members: ground.subsets().into_iter().collect() }
    }

    /// The distinct members of a necklace, as a collection.
    pub fn from_necklace(nk: &Necklace) -> Collection {
        Collection { ground: nk.ground(), members: nk.sets().iter().copied().collect() }
    }

    pub fn ground(&self) -> Ground {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.members.contains(s)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Subset> {
        self.members.iter()
    }

    pub fn to_vec(&self) -> Vec<Subset> {
        self.members.iter().copied().collect()
    }

    pub fn with(&self, s: Subset) -> Collection {
        let mut c = self.clone();
        c.members.insert(s);
        c
    }

    pub fn without(&self, s: &Subset) -> Collection {
        let mut c = self.clone();
        c.members.remove(s);
        c
    }

    pub fn union(&self, other: &Collection) -> Collection {
        assert_eq!(self.ground, other.ground, "mismatched grounds");
        Collection {
            ground: self.ground,
            members: self.members.union(&other.members).copied().collect(),
        }
    }

    pub fn inter(&self, other: &Collection) -> Collection {
        assert_eq!(self.ground, other.ground, "mismatched grounds");
        Collection {
            ground: self.ground,
            members: self.members.intersection(&other.members).copied().collect(),
        }
    }

    pub fn minus(&self, other: &Collection) -> Collection {
        assert_eq!(self.ground, other.ground, "mismatched grounds");
        Collection {
            ground: self.ground,
            members: self.members.difference(&other.members).copied().collect(),
        }
    }

    pub fn is_subset_of(&self, other: &Collection) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Pairwise weak separation of all members.
    pub fn is_separated(&self) -> bool {
        let v = self.to_vec();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if !weakly_separated(&v[i], &v[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Is `x` weakly separated from every member?
    pub fn separated_from(&self, x: &Subset) -> bool {
        self.members.iter().all(|m| weakly_separated(m, x))
    }

    /// Are the two systems separated from each other (every cross pair)?
    pub fn separated_from_all(&self, other: &Collection) -> bool {
        self.members.iter().all(|m| other.separated_from(m))
    }

    /// Parses the collection file format: one set literal per line, '#'
    /// comments and blank lines ignored. The ground size `n` must be given;
    /// the cardinality is inferred from the first member.
    pub fn parse(text: &str, n: usize) -> Result<Collection> {
        let lines = crate::necklace::literal_lines(text);
        let mut members = Vec::with_capacity(lines.len());
        for line in &lines {
            members.push(Subset::parse(line, n)?);
        }
        let r = members.first().map_or(0, |s| s.card());
        let ground = Ground::new(n, r)?;
        let mut seen = BTreeSet::new();
        for m in &members {
            if !seen.insert(*m) {
                return Err(Error::InvalidInput(format!("duplicate member {m}")));
            }
        }
        Collection::new(ground, members)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for m in &self.members {
            out.push_str(&m.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Collection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|m| m.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Region operations need the dummy-free form; the degenerate r = 0 necklace
/// (all members empty) is allowed since every formula below is trivial there.
fn require_dummy_free(nk: &Necklace) -> Result<()> {
    if nk.r() == 0 || nk.is_dummy_free() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "necklace has dummy elements {:?}; reduce them first",
            nk.dummies()
        )))
    }
}

/// The separated fan: all r-subsets weakly separated from every member.
pub fn separated_fan(nk: &Necklace) -> Result<Collection> {
    require_dummy_free(nk)?;
    let g = nk.ground();
    Collection::new(g, g.subsets().into_iter().filter(|x| nk.separates_with(x)))
}

/// The interior: all r-subsets dominated by every member in its own shift.
pub fn interior(nk: &Necklace) -> Result<Collection> {
    require_dummy_free(nk)?;
    let g = nk.ground();
    Collection::new(g, g.subsets().into_iter().filter(|x| nk.interior_contains(x)))
}

/// The exterior: the separated fan minus the interior.
pub fn exterior(nk: &Necklace) -> Result<Collection> {
    let fan = separated_fan(nk)?;
    let int = interior(nk)?;
    Ok(fan.minus(&int))
}

/// Chamber condition: for every alignment `i => j` of `p`, membership of `i`
/// forces membership of `j`.
pub fn is_chamber_set(x: &Subset, p: &Permutation) -> bool {
    assert_eq!(
        x.card(),
        average_rotation(p),
        "chamber sets must have the permutation's average rotation as cardinality"
    );
    alignments(p).iter().all(|al| !x.contains(al.i) || x.contains(al.j))
}

/// All chamber sets of `p`; equals the interior of the necklace of `p`.
pub fn interior_chamber(p: &Permutation) -> Collection {
    let g = Ground::new(p.n(), average_rotation(p)).expect("valid ground");
    let als = alignments(p);
    let members = g
        .subsets()
        .into_iter()
        .filter(|x| als.iter().all(|al| !x.contains(al.i) || x.contains(al.j)));
    Collection::new(g, members).expect("subsets of the ground are valid members")
}

/// All r-subsets separated from every member of the generalized necklace.
pub fn generalized_fan(k: &GeneralizedNecklace) -> Collection {
    let g = Ground::new(k.n(), k.r()).expect("valid ground");
    let members = g
        .subsets()
        .into_iter()
        .filter(|x| k.sets().iter().all(|s| weakly_separated(s, x)));
    Collection::new(g, members).expect("subsets of the ground are valid members")
}

/// The generalized interior: sets of the fan whose embedded point lies in
/// the closed region bounded by the necklace curve.
pub fn generalized_interior(k: &GeneralizedNecklace) -> Collection {
    let curve = plabic::generalized_curve(k);
    let fan = generalized_fan(k);
    let members: Vec<Subset> = fan
        .iter()
        .copied()
        .filter(|x| curve.contains(plabic::embed(x)))
        .collect();
    Collection::new(fan.ground(), members).expect("filtered members stay valid")
}

/// The generalized exterior: the fan minus the generalized interior.
pub fn generalized_exterior(k: &GeneralizedNecklace) -> Collection {
    generalized_fan(k).minus(&generalized_interior(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::Subset;

    fn nk(lits: &[&str]) -> Necklace {
        let n = lits.len();
        Necklace::validate(lits.iter().map(|l| Subset::parse(l, n).unwrap()).collect()).unwrap()
    }

    fn coll(n: usize, lits: &[&str]) -> Collection {
        let members: Vec<Subset> = lits.iter().map(|l| Subset::parse(l, n).unwrap()).collect();
        let r = members[0].card();
        Collection::new(Ground::new(n, r).unwrap(), members).unwrap()
    }

    #[test]
    fn fan_examples() {
        let largest = Necklace::largest(Ground::new(4, 2).unwrap());
        assert_eq!(separated_fan(&largest).unwrap().len(), 6);

        let b = nk(&["12", "24", "34", "14"]);
        let fan = separated_fan(&b).unwrap();
        assert_eq!(fan, coll(4, &["12", "24", "34", "14", "23"]));
        assert!(Collection::from_necklace(&b).is_subset_of(&fan));
    }

    #[test]
    fn interior_examples() {
        let largest = Necklace::largest(Ground::new(4, 2).unwrap());
        assert_eq!(interior(&largest).unwrap().len(), 6);

        let b = nk(&["12", "24", "34", "14"]);
        let int = interior(&b).unwrap();
        assert_eq!(int, coll(4, &["12", "24", "34", "14"]));
        let own = Collection::from_necklace(&b);
        assert!(own.is_subset_of(&int));
        assert!(own.separated_from_all(&int));
    }

    #[test]
    fn exterior_examples() {
        let largest = Necklace::largest(Ground::new(4, 2).unwrap());
        assert!(exterior(&largest).unwrap().is_empty());

        let b = nk(&["12", "24", "34", "14"]);
        let out = exterior(&b).unwrap();
        assert_eq!(out, coll(4, &["23"]));

        let int = interior(&b).unwrap();
        let fan = separated_fan(&b).unwrap();
        assert!(int.inter(&out).is_empty());
        assert_eq!(int.union(&out), fan);
    }

    #[test]
    fn chamber_examples() {
        let rot = Permutation::rotation(4, 2);
        assert_eq!(interior_chamber(&rot).len(), 6);

        let p = Permutation::parse("4,3,1,2").unwrap();
        assert!(!is_chamber_set(&Subset::parse("23", 4).unwrap(), &p));
        assert!(is_chamber_set(&Subset::parse("24", 4).unwrap(), &p));
        assert_eq!(interior_chamber(&p), coll(4, &["12", "24", "34", "14"]));
    }

    #[test]
    fn chamber_equals_interior_exhaustively() {
        for n in 1..=5 {
            for p in Permutation::all(n) {
                let nk = Necklace::from_permutation(&p);
                assert_eq!(
                    interior(&nk).unwrap(),
                    interior_chamber(&p),
                    "mismatch for {p}"
                );
            }
        }
    }

    #[test]
    fn dummy_necklaces_are_rejected_and_their_interiors_avoid_dummies() {
        let c = Necklace::validate(vec![
            Subset::parse("1", 3).unwrap(),
            Subset::parse("1", 3).unwrap(),
            Subset::parse("1", 3).unwrap(),
        ])
        .unwrap();
        assert!(interior(&c).is_err());
        assert!(separated_fan(&c).is_err());
        // the membership predicate still works and never admits a dummy
        let g = Ground::new(3, 1).unwrap();
        for x in g.subsets() {
            if c.interior_contains(&x) {
                assert!(!x.contains(2) && !x.contains(3), "dummy leaked into {x}");
            }
        }
    }

    #[test]
    fn degenerate_cardinalities() {
        // r = n: the constant full necklace, interior = the single full set
        let full = Necklace::validate(vec![Subset::full(3); 3]).unwrap();
        assert_eq!(interior(&full).unwrap().len(), 1);
        assert_eq!(exterior(&full).unwrap().len(), 0);

        // r = 0: the constant empty necklace
        let empty = Necklace::validate(vec![Subset::empty(3); 3]).unwrap();
        assert_eq!(interior(&empty).unwrap().len(), 1);
        assert_eq!(exterior(&empty).unwrap().len(), 0);
    }

    #[test]
    fn collection_parse_round_trip() {
        let c = coll(4, &["12", "23", "34", "14", "13"]);
        let text = c.to_text();
        assert_eq!(Collection::parse(&text, 4).unwrap(), c);
        assert!(Collection::parse("12\n12\n", 4).is_err());
        assert!(Collection::parse("12\n123\n", 4).is_err());
    }

    #[test]
    fn generalized_matches_grassmann_interior() {
        for n in 3..=5 {
            for r in 1..n {
                for p in Permutation::all(n) {
                    if average_rotation(&p) != r {
                        continue;
                    }
                    let nk = Necklace::from_permutation(&p);
                    if !nk.is_connected() {
                        continue;
                    }
                    let k = GeneralizedNecklace::validate(nk.sets().to_vec()).unwrap();
                    assert_eq!(
                        generalized_interior(&k),
                        interior(&nk).unwrap(),
                        "mismatch for {p}"
                    );
                    assert_eq!(generalized_exterior(&k), exterior(&nk).unwrap());
                }
            }
        }
    }
}
