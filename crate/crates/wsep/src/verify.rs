//! The verification battery: every structural claim the library stands on,
//! checked exhaustively over all permutations and necklaces at small n.
//!
//! Claims never trust the formulas they verify; ranks come from clique
//! enumeration, region memberships from the defining predicates, and the
//! geometric assertions from coordinates.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cyclic::{dominates, weakly_separated, weakly_separated_naive, cyclic_interval, Ground, Subset};
use crate::error::{Error, Result};
use crate::necklace::{average_rotation, Necklace, Permutation};
use crate::plabic::{complex_check, fills_region, necklace_curve, verify_membership_geometry, Tiling};
use crate::purity::{
    is_maximal, maximal_separated_collections, purity_report, restriction_maximality_exhaustive,
    restriction_maximality_sampled, verify_pair_purity, verify_rank_formula,
};
use crate::regions::{exterior, interior, interior_chamber, separated_fan, Collection};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimStatus {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Debug, Clone)]
pub struct ClaimResult {
    pub id: &'static str,
    pub description: &'static str,
    pub cases: u64,
    pub status: ClaimStatus,
}

impl ClaimResult {
    fn from_witness(
        id: &'static str,
        description: &'static str,
        cases: u64,
        witness: Option<String>,
    ) -> ClaimResult {
        let status = match witness {
            None => ClaimStatus::Pass,
            Some(w) => ClaimStatus::Fail(w),
        };
        ClaimResult { id, description, cases, status }
    }

    pub fn passed(&self) -> bool {
        !matches!(self.status, ClaimStatus::Fail(_))
    }

    pub fn to_json(&self) -> Value {
        let (status, witness) = match &self.status {
            ClaimStatus::Pass => ("pass", None),
            ClaimStatus::Fail(w) => ("fail", Some(w.clone())),
            ClaimStatus::Skipped(w) => ("skipped", Some(w.clone())),
        };
        json!({
            "id": self.id,
            "description": self.description,
            "cases": self.cases,
            "status": status,
            "witness": witness,
        })
    }
}

#[derive(Debug, Clone)]
pub struct VerificationRun {
    pub suite: String,
    pub n_max: usize,
    pub seed: u64,
    pub claims: Vec<ClaimResult>,
    pub elapsed_ms: u128,
}

impl VerificationRun {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "n_max": self.n_max,
            "seed": self.seed,
            "passed": self.passed(),
            "elapsed_ms": self.elapsed_ms as u64,
            "claims": self.claims.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Every necklace over `[n]`: each choice of dummy elements combined with
/// each dummy-free necklace on the kept elements, lifted back. Includes the
/// all-empty necklace (every element a dummy).
pub fn all_necklaces(n: usize) -> Vec<Necklace> {
    let mut out = Vec::new();
    for kept_mask in 0u64..(1 << n) {
        let kept: Vec<usize> = (0..n).filter(|b| kept_mask & (1 << b) != 0).map(|b| b + 1).collect();
        let m = kept.len();
        if m == 0 {
            out.push(Necklace::validate(vec![Subset::empty(n); n]).expect("empty necklace"));
            continue;
        }
        for p in Permutation::all(m) {
            let reduced = Necklace::from_permutation(&p);
            // lift: kept positions take the relabeled member, dummy positions
            // copy the next kept position's member
            let mut sets: Vec<Option<Subset>> = vec![None; n];
            for (t, &pos) in kept.iter().enumerate() {
                let lifted: Vec<usize> =
                    reduced.member(t + 1).elems().map(|e| kept[e - 1]).collect();
                sets[pos - 1] = Some(Subset::from_elems(n, &lifted).expect("valid lift"));
            }
            for i in (1..=n).rev().chain((1..=n).rev()) {
                if sets[i - 1].is_none() {
                    sets[i - 1] = sets[i % n];
                }
            }
            let sets: Vec<Subset> = sets.into_iter().map(|s| s.expect("all filled")).collect();
            out.push(Necklace::validate(sets).expect("lifted necklace is valid"));
        }
    }
    out
}

fn dummy_free_necklaces(n: usize) -> Vec<(Permutation, Necklace)> {
    Permutation::all(n)
        .into_iter()
        .map(|p| {
            let nk = Necklace::from_permutation(&p);
            (p, nk)
        })
        .collect()
}

fn first_witness(results: Vec<(u64, Option<String>)>) -> (u64, Option<String>) {
    let cases = results.iter().map(|(c, _)| c).sum();
    let witness = results.into_iter().find_map(|(_, w)| w);
    (cases, witness)
}

/// The run-count separation decision agrees with the shift-scan oracle on
/// every pair of equal-size subsets.
pub fn claim_separation_oracle(n_max: usize) -> ClaimResult {
    let cap = n_max.min(8);
    let mut cases = 0u64;
    let mut witness = None;
    'outer: for n in 1..=cap {
        for r in 0..=n {
            let all = Ground::new(n, r).expect("valid").subsets();
            for x in &all {
                for y in &all {
                    cases += 1;
                    if weakly_separated(x, y) != weakly_separated_naive(x, y) {
                        witness = Some(format!("n={n} x={x} y={y}"));
                        break 'outer;
                    }
                }
            }
        }
    }
    ClaimResult::from_witness(
        "separation-oracle-agreement",
        "run-count separation equals the shift-scan oracle on all pairs",
        cases,
        witness,
    )
}

/// Every maximal separated collection in the (n, r) Grassmannian has size
/// exactly r(n-r)+1.
pub fn claim_grassmannian_purity(n_max: usize, limit: usize) -> ClaimResult {
    let cap = n_max.min(7);
    let params: Vec<(usize, usize)> =
        (2..=cap).flat_map(|n| (1..n).map(move |r| (n, r))).collect();
    let results: Vec<(u64, Option<String>)> = params
        .par_iter()
        .map(|&(n, r)| {
            let g = Collection::grassmannian(Ground::new(n, r).expect("valid"));
            let expected = r * (n - r) + 1;
            match purity_report(&g, limit) {
                Err(e) => (0, Some(format!("(n={n}, r={r}): {e}"))),
                Ok(rep) => {
                    let bad = rep.maximal.iter().find(|c| c.len() != expected);
                    let w = bad.map(|c| {
                        format!("(n={n}, r={r}): maximal collection of size {} != {expected}: {c}", c.len())
                    });
                    (rep.maximal.len() as u64, w)
                }
            }
        })
        .collect();
    let (cases, witness) = first_witness(results);
    ClaimResult::from_witness(
        "grassmannian-purity",
        "every maximal separated collection in the Grassmannian has size r(n-r)+1",
        cases,
        witness,
    )
}

/// For every permutation, the interior is pure of rank r(n-r)+1 minus the
/// alignment count and the exterior is pure of rank the alignment count.
pub fn claim_interior_exterior_rank(n_max: usize, limit: usize) -> ClaimResult {
    let cap = n_max.min(6);
    let results: Vec<(u64, Option<String>)> = (1..=cap)
        .flat_map(|n| Permutation::all(n))
        .collect::<Vec<_>>()
        .par_iter()
        .map(|p| match verify_rank_formula(p, limit) {
            Err(e) => (0, Some(format!("{p}: {e}"))),
            Ok(rep) => {
                let w = if rep.passed() {
                    None
                } else {
                    Some(format!(
                        "{p}: interior rank {} (pure {}), exterior rank {} (pure {}), {} alignments",
                        rep.interior.rank,
                        rep.interior.pure,
                        rep.exterior.rank,
                        rep.exterior.pure,
                        rep.alignment_count
                    ))
                };
                (1, w)
            }
        })
        .collect();
    let (cases, witness) = first_witness(results);
    ClaimResult::from_witness(
        "interior-exterior-rank",
        "interiors and exteriors are pure with ranks determined by the alignment count",
        cases,
        witness,
    )
}

/// The interior of a permutation's necklace equals its chamber sets.
pub fn claim_chamber_equality(n_max: usize) -> ClaimResult {
    let cap = n_max.min(6);
    let results: Vec<(u64, Option<String>)> = (1..=cap)
        .flat_map(dummy_free_necklaces)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(p, nk)| {
            let int = interior(nk).expect("dummy-free");
            let chamber = interior_chamber(p);
            let w = (int != chamber).then(|| format!("{p}: interior {int} != chamber sets {chamber}"));
            (1, w)
        })
        .collect();
    let (cases, witness) = first_witness(results);
    ClaimResult::from_witness(
        "chamber-interior-equality",
        "interior membership coincides with the chamber condition on alignments",
        cases,
        witness,
    )
}

/// Interior and exterior are weakly separated from each other.
pub fn claim_interior_exterior_separation(n_max: usize) -> ClaimResult {
    let cap = n_max.min(6);
    let results: Vec<(u64, Option<String>)> = (1..=cap)
        .flat_map(dummy_free_necklaces)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(p, nk)| {
            let int = interior(nk).expect("dummy-free");
            let out = exterior(nk).expect("dummy-free");
            for x in out.iter() {
                for y in int.iter() {
                    if !weakly_separated(x, y) {
                        return (1, Some(format!("{p}: exterior {x} not separated from interior {y}")));
                    }
                }
            }
            (1, None)
        })
        .collect();
    let (cases, witness) = first_witness(results);
    ClaimResult::from_witness(
        "interior-exterior-separation",
        "every exterior set is weakly separated from every interior set",
        cases,
        witness,
    )
}

/// Restricting a maximal Grassmannian collection that contains the necklace
/// to the interior leaves a maximal collection of the interior; exhaustive
/// through n = 5, seeded samples at n = 6.
pub fn claim_restriction_maximality(n_max: usize, seed: u64, limit: usize) -> ClaimResult {
    let cap = n_max.min(6);
    let results: Vec<(u64, Option<String>)> = (1..=cap)
        .flat_map(dummy_free_necklaces)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(p, nk)| {
            let rep = if nk.n() <= 5 {
                restriction_maximality_exhaustive(nk, limit)
            } else {
                restriction_maximality_sampled(nk, 100, seed ^ hash_perm(p))
            };
            match rep {
                Err(e) => (0, Some(format!("{p}: {e}"))),
                Ok(rep) => {
                    let w = (!rep.passed()).then(|| format!("{p}: {}", rep.failures[0]));
                    (rep.trials as u64, w)
                }
            }
        })
        .collect();
    let (cases, witness) = first_witness(results);
    ClaimResult::from_witness(
        "restriction-maximality",
        "maximal Grassmannian collections containing a necklace restrict to maximal collections of its interior",
        cases,
        witness,
    )
}

fn hash_perm(p: &Permutation) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    for i in 1..=p.n() {
        h ^= p.apply(i) as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// In a maximal Grassmannian collection, a cyclically ordered quadruple with
/// all four side sets present forces one of the two diagonals.
pub fn claim_quadruple_closure(n_max: usize, limit: usize) -> ClaimResult {
    let cap = n_max.min(6);
    let params: Vec<(usize, usize)> =
        (2..=cap).flat_map(|n| (1..n).map(move |r| (n, r))).collect();
    let results: Vec<(u64, Option<String>)> = params
        .par_iter()
        .map(|&(n, r)| {
            let g = Collection::grassmannian(Ground::new(n, r).expect("valid"));
            let maximal = match maximal_separated_collections(&g, limit) {
                Ok(m) => m,
                Err(e) => return (0, Some(format!("(n={n}, r={r}): {e}"))),
            };
            let mut cases = 0u64;
            for c in &maximal {
                let members = c.to_vec();
                for i in 0..members.len() {
                    for j in i + 1..members.len() {
                        let delta = members[i].sym_diff(&members[j]);
                        if delta.card() != 4 {
                            continue;
                        }
                        let core = members[i].inter(&members[j]);
                        let q: Vec<usize> = delta.elems().collect();
                        let side = |a: usize, b: usize| core.with(a).with(b);
                        if !(c.contains(&side(q[0], q[1]))
                            && c.contains(&side(q[1], q[2]))
                            && c.contains(&side(q[2], q[3]))
                            && c.contains(&side(q[3], q[0])))
                        {
                            continue;
                        }
                        cases += 1;
                        if !c.contains(&side(q[0], q[2])) && !c.contains(&side(q[1], q[3])) {
                            return (
                                cases,
                                Some(format!(
                                    "(n={n}, r={r}) collection {c}: quadruple core={core} ({},{},{},{}) has no diagonal",
                                    q[0], q[1], q[2], q[3]
                                )),
                            );
                        }
                    }
                }
            }
            (cases, None)
        })
        .collect();
    let (cases, witness) = first_witness(results);
    ClaimResult::from_witness(
        "quadruple-closure",
        "maximal collections contain a diagonal of every fully present quadruple",
        cases,
        witness,
    )
}

/// For separated pairs of necklaces, the four region intersections are pure
/// and their ranks sum to r(n-r)+1, with the ring and union special cases.
pub fn claim_pair_purity(n_max: usize, limit: usize) -> ClaimResult {
    let cap = n_max.min(5);
    let mut jobs = Vec::new();
    for n in 1..=cap {
        let necklaces: Vec<Necklace> =
            dummy_free_necklaces(n).into_iter().map(|(_, nk)| nk).collect();
        for a in 0..necklaces.len() {
            for b in a..necklaces.len() {
                if necklaces[a].r() == necklaces[b].r() {
                    jobs.push((necklaces[a].clone(), necklaces[b].clone()));
                }
            }
        }
    }
    let results: Vec<(u64, Option<String>)> = jobs
        .par_iter()
        .map(|(n1, n2)| match verify_pair_purity(n1, n2, limit) {
            Err(e) => (0, Some(format!("{n1} vs {n2}: {e}"))),
            Ok(rep) => {
                if !rep.applicable {
                    (0, None)
                } else {
                    let w = (!rep.passed()).then(|| format!("{n1} vs {n2}: {}", rep.failures[0]));
                    (1, w)
                }
            }
        })
        .collect();
    let (cases, witness) = first_witness(results);
    ClaimResult::from_witness(
        "pair-intersection-purity",
        "region intersections of separated necklace pairs are pure with ranks summing to r(n-r)+1",
        cases,
        witness,
    )
}

/// Dominance is transitive across a weakly separated endpoint pair.
pub fn claim_dominance_transitivity(n_max: usize) -> ClaimResult {
    let cap = n_max.min(6);
    let results: Vec<(u64, Option<String>)> = (1..=cap)
        .flat_map(|n| (0..=n).map(move |r| (n, r)))
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&(n, r)| {
            let all = Ground::new(n, r).expect("valid").subsets();
            let mut cases = 0u64;
            for i in 1..=n {
                for x in &all {
                    for y in &all {
                        if !dominates(x, y, i) {
                            continue;
                        }
                        for z in &all {
                            if !dominates(y, z, i) || !weakly_separated(x, z) {
                                continue;
                            }
                            cases += 1;
                            if !dominates(x, z, i) {
                                return (
                                    cases,
                                    Some(format!("n={n} i={i}: x={x} y={y} z={z}")),
                                );
                            }
                        }
                    }
                }
            }
            (cases, None)
        })
        .collect();
    let (cases, witness) = first_witness(results);
    ClaimResult::from_witness(
        "dominance-transitivity",
        "x <<_i y <<_i z with x, z separated forces x <<_i z",
        cases,
        witness,
    )
}

/// For every necklace (dummies included), N_i - N_j lies in the cyclic
/// window [i, j).
pub fn claim_difference_window(n_max: usize) -> ClaimResult {
    let cap = n_max.min(7);
    let results: Vec<(u64, Option<String>)> = (1..=cap)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&n| {
            let mut cases = 0u64;
            for nk in all_necklaces(n) {
                for i in 1..=n {
                    for j in 1..=n {
                        if i == j {
                            continue;
                        }
                        cases += 1;
                        let diff = nk.member(i).minus(&nk.member(j));
                        let window = cyclic_interval(i, (j + n - i) % n, n);
                        if !diff.is_subset_of(&window) {
                            return (cases, Some(format!("{nk}: i={i} j={j} diff={diff}")));
                        }
                        if !dominates(&nk.member(i), &nk.member(j), i) {
                            return (cases, Some(format!("{nk}: N_{i} does not dominate N_{j}")));
                        }
                    }
                }
            }
            (cases, None)
        })
        .collect();
    let (cases, witness) = first_witness(results);
    ClaimResult::from_witness(
        "necklace-difference-window",
        "necklace member differences stay inside their cyclic index window",
        cases,
        witness,
    )
}

/// The membership criterion for the "less than" order matches interior
/// containment, and a smaller necklace has the larger exterior.
pub fn claim_less_order(n_max: usize) -> ClaimResult {
    let cap = n_max.min(5);
    let mut cases = 0u64;
    let mut witness = None;
    'outer: for n in 1..=cap {
        let necklaces: Vec<Necklace> =
            dummy_free_necklaces(n).into_iter().map(|(_, nk)| nk).collect();
        let interiors: Vec<Collection> =
            necklaces.iter().map(|nk| interior(nk).expect("dummy-free")).collect();
        let exteriors: Vec<Collection> =
            necklaces.iter().map(|nk| exterior(nk).expect("dummy-free")).collect();
        for a in 0..necklaces.len() {
            for b in 0..necklaces.len() {
                if necklaces[a].r() != necklaces[b].r() {
                    continue;
                }
                cases += 1;
                let criterion = necklaces[a].is_less_than(&necklaces[b]).expect("same context");
                let oracle = interiors[a].is_subset_of(&interiors[b]);
                if criterion != oracle {
                    witness = Some(format!(
                        "{} vs {}: criterion {criterion}, interior containment {oracle}",
                        necklaces[a], necklaces[b]
                    ));
                    break 'outer;
                }
                if criterion && !exteriors[b].is_subset_of(&exteriors[a]) {
                    witness = Some(format!(
                        "{} < {} but the larger necklace's exterior is not contained",
                        necklaces[a], necklaces[b]
                    ));
                    break 'outer;
                }
            }
        }
    }
    ClaimResult::from_witness(
        "less-order-criterion",
        "necklace membership in the interior decides interior containment",
        cases,
        witness,
    )
}

/// Combinatorial interior membership coincides with the geometric inside
/// test on the whole separated fan.
pub fn claim_membership_geometry(n_max: usize) -> ClaimResult {
    let cap = n_max.min(6);
    let results: Vec<(u64, Option<String>)> = (1..=cap)
        .flat_map(dummy_free_necklaces)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(p, nk)| {
            if !nk.is_connected() {
                return (0, None);
            }
            match verify_membership_geometry(nk) {
                Err(e) => (0, Some(format!("{p}: {e}"))),
                Ok(rep) => {
                    let w = (!rep.passed()).then(|| {
                        let (x, comb, geo) = &rep.mismatches[0];
                        format!("{p}: {x} combinatorial={comb} geometric={geo}")
                    });
                    (rep.cases as u64, w)
                }
            }
        })
        .collect();
    let (cases, witness) = first_witness(results);
    ClaimResult::from_witness(
        "membership-geometry",
        "interior membership matches the inside test against the necklace curve",
        cases,
        witness,
    )
}

/// Maximal collections of an interior fill the necklace polygon; dropping
/// any single member breaks the fill.
pub fn claim_fill_in(n_max: usize, limit: usize) -> ClaimResult {
    let cap = n_max.min(6);
    let results: Vec<(u64, Option<String>)> = (1..=cap)
        .flat_map(dummy_free_necklaces)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(p, nk)| {
            if !nk.is_connected() {
                return (0, None);
            }
            let curve = match necklace_curve(nk) {
                Ok(c) => c,
                Err(e) => return (0, Some(format!("{p}: {e}"))),
            };
            let int = interior(nk).expect("dummy-free");
            let maximal = match maximal_separated_collections(&int, limit) {
                Ok(m) => m,
                Err(e) => return (0, Some(format!("{p}: {e}"))),
            };
            let mut cases = 0u64;
            for c in &maximal {
                cases += 1;
                let t = match Tiling::build(c) {
                    Ok(t) => t,
                    Err(e) => return (cases, Some(format!("{p}: {e}"))),
                };
                match fills_region(&t, &curve) {
                    Ok(true) => {}
                    Ok(false) => {
                        return (cases, Some(format!("{p}: maximal {c} does not fill the polygon")))
                    }
                    Err(e) => return (cases, Some(format!("{p}: {e}"))),
                }
                for member in c.iter() {
                    cases += 1;
                    let smaller = c.without(member);
                    let t = match Tiling::build(&smaller) {
                        Ok(t) => t,
                        Err(e) => return (cases, Some(format!("{p}: {e}"))),
                    };
                    match fills_region(&t, &curve) {
                        Ok(false) => {}
                        Ok(true) => {
                            return (
                                cases,
                                Some(format!(
                                    "{p}: dropping {member} from {c} still fills the polygon"
                                )),
                            )
                        }
                        Err(e) => return (cases, Some(format!("{p}: {e}"))),
                    }
                }
            }
            (cases, None)
        })
        .collect();
    let (cases, witness) = first_witness(results);
    ClaimResult::from_witness(
        "fill-in-maximality",
        "a separated system inside an interior is maximal exactly when its tiling fills the polygon",
        cases,
        witness,
    )
}

/// Necklace curves of connected necklaces are simple closed curves.
pub fn claim_curve_simplicity(n_max: usize) -> ClaimResult {
    let cap = n_max.min(7);
    let results: Vec<(u64, Option<String>)> = (1..=cap)
        .flat_map(dummy_free_necklaces)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(p, nk)| {
            if !nk.is_connected() {
                return (0, None);
            }
            match necklace_curve(nk) {
                Ok(_) => (1, None),
                Err(e) => (1, Some(format!("{p}: {e}"))),
            }
        })
        .collect();
    let (cases, witness) = first_witness(results);
    ClaimResult::from_witness(
        "curve-simplicity",
        "the closed curve through a connected necklace never self-intersects",
        cases,
        witness,
    )
}

/// The mutation graph on the maximal collections of every interior is
/// connected.
pub fn claim_mutation_connectivity(n_max: usize, limit: usize) -> ClaimResult {
    let cap = n_max.min(6);
    let results: Vec<(u64, Option<String>)> = (1..=cap)
        .flat_map(dummy_free_necklaces)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(p, nk)| {
            let int = interior(nk).expect("dummy-free");
            match crate::purity::mutation_connected(&int, limit) {
                Err(e) => (0, Some(format!("{p}: {e}"))),
                Ok(true) => (1, None),
                Ok(false) => (1, Some(format!("{p}: mutation graph of the interior is disconnected"))),
            }
        })
        .collect();
    let (cases, witness) = first_witness(results);
    ClaimResult::from_witness(
        "mutation-connectivity",
        "maximal collections of an interior are connected under mutations",
        cases,
        witness,
    )
}

/// Number of triangulations of the convex k-gon on vertices i..j, by the
/// interval recurrence; the independent count for the r = 2 cross-check.
fn triangulation_count(n: usize) -> u64 {
    // t[i][j]: triangulations of the polygon on vertices i, i+1, ..., j
    let mut t = vec![vec![0u64; n + 1]; n + 1];
    for i in 1..n {
        t[i][i + 1] = 1;
    }
    for span in 2..n {
        for i in 1..=n - span {
            let j = i + span;
            t[i][j] = (i + 1..j).map(|k| t[i][k] * t[k][j]).sum();
        }
    }
    t[1][n]
}

/// The maximal collections of the r = 2 Grassmannian are counted by the
/// polygon triangulation numbers.
pub fn claim_triangulation_count(n_max: usize, limit: usize) -> ClaimResult {
    let cap = n_max.min(8);
    let mut cases = 0u64;
    let mut witness = None;
    for n in 3..=cap {
        let g = Collection::grassmannian(Ground::new(n, 2).expect("valid"));
        match maximal_separated_collections(&g, limit) {
            Err(e) => {
                witness = Some(format!("n={n}: {e}"));
                break;
            }
            Ok(maximal) => {
                cases += 1;
                let expected = triangulation_count(n);
                if maximal.len() as u64 != expected {
                    witness = Some(format!(
                        "n={n}: {} maximal collections, {expected} triangulations",
                        maximal.len()
                    ));
                    break;
                }
            }
        }
    }
    ClaimResult::from_witness(
        "triangulation-count",
        "maximal collections at r = 2 are counted by polygon triangulations",
        cases,
        witness,
    )
}

/// Tilings of maximal Grassmannian collections are valid complexes with
/// disk topology (V - E + F = 1).
pub fn claim_tiling_complex(n_max: usize, limit: usize) -> ClaimResult {
    let cap = n_max.min(6);
    let params: Vec<(usize, usize)> =
        (2..=cap).flat_map(|n| (1..n).map(move |r| (n, r))).collect();
    let results: Vec<(u64, Option<String>)> = params
        .par_iter()
        .map(|&(n, r)| {
            let g = Collection::grassmannian(Ground::new(n, r).expect("valid"));
            let maximal = match maximal_separated_collections(&g, limit) {
                Ok(m) => m,
                Err(e) => return (0, Some(format!("(n={n}, r={r}): {e}"))),
            };
            let mut cases = 0u64;
            for c in &maximal {
                cases += 1;
                let t = match Tiling::build(c) {
                    Ok(t) => t,
                    Err(e) => return (cases, Some(format!("(n={n}, r={r}) {c}: {e}"))),
                };
                let rep = complex_check(&t);
                if !rep.passed() {
                    return (cases, Some(format!("(n={n}, r={r}) {c}: {}", rep.violations[0])));
                }
                if t.euler() != 1 {
                    return (
                        cases,
                        Some(format!(
                            "(n={n}, r={r}) {c}: V={} E={} F={} gives {}",
                            t.vertex_count(),
                            t.edge_count(),
                            t.face_count(),
                            t.euler()
                        )),
                    );
                }
            }
            (cases, None)
        })
        .collect();
    let (cases, witness) = first_witness(results);
    ClaimResult::from_witness(
        "tiling-complex",
        "maximal-collection tilings are valid polygonal complexes with V - E + F = 1",
        cases,
        witness,
    )
}

/// The thirteen-set heptagon fixture: separated, maximal, contains the
/// largest necklace, tiles as a disk, and fills the regular heptagon.
pub fn claim_heptagon_fixture() -> ClaimResult {
    let run = || -> std::result::Result<u64, String> {
        let lits = [
            "127", "123", "234", "345", "456", "567", "167", "126", "124", "134", "346", "467",
            "146",
        ];
        let g = Ground::new(7, 3).map_err(|e| e.to_string())?;
        let members: Vec<Subset> = lits
            .iter()
            .map(|l| Subset::parse(l, 7))
            .collect::<Result<_>>()
            .map_err(|e| e.to_string())?;
        let c = Collection::new(g, members).map_err(|e| e.to_string())?;
        if c.len() != 13 {
            return Err(format!("fixture has {} members, expected 13", c.len()));
        }
        if !c.is_separated() {
            return Err("fixture is not weakly separated".into());
        }
        let grass = Collection::grassmannian(g);
        if !is_maximal(&c, &grass).map_err(|e| e.to_string())? {
            return Err("fixture is not maximal".into());
        }
        let nk = Necklace::largest(g);
        if !Collection::from_necklace(&nk).is_subset_of(&c) {
            return Err("fixture does not contain the largest necklace".into());
        }
        let t = Tiling::build(&c).map_err(|e| e.to_string())?;
        let rep = complex_check(&t);
        if !rep.passed() {
            return Err(format!("complex check failed: {}", rep.violations[0]));
        }
        if t.euler() != 1 {
            return Err(format!("V - E + F = {}", t.euler()));
        }
        let curve = necklace_curve(&nk).map_err(|e| e.to_string())?;
        if !fills_region(&t, &curve).map_err(|e| e.to_string())? {
            return Err("fixture does not fill the regular heptagon".into());
        }
        Ok(7)
    };
    let (cases, witness) = match run() {
        Ok(cases) => (cases, None),
        Err(w) => (0, Some(w)),
    };
    ClaimResult::from_witness(
        "heptagon-fixture",
        "the thirteen-set heptagon collection is maximal and tiles the regular heptagon",
        cases,
        witness,
    )
}

/// Separated fans contain their necklace; interiors sit inside fans; the
/// two region characterizations stay consistent.
pub fn claim_region_consistency(n_max: usize) -> ClaimResult {
    let cap = n_max.min(6);
    let results: Vec<(u64, Option<String>)> = (1..=cap)
        .flat_map(dummy_free_necklaces)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(p, nk)| {
            let fan = separated_fan(nk).expect("dummy-free");
            let int = interior(nk).expect("dummy-free");
            let out = exterior(nk).expect("dummy-free");
            let own = Collection::from_necklace(nk);
            let mut w = None;
            if !own.is_subset_of(&int) {
                w = Some(format!("{p}: necklace not inside its interior"));
            } else if !int.is_subset_of(&fan) {
                w = Some(format!("{p}: interior escapes the separated fan"));
            } else if !int.inter(&out).is_empty() || int.union(&out) != fan {
                w = Some(format!("{p}: interior and exterior do not partition the fan"));
            } else if !own.separated_from_all(&int) {
                w = Some(format!("{p}: necklace not separated from its interior"));
            }
            (1, w)
        })
        .collect();
    let (cases, witness) = first_witness(results);
    ClaimResult::from_witness(
        "region-consistency",
        "necklace, interior, exterior, and fan satisfy their containment relations",
        cases,
        witness,
    )
}

/// Runs the full battery. Claims clamp the shared `n_max` to their own
/// exhaustion caps, so `n_max = 7` is the documented full run.
pub fn run_verify(suite: &str, n_max: usize, seed: u64, limit: usize) -> Result<VerificationRun> {
    if suite != "theorems" {
        return Err(Error::InvalidInput(format!(
            "unknown suite {suite:?}; available: theorems"
        )));
    }
    let start = std::time::Instant::now();
    let claims = vec![
        claim_separation_oracle(n_max),
        claim_dominance_transitivity(n_max),
        claim_difference_window(n_max),
        claim_region_consistency(n_max),
        claim_grassmannian_purity(n_max, limit),
        claim_interior_exterior_rank(n_max, limit),
        claim_chamber_equality(n_max),
        claim_interior_exterior_separation(n_max),
        claim_restriction_maximality(n_max, seed, limit),
        claim_quadruple_closure(n_max, limit),
        claim_pair_purity(n_max, limit),
        claim_less_order(n_max),
        claim_membership_geometry(n_max),
        claim_fill_in(n_max, limit),
        claim_curve_simplicity(n_max),
        claim_mutation_connectivity(n_max, limit),
        claim_triangulation_count(n_max, limit),
        claim_tiling_complex(n_max, limit),
        claim_heptagon_fixture(),
    ];
    Ok(VerificationRun {
        suite: suite.to_string(),
        n_max,
        seed,
        claims,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_necklaces_counts() {
        // sum over kept subsets K of |K|! (plus the all-empty necklace)
        assert_eq!(all_necklaces(1).len(), 2);
        assert_eq!(all_necklaces(2).len(), 1 + 2 + 2);
        assert_eq!(all_necklaces(3).len(), 1 + 3 + 3 * 2 + 6);
        // all distinct
        let nks = all_necklaces(4);
        let set: std::collections::BTreeSet<String> =
            nks.iter().map(|nk| nk.to_string()).collect();
        assert_eq!(set.len(), nks.len());
    }

    #[test]
    fn triangulation_counts_are_catalan() {
        assert_eq!(triangulation_count(3), 1);
        assert_eq!(triangulation_count(4), 2);
        assert_eq!(triangulation_count(5), 5);
        assert_eq!(triangulation_count(6), 14);
        assert_eq!(triangulation_count(7), 42);
        assert_eq!(triangulation_count(8), 132);
    }

    #[test]
    fn smoke_battery_passes_at_tiny_n() {
        let run = run_verify("theorems", 4, 0, 300).unwrap();
        for claim in &run.claims {
            assert!(
                claim.passed(),
                "claim {} failed: {:?}",
                claim.id,
                claim.status
            );
        }
        assert!(run.passed());
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_verify("nope", 4, 0, 300).is_err());
    }

    #[test]
    fn seed_changes_only_samples_not_outcomes() {
        let a = claim_restriction_maximality(4, 1, 300);
        let b = claim_restriction_maximality(4, 2, 300);
        assert!(a.passed() && b.passed());
        assert_eq!(a.cases, b.cases); // exhaustive below n = 6
    }
}
