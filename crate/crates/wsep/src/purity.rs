//! Exhaustive enumeration of maximal separated subsystems, purity and rank
//! reports, mutations between maximal systems, and mutation-graph
//! connectivity.
//!
//! Enumeration is the ground truth here: the rank formulas elsewhere in the
//! crate are checked against it, never the other way around.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bits::Bits;
use crate::cyclic::{weakly_separated, Subset};
use crate::error::{Error, Result};
use crate::necklace::{alignments, average_rotation, Necklace, Permutation};
use crate::regions::{exterior, interior, separated_fan, Collection};

/// Default cap on the number of domain vertices fed to the enumerator.
pub const DEFAULT_LIMIT: usize = 300;

/// The separation graph of a domain: one vertex per member, an edge for
/// every weakly separated pair. The diagonal is true (separation is
/// reflexive) but ignored by the clique logic.
pub struct SeparationGraph {
    verts: Vec<Subset>,
    adj: Vec<Bits>,
}

impl SeparationGraph {
    pub fn build(domain: &Collection) -> SeparationGraph {
        let verts = domain.to_vec();
        let n = verts.len();
        let mut adj = vec![Bits::new(n); n];
        for i in 0..n {
            adj[i].insert(i);
            for j in i + 1..n {
                if weakly_separated(&verts[i], &verts[j]) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        SeparationGraph { verts, adj }
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn vertices(&self) -> &[Subset] {
        &self.verts
    }

    pub fn are_separated(&self, i: usize, j: usize) -> bool {
        self.adj[i].get(j)
    }

    /// Every inclusion-maximal clique, each as ascending vertex indices, the
    /// whole list in lexicographic order.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let n = self.verts.len();
        if n == 0 {
            return Vec::new();
        }
        // rows without the diagonal, as the pivot recursion expects
        let rows: Vec<Bits> = (0..n)
            .map(|i| {
                let mut row = self.adj[i].clone();
                row.remove(i);
                row
            })
            .collect();
        let mut out = Vec::new();
        let mut current = Vec::new();
        bron_kerbosch(&rows, &mut current, Bits::full(n), Bits::new(n), &mut out);
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }
}

/// Bron-Kerbosch with pivoting over bitset rows. The pivot is the candidate
/// dominating the most of `p`, ties broken by index, so the traversal and
/// hence the output order is deterministic.
fn bron_kerbosch(
    adj: &[Bits],
    current: &mut Vec<usize>,
    mut p: Bits,
    mut x: Bits,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(current.clone());
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by(|a, b| {
            p.and_count(&adj[*a])
                .cmp(&p.and_count(&adj[*b]))
                .then(b.cmp(a))
        })
        .expect("p or x is non-empty");
    let candidates: Vec<usize> = p.minus(&adj[pivot]).iter().collect();
    for v in candidates {
        current.push(v);
        bron_kerbosch(adj, current, p.and(&adj[v]), x.and(&adj[v]), out);
        current.pop();
        p.remove(v);
        x.insert(v);
    }
}

fn check_limit(domain: &Collection, limit: usize) -> Result<()> {
    if domain.len() > limit {
        return Err(Error::ResourceLimit(format!(
            "domain has {} members, over the limit {}; raise the limit or use maximality spot checks",
            domain.len(),
            limit
        )));
    }
    Ok(())
}

/// Every inclusion-maximal separated subsystem of the domain, in canonical
/// order.
pub fn maximal_separated_collections(
    domain: &Collection,
    limit: usize,
) -> Result<Vec<Collection>> {
    check_limit(domain, limit)?;
    let graph = SeparationGraph::build(domain);
    let cliques = graph.maximal_cliques();
    Ok(cliques
        .into_iter()
        .map(|ix| {
            Collection::new(domain.ground(), ix.into_iter().map(|i| graph.verts[i]))
                .expect("clique members come from the domain")
        })
        .collect())
}

/// Is the separated system `c` inclusion-maximal inside `domain`?
pub fn is_maximal(c: &Collection, domain: &Collection) -> Result<bool> {
    if !c.is_subset_of(domain) {
        return Err(Error::InvalidInput(
            "the candidate system is not contained in the domain".into(),
        ));
    }
    if !c.is_separated() {
        return Err(Error::InvalidInput("the candidate system is not separated".into()));
    }
    Ok(domain
        .iter()
        .all(|x| c.contains(x) || !c.separated_from(x)))
}

/// The purity verdict for a domain.
#[derive(Debug, Clone)]
pub struct PurityReport {
    pub domain_size: usize,
    pub maximal: Vec<Collection>,
    pub sizes: Vec<usize>,
    pub pure: bool,
    pub rank: usize,
}

/// Enumerates every maximal separated subsystem and reports purity and rank.
/// An empty domain is pure of rank 0.
pub fn purity_report(domain: &Collection, limit: usize) -> Result<PurityReport> {
    if domain.is_empty() {
        return Ok(PurityReport {
            domain_size: 0,
            maximal: Vec::new(),
            sizes: Vec::new(),
            pure: true,
            rank: 0,
        });
    }
    let maximal = maximal_separated_collections(domain, limit)?;
    let mut sizes: Vec<usize> = maximal.iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    let rank = *sizes.last().expect("non-empty domain has maximal systems");
    let pure = sizes.iter().all(|s| *s == rank);
    Ok(PurityReport { domain_size: domain.len(), maximal, sizes, pure, rank })
}

/// A mutation: inside a separated system containing the four side sets
/// `Aij, Ajk, Akl, Ali` of a cyclically ordered quadruple, swap the present
/// diagonal (`Aik` or `Ajl`) for the absent one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Mutation {
    /// The common core A of cardinality r - 2.
    #[serde(serialize_with = "ser_subset")]
    pub core: Subset,
    /// The quadruple in cyclic (ascending) order.
    pub quad: [usize; 4],
    /// The diagonal currently present.
    #[serde(serialize_with = "ser_subset")]
    pub from: Subset,
    /// The diagonal that replaces it.
    #[serde(serialize_with = "ser_subset")]
    pub to: Subset,
}

fn ser_subset<S: serde::Serializer>(s: &Subset, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&s.to_string())
}

impl std::fmt::Display for Mutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "core={} quad=({},{},{},{}) {} -> {}",
            self.core, self.quad[0], self.quad[1], self.quad[2], self.quad[3], self.from, self.to
        )
    }
}

/// All mutations available in `c` (which is assumed separated): every
/// quadruple whose four side sets are present and exactly one diagonal is.
pub fn find_mutations(c: &Collection) -> Vec<Mutation> {
    let members = c.to_vec();
    let mut seen: BTreeSet<(Subset, [usize; 4])> = BTreeSet::new();
    let mut out = Vec::new();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let (u, v) = (members[i], members[j]);
            let delta = u.sym_diff(&v);
            if delta.card() != 4 {
                continue;
            }
            let core = u.inter(&v);
            let q: Vec<usize> = delta.elems().collect();
            let quad = [q[0], q[1], q[2], q[3]];
            if !seen.insert((core, quad)) {
                continue;
            }
            let side = |a: usize, b: usize| core.with(a).with(b);
            let sides_present = c.contains(&side(quad[0], quad[1]))
                && c.contains(&side(quad[1], quad[2]))
                && c.contains(&side(quad[2], quad[3]))
                && c.contains(&side(quad[3], quad[0]));
            if !sides_present {
                continue;
            }
            let d1 = side(quad[0], quad[2]);
            let d2 = side(quad[1], quad[3]);
            match (c.contains(&d1), c.contains(&d2)) {
                (true, false) => out.push(Mutation { core, quad, from: d1, to: d2 }),
                (false, true) => out.push(Mutation { core, quad, from: d2, to: d1 }),
                _ => {}
            }
        }
    }
    out.sort();
    out
}

/// Applies a mutation, swapping its present diagonal for the absent one.
pub fn apply_mutation(c: &Collection, m: &Mutation) -> Result<Collection> {
    if !find_mutations(c).contains(m) {
        return Err(Error::InvalidInput(format!("mutation [{m}] is not applicable")));
    }
    Ok(c.without(&m.from).with(m.to))
}

/// Builds the graph whose nodes are the maximal separated subsystems of the
/// domain and whose edges are single mutations staying inside the domain,
/// and reports its connectivity. Empty and single-node graphs count as
/// connected.
pub fn mutation_connected(domain: &Collection, limit: usize) -> Result<bool> {
    let nodes = maximal_separated_collections(domain, limit)?;
    if nodes.len() <= 1 {
        return Ok(true);
    }
    let index = |c: &Collection| nodes.iter().position(|x| x == c);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
    for (i, node) in nodes.iter().enumerate() {
        for m in find_mutations(node) {
            if !domain.contains(&m.to) {
                continue;
            }
            let next = node.without(&m.from).with(m.to);
            if let Some(j) = index(&next) {
                adj[i].push(j);
            }
        }
    }
    let mut seen = vec![false; nodes.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    Ok(reached == nodes.len())
}

/// Rank checks for the interior and exterior of one permutation's necklace:
/// both must be pure, the interior of rank r(n-r)+1 minus the alignment
/// count, the exterior of rank equal to the alignment count.
#[derive(Debug, Clone)]
pub struct RankFormulaReport {
    pub n: usize,
    pub r: usize,
    pub alignment_count: usize,
    pub interior: PurityReport,
    pub exterior: PurityReport,
}

impl RankFormulaReport {
    pub fn expected_interior_rank(&self) -> usize {
        self.r * (self.n - self.r) + 1 - self.alignment_count
    }

    pub fn expected_exterior_rank(&self) -> usize {
        self.alignment_count
    }

    pub fn passed(&self) -> bool {
        self.interior.pure
            && self.exterior.pure
            && self.interior.rank == self.expected_interior_rank()
            && self.exterior.rank == self.expected_exterior_rank()
    }
}

pub fn verify_rank_formula(p: &Permutation, limit: usize) -> Result<RankFormulaReport> {
    let nk = Necklace::from_permutation(p);
    let int = purity_report(&interior(&nk)?, limit)?;
    let out = purity_report(&exterior(&nk)?, limit)?;
    Ok(RankFormulaReport {
        n: p.n(),
        r: average_rotation(p),
        alignment_count: alignments(p).len(),
        interior: int,
        exterior: out,
    })
}

/// The four intersection systems of a separated pair of necklaces, each with
/// its purity report, plus the ring and union special cases when their
/// hypotheses hold.
#[derive(Debug, Clone)]
pub struct PairPurityReport {
    /// None when the two necklaces are not separated (nothing to check).
    pub applicable: bool,
    pub cells: Vec<(String, PurityReport)>,
    pub rank_sum: usize,
    pub expected_rank_sum: usize,
    pub ring: Option<RingReport>,
    pub union: Option<UnionReport>,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct RingReport {
    pub pure: bool,
    pub rank: usize,
    pub expected_rank: usize,
}

#[derive(Debug, Clone)]
pub struct UnionReport {
    pub pure: bool,
    pub rank: usize,
    /// Set when the two interiors are disjoint: rank must be additive.
    pub expected_rank: Option<usize>,
}

impl PairPurityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the purity of the four intersection systems of two separated
/// necklaces and that their ranks sum to r(n-r)+1; verifies the ring rank
/// when one necklace is less than the other, and the purity (and disjoint
/// rank additivity) of the union of interiors under the stronger
/// separation hypotheses.
pub fn verify_pair_purity(
    n1: &Necklace,
    n2: &Necklace,
    limit: usize,
) -> Result<PairPurityReport> {
    let mut failures = Vec::new();
    let same_context = n1.n() == n2.n() && n1.r() == n2.r();
    let separated = same_context
        && Collection::from_necklace(n1).separated_from_all(&Collection::from_necklace(n2));
    if !separated {
        return Ok(PairPurityReport {
            applicable: false,
            cells: Vec::new(),
            rank_sum: 0,
            expected_rank_sum: 0,
            ring: None,
            union: None,
            failures,
        });
    }
    let (n, r) = (n1.n(), n1.r());
    let i1 = interior(n1)?;
    let i2 = interior(n2)?;
    let o1 = exterior(n1)?;
    let o2 = exterior(n2)?;

    let mut cells = Vec::new();
    let mut rank_sum = 0;
    for (name, cell) in [
        ("int*int", i1.inter(&i2)),
        ("int*out", i1.inter(&o2)),
        ("out*int", o1.inter(&i2)),
        ("out*out", o1.inter(&o2)),
    ] {
        let report = purity_report(&cell, limit)?;
        if !report.pure {
            failures.push(format!("cell {name} is impure (sizes {:?})", report.sizes));
        }
        rank_sum += report.rank;
        cells.push((name.to_string(), report));
    }
    let expected_rank_sum = r * (n - r) + 1;
    if rank_sum != expected_rank_sum {
        failures.push(format!(
            "cell ranks sum to {rank_sum}, expected {expected_rank_sum}"
        ));
    }

    // ring between a smaller and a larger necklace
    let ring = if n1.is_less_than(n2)? {
        let report = purity_report(&i2.inter(&o1), limit)?;
        let expected =
            expected_rank_sum - purity_report(&i1, limit)?.rank - purity_report(&o2, limit)?.rank;
        if !report.pure {
            failures.push("ring is impure".into());
        }
        if report.rank != expected {
            failures.push(format!("ring rank {} != expected {expected}", report.rank));
        }
        Some(RingReport { pure: report.pure, rank: report.rank, expected_rank: expected })
    } else {
        None
    };

    // union of interiors under the stronger hypotheses
    let union = if i1.separated_from_all(&Collection::from_necklace(n2))
        && i2.separated_from_all(&Collection::from_necklace(n1))
    {
        let u = i1.union(&i2);
        let report = purity_report(&u, limit)?;
        if !report.pure {
            failures.push("union of interiors is impure".into());
        }
        let expected = if i1.inter(&i2).is_empty() {
            let sum = purity_report(&i1, limit)?.rank + purity_report(&i2, limit)?.rank;
            if report.rank != sum {
                failures.push(format!(
                    "disjoint union rank {} != {} + {}",
                    report.rank,
                    purity_report(&i1, limit)?.rank,
                    purity_report(&i2, limit)?.rank
                ));
            }
            Some(sum)
        } else {
            None
        };
        Some(UnionReport { pure: report.pure, rank: report.rank, expected_rank: expected })
    } else {
        None
    };

    Ok(PairPurityReport {
        applicable: true,
        cells,
        rank_sum,
        expected_rank_sum,
        ring,
        union,
        failures,
    })
}

/// Result of restriction-maximality checks: for maximal systems `C` of the
/// full Grassmannian containing the necklace, `C` restricted to the interior
/// must be maximal inside the interior.
#[derive(Debug, Clone)]
pub struct RestrictionReport {
    pub trials: usize,
    pub failures: Vec<String>,
}

impl RestrictionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exhaustive variant: every maximal system of the Grassmannian containing
/// the necklace.
pub fn restriction_maximality_exhaustive(
    nk: &Necklace,
    limit: usize,
) -> Result<RestrictionReport> {
    let grass = Collection::grassmannian(nk.ground());
    let own = Collection::from_necklace(nk);
    let int = interior(nk)?;
    let mut trials = 0;
    let mut failures = Vec::new();
    for c in maximal_separated_collections(&grass, limit)? {
        if !own.is_subset_of(&c) {
            continue;
        }
        trials += 1;
        check_restriction(nk, &c, &int, &mut failures)?;
    }
    Ok(RestrictionReport { trials, failures })
}

/// Sampled variant: maximal systems grown greedily from the necklace in
/// seeded random order.
pub fn restriction_maximality_sampled(
    nk: &Necklace,
    trials: usize,
    seed: u64,
) -> Result<RestrictionReport> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    let grass = Collection::grassmannian(nk.ground());
    let int = interior(nk)?;
    let mut failures = Vec::new();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut order = grass.to_vec();
        order.shuffle(&mut rng);
        let mut grown: Vec<Subset> = nk.sets().to_vec();
        grown.dedup();
        let mut c = Collection::new(nk.ground(), grown).expect("necklace members are valid");
        for x in order {
            if !c.contains(&x) && c.separated_from(&x) {
                c = c.with(x);
            }
        }
        debug_assert!(is_maximal(&c, &grass)?);
        check_restriction(nk, &c, &int, &mut failures)?;
    }
    Ok(RestrictionReport { trials, failures })
}

fn check_restriction(
    nk: &Necklace,
    c: &Collection,
    int: &Collection,
    failures: &mut Vec<String>,
) -> Result<()> {
    let restricted = c.inter(int);
    if !is_maximal(&restricted, int)? {
        failures.push(format!(
            "restriction of {{{}}} to the interior of {nk} is not maximal there",
            c.to_vec().iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::Ground;

    fn coll(n: usize, lits: &[&str]) -> Collection {
        let members: Vec<Subset> = lits.iter().map(|l| Subset::parse(l, n).unwrap()).collect();
        let r = members[0].card();
        Collection::new(Ground::new(n, r).unwrap(), members).unwrap()
    }

    fn nk(lits: &[&str]) -> Necklace {
        let n = lits.len();
        Necklace::validate(lits.iter().map(|l| Subset::parse(l, n).unwrap()).collect()).unwrap()
    }

    /// Brute-force oracle: all separated subsystems that no member extends.
    fn maximal_by_brute_force(domain: &Collection) -> Vec<Collection> {
        let v = domain.to_vec();
        let n = v.len();
        assert!(n <= 20, "oracle is exponential");
        let mut out = Vec::new();
        'outer: for mask in 0u32..(1 << n) {
            let members: Vec<Subset> =
                (0..n).filter(|i| mask & (1 << i) != 0).map(|i| v[i]).collect();
            for a in 0..members.len() {
                for b in a + 1..members.len() {
                    if !weakly_separated(&members[a], &members[b]) {
                        continue 'outer;
                    }
                }
            }
            let c = Collection::new(domain.ground(), members).unwrap();
            for x in domain.iter() {
                if !c.contains(x) && c.separated_from(x) {
                    continue 'outer;
                }
            }
            out.push(c);
        }
        out.sort_by_key(|c| c.to_vec());
        out
    }

    #[test]
    fn grassmannian_2_4_has_two_maximal_collections() {
        let g = Collection::grassmannian(Ground::new(4, 2).unwrap());
        let max = maximal_separated_collections(&g, DEFAULT_LIMIT).unwrap();
        assert_eq!(max.len(), 2);
        assert_eq!(max[0], coll(4, &["12", "13", "14", "23", "34"]));
        assert_eq!(max[1], coll(4, &["12", "14", "23", "24", "34"]));
        assert!(max.iter().all(|c| c.len() == 5));
        assert_eq!(max, maximal_by_brute_force(&g));
    }

    #[test]
    fn enumerator_matches_brute_force_on_small_domains() {
        for (n, r) in [(4, 2), (5, 2), (4, 1), (4, 3)] {
            let g = Collection::grassmannian(Ground::new(n, r).unwrap());
            if g.len() > 12 {
                continue;
            }
            let fast = maximal_separated_collections(&g, DEFAULT_LIMIT).unwrap();
            assert_eq!(fast, maximal_by_brute_force(&g), "mismatch at ({n}, {r})");
        }
        // a non-Grassmannian domain
        let b = nk(&["12", "24", "34", "14"]);
        let int = interior(&b).unwrap();
        let fast = maximal_separated_collections(&int, DEFAULT_LIMIT).unwrap();
        assert_eq!(fast, maximal_by_brute_force(&int));
        assert_eq!(fast.len(), 1);
        assert_eq!(fast[0].len(), 4);
    }

    #[test]
    fn single_necklace_domain() {
        let b = nk(&["12", "24", "34", "14"]);
        let own = Collection::from_necklace(&b);
        let max = maximal_separated_collections(&own, DEFAULT_LIMIT).unwrap();
        assert_eq!(max, vec![own]);
    }

    #[test]
    fn is_maximal_examples() {
        let g = Collection::grassmannian(Ground::new(4, 2).unwrap());
        assert!(is_maximal(&coll(4, &["12", "23", "34", "14", "13"]), &g).unwrap());
        assert!(!is_maximal(&coll(4, &["12", "23"]), &g).unwrap());
        assert!(is_maximal(&coll(4, &["13", "24"]), &g).is_err()); // not separated

        let fig2 = coll(
            7,
            &[
                "127", "123", "234", "345", "456", "567", "167", "126", "124", "134", "346",
                "467", "146",
            ],
        );
        let g7 = Collection::grassmannian(Ground::new(7, 3).unwrap());
        assert!(fig2.is_separated());
        assert!(is_maximal(&fig2, &g7).unwrap());
        assert_eq!(fig2.len(), 3 * 4 + 1);
    }

    #[test]
    fn purity_reports() {
        let g = Collection::grassmannian(Ground::new(4, 2).unwrap());
        let rep = purity_report(&g, DEFAULT_LIMIT).unwrap();
        assert!(rep.pure);
        assert_eq!(rep.rank, 5);
        assert_eq!(rep.maximal.len(), 2);

        let b = nk(&["12", "24", "34", "14"]);
        let int_rep = purity_report(&interior(&b).unwrap(), DEFAULT_LIMIT).unwrap();
        assert!(int_rep.pure);
        assert_eq!(int_rep.rank, 4);
        let out_rep = purity_report(&exterior(&b).unwrap(), DEFAULT_LIMIT).unwrap();
        assert!(out_rep.pure);
        assert_eq!(out_rep.rank, 1);

        let empty = Collection::empty(Ground::new(4, 2).unwrap());
        let rep = purity_report(&empty, DEFAULT_LIMIT).unwrap();
        assert!(rep.pure);
        assert_eq!(rep.rank, 0);
    }

    #[test]
    fn limit_is_enforced() {
        let g = Collection::grassmannian(Ground::new(6, 3).unwrap());
        assert!(matches!(
            maximal_separated_collections(&g, 10),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn mutation_examples() {
        let c = coll(4, &["12", "23", "34", "14", "13"]);
        let ms = find_mutations(&c);
        assert_eq!(ms.len(), 1);
        let m = &ms[0];
        assert_eq!(m.core, Subset::empty(4));
        assert_eq!(m.quad, [1, 2, 3, 4]);
        assert_eq!(m.from, Subset::parse("13", 4).unwrap());
        assert_eq!(m.to, Subset::parse("24", 4).unwrap());

        let next = apply_mutation(&c, m).unwrap();
        assert_eq!(next, coll(4, &["12", "23", "34", "14", "24"]));
        assert_eq!(next.len(), c.len());
        assert!(next.is_separated());

        // the inverse mutation is found in the mutated system
        let back = find_mutations(&next);
        assert_eq!(back.len(), 1);
        assert_eq!(back[0].from, m.to);
        assert_eq!(back[0].to, m.from);
        assert_eq!(apply_mutation(&next, &back[0]).unwrap(), c);

        // stale mutation no longer applies
        assert!(apply_mutation(&next, m).is_err());

        // a lone necklace has no full quadruple
        let five = Necklace::largest(Ground::new(5, 2).unwrap());
        assert!(find_mutations(&Collection::from_necklace(&five)).is_empty());
    }

    #[test]
    fn mutations_preserve_separation_across_small_grassmannians() {
        for (n, r) in [(4, 2), (5, 2), (6, 2), (6, 3)] {
            let g = Collection::grassmannian(Ground::new(n, r).unwrap());
            for c in maximal_separated_collections(&g, DEFAULT_LIMIT).unwrap() {
                for m in find_mutations(&c) {
                    let next = apply_mutation(&c, &m).unwrap();
                    assert!(next.is_separated(), "({n},{r}) mutation {m} broke separation");
                    assert_eq!(next.len(), c.len());
                    assert!(is_maximal(&next, &g).unwrap());
                }
            }
        }
    }

    #[test]
    fn mutation_connectivity_examples() {
        let g = Collection::grassmannian(Ground::new(4, 2).unwrap());
        assert!(mutation_connected(&g, DEFAULT_LIMIT).unwrap());

        let b = nk(&["12", "24", "34", "14"]);
        assert!(mutation_connected(&interior(&b).unwrap(), DEFAULT_LIMIT).unwrap());

        let empty = Collection::empty(Ground::new(4, 2).unwrap());
        assert!(mutation_connected(&empty, DEFAULT_LIMIT).unwrap());
    }

    #[test]
    fn rank_formula_examples() {
        let rot = Permutation::rotation(5, 2);
        let rep = verify_rank_formula(&rot, DEFAULT_LIMIT).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.interior.rank, 7);
        assert_eq!(rep.exterior.rank, 0);

        let p = Permutation::parse("4,3,1,2").unwrap();
        let rep = verify_rank_formula(&p, DEFAULT_LIMIT).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.interior.rank, 4);
        assert_eq!(rep.exterior.rank, 1);
    }

    #[test]
    fn pair_purity_examples() {
        let b = nk(&["12", "24", "34", "14"]);
        let largest = Necklace::largest(Ground::new(4, 2).unwrap());

        // identical necklaces: int*out cell is empty, ranks collapse
        let rep = verify_pair_purity(&b, &b, DEFAULT_LIMIT).unwrap();
        assert!(rep.applicable);
        assert!(rep.passed(), "failures: {:?}", rep.failures);
        assert_eq!(rep.cells[1].1.rank, 0);

        // the ring between the small necklace and the largest one
        let rep = verify_pair_purity(&b, &largest, DEFAULT_LIMIT).unwrap();
        assert!(rep.applicable);
        assert!(rep.passed(), "failures: {:?}", rep.failures);
        let ring = rep.ring.expect("b is less than the largest necklace");
        assert_eq!(ring.expected_rank, 5 - 4 - 0);
        assert_eq!(ring.rank, 1);

        // non-separated pairs are skipped
        let c1 = Necklace::from_permutation(&Permutation::parse("3,2,4,1").unwrap());
        let only_if = verify_pair_purity(&c1, &c1, DEFAULT_LIMIT).unwrap();
        assert!(only_if.applicable); // a necklace is separated from itself
    }

    #[test]
    fn restriction_maximality_small() {
        let b = nk(&["12", "24", "34", "14"]);
        let rep = restriction_maximality_exhaustive(&b, DEFAULT_LIMIT).unwrap();
        assert!(rep.trials >= 1);
        assert!(rep.passed(), "failures: {:?}", rep.failures);

        let rep = restriction_maximality_sampled(&b, 25, 7).unwrap();
        assert_eq!(rep.trials, 25);
        assert!(rep.passed());

        // the largest necklace restricts trivially
        let largest = Necklace::largest(Ground::new(4, 2).unwrap());
        let rep = restriction_maximality_exhaustive(&largest, DEFAULT_LIMIT).unwrap();
        assert_eq!(rep.trials, 2);
        assert!(rep.passed());
    }

    #[test]
    fn enumeration_is_deterministic() {
        let g = Collection::grassmannian(Ground::new(6, 3).unwrap());
        let a = maximal_separated_collections(&g, DEFAULT_LIMIT).unwrap();
        let b = maximal_separated_collections(&g, DEFAULT_LIMIT).unwrap();
        assert_eq!(a, b);
        for c in &a {
            assert!(c.is_separated());
            assert!(c.is_subset_of(&g));
            assert!(is_maximal(c, &g).unwrap());
        }
    }
}
