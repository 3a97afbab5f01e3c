//! The monomial basis of the cohomology of the genus-zero moduli space
//! with `1+p` marked points, together with the cyclic relabeling action
//! and its orbit decomposition.
//!
//! Marked points are labeled `1..=p` plus a distinguished extra point
//! that the rotation never moves; only the first `p` labels appear in
//! generator subsets. A basis monomial assigns a positive exponent to
//! finitely many subsets `S` with `|S| >= 3` subject to two conditions:
//! the support must be laminar (any two supports are nested or
//! disjoint), and the exponent of each `S` is bounded through its
//! maximal proper support-subsets `S_1, ..., S_k` by
//! `d_S < k - 1 + |S| - sum |S_i|`.
//!
//! Each generator contributes cohomological degree 2, so a monomial with
//! exponent sum `d` sits in degree `2d`. The grading is validated
//! externally against an independent point-count oracle in the test
//! suite.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::fp_linalg::is_prime;

/// Errors from basis construction and orbit decomposition.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BasisError {
    #[error("malformed monomial: {0}")]
    MalformedMonomial(String),
    #[error("label {label} outside the marked range 1..={marked_count}")]
    LabelOutOfRange { label: u8, marked_count: u8 },
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("orbit of size {size} under an order-{p} action; sizes must be 1 or {p}")]
    OrbitSizeInvalid { size: usize, p: u8 },
}

/// A subset of the movable marked points `{1, ..., p}` with at least
/// three elements, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedSet {
    members: Vec<u8>,
}

impl MarkedSet {
    pub fn new(members: &[u8]) -> Result<Self, BasisError> {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != members.len() {
            return Err(BasisError::MalformedMonomial(
                "duplicate labels in a marked set".into(),
            ));
        }
        if sorted.len() < 3 {
            return Err(BasisError::MalformedMonomial(format!(
                "marked set has {} elements; at least 3 required",
                sorted.len()
            )));
        }
        if sorted[0] == 0 {
            return Err(BasisError::MalformedMonomial(
                "marked labels start at 1".into(),
            ));
        }
        Ok(MarkedSet { members: sorted })
    }

    pub fn members(&self) -> &[u8] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, label: u8) -> bool {
        self.members.binary_search(&label).is_ok()
    }

    pub fn is_subset_of(&self, other: &MarkedSet) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    pub fn is_disjoint_from(&self, other: &MarkedSet) -> bool {
        self.members.iter().all(|&m| !other.contains(m))
    }

    /// Relabel by the rotation `i -> i+1` (mod `marked_count`, 1-based).
    pub fn cyclic_shift(&self, marked_count: u8) -> MarkedSet {
        let shifted: Vec<u8> = self
            .members
            .iter()
            .map(|&m| (m % marked_count) + 1)
            .collect();
        MarkedSet::new(&shifted).expect("shift preserves cardinality and range")
    }
}

impl fmt::Display for MarkedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// A basis monomial: a finitely supported exponent map on marked sets.
///
/// The empty map is the degree-zero unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    exponents: BTreeMap<MarkedSet, u32>,
    marked_count: u8,
}

impl Monomial {
    /// The degree-zero unit monomial.
    pub fn unit(marked_count: u8) -> Monomial {
        Monomial {
            exponents: BTreeMap::new(),
            marked_count,
        }
    }

    /// Validated constructor: every label must lie in `1..=marked_count`
    /// and every set must be a legal marked set. Zero exponents are
    /// dropped.
    pub fn new(marked_count: u8, terms: &[(MarkedSet, u32)]) -> Result<Monomial, BasisError> {
        let mut exponents = BTreeMap::new();
        for (set, exp) in terms {
            for &label in set.members() {
                if label == 0 || label > marked_count {
                    return Err(BasisError::LabelOutOfRange {
                        label,
                        marked_count,
                    });
                }
            }
            if *exp > 0 && exponents.insert(set.clone(), *exp).is_some() {
                return Err(BasisError::MalformedMonomial(format!(
                    "repeated support set {set}"
                )));
            }
        }
        Ok(Monomial {
            exponents,
            marked_count,
        })
    }

    /// Skips validation. For building adversarial inputs in tests;
    /// `is_admissible` re-checks and reports malformed keys.
    pub fn from_parts_unchecked(marked_count: u8, exponents: BTreeMap<MarkedSet, u32>) -> Monomial {
        Monomial {
            exponents,
            marked_count,
        }
    }

    pub fn marked_count(&self) -> u8 {
        self.marked_count
    }

    /// Cohomological degree: each generator sits in degree 2.
    pub fn degree(&self) -> u32 {
        2 * self.exponents.values().sum::<u32>()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MarkedSet, u32)> {
        self.exponents.iter().map(|(s, &e)| (s, e))
    }

    pub fn support_size(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Exponent of the full set `{1, ..., p}`, or 0. The powers of the
    /// full-set generator are exactly the non-unit fixed monomials.
    pub fn full_set_exponent(&self) -> u32 {
        let full: Vec<u8> = (1..=self.marked_count).collect();
        MarkedSet::new(&full)
            .ok()
            .and_then(|s| self.exponents.get(&s).copied())
            .unwrap_or(0)
    }

    /// Relabel every support set by the rotation.
    pub fn cyclic_shift(&self) -> Monomial {
        let exponents = self
            .exponents
            .iter()
            .map(|(s, &e)| (s.cyclic_shift(self.marked_count), e))
            .collect();
        Monomial {
            exponents,
            marked_count: self.marked_count,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        for (i, (set, exp)) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "Pi{set}")?;
            if *exp > 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

/// Canonical order: support lists compared lexicographically as sorted
/// lists of sorted sets, then exponent vectors, so emitted tables are
/// reproducible byte for byte.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let self_support: Vec<&MarkedSet> = self.exponents.keys().collect();
        let other_support: Vec<&MarkedSet> = other.exponents.keys().collect();
        self_support
            .cmp(&other_support)
            .then_with(|| {
                let se: Vec<u32> = self.exponents.values().copied().collect();
                let oe: Vec<u32> = other.exponents.values().copied().collect();
                se.cmp(&oe)
            })
            .then_with(|| self.marked_count.cmp(&other.marked_count))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            set: &'a [u8],
            exp: u32,
        }
        let mut seq = serializer.serialize_seq(Some(self.exponents.len()))?;
        for (set, exp) in &self.exponents {
            seq.serialize_element(&Term {
                set: set.members(),
                exp: *exp,
            })?;
        }
        seq.end()
    }
}

/// Checks the two basis conditions: laminar support and the per-set
/// exponent bound. Fails (rather than returning `false`) if a support
/// key is not a legal marked set for this monomial's label range.
pub fn is_admissible(m: &Monomial) -> Result<bool, BasisError> {
    let support: Vec<(&MarkedSet, u32)> = m.terms().filter(|&(_, e)| e > 0).collect();
    for (set, _) in &support {
        if set.len() < 3 {
            return Err(BasisError::MalformedMonomial(format!(
                "support set {set} has fewer than 3 elements"
            )));
        }
        for &label in set.members() {
            if label == 0 || label > m.marked_count() {
                return Err(BasisError::LabelOutOfRange {
                    label,
                    marked_count: m.marked_count(),
                });
            }
        }
    }
    // nested-or-disjoint
    for (i, (s, _)) in support.iter().enumerate() {
        for (t, _) in support.iter().skip(i + 1) {
            let nested = s.is_subset_of(t) || t.is_subset_of(s);
            if !nested && !s.is_disjoint_from(t) {
                return Ok(false);
            }
        }
    }
    // exponent bound through maximal proper support-subsets
    for (s, exp) in &support {
        let proper: Vec<&MarkedSet> = support
            .iter()
            .map(|&(t, _)| t)
            .filter(|t| *t != *s && t.is_subset_of(s))
            .collect();
        let maximal: Vec<&MarkedSet> = proper
            .iter()
            .filter(|t| !proper.iter().any(|u| u != *t && t.is_subset_of(u)))
            .copied()
            .collect();
        let k = maximal.len() as i64;
        let covered: i64 = maximal.iter().map(|t| t.len() as i64).sum();
        let bound = k - 1 + s.len() as i64 - covered;
        if i64::from(*exp) >= bound {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The basis organized by even cohomological degree; lists are sorted in
/// the canonical monomial order and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    marked_count: u8,
    by_degree: BTreeMap<u32, Vec<Monomial>>,
}

impl GradedBasis {
    pub fn marked_count(&self) -> u8 {
        self.marked_count
    }

    pub fn dimension(&self, degree: u32) -> usize {
        self.by_degree.get(&degree).map_or(0, Vec::len)
    }

    pub fn total_dimension(&self) -> usize {
        self.by_degree.values().map(Vec::len).sum()
    }

    pub fn top_degree(&self) -> u32 {
        self.by_degree.keys().next_back().copied().unwrap_or(0)
    }

    pub fn degrees(&self) -> impl Iterator<Item = (u32, &[Monomial])> {
        self.by_degree.iter().map(|(&d, v)| (d, v.as_slice()))
    }

    pub fn monomials(&self, degree: u32) -> &[Monomial] {
        self.by_degree.get(&degree).map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Monomial> {
        self.by_degree.values().flatten()
    }

    /// The rotation as a permutation of the degree-`degree` slice:
    /// entry `i` is the index of the shift of monomial `i`.
    pub fn shift_permutation(&self, degree: u32) -> Vec<usize> {
        let slice = self.monomials(degree);
        slice
            .iter()
            .map(|m| {
                let img = m.cyclic_shift();
                slice
                    .binary_search(&img)
                    .expect("the shift of a basis monomial is a basis monomial of the same degree")
            })
            .collect()
    }
}

/// Enumerates the full graded basis for a ground set `{1, ..,
/// marked_count}` of any size; the group action downstream needs a prime
/// count, but the enumeration itself does not.
pub fn enumerate_monomial_basis(marked_count: u8, max_degree: Option<u32>) -> GradedBasis {
    let ground: Vec<u8> = (1..=marked_count).collect();
    let budget = max_degree.map(|d| d / 2);
    let mut monomials: Vec<Monomial> = Vec::new();
    let mut forest_terms: Vec<(MarkedSet, u32)> = Vec::new();
    enumerate_forests(&ground, true, budget, &mut forest_terms, &mut |terms| {
        monomials.push(Monomial::new(marked_count, terms).expect("enumeration emits valid terms"));
    });
    let mut by_degree: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
    for m in monomials {
        by_degree.entry(m.degree()).or_default().push(m);
    }
    for list in by_degree.values_mut() {
        list.sort();
        list.dedup();
    }
    GradedBasis {
        marked_count,
        by_degree,
    }
}

/// Enumerates the basis for a prime number of movable marked points.
pub fn enumerate_basis(p: u64, max_degree: Option<u32>) -> Result<GradedBasis, BasisError> {
    if !is_prime(p) {
        return Err(BasisError::NonPrime(p));
    }
    Ok(enumerate_monomial_basis(p as u8, max_degree))
}

/// Recursive construction over laminar forests: pick the antichain of
/// maximal support sets inside `ground` (pairwise disjoint, each of size
/// at least 3), recurse inside each, then assign exponents within the
/// per-set bound. `allow_full` permits a root equal to the whole ground
/// set; interior recursion always forbids it, since a child must be a
/// proper subset of its parent.
fn enumerate_forests(
    ground: &[u8],
    allow_full: bool,
    budget: Option<u32>,
    terms: &mut Vec<(MarkedSet, u32)>,
    emit: &mut dyn FnMut(&[(MarkedSet, u32)]),
) {
    for roots in disjoint_subsets(ground, allow_full) {
        process_roots(&roots, 0, budget, terms, &mut |terms, _remaining| {
            emit(terms)
        });
    }
}

/// Processes `roots[idx..]` in order. For each root: choose its children
/// antichain, recursively finish every child's subtree, then assign the
/// root's exponent. The number of slots on the root after collapsing its
/// children is `|S| - sum |S_i| + k`, and the admissible exponent range
/// is `1 ..= slots - 2`.
fn process_roots(
    roots: &[Vec<u8>],
    idx: usize,
    budget: Option<u32>,
    terms: &mut Vec<(MarkedSet, u32)>,
    cont: &mut dyn FnMut(&mut Vec<(MarkedSet, u32)>, Option<u32>),
) {
    if idx == roots.len() {
        cont(terms, budget);
        return;
    }
    let root_set = MarkedSet::new(&roots[idx]).expect("roots have >= 3 elements");
    for children in disjoint_subsets(&roots[idx], false) {
        let covered: usize = children.iter().map(Vec::len).sum();
        let slots = roots[idx].len() - covered + children.len();
        if slots < 3 {
            continue; // exponent range is empty
        }
        let max_exp = (slots - 2) as u32;
        process_roots(&children, 0, budget, terms, &mut |terms, remaining| {
            for exp in 1..=max_exp {
                if remaining.is_some_and(|b| exp > b) {
                    break;
                }
                terms.push((root_set.clone(), exp));
                process_roots(
                    roots,
                    idx + 1,
                    remaining.map(|b| b - exp),
                    terms,
                    &mut *cont,
                );
                terms.pop();
            }
        });
    }
}

/// All collections of pairwise disjoint subsets of `ground`, each with
/// at least 3 elements, listed in increasing order of minimum element.
/// `allow_full` controls whether the whole ground set may appear.
fn disjoint_subsets(ground: &[u8], allow_full: bool) -> Vec<Vec<Vec<u8>>> {
    let mut out = Vec::new();
    let mut current: Vec<Vec<u8>> = Vec::new();
    collect_disjoint(ground, 0, allow_full, &mut current, &mut out);
    out
}

fn collect_disjoint(
    avail: &[u8],
    start: usize,
    allow_full: bool,
    current: &mut Vec<Vec<u8>>,
    out: &mut Vec<Vec<Vec<u8>>>,
) {
    out.push(current.clone());
    // next block: pick its minimum element at position >= start, then at
    // least two more elements beyond it
    for min_pos in start..avail.len() {
        let rest: Vec<u8> = avail[min_pos + 1..].to_vec();
        let mut block = vec![avail[min_pos]];
        choose_block_tail(&rest, 0, &mut block, &mut |block| {
            let is_full = current.is_empty() && block.len() == avail.len();
            if !allow_full && is_full {
                return;
            }
            let remaining: Vec<u8> = avail
                .iter()
                .copied()
                .filter(|x| !block.contains(x))
                .collect();
            current.push(block.to_vec());
            // subsequent blocks must start strictly after this block's
            // minimum, and only from elements not already used
            let next_floor = remaining
                .iter()
                .position(|&x| x > block[0])
                .unwrap_or(remaining.len());
            collect_disjoint(&remaining, next_floor, allow_full, current, out);
            current.pop();
        });
    }
}

fn choose_block_tail(avail: &[u8], start: usize, block: &mut Vec<u8>, emit: &mut dyn FnMut(&[u8])) {
    if block.len() >= 3 {
        emit(block);
    }
    for i in start..avail.len() {
        block.push(avail[i]);
        choose_block_tail(avail, i + 1, block, emit);
        block.pop();
    }
}

/// The basis split into rotation-fixed monomials and full orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    p: u8,
    fixed: Vec<Monomial>,
    cycles: Vec<Vec<Monomial>>,
}

impl OrbitDecomposition {
    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn fixed(&self) -> &[Monomial] {
        &self.fixed
    }

    pub fn cycles(&self) -> &[Vec<Monomial>] {
        &self.cycles
    }

    pub fn fixed_count(&self) -> usize {
        self.fixed.len()
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Fixed monomials in a given degree.
    pub fn fixed_in_degree(&self, degree: u32) -> usize {
        self.fixed.iter().filter(|m| m.degree() == degree).count()
    }

    /// Orbits whose monomials sit in a given degree (the rotation
    /// preserves degree, so an orbit has a single degree).
    pub fn cycles_in_degree(&self, degree: u32) -> usize {
        self.cycles
            .iter()
            .filter(|orbit| orbit[0].degree() == degree)
            .count()
    }
}

/// Partitions a graded basis into fixed monomials and size-`p` orbits.
///
/// An orbit of any other size is impossible for prime `p` and reports an
/// internal inconsistency.
pub fn orbit_decomposition(basis: &GradedBasis) -> Result<OrbitDecomposition, BasisError> {
    let p = basis.marked_count();
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut fixed = Vec::new();
    let mut cycles = Vec::new();
    for m in basis.iter() {
        if seen.contains(m) {
            continue;
        }
        let mut orbit = vec![m.clone()];
        let mut current = m.cyclic_shift();
        while current != *m {
            orbit.push(current.clone());
            current = current.cyclic_shift();
            if orbit.len() > p as usize {
                return Err(BasisError::OrbitSizeInvalid {
                    size: orbit.len(),
                    p,
                });
            }
        }
        for x in &orbit {
            seen.insert(x.clone());
        }
        match orbit.len() {
            1 => fixed.push(orbit.into_iter().next().unwrap()),
            n if n == p as usize => cycles.push(orbit),
            n => {
                return Err(BasisError::OrbitSizeInvalid { size: n, p });
            }
        }
    }
    Ok(OrbitDecomposition { p, fixed, cycles })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(members: &[u8]) -> MarkedSet {
        MarkedSet::new(members).unwrap()
    }

    #[test]
    fn unit_is_admissible() {
        assert!(is_admissible(&Monomial::unit(5)).unwrap());
    }

    #[test]
    fn full_set_bound_at_three_points() {
        let full = set(&[1, 2, 3]);
        let ok = Monomial::new(3, &[(full.clone(), 1)]).unwrap();
        assert!(is_admissible(&ok).unwrap());
        let too_big = Monomial::new(3, &[(full, 2)]).unwrap();
        assert!(!is_admissible(&too_big).unwrap());
    }

    #[test]
    fn crossing_supports_rejected() {
        let m = Monomial::new(5, &[(set(&[1, 2, 3]), 1), (set(&[2, 3, 4]), 1)]).unwrap();
        assert!(!is_admissible(&m).unwrap());
    }

    #[test]
    fn nested_bound_counts_children() {
        // {1,2,3} inside {1,2,3,4}: the outer set has one child covering
        // 3 of its 4 elements, so its exponent bound is 1 - 1 + 4 - 3 = 1
        // and no positive exponent fits.
        let m = Monomial::new(5, &[(set(&[1, 2, 3]), 1), (set(&[1, 2, 3, 4]), 1)]).unwrap();
        assert!(!is_admissible(&m).unwrap());
        // {1,2,3} inside {1,2,3,4,5}: bound 1 - 1 + 5 - 3 = 2 admits 1.
        let m = Monomial::new(5, &[(set(&[1, 2, 3]), 1), (set(&[1, 2, 3, 4, 5]), 1)]).unwrap();
        assert!(is_admissible(&m).unwrap());
    }

    #[test]
    fn malformed_key_is_an_error() {
        let mut exps = BTreeMap::new();
        exps.insert(
            MarkedSet {
                members: vec![1, 2],
            },
            1,
        );
        let m = Monomial::from_parts_unchecked(5, exps);
        assert!(matches!(
            is_admissible(&m),
            Err(BasisError::MalformedMonomial(_))
        ));
    }

    #[test]
    fn out_of_range_label_is_an_error() {
        let m = Monomial::new(3, &[(set(&[1, 2, 4]), 1)]);
        assert!(matches!(m, Err(BasisError::LabelOutOfRange { .. })));
    }

    #[test]
    fn two_marked_points_have_only_the_unit() {
        let basis = enumerate_basis(2, None).unwrap();
        assert_eq!(basis.total_dimension(), 1);
        assert_eq!(basis.dimension(0), 1);
        assert!(basis.monomials(0)[0].is_unit());
    }

    #[test]
    fn three_marked_points() {
        let basis = enumerate_basis(3, None).unwrap();
        assert_eq!(basis.dimension(0), 1);
        assert_eq!(basis.dimension(2), 1);
        assert_eq!(basis.total_dimension(), 2);
        assert_eq!(basis.monomials(2)[0].full_set_exponent(), 1);
    }

    #[test]
    fn five_marked_points_dimensions() {
        let basis = enumerate_basis(5, None).unwrap();
        let dims: Vec<usize> = (0..=3).map(|k| basis.dimension(2 * k)).collect();
        assert_eq!(dims, vec![1, 16, 16, 1]);
    }

    #[test]
    fn max_degree_truncates() {
        let full = enumerate_basis(5, None).unwrap();
        let cut = enumerate_basis(5, Some(2)).unwrap();
        assert_eq!(cut.dimension(0), full.dimension(0));
        assert_eq!(cut.dimension(2), full.dimension(2));
        assert_eq!(cut.dimension(4), 0);
        assert_eq!(cut.top_degree(), 2);
    }

    #[test]
    fn shift_fixes_full_set_powers() {
        let basis = enumerate_basis(5, None).unwrap();
        for m in basis
            .iter()
            .filter(|m| m.full_set_exponent() > 0 && m.support_size() == 1)
        {
            assert_eq!(&m.cyclic_shift(), m);
        }
    }

    #[test]
    fn shift_moves_a_corner_set() {
        let m = Monomial::new(5, &[(set(&[1, 2, 3]), 1)]).unwrap();
        let expected = Monomial::new(5, &[(set(&[2, 3, 4]), 1)]).unwrap();
        assert_eq!(m.cyclic_shift(), expected);
    }

    #[test]
    fn shift_has_order_p() {
        let basis = enumerate_basis(5, None).unwrap();
        for m in basis.iter() {
            let mut x = m.clone();
            for _ in 0..5 {
                x = x.cyclic_shift();
            }
            assert_eq!(&x, m);
        }
    }

    #[test]
    fn shift_is_degree_preserving_bijection() {
        let basis = enumerate_basis(7, None).unwrap();
        for (degree, slice) in basis.degrees() {
            let perm = basis.shift_permutation(degree);
            let mut seen = vec![false; slice.len()];
            for (i, &img) in perm.iter().enumerate() {
                assert_eq!(slice[img], slice[i].cyclic_shift());
                assert!(!seen[img], "shift permutation must be a bijection");
                seen[img] = true;
            }
        }
    }

    #[test]
    fn orbit_decomposition_small_primes() {
        for p in [2u64, 3, 5, 7] {
            let basis = enumerate_basis(p, None).unwrap();
            let orbits = orbit_decomposition(&basis).unwrap();
            assert_eq!(orbits.fixed_count(), p as usize - 1, "fixed count at p={p}");
            assert_eq!(
                orbits.fixed_count() + p as usize * orbits.cycle_count(),
                basis.total_dimension()
            );
        }
    }

    #[test]
    fn orbit_decomposition_at_five() {
        let basis = enumerate_basis(5, None).unwrap();
        let orbits = orbit_decomposition(&basis).unwrap();
        assert_eq!(orbits.fixed_count(), 4);
        assert_eq!(orbits.cycle_count(), 6); // (34 - 4) / 5
        for orbit in orbits.cycles() {
            assert_eq!(orbit.len(), 5);
            for w in orbit.windows(2) {
                assert_eq!(w[0].cyclic_shift(), w[1]);
            }
            assert_eq!(orbit.last().unwrap().cyclic_shift(), orbit[0]);
        }
    }

    #[test]
    fn fixed_monomials_are_full_set_powers() {
        for p in [3u64, 5, 7] {
            let basis = enumerate_basis(p, None).unwrap();
            let orbits = orbit_decomposition(&basis).unwrap();
            // one fixed monomial per even degree 0, 2, ..., 2(p-2)
            for k in 0..=(p as u32 - 2) {
                assert_eq!(
                    orbits.fixed_in_degree(2 * k),
                    1,
                    "degree {} at p={p}",
                    2 * k
                );
            }
            for m in orbits.fixed() {
                if !m.is_unit() {
                    assert_eq!(m.support_size(), 1);
                    assert_eq!(2 * m.full_set_exponent(), m.degree());
                }
            }
        }
    }

    #[test]
    fn poincare_duality_of_dimensions() {
        for p in [3u8, 5, 7] {
            let basis = enumerate_monomial_basis(p, None);
            let top = basis.top_degree();
            assert_eq!(top, 2 * (u32::from(p) - 2));
            let mut d = 0;
            while d <= top {
                assert_eq!(
                    basis.dimension(d),
                    basis.dimension(top - d),
                    "duality at degree {d}, p={p}"
                );
                d += 2;
            }
        }
    }

    #[test]
    fn degree_two_orbit_structure_at_five() {
        let basis = enumerate_basis(5, None).unwrap();
        let orbits = orbit_decomposition(&basis).unwrap();
        assert_eq!(orbits.fixed_in_degree(2), 1);
        assert_eq!(orbits.cycles_in_degree(2), 3); // 16 = 1 + 5*3
    }

    #[test]
    fn enumeration_matches_naive_filter_up_to_five() {
        for p in [3u8, 4, 5] {
            let basis = enumerate_monomial_basis(p, None);
            let naive = naive_filter_basis(p);
            let enumerated: BTreeSet<Monomial> = basis.iter().cloned().collect();
            assert_eq!(enumerated, naive, "filter oracle disagrees at p={p}");
        }
    }

    /// Oracle: generate every exponent map on every subset family and
    /// keep the admissible ones.
    fn naive_filter_basis(marked_count: u8) -> BTreeSet<Monomial> {
        let ground: Vec<u8> = (1..=marked_count).collect();
        let mut sets = Vec::new();
        for mask in 0u32..(1 << ground.len()) {
            let subset: Vec<u8> = ground
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &x)| x)
                .collect();
            if subset.len() >= 3 {
                sets.push(MarkedSet::new(&subset).unwrap());
            }
        }
        let max_total = (marked_count as u32).saturating_sub(2);
        let mut out = BTreeSet::new();
        let mut exps = vec![0u32; sets.len()];
        loop {
            let total: u32 = exps.iter().sum();
            if total <= max_total {
                let terms: Vec<(MarkedSet, u32)> = sets
                    .iter()
                    .cloned()
                    .zip(exps.iter().copied())
                    .filter(|&(_, e)| e > 0)
                    .collect();
                let m = Monomial::new(marked_count, &terms).unwrap();
                if is_admissible(&m).unwrap() {
                    out.insert(m);
                }
            }
            // odometer with per-digit cap max_total
            let mut i = 0;
            loop {
                if i == exps.len() {
                    return out;
                }
                exps[i] += 1;
                if exps[i] <= max_total && exps.iter().sum::<u32>() <= max_total {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn canonical_order_is_stable() {
        let basis = enumerate_basis(5, None).unwrap();
        for (_, slice) in basis.degrees() {
            for w in slice.windows(2) {
                assert!(w[0] < w[1], "strictly increasing canonical order");
            }
        }
    }
}
