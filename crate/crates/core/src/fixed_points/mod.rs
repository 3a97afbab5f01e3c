//! Classification of the configurations fixed by the cyclic rotation of
//! the marked points, in exact cyclotomic arithmetic.
//!
//! The fixed points of the rotation on the moduli space are classified
//! in three independent steps:
//!
//! * the `p - 1` smooth candidates are written down explicitly (roots of
//!   unity in arithmetic progression plus the origin), verified to be
//!   rotation-invariant, and verified pairwise non-isomorphic;
//! * a brute-force search over all stable trees rules out fixed points
//!   with more than one component;
//! * a symbolic computation bounds the count from above: composing the
//!   candidate rotation map with itself `p - 1` times yields a rational
//!   function whose denominator has degree exactly `p - 1` in the free
//!   matrix parameter, so at most `p - 1` rotations can exist.

use serde::Serialize;
use thiserror::Error;

pub mod cyclotomic;
pub mod projective;
pub mod trees;

pub use cyclotomic::CyclotomicNumber;
pub use projective::{moebius_from_three, MoebiusMap, ProjectivePoint};
pub use trees::{
    enumerate_stable_trees, no_nodal_fixed_points, sigma_compatible_automorphism_exists,
    StableTree, TREE_ENUMERATION_LIMIT,
};

use crate::fp_linalg::is_prime;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FixedPointError {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("{p} exceeds the combinatorial guard {limit}")]
    ResourceGuard { p: u64, limit: u64 },
    #[error("p = {p} is out of range: {reason}")]
    UnsupportedPrime { p: u64, reason: String },
    #[error("internal verification failed: {0}")]
    CertificateFailure(String),
}

/// A configuration of `p + 1` pairwise distinct labeled points on the
/// projective line; index `k` carries label `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedConfig {
    p: u64,
    points: Vec<ProjectivePoint>,
}

impl MarkedConfig {
    pub fn new(p: u64, points: Vec<ProjectivePoint>) -> Result<Self, FixedPointError> {
        if points.len() != (p + 1) as usize {
            return Err(FixedPointError::DegenerateInput(format!(
                "expected {} labeled points, got {}",
                p + 1,
                points.len()
            )));
        }
        for (i, x) in points.iter().enumerate() {
            if x.p() != p {
                return Err(FixedPointError::DegenerateInput(
                    "point coordinates over the wrong cyclotomic field".into(),
                ));
            }
            for y in points.iter().skip(i + 1) {
                if x.projectively_equal(y) {
                    return Err(FixedPointError::DegenerateInput(format!(
                        "marked points must be pairwise distinct; label {} repeats",
                        i + 1
                    )));
                }
            }
        }
        Ok(MarkedConfig { p, points })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    /// The point with 1-based label `k`.
    pub fn point(&self, label: usize) -> &ProjectivePoint {
        &self.points[label - 1]
    }

    /// The configuration relabeled by the rotation: the new label `k`
    /// carries what the old configuration called `k - 1`, with the first
    /// label wrapping around and the extra label untouched.
    pub fn relabel_by_rotation(&self) -> MarkedConfig {
        let p = self.p as usize;
        let mut points = Vec::with_capacity(p + 1);
        points.push(self.points[p - 1].clone());
        for i in 1..p {
            points.push(self.points[i - 1].clone());
        }
        points.push(self.points[p].clone());
        MarkedConfig { p: self.p, points }
    }
}

/// Label-preserving isomorphism: the unique fractional linear map
/// matching the points labeled 1, 2 and the extra label must match
/// every remaining labeled point.
pub fn is_isomorphic(c1: &MarkedConfig, c2: &MarkedConfig) -> Result<bool, FixedPointError> {
    if c1.p() != c2.p() {
        return Ok(false);
    }
    let p = c1.p() as usize;
    let src = [
        c1.points[0].clone(),
        c1.points[1].clone(),
        c1.points[p].clone(),
    ];
    let dst = [
        c2.points[0].clone(),
        c2.points[1].clone(),
        c2.points[p].clone(),
    ];
    let map = moebius_from_three(&src, &dst)?;
    Ok(c1
        .points
        .iter()
        .zip(&c2.points)
        .all(|(a, b)| map.apply(a).projectively_equal(b)))
}

/// The rotation-fixed configurations: for each unit `s` modulo `p`, the
/// points in labels `1..=p` are consecutive `s`-th powers of the root of
/// unity and the extra label sits at the origin.
///
/// Each configuration is verified rotation-invariant and all pairs are
/// verified non-isomorphic before returning; a failure of either check
/// is a bug trap, not a legitimate outcome.
pub fn enumerate_fixed(p: u64) -> Result<Vec<MarkedConfig>, FixedPointError> {
    if !is_prime(p) {
        return Err(FixedPointError::NonPrime(p));
    }
    if p < 3 {
        return Err(FixedPointError::UnsupportedPrime {
            p,
            reason: "the two-point case degenerates to a single configuration space".into(),
        });
    }
    let mut configs = Vec::with_capacity((p - 1) as usize);
    for s in 1..p {
        let mut points = Vec::with_capacity((p + 1) as usize);
        for k in 1..=p {
            let exponent = (s as i64) * (k as i64 - 1);
            points.push(ProjectivePoint::from_value(CyclotomicNumber::root_power(
                p, exponent,
            )));
        }
        points.push(ProjectivePoint::zero(p));
        configs.push(MarkedConfig::new(p, points)?);
    }
    for (s_index, config) in configs.iter().enumerate() {
        if !is_isomorphic(&config.relabel_by_rotation(), config)? {
            return Err(FixedPointError::CertificateFailure(format!(
                "configuration s = {} is not rotation-invariant",
                s_index + 1
            )));
        }
    }
    for (i, a) in configs.iter().enumerate() {
        for (j, b) in configs.iter().enumerate().skip(i + 1) {
            if is_isomorphic(a, b)? {
                return Err(FixedPointError::CertificateFailure(format!(
                    "configurations s = {} and s = {} are isomorphic",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(configs)
}

/// Univariate polynomials over the cyclotomic field, lowest degree
/// first, used for the symbolic degree bound.
type CyclotomicPoly = Vec<CyclotomicNumber>;

fn poly_trim(mut p: CyclotomicPoly) -> CyclotomicPoly {
    while p.last().is_some_and(CyclotomicNumber::is_zero) {
        p.pop();
    }
    p
}

fn poly_degree(p: &CyclotomicPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

fn poly_add(field: u64, a: &CyclotomicPoly, b: &CyclotomicPoly) -> CyclotomicPoly {
    let len = a.len().max(b.len());
    let zero = CyclotomicNumber::zero(field);
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let x = a.get(i).unwrap_or(&zero);
        let y = b.get(i).unwrap_or(&zero);
        out.push(x + y);
    }
    poly_trim(out)
}

fn poly_sub(field: u64, a: &CyclotomicPoly, b: &CyclotomicPoly) -> CyclotomicPoly {
    let negated: CyclotomicPoly = b.iter().map(|c| -c).collect();
    poly_add(field, a, &negated)
}

fn poly_mul(field: u64, a: &CyclotomicPoly, b: &CyclotomicPoly) -> CyclotomicPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![CyclotomicNumber::zero(field); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    poly_trim(out)
}

fn poly_eval_at_zero(field: u64, p: &CyclotomicPoly) -> CyclotomicNumber {
    p.first()
        .cloned()
        .unwrap_or_else(|| CyclotomicNumber::zero(field))
}

/// The verification report of the symbolic degree bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoebiusDegreeReport {
    pub p: u64,
    /// The numerator of the composed map is a constant multiple of the
    /// variable: no affine part, no dependence on the free parameter.
    pub numerator_constant: bool,
    /// Degree in the free parameter of the composed map's denominator.
    pub denominator_degree: usize,
    /// Setting the free parameter to zero specializes the composed map
    /// to the pure rotation by the inverse root.
    pub rotation_at_zero: bool,
    /// Coefficient vectors (in the root-of-unity basis, exact rationals)
    /// of the polynomial whose roots are the admissible parameters.
    pub fixed_point_polynomial: Vec<Vec<String>>,
    pub fixed_point_degree: usize,
    pub pass: bool,
}

/// Symbolically composes the candidate rotation `z -> r z / (c z + (1 - c))`
/// with itself `p - 1` times over the polynomial ring in the parameter
/// `c`, and verifies the degree claims that bound the fixed-point count.
pub fn moebius_power_degree(p: u64) -> Result<MoebiusDegreeReport, FixedPointError> {
    if !is_prime(p) {
        return Err(FixedPointError::NonPrime(p));
    }
    if p < 3 {
        return Err(FixedPointError::UnsupportedPrime {
            p,
            reason: "the symbolic bound needs at least one nontrivial composition".into(),
        });
    }
    let eta = CyclotomicNumber::root_of_unity(p);
    let one = CyclotomicNumber::one(p);
    // matrix entries as polynomials in c: a = eta, b = 0, c = c, d = 1 - c
    let entry_a: CyclotomicPoly = vec![eta.clone()];
    let entry_b: CyclotomicPoly = vec![];
    let entry_c: CyclotomicPoly = vec![CyclotomicNumber::zero(p), one.clone()];
    let entry_d: CyclotomicPoly = vec![one.clone(), -&one];
    let mut acc = (vec![one.clone()], Vec::new(), Vec::new(), vec![one.clone()]);
    for _ in 0..(p - 1) {
        let (a, b, c, d) = acc;
        acc = (
            poly_add(p, &poly_mul(p, &entry_a, &a), &poly_mul(p, &entry_b, &c)),
            poly_add(p, &poly_mul(p, &entry_a, &b), &poly_mul(p, &entry_b, &d)),
            poly_add(p, &poly_mul(p, &entry_c, &a), &poly_mul(p, &entry_d, &c)),
            poly_add(p, &poly_mul(p, &entry_c, &b), &poly_mul(p, &entry_d, &d)),
        );
    }
    let (num_z, num_const, den_z, den_const) = acc;
    let numerator_constant =
        num_const.is_empty() && poly_degree(&num_z) == Some(0) && !num_z.is_empty();
    let denominator_degree = poly_degree(&den_z)
        .unwrap_or(0)
        .max(poly_degree(&den_const).unwrap_or(0));
    // specialize c = 0: the map must become z -> eta^{p-1} z
    let rotation_at_zero = {
        let a0 = poly_eval_at_zero(p, &num_z);
        let b0 = poly_eval_at_zero(p, &num_const);
        let c0 = poly_eval_at_zero(p, &den_z);
        let d0 = poly_eval_at_zero(p, &den_const);
        let expected = CyclotomicNumber::root_power(p, p as i64 - 1);
        b0.is_zero() && c0.is_zero() && !d0.is_zero() && (&a0 - &(&expected * &d0)).is_zero()
    };
    // the return-to-start equation at the second marked point: applying
    // the composed map to the root must give back one
    let eta_poly: CyclotomicPoly = vec![eta.clone()];
    let lhs = poly_add(p, &poly_mul(p, &num_z, &eta_poly), &num_const);
    let rhs = poly_add(p, &poly_mul(p, &den_z, &eta_poly), &den_const);
    let fixed_point_poly = poly_sub(p, &lhs, &rhs);
    let fixed_point_degree = poly_degree(&fixed_point_poly).unwrap_or(0);
    let pass = numerator_constant
        && denominator_degree == (p - 1) as usize
        && fixed_point_degree == (p - 1) as usize
        && rotation_at_zero;
    Ok(MoebiusDegreeReport {
        p,
        numerator_constant,
        denominator_degree,
        rotation_at_zero,
        fixed_point_polynomial: fixed_point_poly
            .iter()
            .map(CyclotomicNumber::coeff_strings)
            .collect(),
        fixed_point_degree,
        pass,
    })
}
