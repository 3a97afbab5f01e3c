//! Points of the projective line over the cyclotomic field, and maps
//! between them as 2x2 matrices acting on homogeneous pairs.
//!
//! The point at infinity is `(1 : 0)`; keeping everything homogeneous
//! avoids any case split on poles, and the inverse of a map is its
//! adjugate, so the whole module stays inside ring arithmetic.

use super::cyclotomic::CyclotomicNumber;
use super::FixedPointError;

/// A point `(z : w)` of the projective line, not both coordinates zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectivePoint {
    z: CyclotomicNumber,
    w: CyclotomicNumber,
}

impl ProjectivePoint {
    pub fn new(z: CyclotomicNumber, w: CyclotomicNumber) -> Result<Self, FixedPointError> {
        if z.p() != w.p() {
            return Err(FixedPointError::DegenerateInput(
                "homogeneous coordinates over different fields".into(),
            ));
        }
        if z.is_zero() && w.is_zero() {
            return Err(FixedPointError::DegenerateInput(
                "(0 : 0) is not a projective point".into(),
            ));
        }
        Ok(ProjectivePoint { z, w })
    }

    /// The affine point with the given value.
    pub fn from_value(value: CyclotomicNumber) -> Self {
        let p = value.p();
        ProjectivePoint {
            z: value,
            w: CyclotomicNumber::one(p),
        }
    }

    pub fn zero(p: u64) -> Self {
        Self::from_value(CyclotomicNumber::zero(p))
    }

    pub fn one(p: u64) -> Self {
        Self::from_value(CyclotomicNumber::one(p))
    }

    pub fn infinity(p: u64) -> Self {
        ProjectivePoint {
            z: CyclotomicNumber::one(p),
            w: CyclotomicNumber::zero(p),
        }
    }

    pub fn p(&self) -> u64 {
        self.z.p()
    }

    pub fn z(&self) -> &CyclotomicNumber {
        &self.z
    }

    pub fn w(&self) -> &CyclotomicNumber {
        &self.w
    }

    /// Equality of projective classes by cross-multiplication.
    pub fn projectively_equal(&self, other: &ProjectivePoint) -> bool {
        (&self.z * &other.w) == (&other.z * &self.w)
    }
}

/// A fractional linear map as the matrix `(a b; c d)`, acting on
/// homogeneous pairs; `z -> (az + b) / (cz + d)` on affine values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoebiusMap {
    a: CyclotomicNumber,
    b: CyclotomicNumber,
    c: CyclotomicNumber,
    d: CyclotomicNumber,
}

impl MoebiusMap {
    pub fn new(
        a: CyclotomicNumber,
        b: CyclotomicNumber,
        c: CyclotomicNumber,
        d: CyclotomicNumber,
    ) -> Result<Self, FixedPointError> {
        let det = &(&a * &d) - &(&b * &c);
        if det.is_zero() {
            return Err(FixedPointError::DegenerateInput(
                "fractional linear map with vanishing determinant".into(),
            ));
        }
        Ok(MoebiusMap { a, b, c, d })
    }

    pub fn identity(p: u64) -> Self {
        MoebiusMap {
            a: CyclotomicNumber::one(p),
            b: CyclotomicNumber::zero(p),
            c: CyclotomicNumber::zero(p),
            d: CyclotomicNumber::one(p),
        }
    }

    /// The scaling `z -> factor * z`.
    pub fn scaling(factor: CyclotomicNumber) -> Result<Self, FixedPointError> {
        let p = factor.p();
        Self::new(
            factor,
            CyclotomicNumber::zero(p),
            CyclotomicNumber::zero(p),
            CyclotomicNumber::one(p),
        )
    }

    pub fn entries(&self) -> [&CyclotomicNumber; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn determinant(&self) -> CyclotomicNumber {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn apply(&self, point: &ProjectivePoint) -> ProjectivePoint {
        let z = &(&self.a * point.z()) + &(&self.b * point.w());
        let w = &(&self.c * point.z()) + &(&self.d * point.w());
        // an invertible matrix never sends a point to (0 : 0)
        ProjectivePoint { z, w }
    }

    /// Matrix product: `self` after `other`.
    pub fn compose(&self, other: &MoebiusMap) -> MoebiusMap {
        MoebiusMap {
            a: &(&self.a * &other.a) + &(&self.b * &other.c),
            b: &(&self.a * &other.b) + &(&self.b * &other.d),
            c: &(&self.c * &other.a) + &(&self.d * &other.c),
            d: &(&self.c * &other.b) + &(&self.d * &other.d),
        }
    }

    /// The adjugate, which inverts the map up to the (nonzero) scalar
    /// determinant.
    pub fn inverse(&self) -> MoebiusMap {
        MoebiusMap {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    /// Whether two maps agree as projective transformations, i.e. are
    /// proportional as matrices.
    pub fn projectively_equal(&self, other: &MoebiusMap) -> bool {
        let pairs = [
            (&self.a, &other.a),
            (&self.b, &other.b),
            (&self.c, &other.c),
            (&self.d, &other.d),
        ];
        for (x, y) in pairs {
            for (u, v) in pairs {
                if (&(x * v) - &(y * u)).is_zero() {
                    continue;
                }
                return false;
            }
        }
        true
    }
}

fn cross_det(p1: &ProjectivePoint, p2: &ProjectivePoint) -> CyclotomicNumber {
    &(p1.z() * p2.w()) - &(p2.z() * p1.w())
}

/// The matrix sending the triple to the standard frame: the first point
/// to infinity, the second to zero, the third to one.
fn to_standard_frame(triple: &[ProjectivePoint; 3]) -> Result<MoebiusMap, FixedPointError> {
    for (i, x) in triple.iter().enumerate() {
        for y in triple.iter().skip(i + 1) {
            if x.projectively_equal(y) {
                return Err(FixedPointError::DegenerateInput(
                    "coincident points in a determining triple".into(),
                ));
            }
        }
    }
    let [p1, p2, p3] = triple;
    let scale_top = cross_det(p3, p1);
    let scale_bottom = cross_det(p3, p2);
    MoebiusMap::new(
        &scale_top * p2.w(),
        -&(&scale_top * p2.z()),
        &scale_bottom * p1.w(),
        -&(&scale_bottom * p1.z()),
    )
}

/// The unique map (up to scalar) sending each `src[i]` to `dst[i]`.
pub fn moebius_from_three(
    src: &[ProjectivePoint; 3],
    dst: &[ProjectivePoint; 3],
) -> Result<MoebiusMap, FixedPointError> {
    let to_frame_src = to_standard_frame(src)?;
    let to_frame_dst = to_standard_frame(dst)?;
    Ok(to_frame_dst.inverse().compose(&to_frame_src))
}
