//! Cohomology of the classifying space of the cyclic group of prime
//! order, with coefficients in a finite module over the prime field.
//!
//! The computation runs over the standard 2-periodic cell structure of
//! the total space: one free cell in each degree, with the differential
//! alternating between `sigma - 1` (even degrees) and the norm
//! `1 + sigma + ... + sigma^{p-1}` (odd degrees). Degree zero is the
//! invariants, `ker(sigma - 1)`.

use thiserror::Error;

use crate::fp_linalg::{cohomology_dim, cyclic_shift_matrix, FpMatrix, LinalgError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CyclicError {
    #[error("action does not satisfy sigma^p = identity over F_p")]
    InvalidRepresentation,
    #[error("action matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("cycle of length {len}; an order dividing the prime {p} allows only 1 or {p}")]
    InvalidCycleLength { len: usize, p: u64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A finite module over `F_p` with an action of the cyclic group of
/// order `p`, given by the matrix of a generator.
///
/// Despite the name, any matrix of order dividing `p` is accepted, not
/// just permutation matrices; the permutation case is what the spectral
/// sequence uses, but adversarial tests want the general case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermRepresentation {
    p: u64,
    dimension: usize,
    action: FpMatrix,
}

impl PermRepresentation {
    /// Wraps a generator matrix; the group order is the field
    /// characteristic. Fails unless `action^p` is the identity (which
    /// also forces invertibility).
    pub fn new(action: FpMatrix) -> Result<Self, CyclicError> {
        if action.rows() != action.cols() {
            return Err(CyclicError::NotSquare {
                rows: action.rows(),
                cols: action.cols(),
            });
        }
        let p = action.modulus();
        if !action.pow(p)?.is_identity() {
            return Err(CyclicError::InvalidRepresentation);
        }
        Ok(PermRepresentation {
            p,
            dimension: action.rows(),
            action,
        })
    }

    /// The trivial one-dimensional representation.
    pub fn trivial(p: u64) -> Result<Self, CyclicError> {
        Self::trivial_of_dimension(p, 1)
    }

    /// A sum of `dimension` copies of the trivial representation.
    pub fn trivial_of_dimension(p: u64, dimension: usize) -> Result<Self, CyclicError> {
        Self::new(FpMatrix::identity(dimension, p)?)
    }

    /// The regular representation: the generator cyclically shifts the
    /// `p` basis vectors.
    pub fn regular(p: u64) -> Result<Self, CyclicError> {
        Self::new(cyclic_shift_matrix(p as usize, p)?)
    }

    /// A permutation representation from images `perm[i]`.
    pub fn from_permutation(p: u64, perm: &[usize]) -> Result<Self, CyclicError> {
        Self::new(FpMatrix::from_permutation(perm, p)?)
    }

    pub fn direct_sum(&self, other: &PermRepresentation) -> Result<Self, CyclicError> {
        Self::new(self.action.direct_sum(&other.action)?)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn action(&self) -> &FpMatrix {
        &self.action
    }
}

/// The two alternating differentials of the 2-periodic complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicResolutionDifferential {
    even: FpMatrix,
    odd: FpMatrix,
}

impl PeriodicResolutionDifferential {
    pub fn new(rep: &PermRepresentation) -> Result<Self, CyclicError> {
        let n = rep.dimension();
        let p = rep.p();
        let identity = FpMatrix::identity(n, p)?;
        let even = rep.action().sub(&identity)?;
        let mut odd = FpMatrix::zeros(n, n, p)?;
        for k in 0..p {
            odd = odd.add(&rep.action().pow(k)?)?;
        }
        // (sigma - 1) and the norm annihilate each other since sigma^p = 1
        if !even.mul(&odd)?.is_zero() || !odd.mul(&even)?.is_zero() {
            return Err(CyclicError::InvalidRepresentation);
        }
        Ok(PeriodicResolutionDifferential { even, odd })
    }

    pub fn even(&self) -> &FpMatrix {
        &self.even
    }

    pub fn odd(&self) -> &FpMatrix {
        &self.odd
    }

    /// The differential leaving cochain degree `i`.
    pub fn at_degree(&self, i: usize) -> &FpMatrix {
        if i % 2 == 0 {
            &self.even
        } else {
            &self.odd
        }
    }
}

/// Default truncation: enough degrees to exhibit the 2-periodicity twice.
pub fn default_max_degree(p: u64) -> usize {
    (2 * p + 2) as usize
}

/// Dimensions of the group cohomology of the classifying space with
/// coefficients in `rep`, in degrees `0..=max_i`.
pub fn group_cohomology_dims(
    rep: &PermRepresentation,
    max_i: usize,
) -> Result<Vec<usize>, CyclicError> {
    let differentials = PeriodicResolutionDifferential::new(rep)?;
    let mut dims = Vec::with_capacity(max_i + 1);
    dims.push(differentials.even().nullity()?);
    for i in 1..=max_i {
        dims.push(cohomology_dim(
            differentials.at_degree(i - 1),
            differentials.at_degree(i),
        )?);
    }
    Ok(dims)
}

/// Counts the fixed points and the full cycles of a permutation whose
/// order divides the prime `p`. Any other cycle length is rejected.
pub fn decompose_permutation_rep(
    p: u64,
    permutation: &[usize],
) -> Result<(usize, usize), CyclicError> {
    let n = permutation.len();
    let mut hit = vec![false; n];
    for &img in permutation {
        if img >= n {
            return Err(CyclicError::InvalidPermutation(format!(
                "image {img} out of range for size {n}"
            )));
        }
        if hit[img] {
            return Err(CyclicError::InvalidPermutation(format!(
                "image {img} repeated; not a bijection"
            )));
        }
        hit[img] = true;
    }
    let mut seen = vec![false; n];
    let mut fixed_count = 0;
    let mut cycle_count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut at = start;
        loop {
            seen[at] = true;
            len += 1;
            at = permutation[at];
            if at == start {
                break;
            }
        }
        match len {
            1 => fixed_count += 1,
            l if l as u64 == p => cycle_count += 1,
            l => return Err(CyclicError::InvalidCycleLength { len: l, p }),
        }
    }
    Ok((fixed_count, cycle_count))
}
