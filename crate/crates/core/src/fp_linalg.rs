//! Exact dense linear algebra over prime fields.
//!
//! Everything downstream (graded dimensions, group cohomology, Borel
//! complexes) reduces to ranks and kernels of small dense matrices, so
//! this module favors exactness and determinism over asymptotics.
//! Every scalar carries its modulus and all matrix operations insist
//! that moduli agree, so a test sweeping several primes cannot silently
//! mix them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

/// Errors from exact linear algebra.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("modulus mismatch: expected {expected}, found {found}")]
    ModulusMismatch { expected: u64, found: u64 },
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("differentials do not compose to zero; the pair is not a complex")]
    NotAComplex,
}

/// Deterministic trial-division primality test; all moduli in scope are tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue in the prime field with `modulus` elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u64,
    modulus: u64,
}

impl FpScalar {
    /// Reduces `value` into `[0, modulus)`. Fails if the modulus is not prime.
    pub fn new(value: i64, modulus: u64) -> Result<Self, LinalgError> {
        if !is_prime(modulus) {
            return Err(LinalgError::NonPrimeModulus(modulus));
        }
        Ok(Self::reduced(value, modulus))
    }

    pub(crate) fn reduced(value: i64, modulus: u64) -> Self {
        let m = modulus as i64;
        let v = ((value % m) + m) % m;
        FpScalar {
            value: v as u64,
            modulus,
        }
    }

    pub fn zero(modulus: u64) -> Result<Self, LinalgError> {
        Self::new(0, modulus)
    }

    pub fn one(modulus: u64) -> Result<Self, LinalgError> {
        Self::new(1, modulus)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse through Fermat's little theorem.
    ///
    /// Panics on zero; the elimination routines never invert a zero pivot.
    pub fn inverse(&self) -> FpScalar {
        assert!(self.value != 0, "inverse of zero in F_{}", self.modulus);
        self.pow(self.modulus - 2)
    }

    pub fn pow(&self, mut e: u64) -> FpScalar {
        let mut base = self.value;
        let mut acc = 1u64;
        let m = self.modulus;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        FpScalar {
            value: acc,
            modulus: m,
        }
    }

    fn assert_same_modulus(&self, other: &FpScalar) {
        assert_eq!(
            self.modulus, other.modulus,
            "scalar arithmetic across distinct prime fields"
        );
    }
}

impl fmt::Debug for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FpScalar {
    type Output = FpScalar;
    fn add(self, rhs: FpScalar) -> FpScalar {
        self.assert_same_modulus(&rhs);
        FpScalar {
            value: (self.value + rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Sub for FpScalar {
    type Output = FpScalar;
    fn sub(self, rhs: FpScalar) -> FpScalar {
        self.assert_same_modulus(&rhs);
        FpScalar {
            value: (self.value + self.modulus - rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Mul for FpScalar {
    type Output = FpScalar;
    fn mul(self, rhs: FpScalar) -> FpScalar {
        self.assert_same_modulus(&rhs);
        FpScalar {
            value: self.value * rhs.value % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Neg for FpScalar {
    type Output = FpScalar;
    fn neg(self) -> FpScalar {
        FpScalar {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

/// Dense vector over a prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpVector {
    entries: Vec<FpScalar>,
    modulus: u64,
}

impl FpVector {
    pub fn from_values(values: &[i64], modulus: u64) -> Result<Self, LinalgError> {
        if !is_prime(modulus) {
            return Err(LinalgError::NonPrimeModulus(modulus));
        }
        Ok(FpVector {
            entries: values
                .iter()
                .map(|&v| FpScalar::reduced(v, modulus))
                .collect(),
            modulus,
        })
    }

    pub fn zeros(len: usize, modulus: u64) -> Result<Self, LinalgError> {
        Self::from_values(&vec![0; len], modulus)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn get(&self, i: usize) -> FpScalar {
        self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FpScalar::is_zero)
    }

    pub fn values(&self) -> Vec<u64> {
        self.entries.iter().map(FpScalar::value).collect()
    }
}

/// Dense row-major matrix over a prime field, immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    modulus: u64,
    entries: Vec<FpScalar>,
}

impl FpMatrix {
    /// Builds from signed integer rows, reducing mod `modulus`.
    pub fn from_rows(rows_data: &[Vec<i64>], modulus: u64) -> Result<Self, LinalgError> {
        if !is_prime(modulus) {
            return Err(LinalgError::NonPrimeModulus(modulus));
        }
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows * cols);
        for row in rows_data {
            if row.len() != cols {
                return Err(LinalgError::ShapeMismatch(format!(
                    "ragged rows: expected {cols} entries, found {}",
                    row.len()
                )));
            }
            entries.extend(row.iter().map(|&v| FpScalar::reduced(v, modulus)));
        }
        Ok(FpMatrix {
            rows,
            cols,
            modulus,
            entries,
        })
    }

    /// Builds from pre-made scalars, enforcing modulus agreement.
    pub fn from_scalars(
        rows: usize,
        cols: usize,
        entries: Vec<FpScalar>,
        modulus: u64,
    ) -> Result<Self, LinalgError> {
        let m = Self::from_scalars_unchecked(rows, cols, entries, modulus)?;
        m.check_uniform_modulus()?;
        Ok(m)
    }

    /// Skips the modulus-agreement scan; `rank` and friends re-check, so a
    /// mixed-modulus grid surfaces as an error there rather than here.
    pub fn from_scalars_unchecked(
        rows: usize,
        cols: usize,
        entries: Vec<FpScalar>,
        modulus: u64,
    ) -> Result<Self, LinalgError> {
        if !is_prime(modulus) {
            return Err(LinalgError::NonPrimeModulus(modulus));
        }
        if entries.len() != rows * cols {
            return Err(LinalgError::ShapeMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(FpMatrix {
            rows,
            cols,
            modulus,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize, modulus: u64) -> Result<Self, LinalgError> {
        if !is_prime(modulus) {
            return Err(LinalgError::NonPrimeModulus(modulus));
        }
        Ok(FpMatrix {
            rows,
            cols,
            modulus,
            entries: vec![FpScalar::reduced(0, modulus); rows * cols],
        })
    }

    pub fn identity(n: usize, modulus: u64) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(n, n, modulus)?;
        for i in 0..n {
            m.entries[i * n + i] = FpScalar::reduced(1, modulus);
        }
        Ok(m)
    }

    /// Permutation matrix sending basis vector `i` to basis vector `perm[i]`.
    pub fn from_permutation(perm: &[usize], modulus: u64) -> Result<Self, LinalgError> {
        let n = perm.len();
        let mut m = Self::zeros(n, n, modulus)?;
        for (i, &img) in perm.iter().enumerate() {
            if img >= n {
                return Err(LinalgError::ShapeMismatch(format!(
                    "permutation image {img} out of range for size {n}"
                )));
            }
            m.entries[img * n + i] = FpScalar::reduced(1, modulus);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn get(&self, i: usize, j: usize) -> FpScalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.entries[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FpScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| self.get(i, j).value() == u64::from(i == j)))
    }

    fn check_uniform_modulus(&self) -> Result<(), LinalgError> {
        for e in &self.entries {
            if e.modulus() != self.modulus {
                return Err(LinalgError::ModulusMismatch {
                    expected: self.modulus,
                    found: e.modulus(),
                });
            }
        }
        Ok(())
    }

    fn check_matching(&self, other: &FpMatrix) -> Result<(), LinalgError> {
        if self.modulus != other.modulus {
            return Err(LinalgError::ModulusMismatch {
                expected: self.modulus,
                found: other.modulus,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &FpMatrix) -> Result<FpMatrix, LinalgError> {
        self.check_matching(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch(format!(
                "add: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| a + b)
            .collect();
        Ok(FpMatrix {
            rows: self.rows,
            cols: self.cols,
            modulus: self.modulus,
            entries,
        })
    }

    pub fn sub(&self, other: &FpMatrix) -> Result<FpMatrix, LinalgError> {
        self.check_matching(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch(format!(
                "sub: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| a - b)
            .collect();
        Ok(FpMatrix {
            rows: self.rows,
            cols: self.cols,
            modulus: self.modulus,
            entries,
        })
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix, LinalgError> {
        self.check_matching(other)?;
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch(format!(
                "mul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = FpMatrix::zeros(self.rows, other.cols, self.modulus)?;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.entries[idx] = out.entries[idx] + a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u64) -> Result<FpMatrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::ShapeMismatch(format!(
                "pow of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        let mut base = self.clone();
        let mut acc = FpMatrix::identity(self.rows, self.modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn apply(&self, v: &FpVector) -> Result<FpVector, LinalgError> {
        if v.modulus() != self.modulus {
            return Err(LinalgError::ModulusMismatch {
                expected: self.modulus,
                found: v.modulus(),
            });
        }
        if v.len() != self.cols {
            return Err(LinalgError::ShapeMismatch(format!(
                "apply: {}x{} to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = FpScalar::reduced(0, self.modulus);
            for j in 0..self.cols {
                acc = acc + self.get(i, j) * v.get(j);
            }
            out.push(acc);
        }
        Ok(FpVector {
            entries: out,
            modulus: self.modulus,
        })
    }

    /// Block-diagonal sum, used to assemble direct sums of representations.
    pub fn direct_sum(&self, other: &FpMatrix) -> Result<FpMatrix, LinalgError> {
        self.check_matching(other)?;
        let mut out =
            FpMatrix::zeros(self.rows + other.rows, self.cols + other.cols, self.modulus)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[i * out.cols + j] = self.get(i, j);
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.entries[(self.rows + i) * out.cols + (self.cols + j)] = other.get(i, j);
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form with first-nonzero pivoting, so the output
    /// (and everything derived from it) is deterministic.
    fn reduced_row_echelon(&self) -> (Vec<Vec<FpScalar>>, Vec<usize>) {
        let mut m: Vec<Vec<FpScalar>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row >= self.rows {
                break;
            }
            let Some(src) = (pivot_row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(pivot_row, src);
            let inv = m[pivot_row][col].inverse();
            for j in col..self.cols {
                m[pivot_row][j] = m[pivot_row][j] * inv;
            }
            for r in 0..self.rows {
                if r != pivot_row && !m[r][col].is_zero() {
                    let factor = m[r][col];
                    for j in col..self.cols {
                        let t = factor * m[pivot_row][j];
                        m[r][j] = m[r][j] - t;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> Result<usize, LinalgError> {
        self.check_uniform_modulus()?;
        Ok(self.reduced_row_echelon().1.len())
    }

    /// Basis of the right kernel, one vector per free column, in ascending
    /// free-column order.
    pub fn kernel_basis(&self) -> Result<Vec<FpVector>, LinalgError> {
        self.check_uniform_modulus()?;
        let (rref, pivots) = self.reduced_row_echelon();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut entries = vec![FpScalar::reduced(0, self.modulus); self.cols];
            entries[free] = FpScalar::reduced(1, self.modulus);
            for (row, &col) in pivots.iter().enumerate() {
                entries[col] = -rref[row][free];
            }
            basis.push(FpVector {
                entries,
                modulus: self.modulus,
            });
        }
        Ok(basis)
    }

    /// Dimension of the kernel.
    pub fn nullity(&self) -> Result<usize, LinalgError> {
        Ok(self.cols - self.rank()?)
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Dimension of `ker(d_out) / im(d_in)` for a two-step complex
/// `... -> A --d_in--> B --d_out--> C -> ...` of column-vector spaces.
///
/// Fails with `NotAComplex` when `d_out * d_in != 0`; the check is a real
/// test hook, not an assumption.
pub fn cohomology_dim(d_in: &FpMatrix, d_out: &FpMatrix) -> Result<usize, LinalgError> {
    if d_in.modulus() != d_out.modulus() {
        return Err(LinalgError::ModulusMismatch {
            expected: d_out.modulus(),
            found: d_in.modulus(),
        });
    }
    if d_out.cols() != d_in.rows() {
        return Err(LinalgError::ShapeMismatch(format!(
            "cohomology_dim: d_in maps into dim {}, d_out maps out of dim {}",
            d_in.rows(),
            d_out.cols()
        )));
    }
    if d_in.cols() > 0 && !d_out.mul(d_in)?.is_zero() {
        return Err(LinalgError::NotAComplex);
    }
    Ok(d_out.nullity()? - d_in.rank()?)
}

/// The cyclic-shift matrix of the regular representation: basis vector
/// `v_i` maps to `v_{i+1 mod n}`.
pub fn cyclic_shift_matrix(n: usize, modulus: u64) -> Result<FpMatrix, LinalgError> {
    let perm: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    FpMatrix::from_permutation(&perm, modulus)
}
