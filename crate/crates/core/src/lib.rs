//! Exact mod-p cohomological data of the genus-zero moduli space of
//! stable curves with `1+p` marked points, carrying the cyclic-rotation
//! action of order `p`.
//!
//! The crate enumerates the monomial basis of the cohomology ring and its
//! orbit structure, computes cyclic group cohomology through the
//! 2-periodic resolution, assembles the second page of the associated
//! Serre spectral sequence, classifies the geometric fixed points by
//! exact cyclotomic arithmetic, and emits machine-checkable certificates
//! for the page collapse and the torsion-injectivity statement.
//!
//! All arithmetic is exact: prime fields for linear algebra, rationals
//! for cyclotomic coordinates. Every public operation is a pure function
//! of immutable inputs and produces deterministic output.
//!
//! ```
//! use dm_cohomology::dm_basis::{enumerate_basis, orbit_decomposition};
//! use dm_cohomology::serre_e2::collapse_certificate;
//!
//! let basis = enumerate_basis(5, None).unwrap();
//! assert_eq!(basis.dimension(2), 16);
//! let orbits = orbit_decomposition(&basis).unwrap();
//! assert_eq!(orbits.fixed_count(), 4);
//! assert_eq!(orbits.cycle_count(), 6);
//! assert!(collapse_certificate(5, 4).unwrap().pass);
//! ```

pub mod cyclic_cohomology;
pub mod dm_basis;
pub mod equivariant_cochains;
pub mod fixed_points;
pub mod fp_linalg;
pub mod serre_e2;

pub use fp_linalg::is_prime;
