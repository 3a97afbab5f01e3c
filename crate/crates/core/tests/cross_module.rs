//! Consistency checks that span module boundaries: the same numbers
//! reached along independent routes must agree exactly.

use dm_cohomology::cyclic_cohomology::{group_cohomology_dims, PermRepresentation};
use dm_cohomology::dm_basis::{enumerate_basis, orbit_decomposition};
use dm_cohomology::equivariant_cochains::{borel_cohomology_dims, build_borel, FiniteGComplex};
use dm_cohomology::fixed_points::enumerate_fixed;
use dm_cohomology::serre_e2::assemble_e2;

/// The count `p - 1` three ways: fixed basis monomials, fixed geometric
/// configurations, and the stabilized equivariant dimension of that many
/// points.
#[test]
fn three_routes_to_p_minus_one() {
    for p in [3u64, 5, 7] {
        let basis = enumerate_basis(p, None).unwrap();
        let algebraic = orbit_decomposition(&basis).unwrap().fixed_count();
        let geometric = enumerate_fixed(p).unwrap().len();
        let complex = FiniteGComplex::fixed_points(p, (p - 1) as usize).unwrap();
        let dims = borel_cohomology_dims(&build_borel(&complex, 10).unwrap()).unwrap();
        let stabilized = *dims.last().unwrap();
        assert!(dims.iter().all(|&d| d == stabilized), "p={p}: {dims:?}");
        assert_eq!(algebraic, (p - 1) as usize, "p={p}");
        assert_eq!(geometric, algebraic, "p={p}");
        assert_eq!(stabilized, algebraic, "p={p}");
    }
}

/// The page entries really are the group cohomology of the graded
/// pieces: recompute each row from the shift permutation alone and
/// compare against the assembled page.
#[test]
fn page_rows_match_direct_group_cohomology() {
    for p in [3u64, 5] {
        let basis = enumerate_basis(p, None).unwrap();
        let page = assemble_e2(p).unwrap();
        let mut j = 0u32;
        while j <= 2 * (p as u32 - 2) {
            let perm = basis.shift_permutation(j);
            let rep = PermRepresentation::from_permutation(p, &perm).unwrap();
            let dims = group_cohomology_dims(&rep, 10).unwrap();
            for (i, &d) in dims.iter().enumerate() {
                assert_eq!(page.dims(i, i64::from(j)), d, "p={p}, ({i}, {j})");
            }
            j += 2;
        }
    }
}

/// The two implementations of group cohomology agree on the honest
/// permutation modules coming out of the basis.
#[test]
fn periodic_and_cochain_routes_agree_on_basis_pieces() {
    let p = 5u64;
    let basis = enumerate_basis(p, None).unwrap();
    let mut j = 0u32;
    while j <= 2 * (p as u32 - 2) {
        let perm = basis.shift_permutation(j);
        let rep = PermRepresentation::from_permutation(p, &perm).unwrap();
        let periodic = group_cohomology_dims(&rep, 8).unwrap();
        let complex = FiniteGComplex::from_action_in_degree_zero(p, rep.action().clone()).unwrap();
        let cochain = borel_cohomology_dims(&build_borel(&complex, 10).unwrap()).unwrap();
        assert_eq!(periodic, cochain, "degree {j}");
        j += 2;
    }
}

/// The fixed locus as a complex has the equivariant cohomology the
/// collapse argument expects in every degree, not just stably.
#[test]
fn fixed_locus_equivariant_dimensions() {
    for p in [3u64, 5, 7] {
        let expected = (p - 1) as usize;
        let rep = PermRepresentation::trivial_of_dimension(p, expected).unwrap();
        let dims = group_cohomology_dims(&rep, 12).unwrap();
        assert!(dims.iter().all(|&d| d == expected), "p={p}: {dims:?}");
    }
}
