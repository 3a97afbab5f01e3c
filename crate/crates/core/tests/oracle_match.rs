//! Cross-checks of the basis enumeration against the independent
//! point-count oracle, degree by degree.

use dm_cohomology::dm_basis::{enumerate_basis, enumerate_monomial_basis};

fn oracle_dims(marked: usize) -> Vec<i64> {
    betti_oracle::point_count_polynomial(marked + 1)
}

#[test]
fn prime_ground_sets_match_the_oracle() {
    for p in [2u64, 3, 5, 7] {
        let basis = enumerate_basis(p, None).unwrap();
        let oracle = oracle_dims(p as usize);
        for (k, &expected) in oracle.iter().enumerate() {
            assert_eq!(
                basis.dimension(2 * k as u32) as i64,
                expected,
                "p={p}, degree {}",
                2 * k
            );
        }
        assert_eq!(
            basis.total_dimension() as i64,
            oracle.iter().sum::<i64>(),
            "total at p={p}"
        );
        assert_eq!(basis.top_degree() as usize, 2 * (oracle.len() - 1), "p={p}");
    }
}

#[test]
fn non_prime_ground_set_cross_check() {
    // the enumeration itself carries no primality assumption
    let basis = enumerate_monomial_basis(4, None);
    let dims: Vec<usize> = (0..=2).map(|k| basis.dimension(2 * k)).collect();
    assert_eq!(dims, vec![1, 5, 1]);
    assert_eq!(oracle_dims(4), vec![1, 5, 1]);
}

#[test]
fn frozen_dimensions_at_seven() {
    // computed with the point-count oracle ahead of the build
    let basis = enumerate_basis(7, None).unwrap();
    let dims: Vec<usize> = (0..=5).map(|k| basis.dimension(2 * k)).collect();
    assert_eq!(dims, vec![1, 99, 715, 715, 99, 1]);
    assert_eq!(basis.total_dimension(), 1630);
}

#[test]
fn every_enumerated_monomial_is_admissible() {
    let basis = enumerate_basis(7, None).unwrap();
    for m in basis.iter() {
        assert!(dm_cohomology::dm_basis::is_admissible(m).unwrap(), "{m}");
    }
}

#[test]
fn truncated_enumeration_agrees_with_full() {
    let full = enumerate_basis(7, None).unwrap();
    for cut_at in [0u32, 2, 4] {
        let cut = enumerate_basis(7, Some(cut_at)).unwrap();
        let mut d = 0;
        while d <= cut_at {
            assert_eq!(cut.monomials(d), full.monomials(d), "degree {d}");
            d += 2;
        }
        assert_eq!(cut.top_degree(), cut_at);
    }
}
