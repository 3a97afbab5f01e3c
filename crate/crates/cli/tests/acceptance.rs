//! Acceptance suite: one test per criterion, each printing a pass line.
//! Every tolerance is exact equality; run with `-- --nocapture` to see
//! the lines as the criteria complete.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use dm_cohomology::cyclic_cohomology::{
    default_max_degree, group_cohomology_dims, PermRepresentation,
};
use dm_cohomology::dm_basis::{
    enumerate_basis, enumerate_monomial_basis, is_admissible, orbit_decomposition, MarkedSet,
    Monomial,
};
use dm_cohomology::equivariant_cochains::{
    borel_cohomology_dims, build_borel, FiniteGComplex, GradedPiece,
};
use dm_cohomology::fixed_points::{
    enumerate_fixed, is_isomorphic, moebius_power_degree, no_nodal_fixed_points, CyclotomicNumber,
    MarkedConfig, MoebiusMap, ProjectivePoint,
};
use dm_cohomology::fp_linalg::{cyclic_shift_matrix, FpMatrix};
use dm_cohomology::serre_e2::{
    assemble_e2, collapse_certificate, collapse_certificate_for_page, injectivity_certificate,
    injectivity_certificate_for_page, total_dims,
};

fn run_binary(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dmcoh"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf8"),
    )
}

#[test]
fn criterion_1_basis_dimensions() {
    let (code, out) = run_binary(&["betti", "--p", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out, "degree,dim\n0,1\n2,1\n");
    let (code, out) = run_binary(&["betti", "--p", "5", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out, "degree,dim\n0,1\n2,16\n4,16\n6,1\n");

    let started = Instant::now();
    let (code, out) = run_binary(&["betti", "--p", "7", "--format", "csv"]);
    let elapsed = started.elapsed();
    assert_eq!(code, 0);
    let oracle = betti_oracle::point_count_polynomial(8);
    let rows: Vec<(usize, i64)> = out
        .lines()
        .skip(1)
        .map(|line| {
            let (degree, dim) = line.split_once(',').expect("degree,dim row");
            (degree.parse().unwrap(), dim.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), oracle.len());
    for (k, &expected) in oracle.iter().enumerate() {
        assert_eq!(rows[k], (2 * k, expected), "degree {} at p=7", 2 * k);
    }
    assert!(
        elapsed.as_secs() < 60,
        "p=7 run took {elapsed:?}, limit is 60 s"
    );
    println!(
        "[PASS] criterion 1: basis dimensions (1,1), (1,16,16,1), and oracle match at p=7 in {elapsed:?}"
    );
}

#[test]
fn criterion_2_fixed_generators() {
    for p in [3u64, 5, 7] {
        let basis = enumerate_basis(p, None).unwrap();
        let orbits = orbit_decomposition(&basis).unwrap();
        assert_eq!(orbits.fixed_count(), (p - 1) as usize, "p={p}");
        for orbit in orbits.cycles() {
            assert_eq!(orbit.len(), p as usize, "p={p}");
        }
        assert_eq!(
            orbits.fixed_count() + p as usize * orbits.cycle_count(),
            basis.total_dimension(),
            "p={p}"
        );
    }
    println!("[PASS] criterion 2: exactly p-1 fixed basis elements and only full orbits for p in {{3, 5, 7}}");
}

#[test]
fn criterion_3_group_cohomology() {
    for p in [3u64, 5, 7] {
        let max_i = default_max_degree(p);
        let trivial =
            group_cohomology_dims(&PermRepresentation::trivial(p).unwrap(), max_i).unwrap();
        assert_eq!(trivial, vec![1; max_i + 1], "trivial at p={p}");
        let regular =
            group_cohomology_dims(&PermRepresentation::regular(p).unwrap(), max_i).unwrap();
        assert_eq!(regular[0], 1, "regular at p={p}");
        assert!(regular[1..].iter().all(|&d| d == 0), "regular at p={p}");
        // the independent cochain-level route must agree exactly
        for rep in [
            PermRepresentation::trivial(p).unwrap(),
            PermRepresentation::regular(p).unwrap(),
        ] {
            let complex =
                FiniteGComplex::from_action_in_degree_zero(p, rep.action().clone()).unwrap();
            let borel = borel_cohomology_dims(&build_borel(&complex, max_i + 2).unwrap()).unwrap();
            let periodic = group_cohomology_dims(&rep, max_i).unwrap();
            assert_eq!(borel, periodic, "routes disagree at p={p}");
        }
    }
    println!("[PASS] criterion 3: trivial and regular module cohomology, identical on both routes, for p in {{3, 5, 7}}");
}

#[test]
fn criterion_4_e2_page_invariants() {
    for p in [3u64, 5, 7] {
        let basis = enumerate_basis(p, None).unwrap();
        let orbits = orbit_decomposition(&basis).unwrap();
        let page = assemble_e2(p).unwrap();
        let top = 2 * (p as u32 - 2);
        let mut j = 0u32;
        while j <= top {
            assert_eq!(
                page.dims(0, i64::from(j)),
                orbits.cycles_in_degree(j) + 1,
                "column 0, row {j}, p={p}"
            );
            for i in 1..=page.display_columns() + 2 {
                assert_eq!(page.dims(i, i64::from(j)), 1, "({i}, {j}), p={p}");
            }
            assert_eq!(
                page.dims(0, i64::from(j) + 1),
                0,
                "odd row above {j}, p={p}"
            );
            j += 2;
        }
        assert_eq!(page.dims(0, i64::from(top) + 2), 0, "row beyond top, p={p}");
        assert_eq!(page.dims(5, -2), 0, "negative row, p={p}");
    }
    println!("[PASS] criterion 4: second-page dimensions match the orbit counts everywhere for p in {{3, 5, 7}}");
}

#[test]
fn criterion_5_collapse_certificate() {
    for p in [3u64, 5, 7] {
        let report = collapse_certificate(p, 4).unwrap();
        assert!(report.pass, "p={p}: {report:?}");
        for id in ["C1", "C2", "C3", "C4", "C5"] {
            assert!(report.item(id).unwrap().pass, "{id} at p={p}");
        }
        // stable totals match the fixed-locus dimension exactly
        let page = assemble_e2(p).unwrap();
        let top = 2 * (p as usize - 2);
        for m in top + 1..=top + 8 {
            assert_eq!(total_dims(&page, m, m)[0], (p - 1) as usize, "m={m}, p={p}");
        }
    }
    // negative controls must fail the matching item
    let mut fabricated = assemble_e2(5).unwrap();
    fabricated.insert_orbit_class(4, false, false);
    let report = collapse_certificate_for_page(&fabricated, 4);
    assert!(!report.pass);
    assert!(
        !report.item("C2").unwrap().pass,
        "fabricated survivor must fail C2"
    );

    let mut annihilated = assemble_e2(5).unwrap();
    annihilated.annihilate_u_at(3, 0);
    let report = collapse_certificate_for_page(&annihilated, 4);
    assert!(
        !report.item("C1").unwrap().pass,
        "annihilated tower must fail C1"
    );
    println!("[PASS] criterion 5: collapse certificate C1-C5 for p in {{3, 5, 7}}, negative controls fail their items");
}

#[test]
fn criterion_6_injectivity_certificate() {
    for p in [3u64, 5, 7] {
        let report = injectivity_certificate(p, 4).unwrap();
        assert!(report.pass, "p={p}: {report:?}");
        for id in ["I1", "I2", "I3"] {
            assert!(report.item(id).unwrap().pass, "{id} at p={p}");
        }
    }
    let mut fabricated = assemble_e2(3).unwrap();
    fabricated.annihilate_u_at(3, 0);
    let report = injectivity_certificate_for_page(&fabricated, 4);
    assert!(
        !report.item("I1").unwrap().pass,
        "annihilated tower must fail I1"
    );
    println!("[PASS] criterion 6: injectivity certificate I1-I3 for p in {{3, 5, 7}}, negative control fails I1");
}

#[test]
fn criterion_7_fixed_points() {
    let started = Instant::now();
    for p in [3u64, 5, 7, 11] {
        let configs = enumerate_fixed(p).unwrap();
        assert_eq!(configs.len(), (p - 1) as usize, "count at p={p}");
        // pairwise non-isomorphic and rotation-invariant
        for (i, a) in configs.iter().enumerate() {
            assert!(
                is_isomorphic(&a.relabel_by_rotation(), a).unwrap(),
                "p={p}, s={}",
                i + 1
            );
            for b in configs.iter().skip(i + 1) {
                assert!(!is_isomorphic(a, b).unwrap(), "p={p}");
            }
        }
    }
    for p in [3u64, 5] {
        assert!(no_nodal_fixed_points(p).unwrap(), "p={p}");
    }
    for p in [3u64, 5, 7] {
        let report = moebius_power_degree(p).unwrap();
        assert!(report.pass, "p={p}");
        assert_eq!(report.denominator_degree, (p - 1) as usize, "p={p}");
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() < 120,
        "fixed-point suite took {elapsed:?}, limit is 120 s"
    );
    println!("[PASS] criterion 7: p-1 fixed configurations (p up to 11), no nodal fixed points, degree bounds; {elapsed:?}");
}

#[test]
fn criterion_8_cross_module_triangle() {
    for p in [3u64, 5, 7] {
        let basis = enumerate_basis(p, None).unwrap();
        let algebraic = orbit_decomposition(&basis).unwrap().fixed_count();
        let geometric = enumerate_fixed(p).unwrap().len();
        let complex = FiniteGComplex::fixed_points(p, (p - 1) as usize).unwrap();
        let dims = borel_cohomology_dims(&build_borel(&complex, 10).unwrap()).unwrap();
        let stabilized = *dims.last().unwrap();
        assert!(dims.iter().all(|&d| d == stabilized), "p={p}");
        assert_eq!(algebraic, (p - 1) as usize, "p={p}");
        assert_eq!(geometric, algebraic, "p={p}");
        assert_eq!(stabilized, algebraic, "p={p}");
        // and through the full pipeline binary
        let (code, out) = run_binary(&["verify-all", "--p", &p.to_string(), "--format", "json"]);
        assert_eq!(code, 0, "verify-all exit at p={p}");
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(value["pass"], true, "p={p}");
        assert_eq!(value["cross_count"], algebraic, "p={p}");
    }
    println!("[PASS] criterion 8: fixed monomials, fixed configurations, and stabilized equivariant dimension agree for p in {{3, 5, 7}}");
}

// ---- criterion 9: property suites ----

fn random_complex(rng: &mut StdRng, p: u64) -> FiniteGComplex {
    let n = p as usize;
    let shift = cyclic_shift_matrix(n, p).unwrap();
    let identity = FpMatrix::identity(n, p).unwrap();
    let norm = {
        let mut acc = FpMatrix::zeros(n, n, p).unwrap();
        for k in 0..p {
            acc = acc.add(&shift.pow(k).unwrap()).unwrap();
        }
        acc
    };
    let shifted = |degree: usize, payload: Vec<GradedPiece>| -> FiniteGComplex {
        let mut pieces = Vec::new();
        for _ in 0..degree {
            pieces.push(GradedPiece {
                dim: 0,
                d: None,
                g: FpMatrix::identity(0, p).unwrap(),
            });
        }
        pieces.extend(payload);
        FiniteGComplex::new(p, pieces).unwrap()
    };
    let mut acc: Option<FiniteGComplex> = None;
    for _ in 0..rng.gen_range(1..=3) {
        let degree = rng.gen_range(0..=2);
        let payload = match rng.gen_range(0..5) {
            0 => vec![GradedPiece {
                dim: 1,
                d: None,
                g: FpMatrix::identity(1, p).unwrap(),
            }],
            1 => vec![GradedPiece {
                dim: n,
                d: None,
                g: shift.clone(),
            }],
            2 => vec![
                GradedPiece {
                    dim: n,
                    d: Some(identity.clone()),
                    g: shift.clone(),
                },
                GradedPiece {
                    dim: n,
                    d: None,
                    g: shift.clone(),
                },
            ],
            3 => vec![
                GradedPiece {
                    dim: n,
                    d: Some(shift.sub(&identity).unwrap()),
                    g: shift.clone(),
                },
                GradedPiece {
                    dim: n,
                    d: None,
                    g: shift.clone(),
                },
            ],
            _ => vec![
                GradedPiece {
                    dim: n,
                    d: Some(norm.clone()),
                    g: shift.clone(),
                },
                GradedPiece {
                    dim: n,
                    d: None,
                    g: shift.clone(),
                },
            ],
        };
        let piece = shifted(degree, payload);
        acc = Some(match acc {
            None => piece,
            Some(existing) => existing.disjoint_union(&piece).unwrap(),
        });
    }
    acc.unwrap()
}

fn random_permutation_rep(rng: &mut StdRng, p: u64) -> PermRepresentation {
    let fixed = rng.gen_range(0..=3usize);
    let cycles = rng.gen_range(0..=2usize);
    let n = fixed + cycles * p as usize;
    if n == 0 {
        return PermRepresentation::trivial(p).unwrap();
    }
    let mut image: Vec<usize> = (0..n).collect();
    for c in 0..cycles {
        let base = fixed + c * p as usize;
        for k in 0..p as usize {
            image[base + k] = base + (k + 1) % p as usize;
        }
    }
    let mut relabel: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        relabel.swap(i, j);
    }
    let mut conjugated = vec![0usize; n];
    for i in 0..n {
        conjugated[relabel[i]] = relabel[image[i]];
    }
    PermRepresentation::from_permutation(p, &conjugated).unwrap()
}

fn random_cyclotomic(rng: &mut StdRng, p: u64) -> CyclotomicNumber {
    let mut acc = CyclotomicNumber::zero(p);
    for k in 0..(p - 1) as i64 {
        let num = rng.gen_range(-2i64..=2);
        if num != 0 {
            let term =
                &CyclotomicNumber::from_integer(p, num) * &CyclotomicNumber::root_power(p, k);
            acc = &acc + &term;
        }
    }
    acc
}

fn random_config(rng: &mut StdRng, p: u64) -> MarkedConfig {
    loop {
        let points: Vec<ProjectivePoint> = (0..=p)
            .map(|_| ProjectivePoint::from_value(random_cyclotomic(rng, p)))
            .collect();
        if let Ok(config) = MarkedConfig::new(p, points) {
            return config;
        }
    }
}

fn random_moebius(rng: &mut StdRng, p: u64) -> MoebiusMap {
    loop {
        if let Ok(map) = MoebiusMap::new(
            random_cyclotomic(rng, p),
            random_cyclotomic(rng, p),
            random_cyclotomic(rng, p),
            random_cyclotomic(rng, p),
        ) {
            return map;
        }
    }
}

fn apply_map(config: &MarkedConfig, map: &MoebiusMap) -> MarkedConfig {
    MarkedConfig::new(
        config.p(),
        config.points().iter().map(|pt| map.apply(pt)).collect(),
    )
    .expect("an invertible map preserves distinctness")
}

#[test]
fn criterion_9a_differentials_square_to_zero() {
    let mut rng = StdRng::seed_from_u64(0xacce_9701);
    for case in 0..200 {
        let p = [2u64, 3, 5][case % 3];
        let complex = random_complex(&mut rng, p);
        let borel = build_borel(&complex, 8).unwrap();
        for m in 0..7 {
            assert!(
                borel
                    .differential(m + 1)
                    .mul(borel.differential(m))
                    .unwrap()
                    .is_zero(),
                "case {case}, degree {m}"
            );
        }
    }
    println!("[PASS] criterion 9a: assembled differentials square to zero on 200 random equivariant complexes");
}

#[test]
fn criterion_9b_group_cohomology_additivity() {
    let mut rng = StdRng::seed_from_u64(0xacce_9702);
    for case in 0..100 {
        let p = [2u64, 3, 5, 7][case % 4];
        let a = random_permutation_rep(&mut rng, p);
        let b = random_permutation_rep(&mut rng, p);
        let sum = a.direct_sum(&b).unwrap();
        let da = group_cohomology_dims(&a, 6).unwrap();
        let db = group_cohomology_dims(&b, 6).unwrap();
        let ds = group_cohomology_dims(&sum, 6).unwrap();
        let pointwise: Vec<usize> = da.iter().zip(&db).map(|(x, y)| x + y).collect();
        assert_eq!(ds, pointwise, "case {case} at p={p}");
        for i in 1..ds.len() - 2 {
            assert_eq!(ds[i], ds[i + 2], "period break, case {case} at p={p}");
        }
    }
    println!("[PASS] criterion 9b: group cohomology additive on 100 random direct sums");
}

/// Independent oracle: every exponent map on every subset, filtered by
/// the admissibility predicate.
fn filter_oracle(marked_count: u8) -> BTreeSet<Monomial> {
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
        if exps.iter().sum::<u32>() <= max_total {
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
fn criterion_9c_enumeration_equals_filter_oracle() {
    for marked in [3u8, 4, 5] {
        let enumerated: BTreeSet<Monomial> = enumerate_monomial_basis(marked, None)
            .iter()
            .cloned()
            .collect();
        assert_eq!(
            enumerated,
            filter_oracle(marked),
            "ground set size {marked}"
        );
    }
    println!("[PASS] criterion 9c: laminar enumeration equals the filter oracle for every monomial at p <= 5");
}

#[test]
fn criterion_9d_isomorphism_equivalence_laws() {
    let mut rng = StdRng::seed_from_u64(0xacce_9703);
    let p = 5u64;
    for case in 0..100 {
        let a = random_config(&mut rng, p);
        let b = apply_map(&a, &random_moebius(&mut rng, p));
        let c = apply_map(&b, &random_moebius(&mut rng, p));
        assert!(is_isomorphic(&a, &a).unwrap(), "reflexivity, case {case}");
        assert!(is_isomorphic(&a, &b).unwrap(), "case {case}");
        assert!(is_isomorphic(&b, &a).unwrap(), "symmetry, case {case}");
        assert!(is_isomorphic(&b, &c).unwrap(), "case {case}");
        assert!(is_isomorphic(&a, &c).unwrap(), "transitivity, case {case}");
    }
    println!("[PASS] criterion 9d: label-preserving isomorphism satisfies the equivalence laws on 100 random triples");
}
