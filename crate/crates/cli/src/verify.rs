//! The one-shot verification pipeline: every stage of the computation
//! plus the cross-module consistency checks, in dependency order.

use std::time::Instant;

use serde::Serialize;

use dm_cohomology::cyclic_cohomology::{
    default_max_degree, group_cohomology_dims, PermRepresentation,
};
use dm_cohomology::dm_basis::{enumerate_basis, orbit_decomposition};
use dm_cohomology::equivariant_cochains::{
    borel_cohomology_dims, build_borel, localization_check, FiniteGComplex,
    DEFAULT_LOCALIZATION_WINDOW,
};
use dm_cohomology::fixed_points::{enumerate_fixed, moebius_power_degree, no_nodal_fixed_points};
use dm_cohomology::fp_linalg::FpMatrix;
use dm_cohomology::serre_e2::{
    assemble_e2, collapse_certificate_for_page, injectivity_certificate_for_page, total_dims,
};

#[derive(Serialize)]
pub struct StageOutcome {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    #[serde(skip)]
    pub millis: u128,
}

#[derive(Serialize)]
pub struct VerifyAllReport {
    pub p: u64,
    pub window: usize,
    pub stages: Vec<StageOutcome>,
    pub cross_count: usize,
    pub pass: bool,
}

fn run_stage(
    stages: &mut Vec<StageOutcome>,
    name: &str,
    body: impl FnOnce() -> Result<String, String>,
) -> bool {
    let start = Instant::now();
    let (pass, detail) = match body() {
        Ok(detail) => (true, detail),
        Err(detail) => (false, detail),
    };
    stages.push(StageOutcome {
        name: name.to_string(),
        pass,
        detail,
        millis: start.elapsed().as_millis(),
    });
    let stage = stages.last().expect("just pushed");
    // timings stay on stderr so the report bytes are reproducible
    eprintln!("stage {}: {} ms", stage.name, stage.millis);
    pass
}

/// Runs every stage in order; failures are recorded, not returned.
pub fn verify_all(p: u64, window: usize) -> Result<VerifyAllReport, String> {
    if window == 0 {
        return Err("window must be positive".into());
    }
    let mut stages = Vec::new();

    // 1. basis enumeration against the independent point-count oracle
    let basis = enumerate_basis(p, None).map_err(|e| e.to_string())?;
    run_stage(&mut stages, "basis-oracle", || {
        let oracle = betti_oracle::point_count_polynomial((p + 1) as usize);
        let mut mismatches = Vec::new();
        for (k, &expected) in oracle.iter().enumerate() {
            let got = basis.dimension(2 * k as u32);
            if got as i64 != expected {
                mismatches.push(format!("degree {}: {} vs oracle {}", 2 * k, got, expected));
            }
        }
        let oracle_total: i64 = oracle.iter().sum();
        if basis.total_dimension() as i64 != oracle_total {
            mismatches.push(format!(
                "total {} vs oracle {}",
                basis.total_dimension(),
                oracle_total
            ));
        }
        if mismatches.is_empty() {
            let dims: Vec<String> = oracle.iter().map(|c| c.to_string()).collect();
            Ok(format!(
                "graded dimensions ({}) match the point-count oracle",
                dims.join(", ")
            ))
        } else {
            Err(mismatches.join("; "))
        }
    });

    // 2. orbit decomposition
    let orbits = orbit_decomposition(&basis).map_err(|e| e.to_string())?;
    run_stage(&mut stages, "orbits", || {
        let expected = (p - 1) as usize;
        if orbits.fixed_count() != expected {
            return Err(format!(
                "{} fixed monomials, expected {expected}",
                orbits.fixed_count()
            ));
        }
        let mut degree = 0;
        while degree <= 2 * (p as u32 - 2) {
            if orbits.fixed_in_degree(degree) != 1 {
                return Err(format!(
                    "degree {degree} has {} fixed monomials, expected exactly 1",
                    orbits.fixed_in_degree(degree)
                ));
            }
            degree += 2;
        }
        Ok(format!(
            "{expected} fixed monomials (one per even degree), {} full orbits",
            orbits.cycle_count()
        ))
    });

    // 3. group-cohomology spot checks, two routes
    run_stage(&mut stages, "group-cohomology", || {
        let max_i = default_max_degree(p);
        let trivial = group_cohomology_dims(&PermRepresentation::trivial(p).unwrap(), max_i)
            .map_err(|e| e.to_string())?;
        if !trivial.iter().all(|&d| d == 1) {
            return Err(format!("trivial module dims {trivial:?}"));
        }
        let regular = group_cohomology_dims(&PermRepresentation::regular(p).unwrap(), max_i)
            .map_err(|e| e.to_string())?;
        if regular[0] != 1 || regular[1..].iter().any(|&d| d != 0) {
            return Err(format!("regular module dims {regular:?}"));
        }
        // the independent cochain-level route must agree exactly
        for rep in [
            PermRepresentation::trivial(p).unwrap(),
            PermRepresentation::regular(p).unwrap(),
        ] {
            let complex = FiniteGComplex::from_action_in_degree_zero(p, rep.action().clone())
                .map_err(|e| e.to_string())?;
            let borel = borel_cohomology_dims(
                &build_borel(&complex, max_i + 2).map_err(|e| e.to_string())?,
            )
            .map_err(|e| e.to_string())?;
            let periodic = group_cohomology_dims(&rep, max_i).map_err(|e| e.to_string())?;
            if borel != periodic {
                return Err(format!(
                    "periodic route {periodic:?} vs cochain route {borel:?}"
                ));
            }
        }
        Ok(format!(
            "trivial module constant 1 and regular module (1, 0, ...) through degree {max_i}, on both routes"
        ))
    });

    // 4. page assembly and its structural invariants
    let page = assemble_e2(p).map_err(|e| e.to_string())?;
    run_stage(&mut stages, "e2-invariants", || {
        let top = 2 * (p as u32 - 2);
        let mut j = 0;
        while j <= top {
            let expected0 = orbits.cycles_in_degree(j) + 1;
            if page.dims(0, i64::from(j)) != expected0 {
                return Err(format!("column 0 of row {j} is not {expected0}"));
            }
            for i in 1..=page.display_columns() {
                if page.dims(i, i64::from(j)) != 1 {
                    return Err(format!("column {i} of row {j} is not 1"));
                }
            }
            if page.e_multiplication_rank(1, i64::from(j)) != 0 {
                return Err(format!(
                    "the exterior class fails to square to zero on row {j}"
                ));
            }
            j += 2;
        }
        if page.dims(0, 1) != 0 || page.dims(0, i64::from(top) + 2) != 0 {
            return Err("nonzero entry outside the even rows in range".into());
        }
        Ok("row and column dimensions, torsion flags, and the exterior relation all hold".into())
    });

    // 5, 6. certificates
    let collapse = collapse_certificate_for_page(&page, window);
    run_stage(&mut stages, "collapse-certificate", || {
        if collapse.pass {
            Ok(format!(
                "items C1-C5 pass; stable total dimension {}",
                p - 1
            ))
        } else {
            let failing: Vec<String> = collapse
                .items
                .iter()
                .filter(|i| !i.pass)
                .map(|i| format!("{}: {}", i.id, i.detail))
                .collect();
            Err(failing.join("; "))
        }
    });
    if collapse.pass {
        let inject = injectivity_certificate_for_page(&page, window);
        run_stage(&mut stages, "injectivity-certificate", || {
            if inject.pass {
                Ok("items I1-I3 pass".into())
            } else {
                let failing: Vec<String> = inject
                    .items
                    .iter()
                    .filter(|i| !i.pass)
                    .map(|i| format!("{}: {}", i.id, i.detail))
                    .collect();
                Err(failing.join("; "))
            }
        });
    } else {
        stages.push(StageOutcome {
            name: "injectivity-certificate".into(),
            pass: false,
            detail: "skipped: the collapse certificate is its precondition".into(),
            millis: 0,
        });
    }

    // 7. geometric fixed points
    let mut geometric_count = 0usize;
    run_stage(&mut stages, "fixed-points", || {
        let configs = enumerate_fixed(p).map_err(|e| e.to_string())?;
        geometric_count = configs.len();
        let mut notes = vec![format!(
            "{} rotation-invariant, pairwise distinct configurations",
            configs.len()
        )];
        if configs.len() != (p - 1) as usize {
            return Err(format!(
                "{} configurations, expected {}",
                configs.len(),
                p - 1
            ));
        }
        if p <= dm_cohomology::fixed_points::TREE_ENUMERATION_LIMIT {
            if !no_nodal_fixed_points(p).map_err(|e| e.to_string())? {
                return Err(
                    "a multi-component stable tree admits a compatible automorphism".into(),
                );
            }
            notes.push("no multi-component fixed trees".into());
        }
        let degree_report = moebius_power_degree(p).map_err(|e| e.to_string())?;
        if !degree_report.pass {
            return Err(format!(
                "degree bound failed: denominator degree {}",
                degree_report.denominator_degree
            ));
        }
        notes.push(format!(
            "rotation count bounded by a degree-{} polynomial",
            degree_report.fixed_point_degree
        ));
        Ok(notes.join("; "))
    });

    // 8. the three routes to p - 1
    let mut cross_count = 0usize;
    run_stage(&mut stages, "cross-count", || {
        let algebraic = orbits.fixed_count();
        let geometric = geometric_count;
        let fixed_complex =
            FiniteGComplex::fixed_points(p, (p - 1) as usize).map_err(|e| e.to_string())?;
        let dims = borel_cohomology_dims(
            &build_borel(&fixed_complex, 2 * p as usize + 4).map_err(|e| e.to_string())?,
        )
        .map_err(|e| e.to_string())?;
        let stabilized = *dims.last().unwrap();
        if dims.iter().any(|&d| d != stabilized) {
            return Err(format!("fixed locus dims not constant: {dims:?}"));
        }
        let page_stable = total_dims(&page, 2 * (p as usize - 2) + 1, 2 * (p as usize - 2) + 1)[0];
        if algebraic != (p - 1) as usize
            || geometric != algebraic
            || stabilized != algebraic
            || page_stable != algebraic
        {
            return Err(format!(
                "fixed monomials {algebraic}, fixed configurations {geometric}, stabilized equivariant dimension {stabilized}, stable page total {page_stable}"
            ));
        }
        cross_count = algebraic;
        Ok(format!(
            "fixed monomials = fixed configurations = stabilized equivariant dimension = {algebraic}"
        ))
    });

    // 9. localization desk checks
    run_stage(&mut stages, "borel-localization", || {
        let point = FiniteGComplex::point(p).map_err(|e| e.to_string())?;
        let orbit_and_point = FiniteGComplex::free_orbit(p)
            .map_err(|e| e.to_string())?
            .disjoint_union(&point)
            .map_err(|e| e.to_string())?;
        let mut rows = vec![vec![0i64]; p as usize + 1];
        rows[p as usize][0] = 1;
        let incl = FpMatrix::from_rows(&rows, p).map_err(|e| e.to_string())?;
        if !localization_check(
            &orbit_and_point,
            &point,
            &[incl],
            DEFAULT_LOCALIZATION_WINDOW,
        )
        .map_err(|e| e.to_string())?
        {
            return Err("free orbit plus fixed point fails against the point".into());
        }
        let empty = FiniteGComplex::empty(p).map_err(|e| e.to_string())?;
        let free = FiniteGComplex::free_orbit(p).map_err(|e| e.to_string())?;
        let zero_incl = FpMatrix::zeros(p as usize, 0, p).map_err(|e| e.to_string())?;
        if !localization_check(&free, &empty, &[zero_incl], DEFAULT_LOCALIZATION_WINDOW)
            .map_err(|e| e.to_string())?
        {
            return Err("free orbit fails against the empty fixed locus".into());
        }
        let fixed_locus =
            FiniteGComplex::fixed_points(p, (p - 1) as usize).map_err(|e| e.to_string())?;
        let identity_incl = FpMatrix::identity((p - 1) as usize, p).map_err(|e| e.to_string())?;
        if !localization_check(
            &fixed_locus,
            &fixed_locus,
            &[identity_incl],
            DEFAULT_LOCALIZATION_WINDOW,
        )
        .map_err(|e| e.to_string())?
        {
            return Err("fixed locus fails against itself".into());
        }
        Ok("free orbits localize to nothing, fixed points to themselves".into())
    });

    let pass = stages.iter().all(|s| s.pass);
    Ok(VerifyAllReport {
        p,
        window,
        stages,
        cross_count,
        pass,
    })
}
