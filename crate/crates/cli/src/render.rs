//! Report construction and rendering. JSON is the canonical machine
//! format; the CSV and ASCII renderings are produced from the same
//! in-memory structures so the three can never disagree.

use std::path::Path;

use serde_json::{json, Map, Value};

use dm_cohomology::cyclic_cohomology::{
    default_max_degree, group_cohomology_dims, PermRepresentation,
};
use dm_cohomology::dm_basis::{enumerate_basis, orbit_decomposition, GradedBasis, Monomial};
use dm_cohomology::equivariant_cochains::{borel_cohomology_dims, build_borel};
use dm_cohomology::fixed_points::{
    enumerate_fixed, enumerate_stable_trees, moebius_power_degree, MarkedConfig,
};
use dm_cohomology::serre_e2::{
    assemble_e2, collapse_certificate, default_display_columns, injectivity_certificate,
    CertificateReport, E2Page,
};

use crate::verify::VerifyAllReport;
use crate::CliError;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Ascii,
}

fn to_json_string(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn csv_table(header: &str, rows: &[Vec<String>]) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        let encoded: Vec<String> = row.iter().map(|f| csv_escape(f)).collect();
        out.push_str(&encoded.join(","));
        out.push('\n');
    }
    out
}

fn degrees_map(basis: &GradedBasis) -> Map<String, Value> {
    let mut map = Map::new();
    for (degree, slice) in basis.degrees() {
        map.insert(degree.to_string(), json!(slice.len()));
    }
    map
}

pub fn betti(p: u64, max_degree: Option<u32>, format: Format) -> Result<String, CliError> {
    let basis = enumerate_basis(p, max_degree).map_err(|e| CliError::Usage(e.to_string()))?;
    match format {
        Format::Json => {
            let value = json!({ "p": p, "degrees": degrees_map(&basis) });
            Ok(to_json_string(&value))
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = basis
                .degrees()
                .map(|(d, slice)| vec![d.to_string(), slice.len().to_string()])
                .collect();
            Ok(csv_table("degree,dim", &rows))
        }
        Format::Ascii => {
            let mut out = format!("graded dimensions, p = {p}\n");
            for (d, slice) in basis.degrees() {
                out.push_str(&format!("  degree {d:>3}: {}\n", slice.len()));
            }
            out.push_str(&format!("  total: {}\n", basis.total_dimension()));
            Ok(out)
        }
    }
}

fn monomial_string(m: &Monomial) -> String {
    m.to_string()
}

pub fn orbits(p: u64, format: Format) -> Result<String, CliError> {
    let basis = enumerate_basis(p, None).map_err(|e| CliError::Usage(e.to_string()))?;
    let orbits = orbit_decomposition(&basis).map_err(|e| CliError::Failed(e.to_string()))?;
    match format {
        Format::Json => {
            let value = json!({
                "p": p,
                "degrees": degrees_map(&basis),
                "fixed": orbits.fixed(),
                "cycles": orbits.cycles(),
            });
            Ok(to_json_string(&value))
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for (i, m) in orbits.fixed().iter().enumerate() {
                rows.push(vec![
                    "fixed".into(),
                    m.degree().to_string(),
                    i.to_string(),
                    "0".into(),
                    monomial_string(m),
                ]);
            }
            for (i, orbit) in orbits.cycles().iter().enumerate() {
                for (pos, m) in orbit.iter().enumerate() {
                    rows.push(vec![
                        "cycle".into(),
                        m.degree().to_string(),
                        i.to_string(),
                        pos.to_string(),
                        monomial_string(m),
                    ]);
                }
            }
            Ok(csv_table("kind,degree,orbit,position,monomial", &rows))
        }
        Format::Ascii => {
            let mut out = format!(
                "orbit decomposition, p = {p}: {} fixed, {} cycles of length {p}\n",
                orbits.fixed_count(),
                orbits.cycle_count()
            );
            out.push_str("fixed:\n");
            for m in orbits.fixed() {
                out.push_str(&format!("  degree {:>3}: {}\n", m.degree(), m));
            }
            out.push_str("cycles:\n");
            for (i, orbit) in orbits.cycles().iter().enumerate() {
                let members: Vec<String> = orbit.iter().map(monomial_string).collect();
                out.push_str(&format!(
                    "  #{i} (degree {}): {}\n",
                    orbit[0].degree(),
                    members.join(" -> ")
                ));
            }
            Ok(out)
        }
    }
}

/// Parses `trivial`, `regular`, or cycle notation like `perm:(1 2 3)(4 5)`.
fn parse_rep(p: u64, spec: &str) -> Result<PermRepresentation, CliError> {
    match spec {
        "trivial" => PermRepresentation::trivial(p).map_err(|e| CliError::Usage(e.to_string())),
        "regular" => PermRepresentation::regular(p).map_err(|e| CliError::Usage(e.to_string())),
        other => {
            let body = other.strip_prefix("perm:").ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown representation '{other}'; use trivial, regular, or perm:(...)"
                ))
            })?;
            let mut cycles: Vec<Vec<usize>> = Vec::new();
            let mut rest = body.trim();
            while !rest.is_empty() {
                let open = rest.find('(').ok_or_else(|| {
                    CliError::Usage("cycle notation needs parenthesized cycles".into())
                })?;
                let close = rest[open..].find(')').ok_or_else(|| {
                    CliError::Usage("unbalanced parenthesis in cycle notation".into())
                })? + open;
                let inner = &rest[open + 1..close];
                let labels: Result<Vec<usize>, _> = inner
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .map(str::parse::<usize>)
                    .collect();
                let labels =
                    labels.map_err(|e| CliError::Usage(format!("bad cycle entry: {e}")))?;
                if labels.contains(&0) {
                    return Err(CliError::Usage("cycle labels are 1-based".into()));
                }
                cycles.push(labels);
                rest = rest[close + 1..].trim();
            }
            let size = cycles
                .iter()
                .flat_map(|c| c.iter())
                .copied()
                .max()
                .unwrap_or(0);
            if size == 0 {
                return Err(CliError::Usage("empty permutation".into()));
            }
            let mut image: Vec<usize> = (0..size).collect();
            let mut seen = vec![false; size];
            for cycle in &cycles {
                for (i, &label) in cycle.iter().enumerate() {
                    if seen[label - 1] {
                        return Err(CliError::Usage(format!("label {label} repeats")));
                    }
                    seen[label - 1] = true;
                    let next = cycle[(i + 1) % cycle.len()];
                    image[label - 1] = next - 1;
                }
            }
            PermRepresentation::from_permutation(p, &image)
                .map_err(|e| CliError::Usage(e.to_string()))
        }
    }
}

pub fn group_cohomology(
    p: u64,
    rep_spec: &str,
    max_i: Option<usize>,
    format: Format,
) -> Result<String, CliError> {
    let rep = parse_rep(p, rep_spec)?;
    let max_i = max_i.unwrap_or_else(|| default_max_degree(p));
    let dims = group_cohomology_dims(&rep, max_i).map_err(|e| CliError::Failed(e.to_string()))?;
    match format {
        Format::Json => Ok(to_json_string(&json!({
            "p": p,
            "rep": rep_spec,
            "max_i": max_i,
            "dims": dims,
        }))),
        Format::Csv => {
            let rows: Vec<Vec<String>> = dims
                .iter()
                .enumerate()
                .map(|(i, d)| vec![i.to_string(), d.to_string()])
                .collect();
            Ok(csv_table("degree,dim", &rows))
        }
        Format::Ascii => {
            let mut out = format!("group cohomology, p = {p}, module = {rep_spec}\n");
            for (i, d) in dims.iter().enumerate() {
                out.push_str(&format!("  H^{i:<2} = {d}\n"));
            }
            Ok(out)
        }
    }
}

fn page_rows(page: &E2Page, max_i: usize) -> Vec<(u32, Vec<usize>)> {
    page.rows()
        .iter()
        .map(|row| {
            let j = row.fiber_degree();
            let dims: Vec<usize> = (0..=max_i).map(|i| page.dims(i, i64::from(j))).collect();
            (j, dims)
        })
        .collect()
}

pub fn e2(p: u64, max_i: Option<usize>, format: Format) -> Result<String, CliError> {
    let page = assemble_e2(p).map_err(|e| CliError::Failed(e.to_string()))?;
    let max_i = max_i.unwrap_or_else(|| default_display_columns(p));
    let rows = page_rows(&page, max_i);
    let generators = page.generator_labels();
    match format {
        Format::Json => {
            let rows_json: Vec<Value> = rows
                .iter()
                .map(|(j, dims)| json!({ "fiber_degree": j, "dims": dims }))
                .collect();
            let gens_json: Vec<Value> = generators
                .iter()
                .map(|(label, i, j)| json!({ "label": label, "column": i, "row": j }))
                .collect();
            Ok(to_json_string(&json!({
                "p": p,
                "max_i": max_i,
                "rows": rows_json,
                "generators": gens_json,
            })))
        }
        Format::Csv => {
            let mut table = Vec::new();
            for (j, dims) in &rows {
                for (i, d) in dims.iter().enumerate() {
                    table.push(vec![i.to_string(), j.to_string(), d.to_string()]);
                }
            }
            Ok(csv_table("i,j,dim", &table))
        }
        Format::Ascii => {
            let mut out =
                format!("second page, p = {p} (rows: fiber degree, columns: base degree)\n");
            out.push_str("  j \\ i |");
            for i in 0..=max_i {
                out.push_str(&format!(" {i:>3}"));
            }
            out.push('\n');
            out.push_str(&format!("  ------+{}\n", "-".repeat(4 * (max_i + 1))));
            for (j, dims) in rows.iter().rev() {
                out.push_str(&format!("  {j:>5} |"));
                for d in dims {
                    out.push_str(&format!(" {d:>3}"));
                }
                out.push('\n');
            }
            out.push_str("generators:\n");
            for (label, i, j) in &generators {
                out.push_str(&format!("  {label} at column {i}, row {j}\n"));
            }
            Ok(out)
        }
    }
}

fn certificate_output(report: &CertificateReport, format: Format) -> (String, i32) {
    let code = i32::from(!report.pass);
    let text = match format {
        Format::Json => {
            let value = serde_json::to_value(report).expect("serializable report");
            to_json_string(&value)
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .items
                .iter()
                .map(|item| vec![item.id.clone(), item.pass.to_string(), item.detail.clone()])
                .collect();
            csv_table("id,pass,detail", &rows)
        }
        Format::Ascii => {
            let mut out = format!("certificate, p = {}\n", report.p);
            for item in &report.items {
                let mark = if item.pass { "PASS" } else { "FAIL" };
                out.push_str(&format!("  [{mark}] {}: {}\n", item.id, item.detail));
            }
            out.push_str(&format!(
                "overall: {}\n",
                if report.pass { "PASS" } else { "FAIL" }
            ));
            out
        }
    };
    (text, code)
}

pub fn collapse(p: u64, window: usize, format: Format) -> Result<(String, i32), CliError> {
    if window == 0 {
        return Err(CliError::Usage("window must be positive".into()));
    }
    let report = collapse_certificate(p, window).map_err(|e| CliError::Failed(e.to_string()))?;
    Ok(certificate_output(&report, format))
}

pub fn inject(p: u64, window: usize, format: Format) -> Result<(String, i32), CliError> {
    if window == 0 {
        return Err(CliError::Usage("window must be positive".into()));
    }
    let report = injectivity_certificate(p, window).map_err(|e| CliError::Failed(e.to_string()))?;
    Ok(certificate_output(&report, format))
}

fn config_points_json(config: &MarkedConfig) -> Value {
    let points: Vec<Value> = config
        .points()
        .iter()
        .map(|pt| {
            json!({
                "z": pt.z().coeff_strings(),
                "w": pt.w().coeff_strings(),
            })
        })
        .collect();
    Value::Array(points)
}

pub fn fixed_points(p: u64, format: Format) -> Result<String, CliError> {
    use dm_cohomology::fixed_points::FixedPointError;
    let configs = enumerate_fixed(p).map_err(|e| match e {
        FixedPointError::NonPrime(_)
        | FixedPointError::UnsupportedPrime { .. }
        | FixedPointError::ResourceGuard { .. } => CliError::Usage(e.to_string()),
        other => CliError::Failed(other.to_string()),
    })?;
    match format {
        Format::Json => {
            let list: Vec<Value> = configs
                .iter()
                .enumerate()
                .map(|(i, c)| json!({ "s": i + 1, "points": config_points_json(c) }))
                .collect();
            Ok(to_json_string(&json!({
                "p": p,
                "count": configs.len(),
                "configurations": list,
            })))
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for (i, config) in configs.iter().enumerate() {
                for (label0, pt) in config.points().iter().enumerate() {
                    rows.push(vec![
                        (i + 1).to_string(),
                        (label0 + 1).to_string(),
                        pt.z().to_string(),
                        pt.w().to_string(),
                    ]);
                }
            }
            Ok(csv_table("s,label,z,w", &rows))
        }
        Format::Ascii => {
            let mut out = format!(
                "rotation-fixed configurations, p = {p}: {} classes\n",
                configs.len()
            );
            for (i, config) in configs.iter().enumerate() {
                out.push_str(&format!("  s = {}:\n", i + 1));
                for (label0, pt) in config.points().iter().enumerate() {
                    out.push_str(&format!(
                        "    x{} = ({} : {})\n",
                        label0 + 1,
                        pt.z(),
                        pt.w()
                    ));
                }
            }
            Ok(out)
        }
    }
}

pub fn trees(p: u64, format: Format) -> Result<String, CliError> {
    let trees = enumerate_stable_trees(p).map_err(|e| CliError::Usage(e.to_string()))?;
    let splits: Vec<Vec<Vec<u8>>> = trees
        .iter()
        .map(|t| t.nested_family().into_iter().collect())
        .collect();
    match format {
        Format::Json => {
            let list: Vec<Value> = trees
                .iter()
                .zip(&splits)
                .map(|(t, s)| json!({ "components": t.vertex_count(), "splits": s }))
                .collect();
            Ok(to_json_string(&json!({
                "p": p,
                "count": trees.len(),
                "trees": list,
            })))
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = trees
                .iter()
                .zip(&splits)
                .enumerate()
                .map(|(i, (t, s))| {
                    vec![
                        i.to_string(),
                        t.vertex_count().to_string(),
                        render_splits(s),
                    ]
                })
                .collect();
            Ok(csv_table("index,components,splits", &rows))
        }
        Format::Ascii => {
            let mut out = format!(
                "stable trees with {} labeled points: {} isomorphism classes\n",
                p + 1,
                trees.len()
            );
            for (i, (t, s)) in trees.iter().zip(&splits).enumerate() {
                out.push_str(&format!(
                    "  #{i}: {} components {}\n",
                    t.vertex_count(),
                    render_splits(s)
                ));
            }
            Ok(out)
        }
    }
}

fn render_splits(splits: &[Vec<u8>]) -> String {
    if splits.is_empty() {
        return "(one sphere)".into();
    }
    let parts: Vec<String> = splits
        .iter()
        .map(|s| {
            let labels: Vec<String> = s.iter().map(u8::to_string).collect();
            format!("{{{}}}", labels.join(","))
        })
        .collect();
    parts.join(" ")
}

pub fn moebius_degree(p: u64, format: Format) -> Result<(String, i32), CliError> {
    let report = moebius_power_degree(p).map_err(|e| CliError::Usage(e.to_string()))?;
    let code = i32::from(!report.pass);
    let text = match format {
        Format::Json => to_json_string(&serde_json::to_value(&report).expect("serializable")),
        Format::Csv => {
            let rows = vec![
                vec!["p".to_string(), report.p.to_string()],
                vec![
                    "numerator_constant".to_string(),
                    report.numerator_constant.to_string(),
                ],
                vec![
                    "denominator_degree".to_string(),
                    report.denominator_degree.to_string(),
                ],
                vec![
                    "rotation_at_zero".to_string(),
                    report.rotation_at_zero.to_string(),
                ],
                vec![
                    "fixed_point_degree".to_string(),
                    report.fixed_point_degree.to_string(),
                ],
                vec!["pass".to_string(), report.pass.to_string()],
            ];
            csv_table("field,value", &rows)
        }
        Format::Ascii => {
            format!(
                "rotation degree bound, p = {}\n  numerator constant: {}\n  denominator degree: {} (expected {})\n  parameter polynomial degree: {}\n  specializes to a rotation at zero: {}\n  overall: {}\n",
                report.p,
                report.numerator_constant,
                report.denominator_degree,
                report.p - 1,
                report.fixed_point_degree,
                report.rotation_at_zero,
                if report.pass { "PASS" } else { "FAIL" }
            )
        }
    };
    Ok((text, code))
}

pub fn borel(input: &Path, max_degree: usize, format: Format) -> Result<String, CliError> {
    let complex = crate::complex_io::read_complex(input)?;
    let built = build_borel(&complex, max_degree).map_err(|e| CliError::Usage(e.to_string()))?;
    let dims = borel_cohomology_dims(&built).map_err(|e| CliError::Failed(e.to_string()))?;
    match format {
        Format::Json => Ok(to_json_string(&json!({
            "p": complex.p(),
            "max_degree": max_degree,
            "dims": dims,
        }))),
        Format::Csv => {
            let rows: Vec<Vec<String>> = dims
                .iter()
                .enumerate()
                .map(|(i, d)| vec![i.to_string(), d.to_string()])
                .collect();
            Ok(csv_table("degree,dim", &rows))
        }
        Format::Ascii => {
            let mut out = format!(
                "equivariant cohomology over F_{}, degrees 0..={}\n",
                complex.p(),
                dims.len() - 1
            );
            for (i, d) in dims.iter().enumerate() {
                out.push_str(&format!("  H^{i:<2} = {d}\n"));
            }
            Ok(out)
        }
    }
}

pub fn verify_all_output(report: &VerifyAllReport, format: Format) -> String {
    match format {
        Format::Json => to_json_string(&serde_json::to_value(report).expect("serializable")),
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .stages
                .iter()
                .map(|s| vec![s.name.clone(), s.pass.to_string(), s.detail.clone()])
                .collect();
            csv_table("stage,pass,detail", &rows)
        }
        Format::Ascii => {
            let mut out = format!(
                "verification pipeline, p = {}, window = {}\n",
                report.p, report.window
            );
            for stage in &report.stages {
                let mark = if stage.pass { "PASS" } else { "FAIL" };
                out.push_str(&format!("  [{mark}] {}: {}\n", stage.name, stage.detail));
            }
            out.push_str(&format!(
                "cross-count (three routes to p - 1): {}\noverall: {}\n",
                report.cross_count,
                if report.pass { "PASS" } else { "FAIL" }
            ));
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dm_cohomology::serre_e2::collapse_certificate_for_page;

    #[test]
    fn failing_certificate_maps_to_exit_one() {
        let mut page = assemble_e2(3).unwrap();
        page.insert_orbit_class(2, false, false);
        let report = collapse_certificate_for_page(&page, 4);
        for format in [Format::Json, Format::Csv, Format::Ascii] {
            let (text, code) = certificate_output(&report, format);
            assert_eq!(code, 1);
            assert!(text.contains("false") || text.contains("FAIL"));
        }
    }

    #[test]
    fn passing_certificate_maps_to_exit_zero() {
        let report = collapse_certificate(3, 4).unwrap();
        let (_, code) = certificate_output(&report, Format::Json);
        assert_eq!(code, 0);
    }

    #[test]
    fn csv_fields_with_commas_are_quoted() {
        assert_eq!(csv_escape("plain"), "plain");
        assert_eq!(csv_escape("a, b"), "\"a, b\"");
        assert_eq!(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
    }
}
