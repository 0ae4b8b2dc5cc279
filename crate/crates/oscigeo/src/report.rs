//! Run configuration, field analysis documents, sampling sweeps, and
//! serialization.
//!
//! This layer turns the geometry engine into reproducible reports:
//!
//! * **describe** — exact multiplication, connection, and curvature tables
//!   of one group;
//! * **check** — the full residual/verdict document for one unit field
//!   (schema `oscigeo/1`);
//! * **scan** — the same analysis over a seeded sample of the unit sphere,
//!   optionally restricted to a coordinate subspace.
//!
//! Scans are deterministic: sample `i` draws from its own ChaCha8 stream,
//! so the record list is byte-identical for a fixed seed regardless of
//! thread count, and floats serialize through a fixed `{:.16e}` formatter
//! in both JSON and CSV.

use crate::algebra::{AlgebraVector, MetricLieAlgebra};
use crate::contact::ContactData;
use crate::error::Error;
use crate::field::{classify, AmbientGeometry, GeometryReport, UnitField};
use crate::oscillator::{
    classify_minimal_xy, harmonic_map_family_contains, heisenberg_algebra,
    heisenberg_frame_names, oscillator_algebra, OscillatorSpec,
};
use crate::scalar::{Rat, Scalar};
use crate::Result;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

/// Which group to analyze.
#[derive(Debug, Clone)]
pub enum FamilyConfig {
    Oscillator { n: usize, lambda: Vec<f64> },
    Heisenberg { n: usize },
    /// A custom metric Lie algebra given as the JSON document accepted by
    /// [`MetricLieAlgebra::from_json`].
    Custom { json: String },
}

/// Coordinate subspace a scan samples from.
#[derive(Debug, Clone)]
pub enum Subspace {
    /// The whole unit sphere.
    Full,
    /// Only the e-block coordinates (block families only).
    XY,
    /// An explicit 0/1 coordinate mask.
    Mask(Vec<bool>),
}

#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub family: FamilyConfig,
    pub field: Vec<f64>,
    pub tolerance: f64,
}

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub family: FamilyConfig,
    pub samples: u64,
    pub seed: u64,
    pub subspace: Subspace,
    pub tolerance: f64,
}

/// Group identification block shared by every document.
#[derive(Debug, Clone, Serialize)]
pub struct GroupInfo {
    pub family: String,
    pub n: Option<usize>,
    pub lambda: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Residuals {
    pub mean_curvature: f64,
    pub tgf: f64,
    pub laplacian_defect: f64,
    pub hm_trace: f64,
    pub geodesic_defect: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdicts {
    pub minimal: bool,
    pub harmonic: bool,
    pub harmonic_map: bool,
    pub totally_geodesic: bool,
    pub geodesic: bool,
}

/// Closed-form verdicts, present only where the closed forms apply
/// (oscillator family; `minimal_xy` additionally needs an e-block field).
#[derive(Debug, Clone, Serialize)]
pub struct ClosedForm {
    pub minimal_xy: Option<bool>,
    pub harmonic_map_member: Option<bool>,
}

/// The `oscigeo/1` analysis document for one field.
#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub schema: String,
    pub group: GroupInfo,
    pub field: Vec<f64>,
    pub input_norm: f64,
    pub residuals: Residuals,
    pub singular_values: Vec<f64>,
    pub verdicts: Verdicts,
    pub closed_form: ClosedForm,
}

/// One row of a scan.
#[derive(Debug, Clone, Serialize)]
pub struct ScanRecord {
    pub index: u64,
    pub field: Vec<f64>,
    pub residuals: Residuals,
    pub singular_values: Vec<f64>,
    pub verdicts: Verdicts,
    pub closed_form: ClosedForm,
    pub conflict: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanSummary {
    pub minimal: u64,
    pub harmonic: u64,
    pub harmonic_map: u64,
    pub totally_geodesic: u64,
    pub geodesic: u64,
    pub conflicts: u64,
}

/// The scan document: shared schema tag, then the per-sample records.
#[derive(Debug, Clone, Serialize)]
pub struct ScanDocument {
    pub schema: String,
    pub group: GroupInfo,
    pub dim: usize,
    pub seed: u64,
    pub samples: u64,
    pub subspace: String,
    pub tolerance: f64,
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

/// A family resolved into computable form.
pub struct FamilyData {
    pub geometry: AmbientGeometry<f64>,
    pub names: Vec<String>,
    pub oscillator: Option<OscillatorSpec<f64>>,
    pub info: GroupInfo,
}

/// Build the float-path geometry (and closed-form handle, when the family
/// has one) for a family configuration.
pub fn build_family(family: &FamilyConfig) -> Result<FamilyData> {
    match family {
        FamilyConfig::Oscillator { n, lambda } => {
            let spec = OscillatorSpec::new(*n, lambda.clone())?;
            let geometry = AmbientGeometry::new(oscillator_algebra(&spec)?)?;
            Ok(FamilyData {
                names: spec.frame_names(),
                info: GroupInfo {
                    family: "oscillator".into(),
                    n: Some(*n),
                    lambda: Some(lambda.clone()),
                },
                oscillator: Some(spec),
                geometry,
            })
        }
        FamilyConfig::Heisenberg { n } => {
            let geometry = AmbientGeometry::new(heisenberg_algebra::<f64>(*n)?)?;
            Ok(FamilyData {
                geometry,
                names: heisenberg_frame_names(*n),
                oscillator: None,
                info: GroupInfo {
                    family: "heisenberg".into(),
                    n: Some(*n),
                    lambda: None,
                },
            })
        }
        FamilyConfig::Custom { json } => {
            let alg = MetricLieAlgebra::from_json(json)?;
            let dim = alg.dim();
            let geometry = AmbientGeometry::new(alg)?;
            Ok(FamilyData {
                geometry,
                names: (1..=dim).map(|i| format!("e{i}")).collect(),
                oscillator: None,
                info: GroupInfo {
                    family: "custom".into(),
                    n: None,
                    lambda: None,
                },
            })
        }
    }
}

fn closed_form_verdicts(
    data: &FamilyData,
    field: &AlgebraVector<f64>,
    tolerance: f64,
) -> ClosedForm {
    let Some(spec) = &data.oscillator else {
        return ClosedForm {
            minimal_xy: None,
            harmonic_map_member: None,
        };
    };
    ClosedForm {
        minimal_xy: classify_minimal_xy(spec, field, tolerance).ok(),
        harmonic_map_member: harmonic_map_family_contains(spec, field, tolerance).ok(),
    }
}

/// Whether the closed-form verdicts disagree with the engine verdicts
/// anywhere they are both defined.
pub fn closed_form_conflict(closed: &ClosedForm, verdicts: &Verdicts) -> bool {
    closed
        .minimal_xy
        .map_or(false, |b| b != verdicts.minimal)
        || closed
            .harmonic_map_member
            .map_or(false, |b| b != verdicts.harmonic_map)
}

fn verdicts_of(report: &GeometryReport) -> Verdicts {
    Verdicts {
        minimal: report.minimal,
        harmonic: report.harmonic,
        harmonic_map: report.harmonic_map,
        totally_geodesic: report.totally_geodesic,
        geodesic: report.geodesic,
    }
}

fn residuals_of(report: &GeometryReport) -> Residuals {
    Residuals {
        mean_curvature: report.mean_curvature_residual,
        tgf: report.tgf_residual,
        laplacian_defect: report.laplacian_defect,
        hm_trace: report.hm_trace,
        geodesic_defect: report.geodesic_defect,
    }
}

/// Analyze one field: normalize it, run the engine, attach closed forms.
pub fn run_check(cfg: &CheckConfig) -> Result<ReportDocument> {
    if !(cfg.tolerance > 0.0) {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    let data = build_family(&cfg.family)?;
    let dim = data.geometry.dim();
    if cfg.field.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: cfg.field.len(),
        });
    }
    let raw = AlgebraVector::new(cfg.field.clone());
    let (field, input_norm) = UnitField::normalized(data.geometry.algebra(), raw)?;
    let report = classify(&data.geometry, &field, cfg.tolerance)?;
    let closed_form = closed_form_verdicts(&data, field.vector(), cfg.tolerance);
    Ok(ReportDocument {
        schema: "oscigeo/1".into(),
        group: data.info,
        field: field.vector().coeffs().to_vec(),
        input_norm,
        residuals: residuals_of(&report),
        singular_values: report.sigma.clone(),
        verdicts: verdicts_of(&report),
        closed_form,
    })
}

fn resolve_mask(subspace: &Subspace, data: &FamilyData) -> Result<Vec<bool>> {
    let dim = data.geometry.dim();
    match subspace {
        Subspace::Full => Ok(vec![true; dim]),
        Subspace::XY => {
            let n = match (&data.oscillator, data.info.family.as_str()) {
                (Some(spec), _) => spec.n(),
                (None, "heisenberg") => data.info.n.expect("heisenberg carries n"),
                _ => {
                    return Err(Error::InvalidInput(
                        "the xy subspace needs an oscillator or Heisenberg family".into(),
                    ))
                }
            };
            let mut mask = vec![false; dim];
            for m in mask.iter_mut().take(2 * n) {
                *m = true;
            }
            Ok(mask)
        }
        Subspace::Mask(mask) => {
            if mask.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: mask.len(),
                });
            }
            if mask.iter().all(|m| !m) {
                return Err(Error::InvalidInput(
                    "subspace mask selects no coordinates".into(),
                ));
            }
            Ok(mask.clone())
        }
    }
}

fn subspace_label(subspace: &Subspace) -> String {
    match subspace {
        Subspace::Full => "full".into(),
        Subspace::XY => "xy".into(),
        Subspace::Mask(mask) => {
            let bits: Vec<&str> = mask.iter().map(|&b| if b { "1" } else { "0" }).collect();
            format!("mask={}", bits.join(","))
        }
    }
}

/// Draw a unit-sphere sample on the masked coordinates: Gaussian draw,
/// reject near-zero, normalize later against the metric.
fn sample_coordinates(dim: usize, mask: &[bool], rng: &mut ChaCha8Rng) -> Vec<f64> {
    loop {
        let coords: Vec<f64> = (0..dim)
            .map(|i| {
                if mask[i] {
                    StandardNormal.sample(rng)
                } else {
                    0.0
                }
            })
            .collect();
        let norm_sq: f64 = coords.iter().map(|x| x * x).sum();
        if norm_sq > 1e-12 {
            return coords;
        }
    }
}

/// Run a seeded sweep. Sample `i` uses ChaCha8 stream `i` of the seed, so
/// results are independent of thread scheduling.
pub fn run_scan(cfg: &ScanConfig) -> Result<ScanDocument> {
    if !(cfg.tolerance > 0.0) {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    if cfg.samples == 0 {
        return Err(Error::InvalidInput("sample count must be positive".into()));
    }
    let data = build_family(&cfg.family)?;
    let dim = data.geometry.dim();
    let mask = resolve_mask(&cfg.subspace, &data)?;

    let records: Vec<ScanRecord> = (0..cfg.samples)
        .into_par_iter()
        .map(|index| -> Result<ScanRecord> {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(index);
            let coords = sample_coordinates(dim, &mask, &mut rng);
            let raw = AlgebraVector::new(coords);
            let (field, _) = UnitField::normalized(data.geometry.algebra(), raw)?;
            let report = classify(&data.geometry, &field, cfg.tolerance)?;
            let verdicts = verdicts_of(&report);
            let closed_form = closed_form_verdicts(&data, field.vector(), cfg.tolerance);
            let conflict = closed_form_conflict(&closed_form, &verdicts);
            Ok(ScanRecord {
                index,
                field: field.vector().coeffs().to_vec(),
                residuals: residuals_of(&report),
                singular_values: report.sigma.clone(),
                verdicts,
                closed_form,
                conflict,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut summary = ScanSummary {
        minimal: 0,
        harmonic: 0,
        harmonic_map: 0,
        totally_geodesic: 0,
        geodesic: 0,
        conflicts: 0,
    };
    for r in &records {
        summary.minimal += u64::from(r.verdicts.minimal);
        summary.harmonic += u64::from(r.verdicts.harmonic);
        summary.harmonic_map += u64::from(r.verdicts.harmonic_map);
        summary.totally_geodesic += u64::from(r.verdicts.totally_geodesic);
        summary.geodesic += u64::from(r.verdicts.geodesic);
        summary.conflicts += u64::from(r.conflict);
    }

    Ok(ScanDocument {
        schema: "oscigeo/1".into(),
        group: data.info,
        dim,
        seed: cfg.seed,
        samples: cfg.samples,
        subspace: subspace_label(&cfg.subspace),
        tolerance: cfg.tolerance,
        records,
        summary,
    })
}

/// JSON serializer writing every float as `{:.16e}` (17 significant
/// digits), so that equal runs produce equal bytes.
struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        if value.is_finite() {
            write!(writer, "{value:.16e}")
        } else {
            writer.write_all(b"null")
        }
    }
}

/// Serialize any document with the fixed-precision float formatter.
pub fn render_json<T: Serialize>(doc: &T) -> Result<String> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SciFormatter);
    doc.serialize(&mut ser)
        .map_err(|e| Error::Domain(format!("JSON serialization failed: {e}")))?;
    String::from_utf8(out)
        .map_err(|e| Error::Domain(format!("JSON serialization produced bad UTF-8: {e}")))
}

fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_opt_bool(b: Option<bool>) -> String {
    match b {
        Some(true) => "true".into(),
        Some(false) => "false".into(),
        None => String::new(),
    }
}

fn csv_residual_header() -> [&'static str; 5] {
    [
        "res_mean_curvature",
        "res_tgf",
        "res_laplacian_defect",
        "res_hm_trace",
        "res_geodesic_defect",
    ]
}

fn csv_verdict_header() -> [&'static str; 5] {
    [
        "minimal",
        "harmonic",
        "harmonic_map",
        "totally_geodesic",
        "geodesic",
    ]
}

fn push_residuals(cells: &mut Vec<String>, r: &Residuals) {
    cells.push(fmt_float(r.mean_curvature));
    cells.push(fmt_float(r.tgf));
    cells.push(fmt_float(r.laplacian_defect));
    cells.push(fmt_float(r.hm_trace));
    cells.push(fmt_float(r.geodesic_defect));
}

fn push_verdicts(cells: &mut Vec<String>, v: &Verdicts) {
    for b in [
        v.minimal,
        v.harmonic,
        v.harmonic_map,
        v.totally_geodesic,
        v.geodesic,
    ] {
        cells.push(b.to_string());
    }
}

/// CSV rendering of a check document: header plus one row, columns in the
/// same order as the JSON leaves.
pub fn check_to_csv(doc: &ReportDocument) -> String {
    let dim = doc.field.len();
    let mut header: Vec<String> = vec!["family".into(), "n".into(), "lambda".into()];
    header.extend((1..=dim).map(|i| format!("field_{i}")));
    header.push("input_norm".into());
    header.extend(csv_residual_header().iter().map(|s| s.to_string()));
    header.extend((1..=dim).map(|i| format!("sigma_{i}")));
    header.extend(csv_verdict_header().iter().map(|s| s.to_string()));
    header.push("closed_minimal_xy".into());
    header.push("closed_harmonic_map_member".into());

    let mut cells: Vec<String> = vec![
        doc.group.family.clone(),
        doc.group.n.map(|n| n.to_string()).unwrap_or_default(),
        doc.group
            .lambda
            .as_ref()
            .map(|l| {
                l.iter()
                    .map(|x| fmt_float(*x))
                    .collect::<Vec<_>>()
                    .join(";")
            })
            .unwrap_or_default(),
    ];
    cells.extend(doc.field.iter().map(|x| fmt_float(*x)));
    cells.push(fmt_float(doc.input_norm));
    push_residuals(&mut cells, &doc.residuals);
    cells.extend(doc.singular_values.iter().map(|x| fmt_float(*x)));
    push_verdicts(&mut cells, &doc.verdicts);
    cells.push(fmt_opt_bool(doc.closed_form.minimal_xy));
    cells.push(fmt_opt_bool(doc.closed_form.harmonic_map_member));

    format!("{}\n{}\n", header.join(","), cells.join(","))
}

/// CSV rendering of a scan document: header plus one row per record.
pub fn scan_to_csv(doc: &ScanDocument) -> String {
    let dim = doc.dim;
    let mut header: Vec<String> = vec!["index".into()];
    header.extend((1..=dim).map(|i| format!("field_{i}")));
    header.extend(csv_residual_header().iter().map(|s| s.to_string()));
    header.extend((1..=dim).map(|i| format!("sigma_{i}")));
    header.extend(csv_verdict_header().iter().map(|s| s.to_string()));
    header.push("closed_minimal_xy".into());
    header.push("closed_harmonic_map_member".into());
    header.push("conflict".into());

    let mut out = header.join(",");
    out.push('\n');
    for r in &doc.records {
        let mut cells: Vec<String> = vec![r.index.to_string()];
        cells.extend(r.field.iter().map(|x| fmt_float(*x)));
        push_residuals(&mut cells, &r.residuals);
        cells.extend(r.singular_values.iter().map(|x| fmt_float(*x)));
        push_verdicts(&mut cells, &r.verdicts);
        cells.push(fmt_opt_bool(r.closed_form.minimal_xy));
        cells.push(fmt_opt_bool(r.closed_form.harmonic_map_member));
        cells.push(r.conflict.to_string());
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Exact text tables — brackets, connection, curvature — for an algebra.
/// Works on either scalar path; the exact path prints rationals.
pub fn describe_text<S: Scalar>(
    title: &str,
    alg: &MetricLieAlgebra<S>,
    names: &[String],
) -> Result<String> {
    let dim = alg.dim();
    if names.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: names.len(),
        });
    }
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let conn = alg.koszul_connection()?;
    let cur = alg.curvature(&conn);

    let mut out = String::new();
    out.push_str(title);
    out.push('\n');
    out.push_str(&format!("dimension {dim}, frame: {}\n", names.join(", ")));

    out.push_str("\nnonzero brackets:\n");
    let mut any = false;
    for i in 0..dim {
        for j in (i + 1)..dim {
            let br = AlgebraVector::new(
                (0..dim)
                    .map(|k| alg.structure_constant(i, j, k).clone())
                    .collect(),
            );
            if !br.is_zero() {
                any = true;
                out.push_str(&format!(
                    "  [{}, {}] = {}\n",
                    names[i],
                    names[j],
                    br.display_in_frame(&name_refs)
                ));
            }
        }
    }
    if !any {
        out.push_str("  (abelian)\n");
    }

    out.push_str("\nconnection table (nonzero entries):\n");
    let mut any = false;
    for i in 0..dim {
        for j in 0..dim {
            let entry = conn.entry(i, j);
            if !entry.is_zero() {
                any = true;
                out.push_str(&format!(
                    "  ∇_{{{}}} {} = {}\n",
                    names[i],
                    names[j],
                    entry.display_in_frame(&name_refs)
                ));
            }
        }
    }
    if !any {
        out.push_str("  (flat)\n");
    }

    out.push_str("\ncurvature components (nonzero, i < j):\n");
    let mut any = false;
    for i in 0..dim {
        for j in (i + 1)..dim {
            for k in 0..dim {
                let comp = cur.component(i, j, k);
                if !comp.is_zero() {
                    any = true;
                    out.push_str(&format!(
                        "  R({}, {}) {} = {}\n",
                        names[i],
                        names[j],
                        names[k],
                        comp.display_in_frame(&name_refs)
                    ));
                }
            }
        }
    }
    if !any {
        out.push_str("  (flat)\n");
    }
    Ok(out)
}

/// Parse a scalar written as an integer, a fraction `p/q`, or a decimal,
/// into an exact rational. Returns `None` for anything else (including
/// exponent notation, which stays on the float path).
pub fn parse_rational(text: &str) -> Option<Rat> {
    let s = text.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: i64 = num.trim().parse().ok()?;
        let d: i64 = den.trim().parse().ok()?;
        if d == 0 {
            return None;
        }
        return Some(Rat::from_ratio(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int_part.trim_start().starts_with('-');
        let whole: i64 = if int_part == "-" || int_part.is_empty() {
            0
        } else {
            int_part.trim().parse().ok()?
        };
        let digits: i64 = frac_part.parse().ok()?;
        let scale = 10i64.checked_pow(frac_part.len() as u32)?;
        let frac = Rat::from_ratio(digits, scale);
        let whole = Rat::from_int(whole);
        return Some(if negative { whole - frac } else { whole + frac });
    }
    s.parse::<i64>().ok().map(Rat::from_int)
}

/// Describe a family: exact tables when every parameter is rational,
/// float tables otherwise.
pub fn describe_family(family: &FamilyConfig, lambda_text: Option<&[String]>) -> Result<String> {
    match family {
        FamilyConfig::Oscillator { n, lambda } => {
            let title = format!(
                "oscillator group: n = {n}, λ = [{}]",
                lambda
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            // Prefer the exact path when the original text was rational.
            if let Some(texts) = lambda_text {
                let rational: Option<Vec<Rat>> =
                    texts.iter().map(|t| parse_rational(t)).collect();
                if let Some(lams) = rational {
                    let spec = OscillatorSpec::new(*n, lams)?;
                    let alg = oscillator_algebra(&spec)?;
                    return describe_text(&title, &alg, &spec.frame_names());
                }
            }
            let spec = OscillatorSpec::new(*n, lambda.clone())?;
            let alg = oscillator_algebra(&spec)?;
            describe_text(&title, &alg, &spec.frame_names())
        }
        FamilyConfig::Heisenberg { n } => {
            let alg = heisenberg_algebra::<Rat>(*n)?;
            describe_text(
                &format!("Heisenberg group: n = {n}"),
                &alg,
                &heisenberg_frame_names(*n),
            )
        }
        FamilyConfig::Custom { json } => {
            let alg = MetricLieAlgebra::from_json(json)?;
            let names: Vec<String> = (1..=alg.dim()).map(|i| format!("e{i}")).collect();
            describe_text("custom metric Lie algebra", &alg, &names)
        }
    }
}

/// The distinguished fields of a block family (used by examples and by
/// `describe` to point at interesting inputs): ±ξ, ±ζ when present.
pub fn distinguished_fields(data: &FamilyData) -> Vec<(String, Vec<f64>)> {
    let dim = data.geometry.dim();
    let mut out = Vec::new();
    match data.info.family.as_str() {
        "oscillator" => {
            let n = data.info.n.expect("oscillator carries n");
            let contact = ContactData::oscillator(n);
            out.push(("ξ".to_string(), contact.xi::<f64>().coeffs().to_vec()));
            if let Some(zeta) = contact.zeta::<f64>() {
                out.push(("ζ".to_string(), zeta.coeffs().to_vec()));
            }
        }
        "heisenberg" => {
            let n = data.info.n.expect("heisenberg carries n");
            let contact = ContactData::heisenberg(n);
            out.push(("ξ".to_string(), contact.xi::<f64>().coeffs().to_vec()));
        }
        _ => {
            let mut first = vec![0.0; dim];
            first[0] = 1.0;
            out.push(("e1".to_string(), first));
        }
    }
    out
}
