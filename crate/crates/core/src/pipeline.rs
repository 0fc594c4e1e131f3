//! End-to-end runs behind the `tw` tool. Each run returns an exit status
//! and a JSON report; reports contain no timestamps, so identical inputs
//! give byte-identical output.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bridge::{perturb, surface_euler, BridgeSurfaceData, PerturbationMove, ARC_CONVENTION};
use crate::cover::{
    perturbation_stabilization_check_at, pullback_detail, pullback_trisection, split_locus, standard_rho,
    MonodromyRep,
};
use crate::geometry::{
    certify_with, cusp_analysis, isotopy_check, polynomial_cover_check, sector_coverage, subharmonicity_check,
    CertifyOptions, ComplexLine, GraphKind, GraphSurface, PointC2, PolyhedronQM, Scene, TriFunctional,
    DEFAULT_BAND, PLEAT_EPSILON,
};
use crate::par::{sample_rng, Exec};
use crate::reconstruct::{
    make_reducible, reconstruct_z, reducibility_necessary, shilov_glue_eval, ShilovGlue,
};
use crate::schema::{
    parse, BridgeFile, CoverFile, CuspFile, GeometryFile, ParamsFile, PipelineConfig, PshFile, ReconstructFile,
    SCHEMA,
};
use crate::trisection::{
    euler_char_closed, euler_char_relative, heegaard_h1, stabilization_delta, validate_params, Params,
    RelTrisectionParams, TrisectionDiagram,
};
use crate::{Error, Result, Sector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    AssertionFailure,
    CertificationFailure,
    InputError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::AssertionFailure => 1,
            Status::CertificationFailure => 2,
            Status::InputError => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub report: Value,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    /// Pretty-printed report with a trailing newline.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.report).expect("reports serialize");
        s.push('\n');
        s
    }
}

fn envelope(command: &str, status: Status, body: Value) -> Outcome {
    let mut report = json!({
        "schema": SCHEMA,
        "command": command,
        "status": status,
        "exit_code": status.exit_code(),
    });
    if let (Value::Object(r), Value::Object(b)) = (&mut report, body) {
        r.extend(b);
    }
    Outcome { status, report }
}

/// Maps a library error to an exit status: numerical trouble is a
/// certification failure, everything else is bad input.
fn failure(command: &str, e: &Error) -> Outcome {
    let status = match e {
        Error::Numerical(_) => Status::CertificationFailure,
        _ => Status::InputError,
    };
    let mut err = json!({ "message": e.to_string() });
    if let Error::Schema { location, .. } = e {
        err["location"] = json!(location);
    }
    envelope(command, status, json!({ "error": err }))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

/// Options shared by the verify commands.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunOptions {
    /// Overrides the command's primary tolerance.
    pub tol: Option<f64>,
    pub seed: u64,
    pub exec: Exec,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            tol: None,
            seed: 0x7717_5ec7,
            exec: Exec::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerifyKind {
    Params,
    DiagramH1,
    Bridge,
    Cover,
    Geometry,
    Cusp,
    Psh,
    Reconstruct,
}

impl VerifyKind {
    pub const ALL: [VerifyKind; 8] = [
        VerifyKind::Params,
        VerifyKind::DiagramH1,
        VerifyKind::Bridge,
        VerifyKind::Cover,
        VerifyKind::Geometry,
        VerifyKind::Cusp,
        VerifyKind::Psh,
        VerifyKind::Reconstruct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VerifyKind::Params => "params",
            VerifyKind::DiagramH1 => "diagram-h1",
            VerifyKind::Bridge => "bridge",
            VerifyKind::Cover => "cover",
            VerifyKind::Geometry => "geometry",
            VerifyKind::Cusp => "cusp",
            VerifyKind::Psh => "psh",
            VerifyKind::Reconstruct => "reconstruct",
        }
    }

    /// Whether the command can run on built-in defaults without an input file.
    pub fn input_optional(self) -> bool {
        matches!(self, VerifyKind::Cusp | VerifyKind::Psh)
    }
}

impl fmt::Display for VerifyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VerifyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VerifyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown verify subcommand {s:?}")))
    }
}

pub fn verify(kind: VerifyKind, input: Option<&str>, opts: &RunOptions) -> Outcome {
    let command = format!("verify {kind}");
    let run = || -> Result<(Status, Value)> {
        let text = match input {
            Some(t) => t,
            None if kind.input_optional() => "{\"schema\": \"tw/1\"}",
            None => {
                return Err(Error::Schema {
                    location: "input".into(),
                    message: format!("verify {kind} needs an input file"),
                })
            }
        };
        match kind {
            VerifyKind::Params => verify_params(parse(text)?),
            VerifyKind::DiagramH1 => verify_diagram_h1(parse(text)?),
            VerifyKind::Bridge => verify_bridge(parse(text)?),
            VerifyKind::Cover => verify_cover(parse(text)?, opts),
            VerifyKind::Geometry => verify_geometry(parse(text)?, opts),
            VerifyKind::Cusp => verify_cusp(parse(text)?, opts),
            VerifyKind::Psh => verify_psh(parse(text)?, opts),
            VerifyKind::Reconstruct => verify_reconstruct(parse(text)?),
        }
    };
    match run() {
        Ok((status, body)) => envelope(&command, status, body),
        Err(e) => failure(&command, &e),
    }
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::AssertionFailure
    }
}

fn verify_params(f: ParamsFile) -> Result<(Status, Value)> {
    let params = f.params()?;
    let report = validate_params(&params);
    let euler = match &params {
        Params::Closed(p) => euler_char_closed(p).ok(),
        Params::Relative(p) => euler_char_relative(p).ok(),
    };
    let mut body = json!({
        "params": params.to_string(),
        "kind": params.kind(),
        "valid": report.valid,
        "violations": to_value(&report.violations),
        "euler_char": euler,
    });
    let mut ok = report.valid;
    if let Some(d) = f.diagram() {
        let dr = d.validate();
        ok &= dr.valid;
        body["diagram"] = json!({ "valid": dr.valid, "violations": to_value(&dr.violations) });
    }
    Ok((pass_if(ok), body))
}

fn boundary_homology(d: &TrisectionDiagram) -> Result<Vec<Value>> {
    let form = d.form();
    Sector::ALL
        .into_iter()
        .map(|s| {
            let g = heegaard_h1(&form, d.cut_system(s), d.cut_system(s.next()))?;
            Ok(json!({
                "pair": [s.get(), s.next().get()],
                "group": g.to_string(),
                "rank": g.rank,
                "torsion": g.torsion,
            }))
        })
        .collect()
}

fn verify_diagram_h1(f: ParamsFile) -> Result<(Status, Value)> {
    let d = f.diagram().ok_or_else(|| Error::Schema {
        location: "cut_systems".into(),
        message: "diagram-h1 needs cut systems".into(),
    })?;
    let report = d.validate();
    if !report.valid {
        return Ok((
            Status::AssertionFailure,
            json!({ "valid": false, "violations": to_value(&report.violations) }),
        ));
    }
    let h1 = boundary_homology(&d)?;
    let factors: Vec<Value> = h1.iter().map(|h| h["group"].clone()).collect();
    Ok((Status::Pass, json!({ "valid": true, "h1": factors, "splittings": h1 })))
}

fn verify_bridge(f: BridgeFile) -> Result<(Status, Value)> {
    let report = f.bridge_surface.validate();
    let mut body = json!({
        "arc_convention": ARC_CONVENTION,
        "bridge_surface": to_value(&f.bridge_surface),
        "valid": report.valid,
        "violations": to_value(&report.violations),
    });
    if !report.valid {
        return Ok((Status::AssertionFailure, body));
    }
    body["euler_char"] = json!(surface_euler(&f.bridge_surface)?);
    let mut cur = f.bridge_surface;
    let mut steps = Vec::new();
    for s in &f.perturb {
        cur = perturb(&cur, PerturbationMove::new(*s))?;
        steps.push(json!({
            "sector": s.get(),
            "patch_sector": PerturbationMove::new(*s).patch_sector().get(),
            "result": to_value(&cur),
            "euler_char": surface_euler(&cur)?,
        }));
    }
    body["perturbations"] = Value::Array(steps);
    Ok((Status::Pass, body))
}

fn verify_cover(f: CoverFile, opts: &RunOptions) -> Result<(Status, Value)> {
    let rho = MonodromyRep::from_wire(&f.monodromy)?;
    let base: RelTrisectionParams = f.base.map(Into::into).unwrap_or_else(RelTrisectionParams::standard_ball);
    let components = match (&f.bridge_surface, &f.components) {
        (Some(_), Some(_)) => {
            return Err(Error::Schema {
                location: "components".into(),
                message: "give either bridge_surface or components, not both".into(),
            })
        }
        (Some(locus), None) => split_locus(locus)?,
        (None, Some(c)) => c.clone(),
        (None, None) => split_locus(&BridgeSurfaceData::trivial_disks(rho.components() as u32))?,
    };
    let rv = rho.validate();
    if !rv.valid {
        return Ok((
            Status::AssertionFailure,
            json!({ "monodromy": { "valid": false, "violations": to_value(&rv.violations) } }),
        ));
    }
    let detail = pullback_detail(&base, &components, &rho)?;
    let mut checks = Vec::new();
    let mut ok = validate_params(&detail.params.into()).valid;
    for placement in 0..components.len() {
        for s in Sector::ALL {
            let holds = perturbation_stabilization_check_at(&components, &rho, s, placement)?;
            ok &= holds;
            checks.push(json!({ "placement": placement + 1, "sector": s.get(), "holds": holds }));
        }
    }
    let mut body = json!({
        "monodromy": to_value(&rho.to_wire()?),
        "base": base.to_string(),
        "upstairs": to_value(&detail.params),
        "upstairs_display": Params::from(detail.params).to_string(),
        "pullback": to_value(&detail),
        "perturbation_stabilization": checks,
    });
    if rho.components() > 0 {
        let eps = f.model_epsilon.unwrap_or(1.0);
        let model = polynomial_cover_check(rho.components(), eps, 100, opts.seed, opts.exec)?;
        ok &= model.passed;
        body["model_covering"] = to_value(&model);
    }
    Ok((pass_if(ok), body))
}

fn verify_geometry(f: GeometryFile, opts: &RunOptions) -> Result<(Status, Value)> {
    let q = PolyhedronQM::new(f.m)?;
    let copts = CertifyOptions {
        residual_tol: opts.tol.unwrap_or(crate::geometry::DEFAULT_RESIDUAL_TOL),
        grid: f.grid.unwrap_or(crate::geometry::DEFAULT_GRID),
        ..CertifyOptions::default()
    };
    let cert = certify_with(&f.graphs, &q, f.r, &copts, opts.exec)?;
    let mut ok = cert.valid;
    let mut body = json!({ "certificate": to_value(&cert) });
    if let Some(d) = &f.declared {
        let matches = cert.matches(d);
        ok &= matches;
        body["declared"] = to_value(d);
        body["matches_declared"] = json!(matches);
    }
    let samples = f.isotopy_samples.unwrap_or(10_000);
    let mut isotopies = Vec::new();
    for (i, g) in f.graphs.iter().enumerate() {
        if g.kind == GraphKind::Linear && !g.pleated && g.theta == 0.0 {
            if let Ok(r) = isotopy_check(g, &q, samples, 1e-12) {
                ok &= r.ok;
                isotopies.push(json!({ "graph": i + 1, "report": to_value(&r) }));
            }
        }
    }
    body["isotopy"] = Value::Array(isotopies);
    Ok((if ok { Status::Pass } else { Status::CertificationFailure }, body))
}

fn verify_cusp(f: CuspFile, opts: &RunOptions) -> Result<(Status, Value)> {
    let band = f.band.or(opts.tol).unwrap_or(DEFAULT_BAND);
    if !(band > 0.0 && band.is_finite()) {
        return Err(Error::Invalid(format!("band must be positive, got {band}")));
    }
    let r = cusp_analysis(f.samples.unwrap_or(10_000), f.fold_samples.unwrap_or(200), opts.seed, band, opts.exec);
    let unique = |fibers: &[u64; 3]| {
        let seen: Vec<usize> = (0..3).filter(|&i| fibers[i] > 0).map(|i| i + 1).collect();
        if seen.len() == 1 {
            json!(seen[0])
        } else {
            json!(seen)
        }
    };
    let body = json!({
        "region_counts": {
            "interior": unique(&r.interior.fibers),
            "exterior": unique(&r.exterior.fibers),
            "fold": unique(&r.fold.fibers),
            "cusp_point": r.cusp_point_fiber,
        },
        "seed": opts.seed,
        "report": to_value(&r),
    });
    Ok((pass_if(r.passed), body))
}

/// Random complex line through a point of `Q_M`'s neighbourhood together
/// with a circle radius keeping the circle inside one open sector.
pub fn sample_circle(rng: &mut impl Rng, q: &PolyhedronQM, band: f64) -> (ComplexLine, f64) {
    let r = q.real_bound();
    let m = q.m();
    loop {
        let base = PointC2::new(
            rng.gen_range(-2.0 * r..=2.0 * r),
            rng.gen_range(-1.2 * m..=1.2 * m),
            rng.gen_range(-2.0 * r..=2.0 * r),
            rng.gen_range(-1.2 * m..=1.2 * m),
        );
        let dir = [
            Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)),
            Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)),
        ];
        let norm = (dir[0].norm_sqr() + dir[1].norm_sqr()).sqrt();
        let clearance = Sector::ALL
            .into_iter()
            .map(|s| {
                let (a, b) = TriFunctional(s).coefficients();
                TriFunctional(s).eval(&base).abs() / a.hypot(b)
            })
            .fold(f64::INFINITY, f64::min);
        if norm > 1e-3 && clearance > 10.0 * band {
            let radius = 0.5 * (clearance - 2.0 * band) / norm;
            return (ComplexLine { base, direction: dir }, radius);
        }
    }
}

fn verify_psh(f: PshFile, opts: &RunOptions) -> Result<(Status, Value)> {
    let m = f.m.unwrap_or(100.0);
    let q = PolyhedronQM::new(m)?;
    let band = f.band.unwrap_or(DEFAULT_BAND);
    let tol = opts.tol.unwrap_or(1e-9);
    let circles = f.circles.unwrap_or(1000);
    let m_samples = f.m_samples.unwrap_or(64);
    let glue = match &f.fields {
        Some(fields) => ShilovGlue {
            m,
            band,
            fields: fields.clone(),
        },
        None => ShilovGlue::weighted(m, band, f.weights.unwrap_or([1.0; 3])),
    };
    glue.validate()?;

    let results = opts.exec.map(circles, |i| -> Result<(f64, f64, bool)> {
        let mut rng = sample_rng(opts.seed, i as u64);
        let (line, radius) = sample_circle(&mut rng, &q, band);
        let center = Complex64::new(0.0, 0.0);
        let mut harmonic_defect: f64 = 0.0;
        for s in Sector::ALL {
            let r = subharmonicity_check(|p| TriFunctional(s).eval(p), &line, center, radius, m_samples, tol)?;
            harmonic_defect = harmonic_defect.max(r.excess.abs());
        }
        let eval = |p: &PointC2| shilov_glue_eval(&glue, p).unwrap_or(f64::NAN);
        let g = subharmonicity_check(eval, &line, center, radius, m_samples, tol)?;
        if !g.average.is_finite() {
            return Err(Error::Invalid("glue function undefined on a sampled circle".into()));
        }
        Ok((harmonic_defect, g.excess, g.passed))
    });
    let results = results.into_iter().collect::<Result<Vec<_>>>()?;
    let harmonic_defect = results.iter().map(|r| r.0).fold(0.0, f64::max);
    let glue_failures = results.iter().filter(|r| !r.2).count();
    let min_excess = results.iter().map(|r| r.1).fold(f64::INFINITY, f64::min);

    let usc_failures = upper_semicontinuity_failures(&glue, &q, 200, opts.seed, tol)?;
    let coverage = sector_coverage(&q, f.coverage_samples.unwrap_or(1_000_000), opts.seed, band, opts.exec);
    let ok = harmonic_defect <= 1e-8 && glue_failures == 0 && usc_failures == 0 && coverage.passed();
    let body = json!({
        "M": m,
        "band": band,
        "tol": tol,
        "circles": circles,
        "m_samples": m_samples,
        "seed": opts.seed,
        "pluriharmonic_max_defect": harmonic_defect,
        "pluriharmonic_tol": 1e-8,
        "glue_failures": glue_failures,
        "glue_min_excess": if min_excess.is_finite() { json!(min_excess) } else { Value::Null },
        "usc_failures": usc_failures,
        "sector_coverage": to_value(&coverage),
    });
    Ok((pass_if(ok), body))
}

/// Approaches random points of the spine from each adjacent open sector and
/// counts approaches whose limit exceeds the value at the limit point. The
/// limit is estimated from the last steps of a geometric sequence.
pub fn upper_semicontinuity_failures(glue: &ShilovGlue, q: &PolyhedronQM, trials: usize, seed: u64, tol: f64) -> Result<usize> {
    const STEPS: i32 = 12;
    const TAIL: i32 = 3;
    let mut rng = sample_rng(seed, u64::MAX);
    let r = q.real_bound();
    let m = q.m();
    let mut failures = 0;
    for i in 0..trials {
        // Limit point on Σ (every third trial) or on a handlebody ray.
        let (y1, y2) = (rng.gen_range(-1.2 * m..=1.2 * m), rng.gen_range(-1.2 * m..=1.2 * m));
        let limit = if i % 3 == 0 {
            PointC2::new(0.0, y1, 0.0, y2)
        } else {
            let a = 2.0 * std::f64::consts::PI * (i % 3) as f64 / 3.0;
            let t = rng.gen_range(0.0..2.0 * r);
            PointC2::new(t * a.cos(), y1, t * a.sin(), y2)
        };
        let at_limit = shilov_glue_eval(glue, &limit)?;
        for s in Sector::ALL {
            let mid = (300.0 + 120.0 * s.idx() as f64).to_radians();
            let mut tail = f64::NEG_INFINITY;
            let mut approached = false;
            for k in STEPS - TAIL + 1..=STEPS {
                let h = r * 10f64.powi(-k);
                let p = PointC2::new(limit.x1 + h * mid.cos(), limit.y1, limit.x2 + h * mid.sin(), limit.y2);
                if crate::geometry::in_open_sector(s, p.x1, p.x2) {
                    approached = true;
                    tail = tail.max(shilov_glue_eval(glue, &p)?);
                }
            }
            if approached && tail > at_limit + tol {
                failures += 1;
            }
        }
    }
    Ok(failures)
}

fn verify_reconstruct(f: ReconstructFile) -> Result<(Status, Value)> {
    let r = make_reducible(&f.summands[0], &f.summands[1])?;
    let base: RelTrisectionParams = f.base.into();
    let z = TrisectionDiagram::from(&f.z_spine);
    let b = TrisectionDiagram::from(&f.b_spine);
    let result = reconstruct_z(&r, &f.splitting, &base, &z, &b)?;
    let complement = reconstruct_z(&r, &f.splitting.complement(), &base, &z, &b).ok();
    let mut body = json!({
        "reducible": to_value(&r),
        "splitting": to_value(&f.splitting),
        "result": to_value(&result),
        "complement_ranks": complement.map(|c| c.z_sector_ranks),
    });
    let mut ok = true;
    if let Some(d) = &f.diagram {
        let delta = f.delta.clone().unwrap_or_else(|| vec![0; 2 * d.genus as usize]);
        let holds = reducibility_necessary(&TrisectionDiagram::from(d), &delta)?;
        ok &= holds;
        body["reducibility"] = json!({ "delta": delta, "necessary_condition": holds });
    }
    Ok((pass_if(ok), body))
}

/// Disks of the branch locus for `(n₁, n₂, n₃)`: `n_λ` disks whose single
/// perturbation adds a patch to sector `λ`, listed sector by sector.
pub fn stein_b4_targets(n: [u32; 3]) -> Vec<Sector> {
    Sector::ALL
        .into_iter()
        .flat_map(|s| std::iter::repeat_n(s, n[s.idx()] as usize))
        .collect()
}

/// Builds the pleated branch locus, certifies it, pulls back the standard
/// trisection and checks the upstairs trisection is the expected
/// stabilization of the standard trisection of `B⁴`.
pub fn stein_b4(cfg: &PipelineConfig, exec: Exec) -> Outcome {
    const COMMAND: &str = "stein-b4";
    if let Err(e) = cfg.validate() {
        return failure(COMMAND, &e);
    }
    let run = || -> Result<(Status, Value)> {
        let q = PolyhedronQM::new(cfg.m)?;
        let targets = stein_b4_targets(cfg.stabilizations);
        let graphs: Vec<GraphSurface> = targets
            .iter()
            .zip(1u32..)
            .map(|(t, k)| GraphSurface::pleat_member(k, cfg.r, *t, PLEAT_EPSILON, cfg.epsilon_prime))
            .collect();
        let scene = Scene { m: cfg.m, r: cfg.r, graphs };
        let components: Vec<BridgeSurfaceData> = targets
            .iter()
            .map(|t| perturb(&BridgeSurfaceData::trivial_disks(1), PerturbationMove::new(t.prev())))
            .collect::<Result<_>>()?;
        let n = components.len() as u32;
        let mut declared = BridgeSurfaceData::trivial_disks(n);
        for t in &targets {
            declared = perturb(&declared, PerturbationMove::new(t.prev()))?;
        }
        let opts = CertifyOptions {
            residual_tol: cfg.tol,
            grid: cfg.grid,
            ..CertifyOptions::default()
        };
        let cert = certify_with(&scene.graphs, &q, cfg.r, &opts, exec)?;
        let per_disk_ok = cert
            .per_graph
            .iter()
            .zip(&components)
            .all(|(c, d)| c.points == d.bridge_points && c.arcs == d.arcs && c.patches == d.patches);
        let certified = cert.valid && cert.matches(&declared) && per_disk_ok;
        let mut body = json!({
            "config": to_value(cfg),
            "scene": to_value(&scene),
            "declared_locus": to_value(&declared),
            "certificate": to_value(&cert),
            "certified": certified,
        });
        if !certified {
            return Ok((Status::CertificationFailure, body));
        }
        let rho = if n == 0 { MonodromyRep::unbranched(1) } else { standard_rho(n as usize)? };
        let base = RelTrisectionParams::standard_ball();
        let detail = pullback_detail(&base, &components, &rho)?;
        let aggregate = pullback_trisection(&base, &declared, &rho)?;
        let delta = stabilization_delta(&detail.params.into(), &base.into())?;
        let expected = RelTrisectionParams::new(
            cfg.stabilizations.iter().sum(),
            cfg.stabilizations,
            0,
            1,
        );
        let ok = detail.params == expected && aggregate == expected && delta == Some(cfg.stabilizations);
        body["monodromy"] = to_value(&rho.to_wire()?);
        body["pullback"] = to_value(&detail);
        body["upstairs"] = to_value(&detail.params);
        body["upstairs_display"] = json!(Params::from(detail.params).to_string());
        body["expected"] = to_value(&expected);
        body["stabilization_delta"] = to_value(&delta);
        Ok((pass_if(ok), body))
    };
    match run() {
        Ok((status, body)) => envelope(COMMAND, status, body),
        Err(e) => failure(COMMAND, &e),
    }
}
