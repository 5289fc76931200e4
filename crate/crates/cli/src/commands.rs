//! One function per CLI task; each returns a report entry and a status.

use quiver_ext::dsl::Workspace;
use quiver_ext::ext2::{ext2_small_model, ext2_via_omega, gldim_le2_check, require_small_model};
use quiver_ext::homext::{ext1, hom_basis, z_space};
use quiver_ext::quiver::{a_of_d, admissibility_check, chi, euler_form, gl_dim, is_acyclic, minimality_check};
use quiver_ext::report::{matrices_json, TaskReport};
use quiver_ext::variety::{
    degeneration_witness_search, ext_tangent_pairs, hom_tangent_pairs, orbit_dim, psi_map, regularity_certificate,
    tangent_module_variety, RegularityReport,
};
use quiver_ext::{Error, Representation, Result};
use serde_json::{json, Value};

use crate::suites::{run_all, run_suite, SuiteOptions, SuiteResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Task {
    Check,
    Hom { m: String, n: String },
    Ext1 { v: String, u: String },
    Ext2 { n: String, m: String },
    Euler { d1: String, d2: String },
    Orbit { m: String },
    Tangent { n: String },
    ETangent { u: String, v: String },
    Psi { ses: String },
    Witness { m: String, u: String, v: String },
    Certify { ses: String },
    Verify { suite: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A search or suite produced a negative answer.
    Failed,
    /// Hypotheses of the requested certificate do not hold.
    Gate,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Gate => 2,
        }
    }

    fn worst(self, other: Status) -> Status {
        if self.exit_code() >= other.exit_code() {
            self
        } else {
            other
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub reports: Vec<TaskReport>,
    pub status: Status,
    /// Suite results for `verify`, kept for text output.
    pub suites: Vec<SuiteResult>,
}

impl Outcome {
    fn single(report: TaskReport, status: Status) -> Outcome {
        Outcome {
            reports: vec![report],
            status,
            suites: Vec::new(),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub seed: u64,
}

pub fn run_task(task: &Task, ws: &Workspace, opts: RunOptions) -> Result<Outcome> {
    match task {
        Task::Check => check(ws),
        Task::Hom { m, n } => hom(ws, m, n),
        Task::Ext1 { v, u } => ext1_task(ws, v, u),
        Task::Ext2 { n, m } => ext2_task(ws, n, m),
        Task::Euler { d1, d2 } => euler(ws, d1, d2),
        Task::Orbit { m } => orbit(ws, m),
        Task::Tangent { n } => tangent(ws, n),
        Task::ETangent { u, v } => e_tangent(ws, u, v),
        Task::Psi { ses } => psi(ws, ses, opts),
        Task::Witness { m, u, v } => witness(ws, m, u, v, opts),
        Task::Certify { ses } => certify(ws, ses, opts),
        Task::Verify { suite } => verify(ws, suite, opts),
    }
}

fn check(ws: &Workspace) -> Result<Outcome> {
    let bound = ws.algebra.bound();
    let basis = ws.algebra.basis();
    let level = admissibility_check(bound, ws.algebra.truncation_cap());
    let minimal = minimality_check(bound, ws.algebra.truncation_cap())?;
    let acyclic = is_acyclic(ws.algebra.quiver());
    let gldim = acyclic && gldim_le2_check(&ws.algebra);
    let modules: Vec<Value> = ws
        .modules()
        .iter()
        .map(|(name, m)| json!({"name": name, "dim": m.dims()}))
        .collect();
    let mut report = TaskReport::new(
        "check",
        json!({}),
        json!({
            "admissibility_level": level,
            "algebra_dim": basis.dim(),
            "acyclic": acyclic,
            "gldim_le2": gldim,
            "small_model": acyclic && gldim,
            "relations": minimal.iter().map(|(n, ok)| json!({"name": n, "minimal": ok})).collect::<Vec<_>>(),
            "modules": modules,
            "sequences": ws.sequences.iter().map(|s| json!({"name": s.name, "u": s.u, "m": s.m, "v": s.v})).collect::<Vec<_>>(),
        }),
    );
    if !basis.is_exact() {
        report = report.with_warning("inhomogeneous relations on a cyclic quiver: the basis is exact only modulo paths longer than the truncation level");
    }
    for (name, ok) in &minimal {
        if !ok {
            report = report.with_warning(format!("relation {name} lies in the ideal of the others; the Euler form overcounts it"));
        }
    }
    Ok(Outcome::single(report, Status::Ok))
}

fn hom(ws: &Workspace, m: &str, n: &str) -> Result<Outcome> {
    let (mm, nn) = (ws.module(m)?, ws.module(n)?);
    let basis = hom_basis(mm, nn);
    let report = TaskReport::new("hom", json!({"M": m, "N": n}), json!(basis.len())).with_certificate(json!({
        "basis": basis.iter().map(|h| matrices_json(&h.0)).collect::<Vec<_>>(),
    }));
    Ok(Outcome::single(report, Status::Ok))
}

fn ext1_task(ws: &Workspace, v: &str, u: &str) -> Result<Outcome> {
    let (vv, uu) = (ws.module(v)?, ws.module(u)?);
    let e = ext1(vv, uu);
    let report = TaskReport::new("ext1", json!({"V": v, "U": u}), json!(e.dim())).with_certificate(json!({
        "z_dim": e.z().dim(),
        "b_dim": e.b().dim(),
        "class_representatives": e.class_basis().iter().map(|z| matrices_json(&z.0)).collect::<Vec<_>>(),
    }));
    Ok(Outcome::single(report, Status::Ok))
}

fn ext2_task(ws: &Workspace, n: &str, m: &str) -> Result<Outcome> {
    let (nn, mm) = (ws.module(n)?, ws.module(m)?);
    let omega = ext2_via_omega(nn, mm)?;
    let small = match ext2_small_model(nn, mm) {
        Ok(model) => Some(model.dim()),
        Err(Error::HypothesesNotSatisfied(_)) => None,
        Err(e) => return Err(e),
    };
    let mut report = TaskReport::new("ext2", json!({"N": n, "M": m}), json!(omega.dim())).with_certificate(json!({
        "omega_model": omega.dim(),
        "small_model": small,
        "syzygy_dim": omega.presentation.omega.dims(),
    }));
    let mut status = Status::Ok;
    match small {
        None => report = report.with_warning("small model unavailable: quiver is cyclic or gldim > 2"),
        Some(d) if d != omega.dim() => {
            report = report.with_warning("models disagree");
            status = Status::Failed;
        }
        Some(_) => {}
    }
    Ok(Outcome::single(report, status))
}

/// A dimension vector `1,2,1` or the name of a module.
fn dims_arg(ws: &Workspace, arg: &str) -> Result<Vec<usize>> {
    if let Ok(m) = ws.module(arg) {
        return Ok(m.dims().to_vec());
    }
    let parts: Result<Vec<usize>> = arg
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Semantic(format!("expected a module name or a dimension vector like 1,2,1, got {arg}")))
        })
        .collect();
    let d = parts?;
    let n = ws.algebra.vertex_count();
    if d.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "dimension vector {arg} has {} entries, the quiver has {n} vertices",
            d.len()
        )));
    }
    Ok(d)
}

fn euler(ws: &Workspace, d1: &str, d2: &str) -> Result<Outcome> {
    let (a, b) = (dims_arg(ws, d1)?, dims_arg(ws, d2)?);
    let bound = ws.algebra.bound();
    let mut report = TaskReport::new(
        "euler",
        json!({"d1": a, "d2": b}),
        json!(euler_form(bound, &a, &b)),
    )
    .with_certificate(json!({
        "chi_d1": chi(bound, &a),
        "chi_d2": chi(bound, &b),
        "a_d1": a_of_d(bound, &a),
        "a_d2": a_of_d(bound, &b),
    }));
    let minimal = minimality_check(bound, ws.algebra.truncation_cap())?;
    if minimal.iter().any(|(_, ok)| !ok) {
        report = report.with_warning("relation set is not minimal; the form counts redundant relations");
    }
    if require_small_model(&ws.algebra).is_err() {
        report = report.with_warning("algebra is not acyclic with gldim <= 2; the form need not equal the alternating Ext sum");
    }
    Ok(Outcome::single(report, Status::Ok))
}

fn orbit(ws: &Workspace, m: &str) -> Result<Outcome> {
    let mm = ws.module(m)?;
    let o = orbit_dim(mm);
    let report = TaskReport::new("orbit", json!({"M": m}), json!(o.orbit_dim)).with_certificate(json!({
        "group_dim": o.group_dim,
        "end_dim": o.end_dim,
    }));
    Ok(Outcome::single(report, Status::Ok))
}

fn tangent(ws: &Workspace, n: &str) -> Result<Outcome> {
    let nn = ws.module(n)?;
    let t = tangent_module_variety(nn);
    let report = TaskReport::new("tangent", json!({"N": n}), json!(t.dim())).with_certificate(json!({
        "a_d": a_of_d(ws.algebra.bound(), nn.dims()),
        "gl_dim": gl_dim(nn.dims()),
        "orbit_dim": orbit_dim(nn).orbit_dim,
    }));
    Ok(Outcome::single(report, Status::Ok))
}

fn gate_or<T>(r: Result<T>, task: &str, inputs: Value) -> std::result::Result<T, Outcome> {
    match r {
        Ok(v) => Ok(v),
        Err(Error::HypothesesNotSatisfied(msg)) => Err(Outcome::single(
            TaskReport::new(task, inputs, Value::Null).with_warning(msg),
            Status::Gate,
        )),
        Err(e) => Err(Outcome::single(
            TaskReport::new(task, inputs, Value::Null).with_warning(e.to_string()),
            Status::Gate,
        )),
    }
}

fn e_tangent(ws: &Workspace, u: &str, v: &str) -> Result<Outcome> {
    let (uu, vv) = (ws.module(u)?, ws.module(v)?);
    let inputs = json!({"U": u, "V": v});
    let ext = match gate_or(ext_tangent_pairs(uu, vv), "e-tangent", inputs.clone()) {
        Ok(e) => e,
        Err(o) => return Ok(o),
    };
    let hom = hom_tangent_pairs(uu, vv);
    let report = TaskReport::new("e-tangent", inputs, json!(ext.dim())).with_certificate(json!({
        "hom_pairs": hom.dim(),
        "domain": ext.domain_dim(),
        "z_uu": ext.zuu.dim(),
        "z_vv": ext.zvv.dim(),
    }));
    Ok(Outcome::single(report, Status::Ok))
}

type Ses = (Representation, Representation, Representation);

fn ses_modules(ws: &Workspace, ses: &str) -> Result<(Ses, Value)> {
    let d = ws.ses(ses)?;
    let mods = (ws.module(&d.u)?.clone(), ws.module(&d.m)?.clone(), ws.module(&d.v)?.clone());
    Ok((mods, json!({"ses": ses, "U": d.u, "M": d.m, "V": d.v})))
}

fn psi(ws: &Workspace, ses: &str, opts: RunOptions) -> Result<Outcome> {
    let ((u, m, v), inputs) = ses_modules(ws, ses)?;
    let search = degeneration_witness_search(&m, &u, &v, opts.seed)?;
    let Some(w) = search.witness else {
        let report = TaskReport::new("psi", inputs, Value::Null).with_warning("no cocycle with middle term isomorphic to M was found");
        return Ok(Outcome::single(report, Status::Failed));
    };
    let r = match gate_or(psi_map(&w.z, &u, &v), "psi", inputs.clone()) {
        Ok(r) => r,
        Err(o) => return Ok(o),
    };
    let ext2 = ext2_via_omega(&v, &u)?.dim();
    let zuu = z_space(&u, &u).dim();
    let zvv = z_space(&v, &v).dim();
    let report = TaskReport::new("psi", inputs, json!({"kernel_dim": r.kernel_dim(), "surjective": r.surjective()}))
        .with_certificate(json!({
            "rank": r.rank,
            "domain_dim": r.domain_dim,
            "target_dim": r.target_dim,
            "z_uu": zuu,
            "z_vv": zvv,
            "ext2_vu": ext2,
            "cocycle": matrices_json(&w.z.0),
        }));
    let status = if !r.surjective() || r.kernel_dim() + ext2 == zuu + zvv {
        Status::Ok
    } else {
        Status::Failed
    };
    Ok(Outcome::single(report, status))
}

fn witness(ws: &Workspace, m: &str, u: &str, v: &str, opts: RunOptions) -> Result<Outcome> {
    let (mm, uu, vv) = (ws.module(m)?, ws.module(u)?, ws.module(v)?);
    let search = degeneration_witness_search(mm, uu, vv, opts.seed)?;
    let inputs = json!({"M": m, "U": u, "V": v, "seed": opts.seed});
    let (result, status) = match &search.witness {
        Some(_) => (json!("found"), Status::Ok),
        None if search.exhaustive => (json!("none"), Status::Failed),
        None => (json!("not-found"), Status::Failed),
    };
    let mut cert = json!({
        "candidates_tried": search.candidates_tried,
        "exhaustive": search.exhaustive,
    });
    if let Some(w) = &search.witness {
        cert["cocycle"] = matrices_json(&w.z.0);
        cert["middle_term"] = matrices_json(w.middle.w.maps());
        cert["isomorphism"] = matrices_json(&w.iso.0);
    }
    Ok(Outcome::single(
        TaskReport::new("witness", inputs, result).with_certificate(cert),
        status,
    ))
}

fn regularity_json(r: &RegularityReport) -> Value {
    json!({
        "a_d": r.a_d,
        "a_d1": r.a_d1,
        "a_d2": r.a_d2,
        "bound": r.bound,
        "ext_tangent_dim": r.ext_tangent_dim,
        "z_uv": r.z_uv,
        "z_vu": r.z_vu,
        "z_nn": r.z_nn,
        "orbit_dim_n": r.orbit_dim_n,
        "vu": {"hom": r.vu_hom, "ext1": r.vu_ext1, "ext2": r.vu_ext2},
        "uv": {"hom": r.uv_hom, "ext1": r.uv_ext1, "ext2": r.uv_ext2},
        "flags": {
            "mm_ext1_zero": r.flags.mm_ext1_zero,
            "mm_ext2_zero": r.flags.mm_ext2_zero,
            "vu_hom_zero": r.flags.vu_hom_zero,
            "uv_ext1_zero": r.flags.uv_ext1_zero,
            "uv_ext2_zero": r.flags.uv_ext2_zero,
            "pd_m_le1": r.flags.pd_m_le1,
            "small_model": r.flags.small_model,
        },
    })
}

fn certify(ws: &Workspace, ses: &str, opts: RunOptions) -> Result<Outcome> {
    let ((u, m, v), mut inputs) = ses_modules(ws, ses)?;
    inputs["seed"] = json!(opts.seed);
    let search = degeneration_witness_search(&m, &u, &v, opts.seed)?;
    let Some(w) = search.witness else {
        let report = TaskReport::new("certify", inputs, Value::Null).with_warning("no witness for the declared sequence");
        return Ok(Outcome::single(report, Status::Failed));
    };
    let r = regularity_certificate(&m, &u, &v, &w)?;
    let mut cert = regularity_json(&r);
    cert["cocycle"] = matrices_json(&w.z.0);
    cert["isomorphism"] = matrices_json(&w.iso.0);
    let verdict = r.verdict.map(|v| v.as_str());
    let mut report = TaskReport::new("certify", inputs, json!({"verdict": verdict, "bound": r.bound, "a_d": r.a_d}))
        .with_certificate(cert);
    let status = if r.verdict.is_some() {
        Status::Ok
    } else {
        report = report.with_warning("hypotheses not satisfied; no verdict");
        Status::Gate
    };
    Ok(Outcome::single(report, status))
}

fn verify(ws: &Workspace, suite: &str, opts: RunOptions) -> Result<Outcome> {
    let sopts = SuiteOptions {
        field: ws.field(),
        seed: opts.seed,
    };
    let results = if suite == "all" {
        run_all(sopts)
    } else {
        vec![run_suite(suite, sopts)?]
    };
    let mut status = Status::Ok;
    let reports = results
        .iter()
        .map(|r| {
            if !r.passed() {
                status = status.worst(Status::Failed);
            }
            TaskReport::new(
                "verify",
                json!({"suite": r.name, "seed": opts.seed}),
                json!({"cases": r.cases, "failures": r.failures.len(), "passed": r.passed()}),
            )
            .with_certificate(r.to_json())
        })
        .collect();
    Ok(Outcome {
        reports,
        status,
        suites: results,
    })
}
