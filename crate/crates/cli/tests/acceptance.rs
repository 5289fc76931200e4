//! Acceptance criteria 1 to 10, each an exact integer check. Prints one
//! PASS/FAIL line per criterion and exits nonzero if any fails.

use std::process::ExitCode;

use quiver_ext::fixtures;
use quiver_ext::homext::{direct_sum, z_space};
use quiver_ext::quiver::a_of_d;
use quiver_ext::variety::orbit_dim;
use quiver_ext::Field;
use quiver_ext_cli::suites::{run_suite, SuiteOptions, SuiteResult, DEFAULT_SEED};
use quiver_ext_cli::{json_report, load_workspace, run_task, RunOptions, Task};

type Check = Result<(), String>;

fn suite(name: &str, field: Field) -> Result<SuiteResult, String> {
    run_suite(name, SuiteOptions { field, seed: DEFAULT_SEED }).map_err(|e| e.to_string())
}

fn passes(name: &str) -> Check {
    let r = suite(name, Field::Rational)?;
    if r.passed() {
        Ok(())
    } else {
        let f = &r.failures[0];
        Err(format!("{} of {} cases failed, first {}: {}", r.failures.len(), r.cases, f.case, f.detail))
    }
}

fn observed(r: &SuiteResult, key: &str) -> Result<i64, String> {
    r.observations.get(key).copied().ok_or_else(|| format!("missing observation {key}"))
}

fn expect(what: &str, got: i64, want: i64) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn zdim() -> Check {
    passes("zdim")
}

fn euler() -> Check {
    passes("euler")
}

fn ext2_agreement() -> Check {
    passes("ext2-agree")?;
    let r = suite("ext2-agree", Field::Rational)?;
    expect("[S3,S1]² on F2", observed(&r, "F2:S3,S1")?, 1)?;
    expect("[P3,S1]² on F2", observed(&r, "F2:P3,S1")?, 0)?;
    expect("[S4,S1]² on F3", observed(&r, "F3:S4,S1")?, 1)
}

fn yoneda() -> Check {
    passes("yoneda")?;
    let r = suite("yoneda", Field::Rational)?;
    expect("Ext²(S3,S1) dimension", observed(&r, "generators:target-dim")?, 1)?;
    expect("class of Z′∘Z″ nonzero", observed(&r, "generators:nonzero")?, 1)
}

fn tangent_accounting() -> Check {
    passes("tangent-blocks")?;
    let ws = fixtures::f2(Field::Rational);
    let n = direct_sum(
        &direct_sum(ws.module("S1").unwrap(), ws.module("S2").unwrap()),
        ws.module("P3").unwrap(),
    );
    let m = direct_sum(ws.module("P2").unwrap(), ws.module("P3").unwrap());
    let a = a_of_d(ws.algebra.bound(), &[1, 2, 1]);
    expect("a(1,2,1)", a, 3)?;
    expect("dim ℤ^{N,N}", z_space(&n, &n).dim() as i64, a)?;
    expect("dim ℤ^{M,M}", z_space(&m, &m).dim() as i64, a)?;
    expect("orbit_dim(M)", orbit_dim(&m).orbit_dim as i64, a)?;
    expect("orbit_dim(N)", orbit_dim(&n).orbit_dim as i64, 2)
}

fn psi_kernel() -> Check {
    passes("psi")?;
    let r = suite("psi", Field::Rational)?;
    expect("dim Ker Ψ on the F2 sequence", observed(&r, "F2:SES1:kernel")?, 2)?;
    expect("[V,U]² on the F3 sequence", observed(&r, "F3:SES3:ext2-vu")?, 0)
}

fn scheme_tangent() -> Check {
    passes("schemeext")
}

fn scaling() -> Check {
    passes("scaling")?;
    let r = suite("scaling", Field::Rational)?;
    expect("F2 witness found", observed(&r, "witness:SES1")?, 1)?;
    expect("decoy witness found", observed(&r, "witness:DECOY")?, 0)
}

fn determinism() -> Check {
    passes("parser")?;
    let ws = load_workspace("f2_degeneration", None, None).map_err(|e| e.to_string())?;
    let opts = RunOptions { seed: DEFAULT_SEED };
    let tasks = [
        Task::Certify { ses: "SES1".into() },
        Task::Witness { m: "M".into(), u: "S1".into(), v: "S2_P3".into() },
        Task::Verify { suite: "all".into() },
    ];
    for task in &tasks {
        let a = run_task(task, &ws, opts).map_err(|e| e.to_string())?;
        let b = run_task(task, &ws, opts).map_err(|e| e.to_string())?;
        if json_report(&ws, &a) != json_report(&ws, &b) {
            return Err(format!("reports for {task:?} differ between runs"));
        }
    }
    Ok(())
}

fn field_robustness() -> Check {
    let f101 = Field::prime(101).map_err(|e| e.to_string())?;
    for name in ["zdim", "euler", "ext2-agree", "yoneda", "tangent-blocks", "psi", "schemeext"] {
        let q = suite(name, Field::Rational)?;
        let p = suite(name, f101)?;
        if !p.passed() {
            return Err(format!("{name} fails over F101"));
        }
        if q.observations != p.observations {
            let key = q
                .observations
                .iter()
                .find(|(k, v)| p.observations.get(*k) != Some(v))
                .map(|(k, _)| k.clone())
                .unwrap_or_default();
            return Err(format!("{name}: results differ between Q and F101 at {key}"));
        }
        if q.observations.is_empty() {
            return Err(format!("{name}: nothing observed"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("Z-dimension formula", zdim),
        ("Euler identity", euler),
        ("Ext2 model agreement", ext2_agreement),
        ("Yoneda composition", yoneda),
        ("tangent accounting at the F2 degeneration", tangent_accounting),
        ("Psi kernel dimension", psi_kernel),
        ("scheme-tangent oracle equivalence", scheme_tangent),
        ("scaling degeneration and witness search", scaling),
        ("parser and report determinism", determinism),
        ("field robustness, Q vs F101", field_robustness),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:>2} PASS  {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
