//! `hl`: compute Hall-Littlewood polynomials and partition functions, and
//! run the verification checks.
//!
//! Exit status: 0 when every check passes, 1 on a verification failure,
//! 2 on a configuration error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use hlboson::algebra::{LaurentPoly, Rational, Var};
use hlboson::fbasis;
use hlboson::hl_an::{hl_p, hl_q_branching, Route};
use hlboson::hl_bcn::{k_branching, k_hyperoctahedral, l_from_k};
use hlboson::identities::{self, HarnessError};
use hlboson::partitions::Partition;
use hlboson::sixv::{closed_form, property_report, renormalized_pf, ClosedKind, Kind, PfError};
use hlboson::tboson::even_state::states_up_to;
use hlboson::tboson::{check_even_state_exchange, check_structural, hl_q_lattice, k_lattice, l_lattice, BoundaryParams, Relation};
use serde_json::json;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "hl", version, about = "Hall-Littlewood polynomials from t-boson lattices")]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
    /// Worker threads; `HL_WORKERS` takes precedence.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// P_λ(x_1..x_n; t)
    P(PolyArgs),
    /// Q_λ(x_1..x_n; t)
    Q(PolyArgs),
    /// K_λ(x^{±1}; t; γ, δ)
    K(BcArgs),
    /// L_λ(x^{±1}; t; γ, δ)
    L(BcArgs),
    /// Renormalized six-vertex partition function, or a closed form
    Pf(PfArgs),
    /// Property list of a renormalized partition function
    PfProps(PfPropsArgs),
    /// F matrix identities and twisted columns
    FbasisCheck(SizeArg),
    /// Structural lattice relations and the even-state lemma
    LatticeCheck(LatticeArgs),
    /// Graded check of one of the identities 1-5
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Bindings {
    /// `formal` or an exact rational such as `1/2`
    #[arg(long, default_value = "formal")]
    t: String,
    #[arg(long, default_value = "formal")]
    u: String,
    #[arg(long, default_value = "formal")]
    z: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum PRoute {
    Branching,
    Sum,
    Lattice,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "branching")]
    route: PRoute,
    #[command(flatten)]
    bind: Bindings,
}

#[derive(Args)]
struct BcArgs {
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    n: usize,
    /// `branching` needs γ = δ = 0
    #[arg(long, value_enum, default_value = "sum")]
    route: PRoute,
    #[arg(long, default_value = "0")]
    gamma: String,
    #[arg(long, default_value = "0")]
    delta: String,
    #[command(flatten)]
    bind: Bindings,
}

#[derive(Args)]
struct PfArgs {
    #[arg(long)]
    kind: String,
    #[arg(long)]
    n: usize,
    /// Print the closed form of this name instead (DW, OS, U, UU_half, UO_half, UU_t0, UO_t0)
    #[arg(long)]
    closed: Option<String>,
    #[command(flatten)]
    bind: Bindings,
}

#[derive(Args)]
struct PfPropsArgs {
    #[arg(long)]
    kind: String,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct SizeArg {
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct LatticeArgs {
    /// Check only this relation
    #[arg(long)]
    relation: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    identity: u8,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    order: u32,
}

/// Failure classes mapped onto exit codes.
enum Fail {
    Config(String),
    Verify(String),
}

fn config(e: impl std::fmt::Display) -> Fail {
    Fail::Config(e.to_string())
}

fn pf_fail(e: PfError) -> Fail {
    match e {
        PfError::PropertyViolated { .. } | PfError::NotPolynomial(_) | PfError::Algebra(_) => Fail::Verify(e.to_string()),
        _ => Fail::Config(e.to_string()),
    }
}

fn harness_fail(e: HarnessError) -> Fail {
    match e {
        HarnessError::UnknownIdentity(_) | HarnessError::BadSize { .. } | HarnessError::BadOrder { .. } | HarnessError::BadWorkers(_) | HarnessError::Pool(_) => {
            Fail::Config(e.to_string())
        }
        HarnessError::Pf(p) => pf_fail(p),
        _ => Fail::Verify(e.to_string()),
    }
}

fn binding(name: &str, s: &str) -> Result<Option<LaurentPoly>, Fail> {
    if s == "formal" {
        return Ok(None);
    }
    Rational::from_str(s.trim())
        .map(|r| Some(LaurentPoly::constant(r)))
        .map_err(|_| Fail::Config(format!("--{name} must be `formal` or an exact rational, got `{s}`")))
}

fn boundary(name: &str, s: &str) -> Result<LaurentPoly, Fail> {
    let v = if name == "gamma" { Var::G } else { Var::D };
    Ok(binding(name, s)?.unwrap_or_else(|| LaurentPoly::var(v)))
}

fn apply(p: LaurentPoly, b: &Bindings) -> Result<LaurentPoly, Fail> {
    let mut out = p;
    for (v, name, s) in [(Var::T, "t", &b.t), (Var::U, "u", &b.u), (Var::Z, "z", &b.z)] {
        if let Some(val) = binding(name, s)? {
            out = out.subs(v, &val).map_err(|e| Fail::Verify(e.to_string()))?;
        }
    }
    Ok(out)
}

fn partition(s: &str, n: usize) -> Result<Partition, Fail> {
    let l = Partition::from_str(s).map_err(config)?;
    if l.len() != n {
        return Err(Fail::Config(format!("λ = {l} has length {}, expected n = {n}", l.len())));
    }
    Ok(l)
}

struct Output {
    text: String,
    json: serde_json::Value,
    passed: bool,
}

fn value(cmd: &str, p: &LaurentPoly) -> Output {
    Output { text: p.to_string(), json: json!({ "command": cmd, "value": p.to_string() }), passed: true }
}

fn run(cmd: &Cmd) -> Result<Output, Fail> {
    match cmd {
        Cmd::P(a) => {
            let l = partition(&a.lambda, a.n)?;
            let route = match a.route {
                PRoute::Branching => Route::Branching,
                PRoute::Sum => Route::Sum,
                PRoute::Lattice => Route::Lattice,
            };
            let p = hl_p(&l, a.n, route).map_err(config)?;
            Ok(value("p", &apply(p, &a.bind)?))
        }
        Cmd::Q(a) => {
            let l = partition(&a.lambda, a.n)?;
            let p = match a.route {
                PRoute::Lattice => hl_q_lattice(&l, a.n, false).map_err(config)?,
                _ => hl_q_branching(&l, a.n).map_err(config)?,
            };
            Ok(value("q", &apply(p, &a.bind)?))
        }
        Cmd::K(a) | Cmd::L(a) => {
            let l = partition(&a.lambda, a.n)?;
            let bp = BoundaryParams { gamma: boundary("gamma", &a.gamma)?, delta: boundary("delta", &a.delta)? };
            let is_k = matches!(cmd, Cmd::K(_));
            let p = match (a.route, is_k) {
                (PRoute::Lattice, true) => k_lattice(&l, a.n, &bp).map_err(config)?,
                (PRoute::Lattice, false) => l_lattice(&l, a.n, &bp).map_err(config)?,
                (PRoute::Branching, _) => {
                    if !bp.gamma.is_zero() || !bp.delta.is_zero() {
                        return Err(Fail::Config("the branching route needs --gamma 0 --delta 0".into()));
                    }
                    let k = k_branching(&l, a.n).map_err(config)?;
                    if is_k { k } else { l_from_k(&l, &k) }
                }
                (PRoute::Sum, _) => {
                    let k = k_hyperoctahedral(&l, a.n, &bp, false).map_err(config)?;
                    if is_k {
                        k
                    } else if bp.gamma.is_zero() && bp.delta.is_zero() {
                        l_from_k(&l, &k)
                    } else {
                        return Err(Fail::Config("L with boundary parameters needs --route lattice".into()));
                    }
                }
            };
            Ok(value(if is_k { "k" } else { "l" }, &apply(p, &a.bind)?))
        }
        Cmd::Pf(a) => {
            let kind = Kind::from_str(&a.kind).map_err(pf_fail)?;
            let p = match &a.closed {
                Some(name) => {
                    let ck = ClosedKind::from_str(name).map_err(pf_fail)?;
                    if ck.domain() != kind {
                        return Err(Fail::Config(format!("closed form {name} belongs to {}", ck.domain())));
                    }
                    closed_form(ck, a.n).map_err(pf_fail)?
                }
                None => renormalized_pf(kind, a.n).map_err(pf_fail)?,
            };
            Ok(value("pf", &apply(p, &a.bind)?))
        }
        Cmd::PfProps(a) => {
            let kind = Kind::from_str(&a.kind).map_err(pf_fail)?;
            let rep = property_report(kind, a.n).map_err(pf_fail)?;
            let text = rep
                .results
                .iter()
                .map(|r| format!("{} {}: {}", r.index, r.name, if r.passed { "pass" } else { "FAIL" }))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output { text, json: serde_json::to_value(&rep).expect("report"), passed: rep.all_passed() })
        }
        Cmd::FbasisCheck(a) => {
            let mut checks = fbasis::fbasis_check(a.n).map_err(|e| match e {
                fbasis::FbasisError::TooLarge { .. } => config(e),
                _ => Fail::Verify(e.to_string()),
            })?;
            if a.n <= fbasis::MAX_BC_N {
                let n = a.n;
                let mut bc = |name: String, ok: bool| checks.push(fbasis::FbasisCheck { name, passed: ok });
                for m in 0..=2 * n {
                    bc(format!("twisted bold column m={m}"), fbasis::twisted_bold_column(m, n).is_ok());
                }
                bc("twisted boundary column".into(), fbasis::twisted_b_column(&LaurentPoly::var(Var::G), n).is_ok());
                bc("twisted boundary covector".into(), fbasis::twisted_boundary(n).is_ok());
            }
            let passed = checks.iter().all(|c| c.passed);
            let text = checks
                .iter()
                .map(|c| format!("{}: {}", c.name, if c.passed { "pass" } else { "FAIL" }))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output { text, json: json!({ "command": "fbasis-check", "n": a.n, "checks": checks }), passed })
        }
        Cmd::LatticeCheck(a) => {
            let rels: Vec<Relation> = match &a.relation {
                Some(r) => vec![Relation::from_str(r).map_err(Fail::Config)?],
                None => Relation::ALL.to_vec(),
            };
            let mut rows = Vec::new();
            for rel in rels {
                let r = check_structural(rel);
                rows.push((rel.name().to_string(), r.is_ok()));
            }
            if a.relation.is_none() {
                for shifted in [false, true] {
                    let lo = if shifted { -2 } else { 0 };
                    let ok = states_up_to(4, lo, 3, shifted).iter().all(|mu| check_even_state_exchange(mu).is_ok());
                    rows.push((format!("even_state_exchange{}", if shifted { "_shifted" } else { "" }), ok));
                }
            }
            let passed = rows.iter().all(|r| r.1);
            let text = rows.iter().map(|(n, ok)| format!("{n}: {}", if *ok { "pass" } else { "FAIL" })).collect::<Vec<_>>().join("\n");
            let checks: Vec<_> = rows.iter().map(|(n, ok)| json!({ "name": n, "passed": ok })).collect();
            Ok(Output { text, json: json!({ "command": "lattice-check", "checks": checks }), passed })
        }
        Cmd::Verify(a) => {
            let rep = identities::verify(a.identity, a.n, a.order).map_err(harness_fail)?;
            let mut text = format!(
                "identity {} n={} order={}: {} ({:.2}s)",
                rep.identity,
                rep.n,
                rep.order,
                if rep.verdict { "pass" } else { "FAIL" },
                rep.seconds
            );
            for m in &rep.mismatches {
                text.push_str(&format!("\n  grade {}: lhs {} rhs {}", m.grade, m.lhs, m.rhs));
            }
            Ok(Output { text, json: serde_json::to_value(&rep).expect("report"), passed: rep.verdict })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = match identities::workers_from_env() {
        Ok(w) => w.or(cli.workers),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(w) = workers {
        if w == 0 || rayon::ThreadPoolBuilder::new().num_threads(w).build_global().is_err() {
            eprintln!("error: invalid worker count {w}");
            return ExitCode::from(2);
        }
    }
    let out = match run(&cli.cmd) {
        Ok(o) => o,
        Err(Fail::Config(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
        Err(Fail::Verify(m)) => {
            eprintln!("verification failed: {m}");
            return ExitCode::from(1);
        }
    };
    let body = if cli.json { serde_json::to_string_pretty(&out.json).expect("json") } else { out.text };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, format!("{body}\n")) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => println!("{body}"),
    }
    if out.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
