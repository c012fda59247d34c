//! `besselpos`: positivity of Bessel integrals, hypergeometric kernels, and
//! compactly supported radial basis functions from the command line.
//!
//! Every run prints a human-readable summary, a JSON document, or CSV. JSON
//! output embeds the full command (so `--replay saved.json` reproduces the
//! verdict) plus the library defaults in force. Exit codes: 0 for
//! success/positive/member, 1 for refuted/non-member/not-positive-definite,
//! 2 for usage or numeric errors.

mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use besselpos_core::integrals::{
    alpha_star, bessel_second_zero, eval_integral, integral_closed, integral_direct, kernel_value,
    scan_positivity, IntegralParams, KernelKind, PositivityVerdict, ScanConfig,
};
use besselpos_core::rbf::{
    fit_interpolant, gram, is_positive_definite, w_hat_tol, w_value, PointSet, RbfSpec,
};
use besselpos_core::regions::{
    omega_b1_contains, integral_region_contains, newton_contains, onef2_necessity,
    rbf_region_contains, omega_classify, RegionId,
};
use besselpos_core::ring::{rational_from_f64, RingScalar};
use besselpos_core::sos::{coeff_c, coeff_c_exact, omega_value, CoeffMethod, OmegaMethod, OmegaParams};
use io::fmt_f64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum RegionArg {
    A,
    R,
    S,
    P,
    O,
    Bn,
    Pn,
    On,
    Rn,
    Sn,
    /// Newton-diagram sufficiency for 1F2 nonnegativity (takes --a --b --c).
    Newton,
    /// Necessary conditions for 1F2 nonnegativity (takes --a --b --c).
    Necessity,
    /// Positivity classification of the 2F3 family (takes --a --b --c).
    Omega,
    /// The b = 1 specialization of the 2F3 conditions (takes --a --c).
    OmegaB1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum KernelArg {
    Phi,
    Psi,
    K,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum CoeffMethodArg {
    Direct,
    Gasper,
    Whipple,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum OmegaMethodArg {
    Series,
    Integral,
    Sos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum IntegralMethodArg {
    /// Closed form when one applies and is trustworthy, else quadrature.
    Auto,
    Closed,
    Quadrature,
}

#[derive(Parser, Debug)]
#[command(
    name = "besselpos",
    about = "Positivity of Bessel integrals and radial basis kernels",
    after_help = "Environment: BESSELPOS_THREADS caps internal parallelism."
)]
struct Cli {
    /// Re-run the command stored in a saved JSON output file.
    #[arg(long, value_name = "FILE", global = true)]
    replay: Option<PathBuf>,

    /// Output format.
    #[arg(long, value_enum, default_value = "human", global = true)]
    format: Format,

    #[command(subcommand)]
    cmd: Option<Cmd>,
}

#[derive(Subcommand, Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
enum Cmd {
    /// Decide membership in a named positivity region.
    RegionCheck {
        #[arg(long, value_enum)]
        region: RegionArg,
        /// Bessel order (integral-plane regions).
        #[arg(long, allow_negative_numbers = true)]
        beta: Option<f64>,
        /// Weight exponent alpha.
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        /// Weight exponent lambda (regions S, O) or RBF lambda (B_n..S_n).
        #[arg(long, allow_negative_numbers = true)]
        lambda: Option<f64>,
        /// Ambient dimension for the RBF regions.
        #[arg(long)]
        n: Option<u32>,
        /// RBF exponent rho (regions O_n, S_n).
        #[arg(long, allow_negative_numbers = true)]
        rho: Option<f64>,
        /// First hypergeometric parameter (newton/necessity/omega checks).
        #[arg(long, allow_negative_numbers = true)]
        a: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        b: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        c: Option<f64>,
    },
    /// Evaluate the integral int_0^x (x^mu - t^mu)^lambda t^alpha J_beta(t) dt.
    Integral {
        #[arg(long)]
        mu: f64,
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long)]
        x: f64,
        /// Absolute quadrature tolerance.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value = "auto")]
        method: IntegralMethodArg,
    },
    /// Evaluate a hypergeometric kernel (Phi, Psi or the 2F3 kernel K).
    Kernel {
        #[arg(long, value_enum)]
        kind: KernelArg,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        /// Required for Psi.
        #[arg(long, allow_negative_numbers = true)]
        lambda: Option<f64>,
        #[arg(long)]
        x: f64,
    },
    /// Scan the integral for positivity on a grid.
    Scan {
        #[arg(long)]
        mu: f64,
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long)]
        xmax: Option<f64>,
        #[arg(long)]
        step: Option<f64>,
        #[arg(long)]
        tol: Option<f64>,
        /// Disable region certificates and force the numeric scan.
        #[arg(long, default_value_t = false)]
        no_certify: bool,
    },
    /// Solve for the exponent making the truncated Bessel moment vanish.
    AlphaStar {
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Evaluate the 2F3 family member Omega by a chosen route.
    Omega {
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[arg(long, allow_negative_numbers = true)]
        c: f64,
        #[arg(long)]
        x: f64,
        #[arg(long, value_enum, default_value = "series")]
        method: OmegaMethodArg,
        /// Truncation order for the sums-of-squares route.
        #[arg(long)]
        terms: Option<usize>,
    },
    /// Squared-Bessel expansion coefficient C(n, nu).
    CoeffC {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[arg(long, allow_negative_numbers = true)]
        c: f64,
        #[arg(long, value_enum, default_value = "direct")]
        method: CoeffMethodArg,
        /// Evaluate in exact rational arithmetic (inputs taken bit-exactly).
        #[arg(long, default_value_t = false)]
        exact: bool,
    },
    /// Evaluate the compactly supported radial basis function W at a radius.
    RbfEval {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        delta: f64,
        #[arg(long, allow_negative_numbers = true)]
        rho: f64,
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long)]
        r: f64,
    },
    /// Evaluate the radial Fourier transform of W at a frequency.
    RbfFt {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        delta: f64,
        #[arg(long, allow_negative_numbers = true)]
        rho: f64,
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long)]
        s: f64,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Assemble the Gram matrix of a point set and test positive definiteness.
    GramCheck {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        delta: f64,
        #[arg(long, allow_negative_numbers = true)]
        rho: f64,
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        /// CSV file with one point per row.
        #[arg(long)]
        points: PathBuf,
        /// Optional CSV destination for the Gram matrix.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Fit interpolation coefficients through the Gram system.
    Fit {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        delta: f64,
        #[arg(long, allow_negative_numbers = true)]
        rho: f64,
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long)]
        points: PathBuf,
        /// CSV file with one value per row.
        #[arg(long)]
        values: PathBuf,
        /// Optional CSV destination for the coefficients.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Library defaults relevant to a command, echoed in JSON for provenance.
fn defaults_for(cmd: &Cmd) -> Value {
    match cmd {
        Cmd::Scan { .. } => json!({"xmax": 50.0, "step": 0.05, "tol": 1e-10}),
        Cmd::Integral { .. } => json!({"tol": 1e-10}),
        Cmd::AlphaStar { .. } => json!({"tol": 1e-9, "bracket_cap": 5.0}),
        Cmd::RbfFt { .. } => json!({"tol": 1e-10}),
        Cmd::Omega { .. } => json!({"terms": 60}),
        _ => json!({}),
    }
}

struct Outcome {
    exit: u8,
    result: Value,
    human: Vec<String>,
    csv: String,
}

impl Outcome {
    fn new(exit: u8, result: Value, human: Vec<String>, csv: String) -> Self {
        Outcome { exit, result, human, csv }
    }
}

fn region_id(r: RegionArg) -> Option<RegionId> {
    Some(match r {
        RegionArg::A => RegionId::A,
        RegionArg::R => RegionId::R,
        RegionArg::S => RegionId::S,
        RegionArg::P => RegionId::P,
        RegionArg::O => RegionId::O,
        RegionArg::Bn => RegionId::Bn,
        RegionArg::Pn => RegionId::Pn,
        RegionArg::On => RegionId::On,
        RegionArg::Rn => RegionId::Rn,
        RegionArg::Sn => RegionId::Sn,
        _ => return None,
    })
}

fn need(v: Option<f64>, what: &str) -> Result<f64> {
    v.ok_or_else(|| anyhow!("missing --{what}"))
}

fn reject(v: Option<f64>, what: &str) -> Result<()> {
    if v.is_some() {
        bail!("--{what} does not apply to this region");
    }
    Ok(())
}

fn member_outcome(member: bool, detail: Value, mut human: Vec<String>) -> Outcome {
    human.push(format!("verdict: {}", if member { "member" } else { "non-member" }));
    Outcome::new(
        if member { 0 } else { 1 },
        detail,
        human,
        format!("member\n{member}"),
    )
}

fn run_region_check(
    region: RegionArg,
    beta: Option<f64>,
    alpha: Option<f64>,
    lambda: Option<f64>,
    n: Option<u32>,
    rho: Option<f64>,
    a: Option<f64>,
    b: Option<f64>,
    c: Option<f64>,
) -> Result<Outcome> {
    match region {
        RegionArg::Newton | RegionArg::Necessity => {
            let (av, bv, cv) = (need(a, "a")?, need(b, "b")?, need(c, "c")?);
            reject(beta, "beta")?;
            reject(alpha, "alpha")?;
            let member = if region == RegionArg::Newton {
                newton_contains(av, bv, cv)
            } else {
                onef2_necessity(av, bv, cv)
            };
            Ok(member_outcome(
                member,
                json!({"member": member}),
                vec![format!("{region:?} check at (a, b, c) = ({av}, {bv}, {cv})")],
            ))
        }
        RegionArg::Omega => {
            let (av, bv, cv) = (need(a, "a")?, need(b, "b")?, need(c, "c")?);
            let class = omega_classify(av, bv, cv);
            let member = class.is_positive();
            let name = format!("{class:?}");
            let mut human = vec![format!("Omega classification: {name}")];
            human.push(format!(
                "verdict: {}",
                if member { "positive" } else { "not certified positive" }
            ));
            Ok(Outcome::new(
                if member { 0 } else { 1 },
                json!({"class": name, "member": member}),
                human,
                format!("class,member\n{name},{member}"),
            ))
        }
        RegionArg::OmegaB1 => {
            let (av, cv) = (need(a, "a")?, need(c, "c")?);
            let member = omega_b1_contains(av, cv);
            Ok(member_outcome(
                member,
                json!({"member": member}),
                vec![format!("b = 1 condition check at (a, c) = ({av}, {cv})")],
            ))
        }
        _ => {
            let id = region_id(region).unwrap();
            let member = if id.is_rbf() {
                let nn = n.ok_or_else(|| anyhow!("missing --n"))?;
                rbf_region_contains(id, nn, need(lambda, "lambda")?, need(alpha, "alpha")?, rho)?
            } else {
                if n.is_some() || rho.is_some() {
                    bail!("--n/--rho only apply to the RBF regions");
                }
                integral_region_contains(id, need(beta, "beta")?, need(alpha, "alpha")?, lambda)?
            };
            Ok(member_outcome(
                member,
                json!({"region": id.name(), "member": member}),
                vec![format!("region {} membership", id.name())],
            ))
        }
    }
}

fn run_cmd(cmd: &Cmd) -> Result<Outcome> {
    match cmd {
        Cmd::RegionCheck { region, beta, alpha, lambda, n, rho, a, b, c } => {
            run_region_check(*region, *beta, *alpha, *lambda, *n, *rho, *a, *b, *c)
        }
        Cmd::Integral { mu, lambda, alpha, beta, x, tol, method } => {
            let p = IntegralParams::new(*mu, *lambda, *alpha, *beta)?;
            let tol = tol.unwrap_or(1e-10);
            let (value, err, route) = match method {
                IntegralMethodArg::Quadrature => {
                    let q = integral_direct(&p, *x, tol)?;
                    (q.value, q.abs_err_est, "quadrature")
                }
                IntegralMethodArg::Closed => match integral_closed(&p, *x)? {
                    Some(e) => (e.value, e.abs_err_est, "closed-form"),
                    None => bail!("no closed form applies to mu = {mu}, lambda = {lambda}"),
                },
                IntegralMethodArg::Auto => {
                    let (v, e) = eval_integral(&p, *x, tol)?;
                    (v, e, "auto")
                }
            };
            Ok(Outcome::new(
                0,
                json!({"value": value, "abs_err_est": err, "route": route}),
                vec![
                    format!("integral({mu}, {lambda}, {alpha}, {beta}) at x = {x} [{route}]"),
                    format!("value = {} (err <= {})", fmt_f64(value), fmt_f64(err)),
                ],
                format!("value,abs_err_est,route\n{},{},{route}", fmt_f64(value), fmt_f64(err)),
            ))
        }
        Cmd::Kernel { kind, alpha, beta, lambda, x } => {
            let kk = match kind {
                KernelArg::Phi => KernelKind::Phi,
                KernelArg::Psi => KernelKind::Psi,
                KernelArg::K => KernelKind::K,
            };
            let e = kernel_value(kk, *alpha, *beta, *lambda, *x)?;
            Ok(Outcome::new(
                0,
                json!({"value": e.value, "abs_err_est": e.abs_err_est, "terms_used": e.terms_used}),
                vec![format!(
                    "{kind:?} kernel at x = {x}: {} (err <= {})",
                    fmt_f64(e.value),
                    fmt_f64(e.abs_err_est)
                )],
                format!(
                    "value,abs_err_est,terms_used\n{},{},{}",
                    fmt_f64(e.value),
                    fmt_f64(e.abs_err_est),
                    e.terms_used
                ),
            ))
        }
        Cmd::Scan { mu, lambda, alpha, beta, xmax, step, tol, no_certify } => {
            let p = IntegralParams::new(*mu, *lambda, *alpha, *beta)?;
            let cfg = ScanConfig {
                x_max: xmax.unwrap_or(50.0),
                step: step.unwrap_or(0.05),
                tol: tol.unwrap_or(1e-10),
                use_region_certificates: !no_certify,
            };
            let verdict = scan_positivity(&p, &cfg)?;
            let (exit, result, line) = match verdict {
                PositivityVerdict::CertifiedByRegion(r) => (
                    0u8,
                    json!({"verdict": "certified", "region": r.name()}),
                    format!("certified positive by region {}", r.name()),
                ),
                PositivityVerdict::NumericallyPositive { min_value, argmin } => (
                    0,
                    json!({"verdict": "numerically-positive", "min_value": min_value, "argmin": argmin}),
                    format!(
                        "numerically positive: min {} at x = {}",
                        fmt_f64(min_value),
                        argmin
                    ),
                ),
                PositivityVerdict::Refuted { x, value, err } => (
                    1,
                    json!({"verdict": "refuted", "witness_x": x, "value": value, "err": err}),
                    format!("refuted at x = {x}: value {} (err {})", fmt_f64(value), fmt_f64(err)),
                ),
            };
            // CSV mode streams the grid for external plotting
            let csv = if matches!(verdict, PositivityVerdict::CertifiedByRegion(_)) {
                format!("verdict\ncertified-{}", result["region"].as_str().unwrap_or(""))
            } else {
                let mut rows = vec!["x,value,abs_err_est".to_string()];
                let n_pts = (cfg.x_max / cfg.step).floor() as usize;
                for k in 1..=n_pts {
                    let x = cfg.step * k as f64;
                    let (v, e) = eval_integral(&p, x, cfg.tol)?;
                    rows.push(format!("{},{},{}", x, fmt_f64(v), fmt_f64(e)));
                    if v + 10.0 * e < 0.0 {
                        break;
                    }
                }
                rows.join("\n")
            };
            Ok(Outcome::new(exit, result, vec![line], csv))
        }
        Cmd::AlphaStar { beta, tol } => {
            let tol = tol.unwrap_or(1e-9);
            let a = alpha_star(*beta, tol)?;
            let j2 = bessel_second_zero(*beta)?;
            Ok(Outcome::new(
                0,
                json!({"alpha_star": a, "second_zero": j2}),
                vec![format!(
                    "alpha*({beta}) = {} (second zero {})",
                    fmt_f64(a),
                    fmt_f64(j2)
                )],
                format!("alpha_star,second_zero\n{},{}", fmt_f64(a), fmt_f64(j2)),
            ))
        }
        Cmd::Omega { a, b, c, x, method, terms } => {
            let p = OmegaParams::new(*a, *b, *c)?;
            let m = match method {
                OmegaMethodArg::Series => OmegaMethod::Series,
                OmegaMethodArg::Integral => OmegaMethod::IntegralRep,
                OmegaMethodArg::Sos => OmegaMethod::SumsOfSquares(terms.unwrap_or(60)),
            };
            let e = omega_value(&p, *x, m)?;
            let mut human = vec![format!(
                "Omega({x}) = {} via {method:?} (err <= {})",
                fmt_f64(e.value),
                fmt_f64(e.abs_err_est)
            )];
            if matches!(method, OmegaMethodArg::Sos) && e.abs_err_est > 1e-8 {
                human.push(format!(
                    "warning: truncation tail estimate {} above 1e-8; raise --terms",
                    fmt_f64(e.abs_err_est)
                ));
            }
            Ok(Outcome::new(
                0,
                json!({"value": e.value, "abs_err_est": e.abs_err_est, "terms_used": e.terms_used}),
                human,
                format!(
                    "value,abs_err_est,terms_used\n{},{},{}",
                    fmt_f64(e.value),
                    fmt_f64(e.abs_err_est),
                    e.terms_used
                ),
            ))
        }
        Cmd::CoeffC { n, a, b, c, method, exact } => {
            let m = match method {
                CoeffMethodArg::Direct => CoeffMethod::Direct,
                CoeffMethodArg::Gasper => CoeffMethod::GasperSum,
                CoeffMethodArg::Whipple => CoeffMethod::Whipple,
            };
            let p = OmegaParams::new(*a, *b, *c)?;
            let (value, exact_repr) = if *exact {
                let v = coeff_c_exact(
                    *n,
                    &rational_from_f64(*a),
                    &rational_from_f64(*b),
                    &rational_from_f64(*c),
                    m,
                )?;
                (v.to_f64_lossy(), Some(v.to_string()))
            } else {
                (coeff_c(*n, &p, m)?, None)
            };
            Ok(Outcome::new(
                0,
                json!({"value": value, "exact": exact_repr}),
                vec![match &exact_repr {
                    Some(r) => format!("C({n}) = {r} = {}", fmt_f64(value)),
                    None => format!("C({n}) = {}", fmt_f64(value)),
                }],
                format!("value\n{}", fmt_f64(value)),
            ))
        }
        Cmd::RbfEval { n, delta, rho, lambda, alpha, r } => {
            let spec = RbfSpec::new(*n, *delta, *rho, *lambda, *alpha)?;
            let v = w_value(&spec, *r)?;
            Ok(Outcome::new(
                0,
                json!({"value": v}),
                vec![format!("W({r}) = {}", fmt_f64(v))],
                format!("value\n{}", fmt_f64(v)),
            ))
        }
        Cmd::RbfFt { n, delta, rho, lambda, alpha, s, tol } => {
            let spec = RbfSpec::new(*n, *delta, *rho, *lambda, *alpha)?;
            let v = w_hat_tol(&spec, *s, tol.unwrap_or(1e-10))?;
            Ok(Outcome::new(
                0,
                json!({"value": v}),
                vec![format!("FT(W)({s}) = {}", fmt_f64(v))],
                format!("value\n{}", fmt_f64(v)),
            ))
        }
        Cmd::GramCheck { n, delta, rho, lambda, alpha, points, emit } => {
            let spec = RbfSpec::new(*n, *delta, *rho, *lambda, *alpha)?;
            let pts = PointSet::new(io::read_points(points)?)?;
            let g = gram(&spec, &pts)?;
            if let Some(path) = emit {
                io::write_matrix(path, &g)?;
            }
            let pd = is_positive_definite(&g)?;
            Ok(Outcome::new(
                if pd { 0 } else { 1 },
                json!({"points": pts.len(), "positive_definite": pd}),
                vec![format!(
                    "Gram of {} points is {}positive definite",
                    pts.len(),
                    if pd { "" } else { "NOT " }
                )],
                io::matrix_csv(&g),
            ))
        }
        Cmd::Fit { n, delta, rho, lambda, alpha, points, values, out } => {
            let spec = RbfSpec::new(*n, *delta, *rho, *lambda, *alpha)?;
            let pts = PointSet::new(io::read_points(points)?)?;
            let vals = io::read_values(values)?;
            let coeffs = fit_interpolant(&spec, &pts, &vals)?;
            if let Some(path) = out {
                io::write_matrix(path, &coeffs.iter().map(|&c| vec![c]).collect::<Vec<_>>())?;
            }
            Ok(Outcome::new(
                0,
                json!({"coefficients": coeffs}),
                vec![format!("fitted {} coefficients", coeffs.len())],
                io::matrix_csv(&coeffs.iter().map(|&c| vec![c]).collect::<Vec<_>>()),
            ))
        }
    }
}

fn emit(cli_format: Format, cmd: &Cmd, outcome: &Outcome) -> Result<()> {
    match cli_format {
        Format::Human => {
            for line in &outcome.human {
                println!("{line}");
            }
        }
        Format::Json => {
            let doc = json!({
                "command": cmd,
                "defaults": defaults_for(cmd),
                "result": outcome.result,
                "exit_code": outcome.exit,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Format::Csv => println!("{}", outcome.csv),
    }
    Ok(())
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("BESSELPOS_THREADS") {
        let n: usize = v
            .parse()
            .with_context(|| format!("BESSELPOS_THREADS must be a positive integer, got {v:?}"))?;
        if n == 0 {
            bail!("BESSELPOS_THREADS must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring thread pool")?;
    }
    Ok(())
}

fn load_replay(path: &PathBuf) -> Result<Cmd> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let doc: Value = serde_json::from_str(&text).context("parsing replay JSON")?;
    let cmd_value = doc
        .get("command")
        .cloned()
        .ok_or_else(|| anyhow!("replay file has no \"command\" object"))?;
    let cmd: Cmd = serde_json::from_value(cmd_value).context("decoding replayed command")?;
    Ok(cmd)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match try_main(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn try_main(cli: Cli) -> Result<u8> {
    configure_threads()?;
    let cmd = match (&cli.replay, cli.cmd) {
        (Some(path), None) => load_replay(path)?,
        (None, Some(cmd)) => cmd,
        (Some(_), Some(_)) => bail!("--replay conflicts with an explicit subcommand"),
        (None, None) => bail!("a subcommand or --replay is required (see --help)"),
    };
    let outcome = run_cmd(&cmd)?;
    emit(cli.format, &cmd, &outcome)?;
    Ok(outcome.exit)
}
