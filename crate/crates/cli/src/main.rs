//! `satake` — exact spherical Hecke-algebra computations and brute-force
//! identity checks over `F_p((π))`.
//!
//! Exit codes: `0` on success, `1` when a checked identity fails (or an
//! `--expect` comparison mismatches), `2` on usage errors.

use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use satake_core::charring::adjoint_char;
use satake_core::exactalg::Rat;
use satake_core::hecke::harmonics::{kostant_factorization_check, p_zero_sweep};
use satake_core::hecke::identities::{plancherel_check, spherical_kernel_expansion_check};
use satake_core::hecke::whittaker::{l_factor, whittaker_model_criterion, LFactor};
use satake_core::hecke::{lusztig_kato, satake_h};
use satake_core::padic::oracles::{
    counting_function_check, eigenfunction_check, local_fourier_check, oracle_h_solve, PsiSign,
};
use satake_core::stalks::stalk_table;
use satake_core::{HeckeCtx, HeckeElt, Int, RootSystem, VirtualChar};

#[derive(Parser)]
#[command(
    name = "satake",
    version,
    about = "Exact Hecke-algebra computations with brute-force p-adic verification"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

/// Root-system selection shared by every subcommand.
#[derive(Args)]
struct RsArgs {
    /// Root-system name: GL2, GL3, …, or A1, A2, A3, B2, C2, G2.
    #[arg(long, conflicts_with = "n")]
    rs: Option<String>,
    /// Shorthand for GL_n.
    #[arg(long)]
    n: Option<usize>,
}

impl RsArgs {
    fn build(&self) -> anyhow::Result<(RootSystem, String)> {
        match (&self.rs, self.n) {
            (Some(name), None) => {
                let rs = RootSystem::parse(name)?;
                Ok((rs, name.trim().to_uppercase()))
            }
            (None, Some(n)) => Ok((RootSystem::gl(n), format!("GL{n}"))),
            _ => bail!("exactly one of --rs and --n is required"),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the table of Lusztig–Kato polynomials P_{μλ}, one JSON row
    /// per line.
    Lk {
        #[command(flatten)]
        rs: RsArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<i64>,
        /// Emit one JSON document instead of a row per line.
        #[arg(long)]
        json: bool,
        /// Compare the canonical JSON document against this string; exit 1
        /// on mismatch.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Print the spherical element H_λ in the orbit (c-) basis.
    Satake {
        #[command(flatten)]
        rs: RsArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<i64>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        expect: Option<String>,
    },
    /// Verify by enumeration that the unipotent Fourier coefficient of H_λ
    /// along ν(π) is δ_{λν}·q^{-⟨λ,ρ̌⟩}.
    LocalCheck {
        #[command(flatten)]
        rs: RsArgs,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        nu: Vec<i64>,
        /// Also run the opposite character sign.
        #[arg(long)]
        both_signs: bool,
        #[arg(long)]
        json: bool,
        /// Size of the worker thread pool for the window sweep.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Verify by enumeration that the unipotent integral of the graded
    /// local counting function at ν equals q^{n(ν)}·χ_ν.
    FplusCheck {
        #[command(flatten)]
        rs: RsArgs,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        nu: Vec<i64>,
        #[arg(long)]
        both_signs: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Verify by enumeration that the Whittaker function is a Hecke
    /// eigenfunction with eigenvalue S(c_μ).
    CsCheck {
        #[command(flatten)]
        rs: RsArgs,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        mu: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        nu: Vec<i64>,
        #[arg(long)]
        both_signs: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Re-derive the c-basis coefficients of H_λ from window counts alone
    /// and compare them with the Lusztig–Kato polynomials at q = p.
    SatakeOracleCheck {
        #[command(flatten)]
        rs: RsArgs,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<i64>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Check the graded decomposition of the polynomial ring under the
    /// harmonics of the adjoint representation: generalized exponents and
    /// the closed form for the zero-weight Lusztig–Kato row.
    KostantCheck {
        #[command(flatten)]
        rs: RsArgs,
        /// Truncation degree for the graded series.
        #[arg(long, default_value_t = 10)]
        precision: usize,
        /// Sweep dominant λ with ⟨λ,2ρ̌⟩ up to this bound.
        #[arg(long = "deg-max", default_value_t = 8)]
        deg_max: i64,
        #[arg(long)]
        json: bool,
    },
    /// Check the graded spherical-kernel expansion at μ against its
    /// product form, degree by degree.
    Id1Check {
        #[command(flatten)]
        rs: RsArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        mu: Vec<i64>,
        /// Number of u-degrees to compare.
        #[arg(long, default_value_t = 9)]
        precision: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check the Plancherel-measure certificate: mass normalization, exact
    /// orthogonality of characters, and the Weyl-sum product identity.
    PlancherelCheck {
        #[command(flatten)]
        rs: RsArgs,
        #[arg(long, default_value_t = 6)]
        precision: usize,
        /// Sweep pairs of dominant weights up to this size.
        #[arg(long = "deg-max", default_value_t = 4)]
        deg_max: i64,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the local L-factor det(1 − r(γ)q^{-s})^{-1} at a numeric
    /// Satake parameter γ, together with the Whittaker-model criterion.
    Lgamma {
        #[command(flatten)]
        rs: RsArgs,
        /// Eigenvalues of γ as rationals, e.g. 3/2,2/3.
        #[arg(long, value_delimiter = ',', required = true)]
        gamma: Vec<String>,
        #[arg(long, default_value_t = 2)]
        p: u32,
        /// The point s at which to evaluate.
        #[arg(long, default_value_t = 1)]
        s: i64,
        /// Additionally scan integer s in [-bound, bound] for poles.
        #[arg(long = "pole-bound", default_value_t = 0)]
        pole_bound: i64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        expect: Option<String>,
    },
    /// Print the graded stalk table of the λ-sheaf, one JSON row per line.
    Stalks {
        #[command(flatten)]
        rs: RsArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<i64>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        expect: Option<String>,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn init_jobs(jobs: Option<usize>) {
    if let Some(j) = jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
}

fn int_to_i64(c: &Int) -> anyhow::Result<i64> {
    c.to_i64().ok_or_else(|| anyhow!("coefficient {c} does not fit in 64 bits"))
}

fn parse_rat(s: &str) -> anyhow::Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let n: i64 = num.parse().with_context(|| format!("bad rational {s:?}"))?;
    let d: i64 = den.parse().with_context(|| format!("bad rational {s:?}"))?;
    if d == 0 {
        bail!("bad rational {s:?}: zero denominator");
    }
    Ok(satake_core::exactalg::rat(n, d))
}

/// Serialize a Hecke element with its basis tag and `v`-coefficient lists.
fn hecke_elt_json(rs_label: &str, elt: &HeckeElt) -> anyhow::Result<Value> {
    let basis = match elt.basis() {
        satake_core::Basis::C => "c",
        satake_core::Basis::H => "H",
    };
    let mut terms = Vec::new();
    for wt in elt.support() {
        let c = elt.coeff(&wt);
        let coeff_v: Vec<Value> = c
            .iter()
            .map(|(e, a)| Ok(json!([e, int_to_i64(a)?])))
            .collect::<anyhow::Result<_>>()?;
        terms.push(json!({"weight": wt, "coeff_v": coeff_v}));
    }
    Ok(json!({
        "schema": "hecke-elt/1",
        "rs": rs_label,
        "basis": basis,
        "terms": terms,
    }))
}

/// Emit a check report and translate its verdict into an exit code.
#[allow(clippy::too_many_arguments)]
fn finish_check(
    json: bool,
    claim: &str,
    params: Value,
    lhs: String,
    rhs: String,
    enumerated: u64,
    started: Instant,
    pass: bool,
) -> ExitCode {
    let elapsed = started.elapsed().as_secs_f64();
    if json {
        println!(
            "{}",
            json!({
                "schema": "report/1",
                "claim": claim,
                "params": params,
                "pass": pass,
                "lhs": lhs,
                "rhs": rhs,
                "enumerated": enumerated,
                "elapsed": elapsed,
            })
        );
    } else if pass {
        println!("PASS {claim} [enumerated {enumerated}, {elapsed:.3}s]");
    } else {
        println!("FAIL {claim}");
        println!("  lhs = {lhs}");
        println!("  rhs = {rhs}");
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

/// Emit a value document, honoring `--expect`.
fn finish_value(json: bool, doc: Value, lines: Vec<String>, expect: Option<&str>) -> ExitCode {
    let canonical = doc.to_string();
    if json {
        println!("{canonical}");
    } else {
        for line in lines {
            println!("{line}");
        }
    }
    if let Some(want) = expect {
        if want.trim() != canonical {
            eprintln!("expect mismatch:\n  actual   {canonical}\n  expected {}", want.trim());
            return ExitCode::from(1);
        }
    }
    ExitCode::SUCCESS
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = FNV_OFFSET;
    for b in bytes {
        h ^= *b as u64;
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

/// The Lusztig–Kato rows as plain integer vectors, going through the
/// cache directory named by `SATAKE_CACHE_DIR` when it is set.
fn lk_rows_cached(
    rs: &RootSystem,
    rs_label: &str,
    lambda: &[i64],
) -> anyhow::Result<Vec<(Vec<i64>, Vec<i64>)>> {
    let cache_path = std::env::var("SATAKE_CACHE_DIR").ok().map(|dir| {
        let key = format!("{rs_label}:{lambda:?}");
        std::path::PathBuf::from(dir).join(format!("{:016x}.json", fnv1a(key.as_bytes())))
    });
    if let Some(path) = &cache_path {
        if let Ok(text) = std::fs::read_to_string(path) {
            if let Ok(doc) = serde_json::from_str::<Value>(&text) {
                let matches = doc["schema"] == json!("lk-cache/1")
                    && doc["rs"] == json!(rs_label)
                    && doc["lambda"] == json!(lambda);
                if matches {
                    if let Some(rows) = doc["rows"].as_array() {
                        let mut out = Vec::new();
                        for row in rows {
                            let mu: Vec<i64> =
                                serde_json::from_value(row["mu"].clone())?;
                            let p: Vec<i64> = serde_json::from_value(row["P"].clone())?;
                            out.push((mu, p));
                        }
                        return Ok(out);
                    }
                }
            }
        }
    }
    let table = lusztig_kato(rs, lambda)?;
    let mut rows = Vec::new();
    for row in &table.rows {
        let p: Vec<i64> = row.p.iter().map(int_to_i64).collect::<anyhow::Result<_>>()?;
        rows.push((row.mu.clone(), p));
    }
    if let Some(path) = &cache_path {
        let doc = json!({
            "schema": "lk-cache/1",
            "rs": rs_label,
            "lambda": lambda,
            "rows": rows
                .iter()
                .map(|(mu, p)| json!({"mu": mu, "P": p}))
                .collect::<Vec<_>>(),
        });
        if let Some(dir) = path.parent() {
            let _ = std::fs::create_dir_all(dir);
        }
        let _ = std::fs::write(path, doc.to_string());
    }
    Ok(rows)
}

fn signs_to_run(both: bool) -> Vec<PsiSign> {
    if both {
        vec![PsiSign::Inverse, PsiSign::Direct]
    } else {
        vec![PsiSign::Inverse]
    }
}

fn run() -> anyhow::Result<ExitCode> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Lk { rs, lambda, json, expect } => {
            let (rs, label) = rs.build()?;
            let rows = lk_rows_cached(&rs, &label, &lambda)?;
            let row_docs: Vec<Value> =
                rows.iter().map(|(mu, p)| json!({"mu": mu, "P": p})).collect();
            let doc = json!({
                "schema": "lk/1",
                "rs": label,
                "lambda": lambda,
                "rows": row_docs,
            });
            let lines = rows
                .iter()
                .map(|(mu, p)| json!({"mu": mu, "P": p}).to_string())
                .collect();
            Ok(finish_value(json, doc, lines, expect.as_deref()))
        }
        Cmd::Satake { rs, lambda, json, expect } => {
            let (rs, label) = rs.build()?;
            let h = satake_h(&rs, &lambda)?;
            let doc = hecke_elt_json(&label, &h)?;
            let lines = h
                .support()
                .into_iter()
                .map(|wt| format!("c{wt:?}: {}", h.coeff(&wt)))
                .collect();
            Ok(finish_value(json, doc, lines, expect.as_deref()))
        }
        Cmd::LocalCheck { rs, p, lambda, nu, both_signs, json, jobs } => {
            init_jobs(jobs);
            let (rs, label) = rs.build()?;
            let ctx = HeckeCtx::new(&rs);
            let started = Instant::now();
            let mut pass = true;
            let mut lhs = String::new();
            let mut rhs = String::new();
            let mut enumerated = 0;
            for sign in signs_to_run(both_signs) {
                let rep = local_fourier_check(&ctx, &lambda, &nu, p, 0, sign)?;
                if lhs.is_empty() {
                    lhs = rep.lhs.to_string();
                    rhs = rep.rhs.to_string();
                }
                enumerated += rep.enumerated;
                pass &= rep.pass;
            }
            Ok(finish_check(
                json,
                "unipotent Fourier coefficient of H_lambda at nu(pi) equals delta_{lambda,nu} * q^(-<lambda,rho-check>)",
                json!({"rs": label, "p": p, "lambda": lambda, "nu": nu, "both_signs": both_signs}),
                lhs,
                rhs,
                enumerated,
                started,
                pass,
            ))
        }
        Cmd::FplusCheck { rs, p, nu, both_signs, json, jobs } => {
            init_jobs(jobs);
            let (rs, label) = rs.build()?;
            let ctx = HeckeCtx::new(&rs);
            let started = Instant::now();
            let mut pass = true;
            let mut lhs = String::new();
            let mut rhs = String::new();
            let mut enumerated = 0;
            for sign in signs_to_run(both_signs) {
                let rep = counting_function_check(&ctx, &nu, p, 0, sign)?;
                if lhs.is_empty() {
                    lhs = format!("{:?}", rep.lhs);
                    rhs = format!("{:?}", rep.rhs);
                }
                enumerated += rep.enumerated;
                pass &= rep.pass;
            }
            Ok(finish_check(
                json,
                "unipotent integral of the graded counting function at nu equals q^(n(nu)) * chi_nu",
                json!({"rs": label, "p": p, "nu": nu, "both_signs": both_signs}),
                lhs,
                rhs,
                enumerated,
                started,
                pass,
            ))
        }
        Cmd::CsCheck { rs, p, mu, nu, both_signs, json, jobs } => {
            init_jobs(jobs);
            let (rs, label) = rs.build()?;
            let ctx = HeckeCtx::new(&rs);
            let started = Instant::now();
            let mut pass = true;
            let mut lhs = String::new();
            let mut rhs = String::new();
            let mut enumerated = 0;
            for sign in signs_to_run(both_signs) {
                let rep = eigenfunction_check(&ctx, &mu, &nu, p, sign)?;
                if lhs.is_empty() {
                    lhs = format!("{:?}", rep.lhs);
                    rhs = format!("{:?}", rep.rhs);
                }
                enumerated += rep.enumerated;
                pass &= rep.pass;
            }
            Ok(finish_check(
                json,
                "summing the Whittaker function over the mu-orbit cosets at nu(pi) gives S(c_mu) * W(nu(pi))",
                json!({"rs": label, "p": p, "mu": mu, "nu": nu, "both_signs": both_signs}),
                lhs,
                rhs,
                enumerated,
                started,
                pass,
            ))
        }
        Cmd::SatakeOracleCheck { rs, p, lambda, json, jobs } => {
            init_jobs(jobs);
            let (rs, label) = rs.build()?;
            let ctx = HeckeCtx::new(&rs);
            let started = Instant::now();
            let rep = oracle_h_solve(&ctx, &lambda, p, 0)?;
            let lhs = rep
                .rows
                .iter()
                .map(|r| format!("{:?}: {}", r.mu, r.solved))
                .collect::<Vec<_>>()
                .join(", ");
            let rhs = rep
                .rows
                .iter()
                .map(|r| format!("{:?}: {}", r.mu, r.expected))
                .collect::<Vec<_>>()
                .join(", ");
            let enumerated = rep.rows.len() as u64;
            Ok(finish_check(
                json,
                "coefficients of H_lambda solved from window counts equal the Lusztig-Kato polynomials at q = p",
                json!({"rs": label, "p": p, "lambda": lambda}),
                lhs,
                rhs,
                enumerated,
                started,
                rep.pass,
            ))
        }
        Cmd::KostantCheck { rs, precision, deg_max, json } => {
            let (rs, label) = rs.build()?;
            let started = Instant::now();
            let factor_ok = kostant_factorization_check(&rs, precision.min(12));
            let ctx = HeckeCtx::new(&rs);
            let reports = p_zero_sweep(&ctx, deg_max, precision)?;
            let pass = factor_ok && !reports.is_empty() && reports.iter().all(|r| r.pass);
            let lhs = reports
                .iter()
                .map(|r| format!("{:?}: {:?}", r.lambda, r.p_direct))
                .collect::<Vec<_>>()
                .join(", ");
            let rhs = reports
                .iter()
                .map(|r| format!("{:?}: {:?}", r.lambda, r.p_from_exponents))
                .collect::<Vec<_>>()
                .join(", ");
            let enumerated = reports.len() as u64;
            Ok(finish_check(
                json,
                "graded harmonics factorization holds and the zero-weight Lusztig-Kato row matches the generalized exponents",
                json!({"rs": label, "precision": precision, "deg_max": deg_max}),
                lhs,
                rhs,
                enumerated,
                started,
                pass,
            ))
        }
        Cmd::Id1Check { rs, mu, precision, json } => {
            let (rs, label) = rs.build()?;
            let ctx = HeckeCtx::new(&rs);
            let started = Instant::now();
            let rep = spherical_kernel_expansion_check(&ctx, &mu, precision)?;
            let lhs = format!("series compared through degree {}", rep.prec.saturating_sub(1));
            let rhs = match rep.mismatch {
                None => "no mismatch".to_string(),
                Some(d) => format!("first mismatch at degree {d}"),
            };
            Ok(finish_check(
                json,
                "the graded spherical-kernel expansion at mu equals its product form",
                json!({"rs": label, "mu": mu, "precision": precision}),
                lhs,
                rhs,
                rep.lambda_terms as u64,
                started,
                rep.pass,
            ))
        }
        Cmd::PlancherelCheck { rs, precision, deg_max, json } => {
            let (rs, label) = rs.build()?;
            let started = Instant::now();
            let rep = plancherel_check(&rs, precision, deg_max);
            let lhs = format!(
                "mass profile {:?}, {} character pairings",
                rep.mass_profile,
                rep.pairings.len()
            );
            let rhs = format!(
                "[{}, 0, …] with |W| = {}, orthogonality {}, product identity {}",
                rep.weyl_order,
                rep.weyl_order,
                if rep.orthogonality_ok { "exact" } else { "BROKEN" },
                if rep.macdonald_ok { "exact" } else { "BROKEN" },
            );
            let enumerated = rep.pairings.len() as u64;
            Ok(finish_check(
                json,
                "Plancherel certificate: mass normalization, character orthogonality, Weyl-sum product identity",
                json!({"rs": label, "precision": precision, "deg_max": deg_max}),
                lhs,
                rhs,
                enumerated,
                started,
                rep.pass,
            ))
        }
        Cmd::Lgamma { rs, gamma, p, s, pole_bound, json, expect } => {
            let (rs, label) = rs.build()?;
            let gamma: Vec<Rat> =
                gamma.iter().map(|g| parse_rat(g)).collect::<anyhow::Result<_>>()?;
            if gamma.len() != rs.rank() {
                bail!("γ must have {} eigenvalues, got {}", rs.rank(), gamma.len());
            }
            let q = satake_core::exactalg::rat(p as i64, 1);
            let rep: VirtualChar = if let Some(n) = rs.gl_n() {
                let mut std_rep = VirtualChar::zero(n);
                for i in 0..n {
                    let mut e = vec![0i64; n];
                    e[i] = 1;
                    std_rep.add_term(&e, 1);
                }
                std_rep
            } else {
                adjoint_char(&rs)
            };
            let value = l_factor(&rep, &gamma, &q, s)?;
            let criterion = whittaker_model_criterion(&rs, &gamma, &q);
            let mut poles = Vec::new();
            for t in -pole_bound..=pole_bound {
                if matches!(l_factor(&rep, &gamma, &q, t)?, LFactor::Pole) {
                    poles.push(t);
                }
            }
            let (value_str, is_pole) = match &value {
                LFactor::Value(v) => (v.to_string(), false),
                LFactor::Pole => ("pole".to_string(), true),
            };
            let doc = json!({
                "schema": "lgamma/1",
                "rs": label,
                "gamma": gamma.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "q": p,
                "s": s,
                "value": value_str,
                "pole": is_pole,
                "whittaker_model": criterion,
                "poles_scanned": poles,
            });
            let lines = vec![
                format!("L(s = {s}, γ) = {value_str}"),
                format!("Whittaker-model criterion: {criterion}"),
                if pole_bound > 0 {
                    format!("poles at integer s in [-{pole_bound}, {pole_bound}]: {poles:?}")
                } else {
                    String::new()
                },
            ]
            .into_iter()
            .filter(|l| !l.is_empty())
            .collect();
            Ok(finish_value(json, doc, lines, expect.as_deref()))
        }
        Cmd::Stalks { rs, lambda, json, expect } => {
            let (rs, label) = rs.build()?;
            let ctx = HeckeCtx::new(&rs);
            let rows = stalk_table(&ctx, &lambda)?;
            let mut row_docs = Vec::new();
            for row in &rows {
                let entries: Vec<Value> = row
                    .entries
                    .iter()
                    .map(|(d, c)| Ok(json!([d, int_to_i64(c)?])))
                    .collect::<anyhow::Result<_>>()?;
                row_docs.push(json!({"mu": row.mu, "stalk": entries}));
            }
            let doc = json!({
                "schema": "stalk-table/1",
                "rs": label,
                "lambda": lambda,
                "rows": row_docs,
            });
            let lines = row_docs.iter().map(|r| r.to_string()).collect();
            Ok(finish_value(json, doc, lines, expect.as_deref()))
        }
    }
}
