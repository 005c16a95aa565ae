//! Argument definitions and command dispatch.

use std::fs;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperlift_core::arith::{format_rational, parse_rational, ApproxScalar, Polynomial, Rational, DEFAULT_PRECISION};
use hyperlift_core::hyperseries::{classify_poisedness, parametric_excess, series_coefficients};
use hyperlift_core::qpoly::{
    bold_q, hat_q2, hat_q2_special, negated_roots, negated_roots_q2, p_poly, q_poly, BoldFamily, QFamily,
};
use hyperlift_core::summations::{
    verify_bailey1, verify_bailey2, verify_ext_whipple, verify_ext_whipple_limit, verify_gs_pairing,
    verify_kummer_ext, verify_p_generating_function, verify_r_forms, verify_sheppard, verify_whipple43,
    BaileyParams, RFamily, Variant, WhippleParams,
};
use hyperlift_core::transforms::{build_identity, identity_params, verify_transform, Params};
use hyperlift_core::{Error, Result};
use serde_json::json;

use crate::output::{emit_report, exit_status, Format};
use crate::series_file::SeriesDescription;
use crate::suite::{self, mutated_identity, verify_numeric, CaseError, Entry, SuiteConfig};

/// Environment variable holding the default working precision in bits.
pub const PRECISION_ENV: &str = "HYPERLIFT_PRECISION";

/// Identities whose parameters involve √3 and so only run numerically.
pub const NUMERIC_ONLY: [&str; 2] = ["linconstraint2", "curious"];

#[derive(Parser, Debug)]
#[command(name = "hyperlift", version, about = "Verify extended quadratic and cubic hypergeometric transformations")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: Format,
    /// Working precision (bits) for numeric mode.
    #[arg(long, global = true, env = PRECISION_ENV, default_value_t = DEFAULT_PRECISION)]
    pub precision: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a weight polynomial (constant term last in text, first in JSON).
    Qpoly(PolyArgs),
    /// Print the negated roots of a weight polynomial.
    Roots(PolyArgs),
    /// Verify a registry transformation as truncated power series.
    VerifyTransform(TransformArgs),
    /// Verify a terminating summation identity.
    VerifySummation(SummationArgs),
    /// Run the seeded randomized acceptance battery.
    Suite(SuiteArgs),
    /// Expand a series described in a JSON file.
    Series(SeriesArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "Q2")]
    Q2,
    #[value(name = "Q3")]
    Q3,
    #[value(name = "Q3p")]
    Q3p,
    #[value(name = "BQ2")]
    Bq2,
    #[value(name = "BQ3")]
    Bq3,
    #[value(name = "BQ3p")]
    Bq3p,
    #[value(name = "hatQ2")]
    HatQ2,
    /// `P_k(n; A, B)` with `A = --a`, `B = --b`.
    #[value(name = "P")]
    P,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Q2 => "Q2",
            Family::Q3 => "Q3",
            Family::Q3p => "Q3p",
            Family::Bq2 => "BQ2",
            Family::Bq3 => "BQ3",
            Family::Bq3p => "BQ3p",
            Family::HatQ2 => "hatQ2",
            Family::P => "P",
        }
    }
}

/// Rational parameter flags shared by the verification commands.
#[derive(Args, Debug, Default, Clone)]
pub struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub e: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub f: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<String>,
    /// `sin θ` for "curious".
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    /// `±1` for "linconstraint2".
    #[arg(long, allow_hyphen_values = true)]
    pub sign: Option<String>,
}

impl ParamArgs {
    fn given(&self) -> Vec<(&'static str, &String)> {
        [
            ("a", &self.a),
            ("b", &self.b),
            ("c", &self.c),
            ("d", &self.d),
            ("e", &self.e),
            ("f", &self.f),
            ("w", &self.w),
            ("s", &self.s),
            ("sign", &self.sign),
        ]
        .into_iter()
        .filter_map(|(n, v)| v.as_ref().map(|v| (n, v)))
        .collect()
    }

    fn get(&self, name: &str) -> Result<Rational> {
        self.opt(name)?.ok_or_else(|| Error::Parse(format!("missing --{name}")))
    }

    fn opt(&self, name: &str) -> Result<Option<Rational>> {
        self.given().into_iter().find(|(n, _)| *n == name).map(|(_, v)| parse_rational(v)).transpose()
    }

    fn params(&self) -> Result<Params<Rational>> {
        self.given()
            .into_iter()
            .try_fold(Params::new(), |p, (n, v)| Ok(p.with(n, parse_rational(v)?)))
    }
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub k: u32,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Args, Debug)]
pub struct TransformArgs {
    /// Registry name (thmA2, ..., thmC3p, niblett, linconstraint, ...).
    #[arg(long)]
    pub name: String,
    #[arg(long, default_value_t = 0)]
    pub k: u32,
    /// Truncation order `N`.
    #[arg(long, default_value_t = 16)]
    pub order: usize,
    /// Compare numerically at the working precision instead of exactly.
    #[arg(long)]
    pub numeric: bool,
    /// Shift this parameter on the right-hand side only (negative control).
    #[arg(long)]
    pub mutate: Option<String>,
    /// Size of the shift applied by `--mutate`.
    #[arg(long, default_value = "1/7", allow_hyphen_values = true)]
    pub delta: String,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SummationName {
    Sheppard,
    Whipple43,
    R2,
    R3,
    ExtWhipple,
    ExtWhippleLimit,
    Bailey1,
    Bailey2,
    GsPairing,
    Kummer,
    PGenfun,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    I,
    Ii,
}

#[derive(Args, Debug)]
pub struct SummationArgs {
    #[arg(long, value_enum)]
    pub name: SummationName,
    #[arg(long, value_enum, default_value = "i")]
    pub variant: VariantArg,
    #[arg(long, default_value_t = 0)]
    pub k: u32,
    /// Size `N` (sheppard, whipple43, R forms, ext-whipple, gs-pairing).
    #[arg(long, default_value_t = 0)]
    pub n: u64,
    /// Size `m` (bailey1, bailey2).
    #[arg(long, default_value_t = 0)]
    pub m: u64,
    /// gs-pairing: the identity paired with its companion.
    #[arg(long, default_value = "thmA2")]
    pub base: String,
    /// gs-pairing: the `k = 0` companion; it takes --a --b (--c), the base
    /// takes its remaining parameters from --d (--e).
    #[arg(long, default_value = "thmC2")]
    pub companion: String,
    /// p-genfun: comma-separated sample values of `n`.
    #[arg(long, default_value = "0,1/2,-3/2,5", allow_hyphen_values = true)]
    pub samples: String,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuitePart {
    All,
    Transforms,
    Specializations,
    Summations,
    Gs,
    Kummer,
    PGenfun,
    NegativeControl,
}

#[derive(Args, Debug)]
pub struct SuiteArgs {
    #[arg(long, default_value_t = 3)]
    pub k_max: u32,
    #[arg(long, default_value_t = 20)]
    pub cases: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 16)]
    pub order: usize,
    #[arg(long, value_enum, default_value = "all")]
    pub only: SuitePart,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    /// JSON series description.
    #[arg(long)]
    pub file: std::path::PathBuf,
    #[arg(long, default_value_t = 8)]
    pub order: usize,
}

/// Text written to stdout and the process exit status.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub status: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, status: 0 }
    }

    fn entries(entries: &[Entry], format: Format) -> Self {
        Outcome { stdout: emit_report(entries, format), status: exit_status(entries) }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Qpoly(a) => qpoly(a, cli.format),
        Command::Roots(a) => roots(a, cli.format, cli.precision),
        Command::VerifyTransform(a) => verify_transform_cmd(a, cli.format, cli.precision),
        Command::VerifySummation(a) => verify_summation_cmd(a, cli.format, cli.precision),
        Command::Suite(a) => Ok(suite_cmd(a, cli.format, cli.precision)),
        Command::Series(a) => series_cmd(a, cli.format),
    }
}

type NamedValues = Vec<(&'static str, Rational)>;

fn build_poly(a: &PolyArgs) -> Result<(Polynomial<Rational>, NamedValues)> {
    let p = &a.params;
    let mut used = vec![("a", p.get("a")?), ("b", p.get("b")?)];
    let (av, bv) = (used[0].1.clone(), used[1].1.clone());
    let mut need_c = || -> Result<Rational> {
        let c = p.get("c")?;
        used.push(("c", c.clone()));
        Ok(c)
    };
    let poly = match a.family {
        Family::Q2 => {
            let mut f = QFamily::q2(a.k, av, bv, need_c()?);
            if let Some(d) = p.opt("d")? {
                f = f.with_d(d.clone());
                used.push(("d", d));
            }
            q_poly(&f)?
        }
        Family::Q3 | Family::Q3p => {
            let mut f = if a.family == Family::Q3 { QFamily::q3(a.k, av, bv) } else { QFamily::q3p(a.k, av, bv) };
            if let Some(d) = p.opt("d")? {
                f = f.with_d(d.clone());
                used.push(("d", d));
            }
            q_poly(&f)?
        }
        Family::Bq2 => bold_q(&BoldFamily::bq2(a.k, av, bv, need_c()?))?,
        Family::Bq3 => bold_q(&BoldFamily::bq3(a.k, av, bv))?,
        Family::Bq3p => bold_q(&BoldFamily::bq3p(a.k, av, bv))?,
        Family::HatQ2 => match p.opt("c")? {
            Some(c) => {
                used.push(("c", c.clone()));
                hat_q2(a.k, &av, &bv, &c)?
            }
            None => hat_q2_special(a.k, &av, &bv)?,
        },
        Family::P => p_poly(a.k, &av, &bv),
    };
    Ok((poly, used))
}

fn params_json(used: &[(&str, Rational)]) -> serde_json::Map<String, serde_json::Value> {
    used.iter().map(|(n, v)| (n.to_string(), json!(format_rational(v)))).collect()
}

fn qpoly(a: &PolyArgs, format: Format) -> Result<Outcome> {
    let (poly, used) = build_poly(a)?;
    Ok(Outcome::ok(match format {
        Format::Text => format!("{poly}\n"),
        Format::Json => {
            let coeffs: Vec<String> = poly.coeffs().iter().map(format_rational).collect();
            format!(
                "{}\n",
                json!({
                    "family": a.family.name(),
                    "k": a.k,
                    "params": params_json(&used),
                    "degree": poly.degree(),
                    "coefficients": coeffs,
                })
            )
        }
    }))
}

fn roots(a: &PolyArgs, format: Format, bits: u32) -> Result<Outcome> {
    let (poly, used) = build_poly(a)?;
    let xs = if matches!(a.family, Family::Q2 | Family::HatQ2) && a.params.d.is_none() {
        negated_roots_q2(&poly, &used[0].1, bits)?
    } else {
        negated_roots(&poly, bits)?
    };
    let shown: Vec<String> = xs.iter().map(|x| format!("{x:.30}")).collect();
    Ok(Outcome::ok(match format {
        Format::Text => shown.iter().map(|s| format!("{s}\n")).collect(),
        Format::Json => format!(
            "{}\n",
            json!({
                "family": a.family.name(),
                "k": a.k,
                "params": params_json(&used),
                "precision_bits": bits,
                "negated_roots": shown,
            })
        ),
    }))
}

fn one(r: Result<hyperlift_core::report::VerificationReport>, format: Format) -> Result<Outcome> {
    Ok(Outcome::entries(&[Ok(r?)], format))
}

fn verify_transform_cmd(a: &TransformArgs, format: Format, bits: u32) -> Result<Outcome> {
    let names = identity_params(&a.name)?;
    let params = a.params.params()?;
    for (n, _) in params.entries() {
        if !names.contains(&n.as_str()) {
            return Err(Error::Parse(format!("`{}` takes no parameter `{n}`", a.name)));
        }
    }
    let delta = parse_rational(&a.delta)?;
    if a.numeric || NUMERIC_ONLY.contains(&a.name.as_str()) {
        let values: Vec<Rational> = params.entries().iter().map(|(_, v)| v.clone()).collect();
        let pn: Vec<&str> = params.entries().iter().map(|(n, _)| n.as_str()).collect();
        if let Some(m) = &a.mutate {
            let approx = pn
                .iter()
                .zip(&values)
                .fold(Params::new(), |p, (n, v)| p.with(n, ApproxScalar::from_rational(v, bits)));
            let id = mutated_identity(&a.name, a.k, &approx, m, &ApproxScalar::from_rational(&delta, bits))?;
            return one(verify_transform(&id, a.order), format);
        }
        return one(verify_numeric(&a.name, a.k, &pn, &values, a.order, bits), format);
    }
    let id = match &a.mutate {
        Some(m) => mutated_identity(&a.name, a.k, &params, m, &delta)?,
        None => build_identity(&a.name, a.k, &params)?,
    };
    one(verify_transform(&id, a.order), format)
}

fn verify_summation_cmd(a: &SummationArgs, format: Format, bits: u32) -> Result<Outcome> {
    let p = &a.params;
    let g = |n: &str| p.get(n);
    let variant = match a.variant {
        VariantArg::I => Variant::I,
        VariantArg::Ii => Variant::II,
    };
    let r = match a.name {
        SummationName::Sheppard => verify_sheppard(a.n, &g("a")?, &g("b")?, &g("d")?, &g("e")?),
        SummationName::Whipple43 => {
            verify_whipple43(a.n, &g("a")?, &g("b")?, &g("c")?, &g("d")?, &g("e")?, p.opt("f")?.as_ref())
        }
        SummationName::R2 => verify_r_forms(RFamily::R2, a.n, a.k, &g("a")?, &g("b")?, Some(&g("c")?)),
        SummationName::R3 => verify_r_forms(RFamily::R3, a.n, a.k, &g("a")?, &g("b")?, None),
        SummationName::ExtWhipple | SummationName::ExtWhippleLimit => {
            let wp = WhippleParams { a: g("a")?, b: g("b")?, c: g("c")?, d: g("d")?, e: g("e")?, f: p.opt("f")? };
            if a.name == SummationName::ExtWhipple {
                verify_ext_whipple(variant, a.k, a.n, &wp)
            } else {
                verify_ext_whipple_limit(a.k, a.n, &wp)
            }
        }
        SummationName::Bailey1 | SummationName::Bailey2 => {
            let bp = BaileyParams { a: g("a")?, b: g("b")?, c: g("c")?, w: g("w")?, d: p.opt("d")? };
            if a.name == SummationName::Bailey1 {
                verify_bailey1(variant, a.k, a.m, &bp)
            } else {
                verify_bailey2(a.k, a.m, &bp)
            }
        }
        SummationName::GsPairing => {
            let cn = identity_params(&a.companion)?;
            let bn = identity_params(&a.base)?;
            let mut t: Vec<Rational> = cn.iter().map(|n| g(n)).collect::<Result<_>>()?;
            for n in ["d", "e"].iter().take(bn.len() - 1) {
                t.push(g(n)?);
            }
            let (b, c) = suite::gs_instance(&a.base, &a.companion, a.k, a.n, &t)?;
            verify_gs_pairing(&b, &c, a.n)
        }
        SummationName::Kummer => verify_kummer_ext(a.k, &g("a")?, &g("b")?, bits),
        SummationName::PGenfun => {
            let samples: Vec<Rational> = a.samples.split(',').map(parse_rational).collect::<Result<_>>()?;
            verify_p_generating_function(a.k, &g("a")?, &g("b")?, &samples)
        }
    };
    one(r, format)
}

fn suite_cmd(a: &SuiteArgs, format: Format, bits: u32) -> Outcome {
    let cfg = SuiteConfig { k_max: a.k_max, cases: a.cases, seed: a.seed, order: a.order, precision_bits: bits };
    let entries = match a.only {
        SuitePart::All => suite::full_suite(&cfg),
        SuitePart::Transforms => suite::transform_suite(&hyperlift_core::transforms::THEOREMS, a.k_max, a.cases, a.seed, a.order),
        SuitePart::Specializations => suite::specialization_suite(a.k_max, a.cases, a.seed, a.order, bits),
        SuitePart::Summations => suite::summation_suite(a.k_max, 6, a.cases, a.seed),
        SuitePart::Gs => suite::gs_suite(a.k_max, 2, a.cases, a.seed),
        SuitePart::Kummer => suite::kummer_suite(bits),
        SuitePart::PGenfun => suite::p_generating_suite(a.k_max, a.cases, a.seed),
        SuitePart::NegativeControl => suite::negative_control_suite(a.k_max.min(1), a.seed, a.order),
    };
    let mut out = Outcome::entries(&entries, format);
    if format == Format::Text {
        let passed = entries.iter().filter(|e| matches!(e, Ok(r) if r.pass)).count();
        out.stdout.push_str(&format!("{passed}/{} passed\n", entries.len()));
    }
    out
}

fn series_cmd(a: &SeriesArgs, format: Format) -> Result<Outcome> {
    let text = fs::read_to_string(&a.file).map_err(|e| Error::Parse(format!("{}: {e}", a.file.display())))?;
    let s = SeriesDescription::from_json(&text)?.to_series()?;
    let coeffs: Vec<String> = series_coefficients(&s, a.order)?.coeffs().iter().map(format_rational).collect();
    let excess = format_rational(&parametric_excess(&s));
    let p = classify_poisedness(&s);
    Ok(Outcome::ok(match format {
        Format::Json => format!(
            "{}\n",
            json!({
                "coefficients": coeffs,
                "excess": excess,
                "well_poised": p.well_poised,
                "nearly_poised": p.nearly_poised,
                "very_well_poised": p.very_well_poised,
                "mn_poised": p.mn_poised,
            })
        ),
        Format::Text => {
            let mut t = format!("coefficients: {}\nexcess: {excess}\n", coeffs.join(", "));
            t.push_str(&format!(
                "well-poised: {}  nearly-poised: {}  very-well-poised: {}",
                p.well_poised, p.nearly_poised, p.very_well_poised
            ));
            if let Some((m, n)) = p.mn_poised {
                t.push_str(&format!("  ({m},{n})-poised"));
            }
            t.push('\n');
            t
        }
    }))
}

/// Rendering of an error that stopped a command before any report.
pub fn error_outcome(e: &Error, format: Format) -> Outcome {
    let entry: Entry = Err(CaseError { label: "error".into(), error: e.clone(), seed: None });
    let stdout = match format {
        Format::Json => emit_report(&[entry], format),
        Format::Text => String::new(),
    };
    Outcome { stdout, status: crate::error_status(e) }
}
