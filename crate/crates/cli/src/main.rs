//! Command-line surface for trace codes over `F_q + uF_q`.
//!
//! Subcommands: `info`, `spectrum`, `predict`, `verify`, `periods`,
//! `griesmer`, `scan`. Outputs are byte-stable across runs and worker counts.
//!
//! Exit codes: 0 success/match, 1 mismatch, 2 invalid input, 3 work-budget
//! refusal (always for `spectrum`, under `--strict` for `verify`).

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::fmt::Write as _;
use std::str::FromStr;

use tracecodes::code::{CodeEvaluator, CodeSpec, DEFAULT_WORK_BUDGET};
use tracecodes::cyclotomy::{self, ClosedFormPeriods};
use tracecodes::error::Error;
use tracecodes::spectrum::{CodeParams, SpectrumReport};
use tracecodes::theory::{
    self, GriesmerReport, PredictedDistribution, StratumMismatch, WeightMismatch,
};
use tracecodes::Field;

#[derive(Parser)]
#[command(
    name = "tracecodes",
    about = "Lee weight distributions of trace codes over F_q + uF_q",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Derived parameters of a code specification.
    Info(SpecArgs),
    /// Exact Lee weight distribution by full enumeration.
    Spectrum(SpectrumArgs),
    /// Closed-form prediction of the distribution.
    Predict(SpecArgs),
    /// Cross-validate prediction against enumeration (or representative
    /// stratum weights past the budget).
    Verify(SpectrumArgs),
    /// Exact Gaussian periods, period polynomial and closed-form data (JSON).
    Periods(PeriodArgs),
    /// Griesmer bound check for the Gray image.
    Griesmer(SpecArgs),
    /// Sweep parameter ranges and tabulate the predicted codes.
    Scan(ScanArgs),
}

#[derive(Args)]
struct SpecArgs {
    /// Characteristic (prime).
    #[arg(long)]
    p: u64,
    /// Power with q = p^s.
    #[arg(long)]
    s: u32,
    /// Extension degree with r = q^m.
    #[arg(long)]
    m: u32,
    /// Positive divisor of q - 1.
    #[arg(long)]
    e: u64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Cap on r^2 * n coordinate evaluations.
    #[arg(long, default_value_t = DEFAULT_WORK_BUDGET)]
    budget: u64,
    /// Worker threads for the enumeration.
    #[arg(long)]
    workers: Option<usize>,
    /// Refuse budget downgrades instead of falling back.
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct PeriodArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    s: u32,
    #[arg(long)]
    m: u32,
    /// Order of the cyclotomic classes.
    #[arg(long = "N")]
    order: u64,
}

#[derive(Args)]
struct ScanArgs {
    /// Range for p, as `lo..hi` (inclusive) or a single value.
    #[arg(long)]
    p: RangeArg,
    #[arg(long)]
    s: RangeArg,
    #[arg(long)]
    m: RangeArg,
    #[arg(long)]
    e: RangeArg,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy)]
struct RangeArg {
    lo: u64,
    hi: u64,
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.parse::<u64>()
                .map_err(|_| format!("invalid number `{t}`"))
        };
        if let Some((lo, hi)) = s.split_once("..") {
            Ok(RangeArg {
                lo: parse(lo)?,
                hi: parse(hi)?,
            })
        } else {
            let v = parse(s)?;
            Ok(RangeArg { lo: v, hi: v })
        }
    }
}

fn main() {
    // behave like a classic pipeline tool when the reader goes away
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Info(args) => cmd_info(&args),
        Command::Spectrum(args) => cmd_spectrum(&args),
        Command::Predict(args) => cmd_predict(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Periods(args) => cmd_periods(&args),
        Command::Griesmer(args) => cmd_griesmer(&args),
        Command::Scan(args) => cmd_scan(&args),
    };
    std::process::exit(code);
}

fn invalid(e: &Error) -> i32 {
    eprintln!("error: {e}");
    2
}

fn theorem_label(spec: &CodeSpec) -> String {
    match spec.gcd_em() {
        n @ 1..=4 => format!("gcd={n}"),
        n => format!("general (N = {n})"),
    }
}

fn parse_spec(args: &SpecArgs) -> Result<CodeSpec, i32> {
    CodeSpec::new(args.p, args.s, args.m, args.e).map_err(|e| invalid(&e))
}

// ---------------------------------------------------------------- info

#[derive(Serialize)]
struct InfoOutput {
    params: CodeParams,
    gray_length: u64,
    dimension: u32,
    theorem: String,
}

fn cmd_info(args: &SpecArgs) -> i32 {
    let spec = match parse_spec(args) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let out = InfoOutput {
        params: spec.params(),
        gray_length: spec.gray_length(),
        dimension: spec.dimension(),
        theorem: theorem_label(&spec),
    };
    match args.format {
        Format::Json => println!("{}", to_json(&out)),
        Format::Csv => {
            println!("p,s,m,e,q,r,N,n,gray_length,dimension,theorem");
            let p = &out.params;
            println!(
                "{},{},{},{},{},{},{},{},{},{},{}",
                p.p,
                p.s,
                p.m,
                p.e,
                p.q,
                p.r,
                p.gcd_em,
                p.n,
                out.gray_length,
                out.dimension,
                out.theorem
            );
        }
        Format::Table => {
            print!(
                "{}",
                params_block(&out.params, out.gray_length, out.dimension)
            );
            println!("theorem      {}", out.theorem);
        }
    }
    0
}

// ---------------------------------------------------------------- spectrum

fn cmd_spectrum(args: &SpectrumArgs) -> i32 {
    let spec = match parse_spec(&args.spec) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let field = match spec.build_field() {
        Ok(f) => f,
        Err(e) => return invalid(&e),
    };
    let ev = match CodeEvaluator::new(&field, spec) {
        Ok(ev) => ev,
        Err(e) => return invalid(&e),
    };
    let oracle = match ev.brute_force_spectrum(args.budget, workers(args)) {
        Ok(o) => o,
        Err(e @ Error::WorkBudgetExceeded { .. }) => {
            eprintln!("error: {e}");
            return 3;
        }
        Err(e) => return invalid(&e),
    };
    let report = SpectrumReport::new(
        spec.params(),
        spec.gray_length(),
        spec.dimension(),
        &oracle.distribution,
        oracle.codeword_count,
    );
    emit_report(&report, args.spec.format);
    0
}

fn workers(args: &SpectrumArgs) -> usize {
    args.workers.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    })
}

// ---------------------------------------------------------------- predict

fn cmd_predict(args: &SpecArgs) -> i32 {
    let spec = match parse_spec(args) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let (report, consistent) = match predicted_report(&spec) {
        Ok(v) => v,
        Err(e) => return invalid(&e),
    };
    emit_report(&report, args.format);
    if consistent {
        0
    } else {
        eprintln!("error: dedicated predictor disagrees with the exact-period predictor");
        1
    }
}

/// Dedicated predictor report plus its agreement with the general one.
fn predicted_report(spec: &CodeSpec) -> Result<(SpectrumReport, bool), Error> {
    let field = spec.build_field()?;
    let general = theory::predict_general(&field, spec)?;
    let auto = theory::predict_auto(&field, spec)?;
    let consistent = auto.distribution == general.distribution
        && auto.unit_weight == general.unit_weight
        && auto.class_weights == general.class_weights;
    Ok((auto.report(), consistent))
}

// ---------------------------------------------------------------- verify

#[derive(Serialize)]
struct StratumWeight {
    stratum: String,
    weight: u64,
}

#[derive(Serialize)]
struct VerifyOutput {
    params: CodeParams,
    mode: String,
    predicted: SpectrumReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    observed: Option<SpectrumReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    observed_strata: Option<Vec<StratumWeight>>,
    predictor_cross_check: bool,
    agreement: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    weight_mismatches: Vec<WeightMismatch>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    stratum_mismatches: Vec<StratumMismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    griesmer: Option<GriesmerReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    notice: Option<String>,
}

fn cmd_verify(args: &SpectrumArgs) -> i32 {
    let spec = match parse_spec(&args.spec) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let field = match spec.build_field() {
        Ok(f) => f,
        Err(e) => return invalid(&e),
    };
    let (general, auto) = match predictions(&field, &spec) {
        Ok(v) => v,
        Err(e) => return invalid(&e),
    };
    let cross = auto.distribution == general.distribution
        && auto.unit_weight == general.unit_weight
        && auto.class_weights == general.class_weights;

    let ev = match CodeEvaluator::new(&field, spec) {
        Ok(ev) => ev,
        Err(e) => return invalid(&e),
    };

    let mut out = VerifyOutput {
        params: spec.params(),
        mode: String::new(),
        predicted: auto.report(),
        observed: None,
        observed_strata: None,
        predictor_cross_check: cross,
        agreement: false,
        weight_mismatches: Vec::new(),
        stratum_mismatches: Vec::new(),
        griesmer: None,
        notice: None,
    };

    let required = spec.work_units();
    if required <= args.budget as u128 {
        out.mode = "full".into();
        let oracle = match ev.brute_force_spectrum(args.budget, workers(args)) {
            Ok(o) => o,
            Err(e) => return invalid(&e),
        };
        let cmp = theory::compare(&auto, &oracle.distribution);
        out.agreement = cross && cmp.matches && oracle.codeword_count == spec.r() * spec.r();
        out.weight_mismatches = cmp.mismatches;
        out.observed = Some(SpectrumReport::new(
            spec.params(),
            spec.gray_length(),
            spec.dimension(),
            &oracle.distribution,
            oracle.codeword_count,
        ));
    } else {
        // representative mode still evaluates (N + 1) codewords of n
        // coordinates each; refuse when even that blows the budget
        let rep_work = (spec.gcd_em() + 1) as u128 * spec.n() as u128;
        if args.strict || rep_work > args.budget as u128 {
            eprintln!(
                "error: {}",
                Error::WorkBudgetExceeded {
                    required: if args.strict { required } else { rep_work },
                    budget: args.budget
                }
            );
            return 3;
        }
        out.mode = "representative".into();
        out.notice = Some(format!(
            "work budget exceeded ({required} coordinate evaluations needed, budget \
             {}); falling back to one representative codeword per stratum",
            args.budget
        ));
        let reps = ev.representative_spectrum();
        let cmp = theory::compare_strata(&auto, &reps);
        out.agreement = cross && cmp.matches;
        out.stratum_mismatches = cmp.mismatches;
        out.observed_strata = Some(
            reps.iter()
                .map(|(s, w)| StratumWeight {
                    stratum: s.to_string(),
                    weight: *w,
                })
                .collect(),
        );
    }
    if spec.gcd_em() == 1 {
        out.griesmer = Some(theory::griesmer_check(&spec, auto.report().min_distance));
    }

    let agreement = out.agreement;
    match args.spec.format {
        Format::Json => println!("{}", to_json(&out)),
        Format::Csv => {
            println!("p,s,m,e,q,r,N,n,mode,agreement,predicted_enumerator,observed_enumerator");
            let p = &out.params;
            let observed = out
                .observed
                .as_ref()
                .map(|r| r.distribution().enumerator_string())
                .unwrap_or_else(|| "representative".into());
            println!(
                "{},{},{},{},{},{},{},{},{},{},{},{}",
                p.p,
                p.s,
                p.m,
                p.e,
                p.q,
                p.r,
                p.gcd_em,
                p.n,
                out.mode,
                out.agreement,
                out.predicted.distribution().enumerator_string(),
                observed
            );
        }
        Format::Table => {
            print!(
                "{}",
                params_block(
                    &out.params,
                    out.predicted.gray_length,
                    out.predicted.dimension
                )
            );
            println!("mode         {}", out.mode);
            if let Some(n) = &out.notice {
                println!("notice       {n}");
            }
            println!(
                "predicted    {}",
                out.predicted.distribution().enumerator_string()
            );
            if let Some(obs) = &out.observed {
                println!("observed     {}", obs.distribution().enumerator_string());
                println!("codewords    {}", obs.codeword_count);
            }
            if let Some(strata) = &out.observed_strata {
                for s in strata {
                    println!("measured     {} -> {}", s.stratum, s.weight);
                }
            }
            println!(
                "cross-check  {}",
                if out.predictor_cross_check {
                    "ok"
                } else {
                    "MISMATCH"
                }
            );
            if let Some(g) = &out.griesmer {
                println!(
                    "griesmer     {} (d = {}, sum = {}, n = {})",
                    g.verdict, g.min_distance, g.sum, g.gray_length
                );
            }
            for m in &out.weight_mismatches {
                println!(
                    "mismatch     weight {}: predicted {} observed {}",
                    m.weight, m.predicted, m.observed
                );
            }
            for m in &out.stratum_mismatches {
                println!(
                    "mismatch     {}: predicted {} measured {}",
                    m.stratum, m.predicted, m.measured
                );
            }
            println!("agreement    {}", if agreement { "ok" } else { "MISMATCH" });
        }
    }
    if agreement {
        0
    } else {
        1
    }
}

fn predictions(
    field: &Field,
    spec: &CodeSpec,
) -> Result<(PredictedDistribution, PredictedDistribution), Error> {
    let general = theory::predict_general(field, spec)?;
    let auto = theory::predict_auto(field, spec)?;
    Ok((general, auto))
}

// ---------------------------------------------------------------- periods

#[derive(Serialize)]
struct PeriodParams {
    p: u64,
    s: u32,
    m: u32,
    q: u64,
    r: u64,
    #[serde(rename = "N")]
    order: u64,
}

#[derive(Serialize)]
struct PeriodEntry {
    class: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    rational: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coords: Option<Vec<String>>,
}

#[derive(Serialize)]
struct PeriodsOutput {
    params: PeriodParams,
    periods: Vec<PeriodEntry>,
    period_polynomial: PolynomialOutput,
    sum_of_periods: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form: Option<ClosedFormPeriods>,
}

#[derive(Serialize)]
struct PolynomialOutput {
    coeffs_ascending: Vec<String>,
    display: String,
}

fn cmd_periods(args: &PeriodArgs) -> i32 {
    let build = || -> Result<PeriodsOutput, Error> {
        if args.s == 0 || args.m == 0 {
            return Err(Error::ZeroDegree);
        }
        let k = args.s.checked_mul(args.m).ok_or(Error::SizeBound {
            size: u128::MAX,
            bound: tracecodes::DEFAULT_SIZE_BOUND,
        })?;
        let field = Field::build(args.p, k)?;
        let q = tracecodes::arith::checked_pow(args.p, args.s).expect("q below the size bound");
        let periods = cyclotomy::gaussian_periods(&field, args.order)?;
        let psi = cyclotomy::period_polynomial(&field, args.order)?;
        let mut sum = cyclotomy::CyclotomicInteger::zero(args.p);
        for eta in &periods {
            sum = sum.add(eta);
        }
        let entries = periods
            .iter()
            .enumerate()
            .map(|(i, eta)| match eta.rational_value() {
                Some(v) => PeriodEntry {
                    class: i as u64,
                    rational: Some(v.to_string()),
                    coords: None,
                },
                None => PeriodEntry {
                    class: i as u64,
                    rational: None,
                    coords: Some(eta.coords().iter().map(|c| c.to_string()).collect()),
                },
            })
            .collect();
        let closed_form = cyclotomy::closed_form_periods(args.p, k, args.order).ok();
        Ok(PeriodsOutput {
            params: PeriodParams {
                p: args.p,
                s: args.s,
                m: args.m,
                q,
                r: field.size(),
                order: args.order,
            },
            periods: entries,
            period_polynomial: PolynomialOutput {
                coeffs_ascending: psi.coeffs().iter().map(|c| c.to_string()).collect(),
                display: psi.to_string(),
            },
            sum_of_periods: sum
                .rational_value()
                .map(|v| v.to_string())
                .unwrap_or_else(|| "non-rational".into()),
            closed_form,
        })
    };
    match build() {
        Ok(out) => {
            println!("{}", to_json(&out));
            0
        }
        Err(e) => invalid(&e),
    }
}

// ---------------------------------------------------------------- griesmer

#[derive(Serialize)]
struct GriesmerOutput {
    params: CodeParams,
    report: GriesmerReport,
    verdict: String,
}

fn cmd_griesmer(args: &SpecArgs) -> i32 {
    let spec = match parse_spec(args) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let (report, _) = match predicted_report(&spec) {
        Ok(v) => v,
        Err(e) => return invalid(&e),
    };
    let g = theory::griesmer_check(&spec, report.min_distance);
    let out = GriesmerOutput {
        params: spec.params(),
        report: g,
        verdict: g.verdict.to_string(),
    };
    match args.format {
        Format::Json => println!("{}", to_json(&out)),
        Format::Csv => {
            println!("p,s,m,e,gray_length,dimension,min_distance,sum,verdict");
            println!(
                "{},{},{},{},{},{},{},{},{}",
                args.p,
                args.s,
                args.m,
                args.e,
                g.gray_length,
                g.dimension,
                g.min_distance,
                g.sum,
                g.verdict
            );
        }
        Format::Table => {
            print!(
                "{}",
                params_block(&out.params, spec.gray_length(), spec.dimension())
            );
            println!("min distance {}", g.min_distance);
            println!("griesmer sum {}", g.sum);
            println!("verdict      {}", g.verdict);
        }
    }
    0
}

// ---------------------------------------------------------------- scan

#[derive(Serialize)]
struct ScanRow {
    p: u64,
    s: u32,
    m: u32,
    e: u64,
    q: u64,
    r: u64,
    #[serde(rename = "N")]
    gcd_em: u64,
    n: u64,
    gray_length: u64,
    dimension: u32,
    min_distance: u64,
    num_weights: usize,
    griesmer_verdict: String,
    enumerator: String,
}

const SCAN_HEADER: &str =
    "p,s,m,e,q,r,N,n,gray_length,dimension,min_distance,num_weights,griesmer_verdict,enumerator";

fn cmd_scan(args: &ScanArgs) -> i32 {
    let mut rows: Vec<ScanRow> = Vec::new();
    for p in args.p.lo..=args.p.hi {
        for s in args.s.lo..=args.s.hi {
            for m in args.m.lo..=args.m.hi {
                for e in args.e.lo..=args.e.hi {
                    let (Ok(s32), Ok(m32)) = (u32::try_from(s), u32::try_from(m)) else {
                        continue;
                    };
                    // invalid combinations are not specs; skip quietly
                    let Ok(spec) = CodeSpec::new(p, s32, m32, e) else {
                        continue;
                    };
                    match scan_row(&spec) {
                        Ok(row) => rows.push(row),
                        Err(err) => {
                            // a valid spec that failed downstream: report inline
                            eprintln!("scan: p={p} s={s} m={m} e={e}: {err}");
                        }
                    }
                }
            }
        }
    }
    match args.format {
        Format::Json => println!("{}", to_json(&rows)),
        Format::Csv => {
            println!("{SCAN_HEADER}");
            for row in &rows {
                println!("{}", scan_csv_row(row));
            }
        }
        Format::Table => {
            println!("{}", SCAN_HEADER.replace(',', "  "));
            for row in &rows {
                println!("{}", scan_csv_row(row).replace(',', "  "));
            }
        }
    }
    0
}

fn scan_row(spec: &CodeSpec) -> Result<ScanRow, Error> {
    let field = spec.build_field()?;
    let predicted = theory::predict_auto(&field, spec)?;
    let d = predicted
        .distribution
        .min_nonzero_weight()
        .ok_or_else(|| Error::Internal("empty distribution".into()))?;
    let g = theory::griesmer_check(spec, d);
    Ok(ScanRow {
        p: spec.p(),
        s: spec.s(),
        m: spec.m(),
        e: spec.e(),
        q: spec.q(),
        r: spec.r(),
        gcd_em: spec.gcd_em(),
        n: spec.n(),
        gray_length: spec.gray_length(),
        dimension: spec.dimension(),
        min_distance: d,
        num_weights: predicted.distribution.num_nonzero_weights(),
        griesmer_verdict: g.verdict.to_string(),
        enumerator: predicted.distribution.enumerator_string(),
    })
}

fn scan_csv_row(row: &ScanRow) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        row.p,
        row.s,
        row.m,
        row.e,
        row.q,
        row.r,
        row.gcd_em,
        row.n,
        row.gray_length,
        row.dimension,
        row.min_distance,
        row.num_weights,
        row.griesmer_verdict,
        row.enumerator
    )
}

// ---------------------------------------------------------------- output helpers

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serializes")
}

fn params_block(p: &CodeParams, gray: u64, dim: u32) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "parameters   p={} s={} m={} e={} (q={}, r={}, N={})",
        p.p, p.s, p.m, p.e, p.q, p.r, p.gcd_em
    );
    let _ = writeln!(
        out,
        "length       n={} gray={} dimension={}",
        p.n, gray, dim
    );
    out
}

fn emit_report(report: &SpectrumReport, format: Format) {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => {
            println!("{SCAN_HEADER}");
            let p = &report.params;
            let dist = report.distribution();
            println!(
                "{},{},{},{},{},{},{},{},{},{},{},{},-,{}",
                p.p,
                p.s,
                p.m,
                p.e,
                p.q,
                p.r,
                p.gcd_em,
                p.n,
                report.gray_length,
                report.dimension,
                report.min_distance,
                dist.num_nonzero_weights(),
                dist.enumerator_string()
            );
        }
        Format::Table => {
            print!(
                "{}",
                params_block(&report.params, report.gray_length, report.dimension)
            );
            println!("weight  frequency");
            for e in &report.distribution {
                println!("{:<7} {}", e.weight, e.frequency);
            }
            println!("min distance {}", report.min_distance);
            println!("codewords    {}", report.codeword_count);
            println!("enumerator   {}", report.distribution().enumerator_string());
            if let Some(prov) = &report.provenance {
                println!("provenance   {} ({})", prov.theorem, prov.case);
                if let Some(sign) = &prov.sign {
                    println!("sign         {sign}");
                }
                println!("periods      {:?}", prov.periods);
            }
            if let Some(err) = &report.erratum {
                println!("erratum      {err}");
            }
        }
    }
}
