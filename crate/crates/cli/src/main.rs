//! `lefschetz`: classify Hilbert functions, build lex-segment ideals and
//! rank-test the Lefschetz and maximal rank properties.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lefschetz_core::classification::{forces_slp_mrp, forces_wlp, ForcingFailure, ForcingVerdict};
use lefschetz_core::hp_bounds::hp_upper_bound;
use lefschetz_core::lefschetz::{test_property, FormStrategy, Property, PropertyReport, Verdict, DEFAULT_EXHAUSTIVE_BUDGET};
use lefschetz_core::macaulay::{double_bracket, is_o_sequence, t_index};
use lefschetz_core::ring::{hilbert_function, lex_segment_ideal, GradedQuotient, IdealFile};
use lefschetz_core::sweep::{run_sweep, SweepBounds, SweepSummary};
use lefschetz_core::{Error, FieldSpec, HilbertFunction};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "lefschetz", version, about = "Lefschetz and maximal rank properties of artinian algebras")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunConfig {
    /// Seed for sampled forms.
    #[arg(long, global = true, env = "LEFSCHETZ_SEED", default_value_t = 0)]
    seed: u64,
    /// Random forms tried per rank cell.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    trials: u32,
    /// Random coefficients are drawn from [-B, B].
    #[arg(long, global = true, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    coeff_bound: u64,
    /// Degree by which an input quotient must vanish.
    #[arg(long, global = true, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
    degree_cap: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a Hilbert function forces the WLP, SLP and MRP.
    Classify { sequence: String },
    /// Print the lex-segment ideal of an O-sequence.
    Lexseg {
        sequence: String,
        /// Coefficient field characteristic (0 or a prime).
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        /// Also write the ideal as a JSON ideal file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Rank-test one property on an ideal file.
    Test {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, value_enum)]
        property: PropertyArg,
        #[arg(long, value_enum, default_value_t = StrategyArg::Random)]
        strategy: StrategyArg,
        /// Maximum number of forms the exhaustive strategy may enumerate.
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_BUDGET)]
        budget: u64,
    },
    /// Evaluate the bracket-sum bound on H(A/F, p) for a degree-d form F.
    Hpbound { sequence: String, p: usize, d: usize },
    /// Cross-check the forcing criterion against lex-segment algebras.
    Sweep {
        #[arg(long)]
        max_r: u64,
        #[arg(long)]
        max_e: usize,
        #[arg(long)]
        max_h: u64,
        /// Give up (exit 5) beyond this many sequences.
        #[arg(long, default_value_t = 100_000)]
        max_sequences: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyArg {
    Wlp,
    Slp,
    Mrp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Random,
    Lastvar,
    Allones,
    Exhaustive,
}

/// Process exit statuses.
mod status {
    pub const OK: u8 = 0;
    pub const FAILS: u8 = 1;
    pub const MALFORMED: u8 = 2;
    pub const NOT_O_SEQUENCE: u8 = 3;
    pub const INCONCLUSIVE: u8 = 4;
    pub const BUDGET: u8 = 5;
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotAnOSequence | Error::InvalidHilbertFunction(_) => status::NOT_O_SEQUENCE,
            Error::ExhaustiveTooLarge { .. } => status::BUDGET,
            _ => status::MALFORMED,
        };
        Failure { code, message: e.to_string() }
    }
}

fn malformed(message: impl Into<String>) -> Failure {
    Failure { code: status::MALFORMED, message: message.into() }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = &cli.config;
    let outcome = match &cli.command {
        Command::Classify { sequence } => classify(config, sequence),
        Command::Lexseg { sequence, characteristic, output } => lexseg(config, sequence, *characteristic, output.as_ref()),
        Command::Test { ideal, property, strategy, budget } => test(config, ideal, *property, *strategy, *budget),
        Command::Hpbound { sequence, p, d } => hpbound(config, sequence, *p, *d),
        Command::Sweep { max_r, max_e, max_h, max_sequences } => {
            sweep(config, SweepBounds { max_r: *max_r, max_e: *max_e, max_h: *max_h }, *max_sequences)
        }
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn emit_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("output types serialize"));
}

/// Parses `1,3,4,3`: malformed text exits 2, a list that is not a Hilbert
/// function of an artinian algebra exits 3.
fn parse_sequence(text: &str) -> Result<HilbertFunction, Failure> {
    let values = text
        .split(',')
        .map(|v| v.trim().parse::<u64>().map_err(|_| malformed(format!("bad sequence entry {v:?} in {text:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let h = HilbertFunction::new(values)?;
    if !is_o_sequence(&h) {
        return Err(Error::NotAnOSequence.into());
    }
    Ok(h)
}

fn degree_cap(config: &RunConfig) -> usize {
    usize::try_from(config.degree_cap).unwrap_or(usize::MAX)
}

#[derive(Serialize)]
struct Classification {
    sequence: HilbertFunction,
    o_sequence: bool,
    t_index: usize,
    forces_wlp: ForcingVerdict,
    forces_slp_mrp: ForcingVerdict,
}

fn describe(v: &ForcingVerdict, h: &HilbertFunction) -> String {
    match v.failure {
        None => "yes".into(),
        Some(ForcingFailure::Index(i)) => format!("no (growth condition fails at i = {i})"),
        Some(ForcingFailure::SocleWidth) => {
            let t = t_index(h);
            format!("no (h_{t} = {} > 2)", h.at(t))
        }
    }
}

fn classify(config: &RunConfig, text: &str) -> Outcome {
    let h = parse_sequence(text)?;
    let out = Classification {
        t_index: t_index(&h),
        forces_wlp: forces_wlp(&h)?,
        forces_slp_mrp: forces_slp_mrp(&h)?,
        o_sequence: true,
        sequence: h,
    };
    if config.json {
        emit_json(&out);
    } else {
        println!("sequence        {}", out.sequence);
        println!("O-sequence      yes");
        println!("t               {}", out.t_index);
        println!("forces WLP      {}", describe(&out.forces_wlp, &out.sequence));
        println!("forces SLP/MRP  {}", describe(&out.forces_slp_mrp, &out.sequence));
    }
    Ok(status::OK)
}

#[derive(Serialize)]
struct LexSegment {
    sequence: HilbertFunction,
    ideal: IdealFile,
    round_trip: HilbertFunction,
}

fn lexseg(config: &RunConfig, text: &str, characteristic: u64, output: Option<&PathBuf>) -> Outcome {
    let h = parse_sequence(text)?;
    let field = FieldSpec::from_characteristic(characteristic)?;
    let ideal = lex_segment_ideal(&h, field)?;
    let round_trip = hilbert_function(&ideal, h.socle_degree() + 1)?;
    let out = LexSegment { sequence: h, ideal: IdealFile::from(&ideal), round_trip };
    if let Some(path) = output {
        let body = serde_json::to_string_pretty(&out.ideal).expect("ideal files serialize");
        std::fs::write(path, body + "\n").map_err(|e| malformed(format!("cannot write {}: {e}", path.display())))?;
    }
    if config.json {
        emit_json(&out);
    } else {
        println!("{}", out.ideal.gens.join(", "));
        let agrees = if out.round_trip == out.sequence { "matches" } else { "MISMATCH" };
        println!("Hilbert function of the quotient: {} ({agrees})", out.round_trip);
    }
    Ok(if out.round_trip == out.sequence { status::OK } else { status::FAILS })
}

fn strategy_for(config: &RunConfig, arg: StrategyArg, budget: u64) -> FormStrategy {
    match arg {
        StrategyArg::Random => FormStrategy::RandomInt {
            coeff_bound: config.coeff_bound,
            trials: config.trials,
            seed: config.seed,
        },
        StrategyArg::Lastvar => FormStrategy::LastVariablePower,
        StrategyArg::Allones => FormStrategy::AllOnesLinear,
        StrategyArg::Exhaustive => FormStrategy::ExhaustiveFiniteField { budget },
    }
}

fn verdict_status(verdict: Verdict) -> u8 {
    match verdict {
        Verdict::HoldsDeterministic | Verdict::HoldsProbabilistic => status::OK,
        Verdict::FailsObserved => status::FAILS,
        Verdict::Inconclusive => status::INCONCLUSIVE,
    }
}

fn render_report(report: &PropertyReport) -> String {
    let mut s = String::new();
    let property = match report.property {
        Property::Wlp => "WLP",
        Property::Slp => "SLP",
        Property::Mrp => "MRP",
    };
    let verdict = match report.verdict {
        Verdict::HoldsDeterministic => "holds (deterministic)",
        Verdict::HoldsProbabilistic => "holds (probabilistic)",
        Verdict::FailsObserved => "fails (observed)",
        Verdict::Inconclusive => "inconclusive",
    };
    let _ = writeln!(s, "property   {property}");
    let _ = writeln!(s, "verdict    {verdict}{}", if report.certified { ", certified" } else { "" });
    let _ = writeln!(s, "field      {}", report.field);
    let _ = writeln!(s, "hilbert    {}", report.hilbert);
    let strategy = serde_json::to_string(&report.strategy).expect("strategies serialize");
    let _ = writeln!(s, "strategy   {strategy}");
    let deficits: Vec<_> = report.deficits().collect();
    if deficits.is_empty() {
        let _ = writeln!(s, "all {} rank cells maximal", report.entries.len());
    } else {
        let _ = writeln!(s, "rank deficits ({} of {} cells):", deficits.len(), report.entries.len());
        for e in deficits {
            let _ = writeln!(s, "  d={} i={}: rank {} < {}", e.d, e.i, e.best_rank_observed, e.max_possible);
        }
    }
    for note in &report.notes {
        let _ = writeln!(s, "note: {note}");
    }
    s
}

fn test(config: &RunConfig, path: &PathBuf, property: PropertyArg, strategy: StrategyArg, budget: u64) -> Outcome {
    let text = std::fs::read_to_string(path).map_err(|e| malformed(format!("cannot read {}: {e}", path.display())))?;
    let file: IdealFile =
        serde_json::from_str(&text).map_err(|e| malformed(format!("bad ideal file {}: {e}", path.display())))?;
    let quotient = GradedQuotient::new(file.to_ideal()?, degree_cap(config))?;
    let property = match property {
        PropertyArg::Wlp => Property::Wlp,
        PropertyArg::Slp => Property::Slp,
        PropertyArg::Mrp => Property::Mrp,
    };
    let report = test_property(&quotient, property, &strategy_for(config, strategy, budget))?;
    if config.json {
        emit_json(&report);
    } else {
        print!("{}", render_report(&report));
    }
    Ok(verdict_status(report.verdict))
}

#[derive(Serialize)]
struct HpBound {
    sequence: HilbertFunction,
    p: usize,
    d: usize,
    /// `(h_p)_((p, c))` for `c = 0..d`.
    terms: Vec<String>,
    bound: String,
}

fn hpbound(config: &RunConfig, text: &str, p: usize, d: usize) -> Outcome {
    let h = parse_sequence(text)?;
    let bound = hp_upper_bound(&h, p, d)?;
    let terms = match h.at(p) {
        0 => vec!["0".to_string(); d],
        n => (0..d).map(|c| double_bracket(n, p, c).map(|v| v.to_string())).collect::<Result<_, _>>()?,
    };
    let out = HpBound { sequence: h, p, d, terms, bound: bound.to_string() };
    if config.json {
        emit_json(&out);
    } else {
        println!("h_{p} = {}; bound on H(A/F, {p}) for deg F = {d}: {}", out.sequence.at(p), out.bound);
        println!("terms c = 0..{}: {}", d - 1, out.terms.join(" + "));
    }
    Ok(status::OK)
}

fn render_sweep(summary: &SweepSummary) -> String {
    let mut s = String::new();
    let b = summary.bounds;
    let _ = writeln!(s, "bounds        r <= {}, e <= {}, h <= {}", b.max_r, b.max_e, b.max_h);
    let _ = writeln!(s, "sequences     {}", summary.sequences);
    let _ = writeln!(s, "forcing       {}", summary.forcing);
    let _ = writeln!(s, "mismatches    {}", summary.mismatches);
    let _ = writeln!(s, "chain breaks  {}", summary.chain_violations);
    for r in summary.records.iter().filter(|r| r.mismatch() || r.breaks_implication_chain()) {
        let _ = writeln!(s, "  {}: forces={} wlp={:?} slp={:?} mrp={:?}", r.hilbert, r.forces, r.wlp, r.slp, r.mrp);
    }
    s
}

fn sweep(config: &RunConfig, bounds: SweepBounds, budget: u64) -> Outcome {
    let summary = run_sweep(bounds, budget)?;
    if config.json {
        emit_json(&summary);
    } else {
        print!("{}", render_sweep(&summary));
    }
    Ok(if summary.mismatches == 0 && summary.chain_violations == 0 { status::OK } else { status::FAILS })
}
