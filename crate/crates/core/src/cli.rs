//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 capacity error,
//! 3 invariance-suite violation (or failed consistency check).

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::burnside::{BurnsideContext, ConsistencyReport};
use crate::invariants::{self, InvariantError, SuiteConfig};
use crate::liering::{lemma7_basis_legend, lemma7_summary};
use crate::linkio::{
    closed_braid_presentation, parse_braid_with_strands, parse_pd, pd_presentation, two_cable,
    LinkError, LinkPresentation,
};
use crate::words::FreeWord;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAPACITY: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "burnside", version, about = "Third Burnside groups of links")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Braid word, e.g. "(1 2 3 4)^10"
    #[arg(long, group = "source")]
    pub braid: Option<String>,
    /// PD file: lines `X over under_in under_out`, or standard `X[i,j,k,l]`
    #[arg(long, group = "source")]
    pub pd: Option<PathBuf>,
    /// Relators over x1..xm separated by `;`, e.g. "x1^3; x1 x2 x1^-1 x2^-1"
    #[arg(long, group = "source")]
    pub relators: Option<String>,
    /// Take the blackboard 2-parallel of the braid before closing it
    #[arg(long)]
    pub two_cable: bool,
    /// Strand count for the braid (default: largest generator + 1)
    #[arg(long)]
    pub strands: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order of B_L(3), closure ranks, homology and verdict
    Order(InputArgs),
    /// Rank of H_1 of the double branched cover with Z/3 coefficients
    H1(InputArgs),
    /// Weight-3 coordinates of the closed 5-braid relators in B(4,3)
    Lemma7 {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Random 3-moves must not change the report
    Invariance {
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        max_strands: usize,
        #[arg(long, default_value_t = 20)]
        max_length: usize,
        /// Insert squares instead of cubes (harness self-test)
        #[arg(long, hide = true)]
        corrupt: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Polycyclic consistency checks for B(n,3), n = 1..=5
    Consistency {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<LinkError> for Failure {
    fn from(e: LinkError) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        let code = match e {
            InvariantError::Capacity { .. } => EXIT_CAPACITY,
            InvariantError::Burnside(crate::burnside::BurnsideError::Capacity { .. }) => {
                EXIT_CAPACITY
            }
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn presentation(args: &InputArgs) -> Result<(LinkPresentation, String), Failure> {
    match (&args.braid, &args.pd, &args.relators) {
        (Some(text), None, None) => {
            let mut b = parse_braid_with_strands(text, args.strands)?;
            let mut label = text.clone();
            if args.two_cable {
                b = two_cable(&b);
                label = format!("two-cable({text})");
            }
            Ok((closed_braid_presentation(&b), label))
        }
        (None, Some(path), None) => {
            if args.two_cable || args.strands.is_some() {
                return Err(usage("--two-cable and --strands apply to --braid only"));
            }
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            let d = parse_pd(&text)?;
            Ok((pd_presentation(&d), path.display().to_string()))
        }
        (None, None, Some(text)) => {
            if args.two_cable {
                return Err(usage("--two-cable applies to --braid only"));
            }
            let relators = text
                .split(';')
                .map(|r| r.parse::<FreeWord>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| usage(e.to_string()))?;
            Ok((
                LinkPresentation::from_relators(relators, args.strands),
                text.clone(),
            ))
        }
        _ => Err(usage("give exactly one of --braid, --pd, --relators")),
    }
}

fn cmd_order(args: &InputArgs) -> Result<String, Failure> {
    let (p, label) = presentation(args)?;
    let mut report = invariants::burnside_group(&p)?;
    report.input = Some(label);
    Ok(match args.format {
        Format::Text => format!("{}# {}\n", report.to_text(), report.narrative()),
        Format::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
    })
}

fn cmd_h1(args: &InputArgs) -> Result<String, Failure> {
    let (p, label) = presentation(args)?;
    let rank = invariants::h1_z3(&p);
    Ok(match args.format {
        Format::Text => format!("input: {label}\nh1_rank: {rank}\n"),
        Format::Json => {
            serde_json::to_string_pretty(&json!({ "input": label, "h1_rank": rank }))
                .expect("serializable")
                + "\n"
        }
    })
}

fn cmd_lemma7(format: Format) -> String {
    let s = lemma7_summary();
    match format {
        Format::Text => {
            let mut out = format!("basis: {}\n", lemma7_basis_legend());
            for (i, row) in s.rows.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
                out += &format!("P{}: {}\n", i + 1, cells.join(" "));
            }
            out += &format!("determinant: {}\nrank: {}\n", s.determinant, s.rank);
            out
        }
        Format::Json => serde_json::to_string_pretty(&s).expect("serializable") + "\n",
    }
}

fn cmd_invariance(config: &SuiteConfig, format: Format) -> Result<(String, bool), Failure> {
    let report = invariants::invariance_suite(config)?;
    let passed = report.passed();
    let out = match format {
        Format::Json => {
            serde_json::to_string_pretty(&json!({
                "passed": passed,
                "report": report,
            }))
            .expect("serializable")
                + "\n"
        }
        Format::Text => {
            let mut out = format!(
                "trials: {}\nseed: {}\nmax_strands: {}\nmax_length: {}\nviolations: {}\nresult: {}\n",
                report.trials,
                report.seed,
                report.max_strands,
                report.max_length,
                report.violations.len(),
                if passed { "PASS" } else { "FAIL" }
            );
            if let Some(c) = report.violations.first() {
                out += &format!(
                    "counterexample: trial {} on {} strands\nbefore: {}\nafter: {}\nbefore_invariants: {:?}\nafter_invariants: {:?}\n",
                    c.trial, c.strands, c.before, c.after, c.before_invariants, c.after_invariants
                );
            }
            out
        }
    };
    Ok((out, passed))
}

fn cmd_consistency(max_n: usize, format: Format) -> Result<(String, bool), Failure> {
    let reports: Vec<(usize, ConsistencyReport)> = (1..=max_n)
        .map(|n| {
            BurnsideContext::new(n)
                .map(|ctx| (ctx.dimension(), ctx.consistency_check()))
                .map_err(InvariantError::from)
        })
        .collect::<Result<_, _>>()?;
    let passed = reports.iter().all(|(_, r)| r.passed);
    let out = match format {
        Format::Json => {
            let rows: Vec<_> = reports
                .iter()
                .map(|(dim, r)| json!({ "n": r.n, "ambient_exponent": dim, "report": r }))
                .collect();
            serde_json::to_string_pretty(&rows).expect("serializable") + "\n"
        }
        Format::Text => reports
            .iter()
            .map(|(dim, r)| match &r.first_violation {
                None => format!(
                    "n={}: pass ({} checks, |B(n,3)| = 3^{})\n",
                    r.n, r.checks, dim
                ),
                Some(v) => format!("n={}: FAIL {}\n", r.n, v),
            })
            .collect(),
    };
    Ok((out, passed))
}

/// Runs the CLI on `args` (including the program name), writing to the
/// given streams, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match &cli.command {
        Command::Order(args) => cmd_order(args).map(|s| (s, true)),
        Command::H1(args) => cmd_h1(args).map(|s| (s, true)),
        Command::Lemma7 { format } => Ok((cmd_lemma7(*format), true)),
        Command::Invariance {
            trials,
            seed,
            max_strands,
            max_length,
            corrupt,
            format,
        } => {
            if *trials == 0 {
                Err(usage("--trials must be at least 1"))
            } else if *max_strands < 2 || *max_strands > crate::burnside::MAX_GENERATORS + 1 {
                Err(usage("--max-strands must be between 2 and 31"))
            } else {
                let config = SuiteConfig {
                    trials: *trials,
                    max_strands: *max_strands,
                    max_length: *max_length,
                    seed: *seed,
                    corrupt: *corrupt,
                };
                cmd_invariance(&config, *format)
            }
        }
        Command::Consistency { max_n, format } => cmd_consistency(*max_n, *format),
    };
    match result {
        Ok((text, passed)) => {
            let _ = out.write_all(text.as_bytes());
            if passed {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
