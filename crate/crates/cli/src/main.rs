//! `primdisk` command-line interface.
//!
//! Exit codes: 0 success or primitive, 1 negative verdict or failed sweep,
//! 2 validation or parse error, 3 contractible input to `witness`.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use primdisk::pqseq::{LensParams, PqSequence, DEFAULT_VERIFY_THRESHOLD};
use primdisk::primitivity::{canonical_primitive, detect_obstruction, whitehead_trace, Verdict};
use primdisk::record::{to_record, SWEEP_SCHEMA, TRACE_SCHEMA};
use primdisk::replacement::witness;
use primdisk::structure::{classify, report};
use primdisk::sweep::{self, CheckSummary, Execution, DEFAULT_SEED};
use primdisk::{ReplacementError, Word};

#[derive(Parser)]
#[command(
    name = "primdisk",
    version,
    about = "Primitive elements and primitive disk complexes of lens spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    #[value(alias = "structured")]
    Json,
    Dot,
}

#[derive(Args)]
struct LensArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    q: u64,
}

impl LensArgs {
    fn params(&self) -> Result<LensParams, Failure> {
        LensParams::new(self.p, self.q).map_err(|e| Failure::Invalid(e.to_string()))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the (p,q)-sequence w_0..w_p.
    Sequence {
        #[command(flatten)]
        lens: LensArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Oracle-check every word when p is at most this.
        #[arg(long, default_value_t = DEFAULT_VERIFY_THRESHOLD)]
        verify_threshold: u64,
    },
    /// Decide primitivity of a word (exit 0 primitive, 1 not).
    Primitive {
        word: String,
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print w(m, n).
    Canonical {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Contractibility of P(V).
    Classify {
        #[command(flatten)]
        lens: LensArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Full structure report for P(V).
    Report {
        #[command(flatten)]
        lens: LensArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build the disconnection witness strip (exit 3 if P(V) is contractible).
    Witness {
        #[command(flatten)]
        lens: LensArgs,
        /// Shorthand for --format dot.
        #[arg(long)]
        dot: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare the four-primitives formula with the oracle for one (p,q).
    FourPrimitives {
        #[command(flatten)]
        lens: LensArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Property sweep over all coprime (p,q) with p <= pmax.
    Sweep {
        #[arg(long, default_value_t = 40)]
        pmax: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random words per randomized check.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long)]
        sequential: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Invalid(String),
    Contractible,
}

fn no_dot(format: Format) -> Result<(), Failure> {
    if format == Format::Dot {
        return Err(Failure::Invalid("--format dot is only supported by witness".into()));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Sequence {
            lens,
            format,
            verify_threshold,
        } => {
            no_dot(format)?;
            let seq = PqSequence::with_threshold(lens.params()?, verify_threshold);
            match format {
                Format::Json => print!("{}", seq.to_record()),
                _ => print!("{}", seq.to_table()),
            }
            Ok(0)
        }
        Command::Primitive { word, trace, format } => {
            no_dot(format)?;
            let w = Word::parse(&word).map_err(|e| Failure::Invalid(e.to_string()))?;
            let t = whitehead_trace(&w);
            match format {
                Format::Json => {
                    let body = serde_json::json!({
                        "word": w.to_string(),
                        "verdict": t.verdict,
                        "obstruction": detect_obstruction(&w),
                        "trace": trace.then_some(&t),
                    });
                    print!("{}", to_record(TRACE_SCHEMA, &body));
                }
                _ => {
                    if trace {
                        print!("{}", t.to_log());
                    } else {
                        println!("{}", t.verdict);
                    }
                }
            }
            Ok(if t.verdict == Verdict::Primitive { 0 } else { 1 })
        }
        Command::Canonical { m, n, format } => {
            no_dot(format)?;
            let w = canonical_primitive(m, n).map_err(|e| Failure::Invalid(e.to_string()))?;
            match format {
                Format::Json => {
                    let body = serde_json::json!({ "m": m, "n": n, "word": w.to_string() });
                    print!("{}", to_record("primdisk.canonical/1", &body));
                }
                _ => println!("{w}"),
            }
            Ok(0)
        }
        Command::Classify { lens, format } => {
            no_dot(format)?;
            let params = lens.params()?;
            let r = report(params);
            match format {
                Format::Json => print!("{}", r.to_record()),
                _ => {
                    let verdict = if classify(params) {
                        "contractible"
                    } else {
                        "not contractible"
                    };
                    println!("L({}, {}): P(V) is {verdict}", params.p, params.q);
                    println!("case: {}", r.case_id.id());
                    println!("summary: {}", r.summary);
                }
            }
            Ok(0)
        }
        Command::Report { lens, format } => {
            no_dot(format)?;
            let r = report(lens.params()?);
            match format {
                Format::Json => print!("{}", r.to_record()),
                _ => print!("{}", r.to_text()),
            }
            Ok(0)
        }
        Command::Witness { lens, dot, format } => {
            let strip = witness(lens.params()?).map_err(|e| match e {
                ReplacementError::ContractibleInput => Failure::Contractible,
                other => Failure::Invalid(other.to_string()),
            })?;
            match (dot, format) {
                (true, _) | (_, Format::Dot) => print!("{}", strip.to_dot()),
                (_, Format::Json) => print!("{}", strip.to_record()),
                _ => print!("{}", strip.to_text()),
            }
            Ok(0)
        }
        Command::FourPrimitives { lens, format } => {
            no_dot(format)?;
            let seq = PqSequence::with_threshold(lens.params()?, u64::MAX);
            let oracle = seq.oracle_indices().expect("verified");
            let agree = oracle == seq.primitive_indices;
            match format {
                Format::Json => {
                    let body = serde_json::json!({
                        "params": seq.params,
                        "formula": seq.primitive_indices,
                        "oracle": oracle,
                        "agree": agree,
                    });
                    print!("{}", to_record("primdisk.four-primitives/1", &body));
                }
                _ => {
                    println!("formula: {:?}", seq.primitive_indices);
                    println!("oracle:  {oracle:?}");
                    println!("{}", if agree { "agree" } else { "DISAGREE" });
                }
            }
            Ok(if agree { 0 } else { 1 })
        }
        Command::Sweep {
            pmax,
            seed,
            samples,
            sequential,
            format,
        } => {
            no_dot(format)?;
            if pmax < 2 {
                return Err(Failure::Invalid("--pmax must be at least 2".into()));
            }
            let exec = if sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            };
            let checks: Vec<CheckSummary> = vec![
                sweep::four_primitives_sweep(pmax, exec),
                sweep::symmetry_sweep(pmax, exec),
                sweep::invariance_sweep(pmax, exec),
                sweep::contractibility_sweep(pmax, exec),
                sweep::witness_sweep(pmax, exec),
                sweep::obstruction_soundness(seed, samples, 30, exec),
                sweep::substitution_preservation(seed, samples, 30, exec),
            ];
            let ok = checks.iter().all(CheckSummary::passed);
            match format {
                Format::Json => {
                    let body = serde_json::json!({ "pmax": pmax, "seed": seed, "passed": ok, "checks": checks });
                    print!("{}", to_record(SWEEP_SCHEMA, &body));
                }
                _ => {
                    for c in &checks {
                        let status = if c.passed() { "ok" } else { "FAIL" };
                        println!(
                            "{:<26} {:<4} checked {:>6}  hits {:>6}",
                            c.name, status, c.checked, c.hits
                        );
                        for f in c.failures.iter().take(10) {
                            println!("    counterexample: {f}");
                        }
                    }
                }
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Contractible) => {
            eprintln!("P(V) is contractible; no witness exists");
            ExitCode::from(3)
        }
    }
}
