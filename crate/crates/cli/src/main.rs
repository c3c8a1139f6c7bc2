use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;
use spiked_core::measure::{bracket_normalized, bracket_raw, gram, MeasureError, MeasureSpec};
use spiked_core::operators::{energy, wavefunction, wavefunctions, StateLabel};

use spiked::format::{self, OutputFormat};
use spiked::verify;

/// Exact wavefunctions, brackets and bases of discretely spiked harmonic oscillators.
#[derive(Parser, Debug)]
#[command(name = "spiked", version)]
struct Cli {
    /// Decimal places for rendered brackets.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    digits: u32,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
    /// How many states or energies to list.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    count: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Wavefunctions f(l, k) of oscillator l.
    Gen {
        #[arg(long)]
        l: u32,
        /// A single state instead of the first --count.
        #[arg(long)]
        k: Option<u32>,
    },
    /// Scalar product of two states; --dim 0 is the full line, n >= 1 radial.
    Bracket {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        a: StateLabel,
        #[arg(long)]
        b: StateLabel,
        #[arg(long)]
        normalized: bool,
    },
    /// Square-integrability of the first --count states.
    Physical {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        l: u32,
    },
    /// Gram matrix of the admissible states k <= kmax.
    Gram {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        kmax: u32,
    },
    /// Orthogonal bases (staggered classes) of oscillator l.
    Bases {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        kmax: u32,
    },
    /// The first --count energies of oscillator l.
    Spectrum {
        #[arg(long)]
        l: u32,
    },
    /// Run a self-check suite.
    Verify {
        #[arg(value_enum)]
        suite: verify::Suite,
        #[arg(long, default_value_t = 2026)]
        seed: u64,
    },
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error("{0} verification suite(s) failed")]
    Verify(usize),
}

fn lines(items: impl IntoIterator<Item = String>) -> String {
    items.into_iter().map(|s| s + "\n").collect()
}

fn run(cli: Cli) -> Result<String, Failure> {
    let fmt = cli.format;
    let out = match cli.command {
        Command::Gen { l, k } => {
            let states: Vec<_> = match k {
                Some(k) => vec![wavefunction(l, k)],
                None => wavefunctions(l).take(cli.count as usize).collect(),
            };
            match fmt {
                OutputFormat::Plain => lines(states.iter().map(format::series_plain)),
                OutputFormat::Latex => lines(states.iter().map(format::series_latex)),
                OutputFormat::Json => {
                    let v = if k.is_some() {
                        format::series_json(&states[0])
                    } else {
                        json!(states.iter().map(format::series_json).collect::<Vec<_>>())
                    };
                    lines([v.to_string()])
                }
            }
        }
        Command::Bracket { dim, a, b, normalized } => {
            let spec = MeasureSpec::new(dim);
            if normalized {
                let v = bracket_normalized(spec, a, b, cli.digits)?;
                match fmt {
                    OutputFormat::Json => lines([json!({ "decimal": v }).to_string()]),
                    _ => lines([v]),
                }
            } else {
                let v = bracket_raw(spec, a, b)?;
                let decimal = v.to_decimal(cli.digits);
                match fmt {
                    OutputFormat::Plain => lines([decimal]),
                    OutputFormat::Latex => lines([format::scalar_latex(&v)]),
                    OutputFormat::Json => {
                        let mut obj = format::scalar_json(&v);
                        obj["decimal"] = json!(decimal);
                        lines([obj.to_string()])
                    }
                }
            }
        }
        Command::Physical { dim, l } => {
            let spec = MeasureSpec::new(dim);
            let flags: Vec<bool> = wavefunctions(l).take(cli.count as usize).map(|f| spec.admits(&f)).collect();
            match fmt {
                OutputFormat::Json => lines([json!(flags).to_string()]),
                OutputFormat::Plain => {
                    lines([flags.iter().map(|&b| if b { "True" } else { "False" }).collect::<Vec<_>>().join(" ")])
                }
                OutputFormat::Latex => {
                    let items: Vec<_> = flags.iter().map(|&b| if b { "\\mathrm{T}" } else { "\\mathrm{F}" }).collect();
                    lines([items.join(", ")])
                }
            }
        }
        Command::Gram { dim, l, kmax } => {
            let report = gram(MeasureSpec::new(dim), l, kmax);
            match fmt {
                OutputFormat::Plain => format::gram_plain(&report),
                OutputFormat::Json => lines([format::gram_json(&report).to_string()]),
                OutputFormat::Latex => format::gram_latex(&report),
            }
        }
        Command::Bases { dim, l, kmax } => {
            let report = gram(MeasureSpec::new(dim), l, kmax);
            let classes = report.partition().map(format::table_order);
            match (fmt, classes) {
                (OutputFormat::Json, Some(c)) => {
                    lines([json!({ "dim": dim, "l": l, "step": report.step(), "bases": c }).to_string()])
                }
                (OutputFormat::Json, None) => lines([json!({ "dim": dim, "l": l, "bases": "none" }).to_string()]),
                (OutputFormat::Latex, Some(c)) => format::bases_latex(l, &c),
                (_, c) => lines([format::partition_plain(c.as_deref())]),
            }
        }
        Command::Spectrum { l } => {
            let es: Vec<u64> = (0..cli.count).map(|k| energy(l, k).value()).collect();
            match fmt {
                OutputFormat::Json => lines([json!(es).to_string()]),
                OutputFormat::Plain => lines([es.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")]),
                OutputFormat::Latex => lines([es.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")]),
            }
        }
        Command::Verify { suite, seed } => {
            let reports: Vec<_> = suite.expand().into_iter().map(|s| verify::run(s, seed)).collect();
            let text = lines(reports.iter().map(|r| r.to_string()));
            let failed = reports.iter().filter(|r| !r.passed()).count();
            if failed > 0 {
                print!("{text}");
                return Err(Failure::Verify(failed));
            }
            text
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
