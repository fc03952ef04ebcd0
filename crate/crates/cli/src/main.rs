use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use cliffcs::analysis::{count_report, epsilon_lower_bound, lde_vs_cscount, su4_lde};
use cliffcs::io::parse_circuit;
use cliffcs::random::random_operator;
use cliffcs::synthesis::synthesize_with_stats;
use cliffcs::{normal_form_automaton, su4_to_so6, synthesize, Error, MatrixFile, SymbolicWord, U4Matrix};

#[derive(Parser)]
#[command(name = "cliffcs", version, about = "CS-optimal synthesis of two-qubit Clifford+CS operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Syllables,
    Gates,
    Both,
}

#[derive(clap::Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Matrix JSON document or circuit file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Gate tokens, e.g. "H1 CS S2 W^3".
    #[arg(long)]
    word: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize a CS-optimal circuit.
    Synth {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "syllables")]
        format: Format,
    },
    /// Print the SO(6) image as a matrix document.
    So6 {
        #[command(flatten)]
        source: Source,
    },
    /// Sample a normal form with a given CS-count.
    Random {
        #[arg(long)]
        cs_count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check a symbolic word such as "G3 CLIFF" against the normal-form automaton.
    Validate {
        #[arg(long)]
        word: String,
    },
    /// Operator counts by CS-count.
    Count {
        #[arg(long)]
        n: u32,
    },
    /// Lower bound on the CS-count of ε-approximations.
    Bound {
        #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
        epsilon: Vec<f64>,
        #[arg(long)]
        csv: bool,
    },
    /// Time synthesis at several CS-counts.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "10,100,1000")]
        counts: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// CSV of (SU(4) lde, CS-count) over random operators.
    LdeStats {
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 100)]
        max_count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotInGroup(_) => 2,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 3, message: message.into() }
}

fn load(source: &Source) -> Result<U4Matrix, Failure> {
    if let Some(word) = &source.word {
        return Ok(parse_circuit(word)?.evaluate());
    }
    let path = source.input.as_ref().expect("clap enforces one source");
    let text =
        std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    if text.trim_start().starts_with('{') {
        Ok(MatrixFile::parse_u4(&text)?)
    } else {
        Ok(parse_circuit(&text)?.evaluate())
    }
}

fn run(command: Command) -> Result<(String, u8), Failure> {
    let mut out = String::new();
    let mut code = 0;
    match command {
        Command::Synth { source, format } => {
            let u = load(&source)?;
            let nf = synthesize(&u)?;
            eprintln!("cs-count: {}", nf.cs_count());
            eprintln!("so6 lde: {}", su4_to_so6(&u)?.lde());
            match su4_lde(&u) {
                Some(k) => eprintln!("su4 lde: {k}"),
                None => eprintln!("su4 lde: n/a (determinant is ±i)"),
            }
            match format {
                Format::Syllables => writeln!(out, "{nf}").unwrap(),
                Format::Gates => writeln!(out, "{}", nf.to_gate_word()).unwrap(),
                Format::Both => {
                    writeln!(out, "syllables: {nf}").unwrap();
                    writeln!(out, "gates: {}", nf.to_gate_word()).unwrap();
                }
            }
        }
        Command::So6 { source } => {
            let v = su4_to_so6(&load(&source)?)?;
            writeln!(out, "{}", MatrixFile::SO6(v).to_json()).unwrap();
        }
        Command::Random { cs_count, seed } => {
            let (u, nf) = random_operator(cs_count, seed);
            let matrix: serde_json::Value = serde_json::from_str(&MatrixFile::U4(u).to_json()).unwrap();
            let doc = serde_json::json!({
                "format_version": 1,
                "cs_count": cs_count,
                "seed": seed,
                "normal_form": nf.to_string(),
                "word": nf.to_word().to_string(),
                "matrix": matrix,
            });
            writeln!(out, "{doc}").unwrap();
        }
        Command::Validate { word } => {
            let w: SymbolicWord = word.parse()?;
            if normal_form_automaton().accepts(&w) {
                writeln!(out, "accept").unwrap();
            } else {
                writeln!(out, "reject").unwrap();
                code = 1;
            }
        }
        Command::Count { n } => {
            let r = count_report(n);
            writeln!(out, "n: {}\nexact: {}\ncumulative: {}", r.n, r.exact, r.cumulative).unwrap();
        }
        Command::Bound { epsilon, csv } => {
            if csv {
                writeln!(out, "epsilon,lower_bound,volume_bound,minimal_n").unwrap();
            }
            for eps in epsilon {
                let b = epsilon_lower_bound(eps).map_err(|e| usage(e.to_string()))?;
                if csv {
                    writeln!(out, "{},{:.6},{:.6},{}", b.epsilon, b.lower_bound, b.volume_bound, b.minimal_n)
                        .unwrap();
                } else {
                    writeln!(
                        out,
                        "epsilon: {}\nlower_bound: {:.6}\nvolume_bound: {:.6}\nminimal_n: {}",
                        b.epsilon, b.lower_bound, b.volume_bound, b.minimal_n
                    )
                    .unwrap();
                }
            }
        }
        Command::Bench { counts, reps, seed } => {
            if reps == 0 {
                return Err(usage("--reps must be positive"));
            }
            writeln!(out, "cs_count,reps,mean_ms,stddev_ms,ring_ops").unwrap();
            for n in counts {
                let (u, _) = random_operator(n, seed);
                let mut times = Vec::with_capacity(reps);
                let mut ops = 0;
                for _ in 0..reps {
                    let t = Instant::now();
                    let (_, stats) = synthesize_with_stats(&u)?;
                    times.push(t.elapsed().as_secs_f64() * 1e3);
                    ops = stats.ring_ops;
                }
                let mean = times.iter().sum::<f64>() / reps as f64;
                let var = times.iter().map(|t| (t - mean).powi(2)).sum::<f64>() / reps as f64;
                writeln!(out, "{n},{reps},{mean:.3},{:.3},{ops}", var.sqrt()).unwrap();
            }
        }
        Command::LdeStats { samples, max_count, seed } => {
            let ops: Vec<U4Matrix> = (0..samples)
                .map(|s| random_operator((s % (max_count as u64 + 1)) as usize, seed.wrapping_add(s)).0)
                .collect();
            let stats = lde_vs_cscount(&ops)?;
            eprintln!(
                "pairs: {}, skipped: {}, violations: {}",
                stats.pairs.len(),
                stats.skipped,
                stats.violations
            );
            out.push_str(&stats.to_csv());
        }
    }
    Ok((out, code))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
