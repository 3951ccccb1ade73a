use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use grfix::combinatorics::{binomial, Partition};
use grfix::counterexample;
use grfix::grassmann::{dual_check, parse_ideal_text, shuffle_ideal, NilpotentMatrix};
use grfix::groebner::{member_with, Budget, Status};
use grfix::pipeline::{analyze_matrix, run_table, AnalyzeOptions, CellReport};
use grfix::polyring::{QMatrix, Ring};
use grfix::sample::rng;
use grfix::schubert::{self, Basis, RectangularContext};
use grfix::tables::{Expectations, Verdict};
use grfix::Error;

#[derive(Parser)]
#[command(name = "grfix", version, about = "Fixed-point loci of nilpotent matrices on Grassmannians")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Wall-clock budget in seconds for each Gröbner computation.
    #[arg(long, global = true, default_value_t = 300.0, value_name = "N")]
    budget: f64,
    /// Worker threads for table runs (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    /// Seed for randomized verifications.
    #[arg(long, global = true, default_value_t = 0, value_name = "N")]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Target {
    /// Jordan type, e.g. 4,2,2.
    #[arg(long)]
    partition: Option<Partition>,
    /// A nilpotent matrix file: whitespace-separated rationals, one row per line.
    #[arg(long, value_name = "FILE", conflicts_with = "partition")]
    matrix: Option<PathBuf>,
    #[arg(long)]
    l: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print the shuffle equations (or the whole ideal) in text form.
    Shuffle {
        #[command(flatten)]
        target: Target,
        /// Include the Plücker quadrics.
        #[arg(long)]
        ideal: bool,
    },
    /// Compute [σ,δ,γ] for one cell.
    Analyze {
        #[command(flatten)]
        target: Target,
        /// Also count minimal generators in degrees one and two.
        #[arg(long)]
        min_gens: bool,
    },
    /// Recompute a table of cells and compare with the expected values.
    Table {
        #[arg(long)]
        n: usize,
        /// Comma-separated values of l (default: 1..n/2 and every printed column).
        #[arg(long, value_delimiter = ',')]
        l: Option<Vec<usize>>,
        /// Compute and compare σ only.
        #[arg(long)]
        sigma_only: bool,
    },
    /// Decide membership of a polynomial in an ideal.
    Member {
        /// Ideal file with a `# ring p, n=.., l=..` header.
        #[arg(long, value_name = "FILE", conflicts_with = "partition")]
        ideal: Option<PathBuf>,
        /// Use the shuffle ideal of this Jordan type instead.
        #[arg(long, requires = "l")]
        partition: Option<Partition>,
        #[arg(long)]
        l: Option<usize>,
        /// The polynomial, e.g. "p_{1,4,6,8}^2".
        #[arg(long)]
        poly: String,
    },
    /// Check that duality carries the shuffle span for l onto the one for n - l.
    Dual {
        #[arg(long)]
        partition: Partition,
        /// Check only this l (default: every l).
        #[arg(long)]
        l: Option<usize>,
    },
    /// Dimensions and orbit containment for a rectangular Jordan type.
    Schubert {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        /// Omit to list every stratum of the ball.
        #[arg(long)]
        l: Option<usize>,
        /// Lattice partition (default: the dominant one).
        #[arg(long, requires = "l")]
        mu: Option<Partition>,
        #[arg(long, default_value_t = 25)]
        trials: usize,
    },
    /// Verify the non-radical (4,2,2), l = 4 example.
    Counterexample {
        #[arg(long, default_value_t = 25)]
        trials: usize,
    },
}

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCOMPLETE: u8 = 3;

struct Output {
    json: bool,
    text: String,
}

impl Output {
    fn new(json: bool) -> Self {
        Output { json, text: String::new() }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn emit<T: Serialize>(&mut self, value: &T, text: impl FnOnce(&mut Self)) {
        if self.json {
            let s = serde_json::to_string(value).expect("serializable");
            self.line(s);
        } else {
            text(self);
        }
    }
}

fn load_matrix(path: &PathBuf) -> Result<NilpotentMatrix, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    NilpotentMatrix::new(QMatrix::parse(&text)?)
}

fn resolve(target: &Target) -> Result<(NilpotentMatrix, Partition), Error> {
    match (&target.partition, &target.matrix) {
        (Some(p), _) => Ok((NilpotentMatrix::jordan(p)?, p.clone())),
        (None, Some(path)) => {
            let t = load_matrix(path)?;
            let label = t.partition().cloned().unwrap_or_else(Partition::empty);
            Ok((t, label))
        }
        (None, None) => Err(Error::Domain("one of --partition or --matrix is required".into())),
    }
}

fn format_record(r: &grfix::groebner::AnalysisRecord) -> String {
    let mut s = match (r.delta, r.gamma) {
        (Some(d), Some(g)) => format!("[{},{},{}]", r.sigma, d, g),
        _ => format!("[{},?,?]", r.sigma),
    };
    if let (Some(a), Some(b)) = (r.min_linear, r.min_quadrics) {
        s.push_str(&format!(" minimal generators: {a} linear, {b} quadrics"));
    }
    if r.status == Status::Incomplete {
        s.push_str(" incomplete");
    }
    s
}

fn run(cli: &Cli, out: &mut Output) -> Result<u8, Error> {
    let budget = Some(cli.budget);
    match &cli.command {
        Command::Shuffle { target, ideal } => {
            let (t, _) = resolve(target)?;
            let j = shuffle_ideal(&t, target.l)?;
            let ring = j.ring()?;
            let gens = if *ideal { j.generators() } else { j.linear.basis() };
            let lines: Vec<String> = gens.iter().map(|g| ring.display(g)).collect();
            #[derive(Serialize)]
            struct Shuffle<'a> {
                n: usize,
                l: usize,
                sigma: usize,
                generators: &'a [String],
            }
            let value = Shuffle { n: j.n(), l: j.l(), sigma: j.linear.sigma(), generators: &lines };
            out.emit(&value, |o| {
                o.line(format!("# ring p, n={}, l={}", j.n(), j.l()));
                for s in &lines {
                    o.line(s);
                }
            });
            Ok(0)
        }
        Command::Analyze { target, min_gens } => {
            let (t, label) = resolve(target)?;
            let opts = AnalyzeOptions { budget, sigma_only: false, min_gens: *min_gens };
            let r = analyze_matrix(&t, &label, target.l, &opts)?;
            out.emit(&r, |o| o.line(format_record(&r)));
            Ok(if r.status == Status::Incomplete { EXIT_INCOMPLETE } else { 0 })
        }
        Command::Table { n, l, sigma_only } => {
            let data = Expectations::embedded();
            let ls = l.clone().unwrap_or_else(|| {
                let mut ls: Vec<usize> = (1..=n / 2).collect();
                ls.extend(data.ls(*n));
                ls.sort_unstable();
                ls.dedup();
                ls
            });
            if let Some(&bad) = ls.iter().find(|&&x| x > *n) {
                return Err(Error::Domain(format!("l = {bad} exceeds n = {n}")));
            }
            let opts = AnalyzeOptions { budget, sigma_only: *sigma_only, min_gens: false };
            let report = run_table(*n, &ls, &opts, data);
            table_output(out, &report);
            let any = |v| report.iter().any(|c| c.verdict == v);
            Ok(if any(Verdict::Fail) {
                EXIT_MISMATCH
            } else if any(Verdict::Skipped) {
                EXIT_INCOMPLETE
            } else {
                0
            })
        }
        Command::Member { ideal, partition, l, poly } => {
            let (n, l, gens) = match (ideal, partition) {
                (Some(path), _) => {
                    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                    let parsed = parse_ideal_text(&text)?;
                    (parsed.n, parsed.l, parsed.generators)
                }
                (None, Some(p)) => {
                    let l = l.expect("clap enforces --l");
                    let j = shuffle_ideal(&NilpotentMatrix::jordan(p)?, l)?;
                    (j.n(), l, j.generators())
                }
                (None, None) => return Err(Error::Domain("one of --ideal or --partition is required".into())),
            };
            let p = Ring::plucker(n, l)?.parse(poly)?;
            let member = member_with(&p, &gens, binomial(n, l), Budget::seconds(cli.budget))?;
            #[derive(Serialize)]
            struct Member<'a> {
                poly: &'a str,
                member: bool,
            }
            out.emit(&Member { poly, member }, |o| o.line(format!("{member}")));
            Ok(0)
        }
        Command::Dual { partition, l } => {
            let n = partition.size();
            let ls: Vec<usize> = match l {
                Some(l) if *l > n => return Err(Error::Domain(format!("l = {l} exceeds n = {n}"))),
                Some(l) => vec![*l],
                None => (0..=n).collect(),
            };
            #[derive(Serialize)]
            struct Dual {
                l: usize,
                dual: bool,
            }
            let results = ls
                .iter()
                .map(|&l| Ok(Dual { l, dual: dual_check(partition, l)? }))
                .collect::<Result<Vec<_>, Error>>()?;
            out.emit(&results, |o| {
                for r in &results {
                    o.line(format!("l={} {}", r.l, if r.dual { "pass" } else { "FAIL" }));
                }
            });
            Ok(if results.iter().all(|r| r.dual) { 0 } else { EXIT_MISMATCH })
        }
        Command::Schubert { d, r, l, mu, trials } => {
            let ctx = RectangularContext::new(*d, *r, Basis::Power)?;
            match l {
                None => {
                    let strata = schubert::ball_strata(&ctx)?;
                    out.emit(&strata, |o| {
                        for s in &strata {
                            o.line(format!("l={} sigma={} dim={}", s.l, s.sigma, s.delta));
                        }
                    });
                    Ok(0)
                }
                Some(l) => {
                    let rep = schubert::report(&ctx, *l, mu.as_ref(), *trials, &mut rng(cli.seed))?;
                    // the report is JSON-shaped either way
                    out.line(serde_json::to_string(&rep).expect("serializable"));
                    Ok(if rep.contained == Some(false) { EXIT_MISMATCH } else { 0 })
                }
            }
        }
        Command::Counterexample { trials } => {
            let checks = counterexample::run_checks(*trials, &mut rng(cli.seed), Budget::seconds(cli.budget))?;
            out.emit(&checks, |o| {
                for c in &checks {
                    o.line(format!("{} {}", if c.passed { "pass" } else { "FAIL" }, c.name));
                }
            });
            Ok(if checks.iter().all(|c| c.passed) { 0 } else { EXIT_MISMATCH })
        }
    }
}

fn table_output(out: &mut Output, report: &[CellReport]) {
    if out.json {
        for c in report {
            out.line(serde_json::to_string(c).expect("serializable"));
        }
        return;
    }
    for c in report {
        let got = match (&c.record, &c.error) {
            (Some(r), _) => format_record(r),
            (None, Some(e)) => format!("error: {e}"),
            (None, None) => String::new(),
        };
        let verdict = match c.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "skipped",
            Verdict::Unlisted => "-",
        };
        let mut line = format!("{:<16} l={:<2} {:<24} {:<8}", c.lambda.to_string(), c.l, got, verdict);
        if let Some(e) = &c.expected {
            line.push_str(&format!(" expected {e}"));
        }
        if let Some(e) = &c.erratum {
            line.push_str(&format!(" ({e})"));
        }
        out.line(line.trim_end());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let mut out = Output::new(cli.json);
    let code = match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(match e {
                Error::Timeout(_) => EXIT_INCOMPLETE,
                _ => EXIT_USAGE,
            });
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &out.text),
        None => std::io::stdout().write_all(out.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    ExitCode::from(code)
}
