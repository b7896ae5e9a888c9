//! The `morse-jones` command line. `run` takes the argument vector and
//! returns the exit code with captured output, so it can be tested without
//! spawning a process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand};

use crate::diagram::{
    enumerate_closed, random_diagram, torus_closure, trace_components, unlink, writhe,
};
use crate::diagram::{MorseDiagram, Orientation};
use crate::evaluator::{bracket_sweep, jones_at_root, jones_symbolic};
use crate::moves::{apply_move, move_weight, verify_certificate, Certificate, Direction, Move};
use crate::report::{exceptional_banner, lemma_report, run_bench, to_csv, BoundConstants, Family};
use crate::tqft::{fusion_dim, fusion_dim_verlinde, s_row, theta, verlinde_bound, TqftParams};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CliOutcome {
    /// 0 on success, 1 on a domain error, 2 on a usage error.
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "morse-jones",
    version,
    about = "Exact Jones polynomials of Morse link diagrams"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a `morse v1` file is a closed diagram.
    Validate { file: PathBuf },
    /// Girth, complexity, component count and writhe.
    Stats { file: PathBuf },
    /// Jones polynomial, symbolically (default) or at q = e^{2πi/r}.
    Eval {
        #[arg(long, conflicts_with = "symbolic")]
        r: Option<usize>,
        #[arg(long)]
        symbolic: bool,
        file: PathBuf,
    },
    /// Insert 4r full twists on n adjacent strands at a gap.
    Twist {
        #[arg(long)]
        gap: usize,
        #[arg(long)]
        strand: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_sign)]
        sign: i8,
        #[arg(long)]
        r: usize,
        file: PathBuf,
        /// Write the twisted diagram here instead of printing it.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the one-move certificate.
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// Certificate operations.
    Cert {
        #[command(subcommand)]
        action: CertCommand,
    },
    /// Print a generated diagram.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// List every closed diagram within the bounds.
    Enum {
        #[arg(long)]
        max_events: usize,
        #[arg(long)]
        max_girth: usize,
    },
    /// SU(2) level r-2 data.
    #[command(group(ArgGroup::new("table").args(["theta", "srow", "fusion", "bound"])))]
    Tqft {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        theta: bool,
        #[arg(long)]
        srow: bool,
        #[arg(long, value_name = "N")]
        fusion: Option<usize>,
        #[arg(long, value_name = "G")]
        bound: Option<usize>,
    },
    /// Sweep benchmark over a diagram family, as CSV.
    Bench {
        #[command(subcommand)]
        family: BenchFamily,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Check J(e^{2πi/r}) before and after random twist certificates.
    LemmaReport {
        #[arg(long, value_delimiter = ',', required = true)]
        r: Vec<usize>,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exponent constants for the dimension bound, b·ln c + b'.
        #[arg(long, requires = "bprime")]
        b: Option<f64>,
        #[arg(long, requires = "b")]
        bprime: Option<f64>,
    },
}

#[derive(Subcommand, Debug)]
enum CertCommand {
    Verify {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    Torus { p: usize, q: usize },
    Unlink { m: usize },
    Random { seed: u64, girth: usize, len: usize },
}

#[derive(Subcommand, Debug)]
enum BenchFamily {
    /// torus_closure(P, q) for each q in the comma-separated list.
    Torus {
        p: usize,
        #[arg(value_delimiter = ',')]
        qs: Vec<usize>,
    },
    Random {
        girth: usize,
        count: usize,
        len: usize,
        seed: u64,
    },
    Twist {
        r: usize,
        count: usize,
        seed: u64,
    },
}

fn parse_sign(s: &str) -> Result<i8, String> {
    match s {
        "+" | "+1" | "1" => Ok(1),
        "-" | "-1" => Ok(-1),
        _ => Err(format!("expected + or -, found `{s}`")),
    }
}

struct DomainError(String);

impl<E: std::fmt::Display> From<E> for DomainError {
    fn from(e: E) -> Self {
        DomainError(e.to_string())
    }
}

type CmdResult = Result<String, DomainError>;

pub fn run<I, T>(argv: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                CliOutcome {
                    code,
                    stdout: text,
                    ..Default::default()
                }
            } else {
                CliOutcome {
                    code: 2,
                    stderr: text,
                    ..Default::default()
                }
            };
        }
    };
    match dispatch(cli.cmd) {
        Ok(stdout) => CliOutcome {
            code: 0,
            stdout,
            ..Default::default()
        },
        Err(DomainError(msg)) => CliOutcome {
            code: 1,
            stderr: format!("error: {msg}\n"),
            ..Default::default()
        },
    }
}

fn read(path: &Path) -> Result<String, DomainError> {
    fs::read_to_string(path)
        .map_err(|e| DomainError(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), DomainError> {
    fs::write(path, text).map_err(|e| DomainError(format!("cannot write {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<MorseDiagram, DomainError> {
    MorseDiagram::parse(&read(path)?).map_err(|e| DomainError(format!("{}: {e}", path.display())))
}

/// `1.0000+0.0000i`, with negative zeros printed as zeros.
pub fn format_complex((re, im): (f64, f64)) -> String {
    let clean = |x: f64| if x.abs() < 5e-5 { 0.0 } else { x };
    format!("{:.4}{:+.4}i", clean(re), clean(im))
}

fn format_rep(rep: &[num_bigint::BigInt]) -> String {
    let parts: Vec<String> = rep.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::Validate { file } => {
            let d = load(&file)?;
            Ok(format!("OK events={} girth={}\n", d.len(), d.girth()))
        }
        Command::Stats { file } => {
            let d = load(&file)?;
            let w = writhe(&d, &Orientation::default_for(&d))?;
            Ok(format!(
                "girth={} c={} components={} writhe={w:+}\n",
                d.girth(),
                d.complexity(),
                trace_components(&d).count
            ))
        }
        Command::Eval { r: None, file, .. } => {
            let d = load(&file)?;
            let j = jones_symbolic(&d, &Orientation::default_for(&d))?;
            Ok(format!(
                "bracket = {}\njones = {}\n",
                bracket_sweep(&d),
                j.to_t_string()
            ))
        }
        Command::Eval {
            r: Some(r), file, ..
        } => {
            let d = load(&file)?;
            let ev = jones_at_root(&d, &Orientation::default_for(&d), r)?;
            let mut out = String::new();
            if ev.exceptional {
                let _ = writeln!(out, "{}", exceptional_banner(r));
            }
            let _ = writeln!(out, "r={r} order={}", ev.value.order());
            let _ = writeln!(out, "rep={}", format_rep(ev.value.rep()));
            let _ = writeln!(out, "approx={}", format_complex(ev.value.complex_approx()));
            Ok(out)
        }
        Command::Twist {
            gap,
            strand,
            n,
            sign,
            r,
            file,
            out,
            cert_out,
        } => {
            let d = load(&file)?;
            let m = Move::twist(Direction::Forward, gap, strand, n, sign);
            let e = apply_move(&d, &m, r)?;
            if let Some(path) = cert_out {
                write(&path, &Certificate::new(r, vec![m]).to_text())?;
            }
            match out {
                Some(path) => {
                    write(&path, &e.to_text())?;
                    Ok(format!(
                        "added={} weight={}\n",
                        e.crossing_count() - d.crossing_count(),
                        move_weight(&m, r)
                    ))
                }
                None => Ok(e.to_text()),
            }
        }
        Command::Cert {
            action: CertCommand::Verify { base, target, cert },
        } => {
            let (d, t) = (load(&base)?, load(&target)?);
            let c = Certificate::parse(&read(&cert)?)
                .map_err(|e| DomainError(format!("{}: {e}", cert.display())))?;
            match verify_certificate(&d, &t, &c) {
                Ok(w) => Ok(format!("OK weight={w}\n")),
                Err(e) => Err(DomainError(format!("REJECTED {e}"))),
            }
        }
        Command::Gen { what } => Ok(match what {
            GenCommand::Torus { p, q } if p >= 1 && q >= 1 => torus_closure(p, q),
            GenCommand::Unlink { m } if m >= 1 => unlink(m),
            GenCommand::Random { seed, girth, len } if girth >= 2 && girth % 2 == 0 => {
                random_diagram(seed, girth, len)
            }
            _ => return Err(DomainError("generator parameters out of range".into())),
        }
        .to_text()),
        Command::Enum {
            max_events,
            max_girth,
        } => {
            let mut out = String::new();
            let mut count = 0usize;
            for d in enumerate_closed(max_events, max_girth)? {
                let words: Vec<String> = d.events().iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "{}", words.join(", "));
                count += 1;
            }
            let _ = writeln!(out, "count={count}");
            Ok(out)
        }
        Command::Tqft {
            r,
            theta: show_theta,
            srow,
            fusion,
            bound,
        } => {
            let p = TqftParams::new(r)?;
            let mut out = String::new();
            if p.exceptional {
                let _ = writeln!(out, "{}", exceptional_banner(r));
            }
            if show_theta {
                for a in p.labels() {
                    let t = theta(a, r)?;
                    let e = (a * a + 2 * a) % (4 * r);
                    let _ = writeln!(
                        out,
                        "theta({a}) = zeta_{}^{e} rep={}",
                        4 * r,
                        format_rep(t.rep())
                    );
                }
            } else if srow {
                out.push_str(&s_row(r)?.to_string());
            } else if let Some(n) = fusion {
                let _ = writeln!(
                    out,
                    "fusion_dim(r={r}, n={n}) = {} verlinde={:.12}",
                    fusion_dim(r, n)?,
                    fusion_dim_verlinde(r, n)?
                );
            } else if let Some(g) = bound {
                let _ = writeln!(
                    out,
                    "verlinde_bound(r={r}, g={g}) = {:.12}",
                    verlinde_bound(r, g)?
                );
            } else {
                let _ = writeln!(
                    out,
                    "r={r} level={} labels={} exceptional={}",
                    p.level,
                    p.label_count(),
                    p.exceptional
                );
            }
            Ok(out)
        }
        Command::Bench { family, out } => {
            let family = match family {
                BenchFamily::Torus { p, qs } => Family::Torus { p, qs },
                BenchFamily::Random {
                    girth,
                    count,
                    len,
                    seed,
                } => Family::Random {
                    girth,
                    count,
                    length: len,
                    seed,
                },
                BenchFamily::Twist { r, count, seed } => Family::TwistEnriched { r, count, seed },
            };
            let bad = match &family {
                Family::Torus { p, qs } => *p == 0 || qs.contains(&0),
                Family::Random { girth, .. } => *girth < 2 || girth % 2 == 1,
                Family::TwistEnriched { r, .. } => *r < 3,
            };
            if bad {
                return Err(DomainError("family parameters out of range".into()));
            }
            let csv = to_csv(&run_bench(&family)?);
            match out {
                Some(path) => {
                    write(&path, &csv)?;
                    Ok(format!(
                        "wrote {} rows to {}\n",
                        csv.lines().count() - 1,
                        path.display()
                    ))
                }
                None => Ok(csv),
            }
        }
        Command::LemmaReport {
            r,
            trials,
            seed,
            b,
            bprime,
        } => {
            if let Some(&bad) = r.iter().find(|&&x| x < 3) {
                return Err(DomainError(format!("r must be at least 3, got {bad}")));
            }
            let constants = b
                .zip(bprime)
                .map(|(b, b_prime)| BoundConstants { b, b_prime });
            let rep = lemma_report(&r, trials, seed, constants)?;
            let text = rep.to_text();
            if rep.all_equal() {
                Ok(text)
            } else {
                Err(DomainError(format!("counterexample found\n{text}")))
            }
        }
    }
}
