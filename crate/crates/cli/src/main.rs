use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bumpless::bijection::{phi_traced, psi_traced};
use bumpless::biword::enumerate_rcp;
use bumpless::enumerate::enumerate_mbpd;
use bumpless::groth::{groth, Method};
use bumpless::pipedream::enumerate_pd;
use bumpless::verify::{self, Suite};
use bumpless::{Mbpd, Permutation, PipeDream, Rcp};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "bumpless",
    version,
    about = "Marked bumpless pipedreams, compatible pairs and Grothendieck polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every object of a kind as JSON lines.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Keep only objects with this permutation.
        #[arg(long)]
        perm: Option<String>,
        /// Keep only reduced objects.
        #[arg(long)]
        reduced: bool,
    },
    /// Print the compatible pair of a grid.
    Phi {
        #[arg(long)]
        grid: PathBuf,
        #[arg(long)]
        trace: bool,
    },
    /// Print the grid of a compatible pair.
    Psi {
        #[arg(long)]
        biword: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trace: bool,
    },
    /// Print a beta-Grothendieck polynomial.
    Groth {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "recursion")]
        method: MethodArg,
        #[arg(long)]
        json: bool,
    },
    /// Draw a grid or a pipedream.
    Render {
        #[arg(long, conflicts_with = "pd", required_unless_present = "pd")]
        grid: Option<PathBuf>,
        /// Pipedream as "n=3; (1,1),(2,1)".
        #[arg(long)]
        pd: Option<String>,
    },
    /// Run exhaustive self-checks up to size n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Mbpd,
    Pd,
    Rcp,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Recursion,
    Pd,
    Rcp,
    Mbpd,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Recursion => Method::Recursion,
            MethodArg::Pd => Method::Pd,
            MethodArg::Rcp => Method::Rcp,
            MethodArg::Mbpd => Method::Mbpd,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Counts,
    Bijection,
    Moves,
    Polynomials,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Counts => Suite::Counts,
            SuiteArg::Bijection => Suite::Bijection,
            SuiteArg::Moves => Suite::Moves,
            SuiteArg::Polynomials => Suite::Polynomials,
            SuiteArg::All => Suite::All,
        }
    }
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Verification,
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Run = Result<(), Failure>;

fn check_n(flag: &str, n: usize, max: usize) -> Run {
    if n == 0 || n > max {
        return Err(Failure::Usage(format!(
            "--{flag} must be between 1 and {max}, got {n}"
        )));
    }
    Ok(())
}

fn parse_perm(s: &str, n: usize) -> Result<Permutation, Failure> {
    let w: Permutation = s
        .parse()
        .map_err(|e| Failure::Usage(format!("--perm: {e}")))?;
    if w.size() != n {
        return Err(Failure::Usage(format!(
            "--perm {s} has size {}, but --n is {n}",
            w.size()
        )));
    }
    Ok(w)
}

fn read_grid(path: &PathBuf) -> Result<Mbpd, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    text.trim()
        .parse()
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn enumerate(
    out: &mut impl Write,
    kind: Kind,
    n: usize,
    perm: Option<String>,
    reduced: bool,
) -> Run {
    check_n("n", n, 6)?;
    let perm = perm.map(|p| parse_perm(&p, n)).transpose()?;
    let keep = |w: &Permutation, size: usize| {
        perm.as_ref().is_none_or(|p| p == w) && (!reduced || size == w.length())
    };
    match kind {
        Kind::Mbpd => {
            for d in enumerate_mbpd(n) {
                let w = d.permutation();
                if keep(&w, d.heavy_count()) && (!reduced || !d.is_marked()) {
                    let rows: Vec<String> = d.serialize().lines().map(str::to_string).collect();
                    let obj = json!({"n": n, "rows": rows, "weight": d.weight().0, "perm": w.to_string()});
                    writeln!(out, "{obj}")?;
                }
            }
        }
        Kind::Pd => {
            for p in enumerate_pd(n) {
                let w = p.permutation();
                if keep(&w, p.crossings().len()) {
                    let cells: Vec<[usize; 2]> =
                        p.crossings().iter().map(|&(i, j)| [i, j]).collect();
                    let obj = json!({"n": n, "crossings": cells, "weight": p.weight().0, "perm": w.to_string()});
                    writeln!(out, "{obj}")?;
                }
            }
        }
        Kind::Rcp => {
            for b in enumerate_rcp(n) {
                let w = b.permutation();
                if keep(&w, b.len()) {
                    let obj = json!({"n": n, "biword": b.to_string(), "weight": b.weight().0, "perm": w.to_string()});
                    writeln!(out, "{obj}")?;
                }
            }
        }
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Run {
    match cli.command {
        Command::Enumerate {
            kind,
            n,
            perm,
            reduced,
        } => enumerate(out, kind, n, perm, reduced),
        Command::Phi { grid, trace } => {
            let d = read_grid(&grid)?;
            let (b, pops) = phi_traced(&d);
            if trace {
                for (pop, letter) in pops.iter().zip(b.letters()) {
                    for rec in pop {
                        writeln!(out, "{rec}")?;
                    }
                    writeln!(out, "pop {letter}")?;
                }
            }
            writeln!(out, "{b}")?;
            Ok(())
        }
        Command::Psi { biword, n, trace } => {
            check_n("n", n, 64)?;
            let b = Rcp::parse(n, &biword).map_err(|e| Failure::Usage(format!("--biword: {e}")))?;
            let (d, pushes) = psi_traced(&b).map_err(|e| Failure::Usage(e.to_string()))?;
            if trace {
                for (push, letter) in pushes.iter().zip(b.letters().iter().rev()) {
                    writeln!(out, "push {letter}")?;
                    for rec in push {
                        writeln!(out, "{rec}")?;
                    }
                }
            }
            writeln!(out, "{d}")?;
            Ok(())
        }
        Command::Groth {
            perm,
            n,
            method,
            json,
        } => {
            let method = Method::from(method);
            let max = if method == Method::Recursion { 8 } else { 6 };
            check_n("n", n, max)?;
            let w = parse_perm(&perm, n)?;
            let g = groth(&w, method);
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&g.to_json()).expect("polynomial JSON")
                )?;
            } else {
                writeln!(out, "{g}")?;
            }
            Ok(())
        }
        Command::Render { grid, pd } => {
            if let Some(path) = grid {
                write!(out, "{}", read_grid(&path)?.render_ascii())?;
            } else if let Some(s) = pd {
                let p: PipeDream = s
                    .parse()
                    .map_err(|e| Failure::Usage(format!("--pd: {e}")))?;
                write!(out, "{}", p.render())?;
            }
            Ok(())
        }
        Command::Verify { n, suite } => {
            check_n("n", n, 5)?;
            let checks = verify::run(suite.into(), n);
            for c in &checks {
                writeln!(out, "{c}")?;
            }
            if checks.iter().all(|c| c.passed()) {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Verification), _) => ExitCode::from(1),
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        (Ok(()), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
