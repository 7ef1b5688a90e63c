use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use iwasawa_core::group::{GroupElement, GroupModel};
use iwasawa_core::padic::PAdic;
use iwasawa_core::presentation::emit_presentation;
use iwasawa_core::suite::{run_verify, VerifyOptions};
use iwasawa_core::{CartanType, RootSystem};

#[derive(Parser)]
#[command(
    name = "iwasawa",
    version,
    about = "Presentations of Iwasawa algebras of first congruence kernels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit generators, constants and relations as JSON.
    Present {
        #[arg(long = "type")]
        cartan_type: CartanType,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        precision: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Human-readable rendering instead of JSON.
        #[arg(long)]
        plain: bool,
    },
    /// Run the relation and property suites for a type A system.
    Verify {
        #[arg(long = "type")]
        cartan_type: CartanType,
        #[arg(long)]
        prime: u64,
        /// Degree bound N of the truncated algebra.
        #[arg(long)]
        degree: u32,
        /// Coefficient precision m.
        #[arg(long)]
        precision: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Triangular parameters, Lazard coordinates and valuation of a matrix.
    Decompose {
        #[arg(long = "type")]
        cartan_type: CartanType,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        group_precision: u32,
        /// Header `p m n`, then `n` rows of digit strings.
        #[arg(long)]
        matrix: PathBuf,
    },
}

fn read_matrix(path: &PathBuf, p: u64, prec: u32) -> Result<GroupElement> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header: Vec<u64> = lines
        .next()
        .context("empty matrix file")?
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .context("header must be `p m n`")?;
    let [fp, fm, n] = header[..] else {
        bail!("header must be `p m n`");
    };
    if fp != p || fm != u64::from(prec) {
        bail!("matrix file is over {fp}^{fm}, expected {p}^{prec}");
    }
    let rows = lines
        .map(|line| {
            line.split_whitespace()
                .map(|s| Ok(PAdic::parse(p, s)?))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if rows.len() as u64 != n {
        bail!("expected {n} rows, found {}", rows.len());
    }
    Ok(GroupElement::from_rows(rows)?)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Present {
            cartan_type,
            prime,
            precision,
            out,
            plain,
        } => {
            let doc = emit_presentation(cartan_type, prime, precision)?;
            let text = if plain { doc.to_plain() } else { doc.to_json() };
            match out {
                Some(path) => {
                    fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?
                }
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            cartan_type,
            prime,
            degree,
            precision,
            seed,
        } => {
            let report = run_verify(&VerifyOptions {
                cartan_type,
                prime,
                degree,
                precision,
                seed,
            })?;
            print!("{}", report.to_text());
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Decompose {
            cartan_type,
            prime,
            group_precision,
            matrix,
        } => {
            let model = GroupModel::new(RootSystem::new(cartan_type), prime, group_precision)?;
            let g = read_matrix(&matrix, prime, group_precision)?;
            if g.size() != model.size() {
                bail!("{}x{} matrix for type {cartan_type}", g.size(), g.size());
            }
            let omega = model.omega(&g)?;
            let params = model.triangular_decompose(&g)?;
            let coords = model.lazard_coordinates(&g)?;
            println!("omega {omega}");
            println!("triangular parameters");
            for (r, u) in &params.u {
                println!("  u{r} {u}");
            }
            for (i, v) in params.v.iter().enumerate() {
                println!("  v{} {v}", i + 1);
            }
            for (r, w) in &params.w {
                println!("  w{r} {w}");
            }
            println!("lazard coordinates");
            for (label, e) in model.generators().iter().zip(&coords.e) {
                println!("  {} {e}", label.name());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
