use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sympow::harness::report::{exit_code, render_verify, Format};
use sympow::harness::run::render_series;
use sympow::{
    height, minimal_primes, parse_ideal_spec, run_fit, run_series, run_verify, symbolic_power, Corpus,
    Error, HilbertEngine, IdealSpec, Settings,
};

/// Symbolic powers, Hilbert series and quasi-polynomial fits for monomial ideals.
#[derive(Parser)]
#[command(name = "sympow", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format: table, csv or json.
    #[arg(long, global = true, default_value = "table")]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Window {
    /// Largest n sampled.
    #[arg(long, default_value_t = Settings::default().nmax)]
    nmax: u32,
    /// Largest period tried by the fitter.
    #[arg(long, default_value_t = Settings::default().g_max)]
    gmax: usize,
    /// Vanishing differences required per residue class.
    #[arg(long, default_value_t = Settings::default().min_tail)]
    min_tail: usize,
}

impl Window {
    fn settings(&self) -> Settings {
        Settings { nmax: self.nmax, g_max: self.gmax, min_tail: self.min_tail }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the ideals in canonical form with height and minimal primes of I.
    Show { file: PathBuf },
    /// Minimal generators of I^n.
    Power {
        file: PathBuf,
        #[arg(long)]
        n: u32,
    },
    /// Minimal generators of (I : J).
    Colon { file: PathBuf },
    /// Minimal generators of (I : J^∞).
    Saturate { file: PathBuf },
    /// Hilbert numerator, dimension and multiplicity of A/I.
    Hilbert { file: PathBuf },
    /// Minimal generators of I_n(J) = (I^n : J^∞).
    Symbolic {
        file: PathBuf,
        #[arg(long)]
        n: u32,
    },
    /// Table of n, f(n), dim and generator count of I_n(J).
    Series {
        file: PathBuf,
        #[command(flatten)]
        window: Window,
    },
    /// Fit a quasi-polynomial to f(n).
    Fit {
        file: PathBuf,
        #[command(flatten)]
        window: Window,
    },
    /// Check every corpus entry against the stabilization statements.
    Verify {
        corpus: PathBuf,
        #[command(flatten)]
        window: Window,
    },
}

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InsufficientSamples(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: String) -> Failure {
    Failure { code: 1, message }
}

fn load_spec(path: &Path) -> Result<IdealSpec, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(parse_ideal_spec(&text)?)
}

fn generators(ideal: &sympow::MonomialIdeal, format: Format) -> String {
    match format {
        Format::Json => {
            let gens: Vec<String> = ideal.gens().iter().map(|g| g.display(ideal.ring()).to_string()).collect();
            serde_json::to_string(&gens).expect("strings serialize") + "\n"
        }
        Format::Csv => {
            let mut out = String::from("generator\n");
            for g in ideal.gens() {
                out.push_str(&g.display(ideal.ring()).to_string());
                out.push('\n');
            }
            out
        }
        Format::Table => format!("{}\n", ideal.display()),
    }
}

/// Returns the text to print and the exit code.
fn execute(cli: &Cli) -> Result<(String, u8), Failure> {
    let engine = HilbertEngine::new();
    let format = cli.format;
    let text = match &cli.command {
        Command::Show { file } => {
            let spec = load_spec(file)?;
            let mut out = spec.to_file_string();
            if !spec.i.is_zero() && !spec.i.is_unit() {
                let primes: Vec<String> =
                    minimal_primes(&spec.i)?.iter().map(|p| p.display(&spec.ring).to_string()).collect();
                out.push_str(&format!("# height {}\n# minimal primes {}\n", height(&spec.i)?, primes.join(" ")));
            }
            out.push_str(&format!("# equigenerated {}\n", spec.i.is_equigenerated()));
            out
        }
        Command::Power { file, n } => generators(&load_spec(file)?.i.power(*n), format),
        Command::Colon { file } => {
            let spec = load_spec(file)?;
            generators(&spec.i.colon_ideal(spec.require_j()?)?, format)
        }
        Command::Saturate { file } => {
            let spec = load_spec(file)?;
            generators(&spec.i.saturate_ideal(spec.require_j()?)?, format)
        }
        Command::Symbolic { file, n } => {
            let spec = load_spec(file)?;
            generators(&symbolic_power(&spec.i, spec.require_j()?, *n)?, format)
        }
        Command::Hilbert { file } => {
            let spec = load_spec(file)?;
            let data = engine.quotient_ring_data(&spec.i)?;
            match format {
                Format::Table => format!(
                    "numerator  {}\ndenominator (1 - z)^{}\ndim        {}\ne0         {}\n",
                    data.numerator, data.ambient_d, data.module_dim, data.e0
                ),
                Format::Csv => format!(
                    "numerator,ambient_d,dim,e0\n{},{},{},{}\n",
                    data.numerator, data.ambient_d, data.module_dim, data.e0
                ),
                Format::Json => {
                    let coeffs: Vec<String> = data.numerator.coeffs().iter().map(ToString::to_string).collect();
                    let value = serde_json::json!({
                        "numerator": coeffs,
                        "ambient_d": data.ambient_d,
                        "dim": data.module_dim,
                        "e0": data.e0.to_string(),
                    });
                    serde_json::to_string_pretty(&value).expect("json") + "\n"
                }
            }
        }
        Command::Series { file, window } => {
            let rows = run_series(&load_spec(file)?, &window.settings(), &engine)?;
            render_series(&rows, format)
        }
        Command::Fit { file, window } => run_fit(&load_spec(file)?, &window.settings(), &engine)?.render(format),
        Command::Verify { corpus, window } => {
            let corpus = Corpus::load(corpus)?;
            let records = run_verify(&corpus, &window.settings(), &engine)?;
            let code = exit_code(&records) as u8;
            return Ok((render_verify(&records, format), code));
        }
    };
    Ok((text, 0))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{text}");
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
