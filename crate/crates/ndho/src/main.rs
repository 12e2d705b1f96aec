use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ndho::cli::{
    error_json, exit_code_for, parse_complex, run, Command, GridSpec, OutputFormat, RunConfig,
    TimeSpec,
};

#[derive(Parser)]
#[command(
    name = "ndho",
    version,
    about = "N-dimensional isotropic oscillator: spectra, ladder algebra, coherent states, wave functions, state counting"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct Common {
    /// Spatial dimension N
    #[arg(long, default_value_t = 3)]
    dim: u32,
    /// Angular momentum label; parity tag (0 even, 1 odd) when N = 1
    #[arg(long, default_value_t = 0)]
    ell: u32,
    /// Oscillator frequency
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    /// Write here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// csv or json
    #[arg(long, default_value = "csv")]
    format: String,
}

#[derive(Args)]
struct GridArgs {
    /// Grid start (default 0)
    #[arg(long)]
    rmin: Option<f64>,
    /// Grid end (default fits the state)
    #[arg(long)]
    rmax: Option<f64>,
    /// Grid spacing (default 1e-3)
    #[arg(long)]
    step: Option<f64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Energy towers of both eigenvalue branches
    Spectrum {
        #[command(flatten)]
        common: Common,
        /// Number of levels per branch
        #[arg(long, default_value_t = 8)]
        count: usize,
    },
    /// Matrix elements of the truncated J3/K+/K- realization
    Rep {
        #[command(flatten)]
        common: Common,
        /// Truncation cutoff (default: OSC_NMAX_DEFAULT or 128)
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Run every invariant for one (N, l) and emit a JSON report
    Verify {
        #[command(flatten)]
        common: Common,
        /// Truncation cutoff (default: OSC_NMAX_DEFAULT or 128)
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Coefficient ladder of a lowering-operator eigenstate
    Coherent {
        #[command(flatten)]
        common: Common,
        /// Complex label as "re,im" or a bare real
        #[arg(long)]
        k: String,
        /// Truncation cutoff (default: OSC_NMAX_DEFAULT or 128)
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Sample an eigenstate (--level) or coherent state (--k) wave function
    Wavefunction {
        #[command(flatten)]
        common: Common,
        /// Eigenstate index n
        #[arg(long)]
        level: Option<usize>,
        /// Complex label as "re,im" or a bare real
        #[arg(long)]
        k: Option<String>,
        #[command(flatten)]
        grid: GridArgs,
        /// Truncation cutoff for the series route
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Probability density frames over a window of the label rotation
    Evolve {
        #[command(flatten)]
        common: Common,
        /// Real label k > 0
        #[arg(long)]
        k: String,
        #[command(flatten)]
        grid: GridArgs,
        /// First frame time
        #[arg(long, default_value_t = 0.0)]
        tstart: f64,
        /// Last frame time (default: one density period pi/omega)
        #[arg(long)]
        tend: Option<f64>,
        /// Number of frames
        #[arg(long, default_value_t = 9)]
        frames: usize,
    },
    /// Cartesian vs spherical state counts per energy level
    Degeneracy {
        /// Spatial dimension N (>= 2)
        #[arg(long, default_value_t = 3)]
        dim: u32,
        /// Largest level of the table
        #[arg(long, default_value_t = 12)]
        nmax: u32,
        /// Write here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        /// csv or json
        #[arg(long, default_value = "csv")]
        format: String,
    },
}

fn build_config(cmd: Cmd) -> ndho::Result<RunConfig> {
    fn apply_common(config: &mut RunConfig, common: &Common) -> ndho::Result<()> {
        config.dim = common.dim;
        config.ell = common.ell;
        config.omega = common.omega;
        config.output = common.output.clone();
        config.format = common.format.parse::<OutputFormat>()?;
        Ok(())
    }
    fn apply_grid(config: &mut RunConfig, grid: &GridArgs, default_r_max: Option<f64>) {
        if grid.rmin.is_some() || grid.rmax.is_some() || grid.step.is_some() {
            config.grid = Some(GridSpec {
                r_min: grid.rmin.unwrap_or(0.0),
                r_max: grid.rmax.or(default_r_max).unwrap_or(12.0),
                step: grid.step.unwrap_or(1e-3),
            });
        }
    }

    Ok(match cmd {
        Cmd::Spectrum { common, count } => {
            let mut config = RunConfig::new(Command::Spectrum);
            apply_common(&mut config, &common)?;
            config.count = count;
            config
        }
        Cmd::Rep { common, nmax } => {
            let mut config = RunConfig::new(Command::Rep);
            apply_common(&mut config, &common)?;
            config.n_max = nmax;
            config
        }
        Cmd::Verify { common, nmax } => {
            let mut config = RunConfig::new(Command::Verify);
            apply_common(&mut config, &common)?;
            config.n_max = nmax;
            config
        }
        Cmd::Coherent { common, k, nmax } => {
            let mut config = RunConfig::new(Command::Coherent);
            apply_common(&mut config, &common)?;
            config.k = Some(parse_complex(&k)?);
            config.n_max = nmax;
            config
        }
        Cmd::Wavefunction {
            common,
            level,
            k,
            grid,
            nmax,
        } => {
            let mut config = RunConfig::new(Command::Wavefunction);
            apply_common(&mut config, &common)?;
            config.level = level;
            config.k = k.as_deref().map(parse_complex).transpose()?;
            config.n_max = nmax;
            apply_grid(&mut config, &grid, None);
            config
        }
        Cmd::Evolve {
            common,
            k,
            grid,
            tstart,
            tend,
            frames,
        } => {
            let mut config = RunConfig::new(Command::Evolve);
            apply_common(&mut config, &common)?;
            config.k = Some(parse_complex(&k)?);
            apply_grid(&mut config, &grid, None);
            config.times = Some(TimeSpec {
                t_start: tstart,
                t_end: tend.unwrap_or(std::f64::consts::PI / common.omega),
                frames,
            });
            config
        }
        Cmd::Degeneracy {
            dim,
            nmax,
            output,
            format,
        } => {
            let mut config = RunConfig::new(Command::Degeneracy);
            config.dim = dim;
            config.n_max = Some(nmax as usize);
            config.output = output;
            config.format = format.parse::<OutputFormat>()?;
            config
        }
    })
}

fn emit(config: &RunConfig, text: &str) -> ndho::Result<()> {
    match &config.output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match build_config(cli.command) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{}", error_json(&e));
            return ExitCode::from(exit_code_for(&e) as u8);
        }
    };
    match run(&config) {
        Ok(outcome) => {
            if let Err(e) = emit(&config, &outcome.text) {
                eprintln!("{}", error_json(&e));
                return ExitCode::from(exit_code_for(&e) as u8);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                // an invariant check failed: report emitted, exit 4
                ExitCode::from(4)
            }
        }
        Err(e) => {
            eprintln!("{}", error_json(&e));
            ExitCode::from(exit_code_for(&e) as u8)
        }
    }
}
