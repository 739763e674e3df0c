//   Copyright 2026 The recess Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

//! `recess`: recession analysis of open convex sets from the command line.
//!
//! Exit codes: 0 success, 2 malformed input or usage, 3 domain error (for
//! example a base point outside the set), 4 failed verification.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use recess_core::counterexample::{escape_profile, EpsRule, SweepConfig, SystemKind};
use recess_core::recession::{analyze, analyze_sampled, ray_length, Params, RayLength};
use recess_core::samplers;
use recess_core::scalar::{format_rational, parse_rational};
use recess_core::schema::parse_set;
use recess_core::suites::parse_suites;
use recess_core::{ConvexSet, Error, NormKind, Scalar, Vector};

const EXIT_PARSE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "recess",
    version,
    about = "Recession structure of open convex sets"
)]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, env = "RECESS_SEED", default_value_t = 0)]
    seed: u64,
    /// Norm override (l1, l2, linf); defaults to the one in the input.
    #[arg(long, global = true)]
    norm: Option<NormKind>,
    /// Numeric tolerance for non-exact comparisons.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,
    /// The bisection oracle stops at ray length 2^EXP.
    #[arg(long = "tmax-exp", global = true, default_value_t = 40)]
    tmax_exp: u32,
    /// Initial clustering radius for limit directions.
    #[arg(long = "cluster-eps", global = true, default_value_t = 1e-6)]
    cluster_eps: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Recession report (JSON) for a set description.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Use the bisection oracle on N seeded random directions instead of
        /// the exact cone.
        #[arg(long, value_name = "N")]
        sampled: Option<usize>,
    },
    /// Length of the ray from a base point, e.g. `--base 0,0 --dir 1,1/2`.
    Ray {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        base: String,
        #[arg(long, allow_hyphen_values = true)]
        dir: String,
    },
    /// Escape profile (CSV) of the strip-set family across dimensions.
    Counterexample {
        /// Ascending dimensions, comma separated.
        #[arg(long, default_value = "2,4,8,16,32,64")]
        dims: String,
        /// linear, quadratic, or a positive constant.
        #[arg(long, default_value = "linear")]
        eps: String,
        /// orthonormal or perturbed (seeded by --seed).
        #[arg(long, default_value = "orthonormal")]
        system: String,
        /// Keep only the first K functionals.
        #[arg(long, value_name = "K")]
        truncate: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run property suites: all, prop21, obs22, thm23, prop34, prop41.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidInput(_) => EXIT_PARSE,
            Error::Internal(_) => EXIT_VERIFY,
            _ => EXIT_DOMAIN,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn parse_failure(message: String) -> Failure {
    Failure {
        code: EXIT_PARSE,
        message,
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn params(cli: &Cli) -> CliResult<Params> {
    if !(cli.tolerance > 0.0 && cli.tolerance < 1.0) {
        return Err(parse_failure("--tolerance must lie in (0, 1)".into()));
    }
    if cli.cluster_eps.is_nan() || cli.cluster_eps <= 0.0 {
        return Err(parse_failure("--cluster-eps must be positive".into()));
    }
    if cli.tmax_exp > 1000 {
        return Err(parse_failure("--tmax-exp must be at most 1000".into()));
    }
    let defaults = Params::default();
    Ok(Params {
        tolerance: cli.tolerance,
        cap_exponent: cli.tmax_exp,
        cluster_eps: cli.cluster_eps,
        cluster_eps_max: defaults.cluster_eps_max.max(cli.cluster_eps),
        ..defaults
    })
}

fn load(cli: &Cli, file: &Path) -> CliResult<ConvexSet> {
    let text =
        fs::read_to_string(file).map_err(|e| parse_failure(format!("{}: {e}", file.display())))?;
    let set = parse_set(&text).map_err(|e| parse_failure(format!("{}: {e}", file.display())))?;
    Ok(match cli.norm {
        Some(n) => set.with_norm(n),
        None => set,
    })
}

fn parse_vector(flag: &str, text: &str, dim: usize) -> CliResult<Vector> {
    let coords = text
        .split(',')
        .map(|c| parse_rational(c.trim()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| parse_failure(format!("--{flag}: {e}")))?;
    if coords.len() != dim {
        return Err(parse_failure(format!(
            "--{flag}: expected {dim} coordinates, got {}",
            coords.len()
        )));
    }
    Ok(Vector::new(coords))
}

fn emit(text: &str, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure {
            code: EXIT_DOMAIN,
            message: format!("{}: {e}", path.display()),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> CliResult<()> {
    let params = params(cli)?;
    match &cli.command {
        Command::Analyze { file, out, sampled } => {
            let set = load(cli, file)?;
            let report = match sampled {
                Some(n) => {
                    let mut rng = samplers::rng(cli.seed);
                    let dirs: Vec<Vector> = (0..*n)
                        .map(|_| samplers::random_direction(&mut rng, set.dim()))
                        .collect();
                    analyze_sampled(&set, &dirs, &params)?
                }
                None => analyze(&set)?,
            };
            let mut json = serde_json::to_string_pretty(&report)
                .map_err(|e| Failure::from(Error::Internal(e.to_string())))?;
            json.push('\n');
            emit(&json, out.as_deref())
        }
        Command::Ray { file, base, dir } => {
            let set = load(cli, file)?;
            let z = parse_vector("base", base, set.dim())?;
            let u = parse_vector("dir", dir, set.dim())?;
            if !set.is_inside(&z)? {
                return Err(Error::NotInSet.into());
            }
            println!("{}", ray_line(&ray_length(&set, &z, &u, &params)?));
            Ok(())
        }
        Command::Counterexample {
            dims,
            eps,
            system,
            truncate,
            out,
        } => {
            let dims = dims
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| parse_failure(format!("--dims: {e}")))?;
            let system = match system.to_ascii_lowercase().as_str() {
                "orthonormal" => SystemKind::Orthonormal,
                "perturbed" => SystemKind::Perturbed { seed: cli.seed },
                other => return Err(parse_failure(format!("--system: unknown system '{other}'"))),
            };
            let config = SweepConfig {
                eps: eps.parse::<EpsRule>()?,
                system,
                norm: cli.norm.unwrap_or_default(),
                truncate: *truncate,
            };
            let profile = escape_profile(&dims, &config, &params)?;
            emit(&profile.to_csv(), out.as_deref())
        }
        Command::Verify { suite } => {
            let suites = parse_suites(suite)?;
            let mut failed = false;
            for s in suites {
                let r = s.run(cli.seed, &params)?;
                println!("{}: {} passed, {} failed", r.name, r.passed, r.failed);
                for f in &r.failures {
                    println!("  {f}");
                }
                failed |= !r.ok();
            }
            if failed {
                return Err(Failure {
                    code: EXIT_VERIFY,
                    message: "verification failed".into(),
                });
            }
            Ok(())
        }
    }
}

fn ray_line(len: &RayLength) -> String {
    match len {
        RayLength::Infinite => "infinite".into(),
        RayLength::ExceedsCap { cap } => format!("beyond cap {}", format_rational(cap)),
        RayLength::Finite { value, binding } => {
            let mut s = match value {
                Scalar::Exact(q) if q.is_integer() => format_rational(q),
                Scalar::Exact(q) => format!("{} = {}", value.to_f64(), format_rational(q)),
                Scalar::Approx(x) => format!("{x}"),
            };
            if let Some(i) = binding {
                s.push_str(&format!(" (binding n={})", i + 1));
            }
            s
        }
    }
}
