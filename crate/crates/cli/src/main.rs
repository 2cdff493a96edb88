use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cyclecover::format::{parse_instance, parse_partition, write_instance, write_partition};
use cyclecover::instances::{
    amplify, gen_fano_config, gen_mean_instance, gen_random_local, gen_tri_config, gen_triangle_cycle, AmplifyRule,
    IntraRule, Seed,
};
use cyclecover::oracle::{longest_mono_cycle, min_cycle_partition, robustness_level, PartitionTable};
use cyclecover::{verify_partition, ColourId, EdgeColouring, OracleBudget, VerifyOptions};
use cyclecover_cli::error::{read_file, write_file};
use cyclecover_cli::{ramsey_probe, run_experiment, seed_search, solve_with, verify_options, CliError, CliResult};
use cyclecover_cli::{ExperimentConfig, SolverKind};

/// Monochromatic cycle partitions of locally edge-coloured complete graphs.
#[derive(Parser)]
#[command(name = "cyclecover", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        /// Write here instead of stdout.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Add a vertex joined to each old vertex in a colour absent there.
    Amplify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = AmplifyArg::LeastAbsent)]
        rule: AmplifyArg,
        /// Fail instead of using a fresh colour at a vertex seeing every colour.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Partition an instance into monochromatic cycles.
    Solve {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = SolverArg::TwoLocal)]
        solver: SolverArg,
        /// Locality bound for the r-local pipeline.
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the solver trace to stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Exact answers for small instances.
    Oracle {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Query::MinPartition)]
        query: Query,
    },
    /// Check a partition against an instance.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        /// Require cycles of length at least 2 to have distinct colours.
        #[arg(long)]
        distinct: bool,
        #[arg(long)]
        max_cycles: Option<usize>,
    },
    /// Run a seeded campaign described by a TOML file.
    Experiment {
        #[arg(long)]
        config: PathBuf,
    },
    /// Sample r-local colourings for monochromatic cycles of length at least l.
    RamseyProbe {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory for samples without such a cycle.
        #[arg(long, default_value = ".")]
        save_dir: PathBuf,
    },
    /// Search for an s-colour, r-local colouring that stays hard after deleting any vertex.
    SeedSearch {
        #[arg(long)]
        s: usize,
        /// Locality bound; defaults to s - 1.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 200)]
        attempts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Random r-local colouring over s colours.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Three-part 2-local configuration.
    Tri {
        /// Part sizes `a,b,c`.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Draw intra-part colours at random from this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Seven-part configuration indexed by the lines of the Fano plane.
    Fano {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Planted monochromatic triangle cycle.
    Tk {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        colour: u32,
        #[arg(long, default_value_t = 1)]
        bg: u32,
    },
    /// Mean locality at most 2, not 2-local.
    Mean {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AmplifyArg {
    LeastAbsent,
    Fresh,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolverArg {
    TwoLocal,
    TwoMean,
    RLocal,
}

#[derive(Clone, Copy, ValueEnum)]
enum Query {
    MinPartition,
    LongestCycle,
    Robustness,
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => write_file(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_instance(path: &Path) -> CliResult<EdgeColouring> {
    Ok(parse_instance(&read_file(path)?)?)
}

fn generate(family: GenFamily) -> CliResult<EdgeColouring> {
    Ok(match family {
        GenFamily::Random { n, r, s, seed } => gen_random_local(n, r, s, Seed(seed))?,
        GenFamily::Tri { sizes, seed } => {
            let [a, b, c] = sizes[..] else {
                return Err(CliError::Config(format!("--sizes needs 3 values, got {}", sizes.len())));
            };
            let rule = seed.map_or(IntraRule::LowColour, |s| IntraRule::Random(Seed(s)));
            gen_tri_config((a, b, c), rule)?.0
        }
        GenFamily::Fano { sizes, seed } => {
            let parts: [usize; 7] = sizes
                .try_into()
                .map_err(|s: Vec<usize>| CliError::Config(format!("--sizes needs 7 values, got {}", s.len())))?;
            gen_fano_config(parts, Seed(seed))?.0
        }
        GenFamily::Tk { k, colour, bg } => gen_triangle_cycle(k, ColourId(colour), ColourId(bg))?.0,
        GenFamily::Mean { n, seed } => gen_mean_instance(n, Seed(seed))?,
    })
}

/// Exit status: 0 on success, 1 when a report contains a verification failure.
fn run(cli: Cli) -> CliResult<u8> {
    let budget = OracleBudget::from_env();
    match cli.command {
        Command::Gen { family, out } => {
            emit(out.as_deref(), &write_instance(&generate(family)?))?;
        }
        Command::Amplify {
            input,
            rule,
            strict,
            out,
        } => {
            let rule = match rule {
                AmplifyArg::LeastAbsent => AmplifyRule::LeastAbsent,
                AmplifyArg::Fresh => AmplifyRule::Fresh,
            };
            let amplified = amplify(&load_instance(&input)?, rule, strict)?;
            emit(out.as_deref(), &write_instance(&amplified))?;
        }
        Command::Solve {
            input,
            solver,
            r,
            out,
            trace,
        } => {
            let kind = match solver {
                SolverArg::TwoLocal => SolverKind::TwoLocal,
                SolverArg::TwoMean => SolverKind::TwoMean,
                SolverArg::RLocal => SolverKind::RLocal,
            };
            let c = load_instance(&input)?;
            let (p, t) = solve_with(kind, &c, r, &budget)?;
            if trace {
                eprint!("{t}");
            }
            emit(out.as_deref(), &write_partition(&p))?;
            if !verify_partition(&c, &p, verify_options(kind)).valid {
                return Ok(1);
            }
        }
        Command::Oracle { input, query } => {
            let c = load_instance(&input)?;
            match query {
                Query::MinPartition => {
                    let (m, witness) = min_cycle_partition(&c, &budget)?;
                    print!("# minimum = {m}\n{}", write_partition(&witness));
                }
                Query::LongestCycle => {
                    let (len, cycle) = longest_mono_cycle(&c, &budget)?;
                    let vs: Vec<String> = cycle.vertices().iter().map(|v| v.to_string()).collect();
                    println!("length = {len}\ncycle = {}", vs.join(" "));
                }
                Query::Robustness => {
                    let table = PartitionTable::build(&c, &budget)?;
                    println!(
                        "minimum = {}\nrobustness = {}",
                        table.min_cycles_full(),
                        robustness_level(&table)
                    );
                }
            }
        }
        Command::Verify {
            input,
            partition,
            distinct,
            max_cycles,
        } => {
            let c = load_instance(&input)?;
            let p = parse_partition(&read_file(&partition)?)?;
            let opts = VerifyOptions {
                require_cover: true,
                require_distinct_colours: distinct,
                max_cycles,
            };
            let report = verify_partition(&c, &p, opts);
            let colours: Vec<String> = report.colours_used.iter().map(|c| c.to_string()).collect();
            println!(
                "valid = {}\nreason = {}\ncycles = {}\ncolours = {}",
                report.valid,
                report.failure_reason.map_or("-".to_string(), |r| format!("{r:?}")),
                report.cycle_count,
                colours.join(" ")
            );
            if !report.valid {
                return Ok(1);
            }
        }
        Command::Experiment { config } => {
            let cfg = ExperimentConfig::load(&config)?;
            let report = run_experiment(&cfg, &budget)?;
            print!("{}", report.footer());
            if report.failures() > 0 {
                return Ok(1);
            }
        }
        Command::RamseyProbe {
            r,
            l,
            n,
            samples,
            seed,
            save_dir,
        } => {
            let result = ramsey_probe(r, l, n, samples, seed, &budget)?;
            if let Some(w) = &result.warning {
                eprintln!("warning: {w}");
            }
            for (s, c) in &result.misses {
                let path = save_dir.join(format!("ramsey-miss-r{r}-l{l}-n{n}-{s}.txt"));
                write_file(&path, &write_instance(c))?;
                eprintln!("saved {}", path.display());
            }
            print!("{}", result.render());
            if !result.all_found {
                return Ok(1);
            }
        }
        Command::SeedSearch {
            s,
            r,
            n_max,
            attempts,
            seed,
            out,
        } => {
            let r = r.unwrap_or(s.saturating_sub(1));
            match seed_search(s, r, n_max, attempts, seed, &budget)? {
                Some(c) => {
                    eprintln!("found a {}-vertex seed", c.n());
                    emit(out.as_deref(), &write_instance(&c))?;
                }
                None => eprintln!("no seed with s = {s}, r = {r} up to n = {n_max}"),
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
