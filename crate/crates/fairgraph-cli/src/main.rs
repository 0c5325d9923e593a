//! Command-line front end: check allocations, run the solvers, compute
//! price-of-fairness reports, generate instances, build reduction gadgets,
//! and query the exhaustive oracle — all over line-oriented text files.
//!
//! Reports are `key: value` lines on stdout. Exit codes: `check` uses
//! 0 (holds) / 1 (fails) / 2 (error); `solve` uses 0 (found) / 1 (provably
//! none) / 2 (error); everything else uses 0 / 2.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use fairgraph::format;
use fairgraph::generate;
use fairgraph::instance::{Allocation, GraphicalInstance};
use fairgraph::oracle::{self, Constraint, Fairness, OracleConfig, SearchSpace, WelfareKind, WelfareValue};
use fairgraph::reductions::{self, McisInstance};
use fairgraph::{binary, fpt};

#[derive(Parser)]
#[command(
    name = "fairgraph",
    version,
    about = "Envy-free and EFX allocation of edge items on graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one property of an allocation against an instance.
    ///
    /// Exits 0 when the property holds, 1 when it fails, 2 on any error.
    Check {
        /// Instance file.
        #[arg(long)]
        input: PathBuf,
        /// Allocation file.
        #[arg(long)]
        allocation: PathBuf,
        /// Property to check.
        #[arg(long)]
        property: Property,
    },
    /// Search for an allocation and write it to a file.
    ///
    /// Exits 0 when an allocation is found, 1 when provably none exists,
    /// 2 on any error.
    Solve {
        /// Instance file.
        #[arg(long)]
        input: PathBuf,
        /// Algorithm to run.
        #[arg(long)]
        algo: Algo,
        /// Where to write the allocation.
        #[arg(long)]
        out: PathBuf,
    },
    /// Price of EFX: the unconstrained welfare optimum over the best
    /// welfare any EFX allocation attains, as an exact ratio.
    Pof {
        /// Instance file.
        #[arg(long)]
        input: PathBuf,
        /// Welfare notion.
        #[arg(long)]
        welfare: Welfare,
    },
    /// Generate an instance file.
    Gen {
        /// Instance family.
        #[arg(long)]
        family: Family,
        /// Leaf count for the star family.
        #[arg(long)]
        d: Option<u64>,
        /// Agent count for the random family.
        #[arg(long)]
        agents: Option<usize>,
        /// Edge probability for the random family.
        #[arg(long, default_value_t = 0.5)]
        prob: f64,
        /// Endpoint value set for the random family, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "0,1")]
        values: Vec<u64>,
        /// Seed for the documented random stream.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where to write the instance.
        #[arg(long)]
        out: PathBuf,
    },
    /// Rewrite a multicolored-independent-set input as a fair-division
    /// instance with the same answer.
    Reduce {
        /// Source problem.
        #[arg(long)]
        from: Source,
        /// Fairness question the output instance encodes.
        #[arg(long)]
        target: Target,
        /// MCIS file.
        #[arg(long)]
        input: PathBuf,
        /// Where to write the instance.
        #[arg(long)]
        out: PathBuf,
    },
    /// Exhaustive ground-truth queries.
    Oracle {
        /// Instance file.
        #[arg(long)]
        input: PathBuf,
        /// Query to run.
        #[arg(long)]
        query: Query,
        /// Welfare notion for the max-welfare query.
        #[arg(long, default_value = "util")]
        welfare: Welfare,
        /// Egalitarian threshold for the em-efx-threshold query.
        #[arg(long)]
        threshold: Option<u64>,
        /// State space to enumerate.
        #[arg(long, default_value = "allocations")]
        space: Space,
        /// Maximum number of states one query may visit.
        #[arg(long)]
        budget: Option<u64>,
        /// Worker threads; results are identical for any count.
        #[arg(long)]
        workers: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Ef,
    Efx,
    Orientation,
    Nonwasteful,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    BinaryEf,
    BinaryEfx,
    FptEf,
    OracleEf,
    OracleEfxUm,
}

#[derive(Clone, Copy, ValueEnum)]
enum Welfare {
    Util,
    Egal,
    Nash,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Star,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Mcis,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Ef,
    UmEfx,
    EmEfx,
}

#[derive(Clone, Copy, ValueEnum)]
enum Query {
    ExistsEf,
    ExistsEfx,
    MaxWelfare,
    UmPlusEfx,
    EmEfxThreshold,
}

#[derive(Clone, Copy, ValueEnum)]
enum Space {
    Allocations,
    Orientations,
}

fn name_of<T: ValueEnum>(value: T) -> String {
    value
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Check {
            input,
            allocation,
            property,
        } => check(&input, &allocation, property),
        Command::Solve { input, algo, out } => solve(&input, algo, &out),
        Command::Pof { input, welfare } => pof(&input, welfare),
        Command::Gen {
            family,
            d,
            agents,
            prob,
            values,
            seed,
            out,
        } => gen(family, d, agents, prob, &values, seed, &out),
        Command::Reduce {
            from: Source::Mcis,
            target,
            input,
            out,
        } => reduce(target, &input, &out),
        Command::Oracle {
            input,
            query,
            welfare,
            threshold,
            space,
            budget,
            workers,
        } => oracle_query(&input, query, welfare, threshold, space, budget, workers),
    }
}

fn check(input: &Path, allocation: &Path, property: Property) -> Result<ExitCode> {
    let inst = read_instance(input)?;
    let alloc = read_allocation(allocation)?;
    let holds = match property {
        Property::Ef => inst.is_envy_free(&alloc)?,
        Property::Efx => inst.is_efx(&alloc)?,
        Property::Orientation => inst.is_orientation(&alloc)?,
        Property::Nonwasteful => inst.is_non_wasteful(&alloc)?,
    };
    println!("property: {}", name_of(property));
    println!("holds: {holds}");
    Ok(if holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn solve(input: &Path, algo: Algo, out: &Path) -> Result<ExitCode> {
    let inst = read_instance(input)?;
    let cfg = OracleConfig::default();
    let solution = match algo {
        Algo::BinaryEf => binary::solve_ef_binary(&inst)?,
        Algo::BinaryEfx => Some(binary::solve_efx_binary(&inst)?),
        Algo::FptEf => fpt::solve_ef_fpt(&inst)?,
        Algo::OracleEf => {
            oracle::exists_fair(&inst, Fairness::EnvyFree, SearchSpace::Allocations, &cfg)?
        }
        Algo::OracleEfxUm => oracle::find_um_plus_efx(&inst, &cfg)?,
    };
    println!("algo: {}", name_of(algo));
    match solution {
        Some(alloc) => {
            write_file(out, &format::emit_allocation(&alloc))?;
            println!("found: true");
            println!("out: {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
        None => {
            println!("found: false");
            Ok(ExitCode::from(1))
        }
    }
}

fn pof(input: &Path, welfare: Welfare) -> Result<ExitCode> {
    let inst = read_instance(input)?;
    let ratio = oracle::price_of_efx(&inst, welfare_kind(welfare), &OracleConfig::default())?;
    println!("welfare: {}", name_of(welfare));
    println!("optimum: {}", ratio.numerator);
    println!("fair-optimum: {}", ratio.denominator);
    println!("pof: {ratio}");
    Ok(ExitCode::SUCCESS)
}

fn gen(
    family: Family,
    d: Option<u64>,
    agents: Option<usize>,
    prob: f64,
    values: &[u64],
    seed: u64,
    out: &Path,
) -> Result<ExitCode> {
    let inst = match family {
        Family::Star => {
            let d = d.context("--d is required for the star family")?;
            generate::gen_star(d)?
        }
        Family::Random => {
            let agents = agents.context("--agents is required for the random family")?;
            generate::gen_random(agents, prob, values, seed)?
        }
    };
    write_file(out, &format::emit_instance(&inst))?;
    println!("family: {}", name_of(family));
    println!("agents: {}", inst.n_agents());
    println!("items: {}", inst.n_items());
    println!("out: {}", out.display());
    Ok(ExitCode::SUCCESS)
}

fn reduce(target: Target, input: &Path, out: &Path) -> Result<ExitCode> {
    let mcis = read_mcis(input)?;
    let (inst, threshold) = match target {
        Target::Ef => (reductions::reduce_mcis_to_ef(&mcis)?, None),
        Target::UmEfx => (reductions::reduce_mcis_to_um_efx(&mcis)?, None),
        Target::EmEfx => {
            let (inst, threshold) = reductions::reduce_mcis_to_em_efx(&mcis)?;
            (inst, Some(threshold))
        }
    };
    write_file(out, &format::emit_instance(&inst))?;
    println!("target: {}", name_of(target));
    println!("agents: {}", inst.n_agents());
    println!("items: {}", inst.n_items());
    if let Some(threshold) = threshold {
        println!("threshold: {threshold}");
    }
    println!("out: {}", out.display());
    Ok(ExitCode::SUCCESS)
}

fn oracle_query(
    input: &Path,
    query: Query,
    welfare: Welfare,
    threshold: Option<u64>,
    space: Space,
    budget: Option<u64>,
    workers: Option<usize>,
) -> Result<ExitCode> {
    let inst = read_instance(input)?;
    let mut cfg = OracleConfig::default();
    if let Some(budget) = budget {
        cfg.budget = budget;
    }
    if let Some(workers) = workers {
        cfg.workers = workers;
    }
    let space = match space {
        Space::Allocations => SearchSpace::Allocations,
        Space::Orientations => SearchSpace::Orientations,
    };
    println!("query: {}", name_of(query));
    match query {
        Query::ExistsEf | Query::ExistsEfx => {
            let fairness = if matches!(query, Query::ExistsEf) {
                Fairness::EnvyFree
            } else {
                Fairness::Efx
            };
            let witness = oracle::exists_fair(&inst, fairness, space, &cfg)?;
            println!("exists: {}", witness.is_some());
        }
        Query::MaxWelfare => {
            let outcome = oracle::max_welfare(
                &inst,
                welfare_kind(welfare),
                Constraint::Unconstrained,
                space,
                &cfg,
            )?;
            println!("welfare: {}", name_of(welfare));
            match outcome {
                None => println!("empty: true"),
                Some((WelfareValue::Scalar(v), _)) => println!("optimum: {v}"),
                Some((
                    WelfareValue::Nash {
                        positive_support,
                        product,
                    },
                    _,
                )) => {
                    println!("optimum: {product}");
                    println!("positive-support: {positive_support}");
                }
            }
        }
        Query::UmPlusEfx => {
            println!(
                "um-plus-efx: {}",
                oracle::decide_um_plus_efx(&inst, &cfg)?
            );
        }
        Query::EmEfxThreshold => {
            let threshold =
                threshold.context("--threshold is required for the em-efx-threshold query")?;
            println!("threshold: {threshold}");
            println!(
                "em-efx-threshold: {}",
                oracle::decide_em_efx_threshold(&inst, threshold, &cfg)?
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn welfare_kind(welfare: Welfare) -> WelfareKind {
    match welfare {
        Welfare::Util => WelfareKind::Utilitarian,
        Welfare::Egal => WelfareKind::Egalitarian,
        Welfare::Nash => WelfareKind::Nash,
    }
}

fn read_instance(path: &Path) -> Result<GraphicalInstance> {
    let text = read_file(path)?;
    format::parse_instance(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_allocation(path: &Path) -> Result<Allocation> {
    let text = read_file(path)?;
    format::parse_allocation(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_mcis(path: &Path) -> Result<McisInstance> {
    let text = read_file(path)?;
    format::parse_mcis(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_file(path: &Path, content: &str) -> Result<()> {
    fs::write(path, content).with_context(|| format!("writing {}", path.display()))
}
