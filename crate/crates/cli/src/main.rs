//! `corepart`: command-line access to the core-partitions library.
//!
//! Exit codes: 0 success, 1 verification discrepancy, 2 usage or parse
//! error, 3 refused by the resource guard.

mod output;
mod verify;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use core_partitions::{
    count_distinct_core, enumerate_sequences, extremal, family_stats, from_sequence, is_simultaneous_core,
    to_sequence, BetaSet, CoreSequence, Emit, EnumerationQuery, Family, Partition, ResidueProfile,
    ResourceGuard,
};

use crate::output::{Format, Record};
use crate::verify::{parse_range, VerifySuiteConfig};

#[derive(Parser)]
#[command(name = "corepart", version, about = "Simultaneous core partitions with distinct parts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hook lengths of every box, one row per line
    Hooks {
        partition: Partition,
        #[arg(long)]
        json: bool,
    },
    /// Beta-set (first-column hook lengths) of a partition
    Beta {
        partition: Partition,
        #[arg(long)]
        json: bool,
    },
    /// Partition with the given beta-set
    FromBeta {
        beta: BetaSet,
        #[arg(long)]
        json: bool,
    },
    /// Whether a partition is a core for every listed modulus
    IsCore {
        #[arg(long = "t", value_delimiter = ',', required = true)]
        moduli: Vec<u64>,
        partition: Partition,
        #[arg(long)]
        json: bool,
    },
    /// Residue counts n_1..n_{t-1} of a t-core
    Profile {
        #[arg(long)]
        t: u64,
        partition: Partition,
        #[arg(long)]
        json: bool,
    },
    /// Sequence of a (t, mt±1)-core partition with distinct parts
    ToSequence {
        #[command(flatten)]
        family: FamilyArgs,
        partition: Partition,
        #[arg(long)]
        json: bool,
    },
    /// Partition encoded by a sequence such as 0,3,0,3,0,3
    FromSequence {
        #[command(flatten)]
        family: FamilyArgs,
        sequence: String,
        #[arg(long)]
        json: bool,
    },
    /// Largest size and maximizers of the (t, mt±1)-cores with distinct parts
    Largest {
        #[command(flatten)]
        family: FamilyArgs,
        /// Also list the maximizing partitions
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
    /// Every sequence of one family, in lexicographic order
    Sequences {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Stream every (a, b)-core partition
    Enumerate {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = EmitArg::Partitions)]
        emit: EmitArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Number of (a, b)-cores, or of (t, mt±1)-cores with distinct parts
    Count {
        #[arg(long, requires = "b", conflicts_with_all = ["t", "m", "family"])]
        a: Option<u64>,
        #[arg(long, requires = "a")]
        b: Option<u64>,
        #[arg(long, requires = "a")]
        distinct: bool,
        #[arg(long, requires_all = ["m", "family"])]
        t: Option<u64>,
        #[arg(long, requires = "t")]
        m: Option<u64>,
        #[arg(long, requires = "t")]
        family: Option<Family>,
        #[arg(long, env = "COREPART_MAX_ESTIMATE", default_value_t = ResourceGuard::DEFAULT_LIMIT)]
        max_estimate: u128,
        #[arg(long)]
        json: bool,
    },
    /// Count, largest size and exact average size over the (a, b)-cores
    Stats {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check closed forms and bijections against brute-force enumeration
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: core_partitions::verify::Suite,
        /// Inclusive range A..B
        #[arg(long = "t", value_parser = parse_range)]
        t_range: (u64, u64),
        /// Inclusive range A..B
        #[arg(long = "m", value_parser = parse_range, default_value = "1..5")]
        m_range: (u64, u64),
        /// Worker threads; defaults to the number of available cores
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        fail_fast: bool,
        #[arg(long, env = "COREPART_MAX_ESTIMATE", default_value_t = ResourceGuard::DEFAULT_LIMIT)]
        max_estimate: u128,
    },
}

#[derive(clap::Args)]
struct FamilyArgs {
    #[arg(long)]
    t: u64,
    #[arg(long)]
    m: u64,
    #[arg(long)]
    family: Family,
}

#[derive(clap::Args)]
struct PairArgs {
    #[arg(long)]
    a: u64,
    #[arg(long)]
    b: u64,
    /// Only partitions with distinct parts
    #[arg(long)]
    distinct: bool,
    /// Refuse when the estimated number of results exceeds this
    #[arg(long, env = "COREPART_MAX_ESTIMATE", default_value_t = ResourceGuard::DEFAULT_LIMIT)]
    max_estimate: u128,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Partitions,
    Beta,
    Sizes,
}

fn parse_suite(s: &str) -> Result<core_partitions::verify::Suite, String> {
    s.parse()
}

/// Why a command did not succeed, mapped onto the exit-code contract.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Resource(String),
    Discrepancies,
    Io(io::Error),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Discrepancies => 1,
            Failure::Usage(_) | Failure::Io(_) => 2,
            Failure::Resource(_) => 3,
        }
    }
}

impl From<core_partitions::Error> for Failure {
    fn from(e: core_partitions::Error) -> Self {
        match e {
            core_partitions::Error::ResourceLimit { .. } => Failure::Resource(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Usage(msg) | Failure::Resource(msg) => eprintln!("error: {}", msg),
                Failure::Io(e) => eprintln!("error: {}", e),
                Failure::Discrepancies => {}
            }
            let _ = out.flush();
            ExitCode::from(failure.exit_code())
        }
    }
}

fn run(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Hooks { partition, json } => {
            let hooks = partition.hook_lengths();
            if json {
                output::json_line(out, &serde_json::json!({ "partition": partition, "hooks": hooks }))?;
            } else {
                for row in hooks {
                    let row: Vec<String> = row.iter().map(u64::to_string).collect();
                    writeln!(out, "{}", row.join(" "))?;
                }
            }
        }
        Command::Beta { partition, json } => {
            let beta = partition.beta_set();
            if json {
                output::json_line(out, &serde_json::json!({ "partition": partition, "beta": beta }))?;
            } else {
                writeln!(out, "{}", beta)?;
            }
        }
        Command::FromBeta { beta, json } => {
            let partition = Partition::from_beta_set(&beta)?;
            if json {
                output::json_line(out, &serde_json::json!({ "beta": beta, "partition": partition }))?;
            } else {
                writeln!(out, "{}", partition)?;
            }
        }
        Command::IsCore { moduli, partition, json } => {
            let verdict = is_simultaneous_core(&partition, &moduli)?;
            if json {
                output::json_line(
                    out,
                    &serde_json::json!({ "partition": partition, "moduli": moduli, "is_core": verdict }),
                )?;
            } else {
                writeln!(out, "{}", verdict)?;
            }
        }
        Command::Profile { t, partition, json } => {
            let profile = ResidueProfile::of(&partition, t)?;
            if json {
                output::json_line(
                    out,
                    &serde_json::json!({ "partition": partition, "t": t, "counts": profile.counts() }),
                )?;
            } else {
                writeln!(out, "{}", output::join(profile.counts()))?;
            }
        }
        Command::ToSequence { family, partition, json } => {
            let seq = to_sequence(&partition, family.t, family.m, family.family)?;
            if json {
                output::json_line(out, &output::sequence_json(&seq, &partition))?;
            } else {
                writeln!(out, "{}", seq)?;
            }
        }
        Command::FromSequence { family, sequence, json } => {
            let seq = CoreSequence::parse(family.t, family.m, family.family, &sequence)?;
            let partition = from_sequence(&seq)?;
            if json {
                output::json_line(out, &output::sequence_json(&seq, &partition))?;
            } else {
                writeln!(out, "{}", partition)?;
            }
        }
        Command::Largest { family, witness, json } => {
            let report = extremal(family.t, family.m, family.family)?;
            if json {
                output::json_line(out, &report)?;
            } else {
                writeln!(out, "largest_size {}", report.largest_size)?;
                writeln!(out, "maximizer_count {}", report.maximizer_count)?;
                if witness {
                    for p in &report.maximizers {
                        writeln!(out, "witness {:?}", p)?;
                    }
                }
            }
        }
        Command::Sequences { family, format } => {
            let mut sink = output::RecordSink::new(out, format, &["sequence", "partition", "size"])?;
            for seq in enumerate_sequences(family.t, family.m, family.family)? {
                let partition = from_sequence(&seq)?;
                sink.write(&Record::sequence(&seq, &partition)?)?;
            }
            sink.finish()?;
        }
        Command::Enumerate { pair, emit, format } => {
            let query = EnumerationQuery::new(pair.a, pair.b, pair.distinct, Emit::Partitions)?;
            let guard = ResourceGuard { limit: pair.max_estimate };
            let header: &[&str] = match emit {
                EmitArg::Partitions => &["partition", "size"],
                EmitArg::Beta => &["beta", "size"],
                EmitArg::Sizes => &["size"],
            };
            let mut sink = output::RecordSink::new(out, format, header)?;
            for beta in query.betasets(&guard)? {
                let record = match emit {
                    EmitArg::Partitions => Record::partition(&Partition::from_beta_set(&beta)?)?,
                    EmitArg::Beta => Record::beta(&beta)?,
                    EmitArg::Sizes => Record::size(beta.size()?),
                };
                sink.write(&record)?;
            }
            sink.finish()?;
        }
        Command::Count { a, b, distinct, t, m, family, max_estimate, json } => {
            let value = match (a, b, t, m, family) {
                (Some(a), Some(b), _, _, _) => {
                    let query = EnumerationQuery::new(a, b, distinct, Emit::Count)?;
                    let n = query.betasets(&ResourceGuard { limit: max_estimate })?.count() as u64;
                    serde_json::json!({ "a": a, "b": b, "distinct": distinct, "count": n })
                }
                (_, _, Some(t), Some(m), Some(family)) => {
                    let n = count_distinct_core(t, m, family)?;
                    serde_json::json!({ "t": t, "m": m, "family": family, "count": n })
                }
                _ => return Err(Failure::Usage("count needs --a/--b or --t/--m/--family".into())),
            };
            if json {
                output::json_line(out, &value)?;
            } else {
                writeln!(out, "{}", value["count"])?;
            }
        }
        Command::Stats { pair, format } => {
            let stats = family_stats(pair.a, pair.b, pair.distinct, &ResourceGuard { limit: pair.max_estimate })?;
            output::stats(out, &stats, format)?;
        }
        Command::Verify { suite, t_range, m_range, jobs, fail_fast, max_estimate } => {
            let config = VerifySuiteConfig {
                suite,
                t_range,
                m_range,
                parallelism: jobs.unwrap_or_else(|| {
                    std::thread::available_parallelism().map_or(1, usize::from)
                }),
                fail_fast,
            };
            if !verify::run(&config, &ResourceGuard { limit: max_estimate }, out)? {
                return Err(Failure::Discrepancies);
            }
        }
    }
    Ok(())
}
