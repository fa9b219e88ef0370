mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use carcass::LatticeLimits;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use commands::{CliError, ConjugacyMode, LatticeTable, MapgenKind, Output, SemiconjMode};

#[derive(Parser)]
#[command(
    name = "carcass",
    about = "Exact analysis of piecewise linear unimodal maps on [0,1]",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cap on total stored lattice points (0 disables the cap)
    #[arg(long, global = true, value_name = "N")]
    max_points: Option<u64>,

    /// Cap on the bit length of any lattice denominator (0 disables the cap)
    #[arg(long, global = true, value_name = "BITS")]
    max_denominator_bits: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Mu,
    Len,
    Delta,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Tent,
    AsymTent,
    Conjugate,
}

#[derive(Subcommand)]
enum Command {
    /// Full report on one carcass map: shape, firmness, subdivision, conjugacy
    Analyze {
        map: PathBuf,
        /// Lattice depth (default: deep enough for the subdivision checks)
        #[arg(long)]
        depth: Option<u32>,
        /// Iteration bound for the firmness probe
        #[arg(long, default_value_t = 32)]
        firmness_bound: u32,
    },
    /// Print one lattice level as nodes, interval lengths, or subdivision ratios
    Lattice {
        map: PathBuf,
        /// Level to print
        #[arg(long)]
        level: u32,
        /// Which table to print for the level
        #[arg(long, value_enum, default_value_t = TableKind::Mu)]
        table: TableKind,
        /// Lattice depth (default: what the table needs)
        #[arg(long)]
        depth: Option<u32>,
    },
    /// Build, verify, detect, or profile conjugacies with the tent map
    #[command(group(
        ArgGroup::new("mode").required(true).args(["build", "verify", "detect", "profile"])
    ))]
    Conjugacy {
        /// Conjugate the tent map by this homeomorphism and print the result
        #[arg(long, value_name = "H_MAP")]
        build: Option<PathBuf>,
        /// Check that a homeomorphism conjugates the tent map to a carcass map
        #[arg(long, num_args = 2, value_names = ["H_MAP", "G_MAP"])]
        verify: Option<Vec<PathBuf>>,
        /// Decide from the lattice whether the conjugacy is piecewise linear
        #[arg(long, value_name = "G_MAP")]
        detect: Option<PathBuf>,
        /// Distances between consecutive sampled conjugacies of two maps
        #[arg(long, num_args = 2, value_names = ["DOMAIN_MAP", "IMAGE_MAP"])]
        profile: Option<Vec<PathBuf>>,
        /// Lattice depth for --detect and --profile
        #[arg(long, default_value_t = 8)]
        depth: u32,
    },
    /// Zigzags and the commuting solutions they induce
    #[command(group(
        ArgGroup::new("mode")
            .required(true)
            .args(["xi", "psi_exact", "psi_lattice", "verify", "evidence", "lemma35"])
    ))]
    Semiconj {
        /// Print the zigzag with this many teeth
        #[arg(long, value_name = "TEETH")]
        xi: Option<u32>,
        /// Transport a zigzag through a homeomorphism
        #[arg(long, num_args = 2, value_names = ["H_MAP", "TEETH"])]
        psi_exact: Option<Vec<String>>,
        /// Sample a solution on one lattice level
        #[arg(long, num_args = 3, value_names = ["G_MAP", "TEETH", "LEVEL"])]
        psi_lattice: Option<Vec<String>>,
        /// Check that a map commutes with a carcass map
        #[arg(long, num_args = 2, value_names = ["PSI_MAP", "G_MAP"])]
        verify: Option<Vec<PathBuf>>,
        /// Defect growth of the sampled solution across levels
        #[arg(long, num_args = 4, value_names = ["G_MAP", "TEETH", "FIRST_LEVEL", "LAST_LEVEL"])]
        evidence: Option<Vec<String>>,
        /// Uniform-subdivision check near 0
        #[arg(long, num_args = 3, value_names = ["G_MAP", "TEETH", "DEPTH"])]
        lemma35: Option<Vec<String>>,
        /// Iteration bound for the firmness probe
        #[arg(long, default_value_t = 32)]
        firmness_bound: u32,
    },
    /// Run the whole evidence suite on one map
    Theorems {
        map: PathBuf,
        /// Teeth counts to test
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        t_list: Vec<u32>,
        /// Lattice depth
        #[arg(long, default_value_t = 8)]
        depth: u32,
        /// Iteration bound for the firmness probe
        #[arg(long, default_value_t = 32)]
        firmness_bound: u32,
    },
    /// Generate reference maps
    Mapgen {
        /// Which map to generate
        #[arg(value_enum)]
        kind: GenKind,
        /// Peak abscissa for asym-tent, as an exact rational
        #[arg(long)]
        v: Option<String>,
        /// Homeomorphism file for conjugate
        #[arg(long, value_name = "H_MAP")]
        h: Option<PathBuf>,
        /// Write to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_count(role: &str, value: &str) -> Result<u32, CliError> {
    value
        .parse::<u32>()
        .map_err(|_| CliError::Usage(format!("{role} must be a non-negative integer, got {value:?}")))
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let mut limits = LatticeLimits::default();
    if let Some(n) = cli.max_points {
        limits.max_points = (n != 0).then_some(n);
    }
    if let Some(bits) = cli.max_denominator_bits {
        limits.max_denominator_bits = (bits != 0).then_some(bits);
    }

    match &cli.command {
        Command::Analyze { map, depth, firmness_bound } => {
            commands::analyze(map, *depth, *firmness_bound, &limits)
        }
        Command::Lattice { map, level, table, depth } => {
            let table = match table {
                TableKind::Mu => LatticeTable::Mu,
                TableKind::Len => LatticeTable::Len,
                TableKind::Delta => LatticeTable::Delta,
            };
            commands::lattice(map, *level, &table, *depth, &limits)
        }
        Command::Conjugacy { build, verify, detect, profile, depth } => {
            let mode = if let Some(h) = build {
                ConjugacyMode::Build(h.clone())
            } else if let Some(paths) = verify {
                ConjugacyMode::Verify(paths[0].clone(), paths[1].clone())
            } else if let Some(g) = detect {
                ConjugacyMode::Detect(g.clone())
            } else if let Some(paths) = profile {
                ConjugacyMode::Profile(paths[0].clone(), paths[1].clone())
            } else {
                unreachable!("clap requires one mode")
            };
            commands::conjugacy(&mode, *depth, &limits)
        }
        Command::Semiconj {
            xi,
            psi_exact,
            psi_lattice,
            verify,
            evidence,
            lemma35,
            firmness_bound,
        } => {
            let mode = if let Some(teeth) = xi {
                SemiconjMode::Xi(*teeth)
            } else if let Some(args) = psi_exact {
                SemiconjMode::PsiExact(PathBuf::from(&args[0]), parse_count("TEETH", &args[1])?)
            } else if let Some(args) = psi_lattice {
                SemiconjMode::PsiLattice(
                    PathBuf::from(&args[0]),
                    parse_count("TEETH", &args[1])?,
                    parse_count("LEVEL", &args[2])?,
                )
            } else if let Some(paths) = verify {
                SemiconjMode::Verify(paths[0].clone(), paths[1].clone())
            } else if let Some(args) = evidence {
                SemiconjMode::Evidence(
                    PathBuf::from(&args[0]),
                    parse_count("TEETH", &args[1])?,
                    parse_count("FIRST_LEVEL", &args[2])?,
                    parse_count("LAST_LEVEL", &args[3])?,
                )
            } else if let Some(args) = lemma35 {
                SemiconjMode::Lemma35(
                    PathBuf::from(&args[0]),
                    parse_count("TEETH", &args[1])?,
                    parse_count("DEPTH", &args[2])?,
                )
            } else {
                unreachable!("clap requires one mode")
            };
            commands::semiconj(&mode, *firmness_bound, &limits)
        }
        Command::Theorems { map, t_list, depth, firmness_bound } => {
            commands::theorems(map, t_list, *depth, *firmness_bound, &limits)
        }
        Command::Mapgen { kind, v, h, out } => {
            let kind = match kind {
                GenKind::Tent => MapgenKind::Tent,
                GenKind::AsymTent => MapgenKind::AsymTent,
                GenKind::Conjugate => MapgenKind::Conjugate,
            };
            commands::mapgen(&kind, v.as_deref(), h.as_deref(), out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Output::Report(report)) => {
            let rendered = match cli.format {
                Format::Text => report.text(),
                Format::Structured => report.json(),
            };
            print!("{rendered}");
            ExitCode::SUCCESS
        }
        Ok(Output::MapText(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
