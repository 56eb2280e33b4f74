use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use clutters::atlas::atlas;
use clutters::betti::{betti_table_hochster, betti_table_taylor_bounded};
use clutters::clutter::Clutter;
use clutters::complex::clique_complex;
use clutters::elimination::{chordality_check, is_simplicial, ChordalityVerdict, Strategy};
use clutters::error::Error;
use clutters::format::{parse_clutter, render_certificate, serialize_clutter};
use clutters::linalg::FieldSpec;
use clutters::monomial::{circuit_ideal, has_linear_quotients, QuotientsOutcome};
use clutters::set::VertexSet;
use clutters::stability::{check_stability, fuzz_instance};
use clutters::variants::{
    is_e_chordal, is_resolution_l_chordal, is_vtv_chordal, is_w_chordal, Recognition,
};
use clutters::{fixtures, Result};

/// Chordality recognizers and exact Betti tables for d-uniform clutters.
#[derive(Parser)]
#[command(name = "clutters", version, about)]
struct Cli {
    /// Worker threads for the parallel summations (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Comma-separated field characteristics (0 means the rationals).
    #[arg(long, global = true, default_value = "2,3")]
    fields: String,

    /// Seed for anything randomized.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// State budget for the budgeted searches.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    budget: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Greedy,
    Backtracking,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    W,
    Vtv,
    E,
    ResL,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Hochster,
    Taylor,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership in the chordal class, optionally emitting the
    /// elimination certificate.
    CheckChordal {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "backtracking")]
        strategy: StrategyArg,
        #[arg(long)]
        emit_cert: Option<PathBuf>,
    },
    /// List the submaximal circuits with their simpliciality.
    Simplicial { file: PathBuf },
    /// Run one of the variant chordality recognizers.
    Variants {
        file: PathBuf,
        #[arg(long, value_enum)]
        check: VariantArg,
        /// Homology degree for the resolution-l check.
        #[arg(long, default_value_t = 0)]
        l: i32,
        /// Field characteristic for the resolution-l check.
        #[arg(long, default_value = "2")]
        field: String,
    },
    /// Print the Betti table of the circuit ideal as TSV.
    Betti {
        file: PathBuf,
        #[arg(long, default_value = "2")]
        field: String,
        #[arg(long, value_enum, default_value = "hochster")]
        engine: EngineArg,
    },
    /// Search for a linear-quotients ordering of the circuit ideal.
    Linquot { file: PathBuf },
    /// Verify Betti-table stability under circuit deletion through a
    /// simplicial element; JSON report on stdout.
    Stability(StabilityArgs),
    /// Classify small clutters under every recognizer and check the
    /// containment diagram.
    Atlas {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        /// Where to write containment violations, if any arise.
        #[arg(long, default_value = "atlas-findings.jsonl")]
        findings: PathBuf,
    },
    /// Write the named example clutters as files.
    Fixtures {
        #[arg(long, default_value = ".")]
        dir: PathBuf,
    },
}

#[derive(Args)]
struct StabilityArgs {
    /// Clutter file; omitted in --fuzz mode.
    file: Option<PathBuf>,
    /// The simplicial element, e.g. "5 6".
    #[arg(long)]
    e: Option<String>,
    /// Circuits to remove: "all" for the full star, or semicolon-separated
    /// vertex lists like "2 5 6;5 6 7".
    #[arg(long = "A", alias = "a", default_value = "all")]
    a: String,
    /// Generate seeded random instances instead of reading a file.
    #[arg(long)]
    fuzz: bool,
    #[arg(long, default_value_t = 7)]
    n: u32,
    #[arg(long, default_value_t = 3)]
    d: u32,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 0.5)]
    density: f64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // make help/version exit clean, usage errors exit 1
            if err.use_stderr() {
                eprint!("{err}");
                return ExitCode::from(1);
            }
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn load(path: &Path) -> Result<Clutter> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
    parse_clutter(&text)
}

fn parse_fields(spec: &str) -> Result<Vec<FieldSpec>> {
    spec.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(FieldSpec::parse)
        .collect()
}

fn parse_vertex_list(s: &str) -> Result<VertexSet> {
    let members = s
        .split_whitespace()
        .map(|tok| {
            tok.parse::<u32>()
                .map_err(|_| Error::Usage(format!("invalid vertex `{tok}`")))
        })
        .collect::<Result<Vec<u32>>>()?;
    Ok(VertexSet::from_members(members))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::CheckChordal {
            file,
            strategy,
            emit_cert,
        } => {
            let c = load(&file)?;
            let strategy = match strategy {
                StrategyArg::Greedy => Strategy::Greedy,
                StrategyArg::Backtracking => Strategy::Backtracking,
            };
            let verdict = chordality_check(&c, strategy)?;
            match &verdict {
                ChordalityVerdict::Chordal(cert) => {
                    println!("chordal ({} deletions)", cert.steps.len());
                }
                ChordalityVerdict::NotChordal(stuck) => {
                    println!("not-chordal (stuck with {} circuits)", stuck.num_circuits());
                }
            }
            if let Some(path) = emit_cert {
                fs::write(&path, render_certificate(&verdict))
                    .map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Simplicial { file } => {
            let c = load(&file)?;
            for e in c.submaximal_circuits() {
                let flag = if is_simplicial(&c, e)? {
                    "simplicial"
                } else {
                    "not-simplicial"
                };
                println!("{e}\t{flag}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Variants {
            file,
            check,
            l,
            field,
        } => {
            let c = load(&file)?;
            let answer = match check {
                VariantArg::W => is_w_chordal(&c).to_string(),
                VariantArg::Vtv => is_vtv_chordal(&c).to_string(),
                VariantArg::E => match is_e_chordal(&c, cli.budget)? {
                    Recognition::Yes => "true".to_string(),
                    Recognition::No => "false".to_string(),
                    Recognition::Unknown => "unknown".to_string(),
                },
                VariantArg::ResL => {
                    let field = FieldSpec::parse(&field)?;
                    is_resolution_l_chordal(&clique_complex(&c), l, field).to_string()
                }
            };
            println!("{answer}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Betti {
            file,
            field,
            engine,
        } => {
            let c = load(&file)?;
            let field = FieldSpec::parse(&field)?;
            let table = match engine {
                EngineArg::Hochster => betti_table_hochster(&c, field)?,
                EngineArg::Taylor => betti_table_taylor_bounded(&circuit_ideal(&c)?, field, 20)?,
            };
            print!("{}", table.to_tsv());
            Ok(ExitCode::SUCCESS)
        }
        Command::Linquot { file } => {
            let c = load(&file)?;
            let ideal = circuit_ideal(&c)?;
            match has_linear_quotients(&ideal, cli.budget)? {
                QuotientsOutcome::Yes(order) => {
                    let listing: Vec<String> =
                        order.iter().map(|&i| ideal.gens()[i].to_string()).collect();
                    println!("yes: {}", listing.join(", "));
                }
                QuotientsOutcome::No => println!("no"),
                QuotientsOutcome::Unknown => println!("unknown (budget exhausted)"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Stability(args) => {
            let fields = parse_fields(&cli.fields)?;
            if args.fuzz {
                if args.d < 2 || args.n < args.d || args.n > 64 {
                    return Err(Error::Usage("fuzz mode needs 2 <= d <= n <= 64".into()));
                }
                let mut all_hold = true;
                let mut reports = Vec::with_capacity(args.count);
                for k in 0..args.count {
                    let seed = cli.seed.wrapping_add(k as u64);
                    let (c, e, removed, _) = fuzz_instance(args.n, args.d, args.density, seed);
                    let report = check_stability(&c, e, &removed, &fields)?;
                    all_hold &= report.all_hold();
                    reports.push(report);
                }
                println!("{}", serde_json::to_string_pretty(&reports).unwrap());
                if !all_hold {
                    eprintln!("stability violation found; see the report above");
                    return Ok(ExitCode::from(2));
                }
                return Ok(ExitCode::SUCCESS);
            }
            let file = args
                .file
                .ok_or_else(|| Error::Usage("stability needs a clutter file or --fuzz".into()))?;
            let c = load(&file)?;
            let e = parse_vertex_list(
                &args
                    .e
                    .ok_or_else(|| Error::Usage("stability needs --e <vertex list>".into()))?,
            )?;
            let removed: Vec<VertexSet> = if args.a.trim() == "all" {
                c.circuits()
                    .iter()
                    .copied()
                    .filter(|f| e.is_subset(*f))
                    .collect()
            } else {
                args.a
                    .split(';')
                    .filter(|s| !s.trim().is_empty())
                    .map(parse_vertex_list)
                    .collect::<Result<Vec<_>>>()?
            };
            let report = check_stability(&c, e, &removed, &fields)?;
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            if report.all_hold() {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("stability violation found; see the report above");
                Ok(ExitCode::from(2))
            }
        }
        Command::Atlas { n, d, findings } => {
            if n == 0 || n > 64 || d == 0 {
                return Err(Error::Usage("atlas needs 1 <= n <= 64 and d >= 1".into()));
            }
            let (records, violations) = atlas(n, d, cli.budget, cli.seed)?;
            for record in &records {
                println!("{}", serde_json::to_string(record).unwrap());
            }
            eprintln!("classified {} clutters", records.len());
            if violations.is_empty() {
                return Ok(ExitCode::SUCCESS);
            }
            let body: String = violations
                .iter()
                .map(|v| serde_json::to_string(v).unwrap() + "\n")
                .collect();
            fs::write(&findings, body)
                .map_err(|e| Error::Usage(format!("{}: {e}", findings.display())))?;
            eprintln!(
                "{} containment violations written to {}",
                violations.len(),
                findings.display()
            );
            Ok(ExitCode::from(2))
        }
        Command::Fixtures { dir } => {
            let items: [(&str, Clutter); 5] = [
                ("figure-1.clt", fixtures::figure_one()),
                ("figure-2-c.clt", fixtures::figure_two_c()),
                ("figure-2-d.clt", fixtures::figure_two_d()),
                ("not-w-chordal.clt", fixtures::no_w_simplicial_example()),
                ("dunce-hat.clt", fixtures::dunce_hat_clutter()),
            ];
            fs::create_dir_all(&dir).ok();
            for (name, clutter) in items {
                let path = dir.join(name);
                fs::write(&path, serialize_clutter(&clutter)?)
                    .map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
                println!("wrote {}", path.display());
            }
            let order = fixtures::dunce_hat_elimination_order();
            let mut cert = String::new();
            for step in order {
                cert.push_str(&step.to_string());
                cert.push('\n');
            }
            cert.push_str("# verdict: chordal\n");
            let path = dir.join("dunce-hat-order.cert");
            fs::write(&path, cert)
                .map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
            println!("wrote {}", path.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}
