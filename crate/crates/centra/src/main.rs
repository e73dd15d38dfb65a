//! centra — centralizer structure toolkit for small finite groups.
//!
//! Exit codes: 0 success / no violation, 2 harness violation, 3 input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use centra::catalog::{load_corpus, parse_construct_spec, read_group_file, write_grp, CorpusEntry};
use centra::centralizer::profile;
use centra::classify::classify;
use centra::corpus::{builtin, verify_asserts};
use centra::harness::{has_violation, render_records, render_table, run};
use centra::isoclinism::{are_isoclinic, Isoclinism};
use centra::zclass::z_partition;

#[derive(Parser)]
#[command(name = "centra", version, about = "centralizers, z-classes, and structure of small finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Records,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Full structural analysis of one group file
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "records")]
        format: Format,
    },
    /// Build a group from a constructor spec and write it as a GRP file
    Construct {
        spec: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run the theorem harness over a corpus manifest (or `builtin`)
    Verify {
        #[arg(long)]
        corpus: String,
        /// Restrict to specific checks, e.g. --theorem 4,11
        #[arg(long, value_delimiter = ',')]
        theorem: Vec<u32>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Decide isoclinism of two group files
    Isoclinic { a: PathBuf, b: PathBuf },
    /// List the z-class partition of one group file
    Zclasses { file: PathBuf },
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn dispatch(cli: Cli) -> centra::Result<ExitCode> {
    match cli.command {
        Command::Analyze { file, format } => analyze(&file, format),
        Command::Construct { spec, output } => {
            let g = parse_construct_spec(&spec)?;
            std::fs::write(&output, write_grp(&g))?;
            println!("wrote {} (order {})", output.display(), g.order());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            corpus,
            theorem,
            format,
        } => verify(&corpus, &theorem, format),
        Command::Isoclinic { a, b } => isoclinic(&a, &b),
        Command::Zclasses { file } => zclasses(&file),
    }
}

fn analyze(file: &Path, format: Format) -> centra::Result<ExitCode> {
    let g = read_group_file(file)?;
    let p = profile(&g);
    let zp = z_partition(&g, &p);
    let report = classify(&g, &p, &zp);
    let mut lines = report.lines();
    lines.push(format!(
        "proper_centralizer_orders {:?}",
        p.proper.iter().map(|c| c.size()).collect::<Vec<_>>()
    ));
    lines.push(format!("center_ratios {:?}", p.center_ratios()));
    lines.push(format!(
        "zclass_sizes {:?}",
        zp.classes.iter().map(|c| c.members.len()).collect::<Vec<_>>()
    ));
    match format {
        Format::Records => {
            for l in &lines {
                println!("{l}");
            }
        }
        Format::Table => {
            let w = lines
                .iter()
                .filter_map(|l| l.split_once(' '))
                .map(|(k, _)| k.len())
                .max()
                .unwrap_or(0);
            for l in &lines {
                if let Some((k, v)) = l.split_once(' ') {
                    println!("{k:<w$}  {v}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(corpus: &str, theorems: &[u32], format: Format) -> centra::Result<ExitCode> {
    let entries: Vec<CorpusEntry> = if corpus == "builtin" {
        builtin()
    } else {
        let path = Path::new(corpus);
        let text = std::fs::read_to_string(path)?;
        let base = path.parent().unwrap_or(Path::new("."));
        let (entries, errors) = load_corpus(&text, base)?;
        if !errors.is_empty() {
            for (name, e) in &errors {
                eprintln!("error loading {name}: {e}");
            }
            return Ok(ExitCode::from(3));
        }
        entries
    };
    let mut assert_failures = Vec::new();
    for e in &entries {
        assert_failures.extend(verify_asserts(e));
    }
    for f in &assert_failures {
        eprintln!("assert failed: {f}");
    }
    let outcomes = run(&entries, theorems);
    match format {
        Format::Records => print!("{}", render_records(&outcomes)),
        Format::Table => print!("{}", render_table(&outcomes)),
    }
    if has_violation(&outcomes) || !assert_failures.is_empty() {
        Ok(ExitCode::from(2))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn isoclinic(a: &Path, b: &Path) -> centra::Result<ExitCode> {
    let ga = read_group_file(a)?;
    let gb = read_group_file(b)?;
    match are_isoclinic(&ga, &gb)? {
        Isoclinism::Isoclinic(w) => {
            println!("isoclinic");
            println!("phi {:?}", w.phi);
            println!("theta {:?}", w.theta);
        }
        Isoclinism::NotIsoclinic(reason) => {
            println!("not isoclinic: {reason}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn zclasses(file: &Path) -> centra::Result<ExitCode> {
    let g = read_group_file(file)?;
    let p = profile(&g);
    let zp = z_partition(&g, &p);
    println!("zclass_count {}", zp.count());
    for (i, c) in zp.classes.iter().enumerate() {
        println!(
            "class {i} rep={} size={} normalizer_index={} fprime={} members={:?}",
            c.rep,
            c.members.len(),
            c.normalizer_index,
            c.fprime_size,
            c.members
        );
    }
    Ok(ExitCode::SUCCESS)
}
