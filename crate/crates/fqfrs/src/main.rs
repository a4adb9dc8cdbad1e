//! Thin command-line front end; all numeric work lives in the library.

use clap::{Parser, Subcommand};
use fqfrs::experiment::{
    classify, load_csv, pairwise_stats, plot_data, plotdata_csv, read_results_csv, run_sweep,
    stats_csv, write_plotdata_csv, write_results_csv, write_stats_csv, ExperimentConfig,
};
use fqfrs::quantifiers::{BinaryModelKind, BinaryQuantifierModel};
use fqfrs::{fmt_sig, named_model, Error, FuzzyRelation, FuzzySet, ModelId, RimQuantifier};
use serde::Deserialize;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(name = "fqfrs", version, about = "Fuzzy rough sets built on fuzzy quantification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a binary quantifier model on one pair of fuzzy sets
    Quantify {
        /// One of owa, wowa, ywi, zadeh, fowa, mcx
        #[arg(long)]
        model: String,
        /// RIM quantifier: forall, exists, id, gt:k, geq:k, or s:a,b
        #[arg(long)]
        rim: String,
        /// JSON file holding {"A": [...], "B": [...]}
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Approximate a fuzzy concept under a fuzzy relation
    Approx {
        /// One of FRS, OWA, WOWA, YWI, FOWA, VQFRS, MCX
        #[arg(long)]
        model: ModelId,
        /// RIM quantifier for the lower approximation
        #[arg(long)]
        rim: String,
        /// Headerless CSV holding a square relation matrix
        #[arg(long)]
        relation: PathBuf,
        /// JSON file holding the concept membership vector
        #[arg(long)]
        concept: PathBuf,
        /// Print the upper approximation instead of the lower
        #[arg(long)]
        upper: bool,
    },
    /// Classify test instances against a training set
    Classify {
        #[arg(long)]
        train: PathBuf,
        #[arg(long)]
        test: PathBuf,
        #[arg(long)]
        model: ModelId,
        #[arg(long)]
        rim: String,
    },
    /// Run the cross-validated benchmark sweep described by a JSON config
    Experiment {
        config: PathBuf,
        /// Output directory (default: $FQFRS_OUT_DIR, else the working directory)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Overrides the seed in the config
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Recompute pairwise significance tests from a results CSV
    Stats {
        results: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute per-model plot data from a results CSV
    Plotdata {
        results: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    env_logger::init();
    if let Err(e) = run(Cli::parse()) {
        eprintln!("error: {e}");
        std::process::exit(if e.is_io_or_parse() { 2 } else { 1 });
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Quantify { model, rim, input } => {
            let rim: RimQuantifier = rim.parse()?;
            let kind = binary_model_kind(&model)?;
            let model = BinaryQuantifierModel::new(kind, rim);
            let (a, b) = read_set_pair(&input)?;
            println!("{}", fmt_sig(model.eval(&a, &b)?, 12));
        }
        Command::Approx { model, rim, relation, concept, upper } => {
            let rim: RimQuantifier = rim.parse()?;
            let spec = named_model(model, &rim);
            let relation = read_relation(&relation)?;
            let concept = read_membership_vector(&concept)?;
            let values = if upper {
                spec.upper_approximation(&relation, &concept)?
            } else {
                spec.lower_approximation(&relation, &concept)?
            };
            for v in values.memberships() {
                println!("{}", fmt_sig(*v, 12));
            }
        }
        Command::Classify { train, test, model, rim } => {
            let rim: RimQuantifier = rim.parse()?;
            let spec = named_model(model, &rim);
            let train = load_csv(&train)?;
            let test = load_csv(&test)?;
            for label in classify(&train, test.instances(), &spec)? {
                println!("{label}");
            }
        }
        Command::Experiment { config, out, seed } => {
            let content = std::fs::read_to_string(&config)?;
            let mut config: ExperimentConfig =
                serde_json::from_str(&content).map_err(|e| Error::Parse(e.to_string()))?;
            if let Some(seed) = seed {
                config.seed = seed;
            }
            let out_dir = out
                .or_else(|| std::env::var_os("FQFRS_OUT_DIR").map(PathBuf::from))
                .unwrap_or_else(|| PathBuf::from("."));
            std::fs::create_dir_all(&out_dir)?;
            let output = run_sweep(&config)?;
            let stats = pairwise_stats(&output.rows);
            let plot = plot_data(&output.rows);
            write_results_csv(&output.rows, out_dir.join("results.csv"))?;
            write_stats_csv(&stats, out_dir.join("stats.csv"))?;
            write_plotdata_csv(&plot, out_dir.join("plotdata.csv"))?;
            println!("results: {} ({} rows)", out_dir.join("results.csv").display(), output.rows.len());
            println!("stats: {} ({} rows)", out_dir.join("stats.csv").display(), stats.len());
            println!("plot data: {} ({} rows)", out_dir.join("plotdata.csv").display(), plot.len());
            for (dataset, reason) in &output.skipped {
                eprintln!("skipped {dataset}: {reason}");
            }
        }
        Command::Stats { results, out } => {
            let rows = read_results_csv(&results)?;
            emit(&stats_csv(&pairwise_stats(&rows)), out.as_deref())?;
        }
        Command::Plotdata { results, out } => {
            let rows = read_results_csv(&results)?;
            emit(&plotdata_csv(&plot_data(&rows)), out.as_deref())?;
        }
    }
    Ok(())
}

fn emit(content: &str, out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn binary_model_kind(name: &str) -> Result<BinaryModelKind, Error> {
    match name.to_ascii_lowercase().as_str() {
        "owa" => Ok(BinaryModelKind::YagerImplication),
        "wowa" => Ok(BinaryModelKind::Wowa),
        "ywi" => Ok(BinaryModelKind::Ywi),
        "zadeh" => Ok(BinaryModelKind::Zadeh),
        "fowa" => Ok(BinaryModelKind::FowaQ2),
        "mcx" => Ok(BinaryModelKind::McxQ2),
        _ => Err(Error::Config(format!(
            "unknown quantifier model {name:?}; expected owa, wowa, ywi, zadeh, fowa, or mcx"
        ))),
    }
}

#[derive(Deserialize)]
struct SetPair {
    #[serde(rename = "A")]
    a: Vec<f64>,
    #[serde(rename = "B")]
    b: Vec<f64>,
}

fn read_set_pair(path: &Path) -> Result<(FuzzySet, FuzzySet), Error> {
    let content = std::fs::read_to_string(path)?;
    let pair: SetPair =
        serde_json::from_str(&content).map_err(|e| Error::Parse(e.to_string()))?;
    Ok((FuzzySet::new(pair.a)?, FuzzySet::new(pair.b)?))
}

fn read_membership_vector(path: &Path) -> Result<FuzzySet, Error> {
    let content = std::fs::read_to_string(path)?;
    let values: Vec<f64> =
        serde_json::from_str(&content).map_err(|e| Error::Parse(e.to_string()))?;
    FuzzySet::new(values)
}

fn read_relation(path: &Path) -> Result<FuzzyRelation, Error> {
    let content = std::fs::read_to_string(path)?;
    let mut values = Vec::new();
    let mut n_rows = 0usize;
    for (idx, line) in content.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        n_rows += 1;
        for cell in line.split(',') {
            let value: f64 = cell.trim().parse().map_err(|_| {
                Error::Parse(format!("{}:{}: {cell:?} is not numeric", path.display(), idx + 1))
            })?;
            values.push(value);
        }
    }
    if n_rows == 0 {
        return Err(Error::Parse(format!("{} holds no rows", path.display())));
    }
    if values.len() != n_rows * n_rows {
        return Err(Error::DimensionMismatch(format!(
            "relation must be square: {} rows but {} values",
            n_rows,
            values.len()
        )));
    }
    FuzzyRelation::new(n_rows, values)
}
