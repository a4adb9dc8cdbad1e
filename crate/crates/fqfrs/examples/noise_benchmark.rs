//! Miniature label-noise benchmark: a seeded sweep over models and
//! quantifier parameters, with rank aggregation and pairwise p-values.
//!
//! This is the same pipeline the `fqfrs experiment` subcommand drives; at
//! this scale it finishes in a few seconds. Run with
//! `cargo run --example noise_benchmark`.

use fqfrs::experiment::{pairwise_stats, plot_data, run_sweep, ExperimentConfig};
use fqfrs::fmt_sig;

fn main() -> fqfrs::Result<()> {
    let manifest = env!("CARGO_MANIFEST_DIR");
    let config = ExperimentConfig {
        datasets: vec![format!("{manifest}/data/iris.csv"), format!("{manifest}/data/wine.csv")],
        models: vec!["FRS".into(), "OWA".into(), "YWI".into(), "FOWA".into()],
        a_grid: vec![0.1, 0.5, 0.9],
        folds: 5,
        noise_fraction: 0.2,
        seed: 42,
    };
    let output = run_sweep(&config)?;
    println!("swept {} (dataset, model, a, fold) cells", output.rows.len());
    for (dataset, reason) in &output.skipped {
        println!("skipped {dataset}: {reason}");
    }
    println!();

    println!("mean balanced accuracy and mean fractional rank (1 = best):");
    println!("{:>6} {:>6} {:>10} {:>10}", "a", "model", "accuracy", "rank");
    for row in plot_data(&output.rows) {
        println!(
            "{:>6} {:>6} {:>10} {:>10}",
            row.a,
            row.model,
            fmt_sig(row.mean_balanced_accuracy, 4),
            fmt_sig(row.mean_fractional_rank, 4),
        );
    }
    println!();

    println!("two-sided Wilcoxon signed-rank p-values at a = 0.9:");
    for row in pairwise_stats(&output.rows) {
        if row.a == 0.9 {
            println!("  {:>5} vs {:<5} p = {}", row.model_1, row.model_2, fmt_sig(row.p_value, 4));
        }
    }
    Ok(())
}
