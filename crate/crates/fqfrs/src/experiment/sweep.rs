//! Benchmark sweep: noise injection, stratified folds, model-by-quantifier
//! grid evaluation, aggregation, and CSV emission.

use crate::error::{Error, Result};
use crate::experiment::classify::{balanced_accuracy, classify_with_foresets};
use crate::experiment::dataset::{
    inject_label_noise, load_csv, similarity, stratified_kfold, DecisionSystem,
};
use crate::experiment::stats::{fractional_rank, wilcoxon_signed_rank};
use crate::fmt_sig;
use crate::frs::{named_model, ModelId};
use crate::quantifiers::RimQuantifier;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::path::Path;

/// Sweep configuration, deserializable from JSON.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExperimentConfig {
    #[serde(default = "default_models")]
    pub models: Vec<String>,
    #[serde(default = "default_a_grid")]
    pub a_grid: Vec<f64>,
    #[serde(default = "default_folds")]
    pub folds: usize,
    #[serde(default)]
    pub noise_fraction: f64,
    #[serde(default = "default_seed")]
    pub seed: u64,
    pub datasets: Vec<String>,
}

fn default_models() -> Vec<String> {
    crate::frs::ALL_MODELS.iter().map(|m| m.to_string()).collect()
}

fn default_a_grid() -> Vec<f64> {
    let mut grid: Vec<f64> = (0..10).map(|i| i as f64 / 10.0).collect();
    grid.extend([0.95, 0.99, 0.999]);
    grid
}

fn default_folds() -> usize {
    5
}

fn default_seed() -> u64 {
    42
}

impl ExperimentConfig {
    /// Validates every field and resolves the model names.
    pub fn validate(&self) -> Result<Vec<ModelId>> {
        if self.models.is_empty() {
            return Err(Error::Config("models must not be empty".into()));
        }
        let models: Vec<ModelId> =
            self.models.iter().map(|m| m.parse()).collect::<Result<_>>()?;
        let mut unique = models.clone();
        unique.sort();
        unique.dedup();
        if unique.len() != models.len() {
            return Err(Error::Config("models must not repeat".into()));
        }
        if self.a_grid.is_empty() {
            return Err(Error::Config("a_grid must not be empty".into()));
        }
        for &a in &self.a_grid {
            if !a.is_finite() || !(0.0..1.0).contains(&a) {
                return Err(Error::Config(format!(
                    "a_grid value {a} must lie in [0,1); the a=1 limit is the FRS model"
                )));
            }
        }
        let mut grid = self.a_grid.clone();
        grid.sort_by(f64::total_cmp);
        grid.dedup();
        if grid.len() != self.a_grid.len() {
            return Err(Error::Config("a_grid must not repeat values".into()));
        }
        if self.folds < 2 {
            return Err(Error::Config(format!("folds must be at least 2, got {}", self.folds)));
        }
        if !self.noise_fraction.is_finite() || !(0.0..=1.0).contains(&self.noise_fraction) {
            return Err(Error::Config(format!(
                "noise_fraction {} must lie in [0,1]",
                self.noise_fraction
            )));
        }
        if self.datasets.is_empty() {
            return Err(Error::Config("datasets must not be empty".into()));
        }
        let stems: Vec<String> = self.datasets.iter().map(|p| dataset_name(p)).collect();
        let mut unique = stems.clone();
        unique.sort();
        unique.dedup();
        if unique.len() != stems.len() {
            return Err(Error::Config("dataset files must have distinct names".into()));
        }
        Ok(models)
    }
}

/// Display name of a dataset path: its file stem.
pub fn dataset_name(path: &str) -> String {
    Path::new(path)
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.to_string())
}

/// One cross-validation measurement.
#[derive(Clone, Debug, PartialEq)]
pub struct ResultRow {
    pub dataset: String,
    pub model: String,
    pub a: f64,
    pub fold: usize,
    pub balanced_accuracy: f64,
}

/// All measurements of a sweep plus the datasets it had to skip.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepOutput {
    pub rows: Vec<ResultRow>,
    pub skipped: Vec<(String, String)>,
}

fn derive_rng(seed: u64, dataset: u64, purpose: u64) -> ChaCha12Rng {
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&dataset.to_le_bytes());
    key[16..24].copy_from_slice(&purpose.to_le_bytes());
    ChaCha12Rng::from_seed(key)
}

/// Runs the full grid; failures are isolated per dataset and reported in
/// `skipped` instead of aborting the sweep.
pub fn run_sweep(config: &ExperimentConfig) -> Result<SweepOutput> {
    let models = config.validate()?;
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for (di, path) in config.datasets.iter().enumerate() {
        let name = dataset_name(path);
        match sweep_dataset(config, &models, di as u64, path, &name) {
            Ok(dataset_rows) => rows.extend(dataset_rows),
            Err(e) => skipped.push((name, e.to_string())),
        }
    }
    Ok(SweepOutput { rows, skipped })
}

fn sweep_dataset(
    config: &ExperimentConfig,
    models: &[ModelId],
    di: u64,
    path: &str,
    name: &str,
) -> Result<Vec<ResultRow>> {
    let ds = load_csv(path)?;
    let noisy = inject_label_noise(&ds, config.noise_fraction, &mut derive_rng(config.seed, di, 0))?;
    let assignment =
        stratified_kfold(&noisy, config.folds, &mut derive_rng(config.seed, di, 1))?;
    let per_fold: Vec<Vec<f64>> = (0..config.folds)
        .into_par_iter()
        .map(|f| fold_accuracies(&noisy, &assignment, f, models, &config.a_grid))
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(models.len() * config.a_grid.len() * config.folds);
    for (mi, model) in models.iter().enumerate() {
        for (ai, &a) in config.a_grid.iter().enumerate() {
            for (f, accuracies) in per_fold.iter().enumerate() {
                if let Some(&ba) = accuracies.get(mi * config.a_grid.len() + ai) {
                    if ba.is_nan() {
                        continue;
                    }
                    rows.push(ResultRow {
                        dataset: name.to_string(),
                        model: model.to_string(),
                        a,
                        fold: f,
                        balanced_accuracy: ba,
                    });
                }
            }
        }
    }
    Ok(rows)
}

/// Balanced accuracy per (model, a) on one fold, laid out model-major;
/// a degenerate fold yields NaN markers instead of rows.
fn fold_accuracies(
    noisy: &DecisionSystem,
    assignment: &[usize],
    fold: usize,
    models: &[ModelId],
    a_grid: &[f64],
) -> Result<Vec<f64>> {
    let train_idx: Vec<usize> =
        (0..noisy.n_instances()).filter(|&i| assignment[i] != fold).collect();
    let test_idx: Vec<usize> =
        (0..noisy.n_instances()).filter(|&i| assignment[i] == fold).collect();
    if train_idx.is_empty() || test_idx.is_empty() {
        log::warn!("fold {fold} is degenerate (empty train or test side); skipping");
        return Ok(vec![f64::NAN; models.len() * a_grid.len()]);
    }
    let train = noisy.subset(&train_idx)?;
    let test = noisy.subset(&test_idx)?;
    let foresets = similarity(&train, test.instances())?;
    let mut accuracies = Vec::with_capacity(models.len() * a_grid.len());
    for model in models {
        for &a in a_grid {
            let rim = RimQuantifier::zadeh_s(a, 1.0)?;
            let spec = named_model(*model, &rim);
            let predicted = classify_with_foresets(&train, &foresets, &spec)?;
            accuracies.push(balanced_accuracy(&predicted, test.labels())?);
        }
    }
    Ok(accuracies)
}

/// Mean balanced accuracy and mean fractional rank per (a, model).
#[derive(Clone, Debug, PartialEq)]
pub struct PlotRow {
    pub a: f64,
    pub model: String,
    pub mean_balanced_accuracy: f64,
    pub mean_fractional_rank: f64,
}

fn unique_in_order<T: PartialEq + Clone>(items: impl Iterator<Item = T>) -> Vec<T> {
    let mut seen = Vec::new();
    for item in items {
        if !seen.contains(&item) {
            seen.push(item);
        }
    }
    seen
}

/// Aggregates sweep rows into per-(a, model) plot data, ranking models within
/// each (dataset, fold, a) cell.
pub fn plot_data(rows: &[ResultRow]) -> Vec<PlotRow> {
    let models = unique_in_order(rows.iter().map(|r| r.model.clone()));
    let a_values = unique_in_order(rows.iter().map(|r| r.a));
    let cells = unique_in_order(rows.iter().map(|r| (r.dataset.clone(), r.fold)));
    let mut out = Vec::new();
    for &a in &a_values {
        let mut rank_sums = vec![0.0; models.len()];
        let mut rank_counts = 0usize;
        for (dataset, fold) in &cells {
            let scores: Vec<f64> = models
                .iter()
                .map(|m| {
                    rows.iter()
                        .find(|r| {
                            &r.dataset == dataset && r.fold == *fold && r.a == a && &r.model == m
                        })
                        .map(|r| r.balanced_accuracy)
                })
                .collect::<Option<_>>()
                .unwrap_or_default();
            if scores.len() == models.len() {
                for (mi, rank) in fractional_rank(&scores).into_iter().enumerate() {
                    rank_sums[mi] += rank;
                }
                rank_counts += 1;
            }
        }
        for (mi, model) in models.iter().enumerate() {
            let accuracies: Vec<f64> = rows
                .iter()
                .filter(|r| r.a == a && &r.model == model)
                .map(|r| r.balanced_accuracy)
                .collect();
            if accuracies.is_empty() {
                continue;
            }
            out.push(PlotRow {
                a,
                model: model.clone(),
                mean_balanced_accuracy: accuracies.iter().sum::<f64>()
                    / accuracies.len() as f64,
                mean_fractional_rank: if rank_counts > 0 {
                    rank_sums[mi] / rank_counts as f64
                } else {
                    f64::NAN
                },
            });
        }
    }
    out
}

/// A pairwise significance measurement at one quantifier setting.
#[derive(Clone, Debug, PartialEq)]
pub struct StatsRow {
    pub a: f64,
    pub model_1: String,
    pub model_2: String,
    pub p_value: f64,
}

/// Two-sided signed-rank p-values for every model pair at every a, pairing
/// measurements by (dataset, fold); undefined tests yield NaN.
pub fn pairwise_stats(rows: &[ResultRow]) -> Vec<StatsRow> {
    let models = unique_in_order(rows.iter().map(|r| r.model.clone()));
    let a_values = unique_in_order(rows.iter().map(|r| r.a));
    let mut out = Vec::new();
    for &a in &a_values {
        for i in 0..models.len() {
            for j in i + 1..models.len() {
                let series = |model: &String| -> Vec<(String, usize, f64)> {
                    rows.iter()
                        .filter(|r| r.a == a && &r.model == model)
                        .map(|r| (r.dataset.clone(), r.fold, r.balanced_accuracy))
                        .collect()
                };
                let xs = series(&models[i]);
                let ys = series(&models[j]);
                let paired: Vec<(f64, f64)> = xs
                    .iter()
                    .filter_map(|(d, f, x)| {
                        ys.iter()
                            .find(|(d2, f2, _)| d2 == d && f2 == f)
                            .map(|&(_, _, y)| (*x, y))
                    })
                    .collect();
                let x: Vec<f64> = paired.iter().map(|p| p.0).collect();
                let y: Vec<f64> = paired.iter().map(|p| p.1).collect();
                let p_value = match wilcoxon_signed_rank(&x, &y) {
                    Ok(p) => p,
                    Err(Error::StatUndefined(_)) => f64::NAN,
                    Err(e) => {
                        log::warn!("signed-rank test failed: {e}");
                        f64::NAN
                    }
                };
                out.push(StatsRow {
                    a,
                    model_1: models[i].clone(),
                    model_2: models[j].clone(),
                    p_value,
                });
            }
        }
    }
    out
}

/// Renders rows as `dataset,model,a,fold,balanced_accuracy`.
pub fn results_csv(rows: &[ResultRow]) -> String {
    let mut out = String::from("dataset,model,a,fold,balanced_accuracy\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.dataset,
            r.model,
            r.a,
            r.fold,
            fmt_sig(r.balanced_accuracy, 10)
        ));
    }
    out
}

/// Renders plot data as `a,model,mean_balanced_accuracy,mean_fractional_rank`.
pub fn plotdata_csv(rows: &[PlotRow]) -> String {
    let mut out = String::from("a,model,mean_balanced_accuracy,mean_fractional_rank\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.a,
            r.model,
            fmt_sig(r.mean_balanced_accuracy, 10),
            fmt_sig(r.mean_fractional_rank, 10)
        ));
    }
    out
}

/// Renders significance results as `a,model_1,model_2,p_value`.
pub fn stats_csv(rows: &[StatsRow]) -> String {
    let mut out = String::from("a,model_1,model_2,p_value\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.a, r.model_1, r.model_2, fmt_sig(r.p_value, 10)));
    }
    out
}

pub fn write_results_csv(rows: &[ResultRow], path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, results_csv(rows))?;
    Ok(())
}

pub fn write_plotdata_csv(rows: &[PlotRow], path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, plotdata_csv(rows))?;
    Ok(())
}

pub fn write_stats_csv(rows: &[StatsRow], path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, stats_csv(rows))?;
    Ok(())
}

/// Reads back a results CSV produced by [`results_csv`].
pub fn read_results_csv(path: impl AsRef<Path>) -> Result<Vec<ResultRow>> {
    let path = path.as_ref();
    let content = std::fs::read_to_string(path)?;
    let mut lines = content.lines();
    let header = lines.next().unwrap_or_default();
    if header != "dataset,model,a,fold,balanced_accuracy" {
        return Err(Error::Parse(format!("{}: unexpected header {header:?}", path.display())));
    }
    let mut rows = Vec::new();
    for (idx, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 5 {
            return Err(Error::Parse(format!(
                "{}:{}: expected 5 fields, found {}",
                path.display(),
                idx + 2,
                fields.len()
            )));
        }
        let numeric = |field: &str| -> Result<f64> {
            field.parse().map_err(|_| {
                Error::Parse(format!("{}:{}: {field:?} is not numeric", path.display(), idx + 2))
            })
        };
        rows.push(ResultRow {
            dataset: fields[0].to_string(),
            model: fields[1].to_string(),
            a: numeric(fields[2])?,
            fold: numeric(fields[3])? as usize,
            balanced_accuracy: numeric(fields[4])?,
        });
    }
    Ok(rows)
}
