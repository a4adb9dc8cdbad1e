//! Decision systems: CSV ingestion, attribute-scaled similarity, label noise
//! and stratified fold assignment.

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyRelation, FuzzySet};
use rand::seq::SliceRandom;
use rand::Rng;
use std::path::Path;

/// A classification dataset: numeric conditional attributes plus a class label
/// per instance.
#[derive(Clone, Debug, PartialEq)]
pub struct DecisionSystem {
    instances: Vec<Vec<f64>>,
    labels: Vec<String>,
    label_order: Vec<String>,
}

impl DecisionSystem {
    pub fn new(instances: Vec<Vec<f64>>, labels: Vec<String>) -> Result<Self> {
        if instances.is_empty() {
            return Err(Error::Config("a decision system needs at least one instance".into()));
        }
        if instances.len() != labels.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} instances but {} labels",
                instances.len(),
                labels.len()
            )));
        }
        let width = instances[0].len();
        if width == 0 {
            return Err(Error::Config("a decision system needs at least one attribute".into()));
        }
        for (i, row) in instances.iter().enumerate() {
            if row.len() != width {
                return Err(Error::DimensionMismatch(format!(
                    "instance {i} has {} attributes, expected {width}",
                    row.len()
                )));
            }
            if let Some(j) = row.iter().position(|v| !v.is_finite()) {
                return Err(Error::OutOfRange(format!(
                    "instance {i}, attribute {j} is not finite"
                )));
            }
        }
        let mut label_order = labels.clone();
        label_order.sort();
        label_order.dedup();
        Ok(DecisionSystem { instances, labels, label_order })
    }

    pub fn n_instances(&self) -> usize {
        self.instances.len()
    }

    pub fn n_attributes(&self) -> usize {
        self.instances[0].len()
    }

    pub fn instances(&self) -> &[Vec<f64>] {
        &self.instances
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Distinct labels in ascending lexicographic order.
    pub fn label_order(&self) -> &[String] {
        &self.label_order
    }

    /// The sub-system holding the given instances, in the given order.
    pub fn subset(&self, indices: &[usize]) -> Result<Self> {
        for &i in indices {
            if i >= self.n_instances() {
                return Err(Error::IndexOutOfRange { index: i, size: self.n_instances() });
            }
        }
        DecisionSystem::new(
            indices.iter().map(|&i| self.instances[i].clone()).collect(),
            indices.iter().map(|&i| self.labels[i].clone()).collect(),
        )
    }

    /// Population standard deviation of each attribute.
    pub fn attribute_stddevs(&self) -> Vec<f64> {
        let n = self.n_instances() as f64;
        (0..self.n_attributes())
            .map(|j| {
                let mean = self.instances.iter().map(|row| row[j]).sum::<f64>() / n;
                let var =
                    self.instances.iter().map(|row| (row[j] - mean).powi(2)).sum::<f64>() / n;
                var.sqrt()
            })
            .collect()
    }
}

/// Loads a decision system from headered CSV: numeric columns followed by one
/// label column.
pub fn load_csv(path: impl AsRef<Path>) -> Result<DecisionSystem> {
    let path = path.as_ref();
    let file = std::fs::File::open(path)?;
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(file);
    let width = reader.headers().map_err(|e| Error::Parse(e.to_string()))?.len();
    if width < 2 {
        return Err(Error::Parse(format!(
            "{} needs at least one attribute column and a label column",
            path.display()
        )));
    }
    let mut instances = Vec::new();
    let mut labels = Vec::new();
    for (idx, record) in reader.records().enumerate() {
        let row_no = idx + 2;
        let record = record.map_err(|e| Error::Parse(e.to_string()))?;
        if record.len() != width {
            return Err(Error::Parse(format!(
                "{}:{row_no}: expected {width} columns, found {}",
                path.display(),
                record.len()
            )));
        }
        let mut features = Vec::with_capacity(width - 1);
        for col in 0..width - 1 {
            let cell = record.get(col).unwrap();
            let value: f64 = cell.trim().parse().map_err(|_| {
                Error::Parse(format!(
                    "{}:{row_no}: column {} is not numeric: {cell:?}",
                    path.display(),
                    col + 1
                ))
            })?;
            features.push(value);
        }
        instances.push(features);
        labels.push(record.get(width - 1).unwrap().trim().to_string());
    }
    if instances.is_empty() {
        return Err(Error::Parse(format!("{} holds no data rows", path.display())));
    }
    DecisionSystem::new(instances, labels)
}

/// Mean over attributes of `max(1 - |Δ|/σ, 0)`, with σ taken from the training
/// data; a constant attribute counts as fully similar.
fn instance_similarity(stddevs: &[f64], x: &[f64], y: &[f64]) -> f64 {
    let total: f64 = stddevs
        .iter()
        .zip(x.iter().zip(y))
        .map(|(&sd, (&xv, &yv))| {
            if sd == 0.0 {
                1.0
            } else {
                (1.0 - (xv - yv).abs() / sd).max(0.0)
            }
        })
        .sum();
    total / stddevs.len() as f64
}

/// Foreset of each query instance over the training universe.
pub fn similarity(train: &DecisionSystem, queries: &[Vec<f64>]) -> Result<Vec<FuzzySet>> {
    let stddevs = train.attribute_stddevs();
    queries
        .iter()
        .map(|q| {
            if q.len() != train.n_attributes() {
                return Err(Error::DimensionMismatch(format!(
                    "query has {} attributes, training data has {}",
                    q.len(),
                    train.n_attributes()
                )));
            }
            FuzzySet::new(
                train.instances().iter().map(|t| instance_similarity(&stddevs, q, t)).collect(),
            )
        })
        .collect()
}

/// Train-by-train similarity as a fuzzy relation; reflexive and symmetric.
pub fn similarity_relation(train: &DecisionSystem) -> Result<FuzzyRelation> {
    let foresets = similarity(train, train.instances())?;
    let n = train.n_instances();
    let mut values = vec![0.0; n * n];
    for (y, foreset) in foresets.iter().enumerate() {
        for x in 0..n {
            values[x * n + y] = foreset.membership(x);
        }
    }
    FuzzyRelation::new(n, values)
}

/// Replaces the label of `⌊fraction·n⌋` distinct instances with a uniformly
/// chosen different label.
pub fn inject_label_noise(
    ds: &DecisionSystem,
    fraction: f64,
    rng: &mut impl Rng,
) -> Result<DecisionSystem> {
    if !(0.0..=1.0).contains(&fraction) {
        return Err(Error::OutOfRange(format!("noise fraction must lie in [0,1], got {fraction}")));
    }
    let count = (fraction * ds.n_instances() as f64).floor() as usize;
    if count == 0 {
        return Ok(ds.clone());
    }
    if ds.label_order().len() < 2 {
        return Err(Error::Config(
            "cannot inject label noise into a single-class dataset".into(),
        ));
    }
    let chosen = rand::seq::index::sample(rng, ds.n_instances(), count);
    let mut labels = ds.labels().to_vec();
    for i in chosen {
        let others: Vec<&String> =
            ds.label_order().iter().filter(|&l| *l != labels[i]).collect();
        labels[i] = others[rng.gen_range(0..others.len())].clone();
    }
    DecisionSystem::new(ds.instances().to_vec(), labels)
}

/// Assigns each instance to one of `k` folds, balancing every class across
/// folds to within one instance.
pub fn stratified_kfold(ds: &DecisionSystem, k: usize, rng: &mut impl Rng) -> Result<Vec<usize>> {
    if k < 2 {
        return Err(Error::Config(format!("cross-validation needs at least 2 folds, got {k}")));
    }
    if k > ds.n_instances() {
        return Err(Error::Config(format!(
            "{k} folds exceed the {} available instances",
            ds.n_instances()
        )));
    }
    let mut assignment = vec![0usize; ds.n_instances()];
    for label in ds.label_order() {
        let mut members: Vec<usize> = (0..ds.n_instances())
            .filter(|&i| &ds.labels()[i] == label)
            .collect();
        members.shuffle(rng);
        for (j, &i) in members.iter().enumerate() {
            assignment[i] = j % k;
        }
    }
    Ok(assignment)
}
