//! Lower-approximation classifier and the balanced accuracy metric.

use crate::error::{Error, Result};
use crate::experiment::dataset::{similarity, DecisionSystem};
use crate::frs::ApproximationSpec;
use crate::fuzzy::FuzzySet;

/// Crisp concept set of each class over the training instances, in label order.
pub fn class_concepts(train: &DecisionSystem) -> Vec<FuzzySet> {
    train
        .label_order()
        .iter()
        .map(|label| {
            FuzzySet::new(
                train.labels().iter().map(|l| if l == label { 1.0 } else { 0.0 }).collect(),
            )
            .expect("crisp memberships are valid")
        })
        .collect()
}

/// Assigns each query the class whose lower approximation it belongs to most;
/// ties go to the earliest class in label order.
pub fn classify(
    train: &DecisionSystem,
    queries: &[Vec<f64>],
    spec: &ApproximationSpec,
) -> Result<Vec<String>> {
    classify_with_foresets(train, &similarity(train, queries)?, spec)
}

/// [`classify`] on precomputed query foresets over the training universe.
pub fn classify_with_foresets(
    train: &DecisionSystem,
    foresets: &[FuzzySet],
    spec: &ApproximationSpec,
) -> Result<Vec<String>> {
    let concepts = class_concepts(train);
    foresets
        .iter()
        .map(|foreset| {
            let mut best = 0usize;
            let mut best_value = f64::NEG_INFINITY;
            for (c, concept) in concepts.iter().enumerate() {
                let value = spec.lower_membership(foreset, concept)?;
                if value > best_value {
                    best = c;
                    best_value = value;
                }
            }
            Ok(train.label_order()[best].clone())
        })
        .collect()
}

/// Mean per-class recall over the classes present in the truth.
pub fn balanced_accuracy(predicted: &[String], truth: &[String]) -> Result<f64> {
    if predicted.len() != truth.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} predictions for {} truth labels",
            predicted.len(),
            truth.len()
        )));
    }
    if truth.is_empty() {
        return Err(Error::StatUndefined("balanced accuracy over zero instances".into()));
    }
    let mut classes: Vec<&String> = truth.iter().collect();
    classes.sort();
    classes.dedup();
    let mut total = 0.0;
    for class in &classes {
        let members: Vec<usize> = (0..truth.len()).filter(|&i| &truth[i] == *class).collect();
        let hits = members.iter().filter(|&&i| predicted[i] == truth[i]).count();
        total += hits as f64 / members.len() as f64;
    }
    Ok(total / classes.len() as f64)
}
