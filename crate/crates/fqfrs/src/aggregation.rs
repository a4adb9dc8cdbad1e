//! Weighted aggregation: OWA operators, monotone measures and the
//! discrete Choquet integral that ties the two together.

use crate::error::{Error, Result};
use crate::fuzzy::{CrispSet, FuzzySet};
use crate::quantifiers::RimQuantifier;

/// Non-negative weights that sum to one (within 1e-12); never renormalized.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightVector {
    weights: Vec<f64>,
}

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("weight vector must be non-empty".into()));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < 0.0) {
            return Err(Error::InvalidWeights(format!("weights must be non-negative, got {w}")));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidWeights(format!("weights must sum to 1, got {sum}")));
        }
        Ok(WeightVector { weights })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }
}

/// Set function evaluated by the Choquet integral.
///
/// Implementations must be monotone with respect to set inclusion and map
/// the empty set to 0 and the universe to 1.
pub trait MonotoneMeasure {
    fn measure(&self, subset: &CrispSet) -> f64;
}

impl<F: Fn(&CrispSet) -> f64> MonotoneMeasure for F {
    fn measure(&self, subset: &CrispSet) -> f64 {
        self(subset)
    }
}

/// Monotone measure that depends only on subset cardinality,
/// stored as the cumulative value per cardinality `0..=n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMeasure {
    cumulative: Vec<f64>,
}

impl SymmetricMeasure {
    /// Builds a symmetric measure from `μ(|S|=k)` for `k = 0..=n`.
    pub fn new(cumulative: Vec<f64>) -> Result<Self> {
        if cumulative.len() < 2 {
            return Err(Error::InvalidMeasure("need values for cardinalities 0..=n, n ≥ 1".into()));
        }
        if cumulative[0] != 0.0 {
            return Err(Error::InvalidMeasure("empty set must measure 0".into()));
        }
        if *cumulative.last().unwrap() != 1.0 {
            return Err(Error::InvalidMeasure("full universe must measure 1".into()));
        }
        if cumulative.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::InvalidMeasure("measure must be non-decreasing".into()));
        }
        Ok(SymmetricMeasure { cumulative })
    }

    /// Number of universe elements the measure is defined over.
    pub fn universe_size(&self) -> usize {
        self.cumulative.len() - 1
    }

    pub fn cumulative(&self) -> &[f64] {
        &self.cumulative
    }

    pub fn at_cardinality(&self, k: usize) -> f64 {
        self.cumulative[k]
    }
}

impl MonotoneMeasure for SymmetricMeasure {
    fn measure(&self, subset: &CrispSet) -> f64 {
        self.cumulative[subset.cardinality()]
    }
}

/// Ordered weighted average: `w[i]` multiplies the i-th largest input.
pub fn owa(weights: &WeightVector, f: &FuzzySet) -> Result<f64> {
    if weights.len() != f.universe_size() {
        return Err(Error::DimensionMismatch(format!(
            "{} weights cannot aggregate {} values",
            weights.len(),
            f.universe_size()
        )));
    }
    let mut sorted = f.memberships().to_vec();
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(weights.as_slice().iter().zip(&sorted).map(|(w, v)| w * v).sum())
}

/// Discrete Choquet integral of `f` with respect to a monotone measure.
pub fn choquet<M: MonotoneMeasure + ?Sized>(measure: &M, f: &FuzzySet) -> f64 {
    let n = f.universe_size();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| f.membership(i).partial_cmp(&f.membership(j)).unwrap());
    let mut top = CrispSet::universe(n);
    let mut total = 0.0;
    let mut prev = 0.0;
    for &i in &order {
        total += measure.measure(&top) * (f.membership(i) - prev);
        prev = f.membership(i);
        top.remove(i);
    }
    total
}

/// Symmetric measure induced by a regular increasing monotone quantifier:
/// a set of cardinality k measures `Λ(k/n)`.
pub fn measure_from_rim(rim: &RimQuantifier, n: usize) -> Result<SymmetricMeasure> {
    if n == 0 {
        return Err(Error::InvalidMeasure("universe must contain at least one element".into()));
    }
    let mut cumulative = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let value = rim.eval(k as f64 / n as f64);
        let floor = cumulative.last().copied().unwrap_or(0.0);
        cumulative.push(value.max(floor));
    }
    SymmetricMeasure::new(cumulative)
}

/// Step quantifier whose induced measure is exactly `measure`.
pub fn rim_from_measure(measure: &SymmetricMeasure) -> RimQuantifier {
    RimQuantifier::step(measure.cumulative().to_vec())
}

/// OWA weights equivalent to Choquet integration against a symmetric measure.
pub fn owa_weights_from_measure(measure: &SymmetricMeasure) -> Result<WeightVector> {
    WeightVector::new(measure.cumulative().windows(2).map(|w| w[1] - w[0]).collect())
}
