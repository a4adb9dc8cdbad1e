//! Fuzzy sets, crisp sets and fuzzy relations on finite universes,
//! together with the logical connectives the approximation models use.

use crate::error::{Error, Result};

/// Binary connective on membership degrees.
pub type BinaryOp = fn(f64, f64) -> f64;
/// Unary connective on membership degrees.
pub type UnaryOp = fn(f64) -> f64;

fn check_unit(value: f64, what: &str) -> Result<()> {
    if value.is_finite() && (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("{what} must lie in [0,1], got {value}")))
    }
}

/// Kleene-Dienes implication `max(1 - x, y)` with range-checked inputs.
pub fn kd_implicator(x: f64, y: f64) -> Result<f64> {
    check_unit(x, "implicator argument")?;
    check_unit(y, "implicator argument")?;
    Ok(kd(x, y))
}

/// Minimum conjunction with range-checked inputs.
pub fn min_conjunctor(x: f64, y: f64) -> Result<f64> {
    check_unit(x, "conjunctor argument")?;
    check_unit(y, "conjunctor argument")?;
    Ok(x.min(y))
}

/// Standard negation `1 - x` with range-checked input.
pub fn standard_negator(x: f64) -> Result<f64> {
    check_unit(x, "negator argument")?;
    Ok(1.0 - x)
}

pub(crate) fn kd(x: f64, y: f64) -> f64 {
    (1.0 - x).max(y)
}

fn min_op(x: f64, y: f64) -> f64 {
    x.min(y)
}

fn neg_op(x: f64) -> f64 {
    1.0 - x
}

/// The implicator/conjunctor/negator triple an approximation model evaluates with.
#[derive(Clone, Copy)]
pub struct Connectives {
    pub implicator: BinaryOp,
    pub conjunctor: BinaryOp,
    pub negator: UnaryOp,
}

impl Connectives {
    /// Kleene-Dienes implicator, minimum conjunctor, standard negator.
    pub fn kleene_dienes() -> Self {
        Connectives { implicator: kd, conjunctor: min_op, negator: neg_op }
    }
}

impl Default for Connectives {
    fn default() -> Self {
        Connectives::kleene_dienes()
    }
}

impl std::fmt::Debug for Connectives {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("Connectives { .. }")
    }
}

/// Crisp subset of a finite universe `{0, .., n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrispSet {
    members: Vec<bool>,
}

impl CrispSet {
    /// Empty set over a universe of `n` elements.
    pub fn empty(n: usize) -> Self {
        CrispSet { members: vec![false; n] }
    }

    /// The whole universe of `n` elements.
    pub fn universe(n: usize) -> Self {
        CrispSet { members: vec![true; n] }
    }

    /// Set from a membership mask.
    pub fn from_mask(members: Vec<bool>) -> Self {
        CrispSet { members }
    }

    /// Set over `{0, .., n-1}` containing exactly `indices`.
    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        let mut members = vec![false; n];
        for &i in indices {
            *members.get_mut(i).ok_or(Error::IndexOutOfRange { index: i, size: n })? = true;
        }
        Ok(CrispSet { members })
    }

    pub fn universe_size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members[x]
    }

    pub fn insert(&mut self, x: usize) {
        self.members[x] = true;
    }

    pub fn remove(&mut self, x: usize) {
        self.members[x] = false;
    }

    /// Number of elements in the set.
    pub fn cardinality(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    /// Indices of the members in ascending order.
    pub fn iter_members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().enumerate().filter_map(|(i, &m)| m.then_some(i))
    }

    pub fn complement(&self) -> CrispSet {
        CrispSet { members: self.members.iter().map(|&m| !m).collect() }
    }

    pub fn is_subset_of(&self, other: &CrispSet) -> bool {
        self.members.len() == other.members.len()
            && self.members.iter().zip(&other.members).all(|(&a, &b)| !a || b)
    }

    /// Cardinality of the intersection with `other`.
    pub fn intersection_count(&self, other: &CrispSet) -> usize {
        self.members.iter().zip(&other.members).filter(|&(&a, &b)| a && b).count()
    }
}

/// Fuzzy set on a finite universe, stored as one membership degree per element.
#[derive(Clone, Debug, PartialEq)]
pub struct FuzzySet {
    memberships: Vec<f64>,
}

impl FuzzySet {
    /// Builds a fuzzy set, rejecting empty universes and degrees outside [0,1].
    pub fn new(memberships: Vec<f64>) -> Result<Self> {
        if memberships.is_empty() {
            return Err(Error::OutOfRange("universe must contain at least one element".into()));
        }
        for (i, &m) in memberships.iter().enumerate() {
            check_unit(m, &format!("membership of element {i}"))?;
        }
        Ok(FuzzySet { memberships })
    }

    /// Characteristic function of a crisp set.
    pub fn from_crisp(set: &CrispSet) -> Self {
        FuzzySet {
            memberships: (0..set.universe_size())
                .map(|i| if set.contains(i) { 1.0 } else { 0.0 })
                .collect(),
        }
    }

    pub fn universe_size(&self) -> usize {
        self.memberships.len()
    }

    pub fn membership(&self, x: usize) -> f64 {
        self.memberships[x]
    }

    pub fn memberships(&self) -> &[f64] {
        &self.memberships
    }

    /// The sigma count `Σ_x A(x)`.
    pub fn sigma_count(&self) -> f64 {
        self.memberships.iter().sum()
    }

    /// Alpha cut `{x : A(x) ≥ α}`, or `{x : A(x) > α}` when `strict`.
    pub fn alpha_cut(&self, alpha: f64, strict: bool) -> CrispSet {
        CrispSet {
            members: self
                .memberships
                .iter()
                .map(|&m| if strict { m > alpha } else { m >= alpha })
                .collect(),
        }
    }

    /// Three-valued cut `(A_min, A_max)` at level `gamma`.
    ///
    /// For `gamma > 0` these are the cuts at `(1+γ)/2` (non-strict) and
    /// `(1-γ)/2` (strict); at `gamma = 0` they are the strict and non-strict
    /// cuts at one half. Each element's comparisons are done against its own
    /// transition level `|2m-1|` so the cut changes at exactly that float.
    pub fn three_valued_cut(&self, gamma: f64) -> (CrispSet, CrispSet) {
        let mut min_members = vec![false; self.memberships.len()];
        let mut max_members = vec![false; self.memberships.len()];
        for (i, &m) in self.memberships.iter().enumerate() {
            if gamma > 0.0 {
                let t = (2.0 * m - 1.0).abs();
                if m > 0.5 {
                    min_members[i] = gamma <= t;
                    max_members[i] = true;
                } else {
                    max_members[i] = m >= 0.5 || gamma > t;
                }
            } else {
                min_members[i] = m > 0.5;
                max_members[i] = m >= 0.5;
            }
        }
        (CrispSet { members: min_members }, CrispSet { members: max_members })
    }

    /// Complement under the standard negator.
    pub fn complement(&self) -> FuzzySet {
        FuzzySet { memberships: self.memberships.iter().map(|&m| 1.0 - m).collect() }
    }
}

/// Combines two fuzzy sets elementwise with a binary connective.
pub fn pointwise(op: BinaryOp, a: &FuzzySet, b: &FuzzySet) -> Result<FuzzySet> {
    if a.universe_size() != b.universe_size() {
        return Err(Error::DimensionMismatch(format!(
            "fuzzy sets live on universes of size {} and {}",
            a.universe_size(),
            b.universe_size()
        )));
    }
    let memberships =
        a.memberships.iter().zip(&b.memberships).map(|(&x, &y)| op(x, y)).collect();
    Ok(FuzzySet { memberships })
}

/// Generalized median: `min` if both exceed one half, `max` if both fall below, else one half.
pub fn fuzzy_median(a: f64, b: f64) -> f64 {
    let lo = a.min(b);
    let hi = a.max(b);
    if lo > 0.5 {
        lo
    } else if hi < 0.5 {
        hi
    } else {
        0.5
    }
}

/// Binary fuzzy relation on a finite universe, stored row-major as `R(x, y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FuzzyRelation {
    n: usize,
    values: Vec<f64>,
}

impl FuzzyRelation {
    /// Builds an `n × n` relation from row-major values in [0,1].
    pub fn new(n: usize, values: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("universe must contain at least one element".into()));
        }
        if values.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "expected {} relation values for universe of size {n}, got {}",
                n * n,
                values.len()
            )));
        }
        for (i, &v) in values.iter().enumerate() {
            check_unit(v, &format!("relation value at ({}, {})", i / n, i % n))?;
        }
        Ok(FuzzyRelation { n, values })
    }

    /// Identity relation: 1 on the diagonal, 0 elsewhere.
    pub fn identity(n: usize) -> Self {
        let mut values = vec![0.0; n * n];
        for i in 0..n {
            values[i * n + i] = 1.0;
        }
        FuzzyRelation { n, values }
    }

    pub fn universe_size(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.values[x * self.n + y]
    }

    /// The foreset `Ry(x) = R(x, y)` of element `y` as a fuzzy set.
    pub fn foreset(&self, y: usize) -> Result<FuzzySet> {
        if y >= self.n {
            return Err(Error::IndexOutOfRange { index: y, size: self.n });
        }
        Ok(FuzzySet { memberships: (0..self.n).map(|x| self.get(x, y)).collect() })
    }

    /// True when every element relates to itself with degree 1.
    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) == 1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(values: &[f64]) -> FuzzySet {
        FuzzySet::new(values.to_vec()).unwrap()
    }

    #[test]
    fn kd_implicator_known_values() {
        assert_eq!(kd_implicator(1.0, 0.0).unwrap(), 0.0);
        assert_eq!(kd_implicator(0.3, 0.0).unwrap(), 0.7);
        assert_eq!(kd_implicator(0.0, 0.4).unwrap(), 1.0);
    }

    #[test]
    fn kd_implicator_rejects_out_of_range() {
        assert!(kd_implicator(1.2, 0.0).is_err());
        assert!(kd_implicator(0.5, -0.1).is_err());
        assert!(kd_implicator(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn kd_implicator_axioms_on_grid() {
        let grid: Vec<f64> = (0..=10).map(|i| i as f64 / 10.0).collect();
        for &x in &grid {
            for &y in &grid {
                let v = kd_implicator(x, y).unwrap();
                assert!((0.0..=1.0).contains(&v));
                for &x2 in &grid {
                    if x2 >= x {
                        assert!(kd_implicator(x2, y).unwrap() <= v + 1e-15);
                    }
                }
                for &y2 in &grid {
                    if y2 >= y {
                        assert!(kd_implicator(x, y2).unwrap() >= v - 1e-15);
                    }
                }
            }
        }
        assert_eq!(kd_implicator(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(kd_implicator(1.0, 1.0).unwrap(), 1.0);
        assert_eq!(kd_implicator(1.0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn pointwise_kd_on_worked_example() {
        let ry = fs(&[1.0, 0.2, 0.0, 0.0, 0.0, 0.3]);
        let a = fs(&[1.0, 1.0, 0.5, 0.8, 1.0, 0.7]);
        let i = pointwise(kd, &ry, &a).unwrap();
        assert_eq!(i.memberships(), &[1.0, 1.0, 1.0, 1.0, 1.0, 0.7]);
    }

    #[test]
    fn pointwise_min_is_idempotent() {
        let a = fs(&[0.2, 0.9, 0.5]);
        let m = pointwise(min_op, &a, &a).unwrap();
        assert_eq!(m, a);
    }

    #[test]
    fn pointwise_rejects_mismatched_universes() {
        let a = fs(&[0.2, 0.9]);
        let b = fs(&[0.2, 0.9, 0.5]);
        assert!(matches!(pointwise(min_op, &a, &b), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn sigma_count_sums_memberships() {
        assert_eq!(fs(&[0.0, 0.0]).sigma_count(), 0.0);
        assert_eq!(fs(&[1.0, 0.2, 0.3]).sigma_count(), 1.5);
        let crisp = FuzzySet::from_crisp(&CrispSet::from_indices(5, &[0, 2, 4]).unwrap());
        assert_eq!(crisp.sigma_count(), 3.0);
    }

    #[test]
    fn alpha_cut_boundaries() {
        let a = fs(&[0.4, 0.5, 0.9, 0.0]);
        let support = a.alpha_cut(0.0, true);
        assert_eq!(support.iter_members().collect::<Vec<_>>(), vec![0, 1, 2]);
        let core = a.alpha_cut(1.0, false);
        assert_eq!(core.cardinality(), 0);
        let at_half = a.alpha_cut(0.5, false);
        assert_eq!(at_half.iter_members().collect::<Vec<_>>(), vec![1, 2]);
        let above_half = a.alpha_cut(0.5, true);
        assert_eq!(above_half.iter_members().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn three_valued_cut_at_zero_and_one() {
        let a = fs(&[0.4, 0.5, 0.9]);
        let (min0, max0) = a.three_valued_cut(0.0);
        assert_eq!(min0.iter_members().collect::<Vec<_>>(), vec![2]);
        assert_eq!(max0.iter_members().collect::<Vec<_>>(), vec![1, 2]);
        let (min1, max1) = a.three_valued_cut(1.0);
        assert_eq!(min1.cardinality(), 0);
        assert_eq!(max1.iter_members().collect::<Vec<_>>(), vec![0, 1, 2]);
    }

    #[test]
    fn three_valued_cut_interior_level() {
        let a = fs(&[0.9]);
        let (min, max) = a.three_valued_cut(0.5);
        assert!(min.contains(0) && max.contains(0));
        let b = fs(&[0.7]);
        let (min, max) = b.three_valued_cut(0.5);
        assert!(!min.contains(0) && max.contains(0));
    }

    #[test]
    fn three_valued_cut_nesting_and_negation_symmetry() {
        let a = fs(&[0.13, 0.5, 0.77, 0.98, 0.42]);
        let mut prev: Option<(CrispSet, CrispSet)> = None;
        for gamma in [0.0, 0.2, 0.5, 0.8, 1.0] {
            let (min, max) = a.three_valued_cut(gamma);
            assert!(min.is_subset_of(&max));
            if let Some((pmin, pmax)) = prev {
                assert!(min.is_subset_of(&pmin));
                assert!(pmax.is_subset_of(&max));
            }
            let (nmin, _) = a.complement().three_valued_cut(gamma);
            assert_eq!(nmin, max.complement());
            prev = Some((min, max));
        }
    }

    #[test]
    fn fuzzy_median_three_branches() {
        assert_eq!(fuzzy_median(0.8, 0.6), 0.6);
        assert_eq!(fuzzy_median(0.2, 0.4), 0.4);
        assert_eq!(fuzzy_median(0.3, 0.9), 0.5);
        assert_eq!(fuzzy_median(0.5, 0.9), 0.5);
        for a in [0.1, 0.5, 0.7] {
            assert_eq!(fuzzy_median(a, a), a);
            assert_eq!(fuzzy_median(a, 1.0 - a), 0.5);
        }
        assert_eq!(fuzzy_median(0.2, 0.7), fuzzy_median(0.7, 0.2));
    }

    #[test]
    fn foreset_reads_a_column() {
        let r = FuzzyRelation::new(2, vec![1.0, 0.3, 0.6, 1.0]).unwrap();
        assert_eq!(r.foreset(0).unwrap().memberships(), &[1.0, 0.6]);
        assert_eq!(r.foreset(1).unwrap().memberships(), &[0.3, 1.0]);
        assert!(matches!(r.foreset(2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn identity_relation_foresets_are_singletons() {
        let r = FuzzyRelation::identity(3);
        assert!(r.is_reflexive());
        assert_eq!(r.foreset(1).unwrap().memberships(), &[0.0, 1.0, 0.0]);
    }

    #[test]
    fn reflexivity_detection() {
        let r = FuzzyRelation::new(2, vec![1.0, 0.4, 0.4, 0.9]).unwrap();
        assert!(!r.is_reflexive());
    }

    #[test]
    fn fuzzy_set_validation() {
        assert!(FuzzySet::new(vec![]).is_err());
        assert!(FuzzySet::new(vec![0.5, 1.1]).is_err());
        assert!(FuzzySet::new(vec![0.0, 1.0]).is_ok());
    }
}
