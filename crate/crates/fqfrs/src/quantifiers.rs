//! Regular increasing monotone (RIM) quantifiers, the semi-fuzzy quantifiers
//! they induce on crisp sets, and the directly computable fuzzy quantification
//! models: Zadeh's sigma-count models, Yager's OWA model, the WOWA model and
//! Yager's weighted implication (YWI).

use crate::error::{Error, Result};
use crate::fuzzy::{pointwise, BinaryOp, CrispSet, FuzzySet};

/// Regular increasing monotone quantifier: non-decreasing on [0,1] with Λ(0)=0, Λ(1)=1.
#[derive(Clone, Debug, PartialEq)]
pub enum RimQuantifier {
    /// Λ∀: 1 at proportion 1, else 0.
    Universal,
    /// Λ∃: 1 at any positive proportion.
    Existential,
    /// Λ(p) = p.
    Identity,
    /// 1 for proportions strictly above the threshold.
    ThresholdGt(f64),
    /// 1 for proportions at or above the threshold.
    ThresholdGeq(f64),
    /// Zadeh's smooth S-function ramp between `alpha` and `beta`.
    ZadehS { alpha: f64, beta: f64 },
    /// Step function through the points `(k/n, cumulative[k])`.
    Step(Vec<f64>),
}

impl RimQuantifier {
    /// "More than a proportion k" quantifier; requires `0 ≤ k < 1`.
    pub fn threshold_gt(k: f64) -> Result<Self> {
        if k.is_finite() && (0.0..1.0).contains(&k) {
            Ok(RimQuantifier::ThresholdGt(k))
        } else {
            Err(Error::InvalidQuantifier(format!("gt threshold must lie in [0,1), got {k}")))
        }
    }

    /// "At least a proportion k" quantifier; requires `0 < k ≤ 1`.
    pub fn threshold_geq(k: f64) -> Result<Self> {
        if k.is_finite() && k > 0.0 && k <= 1.0 {
            Ok(RimQuantifier::ThresholdGeq(k))
        } else {
            Err(Error::InvalidQuantifier(format!("geq threshold must lie in (0,1], got {k}")))
        }
    }

    /// S-function quantifier rising from 0 at `alpha` to 1 at `beta`.
    pub fn zadeh_s(alpha: f64, beta: f64) -> Result<Self> {
        if alpha.is_finite() && beta.is_finite() && (0.0..1.0).contains(&alpha) && alpha < beta && beta <= 1.0
        {
            Ok(RimQuantifier::ZadehS { alpha, beta })
        } else {
            Err(Error::InvalidQuantifier(format!(
                "s-function needs 0 ≤ alpha < beta ≤ 1, got alpha={alpha}, beta={beta}"
            )))
        }
    }

    /// Step quantifier through `(k/n, cumulative[k])`; used to invert symmetric measures.
    pub fn step(cumulative: Vec<f64>) -> Self {
        assert!(cumulative.len() >= 2, "step quantifier needs at least two levels");
        assert_eq!(cumulative[0], 0.0, "step quantifier must start at 0");
        assert_eq!(*cumulative.last().unwrap(), 1.0, "step quantifier must end at 1");
        assert!(cumulative.windows(2).all(|w| w[0] <= w[1]), "step quantifier must be monotone");
        RimQuantifier::Step(cumulative)
    }

    /// Evaluates the quantifier at a proportion in [0,1].
    pub fn eval(&self, p: f64) -> f64 {
        debug_assert!((0.0..=1.0).contains(&p), "proportion {p} outside [0,1]");
        match self {
            RimQuantifier::Universal => {
                if p >= 1.0 {
                    1.0
                } else {
                    0.0
                }
            }
            RimQuantifier::Existential => {
                if p > 0.0 {
                    1.0
                } else {
                    0.0
                }
            }
            RimQuantifier::Identity => p,
            RimQuantifier::ThresholdGt(k) => {
                if p > *k {
                    1.0
                } else {
                    0.0
                }
            }
            RimQuantifier::ThresholdGeq(k) => {
                if p >= *k {
                    1.0
                } else {
                    0.0
                }
            }
            RimQuantifier::ZadehS { alpha, beta } => {
                if p <= *alpha {
                    0.0
                } else if p >= *beta {
                    1.0
                } else if p <= (alpha + beta) / 2.0 {
                    let t = (p - alpha) / (beta - alpha);
                    2.0 * t * t
                } else {
                    let t = (beta - p) / (beta - alpha);
                    1.0 - 2.0 * t * t
                }
            }
            RimQuantifier::Step(cumulative) => {
                let n = cumulative.len() - 1;
                let mut level = 0;
                for k in (0..=n).rev() {
                    if k as f64 / n as f64 <= p {
                        level = k;
                        break;
                    }
                }
                cumulative[level]
            }
        }
    }

    /// Truth value assigned to "Λ A's are B's" when A is empty.
    ///
    /// Strict-threshold quantifiers demand a positive witness proportion, so
    /// they evaluate the vacuous statement to 0; the non-strict and continuous
    /// families treat it as vacuously true.
    pub fn vacuous_truth(&self) -> f64 {
        match self {
            RimQuantifier::Existential | RimQuantifier::ThresholdGt(_) => 0.0,
            _ => 1.0,
        }
    }
}

impl std::str::FromStr for RimQuantifier {
    type Err = Error;

    /// Parses `forall`, `exists`, `id`, `gt:k`, `geq:k` or `s:alpha,beta`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidQuantifier(format!("{msg} in quantifier spec {s:?}"));
        let parse_num = |t: &str| t.trim().parse::<f64>().map_err(|_| bad("malformed number"));
        match s.trim() {
            "forall" => Ok(RimQuantifier::Universal),
            "exists" => Ok(RimQuantifier::Existential),
            "id" => Ok(RimQuantifier::Identity),
            other => {
                if let Some(k) = other.strip_prefix("gt:") {
                    RimQuantifier::threshold_gt(parse_num(k)?)
                } else if let Some(k) = other.strip_prefix("geq:") {
                    RimQuantifier::threshold_geq(parse_num(k)?)
                } else if let Some(args) = other.strip_prefix("s:") {
                    let (a, b) = args.split_once(',').ok_or_else(|| bad("expected s:alpha,beta"))?;
                    RimQuantifier::zadeh_s(parse_num(a)?, parse_num(b)?)
                } else {
                    Err(bad("unknown quantifier"))
                }
            }
        }
    }
}

impl std::fmt::Display for RimQuantifier {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RimQuantifier::Universal => write!(f, "forall"),
            RimQuantifier::Existential => write!(f, "exists"),
            RimQuantifier::Identity => write!(f, "id"),
            RimQuantifier::ThresholdGt(k) => write!(f, "gt:{k}"),
            RimQuantifier::ThresholdGeq(k) => write!(f, "geq:{k}"),
            RimQuantifier::ZadehS { alpha, beta } => write!(f, "s:{alpha},{beta}"),
            RimQuantifier::Step(c) => write!(f, "step[{}]", c.len() - 1),
        }
    }
}

/// Semi-fuzzy binary quantifier: maps pairs of crisp sets to a truth value.
#[derive(Clone, Debug, PartialEq)]
pub struct SemiFuzzyBinary {
    kind: SemiFuzzyBinaryKind,
    rim: RimQuantifier,
    empty_antecedent: f64,
}

/// The two proportional sentence forms over crisp sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemiFuzzyBinaryKind {
    /// `Λ(|A∩B| / |A|)` — "Λ A's are B's".
    Proportional,
    /// `Λ((|¬A| + |A∩B|) / |X|)` — the implication-based reading.
    Implication,
}

impl SemiFuzzyBinary {
    /// Proportional form with the quantifier's default empty-antecedent value.
    pub fn q2(rim: RimQuantifier) -> Self {
        let empty_antecedent = rim.vacuous_truth();
        SemiFuzzyBinary { kind: SemiFuzzyBinaryKind::Proportional, rim, empty_antecedent }
    }

    /// Implication form (total on all pairs; the empty-antecedent value is unused).
    pub fn q_arrow(rim: RimQuantifier) -> Self {
        let empty_antecedent = rim.vacuous_truth();
        SemiFuzzyBinary { kind: SemiFuzzyBinaryKind::Implication, rim, empty_antecedent }
    }

    /// Overrides the value returned when the antecedent set is empty.
    pub fn with_empty_antecedent(mut self, value: f64) -> Result<Self> {
        if !value.is_finite() || !(0.0..=1.0).contains(&value) {
            return Err(Error::OutOfRange(format!(
                "empty-antecedent value must lie in [0,1], got {value}"
            )));
        }
        self.empty_antecedent = value;
        Ok(self)
    }

    pub fn rim(&self) -> &RimQuantifier {
        &self.rim
    }

    pub fn empty_antecedent(&self) -> f64 {
        self.empty_antecedent
    }

    /// Evaluates the quantifier on a pair of crisp sets over one universe.
    pub fn eval(&self, a: &CrispSet, b: &CrispSet) -> Result<f64> {
        if a.universe_size() != b.universe_size() {
            return Err(Error::DimensionMismatch(format!(
                "crisp sets live on universes of size {} and {}",
                a.universe_size(),
                b.universe_size()
            )));
        }
        let n = a.universe_size();
        let card_a = a.cardinality();
        let inter = a.intersection_count(b);
        Ok(match self.kind {
            SemiFuzzyBinaryKind::Proportional => {
                if card_a == 0 {
                    self.empty_antecedent
                } else {
                    self.rim.eval(inter as f64 / card_a as f64)
                }
            }
            SemiFuzzyBinaryKind::Implication => {
                self.rim.eval(((n - card_a) + inter) as f64 / n as f64)
            }
        })
    }
}

/// `Λ(|A∩B|/|A|)` on crisp sets, with the quantifier's default empty-antecedent value.
pub fn semi_q2(rim: &RimQuantifier, a: &CrispSet, b: &CrispSet) -> Result<f64> {
    SemiFuzzyBinary::q2(rim.clone()).eval(a, b)
}

/// `Λ((|¬A|+|A∩B|)/|X|)` on crisp sets.
pub fn semi_q_arrow(rim: &RimQuantifier, a: &CrispSet, b: &CrispSet) -> Result<f64> {
    SemiFuzzyBinary::q_arrow(rim.clone()).eval(a, b)
}

/// Zadeh's unary model: `Λ(|A|_Σ / |X|)`.
pub fn zadeh_unary(rim: &RimQuantifier, a: &FuzzySet) -> f64 {
    rim.eval(a.sigma_count() / a.universe_size() as f64)
}

/// Zadeh's binary model: `Λ(|A∩B|_Σ / |A|_Σ)` with minimum intersection.
pub fn zadeh_binary(rim: &RimQuantifier, a: &FuzzySet, b: &FuzzySet) -> Result<f64> {
    zadeh_binary_with(rim, rim.vacuous_truth(), a, b)
}

pub(crate) fn zadeh_binary_with(
    rim: &RimQuantifier,
    empty_antecedent: f64,
    a: &FuzzySet,
    b: &FuzzySet,
) -> Result<f64> {
    let inter = pointwise(|x, y| x.min(y), a, b)?;
    let denom = a.sigma_count();
    if denom == 0.0 {
        return Ok(empty_antecedent);
    }
    Ok(rim.eval(inter.sigma_count() / denom))
}

/// Yager's unary OWA model: the Choquet integral of `A` against the measure induced by `Λ`.
pub fn yager_unary(rim: &RimQuantifier, a: &FuzzySet) -> f64 {
    let n = a.universe_size();
    let mut desc = a.memberships().to_vec();
    desc.sort_by(|x, y| y.partial_cmp(x).unwrap());
    let mut value = 0.0;
    let mut prev = rim.eval(0.0);
    for (k, &v) in desc.iter().enumerate() {
        let cum = rim.eval((k + 1) as f64 / n as f64);
        value += v * (cum - prev);
        prev = cum;
    }
    value
}

/// Implication-based binary OWA model: `Ỹ_Λ(I(A,B))`.
pub fn yager_implication_binary(
    rim: &RimQuantifier,
    implicator: BinaryOp,
    a: &FuzzySet,
    b: &FuzzySet,
) -> Result<f64> {
    Ok(yager_unary(rim, &pointwise(implicator, a, b)?))
}

/// WOWA binary model: implication values weighted by antecedent mass.
pub fn wowa_binary(
    rim: &RimQuantifier,
    implicator: BinaryOp,
    a: &FuzzySet,
    b: &FuzzySet,
) -> Result<f64> {
    wowa_binary_with(rim, implicator, rim.vacuous_truth(), a, b)
}

pub(crate) fn wowa_binary_with(
    rim: &RimQuantifier,
    implicator: BinaryOp,
    empty_antecedent: f64,
    a: &FuzzySet,
    b: &FuzzySet,
) -> Result<f64> {
    let i_ab = pointwise(implicator, a, b)?;
    let order = descending_order(&i_ab);
    let mut running = 0.0;
    let prefixes: Vec<f64> = order
        .iter()
        .map(|&x| {
            running += a.membership(x);
            running
        })
        .collect();
    let denom = *prefixes.last().unwrap();
    if denom == 0.0 {
        return Ok(empty_antecedent);
    }
    let mut value = 0.0;
    let mut prev = rim.eval(0.0);
    for (k, &x) in order.iter().enumerate() {
        let cum = rim.eval(prefixes[k] / denom);
        value += i_ab.membership(x) * (cum - prev);
        prev = cum;
    }
    Ok(value)
}

/// Yager's weighted implication (YWI): implication values ordered descending,
/// weighted by the antecedent's ascending-mass quantile steps.
pub fn ywi_binary(
    rim: &RimQuantifier,
    implicator: BinaryOp,
    a: &FuzzySet,
    b: &FuzzySet,
) -> Result<f64> {
    ywi_binary_with(rim, implicator, rim.vacuous_truth(), a, b)
}

pub(crate) fn ywi_binary_with(
    rim: &RimQuantifier,
    implicator: BinaryOp,
    empty_antecedent: f64,
    a: &FuzzySet,
    b: &FuzzySet,
) -> Result<f64> {
    let i_ab = pointwise(implicator, a, b)?;
    let order = descending_order(&i_ab);
    let mut asc = a.memberships().to_vec();
    asc.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let mut running = 0.0;
    let prefixes: Vec<f64> = asc
        .iter()
        .map(|&v| {
            running += v;
            running
        })
        .collect();
    let denom = *prefixes.last().unwrap();
    if denom == 0.0 {
        return Ok(empty_antecedent);
    }
    let mut value = 0.0;
    let mut prev = rim.eval(0.0);
    for (k, &x) in order.iter().enumerate() {
        let cum = rim.eval(prefixes[k] / denom);
        value += i_ab.membership(x) * (cum - prev);
        prev = cum;
    }
    Ok(value)
}

fn descending_order(f: &FuzzySet) -> Vec<usize> {
    let mut order: Vec<usize> = (0..f.universe_size()).collect();
    order.sort_by(|&i, &j| f.membership(j).partial_cmp(&f.membership(i)).unwrap());
    order
}

/// One of the binary fuzzy quantifier models, packaged with its quantifier,
/// implicator and empty-antecedent configuration.
#[derive(Clone, Debug)]
pub struct BinaryQuantifierModel {
    kind: BinaryModelKind,
    rim: RimQuantifier,
    implicator: BinaryOp,
    empty_antecedent: f64,
}

/// Evaluation strategy of a [`BinaryQuantifierModel`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinaryModelKind {
    /// `Ỹ_Λ(I(A,B))` — plain OWA over implication values.
    YagerImplication,
    /// WOWA — implication values weighted by antecedent mass.
    Wowa,
    /// YWI — implication values against ascending antecedent quantiles.
    Ywi,
    /// Zadeh's sigma-count proportion.
    Zadeh,
    /// Averaging quantifier fuzzification of the proportional sentence.
    FowaQ2,
    /// Cautious quantifier fuzzification of the proportional sentence.
    McxQ2,
}

impl BinaryQuantifierModel {
    /// Packages a model kind with its quantifier; Kleene-Dienes implication,
    /// default empty-antecedent value.
    pub fn new(kind: BinaryModelKind, rim: RimQuantifier) -> Self {
        let empty_antecedent = rim.vacuous_truth();
        BinaryQuantifierModel { kind, rim, implicator: crate::fuzzy::kd, empty_antecedent }
    }

    pub fn with_implicator(mut self, implicator: BinaryOp) -> Self {
        self.implicator = implicator;
        self
    }

    pub fn with_empty_antecedent(mut self, value: f64) -> Result<Self> {
        if !value.is_finite() || !(0.0..=1.0).contains(&value) {
            return Err(Error::OutOfRange(format!(
                "empty-antecedent value must lie in [0,1], got {value}"
            )));
        }
        self.empty_antecedent = value;
        Ok(self)
    }

    pub fn kind(&self) -> BinaryModelKind {
        self.kind
    }

    pub fn rim(&self) -> &RimQuantifier {
        &self.rim
    }

    /// Evaluates the model on a pair of same-universe fuzzy sets.
    pub fn eval(&self, a: &FuzzySet, b: &FuzzySet) -> Result<f64> {
        match self.kind {
            BinaryModelKind::YagerImplication => {
                yager_implication_binary(&self.rim, self.implicator, a, b)
            }
            BinaryModelKind::Wowa => {
                wowa_binary_with(&self.rim, self.implicator, self.empty_antecedent, a, b)
            }
            BinaryModelKind::Ywi => {
                ywi_binary_with(&self.rim, self.implicator, self.empty_antecedent, a, b)
            }
            BinaryModelKind::Zadeh => {
                zadeh_binary_with(&self.rim, self.empty_antecedent, a, b)
            }
            BinaryModelKind::FowaQ2 => {
                crate::qfm::fowa_q2_with(&self.rim, self.empty_antecedent, a, b)
            }
            BinaryModelKind::McxQ2 => {
                crate::qfm::mcx_q2_with(&self.rim, self.empty_antecedent, a, b)
            }
        }
    }
}
