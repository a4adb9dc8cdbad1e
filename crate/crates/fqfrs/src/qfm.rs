//! Quantifier fuzzification mechanisms: three-valued cut envelopes of
//! semi-fuzzy quantifiers, the averaging model (integral of the envelope
//! midline) and the cautious model (sup of γ-capped envelope medians).

use crate::error::{Error, Result};
use crate::fuzzy::{fuzzy_median, kd, FuzzySet};
use crate::quantifiers::{
    yager_implication_binary, RimQuantifier, SemiFuzzyBinary,
};

/// Largest combined fringe cardinality brute enumeration will accept.
pub const BRUTE_FRINGE_LIMIT: usize = 12;

/// Piecewise-constant envelope of a quantifier over the three-valued cut
/// ranges: `top[i]`/`bottom[i]` hold on the interval
/// `(breakpoints[i], breakpoints[i+1]]`, and the γ=0 point is stored apart.
#[derive(Clone, Debug, PartialEq)]
pub struct CutEnvelope {
    breakpoints: Vec<f64>,
    top: Vec<f64>,
    bottom: Vec<f64>,
    gamma0_top: f64,
    gamma0_bottom: f64,
}

impl CutEnvelope {
    pub fn new(
        breakpoints: Vec<f64>,
        top: Vec<f64>,
        bottom: Vec<f64>,
        gamma0_top: f64,
        gamma0_bottom: f64,
    ) -> Result<Self> {
        if breakpoints.len() < 2 || breakpoints[0] != 0.0 || *breakpoints.last().unwrap() != 1.0 {
            return Err(Error::OutOfRange("envelope breakpoints must run from 0 to 1".into()));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::OutOfRange("envelope breakpoints must be strictly increasing".into()));
        }
        if top.len() != breakpoints.len() - 1 || bottom.len() != top.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} breakpoints need {} interval values, got {}/{}",
                breakpoints.len(),
                breakpoints.len() - 1,
                top.len(),
                bottom.len()
            )));
        }
        for (t, b) in top.iter().zip(&bottom).chain(std::iter::once((&gamma0_top, &gamma0_bottom)))
        {
            if !(0.0..=1.0).contains(t) || !(0.0..=1.0).contains(b) || b > &(t + 1e-9) {
                return Err(Error::OutOfRange(format!(
                    "envelope values must satisfy 0 ≤ bottom ≤ top ≤ 1, got top={t}, bottom={b}"
                )));
            }
        }
        Ok(CutEnvelope { breakpoints, top, bottom, gamma0_top, gamma0_bottom })
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn top(&self) -> &[f64] {
        &self.top
    }

    pub fn bottom(&self) -> &[f64] {
        &self.bottom
    }

    /// `(top, bottom)` at the γ=0 point.
    pub fn gamma0(&self) -> (f64, f64) {
        (self.gamma0_top, self.gamma0_bottom)
    }

    fn interval_index(&self, gamma: f64) -> usize {
        debug_assert!(gamma > 0.0 && gamma <= 1.0);
        self.breakpoints[1..self.breakpoints.len() - 1]
            .partition_point(|&b| b < gamma)
    }

    pub fn top_at(&self, gamma: f64) -> f64 {
        if gamma == 0.0 {
            self.gamma0_top
        } else {
            self.top[self.interval_index(gamma)]
        }
    }

    pub fn bottom_at(&self, gamma: f64) -> f64 {
        if gamma == 0.0 {
            self.gamma0_bottom
        } else {
            self.bottom[self.interval_index(gamma)]
        }
    }

    /// Exact integral over γ of the envelope midline `(top + bottom) / 2`.
    pub fn mean_integral(&self) -> f64 {
        let mut total = 0.0;
        for i in 0..self.top.len() {
            let width = self.breakpoints[i + 1] - self.breakpoints[i];
            total += width * (self.top[i] + self.bottom[i]) / 2.0;
        }
        total
    }

    /// Cautious aggregation: the supremum over γ of how far the per-interval
    /// envelope median stays on one side of 1/2, capped by γ itself; evaluated
    /// in the value domain so a constant envelope reproduces its value exactly.
    pub fn cautious_value(&self) -> f64 {
        let f0 = fuzzy_median(self.gamma0_bottom, self.gamma0_top);
        if f0 == 0.5 {
            return 0.5;
        }
        let positive = f0 > 0.5;
        let mut best = 0.5f64;
        for i in 0..self.top.len() {
            let f = fuzzy_median(self.bottom[i], self.top[i]);
            let gamma = self.breakpoints[i + 1];
            if positive {
                best = best.max((0.5 + 0.5 * gamma).min(f.max(0.5)));
            } else {
                best = best.min((0.5 - 0.5 * gamma).max(f.min(0.5)));
            }
        }
        best
    }
}

/// Ascending deduplicated γ values where some membership's cut status changes,
/// always bracketed by 0 and 1.
fn cut_breakpoints(sets: &[&FuzzySet]) -> Vec<f64> {
    let mut points = vec![0.0, 1.0];
    for set in sets {
        points.extend(set.memberships().iter().map(|&m| (2.0 * m - 1.0).abs()));
    }
    points.sort_by(|a, b| a.partial_cmp(b).unwrap());
    points.dedup();
    points
}

/// Exact supremum and infimum of `q` over all crisp pairs inside the
/// three-valued cut ranges of `a` and `b` at level `gamma`, by enumeration.
pub fn brute_top_bottom(
    q: &SemiFuzzyBinary,
    a: &FuzzySet,
    b: &FuzzySet,
    gamma: f64,
) -> Result<(f64, f64)> {
    if a.universe_size() != b.universe_size() {
        return Err(Error::DimensionMismatch(format!(
            "fuzzy sets live on universes of size {} and {}",
            a.universe_size(),
            b.universe_size()
        )));
    }
    if !gamma.is_finite() || !(0.0..=1.0).contains(&gamma) {
        return Err(Error::OutOfRange(format!("cut level must lie in [0,1], got {gamma}")));
    }
    let (a_min, a_max) = a.three_valued_cut(gamma);
    let (b_min, b_max) = b.three_valued_cut(gamma);
    let fringe = |min: &crate::fuzzy::CrispSet, max: &crate::fuzzy::CrispSet| -> Vec<usize> {
        max.iter_members().filter(|&x| !min.contains(x)).collect()
    };
    let fringe_a = fringe(&a_min, &a_max);
    let fringe_b = fringe(&b_min, &b_max);
    if fringe_a.len() + fringe_b.len() > BRUTE_FRINGE_LIMIT {
        return Err(Error::Capacity(format!(
            "combined fringe cardinality {} exceeds the enumeration limit {}",
            fringe_a.len() + fringe_b.len(),
            BRUTE_FRINGE_LIMIT
        )));
    }
    let mut top = f64::NEG_INFINITY;
    let mut bottom = f64::INFINITY;
    for bits_a in 0u32..1 << fringe_a.len() {
        let mut ca = a_min.clone();
        for (j, &x) in fringe_a.iter().enumerate() {
            if bits_a >> j & 1 == 1 {
                ca.insert(x);
            }
        }
        for bits_b in 0u32..1 << fringe_b.len() {
            let mut cb = b_min.clone();
            for (j, &x) in fringe_b.iter().enumerate() {
                if bits_b >> j & 1 == 1 {
                    cb.insert(x);
                }
            }
            let v = q.eval(&ca, &cb)?;
            top = top.max(v);
            bottom = bottom.min(v);
        }
    }
    Ok((top, bottom))
}

/// Envelope of an arbitrary semi-fuzzy quantifier by brute enumeration on
/// every cut interval; the oracle counterpart of [`envelope_q2`].
pub fn brute_envelope(q: &SemiFuzzyBinary, a: &FuzzySet, b: &FuzzySet) -> Result<CutEnvelope> {
    let breakpoints = cut_breakpoints(&[a, b]);
    let (gamma0_top, gamma0_bottom) = brute_top_bottom(q, a, b, 0.0)?;
    let mut top = Vec::with_capacity(breakpoints.len() - 1);
    let mut bottom = Vec::with_capacity(breakpoints.len() - 1);
    for window in breakpoints.windows(2) {
        let (t, bo) = brute_top_bottom(q, a, b, window[1])?;
        top.push(t);
        bottom.push(bo);
    }
    CutEnvelope::new(breakpoints, top, bottom, gamma0_top, gamma0_bottom)
}

const MIN: usize = 0;
const FRINGE: usize = 1;
const OUT: usize = 2;

fn initial_status(m: f64) -> usize {
    if m > 0.5 {
        MIN
    } else if m < 0.5 {
        OUT
    } else {
        FRINGE
    }
}

fn q2_interval_values(
    counts: &[[usize; 3]; 3],
    rim: &RimQuantifier,
    empty_antecedent: f64,
) -> (f64, f64) {
    let n_amin = counts[MIN][MIN] + counts[MIN][FRINGE] + counts[MIN][OUT];
    let k_top = counts[MIN][MIN] + counts[MIN][FRINGE];
    let m_fr = counts[FRINGE][MIN] + counts[FRINGE][FRINGE];
    let k_bot = counts[MIN][MIN];
    let d = counts[FRINGE][FRINGE] + counts[FRINGE][OUT];
    let top = if n_amin + m_fr > 0 {
        rim.eval((k_top + m_fr) as f64 / (n_amin + m_fr) as f64)
    } else {
        empty_antecedent
    };
    let bottom = if n_amin + d > 0 {
        rim.eval(k_bot as f64 / (n_amin + d) as f64)
    } else {
        empty_antecedent
    };
    (top, bottom)
}

/// Envelope of the proportional quantifier `Λ(|A∩B|/|A|)` in `O(n log n)`
/// via an event sweep: the supremum keeps every optional element that can
/// land in B, the infimum keeps every optional element that cannot.
pub fn envelope_q2(rim: &RimQuantifier, a: &FuzzySet, b: &FuzzySet) -> Result<CutEnvelope> {
    envelope_q2_with(rim, rim.vacuous_truth(), a, b)
}

/// [`envelope_q2`] with an explicit value for the empty-antecedent case.
pub fn envelope_q2_with(
    rim: &RimQuantifier,
    empty_antecedent: f64,
    a: &FuzzySet,
    b: &FuzzySet,
) -> Result<CutEnvelope> {
    if a.universe_size() != b.universe_size() {
        return Err(Error::DimensionMismatch(format!(
            "fuzzy sets live on universes of size {} and {}",
            a.universe_size(),
            b.universe_size()
        )));
    }
    let n = a.universe_size();
    let mut status_a: Vec<usize> = a.memberships().iter().map(|&m| initial_status(m)).collect();
    let mut status_b: Vec<usize> = b.memberships().iter().map(|&m| initial_status(m)).collect();
    let mut counts = [[0usize; 3]; 3];
    for x in 0..n {
        counts[status_a[x]][status_b[x]] += 1;
    }

    let mut events: Vec<(f64, usize, bool)> = Vec::with_capacity(2 * n);
    for (side_b, set) in [(false, a), (true, b)] {
        for (x, &m) in set.memberships().iter().enumerate() {
            if m != 0.5 {
                let gamma = (2.0 * m - 1.0).abs();
                if gamma < 1.0 {
                    events.push((gamma, x, side_b));
                }
            }
        }
    }
    events.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());

    let breakpoints = cut_breakpoints(&[a, b]);
    let (gamma0_top, gamma0_bottom) = q2_interval_values(&counts, rim, empty_antecedent);
    let mut top = Vec::with_capacity(breakpoints.len() - 1);
    let mut bottom = Vec::with_capacity(breakpoints.len() - 1);
    let mut next_event = 0;
    for w in 1..breakpoints.len() {
        let left = breakpoints[w - 1];
        while next_event < events.len() && events[next_event].0 <= left {
            let (_, x, side_b) = events[next_event];
            if side_b {
                counts[status_a[x]][status_b[x]] -= 1;
                status_b[x] = FRINGE;
                counts[status_a[x]][FRINGE] += 1;
            } else {
                counts[status_a[x]][status_b[x]] -= 1;
                status_a[x] = FRINGE;
                counts[FRINGE][status_b[x]] += 1;
            }
            next_event += 1;
        }
        let (t, bo) = q2_interval_values(&counts, rim, empty_antecedent);
        top.push(t);
        bottom.push(bo);
    }
    CutEnvelope::new(breakpoints, top, bottom, gamma0_top, gamma0_bottom)
}

/// Averaging fuzzification of the proportional quantifier.
pub fn fowa_binary_q2(rim: &RimQuantifier, a: &FuzzySet, b: &FuzzySet) -> Result<f64> {
    fowa_q2_with(rim, rim.vacuous_truth(), a, b)
}

pub(crate) fn fowa_q2_with(
    rim: &RimQuantifier,
    empty_antecedent: f64,
    a: &FuzzySet,
    b: &FuzzySet,
) -> Result<f64> {
    Ok(envelope_q2_with(rim, empty_antecedent, a, b)?.mean_integral())
}

/// Averaging fuzzification of the implication-lifted quantifier; coincides
/// with the plain OWA model under Kleene-Dienes implication.
pub fn fowa_binary_q_arrow(rim: &RimQuantifier, a: &FuzzySet, b: &FuzzySet) -> Result<f64> {
    yager_implication_binary(rim, kd, a, b)
}

/// Averaging fuzzification of the unary quantifier `Λ(|A|/|X|)`.
pub fn fowa_unary(rim: &RimQuantifier, a: &FuzzySet) -> f64 {
    let n = a.universe_size() as f64;
    let breakpoints = cut_breakpoints(&[a]);
    let value = |gamma: f64| {
        let (a_min, a_max) = a.three_valued_cut(gamma);
        let top = rim.eval(a_max.cardinality() as f64 / n);
        let bottom = rim.eval(a_min.cardinality() as f64 / n);
        (top, bottom)
    };
    let mut total = 0.0;
    for window in breakpoints.windows(2) {
        let (top, bottom) = value(window[1]);
        total += (window[1] - window[0]) * (top + bottom) / 2.0;
    }
    total
}

/// Cautious fuzzification of the proportional quantifier.
pub fn mcx_binary_q2(rim: &RimQuantifier, a: &FuzzySet, b: &FuzzySet) -> Result<f64> {
    mcx_q2_with(rim, rim.vacuous_truth(), a, b)
}

pub(crate) fn mcx_q2_with(
    rim: &RimQuantifier,
    empty_antecedent: f64,
    a: &FuzzySet,
    b: &FuzzySet,
) -> Result<f64> {
    Ok(envelope_q2_with(rim, empty_antecedent, a, b)?.cautious_value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::CrispSet;
    use crate::quantifiers::{semi_q2, yager_unary};
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn fs(values: &[f64]) -> FuzzySet {
        FuzzySet::new(values.to_vec()).unwrap()
    }

    fn test_rims() -> Vec<RimQuantifier> {
        vec![
            RimQuantifier::Universal,
            RimQuantifier::Existential,
            RimQuantifier::Identity,
            RimQuantifier::zadeh_s(0.3, 0.9).unwrap(),
            RimQuantifier::threshold_gt(0.5).unwrap(),
            RimQuantifier::threshold_geq(0.5).unwrap(),
        ]
    }

    fn random_set(rng: &mut impl Rng, n: usize) -> FuzzySet {
        FuzzySet::new(
            (0..n)
                .map(|_| {
                    if rng.gen_bool(0.3) {
                        *[0.0, 0.5, 1.0].choose(rng).unwrap()
                    } else {
                        rng.gen_range(0.0..=1.0)
                    }
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn crisp_arguments_collapse_to_the_semi_fuzzy_value() {
        let a = CrispSet::from_indices(5, &[0, 1, 2]).unwrap();
        let b = CrispSet::from_indices(5, &[1, 2, 4]).unwrap();
        let fa = FuzzySet::from_crisp(&a);
        let fb = FuzzySet::from_crisp(&b);
        for rim in test_rims() {
            let expected = semi_q2(&rim, &a, &b).unwrap();
            let env = envelope_q2(&rim, &fa, &fb).unwrap();
            assert_eq!(env.breakpoints(), &[0.0, 1.0]);
            assert_eq!(env.top(), &[expected]);
            assert_eq!(env.bottom(), &[expected]);
            assert_eq!(fowa_binary_q2(&rim, &fa, &fb).unwrap(), expected);
            assert_eq!(mcx_binary_q2(&rim, &fa, &fb).unwrap(), expected);
        }
    }

    #[test]
    fn two_interval_envelope_by_hand() {
        let a = fs(&[0.9, 0.9, 0.1]);
        let b = fs(&[0.9, 0.1, 0.1]);
        let env = envelope_q2(&RimQuantifier::Identity, &a, &b).unwrap();
        assert_eq!(env.breakpoints(), &[0.0, 0.8, 1.0]);
        assert_eq!(env.gamma0(), (0.5, 0.5));
        assert_eq!(env.top(), &[0.5, 1.0]);
        assert_eq!(env.bottom(), &[0.5, 0.0]);
        assert!((env.mean_integral() - 0.5).abs() < 1e-15);
        assert_eq!(env.cautious_value(), 0.5);

        let brute = brute_envelope(&SemiFuzzyBinary::q2(RimQuantifier::Identity), &a, &b).unwrap();
        assert_eq!(brute, env);
    }

    #[test]
    fn matching_arguments_have_full_top() {
        let a = fs(&[0.9, 0.6, 0.3, 0.5]);
        let env = envelope_q2(&RimQuantifier::Identity, &a, &a).unwrap();
        let (g0_top, _) = env.gamma0();
        assert_eq!(g0_top, 1.0);
        assert!(env.top().iter().all(|&t| t == 1.0));
    }

    #[test]
    fn envelope_matches_brute_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let rims = test_rims();
        for trial in 0..60 {
            let n = rng.gen_range(1..=6);
            let a = random_set(&mut rng, n);
            let b = random_set(&mut rng, n);
            let rim = &rims[trial % rims.len()];
            let q = SemiFuzzyBinary::q2(rim.clone());
            let env = envelope_q2(rim, &a, &b).unwrap();
            let (bt0, bb0) = brute_top_bottom(&q, &a, &b, 0.0).unwrap();
            assert_eq!(env.gamma0(), (bt0, bb0), "gamma=0 for {rim}");
            for (i, window) in env.breakpoints().windows(2).enumerate() {
                let mid = (window[0] + window[1]) / 2.0;
                let (bt, bb) = brute_top_bottom(&q, &a, &b, mid).unwrap();
                assert_eq!(env.top()[i], bt, "top at {mid} for {rim}");
                assert_eq!(env.bottom()[i], bb, "bottom at {mid} for {rim}");
            }
        }
    }

    #[test]
    fn interval_median_matches_enumerated_set_median() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for trial in 0..30 {
            let n = rng.gen_range(1..=5);
            let a = random_set(&mut rng, n);
            let b = random_set(&mut rng, n);
            let rim = &test_rims()[trial % 6];
            let q = SemiFuzzyBinary::q2(rim.clone());
            let env = envelope_q2(rim, &a, &b).unwrap();
            for (i, window) in env.breakpoints().windows(2).enumerate() {
                let mid = (window[0] + window[1]) / 2.0;
                let values = enumerate_values(&q, &a, &b, mid);
                let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
                let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                let set_median = if lo > 0.5 {
                    lo
                } else if hi < 0.5 {
                    hi
                } else {
                    0.5
                };
                assert_eq!(fuzzy_median(env.bottom()[i], env.top()[i]), set_median);
            }
        }
    }

    fn enumerate_values(q: &SemiFuzzyBinary, a: &FuzzySet, b: &FuzzySet, gamma: f64) -> Vec<f64> {
        let (a_min, a_max) = a.three_valued_cut(gamma);
        let (b_min, b_max) = b.three_valued_cut(gamma);
        let fringe_a: Vec<usize> =
            a_max.iter_members().filter(|&x| !a_min.contains(x)).collect();
        let fringe_b: Vec<usize> =
            b_max.iter_members().filter(|&x| !b_min.contains(x)).collect();
        let mut values = Vec::new();
        for bits_a in 0u32..1 << fringe_a.len() {
            let mut ca = a_min.clone();
            for (j, &x) in fringe_a.iter().enumerate() {
                if bits_a >> j & 1 == 1 {
                    ca.insert(x);
                }
            }
            for bits_b in 0u32..1 << fringe_b.len() {
                let mut cb = b_min.clone();
                for (j, &x) in fringe_b.iter().enumerate() {
                    if bits_b >> j & 1 == 1 {
                        cb.insert(x);
                    }
                }
                values.push(q.eval(&ca, &cb).unwrap());
            }
        }
        values
    }

    #[test]
    fn cautious_known_values() {
        let a = fs(&[1.0, 0.8]);
        let b = fs(&[1.0, 0.0]);
        let v = mcx_binary_q2(&RimQuantifier::Universal, &a, &b).unwrap();
        assert!((v - 0.2).abs() < 1e-15);

        let a = fs(&[1.0]);
        let b = fs(&[0.9]);
        let v = mcx_binary_q2(&RimQuantifier::Universal, &a, &b).unwrap();
        assert!((v - 0.9).abs() < 1e-15);

        let a = fs(&[0.8]);
        let b = fs(&[0.6]);
        let v = mcx_binary_q2(&RimQuantifier::Existential, &a, &b).unwrap();
        assert!((v - 0.6).abs() < 1e-15);
        let f = fowa_binary_q2(&RimQuantifier::Existential, &a, &b).unwrap();
        assert!((f - 0.6).abs() < 1e-15);
    }

    #[test]
    fn universal_collapse_to_inclusion_measure() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for _ in 0..50 {
            let n = rng.gen_range(1..=8);
            let a = random_set(&mut rng, n);
            let b = random_set(&mut rng, n);
            let expected = a
                .memberships()
                .iter()
                .zip(b.memberships())
                .map(|(&x, &y)| (1.0 - x).max(y))
                .fold(f64::INFINITY, f64::min);
            let fowa = fowa_binary_q2(&RimQuantifier::Universal, &a, &b).unwrap();
            let mcx = mcx_binary_q2(&RimQuantifier::Universal, &a, &b).unwrap();
            assert!((fowa - expected).abs() < 1e-12, "fowa {fowa} vs {expected}");
            assert!((mcx - expected).abs() < 1e-12, "mcx {mcx} vs {expected}");
        }
    }

    #[test]
    fn existential_collapse_to_overlap_measure() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for _ in 0..50 {
            let n = rng.gen_range(1..=8);
            let a = random_set(&mut rng, n);
            let b = random_set(&mut rng, n);
            let expected = a
                .memberships()
                .iter()
                .zip(b.memberships())
                .map(|(&x, &y)| x.min(y))
                .fold(0.0, f64::max);
            let fowa = fowa_binary_q2(&RimQuantifier::Existential, &a, &b).unwrap();
            assert!((fowa - expected).abs() < 1e-12, "fowa {fowa} vs {expected}");
        }
    }

    #[test]
    fn averaging_implication_form_matches_owa_envelope() {
        let mut rng = ChaCha8Rng::seed_from_u64(59);
        let rims =
            [RimQuantifier::Identity, RimQuantifier::zadeh_s(0.3, 0.9).unwrap(), RimQuantifier::Universal];
        for trial in 0..40 {
            let n = rng.gen_range(1..=6);
            let a = random_set(&mut rng, n);
            let b = random_set(&mut rng, n);
            let rim = &rims[trial % rims.len()];
            let owa = fowa_binary_q_arrow(rim, &a, &b).unwrap();
            let env = brute_envelope(&SemiFuzzyBinary::q_arrow(rim.clone()), &a, &b).unwrap();
            assert!((env.mean_integral() - owa).abs() < 1e-10, "{rim}");
        }
    }

    #[test]
    fn unary_averaging_matches_owa() {
        let constant = fs(&[0.7, 0.7, 0.7]);
        assert!((fowa_unary(&RimQuantifier::Identity, &constant) - 0.7).abs() < 1e-12);
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        for trial in 0..50 {
            let n = rng.gen_range(1..=9);
            let a = random_set(&mut rng, n);
            let rim = &test_rims()[trial % 6];
            let fowa = fowa_unary(rim, &a);
            let owa = yager_unary(rim, &a);
            assert!((fowa - owa).abs() < 1e-10, "{rim}: {fowa} vs {owa}");
        }
    }

    #[test]
    fn averaging_inequalities() {
        let mut rng = ChaCha8Rng::seed_from_u64(67);
        let rims = [RimQuantifier::Identity, RimQuantifier::zadeh_s(0.2, 0.8).unwrap()];
        for trial in 0..100 {
            let n = rng.gen_range(1..=7);
            let a = random_set(&mut rng, n);
            let b = random_set(&mut rng, n);
            let rim = &rims[trial % rims.len()];
            let q2 = fowa_binary_q2(rim, &a, &b).unwrap();
            let q_arrow = fowa_binary_q_arrow(rim, &a, &b).unwrap();
            assert!(q_arrow >= q2 - 1e-12);
        }
    }

    #[test]
    fn crisp_restriction_exhaustive() {
        let rims = [RimQuantifier::Identity, RimQuantifier::zadeh_s(0.3, 0.9).unwrap()];
        for n in 1..=4usize {
            for a_bits in 0..(1u32 << n) {
                for b_bits in 0..(1u32 << n) {
                    let ca = CrispSet::from_mask((0..n).map(|i| a_bits >> i & 1 == 1).collect());
                    let cb = CrispSet::from_mask((0..n).map(|i| b_bits >> i & 1 == 1).collect());
                    let fa = FuzzySet::from_crisp(&ca);
                    let fb = FuzzySet::from_crisp(&cb);
                    for rim in &rims {
                        let expected = semi_q2(rim, &ca, &cb).unwrap();
                        assert_eq!(fowa_binary_q2(rim, &fa, &fb).unwrap(), expected);
                        assert_eq!(mcx_binary_q2(rim, &fa, &fb).unwrap(), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn brute_enumeration_capacity_limit() {
        let a = fs(&vec![0.5; 14]);
        let b = fs(&vec![0.4; 14]);
        let q = SemiFuzzyBinary::q2(RimQuantifier::Identity);
        let err = brute_top_bottom(&q, &a, &b, 0.9).unwrap_err();
        assert!(matches!(err, Error::Capacity(_)));
    }

    #[test]
    fn envelope_constructor_validation() {
        assert!(CutEnvelope::new(vec![0.0, 1.0], vec![0.5], vec![0.8], 0.5, 0.5).is_err());
        assert!(CutEnvelope::new(vec![0.0, 0.5], vec![0.5], vec![0.5], 0.5, 0.5).is_err());
        assert!(CutEnvelope::new(vec![0.0, 1.0], vec![0.5, 0.6], vec![0.5], 0.5, 0.5).is_err());
        assert!(CutEnvelope::new(vec![0.0, 0.5, 0.5, 1.0], vec![1.0; 3], vec![0.0; 3], 1.0, 0.0)
            .is_err());
    }

    #[test]
    fn envelope_lookup_by_gamma() {
        let a = fs(&[0.9, 0.9, 0.1]);
        let b = fs(&[0.9, 0.1, 0.1]);
        let env = envelope_q2(&RimQuantifier::Identity, &a, &b).unwrap();
        assert_eq!(env.top_at(0.0), 0.5);
        assert_eq!(env.top_at(0.4), 0.5);
        assert_eq!(env.top_at(0.8), 0.5);
        assert_eq!(env.top_at(0.9), 1.0);
        assert_eq!(env.bottom_at(1.0), 0.0);
    }

    #[test]
    fn envelope_is_monotone_in_gamma() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for trial in 0..40 {
            let n = rng.gen_range(1..=7);
            let a = random_set(&mut rng, n);
            let b = random_set(&mut rng, n);
            let rim = &test_rims()[trial % 6];
            let env = envelope_q2(rim, &a, &b).unwrap();
            let (g0t, g0b) = env.gamma0();
            let mut prev_top = g0t;
            let mut prev_bottom = g0b;
            for i in 0..env.top().len() {
                assert!(env.top()[i] >= prev_top - 1e-12);
                assert!(env.bottom()[i] <= prev_bottom + 1e-12);
                prev_top = env.top()[i];
                prev_bottom = env.bottom()[i];
            }
        }
    }
}
