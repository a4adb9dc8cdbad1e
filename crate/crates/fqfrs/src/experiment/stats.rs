//! Fractional ranking and the two-sided Wilcoxon signed-rank test.

use crate::error::{Error, Result};
use statrs::function::erf::erfc;

/// Ranks scores with 1 for the highest; tied scores share the mean of the
/// ordinal ranks they span.
pub fn fractional_rank(scores: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&i, &j| scores[j].total_cmp(&scores[i]));
    let mut ranks = vec![0.0; scores.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && scores[order[end]] == scores[order[start]] {
            end += 1;
        }
        let shared = (start + 1 + end) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = shared;
        }
        start = end;
    }
    ranks
}

/// Ascending fractional ranks of the values themselves (1 = smallest).
fn ascending_ranks(values: &[f64]) -> Vec<f64> {
    let inverted: Vec<f64> = values.iter().map(|v| -v).collect();
    fractional_rank(&inverted)
}

const EXACT_LIMIT: usize = 25;
const MIN_NONZERO: usize = 5;

/// Two-sided Wilcoxon signed-rank test on paired samples. Zero differences
/// are dropped; fewer than 5 remaining pairs is reported as undefined.
pub fn wilcoxon_signed_rank(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch(format!(
            "paired samples of lengths {} and {}",
            x.len(),
            y.len()
        )));
    }
    let diffs: Vec<f64> = x.iter().zip(y).map(|(&a, &b)| a - b).filter(|&d| d != 0.0).collect();
    if diffs.len() < MIN_NONZERO {
        return Err(Error::StatUndefined(format!(
            "only {} nonzero differences; the signed-rank test needs at least {MIN_NONZERO}",
            diffs.len()
        )));
    }
    let magnitudes: Vec<f64> = diffs.iter().map(|d| d.abs()).collect();
    let ranks = ascending_ranks(&magnitudes);
    let w_plus: f64 =
        ranks.iter().zip(&diffs).filter(|&(_, &d)| d > 0.0).map(|(&r, _)| r).sum();
    if diffs.len() <= EXACT_LIMIT {
        Ok(exact_p(w_plus, &ranks))
    } else {
        Ok(normal_p(w_plus, &ranks))
    }
}

/// Exact two-sided p by dynamic programming over doubled ranks, which are
/// integers even when ties make ranks half-integral.
fn exact_p(w_plus: f64, ranks: &[f64]) -> f64 {
    let doubled: Vec<usize> = ranks.iter().map(|&r| (2.0 * r).round() as usize).collect();
    let total: usize = doubled.iter().sum();
    let mut counts = vec![0.0f64; total + 1];
    counts[0] = 1.0;
    let mut reach = 0;
    for &d in &doubled {
        reach += d;
        for s in (d..=reach).rev() {
            counts[s] += counts[s - d];
        }
    }
    let assignments = 2f64.powi(ranks.len() as i32);
    let w2 = (2.0 * w_plus).round() as usize;
    let lower_tail: f64 = counts[..=w2].iter().sum::<f64>() / assignments;
    let upper_tail: f64 = counts[w2..].iter().sum::<f64>() / assignments;
    (2.0 * lower_tail.min(upper_tail)).min(1.0)
}

/// Normal approximation with tie correction and a continuity correction of
/// one half toward the mean.
fn normal_p(w_plus: f64, ranks: &[f64]) -> f64 {
    let n = ranks.len() as f64;
    let mu = n * (n + 1.0) / 4.0;
    let mut sigma_sq = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;
    let mut sorted = ranks.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut start = 0;
    while start < sorted.len() {
        let mut end = start + 1;
        while end < sorted.len() && sorted[end] == sorted[start] {
            end += 1;
        }
        let t = (end - start) as f64;
        sigma_sq -= (t * t * t - t) / 48.0;
        start = end;
    }
    let delta = w_plus - mu;
    let corrected = if delta == 0.0 { 0.0 } else { delta - 0.5 * delta.signum() };
    let z = corrected / sigma_sq.sqrt();
    (erfc(z.abs() / std::f64::consts::SQRT_2)).min(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn fractional_rank_examples() {
        assert_eq!(fractional_rank(&[0.9, 0.8, 0.7]), vec![1.0, 2.0, 3.0]);
        assert_eq!(fractional_rank(&[0.9, 0.9, 0.7]), vec![1.5, 1.5, 3.0]);
        assert_eq!(fractional_rank(&[0.5; 4]), vec![2.5; 4]);
        assert_eq!(fractional_rank(&[0.1, 0.9, 0.5]), vec![3.0, 1.0, 2.0]);
    }

    #[test]
    fn all_positive_differences_of_length_five() {
        let x = [1.0, 2.0, 3.0, 4.0, 5.0];
        let y = [0.0; 5];
        assert_eq!(wilcoxon_signed_rank(&x, &y).unwrap(), 0.0625);
    }

    #[test]
    fn identical_samples_are_undefined() {
        let x = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0];
        assert!(matches!(wilcoxon_signed_rank(&x, &x), Err(Error::StatUndefined(_))));
    }

    #[test]
    fn too_few_nonzero_differences() {
        let x = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0];
        let y = [0.0, 2.0, 3.0, 4.0, 5.0, 6.0];
        assert!(wilcoxon_signed_rank(&x, &y).is_err());
    }

    #[test]
    fn two_sided_symmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..20 {
            let n = rng.gen_range(6..=40);
            let x: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..1.0)).collect();
            let y: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..1.0)).collect();
            let p_xy = wilcoxon_signed_rank(&x, &y).unwrap();
            let p_yx = wilcoxon_signed_rank(&y, &x).unwrap();
            assert!((p_xy - p_yx).abs() < 1e-12);
            assert!((0.0..=1.0).contains(&p_xy));
        }
    }

    #[test]
    fn exact_and_normal_paths_agree_at_the_boundary() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..20 {
            let x: Vec<f64> = (0..25).map(|_| rng.gen_range(0.0..1.0)).collect();
            let y: Vec<f64> = (0..25).map(|_| rng.gen_range(0.0..1.0)).collect();
            let diffs: Vec<f64> = x.iter().zip(&y).map(|(&a, &b)| a - b).collect();
            let ranks = ascending_ranks(&diffs.iter().map(|d| d.abs()).collect::<Vec<_>>());
            let w_plus: f64 =
                ranks.iter().zip(&diffs).filter(|&(_, &d)| d > 0.0).map(|(&r, _)| r).sum();
            let exact = exact_p(w_plus, &ranks);
            let approx = normal_p(w_plus, &ranks);
            assert!((exact - approx).abs() < 0.01, "exact {exact} vs approx {approx}");
        }
    }

    #[test]
    fn tied_magnitudes_are_handled_exactly() {
        let x = [1.0, 1.0, 2.0, 2.0, 3.0, 0.5];
        let y = [0.0; 6];
        let p = wilcoxon_signed_rank(&x, &y).unwrap();
        assert_eq!(p, 2.0 / 64.0);

        let x = [1.0, 1.0, -1.0, 2.0, 2.0, 3.0];
        let y = [0.0; 6];
        let p = wilcoxon_signed_rank(&x, &y).unwrap();
        assert!((0.0..=1.0).contains(&p));
    }
}
