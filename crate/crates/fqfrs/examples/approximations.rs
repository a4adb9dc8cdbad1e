//! Lower and upper fuzzy rough approximations on a toy similarity relation,
//! with and without one mislabeled instance.
//!
//! The classical lower approximation is an infimum, so a single outlier
//! inside a concept's neighborhood destroys its membership; the quantifier
//! models only ask that "most" neighbors agree. Run with
//! `cargo run --example approximations`.

use fqfrs::fmt_sig;
use fqfrs::frs::ALL_MODELS;
use fqfrs::{named_model, FuzzyRelation, FuzzySet, RimQuantifier};

fn main() -> fqfrs::Result<()> {
    let n = 6;
    let mut values = vec![0.0; n * n];
    for x in 0..n {
        for y in 0..n {
            let d = (x as f64 - y as f64).abs();
            values[x * n + y] = (1.0 - d / 3.0).max(0.0);
        }
    }
    let relation = FuzzyRelation::new(n, values)?;

    let clean = FuzzySet::new(vec![1.0, 1.0, 1.0, 0.0, 0.0, 0.0])?;
    let noisy = FuzzySet::new(vec![1.0, 0.0, 1.0, 0.0, 0.0, 0.0])?;
    let most = RimQuantifier::zadeh_s(0.6, 1.0)?;

    for (label, concept) in [("clean concept", &clean), ("x2 mislabeled", &noisy)] {
        println!("{label}: A = {:?}", concept.memberships());
        println!("{:>8} {:>14} {:>14}", "model", "lower(x1)", "upper(x1)");
        for id in ALL_MODELS {
            let spec = named_model(id, &most);
            let lower = spec.lower_approximation(&relation, concept)?;
            let upper = spec.upper_approximation(&relation, concept)?;
            println!(
                "{:>8} {:>14} {:>14}",
                id.to_string(),
                fmt_sig(lower.membership(0), 10),
                fmt_sig(upper.membership(0), 10),
            );
        }
        println!();
    }
    println!("one flipped label drags the FRS row down to its single worst neighbor;");
    println!("the OWA row degrades gently because it tolerates a minority of exceptions");
    Ok(())
}
