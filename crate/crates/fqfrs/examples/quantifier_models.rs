//! Sweeps the S-function quantifier family and shows how each model moves
//! between the existential and universal extremes.
//!
//! `zadeh_s(a, 1)` interpolates from "some" (a near 0) to "all" (a near 1);
//! under the universal quantifier every sound model collapses to the
//! inclusion measure `min_x I_KD(A,B)(x)`. Run with
//! `cargo run --example quantifier_models`.

use fqfrs::fmt_sig;
use fqfrs::fuzzy::{pointwise, Connectives};
use fqfrs::qfm::{fowa_binary_q2, mcx_binary_q2};
use fqfrs::quantifiers::{wowa_binary, yager_implication_binary, ywi_binary};
use fqfrs::{FuzzySet, RimQuantifier};

fn main() -> fqfrs::Result<()> {
    let a = FuzzySet::new(vec![0.9, 0.8, 0.6, 0.3, 1.0])?;
    let b = FuzzySet::new(vec![1.0, 0.7, 0.4, 0.9, 0.8])?;
    let kd = Connectives::kleene_dienes().implicator;

    println!("model values for \"Λ A's are B's\", Λ = zadeh_s(a, 1):");
    println!("{:>8} {:>14} {:>14} {:>14} {:>14} {:>14}", "a", "owa", "wowa", "ywi", "fowa", "mcx");
    for a_param in [0.0, 0.25, 0.5, 0.75, 0.9, 0.99] {
        let rim = RimQuantifier::zadeh_s(a_param, 1.0)?;
        println!(
            "{:>8} {:>14} {:>14} {:>14} {:>14} {:>14}",
            a_param,
            fmt_sig(yager_implication_binary(&rim, kd, &a, &b)?, 10),
            fmt_sig(wowa_binary(&rim, kd, &a, &b)?, 10),
            fmt_sig(ywi_binary(&rim, kd, &a, &b)?, 10),
            fmt_sig(fowa_binary_q2(&rim, &a, &b)?, 10),
            fmt_sig(mcx_binary_q2(&rim, &a, &b)?, 10),
        );
    }

    let universal = RimQuantifier::Universal;
    let inclusion = pointwise(kd, &a, &b)?
        .memberships()
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    println!();
    println!("universal limit, all models vs min_x I_KD(A,B)(x) = {}:", fmt_sig(inclusion, 10));
    for (name, value) in [
        ("owa", yager_implication_binary(&universal, kd, &a, &b)?),
        ("wowa", wowa_binary(&universal, kd, &a, &b)?),
        ("ywi", ywi_binary(&universal, kd, &a, &b)?),
        ("fowa", fowa_binary_q2(&universal, &a, &b)?),
        ("mcx", mcx_binary_q2(&universal, &a, &b)?),
    ] {
        println!("  {name:6} {}", fmt_sig(value, 10));
    }
    Ok(())
}
