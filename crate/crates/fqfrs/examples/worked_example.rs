//! Evaluates every binary quantifier model on one small fuzzy set pair.
//!
//! The statement under evaluation is "for most x in A, x is in B" with
//! "most" given by the S-function quantifier rising from proportion 0.7
//! to 1. Run with `cargo run --example worked_example`.

use fqfrs::fmt_sig;
use fqfrs::fuzzy::{pointwise, Connectives};
use fqfrs::qfm::{fowa_binary_q2, mcx_binary_q2};
use fqfrs::quantifiers::{
    wowa_binary, yager_implication_binary, ywi_binary, zadeh_binary,
};
use fqfrs::{FuzzySet, RimQuantifier};

fn main() -> fqfrs::Result<()> {
    let a = FuzzySet::new(vec![1.0, 0.2, 0.0, 0.0, 0.0, 0.3])?;
    let b = FuzzySet::new(vec![1.0, 1.0, 0.0, 0.0, 0.0, 0.0])?;
    let most = RimQuantifier::zadeh_s(0.7, 1.0)?;
    let kd = Connectives::kleene_dienes().implicator;

    println!("A = {:?}", a.memberships());
    println!("B = {:?}", b.memberships());
    let implied = pointwise(kd, &a, &b)?;
    println!("I_KD(A,B) = {:?}", implied.memberships());
    println!();

    let rows = [
        ("owa", yager_implication_binary(&most, kd, &a, &b)?),
        ("wowa", wowa_binary(&most, kd, &a, &b)?),
        ("ywi", ywi_binary(&most, kd, &a, &b)?),
        ("fowa", fowa_binary_q2(&most, &a, &b)?),
        ("mcx", mcx_binary_q2(&most, &a, &b)?),
        ("zadeh", zadeh_binary(&most, &a, &b)?),
    ];
    println!("\"most A's are B's\" under each model:");
    for (name, value) in rows {
        println!("  {name:6} {}", fmt_sig(value, 12));
    }

    let inf = implied.memberships().iter().cloned().fold(f64::INFINITY, f64::min);
    println!("  inf    {}  (classical lower bound, no quantifier)", fmt_sig(inf, 12));
    Ok(())
}
