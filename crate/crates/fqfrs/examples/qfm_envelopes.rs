//! Inspects the three-valued cut envelope behind the fuzzification
//! mechanisms and derives the averaging and cautious aggregations from it.
//!
//! For each cut level γ the envelope brackets the proportional quantifier
//! between its infimum ⊥(γ) and supremum ⊤(γ) over all crisp readings of
//! the two fuzzy arguments. Averaging the interval midpoints over γ gives
//! the fowa value; the cautious value stays as close to 1/2 as the envelope
//! allows. Run with `cargo run --example qfm_envelopes`.

use fqfrs::fmt_sig;
use fqfrs::qfm::{brute_envelope, envelope_q2, fowa_binary_q2, mcx_binary_q2};
use fqfrs::quantifiers::SemiFuzzyBinary;
use fqfrs::{FuzzySet, RimQuantifier};

fn main() -> fqfrs::Result<()> {
    let a = FuzzySet::new(vec![0.9375, 0.75, 0.375, 0.25])?;
    let b = FuzzySet::new(vec![0.8125, 0.3125, 0.625, 0.0625])?;
    let most = RimQuantifier::zadeh_s(0.3, 1.0)?;

    let envelope = envelope_q2(&most, &a, &b)?;
    println!("cut envelope of \"most A's are B's\":");
    println!("{:>24} {:>12} {:>12}", "interval", "bottom", "top");
    let (top0, bottom0) = envelope.gamma0();
    println!("{:>24} {:>12} {:>12}", "γ = 0", fmt_sig(bottom0, 6), fmt_sig(top0, 6));
    let points = envelope.breakpoints();
    for i in 0..envelope.top().len() {
        let interval = format!("({:.4}, {:.4}]", points[i], points[i + 1]);
        println!(
            "{:>24} {:>12} {:>12}",
            interval,
            fmt_sig(envelope.bottom()[i], 6),
            fmt_sig(envelope.top()[i], 6),
        );
    }

    let brute = brute_envelope(&SemiFuzzyBinary::q2(most.clone()), &a, &b)?;
    let agree = brute.top() == envelope.top() && brute.bottom() == envelope.bottom();
    println!();
    println!("brute-force enumeration over all crisp readings agrees: {agree}");
    println!("fowa  (mean of interval midpoints) = {}", fmt_sig(fowa_binary_q2(&most, &a, &b)?, 12));
    println!("       envelope mean integral      = {}", fmt_sig(envelope.mean_integral(), 12));
    println!("mcx   (cautious aggregation)       = {}", fmt_sig(mcx_binary_q2(&most, &a, &b)?, 12));
    Ok(())
}
