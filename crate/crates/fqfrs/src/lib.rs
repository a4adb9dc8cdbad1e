//! Fuzzy rough sets built on fuzzy quantification.
//!
//! The crate models vague quantified statements ("most similar instances are
//! positive") and uses them to build noise-tolerant lower and upper fuzzy
//! rough approximations, plus an experiment pipeline that benchmarks the
//! resulting classifiers under label noise.
//!
//! The quickest way in is the examples directory:
//!
//! ```text
//! cargo run --example worked_example      # one fuzzy set pair, every model
//! cargo run --example quantifier_models   # model behavior across a RIM quantifier family
//! cargo run --example approximations      # lower/upper approximations on a toy relation
//! cargo run --example qfm_envelopes       # cut envelopes and fuzzification mechanisms
//! cargo run --example classify_dataset    # nearest-neighbour-style classification on bundled data
//! cargo run --example noise_benchmark     # miniature noise sweep with ranks and p-values
//! ```
//!
//! The same functionality is scriptable through the `fqfrs` binary
//! (`quantify`, `approx`, `classify`, `experiment`, `stats`, `plotdata`).

pub mod aggregation;
pub mod error;
pub mod experiment;
pub mod frs;
pub mod fuzzy;
pub mod qfm;
pub mod quantifiers;

pub use error::{Error, Result};
pub use frs::{named_model, ApproximationSpec, ModelId};
pub use fuzzy::{CrispSet, FuzzyRelation, FuzzySet};
pub use quantifiers::RimQuantifier;

/// Formats a finite value with the given number of significant digits.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    assert!(digits > 0);
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return format!("{:.*}", digits - 1, 0.0);
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    format!("{:.*}", decimals, x)
}
