//! Fuzzy rough lower and upper approximations parameterized by quantifier
//! models, with the named model line-up used throughout the benchmarks.

use crate::error::{Error, Result};
use crate::fuzzy::{pointwise, Connectives, FuzzyRelation, FuzzySet};
use crate::quantifiers::{
    zadeh_binary_with, zadeh_unary, yager_unary, BinaryModelKind, BinaryQuantifierModel,
    RimQuantifier,
};

/// How the lower approximation evaluates `Q̃_l(Ry, A)`.
#[derive(Clone, Debug)]
pub enum LowerModel {
    /// Infimum of the implication values: the classical lower approximation.
    Classical,
    /// Any binary quantifier model applied to the pair (foreset, concept).
    Quantifier(BinaryQuantifierModel),
}

/// How the upper approximation evaluates `Q̃_u(C(Ry, A))`.
#[derive(Clone, Debug)]
pub enum UpperModel {
    /// Supremum of the conjunction values: the classical upper approximation.
    ClassicalSup,
    /// OWA aggregation of the conjunction values.
    YagerUnary(RimQuantifier),
    /// Sigma-count proportion of the conjunction values over the universe.
    ZadehUnary(RimQuantifier),
    /// Sigma-count proportion of the intersection within the foreset.
    VqfrsBinary(RimQuantifier),
}

/// A fully wired pair of lower and upper approximation operators.
#[derive(Clone, Debug)]
pub struct ApproximationSpec {
    lower: LowerModel,
    upper: UpperModel,
    connectives: Connectives,
}

impl ApproximationSpec {
    /// Wires a lower and upper model with Kleene-Dienes connectives.
    pub fn new(lower: LowerModel, upper: UpperModel) -> Self {
        ApproximationSpec { lower, upper, connectives: Connectives::kleene_dienes() }
    }

    pub fn with_connectives(mut self, connectives: Connectives) -> Self {
        self.connectives = connectives;
        self
    }

    pub fn lower(&self) -> &LowerModel {
        &self.lower
    }

    pub fn upper(&self) -> &UpperModel {
        &self.upper
    }

    /// Lower-approximation membership of one instance given its foreset.
    pub fn lower_membership(&self, foreset: &FuzzySet, concept: &FuzzySet) -> Result<f64> {
        match &self.lower {
            LowerModel::Classical => {
                let implied = pointwise(self.connectives.implicator, foreset, concept)?;
                Ok(implied.memberships().iter().cloned().fold(f64::INFINITY, f64::min))
            }
            LowerModel::Quantifier(model) => model.eval(foreset, concept),
        }
    }

    /// Upper-approximation membership of one instance given its foreset.
    pub fn upper_membership(&self, foreset: &FuzzySet, concept: &FuzzySet) -> Result<f64> {
        let conjunction = || pointwise(self.connectives.conjunctor, foreset, concept);
        match &self.upper {
            UpperModel::ClassicalSup => {
                Ok(conjunction()?.memberships().iter().cloned().fold(0.0, f64::max))
            }
            UpperModel::YagerUnary(rim) => Ok(yager_unary(rim, &conjunction()?)),
            UpperModel::ZadehUnary(rim) => Ok(zadeh_unary(rim, &conjunction()?)),
            UpperModel::VqfrsBinary(rim) => zadeh_binary_with(rim, 0.0, foreset, concept),
        }
    }

    /// Lower approximation of a concept under a fuzzy relation.
    pub fn lower_approximation(&self, r: &FuzzyRelation, concept: &FuzzySet) -> Result<FuzzySet> {
        self.approximation(r, concept, |foreset| self.lower_membership(foreset, concept))
    }

    /// Upper approximation of a concept under a fuzzy relation.
    pub fn upper_approximation(&self, r: &FuzzyRelation, concept: &FuzzySet) -> Result<FuzzySet> {
        self.approximation(r, concept, |foreset| self.upper_membership(foreset, concept))
    }

    fn approximation(
        &self,
        r: &FuzzyRelation,
        concept: &FuzzySet,
        member: impl Fn(&FuzzySet) -> Result<f64>,
    ) -> Result<FuzzySet> {
        if r.universe_size() != concept.universe_size() {
            return Err(Error::DimensionMismatch(format!(
                "relation over {} instances cannot approximate a concept over {}",
                r.universe_size(),
                concept.universe_size()
            )));
        }
        if !r.is_reflexive() {
            log::warn!("approximating under a non-reflexive relation; foresets may be empty");
        }
        let memberships = (0..r.universe_size())
            .map(|y| member(&r.foreset(y)?))
            .collect::<Result<Vec<f64>>>()?;
        FuzzySet::new(memberships)
    }
}

/// The named approximation models compared in the benchmarks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModelId {
    Frs,
    Owa,
    Wowa,
    Ywi,
    Fowa,
    Vqfrs,
    Mcx,
}

/// Every named model, in presentation order.
pub const ALL_MODELS: [ModelId; 7] = [
    ModelId::Frs,
    ModelId::Owa,
    ModelId::Wowa,
    ModelId::Ywi,
    ModelId::Fowa,
    ModelId::Vqfrs,
    ModelId::Mcx,
];

impl std::fmt::Display for ModelId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            ModelId::Frs => "FRS",
            ModelId::Owa => "OWA",
            ModelId::Wowa => "WOWA",
            ModelId::Ywi => "YWI",
            ModelId::Fowa => "FOWA",
            ModelId::Vqfrs => "VQFRS",
            ModelId::Mcx => "MCX",
        };
        write!(f, "{name}")
    }
}

impl std::str::FromStr for ModelId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "FRS" => Ok(ModelId::Frs),
            "OWA" => Ok(ModelId::Owa),
            "WOWA" => Ok(ModelId::Wowa),
            "YWI" => Ok(ModelId::Ywi),
            "FOWA" => Ok(ModelId::Fowa),
            "VQFRS" => Ok(ModelId::Vqfrs),
            "MCX" => Ok(ModelId::Mcx),
            other => Err(Error::Config(format!(
                "unknown model {other:?}; expected one of FRS, OWA, WOWA, YWI, FOWA, VQFRS, MCX"
            ))),
        }
    }
}

/// Wires a named model with Kleene-Dienes implication and minimum conjunction.
/// `FRS` ignores the quantifier; every other model uses it for the lower
/// approximation and pairs it with an existential upper approximation.
pub fn named_model(id: ModelId, rim: &RimQuantifier) -> ApproximationSpec {
    let upper = UpperModel::YagerUnary(RimQuantifier::Existential);
    match id {
        ModelId::Frs => ApproximationSpec::new(LowerModel::Classical, UpperModel::ClassicalSup),
        ModelId::Owa => ApproximationSpec::new(
            LowerModel::Quantifier(BinaryQuantifierModel::new(
                BinaryModelKind::YagerImplication,
                rim.clone(),
            )),
            upper,
        ),
        ModelId::Wowa => ApproximationSpec::new(
            LowerModel::Quantifier(BinaryQuantifierModel::new(BinaryModelKind::Wowa, rim.clone())),
            upper,
        ),
        ModelId::Ywi => ApproximationSpec::new(
            LowerModel::Quantifier(BinaryQuantifierModel::new(BinaryModelKind::Ywi, rim.clone())),
            upper,
        ),
        ModelId::Fowa => ApproximationSpec::new(
            LowerModel::Quantifier(BinaryQuantifierModel::new(
                BinaryModelKind::FowaQ2,
                rim.clone(),
            )),
            upper,
        ),
        ModelId::Vqfrs => ApproximationSpec::new(
            LowerModel::Quantifier(BinaryQuantifierModel::new(
                BinaryModelKind::Zadeh,
                rim.clone(),
            )),
            UpperModel::VqfrsBinary(RimQuantifier::Existential),
        ),
        ModelId::Mcx => ApproximationSpec::new(
            LowerModel::Quantifier(BinaryQuantifierModel::new(BinaryModelKind::McxQ2, rim.clone())),
            upper,
        ),
    }
}
