//! Exact finite-field geometry: fields, projective points, Cremona maps,
//! explicit involutions, and small-degree polynomial utilities.

pub mod cremona;
pub mod field;
pub mod involutions;
pub mod poly;
pub mod proj;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cremona::{
    map_order, phi, phi_inverse, standard_involution, LinearMap, PlaneMap, QuadraticMap,
};
pub use field::{FieldError, FieldSpec, GFElement};
pub use poly::{factor_mod_p, quartic_discriminant, IntPoly, PolyError, PolyModP};
pub use proj::{
    collinear, conic_through_5, frobenius_orbit, general_position, Conic, P1Point, ProjPoint,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("the zero vector is not a projective point")]
    ZeroVector,
    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("point {0} appears twice")]
    RepeatedPoint(String),
    #[error("the points impose only {rank} conditions on conics")]
    ConicUnderdetermined { rank: usize },
    #[error("the quadratic forms are linearly dependent")]
    DependentForms,
    #[error("the quadratic forms all vanish on the line {0}")]
    CommonLinearFactor(String),
    #[error("the linear map is singular")]
    SingularLinearMap,
    #[error("only {found} sample points have all iterates defined, need {needed}")]
    TooFewWitnesses { found: usize, needed: usize },
    #[error("no order up to {0} found on the sampled points")]
    ExceedsBound(u32),
    #[error("field of order {order} is not GF({q}^2)")]
    NotQuadraticExtension { order: u32, q: u32 },
    #[error("{0} lies in the base field")]
    InBaseField(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// One verified statement.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}
