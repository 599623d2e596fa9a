//! Knot signature from Goeritz matrices, with a Seifert-matrix oracle for braids.
//!
//! Values are reported with the positive trefoil at σ = +2, the negative of
//! the classical convention; `classical()` gives the other sign.

pub mod goeritz;
pub mod matrix;
pub mod seifert;

use serde::Serialize;

use crate::braid::BraidWord;
use crate::diagram::PlanarDiagram;
use crate::error::Result;

pub use goeritz::{goeritz, ColorClass, GoeritzData};
pub use seifert::{seifert_matrix, SeifertMatrix};

/// Colour class used when a caller does not choose one.
pub const DEFAULT_CLASS: ColorClass = ColorClass::First;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SignatureValue {
    pub sigma: i64,
}

impl SignatureValue {
    pub fn from_classical(classical: i64) -> Self {
        SignatureValue { sigma: -classical }
    }

    pub fn classical(self) -> i64 {
        -self.sigma
    }
}

pub fn signature_goeritz(d: &PlanarDiagram) -> Result<SignatureValue> {
    signature_goeritz_with(d, DEFAULT_CLASS)
}

pub fn signature_goeritz_with(d: &PlanarDiagram, class: ColorClass) -> Result<SignatureValue> {
    Ok(SignatureValue::from_classical(goeritz(d, class)?.classical_signature()))
}

pub fn signature_seifert_oracle(b: &BraidWord) -> Result<SignatureValue> {
    Ok(SignatureValue::from_classical(seifert_matrix(b)?.classical_signature()))
}

/// Knot determinant as |det G| of a reduced Goeritz matrix.
pub fn goeritz_determinant(d: &PlanarDiagram) -> Result<u64> {
    Ok(goeritz(d, DEFAULT_CLASS)?.determinant_abs())
}

/// Upper bound on σ after `n` sharp operations, starting from either σ itself
/// or the bound 2g ≥ σ.
pub fn sigma_upper_after_sharps(sigma_or_genus_bound: i64, n: u64) -> i64 {
    sigma_or_genus_bound + 6 * n as i64
}
