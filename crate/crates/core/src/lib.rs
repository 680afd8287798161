//! Symbolic verification engine for the two-parameter `h`-deformation of the
//! supergroup GL(1|1).
//!
//! The crate is organized bottom-up:
//!
//! * [`scalars`]: exact arithmetic in `Frac(ℚ[p,q]) ⊗ Λ(h1, h2)`, including
//!   exact limits at `p = 1`, `q = 1`.
//! * [`algebra`]: the free ℤ₂-graded algebra over those scalars, finitely
//!   presented quotients, normal forms and confluence checks.
//! * [`rmatrix`]: graded matrices, super tensor embeddings and residuals for
//!   RTT, Yang–Baxter and braid equations.
//! * [`contraction`]: similarity transforms with singular entries and the
//!   exact `p, q → 1` limits producing the `h`-deformed objects.
//! * [`hopf`]: coproduct, counit, antipode and superdeterminant.
//! * [`calculus`]: the differential calculus on the `h1`-superplane.
//! * [`cli`]: expression grammar, presentation files and suite runner.

pub mod algebra;
pub mod calculus;
pub mod cli;
pub mod contraction;
pub mod error;
pub mod hopf;
pub mod presentations;
pub mod report;
pub mod rmatrix;
pub mod scalars;

pub use algebra::{AlgebraElement, Letter, Presentation, Rule, Strategy, Word};
pub use error::{Error, Result};
pub use report::{Residue, VerificationReport};
pub use scalars::{GrassmannScalar, OddParam, RatFunc, Var};

/// ℤ₂ grading.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(odd: bool) -> Parity {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn bit(self) -> u32 {
        self as u32
    }

    pub fn flip(self) -> Parity {
        Parity::from_bit(!self.is_odd())
    }

    /// Sign exponent of a Koszul transposition.
    pub fn both_odd(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.is_odd() != rhs.is_odd())
    }
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}
