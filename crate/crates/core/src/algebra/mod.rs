//! Free ℤ₂-graded algebras over [`GrassmannScalar`](crate::GrassmannScalar)
//! and their finitely presented quotients.
//!
//! Elements keep scalars to the left of words. Moving a scalar across a word
//! of odd parity negates the scalar's odd components, which is the only
//! place a Koszul sign enters the product.

mod confluence;
mod element;
mod letters;
mod presentation;

pub use confluence::{confluence_check, critical_words, resolve, Ambiguity};
pub use element::{AlgebraElement, Word};
pub use letters::Letter;
pub use presentation::{
    all_words, ideal_differences, ideals_equal, max_steps, orient, Presentation, Rule, Strategy,
    DEFAULT_MAX_STEPS,
};
