//! Twisted complexes over the KLRW category and the negative braiding functor
//! `β_{i⁻}`, an `A∞`-functor whose only nonzero components are `β¹` and `β²`.

pub mod error;
pub mod fixtures;
pub mod functor;
pub mod twisted;

pub use error::BraidingError;
pub use functor::{composable_chains, NegativeBraiding, CENTER, LEFT, RIGHT};
pub use twisted::{mu_delta1, mu_delta2, Slot, TwComplex, TwMorphism};
