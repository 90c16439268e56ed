//! `A∞`-natural transformations `id ⇒ id` and `id ⇒ β_{i⁻}` of degrees 0, 1
//! and 2: their components, the weights `𝔠` and `𝔔`, the solver for the
//! third component into the braiding, and the cocycle residual.

pub mod coefficients;
pub mod error;
pub mod params;
pub mod transformation;

pub use coefficients::{coeff_c, coeff_qq};
pub use error::NatError;
pub use params::{NatParams, Target};
pub use transformation::{NatTransformation, NatValue};
