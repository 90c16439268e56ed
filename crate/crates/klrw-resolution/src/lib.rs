//! A projective bimodule resolution `P_• -> A` of the KLRW algebra.
//!
//! `P_n = A ⊗ kS_n ⊗ A` where `S_n` are the `n`-ambiguities of the reduction
//! system. The differential is available in closed form ([`boundary`]) and
//! through the general recursive construction ([`recursive`]); the two are
//! compared in the test suite.

pub mod ambiguity;
pub mod boundary;
pub mod element;
pub mod error;
pub mod exactness;
pub mod recursive;
pub mod split;

pub use ambiguity::{enumerate_s, Ambiguity, Family};
pub use boundary::{boundary, boundary_generator, multiply};
pub use element::{ResolutionElement, Tensor};
pub use error::ResolutionError;
pub use exactness::{check_exactness, Slice, SliceReport};
pub use recursive::RecursiveResolution;
pub use split::{split, split_left, split_right};
