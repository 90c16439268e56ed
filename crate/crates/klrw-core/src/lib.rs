//! The sl2, one black strand KLRW algebra.
//!
//! Objects are `T_0, ..., T_N` where `N` is the number of punctures. A basis of
//! `Hom(T_i, T_j)` is given by the monotone strands `a_{ji} s^α`, which are the
//! irreducible words of a monomial reduction system on the underlying quiver.
//! Everything here uses exact rational coefficients.

pub mod config;
pub mod element;
pub mod error;
pub mod linalg;
pub mod morphism;
pub mod path;
pub mod rewrite;

pub use config::QuiverConfig;
pub use element::AlgebraElement;
pub use error::KlrwError;
pub use morphism::{compose, delta_ijk, NormalMorphism};
pub use path::{Arrow, ArrowKind, Path};
pub use rewrite::{reduce, turning_number};

/// Exact scalar used for every coefficient in the algebra and its modules.
pub type Q = num_rational::Rational64;

/// Sign of `a - b` as an integer in `{-1, 0, 1}`.
pub fn sgn(a: usize, b: usize) -> i64 {
    match a.cmp(&b) {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    }
}

/// Shorthand for an integer scalar.
pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

/// Shorthand for the scalar `num/den`.
pub fn qf(num: i64, den: i64) -> Q {
    Q::new(num, den)
}
