//! Hochschild cohomology `HH^n(M) = H^n Hom(P_•, M)` for the diagonal,
//! braiding and cokernel bimodules, computed one internal degree at a time.
//!
//! A cochain coordinate pairs a generator `w ∈ S_n` with a basis vector `m`
//! of `M(s(w), t(w))`; its internal degree `D = 𝔮(w) - 𝔮(m)` is preserved by
//! the differential, so every slice is finite.

pub mod cochain;
pub mod error;
pub mod representatives;
pub mod slice;

pub use cochain::{induced_d, Cochain, Coordinate};
pub use error::HochschildError;
pub use representatives::{
    cohomology_basis, epsilon_class, independent_classes, representatives, sigma_class, theta_class, v_class,
};
pub use slice::{d_matrix, hh_dim, hh_table, hh_total, slice_coordinates, HhEntry};
