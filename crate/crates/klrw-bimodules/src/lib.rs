//! Bimodules over the KLRW algebra and the comparison between the normalized
//! bar complex and the reduction-system resolution.

pub mod bar;
pub mod bimodule;
pub mod error;
pub mod transfer;

pub use bar::{bar_boundary, bar_multiply, BarElement, BarTensor};
pub use bimodule::{iota, pi, restrict_to_braid, Bimodule, ModuleBasis, ModuleElement};
pub use error::BimoduleError;
pub use transfer::{transfer, transfer_tensor, transfer_unit, RecursiveTransfer};
