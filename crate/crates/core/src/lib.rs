//! K-theoretic Littlewood-Richardson coefficients `C^ν_{λ,μ}`.
//!
//! Two counting rules are provided: λ-dominant set-valued tableaux of shape
//! `μ` with weight `ν − λ`, and μ-dominant set-valued contratableaux of shape
//! `λ` with weight `ν − μ`. The bijection `Γ` between the two witness sets
//! (built from marked Gelfand-Tsetlin patterns via `Υ` and `Ω`) is executable
//! and returns a full certificate trace. Coefficients can be cross-checked
//! against a direct expansion of `G_λ · G_μ` in the Grothendieck basis.

pub mod error;
pub mod grothendieck;
pub mod gtpatterns;
pub mod lr;
pub mod shapes;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use shapes::{Partition, RotatedShape, SkewShape};
pub use tableaux::{CellSet, SetValuedFilling, WeightVector, Word};
