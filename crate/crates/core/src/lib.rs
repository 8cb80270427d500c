//! Sidon sets in `F_2^t` built from the graphs of highly linear APN functions.
//!
//! The crate is organised bottom-up:
//!
//! * [`gf2`]: polynomial-basis arithmetic in `F_2^n` and the coordinate dot product.
//! * [`fwht`]: the in-place fast Walsh–Hadamard transform shared by every spectrum.
//! * [`vbf`]: vectorial Boolean functions: differential uniformity, Walsh spectra, linearity.
//! * [`sidon`]: point sets: Sidon/sum-free/maximality checks, set spectra, hyperplane slicing.
//! * [`families`]: Gold, inverse and Dobbertin power maps, the multiplicative-subgroup set,
//!   and the closed-form size and bound formulas.
//! * [`codes`]: parity-check codes with minimum distance at least 5.
//! * [`oracle`]: slow, definition-level reference routines used to cross-check the fast paths.
//!
//! Vectors of `F_2^t` are plain `u32` words: bit `i` is coordinate `i`.

pub mod codes;
pub mod error;
pub mod families;
pub mod fwht;
pub mod gf2;
pub mod oracle;
pub mod sidon;
pub mod vbf;

mod bits;

pub use codes::{LinearCodeSpec, MinDistance};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use gf2::FieldContext;
pub use sidon::{HyperplaneSlice, PointSet, SetWalshSpectrum};
pub use vbf::{VectorialBooleanFunction, WalshSpectrum};

/// Largest ambient dimension accepted for point sets and bit-table algorithms.
pub const MAX_DIM: u32 = 25;
