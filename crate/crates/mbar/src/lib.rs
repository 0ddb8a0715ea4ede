//! Exact-rational divisor classes on the moduli space M̄_{g,n} of stable
//! pointed curves.
//!
//! The crate is organised around [`DivisorClass`], a sparse coefficient
//! vector over λ, ψ_1..ψ_n, δ_0 and the boundary divisors δ_{i:S}. On top of
//! it sit pullbacks along the standard gluing and forgetful maps
//! ([`maps`]), the classical counting formulas ([`enumerative`]), a catalog
//! of named strata divisors ([`catalog`]) and a registry of exact identities
//! between them ([`verify`]).

pub mod catalog;
pub mod curves;
pub mod enumerative;
pub mod error;
pub mod io;
pub mod maps;
pub mod pic;
pub mod verify;

pub use curves::{builtin_test_curve, pair, TestCurve};
pub use error::{Error, Result};
pub use maps::{pullback, GluingMap, MapKind};
pub use pic::{canonical_index, BoundaryIndex, DivisorClass, Generator, ModuliBase, Q};
