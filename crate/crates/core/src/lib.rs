//! Ext-group dimension tables between twisted divided, exterior and
//! symmetric powers over finite fields.
//!
//! Everything here is pure integer arithmetic over `alloc`. The `oracle`
//! module builds explicit complexes over F_p and is used to cross-check the
//! closed forms.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod basic_ext;
pub mod error;
pub mod families;
pub mod fcat;
pub mod graded;
pub mod hopf;
pub mod oracle;
pub mod pcalc;
pub mod stable;

pub use error::{Error, Result};
pub use families::{ExtPair, FunctorKind, TwistSide};
pub use graded::{graded_convolve, power_dims, Flavor, GradedDims};
pub use hopf::{
    presentation_coefficient, AlgebraFamily, GeneratorSpec, GeneratorWord, HopfPresentation,
    Parity, Token, TriDegree,
};
