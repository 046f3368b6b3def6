//! Explicit complexes over `F_p` and homology by rank, used to check the
//! closed forms on small cases.

mod basis;
mod complex;
mod fp;
mod genkoszul;
mod split;

pub use basis::{functor_basis, MonomialBasis};
pub use complex::{
    alternating, build_complex, graded_homology, homology_dims, ChainComplexFp, ComplexSpec, Term,
};
pub use fp::FpMatrix;
pub use genkoszul::{koszul_homology_formula, genkoszul_check, GradedLinearMap};
pub use split::{split_check, split_composite, SplitCheck};
