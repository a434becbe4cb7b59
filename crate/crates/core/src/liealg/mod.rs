//! Matrix Lie algebras and their real structure theory.

mod algebra;
mod cartan;
mod ideals;
mod roots;

pub use algebra::LieAlgebra;
pub use cartan::{default_theta, maximal_abelian, validate_theta, CartanDecomposition};
pub use ideals::{simple_ideal_split, IdealSplit, SimpleIdeal};
pub use roots::{positivity_from_signs, CartanData, Root};
