//! Exact rational geometry: vectors, signed permutations, isometries and
//! integer lattices.

mod isometry;
mod lattice;
mod linsolve;
mod module_basis;
mod rat;
mod signed_perm;
mod vector;

pub use isometry::{product, Isometry};
pub use lattice::{CosetCanon, Lattice, LatticeKind};
pub use linsolve::solve_affine;
pub use module_basis::{module_basis, IntModuleBasis};
pub use rat::Rat;
pub use signed_perm::SignedPerm;
pub use vector::Vec3;
