//! The orthomodular lattices `KSub(X)` and the logic on them.

pub mod checks;
pub mod lattice;
pub mod ops;
pub mod opclass;

pub use lattice::KSubLattice;
pub use ops::LogicOps;
pub use opclass::Opclassifier;
