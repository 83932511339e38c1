//! Concrete dagger kernel categories and the functors between them.

pub mod boolhat;
pub mod fdhilb;
pub mod finpinj;
pub mod finrel;
pub mod finset;
pub mod functors;

pub use boolhat::{BoolElem, BoolHat, BoolMor};
pub use fdhilb::{Dim, FdHilb, LinearMap};
pub use finpinj::{partial_injection_count, FinPInj, PartialInjection};
pub use finrel::{FinRel, Relation};
pub use finset::FinSet;
pub use functors::{graph_functor, l2_functor, pinj_to_relation, relation_to_pinj, FinFunction};
