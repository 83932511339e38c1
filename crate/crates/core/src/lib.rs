//! Dagger kernel categories at desk scale.
//!
//! [`category`] holds the instance interface, [`dagcat`] every construction
//! derived from it, and [`instances`] the four concrete categories. The
//! lattice logic lives in [`ksub`], the cokernel-kernel-pair category in
//! [`kck`], and the homset order in [`order`]. [`laws`] gathers the law
//! suites into reports and [`io`] reads instance files.

pub mod category;
pub mod dagcat;
pub mod error;
pub mod instances;
pub mod io;
pub mod kck;
pub mod laws;
pub mod ksub;
pub mod order;

pub use category::{DaggerKernelCategory, Enumerable, KernelSub, Sampleable};
pub use dagcat::KernelOps;
pub use error::{Error, Result};
