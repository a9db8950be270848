//! # homalg
//!
//! An exact-arithmetic computer-algebra kernel for finite-dimensional
//! Hom-algebraic structures. Structures are presented by rational structure
//! constants together with an invertible automorphism `α`; the crate
//! verifies every axiom system on all basis tuples (exact equality, never a
//! tolerance) and constructs the derived objects of the theory:
//!
//! * Hom-algebras, Hom-coalgebras, Hom-bialgebras and Hom-Hopf algebras,
//!   their duals, and twists of classical bialgebras ([`hom`]);
//! * cotwistors and the smash coproduct on `B ⊗ H`, with the bicomodule
//!   category transforms ([`smash`]);
//! * entwining maps `H ⊗ A -> A ⊗ H`, the dual-basis bijection with
//!   cotwistors, entwined modules and codoubles ([`entwine`]);
//! * the application families: Doi-Hopf data, Long dimodules with the
//!   D-equation, and Yetter-Drinfeld modules with braidings solving the
//!   Hom-Yang-Baxter equation ([`apps`]).
//!
//! Everything is immutable and pure: the same inputs always produce
//! bit-identical outputs, so reports are reproducible byte for byte.
//!
//! The `examples/` directory contains one runnable program per capability;
//! the `homalg` binary exposes the same operations over canonical text
//! files.

pub mod apps;
pub mod chain;
pub mod cli;
pub mod entwine;
pub mod error;
pub mod hom;
pub mod io;
pub mod linmap;
pub mod report;
pub mod scalar;
pub mod smash;

pub use error::{Error, Result};
pub use linmap::{dual_bases, flip, tensor_permutation, LinearMap};
pub use report::{AxiomCheck, CheckReport, Witness};
pub use scalar::Scalar;
