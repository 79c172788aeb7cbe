//! Finite bounded residuated lattices: construction, term evaluation,
//! filters and quotients, and the structural properties tied to Boolean
//! elements (direct indecomposability, locality, GAP, Boolean lifting).
//!
//! Elements are indices `0..n` into the algebra's tables; [`FiniteBrl`]
//! validates the tables once at construction and is immutable afterwards.

pub mod algebra;
pub mod constructions;
pub mod filters;
pub mod format;
pub mod laws;
pub mod lex;
pub mod report;
pub mod set;
pub mod structure;
pub mod terms;

pub use algebra::{Axiom, AxiomReport, BuildError, Elem, FiniteBrl, Order, Tables};
pub use filters::Filter;
pub use set::ElemSet;
pub use terms::{Equation, Term, TermError};
