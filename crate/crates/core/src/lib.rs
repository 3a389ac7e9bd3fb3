//! Exact coefficient counting for powers of multivariate polynomials over
//! finite fields, together with the enumerative closed forms that organize
//! those counts.

pub mod arith;
pub mod automaton;
pub mod closed_forms;
pub mod error;
pub mod ffield;
pub mod lattice;
pub mod mpoly;
pub mod oracle;
pub mod qpow;
pub mod ratgen;
pub mod traveling;
pub mod upoly;
pub mod verify;

pub use automaton::DigitAutomaton;
pub use error::{Error, Result};
pub use ffield::{FieldElem, FieldSpec};
pub use mpoly::{parse_poly, CoeffRing, FieldPoly, IntPoly, Integers, MultiPoly};
pub use upoly::UniPoly;

/// Resource limits shared by the expansion and automaton code paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest number of terms a sparse product may produce.
    pub max_terms: usize,
    /// Largest degree of a univariate dense power.
    pub max_dense_degree: u64,
    /// Largest number of reachable automaton states.
    pub state_cap: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_terms: 10_000_000, max_dense_degree: 1 << 27, state_cap: 100_000 }
    }
}
