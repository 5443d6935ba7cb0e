//! Exact b-symbol weight theory of irreducible cyclic codes.
//!
//! The crate builds the trace codes `C(Q, N) = {(T_{Q/q}(β θ^i))_{i<n}}` over
//! table-driven finite fields, computes b-symbol weights by brute force, and
//! evaluates closed-form weight formulas through exact Gaussian periods and
//! the `#U(b, i, N1)` tuple-class counts. Every closed form has a brute-force
//! counterpart so the two can be compared exactly.
//!
//! Modules, bottom-up:
//!
//! - [`gf`]: finite fields, discrete logs, relative traces
//! - [`cyclotomy`]: cyclotomic classes, Gaussian periods and sums, circulant checks
//! - [`bsymbol`]: b-symbol windows, weights, distances and supports
//! - [`codes`]: irreducible cyclic codes and brute-force weight distributions
//! - [`enumerators`]: `#U` profiles and closed-form weights
//! - [`hierarchy`]: b-symbol and generalized Hamming weight hierarchies
//! - [`shorten`]: b-symbol-support shortening and the Griesmer bound

pub mod bsymbol;
pub mod codes;
pub mod cyclotomy;
pub mod enumerators;
mod error;
pub mod gf;
pub mod grid;
pub mod hierarchy;
pub mod linalg;
pub mod numtheory;
pub mod report;
pub mod shorten;
pub mod suite;

pub use bsymbol::{SupportSet, Word};
pub use codes::{Code, CodeKind, CodeParams, DistributionView, EnumerationMode, WeightDistribution};
pub use cyclotomy::{CyclotomicValue, PeriodSystem};
pub use enumerators::{ClosedFormWeights, UProfile};
pub use error::{Error, Result};
pub use gf::{FieldConfig, FieldDescriptor, FieldElement, FieldOp};
pub use hierarchy::HierarchyReport;
pub use report::{CheckStatus, VerificationReport};
pub use shorten::ShortenedCode;

/// Runtime limits shared by the enumeration routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Limits {
    /// Maximum number of codewords or tuples enumerated by brute force.
    pub enumeration: u64,
    /// Maximum number of subspaces visited by the generalized-weight oracle.
    pub subspaces: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { enumeration: 1 << 20, subspaces: 10_000_000 }
    }
}
