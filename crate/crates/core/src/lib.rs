//! Exact verification of local-realism contradictions built from quantum
//! error-correcting codewords.
//!
//! Everything is computed in exact arithmetic: Pauli strings in symplectic
//! form with an `i^k` phase, and state amplitudes as dyadic Gaussian
//! rationals. The crate covers
//!
//! * the Pauli algebra and a small exact state-vector simulator,
//! * stabilizer groups with per-codeword signs and the Knill-Laflamme test,
//! * three concrete codes (five-qubit, three-qubit GHZ pair, Steane),
//! * elements of reality, parity contradictions and the operator array,
//! * a 104-projector Kochen-Specker set with an exhaustive colorability search.

pub mod codes;
pub mod commands;
pub mod dense;
pub mod dyadic;
pub mod error;
pub mod exec;
pub mod ks;
pub mod paradox;
pub mod pauli;
pub mod report;
pub mod selftest;
pub mod stabilizer;
pub mod statevector;

pub use dyadic::DyadicGaussian;
pub use error::{Error, Result};
pub use exec::Exec;
pub use pauli::{PauliLetter, PauliString, Sign};
pub use stabilizer::{Codeword, StabilizerElement, StabilizerGroup};
pub use statevector::{Projector, StateVector};
