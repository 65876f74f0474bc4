//! Contradictions with local realism that refer to a specific state.

pub mod array;
pub mod parity;
pub mod reality;
pub mod search;

pub use array::{canonical_array, check_array, two_qubit_square, ArrayReport, LineCheck, OperatorArray};
pub use parity::{
    canonical_pentagon_instance, check_parity_contradiction, pentagon, ParityInstance, ParityReport, Pentagon,
    PentagonSide, SignedObservable, Symbol,
};
pub use reality::{compatible_pairs, find_determinations, sitewise_compatible, Determination};
pub use search::{find_contradiction_of_size, search_parity_contradictions, SearchOptions, SearchOutcome};
