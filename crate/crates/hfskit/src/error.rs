use num_bigint::BigUint;
use thiserror::Error;

/// Convenience alias for fallible operations in this crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by the codecs and constructions in this crate.
///
/// Every operation that can build a number too large to represent checks the
/// configured bit cap (see [`crate::cap`]) and reports [`Error::BitCapExceeded`]
/// instead of silently truncating or exhausting memory.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A set element would serve as an exponent of 2 at or above the cap.
    #[error("bit cap exceeded: element {element} is not below the configured maximum of {max_bits} bits")]
    BitCapExceeded { element: BigUint, max_bits: u64 },

    /// An urelement value does not lie below the urelement limit.
    #[error("urelement {urelement} out of range for ulimit {ulimit}")]
    UrelementOutOfRange { urelement: BigUint, ulimit: BigUint },

    /// Two members of one set have the same code.
    #[error("duplicate member {member} in set")]
    DuplicateMember { member: String },

    /// Two hyperedges of one hypergraph contain the same member set.
    #[error("duplicate hyperedge {edge} in hypergraph")]
    DuplicateHyperedge { edge: String },

    /// The same directed edge was given twice.
    #[error("duplicate edge {src} -> {dst} in digraph")]
    DuplicateEdge { src: BigUint, dst: BigUint },

    /// Malformed set notation.
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    /// Malformed JSON graph input.
    #[error("invalid graph JSON: {message}")]
    Json { message: String },

    /// The code does not have the shape of an encoded Kuratowski pair.
    #[error("{code} does not encode a Kuratowski pair")]
    NotAPair { code: BigUint },

    /// Odd input to the choice function: member 0 decodes to the empty set,
    /// which offers nothing to choose.
    #[error("no choice function for {code}: member 0 decodes to the empty set")]
    EmptyChoiceMember { code: BigUint },

    /// A cycle was found where a DAG was required.
    #[error("cycle detected at vertex {vertex}")]
    CycleDetected { vertex: BigUint },

    /// A vertex without incident edges cannot survive an edge-set encoding.
    #[error("isolated vertex {vertex} cannot be encoded")]
    IsolatedVertex { vertex: BigUint },

    /// Refusal to enumerate a powerset with more than 2^24 subsets.
    #[error("powerset of {len} elements exceeds the enumeration limit of {max} elements")]
    PowersetTooLarge { len: usize, max: usize },
}
