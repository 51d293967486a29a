//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong across the simulator, compiler, network
/// evaluator, and binding-statistics modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} out of range for {what} (limit {limit})")]
    OutOfRange {
        what: &'static str,
        index: usize,
        limit: usize,
    },

    #[error("non-unitary gate matrix: ‖M†M − I‖ = {deviation:e}")]
    NonUnitary { deviation: f64 },

    #[error("state norm {norm} deviates from 1 beyond tolerance")]
    Unnormalized { norm: f64 },

    #[error("line {line}: {message}")]
    TableSyntax { line: usize, message: String },

    #[error("line {line}: {message}")]
    TableShape { line: usize, message: String },

    #[error("line {line}: duplicate input `{input}` (function must be a bijection)")]
    TableBijectivity { line: usize, input: String },

    #[error("line {line}: output `{output}` out of order (expected the binary form of {expected})")]
    TableOrder {
        line: usize,
        output: String,
        expected: usize,
    },

    #[error("configuration mismatch: {0}")]
    Config(String),

    #[error("wiring error: {0}")]
    Wiring(String),

    #[error("branch enumeration would exceed the cap of {cap} leaves")]
    ResourceCap { cap: u64 },

    #[error("unknown format `{0}`")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
