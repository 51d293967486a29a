//! Bit strings and computational-basis indices.
//!
//! Convention used everywhere in this crate: qubit 0 is the *most
//! significant* bit of a basis index, so the textual form of a bit string
//! reads left to right in qubit order. `"10"` on two qubits is basis
//! index 2.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a computational basis state, in `[0, 2^n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BasisIndex(pub usize);

impl BasisIndex {
    /// Expand into the `n_bits`-wide bit string, qubit 0 first (MSB).
    pub fn to_bitstring(self, n_bits: usize) -> BitString {
        let bits = (0..n_bits)
            .map(|q| (self.0 >> (n_bits - 1 - q)) & 1 == 1)
            .collect();
        BitString(bits)
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An ordered sequence of bits, textual form `'0'`/`'1'` left to right.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BitString(pub Vec<bool>);

impl BitString {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.0[i]
    }

    /// Basis index with bit 0 as the most significant bit.
    pub fn to_index(&self) -> BasisIndex {
        BasisIndex(self.0.iter().fold(0, |acc, &b| (acc << 1) | b as usize))
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::TableSyntax {
                    line: 0,
                    message: format!("invalid character `{other}` in bit string `{s}`"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BitString(bits))
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}
