//! Truth tables: the `input:output` line format defining a bijection on
//! n-bit strings, ordered by increasing output value.

use crate::bits::BitString;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthEntry {
    pub input: BitString,
    pub output: BitString,
}

/// A validated bijection f: Z₂ⁿ → Z₂ⁿ. Entry k holds the pair whose
/// output, read as binary, equals k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    pub n: usize,
    pub entries: Vec<TruthEntry>,
}

impl TruthTable {
    /// Parse `input:output` lines. Line k (0-based) must carry output
    /// value k; inputs must be pairwise distinct.
    pub fn parse<S: AsRef<str>>(lines: &[S]) -> Result<Self> {
        if lines.is_empty() {
            return Err(Error::TableShape {
                line: 1,
                message: "empty truth table".to_string(),
            });
        }

        let mut entries = Vec::with_capacity(lines.len());
        let mut n = 0usize;
        for (k, raw) in lines.iter().enumerate() {
            let line = k + 1;
            let text = raw.as_ref();
            let (input_text, output_text) = text.split_once(':').ok_or(Error::TableSyntax {
                line,
                message: format!("expected `input:output`, got `{text}`"),
            })?;
            if output_text.contains(':') {
                return Err(Error::TableSyntax {
                    line,
                    message: format!("more than one `:` in `{text}`"),
                });
            }
            let input: BitString = input_text.parse().map_err(|_| Error::TableSyntax {
                line,
                message: format!("invalid input bits `{input_text}`"),
            })?;
            let output: BitString = output_text.parse().map_err(|_| Error::TableSyntax {
                line,
                message: format!("invalid output bits `{output_text}`"),
            })?;
            if k == 0 {
                n = input.len();
                if n == 0 {
                    return Err(Error::TableShape {
                        line,
                        message: "empty input bit string".to_string(),
                    });
                }
            }
            if input.len() != n || output.len() != n {
                return Err(Error::TableShape {
                    line,
                    message: format!(
                        "ragged widths: expected {n}-bit input and output, got {} and {}",
                        input.len(),
                        output.len()
                    ),
                });
            }
            if output.to_index().0 != k {
                return Err(Error::TableOrder {
                    line,
                    output: output.to_string(),
                    expected: k,
                });
            }
            entries.push(TruthEntry { input, output });
        }

        if entries.len() != 1 << n {
            return Err(Error::TableShape {
                line: lines.len(),
                message: format!(
                    "expected {} lines for {n}-bit strings, got {}",
                    1usize << n,
                    entries.len()
                ),
            });
        }

        // outputs are 0..2^n by the order rule, so distinct inputs imply a
        // bijection
        let mut seen = vec![false; 1 << n];
        for (k, entry) in entries.iter().enumerate() {
            let idx = entry.input.to_index().0;
            if seen[idx] {
                return Err(Error::TableBijectivity {
                    line: k + 1,
                    input: entry.input.to_string(),
                });
            }
            seen[idx] = true;
        }

        Ok(TruthTable { n, entries })
    }

    /// Inverse of `parse`: the canonical line rendering.
    pub fn to_lines(&self) -> Vec<String> {
        self.entries
            .iter()
            .map(|e| format!("{}:{}", e.input, e.output))
            .collect()
    }

    /// f(input), by linear scan over the entries.
    pub fn apply(&self, input: &BitString) -> Option<&BitString> {
        self.entries
            .iter()
            .find(|e| &e.input == input)
            .map(|e| &e.output)
    }

    /// Build the table for a permutation given as `outputs[input_value]`,
    /// re-ordered into the increasing-output form.
    pub fn from_permutation(n: usize, outputs: &[usize]) -> Result<Self> {
        if outputs.len() != 1 << n {
            return Err(Error::TableShape {
                line: 0,
                message: format!("permutation length {} != 2^{n}", outputs.len()),
            });
        }
        let mut lines = vec![String::new(); outputs.len()];
        for (input_value, &output_value) in outputs.iter().enumerate() {
            if output_value >= outputs.len() || !lines[output_value].is_empty() {
                return Err(Error::TableBijectivity {
                    line: input_value + 1,
                    input: format!("{input_value}"),
                });
            }
            lines[output_value] = format!(
                "{}:{}",
                crate::bits::BasisIndex(input_value).to_bitstring(n),
                crate::bits::BasisIndex(output_value).to_bitstring(n)
            );
        }
        TruthTable::parse(&lines)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_complement_table() {
        let tt = TruthTable::parse(&["11:00", "10:01", "01:10", "00:11"]).unwrap();
        assert_eq!(tt.n, 2);
        assert_eq!(tt.apply(&"01".parse().unwrap()).unwrap().to_string(), "10");
    }

    #[test]
    fn parses_identity_table() {
        let tt = TruthTable::parse(&["00:00", "01:01", "10:10", "11:11"]).unwrap();
        for e in &tt.entries {
            assert_eq!(e.input, e.output);
        }
    }

    #[test]
    fn duplicate_input_is_a_bijectivity_error() {
        let err = TruthTable::parse(&["00:00", "00:01", "10:10", "11:11"]).unwrap_err();
        assert!(matches!(err, Error::TableBijectivity { .. }));
    }

    #[test]
    fn out_of_order_outputs_rejected() {
        let err = TruthTable::parse(&["00:01", "01:00", "10:10", "11:11"]).unwrap_err();
        assert!(matches!(err, Error::TableOrder { line: 1, .. }));
    }

    #[test]
    fn wrong_line_count_is_a_shape_error() {
        let err = TruthTable::parse(&["00:00", "01:01", "10:10"]).unwrap_err();
        assert!(matches!(err, Error::TableShape { .. }));
    }

    #[test]
    fn ragged_widths_rejected() {
        let err = TruthTable::parse(&["00:00", "01:01", "10:10", "111:11"]).unwrap_err();
        assert!(matches!(err, Error::TableShape { line: 4, .. }));
    }

    #[test]
    fn bad_characters_are_syntax_errors() {
        assert!(matches!(
            TruthTable::parse(&["0x:00", "01:01", "10:10", "11:11"]).unwrap_err(),
            Error::TableSyntax { line: 1, .. }
        ));
        assert!(matches!(
            TruthTable::parse(&["0000"]).unwrap_err(),
            Error::TableSyntax { line: 1, .. }
        ));
    }

    proptest! {
        #[test]
        fn round_trip_random_bijections(seed in 0u64..10_000) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = 3;
            let mut perm: Vec<usize> = (0..1usize << n).collect();
            perm.shuffle(&mut rng);
            let tt = TruthTable::from_permutation(n, &perm).unwrap();
            let reparsed = TruthTable::parse(&tt.to_lines()).unwrap();
            prop_assert_eq!(tt, reparsed);
        }
    }
}
