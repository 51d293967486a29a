//! Exact probability distributions over bit strings of a fixed width.

use std::collections::BTreeMap;

use rand::Rng;

use crate::bits::{BasisIndex, BitString};
use crate::scalar::Real;

/// Born-rule (or branch-enumerated) outcome distribution, dense over all
/// 2^n bit strings.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution<R: Real> {
    n_bits: usize,
    probs: Vec<R>,
}

impl<R: Real> Distribution<R> {
    pub fn from_probs(n_bits: usize, probs: Vec<R>) -> Self {
        assert_eq!(probs.len(), 1 << n_bits);
        Distribution { n_bits, probs }
    }

    pub fn n_bits(&self) -> usize {
        self.n_bits
    }

    pub fn prob(&self, index: usize) -> R {
        self.probs[index]
    }

    pub fn prob_of(&self, outcome: &BitString) -> R {
        self.probs[outcome.to_index().0]
    }

    pub fn total(&self) -> R {
        self.probs.iter().copied().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (BitString, R)> + '_ {
        self.probs
            .iter()
            .enumerate()
            .map(|(k, &p)| (BasisIndex(k).to_bitstring(self.n_bits), p))
    }

    /// Most probable outcome (lowest index wins ties).
    pub fn argmax(&self) -> (BitString, R) {
        let (k, &p) = self
            .probs
            .iter()
            .enumerate()
            .fold(None, |best: Option<(usize, &R)>, (k, p)| match best {
                Some((_, bp)) if *bp >= *p => best,
                _ => Some((k, p)),
            })
            .expect("non-empty distribution");
        (BasisIndex(k).to_bitstring(self.n_bits), p)
    }

    /// One sample, inverse-CDF over the stored order.
    pub fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> BitString {
        let u = R::from_f64_lossy(rng.gen::<f64>()) * self.total();
        let mut acc = R::zero();
        let mut outcome = self.probs.len() - 1;
        for (k, &p) in self.probs.iter().enumerate() {
            acc += p;
            if u < acc {
                outcome = k;
                break;
            }
        }
        BasisIndex(outcome).to_bitstring(self.n_bits)
    }

    pub fn max_abs_diff(&self, other: &Distribution<R>) -> R {
        assert_eq!(self.n_bits, other.n_bits);
        self.probs
            .iter()
            .zip(&other.probs)
            .map(|(&a, &b)| (a - b).abs())
            .fold(R::zero(), |m, d| if d > m { d } else { m })
    }

    /// String-keyed map form, for JSON output.
    pub fn to_map(&self) -> BTreeMap<String, R> {
        self.iter().map(|(b, p)| (b.to_string(), p)).collect()
    }
}
