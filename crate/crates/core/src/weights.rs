//! Irrational weights used to keep the descriptor terms apart.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The six weights of the per-vertex measures. `w3` doubles as an additive
/// offset so that zero counts still contribute.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightSet {
    pub w1: f64,
    pub w2: f64,
    pub w3: f64,
    pub w4: f64,
    pub w5: f64,
    pub w6: f64,
}

impl Default for WeightSet {
    /// `√7, √11, √3, √13, √17, √19`.
    fn default() -> Self {
        let r = |x: u32| f64::from(x).sqrt();
        WeightSet {
            w1: r(7),
            w2: r(11),
            w3: r(3),
            w4: r(13),
            w5: r(17),
            w6: r(19),
        }
    }
}

impl WeightSet {
    pub fn from_slice(values: &[f64]) -> Result<Self> {
        let [w1, w2, w3, w4, w5, w6] = values else {
            return Err(Error::InvalidWeights(format!(
                "expected 6 weights, got {}",
                values.len()
            )));
        };
        let w = WeightSet {
            w1: *w1,
            w2: *w2,
            w3: *w3,
            w4: *w4,
            w5: *w5,
            w6: *w6,
        };
        w.validate()?;
        Ok(w)
    }

    pub fn as_array(&self) -> [f64; 6] {
        [self.w1, self.w2, self.w3, self.w4, self.w5, self.w6]
    }

    /// Weights must be finite, positive and pairwise distinct.
    pub fn validate(&self) -> Result<()> {
        let ws = self.as_array();
        if let Some(w) = ws.iter().find(|w| !w.is_finite() || **w <= 0.0) {
            return Err(Error::InvalidWeights(format!(
                "{w} is not a positive finite number"
            )));
        }
        for a in 0..6 {
            for b in a + 1..6 {
                if ws[a] == ws[b] {
                    return Err(Error::InvalidWeights(format!(
                        "w{} and w{} are both {}",
                        a + 1,
                        b + 1,
                        ws[a]
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `⟨√2, √3, √5, …⟩`, indexed from 1.
#[derive(Clone, Debug, PartialEq)]
pub struct IrrSequence {
    values: Vec<f64>,
}

impl IrrSequence {
    /// Square roots of the first `len` primes.
    pub fn first(len: usize) -> Self {
        IrrSequence {
            values: first_primes(len)
                .into_iter()
                .map(|p| (p as f64).sqrt())
                .collect(),
        }
    }

    /// Long enough for every index a graph on `n` vertices can need: sorted
    /// measure positions (`≤ n-1`), levels (`≤ n-1`) and clique sizes (`≤ n`).
    pub fn for_order(n: usize) -> Self {
        IrrSequence::first(n.max(1))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The `index`-th term, 1-based.
    #[inline]
    pub fn get(&self, index: usize) -> f64 {
        self.values[index - 1]
    }

    pub fn require(&self, len: usize) -> Result<()> {
        if self.values.len() < len {
            Err(Error::InsufficientIrr {
                required: len,
                available: self.values.len(),
            })
        } else {
            Ok(())
        }
    }
}

/// First `count` primes by a sieve of Eratosthenes.
pub fn first_primes(count: usize) -> Vec<u64> {
    if count == 0 {
        return Vec::new();
    }
    let mut limit = 16usize;
    loop {
        let mut composite = vec![false; limit + 1];
        let mut primes = Vec::with_capacity(count);
        for p in 2..=limit {
            if composite[p] {
                continue;
            }
            primes.push(p as u64);
            if primes.len() == count {
                return primes;
            }
            let mut m = p * p;
            while m <= limit {
                composite[m] = true;
                m += p;
            }
        }
        limit *= 2;
    }
}
