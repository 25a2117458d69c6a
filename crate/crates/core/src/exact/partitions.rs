use super::{factorial, Rational};
use num_bigint::BigInt;
use num_traits::One;

/// Multiplicities `k_q` (indexed by `q >= 0`) with `sum q k_q = g` and
/// `sum k_q = l - 2g + 1` for the `(l, g)` that produced them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionTerm {
    multiplicities: Vec<u64>,
}

impl PartitionTerm {
    /// Builds a term from explicit multiplicities, trailing zeros trimmed.
    pub fn new(mut multiplicities: Vec<u64>) -> Self {
        while multiplicities.len() > 1 && multiplicities.last() == Some(&0) {
            multiplicities.pop();
        }
        if multiplicities.is_empty() {
            multiplicities.push(0);
        }
        Self { multiplicities }
    }

    /// `k_q`, zero past the stored range.
    pub fn k(&self, q: usize) -> u64 {
        self.multiplicities.get(q).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    /// `sum_q q * k_q`
    pub fn weighted_sum(&self) -> u64 {
        self.multiplicities.iter().enumerate().map(|(q, &k)| q as u64 * k).sum()
    }

    /// `sum_q k_q`
    pub fn part_count(&self) -> u64 {
        self.multiplicities.iter().sum()
    }

    /// `prod_q 1 / (k_q! (2q + 1)^{k_q})`, the weight of this term in the
    /// genus expansion of the moments.
    pub fn weight(&self) -> Rational {
        let mut denom = BigInt::one();
        for (q, &k) in self.multiplicities.iter().enumerate() {
            denom *= factorial(k) * BigInt::from(2 * q as u64 + 1).pow(k as u32);
        }
        Rational::new(BigInt::one(), denom)
    }
}

/// Every multiplicity assignment with `sum q k_q = g` and
/// `sum k_q = l - 2g + 1`, each once, in lexicographic order of
/// `(k_1, k_2, ..., k_g)` descending from the largest part.
///
/// Empty when `l - 2g + 1 < 0`.
pub fn enumerate_partition_terms(l: u64, g: u64) -> Vec<PartitionTerm> {
    let total = l as i64 - 2 * g as i64 + 1;
    if total < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut ks = vec![0u64; g as usize + 1];
    fill_parts(g as usize, g, &mut ks, &mut |ks| {
        let positive: u64 = ks[1..].iter().sum();
        if positive as i64 <= total {
            let mut m = ks.to_vec();
            m[0] = (total - positive as i64) as u64;
            out.push(PartitionTerm::new(m));
        }
    });
    out
}

// Assigns k_q for q = max_part, max_part - 1, ..., 1 so that the weighted sum
// hits `remaining` exactly.
fn fill_parts(max_part: usize, remaining: u64, ks: &mut [u64], emit: &mut impl FnMut(&[u64])) {
    if remaining == 0 {
        emit(ks);
        return;
    }
    if max_part == 0 {
        return;
    }
    let q = max_part as u64;
    for k in (0..=remaining / q).rev() {
        ks[max_part] = k;
        fill_parts(max_part - 1, remaining - k * q, ks, emit);
    }
    ks[max_part] = 0;
}
