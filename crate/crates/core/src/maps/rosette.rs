use crate::error::{Error, Result};
use crate::exact::{double_factorial, enumerate_partition_terms, factorial, Rational};
use crate::observables::MatrixSize;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Largest edge count for which pairings are enumerated: `(2l-1)!!` items.
pub const PAIRING_BUDGET: usize = 8;

/// Fixed-point-free involution on the darts `0 .. 2l` of a single vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pairing {
    partner: Vec<usize>,
}

impl Pairing {
    pub fn new(partner: Vec<usize>) -> Result<Self> {
        let len = partner.len();
        if len == 0 || !len.is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!(
                "pairing needs an even, non-zero dart count, got {len}"
            )));
        }
        for (i, &j) in partner.iter().enumerate() {
            if j >= len || j == i || partner[j] != i {
                return Err(Error::InvalidArgument(format!("dart {i} is not properly paired")));
            }
        }
        Ok(Self { partner })
    }

    /// Builds the pairing from a list of dart pairs.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![usize::MAX; 2 * pairs.len()];
        for &(a, b) in pairs {
            if a >= partner.len() || b >= partner.len() {
                return Err(Error::InvalidArgument(format!("dart pair ({a}, {b}) out of range")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        Self::new(partner)
    }

    pub fn edge_count(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, dart: usize) -> usize {
        self.partner[dart]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    /// Number of faces: cycles of `i -> partner(i) + 1 (mod 2l)`.
    pub fn face_count(&self) -> usize {
        face_count(&self.partner)
    }
}

fn face_count(partner: &[usize]) -> usize {
    let n = partner.len();
    let mut seen = vec![false; n];
    let mut faces = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = (partner[d] + 1) % n;
        }
    }
    faces
}

/// Genus of the one-vertex map: `g = (l + 1 - F) / 2`.
///
/// # Panics
/// If the Euler relation fails to give a non-negative integer, which would
/// mean the face tracing is broken.
pub fn rosette_genus(p: &Pairing) -> usize {
    genus_of(p.edge_count(), p.face_count())
}

fn genus_of(l: usize, faces: usize) -> usize {
    let excess = (l + 1) as isize - faces as isize;
    assert!(
        excess >= 0 && excess % 2 == 0,
        "Euler relation violated: l={l}, F={faces}"
    );
    (excess / 2) as usize
}

fn check_budget(l: usize) -> Result<()> {
    if l == 0 || l > PAIRING_BUDGET {
        return Err(Error::OverBudget {
            what: "pairing edge count",
            value: l,
            limit: PAIRING_BUDGET,
        });
    }
    Ok(())
}

/// `(2l - 1)!!`, the number of pairings on `2l` darts.
pub fn pairing_count(l: usize) -> u64 {
    (1..=l as u64).map(|k| 2 * k - 1).product()
}

/// Decodes the `index`-th pairing in lexicographic order. Digit `k` (most
/// significant first, radix `2l - 2k - 1`) picks the partner of the smallest
/// unpaired dart among the remaining ones.
fn decode_pairing(l: usize, mut index: u64, partner: &mut [usize], free: &mut Vec<usize>) {
    let mut digits = [0usize; 2 * PAIRING_BUDGET];
    for k in (0..l).rev() {
        let radix = (2 * (l - k) - 1) as u64;
        digits[k] = (index % radix) as usize;
        index /= radix;
    }
    free.clear();
    free.extend(0..2 * l);
    for &digit in digits.iter().take(l) {
        let a = free.remove(0);
        let b = free.remove(digit);
        partner[a] = b;
        partner[b] = a;
    }
}

/// All pairings on `2l` darts in lexicographic order.
pub fn enumerate_pairings(l: usize) -> Result<impl Iterator<Item = Pairing>> {
    check_budget(l)?;
    let mut free = Vec::with_capacity(2 * l);
    Ok((0..pairing_count(l)).map(move |i| {
        let mut partner = vec![0; 2 * l];
        decode_pairing(l, i, &mut partner, &mut free);
        Pairing { partner }
    }))
}

/// Rooted rosette counts `C_g(l)` for `g = 0 ..= l/2`, obtained by tracing the
/// faces of every pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RosetteCensus {
    pub l: usize,
    pub counts: Vec<u64>,
}

impl RosetteCensus {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn get(&self, g: usize) -> u64 {
        self.counts.get(g).copied().unwrap_or(0)
    }
}

fn census_range(l: usize, range: std::ops::Range<u64>) -> Vec<u64> {
    let mut counts = vec![0u64; l / 2 + 1];
    let mut partner = vec![0; 2 * l];
    let mut free = Vec::with_capacity(2 * l);
    for i in range {
        decode_pairing(l, i, &mut partner, &mut free);
        counts[genus_of(l, face_count(&partner))] += 1;
    }
    counts
}

pub fn rosette_census(l: usize) -> Result<RosetteCensus> {
    check_budget(l)?;
    let total = pairing_count(l);
    let counts = census_chunks(l, total);
    Ok(RosetteCensus { l, counts })
}

#[cfg(feature = "parallel")]
fn census_chunks(l: usize, total: u64) -> Vec<u64> {
    use rayon::prelude::*;
    const CHUNK: u64 = 1 << 14;
    let chunks = total.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| census_range(l, c * CHUNK..((c + 1) * CHUNK).min(total)))
        .reduce(
            || vec![0u64; l / 2 + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

#[cfg(not(feature = "parallel"))]
fn census_chunks(l: usize, total: u64) -> Vec<u64> {
    census_range(l, 0..total)
}

/// `C_g(l) = (2l)! / (l! 4^g) * sum prod 1 / (k_q! (2q+1)^{k_q})`.
///
/// # Panics
/// If the sum does not reduce to an integer.
pub fn rosette_count_formula(l: usize, g: usize) -> BigInt {
    let sum = enumerate_partition_terms(l as u64, g as u64)
        .iter()
        .fold(Rational::zero(), |acc, t| acc + t.weight());
    let value = sum * Rational::new(factorial(2 * l as u64), factorial(l as u64) << (2 * g));
    assert!(value.is_integer(), "C_{g}({l}) = {value} is not an integer");
    value.to_integer()
}

/// `sum_g C_g(l)` by the formula route; equals `(2l-1)!!`.
pub fn rosette_total_formula(l: usize) -> BigInt {
    (0..=l / 2).map(|g| rosette_count_formula(l, g)).sum()
}

/// `<Tr H^{2l} / N>` from the pairing census: `sum_g C_g(l) N^{-2g}`.
pub fn moment_wick(n: MatrixSize, l: usize) -> Result<Rational> {
    let census = rosette_census(l)?;
    Ok(weigh_by_genus(&census.counts, n))
}

pub(crate) fn weigh_by_genus(counts: &[u64], n: MatrixSize) -> Rational {
    let inv_n2 = Rational::new(BigInt::one(), BigInt::from(n.get()).pow(2));
    let mut power = Rational::one();
    let mut sum = Rational::zero();
    for &c in counts {
        sum += &power * Rational::from_integer(c.into());
        power *= &inv_n2;
    }
    sum
}

/// `(2l - 1)!!` as a big integer.
pub fn pairing_total(l: usize) -> BigInt {
    double_factorial(2 * l as i64 - 1)
}
