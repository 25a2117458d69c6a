//! Direct evaluation of the Gaussian derivative operator of a multigraph on
//! `Tr H^{2l}`, treating `H_ab` and `H_ba` as independent variables.
//!
//! `Tr H^{2l}` is the sum over closed index words `i_1 .. i_{2l}` of
//! `H_{i_1 i_2} H_{i_2 i_3} ... H_{i_{2l} i_1}`. The operator
//! `prod_{a<b} (d_ab d_ba)^{l_ab} / l_ab! * prod_a (d_aa^2 / 2)^{l_aa} / l_aa!`
//! only survives on the monomial `prod H_ab^{l_ab} H_ba^{l_ab} H_aa^{2 l_aa}`,
//! on which it gives `prod (l_ab!)^2 (2 l_aa)!` before the prefactors.
//! Counting the matching words is independent of any cycle enumeration.

use super::multigraph::Multigraph;
use crate::error::{Error, Result};
use crate::exact::factorial;
use num_bigint::BigInt;
use num_traits::One;

/// Budget for the word enumeration: `v^{2l}` words are visited.
pub const DERIVATIVE_EDGE_BUDGET: usize = 4;

/// The value of the derivative operator of `g` applied to `Tr H^{2l}`,
/// with `l = g.edge_count()`.
pub fn derivative_oracle(g: &Multigraph) -> Result<BigInt> {
    let l = g.edge_count();
    if l == 0 || l > DERIVATIVE_EDGE_BUDGET {
        return Err(Error::OverBudget {
            what: "derivative oracle edge count",
            value: l,
            limit: DERIVATIVE_EDGE_BUDGET,
        });
    }
    let v = g.vertex_count();
    // target[a][b]: how many times the factor H_ab must appear
    let mut target = vec![0u32; v * v];
    for a in 0..v {
        for b in 0..v {
            target[a * v + b] = if a == b {
                2 * g.multiplicity(a, a)
            } else {
                g.multiplicity(a, b)
            };
        }
    }
    let len = 2 * l;
    let mut word = vec![0usize; len];
    let mut matching = 0u64;
    let mut seen = vec![0u32; v * v];
    'words: loop {
        seen.iter_mut().for_each(|s| *s = 0);
        for k in 0..len {
            seen[word[k] * v + word[(k + 1) % len]] += 1;
        }
        if seen == target {
            matching += 1;
        }
        // next word in base v
        for digit in word.iter_mut() {
            *digit += 1;
            if *digit < v {
                continue 'words;
            }
            *digit = 0;
        }
        break;
    }

    // prod (l_ab!)^2 (2 l_aa)! from differentiating, divided by the
    // prefactors prod l_ab! and prod 2^{l_aa} l_aa!
    let mut factor = BigInt::one();
    for a in 0..v {
        let loops = g.multiplicity(a, a) as u64;
        factor *= factorial(2 * loops) / (factorial(loops) << loops);
        for b in a + 1..v {
            factor *= factorial(g.multiplicity(a, b) as u64);
        }
    }
    Ok(factor * BigInt::from(matching))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(v: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::from_edges(v, edges).unwrap()
    }

    #[test]
    fn hand_computed_values() {
        // (1/2!) (d12 d21)^2 Tr H^4 = 4
        assert_eq!(
            derivative_oracle(&graph(2, &[(0, 1), (0, 1)])).unwrap(),
            BigInt::from(4)
        );
        // (1/2!) (d11^2 / 2)^2 Tr H^4 = 3
        assert_eq!(
            derivative_oracle(&graph(1, &[(0, 0), (0, 0)])).unwrap(),
            BigInt::from(3)
        );
        // d12 d21 (d11^2 / 2) Tr H^4 = 4
        assert_eq!(
            derivative_oracle(&graph(2, &[(0, 1), (0, 0)])).unwrap(),
            BigInt::from(4)
        );
        // d12 d21 Tr H^2 = 2
        assert_eq!(derivative_oracle(&graph(2, &[(0, 1)])).unwrap(), BigInt::from(2));
    }

    #[test]
    fn disconnected_graph_gives_zero() {
        assert_eq!(
            derivative_oracle(&graph(4, &[(0, 1), (2, 3)])).unwrap(),
            BigInt::from(0)
        );
    }

    #[test]
    fn budget() {
        assert!(derivative_oracle(&graph(1, &[(0, 0); 5])).is_err());
        assert!(derivative_oracle(&Multigraph::new(2)).is_err());
    }
}
