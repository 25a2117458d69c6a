//! Exhaustive cross-checks tying the counting routes together.

use super::best::{best_forward, best_inverse};
use super::cmap::enumerate_maps;
use super::derivative::{derivative_oracle, DERIVATIVE_EDGE_BUDGET};
use super::eulerian::{directed_double, eulerian_count_normalized, eulerian_count_rooted, eulerian_cycles_rooted};
use super::multigraph::{enumerate_connected_multigraphs, Multigraph};
use super::rosette::moment_wick;
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, Rational};
use crate::observables::MatrixSize;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashSet;

/// Largest half-order accepted by [`verify_initial_identity`].
pub const INITIAL_IDENTITY_BUDGET: usize = 4;

/// One `q` slice of the identity: graphs on `q + 1` labeled vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct InitialTerm {
    pub q: usize,
    /// `(2l)! / (2^{l-q} q! (l-q)!)`
    pub expected: BigInt,
    /// Sum of normalized Eulerian counts over connected graphs.
    pub eulerian_sum: BigInt,
    /// Sum of `2l * #maps * #spanning trees / symmetry factor`.
    pub map_tree_sum: BigInt,
}

impl InitialTerm {
    pub fn holds(&self) -> bool {
        self.eulerian_sum == self.expected && self.map_tree_sum == self.expected
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InitialIdentityReport {
    pub l: usize,
    pub n: MatrixSize,
    /// `N^{l+1}` times the Wick moment.
    pub lhs: Rational,
    /// `sum_q binom(N, q+1) (2l)! / (2^{l-q} q! (l-q)!)`
    pub rhs: Rational,
    pub terms: Vec<InitialTerm>,
}

impl InitialIdentityReport {
    /// The first `q` whose graph sums disagree with the closed form.
    pub fn first_failure(&self) -> Option<usize> {
        self.terms.iter().find(|t| !t.holds()).map(|t| t.q)
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs && self.first_failure().is_none()
    }
}

fn expected_term(l: usize, q: usize) -> BigInt {
    factorial(2 * l as u64) / ((factorial(q as u64) * factorial((l - q) as u64)) << (l - q))
}

/// Checks `N^{l+1} <Tr H^{2l} / N> = sum_q binom(N, q+1) (2l)! / (2^{l-q} q! (l-q)!)`
/// and, slice by slice, both graph-sum interpretations of each term.
pub fn verify_initial_identity(l: usize, n: MatrixSize) -> Result<InitialIdentityReport> {
    if l == 0 || l > INITIAL_IDENTITY_BUDGET {
        return Err(Error::OverBudget {
            what: "initial identity half-order",
            value: l,
            limit: INITIAL_IDENTITY_BUDGET,
        });
    }
    let n_big = BigInt::from(n.get());
    let lhs = moment_wick(n, l)? * Rational::from_integer(n_big.pow(l as u32 + 1));
    let q_max = l.min(n.get() as usize - 1);
    let mut rhs = BigInt::zero();
    let mut terms = Vec::with_capacity(q_max + 1);
    for q in 0..=q_max {
        let expected = expected_term(l, q);
        rhs += binomial(n.get() as u64, q as i64 + 1) * &expected;
        let mut eulerian_sum = BigInt::zero();
        let mut map_tree_sum = BigInt::zero();
        for g in enumerate_connected_multigraphs(q + 1, l)? {
            eulerian_sum += eulerian_count_normalized(&g)?;
            map_tree_sum += map_tree_count(&g)?;
        }
        terms.push(InitialTerm {
            q,
            expected,
            eulerian_sum,
            map_tree_sum,
        });
    }
    Ok(InitialIdentityReport {
        l,
        n,
        lhs,
        rhs: Rational::from_integer(rhs),
        terms,
    })
}

// Rooted (map, tree) pairs over all 2l roots, divided by the symmetry factor.
fn map_tree_count(g: &Multigraph) -> Result<BigInt> {
    let maps = enumerate_maps(g)?.len();
    let trees = g.spanning_trees().len();
    let raw = BigInt::from(2 * g.edge_count()) * maps * trees;
    let symmetry = g.symmetry_factor();
    assert!(
        (&raw % &symmetry).is_zero(),
        "{raw} rooted pairs are not divisible by {symmetry}"
    );
    Ok(raw / symmetry)
}

/// A graph on which two counting routes disagree.
#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub graph: Multigraph,
    pub detail: String,
}

/// Compares [`eulerian_count_normalized`] with the differentiation oracle on
/// every connected graph with at most `max_vertices` vertices and `1 ..= max_edges`
/// edges. Returns the number of graphs checked and any mismatches.
pub fn certify_normalization(max_vertices: usize, max_edges: usize) -> Result<(usize, Vec<Mismatch>)> {
    if max_edges > DERIVATIVE_EDGE_BUDGET {
        return Err(Error::OverBudget {
            what: "certified edge count",
            value: max_edges,
            limit: DERIVATIVE_EDGE_BUDGET,
        });
    }
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for v in 1..=max_vertices {
        for l in 1..=max_edges {
            for g in enumerate_connected_multigraphs(v, l)? {
                checked += 1;
                let eulerian = eulerian_count_normalized(&g)?;
                let oracle = derivative_oracle(&g)?;
                if eulerian != oracle {
                    mismatches.push(Mismatch {
                        graph: g,
                        detail: format!("eulerian {eulerian}, oracle {oracle}"),
                    });
                }
            }
        }
    }
    Ok((checked, mismatches))
}

/// Counts gathered by [`verify_bijection`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BijectionReport {
    pub graphs: usize,
    /// `(map, tree, root)` triples pushed through the round trip.
    pub triples: usize,
    /// Eulerian cycles pushed through the reverse round trip.
    pub cycles: usize,
    pub mismatches: Vec<String>,
}

impl BijectionReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Exhaustive check of the map/tree to Eulerian-cycle correspondence on
/// every connected graph with at most `max_vertices` vertices and
/// `1 ..= max_edges` edges: both round trips are the identity, the forward
/// map is injective for each root, and image size equals the rooted count.
pub fn verify_bijection(max_vertices: usize, max_edges: usize) -> Result<BijectionReport> {
    let mut report = BijectionReport::default();
    for v in 1..=max_vertices {
        for l in 1..=max_edges {
            for g in enumerate_connected_multigraphs(v, l)? {
                report.graphs += 1;
                check_graph(&g, &mut report)?;
            }
        }
    }
    Ok(report)
}

fn check_graph(g: &Multigraph, report: &mut BijectionReport) -> Result<()> {
    let d = directed_double(g);
    let maps = enumerate_maps(g)?;
    let trees = g.spanning_trees();
    for root in 0..d.arc_count() {
        let mut image = HashSet::new();
        for m in &maps {
            for t in &trees {
                report.triples += 1;
                let c = best_forward(m, t, root)?;
                let (m2, t2) = best_inverse(&c, g, root)?;
                if m2.rotation() != m.rotation() || &t2 != t {
                    report
                        .mismatches
                        .push(format!("{g:?} root {root}: inverse of forward differs"));
                }
                if !image.insert(c) {
                    report
                        .mismatches
                        .push(format!("{g:?} root {root}: forward map not injective"));
                }
            }
        }
        let rooted = eulerian_count_rooted(&d, root)?;
        if image.len() as u64 != rooted {
            report
                .mismatches
                .push(format!("{g:?} root {root}: {} pairs, {rooted} cycles", image.len()));
        }
        for c in eulerian_cycles_rooted(&d, root)? {
            report.cycles += 1;
            let (m, t) = best_inverse(&c, g, root)?;
            if best_forward(&m, &t, root)? != c {
                report
                    .mismatches
                    .push(format!("{g:?} root {root}: forward of inverse differs"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn size(n: u32) -> MatrixSize {
        MatrixSize::new(n).unwrap()
    }

    #[test]
    fn worked_example() {
        let r = verify_initial_identity(2, size(3)).unwrap();
        assert_eq!(r.lhs, Rational::from_integer(57.into()));
        let expected: Vec<BigInt> = r.terms.iter().map(|t| t.expected.clone()).collect();
        assert_eq!(expected, vec![3.into(), 12.into(), 12.into()]);
        assert!(r.holds());
    }

    #[test]
    fn small_cases_hold() {
        for l in 1..=3 {
            for n in 1..=4 {
                let r = verify_initial_identity(l, size(n)).unwrap();
                assert!(r.holds(), "l={l} N={n}: {r:?}");
            }
        }
    }

    #[test]
    fn budget() {
        assert!(verify_initial_identity(5, size(2)).is_err());
        assert!(verify_initial_identity(0, size(2)).is_err());
        assert!(certify_normalization(2, 5).is_err());
    }

    #[test]
    fn normalization_certified_small() {
        let (checked, bad) = certify_normalization(3, 2).unwrap();
        assert!(checked > 0);
        assert!(bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn bijection_small() {
        let r = verify_bijection(2, 2).unwrap();
        assert!(r.holds(), "{:?}", r.mismatches);
        assert!(r.triples > 0 && r.triples == r.cycles);
    }
}
