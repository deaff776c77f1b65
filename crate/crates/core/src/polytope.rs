//! Lattice points of `λ`-permutahedra, the exchange axiom, saturated Newton
//! polytopes and the Lorentzian test on normalized polynomials.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{dominates, sort_to_partition, weak_compositions, Partition};
use crate::symfunc::{distinct_permutations, padded, support, MonExpansion};

pub type Point = Vec<usize>;

/// Compositions of `|λ|` into `n` parts whose sorted form is dominated by
/// `λ`.
fn dominance_filtered(lambda: &Partition, n: usize) -> BTreeSet<Point> {
    weak_compositions(lambda.size(), n)
        .into_iter()
        .filter(|a| dominates(&sort_to_partition(a), lambda).unwrap_or(false))
        .collect()
}

/// Lattice points of `𝒫_λ` in `ℤⁿ`, by Rado's theorem.
pub fn permutahedron_points(lambda: &Partition, n: usize) -> Result<BTreeSet<Point>> {
    if n < lambda.len() {
        return Err(Error::TooFewVariables { needed: lambda.len(), got: n });
    }
    Ok(dominance_filtered(lambda, n))
}

/// A failure of the exchange axiom: `α_i > β_i`, yet no `j` with
/// `α_j < β_j` keeps `α - e_i + e_j` inside the set. `i` is 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeWitness {
    pub alpha: Point,
    pub beta: Point,
    pub i: usize,
}

/// Checks the exchange axiom on every pair. The reported violation is the
/// first one met with `α` and then `β` running through the set in decreasing
/// lexicographic order and `i` increasing.
pub fn is_m_convex(points: &BTreeSet<Point>) -> Option<ExchangeWitness> {
    exchange_violation(points)
}

/// As [`is_m_convex`], refusing sets with more than `budget` pairs.
pub fn is_m_convex_with_budget(points: &BTreeSet<Point>, budget: u64) -> Result<Option<ExchangeWitness>> {
    let pairs = (points.len() as u64).saturating_mul(points.len() as u64);
    if pairs > budget {
        return Err(Error::Budget(budget));
    }
    Ok(exchange_violation(points))
}

fn exchange_violation(points: &BTreeSet<Point>) -> Option<ExchangeWitness> {
    let pts: Vec<&Point> = points.iter().rev().collect();
    let n = pts.first()?.len();
    assert!(n <= 64, "exchange check supports at most 64 coordinates");
    // moves[a][i]: bitmask of j such that α - e_i + e_j stays in the set
    let moves: Vec<Vec<u64>> = pts
        .iter()
        .map(|alpha| {
            let mut step = (*alpha).clone();
            (0..n)
                .map(|i| {
                    let mut mask = 0u64;
                    if alpha[i] == 0 {
                        return mask;
                    }
                    step[i] -= 1;
                    for j in 0..n {
                        if j == i {
                            continue;
                        }
                        step[j] += 1;
                        if points.contains(&step) {
                            mask |= 1 << j;
                        }
                        step[j] -= 1;
                    }
                    step[i] += 1;
                    mask
                })
                .collect()
        })
        .collect();
    for (a, alpha) in pts.iter().enumerate() {
        for beta in &pts {
            let mut below = 0u64;
            for j in 0..n {
                if alpha[j] < beta[j] {
                    below |= 1 << j;
                }
            }
            for i in 0..n {
                if alpha[i] > beta[i] && moves[a][i] & below == 0 {
                    return Some(ExchangeWitness { alpha: (*alpha).clone(), beta: (*beta).clone(), i: i + 1 });
                }
            }
        }
    }
    None
}

/// The `⊴`-maximum key of `f`, if every other key is dominated by it.
pub fn dominant_key(f: &MonExpansion) -> Result<Partition> {
    let top = f.leading_key().ok_or(Error::NotHomogeneous)?.clone();
    for (mu, _) in f.terms() {
        if !dominates(mu, &top)? {
            return Err(Error::NoDominantKey(top, mu.clone()));
        }
    }
    Ok(top)
}

/// SNP test for a symmetric polynomial with a dominant term `λ★`: its
/// Newton polytope is then `𝒫_{λ★}`, so saturation means the support is
/// every lattice point of it.
pub fn is_snp_symmetric(f: &MonExpansion, n: usize) -> Result<bool> {
    let top = dominant_key(f)?;
    Ok(support(f, n).points == dominance_filtered(&top, n))
}

/// `N(f)`: each coefficient divided by the factorials of its exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedPoly {
    pub n: usize,
    pub degree: usize,
    pub terms: BTreeMap<Point, BigRational>,
}

fn factorial(m: usize) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, x| acc * BigInt::from(x))
}

pub fn normalize(f: &MonExpansion, n: usize) -> NormalizedPoly {
    let mut terms = BTreeMap::new();
    for (mu, c) in f.terms() {
        let Some(v) = padded(mu, n) else { continue };
        for alpha in distinct_permutations(&v) {
            let denom: BigInt = alpha.iter().map(|&a| factorial(a)).product();
            terms.insert(alpha, BigRational::new(BigInt::from(c), denom));
        }
    }
    NormalizedPoly { n, degree: f.degree(), terms }
}

/// Why a polynomial fails the Lorentzian test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LorentzianWitness {
    NegativeCoefficient { exponent: Point },
    NotMConvex(ExchangeWitness),
    /// `derivative[i]` is how often `∂_{i+1}` was applied.
    Hessian { derivative: Point, positive_eigenvalues: usize },
}

/// Number of positive eigenvalues of a symmetric rational matrix.
pub fn positive_eigenvalues(h: &[Vec<BigRational>]) -> usize {
    let charpoly = characteristic_polynomial(h);
    // all roots are real: drop the zero roots, then count sign changes
    let mut coeffs: Vec<&BigRational> = charpoly.iter().collect();
    while coeffs.last().is_some_and(|c| c.is_zero()) && coeffs.len() > 1 {
        coeffs.pop();
    }
    let signs: Vec<bool> = coeffs.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Coefficients of `det(tI - H)`, highest degree first (Faddeev–LeVerrier).
pub fn characteristic_polynomial(h: &[Vec<BigRational>]) -> Vec<BigRational> {
    let n = h.len();
    let identity = |scale: &BigRational| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { scale.clone() } else { BigRational::zero() }).collect())
            .collect()
    };
    let matmul = |a: &[Vec<BigRational>], b: &[Vec<BigRational>]| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(BigRational::zero(), |acc, l| acc + &a[i][l] * &b[l][j]))
                    .collect()
            })
            .collect()
    };
    let mut coeffs = vec![BigRational::one()];
    let mut m = identity(&BigRational::zero());
    for step in 1..=n {
        // M_step = H M_{step-1} + c_{step-1} I
        let prev = coeffs.last().expect("nonempty").clone();
        let mut next = matmul(h, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &prev;
        }
        m = next;
        let hm = matmul(h, &m);
        let trace = (0..n).fold(BigRational::zero(), |acc, i| acc + &hm[i][i]);
        coeffs.push(-trace / BigRational::from_integer(BigInt::from(step)));
    }
    coeffs
}

fn hessian_after(g: &NormalizedPoly, gamma: &[usize]) -> Vec<Vec<BigRational>> {
    let n = g.n;
    let mut h = vec![vec![BigRational::zero(); n]; n];
    for a in 0..n {
        for b in a..n {
            let mut alpha = gamma.to_vec();
            alpha[a] += 1;
            alpha[b] += 1;
            if let Some(c) = g.terms.get(&alpha) {
                let scale: BigInt = alpha.iter().map(|&e| factorial(e)).product();
                let v = c * BigRational::from_integer(scale);
                h[a][b] = v.clone();
                h[b][a] = v;
            }
        }
    }
    h
}

/// Nonnegativity, M-convex support, and at most one positive eigenvalue in
/// the Hessian of every `(d-2)`-fold derivative. `None` means it passes.
pub fn lorentzian_check(g: &NormalizedPoly) -> Option<LorentzianWitness> {
    if let Some((alpha, _)) = g.terms.iter().find(|(_, c)| c.is_negative()) {
        return Some(LorentzianWitness::NegativeCoefficient { exponent: alpha.clone() });
    }
    let supp: BTreeSet<Point> = g.terms.iter().filter(|(_, c)| !c.is_zero()).map(|(a, _)| a.clone()).collect();
    if let Some(w) = is_m_convex(&supp) {
        return Some(LorentzianWitness::NotMConvex(w));
    }
    if g.degree < 2 {
        return None;
    }
    let mut gammas = weak_compositions(g.degree - 2, g.n);
    gammas.sort();
    for gamma in gammas {
        let h = hessian_after(g, &gamma);
        if h.iter().flatten().all(Zero::is_zero) {
            continue;
        }
        let positive = positive_eigenvalues(&h);
        if positive > 1 {
            return Some(LorentzianWitness::Hessian { derivative: gamma, positive_eigenvalues: positive });
        }
    }
    None
}

/// `𝒫_μ ⊆ 𝒫_λ`, decided by dominance.
pub fn rado_containment(mu: &Partition, lambda: &Partition, n: usize) -> Result<bool> {
    let needed = mu.len().max(lambda.len());
    if n < needed {
        return Err(Error::TooFewVariables { needed, got: n });
    }
    dominates(mu, lambda)
}
