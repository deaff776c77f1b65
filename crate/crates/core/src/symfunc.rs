//! Symmetric polynomials in the monomial basis.
//!
//! All expansions here are unitriangular in the bases involved, so integer
//! coefficients stay exact throughout.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{partitions_bounded, partitions_of, weak_compositions, Partition};
use crate::tableaux::{k_kostka_with_budget, kostka_with_budget, DEFAULT_BUDGET};

/// `Σ c_μ m_μ` with every `μ ⊢ degree`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonExpansion {
    degree: usize,
    coeffs: BTreeMap<Partition, i64>,
}

impl MonExpansion {
    pub fn zero(degree: usize) -> Self {
        MonExpansion { degree, coeffs: BTreeMap::new() }
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, i64)>) -> Result<Self> {
        let mut out = Self::zero(degree);
        for (mu, c) in terms {
            out.add_term(mu, c)?;
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, mu: &Partition) -> i64 {
        self.coeffs.get(mu).copied().unwrap_or(0)
    }

    /// Terms in decreasing lexicographic order of their keys.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.coeffs.iter().rev().map(|(k, &v)| (k, v))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The lexicographically largest key, which no other key dominates.
    pub fn leading_key(&self) -> Option<&Partition> {
        self.coeffs.keys().next_back()
    }

    pub fn add_term(&mut self, mu: Partition, c: i64) -> Result<()> {
        if mu.size() != self.degree {
            return Err(Error::NotHomogeneous);
        }
        if c == 0 {
            return Ok(());
        }
        let entry = self.coeffs.entry(mu).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.retain(|_, v| *v != 0);
        }
        Ok(())
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &MonExpansion, c: i64) -> Result<()> {
        if other.degree != self.degree && !other.is_zero() {
            return Err(Error::NotHomogeneous);
        }
        for (mu, v) in &other.coeffs {
            self.add_term(mu.clone(), c * v)?;
        }
        Ok(())
    }
}

fn write_signed_sum<'a>(
    f: &mut fmt::Formatter<'_>,
    prefix: &str,
    terms: impl Iterator<Item = (&'a Partition, i64)>,
) -> fmt::Result {
    let mut first = true;
    for (mu, c) in terms {
        let sign = if c < 0 { "-" } else { "+" };
        if first {
            if c < 0 {
                f.write_str("-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        if c.abs() != 1 {
            write!(f, "{}*", c.abs())?;
        }
        write!(f, "{prefix}{mu}")?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for MonExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_sum(f, "m", self.terms())
    }
}

impl Serialize for MonExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.coeffs.len() + 1))?;
        map.serialize_entry("degree", &self.degree)?;
        for (mu, c) in self.terms() {
            map.serialize_entry(&mu.to_string(), &c)?;
        }
        map.end()
    }
}

/// Target basis for [`decompose_in_basis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Schur,
    DualKSchur(usize),
}

impl Basis {
    pub fn element(self, mu: &Partition) -> Result<MonExpansion> {
        match self {
            Basis::Schur => schur_monomials(mu),
            Basis::DualKSchur(k) => dual_k_schur_monomials(mu, k),
        }
    }

    fn prefix(self) -> &'static str {
        match self {
            Basis::Schur => "s",
            Basis::DualKSchur(_) => "S",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Schur => f.write_str("schur"),
            Basis::DualKSchur(k) => write!(f, "dual_k_schur({k})"),
        }
    }
}

/// `f = Σ c_μ b_μ` in some basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisCoeffs {
    pub basis: Basis,
    pub degree: usize,
    pub coeffs: BTreeMap<Partition, i64>,
}

impl BasisCoeffs {
    pub fn coeff(&self, mu: &Partition) -> i64 {
        self.coeffs.get(mu).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.coeffs.iter().rev().map(|(k, &v)| (k, v))
    }
}

impl fmt::Display for BasisCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_sum(f, self.basis.prefix(), self.terms())
    }
}

impl Serialize for BasisCoeffs {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.coeffs.len() + 2))?;
        map.serialize_entry("basis", &self.basis.to_string())?;
        map.serialize_entry("degree", &self.degree)?;
        for (mu, c) in self.terms() {
            map.serialize_entry(&mu.to_string(), &c)?;
        }
        map.end()
    }
}

fn as_i64(n: u64) -> i64 {
    i64::try_from(n).expect("coefficient fits in i64")
}

/// `s_λ = Σ_μ K_{λ,μ} m_μ`.
pub fn schur_monomials(lambda: &Partition) -> Result<MonExpansion> {
    schur_monomials_with_budget(lambda, DEFAULT_BUDGET)
}

/// As [`schur_monomials`], with a node cap for each Kostka count.
pub fn schur_monomials_with_budget(lambda: &Partition, budget: u64) -> Result<MonExpansion> {
    let d = lambda.size();
    let mut out = MonExpansion::zero(d);
    for mu in partitions_of(d) {
        let c = kostka_with_budget(lambda, mu.parts(), budget)?;
        out.add_term(mu, as_i64(c))?;
    }
    Ok(out)
}

/// `𝔖^{(k)}_λ = Σ_μ K^{(k)}_{λ,μ} m_μ`.
pub fn dual_k_schur_monomials(lambda: &Partition, k: usize) -> Result<MonExpansion> {
    dual_k_schur_monomials_with_budget(lambda, k, DEFAULT_BUDGET)
}

/// As [`dual_k_schur_monomials`], with a node cap for each k-Kostka count.
pub fn dual_k_schur_monomials_with_budget(lambda: &Partition, k: usize, budget: u64) -> Result<MonExpansion> {
    if !lambda.is_k_bounded(k) {
        return Err(Error::NotKBounded(lambda.clone(), k));
    }
    let d = lambda.size();
    let mut out = MonExpansion::zero(d);
    for mu in partitions_of(d) {
        let c = k_kostka_with_budget(lambda, mu.parts(), k, budget)?;
        out.add_term(mu, as_i64(c))?;
    }
    Ok(out)
}

type Poly = HashMap<Vec<usize>, i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// `h_λ = h_{λ₁} h_{λ₂} ⋯`, multiplied out as exponent vectors in `|λ|`
/// variables and read back at the partition-shaped exponents.
pub fn complete_homogeneous_monomials(lambda: &Partition) -> Result<MonExpansion> {
    let d = lambda.size();
    let mut prod: Poly = [(vec![0; d], 1)].into_iter().collect();
    for &part in lambda.parts() {
        let h: Poly = weak_compositions(part, d).into_iter().map(|e| (e, 1)).collect();
        prod = poly_mul(&prod, &h);
    }
    let mut out = MonExpansion::zero(d);
    for mu in partitions_of(d) {
        let mut e = mu.parts().to_vec();
        e.resize(d, 0);
        out.add_term(mu, prod.get(&e).copied().unwrap_or(0))?;
    }
    Ok(out)
}

fn k_schur_memo() -> &'static Mutex<HashMap<(Partition, usize), MonExpansion>> {
    static MEMO: OnceLock<Mutex<HashMap<(Partition, usize), MonExpansion>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `s^{(k)}_λ`, from `h_λ = s^{(k)}_λ + Σ_{μ▷λ} K^{(k)}_{μ,λ} s^{(k)}_μ` over
/// k-bounded `μ`.
pub fn k_schur_monomials(lambda: &Partition, k: usize) -> Result<MonExpansion> {
    if !lambda.is_k_bounded(k) {
        return Err(Error::NotKBounded(lambda.clone(), k));
    }
    let key = (lambda.clone(), k);
    if let Some(v) = k_schur_memo().lock().expect("memo poisoned").get(&key) {
        return Ok(v.clone());
    }
    let mut out = complete_homogeneous_monomials(lambda)?;
    // μ ▷ λ implies μ is lexicographically larger, so these come first
    for mu in partitions_bounded(lambda.size(), k) {
        if &mu == lambda {
            break;
        }
        let c = k_kostka_with_budget(&mu, lambda.parts(), k, DEFAULT_BUDGET)?;
        if c != 0 {
            out.add_scaled(&k_schur_monomials(&mu, k)?, -as_i64(c))?;
        }
    }
    k_schur_memo().lock().expect("memo poisoned").insert(key, out.clone());
    Ok(out)
}

/// Peels off the dominance-maximal key (ties broken towards the
/// lexicographically largest) until nothing is left.
pub fn decompose_in_basis(f: &MonExpansion, basis: Basis) -> Result<BasisCoeffs> {
    let mut residual = f.clone();
    let mut coeffs = BTreeMap::new();
    while let Some(top) = residual.leading_key().cloned() {
        if let Basis::DualKSchur(k) = basis {
            if !top.is_k_bounded(k) {
                return Err(Error::NotInSpan(residual.to_string()));
            }
        }
        let c = residual.coeff(&top);
        let element = basis.element(&top)?;
        if element.coeff(&top) != 1 || element.leading_key() != Some(&top) {
            return Err(Error::NotInSpan(residual.to_string()));
        }
        residual.add_scaled(&element, -c)?;
        coeffs.insert(top, c);
    }
    Ok(BasisCoeffs { basis, degree: f.degree, coeffs })
}

/// Exponent vectors in `n` variables with nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Support {
    pub n: usize,
    pub points: BTreeSet<Vec<usize>>,
}

/// Every distinct rearrangement of `v`.
pub fn distinct_permutations(v: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // lexicographic successor until the sequence is decreasing
    loop {
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

/// `μ` padded with zeros to length `n`, or `None` if it is too long.
pub fn padded(mu: &Partition, n: usize) -> Option<Vec<usize>> {
    (mu.len() <= n).then(|| {
        let mut v = mu.parts().to_vec();
        v.resize(n, 0);
        v
    })
}

pub fn support(f: &MonExpansion, n: usize) -> Support {
    let points = f
        .coeffs
        .keys()
        .filter_map(|mu| padded(mu, n))
        .flat_map(|v| distinct_permutations(&v))
        .collect();
    Support { n, points }
}
