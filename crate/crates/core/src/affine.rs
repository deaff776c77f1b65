//! The affine symmetric group `S̃_{k+1}` in window notation, affine Stanley
//! symmetric polynomials, and cylindric skew Schur polynomials.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::cores::{apply_generator, core_of, Core, GeneratorMode};
use crate::error::{Error, Result};
use crate::partitions::{
    conjugate, dominates, parse_list, removable_corners, residue, sort_to_partition, Partition,
};
use crate::symfunc::{decompose_in_basis, distinct_permutations, Basis, BasisCoeffs, MonExpansion};

/// A bijection `w: ℤ → ℤ` with `w(i + N) = w(i) + N`, `N = k + 1`, stored as
/// `(w(1), …, w(N))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    k: usize,
    window: Vec<i64>,
}

impl AffinePermutation {
    pub fn new(k: usize, window: Vec<i64>) -> Result<Self> {
        let n = k as i64 + 1;
        if window.len() != k + 1 {
            return Err(Error::InvalidWindow(window, "window length must be k + 1"));
        }
        let residues: BTreeSet<i64> = window.iter().map(|v| v.rem_euclid(n)).collect();
        if residues.len() != window.len() {
            return Err(Error::InvalidWindow(window, "values must be distinct mod k + 1"));
        }
        if window.iter().sum::<i64>() != n * (n + 1) / 2 {
            return Err(Error::InvalidWindow(window, "window must sum to 1 + 2 + ... + (k + 1)"));
        }
        Ok(AffinePermutation { k, window })
    }

    pub fn identity(k: usize) -> Self {
        AffinePermutation { k, window: (1..=k as i64 + 1).collect() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    fn period(&self) -> i64 {
        self.k as i64 + 1
    }

    /// `w(i)` for any integer `i`.
    pub fn apply(&self, i: i64) -> i64 {
        let n = self.period();
        self.window[(i - 1).rem_euclid(n) as usize] + n * (i - 1).div_euclid(n)
    }

    fn check_generator(&self, i: usize) -> Result<()> {
        if i > self.k {
            return Err(Error::ResidueOutOfRange(i, self.k));
        }
        Ok(())
    }

    /// `w s_i`: swaps the values at positions `i` and `i + 1`.
    pub fn mul_generator(&self, i: usize) -> Result<Self> {
        self.check_generator(i)?;
        let n = self.period();
        let mut w = self.window.clone();
        if i == 0 {
            let last = w.len() - 1;
            let (first, end) = (w[0], w[last]);
            w[0] = end - n;
            w[last] = first + n;
        } else {
            w.swap(i - 1, i);
        }
        Ok(AffinePermutation { k: self.k, window: w })
    }

    /// `s_i w`: swaps the values congruent to `i` and `i + 1`.
    pub fn generator_mul(&self, i: usize) -> Result<Self> {
        self.check_generator(i)?;
        let n = self.period();
        let lo = i as i64;
        let window = self
            .window
            .iter()
            .map(|&v| {
                let r = v.rem_euclid(n);
                if r == lo {
                    v + 1
                } else if r == (lo + 1) % n {
                    v - 1
                } else {
                    v
                }
            })
            .collect();
        Ok(AffinePermutation { k: self.k, window })
    }

    pub fn inverse(&self) -> Self {
        let n = self.period();
        let mut inv = vec![0i64; self.window.len()];
        for (p, &v) in self.window.iter().enumerate() {
            let r = (v - 1).rem_euclid(n);
            let q = (v - 1).div_euclid(n);
            inv[r as usize] = p as i64 + 1 - q * n;
        }
        AffinePermutation { k: self.k, window: inv }
    }

    /// True when `w` permutes `{1, …, k+1}`, i.e. lies in the finite `S_{k+1}`.
    pub fn is_finite(&self) -> bool {
        let mut sorted = self.window.clone();
        sorted.sort_unstable();
        sorted == (1..=self.period()).collect::<Vec<_>>()
    }

    /// Right descents: `i` with `ℓ(w s_i) < ℓ(w)`, i.e. `w(i) > w(i+1)`.
    pub fn right_descents(&self) -> BTreeSet<usize> {
        (0..=self.k).filter(|&i| self.apply(i as i64) > self.apply(i as i64 + 1)).collect()
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `s_{i₁} ⋯ s_{iₗ}` for the word `(i₁, …, iₗ)`.
pub fn from_word(word: &[usize], k: usize) -> Result<AffinePermutation> {
    word.iter().try_fold(AffinePermutation::identity(k), |w, &i| w.mul_generator(i))
}

/// Parses a comma-separated word such as `2,1,0,2`.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    parse_list(s, "a residue")
}

/// `c_i = #{j > i : w(j) < w(i)}` for `i = 1, …, k+1`.
pub fn code(w: &AffinePermutation) -> Vec<usize> {
    let n = w.period();
    (1..=n)
        .map(|i| {
            let wi = w.apply(i);
            (1..=n)
                .map(|j| {
                    // j + tN > i and w(j) + tN < w(i)
                    let t_min = (i - j).div_euclid(n) + 1;
                    let t_max = -(-(wi - w.apply(j))).div_euclid(n) - 1;
                    (t_max - t_min + 1).max(0) as usize
                })
                .sum()
        })
        .collect()
}

pub fn length(w: &AffinePermutation) -> usize {
    code(w).iter().sum()
}

pub fn is_reduced(word: &[usize], k: usize) -> Result<bool> {
    Ok(length(&from_word(word, k)?) == word.len())
}

/// `μ(w)`: the conjugate of the sorted code of `w⁻¹`.
pub fn mu_of(w: &AffinePermutation) -> Partition {
    conjugate(&sort_to_partition(&code(&w.inverse())))
}

/// A cyclically decreasing element together with its word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdElement {
    pub residues: BTreeSet<usize>,
    pub word: Vec<usize>,
    pub element: AffinePermutation,
}

/// The cyclically decreasing element using each generator of the proper
/// subset `S` once: every maximal cyclic run `a, a+1, …, b` is written as
/// `s_b ⋯ s_{a+1} s_a`.
pub fn cyclically_decreasing(subset: &BTreeSet<usize>, k: usize) -> Result<CdElement> {
    let n = k + 1;
    if let Some(&bad) = subset.iter().find(|&&i| i > k) {
        return Err(Error::ResidueOutOfRange(bad, k));
    }
    let Some(gap) = (0..n).find(|i| !subset.contains(i)) else {
        return Err(Error::FullResidueSet(k));
    };
    let mut word = Vec::with_capacity(subset.len());
    let mut run = Vec::new();
    for step in 1..=n {
        let r = (gap + step) % n;
        if subset.contains(&r) {
            run.push(r);
        } else {
            word.extend(run.drain(..).rev());
        }
    }
    let element = from_word(&word, k)?;
    Ok(CdElement { residues: subset.clone(), word, element })
}

/// Every cyclically decreasing element of `S̃_{k+1}` of positive length.
fn cd_elements(k: usize) -> Vec<CdElement> {
    let n = k + 1;
    (1u32..(1u32 << n) - 1)
        .map(|mask| {
            let subset = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            cyclically_decreasing(&subset, k).expect("proper subset")
        })
        .collect()
}

struct StanleyCounter {
    cds: Vec<CdElement>,
    /// (v⁻¹w, ℓ(v)) for every cyclically decreasing left factor v of w
    children: HashMap<AffinePermutation, Vec<(AffinePermutation, usize)>>,
    memo: HashMap<(AffinePermutation, Vec<usize>), u64>,
}

impl StanleyCounter {
    fn children(&mut self, w: &AffinePermutation) -> Vec<(AffinePermutation, usize)> {
        if let Some(c) = self.children.get(w) {
            return c.clone();
        }
        let len = length(w);
        let mut out = Vec::new();
        for cd in &self.cds {
            let a = cd.word.len();
            if a > len {
                continue;
            }
            let rest = cd
                .word
                .iter()
                .try_fold(w.clone(), |u, &i| u.generator_mul(i))
                .expect("residues in range");
            if length(&rest) == len - a {
                out.push((rest, a));
            }
        }
        self.children.insert(w.clone(), out.clone());
        out
    }

    fn count(&mut self, w: &AffinePermutation, comp: &[usize]) -> u64 {
        let Some((&first, rest)) = comp.split_first() else {
            return u64::from(length(w) == 0);
        };
        let key = (w.clone(), comp.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let total = self
            .children(w)
            .into_iter()
            .filter(|&(_, a)| a == first)
            .map(|(u, _)| self.count(&u, rest))
            .sum();
        self.memo.insert(key, total);
        total
    }
}

fn positive_compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in positive_compositions(total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `F̃_w = Σ x^{a}` over cyclically decreasing factorizations
/// `w = w¹ ⋯ wʳ` with `ℓ(wⁱ) = aᵢ`, keyed by partition.
pub fn affine_stanley_monomials(w: &AffinePermutation) -> Result<MonExpansion> {
    let len = length(w);
    let mut counter =
        StanleyCounter { cds: cd_elements(w.k), children: HashMap::new(), memo: HashMap::new() };
    let mut by_shape: BTreeMap<Partition, u64> = BTreeMap::new();
    for comp in positive_compositions(len) {
        let c = counter.count(w, &comp);
        let shape = sort_to_partition(&comp);
        match by_shape.get(&shape) {
            Some(&prev) if prev != c => {
                return Err(Error::Symmetry(format!(
                    "composition {comp:?} has {c} factorizations but its rearrangements have {prev}"
                )));
            }
            _ => {
                by_shape.insert(shape, c);
            }
        }
    }
    MonExpansion::from_terms(len, by_shape.into_iter().map(|(mu, c)| (mu, c as i64)))
}

/// `F̃_w` in the dual k-Schur basis, checking positivity, that every key is
/// dominated by `μ(w)`, and that `μ(w)` itself has coefficient 1.
pub fn dual_k_schur_coeffs(w: &AffinePermutation) -> Result<BasisCoeffs> {
    let f = affine_stanley_monomials(w)?;
    let coeffs = decompose_in_basis(&f, Basis::DualKSchur(w.k))?;
    let top = mu_of(w);
    for (lam, c) in coeffs.terms() {
        if c < 0 {
            return Err(Error::Postcondition(format!("coefficient {c} at {lam} is negative")));
        }
        if !dominates(lam, &top)? {
            return Err(Error::Postcondition(format!("{lam} is not dominated by mu(w) = {top}")));
        }
    }
    if coeffs.coeff(&top) != 1 {
        return Err(Error::Postcondition(format!(
            "coefficient at mu(w) = {top} is {}",
            coeffs.coeff(&top)
        )));
    }
    Ok(coeffs)
}

/// Searches for `i < j < l` with `w(i) > w(j) > w(l)`. By periodicity `i`
/// can be taken in one window, and an inversion `w(i) > w(j)` forces
/// `j - i < 2 max|w(x) - x|`.
pub fn is_321_avoiding(w: &AffinePermutation) -> bool {
    let n = w.period();
    let spread = (1..=n).map(|x| (w.apply(x) - x).abs()).max().unwrap_or(0);
    let reach = 2 * spread + 1;
    for i in 1..=n {
        let wi = w.apply(i);
        for j in i + 1..=i + reach {
            let wj = w.apply(j);
            if wj >= wi {
                continue;
            }
            if (j + 1..=j + reach).any(|l| w.apply(l) < wj) {
                return false;
            }
        }
    }
    true
}

/// The affine Grassmannian element whose action on the empty core builds
/// `𝔠(λ)`: `w = s_{rₗ} ⋯ s_{r₁}` where adding all addable corners of residue
/// `r₁`, then `r₂`, … grows `∅` into `𝔠(λ)`. Returns `w` and its word.
pub fn grassmannian_of(lambda: &Partition, k: usize) -> Result<(AffinePermutation, Vec<usize>)> {
    let mut core = Core::new(core_of(lambda, k)?, k)?;
    let mut removed = Vec::new();
    while !core.shape().is_empty() {
        let c = *removable_corners(core.shape()).first().expect("nonempty core has a corner");
        let r = residue(c, k);
        core = apply_generator(&core, r, GeneratorMode::Remove)?;
        removed.push(r);
    }
    // removed lists residues from the outside in, which is w read left to right
    Ok((from_word(&removed, k)?, removed))
}

/// Every element of `S̃_{k+1}` of length at most `max_len` with one reduced
/// word for each, in breadth-first order.
pub fn elements_up_to_length(k: usize, max_len: usize) -> Vec<(AffinePermutation, Vec<usize>)> {
    let id = AffinePermutation::identity(k);
    let mut seen: HashSet<AffinePermutation> = HashSet::from([id.clone()]);
    let mut out = vec![(id.clone(), Vec::new())];
    let mut queue = VecDeque::from([(id, Vec::new())]);
    while let Some((w, word)) = queue.pop_front() {
        if word.len() == max_len {
            continue;
        }
        for i in 0..=k {
            let next = w.mul_generator(i).expect("in range");
            if length(&next) == word.len() + 1 && seen.insert(next.clone()) {
                let mut nw = word.clone();
                nw.push(i);
                out.push((next.clone(), nw.clone()));
                queue.push_back((next, nw));
            }
        }
    }
    out
}

/// One period `(λ₁ ≥ … ≥ λ_m)` of a cylindric lattice path; the full shape
/// continues with `λ_{i+m} = λ_i - (n - m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CylindricShape {
    n: usize,
    profile: Vec<i64>,
}

impl CylindricShape {
    pub fn new(n: usize, profile: Vec<i64>) -> Result<Self> {
        let m = profile.len();
        if m == 0 || m >= n {
            return Err(Error::InvalidCylindric(format!("need 1 <= m <= n - 1, got n = {n}, m = {m}")));
        }
        if profile.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidCylindric(format!("profile {profile:?} is not weakly decreasing")));
        }
        if profile[0] - profile[m - 1] > (n - m) as i64 {
            return Err(Error::InvalidCylindric(format!(
                "profile {profile:?} spans more than n - m = {} columns",
                n - m
            )));
        }
        Ok(CylindricShape { n, profile })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.profile.len()
    }

    pub fn profile(&self) -> &[i64] {
        &self.profile
    }

    fn shift(&self) -> i64 {
        (self.n - self.m()) as i64
    }

    /// `λ_i` for any integer row index `i`.
    pub fn row(&self, i: i64) -> i64 {
        let m = self.m() as i64;
        self.profile[(i - 1).rem_euclid(m) as usize] - self.shift() * (i - 1).div_euclid(m)
    }

    fn translate(&self, t: i64) -> Self {
        CylindricShape { n: self.n, profile: self.profile.iter().map(|v| v + t).collect() }
    }
}

impl fmt::Display for CylindricShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.profile.iter().map(i64::to_string).collect();
        write!(f, "{},{}:[{}]", self.n, self.m(), parts.join(","))
    }
}

impl FromStr for CylindricShape {
    type Err = Error;

    /// Parses `n,m:[λ1,...,λm]`.
    fn from_str(s: &str) -> Result<Self> {
        let (head, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse { pos: 0, msg: "expected n,m:[...]".into() })?;
        let nm: Vec<usize> = parse_list(head, "a positive integer")?;
        let [n, m] = nm[..] else {
            return Err(Error::Parse { pos: 0, msg: "expected exactly n,m before ':'".into() });
        };
        let profile: Vec<i64> = parse_list(body, "an integer").map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse { pos: pos + head.len() + 1, msg },
            other => other,
        })?;
        if profile.len() != m {
            return Err(Error::InvalidCylindric(format!("profile has {} parts, m = {m}", profile.len())));
        }
        CylindricShape::new(n, profile)
    }
}

/// Boxes per period of `outer / inner`, after checking `inner ⊆ outer`.
pub fn cylindric_box_count(outer: &CylindricShape, inner: &CylindricShape) -> Result<usize> {
    if outer.n != inner.n || outer.m() != inner.m() {
        return Err(Error::InvalidCylindric("shapes live on different cylinders".into()));
    }
    let mut total = 0;
    for (r, (o, i)) in outer.profile.iter().zip(&inner.profile).enumerate() {
        if i > o {
            return Err(Error::CylindricInclusion(r + 1));
        }
        total += (o - i) as usize;
    }
    Ok(total)
}

/// Translates the pair so that the last outer row ends at column 0.
pub fn canonical_pair(outer: &CylindricShape, inner: &CylindricShape) -> (CylindricShape, CylindricShape) {
    let t = -outer.profile[outer.m() - 1];
    (outer.translate(t), inner.translate(t))
}

/// Shapes `κ` with `cur ⊆ κ ⊆ outer` such that `κ / cur` has at most one box
/// in each column of the cylinder.
pub fn cylindric_strips(cur: &CylindricShape, outer: &CylindricShape) -> Vec<CylindricShape> {
    let m = cur.m();
    let shift = cur.shift();
    let mut out = Vec::new();
    let mut next = Vec::with_capacity(m);
    fn rec(
        r: usize,
        m: usize,
        shift: i64,
        cur: &CylindricShape,
        outer: &CylindricShape,
        next: &mut Vec<i64>,
        out: &mut Vec<CylindricShape>,
    ) {
        if r == m {
            // the copy of row 1 sitting above row m must stay on or below cur's row m
            if next[0] - shift <= cur.profile[m - 1] {
                out.push(CylindricShape { n: cur.n, profile: next.clone() });
            }
            return;
        }
        let lo = cur.profile[r];
        let hi = if r == 0 { outer.profile[0] } else { outer.profile[r].min(cur.profile[r - 1]) };
        for v in lo..=hi {
            next.push(v);
            rec(r + 1, m, shift, cur, outer, next, out);
            next.pop();
        }
    }
    rec(0, m, shift, cur, outer, &mut next, &mut out);
    out
}

/// Every chain `inner = κ⁰ ⊆ κ¹ ⊆ … ⊆ κᵈ = outer` of cylindric horizontal
/// strips, returned with its weight.
pub fn cylindric_tableaux(
    outer: &CylindricShape,
    inner: &CylindricShape,
    letters: usize,
) -> Result<Vec<(Vec<CylindricShape>, Vec<usize>)>> {
    cylindric_box_count(outer, inner)?;
    let mut out = Vec::new();
    let mut chain = vec![inner.clone()];
    fn rec(
        letters: usize,
        outer: &CylindricShape,
        chain: &mut Vec<CylindricShape>,
        out: &mut Vec<(Vec<CylindricShape>, Vec<usize>)>,
    ) {
        let cur = chain.last().expect("chain starts at inner").clone();
        if chain.len() == letters + 1 {
            if &cur == outer {
                let weight = chain
                    .windows(2)
                    .map(|p| cylindric_box_count(&p[1], &p[0]).expect("chain is increasing"))
                    .collect();
                out.push((chain.clone(), weight));
            }
            return;
        }
        for next in cylindric_strips(&cur, outer) {
            chain.push(next);
            rec(letters, outer, chain, out);
            chain.pop();
        }
    }
    rec(letters, outer, &mut chain, &mut out);
    Ok(out)
}

/// `s^c_{λ/μ}` in `d` variables, `d` being the number of boxes per period.
pub fn cylindric_skew_schur_monomials(outer: &CylindricShape, inner: &CylindricShape) -> Result<MonExpansion> {
    let d = cylindric_box_count(outer, inner)?;
    // memo[(level, κ)]: weight suffix -> number of chains from κ up to outer
    let mut memo: HashMap<(usize, CylindricShape), HashMap<Vec<usize>, u64>> = HashMap::new();
    let weights = chains_from(inner, outer, d, 0, &mut memo);
    let mut by_shape: BTreeMap<Partition, u64> = BTreeMap::new();
    for (weight, &c) in &weights {
        for other in distinct_permutations(weight) {
            let seen = weights.get(&other).copied().unwrap_or(0);
            if seen != c {
                return Err(Error::Symmetry(format!("weight {weight:?} counts {c} but {other:?} counts {seen}")));
            }
        }
        by_shape.insert(sort_to_partition(weight), c);
    }
    MonExpansion::from_terms(d, by_shape.into_iter().map(|(mu, c)| (mu, c as i64)))
}

fn chains_from(
    cur: &CylindricShape,
    outer: &CylindricShape,
    letters: usize,
    level: usize,
    memo: &mut HashMap<(usize, CylindricShape), HashMap<Vec<usize>, u64>>,
) -> HashMap<Vec<usize>, u64> {
    if level == letters {
        return if cur == outer { HashMap::from([(Vec::new(), 1)]) } else { HashMap::new() };
    }
    let key = (level, cur.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut out: HashMap<Vec<usize>, u64> = HashMap::new();
    for next in cylindric_strips(cur, outer) {
        let boxes = cylindric_box_count(&next, cur).expect("strip contains cur");
        for (suffix, c) in chains_from(&next, outer, letters, level + 1, memo) {
            let mut w = Vec::with_capacity(suffix.len() + 1);
            w.push(boxes);
            w.extend(suffix);
            *out.entry(w).or_insert(0) += c;
        }
    }
    memo.insert(key, out.clone());
    out
}

/// Canonical cylindric skew shapes `(outer, inner)` on the `n`-cylinder with
/// between 1 and `max_boxes` boxes per period, over all `1 <= m <= n - 1`.
pub fn canonical_cylindric_shapes(n: usize, max_boxes: usize) -> Vec<(CylindricShape, CylindricShape)> {
    let mut out = Vec::new();
    for m in 1..n {
        let span = (n - m) as i64;
        let mut outers = Vec::new();
        decreasing_rows(&mut vec![0; m], 0, span, &|_, _| (0, span), &mut outers);
        for outer in outers.into_iter().filter(|o| o[m - 1] == 0) {
            let mut inners = Vec::new();
            let reach = max_boxes as i64;
            decreasing_rows(&mut vec![0; m], 0, outer[0], &|r, _| (outer[r] - reach, outer[r]), &mut inners);
            let outer = CylindricShape::new(n, outer).expect("span checked");
            for inner in inners {
                let Ok(inner) = CylindricShape::new(n, inner) else { continue };
                if let Ok(b) = cylindric_box_count(&outer, &inner) {
                    if (1..=max_boxes).contains(&b) {
                        out.push((outer.clone(), inner));
                    }
                }
            }
        }
    }
    out
}

/// Weakly decreasing rows with `row[r]` drawn from `bounds(r, _)` and capped
/// by the previous row.
fn decreasing_rows(
    cur: &mut Vec<i64>,
    r: usize,
    cap: i64,
    bounds: &dyn Fn(usize, i64) -> (i64, i64),
    out: &mut Vec<Vec<i64>>,
) {
    if r == cur.len() {
        out.push(cur.clone());
        return;
    }
    let (lo, hi) = bounds(r, cap);
    for v in lo..=hi.min(cap) {
        cur[r] = v;
        decreasing_rows(cur, r + 1, v, bounds, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_bounded;
    use crate::symfunc::dual_k_schur_monomials;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_slice(parts)
    }

    fn cyl(n: usize, profile: &[i64]) -> CylindricShape {
        CylindricShape::new(n, profile.to_vec()).unwrap()
    }

    fn example_w() -> AffinePermutation {
        from_word(&[2, 1, 0, 2], 2).unwrap()
    }

    #[test]
    fn from_word_examples() {
        assert_eq!(from_word(&[], 2).unwrap().window(), &[1, 2, 3]);
        assert_eq!(from_word(&[0], 2).unwrap().window(), &[0, 2, 4]);
        assert_eq!(length(&example_w()), 4);
        assert!(from_word(&[3], 2).is_err());
    }

    #[test]
    fn left_and_right_generators_agree_on_identity() {
        for k in 1..4 {
            for i in 0..=k {
                let id = AffinePermutation::identity(k);
                assert_eq!(id.mul_generator(i).unwrap(), id.generator_mul(i).unwrap());
            }
        }
    }

    #[test]
    fn length_examples() {
        assert_eq!(length(&AffinePermutation::identity(3)), 0);
        assert!(is_reduced(&[2, 1, 0, 2], 2).unwrap());
        assert!(!is_reduced(&[0, 0], 2).unwrap());
        assert_eq!(code(&from_word(&[0], 2).unwrap()).iter().sum::<usize>(), 1);
        assert_eq!(code(&AffinePermutation::identity(2)), vec![0, 0, 0]);
    }

    #[test]
    fn window_validation() {
        assert!(AffinePermutation::new(2, vec![0, 2, 4]).is_ok());
        assert!(AffinePermutation::new(2, vec![1, 2, 6]).is_err());
        assert!(AffinePermutation::new(2, vec![1, 4, 1]).is_err());
        assert!(AffinePermutation::new(2, vec![1, 2]).is_err());
    }

    #[test]
    fn inverse_composes_to_identity() {
        for (w, word) in elements_up_to_length(2, 5) {
            let inv = w.inverse();
            let rev: Vec<usize> = word.iter().rev().copied().collect();
            assert_eq!(inv, from_word(&rev, 2).unwrap());
            for x in -6..6 {
                assert_eq!(inv.apply(w.apply(x)), x);
            }
        }
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu_of(&AffinePermutation::identity(2)), Partition::empty());
        assert_eq!(mu_of(&example_w()), p(&[2, 2]));
    }

    #[test]
    fn cyclically_decreasing_examples() {
        let set = |xs: &[usize]| xs.iter().copied().collect::<BTreeSet<usize>>();
        assert_eq!(cyclically_decreasing(&set(&[2, 1]), 2).unwrap().word, vec![2, 1]);
        assert_eq!(cyclically_decreasing(&set(&[0, 2]), 2).unwrap().word, vec![0, 2]);
        assert_eq!(cyclically_decreasing(&set(&[]), 2).unwrap().element, AffinePermutation::identity(2));
        assert_eq!(cyclically_decreasing(&set(&[0, 1, 2]), 2), Err(Error::FullResidueSet(2)));
        // the example factorization (s2 s1)(s0 s2) multiplies back to w
        let a = cyclically_decreasing(&set(&[1, 2]), 2).unwrap().word;
        let b = cyclically_decreasing(&set(&[0, 2]), 2).unwrap().word;
        assert_eq!(from_word(&[a, b].concat(), 2).unwrap(), example_w());
        for cd in cd_elements(3) {
            assert_eq!(length(&cd.element), cd.residues.len());
        }
    }

    #[test]
    fn affine_stanley_example() {
        let f = affine_stanley_monomials(&example_w()).unwrap();
        let expect =
            MonExpansion::from_terms(4, [(p(&[1, 1, 1, 1]), 1), (p(&[2, 1, 1]), 1), (p(&[2, 2]), 1)]).unwrap();
        assert_eq!(f, expect);
        let id = affine_stanley_monomials(&AffinePermutation::identity(2)).unwrap();
        assert_eq!(id, MonExpansion::from_terms(0, [(Partition::empty(), 1)]).unwrap());
        for i in 0..3 {
            let g = affine_stanley_monomials(&from_word(&[i], 2).unwrap()).unwrap();
            assert_eq!(g, MonExpansion::from_terms(1, [(p(&[1]), 1)]).unwrap());
        }
    }

    #[test]
    fn dual_k_schur_coefficients_of_example() {
        let c = dual_k_schur_coeffs(&example_w()).unwrap();
        assert_eq!(c.coeff(&p(&[2, 2])), 1);
        // 𝔖^{(2)}_{22} = m22 + m211 + m1111 already, so nothing else remains
        assert_eq!(c.coeffs.len(), 1);
        let id = dual_k_schur_coeffs(&AffinePermutation::identity(2)).unwrap();
        assert_eq!(id.coeffs, [(Partition::empty(), 1)].into_iter().collect());
    }

    #[test]
    fn grassmannian_elements_give_dual_k_schur() {
        for k in 1..=3 {
            for d in 1..=6 {
                for lam in partitions_bounded(d, k) {
                    let (w, word) = grassmannian_of(&lam, k).unwrap();
                    assert_eq!(length(&w), word.len(), "{lam} k={k}");
                    assert_eq!(w.right_descents(), BTreeSet::from([0]), "{lam} k={k}");
                    assert_eq!(mu_of(&w), lam, "{lam} k={k}");
                    assert_eq!(
                        affine_stanley_monomials(&w).unwrap(),
                        dual_k_schur_monomials(&lam, k).unwrap(),
                        "{lam} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn pattern_avoidance() {
        assert!(is_321_avoiding(&AffinePermutation::identity(2)));
        // s1 s2 s1 is the longest element of S_3: window (3,2,1)
        let longest = from_word(&[1, 2, 1], 2).unwrap();
        assert_eq!(longest.window(), &[3, 2, 1]);
        assert!(!is_321_avoiding(&longest));
        // s1 s0 s2 s1 = [5,0,1] avoids 321; the braid s0 s1 s0 = [1,0,5] has w(3) > w(4) > w(5)
        assert_eq!(from_word(&[1, 0, 2, 1], 2).unwrap().window(), &[5, 0, 1]);
        assert!(is_321_avoiding(&from_word(&[1, 0, 2, 1], 2).unwrap()));
        let braid = from_word(&[0, 1, 0], 2).unwrap();
        assert_eq!(braid.window(), &[1, 0, 5]);
        assert!(!is_321_avoiding(&braid));
        // unrolled, s2 s1 s0 s2 reads ..., -1, 6, 1, 2, 9, 4, 5, 12, ...
        assert_eq!(example_w().window(), &[-1, 6, 1]);
        assert!(is_321_avoiding(&example_w()));
    }

    #[test]
    fn pattern_search_matches_brute_force() {
        for (w, _) in elements_up_to_length(2, 6) {
            let mut found = false;
            for i in -12i64..12 {
                for j in i + 1..12 {
                    for l in j + 1..14 {
                        found |= w.apply(i) > w.apply(j) && w.apply(j) > w.apply(l);
                    }
                }
            }
            assert_eq!(is_321_avoiding(&w), !found, "{w}");
        }
    }

    #[test]
    fn cylindric_shape_parsing() {
        let s: CylindricShape = "5,2:[1,0]".parse().unwrap();
        assert_eq!(s, cyl(5, &[1, 0]));
        assert_eq!(s.to_string(), "5,2:[1,0]");
        assert_eq!(s.row(3), -2);
        assert!("5,2:[4,0]".parse::<CylindricShape>().is_err());
        assert!("5,5:[0,0,0,0,0]".parse::<CylindricShape>().is_err());
        assert!("5,2:[0,1]".parse::<CylindricShape>().is_err());
    }

    #[test]
    fn reference_cylindric_chain() {
        let outer = cyl(5, &[1, 0]);
        let inner = cyl(5, &[-2, -3]);
        assert_eq!(cylindric_box_count(&outer, &inner).unwrap(), 6);
        let expect = vec![
            inner.clone(),
            cyl(5, &[-1, -3]),
            cyl(5, &[0, -2]),
            cyl(5, &[0, -1]),
            outer.clone(),
        ];
        let chains = cylindric_tableaux(&outer, &inner, 4).unwrap();
        assert!(chains.contains(&(expect, vec![1, 2, 1, 2])));
        let f = cylindric_skew_schur_monomials(&outer, &inner).unwrap();
        assert!(f.coeff(&p(&[2, 2, 1, 1])) >= 1);
    }

    #[test]
    fn cylindric_weights_count_consecutive_columns() {
        // boxes of a strip in the rows 1..m period equal the boxes in any n - m
        // consecutive columns of the unrolled strip
        let (outer, inner) = (cyl(5, &[1, 0]), cyl(5, &[-2, -3]));
        for (chain, weight) in cylindric_tableaux(&outer, &inner, 6).unwrap() {
            for (step, pair) in chain.windows(2).enumerate() {
                for start in [0i64, 2] {
                    let cols = start + 1..=start + 3;
                    let boxes: i64 = (-8..8)
                        .map(|r| {
                            cols.clone()
                                .filter(|c| pair[0].row(r) < *c && *c <= pair[1].row(r))
                                .count() as i64
                        })
                        .sum();
                    assert_eq!(boxes as usize, weight[step]);
                }
            }
        }
    }

    #[test]
    fn cylindric_degenerate_cases() {
        let s = cyl(4, &[1, 0]);
        let f = cylindric_skew_schur_monomials(&s, &s).unwrap();
        assert_eq!(f, MonExpansion::from_terms(0, [(Partition::empty(), 1)]).unwrap());
        assert_eq!(
            cylindric_skew_schur_monomials(&cyl(4, &[0, 0]), &cyl(4, &[1, 0])),
            Err(Error::CylindricInclusion(1))
        );
    }

    /// Skew SSYT counts by filling cells one at a time.
    fn skew_schur_brute(outer: &[usize], inner: &[usize], d: usize) -> BTreeMap<Vec<usize>, u64> {
        let cells: Vec<(usize, usize)> = (0..outer.len())
            .flat_map(|r| (inner.get(r).copied().unwrap_or(0)..outer[r]).map(move |c| (r, c)))
            .collect();
        let mut filling: HashMap<(usize, usize), usize> = HashMap::new();
        let mut out = BTreeMap::new();
        fn go(
            idx: usize,
            cells: &[(usize, usize)],
            d: usize,
            filling: &mut HashMap<(usize, usize), usize>,
            out: &mut BTreeMap<Vec<usize>, u64>,
        ) {
            if idx == cells.len() {
                let mut w = vec![0; d];
                for v in filling.values() {
                    w[v - 1] += 1;
                }
                *out.entry(w).or_insert(0) += 1;
                return;
            }
            let (r, c) = cells[idx];
            for v in 1..=d {
                let left_ok = c == 0 || filling.get(&(r, c - 1)).is_none_or(|&x| x <= v);
                let below_ok = r == 0 || filling.get(&(r - 1, c)).is_none_or(|&x| x < v);
                if left_ok && below_ok {
                    filling.insert((r, c), v);
                    go(idx + 1, cells, d, filling, out);
                    filling.remove(&(r, c));
                }
            }
        }
        go(0, &cells, d, &mut filling, &mut out);
        out
    }

    #[test]
    fn non_wrapping_shapes_are_skew_schur() {
        let mut checked = 0;
        for n in 4..=5 {
            for (outer, inner) in canonical_cylindric_shapes(n, 5) {
                let m = outer.m() as i64;
                if outer.row(1) - outer.shift() > inner.row(m) {
                    continue;
                }
                let low = inner.profile().iter().copied().min().unwrap();
                let o: Vec<usize> = outer.profile().iter().map(|v| (v - low) as usize).collect();
                let i: Vec<usize> = inner.profile().iter().map(|v| (v - low) as usize).collect();
                let d = cylindric_box_count(&outer, &inner).unwrap();
                let brute = skew_schur_brute(&o, &i, d);
                let f = cylindric_skew_schur_monomials(&outer, &inner).unwrap();
                for (w, c) in brute {
                    assert_eq!(f.coeff(&sort_to_partition(&w)) as u64, c, "{outer} / {inner}");
                }
                checked += 1;
            }
        }
        assert!(checked > 20);
    }

    #[test]
    fn canonical_shapes_are_canonical() {
        let shapes = canonical_cylindric_shapes(4, 3);
        assert!(!shapes.is_empty());
        for (outer, inner) in &shapes {
            assert_eq!(outer.profile()[outer.m() - 1], 0);
            let b = cylindric_box_count(outer, inner).unwrap();
            assert!((1..=3).contains(&b));
            assert_eq!(canonical_pair(outer, inner), (outer.clone(), inner.clone()));
        }
        let fig = canonical_pair(&cyl(5, &[4, 3]), &cyl(5, &[1, 0]));
        assert_eq!(fig, (cyl(5, &[1, 0]), cyl(5, &[-2, -3])));
    }
}
