//! Exhaustive property checks shared by the per-module suites and the
//! acceptance target. Each returns `Err` with a readable counterexample.
#![allow(dead_code)]

use std::collections::BTreeSet;

use kschur::affine::{
    affine_stanley_monomials, canonical_cylindric_shapes, code, cylindric_skew_schur_monomials, dual_k_schur_coeffs,
    elements_up_to_length, from_word, is_reduced, length, mu_of,
};
use kschur::cores::{
    apply_generator, bounded_to_core, core_of, core_to_bounded, cores_up_to, row_residue_sets, GeneratorMode,
};
use kschur::partitions::{corners, dominates, h_between, hook_length, partitions_bounded, partitions_of, residue};
use kschur::polytope::{
    dominant_key, is_m_convex, is_snp_symmetric, lorentzian_check, normalize, permutahedron_points, ExchangeWitness,
    LorentzianWitness,
};
use kschur::symfunc::{
    complete_homogeneous_monomials, decompose_in_basis, distinct_permutations, dual_k_schur_monomials,
    k_schur_monomials, schur_monomials, support, Basis, MonExpansion,
};
use kschur::tableaux::{
    build_kssyt_traced, enumerate_kssyts, k_kostka, kostka, letters_form_horizontal_strips, validate_kssyt,
    DEFAULT_BUDGET,
};
use kschur::{Cell, Partition};

pub type Check = Result<(), String>;

pub fn p(parts: &[usize]) -> Partition {
    Partition::from_slice(parts)
}

/// All k-bounded partitions of size 1..=max.
pub fn bounded_up_to(max: usize, k: usize) -> Vec<Partition> {
    (1..=max).flat_map(|d| partitions_bounded(d, k)).collect()
}

pub fn rado_equivalence(max_d: usize) -> Check {
    for d in 1..=max_d {
        let parts = partitions_of(d);
        for n in 1..=d {
            let fits: Vec<&Partition> = parts.iter().filter(|q| q.len() <= n).collect();
            let points: Vec<BTreeSet<Vec<usize>>> =
                fits.iter().map(|q| permutahedron_points(q, n).unwrap()).collect();
            for (i, mu) in fits.iter().enumerate() {
                for (j, lambda) in fits.iter().enumerate() {
                    let dom = dominates(mu, lambda).unwrap();
                    if dom != points[i].is_subset(&points[j]) {
                        return Err(format!("rado: mu={mu} lambda={lambda} n={n} dominance={dom}"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// For top cells `c'` weakly northwest of `c` in a core, equal residues
/// happen exactly when `h(c', c) ≡ 1 (mod k+1)`. Returns the number of pairs
/// checked.
pub fn same_residue(max_size: usize, max_k: usize) -> Result<usize, String> {
    let mut pairs = 0;
    for k in 1..=max_k {
        for core in cores_up_to(max_size, k) {
            let gamma = core.shape();
            let tops = corners(gamma).top_cells;
            for &a in &tops {
                for &b in &tops {
                    if a == b || b.row > a.row || b.col < a.col {
                        continue;
                    }
                    let h = h_between(gamma, a, b).unwrap();
                    let same = residue(a, k) == residue(b, k);
                    if same != (h % (k + 1) == 1 % (k + 1)) {
                        return Err(format!("same residue: core {gamma} k={k} cells {a} {b} h={h}"));
                    }
                    pairs += 1;
                }
            }
        }
    }
    Ok(pairs)
}

/// Residue classes of top cells are `h ≡ 1 (mod k+1)`, not multiples of
/// `k+2`: in the 2-core `(4,3,2,1)` the top cells `(3,2)` and `(1,4)` share
/// a residue with `h = 5`. Returns `(h, same residue)` for that pair.
pub fn literal_same_residue_counterexample() -> (usize, bool) {
    let gamma = p(&[4, 3, 2, 1]);
    let (a, b) = (Cell::new(3, 2), Cell::new(1, 4));
    (h_between(&gamma, a, b).unwrap(), residue(a, 1) == residue(b, 1))
}

/// A same-residue pair with `h > k+2` always has an intermediate top cell
/// `c''` northwest of `c` with `h(c'', c) = k+2`.
pub fn same_residue_step(max_size: usize, max_k: usize) -> Check {
    for k in 1..=max_k {
        for core in cores_up_to(max_size, k) {
            let gamma = core.shape();
            let tops = corners(gamma).top_cells;
            let nw = |a: Cell, b: Cell| a != b && b.row <= a.row && b.col >= a.col;
            for &a in &tops {
                for &b in &tops {
                    if !nw(a, b) || residue(a, k) != residue(b, k) || h_between(gamma, a, b).unwrap() <= k + 2 {
                        continue;
                    }
                    let found = tops.iter().any(|&c| nw(c, b) && h_between(gamma, c, b).unwrap() == k + 2);
                    if !found {
                        return Err(format!("same residue step: core {gamma} k={k} cells {a} {b}"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// In `𝔠((1,1))` with `k = 1` the cell of `ρ` under the slid top row has
/// hook exactly `k+2`, so the bound is `≥ k+2`. Returns that hook.
pub fn literal_gamma_rho_counterexample() -> usize {
    let cc = bounded_to_core(&p(&[1, 1]), 1).unwrap();
    hook_length(cc.core.shape(), Cell::new(1, 1)).unwrap()
}

pub fn gamma_rho(max_size: usize, max_k: usize) -> Check {
    for k in 1..=max_k {
        for lambda in bounded_up_to(max_size, k) {
            let cc = bounded_to_core(&lambda, k).unwrap();
            let gamma = cc.core.shape();
            for i in 1..=lambda.len() {
                let shift = cc.shifts[i - 1];
                for j in shift + 1..=gamma.row(i) {
                    // hooks inside the skew γ/ρ
                    let c = Cell::new(i, j);
                    let arm = gamma.row(i) - j;
                    let leg = (i + 1..=gamma.len()).filter(|&r| cc.shifts[r - 1] < j && j <= gamma.row(r)).count();
                    if arm + leg + 1 > k {
                        return Err(format!("gamma/rho: {lambda} k={k} skew cell {c} hook {}", arm + leg + 1));
                    }
                    // cells of ρ below the slid row, in its columns
                    for r in 1..i {
                        let below = Cell::new(r, j);
                        if j <= cc.shifts[r - 1] {
                            let hl = hook_length(gamma, below).unwrap();
                            if hl < k + 2 {
                                return Err(format!("gamma/rho: {lambda} k={k} cell {below} under row {i} hook {hl}"));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn generator_removes_highest_row(max_size: usize, max_k: usize) -> Check {
    for k in 1..=max_k {
        for lambda in bounded_up_to(max_size, k) {
            let cc = bounded_to_core(&lambda, k).unwrap();
            let gamma = cc.core.shape();
            for i in 0..=k {
                let rows: Vec<usize> =
                    corners(gamma).removable.iter().filter(|c| residue(**c, k) == i).map(|c| c.row).collect();
                let Some(&r) = rows.iter().max() else { continue };
                let removed = apply_generator(&cc.core, i, GeneratorMode::Remove).unwrap();
                let smaller = lambda.decrement_row(r).ok_or_else(|| format!("{lambda}: row {r} not removable"))?;
                let expected = core_of(&smaller, k).unwrap();
                if removed.shape() != &expected {
                    return Err(format!(
                        "s_{i} on core({lambda}), k={k}: got {} expected core({smaller}) = {expected}",
                        removed.shape()
                    ));
                }
            }
        }
    }
    Ok(())
}

pub fn residue_counts(max_size: usize, max_k: usize) -> Check {
    for k in 1..=max_k {
        for lambda in bounded_up_to(max_size, k) {
            let cc = bounded_to_core(&lambda, k).unwrap();
            let sets = row_residue_sets(&cc);
            for i in 1..=lambda.len() {
                let union: BTreeSet<usize> = sets[i - 1..].iter().flatten().copied().collect();
                if union.len() != lambda.row(i) {
                    return Err(format!("residue count: {lambda} k={k} row {i}: {} residues", union.len()));
                }
            }
        }
    }
    Ok(())
}

pub fn bijection_round_trip(max_size: usize, max_k: usize) -> Check {
    for k in 1..=max_k {
        for lambda in bounded_up_to(max_size, k) {
            let cc = bounded_to_core(&lambda, k).unwrap();
            let back = core_to_bounded(&cc.core);
            if back != lambda {
                return Err(format!("round trip: {lambda} k={k} came back as {back}"));
            }
        }
        for core in cores_up_to(max_size, k) {
            let lambda = core_to_bounded(&core);
            let again = core_of(&lambda, k).unwrap();
            if &again != core.shape() {
                return Err(format!("round trip: core {} k={k} came back as {again}", core.shape()));
            }
        }
    }
    Ok(())
}

pub fn generator_closure(max_size: usize, max_k: usize) -> Check {
    for k in 1..=max_k {
        for core in cores_up_to(max_size, k) {
            for i in 0..=k {
                for mode in [GeneratorMode::Remove, GeneratorMode::Add] {
                    // Core::new inside apply_generator re-validates the result
                    if let Err(e) = apply_generator(&core, i, mode) {
                        return Err(format!("s_{i} ({mode:?}) on {} k={k}: {e}", core.shape()));
                    }
                }
            }
        }
    }
    Ok(())
}

/// `{(2,0),(0,2)}` directly, and the same support reached through the
/// Lorentzian test of `N(m_2)`.
pub fn exchange_fixtures() -> Check {
    let set: BTreeSet<Vec<usize>> = [vec![2, 0], vec![0, 2]].into_iter().collect();
    let expected = ExchangeWitness { alpha: vec![2, 0], beta: vec![0, 2], i: 1 };
    match is_m_convex(&set) {
        Some(w) if w == expected => {}
        other => return Err(format!("exchange fixture 1: {other:?}")),
    }
    let set: BTreeSet<Vec<usize>> = [vec![2, 0, 0], vec![0, 1, 1]].into_iter().collect();
    match is_m_convex(&set) {
        Some(w) if w == (ExchangeWitness { alpha: vec![2, 0, 0], beta: vec![0, 1, 1], i: 1 }) => {}
        other => return Err(format!("exchange fixture 2: {other:?}")),
    }
    let m2 = MonExpansion::from_terms(2, [(p(&[2]), 1)]).unwrap();
    match lorentzian_check(&normalize(&m2, 2)) {
        Some(LorentzianWitness::NotMConvex(w)) if w == expected => Ok(()),
        other => Err(format!("N(m_2) witness: {other:?}")),
    }
}

/// k-Kostka vanishing versus dominance, plus the constructed tableau being a
/// member of the enumeration, for every k-bounded `λ ⊢ d ≤ max_d`. Returns
/// the number of tableaux constructed.
pub fn kostka_iff_dominance(ks: &[usize], max_d: usize) -> Result<usize, String> {
    let mut built = 0;
    for &k in ks {
        for lambda in bounded_up_to(max_d, k) {
            for mu in partitions_of(lambda.size()) {
                let count = k_kostka(&lambda, mu.parts(), k).map_err(|e| e.to_string())?;
                let dom = dominates(&mu, &lambda).unwrap();
                if (count != 0) != dom {
                    return Err(format!("k-Kostka: lambda={lambda} mu={mu} k={k} count={count} dominated={dom}"));
                }
                if !dom {
                    continue;
                }
                let trace = build_kssyt_traced(&lambda, &mu, k).map_err(|e| format!("{lambda} {mu} k={k}: {e}"))?;
                let t = &trace.result.tableau;
                if validate_kssyt(t, k).as_deref() != Ok(mu.parts()) {
                    return Err(format!("build {lambda} {mu} k={k}: {t} does not validate with weight {mu}"));
                }
                if !letters_form_horizontal_strips(t) {
                    return Err(format!("build {lambda} {mu} k={k}: letters are not horizontal strips"));
                }
                for (i, fill) in trace.fills.iter().enumerate() {
                    let letter = mu.len() - i;
                    let empty: BTreeSet<Cell> =
                        fill.state.core_shape.cells().filter(|&c| fill.state.get(c).is_none()).collect();
                    let expect: BTreeSet<Cell> = core_of(&trace.chain[letter - 1], k).unwrap().cells().collect();
                    if empty != expect {
                        return Err(format!("build {lambda} {mu} k={k}: letter {letter} leaves the wrong region"));
                    }
                }
                let all = enumerate_kssyts(&lambda, mu.parts(), k, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
                if all.len() as u64 != count || !all.contains(&trace.result) {
                    return Err(format!("build {lambda} {mu} k={k}: not among the {} enumerated", all.len()));
                }
                built += 1;
            }
        }
    }
    Ok(built)
}

pub fn weight_permutation_symmetry(ks: &[usize], max_d: usize) -> Check {
    for &k in ks {
        for lambda in bounded_up_to(max_d, k) {
            for mu in partitions_of(lambda.size()) {
                let base = k_kostka(&lambda, mu.parts(), k).unwrap();
                for alpha in distinct_permutations(mu.parts()) {
                    let c = k_kostka(&lambda, &alpha, k).unwrap();
                    if c != base {
                        return Err(format!("k-Kostka({lambda}, {alpha:?}, {k}) = {c} but {base} for {mu}"));
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn large_k_degeneration(max_d: usize) -> Check {
    for d in 1..=max_d {
        for lambda in partitions_of(d) {
            for k in [d, d + 1] {
                if core_of(&lambda, k).unwrap() != lambda {
                    return Err(format!("core of {lambda} for k={k} is not itself"));
                }
                if dual_k_schur_monomials(&lambda, k).unwrap() != schur_monomials(&lambda).unwrap() {
                    return Err(format!("dual k-Schur {lambda} k={k} differs from Schur"));
                }
                for mu in partitions_of(d) {
                    let (a, b) = (k_kostka(&lambda, mu.parts(), k).unwrap(), kostka(&lambda, mu.parts()).unwrap());
                    if a != b {
                        return Err(format!("k-Kostka {a} vs Kostka {b} at {lambda}, {mu}, k={k}"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Support equality with the permutahedron, saturation and the exchange
/// axiom for dual k-Schur and Schur polynomials, `n ∈ {ℓ(λ), …, d}`.
pub fn support_equality(ks: &[usize], max_d: usize) -> Result<usize, String> {
    let mut instances = 0;
    for &k in ks {
        for lambda in bounded_up_to(max_d, k) {
            let dual = dual_k_schur_monomials(&lambda, k).unwrap();
            let schur = schur_monomials(&lambda).unwrap();
            for n in lambda.len()..=lambda.size() {
                let a = support(&dual, n).points;
                let b = support(&schur, n).points;
                let poly = permutahedron_points(&lambda, n).unwrap();
                if a != b || b != poly {
                    return Err(format!("support: lambda={lambda} k={k} n={n}"));
                }
                if !is_snp_symmetric(&dual, n).unwrap() {
                    return Err(format!("saturation: lambda={lambda} k={k} n={n}"));
                }
                if let Some(w) = is_m_convex(&a) {
                    return Err(format!("exchange: lambda={lambda} k={k} n={n}: {w:?}"));
                }
                instances += 1;
            }
        }
    }
    Ok(instances)
}

pub fn dual_k_schur_triangular(ks: &[usize], max_d: usize) -> Check {
    for &k in ks {
        for lambda in bounded_up_to(max_d, k) {
            let f = dual_k_schur_monomials(&lambda, k).unwrap();
            if f.coeff(&lambda) != 1 {
                return Err(format!("dual k-Schur {lambda} k={k}: leading coefficient {}", f.coeff(&lambda)));
            }
            for (mu, _) in f.terms() {
                if mu != &lambda && !dominates(mu, &lambda).unwrap() {
                    return Err(format!("dual k-Schur {lambda} k={k}: key {mu} not dominated"));
                }
            }
            let back = decompose_in_basis(&f, Basis::DualKSchur(k)).unwrap();
            if back.terms().collect::<Vec<_>>() != vec![(&lambda, 1)] {
                return Err(format!("dual k-Schur {lambda} k={k}: round trip gave {back}"));
            }
            let s = decompose_in_basis(&schur_monomials(&lambda).unwrap(), Basis::Schur).unwrap();
            if s.terms().collect::<Vec<_>>() != vec![(&lambda, 1)] {
                return Err(format!("Schur {lambda}: round trip gave {s}"));
            }
        }
    }
    Ok(())
}

pub fn k_schur_schur_positive(ks: &[usize], max_d: usize) -> Check {
    for &k in ks {
        for lambda in bounded_up_to(max_d, k) {
            let s = decompose_in_basis(&k_schur_monomials(&lambda, k).unwrap(), Basis::Schur).unwrap();
            if let Some((mu, c)) = s.terms().find(|&(_, c)| c < 0) {
                return Err(format!("k-Schur {lambda} k={k}: coefficient {c} at s{mu}"));
            }
            if s.coeff(&lambda) != 1 {
                return Err(format!("k-Schur {lambda} k={k}: s{lambda} has coefficient {}", s.coeff(&lambda)));
            }
        }
    }
    Ok(())
}

/// `h_λ = Σ_μ K^{(k)}_{μ,λ} s^{(k)}_μ` recombined from the solved k-Schur
/// expansions.
pub fn h_system(ks: &[usize], max_d: usize) -> Check {
    for &k in ks {
        for lambda in bounded_up_to(max_d, k) {
            let mut total = MonExpansion::zero(lambda.size());
            for mu in partitions_bounded(lambda.size(), k) {
                let c = k_kostka(&mu, lambda.parts(), k).unwrap() as i64;
                if c != 0 {
                    total.add_scaled(&k_schur_monomials(&mu, k).unwrap(), c).unwrap();
                }
            }
            if total != complete_homogeneous_monomials(&lambda).unwrap() {
                return Err(format!("h-system: lambda={lambda} k={k} recombines to {total}"));
            }
        }
    }
    Ok(())
}

pub fn code_length(max_k: usize, max_len: usize) -> Check {
    for k in 1..=max_k {
        for (w, word) in elements_up_to_length(k, max_len) {
            let l = word.len();
            let (a, b): (usize, usize) = (code(&w).iter().sum(), code(&w.inverse()).iter().sum());
            if length(&w) != l || a != l || b != l || !is_reduced(&word, k).unwrap() {
                return Err(format!("length: {w} (word {word:?}) code sums {a} and {b}"));
            }
            if from_word(&word, k).unwrap() != w {
                return Err(format!("word {word:?} does not rebuild {w}"));
            }
        }
    }
    Ok(())
}

/// Dual k-Schur positivity, support below `μ(w)` with unit top
/// coefficient, and an M-convex saturated support in `ℓ(w)` variables.
/// Returns the number of elements checked.
pub fn affine_stanley_sweep(k: usize, max_len: usize) -> Result<usize, String> {
    let mut count = 0;
    for (w, word) in elements_up_to_length(k, max_len) {
        if word.is_empty() {
            continue;
        }
        let top = mu_of(&w);
        let f = affine_stanley_monomials(&w).map_err(|e| format!("{w}: {e}"))?;
        let coeffs = dual_k_schur_coeffs(&w).map_err(|e| format!("{w}: {e}"))?;
        for (mu, c) in coeffs.terms() {
            if c < 0 || !dominates(mu, &top).unwrap() {
                return Err(format!("{w}: coefficient {c} at {mu}, mu(w) = {top}"));
            }
        }
        if coeffs.coeff(&top) != 1 {
            return Err(format!("{w}: coefficient {} at mu(w) = {top}", coeffs.coeff(&top)));
        }
        let n = word.len();
        if dominant_key(&f).ok().as_ref() != Some(&top) || !is_snp_symmetric(&f, n).unwrap() {
            return Err(format!("{w}: support is not the permutahedron of {top}"));
        }
        if let Some(x) = is_m_convex(&support(&f, n).points) {
            return Err(format!("{w}: exchange fails {x:?}"));
        }
        count += 1;
    }
    Ok(count)
}

pub fn finite_schur_positive(max_k: usize, max_len: usize) -> Check {
    for k in 1..=max_k {
        for (w, word) in elements_up_to_length(k, max_len) {
            if word.is_empty() || !w.is_finite() {
                continue;
            }
            let s = decompose_in_basis(&affine_stanley_monomials(&w).unwrap(), Basis::Schur).unwrap();
            let negative = s.terms().find(|&(_, c)| c < 0).map(|(mu, c)| format!("finite {w}: coefficient {c} at s{mu}"));
            if let Some(msg) = negative {
                return Err(msg);
            }
        }
    }
    Ok(())
}

/// Exchange axiom for every canonical cylindric pair on `n` with at most
/// `max_boxes` boxes per period. Returns the number of shapes.
pub fn cylindric_sweep(n: usize, max_boxes: usize) -> Result<usize, String> {
    let shapes = canonical_cylindric_shapes(n, max_boxes);
    for (outer, inner) in &shapes {
        let f = cylindric_skew_schur_monomials(outer, inner).map_err(|e| format!("{outer} / {inner}: {e}"))?;
        if let Some(x) = is_m_convex(&support(&f, f.degree()).points) {
            return Err(format!("cylindric {outer} / {inner}: exchange fails {x:?}"));
        }
    }
    Ok(shapes.len())
}

/// `s_i² = 1`, braid and commutation relations inserted at every position of
/// every word up to `max_len` letters.
pub fn coxeter_relations(max_k: usize, max_len: usize) -> Check {
    for k in 2..=max_k {
        let gens: Vec<usize> = (0..=k).collect();
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut all = words.clone();
        for _ in 0..max_len {
            words = words.iter().flat_map(|w| gens.iter().map(move |&g| [w.as_slice(), &[g]].concat())).collect();
            all.extend(words.iter().cloned());
        }
        let n = k + 1;
        for word in &all {
            let base = from_word(word, k).unwrap();
            for at in 0..=word.len() {
                let with = |ins: &[usize]| {
                    let mut v = word.clone();
                    v.splice(at..at, ins.iter().copied());
                    from_word(&v, k).unwrap()
                };
                for i in 0..n {
                    if with(&[i, i]) != base {
                        return Err(format!("s_{i}^2 inserted into {word:?} (k={k})"));
                    }
                    for j in 0..n {
                        let adjacent = (i + 1) % n == j || (j + 1) % n == i;
                        if i != j && adjacent && with(&[i, j, i]) != with(&[j, i, j]) {
                            return Err(format!("braid {i},{j} in {word:?} (k={k})"));
                        }
                        if i != j && !adjacent && with(&[i, j]) != with(&[j, i]) {
                            return Err(format!("commutation {i},{j} in {word:?} (k={k})"));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
