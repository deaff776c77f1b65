//! Named verification checks and the sweep runner behind `kschur verify`.

use std::collections::BTreeSet;
use std::io::Write;
use std::str::FromStr;
use std::time::{Duration, Instant};

use anyhow::{bail, Result};
use kschur::affine::{
    affine_stanley_monomials, canonical_cylindric_shapes, cylindric_box_count, cylindric_skew_schur_monomials,
    dual_k_schur_coeffs, elements_up_to_length, mu_of, AffinePermutation, CylindricShape,
};
use kschur::partitions::{dominates, partitions_bounded, partitions_of};
use kschur::polytope::{
    dominant_key, is_m_convex_with_budget, is_snp_symmetric, lorentzian_check, normalize, permutahedron_points,
};
use kschur::symfunc::{
    decompose_in_basis, dual_k_schur_monomials_with_budget, k_schur_monomials, schur_monomials_with_budget, support,
    Basis, MonExpansion,
};
use kschur::tableaux::{build_kssyt, k_kostka_with_budget};
use kschur::{Error, Partition};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{SweepConfig, SweepFormat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    SupportEquality,
    KKostkaIffDominance,
    Rado,
    MConvexAffineStanley,
    MConvexCylindric,
    LorentzianSchur,
    LorentzianDualKSchur,
    LorentzianKSchur,
    KSchurDominantTerm,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::SupportEquality,
        Check::KKostkaIffDominance,
        Check::Rado,
        Check::MConvexAffineStanley,
        Check::MConvexCylindric,
        Check::LorentzianSchur,
        Check::LorentzianDualKSchur,
        Check::LorentzianKSchur,
        Check::KSchurDominantTerm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::SupportEquality => "support-equality",
            Check::KKostkaIffDominance => "k-kostka-iff-dominance",
            Check::Rado => "rado",
            Check::MConvexAffineStanley => "m-convex-affine-stanley",
            Check::MConvexCylindric => "m-convex-cylindric",
            Check::LorentzianSchur => "lorentzian-schur",
            Check::LorentzianDualKSchur => "lorentzian-dual-k-schur",
            Check::LorentzianKSchur => "lorentzian-k-schur",
            Check::KSchurDominantTerm => "k-schur-dominant-term",
        }
    }
}

impl FromStr for Check {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match Check::ALL.iter().find(|c| c.name() == s.trim()) {
            Some(&c) => Ok(c),
            None => {
                let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
                bail!("unknown check {s:?}; expected one of {}", names.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    BudgetExceeded,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub check: String,
    pub params: Value,
    pub result: Status,
    pub witness: Option<Value>,
}

/// What a single instance reports: `None` on success, a witness on failure.
type Probe = std::result::Result<Option<Value>, Error>;

enum Instance {
    Support { k: usize, lambda: Partition, n: usize },
    Kostka { k: usize, lambda: Partition },
    Rado { d: usize, n: usize },
    AffineStanley { w: AffinePermutation, word: Vec<usize> },
    Cylindric { outer: CylindricShape, inner: CylindricShape },
    Lorentzian { basis: LorentzianSource, lambda: Partition, n: usize },
    DominantTerm { k: usize, lambda: Partition },
    /// A deliberately wrong support, to show that failures surface.
    SelfTest,
}

#[derive(Clone, Copy)]
enum LorentzianSource {
    Schur,
    DualKSchur(usize),
    KSchur(usize),
}

impl Instance {
    fn check_name(&self) -> &'static str {
        match self {
            Instance::Support { .. } => Check::SupportEquality.name(),
            Instance::Kostka { .. } => Check::KKostkaIffDominance.name(),
            Instance::Rado { .. } => Check::Rado.name(),
            Instance::AffineStanley { .. } => Check::MConvexAffineStanley.name(),
            Instance::Cylindric { .. } => Check::MConvexCylindric.name(),
            Instance::Lorentzian { basis: LorentzianSource::Schur, .. } => Check::LorentzianSchur.name(),
            Instance::Lorentzian { basis: LorentzianSource::DualKSchur(_), .. } => Check::LorentzianDualKSchur.name(),
            Instance::Lorentzian { basis: LorentzianSource::KSchur(_), .. } => Check::LorentzianKSchur.name(),
            Instance::DominantTerm { .. } => Check::KSchurDominantTerm.name(),
            Instance::SelfTest => "self-test",
        }
    }

    fn params(&self) -> Value {
        match self {
            Instance::Support { k, lambda, n } => json!({"k": k, "lambda": lambda.to_string(), "n": n}),
            Instance::Kostka { k, lambda } | Instance::DominantTerm { k, lambda } => {
                json!({"k": k, "lambda": lambda.to_string()})
            }
            Instance::Rado { d, n } => json!({"d": d, "n": n}),
            Instance::AffineStanley { w, word } => {
                let word: Vec<String> = word.iter().map(usize::to_string).collect();
                json!({"k": w.k(), "word": word.join(","), "window": w.to_string()})
            }
            Instance::Cylindric { outer, inner } => json!({"outer": outer.to_string(), "inner": inner.to_string()}),
            Instance::Lorentzian { basis, lambda, n } => match basis {
                LorentzianSource::Schur => json!({"lambda": lambda.to_string(), "n": n}),
                LorentzianSource::DualKSchur(k) | LorentzianSource::KSchur(k) => {
                    json!({"k": k, "lambda": lambda.to_string(), "n": n})
                }
            },
            Instance::SelfTest => json!({"injected": "support of m[2] in 2 variables"}),
        }
    }

    fn run(&self, budget: u64) -> Probe {
        match self {
            Instance::Support { k, lambda, n } => support_equality(*k, lambda, *n, budget),
            Instance::Kostka { k, lambda } => kostka_iff_dominance(*k, lambda, budget),
            Instance::Rado { d, n } => rado(*d, *n),
            Instance::AffineStanley { w, .. } => affine_stanley(w, budget),
            Instance::Cylindric { outer, inner } => cylindric(outer, inner, budget),
            Instance::Lorentzian { basis, lambda, n } => lorentzian(*basis, lambda, *n, budget),
            Instance::DominantTerm { k, lambda } => dominant_term(*k, lambda),
            Instance::SelfTest => {
                let f = MonExpansion::from_terms(2, [(Partition::from_slice(&[2]), 1)])?;
                Ok(support_vs_polytope(&f, &Partition::from_slice(&[2]), 2)?)
            }
        }
    }
}

fn points_json(points: &BTreeSet<Vec<usize>>) -> Value {
    json!(points.iter().collect::<Vec<_>>())
}

/// Compares `supp(f)` with the lattice points of `𝒫_λ`.
fn support_vs_polytope(f: &MonExpansion, lambda: &Partition, n: usize) -> Probe {
    let supp = support(f, n).points;
    let poly = permutahedron_points(lambda, n)?;
    if supp != poly {
        let missing: BTreeSet<_> = poly.difference(&supp).cloned().collect();
        let extra: BTreeSet<_> = supp.difference(&poly).cloned().collect();
        return Ok(Some(json!({"reason": "support differs from permutahedron points",
            "missing": points_json(&missing), "extra": points_json(&extra)})));
    }
    Ok(None)
}

fn support_equality(k: usize, lambda: &Partition, n: usize, budget: u64) -> Probe {
    let dual = dual_k_schur_monomials_with_budget(lambda, k, budget)?;
    let schur = schur_monomials_with_budget(lambda, budget)?;
    if let Some(w) = support_vs_polytope(&dual, lambda, n)? {
        return Ok(Some(json!({"polynomial": "dual-k-schur", "detail": w})));
    }
    if let Some(w) = support_vs_polytope(&schur, lambda, n)? {
        return Ok(Some(json!({"polynomial": "schur", "detail": w})));
    }
    if !is_snp_symmetric(&dual, n)? {
        return Ok(Some(json!({"reason": "dual k-Schur support is not saturated"})));
    }
    if let Some(w) = is_m_convex_with_budget(&support(&dual, n).points, budget)? {
        return Ok(Some(json!({"reason": "exchange axiom fails", "exchange": w})));
    }
    Ok(None)
}

fn kostka_iff_dominance(k: usize, lambda: &Partition, budget: u64) -> Probe {
    for mu in partitions_bounded(lambda.size(), k) {
        let count = k_kostka_with_budget(lambda, mu.parts(), k, budget)?;
        let dom = dominates(&mu, lambda)?;
        if (count != 0) != dom {
            return Ok(Some(json!({"mu": mu.to_string(), "k_kostka": count, "dominated": dom})));
        }
        if dom {
            if let Err(e) = build_kssyt(lambda, &mu, k) {
                return Ok(Some(json!({"mu": mu.to_string(), "construction": e.to_string()})));
            }
        }
    }
    Ok(None)
}

fn rado(d: usize, n: usize) -> Probe {
    let parts: Vec<Partition> = partitions_of(d).into_iter().filter(|p| p.len() <= n).collect();
    let points: Vec<BTreeSet<Vec<usize>>> =
        parts.iter().map(|p| permutahedron_points(p, n)).collect::<Result<_, _>>()?;
    for (i, mu) in parts.iter().enumerate() {
        for (j, lambda) in parts.iter().enumerate() {
            let dom = dominates(mu, lambda)?;
            let inside = points[i].is_subset(&points[j]);
            if dom != inside {
                return Ok(Some(json!({"mu": mu.to_string(), "lambda": lambda.to_string(),
                    "dominated": dom, "contained": inside})));
            }
        }
    }
    Ok(None)
}

fn affine_stanley(w: &AffinePermutation, budget: u64) -> Probe {
    // nonnegativity, support below μ(w) and the unit leading coefficient
    match dual_k_schur_coeffs(w) {
        Ok(_) => {}
        Err(Error::Postcondition(msg)) => return Ok(Some(json!({"reason": msg}))),
        Err(e) => return Err(e),
    }
    let f = affine_stanley_monomials(w)?;
    let top = mu_of(w);
    match dominant_key(&f) {
        Ok(key) if key == top => {}
        Ok(key) => return Ok(Some(json!({"reason": "dominant key differs from mu(w)", "key": key.to_string(), "mu": top.to_string()}))),
        Err(e) => return Ok(Some(json!({"reason": e.to_string()}))),
    }
    let n = f.degree();
    if let Some(wit) = support_vs_polytope(&f, &top, n)? {
        return Ok(Some(wit));
    }
    if let Some(x) = is_m_convex_with_budget(&support(&f, n).points, budget)? {
        return Ok(Some(json!({"reason": "exchange axiom fails", "exchange": x})));
    }
    Ok(None)
}

fn cylindric(outer: &CylindricShape, inner: &CylindricShape, budget: u64) -> Probe {
    let f = cylindric_skew_schur_monomials(outer, inner)?;
    let supp = support(&f, f.degree()).points;
    match is_m_convex_with_budget(&supp, budget)? {
        Some(x) => Ok(Some(json!({"reason": "exchange axiom fails", "exchange": x}))),
        None => Ok(None),
    }
}

fn lorentzian(source: LorentzianSource, lambda: &Partition, n: usize, budget: u64) -> Probe {
    let f = match source {
        LorentzianSource::Schur => schur_monomials_with_budget(lambda, budget)?,
        LorentzianSource::DualKSchur(k) => dual_k_schur_monomials_with_budget(lambda, k, budget)?,
        LorentzianSource::KSchur(k) => k_schur_monomials(lambda, k)?,
    };
    Ok(lorentzian_check(&normalize(&f, n)).map(|w| json!(w)))
}

fn dominant_term(k: usize, lambda: &Partition) -> Probe {
    let f = k_schur_monomials(lambda, k)?;
    let coeffs = decompose_in_basis(&f, Basis::Schur)?;
    let Some((top, c)) = coeffs.terms().next() else {
        return Ok(Some(json!({"reason": "empty expansion"})));
    };
    if c <= 0 {
        return Ok(Some(json!({"reason": "leading Schur coefficient is not positive", "key": top.to_string(), "coefficient": c})));
    }
    for (mu, _) in coeffs.terms() {
        if !dominates(mu, top)? {
            return Ok(Some(json!({"reason": "no dominant Schur term", "key": top.to_string(), "other": mu.to_string()})));
        }
    }
    if let Some((mu, c)) = coeffs.terms().find(|&(_, c)| c < 0) {
        return Ok(Some(json!({"reason": "negative Schur coefficient", "key": mu.to_string(), "coefficient": c})));
    }
    Ok(None)
}

fn instances(cfg: &SweepConfig) -> Vec<Instance> {
    let mut out = Vec::new();
    let ks = || cfg.k_range.iter();
    let sizes = || cfg.size_range.iter();
    let n_for = |lambda: &Partition, max: usize| {
        let min = lambda.len().max(1);
        cfg.n_range.iter().filter(move |&n| n >= min && n <= max)
    };
    for &check in &cfg.checks {
        match check {
            Check::SupportEquality => {
                for k in ks() {
                    for d in sizes() {
                        for lambda in partitions_bounded(d, k) {
                            for n in n_for(&lambda, d) {
                                out.push(Instance::Support { k, lambda: lambda.clone(), n });
                            }
                        }
                    }
                }
            }
            Check::KKostkaIffDominance => {
                for k in ks() {
                    for d in sizes() {
                        for lambda in partitions_bounded(d, k) {
                            out.push(Instance::Kostka { k, lambda });
                        }
                    }
                }
            }
            Check::Rado => {
                for d in sizes() {
                    for n in cfg.n_range.iter().filter(|&n| n >= 1 && n <= d) {
                        out.push(Instance::Rado { d, n });
                    }
                }
            }
            Check::MConvexAffineStanley => {
                for k in ks() {
                    for (w, word) in elements_up_to_length(k, cfg.size_range.hi) {
                        if cfg.size_range.contains(word.len()) {
                            out.push(Instance::AffineStanley { w, word });
                        }
                    }
                }
            }
            Check::MConvexCylindric => {
                for n in cfg.n_range.iter().filter(|&n| n >= 2) {
                    for (outer, inner) in canonical_cylindric_shapes(n, cfg.size_range.hi) {
                        let boxes = cylindric_box_count(&outer, &inner).unwrap_or(0);
                        if cfg.size_range.contains(boxes) {
                            out.push(Instance::Cylindric { outer, inner });
                        }
                    }
                }
            }
            Check::LorentzianSchur => {
                for d in sizes() {
                    for lambda in partitions_of(d) {
                        for n in n_for(&lambda, cfg.n_range.hi) {
                            out.push(Instance::Lorentzian { basis: LorentzianSource::Schur, lambda: lambda.clone(), n });
                        }
                    }
                }
            }
            Check::LorentzianDualKSchur | Check::LorentzianKSchur => {
                for k in ks() {
                    let basis = if check == Check::LorentzianDualKSchur {
                        LorentzianSource::DualKSchur(k)
                    } else {
                        LorentzianSource::KSchur(k)
                    };
                    for d in sizes() {
                        for lambda in partitions_bounded(d, k) {
                            for n in n_for(&lambda, cfg.n_range.hi) {
                                out.push(Instance::Lorentzian { basis, lambda: lambda.clone(), n });
                            }
                        }
                    }
                }
            }
            Check::KSchurDominantTerm => {
                for k in ks() {
                    for d in sizes() {
                        for lambda in partitions_bounded(d, k) {
                            out.push(Instance::DominantTerm { k, lambda });
                        }
                    }
                }
            }
        }
    }
    if cfg.self_test {
        out.push(Instance::SelfTest);
    }
    out
}

fn judge(instance: &Instance, budget: u64) -> (Verdict, Duration) {
    let start = Instant::now();
    let (result, witness) = match instance.run(budget) {
        Ok(None) => (Status::Pass, None),
        Ok(Some(w)) => (Status::Fail, Some(w)),
        Err(Error::Budget(b)) => (Status::BudgetExceeded, Some(json!({"budget": b}))),
        Err(e) => (Status::Fail, Some(json!({"error": e.to_string()}))),
    };
    let verdict =
        Verdict { check: instance.check_name().to_string(), params: instance.params(), result, witness };
    (verdict, start.elapsed())
}

/// Runs every configured instance, writing one verdict per line in
/// configuration order. Returns the verdicts for the caller's summary.
pub fn run_sweep(cfg: &SweepConfig, out: &mut dyn Write) -> Result<Vec<(Verdict, Duration)>> {
    let todo = instances(cfg);
    let results: Vec<(Verdict, Duration)> = todo.par_iter().map(|i| judge(i, cfg.budget)).collect();
    match cfg.format {
        SweepFormat::Json => {
            for (v, _) in &results {
                writeln!(out, "{}", serde_json::to_string(v)?)?;
            }
        }
        SweepFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["check", "params", "result", "witness"])?;
            for (v, _) in &results {
                let result = serde_json::to_value(v.result)?;
                w.write_record([
                    v.check.clone(),
                    v.params.to_string(),
                    result.as_str().unwrap_or_default().to_string(),
                    v.witness.as_ref().map(Value::to_string).unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(results)
}

/// Per-check tallies, written to stderr so stdout stays machine-readable.
pub fn write_summary(results: &[(Verdict, Duration)], err: &mut dyn Write) -> Result<()> {
    let mut names: Vec<&str> = Vec::new();
    for (v, _) in results {
        if !names.contains(&v.check.as_str()) {
            names.push(&v.check);
        }
    }
    writeln!(err, "{:<26} {:>6} {:>6} {:>7} {:>10}", "check", "pass", "fail", "budget", "seconds")?;
    for name in names {
        let rows: Vec<_> = results.iter().filter(|(v, _)| v.check == name).collect();
        let count = |s: Status| rows.iter().filter(|(v, _)| v.result == s).count();
        let secs: f64 = rows.iter().map(|(_, d)| d.as_secs_f64()).sum();
        writeln!(
            err,
            "{:<26} {:>6} {:>6} {:>7} {:>10.3}",
            name,
            count(Status::Pass),
            count(Status::Fail),
            count(Status::BudgetExceeded),
            secs
        )?;
    }
    Ok(())
}
