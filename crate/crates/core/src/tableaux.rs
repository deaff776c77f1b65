//! Semistandard tableaux and semistandard k-tableaux.
//!
//! Tableaux are stored row by row from the bottom (French convention). The
//! constructive side is [`fayers_ssyt`], [`row_fill`] and [`build_kssyt`];
//! the counting side ([`enumerate_kssyts`], [`k_kostka`], [`kostka`]) is an
//! independent brute-force search over chains of horizontal strips.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::cores::{bounded_to_core, core_of, is_core};
use crate::error::{Error, Result};
use crate::partitions::{dominance_violation, residue, Cell, Composition, Partition};

/// Default node cap for the brute-force searches.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A filling of a diagram, `rows[0]` being the bottom row.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Result<Partition> {
        Partition::new(self.rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::ShapeNotPartition(self.to_string()))
    }

    pub fn get(&self, c: Cell) -> Option<usize> {
        self.rows.get(c.row.checked_sub(1)?)?.get(c.col.checked_sub(1)?).copied()
    }

    /// Cells holding `letter`, in row-major order.
    pub fn cells_of(&self, letter: usize) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v == letter {
                    out.push(Cell::new(i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn max_letter(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Ordinary weight: the number of cells holding each letter `1..=max`.
    pub fn weight(&self) -> Composition {
        let mut w = vec![0; self.max_letter()];
        for &v in self.rows.iter().flatten() {
            if v > 0 {
                w[v - 1] += 1;
            }
        }
        w
    }

    fn row_major(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Parses `[[1,1,2],[2,3]]`, rows bottom to top.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse { pos: 0, msg: "expected outer brackets".into() })?;
        let mut rows = Vec::new();
        let mut depth = 0usize;
        let mut start = 0usize;
        for (i, ch) in inner.char_indices() {
            match ch {
                '[' => {
                    if depth == 0 {
                        start = i;
                    }
                    depth += 1;
                }
                ']' => {
                    depth = depth.checked_sub(1).ok_or(Error::Parse {
                        pos: i + 1,
                        msg: "unbalanced ']'".into(),
                    })?;
                    if depth == 0 {
                        let row = crate::partitions::parse_uint_list(&inner[start..=i]).map_err(
                            |e| match e {
                                Error::Parse { pos, msg } => Error::Parse { pos: pos + start + 1, msg },
                                other => other,
                            },
                        )?;
                        rows.push(row);
                    }
                }
                ',' | ' ' => {}
                _ if depth == 0 => {
                    return Err(Error::Parse { pos: i + 1, msg: format!("unexpected {ch:?}") })
                }
                _ => {}
            }
        }
        if depth != 0 {
            return Err(Error::Parse { pos: t.len(), msg: "unbalanced '['".into() });
        }
        Ok(Tableau { rows })
    }
}

/// A semistandard k-tableau: an SSYT on a `(k+1)`-core together with its
/// k-weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KSsyt {
    pub tableau: Tableau,
    pub k: usize,
    pub k_weight: Composition,
}

/// Fayers' SSYT together with the chain `∅ = λ⁽⁰⁾ ⊆ … ⊆ λ⁽ᶥ⁾ = λ` it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FayersTableau {
    pub tableau: Tableau,
    pub chain: Vec<Partition>,
}

fn require_dominance(mu: &Partition, lambda: &Partition) -> Result<()> {
    if let Some((index, mu_sum, lambda_sum)) = dominance_violation(mu, lambda)? {
        return Err(Error::NotDominated {
            mu: mu.clone(),
            lambda: lambda.clone(),
            index,
            mu_sum,
            lambda_sum,
        });
    }
    Ok(())
}

/// One step of Fayers' construction: the shape left after placing
/// `part` copies of the largest letter, and how many go at the end of each
/// row (index 0 is row 1).
fn fayers_step(lambda: &Partition, part: usize) -> (Partition, Vec<usize>) {
    let ell = lambda.len();
    let j = (1..=ell).rev().find(|&i| lambda.row(i) >= part).unwrap_or(0);
    let mut counts = vec![0; ell];
    for i in j + 1..=ell {
        counts[i - 1] = lambda.row(i) - lambda.row(i + 1);
    }
    if j >= 1 {
        counts[j - 1] = part - lambda.row(j + 1);
    }
    let rest: Vec<usize> = (1..=ell).map(|i| lambda.row(i) - counts[i - 1]).collect();
    (Partition::new(rest).expect("Fayers step keeps a partition"), counts)
}

/// Fayers' SSYT of shape `λ` and weight `μ`, filling the largest letters
/// into the top cells first and pushing them to the ends of their rows.
pub fn fayers_ssyt(lambda: &Partition, mu: &Partition) -> Result<FayersTableau> {
    require_dominance(mu, lambda)?;
    let iota = mu.len();
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    let mut chain = vec![Partition::empty(); iota + 1];
    chain[iota] = lambda.clone();
    let mut current = lambda.clone();
    for letter in (1..=iota).rev() {
        let (rest, counts) = fayers_step(&current, mu.row(letter));
        for (i, &count) in counts.iter().enumerate() {
            let end = current.row(i + 1);
            for slot in &mut rows[i][end - count..end] {
                *slot = letter;
            }
        }
        chain[letter - 1] = rest.clone();
        current = rest;
    }
    Ok(FayersTableau { tableau: Tableau { rows }, chain })
}

/// A k-tableau under construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialKSsyt {
    pub core_shape: Partition,
    pub k: usize,
    entries: Vec<Vec<Option<usize>>>,
    /// Cells marked when the current letter was first placed.
    pub marked: BTreeSet<Cell>,
    /// Cells shaded (and thereby removed from the working diagram) for the
    /// current letter.
    pub shaded: BTreeSet<Cell>,
}

impl PartialKSsyt {
    /// An empty filling of `𝔠(λ)`.
    pub fn empty(lambda: &Partition, k: usize) -> Result<Self> {
        let core_shape = core_of(lambda, k)?;
        let entries = core_shape.parts().iter().map(|&p| vec![None; p]).collect();
        Ok(PartialKSsyt {
            core_shape,
            k,
            entries,
            marked: BTreeSet::new(),
            shaded: BTreeSet::new(),
        })
    }

    pub fn get(&self, c: Cell) -> Option<usize> {
        *self.entries.get(c.row.checked_sub(1)?)?.get(c.col.checked_sub(1)?)?
    }

    fn set(&mut self, c: Cell, letter: usize) {
        self.entries[c.row - 1][c.col - 1] = Some(letter);
    }

    fn empty_cells(&self) -> BTreeSet<Cell> {
        self.core_shape.cells().filter(|&c| self.get(c).is_none()).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.entries.iter().flatten().all(Option::is_some)
    }

    /// Filled rows, with 0 standing for an empty cell.
    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.entries.iter().map(|r| r.iter().map(|v| v.unwrap_or(0)).collect()).collect()
    }

    pub fn to_tableau(&self) -> Option<Tableau> {
        self.is_complete().then(|| Tableau { rows: self.to_rows() })
    }
}

impl fmt::Display for PartialKSsyt {
    /// Rows top to bottom; `.` empty, `*` marks, `#` shades.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in (1..=self.core_shape.len()).rev() {
            for j in 1..=self.core_shape.row(i) {
                let c = Cell::new(i, j);
                let tag = if self.shaded.contains(&c) {
                    '#'
                } else if self.marked.contains(&c) {
                    '*'
                } else {
                    ' '
                };
                match self.get(c) {
                    Some(v) => write!(f, "{v:>3}{tag}")?,
                    None => write!(f, "  .{tag}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Result of one row filling `𝔠(λ) ← {ι}`.
#[derive(Debug, Clone)]
pub struct RowFill {
    pub state: PartialKSsyt,
    /// `λ̂`: the unfilled cells now form `𝔠(λ̂)`.
    pub remaining: Partition,
    /// Snapshots after the initial placement and after each shading round.
    pub stages: Vec<PartialKSsyt>,
}

fn top_cells_in_row(diagram: &Partition, i: usize) -> impl DoubleEndedIterator<Item = Cell> {
    (diagram.row(i + 1) + 1..=diagram.row(i)).map(move |j| Cell::new(i, j))
}

fn removable_in(diagram: &BTreeSet<Cell>, c: Cell) -> bool {
    !diagram.contains(&Cell::new(c.row, c.col + 1)) && !diagram.contains(&Cell::new(c.row + 1, c.col))
}

fn as_partition(cells: &BTreeSet<Cell>) -> Option<Partition> {
    let rows = cells.iter().map(|c| c.row).max().unwrap_or(0);
    let mut parts = vec![0usize; rows];
    for c in cells {
        parts[c.row - 1] += 1;
    }
    let shape = Partition::new(parts).ok()?;
    (shape.cells().count() == cells.len() && shape.cells().all(|c| cells.contains(&c)))
        .then_some(shape)
}

/// The row filling `𝔠(λ) ← {ι}`: places `letter` into the
/// empty region `𝔠(λ)` of `state` so that the new cells form a horizontal
/// strip with exactly `part` distinct residues and the cells left empty form
/// `𝔠(λ̂)`, `λ̂` being the shape left by Fayers' construction.
pub fn row_fill(
    state: &PartialKSsyt,
    lambda: &Partition,
    part: usize,
    letter: usize,
) -> Result<RowFill> {
    let k = state.k;
    if !lambda.is_k_bounded(k) {
        return Err(Error::NotKBounded(lambda.clone(), k));
    }
    if part == 0 || part > lambda.first() {
        return Err(Error::RowFill(format!("part {part} does not fit in {lambda}")));
    }
    let core = core_of(lambda, k)?;
    let mut diagram: BTreeSet<Cell> = core.cells().collect();
    if state.empty_cells() != diagram {
        return Err(Error::RowFill(format!("empty cells of the state do not form 𝔠({lambda})")));
    }

    let mut st = state.clone();
    st.marked.clear();
    st.shaded.clear();
    let mut stages = Vec::new();

    // lowest row long enough for the part
    let ell = lambda.len();
    let j = (1..=ell).rev().find(|&i| lambda.row(i) >= part).expect("part <= λ_1");

    // mark residue-distinct top cells right to left, fill to the row end
    let mut used = BTreeSet::new();
    for i in (j..=ell).rev() {
        let wanted = if i == j { part - lambda.row(j + 1) } else { lambda.row(i) - lambda.row(i + 1) };
        if wanted == 0 {
            continue;
        }
        let mut picked = Vec::with_capacity(wanted);
        for c in top_cells_in_row(&core, i).rev() {
            if picked.len() == wanted {
                break;
            }
            let r = residue(c, k);
            if used.insert(r) {
                picked.push(c);
            }
        }
        if picked.len() < wanted {
            return Err(Error::ResidueExhaustion { row: i, needed: wanted, found: picked.len() });
        }
        let leftmost = *picked.last().expect("wanted > 0");
        st.marked.extend(picked.iter().copied());
        for col in leftmost.col..=core.row(i) {
            let c = Cell::new(i, col);
            st.set(c, letter);
            used.insert(residue(c, k));
        }
    }
    stages.push(st.clone());

    // shade corners of the pivot residue until no mark is left in rows >= j
    let mut current = lambda.clone();
    loop {
        let pivot = diagram
            .iter()
            .filter(|c| c.row >= j && st.get(**c) == Some(letter) && removable_in(&diagram, **c))
            .max_by_key(|c| c.col)
            .copied()
            .ok_or_else(|| Error::RowFill("no removable corner holds the letter".into()))?;
        let y = residue(pivot, k);
        let corners: Vec<Cell> = diagram
            .iter()
            .filter(|c| residue(**c, k) == y && removable_in(&diagram, **c))
            .copied()
            .collect();
        for &c in &corners {
            match st.get(c) {
                None => st.set(c, letter),
                Some(v) if v == letter => {}
                Some(v) => {
                    return Err(Error::RowFill(format!("corner {c} already holds {v}")));
                }
            }
            st.shaded.insert(c);
            diagram.remove(&c);
        }
        let r = corners.iter().map(|c| c.row).max().expect("pivot is a corner");
        current = current
            .decrement_row(r)
            .ok_or_else(|| Error::RowFill(format!("{current} - e_{r} is not a partition")))?;
        let shape = as_partition(&diagram)
            .ok_or_else(|| Error::RowFill("working diagram is not a partition".into()))?;
        if shape != core_of(&current, k)? {
            return Err(Error::RowFill(format!("diagram {shape} differs from 𝔠({current})")));
        }
        stages.push(st.clone());
        let marks_left = st.marked.iter().any(|c| c.row >= j && diagram.contains(c));
        if !marks_left {
            break;
        }
    }

    if let Some(c) = diagram.iter().find(|c| st.get(**c).is_some()) {
        return Err(Error::RowFill(format!("filled cell {c} left inside 𝔠({current})")));
    }
    Ok(RowFill { state: st, remaining: current, stages })
}

/// Everything produced by [`build_kssyt_traced`].
#[derive(Debug, Clone)]
pub struct BuildTrace {
    pub result: KSsyt,
    pub chain: Vec<Partition>,
    /// `fills[i]` is the row filling for letter `ι - i`.
    pub fills: Vec<RowFill>,
}

/// A k-SSYT of shape `𝔠(λ)` and k-weight `μ`, for k-bounded `μ ⊴ λ`.
pub fn build_kssyt(lambda: &Partition, mu: &Partition, k: usize) -> Result<KSsyt> {
    Ok(build_kssyt_traced(lambda, mu, k)?.result)
}

pub fn build_kssyt_traced(lambda: &Partition, mu: &Partition, k: usize) -> Result<BuildTrace> {
    // dominance is reported ahead of k-boundedness
    require_dominance(mu, lambda)?;
    for p in [lambda, mu] {
        if !p.is_k_bounded(k) {
            return Err(Error::NotKBounded(p.clone(), k));
        }
    }
    let fayers = fayers_ssyt(lambda, mu)?;
    let mut state = PartialKSsyt::empty(lambda, k)?;
    let mut fills = Vec::with_capacity(mu.len());
    for letter in (1..=mu.len()).rev() {
        let fill = row_fill(&state, &fayers.chain[letter], mu.row(letter), letter)?;
        if fill.remaining != fayers.chain[letter - 1] {
            return Err(Error::RowFill(format!(
                "letter {letter} left {} instead of {}",
                fill.remaining,
                fayers.chain[letter - 1]
            )));
        }
        state = fill.state.clone();
        fills.push(fill);
    }
    let tableau = state
        .to_tableau()
        .ok_or_else(|| Error::RowFill("cells left empty".into()))?;
    let k_weight = validate_kssyt(&tableau, k)?;
    if trim(&k_weight) != mu.parts() {
        return Err(Error::RowFill(format!("k-weight {k_weight:?} differs from {mu}")));
    }
    Ok(BuildTrace { result: KSsyt { tableau, k, k_weight }, chain: fayers.chain, fills })
}

fn trim(w: &[usize]) -> &[usize] {
    let end = w.iter().rposition(|&x| x > 0).map_or(0, |p| p + 1);
    &w[..end]
}

fn check_semistandard(t: &Tableau) -> Result<()> {
    for (i, row) in t.rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            let cell = Cell::new(i + 1, j + 1);
            if v == 0 {
                return Err(Error::InvalidTableau { cell, reason: "entry must be positive".into() });
            }
            if j > 0 && row[j - 1] > v {
                return Err(Error::InvalidTableau {
                    cell,
                    reason: format!("row decreases from {} to {v}", row[j - 1]),
                });
            }
            if i > 0 && t.rows[i - 1][j] >= v {
                return Err(Error::InvalidTableau {
                    cell,
                    reason: format!("column not strictly increasing over {}", t.rows[i - 1][j]),
                });
            }
        }
    }
    Ok(())
}

/// Checks that `t` is an SSYT on a `(k+1)`-core and returns its k-weight:
/// entry `i-1` is the number of distinct residues among cells holding `i`.
pub fn validate_kssyt(t: &Tableau, k: usize) -> Result<Composition> {
    let shape = t.shape()?;
    if !is_core(&shape, k) {
        return Err(Error::NotCore(shape, k + 1));
    }
    check_semistandard(t)?;
    Ok(k_weight_of(t, k))
}

fn k_weight_of(t: &Tableau, k: usize) -> Composition {
    let mut sets = vec![BTreeSet::new(); t.max_letter()];
    for (i, row) in t.rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            sets[v - 1].insert(residue(Cell::new(i + 1, j + 1), k));
        }
    }
    sets.iter().map(BTreeSet::len).collect()
}

/// Partitions `ν` with `inner ⊆ ν ⊆ outer` such that `ν / inner` is a
/// horizontal strip.
fn horizontal_strips(inner: &Partition, outer: &Partition) -> Vec<Partition> {
    let rows = outer.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    fn rec(
        i: usize,
        rows: usize,
        inner: &Partition,
        outer: &Partition,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i > rows {
            out.push(Partition::new(cur.clone()).expect("interlacing keeps a partition"));
            return;
        }
        let lo = inner.row(i);
        let hi = if i == 1 { outer.row(1) } else { outer.row(i).min(inner.row(i - 1)) };
        for v in lo..=hi {
            cur.push(v);
            rec(i + 1, rows, inner, outer, cur, out);
            cur.pop();
        }
    }
    rec(1, rows, inner, outer, &mut cur, &mut out);
    out
}

fn strip_residues(inner: &Partition, next: &Partition, k: usize) -> usize {
    let mut set = BTreeSet::new();
    for i in 1..=next.len() {
        for j in inner.row(i) + 1..=next.row(i) {
            set.insert(residue(Cell::new(i, j), k));
        }
    }
    set.len()
}

/// Which statistic each strip must match.
#[derive(Clone, Copy)]
enum StripRule {
    /// Number of cells.
    Size,
    /// Number of distinct `(k+1)`-residues.
    Residues(usize),
}

impl StripRule {
    fn measure(self, inner: &Partition, next: &Partition) -> usize {
        match self {
            StripRule::Size => next.size() - inner.size(),
            StripRule::Residues(k) => strip_residues(inner, next, k),
        }
    }
}

struct ChainSearch<'a> {
    target: &'a Partition,
    weight: &'a [usize],
    rule: StripRule,
    budget: u64,
    nodes: u64,
}

impl ChainSearch<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget(self.budget));
        }
        Ok(())
    }

    /// No column can still need more cells than there are letters left.
    fn feasible(&self, shape: &Partition, letters_left: usize) -> bool {
        (1..=self.target.first())
            .all(|c| self.target.column(c) - shape.column(c) <= letters_left)
    }

    fn children(&mut self, level: usize, shape: &Partition) -> Result<Vec<Partition>> {
        let want = self.weight[level];
        let letters_left = self.weight.len() - level - 1;
        let mut out = Vec::new();
        for next in horizontal_strips(shape, self.target) {
            self.tick()?;
            if self.rule.measure(shape, &next) == want && self.feasible(&next, letters_left) {
                out.push(next);
            }
        }
        Ok(out)
    }

    fn enumerate(&mut self, level: usize, shape: &Partition, chain: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) -> Result<()> {
        if level == self.weight.len() {
            if shape == self.target {
                out.push(chain.clone());
            }
            return Ok(());
        }
        for next in self.children(level, shape)? {
            chain.push(next.clone());
            self.enumerate(level + 1, &next, chain, out)?;
            chain.pop();
        }
        Ok(())
    }

    fn count(&mut self, level: usize, shape: &Partition, memo: &mut HashMap<(usize, Partition), u64>) -> Result<u64> {
        if level == self.weight.len() {
            return Ok(u64::from(shape == self.target));
        }
        if let Some(&v) = memo.get(&(level, shape.clone())) {
            return Ok(v);
        }
        let mut total = 0;
        for next in self.children(level, shape)? {
            total += self.count(level + 1, &next, memo)?;
        }
        memo.insert((level, shape.clone()), total);
        Ok(total)
    }
}

fn chain_to_tableau(target: &Partition, chain: &[Partition]) -> Tableau {
    let mut rows: Vec<Vec<usize>> = target.parts().iter().map(|&p| vec![0; p]).collect();
    let mut prev = Partition::empty();
    for (idx, shape) in chain.iter().enumerate() {
        for i in 1..=shape.len() {
            for j in prev.row(i) + 1..=shape.row(i) {
                rows[i - 1][j - 1] = idx + 1;
            }
        }
        prev = shape.clone();
    }
    Tableau { rows }
}

fn check_bounded_size(lambda: &Partition, alpha: &[usize], k: usize) -> Result<()> {
    if !lambda.is_k_bounded(k) {
        return Err(Error::NotKBounded(lambda.clone(), k));
    }
    let total: usize = alpha.iter().sum();
    if total != lambda.size() {
        return Err(Error::IncomparableSizes(lambda.size(), total));
    }
    Ok(())
}

/// Every k-SSYT of shape `𝔠(λ)` and k-weight `α`, sorted by their entries
/// read row by row from the bottom.
pub fn enumerate_kssyts(lambda: &Partition, alpha: &[usize], k: usize, budget: u64) -> Result<Vec<KSsyt>> {
    check_bounded_size(lambda, alpha, k)?;
    let core = core_of(lambda, k)?;
    let mut search = ChainSearch { target: &core, weight: alpha, rule: StripRule::Residues(k), budget, nodes: 0 };
    let mut chains = Vec::new();
    search.enumerate(0, &Partition::empty(), &mut Vec::new(), &mut chains)?;
    let mut out: Vec<KSsyt> = chains
        .iter()
        .map(|chain| KSsyt { tableau: chain_to_tableau(&core, chain), k, k_weight: alpha.to_vec() })
        .collect();
    out.sort_by(|a, b| a.tableau.row_major().cmp(b.tableau.row_major()));
    Ok(out)
}

type KostkaKey = (Partition, Vec<usize>, usize);

fn k_kostka_memo() -> &'static Mutex<HashMap<KostkaKey, u64>> {
    static MEMO: OnceLock<Mutex<HashMap<KostkaKey, u64>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `K^{(k)}_{λ,α}`: the number of k-SSYTs of shape `𝔠(λ)` and k-weight `α`.
pub fn k_kostka(lambda: &Partition, alpha: &[usize], k: usize) -> Result<u64> {
    k_kostka_with_budget(lambda, alpha, k, DEFAULT_BUDGET)
}

pub fn k_kostka_with_budget(lambda: &Partition, alpha: &[usize], k: usize, budget: u64) -> Result<u64> {
    check_bounded_size(lambda, alpha, k)?;
    let key = (lambda.clone(), alpha.to_vec(), k);
    if let Some(&v) = k_kostka_memo().lock().expect("memo poisoned").get(&key) {
        return Ok(v);
    }
    let core = bounded_to_core(lambda, k)?.core.into_shape();
    let mut search = ChainSearch { target: &core, weight: alpha, rule: StripRule::Residues(k), budget, nodes: 0 };
    let count = search.count(0, &Partition::empty(), &mut HashMap::new())?;
    k_kostka_memo().lock().expect("memo poisoned").insert(key, count);
    Ok(count)
}

/// `K_{λ,μ}`: the number of SSYTs of shape `λ` and weight `μ`.
pub fn kostka(lambda: &Partition, mu: &[usize]) -> Result<u64> {
    kostka_with_budget(lambda, mu, DEFAULT_BUDGET)
}

pub fn kostka_with_budget(lambda: &Partition, mu: &[usize], budget: u64) -> Result<u64> {
    let total: usize = mu.iter().sum();
    if total != lambda.size() {
        return Err(Error::IncomparableSizes(lambda.size(), total));
    }
    let mut search = ChainSearch { target: lambda, weight: mu, rule: StripRule::Size, budget, nodes: 0 };
    search.count(0, &Partition::empty(), &mut HashMap::new())
}

/// Every SSYT of shape `λ` and weight `μ`, in row-major order of entries.
pub fn enumerate_ssyts(lambda: &Partition, mu: &[usize], budget: u64) -> Result<Vec<Tableau>> {
    let total: usize = mu.iter().sum();
    if total != lambda.size() {
        return Err(Error::IncomparableSizes(lambda.size(), total));
    }
    let mut search = ChainSearch { target: lambda, weight: mu, rule: StripRule::Size, budget, nodes: 0 };
    let mut chains = Vec::new();
    search.enumerate(0, &Partition::empty(), &mut Vec::new(), &mut chains)?;
    let mut out: Vec<Tableau> = chains.iter().map(|c| chain_to_tableau(lambda, c)).collect();
    out.sort_by(|a, b| a.row_major().cmp(b.row_major()));
    Ok(out)
}

/// True iff the cells holding each letter form a horizontal strip (at most
/// one per column).
pub fn letters_form_horizontal_strips(t: &Tableau) -> bool {
    (1..=t.max_letter()).all(|letter| {
        let cols: Vec<usize> = t.cells_of(letter).iter().map(|c| c.col).collect();
        let distinct: BTreeSet<usize> = cols.iter().copied().collect();
        distinct.len() == cols.len()
    })
}
