//! Integer partitions in French convention: row 1 is the bottom row, columns
//! are counted from the left, both 1-indexed.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// never stored, so structural equality is equality of partitions.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell `(row, col)` of a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

/// Weight vector; zeros are allowed anywhere.
pub type Composition = Vec<usize>;

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Panicking constructor for literals known to be valid.
    pub fn from_slice(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("parts must be weakly decreasing")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i` (1-indexed); zero beyond the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.row(1)
    }

    pub fn is_k_bounded(&self, k: usize) -> bool {
        self.first() <= k
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.row(c.row)
    }

    /// Diagram inclusion.
    pub fn contains_partition(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// All cells, row by row from the bottom, left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    /// Length of column `j`.
    pub fn column(&self, j: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    /// `λ - e_r`, if that is again a partition.
    pub fn decrement_row(&self, r: usize) -> Option<Partition> {
        if r == 0 || r > self.len() || self.row(r) <= self.row(r + 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[r - 1] -= 1;
        Partition::new(parts).ok()
    }

    /// Prefix sums padded to `len` entries.
    fn prefix_sums(&self, len: usize) -> Vec<usize> {
        let mut acc = 0;
        (1..=len)
            .map(|i| {
                acc += self.row(i);
                acc
            })
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// Parses a comma-separated list of unsigned integers, optionally wrapped in
/// brackets. Whitespace is ignored. Positions in errors are byte offsets.
pub(crate) fn parse_uint_list(s: &str) -> Result<Vec<usize>> {
    parse_list(s, "a nonnegative integer")
}

/// Parses `[a,b,c]` or `a,b,c`, reporting byte positions on failure.
pub(crate) fn parse_list<T: FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    let trimmed = s.trim();
    let offset = s.len() - s.trim_start().len();
    let (body, base) = match (trimmed.strip_prefix('['), trimmed.ends_with(']')) {
        (Some(rest), true) => (&rest[..rest.len() - 1], offset + 1),
        (Some(_), false) => {
            return Err(Error::Parse { pos: offset + trimmed.len(), msg: "missing ']'".into() })
        }
        (None, true) => return Err(Error::Parse { pos: offset, msg: "missing '['".into() }),
        (None, false) => (trimmed, offset),
    };
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = base;
    for piece in body.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let tok = piece.trim();
        let value = tok.parse::<T>().map_err(|_| Error::Parse {
            pos: pos + lead,
            msg: format!("expected {what}, found {tok:?}"),
        })?;
        out.push(value);
        pos += piece.len() + 1;
    }
    Ok(out)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_uint_list(s)?)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `λ'` with `λ'_j = #{i : λ_i >= j}`.
pub fn conjugate(lambda: &Partition) -> Partition {
    let parts = (1..=lambda.first()).map(|j| lambda.column(j)).collect();
    Partition { parts }
}

/// `μ ⊴ λ`: every prefix sum of `μ` is at most the matching prefix sum of `λ`.
pub fn dominates(mu: &Partition, lambda: &Partition) -> Result<bool> {
    Ok(dominance_violation(mu, lambda)?.is_none())
}

/// First prefix index (1-based) where `μ ⊴ λ` fails, with both prefix sums.
pub fn dominance_violation(
    mu: &Partition,
    lambda: &Partition,
) -> Result<Option<(usize, usize, usize)>> {
    if mu.size() != lambda.size() {
        return Err(Error::IncomparableSizes(mu.size(), lambda.size()));
    }
    let len = mu.len().max(lambda.len());
    let violation = mu
        .prefix_sums(len)
        .into_iter()
        .zip(lambda.prefix_sums(len))
        .enumerate()
        .find(|(_, (m, l))| m > l)
        .map(|(i, (m, l))| (i + 1, m, l));
    Ok(violation)
}

/// Arm + leg + 1.
pub fn hook_length(lambda: &Partition, c: Cell) -> Result<usize> {
    if !lambda.contains(c) {
        return Err(Error::CellOutside(c, lambda.clone()));
    }
    Ok(hook_unchecked(lambda, c))
}

pub(crate) fn hook_unchecked(lambda: &Partition, c: Cell) -> usize {
    let arm = lambda.row(c.row) - c.col;
    let leg = lambda.column(c.col) - c.row;
    arm + leg + 1
}

/// `(col - row) mod (k+1)`, normalized to `0..=k`.
pub fn residue(c: Cell, k: usize) -> usize {
    let modulus = (k + 1) as i64;
    (c.col as i64 - c.row as i64).rem_euclid(modulus) as usize
}

/// Number of cells `(x, col_a)` with `row_b <= x <= row_a` plus cells
/// `(row_b, y)` with `col_a < y <= col_b`, all inside `λ`.
pub fn h_between(lambda: &Partition, a: Cell, b: Cell) -> Result<usize> {
    for c in [a, b] {
        if !lambda.contains(c) {
            return Err(Error::CellOutside(c, lambda.clone()));
        }
    }
    if b.row > a.row || b.col < a.col {
        return Err(Error::NotSoutheast { a, b });
    }
    let vertical = (b.row..=a.row).filter(|&x| lambda.contains(Cell::new(x, a.col))).count();
    let horizontal =
        (a.col + 1..=b.col).filter(|&y| lambda.contains(Cell::new(b.row, y))).count();
    Ok(vertical + horizontal)
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Corners {
    pub top_cells: Vec<Cell>,
    pub removable: Vec<Cell>,
    pub addable: Vec<Cell>,
}

/// Top cells, removable corners and addable corners, each sorted by
/// `(row, col)`.
pub fn corners(lambda: &Partition) -> Corners {
    let top_cells: Vec<Cell> = lambda
        .cells()
        .filter(|c| !lambda.contains(Cell::new(c.row + 1, c.col)))
        .collect();
    let removable = top_cells
        .iter()
        .copied()
        .filter(|c| !lambda.contains(Cell::new(c.row, c.col + 1)))
        .collect();
    let addable = (1..=lambda.len() + 1)
        .map(|i| Cell::new(i, lambda.row(i) + 1))
        .filter(|c| c.row == 1 || lambda.row(c.row - 1) >= c.col)
        .collect();
    Corners { top_cells, removable, addable }
}

/// Removable corners only; cheaper than [`corners`].
pub fn removable_corners(lambda: &Partition) -> Vec<Cell> {
    (1..=lambda.len())
        .filter(|&i| lambda.row(i) > lambda.row(i + 1))
        .map(|i| Cell::new(i, lambda.row(i)))
        .collect()
}

/// Addable corners only.
pub fn addable_corners(lambda: &Partition) -> Vec<Cell> {
    corners(lambda).addable
}

/// `p(α)`: sort weakly decreasing and drop zeros.
pub fn sort_to_partition(alpha: &[usize]) -> Partition {
    let mut parts: Vec<usize> = alpha.iter().copied().filter(|&a| a > 0).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition { parts }
}

/// All partitions of `d` with largest part at most `max_part`, in
/// lexicographically decreasing order.
pub fn partitions_bounded(d: usize, max_part: usize) -> Vec<Partition> {
    fn rec(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, max_part, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `d`, lexicographically decreasing.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    partitions_bounded(d, d)
}

/// All weak compositions of `d` into exactly `n` parts, lexicographically
/// decreasing.
pub fn weak_compositions(d: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in (0..=rest).rev() {
            cur.push(a);
            rec(rest - a, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(d, n, &mut Vec::new(), &mut out);
    out
}
