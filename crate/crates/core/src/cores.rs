//! (k+1)-cores, the bijection with k-bounded partitions, and the action of
//! the affine generators on cores.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::partitions::{self, hook_unchecked, residue, Cell, Partition};

/// A partition with no cell of hook length `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Core {
    shape: Partition,
    k: usize,
}

impl Core {
    pub fn new(shape: Partition, k: usize) -> Result<Self> {
        if !is_core(&shape, k) {
            return Err(Error::NotCore(shape, k + 1));
        }
        Ok(Core { shape, k })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn into_shape(self) -> Partition {
        self.shape
    }
}

/// Output of the row-sliding construction of `𝔠(λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreConstruction {
    pub core: Core,
    pub bounded: Partition,
    /// `shifts[i-1]` is how far row `i` of `λ` was slid to the right.
    pub shifts: Vec<usize>,
    /// The inner shape `ρ`; `γ/ρ` is the slid copy of `λ`.
    pub inner: Partition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorMode {
    Remove,
    Add,
}

pub fn is_core(lambda: &Partition, k: usize) -> bool {
    lambda.cells().all(|c| hook_unchecked(lambda, c) != k + 1)
}

/// `𝔭(γ)`: row `i` counts the cells of row `i` with hook length at most `k`.
pub fn core_to_bounded(core: &Core) -> Partition {
    let gamma = core.shape();
    let parts = (1..=gamma.len())
        .map(|i| {
            (1..=gamma.row(i))
                .filter(|&j| hook_unchecked(gamma, Cell::new(i, j)) <= core.k)
                .count()
        })
        .collect();
    // rows of a core's k-bounded part are weakly decreasing
    Partition::new(parts).expect("core_to_bounded on a core yields a partition")
}

/// `𝔠(λ)`: slide rows from the top down, each by the least amount (at least
/// the shift of the row above) leaving no hook longer than `k` in the partial
/// skew diagram.
pub fn bounded_to_core(lambda: &Partition, k: usize) -> Result<CoreConstruction> {
    if !lambda.is_k_bounded(k) {
        return Err(Error::NotKBounded(lambda.clone(), k));
    }
    let ell = lambda.len();
    let mut shifts = vec![0usize; ell];
    for i in (1..=ell).rev() {
        let len = lambda.row(i);
        let mut t = if i == ell { 0 } else { shifts[i] };
        loop {
            // cells of rows above occupying column c: rows r > i with t_r < c <= t_r + λ_r
            let column_above = |c: usize| {
                (i + 1..=ell)
                    .filter(|&r| shifts[r - 1] < c && c <= shifts[r - 1] + lambda.row(r))
                    .count()
            };
            // the leftmost cell carries the longest hook in its row
            let c = t + 1;
            let hook = (len - 1) + column_above(c) + 1;
            if hook <= k {
                break;
            }
            t += 1;
        }
        shifts[i - 1] = t;
    }
    let outer = Partition::new((1..=ell).map(|i| shifts[i - 1] + lambda.row(i)).collect())?;
    let inner = Partition::new(shifts.clone())?;
    let core = Core::new(outer, k)?;
    Ok(CoreConstruction { core, bounded: lambda.clone(), shifts, inner })
}

/// Shorthand for the shape of `𝔠(λ)`.
pub fn core_of(lambda: &Partition, k: usize) -> Result<Partition> {
    Ok(bounded_to_core(lambda, k)?.core.into_shape())
}

/// `s_i` acting on a core: remove every removable corner of residue `i`, or
/// add every addable corner of residue `i`.
pub fn apply_generator(core: &Core, i: usize, mode: GeneratorMode) -> Result<Core> {
    let k = core.k;
    if i > k {
        return Err(Error::ResidueOutOfRange(i, k));
    }
    let gamma = core.shape();
    let mut parts: Vec<usize> = gamma.parts().to_vec();
    match mode {
        GeneratorMode::Remove => {
            for c in partitions::removable_corners(gamma) {
                if residue(c, k) == i {
                    parts[c.row - 1] -= 1;
                }
            }
        }
        GeneratorMode::Add => {
            for c in partitions::addable_corners(gamma) {
                if residue(c, k) == i {
                    if c.row > parts.len() {
                        parts.push(0);
                    }
                    parts[c.row - 1] += 1;
                }
            }
        }
    }
    Core::new(Partition::new(parts)?, k)
}

/// `R(i)` for each row `i` (index 0 is row 1): the residues of the top cells
/// in that row of the core.
pub fn row_residue_sets(cc: &CoreConstruction) -> Vec<BTreeSet<usize>> {
    let gamma = cc.core.shape();
    let k = cc.core.k;
    (1..=gamma.len())
        .map(|i| {
            (gamma.row(i + 1) + 1..=gamma.row(i))
                .map(|j| residue(Cell::new(i, j), k))
                .collect()
        })
        .collect()
}

/// All `(k+1)`-cores of size at most `max_size`.
pub fn cores_up_to(max_size: usize, k: usize) -> Vec<Core> {
    (0..=max_size)
        .flat_map(partitions::partitions_of)
        .filter(|p| is_core(p, k))
        .map(|p| Core { shape: p, k })
        .collect()
}
