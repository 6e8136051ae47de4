//! Exhaustive enumeration of semistandard set-valued fillings.
//!
//! Cells are visited row-major. Each cell's candidates are bitmasks over the
//! alphabet in increasing numeric order, restricted to sets whose minimum
//! clears the already-fixed left and upper neighbours.

use super::{CellSet, SetValuedFilling, WeightVector};
use crate::shapes::{Partition, SkewShape};

/// Configuration for an enumeration over `SVT_n(shape)`.
#[derive(Clone, Debug)]
pub struct SvtEnumerator {
    shape: SkewShape,
    n: u32,
    weight: Option<WeightVector>,
    singletons: bool,
    max_total: Option<usize>,
    rotated_of: Option<Partition>,
}

impl SvtEnumerator {
    /// All set-valued fillings of `shape` with entries in `1..=n`.
    pub fn new(shape: SkewShape, n: u32) -> Self {
        assert!(n <= super::MAX_ENTRY, "alphabet larger than {}", super::MAX_ENTRY);
        SvtEnumerator { shape, n, weight: None, singletons: false, max_total: None, rotated_of: None }
    }

    /// Keep only fillings of exactly this weight. Values past `w.len()`
    /// cannot occur, so the alphabet shrinks to `min(n, w.len())`.
    pub fn weight(mut self, w: WeightVector) -> Self {
        self.weight = Some(w);
        self
    }

    /// Restrict to all-singleton fillings (semistandard Young tableaux).
    pub fn singletons(mut self, yes: bool) -> Self {
        self.singletons = yes;
        self
    }

    /// Drop fillings with more than `t` entries in total.
    pub fn max_total(mut self, t: usize) -> Self {
        self.max_total = Some(t);
        self
    }

    /// Tag emitted fillings as fillings of `C(λ)`.
    pub fn rotated_of(mut self, lambda: Partition) -> Self {
        self.rotated_of = Some(lambda);
        self
    }

    pub fn iter(&self) -> SvtIter {
        SvtIter::new(self)
    }

    pub fn count(&self) -> usize {
        self.iter().count()
    }
}

/// `SVT_n(shape)`, optionally restricted to one weight and/or to singletons.
pub fn enumerate_svt(
    shape: SkewShape,
    n: u32,
    weight_filter: Option<WeightVector>,
    singletons: bool,
) -> SvtIter {
    let mut e = SvtEnumerator::new(shape, n).singletons(singletons);
    if let Some(w) = weight_filter {
        e = e.weight(w);
    }
    e.iter()
}

#[derive(Clone, Copy)]
struct Slot {
    row: usize,
    left: Option<usize>,
    above: Option<usize>,
}

/// Depth-first backtracking stream over fillings.
pub struct SvtIter {
    shape: SkewShape,
    rotated_of: Option<Partition>,
    slots: Vec<Slot>,
    alphabet: u32,
    singletons: bool,
    target: Option<Vec<usize>>,
    target_total: usize,
    max_total: Option<usize>,
    masks: Vec<u64>,
    usage: Vec<usize>,
    total: usize,
    pos: usize,
    done: bool,
}

impl SvtIter {
    fn new(cfg: &SvtEnumerator) -> Self {
        let cells = cfg.shape.cells();
        let index = |c: (usize, usize)| cells.iter().position(|&d| d == c);
        let slots = cells
            .iter()
            .map(|&(i, j)| Slot {
                row: i,
                left: if j > 1 { index((i, j - 1)) } else { None },
                above: if i > 1 { index((i - 1, j)) } else { None },
            })
            .collect();
        let alphabet = match &cfg.weight {
            Some(w) => cfg.n.min(w.len() as u32),
            None => cfg.n,
        };
        // a positive target weight on a value outside the alphabet is unreachable
        let unreachable = cfg.weight.as_ref().is_some_and(|w| w.len() as u32 > cfg.n);
        SvtIter {
            shape: cfg.shape.clone(),
            rotated_of: cfg.rotated_of.clone(),
            masks: vec![0; cells.len()],
            slots,
            alphabet,
            singletons: cfg.singletons,
            target_total: cfg.weight.as_ref().map_or(0, |w| w.total()),
            target: cfg.weight.as_ref().map(|w| w.counts().to_vec()),
            max_total: cfg.max_total,
            usage: vec![0; alphabet as usize],
            total: 0,
            pos: 0,
            done: unreachable,
        }
    }

    fn lower_bound(&self, k: usize) -> u32 {
        let s = self.slots[k];
        let left = s.left.map_or(1, |l| CellSet::from_bits(self.masks[l]).max());
        let above = s.above.map_or(1, |a| CellSet::from_bits(self.masks[a]).max() + 1);
        left.max(above)
    }

    fn feasible(&self, k: usize, mask: u64) -> bool {
        let size = mask.count_ones() as usize;
        let remaining = self.slots.len() - k - 1;
        let new_total = self.total + size;
        if let Some(cap) = self.max_total {
            if new_total + remaining > cap {
                return false;
            }
        }
        if let Some(target) = &self.target {
            let mut bits = mask;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                if self.usage[v] + 1 > target[v] {
                    return false;
                }
                bits &= bits - 1;
            }
            let Some(left) = self.target_total.checked_sub(new_total) else {
                return false;
            };
            let per_cell = if self.singletons { 1 } else { self.alphabet as usize };
            if left < remaining || left > remaining * per_cell {
                return false;
            }
        }
        true
    }

    /// Next feasible candidate for cell `k` strictly after `prev` (0 = start).
    fn next_candidate(&self, k: usize, prev: u64) -> Option<u64> {
        let lb = self.lower_bound(k);
        if lb > self.alphabet {
            return None;
        }
        let limit = 1u64 << self.alphabet;
        let step = 1u64 << (lb - 1);
        let mut m = if prev == 0 {
            step
        } else if self.singletons {
            prev << 1
        } else {
            // every admissible mask is a multiple of `step`
            prev + step
        };
        while m < limit {
            if self.feasible(k, m) {
                return Some(m);
            }
            m = if self.singletons { m << 1 } else { m + step };
        }
        None
    }

    fn apply(&mut self, mask: u64, sign: bool) {
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            if sign {
                self.usage[v] += 1;
            } else {
                self.usage[v] -= 1;
            }
            bits &= bits - 1;
        }
        let size = mask.count_ones() as usize;
        if sign {
            self.total += size;
        } else {
            self.total -= size;
        }
    }

    fn build(&self) -> SetValuedFilling {
        let mut rows: Vec<Vec<CellSet>> = vec![Vec::new(); self.shape.num_rows()];
        for (slot, &m) in self.slots.iter().zip(&self.masks) {
            rows[slot.row - 1].push(CellSet::from_bits(m));
        }
        SetValuedFilling::new(self.shape.clone(), rows)
            .expect("enumerated rows match the shape")
            .with_rotated_of(self.rotated_of.clone())
    }
}

impl Iterator for SvtIter {
    type Item = SetValuedFilling;

    fn next(&mut self) -> Option<SetValuedFilling> {
        if self.done {
            return None;
        }
        if self.slots.is_empty() {
            self.done = true;
            return (self.target_total == 0).then(|| self.build());
        }
        loop {
            let k = self.pos;
            let prev = self.masks[k];
            if prev != 0 {
                self.apply(prev, false);
            }
            match self.next_candidate(k, prev) {
                Some(m) => {
                    self.masks[k] = m;
                    self.apply(m, true);
                    if k + 1 == self.slots.len() {
                        return Some(self.build());
                    }
                    self.pos += 1;
                    self.masks[self.pos] = 0;
                }
                None => {
                    self.masks[k] = 0;
                    if k == 0 {
                        self.done = true;
                        return None;
                    }
                    self.pos -= 1;
                }
            }
        }
    }
}
