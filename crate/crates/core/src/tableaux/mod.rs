//! Set-valued fillings of skew and rotated shapes.

mod enumerate;
mod word;

pub use enumerate::{enumerate_svt, SvtEnumerator, SvtIter};
pub use word::{column_word, is_dominant, is_lambda_dominant, row_word, superstandard, Word};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{rotate, Partition, SkewShape};

/// Largest value a cell may hold.
pub const MAX_ENTRY: u32 = 64;

/// A non-empty set of values in `1..=64`, as a bitmask (bit `v−1` ↔ value `v`).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CellSet(u64);

impl CellSet {
    pub fn singleton(v: u32) -> Self {
        assert!((1..=MAX_ENTRY).contains(&v), "cell value {v} out of range");
        CellSet(1u64 << (v - 1))
    }

    pub fn from_values(values: &[u32]) -> Result<Self> {
        let mut bits = 0u64;
        for &v in values {
            if !(1..=MAX_ENTRY).contains(&v) {
                return Err(Error::EntryOutOfRange(v, MAX_ENTRY));
            }
            bits |= 1u64 << (v - 1);
        }
        if bits == 0 {
            return Err(Error::MalformedFilling("empty cell".into()));
        }
        Ok(CellSet(bits))
    }

    pub(crate) fn from_bits(bits: u64) -> Self {
        debug_assert!(bits != 0);
        CellSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn min(self) -> u32 {
        self.0.trailing_zeros() + 1
    }

    pub fn max(self) -> u32 {
        64 - self.0.leading_zeros()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_singleton(self) -> bool {
        self.0.is_power_of_two()
    }

    pub fn contains(self, v: u32) -> bool {
        (1..=MAX_ENTRY).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: u32) {
        self.0 |= CellSet::singleton(v).0;
    }

    /// Values in increasing order.
    pub fn iter(self) -> impl DoubleEndedIterator<Item = u32> {
        (1..=MAX_ENTRY).filter(move |&v| self.0 & (1u64 << (v - 1)) != 0)
    }

    pub fn values(self) -> Vec<u32> {
        self.iter().collect()
    }
}

impl fmt::Debug for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", vals.join(","))
    }
}

/// Multiplicities of values: entry `i−1` counts the value `i`. Trailing
/// zeros are stripped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct WeightVector(Vec<usize>);

impl WeightVector {
    pub fn new(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        WeightVector(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// Multiplicity of value `i` (1-based).
    pub fn get(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Largest value with non-zero multiplicity.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `(α_n, …, α_1)` for this weight read as an `n`-tuple.
    pub fn reversed(&self, n: usize) -> WeightVector {
        let mut v: Vec<usize> = (1..=n).map(|i| self.get(i)).collect();
        v.reverse();
        WeightVector::new(v)
    }
}

impl From<Vec<usize>> for WeightVector {
    fn from(v: Vec<usize>) -> Self {
        WeightVector::new(v)
    }
}

impl From<WeightVector> for Vec<usize> {
    fn from(w: WeightVector) -> Vec<usize> {
        w.0
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A filling of a skew shape by non-empty sets of positive integers.
///
/// `rows[i]` holds the cells of row `i+1` from left to right. Fillings of a
/// rotated shape `C(λ)` carry `rotated_of = Some(λ)` so that the bottom-up
/// row convention survives serialization.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFilling", into = "RawFilling")]
pub struct SetValuedFilling {
    shape: SkewShape,
    rows: Vec<Vec<CellSet>>,
    rotated_of: Option<Partition>,
}

impl SetValuedFilling {
    pub fn new(shape: SkewShape, rows: Vec<Vec<CellSet>>) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(Error::MalformedFilling(format!(
                "shape {shape} has {} rows, got {}",
                shape.num_rows(),
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(i + 1) {
                return Err(Error::MalformedFilling(format!(
                    "row {} of shape {shape} has {} cells, got {}",
                    i + 1,
                    shape.row_len(i + 1),
                    row.len()
                )));
            }
        }
        Ok(SetValuedFilling { shape, rows, rotated_of: None })
    }

    /// A filling of `C(λ)` given its rows top-to-bottom, left-to-right.
    pub fn rotated(lambda: Partition, rows: Vec<Vec<CellSet>>) -> Result<Self> {
        let shape = rotate(lambda.clone()).skew();
        let mut f = SetValuedFilling::new(shape, rows)?;
        f.rotated_of = Some(lambda);
        Ok(f)
    }

    /// Builds a filling from nested value lists (rows top-to-bottom).
    pub fn from_values(shape: SkewShape, rows: &[Vec<Vec<u32>>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|c| CellSet::from_values(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        SetValuedFilling::new(shape, rows)
    }

    pub fn empty(shape: SkewShape) -> Result<Self> {
        if shape.size() != 0 {
            return Err(Error::MalformedFilling("shape is not empty".into()));
        }
        let rows = vec![Vec::new(); shape.num_rows()];
        SetValuedFilling::new(shape, rows)
    }

    pub(crate) fn with_rotated_of(mut self, lambda: Option<Partition>) -> Self {
        self.rotated_of = lambda;
        self
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<CellSet>] {
        &self.rows
    }

    pub fn rotated_of(&self) -> Option<&Partition> {
        self.rotated_of.as_ref()
    }

    /// The entry of cell `(i, j)`, if the cell belongs to the shape.
    pub fn get(&self, (i, j): (usize, usize)) -> Option<CellSet> {
        if !self.shape.contains_cell((i, j)) {
            return None;
        }
        let first = self.shape.row_span(i).0;
        Some(self.rows[i - 1][j - first])
    }

    /// Cells paired with their entries, row-major.
    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), CellSet)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(k, row)| {
            let first = self.shape.row_span(k + 1).0;
            row.iter().enumerate().map(move |(c, &s)| ((k + 1, first + c), s))
        })
    }

    /// Rows weakly increase (`max A ≤ min B`), columns strictly increase
    /// (`max A < min B`).
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|row| row.windows(2).all(|w| w[0].max() <= w[1].min()));
        rows_ok
            && self.cells().all(|((i, j), a)| match self.get((i + 1, j)) {
                Some(b) => a.max() < b.min(),
                None => true,
            })
    }

    pub fn weight(&self) -> WeightVector {
        let mut counts = vec![0usize; self.max_entry() as usize];
        for (_, s) in self.cells() {
            for v in s.iter() {
                counts[v as usize - 1] += 1;
            }
        }
        WeightVector::new(counts)
    }

    /// `|T|`, the total number of entries.
    pub fn total_entries(&self) -> usize {
        self.cells().map(|(_, s)| s.len()).sum()
    }

    /// Largest entry, or 0 for an empty filling.
    pub fn max_entry(&self) -> u32 {
        self.cells().map(|(_, s)| s.max()).max().unwrap_or(0)
    }

    pub fn is_all_singletons(&self) -> bool {
        self.cells().all(|(_, s)| s.is_singleton())
    }
}

impl fmt::Display for SetValuedFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, " / ")?;
            }
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            write!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RawFilling {
    outer: Partition,
    #[serde(default)]
    inner: Partition,
    rows: Vec<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rotated_of: Option<Partition>,
}

impl TryFrom<RawFilling> for SetValuedFilling {
    type Error = Error;

    fn try_from(raw: RawFilling) -> Result<Self> {
        let shape = crate::shapes::skew(raw.outer, raw.inner)?;
        if let Some(lambda) = &raw.rotated_of {
            if rotate(lambda.clone()).skew() != shape {
                return Err(Error::NotRotatedShape);
            }
        }
        let f = SetValuedFilling::from_values(shape, &raw.rows)?;
        Ok(f.with_rotated_of(raw.rotated_of))
    }
}

impl From<SetValuedFilling> for RawFilling {
    fn from(f: SetValuedFilling) -> Self {
        RawFilling {
            outer: f.shape.outer().clone(),
            inner: f.shape.inner().clone(),
            rows: f.rows.iter().map(|r| r.iter().map(|c| c.values()).collect()).collect(),
            rotated_of: f.rotated_of,
        }
    }
}
