//! Gelfand-Tsetlin patterns, markings, and the bijections `Υ` (to set-valued
//! tableaux) and `Ω` (to set-valued contratableaux).
//!
//! A pattern of size `n` is a triangle `x_{i,j}`, `1 ≤ j ≤ i ≤ n`, stored row
//! by row from the top (`x^{(1)}` first). A mark `(i, j)` sits on entry
//! `x_{i,j}` and is allowed only where `SE_{i,j} = x_{i−1,j} − x_{i,j+1} > 0`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::{CellSet, SetValuedFilling};

pub type Mark = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPattern")]
pub struct GtPattern {
    rows: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct RawPattern {
    rows: Vec<Vec<i64>>,
}

impl TryFrom<RawPattern> for GtPattern {
    type Error = Error;

    fn try_from(raw: RawPattern) -> Result<Self> {
        GtPattern::from_rows(raw.rows)
    }
}

impl GtPattern {
    /// A triangular array; row `i` (1-based) must have exactly `i` entries.
    /// The interlacing inequalities are not checked here, see [`validate`].
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        for (k, r) in rows.iter().enumerate() {
            if r.len() != k + 1 {
                return Err(Error::InvalidPattern(format!("row {} has {} entries", k + 1, r.len())));
            }
        }
        Ok(GtPattern { rows })
    }

    pub fn zero(n: usize) -> Self {
        GtPattern { rows: (1..=n).map(|i| vec![0; i]).collect() }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `x_{i,j}`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i - 1][j - 1]
    }

    pub(crate) fn get_mut(&mut self, i: usize, j: usize) -> &mut i64 {
        &mut self.rows[i - 1][j - 1]
    }

    /// Row `i` padded with zeros past `i` when read as a partition; `x^{(0)}`
    /// is empty.
    fn row_or_zero(&self, i: usize, j: usize) -> i64 {
        if i == 0 || j > i {
            0
        } else {
            self.get(i, j)
        }
    }

    pub fn ne(&self, i: usize, j: usize) -> i64 {
        self.get(i, j) - self.get(i - 1, j)
    }

    pub fn se(&self, i: usize, j: usize) -> i64 {
        self.get(i - 1, j) - self.get(i, j + 1)
    }

    /// The bottom row as a partition, if its entries are non-negative and
    /// weakly decreasing.
    pub fn shape(&self) -> Option<Partition> {
        let bottom = self.rows.last().map(|r| r.as_slice()).unwrap_or(&[]);
        let parts: Option<Vec<usize>> = bottom.iter().map(|&x| usize::try_from(x).ok()).collect();
        Partition::new(parts?).ok()
    }

    /// `x^{(i)}` as a partition (valid patterns only).
    pub fn row_partition(&self, i: usize) -> Partition {
        if i == 0 {
            return Partition::empty();
        }
        Partition::new(self.rows[i - 1].iter().map(|&x| x.max(0) as usize).collect())
            .unwrap_or_default()
    }
}

/// All NE and SE inequalities hold.
pub fn validate(x: &GtPattern) -> bool {
    let n = x.size();
    (2..=n).all(|i| (1..i).all(|j| x.ne(i, j) >= 0 && x.se(i, j) >= 0))
}

/// `{(i, j) : 1 ≤ j < i ≤ n, SE_{i,j}(X) > 0}`.
pub fn markable_positions(x: &GtPattern) -> BTreeSet<Mark> {
    let n = x.size();
    (2..=n)
        .flat_map(|i| (1..i).map(move |j| (i, j)))
        .filter(|&(i, j)| x.se(i, j) > 0)
        .collect()
}

/// `GT_ℤ(λ)`: every pattern of size `n` with bottom row `λ`, deterministic
/// order. Rows are generated from the bottom up, each as all partitions
/// interlacing the row below.
pub fn enumerate_gt(lambda: &Partition, n: usize) -> Result<Vec<GtPattern>> {
    if lambda.len() > n {
        return Err(Error::Domain(format!("l({lambda}) > n = {n}")));
    }
    fn interlacing(below: &[i64], j: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if j == below.len() - 1 {
            out.push(cur.clone());
            return;
        }
        // x_{i,j+1} ≤ x_{i−1,j} ≤ x_{i,j}
        for v in below[j + 1]..=below[j] {
            cur.push(v);
            interlacing(below, j + 1, cur, out);
            cur.pop();
        }
    }
    fn go(stack: &mut Vec<Vec<i64>>, out: &mut Vec<GtPattern>) {
        let top = stack.last().expect("non-empty");
        if top.len() == 1 {
            let mut rows = stack.clone();
            rows.reverse();
            out.push(GtPattern { rows });
            return;
        }
        let mut above = Vec::new();
        interlacing(top, 0, &mut Vec::new(), &mut above);
        for row in above {
            stack.push(row);
            go(stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(GtPattern::zero(0));
        return Ok(out);
    }
    let bottom: Vec<i64> = lambda.padded(n).into_iter().map(|p| p as i64).collect();
    go(&mut vec![bottom], &mut out);
    Ok(out)
}

/// A GT pattern with a set of marked positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMarked", into = "RawMarked")]
pub struct MarkedGtPattern {
    pattern: GtPattern,
    marks: BTreeSet<Mark>,
}

#[derive(Serialize, Deserialize)]
struct RawMarked {
    rows: Vec<Vec<i64>>,
    #[serde(default)]
    marks: Vec<[usize; 2]>,
}

impl TryFrom<RawMarked> for MarkedGtPattern {
    type Error = Error;

    fn try_from(raw: RawMarked) -> Result<Self> {
        let p = GtPattern::from_rows(raw.rows)?;
        MarkedGtPattern::new(p, raw.marks.into_iter().map(|[i, j]| (i, j)))
    }
}

impl From<MarkedGtPattern> for RawMarked {
    fn from(m: MarkedGtPattern) -> Self {
        RawMarked { rows: m.pattern.rows, marks: m.marks.into_iter().map(|(i, j)| [i, j]).collect() }
    }
}

impl MarkedGtPattern {
    /// Validates the pattern (interlacing, bottom row a partition) and that
    /// every mark sits on a position with positive SE slack.
    pub fn new(pattern: GtPattern, marks: impl IntoIterator<Item = Mark>) -> Result<Self> {
        if !validate(&pattern) {
            return Err(Error::InvalidPattern("NE/SE inequalities fail".into()));
        }
        if pattern.shape().is_none() {
            return Err(Error::InvalidPattern("bottom row is not a partition".into()));
        }
        let allowed = markable_positions(&pattern);
        let marks: BTreeSet<Mark> = marks.into_iter().collect();
        if let Some(&(i, j)) = marks.iter().find(|m| !allowed.contains(m)) {
            return Err(Error::InvalidMark(i, j));
        }
        Ok(MarkedGtPattern { pattern, marks })
    }

    pub fn unmarked(pattern: GtPattern) -> Result<Self> {
        MarkedGtPattern::new(pattern, [])
    }

    pub fn pattern(&self) -> &GtPattern {
        &self.pattern
    }

    pub fn marks(&self) -> &BTreeSet<Mark> {
        &self.marks
    }

    pub fn size(&self) -> usize {
        self.pattern.size()
    }

    pub fn shape(&self) -> Partition {
        self.pattern.shape().expect("validated on construction")
    }
}

/// `MGT(X)`: `X` with every subset of its markable positions, `∅` included.
pub fn marked_patterns(x: &GtPattern) -> Vec<MarkedGtPattern> {
    let positions: Vec<Mark> = markable_positions(x).into_iter().collect();
    (0u64..1 << positions.len())
        .map(|bits| {
            let marks = positions.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, &m)| m);
            MarkedGtPattern::new(x.clone(), marks).expect("marks are markable")
        })
        .collect()
}

/// `MGT_ℤ(λ)`.
pub fn enumerate_mgt(lambda: &Partition, n: usize) -> Result<Vec<MarkedGtPattern>> {
    Ok(enumerate_gt(lambda, n)?.iter().flat_map(marked_patterns).collect())
}

fn strip_marks(m: &MarkedGtPattern, i: usize) -> impl Iterator<Item = usize> + '_ {
    m.marks.range((i, 0)..(i + 1, 0)).map(|&(_, j)| j)
}

/// `Υ`: for `i = 1..n`, put `{i}` in every cell of `x^{(i)}/x^{(i−1)}`, and
/// for each mark `(i, j)` add `i` to the rightmost cell of row `j` of
/// `X^{(i−1)}`. The result is a set-valued tableau of straight shape `x^{(n)}`.
pub fn upsilon(m: &MarkedGtPattern) -> Result<SetValuedFilling> {
    let x = &m.pattern;
    let n = x.size();
    let mut rows: Vec<Vec<CellSet>> = vec![Vec::new(); n];
    for i in 1..=n {
        for j in strip_marks(m, i) {
            let cell = rows[j - 1].last_mut().ok_or(Error::InvalidMark(i, j))?;
            if cell.max() > i as u32 - 1 {
                return Err(Error::InvalidMark(i, j));
            }
            cell.insert(i as u32);
        }
        for j in 1..=i {
            let (from, to) = (x.row_or_zero(i - 1, j), x.get(i, j));
            for _ in from..to {
                rows[j - 1].push(CellSet::singleton(i as u32));
            }
        }
    }
    let shape = m.shape();
    rows.truncate(shape.len());
    SetValuedFilling::new(SkewShape::straight(shape), rows)
}

/// Inverse of [`upsilon`]: `x^{(i)}` is the shape of the cells whose minimum
/// is at most `i`; `(i, j)` is marked when `i` is a non-minimal entry of a
/// cell in row `j`.
pub fn upsilon_inverse(f: &SetValuedFilling, n: usize) -> Result<MarkedGtPattern> {
    let shape = f.shape();
    if !shape.is_straight() {
        return Err(Error::NotStraightShape(shape.inner().clone()));
    }
    check_input(f, n)?;
    if shape.num_rows() > n {
        return Err(Error::Domain(format!("{} rows exceed n = {n}", shape.num_rows())));
    }
    let rows = (1..=n)
        .map(|i| {
            (1..=i)
                .map(|j| match f.rows().get(j - 1) {
                    Some(row) => row.iter().filter(|c| c.min() as usize <= i).count() as i64,
                    None => 0,
                })
                .collect()
        })
        .collect();
    let mut marks = Vec::new();
    for (k, row) in f.rows().iter().enumerate() {
        for c in row {
            marks.extend(c.iter().skip(1).map(|v| (v as usize, k + 1)));
        }
    }
    MarkedGtPattern::new(GtPattern::from_rows(rows)?, marks)
}

/// `Ω`: for `i = 1..n`, fill every cell of `C(y^{(i)})/C(y^{(i−1)})` with
/// `n+1−i`, and for each mark `(i, j)` add `n+1−i` to the leftmost cell of
/// row `j` from the bottom of `Y^{(i−1)}`. The result is a set-valued
/// contratableau of shape `y^{(n)}`.
pub fn omega(m: &MarkedGtPattern) -> Result<SetValuedFilling> {
    let y = &m.pattern;
    let n = y.size();
    // rows from the bottom, each listed right to left
    let mut rows: Vec<Vec<CellSet>> = vec![Vec::new(); n];
    for i in 1..=n {
        let val = (n + 1 - i) as u32;
        for j in strip_marks(m, i) {
            let cell = rows[j - 1].last_mut().ok_or(Error::InvalidMark(i, j))?;
            if cell.min() < val + 1 {
                return Err(Error::InvalidMark(i, j));
            }
            cell.insert(val);
        }
        for j in 1..=i {
            let (from, to) = (y.row_or_zero(i - 1, j), y.get(i, j));
            for _ in from..to {
                rows[j - 1].push(CellSet::singleton(val));
            }
        }
    }
    let lambda = m.shape();
    rows.truncate(lambda.len());
    let top_down = rows
        .into_iter()
        .rev()
        .map(|mut r| {
            r.reverse();
            r
        })
        .collect();
    SetValuedFilling::rotated(lambda, top_down)
}

/// Inverse of [`omega`]: `y^{(i)}` is read off the cells whose maximum is at
/// least `n+1−i`, rows counted from the bottom; `(n+1−v, r)` is marked when
/// `v` is a non-maximal entry of a cell in row `r` from the bottom.
pub fn omega_inverse(s: &SetValuedFilling, n: usize) -> Result<MarkedGtPattern> {
    let lambda = s.shape().as_rotated().ok_or(Error::NotRotatedShape)?;
    if let Some(tag) = s.rotated_of() {
        if *tag != lambda {
            return Err(Error::NotRotatedShape);
        }
    }
    check_input(s, n)?;
    let h = lambda.len();
    if h > n {
        return Err(Error::Domain(format!("l({lambda}) exceeds n = {n}")));
    }
    let from_bottom = |r: usize| -> &[CellSet] {
        if r > h {
            &[]
        } else {
            &s.rows()[h - r]
        }
    };
    let rows = (1..=n)
        .map(|i| {
            let threshold = (n + 1 - i) as u32;
            (1..=i).map(|r| from_bottom(r).iter().filter(|c| c.max() >= threshold).count() as i64).collect()
        })
        .collect();
    let mut marks = Vec::new();
    for r in 1..=h {
        for c in from_bottom(r) {
            let top = c.max();
            marks.extend(c.iter().filter(|&v| v < top).map(|v| (n + 1 - v as usize, r)));
        }
    }
    MarkedGtPattern::new(GtPattern::from_rows(rows)?, marks)
}

fn check_input(f: &SetValuedFilling, n: usize) -> Result<()> {
    if !f.is_semistandard() {
        return Err(Error::Domain(format!("filling {f} is not semistandard")));
    }
    let top = f.max_entry();
    if top as usize > n {
        return Err(Error::EntryOutOfRange(top, n as u32));
    }
    Ok(())
}

/// `wt(Ω(X, M))` is `wt(Υ(X, M))` read backwards.
pub fn weight_reversal_check(m: &MarkedGtPattern) -> Result<bool> {
    let up = upsilon(m)?.weight();
    let om = omega(m)?.weight();
    Ok(om == up.reversed(m.size()))
}
