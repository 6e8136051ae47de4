//! Partitions, Young and skew diagrams, and the rotated diagrams `C(λ)`.
//!
//! Cells are addressed `(row, col)`, both 1-based, rows counted from the top
//! (English notation).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of non-negative integers, stored without
/// trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The non-zero parts.
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of strictly positive parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The 1-based part `λ_i`; zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n` (or longer if `l(λ) > n`).
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        v
    }

    /// True iff `inner ⊆ self` componentwise.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// `self − other` componentwise over the first `max(l)` positions, or
    /// `None` when a component would be negative.
    pub fn checked_sub(&self, other: &Partition) -> Option<Vec<usize>> {
        let len = self.len().max(other.len());
        (1..=len)
            .map(|i| self.part(i).checked_sub(other.part(i)))
            .collect()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Shorthand used throughout the tests and examples; panics on invalid input.
#[macro_export]
macro_rules! partition {
    () => { $crate::shapes::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::shapes::Partition::new(vec![$($p),+]).expect("valid partition")
    };
}

/// `μ ⊂ λ`: every part of `mu` is at most the matching part of `lambda`.
pub fn contains(mu: &Partition, lambda: &Partition) -> bool {
    lambda.contains(mu)
}

/// All partitions of `d` with at most `max_len` parts, in decreasing
/// lexicographic order.
pub fn partitions_of(d: usize, max_len: usize) -> Vec<Partition> {
    fn go(rest: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `max_size` with at most `max_len` parts,
/// ordered by size and then decreasing lexicographically.
pub fn partitions_up_to(max_size: usize, max_len: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(|d| partitions_of(d, max_len)).collect()
}

/// A skew diagram `outer/inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSkew")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Deserialize)]
struct RawSkew {
    outer: Partition,
    #[serde(default)]
    inner: Partition,
}

impl TryFrom<RawSkew> for SkewShape {
    type Error = Error;

    fn try_from(raw: RawSkew) -> Result<Self> {
        skew(raw.outer, raw.inner)
    }
}

/// The skew diagram `outer/inner`.
pub fn skew(outer: Partition, inner: Partition) -> Result<SkewShape> {
    if !outer.contains(&inner) {
        return Err(Error::Containment { outer, inner });
    }
    Ok(SkewShape { outer, inner })
}

impl SkewShape {
    /// The straight shape `λ/∅`.
    pub fn straight(lambda: Partition) -> Self {
        SkewShape { outer: lambda, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of rows spanned, `l(outer)`; some rows may hold no cells.
    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Column range `(first, last)` of row `i`; `first > last` for an empty row.
    pub fn row_span(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i) + 1, self.outer.part(i))
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.outer.part(i) - self.inner.part(i)
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_cell(&self, (i, j): (usize, usize)) -> bool {
        i >= 1 && self.inner.part(i) < j && j <= self.outer.part(i)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (1..=self.num_rows())
            .flat_map(|i| {
                let (a, b) = self.row_span(i);
                (a..=b).map(move |j| (i, j))
            })
            .collect()
    }

    /// If this is the canonical embedding of some `C(λ)`, returns `λ`.
    ///
    /// Straight rectangles are their own rotations and are reported as such.
    pub fn as_rotated(&self) -> Option<Partition> {
        let h = self.outer.len();
        if h == 0 {
            return if self.inner.is_empty() { Some(Partition::empty()) } else { None };
        }
        let w = self.outer.part(1);
        if self.outer.parts().iter().any(|&p| p != w) || self.inner.part(h) != 0 {
            return None;
        }
        // row i from the bottom holds w - inner_{h+1-i} cells
        let parts: Vec<usize> = (1..=h).map(|r| w - self.inner.part(h + 1 - r)).collect();
        if parts[h - 1] == 0 {
            return None;
        }
        Partition::new(parts).ok()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// True iff `inner ⊆ outer` and `outer/inner` has at most one cell per column.
pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    outer.contains(inner) && (1..=outer.len()).all(|i| inner.part(i) >= outer.part(i + 1))
}

/// The diagram `C(λ)`: the Young diagram of `λ` rotated by 180 degrees, so
/// that row `i` from the bottom holds `λ_i` right-justified cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotatedShape {
    lambda: Partition,
}

pub fn rotate(lambda: Partition) -> RotatedShape {
    RotatedShape { lambda }
}

impl RotatedShape {
    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    /// Bounding box width, `λ_1`.
    pub fn width(&self) -> usize {
        self.lambda.part(1)
    }

    /// Bounding box height, `l(λ)`.
    pub fn height(&self) -> usize {
        self.lambda.len()
    }

    /// Number of cells in row `r` counted from the bottom.
    pub fn row_from_bottom(&self, r: usize) -> usize {
        self.lambda.part(r)
    }

    /// Canonical `(row, col)` of the cell in row `r` from the bottom at
    /// position `offset` counted from the right (both 1-based).
    pub fn cell(&self, r: usize, offset: usize) -> (usize, usize) {
        (self.height() + 1 - r, self.width() + 1 - offset)
    }

    /// Canonical skew embedding `(λ_1^{l(λ)}) / (λ_1 − λ_{l(λ)}, …, λ_1 − λ_1)`.
    pub fn skew(&self) -> SkewShape {
        let h = self.height();
        let w = self.width();
        let outer = Partition(vec![w; h]);
        let inner = Partition::new((1..=h).map(|i| w - self.lambda.part(h + 1 - i)).collect())
            .expect("rotated inner is weakly decreasing");
        SkewShape { outer, inner }
    }
}

/// `C(λ)/C(μ)`, both embedded bottom-right-aligned in the bounding box of `C(λ)`.
pub fn rotated_skew(lambda: &Partition, mu: &Partition) -> Result<SkewShape> {
    if !lambda.contains(mu) {
        return Err(Error::Containment { outer: lambda.clone(), inner: mu.clone() });
    }
    let h = lambda.len();
    let w = lambda.part(1);
    let outer = Partition::new((1..=h).map(|i| w - mu.part(h + 1 - i)).collect())?;
    let inner = Partition::new((1..=h).map(|i| w - lambda.part(h + 1 - i)).collect())?;
    skew(outer, inner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn containment_examples() {
        assert!(contains(&partition![2, 1], &partition![4, 3, 1]));
        assert!(contains(&partition![], &partition![5, 2]));
        assert!(!contains(&partition![2, 2], &partition![3, 1]));
    }

    #[test]
    fn partition_rejects_increasing_and_strips_zeros() {
        assert!(Partition::new(vec![1, 2]).is_err());
        let p = Partition::new(vec![3, 1, 0, 0]).unwrap();
        assert_eq!(p, partition![3, 1]);
        assert_eq!(p.len(), 2);
        assert_eq!(p.size(), 4);
        assert_eq!(p.part(5), 0);
    }

    #[test]
    fn skew_cells() {
        let s = skew(partition![4, 3, 2], partition![2, 1]).unwrap();
        let cells: BTreeSet<_> = s.cells().into_iter().collect();
        let want: BTreeSet<_> = [(1, 3), (1, 4), (2, 2), (2, 3), (3, 1), (3, 2)].into_iter().collect();
        assert_eq!(cells, want);
        assert_eq!(s.size(), 6);

        let l = partition![3, 2];
        assert!(skew(l.clone(), l).unwrap().cells().is_empty());
        assert_eq!(skew(partition![3, 2, 1], partition![]).unwrap().size(), 6);
        assert!(matches!(
            skew(partition![2], partition![1, 1]),
            Err(Error::Containment { .. })
        ));
    }

    #[test]
    fn horizontal_strips() {
        assert!(is_horizontal_strip(&partition![3, 1], &partition![2]));
        assert!(!is_horizontal_strip(&partition![2, 2], &partition![1]));
        assert!(is_horizontal_strip(&partition![2, 2], &partition![2, 2]));
        assert!(!is_horizontal_strip(&partition![1], &partition![2]));
    }

    #[test]
    fn rotate_staircase() {
        let r = rotate(partition![3, 2, 1]);
        let s = r.skew();
        assert_eq!(s.outer(), &partition![3, 3, 3]);
        assert_eq!(s.inner(), &partition![2, 1]);
        assert_eq!((s.row_len(1), s.row_len(2), s.row_len(3)), (1, 2, 3));
        assert_eq!(r.cell(1, 1), (3, 3));
        assert_eq!(r.cell(3, 1), (1, 3));
        assert_eq!(s.as_rotated(), Some(partition![3, 2, 1]));
        assert_eq!(rotate(partition![]).skew().size(), 0);
    }

    #[test]
    fn rotated_skew_matches_figure() {
        let s = rotated_skew(&partition![4, 3, 1], &partition![2, 1]).unwrap();
        let cells: BTreeSet<_> = s.cells().into_iter().collect();
        let want: BTreeSet<_> = [(1, 4), (2, 2), (2, 3), (3, 1), (3, 2)].into_iter().collect();
        assert_eq!(cells, want);

        let l = partition![4, 3, 1];
        assert_eq!(rotated_skew(&l, &l).unwrap().size(), 0);
        assert_eq!(rotated_skew(&l, &partition![]).unwrap(), rotate(l).skew());
    }

    #[test]
    fn rotation_is_an_involution_on_cells() {
        for lambda in partitions_up_to(8, 8) {
            let r = rotate(lambda.clone());
            let s = r.skew();
            assert_eq!(s.size(), lambda.size());
            let (h, w) = (r.height(), r.width());
            let back: BTreeSet<_> = s.cells().into_iter().map(|(i, j)| (h + 1 - i, w + 1 - j)).collect();
            let young: BTreeSet<_> = SkewShape::straight(lambda.clone()).cells().into_iter().collect();
            assert_eq!(back, young, "{lambda}");
            assert_eq!(s.as_rotated(), Some(lambda));
        }
    }

    #[test]
    fn horizontal_strip_agrees_with_column_scan() {
        let all = partitions_up_to(8, 8);
        for a in &all {
            for b in &all {
                let scan = a.contains(b) && {
                    let s = skew(a.clone(), b.clone()).unwrap();
                    let cols: Vec<_> = s.cells().iter().map(|c| c.1).collect();
                    let uniq: BTreeSet<_> = cols.iter().collect();
                    uniq.len() == cols.len()
                };
                assert_eq!(is_horizontal_strip(a, b), scan, "{a} / {b}");
            }
        }
    }

    #[test]
    fn containment_is_a_partial_order() {
        let all = partitions_up_to(6, 6);
        for a in &all {
            assert!(contains(a, a));
            for b in &all {
                if contains(a, b) && contains(b, a) {
                    assert_eq!(a, b);
                }
                for c in &all {
                    if contains(a, b) && contains(b, c) {
                        assert!(contains(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn partitions_are_listed_in_decreasing_lex_order() {
        let ps = partitions_of(4, 4);
        let parts: Vec<_> = ps.iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(parts, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        assert_eq!(partitions_of(4, 2).len(), 3);
        assert_eq!(partitions_of(0, 0), vec![partition![]]);
    }

    #[test]
    fn json_encoding() {
        let s = skew(partition![4, 3, 2], partition![2, 1]).unwrap();
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, r#"{"outer":[4,3,2],"inner":[2,1]}"#);
        let back: SkewShape = serde_json::from_str(&js).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        assert!(serde_json::from_str::<SkewShape>(r#"{"outer":[1],"inner":[2]}"#).is_err());
    }
}
