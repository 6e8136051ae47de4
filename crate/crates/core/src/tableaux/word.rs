use std::fmt;

use super::{CellSet, SetValuedFilling};
use crate::shapes::{Partition, SkewShape};

/// A finite sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", s.join(" "))
    }
}

fn push_desc(out: &mut Vec<u32>, s: CellSet) {
    out.extend(s.iter().rev());
}

/// Columns right to left; each column top to bottom; each cell decreasing.
pub fn column_word(f: &SetValuedFilling) -> Word {
    let mut by_col: Vec<Vec<(usize, CellSet)>> = Vec::new();
    for ((i, j), s) in f.cells() {
        if by_col.len() < j {
            by_col.resize(j, Vec::new());
        }
        by_col[j - 1].push((i, s));
    }
    let mut out = Vec::with_capacity(f.total_entries());
    for col in by_col.iter().rev() {
        // cells() is row-major, so each column is already top to bottom
        for &(_, s) in col {
            push_desc(&mut out, s);
        }
    }
    Word(out)
}

/// Rows top to bottom; each row right to left; each cell decreasing.
pub fn row_word(f: &SetValuedFilling) -> Word {
    let mut out = Vec::with_capacity(f.total_entries());
    for row in f.rows() {
        for &s in row.iter().rev() {
            push_desc(&mut out, s);
        }
    }
    Word(out)
}

/// Every prefix holds at least as many `i`s as `(i+1)`s, for all `i`.
pub fn is_dominant(w: &Word) -> bool {
    dominant_from(Vec::new(), w.letters())
}

/// Scans `letters` starting from the letter counts `counts` (index `i−1`
/// holds the count of `i`). Only the letter just read can break the
/// condition, so one comparison per letter suffices.
fn dominant_from(mut counts: Vec<usize>, letters: &[u32]) -> bool {
    for &v in letters {
        let v = v as usize;
        if counts.len() < v {
            counts.resize(v, 0);
        }
        counts[v - 1] += 1;
        if v >= 2 && counts[v - 1] > counts[v - 2] {
            return false;
        }
    }
    true
}

/// The semistandard tableau of shape and weight `λ`: row `i` holds `λ_i`
/// copies of `i`.
pub fn superstandard(lambda: &Partition) -> SetValuedFilling {
    let rows = (1..=lambda.len())
        .map(|i| vec![CellSet::singleton(i as u32); lambda.part(i)])
        .collect();
    SetValuedFilling::new(SkewShape::straight(lambda.clone()), rows).expect("shape matches rows")
}

/// `r(T_λ) * r(f)` is dominant.
///
/// `r(T_λ)` is itself dominant and leaves the letter counts at `λ`, so the
/// scan starts from those counts.
pub fn is_lambda_dominant(f: &SetValuedFilling, lambda: &Partition) -> bool {
    dominant_from(lambda.parts().to_vec(), row_word(f).letters())
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::SvtEnumerator;
    use super::*;
    use crate::partition;
    use crate::shapes::{partitions_up_to, skew};

    fn literal_lambda_dominant(w: &Word, lambda: &Partition) -> bool {
        is_dominant(&row_word(&superstandard(lambda)).concat(w))
    }

    #[test]
    fn reading_words_of_example() {
        let t = word_example();
        assert_eq!(column_word(&t), Word(vec![3, 2, 2, 1, 4, 1, 4, 3, 2]));
        assert_eq!(row_word(&t), Word(vec![3, 2, 2, 1, 1, 4, 4, 3, 2]));
        assert_eq!(column_word(&straight(&[&[&[1, 3]]])), Word(vec![3, 1]));
        assert_eq!(row_word(&straight(&[&[&[1], &[2]]])), Word(vec![2, 1]));
        let e = SetValuedFilling::empty(SkewShape::straight(partition![])).unwrap();
        assert!(column_word(&e).0.is_empty());
        assert!(row_word(&e).0.is_empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(is_dominant(&Word(vec![1, 1, 2, 1])));
        assert!(!is_dominant(&Word(vec![2, 1])));
        assert!(is_dominant(&Word(vec![1, 2, 1, 3, 2])));
        assert!(!is_dominant(&Word(vec![1, 3])));
        assert!(is_dominant(&Word(vec![])));
    }

    #[test]
    fn lambda_dominance_examples() {
        let t = word_example();
        assert!(is_lambda_dominant(&t, &partition![4, 2, 1]));
        assert!(!is_lambda_dominant(&t, &partition![3, 1]));
        let e = SetValuedFilling::empty(SkewShape::straight(partition![])).unwrap();
        assert!(is_lambda_dominant(&e, &partition![2, 2, 1]));
    }

    #[test]
    fn superstandard_rows() {
        let t = superstandard(&partition![4, 2, 1]);
        assert_eq!(t.to_string(), "[{1} {1} {1} {1}] / [{2} {2}] / [{3}]");
        assert!(t.is_semistandard());
        assert_eq!(superstandard(&partition![3, 1]).weight().counts(), &[3, 1]);
        assert_eq!(superstandard(&partition![]).total_entries(), 0);
    }

    #[test]
    fn fast_and_literal_dominance_agree() {
        let lambdas = partitions_up_to(4, 4);
        for shape in [partition![2, 1], partition![3], partition![1, 1, 1]] {
            for f in SvtEnumerator::new(SkewShape::straight(shape), 4).iter() {
                for l in &lambdas {
                    assert_eq!(is_lambda_dominant(&f, l), literal_lambda_dominant(&row_word(&f), l));
                }
            }
        }
    }

    /// Skew shapes with between 1 and `max_cells` cells, up to translation:
    /// no empty first row and some row reaching column 1.
    fn normalized_skew_shapes(max_cells: usize) -> Vec<SkewShape> {
        let mut out = Vec::new();
        let outers = partitions_up_to(2 * max_cells, max_cells);
        for outer in &outers {
            for inner in &outers {
                if !outer.contains(inner) {
                    continue;
                }
                let s = skew(outer.clone(), inner.clone()).unwrap();
                let size = s.size();
                let rows_nonempty = (1..=s.num_rows()).all(|i| s.row_len(i) > 0);
                let touches_col1 = inner.len() < outer.len();
                if size >= 1 && size <= max_cells && rows_nonempty && touches_col1 {
                    out.push(s);
                }
            }
        }
        out
    }

    /// Row-word and column-word λ-dominance coincide. Exhaustive over all
    /// skew shapes with at most 5 cells, entries at most 4, `|λ| ≤ 4`.
    #[test]
    fn row_and_column_dominance_agree_exhaustively() {
        let lambdas = partitions_up_to(4, 4);
        let mut checked = 0usize;
        for shape in normalized_skew_shapes(5) {
            for f in SvtEnumerator::new(shape, 4).iter() {
                let r = row_word(&f);
                let c = column_word(&f);
                for l in &lambdas {
                    assert_eq!(
                        literal_lambda_dominant(&r, l),
                        literal_lambda_dominant(&c, l),
                        "filling {f} lambda {l}"
                    );
                    checked += 1;
                }
            }
        }
        assert!(checked > 0);
    }
}
