//! Fillings of skew shapes: semistandard tableaux, row-strict plane
//! partitions, and their content monomials.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition, SkewShape};

/// A filling of a skew shape by positive integers.
///
/// Values are stored in the row-major cell order of the shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    values: Vec<u32>,
}

impl Tableau {
    /// Builds a tableau from values listed in row-major cell order.
    pub fn new(shape: SkewShape, values: Vec<u32>) -> Result<Self> {
        let n = shape.size();
        if values.len() != n {
            return Err(Error::InvalidTableau(format!(
                "shape {shape} has {n} cells but {} values were given",
                values.len()
            )));
        }
        if values.contains(&0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        Ok(Tableau { shape, values })
    }

    /// Builds a tableau from `(cell, value)` pairs in any order. The cells
    /// must be exactly the cells of `shape`.
    pub fn from_cells(shape: SkewShape, cells: impl IntoIterator<Item = (Cell, u32)>) -> Result<Self> {
        let mut values = vec![0u32; shape.size()];
        let mut seen = vec![false; shape.size()];
        for (cell, value) in cells {
            let idx = shape
                .index_of(cell)
                .ok_or_else(|| Error::InvalidTableau(format!("cell {cell} is not in shape {shape}")))?;
            if seen[idx] {
                return Err(Error::InvalidTableau(format!("cell {cell} listed twice")));
            }
            seen[idx] = true;
            values[idx] = value;
        }
        if let Some(idx) = seen.iter().position(|s| !s) {
            let missing = shape.cells()[idx];
            return Err(Error::InvalidTableau(format!("cell {missing} has no value")));
        }
        Tableau::new(shape, values)
    }

    /// Builds a tableau from rows of values, each row listing the cells of
    /// that row of the skew shape from left to right.
    pub fn from_rows(shape: SkewShape, rows: &[&[u32]]) -> Result<Self> {
        Tableau::new(shape, rows.iter().flat_map(|r| r.iter().copied()).collect())
    }

    pub fn empty(shape: SkewShape) -> Result<Self> {
        Tableau::new(shape, Vec::new())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Values in row-major cell order.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, cell: Cell) -> Option<u32> {
        self.shape.index_of(cell).map(|i| self.values[i])
    }

    /// `(cell, value)` pairs in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.shape.cells().into_iter().zip(self.values.iter().copied())
    }

    /// Values of each row, top to bottom. Rows of λ that are fully covered by
    /// μ appear as empty slices.
    pub fn rows(&self) -> Vec<&[u32]> {
        let mut out = Vec::new();
        let mut start = 0;
        for r in 1..=self.shape.outer().len() {
            let w = self.shape.outer().row_len(r) - self.shape.inner().row_len(r);
            out.push(&self.values[start..start + w]);
            start += w;
        }
        out
    }

    /// Multiplicity of each value `1..=max`, trimmed of trailing zeros.
    pub fn content(&self) -> Vec<u32> {
        let max = self.values.iter().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0u32; max];
        for &v in &self.values {
            counts[v as usize - 1] += 1;
        }
        counts
    }

    pub fn max_entry(&self) -> u32 {
        self.values.iter().copied().max().unwrap_or(0)
    }

    /// The same filling with the shape and the cells transposed.
    pub fn transpose(&self) -> Tableau {
        let shape = self.shape.conjugate();
        let cells = self.entries().map(|(c, v)| (Cell::new(c.col, c.row), v));
        Tableau::from_cells(shape, cells).expect("transpose of a valid tableau")
    }

    /// Replaces every value `v` by `f(v)`.
    pub fn map_values(&self, f: impl Fn(u32) -> u32) -> Result<Tableau> {
        Tableau::new(self.shape.clone(), self.values.iter().map(|&v| f(v)).collect())
    }
}

/// Row-major positions of the left and upper neighbours of each cell that
/// lie inside the skew shape.
#[derive(Clone, Debug)]
pub(crate) struct Neighbours {
    pub left: Vec<Option<usize>>,
    pub above: Vec<Option<usize>>,
}

impl Neighbours {
    pub fn of(shape: &SkewShape) -> Self {
        let cells = shape.cells();
        let mut left = Vec::with_capacity(cells.len());
        let mut above = Vec::with_capacity(cells.len());
        for &c in &cells {
            left.push(if c.col > 1 {
                shape.index_of(Cell::new(c.row, c.col - 1))
            } else {
                None
            });
            above.push(if c.row > 1 {
                shape.index_of(Cell::new(c.row - 1, c.col))
            } else {
                None
            });
        }
        Neighbours { left, above }
    }
}

/// Rows weakly increase, columns strictly increase.
pub fn is_ssyt(t: &Tableau) -> bool {
    let nb = Neighbours::of(&t.shape);
    t.values
        .iter()
        .enumerate()
        .all(|(i, &v)| nb.left[i].is_none_or(|j| t.values[j] <= v) && nb.above[i].is_none_or(|j| t.values[j] < v))
}

/// Rows strictly decrease, columns weakly decrease.
pub fn is_rspp(t: &Tableau) -> bool {
    let nb = Neighbours::of(&t.shape);
    t.values
        .iter()
        .enumerate()
        .all(|(i, &v)| nb.left[i].is_none_or(|j| t.values[j] > v) && nb.above[i].is_none_or(|j| t.values[j] >= v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum FillingRule {
    Semistandard,
    RowStrictPlane,
}

/// Row-major backtracking enumeration of constrained fillings.
///
/// Fillings are produced in lexicographic order of their row-major value
/// sequences.
#[derive(Clone, Debug)]
pub struct Fillings {
    shape: SkewShape,
    rule: FillingRule,
    max_entry: u32,
    nb: Neighbours,
    values: Vec<u32>,
    started: bool,
    done: bool,
}

impl Fillings {
    fn new(shape: &SkewShape, max_entry: u32, rule: FillingRule) -> Self {
        let n = shape.size();
        Fillings {
            shape: shape.clone(),
            rule,
            max_entry,
            nb: Neighbours::of(shape),
            values: vec![0; n],
            started: false,
            done: false,
        }
    }

    fn range(&self, pos: usize) -> (u32, u32) {
        let left = self.nb.left[pos].map(|j| self.values[j]);
        let above = self.nb.above[pos].map(|j| self.values[j]);
        match self.rule {
            FillingRule::Semistandard => {
                let lo = 1.max(left.unwrap_or(1)).max(above.map_or(1, |a| a + 1));
                (lo, self.max_entry)
            }
            FillingRule::RowStrictPlane => {
                let hi = self
                    .max_entry
                    .min(left.map_or(u32::MAX, |l| l.saturating_sub(1)))
                    .min(above.unwrap_or(u32::MAX));
                (1, hi)
            }
        }
    }

    /// Extends from `pos`; `bump` means position `pos` already holds a value
    /// that must be increased.
    fn search(&mut self, mut pos: usize, mut bump: bool) -> bool {
        let n = self.values.len();
        loop {
            if pos == n {
                return true;
            }
            let (lo, hi) = self.range(pos);
            let cand = if bump { self.values[pos] + 1 } else { lo };
            if cand <= hi {
                self.values[pos] = cand;
                pos += 1;
                bump = false;
            } else {
                if pos == 0 {
                    return false;
                }
                pos -= 1;
                bump = true;
            }
        }
    }
}

impl Iterator for Fillings {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let n = self.values.len();
        let found = if !self.started {
            self.started = true;
            self.search(0, false)
        } else if n == 0 {
            false
        } else {
            self.search(n - 1, true)
        };
        if !found {
            self.done = true;
            return None;
        }
        Some(Tableau {
            shape: self.shape.clone(),
            values: self.values.clone(),
        })
    }
}

/// Every SSYT of `shape` with entries in `1..=max_entry`. The empty shape
/// yields one empty tableau.
pub fn enumerate_ssyt(shape: &SkewShape, max_entry: u32) -> Fillings {
    Fillings::new(shape, max_entry, FillingRule::Semistandard)
}

/// Every row-strict plane partition of `shape` with entries in `1..=max_entry`.
pub fn enumerate_rspp(shape: &SkewShape, max_entry: u32) -> Fillings {
    Fillings::new(shape, max_entry, FillingRule::RowStrictPlane)
}

/// An exponent vector `x₁^{e₁}⋯x_N^{e_N}` of fixed length `N`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// Pads a content vector with zeros to `num_vars` entries.
    pub fn from_content(content: &[u32], num_vars: usize) -> Result<Self> {
        if let Some(last) = content.iter().rposition(|&e| e > 0) {
            if last >= num_vars {
                return Err(Error::EntryOutOfRange {
                    value: last as u32 + 1,
                    num_vars,
                });
            }
        }
        let mut e = vec![0; num_vars];
        for (slot, &c) in e.iter_mut().zip(content) {
            *slot = c;
        }
        Ok(Monomial(e))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.0.len() != other.0.len() {
            return Err(Error::VarsMismatch {
                left: self.0.len(),
                right: other.0.len(),
            });
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    /// Exchanges the exponents of variables `i` and `j` (0-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> Monomial {
        let mut e = self.0.clone();
        e.swap(i, j);
        Monomial(e)
    }
}

/// The content monomial `x^T = ∏ x_{T(c)}`.
pub fn weight_monomial(t: &Tableau, num_vars: usize) -> Result<Monomial> {
    Monomial::from_content(&t.content(), num_vars)
}

#[derive(Serialize, Deserialize)]
pub(crate) struct CellValue {
    pub row: usize,
    pub col: usize,
    pub value: u32,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    lambda: Partition,
    mu: Partition,
    cells: Vec<CellValue>,
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TableauRepr {
            lambda: self.shape.outer().clone(),
            mu: self.shape.inner().clone(),
            cells: cell_values(self),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = TableauRepr::deserialize(deserializer)?;
        let shape = SkewShape::new(repr.lambda, repr.mu).map_err(serde::de::Error::custom)?;
        let cells = repr.cells.into_iter().map(|c| (Cell::new(c.row, c.col), c.value));
        Tableau::from_cells(shape, cells).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn cell_values(t: &Tableau) -> Vec<CellValue> {
    t.entries()
        .map(|(c, value)| CellValue {
            row: c.row,
            col: c.col,
            value,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn skew(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(p(outer), p(inner)).unwrap()
    }

    #[test]
    fn ssyt_examples() {
        let right = Tableau::from_rows(
            skew(&[4, 4, 3, 2, 1], &[3, 1]),
            &[&[4], &[1, 1, 6], &[2, 2, 3], &[3, 4], &[5]],
        )
        .unwrap();
        assert!(is_ssyt(&right));

        // concatenation of T1: rows [5,2,4], [5,5,1]
        let t1 = Tableau::from_rows(skew(&[4, 3], &[1]), &[&[5, 2, 4], &[5, 5, 1]]).unwrap();
        assert!(!is_ssyt(&t1));

        let single = Tableau::from_rows(skew(&[3, 1], &[2, 1]), &[&[7]]).unwrap();
        assert!(is_ssyt(&single));
        assert!(is_rspp(&single));
    }

    #[test]
    fn rspp_examples() {
        let left = Tableau::from_rows(
            skew(&[5, 4, 3, 2], &[2, 1, 1]),
            &[&[5, 4, 2], &[6, 5, 3], &[6, 4], &[3, 1]],
        )
        .unwrap();
        assert!(is_rspp(&left));
        assert!(!is_ssyt(&left));

        let t3 = Tableau::from_rows(skew(&[4, 3], &[1]), &[&[5, 2, 1], &[4, 3, 2]]).unwrap();
        assert!(is_rspp(&t3));

        let row = Tableau::from_rows(skew(&[2], &[]), &[&[1, 1]]).unwrap();
        assert!(!is_rspp(&row));
    }

    #[test]
    fn figure_two_fillings_are_reversal_partners() {
        // Reversing the integers in the left filling and transposing gives an
        // SSYT of the conjugate shape.
        let left = Tableau::from_rows(
            skew(&[5, 4, 3, 2], &[2, 1, 1]),
            &[&[5, 4, 2], &[6, 5, 3], &[6, 4], &[3, 1]],
        )
        .unwrap();
        let reversed = left.map_values(|v| 7 - v).unwrap().transpose();
        assert_eq!(reversed.shape(), &skew(&[4, 4, 3, 2, 1], &[3, 1]));
        assert!(is_ssyt(&reversed));
    }

    fn values_of(it: Fillings) -> Vec<Vec<u32>> {
        it.map(|t| t.values().to_vec()).collect()
    }

    #[test]
    fn ssyt_enumeration_small() {
        assert_eq!(
            values_of(enumerate_ssyt(&skew(&[2], &[]), 2)),
            vec![vec![1, 1], vec![1, 2], vec![2, 2]]
        );
        assert_eq!(values_of(enumerate_ssyt(&skew(&[1, 1], &[]), 2)), vec![vec![1, 2]]);
        assert_eq!(enumerate_ssyt(&skew(&[2, 1], &[]), 3).count(), 8);
        assert_eq!(
            values_of(enumerate_ssyt(&skew(&[2, 1], &[2, 1]), 3)),
            vec![Vec::<u32>::new()]
        );
        assert_eq!(enumerate_ssyt(&skew(&[1, 1, 1], &[]), 2).count(), 0);
    }

    #[test]
    fn rspp_enumeration_small() {
        assert_eq!(values_of(enumerate_rspp(&skew(&[2], &[]), 2)), vec![vec![2, 1]]);
        assert_eq!(
            values_of(enumerate_rspp(&skew(&[1, 1], &[]), 2)),
            vec![vec![1, 1], vec![2, 1], vec![2, 2]]
        );
        assert_eq!(values_of(enumerate_rspp(&skew(&[], &[]), 2)), vec![Vec::<u32>::new()]);
        assert_eq!(enumerate_rspp(&skew(&[3], &[]), 2).count(), 0);
    }

    #[test]
    fn weights() {
        let t3 = Tableau::from_rows(skew(&[4, 3], &[1]), &[&[5, 2, 1], &[4, 3, 2]]).unwrap();
        assert_eq!(weight_monomial(&t3, 5).unwrap().exponents(), &[1, 2, 1, 1, 1]);
        assert!(matches!(
            weight_monomial(&t3, 4),
            Err(Error::EntryOutOfRange { value: 5, num_vars: 4 })
        ));

        let empty = Tableau::empty(skew(&[2], &[2])).unwrap();
        assert_eq!(weight_monomial(&empty, 3).unwrap().exponents(), &[0, 0, 0]);

        let ones = Tableau::from_rows(skew(&[2], &[]), &[&[1, 1]]).unwrap();
        assert_eq!(weight_monomial(&ones, 2).unwrap().exponents(), &[2, 0]);
    }

    #[test]
    fn construction_errors() {
        assert!(Tableau::new(skew(&[2], &[]), vec![1]).is_err());
        assert!(Tableau::new(skew(&[2], &[]), vec![0, 1]).is_err());
        assert!(Tableau::from_cells(skew(&[2], &[]), [(Cell::new(1, 1), 1), (Cell::new(1, 1), 2)]).is_err());
        assert!(Tableau::from_cells(skew(&[2], &[]), [(Cell::new(1, 1), 1), (Cell::new(2, 1), 2)]).is_err());
    }

    #[test]
    fn json_form() {
        let t = Tableau::from_rows(skew(&[2, 1], &[1]), &[&[3], &[1]]).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(
            s,
            r#"{"lambda":[2,1],"mu":[1],"cells":[{"row":1,"col":2,"value":3},{"row":2,"col":1,"value":1}]}"#
        );
        let back: Tableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }
}
