//! Partitions, containment, conjugation and skew shapes.
//!
//! Diagrams use English notation with matrix coordinates: row 1 is the top
//! row and rows grow downward, column 1 is the leftmost column.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};

/// An integer partition stored in canonical form: weakly decreasing,
/// strictly positive parts, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|, the number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), with zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Length of row `row` (1-based), zero past the length.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            0
        } else {
            self.part(row - 1)
        }
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with at most `n` cells, grouped by size.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// Returns a copy with the part in row `row` (1-based) changed by one.
    /// Used for adding and removing corner cells.
    pub(crate) fn with_row_len(&self, row: usize, len: usize) -> Result<Partition> {
        let mut parts = self.parts.clone();
        if row > parts.len() {
            parts.resize(row, 0);
        }
        parts[row - 1] = len;
        Partition::new(parts)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses comma-separated parts; the empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                let p = p.trim();
                p.parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("'{p}' is not a nonnegative integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A cell `(row, col)`, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

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

/// `μ ⊆ λ` componentwise.
pub fn contains(mu: &Partition, lambda: &Partition) -> bool {
    mu.len() <= lambda.len() && mu.parts.iter().zip(&lambda.parts).all(|(m, l)| m <= l)
}

/// The transpose λᵗ with λᵗ_j = #{i : λ_i ≥ j}.
pub fn conjugate(lambda: &Partition) -> Partition {
    let width = lambda.part(0);
    let parts = (1..=width)
        .map(|j| lambda.parts.iter().take_while(|&&p| p >= j).count())
        .collect();
    Partition { parts }
}

/// A skew shape λ/μ with μ ⊆ λ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !contains(&inner, &outer) {
            return Err(Error::NotContained { inner, outer });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape λ/∅.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// |λ| − |μ|.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    /// λᵗ/μᵗ.
    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: conjugate(&self.outer),
            inner: conjugate(&self.inner),
        }
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        skew_cells(self)
    }

    /// Position of `cell` in row-major order, if it lies in the shape.
    pub fn index_of(&self, cell: Cell) -> Option<usize> {
        if !self.contains_cell(cell) {
            return None;
        }
        let before: usize = (1..cell.row)
            .map(|r| self.outer.row_len(r) - self.inner.row_len(r))
            .sum();
        Some(before + cell.col - self.inner.row_len(cell.row) - 1)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// All cells `(i, j)` with `μ_i < j ≤ λ_i`, row ascending then column ascending.
pub fn skew_cells(shape: &SkewShape) -> Vec<Cell> {
    (1..=shape.outer.len())
        .flat_map(|r| {
            let lo = shape.inner.row_len(r);
            let hi = shape.outer.row_len(r);
            (lo + 1..=hi).map(move |c| Cell::new(r, c))
        })
        .collect()
}

/// Every ν with μ ⊆ ν ⊆ λ, sorted lexicographically by parts.
pub fn intermediate_partitions(mu: &Partition, lambda: &Partition) -> Result<Vec<Partition>> {
    if !contains(mu, lambda) {
        return Err(Error::NotContained {
            inner: mu.clone(),
            outer: lambda.clone(),
        });
    }
    fn go(row: usize, cap: usize, mu: &Partition, lambda: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row == lambda.len() {
            let mut parts = cur.clone();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            out.push(Partition { parts });
            return;
        }
        let lo = mu.part(row);
        let hi = lambda.part(row).min(cap);
        for v in lo..=hi {
            cur.push(v);
            go(row + 1, v, mu, lambda, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, usize::MAX, mu, lambda, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn containment() {
        assert!(contains(&p(&[1]), &p(&[4, 3])));
        assert!(!contains(&p(&[2]), &p(&[1, 1])));
        assert!(contains(&p(&[]), &p(&[5])));
        assert!(!contains(&p(&[1, 1, 1]), &p(&[3])));
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&p(&[4, 3])), p(&[2, 2, 2, 1]));
        assert_eq!(conjugate(&p(&[])), p(&[]));
        assert_eq!(conjugate(&p(&[1, 1, 1])), p(&[3]));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!("".parse::<Partition>().unwrap(), p(&[]));
        assert_eq!("4,3".parse::<Partition>().unwrap(), p(&[4, 3]));
        assert!("4,x".parse::<Partition>().is_err());
        assert!("1,3".parse::<Partition>().is_err());
    }

    #[test]
    fn cells_of_figure_shape() {
        let shape = SkewShape::new(p(&[4, 3]), p(&[1])).unwrap();
        let cells = skew_cells(&shape);
        let expect: Vec<Cell> = [(1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 3)]
            .iter()
            .map(|&(r, c)| Cell::new(r, c))
            .collect();
        assert_eq!(cells, expect);
        for (i, &c) in cells.iter().enumerate() {
            assert_eq!(shape.index_of(c), Some(i));
        }
        assert_eq!(shape.index_of(Cell::new(1, 1)), None);
    }

    #[test]
    fn degenerate_cells() {
        let lam = p(&[3, 1]);
        assert!(skew_cells(&SkewShape::new(lam.clone(), lam).unwrap()).is_empty());
        assert_eq!(
            skew_cells(&SkewShape::straight(p(&[2]))),
            vec![Cell::new(1, 1), Cell::new(1, 2)]
        );
    }

    #[test]
    fn skew_shape_rejects_non_contained() {
        assert!(matches!(
            SkewShape::new(p(&[1]), p(&[2])),
            Err(Error::NotContained { .. })
        ));
    }

    #[test]
    fn intermediates() {
        assert_eq!(
            intermediate_partitions(&p(&[]), &p(&[2])).unwrap(),
            vec![p(&[]), p(&[1]), p(&[2])]
        );
        let lam = p(&[3, 2]);
        assert_eq!(intermediate_partitions(&lam, &lam).unwrap(), vec![lam.clone()]);
        assert_eq!(
            intermediate_partitions(&p(&[1]), &p(&[2, 1])).unwrap(),
            vec![p(&[1]), p(&[1, 1]), p(&[2]), p(&[2, 1])]
        );
        assert!(intermediate_partitions(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn json_form() {
        assert_eq!(serde_json::to_string(&p(&[4, 3])).unwrap(), "[4,3]");
        assert_eq!(serde_json::to_string(&p(&[])).unwrap(), "[]");
        let back: Partition = serde_json::from_str("[2,2,1]").unwrap();
        assert_eq!(back, p(&[2, 2, 1]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
