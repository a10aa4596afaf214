//! Strict chains of partitions and the tuples of semistandard tableaux
//! indexed by them.
//!
//! Expanding the iterated coproduct of `s_{λ/μ}` and discarding every term
//! with a degree-zero tensor factor leaves one term per strict chain
//! `μ = λ₀ ⊊ λ₁ ⊊ ⋯ ⊊ λ_k = λ`. Expanding each skew Schur factor as a
//! tableau generating function turns each term into a sum over tuples
//! `(T⁽¹⁾, …, T⁽ᵏ⁾)` with `T⁽ⁱ⁾ ∈ SSYT(λᵢ/λᵢ₋₁)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{contains, intermediate_partitions, Cell, Partition, SkewShape};
use crate::tableaux::{cell_values, enumerate_ssyt, is_ssyt, CellValue, Monomial, Tableau};

/// A strict chain `λ₀ ⊊ λ₁ ⊊ ⋯ ⊊ λ_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chain {
    steps: Vec<Partition>,
}

impl Chain {
    pub fn new(steps: Vec<Partition>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InvalidTuple("a chain needs at least one partition".into()));
        }
        for w in steps.windows(2) {
            if w[0] == w[1] || !contains(&w[0], &w[1]) {
                return Err(Error::InvalidTuple(format!("{} ⊊ {} does not hold", w[0], w[1])));
            }
        }
        Ok(Chain { steps })
    }

    pub fn steps(&self) -> &[Partition] {
        &self.steps
    }

    /// Number of strict inclusions, `k`.
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn bottom(&self) -> &Partition {
        &self.steps[0]
    }

    pub fn top(&self) -> &Partition {
        self.steps.last().expect("chain is nonempty")
    }

    /// The skew shape `λᵢ/λᵢ₋₁` of step `i` (1-based).
    pub fn step_shape(&self, i: usize) -> SkewShape {
        SkewShape::new(self.steps[i].clone(), self.steps[i - 1].clone()).expect("chain steps are nested")
    }

    pub fn step_shapes(&self) -> impl Iterator<Item = SkewShape> + '_ {
        (1..self.steps.len()).map(|i| self.step_shape(i))
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊊ ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// All strict chains from `mu` to `lambda`, by depth-first extension in
/// lexicographic order of the next partition.
pub fn enumerate_chains(mu: &Partition, lambda: &Partition) -> Result<impl Iterator<Item = Chain>> {
    if !contains(mu, lambda) {
        return Err(Error::NotContained {
            inner: mu.clone(),
            outer: lambda.clone(),
        });
    }
    fn go(path: &mut Vec<Partition>, lambda: &Partition, out: &mut Vec<Chain>) {
        let cur = path.last().expect("nonempty path");
        if cur == lambda {
            out.push(Chain { steps: path.clone() });
            return;
        }
        let next = intermediate_partitions(cur, lambda).expect("cur ⊆ lambda");
        let cur = cur.clone();
        for nu in next.into_iter().filter(|nu| *nu != cur) {
            path.push(nu);
            go(path, lambda, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut vec![mu.clone()], lambda, &mut out);
    Ok(out.into_iter())
}

/// An element of `X_μ^λ`: a strict chain with one nonempty SSYT per step.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TableauTuple {
    chain: Chain,
    blocks: Vec<Tableau>,
    content: Vec<u32>,
}

impl TableauTuple {
    /// Validates that block `i` is an SSYT of shape `λᵢ/λᵢ₋₁`.
    pub fn new(chain: Chain, blocks: Vec<Tableau>) -> Result<Self> {
        if blocks.len() != chain.len() {
            return Err(Error::InvalidTuple(format!(
                "chain has {} steps but {} blocks were given",
                chain.len(),
                blocks.len()
            )));
        }
        for (i, b) in blocks.iter().enumerate() {
            if *b.shape() != chain.step_shape(i + 1) {
                return Err(Error::InvalidTuple(format!(
                    "block {} has shape {}, expected {}",
                    i + 1,
                    b.shape(),
                    chain.step_shape(i + 1)
                )));
            }
            if !is_ssyt(b) {
                return Err(Error::InvalidTuple(format!(
                    "block {} violates semistandardness",
                    i + 1
                )));
            }
        }
        Ok(Self::from_parts(chain, blocks))
    }

    /// Builds a tuple from the cells of each block, deriving the chain by
    /// adding the blocks to `mu` one at a time.
    pub fn from_blocks(mu: Partition, blocks: Vec<Vec<(Cell, u32)>>) -> Result<Self> {
        let mut steps = vec![mu];
        let mut tableaux = Vec::with_capacity(blocks.len());
        for (i, block) in blocks.into_iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidTuple(format!("block {} is empty", i + 1)));
            }
            let prev = steps.last().expect("nonempty").clone();
            let mut rows = prev.parts().to_vec();
            for &(cell, _) in &block {
                if cell.row == 0 || cell.col == 0 {
                    return Err(Error::InvalidTuple(format!(
                        "block {} has a cell outside the quadrant",
                        i + 1
                    )));
                }
                if rows.len() < cell.row {
                    rows.resize(cell.row, 0);
                }
                rows[cell.row - 1] += 1;
            }
            let next = Partition::new(rows)
                .map_err(|_| Error::InvalidTuple(format!("block {} does not complete a partition", i + 1)))?;
            let shape = SkewShape::new(next.clone(), prev).map_err(|e| Error::InvalidTuple(e.to_string()))?;
            let t =
                Tableau::from_cells(shape, block).map_err(|e| Error::InvalidTuple(format!("block {}: {e}", i + 1)))?;
            if !is_ssyt(&t) {
                return Err(Error::InvalidTuple(format!(
                    "block {} violates semistandardness",
                    i + 1
                )));
            }
            tableaux.push(t);
            steps.push(next);
        }
        Ok(Self::from_parts(Chain { steps }, tableaux))
    }

    pub(crate) fn from_parts(chain: Chain, blocks: Vec<Tableau>) -> Self {
        let mut content: Vec<u32> = Vec::new();
        for b in &blocks {
            for &v in b.values() {
                let v = v as usize;
                if content.len() < v {
                    content.resize(v, 0);
                }
                content[v - 1] += 1;
            }
        }
        TableauTuple { chain, blocks, content }
    }

    pub fn chain(&self) -> &Chain {
        &self.chain
    }

    pub fn blocks(&self) -> &[Tableau] {
        &self.blocks
    }

    /// ℓ(T), the number of blocks.
    pub fn length(&self) -> usize {
        self.blocks.len()
    }

    pub fn mu(&self) -> &Partition {
        self.chain.bottom()
    }

    pub fn lambda(&self) -> &Partition {
        self.chain.top()
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::new(self.lambda().clone(), self.mu().clone()).expect("chain is nested")
    }

    /// Multiplicity of each value across all blocks.
    pub fn content(&self) -> &[u32] {
        &self.content
    }

    /// wt(T), the product of the blocks' content monomials.
    pub fn weight(&self, num_vars: usize) -> Result<Monomial> {
        Monomial::from_content(&self.content, num_vars)
    }

    /// +1 or −1 according to the parity of ℓ(T).
    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn concat(&self) -> TaggedTableau {
        concat(self)
    }
}

/// A filling of λ/μ together with the block index (1-based) of every cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedTableau {
    pub tableau: Tableau,
    /// Block index per cell, in row-major cell order.
    pub block_index: Vec<usize>,
}

impl TaggedTableau {
    pub fn index_of(&self, cell: Cell) -> Option<usize> {
        self.tableau.shape().index_of(cell).map(|i| self.block_index[i])
    }

    /// Block indices of each row, top to bottom.
    pub fn index_rows(&self) -> Vec<&[usize]> {
        let shape = self.tableau.shape();
        let mut out = Vec::new();
        let mut start = 0;
        for r in 1..=shape.outer().len() {
            let w = shape.outer().row_len(r) - shape.inner().row_len(r);
            out.push(&self.block_index[start..start + w]);
            start += w;
        }
        out
    }

    /// Reassembles the tuple the tagging came from.
    pub fn to_tuple(&self) -> Result<TableauTuple> {
        let k = self.block_index.iter().copied().max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); k];
        for ((cell, v), &b) in self.tableau.entries().zip(&self.block_index) {
            if b == 0 {
                return Err(Error::InvalidTuple("block indices are 1-based".into()));
            }
            blocks[b - 1].push((cell, v));
        }
        TableauTuple::from_blocks(self.tableau.shape().inner().clone(), blocks)
    }
}

/// Glues the blocks of a tuple into one filling of λ/μ, remembering which
/// block each cell came from.
pub fn concat(t: &TableauTuple) -> TaggedTableau {
    let shape = t.shape();
    let mut values = vec![0u32; shape.size()];
    let mut block_index = vec![0usize; shape.size()];
    for (i, b) in t.blocks.iter().enumerate() {
        for (cell, v) in b.entries() {
            let idx = shape.index_of(cell).expect("block cell lies in λ/μ");
            values[idx] = v;
            block_index[idx] = i + 1;
        }
    }
    TaggedTableau {
        tableau: Tableau::new(shape, values).expect("blocks cover λ/μ"),
        block_index,
    }
}

/// Streams every tuple over every chain from `mu` to `lambda`, with block
/// entries in `1..=max_entry`.
pub fn enumerate_tuples(mu: &Partition, lambda: &Partition, max_entry: u32) -> Result<TupleIter> {
    let chains: Vec<Chain> = enumerate_chains(mu, lambda)?.collect();
    Ok(TupleIter {
        chains: chains.into_iter(),
        max_entry,
        current: None,
    })
}

struct ChainCursor {
    chain: Chain,
    choices: Vec<Vec<Tableau>>,
    odometer: Vec<usize>,
    exhausted: bool,
}

pub struct TupleIter {
    chains: std::vec::IntoIter<Chain>,
    max_entry: u32,
    current: Option<ChainCursor>,
}

impl TupleIter {
    fn load_next_chain(&mut self) -> bool {
        for chain in self.chains.by_ref() {
            let choices: Vec<Vec<Tableau>> = chain
                .step_shapes()
                .map(|s| enumerate_ssyt(&s, self.max_entry).collect())
                .collect();
            if choices.iter().any(Vec::is_empty) {
                continue;
            }
            self.current = Some(ChainCursor {
                odometer: vec![0; choices.len()],
                chain,
                choices,
                exhausted: false,
            });
            return true;
        }
        self.current = None;
        false
    }
}

impl Iterator for TupleIter {
    type Item = TableauTuple;

    fn next(&mut self) -> Option<TableauTuple> {
        if self.current.as_ref().is_none_or(|c| c.exhausted) && !self.load_next_chain() {
            return None;
        }
        let cur = self.current.as_mut().expect("loaded");
        let blocks: Vec<Tableau> = cur
            .odometer
            .iter()
            .zip(&cur.choices)
            .map(|(&i, ch)| ch[i].clone())
            .collect();
        let item = TableauTuple::from_parts(cur.chain.clone(), blocks);

        // advance, last block fastest
        let mut pos = cur.odometer.len();
        loop {
            if pos == 0 {
                cur.exhausted = true;
                break;
            }
            pos -= 1;
            cur.odometer[pos] += 1;
            if cur.odometer[pos] < cur.choices[pos].len() {
                break;
            }
            cur.odometer[pos] = 0;
        }
        Some(item)
    }
}

#[derive(Serialize, Deserialize)]
struct BlockRepr {
    cells: Vec<CellValue>,
}

#[derive(Serialize, Deserialize)]
struct TupleRepr {
    lambda: Partition,
    mu: Partition,
    blocks: Vec<BlockRepr>,
}

impl Serialize for TableauTuple {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TupleRepr {
            lambda: self.lambda().clone(),
            mu: self.mu().clone(),
            blocks: self
                .blocks
                .iter()
                .map(|b| BlockRepr { cells: cell_values(b) })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TableauTuple {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = TupleRepr::deserialize(deserializer)?;
        let blocks = repr
            .blocks
            .into_iter()
            .map(|b| {
                b.cells
                    .into_iter()
                    .map(|c| (Cell::new(c.row, c.col), c.value))
                    .collect()
            })
            .collect();
        let t = TableauTuple::from_blocks(repr.mu, blocks).map_err(serde::de::Error::custom)?;
        if *t.lambda() != repr.lambda {
            return Err(serde::de::Error::custom(format!(
                "invalid tableau tuple: blocks fill up to {}, but lambda is {}",
                t.lambda(),
                repr.lambda
            )));
        }
        Ok(t)
    }
}
