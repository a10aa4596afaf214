//! The sign-reversing involution on tableau tuples.
//!
//! Cells of a concatenated tuple are totally ordered by the key
//! `(value, column, −row)`. A cell is *splittable* when it is the largest
//! cell of a block with more than one cell, and *mergeable* when it forms a
//! singleton block whose union with the previous block is semistandard and
//! it exceeds every cell of that previous block. The involution acts on the
//! largest such cell: it splits it off into its own block, or merges its
//! block into the previous one. Tuples with no such cell are fixed; they are
//! exactly the row-strict plane partitions read off in decreasing order.

use std::cmp::{Ordering, Reverse};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansion::{Chain, TableauTuple};
use crate::shapes::{Cell, SkewShape};
use crate::tableaux::{is_rspp, is_ssyt, Tableau};

type OrderKey = (u32, usize, Reverse<usize>);

fn order_key(value: u32, cell: Cell) -> OrderKey {
    (value, cell.col, Reverse(cell.row))
}

/// Compares two cells of a filling under the total order.
///
/// Panics if either cell lies outside the filling's shape.
pub fn compare_cells(t: &Tableau, a: Cell, b: Cell) -> Ordering {
    let va = t.get(a).expect("cell lies in the shape");
    let vb = t.get(b).expect("cell lies in the shape");
    let ord = order_key(va, a).cmp(&order_key(vb, b));
    debug_assert!(ord != Ordering::Equal || a == b);
    ord
}

/// Cells of a filling sorted increasingly under the total order.
pub fn ordered_cells(t: &Tableau) -> Vec<Cell> {
    let mut cells: Vec<(Cell, u32)> = t.entries().collect();
    cells.sort_by_key(|&(c, v)| order_key(v, c));
    cells.into_iter().map(|(c, _)| c).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellKind {
    Splittable,
    Mergeable,
}

impl CellKind {
    pub fn flipped(self) -> CellKind {
        match self {
            CellKind::Splittable => CellKind::Mergeable,
            CellKind::Mergeable => CellKind::Splittable,
        }
    }
}

/// `cell(T)`: the largest splittable or mergeable cell of a tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DistinguishedCell {
    pub cell: Cell,
    pub kind: CellKind,
    /// 1-based index of the block containing the cell.
    pub block_index: usize,
}

fn largest_in(block: &Tableau) -> Option<(Cell, u32)> {
    block.entries().max_by_key(|&(c, v)| order_key(v, c))
}

fn union_is_ssyt(chain: &Chain, i: usize, first: &Tableau, second: &Tableau) -> bool {
    let shape = SkewShape::new(chain.steps()[i].clone(), chain.steps()[i - 2].clone()).expect("nested chain");
    let union = Tableau::from_cells(shape, first.entries().chain(second.entries())).expect("blocks tile the union");
    is_ssyt(&union)
}

pub fn find_distinguished_cell(t: &TableauTuple) -> Option<DistinguishedCell> {
    let blocks = t.blocks();
    let mut best: Option<(OrderKey, DistinguishedCell)> = None;
    let mut offer = |key: OrderKey, d: DistinguishedCell| {
        if best.as_ref().is_none_or(|(k, _)| key > *k) {
            best = Some((key, d));
        }
    };
    for (idx, block) in blocks.iter().enumerate() {
        let i = idx + 1;
        let (cell, value) = largest_in(block).expect("blocks are nonempty");
        let key = order_key(value, cell);
        if block.len() > 1 {
            offer(
                key,
                DistinguishedCell {
                    cell,
                    kind: CellKind::Splittable,
                    block_index: i,
                },
            );
        } else if i > 1 {
            let prev = &blocks[idx - 1];
            let (pc, pv) = largest_in(prev).expect("blocks are nonempty");
            if key > order_key(pv, pc) && union_is_ssyt(t.chain(), i, prev, block) {
                offer(
                    key,
                    DistinguishedCell {
                        cell,
                        kind: CellKind::Mergeable,
                        block_index: i,
                    },
                );
            }
        }
    }
    best.map(|(_, d)| d)
}

/// Applies the involution.
pub fn phi(t: &TableauTuple) -> TableauTuple {
    match find_distinguished_cell(t) {
        None => t.clone(),
        Some(d) => match d.kind {
            CellKind::Splittable => split(t, d),
            CellKind::Mergeable => merge(t, d),
        },
    }
}

fn split(t: &TableauTuple, d: DistinguishedCell) -> TableauTuple {
    let i = d.block_index;
    let steps = t.chain().steps();
    let upper = &steps[i];
    let lower = &steps[i - 1];
    // the largest cell of an SSYT block is a corner of λᵢ
    let middle = upper
        .with_row_len(d.cell.row, d.cell.col - 1)
        .expect("split cell is an outer corner");
    debug_assert_eq!(upper.row_len(d.cell.row), d.cell.col);

    let block = &t.blocks()[i - 1];
    let value = block.get(d.cell).expect("cell in block");
    let rest = Tableau::from_cells(
        SkewShape::new(middle.clone(), lower.clone()).expect("nested"),
        block.entries().filter(|&(c, _)| c != d.cell),
    )
    .expect("block minus a corner");
    let single = Tableau::from_cells(
        SkewShape::new(upper.clone(), middle.clone()).expect("nested"),
        [(d.cell, value)],
    )
    .expect("single cell");

    let mut new_steps = steps.to_vec();
    new_steps.insert(i, middle);
    let mut new_blocks = t.blocks().to_vec();
    new_blocks.splice(i - 1..i, [rest, single]);
    TableauTuple::from_parts(Chain::new(new_steps).expect("strict chain"), new_blocks)
}

fn merge(t: &TableauTuple, d: DistinguishedCell) -> TableauTuple {
    let i = d.block_index;
    let steps = t.chain().steps();
    let blocks = t.blocks();
    let shape = SkewShape::new(steps[i].clone(), steps[i - 2].clone()).expect("nested");
    let merged = Tableau::from_cells(shape, blocks[i - 2].entries().chain(blocks[i - 1].entries()))
        .expect("blocks tile the union");

    let mut new_steps = steps.to_vec();
    new_steps.remove(i - 1);
    let mut new_blocks = blocks.to_vec();
    new_blocks.splice(i - 2..i, [merged]);
    TableauTuple::from_parts(Chain::new(new_steps).expect("strict chain"), new_blocks)
}

/// Fixed-point test from the structural characterisation: every block is a
/// single cell, and the cells appear in decreasing order along the blocks.
pub fn is_fixed(t: &TableauTuple) -> bool {
    if t.blocks().iter().any(|b| b.len() != 1) {
        return false;
    }
    let keys: Vec<OrderKey> = t
        .blocks()
        .iter()
        .map(|b| {
            let (c, v) = b.entries().next().expect("singleton");
            order_key(v, c)
        })
        .collect();
    keys.windows(2).all(|w| w[0] > w[1])
}

/// The row-strict plane partition obtained by concatenating a fixed point.
pub fn fixed_to_rspp(t: &TableauTuple) -> Result<Tableau> {
    if !is_fixed(t) {
        return Err(Error::NotFixed);
    }
    Ok(t.concat().tableau)
}

/// The fixed point whose block `i` is the `i`-th largest cell of `r`.
pub fn rspp_to_fixed(r: &Tableau) -> Result<TableauTuple> {
    if !is_rspp(r) {
        return Err(Error::NotRspp);
    }
    let mut cells: Vec<(Cell, u32)> = r.entries().collect();
    cells.sort_by_key(|&(c, v)| Reverse(order_key(v, c)));
    let blocks = cells.into_iter().map(|cv| vec![cv]).collect();
    TableauTuple::from_blocks(r.shape().inner().clone(), blocks)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitKind {
    Split,
    Merge,
    Fixed,
}

/// One application of the involution, as reported by `antipode orbit`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub input: TableauTuple,
    pub cell: Option<Cell>,
    pub kind: OrbitKind,
    pub output: TableauTuple,
}

impl OrbitReport {
    pub fn of(t: &TableauTuple) -> Self {
        let d = find_distinguished_cell(t);
        let kind = match d.map(|d| d.kind) {
            None => OrbitKind::Fixed,
            Some(CellKind::Splittable) => OrbitKind::Split,
            Some(CellKind::Mergeable) => OrbitKind::Merge,
        };
        OrbitReport {
            input: t.clone(),
            cell: d.map(|d| d.cell),
            kind,
            output: phi(t),
        }
    }
}
