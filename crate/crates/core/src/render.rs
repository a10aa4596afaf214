//! ASCII drawings of concatenated tuples.
//!
//! Each cell is a box with its block index in the top-left corner and its
//! value below, rows top to bottom:
//!
//! ```text
//!      +----+----+----+
//!      |1   |3   |3   |
//!      |   5|   2|   4|
//! +----+----+----+----+
//! |2   |4   |5   |
//! |   5|   5|   1|
//! +----+----+----+
//! ```

use crate::expansion::{TableauTuple, TaggedTableau};

// interior size of each box
const INNER_W: usize = 4;
const INNER_H: usize = 2;

pub fn render_tuple(t: &TableauTuple) -> String {
    render_tagged(&t.concat())
}

pub fn render_tagged(tag: &TaggedTableau) -> String {
    let shape = tag.tableau.shape();
    if shape.is_empty() {
        return "empty shape\n".to_string();
    }
    let width = shape.outer().part(0) * (INNER_W + 1) + 1;
    let height = shape.outer().len() * (INNER_H + 1) + 1;
    let mut canvas = vec![vec![' '; width]; height];

    for ((cell, value), &block) in tag.tableau.entries().zip(&tag.block_index) {
        let x0 = (cell.col - 1) * (INNER_W + 1);
        let y0 = (cell.row - 1) * (INNER_H + 1);
        let x1 = x0 + INNER_W + 1;
        let y1 = y0 + INNER_H + 1;
        canvas[y0][x0..=x1].fill('-');
        canvas[y1][x0..=x1].fill('-');
        for row in canvas.iter_mut().take(y1).skip(y0 + 1) {
            row[x0] = '|';
            row[x1] = '|';
        }
        for (x, y) in [(x0, y0), (x1, y0), (x0, y1), (x1, y1)] {
            canvas[y][x] = '+';
        }
        let index = format!("{block:<w$}", w = INNER_W);
        let value = format!("{value:>w$}", w = INNER_W);
        for (k, ch) in index.chars().take(INNER_W).enumerate() {
            canvas[y0 + 1][x0 + 1 + k] = ch;
        }
        for (k, ch) in value.chars().take(INNER_W).enumerate() {
            canvas[y0 + 2][x0 + 1 + k] = ch;
        }
    }

    let mut out = String::new();
    for row in canvas {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
