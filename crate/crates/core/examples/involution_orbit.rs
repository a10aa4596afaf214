//! Applies the involution to three small tuples of shape (4,3)/(1) and
//! prints each one next to its image.
//!
//! Run with `cargo run --example involution_orbit`.

use schur_antipode::involution::{find_distinguished_cell, phi};
use schur_antipode::render::render_tuple;
use schur_antipode::TableauTuple;

fn main() -> schur_antipode::Result<()> {
    let inputs = [
        ("t1", include_str!("../data/t1.json")),
        ("t2", include_str!("../data/t2.json")),
        ("t3", include_str!("../data/t3.json")),
    ];
    for (name, json) in inputs {
        let t: TableauTuple = serde_json::from_str(json)?;
        let image = phi(&t);
        match find_distinguished_cell(&t) {
            Some(d) => println!("{name}: cell {} is {:?} in block {}", d.cell, d.kind, d.block_index),
            None => println!("{name}: fixed"),
        }
        print!("{}", render_tuple(&t));
        println!("maps to (length {} -> {})", t.length(), image.length());
        print!("{}", render_tuple(&image));
        assert_eq!(phi(&image), t);
        println!();
    }
    Ok(())
}
