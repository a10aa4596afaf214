//! Computes the antipode of a skew Schur function four different ways and
//! compares them with the closed form.
//!
//! Run with `cargo run --example antipode_ladder -- 3,2 1 3`
//! (outer shape, inner shape, number of variables).

use schur_antipode::polynomials::SignConvention;
use schur_antipode::verify::Ladder;
use schur_antipode::{Partition, SkewShape};

fn main() -> schur_antipode::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let outer: Partition = args.first().map_or("3,2", String::as_str).parse()?;
    let inner: Partition = args.get(1).map_or("1", String::as_str).parse()?;
    let n: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(3);
    let shape = SkewShape::new(outer, inner)?;

    let ladder = Ladder::compute(&shape, n, SignConvention::Alternating)?;
    println!("shape {shape}, {n} variables");
    println!("takeuchi expansion : {}", ladder.takeuchi);
    println!("signed tuple sum   : {}", ladder.tuple_sum);
    println!("fixed-point sum    : {}", ladder.fixed_sum);
    println!("rspp sum           : {}", ladder.rspp_sum);
    println!("closed form        : {}", ladder.closed_form);
    println!("{} tuples, {} fixed", ladder.tuple_count, ladder.fixed_count);
    println!("identity holds: {}", ladder.identity_ok());
    Ok(())
}
