//! Fixed points of the involution and their row-strict plane partitions.
//!
//! Run with `cargo run --example fixed_points`.

use schur_antipode::expansion::enumerate_tuples;
use schur_antipode::involution::{fixed_to_rspp, is_fixed, rspp_to_fixed};
use schur_antipode::tableaux::enumerate_rspp;
use schur_antipode::{Partition, SkewShape};

fn main() -> schur_antipode::Result<()> {
    let shape = SkewShape::new("3,2".parse::<Partition>()?, "1".parse::<Partition>()?)?;
    let max_entry = 3;

    let fixed: Vec<_> = enumerate_tuples(shape.inner(), shape.outer(), max_entry)?
        .filter(is_fixed)
        .collect();
    for t in fixed.iter().take(5) {
        let r = fixed_to_rspp(t)?;
        println!("rspp {:?}  back to tuple: {}", r.rows(), rspp_to_fixed(&r)? == *t);
    }

    let rspp = enumerate_rspp(&shape, max_entry).count();
    println!(
        "shape {shape}, entries <= {max_entry}: {} fixed points, {rspp} row-strict plane partitions",
        fixed.len()
    );
    Ok(())
}
