//! Strict chains between two partitions and the tableau tuples built on them.
//!
//! Run with `cargo run --example chains_and_tuples`.

use schur_antipode::expansion::{enumerate_chains, enumerate_tuples};
use schur_antipode::render::render_tuple;
use schur_antipode::Partition;

fn main() -> schur_antipode::Result<()> {
    let mu = Partition::empty();
    let lambda: Partition = "2,1".parse()?;

    println!("chains from {mu} to {lambda}:");
    for chain in enumerate_chains(&mu, &lambda)? {
        println!("  k={}  {chain}", chain.len());
    }

    let tuples: Vec<_> = enumerate_tuples(&mu, &lambda, 2)?.collect();
    let signed: i64 = tuples.iter().map(|t| t.sign()).sum();
    println!("{} tuples with entries <= 2, signed count {signed}", tuples.len());

    let longest = tuples.iter().max_by_key(|t| t.length()).expect("nonempty");
    println!("a tuple of maximal length {}:", longest.length());
    print!("{}", render_tuple(longest));
    println!("{}", serde_json::to_string(longest)?);
    Ok(())
}
