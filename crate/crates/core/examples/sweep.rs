//! Checks the antipode identity on every skew shape up to a given size.
//!
//! Run with `cargo run --release --example sweep -- 5 3`
//! (maximum size, number of variables).

use schur_antipode::polynomials::SignConvention;
use schur_antipode::verify::sweep;

fn main() -> schur_antipode::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<usize>().expect("numeric argument"));
    let max_size = args.next().unwrap_or(4);
    let n = args.next().unwrap_or(2);

    let report = sweep(max_size, n, SignConvention::Alternating)?;
    let tuples: u64 = report.entries.iter().map(|e| e.tuple_count).sum();
    println!(
        "{} shapes, {tuples} tuples, all ok: {}",
        report.entries.len(),
        report.all_ok()
    );

    // dropping the chain sign breaks the identity on most shapes
    let broken = sweep(max_size, n, SignConvention::Constant)?;
    println!("with the sign dropped, {} shapes fail", broken.failures().count());
    Ok(())
}
