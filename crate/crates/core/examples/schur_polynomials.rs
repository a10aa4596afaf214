//! Skew Schur polynomials as generating functions of semistandard tableaux.
//!
//! Run with `cargo run --example schur_polynomials`.

use schur_antipode::polynomials::skew_schur_poly;
use schur_antipode::tableaux::enumerate_ssyt;
use schur_antipode::{Partition, SkewShape};

fn main() -> schur_antipode::Result<()> {
    let n = 3;
    for (outer, inner) in [
        ("1", ""),
        ("2", ""),
        ("1,1", ""),
        ("2,1", ""),
        ("2,2", "1"),
        ("3,1", "1"),
    ] {
        let shape = SkewShape::new(outer.parse::<Partition>()?, inner.parse::<Partition>()?)?;
        let s = skew_schur_poly(&shape, n)?;
        let count = enumerate_ssyt(&shape, n as u32).count();
        println!("s_{shape}(x1..x{n}) = {s}");
        println!(
            "  {count} tableaux, symmetric: {}, value at 1s: {}",
            s.is_symmetric(),
            s.eval(&[1; 3])?
        );
    }

    // Pieri check: s_1 * s_1 = s_2 + s_11
    let cell = |p: &str| -> schur_antipode::Result<_> { skew_schur_poly(&SkewShape::straight(p.parse()?), n) };
    let lhs = cell("1")?.mul(&cell("1")?)?;
    let rhs = cell("2")?.add(&cell("1,1")?)?;
    println!("s1^2 = s2 + s11: {}", lhs == rhs);
    Ok(())
}
