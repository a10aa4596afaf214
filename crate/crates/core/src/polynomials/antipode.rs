use std::collections::HashMap;

use crate::error::Result;
use crate::expansion::{enumerate_chains, enumerate_tuples};
use crate::involution::phi;
use crate::shapes::SkewShape;
use crate::tableaux::{enumerate_rspp, enumerate_ssyt, weight_monomial, Fillings};

use super::Polynomial;

/// Sign attached to a chain of length `k` in the Takeuchi sum.
///
/// `Constant` drops the sign and exists only to check that the verification
/// harness notices a broken expansion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SignConvention {
    #[default]
    Alternating,
    Constant,
}

impl SignConvention {
    fn sign(self, k: usize) -> i64 {
        match self {
            SignConvention::Alternating if k % 2 == 1 => -1,
            _ => 1,
        }
    }
}

fn parity_sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn generating_poly(fillings: Fillings, num_vars: usize) -> Result<Polynomial> {
    let mut p = Polynomial::zero(num_vars);
    for t in fillings {
        p.add_term(weight_monomial(&t, num_vars)?, 1)?;
    }
    Ok(p)
}

fn max_entry(num_vars: usize) -> u32 {
    u32::try_from(num_vars).expect("variable count fits in u32")
}

/// `s_{λ/μ}(x₁, …, x_N)` as the content generating function of SSYT.
pub fn skew_schur_poly(shape: &SkewShape, num_vars: usize) -> Result<Polynomial> {
    generating_poly(enumerate_ssyt(shape, max_entry(num_vars)), num_vars)
}

/// Content generating function of row-strict plane partitions of `shape`.
pub fn rspp_poly(shape: &SkewShape, num_vars: usize) -> Result<Polynomial> {
    generating_poly(enumerate_rspp(shape, max_entry(num_vars)), num_vars)
}

/// The alternating sum over strict chains `μ = λ₀ ⊊ ⋯ ⊊ λ_k = λ` of
/// `(−1)^k ∏ s_{λᵢ/λᵢ₋₁}`.
pub fn takeuchi_antipode_poly(shape: &SkewShape, num_vars: usize) -> Result<Polynomial> {
    takeuchi_antipode_poly_with(shape, num_vars, SignConvention::Alternating)
}

pub fn takeuchi_antipode_poly_with(
    shape: &SkewShape,
    num_vars: usize,
    convention: SignConvention,
) -> Result<Polynomial> {
    let mut cache: HashMap<SkewShape, Polynomial> = HashMap::new();
    let mut total = Polynomial::zero(num_vars);
    for chain in enumerate_chains(shape.inner(), shape.outer())? {
        let mut prod = Polynomial::constant(num_vars, convention.sign(chain.len()));
        for step in chain.step_shapes() {
            if prod.is_zero() {
                break;
            }
            let factor = match cache.get(&step) {
                Some(f) => f,
                None => {
                    let f = skew_schur_poly(&step, num_vars)?;
                    cache.entry(step).or_insert(f)
                }
            };
            prod = prod.mul(factor)?;
        }
        total = total.add(&prod)?;
    }
    Ok(total)
}

/// `(−1)^{|λ|−|μ|} s_{λᵗ/μᵗ}`.
pub fn closed_form_antipode_poly(shape: &SkewShape, num_vars: usize) -> Result<Polynomial> {
    skew_schur_poly(&shape.conjugate(), num_vars)?.scale(parity_sign(shape.size()))
}

/// `Σ (−1)^{ℓ(T)} wt(T)` over every tableau tuple with entries `≤ N`.
pub fn signed_tuple_sum_poly(shape: &SkewShape, num_vars: usize) -> Result<Polynomial> {
    let mut p = Polynomial::zero(num_vars);
    for t in enumerate_tuples(shape.inner(), shape.outer(), max_entry(num_vars))? {
        p.add_term(t.weight(num_vars)?, t.sign())?;
    }
    Ok(p)
}

/// `(−1)^{|λ|−|μ|} Σ wt(T)` over the tuples fixed by the involution.
pub fn fixed_point_sum_poly(shape: &SkewShape, num_vars: usize) -> Result<Polynomial> {
    let sign = parity_sign(shape.size());
    let mut p = Polynomial::zero(num_vars);
    for t in enumerate_tuples(shape.inner(), shape.outer(), max_entry(num_vars))? {
        if phi(&t) == t {
            p.add_term(t.weight(num_vars)?, sign)?;
        }
    }
    Ok(p)
}
