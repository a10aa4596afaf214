//! The cancellation ladder and exhaustive sweeps over shapes.
//!
//! For a shape λ/μ and `N` variables the ladder holds five independently
//! computed polynomials that must all coincide:
//!
//! 1. the Takeuchi expansion over strict chains,
//! 2. the signed sum of tuple weights,
//! 3. the signed sum over fixed points of the involution,
//! 4. the signed RSPP generating function,
//! 5. the closed form `(−1)^{|λ|−|μ|} s_{λᵗ/μᵗ}`.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::expansion::enumerate_tuples;
use crate::involution::phi;
use crate::polynomials::{
    closed_form_antipode_poly, rspp_poly, takeuchi_antipode_poly_with, Polynomial, SignConvention,
};
use crate::shapes::{intermediate_partitions, Partition, SkewShape};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ladder {
    pub takeuchi: Polynomial,
    pub tuple_sum: Polynomial,
    pub fixed_sum: Polynomial,
    pub rspp_sum: Polynomial,
    pub closed_form: Polynomial,
    pub tuple_count: u64,
    pub fixed_count: u64,
}

impl Ladder {
    pub fn compute(shape: &SkewShape, num_vars: usize, convention: SignConvention) -> Result<Ladder> {
        let takeuchi = takeuchi_antipode_poly_with(shape, num_vars, convention)?;

        let sign = if shape.size().is_multiple_of(2) { 1 } else { -1 };
        let max_entry = u32::try_from(num_vars).expect("variable count fits in u32");
        let mut tuple_sum = Polynomial::zero(num_vars);
        let mut fixed_sum = Polynomial::zero(num_vars);
        let mut tuple_count = 0;
        let mut fixed_count = 0;
        for t in enumerate_tuples(shape.inner(), shape.outer(), max_entry)? {
            let w = t.weight(num_vars)?;
            tuple_count += 1;
            if phi(&t) == t {
                fixed_count += 1;
                fixed_sum.add_term(w.clone(), sign)?;
            }
            tuple_sum.add_term(w, t.sign())?;
        }

        let rspp_sum = rspp_poly(shape, num_vars)?.scale(sign)?;
        let closed_form = closed_form_antipode_poly(shape, num_vars)?;
        Ok(Ladder {
            takeuchi,
            tuple_sum,
            fixed_sum,
            rspp_sum,
            closed_form,
            tuple_count,
            fixed_count,
        })
    }

    /// Names of the rungs that disagree with their neighbour.
    pub fn failures(&self) -> Vec<&'static str> {
        let rungs = [
            ("takeuchi = tuple sum", &self.takeuchi, &self.tuple_sum),
            ("tuple sum = fixed-point sum", &self.tuple_sum, &self.fixed_sum),
            ("fixed-point sum = rspp sum", &self.fixed_sum, &self.rspp_sum),
            ("rspp sum = closed form", &self.rspp_sum, &self.closed_form),
        ];
        rungs
            .into_iter()
            .filter(|(_, a, b)| a != b)
            .map(|(name, _, _)| name)
            .collect()
    }

    pub fn identity_ok(&self) -> bool {
        self.failures().is_empty()
    }
}

/// One verified shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub lambda: Partition,
    pub mu: Partition,
    pub num_vars: usize,
    pub tuple_count: u64,
    pub fixed_count: u64,
    pub identity_ok: bool,
    pub elapsed_ms: u64,
    pub antipode: Polynomial,
}

impl SweepEntry {
    pub fn verify(shape: &SkewShape, num_vars: usize, convention: SignConvention) -> Result<(SweepEntry, Ladder)> {
        let start = Instant::now();
        let ladder = Ladder::compute(shape, num_vars, convention)?;
        let entry = SweepEntry {
            lambda: shape.outer().clone(),
            mu: shape.inner().clone(),
            num_vars,
            tuple_count: ladder.tuple_count,
            fixed_count: ladder.fixed_count,
            identity_ok: ladder.identity_ok(),
            elapsed_ms: start.elapsed().as_millis() as u64,
            antipode: ladder.takeuchi.clone(),
        };
        Ok((entry, ladder))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub entries: Vec<SweepEntry>,
}

impl SweepReport {
    pub fn all_ok(&self) -> bool {
        self.entries.iter().all(|e| e.identity_ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SweepEntry> {
        self.entries.iter().filter(|e| !e.identity_ok)
    }
}

/// Every skew shape λ/μ with |λ| ≤ `max_size`, λ grouped by size and μ in
/// lexicographic order.
pub fn shapes_up_to(max_size: usize) -> Vec<SkewShape> {
    Partition::all_up_to(max_size)
        .into_iter()
        .flat_map(|lambda| {
            intermediate_partitions(&Partition::empty(), &lambda)
                .expect("∅ ⊆ λ")
                .into_iter()
                .map(move |mu| SkewShape::new(lambda.clone(), mu).expect("μ ⊆ λ"))
        })
        .collect()
}

/// Verifies the ladder on every shape up to `max_size` in parallel.
/// Entries come back in the order of [`shapes_up_to`].
pub fn sweep(max_size: usize, num_vars: usize, convention: SignConvention) -> Result<SweepReport> {
    let entries = shapes_up_to(max_size)
        .par_iter()
        .map(|shape| SweepEntry::verify(shape, num_vars, convention).map(|(e, _)| e))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport { entries })
}
