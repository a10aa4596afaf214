//! Sparse multivariate polynomials with `i64` coefficients, and the
//! antipode computations built on them.
//!
//! All arithmetic is checked: overflow is reported as [`Error::Overflow`]
//! and never wraps.

mod antipode;

pub use antipode::{
    closed_form_antipode_poly, fixed_point_sum_poly, rspp_poly, signed_tuple_sum_poly, skew_schur_poly,
    takeuchi_antipode_poly, takeuchi_antipode_poly_with, SignConvention,
};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::Monomial;

/// A polynomial in `num_vars` variables. Zero coefficients are never stored,
/// so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    num_vars: usize,
    terms: BTreeMap<Monomial, i64>,
}

impl Polynomial {
    pub fn zero(num_vars: usize) -> Self {
        Polynomial {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, 1)
    }

    pub fn constant(num_vars: usize, c: i64) -> Self {
        Self::term(Monomial::one(num_vars), c)
    }

    pub fn term(monomial: Monomial, coeff: i64) -> Self {
        let mut p = Polynomial::zero(monomial.num_vars());
        if coeff != 0 {
            p.terms.insert(monomial, coeff);
        }
        p
    }

    /// The variable `x_{i+1}` (0-based `i`).
    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self::term(Monomial::new(e), 1)
    }

    /// Builds a polynomial from `(exponents, coeff)` pairs, merging repeats.
    pub fn from_terms(num_vars: usize, terms: impl IntoIterator<Item = (Vec<u32>, i64)>) -> Result<Self> {
        let mut p = Polynomial::zero(num_vars);
        for (e, c) in terms {
            p.add_term(Monomial::new(e), c)?;
        }
        Ok(p)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Terms in lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    fn check_vars(&self, n: usize) -> Result<()> {
        if self.num_vars != n {
            return Err(Error::VarsMismatch {
                left: self.num_vars,
                right: n,
            });
        }
        Ok(())
    }

    /// Adds `coeff · m` in place.
    pub fn add_term(&mut self, m: Monomial, coeff: i64) -> Result<()> {
        self.check_vars(m.num_vars())?;
        if coeff == 0 {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().checked_add(coeff).ok_or(Error::Overflow)?;
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other.num_vars)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg()?)
    }

    pub fn neg(&self) -> Result<Polynomial> {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.num_vars);
        if k == 0 {
            return Ok(out);
        }
        for (m, c) in self.terms() {
            out.terms.insert(m.clone(), c.checked_mul(k).ok_or(Error::Overflow)?);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other.num_vars)?;
        let mut out = Polynomial::zero(self.num_vars);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                out.add_term(ma.mul(mb)?, ca.checked_mul(cb).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }

    /// Evaluates at integer values of the variables.
    pub fn eval(&self, point: &[i64]) -> Result<i64> {
        self.check_vars(point.len())?;
        let mut total: i64 = 0;
        for (m, c) in self.terms() {
            let mut t = c;
            for (&x, &e) in point.iter().zip(m.exponents()) {
                t = t
                    .checked_mul(x.checked_pow(e).ok_or(Error::Overflow)?)
                    .ok_or(Error::Overflow)?;
            }
            total = total.checked_add(t).ok_or(Error::Overflow)?;
        }
        Ok(total)
    }

    /// Exchanges variables `i` and `j` (0-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> Polynomial {
        Polynomial {
            num_vars: self.num_vars,
            terms: self.terms().map(|(m, c)| (m.swap_vars(i, j), c)).collect(),
        }
    }

    /// Invariant under every adjacent transposition of variables.
    pub fn is_symmetric(&self) -> bool {
        (1..self.num_vars).all(|i| self.swap_vars(i - 1, i) == *self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest exponents first reads more naturally
        for (n, (m, &c)) in self.terms.iter().rev().enumerate() {
            let is_const = m.degree() == 0;
            let sign = if c < 0 { "-" } else { "+" };
            if n == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            if a != 1 || is_const {
                write!(f, "{a}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "x{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exponents: Vec<u32>,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct PolynomialRepr {
    num_vars: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialRepr {
            num_vars: self.num_vars,
            terms: self
                .terms()
                .map(|(m, c)| TermRepr {
                    exponents: m.exponents().to_vec(),
                    coeff: c,
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolynomialRepr::deserialize(deserializer)?;
        Polynomial::from_terms(repr.num_vars, repr.terms.into_iter().map(|t| (t.exponents, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn addition() {
        let s = x(2, 0).add(&x(2, 1)).unwrap();
        assert_eq!(
            s,
            Polynomial::from_terms(2, [(vec![1, 0], 1), (vec![0, 1], 1)]).unwrap()
        );
        assert!(s.add(&s.neg().unwrap()).unwrap().is_zero());
        let xy = x(2, 0).mul(&x(2, 1)).unwrap();
        assert_eq!(xy.add(&xy).unwrap(), xy.scale(2).unwrap());
    }

    #[test]
    fn multiplication() {
        let s = x(2, 0).add(&x(2, 1)).unwrap();
        let sq = s.mul(&s).unwrap();
        let expect = Polynomial::from_terms(2, [(vec![2, 0], 1), (vec![1, 1], 2), (vec![0, 2], 1)]).unwrap();
        assert_eq!(sq, expect);
        assert_eq!(s.mul(&Polynomial::one(2)).unwrap(), s);
        assert!(s.mul(&Polynomial::zero(2)).unwrap().is_zero());
    }

    #[test]
    fn mismatched_widths() {
        assert!(matches!(
            x(2, 0).add(&x(3, 0)),
            Err(Error::VarsMismatch { left: 2, right: 3 })
        ));
        assert!(x(2, 0).mul(&x(3, 0)).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = Polynomial::constant(1, i64::MAX);
        assert!(matches!(big.add(&Polynomial::one(1)), Err(Error::Overflow)));
        assert!(matches!(big.mul(&Polynomial::constant(1, 2)), Err(Error::Overflow)));
    }

    #[test]
    fn display() {
        let p = Polynomial::from_terms(2, [(vec![2, 0], 1), (vec![1, 1], -2), (vec![0, 0], 3)]).unwrap();
        assert_eq!(p.to_string(), "x1^2 - 2*x1*x2 + 3");
        assert_eq!(Polynomial::zero(3).to_string(), "0");
        assert_eq!(x(2, 1).neg().unwrap().to_string(), "-x2");
    }

    #[test]
    fn eval_and_symmetry() {
        let p = Polynomial::from_terms(2, [(vec![2, 0], 1), (vec![0, 2], 1), (vec![1, 1], 5)]).unwrap();
        assert_eq!(p.eval(&[1, 1]).unwrap(), 7);
        assert_eq!(p.eval(&[2, 3]).unwrap(), 4 + 9 + 30);
        assert!(p.is_symmetric());
        assert!(!x(2, 0).is_symmetric());
    }

    #[test]
    fn json_sorted_terms() {
        let p = Polynomial::from_terms(2, [(vec![0, 1], -1), (vec![1, 0], -1)]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"num_vars":2,"terms":[{"exponents":[0,1],"coeff":-1},{"exponents":[1,0],"coeff":-1}]}"#
        );
        assert_eq!(serde_json::from_str::<Polynomial>(&s).unwrap(), p);
        assert!(serde_json::from_str::<Polynomial>(r#"{"num_vars":2,"terms":[{"exponents":[1],"coeff":1}]}"#).is_err());
    }
}
