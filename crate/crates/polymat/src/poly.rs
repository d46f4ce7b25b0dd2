//! Exact sparse multivariate polynomials over ℚ.
//!
//! Terms map exponent vectors to nonzero rational coefficients; serialized
//! output is in descending lexicographic order on exponents so golden files
//! are byte-stable.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::point::{coord_sum, Point, PointSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("twist exponent is smaller than a term exponent in variable {variable}")]
    NegativeExponent { variable: usize },
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// A sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Point, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// Single monomial `c · t^exp`.
    pub fn monomial(exp: Point, c: BigRational) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Point, BigRational)>,
    ) -> Result<Self, PolyError> {
        let mut p = Self::zero(nvars);
        for (exp, c) in terms {
            if exp.len() != nvars {
                return Err(PolyError::DimensionMismatch {
                    expected: nvars,
                    found: exp.len(),
                });
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(nvars: usize, terms: &[(&[i64], i64)]) -> Self {
        Self::from_terms(nvars, terms.iter().map(|(e, c)| (e.to_vec(), rat(*c))))
            .expect("exponent vectors must match nvars")
    }

    /// Accumulates one term, pruning a resulting zero coefficient.
    pub fn add_term(&mut self, exp: Point, c: BigRational) {
        debug_assert_eq!(exp.len(), self.nvars);
        debug_assert!(exp.iter().all(|&e| e >= 0));
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exp: &[i64]) -> BigRational {
        self.terms
            .get(exp)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Terms in descending lexicographic order on exponents.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Point, &BigRational)> {
        self.terms.iter().rev()
    }

    /// Total degree; −1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms.keys().map(|e| coord_sum(e)).max().unwrap_or(-1)
    }

    /// True iff every term has the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| coord_sum(e));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn add(&self, other: &SparsePoly) -> Result<SparsePoly, PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.add_term(exp.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn negate(&self) -> SparsePoly {
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn sub(&self, other: &SparsePoly) -> Result<SparsePoly, PolyError> {
        self.add(&other.negate())
    }

    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::DimensionMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let mut total = BigRational::zero();
        for (exp, c) in &self.terms {
            let mut val = c.clone();
            for (e, v) in exp.iter().zip(point) {
                for _ in 0..*e {
                    val *= v;
                }
            }
            total += val;
        }
        Ok(total)
    }

    /// The map `c·t^n ↦ c·t^{m−n}`, i.e. `t^m · f(t^{-1})`. Requires `m`
    /// to dominate every exponent of `f`.
    pub fn twist(&self, m: &[i64]) -> Result<SparsePoly, PolyError> {
        if m.len() != self.nvars {
            return Err(PolyError::DimensionMismatch {
                expected: self.nvars,
                found: m.len(),
            });
        }
        let mut out = SparsePoly::zero(self.nvars);
        for (exp, c) in &self.terms {
            let mut new_exp = Vec::with_capacity(self.nvars);
            for (i, (&mi, &ei)) in m.iter().zip(exp).enumerate() {
                if mi < ei {
                    return Err(PolyError::NegativeExponent { variable: i + 1 });
                }
                new_exp.push(mi - ei);
            }
            out.add_term(new_exp, c.clone());
        }
        Ok(out)
    }

    /// `t_0^{deg f} f(t_1/t_0, …, t_p/t_0)`: one more variable in position 0,
    /// output homogeneous of degree `deg f`.
    pub fn homogenize(&self) -> Result<SparsePoly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let d = self.degree();
        let mut out = SparsePoly::zero(self.nvars + 1);
        for (exp, c) in &self.terms {
            let mut new_exp = Vec::with_capacity(self.nvars + 1);
            new_exp.push(d - coord_sum(exp));
            new_exp.extend_from_slice(exp);
            out.add_term(new_exp, c.clone());
        }
        Ok(out)
    }

    /// Exact formal partial derivative in variable `i` (0-based).
    pub fn partial_derivative(&self, i: usize) -> SparsePoly {
        assert!(i < self.nvars, "variable index out of range");
        let mut out = SparsePoly::zero(self.nvars);
        for (exp, c) in &self.terms {
            if exp[i] == 0 {
                continue;
            }
            let mut new_exp = exp.clone();
            new_exp[i] -= 1;
            out.add_term(new_exp, c * rat(exp[i]));
        }
        out
    }

    /// Divides the coefficient of `t^n` by `n_1!···n_p!`.
    pub fn normalize(&self) -> SparsePoly {
        let mut out = SparsePoly::zero(self.nvars);
        for (exp, c) in &self.terms {
            let mut denom = BigInt::one();
            for &e in exp {
                for k in 2..=e {
                    denom *= BigInt::from(k);
                }
            }
            out.add_term(exp.clone(), c / BigRational::from_integer(denom));
        }
        out
    }

    /// The inverse of [`SparsePoly::normalize`].
    pub fn denormalize(&self) -> SparsePoly {
        let mut out = SparsePoly::zero(self.nvars);
        for (exp, c) in &self.terms {
            let mut factor = BigInt::one();
            for &e in exp {
                for k in 2..=e {
                    factor *= BigInt::from(k);
                }
            }
            out.add_term(exp.clone(), c * BigRational::from_integer(factor));
        }
        out
    }

    /// Exponent vectors of the nonzero terms.
    pub fn support(&self) -> PointSet {
        PointSet::new(self.nvars, self.terms.keys().cloned())
    }

    pub fn all_coefficients_integer(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Applies a permutation of the variables: variable `i` of the input
    /// becomes variable `perm[i]` of the output.
    pub fn permute_variables(&self, perm: &[usize]) -> SparsePoly {
        assert_eq!(perm.len(), self.nvars);
        let mut out = SparsePoly::zero(self.nvars);
        for (exp, c) in &self.terms {
            let mut new_exp = vec![0i64; self.nvars];
            for (i, &e) in exp.iter().enumerate() {
                new_exp[perm[i]] = e;
            }
            out.add_term(new_exp, c.clone());
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    /// Pretty form mimicking `t1^2*t2^2*t3^3` typography, descending lex.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (exp, c)) in self.terms_desc().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || exp.iter().all(|&e| e == 0) {
                factors.push(abs.to_string());
            }
            for (i, &e) in exp.iter().enumerate() {
                if e == 1 {
                    factors.push(format!("t{}", i + 1));
                } else if e > 1 {
                    factors.push(format!("t{}^{}", i + 1, e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: usize, nvars: usize) -> SparsePoly {
        let mut exp = vec![0i64; nvars];
        exp[i] = 1;
        SparsePoly::monomial(exp, rat(1))
    }

    #[test]
    fn add_cancels() {
        let f = t(0, 2).add(&t(1, 2)).unwrap();
        let g = t(0, 2).negate();
        assert_eq!(f.add(&g).unwrap(), t(1, 2));
    }

    #[test]
    fn scale_by_zero() {
        let f = SparsePoly::from_int_terms(2, &[(&[1, 1], 1)]);
        assert!(f.scale(&rat(0)).is_zero());
    }

    #[test]
    fn add_with_constant() {
        let f = SparsePoly::from_int_terms(2, &[(&[1, 0], 1), (&[0, 0], -1)]);
        let g = t(1, 2);
        let expected = SparsePoly::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -1)]);
        assert_eq!(f.add(&g).unwrap(), expected);
    }

    #[test]
    fn evaluate_examples() {
        let f = SparsePoly::from_int_terms(2, &[(&[1, 1], 1)]);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f.evaluate(&[half, rat(2)]).unwrap(), rat(1));
        let g = SparsePoly::from_int_terms(2, &[(&[1, 0], 3), (&[0, 0], 7)]);
        assert_eq!(g.evaluate(&[rat(0), rat(0)]).unwrap(), rat(7));
    }

    #[test]
    fn twist_examples() {
        // cave of U_{1,2} twisted by (1,1).
        let f = SparsePoly::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -1)]);
        let twisted = f.twist(&[1, 1]).unwrap();
        let expected = SparsePoly::from_int_terms(2, &[(&[0, 1], 1), (&[1, 0], 1), (&[1, 1], -1)]);
        assert_eq!(twisted, expected);
        assert_eq!(twisted.twist(&[1, 1]).unwrap(), f);

        let one = SparsePoly::constant(2, rat(1));
        assert_eq!(
            one.twist(&[2, 3]).unwrap(),
            SparsePoly::from_int_terms(2, &[(&[2, 3], 1)])
        );

        assert_eq!(
            f.twist(&[0, 1]).unwrap_err(),
            PolyError::NegativeExponent { variable: 1 }
        );
    }

    #[test]
    fn homogenize_examples() {
        let f = SparsePoly::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -1)]);
        let h = f.homogenize().unwrap();
        let expected =
            SparsePoly::from_int_terms(3, &[(&[0, 1, 0], 1), (&[0, 0, 1], 1), (&[1, 0, 0], -1)]);
        assert_eq!(h, expected);
        assert!(h.is_homogeneous());
        assert!(SparsePoly::zero(2).homogenize().is_err());
    }

    #[test]
    fn derivative_and_normalize() {
        let f = SparsePoly::from_int_terms(1, &[(&[2], 1)]);
        assert_eq!(
            f.partial_derivative(0),
            SparsePoly::from_int_terms(1, &[(&[1], 2)])
        );
        let n = f.normalize();
        assert_eq!(n.coefficient(&[2]), BigRational::new(1.into(), 2.into()));
        assert_eq!(n.denormalize(), f);

        let g = SparsePoly::from_int_terms(2, &[(&[1, 1], 1)]);
        assert_eq!(g.normalize(), g);

        let h = SparsePoly::from_int_terms(2, &[(&[3, 1], 2)]);
        assert_eq!(
            h.normalize().coefficient(&[3, 1]),
            BigRational::new(1.into(), 3.into())
        );
    }

    #[test]
    fn support_examples() {
        let f = SparsePoly::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -1)]);
        assert_eq!(
            f.support(),
            PointSet::new(2, vec![vec![1, 0], vec![0, 1], vec![0, 0]])
        );
        assert!(SparsePoly::zero(2).support().is_empty());
    }

    #[test]
    fn display_is_descending_lex() {
        let f =
            SparsePoly::from_int_terms(3, &[(&[2, 2, 3], 1), (&[2, 2, 2], -2), (&[0, 0, 0], 1)]);
        assert_eq!(f.to_string(), "t1^2*t2^2*t3^3 - 2*t1^2*t2^2*t3^2 + 1");
    }
}
