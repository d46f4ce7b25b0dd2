//! Verifier for Lorentzian and denormalized Lorentzian polynomials.
//!
//! Eigenvalue signatures are counted exactly: the characteristic polynomial
//! of a symmetric rational matrix is real-rooted, so the number of positive
//! eigenvalues equals the number of sign changes in its coefficient sequence.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::point::Point;
use crate::poly::{rat, PolyError, SparsePoly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LorentzianError {
    #[error("matrix is not symmetric at entry ({0},{1})")]
    NotSymmetric(usize, usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A symmetric matrix with exact rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricMatrix {
    n: usize,
    entries: Vec<Vec<BigRational>>,
}

impl SymmetricMatrix {
    pub fn new(entries: Vec<Vec<BigRational>>) -> Result<Self, LorentzianError> {
        let n = entries.len();
        for row in &entries {
            assert_eq!(row.len(), n, "matrix must be square");
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, value) in row.iter().enumerate().skip(i + 1) {
                if *value != entries[j][i] {
                    return Err(LorentzianError::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymmetricMatrix { n, entries })
    }

    pub fn from_ints(entries: &[&[i64]]) -> Result<Self, LorentzianError> {
        Self::new(
            entries
                .iter()
                .map(|row| row.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn negate(&self) -> SymmetricMatrix {
        SymmetricMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|v| -v).collect())
                .collect(),
        }
    }

    /// Coefficients of `det(λI − M)`, ascending degree, leading coefficient 1.
    /// Computed by the Faddeev–LeVerrier recursion, exact over ℚ.
    pub fn characteristic_polynomial(&self) -> Vec<BigRational> {
        let n = self.n;
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = rat(1);
        // N starts as M; c_{n−k} = −tr(N)/k; N ← M·(N + c_{n−k}·I).
        let mut current = self.entries.clone();
        for k in 1..=n {
            let trace: BigRational = (0..n).map(|i| current[i][i].clone()).sum();
            let c = -trace / rat(k as i64);
            coeffs[n - k] = c.clone();
            if k == n {
                break;
            }
            let mut shifted = current.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] += &c;
            }
            let mut next = vec![vec![BigRational::zero(); n]; n];
            for (row, m_row) in next.iter_mut().zip(&self.entries) {
                for (j, cell) in row.iter_mut().enumerate() {
                    let mut acc = BigRational::zero();
                    for (l, s_row) in shifted.iter().enumerate() {
                        acc += &m_row[l] * &s_row[j];
                    }
                    *cell = acc;
                }
            }
            current = next;
        }
        coeffs
    }

    /// Number of strictly positive eigenvalues: the sign changes in the
    /// characteristic polynomial's coefficient sequence (Descartes' rule is
    /// exact for real-rooted polynomials).
    pub fn positive_eigenvalue_count(&self) -> usize {
        let coeffs = self.characteristic_polynomial();
        let signs: Vec<i8> = coeffs
            .iter()
            .rev()
            .filter(|c| !c.is_zero())
            .map(|c| if c.is_positive() { 1 } else { -1 })
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Multiplicity of the eigenvalue 0.
    pub fn nullity(&self) -> usize {
        self.characteristic_polynomial()
            .iter()
            .take_while(|c| c.is_zero())
            .count()
    }
}

/// Why a polynomial fails the Lorentzian conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LorentzianFailure {
    NotHomogeneous,
    NegativeCoefficient {
        exponent: Point,
    },
    SupportNotMConvex,
    HessianSignature {
        derivative: Vec<usize>,
        positive_eigenvalues: usize,
    },
}

impl fmt::Display for LorentzianFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LorentzianFailure::NotHomogeneous => write!(f, "polynomial is not homogeneous"),
            LorentzianFailure::NegativeCoefficient { exponent } => {
                write!(f, "negative coefficient at exponent {exponent:?}")
            }
            LorentzianFailure::SupportNotMConvex => write!(f, "support is not M-convex"),
            LorentzianFailure::HessianSignature {
                derivative,
                positive_eigenvalues,
            } => write!(
                f,
                "Hessian after differentiating in variables {:?} has {} positive eigenvalues",
                derivative.iter().map(|v| v + 1).collect::<Vec<_>>(),
                positive_eigenvalues
            ),
        }
    }
}

/// Full Lorentzian check with a diagnostic: `Ok(None)` passes, `Ok(Some(_))`
/// names the first failing condition. Degrees 0 and 1 pass vacuously once
/// the coefficients are nonnegative.
pub fn lorentzian_diagnostic(f: &SparsePoly) -> Result<Option<LorentzianFailure>, LorentzianError> {
    if f.is_zero() {
        return Err(LorentzianError::Poly(PolyError::ZeroPolynomial));
    }
    if !f.is_homogeneous() {
        return Ok(Some(LorentzianFailure::NotHomogeneous));
    }
    for (exp, c) in f.terms_desc() {
        if c.is_negative() {
            return Ok(Some(LorentzianFailure::NegativeCoefficient {
                exponent: exp.clone(),
            }));
        }
    }
    if !f.support().is_mconvex() {
        return Ok(Some(LorentzianFailure::SupportNotMConvex));
    }
    let d = f.degree();
    if d < 2 {
        return Ok(None);
    }
    Ok(hessian_sweep(f, 0, &mut Vec::new(), (d - 2) as usize))
}

/// Recursively walks all derivative multisets of the given size, sharing
/// derivative prefixes, and signature-tests each resulting Hessian.
fn hessian_sweep(
    g: &SparsePoly,
    start: usize,
    prefix: &mut Vec<usize>,
    remaining: usize,
) -> Option<LorentzianFailure> {
    if remaining == 0 {
        let h = hessian(g);
        let positives = h.positive_eigenvalue_count();
        if positives > 1 {
            return Some(LorentzianFailure::HessianSignature {
                derivative: prefix.clone(),
                positive_eigenvalues: positives,
            });
        }
        return None;
    }
    for i in start..g.nvars() {
        let gi = g.partial_derivative(i);
        prefix.push(i);
        let failure = hessian_sweep(&gi, i, prefix, remaining - 1);
        prefix.pop();
        if failure.is_some() {
            return failure;
        }
    }
    None
}

/// Hessian of a (quadratic) polynomial; entries are the constant terms of
/// the second partials.
fn hessian(g: &SparsePoly) -> SymmetricMatrix {
    let n = g.nvars();
    let zero = vec![0i64; n];
    let mut entries = vec![vec![BigRational::zero(); n]; n];
    for (i, row) in entries.iter_mut().enumerate() {
        let gi = g.partial_derivative(i);
        for (j, cell) in row.iter_mut().enumerate() {
            let gij = gi.partial_derivative(j);
            *cell = gij.coefficient(&zero);
        }
    }
    SymmetricMatrix::new(entries).expect("second partials commute")
}

pub fn is_lorentzian(f: &SparsePoly) -> Result<bool, LorentzianError> {
    Ok(lorentzian_diagnostic(f)?.is_none())
}

/// Denormalized Lorentzian: Lorentzian after dividing each coefficient of
/// `t^n` by `n!`.
pub fn is_denormalized_lorentzian(f: &SparsePoly) -> Result<bool, LorentzianError> {
    if f.is_zero() {
        return Err(LorentzianError::Poly(PolyError::ZeroPolynomial));
    }
    is_lorentzian(&f.normalize())
}

/// Graded sign flip: the coefficient of `t^n` is multiplied by
/// `(−1)^{deg(f) − |n|}`.
pub fn sign_change(f: &SparsePoly) -> Result<SparsePoly, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let d = f.degree();
    let mut out = SparsePoly::zero(f.nvars());
    for (exp, c) in f.terms_desc() {
        let flip = (d - crate::point::coord_sum(exp)) % 2 != 0;
        out.add_term(exp.clone(), if flip { -c } else { c.clone() });
    }
    Ok(out)
}
