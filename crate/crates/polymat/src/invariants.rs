//! Möbius functions, cave polynomials, the binomial transform, and Snapper
//! polynomials of polymatroids.
//!
//! The cave polynomial and the Möbius table are computed along fully
//! independent routes, so their agreement is a meaningful cross-check rather
//! than a tautology.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::point::{coord_sum, Point, PointSet};
use crate::poly::{rat, PolyError, SparsePoly};
use crate::polymatroid::Polymatroid;

/// The Möbius function of a polymatroid, tabulated over `I(𝒫) ∩ ℕ^p`.
/// Points outside the independence polytope are implicitly 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusTable {
    p: usize,
    values: BTreeMap<Point, i64>,
}

impl MobiusTable {
    pub fn dim(&self) -> usize {
        self.p
    }

    /// Möbius value at `n`; 0 outside `I(𝒫) ∩ ℕ^p`.
    pub fn value(&self, n: &[i64]) -> i64 {
        self.values.get(n).copied().unwrap_or(0)
    }

    /// All stored `(point, value)` pairs in ascending lexicographic order,
    /// including explicit zeros inside `I(𝒫)`.
    pub fn iter(&self) -> impl Iterator<Item = (&Point, i64)> {
        self.values.iter().map(|(n, &v)| (n, v))
    }

    /// Points with nonzero Möbius value.
    pub fn support(&self) -> PointSet {
        PointSet::new(
            self.p,
            self.values
                .iter()
                .filter(|(_, &v)| v != 0)
                .map(|(n, _)| n.clone()),
        )
    }

    /// `Σ_n μ(n) t^n` as a polynomial.
    pub fn generating_polynomial(&self) -> SparsePoly {
        let mut f = SparsePoly::zero(self.p);
        for (n, &v) in &self.values {
            f.add_term(n.clone(), rat(v));
        }
        f
    }
}

/// Computes the Möbius table: `μ(n) = 1` on base points, and for
/// `n ∈ I(𝒫) ∖ B(𝒫)`
///
/// ```text
/// μ(n) = 1 − Σ { μ(w) : w ∈ I(𝒫) ∩ ℕ^p, w ≥ n, w ≠ n }.
/// ```
///
/// The recursion is evaluated in strictly decreasing coordinate sum, which is
/// well-founded since `w ≩ n` forces `|w| > |n|`.
pub fn mobius(p: &Polymatroid) -> MobiusTable {
    let dim = p.ground_set_size();
    let base = p.base_points();
    let indep = p.independence_points();
    let mut by_sum: BTreeMap<i64, Vec<Point>> = BTreeMap::new();
    for n in indep.iter() {
        by_sum.entry(coord_sum(n)).or_default().push(n.clone());
    }
    let mut values: BTreeMap<Point, i64> = BTreeMap::new();
    for (_, layer) in by_sum.iter().rev() {
        for n in layer {
            let v = if base.contains(n) {
                1
            } else {
                let mut above = 0i64;
                for (w, &mv) in &values {
                    if w != n && crate::point::dominated_by(n, w) {
                        above += mv;
                    }
                }
                1 - above
            };
            values.insert(n.clone(), v);
        }
    }
    MobiusTable { p: dim, values }
}

/// `{n : μ_𝒫(n) ≠ 0}`.
pub fn mobius_support(p: &Polymatroid) -> PointSet {
    mobius(p).support()
}

/// The cave polynomial, computed directly from the defining expansion: for
/// each base point `n` and `i < p`, set `s_i(n) = max_{j>i} 1_𝒫(n−e_i+e_j)`,
/// then accumulate `Σ_{T ⊆ {i : s_i=1}} (−1)^{|T|} t^{n−e_T}`.
pub fn cave(p: &Polymatroid) -> SparsePoly {
    let dim = p.ground_set_size();
    let identity: Vec<usize> = (0..dim).collect();
    cave_permuted(p, &identity)
}

/// The defining cave expansion with indices routed through the permutation
/// `perm` (0-based: position `i` of the product uses variable `perm[i]`).
/// Equal to [`cave`] for every permutation.
pub fn cave_permuted(p: &Polymatroid, perm: &[usize]) -> SparsePoly {
    let dim = p.ground_set_size();
    assert_eq!(perm.len(), dim, "permutation must cover [p]");
    {
        let mut seen = vec![false; dim];
        for &v in perm {
            assert!(v < dim && !seen[v], "not a permutation of [p]");
            seen[v] = true;
        }
    }
    let base = p.base_points();
    let mut out = SparsePoly::zero(dim);
    for n in base.iter() {
        // Positions i (0-based, i < p−1) whose stalactite factor is active.
        let mut active: Vec<usize> = Vec::new();
        for i in 0..dim.saturating_sub(1) {
            let vi = perm[i];
            let exists = ((i + 1)..dim).any(|j| {
                let vj = perm[j];
                let mut w = n.clone();
                w[vi] -= 1;
                w[vj] += 1;
                p.contains_base(&w).expect("dimension fixed")
            });
            if exists {
                active.push(vi);
            }
        }
        for subset in 0u32..(1 << active.len()) {
            let mut exp = n.clone();
            let mut sign = 1i64;
            for (k, &vi) in active.iter().enumerate() {
                if subset & (1 << k) != 0 {
                    exp[vi] -= 1;
                    sign = -sign;
                }
            }
            debug_assert!(exp.iter().all(|&e| e >= 0), "cave expansion stayed honest");
            out.add_term(exp, rat(sign));
        }
    }
    out
}

/// The ℚ-linear map `𝔟` sending `t^n` to `binom(t_1+n_1,n_1)···binom(t_p+n_p,n_p)`,
/// expanded into the monomial basis.
pub fn binomial_transform(f: &SparsePoly) -> SparsePoly {
    let nvars = f.nvars();
    let mut out = SparsePoly::zero(nvars);
    for (exp, c) in f.terms_desc() {
        // Univariate coefficient vectors of binom(t+n, n) = Π_{k=1..n}(t+k)/n!.
        let per_var: Vec<Vec<BigRational>> = exp.iter().map(|&n| binomial_poly_coeffs(n)).collect();
        let mut acc: Vec<(Point, BigRational)> = vec![(Vec::new(), c.clone())];
        for coeffs in &per_var {
            let mut next = Vec::with_capacity(acc.len() * coeffs.len());
            for (prefix, k) in &acc {
                for (deg, cc) in coeffs.iter().enumerate() {
                    if cc.is_zero() {
                        continue;
                    }
                    let mut e = prefix.clone();
                    e.push(deg as i64);
                    next.push((e, k * cc));
                }
            }
            acc = next;
        }
        for (e, k) in acc {
            out.add_term(e, k);
        }
    }
    out
}

/// Coefficients of `binom(t+n, n)` as a polynomial in `t`, ascending degree.
fn binomial_poly_coeffs(n: i64) -> Vec<BigRational> {
    let mut coeffs = vec![BigRational::one()];
    let mut factorial = BigInt::one();
    for k in 1..=n {
        factorial *= BigInt::from(k);
        // Multiply by (t + k).
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (d, c) in coeffs.iter().enumerate() {
            next[d + 1] += c;
            next[d] += c * rat(k);
        }
        coeffs = next;
    }
    let denom = BigRational::from_integer(factorial);
    coeffs.into_iter().map(|c| c / &denom).collect()
}

/// Snapper polynomial `Snapp_𝒫 = 𝔟(cave_𝒫)`. A numerical polynomial: its
/// values on `ℕ^p` are nonnegative integers, but its coefficients are
/// rational in general.
pub fn snapper(p: &Polymatroid) -> SparsePoly {
    binomial_transform(&cave(p))
}

/// True iff the support of the homogenization of `f` is M-convex.
pub fn generalized_polymatroid_check(f: &SparsePoly) -> Result<bool, PolyError> {
    Ok(f.homogenize()?.support().is_mconvex())
}
