//! Indicator-function relations from hyperplane subdivisions, and the check
//! that the cave polynomial respects them.
//!
//! Relations are only manufactured from splits at integer thresholds, where
//! the lattice-level indicator relation and the real base-polytope relation
//! coincide. User-supplied relations are verified at lattice level plus a
//! denominator-3 rational sample grid.

use thiserror::Error;

use crate::invariants::cave;
use crate::point::{Point, PointSet};
use crate::poly::SparsePoly;
use crate::polymatroid::rank_from_points;

/// Denominator of the rational sample grid used by [`check_relation`].
const SAMPLE_DENOMINATOR: i64 = 3;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ValuativeError {
    #[error("{piece} piece of the split is not M-convex")]
    NotMConvex { piece: &'static str },
    #[error("{piece} piece of the split is empty")]
    EmptyPiece { piece: &'static str },
    #[error("indicator relation does not hold; witness {witness:?}")]
    RelationInvalid { witness: RelationWitness },
}

/// A point at which an indicator relation fails to vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationWitness {
    Lattice(Point),
    /// `numerators / SAMPLE_DENOMINATOR` on the rational sample grid.
    Rational {
        numerators: Point,
    },
}

/// A formal integer combination `Σ a_i · 1_{S_i}` of M-convex point sets.
#[derive(Clone, Debug)]
pub struct Relation {
    p: usize,
    terms: Vec<(i64, PointSet)>,
}

impl Relation {
    /// Builds a relation; every set must be nonempty, M-convex, and share
    /// the ambient dimension.
    pub fn new(terms: Vec<(i64, PointSet)>) -> Result<Self, ValuativeError> {
        assert!(!terms.is_empty(), "a relation needs at least one term");
        let p = terms[0].1.dim();
        for (_, s) in &terms {
            assert_eq!(s.dim(), p, "relation terms must share a dimension");
            if !s.is_mconvex() {
                return Err(ValuativeError::NotMConvex { piece: "relation" });
            }
        }
        Ok(Relation { p, terms })
    }

    pub fn dim(&self) -> usize {
        self.p
    }

    pub fn terms(&self) -> &[(i64, PointSet)] {
        &self.terms
    }

    fn bounding_box(&self) -> Point {
        let mut bound = vec![0i64; self.p];
        for (_, s) in &self.terms {
            if let Some(m) = s.componentwise_max() {
                for (b, v) in bound.iter_mut().zip(m) {
                    *b = (*b).max(v);
                }
            }
        }
        bound
    }
}

/// The three pieces of a hyperplane split of an M-convex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPieces {
    /// `{n ∈ S : Σ_{j∈J} n_j ≤ c}`
    pub below: PointSet,
    /// `{n ∈ S : Σ_{j∈J} n_j ≥ c}`
    pub above: PointSet,
    /// `{n ∈ S : Σ_{j∈J} n_j = c}`
    pub on: PointSet,
}

impl SplitPieces {
    /// The relation `1_S − 1_{below} − 1_{above} + 1_{on} = 0` that holds by
    /// construction for every split.
    pub fn relation(&self, whole: &PointSet) -> Result<Relation, ValuativeError> {
        Relation::new(vec![
            (1, whole.clone()),
            (-1, self.below.clone()),
            (-1, self.above.clone()),
            (1, self.on.clone()),
        ])
    }
}

/// Splits an M-convex set along the hyperplane `Σ_{j∈J} n_j = c` (`subset`
/// is 0-based). All three pieces must be nonempty and M-convex.
pub fn hyperplane_split(
    s: &PointSet,
    subset: &[usize],
    c: i64,
) -> Result<SplitPieces, ValuativeError> {
    if !s.is_mconvex() {
        return Err(ValuativeError::NotMConvex { piece: "input" });
    }
    let level = |n: &Point| -> i64 { subset.iter().map(|&j| n[j]).sum() };
    let below = PointSet::new(s.dim(), s.iter().filter(|n| level(n) <= c).cloned());
    let above = PointSet::new(s.dim(), s.iter().filter(|n| level(n) >= c).cloned());
    let on = PointSet::new(s.dim(), s.iter().filter(|n| level(n) == c).cloned());
    for (piece, set) in [("below", &below), ("above", &above), ("middle", &on)] {
        if set.is_empty() {
            return Err(ValuativeError::EmptyPiece { piece });
        }
        if !set.is_mconvex() {
            return Err(ValuativeError::NotMConvex { piece });
        }
    }
    Ok(SplitPieces { below, above, on })
}

/// Verifies `Σ a_i · 1_{S_i} = 0` at every lattice point of the bounding box
/// and, as a sanity check on the real-indicator statement, on the
/// denominator-3 rational sample grid against each piece's rank-inequality
/// membership test. Returns a witness point on failure.
pub fn check_relation(r: &Relation) -> Option<RelationWitness> {
    let bound = r.bounding_box();
    for n in crate::syzygy::box_points(&bound) {
        let total: i64 = r
            .terms
            .iter()
            .map(|(a, s)| if s.contains(&n) { *a } else { 0 })
            .sum();
        if total != 0 {
            return Some(RelationWitness::Lattice(n));
        }
    }
    // Rational grid: test scaled points u/3 against the base-polytope
    // inequalities of each piece's recovered polymatroid.
    let polymatroids: Vec<_> = r
        .terms
        .iter()
        .map(|(a, s)| {
            (
                *a,
                rank_from_points(s).expect("relation terms are M-convex"),
            )
        })
        .collect();
    let scaled_bound: Point = bound.iter().map(|&b| b * SAMPLE_DENOMINATOR).collect();
    for u in crate::syzygy::box_points(&scaled_bound) {
        let total: i64 = polymatroids
            .iter()
            .map(|(a, p)| if scaled_in_base(p, &u) { *a } else { 0 })
            .sum();
        if total != 0 {
            return Some(RelationWitness::Rational { numerators: u });
        }
    }
    None
}

/// Membership of the rational point `u / SAMPLE_DENOMINATOR` in the real base
/// polytope, via the scaled rank inequalities.
fn scaled_in_base(p: &crate::polymatroid::Polymatroid, u: &[i64]) -> bool {
    let dim = p.ground_set_size();
    if u.iter().any(|&c| c < 0) {
        return false;
    }
    if u.iter().sum::<i64>() != SAMPLE_DENOMINATOR * p.total_rank() {
        return false;
    }
    for mask in 1..(1u32 << dim) {
        let sum: i64 = (0..dim)
            .filter(|&j| mask & (1 << j) != 0)
            .map(|j| u[j])
            .sum();
        if sum > SAMPLE_DENOMINATOR * p.rank(mask) {
            return false;
        }
    }
    true
}

/// Residual `Σ a_i · cave(rank_from_points(S_i))` of a verified relation.
/// The relation must first pass [`check_relation`].
pub fn valuative_residual(r: &Relation) -> Result<SparsePoly, ValuativeError> {
    if let Some(witness) = check_relation(r) {
        return Err(ValuativeError::RelationInvalid { witness });
    }
    let mut residual = SparsePoly::zero(r.p);
    for (a, s) in &r.terms {
        let p = rank_from_points(s).expect("relation terms are M-convex");
        let c = cave(&p).scale(&crate::poly::rat(*a));
        residual = residual.add(&c).expect("matching dimensions");
    }
    Ok(residual)
}

/// True iff the cave polynomial respects the relation exactly.
pub fn valuative_check(r: &Relation) -> Result<bool, ValuativeError> {
    Ok(valuative_residual(r)?.is_zero())
}
