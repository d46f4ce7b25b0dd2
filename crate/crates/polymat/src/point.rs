//! Lattice points and finite point sets in `ℕ^p`.

use std::collections::BTreeSet;
use std::fmt;

/// A lattice point is a vector of integer coordinates. Negative coordinates
/// are allowed in queries (they lie outside every polytope) but never inside
/// a [`PointSet`].
pub type Point = Vec<i64>;

/// Coordinate sum `|n| = n_1 + … + n_p`.
pub fn coord_sum(n: &[i64]) -> i64 {
    n.iter().sum()
}

/// Componentwise `a ≤ b`.
pub fn dominated_by(a: &[i64], b: &[i64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

/// A finite set of nonnegative lattice points with a fixed ambient dimension.
///
/// Points are deduplicated and iterated in ascending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    p: usize,
    points: BTreeSet<Point>,
}

impl PointSet {
    /// Builds a point set, checking dimensions and nonnegativity.
    ///
    /// Panics if a point has the wrong length or a negative coordinate;
    /// these are programming errors, not data errors.
    pub fn new(p: usize, points: impl IntoIterator<Item = Point>) -> Self {
        let points: BTreeSet<Point> = points.into_iter().collect();
        for pt in &points {
            assert_eq!(pt.len(), p, "point has wrong dimension");
            assert!(pt.iter().all(|&c| c >= 0), "point has negative coordinate");
        }
        PointSet { p, points }
    }

    pub fn empty(p: usize) -> Self {
        PointSet {
            p,
            points: BTreeSet::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, n: &[i64]) -> bool {
        n.len() == self.p && self.points.contains(n)
    }

    /// Ascending lexicographic iteration.
    pub fn iter(&self) -> impl Iterator<Item = &Point> {
        self.points.iter()
    }

    pub fn insert(&mut self, n: Point) {
        assert_eq!(n.len(), self.p);
        assert!(n.iter().all(|&c| c >= 0));
        self.points.insert(n);
    }

    /// True iff every point has the same coordinate sum.
    pub fn is_equal_sum(&self) -> bool {
        let mut sums = self.points.iter().map(|n| coord_sum(n));
        match sums.next() {
            None => true,
            Some(first) => sums.all(|s| s == first),
        }
    }

    /// Componentwise maximum over all points; `None` for the empty set.
    pub fn componentwise_max(&self) -> Option<Point> {
        let mut iter = self.points.iter();
        let mut max = iter.next()?.clone();
        for pt in iter {
            for (m, &c) in max.iter_mut().zip(pt) {
                *m = (*m).max(c);
            }
        }
        Some(max)
    }

    /// True iff the set is closed under symmetric exchange: for all `a, b`
    /// in the set and every `i` with `a_i > b_i` there is a `j` with
    /// `a_j < b_j` such that `a − e_i + e_j` is again in the set.
    /// Requires all points to have equal coordinate sum; the empty set and
    /// unequal sums return false.
    pub fn is_mconvex(&self) -> bool {
        if self.points.is_empty() || !self.is_equal_sum() {
            return false;
        }
        for a in &self.points {
            for b in &self.points {
                for i in 0..self.p {
                    if a[i] <= b[i] {
                        continue;
                    }
                    let ok = (0..self.p).any(|j| {
                        if a[j] >= b[j] {
                            return false;
                        }
                        let mut c = a.clone();
                        c[i] -= 1;
                        c[j] += 1;
                        self.points.contains(&c)
                    });
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, pt) in self.points.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(
                f,
                "({})",
                pt.iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<Point> for PointSet {
    fn from_iter<T: IntoIterator<Item = Point>>(iter: T) -> Self {
        let points: Vec<Point> = iter.into_iter().collect();
        let p = points.first().map(|v| v.len()).unwrap_or(0);
        PointSet::new(p, points)
    }
}
