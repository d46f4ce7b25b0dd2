//! Monomial ideals, multigraded Betti numbers via upper Koszul simplicial
//! homology, K-polynomials by two routes, and homological shift ideals by two
//! routes.
//!
//! The Betti oracle here is deliberately independent of the cave/Möbius
//! machinery: `β_{i,b}(I)` is the rank of reduced homology in degree `i−1`
//! of the upper Koszul complex `K^b(I) = {σ ⊆ [p] : b − σ ∈ ℕ^p and
//! x^{b−σ} ∈ I}`, computed with exact integer-matrix ranks.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::invariants::{cave, mobius};
use crate::point::{coord_sum, dominated_by, Point, PointSet};
use crate::poly::{rat, SparsePoly};
use crate::polymatroid::{Polymatroid, PolymatroidError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SyzygyError {
    #[error("the zero ideal has no free resolution")]
    EmptyIdeal,
    #[error(transparent)]
    Polymatroid(#[from] PolymatroidError),
}

/// A monomial ideal given by its minimal monomial generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: BTreeSet<Point>,
}

impl MonomialIdeal {
    /// Builds an ideal, discarding non-minimal generators.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Point>) -> Self {
        let raw: BTreeSet<Point> = gens.into_iter().collect();
        for g in &raw {
            assert_eq!(g.len(), nvars, "generator has wrong dimension");
            assert!(g.iter().all(|&e| e >= 0), "generator has negative exponent");
        }
        let gens = raw
            .iter()
            .filter(|g| !raw.iter().any(|h| h != *g && dominated_by(h, g)))
            .cloned()
            .collect();
        MonomialIdeal { nvars, gens }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> impl Iterator<Item = &Point> {
        self.gens.iter()
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generator_set(&self) -> PointSet {
        PointSet::new(self.nvars, self.gens.iter().cloned())
    }

    /// Membership of the monomial `x^v`: some generator divides it.
    pub fn contains_monomial(&self, v: &[i64]) -> bool {
        v.len() == self.nvars
            && v.iter().all(|&e| e >= 0)
            && self.gens.iter().any(|g| dominated_by(g, v))
    }

    /// One generator per line in `x1^a*x2^b` form, for pasting into a
    /// computer-algebra session.
    pub fn render_text(&self) -> String {
        let mut lines = Vec::new();
        for g in &self.gens {
            let factors: Vec<String> = g
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, e)
                    }
                })
                .collect();
            lines.push(if factors.is_empty() {
                "1".to_string()
            } else {
                factors.join("*")
            });
        }
        lines.join("\n")
    }
}

/// Multigraded Betti numbers `β_{i,b}`, stored only where nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Point), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, b: &[i64]) -> u64 {
        self.entries.get(&(i, b.to_vec())).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Point, u64)> {
        self.entries.iter().map(|((i, b), &v)| (*i, b, v))
    }

    /// Largest homological index with a nonzero entry.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    pub fn alternating_sum(&self) -> i64 {
        self.entries
            .iter()
            .map(|((i, _), &v)| if i % 2 == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }
}

/// The polymatroidal ideal `I_𝒫`: generators are the base points. They all
/// have total degree `rk(𝒫)`, so minimality is automatic.
pub fn polymatroidal_ideal(p: &Polymatroid) -> MonomialIdeal {
    MonomialIdeal::new(p.ground_set_size(), p.base_points().iter().cloned())
}

/// Multigraded Betti numbers of `I` via upper Koszul simplicial homology.
/// Multidegrees `b` range over the box bounded by the componentwise maximum
/// of the generators; independent multidegrees are distributed across the
/// rayon pool and merged deterministically.
pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable, SyzygyError> {
    if ideal.is_zero() {
        return Err(SyzygyError::EmptyIdeal);
    }
    let bound = ideal
        .generator_set()
        .componentwise_max()
        .expect("nonzero ideal has generators");
    let degrees = box_points(&bound);
    let per_degree: Vec<Vec<(usize, Point, u64)>> = degrees
        .par_iter()
        .map(|b| {
            betti_at_degree(ideal, b)
                .into_iter()
                .map(|(i, v)| (i, b.clone(), v))
                .collect()
        })
        .collect();
    let mut table = BettiTable::default();
    for chunk in per_degree {
        for (i, b, v) in chunk {
            table.entries.insert((i, b), v);
        }
    }
    Ok(table)
}

/// All lattice points `0 ≤ n ≤ bound`, ascending lexicographic.
pub fn box_points(bound: &[i64]) -> Vec<Point> {
    let mut out: Vec<Point> = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=b).map(move |v| {
                    let mut q = prefix.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

/// Nonzero `β_{i,b}` for a single multidegree.
fn betti_at_degree(ideal: &MonomialIdeal, b: &Point) -> Vec<(usize, u64)> {
    let p = ideal.nvars();
    // If x^b is not in I, the complex is void: no homology at all.
    if !ideal.contains_monomial(b) {
        return Vec::new();
    }
    // Faces by cardinality; σ ∈ K^b iff b − σ ∈ ℕ^p and x^{b−σ} ∈ I.
    // Membership is closed under shrinking σ, so this is a simplicial complex.
    let mut faces_by_card: Vec<Vec<u32>> = vec![Vec::new(); p + 1];
    faces_by_card[0].push(0);
    for sigma in 1u32..(1 << p) {
        let mut v = b.clone();
        let mut ok = true;
        for (i, c) in v.iter_mut().enumerate() {
            if sigma & (1 << i) != 0 {
                *c -= 1;
                if *c < 0 {
                    ok = false;
                    break;
                }
            }
        }
        if ok && ideal.contains_monomial(&v) {
            faces_by_card[sigma.count_ones() as usize].push(sigma);
        }
    }
    // Reduced homology: C_{d} has basis the faces of cardinality d+1, with
    // C_{-1} spanned by the empty face. β_{i,b} = rank H̃_{i−1}.
    let index_of: Vec<BTreeMap<u32, usize>> = faces_by_card
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(k, &f)| (f, k)).collect())
        .collect();
    // boundary_rank[c] = rank of ∂ from card-c faces to card-(c−1) faces.
    let mut boundary_rank = vec![0usize; p + 2];
    for c in 1..=p {
        if faces_by_card[c].is_empty() || faces_by_card[c - 1].is_empty() {
            continue;
        }
        let rows = faces_by_card[c - 1].len();
        let cols = faces_by_card[c].len();
        let mut m = vec![vec![BigInt::zero(); cols]; rows];
        for (col, &sigma) in faces_by_card[c].iter().enumerate() {
            let mut sign = 1i64;
            for i in 0..p {
                if sigma & (1 << i) == 0 {
                    continue;
                }
                let tau = sigma & !(1 << i);
                if let Some(&row) = index_of[c - 1].get(&tau) {
                    m[row][col] = BigInt::from(sign);
                }
                sign = -sign;
            }
        }
        boundary_rank[c] = rank_bareiss(m);
    }
    let mut out = Vec::new();
    for i in 0..=p {
        // Homological degree d = i − 1 corresponds to cardinality c = i.
        let dim_c = faces_by_card[i].len();
        let homology = dim_c - boundary_rank[i] - boundary_rank[i + 1];
        if homology > 0 {
            out.push((i, homology as u64));
        }
    }
    out
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
fn rank_bareiss(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev_pivot = BigInt::from(1);
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let pivot_row = (row..rows).find(|&r| !m[r][col].is_zero());
        let Some(pr) = pivot_row else { continue };
        m.swap(row, pr);
        let pivot = m[row][col].clone();
        for r in (row + 1)..rows {
            for c in (col + 1)..cols {
                let val = (&pivot * &m[r][c] - &m[r][col] * &m[row][c]) / &prev_pivot;
                m[r][c] = val;
            }
            m[r][col] = BigInt::zero();
        }
        prev_pivot = pivot;
        rank += 1;
        row += 1;
    }
    rank
}

/// `𝒦(I; t) = Σ_{i} (−1)^i Σ_b β_{i,b} t^b`.
pub fn k_polynomial_from_betti(table: &BettiTable, nvars: usize) -> SparsePoly {
    let mut f = SparsePoly::zero(nvars);
    for (i, b, v) in table.iter() {
        let signed = if i % 2 == 0 { v as i64 } else { -(v as i64) };
        f.add_term(b.clone(), rat(signed));
    }
    f
}

/// `𝒦(I_𝒫; t) = t^m · cave_{𝒫∨}(t^{-1})`: twist of the cave polynomial of
/// the dual. The result is cage-independent even though both factors depend
/// on the cage.
pub fn k_polynomial_from_cave(p: &Polymatroid, cage: &[i64]) -> Result<SparsePoly, SyzygyError> {
    let dual = p.dual(cage)?;
    let c = cave(&dual);
    Ok(c.twist(cage)
        .expect("cave exponents are bounded by the cage"))
}

/// Homological shift ideal via the Möbius route:
/// `HS_i(I_𝒫) = (x^n : |n| = rk(𝒫)+i and μ_{𝒫∨}(m−n) ≠ 0)`.
pub fn hs_ideal(p: &Polymatroid, cage: &[i64], i: usize) -> Result<MonomialIdeal, SyzygyError> {
    let dual = p.dual(cage)?;
    let table = mobius(&dual);
    let target = p.total_rank() + i as i64;
    let gens = table
        .support()
        .iter()
        .filter(|w| coord_sum(w) == coord_sum(cage) - target)
        .map(|w| {
            cage.iter()
                .zip(w.iter())
                .map(|(m, x)| m - x)
                .collect::<Point>()
        })
        .filter(|n| n.iter().all(|&e| e >= 0))
        .collect::<Vec<_>>();
    Ok(MonomialIdeal::new(p.ground_set_size(), gens))
}

/// Homological shift ideal via the syzygy route: generators are the
/// multidegrees with `β_{i,b} ≠ 0`, minimalized.
pub fn hs_from_betti(table: &BettiTable, nvars: usize, i: usize) -> MonomialIdeal {
    MonomialIdeal::new(
        nvars,
        table
            .iter()
            .filter(|(j, _, _)| *j == i)
            .map(|(_, b, _)| b.clone()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn paper_example_ideal_generators() {
        let ideal = polymatroidal_ideal(&fixtures::paper_example());
        let expected = MonomialIdeal::new(
            3,
            vec![
                vec![0, 2, 3],
                vec![2, 0, 3],
                vec![1, 2, 2],
                vec![2, 1, 2],
                vec![2, 2, 1],
                vec![1, 1, 3],
                vec![1, 0, 4],
                vec![0, 1, 4],
            ],
        );
        assert_eq!(ideal, expected);
        let text = ideal.render_text();
        assert_eq!(text.lines().count(), 8);
        assert!(text.lines().any(|l| l == "x2^2*x3^3"));
        assert!(text.lines().any(|l| l == "x1*x3^4"));
    }

    #[test]
    fn rank_zero_gives_unit_ideal() {
        let ideal = polymatroidal_ideal(&fixtures::rank_zero());
        assert_eq!(ideal, MonomialIdeal::new(2, vec![vec![0, 0]]));
    }

    #[test]
    fn minimalization_drops_divisible_generators() {
        let ideal = MonomialIdeal::new(2, vec![vec![1, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(ideal, MonomialIdeal::new(2, vec![vec![1, 0], vec![0, 2]]));
    }

    #[test]
    fn betti_of_two_variables() {
        let ideal = MonomialIdeal::new(2, vec![vec![1, 0], vec![0, 1]]);
        let table = betti_table(&ideal).unwrap();
        assert_eq!(table.get(0, &[1, 0]), 1);
        assert_eq!(table.get(0, &[0, 1]), 1);
        assert_eq!(table.get(1, &[1, 1]), 1);
        assert_eq!(table.iter().count(), 3);
    }

    #[test]
    fn betti_of_principal_ideal() {
        let ideal = MonomialIdeal::new(2, vec![vec![1, 0]]);
        let table = betti_table(&ideal).unwrap();
        assert_eq!(table.get(0, &[1, 0]), 1);
        assert_eq!(table.iter().count(), 1);
    }

    #[test]
    fn betti_of_empty_ideal_errors() {
        let ideal = MonomialIdeal::new(2, vec![]);
        assert_eq!(betti_table(&ideal).unwrap_err(), SyzygyError::EmptyIdeal);
    }

    #[test]
    fn paper_example_betti_coefficient() {
        let ideal = polymatroidal_ideal(&fixtures::paper_example());
        let table = betti_table(&ideal).unwrap();
        assert_eq!(table.get(1, &[2, 2, 2]), 2);
    }

    #[test]
    fn k_polynomial_routes_agree_on_paper_example() {
        let p = fixtures::paper_example();
        let via_betti = k_polynomial_from_betti(&betti_table(&polymatroidal_ideal(&p)).unwrap(), 3);
        let via_cave = k_polynomial_from_cave(&p, &[2, 2, 4]).unwrap();
        assert_eq!(via_betti, fixtures::printed_k_polynomial());
        assert_eq!(via_cave, fixtures::printed_k_polynomial());
    }

    #[test]
    fn k_polynomial_of_u12() {
        let u = fixtures::u12();
        let expected = SparsePoly::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[1, 1], -1)]);
        assert_eq!(k_polynomial_from_cave(&u, &[1, 1]).unwrap(), expected);
        let table = betti_table(&polymatroidal_ideal(&u)).unwrap();
        assert_eq!(k_polynomial_from_betti(&table, 2), expected);
    }

    #[test]
    fn k_polynomial_of_rank_zero() {
        let z = fixtures::rank_zero();
        assert_eq!(
            k_polynomial_from_cave(&z, &[1, 2]).unwrap(),
            SparsePoly::from_int_terms(2, &[(&[0, 0], 1)])
        );
    }

    #[test]
    fn hs_ideals_of_paper_example() {
        let p = fixtures::paper_example();
        let cage = [2, 2, 4];
        assert_eq!(hs_ideal(&p, &cage, 0).unwrap(), polymatroidal_ideal(&p));
        let hs1 = hs_ideal(&p, &cage, 1).unwrap();
        let expected1 = MonomialIdeal::new(
            3,
            vec![
                vec![2, 2, 2],
                vec![2, 1, 3],
                vec![1, 2, 3],
                vec![2, 0, 4],
                vec![1, 1, 4],
                vec![0, 2, 4],
            ],
        );
        assert_eq!(hs1, expected1);
        let table = betti_table(&polymatroidal_ideal(&p)).unwrap();
        assert_eq!(hs_from_betti(&table, 3, 1), expected1);
        let expected2 = MonomialIdeal::new(3, vec![vec![2, 2, 3], vec![2, 1, 4], vec![1, 2, 4]]);
        assert_eq!(hs_ideal(&p, &cage, 2).unwrap(), expected2);
        assert_eq!(hs_from_betti(&table, 3, 2), expected2);
    }

    #[test]
    fn hs_of_u12() {
        let u = fixtures::u12();
        assert_eq!(
            hs_ideal(&u, &[1, 1], 1).unwrap(),
            MonomialIdeal::new(2, vec![vec![1, 1]])
        );
        // Beyond the projective dimension the ideal is empty, not an error.
        assert!(hs_ideal(&u, &[1, 1], 5).unwrap().is_zero());
    }

    #[test]
    fn monomial_membership_matches_base_domination() {
        for (_, p) in fixtures::corpus() {
            let ideal = polymatroidal_ideal(&p);
            let bound: Point = p.cage().iter().map(|&m| m + 1).collect();
            for n in box_points(&bound) {
                assert_eq!(
                    ideal.contains_monomial(&n),
                    p.dominates_base(&n).unwrap() == 1
                );
            }
        }
    }
}
