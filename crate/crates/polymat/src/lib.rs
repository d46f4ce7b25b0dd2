//! Exact arithmetic for discrete polymatroids: base and independence
//! polytopes, Möbius functions on lattice points, cave and Snapper
//! polynomials, polymatroidal ideals with their multigraded Betti numbers
//! and K-polynomials, homological shift ideals, a Lorentzian-polynomial
//! verifier, and a valuativity harness for hyperplane subdivisions.
//!
//! Everything is computed over exact integers and rationals; no floating
//! point anywhere. Ground sets are limited to 16 elements.
//!
//! The headline invariants are each computable by two independent routes
//! (K-polynomials via the dual cave polynomial or via an explicit free
//! resolution; homological shift ideals via Möbius supports or via Betti
//! degrees), and the test suite crosses them against each other on a corpus
//! of fixtures.

pub mod cli;
pub mod fixtures;
pub mod invariants;
pub mod io;
pub mod lorentzian;
pub mod point;
pub mod poly;
pub mod polymatroid;
pub mod syzygy;
pub mod valuative;

pub use invariants::{binomial_transform, cave, cave_permuted, mobius, snapper, MobiusTable};
pub use lorentzian::{
    is_denormalized_lorentzian, is_lorentzian, lorentzian_diagnostic, sign_change,
    LorentzianFailure, SymmetricMatrix,
};
pub use point::{Point, PointSet};
pub use poly::SparsePoly;
pub use polymatroid::{Polymatroid, PolymatroidError};
pub use syzygy::{
    betti_table, hs_from_betti, hs_ideal, k_polynomial_from_betti, k_polynomial_from_cave,
    polymatroidal_ideal, BettiTable, MonomialIdeal,
};
pub use valuative::{
    check_relation, hyperplane_split, valuative_check, valuative_residual, Relation, SplitPieces,
};
