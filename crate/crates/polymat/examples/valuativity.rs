//! Hyperplane splits of a base point set and the valuativity of the cave
//! polynomial: the signed sum of cave polynomials over a subdivision is the
//! zero polynomial.

use polymat::fixtures;
use polymat::valuative::{check_relation, hyperplane_split, valuative_residual};

fn main() {
    let base = fixtures::paper_example_dual().base_points();
    let pieces = hyperplane_split(&base, &[2], 1).unwrap();
    println!("whole:  {base}");
    println!("below:  {}", pieces.below);
    println!("above:  {}", pieces.above);
    println!("middle: {}", pieces.on);

    let relation = pieces.relation(&base).unwrap();
    assert_eq!(check_relation(&relation), None);
    let residual = valuative_residual(&relation).unwrap();
    assert!(residual.is_zero());
    println!("cave residual of the indicator relation: {residual}");
}
