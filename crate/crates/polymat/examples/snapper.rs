//! Snapper polynomials via the binomial transform of the cave polynomial,
//! with a spot check that values on lattice points are nonnegative integers.

use num_traits::Signed;
use polymat::fixtures;
use polymat::invariants::snapper;
use polymat::poly::rat;
use polymat::syzygy::box_points;

fn main() {
    for name in ["u12", "U(2;2,2)", "paper-example-dual"] {
        let p = fixtures::by_name(name).unwrap();
        let snap = snapper(&p);
        println!("{name}: {snap}");
        for v in box_points(&vec![2; p.ground_set_size()]) {
            let args: Vec<_> = v.iter().map(|&c| rat(c)).collect();
            let value = snap.evaluate(&args).unwrap();
            assert!(value.is_integer() && !value.is_negative());
        }
    }
    let dual = fixtures::paper_example_dual();
    let at_ones = snapper(&dual).evaluate(&[rat(1), rat(1), rat(1)]).unwrap();
    println!("value of the last one at (1,1,1): {at_ones}");
}
