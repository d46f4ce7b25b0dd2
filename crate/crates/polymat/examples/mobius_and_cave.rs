//! Möbius tables and cave polynomials, computed along two independent
//! routes and compared.

use polymat::fixtures;
use polymat::invariants::{cave, mobius};

fn main() {
    for name in ["u12", "paper-example-dual", "graphic-k3"] {
        let p = fixtures::by_name(name).unwrap();
        let table = mobius(&p);
        let c = cave(&p);
        assert_eq!(c, table.generating_polynomial());
        println!("{name}:");
        println!("  mobius support: {}", table.support());
        println!("  cave:           {c}\n");
    }
}
