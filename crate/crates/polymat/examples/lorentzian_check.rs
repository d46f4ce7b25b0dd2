//! Lorentzian verification: graded sign change, homogenization, and the
//! exact Hessian-signature sweep.

use polymat::fixtures;
use polymat::lorentzian::{is_denormalized_lorentzian, lorentzian_diagnostic, sign_change};

fn main() {
    for (label, f) in [
        ("K-polynomial", fixtures::printed_k_polynomial()),
        ("dual cave polynomial", fixtures::printed_cave_dual()),
    ] {
        let homog = sign_change(&f).unwrap().homogenize().unwrap();
        let verdict = is_denormalized_lorentzian(&homog).unwrap();
        println!("{label}: denormalized Lorentzian = {verdict}");
        match lorentzian_diagnostic(&homog.normalize()).unwrap() {
            None => println!("  all Hessians have at most one positive eigenvalue"),
            Some(failure) => println!("  diagnostic: {failure}"),
        }
    }
}
