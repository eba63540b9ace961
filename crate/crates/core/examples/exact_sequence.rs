//! The exact sequence `A(Z₂) → ADTq → A(T²)`: the inclusion `i`, the
//! projection `prj`, and their Hopf-map checks.

use qdtorus::algebra::{AlgebraId, Element, Gen, Window};
use qdtorus::galois::{i_map, prj, verify_exact_sequence};

fn main() -> qdtorus::Result<()> {
    for g in [Gen::D0, Gen::D1] {
        let x = Element::gen(AlgebraId::AZ2, g);
        println!("i({x}) = {}", i_map(&x));
    }
    for g in [Gen::A, Gen::B, Gen::C, Gen::D, Gen::Det, Gen::Z] {
        let x = Element::gen(AlgebraId::ADTq, g);
        println!("prj({x}) = {}", prj(&x)?);
    }
    for c in verify_exact_sequence(Window::degree(4), 3)? {
        println!("{:?} {}", c.status, c.name);
    }
    Ok(())
}
