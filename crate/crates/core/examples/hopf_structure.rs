//! Coproduct, counit, antipode and involution on the generators, followed by
//! the full axiom check on a degree window.

use qdtorus::algebra::{AlgebraId, Element, Gen, Window};
use qdtorus::hopf::{antipode, coproduct, counit, star, verify_hopf_axioms};

fn main() -> qdtorus::Result<()> {
    let alg = AlgebraId::ADTq;
    for g in [Gen::A, Gen::B, Gen::C, Gen::D, Gen::Det, Gen::Z] {
        let x = Element::gen(alg, g);
        println!("{g}:");
        println!("  Δ = {}", coproduct(&x)?);
        println!(
            "  ε = {}, S = {}, * = {}",
            counit(&x)?,
            antipode(&x)?,
            star(&x)?
        );
    }
    for alg in [
        AlgebraId::AUq2,
        AlgebraId::ADTq,
        AlgebraId::AT2,
        AlgebraId::AZ2,
        AlgebraId::Bicross,
    ] {
        let checks = verify_hopf_axioms(alg, Window::degree(3))?;
        let ok = checks.iter().filter(|c| c.passed()).count();
        println!(
            "{alg}: {ok}/{} axioms hold on the degree-3 window",
            checks.len()
        );
    }
    Ok(())
}
