//! Parsing expressions and reducing them to normal form with the rewrite
//! systems of `A(U_{q⁻¹,q}(2))` and its quotient `ADTq`.

use qdtorus::algebra::{check_confluence, AlgebraId, RewriteSystem};
use qdtorus::cli::parse_element;

fn main() -> qdtorus::Result<()> {
    for (alg, text) in [
        (AlgebraId::AUq2, "c*b"),
        (AlgebraId::ADTq, "c*b"),
        (AlgebraId::ADTq, "a*b"),
        (AlgebraId::ADTq, "d*a - D*Dinv"),
        (AlgebraId::ADTq, "(a + q*b)*(c - 1/2*Dinv)"),
        (AlgebraId::AT2, "v^-1*u*v"),
    ] {
        println!("{alg:>5}: {text}  =  {}", parse_element(text, alg)?);
    }

    for (name, sys) in [
        ("AUq2", RewriteSystem::cached_auq2()),
        ("ADTq", RewriteSystem::cached_adtq()),
    ] {
        let open = check_confluence(sys, 6);
        println!(
            "{name}: {} rules, {} unresolved critical pairs up to degree 6",
            sys.rules().len(),
            open.len()
        );
    }
    Ok(())
}
