//! The coaction `ρ_q` of `ADTq` on the noncommutative torus `xy = q·yx`, the
//! square it forms with the classical coaction, and how a relation with `q`
//! in place of `q²` breaks it.

use qdtorus::algebra::{AlgebraId, Gen, Mutation};
use qdtorus::galois::{verify_coaction_diagram, Rho};

fn main() -> qdtorus::Result<()> {
    let rho = Rho::new(AlgebraId::ADTq);
    println!("ρ(x) = {}", rho.generator(Gen::X));
    println!("ρ(y) = {}", rho.generator(Gen::Y));
    println!("ρ(x⁻¹y²) = {}", rho.monomial(-1, 2)?);
    println!("ρ(x)ρ(y) − qρ(y)ρ(x) = {}", rho.relation_defect());
    for c in verify_coaction_diagram(4, AlgebraId::ADTq)? {
        println!("{:?} {}", c.status, c.name);
    }

    let mutant = Rho::new(AlgebraId::Mutant(Mutation::BcLinear));
    println!(
        "with bc = q·cb: ρ(x)ρ(y) − qρ(y)ρ(x) = {}",
        mutant.relation_defect()
    );
    Ok(())
}
