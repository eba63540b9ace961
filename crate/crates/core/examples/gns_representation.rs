//! The GNS representation of `ADTq` as weighted shifts on two lattices,
//! truncated to a finite window: vacuum expectations against the Haar state,
//! relation defects, and operator norms.

use qdtorus::algebra::{AlgebraId, Gen};
use qdtorus::cli::parse_element;
use qdtorus::gns::{
    apply_element, build_generator_operators, estimate_operator_norm, gns_expectation,
    relation_defects, LatticeWindow, Sector, Site, StateVector,
};
use qdtorus::hopf::haar;
use qdtorus::scalars::eval_scalar;

fn main() -> qdtorus::Result<()> {
    let theta = 0.31;
    let ops = build_generator_operators(LatticeWindow::new(6)?, theta, false);

    let e = StateVector::basis(Site::new(Sector::Q, 1, -1));
    for g in [Gen::B, Gen::C, Gen::Det] {
        let x = qdtorus::algebra::Element::gen(AlgebraId::ADTq, g);
        let image: Vec<String> = apply_element(&x, &e, &ops)?
            .iter()
            .map(|(s, a)| format!("({a:.3})·{s}"))
            .collect();
        println!("π({g}) e^q_(1,-1) = {}", image.join(" + "));
    }

    for text in ["z", "b*c", "1 - z + a*d", "D*Dinv"] {
        let x = parse_element(text, AlgebraId::ADTq)?;
        let g = gns_expectation(&x, &ops)?;
        let h = eval_scalar(&haar(&x)?, theta);
        println!("⟨Ω, π({text})Ω⟩ = {:.6}, h({text}) = {:.6}", g.re, h.re);
    }

    let worst = relation_defects(&ops)?
        .into_iter()
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .expect("rules");
    println!("largest relation defect {:.2e} for {}", worst.1, worst.0);

    for text in ["a", "a + b", "a + d", "b*c"] {
        let x = parse_element(text, AlgebraId::ADTq)?;
        println!(
            "‖π({text})‖ ≈ {:.6}",
            estimate_operator_norm(&x, &ops, 1e-10, 20_000)?
        );
    }
    Ok(())
}
