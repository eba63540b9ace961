//! The cocleaving map `ℓ : ADTq → A(Z₂)` and the coaction
//! `λ : A(T²) → A(T²) ⊗ A(Z₂)`, each from its closed form and rebuilt from `j`.

use qdtorus::algebra::{AlgebraId, Element, QMono};
use qdtorus::galois::{
    cocleaving_l, lambda_formula, lambda_from_l, verify_coaction, verify_cocleaving,
    CleavingConvention, EllMethod,
};

fn main() -> qdtorus::Result<()> {
    let conv = CleavingConvention::Corrected;
    for text in [
        QMono::det(1),
        QMono::det_z(2),
        QMono::det_gen(1, qdtorus::algebra::Gen::B, 2),
    ] {
        let p = Element::monomial(AlgebraId::ADTq, text);
        println!(
            "ℓ({p}) = {}  (from j: {})",
            cocleaving_l(&p, EllMethod::Table, conv)?,
            cocleaving_l(&p, EllMethod::FromJ, conv)?
        );
    }
    for (m, n) in [(1, 0), (2, -1)] {
        println!(
            "λ(u^{m}v^{n}) = {}  (from ℓ: {})",
            lambda_formula(m, n),
            lambda_from_l(m, n, conv)?
        );
    }
    for c in verify_cocleaving(3, 3, conv)?
        .into_iter()
        .chain(verify_coaction(3, conv)?)
    {
        println!("{:?} {}", c.status, c.name);
    }
    Ok(())
}
