//! The bicross product `A(Z₂) ⋉ A(T²)` and the isomorphism
//! `Φ(δ_s ⊗ h) = i(δ_s) j(h)` onto `ADTq`.

use qdtorus::algebra::{AlgebraId, Element, Monomial};
use qdtorus::galois::{phi, phi_inverse, verify_bicross_iso, CleavingConvention};

fn main() -> qdtorus::Result<()> {
    let conv = CleavingConvention::Corrected;
    let cross = |s, k, l| Element::monomial(AlgebraId::Bicross, Monomial::Cross(s, k, l));
    let u = &cross(0, 1, 0) + &cross(1, 1, 0);
    let v = &cross(0, 0, 1) + &cross(1, 0, 1);
    println!("u·v = {}", &u * &v);
    println!("v·u = {}", &v * &u);
    for x in [cross(0, 0, 0), cross(1, 2, 2), u.clone(), &u * &v] {
        let image = phi(&x, conv)?;
        println!(
            "Φ({x}) = {image},  Φ⁻¹ gives back {}",
            phi_inverse(&image, conv)?
        );
    }
    for c in verify_bicross_iso(2, 2, 200, 7, conv)? {
        println!(
            "{:?} {} ({})",
            c.status,
            c.name,
            c.detail.unwrap_or_default()
        );
    }
    Ok(())
}
