//! The Haar state: exact values, the weight of `z` forced by invariance, and
//! positivity of the Gram matrix `h(pᵢ* pⱼ)` at a sample `q`.

use qdtorus::algebra::{enumerate_basis, AlgebraId, Window};
use qdtorus::cli::parse_element;
use qdtorus::hopf::{derive_haar_weight, gram_spectrum, haar, haar_gram, verify_haar};

fn main() -> qdtorus::Result<()> {
    for text in ["1", "z", "D*z", "a*Dinv*d", "b*c", "(1 - z)*(1 - z)"] {
        println!(
            "h({text}) = {}",
            haar(&parse_element(text, AlgebraId::ADTq)?)?
        );
    }
    println!("h(z) forced by left invariance: {}", derive_haar_weight()?);
    let window = enumerate_basis(AlgebraId::ADTq, Window::degree(3));
    let (min, asym) = gram_spectrum(&haar_gram(&window, 0.31)?);
    println!(
        "Gram matrix over {} monomials at θ = 0.31: min eigenvalue {min:.6}, asymmetry {asym:.1e}",
        window.len()
    );
    for c in verify_haar(5, 3, 0.31)? {
        println!("{:?} {}", c.status, c.name);
    }
    Ok(())
}
