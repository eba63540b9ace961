//! The cleaving map `j : A(T²) → ADTq`, its convolution inverse, and the
//! cocycle `σ` computed both from its closed form and as `j(h)j(g)j⁻¹(hg)`.
//! The same computation under the alternative sign convention for the
//! diagonal leaves the image of `A(Z₂)`.

use qdtorus::galois::{
    compare_sigma_methods, convention_summary, j_inverse_monomial, j_monomial, sigma_convolution,
    sigma_table, verify_cleaving, CleavingConvention,
};

fn main() -> qdtorus::Result<()> {
    let conv = CleavingConvention::Corrected;
    for (k, l) in [(1, 0), (0, 1), (1, 1), (2, 1), (-1, -1)] {
        println!("j(u^{k}v^{l}) = {}", j_monomial(k, l, conv));
        println!("j⁻¹(u^{k}v^{l}) = {}", j_inverse_monomial(k, l, conv)?);
    }
    for (h, g) in [((1, 0), (0, 1)), ((2, 1), (3, 1)), ((1, 2), (1, 1))] {
        println!(
            "σ(u^{}v^{} ⊗ u^{}v^{}): table {}, convolution {}",
            h.0,
            h.1,
            g.0,
            g.1,
            sigma_table(h, g, false),
            sigma_convolution(h, g, conv)?
        );
    }
    let c = compare_sigma_methods(3, conv);
    println!(
        "{:?} {} ({})",
        c.status,
        c.name,
        c.detail.unwrap_or_default()
    );
    for c in verify_cleaving(3, conv)? {
        println!("{:?} {}", c.status, c.name);
    }

    let printed = CleavingConvention::Printed;
    match sigma_convolution((1, 1), (1, 0), printed) {
        Ok(v) => println!("printed convention: σ(uv ⊗ u) = {v}"),
        Err(e) => println!("printed convention: σ(uv ⊗ u) fails: {e}"),
    }
    let s = convention_summary(printed);
    println!(
        "{}: sigma consistent {}, ell consistent {}, colinear {}",
        s.label, s.sigma_consistent, s.ell_consistent, s.colinear
    );
    Ok(())
}
