//! The bicross product `A(Z₂) ⋉ A(T²)` with cocycle `σ` and coaction `λ`,
//! and its isomorphism `Φ(x ⊗ h) = i(x) j(h)` onto `ADTq`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::cleaving::{cleaving_j, CleavingConvention};
use super::cocycle::sigma_q;
use super::exact::i_map;
use crate::algebra::{AlgebraId, Basis14, Element, Gen, Monomial};
use crate::error::{Error, Result};
use crate::hopf::{self, counit, star, TensorElement};
use crate::linalg::EchelonBasis;
use crate::report::Check;
use crate::scalars::{QScalar, RatFunc};

fn cross(s: u8, (k, l): (i64, i64)) -> Element {
    Element::monomial(AlgebraId::Bicross, Monomial::Cross(s, k, l))
}

/// `(δ_s ⊗ h)(δ_t ⊗ g) = [s = t] δ_s σ_s(h, g) ⊗ hg`.
pub fn crossed_product(s: u8, h: (i64, i64), t: u8, g: (i64, i64)) -> Element {
    if s != t {
        return Element::zero(AlgebraId::Bicross);
    }
    let hg = (h.0 + g.0, h.1 + g.1);
    if s == 0 {
        cross(0, hg)
    } else {
        cross(1, hg).scale(&sigma_q(h.0, h.1, g.0, g.1))
    }
}

/// `Δ(δ_s ⊗ h) = Σ_{s₁+s₂=s} (δ_{s₁} ⊗ τ^{s₂}h) ⊗ (δ_{s₂} ⊗ h)`, `τ` swapping exponents.
pub fn coproduct(s: u8, (k, l): (i64, i64)) -> Result<TensorElement> {
    let mut out = TensorElement::zero(&[AlgebraId::Bicross, AlgebraId::Bicross]);
    for s1 in 0..2u8 {
        let s2 = s ^ s1;
        let left = if s2 == 0 { (k, l) } else { (l, k) };
        out.add_tensor(
            &TensorElement::pure(&[&cross(s1, left), &cross(s2, (k, l))]),
            &QScalar::one(),
        );
    }
    Ok(out)
}

pub fn antipode(s: u8, (k, l): (i64, i64)) -> Element {
    if s == 0 {
        cross(0, (-k, -l))
    } else {
        // S(δ₁ ⊗ g) = σ_q(τg⁻¹, τg)⁻¹ δ₁ ⊗ (τg)⁻¹
        let c = sigma_q(-l, -k, l, k)
            .unit_inverse()
            .expect("cocycle values are units");
        cross(1, (-l, -k)).scale(&c)
    }
}

/// `Φ(x ⊗ h) = i(x)·j(h)` on a pure tensor.
pub fn bicross_iso_phi(x: &Element, h: &Element, conv: CleavingConvention) -> Result<Element> {
    if x.algebra() != AlgebraId::AZ2 {
        return Err(Error::CrossAlgebraMix {
            left: AlgebraId::AZ2,
            right: x.algebra(),
        });
    }
    Ok(&i_map(x) * &cleaving_j(h, conv)?)
}

/// `Φ` on an element of the bicross product.
pub fn phi(e: &Element, conv: CleavingConvention) -> Result<Element> {
    if e.algebra() != AlgebraId::Bicross {
        return Err(Error::CrossAlgebraMix {
            left: AlgebraId::Bicross,
            right: e.algebra(),
        });
    }
    let mut out = Element::zero(AlgebraId::ADTq);
    for (m, c) in e.terms() {
        let Monomial::Cross(s, k, l) = m else {
            unreachable!()
        };
        let x = Element::monomial(AlgebraId::AZ2, Monomial::Z2(*s));
        let h = Element::monomial(AlgebraId::AT2, Monomial::Torus(*k, *l));
        out.add_scaled(&bicross_iso_phi(&x, &h, conv)?, c);
    }
    Ok(out)
}

/// The bicross monomial whose image is a multiple of the given basis element.
fn preimage_label(b: Basis14, conv: CleavingConvention) -> (u8, (i64, i64)) {
    match b {
        Basis14::DetZ(m) => (0, (m, m)),
        Basis14::DetCoZ(m) => match conv {
            CleavingConvention::Corrected => (1, (m, m)),
            CleavingConvention::Printed => (1, (-m, -m)),
        },
        Basis14::Gen(m, Gen::A, n) => (0, (m + n as i64, m)),
        Basis14::Gen(m, Gen::D, n) => (0, (m, m + n as i64)),
        Basis14::Gen(m, Gen::C, n) => (1, (m + n as i64, m)),
        Basis14::Gen(m, _, n) => (1, (m, m + n as i64)),
    }
}

/// `Φ⁻¹`, read off basis element by basis element.
pub fn phi_inverse(e: &Element, conv: CleavingConvention) -> Result<Element> {
    let mut out = Element::zero(AlgebraId::Bicross);
    for (b, c) in Basis14::coordinates(e) {
        let (s, g) = preimage_label(b, conv);
        let image = phi(&cross(s, g), conv)?;
        let coords = Basis14::coordinates(&image);
        let [(b2, kappa)] = coords.as_slice() else {
            return Err(Error::NotInvertible(format!(
                "Φ(δ{s}⊗u^{}v^{}) = {image}",
                g.0, g.1
            )));
        };
        if *b2 != b {
            return Err(Error::NotInvertible(format!(
                "Φ does not reach {}",
                b.label()
            )));
        }
        let kinv = kappa
            .unit_inverse()
            .ok_or_else(|| Error::NotInvertible(kappa.to_string()))?;
        out.add_scaled(&cross(s, g), &(&c * &kinv));
    }
    Ok(out)
}

fn phi_tensor(t: &TensorElement, conv: CleavingConvention) -> Result<TensorElement> {
    let legs = vec![AlgebraId::ADTq; t.rank()];
    t.map_legs(&legs, |_, m| {
        Ok(TensorElement::pure(&[&phi(
            &Element::monomial(AlgebraId::Bicross, *m),
            conv,
        )?]))
    })
}

/// Bicross monomials mapping onto the `ADTq` basis window `|m| ≤ m_max`, `n ≤ n_max`.
pub fn bicross_window(m_max: i64, n_max: u32, conv: CleavingConvention) -> Vec<Monomial> {
    Basis14::window(m_max, n_max)
        .into_iter()
        .map(|b| {
            let (s, (k, l)) = preimage_label(b, conv);
            Monomial::Cross(s, k, l)
        })
        .collect()
}

/// Bijectivity, multiplicativity, comultiplicativity and compatibility of
/// `Φ` with counit, antipode and involution.
pub fn verify_bicross_iso(
    m_max: i64,
    n_max: u32,
    random_pairs: usize,
    seed: u64,
    conv: CleavingConvention,
) -> Result<Vec<Check>> {
    let window = bicross_window(m_max, n_max, conv);
    let elems: Vec<Element> = window
        .iter()
        .map(|m| Element::monomial(AlgebraId::Bicross, *m))
        .collect();
    let images: Vec<Element> = elems.iter().map(|e| phi(e, conv)).collect::<Result<_>>()?;

    let mut targets: Vec<Monomial> = images
        .iter()
        .flat_map(|e| e.terms().map(|(m, _)| *m))
        .collect();
    targets.sort();
    targets.dedup();
    let mut span = EchelonBasis::new(targets.len(), RatFunc::zero());
    for e in &images {
        span.insert(
            &targets
                .iter()
                .map(|m| RatFunc::from_qscalar(&e.coeff(m)))
                .collect::<Vec<_>>(),
        );
    }
    let mut bij = None;
    if span.rank() != window.len() || targets.len() != window.len() {
        bij = Some(format!(
            "rank {} on {} monomials onto {} targets",
            span.rank(),
            window.len(),
            targets.len()
        ));
    }
    for (x, y) in elems.iter().zip(&images) {
        if bij.is_some() {
            break;
        }
        let back = phi_inverse(y, conv)?;
        if &back != x {
            bij = Some(format!("Φ⁻¹(Φ({x})) = {back}"));
        }
    }
    let mut checks = vec![Check::from_witness("bicross/phi_bijective", bij)
        .with_detail(format!("{} window monomials", window.len()))];

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..elems.len())
        .flat_map(|i| (0..elems.len()).map(move |j| (i, j)))
        .collect();
    pairs.shuffle(&mut rng);
    pairs.truncate(random_pairs);
    let product = crate::report::first_failure(&pairs, |(i, j)| {
        let lhs = phi(&(&elems[*i] * &elems[*j]), conv).ok()?;
        let rhs = &images[*i] * &images[*j];
        (lhs != rhs).then(|| format!("Φ({}·{}) = {lhs}, Φ·Φ = {rhs}", elems[*i], elems[*j]))
    });
    checks.push(
        Check::from_witness("bicross/phi_multiplicative", product)
            .with_detail(format!("{} random pairs, seed {seed}", pairs.len())),
    );

    let idx: Vec<usize> = (0..elems.len()).collect();
    let coalgebra = crate::report::first_failure(&idx, |i| {
        let run = || -> Result<Option<String>> {
            let (x, y) = (&elems[*i], &images[*i]);
            let lhs = phi_tensor(&hopf::coproduct(x)?, conv)?;
            let rhs = hopf::coproduct(y)?;
            if lhs != rhs {
                return Ok(Some(format!("(Φ⊗Φ)Δ({x}) = {lhs}, ΔΦ = {rhs}")));
            }
            if counit(x)? != counit(y)? {
                return Ok(Some(format!("ε({x}) ≠ ε(Φ({x}))")));
            }
            if phi(&hopf::antipode(x)?, conv)? != hopf::antipode(y)? {
                return Ok(Some(format!("Φ(S({x})) ≠ S(Φ({x}))")));
            }
            if phi(&star(x)?, conv)? != star(y)? {
                return Ok(Some(format!("Φ({x}*) ≠ Φ({x})*")));
            }
            Ok(None)
        };
        run().unwrap_or_else(|e| Some(e.to_string()))
    });
    checks.push(
        Check::from_witness("bicross/phi_hopf_star_compatible", coalgebra)
            .with_detail(format!("{} window monomials", window.len())),
    );
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_example() {
        let one = |g| &cross(0, g) + &cross(1, g);
        let prod = &one((1, 0)) * &one((0, 1));
        let expect = &cross(0, (1, 1)) + &cross(1, (1, 1)).scale(&QScalar::q_pow(-1));
        assert_eq!(prod, expect);
        assert_eq!(&cross(0, (0, 0)) * &cross(0, (0, 0)), cross(0, (0, 0)));
    }

    #[test]
    fn phi_examples() {
        let conv = CleavingConvention::Corrected;
        let alg = AlgebraId::ADTq;
        assert_eq!(
            phi(&cross(0, (0, 0)), conv).unwrap(),
            Element::gen(alg, Gen::Z)
        );
        let u = &cross(0, (1, 0)) + &cross(1, (1, 0));
        assert_eq!(
            phi(&u, conv).unwrap(),
            &Element::gen(alg, Gen::A) + &Element::gen(alg, Gen::C)
        );
        let expect = Basis14::DetCoZ(2).to_element();
        assert_eq!(phi(&cross(1, (2, 2)), conv).unwrap(), expect);
    }

    #[test]
    fn iso_small() {
        for c in verify_bicross_iso(1, 2, 50, 7, CleavingConvention::Corrected).unwrap() {
            assert!(c.passed(), "{c:?}");
        }
    }
}
