//! The exact sequence `A(Z₂) --i--> ADTq --prj--> A(T²)`.

use crate::algebra::{enumerate_basis, AlgebraId, Element, Gen, Monomial, QMono, Window};
use crate::error::{Error, Result};
use crate::hopf::{
    antipode, coproduct, counit, generator_elements, star, LinearMapTable, TensorElement,
};
use crate::linalg::EchelonBasis;
use crate::report::Check;
use crate::scalars::{QScalar, RatFunc};

use super::cleaving::{co_z, z_elem};

/// `i(δ₀) = z`, `i(δ₁) = 1 − z`.
pub fn i_map(x: &Element) -> Element {
    let mut out = Element::zero(AlgebraId::ADTq);
    for (m, c) in x.terms() {
        match m {
            Monomial::Z2(0) => out.add_scaled(&z_elem(), c),
            Monomial::Z2(_) => out.add_scaled(&co_z(), c),
            _ => unreachable!("A(Z2) element with a foreign monomial"),
        }
    }
    out
}

/// Pulls an `ADTq` element back along `i`; fails with `NotInBaseImage`
/// unless the element lies in `span{z, 1−z}`.
pub fn i_inverse(e: &Element) -> Result<Element> {
    let one = Monomial::Q(QMono::ONE);
    let z = Monomial::Q(QMono::det_z(0));
    if e.terms().any(|(m, _)| *m != one && *m != z) {
        return Err(Error::NotInBaseImage(e.to_string()));
    }
    let c1 = e.coeff(&one);
    let c0 = &e.coeff(&z) + &c1;
    let alg = AlgebraId::AZ2;
    Ok(&Element::gen(alg, Gen::D0).scale(&c0) + &Element::gen(alg, Gen::D1).scale(&c1))
}

/// `prj` on a normal monomial of `ADTq` (or its mutant): `a ↦ u`, `d ↦ v`,
/// `D ↦ uv`, `z ↦ 1`, `b, c ↦ 0`.
pub fn prj_monomial(m: &QMono) -> Option<(i64, i64)> {
    if m.anti.is_some() {
        return None;
    }
    let (mut k, mut l) = (m.det, m.det);
    match m.diag {
        Some((crate::algebra::Diag::A, n)) => k += n as i64,
        Some((crate::algebra::Diag::D, n)) => l += n as i64,
        None => {}
    }
    Some((k, l))
}

pub fn prj(e: &Element) -> Result<Element> {
    if !matches!(e.algebra(), AlgebraId::ADTq | AlgebraId::Mutant(_)) {
        return Err(Error::CrossAlgebraMix {
            left: AlgebraId::ADTq,
            right: e.algebra(),
        });
    }
    let mut out = Element::zero(AlgebraId::AT2);
    for (m, c) in e.terms() {
        let Monomial::Q(q) = m else { unreachable!() };
        if let Some((k, l)) = prj_monomial(q) {
            out.add_term(Monomial::Torus(k, l), c.clone());
        }
    }
    Ok(out)
}

pub fn prj_tensor(t: &TensorElement, legs: &[usize]) -> Result<TensorElement> {
    let targets: Vec<AlgebraId> = t
        .legs()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            if legs.contains(&i) {
                AlgebraId::AT2
            } else {
                *a
            }
        })
        .collect();
    let src = t.legs().to_vec();
    t.map_legs(&targets, |i, m| {
        let e = Element::monomial(src[i], *m);
        let img = if legs.contains(&i) { prj(&e)? } else { e };
        Ok(TensorElement::pure(&[&img]))
    })
}

pub fn i_table() -> LinearMapTable {
    LinearMapTable::new("i", AlgebraId::AZ2, AlgebraId::ADTq)
        .with_image(Monomial::Z2(0), z_elem())
        .with_image(Monomial::Z2(1), co_z())
}

pub fn prj_table() -> LinearMapTable {
    LinearMapTable::new("prj", AlgebraId::ADTq, AlgebraId::AT2)
        .with_rule(|m| prj(&Element::monomial(AlgebraId::ADTq, *m)))
}

fn rat_vector(e: &Element, index: &[Monomial]) -> Vec<RatFunc> {
    index
        .iter()
        .map(|m| RatFunc::from_qscalar(&e.coeff(m)))
        .collect()
}

/// `verifyExactSequence` on the `ADTq` basis window and the `A(T²)` box of
/// radius `range`.
pub fn verify_exact_sequence(window: Window, range: i64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let deltas = [
        Element::gen(AlgebraId::AZ2, Gen::D0),
        Element::gen(AlgebraId::AZ2, Gen::D1),
    ];

    // i: injective *-Hopf map
    let imgs: Vec<Element> = deltas.iter().map(i_map).collect();
    let index = [Monomial::Q(QMono::ONE), Monomial::Q(QMono::det_z(0))];
    let mut eb = EchelonBasis::new(2, RatFunc::zero());
    let independent = imgs.iter().all(|e| eb.insert(&rat_vector(e, &index)));
    checks.push(Check::from_witness(
        "exactseq/i_injective",
        (!independent).then(|| format!("i(δ₀) = {}, i(δ₁) = {}", imgs[0], imgs[1])),
    ));
    let mut i_hopf = None;
    for x in &deltas {
        let lhs = coproduct(&i_map(x))?;
        let rhs = coproduct(x)?.map_legs(&[AlgebraId::ADTq, AlgebraId::ADTq], |_, m| {
            Ok(TensorElement::pure(&[&i_map(&Element::monomial(
                AlgebraId::AZ2,
                *m,
            ))]))
        })?;
        if lhs != rhs {
            i_hopf = Some(format!("Δ(i({x})) = {lhs} vs (i⊗i)Δ({x}) = {rhs}"));
        } else if counit(&i_map(x))? != counit(x)? {
            i_hopf = Some(format!("ε(i({x})) ≠ ε({x})"));
        } else if antipode(&i_map(x))? != i_map(&antipode(x)?) {
            i_hopf = Some(format!("S(i({x})) ≠ i(S({x}))"));
        } else if star(&i_map(x))? != i_map(&star(x)?) {
            i_hopf = Some(format!("i({x})* ≠ i({x}*)"));
        }
        for y in &deltas {
            if i_map(&(x * y)) != &i_map(x) * &i_map(y) {
                i_hopf = Some(format!("i({x}·{y}) ≠ i({x})i({y})"));
            }
        }
    }
    checks.push(Check::from_witness("exactseq/i_hopf_star_map", i_hopf));

    // prj ∘ i = unit ∘ counit
    let mut pi = None;
    for x in &deltas {
        let lhs = prj(&i_map(x))?;
        let rhs = Element::scalar(AlgebraId::AT2, counit(x)?);
        if lhs != rhs {
            pi = Some(format!("prj(i({x})) = {lhs}, ε({x})·1 = {rhs}"));
        }
    }
    checks.push(Check::from_witness(
        "exactseq/prj_after_i_is_unit_counit",
        pi,
    ));

    // prj: Hopf *-map on the window
    let basis = enumerate_basis(AlgebraId::ADTq, window);
    let gens = generator_elements(AlgebraId::ADTq);
    let prj_witness = crate::report::first_failure(&basis, |m| {
        let run = || -> Result<Option<String>> {
            let p = Element::monomial(AlgebraId::ADTq, *m);
            let pp = prj(&p)?;
            let lhs = coproduct(&pp)?;
            let rhs = prj_tensor(&coproduct(&p)?, &[0, 1])?;
            if lhs != rhs {
                return Ok(Some(format!(
                    "Δ(prj({p})) = {lhs} vs (prj⊗prj)Δ({p}) = {rhs}"
                )));
            }
            if counit(&pp)? != counit(&p)? {
                return Ok(Some(format!("ε(prj({p})) ≠ ε({p})")));
            }
            if prj(&antipode(&p)?)? != antipode(&pp)? {
                return Ok(Some(format!("prj(S({p})) ≠ S(prj({p}))")));
            }
            if prj(&star(&p)?)? != star(&pp)? {
                return Ok(Some(format!("prj({p}*) ≠ prj({p})*")));
            }
            for g in &gens {
                if prj(&(g * &p))? != &prj(g)? * &pp {
                    return Ok(Some(format!("prj({g}·{p}) ≠ prj({g})prj({p})")));
                }
            }
            Ok(None)
        };
        run().unwrap_or_else(|e| Some(e.to_string()))
    });
    checks.push(
        Check::from_witness("exactseq/prj_hopf_star_map", prj_witness)
            .with_detail(format!("{} basis monomials", basis.len())),
    );

    // prj surjective onto the A(T²) box
    let mut missing = None;
    'outer: for k in -range..=range {
        for l in -range..=range {
            let pre = super::cleaving::j_classical(k, l);
            if prj(&pre)? != Element::monomial(AlgebraId::AT2, Monomial::Torus(k, l)) {
                missing = Some(format!(
                    "u^{k}v^{l} has no preimage among D^m a^n, D^m z, D^m d^n"
                ));
                break 'outer;
            }
        }
    }
    checks.push(
        Check::from_witness("exactseq/prj_surjective", missing)
            .with_detail(format!("|k|,|l| ≤ {range}")),
    );

    // ker prj = (1 − z)·ADTq on the window
    let targets: Vec<Monomial> = {
        let mut t: Vec<Monomial> = basis
            .iter()
            .filter_map(|m| m.as_q().and_then(prj_monomial))
            .map(|(k, l)| Monomial::Torus(k, l))
            .collect();
        t.sort();
        t.dedup();
        t
    };
    let mut image = EchelonBasis::new(targets.len(), RatFunc::zero());
    for m in &basis {
        image.insert(&rat_vector(
            &prj(&Element::monomial(AlgebraId::ADTq, *m))?,
            &targets,
        ));
    }
    let kernel_dim = basis.len() - image.rank();
    let mut ideal = EchelonBasis::new(basis.len(), RatFunc::zero());
    let mut ideal_witness = None;
    for m in &basis {
        let x = &co_z() * &Element::monomial(AlgebraId::ADTq, *m);
        if !prj(&x)?.is_zero() {
            ideal_witness = Some(format!("prj((1−z)·{x}) ≠ 0"));
        }
        if x.terms().any(|(t, _)| !basis.contains(t)) {
            continue;
        }
        ideal.insert(&rat_vector(&x, &basis));
    }
    if ideal_witness.is_none() && ideal.rank() != kernel_dim {
        ideal_witness = Some(format!(
            "dim ker prj = {kernel_dim} but dim (1−z)·W = {}",
            ideal.rank()
        ));
    }
    checks.push(
        Check::from_witness("exactseq/kernel_is_ideal_of_z_minus_1", ideal_witness).with_detail(
            format!("kernel dimension {kernel_dim} on {} monomials", basis.len()),
        ),
    );
    Ok(checks)
}

/// Scalar helper used when pulling values back to `A(Z₂)`.
pub fn z2_element(c0: QScalar, c1: QScalar) -> Element {
    let alg = AlgebraId::AZ2;
    &Element::gen(alg, Gen::D0).scale(&c0) + &Element::gen(alg, Gen::D1).scale(&c1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_images() {
        let alg = AlgebraId::ADTq;
        let t = |k, l| Element::monomial(AlgebraId::AT2, Monomial::Torus(k, l));
        assert_eq!(prj(&Element::gen(alg, Gen::A)).unwrap(), t(1, 0));
        assert_eq!(prj(&Element::gen(alg, Gen::D)).unwrap(), t(0, 1));
        assert_eq!(prj(&Element::gen(alg, Gen::Det)).unwrap(), t(1, 1));
        assert!(prj(&Element::gen(alg, Gen::B)).unwrap().is_zero());
        assert_eq!(prj(&Element::gen(alg, Gen::Z)).unwrap(), t(0, 0));
        assert_eq!(
            i_map(&Element::gen(AlgebraId::AZ2, Gen::D0)),
            Element::gen(alg, Gen::Z)
        );
    }

    #[test]
    fn exact_sequence_small_window() {
        for c in verify_exact_sequence(Window::degree(3), 3).unwrap() {
            assert!(c.passed(), "{c:?}");
        }
    }
}
