//! The cocleaving map `ℓ : ADTq → A(Z₂)` and the coaction
//! `λ : A(T²) → A(T²) ⊗ A(Z₂)` it induces.

use serde::Serialize;

use super::cleaving::{cleaving_j, j_inverse_monomial, sign, CleavingConvention};
use super::exact::{i_inverse, prj, z2_element};
use crate::algebra::{AlgebraId, Anti, Basis14, Element, Gen, Monomial, QMono};
use crate::error::Result;
use crate::hopf::{
    convolve, coproduct, coproduct_monomial, counit, star, star_tensor, LinearMapTable,
    TensorElement,
};
use crate::report::Check;
use crate::scalars::QScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EllMethod {
    Table,
    FromJ,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LambdaMethod {
    Formula,
    FromL,
}

/// The closed-form values of `ℓ`, extended to the plain powers `Dᵐ`
/// through `Dᵐ = Dᵐz + Dᵐ(1−z)`.
pub fn ell_table_monomial(m: &QMono) -> Element {
    let one = QScalar::one();
    let k = m.det;
    match (m.z, m.diag, m.anti) {
        (_, None, Some((Anti::B, _))) => {
            z2_element(QScalar::zero(), &sign(k) * &QScalar::q_pow(k * k))
        }
        (_, None, Some((Anti::C, _))) => {
            z2_element(QScalar::zero(), &sign(k) * &QScalar::q_pow(-k * k))
        }
        (0, None, None) => z2_element(one, sign(k)),
        _ => z2_element(one, QScalar::zero()),
    }
}

/// `ℓ(p) = p₍₀₎ j⁻¹(p₍₁₎)` for the coaction `(id ⊗ prj)Δ`.
pub fn ell_from_j_monomial(m: &QMono, conv: CleavingConvention) -> Result<Element> {
    let alg = AlgebraId::ADTq;
    let delta = coproduct_monomial(alg, &Monomial::Q(*m))?;
    let mut acc = Element::zero(alg);
    for (ms, c) in delta.terms() {
        let projected = prj(&Element::monomial(alg, ms[1]))?;
        for (t, c2) in projected.terms() {
            let Monomial::Torus(k, l) = t else {
                unreachable!()
            };
            let term = &Element::monomial(alg, ms[0]) * &j_inverse_monomial(*k, *l, conv)?;
            acc.add_scaled(&term, &(c * c2));
        }
    }
    i_inverse(&acc)
}

pub fn ell_table() -> LinearMapTable {
    LinearMapTable::new("ℓ", AlgebraId::ADTq, AlgebraId::AZ2).with_rule(|m| match m {
        Monomial::Q(q) => Ok(ell_table_monomial(q)),
        other => Err(crate::error::Error::WindowExceeded(format!("{other:?}"))),
    })
}

pub fn ell_from_j(conv: CleavingConvention) -> LinearMapTable {
    LinearMapTable::new("ℓ(j)", AlgebraId::ADTq, AlgebraId::AZ2).with_rule(move |m| match m {
        Monomial::Q(q) => ell_from_j_monomial(q, conv),
        other => Err(crate::error::Error::WindowExceeded(format!("{other:?}"))),
    })
}

/// `cocleavingL` on an arbitrary `ADTq` element.
pub fn cocleaving_l(p: &Element, method: EllMethod, conv: CleavingConvention) -> Result<Element> {
    match method {
        EllMethod::Table => ell_table().apply(p),
        EllMethod::FromJ => ell_from_j(conv).apply(p),
    }
}

/// Table against `fromJ`, `ℓ * ℓ = unit∘counit` and the `*`-property on the
/// basis elements `D^m z`, `D^m(1−z)`, `D^m gⁿ` with `|m| ≤ m_max`, `n ≤ n_max`.
pub fn verify_cocleaving(m_max: i64, n_max: u32, conv: CleavingConvention) -> Result<Vec<Check>> {
    let window = Basis14::window(m_max, n_max);
    let table = ell_table();
    let from_j = ell_from_j(conv);
    let square = convolve(&table, &table)?;
    let unit = LinearMapTable::unit_counit(AlgebraId::ADTq, AlgebraId::AZ2);

    let agree = crate::report::first_failure(&window, |b| {
        let p = b.to_element();
        match (table.apply(&p), from_j.apply(&p)) {
            (Ok(x), Ok(y)) if x == y => None,
            (Ok(x), Ok(y)) => Some(format!("ℓ({}): table {x}, from j {y}", b.label())),
            (_, Err(e)) | (Err(e), _) => Some(format!("ℓ({}): {e}", b.label())),
        }
    });
    let involutive = crate::report::first_failure(&window, |b| {
        let p = b.to_element();
        let run = || -> Result<Option<String>> {
            let sq = square.apply(&p)?;
            let u = unit.apply(&p)?;
            Ok((sq != u).then(|| format!("(ℓ*ℓ)({}) = {sq}, ε·1 = {u}", b.label())))
        };
        run().unwrap_or_else(|e| Some(e.to_string()))
    });
    let star_map = crate::report::first_failure(&window, |b| {
        let p = b.to_element();
        let run = || -> Result<Option<String>> {
            let lhs = table.apply(&star(&p)?)?;
            let rhs = star(&table.apply(&p)?)?;
            Ok((lhs != rhs)
                .then(|| format!("ℓ(({})*) = {lhs}, ℓ({})* = {rhs}", b.label(), b.label())))
        };
        run().unwrap_or_else(|e| Some(e.to_string()))
    });
    let detail = format!("{} basis elements, convention {conv}", window.len());
    Ok(vec![
        Check::from_witness("cocleaving/table_equals_from_j", agree).with_detail(detail.clone()),
        Check::from_witness("cocleaving/self_inverse", involutive).with_detail(detail.clone()),
        Check::from_witness("cocleaving/star_map", star_map).with_detail(detail),
    ])
}

fn at2(k: i64, l: i64) -> Element {
    Element::monomial(AlgebraId::AT2, Monomial::Torus(k, l))
}

/// `λ(uᵐvⁿ) = uᵐvⁿ ⊗ δ₀ + uⁿvᵐ ⊗ δ₁`.
pub fn lambda_formula(m: i64, n: i64) -> TensorElement {
    let d0 = Element::gen(AlgebraId::AZ2, Gen::D0);
    let d1 = Element::gen(AlgebraId::AZ2, Gen::D1);
    let mut t = TensorElement::pure(&[&at2(m, n), &d0]);
    t.add_tensor(&TensorElement::pure(&[&at2(n, m), &d1]), &QScalar::one());
    t
}

/// `λ(prj(p)) = prj(p₍₂₎) ⊗ ℓ⁻¹(p₍₁₎)ℓ(p₍₃₎)` with `p = j(uᵐvⁿ)` and `ℓ⁻¹ = ℓ`.
pub fn lambda_from_l(m: i64, n: i64, conv: CleavingConvention) -> Result<TensorElement> {
    let alg = AlgebraId::ADTq;
    let p = cleaving_j(&at2(m, n), conv)?;
    let d1 = coproduct(&p)?;
    let d2 = d1.map_legs(&[alg, alg, alg], |i, x| {
        if i == 0 {
            coproduct_monomial(alg, x)
        } else {
            Ok(TensorElement::pure(&[&Element::monomial(alg, *x)]))
        }
    })?;
    let mut out = TensorElement::zero(&[AlgebraId::AT2, AlgebraId::AZ2]);
    for (ms, c) in d2.terms() {
        let mid = prj(&Element::monomial(alg, ms[1]))?;
        if mid.is_zero() {
            continue;
        }
        let (Monomial::Q(q1), Monomial::Q(q3)) = (&ms[0], &ms[2]) else {
            unreachable!()
        };
        let coeff = &ell_table_monomial(q1) * &ell_table_monomial(q3);
        out.add_tensor(&TensorElement::pure(&[&mid, &coeff]), c);
    }
    Ok(out)
}

pub fn coaction_lambda(
    h: &Element,
    method: LambdaMethod,
    conv: CleavingConvention,
) -> Result<TensorElement> {
    let mut out = TensorElement::zero(&[AlgebraId::AT2, AlgebraId::AZ2]);
    for (m, c) in h.terms() {
        let Monomial::Torus(k, l) = m else {
            return Err(crate::error::Error::CrossAlgebraMix {
                left: AlgebraId::AT2,
                right: h.algebra(),
            });
        };
        let t = match method {
            LambdaMethod::Formula => lambda_formula(*k, *l),
            LambdaMethod::FromL => lambda_from_l(*k, *l, conv)?,
        };
        out.add_tensor(&t, c);
    }
    Ok(out)
}

fn lambda_of_tensor_leg0(t: &TensorElement) -> Result<TensorElement> {
    let legs = [AlgebraId::AT2, AlgebraId::AZ2, AlgebraId::AZ2];
    t.map_legs(&legs, |i, m| match (i, m) {
        (0, Monomial::Torus(k, l)) => Ok(lambda_formula(*k, *l)),
        _ => Ok(TensorElement::pure(&[&Element::monomial(
            AlgebraId::AZ2,
            *m,
        )])),
    })
}

fn delta_leg1(t: &TensorElement) -> Result<TensorElement> {
    let legs = [AlgebraId::AT2, AlgebraId::AZ2, AlgebraId::AZ2];
    t.map_legs(&legs, |i, m| match i {
        1 => coproduct_monomial(AlgebraId::AZ2, m),
        _ => Ok(TensorElement::pure(&[&Element::monomial(
            AlgebraId::AT2,
            *m,
        )])),
    })
}

/// Formula against `fromL`, multiplicativity, the `*`-property and both
/// coaction laws on `uᵐvⁿ`, `|m|,|n| ≤ range`.
pub fn verify_coaction(range: i64, conv: CleavingConvention) -> Result<Vec<Check>> {
    let pts: Vec<(i64, i64)> = (-range..=range)
        .flat_map(|m| (-range..=range).map(move |n| (m, n)))
        .collect();
    let agree = crate::report::first_failure(&pts, |(m, n)| match lambda_from_l(*m, *n, conv) {
        Ok(t) if t == lambda_formula(*m, *n) => None,
        Ok(t) => Some(format!(
            "λ(u^{m}v^{n}): formula {}, from ℓ {t}",
            lambda_formula(*m, *n)
        )),
        Err(e) => Some(format!("λ(u^{m}v^{n}): {e}")),
    });
    let gens = [(1, 0), (-1, 0), (0, 1), (0, -1)];
    let hom = crate::report::first_failure(&pts, |(m, n)| {
        let run = || -> Result<Option<String>> {
            let lam = lambda_formula(*m, *n);
            for (a, b) in gens {
                let prod = &at2(a, b) * &at2(*m, *n);
                let lhs = coaction_lambda(&prod, LambdaMethod::Formula, conv)?;
                let rhs = lambda_formula(a, b).mul(&lam);
                if lhs != rhs {
                    return Ok(Some(format!(
                        "λ(u^{a}v^{b}·u^{m}v^{n}) = {lhs}, product {rhs}"
                    )));
                }
            }
            let lhs = coaction_lambda(&star(&at2(*m, *n))?, LambdaMethod::Formula, conv)?;
            let rhs = star_tensor(&lam)?;
            if lhs != rhs {
                return Ok(Some(format!("λ((u^{m}v^{n})*) = {lhs}, (*⊗*)λ = {rhs}")));
            }
            Ok(None)
        };
        run().unwrap_or_else(|e| Some(e.to_string()))
    });
    let coaction = crate::report::first_failure(&pts, |(m, n)| {
        let run = || -> Result<Option<String>> {
            let lam = lambda_formula(*m, *n);
            let lhs = lambda_of_tensor_leg0(&lam)?;
            let rhs = delta_leg1(&lam)?;
            if lhs != rhs {
                return Ok(Some(format!(
                    "u^{m}v^{n}: (λ⊗id)λ = {lhs}, (id⊗Δ)λ = {rhs}"
                )));
            }
            let mut collapsed = Element::zero(AlgebraId::AT2);
            for (ms, c) in lam.terms() {
                let eps = counit(&Element::monomial(AlgebraId::AZ2, ms[1]))?;
                collapsed.add_scaled(&Element::monomial(AlgebraId::AT2, ms[0]), &(c * &eps));
            }
            Ok((collapsed != at2(*m, *n)).then(|| format!("(id⊗ε)λ(u^{m}v^{n}) = {collapsed}")))
        };
        run().unwrap_or_else(|e| Some(e.to_string()))
    });
    let detail = format!("{} monomials, convention {conv}", pts.len());
    Ok(vec![
        Check::from_witness("coaction/formula_equals_from_l", agree).with_detail(detail.clone()),
        Check::from_witness("coaction/star_algebra_map", hom).with_detail(detail.clone()),
        Check::from_witness("coaction/coaction_laws", coaction).with_detail(detail),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_values() {
        let d2b3 = QMono::det_gen(2, Gen::B, 3);
        assert_eq!(
            ell_table_monomial(&d2b3),
            z2_element(QScalar::zero(), QScalar::q_pow(4))
        );
        let co = Basis14::DetCoZ(1).to_element();
        assert_eq!(
            ell_table().apply(&co).unwrap(),
            z2_element(QScalar::zero(), QScalar::from_int(-1))
        );
        assert_eq!(
            ell_table_monomial(&QMono::det_z(5)),
            z2_element(QScalar::one(), QScalar::zero())
        );
    }

    #[test]
    fn from_j_agrees_small() {
        for c in verify_cocleaving(1, 2, CleavingConvention::Corrected).unwrap() {
            assert!(c.passed(), "{c:?}");
        }
    }

    #[test]
    fn lambda_example() {
        let t = lambda_from_l(2, 3, CleavingConvention::Corrected).unwrap();
        assert_eq!(t, lambda_formula(2, 3));
        let d = lambda_formula(1, 1);
        let unit = &Element::gen(AlgebraId::AZ2, Gen::D0) + &Element::gen(AlgebraId::AZ2, Gen::D1);
        assert_eq!(d, TensorElement::pure(&[&at2(1, 1), &unit]));
    }
}
