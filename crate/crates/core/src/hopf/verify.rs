use rayon::prelude::*;

use super::{antipode, coproduct, coproduct_monomial, counit, star, star_tensor, TensorElement};
use crate::algebra::{enumerate_basis, AlgebraId, Element, Gen, Monomial, Window};
use crate::error::Result;
use crate::report::Check;
use crate::scalars::QScalar;

const AXIOMS: [&str; 9] = [
    "antipode_left",
    "antipode_right",
    "antipode_star",
    "coassociativity",
    "coproduct_multiplicative",
    "coproduct_star",
    "counit",
    "counit_multiplicative",
    "star_involution",
];

/// Algebra generators used for the homomorphism checks.
pub fn generator_elements(alg: AlgebraId) -> Vec<Element> {
    match alg {
        AlgebraId::AT2 | AlgebraId::AT2q => [(1, 0), (-1, 0), (0, 1), (0, -1)]
            .into_iter()
            .map(|(k, l)| Element::monomial(alg, Monomial::Torus(k, l)))
            .collect(),
        AlgebraId::AZ2 => vec![Element::gen(alg, Gen::D0), Element::gen(alg, Gen::D1)],
        AlgebraId::Bicross => (0..2u8)
            .flat_map(|s| {
                [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)]
                    .into_iter()
                    .map(move |(k, l)| Element::monomial(alg, Monomial::Cross(s, k, l)))
            })
            .collect(),
        _ => [
            Gen::A,
            Gen::B,
            Gen::C,
            Gen::D,
            Gen::Det,
            Gen::DetInv,
            Gen::Z,
        ]
        .into_iter()
        .map(|g| Element::gen(alg, g))
        .collect(),
    }
}

fn delta_left(t: &TensorElement, alg: AlgebraId) -> Result<TensorElement> {
    t.map_legs(&[alg, alg, alg], |i, m| {
        if i == 0 {
            coproduct_monomial(alg, m)
        } else {
            Ok(TensorElement::pure(&[&Element::monomial(alg, *m)]))
        }
    })
}

fn delta_right(t: &TensorElement, alg: AlgebraId) -> Result<TensorElement> {
    t.map_legs(&[alg, alg, alg], |i, m| {
        if i == 1 {
            coproduct_monomial(alg, m)
        } else {
            Ok(TensorElement::pure(&[&Element::monomial(alg, *m)]))
        }
    })
}

fn mismatch(
    p: &Element,
    what: &str,
    lhs: &impl std::fmt::Display,
    rhs: &impl std::fmt::Display,
) -> String {
    format!("p = {p}: {what}: {lhs} ≠ {rhs}")
}

fn check_monomial(alg: AlgebraId, m: &Monomial, gens: &[Element]) -> Result<[Option<String>; 9]> {
    let p = Element::monomial(alg, *m);
    let delta = coproduct(&p)?;
    let eps = counit(&p)?;
    let one = Element::one(alg);
    let mut out: [Option<String>; 9] = Default::default();

    let collapse = |f: &dyn Fn(&Monomial, &Monomial) -> Result<Element>| -> Result<Element> {
        let mut acc = Element::zero(alg);
        for (ms, c) in delta.terms() {
            acc.add_scaled(&f(&ms[0], &ms[1])?, c);
        }
        Ok(acc)
    };
    let mono = |x: &Monomial| Element::monomial(alg, *x);

    let s_left = collapse(&|x, y| Ok(&antipode(&mono(x))? * &mono(y)))?;
    if s_left != one.scale(&eps) {
        out[0] = Some(mismatch(&p, "S(p₁)p₂ vs ε(p)1", &s_left, &one.scale(&eps)));
    }
    let s_right = collapse(&|x, y| Ok(&mono(x) * &antipode(&mono(y))?))?;
    if s_right != one.scale(&eps) {
        out[1] = Some(mismatch(&p, "p₁S(p₂) vs ε(p)1", &s_right, &one.scale(&eps)));
    }
    let sss = antipode(&star(&antipode(&star(&p)?)?)?)?;
    if sss != p {
        out[2] = Some(mismatch(&p, "S∘*∘S∘*", &sss, &p));
    }
    let l = delta_left(&delta, alg)?;
    let r = delta_right(&delta, alg)?;
    if l != r {
        out[3] = Some(mismatch(&p, "(Δ⊗id)Δ − (id⊗Δ)Δ", &l.sub(&r), &0));
    }
    for g in gens {
        let prod = coproduct(&(g * &p))?;
        let expect = coproduct(g)?.mul(&delta);
        if prod != expect {
            out[4] = Some(format!(
                "g = {g}, p = {p}: Δ(gp) − Δ(g)Δ(p) = {}",
                prod.sub(&expect)
            ));
            break;
        }
    }
    for g in gens {
        let lhs = counit(&(g * &p))?;
        let rhs = &counit(g)? * &eps;
        if lhs != rhs {
            out[7] = Some(format!("g = {g}, p = {p}: ε(gp) = {lhs}, ε(g)ε(p) = {rhs}"));
            break;
        }
    }
    let ds = coproduct(&star(&p)?)?;
    let sd = star_tensor(&delta)?;
    if ds != sd {
        out[5] = Some(mismatch(&p, "Δ(p*) − (*⊗*)Δ(p)", &ds.sub(&sd), &0));
    }
    let left = collapse(&|x, y| Ok(mono(y).scale(&counit(&mono(x))?)))?;
    let right = collapse(&|x, y| Ok(mono(x).scale(&counit(&mono(y))?)))?;
    if left != p || right != p {
        out[6] = Some(mismatch(
            &p,
            "(ε⊗id)Δ, (id⊗ε)Δ",
            &format!("{left}, {right}"),
            &p,
        ));
    }
    let ss = star(&star(&p)?)?;
    if ss != p {
        out[8] = Some(mismatch(&p, "**", &ss, &p));
    }
    Ok(out)
}

/// `verifyHopfAxioms`: every axiom checked on every basis monomial of the
/// window; one [`Check`] per axiom carrying the first failure.
pub fn verify_hopf_axioms(alg: AlgebraId, window: Window) -> Result<Vec<Check>> {
    let basis = enumerate_basis(alg, window);
    let gens = generator_elements(alg);
    let results: Vec<[Option<String>; 9]> = basis
        .par_iter()
        .map(|m| check_monomial(alg, m, &gens))
        .collect::<Result<_>>()?;
    let prefix = alg.to_string();
    Ok(AXIOMS
        .iter()
        .enumerate()
        .map(|(i, name)| {
            let w = results.iter().find_map(|r| r[i].clone());
            Check::from_witness(format!("{prefix}/{name}"), w)
                .with_detail(format!("{} basis monomials", basis.len()))
        })
        .collect())
}

/// `S² = id` on the commutative and cocommutative algebras.
pub fn antipode_squared_is_identity(alg: AlgebraId, window: Window) -> Result<Option<String>> {
    for m in enumerate_basis(alg, window) {
        let p = Element::monomial(alg, m);
        let s2 = antipode(&antipode(&p)?)?;
        if s2 != p {
            return Ok(Some(format!("S²({p}) = {s2}")));
        }
    }
    Ok(None)
}

/// Coefficient-free sanity: `ε(1) = 1`.
pub fn counit_of_unit(alg: AlgebraId) -> Result<bool> {
    Ok(counit(&Element::one(alg))? == QScalar::one())
}
