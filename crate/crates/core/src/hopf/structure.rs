//! Coproduct, counit, antipode and involution on every Hopf-bearing algebra.
//!
//! On the quantum algebras the maps are fixed on generators (row convention
//! `Δu_{ij} = Σ u_{ik} ⊗ u_{kj}` for `u = (a b; c d)`) and extended along
//! normal-form words: multiplicatively for `Δ` and `ε`, anti-multiplicatively
//! for `S` and `*`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::TensorElement;
use crate::algebra::{fdquot_lookup, AlgebraId, Element, Gen, Monomial, QMono};
use crate::error::{Error, Result};
use crate::galois::bicross;
use crate::scalars::QScalar;

fn q(k: i64) -> QScalar {
    QScalar::q_pow(k)
}

fn quantum_word_alg(alg: AlgebraId) -> bool {
    matches!(
        alg,
        AlgebraId::AUq2 | AlgebraId::ADTq | AlgebraId::Mutant(_)
    )
}

fn g(alg: AlgebraId, x: Gen) -> Element {
    Element::gen(alg, x)
}

fn tensor2(x: &Element, y: &Element) -> TensorElement {
    TensorElement::pure(&[x, y])
}

/// `Δ` on one generator letter.
fn gen_coproduct(alg: AlgebraId, x: Gen) -> TensorElement {
    let (a, b, c, d) = (
        g(alg, Gen::A),
        g(alg, Gen::B),
        g(alg, Gen::C),
        g(alg, Gen::D),
    );
    let sum = |p: TensorElement, r: TensorElement| p.checked_add(&r).expect("same legs");
    match x {
        Gen::A => sum(tensor2(&a, &a), tensor2(&b, &c)),
        Gen::B => sum(tensor2(&a, &b), tensor2(&b, &d)),
        Gen::C => sum(tensor2(&c, &a), tensor2(&d, &c)),
        Gen::D => sum(tensor2(&c, &b), tensor2(&d, &d)),
        Gen::Det | Gen::DetInv => {
            let e = g(alg, x);
            tensor2(&e, &e)
        }
        // z = D⁻¹ad
        Gen::Z => gen_coproduct(alg, Gen::DetInv)
            .mul(&gen_coproduct(alg, Gen::A))
            .mul(&gen_coproduct(alg, Gen::D)),
        _ => unreachable!("not a quantum generator"),
    }
}

type Cache<V> = Mutex<HashMap<(AlgebraId, QMono), V>>;

fn coproduct_cache() -> &'static Cache<TensorElement> {
    static C: OnceLock<Cache<TensorElement>> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn antipode_cache() -> &'static Cache<Element> {
    static C: OnceLock<Cache<Element>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// Normal word `w` as `prefix · last`; the prefix of a normal word is normal.
fn split_last(m: &QMono) -> Option<(QMono, Gen)> {
    let mut w = m.to_word();
    let last = w.pop()?;
    Some((QMono::from_word(&w).expect("prefix of a normal word"), last))
}

fn quantum_monomial_coproduct(alg: AlgebraId, m: &QMono) -> TensorElement {
    if let Some(t) = coproduct_cache()
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .get(&(alg, *m))
    {
        return t.clone();
    }
    let t = match split_last(m) {
        None => tensor2(&Element::one(alg), &Element::one(alg)),
        Some((prefix, last)) => {
            quantum_monomial_coproduct(alg, &prefix).mul(&gen_coproduct(alg, last))
        }
    };
    coproduct_cache()
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert((alg, *m), t.clone());
    t
}

fn require_hopf(alg: AlgebraId) -> Result<()> {
    if alg.is_hopf() {
        Ok(())
    } else {
        Err(Error::NotAHopfAlgebra(alg))
    }
}

fn project_tensor(t: &TensorElement, alg: AlgebraId) -> Result<TensorElement> {
    let AlgebraId::FdQuot { n, order } = alg else {
        unreachable!()
    };
    let fq = fdquot_lookup(n, order)
        .ok_or_else(|| Error::InvalidParams(format!("finite quotient {alg} has not been built")))?;
    let legs = vec![alg; t.rank()];
    t.map_legs(&legs, |_, m| {
        Ok(TensorElement::pure(&[
            &fq.project(&Element::monomial(AlgebraId::ADTq, *m))
        ]))
    })
}

/// `Δ` on a single basis monomial.
pub fn coproduct_monomial(alg: AlgebraId, m: &Monomial) -> Result<TensorElement> {
    require_hopf(alg)?;
    Ok(match (alg, m) {
        (a, Monomial::Q(qm)) if quantum_word_alg(a) => quantum_monomial_coproduct(alg, qm),
        (AlgebraId::FdQuot { .. }, Monomial::Q(qm)) => {
            project_tensor(&quantum_monomial_coproduct(AlgebraId::ADTq, qm), alg)?
        }
        (AlgebraId::AT2, Monomial::Torus(..)) => {
            let e = Element::monomial(alg, *m);
            tensor2(&e, &e)
        }
        (AlgebraId::AZ2, Monomial::Z2(s)) => {
            let mut t = TensorElement::zero(&[alg, alg]);
            for s1 in 0..2u8 {
                t.add_term(
                    vec![Monomial::Z2(s1), Monomial::Z2((s + s1) % 2)],
                    QScalar::one(),
                );
            }
            t
        }
        (AlgebraId::Bicross, Monomial::Cross(s, k, l)) => bicross::coproduct(*s, (*k, *l))?,
        _ => panic!("monomial {m:?} does not belong to {alg}"),
    })
}

pub fn coproduct(e: &Element) -> Result<TensorElement> {
    let alg = e.algebra();
    require_hopf(alg)?;
    let mut out = TensorElement::zero(&[alg, alg]);
    for (m, c) in e.terms() {
        out.add_tensor(&coproduct_monomial(alg, m)?, c);
    }
    Ok(out)
}

pub fn counit_monomial(alg: AlgebraId, m: &Monomial) -> Result<QScalar> {
    require_hopf(alg)?;
    Ok(match m {
        Monomial::Q(qm) => QScalar::from_int(i64::from(qm.anti.is_none())),
        Monomial::Torus(..) => QScalar::one(),
        Monomial::Z2(s) | Monomial::Cross(s, _, _) => QScalar::from_int(i64::from(*s == 0)),
    })
}

pub fn counit(e: &Element) -> Result<QScalar> {
    let mut out = QScalar::zero();
    for (m, c) in e.terms() {
        out += &(c * &counit_monomial(e.algebra(), m)?);
    }
    Ok(out)
}

/// Frozen antipode on generator letters (see [`derive_antipode`]).
fn gen_antipode(alg: AlgebraId, x: Gen) -> Element {
    let dinv = g(alg, Gen::DetInv);
    match x {
        Gen::A => &dinv * &g(alg, Gen::D),
        Gen::D => &dinv * &g(alg, Gen::A),
        Gen::B => (&dinv * &g(alg, Gen::B)).scale(&-q(-1)),
        Gen::C => (&dinv * &g(alg, Gen::C)).scale(&-q(1)),
        Gen::Det => dinv,
        Gen::DetInv => g(alg, Gen::Det),
        // S(z) = S(d) S(a) S(D⁻¹)
        Gen::Z => &(&gen_antipode(alg, Gen::D) * &gen_antipode(alg, Gen::A)) * &g(alg, Gen::Det),
        _ => unreachable!("not a quantum generator"),
    }
}

fn quantum_monomial_antipode(alg: AlgebraId, m: &QMono) -> Element {
    if let Some(t) = antipode_cache()
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .get(&(alg, *m))
    {
        return t.clone();
    }
    let s = match split_last(m) {
        None => Element::one(alg),
        Some((prefix, last)) => &gen_antipode(alg, last) * &quantum_monomial_antipode(alg, &prefix),
    };
    antipode_cache()
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert((alg, *m), s.clone());
    s
}

fn via_adtq(e: &Element, f: impl Fn(&Element) -> Result<Element>) -> Result<Element> {
    let AlgebraId::FdQuot { n, order } = e.algebra() else {
        unreachable!()
    };
    let fq = fdquot_lookup(n, order).ok_or_else(|| {
        Error::InvalidParams(format!(
            "finite quotient {} has not been built",
            e.algebra()
        ))
    })?;
    Ok(fq.project(&f(&fq.lift(e))?))
}

pub fn antipode(e: &Element) -> Result<Element> {
    let alg = e.algebra();
    require_hopf(alg)?;
    if let AlgebraId::FdQuot { .. } = alg {
        return via_adtq(e, antipode);
    }
    let mut out = Element::zero(alg);
    for (m, c) in e.terms() {
        let img = match m {
            Monomial::Q(qm) => quantum_monomial_antipode(alg, qm),
            Monomial::Torus(k, l) => Element::monomial(alg, Monomial::Torus(-k, -l)),
            Monomial::Z2(s) => Element::monomial(alg, Monomial::Z2(*s)),
            Monomial::Cross(s, k, l) => bicross::antipode(*s, (*k, *l)),
        };
        out.add_scaled(&img, c);
    }
    Ok(out)
}

/// Involution on generator letters: `a* = S(a), b* = S(c), c* = S(b), d* = S(d)`.
fn gen_star(alg: AlgebraId, x: Gen) -> Element {
    match x {
        Gen::B => gen_antipode(alg, Gen::C),
        Gen::C => gen_antipode(alg, Gen::B),
        Gen::Z => g(alg, Gen::Z),
        other => gen_antipode(alg, other),
    }
}

fn quantum_monomial_star(alg: AlgebraId, m: &QMono) -> Element {
    let mut out = Element::one(alg);
    for x in m.to_word() {
        out = &gen_star(alg, x) * &out;
    }
    out
}

/// `starElement`: the antilinear anti-automorphism with `q* = q⁻¹`.
pub fn star(e: &Element) -> Result<Element> {
    let alg = e.algebra();
    if let AlgebraId::FdQuot { .. } = alg {
        return via_adtq(e, star);
    }
    let mut out = Element::zero(alg);
    for (m, c) in e.terms() {
        let img = match (alg, m) {
            (_, Monomial::Q(qm)) => quantum_monomial_star(alg, qm),
            (AlgebraId::AT2q, Monomial::Torus(i, j)) => {
                // (xⁱyʲ)* = y⁻ʲx⁻ⁱ
                &Element::monomial(alg, Monomial::Torus(0, -j))
                    * &Element::monomial(alg, Monomial::Torus(-i, 0))
            }
            (_, Monomial::Torus(k, l)) => Element::monomial(alg, Monomial::Torus(-k, -l)),
            (_, Monomial::Z2(s)) => Element::monomial(alg, Monomial::Z2(*s)),
            (_, Monomial::Cross(s, k, l)) => Element::monomial(alg, Monomial::Cross(*s, -k, -l)),
        };
        out.add_scaled(&img, &c.star());
    }
    Ok(out)
}

/// `(* ⊗ *)` on a tensor: leg-wise involution with conjugated coefficients.
pub fn star_tensor(t: &TensorElement) -> Result<TensorElement> {
    let legs = t.legs().to_vec();
    let conj = t.map_scalars(QScalar::star);
    conj.map_legs(&legs, |i, m| {
        Ok(TensorElement::pure(&[&star(&Element::monomial(
            legs[i], *m,
        ))?]))
    })
}

/// Antipode candidates `±q^s · g' · D⁻¹`, `g' ∈ {a, b, c, d}`, `|s| ≤ 3`.
fn ansatz() -> Vec<(String, Element)> {
    let alg = AlgebraId::AUq2;
    let mut out = Vec::new();
    for gp in [Gen::A, Gen::B, Gen::C, Gen::D] {
        let base = &g(alg, gp) * &g(alg, Gen::DetInv);
        for s in -3..=3 {
            for sign in [1, -1] {
                let c = q(s).scale_rational(&num_rational::BigRational::from_integer(sign.into()));
                out.push((
                    format!("{}q^{s}*{gp}*Dinv", if sign < 0 { "-" } else { "" }),
                    base.scale(&c),
                ));
            }
        }
    }
    out
}

/// Solves the antipode equations `Σₖ S(u_{ik}) u_{kj} = δ_{ij}` over the
/// monomial ansatz, checks the other-sided equations, and returns the
/// unique solution `[S(a), S(b), S(c), S(d)]` in `AUq2`. Errors if the
/// solution is not unique.
pub fn derive_antipode() -> Result<[Element; 4]> {
    let alg = AlgebraId::AUq2;
    let (a, b, c, d) = (
        g(alg, Gen::A),
        g(alg, Gen::B),
        g(alg, Gen::C),
        g(alg, Gen::D),
    );
    let one = Element::one(alg);
    let zero = Element::zero(alg);
    let cands = ansatz();
    let solve =
        |x1: &Element, y1: &Element, t1: &Element, x2: &Element, y2: &Element, t2: &Element| {
            let mut sols = Vec::new();
            for (_, p) in &cands {
                for (_, r) in &cands {
                    if &(&(p * x1) + &(r * y1)) == t1 && &(&(p * x2) + &(r * y2)) == t2 {
                        sols.push((p.clone(), r.clone()));
                    }
                }
            }
            sols
        };
    let row1 = solve(&a, &c, &one, &b, &d, &zero);
    let row2 = solve(&a, &c, &zero, &b, &d, &one);
    if row1.len() != 1 || row2.len() != 1 {
        return Err(Error::InvalidParams(format!(
            "antipode ansatz has {} and {} solutions per row",
            row1.len(),
            row2.len()
        )));
    }
    let (sa, sb) = row1.into_iter().next().expect("one solution");
    let (sc, sd) = row2.into_iter().next().expect("one solution");
    // right-sided equations Σₖ u_{ik} S(u_{kj}) = δ_{ij}
    let right = [
        (&(&a * &sa) + &(&b * &sc), &one),
        (&(&a * &sb) + &(&b * &sd), &zero),
        (&(&c * &sa) + &(&d * &sc), &zero),
        (&(&c * &sb) + &(&d * &sd), &one),
    ];
    if right.iter().any(|(l, r)| l != *r) {
        return Err(Error::InvalidParams(
            "antipode ansatz fails the right-sided equations".into(),
        ));
    }
    Ok([sa, sb, sc, sd])
}

/// The frozen generator images, for comparison with [`derive_antipode`].
pub fn frozen_antipode(alg: AlgebraId) -> [Element; 4] {
    [Gen::A, Gen::B, Gen::C, Gen::D].map(|x| gen_antipode(alg, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(alg: AlgebraId, x: Gen) -> Element {
        Element::gen(alg, x)
    }

    #[test]
    fn generator_coproducts() {
        let alg = AlgebraId::ADTq;
        let z = e(alg, Gen::Z);
        let co = &Element::one(alg) - &z;
        let expected = tensor2(&z, &z).checked_add(&tensor2(&co, &co)).unwrap();
        assert_eq!(coproduct(&z).unwrap(), expected);
        let det = e(alg, Gen::Det);
        assert_eq!(coproduct(&det).unwrap(), tensor2(&det, &det));
    }

    #[test]
    fn antipode_is_derived_uniquely() {
        let derived = derive_antipode().unwrap();
        assert_eq!(derived, frozen_antipode(AlgebraId::AUq2));
        let alg = AlgebraId::AUq2;
        // S(b) = −q·b·D⁻¹
        let sb = (&e(alg, Gen::B) * &e(alg, Gen::DetInv)).scale(&-q(1));
        assert_eq!(derived[1], sb);
    }

    #[test]
    fn star_examples() {
        let alg = AlgebraId::ADTq;
        let a = e(alg, Gen::A);
        assert_eq!(star(&a).unwrap(), &e(alg, Gen::DetInv) * &e(alg, Gen::D));
        assert_eq!(star(&star(&a).unwrap()).unwrap(), a);
        assert_eq!(star(&e(alg, Gen::Det)).unwrap(), e(alg, Gen::DetInv));
        assert!(matches!(
            coproduct(&Element::one(AlgebraId::AT2q)),
            Err(Error::NotAHopfAlgebra(_))
        ));
    }
}
