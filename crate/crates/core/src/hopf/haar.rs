use nalgebra::DMatrix;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{coproduct, star};
use crate::algebra::{enumerate_basis, AlgebraId, Element, Gen, Monomial, QMono, Window};
use crate::error::{Error, Result};
use crate::report::Check;
use crate::scalars::{eval_scalar, NumericScalar, QScalar};

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

fn haar_monomial_with(m: &Monomial, weight_z: &BigRational) -> BigRational {
    match m {
        Monomial::Q(q) if *q == QMono::ONE => BigRational::one(),
        Monomial::Q(q) if *q == QMono::det_z(0) => weight_z.clone(),
        _ => BigRational::zero(),
    }
}

fn haar_with(e: &Element, weight_z: &BigRational) -> QScalar {
    let mut out = QScalar::zero();
    for (m, c) in e.terms() {
        out += &c.scale_rational(&haar_monomial_with(m, weight_z));
    }
    out
}

/// The Haar state of `ADTq`: `h(1) = 1`, `h(z) = 1/2`, zero on every other
/// normal monomial.
pub fn haar(e: &Element) -> Result<QScalar> {
    match e.algebra() {
        AlgebraId::ADTq | AlgebraId::Mutant(_) => Ok(haar_with(e, &half())),
        other => Err(Error::InvalidParams(format!(
            "the Haar functional is implemented on ADTq, not {other}"
        ))),
    }
}

pub fn haar_monomial(m: &Monomial) -> BigRational {
    haar_monomial_with(m, &half())
}

/// Recovers `h(z)` from left invariance applied to the group-like `2z − 1`:
/// `(id ⊗ h)Δ(2z−1) = h(2z−1)·1` is affine in the unknown `t = h(z)`.
pub fn derive_haar_weight() -> Result<BigRational> {
    let alg = AlgebraId::ADTq;
    let two = QScalar::from_int(2);
    let g = &Element::gen(alg, Gen::Z).scale(&two) - &Element::one(alg);
    let delta = coproduct(&g)?;
    let defect = |t: &BigRational| -> Element {
        let mut lhs = Element::zero(alg);
        for (ms, c) in delta.terms() {
            let hv = haar_monomial_with(&ms[1], t);
            lhs.add_scaled(&Element::monomial(alg, ms[0]), &c.scale_rational(&hv));
        }
        &lhs - &Element::one(alg).scale(&haar_with(&g, t))
    };
    let e0 = defect(&BigRational::zero());
    let e1 = defect(&BigRational::one());
    // e0 + t (e1 − e0) = 0, coefficientwise
    let slope = &e1 - &e0;
    let mut solution: Option<BigRational> = None;
    for (m, s) in slope.terms() {
        let (Some(s), Some(c0)) = (
            s.as_rational(),
            e0.coeff(m).as_rational().or(Some(BigRational::zero())),
        ) else {
            return Err(Error::InvalidParams(
                "non-rational invariance equation".into(),
            ));
        };
        let t = -c0 / s;
        match &solution {
            Some(prev) if *prev != t => {
                return Err(Error::InvalidParams(
                    "inconsistent invariance equations".into(),
                ))
            }
            _ => solution = Some(t),
        }
    }
    let t = solution
        .ok_or_else(|| Error::InvalidParams("invariance does not determine h(z)".into()))?;
    if !defect(&t).is_zero() {
        return Err(Error::InvalidParams(
            "no Haar weight satisfies invariance".into(),
        ));
    }
    Ok(t)
}

/// Gram matrix `[h(pᵢ* pⱼ)]` evaluated at `q = e^{2πiθ}`.
pub fn haar_gram(window: &[Monomial], theta: f64) -> Result<DMatrix<NumericScalar>> {
    let alg = AlgebraId::ADTq;
    let elems: Vec<Element> = window.iter().map(|m| Element::monomial(alg, *m)).collect();
    let stars: Vec<Element> = elems.iter().map(star).collect::<Result<_>>()?;
    let n = elems.len();
    let mut g = DMatrix::<NumericScalar>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = eval_scalar(&haar(&(&stars[i] * &elems[j]))?, theta);
        }
    }
    Ok(g)
}

/// Smallest eigenvalue of the Hermitian part of the Gram matrix, together
/// with the largest deviation from Hermitian symmetry.
pub fn gram_spectrum(g: &DMatrix<NumericScalar>) -> (f64, f64) {
    let asym = (g - g.adjoint())
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    let herm = (g + g.adjoint()) * NumericScalar::new(0.5, 0.0);
    let eig = nalgebra::SymmetricEigen::new(herm);
    let min = eig
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min);
    (min, asym)
}

/// Bi-invariance `(id⊗h)Δp = h(p)1 = (h⊗id)Δp` on the degree window, the
/// value `h(z) = 1/2`, and positivity of the Gram matrix at `θ`.
pub fn verify_haar(invariance_deg: u32, gram_deg: u32, theta: f64) -> Result<Vec<Check>> {
    let alg = AlgebraId::ADTq;
    let basis = enumerate_basis(alg, Window::degree(invariance_deg));
    let invariance = crate::report::first_failure(&basis, |m| {
        let run = || -> Result<Option<String>> {
            let p = Element::monomial(alg, *m);
            let expect = Element::one(alg).scale(&haar(&p)?);
            let delta = coproduct(&p)?;
            let (mut left, mut right) = (Element::zero(alg), Element::zero(alg));
            for (ms, c) in delta.terms() {
                left.add_scaled(
                    &Element::monomial(alg, ms[0]),
                    &c.scale_rational(&haar_monomial(&ms[1])),
                );
                right.add_scaled(
                    &Element::monomial(alg, ms[1]),
                    &c.scale_rational(&haar_monomial(&ms[0])),
                );
            }
            Ok(if left != expect {
                Some(format!("(id⊗h)Δ({p}) = {left}, h({p}) = {expect}"))
            } else if right != expect {
                Some(format!("(h⊗id)Δ({p}) = {right}, h({p}) = {expect}"))
            } else {
                None
            })
        };
        run().unwrap_or_else(|e| Some(e.to_string()))
    });
    let hz = haar(&Element::gen(alg, Gen::Z))?;
    let derived = derive_haar_weight()?;
    let value = (hz != QScalar::from_ratio(1, 2) || derived != half())
        .then(|| format!("h(z) = {hz}, weight forced by invariance = {derived}"));

    let window = enumerate_basis(alg, Window::degree(gram_deg));
    let (min, asym) = gram_spectrum(&haar_gram(&window, theta)?);
    let gram = (min < -1e-9 || asym > 1e-9)
        .then(|| format!("min eigenvalue {min:.3e}, asymmetry {asym:.3e}"));
    Ok(vec![
        Check::from_witness("haar/bi_invariance", invariance).with_detail(format!(
            "{} monomials of degree ≤ {invariance_deg}",
            basis.len()
        )),
        Check::from_witness("haar/value_on_z", value),
        Check::from_witness("haar/gram_positive", gram).with_detail(format!(
            "{n}×{n} Gram matrix, degree ≤ {gram_deg}, θ = {theta}, min eigenvalue {min:.6e}",
            n = window.len()
        )),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn haar_values() {
        let alg = AlgebraId::ADTq;
        assert_eq!(haar(&Element::one(alg)).unwrap(), QScalar::one());
        assert_eq!(
            haar(&Element::gen(alg, Gen::Z)).unwrap(),
            QScalar::from_ratio(1, 2)
        );
        let m = Element::monomial(alg, QMono::det_gen(3, Gen::A, 2));
        assert!(haar(&m).unwrap().is_zero());
        assert_eq!(derive_haar_weight().unwrap(), half());
    }
}
