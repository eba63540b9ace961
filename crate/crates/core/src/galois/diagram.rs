//! The coaction `ρ_q : A(T²_q) → ADTq ⊗ A(T²_q)` and the square relating it
//! to the classical coaction of `A(T²)` on itself.

use super::exact::prj_tensor;
use crate::algebra::{AlgebraId, Element, Gen, Monomial};
use crate::error::Result;
use crate::hopf::{coproduct_monomial, counit, star_tensor, TensorElement};
use crate::report::Check;

fn xy(i: i64, j: i64) -> Element {
    Element::monomial(AlgebraId::AT2q, Monomial::Torus(i, j))
}

/// `ρ_q` with the quantum leg in `alg` (`ADTq` or a mutant of it).
#[derive(Clone, Copy, Debug)]
pub struct Rho {
    alg: AlgebraId,
}

impl Rho {
    pub fn new(alg: AlgebraId) -> Self {
        Rho { alg }
    }

    /// `x ↦ a⊗x + b⊗y`, `y ↦ c⊗x + d⊗y`.
    pub fn generator(&self, g: Gen) -> TensorElement {
        let (p, r) = match g {
            Gen::X => (Gen::A, Gen::B),
            Gen::Y => (Gen::C, Gen::D),
            _ => unreachable!("A(T²_q) is generated by x and y"),
        };
        let mut t = TensorElement::pure(&[&Element::gen(self.alg, p), &xy(1, 0)]);
        t.add_tensor(
            &TensorElement::pure(&[&Element::gen(self.alg, r), &xy(0, 1)]),
            &crate::scalars::QScalar::one(),
        );
        t
    }

    /// `ρ_q(x⁻¹) = ρ_q(x)*`, since `x` is unitary.
    fn inverse_generator(&self, g: Gen) -> Result<TensorElement> {
        star_tensor(&self.generator(g))
    }

    fn power(&self, g: Gen, k: i64) -> Result<TensorElement> {
        let base = if k >= 0 {
            self.generator(g)
        } else {
            self.inverse_generator(g)?
        };
        let mut out = TensorElement::pure(&[&Element::one(self.alg), &xy(0, 0)]);
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// `ρ_q(xⁱyʲ) = ρ_q(x)ⁱ ρ_q(y)ʲ`.
    pub fn monomial(&self, i: i64, j: i64) -> Result<TensorElement> {
        Ok(self.power(Gen::X, i)?.mul(&self.power(Gen::Y, j)?))
    }

    pub fn apply(&self, e: &Element) -> Result<TensorElement> {
        let mut out = TensorElement::zero(&[self.alg, AlgebraId::AT2q]);
        for (m, c) in e.terms() {
            let Monomial::Torus(i, j) = m else {
                unreachable!()
            };
            out.add_tensor(&self.monomial(*i, *j)?, c);
        }
        Ok(out)
    }

    /// `ρ_q(x)ρ_q(y) − q·ρ_q(y)ρ_q(x)`.
    pub fn relation_defect(&self) -> TensorElement {
        let (x, y) = (self.generator(Gen::X), self.generator(Gen::Y));
        x.mul(&y)
            .sub(&y.mul(&x).scale(&crate::scalars::QScalar::q_pow(1)))
    }
}

/// `ρ_c(xⁱyʲ) = uⁱvʲ ⊗ xⁱyʲ`.
pub fn rho_classical(i: i64, j: i64) -> TensorElement {
    TensorElement::pure(&[
        &Element::monomial(AlgebraId::AT2, Monomial::Torus(i, j)),
        &xy(i, j),
    ])
}

/// The three parts of the diagram on `xⁱyʲ`, `|i|,|j| ≤ range`.
pub fn verify_coaction_diagram(range: i64, alg: AlgebraId) -> Result<Vec<Check>> {
    let rho = Rho::new(alg);
    let pts: Vec<(i64, i64)> = (-range..=range)
        .flat_map(|i| (-range..=range).map(move |j| (i, j)))
        .collect();
    let tag = if alg == AlgebraId::ADTq {
        String::new()
    } else {
        format!(" [{alg}]")
    };

    let defect = rho.relation_defect();
    let mut well_defined = (!defect.is_zero()).then(|| format!("ρ(x)ρ(y) − qρ(y)ρ(x) = {defect}"));
    if well_defined.is_none() {
        well_defined = crate::report::first_failure(&pts, |(i, j)| {
            let run = || -> Result<Option<String>> {
                let target = rho.monomial(*i, *j)?;
                for (gi, gj) in [(1, 0), (0, 1), (-1, 0), (0, -1)] {
                    let prod = &xy(gi, gj) * &xy(*i, *j);
                    let lhs = rho.apply(&prod)?;
                    let rhs = rho.monomial(gi, gj)?.mul(&target);
                    if lhs != rhs {
                        return Ok(Some(format!(
                            "ρ(x^{gi}y^{gj}·x^{i}y^{j}) − ρ(·)ρ(·) = {}",
                            lhs.sub(&rhs)
                        )));
                    }
                }
                Ok(None)
            };
            run().unwrap_or_else(|e| Some(e.to_string()))
        });
    }

    let coaction = crate::report::first_failure(&pts, |(i, j)| {
        let run = || -> Result<Option<String>> {
            let r = rho.monomial(*i, *j)?;
            let legs = [alg, alg, AlgebraId::AT2q];
            let lhs = r.map_legs(&legs, |k, m| match k {
                0 => coproduct_monomial(alg, m),
                _ => Ok(TensorElement::pure(&[&Element::monomial(
                    AlgebraId::AT2q,
                    *m,
                )])),
            })?;
            let rhs = r.map_legs(&legs, |k, m| match (k, m) {
                (1, Monomial::Torus(a, b)) => rho.monomial(*a, *b),
                _ => Ok(TensorElement::pure(&[&Element::monomial(alg, *m)])),
            })?;
            if lhs != rhs {
                return Ok(Some(format!(
                    "x^{i}y^{j}: (Δ⊗id)ρ − (id⊗ρ)ρ = {}",
                    lhs.sub(&rhs)
                )));
            }
            let mut collapsed = Element::zero(AlgebraId::AT2q);
            for (ms, c) in r.terms() {
                let eps = counit(&Element::monomial(alg, ms[0]))?;
                collapsed.add_scaled(&Element::monomial(AlgebraId::AT2q, ms[1]), &(c * &eps));
            }
            Ok((collapsed != xy(*i, *j)).then(|| format!("(ε⊗id)ρ(x^{i}y^{j}) = {collapsed}")))
        };
        run().unwrap_or_else(|e| Some(e.to_string()))
    });

    let square = crate::report::first_failure(&pts, |(i, j)| {
        let run = || -> Result<Option<String>> {
            let lhs = prj_tensor(&rho.monomial(*i, *j)?, &[0])?;
            let rhs = rho_classical(*i, *j);
            Ok((lhs != rhs).then(|| format!("(prj⊗id)ρ_q(x^{i}y^{j}) = {lhs}, ρ_c = {rhs}")))
        };
        run().unwrap_or_else(|e| Some(e.to_string()))
    });

    let detail = format!("{} monomials x^i y^j", pts.len());
    Ok(vec![
        Check::from_witness(format!("diagram/rho_well_defined{tag}"), well_defined)
            .with_detail(detail.clone()),
        Check::from_witness(format!("diagram/rho_coaction{tag}"), coaction)
            .with_detail(detail.clone()),
        Check::from_witness(format!("diagram/square_commutes{tag}"), square).with_detail(detail),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Mutation;

    #[test]
    fn relation_detects_q_squared() {
        assert!(Rho::new(AlgebraId::ADTq).relation_defect().is_zero());
        assert!(!Rho::new(AlgebraId::Mutant(Mutation::BcLinear))
            .relation_defect()
            .is_zero());
    }

    #[test]
    fn classical_square_on_x() {
        let lhs = prj_tensor(&Rho::new(AlgebraId::ADTq).monomial(1, 0).unwrap(), &[0]).unwrap();
        assert_eq!(lhs, rho_classical(1, 0));
    }
}
