//! The two-cocycle `σ : A(T²) ⊗ A(T²) → A(Z₂)` behind the crossed product.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::cleaving::{cleaving_j, cleaving_j_inverse, CleavingConvention};
use super::exact::{i_inverse, z2_element as z2};
use crate::algebra::{AlgebraId, Element, Monomial};
use crate::error::{Error, Result};
use crate::report::Check;
use crate::scalars::QScalar;

/// How [`cocycle_sigma`] obtains its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SigmaMethod {
    Table,
    Convolution,
}

/// Exponent `e` with `σ_q(uᵏvˡ ⊗ uᵐvⁿ) = qᵉ`; `mutate` perturbs the first branch.
pub fn sigma_q_exponent(k: i64, l: i64, m: i64, n: i64, mutate: bool) -> BigInt {
    use std::cmp::Ordering::*;
    let b = |x: i64| BigInt::from(x);
    let (s, t) = (b(k) + b(m), b(l) + b(n));
    match (k.cmp(&l), m.cmp(&n)) {
        (Greater, Greater) => b(-2 * k) * b(n) + if mutate { b(1) } else { b(0) },
        (Greater, Equal) => -(b(m) * (b(2 * k) + b(m))),
        (Greater, Less) => match s.cmp(&t) {
            Greater => b(-2) * b(n) * &s,
            Equal => &s * (b(2 * l) - &s),
            Less => b(2) * b(l) * &s,
        },
        (Equal, Greater) => -(b(k) * (b(k) + b(2 * n))),
        (Equal, Equal) => b(0),
        (Equal, Less) => b(k) * (b(k) + b(2 * m)),
        (Less, Greater) => match s.cmp(&t) {
            Greater => b(-2) * b(k) * &t,
            Equal => &t * (&t - b(2 * k)),
            Less => b(2) * b(m) * &t,
        },
        (Less, Equal) => b(m) * (b(m) + b(2 * l)),
        (Less, Less) => b(2) * b(l) * b(m),
    }
}

pub fn sigma_q(k: i64, l: i64, m: i64, n: i64) -> QScalar {
    QScalar::q_pow_big(sigma_q_exponent(k, l, m, n, false))
}

/// `σ_c·δ₀ + σ_q·δ₁` from the case table, with `σ_c = ε⊗ε = 1` on group-likes.
pub fn sigma_table(h: (i64, i64), g: (i64, i64), mutate: bool) -> Element {
    z2(
        QScalar::one(),
        QScalar::q_pow_big(sigma_q_exponent(h.0, h.1, g.0, g.1, mutate)),
    )
}

/// `σ(h⊗g) = j(h)j(g)j⁻¹(hg)` pulled back along `i`.
pub fn sigma_convolution(
    h: (i64, i64),
    g: (i64, i64),
    conv: CleavingConvention,
) -> Result<Element> {
    let t = |(k, l): (i64, i64)| Element::monomial(AlgebraId::AT2, Monomial::Torus(k, l));
    let value = &(&cleaving_j(&t(h), conv)? * &cleaving_j(&t(g), conv)?)
        * &cleaving_j_inverse(&t((h.0 + g.0, h.1 + g.1)), conv)?;
    i_inverse(&value)
}

/// `cocycleSigma` on two `A(T²)` monomials.
pub fn cocycle_sigma(
    h: &Monomial,
    g: &Monomial,
    method: SigmaMethod,
    conv: CleavingConvention,
) -> Result<Element> {
    let (Monomial::Torus(k, l), Monomial::Torus(m, n)) = (h, g) else {
        return Err(Error::NonGrouplikeInput(format!("{h:?} ⊗ {g:?}")));
    };
    match method {
        SigmaMethod::Table => Ok(sigma_table((*k, *l), (*m, *n), false)),
        SigmaMethod::Convolution => sigma_convolution((*k, *l), (*m, *n), conv),
    }
}

fn lattice(range: i64) -> Vec<(i64, i64)> {
    (-range..=range)
        .flat_map(|k| (-range..=range).map(move |l| (k, l)))
        .collect()
}

/// Table against convolution on every tuple with exponents in `[-range, range]`.
/// The witness names the first tuple whose values differ or whose
/// convolution leaves the image of `i`.
pub fn compare_sigma_methods(range: i64, conv: CleavingConvention) -> Check {
    let pts = lattice(range);
    let tuples: Vec<((i64, i64), (i64, i64))> = pts
        .iter()
        .flat_map(|h| pts.iter().map(move |g| (*h, *g)))
        .collect();
    let witness =
        crate::report::first_failure(&tuples, |(h, g)| match sigma_convolution(*h, *g, conv) {
            Ok(v) if v == sigma_table(*h, *g, false) => None,
            Ok(v) => Some(format!(
                "σ(u^{}v^{} ⊗ u^{}v^{}): table {} vs convolution {v}",
                h.0,
                h.1,
                g.0,
                g.1,
                sigma_table(*h, *g, false)
            )),
            Err(e) => Some(format!("σ(u^{}v^{} ⊗ u^{}v^{}): {e}", h.0, h.1, g.0, g.1)),
        });
    Check::from_witness("cocycle/table_equals_convolution", witness)
        .with_detail(format!("{} tuples, convention {conv}", tuples.len()))
}

/// Counts tuples whose convolution value escapes the image of `i`.
pub fn not_in_base_image_count(range: i64, conv: CleavingConvention) -> usize {
    let pts = lattice(range);
    pts.par_iter()
        .map(|h| {
            pts.iter()
                .filter(|g| {
                    matches!(
                        sigma_convolution(*h, **g, conv),
                        Err(Error::NotInBaseImage(_))
                    )
                })
                .count()
        })
        .sum()
}

/// Both sides of the trivial-action cocycle identity for one triple.
pub fn cocycle_sides(
    h: (i64, i64),
    g: (i64, i64),
    f: (i64, i64),
    mutate: bool,
) -> (Element, Element) {
    let add = |x: (i64, i64), y: (i64, i64)| (x.0 + y.0, x.1 + y.1);
    let s = |x, y| sigma_table(x, y, mutate);
    (&s(h, g) * &s(add(h, g), f), &s(g, f) * &s(h, add(g, f)))
}

/// `σ(h⊗g)σ(hg⊗f) = σ(g⊗f)σ(h⊗gf)` together with normalization.
pub fn verify_cocycle_condition(range: i64, mutate: bool) -> Vec<Check> {
    let pts = lattice(range);
    let mut triples = Vec::with_capacity(pts.len().pow(3));
    for h in &pts {
        for g in &pts {
            triples.extend(pts.iter().map(|f| (*h, *g, *f)));
        }
    }
    let identity = crate::report::first_failure(&triples, |(h, g, f)| {
        let (l, r) = cocycle_sides(*h, *g, *f, mutate);
        (l != r).then(|| {
            format!(
                "h = u^{}v^{}, g = u^{}v^{}, f = u^{}v^{}: {l} ≠ {r}",
                h.0, h.1, g.0, g.1, f.0, f.1
            )
        })
    });
    let unit = z2(QScalar::one(), QScalar::one());
    let normalized = pts.iter().find_map(|g| {
        let (a, b) = (
            sigma_table((0, 0), *g, mutate),
            sigma_table(*g, (0, 0), mutate),
        );
        (a != unit || b != unit).then(|| {
            format!(
                "σ(1 ⊗ u^{}v^{}) = {a}, σ(u^{}v^{} ⊗ 1) = {b}",
                g.0, g.1, g.0, g.1
            )
        })
    });
    vec![
        Check::from_witness("cocycle/two_cocycle_identity", identity)
            .with_detail(format!("{} triples", triples.len())),
        Check::from_witness("cocycle/normalized", normalized),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> QScalar {
        QScalar::q_pow(k)
    }

    #[test]
    fn table_examples() {
        assert_eq!(
            sigma_table((1, 0), (0, 1), false),
            z2(QScalar::one(), q(-1))
        );
        assert_eq!(
            sigma_table((2, 1), (3, 1), false),
            z2(QScalar::one(), q(-4))
        );
        assert_eq!(
            sigma_table((0, 0), (4, -2), false),
            z2(QScalar::one(), QScalar::one())
        );
    }

    #[test]
    fn convolution_matches_table_small() {
        let c = compare_sigma_methods(1, CleavingConvention::Corrected);
        assert!(c.passed(), "{c:?}");
        assert!(not_in_base_image_count(1, CleavingConvention::Printed) > 0);
    }

    #[test]
    fn triple_u_v_uv() {
        let (l, r) = cocycle_sides((1, 0), (0, 1), (1, 1), false);
        assert_eq!(l, r);
        assert_eq!(l, z2(QScalar::one(), q(-1)));
    }
}
