//! Closed-form products of normal monomials.
//!
//! `AUq2` monomials are multiplied by commuting the right factor into place
//! with the relations
//! `bD = q²Db, cD = q⁻²Dc, ba = q·ab, ca = q⁻¹ac, bd = q·db, cd = q⁻¹dc,
//! ad = da = Dz, bc = qD(z−1), cb = q⁻¹D(z−1)`, `z` central.
//! `ADTq` products are `AUq2` products followed by the quotient projection.
//! The rewrite-system route in [`super::rewrite`] is an independent check.

use super::{fdquot, rewrite, AlgebraId, Anti, Element, Monomial, QMono};
use crate::galois::bicross;
use crate::scalars::QScalar;

pub fn mul_monomials(alg: AlgebraId, m1: &Monomial, m2: &Monomial) -> Element {
    match (alg, m1, m2) {
        (AlgebraId::AUq2, Monomial::Q(a), Monomial::Q(b)) => Element::from_terms(
            alg,
            mul_auq2(a, b).into_iter().map(|(m, c)| (Monomial::Q(m), c)),
        ),
        (AlgebraId::ADTq, Monomial::Q(a), Monomial::Q(b)) => Element::from_terms(
            alg,
            mul_auq2(a, b)
                .into_iter()
                .filter_map(|(m, c)| project_to_adtq(&m).map(|p| (Monomial::Q(p), c))),
        ),
        (AlgebraId::Mutant(mutation), Monomial::Q(a), Monomial::Q(b)) => {
            let mut word = a.to_word();
            word.extend(b.to_word());
            rewrite::RewriteSystem::cached_mutant(mutation).reduce_word_to_element(&word, alg)
        }
        (AlgebraId::FdQuot { n, order }, Monomial::Q(a), Monomial::Q(b)) => {
            fdquot::lookup(n, order)
                .unwrap_or_else(|| {
                    panic!("finite quotient FDQUOT({n}, {order}) has not been built")
                })
                .mul_monomials(a, b)
        }
        (AlgebraId::AT2, Monomial::Torus(k1, l1), Monomial::Torus(k2, l2)) => {
            Element::monomial(alg, Monomial::Torus(k1 + k2, l1 + l2))
        }
        (AlgebraId::AT2q, Monomial::Torus(i, j), Monomial::Torus(k, l)) => {
            // y^j x^k = q^{-jk} x^k y^j
            Element::term(alg, Monomial::Torus(i + k, j + l), QScalar::q_pow(-j * k))
        }
        (AlgebraId::AZ2, Monomial::Z2(s), Monomial::Z2(t)) => {
            if s == t {
                Element::monomial(alg, *m1)
            } else {
                Element::zero(alg)
            }
        }
        (AlgebraId::Bicross, Monomial::Cross(s, k, l), Monomial::Cross(t, m, n)) => {
            bicross::crossed_product(*s, (*k, *l), *t, (*m, *n))
        }
        _ => panic!("monomials {m1:?} and {m2:?} do not belong to {alg}"),
    }
}

/// Scalar picked up when `D^j` moves left past `Y^n`.
fn anti_det_factor(anti: Option<(Anti, u32)>, j: i64) -> i64 {
    match anti {
        Some((Anti::B, n)) => 2 * n as i64 * j,
        Some((Anti::C, n)) => -2 * (n as i64) * j,
        None => 0,
    }
}

/// Scalar picked up when `X^m` (either diagonal generator) moves left past `Y^n`.
fn anti_diag_factor(anti: Option<(Anti, u32)>, m: u32) -> i64 {
    match anti {
        Some((Anti::B, n)) => (n * m) as i64,
        Some((Anti::C, n)) => -((n * m) as i64),
        None => 0,
    }
}

pub(crate) fn mul_auq2(a: &QMono, b: &QMono) -> Vec<(QMono, QScalar)> {
    let mut qexp = anti_det_factor(a.anti, b.det);
    let mut det = a.det + b.det;
    let mut z = a.z + b.z;
    let mut diag = a.diag;
    if let Some((x2, m2)) = b.diag {
        qexp += anti_diag_factor(a.anti, m2);
        diag = match diag {
            None => Some((x2, m2)),
            Some((x1, m1)) if x1 == x2 => Some((x1, m1 + m2)),
            Some((x1, m1)) => {
                // a^m d^n = (ad)^t · rest = D^t z^t · rest
                let t = m1.min(m2);
                det += t as i64;
                z += t;
                if m1 > m2 {
                    Some((x1, m1 - t))
                } else if m2 > m1 {
                    Some((x2, m2 - t))
                } else {
                    None
                }
            }
        };
    }
    let start = QMono {
        det,
        z,
        diag,
        anti: a.anti,
    };
    let mut terms = vec![(start, QScalar::q_pow(qexp))];
    if let Some((y2, n2)) = b.anti {
        for _ in 0..n2 {
            terms = terms
                .into_iter()
                .flat_map(|(m, c)| mul_anti_letter(m, c, y2))
                .collect();
        }
    }
    terms
}

/// Right multiplication of `D^k z^l X^m Y^n` by a single `b` or `c`.
fn mul_anti_letter(m: QMono, c: QScalar, y: Anti) -> Vec<(QMono, QScalar)> {
    match m.anti {
        None => vec![(
            QMono {
                anti: Some((y, 1)),
                ..m
            },
            c,
        )],
        Some((y1, n)) if y1 == y => vec![(
            QMono {
                anti: Some((y, n + 1)),
                ..m
            },
            c,
        )],
        Some((y1, n)) => {
            // b^n c = q^{2n-1} D (z-1) b^{n-1};  c^n b = q^{1-2n} D (z-1) c^{n-1}
            let e = match y1 {
                Anti::B => 2 * n as i64 - 1,
                Anti::C => 1 - 2 * n as i64,
            };
            let s = &c * &QScalar::q_pow(e);
            let rest = (n > 1).then_some((y1, n - 1));
            let base = QMono {
                det: m.det + 1,
                anti: rest,
                ..m
            };
            vec![(QMono { z: m.z + 1, ..base }, s.clone()), (base, -s)]
        }
    }
}

/// Image of an `AUq2` normal monomial in `ADTq`, where `z² = z`,
/// `zX = X`, `zY = 0` and mixed `XY` vanish.
pub fn project_to_adtq(m: &QMono) -> Option<QMono> {
    match (m.z, m.diag, m.anti) {
        (_, Some(_), Some(_)) => None,
        (l, _, Some(_)) if l > 0 => None,
        (l, Some(x), None) if l > 0 => Some(QMono {
            det: m.det,
            z: 0,
            diag: Some(x),
            anti: None,
        }),
        (l, None, None) if l > 1 => Some(QMono { z: 1, ..*m }),
        _ => Some(*m),
    }
}
