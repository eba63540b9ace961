//! Coefficient ring: exact Laurent polynomials in `q` over ℚ, their numeric
//! specialization on the unit circle, and cyclotomic reductions.

mod poly;
mod qscalar;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

pub use num_complex::Complex64 as NumericScalar;
pub use poly::{CycloElem, FieldElem, Poly, RatFunc};
pub use qscalar::QScalar;

use crate::error::{Error, Result};

/// Root-of-unity specialization: `q` is a primitive `order`-th root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclotomicMode {
    order: u32,
}

impl CyclotomicMode {
    pub fn new(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidParams(
                "cyclotomic order must be positive".into(),
            ));
        }
        Ok(Self { order })
    }

    pub fn order(self) -> u32 {
        self.order
    }

    /// Φ_order, the minimal polynomial of the primitive root.
    pub fn minimal_polynomial(self) -> Arc<Poly> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Poly>>>> = OnceLock::new();
        let mut cache = CACHE
            .get_or_init(Default::default)
            .lock()
            .unwrap_or_else(|e| e.into_inner());
        cache
            .entry(self.order)
            .or_insert_with(|| Arc::new(Poly::cyclotomic(self.order)))
            .clone()
    }

    /// Canonical representative in ℚ(ζ_M): degree below φ(M).
    pub fn reduce_primitive(self, s: &QScalar) -> QScalar {
        CycloElem::new(&s.reduce_cyclotomic(self), self.minimal_polynomial()).to_qscalar()
    }

    pub fn field_elem(self, s: &QScalar) -> CycloElem {
        CycloElem::new(&s.reduce_cyclotomic(self), self.minimal_polynomial())
    }
}

pub fn star_scalar(s: &QScalar) -> QScalar {
    s.star()
}

/// Evaluate at `q = e^{2πiθ}`, `θ ∈ [0, 1)`.
pub fn eval_scalar(s: &QScalar, theta: f64) -> NumericScalar {
    s.eval(theta)
}

pub fn reduce_cyclotomic(s: &QScalar, mode: CyclotomicMode) -> QScalar {
    s.reduce_cyclotomic(mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_qscalar() -> impl Strategy<Value = QScalar> {
        prop::collection::vec((-6i64..=6, -5i64..=5, 1i64..=4), 0..5).prop_map(|v| {
            v.into_iter().fold(QScalar::zero(), |acc, (k, n, d)| {
                &acc + &QScalar::from_ratio(n, d).shift(&k.into())
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn star_is_involutive(s in arb_qscalar()) {
            prop_assert_eq!(star_scalar(&star_scalar(&s)), s);
        }
    }

    proptest! {
        #[test]
        fn star_matches_conjugation(s in arb_qscalar(), theta in 0.0f64..1.0) {
            let lhs = eval_scalar(&star_scalar(&s), theta);
            let rhs = eval_scalar(&s, theta).conj();
            prop_assert!((lhs - rhs).norm() < 1e-9);
        }

        #[test]
        fn eval_is_multiplicative(a in arb_qscalar(), b in arb_qscalar(), theta in 0.0f64..1.0) {
            let lhs = eval_scalar(&(&a * &b), theta);
            let rhs = eval_scalar(&a, theta) * eval_scalar(&b, theta);
            prop_assert!((lhs - rhs).norm() < 1e-9 * (1.0 + rhs.norm()));
        }

        #[test]
        fn reduction_is_a_ring_map(a in arb_qscalar(), b in arb_qscalar(), m in 1u32..8) {
            let mode = CyclotomicMode::new(m).unwrap();
            let lhs = reduce_cyclotomic(&(&a * &b), mode);
            let rhs = reduce_cyclotomic(&(&reduce_cyclotomic(&a, mode) * &reduce_cyclotomic(&b, mode)), mode);
            prop_assert_eq!(&lhs, &rhs);
            prop_assert_eq!(reduce_cyclotomic(&lhs, mode), lhs);
        }

        #[test]
        fn pure_powers_land_on_unit_circle(k in -40i64..40, theta in 0.0f64..1.0) {
            prop_assert!((eval_scalar(&QScalar::q_pow(k), theta).norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn primitive_reduction() {
        let m2 = CyclotomicMode::new(2).unwrap();
        assert_eq!(
            m2.reduce_primitive(&QScalar::q_pow(1)),
            QScalar::from_int(-1)
        );
        let m4 = CyclotomicMode::new(4).unwrap();
        assert_eq!(m4.reduce_primitive(&QScalar::q_pow(-1)), -QScalar::q_pow(1));
        assert!(CyclotomicMode::new(0).is_err());
    }
}
