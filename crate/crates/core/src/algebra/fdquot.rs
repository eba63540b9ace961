//! Finite-dimensional quotients of `ADTq` by the ideal generated by
//! `aⁿ − z, bⁿ − (1−z), cⁿ − (1−z), dⁿ − z, Dⁿ − 1` at a root of unity.
//!
//! The reduction `R` rewrites an `ADTq` normal monomial with the five
//! relations into the span `V` of `Dᵐ, Dᵐz (0 ≤ m < n)` and
//! `Dᵐgᵏ (1 ≤ k < n)`. The kernel `U = V ∩ I` is the smallest subspace that
//! contains every relation defect on `V` and is stable under left
//! multiplication by the generators; then `V/U ≅ ADTq/I` as left modules
//! and the dimension is `dim V − dim U`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::rewrite::RewriteSystem;
use super::{AlgebraId, Anti, Diag, Element, Gen, Monomial, QMono};
use crate::error::{Error, Result};
use crate::linalg::EchelonBasis;
use crate::scalars::{CycloElem, CyclotomicMode, FieldElem, QScalar};

pub struct FiniteQuotient {
    n: u32,
    mode: CyclotomicMode,
    span: Vec<QMono>,
    index: HashMap<QMono, usize>,
    ideal: EchelonBasis<CycloElem>,
    basis: Vec<QMono>,
}

/// `(−q)^{n²} = 1` at a primitive `order`-th root of unity, decided exactly.
pub fn root_condition_holds(n: u32, mode: CyclotomicMode) -> bool {
    let e = (n as i64) * (n as i64);
    let lhs = QScalar::signed_q_pow(e % 2 == 1, e) - QScalar::one();
    mode.reduce_primitive(&lhs).is_zero()
}

type Registry = RwLock<HashMap<(u32, u32), &'static FiniteQuotient>>;

fn registry() -> &'static Registry {
    static R: OnceLock<Registry> = OnceLock::new();
    R.get_or_init(Default::default)
}

/// A previously built quotient.
pub fn lookup(n: u32, order: u32) -> Option<&'static FiniteQuotient> {
    registry()
        .read()
        .unwrap_or_else(|e| e.into_inner())
        .get(&(n, order))
        .copied()
}

/// `buildFiniteQuotient`. `mode = None` means symbolic `q`, which never
/// satisfies the root condition.
pub fn build_finite_quotient(n: u32, mode: Option<CyclotomicMode>) -> Result<AlgebraId> {
    if n == 0 {
        return Err(Error::InvalidParams(
            "quotient index n must be positive".into(),
        ));
    }
    let Some(mode) = mode else {
        return Err(Error::RootConditionViolated { n, order: 0 });
    };
    if !root_condition_holds(n, mode) {
        return Err(Error::RootConditionViolated {
            n,
            order: mode.order(),
        });
    }
    let key = (n, mode.order());
    if lookup(n, mode.order()).is_none() {
        let fq: &'static FiniteQuotient = Box::leak(Box::new(FiniteQuotient::compute(n, mode)));
        registry()
            .write()
            .unwrap_or_else(|e| e.into_inner())
            .entry(key)
            .or_insert(fq);
    }
    Ok(AlgebraId::FdQuot {
        n,
        order: mode.order(),
    })
}

const GENS: [Gen; 7] = [
    Gen::A,
    Gen::B,
    Gen::C,
    Gen::D,
    Gen::Det,
    Gen::DetInv,
    Gen::Z,
];

impl FiniteQuotient {
    fn compute(n: u32, mode: CyclotomicMode) -> Self {
        let mut span = Vec::new();
        for m in 0..n as i64 {
            span.push(QMono::det(m));
            span.push(QMono::det_z(m));
            for k in 1..n {
                for x in [Diag::A, Diag::D] {
                    span.push(QMono::with_diag(m, x, k));
                }
                for y in [Anti::B, Anti::C] {
                    span.push(QMono::with_anti(m, y, k));
                }
            }
        }
        // larger monomials first so that the surviving basis prefers small ones
        span.sort();
        span.reverse();
        let index = span.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let zero = mode.field_elem(&QScalar::zero());
        let mut fq = FiniteQuotient {
            n,
            mode,
            ideal: EchelonBasis::new(span.len(), zero),
            span,
            index,
            basis: Vec::new(),
        };
        fq.close_ideal();
        let pivots: Vec<usize> = fq.ideal.pivots().collect();
        fq.basis = (0..fq.span.len())
            .filter(|i| !pivots.contains(i))
            .map(|i| fq.span[i])
            .collect();
        fq.basis.sort();
        fq
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn mode(&self) -> CyclotomicMode {
        self.mode
    }

    pub fn algebra(&self) -> AlgebraId {
        AlgebraId::FdQuot {
            n: self.n,
            order: self.mode.order(),
        }
    }

    pub fn basis(&self) -> &[QMono] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn span_size(&self) -> usize {
        self.span.len()
    }

    /// The five ideal generators as `ADTq` elements.
    pub fn ideal_generators(&self) -> Vec<(String, Element)> {
        let alg = AlgebraId::ADTq;
        let n = self.n;
        let z = Element::monomial(alg, QMono::det_z(0));
        let co_z = &Element::one(alg) - &z;
        let g = |x: Gen| Element::monomial(alg, QMono::det_gen(0, x, n));
        vec![
            (format!("a^{n} - z"), &g(Gen::A) - &z),
            (format!("b^{n} - (1 - z)"), &g(Gen::B) - &co_z),
            (format!("c^{n} - (1 - z)"), &g(Gen::C) - &co_z),
            (format!("d^{n} - z"), &g(Gen::D) - &z),
            (
                format!("D^{n} - 1"),
                &Element::monomial(alg, QMono::det(n as i64)) - &Element::one(alg),
            ),
        ]
    }

    /// `R` on one `ADTq` normal monomial.
    fn reduce_monomial(&self, m: &QMono) -> Vec<(QMono, i64)> {
        let n = self.n;
        let det = m.det.rem_euclid(n as i64);
        if let Some((x, p)) = m.diag {
            return match (p / n, p % n) {
                (0, _) => vec![(QMono::with_diag(det, x, p), 1)],
                (_, 0) => vec![(QMono::det_z(det), 1)],
                (_, r) => vec![(QMono::with_diag(det, x, r), 1)],
            };
        }
        if let Some((y, p)) = m.anti {
            return match (p / n, p % n) {
                (0, _) => vec![(QMono::with_anti(det, y, p), 1)],
                (_, 0) => vec![(QMono::det(det), 1), (QMono::det_z(det), -1)],
                (_, r) => vec![(QMono::with_anti(det, y, r), 1)],
            };
        }
        vec![(QMono { det, ..*m }, 1)]
    }

    fn field(&self, c: &QScalar) -> CycloElem {
        self.mode.field_elem(c)
    }

    fn zero_vec(&self) -> Vec<CycloElem> {
        vec![self.field(&QScalar::zero()); self.span.len()]
    }

    /// Coordinates of `R(e)` in `V` for an `ADTq` element.
    fn to_vec(&self, e: &Element) -> Vec<CycloElem> {
        let mut v = self.zero_vec();
        for (m, c) in e.terms() {
            let Monomial::Q(q) = m else {
                panic!("non-quantum monomial in ADTq element")
            };
            for (r, s) in self.reduce_monomial(q) {
                let i = self.index[&r];
                v[i] = v[i].add(&self.field(&(c * &QScalar::from_int(s))));
            }
        }
        v
    }

    fn span_element(&self, v: &[CycloElem]) -> Element {
        Element::from_terms(
            AlgebraId::ADTq,
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Monomial::Q(self.span[i]), c.to_qscalar())),
        )
    }

    fn close_ideal(&mut self) {
        let adtq = AlgebraId::ADTq;
        // left multiplication operators on V, as columns
        let ops: HashMap<Gen, Vec<Vec<CycloElem>>> = GENS
            .iter()
            .map(|&g| {
                let cols = self
                    .span
                    .iter()
                    .map(|m| self.to_vec(&(&Element::gen(adtq, g) * &Element::monomial(adtq, *m))))
                    .collect();
                (g, cols)
            })
            .collect();
        let apply = |g: Gen, v: &[CycloElem]| -> Vec<CycloElem> {
            let mut out = self.zero_vec();
            for (j, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (o, col) in out.iter_mut().zip(&ops[&g][j]) {
                    if !col.is_zero() {
                        *o = o.add(&c.mul(col));
                    }
                }
            }
            out
        };
        let apply_word = |w: &[Gen], v: &[CycloElem]| -> Vec<CycloElem> {
            let mut v = v.to_vec();
            for &g in w.iter().rev() {
                v = apply(g, &v);
            }
            v
        };
        let apply_element = |e: &Element, v: &[CycloElem]| -> Vec<CycloElem> {
            let mut out = self.zero_vec();
            for (m, c) in e.terms() {
                let Monomial::Q(q) = m else { continue };
                let w = apply_word(&q.to_word(), v);
                let c = self.field(c);
                for (o, x) in out.iter_mut().zip(&w) {
                    *o = o.add(&c.mul(x));
                }
            }
            out
        };
        let sub = |a: &[CycloElem], b: &[CycloElem]| -> Vec<CycloElem> {
            a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
        };

        let mut queue: Vec<Vec<CycloElem>> = Vec::new();
        let generators = self.ideal_generators();
        let rules = RewriteSystem::cached_adtq().rules();
        let mut unit = self.zero_vec();
        unit[self.index[&QMono::ONE]] = self.field(&QScalar::one());
        for (i, m) in self.span.iter().enumerate() {
            let mut e_v = self.zero_vec();
            e_v[i] = self.field(&QScalar::one());
            for rule in rules {
                let mut d = apply_word(&rule.lhs, &e_v);
                for (w, c) in &rule.rhs {
                    let rw = apply_word(w, &e_v);
                    let c = self.field(c);
                    d = d.iter().zip(&rw).map(|(x, y)| x.sub(&c.mul(y))).collect();
                }
                queue.push(d);
            }
            for (_, r) in &generators {
                queue.push(apply_element(r, &e_v));
            }
            queue.push(sub(&apply_word(&m.to_word(), &unit), &e_v));
        }
        let mut ideal = EchelonBasis::new(self.span.len(), self.field(&QScalar::zero()));
        while let Some(u) = queue.pop() {
            if ideal.insert(&u) {
                for g in GENS {
                    queue.push(apply(g, &u));
                }
            }
        }
        self.ideal = ideal;
    }

    /// Canonical image of an `ADTq` (or already quotient) element.
    pub fn project(&self, e: &Element) -> Element {
        let lifted = if e.algebra() == self.algebra() {
            e.relabel(AlgebraId::ADTq)
        } else {
            e.clone()
        };
        let v = self.ideal.reduce(&self.to_vec(&lifted));
        self.span_element(&v).relabel(self.algebra())
    }

    pub fn mul_monomials(&self, a: &QMono, b: &QMono) -> Element {
        let adtq = AlgebraId::ADTq;
        self.project(&(&Element::monomial(adtq, *a) * &Element::monomial(adtq, *b)))
    }

    /// Representative of a quotient element in `ADTq`.
    pub fn lift(&self, e: &Element) -> Element {
        e.relabel(AlgebraId::ADTq)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_condition() {
        let m = |k| CyclotomicMode::new(k).unwrap();
        assert!(root_condition_holds(1, m(2)));
        assert!(root_condition_holds(2, m(4)));
        assert!(root_condition_holds(2, m(2)));
        assert!(!root_condition_holds(2, m(3)));
        assert!(!root_condition_holds(1, m(1)));
        assert!(root_condition_holds(3, m(18)));
    }

    #[test]
    fn small_quotients() {
        let alg = build_finite_quotient(1, Some(CyclotomicMode::new(2).unwrap())).unwrap();
        let fq = lookup(1, 2).unwrap();
        assert_eq!(fq.dimension(), 2);
        assert_eq!(alg, AlgebraId::FdQuot { n: 1, order: 2 });
        assert!(matches!(
            build_finite_quotient(2, None),
            Err(Error::RootConditionViolated { .. })
        ));
    }
}
