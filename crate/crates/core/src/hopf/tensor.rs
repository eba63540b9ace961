use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{mul_monomials, AlgebraId, Element, Monomial};
use crate::error::{Error, Result};
use crate::scalars::{CyclotomicMode, QScalar};

/// Rank-2 or rank-3 tensor over a tuple of algebras.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    legs: Vec<AlgebraId>,
    terms: BTreeMap<Vec<Monomial>, QScalar>,
}

impl TensorElement {
    pub fn zero(legs: &[AlgebraId]) -> Self {
        TensorElement {
            legs: legs.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    /// `x ⊗ y`.
    pub fn pure(parts: &[&Element]) -> Self {
        let legs: Vec<AlgebraId> = parts.iter().map(|e| e.algebra()).collect();
        let mut acc: Vec<(Vec<Monomial>, QScalar)> = vec![(Vec::new(), QScalar::one())];
        for e in parts {
            acc = acc
                .into_iter()
                .flat_map(|(ms, c)| {
                    e.terms().map(move |(m, v)| {
                        let mut ms = ms.clone();
                        ms.push(*m);
                        (ms, &c * v)
                    })
                })
                .collect();
        }
        let mut t = TensorElement::zero(&legs);
        for (ms, c) in acc {
            t.add_term(ms, c);
        }
        t
    }

    pub fn legs(&self) -> &[AlgebraId] {
        &self.legs
    }

    pub fn rank(&self) -> usize {
        self.legs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &QScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn cyclotomic_mode(&self) -> Option<CyclotomicMode> {
        self.legs.iter().find_map(|l| match l {
            AlgebraId::FdQuot { order, .. } => CyclotomicMode::new(*order).ok(),
            _ => None,
        })
    }

    pub fn add_term(&mut self, ms: Vec<Monomial>, c: QScalar) {
        debug_assert_eq!(ms.len(), self.legs.len());
        let mode = self.cyclotomic_mode();
        let canon = |c: QScalar| match mode {
            Some(m) => m.reduce_primitive(&c),
            None => c,
        };
        let c = canon(c);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(ms) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = canon(e.get() + &c);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_tensor(&mut self, o: &TensorElement, scale: &QScalar) {
        assert_eq!(self.legs, o.legs, "tensor legs differ");
        for (ms, c) in &o.terms {
            self.add_term(ms.clone(), c * scale);
        }
    }

    pub fn checked_add(&self, o: &TensorElement) -> Result<TensorElement> {
        self.same_legs(o)?;
        let mut out = self.clone();
        out.add_tensor(o, &QScalar::one());
        Ok(out)
    }

    pub fn sub(&self, o: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_tensor(o, &QScalar::from_int(-1));
        out
    }

    pub fn scale(&self, c: &QScalar) -> TensorElement {
        let mut out = TensorElement::zero(&self.legs);
        for (ms, v) in &self.terms {
            out.add_term(ms.clone(), v * c);
        }
        out
    }

    fn same_legs(&self, o: &TensorElement) -> Result<()> {
        if self.legs == o.legs {
            return Ok(());
        }
        let i = self
            .legs
            .iter()
            .zip(&o.legs)
            .position(|(a, b)| a != b)
            .unwrap_or(0);
        Err(Error::CrossAlgebraMix {
            left: self.legs[i],
            right: o.legs.get(i).copied().unwrap_or(self.legs[i]),
        })
    }

    /// Leg-wise product.
    pub fn mul(&self, o: &TensorElement) -> TensorElement {
        assert_eq!(self.legs, o.legs, "tensor legs differ");
        let mut out = TensorElement::zero(&self.legs);
        for (ms1, c1) in &self.terms {
            for (ms2, c2) in &o.terms {
                let parts: Vec<Element> = self
                    .legs
                    .iter()
                    .zip(ms1.iter().zip(ms2))
                    .map(|(alg, (m1, m2))| mul_monomials(*alg, m1, m2))
                    .collect();
                let refs: Vec<&Element> = parts.iter().collect();
                out.add_tensor(&TensorElement::pure(&refs), &(c1 * c2));
            }
        }
        out
    }

    pub fn checked_mul(&self, o: &TensorElement) -> Result<TensorElement> {
        self.same_legs(o)?;
        Ok(self.mul(o))
    }

    /// Applies a linear map leg by leg: `f(i, m)` is the image of monomial
    /// `m` on leg `i` (itself a tensor, so legs may split); the images are
    /// concatenated into a tensor over `target_legs`.
    pub fn map_legs<F>(&self, target_legs: &[AlgebraId], f: F) -> Result<TensorElement>
    where
        F: Fn(usize, &Monomial) -> Result<TensorElement>,
    {
        let mut out = TensorElement::zero(target_legs);
        for (ms, c) in &self.terms {
            let mut acc: Option<TensorElement> = None;
            for (i, m) in ms.iter().enumerate() {
                let img = f(i, m)?;
                acc = Some(match acc {
                    None => img,
                    Some(a) => a.outer(&img),
                });
            }
            let acc = acc.expect("tensor of rank zero");
            assert_eq!(
                acc.legs, target_legs,
                "leg images do not match the declared target"
            );
            out.add_tensor(&acc, c);
        }
        Ok(out)
    }

    /// `self ⊗ o` as a tensor of rank `rank + o.rank`.
    pub fn outer(&self, o: &TensorElement) -> TensorElement {
        let mut legs = self.legs.clone();
        legs.extend_from_slice(&o.legs);
        let mut out = TensorElement::zero(&legs);
        for (ms1, c1) in &self.terms {
            for (ms2, c2) in &o.terms {
                let mut ms = ms1.clone();
                ms.extend_from_slice(ms2);
                out.add_term(ms, c1 * c2);
            }
        }
        out
    }

    /// Collapses a rank-2 tensor over one algebra to an element by multiplying the legs.
    pub fn multiply_legs(&self) -> Element {
        let alg = self.legs[0];
        let mut out = Element::zero(alg);
        for (ms, c) in &self.terms {
            let mut e = Element::monomial(alg, ms[0]);
            for m in &ms[1..] {
                e = &e * &Element::monomial(alg, *m);
            }
            out.add_scaled(&e, c);
        }
        out
    }

    pub fn map_scalars(&self, f: impl Fn(&QScalar) -> QScalar) -> TensorElement {
        let mut out = TensorElement::zero(&self.legs);
        for (ms, c) in &self.terms {
            out.add_term(ms.clone(), f(c));
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (ms, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let legs: Vec<String> = ms
                .iter()
                .zip(&self.legs)
                .map(|(m, alg)| m.display_in(*alg))
                .collect();
            if c.is_one() {
                write!(f, "{}", legs.join(" ⊗ "))?;
            } else {
                write!(f, "({c})*{}", legs.join(" ⊗ "))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.legs, self)
    }
}
