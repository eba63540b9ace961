use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::product::mul_monomials;
use super::{AlgebraId, Gen, Monomial, QMono};
use crate::error::{Error, Result};
use crate::scalars::{CyclotomicMode, QScalar};

/// Formal product `coeff · g₁^{e₁} ⋯ g_r^{e_r}` before normalization.
#[derive(Clone, Debug, PartialEq)]
pub struct Word {
    pub coeff: QScalar,
    pub factors: Vec<(Gen, i64)>,
}

impl Word {
    pub fn new(factors: Vec<(Gen, i64)>) -> Self {
        Word {
            coeff: QScalar::one(),
            factors,
        }
    }

    pub fn letters(letters: &[Gen]) -> Self {
        Word::new(letters.iter().map(|&g| (g, 1)).collect())
    }

    pub fn scaled(mut self, c: QScalar) -> Self {
        self.coeff = &self.coeff * &c;
        self
    }
}

/// Finite linear combination of normal monomials of one algebra.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    alg: AlgebraId,
    terms: BTreeMap<Monomial, QScalar>,
}

impl Element {
    pub fn zero(alg: AlgebraId) -> Self {
        Element {
            alg,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alg: AlgebraId) -> Self {
        let mut e = Element::zero(alg);
        match alg {
            AlgebraId::AZ2 => {
                e.add_term(Monomial::Z2(0), QScalar::one());
                e.add_term(Monomial::Z2(1), QScalar::one());
            }
            AlgebraId::Bicross => {
                e.add_term(Monomial::Cross(0, 0, 0), QScalar::one());
                e.add_term(Monomial::Cross(1, 0, 0), QScalar::one());
            }
            AlgebraId::AT2 | AlgebraId::AT2q => e.add_term(Monomial::Torus(0, 0), QScalar::one()),
            _ => e.add_term(Monomial::Q(QMono::ONE), QScalar::one()),
        }
        e
    }

    pub fn scalar(alg: AlgebraId, c: QScalar) -> Self {
        Element::one(alg).scale(&c)
    }

    pub fn monomial(alg: AlgebraId, m: impl Into<Monomial>) -> Self {
        Element::term(alg, m, QScalar::one())
    }

    pub fn term(alg: AlgebraId, m: impl Into<Monomial>, c: QScalar) -> Self {
        let mut e = Element::zero(alg);
        e.add_term(m.into(), c);
        e
    }

    /// Single generator as an element (`D` for `Det`, etc.).
    pub fn gen(alg: AlgebraId, g: Gen) -> Self {
        let e = match g {
            Gen::A | Gen::B | Gen::C | Gen::D => Element::monomial(alg, QMono::det_gen(0, g, 1)),
            Gen::Det => Element::monomial(alg, QMono::det(1)),
            Gen::DetInv => Element::monomial(alg, QMono::det(-1)),
            Gen::Z => Element::monomial(alg, QMono::det_z(0)),
            Gen::U => Element::monomial(alg, Monomial::Torus(1, 0)),
            Gen::V => Element::monomial(alg, Monomial::Torus(0, 1)),
            Gen::X => Element::monomial(alg, Monomial::Torus(1, 0)),
            Gen::Y => Element::monomial(alg, Monomial::Torus(0, 1)),
            Gen::D0 => Element::monomial(alg, Monomial::Z2(0)),
            Gen::D1 => Element::monomial(alg, Monomial::Z2(1)),
        };
        e.reduced()
    }

    /// Re-normalizes by multiplying with the unit; used for algebras whose
    /// raw monomials need reduction (finite quotients).
    fn reduced(self) -> Self {
        if matches!(self.alg, AlgebraId::FdQuot { .. }) {
            &Element::one(self.alg) * &self
        } else {
            self
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, QScalar)>>(alg: AlgebraId, it: I) -> Self {
        let mut e = Element::zero(alg);
        for (m, c) in it {
            e.add_term(m, c);
        }
        e
    }

    pub fn algebra(&self) -> AlgebraId {
        self.alg
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &QScalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, QScalar> {
        self.terms
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

    pub fn coeff(&self, m: &Monomial) -> QScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: QScalar) {
        let c = self.canonical_scalar(c);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if let AlgebraId::FdQuot { order, .. } = self.alg {
                    if let Ok(mode) = CyclotomicMode::new(order) {
                        let v = mode.reduce_primitive(o.get());
                        *o.get_mut() = v;
                    }
                }
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Coefficients of finite quotients live in ℚ(ζ_M) and are kept as
    /// reduced representatives.
    fn canonical_scalar(&self, c: QScalar) -> QScalar {
        match self.alg {
            AlgebraId::FdQuot { order, .. } => match CyclotomicMode::new(order) {
                Ok(mode) => mode.reduce_primitive(&c),
                Err(_) => c,
            },
            _ => c,
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &QScalar) {
        assert_eq!(self.alg, other.alg, "cross-algebra addition");
        for (m, v) in &other.terms {
            self.add_term(*m, v * c);
        }
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        if c.is_zero() {
            return Element::zero(self.alg);
        }
        Element::from_terms(self.alg, self.terms.iter().map(|(m, v)| (*m, v * c)))
    }

    pub fn map_scalars(&self, f: impl Fn(&QScalar) -> QScalar) -> Self {
        Element::from_terms(self.alg, self.terms.iter().map(|(m, v)| (*m, f(v))))
    }

    /// Reinterprets the same coefficients in another algebra sharing the
    /// monomial type (e.g. lifting `ADTq` normal monomials into `AUq2`).
    pub fn relabel(&self, alg: AlgebraId) -> Self {
        Element::from_terms(alg, self.terms.iter().map(|(m, c)| (*m, c.clone())))
    }

    pub fn checked_add(&self, o: &Element) -> Result<Element> {
        self.same_algebra(o)?;
        Ok(self + o)
    }

    pub fn checked_sub(&self, o: &Element) -> Result<Element> {
        self.same_algebra(o)?;
        Ok(self - o)
    }

    pub fn checked_mul(&self, o: &Element) -> Result<Element> {
        self.same_algebra(o)?;
        Ok(self * o)
    }

    fn same_algebra(&self, o: &Element) -> Result<()> {
        if self.alg == o.alg {
            Ok(())
        } else {
            Err(Error::CrossAlgebraMix {
                left: self.alg,
                right: o.alg,
            })
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Element::one(self.alg);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

/// `elementsEqual`: normal forms are canonical, so equality is structural.
pub fn elements_equal(a: &Element, b: &Element) -> Result<bool> {
    a.same_algebra(b)?;
    Ok(a == b)
}

impl Add for &Element {
    type Output = Element;
    fn add(self, o: &Element) -> Element {
        assert_eq!(self.alg, o.alg, "cross-algebra addition");
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, o: &Element) -> Element {
        assert_eq!(self.alg, o.alg, "cross-algebra subtraction");
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&QScalar::from_int(-1))
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, o: &Element) -> Element {
        assert_eq!(self.alg, o.alg, "cross-algebra product");
        let mut out = Element::zero(self.alg);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let c = c1 * c2;
                for (m, v) in mul_monomials(self.alg, m1, m2).terms {
                    out.add_term(m, &v * &c);
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Element {
            type Output = Element;
            fn $f(self, o: Element) -> Element {
                (&self).$f(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Element {
    /// Parser-compatible rendering in the generator alphabet.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mono = m.display_in(self.alg);
            let (neg, mag) = match c.as_monomial() {
                Some((r, _)) if r < &num_rational::BigRational::from_integer(0.into()) => {
                    (true, -c)
                }
                _ => (false, c.clone()),
            };
            if i > 0 {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            let coeff = if mag.len() > 1 {
                format!("({mag})")
            } else {
                mag.to_string()
            };
            match (mag.is_one(), mono == "1") {
                (true, _) => write!(f, "{mono}")?,
                (false, true) => write!(f, "{coeff}")?,
                (false, false) => write!(f, "{coeff}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.alg, self)
    }
}
