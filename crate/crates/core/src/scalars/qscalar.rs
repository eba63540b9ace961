use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::CyclotomicMode;

/// Exact Laurent polynomial `Σ c_k q^k` with rational coefficients.
///
/// Canonical form: no stored coefficient is zero, so structural equality is
/// value equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QScalar {
    terms: BTreeMap<BigInt, BigRational>,
}

impl QScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), BigInt::zero())
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(BigRational::one(), BigInt::from(k))
    }

    pub fn q_pow_big(k: BigInt) -> Self {
        Self::monomial(BigRational::one(), k)
    }

    /// `±q^k`.
    pub fn signed_q_pow(negative: bool, k: i64) -> Self {
        let c = if negative {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        Self::monomial(c, BigInt::from(k))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::monomial(c, BigInt::zero())
    }

    pub fn monomial(c: BigRational, k: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (BigInt, BigRational)>>(it: I) -> Self {
        let mut s = Self::zero();
        for (k, c) in it {
            s.add_term(k, c);
        }
        s
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, &BigRational)> {
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(k, c)| k.is_zero() && c.is_one())
    }

    pub fn add_term(&mut self, k: BigInt, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: &BigInt) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    /// When the scalar is a single term `c q^k`, returns `(c, k)`.
    pub fn as_monomial(&self) -> Option<(&BigRational, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (c, k))
        } else {
            None
        }
    }

    /// Constant term if the scalar has no q-dependence.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (k, c) = self.terms.iter().next().unwrap();
                k.is_zero().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Inverse of a unit `c q^k` of the Laurent ring.
    pub fn unit_inverse(&self) -> Option<Self> {
        let (c, k) = self.as_monomial()?;
        Some(Self::monomial(c.recip(), -k))
    }

    pub fn min_exponent(&self) -> Option<&BigInt> {
        self.terms.keys().next()
    }

    pub fn max_exponent(&self) -> Option<&BigInt> {
        self.terms.keys().next_back()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Involution induced by `q ∈ U(1)`: `c q^k ↦ c q^{-k}`.
    pub fn star(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Specialize at `q = e^{2πiθ}`.
    pub fn eval(&self, theta: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in &self.terms {
            acc += rational_to_f64(c) * unit_power(theta, k);
        }
        acc
    }

    /// Exponents reduced into `[0, M)`; the image in `ℚ[q]/(q^M − 1)`.
    pub fn reduce_cyclotomic(&self, mode: CyclotomicMode) -> Self {
        let m = BigInt::from(mode.order());
        Self::from_terms(self.terms.iter().map(|(k, c)| (k.mod_floor(&m), c.clone())))
    }
}

/// `e^{2πiθk}`, with the phase reduced modulo 1 before calling `cos`/`sin`.
pub(crate) fn unit_power(theta: f64, k: &BigInt) -> Complex64 {
    let kf = k.to_f64().unwrap_or(0.0);
    let phase = (theta * kf).rem_euclid(1.0);
    Complex64::from_polar(1.0, std::f64::consts::TAU * phase)
}

pub(crate) fn rational_to_f64(c: &BigRational) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

impl From<i64> for QScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QScalar {
    type Output = QScalar;
    fn add(mut self, rhs: QScalar) -> QScalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&QScalar> for QScalar {
    fn add_assign(&mut self, rhs: &QScalar) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

impl Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }
}

impl Sub for QScalar {
    type Output = QScalar;
    fn sub(self, rhs: QScalar) -> QScalar {
        &self - &rhs
    }
}

impl Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        if self.is_zero() || rhs.is_zero() {
            return QScalar::zero();
        }
        if let (Some((c1, k1)), Some((c2, k2))) = (self.as_monomial(), rhs.as_monomial()) {
            return QScalar::monomial(c1 * c2, k1 + k2);
        }
        let mut out = QScalar::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                out.add_term(k1 + k2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for QScalar {
    type Output = QScalar;
    fn mul(self, rhs: QScalar) -> QScalar {
        &self * &rhs
    }
}

impl fmt::Display for QScalar {
    /// Parser-compatible rendering, e.g. `-q^-1 + 3/2*q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let power = match k {
                k if k.is_zero() => None,
                k if k.is_one() => Some("q".to_string()),
                k => Some(format!("q^{k}")),
            };
            match (mag.is_one(), power) {
                (true, None) => write!(f, "1")?,
                (true, Some(p)) => write!(f, "{p}")?,
                (false, None) => write!(f, "{mag}")?,
                (false, Some(p)) => write!(f, "{mag}*{p}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QScalar({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_of_pure_power() {
        assert_eq!(QScalar::q_pow(2).star(), QScalar::q_pow(-2));
        assert_eq!(QScalar::one().star(), QScalar::one());
        let minus_qinv = -QScalar::q_pow(-1);
        assert_eq!(minus_qinv.star(), -QScalar::q_pow(1));
    }

    #[test]
    fn eval_examples() {
        let q = QScalar::q_pow(1);
        assert!((q.eval(0.0) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!((q.eval(0.25) - Complex64::new(0.0, 1.0)).norm() < 1e-12);
        let s = &QScalar::q_pow(-1) + &QScalar::q_pow(1);
        assert!(s.eval(0.25).norm() < 1e-12);
    }

    #[test]
    fn reduce_examples() {
        let m4 = CyclotomicMode::new(4).unwrap();
        assert_eq!(QScalar::q_pow(5).reduce_cyclotomic(m4), QScalar::q_pow(1));
        let s = &QScalar::q_pow(4) - &QScalar::one();
        assert!(s.reduce_cyclotomic(m4).is_zero());
        let t = (0..4).fold(QScalar::zero(), |acc, k| &acc + &QScalar::q_pow(k));
        assert_eq!(t.reduce_cyclotomic(m4), t);
    }

    #[test]
    fn canonical_zero() {
        let s = &QScalar::q_pow(3) - &QScalar::q_pow(3);
        assert!(s.is_zero());
        assert_eq!(s, QScalar::zero());
    }

    #[test]
    fn display_is_stable() {
        let s = &(-QScalar::q_pow(-1)) + &QScalar::from_ratio(3, 2).shift(&BigInt::from(2));
        assert_eq!(s.to_string(), "-q^-1 + 3/2*q^2");
        assert_eq!(QScalar::zero().to_string(), "0");
    }
}
