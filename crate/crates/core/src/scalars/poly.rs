//! Dense univariate polynomials over ℚ and the two scalar fields built on
//! them: rational functions ℚ(q) and cyclotomic fields ℚ(ζ_M).

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::QScalar;

/// Coefficients in increasing degree; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<BigRational>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![BigRational::one()])
    }

    pub fn from_coeffs(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&BigRational> {
        self.0.last()
    }

    /// Splits a Laurent polynomial as `q^shift · p(q)` with `p(0) ≠ 0`.
    pub fn from_laurent(s: &QScalar) -> (BigInt, Poly) {
        let Some(lo) = s.min_exponent().cloned() else {
            return (BigInt::zero(), Poly::zero());
        };
        let hi = s.max_exponent().unwrap();
        let len = usize::try_from(hi - &lo).expect("Laurent span fits in memory") + 1;
        let mut c = vec![BigRational::zero(); len];
        for (k, v) in s.terms() {
            let idx = usize::try_from(k - &lo).unwrap();
            c[idx] = v.clone();
        }
        (lo, Poly::from_coeffs(c))
    }

    pub fn to_laurent(&self, shift: &BigInt) -> QScalar {
        QScalar::from_terms(
            self.0
                .iter()
                .enumerate()
                .map(|(i, c)| (shift + BigInt::from(i), c.clone())),
        )
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).cloned().unwrap_or_else(BigRational::zero);
            let b = o.0.get(i).cloned().unwrap_or_else(BigRational::zero);
            c.push(a + b);
        }
        Poly::from_coeffs(c)
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::from_coeffs(c)
    }

    pub fn scale(&self, s: &BigRational) -> Poly {
        Poly::from_coeffs(self.0.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            Some(l) => self.scale(&l.recip()),
            None => Poly::zero(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.lead().unwrap().recip();
        let mut rem = self.0.clone();
        let mut quot = vec![BigRational::zero(); self.0.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let factor = &rem[top] * &lead_inv;
            if !Zero::is_zero(&factor) {
                let shift = top - dd;
                quot[shift] = factor.clone();
                for (i, c) in d.0.iter().enumerate() {
                    rem[shift + i] -= &factor * c;
                }
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Returns `(g, s, t)` with `s·a + t·b = g`, `g` monic.
    pub fn ext_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (quo, r) = r0.div_rem(&r1);
            let s = s0.sub(&quo.mul(&s1));
            let t = t0.sub(&quo.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead().cloned() {
            Some(l) => {
                let inv = l.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }

    /// `q^n − 1`.
    pub fn x_pow_minus_one(n: usize) -> Poly {
        let mut c = vec![BigRational::zero(); n + 1];
        c[0] = -BigRational::one();
        c[n] = BigRational::one();
        Poly::from_coeffs(c)
    }

    /// The cyclotomic polynomial Φ_M, by dividing `q^M − 1` by Φ_d for
    /// every proper divisor d.
    pub fn cyclotomic(m: u32) -> Poly {
        assert!(m >= 1);
        let mut p = Poly::x_pow_minus_one(m as usize);
        for d in 1..m {
            if m.is_multiple_of(d) {
                let (quo, rem) = p.div_rem(&Poly::cyclotomic(d));
                debug_assert!(rem.is_zero());
                p = quo;
            }
        }
        p
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_laurent(&BigInt::zero()))
    }
}

/// Operations needed by the Gaussian elimination in [`crate::linalg`].
pub trait FieldElem: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Self;
}

impl FieldElem for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

/// Element of ℚ(q) in lowest terms: `q^shift · num / den`, with `den` monic
/// and neither polynomial divisible by `q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    shift: BigInt,
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            shift: BigInt::zero(),
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn from_qscalar(s: &QScalar) -> Self {
        let (shift, num) = Poly::from_laurent(s);
        RatFunc {
            shift,
            num,
            den: Poly::one(),
        }
        .canonical()
    }

    /// Returns the Laurent polynomial when the denominator is trivial.
    pub fn to_qscalar(&self) -> Option<QScalar> {
        (self.den == Poly::one()).then(|| self.num.to_laurent(&self.shift))
    }

    fn canonical(mut self) -> Self {
        if self.num.is_zero() {
            return RatFunc::zero();
        }
        // pull powers of q out of numerator and denominator
        for (poly, sign) in [(&mut self.num, 1i64), (&mut self.den, -1i64)] {
            let lead_zeros = poly.0.iter().take_while(|c| Zero::is_zero(*c)).count();
            if lead_zeros > 0 {
                poly.0.drain(..lead_zeros);
                self.shift += BigInt::from(sign * lead_zeros as i64);
            }
        }
        let g = Poly::gcd(&self.num, &self.den);
        if g.degree().unwrap_or(0) > 0 {
            self.num = self.num.div_rem(&g).0;
            self.den = self.den.div_rem(&g).0;
        }
        let l = self.den.lead().unwrap().recip();
        self.num = self.num.scale(&l);
        self.den = self.den.scale(&l);
        self
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.num.to_laurent(&self.shift);
        if self.den == Poly::one() {
            write!(f, "{n}")
        } else {
            write!(f, "({n})/({})", self.den.to_laurent(&BigInt::zero()))
        }
    }
}

impl FieldElem for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero()
    }
    fn one_like(&self) -> Self {
        RatFunc::from_qscalar(&QScalar::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        // align shifts: q^a n1/d1 + q^b n2/d2 with m = min(a,b)
        let m = self.shift.clone().min(o.shift.clone());
        let lift = |p: &Poly, by: &BigInt| {
            let k = usize::try_from(by).unwrap();
            let mut c = vec![BigRational::zero(); k];
            c.extend(p.0.iter().cloned());
            Poly::from_coeffs(c)
        };
        let n1 = lift(&self.num, &(&self.shift - &m));
        let n2 = lift(&o.num, &(&o.shift - &m));
        let num = n1.mul(&o.den).add(&n2.mul(&self.den));
        RatFunc {
            shift: m,
            num,
            den: self.den.mul(&o.den),
        }
        .canonical()
    }
    fn sub(&self, o: &Self) -> Self {
        let neg = RatFunc {
            shift: o.shift.clone(),
            num: o.num.neg(),
            den: o.den.clone(),
        };
        self.add(&neg)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFunc {
            shift: &self.shift + &o.shift,
            num: self.num.mul(&o.num),
            den: self.den.mul(&o.den),
        }
        .canonical()
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RatFunc {
            shift: -&self.shift,
            num: self.den.clone(),
            den: self.num.clone(),
        }
        .canonical()
    }
}

/// Element of the cyclotomic field ℚ(ζ_M) = ℚ[q]/Φ_M, stored as its
/// remainder of degree < φ(M).
#[derive(Clone, PartialEq, Eq)]
pub struct CycloElem {
    value: Poly,
    modulus: Arc<Poly>,
}

impl CycloElem {
    pub fn new(s: &QScalar, modulus: Arc<Poly>) -> Self {
        let (shift, p) = Poly::from_laurent(s);
        // q^{-1} = q^{M-1} in the field; shift handled by multiplying with q^±1
        let mut value = p.rem(&modulus);
        let q = Poly::from_coeffs(vec![BigRational::zero(), BigRational::one()]);
        let q_inv = CycloElem {
            value: q.clone(),
            modulus: modulus.clone(),
        }
        .inv()
        .value;
        let step = if shift.is_negative() { &q_inv } else { &q };
        let mut k = shift.magnitude().clone();
        while !k.is_zero() {
            value = value.mul(step).rem(&modulus);
            k -= 1u32;
        }
        CycloElem { value, modulus }
    }

    pub fn to_qscalar(&self) -> QScalar {
        self.value.to_laurent(&BigInt::zero())
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_qscalar())
    }
}

impl FieldElem for CycloElem {
    fn zero_like(&self) -> Self {
        CycloElem {
            value: Poly::zero(),
            modulus: self.modulus.clone(),
        }
    }
    fn one_like(&self) -> Self {
        CycloElem {
            value: Poly::one().rem(&self.modulus),
            modulus: self.modulus.clone(),
        }
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        CycloElem {
            value: self.value.add(&o.value),
            modulus: self.modulus.clone(),
        }
    }
    fn sub(&self, o: &Self) -> Self {
        CycloElem {
            value: self.value.sub(&o.value),
            modulus: self.modulus.clone(),
        }
    }
    fn mul(&self, o: &Self) -> Self {
        CycloElem {
            value: self.value.mul(&o.value).rem(&self.modulus),
            modulus: self.modulus.clone(),
        }
    }
    fn inv(&self) -> Self {
        let (g, s, _) = Poly::ext_gcd(&self.value, &self.modulus);
        assert!(
            g == Poly::one(),
            "non-invertible element of a cyclotomic field"
        );
        CycloElem {
            value: s.rem(&self.modulus),
            modulus: self.modulus.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_poly(c: &[i64]) -> Poly {
        Poly::from_coeffs(
            c.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        )
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(Poly::cyclotomic(1), int_poly(&[-1, 1]));
        assert_eq!(Poly::cyclotomic(2), int_poly(&[1, 1]));
        assert_eq!(Poly::cyclotomic(4), int_poly(&[1, 0, 1]));
        assert_eq!(Poly::cyclotomic(6), int_poly(&[1, -1, 1]));
        assert_eq!(Poly::cyclotomic(12), int_poly(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn ratfunc_cancels() {
        // (q^2 - 1)/(q - 1) = q + 1
        let a = RatFunc::from_qscalar(&(&QScalar::q_pow(2) - &QScalar::one()));
        let b = RatFunc::from_qscalar(&(&QScalar::q_pow(1) - &QScalar::one()));
        let c = a.mul(&b.inv());
        assert_eq!(c.to_qscalar(), Some(&QScalar::q_pow(1) + &QScalar::one()));
        assert!(c.sub(&c).is_zero());
    }

    #[test]
    fn cyclo_inverse_of_q() {
        let m = Arc::new(Poly::cyclotomic(4));
        let q = CycloElem::new(&QScalar::q_pow(1), m.clone());
        let qi = CycloElem::new(&QScalar::q_pow(-1), m.clone());
        assert_eq!(q.mul(&qi), q.one_like());
        // q^2 = -1 at a primitive 4th root
        assert_eq!(
            CycloElem::new(&QScalar::q_pow(2), m).to_qscalar(),
            QScalar::from_int(-1)
        );
    }
}
