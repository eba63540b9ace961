//! Presentations, normal forms and bases of the algebras in play:
//!
//! * `AUq2`  – A(U_{q⁻¹,q}(2)) for `q` on the unit circle,
//! * `ADTq`  – its quotient by the Hopf ideal ⟨ab, ac, cd, bd⟩,
//! * `AT2`   – Laurent polynomials in commuting unitaries `u, v`,
//! * `AZ2`   – functions on ℤ₂ spanned by `δ₀, δ₁`,
//! * `AT2q`  – the noncommutative torus `xy = q·yx`,
//! * `BICROSS` – A(ℤ₂) ⊗ A(T²) with the crossed product and coproduct,
//! * `FDQUOT` – finite-dimensional quotients of `ADTq` at roots of unity.

mod basis;
mod element;
mod fdquot;
mod product;
mod rewrite;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use basis::{enumerate_basis, Basis14, Window};
pub use element::{elements_equal, Element, Word};
pub use fdquot::{
    build_finite_quotient, lookup as fdquot_lookup, root_condition_holds, FiniteQuotient,
};
pub use product::{mul_monomials, project_to_adtq};
pub use rewrite::{
    check_confluence, deglex_less, normalize, Combo, CriticalPair, RewriteSystem, Rule,
};

use crate::error::{Error, Result};

/// Seeded defects used to show that the verification suites are sensitive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Mutation {
    /// `bc → Dz − D` in place of `bc → qDz − qD`, i.e. `bc = q·cb`.
    BcLinear,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraId {
    AUq2,
    ADTq,
    AT2,
    AZ2,
    AT2q,
    Bicross,
    FdQuot {
        n: u32,
        order: u32,
    },
    /// `ADTq` presented by a deliberately corrupted rewrite system.
    Mutant(Mutation),
}

impl AlgebraId {
    /// Algebras whose elements are built from `a, b, c, d, D, Dinv, z`.
    pub fn is_quantum(self) -> bool {
        matches!(
            self,
            AlgebraId::AUq2 | AlgebraId::ADTq | AlgebraId::FdQuot { .. } | AlgebraId::Mutant(_)
        )
    }

    pub fn is_hopf(self) -> bool {
        !matches!(self, AlgebraId::AT2q)
    }

    pub fn generators(self) -> &'static [Gen] {
        use Gen::*;
        match self {
            AlgebraId::AUq2 | AlgebraId::ADTq | AlgebraId::FdQuot { .. } | AlgebraId::Mutant(_) => {
                &[A, B, C, D, Det, DetInv, Z]
            }
            AlgebraId::AT2 => &[U, V],
            AlgebraId::AT2q => &[X, Y],
            AlgebraId::AZ2 => &[D0, D1],
            AlgebraId::Bicross => &[D0, D1, U, V],
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "AUq2" => AlgebraId::AUq2,
            "ADTq" => AlgebraId::ADTq,
            "AT2" => AlgebraId::AT2,
            "AZ2" => AlgebraId::AZ2,
            "AT2q" => AlgebraId::AT2q,
            "BICROSS" => AlgebraId::Bicross,
            other => return Err(Error::InvalidParams(format!("unknown algebra `{other}`"))),
        })
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraId::AUq2 => write!(f, "AUq2"),
            AlgebraId::ADTq => write!(f, "ADTq"),
            AlgebraId::AT2 => write!(f, "AT2"),
            AlgebraId::AZ2 => write!(f, "AZ2"),
            AlgebraId::AT2q => write!(f, "AT2q"),
            AlgebraId::Bicross => write!(f, "BICROSS"),
            AlgebraId::FdQuot { n, order } => write!(f, "FDQUOT({n}, q^{order}=1)"),
            AlgebraId::Mutant(m) => write!(f, "ADTq[{m:?}]"),
        }
    }
}

/// Generator letters. The declaration order of `DetInv .. C` is the letter
/// order of the graded-lexicographic monomial order: `D⁻¹ < D < z < a < d < b < c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    DetInv,
    Det,
    Z,
    A,
    D,
    B,
    C,
    U,
    V,
    X,
    Y,
    D0,
    D1,
}

impl Gen {
    pub const ALL: [Gen; 13] = [
        Gen::A,
        Gen::B,
        Gen::C,
        Gen::D,
        Gen::Det,
        Gen::DetInv,
        Gen::Z,
        Gen::U,
        Gen::V,
        Gen::X,
        Gen::Y,
        Gen::D0,
        Gen::D1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Gen::A => "a",
            Gen::B => "b",
            Gen::C => "c",
            Gen::D => "d",
            Gen::Det => "D",
            Gen::DetInv => "Dinv",
            Gen::Z => "z",
            Gen::U => "u",
            Gen::V => "v",
            Gen::X => "x",
            Gen::Y => "y",
            Gen::D0 => "d0",
            Gen::D1 => "d1",
        }
    }

    pub fn from_name(s: &str) -> Option<Gen> {
        Gen::ALL.into_iter().find(|g| g.name() == s)
    }

    /// Generators for which negative powers are accepted as input.
    pub fn invertible(self) -> bool {
        matches!(
            self,
            Gen::Det | Gen::DetInv | Gen::U | Gen::V | Gen::X | Gen::Y
        )
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Diag {
    A,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Anti {
    B,
    C,
}

impl Diag {
    pub fn gen(self) -> Gen {
        match self {
            Diag::A => Gen::A,
            Diag::D => Gen::D,
        }
    }
    pub fn other(self) -> Diag {
        match self {
            Diag::A => Diag::D,
            Diag::D => Diag::A,
        }
    }
}

impl Anti {
    pub fn gen(self) -> Gen {
        match self {
            Anti::B => Gen::B,
            Anti::C => Gen::C,
        }
    }
    pub fn other(self) -> Anti {
        match self {
            Anti::B => Anti::C,
            Anti::C => Anti::B,
        }
    }
}

/// Normal monomial `D^det z^z X^m Y^n`, `X ∈ {a, d}`, `Y ∈ {b, c}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QMono {
    pub det: i64,
    pub z: u32,
    pub diag: Option<(Diag, u32)>,
    pub anti: Option<(Anti, u32)>,
}

impl QMono {
    pub const ONE: QMono = QMono {
        det: 0,
        z: 0,
        diag: None,
        anti: None,
    };

    pub fn det(k: i64) -> Self {
        QMono {
            det: k,
            ..Self::ONE
        }
    }

    pub fn det_z(k: i64) -> Self {
        QMono {
            det: k,
            z: 1,
            ..Self::ONE
        }
    }

    pub fn with_diag(k: i64, x: Diag, n: u32) -> Self {
        QMono {
            det: k,
            diag: (n > 0).then_some((x, n)),
            ..Self::ONE
        }
    }

    pub fn with_anti(k: i64, y: Anti, n: u32) -> Self {
        QMono {
            det: k,
            anti: (n > 0).then_some((y, n)),
            ..Self::ONE
        }
    }

    /// `D^k g^n` for `g ∈ {a, b, c, d}`.
    pub fn det_gen(k: i64, g: Gen, n: u32) -> Self {
        match g {
            Gen::A => Self::with_diag(k, Diag::A, n),
            Gen::D => Self::with_diag(k, Diag::D, n),
            Gen::B => Self::with_anti(k, Anti::B, n),
            Gen::C => Self::with_anti(k, Anti::C, n),
            _ => panic!("det_gen expects one of a, b, c, d"),
        }
    }

    pub fn degree(&self) -> u32 {
        self.det.unsigned_abs() as u32
            + self.z
            + self.diag.map_or(0, |(_, m)| m)
            + self.anti.map_or(0, |(_, n)| n)
    }

    pub fn to_word(&self) -> Vec<Gen> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        let dl = if self.det >= 0 { Gen::Det } else { Gen::DetInv };
        w.extend(std::iter::repeat_n(dl, self.det.unsigned_abs() as usize));
        w.extend(std::iter::repeat_n(Gen::Z, self.z as usize));
        if let Some((x, m)) = self.diag {
            w.extend(std::iter::repeat_n(x.gen(), m as usize));
        }
        if let Some((y, n)) = self.anti {
            w.extend(std::iter::repeat_n(y.gen(), n as usize));
        }
        w
    }

    /// Inverse of [`QMono::to_word`] on words of the normal pattern.
    pub fn from_word(word: &[Gen]) -> Option<Self> {
        let mut i = 0;
        let mut mono = QMono::ONE;
        let run = |i: &mut usize, g: Gen| {
            let start = *i;
            while *i < word.len() && word[*i] == g {
                *i += 1;
            }
            (*i - start) as u32
        };
        let pos = run(&mut i, Gen::Det);
        if pos > 0 {
            mono.det = pos as i64;
        } else {
            mono.det = -(run(&mut i, Gen::DetInv) as i64);
        }
        mono.z = run(&mut i, Gen::Z);
        for x in [Diag::A, Diag::D] {
            let m = run(&mut i, x.gen());
            if m > 0 {
                mono.diag = Some((x, m));
                break;
            }
        }
        for y in [Anti::B, Anti::C] {
            let n = run(&mut i, y.gen());
            if n > 0 {
                mono.anti = Some((y, n));
                break;
            }
        }
        (i == word.len()).then_some(mono)
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, first: &mut bool, name: &str, p: i64) -> fmt::Result {
    if p == 0 {
        return Ok(());
    }
    if !*first {
        write!(f, "*")?;
    }
    *first = false;
    if p == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{p}")
    }
}

impl fmt::Display for QMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write_power(f, &mut first, "D", self.det)?;
        write_power(f, &mut first, "z", self.z as i64)?;
        if let Some((x, m)) = self.diag {
            write_power(f, &mut first, x.gen().name(), m as i64)?;
        }
        if let Some((y, n)) = self.anti {
            write_power(f, &mut first, y.gen().name(), n as i64)?;
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A basis monomial of any of the algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Monomial {
    Q(QMono),
    /// `u^k v^l` in `AT2`, `x^k y^l` in `AT2q`.
    Torus(i64, i64),
    /// `δ_s`, `s ∈ {0, 1}`.
    Z2(u8),
    /// `δ_s ⊗ u^k v^l` in the bicross product.
    Cross(u8, i64, i64),
}

impl Monomial {
    pub const fn unit_z2() -> [Monomial; 2] {
        [Monomial::Z2(0), Monomial::Z2(1)]
    }

    pub fn as_q(&self) -> Option<&QMono> {
        match self {
            Monomial::Q(m) => Some(m),
            _ => None,
        }
    }

    pub fn degree(&self) -> u32 {
        match self {
            Monomial::Q(m) => m.degree(),
            Monomial::Torus(k, l) | Monomial::Cross(_, k, l) => {
                (k.unsigned_abs() + l.unsigned_abs()) as u32
            }
            Monomial::Z2(_) => 0,
        }
    }

    pub fn display_in(&self, alg: AlgebraId) -> String {
        struct D<'a>(&'a Monomial, AlgebraId);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let (xn, yn) = if self.1 == AlgebraId::AT2q {
                    ("x", "y")
                } else {
                    ("u", "v")
                };
                match *self.0 {
                    Monomial::Q(m) => write!(f, "{m}"),
                    Monomial::Torus(k, l) => {
                        let mut first = true;
                        write_power(f, &mut first, xn, k)?;
                        write_power(f, &mut first, yn, l)?;
                        if first {
                            write!(f, "1")?;
                        }
                        Ok(())
                    }
                    Monomial::Z2(s) => write!(f, "d{s}"),
                    Monomial::Cross(s, k, l) => {
                        write!(f, "d{s}")?;
                        let mut first = false;
                        write_power(f, &mut first, "u", k)?;
                        write_power(f, &mut first, "v", l)
                    }
                }
            }
        }
        D(self, alg).to_string()
    }
}

impl From<QMono> for Monomial {
    fn from(m: QMono) -> Self {
        Monomial::Q(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_round_trip() {
        let m = QMono {
            det: -2,
            z: 1,
            diag: Some((Diag::D, 3)),
            anti: Some((Anti::C, 2)),
        };
        assert_eq!(QMono::from_word(&m.to_word()), Some(m));
        assert_eq!(QMono::from_word(&[Gen::B, Gen::A]), None);
        assert_eq!(m.to_string(), "D^-2*z*d^3*c^2");
        assert_eq!(QMono::ONE.to_string(), "1");
    }

    #[test]
    fn generator_names_are_fixed() {
        let names: Vec<&str> = Gen::ALL.iter().map(|g| g.name()).collect();
        assert_eq!(
            names,
            ["a", "b", "c", "d", "D", "Dinv", "z", "u", "v", "x", "y", "d0", "d1"]
        );
    }
}
