use super::{fdquot, AlgebraId, Element, Gen, Monomial, QMono};
use crate::scalars::QScalar;

/// Finite exponent window for basis enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Window {
    /// Total degree `|k| + l + m + n ≤ d` (for the torus: `|k| + |l| ≤ d`).
    Degree(u32),
    /// `|D-power| ≤ outer` and generator power in `inner_min..=inner_max`;
    /// for the torus, `|k|, |l| ≤ outer`.
    Box {
        outer: i64,
        inner_min: u32,
        inner_max: u32,
    },
}

impl Window {
    pub fn degree(d: u32) -> Self {
        Window::Degree(d)
    }

    pub fn boxed(outer: i64, inner_min: u32, inner_max: u32) -> Self {
        Window::Box {
            outer,
            inner_min,
            inner_max,
        }
    }

    fn det_range(&self) -> std::ops::RangeInclusive<i64> {
        match *self {
            Window::Degree(d) => -(d as i64)..=d as i64,
            Window::Box { outer, .. } => -outer..=outer,
        }
    }

    fn admits(&self, m: &QMono) -> bool {
        match *self {
            Window::Degree(d) => m.degree() <= d,
            Window::Box {
                outer,
                inner_min,
                inner_max,
            } => {
                let n = m.diag.map(|x| x.1).or(m.anti.map(|y| y.1)).unwrap_or(0);
                m.det.abs() <= outer && (n == 0 || (inner_min..=inner_max).contains(&n))
            }
        }
    }

    fn torus(&self) -> Vec<(i64, i64)> {
        let r = match *self {
            Window::Degree(d) => d as i64,
            Window::Box { outer, .. } => outer,
        };
        let mut out = Vec::new();
        for k in -r..=r {
            for l in -r..=r {
                if matches!(self, Window::Box { .. }) || k.abs() + l.abs() <= r {
                    out.push((k, l));
                }
            }
        }
        out
    }

    fn power_cap(&self) -> u32 {
        match *self {
            Window::Degree(d) => d,
            Window::Box { inner_max, .. } => inner_max,
        }
    }
}

const DIAGS: [super::Diag; 2] = [super::Diag::A, super::Diag::D];
const ANTIS: [super::Anti; 2] = [super::Anti::B, super::Anti::C];

/// `enumerateBasis`: the normal monomials of `alg` inside `window`, sorted
/// and pairwise distinct.
pub fn enumerate_basis(alg: AlgebraId, window: Window) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = match alg {
        AlgebraId::AZ2 => vec![Monomial::Z2(0), Monomial::Z2(1)],
        AlgebraId::AT2 | AlgebraId::AT2q => window
            .torus()
            .into_iter()
            .map(|(k, l)| Monomial::Torus(k, l))
            .collect(),
        AlgebraId::Bicross => window
            .torus()
            .into_iter()
            .flat_map(|(k, l)| [Monomial::Cross(0, k, l), Monomial::Cross(1, k, l)])
            .collect(),
        AlgebraId::ADTq | AlgebraId::Mutant(_) => adtq_monomials(window),
        AlgebraId::AUq2 => auq2_monomials(window),
        AlgebraId::FdQuot { n, order } => fdquot::lookup(n, order)
            .map(|fq| fq.basis().iter().map(|m| Monomial::Q(*m)).collect())
            .unwrap_or_default(),
    };
    out.sort();
    out.dedup();
    out
}

fn adtq_monomials(window: Window) -> Vec<Monomial> {
    let cap = window.power_cap();
    let mut out = Vec::new();
    for k in window.det_range() {
        let mut cands = vec![QMono::det(k), QMono::det_z(k)];
        for n in 1..=cap {
            cands.extend(DIAGS.iter().map(|&x| QMono::with_diag(k, x, n)));
            cands.extend(ANTIS.iter().map(|&y| QMono::with_anti(k, y, n)));
        }
        out.extend(
            cands
                .into_iter()
                .filter(|m| window.admits(m))
                .map(Monomial::Q),
        );
    }
    out
}

fn auq2_monomials(window: Window) -> Vec<Monomial> {
    let cap = window.power_cap();
    let mut out = Vec::new();
    for k in window.det_range() {
        for l in 0..=cap {
            for m in 0..=cap {
                let diags: Vec<Option<(super::Diag, u32)>> = if m == 0 {
                    vec![None]
                } else {
                    DIAGS.iter().map(|&x| Some((x, m))).collect()
                };
                for n in 0..=cap {
                    let antis: Vec<Option<(super::Anti, u32)>> = if n == 0 {
                        vec![None]
                    } else {
                        ANTIS.iter().map(|&y| Some((y, n))).collect()
                    };
                    for &diag in &diags {
                        for &anti in &antis {
                            let mono = QMono {
                                det: k,
                                z: l,
                                diag,
                                anti,
                            };
                            let ok = match window {
                                Window::Degree(d) => mono.degree() <= d,
                                Window::Box { outer, .. } => k.abs() <= outer,
                            };
                            if ok {
                                out.push(Monomial::Q(mono));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// The basis `D^m z, D^m(1−z), D^m gⁿ` of `ADTq` used by the Haar functional
/// and by Peter–Weyl bookkeeping.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis14 {
    DetZ(i64),
    DetCoZ(i64),
    Gen(i64, Gen, u32),
}

impl Basis14 {
    pub fn to_element(self) -> Element {
        let alg = AlgebraId::ADTq;
        match self {
            Basis14::DetZ(m) => Element::monomial(alg, QMono::det_z(m)),
            Basis14::DetCoZ(m) => {
                &Element::monomial(alg, QMono::det(m)) - &Element::monomial(alg, QMono::det_z(m))
            }
            Basis14::Gen(m, g, n) => Element::monomial(alg, QMono::det_gen(m, g, n)),
        }
    }

    /// Coordinates of an `ADTq` element in this basis.
    pub fn coordinates(e: &Element) -> Vec<(Basis14, QScalar)> {
        let mut out: std::collections::BTreeMap<Basis14, QScalar> = Default::default();
        let mut add = |b: Basis14, c: &QScalar| {
            let entry = out.entry(b).or_default();
            *entry += c;
        };
        for (m, c) in e.terms() {
            let Monomial::Q(q) = m else { continue };
            match (q.z, q.diag, q.anti) {
                (0, None, None) => {
                    add(Basis14::DetZ(q.det), c);
                    add(Basis14::DetCoZ(q.det), c);
                }
                (_, None, None) => add(Basis14::DetZ(q.det), c),
                (_, Some((x, n)), None) => add(Basis14::Gen(q.det, x.gen(), n), c),
                (_, None, Some((y, n))) => add(Basis14::Gen(q.det, y.gen(), n), c),
                _ => {}
            }
        }
        out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// `D^m z`, `D^m(1−z)` and `D^m gⁿ` for `|m| ≤ m_max`, `1 ≤ n ≤ n_max`.
    pub fn window(m_max: i64, n_max: u32) -> Vec<Basis14> {
        let mut out = Vec::new();
        for m in -m_max..=m_max {
            out.push(Basis14::DetZ(m));
            out.push(Basis14::DetCoZ(m));
            for g in [Gen::A, Gen::D, Gen::B, Gen::C] {
                out.extend((1..=n_max).map(|n| Basis14::Gen(m, g, n)));
            }
        }
        out
    }

    pub fn label(self) -> String {
        match self {
            Basis14::DetZ(m) => format!("D^{m}*z"),
            Basis14::DetCoZ(m) => format!("D^{m}*(1 - z)"),
            Basis14::Gen(m, g, n) => format!("D^{m}*{g}^{n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_counts() {
        let w = enumerate_basis(AlgebraId::ADTq, Window::boxed(1, 1, 2));
        assert_eq!(w.len(), 30);
        let gens = w
            .iter()
            .filter(|m| {
                m.as_q()
                    .is_some_and(|q| q.diag.is_some() || q.anti.is_some())
            })
            .count();
        assert_eq!(gens, 24);
        assert_eq!(
            enumerate_basis(AlgebraId::AT2, Window::boxed(1, 0, 0)).len(),
            9
        );
        assert_eq!(enumerate_basis(AlgebraId::AZ2, Window::degree(0)).len(), 2);
    }

    #[test]
    fn basis14_round_trip() {
        let e = Basis14::DetCoZ(2).to_element();
        assert_eq!(
            Basis14::coordinates(&e),
            vec![(Basis14::DetCoZ(2), QScalar::one())]
        );
    }
}
