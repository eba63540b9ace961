use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{coproduct, counit, haar, star, TensorElement};
use crate::algebra::{AlgebraId, Basis14, Element, Gen, Monomial, QMono};
use crate::error::{Error, Result};
use crate::linalg::EchelonBasis;
use crate::report::Check;
use crate::scalars::{CyclotomicMode, FieldElem, QScalar, RatFunc};

/// Labels of the three irrep families: `χ_m = Dᵐ`, `χ_mᶻ = Dᵐ(2z−1)` and
/// the two-dimensional `w_{m,n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrrepLabel {
    Chi(i64),
    ChiZ(i64),
    W(i64, u32),
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::Chi(m) => write!(f, "chi({m})"),
            IrrepLabel::ChiZ(m) => write!(f, "chiz({m})"),
            IrrepLabel::W(m, n) => write!(f, "w({m},{n})"),
        }
    }
}

impl FromStr for IrrepLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParams(format!("bad irrep label `{s}`"));
        let s = s.trim();
        let (head, rest) = s.split_once('(').ok_or_else(bad)?;
        let args: Vec<&str> = rest
            .strip_suffix(')')
            .ok_or_else(bad)?
            .split(',')
            .map(str::trim)
            .collect();
        let int = |x: &str| x.parse::<i64>().map_err(|_| bad());
        match (head.trim(), args.as_slice()) {
            ("chi", [m]) => Ok(IrrepLabel::Chi(int(m)?)),
            ("chiz", [m]) => Ok(IrrepLabel::ChiZ(int(m)?)),
            ("w", [m, n]) => {
                let n = int(n)?;
                if n <= 0 {
                    return Err(bad());
                }
                Ok(IrrepLabel::W(int(m)?, n as u32))
            }
            _ => Err(bad()),
        }
    }
}

impl IrrepLabel {
    pub fn corep(self) -> CorepMatrix {
        match self {
            IrrepLabel::Chi(m) => CorepMatrix::chi(m),
            IrrepLabel::ChiZ(m) => CorepMatrix::chiz(m),
            IrrepLabel::W(m, n) => CorepMatrix::w(m, n),
        }
    }

    pub fn character(self) -> Element {
        character_of(&self.corep())
    }

    /// `{χ_m, χ_mᶻ : |m| ≤ m_max} ∪ {w_{m,n} : |m| ≤ m_max, 1 ≤ n ≤ n_max}`.
    pub fn window(m_max: i64, n_max: u32) -> Vec<IrrepLabel> {
        let mut out = Vec::new();
        for m in -m_max..=m_max {
            out.push(IrrepLabel::Chi(m));
            out.push(IrrepLabel::ChiZ(m));
            for n in 1..=n_max {
                out.push(IrrepLabel::W(m, n));
            }
        }
        out
    }
}

/// Square matrix of `ADTq` elements.
#[derive(Clone, Debug, PartialEq)]
pub struct CorepMatrix {
    entries: Vec<Vec<Element>>,
}

fn adtq(m: QMono) -> Element {
    Element::monomial(AlgebraId::ADTq, m)
}

impl CorepMatrix {
    pub fn new(entries: Vec<Vec<Element>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParams(
                "corepresentation matrix must be square and nonempty".into(),
            ));
        }
        let alg = entries[0][0].algebra();
        if let Some(e) = entries.iter().flatten().find(|e| e.algebra() != alg) {
            return Err(Error::CrossAlgebraMix {
                left: alg,
                right: e.algebra(),
            });
        }
        Ok(CorepMatrix { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Element {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<Element>] {
        &self.entries
    }

    pub fn algebra(&self) -> AlgebraId {
        self.entries[0][0].algebra()
    }

    pub fn chi(m: i64) -> Self {
        CorepMatrix {
            entries: vec![vec![adtq(QMono::det(m))]],
        }
    }

    pub fn chiz(m: i64) -> Self {
        let e = &adtq(QMono::det_z(m)).scale(&QScalar::from_int(2)) - &adtq(QMono::det(m));
        CorepMatrix {
            entries: vec![vec![e]],
        }
    }

    /// `w_{m,n} = [[Dᵐaⁿ, Dᵐbⁿ], [Dᵐcⁿ, Dᵐdⁿ]]`.
    pub fn w(m: i64, n: u32) -> Self {
        let e = |g| adtq(QMono::det_gen(m, g, n));
        CorepMatrix {
            entries: vec![vec![e(Gen::A), e(Gen::B)], vec![e(Gen::C), e(Gen::D)]],
        }
    }

    /// `[[a, c], [b, d]]`, the layout printed for the vector representation.
    pub fn vector_column_layout() -> Self {
        CorepMatrix::w(0, 1).transpose()
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        CorepMatrix {
            entries: (0..n)
                .map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect())
                .collect(),
        }
    }

    pub fn direct_sum(&self, o: &CorepMatrix) -> Self {
        let (n, m) = (self.dim(), o.dim());
        let alg = self.algebra();
        let mut entries = vec![vec![Element::zero(alg); n + m]; n + m];
        for (row, src) in entries.iter_mut().zip(&self.entries) {
            row[..n].clone_from_slice(src);
        }
        for i in 0..m {
            for j in 0..m {
                entries[n + i][n + j] = o.entries[i][j].clone();
            }
        }
        CorepMatrix { entries }
    }

    /// Kronecker product `(v ⊗ w)_{(i,k),(j,l)} = v_{ij} w_{kl}`.
    pub fn tensor(&self, o: &CorepMatrix) -> Self {
        let (n, m) = (self.dim(), o.dim());
        let mut entries = Vec::with_capacity(n * m);
        for i in 0..n {
            for k in 0..m {
                let mut row = Vec::with_capacity(n * m);
                for j in 0..n {
                    for l in 0..m {
                        row.push(&self.entries[i][j] * &o.entries[k][l]);
                    }
                }
                entries.push(row);
            }
        }
        CorepMatrix { entries }
    }
}

/// Outcome of [`verify_corep`]; each field holds a failure witness.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CorepVerdict {
    pub corep_law: Option<String>,
    pub counit_law: Option<String>,
    pub unitary: Option<Option<String>>,
}

impl CorepVerdict {
    pub fn passed(&self) -> bool {
        self.corep_law.is_none()
            && self.counit_law.is_none()
            && !matches!(self.unitary, Some(Some(_)))
    }
}

pub fn verify_corep(w: &CorepMatrix, check_unitary: bool) -> Result<CorepVerdict> {
    let n = w.dim();
    let alg = w.algebra();
    let mut v = CorepVerdict::default();
    for i in 0..n {
        for j in 0..n {
            let lhs = coproduct(&w.entries[i][j])?;
            let mut rhs = TensorElement::zero(&[alg, alg]);
            for k in 0..n {
                rhs.add_tensor(
                    &TensorElement::pure(&[&w.entries[i][k], &w.entries[k][j]]),
                    &QScalar::one(),
                );
            }
            if v.corep_law.is_none() && lhs != rhs {
                v.corep_law = Some(format!(
                    "entry ({i},{j}): Δ({}) − Σ = {}",
                    w.entries[i][j],
                    lhs.sub(&rhs)
                ));
            }
            let eps = counit(&w.entries[i][j])?;
            let expect = QScalar::from_int(i64::from(i == j));
            if v.counit_law.is_none() && eps != expect {
                v.counit_law = Some(format!("entry ({i},{j}): ε = {eps}"));
            }
        }
    }
    if check_unitary {
        let stars: Vec<Vec<Element>> = w
            .entries
            .iter()
            .map(|r| r.iter().map(star).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        let mut witness = None;
        #[allow(clippy::needless_range_loop)]
        for i in 0..n {
            for j in 0..n {
                let expect = if i == j {
                    Element::one(alg)
                } else {
                    Element::zero(alg)
                };
                let mut left = Element::zero(alg);
                let mut right = Element::zero(alg);
                for k in 0..n {
                    left = &left + &(&w.entries[i][k] * &stars[j][k]);
                    right = &right + &(&stars[k][i] * &w.entries[k][j]);
                }
                if witness.is_none() && left != expect {
                    witness = Some(format!("(w w*)({i},{j}) = {left}"));
                }
                if witness.is_none() && right != expect {
                    witness = Some(format!("(w* w)({i},{j}) = {right}"));
                }
            }
        }
        v.unitary = Some(witness);
    }
    Ok(v)
}

pub fn character_of(w: &CorepMatrix) -> Element {
    let mut out = Element::zero(w.algebra());
    for i in 0..w.dim() {
        out = &out + &w.entries[i][i];
    }
    out
}

/// Multiplicities `h(χ_λ* χ)` over the candidate labels, with an exact
/// reconstruction check.
pub fn decompose_character(
    chi: &Element,
    candidates: &[IrrepLabel],
) -> Result<Vec<(IrrepLabel, QScalar)>> {
    let mut out = Vec::new();
    let mut recon = Element::zero(chi.algebra());
    for &lab in candidates {
        let c = lab.character();
        let mult = haar(&(&star(&c)? * chi))?;
        if !mult.is_zero() {
            recon.add_scaled(&c, &mult);
            out.push((lab, mult));
        }
    }
    let residual = chi - &recon;
    if !residual.is_zero() {
        return Err(Error::IncompleteWindow(residual.to_string()));
    }
    Ok(out)
}

/// Basis of `{T : w T = T v}` (scalar matrices of shape `dim w × dim v`),
/// solved over ℚ(q).
pub fn intertwiner_space(
    v: &CorepMatrix,
    w: &CorepMatrix,
    mode: Option<CyclotomicMode>,
) -> Result<Vec<Vec<Vec<RatFunc>>>> {
    if mode.is_some() {
        return Err(Error::CyclotomicModeUnsupported);
    }
    if v.algebra() != w.algebra() {
        return Err(Error::CrossAlgebraMix {
            left: v.algebra(),
            right: w.algebra(),
        });
    }
    let (dv, dw) = (v.dim(), w.dim());
    let unknowns = dw * dv;
    let var = |r: usize, s: usize| r * dv + s;
    let mut system = EchelonBasis::new(unknowns, RatFunc::zero());
    for i in 0..dw {
        for j in 0..dv {
            let mut monos: BTreeSet<Monomial> = BTreeSet::new();
            for k in 0..dw {
                monos.extend(w.entries[i][k].terms().map(|(m, _)| *m));
            }
            for k in 0..dv {
                monos.extend(v.entries[k][j].terms().map(|(m, _)| *m));
            }
            for m in monos {
                let mut row = vec![RatFunc::zero(); unknowns];
                for k in 0..dw {
                    let c = w.entries[i][k].coeff(&m);
                    if !c.is_zero() {
                        row[var(k, j)] = row[var(k, j)].add(&RatFunc::from_qscalar(&c));
                    }
                }
                for k in 0..dv {
                    let c = v.entries[k][j].coeff(&m);
                    if !c.is_zero() {
                        row[var(i, k)] = row[var(i, k)].sub(&RatFunc::from_qscalar(&c));
                    }
                }
                system.insert(&row);
            }
        }
    }
    Ok(system
        .nullspace()
        .into_iter()
        .map(|x| {
            (0..dw)
                .map(|r| (0..dv).map(|s| x[var(r, s)].clone()).collect())
                .collect()
        })
        .collect())
}

/// Character orthonormality, unitarity and irreducibility of every listed
/// irrep, the decomposition of `(a+d)²`, and Peter–Weyl coverage of the
/// basis window, for labels with `|m| ≤ m_max`, `n ≤ n_max`.
pub fn verify_characters(m_max: i64, n_max: u32) -> Result<Vec<Check>> {
    let labels = IrrepLabel::window(m_max, n_max);
    let chars: Vec<Element> = labels.iter().map(|l| l.character()).collect();
    let stars: Vec<Element> = chars.iter().map(star).collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (0..labels.len())
        .flat_map(|i| (0..labels.len()).map(move |j| (i, j)))
        .collect();
    let gram = crate::report::first_failure(&pairs, |&(i, j)| {
        let v = haar(&(&stars[i] * &chars[j])).unwrap_or_else(|_| QScalar::from_int(-99));
        let expect = QScalar::from_int(i64::from(i == j));
        (v != expect).then(|| format!("h(χ_{}* χ_{}) = {v}", labels[i], labels[j]))
    });

    let unitary = crate::report::first_failure(&labels, |l| match verify_corep(&l.corep(), true) {
        Ok(v) if v.passed() => None,
        Ok(v) => Some(format!("{l}: {v:?}")),
        Err(e) => Some(format!("{l}: {e}")),
    });

    let w = IrrepLabel::W(0, 1).corep();
    let dim = intertwiner_space(&w, &w, None)?.len();
    let mut irreducible = (dim != 1).then(|| format!("dim End(w(0,1)) = {dim}"));
    if irreducible.is_none() {
        irreducible = crate::report::first_failure(&labels, |l| {
            let v = l.corep();
            match intertwiner_space(&v, &v, None) {
                Ok(s) if s.len() == 1 => None,
                Ok(s) => Some(format!("dim End({l}) = {}", s.len())),
                Err(e) => Some(e.to_string()),
            }
        });
    }

    let alg = AlgebraId::ADTq;
    let x = (&Element::gen(alg, Gen::A) + &Element::gen(alg, Gen::D)).pow(2);
    let expected = vec![
        (IrrepLabel::Chi(1), QScalar::one()),
        (IrrepLabel::ChiZ(1), QScalar::one()),
        (IrrepLabel::W(0, 2), QScalar::one()),
    ];
    let decomposition = match decompose_character(&x, &labels) {
        Ok(mut d) => {
            d.sort_by_key(|p| p.0);
            (d != expected).then(|| {
                format!(
                    "(a+d)² = {}",
                    d.iter()
                        .map(|(l, c)| format!("{c}·{l}"))
                        .collect::<Vec<_>>()
                        .join(" + ")
                )
            })
        }
        Err(e) => Some(e.to_string()),
    };

    Ok(vec![
        Check::from_witness("characters/gram_identity", gram).with_detail(format!(
            "{} irreps, |m| ≤ {m_max}, n ≤ {n_max}",
            labels.len()
        )),
        Check::from_witness("characters/unitary_coreps", unitary),
        Check::from_witness("characters/irreducible", irreducible)
            .with_detail(format!("dim End(w(0,1)) = {dim}")),
        Check::from_witness("characters/decompose_a_plus_d_squared", decomposition),
        Check::from_witness(
            "characters/peter_weyl_coverage",
            peter_weyl_coverage(m_max, n_max),
        ),
    ])
}

/// The matrix entries of the listed irreps span exactly the basis window
/// `Dᵐz, Dᵐ(1−z), Dᵐgⁿ` and are linearly independent. Returns a witness on
/// failure.
pub fn peter_weyl_coverage(m_max: i64, n_max: u32) -> Option<String> {
    let window = Basis14::window(m_max, n_max);
    let pos: std::collections::HashMap<Basis14, usize> =
        window.iter().enumerate().map(|(i, b)| (*b, i)).collect();
    let mut span = EchelonBasis::new(window.len(), RatFunc::zero());
    let mut count = 0;
    for l in IrrepLabel::window(m_max, n_max) {
        for e in l.corep().entries().iter().flatten() {
            count += 1;
            let mut row = vec![RatFunc::zero(); window.len()];
            for (b, c) in Basis14::coordinates(e) {
                let Some(&i) = pos.get(&b) else {
                    return Some(format!(
                        "entry {e} of {l} leaves the window at {}",
                        b.label()
                    ));
                };
                row[i] = RatFunc::from_qscalar(&c);
            }
            if !span.insert(&row) {
                return Some(format!("entry {e} of {l} is dependent on earlier entries"));
            }
        }
    }
    (count != window.len() || span.rank() != window.len()).then(|| {
        format!(
            "{count} entries of rank {} against {} basis elements",
            span.rank(),
            window.len()
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_round_trip() {
        for l in IrrepLabel::window(1, 2) {
            assert_eq!(l.to_string().parse::<IrrepLabel>().unwrap(), l);
        }
        assert!("w(1,0)".parse::<IrrepLabel>().is_err());
    }

    #[test]
    fn perturbed_matrix_fails() {
        let w = CorepMatrix::w(0, 1);
        let mut e = w.entries().to_vec();
        e[1][1] = &e[1][1] + &e[0][1];
        let bad = CorepMatrix::new(e).unwrap();
        assert!(verify_corep(&bad, false).unwrap().corep_law.is_some());
        assert!(verify_corep(&w, true).unwrap().passed());
    }
}
