use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::NumericScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sector {
    /// The classical fibre `T²`.
    C,
    /// The quantum fibre `T²_{q²}`.
    Q,
}

/// Basis vector `e^s_{m,n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Site {
    pub sector: Sector,
    pub m: i64,
    pub n: i64,
}

impl Site {
    pub const fn new(sector: Sector, m: i64, n: i64) -> Self {
        Site { sector, m, n }
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sector {
            Sector::C => 'c',
            Sector::Q => 'q',
        };
        write!(f, "e^{s}_({},{})", self.m, self.n)
    }
}

/// Sites `|m|, |n| ≤ N` in both sectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeWindow {
    pub n: i64,
}

impl LatticeWindow {
    pub fn new(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParams(format!(
                "lattice window N = {n} must be positive"
            )));
        }
        Ok(LatticeWindow { n })
    }

    pub fn contains(&self, s: &Site) -> bool {
        s.m.abs() <= self.n && s.n.abs() <= self.n
    }

    /// Sites at distance at least `depth` from the boundary.
    pub fn sites_at_depth(&self, depth: i64) -> Vec<Site> {
        let r = self.n - depth;
        if r < 0 {
            return Vec::new();
        }
        [Sector::C, Sector::Q]
            .into_iter()
            .flat_map(|sec| (-r..=r).flat_map(move |m| (-r..=r).map(move |n| Site::new(sec, m, n))))
            .collect()
    }

    pub fn sites(&self) -> Vec<Site> {
        self.sites_at_depth(0)
    }

    /// `|m|, |n| ≤ N − 1`.
    pub fn interior(&self) -> Vec<Site> {
        self.sites_at_depth(1)
    }

    fn on_boundary(&self, s: &Site) -> bool {
        s.m.abs() == self.n || s.n.abs() == self.n
    }
}

/// Finitely supported vector of amplitudes.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct StateVector {
    amps: BTreeMap<Site, NumericScalar>,
}

impl StateVector {
    pub fn basis(s: Site) -> Self {
        let mut v = StateVector::default();
        v.amps.insert(s, NumericScalar::new(1.0, 0.0));
        v
    }

    /// `Ω = (e^c_{0,0} + e^q_{0,0})/√2`.
    pub fn vacuum() -> Self {
        let w = NumericScalar::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let mut v = StateVector::default();
        v.amps.insert(Site::new(Sector::C, 0, 0), w);
        v.amps.insert(Site::new(Sector::Q, 0, 0), w);
        v
    }

    pub fn get(&self, s: &Site) -> NumericScalar {
        self.amps.get(s).copied().unwrap_or_default()
    }

    pub fn add(&mut self, s: Site, c: NumericScalar) {
        *self.amps.entry(s).or_default() += c;
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Site, &NumericScalar)> {
        self.amps.iter()
    }

    pub fn scale(&self, c: NumericScalar) -> Self {
        StateVector {
            amps: self.amps.iter().map(|(s, a)| (*s, a * c)).collect(),
        }
    }

    pub fn axpy(&mut self, c: NumericScalar, o: &StateVector) {
        for (s, a) in &o.amps {
            self.add(*s, c * a);
        }
    }

    pub fn inner(&self, o: &StateVector) -> NumericScalar {
        self.amps.iter().map(|(s, a)| a.conj() * o.get(s)).sum()
    }

    pub fn norm(&self) -> f64 {
        self.amps.values().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.amps.values().map(|a| a.norm()).fold(0.0, f64::max)
    }
}

/// Operator given by its columns on the window. A column whose exact image
/// leaves the window is recorded as escaping; applying the operator to such
/// a site is a `WindowOverflow`.
#[derive(Clone, Debug)]
pub struct SparseOperator {
    window: LatticeWindow,
    cols: BTreeMap<Site, BTreeMap<Site, NumericScalar>>,
    escapes: BTreeSet<Site>,
}

impl SparseOperator {
    pub fn zero(window: LatticeWindow) -> Self {
        SparseOperator {
            window,
            cols: BTreeMap::new(),
            escapes: BTreeSet::new(),
        }
    }

    pub fn identity(window: LatticeWindow) -> Self {
        let mut op = Self::zero(window);
        for s in window.sites() {
            op.cols
                .entry(s)
                .or_default()
                .insert(s, NumericScalar::new(1.0, 0.0));
        }
        op
    }

    /// Weighted shift `e_s ↦ w(s)·e_{f(s)}`, zero where `f` returns `None`.
    pub fn weighted_shift(
        window: LatticeWindow,
        f: impl Fn(Site) -> Option<(Site, NumericScalar)>,
    ) -> Self {
        let mut op = Self::zero(window);
        for s in window.sites() {
            if let Some((t, w)) = f(s) {
                if window.contains(&t) {
                    op.cols.entry(s).or_default().insert(t, w);
                } else {
                    op.escapes.insert(s);
                }
            }
        }
        op
    }

    pub fn window(&self) -> LatticeWindow {
        self.window
    }

    pub fn entry(&self, row: &Site, col: &Site) -> NumericScalar {
        self.cols
            .get(col)
            .and_then(|c| c.get(row))
            .copied()
            .unwrap_or_default()
    }

    pub fn column(&self, col: &Site) -> impl Iterator<Item = (&Site, &NumericScalar)> {
        self.cols.get(col).into_iter().flat_map(|c| c.iter())
    }

    pub fn escapes(&self, s: &Site) -> bool {
        self.escapes.contains(s)
    }

    pub fn nnz(&self) -> usize {
        self.cols.values().map(BTreeMap::len).sum()
    }

    /// `A v`, failing if `v` touches an escaping column.
    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        let mut out = StateVector::default();
        for (s, a) in v.iter() {
            if !self.window.contains(s) || self.escapes.contains(s) {
                return Err(Error::WindowOverflow(s.to_string()));
            }
            for (t, w) in self.column(s) {
                out.add(*t, w * a);
            }
        }
        Ok(out)
    }

    /// `A v` with the truncated matrix (escaping parts silently dropped).
    pub fn apply_truncated(&self, v: &StateVector) -> StateVector {
        let mut out = StateVector::default();
        for (s, a) in v.iter() {
            for (t, w) in self.column(s) {
                out.add(*t, w * a);
            }
        }
        out
    }

    /// `self ∘ o`.
    pub fn compose(&self, o: &SparseOperator) -> SparseOperator {
        let mut out = Self::zero(self.window);
        out.escapes = o.escapes.clone();
        for (j, col) in &o.cols {
            let mut acc: BTreeMap<Site, NumericScalar> = BTreeMap::new();
            for (k, b) in col {
                if self.escapes.contains(k) {
                    out.escapes.insert(*j);
                }
                for (i, a) in self.column(k) {
                    *acc.entry(*i).or_default() += a * b;
                }
            }
            acc.retain(|_, v| *v != NumericScalar::default());
            if !acc.is_empty() {
                out.cols.insert(*j, acc);
            }
        }
        out
    }

    pub fn axpy(&self, c: NumericScalar, o: &SparseOperator) -> SparseOperator {
        let mut out = self.clone();
        out.escapes.extend(o.escapes.iter().copied());
        for (j, col) in &o.cols {
            let target = out.cols.entry(*j).or_default();
            for (i, v) in col {
                *target.entry(*i).or_default() += c * v;
            }
        }
        out
    }

    pub fn scale(&self, c: NumericScalar) -> SparseOperator {
        let mut out = self.clone();
        for col in out.cols.values_mut() {
            for v in col.values_mut() {
                *v *= c;
            }
        }
        out
    }

    /// Conjugate transpose. Columns on the boundary are marked escaping,
    /// since contributions from outside the window cannot be seen.
    pub fn adjoint(&self) -> SparseOperator {
        let mut out = Self::zero(self.window);
        for (j, col) in &self.cols {
            for (i, v) in col {
                out.cols.entry(*i).or_default().insert(*j, v.conj());
            }
        }
        for s in self.window.sites() {
            if self.window.on_boundary(&s) {
                out.escapes.insert(s);
            }
        }
        out
    }
}
