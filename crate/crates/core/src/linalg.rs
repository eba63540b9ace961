//! Dense Gaussian elimination over an exact field.

use crate::scalars::FieldElem;

/// Incrementally maintained reduced row-echelon basis of a subspace.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F: FieldElem> {
    dim: usize,
    zero: F,
    /// (pivot column, row normalized to 1 at the pivot)
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: FieldElem> EchelonBasis<F> {
    pub fn new(dim: usize, zero: F) -> Self {
        Self {
            dim,
            zero,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    /// Residual of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x = x.sub(&f.mul(r));
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(FieldElem::is_zero)
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv();
        let r: Vec<F> = r.iter().map(|x| x.mul(&inv)).collect();
        for (_, row) in &mut self.rows {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    if !y.is_zero() {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
        }
        self.rows.push((p, r));
        true
    }

    /// Basis of the solution space of `row · x = 0` for all stored rows.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let pivots: Vec<usize> = self.pivots().collect();
        let one = if self.rows.is_empty() {
            None
        } else {
            Some(self.rows[0].1[self.rows[0].0].clone())
        };
        let mut out = Vec::new();
        for free in (0..self.dim).filter(|c| !pivots.contains(c)) {
            let one = match &one {
                Some(o) => o.clone(),
                None => self.zero.one_like(),
            };
            let mut x = vec![self.zero.clone(); self.dim];
            x[free] = one;
            for (p, row) in &self.rows {
                if !row[free].is_zero() {
                    x[*p] = self.zero.sub(&row[free]);
                }
            }
            out.push(x);
        }
        out
    }
}

pub fn rank<F: FieldElem>(rows: &[Vec<F>], zero: &F) -> usize {
    let Some(first) = rows.first() else { return 0 };
    let mut b = EchelonBasis::new(first.len(), zero.clone());
    for r in rows {
        b.insert(r);
    }
    b.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn rank_and_nullspace() {
        let rows = vec![
            vec![r(1), r(2), r(3)],
            vec![r(2), r(4), r(6)],
            vec![r(0), r(1), r(1)],
        ];
        assert_eq!(rank(&rows, &r(0)), 2);
        let mut b = EchelonBasis::new(3, r(0));
        for row in &rows {
            b.insert(row);
        }
        let ns = b.nullspace();
        assert_eq!(ns.len(), 1);
        for row in &rows {
            let dot = row.iter().zip(&ns[0]).fold(r(0), |acc, (a, x)| acc + a * x);
            assert_eq!(dot, r(0));
        }
    }
}
