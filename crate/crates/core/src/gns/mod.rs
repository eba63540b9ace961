//! Truncated numeric model of the GNS representation of `ADTq` on
//! `ℓ²(ℤ²) ⊕ ℓ²(ℤ²)`, sectors `c` (classical) and `q` (quantum).

mod lattice;

use std::collections::HashMap;
use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use lattice::{LatticeWindow, Sector, Site, SparseOperator, StateVector};

use crate::algebra::{enumerate_basis, AlgebraId, Element, Gen, Monomial, RewriteSystem, Window};
use crate::error::{Error, Result};
use crate::hopf::{haar, star};
use crate::report::Check;
use crate::scalars::{eval_scalar, NumericScalar};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

fn qp(theta: f64, k: i64) -> NumericScalar {
    NumericScalar::from_polar(1.0, 2.0 * PI * theta * k as f64)
}

fn real(x: f64) -> NumericScalar {
    NumericScalar::new(x, 0.0)
}

/// `π` on the generator letters of `ADTq`.
#[derive(Clone, Debug)]
pub struct GnsOperators {
    window: LatticeWindow,
    theta: f64,
    ops: HashMap<Gen, SparseOperator>,
}

/// `buildGeneratorOperators`. With `mutate_b` the weight of `π(b)` on
/// `n > 0` uses `q^{2n}` instead of `q^{2n−1}`.
pub fn build_generator_operators(
    window: LatticeWindow,
    theta: f64,
    mutate_b: bool,
) -> GnsOperators {
    use Sector::{C, Q};
    let one = real(1.0);
    let a = SparseOperator::weighted_shift(window, |s| match s.sector {
        C if s.n >= 0 => Some((Site::new(C, s.m, s.n + 1), one)),
        C => Some((Site::new(C, s.m + 1, s.n + 1), one)),
        Q => None,
    });
    let d = SparseOperator::weighted_shift(window, |s| match s.sector {
        C if s.n > 0 => Some((Site::new(C, s.m + 1, s.n - 1), one)),
        C => Some((Site::new(C, s.m, s.n - 1), one)),
        Q => None,
    });
    let b = SparseOperator::weighted_shift(window, |s| match s.sector {
        Q if s.n > 0 => {
            let e = if mutate_b { 2 * s.n } else { 2 * s.n - 1 };
            Some((Site::new(Q, s.m + 1, s.n - 1), -qp(theta, e)))
        }
        Q => Some((Site::new(Q, s.m, s.n - 1), qp(theta, 2 * s.m))),
        C => None,
    });
    let c = SparseOperator::weighted_shift(window, |s| match s.sector {
        Q if s.n >= 0 => Some((Site::new(Q, s.m, s.n + 1), one)),
        Q => Some((Site::new(Q, s.m + 1, s.n + 1), -qp(theta, -2 * s.m - 1))),
        C => None,
    });
    // D = ad − q⁻¹bc, D⁻¹ = D†, z = D⁻¹ad
    let ad = a.compose(&d);
    let det = ad.axpy(-qp(theta, -1), &b.compose(&c));
    let det_inv = det.adjoint();
    let z = det_inv.compose(&ad);
    let ops = HashMap::from([
        (Gen::A, a),
        (Gen::B, b),
        (Gen::C, c),
        (Gen::D, d),
        (Gen::Det, det),
        (Gen::DetInv, det_inv),
        (Gen::Z, z),
    ]);
    GnsOperators { window, theta, ops }
}

impl GnsOperators {
    pub fn window(&self) -> LatticeWindow {
        self.window
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn get(&self, g: Gen) -> &SparseOperator {
        &self.ops[&g]
    }

    fn apply_word(&self, word: &[Gen], v: &StateVector) -> Result<StateVector> {
        let mut v = v.clone();
        for g in word.iter().rev() {
            v = self.get(*g).apply(&v)?;
        }
        Ok(v)
    }

    /// The truncated matrix of `π(e)`.
    pub fn element_operator(&self, e: &Element) -> Result<SparseOperator> {
        check_algebra(e)?;
        let mut out = SparseOperator::zero(self.window);
        for (m, c) in e.terms() {
            let Monomial::Q(q) = m else { unreachable!() };
            let mut op = SparseOperator::identity(self.window);
            for g in q.to_word() {
                op = op.compose(self.get(g));
            }
            out = out.axpy(eval_scalar(c, self.theta), &op);
        }
        Ok(out)
    }
}

fn check_algebra(e: &Element) -> Result<()> {
    match e.algebra() {
        AlgebraId::ADTq => Ok(()),
        other => Err(Error::CrossAlgebraMix {
            left: AlgebraId::ADTq,
            right: other,
        }),
    }
}

/// `applyElement`: `π(e)v` along the normal form of `e`.
pub fn apply_element(e: &Element, v: &StateVector, ops: &GnsOperators) -> Result<StateVector> {
    check_algebra(e)?;
    let mut out = StateVector::default();
    for (m, c) in e.terms() {
        let Monomial::Q(q) = m else { unreachable!() };
        out.axpy(eval_scalar(c, ops.theta), &ops.apply_word(&q.to_word(), v)?);
    }
    Ok(out)
}

/// `½⟨e^c₀₀, π(e)e^c₀₀⟩ + ½⟨e^q₀₀, π(e)e^q₀₀⟩`.
pub fn gns_expectation(e: &Element, ops: &GnsOperators) -> Result<NumericScalar> {
    let mut total = NumericScalar::default();
    for sec in [Sector::C, Sector::Q] {
        let v = StateVector::basis(Site::new(sec, 0, 0));
        total += real(0.5) * v.inner(&apply_element(e, &v, ops)?);
    }
    Ok(total)
}

/// Largest singular value of the truncated matrix of `π(e)` by power
/// iteration on `A†A`.
pub fn estimate_operator_norm(
    e: &Element,
    ops: &GnsOperators,
    tol: f64,
    max_iter: usize,
) -> Result<f64> {
    let a = ops.element_operator(e)?;
    let adj = a.adjoint();
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e37_79b9);
    let mut x = StateVector::default();
    for s in ops.window.sites() {
        x.add(
            s,
            NumericScalar::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
        );
    }
    let nx = x.norm();
    x = x.scale(real(1.0 / nx));
    let mut prev = 0.0;
    for _ in 0..max_iter {
        let y = adj.apply_truncated(&a.apply_truncated(&x));
        let ny = y.norm();
        if ny == 0.0 {
            return Ok(0.0);
        }
        let sigma = ny.sqrt();
        if (sigma - prev).abs() <= tol * sigma.max(1.0) {
            return Ok(sigma);
        }
        prev = sigma;
        x = y.scale(real(1.0 / ny));
    }
    Err(Error::NonConvergence(max_iter))
}

/// Largest `‖π(r)e_s‖` over the sites `s`, where `r = lhs − rhs`.
fn relation_defect(
    ops: &GnsOperators,
    lhs: &[Gen],
    rhs: &[(Vec<Gen>, crate::scalars::QScalar)],
    sites: &[Site],
) -> Result<(f64, usize)> {
    let mut worst: f64 = 0.0;
    let mut seen = 0;
    for s in sites {
        let v = StateVector::basis(*s);
        let run = || -> Result<StateVector> {
            let mut d = ops.apply_word(lhs, &v)?;
            for (w, c) in rhs {
                d.axpy(-eval_scalar(c, ops.theta), &ops.apply_word(w, &v)?);
            }
            Ok(d)
        };
        match run() {
            Ok(d) => {
                seen += 1;
                worst = worst.max(d.norm());
            }
            Err(Error::WindowOverflow(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok((worst, seen))
}

fn word_label(w: &[Gen]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|g| g.name()).collect::<Vec<_>>().join("*")
}

/// Relation defects per rewrite rule of `ADTq`, on the sites two steps away
/// from the boundary whose images under both sides stay inside the window.
/// Also returns the number of sites each rule was evaluated on.
pub fn relation_defects(ops: &GnsOperators) -> Result<Vec<(String, f64, usize)>> {
    let sites = ops.window.sites_at_depth(2);
    let mut out = Vec::new();
    for rule in RewriteSystem::cached_adtq().rules() {
        let rhs = rule
            .rhs
            .iter()
            .map(|(w, c)| format!("({c})*{}", word_label(w)))
            .collect::<Vec<_>>()
            .join(" + ");
        let label = format!(
            "{} = {}",
            word_label(&rule.lhs),
            if rhs.is_empty() { "0".into() } else { rhs }
        );
        let (d, seen) = relation_defect(ops, &rule.lhs, &rule.rhs, &sites)?;
        out.push((label, d, seen));
    }
    Ok(out)
}

/// `verifyGNSRelations` with tolerance `tol`.
pub fn verify_gns_relations(
    window: LatticeWindow,
    theta: f64,
    mutate_b: bool,
    tol: f64,
) -> Result<Vec<Check>> {
    if window.n < 3 {
        return Err(Error::InvalidParams(format!(
            "GNS checks need N ≥ 3, got {}",
            window.n
        )));
    }
    let ops = build_generator_operators(window, theta, mutate_b);
    let sites = window.sites_at_depth(2);
    let mut checks = Vec::new();

    let defects = relation_defects(&ops)?;
    let (worst_label, worst) = defects.iter().fold((String::new(), 0.0), |acc, (l, d, _)| {
        if *d > acc.1 {
            (l.clone(), *d)
        } else {
            acc
        }
    });
    let min_seen = defects.iter().map(|d| d.2).min().unwrap_or(0);
    let mut w = defects
        .iter()
        .find(|(_, d, _)| *d > tol)
        .map(|(l, d, _)| format!("‖π({l})‖ = {d:.3e} on the interior"));
    if w.is_none() && min_seen == 0 {
        w = Some("window too small: some relation was evaluated on no site".into());
    }
    checks.push(Check::from_witness("gns/relations", w).with_detail(format!(
        "{} relations, max defect {worst:.3e} ({worst_label}), at least {min_seen} sites each",
        defects.len()
    )));

    // ⟨π(x*)ξ, η⟩ = ⟨ξ, π(x)η⟩
    let mut adj_worst: f64 = 0.0;
    let mut adj_witness = None;
    for g in [
        Gen::A,
        Gen::B,
        Gen::C,
        Gen::D,
        Gen::Det,
        Gen::DetInv,
        Gen::Z,
    ] {
        let x = Element::gen(AlgebraId::ADTq, g);
        let xs = star(&x)?;
        let images = |e: &Element| -> HashMap<Site, StateVector> {
            sites
                .iter()
                .filter_map(|s| Some((*s, apply_element(e, &StateVector::basis(*s), &ops).ok()?)))
                .collect()
        };
        let (fwd, bwd) = (images(&x), images(&xs));
        for eta in fwd.keys() {
            for xi in bwd.keys() {
                let lhs = bwd[xi].get(eta).conj();
                let rhs = fwd[eta].get(xi);
                let d = (lhs - rhs).norm();
                if d > adj_worst {
                    adj_worst = d;
                }
                if d > tol && adj_witness.is_none() {
                    adj_witness = Some(format!(
                        "x = {}: ⟨π(x*){xi}, {eta}⟩ = {lhs}, ⟨{xi}, π(x){eta}⟩ = {rhs}",
                        g.name()
                    ));
                }
            }
        }
    }
    checks.push(
        Check::from_witness("gns/adjoint_consistency", adj_witness)
            .with_detail(format!("max defect {adj_worst:.3e}")),
    );

    // π(D) isometric
    let det = ops.get(Gen::Det);
    let mut iso_witness = None;
    let mut iso_worst: f64 = 0.0;
    for s in window.interior() {
        let col: Vec<_> = det.column(&s).collect();
        let d = match col.as_slice() {
            [(_, w)] => (w.norm() - 1.0).abs(),
            _ => f64::INFINITY,
        };
        iso_worst = iso_worst.max(d);
        if d > tol && iso_witness.is_none() {
            iso_witness = Some(format!("π(D){s} has {} entries", col.len()));
        }
    }
    for s in &sites {
        let v = StateVector::basis(*s);
        let back = ops.get(Gen::DetInv).apply(&det.apply(&v)?)?;
        let mut diff = back.clone();
        diff.axpy(real(-1.0), &v);
        iso_worst = iso_worst.max(diff.norm());
        if diff.norm() > tol && iso_witness.is_none() {
            iso_witness = Some(format!("π(D)†π(D){s} ≠ {s}"));
        }
    }
    checks.push(
        Check::from_witness("gns/det_isometric", iso_witness)
            .with_detail(format!("max defect {iso_worst:.3e}")),
    );

    // sector preservation
    let mut sector_witness = None;
    for (g, dead) in [
        (Gen::A, Sector::Q),
        (Gen::D, Sector::Q),
        (Gen::B, Sector::C),
        (Gen::C, Sector::C),
    ] {
        if let Some(s) = window
            .sites()
            .into_iter()
            .find(|s| s.sector == dead && ops.get(g).column(s).next().is_some())
        {
            sector_witness = Some(format!("π({}){s} ≠ 0", g.name()));
        }
    }
    checks.push(Check::from_witness(
        "gns/sector_preservation",
        sector_witness,
    ));

    // continuity in θ
    let shifted = build_generator_operators(window, theta + 1e-6, mutate_b);
    let mut cont = 0.0f64;
    for g in [Gen::A, Gen::B, Gen::C, Gen::D] {
        for s in window.sites() {
            for (t, w) in ops.get(g).column(&s) {
                cont = cont.max((w - shifted.get(g).entry(t, &s)).norm());
            }
        }
    }
    checks.push(
        Check::from_witness(
            "gns/theta_continuity",
            (cont > 1e-4).then(|| format!("entry jump {cont:.3e}")),
        )
        .with_detail(format!("max entry change {cont:.3e} for Δθ = 1e-6")),
    );
    Ok(checks)
}

/// `gnsExpectation` against the evaluated Haar state on the degree window.
pub fn verify_state_consistency(ops: &GnsOperators, max_deg: u32, tol: f64) -> Result<Check> {
    let basis = enumerate_basis(AlgebraId::ADTq, Window::degree(max_deg));
    let mut worst: f64 = 0.0;
    let mut witness = None;
    for m in &basis {
        let e = Element::monomial(AlgebraId::ADTq, *m);
        let g = gns_expectation(&e, ops)?;
        let h = eval_scalar(&haar(&e)?, ops.theta);
        let d = (g - h).norm();
        worst = worst.max(d);
        if d > tol && witness.is_none() {
            witness = Some(format!("{e}: GNS {g}, Haar {h}"));
        }
    }
    Ok(
        Check::from_witness("gns/state_matches_haar", witness).with_detail(format!(
            "{} monomials, max deviation {worst:.3e}",
            basis.len()
        )),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ops() -> GnsOperators {
        build_generator_operators(LatticeWindow::new(6).unwrap(), 0.31, false)
    }

    #[test]
    fn generator_examples() {
        let ops = ops();
        let alg = AlgebraId::ADTq;
        let e00 = StateVector::basis(Site::new(Sector::C, 0, 0));
        let v = apply_element(&Element::gen(alg, Gen::A), &e00, &ops).unwrap();
        assert_eq!(v, StateVector::basis(Site::new(Sector::C, 0, 1)));
        let q = Site::new(Sector::Q, 1, 2);
        let v = apply_element(&Element::gen(alg, Gen::Det), &StateVector::basis(q), &ops).unwrap();
        assert!((v.get(&Site::new(Sector::Q, 2, 2)) - qp(0.31, 4)).norm() < 1e-12);
        let z = Element::gen(alg, Gen::Z);
        assert!((gns_expectation(&z, &ops).unwrap() - real(0.5)).norm() < 1e-12);
    }

    #[test]
    fn relations_hold_and_mutation_breaks_them() {
        let w = LatticeWindow::new(5).unwrap();
        assert!(verify_gns_relations(w, 0.31, false, DEFAULT_TOLERANCE)
            .unwrap()
            .iter()
            .all(Check::passed));
        assert!(!verify_gns_relations(w, 0.31, true, DEFAULT_TOLERANCE).unwrap()[0].passed());
    }

    #[test]
    fn norms() {
        let ops = ops();
        let alg = AlgebraId::ADTq;
        for e in [
            Element::gen(alg, Gen::A),
            Element::gen(alg, Gen::Z),
            &Element::gen(alg, Gen::A) + &Element::gen(alg, Gen::B),
        ] {
            let n = estimate_operator_norm(&e, &ops, 1e-8, 10_000).unwrap();
            assert!((n - 1.0).abs() < 1e-6, "{e}: {n}");
        }
    }

    #[test]
    fn vacuum_state_is_haar() {
        let ops = build_generator_operators(LatticeWindow::new(6).unwrap(), 0.173, false);
        let c = verify_state_consistency(&ops, 4, DEFAULT_TOLERANCE).unwrap();
        assert!(c.passed(), "{c:?}");
        let checks = verify_gns_relations(
            LatticeWindow::new(6).unwrap(),
            0.173,
            false,
            DEFAULT_TOLERANCE,
        )
        .unwrap();
        assert!(checks.iter().all(Check::passed), "{checks:?}");
    }
}
