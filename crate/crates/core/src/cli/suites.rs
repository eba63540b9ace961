use std::time::Instant;

use rayon::prelude::*;

use super::report::{Report, ReportParams};
use crate::algebra::{check_confluence, AlgebraId, Mutation, RewriteSystem, Window};
use crate::algebra::{fdquot_lookup, Element, Gen};
use crate::error::{Error, Result};
use crate::galois::{
    compare_sigma_methods, convention_summary, not_in_base_image_count, verify_bicross_iso,
    verify_cleaving, verify_coaction, verify_coaction_diagram, verify_cocleaving,
    verify_cocycle_condition, verify_exact_sequence, CleavingConvention, Rho,
};
use crate::gns::{
    build_generator_operators, estimate_operator_norm, verify_gns_relations,
    verify_state_consistency, LatticeWindow,
};
use crate::hopf::{verify_characters, verify_haar, verify_hopf_axioms, verify_hopf_ideal};
use crate::report::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Suite {
    Hopf,
    Cocycle,
    Cleaving,
    Bicross,
    Exactseq,
    Diagram,
    Haar,
    Characters,
    Gns,
    Fdquot,
    All,
}

impl Suite {
    pub const EACH: [Suite; 10] = [
        Suite::Hopf,
        Suite::Cocycle,
        Suite::Cleaving,
        Suite::Bicross,
        Suite::Exactseq,
        Suite::Diagram,
        Suite::Haar,
        Suite::Characters,
        Suite::Gns,
        Suite::Fdquot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::Cocycle => "cocycle",
            Suite::Cleaving => "cleaving",
            Suite::Bicross => "bicross",
            Suite::Exactseq => "exactseq",
            Suite::Diagram => "diagram",
            Suite::Haar => "haar",
            Suite::Characters => "characters",
            Suite::Gns => "gns",
            Suite::Fdquot => "fdquot",
            Suite::All => "all",
        }
    }

    fn numeric(self) -> bool {
        matches!(self, Suite::Haar | Suite::Gns | Suite::All)
    }
}

/// A deliberately planted defect, used to show that the suites notice it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mutate {
    /// `bc = q·cb` in place of `bc = q²·cb`.
    Relation,
    /// One branch of the cocycle table off by a power of `q`.
    Sigma,
    /// One weight of `π(b)` off by a power of `q`.
    Pi,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteParams {
    /// Restricts the `hopf` suite to one algebra.
    pub algebra: Option<AlgebraId>,
    pub max_deg: u32,
    pub range: i64,
    pub window: i64,
    pub theta: f64,
    pub q_root: Option<u32>,
    pub convention: CleavingConvention,
    pub mutate: Option<Mutate>,
    pub seed: u64,
    pub random_pairs: usize,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            algebra: None,
            max_deg: 4,
            range: 3,
            window: 6,
            theta: 0.31,
            q_root: None,
            convention: CleavingConvention::Corrected,
            mutate: None,
            seed: 2024,
            random_pairs: 200,
        }
    }
}

pub const CONFLUENCE_DEGREE: usize = 6;
pub const GNS_TOLERANCE: f64 = 1e-10;
/// Dimension of the quotient for `n = 2` at `q = i`.
pub const FDQUOT_DIM_N2_Q_I: usize = 8;

const HOPF_ALGEBRAS: [AlgebraId; 5] = [
    AlgebraId::AUq2,
    AlgebraId::ADTq,
    AlgebraId::AT2,
    AlgebraId::AZ2,
    AlgebraId::Bicross,
];

impl SuiteParams {
    fn validate(&self) -> Result<()> {
        if self.max_deg < 2 {
            return Err(Error::InvalidParams(format!(
                "--max-deg must be at least 2, got {}",
                self.max_deg
            )));
        }
        if self.range < 1 {
            return Err(Error::InvalidParams(format!(
                "--range must be positive, got {}",
                self.range
            )));
        }
        if self.window < 3 {
            return Err(Error::InvalidParams(format!(
                "--window must be at least 3, got {}",
                self.window
            )));
        }
        if !self.theta.is_finite() {
            return Err(Error::InvalidParams("--q-theta must be finite".into()));
        }
        Ok(())
    }

    fn quantum(&self) -> AlgebraId {
        if self.mutate == Some(Mutate::Relation) {
            AlgebraId::Mutant(Mutation::BcLinear)
        } else {
            AlgebraId::ADTq
        }
    }

    fn report_params(&self, suite: Suite) -> ReportParams {
        ReportParams {
            algebra: self
                .algebra
                .map_or_else(|| "default".to_string(), |a| a.to_string()),
            max_deg: self.max_deg,
            range: self.range,
            window: self.window,
            theta: if suite.numeric() {
                serde_json::json!(self.theta)
            } else {
                serde_json::json!("symbolic")
            },
            q_root: self.q_root,
            convention: self.convention.to_string(),
            mutate: self.mutate.map(|m| format!("{m:?}").to_lowercase()),
        }
    }
}

fn hopf_checks(p: &SuiteParams) -> Result<Vec<Check>> {
    let mut algs: Vec<AlgebraId> = p
        .algebra
        .map_or_else(|| HOPF_ALGEBRAS.to_vec(), |a| vec![a]);
    for a in &mut algs {
        if *a == AlgebraId::ADTq {
            *a = p.quantum();
        }
    }
    let mut checks = Vec::new();
    for alg in &algs {
        if !alg.is_hopf() {
            return Err(Error::InvalidParams(format!("{alg} is not a Hopf algebra")));
        }
        checks.extend(verify_hopf_axioms(*alg, Window::degree(p.max_deg))?);
        if let Some(system) = RewriteSystem::for_algebra(*alg) {
            let unresolved = check_confluence(system, CONFLUENCE_DEGREE);
            let w = unresolved.first().map(|c| format!("{c:?}"));
            checks.push(
                Check::from_witness(format!("{alg}/confluence"), w).with_detail(format!(
                    "{} unresolved critical pairs up to degree {CONFLUENCE_DEGREE}",
                    unresolved.len()
                )),
            );
        }
    }
    Ok(checks)
}

fn cocycle_checks(p: &SuiteParams) -> Result<Vec<Check>> {
    let mut checks = vec![compare_sigma_methods(p.range, p.convention)];
    checks.extend(verify_cocycle_condition(
        p.range,
        p.mutate == Some(Mutate::Sigma),
    ));
    let printed = not_in_base_image_count(p.range, CleavingConvention::Printed);
    checks.push(
        Check::from_witness(
            "cocycle/printed_convention_leaves_base",
            (printed == 0)
                .then(|| "the printed cleaving convention gave no NotInBaseImage".to_string()),
        )
        .with_detail(format!(
            "{printed} pairs give NotInBaseImage under the printed convention"
        )),
    );
    Ok(checks)
}

fn cleaving_checks(p: &SuiteParams) -> Result<Vec<Check>> {
    let mut checks = verify_cleaving(p.range, p.convention)?;
    checks.extend(verify_cocleaving(p.range, p.range as u32, p.convention)?);
    checks.extend(verify_coaction(p.range, p.convention)?);
    Ok(checks)
}

fn diagram_checks(p: &SuiteParams) -> Result<Vec<Check>> {
    let mut checks = verify_coaction_diagram(p.range + 1, p.quantum())?;
    let defect = Rho::new(AlgebraId::Mutant(Mutation::BcLinear)).relation_defect();
    checks.push(
        Check::from_witness(
            "diagram/mutation_detected",
            defect
                .is_zero()
                .then(|| "bc = q·cb leaves ρ(x)ρ(y) = qρ(y)ρ(x) intact".to_string()),
        )
        .with_detail(format!("defect under bc = q·cb: {defect}")),
    );
    Ok(checks)
}

fn gns_checks(p: &SuiteParams) -> Result<Vec<Check>> {
    let window = LatticeWindow::new(p.window)?;
    let mutate = p.mutate == Some(Mutate::Pi);
    let mut checks = verify_gns_relations(window, p.theta, mutate, GNS_TOLERANCE)?;
    let ops = build_generator_operators(window, p.theta, mutate);
    checks.push(verify_state_consistency(&ops, p.max_deg, GNS_TOLERANCE)?);
    let mut witness = None;
    let mut norms = Vec::new();
    for g in [Gen::A, Gen::B, Gen::C, Gen::D, Gen::Det, Gen::Z] {
        let n = estimate_operator_norm(&Element::gen(AlgebraId::ADTq, g), &ops, 1e-12, 10_000)?;
        if (n - 1.0).abs() > 1e-6 && witness.is_none() {
            witness = Some(format!("‖π({g})‖ ≈ {n}"));
        }
        norms.push(format!("{g}: {n:.9}"));
    }
    checks.push(Check::from_witness("gns/generator_norms", witness).with_detail(norms.join(", ")));
    Ok(checks)
}

fn fdquot_checks() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (n, order, expect) in [(1u32, 2u32, 2usize), (2, 4, FDQUOT_DIM_N2_Q_I)] {
        checks.extend(verify_hopf_ideal(n, order)?);
        let dim = fdquot_lookup(n, order)
            .expect("built by the ideal check")
            .dimension();
        checks.push(
            Check::from_witness(
                format!("fdquot/n={n},q^{order}=1/dimension"),
                (dim != expect).then(|| format!("dimension {dim}, expected {expect}")),
            )
            .with_detail(format!("dimension {dim}")),
        );
    }
    Ok(checks)
}

fn suite_checks(suite: Suite, p: &SuiteParams) -> Result<Vec<Check>> {
    match suite {
        Suite::Hopf => hopf_checks(p),
        Suite::Cocycle => cocycle_checks(p),
        Suite::Cleaving => cleaving_checks(p),
        Suite::Bicross => verify_bicross_iso(
            p.range,
            p.range as u32,
            p.random_pairs,
            p.seed,
            p.convention,
        ),
        Suite::Exactseq => verify_exact_sequence(Window::degree(p.max_deg), p.range),
        Suite::Diagram => diagram_checks(p),
        Suite::Haar => verify_haar(p.max_deg + 1, p.max_deg - 1, p.theta),
        Suite::Characters => verify_characters(p.range - 1, p.range as u32),
        Suite::Gns => gns_checks(p),
        Suite::Fdquot => fdquot_checks(),
        Suite::All => {
            let parts: Vec<Vec<Check>> = Suite::EACH
                .par_iter()
                .map(|s| suite_checks(*s, p))
                .collect::<Result<_>>()?;
            Ok(parts.into_iter().flatten().collect())
        }
    }
}

/// `runSuite`.
pub fn run_suite(suite: Suite, params: &SuiteParams) -> Result<Report> {
    params.validate()?;
    let start = Instant::now();
    let checks = suite_checks(suite, params)?;
    let summary = convention_summary(params.convention);
    Ok(Report::new(
        suite.name(),
        params.report_params(suite),
        summary,
        checks,
        start.elapsed().as_millis(),
    ))
}
