//! Cleft extension data of `ADTq` over `A(Z₂)` with fibre `A(T²)`: the
//! exact sequence, cleaving and cocleaving maps, cocycle, coaction, the
//! bicross product and the coaction diagram on the noncommutative torus.

pub mod bicross;
mod cleaving;
mod cocleaving;
mod cocycle;
mod diagram;
mod exact;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

pub use bicross::{bicross_iso_phi, bicross_window, phi, phi_inverse, verify_bicross_iso};
pub use cleaving::{
    cleaving_j, cleaving_j_inverse, colinearity_witness, corner_inverse, corners,
    j_inverse_monomial, j_inverse_table, j_monomial, j_table, verify_cleaving, CleavingConvention,
};
pub use cocleaving::{
    coaction_lambda, cocleaving_l, ell_from_j, ell_table, lambda_formula, lambda_from_l,
    verify_coaction, verify_cocleaving, EllMethod, LambdaMethod,
};
pub use cocycle::{
    cocycle_sides, cocycle_sigma, compare_sigma_methods, not_in_base_image_count,
    sigma_convolution, sigma_q, sigma_q_exponent, sigma_table, verify_cocycle_condition,
    SigmaMethod,
};
pub use diagram::{rho_classical, verify_coaction_diagram, Rho};
pub use exact::{
    i_inverse, i_map, i_table, prj, prj_table, prj_tensor, verify_exact_sequence, z2_element,
};

/// Consistency of the active cleaving convention with the cocycle table,
/// the cocleaving table and right colinearity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConventionSummary {
    pub active: CleavingConvention,
    pub label: String,
    pub sigma_consistent: bool,
    pub ell_consistent: bool,
    pub colinear: bool,
}

/// Computed on `|exponents| ≤ 2` and cached per convention.
pub fn convention_summary(conv: CleavingConvention) -> ConventionSummary {
    static CACHE: OnceLock<Mutex<HashMap<CleavingConvention, ConventionSummary>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(s) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&conv) {
        return s.clone();
    }
    let summary = ConventionSummary {
        active: conv,
        label: conv.to_string(),
        sigma_consistent: compare_sigma_methods(2, conv).passed(),
        ell_consistent: verify_cocleaving(2, 2, conv)
            .map(|cs| {
                cs.iter()
                    .find(|c| c.name == "cocleaving/table_equals_from_j")
                    .is_some_and(|c| c.passed())
            })
            .unwrap_or(false),
        colinear: colinearity_witness(2, conv).is_none(),
    };
    cache
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert(conv, summary.clone());
    summary
}
