use std::collections::BTreeMap;

use super::{antipode, coproduct, counit, star};
use crate::algebra::{build_finite_quotient, fdquot_lookup, Element, Monomial};
use crate::error::{Error, Result};
use crate::report::Check;
use crate::scalars::{CyclotomicMode, QScalar};

/// Checks that the ideal of the finite quotient `(n, q^order = 1)` is a Hopf
/// *-ideal: for each generator `g`, `Δg ∈ I⊗A + A⊗I`, `ε(g) = 0`,
/// `S(g) ∈ I` and `g* ∈ I`. Builds the quotient if needed.
pub fn verify_hopf_ideal(n: u32, order: u32) -> Result<Vec<Check>> {
    let mode = CyclotomicMode::new(order)?;
    build_finite_quotient(n, Some(mode))?;
    let fq = fdquot_lookup(n, order)
        .ok_or_else(|| Error::InvalidParams(format!("quotient ({n}, {order}) missing")))?;
    let tag = format!("fdquot/n={n},q^{order}=1");
    let mut coproduct_witness = None;
    let mut rest_witness = None;
    for (label, g) in fq.ideal_generators() {
        // (π⊗π)Δg vanishes exactly when Δg ∈ I⊗A + A⊗I
        let mut image: BTreeMap<(Monomial, Monomial), QScalar> = BTreeMap::new();
        for (ms, c) in coproduct(&g)?.terms() {
            let (l, r) = (
                fq.project(&Element::monomial(g.algebra(), ms[0])),
                fq.project(&Element::monomial(g.algebra(), ms[1])),
            );
            for (ml, cl) in l.terms() {
                for (mr, cr) in r.terms() {
                    *image.entry((*ml, *mr)).or_default() += &(&(c * cl) * cr);
                }
            }
        }
        if let Some(((ml, mr), c)) = image
            .iter()
            .find(|(_, c)| !mode.reduce_primitive(c).is_zero())
        {
            coproduct_witness.get_or_insert_with(|| {
                format!(
                    "Δ({label}) has component {}·{}⊗{} modulo I⊗A + A⊗I",
                    mode.reduce_primitive(c),
                    ml.display_in(fq.algebra()),
                    mr.display_in(fq.algebra())
                )
            });
        }
        let eps = mode.reduce_primitive(&counit(&g)?);
        let s = fq.project(&antipode(&g)?);
        let st = fq.project(&star(&g)?);
        if rest_witness.is_none() {
            rest_witness = if !eps.is_zero() {
                Some(format!("ε({label}) = {eps}"))
            } else if !s.is_zero() {
                Some(format!("S({label}) ≡ {s} mod I"))
            } else if !st.is_zero() {
                Some(format!("({label})* ≡ {st} mod I"))
            } else {
                None
            };
        }
    }
    Ok(vec![
        Check::from_witness(format!("{tag}/coproduct_in_ideal"), coproduct_witness)
            .with_detail(format!("dimension {}", fq.dimension())),
        Check::from_witness(format!("{tag}/counit_antipode_star"), rest_witness),
    ])
}
