use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{coproduct_monomial, counit_monomial};
use crate::algebra::{AlgebraId, Element, Monomial};
use crate::error::{Error, Result};

type Rule = Arc<dyn Fn(&Monomial) -> Result<Element> + Send + Sync>;

/// Linear map given by images of basis monomials, optionally completed by a
/// rule for monomials outside the explicit table.
#[derive(Clone)]
pub struct LinearMapTable {
    name: String,
    source: AlgebraId,
    target: AlgebraId,
    images: BTreeMap<Monomial, Element>,
    rule: Option<Rule>,
}

impl LinearMapTable {
    pub fn new(name: impl Into<String>, source: AlgebraId, target: AlgebraId) -> Self {
        LinearMapTable {
            name: name.into(),
            source,
            target,
            images: BTreeMap::new(),
            rule: None,
        }
    }

    pub fn with_image(mut self, m: Monomial, e: Element) -> Self {
        assert_eq!(e.algebra(), self.target, "image lies in the wrong algebra");
        self.images.insert(m, e);
        self
    }

    pub fn with_rule<F>(mut self, f: F) -> Self
    where
        F: Fn(&Monomial) -> Result<Element> + Send + Sync + 'static,
    {
        self.rule = Some(Arc::new(f));
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> AlgebraId {
        self.source
    }

    pub fn target(&self) -> AlgebraId {
        self.target
    }

    /// `unit ∘ counit`, the unit of the convolution algebra.
    pub fn unit_counit(source: AlgebraId, target: AlgebraId) -> Self {
        LinearMapTable::new("unit∘counit", source, target)
            .with_rule(move |m| Ok(Element::scalar(target, counit_monomial(source, m)?)))
    }

    pub fn apply_monomial(&self, m: &Monomial) -> Result<Element> {
        if let Some(e) = self.images.get(m) {
            return Ok(e.clone());
        }
        match &self.rule {
            Some(f) => f(m),
            None => Err(Error::WindowExceeded(m.display_in(self.source))),
        }
    }

    pub fn apply(&self, e: &Element) -> Result<Element> {
        if e.algebra() != self.source {
            return Err(Error::CrossAlgebraMix {
                left: self.source,
                right: e.algebra(),
            });
        }
        let mut out = Element::zero(self.target);
        for (m, c) in e.terms() {
            out.add_scaled(&self.apply_monomial(m)?, c);
        }
        Ok(out)
    }

    /// Materializes the images on `window`, dropping the rule so that
    /// queries outside the window fail.
    pub fn tabulate(&self, window: &[Monomial]) -> Result<LinearMapTable> {
        let mut t = LinearMapTable::new(self.name.clone(), self.source, self.target);
        for m in window {
            t.images.insert(*m, self.apply_monomial(m)?);
        }
        Ok(t)
    }
}

impl fmt::Debug for LinearMapTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinearMapTable({}: {} → {}, {} tabulated)",
            self.name,
            self.source,
            self.target,
            self.images.len()
        )
    }
}

/// `(f * g)(h) = f(h₍₁₎) g(h₍₂₎)`.
pub fn convolve(f: &LinearMapTable, g: &LinearMapTable) -> Result<LinearMapTable> {
    if f.source != g.source {
        return Err(Error::CrossAlgebraMix {
            left: f.source,
            right: g.source,
        });
    }
    if f.target != g.target {
        return Err(Error::CrossAlgebraMix {
            left: f.target,
            right: g.target,
        });
    }
    let (f, g) = (f.clone(), g.clone());
    let name = format!("{} * {}", f.name, g.name);
    let (source, target) = (f.source, f.target);
    Ok(
        LinearMapTable::new(name, source, target).with_rule(move |m| {
            let delta = coproduct_monomial(source, m)?;
            let mut out = Element::zero(target);
            for (ms, c) in delta.terms() {
                let prod = &f.apply_monomial(&ms[0])? * &g.apply_monomial(&ms[1])?;
                out.add_scaled(&prod, c);
            }
            Ok(out)
        }),
    )
}

/// Convolution inverse on a source whose basis is group-like: the algebra
/// inverse of each image, supplied by `invert`.
pub fn pointwise_inverse<F>(f: &LinearMapTable, invert: F) -> Result<LinearMapTable>
where
    F: Fn(&Monomial, &Element) -> Result<Element> + Send + Sync + 'static,
{
    let source = f.source;
    if !matches!(source, AlgebraId::AT2) {
        return Err(Error::NonGrouplikeInput(format!("basis of {source}")));
    }
    let inner = f.clone();
    Ok(
        LinearMapTable::new(format!("{}⁻¹", f.name), source, f.target).with_rule(move |m| {
            let img = inner.apply_monomial(m)?;
            invert(m, &img)
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{enumerate_basis, Window};

    #[test]
    fn unit_is_idempotent() {
        let e = LinearMapTable::unit_counit(AlgebraId::ADTq, AlgebraId::ADTq);
        let ee = convolve(&e, &e).unwrap();
        for m in enumerate_basis(AlgebraId::ADTq, Window::degree(3)) {
            assert_eq!(
                ee.apply_monomial(&m).unwrap(),
                e.apply_monomial(&m).unwrap()
            );
        }
    }

    #[test]
    fn out_of_window_errors() {
        let e = LinearMapTable::unit_counit(AlgebraId::AT2, AlgebraId::AT2);
        let t = e.tabulate(&[Monomial::Torus(0, 0)]).unwrap();
        assert!(matches!(
            t.apply_monomial(&Monomial::Torus(1, 0)),
            Err(Error::WindowExceeded(_))
        ));
    }
}
