//! Word rewriting over the generator alphabet and the ambiguity check of the
//! Diamond Lemma.
//!
//! Every rule strictly decreases words in the graded lexicographic order
//! with `D⁻¹ < D < z < a < d < b < c`, so reduction terminates. A system
//! whose overlap ambiguities all resolve is confluent, and its irreducible
//! words form a basis.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use rand::Rng;

use super::{AlgebraId, Element, Gen, Monomial, Mutation, QMono, Word};
use crate::error::{Error, Result};
use crate::scalars::QScalar;

/// Linear combination of words, keyed by `(length, word)` so that the
/// largest word in the graded order is last.
pub type Combo = BTreeMap<(usize, Vec<Gen>), QScalar>;

#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Vec<Gen>,
    pub rhs: Vec<(Vec<Gen>, QScalar)>,
}

impl Rule {
    pub fn new(lhs: &[Gen], rhs: &[(&[Gen], QScalar)]) -> Self {
        Rule {
            lhs: lhs.to_vec(),
            rhs: rhs.iter().map(|(w, c)| (w.to_vec(), c.clone())).collect(),
        }
    }

    /// Every right-hand word is smaller than the pattern.
    pub fn is_decreasing(&self) -> bool {
        self.rhs.iter().all(|(w, _)| deglex_less(w, &self.lhs))
    }
}

pub fn deglex_less(a: &[Gen], b: &[Gen]) -> bool {
    (a.len(), a) < (b.len(), b)
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    algebra: AlgebraId,
    alphabet: Vec<Gen>,
    rules: Vec<Rule>,
    by_first: HashMap<Gen, Vec<usize>>,
}

/// An overlap or inclusion ambiguity together with its two reductions.
#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub word: Vec<Gen>,
    pub rules: (usize, usize),
    pub left: Combo,
    pub right: Combo,
}

impl CriticalPair {
    pub fn resolved(&self) -> bool {
        self.left == self.right
    }
}

fn q(k: i64) -> QScalar {
    QScalar::q_pow(k)
}

impl RewriteSystem {
    pub fn new(algebra: AlgebraId, alphabet: Vec<Gen>, rules: Vec<Rule>) -> Self {
        let mut by_first: HashMap<Gen, Vec<usize>> = HashMap::new();
        for (i, r) in rules.iter().enumerate() {
            by_first.entry(r.lhs[0]).or_default().push(i);
        }
        RewriteSystem {
            algebra,
            alphabet,
            rules,
            by_first,
        }
    }

    /// Free algebra on `alphabet`: no rules, no ambiguities.
    pub fn free(alphabet: Vec<Gen>) -> Self {
        RewriteSystem::new(AlgebraId::AUq2, alphabet, Vec::new())
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn alphabet(&self) -> &[Gen] {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Rules shared by `AUq2` and `ADTq`: `D D⁻¹`, the `D`-commutations and
    /// the two determinant relations.
    fn determinant_rules(bc: Rule) -> Vec<Rule> {
        use Gen::*;
        let one = QScalar::one;
        vec![
            Rule::new(&[Det, DetInv], &[(&[], one())]),
            Rule::new(&[DetInv, Det], &[(&[], one())]),
            Rule::new(&[Z, Det], &[(&[Det, Z], one())]),
            Rule::new(&[A, Det], &[(&[Det, A], one())]),
            Rule::new(&[D, Det], &[(&[Det, D], one())]),
            Rule::new(&[B, Det], &[(&[Det, B], q(2))]),
            Rule::new(&[C, Det], &[(&[Det, C], q(-2))]),
            Rule::new(&[Z, DetInv], &[(&[DetInv, Z], one())]),
            Rule::new(&[A, DetInv], &[(&[DetInv, A], one())]),
            Rule::new(&[D, DetInv], &[(&[DetInv, D], one())]),
            Rule::new(&[B, DetInv], &[(&[DetInv, B], q(-2))]),
            Rule::new(&[C, DetInv], &[(&[DetInv, C], q(2))]),
            Rule::new(&[A, D], &[(&[Det, Z], one())]),
            Rule::new(&[D, A], &[(&[Det, Z], one())]),
            bc,
            Rule::new(&[C, B], &[(&[Det, Z], q(-1)), (&[Det], -q(-1))]),
        ]
    }

    fn bc_rule() -> Rule {
        use Gen::*;
        Rule::new(&[B, C], &[(&[Det, Z], q(1)), (&[Det], -q(1))])
    }

    fn quantum_alphabet() -> Vec<Gen> {
        use Gen::*;
        vec![DetInv, Det, Z, A, D, B, C]
    }

    pub fn auq2() -> Self {
        use Gen::*;
        let one = QScalar::one;
        let mut rules = Self::determinant_rules(Self::bc_rule());
        rules.extend([
            Rule::new(&[A, Z], &[(&[Z, A], one())]),
            Rule::new(&[D, Z], &[(&[Z, D], one())]),
            Rule::new(&[B, Z], &[(&[Z, B], one())]),
            Rule::new(&[C, Z], &[(&[Z, C], one())]),
            Rule::new(&[B, A], &[(&[A, B], q(1))]),
            Rule::new(&[C, A], &[(&[A, C], q(-1))]),
            Rule::new(&[B, D], &[(&[D, B], q(1))]),
            Rule::new(&[C, D], &[(&[D, C], q(-1))]),
        ]);
        RewriteSystem::new(AlgebraId::AUq2, Self::quantum_alphabet(), rules)
    }

    fn adtq_with(bc: Rule, algebra: AlgebraId) -> Self {
        use Gen::*;
        let one = QScalar::one;
        let mut rules = Self::determinant_rules(bc);
        rules.extend([
            Rule::new(&[Z, Z], &[(&[Z], one())]),
            Rule::new(&[Z, A], &[(&[A], one())]),
            Rule::new(&[Z, D], &[(&[D], one())]),
            Rule::new(&[Z, B], &[]),
            Rule::new(&[Z, C], &[]),
            Rule::new(&[A, Z], &[(&[A], one())]),
            Rule::new(&[D, Z], &[(&[D], one())]),
            Rule::new(&[B, Z], &[]),
            Rule::new(&[C, Z], &[]),
        ]);
        for (x, y) in [
            (A, B),
            (B, A),
            (A, C),
            (C, A),
            (B, D),
            (D, B),
            (C, D),
            (D, C),
        ] {
            rules.push(Rule::new(&[x, y], &[]));
        }
        RewriteSystem::new(algebra, Self::quantum_alphabet(), rules)
    }

    pub fn adtq() -> Self {
        Self::adtq_with(Self::bc_rule(), AlgebraId::ADTq)
    }

    pub fn mutant(m: Mutation) -> Self {
        use Gen::*;
        match m {
            Mutation::BcLinear => Self::adtq_with(
                Rule::new(
                    &[B, C],
                    &[(&[Det, Z], QScalar::one()), (&[Det], -QScalar::one())],
                ),
                AlgebraId::Mutant(m),
            ),
        }
    }

    pub fn cached_auq2() -> &'static RewriteSystem {
        static S: OnceLock<RewriteSystem> = OnceLock::new();
        S.get_or_init(RewriteSystem::auq2)
    }

    pub fn cached_adtq() -> &'static RewriteSystem {
        static S: OnceLock<RewriteSystem> = OnceLock::new();
        S.get_or_init(RewriteSystem::adtq)
    }

    pub fn cached_mutant(m: Mutation) -> &'static RewriteSystem {
        static S: OnceLock<RewriteSystem> = OnceLock::new();
        match m {
            Mutation::BcLinear => S.get_or_init(|| RewriteSystem::mutant(Mutation::BcLinear)),
        }
    }

    pub fn for_algebra(alg: AlgebraId) -> Option<&'static RewriteSystem> {
        match alg {
            AlgebraId::AUq2 => Some(Self::cached_auq2()),
            AlgebraId::ADTq => Some(Self::cached_adtq()),
            AlgebraId::Mutant(m) => Some(Self::cached_mutant(m)),
            _ => None,
        }
    }

    fn redexes(&self, w: &[Gen], first_only: bool) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for pos in 0..w.len() {
            if let Some(cands) = self.by_first.get(&w[pos]) {
                for &ri in cands {
                    if w[pos..].starts_with(&self.rules[ri].lhs) {
                        out.push((pos, ri));
                        if first_only {
                            return out;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_irreducible(&self, w: &[Gen]) -> bool {
        self.redexes(w, true).is_empty()
    }

    /// Leftmost-first reduction to normal form.
    pub fn reduce(&self, input: Combo) -> Combo {
        self.reduce_inner(input, None::<&mut rand::rngs::ThreadRng>)
    }

    /// Reduction that picks a uniformly random redex at every step.
    pub fn reduce_randomized<R: Rng>(&self, input: Combo, rng: &mut R) -> Combo {
        self.reduce_inner(input, Some(rng))
    }

    fn reduce_inner<R: Rng>(&self, input: Combo, mut rng: Option<&mut R>) -> Combo {
        let mut pending = input;
        let mut done = Combo::new();
        while let Some(((len, w), c)) = pending.pop_last() {
            let redexes = self.redexes(&w, rng.is_none());
            let Some(&(pos, ri)) = (match rng.as_deref_mut() {
                Some(r) if !redexes.is_empty() => redexes.get(r.gen_range(0..redexes.len())),
                _ => redexes.first(),
            }) else {
                add_to(&mut done, (len, w), c);
                continue;
            };
            let rule = &self.rules[ri];
            for (rw, rc) in &rule.rhs {
                let mut nw = Vec::with_capacity(w.len() + rw.len());
                nw.extend_from_slice(&w[..pos]);
                nw.extend_from_slice(rw);
                nw.extend_from_slice(&w[pos + rule.lhs.len()..]);
                add_to(&mut pending, (nw.len(), nw), &c * rc);
            }
        }
        done
    }

    pub fn reduce_word(&self, w: &[Gen]) -> Combo {
        let mut c = Combo::new();
        c.insert((w.len(), w.to_vec()), QScalar::one());
        self.reduce(c)
    }

    pub fn combo_to_element(&self, combo: &Combo, alg: AlgebraId) -> Element {
        Element::from_terms(
            alg,
            combo.iter().map(|((_, w), c)| {
                let m = QMono::from_word(w)
                    .unwrap_or_else(|| panic!("irreducible word {w:?} is not of normal pattern"));
                (Monomial::Q(m), c.clone())
            }),
        )
    }

    pub fn reduce_word_to_element(&self, w: &[Gen], alg: AlgebraId) -> Element {
        self.combo_to_element(&self.reduce_word(w), alg)
    }

    /// All overlap and inclusion ambiguities whose word has length at most
    /// `bound`, each reduced both ways.
    pub fn critical_pairs(&self, bound: usize) -> Vec<CriticalPair> {
        let mut out = Vec::new();
        for (i, ri) in self.rules.iter().enumerate() {
            for (j, rj) in self.rules.iter().enumerate() {
                let (li, lj) = (ri.lhs.len(), rj.lhs.len());
                // overlaps: proper suffix of lhs_i equals proper prefix of lhs_j
                for ov in 1..li.min(lj) {
                    if ri.lhs[li - ov..] != rj.lhs[..ov] {
                        continue;
                    }
                    let mut word = ri.lhs.clone();
                    word.extend_from_slice(&rj.lhs[ov..]);
                    if word.len() > bound {
                        continue;
                    }
                    let left = apply_rule_at(ri, &word, 0);
                    let right = apply_rule_at(rj, &word, li - ov);
                    out.push(CriticalPair {
                        word,
                        rules: (i, j),
                        left: self.reduce(left),
                        right: self.reduce(right),
                    });
                }
                // inclusions: lhs_j strictly inside lhs_i
                if i != j && lj < li && li <= bound {
                    for p in 0..=(li - lj) {
                        if ri.lhs[p..p + lj] == rj.lhs[..] {
                            let word = ri.lhs.clone();
                            let left = apply_rule_at(ri, &word, 0);
                            let right = apply_rule_at(rj, &word, p);
                            out.push(CriticalPair {
                                word,
                                rules: (i, j),
                                left: self.reduce(left),
                                right: self.reduce(right),
                            });
                        }
                    }
                }
            }
        }
        out
    }
}

fn add_to(c: &mut Combo, key: (usize, Vec<Gen>), v: QScalar) {
    if v.is_zero() {
        return;
    }
    match c.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(v);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &v;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn apply_rule_at(rule: &Rule, word: &[Gen], pos: usize) -> Combo {
    let mut out = Combo::new();
    for (rw, rc) in &rule.rhs {
        let mut nw = word[..pos].to_vec();
        nw.extend_from_slice(rw);
        nw.extend_from_slice(&word[pos + rule.lhs.len()..]);
        add_to(&mut out, (nw.len(), nw), rc.clone());
    }
    out
}

/// Unresolved ambiguities up to `degree_bound` (empty for a confluent system).
pub fn check_confluence(system: &RewriteSystem, degree_bound: usize) -> Vec<CriticalPair> {
    system
        .critical_pairs(degree_bound)
        .into_iter()
        .filter(|p| !p.resolved())
        .collect()
}

/// Expands a formal word into letters, validating the alphabet.
pub(crate) fn expand_letters(word: &Word, alg: AlgebraId) -> Result<Vec<(Gen, i64)>> {
    let allowed = alg.generators();
    let mut out = Vec::new();
    for &(g, e) in &word.factors {
        if !allowed.contains(&g) {
            return Err(Error::UnknownGenerator {
                name: g.name().to_string(),
                algebra: alg,
            });
        }
        if e < 0 && !g.invertible() {
            return Err(Error::NegativePower(g.name().to_string()));
        }
        out.push((g, e));
    }
    Ok(out)
}

/// `normalize`: the unique normal form of a formal word.
///
/// Quantum algebras reduce through their rewrite system; the commutative and
/// torus algebras multiply generator images directly.
pub fn normalize(word: &Word, alg: AlgebraId) -> Result<Element> {
    let factors = expand_letters(word, alg)?;
    if let Some(system) = RewriteSystem::for_algebra(alg) {
        let mut letters = Vec::new();
        for (g, e) in factors {
            let (g, e) = match (g, e < 0) {
                (Gen::Det, true) => (Gen::DetInv, -e),
                (Gen::DetInv, true) => (Gen::Det, -e),
                _ => (g, e),
            };
            letters.extend(std::iter::repeat_n(g, e as usize));
        }
        return Ok(system
            .reduce_word_to_element(&letters, alg)
            .scale(&word.coeff));
    }
    if let AlgebraId::FdQuot { n, order } = alg {
        let lifted = normalize(word, AlgebraId::ADTq)?;
        let fq = super::fdquot::lookup(n, order).ok_or_else(|| {
            Error::InvalidParams(format!(
                "finite quotient FDQUOT({n}, {order}) has not been built"
            ))
        })?;
        return Ok(fq.project(&lifted));
    }
    let mut acc = Element::one(alg);
    for (g, e) in factors {
        acc = &acc * &generator_power(alg, g, e);
    }
    Ok(acc.scale(&word.coeff))
}

fn generator_power(alg: AlgebraId, g: Gen, e: i64) -> Element {
    match (alg, g) {
        (AlgebraId::AT2 | AlgebraId::AT2q, Gen::U | Gen::X) => {
            Element::monomial(alg, Monomial::Torus(e, 0))
        }
        (AlgebraId::AT2 | AlgebraId::AT2q, Gen::V | Gen::Y) => {
            Element::monomial(alg, Monomial::Torus(0, e))
        }
        (AlgebraId::Bicross, Gen::U | Gen::V) => {
            let step = if e >= 0 { 1 } else { -1 };
            let (k, l) = if g == Gen::U { (step, 0) } else { (0, step) };
            let base = Element::from_terms(
                alg,
                [
                    (Monomial::Cross(0, k, l), QScalar::one()),
                    (Monomial::Cross(1, k, l), QScalar::one()),
                ],
            );
            base.pow(e.unsigned_abs() as u32)
        }
        (AlgebraId::Bicross, Gen::D0 | Gen::D1) => {
            let s = u8::from(g == Gen::D1);
            let m = Element::monomial(alg, Monomial::Cross(s, 0, 0));
            if e == 0 {
                Element::one(alg)
            } else {
                m
            }
        }
        _ => Element::gen(alg, g).pow(e as u32),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn rules_decrease_the_order() {
        for sys in [
            RewriteSystem::auq2(),
            RewriteSystem::adtq(),
            RewriteSystem::mutant(Mutation::BcLinear),
        ] {
            for r in sys.rules() {
                assert!(r.is_decreasing(), "{r:?}");
            }
        }
    }

    #[test]
    fn quantum_systems_are_confluent() {
        assert!(check_confluence(&RewriteSystem::auq2(), 6).is_empty());
        assert!(check_confluence(&RewriteSystem::adtq(), 6).is_empty());
        assert!(check_confluence(&RewriteSystem::free(vec![Gen::X]), 6).is_empty());
    }

    #[test]
    fn mutant_is_not_confluent() {
        assert!(!check_confluence(&RewriteSystem::mutant(Mutation::BcLinear), 6).is_empty());
    }

    #[test]
    fn randomized_reduction_agrees() {
        let sys = RewriteSystem::adtq();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let w = [
            Gen::B,
            Gen::C,
            Gen::B,
            Gen::DetInv,
            Gen::C,
            Gen::A,
            Gen::D,
            Gen::Z,
        ];
        let mut c = Combo::new();
        c.insert((w.len(), w.to_vec()), QScalar::one());
        let fixed = sys.reduce(c.clone());
        for _ in 0..20 {
            assert_eq!(sys.reduce_randomized(c.clone(), &mut rng), fixed);
        }
    }
}
