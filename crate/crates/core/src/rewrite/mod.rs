//! Degree-truncated noncommutative completion and normal forms.
//!
//! Words are compared by length, then lexicographically by letter rank
//! (`F`s, then `Kb_i, K_i` pairs, then `J`, then `E`s), so irreducible words
//! tend to look like an `F`-block, then a torus block, then an `E`-block.

mod cache;
mod complete;
mod oracle;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use parking_lot::RwLock;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Element, Letter, Presentation, Word};
use crate::coeff::Coeff;

pub use cache::{cache_info, cache_load, cache_path, cache_store, CacheError, CacheKey, CACHE_VERSION};
pub use oracle::dimension_oracle;

/// Identifier of the monomial order, recorded in cache files.
pub const ORDER_ID: &str = "deglex:F<Kb1<K1<..<Kbn<Kn<J<E";

/// Which algebra the rules present.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// The algebra itself.
    Base,
    /// The quotient by `J - 1`.
    QuotientJ1,
    /// Relations padded with a central letter `h` to equal length.
    Homogenized,
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::Base => "base",
            Variant::QuotientJ1 => "quotient-j1",
            Variant::Homogenized => "homogenized",
        }
    }

    pub fn measure(&self) -> Measure {
        match self {
            Variant::Homogenized => Measure::Length,
            _ => Measure::Weight,
        }
    }
}

/// How the truncation bound is measured on words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Measure {
    /// Number of `E`/`F` letters. Torus letters are free.
    Weight,
    /// Word length.
    Length,
}

impl Measure {
    pub fn of(&self, w: &[Letter]) -> usize {
        match self {
            Measure::Weight => w.iter().filter(|l| l.is_ef()).count(),
            Measure::Length => w.len(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error("relation {0} is zero")]
    ZeroRelation(usize),
    #[error("word {word} has degree {degree}, beyond the confluent bound {bound}")]
    DegreeOverflow {
        word: String,
        degree: usize,
        bound: usize,
    },
    #[error("bound {bound} is below the largest relation degree {needed}")]
    BoundTooSmall { bound: usize, needed: usize },
    #[error("new rule {lhs} would raise the degree of its right side")]
    NonMonotone { lhs: String },
    #[error("completion produced a left side of length {len}, above the cap {cap}")]
    Diverged { len: usize, cap: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Element,
}

/// An oriented and (after [`RewriteSystem::complete`]) truncated-confluent rule set.
pub struct RewriteSystem {
    presentation: Arc<Presentation>,
    variant: Variant,
    bound: usize,
    confluent_up_to: usize,
    rules: Vec<RewriteRule>,
    index: HashMap<Word, usize>,
    lens: Vec<usize>,
    memo: RwLock<HashMap<Word, Element>>,
}

const MEMO_LIMIT: usize = 1 << 21;

impl std::fmt::Debug for RewriteSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RewriteSystem")
            .field("instance", &self.presentation.label())
            .field("variant", &self.variant)
            .field("bound", &self.bound)
            .field("rules", &self.rules.len())
            .finish()
    }
}

/// Splits `x` into `lhs -> rhs` with `lhs` the leading word, coefficient 1.
pub(crate) fn orient_element(x: &Element) -> Option<RewriteRule> {
    let (lhs, c) = x.leading()?;
    let inv = c.inv().expect("nonzero leading coefficient");
    let mut rhs = Element::zero();
    for (w, a) in x.terms() {
        if w != lhs {
            rhs.add_term(w.clone(), -(a * &inv));
        }
    }
    Some(RewriteRule {
        lhs: lhs.clone(),
        rhs,
    })
}

/// Pads every word of `x` with `h` on the left up to length `len`.
fn homogenize(x: &Element, len: usize) -> Element {
    x.map_words(|w| {
        let mut v: Vec<Letter> = vec![Letter::H; len - w.len()];
        v.extend_from_slice(w);
        v.into()
    })
}

/// Relations presenting the requested variant.
pub fn relations_for(p: &Presentation, variant: Variant) -> Vec<Element> {
    let mut rels: Vec<Element> = p.elements().cloned().collect();
    match variant {
        Variant::Base => {}
        Variant::QuotientJ1 => rels.push(Element::letter(Letter::J).sub(&Element::one())),
        Variant::Homogenized => {
            rels = rels.iter().map(|r| homogenize(r, r.max_len())).collect();
            for l in Letter::alphabet(p.rank()) {
                rels.push(
                    Element::letters(&[l, Letter::H]).sub(&Element::letters(&[Letter::H, l])),
                );
            }
        }
    }
    rels
}

impl RewriteSystem {
    fn from_rules(
        presentation: Arc<Presentation>,
        variant: Variant,
        bound: usize,
        confluent_up_to: usize,
        mut rules: Vec<RewriteRule>,
    ) -> Self {
        rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
        let mut index = HashMap::new();
        for (k, r) in rules.iter().enumerate() {
            index.entry(r.lhs.clone()).or_insert(k);
        }
        let mut lens: Vec<usize> = rules.iter().map(|r| r.lhs.len()).collect();
        lens.sort_unstable();
        lens.dedup();
        RewriteSystem {
            presentation,
            variant,
            bound,
            confluent_up_to,
            rules,
            index,
            lens,
            memo: RwLock::new(HashMap::new()),
        }
    }

    /// Each relation becomes `lhs -> rhs` with `lhs` its largest word. No completion.
    pub fn orient(p: Arc<Presentation>, variant: Variant) -> Result<Self, RewriteError> {
        let rels = relations_for(&p, variant);
        let mut rules = Vec::with_capacity(rels.len());
        for (k, r) in rels.iter().enumerate() {
            rules.push(orient_element(r).ok_or(RewriteError::ZeroRelation(k))?);
        }
        let needed = rules
            .iter()
            .map(|r| variant.measure().of(&r.lhs))
            .max()
            .unwrap_or(0);
        Ok(Self::from_rules(p, variant, needed, 0, rules))
    }

    /// Resolves every overlap up to `bound`, adding rules as needed.
    pub fn complete(&self, bound: usize) -> Result<Self, RewriteError> {
        let measure = self.variant.measure();
        let needed = self
            .rules
            .iter()
            .map(|r| measure.of(&r.lhs))
            .max()
            .unwrap_or(0);
        if bound < needed {
            return Err(RewriteError::BoundTooSmall { bound, needed });
        }
        let seeds: Vec<Element> = self
            .rules
            .iter()
            .map(|r| Element::word(r.lhs.clone()).sub(&r.rhs))
            .collect();
        let rules = complete::run(seeds, measure, bound)?;
        Ok(Self::from_rules(
            self.presentation.clone(),
            self.variant,
            bound,
            bound,
            rules,
        ))
    }

    /// Orients and completes the given variant of a presentation.
    pub fn build(p: &Presentation, variant: Variant, bound: usize) -> Result<Self, RewriteError> {
        Self::orient(Arc::new(p.clone()), variant)?.complete(bound)
    }

    /// The same algebra with `J = 1`, completed to the same bound.
    pub fn quotient_j1(&self) -> Result<Self, RewriteError> {
        let mut seeds: Vec<Element> = self
            .rules
            .iter()
            .map(|r| Element::word(r.lhs.clone()).sub(&r.rhs))
            .collect();
        seeds.push(Element::letter(Letter::J).sub(&Element::one()));
        let rules = complete::run(seeds, Measure::Weight, self.bound)?;
        Ok(Self::from_rules(
            self.presentation.clone(),
            Variant::QuotientJ1,
            self.bound,
            self.bound,
            rules,
        ))
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn presentation_arc(&self) -> Arc<Presentation> {
        self.presentation.clone()
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn measure(&self) -> Measure {
        self.variant.measure()
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn confluent_up_to(&self) -> usize {
        self.confluent_up_to
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn rank(&self) -> usize {
        self.presentation.rank()
    }

    /// Letters of the underlying alphabet (with `h` for homogenized systems).
    pub fn alphabet(&self) -> Vec<Letter> {
        let mut a = Letter::alphabet(self.rank());
        if self.variant == Variant::Homogenized {
            a.insert(0, Letter::H);
        }
        a
    }

    /// Leftmost factor of `w` that is a rule's left side.
    pub fn find_redex(&self, w: &[Letter]) -> Option<(usize, usize)> {
        for start in 0..w.len() {
            for &l in &self.lens {
                if start + l > w.len() {
                    break;
                }
                if let Some(&r) = self.index.get(&w[start..start + l]) {
                    return Some((start, r));
                }
            }
        }
        None
    }

    /// Whether some left side is a suffix of `w` (used when growing words letter by letter).
    pub fn has_suffix_redex(&self, w: &[Letter]) -> bool {
        self.lens
            .iter()
            .any(|&l| l <= w.len() && self.index.contains_key(&w[w.len() - l..]))
    }

    pub fn is_irreducible(&self, w: &[Letter]) -> bool {
        self.find_redex(w).is_none()
    }

    fn check_degree(&self, w: &[Letter]) -> Result<(), RewriteError> {
        let degree = self.measure().of(w);
        if degree > self.confluent_up_to {
            return Err(RewriteError::DegreeOverflow {
                word: Word::from(w).to_string(),
                degree,
                bound: self.confluent_up_to,
            });
        }
        Ok(())
    }

    /// Reduces a pool of terms to normal form, largest word first.
    fn reduce_pool(&self, mut pool: BTreeMap<Word, Coeff>, out: &mut Element, use_memo: bool) {
        while let Some((w, c)) = pool.pop_last() {
            if use_memo {
                if let Some(nf) = self.memo.read().get(&w) {
                    out.add_scaled(nf, &c);
                    continue;
                }
            }
            match self.find_redex(&w) {
                None => out.add_term(w, c),
                Some((pos, r)) => {
                    let rule = &self.rules[r];
                    let (pre, post) = (&w[..pos], &w[pos + rule.lhs.len()..]);
                    for (v, a) in rule.rhs.terms() {
                        let mut nw: Vec<Letter> = Vec::with_capacity(pre.len() + v.len() + post.len());
                        nw.extend_from_slice(pre);
                        nw.extend_from_slice(v);
                        nw.extend_from_slice(post);
                        add_to_pool(&mut pool, nw.into(), &c * a);
                    }
                }
            }
        }
    }

    /// Normal form of a single word.
    pub fn normalize_word(&self, w: &[Letter]) -> Result<Element, RewriteError> {
        self.check_degree(w)?;
        Ok(self.normalize_word_unchecked(w))
    }

    fn normalize_word_unchecked(&self, w: &[Letter]) -> Element {
        if let Some(nf) = self.memo.read().get(w) {
            return nf.clone();
        }
        let mut out = Element::zero();
        if self.is_irreducible(w) {
            out.add_term(Word::from(w), Coeff::one());
        } else {
            // grow from the normal form of the prefix
            let prefix = self.normalize_word_unchecked(&w[..w.len() - 1]);
            let last = w[w.len() - 1];
            let mut pool = BTreeMap::new();
            for (u, c) in prefix.terms() {
                let mut v = u.clone();
                v.0.push(last);
                add_to_pool(&mut pool, v, c.clone());
            }
            self.reduce_pool(pool, &mut out, true);
        }
        let mut memo = self.memo.write();
        if memo.len() > MEMO_LIMIT {
            memo.clear();
        }
        memo.insert(Word::from(w), out.clone());
        out
    }

    /// Normal form of an element. Fails if a word exceeds the confluent bound.
    pub fn normalize(&self, x: &Element) -> Result<Element, RewriteError> {
        let mut out = Element::zero();
        for (w, _) in x.terms() {
            self.check_degree(w)?;
        }
        for (w, c) in x.terms() {
            out.add_scaled(&self.normalize_word_unchecked(w), c);
        }
        Ok(out)
    }

    /// Normal form of `x * y`.
    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element, RewriteError> {
        let mut out = Element::zero();
        for (u, a) in x.terms() {
            for (v, b) in y.terms() {
                let w = u.concat(v);
                self.check_degree(&w)?;
                out.add_scaled(&self.normalize_word_unchecked(&w), &(a * b));
            }
        }
        Ok(out)
    }

    /// Normal form of a product of several elements, left to right.
    pub fn mul_all<'a, I: IntoIterator<Item = &'a Element>>(
        &self,
        factors: I,
    ) -> Result<Element, RewriteError> {
        let mut acc = Element::one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// Counts of irreducible words by (multidegree, length), up to `maxlen` letters.
    pub fn graded_counts(&self, maxlen: usize) -> BTreeMap<(Vec<i32>, usize), u64> {
        let mut counts = BTreeMap::new();
        self.for_each_irreducible(maxlen, &self.alphabet(), |w| {
            *counts
                .entry((w.multidegree(self.rank()), w.len()))
                .or_insert(0u64) += 1;
        });
        counts
    }

    /// Visits every irreducible word over `letters` of length at most `maxlen`.
    pub fn for_each_irreducible(&self, maxlen: usize, letters: &[Letter], mut f: impl FnMut(&Word)) {
        let mut stack: Vec<Word> = vec![Word::empty()];
        while let Some(w) = stack.pop() {
            f(&w);
            if w.len() == maxlen {
                continue;
            }
            for &l in letters.iter().rev() {
                let v = w.concat(&[l]);
                if !self.has_suffix_redex(&v) {
                    stack.push(v);
                }
            }
        }
    }
}

fn add_to_pool(pool: &mut BTreeMap<Word, Coeff>, w: Word, c: Coeff) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match pool.entry(w) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

#[cfg(test)]
mod tests;
