//! Coproduct, counit, weak antipode and the checks built on them.
//!
//! Tensor factors are normalized independently after every operation, so two
//! tensors are equal exactly when their term maps are equal.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::algebra::{ef_coefficient, serre, Element, Letter, Word};
use crate::coeff::Coeff;
use crate::report::Report;
use crate::rewrite::{RewriteError, RewriteSystem};

/// An element of a k-fold tensor power, all factors in normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElement {
    terms: BTreeMap<Vec<Word>, Coeff>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    /// `1 ⊗ ... ⊗ 1` with `k` factors.
    pub fn unit(k: usize) -> Self {
        let mut t = TensorElement::zero();
        t.add_term(vec![Word::empty(); k], Coeff::one());
        t
    }

    pub fn add_term(&mut self, ws: Vec<Word>, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(ws) {
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

    pub fn add_scaled(&mut self, other: &TensorElement, c: &Coeff) {
        for (ws, a) in other.terms() {
            self.add_term(ws.clone(), a * c);
        }
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut r = self.clone();
        r.add_scaled(other, &-Coeff::one());
        r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Coeff)> + '_ {
        self.terms.iter()
    }

    /// `x_1 ⊗ ... ⊗ x_k`, expanded bilinearly. The factors should be normalized.
    pub fn product_of(factors: &[Element]) -> TensorElement {
        let mut acc: Vec<(Vec<Word>, Coeff)> = vec![(Vec::new(), Coeff::one())];
        for f in factors {
            let mut next = Vec::with_capacity(acc.len() * f.len());
            for (ws, c) in &acc {
                for (w, a) in f.terms() {
                    let mut v = ws.clone();
                    v.push(w.clone());
                    next.push((v, c * a));
                }
            }
            acc = next;
        }
        let mut t = TensorElement::zero();
        for (ws, c) in acc {
            t.add_term(ws, c);
        }
        t
    }

    /// Componentwise product, each factor normalized.
    pub fn mul(&self, sys: &RewriteSystem, other: &TensorElement) -> Result<TensorElement, RewriteError> {
        let mut out = TensorElement::zero();
        for (us, a) in self.terms() {
            for (vs, b) in other.terms() {
                let factors = us
                    .iter()
                    .zip(vs)
                    .map(|(u, v)| sys.normalize_word(&u.concat(v)))
                    .collect::<Result<Vec<_>, _>>()?;
                out.add_scaled(&TensorElement::product_of(&factors), &(a * b));
            }
        }
        Ok(out)
    }

    /// Replaces factor `k` of every term by the tensor `f(word)`.
    pub fn expand_factor(
        &self,
        k: usize,
        mut f: impl FnMut(&Word) -> Result<TensorElement, RewriteError>,
    ) -> Result<TensorElement, RewriteError> {
        let mut out = TensorElement::zero();
        for (ws, c) in self.terms() {
            let img = f(&ws[k])?;
            for (vs, a) in img.terms() {
                let mut nw: Vec<Word> = ws[..k].to_vec();
                nw.extend(vs.iter().cloned());
                nw.extend(ws[k + 1..].iter().cloned());
                out.add_term(nw, c * a);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TensorElement {
    /// Terms like `1 ⊗ E1 + E1 ⊗ K1`, largest first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (ws, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                write!(f, "{}*", abs.factor_string())?;
            }
            let parts: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
            if parts.len() > 1 && !abs.is_one() {
                write!(f, "({})", parts.join(" ⊗ "))?;
            } else {
                write!(f, "{}", parts.join(" ⊗ "))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Hom,
    AntiHom,
}

/// A linear map given by letter images, extended multiplicatively
/// (or anti-multiplicatively). Letters without an image are fixed.
#[derive(Clone, Debug)]
pub struct EndoMap {
    pub name: String,
    pub kind: MapKind,
    images: BTreeMap<Letter, Element>,
    unit: Element,
}

impl EndoMap {
    pub fn new(name: &str, kind: MapKind, images: BTreeMap<Letter, Element>) -> Self {
        EndoMap {
            name: name.to_string(),
            kind,
            images,
            unit: Element::one(),
        }
    }

    pub fn identity() -> Self {
        Self::new("id", MapKind::Hom, BTreeMap::new())
    }

    /// `T`: `E ↦ -E Kb`, `F ↦ -K F`, `K ↔ Kb`, `J ↦ J`, reversing products.
    pub fn antipode(n: usize) -> Self {
        let mut m = BTreeMap::new();
        for i in 1..=n as u8 {
            m.insert(Letter::E(i), Element::letters(&[Letter::E(i), Letter::Kb(i)]).neg());
            m.insert(Letter::F(i), Element::letters(&[Letter::K(i), Letter::F(i)]).neg());
            m.insert(Letter::K(i), Element::letter(Letter::Kb(i)));
            m.insert(Letter::Kb(i), Element::letter(Letter::K(i)));
        }
        Self::new("T", MapKind::AntiHom, m)
    }

    /// `ε` as a map into scalars (multiples of the empty word).
    pub fn counit(n: usize) -> Self {
        let mut m = BTreeMap::new();
        for l in Letter::alphabet(n) {
            let v = if l.is_ef() { Element::zero() } else { Element::one() };
            m.insert(l, v);
        }
        Self::new("ε", MapKind::Hom, m)
    }

    pub fn image(&self, l: Letter) -> Element {
        self.images
            .get(&l)
            .cloned()
            .unwrap_or_else(|| Element::letter(l))
    }

    pub fn set_image(&mut self, l: Letter, x: Element) {
        self.images.insert(l, x);
    }

    pub fn images(&self) -> &BTreeMap<Letter, Element> {
        &self.images
    }

    pub fn apply_word(&self, sys: &RewriteSystem, w: &[Letter]) -> Result<Element, RewriteError> {
        if w.is_empty() {
            return sys.normalize(&self.unit);
        }
        let imgs: Vec<Element> = match self.kind {
            MapKind::Hom => w.iter().map(|&l| self.image(l)).collect(),
            MapKind::AntiHom => w.iter().rev().map(|&l| self.image(l)).collect(),
        };
        let mut acc = sys.normalize(&imgs[0])?;
        for x in &imgs[1..] {
            if acc.is_zero() {
                break;
            }
            acc = sys.mul(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn apply(&self, sys: &RewriteSystem, x: &Element) -> Result<Element, RewriteError> {
        let mut out = Element::zero();
        for (w, c) in x.terms() {
            out.add_scaled(&self.apply_word(sys, w)?, c);
        }
        Ok(out)
    }

    /// `self ∘ other` for homomorphisms (images of `other` pushed through `self`).
    pub fn compose(&self, sys: &RewriteSystem, other: &EndoMap) -> Result<EndoMap, RewriteError> {
        let mut m = BTreeMap::new();
        for l in sys.alphabet() {
            m.insert(l, self.apply(sys, &other.image(l))?);
        }
        Ok(EndoMap::new(
            &format!("{}∘{}", self.name, other.name),
            MapKind::Hom,
            m,
        ))
    }

    /// Whether both maps send every letter of `sys` to the same normal form.
    pub fn agrees_on_generators(&self, sys: &RewriteSystem, other: &EndoMap) -> Result<Option<Letter>, RewriteError> {
        for l in sys.alphabet() {
            let a = self.apply_word(sys, &[l])?;
            let b = other.apply_word(sys, &[l])?;
            if a != b {
                return Ok(Some(l));
            }
        }
        Ok(None)
    }
}

/// `Δ` of one generator, before normalization.
fn delta_letter(sys: &RewriteSystem, l: Letter) -> TensorElement {
    let d = &sys.presentation().dseq;
    let e = |x: Letter| Element::letter(x);
    let pair = |a: Element, b: Element| TensorElement::product_of(&[a, b]);
    match l {
        Letter::E(i) => {
            let left = if d.kappa[i as usize - 1] {
                Element::one()
            } else {
                e(Letter::J)
            };
            let mut t = pair(left, e(l));
            t.add_scaled(&pair(e(l), e(Letter::K(i))), &Coeff::one());
            t
        }
        Letter::F(i) => {
            let right = if d.kappabar[i as usize - 1] {
                Element::one()
            } else {
                e(Letter::J)
            };
            let mut t = pair(e(l), right);
            t.add_scaled(&pair(e(Letter::Kb(i)), e(l)), &Coeff::one());
            t
        }
        Letter::H => panic!("coproduct is undefined on the homogenizing letter"),
        _ => pair(e(l), e(l)),
    }
}

fn delta_word(sys: &RewriteSystem, w: &[Letter]) -> Result<TensorElement, RewriteError> {
    let mut acc = TensorElement::unit(2);
    for &l in w {
        acc = acc.mul(sys, &delta_letter(sys, l))?;
    }
    Ok(acc)
}

/// `Δ(x)`, extended multiplicatively over words.
pub fn delta(sys: &RewriteSystem, x: &Element) -> Result<TensorElement, RewriteError> {
    let mut out = TensorElement::zero();
    for (w, c) in x.terms() {
        out.add_scaled(&delta_word(sys, w)?, c);
    }
    Ok(out)
}

/// Iterated coproduct into `k` factors, `(id ⊗ ... ⊗ Δ) ... Δ`.
pub fn delta_k(sys: &RewriteSystem, x: &Element, k: usize) -> Result<TensorElement, RewriteError> {
    assert!(k >= 1, "at least one tensor factor");
    let mut t = TensorElement::product_of(&[sys.normalize(x)?]);
    for j in 1..k {
        t = t.expand_factor(j - 1, |w| delta_word(sys, w))?;
    }
    Ok(t)
}

fn counit_word(w: &[Letter]) -> bool {
    !w.iter().any(|l| l.is_ef())
}

/// `ε(x)`: `E`, `F` go to 0, every other letter to 1.
pub fn counit(x: &Element) -> Coeff {
    let mut c = Coeff::zero();
    for (w, a) in x.terms() {
        if counit_word(w) {
            c = &c + a;
        }
    }
    c
}

pub fn antipode_t(sys: &RewriteSystem, x: &Element) -> Result<Element, RewriteError> {
    EndoMap::antipode(sys.rank()).apply(sys, x)
}

/// `μ ∘ (f_1 ⊗ ... ⊗ f_k)` applied to a tensor.
pub fn contract(sys: &RewriteSystem, t: &TensorElement, maps: &[&EndoMap]) -> Result<Element, RewriteError> {
    let mut out = Element::zero();
    for (ws, c) in t.terms() {
        let mut acc = Element::one();
        for (f, w) in maps.iter().zip(ws) {
            let img = f.apply_word(sys, w)?;
            acc = sys.mul(&acc, &img)?;
            if acc.is_zero() {
                break;
            }
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

/// `(f_1 ∗ ... ∗ f_k)(x) = μ (f_1 ⊗ ... ⊗ f_k) Δ^{(k)}(x)`.
pub fn convolution(sys: &RewriteSystem, maps: &[&EndoMap], x: &Element) -> Result<Element, RewriteError> {
    let t = delta_k(sys, x, maps.len())?;
    contract(sys, &t, maps)
}

/// `(id ∗ T ∗ id)(x) = x` and `(T ∗ id ∗ T)(x) = T(x)`.
pub fn check_weak_antipode(sys: &RewriteSystem, x: &Element) -> Result<(bool, bool), RewriteError> {
    let id = EndoMap::identity();
    let t = EndoMap::antipode(sys.rank());
    let x_nf = sys.normalize(x)?;
    let a = convolution(sys, &[&id, &t, &id], x)? == x_nf;
    let b = convolution(sys, &[&t, &id, &t], x)? == t.apply(sys, &x_nf)?;
    Ok((a, b))
}

/// Every word over `letters` of length at most `maxlen`, shortest first.
pub fn all_words(letters: &[Letter], maxlen: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..maxlen {
        let mut next = Vec::with_capacity(layer.len() * letters.len());
        for w in &layer {
            for &l in letters {
                next.push(w.concat(&[l]));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn instance(sys: &RewriteSystem) -> String {
    format!("{} {}", sys.presentation().label(), sys.variant().name())
}

fn first_failure<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> Result<Option<String>, RewriteError> + Sync,
) -> Result<Option<String>, RewriteError> {
    let found: Result<Vec<Option<String>>, RewriteError> = items.par_iter().map(&f).collect();
    Ok(found?.into_iter().flatten().next())
}

/// Both weak antipode identities on all words up to `maxlen`.
pub fn weak_antipode_report(sys: &RewriteSystem, maxlen: usize) -> Result<Report, RewriteError> {
    let words = all_words(&sys.alphabet(), maxlen);
    let id = EndoMap::identity();
    let t = EndoMap::antipode(sys.rank());
    let inst = instance(sys);
    let mut r = Report::new();
    let bad = first_failure(&words, |w| {
        let x = Element::word(w.clone());
        let lhs = convolution(sys, &[&id, &t, &id], &x)?;
        let rhs = sys.normalize(&x)?;
        Ok((lhs != rhs).then(|| format!("(id*T*id)({w}) = {lhs}, expected {rhs}")))
    })?;
    r.push("weak-antipode id*T*id = id", &inst, bad);
    let bad = first_failure(&words, |w| {
        let x = Element::word(w.clone());
        let lhs = convolution(sys, &[&t, &id, &t], &x)?;
        let rhs = t.apply(sys, &x)?;
        Ok((lhs != rhs).then(|| format!("(T*id*T)({w}) = {lhs}, expected {rhs}")))
    })?;
    r.push("weak-antipode T*id*T = T", &inst, bad);
    Ok(r)
}

/// `J ≠ 1` and `(id ∗ T)(J) = J ≠ ε(J)·1`, so no antipode exists for this `Δ`.
pub fn non_hopf_witness(sys: &RewriteSystem) -> Result<Report, RewriteError> {
    let j = Element::letter(Letter::J);
    let one = Element::one();
    let jn = sys.normalize(&j)?;
    let mut r = Report::new();
    let inst = instance(sys);
    r.push(
        "non-hopf J != 1",
        &inst,
        (jn == one).then(|| "J normalizes to 1".to_string()),
    );
    let id_t = convolution(sys, &[&EndoMap::identity(), &EndoMap::antipode(sys.rank())], &j)?;
    let unit_eps = Element::scalar(counit(&j));
    let bad = if id_t != jn {
        Some(format!("(id*T)(J) = {id_t}, expected J"))
    } else if id_t == unit_eps {
        Some("(id*T)(J) equals ε(J)1".to_string())
    } else {
        None
    };
    r.push("non-hopf (id*T)(J) = J != ε(J)1", &inst, bad);
    let jj = sys.normalize(&j.mul(&one.sub(&j)))?;
    r.push(
        "non-hopf J(1-J) = 0",
        &inst,
        (!jj.is_zero()).then(|| format!("J(1-J) = {jj}")),
    );
    Ok(r)
}

/// `(x J, x (1 - J))`, both normalized.
pub fn split(sys: &RewriteSystem, x: &Element) -> Result<(Element, Element), RewriteError> {
    let j = Element::letter(Letter::J);
    let a = sys.mul(x, &j)?;
    let b = sys.mul(x, &Element::one().sub(&j))?;
    Ok((a, b))
}

/// Images under `ρ` (`e_i ↦ E_i J`, `f_i ↦ F_i J`, `k_i^{±1} ↦ K_i, Kb_i`,
/// unit `↦ J`) of the defining relations of `U_q(g)`, each labelled.
pub fn rho_relation_images(sys: &RewriteSystem) -> Vec<(String, Element)> {
    use Letter::*;
    let c = &sys.presentation().cartan;
    let n = c.n;
    let j = Element::letter(J);
    let l = |x: Letter| Element::letter(x);
    let e = |i: usize| Element::letters(&[E(i as u8 + 1), J]);
    let f = |i: usize| Element::letters(&[F(i as u8 + 1), J]);
    let k = |i: usize| l(K(i as u8 + 1));
    let kb = |i: usize| l(Kb(i as u8 + 1));
    let mut out: Vec<(String, Element)> = Vec::new();
    for i in 0..n {
        out.push((format!("k{0} k{0}^-1 = 1", i + 1), k(i).mul(&kb(i)).sub(&j)));
        out.push((format!("k{0}^-1 k{0} = 1", i + 1), kb(i).mul(&k(i)).sub(&j)));
        for x in [e(i), f(i), k(i), kb(i)] {
            out.push((format!("unit * {x}"), j.mul(&x).sub(&x)));
            out.push((format!("{x} * unit"), x.mul(&j).sub(&x)));
        }
    }
    for i in 0..n {
        for jj in 0..n {
            out.push((
                format!("k{} k{} = k{1} k{0}", i + 1, jj + 1),
                k(i).mul(&k(jj)).sub(&k(jj).mul(&k(i))),
            ));
            let qa = Coeff::q_pow(c.sym(jj, i));
            // k_i e_j k_i^{-1} = q^{(α_i, α_j)} e_j
            out.push((
                format!("k{0} e{1} k{0}^-1", i + 1, jj + 1),
                k(i).mul(&e(jj)).mul(&kb(i)).sub(&e(jj).scale(&qa)),
            ));
            let qa_inv = Coeff::q_pow(-c.sym(jj, i));
            out.push((
                format!("k{0} f{1} k{0}^-1", i + 1, jj + 1),
                k(i).mul(&f(jj)).mul(&kb(i)).sub(&f(jj).scale(&qa_inv)),
            ));
            let mut ef = e(i).mul(&f(jj)).sub(&f(jj).mul(&e(i)));
            if i == jj {
                ef = ef.sub(&k(i).sub(&kb(i)).scale(&ef_coefficient(c.di(i))));
            }
            out.push((format!("[e{}, f{}]", i + 1, jj + 1), ef));
            if i != jj {
                let sub = |x: Element, g: &dyn Fn(usize) -> Element| {
                    let mut r = Element::zero();
                    for (w, a) in x.terms() {
                        let mut p = Element::one();
                        for &lt in w.iter() {
                            let idx = lt.index().expect("indexed letter") - 1;
                            p = p.mul(&g(idx));
                        }
                        r.add_scaled(&p, a);
                    }
                    r
                };
                out.push((
                    format!("serre e{} e{}", i + 1, jj + 1),
                    sub(serre(c, i, jj, E), &e),
                ));
                out.push((
                    format!("serre f{} f{}", i + 1, jj + 1),
                    sub(serre(c, i, jj, F), &f),
                ));
            }
        }
    }
    out
}

/// Every `ρ`-image of a `U_q(g)` relation normalizes to 0.
pub fn rho_check(sys: &RewriteSystem) -> Result<Report, RewriteError> {
    let imgs = rho_relation_images(sys);
    let bad = first_failure(&imgs, |(name, x)| {
        let nf = sys.normalize(x)?;
        Ok((!nf.is_zero()).then(|| format!("{name}: image normalizes to {nf}")))
    })?;
    let mut r = Report::new();
    r.push("rho relations", &instance(sys), bad);
    Ok(r)
}

/// `x ≠ 0` and `Δ(x) = x ⊗ x`.
pub fn is_grouplike(sys: &RewriteSystem, x: &Element) -> Result<bool, RewriteError> {
    let x = sys.normalize(x)?;
    if x.is_zero() {
        return Ok(false);
    }
    let d = delta(sys, &x)?;
    Ok(d == TensorElement::product_of(&[x.clone(), x]))
}

/// Irreducible torus words (over `K`, `Kb`, `J`) up to `maxlen`, plus 1, that are group-like.
pub fn enumerate_grouplikes(sys: &RewriteSystem, maxlen: usize) -> Result<Vec<Word>, RewriteError> {
    let letters: Vec<Letter> = sys
        .alphabet()
        .into_iter()
        .filter(|l| matches!(l, Letter::K(_) | Letter::Kb(_) | Letter::J))
        .collect();
    let mut cands = Vec::new();
    sys.for_each_irreducible(maxlen, &letters, |w| cands.push(w.clone()));
    let mut out = Vec::new();
    for w in cands {
        if is_grouplike(sys, &Element::word(w.clone()))? {
            out.push(w);
        }
    }
    out.sort();
    Ok(out)
}

/// Normal forms of `P^s` with `Σ|s_i| ≤ maxlen`, plus the unit.
pub fn expected_grouplikes(sys: &RewriteSystem, maxlen: usize) -> Result<BTreeSet<Word>, RewriteError> {
    let n = sys.rank();
    let mut out = BTreeSet::new();
    out.insert(Word::empty());
    let m = maxlen as i32;
    let mut s = vec![-m; n];
    loop {
        if s.iter().map(|x| x.unsigned_abs()).sum::<u32>() as usize <= maxlen {
            let nf = sys.normalize(&crate::algebra::p_multi(&s))?;
            let (w, c) = nf.leading().expect("P^s is nonzero");
            assert!(nf.len() == 1 && c.is_one(), "P^s normalizes to a single word");
            out.insert(w.clone());
        }
        let mut k = 0;
        loop {
            if k == n {
                return Ok(out);
            }
            s[k] += 1;
            if s[k] <= m {
                break;
            }
            s[k] = -m;
            k += 1;
        }
    }
}

/// Group-likes up to `maxlen` are exactly `{P^s} ∪ {1}`, each with
/// `Δ(x) = x ⊗ x` and `x y x = x`, `y x y = y` for `y = P^{-s}`.
pub fn grouplike_report(sys: &RewriteSystem, maxlen: usize) -> Result<Report, RewriteError> {
    let inst = instance(sys);
    let found: BTreeSet<Word> = enumerate_grouplikes(sys, maxlen)?.into_iter().collect();
    let expected = expected_grouplikes(sys, maxlen)?;
    let mut r = Report::new();
    let diff = found
        .symmetric_difference(&expected)
        .next()
        .map(|w| format!("{w} is in exactly one of found / expected"));
    r.push("grouplikes = {P^s} ∪ {1}", &inst, diff);
    let mut reg = Vec::new();
    let n = sys.rank();
    let m = maxlen as i32;
    for s in small_vectors(n, m) {
        if s.iter().map(|x| x.unsigned_abs()).sum::<u32>() as usize > maxlen {
            continue;
        }
        let neg: Vec<i32> = s.iter().map(|x| -x).collect();
        let x = crate::algebra::p_multi(&s);
        let y = crate::algebra::p_multi(&neg);
        let xyx = sys.mul_all([&x, &y, &x])?;
        let yxy = sys.mul_all([&y, &x, &y])?;
        if xyx != sys.normalize(&x)? || yxy != sys.normalize(&y)? {
            reg.push(format!("regularity fails for s = {s:?}"));
        }
        if !is_grouplike(sys, &x)? {
            reg.push(format!("P^{s:?} is not group-like"));
        }
    }
    r.record("grouplikes regular", &inst, reg);
    Ok(r)
}

/// All integer vectors of length `n` with entries in `-m..=m`.
pub fn small_vectors(n: usize, m: i32) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-m..=m).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Coassociativity and counit identities on all words up to `maxlen`;
/// `Δ` and `ε` annihilate every defining relation.
pub fn coalgebra_axiom_checks(sys: &RewriteSystem, maxlen: usize) -> Result<Report, RewriteError> {
    let inst = instance(sys);
    let words = all_words(&sys.alphabet(), maxlen);
    let id = EndoMap::identity();
    let eps = EndoMap::counit(sys.rank());
    let mut r = Report::new();

    let bad = first_failure(&words, |w| {
        let d = delta_word(sys, w)?;
        let left = d.expand_factor(0, |u| delta_word(sys, u))?;
        let right = d.expand_factor(1, |u| delta_word(sys, u))?;
        Ok((left != right).then(|| format!("(Δ⊗id)Δ({w}) = {left} but (id⊗Δ)Δ({w}) = {right}")))
    })?;
    r.push("coassociativity", &inst, bad);

    let bad = first_failure(&words, |w| {
        let x = Element::word(w.clone());
        let nf = sys.normalize(&x)?;
        let a = convolution(sys, &[&eps, &id], &x)?;
        let b = convolution(sys, &[&id, &eps], &x)?;
        Ok(if a != nf {
            Some(format!("(ε⊗id)Δ({w}) = {a}"))
        } else if b != nf {
            Some(format!("(id⊗ε)Δ({w}) = {b}"))
        } else {
            None
        })
    })?;
    r.push("counit", &inst, bad);

    let rels: Vec<Element> = sys.presentation().elements().cloned().collect();
    let bad = first_failure(&rels, |x| {
        let d = delta(sys, x)?;
        Ok((!d.is_zero()).then(|| format!("Δ({x}) = {d}")))
    })?;
    r.push("Δ(relation) = 0", &inst, bad);
    let bad = rels
        .iter()
        .find(|x| !counit(x).is_zero())
        .map(|x| format!("ε({x}) ≠ 0"));
    r.push("ε(relation) = 0", &inst, bad);
    Ok(r)
}
