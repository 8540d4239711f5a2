//! Words and elements of the free algebra, and the defining presentation of
//! the weak quantum algebra `w^d_q(g)`.

use std::borrow::Borrow;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;
use thiserror::Error;

use crate::cartan::CartanData;
use crate::coeff::{q_binomial, rat_int, Coeff, LaurentPoly, Rational};

/// Generator letters. `H` is an auxiliary central letter used only for
/// homogenized presentations.
///
/// The order is the alphabet ranking of the monomial order:
/// `H < F_1 < ... < F_n < Kb_1 < K_1 < Kb_2 < K_2 < ... < J < E_1 < ... < E_n`.
/// Pairing `Kb_i` with `K_i` keeps the torus part of the completion finite.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    H,
    F(u8),
    Kb(u8),
    K(u8),
    J,
    E(u8),
}

impl Letter {
    fn rank_key(&self) -> (u8, u8, u8) {
        match *self {
            Letter::H => (0, 0, 0),
            Letter::F(i) => (1, i, 0),
            Letter::Kb(i) => (2, i, 0),
            Letter::K(i) => (2, i, 1),
            Letter::J => (3, 0, 0),
            Letter::E(i) => (4, i, 0),
        }
    }

    /// Contribution to the root-lattice grading (0-based index, sign).
    pub fn degree(&self) -> Option<(usize, i32)> {
        match *self {
            Letter::E(i) => Some((i as usize - 1, 1)),
            Letter::F(i) => Some((i as usize - 1, -1)),
            _ => None,
        }
    }

    pub fn is_ef(&self) -> bool {
        matches!(self, Letter::E(_) | Letter::F(_))
    }

    pub fn index(&self) -> Option<usize> {
        match *self {
            Letter::E(i) | Letter::F(i) | Letter::K(i) | Letter::Kb(i) => Some(i as usize),
            _ => None,
        }
    }

    /// All generator letters for rank `n`, in rank order.
    pub fn alphabet(n: usize) -> Vec<Letter> {
        let n = n as u8;
        let mut v: Vec<Letter> = (1..=n).map(Letter::F).collect();
        for i in 1..=n {
            v.push(Letter::Kb(i));
            v.push(Letter::K(i));
        }
        v.push(Letter::J);
        v.extend((1..=n).map(Letter::E));
        v
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank_key().cmp(&other.rank_key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::H => write!(f, "h"),
            Letter::F(i) => write!(f, "F{i}"),
            Letter::Kb(i) => write!(f, "Kb{i}"),
            Letter::K(i) => write!(f, "K{i}"),
            Letter::J => write!(f, "J"),
            Letter::E(i) => write!(f, "E{i}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("bad letter '{0}'")]
pub struct LetterParseError(pub String);

impl FromStr for Letter {
    type Err = LetterParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LetterParseError(s.to_string());
        if s == "J" {
            return Ok(Letter::J);
        }
        if s == "h" {
            return Ok(Letter::H);
        }
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
        let (head, idx) = s.split_at(split);
        let idx: u8 = idx.parse().map_err(|_| bad())?;
        if idx == 0 {
            return Err(bad());
        }
        match head {
            "E" => Ok(Letter::E(idx)),
            "F" => Ok(Letter::F(idx)),
            "K" => Ok(Letter::K(idx)),
            "Kb" => Ok(Letter::Kb(idx)),
            _ => Err(bad()),
        }
    }
}

/// A word in the generators; the empty word is the unit.
///
/// Words are ordered by length, then lexicographically by letter rank.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Word(pub SmallVec<[Letter; 8]>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Borrow<[Letter]> for Word {
    fn borrow(&self) -> &[Letter] {
        &self.0
    }
}

impl std::ops::Deref for Word {
    type Target = [Letter];
    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<&[Letter]> for Word {
    fn from(s: &[Letter]) -> Self {
        Word(SmallVec::from_slice(s))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(SmallVec::from_vec(v))
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letter(l: Letter) -> Self {
        Word(SmallVec::from_slice(&[l]))
    }

    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(other);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        self.0.iter().rev().copied().collect()
    }

    /// Root-lattice degree: `E_i ↦ α_i`, `F_i ↦ -α_i`.
    pub fn multidegree(&self, n: usize) -> Vec<i32> {
        let mut v = vec![0; n];
        for l in self.0.iter() {
            if let Some((i, s)) = l.degree() {
                v[i] += s;
            }
        }
        v
    }

    /// Number of `E`/`F` letters.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|l| l.is_ef()).count()
    }

    /// Position of the first occurrence of `pat` as a factor.
    pub fn find(&self, pat: &[Letter]) -> Option<usize> {
        if pat.len() > self.len() {
            return None;
        }
        (0..=self.len() - pat.len()).find(|&p| &self.0[p..p + pat.len()] == pat)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A finite linear combination of words with coefficients in `Q(q)`.
#[derive(Clone, PartialEq, Eq, Default, Debug, Hash)]
pub struct Element {
    terms: BTreeMap<Word, Coeff>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, Coeff::one())
    }

    pub fn letter(l: Letter) -> Self {
        Self::word(Word::letter(l))
    }

    pub fn letters(ls: &[Letter]) -> Self {
        Self::word(Word::from(ls))
    }

    pub fn scalar(c: Coeff) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn term(w: Word, c: Coeff) -> Self {
        let mut e = Element::zero();
        e.add_term(w, c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Coeff)>>(it: I) -> Self {
        let mut e = Element::zero();
        for (w, c) in it {
            e.add_term(w, c);
        }
        e
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

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Coeff)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, Coeff> {
        self.terms
    }

    pub fn coeff(&self, w: &Word) -> Coeff {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Largest word and its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Coeff)> {
        self.terms.iter().next_back()
    }

    pub fn pop_leading(&mut self) -> Option<(Word, Coeff)> {
        self.terms.pop_last()
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn max_weight(&self) -> usize {
        self.terms.keys().map(|w| w.weight()).max().unwrap_or(0)
    }

    /// The coefficient of the empty word when the element is a pure scalar.
    pub fn as_scalar(&self) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(Coeff::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: Word, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
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

    pub fn add_scaled(&mut self, other: &Element, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        for (w, a) in other.terms() {
            self.add_term(w.clone(), a * c);
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut r = self.clone();
        for (w, c) in other.terms() {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut r = self.clone();
        for (w, c) in other.terms() {
            r.add_term(w.clone(), -c);
        }
        r
    }

    pub fn neg(&self) -> Element {
        Element {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    pub fn scale_rat(&self, c: &Rational) -> Element {
        self.scale(&Coeff::from(c.clone()))
    }

    /// Free (concatenation) product.
    pub fn mul(&self, other: &Element) -> Element {
        let mut r = Element::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                r.add_term(u.concat(v), a * b);
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> Element {
        (0..k).fold(Element::one(), |acc, _| acc.mul(self))
    }

    /// Applies `f` to every word, keeping coefficients.
    pub fn map_words(&self, mut f: impl FnMut(&Word) -> Word) -> Element {
        Element::from_terms(self.terms().map(|(w, c)| (f(w), c.clone())))
    }

    /// Whether all words share one multidegree.
    pub fn is_homogeneous(&self, n: usize) -> bool {
        let mut degs = self.terms.keys().map(|w| w.multidegree(n));
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }
}

impl From<Word> for Element {
    fn from(w: Word) -> Self {
        Element::word(w)
    }
}

impl fmt::Display for Element {
    /// Terms in decreasing monomial order, e.g. `F1*E1 + (q - q^-1)^-1*K1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{}", abs.factor_string())?;
            } else if abs.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{}*{w}", abs.factor_string())?;
            }
        }
        Ok(())
    }
}

/// The binary type sequence `(κ | κ̄)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeSequence {
    pub kappa: Vec<bool>,
    pub kappabar: Vec<bool>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DseqError {
    #[error("type sequence must look like `bits|bits`, got '{0}'")]
    Format(String),
    #[error("type sequence has length {got}, rank is {rank}")]
    Length { got: usize, rank: usize },
}

impl TypeSequence {
    pub fn parse(s: &str, rank: usize) -> Result<TypeSequence, DseqError> {
        let bad = || DseqError::Format(s.to_string());
        let (l, r) = s.trim().split_once('|').ok_or_else(bad)?;
        let bits = |t: &str| -> Result<Vec<bool>, DseqError> {
            t.trim()
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(bad()),
                })
                .collect()
        };
        let (kappa, kappabar) = (bits(l)?, bits(r)?);
        for v in [&kappa, &kappabar] {
            if v.len() != rank {
                return Err(DseqError::Length {
                    got: v.len(),
                    rank,
                });
            }
        }
        Ok(TypeSequence { kappa, kappabar })
    }

    pub fn uniform(n: usize, bit: bool) -> TypeSequence {
        TypeSequence {
            kappa: vec![bit; n],
            kappabar: vec![bit; n],
        }
    }

    /// All `4^n` sequences for rank `n`.
    pub fn all(n: usize) -> Vec<TypeSequence> {
        (0..1u32 << (2 * n))
            .map(|m| TypeSequence {
                kappa: (0..n).map(|i| m >> (2 * n - 1 - i) & 1 == 1).collect(),
                kappabar: (0..n).map(|i| m >> (n - 1 - i) & 1 == 1).collect(),
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.kappa.len()
    }

    /// `𝔡`: 0-based nodes with type-1 `E`.
    pub fn support(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.kappa[i]).collect()
    }

    /// `𝔡̄`: 0-based nodes with type-1 `F`.
    pub fn support_bar(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.kappabar[i]).collect()
    }
}

impl fmt::Display for TypeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits = |v: &[bool]| v.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>();
        write!(f, "{}|{}", bits(&self.kappa), bits(&self.kappabar))
    }
}

/// One defining relation, labelled by family for reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub family: &'static str,
    pub element: Element,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub cartan: CartanData,
    pub dseq: TypeSequence,
    pub relations: Vec<Relation>,
}

fn qp(e: i32) -> Coeff {
    Coeff::q_pow(e)
}

/// `P_i^k`: `K_i^k`, `J`, or `Kb_i^{-k}` by the sign of `k` (`i` 1-based).
pub fn p_power(i: usize, k: i32) -> Element {
    let i = i as u8;
    match k.cmp(&0) {
        Ordering::Equal => Element::letter(Letter::J),
        Ordering::Greater => Element::word(vec![Letter::K(i); k as usize].into()),
        Ordering::Less => Element::word(vec![Letter::Kb(i); (-k) as usize].into()),
    }
}

/// `P^s = P_1^{s_1} ... P_n^{s_n}`.
pub fn p_multi(s: &[i32]) -> Element {
    s.iter()
        .enumerate()
        .fold(Element::one(), |acc, (i, &k)| acc.mul(&p_power(i + 1, k)))
}

/// `1/(q_i - q_i^{-1})`.
pub fn ef_coefficient(di: u32) -> Coeff {
    let d = di as i32;
    let den: Coeff = LaurentPoly::from_terms([(d, rat_int(1)), (-d, rat_int(-1))]).into();
    den.inv().expect("q_i - q_i^-1 is nonzero")
}

/// Sum `Σ_s (-1)^s [1-a_ij choose s]_{q_i} X_i^{1-a_ij-s} X_j X_i^s`.
pub fn serre(cartan: &CartanData, i: usize, j: usize, x: fn(u8) -> Letter) -> Element {
    let m = (1 - cartan.a[i][j]) as u32;
    let di = cartan.di(i);
    let (li, lj) = (x(i as u8 + 1), x(j as u8 + 1));
    let mut e = Element::zero();
    for s in 0..=m {
        let mut w: Vec<Letter> = vec![li; (m - s) as usize];
        w.push(lj);
        w.extend(std::iter::repeat_n(li, s as usize));
        let mut c = q_binomial(m, s, di).expect("s <= m");
        if s % 2 == 1 {
            c = -c;
        }
        e.add_term(w.into(), c);
    }
    e
}

impl Presentation {
    /// The defining relations of `w^d_q(g)` for the given Cartan data and type sequence.
    pub fn build(cartan: &CartanData, dseq: &TypeSequence) -> Presentation {
        assert_eq!(cartan.n, dseq.rank(), "type sequence length must match rank");
        let n = cartan.n;
        let mut rels: Vec<Relation> = Vec::new();
        let mut push = |family: &'static str, element: Element| rels.push(Relation { family, element });
        let w = |ls: &[Letter]| Element::letters(ls);
        let idx = |i: usize| i as u8 + 1;
        use Letter::*;

        for i in 0..n {
            push("w0", w(&[K(idx(i)), Kb(idx(i))]).sub(&w(&[J])));
        }
        for i in 0..n {
            for j in 0..n {
                push("w1", w(&[K(idx(i)), Kb(idx(j))]).sub(&w(&[Kb(idx(j)), K(idx(i))])));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                push("w1", w(&[K(idx(i)), K(idx(j))]).sub(&w(&[K(idx(j)), K(idx(i))])));
                push("w1", w(&[Kb(idx(i)), Kb(idx(j))]).sub(&w(&[Kb(idx(j)), Kb(idx(i))])));
            }
        }
        for i in 0..n {
            push("w2", w(&[J, K(idx(i))]).sub(&w(&[K(idx(i))])));
            push("w2", w(&[J, Kb(idx(i))]).sub(&w(&[Kb(idx(i))])));
        }
        push("w2", w(&[J, J]).sub(&w(&[J])));

        // q_i^{a_ij} = q^{d_i a_ij}
        for i in 0..n {
            let (e, f) = (E(idx(i)), F(idx(i)));
            if dseq.kappa[i] {
                for j in 0..n {
                    let c = qp(cartan.sym(i, j));
                    let (k, kb) = (K(idx(j)), Kb(idx(j)));
                    push("type1-E", w(&[k, e]).sub(&w(&[e, k]).scale(&c)));
                    push("type1-E", w(&[e, kb]).sub(&w(&[kb, e]).scale(&c)));
                }
            } else {
                for j in 0..n {
                    let c = qp(cartan.sym(i, j));
                    push(
                        "type2-E",
                        w(&[K(idx(j)), e, Kb(idx(j))]).sub(&w(&[e]).scale(&c)),
                    );
                }
                push("type2-E", w(&[J, e]).sub(&w(&[e])));
            }
            if dseq.kappabar[i] {
                for j in 0..n {
                    let c = qp(-cartan.sym(i, j));
                    let (k, kb) = (K(idx(j)), Kb(idx(j)));
                    push("type1-F", w(&[k, f]).sub(&w(&[f, k]).scale(&c)));
                    push("type1-F", w(&[f, kb]).sub(&w(&[kb, f]).scale(&c)));
                }
            } else {
                for j in 0..n {
                    let c = qp(-cartan.sym(i, j));
                    push(
                        "type2-F",
                        w(&[K(idx(j)), f, Kb(idx(j))]).sub(&w(&[f]).scale(&c)),
                    );
                }
                push("type2-F", w(&[f, J]).sub(&w(&[f])));
            }
        }

        for i in 0..n {
            for j in 0..n {
                let mut r = w(&[E(idx(i)), F(idx(j))]).sub(&w(&[F(idx(j)), E(idx(i))]));
                if i == j {
                    let c = ef_coefficient(cartan.di(i));
                    r = r.sub(&w(&[K(idx(i))]).sub(&w(&[Kb(idx(i))])).scale(&c));
                }
                push("w5", r);
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    push("w6", serre(cartan, i, j, E));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    push("w7", serre(cartan, i, j, F));
                }
            }
        }
        Presentation {
            cartan: cartan.clone(),
            dseq: dseq.clone(),
            relations: rels,
        }
    }

    pub fn rank(&self) -> usize {
        self.cartan.n
    }

    pub fn elements(&self) -> impl Iterator<Item = &Element> + '_ {
        self.relations.iter().map(|r| &r.element)
    }

    /// Human-readable instance label, e.g. `A2 11|01`.
    pub fn label(&self) -> String {
        format!("{} {}", self.cartan, self.dseq)
    }
}
