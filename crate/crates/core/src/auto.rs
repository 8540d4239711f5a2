//! Weak Hopf automorphisms: diagonal maps `φ_a`, diagram maps `σ`, and the
//! semidirect relation `φ_a σ = σ φ_{σ·a}`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{p_multi, Element, Letter, TypeSequence};
use crate::cartan::CartanData;
use crate::coeff::{Coeff, Rational};
use crate::hopf::{all_words, antipode_t, counit, delta, small_vectors, EndoMap, MapKind, TensorElement};
use crate::report::Report;
use crate::rewrite::{RewriteError, RewriteSystem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutoError {
    #[error("diagonal parameter a_{0} is zero")]
    ZeroParameter(usize),
    #[error("expected {expected} entries, got {got}")]
    Length { expected: usize, got: usize },
    #[error("{0:?} is not a permutation of 1..n")]
    NotPermutation(Vec<usize>),
    #[error("σ does not preserve the Cartan data (d_i a_ij)")]
    NotDiagram,
    #[error("σ does not preserve the type sequence {0}")]
    TypeMismatch(String),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error("extension fails verification: {0}")]
    Verification(String),
}

/// `a ∈ (k^*)^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalParams {
    a: Vec<Rational>,
}

impl DiagonalParams {
    pub fn new(a: Vec<Rational>) -> Result<Self, AutoError> {
        if let Some(i) = a.iter().position(|x| x.is_zero()) {
            return Err(AutoError::ZeroParameter(i + 1));
        }
        Ok(DiagonalParams { a })
    }

    pub fn ones(n: usize) -> Self {
        DiagonalParams {
            a: vec![Rational::one(); n],
        }
    }

    pub fn values(&self) -> &[Rational] {
        &self.a
    }

    /// Componentwise product.
    pub fn mul(&self, other: &DiagonalParams) -> DiagonalParams {
        DiagonalParams {
            a: self.a.iter().zip(&other.a).map(|(x, y)| x * y).collect(),
        }
    }
}

/// A permutation of the nodes, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DiagramSymmetry {
    pub perm: Vec<usize>,
}

impl DiagramSymmetry {
    pub fn identity(n: usize) -> Self {
        DiagramSymmetry { perm: (0..n).collect() }
    }

    /// From one-line notation, 1-based.
    pub fn from_one_line(p: &[usize]) -> Result<Self, AutoError> {
        let n = p.len();
        let mut seen = vec![false; n];
        for &x in p {
            if x == 0 || x > n || seen[x - 1] {
                return Err(AutoError::NotPermutation(p.to_vec()));
            }
            seen[x - 1] = true;
        }
        Ok(DiagramSymmetry {
            perm: p.iter().map(|x| x - 1).collect(),
        })
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.perm.iter().map(|x| x + 1).collect()
    }

    pub fn is_diagram_automorphism(&self, c: &CartanData) -> bool {
        let s = &self.perm;
        s.len() == c.n
            && (0..c.n).all(|i| (0..c.n).all(|j| c.sym(i, j) == c.sym(s[i], s[j])))
    }

    pub fn preserves(&self, d: &TypeSequence) -> bool {
        (0..d.rank()).all(|i| d.kappa[self.perm[i]] == d.kappa[i] && d.kappabar[self.perm[i]] == d.kappabar[i])
    }

    /// `σ·a = (a_{σ(1)}, ..., a_{σ(n)})`.
    pub fn act(&self, a: &DiagonalParams) -> DiagonalParams {
        DiagonalParams {
            a: self.perm.iter().map(|&k| a.a[k].clone()).collect(),
        }
    }
}

fn idx(i: usize) -> u8 {
    i as u8 + 1
}

/// `φ_a`: `E_i ↦ a_i E_i`, `F_i ↦ a_i^{-1} F_i`, torus letters and `J` fixed.
pub fn phi_a(params: &DiagonalParams) -> EndoMap {
    let mut m = BTreeMap::new();
    for (i, a) in params.a.iter().enumerate() {
        let c = Coeff::from(a.clone());
        let ci = Coeff::from(a.recip());
        m.insert(Letter::E(idx(i)), Element::letter(Letter::E(idx(i))).scale(&c));
        m.insert(Letter::F(idx(i)), Element::letter(Letter::F(idx(i))).scale(&ci));
    }
    EndoMap::new("φ_a", MapKind::Hom, m)
}

/// All permutations with `d_i a_ij = d_{σ(i)} a_{σ(i)σ(j)}`, in lexicographic order.
pub fn diagram_automorphisms(c: &CartanData) -> Vec<DiagramSymmetry> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..c.n).collect();
    loop {
        let s = DiagramSymmetry { perm: perm.clone() };
        if s.is_diagram_automorphism(c) {
            out.push(s);
        }
        // next lexicographic permutation
        let Some(k) = (0..c.n.saturating_sub(1)).rev().find(|&k| perm[k] < perm[k + 1]) else {
            return out;
        };
        let l = (k + 1..c.n).rev().find(|&l| perm[k] < perm[l]).expect("exists");
        perm.swap(k, l);
        perm[k + 1..].reverse();
    }
}

/// `σ` on generators. Rejects permutations that break the Cartan data or the type sequence.
pub fn sigma_map(s: &DiagramSymmetry, c: &CartanData, d: &TypeSequence) -> Result<EndoMap, AutoError> {
    if s.perm.len() != c.n {
        return Err(AutoError::Length {
            expected: c.n,
            got: s.perm.len(),
        });
    }
    if !s.is_diagram_automorphism(c) {
        return Err(AutoError::NotDiagram);
    }
    if !s.preserves(d) {
        return Err(AutoError::TypeMismatch(d.to_string()));
    }
    let mut m = BTreeMap::new();
    for i in 0..c.n {
        let (a, b) = (idx(i), idx(s.perm[i]));
        m.insert(Letter::E(a), Element::letter(Letter::E(b)));
        m.insert(Letter::F(a), Element::letter(Letter::F(b)));
        m.insert(Letter::K(a), Element::letter(Letter::K(b)));
        m.insert(Letter::Kb(a), Element::letter(Letter::Kb(b)));
    }
    Ok(EndoMap::new(&format!("σ{:?}", s.one_line()), MapKind::Hom, m))
}

fn map_tensor(sys: &RewriteSystem, m: &EndoMap, t: &TensorElement) -> Result<TensorElement, RewriteError> {
    let mut out = TensorElement::zero();
    for (ws, c) in t.terms() {
        let factors: Vec<Element> = ws.iter().map(|w| m.apply_word(sys, w)).collect::<Result<_, _>>()?;
        out.add_scaled(&TensorElement::product_of(&factors), c);
    }
    Ok(out)
}

/// Relations go to 0; `Δ φ = (φ⊗φ) Δ`, `ε φ = ε` and `φ T = T φ` on all words up to
/// `maxlen`; `φ(J) = J`.
pub fn verify_weak_hopf_automorphism(sys: &RewriteSystem, m: &EndoMap, maxlen: usize) -> Result<Report, RewriteError> {
    let inst = format!("{} {}", sys.presentation().label(), m.name);
    let mut r = Report::new();

    let rels: Vec<Element> = sys.presentation().elements().cloned().collect();
    let bad: Result<Vec<Option<String>>, RewriteError> = rels
        .par_iter()
        .map(|x| {
            let img = m.apply(sys, x)?;
            Ok((!img.is_zero()).then(|| format!("relation {x} maps to {img}")))
        })
        .collect();
    r.push("automorphism relations", &inst, bad?.into_iter().flatten().next());

    let words = all_words(&sys.alphabet(), maxlen);
    let checks: Result<Vec<[Option<String>; 3]>, RewriteError> = words
        .par_iter()
        .map(|w| {
            let x = Element::word(w.clone());
            let mx = m.apply(sys, &x)?;
            let d1 = delta(sys, &mx)?;
            let d2 = map_tensor(sys, m, &delta(sys, &x)?)?;
            let a = (d1 != d2).then(|| format!("Δφ({w}) = {d1} but (φ⊗φ)Δ({w}) = {d2}"));
            let b = (counit(&mx) != counit(&x)).then(|| format!("εφ({w}) ≠ ε({w})"));
            let t1 = m.apply(sys, &antipode_t(sys, &x)?)?;
            let t2 = antipode_t(sys, &mx)?;
            let c = (t1 != t2).then(|| format!("φT({w}) = {t1} but Tφ({w}) = {t2}"));
            Ok([a, b, c])
        })
        .collect();
    let checks = checks?;
    for (k, name) in ["automorphism Δ-intertwining", "automorphism ε-invariance", "automorphism T-commutation"]
        .iter()
        .enumerate()
    {
        r.record(name, &inst, checks.iter().filter_map(|c| c[k].clone()));
    }

    let j = Element::letter(Letter::J);
    let mj = m.apply(sys, &j)?;
    let jn = sys.normalize(&j)?;
    r.push(
        "automorphism fixes J",
        &inst,
        (mj != jn).then(|| format!("φ(J) = {mj}")),
    );
    Ok(r)
}

/// `φ_a ∘ σ` and `σ ∘ φ_{σ·a}` agree on every generator.
pub fn semidirect_check(
    sys: &RewriteSystem,
    s: &DiagramSymmetry,
    params: &DiagonalParams,
) -> Result<bool, AutoError> {
    let p = sys.presentation();
    let sigma = sigma_map(s, &p.cartan, &p.dseq)?;
    let left = phi_a(params).compose(sys, &sigma)?;
    let right = sigma.compose(sys, &phi_a(&s.act(params)))?;
    Ok(left.agrees_on_generators(sys, &right)?.is_none())
}

/// The negative control: `φ_a ∘ σ` against `σ ∘ φ_a` with `a` left unpermuted.
/// Returns the first generator where they differ.
pub fn semidirect_control(
    sys: &RewriteSystem,
    s: &DiagramSymmetry,
    params: &DiagonalParams,
) -> Result<Option<Letter>, AutoError> {
    let p = sys.presentation();
    let sigma = sigma_map(s, &p.cartan, &p.dseq)?;
    let left = phi_a(params).compose(sys, &sigma)?;
    let right = sigma.compose(sys, &phi_a(params))?;
    Ok(left.agrees_on_generators(sys, &right)?)
}

/// The automorphism determined by its restriction to `w_q`:
/// `E_i ↦ a_{σ(i)} E_{σ(i)}`, `F_i ↦ a_{σ(i)}^{-1} F_{σ(i)}`, torus letters
/// permuted. Verified before it is returned.
pub fn extend_from_wq(
    sys: &RewriteSystem,
    s: &DiagramSymmetry,
    params: &DiagonalParams,
    maxlen: usize,
) -> Result<EndoMap, AutoError> {
    let p = sys.presentation();
    let sigma = sigma_map(s, &p.cartan, &p.dseq)?;
    let mut m = BTreeMap::new();
    for i in 0..p.rank() {
        let t = s.perm[i];
        let a = &params.a[t];
        m.insert(
            Letter::E(idx(i)),
            Element::letter(Letter::E(idx(t))).scale(&Coeff::from(a.clone())),
        );
        m.insert(
            Letter::F(idx(i)),
            Element::letter(Letter::F(idx(t))).scale(&Coeff::from(a.recip())),
        );
        m.insert(Letter::K(idx(i)), sigma.image(Letter::K(idx(i))));
        m.insert(Letter::Kb(idx(i)), sigma.image(Letter::Kb(idx(i))));
    }
    let ext = EndoMap::new("extension", MapKind::Hom, m);
    let report = verify_weak_hopf_automorphism(sys, &ext, maxlen)?;
    if let Some(f) = report.failures().next() {
        return Err(AutoError::Verification(format!(
            "{}: {}",
            f.check,
            f.counterexample.clone().unwrap_or_default()
        )));
    }
    Ok(ext)
}

/// A verified automorphism permutes `{P^s : |s_i| ≤ smax}`.
pub fn permutes_grouplikes(sys: &RewriteSystem, m: &EndoMap, smax: i32) -> Result<bool, RewriteError> {
    let vecs = small_vectors(sys.rank(), smax);
    let set: Vec<Element> = vecs.iter().map(|s| sys.normalize(&p_multi(s))).collect::<Result<_, _>>()?;
    let mut images = Vec::with_capacity(set.len());
    for x in &set {
        let y = m.apply(sys, x)?;
        if !set.contains(&y) {
            return Ok(false);
        }
        images.push(y);
    }
    images.sort_by_key(|e| e.to_string());
    images.dedup();
    Ok(images.len() == set.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Presentation;
    use crate::coeff::{rat, rat_int};
    use crate::rewrite::Variant;
    use crate::syntax::parse_element;

    fn system(name: &str, d: &str) -> RewriteSystem {
        let c = CartanData::from_name(name).unwrap();
        let d = TypeSequence::parse(d, c.n).unwrap();
        RewriteSystem::build(&Presentation::build(&c, &d), Variant::Base, 8).unwrap()
    }

    fn params(v: &[i64]) -> DiagonalParams {
        DiagonalParams::new(v.iter().map(|&x| rat_int(x)).collect()).unwrap()
    }

    #[test]
    fn zero_parameter_rejected() {
        assert_eq!(
            DiagonalParams::new(vec![rat_int(1), rat_int(0)]),
            Err(AutoError::ZeroParameter(2))
        );
    }

    #[test]
    fn diagram_automorphism_lists() {
        let one_line = |name: &str| -> Vec<Vec<usize>> {
            diagram_automorphisms(&CartanData::from_name(name).unwrap())
                .iter()
                .map(|s| s.one_line())
                .collect()
        };
        assert_eq!(one_line("A2"), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(one_line("B2"), vec![vec![1, 2]]);
        assert_eq!(one_line("A3"), vec![vec![1, 2, 3], vec![3, 2, 1]]);
        assert_eq!(one_line("G2"), vec![vec![1, 2]]);
    }

    #[test]
    fn phi_examples() {
        let s = system("A1", "1|1");
        let x = parse_element("E1*F1", 1).unwrap();
        assert_eq!(phi_a(&params(&[2])).apply(&s, &x).unwrap(), s.normalize(&x).unwrap());
        let k = parse_element("K1*Kb1", 1).unwrap();
        assert_eq!(phi_a(&params(&[2])).apply(&s, &k).unwrap().to_string(), "J");
        let id = phi_a(&DiagonalParams::ones(1));
        assert!(id.agrees_on_generators(&s, &EndoMap::identity()).unwrap().is_none());
    }

    #[test]
    fn sigma_respects_type_sequence() {
        let c = CartanData::from_name("A2").unwrap();
        let swap = DiagramSymmetry::from_one_line(&[2, 1]).unwrap();
        assert!(sigma_map(&swap, &c, &TypeSequence::parse("11|11", 2).unwrap()).is_ok());
        assert!(matches!(
            sigma_map(&swap, &c, &TypeSequence::parse("10|11", 2).unwrap()),
            Err(AutoError::TypeMismatch(_))
        ));
        let b2 = CartanData::from_name("B2").unwrap();
        assert_eq!(
            sigma_map(&swap, &b2, &TypeSequence::uniform(2, true)).unwrap_err(),
            AutoError::NotDiagram
        );
    }

    #[test]
    fn automorphisms_verify() {
        let s = system("A2", "11|00");
        let phi = phi_a(&DiagonalParams::new(vec![rat(-1, 2), rat_int(3)]).unwrap());
        let r = verify_weak_hopf_automorphism(&s, &phi, 2).unwrap();
        assert!(r.pass(), "{}", r.to_text());
        assert!(permutes_grouplikes(&s, &phi, 2).unwrap());
        let swap = DiagramSymmetry::from_one_line(&[2, 1]).unwrap();
        let sigma = sigma_map(&swap, &s.presentation().cartan, &s.presentation().dseq).unwrap();
        assert!(verify_weak_hopf_automorphism(&s, &sigma, 2).unwrap().pass());
        assert!(permutes_grouplikes(&s, &sigma, 2).unwrap());
    }

    #[test]
    fn negative_controls() {
        let s = system("A2", "11|11");
        let mut bad = EndoMap::identity();
        bad.set_image(Letter::E(1), Element::letter(Letter::F(1)));
        let r = verify_weak_hopf_automorphism(&s, &bad, 1).unwrap();
        assert!(!r.pass());
        assert!(r.failures().next().unwrap().counterexample.is_some());
        let mut kill_j = EndoMap::identity();
        kill_j.set_image(Letter::J, Element::one());
        let r = verify_weak_hopf_automorphism(&s, &kill_j, 1).unwrap();
        assert!(r.failures().any(|f| f.check == "automorphism fixes J"));
    }

    #[test]
    fn semidirect_identity() {
        let s = system("A2", "11|11");
        let swap = DiagramSymmetry::from_one_line(&[2, 1]).unwrap();
        let a = params(&[2, 3]);
        assert!(semidirect_check(&s, &swap, &a).unwrap());
        assert!(semidirect_check(&s, &DiagramSymmetry::identity(2), &a).unwrap());
        assert!(semidirect_control(&s, &swap, &a).unwrap().is_some());
    }

    #[test]
    fn group_law_on_generators() {
        let s = system("A2", "10|01");
        let (a, b) = (params(&[2, -3]), params(&[5, 7]));
        let ab = phi_a(&a).compose(&s, &phi_a(&b)).unwrap();
        assert!(ab.agrees_on_generators(&s, &phi_a(&a.mul(&b))).unwrap().is_none());
    }

    #[test]
    fn extension_examples() {
        let s = system("A1", "1|1");
        let ext = extend_from_wq(&s, &DiagramSymmetry::identity(1), &params(&[5]), 2).unwrap();
        let x = parse_element("E1 - E1*J", 1).unwrap();
        let img = ext.apply(&s, &x).unwrap();
        assert_eq!(img, s.normalize(&x).unwrap().scale(&Coeff::from(rat_int(5))));
        let id = extend_from_wq(&s, &DiagramSymmetry::identity(1), &params(&[1]), 2).unwrap();
        assert!(id.agrees_on_generators(&s, &EndoMap::identity()).unwrap().is_none());
        // type-2 E: E(1 - J) = 0, so nothing to extend there
        let s0 = system("A1", "0|1");
        let ext = extend_from_wq(&s0, &DiagramSymmetry::identity(1), &params(&[5]), 2).unwrap();
        let x = parse_element("E1 - E1*J", 1).unwrap();
        assert!(ext.apply(&s0, &x).unwrap().is_zero());
    }
}
