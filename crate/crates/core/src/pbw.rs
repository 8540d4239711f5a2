//! Lusztig symmetries on the `J = 1` quotient, root vectors along the longest
//! word, PBW monomials and basis-count comparisons.
//!
//! Conventions follow Jantzen: `T_i(E_i) = -F_i K_i`, `T_i(F_i) = -Kb_i E_i`,
//! `T_i(K_μ) = K_{s_i μ}` and, with `r = -a_ij`,
//! `T_i(E_j) = Σ_k (-1)^k q_i^{-k} E_i^{(r-k)} E_j E_i^{(k)}`,
//! `T_i(F_j) = Σ_k (-1)^k q_i^{k} F_i^{(k)} F_j F_i^{(r-k)}`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{p_multi, Element, Letter, TypeSequence, Word};
use crate::cartan::{kostant_with, CartanData};
use crate::coeff::{q_factorial, Coeff, CoeffError, Rational};
use crate::hopf::{EndoMap, MapKind};
use crate::report::Report;
use crate::rewrite::{dimension_oracle, RewriteError, RewriteSystem, Variant};

fn divided_power(l: Letter, k: u32, di: u32) -> Element {
    let c = q_factorial(k, di).inv().expect("[k]! is nonzero");
    Element::word(vec![l; k as usize].into()).scale(&c)
}

/// `T_i` (`i` 0-based) as a homomorphism of the quotient algebra.
pub fn lusztig_map(c: &CartanData, i: usize) -> EndoMap {
    use Letter::*;
    let li = i as u8 + 1;
    let di = c.di(i);
    let mut m = BTreeMap::new();
    m.insert(E(li), Element::letters(&[F(li), K(li)]).neg());
    m.insert(F(li), Element::letters(&[Kb(li), E(li)]).neg());
    m.insert(K(li), Element::letter(Kb(li)));
    m.insert(Kb(li), Element::letter(K(li)));
    for j in 0..c.n {
        if j == i {
            continue;
        }
        let lj = j as u8 + 1;
        let r = (-c.a[i][j]) as u32;
        let mut kj = vec![K(lj)];
        kj.extend(std::iter::repeat_n(K(li), r as usize));
        m.insert(K(lj), Element::letters(&kj));
        let mut kbj = vec![Kb(lj)];
        kbj.extend(std::iter::repeat_n(Kb(li), r as usize));
        m.insert(Kb(lj), Element::letters(&kbj));
        let (mut e, mut f) = (Element::zero(), Element::zero());
        for k in 0..=r {
            let sign = if k % 2 == 1 { -Coeff::one() } else { Coeff::one() };
            let ce = &sign * &Coeff::q_pow(-((k * di) as i32));
            let cf = &sign * &Coeff::q_pow((k * di) as i32);
            let te = divided_power(E(li), r - k, di)
                .mul(&Element::letter(E(lj)))
                .mul(&divided_power(E(li), k, di));
            e.add_scaled(&te, &ce);
            let tf = divided_power(F(li), k, di)
                .mul(&Element::letter(F(lj)))
                .mul(&divided_power(F(li), r - k, di));
            f.add_scaled(&tf, &cf);
        }
        m.insert(E(lj), e);
        m.insert(F(lj), f);
    }
    EndoMap::new(&format!("T{}", i + 1), MapKind::Hom, m)
}

/// `T_{w_1} ... T_{w_k}(x)` (rightmost applied first), `w` 0-based.
pub fn apply_lusztig_word(
    sys: &RewriteSystem,
    maps: &[EndoMap],
    w: &[usize],
    x: &Element,
) -> Result<Element, RewriteError> {
    let mut y = sys.normalize(x)?;
    for &i in w.iter().rev() {
        y = maps[i].apply(sys, &y)?;
    }
    Ok(y)
}

pub fn lusztig_t(sys: &RewriteSystem, i: usize, x: &Element) -> Result<Element, RewriteError> {
    lusztig_map(&sys.presentation().cartan, i).apply(sys, x)
}

fn all_maps(c: &CartanData) -> Vec<EndoMap> {
    (0..c.n).map(|i| lusztig_map(c, i)).collect()
}

/// Every defining relation of the quotient (including `J - 1`) maps to 0 under `T_i`.
pub fn lusztig_hom_check(sys: &RewriteSystem, i: usize) -> Result<Option<String>, RewriteError> {
    let t = lusztig_map(&sys.presentation().cartan, i);
    let mut rels: Vec<Element> = sys.presentation().elements().cloned().collect();
    rels.push(Element::letter(Letter::J).sub(&Element::one()));
    for r in &rels {
        let img = t.apply(sys, r)?;
        if !img.is_zero() {
            return Ok(Some(format!("T{}({r}) = {img}", i + 1)));
        }
    }
    Ok(None)
}

/// The `m_ij`-term alternating products of `T_i`, `T_j` agree on every generator.
/// Returns a description of the first disagreement.
pub fn braid_check(sys: &RewriteSystem, i: usize, j: usize) -> Result<Option<String>, RewriteError> {
    let c = &sys.presentation().cartan;
    let m = c.order_m(i, j).expect("distinct nodes") as usize;
    let maps = all_maps(c);
    let left: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
    let right: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
    let gens: Vec<Letter> = sys
        .alphabet()
        .into_iter()
        .filter(|l| *l != Letter::J && *l != Letter::H)
        .collect();
    let found: Result<Vec<Option<String>>, RewriteError> = gens
        .par_iter()
        .map(|&l| {
            let x = Element::letter(l);
            let a = apply_lusztig_word(sys, &maps, &left, &x)?;
            let b = apply_lusztig_word(sys, &maps, &right, &x)?;
            Ok((a != b).then(|| {
                let show = |w: &[usize]| w.iter().map(|k| format!("T{}", k + 1)).collect::<String>();
                format!("{}({l}) = {a} but {}({l}) = {b}", show(&left), show(&right))
            }))
        })
        .collect();
    Ok(found?.into_iter().flatten().next())
}

/// Braid relations for every pair of distinct nodes.
pub fn braid_report(sys: &RewriteSystem) -> Result<Report, RewriteError> {
    let c = &sys.presentation().cartan;
    let mut r = Report::new();
    for i in 0..c.n {
        for j in i + 1..c.n {
            let m = c.order_m(i, j).expect("distinct nodes");
            let bad = braid_check(sys, i, j)?;
            r.push(
                &format!("braid T{}T{} m={m}", i + 1, j + 1),
                &c.to_string(),
                bad,
            );
        }
    }
    Ok(r)
}

/// `T_{i_1} ... T_{i_{k-1}}(X_{i_k})` along the deterministic longest word,
/// `k` 1-based, with `X = E` or `F`.
fn root_vector_with(sys: &RewriteSystem, k: usize, x: fn(u8) -> Letter) -> Result<Element, RewriteError> {
    let c = &sys.presentation().cartan;
    let w = c.longest_word().indices;
    assert!(k >= 1 && k <= w.len(), "position out of range");
    let maps = all_maps(c);
    apply_lusztig_word(sys, &maps, &w[..k - 1], &Element::letter(x(w[k - 1] as u8 + 1)))
}

pub fn root_vector(sys: &RewriteSystem, k: usize) -> Result<Element, RewriteError> {
    root_vector_with(sys, k, Letter::E)
}

pub fn root_vector_f(sys: &RewriteSystem, k: usize) -> Result<Element, RewriteError> {
    root_vector_with(sys, k, Letter::F)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PbwPart {
    /// `F^b P^s E^a J`, exponents along the longest word.
    J { b: Vec<u32>, s: Vec<i32>, a: Vec<u32> },
    /// `∏ X_𝔢^{a_𝔢} ∏ Y_𝔢̄^{b_𝔢̄} (1 - J)`, one exponent vector per class,
    /// indexed by the positive roots of that class.
    XY { x: Vec<Vec<u32>>, y: Vec<Vec<u32>> },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PbwMonomial {
    pub part: PbwPart,
    /// Degree of the `E`/`X` factor.
    pub e_degree: Vec<i32>,
    /// Degree of the `F`/`Y` factor, as a nonnegative vector.
    pub f_degree: Vec<i32>,
}

fn height(v: &[i32]) -> i32 {
    v.iter().sum()
}

fn add_scaled_vec(acc: &mut [i32], v: &[i32], k: u32) {
    for (a, x) in acc.iter_mut().zip(v) {
        *a += x * k as i32;
    }
}

/// Exponent vectors over `roots` whose weighted sum has height at most `maxdeg`.
fn exponent_vectors(roots: &[Vec<i32>], n: usize, maxdeg: i32) -> Vec<(Vec<u32>, Vec<i32>)> {
    let mut out = vec![(vec![], vec![0; n])];
    for r in roots {
        let h = height(r);
        let mut next = Vec::new();
        for (e, deg) in &out {
            let mut k = 0u32;
            loop {
                let mut d = deg.clone();
                add_scaled_vec(&mut d, r, k);
                if height(&d) > maxdeg {
                    break;
                }
                let mut e2 = e.clone();
                e2.push(k);
                next.push((e2, d));
                k += 1;
                if h == 0 {
                    break;
                }
            }
        }
        out = next;
    }
    out
}

/// Positive roots of each class, embedded in the full root lattice.
pub fn class_roots(c: &CartanData, support: &[usize]) -> Vec<Vec<Vec<i32>>> {
    c.equivalence_classes(support)
        .into_iter()
        .map(|class| {
            let sub = c.restrict(&class);
            sub.positive_roots()
                .roots
                .into_iter()
                .map(|r| {
                    let mut v = vec![0; c.n];
                    for (k, &node) in class.iter().enumerate() {
                        v[node] = r[k];
                    }
                    v
                })
                .collect()
        })
        .collect()
}

/// PBW monomials whose `E`- and `F`-degrees have total height at most `maxdeg`;
/// the `J`-part uses `|s_i| ≤ smax`.
pub fn enumerate_pbw(c: &CartanData, d: &TypeSequence, maxdeg: u32, smax: i32) -> Vec<PbwMonomial> {
    let n = c.n;
    let maxdeg = maxdeg as i32;
    let word = c.longest_word().indices;
    let roots = c.roots_along(&word);
    let mut out = Vec::new();
    let es = exponent_vectors(&roots, n, maxdeg);
    let svecs = crate::hopf::small_vectors(n, smax);
    for (b, fdeg) in &es {
        for (a, edeg) in &es {
            if height(fdeg) + height(edeg) > maxdeg {
                continue;
            }
            for s in &svecs {
                out.push(PbwMonomial {
                    part: PbwPart::J {
                        b: b.clone(),
                        s: s.clone(),
                        a: a.clone(),
                    },
                    e_degree: edeg.clone(),
                    f_degree: fdeg.clone(),
                });
            }
        }
    }
    let per_class = |support: &[usize]| -> Vec<(Vec<Vec<u32>>, Vec<i32>)> {
        let mut acc: Vec<(Vec<Vec<u32>>, Vec<i32>)> = vec![(vec![], vec![0; n])];
        for rs in class_roots(c, support) {
            let mut next = Vec::new();
            for (ex, deg) in &acc {
                for (e, d2) in exponent_vectors(&rs, n, maxdeg - height(deg)) {
                    let mut ex2 = ex.clone();
                    ex2.push(e);
                    let total: Vec<i32> = deg.iter().zip(&d2).map(|(a, b)| a + b).collect();
                    next.push((ex2, total));
                }
            }
            acc = next;
        }
        acc
    };
    let xs = per_class(&d.support());
    let ys = per_class(&d.support_bar());
    for (y, fdeg) in &ys {
        for (x, edeg) in &xs {
            if height(fdeg) + height(edeg) > maxdeg {
                continue;
            }
            out.push(PbwMonomial {
                part: PbwPart::XY { x: x.clone(), y: y.clone() },
                e_degree: edeg.clone(),
                f_degree: fdeg.clone(),
            });
        }
    }
    out.sort();
    out
}

/// Reinterprets a quotient element (no `J` letters) in the base algebra.
fn product_of_powers(sys: &RewriteSystem, vecs: &[Element], exps: &[u32]) -> Result<Element, RewriteError> {
    let mut acc = Element::one();
    for (v, &k) in vecs.iter().zip(exps) {
        for _ in 0..k {
            acc = sys.mul(&acc, v)?;
        }
    }
    Ok(acc)
}

/// The `J`-part monomial `F^b P^s E^a J` in the base system `sys`, with root
/// vectors taken from the quotient `quot`. `F` root vectors are multiplied in
/// decreasing position order, `E` root vectors in increasing order.
pub fn realize_j_monomial(
    sys: &RewriteSystem,
    e_vectors: &[Element],
    f_vectors: &[Element],
    b: &[u32],
    s: &[i32],
    a: &[u32],
) -> Result<Element, RewriteError> {
    let fr: Vec<Element> = f_vectors.iter().rev().cloned().collect();
    let br: Vec<u32> = b.iter().rev().copied().collect();
    let f = product_of_powers(sys, &fr, &br)?;
    let e = product_of_powers(sys, e_vectors, a)?;
    let p = p_multi(s);
    sys.mul_all([&f, &p, &e, &Element::letter(Letter::J)])
}

/// Rank over `Q(q)` of a list of elements, by exact elimination on leading words.
pub fn exact_rank(elems: &[Element]) -> usize {
    let mut pivots: HashMap<Word, Element> = HashMap::new();
    for x in elems {
        let mut x = x.clone();
        while let Some((w, c)) = x.leading().map(|(w, c)| (w.clone(), c.clone())) {
            match pivots.get(&w) {
                Some(p) => x.add_scaled(p, &-c),
                None => {
                    let inv = c.inv().expect("nonzero leading coefficient");
                    pivots.insert(w, x.scale(&inv));
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Rank after substituting `q = v`.
pub fn rank_at(elems: &[Element], v: &Rational) -> Result<usize, CoeffError> {
    let mut pivots: HashMap<Word, BTreeMap<Word, Rational>> = HashMap::new();
    for x in elems {
        let mut work: BTreeMap<Word, Rational> = BTreeMap::new();
        for (w, c) in x.terms() {
            let val = c.eval_at(v)?;
            if !val.is_zero() {
                work.insert(w.clone(), val);
            }
        }
        loop {
            let Some((lead, c)) = work.iter().next_back().map(|(w, c)| (w.clone(), c.clone())) else {
                break;
            };
            match pivots.get(&lead) {
                Some(p) => {
                    for (w, a) in p {
                        let e = work.entry(w.clone()).or_insert_with(Rational::zero);
                        *e -= &c * a;
                        if e.is_zero() {
                            work.remove(w);
                        }
                    }
                }
                None => {
                    let inv = c.recip();
                    let row = work.into_iter().map(|(w, a)| (w, a * &inv)).collect::<BTreeMap<_, _>>();
                    debug_assert!(row[&lead].is_one());
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    Ok(pivots.len())
}

fn degrees_up_to(n: usize, maxh: i32) -> Vec<Vec<i32>> {
    crate::hopf::small_vectors(n, maxh)
        .into_iter()
        .filter(|v| v.iter().all(|&x| x >= 0) && height(v) <= maxh)
        .collect()
}

fn fmt_deg(v: &[i32]) -> String {
    format!("{v:?}")
}

/// (i) `E`-only and (ii) `F`-only irreducible counts in the quotient equal the
/// Kostant count for every degree of height at most `maxh`.
pub fn kostant_count_report(quot: &RewriteSystem, maxh: usize) -> Report {
    let c = &quot.presentation().cartan;
    let n = c.n;
    let mut r = Report::new();
    for (label, letters, sign) in [
        ("E-only counts = Kostant", (1..=n as u8).map(Letter::E).collect::<Vec<_>>(), 1),
        ("F-only counts = Kostant", (1..=n as u8).map(Letter::F).collect::<Vec<_>>(), -1),
    ] {
        let mut counts: BTreeMap<Vec<i32>, u64> = BTreeMap::new();
        quot.for_each_irreducible(maxh, &letters, |w| {
            let d: Vec<i32> = w.multidegree(n).iter().map(|x| x * sign).collect();
            *counts.entry(d).or_insert(0) += 1;
        });
        let bad = degrees_up_to(n, maxh as i32).into_iter().find_map(|nu| {
            let got = counts.get(&nu).copied().unwrap_or(0);
            let want = c.kostant_count(&nu);
            (got != want).then(|| format!("degree {}: {got} irreducible words, Kostant {want}", fmt_deg(&nu)))
        });
        r.push(label, &c.to_string(), bad);
    }
    r
}

fn words_of_degree(letters: &[Letter], n: usize, deg: &[i32], sign: i32) -> Vec<Word> {
    let len = height(deg) as usize;
    crate::hopf::all_words(letters, len)
        .into_iter()
        .filter(|w| w.len() == len && w.multidegree(n).iter().map(|x| x * sign).collect::<Vec<_>>() == deg)
        .collect()
}

/// (iii) The `(1 - J)` part of bidegree `(μ, ν)` has dimension equal to the
/// product of the class-wise Kostant counts, for `|μ| + |ν| ≤ maxh`.
pub fn xy_count_report(sys: &RewriteSystem, maxh: usize) -> Result<Report, RewriteError> {
    let p = sys.presentation();
    let (c, d) = (&p.cartan, &p.dseq);
    let n = c.n;
    let e_roots: Vec<Vec<i32>> = class_roots(c, &d.support()).concat();
    let f_roots: Vec<Vec<i32>> = class_roots(c, &d.support_bar()).concat();
    let e_letters: Vec<Letter> = (1..=n as u8).map(Letter::E).collect();
    let f_letters: Vec<Letter> = (1..=n as u8).map(Letter::F).collect();
    let one_minus_j = Element::one().sub(&Element::letter(Letter::J));
    let mut cases = Vec::new();
    for mu in degrees_up_to(n, maxh as i32) {
        for nu in degrees_up_to(n, maxh as i32 - height(&mu)) {
            cases.push((mu.clone(), nu));
        }
    }
    let found: Result<Vec<Option<String>>, RewriteError> = cases
        .par_iter()
        .map(|(mu, nu)| {
            let us = words_of_degree(&f_letters, n, mu, -1);
            let vs = words_of_degree(&e_letters, n, nu, 1);
            let mut elems = Vec::with_capacity(us.len() * vs.len());
            for u in &us {
                for v in &vs {
                    elems.push(sys.mul(&Element::word(u.concat(v)), &one_minus_j)?);
                }
            }
            let got = exact_rank(&elems) as u64;
            let want = kostant_with(&f_roots, mu) * kostant_with(&e_roots, nu);
            Ok((got != want).then(|| {
                format!("F-degree {} E-degree {}: rank {got}, expected {want}", fmt_deg(mu), fmt_deg(nu))
            }))
        })
        .collect();
    let mut r = Report::new();
    r.push("XY counts = class-wise Kostant", &p.label(), found?.into_iter().flatten().next());
    Ok(r)
}

/// (iv) Irreducible words of length exactly `m` in the homogenized completion,
/// by multidegree, equal the oracle's dimensions for `m ≤ maxlen`.
pub fn oracle_report(hom: &RewriteSystem, maxlen: usize, qvals: &[Rational]) -> Result<Report, CoeffError> {
    assert_eq!(hom.variant(), Variant::Homogenized, "oracle comparison needs the homogenized system");
    let p = hom.presentation();
    let n = p.rank();
    let mut r = Report::new();
    for m in 1..=maxlen {
        let mut counts: BTreeMap<Vec<i32>, u64> = BTreeMap::new();
        hom.for_each_irreducible(m, &hom.alphabet(), |w| {
            if w.len() == m {
                *counts.entry(w.multidegree(n)).or_insert(0) += 1;
            }
        });
        for q in qvals {
            let oracle: BTreeMap<Vec<i32>, u64> = dimension_oracle(p, m, q)?
                .into_iter()
                .filter(|x| x.1 > 0)
                .collect();
            let bad = counts
                .keys()
                .chain(oracle.keys())
                .collect::<BTreeSet<_>>()
                .into_iter()
                .find_map(|deg| {
                    let (a, b) = (counts.get(deg).copied().unwrap_or(0), oracle.get(deg).copied().unwrap_or(0));
                    (a != b).then(|| format!("degree {}: {a} irreducible words, oracle {b}", fmt_deg(deg)))
                });
            r.push(&format!("oracle length {m} q={q}"), &p.label(), bad);
        }
    }
    Ok(r)
}

/// `F^b P^s E^a J` with all exponents in `{0, 1}` and `s ∈ {-1,0,1}^n` have
/// distinct normal forms and are linearly independent at `q = v`.
pub fn independence_witness(
    sys: &RewriteSystem,
    quot: &RewriteSystem,
    v: &Rational,
) -> Result<Report, RewriteError> {
    let c = &sys.presentation().cartan;
    let ell = c.positive_roots().roots.len();
    let es: Vec<Element> = (1..=ell).map(|k| root_vector(quot, k)).collect::<Result<_, _>>()?;
    let fs: Vec<Element> = (1..=ell).map(|k| root_vector_f(quot, k)).collect::<Result<_, _>>()?;
    let bits: Vec<Vec<u32>> = (0..1u32 << ell)
        .map(|m| (0..ell).map(|k| (m >> k) & 1).collect())
        .collect();
    let mut triples = Vec::new();
    for b in &bits {
        for s in crate::hopf::small_vectors(c.n, 1) {
            for a in &bits {
                triples.push((b.clone(), s.clone(), a.clone()));
            }
        }
    }
    let elems: Vec<Element> = triples
        .par_iter()
        .map(|(b, s, a)| realize_j_monomial(sys, &es, &fs, b, s, a))
        .collect::<Result<_, _>>()?;
    let mut r = Report::new();
    let inst = sys.presentation().label();
    let mut seen: HashMap<&Element, usize> = HashMap::new();
    let mut dup = None;
    for (k, x) in elems.iter().enumerate() {
        if x.is_zero() {
            dup = Some(format!("monomial {:?} normalizes to 0", triples[k]));
            break;
        }
        if let Some(&j) = seen.get(x) {
            dup = Some(format!("monomials {:?} and {:?} coincide", triples[j], triples[k]));
            break;
        }
        seen.insert(x, k);
    }
    r.push("PBW monomials distinct", &inst, dup);
    let rank = rank_at(&elems, v).map_err(|_| RewriteError::ZeroRelation(0));
    let bad = match rank {
        Ok(k) if k == elems.len() => None,
        Ok(k) => Some(format!("rank {k} of {} monomials at q = {v}", elems.len())),
        Err(_) => Some(format!("q = {v} is not admissible")),
    };
    r.push("PBW monomials independent", &inst, bad);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Presentation;
    use crate::syntax::parse_element;

    fn quotient(name: &str, bound: usize) -> RewriteSystem {
        let c = CartanData::from_name(name).unwrap();
        let d = TypeSequence::uniform(c.n, true);
        RewriteSystem::build(&Presentation::build(&c, &d), Variant::Base, bound)
            .unwrap()
            .quotient_j1()
            .unwrap()
    }

    fn el(sys: &RewriteSystem, s: &str) -> Element {
        parse_element(s, sys.rank()).unwrap()
    }

    #[test]
    fn generator_images() {
        let q = quotient("A2", 6);
        assert_eq!(lusztig_t(&q, 0, &el(&q, "E1")).unwrap(), q.normalize(&el(&q, "-F1*K1")).unwrap());
        assert_eq!(
            lusztig_t(&q, 0, &el(&q, "E2")).unwrap(),
            q.normalize(&el(&q, "E1*E2 - q^-1*E2*E1")).unwrap()
        );
        assert_eq!(lusztig_t(&q, 0, &el(&q, "K2")).unwrap(), q.normalize(&el(&q, "K1*K2")).unwrap());
    }

    #[test]
    fn lusztig_maps_are_homomorphisms() {
        for name in ["A1", "A2", "B2"] {
            let q = quotient(name, 8);
            for i in 0..q.rank() {
                assert_eq!(lusztig_hom_check(&q, i).unwrap(), None, "{name} T{}", i + 1);
            }
        }
    }

    #[test]
    fn root_vectors_have_root_degrees() {
        for name in ["A2", "B2"] {
            let q = quotient(name, 8);
            let c = &q.presentation().cartan;
            let w = c.longest_word().indices;
            let roots = c.roots_along(&w);
            for k in 1..=w.len() {
                let v = root_vector(&q, k).unwrap();
                assert!(!v.is_zero());
                for (word, _) in v.terms() {
                    assert_eq!(word.multidegree(c.n), roots[k - 1], "{name} k={k}");
                }
            }
        }
        let q = quotient("A2", 6);
        assert_eq!(root_vector(&q, 1).unwrap(), el(&q, "E1"));
        assert_eq!(root_vector(&q, 3).unwrap(), el(&q, "E2"));
    }

    #[test]
    fn braid_a2_b2() {
        for name in ["A2", "B2"] {
            let q = quotient(name, 8);
            assert_eq!(braid_check(&q, 0, 1).unwrap(), None, "{name}");
        }
    }

    #[test]
    fn pbw_enumeration_examples() {
        let a1 = CartanData::from_name("A1").unwrap();
        let xy = |m: &Vec<PbwMonomial>| m.iter().filter(|x| matches!(x.part, PbwPart::XY { .. })).count();
        let zero = enumerate_pbw(&a1, &TypeSequence::uniform(1, false), 3, 0);
        assert_eq!(xy(&zero), 1);
        let ones = enumerate_pbw(&a1, &TypeSequence::uniform(1, true), 2, 0);
        assert_eq!(xy(&ones), 6);
        let a3 = CartanData::from_name("A3").unwrap();
        let d = TypeSequence::parse("101|000", 3).unwrap();
        let m = enumerate_pbw(&a3, &d, 2, 0);
        let shapes: BTreeSet<Vec<usize>> = m
            .iter()
            .filter_map(|x| match &x.part {
                PbwPart::XY { x, y } => Some(x.iter().map(|v| v.len()).chain(y.iter().map(|v| v.len())).collect()),
                _ => None,
            })
            .collect();
        assert_eq!(shapes, BTreeSet::from([vec![1, 1]]));
    }

    #[test]
    fn ranks() {
        let q = quotient("A1", 4);
        let xs = [el(&q, "E1*F1"), el(&q, "F1*E1"), el(&q, "E1*F1 - F1*E1")];
        assert_eq!(exact_rank(&xs), 2);
        assert_eq!(rank_at(&xs, &crate::coeff::rat(5, 3)).unwrap(), 2);
    }

    #[test]
    fn xy_counts_a1() {
        let c = CartanData::from_name("A1").unwrap();
        let d = TypeSequence::uniform(1, true);
        let s = RewriteSystem::build(&Presentation::build(&c, &d), Variant::Base, 6).unwrap();
        let r = xy_count_report(&s, 4).unwrap();
        assert!(r.pass(), "{}", r.to_text());
    }
}
