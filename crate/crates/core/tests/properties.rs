use std::sync::OnceLock;

use proptest::prelude::*;
use weakhopf::algebra::{p_multi, Element, Letter, Presentation, TypeSequence, Word};
use weakhopf::cartan::CartanData;
use weakhopf::coeff::Coeff;
use weakhopf::hopf::{antipode_t, counit, delta, split};
use weakhopf::rewrite::{RewriteSystem, Variant};
use weakhopf::syntax::{laurent, parse_element};

const DSEQS: [&str; 3] = ["11|11", "10|01", "00|00"];

fn systems() -> &'static Vec<RewriteSystem> {
    static S: OnceLock<Vec<RewriteSystem>> = OnceLock::new();
    S.get_or_init(|| {
        let c = CartanData::from_name("A2").unwrap();
        DSEQS
            .iter()
            .map(|d| {
                let p = Presentation::build(&c, &TypeSequence::parse(d, 2).unwrap());
                RewriteSystem::build(&p, Variant::Base, 8).unwrap()
            })
            .collect()
    })
}

fn coeff() -> impl Strategy<Value = Coeff> {
    // ratio of two small Laurent polynomials with a nonzero denominator
    let poly = prop::collection::vec((-2i32..=2, -3i64..=3), 1..=3);
    (poly.clone(), poly).prop_filter_map("zero denominator", |(n, d)| {
        let den = laurent(&d);
        if den.is_zero() {
            None
        } else {
            Some((&laurent(&n) / &den).unwrap())
        }
    })
}

fn word(maxlen: usize) -> impl Strategy<Value = Word> {
    let letters = Letter::alphabet(2);
    prop::collection::vec(prop::sample::select(letters), 0..=maxlen).prop_map(|v| v.into_iter().collect())
}

fn element(maxlen: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec((word(maxlen), coeff()), 1..=3).prop_map(Element::from_terms)
}

fn sys_index() -> impl Strategy<Value = usize> {
    0..DSEQS.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coefficient_field_axioms(a in coeff(), b in coeff(), c in coeff()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn free_product_is_associative(x in element(2), y in element(2), z in element(2)) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn normalize_is_idempotent(k in sys_index(), x in element(4)) {
        let s = &systems()[k];
        let nf = s.normalize(&x).unwrap();
        prop_assert_eq!(s.normalize(&nf).unwrap(), nf.clone());
        for (w, _) in nf.terms() {
            prop_assert!(s.is_irreducible(w));
        }
    }

    #[test]
    fn normalize_respects_products(k in sys_index(), x in element(3), y in element(3)) {
        let s = &systems()[k];
        let direct = s.normalize(&x.mul(&y)).unwrap();
        let staged = s.normalize(&s.normalize(&x).unwrap().mul(&s.normalize(&y).unwrap())).unwrap();
        prop_assert_eq!(direct, staged);
    }

    #[test]
    fn print_parse_round_trip(k in sys_index(), x in element(3)) {
        let s = &systems()[k];
        let nf = s.normalize(&x).unwrap();
        let back = parse_element(&nf.to_string(), 2).unwrap();
        prop_assert_eq!(s.normalize(&back).unwrap(), nf);
    }

    #[test]
    fn delta_is_multiplicative(k in sys_index(), x in element(2), y in element(2)) {
        let s = &systems()[k];
        let lhs = delta(s, &x.mul(&y)).unwrap();
        let rhs = delta(s, &x).unwrap().mul(s, &delta(s, &y).unwrap()).unwrap();
        prop_assert!(lhs.sub(&rhs).is_zero(), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn counit_is_multiplicative(k in sys_index(), x in element(3), y in element(3)) {
        let s = &systems()[k];
        prop_assert_eq!(counit(&s.normalize(&x.mul(&y)).unwrap()), &counit(&x) * &counit(&y));
    }

    #[test]
    fn antipode_reverses_products(k in sys_index(), x in element(2), y in element(2)) {
        let s = &systems()[k];
        let lhs = antipode_t(s, &x.mul(&y)).unwrap();
        let rhs = s.mul(&antipode_t(s, &y).unwrap(), &antipode_t(s, &x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn j_is_central(k in sys_index(), x in element(3)) {
        let s = &systems()[k];
        let j = Element::letter(Letter::J);
        prop_assert_eq!(s.mul(&j, &x).unwrap(), s.mul(&x, &j).unwrap());
    }

    #[test]
    fn split_parts_are_orthogonal(k in sys_index(), x in element(3), y in element(3)) {
        let s = &systems()[k];
        let (xj, xr) = split(s, &x).unwrap();
        let (yj, yr) = split(s, &y).unwrap();
        prop_assert_eq!(xj.add(&xr), s.normalize(&x).unwrap());
        prop_assert!(s.mul(&xj, &yr).unwrap().is_zero());
        prop_assert!(s.mul(&xr, &yj).unwrap().is_zero());
        prop_assert_eq!(split(s, &xj).unwrap().0, xj);
    }

    #[test]
    fn torus_monomials_are_regular(k in sys_index(), s1 in -2i32..=2, s2 in -2i32..=2) {
        let s = &systems()[k];
        let p = p_multi(&[s1, s2]);
        let pinv = p_multi(&[-s1, -s2]);
        let p_nf = s.normalize(&p).unwrap();
        prop_assert_eq!(s.mul_all([&p, &pinv, &p]).unwrap(), p_nf);
        prop_assert_eq!(s.mul_all([&pinv, &p, &pinv]).unwrap(), s.normalize(&pinv).unwrap());
    }

    #[test]
    fn torus_commutes_with_e_up_to_scalar(k in sys_index(), i in 1u8..=2, j in 1u8..=2) {
        // K_i E_j is a single monomial, a Laurent multiple of E_j K_i
        let s = &systems()[k];
        let ki = Element::letter(Letter::K(i));
        let ej = Element::letter(Letter::E(j));
        let lhs = s.mul(&ki, &ej).unwrap();
        let rhs = s.mul(&ej, &ki).unwrap();
        let ratio = lhs.len() == 1 && rhs.len() == 1 && {
            let (wl, cl) = lhs.leading().unwrap();
            let (wr, cr) = rhs.leading().unwrap();
            wl == wr && (cl / cr).unwrap().as_laurent().is_some()
        };
        prop_assert!(ratio, "{} vs {}", lhs, rhs);
    }

    #[test]
    fn derived_commutations(k in sys_index(), i in 1u8..=2, j in 1u8..=2, m in 1u32..=2, n in 1u32..=2) {
        // E_i^m K_j^n = q_i^{-mn a_ij} K_j^n E_i^m, and the mirrored forms for F and Kb
        let s = &systems()[k];
        let c = s.presentation().cartan.clone();
        let e = (c.di(i as usize - 1) as i32) * (m * n) as i32 * c.a[i as usize - 1][j as usize - 1];
        let pow = |l: Letter, p: u32| Element::letter(l).pow(p);
        let cases = [
            (Letter::E(i), Letter::K(j), -e),
            (Letter::E(i), Letter::Kb(j), e),
            (Letter::F(i), Letter::K(j), e),
            (Letter::F(i), Letter::Kb(j), -e),
        ];
        for (x, t, exp) in cases {
            let lhs = s.normalize(&pow(x, m).mul(&pow(t, n))).unwrap();
            let rhs = s.normalize(&pow(t, n).mul(&pow(x, m)).scale(&Coeff::q_pow(exp))).unwrap();
            prop_assert_eq!(lhs, rhs, "{}^{} {}^{}", x, m, t, n);
        }
    }

    #[test]
    fn reflection_preserves_inner_product(
        t in prop::sample::select(vec!["A2", "B2", "G2", "A3", "C3"]),
        i in 0usize..3,
        u in prop::collection::vec(-3i32..=3, 3),
        v in prop::collection::vec(-3i32..=3, 3),
    ) {
        let c = CartanData::from_name(t).unwrap();
        let i = i % c.n;
        let (u, v) = (&u[..c.n], &v[..c.n]);
        prop_assert_eq!(c.inner(&c.reflect(i, u), &c.reflect(i, v)), c.inner(u, v));
        prop_assert_eq!(c.reflect(i, &c.reflect(i, u)), u.to_vec());
    }
}
