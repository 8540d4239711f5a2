use super::*;
use crate::algebra::TypeSequence;
use crate::cartan::CartanData;
use crate::syntax::parse_element;

fn system(name: &str, d: &str, bound: usize) -> RewriteSystem {
    let c = CartanData::from_name(name).unwrap();
    let d = TypeSequence::parse(d, c.n).unwrap();
    RewriteSystem::build(&Presentation::build(&c, &d), Variant::Base, bound).unwrap()
}

fn nf(sys: &RewriteSystem, text: &str) -> String {
    let x = parse_element(text, sys.rank()).unwrap();
    sys.normalize(&x).unwrap().to_string()
}

#[test]
fn orientation_examples() {
    let c = CartanData::from_name("A1").unwrap();
    let p = Presentation::build(&c, &TypeSequence::uniform(1, true));
    let sys = RewriteSystem::orient(Arc::new(p), Variant::Base).unwrap();
    let shown: Vec<String> = sys
        .rules()
        .iter()
        .map(|r| format!("{} -> {}", r.lhs, r.rhs))
        .collect();
    assert!(shown.contains(&"K1*Kb1 -> J".to_string()), "{shown:?}");
    assert!(shown.contains(&"J*J -> J".to_string()), "{shown:?}");
    assert!(
        shown.contains(&"E1*F1 -> F1*E1 + (q - q^-1)^-1*K1 - (q - q^-1)^-1*Kb1".to_string()),
        "{shown:?}"
    );
}

#[test]
fn zero_relation_is_rejected() {
    let c = CartanData::from_name("A1").unwrap();
    let mut p = Presentation::build(&c, &TypeSequence::uniform(1, true));
    p.relations[0].element = Element::zero();
    assert_eq!(
        RewriteSystem::orient(Arc::new(p), Variant::Base).unwrap_err(),
        RewriteError::ZeroRelation(0)
    );
}

#[test]
fn free_algebra_completion_is_empty() {
    let c = CartanData::from_name("A1").unwrap();
    let mut p = Presentation::build(&c, &TypeSequence::uniform(1, true));
    p.relations.clear();
    let sys = RewriteSystem::build(&p, Variant::Base, 4).unwrap();
    assert!(sys.rules().is_empty());
    let x = parse_element("E1*F1*K1", 1).unwrap();
    assert_eq!(sys.normalize(&x).unwrap(), x);
}

#[test]
fn normal_form_examples() {
    let s11 = system("A1", "1|1", 6);
    assert_eq!(nf(&s11, "K1*Kb1"), "J");
    assert_eq!(
        nf(&s11, "E1*F1"),
        "F1*E1 + (q - q^-1)^-1*K1 - (q - q^-1)^-1*Kb1"
    );
    let s00 = system("A1", "0|0", 6);
    assert_eq!(nf(&s00, "J*E1"), "E1");
    assert_eq!(nf(&s00, "E1*J"), "E1");
    assert_eq!(nf(&s00, "F1*J"), "F1");
}

#[test]
fn relations_vanish_and_normalize_is_idempotent() {
    for d in TypeSequence::all(1) {
        let c = CartanData::from_name("A1").unwrap();
        let p = Presentation::build(&c, &d);
        let sys = RewriteSystem::build(&p, Variant::Base, 6).unwrap();
        assert_eq!(sys.confluent_up_to(), 6);
        for r in p.elements() {
            assert!(sys.normalize(r).unwrap().is_zero(), "{d}: {r}");
        }
        let x = parse_element("E1*F1*E1 + 3*K1*E1*Kb1 - J*F1*F1*E1", 1).unwrap();
        let once = sys.normalize(&x).unwrap();
        assert_eq!(sys.normalize(&once).unwrap(), once);
    }
}

#[test]
fn overflow_is_reported() {
    let sys = system("A1", "1|1", 3);
    let x = parse_element("E1*E1*F1*F1", 1).unwrap();
    assert!(matches!(
        sys.normalize(&x),
        Err(RewriteError::DegreeOverflow { degree: 4, bound: 3, .. })
    ));
    // torus letters do not count towards the bound
    let y = parse_element("K1*K1*K1*K1*K1*Kb1*E1", 1).unwrap();
    assert!(sys.normalize(&y).is_ok());
}

#[test]
fn bound_below_relations_is_rejected() {
    let c = CartanData::from_name("A2").unwrap();
    let p = Presentation::build(&c, &TypeSequence::uniform(2, true));
    let sys = RewriteSystem::orient(Arc::new(p), Variant::Base).unwrap();
    assert!(matches!(
        sys.complete(2),
        Err(RewriteError::BoundTooSmall { needed: 3, .. })
    ));
}

#[test]
fn quotient_identifies_j_with_one() {
    for d in ["1|1", "0|0", "1|0"] {
        let q = system("A1", d, 5).quotient_j1().unwrap();
        assert_eq!(nf(&q, "K1*Kb1"), "1");
        assert_eq!(nf(&q, "J*E1"), "E1");
        assert_eq!(nf(&q, "J"), "1");
    }
}

#[test]
fn graded_counts_small_cases() {
    let sys = system("A2", "11|11", 4);
    let counts = sys.graded_counts(3);
    assert_eq!(counts[&(vec![0, 0], 0)], 1);
    let e_only: u64 = {
        let mut n = 0;
        sys.for_each_irreducible(2, &[Letter::E(1), Letter::E(2)], |w| {
            if w.multidegree(2) == vec![1, 1] {
                n += 1;
            }
        });
        n
    };
    assert_eq!(e_only, 2);
}

#[test]
fn homogenized_counts_match_oracle_on_a1() {
    let c = CartanData::from_name("A1").unwrap();
    for d in TypeSequence::all(1) {
        let p = Presentation::build(&c, &d);
        let h = RewriteSystem::build(&p, Variant::Homogenized, 4).unwrap();
        let oracle = dimension_oracle(&p, 4, &crate::coeff::rat(5, 3)).unwrap();
        let mut counts: BTreeMap<Vec<i32>, u64> = BTreeMap::new();
        h.for_each_irreducible(4, &h.alphabet(), |w| {
            if w.len() == 4 {
                *counts.entry(w.multidegree(1)).or_insert(0) += 1;
            }
        });
        let oracle: BTreeMap<Vec<i32>, u64> = oracle.into_iter().filter(|x| x.1 > 0).collect();
        assert_eq!(counts, oracle, "{d}");
    }
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let sys = system("A1", "1|0", 5);
    let path = cache_store(dir.path(), &sys).unwrap();
    let back = cache_load(dir.path(), sys.presentation_arc(), Variant::Base, 5)
        .unwrap()
        .unwrap();
    assert_eq!(back.rules(), sys.rules());
    // a different bound is a miss
    assert!(cache_load(dir.path(), sys.presentation_arc(), Variant::Base, 6)
        .unwrap()
        .is_none());
    // a tampered version is an error
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, text.replacen("\"version\":1", "\"version\":3", 1)).unwrap();
    assert!(matches!(
        cache_load(dir.path(), sys.presentation_arc(), Variant::Base, 5),
        Err(CacheError::VersionMismatch { found: 3, .. })
    ));
    std::fs::write(&path, "{not json").unwrap();
    assert!(matches!(
        cache_load(dir.path(), sys.presentation_arc(), Variant::Base, 5),
        Err(CacheError::Corrupt { .. })
    ));
    assert_eq!(cache_info(dir.path()).unwrap().len(), 1);
}
