//! Pinned worked examples through the public API.

use comsc_core::catalog::catalog;
use comsc_core::generators::{
    com_from_arrangement, feasible, Arrangement, Constraint, Rational, Sense,
};
use comsc_core::samples::{enumerate_samples, hats, is_full, lower_covectors, upper_covectors};
use comsc_core::scheme::{alpha, beta, distinguish_f, realizer, verify_scheme};
use comsc_core::vcdim::{independent, shattering_covectors, shatters, vc_dimension};
use comsc_core::{ElementSet, Error, SignSystem, SignVector, TopeGraph};

fn sv(s: &str) -> SignVector {
    SignVector::parse(s).unwrap()
}

fn v(m: &SignSystem, s: &str) -> SignVector {
    m.parse_vector(s).unwrap()
}

fn strs(m: &SignSystem, xs: &[SignVector]) -> Vec<String> {
    let mut out: Vec<String> = xs.iter().map(|x| m.format_vector(x)).collect();
    out.sort();
    out
}

fn set(m: &SignSystem, labels: &[&str]) -> ElementSet {
    m.element_set(labels).unwrap()
}

#[test]
fn sign_vector_algebra() {
    assert_eq!(sv("00").compose(&sv("+-")), sv("+-"));
    assert_eq!(sv("+0-").compose(&sv("-++")), sv("++-"));
    assert_eq!(sv("+-0").compose(&sv("+-0")), sv("+-0"));
    assert_eq!(sv("++").separator(&sv("-+")), ElementSet::from_iter([0]));
    assert!(sv("+0-").separator(&sv("+0-")).is_empty());
    assert_eq!(
        sv("+0-").separator(&sv("-++")),
        ElementSet::from_iter([0, 2])
    );
    assert!(sv("0+").below(&sv("-+")));
    assert!(!sv("+0").below(&sv("-+")));
    assert!(matches!(
        sv("+").try_compose(&sv("++")),
        Err(Error::Dimension { .. })
    ));
}

#[test]
fn classification_examples() {
    let m2 = catalog("om-square").unwrap();
    let c = m2.classify();
    assert!(c.simple && c.com && c.om && c.ample);
    let e = catalog("ample-e311").unwrap();
    let c = e.classify();
    assert!(c.com && !c.om && c.ample);
    let pair = SignSystem::from_strings(&["1", "2"], &["++", "--"]).unwrap();
    assert!(!pair.classify().com);
}

#[test]
fn deletion_faces_and_simplification() {
    let m2 = catalog("om-square").unwrap();
    let m3 = catalog("om-hexagon").unwrap();
    assert_eq!(m2.delete(ElementSet::EMPTY).unwrap(), m2);
    let d = m2.delete(set(&m2, &["2"])).unwrap();
    assert_eq!(strs(&d, d.covectors()), ["+", "-", "0"]);
    assert_eq!(m3.delete(set(&m3, &["3"])).unwrap(), m2);

    assert_eq!(m2.face(&m2.zero_vector()).unwrap().len(), 9);
    assert_eq!(
        strs(&m2, &m2.face(&v(&m2, "+0")).unwrap()),
        ["++", "+-", "+0"]
    );
    let t = m2.topes()[0];
    assert_eq!(m2.face(&t).unwrap(), vec![t]);
    assert!(m2.parse_vector("+").is_err());
    assert!(m2.face(&sv("+")).is_err());

    let s = m2.simplify(&v(&m2, "+0")).unwrap();
    assert_eq!(s.ground_labels(), ["2"]);
    assert_eq!(strs(&s, s.covectors()), ["+", "-", "0"]);
    let s = m2.simplify(&t).unwrap();
    assert!(s.ground().is_empty());
    assert_eq!(s.covectors().len(), 1);

    let p4 = catalog("com-p4").unwrap();
    let cycle = p4.simplify(&v(&p4, "00++")).unwrap();
    assert_eq!(cycle.ground_labels(), ["1", "2"]);
    assert_eq!(cycle.covectors().len(), 9);
}

#[test]
fn topes_cocircuits_circuits() {
    let m2 = catalog("om-square").unwrap();
    let m3 = catalog("om-hexagon").unwrap();
    assert_eq!(m2.topes().len(), 4);
    assert_eq!(m3.topes().len(), 6);
    assert_eq!(
        strs(&m2, &m2.cocircuits().unwrap()),
        ["+0", "-0", "0+", "0-"]
    );
    assert_eq!(
        strs(&m3, &m3.cocircuits().unwrap()),
        ["+-0", "+0+", "-+0", "-0-", "0++", "0--"]
    );
    assert!(m2.circuits().unwrap().circuits.is_empty());
    assert_eq!(strs(&m3, &m3.circuits().unwrap().circuits), ["++-", "--+"]);
    let e = catalog("ample-e311").unwrap();
    assert!(matches!(e.cocircuits(), Err(Error::Precondition(_))));
}

#[test]
fn tope_graph_examples() {
    let m3 = catalog("om-hexagon").unwrap();
    let g3 = TopeGraph::build(&m3).unwrap();
    assert_eq!((g3.vertex_count(), g3.edge_count()), (6, 6));
    assert!(g3.is_partial_cube() && g3.is_antipodal());
    let c = g3.contract(set(&m3, &["3"])).unwrap();
    assert_eq!((c.vertex_count(), c.edge_count()), (4, 4));

    let e = catalog("ample-e311").unwrap();
    let ge = TopeGraph::build(&e).unwrap();
    assert!(ge.is_partial_cube() && !ge.is_antipodal());
    assert_eq!(ge.edge_count(), 9);
    let r = ge.region(&v(&e, "00---")).unwrap();
    assert_eq!(r.vertices.len(), 4);
    assert_eq!(e.format_vector(&r.lower), "00-00");
    assert_eq!(e.format_vector(&r.upper), "00---");
    let gate = ge.gate(&e, &v(&e, "+++00"), &v(&e, "-----")).unwrap();
    assert_eq!(e.format_vector(&gate), "+++--");
    let h1 = ge.contract(set(&e, &["1", "2"])).unwrap();
    let image: std::collections::HashSet<SignVector> =
        r.vertices.iter().map(|t| t.restrict(h1.ground())).collect();
    assert_eq!(image.len(), 1);

    let m2 = catalog("om-square").unwrap();
    let g2 = TopeGraph::build(&m2).unwrap();
    let whole = g2.region(&m2.zero_vector()).unwrap();
    assert!(whole.lower.is_zero() && whole.upper.is_zero());
    assert_eq!(
        g2.gate(&m2, &v(&m2, "+0"), &v(&m2, "--")).unwrap(),
        v(&m2, "+-")
    );

    let bad =
        TopeGraph::from_vertices(vec!["1".into(), "2".into()], vec![sv("++"), sv("--")]).unwrap();
    assert!(!bad.is_partial_cube());
}

#[test]
fn shattering_examples() {
    let m2 = catalog("om-square").unwrap();
    let m3 = catalog("om-hexagon").unwrap();
    let e = catalog("ample-e311").unwrap();
    let r3 = catalog("om-r3-planes4").unwrap();
    let p4 = catalog("com-p4").unwrap();
    let g = |m: &SignSystem| TopeGraph::build(m).unwrap();
    assert!(shatters(&g(&m2), m2.ground()).unwrap().is_shattered());
    assert!(!shatters(&g(&m3), m3.ground()).unwrap().is_shattered());
    assert!(shatters(&g(&m3), ElementSet::EMPTY).unwrap().is_shattered());
    assert_eq!(vc_dimension(&g(&e)), 2);
    assert_eq!(vc_dimension(&g(&r3)), 3);
    assert!(independent(&m3, set(&m3, &["1", "2"])).unwrap());
    assert!(!independent(&m3, m3.ground()).unwrap());
    assert!(independent(&m3, ElementSet::EMPTY).unwrap());

    let h = shattering_covectors(&p4, set(&p4, &["1", "2"])).unwrap();
    assert_eq!(strs(&p4, &h), ["00++"]);
    let h = shattering_covectors(&m2, set(&m2, &["1"])).unwrap();
    assert_eq!(strs(&m2, &h), ["0+", "0-"]);
    assert_eq!(
        shattering_covectors(&p4, ElementSet::EMPTY).unwrap(),
        p4.topes()
    );
    assert!(shattering_covectors(&m3, m3.ground()).unwrap().is_empty());
}

#[test]
fn sample_examples() {
    let m2 = catalog("om-square").unwrap();
    let e = catalog("ample-e311").unwrap();
    let p4 = catalog("com-p4").unwrap();
    assert_eq!(enumerate_samples(&m2).unwrap().len(), 9);
    assert!(is_full(&e, &v(&e, "00---")).unwrap());
    assert!(!is_full(&e, &v(&e, "00-00")).unwrap());
    for t in e.topes() {
        assert!(is_full(&e, &t).unwrap());
    }
    let h = hats(&e, &v(&e, "+++00"), &v(&e, "++++0")).unwrap();
    assert_eq!(e.format_vector(&h.hat), "++++0");
    assert_eq!(h.doublehat.format_on(set(&e, &["4", "5"])), "+0");

    let low = lower_covectors(&p4, &v(&p4, "+++0")).unwrap();
    assert_eq!(strs(&p4, &low), ["++00", "00+0"]);
    let low = lower_covectors(&m2, &v(&m2, "++")).unwrap();
    assert_eq!(strs(&m2, &low), ["+0", "0+"]);
    let up = upper_covectors(&p4, &v(&p4, "+++0"), &v(&p4, "00+0")).unwrap();
    assert_eq!(strs(&p4, &up.localized), ["00++"]);
}

#[test]
fn scheme_examples() {
    let m2 = catalog("om-square").unwrap();
    let m3 = catalog("om-hexagon").unwrap();
    let p4 = catalog("com-p4").unwrap();
    assert_eq!(distinguish_f(&m2, &v(&m2, "++")).unwrap(), m2.ground());
    assert_eq!(
        distinguish_f(&m3, &v(&m3, "+++")).unwrap(),
        set(&m3, &["1", "2"])
    );

    let a = alpha(&p4, &v(&p4, "+++0")).unwrap();
    let b = alpha(&p4, &v(&p4, "++0+")).unwrap();
    assert_eq!(p4.format_vector(&a.value), "++00");
    assert_eq!(a, b);
    assert_eq!(p4.format_vector(&beta(&p4, &a.value).unwrap()), "++++");
    assert_eq!(
        m2.format_vector(&alpha(&m2, &v(&m2, "++")).unwrap().value),
        "++"
    );
    assert_eq!(m2.format_vector(&beta(&m2, &v(&m2, "++")).unwrap()), "++");
    assert!(alpha(&p4, &p4.zero_vector()).unwrap().value.is_zero());
    assert_eq!(beta(&p4, &p4.zero_vector()).unwrap(), p4.topes()[0]);

    let r = realizer(&p4, &v(&p4, "00++"), &v(&p4, "++00")).unwrap();
    assert_eq!(strs(&p4, &r.class), ["++00"]);
    assert_eq!(strs(&p4, &r.realizer), ["++00"]);
    assert!(matches!(
        beta(&m3, &v(&m3, "++-")),
        Err(Error::Reconstruction(_))
    ));

    let rep = verify_scheme(&m2).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.samples, 9);
}

#[test]
fn arrangement_examples() {
    let q = |n: i64| Rational::from_int(n);
    let x = |a: i64, b: i64| Constraint::new(vec![q(a).0], q(b).0);
    let w = feasible(1, &[], &[x(1, 0), x(-1, -1)]).unwrap().unwrap();
    assert_eq!(Rational(w[0].clone()), Rational::new(1, 2).unwrap());
    assert!(feasible(1, &[], &[x(1, 0), x(-1, 0)]).unwrap().is_none());
    let sum = Constraint::new(vec![q(1).0, q(1).0], q(1).0);
    let pos = |i: usize| {
        let mut a = vec![q(0).0, q(0).0];
        a[i] = q(1).0;
        Constraint::new(a, q(0).0)
    };
    assert!(feasible(2, &[sum], &[pos(0), pos(1)]).unwrap().is_some());

    let m2 = com_from_arrangement(&Arrangement::central(2, &[&[1, 0], &[0, 1]])).unwrap();
    assert_eq!(m2, catalog("om-square").unwrap());
    let m3 = com_from_arrangement(&Arrangement::central(2, &[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
    assert_eq!(m3.covectors().len(), 13);
    assert_eq!(m3.cocircuits().unwrap().len(), 6);
    let parallel = Arrangement::central(2, &[&[1, 0], &[2, 0]]);
    assert!(matches!(
        com_from_arrangement(&parallel),
        Err(Error::Generation(_))
    ));
    let empty = Arrangement::central(1, &[&[1]])
        .with_window(&[1], Sense::Less, q(0))
        .with_window(&[1], Sense::Greater, q(1));
    assert!(matches!(
        com_from_arrangement(&empty),
        Err(Error::Generation(_))
    ));
}

#[test]
fn json_round_trips() {
    for name in comsc_core::catalog::NAMES {
        let m = catalog(name).unwrap();
        assert_eq!(SignSystem::from_json(&m.to_json()).unwrap(), m);
    }
    let bad = r#"{"ground": ["1", "2"], "covectors": ["+x"]}"#;
    assert!(matches!(
        SignSystem::from_json(bad),
        Err(Error::Parse { .. })
    ));
    let arr = comsc_core::catalog::catalog_arrangement("ample-e311")
        .unwrap()
        .0;
    assert_eq!(Arrangement::from_json(&arr.to_json()).unwrap(), arr);
    assert!(Arrangement::from_json(
        r#"{"dim": 1, "hyperplanes": [{"a": [0.5], "b": 0, "label": "1"}]}"#
    )
    .is_err());
}
