//! Worked examples exercised through the public API.

mod common;

use common::*;
use gwa_kit::*;

#[test]
fn listing_matches_golden_file() {
    let a = additive(&[("0", 1), ("1", 2), ("3", 1)]);
    assert_eq!(classify_simples(&a).text(), include_str!("golden/simples_z_z1sq_z3.txt"));
}

#[test]
fn single_orbit_listings() {
    let text = classify_simples(&additive(&[("0", 2)])).text();
    assert_eq!(text, "M_0^- = A/(zA + xA)\nM_0^+ = A/((z - 1)A + yA)<-1>\n");
    let text = classify_simples(&additive(&[("5", 1)])).text();
    assert!(text.starts_with("M_5^- = ") && text.lines().nth(1).unwrap().starts_with("M_5^+ = "));
}

#[test]
fn graded_dimensions() {
    let z2 = additive(&[("0", 2)]);
    let minus2 = IndecomposableDescriptor { sign: Sign::Minus, alpha: q("0"), length: 2, shift: 0 };
    assert_eq!(graded_dim(&z2, &minus2, 0).unwrap(), 2);
    assert_eq!(graded_dim(&z2, &minus2, 1).unwrap(), 0);

    let generic = SimpleDescriptor { kind: SimpleKind::Nondegenerate { lambda: q("1/3") }, shift: 0 };
    for i in -3..=3 {
        assert_eq!(graded_dim(&z2, &generic, i).unwrap(), 1);
    }

    let one_orbit = additive(&[("0", 1), ("1", 2), ("3", 1)]);
    let interval = SimpleDescriptor { kind: SimpleKind::Interval { alpha: q("0"), index: 2 }, shift: 0 };
    let dims: Vec<u64> = (-4..=5).map(|i| graded_dim(&one_orbit, &interval, i).unwrap()).collect();
    assert_eq!(dims, vec![0, 0, 0, 0, 0, 0, 1, 1, 0, 0]);
}

#[test]
fn support_points() {
    let z2 = additive(&[("0", 2)]);
    let minus = |shift| SimpleDescriptor { kind: SimpleKind::Minus { alpha: q("0") }, shift };
    let plus = |shift| SimpleDescriptor { kind: SimpleKind::Plus { alpha: q("0") }, shift };
    assert_eq!(support_point(&z2, &minus(-3)).unwrap().point, q("-3"));
    assert_eq!(support_point(&z2, &minus(0)).unwrap().point, q("0"));
    for n in -2..=2 {
        assert_eq!(support_point(&z2, &minus(n)).unwrap(), support_point(&z2, &plus(n)).unwrap());
    }
}

#[test]
fn translation_examples() {
    let a = multiplicative("2", &[("1", 1), ("2", 2), ("8", 1)]);
    let shift = Move { part: MovePart::ShiftDown, root: q("8"), target: q("4") };
    assert!(legal_moves(&a).contains(&shift));
    let b = a.with_f(apply_move(&a, &shift).unwrap().new_f).unwrap();
    assert_eq!(b.f(), &factored(&[("1", 1), ("2", 2), ("4", 1)]));
    let collapse = Move { part: MovePart::Collapse, root: q("4"), target: q("2") };
    let out = apply_move(&b, &collapse).unwrap();
    assert_eq!(out.new_f, factored(&[("1", 1), ("2", 3)]));
    assert_eq!(out.equivalence_level, EquivalenceLevel::Qgrmod);

    let one_orbit = additive(&[("0", 1), ("1", 2), ("3", 1)]);
    assert_eq!(normalize(&one_orbit).unwrap().canonical.f(), &factored(&[("0", 4)]));
}

#[test]
fn morita_examples() {
    let a = additive(&[("0", 1), ("3", 1)]);
    let report = morita_context(&a, &q("3")).unwrap();
    assert_eq!(report.f_prime, factored(&[("0", 1), ("2", 1)]));
    assert!(report.is_progenerator && report.d.is_one());

    let b = additive(&[("0", 1), ("1", 1)]);
    let report = morita_context(&b, &q("1")).unwrap();
    assert_eq!(report.d, Poly::linear(&q("1")));
    assert!(!report.is_progenerator);
    assert_eq!(morita_context(&b, &q("7")), Err(Error::NotARoot(q("7"))));
}

#[test]
fn projective_examples() {
    let a = additive(&[("0", 2), ("1/2", 1)]);
    let own = StructureConstants::of_algebra();
    let c0 = validate_sc(&a, 0, 0, vec![Poly::z().pow(2)]).unwrap();
    assert!(is_projective_sc(&a, &c0));
    assert!(surjects(&a, &own, Sign::Plus, &q("0"), 1, 1).unwrap());
    assert!(sc_iso(&own, &validate_sc(&a, -1, 0, vec![a.sigma_f(-1).monic(), Poly::one()]).unwrap()));

    let z2 = additive(&[("0", 2)]);
    let all_tail = FactorProfile { from: 0, to: -1, entries: vec![] };
    assert_eq!(from_profile(&z2, &all_tail).unwrap(), own);
    let rep = canonical_rep(&z2, &own, -2);
    assert_eq!(rep[0].1, &z2.sigma_f(-2).monic() * &z2.sigma_f(-1).monic());
}

#[test]
fn json_round_trips() {
    let a = additive(&[("0", 2), ("1/2", 1)]);
    let spec: GwaSpec =
        serde_json::from_str(r#"{"base":"additive","f":[{"root":"0","mult":2},{"root":"1/2","mult":1}]}"#)
            .unwrap();
    assert_eq!(spec.build(false).unwrap(), a);
    assert_eq!(serde_json::to_value(&a).unwrap(), serde_json::to_value(&spec).unwrap());

    let p = involute(&a, &StructureConstants::of_algebra(), &q("1/2"), -1).unwrap();
    let text = serde_json::to_string(&p).unwrap();
    assert_eq!(serde_json::from_str::<StructureConstants>(&text).unwrap(), p);

    let profile = factor_profile(&a, &p, None).unwrap();
    let text = serde_json::to_string(&profile).unwrap();
    assert_eq!(serde_json::from_str::<FactorProfile>(&text).unwrap(), profile);

    let mul = multiplicative("3", &[("1", 1)]);
    let mut r = rng(11);
    let u = random_element(&mut r, &mul, 3);
    let text = serde_json::to_string(&u).unwrap();
    assert_eq!(serde_json::from_str::<GwaElement>(&text).unwrap(), u);

    let b = b_mul(&a, &BElement::generator(2, (1, 0)), &BElement::generator(2, (2, 3))).unwrap();
    let text = serde_json::to_string(&b).unwrap();
    assert_eq!(text, r#"[{"degree":[[0],[3]],"coeff":["1"]}]"#);
    assert_eq!(serde_json::from_str::<BElement>(&text).unwrap(), b);
}
