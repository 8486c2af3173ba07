use eqcodes::construct::{bound_e_q3, extract_family, least_subspace, liftable_size};
use eqcodes::lincode::{check_lemma_suite, structure_analysis, Axiom};
use eqcodes::{
    fano_code, field, grassmannian, sts_lift, sunflower, sunflower_code_binary, trim_family, verify_linear,
    IntersectingFamily, LiftMode, LinearCode,
};

#[test]
fn plane_family_lifts_to_table_one_sizes() {
    for (q, size) in [(2, 8), (3, 8), (4, 16), (5, 32)] {
        let f = field(q).unwrap();
        let fam = IntersectingFamily::new(&f, 3, 2, 1, grassmannian(&f, 3, 2).unwrap()).unwrap();
        let trimmed = trim_family(&fam, bound_e_q3(q) as usize - 1).unwrap();
        let code = sts_lift(&trimmed, LiftMode::Boolean).unwrap();
        assert_eq!(code.size(), size);
        assert!(verify_linear(&code).unwrap().pass);
        let s = structure_analysis(&code).unwrap();
        assert!(s.equidistant && s.pass);
        assert_eq!(s.constant_distance, Some(2));
    }
}

#[test]
fn every_construction_survives_json() {
    let f2 = field(2).unwrap();
    let fam = sunflower(&f2, 5, &least_subspace(&f2, 5, 1).unwrap(), 2).unwrap().family;
    let codes = vec![
        fano_code(),
        sunflower_code_binary(4).unwrap(),
        sts_lift(&fam, LiftMode::Boolean).unwrap(),
        sts_lift(&fam, LiftMode::BoseSkolem).unwrap(),
    ];
    for c in codes {
        let back = LinearCode::from_json(&c.to_json()).unwrap();
        assert_eq!(back.codewords(), c.codewords());
        assert_eq!(back.table(), c.table());
        assert_eq!(verify_linear(&back).unwrap(), verify_linear(&c).unwrap());
    }
}

#[test]
fn bose_lift_isolates_associativity() {
    let f2 = field(2).unwrap();
    let fam = sunflower(&f2, 5, &least_subspace(&f2, 5, 1).unwrap(), 2).unwrap().family;
    let r = verify_linear(&sts_lift(&fam, LiftMode::BoseSkolem).unwrap()).unwrap();
    assert_eq!(r.failed(), vec![Axiom::Associativity]);
    let x = r.check(Axiom::Associativity).counterexample.clone().unwrap();
    assert_eq!(x.len(), 3);
}

#[test]
fn forward_then_back_for_sunflower_codes() {
    for n in 3..=6 {
        let code = sunflower_code_binary(n).unwrap();
        assert!(check_lemma_suite(&code).unwrap().pass);
        let fam = extract_family(&code).unwrap();
        assert_eq!(fam.len(), code.size() - 1);
        let back = sts_lift(&trim_family(&fam, liftable_size(fam.len())).unwrap(), LiftMode::Boolean).unwrap();
        assert_eq!(back.size(), code.size());
        assert!(verify_linear(&back).unwrap().pass);
    }
}
