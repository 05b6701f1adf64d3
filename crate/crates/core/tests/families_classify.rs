mod common;

use common::*;
use trimtor::classify::{check_conjectures, classify, conjugate_trim_set, tor_products, TorClass};
use trimtor::families::{band_matrix, build_family, family_checks, FamilyKind, FamilySpec};
use trimtor::resolution::trimmed_resolution;

#[test]
fn band_matrix_corner() {
    let f = f2();
    assert_eq!(band_matrix(f, 2), matrix(f, &[&["x", "z"], &["z", "y^2"]]));
    assert_eq!(band_matrix(f, 1), matrix(f, &[&["z"]]));
}

#[test]
fn example_classification() {
    let rep = classify(&example_matrix(), 1).unwrap();
    assert_eq!(rep.format, [1, 5, 6, 2]);
    assert_eq!(rep.class, TorClass::NotG);
    assert_eq!(rep.minor_witness, Some((2, 3, 1)));
    let tor = tor_products(&trimmed_resolution(&example_matrix(), 1).unwrap());
    assert!(tor.has_degree_one_products(), "{tor}");
    assert_eq!(tor.g_rank(), None);
    println!("{tor}");
}

#[test]
fn odd_family_s1() {
    let rep = family_checks(FamilySpec::new(FamilyKind::Odd, 1).unwrap(), f2()).unwrap();
    println!("{}", serde_json::to_string(&rep).unwrap());
    assert!(rep.all_pass());
    let (t, trim) = build_family(FamilySpec { kind: FamilyKind::Odd, s: 1 }, f2()).unwrap();
    let td = trimmed_resolution(&t, trim).unwrap();
    let tor = tor_products(&td);
    assert_eq!(tor.g_rank(), Some(2), "{tor}");
    assert!(tor.normal_form().unwrap().is_standard_g_table(2));
    let c = check_conjectures(&rep.report).unwrap();
    assert!(c.all_hold());
}

#[test]
fn families_match_closed_forms() {
    for (kind, s) in [(FamilyKind::Odd, 2), (FamilyKind::Even, 2), (FamilyKind::Even, 3), (FamilyKind::Odd, 3)] {
        let rep = family_checks(FamilySpec::new(kind, s).unwrap(), f2()).unwrap();
        assert!(rep.all_pass(), "{kind:?} {s}: {}", serde_json::to_string(&rep).unwrap());
    }
    assert!(FamilySpec::new(FamilyKind::Even, 1).is_err());
}

#[test]
fn conjugation() {
    let t = example_matrix();
    let (same, order) = conjugate_trim_set(&t, &[1]).unwrap();
    assert_eq!(order, [1, 2, 3, 4, 5]);
    assert_eq!(same.to_poly_matrix(), t.to_poly_matrix());
    let (c, order) = conjugate_trim_set(&t, &[3]).unwrap();
    assert_eq!(order[0], 3);
    assert_eq!(c.pfaffian_drop(&[1]).unwrap(), poly(f2(), "x*y + z^2"));
    assert!(conjugate_trim_set(&t, &[]).is_err());
}
