mod common;

use common::*;
use trimtor::dgproducts::{d_constant, full_table, product, verify_leibniz, DConstant};
use trimtor::resolution::trimmed_resolution;

type Row<'a> = &'a [(&'a str, &'a str)];

#[test]
fn example_product_a() {
    let f = f2();
    let td = trimmed_resolution(&example_matrix(), 1).unwrap();
    let cases: &[(&str, &str, Row)] = &[
        ("e2", "e3", &[("f4", "z"), ("f5", "x"), ("v1_13", "1")]),
        ("e2", "e4", &[("f3", "z")]),
        ("e2", "e5", &[("f1", "y"), ("f3", "x")]),
        ("e3", "e4", &[("f1", "y"), ("f2", "z")]),
        ("e3", "e5", &[("f1", "z"), ("f2", "x")]),
        ("e4", "e5", &[("f1", "x")]),
    ];
    for (x, y, expected) in cases {
        let got = product(&td, basis(x), basis(y)).unwrap();
        assert_eq!(got, element(f, 2, expected), "{x}*{y} = {got}");
        assert_eq!(product(&td, basis(y), basis(x)).unwrap(), got.neg());
    }
    for i in 2..=5 {
        let e = basis(&format!("e{i}"));
        assert!(product(&td, e, e).unwrap().is_zero());
    }
    assert_eq!(product(&td, basis("e2"), basis("e3")).unwrap().to_string(), "z*f4 + x*f5 + v1_13");
}

#[test]
fn example_product_b() {
    let f = f2();
    let td = trimmed_resolution(&example_matrix(), 1).unwrap();
    let table: &[(&str, [Row; 3])] = &[
        ("e2", [&[("f5", "x*y"), ("v1_13", "y")], &[("f5", "y^2"), ("v1_23", "y")], &[("f5", "y*z")]]),
        (
            "e3",
            [
                &[("f4", "x*y"), ("f5", "x*z"), ("v1_13", "z")],
                &[("f4", "y^2"), ("f5", "y*z"), ("v1_12", "y"), ("v1_23", "z")],
                &[("f4", "y*z"), ("f5", "z^2"), ("v1_13", "y")],
            ],
        ),
        (
            "e4",
            [
                &[("f3", "x*y"), ("f5", "x^2"), ("v1_13", "x")],
                &[("f3", "y^2"), ("f5", "x*y"), ("v1_23", "x")],
                &[("f3", "y*z"), ("f5", "x*z")],
            ],
        ),
        (
            "e5",
            [
                &[("f2", "x*y"), ("f3", "x*z"), ("f4", "x^2")],
                &[("f2", "y^2"), ("f3", "y*z"), ("f4", "x*y"), ("v1_12", "x")],
                &[("f2", "y*z"), ("f3", "z^2"), ("f4", "x*z"), ("v1_13", "x")],
            ],
        ),
    ];
    for (e, row) in table {
        for (l, expected) in row.iter().enumerate() {
            let u = basis(&format!("u1_{}", l + 1));
            let got = product(&td, basis(e), u).unwrap();
            assert_eq!(got, element(f, 2, expected), "{e}*{u} = {got}");
        }
    }
}

#[test]
fn example_product_e() {
    let f = f2();
    let td = trimmed_resolution(&example_matrix(), 1).unwrap();
    for i in 2..=5 {
        for j in 1..=5 {
            let got = product(&td, basis(&format!("e{i}")), basis(&format!("f{j}"))).unwrap();
            let expected = if i == j { element(f, 3, &[("g", "1")]) } else { element(f, 3, &[]) };
            assert_eq!(got, expected, "e{i}*f{j}");
        }
    }
}

#[test]
fn example_constants() {
    let td = trimmed_resolution(&example_matrix(), 1).unwrap();
    let t = td.matrix();
    for i in 1..=5 {
        for j in 1..=5 {
            let two = |a, b| d_constant(&td, DConstant::Two { k: 1, i, j }, a, b).unwrap();
            assert!(two(1, 2).is_zero());
            assert!(two(2, 3).is_zero());
            assert_eq!(two(1, 3), t.pfaffian_drop(&[i, j, 5, 4, 1]).unwrap(), "({i},{j})");
            assert_eq!(two(3, 1), two(1, 3).neg());
            let three = |l, a, b| d_constant(&td, DConstant::Three { k: 1, i: 1, j, l }, a, b).unwrap();
            assert!(three(1, 1, 2).is_zero());
            assert!(three(3, 1, 2).is_zero());
            assert_eq!(three(2, 1, 2), t.pfaffian_drop(&[1, j, 4]).unwrap());
            assert_eq!(three(1, 1, 3), t.pfaffian_drop(&[1, j, 5]).unwrap());
        }
    }
    assert_eq!(d_constant(&td, DConstant::Two { k: 1, i: 2, j: 3 }, 1, 3).unwrap(), poly(f2(), "1"));
    assert!(d_constant(&td, DConstant::Two { k: 2, i: 2, j: 3 }, 1, 3).is_err());
    assert!(d_constant(&td, DConstant::Two { k: 1, i: 2, j: 3 }, 2, 2).is_err());
}

#[test]
fn example_satisfies_leibniz() {
    let td = trimmed_resolution(&example_matrix(), 1).unwrap();
    let table = full_table(&td);
    let report = verify_leibniz(&td, &table);
    assert!(report.ok(), "{report}");
    assert!(table.commutativity_failures().is_empty());
}

#[test]
fn deleting_the_correction_term_breaks_leibniz() {
    let td = trimmed_resolution(&example_matrix(), 1).unwrap();
    let mut table = full_table(&td);
    let mut e23 = table.get(basis("e2"), basis("e3"));
    e23.remove_term(&basis("v1_13"));
    table.insert(basis("e2"), basis("e3"), e23);
    let report = verify_leibniz(&td, &table);
    assert!(report.violations.iter().any(|v| (v.x, v.y) == (basis("e2"), basis("e3"))), "{report}");
}
