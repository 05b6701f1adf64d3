mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trimtor::dgproducts::{full_table, verify_leibniz};
use trimtor::families::random_skew_matrix;
use trimtor::resolution::{TrimSource, TrimmedData};
use trimtor::Field;

fn run(field: Field, m: usize, trials: u64, min_deg: u32, max_deg: u32) {
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 * m as u64 + trial);
        let t_matrix = random_skew_matrix(field, m, min_deg, max_deg, &mut rng);
        let src = TrimSource::new(&t_matrix).unwrap();
        for t in 1..=m {
            let td = TrimmedData::new(src.clone(), t).unwrap();
            let table = full_table(&td);
            let report = verify_leibniz(&td, &table);
            assert!(report.ok(), "field {field} m {m} trial {trial} t {t}\n{}\n{report}", t_matrix.to_poly_matrix());
            assert!(table.commutativity_failures().is_empty());
        }
    }
}

#[test]
fn leibniz_f2() {
    run(Field::prime(2).unwrap(), 5, 20, 1, 2);
    run(Field::prime(2).unwrap(), 7, 5, 1, 2);
}

#[test]
fn leibniz_f3() {
    run(Field::prime(3).unwrap(), 5, 20, 1, 3);
    run(Field::prime(3).unwrap(), 7, 5, 1, 2);
}

#[test]
fn leibniz_f5() {
    run(Field::prime(5).unwrap(), 5, 20, 1, 2);
    run(Field::prime(5).unwrap(), 7, 5, 1, 2);
}

#[test]
fn leibniz_f5_quadratic_entries() {
    run(Field::prime(5).unwrap(), 5, 10, 2, 2);
}

#[test]
fn leibniz_rational() {
    run(Field::Rational, 5, 10, 1, 2);
    run(Field::Rational, 7, 3, 1, 2);
}

#[test]
fn leibniz_f7_m9() {
    run(Field::prime(7).unwrap(), 9, 1, 1, 1);
}
