mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trimtor::classify::{classify, tor_products, TorClass};
use trimtor::dgproducts::{d_constant, full_table, gorenstein_product, product, ChainElement, DConstant};
use trimtor::families::random_skew_matrix;
use trimtor::resolution::{BasisElement, TrimSource, TrimmedData};
use trimtor::{Field, Polynomial};

use BasisElement::{E, F, W};

fn corpus(field: Field, m: usize, count: u64, seed: u64) -> Vec<trimtor::pfaffian::SkewMatrix> {
    (0..count)
        .map(|n| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed + n);
            random_skew_matrix(field, m, 1, 2, &mut rng)
        })
        .collect()
}

fn two(td: &TrimmedData, k: usize, i: usize, j: usize, a: usize, b: usize) -> Polynomial {
    d_constant(td, DConstant::Two { k, i, j }, a, b).unwrap()
}

// The w^j coefficient of e_i·f_j can be read off any of the three v^j
// coordinates of its boundary; all three expressions must agree.
#[test]
fn ef_coefficient_three_expressions_agree() {
    for (field, m) in [(Field::prime(5).unwrap(), 5), (Field::Rational, 5), (Field::prime(3).unwrap(), 7)] {
        for t_matrix in corpus(field, m, 6, 40) {
            let src = TrimSource::new(&t_matrix).unwrap();
            for t in 1..m {
                let td = TrimmedData::new(src.clone(), t).unwrap();
                for i in t + 1..=m {
                    for j in 1..=t {
                        let mut a = Polynomial::zero(field);
                        let mut b = Polynomial::zero(field);
                        let mut c = Polynomial::zero(field);
                        for r in (1..=m).filter(|&r| r != j) {
                            a += &(td.c(r, j, 3) * &two(&td, j, i, r, 1, 2));
                            b -= &(td.c(r, j, 2) * &two(&td, j, i, r, 1, 3));
                            c += &(td.c(r, j, 1) * &two(&td, j, i, r, 2, 3));
                        }
                        assert_eq!(a, b, "{field} m {m} t {t} i {i} j {j}");
                        assert_eq!(a, c, "{field} m {m} t {t} i {i} j {j}");
                        let e = product(&td, E(i), F(j)).unwrap();
                        assert_eq!(e.coefficient(&W(j)), a);
                    }
                }
            }
        }
    }
}

// Dropping the Koszul correction terms from e_i·e_j and e_i·f_j (j > t)
// leaves the product on the untrimmed resolution.
#[test]
fn product_a_reduces_to_gorenstein_product() {
    for (field, m) in [(Field::prime(2).unwrap(), 5), (Field::Rational, 5), (Field::prime(5).unwrap(), 7)] {
        for t_matrix in corpus(field, m, 4, 80) {
            let src = TrimSource::new(&t_matrix).unwrap();
            for t in 1..=m {
                let td = TrimmedData::new(src.clone(), t).unwrap();
                for i in t + 1..=m {
                    for j in t + 1..=m {
                        let mut trimmed = product(&td, E(i), E(j)).unwrap();
                        let koszul: Vec<BasisElement> = trimmed.terms().map(|(b, _)| *b).filter(|b| b.is_koszul()).collect();
                        for b in koszul {
                            trimmed = trimmed.sub(&ChainElement::basis(field, b).scale(&trimmed.coefficient(&b)));
                        }
                        assert_eq!(trimmed, gorenstein_product(&t_matrix, E(i), E(j)).unwrap());
                        assert_eq!(
                            product(&td, E(i), F(j)).unwrap(),
                            gorenstein_product(&t_matrix, E(i), F(j)).unwrap()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn unit_acts_as_identity() {
    let field = Field::prime(3).unwrap();
    for t_matrix in corpus(field, 5, 3, 120) {
        let src = TrimSource::new(&t_matrix).unwrap();
        for t in 1..=5 {
            let td = TrimmedData::new(src.clone(), t).unwrap();
            let table = full_table(&td);
            let one = ChainElement::scalar(Polynomial::one(field));
            for d in 1..=3 {
                for &b in td.complex().basis(d) {
                    let x = ChainElement::basis(field, b);
                    assert_eq!(product(&td, BasisElement::One, b).unwrap(), x);
                    assert_eq!(product(&td, b, BasisElement::One).unwrap(), x);
                    assert_eq!(table.multiply(&one, &x), x);
                    assert_eq!(table.multiply(&x, &one), x);
                }
            }
        }
    }
}

// For m = 5 the minor criterion and the Tor multiplication must agree:
// class G exactly when no two degree-1 classes multiply to a nonzero class.
#[test]
fn m5_minor_criterion_matches_tor_products() {
    let mut seen_not_g = 0;
    let mut seen_g = 0;
    for p in [2, 3, 5] {
        let field = Field::prime(p).unwrap();
        for t_matrix in corpus(field, 5, 25, 200) {
            if t_matrix.generators().iter().all(|y| y.is_zero()) {
                continue;
            }
            let src = TrimSource::new(&t_matrix).unwrap();
            for t in 1..=5 {
                let report = classify(&t_matrix, t).unwrap();
                let td = TrimmedData::new(src.clone(), t).unwrap();
                let tor = tor_products(&td);
                match report.class {
                    TorClass::G(r) => {
                        seen_g += 1;
                        assert!(!tor.has_degree_one_products(), "p {p} t {t}\n{t_matrix:?}");
                        assert_eq!(tor.g_rank(), Some(r), "p {p} t {t}");
                    }
                    TorClass::NotG => {
                        seen_not_g += 1;
                        assert!(tor.has_degree_one_products(), "p {p} t {t}");
                    }
                    TorClass::Undetermined => unreachable!(),
                }
            }
        }
    }
    assert!(seen_g > 0 && seen_not_g > 0);
}
