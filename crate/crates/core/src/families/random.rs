use rand::Rng;

use crate::pfaffian::SkewMatrix;
use crate::polyring::{Field, FieldElement, Monomial, Polynomial};

/// A sparse polynomial with 0 to 3 terms, each of a degree drawn uniformly
/// from `min_degree..=max_degree` (min_degree ≥ 1).
pub fn random_polynomial<R: Rng + ?Sized>(field: Field, min_degree: u32, max_degree: u32, rng: &mut R) -> Polynomial {
    assert!(min_degree >= 1 && min_degree <= max_degree, "degree range must lie in 1..");
    let terms = rng.random_range(0..=3);
    Polynomial::from_terms(
        field,
        (0..terms).map(|_| {
            let d = rng.random_range(min_degree..=max_degree);
            let a = rng.random_range(0..=d);
            let b = rng.random_range(0..=d - a);
            let c = match field {
                Field::Prime { p } => FieldElement::from_i64(field, rng.random_range(1..p) as i64),
                Field::Rational => {
                    let v = rng.random_range(1..=3i64);
                    FieldElement::from_i64(field, if rng.random_bool(0.5) { v } else { -v })
                }
            };
            (Monomial::new([a, b, d - a - b]), c)
        }),
    )
}

/// A random skew-symmetric m×m matrix with entries from [`random_polynomial`].
pub fn random_skew_matrix<R: Rng + ?Sized>(field: Field, m: usize, min_degree: u32, max_degree: u32, rng: &mut R) -> SkewMatrix {
    let mut upper = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            upper.push((i, j, random_polynomial(field, min_degree, max_degree, rng)));
        }
    }
    SkewMatrix::from_upper(field, m, upper).expect("entries lie in the maximal ideal")
}
