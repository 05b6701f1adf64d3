mod common;

use common::{cofactor_det, crossing_sign, matching_pfaffian, sigma3_oracle, sigma5_oracle};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trimtor::classify::{check_conjectures, classify, conjugate_trim_set, TorClass};
use trimtor::families::{build_family, random_skew_matrix, realizability_scan, FamilyKind, FamilySpec, ScanConfig};
use trimtor::io::{parse_matrix, MatrixDocument};
use trimtor::pfaffian::{check_identities, sigma3, sigma5, SkewMatrix};
use trimtor::resolution::{gorenstein_resolution, minimize, verify_diagrams, TrimSource, TrimmedData};
use trimtor::{Field, FieldElement, Monomial, Polynomial};

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::prime(2).unwrap()),
        Just(Field::prime(3).unwrap()),
        Just(Field::prime(5).unwrap()),
        Just(Field::prime(2_147_483_647).unwrap()),
        Just(Field::Rational),
    ]
}

fn polynomial(field: Field, max_degree: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0..=max_degree), (0..=max_degree), (0..=max_degree), -6i64..=6), 0..6).prop_map(move |terms| {
        Polynomial::from_terms(
            field,
            terms
                .into_iter()
                .filter(|(a, b, c, _)| a + b + c <= max_degree)
                .map(|(a, b, c, k)| (Monomial::new([a, b, c]), FieldElement::from_i64(field, k))),
        )
    })
}

fn poly_triple() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    field_strategy().prop_flat_map(|f| (polynomial(f, 4), polynomial(f, 4), polynomial(f, 4)))
}

fn skew(field: Field, m: usize, seed: u64) -> SkewMatrix {
    random_skew_matrix(field, m, 1, 2, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn small_prime() -> impl Strategy<Value = Field> {
    prop_oneof![Just(2u32), Just(3), Just(5)].prop_map(|p| Field::prime(p).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms((a, b, c) in poly_triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn decompose_reassembles((a, _, _) in poly_triple()) {
        let f = &a - &Polynomial::constant(a.constant_term());
        let c = f.decompose_c().unwrap();
        let mut sum = Polynomial::zero(f.field());
        for (l, cl) in c.iter().enumerate() {
            sum += &(cl * &Polynomial::var(f.field(), l + 1));
        }
        prop_assert_eq!(&sum, &f);
        // Deterministic down to the printed form.
        let again = f.decompose_c().unwrap();
        prop_assert_eq!(c.map(|p| p.to_string()), again.map(|p| p.to_string()));
    }

    #[test]
    fn decompose_rejects_units((a, _, _) in poly_triple()) {
        let f = &a + &Polynomial::one(a.field());
        prop_assert_eq!(f.decompose_c().is_err(), !f.constant_term().is_zero());
    }

    #[test]
    fn text_form_round_trips((a, _, _) in poly_triple()) {
        prop_assert_eq!(Polynomial::parse(&a.to_string(), a.field()).unwrap(), a);
    }

    #[test]
    fn pfaffian_squared_is_determinant(field in small_prime(), m in prop_oneof![Just(5usize), Just(7), Just(9)], seed in any::<u64>(), mask in any::<u16>()) {
        let t = skew(field, m, seed);
        let subset: Vec<usize> = (1..=m).filter(|i| mask & (1 << (i - 1)) != 0).take(8).collect();
        let subset = &subset[..subset.len() & !1];
        let pf = t.pfaffian_keep(subset).unwrap();
        let minor = t.to_poly_matrix().submatrix(&subset.iter().map(|i| i - 1).collect::<Vec<_>>(), &subset.iter().map(|i| i - 1).collect::<Vec<_>>());
        prop_assert_eq!(&pf * &pf, cofactor_det(&minor));
    }

    #[test]
    fn memoized_pfaffians_agree(field in field_strategy(), m in prop_oneof![Just(5usize), Just(7)], seed in any::<u64>(), mask in any::<u8>()) {
        let t = skew(field, m, seed);
        let subset: Vec<usize> = (1..=m).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let memo = t.pfaffian_keep(&subset).unwrap();
        prop_assert_eq!(&memo, &t.pfaffian_keep_uncached(&subset).unwrap());
        prop_assert_eq!(&memo, &matching_pfaffian(&t, &subset));
    }

    #[test]
    fn sign_closed_forms_match_crossing_numbers(i in 1usize..=12, j in 1usize..=12, r in 1usize..=12, h in 1usize..=12, k in 1usize..=12) {
        prop_assert_eq!(sigma3(i, j, r).value(), sigma3_oracle(i, j, r));
        prop_assert_eq!(sigma5(i, j, r, h, k).value(), sigma5_oracle(i, j, r, h, k));
    }

    #[test]
    fn single_pfaffian_expansion(field in field_strategy(), seed in any::<u64>(), i in 1usize..=7, j in 1usize..=7) {
        prop_assume!(i != j);
        let m = 7;
        let t = skew(field, m, seed);
        let rest = |drop: &[usize]| -> Vec<usize> { (1..=m).filter(|x| !drop.contains(x)).collect() };
        let mut sum = Polynomial::zero(field);
        for r in (1..=m).filter(|r| ![i, j].contains(r)) {
            let to: Vec<usize> = [j, r].into_iter().chain(rest(&[i, j, r])).collect();
            let s = crossing_sign(&rest(&[i]), &to);
            sum += &(t.entry(j, r) * &matching_pfaffian(&t, &rest(&[i, j, r]))).signed(s);
        }
        prop_assert_eq!(sum, matching_pfaffian(&t, &rest(&[i])));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn identities_hold(field in small_prime(), m in prop_oneof![Just(5usize), Just(7)], seed in any::<u64>()) {
        let report = check_identities(&skew(field, m, seed));
        prop_assert!(report.all_pass(), "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn complexes_and_minimal_ranks(field in small_prime(), m in prop_oneof![Just(5usize), Just(7)], seed in any::<u64>()) {
        let t_matrix = skew(field, m, seed);
        prop_assert!(gorenstein_resolution(&t_matrix).is_complex());
        let src = TrimSource::new(&t_matrix).unwrap();
        for t in 1..=m {
            let td = TrimmedData::new(src.clone(), t).unwrap();
            prop_assert!(td.complex().is_complex());
            prop_assert!(verify_diagrams(&td).ok());
            let minimal = minimize(td.complex());
            prop_assert!(minimal.is_minimal());
            prop_assert!(minimal.is_complex());
            let report = classify(&t_matrix, t).unwrap();
            prop_assert_eq!(minimal.ranks(), report.format);
            prop_assert!(report.rank_q1 >= report.p && report.rank_q1 - report.p <= t);
        }
    }

    #[test]
    fn conjugation_preserves_generators(field in small_prime(), seed in any::<u64>(), picks in prop::collection::btree_set(1usize..=7, 1..=7)) {
        let t_matrix = skew(field, 7, seed);
        let chosen: Vec<usize> = picks.into_iter().collect();
        let (conj, perm) = conjugate_trim_set(&t_matrix, &chosen).unwrap();
        prop_assert_eq!(&perm[..chosen.len()], &chosen[..]);
        for i in 1..=7 {
            prop_assert!(conj.entry(i, i).is_zero());
            for j in 1..=7 {
                prop_assert_eq!(conj.entry(i, j), &conj.entry(j, i).neg());
            }
        }
        for (new, &old) in perm.iter().enumerate() {
            let a = conj.generator(new + 1);
            let b = t_matrix.generator(old);
            prop_assert!(a == b || a == b.neg());
        }
    }

    #[test]
    fn matrix_documents_round_trip(field in field_strategy(), m in prop_oneof![Just(5usize), Just(7)], seed in any::<u64>()) {
        let t_matrix = skew(field, m, seed);
        let doc = MatrixDocument::from_matrix(&t_matrix);
        let text = doc.to_json();
        prop_assert_eq!(&MatrixDocument::parse(&text).unwrap(), &doc);
        let back = parse_matrix(&text).unwrap();
        prop_assert_eq!(back.to_poly_matrix(), t_matrix.to_poly_matrix());
        prop_assert_eq!(MatrixDocument::from_matrix(&back).to_json(), text);
    }

    #[test]
    fn scan_records_respect_bounds(p in prop_oneof![Just(2u32), Just(3)], seed in any::<u64>()) {
        let config = ScanConfig { p, m: 5, trials: 3, min_degree: 1, max_degree: 2, seed };
        let out = realizability_scan(&config).unwrap();
        prop_assert_eq!(&out, &realizability_scan(&config).unwrap());
        for rec in &out.records {
            if let TorClass::G(r) = rec.class {
                let gap = rec.l - r;
                prop_assert!(2 * rec.t <= gap && gap <= 3 * rec.t);
                prop_assert!(gap + 1 != 3 * rec.t);
            }
        }
    }
}

#[test]
fn sign_closed_forms_exhaustive_to_nine() {
    for i in 1..=9 {
        for j in 1..=9 {
            for r in 1..=9 {
                assert_eq!(sigma3(i, j, r).value(), sigma3_oracle(i, j, r));
                for h in 1..=9 {
                    for k in 1..=9 {
                        assert_eq!(sigma5(i, j, r, h, k).value(), sigma5_oracle(i, j, r, h, k), "{i} {j} {r} {h} {k}");
                    }
                }
            }
        }
    }
}

#[test]
fn families_are_skew_to_s4() {
    let field = Field::Rational;
    for (kind, range) in [(FamilyKind::Odd, 1..=4), (FamilyKind::Even, 2..=4)] {
        for s in range {
            let spec = FamilySpec::new(kind, s).unwrap();
            let (t, trim) = build_family(spec, field).unwrap();
            assert_eq!(t.size(), spec.size());
            assert_eq!(trim, spec.trim());
            // from_matrix re-validates skew-symmetry, zero diagonal and entries in m.
            SkewMatrix::from_matrix(&t.to_poly_matrix()).unwrap();
        }
    }
}

#[test]
fn synthetic_gap_report_fails_conjecture() {
    let field = Field::prime(2).unwrap();
    let mut report = classify(&skew(field, 7, 3), 2).unwrap();
    // ℓ − r = 3t − 1 = 5.
    report.format[1] = 9;
    report.mu = 9;
    report.r = Some(4);
    report.class = TorClass::G(4);
    let verdict = check_conjectures(&report).unwrap();
    assert!(!verdict.gap_excludes_3t_minus_1);
    assert!(!verdict.all_hold());
}
