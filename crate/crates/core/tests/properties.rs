use a2spider::clasp::clasp_for_word;
use a2spider::grothendieck::{cheb, grothendieck_class};
use a2spider::rational::Rational;
use a2spider::rewrite::{random_diagram, verify_confluence};
use a2spider::{qbinom, qint, LaurentPoly, Morphism, RingScalar, WebDiagram};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-9i32..=9, -4i64..=4), 0..4)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (e, Rational::from_i64(c)))))
}

fn scalar() -> impl Strategy<Value = RingScalar> {
    (laurent(), laurent()).prop_filter_map("nonzero denominator", |(n, d)| {
        if d.is_zero() {
            None
        } else {
            RingScalar::new(n, d).ok()
        }
    })
}

fn diagram(seed: u64, layers: usize, width: usize) -> WebDiagram {
    random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), layers, width)
}

fn binomial(n: i64, k: i64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_ring_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn star_is_an_involutive_automorphism(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.mul(&b).star(), a.star().mul(&b.star()));
        prop_assert_eq!(a.add(&b).star(), a.star().add(&b.star()));
        prop_assert_eq!(a.star().star(), a);
    }

    #[test]
    fn scalar_text_round_trips(a in scalar()) {
        let back: RingScalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn quantum_integer_products(a in 1i64..=10, b in 1i64..=10) {
        let sum = (1..=a).fold(RingScalar::zero(), |acc, i| acc.add(&qint(a + b - (2 * i - 1))));
        prop_assert_eq!(qint(a).mul(&qint(b)), sum);
    }

    #[test]
    fn binomials_are_laurent_and_classical_at_one(n in 1i64..=8, k in 1i64..=8) {
        prop_assume!(k <= n);
        let b = qbinom(n, k).unwrap();
        prop_assert!(b.is_laurent());
        prop_assert_eq!(b.eval_at_one().unwrap(), Rational::from_integer(binomial(n, k)));
    }

    #[test]
    fn random_diagrams_validate(seed in any::<u64>()) {
        let d = diagram(seed, 12, 5);
        prop_assert!(d.validate().is_ok());
    }

    #[test]
    fn canonical_key_ignores_construction(seed in any::<u64>()) {
        let d = diagram(seed, 10, 5);
        let padded = WebDiagram::identity(&d.domain_signs())
            .glue_compose(&d).unwrap()
            .glue_compose(&WebDiagram::identity(&d.codomain_signs())).unwrap();
        prop_assert_eq!(padded.canonical_key(), d.canonical_key());
        let (key, canon) = d.canonicalize();
        prop_assert_eq!(canon.canonical_key(), key);
    }

    #[test]
    fn gluing_is_associative(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let (a, b, c) = (diagram(s1, 4, 3), diagram(s2, 4, 3), diagram(s3, 4, 3));
        let left = a.glue_tensor(&b).glue_tensor(&c);
        let right = a.glue_tensor(&b.glue_tensor(&c));
        prop_assert_eq!(left.canonical_key(), right.canonical_key());
        let back = a.star();
        let left = a.glue_compose(&back).unwrap().glue_compose(&a).unwrap();
        let right = a.glue_compose(&back.glue_compose(&a).unwrap()).unwrap();
        prop_assert_eq!(left.canonical_key(), right.canonical_key());
    }

    #[test]
    fn star_reverses_composition(seed in any::<u64>()) {
        let a = diagram(seed, 8, 4);
        let b = a.star();
        let lhs = a.glue_compose(&b).unwrap().star();
        let rhs = b.star().glue_compose(&a.star()).unwrap();
        prop_assert_eq!(lhs.canonical_key(), rhs.canonical_key());
    }

    #[test]
    fn reduced_terms_are_fixed_points(seed in any::<u64>()) {
        let m = Morphism::reduce(&diagram(seed, 12, 5), RingScalar::one());
        for (key, web, _) in m.terms() {
            let again = Morphism::reduce(web, RingScalar::one());
            let terms: Vec<_> = again.terms().collect();
            prop_assert_eq!(terms.len(), 1);
            prop_assert_eq!(terms[0].0, key);
            prop_assert!(terms[0].2.is_one());
        }
    }

    #[test]
    fn interchange_law(s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = Morphism::reduce(&diagram(s1, 5, 3), RingScalar::one());
        let b = Morphism::reduce(&diagram(s2, 5, 3), RingScalar::one());
        let (c, d) = (a.star(), b.star());
        let lhs = a.tensor(&b).then(&c.tensor(&d));
        let rhs = a.then(&c).tensor(&b.then(&d));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn trace_is_cyclic(seed in any::<u64>()) {
        let a = Morphism::reduce(&diagram(seed, 6, 3), RingScalar::one());
        let b = a.star().then(&clasp_for_word(a.dom()).unwrap_or_else(|_| Morphism::identity(a.dom())));
        let ab = a.then(&b).closure_trace().unwrap();
        let ba = b.then(&a).closure_trace().unwrap();
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn star_is_an_antihomomorphism_on_morphisms(seed in any::<u64>()) {
        let a = Morphism::reduce(&diagram(seed, 6, 4), RingScalar::one());
        let b = a.star();
        prop_assert_eq!(a.then(&b).star(), b.star().then(&a.star()));
        prop_assert_eq!(a.star().star(), a);
    }

    #[test]
    fn chebyshev_symmetry_and_oracle(k in 0usize..=8, l in 0usize..=8) {
        prop_assume!(k + l <= 8);
        prop_assert_eq!(cheb(l, k), cheb(k, l).swap_xy());
        prop_assert_eq!(cheb(k, l), grothendieck_class(k, l));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn confluence_under_any_seed(seed in any::<u64>()) {
        let r = verify_confluence(seed, 4, 3);
        prop_assert!(r.passed(), "{}", r);
    }
}

#[test]
fn quantum_integer_recursion() {
    for k in 1..=20 {
        assert_eq!(qint(2).mul(&qint(k)), qint(k + 1).add(&qint(k - 1)), "k={k}");
    }
}
