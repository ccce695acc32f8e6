use a2spider_cli::dsl::{parse, Expr};
use a2spider::clasp::ClaspDescriptor;
use a2spider::web::Generator;
use a2spider::{RingScalar, Sign, SignSeq};
use proptest::prelude::*;

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

fn word(max: usize) -> impl Strategy<Value = SignSeq> {
    prop::collection::vec(sign(), 0..=max).prop_map(SignSeq)
}

fn leaf() -> impl Strategy<Value = Expr> {
    let gens = Generator::all().to_vec();
    prop_oneof![
        word(3).prop_map(Expr::Identity),
        prop::sample::select(gens).prop_map(Expr::Atom),
        (sign(), 1usize..=3).prop_map(|(s, k)| Expr::ClaspRef(ClaspDescriptor::Single(s, k))),
        (sign(), 1usize..=2, 1usize..=2).prop_map(|(s, k, l)| Expr::ClaspRef(ClaspDescriptor::Double(s, k, l))),
        word(3).prop_filter("nonempty", |w| !w.is_empty()).prop_map(|w| Expr::ClaspRef(ClaspDescriptor::Into(w))),
        (sign(), sign(), any::<bool>()).prop_map(|(first, second, inverse)| Expr::CrossRef { first, second, inverse }),
    ]
}

fn scalar() -> impl Strategy<Value = RingScalar> {
    prop::sample::select(vec!["2", "-1", "v^3 + v^-3", "1/(v^6 + 1 + v^-6)", "(v^3 - v^-3)/(v^6 + 1)", "-3v^-2"])
        .prop_map(|s| s.parse().unwrap())
}

fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (scalar(), inner.clone()).prop_map(|(s, e)| Expr::Scale(s, Box::new(e))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Tensor(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Compose(Box::new(a), Box::new(b), 0)),
        ]
    })
}

proptest! {
    #[test]
    fn printing_then_parsing_is_identity(e in expr()) {
        let printed = e.to_string();
        let back = parse(&printed).map_err(|err| TestCaseError::fail(format!("{printed}: {err}")))?;
        prop_assert_eq!(&back, &e, "printed as {}", printed);
        prop_assert_eq!(back.to_string(), printed);
    }
}
