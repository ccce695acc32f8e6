use a2spider::braiding::*;
use a2spider::web::{Generator, Sign};
use a2spider::{Morphism, SignSeq};

fn words_up_to(n: usize) -> Vec<SignSeq> {
    (0..=n).flat_map(sign_words).collect()
}

#[test]
fn every_reidemeister_template_holds() {
    let r = verify_all_reidemeister().unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn negative_crossings_are_inverse_reflections() {
    let r = verify_inverse_and_star();
    assert!(r.passed(), "{r}");
}

#[test]
fn cabled_braids_are_invertible() {
    for d in words_up_to(2) {
        for e in words_up_to(3 - d.len()) {
            let there = braid(&d, &e, Polarity::Positive);
            let back = braid(&e, &d, Polarity::Negative);
            assert_eq!(there.then(&back), Morphism::identity(&d.concat(&e)), "{d} {e}");
        }
    }
}

#[test]
fn cabling_order_does_not_matter() {
    for d in words_up_to(2) {
        for e in words_up_to(2) {
            for pol in Polarity::both() {
                assert_eq!(braid(&d, &e, pol), braid_other_order(&d, &e, pol), "{d} {e} {pol}");
            }
        }
    }
}

#[test]
fn generators_slide_through_strands() {
    for g in Generator::all() {
        for t in words_up_to(2).into_iter().filter(|t| !t.is_empty()) {
            for over in [true, false] {
                let r = naturality(&Morphism::generator(g), &t, over);
                assert!(r.passed(), "{g} {t}: {r}");
            }
        }
    }
}

#[test]
fn clasps_slide_through_crossings() {
    for d in words_up_to(1) {
        for e in words_up_to(3) {
            let r = verify_clasp_slide(&d, &e).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}

#[test]
fn kink_scalar_is_a_power_of_v() {
    // frozen from reduction
    let p = kink_scalar(Sign::Plus, Polarity::Positive);
    assert_eq!(p, a2spider::RingScalar::v_pow(8));
    assert_eq!(kink_scalar(Sign::Minus, Polarity::Negative), a2spider::RingScalar::v_pow(-8));
}
