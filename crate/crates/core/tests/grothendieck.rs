use a2spider::braiding::sign_words;
use a2spider::grothendieck::*;
use num_bigint::BigInt;

fn assert_passes(r: a2spider::report::Report) {
    assert!(r.passed(), "{r}");
}

#[test]
fn edge_witnesses_split() {
    for k in 1..=3 {
        assert_passes(verify_split_sum(&witness_ck2(k).unwrap()).unwrap());
    }
}

#[test]
fn interior_witnesses_split() {
    for (k, l) in [(1, 1), (2, 1), (1, 2)] {
        assert_passes(verify_split_sum(&witness_ck3(k, l).unwrap()).unwrap());
    }
}

#[test]
fn quantum_identities_hold() {
    for k in 1..=3 {
        assert!(q_identity_report(QIdentity::Edge, k, 0).unwrap().holds(), "edge {k}");
    }
    for (k, l) in [(1, 1), (2, 1), (1, 2)] {
        assert!(q_identity_report(QIdentity::Interior, k, l).unwrap().holds(), "interior {k} {l}");
    }
}

#[test]
fn chebyshev_layer_is_consistent() {
    assert_passes(cheb_consistency(8));
    assert_passes(cheb_dim_check(8));
}

#[test]
fn chebyshev_values_frozen() {
    // x^3 - 2xy + 1, from the recursion by hand
    assert_eq!(cheb(3, 0).to_string(), "x^3 - 2*x*y + 1");
    assert_eq!(cheb(2, 1).to_string(), "x^2*y - y^2 - x");
    assert_eq!(cheb(2, 2).eval(&BigInt::from(3), &BigInt::from(3)), BigInt::from(27));
}

#[test]
fn clasps_commute_under_crossing() {
    for n in 1..=3 {
        for split in 1..n {
            for w in sign_words(n) {
                let (e, d) = (w.slice(0, split), w.slice(split, n));
                assert_passes(verify_commutativity(&e, &d).unwrap());
            }
        }
    }
}

#[test]
fn words_standardize_to_blocks() {
    for n in 1..=4 {
        for w in sign_words(n) {
            assert_passes(verify_standardization(&w).unwrap());
        }
    }
}
