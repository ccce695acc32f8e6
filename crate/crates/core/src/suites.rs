//! Batch verification suites, one per family of identities.

use crate::braiding::{self, sign_words, Polarity};
use crate::clasp::{self, clasp_double, clasp_single};
use crate::error::Result;
use crate::grothendieck::{self, QIdentity};
use crate::report::Report;
use crate::rewrite::{self, Morphism};
use crate::scalar::{qint, RingScalar};
use crate::web::Generator::{Cap, Cup, Fork, Merge, H};
use crate::web::Sign::{Minus, Plus};
use crate::web::{SignSeq, WebDiagram};

fn gen(g: crate::web::Generator) -> Morphism {
    Morphism::generator(g)
}

fn scalar_check(r: &mut Report, name: impl Into<String>, got: &RingScalar, want: &RingScalar) {
    let ok = got == want;
    r.record(name, ok, (!ok).then(|| format!("got {got}, expected {want}")));
}

/// Circle, bigon, square and the closed cup-cap.
pub fn relation_sanity() -> Result<Report> {
    let mut r = Report::new("relations");
    let empty = SignSeq::empty();
    let circle = Morphism::reduce(&WebDiagram::nested_cups(&"+".into()).glue_compose(&WebDiagram::nested_caps(&"+".into()))?, RingScalar::one());
    r.equal("circle is [3]", &circle, &Morphism::identity(&empty).scale(&qint(3)));
    for s in [Plus, Minus] {
        let bigon = gen(Fork(s)).then(&gen(Merge(s.flip())));
        r.equal(format!("bigon on {} is [2]", s.as_char()), &bigon, &Morphism::identity(&SignSeq(vec![s])).scale(&qint(2)));
        let square = gen(H(s)).then(&gen(H(s.flip())));
        let word = SignSeq(vec![s, s.flip()]);
        let resolutions = Morphism::identity(&word).add(&gen(Cap(s)).then(&gen(Cup(s))));
        r.equal(format!("square on {word} resolves"), &square, &resolutions);
        r.record(format!("square on {word} has two unit terms"), square.num_terms() == 2 && square.terms().all(|(_, _, c)| c.is_one()), None);
        let closed = gen(Cup(s)).then(&gen(Cap(s)));
        let value = closed.coefficient_of(&WebDiagram::empty())?;
        scalar_check(&mut r, format!("d b on {word} is [3]"), &value, &qint(3));
    }
    Ok(r)
}

/// Every word of length `1..=max_len`.
pub fn clasp_suite(max_len: usize) -> Result<Report> {
    let mut r = Report::new(format!("clasps up to {max_len} strands"));
    for n in 1..=max_len {
        for w in sign_words(n) {
            r.merge(clasp::verify_clasp(&w)?);
        }
    }
    Ok(r)
}

pub fn clasp_word_suite(eps: &SignSeq) -> Result<Report> {
    clasp::verify_clasp(eps)
}

pub fn ladder_suite(max_k: usize) -> Result<Report> {
    let mut r = Report::new(format!("ladder expansion up to {max_k}"));
    for k in 1..=max_k {
        let p = clasp_single(Plus, k)?;
        r.equal(format!("k={k}"), &clasp::ladder_expansion(k)?, &p);
        r.equal(format!("k={k} is star-invariant"), &p.star(), &p);
    }
    Ok(r)
}

/// Turnback composites vanish strictly inside the range, and the single
/// turnback matches its closed form. Only `l = 1` is taken at `k = 4`.
pub fn x_vanish_suite(max_k: usize) -> Result<Report> {
    let mut r = Report::new(format!("turnback vanishing up to k={max_k}"));
    for k in 1..=max_k {
        let ls: &[usize] = if k + 2 <= 4 { &[1, 2] } else { &[1] };
        for &l in ls {
            for i in 2..=k {
                r.zero(format!("k={k} i={i} l={l} vanishes"), &clasp::x_single(k, i, l)?);
            }
            r.equal(format!("k={k} i=1 l={l} closed form"), &clasp::x_single(k, 1, l)?, &clasp::x_single_expected(k, l)?);
        }
    }
    Ok(r)
}

pub fn recursion_suite() -> Result<Report> {
    let mut r = Report::new("double clasp recursion");
    for (k, l) in [(1, 1), (1, 2), (2, 1)] {
        r.equal(format!("({k},{l}) three-term expansion"), &clasp::clasp_recursion_rhs(k, l)?, &clasp_double(Plus, k + 1, l)?);
        let (lhs, rhs) = clasp::turnback_identity(k, l)?;
        r.equal(format!("({k},{l}) turnback absorption"), &lhs, &rhs);
    }
    Ok(r)
}

pub fn trace_suite(max: usize) -> Result<Report> {
    let mut r = Report::new(format!("clasp closures up to {max} strands"));
    for n in 1..=max {
        for k in 0..=n {
            let got = clasp::clasp_for_word(&SignSeq::block(k, n - k))?.closure_trace()?;
            scalar_check(&mut r, format!("({k},{})", n - k), &got, &clasp::clasp_trace_formula(k, n - k));
        }
    }
    Ok(r)
}

pub fn ck1_suite() -> Result<Report> {
    grothendieck::verify_split_sum(&grothendieck::witness_ck1()?)
}

pub fn ck2_suite(k: usize) -> Result<Report> {
    grothendieck::verify_split_sum(&grothendieck::witness_ck2(k)?)
}

pub fn ck3_suite(k: usize, l: usize) -> Result<Report> {
    grothendieck::verify_split_sum(&grothendieck::witness_ck3(k, l)?)
}

pub fn witness_suite() -> Result<Report> {
    let mut r = Report::new("split sum witnesses");
    r.merge(ck1_suite()?);
    for k in 1..=3 {
        r.merge(ck2_suite(k)?);
    }
    for (k, l) in [(1, 1), (2, 1), (1, 2)] {
        r.merge(ck3_suite(k, l)?);
    }
    Ok(r)
}

pub fn qident_suite(which: QIdentity, k: usize, l: usize) -> Result<Report> {
    Ok(grothendieck::q_identity_report(which, k, l)?.report())
}

pub fn chebyshev_suite(max_degree: usize) -> Report {
    let mut r = Report::new(format!("chebyshev up to degree {max_degree}"));
    r.merge(grothendieck::cheb_consistency(max_degree));
    r.merge(grothendieck::cheb_dim_check(max_degree));
    r
}

pub fn reidemeister_suite() -> Result<Report> {
    let mut r = Report::new("reidemeister");
    r.merge(braiding::verify_all_reidemeister()?);
    r.merge(braiding::verify_inverse_and_star());
    for s in [Plus, Minus] {
        let p = braiding::kink_scalar(s, Polarity::Positive);
        let n = braiding::kink_scalar(s, Polarity::Negative);
        scalar_check(&mut r, format!("opposite curls on {} cancel", s.as_char()), &p.mul(&n), &RingScalar::one());
    }
    for g in crate::web::Generator::all() {
        for t in [Plus, Minus] {
            for over in [true, false] {
                r.merge(braiding::naturality(&gen(g), &SignSeq(vec![t]), over));
            }
        }
    }
    Ok(r)
}

/// Clasp slides for `|delta| <= max_delta` and `|eps| <= max_eps`.
pub fn slide_suite(max_delta: usize, max_eps: usize) -> Result<Report> {
    let mut r = Report::new("clasp slides");
    for a in 0..=max_delta {
        for d in sign_words(a) {
            for b in 1..=max_eps {
                for e in sign_words(b) {
                    r.merge(braiding::verify_clasp_slide(&d, &e)?);
                }
            }
        }
    }
    Ok(r)
}

pub fn braiding_suite() -> Result<Report> {
    let mut r = Report::new("braiding");
    r.merge(reidemeister_suite()?);
    r.merge(slide_suite(1, 3)?);
    Ok(r)
}

pub fn confluence_suite(seed: u64) -> Report {
    rewrite::verify_confluence(seed, 100, 5)
}
