//! A2 clasps: the idempotents projecting onto the top irreducible summand,
//! built as fully expanded sums of basis webs, together with the auxiliary
//! composites used in the categorified Chebyshev recursion.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock, RwLock};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::report::Report;
use crate::rewrite::Morphism;
use crate::scalar::{qbinom, qint, RingScalar};
use crate::web::{Generator, Sign, SignSeq, WebDiagram};

use Generator::*;
use Sign::*;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ClaspDescriptor {
    /// Clasp on `k` strands of one sign.
    Single(Sign, usize),
    /// Clasp on `s^k` followed by the opposite sign `l` times.
    Double(Sign, usize, usize),
    /// Clasp followed by the crossing-free rearrangement onto `eps`.
    Into(SignSeq),
    /// Idempotent on an arbitrary word.
    Endo(SignSeq),
    /// Map between two words with the same sign counts.
    Transition(SignSeq, SignSeq),
}

impl ClaspDescriptor {
    /// Collapses degenerate double clasps onto single ones.
    fn normalized(self) -> Self {
        match self {
            ClaspDescriptor::Double(s, k, 0) => ClaspDescriptor::Single(s, k),
            ClaspDescriptor::Double(s, 0, l) => ClaspDescriptor::Single(s.flip(), l),
            d => d,
        }
    }
}

impl fmt::Display for ClaspDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaspDescriptor::Single(s, k) => write!(f, "P[{}]", SignSeq::repeat(*s, *k)),
            ClaspDescriptor::Double(s, k, l) => {
                write!(f, "P[{}]", SignSeq::repeat(*s, *k).concat(&SignSeq::repeat(s.flip(), *l)))
            }
            ClaspDescriptor::Into(e) => write!(f, "I[eps={e}]"),
            ClaspDescriptor::Endo(e) => write!(f, "P[eps={e}]"),
            ClaspDescriptor::Transition(a, b) => write!(f, "T[a={a},b={b}]"),
        }
    }
}

impl FromStr for ClaspDescriptor {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse { pos: 0, msg: format!("unrecognised clasp descriptor '{text}'") };
        let inner = |prefix: &str| s.strip_prefix(prefix).and_then(|r| r.strip_suffix(']'));
        if let Some(body) = inner("T[") {
            let (a, b) = body.split_once(',').ok_or_else(bad)?;
            let a = a.strip_prefix("a=").ok_or_else(bad)?.parse()?;
            let b = b.strip_prefix("b=").ok_or_else(bad)?.parse()?;
            return Ok(ClaspDescriptor::Transition(a, b));
        }
        if let Some(body) = inner("I[") {
            return Ok(ClaspDescriptor::Into(body.strip_prefix("eps=").ok_or_else(bad)?.parse()?));
        }
        if let Some(body) = inner("P[") {
            if let Some(e) = body.strip_prefix("eps=") {
                return Ok(ClaspDescriptor::Endo(e.parse()?));
            }
            let eps: SignSeq = body.parse()?;
            return match block_form(&eps) {
                Some((sgn, k, l)) => Ok(ClaspDescriptor::Double(sgn, k, l).normalized()),
                None if eps.is_empty() => Err(bad()),
                None => Ok(ClaspDescriptor::Endo(eps)),
            };
        }
        Err(bad())
    }
}

/// Splits a nonempty word of the form `s^k` followed by `l` opposite signs.
pub fn block_form(eps: &SignSeq) -> Option<(Sign, usize, usize)> {
    let first = *eps.signs().first()?;
    let k = eps.signs().iter().take_while(|&&x| x == first).count();
    let rest = &eps.signs()[k..];
    rest.iter().all(|&x| x != first).then_some((first, k, rest.len()))
}

static CLASP_CACHE: LazyLock<RwLock<HashMap<ClaspDescriptor, Arc<Morphism>>>> = LazyLock::new(Default::default);

pub fn cache_len() -> usize {
    CLASP_CACHE.read().unwrap().len()
}

pub fn clear_cache() {
    CLASP_CACHE.write().unwrap().clear();
}

/// All cached clasps as a JSON array of descriptor/morphism pairs.
pub fn export_cache() -> Value {
    let table = CLASP_CACHE.read().unwrap();
    let mut entries: Vec<(String, Value)> = table.iter().map(|(d, m)| (d.to_string(), m.to_json_value())).collect();
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    Value::Array(entries.into_iter().map(|(d, m)| json!({"descriptor": d, "morphism": m})).collect())
}

/// Loads entries written by [`export_cache`]; returns how many were added.
pub fn import_cache(v: &Value) -> Result<usize> {
    let bad = |m: &str| Error::InvalidWeb(m.to_string());
    let mut added = 0;
    for e in v.as_array().ok_or_else(|| bad("clasp cache must be an array"))? {
        let d: ClaspDescriptor = e["descriptor"].as_str().ok_or_else(|| bad("missing descriptor"))?.parse()?;
        let m = Morphism::from_json_value(&e["morphism"])?;
        CLASP_CACHE.write().unwrap().entry(d.normalized()).or_insert_with(|| {
            added += 1;
            Arc::new(m)
        });
    }
    Ok(added)
}

/// Builds (or fetches) the clasp named by a descriptor.
pub fn clasp(desc: &ClaspDescriptor) -> Result<Arc<Morphism>> {
    let desc = desc.clone().normalized();
    if let Some(m) = CLASP_CACHE.read().unwrap().get(&desc) {
        return Ok(m.clone());
    }
    let m = match &desc {
        ClaspDescriptor::Single(s, k) => build_single(*s, *k)?,
        ClaspDescriptor::Double(s, k, l) => build_double(*s, *k, *l)?,
        ClaspDescriptor::Into(e) => build_into(e)?,
        ClaspDescriptor::Endo(e) => build_endo(e)?,
        ClaspDescriptor::Transition(a, b) => build_transition(a, b)?,
    };
    if cfg!(debug_assertions) && m.num_terms() <= 40 {
        if let ClaspDescriptor::Single(..) | ClaspDescriptor::Double(..) | ClaspDescriptor::Endo(_) = desc {
            debug_assert!(m.then(&m) == m, "{desc} is not idempotent");
        }
    }
    let m = Arc::new(m);
    CLASP_CACHE.write().unwrap().insert(desc, m.clone());
    Ok(m)
}

fn id(eps: &SignSeq) -> Morphism {
    Morphism::identity(eps)
}

fn ids(s: Sign, n: usize) -> Morphism {
    Morphism::identity(&SignSeq::repeat(s, n))
}

fn gen(g: Generator) -> Morphism {
    Morphism::generator(g)
}

fn ratio(a: RingScalar, b: RingScalar) -> RingScalar {
    a.div(&b).expect("quantum integers are nonzero")
}

/// Composes left to right.
pub fn chain(ms: &[Morphism]) -> Morphism {
    let mut it = ms.iter();
    let first = it.next().expect("nonempty chain").clone();
    it.fold(first, |acc, m| acc.then(m))
}

/// `1_left ⊗ m ⊗ 1_right`.
pub fn pad(left: &SignSeq, m: &Morphism, right: &SignSeq) -> Morphism {
    id(left).tensor(m).tensor(&id(right))
}

/// Merge then split: the I-shaped web on two strands of sign `s`.
pub fn pair_web(s: Sign) -> Morphism {
    gen(Merge(s)).then(&gen(Fork(s.flip())))
}

fn build_single(s: Sign, k: usize) -> Result<Morphism> {
    if k == 0 {
        return Ok(id(&SignSeq::empty()));
    }
    if k == 1 {
        return Ok(ids(s, 1));
    }
    let prev = clasp(&ClaspDescriptor::Single(s, k - 1))?;
    let a = prev.tensor(&ids(s, 1));
    let middle = ids(s, k - 2).tensor(&pair_web(s));
    let c = ratio(qint(k as i64 - 1), qint(k as i64));
    Ok(a.sub(&chain(&[a.clone(), middle, a.clone()]).scale(&c)))
}

pub fn clasp_single(s: Sign, k: usize) -> Result<Morphism> {
    if k < 1 {
        return Err(Error::Domain("a single clasp needs at least one strand".into()));
    }
    Ok((*clasp(&ClaspDescriptor::Single(s, k))?).clone())
}

fn build_double(s: Sign, k: usize, l: usize) -> Result<Morphism> {
    if k == 0 || l == 0 {
        return clasp(&ClaspDescriptor::Double(s, k, l)).map(|m| (*m).clone());
    }
    let pk = clasp(&ClaspDescriptor::Single(s, k))?;
    let pl = clasp(&ClaspDescriptor::Single(s.flip(), l))?;
    let outer = pk.tensor(&pl);
    let mut total = Morphism::zero(outer.dom().clone(), outer.cod().clone());
    for i in 0..=k.min(l) {
        let si = SignSeq::repeat(s, i);
        let turnback = Morphism::reduce(&WebDiagram::nested_caps(&si).glue_compose(&WebDiagram::nested_cups(&si))?, RingScalar::one());
        let middle = pad(&SignSeq::repeat(s, k - i), &turnback, &SignSeq::repeat(s.flip(), l - i));
        let (k, l, i) = (k as i64, l as i64, i as i64);
        let mut c = qbinom(k, i)?.mul(&qbinom(l, i)?).div(&qbinom(k + l + 1, i)?)?;
        if i % 2 == 1 {
            c = c.neg();
        }
        let term = if i == 0 { outer.clone() } else { chain(&[outer.clone(), middle, outer.clone()]) };
        total = total.add(&term.scale(&c));
    }
    Ok(total)
}

/// The clasp on `s^k` followed by `l` strands of the opposite sign.
pub fn clasp_double(first: Sign, k: usize, l: usize) -> Result<Morphism> {
    if k + l == 0 {
        return Err(Error::Domain("a clasp needs at least one strand".into()));
    }
    Ok((*clasp(&ClaspDescriptor::Double(first, k, l))?).clone())
}

/// The crossing-free web from `+^k -^l` to `eps` obtained by sliding each
/// minus sign leftwards through H webs.
pub fn sigma_web(eps: &SignSeq) -> Morphism {
    let k = eps.count(Plus);
    let l = eps.count(Minus);
    let mut cur: Vec<Sign> = SignSeq::block(k, l).0;
    let mut result = id(&SignSeq(cur.clone()));
    for j in 0..eps.len() {
        if eps.signs()[j] == cur[j] {
            continue;
        }
        let p = (j..cur.len()).find(|&p| cur[p] == Minus).unwrap();
        for q in (j..p).rev() {
            let step = pad(&SignSeq(cur[..q].to_vec()), &gen(H(Plus)), &SignSeq(cur[q + 2..].to_vec()));
            result = result.then(&step);
            cur.swap(q, q + 1);
        }
    }
    result
}

fn build_into(eps: &SignSeq) -> Result<Morphism> {
    if eps.is_empty() {
        return Ok(id(eps));
    }
    let p = clasp(&ClaspDescriptor::Double(Plus, eps.count(Plus), eps.count(Minus)))?;
    Ok(p.then(&sigma_web(eps)))
}

pub fn clasp_into(eps: &SignSeq) -> Result<Morphism> {
    Ok((*clasp(&ClaspDescriptor::Into(eps.clone()))?).clone())
}

fn build_endo(eps: &SignSeq) -> Result<Morphism> {
    let into = clasp(&ClaspDescriptor::Into(eps.clone()))?;
    Ok(into.star().then(&into))
}

pub fn clasp_endo(eps: &SignSeq) -> Result<Morphism> {
    Ok((*clasp(&ClaspDescriptor::Endo(eps.clone()))?).clone())
}

fn build_transition(a: &SignSeq, b: &SignSeq) -> Result<Morphism> {
    if a.count(Plus) != b.count(Plus) || a.count(Minus) != b.count(Minus) {
        return Err(Error::Domain(format!("words {a} and {b} have different sign counts")));
    }
    if a == b {
        return clasp(&ClaspDescriptor::Endo(a.clone())).map(|m| (*m).clone());
    }
    let ia = clasp(&ClaspDescriptor::Into(a.clone()))?;
    let ib = clasp(&ClaspDescriptor::Into(b.clone()))?;
    Ok(ia.star().then(&ib))
}

pub fn transition(a: &SignSeq, b: &SignSeq) -> Result<Morphism> {
    Ok((*clasp(&ClaspDescriptor::Transition(a.clone(), b.clone()))?).clone())
}

/// The clasp on the word `eps`: the double clasp on block words, the
/// conjugated idempotent otherwise.
pub fn clasp_for_word(eps: &SignSeq) -> Result<Morphism> {
    match block_form(eps) {
        Some((s, k, l)) => clasp_double(s, k, l),
        None if eps.is_empty() => Ok(id(eps)),
        None => clasp_endo(eps),
    }
}

/// Single clasp as the alternating sum over ladders of I-webs.
pub fn ladder_expansion(k: usize) -> Result<Morphism> {
    if k < 1 {
        return Err(Error::Domain("expansion needs at least one strand".into()));
    }
    let pk1 = clasp(&ClaspDescriptor::Single(Plus, k - 1))?;
    let head = ids(Plus, 1).tensor(&pk1);
    let mut total = Morphism::zero(SignSeq::repeat(Plus, k), SignSeq::repeat(Plus, k));
    for j in 0..k {
        let mut ladder = ids(Plus, j + 1);
        for p in 0..j {
            ladder = ladder.then(&pad(&SignSeq::repeat(Plus, p), &pair_web(Plus), &SignSeq::repeat(Plus, j - 1 - p)));
        }
        let term = head.then(&ladder.tensor(&ids(Plus, k - j - 1)));
        let mut c = ratio(qint((k - j) as i64), qint(k as i64));
        if j % 2 == 1 {
            c = c.neg();
        }
        total = total.add(&term.scale(&c));
    }
    Ok(total)
}

/// The composite with `i` turnbacks between a single clasp and a double
/// clasp: one extra `+` strand on the left merges into the clasped block.
/// Domain `+ +^(k+1-i) -^(l-1)`, codomain `- +^k -^(i+l-1)`.
pub fn x_single(k: usize, i: usize, l: usize) -> Result<Morphism> {
    if k < 1 || l < 1 || i < 1 || i > k + 1 {
        return Err(Error::Domain(format!("x_single needs k, l >= 1 and 1 <= i <= k+1, got k={k} i={i} l={l}")));
    }
    let plus = |n| SignSeq::repeat(Plus, n);
    let minus = |n| SignSeq::repeat(Minus, n);
    let cups = Morphism::reduce(&WebDiagram::nested_cups(&plus(i)), RingScalar::one());
    let layer1 = pad(&plus(k + 2 - i), &cups, &minus(l - 1));
    let layer2 = pad(&plus(1), &*clasp(&ClaspDescriptor::Single(Plus, k + 1))?, &minus(i + l - 1));
    let layer3 = gen(Merge(Plus)).tensor(&id(&SignSeq::block(k, i + l - 1)));
    let layer4 = ids(Minus, 1).tensor(&*clasp(&ClaspDescriptor::Double(Plus, k, i + l - 1))?);
    Ok(chain(&[layer1, layer2, layer3, layer4]))
}

/// The closed form of `x_single(k, 1, l)`.
pub fn x_single_expected(k: usize, l: usize) -> Result<Morphism> {
    let p = clasp(&ClaspDescriptor::Double(Plus, k, l - 1))?;
    let mut head = SignSeq(vec![Minus]);
    head = head.concat(&SignSeq::block(k, l - 1));
    let t = transition(&head, &SignSeq::block(k, l))?;
    let m = gen(Fork(Plus)).tensor(&p).then(&ids(Minus, 1).tensor(&t));
    let mut c = ratio(RingScalar::one(), qint(k as i64 + 1));
    if k % 2 == 1 {
        c = c.neg();
    }
    Ok(m.scale(&c))
}

fn minus_then_block(k: usize, l: usize) -> SignSeq {
    SignSeq(vec![Minus]).concat(&SignSeq::block(k, l))
}

/// The three-term expansion of the double clasp on `+^(k+1) -^l` through
/// the clasp on `+^k -^l`.
pub fn clasp_recursion_rhs(k: usize, l: usize) -> Result<Morphism> {
    if k < 1 || l < 1 {
        return Err(Error::Domain("recursion needs k, l >= 1".into()));
    }
    let p = clasp(&ClaspDescriptor::Double(Plus, k, l))?;
    let one = ids(Plus, 1);
    let lifted = one.tensor(&p);
    let tt = pair_web(Plus).tensor(&id(&SignSeq::block(k - 1, l)));
    let s1 = chain(&[lifted.clone(), tt, lifted.clone()]);
    let block = SignSeq::block(k, l);
    let turned = minus_then_block(k, l - 1);
    let rest = SignSeq::block(k, l - 1);
    let s2 = chain(&[
        one.tensor(&transition(&block, &turned)?),
        gen(Cap(Plus)).tensor(&id(&rest)),
        gen(Cup(Plus)).tensor(&id(&rest)),
        one.tensor(&transition(&turned, &block)?),
    ]);
    let (kk, ll) = (k as i64, l as i64);
    let c1 = ratio(qint(kk), qint(kk + 1));
    let c2 = ratio(qint(ll), qint(kk + 1).mul(&qint(kk + ll + 2)));
    Ok(lifted.sub(&s1.scale(&c1)).sub(&s2.scale(&c2)))
}

/// Both sides of the identity that absorbs a cup-and-merge turnback into a
/// smaller double clasp. Returns `(lhs, rhs)`; they must be equal.
pub fn turnback_identity(k: usize, l: usize) -> Result<(Morphism, Morphism)> {
    if k < 1 || l < 1 {
        return Err(Error::Domain("turnback identity needs k, l >= 1".into()));
    }
    let p = clasp(&ClaspDescriptor::Double(Plus, k, l - 1))?;
    let one = ids(Plus, 1);
    let lhs = chain(&[
        (*p).clone(),
        gen(Cup(Plus)).tensor(&id(&SignSeq::block(k, l - 1))),
        one.tensor(&transition(&minus_then_block(k, l - 1), &SignSeq::block(k, l))?),
        gen(Merge(Plus)).tensor(&id(&SignSeq::block(k - 1, l))),
        ids(Minus, 1).tensor(&*clasp(&ClaspDescriptor::Double(Plus, k - 1, l))?),
    ]);
    let rhs_web = chain(&[
        (*p).clone(),
        gen(Fork(Plus)).tensor(&id(&SignSeq::block(k - 1, l - 1))),
        ids(Minus, 1).tensor(&transition(&minus_then_block(k - 1, l - 1), &SignSeq::block(k - 1, l))?),
    ]);
    let (kk, ll) = (k as i64, l as i64);
    let inner = RingScalar::one().sub(&ratio(qint(ll + 1), qint(kk + 1).mul(&qint(kk + ll + 1))));
    let c = ratio(qint(kk + 1), qint(kk)).mul(&inner);
    Ok((lhs, rhs_web.scale(&c)))
}

/// `[k+1][l+1][k+l+2]/[2]`, the closure of the double clasp.
pub fn clasp_trace_formula(k: usize, l: usize) -> RingScalar {
    let (k, l) = (k as i64, l as i64);
    ratio(qint(k + 1).mul(&qint(l + 1)).mul(&qint(k + l + 2)), qint(2))
}

/// Attachments that must kill a clasp: `(position, generator)` pairs whose
/// boundary matches `eps` at that position.
fn attachments(eps: &SignSeq, above: bool) -> Vec<(usize, Generator)> {
    let mut out = Vec::new();
    for p in 0..eps.len().saturating_sub(1) {
        let (a, b) = (eps.signs()[p], eps.signs()[p + 1]);
        let candidates = if above { [Merge(a), Cap(a)] } else { [Fork(a.flip()), Cup(a)] };
        for g in candidates {
            let word = if above { g.domain() } else { g.codomain() };
            if word.signs() == [a, b] {
                out.push((p, g));
            }
        }
    }
    out
}

/// Idempotency, absorption of every smaller contiguous block clasp,
/// annihilation by every admissible turnback, and unit identity coefficient.
pub fn verify_clasp(eps: &SignSeq) -> Result<Report> {
    let mut report = Report::new(format!("clasp {eps}"));
    let p = clasp_for_word(eps)?;
    report.equal("idempotent", &p.then(&p), &p);
    let n = eps.len();
    for a in 0..n {
        for b in a + 2..=n {
            if (a, b) == (0, n) {
                continue;
            }
            let window = eps.slice(a, b);
            if block_form(&window).is_none() {
                continue;
            }
            let q = pad(&eps.slice(0, a), &clasp_for_word(&window)?, &eps.slice(b, n));
            report.equal(format!("absorbs P[{window}] at {a} below"), &q.then(&p), &p);
            report.equal(format!("absorbs P[{window}] at {a} above"), &p.then(&q), &p);
        }
    }
    for (pos, g) in attachments(eps, true) {
        let att = pad(&eps.slice(0, pos), &gen(g), &eps.slice(pos + 2, n));
        report.zero(format!("{g} at {pos} above is killed"), &p.then(&att));
    }
    for (pos, g) in attachments(eps, false) {
        let att = pad(&eps.slice(0, pos), &gen(g), &eps.slice(pos + 2, n));
        report.zero(format!("{g} at {pos} below is killed"), &att.then(&p));
    }
    let c = p.coefficient_of(&WebDiagram::identity(eps))?;
    report.record("identity coefficient is 1", c.is_one(), (!c.is_one()).then(|| c.to_string()));
    if let Some((Minus, _, l)) = block_form(eps) {
        if l > 0 {
            report.equal("conjugated form agrees", &clasp_endo(eps)?, &p);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> SignSeq {
        SignSeq::from(s)
    }

    #[test]
    fn single_clasp_small_cases() {
        assert_eq!(clasp_single(Plus, 1).unwrap(), ids(Plus, 1));
        let p2 = clasp_single(Plus, 2).unwrap();
        let expected = ids(Plus, 2).sub(&pair_web(Plus).scale(&ratio(RingScalar::one(), qint(2))));
        assert_eq!(p2, expected);
        assert!(clasp_single(Plus, 0).is_err());
    }

    #[test]
    fn double_clasp_one_one() {
        let p = clasp_double(Plus, 1, 1).unwrap();
        let db = gen(Cap(Plus)).then(&gen(Cup(Plus)));
        assert_eq!(p, ids(Plus, 1).tensor(&ids(Minus, 1)).sub(&db.scale(&ratio(RingScalar::one(), qint(3)))));
        assert_eq!(clasp_double(Plus, 2, 0).unwrap(), clasp_single(Plus, 2).unwrap());
    }

    #[test]
    fn sigma_webs() {
        assert_eq!(sigma_web(&seq("++-")), id(&seq("++-")));
        assert_eq!(sigma_web(&seq("-+")), gen(H(Plus)));
        let s = sigma_web(&seq("-+-+"));
        assert_eq!(s.num_terms(), 1);
        let (_, w, _) = s.terms().next().unwrap();
        assert_eq!(w.num_trivalent(), 6);
    }

    #[test]
    fn descriptors_round_trip() {
        for text in ["P[+++]", "P[++-]", "P[eps=-+-]", "T[a=-+,b=+-]", "I[eps=-+]"] {
            let d: ClaspDescriptor = text.parse().unwrap();
            assert_eq!(d.to_string(), text);
        }
        assert_eq!("P[-+]".parse::<ClaspDescriptor>().unwrap(), ClaspDescriptor::Double(Minus, 1, 1));
        assert!("Q[+]".parse::<ClaspDescriptor>().is_err());
    }

    #[test]
    fn transition_special_cases() {
        assert_eq!(transition(&seq("-+"), &seq("-+")).unwrap(), clasp_endo(&seq("-+")).unwrap());
        let round = transition(&seq("+-"), &seq("-+")).unwrap().then(&transition(&seq("-+"), &seq("+-")).unwrap());
        assert_eq!(round, clasp_endo(&seq("+-")).unwrap());
        assert!(transition(&seq("+"), &seq("-")).is_err());
    }

    #[test]
    fn annihilation_by_cup() {
        let p = clasp_double(Plus, 1, 1).unwrap();
        assert!(gen(Cup(Plus)).then(&p).is_zero());
    }

    #[test]
    fn verify_small_clasps() {
        for w in ["++", "+-", "-+", "++-", "+-+", "-+-"] {
            let r = verify_clasp(&seq(w)).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn ladder_matches_recursive_definition_small() {
        for k in 1..=3 {
            assert_eq!(ladder_expansion(k).unwrap(), clasp_single(Plus, k).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn recursion_rhs_one_one() {
        assert_eq!(clasp_recursion_rhs(1, 1).unwrap(), clasp_double(Plus, 2, 1).unwrap());
    }

    #[test]
    fn trace_of_double_clasp() {
        let p = clasp_double(Plus, 1, 1).unwrap();
        assert_eq!(p.closure_trace().unwrap(), qint(2).mul(&qint(4)));
        assert_eq!(clasp_trace_formula(1, 1), qint(2).mul(&qint(4)));
    }
}
