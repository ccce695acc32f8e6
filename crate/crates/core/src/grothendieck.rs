//! Two-variable Chebyshev polynomials, their categorified recursion, and
//! split direct sum witnesses for the clasp idempotents.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::braiding::{braid, Polarity};
use crate::clasp::{chain, clasp_double, clasp_for_word, clasp_trace_formula, pad, pair_web, transition};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::rewrite::Morphism;
use crate::scalar::{qint, RingScalar};
use crate::web::Generator::{Cap, Cup, Fork, Merge};
use crate::web::Sign::{Minus, Plus};
use crate::web::{Generator, SignSeq};

/// Integer polynomial in `x` and `y`, keyed by `(x-degree, y-degree)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn monomial(c: i64, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((i, j), BigInt::from(c));
        p
    }

    fn add_term(&mut self, e: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Terms in increasing `(x-degree, y-degree)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, -c);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            for ((d, e), f) in &o.terms {
                out.add_term((a + d, b + e), c * f);
            }
        }
        out
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_xy(&self) -> Self {
        Self { terms: self.terms.iter().map(|((i, j), c)| ((*j, *i), c.clone())).collect() }
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms.iter().map(|((i, j), c)| c * x.pow(*i) * y.pow(*j)).sum()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn to_json_value(&self) -> Value {
        let terms: Vec<Value> = self.terms.iter().map(|((i, j), c)| json!({"x": i, "y": j, "coeff": c.to_string()})).collect();
        json!({ "terms": terms })
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: char, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{name}"),
        _ => write!(f, "{name}^{e}"),
    }
}

impl fmt::Display for BivarPoly {
    /// Highest total degree first, `x` before `y` within a degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut order: Vec<_> = self.terms.iter().collect();
        order.sort_by(|((a, b), _), ((c, d), _)| (c + d, c).cmp(&(a + b, a)));
        for (n, ((i, j), c)) in order.into_iter().enumerate() {
            let mag = c.abs();
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let constant = *i == 0 && *j == 0;
            if constant || !mag.is_one() {
                write!(f, "{mag}")?;
                if !constant {
                    f.write_str("*")?;
                }
            }
            write_var(f, 'x', *i)?;
            if *i > 0 && *j > 0 {
                f.write_str("*")?;
            }
            write_var(f, 'y', *j)?;
        }
        Ok(())
    }
}

/// The two-variable Chebyshev polynomial of index `(k, l)`, by the
/// x-recursion in the first index and the y-recursion along `k = 0`.
pub fn cheb(k: usize, l: usize) -> BivarPoly {
    let mut memo = HashMap::new();
    cheb_memo(k as i64, l as i64, &mut memo)
}

fn cheb_memo(k: i64, l: i64, memo: &mut HashMap<(i64, i64), BivarPoly>) -> BivarPoly {
    if k < 0 || l < 0 {
        return BivarPoly::zero();
    }
    if let Some(p) = memo.get(&(k, l)) {
        return p.clone();
    }
    let p = match (k, l) {
        (0, 0) => BivarPoly::one(),
        (0, _) => BivarPoly::y()
            .mul(&cheb_memo(0, l - 1, memo))
            .sub(&cheb_memo(1, l - 2, memo))
            .sub(&cheb_memo(-1, l - 1, memo)),
        _ => BivarPoly::x()
            .mul(&cheb_memo(k - 1, l, memo))
            .sub(&cheb_memo(k - 2, l + 1, memo))
            .sub(&cheb_memo(k - 1, l - 1, memo)),
    };
    memo.insert((k, l), p.clone());
    p
}

/// Chebyshev polynomials for all `k + l <= n`, keyed by `(k, l)`.
pub fn cheb_table(n: usize) -> BTreeMap<(usize, usize), BivarPoly> {
    let mut memo = HashMap::new();
    let mut out = BTreeMap::new();
    for d in 0..=n {
        for k in 0..=d {
            out.insert((k, d - k), cheb_memo(k as i64, (d - k) as i64, &mut memo));
        }
    }
    out
}

/// The class of the clasp on `+^k -^l` in terms of the classes `X` of
/// `+` and `Y` of `-`, following the split sums the witnesses certify:
/// the seed for `(1,1)`, the edge sum for `(k,0)`, the interior sum for
/// `k > l`, and conjugation for `k < l`.
pub fn grothendieck_class(k: usize, l: usize) -> BivarPoly {
    let mut memo = HashMap::new();
    class_memo(k as i64, l as i64, &mut memo)
}

fn class_memo(k: i64, l: i64, memo: &mut HashMap<(i64, i64), BivarPoly>) -> BivarPoly {
    if k < 0 || l < 0 {
        return BivarPoly::zero();
    }
    if let Some(p) = memo.get(&(k, l)) {
        return p.clone();
    }
    let x = BivarPoly::x();
    let p = if k < l {
        class_memo(l, k, memo).swap_xy()
    } else {
        match (k, l) {
            (0, 0) => BivarPoly::one(),
            (1, 0) => x,
            (1, 1) => x.mul(&BivarPoly::y()).sub(&BivarPoly::one()),
            (_, 0) => x.mul(&class_memo(k - 1, 0, memo)).sub(&class_memo(k - 2, 1, memo)),
            _ => x
                .mul(&class_memo(k - 1, l, memo))
                .sub(&class_memo(k - 2, l + 1, memo))
                .sub(&class_memo(k - 1, l - 1, memo)),
        }
    };
    memo.insert((k, l), p.clone());
    p
}

/// `(k+1)(l+1)(k+l+2)/2`, the closure of the clasp at `q = 1`.
pub fn dim_q1(k: usize, l: usize) -> BigInt {
    let v = clasp_trace_formula(k, l).eval_at_one().expect("quantum integers are regular at q = 1");
    assert!(v.is_integer());
    v.numer()
}

/// `cheb(k, l)` at `x = y = 3` against the dimension for all `k + l <= max_degree`.
pub fn cheb_dim_check(max_degree: usize) -> Report {
    let mut r = Report::new(format!("chebyshev dimension check up to degree {max_degree}"));
    let three = BigInt::from(3);
    for ((k, l), p) in cheb_table(max_degree) {
        let lhs = p.eval(&three, &three);
        let rhs = dim_q1(k, l);
        let ok = lhs == rhs && lhs.is_positive();
        r.record(format!("({k},{l})"), ok, (!ok).then(|| format!("cheb gives {lhs}, dimension {rhs}")));
    }
    r
}

/// Recursion against class, symmetry, and the two seeds, for `k + l <= n`.
pub fn cheb_consistency(n: usize) -> Report {
    let mut r = Report::new(format!("chebyshev layer up to degree {n}"));
    let table = cheb_table(n);
    for (&(k, l), p) in &table {
        let g = grothendieck_class(k, l);
        r.record(format!("class ({k},{l})"), &g == p, (&g != p).then(|| format!("class {g}, polynomial {p}")));
        let mirrored = &table[&(l, k)];
        let ok = mirrored == &p.swap_xy();
        r.record(format!("symmetry ({k},{l})"), ok, (!ok).then(|| format!("{mirrored} vs {}", p.swap_xy())));
    }
    if n >= 2 {
        let seed = BivarPoly::x().mul(&BivarPoly::y()).sub(&BivarPoly::one());
        r.record("(1,1) is xy - 1", table[&(1, 1)] == seed, None);
    }
    r
}

/// Projections and inclusions exhibiting an idempotent as a direct sum of
/// two clasps.
#[derive(Clone, Debug)]
pub struct DecompositionWitness {
    pub name: String,
    pub ambient: Morphism,
    pub p1: Morphism,
    pub p2: Morphism,
    pub i1: Morphism,
    pub i2: Morphism,
    pub target1: Morphism,
    pub target2: Morphism,
}

impl DecompositionWitness {
    /// A witness whose second summand is zero.
    pub fn trivial(name: impl Into<String>, idempotent: Morphism) -> Self {
        let obj = idempotent.dom().clone();
        let none = SignSeq::empty();
        DecompositionWitness {
            name: name.into(),
            ambient: idempotent.clone(),
            p1: idempotent.clone(),
            i1: idempotent.clone(),
            target1: idempotent,
            p2: Morphism::zero(obj.clone(), none.clone()),
            i2: Morphism::zero(none.clone(), obj),
            target2: Morphism::zero(none.clone(), none),
        }
    }

    fn shapes_ok(&self) -> bool {
        let y = self.ambient.dom();
        let (x1, x2) = (self.target1.dom(), self.target2.dom());
        self.ambient.cod() == y
            && self.target1.cod() == x1
            && self.target2.cod() == x2
            && (self.p1.dom(), self.p1.cod()) == (y, x1)
            && (self.p2.dom(), self.p2.cod()) == (y, x2)
            && (self.i1.dom(), self.i1.cod()) == (x1, y)
            && (self.i2.dom(), self.i2.cod()) == (x2, y)
    }
}

/// Checks the direct sum conditions by reduction. Composites are written
/// first-then-second, so `p1.then(i1)` is the inclusion after the projection.
pub fn verify_split_sum(w: &DecompositionWitness) -> Result<Report> {
    if !w.shapes_ok() {
        return Err(Error::Domain(format!("witness {} is not shape compatible", w.name)));
    }
    let mut r = Report::new(format!("split sum {}", w.name));
    r.equal("i1 p1 + i2 p2 = ambient", &w.p1.then(&w.i1).add(&w.p2.then(&w.i2)), &w.ambient);
    r.zero("p1 i2 = 0", &w.i2.then(&w.p1));
    r.zero("p2 i1 = 0", &w.i1.then(&w.p2));
    r.equal("p1 i1 = target1", &w.i1.then(&w.p1), &w.target1);
    r.equal("p2 i2 = target2", &w.i2.then(&w.p2), &w.target2);
    r.equal("p1 absorbs", &chain(&[w.ambient.clone(), w.p1.clone(), w.target1.clone()]), &w.p1);
    r.equal("p2 absorbs", &chain(&[w.ambient.clone(), w.p2.clone(), w.target2.clone()]), &w.p2);
    r.equal("i1 absorbs", &chain(&[w.target1.clone(), w.i1.clone(), w.ambient.clone()]), &w.i1);
    r.equal("i2 absorbs", &chain(&[w.target2.clone(), w.i2.clone(), w.ambient.clone()]), &w.i2);
    Ok(r)
}

fn q(n: usize) -> RingScalar {
    qint(n as i64)
}

fn ratio(a: RingScalar, b: RingScalar) -> RingScalar {
    a.div(&b).expect("quantum integers are nonzero")
}

fn gen(g: Generator) -> Morphism {
    Morphism::generator(g)
}

fn id(eps: &SignSeq) -> Morphism {
    Morphism::identity(eps)
}

fn plus(n: usize) -> SignSeq {
    SignSeq::repeat(Plus, n)
}

fn minus_then_block(k: usize, l: usize) -> SignSeq {
    SignSeq(vec![Minus]).concat(&SignSeq::block(k, l))
}

/// `+ ⊗ -` splits into the clasp on `+-` and the empty object.
pub fn witness_ck1() -> Result<DecompositionWitness> {
    let p = clasp_double(Plus, 1, 1)?;
    let empty = SignSeq::empty();
    Ok(DecompositionWitness {
        name: "(1,1)".into(),
        ambient: id(&"+-".into()),
        p1: p.clone(),
        i1: p.clone(),
        target1: p,
        p2: gen(Cap(Plus)).scale(&ratio(RingScalar::one(), q(3))),
        i2: gen(Cup(Plus)),
        target2: id(&empty),
    })
}

/// The clasp on `+^k` tensored with `+` splits into the clasps on
/// `+^(k+1)` and `+^(k-1) -`.
pub fn witness_ck2(k: usize) -> Result<DecompositionWitness> {
    if k < 1 {
        return Err(Error::Domain("the edge witness needs k >= 1".into()));
    }
    let pk = clasp_for_word(&plus(k))?.tensor(&id(&plus(1)));
    let top = clasp_for_word(&plus(k + 1))?;
    let small = clasp_for_word(&SignSeq::block(k - 1, 1))?;
    let c = ratio(q(k), q(k + 1));
    let p2 = chain(&[pk.clone(), pad(&plus(k - 1), &gen(Merge(Plus)), &SignSeq::empty()), small.clone()]).scale(&c);
    let i2 = chain(&[small.clone(), pad(&plus(k - 1), &gen(Fork(Minus)), &SignSeq::empty()), pk.clone()]);
    Ok(DecompositionWitness {
        name: format!("({},0)", k + 1),
        ambient: pk,
        p1: top.clone(),
        i1: top.clone(),
        target1: top,
        p2,
        i2,
        target2: small,
    })
}

/// `+ ⊗ P(k,l) - P(k+1,l)` splits into the clasps on `+^(k-1) -^(l+1)`
/// and `+^k -^(l-1)`.
pub fn witness_ck3(k: usize, l: usize) -> Result<DecompositionWitness> {
    if k < 1 || l < 1 {
        return Err(Error::Domain("the interior witness needs k, l >= 1".into()));
    }
    let lifted = id(&plus(1)).tensor(&clasp_double(Plus, k, l)?);
    let ambient = lifted.sub(&clasp_double(Plus, k + 1, l)?);
    let left = SignSeq::block(k - 1, l + 1);
    let target1 = clasp_for_word(&left)?;
    let inner1 = clasp_for_word(&SignSeq::block(k - 1, l))?;
    let turned1 = minus_then_block(k - 1, l);
    let c1 = ratio(q(k), q(k + 1));
    let p1 = chain(&[lifted.clone(), gen(Merge(Plus)).tensor(&inner1), transition(&turned1, &left)?]).scale(&c1);
    let i1 = chain(&[transition(&left, &turned1)?, gen(Fork(Minus)).tensor(&inner1), lifted.clone()]);

    let right = SignSeq::block(k, l - 1);
    let target2 = clasp_for_word(&right)?;
    let turned2 = minus_then_block(k, l - 1);
    let block = SignSeq::block(k, l);
    let c2 = ratio(q(l).mul(&q(k + l + 1)), q(l + 1).mul(&q(k + l + 2)));
    let p2 = chain(&[
        id(&plus(1)).tensor(&transition(&block, &turned2)?),
        gen(Cap(Plus)).tensor(&target2),
    ])
    .scale(&c2);
    let i2 = chain(&[gen(Cup(Plus)).tensor(&target2), id(&plus(1)).tensor(&transition(&turned2, &block)?)]);
    Ok(DecompositionWitness { name: format!("({k},{l})"), ambient, p1, p2, i1, i2, target1, target2 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QIdentity {
    /// The single clasp recursion rearranged as a split of `P(k) ⊗ 1`.
    Edge,
    /// The double clasp recursion rearranged as a split of `1 ⊗ P(k,l) - P(k+1,l)`.
    Interior,
}

impl FromStr for QIdentity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eq3.2" | "edge" => Ok(QIdentity::Edge),
            "eq3.3" | "interior" => Ok(QIdentity::Interior),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown identity {s:?}") }),
        }
    }
}

/// Both sides of a quantum-coefficient identity and their difference.
#[derive(Clone, Debug)]
pub struct IdentityRecord {
    pub name: String,
    pub lhs: Morphism,
    pub rhs: Morphism,
    pub difference: Morphism,
}

impl IdentityRecord {
    pub fn holds(&self) -> bool {
        self.difference.is_zero()
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "name": self.name,
            "holds": self.holds(),
            "lhs": self.lhs.to_json_value(),
            "rhs": self.rhs.to_json_value(),
            "difference": self.difference.to_json_value(),
        })
    }

    pub fn report(&self) -> Report {
        let mut r = Report::new(self.name.clone());
        r.equal("lhs = rhs", &self.lhs, &self.rhs);
        r
    }
}

pub fn q_identity_report(which: QIdentity, k: usize, l: usize) -> Result<IdentityRecord> {
    let (name, lhs, rhs) = match which {
        QIdentity::Edge => {
            if k < 1 {
                return Err(Error::Domain("edge identity needs k >= 1".into()));
            }
            let pk = clasp_for_word(&plus(k))?.tensor(&id(&plus(1)));
            let sandwich = chain(&[pk.clone(), pad(&plus(k - 1), &pair_web(Plus), &SignSeq::empty()), pk.clone()]);
            let lhs = clasp_for_word(&plus(k + 1))?.add(&sandwich.scale(&ratio(q(k), q(k + 1))));
            (format!("edge identity k={k}"), lhs, pk)
        }
        QIdentity::Interior => {
            if k < 1 || l < 1 {
                return Err(Error::Domain("interior identity needs k, l >= 1".into()));
            }
            let one = id(&plus(1));
            let lifted = one.tensor(&clasp_double(Plus, k, l)?);
            let lhs = lifted.sub(&clasp_double(Plus, k + 1, l)?);
            let ladder = pair_web(Plus).tensor(&id(&SignSeq::block(k - 1, l)));
            let first = chain(&[lifted.clone(), ladder, lifted.clone()]);
            let block = SignSeq::block(k, l);
            let turned = minus_then_block(k, l - 1);
            let rest = SignSeq::block(k, l - 1);
            let second = chain(&[
                one.tensor(&transition(&block, &turned)?),
                gen(Cap(Plus)).tensor(&id(&rest)),
                gen(Cup(Plus)).tensor(&id(&rest)),
                one.tensor(&transition(&turned, &block)?),
            ]);
            let c1 = ratio(q(k), q(k + 1));
            let c2 = ratio(q(l), q(k + 1).mul(&q(k + l + 2)));
            (format!("interior identity k={k} l={l}"), lhs, first.scale(&c1).add(&second.scale(&c2)))
        }
    };
    let difference = lhs.sub(&rhs);
    Ok(IdentityRecord { name, lhs, rhs, difference })
}

/// Crossing the two factors conjugates `P(eps) ⊗ P(delta)` into `P(delta) ⊗ P(eps)`.
pub fn verify_commutativity(eps: &SignSeq, delta: &SignSeq) -> Result<Report> {
    let mut r = Report::new(format!("commutativity {eps} {delta}"));
    let (pe, pd) = (clasp_for_word(eps)?, clasp_for_word(delta)?);
    let c = braid(eps, delta, Polarity::Positive);
    let ci = braid(delta, eps, Polarity::Negative);
    let lhs = pe.tensor(&pd);
    let rhs = pd.tensor(&pe);
    r.equal("crossing intertwines", &lhs.then(&c), &c.then(&rhs));
    r.equal("round trip", &chain(&[lhs.clone(), c, ci]), &lhs);
    Ok(r)
}

/// Transitions between `eps` and its block word are mutually inverse
/// Karoubi isomorphisms.
pub fn verify_standardization(eps: &SignSeq) -> Result<Report> {
    let block = SignSeq::block(eps.count(Plus), eps.count(Minus));
    let mut r = Report::new(format!("standardization {eps}"));
    let pe = clasp_for_word(eps)?;
    let pb = clasp_for_word(&block)?;
    let there = transition(eps, &block)?;
    let back = transition(&block, eps)?;
    r.equal("there and back", &there.then(&back), &pe);
    r.equal("back and there", &back.then(&there), &pb);
    r.equal("forward is a Karoubi morphism", &chain(&[pe.clone(), there.clone(), pb.clone()]), &there);
    r.equal("backward is a Karoubi morphism", &chain(&[pb, back.clone(), pe]), &back);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds() {
        assert_eq!(cheb(0, 0), BivarPoly::one());
        assert_eq!(cheb(1, 0), BivarPoly::x());
        assert_eq!(cheb(0, 1), BivarPoly::y());
        assert_eq!(cheb(1, 1).to_string(), "x*y - 1");
        assert_eq!(cheb(2, 0).to_string(), "x^2 - y");
    }

    #[test]
    fn dimensions_at_one() {
        assert_eq!(dim_q1(0, 0), BigInt::from(1));
        assert_eq!(dim_q1(1, 1), BigInt::from(8));
        assert_eq!(dim_q1(2, 0), BigInt::from(6));
    }

    #[test]
    fn display_signs_and_coefficients() {
        let p = BivarPoly::monomial(-2, 2, 1).add(&BivarPoly::monomial(3, 0, 0));
        assert_eq!(p.to_string(), "-2*x^2*y + 3");
        assert_eq!(BivarPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_terms_sorted_by_degree_pair() {
        let v = cheb(1, 1).to_json_value();
        let t = v["terms"].as_array().unwrap();
        assert_eq!(t[0], json!({"x": 0, "y": 0, "coeff": "-1"}));
        assert_eq!(t[1], json!({"x": 1, "y": 1, "coeff": "1"}));
    }

    #[test]
    fn ck1_witness_passes() {
        let r = verify_split_sum(&witness_ck1().unwrap()).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn trivial_witness_passes() {
        let p = clasp_double(Plus, 1, 1).unwrap();
        let r = verify_split_sum(&DecompositionWitness::trivial("P(1,1)", p)).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn corrupted_witness_fails() {
        let mut w = witness_ck1().unwrap();
        w.p2 = gen(Cap(Plus));
        let r = verify_split_sum(&w).unwrap();
        assert!(!r.passed());
        let bad = r.checks.iter().find(|c| c.name == "p2 i2 = target2").unwrap();
        assert!(!bad.passed);
        assert!(bad.residual.as_ref().is_some_and(|m| !m.is_zero()));
    }
}
