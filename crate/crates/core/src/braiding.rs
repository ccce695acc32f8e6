//! Crossings expanded into webs, cabled braidings and Reidemeister checks.

use std::fmt;
use std::str::FromStr;

use crate::clasp::{chain, clasp_for_word, pad, pair_web};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::rewrite::Morphism;
use crate::scalar::RingScalar;
use crate::web::{Generator, Sign, SignSeq, WebDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Positive => Polarity::Negative,
            Polarity::Negative => Polarity::Positive,
        }
    }

    pub fn both() -> [Polarity; 2] {
        [Polarity::Positive, Polarity::Negative]
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Polarity::Positive => "positive",
            Polarity::Negative => "negative",
        })
    }
}

/// One elementary crossing. A positive crossing has domain `over ⊗ under`,
/// a negative one (its inverse) has domain `under ⊗ over`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CrossingSpec {
    pub under_sign: Sign,
    pub over_sign: Sign,
    pub polarity: Polarity,
}

impl CrossingSpec {
    pub fn all() -> Vec<CrossingSpec> {
        let mut out = Vec::new();
        for polarity in Polarity::both() {
            for over_sign in [Sign::Plus, Sign::Minus] {
                for under_sign in [Sign::Plus, Sign::Minus] {
                    out.push(CrossingSpec { under_sign, over_sign, polarity });
                }
            }
        }
        out
    }

    pub fn domain(&self) -> SignSeq {
        match self.polarity {
            Polarity::Positive => SignSeq(vec![self.over_sign, self.under_sign]),
            Polarity::Negative => SignSeq(vec![self.under_sign, self.over_sign]),
        }
    }
}

fn v(e: i32) -> RingScalar {
    RingScalar::v_pow(e)
}

fn gen(g: Generator) -> Morphism {
    Morphism::generator(g)
}

fn id(eps: &SignSeq) -> Morphism {
    Morphism::identity(eps)
}

fn single(s: Sign) -> SignSeq {
    SignSeq(vec![s])
}

/// The two-term web expansion of a crossing.
pub fn crossing(spec: CrossingSpec) -> Morphism {
    let (s, t) = (spec.over_sign, spec.under_sign);
    match (spec.polarity, s == t) {
        (Polarity::Positive, true) => {
            id(&SignSeq::repeat(s, 2)).scale(&v(2)).sub(&pair_web(s).scale(&v(-1)))
        }
        (Polarity::Negative, true) => {
            id(&SignSeq::repeat(s, 2)).scale(&v(-2)).sub(&pair_web(s).scale(&v(1)))
        }
        (Polarity::Positive, false) => {
            let turn = gen(Generator::Cap(s)).then(&gen(Generator::Cup(t)));
            turn.scale(&v(-2)).sub(&gen(Generator::H(s)).scale(&v(1)))
        }
        (Polarity::Negative, false) => {
            let turn = gen(Generator::Cap(t)).then(&gen(Generator::Cup(s)));
            turn.scale(&v(2)).sub(&gen(Generator::H(t)).scale(&v(-1)))
        }
    }
}

/// Crossing `left ⊗ right -> right ⊗ left`. The strand entering from the
/// left passes over for a positive crossing and under for a negative one.
pub fn elementary(left: Sign, right: Sign, polarity: Polarity) -> Morphism {
    match polarity {
        Polarity::Positive => crossing(CrossingSpec { over_sign: left, under_sign: right, polarity }),
        Polarity::Negative => crossing(CrossingSpec { over_sign: right, under_sign: left, polarity }),
    }
}

/// Cabled crossing `delta ⊗ eps -> eps ⊗ delta`, every strand of `delta`
/// over (positive) or under (negative) every strand of `eps`.
pub fn braid(delta: &SignSeq, eps: &SignSeq, polarity: Polarity) -> Morphism {
    let mut word = delta.concat(eps);
    let mut out = id(&word);
    let (m, n) = (delta.len(), eps.len());
    for i in (0..m).rev() {
        for j in 0..n {
            let pos = i + j;
            let (a, b) = (word.0[pos], word.0[pos + 1]);
            let step = pad(&word.slice(0, pos), &elementary(a, b, polarity), &word.slice(pos + 2, m + n));
            out = out.then(&step);
            word.0.swap(pos, pos + 1);
        }
    }
    out
}

/// Same cable, sliding the strands of `eps` leftwards one at a time.
pub fn braid_other_order(delta: &SignSeq, eps: &SignSeq, polarity: Polarity) -> Morphism {
    let mut word = delta.concat(eps);
    let mut out = id(&word);
    let (m, n) = (delta.len(), eps.len());
    for j in 0..n {
        for i in (0..m).rev() {
            let pos = i + j;
            let (a, b) = (word.0[pos], word.0[pos + 1]);
            let step = pad(&word.slice(0, pos), &elementary(a, b, polarity), &word.slice(pos + 2, m + n));
            out = out.then(&step);
            word.0.swap(pos, pos + 1);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReidemeisterMove {
    R2,
    R3,
    R4a,
    R4b,
    R1Framed,
}

impl ReidemeisterMove {
    pub fn all() -> [ReidemeisterMove; 5] {
        use ReidemeisterMove::*;
        [R1Framed, R2, R3, R4a, R4b]
    }

    /// Number of signed strands in the move's template.
    pub fn arity(self) -> usize {
        match self {
            ReidemeisterMove::R1Framed => 1,
            ReidemeisterMove::R3 => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for ReidemeisterMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReidemeisterMove::R2 => "R2",
            ReidemeisterMove::R3 => "R3",
            ReidemeisterMove::R4a => "R4a",
            ReidemeisterMove::R4b => "R4b",
            ReidemeisterMove::R1Framed => "R1framed",
        })
    }
}

impl FromStr for ReidemeisterMove {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "r2" => ReidemeisterMove::R2,
            "r3" => ReidemeisterMove::R3,
            "r4a" => ReidemeisterMove::R4a,
            "r4b" => ReidemeisterMove::R4b,
            "r1framed" | "r1" => ReidemeisterMove::R1Framed,
            _ => return Err(Error::Parse { pos: 0, msg: format!("unknown move {s:?}") }),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KinkSide {
    Left,
    Right,
}

/// A single curl on a strand of sign `s`, closed off on the given side.
pub fn kink(s: Sign, polarity: Polarity, side: KinkSide) -> Morphism {
    let st = single(s);
    let sb = single(s.flip());
    match side {
        KinkSide::Right => chain(&[
            pad(&st, &gen(Generator::Cup(s)), &SignSeq::empty()),
            pad(&SignSeq::empty(), &elementary(s, s, polarity), &sb),
            pad(&st, &gen(Generator::Cap(s)), &SignSeq::empty()),
        ]),
        KinkSide::Left => chain(&[
            pad(&SignSeq::empty(), &gen(Generator::Cup(s.flip())), &st),
            pad(&sb, &elementary(s, s, polarity), &SignSeq::empty()),
            pad(&SignSeq::empty(), &gen(Generator::Cap(s.flip())), &st),
        ]),
    }
}

/// The scalar by which a single curl acts on a strand.
pub fn kink_scalar(s: Sign, polarity: Polarity) -> RingScalar {
    let k = kink(s, polarity, KinkSide::Right);
    let strand = WebDiagram::identity(&single(s));
    debug_assert_eq!(k.num_terms(), 1);
    k.coefficient_of(&strand).expect("kink is an endomorphism of one strand")
}

fn check_arity(mv: ReidemeisterMove, signs: &[Sign]) -> Result<()> {
    if signs.len() != mv.arity() {
        return Err(Error::Domain(format!("{mv} takes {} signs, got {}", mv.arity(), signs.len())));
    }
    Ok(())
}

fn word(signs: &[Sign]) -> SignSeq {
    SignSeq(signs.to_vec())
}

/// `f` slides through a strand of sign `t`. With `strand_over` the moving
/// strand passes above `f`.
pub fn naturality(f: &Morphism, t: &SignSeq, strand_over: bool) -> Report {
    let mut r = Report::new(format!("naturality {} -> {} with {}", f.dom(), f.cod(), t));
    let (from_right, from_left) = if strand_over {
        (Polarity::Negative, Polarity::Positive)
    } else {
        (Polarity::Positive, Polarity::Negative)
    };
    let lhs = f.tensor(&id(t)).then(&braid(f.cod(), t, from_right));
    let rhs = braid(f.dom(), t, from_right).then(&id(t).tensor(f));
    r.equal("strand from the right", &lhs, &rhs);
    let lhs = id(t).tensor(f).then(&braid(t, f.cod(), from_left));
    let rhs = braid(t, f.dom(), from_left).then(&f.tensor(&id(t)));
    r.equal("strand from the left", &lhs, &rhs);
    r
}

pub fn verify_reidemeister(mv: ReidemeisterMove, signs: &[Sign]) -> Result<Report> {
    check_arity(mv, signs)?;
    let w = word(signs);
    let mut r = Report::new(format!("{mv} {w}"));
    match mv {
        ReidemeisterMove::R1Framed => {
            let s = signs[0];
            let strand = id(&w);
            for pol in Polarity::both() {
                for a in [KinkSide::Left, KinkSide::Right] {
                    for b in [KinkSide::Left, KinkSide::Right] {
                        let lhs = kink(s, pol, a).then(&kink(s, pol.flip(), b));
                        r.equal(format!("{pol} {a:?} curl then opposite {b:?} curl"), &lhs, &strand);
                    }
                }
            }
        }
        ReidemeisterMove::R2 => {
            let (p, u) = (signs[0], signs[1]);
            for pol in Polarity::both() {
                let lhs = elementary(p, u, pol).then(&elementary(u, p, pol.flip()));
                r.equal(format!("parallel {pol}"), &lhs, &id(&w));
                let (pb, ub) = (p.flip(), u.flip());
                let lhs = chain(&[
                    pad(&single(p), &gen(Generator::Cup(u)), &single(pb)),
                    elementary(p, u, pol).tensor(&elementary(ub, pb, pol.flip())),
                    pad(&single(u), &gen(Generator::Cap(p)), &single(ub)),
                ]);
                let rhs = gen(Generator::Cap(p)).then(&gen(Generator::Cup(u)));
                r.equal(format!("antiparallel {pol}"), &lhs, &rhs);
            }
        }
        ReidemeisterMove::R3 => {
            let (a, b, c) = (signs[0], signs[1], signs[2]);
            for mask in 0..8u8 {
                let pol = |bit: u8| if mask >> bit & 1 == 0 { Polarity::Positive } else { Polarity::Negative };
                let (ab, ac, bc) = (pol(0), pol(1), pol(2));
                if ab == bc && ac != ab {
                    continue;
                }
                let lhs = chain(&[
                    elementary(a, b, ab).tensor(&id(&single(c))),
                    id(&single(b)).tensor(&elementary(a, c, ac)),
                    elementary(b, c, bc).tensor(&id(&single(a))),
                ]);
                let rhs = chain(&[
                    id(&single(a)).tensor(&elementary(b, c, bc)),
                    elementary(a, c, ac).tensor(&id(&single(b))),
                    id(&single(c)).tensor(&elementary(a, b, ab)),
                ]);
                r.equal(format!("ab {ab}, ac {ac}, bc {bc}"), &lhs, &rhs);
            }
        }
        ReidemeisterMove::R4a | ReidemeisterMove::R4b => {
            let (s, t) = (signs[0], signs[1]);
            let over = mv == ReidemeisterMove::R4a;
            for g in [Generator::Fork(s), Generator::Merge(s)] {
                r.merge(naturality(&gen(g), &single(t), over));
            }
        }
    }
    Ok(r)
}

/// Every Reidemeister template under every sign assignment.
pub fn verify_all_reidemeister() -> Result<Report> {
    let mut r = Report::new("reidemeister");
    for mv in ReidemeisterMove::all() {
        for signs in sign_words(mv.arity()) {
            r.merge(verify_reidemeister(mv, &signs.0)?);
        }
    }
    Ok(r)
}

/// Negative crossings are the inverses and the reflections of positive ones.
pub fn verify_inverse_and_star() -> Report {
    let mut r = Report::new("inverse and star");
    for spec in CrossingSpec::all().into_iter().filter(|c| c.polarity == Polarity::Positive) {
        let pos = crossing(spec);
        let neg = crossing(CrossingSpec { polarity: Polarity::Negative, ..spec });
        let name = format!("over {} under {}", spec.over_sign.as_char(), spec.under_sign.as_char());
        r.equal(format!("{name}: negative is star"), &neg, &pos.star());
        r.equal(format!("{name}: positive then negative"), &pos.then(&neg), &id(pos.dom()));
        r.equal(format!("{name}: negative then positive"), &neg.then(&pos), &id(neg.dom()));
    }
    r
}

/// All words of the given length.
pub fn sign_words(n: usize) -> Vec<SignSeq> {
    (0..1usize << n)
        .map(|m| SignSeq((0..n).map(|i| if m >> (n - 1 - i) & 1 == 0 { Sign::Plus } else { Sign::Minus }).collect()))
        .collect()
}

/// Clasps slide through cabled crossings in all four arrangements.
pub fn verify_clasp_slide(delta: &SignSeq, eps: &SignSeq) -> Result<Report> {
    let mut r = Report::new(format!("clasp slide delta={delta} eps={eps}"));
    let pe = clasp_for_word(eps)?;
    let pd = clasp_for_word(delta)?;
    let (ie, id_) = (id(eps), id(delta));
    let c = braid(delta, eps, Polarity::Positive);
    let ci = braid(eps, delta, Polarity::Negative);
    r.equal("eps clasp through crossing", &id_.tensor(&pe).then(&c), &c.then(&pe.tensor(&id_)));
    r.equal("delta clasp through crossing", &pd.tensor(&ie).then(&c), &c.then(&ie.tensor(&pd)));
    r.equal("delta clasp through inverse", &ie.tensor(&pd).then(&ci), &ci.then(&pd.tensor(&ie)));
    r.equal("eps clasp through inverse", &pe.tensor(&id_).then(&ci), &ci.then(&id_.tensor(&pe)));
    Ok(r)
}
