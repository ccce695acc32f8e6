//! Exact arithmetic in Q(v) with v = q^(1/6), plus quantum integers.
//!
//! q^(1/2) is `v^3`, q^(1/3) is `v^2` and q itself is `v^6`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use crate::rational::Rational;

type Q = Rational;
type IntTerms = Vec<(i32, BigInt)>;

/// A Laurent polynomial in `v` with rational coefficients.
///
/// Stored densely: `coeffs[i]` is the coefficient of `v^(low + i)`. Both ends
/// of `coeffs` are nonzero, and the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<Q>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Q::from_integer(BigInt::from(n)))
    }

    /// `c * v^e`.
    pub fn monomial(c: Q, e: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: e, coeffs: vec![c] }
    }

    /// `v^e`.
    pub fn v_pow(e: i32) -> Self {
        Self::monomial(Q::one(), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Q)>>(terms: I) -> Self {
        let terms: Vec<(i32, Q)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let low = terms.iter().map(|t| t.0).min().unwrap();
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![Q::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::trimmed(low, coeffs)
    }

    fn trimmed(mut low: i32, mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        if lead > 0 {
            coeffs.drain(..lead);
            low += lead as i32;
        }
        LaurentPoly { low, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_exp(&self) -> i32 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn high_exp(&self) -> i32 {
        if self.is_zero() {
            0
        } else {
            self.low + self.coeffs.len() as i32 - 1
        }
    }

    pub fn coeff(&self, e: i32) -> Q {
        let i = e - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            Q::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Q)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i32, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    pub fn leading_coeff(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// The bar involution `v -> v^-1`.
    pub fn star(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly { low: -self.high_exp(), coeffs }
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> Q {
        self.coeffs.iter().fold(Q::zero(), |acc, c| acc + c)
    }

    /// Substitute an integer value for `v`; `v` must be nonzero when negative exponents occur.
    pub fn eval_int(&self, x: i64) -> Q {
        let x = Q::from_integer(BigInt::from(x));
        let mut acc = Q::zero();
        for (e, c) in self.terms() {
            acc += c * pow_q(&x, e);
        }
        acc
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high_exp().max(other.high_exp());
        let mut coeffs = vec![Q::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.low - low) as usize + i] += c;
        }
        Self::trimmed(low, coeffs)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::trimmed(self.low + other.low, coeffs)
    }

    fn neg_ref(&self) -> Self {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficients as an ordinary polynomial after dividing out `v^low`.
    fn as_poly(&self) -> &[Q] {
        &self.coeffs
    }
}

fn pow_q(x: &Q, e: i32) -> Q {
    let mut acc = Q::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_ref(rhs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_ref(&rhs.neg_ref())
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.neg_ref()
    }
}

// Dense ordinary polynomials, index = degree, no trailing zeros.

fn poly_trim(mut p: Vec<Q>) -> Vec<Q> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_divrem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let b_deg = b.len() - 1;
    let b_lead = &b[b_deg];
    let mut r: Vec<Q> = a.to_vec();
    if a.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut quo = vec![Q::zero(); a.len() - b.len() + 1];
    for i in (0..quo.len()).rev() {
        let c = &r[i + b_deg] / b_lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        quo[i] = c;
    }
    (poly_trim(quo), poly_trim(r))
}

fn poly_monic(p: Vec<Q>) -> Vec<Q> {
    let lead = p.last().cloned().unwrap();
    p.into_iter().map(|c| c / &lead).collect()
}

/// Monic gcd of two nonzero ordinary polynomials by Euclid's algorithm.
fn poly_gcd_euclid(a: &[Q], b: &[Q]) -> Vec<Q> {
    let (mut x, mut y) = if a.len() >= b.len() { (a.to_vec(), b.to_vec()) } else { (b.to_vec(), a.to_vec()) };
    y = poly_monic(y);
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { poly_monic(r) };
    }
    poly_monic(x)
}

fn poly_exact_div(a: &[Q], b: &[Q]) -> Vec<Q> {
    let (q, r) = poly_divrem(a, b);
    debug_assert!(r.is_empty());
    q
}

// Arithmetic modulo the Mersenne prime 2^61 - 1.

const MODULUS: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    let p = a as u128 * b as u128;
    let s = (p as u64 & MODULUS) + (p >> 61) as u64;
    let s = (s & MODULUS) + (s >> 61);
    if s >= MODULUS {
        s - MODULUS
    } else {
        s
    }
}

fn sub_mod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + MODULUS - b
    }
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, MODULUS - 2)
}

fn int_mod(n: &BigInt) -> u64 {
    let m = BigInt::from(MODULUS);
    let r = ((n % &m) + &m) % &m;
    r.to_u64().unwrap()
}

fn rational_mod(c: &Q) -> Option<u64> {
    let (n, d) = match c {
        Rational::Small(n, d) => (n.rem_euclid(MODULUS as i64) as u64, d.rem_euclid(MODULUS as i64) as u64),
        Rational::Big(r) => (int_mod(r.numer()), int_mod(r.denom())),
    };
    match d {
        0 => None,
        1 => Some(n),
        _ => Some(mul_mod(n, inv_mod(d))),
    }
}

fn trim_mod(mut p: Vec<u64>) -> Vec<u64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn gcd_mod(a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    let (mut x, mut y) = (a, b);
    while !y.is_empty() {
        let inv = inv_mod(*y.last().unwrap());
        while x.len() >= y.len() {
            let c = mul_mod(*x.last().unwrap(), inv);
            let off = x.len() - y.len();
            for (j, &yj) in y.iter().enumerate() {
                x[off + j] = sub_mod(x[off + j], mul_mod(c, yj));
            }
            x = trim_mod(x);
            if x.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
    let inv = inv_mod(*x.last().unwrap());
    x.into_iter().map(|c| mul_mod(c, inv)).collect()
}

/// Exact division over Q when `b` divides `a`.
fn try_exact_div(a: &[Q], b: &[Q]) -> Option<Vec<Q>> {
    let (q, r) = poly_divrem(a, b);
    r.is_empty().then_some(q)
}

/// For nonzero `a` and `b`, returns `(a/g, b/g, g)` with `g` their monic gcd,
/// or `None` when they are coprime.
///
/// The gcd is first computed modulo a large prime. A constant result there
/// proves coprimality; otherwise the symmetric lift is tried as a divisor
/// and Euclid over Q is the fallback.
fn gcd_cofactors(a: &[Q], b: &[Q]) -> Option<(Vec<Q>, Vec<Q>)> {
    let reduce = |p: &[Q]| -> Option<Vec<u64>> { p.iter().map(rational_mod).collect() };
    if let (Some(am), Some(bm)) = (reduce(a), reduce(b)) {
        if am.last() != Some(&0) && bm.last() != Some(&0) {
            let g = gcd_mod(am, bm);
            if g.len() == 1 {
                return None;
            }
            let half = MODULUS / 2;
            let lifted: Vec<Q> =
                g.iter().map(|&c| if c > half { Q::from(-((MODULUS - c) as i64)) } else { Q::from(c as i64) }).collect();
            if let (Some(qa), Some(qb)) = (try_exact_div(a, &lifted), try_exact_div(b, &lifted)) {
                return Some((qa, qb));
            }
        }
    }
    let g = poly_gcd_euclid(a, b);
    (g.len() > 1).then(|| (poly_exact_div(a, &g), poly_exact_div(b, &g)))
}

/// An element of Q(v) in normal form.
///
/// The denominator is an ordinary monic polynomial with nonzero constant
/// term, coprime to the numerator. All powers of `v` and rational scalings
/// live in the numerator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RingScalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RingScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RingScalar {
    fn from(p: LaurentPoly) -> Self {
        RingScalar { num: p, den: LaurentPoly::one() }
    }
}

impl From<i64> for RingScalar {
    fn from(n: i64) -> Self {
        Self::from(LaurentPoly::from_int(n))
    }
}

impl RingScalar {
    pub fn zero() -> Self {
        Self::from(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn v_pow(e: i32) -> Self {
        Self::from(LaurentPoly::v_pow(e))
    }

    pub fn rational(c: Q) -> Self {
        Self::from(LaurentPoly::constant(c))
    }

    /// Builds `num / den` and brings it to normal form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let shift = den.low;
        let den = den.shift(-shift);
        let mut num = num.shift(-shift);
        if den.coeffs.len() == 1 {
            let c = den.coeffs[0].recip();
            return Self::from(num.scale(&c));
        }
        let mut d: Vec<Q> = den.coeffs;
        if let Some((n, dd)) = gcd_cofactors(num.as_poly(), &d) {
            num = LaurentPoly::trimmed(num.low, n);
            d = dd;
        }
        let lead = d.last().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            d = d.into_iter().map(|c| c * &inv).collect();
        }
        RingScalar { num, den: LaurentPoly::trimmed(0, d) }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn neg(&self) -> Self {
        RingScalar { num: -&self.num, den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = &self.num + &other.num;
            if self.den.is_one() {
                return Self::from(num);
            }
            return Self::normalized(num, self.den.clone());
        }
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::normalized(num, &self.den * &other.den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from(&self.num * &other.num);
        }
        Self::normalized(&self.num * &other.num, &self.den * &other.den)
    }

    /// Multiply by a Laurent polynomial.
    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        if self.den.is_one() {
            return Self::from(&self.num * p);
        }
        Self::normalized(&self.num * p, self.den.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, n: i32) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// The field automorphism `v -> v^-1`.
    pub fn star(&self) -> Self {
        Self::normalized(self.num.star(), self.den.star())
    }

    /// Specialization at `v = 1` (so `q = 1`).
    pub fn eval_at_one(&self) -> Result<Q> {
        let d = self.den.eval_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(self.num.eval_one() / d)
    }

    /// Both numerator and denominator scaled to coprime integer coefficients,
    /// denominator leading coefficient positive.
    fn integral_parts(&self) -> (IntTerms, IntTerms) {
        let mut lcm = BigInt::one();
        for (_, c) in self.num.terms().chain(self.den.terms()) {
            lcm = lcm.lcm(&c.denom());
        }
        let scale = |p: &LaurentPoly| -> Vec<(i32, BigInt)> {
            p.terms().map(|(e, c)| (e, (c.to_big() * BigRational::from_integer(lcm.clone())).to_integer())).collect()
        };
        let mut n = scale(&self.num);
        let mut d = scale(&self.den);
        let mut g = BigInt::zero();
        for (_, c) in n.iter().chain(d.iter()) {
            g = g.gcd(c);
        }
        if !g.is_zero() && !g.is_one() {
            for t in n.iter_mut().chain(d.iter_mut()) {
                t.1 = &t.1 / &g;
            }
        }
        (n, d)
    }
}

/// `[n] = (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2))`, as a sum of powers of `v^3`.
pub fn qint(n: i64) -> RingScalar {
    RingScalar::from(qint_poly(n))
}

pub fn qint_poly(n: i64) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    let m = n.abs();
    let sign = if n < 0 { -1 } else { 1 };
    LaurentPoly::from_terms(
        (0..m).map(|i| ((3 * (m - 1 - 2 * i)) as i32, Q::from_integer(BigInt::from(sign)))),
    )
}

/// `[n]!`.
pub fn qfactorial(n: u32) -> RingScalar {
    (1..=n as i64).fold(RingScalar::one(), |acc, i| acc.mul(&qint(i)))
}

/// Quantum binomial `[n; k] = [n]! / ([k]! [n-k]!)`.
pub fn qbinom(n: i64, k: i64) -> Result<RingScalar> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::Domain(format!("qbinom({n}, {k}) needs 0 <= k <= n")));
    }
    let mut acc = RingScalar::one();
    for i in 1..=k {
        acc = acc.mul(&qint(n - k + i)).div(&qint(i))?;
    }
    Ok(acc)
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(i32, BigInt)]) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms.iter().rev() {
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        if *e == 0 {
            write!(f, "{a}")?;
            continue;
        }
        if !a.is_one() {
            write!(f, "{a}")?;
        }
        if *e == 1 {
            write!(f, "v")?;
        } else {
            write!(f, "v^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&RingScalar::from(self.clone()), f)
    }
}

impl fmt::Display for RingScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (n, d) = self.integral_parts();
        write!(f, "(")?;
        write_terms(f, &n)?;
        write!(f, ")")?;
        if !(d.len() == 1 && d[0].0 == 0 && d[0].1.is_one()) {
            write!(f, "/(")?;
            write_terms(f, &d)?;
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl PartialOrd for RingScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RingScalar {
    /// An arbitrary but fixed total order on normal forms, for deterministic output.
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_string().cmp(&other.to_string())
    }
}

impl FromStr for RingScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = ScalarParser { src: s.as_bytes(), pos: 0 };
        let value = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(value)
    }
}

/// Recursive-descent parser for scalar expressions such as
/// `(v^3 + v^-3)/(v^6 + 1)`, `2v^2 - 1`, `1/[3]` or `[2][4]`.
struct ScalarParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl ScalarParser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<RingScalar> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RingScalar> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.power()?;
                    acc = acc.div(&d).map_err(|_| Error::Parse { pos: at, msg: "division by zero".into() })?;
                }
                Some(c) if c.is_ascii_digit() || c == b'v' || c == b'(' || c == b'[' => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RingScalar> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                _ => false,
            };
            let n = self.integer()?;
            let n = i32::try_from(n).map_err(|_| self.error("exponent too large"))?;
            let n = if neg { -n } else { n };
            return base.pow(n).map_err(|_| self.error("negative power of zero"));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse { pos: start, msg: "integer out of range".into() })
    }

    fn atom(&mut self) -> Result<RingScalar> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'[') => {
                self.pos += 1;
                let neg = if self.peek() == Some(b'-') {
                    self.pos += 1;
                    true
                } else {
                    false
                };
                let n = self.integer()?;
                self.expect(b']')?;
                Ok(qint(if neg { -n } else { n }))
            }
            Some(b'v') => {
                self.pos += 1;
                Ok(RingScalar::v_pow(1))
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                self.skip_ws();
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: BigInt = digits.parse().unwrap();
                Ok(RingScalar::rational(Q::from_integer(n)))
            }
            _ => Err(self.error("expected a number, 'v', '[n]' or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> RingScalar {
        text.parse().unwrap()
    }

    fn q(n: i64) -> Q {
        Q::from_integer(BigInt::from(n))
    }

    #[test]
    fn quantum_integers() {
        assert!(qint(0).is_zero());
        assert_eq!(qint(1), RingScalar::one());
        assert_eq!(qint(2), s("v^3 + v^-3"));
        assert_eq!(qint(3), s("v^6 + 1 + v^-6"));
        assert_eq!(qint(-2), qint(2).neg());
    }

    #[test]
    fn arithmetic_examples() {
        assert!(qint(2).add(&qint(2).neg()).is_zero());
        assert_eq!(qint(2).mul(&qint(2)), qint(3).add(&RingScalar::one()));
        assert_eq!(qint(4).div(&qint(2)).unwrap(), s("v^6 + v^-6"));
        assert!(matches!(qint(3).div(&RingScalar::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn binomials() {
        assert_eq!(qbinom(5, 0).unwrap(), RingScalar::one());
        assert_eq!(qbinom(2, 1).unwrap(), qint(2));
        let b = qbinom(4, 2).unwrap();
        assert!(b.is_laurent());
        assert_eq!(b.num().num_terms(), 5);
        assert_eq!(b, qint(4).mul(&qint(3)).div(&qint(2)).unwrap());
        assert!(qbinom(2, 3).is_err());
    }

    #[test]
    fn star_examples() {
        assert_eq!(RingScalar::v_pow(1).star(), RingScalar::v_pow(-1));
        assert_eq!(qint(3).star(), qint(3));
        assert_eq!(s("v^3 + 2").star(), s("v^-3 + 2"));
        let x = s("(v^2 + 3)/(v^4 - v + 7)");
        assert_eq!(x.star().star(), x);
    }

    #[test]
    fn evaluation_at_one() {
        assert_eq!(qint(3).eval_at_one().unwrap(), q(3));
        assert_eq!(qint(4).div(&qint(2)).unwrap().eval_at_one().unwrap(), q(2));
        let pole = RingScalar::one().div(&s("v^3 - v^-3")).unwrap();
        assert!(matches!(pole.eval_at_one(), Err(Error::PoleAtOne)));
    }

    #[test]
    fn normal_form_is_canonical() {
        let a = s("(v^6 - 1)/(v^3 - 1)");
        assert_eq!(a, s("v^3 + 1"));
        let b = s("(2v)/(4v^3 + 4v)");
        assert_eq!(b.den(), &s("v^2 + 1").num().clone());
        assert_eq!(b.num(), &LaurentPoly::monomial(Q::new(BigInt::from(1), BigInt::from(2)), 0));
        assert_eq!(b.to_string(), "(1)/(2v^2 + 2)");
    }

    #[test]
    fn printing() {
        assert_eq!(qint(3).to_string(), "(v^6 + 1 + v^-6)");
        assert_eq!(qint(2).neg().to_string(), "(-v^3 - v^-3)");
        assert_eq!(RingScalar::zero().to_string(), "0");
        let r = qint(2).div(&qint(3)).unwrap();
        assert_eq!(r.to_string(), "(v^9 + v^3)/(v^12 + v^6 + 1)");
        assert_eq!(s(&r.to_string()), r);
    }

    #[test]
    fn parse_errors_carry_positions() {
        match "v^3 + )".parse::<RingScalar>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        assert!("1/0".parse::<RingScalar>().is_err());
    }

    #[test]
    fn bracket_shorthand() {
        assert_eq!(s("[2][4]"), qint(2).mul(&qint(4)));
        assert_eq!(s("1/[3]").mul(&qint(3)), RingScalar::one());
    }
}
