//! Exact rationals that stay on machine integers while they fit.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A reduced fraction. Values whose numerator and denominator fit in `i64`
/// are always stored in the small form, so structural equality is value
/// equality.
#[derive(Clone)]
pub enum Rational {
    Small(i64, i64),
    Big(BigRational),
}

use Rational::{Big, Small};

fn from_i128(n: i128, d: i128) -> Rational {
    debug_assert!(d != 0);
    let g = n.gcd(&d);
    let (mut n, mut d) = if g > 1 { (n / g, d / g) } else { (n, d) };
    if d < 0 {
        n = -n;
        d = -d;
    }
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(n), Ok(d)) => Small(n, d),
        _ => Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d))),
    }
}

fn from_big(r: BigRational) -> Rational {
    match (r.numer().to_i64(), r.denom().to_i64()) {
        (Some(n), Some(d)) => Small(n, d),
        _ => Big(r),
    }
}

impl Rational {
    pub fn from_integer(n: BigInt) -> Self {
        from_big(BigRational::from_integer(n))
    }

    pub fn new(n: BigInt, d: BigInt) -> Self {
        from_big(BigRational::new(n, d))
    }

    pub fn from_i64(n: i64) -> Self {
        Small(n, 1)
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Small(n, _) => BigInt::from(*n),
            Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Small(_, d) => BigInt::from(*d),
            Big(r) => r.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Small(_, d) => *d == 1,
            Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Small(n, _) => *n < 0,
            Big(r) => r.is_negative(),
        }
    }

    pub fn recip(&self) -> Self {
        match self {
            Small(n, d) => from_i128(*d as i128, *n as i128),
            Big(r) => from_big(r.recip()),
        }
    }

    fn add_ref(&self, o: &Self) -> Self {
        match (self, o) {
            (Small(0, _), _) => o.clone(),
            (_, Small(0, _)) => self.clone(),
            (Small(a, b), Small(c, d)) => {
                if b == d {
                    from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    from_i128(*a as i128 * *d as i128 + *c as i128 * *b as i128, *b as i128 * *d as i128)
                }
            }
            _ => from_big(self.to_big() + o.to_big()),
        }
    }

    fn mul_ref(&self, o: &Self) -> Self {
        match (self, o) {
            (Small(0, _), _) | (_, Small(0, _)) => Small(0, 1),
            (Small(a, b), Small(c, d)) => from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128),
            _ => from_big(self.to_big() * o.to_big()),
        }
    }

    fn neg_ref(&self) -> Self {
        match self {
            Small(n, d) => match n.checked_neg() {
                Some(m) => Small(m, *d),
                None => from_big(-self.to_big()),
            },
            Big(r) => from_big(-r.clone()),
        }
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Small(a, b), Small(c, d)) => a == c && b == d,
            (Big(x), Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Big(r) => {
                1u8.hash(state);
                r.hash(state);
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Small(a, b), Small(c, d)) => (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128)),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Small(n, 1) => write!(f, "{n}"),
            Small(n, d) => write!(f, "{n}/{d}"),
            Big(r) => write!(f, "{r}"),
        }
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Small(0, 1)
    }
    fn is_zero(&self) -> bool {
        matches!(self, Small(0, _))
    }
}

impl One for Rational {
    fn one() -> Self {
        Small(1, 1)
    }
    fn is_one(&self) -> bool {
        matches!(self, Small(1, 1))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Small(n, 1)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, o: &Rational) -> Rational {
                self.$f(o)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $m(self, o: &Rational) -> Rational {
                (&self).$f(o)
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, o: Rational) -> Rational {
                (&self).$f(&o)
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $m(self, o: Rational) -> Rational {
                self.$f(&o)
            }
        }
    };
}

impl Rational {
    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }

    fn div_ref(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "rational division by zero");
        self.mul_ref(&o.recip())
    }
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);
binop!(Div, div, div_ref);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, o: &Rational) {
        *self = self.add_ref(o);
    }
}

impl AddAssign<Rational> for Rational {
    fn add_assign(&mut self, o: Rational) {
        *self = self.add_ref(&o);
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, o: &Rational) {
        *self = self.sub_ref(o);
    }
}

impl SubAssign<Rational> for Rational {
    fn sub_assign(&mut self, o: Rational) {
        *self = self.sub_ref(&o);
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, o: &Rational) {
        *self = self.mul_ref(o);
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_ref()
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic() {
        let a = Rational::from(3) / Rational::from(6);
        assert_eq!(a, Small(1, 2));
        assert_eq!(&a + &a, Rational::one());
        assert_eq!(&a - &a, Rational::zero());
        assert_eq!(a.recip(), Rational::from(2));
        assert_eq!(-Rational::from(2) * &a, Rational::from(-1));
    }

    #[test]
    fn promotes_and_demotes() {
        let big = Rational::from(i64::MAX) * Rational::from(4);
        assert!(matches!(big, Big(_)));
        let back = big / Rational::from(4);
        assert_eq!(back, Rational::from(i64::MAX));
        assert!(matches!(back, Small(..)));
        assert_eq!(-Rational::from(i64::MIN), Rational::from_integer(-BigInt::from(i64::MIN)));
    }

    #[test]
    fn ordering_matches_value() {
        let a = Rational::from(1) / Rational::from(3);
        let b = Rational::from(1) / Rational::from(2);
        assert!(a < b);
        assert!(Rational::from(-1) < a);
    }
}
