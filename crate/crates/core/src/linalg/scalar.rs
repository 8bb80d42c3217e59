use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LinalgError;

/// Small rationals are kept in machine words while both parts stay below this
/// bound, so that every intermediate of one operation fits in an `i128`.
const SMALL_LIMIT: i128 = 1 << 62;

/// The ground field of a computation: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Field {
    Rational,
    Prime { p: u32 },
}

impl Field {
    pub fn prime(p: u64) -> Result<Self, LinalgError> {
        if p < 2 || p > u32::MAX as u64 / 2 || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Field::Prime { p: p as u32 })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime { p } => *p as u64,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(0, 1),
            Field::Prime { p } => Scalar::Fp(0, *p),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::from_i128_ratio(n as i128, 1),
            Field::Prime { p } => Scalar::Fp(n.rem_euclid(*p as i64) as u32, *p),
        }
    }

    /// `num / den` in this field; `None` when `den` vanishes in the field.
    pub fn ratio(&self, num: i64, den: i64) -> Option<Scalar> {
        let d = self.from_i64(den);
        if d.is_zero() {
            return None;
        }
        Some(&self.from_i64(num) / &d)
    }

    /// Parses `"7"`, `"-3/2"` and maps the value into the field.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, LinalgError> {
        let bad = || LinalgError::ParseScalar(text.to_string());
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(text).map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(bad());
        }
        match self {
            Field::Rational => Ok(Scalar::from_big(BigRational::new(num, den))),
            Field::Prime { p } => {
                let pb = BigInt::from(*p);
                let n = num.mod_floor(&pb).to_u32().ok_or_else(bad)?;
                let d = den.mod_floor(&pb).to_u32().ok_or_else(bad)?;
                if d == 0 {
                    return Err(bad());
                }
                Ok(&Scalar::Fp(n, *p) / &Scalar::Fp(d, *p))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime { p } => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = LinalgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "rational" || s == "q" || s == "Q" {
            return Ok(Field::Rational);
        }
        if let Some(p) = s.strip_prefix("gf:") {
            let p: u64 = p.parse().map_err(|_| LinalgError::ParseField(s.to_string()))?;
            return Field::prime(p);
        }
        Err(LinalgError::ParseField(s.to_string()))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
///
/// Rationals are always in lowest terms with a positive denominator, and a
/// value uses the machine-word form whenever it fits, so derived equality and
/// hashing are value equality. Residues live in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(i64, i64),
    BigQ(Box<BigRational>),
    Fp(u32, u32),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(..) | Scalar::BigQ(_) => Field::Rational,
            Scalar::Fp(_, p) => Field::Prime { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Q(0, _) | Scalar::Fp(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Q(1, 1) | Scalar::Fp(1, _))
    }

    fn from_i128_ratio(num: i128, den: i128) -> Scalar {
        debug_assert!(den != 0);
        let g = gcd_i128(num, den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        if n.abs() < SMALL_LIMIT && d < SMALL_LIMIT {
            Scalar::Q(n as i64, d as i64)
        } else {
            Scalar::BigQ(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))
        }
    }

    fn from_big(r: BigRational) -> Scalar {
        // BigRational::new reduces; new_raw values must be reduced by the caller.
        if let (Some(n), Some(d)) = (r.numer().to_i128(), r.denom().to_i128()) {
            if n.abs() < SMALL_LIMIT && d < SMALL_LIMIT {
                return Scalar::Q(n as i64, d as i64);
            }
        }
        Scalar::BigQ(Box::new(r))
    }

    fn to_big(&self) -> BigRational {
        match self {
            Scalar::Q(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Scalar::BigQ(b) => (**b).clone(),
            Scalar::Fp(..) => panic!("prime-field residue used as a rational"),
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(0, _) | Scalar::Fp(0, _) => panic!("inverse of zero"),
            Scalar::Q(n, d) => {
                if *n < 0 {
                    Scalar::Q(-*d, -*n)
                } else {
                    Scalar::Q(*d, *n)
                }
            }
            Scalar::BigQ(b) => Scalar::from_big(b.recip()),
            Scalar::Fp(v, p) => Scalar::Fp(pow_mod(*v as u64, *p as u64 - 2, *p as u64) as u32, *p),
        }
    }

    /// The value as a rational, for the rational field only.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Fp(..) => None,
            _ => Some(self.to_big()),
        }
    }

    /// Small integer value when the scalar is one (rationals with unit denominator, residues).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(n, 1) => Some(*n),
            Scalar::Fp(v, _) => Some(*v as i64),
            _ => None,
        }
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    if a == 0 {
        1
    } else {
        a
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn same_prime(p: u32, q: u32) -> u32 {
    assert_eq!(p, q, "arithmetic across different prime fields");
    p
}

fn mixed() -> ! {
    panic!("arithmetic mixing rational and prime-field scalars")
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a, b), Scalar::Q(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Scalar::from_i128_ratio(a + c, b)
                } else {
                    Scalar::from_i128_ratio(a * d + c * b, b * d)
                }
            }
            (Scalar::Fp(x, p), Scalar::Fp(y, q)) => {
                let p = same_prime(*p, *q);
                Scalar::Fp(((*x as u64 + *y as u64) % p as u64) as u32, p)
            }
            (Scalar::Fp(..), _) | (_, Scalar::Fp(..)) => mixed(),
            _ => Scalar::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a, b), Scalar::Q(c, d)) => {
                if *a == 0 || *c == 0 {
                    return Scalar::Q(0, 1);
                }
                if *b == 1 && *d == 1 {
                    return Scalar::from_i128_ratio(*a as i128 * *c as i128, 1);
                }
                Scalar::from_i128_ratio(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            (Scalar::Fp(x, p), Scalar::Fp(y, q)) => {
                let p = same_prime(*p, *q);
                Scalar::Fp(((*x as u64 * *y as u64) % p as u64) as u32, p)
            }
            (Scalar::Fp(..), _) | (_, Scalar::Fp(..)) => mixed(),
            _ => Scalar::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn div(self, rhs: &'a Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(n, d) => Scalar::Q(-*n, *d),
            Scalar::BigQ(b) => Scalar::BigQ(Box::new(-(**b).clone())),
            Scalar::Fp(0, p) => Scalar::Fp(0, *p),
            Scalar::Fp(v, p) => Scalar::Fp(*p - *v, *p),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(n, 1) => write!(f, "{n}"),
            Scalar::Q(n, d) => write!(f, "{n}/{d}"),
            Scalar::BigQ(b) => {
                if b.denom().is_one() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
            Scalar::Fp(v, _) => write!(f, "{v}"),
        }
    }
}

/// Serialized as its exact decimal text, `"3/2"` or `"5"`.
impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl PartialOrd for Scalar {
    /// Rationals compare by value; residues only compare for equality.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Scalar::Fp(a, p), Scalar::Fp(b, q)) if p == q => {
                if a == b {
                    Some(Ordering::Equal)
                } else {
                    None
                }
            }
            (Scalar::Fp(..), _) | (_, Scalar::Fp(..)) => None,
            _ => {
                let d = self.to_big() - other.to_big();
                Some(if d.is_zero() {
                    Ordering::Equal
                } else if d.is_positive() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let q = Field::Rational;
        let a = q.parse_scalar("6/4").unwrap();
        assert_eq!(a, Scalar::Q(3, 2));
        assert_eq!(q.parse_scalar("-2/-4").unwrap(), Scalar::Q(1, 2));
        assert_eq!(q.parse_scalar("3/-6").unwrap(), Scalar::Q(-1, 2));
        assert!((&a - &a).is_zero());
        assert_eq!((&a * &a.inv()), q.one());
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let q = Field::Rational;
        let big = q.from_i64(1 << 61);
        let sq = &big * &big;
        assert!(matches!(sq, Scalar::BigQ(_)));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back, Scalar::Q(..)));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let three = f.from_i64(3);
        assert_eq!(&three * &three.inv(), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert_eq!(f.parse_scalar("1/2").unwrap(), f.from_i64(4));
        assert!(f.parse_scalar("1/7").is_err());
        assert!(Field::prime(9).is_err());
    }

    #[test]
    fn field_names_round_trip() {
        for s in ["rational", "gf:2", "gf:101"] {
            let f: Field = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("gf:4".parse::<Field>().is_err());
    }

    #[test]
    #[should_panic(expected = "mixing")]
    fn mixed_fields_panic() {
        let _ = &Field::Rational.one() + &Field::prime(2).unwrap().one();
    }
}
