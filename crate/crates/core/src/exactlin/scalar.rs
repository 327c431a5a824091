use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LinAlgError;

/// The coefficient field of a computation: the rationals or a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Builds `GF(p)`, rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Field, LinAlgError> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(LinAlgError::BadModulus(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::P {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar, LinAlgError> {
        if den == 0 {
            return Err(LinAlgError::DivisionByZero);
        }
        self.from_i64(num).checked_div(&self.from_i64(den))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "p{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = LinAlgError;

    /// Accepts `q`/`Q` for the rationals and `p<N>` for `GF(N)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        let digits = t
            .strip_prefix('p')
            .or_else(|| t.strip_prefix('P'))
            .ok_or_else(|| LinAlgError::BadField(s.to_string()))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| LinAlgError::BadField(s.to_string()))?;
        Field::prime(p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    let g = (a as i128).extended_gcd(&(p as i128));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(p as i128) as u64)
}

/// An exact field element. Rationals are kept in lowest terms with a
/// positive denominator (guaranteed by `BigRational`); prime-field values
/// live in `[0, modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    P { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::P { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::P { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::P { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Result<Scalar, LinAlgError> {
        match self {
            Scalar::Q(q) if q.is_zero() => Err(LinAlgError::DivisionByZero),
            Scalar::Q(q) => Ok(Scalar::Q(q.recip())),
            Scalar::P { value, modulus } => mod_inverse(*value, *modulus)
                .map(|value| Scalar::P {
                    value,
                    modulus: *modulus,
                })
                .ok_or(LinAlgError::DivisionByZero),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, LinAlgError> {
        Ok(self * &rhs.inv()?)
    }

    /// Maps this value into `field`. Rationals reduce mod p when the
    /// denominator is invertible; prime-field values only map to themselves.
    pub fn to_field(&self, field: Field) -> Result<Scalar, LinAlgError> {
        match (self, field) {
            (s, f) if s.field() == f => Ok(s.clone()),
            (Scalar::Q(q), Field::Prime(p)) => {
                let pb = BigInt::from(p);
                let num = q.numer().mod_floor(&pb).to_u64().unwrap_or(0);
                let den = q.denom().mod_floor(&pb).to_u64().unwrap_or(0);
                let den_inv = mod_inverse(den, p).ok_or(LinAlgError::NotRepresentable {
                    value: self.to_string(),
                    field,
                })?;
                Ok(Scalar::P {
                    value: ((num as u128 * den_inv as u128) % p as u128) as u64,
                    modulus: p,
                })
            }
            _ => Err(LinAlgError::NotRepresentable {
                value: self.to_string(),
                field,
            }),
        }
    }

    /// The value as an `i64` when it is an integer (prime-field values are
    /// reported by their representative in `[0, p)`).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Q(_) => None,
            Scalar::P { value, .. } => i64::try_from(*value).ok(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::P { .. } => None,
        }
    }

    /// Sign of a rational; prime-field values report 0 or 1.
    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Q(q) if q.is_negative() => -1,
            Scalar::Q(q) if q.is_zero() => 0,
            Scalar::Q(_) => 1,
            Scalar::P { value, .. } => i32::from(*value != 0),
        }
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::Q(q)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => write!(f, "{q}"),
            Scalar::P { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::P { value: a, modulus: p }, Scalar::P { value: b, modulus: q }) if p == q => {
                Scalar::P {
                    value: (a + b) % p,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
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
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::P { value: a, modulus: p }, Scalar::P { value: b, modulus: q }) if p == q => {
                Scalar::P {
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::P { value, modulus } => Scalar::P {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;

    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;

    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;

    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Field::Rational.from_ratio(n, d).unwrap()
    }

    #[test]
    fn parse_fields() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("p7".parse::<Field>().unwrap(), Field::Prime(7));
        assert!("p8".parse::<Field>().is_err());
        assert!("p1".parse::<Field>().is_err());
        assert!("r".parse::<Field>().is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::Prime(5);
        assert_eq!(&f.from_i64(3) + &f.from_i64(4), f.from_i64(2));
        assert_eq!(-f.from_i64(1), f.from_i64(4));
        assert_eq!(f.from_i64(3).inv().unwrap(), f.from_i64(2));
        assert!(f.zero().inv().is_err());
    }

    #[test]
    fn rational_to_prime_field() {
        assert_eq!(q(1, 2).to_field(Field::Prime(3)).unwrap(), Field::Prime(3).from_i64(2));
        assert!(q(1, 3).to_field(Field::Prime(3)).is_err());
        assert_eq!(q(-1, 1).to_field(Field::Prime(2)).unwrap(), Field::Prime(2).one());
    }

    proptest! {
        #[test]
        fn rational_results_stay_normalized(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            let x = q(a, b);
            let y = q(c, d);
            for r in [&x + &y, &x - &y, &x * &y] {
                let r = r.as_rational().unwrap().clone();
                prop_assert!(r.denom() > &BigInt::zero());
                prop_assert!(r.numer().gcd(r.denom()).is_one());
            }
        }

        #[test]
        fn prime_values_in_range(a in -1000i64..1000, b in -1000i64..1000) {
            let f = Field::Prime(7);
            let r = &f.from_i64(a) * &f.from_i64(b);
            match r {
                Scalar::P { value, .. } => prop_assert!(value < 7),
                _ => prop_assert!(false),
            }
        }
    }
}
