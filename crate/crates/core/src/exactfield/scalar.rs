use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::FieldError;

/// Largest admissible prime modulus.
pub const MAX_PRIME: u64 = 1 << 31;

/// The ground field a scalar lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    Rational,
    Prime(u64),
}

impl FieldKind {
    /// Prime field `F_p`; rejects composites and moduli above [`MAX_PRIME`].
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldKind::Prime(p))
    }

    pub fn is_finite(self) -> bool {
        matches!(self, FieldKind::Prime(_))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            FieldKind::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldKind::Prime(p) => Scalar::Prime {
                residue: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Elements of a prime field in increasing residue order.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            FieldKind::Rational => None,
            FieldKind::Prime(p) => Some(
                (0..p)
                    .map(|residue| Scalar::Prime { residue, modulus: p })
                    .collect(),
            ),
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

impl FromStr for FieldKind {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "Q" {
            return Ok(FieldKind::Rational);
        }
        let digits = t
            .strip_prefix("F_")
            .or_else(|| t.strip_prefix('F'))
            .unwrap_or(t);
        let p: u64 = digits
            .parse()
            .map_err(|_| FieldError::Parse(format!("unknown field descriptor {s:?}")))?;
        FieldKind::prime(p)
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

/// An exact element of `Q` or of a prime field.
///
/// Rationals are kept in lowest terms with a positive denominator (that is
/// what `BigRational` maintains); prime-field residues lie in `0..p`.
/// The std operator impls panic on mixed field kinds; use the `try_*`
/// methods when the operands have not been validated against one field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { residue: u64, modulus: u64 },
}

impl Scalar {
    pub fn rational(numer: i64, denom: i64) -> Result<Self, FieldError> {
        if denom == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Scalar::Rational(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        )))
    }

    pub fn prime(residue: i64, modulus: u64) -> Result<Self, FieldError> {
        Ok(FieldKind::prime(modulus)?.from_i64(residue))
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            Scalar::Rational(_) => FieldKind::Rational,
            Scalar::Prime { modulus, .. } => FieldKind::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { residue, .. } => *residue == 1,
        }
    }

    fn same_kind(&self, other: &Scalar) -> Result<(), FieldError> {
        if self.kind() == other.kind() {
            Ok(())
        } else {
            Err(FieldError::MixedFields(self.kind(), other.kind()))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.same_kind(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Prime { residue: a, modulus },
                Scalar::Prime { residue: b, .. },
            ) => Scalar::Prime {
                residue: (a + b) % modulus,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.try_add(&other.negated())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.same_kind(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Prime { residue: a, modulus },
                Scalar::Prime { residue: b, .. },
            ) => Scalar::Prime {
                residue: (a * b) % modulus,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.same_kind(other)?;
        self.try_mul(&other.inverse()?)
    }

    pub fn negated(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { residue, modulus } => Scalar::Prime {
                residue: (modulus - residue) % modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn inverse(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Prime { residue, modulus } => {
                // Fermat: a^(p-2)
                Scalar::Prime {
                    residue: pow_mod(*residue, modulus - 2, *modulus),
                    modulus: *modulus,
                }
            }
        })
    }

    /// Sort key giving a total order within one field: residues for `F_p`,
    /// numeric order for `Q`.
    pub fn cmp_within(&self, other: &Scalar) -> std::cmp::Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Prime { residue: a, .. }, Scalar::Prime { residue: b, .. }) => a.cmp(b),
            (a, b) => a.kind().cmp(&b.kind()),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$try(rhs).expect("scalar operands from different fields")
            }
        }

        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.negated()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.negated()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Prime { residue, modulus } => write!(f, "{residue} mod {modulus}"),
        }
    }
}

impl FromStr for Scalar {
    type Err = FieldError;

    /// Accepts `"n"`, `"p/q"` and `"k mod p"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || FieldError::Parse(format!("malformed scalar {s:?}"));
        if let Some((k, p)) = t.split_once("mod") {
            let k: BigInt = k.trim().parse().map_err(|_| bad())?;
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            let kind = FieldKind::prime(p)?;
            let r = k.mod_floor(&BigInt::from(p)).to_i64().ok_or_else(bad)?;
            return Ok(kind.from_i64(r));
        }
        if let Some((n, d)) = t.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(FieldError::DivisionByZero);
            }
            return Ok(Scalar::Rational(BigRational::new(n, d)));
        }
        let n: BigInt = t.parse().map_err(|_| bad())?;
        Ok(Scalar::Rational(BigRational::from_integer(n)))
    }
}

impl Scalar {
    /// Parses `s` and requires it to belong to `kind`. Integers written
    /// without `mod` are reduced into a prime field.
    pub fn parse_in(s: &str, kind: FieldKind) -> Result<Scalar, FieldError> {
        let v: Scalar = s.parse()?;
        match (kind, &v) {
            (FieldKind::Prime(p), Scalar::Rational(q)) if q.is_integer() => {
                let r = q
                    .numer()
                    .mod_floor(&BigInt::from(p))
                    .to_i64()
                    .expect("residue fits");
                Ok(kind.from_i64(r))
            }
            (FieldKind::Prime(_), Scalar::Rational(q)) => {
                let n = Scalar::parse_in(&q.numer().to_string(), kind)?;
                let d = Scalar::parse_in(&q.denom().to_string(), kind)?;
                n.try_div(&d)
            }
            _ if v.kind() == kind => Ok(v),
            _ => Err(FieldError::MixedFields(v.kind(), kind)),
        }
    }

    /// Absolute value of a rational scalar as an `i64` if it fits; used by
    /// generators that need small bounded rationals.
    pub fn small_abs(&self) -> Option<i64> {
        match self {
            Scalar::Rational(q) if q.is_integer() => q.numer().abs().to_i64(),
            Scalar::Prime { residue, .. } => Some(*residue as i64),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::rational(n, d).unwrap()
    }

    #[test]
    fn rational_addition() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
    }

    #[test]
    fn prime_multiplication() {
        let a = Scalar::prime(3, 5).unwrap();
        let b = Scalar::prime(4, 5).unwrap();
        assert_eq!(&a * &b, Scalar::prime(2, 5).unwrap());
    }

    #[test]
    fn rationals_are_normalized() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(1, -2).to_string(), "-1/2");
        assert_eq!(q(2, 4).to_string(), "1/2");
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = q(1, 2);
        let b = Scalar::prime(1, 3).unwrap();
        assert!(matches!(a.try_add(&b), Err(FieldError::MixedFields(..))));
        assert!(matches!(a.try_mul(&b), Err(FieldError::MixedFields(..))));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(q(1, 2).try_div(&q(0, 1)), Err(FieldError::DivisionByZero));
        let z = Scalar::prime(0, 7).unwrap();
        assert_eq!(z.inverse(), Err(FieldError::DivisionByZero));
        assert_eq!("1/0".parse::<Scalar>(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn prime_inverse() {
        for r in 1..13 {
            let a = Scalar::prime(r, 13).unwrap();
            assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn composite_moduli_rejected() {
        assert_eq!(FieldKind::prime(4), Err(FieldError::NotPrime(4)));
        assert!(FieldKind::prime(2_147_483_647).is_ok());
        assert!(FieldKind::prime(1).is_err());
    }

    #[test]
    fn parse_and_display() {
        for s in ["0", "-3", "7/9", "-1/2", "3 mod 5", "0 mod 2"] {
            let v: Scalar = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!("-1 mod 5".parse::<Scalar>().unwrap().to_string(), "4 mod 5");
        assert!("x".parse::<Scalar>().is_err());
        assert!("1 mod 6".parse::<Scalar>().is_err());
    }

    #[test]
    fn parse_in_reduces_integers() {
        let f5 = FieldKind::Prime(5);
        assert_eq!(Scalar::parse_in("-1", f5).unwrap(), Scalar::prime(4, 5).unwrap());
        assert_eq!(Scalar::parse_in("1/2", f5).unwrap(), Scalar::prime(3, 5).unwrap());
        assert!(Scalar::parse_in("1 mod 3", f5).is_err());
    }
}
