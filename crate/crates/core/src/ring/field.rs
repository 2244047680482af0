use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default characteristic for computations that morally live in characteristic zero.
pub const DEFAULT_PRIME: u32 = 32003;

/// Coefficient field of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::PrimeField(DEFAULT_PRIME)
    }
}

/// An element of a [`FieldSpec`]. Prime-field elements are stored reduced in `0..p`,
/// rationals in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp(u32),
    Q(Box<BigRational>),
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// Prime fields must have odd prime characteristic below 2^31.
    pub fn prime(p: u32) -> Result<Self> {
        if p <= 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "{p} is not an odd prime below 2^31"
            )));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(Box::new(BigRational::zero())),
            FieldSpec::PrimeField(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(Box::new(BigRational::one())),
            FieldSpec::PrimeField(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(Box::new(BigRational::from_integer(n.into()))),
            FieldSpec::PrimeField(p) => Scalar::Fp(n.rem_euclid(*p as i64) as u32),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(Box::new(BigRational::from_integer(n.clone()))),
            FieldSpec::PrimeField(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Scalar::Fp(r.to_u32().expect("residue fits in u32"))
            }
        }
    }

    /// `num / den` as a field element; fails when `den` vanishes in the field.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let d = self.from_bigint(den);
        if self.is_zero(&d) {
            return Err(Error::NotRepresentable {
                field: self.to_string(),
                msg: format!("division by {den}"),
            });
        }
        let n = self.from_bigint(num);
        Ok(self.div(&n, &d))
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fp(v) => *v == 0,
            Scalar::Q(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fp(v) => *v == 1,
            Scalar::Q(q) => q.is_one(),
        }
    }

    #[inline]
    fn modulus(&self) -> u64 {
        match self {
            FieldSpec::PrimeField(p) => *p as u64,
            FieldSpec::Rationals => unreachable!("prime-field element in a rational ring"),
        }
    }

    #[inline]
    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u64 + *y as u64) % self.modulus()) as u32)
            }
            (Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(Box::new(&**x + &**y)),
            _ => panic!("scalars from different fields"),
        }
    }

    #[inline]
    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Fp(0) => Scalar::Fp(0),
            Scalar::Fp(x) => Scalar::Fp((self.modulus() - *x as u64) as u32),
            Scalar::Q(x) => Scalar::Q(Box::new(-&**x)),
        }
    }

    #[inline]
    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Fp(x), Scalar::Fp(y)) => {
                let p = self.modulus();
                Scalar::Fp(((*x as u64 + p - *y as u64) % p) as u32)
            }
            (Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(Box::new(&**x - &**y)),
            _ => panic!("scalars from different fields"),
        }
    }

    #[inline]
    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u64 * *y as u64) % self.modulus()) as u32)
            }
            (Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(Box::new(&**x * &**y)),
            _ => panic!("scalars from different fields"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Fp(x) => {
                assert!(*x != 0, "inverse of zero");
                let p = self.modulus();
                Scalar::Fp(pow_mod(*x as u64, p - 2, p) as u32)
            }
            Scalar::Q(x) => {
                assert!(!x.is_zero(), "inverse of zero");
                Scalar::Q(Box::new(x.recip()))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    /// Lift to a rational number: prime-field elements use the symmetric representative.
    pub fn to_rational(&self, a: &Scalar) -> BigRational {
        match a {
            Scalar::Fp(x) => {
                let p = self.modulus() as i64;
                let v = *x as i64;
                let v = if v > p / 2 { v - p } else { v };
                BigRational::from_integer(v.into())
            }
            Scalar::Q(q) => (**q).clone(),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
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

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::PrimeField(p) => write!(f, "GF:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `QQ` or `GF:p`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("QQ") {
            return Ok(FieldSpec::Rationals);
        }
        let rest = s
            .strip_prefix("GF:")
            .or_else(|| s.strip_prefix("gf:"))
            .ok_or_else(|| Error::InvalidField(format!("expected QQ or GF:p, got `{s}`")))?;
        let p: u32 = rest
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad modulus `{rest}`")))?;
        FieldSpec::prime(p)
    }
}

/// Signed numerator/denominator view of a scalar, for printing.
pub(crate) struct SignedCoeff {
    pub negative: bool,
    pub abs: BigRational,
}

impl SignedCoeff {
    pub fn of(field: &FieldSpec, a: &Scalar) -> Self {
        let q = field.to_rational(a);
        SignedCoeff {
            negative: q.is_negative(),
            abs: q.abs(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf5_product_wraps() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(f.mul(&f.from_i64(2), &f.from_i64(3)), f.one());
    }

    #[test]
    fn inverses_and_negation() {
        for field in [FieldSpec::prime(32003).unwrap(), FieldSpec::Rationals] {
            for n in [1i64, 2, -7, 12345] {
                let a = field.from_i64(n);
                assert!(field.is_zero(&field.add(&a, &field.neg(&a))));
                assert!(field.is_one(&field.mul(&a, &field.inv(&a))));
            }
        }
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(FieldSpec::prime(2).is_err());
        assert!(FieldSpec::prime(9).is_err());
        assert!("GF:15".parse::<FieldSpec>().is_err());
        assert_eq!("GF:7".parse::<FieldSpec>().unwrap(), FieldSpec::PrimeField(7));
        assert_eq!("QQ".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
    }

    #[test]
    fn fraction_not_representable_mod_p() {
        let f = FieldSpec::prime(7).unwrap();
        assert!(f.from_fraction(&1.into(), &14.into()).is_err());
        let half = f.from_fraction(&1.into(), &2.into()).unwrap();
        assert_eq!(f.mul(&half, &f.from_i64(2)), f.one());
    }
}
