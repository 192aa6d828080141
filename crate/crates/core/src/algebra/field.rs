use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, RngCore};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A computable field. Elements are plain values; all arithmetic goes
/// through the field object so that a runtime-chosen prime can be carried
/// without storing it in every element.
pub trait Field: Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Image of `num/den`; fails when `den` vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem>;
    /// C(n, k) as a field element.
    fn binomial(&self, n: u32, k: u32) -> Self::Elem;
    /// 0 for the rationals.
    fn characteristic(&self) -> u64;
    /// A pseudorandom element (uniform over F_p, small rationals over Q).
    fn sample(&self, rng: &mut dyn RngCore) -> Self::Elem;
    /// Signed textual form, e.g. `-3/4`. Always re-parseable.
    fn format(&self, a: &Self::Elem) -> String;
    fn spec(&self) -> FieldSpec;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `a -= b * c`
    fn sub_mul_assign(&self, a: &mut Self::Elem, b: &Self::Elem, c: &Self::Elem) {
        *a = self.sub(a, &self.mul(b, c));
    }

    /// Whether the element is "negative" for printing purposes.
    fn is_negative(&self, a: &Self::Elem) -> bool {
        self.format(a).starts_with('-')
    }
}

/// Serializable description of a field backend.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

/// The default oracle prime, 2^31 - 1.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime { p: DEFAULT_PRIME }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::Prime { p } => write!(f, "p:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "rational" | "q" | "Q" | "qq" => return Ok(FieldSpec::Rational),
            _ => {}
        }
        let digits = s
            .strip_prefix("p:")
            .or_else(|| s.strip_prefix("p="))
            .ok_or_else(|| Error::InvalidField(format!("expected `rational` or `p:<prime>`, got `{s}`")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad prime `{digits}`")))?;
        PrimeField::new(p)?;
        Ok(FieldSpec::Prime { p })
    }
}

/// The prime field F_p for a prime p < 2^63. Representatives live in [0, p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 63 {
            return Err(Error::InvalidField(format!("{p} does not fit the 63-bit backend")));
        }
        if !is_prime_u64(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn default_prime() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_big(&self, v: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = v.mod_floor(&p);
        r.to_u64().expect("residue fits u64")
    }

    /// C(n, k) mod p for n, k < p.
    fn small_binomial(&self, n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        let k = k.min(n - k);
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..k {
            num = self.mul(&num, &((n - i) % self.p));
            den = self.mul(&den, &((i + 1) % self.p));
        }
        self.div(&num, &den)
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in F_{}", self.p);
        // extended Euclid on i128
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        s0.rem_euclid(self.p as i128) as u64
    }
    fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u64> {
        let d = self.reduce_big(den);
        if d == 0 {
            return Err(Error::NotRepresentable(format!("{num}/{den} mod {}", self.p)));
        }
        Ok(self.div(&self.reduce_big(num), &d))
    }
    fn binomial(&self, n: u32, k: u32) -> u64 {
        // Lucas: product of digit binomials in base p.
        let (mut n, mut k) = (n as u64, k as u64);
        let mut acc = self.one();
        while n > 0 || k > 0 {
            let (nd, kd) = (n % self.p, k % self.p);
            if kd > nd {
                return 0;
            }
            acc = self.mul(&acc, &self.small_binomial(nd, kd));
            n /= self.p;
            k /= self.p;
        }
        acc
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn sample(&self, rng: &mut dyn RngCore) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn format(&self, a: &u64) -> String {
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime { p: self.p }
    }
}

/// The rationals, with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero in Q");
        a.recip()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::NotRepresentable(format!("{num}/0")));
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
    fn binomial(&self, n: u32, k: u32) -> BigRational {
        if k > n {
            return BigRational::zero();
        }
        let b: BigUint = num_integer::binomial(BigUint::from(n), BigUint::from(k));
        BigRational::from_integer(BigInt::from_biguint(Sign::Plus, b))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn sample(&self, rng: &mut dyn RngCore) -> BigRational {
        let num: i64 = rng.gen_range(-40..=40);
        let den: i64 = rng.gen_range(1..=4);
        BigRational::new(num.into(), den.into())
    }
    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
}

/// Parse `a` or `a/b` (optionally signed) into a big rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::Config(format!("bad rational `{text}`"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n % q == 0 {
            return n == q;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        r
    };
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_arithmetic_is_canonical() {
        let f = PrimeField::default_prime();
        let a = f.from_i64(-1);
        assert_eq!(a, DEFAULT_PRIME - 1);
        assert_eq!(f.add(&a, &1), 0);
        assert_eq!(f.mul(&f.inv(&12345), &12345), 1);
        assert_eq!(f.format(&a), "-1");
    }

    #[test]
    fn lucas_binomials() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.binomial(7, 1), 0);
        assert_eq!(f.binomial(7, 7), 1);
        // C(10, 3) = 120 = 1 mod 7
        assert_eq!(f.binomial(10, 3), 120 % 7);
        assert_eq!(f.binomial(3, 5), 0);
    }

    #[test]
    fn rational_binomial_and_ratio() {
        let q = RationalField;
        assert_eq!(q.binomial(6, 3), q.from_i64(20));
        let r = q.from_ratio(&BigInt::from(3), &BigInt::from(-6)).unwrap();
        assert_eq!(q.format(&r), "-1/2");
        assert!(q.from_ratio(&BigInt::from(1), &BigInt::from(0)).is_err());
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("p:2147483647".parse::<FieldSpec>().unwrap(), FieldSpec::default());
        assert_eq!("rational".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert!("p:15".parse::<FieldSpec>().is_err());
        assert!("real".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn ratio_mod_p() {
        let f = PrimeField::new(5).unwrap();
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(10)).is_err());
        assert_eq!(f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap(), 3);
    }
}
