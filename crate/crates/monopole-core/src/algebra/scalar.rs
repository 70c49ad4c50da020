use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, ToBigInt};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as DeError;
use serde::ser::Error as SerError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::AlgebraError;

const SQRT2_F64: f64 = std::f64::consts::SQRT_2;
const SQRT5_F64: f64 = 2.236_067_977_499_79;
const SQRT10_F64: f64 = 3.162_277_660_168_379_4;

/// An element a + b√2 + c√5 + d√10 of Q(√2,√5), with exact rational
/// coefficients. The basis {1,√2,√5,√10} is linearly independent over Q,
/// so the representation is unique and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraicScalar {
    a: BigRational,
    b: BigRational,
    c: BigRational,
    d: BigRational,
}

impl AlgebraicScalar {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Self { a, b, c, d }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::rational(n, 1)
    }

    /// The rational number num/den.
    pub fn rational(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self {
            a: BigRational::new(BigInt::from(num), BigInt::from(den)),
            b: BigRational::zero(),
            c: BigRational::zero(),
            d: BigRational::zero(),
        }
    }

    /// r·√2 for a rational r = num/den.
    pub fn sqrt2_times(num: i64, den: i64) -> Self {
        let mut s = Self::zero();
        s.b = BigRational::new(BigInt::from(num), BigInt::from(den));
        s
    }

    /// r·√5 for a rational r = num/den.
    pub fn sqrt5_times(num: i64, den: i64) -> Self {
        let mut s = Self::zero();
        s.c = BigRational::new(BigInt::from(num), BigInt::from(den));
        s
    }

    pub fn sqrt2() -> Self {
        Self::sqrt2_times(1, 1)
    }

    pub fn sqrt5() -> Self {
        Self::sqrt5_times(1, 1)
    }

    pub fn sqrt10() -> Self {
        let mut s = Self::zero();
        s.d = BigRational::one();
        s
    }

    /// The golden ratio φ = (1+√5)/2.
    pub fn golden_ratio() -> Self {
        &Self::rational(1, 2) + &Self::sqrt5_times(1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Galois conjugate sending √2 ↦ −√2 (and hence √10 ↦ −√10).
    fn conj_sqrt2(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -self.b.clone(),
            c: self.c.clone(),
            d: -self.d.clone(),
        }
    }

    /// Galois conjugate sending √5 ↦ −√5 (and hence √10 ↦ −√10).
    fn conj_sqrt5(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: self.b.clone(),
            c: -self.c.clone(),
            d: -self.d.clone(),
        }
    }

    /// Exact multiplicative inverse.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        // 1/x = σ₂(x)σ₅(x)σ₂σ₅(x) / N(x) where N(x) = x·σ₂(x)·σ₅(x)·σ₂σ₅(x) ∈ Q.
        let s2 = self.conj_sqrt2();
        let s5 = self.conj_sqrt5();
        let s25 = s2.conj_sqrt5();
        let cofactor = &(&s2 * &s5) * &s25;
        let norm = self * &cofactor;
        debug_assert!(norm.is_rational(), "field norm must be rational");
        debug_assert!(!norm.a.is_zero());
        let inv_norm = norm.a.recip();
        Ok(Self {
            a: &cofactor.a * &inv_norm,
            b: &cofactor.b * &inv_norm,
            c: &cofactor.c * &inv_norm,
            d: &cofactor.d * &inv_norm,
        })
    }

    /// Exact sign: −1, 0 or +1. Zero is structural (all coefficients zero);
    /// otherwise rational interval bounds on the radicals are refined until
    /// the sign is determined, which always terminates for a nonzero value.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let mut bits = 64u32;
        loop {
            let (lo, hi) = self.eval_interval(bits);
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            bits *= 2;
            assert!(bits <= 1 << 16, "sign refinement failed to converge");
        }
    }

    fn eval_interval(&self, bits: u32) -> (BigRational, BigRational) {
        let mut lo = self.a.clone();
        let mut hi = self.a.clone();
        for (coeff, radicand) in [(&self.b, 2u32), (&self.c, 5), (&self.d, 10)] {
            if coeff.is_zero() {
                continue;
            }
            let (rlo, rhi) = sqrt_bounds(radicand, bits);
            let (tlo, thi) = if coeff.is_positive() {
                (coeff * &rlo, coeff * &rhi)
            } else {
                (coeff * &rhi, coeff * &rlo)
            };
            lo += tlo;
            hi += thi;
        }
        (lo, hi)
    }

    pub fn to_f64(&self) -> f64 {
        rat_f64(&self.a) + rat_f64(&self.b) * SQRT2_F64 + rat_f64(&self.c) * SQRT5_F64
            + rat_f64(&self.d) * SQRT10_F64
    }

    /// Coefficients in the order (1, √2, √5, √10).
    pub fn coefficients(&self) -> [&BigRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

fn rat_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("rational out of f64 range")
}

/// Rational bounds lo ≤ √m ≤ hi with hi − lo = 2^−bits.
fn sqrt_bounds(m: u32, bits: u32) -> (BigRational, BigRational) {
    let scale: BigInt = BigInt::one() << bits;
    let floor = (BigInt::from(m) * &scale * &scale).sqrt();
    let lo = BigRational::new(floor.clone(), scale.clone());
    let hi = BigRational::new(floor + 1.to_bigint().unwrap(), scale);
    (lo, hi)
}

impl PartialOrd for AlgebraicScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl Add for &AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn add(self, rhs: &AlgebraicScalar) -> AlgebraicScalar {
        AlgebraicScalar {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            c: &self.c + &rhs.c,
            d: &self.d + &rhs.d,
        }
    }
}

impl Sub for &AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn sub(self, rhs: &AlgebraicScalar) -> AlgebraicScalar {
        AlgebraicScalar {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            c: &self.c - &rhs.c,
            d: &self.d - &rhs.d,
        }
    }
}

impl Neg for &AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn neg(self) -> AlgebraicScalar {
        AlgebraicScalar {
            a: -self.a.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: -self.d.clone(),
        }
    }
}

impl Mul for &AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn mul(self, rhs: &AlgebraicScalar) -> AlgebraicScalar {
        // Basis products: √2·√2=2, √5·√5=5, √10·√10=10, √2·√5=√10,
        // √2·√10=2√5, √5·√10=5√2.
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&rhs.a, &rhs.b, &rhs.c, &rhs.d);
        let two = BigRational::from_integer(2.into());
        let five = BigRational::from_integer(5.into());
        let ten = BigRational::from_integer(10.into());
        AlgebraicScalar {
            a: a1 * a2 + &two * (b1 * b2) + &five * (c1 * c2) + &ten * (d1 * d2),
            b: a1 * b2 + b1 * a2 + &five * (c1 * d2 + d1 * c2),
            c: a1 * c2 + c1 * a2 + &two * (b1 * d2 + d1 * b2),
            d: a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        }
    }
}

impl Div for &AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn div(self, rhs: &AlgebraicScalar) -> AlgebraicScalar {
        let inv = rhs.inverse().expect("division by zero");
        self * &inv
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for AlgebraicScalar {
            type Output = AlgebraicScalar;
            fn $method(self, rhs: AlgebraicScalar) -> AlgebraicScalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn neg(self) -> AlgebraicScalar {
        -&self
    }
}

impl fmt::Debug for AlgebraicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for AlgebraicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (coeff, sym) in [(&self.a, ""), (&self.b, "√2"), (&self.c, "√5"), (&self.d, "√10")] {
            if coeff.is_zero() {
                continue;
            }
            if !first && coeff.is_positive() {
                write!(f, "+")?;
            }
            if sym.is_empty() {
                write!(f, "{coeff}")?;
            } else if coeff.is_one() {
                write!(f, "{sym}")?;
            } else if (-coeff).is_one() {
                write!(f, "-{sym}")?;
            } else {
                write!(f, "{coeff}{sym}")?;
            }
            first = false;
        }
        Ok(())
    }
}

fn rat_pair(r: &BigRational) -> Result<(i64, i64), String> {
    match (r.numer().to_i64(), r.denom().to_i64()) {
        (Some(n), Some(d)) => Ok((n, d)),
        _ => Err(format!("rational {r} exceeds i64 range")),
    }
}

impl Serialize for AlgebraicScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut pairs = [(0i64, 1i64); 4];
        for (slot, coeff) in pairs.iter_mut().zip([&self.a, &self.b, &self.c, &self.d]) {
            *slot = rat_pair(coeff).map_err(S::Error::custom)?;
        }
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AlgebraicScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs = <[(i64, i64); 4]>::deserialize(deserializer)?;
        for (_, den) in &pairs {
            if *den == 0 {
                return Err(D::Error::custom("zero denominator"));
            }
        }
        let rat = |(n, d): (i64, i64)| BigRational::new(BigInt::from(n), BigInt::from(d));
        Ok(Self {
            a: rat(pairs[0]),
            b: rat(pairs[1]),
            c: rat(pairs[2]),
            d: rat(pairs[3]),
        })
    }
}
