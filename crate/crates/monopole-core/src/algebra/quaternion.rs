use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::AlgebraicScalar;

/// A quaternion w + xi + yj + zk with coefficients in Q(√2,√5).
///
/// Exact coefficients make group closure computations deterministic: two
/// group elements are equal iff their components are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Quaternion {
    pub w: AlgebraicScalar,
    pub x: AlgebraicScalar,
    pub y: AlgebraicScalar,
    pub z: AlgebraicScalar,
}

impl Quaternion {
    pub fn new(
        w: AlgebraicScalar,
        x: AlgebraicScalar,
        y: AlgebraicScalar,
        z: AlgebraicScalar,
    ) -> Self {
        Self { w, x, y, z }
    }

    pub fn one() -> Self {
        Self::new(
            AlgebraicScalar::one(),
            AlgebraicScalar::zero(),
            AlgebraicScalar::zero(),
            AlgebraicScalar::zero(),
        )
    }

    pub fn i() -> Self {
        Self::new(
            AlgebraicScalar::zero(),
            AlgebraicScalar::one(),
            AlgebraicScalar::zero(),
            AlgebraicScalar::zero(),
        )
    }

    pub fn j() -> Self {
        Self::new(
            AlgebraicScalar::zero(),
            AlgebraicScalar::zero(),
            AlgebraicScalar::one(),
            AlgebraicScalar::zero(),
        )
    }

    pub fn k() -> Self {
        Self::new(
            AlgebraicScalar::zero(),
            AlgebraicScalar::zero(),
            AlgebraicScalar::zero(),
            AlgebraicScalar::one(),
        )
    }

    /// Quaternion conjugate w − xi − yj − zk.
    pub fn conjugate(&self) -> Self {
        Self {
            w: self.w.clone(),
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
    }

    /// w² + x² + y² + z², an element of Q(√2,√5).
    pub fn norm_squared(&self) -> AlgebraicScalar {
        let mut n = &self.w * &self.w;
        n = &n + &(&self.x * &self.x);
        n = &n + &(&self.y * &self.y);
        &n + &(&self.z * &self.z)
    }

    pub fn is_unit(&self) -> bool {
        self.norm_squared().is_one()
    }

    /// Inverse of a unit quaternion (the conjugate).
    pub fn unit_inverse(&self) -> Self {
        debug_assert!(self.is_unit());
        self.conjugate()
    }

    pub fn is_one(&self) -> bool {
        self.w.is_one() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// Components as f64 in the order (w, x, y, z).
    pub fn to_f64(&self) -> [f64; 4] {
        [
            self.w.to_f64(),
            self.x.to_f64(),
            self.y.to_f64(),
            self.z.to_f64(),
        ]
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let (w1, x1, y1, z1) = (&self.w, &self.x, &self.y, &self.z);
        let (w2, x2, y2, z2) = (&rhs.w, &rhs.x, &rhs.y, &rhs.z);
        Quaternion {
            w: &(&(w1 * w2) - &(x1 * x2)) - &(&(y1 * y2) + &(z1 * z2)),
            x: &(&(w1 * x2) + &(x1 * w2)) + &(&(y1 * z2) - &(z1 * y2)),
            y: &(&(w1 * y2) - &(x1 * z2)) + &(&(y1 * w2) + &(z1 * x2)),
            z: &(&(w1 * z2) + &(x1 * y2)) - &(&(y1 * x2) - &(z1 * w2)),
        }
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        &self * &rhs
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion {
            w: &self.w + &rhs.w,
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
            z: &self.z + &rhs.z,
        }
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion {
            w: &self.w - &rhs.w,
            x: &self.x - &rhs.x,
            y: &self.y - &rhs.y,
            z: &self.z - &rhs.z,
        }
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion {
            w: -&self.w,
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} , {} , {} , {})", self.w, self.x, self.y, self.z)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + ({})i + ({})j + ({})k",
            self.w, self.x, self.y, self.z
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half(n: i64) -> AlgebraicScalar {
        AlgebraicScalar::rational(n, 2)
    }

    /// (1 + i + j + k)/2, an element of order 6.
    fn omega() -> Quaternion {
        Quaternion::new(half(1), half(1), half(1), half(1))
    }

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&j * &i, -&k);
        let minus_one = -&Quaternion::one();
        assert_eq!(&i * &i, minus_one);
        assert_eq!(&j * &j, minus_one);
        assert_eq!(&k * &k, minus_one);
    }

    #[test]
    fn omega_has_order_six() {
        let w = omega();
        assert!(w.is_unit());
        let w3 = &(&w * &w) * &w;
        assert_eq!(w3, -&Quaternion::one());
        let w6 = &w3 * &w3;
        assert!(w6.is_one());
    }

    #[test]
    fn conjugate_gives_inverse_on_units() {
        let w = omega();
        assert!((&w * &w.conjugate()).is_one());
        let s = Quaternion::new(
            AlgebraicScalar::sqrt2_times(1, 2),
            AlgebraicScalar::sqrt2_times(1, 2),
            AlgebraicScalar::zero(),
            AlgebraicScalar::zero(),
        );
        assert!(s.is_unit());
        assert!((&s * &s.unit_inverse()).is_one());
    }

    #[test]
    fn conjugate_is_anti_homomorphism() {
        let p = omega();
        let q = Quaternion::new(
            AlgebraicScalar::sqrt2_times(1, 2),
            AlgebraicScalar::zero(),
            AlgebraicScalar::sqrt2_times(1, 2),
            AlgebraicScalar::zero(),
        );
        assert_eq!((&p * &q).conjugate(), &q.conjugate() * &p.conjugate());
    }

    #[test]
    fn norm_is_multiplicative() {
        let p = omega();
        let q = Quaternion::new(
            half(0),
            half(1),
            &AlgebraicScalar::golden_ratio().inverse().unwrap() * &half(1),
            &AlgebraicScalar::golden_ratio() * &half(1),
        );
        assert!(q.is_unit());
        assert_eq!(
            (&p * &q).norm_squared(),
            &p.norm_squared() * &q.norm_squared()
        );
    }
}
