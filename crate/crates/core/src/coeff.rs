//! Integer coefficient types with overflow-aware arithmetic.
//!
//! Every operation returns `None` when the result does not fit. Machine words are
//! tried first; callers redo the computation with `BigInt` on `None`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub trait Coeff: Clone + Eq + Ord + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn to_i64(&self) -> Option<i64>;
    fn to_bigint(&self) -> BigInt;
    fn from_bigint(v: &BigInt) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Floor division; `o` must be positive.
    fn div_floor(&self, o: &Self) -> Option<Self>;
    /// Remainder in `[0, o)`; `o` must be positive.
    fn rem_euclid(&self, o: &Self) -> Self;
    /// `(g, s, t)` with `g = gcd(a, b) = s a + t b`, `g >= 0`.
    fn ext_gcd(a: &Self, b: &Self) -> Option<(Self, Self, Self)>;

    fn is_one(&self) -> bool {
        *self == Self::from_i64(1)
    }

    /// `self + k * o`.
    fn add_mul(&self, k: &Self, o: &Self) -> Option<Self> {
        self.add(&k.mul(o)?)
    }
}

impl Coeff for i64 {
    fn zero() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v
    }
    fn to_i64(&self) -> Option<i64> {
        Some(*self)
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        ToPrimitive::to_i64(v)
    }
    #[inline]
    fn is_zero(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn is_negative(&self) -> bool {
        *self < 0
    }
    #[inline]
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    #[inline]
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    #[inline]
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    #[inline]
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    #[inline]
    fn div_floor(&self, o: &Self) -> Option<Self> {
        self.checked_div_euclid(*o)
    }
    #[inline]
    fn rem_euclid(&self, o: &Self) -> Self {
        i64::rem_euclid(*self, *o)
    }
    fn ext_gcd(a: &Self, b: &Self) -> Option<(Self, Self, Self)> {
        let (g, s, t) = ext_gcd_i128(*a as i128, *b as i128);
        Some((g.try_into().ok()?, s.try_into().ok()?, t.try_into().ok()?))
    }
}

fn ext_gcd_i128(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn to_i64(&self) -> Option<i64> {
        ToPrimitive::to_i64(self)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_floor(&self, o: &Self) -> Option<Self> {
        Some(Integer::div_floor(self, o))
    }
    fn rem_euclid(&self, o: &Self) -> Self {
        Integer::mod_floor(self, o)
    }
    fn ext_gcd(a: &Self, b: &Self) -> Option<(Self, Self, Self)> {
        let e = a.extended_gcd(b);
        if Signed::is_negative(&e.gcd) {
            Some((-e.gcd, -e.x, -e.y))
        } else {
            Some((e.gcd, e.x, e.y))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn ext_gcd_agrees(a in -1000i64..1000, b in -1000i64..1000) {
            let (g, s, t) = <i64 as Coeff>::ext_gcd(&a, &b).unwrap();
            prop_assert!(g >= 0);
            prop_assert_eq!(s * a + t * b, g);
            prop_assert_eq!(g, num_integer::gcd(a, b));
            let (gb, sb, tb) = BigInt::ext_gcd(&BigInt::from(a), &BigInt::from(b)).unwrap();
            prop_assert_eq!(gb.clone(), BigInt::from(g));
            prop_assert_eq!(sb * a + tb * b, gb);
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(i64::MAX.add(&1), None);
        assert_eq!(i64::MIN.neg(), None);
        assert_eq!(Coeff::div_floor(&-7i64, &2), Some(-4));
        assert_eq!(Coeff::rem_euclid(&-7i64, &2), 1);
    }
}
