//! Integer, modular, binomial and dyadic-rational arithmetic.
//!
//! Elements of F_p are plain `u64` values in `[0, p)`; the modulus travels with
//! a [`PrimeField`] handle. Binomial coefficients are computed either exactly
//! (big integers) or digit-wise through Lucas's congruence, never in a fixed
//! width that could overflow.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Deterministic primality test by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Arithmetic in the prime field F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// The caller guarantees `p` is an odd prime below 2^31.
    pub(crate) const fn new_unchecked(p: u64) -> Self {
        Self { p }
    }

    pub fn new(p: u64) -> Result<Self> {
        if p.is_multiple_of(2) {
            return Err(Error::EvenModulus(p));
        }
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::InvalidPrime { p, g: 0 });
        }
        Ok(Self { p })
    }

    #[inline]
    pub const fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        let a = a % self.p;
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }

    pub fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn from_u64(&self, x: u64) -> u64 {
        x % self.p
    }

    pub fn from_bigint(&self, x: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        x.mod_floor(&m).to_u64().expect("reduced value fits")
    }

    pub fn from_biguint(&self, x: &BigUint) -> u64 {
        (x % self.p).to_u64().expect("reduced value fits")
    }

    /// `(-1)^e` for a possibly negative exponent.
    pub fn sign(&self, e: i64) -> u64 {
        if e.rem_euclid(2) == 0 {
            1
        } else {
            self.p - 1
        }
    }

    /// `base^e` for an integer exponent; `base` must be invertible when `e < 0`.
    pub fn pow_signed(&self, base: u64, e: i64) -> u64 {
        if e >= 0 {
            self.pow(base, e as u64)
        } else {
            let inv = self.inv(base).expect("negative power of zero");
            self.pow(inv, e.unsigned_abs())
        }
    }
}

/// An odd prime `p` together with the genus `g` it is used for.
///
/// Construction enforces `p` prime, odd and `p ≥ 2g+1`. Factorials mod p are
/// tabulated once so that digit binomials are O(1).
#[derive(Debug, Clone)]
pub struct PrimeContext {
    p: u64,
    g: u32,
    inv2: u64,
    field: PrimeField,
    fact: Vec<u64>,
    inv_fact: Vec<u64>,
}

impl PartialEq for PrimeContext {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.g == other.g
    }
}

impl Eq for PrimeContext {}

impl PrimeContext {
    pub fn new(g: u32, p: u64) -> Result<Self> {
        if g == 0 {
            return Err(Error::InvalidGenus);
        }
        if p.is_multiple_of(2) || !is_prime(p) || p < 2 * g as u64 + 1 || p >= 1 << 31 {
            return Err(Error::InvalidPrime { p, g });
        }
        let field = PrimeField::new_unchecked(p);
        let n = p as usize;
        let mut fact = vec![1u64; n];
        for i in 1..n {
            fact[i] = field.mul(fact[i - 1], i as u64);
        }
        let mut inv_fact = vec![1u64; n];
        inv_fact[n - 1] = field.inv(fact[n - 1]).expect("(p-1)! is a unit");
        for i in (1..n).rev() {
            inv_fact[i - 1] = field.mul(inv_fact[i], i as u64);
        }
        let inv2 = field.inv(2).expect("p is odd");
        Ok(Self {
            p,
            g,
            inv2,
            field,
            fact,
            inv_fact,
        })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn g(&self) -> u32 {
        self.g
    }

    #[inline]
    pub fn inv2(&self) -> u64 {
        self.inv2
    }

    /// `(p-1)/2`.
    #[inline]
    pub fn half(&self) -> u64 {
        (self.p - 1) / 2
    }

    /// Number of marked points, `2g+1`.
    #[inline]
    pub fn n_points(&self) -> usize {
        2 * self.g as usize + 1
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Binomial coefficient mod p for arguments below p.
    fn small_binom(&self, m: u64, n: u64) -> u64 {
        debug_assert!(m < self.p && n < self.p);
        if n > m {
            return 0;
        }
        let f = &self.field;
        f.mul(
            self.fact[m as usize],
            f.mul(self.inv_fact[n as usize], self.inv_fact[(m - n) as usize]),
        )
    }

    /// `binom(m, n) mod p` computed digit by digit.
    pub fn lucas_binom(&self, mut m: u64, mut n: u64) -> u64 {
        let mut acc = 1u64;
        while n > 0 || m > 0 {
            let (mi, ni) = (m % self.p, n % self.p);
            if ni > mi {
                return 0;
            }
            acc = self.field.mul(acc, self.small_binom(mi, ni));
            m /= self.p;
            n /= self.p;
        }
        acc
    }

    /// Like [`lucas_binom`](Self::lucas_binom) with the convention that a
    /// negative lower index gives zero.
    pub fn binom_signed(&self, m: u64, n: i64) -> u64 {
        if n < 0 {
            0
        } else {
            self.lucas_binom(m, n as u64)
        }
    }

    /// `binom(2a, a) ≢ 0 (mod p)`, decided from the base-p digits of `a`.
    pub fn central_binom_nonzero(&self, a: u64) -> bool {
        base_p_digits(a, self.p)
            .into_iter()
            .all(|d| d <= self.half())
    }

    /// `binom((p-1)/2, k) mod p` for `0 ≤ k ≤ p-1`.
    pub fn binom_half(&self, k: u64) -> Result<u64> {
        if k >= self.p {
            return Err(Error::OutOfRange {
                what: "k",
                value: k as i64,
                min: 0,
                max: self.p as i64 - 1,
            });
        }
        Ok(self.small_binom(self.half(), k))
    }

    /// Reduction of a dyadic rational: `num · inv2^exp2`.
    pub fn dyadic_mod_p(&self, x: &DyadicRational) -> u64 {
        let f = &self.field;
        f.mul(f.from_bigint(&x.num), f.pow(self.inv2, x.exp2 as u64))
    }
}

/// Exact binomial coefficient; zero outside `0 ≤ k ≤ n`.
pub fn binom_exact(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Base-p digits, least significant first. Zero gives `[0]`.
pub fn base_p_digits(mut n: u64, p: u64) -> Vec<u64> {
    if n == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    while n > 0 {
        out.push(n % p);
        n /= p;
    }
    out
}

/// An element of Z[1/2], stored as `num / 2^exp2`.
///
/// Canonical form: when `exp2 > 0` the numerator is odd; zero is `0 / 2^0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    num: BigInt,
    exp2: u32,
}

impl DyadicRational {
    pub fn new(num: BigInt, exp2: u32) -> Self {
        let mut x = Self { num, exp2 };
        x.normalize();
        x
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self {
            num: n.into(),
            exp2: 0,
        }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn exp2(&self) -> u32 {
        self.exp2
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.exp2 = 0;
            return;
        }
        let tz = self.num.trailing_zeros().unwrap_or(0).min(self.exp2 as u64) as u32;
        if tz > 0 {
            self.num >>= tz;
            self.exp2 -= tz;
        }
    }

    /// Scales by `2^-k`.
    pub fn div_pow2(&self, k: u32) -> Self {
        Self::new(self.num.clone(), self.exp2 + k)
    }

    /// Converts a rational whose denominator is a power of two.
    pub fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        let (mut n, mut d) = (num.clone(), den.clone());
        let gcd = n.gcd(&d);
        n /= &gcd;
        d /= &gcd;
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        let k = d.trailing_zeros().unwrap_or(0);
        if d != BigInt::one() << k {
            return None;
        }
        Some(Self::new(n, k as u32))
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let e = self.exp2.max(other.exp2);
        (
            &self.num << (e - self.exp2),
            &other.num << (e - other.exp2),
            e,
        )
    }
}

impl Add for &DyadicRational {
    type Output = DyadicRational;
    fn add(self, rhs: Self) -> DyadicRational {
        let (a, b, e) = self.aligned(rhs);
        DyadicRational::new(a + b, e)
    }
}

impl Sub for &DyadicRational {
    type Output = DyadicRational;
    fn sub(self, rhs: Self) -> DyadicRational {
        let (a, b, e) = self.aligned(rhs);
        DyadicRational::new(a - b, e)
    }
}

impl Mul for &DyadicRational {
    type Output = DyadicRational;
    fn mul(self, rhs: Self) -> DyadicRational {
        DyadicRational::new(&self.num * &rhs.num, self.exp2 + rhs.exp2)
    }
}

impl Neg for &DyadicRational {
    type Output = DyadicRational;
    fn neg(self) -> DyadicRational {
        DyadicRational {
            num: -&self.num,
            exp2: self.exp2,
        }
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp2 == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp2)
        }
    }
}

impl fmt::Debug for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for DyadicRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl From<i64> for DyadicRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64) -> PrimeContext {
        PrimeContext::new(1, p).unwrap()
    }

    fn pascal(n: u64, k: u64) -> BigUint {
        let mut row = vec![BigUint::one()];
        for _ in 0..n {
            let mut next = vec![BigUint::one(); row.len() + 1];
            for i in 1..row.len() {
                next[i] = &row[i - 1] + &row[i];
            }
            row = next;
        }
        row.get(k as usize).cloned().unwrap_or_default()
    }

    #[test]
    fn binom_exact_values() {
        assert_eq!(binom_exact(4, 2), BigUint::from(6u32));
        assert_eq!(binom_exact(0, 0), BigUint::one());
        assert_eq!(binom_exact(16, 8), BigUint::from(12870u32));
        assert_eq!(binom_exact(16, 8), pascal(16, 8));
        assert!(binom_exact(3, 4).is_zero());
        assert!(binom_exact(3, -1).is_zero());
        for n in 0..30 {
            for k in 0..=n {
                assert_eq!(binom_exact(n, k as i64), pascal(n, k));
            }
        }
    }

    #[test]
    fn digits() {
        assert_eq!(base_p_digits(7, 5), vec![2, 1]);
        assert_eq!(base_p_digits(0, 7), vec![0]);
        assert_eq!(base_p_digits(21, 11), vec![10, 1]);
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(ctx(3).lucas_binom(5, 2), 1);
        assert_eq!(ctx(5).lucas_binom(6, 3), 0);
        for p in [3, 5, 7, 11] {
            for m in 0..40 {
                assert_eq!(ctx(p).lucas_binom(m, 0), 1);
            }
        }
    }

    #[test]
    fn lucas_matches_exact() {
        for p in [3u64, 5, 7, 11, 13] {
            let c = ctx(p);
            for m in 0..=200u64 {
                for n in 0..=m {
                    let exact = binom_exact(m, n as i64) % p;
                    assert_eq!(
                        BigUint::from(c.lucas_binom(m, n)),
                        exact,
                        "m={m} n={n} p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn central_binomial_criterion() {
        let c = ctx(5);
        assert!(c.central_binom_nonzero(2));
        assert!(c.central_binom_nonzero(0));
        assert!(!c.central_binom_nonzero(3));
        for p in [3u64, 5, 7, 11, 13] {
            let c = ctx(p);
            for a in 0..=500u64 {
                let v = c.lucas_binom(2 * a, a);
                assert_eq!(c.central_binom_nonzero(a), v != 0, "a={a} p={p}");
                if v != 0 {
                    let prod = base_p_digits(a, p)
                        .into_iter()
                        .fold(1, |acc, d| c.field().mul(acc, c.lucas_binom(2 * d, d)));
                    assert_eq!(v, prod);
                }
            }
        }
    }

    #[test]
    fn half_binomial_identities() {
        assert_eq!(ctx(5).binom_half(1).unwrap(), 2);
        assert_eq!(ctx(5).binom_half(0).unwrap(), 1);
        assert_eq!(ctx(5).binom_half(3).unwrap(), 0);
        assert!(ctx(5).binom_half(5).is_err());
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            let c = ctx(p);
            let f = c.field();
            let minus4 = f.from_i64(-4);
            for k in 0..p {
                let lhs = c.binom_half(k).unwrap();
                if k <= c.half() {
                    let rhs = f.mul(f.pow_signed(minus4, -(k as i64)), c.lucas_binom(2 * k, k));
                    assert_eq!(lhs, rhs, "p={p} k={k}");
                } else {
                    assert_eq!(lhs, 0);
                }
            }
            // binom((p-3)/2, k) and binom((p-3)/2, k-1) in terms of binom((p-1)/2, k)
            let small = c.half() - 1;
            for k in 0..=small {
                let rhs = f.mul(c.binom_half(k).unwrap(), 2 * k + 1);
                assert_eq!(c.lucas_binom(small, k), rhs);
            }
            for k in 0..=c.half() {
                let rhs = f.mul(c.binom_half(k).unwrap(), f.from_i64(-2 * k as i64));
                assert_eq!(c.binom_signed(small, k as i64 - 1), rhs);
            }
        }
    }

    #[test]
    fn dyadic_reduction() {
        let c = ctx(5);
        assert_eq!(c.dyadic_mod_p(&DyadicRational::new(1.into(), 1)), 3);
        assert_eq!(c.dyadic_mod_p(&DyadicRational::zero()), 0);
        assert_eq!(c.dyadic_mod_p(&DyadicRational::new(15.into(), 7)), 0);
    }

    #[test]
    fn dyadic_canonical_form() {
        let x = DyadicRational::new(BigInt::from(12), 3);
        assert_eq!(x.num(), &BigInt::from(3));
        assert_eq!(x.exp2(), 1);
        let z = DyadicRational::new(BigInt::zero(), 9);
        assert_eq!(z.exp2(), 0);
        let int = DyadicRational::new(BigInt::from(8), 0);
        assert_eq!(int.num(), &BigInt::from(8));
        assert_eq!(x.to_string(), "3/2^1");
        assert_eq!(
            DyadicRational::from_ratio(&BigInt::from(30), &BigInt::from(256)),
            Some(DyadicRational::new(BigInt::from(15), 7))
        );
        assert_eq!(
            DyadicRational::from_ratio(&BigInt::from(1), &BigInt::from(3)),
            None
        );
    }

    #[test]
    fn context_validation() {
        assert!(PrimeContext::new(1, 4).is_err());
        assert!(PrimeContext::new(2, 3).is_err());
        assert!(PrimeContext::new(1, 2).is_err());
        assert!(PrimeContext::new(0, 5).is_err());
        let c = PrimeContext::new(2, 5).unwrap();
        assert_eq!(c.inv2(), 3);
        assert_eq!(c.half(), 2);
        assert_eq!(c.n_points(), 5);
    }
}
