//! Sparse multivariate polynomials over an exact coefficient ring.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], ordered graded
//! lexicographically, so equality is structural and iteration and
//! serialization are deterministic. Zero coefficients are never stored.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::arith::{DyadicRational, PrimeField};
use crate::error::{Error, Result};

/// A commutative coefficient ring with exact arithmetic.
pub trait Ring: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Splits an element into a sign flag and its magnitude rendered as text.
    /// Fields with canonical non-negative representatives never report negative.
    fn render(&self, a: &Self::Elem) -> (bool, String);
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::add(self, *a, *b)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::sub(self, *a, *b)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::mul(self, *a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        PrimeField::neg(self, *a)
    }
    fn from_i64(&self, n: i64) -> u64 {
        PrimeField::from_i64(self, n)
    }
    fn render(&self, a: &u64) -> (bool, String) {
        (false, a.to_string())
    }
}

/// The integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IntegerRing;

impl Ring for IntegerRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn render(&self, a: &BigInt) -> (bool, String) {
        (a.is_negative(), a.abs().to_string())
    }
}

/// Z[1/2].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DyadicRing;

impl Ring for DyadicRing {
    type Elem = DyadicRational;

    fn zero(&self) -> DyadicRational {
        DyadicRational::zero()
    }
    fn one(&self) -> DyadicRational {
        DyadicRational::one()
    }
    fn is_zero(&self, a: &DyadicRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &DyadicRational, b: &DyadicRational) -> DyadicRational {
        a + b
    }
    fn sub(&self, a: &DyadicRational, b: &DyadicRational) -> DyadicRational {
        a - b
    }
    fn mul(&self, a: &DyadicRational, b: &DyadicRational) -> DyadicRational {
        a * b
    }
    fn neg(&self, a: &DyadicRational) -> DyadicRational {
        -a
    }
    fn from_i64(&self, n: i64) -> DyadicRational {
        DyadicRational::from(n)
    }
    fn render(&self, a: &DyadicRational) -> (bool, String) {
        let neg = a.num().is_negative();
        (neg, if neg { (-a).to_string() } else { a.to_string() })
    }
}

/// Exponent vector with its cached total degree.
///
/// Ordered by total degree first, then lexicographically on the exponents
/// (variable 0 most significant).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    degree: u32,
    exps: SmallVec<[u32; 8]>,
}

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        Self {
            degree: exps.iter().sum(),
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self {
            degree: 0,
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    fn mul(&self, other: &Self) -> Self {
        Self {
            degree: self.degree + other.degree,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn with_exp(&self, var: usize, e: u32) -> Self {
        let mut exps = self.exps.clone();
        let degree = self.degree - exps[var] + e;
        exps[var] = e;
        Self { degree, exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Result of a homogeneity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial, homogeneous of every degree.
    Any,
    Degree(u32),
    Inhomogeneous,
}

impl Homogeneity {
    pub fn degree(self) -> Option<u32> {
        match self {
            Homogeneity::Degree(d) => Some(d),
            _ => None,
        }
    }

    /// True when compatible with degree `d`.
    pub fn admits(self, d: u32) -> bool {
        matches!(self, Homogeneity::Any) || self == Homogeneity::Degree(d)
    }
}

#[derive(Clone, Debug)]
pub struct SparsePoly<R: Ring> {
    ring: R,
    nvars: usize,
    terms: BTreeMap<Monomial, R::Elem>,
}

impl<R: Ring> PartialEq for SparsePoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.ring == other.ring && self.terms == other.terms
    }
}

impl<R: Ring> SparsePoly<R> {
    pub fn zero(ring: R, nvars: usize) -> Self {
        Self {
            ring,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: R, nvars: usize, c: R::Elem) -> Self {
        let mut out = Self::zero(ring, nvars);
        if !out.ring.is_zero(&c) {
            out.terms.insert(Monomial::one(nvars), c);
        }
        out
    }

    pub fn one(ring: R, nvars: usize) -> Self {
        let c = ring.one();
        Self::constant(ring, nvars, c)
    }

    pub fn var(ring: R, nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range");
        let mut exps = vec![0u32; nvars];
        exps[index] = 1;
        Self::monomial(ring.clone(), &exps, ring.one())
    }

    pub fn monomial(ring: R, exps: &[u32], c: R::Elem) -> Self {
        let mut out = Self::zero(ring, exps.len());
        if !out.ring.is_zero(&c) {
            out.terms.insert(Monomial::new(exps), c);
        }
        out
    }

    /// Builds from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(ring: R, nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, R::Elem)>,
    {
        let mut acc: HashMap<Monomial, R::Elem> = HashMap::new();
        for (exps, c) in terms {
            assert_eq!(exps.len(), nvars, "exponent vector length");
            accumulate(&ring, &mut acc, Monomial::new(&exps), c);
        }
        Self::from_accumulator(ring, nvars, acc)
    }

    fn from_accumulator(ring: R, nvars: usize, acc: HashMap<Monomial, R::Elem>) -> Self {
        let terms = acc.into_iter().filter(|(_, c)| !ring.is_zero(c)).collect();
        Self { ring, nvars, terms }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> R::Elem {
        self.terms
            .get(&Monomial::new(exps))
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exps[var]).max()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    fn check_var(&self, var: usize) -> Result<()> {
        if var >= self.nvars {
            return Err(Error::OutOfRange {
                what: "variable index",
                value: var as i64,
                min: 0,
                max: self.nvars as i64 - 1,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.get_mut(m) {
                Some(a) => {
                    let s = self.ring.add(a, c);
                    if self.ring.is_zero(&s) {
                        terms.remove(m);
                    } else {
                        *a = s;
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Ok(Self {
            ring: self.ring.clone(),
            nvars: self.nvars,
            terms,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ring.clone(), self.nvars));
        }
        let mut acc: HashMap<Monomial, R::Elem> =
            HashMap::with_capacity(self.len().max(other.len()) * 2);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(&self.ring, &mut acc, ma.mul(mb), self.ring.mul(ca, cb));
            }
        }
        Ok(Self::from_accumulator(self.ring.clone(), self.nvars, acc))
    }

    pub fn neg(&self) -> Self {
        Self {
            ring: self.ring.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.ring.neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        if self.ring.is_zero(c) {
            return Self::zero(self.ring.clone(), self.nvars);
        }
        Self {
            ring: self.ring.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), self.ring.mul(a, c)))
                .filter(|(_, a)| !self.ring.is_zero(a))
                .collect(),
        }
    }

    /// Multiplies by the monomial with exponents `exps`.
    pub fn shift(&self, exps: &[u32]) -> Self {
        let m = Monomial::new(exps);
        Self {
            ring: self.ring.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(&m), c.clone()))
                .collect(),
        }
    }

    /// `self^e` by repeated squaring; `f^0 = 1`.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(self.ring.clone(), self.nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative. Exponents enter as ring scalars, so over
    /// F_p the derivative of `z^p` vanishes.
    pub fn partial_derivative(&self, var: usize) -> Result<Self> {
        self.check_var(var)?;
        let mut acc = HashMap::new();
        for (m, c) in &self.terms {
            let e = m.exps[var];
            if e == 0 {
                continue;
            }
            let c = self.ring.mul(c, &self.ring.from_i64(e as i64));
            accumulate(&self.ring, &mut acc, m.with_exp(var, e - 1), c);
        }
        Ok(Self::from_accumulator(self.ring.clone(), self.nvars, acc))
    }

    /// The coefficient of `var^degree`, as a polynomial with `var` absent.
    pub fn coeff_of_power(&self, var: usize, degree: u32) -> Result<Self> {
        self.check_var(var)?;
        Ok(Self {
            ring: self.ring.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exps[var] == degree)
                .map(|(m, c)| (m.with_exp(var, 0), c.clone()))
                .collect(),
        })
    }

    /// Splits into `(degree, coefficient)` pairs with respect to `var`.
    pub fn collect_in(&self, var: usize) -> Result<BTreeMap<u32, Self>> {
        self.check_var(var)?;
        let mut out: BTreeMap<u32, BTreeMap<Monomial, R::Elem>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exps[var])
                .or_default()
                .insert(m.with_exp(var, 0), c.clone());
        }
        Ok(out
            .into_iter()
            .map(|(d, terms)| {
                (
                    d,
                    Self {
                        ring: self.ring.clone(),
                        nvars: self.nvars,
                        terms,
                    },
                )
            })
            .collect())
    }

    /// Replaces `var` by `replacement` (which may itself involve `var`).
    pub fn substitute(&self, var: usize, replacement: &Self) -> Result<Self> {
        self.check_var(var)?;
        self.check_compatible(replacement)?;
        let slices = self.collect_in(var)?;
        let mut out = Self::zero(self.ring.clone(), self.nvars);
        let mut power = Self::one(self.ring.clone(), self.nvars);
        let mut at = 0u32;
        for (d, coeff) in slices {
            while at < d {
                power = &power * replacement;
                at += 1;
            }
            out = &out + &(&coeff * &power);
        }
        Ok(out)
    }

    /// Replaces every variable `z_i` by `z_i^q` (exponents multiplied by `q`).
    pub fn inflate(&self, q: u32) -> Self {
        Self {
            ring: self.ring.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let exps: Vec<u32> = m.exps.iter().map(|e| e * q).collect();
                    (Monomial::new(&exps), c.clone())
                })
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => Homogeneity::Any,
            Some(d) if degrees.all(|e| e == d) => Homogeneity::Degree(d),
            Some(_) => Homogeneity::Inhomogeneous,
        }
    }

    pub fn map_coeffs<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> SparsePoly<S> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), f(c)))
            .filter(|(_, c)| !target.is_zero(c))
            .collect();
        SparsePoly {
            ring: target,
            nvars: self.nvars,
            terms,
        }
    }

    /// Re-embeds into a ring of `nvars` variables; `placement[i]` is the new
    /// index of old variable `i`.
    pub fn embed(&self, nvars: usize, placement: &[usize]) -> Self {
        assert_eq!(placement.len(), self.nvars);
        Self {
            ring: self.ring.clone(),
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut exps = vec![0u32; nvars];
                    for (i, &e) in m.exps.iter().enumerate() {
                        exps[placement[i]] += e;
                    }
                    (Monomial::new(&exps), c.clone())
                })
                .collect(),
        }
    }

    /// Drops variables not in `keep`; their exponents must all be zero.
    pub fn project(&self, keep: &[usize]) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            for (i, &e) in m.exps.iter().enumerate() {
                if e != 0 && !keep.contains(&i) {
                    return Err(Error::Internal(format!(
                        "variable {i} still present when projecting"
                    )));
                }
            }
            let exps: Vec<u32> = keep.iter().map(|&i| m.exps[i]).collect();
            terms.insert(Monomial::new(&exps), c.clone());
        }
        Ok(Self {
            ring: self.ring.clone(),
            nvars: keep.len(),
            terms,
        })
    }

    pub fn evaluate(&self, point: &[R::Elem]) -> R::Elem {
        assert_eq!(point.len(), self.nvars);
        let r = &self.ring;
        let mut acc = r.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps.iter()) {
                for _ in 0..e {
                    t = r.mul(&t, x);
                }
            }
            acc = r.add(&acc, &t);
        }
        acc
    }

    /// Text form with terms in descending graded-lex order, e.g.
    /// `3*z1^2*z3 + 4*z2`. The zero polynomial renders as `0`.
    pub fn to_string_with(&self, names: &[&str]) -> String {
        assert!(names.len() >= self.nvars, "not enough variable names");
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (negative, mag) = self.ring.render(c);
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mut factors: Vec<String> = Vec::new();
            if m.degree == 0 || mag != "1" {
                factors.push(mag);
            }
            for (i, &e) in m.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].to_string()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

fn accumulate<R: Ring>(ring: &R, acc: &mut HashMap<Monomial, R::Elem>, m: Monomial, c: R::Elem) {
    match acc.get_mut(&m) {
        Some(a) => *a = ring.add(a, &c),
        None => {
            acc.insert(m, c);
        }
    }
}

impl<R: Ring> Add for &SparsePoly<R> {
    type Output = SparsePoly<R>;
    fn add(self, rhs: Self) -> SparsePoly<R> {
        self.try_add(rhs).expect("incompatible polynomials")
    }
}

impl<R: Ring> Sub for &SparsePoly<R> {
    type Output = SparsePoly<R>;
    fn sub(self, rhs: Self) -> SparsePoly<R> {
        self.try_sub(rhs).expect("incompatible polynomials")
    }
}

impl<R: Ring> Mul for &SparsePoly<R> {
    type Output = SparsePoly<R>;
    fn mul(self, rhs: Self) -> SparsePoly<R> {
        self.try_mul(rhs).expect("incompatible polynomials")
    }
}

impl<R: Ring> Neg for &SparsePoly<R> {
    type Output = SparsePoly<R>;
    fn neg(self) -> SparsePoly<R> {
        SparsePoly::neg(self)
    }
}

/// An ordered list of polynomials sharing ring and variable count.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorPoly<R: Ring> {
    coords: Vec<SparsePoly<R>>,
}

impl<R: Ring> VectorPoly<R> {
    pub fn new(coords: Vec<SparsePoly<R>>) -> Result<Self> {
        if let Some(first) = coords.first() {
            for c in &coords[1..] {
                first.check_compatible(c)?;
            }
        }
        Ok(Self { coords })
    }

    pub fn zero(ring: R, nvars: usize, len: usize) -> Self {
        Self {
            coords: vec![SparsePoly::zero(ring, nvars); len],
        }
    }

    pub fn coords(&self) -> &[SparsePoly<R>] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<SparsePoly<R>> {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(SparsePoly::is_zero)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<_>>()?;
        Ok(Self { coords })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(SparsePoly::neg)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        self.map(|p| p.scale(c))
    }

    /// Multiplies every coordinate by the polynomial `f`.
    pub fn mul_poly(&self, f: &SparsePoly<R>) -> Result<Self> {
        let coords = self
            .coords
            .iter()
            .map(|c| f.try_mul(c))
            .collect::<Result<_>>()?;
        Ok(Self { coords })
    }

    pub fn map(&self, f: impl Fn(&SparsePoly<R>) -> SparsePoly<R>) -> Self {
        Self {
            coords: self.coords.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&SparsePoly<R>) -> Result<SparsePoly<R>>) -> Result<Self> {
        Ok(Self {
            coords: self.coords.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// Sum of all coordinates.
    pub fn coordinate_sum(&self) -> Option<SparsePoly<R>> {
        let mut it = self.coords.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, c| &acc + c))
    }

    pub fn to_strings(&self, names: &[&str]) -> Vec<String> {
        self.coords
            .iter()
            .map(|c| c.to_string_with(names))
            .collect()
    }
}

impl<R: Ring> std::ops::Index<usize> for VectorPoly<R> {
    type Output = SparsePoly<R>;
    fn index(&self, i: usize) -> &SparsePoly<R> {
        &self.coords[i]
    }
}

/// Variable names `prefix{start}`, `prefix{start+1}`, ...
pub fn names(prefix: &str, start: usize, count: usize) -> Vec<String> {
    (start..start + count)
        .map(|i| format!("{prefix}{i}"))
        .collect()
}
