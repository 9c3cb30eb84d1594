//! Polynomial solutions of the KZ system over F_p.
//!
//! Built from the master polynomial `Φ_p = Π_a (t - z_a)^{(p-1)/2}` and the
//! vector `P_j = Φ_p / (t - z_j)`. The solutions `I^m` are Taylor slices of
//! `P` in `t`; `J^m` are the slices of the shifted vector `P(t + z_1)`; `K^m`
//! is `J^m` written in the affine coordinates `λ_j = (z_j - z_1)/(z_2 - z_1)`.

use serde::Serialize;

use crate::arith::PrimeContext;
use crate::enumerate::bounded_compositions;
use crate::error::{Error, Result};
use crate::kz::{solution_degree, z_vars, FpPoly, FpVector};
use crate::poly::{names, SparsePoly, VectorPoly};

/// Ceiling on polynomial sizes before expansion starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_terms: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_terms: 100_000 }
    }
}

impl Limits {
    pub fn unbounded() -> Self {
        Self {
            max_terms: u128::MAX,
        }
    }

    /// Upper bound on the number of terms of `Φ_p`: each `z_a` appears with
    /// exponent at most `(p-1)/2` and the `t`-exponent is then determined.
    pub fn check(&self, ctx: &PrimeContext) -> Result<()> {
        let estimate = (ctx.half() as u128 + 1).saturating_pow(ctx.n_points() as u32);
        if estimate > self.max_terms {
            return Err(Error::ResourceLimit {
                estimate,
                limit: self.max_terms,
            });
        }
        Ok(())
    }
}

/// Variable names for polynomials in `(t, z_1, ..., z_{2g+1})`.
pub fn tz_names(ctx: &PrimeContext) -> Vec<String> {
    let mut v = vec!["t".to_string()];
    v.extend(names("z", 1, ctx.n_points()));
    v
}

/// Variable names `l3..l{2g+1}` for polynomials in `λ_3, ..., λ_{2g+1}`.
pub fn lambda_names(ctx: &PrimeContext) -> Vec<String> {
    names("l", 3, ctx.n_points() - 2)
}

fn check_m(ctx: &PrimeContext, m: u32) -> Result<()> {
    if m >= ctx.g() {
        return Err(Error::OutOfRange {
            what: "m",
            value: m as i64,
            min: 0,
            max: ctx.g() as i64 - 1,
        });
    }
    Ok(())
}

/// The largest `t`-degree in `P`: `(p-1)/2 + gp - g - 1`.
pub fn taylor_bound(ctx: &PrimeContext) -> u64 {
    ctx.half() + ctx.g() as u64 * ctx.p() - ctx.g() as u64 - 1
}

/// Linear factors `t - z_a` in `2g+2` variables (`t` first).
fn linear_factors(ctx: &PrimeContext) -> Vec<FpPoly> {
    let nv = ctx.n_points() + 1;
    let t = SparsePoly::var(ctx.field(), nv, 0);
    (1..nv)
        .map(|a| &t - &SparsePoly::var(ctx.field(), nv, a))
        .collect()
}

/// `Φ_p` expanded over F_p, in variables `(t, z)`.
pub fn master_polynomial(ctx: &PrimeContext, limits: &Limits) -> Result<FpPoly> {
    limits.check(ctx)?;
    Ok(linear_factors(ctx).iter().map(|f| f.pow(ctx.half())).fold(
        SparsePoly::one(ctx.field(), ctx.n_points() + 1),
        |acc, f| &acc * &f,
    ))
}

/// `P_j = (t - z_j)^{(p-3)/2} Π_{a≠j} (t - z_a)^{(p-1)/2}`, built by
/// multiplying factor powers; `Φ_p` is never divided.
pub fn p_vector(
    ctx: &PrimeContext,
    limits: &Limits,
) -> Result<VectorPoly<crate::arith::PrimeField>> {
    limits.check(ctx)?;
    let n = ctx.n_points();
    let factors = linear_factors(ctx);
    let full: Vec<FpPoly> = factors.iter().map(|f| f.pow(ctx.half())).collect();
    let one = SparsePoly::one(ctx.field(), n + 1);
    let mut prefix = vec![one.clone()];
    for f in &full {
        let next = prefix.last().expect("non-empty") * f;
        prefix.push(next);
    }
    let mut suffix = vec![one; n + 1];
    for a in (0..n).rev() {
        suffix[a] = &suffix[a + 1] * &full[a];
    }
    let coords = (0..n)
        .map(|j| {
            let reduced = factors[j].pow(ctx.half() - 1);
            &(&prefix[j] * &suffix[j + 1]) * &reduced
        })
        .collect();
    VectorPoly::new(coords)
}

/// Coefficient of `t^i` of each coordinate, as polynomials in `z` only.
fn slice_of(ctx: &PrimeContext, v: &FpVector, i: u64) -> Result<FpVector> {
    let keep: Vec<usize> = (1..=ctx.n_points()).collect();
    v.try_map(|c| c.coeff_of_power(0, i as u32)?.project(&keep))
}

/// Builder caching `Φ_p` and `P` for one `(g, p)`.
#[derive(Debug, Clone)]
pub struct FpSolutions {
    ctx: PrimeContext,
    master: FpPoly,
    p_vector: FpVector,
}

impl FpSolutions {
    pub fn new(ctx: &PrimeContext, limits: &Limits) -> Result<Self> {
        Ok(Self {
            ctx: ctx.clone(),
            master: master_polynomial(ctx, limits)?,
            p_vector: p_vector(ctx, limits)?,
        })
    }

    pub fn ctx(&self) -> &PrimeContext {
        &self.ctx
    }

    pub fn master(&self) -> &FpPoly {
        &self.master
    }

    pub fn p_vector(&self) -> &FpVector {
        &self.p_vector
    }

    /// `P^i(z)`, for `0 ≤ i ≤ (p-1)/2 + gp - g - 1`.
    pub fn taylor_slice(&self, i: u64) -> Result<FpVector> {
        let bound = taylor_bound(&self.ctx);
        if i > bound {
            return Err(Error::OutOfRange {
                what: "Taylor index",
                value: i as i64,
                min: 0,
                max: bound as i64,
            });
        }
        slice_of(&self.ctx, &self.p_vector, i)
    }

    /// `I^m = P^{(g-m)p-1}`.
    pub fn solution_i(&self, m: u32) -> Result<FpVector> {
        check_m(&self.ctx, m)?;
        self.taylor_slice((self.ctx.g() - m) as u64 * self.ctx.p() - 1)
    }

    /// All of `I^0, ..., I^{g-1}`.
    pub fn basis_i(&self) -> Result<Vec<FpVector>> {
        (0..self.ctx.g()).map(|m| self.solution_i(m)).collect()
    }

    /// `J^m = Σ_{l=0}^m binom(g-m-1+l, g-m-1) z_1^{lp} I^{m-l}`.
    pub fn solution_j(&self, m: u32) -> Result<FpVector> {
        check_m(&self.ctx, m)?;
        let ctx = &self.ctx;
        let n = ctx.n_points();
        let top = (ctx.g() - m - 1) as u64;
        let mut acc = FpVector::zero(ctx.field(), n, n);
        for l in 0..=m {
            let c = ctx.lucas_binom(top + l as u64, top);
            let mut shift = vec![0u32; n];
            shift[0] = l * ctx.p() as u32;
            let term = self.solution_i(m - l)?.map(|f| f.shift(&shift).scale(&c));
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }

    /// `J^m` computed as the `t^{(g-m)p-1}` slice of `P(t + z_1, z)`.
    pub fn solution_j_shifted(&self, m: u32) -> Result<FpVector> {
        check_m(&self.ctx, m)?;
        let nv = self.ctx.n_points() + 1;
        let f = self.ctx.field();
        let shifted = &SparsePoly::var(f, nv, 0) + &SparsePoly::var(f, nv, 1);
        let moved = self.p_vector.try_map(|c| c.substitute(0, &shifted))?;
        slice_of(
            &self.ctx,
            &moved,
            (self.ctx.g() - m) as u64 * self.ctx.p() - 1,
        )
    }
}

/// `Δ^r_s`: tuples `(ℓ_3..ℓ_{2g+1})` with `ℓ_i ≤ (p-1)/2` and
/// `0 ≤ Σℓ + s - rp ≤ (p-1)/2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaSet {
    pub r: u32,
    pub s: u32,
    pub tuples: Vec<Vec<u64>>,
}

impl DeltaSet {
    pub fn contains(&self, ell: &[u64]) -> bool {
        self.tuples
            .binary_search_by(|t| t.as_slice().cmp(ell))
            .is_ok()
    }
}

pub(crate) fn in_delta(ctx: &PrimeContext, r: u32, s: u32, ell: &[u64]) -> bool {
    let sum: u64 = ell.iter().sum();
    let shifted = sum as i64 + s as i64 - r as i64 * ctx.p() as i64;
    ell.len() == ctx.n_points() - 2
        && ell.iter().all(|&l| l <= ctx.half())
        && (0..=ctx.half() as i64).contains(&shifted)
}

pub fn delta_set(ctx: &PrimeContext, r: u32, s: u32) -> Result<DeltaSet> {
    check_m(ctx, r)?;
    if s > ctx.g() {
        return Err(Error::OutOfRange {
            what: "s",
            value: s as i64,
            min: 0,
            max: ctx.g() as i64,
        });
    }
    let dim = ctx.n_points() - 2;
    let bounds = vec![ctx.half(); dim];
    let lo = (r as i64 * ctx.p() as i64 - s as i64).max(0) as u64;
    let hi = r as i64 * ctx.p() as i64 - s as i64 + ctx.half() as i64;
    let mut tuples = Vec::new();
    if hi >= 0 {
        for total in lo..=hi as u64 {
            tuples.extend(bounded_compositions(total, &bounds));
        }
    }
    tuples.sort();
    Ok(DeltaSet { r, s, tuples })
}

/// The direction vector `(1, -2Σℓ - 2g, 2ℓ_3 + 1, ..., 2ℓ_{2g+1} + 1)` over F_p.
pub(crate) fn direction_vector(ctx: &PrimeContext, ell: &[u64]) -> Vec<u64> {
    let f = ctx.field();
    let sum: u64 = ell.iter().sum();
    let mut v = vec![1, f.from_i64(-2 * (sum as i64) - 2 * ctx.g() as i64)];
    v.extend(ell.iter().map(|&l| f.from_u64(2 * l + 1)));
    v
}

fn check_k_term(ctx: &PrimeContext, m: u32, ell: &[u64]) -> Result<()> {
    check_m(ctx, m)?;
    if !in_delta(ctx, m, ctx.g(), ell) {
        return Err(Error::NotInDelta {
            r: m,
            s: ctx.g(),
            ell: ell.to_vec(),
        });
    }
    Ok(())
}

/// Coefficient vector of `λ^ℓ` in `K^m`:
/// `(-1)^{(p-1)/2+mp-g} binom((p-1)/2, Σℓ+g-mp) Π binom((p-1)/2, ℓ_i)` times
/// the direction vector.
pub fn k_term(ctx: &PrimeContext, m: u32, ell: &[u64]) -> Result<Vec<u64>> {
    check_k_term(ctx, m, ell)?;
    let f = ctx.field();
    let (p, g) = (ctx.p() as i64, ctx.g() as i64);
    let sum: u64 = ell.iter().sum();
    let mut scalar = f.sign(ctx.half() as i64 + m as i64 * p - g);
    scalar = f.mul(
        scalar,
        ctx.binom_half((sum as i64 + g - m as i64 * p) as u64)?,
    );
    for &l in ell {
        scalar = f.mul(scalar, ctx.binom_half(l)?);
    }
    Ok(direction_vector(ctx, ell)
        .into_iter()
        .map(|c| f.mul(c, scalar))
        .collect())
}

/// The same coefficient vector through central binomials:
/// `(-1)^{(p-1)/2} 4^{-2Σℓ-g+mp} binom(2N, N) Π binom(2ℓ_i, ℓ_i)`, `N = Σℓ+g-mp`.
pub fn k_term_central(ctx: &PrimeContext, m: u32, ell: &[u64]) -> Result<Vec<u64>> {
    check_k_term(ctx, m, ell)?;
    let f = ctx.field();
    let (p, g) = (ctx.p() as i64, ctx.g() as i64);
    let sum = ell.iter().sum::<u64>() as i64;
    let big_n = (sum + g - m as i64 * p) as u64;
    let mut scalar = f.sign(ctx.half() as i64);
    scalar = f.mul(scalar, f.pow_signed(4, -2 * sum - g + m as i64 * p));
    scalar = f.mul(scalar, ctx.lucas_binom(2 * big_n, big_n));
    for &l in ell {
        scalar = f.mul(scalar, ctx.lucas_binom(2 * l, l));
    }
    Ok(direction_vector(ctx, ell)
        .into_iter()
        .map(|c| f.mul(c, scalar))
        .collect())
}

/// A vector of polynomials in `λ` from `(ℓ, coefficient vector)` terms.
pub(crate) fn lambda_vector<I>(ctx: &PrimeContext, terms: I) -> FpVector
where
    I: IntoIterator<Item = (Vec<u64>, Vec<u64>)>,
{
    let n = ctx.n_points();
    let dim = n - 2;
    let mut per_coord: Vec<Vec<(Vec<u32>, u64)>> = vec![Vec::new(); n];
    for (ell, coeffs) in terms {
        let exps: Vec<u32> = ell.iter().map(|&e| e as u32).collect();
        for (c, v) in per_coord.iter_mut().zip(coeffs) {
            c.push((exps.clone(), v));
        }
    }
    VectorPoly::new(
        per_coord
            .into_iter()
            .map(|t| SparsePoly::from_terms(ctx.field(), dim, t))
            .collect(),
    )
    .expect("uniform coordinates")
}

/// `K^m(λ) = Σ_{ℓ ∈ Δ^m_g} K^m_ℓ(λ)`.
pub fn solution_k(ctx: &PrimeContext, m: u32) -> Result<FpVector> {
    let delta = delta_set(ctx, m, ctx.g())?;
    let terms = delta
        .tuples
        .into_iter()
        .map(|ell| {
            let c = k_term(ctx, m, &ell)?;
            Ok((ell, c))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(lambda_vector(ctx, terms))
}

/// `D = (p-1)/2 + mp - g`, the homogeneity degree relating `K^m` and `J^m`.
pub fn k_degree(ctx: &PrimeContext, m: u32) -> u64 {
    solution_degree(ctx, m)
}

/// Maps a polynomial in `λ` to `(z_2 - z_1)^D f(λ(z))` with
/// `λ_j = (z_j - z_1)/(z_2 - z_1)`: the monomial `λ^ℓ` becomes
/// `Π (z_j - z_1)^{ℓ_j} (z_2 - z_1)^{D - |ℓ|}`. Fails if some monomial has
/// degree above `D`, since the result would not be a polynomial.
pub fn homogenize(ctx: &PrimeContext, f: &FpPoly, degree: u64) -> Result<FpPoly> {
    let n = ctx.n_points();
    let z = z_vars(ctx);
    let base: Vec<FpPoly> = std::iter::once(&z[1] - &z[0])
        .chain((2..n).map(|j| &z[j] - &z[0]))
        .collect();
    let mut cache: Vec<Vec<FpPoly>> = vec![vec![SparsePoly::one(ctx.field(), n)]; base.len()];
    let mut power = |k: usize, e: u64| -> FpPoly {
        while cache[k].len() as u64 <= e {
            let next = cache[k].last().expect("non-empty") * &base[k];
            cache[k].push(next);
        }
        cache[k][e as usize].clone()
    };
    let mut out = SparsePoly::zero(ctx.field(), n);
    for (mono, c) in f.terms() {
        let d = mono.degree() as u64;
        if d > degree {
            return Err(Error::Internal(format!(
                "monomial of degree {d} exceeds homogenization degree {degree}"
            )));
        }
        let mut term = power(0, degree - d).scale(c);
        for (k, &e) in mono.exps().iter().enumerate() {
            if e > 0 {
                term = &term * &power(k + 1, e as u64);
            }
        }
        out = &out + &term;
    }
    Ok(out)
}

/// `(z_2 - z_1)^{(p-1)/2+mp-g} K^m(λ(z))`, which equals `J^m(z)`.
pub fn homogenized_k(ctx: &PrimeContext, m: u32) -> Result<FpVector> {
    let k = solution_k(ctx, m)?;
    let d = k_degree(ctx, m);
    k.try_map(|c| homogenize(ctx, c, d))
}
