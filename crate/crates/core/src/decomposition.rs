//! Taylor coefficients `L_k ∈ Z[1/2]^{2g+1}` of the distinguished solution
//! at `λ = 0`, their reduction mod p, and its decomposition into products of
//! Cartier-Manin terms and the F_p solutions `K^m`.
//!
//! Tuples `k = (k_3, ..., k_{2g+1})` are split into base-p digit rows
//! `k^0, ..., k^a`, where `a` is the highest row with a nonzero digit (the
//! zero tuple has `a = 0`). The carries of `Σk_i + g` give the shift
//! coefficients `m_0 = g, m_1, ..., m_{a+1}`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{base_p_digits, binom_exact, DyadicRational, PrimeContext};
use crate::cartier::{cm_entry, cm_term};
use crate::enumerate::{box_size, box_tuple_at};
use crate::error::{Error, Result};
use crate::kz::{express_in_basis, FpPoly, FpVector};
use crate::poly::SparsePoly;
use crate::solutions::{homogenize, homogenized_k, in_delta, k_term, solution_k};

/// `L_k` as an exact vector over Z[1/2].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TaylorCoefficientL {
    pub k: Vec<u64>,
    pub value: Vec<DyadicRational>,
}

impl TaylorCoefficientL {
    pub fn reduce(&self, ctx: &PrimeContext) -> Vec<u64> {
        self.value.iter().map(|x| ctx.dyadic_mod_p(x)).collect()
    }
}

fn check_tuple_len(g: u32, k: &[u64]) -> Result<()> {
    let dim = 2 * g as usize - 1;
    if k.len() != dim {
        return Err(Error::LengthMismatch {
            expected: dim,
            got: k.len(),
        });
    }
    Ok(())
}

/// `(1, -2Σk - 2g, 2k_3 + 1, ..., 2k_{2g+1} + 1)` over the integers.
fn integer_direction(g: u32, k: &[u64]) -> Vec<BigInt> {
    let sum: u64 = k.iter().sum();
    let mut v = vec![BigInt::one(), -BigInt::from(2 * sum + 2 * g as u64)];
    v.extend(k.iter().map(|&x| BigInt::from(2 * x + 1)));
    v
}

/// `L_k = 4^{-2Σk-g} binom(2(Σk+g), Σk+g) Π binom(2k_i, k_i)` times the
/// direction vector.
pub fn taylor_l(g: u32, k: &[u64]) -> Result<TaylorCoefficientL> {
    check_tuple_len(g, k)?;
    let sum: u64 = k.iter().sum();
    let top = sum + g as u64;
    let mut scalar = BigInt::from(binom_exact(2 * top, top as i64));
    for &x in k {
        scalar *= BigInt::from(binom_exact(2 * x, x as i64));
    }
    let exp2 = 2 * (2 * sum + g as u64);
    let exp2 = u32::try_from(exp2).map_err(|_| Error::Internal("tuple too large".into()))?;
    let value = integer_direction(g, k)
        .into_iter()
        .map(|d| DyadicRational::new(&scalar * d, exp2))
        .collect();
    Ok(TaylorCoefficientL {
        k: k.to_vec(),
        value,
    })
}

/// `binom(-1/2, n)` as an exact rational, from its defining product.
pub fn binom_minus_half(n: u64) -> BigRational {
    let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
    let mut acc = BigRational::one();
    for i in 0..n {
        let factor = &half - BigRational::from_integer(BigInt::from(i));
        acc = acc * factor / BigRational::from_integer(BigInt::from(i + 1));
    }
    acc
}

/// `L_k = (-1)^g binom(-1/2, Σk+g) Π binom(-1/2, k_i)` times the direction
/// vector, evaluated in Q and converted back to Z[1/2].
pub fn taylor_l_half_binomial(g: u32, k: &[u64]) -> Result<TaylorCoefficientL> {
    check_tuple_len(g, k)?;
    let sum: u64 = k.iter().sum();
    let mut scalar = binom_minus_half(sum + g as u64);
    if g % 2 == 1 {
        scalar = -scalar;
    }
    for &x in k {
        scalar *= binom_minus_half(x);
    }
    let value = integer_direction(g, k)
        .into_iter()
        .map(|d| {
            let q = &scalar * BigRational::from_integer(d);
            DyadicRational::from_ratio(q.numer(), q.denom())
                .ok_or_else(|| Error::Internal("denominator is not a power of two".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TaylorCoefficientL {
        k: k.to_vec(),
        value,
    })
}

/// Base-p digit rows, shift coefficients and admissibility of a tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TupleAnalysis {
    pub k: Vec<u64>,
    /// `digits[j][i]` is the `j`-th base-p digit of `k_{i+3}`.
    pub digits: Vec<Vec<u64>>,
    /// `(m_0, ..., m_{a+1})` with `m_0 = g`.
    pub shifts: Vec<u64>,
    /// `Σ_i k_i^j + m_j - m_{j+1} p` for each row `j`.
    pub level_sums: Vec<u64>,
    pub digits_bounded: bool,
    pub admissible: bool,
    /// Whether row `j` lies in `Δ^{m_{j+1}}_{m_j}`.
    pub level_membership: Vec<bool>,
}

impl TupleAnalysis {
    /// The index `a` of the highest digit row.
    pub fn depth(&self) -> usize {
        self.digits.len() - 1
    }
}

pub fn analyze_tuple(ctx: &PrimeContext, k: &[u64]) -> Result<TupleAnalysis> {
    check_tuple_len(ctx.g(), k)?;
    let p = ctx.p();
    let per_coord: Vec<Vec<u64>> = k.iter().map(|&x| base_p_digits(x, p)).collect();
    let rows = per_coord.iter().map(Vec::len).max().unwrap_or(1);
    let digits: Vec<Vec<u64>> = (0..rows)
        .map(|j| {
            per_coord
                .iter()
                .map(|d| d.get(j).copied().unwrap_or(0))
                .collect()
        })
        .collect();
    let mut shifts = vec![ctx.g() as u64];
    let mut level_sums = Vec::with_capacity(rows);
    let mut level_membership = Vec::with_capacity(rows);
    for row in &digits {
        let m_j = *shifts.last().expect("non-empty");
        let total = row.iter().sum::<u64>() + m_j;
        let m_next = total / p;
        level_sums.push(total - m_next * p);
        level_membership
            .push(u32::try_from(m_next).is_ok() && in_delta(ctx, m_next as u32, m_j as u32, row));
        shifts.push(m_next);
    }
    let digits_bounded = digits.iter().flatten().all(|&d| d <= ctx.half());
    let admissible = digits_bounded && level_sums.iter().all(|&s| s <= ctx.half());
    Ok(TupleAnalysis {
        k: k.to_vec(),
        digits,
        shifts,
        level_sums,
        digits_bounded,
        admissible,
        level_membership,
    })
}

/// Both sides of the mod-p congruence for one admissible tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceRecord {
    pub k: Vec<u64>,
    pub shifts: Vec<u64>,
    /// `L_k mod p`.
    pub left: Vec<u64>,
    /// `(-1)^{a(p-1)/2} binom(2m_{a+1}, m_{a+1}) Π_j C^{m_{j+1}}_{m_j; k^j} · K^{m_1}_{k^0}`.
    pub right_as_printed: Vec<u64>,
    /// `right_as_printed` times [`normalization`].
    pub right: Vec<u64>,
    pub printed_matches: bool,
    pub pass: bool,
}

/// The unit `(-1)^{(p-1)/2} 4^{-m_{a+1}}` relating the product of Cartier-Manin
/// terms and `K^{m_1}` to `L_k mod p`. Each level contributes `(-1)^{(p-1)/2}`
/// and a power of 4 whose exponents telescope to `m_{a+1} p ≡ m_{a+1}`.
pub fn normalization(ctx: &PrimeContext, top: u64) -> u64 {
    let f = ctx.field();
    let inv4 = f.inv(4).expect("p is odd");
    f.mul(f.sign(ctx.half() as i64), f.pow(inv4, top))
}

/// The product-form coefficient vector of `λ^k` for an admissible tuple,
/// without [`normalization`].
pub fn congruence_right_side_as_printed(
    ctx: &PrimeContext,
    analysis: &TupleAnalysis,
) -> Result<Vec<u64>> {
    if !analysis.admissible {
        return Err(Error::NotAdmissible(analysis.k.clone()));
    }
    let f = ctx.field();
    let a = analysis.depth();
    let m = &analysis.shifts;
    let top = m[a + 1];
    let mut scalar = f.sign((a as u64 * ctx.half()) as i64);
    scalar = f.mul(scalar, ctx.lucas_binom(2 * top, top));
    for j in 1..=a {
        let c = cm_term(ctx, m[j + 1] as u32, m[j] as u32, &analysis.digits[j])?;
        scalar = f.mul(scalar, c);
    }
    let k_part = k_term(ctx, m[1] as u32, &analysis.digits[0])?;
    Ok(k_part.into_iter().map(|x| f.mul(x, scalar)).collect())
}

/// The product-form coefficient vector of `λ^k`, normalized to equal `L_k mod p`.
pub fn congruence_right_side(ctx: &PrimeContext, analysis: &TupleAnalysis) -> Result<Vec<u64>> {
    let f = ctx.field();
    let unit = normalization(ctx, *analysis.shifts.last().expect("non-empty"));
    Ok(congruence_right_side_as_printed(ctx, analysis)?
        .into_iter()
        .map(|x| f.mul(x, unit))
        .collect())
}

pub fn check_congruence(ctx: &PrimeContext, k: &[u64]) -> Result<CongruenceRecord> {
    let analysis = analyze_tuple(ctx, k)?;
    let right_as_printed = congruence_right_side_as_printed(ctx, &analysis)?;
    let right = congruence_right_side(ctx, &analysis)?;
    let left = taylor_l(ctx.g(), k)?.reduce(ctx);
    Ok(CongruenceRecord {
        k: k.to_vec(),
        shifts: analysis.shifts,
        pass: left == right,
        printed_matches: left == right_as_printed,
        left,
        right_as_printed,
        right,
    })
}

/// A failed check from a box sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepFailure {
    pub k: Vec<u64>,
    /// `vanishing`, `congruence`, `closed_form` or `decomposition`.
    pub kind: String,
    pub admissible: bool,
    pub left: Vec<String>,
    pub right: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub g: u32,
    pub p: u64,
    #[serde(rename = "box")]
    pub bound: u64,
    pub tuples_checked: u64,
    pub admissible_count: u64,
    pub congruences_checked: u64,
    /// Admissible tuples where the product without [`normalization`] already
    /// equals `L_k mod p`.
    pub printed_display_matches: u64,
    pub failures: Vec<SweepFailure>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

#[derive(Default)]
struct TupleOutcome {
    admissible: bool,
    congruence: bool,
    printed_matches: bool,
    failures: Vec<SweepFailure>,
}

fn sweep_one(
    ctx: &PrimeContext,
    k: Vec<u64>,
    congruence: bool,
    closed_forms: bool,
) -> Result<TupleOutcome> {
    let l = taylor_l(ctx.g(), &k)?;
    let residue = l.reduce(ctx);
    let analysis = analyze_tuple(ctx, &k)?;
    let mut out = TupleOutcome {
        admissible: analysis.admissible,
        ..Default::default()
    };
    let nonzero = residue.iter().any(|&x| x != 0);
    if nonzero != analysis.admissible
        || analysis.level_membership.iter().all(|&b| b) != analysis.admissible
    {
        out.failures.push(SweepFailure {
            k: k.clone(),
            kind: "vanishing".into(),
            admissible: analysis.admissible,
            left: strings(&residue),
            right: vec![],
        });
    }
    if closed_forms {
        let other = taylor_l_half_binomial(ctx.g(), &k)?;
        if other != l {
            out.failures.push(SweepFailure {
                k: k.clone(),
                kind: "closed_form".into(),
                admissible: analysis.admissible,
                left: strings(&l.value),
                right: strings(&other.value),
            });
        }
    }
    if congruence && analysis.admissible {
        out.congruence = true;
        out.printed_matches = congruence_right_side_as_printed(ctx, &analysis)? == residue;
        let right = congruence_right_side(ctx, &analysis)?;
        if right != residue {
            out.failures.push(SweepFailure {
                k,
                kind: "congruence".into(),
                admissible: true,
                left: strings(&residue),
                right: strings(&right),
            });
        }
    }
    Ok(out)
}

fn sweep(
    ctx: &PrimeContext,
    bound: u64,
    congruence: bool,
    closed_forms: bool,
) -> Result<SweepReport> {
    if bound == 0 {
        return Err(Error::OutOfRange {
            what: "box bound",
            value: 0,
            min: 1,
            max: i64::MAX,
        });
    }
    let dim = ctx.n_points() - 2;
    let total = box_size(dim, bound);
    let outcomes = (0..total)
        .into_par_iter()
        .map(|idx| sweep_one(ctx, box_tuple_at(dim, bound, idx), congruence, closed_forms))
        .collect::<Result<Vec<_>>>()?;
    let mut report = SweepReport {
        g: ctx.g(),
        p: ctx.p(),
        bound,
        tuples_checked: total as u64,
        admissible_count: 0,
        congruences_checked: 0,
        printed_display_matches: 0,
        failures: Vec::new(),
    };
    for o in outcomes {
        report.admissible_count += o.admissible as u64;
        report.congruences_checked += o.congruence as u64;
        report.printed_display_matches += o.printed_matches as u64;
        report.failures.extend(o.failures);
    }
    Ok(report)
}

/// For every tuple with all `k_i < bound`: `L_k ≢ 0 (mod p)` exactly when the
/// tuple is admissible, and admissibility agrees with row-wise `Δ` membership.
pub fn check_vanishing_criterion(ctx: &PrimeContext, bound: u64) -> Result<SweepReport> {
    sweep(ctx, bound, false, false)
}

/// The vanishing criterion plus the congruence on every admissible tuple and
/// agreement of the two closed forms of `L_k`.
pub fn check_box(ctx: &PrimeContext, bound: u64) -> Result<SweepReport> {
    sweep(ctx, bound, true, true)
}

/// An index `(m_0, ..., m_{a+1})` with `m_0 = g` and `0 ≤ m_j < g` otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MIndex(Vec<u32>);

impl MIndex {
    pub fn new(ctx: &PrimeContext, m: Vec<u32>) -> Result<Self> {
        let g = ctx.g();
        if m.len() < 2 || m[0] != g || m[1..].iter().any(|&x| x >= g) {
            return Err(Error::NotInM(m));
        }
        Ok(Self(m))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// The depth `a`; the index has `a + 2` entries.
    pub fn depth(&self) -> usize {
        self.0.len() - 2
    }

    /// All indices of depth at most `max_depth`, ordered by depth then lexicographically.
    pub fn enumerate(ctx: &PrimeContext, max_depth: usize) -> Vec<MIndex> {
        let g = ctx.g();
        let mut out = Vec::new();
        for a in 0..=max_depth {
            let count = (g as u128).pow(a as u32 + 1);
            for idx in 0..count {
                let tail = box_tuple_at(a + 1, g as u64, idx);
                let mut m = vec![g];
                m.extend(tail.into_iter().map(|x| x as u32));
                out.push(MIndex(m));
            }
        }
        out
    }
}

/// Entry `C^{m_{j+1}}_{m_j}` used at level `j`; at the top level the constant
/// term is dropped, since the top digit row of a depth-`a` tuple is nonzero.
fn level_factor(ctx: &PrimeContext, m: &MIndex, j: usize) -> Result<FpPoly> {
    let m = m.as_slice();
    let entry = cm_entry(ctx, m[j + 1], m[j])?;
    if j + 2 == m.len() {
        let dim = entry.nvars();
        let constant = SparsePoly::constant(*entry.ring(), dim, entry.coeff(&vec![0; dim]));
        Ok(&entry - &constant)
    } else {
        Ok(entry)
    }
}

fn block_scalar(ctx: &PrimeContext, m: &MIndex) -> u64 {
    let f = ctx.field();
    let a = m.depth() as u64;
    let top = *m.as_slice().last().expect("non-empty") as u64;
    f.mul(
        f.sign((a * ctx.half()) as i64),
        ctx.lucas_binom(2 * top, top),
    )
}

/// `K_m(λ) = (-1)^{a(p-1)/2} binom(2m_{a+1}, m_{a+1}) Π_{j=1}^a C^{m_{j+1}}_{m_j}(λ^{p^j}) K^{m_1}(λ)`.
pub fn k_vec(ctx: &PrimeContext, m: &MIndex) -> Result<FpVector> {
    let ms = m.as_slice();
    let mut acc = solution_k(ctx, ms[1])?;
    let mut q = 1u32;
    for j in 1..=m.depth() {
        q *= ctx.p() as u32;
        acc = acc.mul_poly(&level_factor(ctx, m, j)?.inflate(q))?;
    }
    Ok(acc.scale(&block_scalar(ctx, m)))
}

/// Summary of one block of the decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockSummary {
    pub m: Vec<u32>,
    pub terms: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub g: u32,
    pub p: u64,
    #[serde(rename = "box")]
    pub bound: u64,
    pub depth: usize,
    pub blocks: Vec<BlockSummary>,
    pub supports_disjoint: bool,
    pub tuples_checked: u64,
    /// Tuples where the plain sum `Σ K_m` (without unit weights) differs from `L mod p`.
    pub unweighted_mismatches: u64,
    pub failures: Vec<SweepFailure>,
}

impl DecompositionReport {
    pub fn passed(&self) -> bool {
        self.supports_disjoint && self.failures.is_empty()
    }
}

/// Sums `u_m K_m` over all indices of depth at most `max_depth`, where `u_m`
/// is the [`normalization`] unit of `m_{a+1}`, and compares the result with
/// `L mod p` on every tuple with all `k_i < bound`. Requires
/// `bound ≤ p^{max_depth+1}`, otherwise deeper blocks would contribute.
pub fn decompose_l(
    ctx: &PrimeContext,
    max_depth: usize,
    bound: u64,
) -> Result<DecompositionReport> {
    let limit = (ctx.p() as u128)
        .checked_pow(max_depth as u32 + 1)
        .unwrap_or(u128::MAX);
    if bound as u128 > limit {
        return Err(Error::UnsoundTruncation { bound, limit });
    }
    if bound == 0 {
        return Err(Error::OutOfRange {
            what: "box bound",
            value: 0,
            min: 1,
            max: limit.min(i64::MAX as u128) as i64,
        });
    }
    let indices = MIndex::enumerate(ctx, max_depth);
    let blocks = indices
        .par_iter()
        .map(|m| k_vec(ctx, m))
        .collect::<Result<Vec<_>>>()?;

    let mut owner: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut supports_disjoint = true;
    for (b, block) in blocks.iter().enumerate() {
        let mut seen = std::collections::HashSet::new();
        for coord in block.coords() {
            for (mono, _) in coord.terms() {
                seen.insert(mono.exps().to_vec());
            }
        }
        for exps in seen {
            if owner.insert(exps, b).is_some() {
                supports_disjoint = false;
            }
        }
    }

    let n = ctx.n_points();
    let mut total = FpVector::zero(ctx.field(), n - 2, n);
    let mut unweighted = FpVector::zero(ctx.field(), n - 2, n);
    for (m, block) in indices.iter().zip(&blocks) {
        let top = *m.as_slice().last().expect("non-empty") as u64;
        total = total.try_add(&block.scale(&normalization(ctx, top)))?;
        unweighted = unweighted.try_add(block)?;
    }

    let dim = n - 2;
    let count = box_size(dim, bound);
    let outcomes = (0..count)
        .into_par_iter()
        .map(|idx| -> Result<(bool, Option<SweepFailure>)> {
            let k = box_tuple_at(dim, bound, idx);
            let left = taylor_l(ctx.g(), &k)?.reduce(ctx);
            let exps: Vec<u32> = k.iter().map(|&x| x as u32).collect();
            let right: Vec<u64> = total.coords().iter().map(|c| c.coeff(&exps)).collect();
            let plain: Vec<u64> = unweighted.coords().iter().map(|c| c.coeff(&exps)).collect();
            let failure = (left != right).then(|| SweepFailure {
                k,
                kind: "decomposition".into(),
                admissible: left.iter().any(|&x| x != 0),
                left: strings(&left),
                right: strings(&right),
            });
            Ok((plain != left, failure))
        })
        .collect::<Result<Vec<_>>>()?;
    let unweighted_mismatches = outcomes.iter().filter(|(bad, _)| *bad).count() as u64;
    let failures: Vec<SweepFailure> = outcomes.into_iter().filter_map(|(_, f)| f).collect();

    Ok(DecompositionReport {
        g: ctx.g(),
        p: ctx.p(),
        bound,
        depth: max_depth,
        blocks: indices
            .iter()
            .zip(&blocks)
            .map(|(m, b)| BlockSummary {
                m: m.as_slice().to_vec(),
                terms: b[0].len(),
            })
            .collect(),
        supports_disjoint,
        tuples_checked: count as u64,
        unweighted_mismatches,
        failures,
    })
}

/// Exponent `(p-1)/2 - g + m_{a+1} p^{a+1} + (p + ... + p^a)(p-1)/2` of the
/// `(z_2 - z_1)` prefactor.
pub fn j_vec_degree(ctx: &PrimeContext, m: &MIndex) -> u64 {
    let p = ctx.p();
    let a = m.depth() as u32;
    let top = *m.as_slice().last().expect("non-empty") as u64;
    let geometric: u64 = (1..=a).map(|j| p.pow(j)).sum();
    ctx.half() - ctx.g() as u64 + top * p.pow(a + 1) + geometric * ctx.half()
}

/// `J_m(z) = (z_2 - z_1)^D K_m(λ(z))`, assembled factor by factor: each
/// level factor is homogenized to degree `(p-1)/2 - m_j + m_{j+1}p` and raised
/// to the `p^j`-th power (a Frobenius twist of the variables), and the last
/// factor is the homogenized `K^{m_1}`.
pub fn solution_j_vec(ctx: &PrimeContext, m: &MIndex) -> Result<FpVector> {
    let ms = m.as_slice();
    let mut acc = homogenized_k(ctx, ms[1])?;
    let p = ctx.p();
    let mut q = 1u32;
    for j in 1..=m.depth() {
        q *= p as u32;
        let degree = ctx.half() - ms[j] as u64 + ms[j + 1] as u64 * p;
        let factor = homogenize(ctx, &level_factor(ctx, m, j)?, degree)?.inflate(q);
        acc = acc.mul_poly(&factor)?;
    }
    Ok(acc.scale(&block_scalar(ctx, m)))
}

/// `J_m` by homogenizing the whole block `K_m` at once; slower, used to
/// cross-check [`solution_j_vec`].
pub fn solution_j_vec_direct(ctx: &PrimeContext, m: &MIndex) -> Result<FpVector> {
    let block = k_vec(ctx, m)?;
    let degree = j_vec_degree(ctx, m);
    block.try_map(|c| homogenize(ctx, c, degree))
}

/// Coefficients `c_0..c_{g-1} ∈ F_p[z^p]` with `J_m = Σ c_i I^i`, if any.
pub fn j_vec_in_module(
    ctx: &PrimeContext,
    j_vec: &FpVector,
    basis: &[FpVector],
) -> Result<Option<Vec<FpPoly>>> {
    let found = express_in_basis(ctx, j_vec, basis)?;
    if let Some(cs) = &found {
        let p = ctx.p() as u32;
        let in_frobenius_ring = cs.iter().all(|c| {
            c.terms()
                .all(|(mono, _)| mono.exps().iter().all(|e| e % p == 0))
        });
        if !in_frobenius_ring {
            return Err(Error::Internal("coefficients outside F_p[z^p]".into()));
        }
    }
    Ok(found)
}

/// Dyadic vector rendered as strings, e.g. `15/2^7`.
pub fn render_dyadic(v: &[DyadicRational]) -> Vec<String> {
    strings(v)
}
