//! Cartier-Manin matrices of `y² = x(x-1)(x-λ_3)...(x-λ_{2g+1})`.
//!
//! Entry `(r, s)` is the coefficient of `x^{(g-r)p-1}` in
//! `x^{g-s-1} (x(x-1)Π(x-λ_i))^{(p-1)/2}`. The numeric mode expands a dense
//! univariate polynomial over F_p; the symbolic mode sums the closed-form
//! terms over `Δ^r_s` and can be cross-checked against a symbolic expansion.

use serde::Serialize;

use crate::arith::{PrimeContext, PrimeField};
use crate::error::{Error, Result};
use crate::kz::FpPoly;
use crate::poly::SparsePoly;
use crate::solutions::{delta_set, in_delta, lambda_names, Limits};

/// A `g × g` matrix indexed `[r][s]`: `r` is the Taylor row, `s` the
/// differential column.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CartierManinMatrix<E> {
    pub entries: Vec<Vec<E>>,
}

impl<E> CartierManinMatrix<E> {
    pub fn entry(&self, r: usize, s: usize) -> &E {
        &self.entries[r][s]
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }
}

impl CartierManinMatrix<FpPoly> {
    /// Evaluates every entry at the point `λ`.
    pub fn evaluate(&self, lambda: &[u64]) -> CartierManinMatrix<u64> {
        CartierManinMatrix {
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|e| e.evaluate(lambda)).collect())
                .collect(),
        }
    }

    /// Entries rendered with variable names `l3, l4, ...`.
    pub fn to_strings(&self, ctx: &PrimeContext) -> Vec<Vec<String>> {
        let names = lambda_names(ctx);
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| e.to_string_with(&names)).collect())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumericCartier {
    pub matrix: CartierManinMatrix<u64>,
    /// Set when the branch points `0, 1, λ_3, ...` are not pairwise distinct,
    /// i.e. the curve is singular. The matrix is still well defined.
    pub singular: bool,
}

fn dense_mul(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    out
}

pub fn cm_numeric(ctx: &PrimeContext, lambda: &[u64]) -> Result<NumericCartier> {
    let g = ctx.g() as usize;
    if lambda.len() != 2 * g - 1 {
        return Err(Error::LengthMismatch {
            expected: 2 * g - 1,
            got: lambda.len(),
        });
    }
    let f = ctx.field();
    let roots: Vec<u64> = [0, 1]
        .into_iter()
        .chain(lambda.iter().map(|&l| f.from_u64(l)))
        .collect();
    let mut sorted = roots.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let singular = sorted.len() != roots.len();

    let curve = roots
        .iter()
        .fold(vec![1u64], |acc, &r| dense_mul(&f, &acc, &[f.neg(r), 1]));
    let mut power = vec![1u64];
    for _ in 0..ctx.half() {
        power = dense_mul(&f, &power, &curve);
    }
    let p = ctx.p() as usize;
    let entries = (0..g)
        .map(|r| {
            (0..g)
                .map(|s| {
                    let k = (g - r) * p - 1;
                    let shift = g - s - 1;
                    k.checked_sub(shift)
                        .and_then(|i| power.get(i).copied())
                        .unwrap_or(0)
                })
                .collect()
        })
        .collect();
    Ok(NumericCartier {
        matrix: CartierManinMatrix { entries },
        singular,
    })
}

fn check_rs(ctx: &PrimeContext, r: u32, s: u32) -> Result<()> {
    for (what, v) in [("r", r), ("s", s)] {
        if v >= ctx.g() {
            return Err(Error::OutOfRange {
                what,
                value: v as i64,
                min: 0,
                max: ctx.g() as i64 - 1,
            });
        }
    }
    Ok(())
}

/// The coefficient of `λ^ℓ` in `C^r_s`:
/// `(-1)^{(p-1)/2+rp-s} binom((p-1)/2, Σℓ+s-rp) Π binom((p-1)/2, ℓ_i)`.
pub fn cm_term(ctx: &PrimeContext, r: u32, s: u32, ell: &[u64]) -> Result<u64> {
    check_rs(ctx, r, s)?;
    if !in_delta(ctx, r, s, ell) {
        return Err(Error::NotInDelta {
            r,
            s,
            ell: ell.to_vec(),
        });
    }
    let f = ctx.field();
    let p = ctx.p() as i64;
    let sum: u64 = ell.iter().sum();
    let mut c = f.sign(ctx.half() as i64 + r as i64 * p - s as i64);
    c = f.mul(
        c,
        ctx.binom_half((sum as i64 + s as i64 - r as i64 * p) as u64)?,
    );
    for &l in ell {
        c = f.mul(c, ctx.binom_half(l)?);
    }
    Ok(c)
}

/// The same coefficient through central binomials:
/// `(-1)^{(p-1)/2} 4^{-2Σℓ-s+rp} binom(2N, N) Π binom(2ℓ_i, ℓ_i)`, `N = Σℓ+s-rp`.
pub fn cm_term_central(ctx: &PrimeContext, r: u32, s: u32, ell: &[u64]) -> Result<u64> {
    check_rs(ctx, r, s)?;
    if !in_delta(ctx, r, s, ell) {
        return Err(Error::NotInDelta {
            r,
            s,
            ell: ell.to_vec(),
        });
    }
    let f = ctx.field();
    let p = ctx.p() as i64;
    let sum = ell.iter().sum::<u64>() as i64;
    let big_n = (sum + s as i64 - r as i64 * p) as u64;
    let mut c = f.sign(ctx.half() as i64);
    c = f.mul(c, f.pow_signed(4, -2 * sum - s as i64 + r as i64 * p));
    c = f.mul(c, ctx.lucas_binom(2 * big_n, big_n));
    for &l in ell {
        c = f.mul(c, ctx.lucas_binom(2 * l, l));
    }
    Ok(c)
}

/// Entry `C^r_s(λ)` as a polynomial in `λ_3..λ_{2g+1}` from the term sum.
pub fn cm_entry(ctx: &PrimeContext, r: u32, s: u32) -> Result<FpPoly> {
    check_rs(ctx, r, s)?;
    let dim = ctx.n_points() - 2;
    let delta = delta_set(ctx, r, s)?;
    let terms = delta
        .tuples
        .iter()
        .map(|ell| {
            let c = cm_term(ctx, r, s, ell)?;
            Ok((ell.iter().map(|&e| e as u32).collect(), c))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SparsePoly::from_terms(ctx.field(), dim, terms))
}

/// The symbolic matrix, entry by entry from the closed-form terms.
pub fn cm_symbolic(ctx: &PrimeContext) -> Result<CartierManinMatrix<FpPoly>> {
    let g = ctx.g();
    let entries = (0..g)
        .map(|r| {
            (0..g)
                .map(|s| cm_entry(ctx, r, s))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CartierManinMatrix { entries })
}

/// The symbolic matrix by expanding `x^{g-s-1}(x(x-1)Π(x-λ_i))^{(p-1)/2}`
/// in `(x, λ)` and extracting coefficients.
pub fn cm_symbolic_by_extraction(
    ctx: &PrimeContext,
    limits: &Limits,
) -> Result<CartierManinMatrix<FpPoly>> {
    let dim = ctx.n_points() - 2;
    let estimate = (ctx.half() as u128 + 1).saturating_pow(dim as u32);
    if estimate > limits.max_terms {
        return Err(Error::ResourceLimit {
            estimate,
            limit: limits.max_terms,
        });
    }
    let nv = dim + 1;
    let f = ctx.field();
    let x = SparsePoly::var(f, nv, 0);
    let mut curve = &x * &(&x - &SparsePoly::one(f, nv));
    for i in 1..nv {
        curve = &curve * &(&x - &SparsePoly::var(f, nv, i));
    }
    let power = curve.pow(ctx.half());
    let keep: Vec<usize> = (1..nv).collect();
    let (g, p) = (ctx.g() as u64, ctx.p());
    let entries = (0..g)
        .map(|r| {
            (0..g)
                .map(|s| {
                    let k = (g - r) * p - 1;
                    let shift = g - s - 1;
                    power.coeff_of_power(0, (k - shift) as u32)?.project(&keep)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CartierManinMatrix { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(g: u32, p: u64) -> PrimeContext {
        PrimeContext::new(g, p).unwrap()
    }

    #[test]
    fn genus_one_p3() {
        let c = ctx(1, 3);
        let m = cm_numeric(&c, &[1]).unwrap();
        assert_eq!(m.matrix.entries, vec![vec![1]]);
        assert!(m.singular);
        let sym = cm_symbolic(&c).unwrap();
        assert_eq!(sym.to_strings(&c), vec![vec!["2*l3 + 2".to_string()]]);
        assert_eq!(
            sym,
            cm_symbolic_by_extraction(&c, &Limits::default()).unwrap()
        );
        for l in 0..3 {
            let expected = c.field().from_i64(-(1 + l as i64));
            assert_eq!(cm_numeric(&c, &[l]).unwrap().matrix.entries[0][0], expected);
        }
    }

    #[test]
    fn degenerate_lambda_is_still_defined() {
        for p in [3, 5, 7, 11] {
            let c = ctx(1, p);
            let m = cm_numeric(&c, &[0]).unwrap();
            assert!(m.singular);
            assert_eq!(m.matrix, cm_symbolic(&c).unwrap().evaluate(&[0]));
        }
    }

    #[test]
    fn genus_two_modes_agree() {
        let c = ctx(2, 5);
        let numeric = cm_numeric(&c, &[1, 2, 3]).unwrap();
        assert!(numeric.singular);
        assert_eq!(numeric.matrix.size(), 2);
        let sym = cm_symbolic(&c).unwrap();
        assert_eq!(sym.evaluate(&[1, 2, 3]), numeric.matrix);
        assert_eq!(
            sym,
            cm_symbolic_by_extraction(&c, &Limits::default()).unwrap()
        );
        assert!(!cm_numeric(&c, &[2, 3, 4]).unwrap().singular);
    }

    #[test]
    fn wrong_lambda_count() {
        let c = ctx(2, 5);
        assert!(matches!(
            cm_numeric(&c, &[1, 2]),
            Err(Error::LengthMismatch {
                expected: 3,
                got: 2
            })
        ));
    }

    #[test]
    fn single_terms() {
        let c = ctx(1, 5);
        assert_eq!(cm_term(&c, 0, 0, &[1]).unwrap(), 4);
        assert!(cm_term(&c, 0, 0, &[3]).is_err());
        assert!(cm_term(&c, 1, 0, &[0]).is_err());
        for (g, p) in [(1, 5), (1, 7), (2, 5), (2, 7), (3, 7)] {
            let c = ctx(g, p);
            for r in 0..g {
                for s in 0..g {
                    let entry = cm_entry(&c, r, s).unwrap();
                    let mut total = SparsePoly::zero(c.field(), c.n_points() - 2);
                    for ell in delta_set(&c, r, s).unwrap().tuples {
                        let a = cm_term(&c, r, s, &ell).unwrap();
                        assert_eq!(a, cm_term_central(&c, r, s, &ell).unwrap());
                        let exps: Vec<u32> = ell.iter().map(|&e| e as u32).collect();
                        total = &total + &SparsePoly::monomial(c.field(), &exps, a);
                    }
                    assert_eq!(total, entry);
                }
            }
        }
    }
}
