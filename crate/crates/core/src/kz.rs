//! The explicit KZ system on (2g+1)-vectors of polynomials over F_p, its
//! exact verifier, and the support-projection certificate of linear
//! independence over F_p[z^p].

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{PrimeContext, PrimeField};
use crate::enumerate::bounded_compositions;
use crate::error::{Error, Result};
use crate::poly::{names, SparsePoly, VectorPoly};

pub type FpPoly = SparsePoly<PrimeField>;
pub type FpVector = VectorPoly<PrimeField>;

/// `z_1, ..., z_{2g+1}` as polynomials in `2g+1` variables.
pub fn z_vars(ctx: &PrimeContext) -> Vec<FpPoly> {
    let n = ctx.n_points();
    (0..n).map(|i| SparsePoly::var(ctx.field(), n, i)).collect()
}

/// Variable names `z1..z{2g+1}`.
pub fn z_names(ctx: &PrimeContext) -> Vec<String> {
    names("z", 1, ctx.n_points())
}

/// The system `∂I/∂z_i = ½ Σ_{j≠i} Ω^{(i,j)} I / (z_i - z_j)`, `Σ I_j = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KzSystem {
    n: usize,
}

impl KzSystem {
    pub fn new(ctx: &PrimeContext) -> Self {
        Self { n: ctx.n_points() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dense `Ω^{(i,j)}` (0-based indices, `i ≠ j`).
    pub fn omega(&self, i: usize, j: usize) -> Vec<Vec<i64>> {
        assert!(i != j && i < self.n && j < self.n);
        let mut m = vec![vec![0i64; self.n]; self.n];
        m[i][i] = -1;
        m[j][j] = -1;
        m[i][j] = 1;
        m[j][i] = 1;
        m
    }

    /// `Ω^{(i,j)} · v` without building the matrix.
    pub fn apply_omega(&self, i: usize, j: usize, v: &FpVector) -> FpVector {
        let zero = FpPoly::zero(*v[0].ring(), v[0].nvars());
        let diff = &v[j] - &v[i];
        let mut coords = vec![zero; self.n];
        coords[i] = diff.clone();
        coords[j] = diff.neg();
        VectorPoly::new(coords).expect("uniform coordinates")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquationResult {
    /// 1-based equation index.
    pub i: usize,
    pub pass: bool,
    /// `0` when the equation holds, otherwise the residual vector.
    pub residual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KzVerdict {
    pub constraint_sum_zero: bool,
    pub equations: Vec<EquationResult>,
}

impl KzVerdict {
    pub fn passed(&self) -> bool {
        self.constraint_sum_zero && self.equations.iter().all(|e| e.pass)
    }
}

/// Checks the KZ equations as exact polynomial identities after clearing
/// denominators: for each `i`,
/// `2 Π_{j≠i}(z_i - z_j) ∂I/∂z_i = Σ_{j≠i} Π_{k≠i,j}(z_i - z_k) Ω^{(i,j)} I`,
/// together with `Σ_j I_j = 0`.
pub fn verify_kz(sol: &FpVector, ctx: &PrimeContext) -> Result<KzVerdict> {
    let n = ctx.n_points();
    if sol.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: sol.len(),
        });
    }
    for c in sol.coords() {
        if c.nvars() != n {
            return Err(Error::NvarsMismatch {
                left: n,
                right: c.nvars(),
            });
        }
        if *c.ring() != ctx.field() {
            return Err(Error::RingMismatch);
        }
    }
    let system = KzSystem::new(ctx);
    let z = z_vars(ctx);
    let names = z_names(ctx);
    let names: Vec<&str> = names.iter().map(String::as_str).collect();

    let sum = sol.coordinate_sum().expect("non-empty");
    let equations = (0..n)
        .into_par_iter()
        .map(|i| {
            let diffs: Vec<FpPoly> = (0..n).map(|j| &z[i] - &z[j]).collect();
            let prod_except = |skip: &[usize]| {
                (0..n)
                    .filter(|k| *k != i && !skip.contains(k))
                    .fold(FpPoly::one(ctx.field(), n), |acc, k| &acc * &diffs[k])
            };
            let lhs_factor = prod_except(&[]).scale(&2);
            let lhs = sol
                .try_map(|c| c.partial_derivative(i))?
                .mul_poly(&lhs_factor)?;
            let mut rhs = FpVector::zero(ctx.field(), n, n);
            for j in (0..n).filter(|&j| j != i) {
                let term = system.apply_omega(i, j, sol).mul_poly(&prod_except(&[j]))?;
                rhs = rhs.try_add(&term)?;
            }
            let residual = lhs.try_sub(&rhs)?;
            let pass = residual.is_zero();
            Ok(EquationResult {
                i: i + 1,
                pass,
                residual: if pass {
                    "0".to_string()
                } else {
                    format!("({})", residual.to_strings(&names).join(", "))
                },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(KzVerdict {
        constraint_sum_zero: sum.is_zero(),
        equations,
    })
}

/// The support `Γ^m_j` of the coordinate `I^m_j` with its coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportSet {
    pub m: u32,
    /// 1-based coordinate index.
    pub j: usize,
    pub tuples: Vec<Vec<u64>>,
    pub coefficients: Vec<u64>,
    /// Images of `tuples` in `(F_p)^{2g+1}`.
    pub projection: Vec<Vec<u64>>,
}

impl SupportSet {
    pub fn is_injective(&self) -> bool {
        let set: HashSet<&Vec<u64>> = self.projection.iter().collect();
        set.len() == self.projection.len()
    }

    /// The coordinate polynomial `Σ_ℓ I^m_{j;ℓ} z^ℓ`.
    pub fn to_poly(&self, ctx: &PrimeContext) -> FpPoly {
        SparsePoly::from_terms(
            ctx.field(),
            ctx.n_points(),
            self.tuples
                .iter()
                .zip(&self.coefficients)
                .map(|(t, c)| (t.iter().map(|&e| e as u32).collect(), *c)),
        )
    }
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

/// Degree of the coordinates of `I^m`: `(p-1)/2 + mp - g`.
pub fn solution_degree(ctx: &PrimeContext, m: u32) -> u64 {
    ctx.half() + m as u64 * ctx.p() - ctx.g() as u64
}

/// Enumerates `Γ^m_j`: tuples with `Σℓ = (p-1)/2 + mp - g`, `ℓ_j ≤ (p-3)/2`
/// and `ℓ_i ≤ (p-1)/2` otherwise, with coefficients
/// `(-1)^{(p-1)/2+mp-g} binom((p-3)/2, ℓ_j) Π_{i≠j} binom((p-1)/2, ℓ_i)`.
pub fn gamma_support(ctx: &PrimeContext, m: u32, j: usize) -> Result<SupportSet> {
    check_m(ctx, m)?;
    let n = ctx.n_points();
    if j == 0 || j > n {
        return Err(Error::OutOfRange {
            what: "j",
            value: j as i64,
            min: 1,
            max: n as i64,
        });
    }
    let half = ctx.half();
    let mut bounds = vec![half; n];
    bounds[j - 1] = half - 1;
    let total = solution_degree(ctx, m);
    let tuples = bounded_compositions(total, &bounds);
    let f = ctx.field();
    let sign = f.sign(total as i64);
    let coefficients = tuples
        .iter()
        .map(|t| {
            t.iter().enumerate().fold(sign, |acc, (i, &l)| {
                let top = if i == j - 1 { half - 1 } else { half };
                f.mul(acc, ctx.lucas_binom(top, l))
            })
        })
        .collect();
    let projection = tuples
        .iter()
        .map(|t| t.iter().map(|&l| l % ctx.p()).collect())
        .collect();
    Ok(SupportSet {
        m,
        j,
        tuples,
        coefficients,
        projection,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportSummary {
    pub m: u32,
    pub size: usize,
    pub injective: bool,
    pub all_coefficients_nonzero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisjointnessVerdict {
    pub pass: bool,
    pub sets: Vec<SupportSummary>,
    /// Pairs `(m, m')` whose projected supports meet.
    pub overlaps: Vec<(u32, u32)>,
}

/// Certifies independence of `I^0..I^{g-1}` over F_p[z^p]: the projections
/// of `Γ^m_1` are injective, carry nonzero coefficients and are pairwise disjoint.
pub fn check_support_disjointness(ctx: &PrimeContext) -> Result<DisjointnessVerdict> {
    let supports = (0..ctx.g())
        .map(|m| gamma_support(ctx, m, 1))
        .collect::<Result<Vec<_>>>()?;
    let sets: Vec<SupportSummary> = supports
        .iter()
        .map(|s| SupportSummary {
            m: s.m,
            size: s.tuples.len(),
            injective: s.is_injective(),
            all_coefficients_nonzero: s.coefficients.iter().all(|&c| c != 0),
        })
        .collect();
    let projected: Vec<HashSet<&Vec<u64>>> = supports
        .iter()
        .map(|s| s.projection.iter().collect())
        .collect();
    let mut overlaps = Vec::new();
    for a in 0..projected.len() {
        for b in a + 1..projected.len() {
            if !projected[a].is_disjoint(&projected[b]) {
                overlaps.push((a as u32, b as u32));
            }
        }
    }
    let pass = overlaps.is_empty()
        && sets
            .iter()
            .all(|s| s.injective && s.all_coefficients_nonzero && s.size > 0);
    Ok(DisjointnessVerdict {
        pass,
        sets,
        overlaps,
    })
}

/// Writes `v` as `Σ_m c_m(z) I^m(z)` with `c_m ∈ F_p[z^p]`, where `basis[m] = I^m`.
///
/// The coefficients are read off the first coordinate: a monomial `z^e` of
/// `v_1` can only come from `c_m I^m_1` for the unique `m` whose projected
/// support contains `e mod p`, and then `e = p·q + ℓ` with `ℓ = e mod p`.
/// Returns `None` when no such combination exists; the candidate is
/// confirmed on every coordinate before it is returned.
pub fn express_in_basis(
    ctx: &PrimeContext,
    v: &FpVector,
    basis: &[FpVector],
) -> Result<Option<Vec<FpPoly>>> {
    let n = ctx.n_points();
    let p = ctx.p();
    let f = ctx.field();
    let mut lookup: BTreeMap<Vec<u64>, (usize, u64)> = BTreeMap::new();
    for (m, b) in basis.iter().enumerate() {
        for (mono, c) in b[0].terms() {
            let key: Vec<u64> = mono.exps().iter().map(|&e| e as u64 % p).collect();
            if lookup.insert(key, (m, *c)).is_some() {
                return Err(Error::Internal(
                    "basis supports are not disjoint after projection".into(),
                ));
            }
        }
    }
    let mut coeffs: Vec<BTreeMap<Vec<u32>, u64>> = vec![BTreeMap::new(); basis.len()];
    for (mono, c) in v[0].terms() {
        let residue: Vec<u64> = mono.exps().iter().map(|&e| e as u64 % p).collect();
        let Some(&(m, base)) = lookup.get(&residue) else {
            return Ok(None);
        };
        let q: Vec<u32> = mono
            .exps()
            .iter()
            .zip(&residue)
            .map(|(&e, &r)| e - r as u32)
            .collect();
        let value = f.mul(*c, f.inv(base).expect("support coefficients are nonzero"));
        match coeffs[m].get(&q) {
            Some(&prev) if prev != value => return Ok(None),
            _ => {
                coeffs[m].insert(q, value);
            }
        }
    }
    let polys: Vec<FpPoly> = coeffs
        .into_iter()
        .map(|c| SparsePoly::from_terms(f, n, c))
        .collect();
    let mut recombined = FpVector::zero(f, n, n);
    for (c, b) in polys.iter().zip(basis) {
        recombined = recombined.try_add(&b.mul_poly(c)?)?;
    }
    Ok((recombined == *v).then_some(polys))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(g: u32, p: u64) -> PrimeContext {
        PrimeContext::new(g, p).unwrap()
    }

    fn i0_g1_p5() -> FpVector {
        let c = ctx(1, 5);
        let f = |coefs: [u64; 3]| {
            SparsePoly::from_terms(
                c.field(),
                3,
                (0..3).map(|i| {
                    let mut e = vec![0u32; 3];
                    e[i] = 1;
                    (e, coefs[i])
                }),
            )
        };
        VectorPoly::new(vec![f([4, 3, 3]), f([3, 4, 3]), f([3, 3, 4])]).unwrap()
    }

    #[test]
    fn omega_shape() {
        let s = KzSystem::new(&ctx(1, 5));
        let o = s.omega(0, 2);
        assert_eq!(o[0][0], -1);
        assert_eq!(o[2][2], -1);
        assert_eq!(o[0][2], 1);
        assert_eq!(o[2][0], 1);
        assert_eq!(o[1], vec![0, 0, 0]);
        assert_eq!(s.omega(0, 2), s.omega(2, 0));
    }

    #[test]
    fn known_solution_passes() {
        let v = verify_kz(&i0_g1_p5(), &ctx(1, 5)).unwrap();
        assert!(v.passed(), "{v:?}");
        assert_eq!(v.equations.len(), 3);
    }

    #[test]
    fn constant_vector_fails_constraint() {
        let c = ctx(1, 5);
        let one = VectorPoly::new(vec![FpPoly::one(c.field(), 3); 3]).unwrap();
        let v = verify_kz(&one, &c).unwrap();
        assert!(!v.constraint_sum_zero);
        assert!(v.equations.iter().all(|e| e.pass));
        assert!(!v.passed());
    }

    #[test]
    fn zero_vector_passes() {
        let c = ctx(2, 7);
        assert!(verify_kz(&FpVector::zero(c.field(), 5, 5), &c)
            .unwrap()
            .passed());
    }

    #[test]
    fn perturbed_solution_reports_residual() {
        let c = ctx(1, 5);
        let sol = i0_g1_p5();
        let bump = FpPoly::var(c.field(), 3, 1);
        let mut coords = sol.into_coords();
        coords[0] = &coords[0] + &bump;
        coords[1] = &coords[1] - &bump;
        let v = verify_kz(&VectorPoly::new(coords).unwrap(), &c).unwrap();
        assert!(v.constraint_sum_zero);
        assert!(!v.passed());
        assert!(v.equations.iter().any(|e| !e.pass && e.residual != "0"));
    }

    #[test]
    fn wrong_length_is_rejected() {
        let c = ctx(1, 5);
        let short = FpVector::zero(c.field(), 3, 2);
        assert!(matches!(
            verify_kz(&short, &c),
            Err(Error::LengthMismatch {
                expected: 3,
                got: 2
            })
        ));
    }

    #[test]
    fn support_g1_p5() {
        let c = ctx(1, 5);
        let s = gamma_support(&c, 0, 1).unwrap();
        assert_eq!(s.tuples, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        assert_eq!(s.to_poly(&c), i0_g1_p5()[0]);
        assert!(s.is_injective());
    }

    #[test]
    fn support_constraints_g2_p7() {
        let c = ctx(2, 7);
        let s = gamma_support(&c, 1, 1).unwrap();
        assert!(!s.tuples.is_empty());
        for t in &s.tuples {
            assert_eq!(t.iter().sum::<u64>(), 8);
            assert!(t[0] <= 2);
            assert!(t[1..].iter().all(|&l| l <= 3));
        }
        assert!(s.coefficients.iter().all(|&x| x != 0));
        assert!(gamma_support(&c, 2, 1).is_err());
        assert!(gamma_support(&c, 0, 6).is_err());
        assert!(gamma_support(&c, 0, 0).is_err());
    }

    #[test]
    fn coefficients_nonzero_everywhere() {
        for (g, p) in [(1, 5), (2, 5), (2, 7), (3, 7), (2, 11)] {
            let c = ctx(g, p);
            for m in 0..g {
                for j in 1..=c.n_points() {
                    let s = gamma_support(&c, m, j).unwrap();
                    assert!(s.coefficients.iter().all(|&x| x != 0));
                }
            }
        }
    }

    #[test]
    fn disjointness_examples() {
        for (g, p) in [(1, 5), (2, 5), (3, 7)] {
            let v = check_support_disjointness(&ctx(g, p)).unwrap();
            assert!(v.pass, "g={g} p={p}: {v:?}");
            assert_eq!(v.sets.len(), g as usize);
        }
    }

    #[test]
    fn basis_expression_recovers_multiplier() {
        let c = ctx(1, 5);
        let basis = vec![i0_g1_p5()];
        let mult =
            SparsePoly::from_terms(c.field(), 3, vec![(vec![5, 0, 10], 2), (vec![0, 0, 0], 1)]);
        let v = basis[0].mul_poly(&mult).unwrap();
        let found = express_in_basis(&c, &v, &basis).unwrap().unwrap();
        assert_eq!(found, vec![mult]);
        let not_in_span = basis[0].mul_poly(&FpPoly::var(c.field(), 3, 0)).unwrap();
        assert_eq!(express_in_basis(&c, &not_in_span, &basis).unwrap(), None);
    }
}
