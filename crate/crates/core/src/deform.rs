//! First-order deformations of maps with prescribed ramification, and the
//! closed-form dimension counts they are compared against.
//!
//! A first-order deformation of `f = N/D` of degree `d` is
//! `(N + εA)/(D + εB)` together with a motion `P_i + ε x_i` of every marked
//! point. Writing `f̃ = f + ε h` with `h = (A·D − N·B)/D²`, keeping
//! ramification of order at least `e_i` at the moved point and the branch
//! value fixed is the linear system
//!
//! ```text
//! h_j + (j + 1) a_{j+1} x_i = 0,   j = 0 .. e_i - 1,
//! ```
//!
//! in local coordinates centred at `P_i` and `f(P_i)`, where `a_j` are the
//! coefficients of `f` there. The direction `(A, B) = (N, D)` only rescales
//! the presentation and is quotiented out.

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::linalg::Matrix;
use crate::poly::{series_div, shift_slice, PointP1, RatMap};
use crate::ramify::ramification_index;

/// Ramification of order at least `e` at `point`; `e = 0` marks a point
/// without condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RamCondition {
    pub point: PointP1,
    pub e: usize,
}

impl RamCondition {
    pub fn new(point: PointP1, e: usize) -> Self {
        RamCondition { point, e }
    }
}

/// A dimension that may be unknown.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimValue {
    Exact(i64),
    Indeterminate,
}

impl DimValue {
    pub fn exact(self) -> Option<i64> {
        match self {
            DimValue::Exact(v) => Some(v),
            DimValue::Indeterminate => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct GenusParams {
    pub g_source: usize,
    pub g_target: usize,
}

/// The 0/1 indicator: 1 exactly when the condition is tame and the map is
/// ramified to order exactly `e` at the point.
pub fn delta_indicator(f: &RatMap, cond: &RamCondition) -> Result<u8> {
    if cond.e == 0 {
        return Ok(0);
    }
    let actual = ramification_index(f, &cond.point)?;
    if actual < cond.e {
        return Err(Error::ConditionViolated(format!(
            "ramification index {actual} at {} is below the required {}",
            cond.point.format(f.field()),
            cond.e
        )));
    }
    let p = f.field().characteristic() as usize;
    Ok(u8::from(cond.e % p != 0 && actual == cond.e))
}

/// Dimension of the first-order deformations of a degree-`d` map to `P¹`
/// with fixed branch values, given `(e_i, δ_i)` per marked point:
/// `h⁰(O(2d − Σ(e_i − δ_i))) + Σ(1 − δ_i)` on a source of genus `g_source`.
///
/// For genus 0 this is exact. For positive genus the value is exact only
/// when Riemann–Roch determines `h⁰`, i.e. the twisted degree is negative
/// or at least `2g − 1`; otherwise it is indeterminate.
pub fn expected_dim_fixed_target(d: usize, conds: &[(usize, u8)], g_source: usize) -> DimValue {
    let twist: i64 = conds.iter().map(|&(e, dl)| e as i64 - dl as i64).sum();
    let free: i64 = conds.iter().map(|&(_, dl)| 1 - dl as i64).sum();
    let m = 2 * d as i64 - twist;
    let g = g_source as i64;
    let h0 = if m < 0 {
        0
    } else if g == 0 {
        m + 1
    } else if m >= 2 * g - 1 {
        m + 1 - g
    } else {
        return DimValue::Indeterminate;
    };
    DimValue::Exact(h0 + free)
}

/// `d(2 − 2g_D) − (2 − 2g_C) − Σ(e_i − 1)`, the dimension when the source
/// curve and the marked points are allowed to move.
pub fn expected_dim_varying_source(d: usize, genus: GenusParams, e_list: &[usize]) -> i64 {
    let d = d as i64;
    let excess: i64 = e_list.iter().map(|&e| e as i64 - 1).sum();
    d * (2 - 2 * genus.g_target as i64) - (2 - 2 * genus.g_source as i64) - excess
}

/// Predicted dimensions for maps from a general curve of genus `g` to `P¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BrillNoether {
    /// `2d − 2 − g − Σ(e_i − 1)`, modulo automorphisms of the target.
    pub expected_dim: i64,
    /// `2d − 2 + 2g − Σ(e_i − 1) + ε_g`, the fibre dimension of the branch
    /// map with `ε_g = 3, 1, 0` for `g = 0, 1, ≥ 2`.
    pub branch_fiber_dim: i64,
    /// `m`, for families with `m` wild points; only defined when
    /// `2d − 2 = m + Σ(e_i − 1)`.
    pub wild_family_dim: Option<i64>,
}

pub fn brill_noether_dims(d: usize, g: usize, e_list: &[usize], wild_count: usize) -> BrillNoether {
    let excess: i64 = e_list.iter().map(|&e| e as i64 - 1).sum();
    let (d, gi) = (d as i64, g as i64);
    let eps = match g {
        0 => 3,
        1 => 1,
        _ => 0,
    };
    BrillNoether {
        expected_dim: 2 * d - 2 - gi - excess,
        branch_fiber_dim: 2 * d - 2 + 2 * gi - excess + eps,
        wild_family_dim: (2 * d - 2 == wild_count as i64 + excess).then_some(wild_count as i64),
    }
}

/// One tangent vector: perturbations of numerator and denominator
/// coefficients (lowest first, `d + 1` each) and the point motions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationVector {
    pub num: Vec<Fe>,
    pub den: Vec<Fe>,
    pub motions: Vec<Fe>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationReport {
    pub solver_dim: usize,
    pub formula_dim: i64,
    pub deltas: Vec<u8>,
    /// Basis of the solution space modulo the rescaling direction.
    pub basis: Vec<DeformationVector>,
    /// Number of linear equations imposed.
    pub equations: usize,
}

impl DeformationReport {
    pub fn point_motions(&self) -> Vec<Vec<Fe>> {
        self.basis.iter().map(|v| v.motions.clone()).collect()
    }
}

/// Coefficients of the polynomial `c` (of formal degree `d`) in the source
/// chart at `p`: `c(P + s)` or `s^d c(1/s)`.
pub(crate) fn chart(field: &Field, c: &[Fe], p: &PointP1, d: usize) -> Vec<Fe> {
    let mut v = match *p {
        PointP1::Affine(a) => shift_slice(field, c, &a),
        PointP1::Infinity => {
            let mut v = vec![Fe::ZERO; d + 1];
            for (i, &ci) in c.iter().enumerate() {
                v[d - i] = ci;
            }
            v
        }
    };
    v.resize(d + 1, Fe::ZERO);
    v
}

fn mul_trunc(f: &Field, a: &[Fe], b: &[Fe], len: usize) -> Vec<Fe> {
    let mut out = vec![Fe::ZERO; len];
    for (i, &x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(len - i) {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    out
}

/// Rows of the linear system for one condition, over the unknowns
/// `(A_0..A_d, B_0..B_d, x_1..x_n)`.
fn condition_rows(f: &RatMap, cond: &RamCondition, slot: usize, n: usize) -> Vec<Vec<Fe>> {
    let field = f.field();
    let d = f.degree();
    let e = cond.e;
    let cols = 2 * (d + 1) + n;
    let ns = chart(field, f.num().coeffs(), &cond.point, d);
    let ds = chart(field, f.den().coeffs(), &cond.point, d);
    let (_, local) = f.taylor_shift(&cond.point, e);
    // Weights turning (A_s, B_s) into the series of h in the target chart.
    let (w_a, w_b) = if !ds[0].is_zero() {
        let d2 = mul_trunc(field, &ds, &ds, e);
        let u = series_div(field, &[Fe::ONE], &ds, e).expect("unit");
        let v = series_div(field, &ns, &d2, e).expect("unit");
        (u, v.iter().map(|&c| field.neg(c)).collect::<Vec<_>>())
    } else {
        let n2 = mul_trunc(field, &ns, &ns, e);
        let u = series_div(field, &[Fe::ONE], &ns, e).expect("unit");
        let v = series_div(field, &ds, &n2, e).expect("unit");
        (v.iter().map(|&c| field.neg(c)).collect::<Vec<_>>(), u)
    };
    let mut rows = vec![vec![Fe::ZERO; cols]; e];
    for k in 0..=d {
        let mut mono = vec![Fe::ZERO; k + 1];
        mono[k] = Fe::ONE;
        let m = chart(field, &mono, &cond.point, d);
        let ha = mul_trunc(field, &m, &w_a, e);
        let hb = mul_trunc(field, &m, &w_b, e);
        for j in 0..e {
            rows[j][k] = ha[j];
            rows[j][d + 1 + k] = hb[j];
        }
    }
    for (j, row) in rows.iter_mut().enumerate() {
        row[2 * (d + 1) + slot] = field.mul_int(local.coeffs[j + 1], j as i64 + 1);
    }
    rows
}

fn check_conditions(f: &RatMap, conds: &[RamCondition]) -> Result<()> {
    if !f.is_separable() {
        return Err(Error::InseparableMap);
    }
    for (i, a) in conds.iter().enumerate() {
        if conds[..i].iter().any(|b| b.point == a.point) {
            return Err(Error::InvalidArgument(format!("point {} listed twice", a.point.format(f.field()))));
        }
    }
    Ok(())
}

/// Solves the first-order deformation problem exactly and compares with the
/// closed-form count.
pub fn solve_first_order(f: &RatMap, conds: &[RamCondition]) -> Result<DeformationReport> {
    check_conditions(f, conds)?;
    let deltas = conds.iter().map(|c| delta_indicator(f, c)).collect::<Result<Vec<u8>>>()?;
    let field = f.field();
    let d = f.degree();
    let n = conds.len();
    let cols = 2 * (d + 1) + n;
    let mut rows = Vec::new();
    for (i, c) in conds.iter().enumerate() {
        if c.e > 0 {
            rows.extend(condition_rows(f, c, i, n));
        }
    }
    let equations = rows.len();
    let (free, basis) = Matrix::from_rows(field, cols, &rows).nullspace_with_free_columns();
    let mut trivial = vec![Fe::ZERO; cols];
    for (i, &c) in f.num().coeffs().iter().enumerate() {
        trivial[i] = c;
    }
    for (i, &c) in f.den().coeffs().iter().enumerate() {
        trivial[d + 1 + i] = c;
    }
    // The rescaling direction lies in the span; drop the first basis vector
    // carrying a nonzero coordinate of it.
    let drop = free.iter().position(|&c| !trivial[c].is_zero()).ok_or_else(|| Error::Internal("rescaling direction missing from solution space".into()))?;
    let basis: Vec<DeformationVector> = basis
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| i != drop)
        .map(|(_, v)| DeformationVector { num: v[..d + 1].to_vec(), den: v[d + 1..2 * d + 2].to_vec(), motions: v[2 * d + 2..].to_vec() })
        .collect();
    let pairs: Vec<(usize, u8)> = conds.iter().zip(&deltas).map(|(c, &dl)| (c.e, dl)).collect();
    let formula_dim = expected_dim_fixed_target(d, &pairs, 0).exact().expect("genus 0 is exact");
    Ok(DeformationReport { solver_dim: basis.len(), formula_dim, deltas, basis, equations })
}
