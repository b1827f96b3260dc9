//! Counting maps with prescribed ramification over a tower of finite fields
//! and estimating the dimension of the corresponding moduli space.
//!
//! With the branch value `c` at `P` fixed, ramification of order at least
//! `e` is the linear condition `(x − P)^e | num − c·den` (or `| den` when
//! `c = ∞`), so the maps with fixed branch values are the reduced points of
//! the projectivized solution space. Counting with free branch values sums
//! over branch tuples; since `PGL₂` permutes the tuples and is simply
//! transitive on triples of distinct points, each orbit of tuples is
//! represented by a normal form (first values `∞, 0, 1`) and the total is
//! `|PGL₂|` times a count of normal forms.

use std::thread;

use crate::deform::{chart, RamCondition};
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::linalg::Matrix;
use crate::poly::{reduce_map, PointP1, Poly, RatMap};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Ramification of order at least `e` at `point`, with branch value `value`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BranchCondition {
    pub point: PointP1,
    pub value: PointP1,
    pub e: usize,
}

/// The maps of degree at most `d` satisfying fixed-branch conditions, as the
/// span of coefficient vectors `(num_0..num_d, den_0..den_d)`.
#[derive(Clone, Debug)]
pub struct SearchSpace {
    pub field: Field,
    pub d: usize,
    pub basis: Vec<Vec<Fe>>,
    pub conds: Vec<BranchCondition>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Filters {
    pub require_separable: bool,
    /// Ramification index exactly `e_i` at each `P_i`.
    pub require_exact_ram: bool,
    /// No ramification outside the `P_i`.
    pub require_unramified_elsewhere: bool,
}

impl Default for Filters {
    fn default() -> Self {
        Filters { require_separable: true, require_exact_ram: true, require_unramified_elsewhere: false }
    }
}

impl Filters {
    fn needs_exact(&self) -> bool {
        self.require_exact_ram || self.require_unramified_elsewhere
    }
}

/// Tallies of one enumeration. `candidates` counts coefficient vectors
/// examined; the other fields count maps surviving successive filters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub candidates: u128,
    pub reduced: u128,
    pub separable: u128,
    pub exact: u128,
}

impl Tally {
    fn add(&mut self, o: &Tally) {
        self.candidates += o.candidates;
        self.reduced += o.reduced;
        self.separable += o.separable;
        self.exact += o.exact;
    }

    fn scaled(&self, k: u128) -> Tally {
        Tally { candidates: self.candidates, reduced: self.reduced * k, separable: self.separable * k, exact: self.exact * k }
    }

    /// The count selected by the filters.
    pub fn selected(&self, filters: &Filters) -> u128 {
        if filters.needs_exact() {
            self.exact
        } else if filters.require_separable {
            self.separable
        } else {
            self.reduced
        }
    }
}

/// Linear conditions of one branch condition on `(num, den)` coefficients.
fn branch_rows(field: &Field, d: usize, c: &BranchCondition) -> Vec<Vec<Fe>> {
    let mut rows = vec![vec![Fe::ZERO; 2 * d + 2]; c.e.min(d + 1)];
    for k in 0..=d {
        let mut mono = vec![Fe::ZERO; k + 1];
        mono[k] = Fe::ONE;
        let m = chart(field, &mono, &c.point, d);
        for (j, row) in rows.iter_mut().enumerate() {
            match c.value {
                PointP1::Affine(v) => {
                    row[k] = m[j];
                    row[d + 1 + k] = field.neg(field.mul(v, m[j]));
                }
                PointP1::Infinity => row[d + 1 + k] = m[j],
            }
        }
    }
    rows
}

fn nullspace(field: &Field, cols: usize, rows: &[Vec<Fe>]) -> Vec<Vec<Fe>> {
    if rows.is_empty() {
        return (0..cols)
            .map(|i| {
                let mut v = vec![Fe::ZERO; cols];
                v[i] = Fe::ONE;
                v
            })
            .collect();
    }
    Matrix::from_rows(field, cols, rows).nullspace()
}

fn check_distinct(points: impl Iterator<Item = PointP1>) -> Result<()> {
    let pts: Vec<PointP1> = points.collect();
    for (i, p) in pts.iter().enumerate() {
        if pts[..i].contains(p) {
            return Err(Error::InvalidArgument("condition points must be distinct".into()));
        }
    }
    Ok(())
}

pub fn linear_system_fixed_branch(field: &Field, d: usize, conds: &[BranchCondition]) -> Result<SearchSpace> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    check_distinct(conds.iter().map(|c| c.point))?;
    let rows: Vec<Vec<Fe>> = conds.iter().flat_map(|c| branch_rows(field, d, c)).collect();
    Ok(SearchSpace { field: field.clone(), d, basis: nullspace(field, 2 * d + 2, &rows), conds: conds.to_vec() })
}

/// Per-candidate filter state for one choice of branch values.
struct Checker {
    field: Field,
    d: usize,
    conds: Vec<BranchCondition>,
    filters: Filters,
}

impl Checker {
    /// 0 = degenerate, 1 = reduced of degree d, 2 = separable, 3 = exact.
    fn stage(&self, v: &[Fe]) -> u8 {
        let f = &self.field;
        let d = self.d;
        let n = Poly::new(f, v[..=d].to_vec());
        let den = Poly::new(f, v[d + 1..].to_vec());
        if n.is_zero() || den.is_zero() || n.deg0().max(den.deg0()) != d {
            return 0;
        }
        if n.gcd(&den).deg0() != 0 {
            return 0;
        }
        let w = &(&n.derivative() * &den) - &(&n * &den.derivative());
        if w.is_zero() {
            return 1;
        }
        if !self.filters.needs_exact() {
            return 2;
        }
        if self.filters.require_exact_ram {
            for c in &self.conds {
                let g = match c.value {
                    PointP1::Affine(val) => &n - &den.scale(val),
                    PointP1::Infinity => den.clone(),
                };
                let coeff = match c.point {
                    PointP1::Affine(a) => {
                        if c.e > d {
                            Fe::ZERO
                        } else {
                            g.shift(a).coeff(c.e)
                        }
                    }
                    PointP1::Infinity => {
                        if c.e > d {
                            Fe::ZERO
                        } else {
                            g.coeff(d - c.e)
                        }
                    }
                };
                if coeff.is_zero() {
                    return 2;
                }
            }
        }
        if self.filters.require_unramified_elsewhere {
            let mut rest = w.clone();
            let mut has_inf = false;
            for c in &self.conds {
                match c.point {
                    PointP1::Affine(a) => {
                        let lin = Poly::linear(f, a);
                        loop {
                            let (q, r) = rest.div_rem(&lin).expect("nonzero");
                            if !r.is_zero() {
                                break;
                            }
                            rest = q;
                        }
                    }
                    PointP1::Infinity => has_inf = true,
                }
            }
            if rest.deg0() != 0 || (!has_inf && w.deg0() + 2 != 2 * d) {
                return 2;
            }
        }
        3
    }
}

/// Number of points of `P^{k-1}(F_Q)`.
fn proj_count(q: u128, k: usize) -> u128 {
    if k == 0 {
        0
    } else {
        (q.pow(k as u32) - 1) / (q - 1)
    }
}

/// Writes the projective point with index `t` of the span of `basis` into
/// `out` (added to what is already there).
fn decode_proj(field: &Field, basis: &[Vec<Fe>], mut t: u128, out: &mut [Fe]) {
    let q = field.size() as u128;
    let k = basis.len();
    for lead in 0..k {
        let cnt = q.pow((k - 1 - lead) as u32);
        if t < cnt {
            let mut add = |coef: Fe, b: &[Fe]| {
                for (o, &x) in out.iter_mut().zip(b) {
                    *o = field.add(*o, field.mul(coef, x));
                }
            };
            add(Fe::ONE, &basis[lead]);
            for b in &basis[lead + 1..] {
                let digit = (t % q) as u32;
                t /= q;
                if digit != 0 {
                    add(field.from_index(digit), b);
                }
            }
            return;
        }
        t -= cnt;
    }
    unreachable!("projective index out of range");
}

/// Enumerates `P(V_1) × ... × P(V_r)`, summing one representative from each
/// factor, and tallies the filter stages. Optionally collects up to `keep`
/// surviving maps in enumeration order.
fn tally_product(
    checker: &Checker,
    factors: &[Vec<Vec<Fe>>],
    workers: usize,
    keep: usize,
) -> (Tally, Vec<RatMap>) {
    let field = &checker.field;
    let q = field.size() as u128;
    let sizes: Vec<u128> = factors.iter().map(|b| proj_count(q, b.len())).collect();
    let total: u128 = sizes.iter().product();
    if total == 0 {
        return (Tally::default(), Vec::new());
    }
    let width = 2 * checker.d + 2;
    let run = |lo: u128, hi: u128| {
        let mut t = Tally::default();
        let mut kept = Vec::new();
        let mut v = vec![Fe::ZERO; width];
        for idx in lo..hi {
            v.iter_mut().for_each(|x| *x = Fe::ZERO);
            let mut rest = idx;
            for (b, &s) in factors.iter().zip(&sizes) {
                decode_proj(field, b, rest % s, &mut v);
                rest /= s;
            }
            t.candidates += 1;
            let st = checker.stage(&v);
            if st >= 1 {
                t.reduced += 1;
            }
            if st >= 2 {
                t.separable += 1;
            }
            if st >= 3 {
                t.exact += 1;
            }
            let pass = match st {
                3 => true,
                2 => !checker.filters.needs_exact(),
                1 => !checker.filters.require_separable && !checker.filters.needs_exact(),
                _ => false,
            };
            if pass && kept.len() < keep {
                let d = checker.d;
                let n = Poly::new(field, v[..=d].to_vec());
                let den = Poly::new(field, v[d + 1..].to_vec());
                kept.push(reduce_map(&n, &den).expect("reduced candidate"));
            }
        }
        (t, kept)
    };
    let workers = workers.max(1) as u128;
    if workers == 1 || total < 4096 {
        return run(0, total);
    }
    let chunk = total.div_ceil(workers);
    let parts: Vec<(Tally, Vec<RatMap>)> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let lo = (w * chunk).min(total);
                let hi = ((w + 1) * chunk).min(total);
                let run = &run;
                s.spawn(move || run(lo, hi))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut t = Tally::default();
    let mut kept = Vec::new();
    for (pt, pk) in parts {
        t.add(&pt);
        for m in pk {
            if kept.len() < keep {
                kept.push(m);
            }
        }
    }
    (t, kept)
}

/// Running candidate budget shared by one counting job.
struct Budget {
    limit: u64,
    spent: u128,
}

impl Budget {
    fn charge(&mut self, n: u128) -> Result<()> {
        self.spent += n;
        if self.spent > self.limit as u128 {
            return Err(Error::BudgetExceeded { needed: self.spent, budget: self.limit });
        }
        Ok(())
    }
}

/// Counts the maps (projective classes of reduced `(num, den)` pairs of
/// degree `d`) in a fixed-branch search space, returning up to `keep`
/// examples that pass the filters.
pub fn enumerate_maps(space: &SearchSpace, filters: &Filters, budget: u64, workers: usize, keep: usize) -> Result<(Tally, Vec<RatMap>)> {
    let q = space.field.size() as u128;
    let need = proj_count(q, space.basis.len());
    Budget { limit: budget, spent: 0 }.charge(need)?;
    let checker = Checker { field: space.field.clone(), d: space.d, conds: space.conds.clone(), filters: *filters };
    Ok(tally_product(&checker, std::slice::from_ref(&space.basis), workers, keep))
}

/// `|PGL₂(F_Q)| = Q³ − Q`.
pub fn pgl2_order(q: u64) -> u128 {
    let q = q as u128;
    q * q * q - q
}

/// An exact nonnegative rational `num/den` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    pub num: u128,
    pub den: u128,
}

impl Ratio {
    pub fn new(num: u128, den: u128) -> Ratio {
        fn gcd(a: u128, b: u128) -> u128 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let g = gcd(num, den).max(1);
        Ratio { num: num / g, den: den / g }
    }

    pub fn is_integral(&self) -> bool {
        self.den == 1
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn render(&self) -> String {
        if self.den == 1 {
            self.num.to_string()
        } else {
            format!("{}/{}", self.num, self.den)
        }
    }
}

/// `count / |PGL₂(F_Q)|`, never rounded.
pub fn count_mod_pgl2(count: u128, q: u64) -> Ratio {
    Ratio::new(count, pgl2_order(q))
}

/// All set partitions of `0..n`, as block labels in restricted growth form.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn rec(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max {
            cur[i] = b;
            rec(i + 1, if b == max { max + 1 } else { max }, cur, out);
        }
    }
    if n == 0 {
        out.push(Vec::new());
    } else {
        rec(0, 0, &mut cur, &mut out);
    }
    out
}

/// Calls `visit` on every ordered tuple of `len` distinct elements of
/// `F_Q ∖ {0, 1}`.
fn distinct_tuples(field: &Field, len: usize, visit: &mut dyn FnMut(&[Fe]) -> Result<()>) -> Result<()> {
    let pool: Vec<Fe> = field.elements().skip(2).collect();
    let mut cur: Vec<Fe> = Vec::with_capacity(len);
    fn rec(pool: &[Fe], len: usize, cur: &mut Vec<Fe>, visit: &mut dyn FnMut(&[Fe]) -> Result<()>) -> Result<()> {
        if cur.len() == len {
            return visit(cur);
        }
        for &x in pool {
            if cur.contains(&x) {
                continue;
            }
            cur.push(x);
            rec(pool, len, cur, visit)?;
            cur.pop();
        }
        Ok(())
    }
    rec(&pool, len, &mut cur, visit)
}

/// Result of a free-branch count at one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelCount {
    pub m: u32,
    pub field_size: u64,
    /// Totals over all branch values; equal to `|PGL₂|` times `normal_forms`.
    pub totals: Tally,
    /// Tallies of normal forms, i.e. counts modulo `PGL₂`.
    pub normal_forms: Tally,
}

impl LevelCount {
    pub fn selected(&self, filters: &Filters) -> u128 {
        self.totals.selected(filters)
    }

    pub fn mod_pgl2(&self, filters: &Filters) -> Ratio {
        count_mod_pgl2(self.selected(filters), self.field_size)
    }
}

/// Counts degree-`d` maps over `F_{q^m}` satisfying the ramification
/// conditions (points over the base field) with arbitrary branch values.
pub fn free_branch_count(
    base: &Field,
    d: usize,
    conds: &[RamCondition],
    m: u32,
    filters: &Filters,
    budget: u64,
    workers: usize,
) -> Result<LevelCount> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    check_distinct(conds.iter().map(|c| c.point))?;
    let (field, emb) = base.extension(m)?;
    let conds: Vec<RamCondition> =
        conds.iter().filter(|c| c.e > 0).map(|c| RamCondition { point: c.point.rebase(&emb), e: c.e }).collect();
    let q = field.size() as u64;
    let width = 2 * d + 2;
    let mut budget = Budget { limit: budget, spent: 0 };
    let mut nf = Tally::default();
    let make_checker = |values: &[PointP1]| Checker {
        field: field.clone(),
        d,
        conds: conds.iter().zip(values).map(|(c, &v)| BranchCondition { point: c.point, value: v, e: c.e }).collect(),
        filters: *filters,
    };

    if conds.is_empty() {
        let basis = nullspace(&field, width, &[]);
        budget.charge(proj_count(q as u128, width))?;
        let checker = make_checker(&[]);
        let (t, _) = tally_product(&checker, &[basis], workers, 0);
        let order = pgl2_order(q);
        return Ok(LevelCount {
            m,
            field_size: q,
            totals: t,
            normal_forms: Tally {
                candidates: t.candidates,
                reduced: t.reduced / order,
                separable: t.separable / order,
                exact: t.exact / order,
            },
        });
    }

    let inf = PointP1::Infinity;
    let zero = PointP1::Affine(Fe::ZERO);
    let one = PointP1::Affine(Fe::ONE);
    for part in set_partitions(conds.len()) {
        let k = part.iter().max().map_or(0, |&b| b + 1);
        let mut block_e = vec![0usize; k];
        for (c, &b) in conds.iter().zip(&part) {
            block_e[b] += c.e;
        }
        // A value taken with total multiplicity above d forces a constant.
        if block_e.iter().any(|&s| s > d) {
            continue;
        }
        let rows_for = |values: &[PointP1]| -> Vec<Vec<Fe>> {
            conds
                .iter()
                .zip(values)
                .flat_map(|(c, &v)| branch_rows(&field, d, &BranchCondition { point: c.point, value: v, e: c.e }))
                .collect()
        };
        match k {
            1 => {
                // All points map to ∞. Normalize den monic and kill the
                // coefficient of num in degree deg(den).
                let values = vec![inf; conds.len()];
                let rows = rows_for(&values);
                let den_rows: Vec<Vec<Fe>> = rows.iter().map(|r| r[d + 1..].to_vec()).collect();
                let vd = nullspace(&field, d + 1, &den_rows);
                let checker = make_checker(&values);
                let n_d = proj_count(q as u128, vd.len());
                for t in 0..n_d {
                    let mut den = vec![Fe::ZERO; d + 1];
                    decode_proj(&field, &vd, t, &mut den);
                    let Some(deg) = den.iter().rposition(|c| !c.is_zero()) else { continue };
                    let lead_inv = field.inv(den[deg]).expect("nonzero");
                    let mut fixed = vec![Fe::ZERO; width];
                    for (i, &c) in den.iter().enumerate() {
                        fixed[d + 1 + i] = field.mul(c, lead_inv);
                    }
                    let num_basis: Vec<Vec<Fe>> = (0..=d)
                        .filter(|&i| i != deg)
                        .map(|i| {
                            let mut v = vec![Fe::ZERO; width];
                            v[i] = Fe::ONE;
                            v
                        })
                        .collect();
                    budget.charge(proj_count(q as u128, num_basis.len()))?;
                    // A one-dimensional factor has the single projective
                    // point `fixed`, which adds the den to every candidate.
                    let (t2, _) = tally_product(&checker, &[num_basis, vec![fixed]], workers, 0);
                    nf.add(&t2);
                }
            }
            2 => {
                let values: Vec<PointP1> = part.iter().map(|&b| if b == 0 { inf } else { zero }).collect();
                let rows = rows_for(&values);
                let den_rows: Vec<Vec<Fe>> =
                    rows.iter().filter(|r| r[..=d].iter().all(|x| x.is_zero())).map(|r| r[d + 1..].to_vec()).collect();
                let num_rows: Vec<Vec<Fe>> =
                    rows.iter().filter(|r| r[d + 1..].iter().all(|x| x.is_zero())).map(|r| r[..=d].to_vec()).collect();
                let vd: Vec<Vec<Fe>> = nullspace(&field, d + 1, &den_rows)
                    .into_iter()
                    .map(|v| {
                        let mut w = vec![Fe::ZERO; d + 1];
                        w.extend(v);
                        w
                    })
                    .collect();
                let vn: Vec<Vec<Fe>> = nullspace(&field, d + 1, &num_rows)
                    .into_iter()
                    .map(|mut v| {
                        v.resize(width, Fe::ZERO);
                        v
                    })
                    .collect();
                budget.charge(proj_count(q as u128, vd.len()) * proj_count(q as u128, vn.len()))?;
                let checker = make_checker(&values);
                let (t, _) = tally_product(&checker, &[vn, vd], workers, 0);
                nf.add(&t);
            }
            _ => {
                let mut visit = |extra: &[Fe]| -> Result<()> {
                    let block_val = |b: usize| match b {
                        0 => inf,
                        1 => zero,
                        2 => one,
                        _ => PointP1::Affine(extra[b - 3]),
                    };
                    let values: Vec<PointP1> = part.iter().map(|&b| block_val(b)).collect();
                    let rows = rows_for(&values);
                    let basis = nullspace(&field, width, &rows);
                    budget.charge(proj_count(q as u128, basis.len()))?;
                    let checker = make_checker(&values);
                    let (t, _) = tally_product(&checker, &[basis], workers, 0);
                    nf.add(&t);
                    Ok(())
                };
                distinct_tuples(&field, k - 3, &mut visit)?;
            }
        }
    }
    Ok(LevelCount { m, field_size: q, totals: nf.scaled(pgl2_order(q)), normal_forms: nf })
}

/// Outcome of a point-count dimension estimate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EstimateValue {
    Dimension(i64),
    /// All counts are zero.
    Empty,
    /// Fewer than two consecutive levels with nonzero counts.
    Insufficient,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DimensionEstimate {
    pub value: EstimateValue,
    /// `(m_a, m_b, log_q(N_b / N_a) / (m_b − m_a))` per consecutive pair.
    pub pairs: Vec<(u32, u32, f64)>,
    pub stable: bool,
}

/// Estimates `dim` from `N_m ≈ c·q^{m·dim}` using consecutive levels with
/// nonzero counts.
pub fn estimate_dimension(counts: &[(u32, f64)], q: u64) -> DimensionEstimate {
    if counts.iter().all(|&(_, n)| n == 0.0) {
        return DimensionEstimate { value: EstimateValue::Empty, pairs: Vec::new(), stable: false };
    }
    let mut sorted: Vec<(u32, f64)> = counts.to_vec();
    sorted.sort_by_key(|&(m, _)| m);
    let lq = (q as f64).ln();
    let pairs: Vec<(u32, u32, f64)> = sorted
        .windows(2)
        .filter(|w| w[0].1 > 0.0 && w[1].1 > 0.0)
        .map(|w| (w[0].0, w[1].0, (w[1].1 / w[0].1).ln() / lq / (w[1].0 - w[0].0) as f64))
        .collect();
    if pairs.is_empty() {
        return DimensionEstimate { value: EstimateValue::Insufficient, pairs, stable: false };
    }
    let rounded: Vec<i64> = pairs.iter().map(|p| p.2.round() as i64).collect();
    let stable = rounded.iter().all(|&r| r == rounded[0]) && pairs.len() + 1 == sorted.len();
    DimensionEstimate { value: EstimateValue::Dimension(*rounded.last().expect("nonempty")), pairs, stable }
}

/// Counts at several levels of the tower and the resulting estimate, taken
/// from the counts modulo `PGL₂`.
#[derive(Clone, Debug, PartialEq)]
pub struct CountReport {
    pub levels: Vec<LevelCount>,
    pub filters: Filters,
    pub estimate: DimensionEstimate,
}

pub fn count_tower(
    base: &Field,
    d: usize,
    conds: &[RamCondition],
    levels: &[u32],
    filters: &Filters,
    budget: u64,
    workers: usize,
) -> Result<CountReport> {
    let mut out = Vec::new();
    let mut budget_left = budget;
    for &m in levels {
        let lc = free_branch_count(base, d, conds, m, filters, budget_left, workers)?;
        budget_left = budget_left.saturating_sub(lc.normal_forms.candidates.min(u64::MAX as u128) as u64);
        out.push(lc);
    }
    let pts: Vec<(u32, f64)> = out.iter().map(|l| (l.m, l.mod_pgl2(filters).to_f64())).collect();
    let estimate = estimate_dimension(&pts, base.size() as u64);
    Ok(CountReport { levels: out, filters: *filters, estimate })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bc(point: PointP1, value: PointP1, e: usize) -> BranchCondition {
        BranchCondition { point, value, e }
    }

    #[test]
    fn linear_system_examples() {
        let f3 = Field::prime(3).unwrap();
        let z = PointP1::Affine(Fe::ZERO);
        let s = linear_system_fixed_branch(&f3, 1, &[bc(z, z, 1)]).unwrap();
        assert_eq!(s.basis.len(), 3);
        let f5 = Field::prime(5).unwrap();
        let inf = PointP1::Infinity;
        let s = linear_system_fixed_branch(&f5, 2, &[bc(z, z, 2), bc(inf, inf, 2)]).unwrap();
        assert_eq!(s.basis.len(), 2);
        let filters = Filters { require_separable: true, require_exact_ram: true, require_unramified_elsewhere: true };
        let (t, maps) = enumerate_maps(&s, &filters, DEFAULT_BUDGET, 1, 10).unwrap();
        assert_eq!(t.candidates, 6);
        assert_eq!(t.reduced, 4);
        assert_eq!(t.exact, 4);
        for m in maps {
            assert!(m.is_polynomial());
            assert_eq!(m.num(), &Poly::monomial(&f5, Fe::ONE, 2));
        }
    }

    #[test]
    fn pgl2_quotients() {
        assert_eq!(pgl2_order(3), 24);
        let r = count_mod_pgl2(30, 3);
        assert_eq!(r, Ratio { num: 5, den: 4 });
        assert!(!r.is_integral());
    }

    #[test]
    fn degree_one_without_conditions_is_pgl2() {
        for q in [2u64, 3, 5] {
            let f = Field::prime(q).unwrap();
            let lc = free_branch_count(&f, 1, &[], 1, &Filters::default(), DEFAULT_BUDGET, 1).unwrap();
            assert_eq!(lc.totals.separable, pgl2_order(q));
        }
    }

    #[test]
    fn impossible_wild_degree_is_empty() {
        let f = Field::prime(5).unwrap();
        let c = [RamCondition::new(PointP1::Infinity, 5)];
        let lc = free_branch_count(&f, 3, &c, 1, &Filters::default(), DEFAULT_BUDGET, 1).unwrap();
        assert_eq!(lc.totals.separable, 0);
    }

    #[test]
    fn estimates() {
        let e = estimate_dimension(&[(1, 4.0), (2, 4.0)], 5);
        assert_eq!((e.value, e.stable), (EstimateValue::Dimension(0), true));
        let e = estimate_dimension(&[(1, 7.0), (2, 49.0), (3, 343.0)], 7);
        assert_eq!((e.value, e.stable), (EstimateValue::Dimension(1), true));
        assert_eq!(estimate_dimension(&[(1, 0.0), (2, 0.0)], 3).value, EstimateValue::Empty);
        assert_eq!(estimate_dimension(&[(1, 0.0), (2, 3.0)], 3).value, EstimateValue::Insufficient);
    }

    #[test]
    fn partitions() {
        assert_eq!(set_partitions(3).len(), 5);
        assert_eq!(set_partitions(4).len(), 15);
    }
}
