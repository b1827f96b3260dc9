//! Instance generators and brute-force oracles shared by the integration
//! tests and the acceptance runner.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use wildram::deform::RamCondition;
use wildram::moduli::{enumerate_maps, linear_system_fixed_branch, BranchCondition, Filters};
use wildram::poly::reduce_map;
use wildram::ramify::{ramification_profile, scan_extension};
use wildram::{DualNumber, Fe, Field, PointP1, Poly, RatMap};

pub fn point_from_index(field: &Field, i: u32) -> PointP1 {
    if i == field.size() {
        PointP1::Infinity
    } else {
        PointP1::Affine(field.from_index(i))
    }
}

pub fn all_points(field: &Field) -> Vec<PointP1> {
    (0..=field.size()).map(|i| point_from_index(field, i)).collect()
}

pub fn random_points<R: Rng>(field: &Field, n: usize, rng: &mut R) -> Vec<PointP1> {
    let mut pts = all_points(field);
    pts.shuffle(rng);
    pts.truncate(n);
    pts
}

pub fn random_elem<R: Rng>(field: &Field, rng: &mut R) -> Fe {
    field.from_index(rng.gen_range(0..field.size()))
}

/// A random separable map of degree exactly `d`, or `None` after repeated
/// failures.
pub fn random_map<R: Rng>(field: &Field, d: usize, rng: &mut R) -> Option<RatMap> {
    for _ in 0..200 {
        let num = Poly::new(field, (0..=d).map(|_| random_elem(field, rng)).collect());
        let den = Poly::new(field, (0..=d).map(|_| random_elem(field, rng)).collect());
        if let Ok(f) = reduce_map(&num, &den) {
            if f.degree() == d && f.is_separable() {
                return Some(f);
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CondKind {
    /// Tame index imposed and attained exactly.
    TameExact,
    /// The actual index exceeds the imposed one.
    Higher,
    /// Imposed index divisible by p.
    Wild,
    /// `e = 0`.
    Zero,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub map: RatMap,
    pub conds: Vec<RamCondition>,
}

impl Instance {
    pub fn kinds(&self) -> Vec<CondKind> {
        let p = self.map.field().characteristic() as usize;
        self.conds
            .iter()
            .map(|c| {
                if c.e == 0 {
                    CondKind::Zero
                } else if c.e % p == 0 {
                    CondKind::Wild
                } else if wildram::ramify::ramification_index(&self.map, &c.point).unwrap() > c.e {
                    CondKind::Higher
                } else {
                    CondKind::TameExact
                }
            })
            .collect()
    }
}

/// A map of degree `d ≤ d_max` together with up to `n_max` conditions it
/// satisfies, built by solving the fixed-branch linear system for randomly
/// chosen indices and branch values. Conditions are drawn from four kinds:
/// tame, tame but imposed one order higher on the map, wild and empty.
pub fn random_instance<R: Rng>(field: &Field, d_max: usize, n_max: usize, rng: &mut R) -> Instance {
    let p = field.characteristic() as usize;
    loop {
        let d = rng.gen_range(1..=d_max);
        let n = rng.gen_range(0..=n_max.min(field.size() as usize + 1));
        let pts = random_points(field, n, rng);
        let mut conds = Vec::new();
        let mut imposed = Vec::new();
        for &pt in &pts {
            let tame: Vec<usize> = (1..=d.min(3)).filter(|e| e % p != 0).collect();
            let kind = rng.gen_range(0..4);
            let (e, imp) = match kind {
                0 if !tame.is_empty() => {
                    let e = *tame.choose(rng).unwrap();
                    (e, e)
                }
                1 if !tame.is_empty() => {
                    let e = *tame.choose(rng).unwrap();
                    (e, e + 1)
                }
                2 if p <= d => (p, p),
                _ => (0, 0),
            };
            conds.push(RamCondition::new(pt, e));
            imposed.push(imp);
        }
        let total: usize = imposed.iter().sum();
        if total + 2 > 2 * d + 2 {
            continue;
        }
        let bconds: Vec<BranchCondition> = pts
            .iter()
            .zip(&imposed)
            .filter(|(_, &e)| e > 0)
            .map(|(&point, &e)| BranchCondition { point, value: point_from_index(field, rng.gen_range(0..=field.size())), e })
            .collect();
        let space = linear_system_fixed_branch(field, d, &bconds).unwrap();
        for _ in 0..40 {
            let mut v = vec![Fe::ZERO; 2 * d + 2];
            for b in &space.basis {
                let c = random_elem(field, rng);
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = field.add(*x, field.mul(c, y));
                }
            }
            let num = Poly::new(field, v[..=d].to_vec());
            let den = Poly::new(field, v[d + 1..].to_vec());
            let Ok(f) = reduce_map(&num, &den) else { continue };
            if f.degree() == d && f.is_separable() {
                return Instance { map: f, conds };
            }
        }
    }
}

/// Coefficients of `f` as `d + 1` entries each.
fn padded(p: &Poly, d: usize) -> Vec<Fe> {
    let mut c = p.coeffs().to_vec();
    c.resize(d + 1, Fe::ZERO);
    c
}

/// Counts all `(A, B, x) ∈ F_q^{2d+2+n}` such that `(N + εA)/(D + εB)` keeps
/// ramification of order at least `e_i` at `P_i + εx_i` with unchanged
/// branch values, by direct evaluation over the dual numbers.
pub fn dual_oracle_count(f: &RatMap, conds: &[RamCondition]) -> u128 {
    let field = f.field();
    let q = field.size() as u128;
    let d = f.degree();
    let n = conds.len();
    let (nn, dd) = (padded(f.num(), d), padded(f.den(), d));
    let values: Vec<PointP1> = conds.iter().map(|c| f.evaluate(&c.point)).collect();
    let width = 2 * d + 2 + n;
    let total = q.pow(width as u32);
    let mut count = 0u128;
    let mut v = vec![Fe::ZERO; width];
    for idx in 0..total {
        let mut t = idx;
        for x in v.iter_mut() {
            *x = field.from_index((t % q) as u32);
            t /= q;
        }
        let ok = conds.iter().enumerate().all(|(i, c)| {
            if c.e == 0 {
                return true;
            }
            let g: Vec<DualNumber> = (0..=d)
                .map(|k| {
                    let (nk, dk, ak, bk) = (nn[k], dd[k], v[k], v[d + 1 + k]);
                    match values[i] {
                        PointP1::Affine(val) => DualNumber::new(
                            field.sub(nk, field.mul(val, dk)),
                            field.sub(ak, field.mul(val, bk)),
                        ),
                        PointP1::Infinity => DualNumber::new(dk, bk),
                    }
                })
                .collect();
            let (coeffs, centre): (Vec<DualNumber>, DualNumber) = match c.point {
                PointP1::Affine(a) => (g, DualNumber::new(a, v[2 * d + 2 + i])),
                PointP1::Infinity => (g.into_iter().rev().collect(), DualNumber::new(Fe::ZERO, v[2 * d + 2 + i])),
            };
            // Horner in u for G(centre + u), truncated mod u^e.
            let e = c.e;
            let mut acc = vec![DualNumber::default(); e];
            for &gk in coeffs.iter().rev() {
                let mut next = vec![DualNumber::default(); e];
                for j in 0..e {
                    let mut s = acc[j].mul(field, centre);
                    if j > 0 {
                        s = s.add(field, acc[j - 1]);
                    }
                    next[j] = s;
                }
                next[0] = next[0].add(field, gk);
                acc = next;
            }
            acc.iter().all(|a| a.is_zero())
        });
        if ok {
            count += 1;
        }
    }
    count
}

/// Compares the profile with a point-by-point scan over `F_{q^m}` for every
/// `m ≤ m_max`: each closed point of degree dividing `m` must show up as
/// that many geometric points with the same `(e, d)`, and nothing else.
pub fn profile_matches_scan(f: &RatMap, m_max: u32) -> Result<(), String> {
    let profile = ramification_profile(f).map_err(|e| e.to_string())?;
    for m in 1..=m_max {
        let (_, scanned) = scan_extension(f, m).map_err(|e| e.to_string())?;
        let mut got: Vec<(usize, usize)> = scanned.iter().map(|&(_, e, d)| (e, d)).collect();
        let mut want: Vec<(usize, usize)> = Vec::new();
        for r in &profile.points {
            if m as usize % r.degree == 0 {
                want.extend(std::iter::repeat((r.e, r.different)).take(r.degree));
            }
        }
        got.sort();
        want.sort();
        if got != want {
            return Err(format!("{}: over degree {m} scan {got:?}, profile predicts {want:?}", f.render()));
        }
    }
    Ok(())
}

/// Free-branch count by looping over every tuple of branch values.
pub fn brute_free_branch(base: &Field, d: usize, conds: &[RamCondition], m: u32, filters: &Filters) -> u128 {
    let (field, emb) = base.extension(m).unwrap();
    let conds: Vec<RamCondition> =
        conds.iter().filter(|c| c.e > 0).map(|c| RamCondition::new(c.point.rebase(&emb), c.e)).collect();
    let pts = all_points(&field);
    let n = conds.len();
    let k = pts.len();
    let mut total = 0u128;
    for idx in 0..k.pow(n as u32) {
        let mut t = idx;
        let bconds: Vec<BranchCondition> = conds
            .iter()
            .map(|c| {
                let v = pts[t % k];
                t /= k;
                BranchCondition { point: c.point, value: v, e: c.e }
            })
            .collect();
        let space = linear_system_fixed_branch(&field, d, &bconds).unwrap();
        let (tally, _) = enumerate_maps(&space, filters, u64::MAX, 1, 0).unwrap();
        total += tally.selected(filters);
    }
    total
}

/// Every map of degree exactly `d` over `field`, one per projective class.
pub fn all_maps(field: &Field, d: usize) -> Vec<RatMap> {
    let q = field.size() as u128;
    let width = 2 * d + 2;
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for idx in 1..q.pow(width as u32) {
        let mut t = idx;
        let v: Vec<Fe> = (0..width)
            .map(|_| {
                let x = field.from_index((t % q) as u32);
                t /= q;
                x
            })
            .collect();
        let num = Poly::new(field, v[..=d].to_vec());
        let den = Poly::new(field, v[d + 1..].to_vec());
        if let Ok(f) = reduce_map(&num, &den) {
            if f.degree() == d && seen.insert(f.render()) {
                out.push(f);
            }
        }
    }
    out
}
