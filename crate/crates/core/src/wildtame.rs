//! Moving between wild and tame ramification at infinity.
//!
//! Adding `c·x^p` to a map with a pole at infinity leaves `num'·den − num·den'`
//! unchanged, so finite ramification is untouched while the pole order at
//! infinity jumps to `p`. In the other direction, subtracting the part of the
//! polynomial part supported on exponents divisible by `p` (and inverting the
//! target when only a proper fraction is left) lowers the degree until the
//! point at infinity becomes tame.

use std::thread;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::poly::{parse_map, reduce_map, Poly, RatMap};
use crate::ramify::{ramification_profile, ClosedPoint, RamPoint, RamProfile};

fn finite_points(profile: &RamProfile) -> Vec<RamPoint> {
    profile.points.iter().filter(|r| r.point != ClosedPoint::Infinity).cloned().collect()
}

/// Index at infinity of a map with a pole there.
fn pole_order_at_infinity(f: &RatMap) -> Option<usize> {
    let (n, d) = (f.num().deg0(), f.den().deg0());
    (n > d).then(|| n - d)
}

/// `f + c·x^p`. Requires a separable map with a pole of order `< p` at
/// infinity and only tame finite ramification of index `< p`.
pub fn lift_tame_to_wild(f: &RatMap, c: Fe) -> Result<RatMap> {
    let field = f.field();
    let p = field.characteristic() as usize;
    if c.is_zero() {
        return Err(Error::InvalidArgument("the multiplier must be nonzero".into()));
    }
    if !f.is_separable() {
        return Err(Error::InseparableMap);
    }
    let e_inf = pole_order_at_infinity(f)
        .ok_or_else(|| Error::PreconditionViolated("the map must send infinity to infinity".into()))?;
    if e_inf >= p {
        return Err(Error::PreconditionViolated(format!("index {e_inf} at infinity is not below p = {p}")));
    }
    let before = ramification_profile(f)?;
    let before_finite = finite_points(&before);
    if let Some(r) = before_finite.iter().find(|r| r.e >= p) {
        return Err(Error::PreconditionViolated(format!("index {} at {} is not below p = {p}", r.e, r.point.render())));
    }
    let g = f.add_poly(&Poly::monomial(field, c, p))?;
    let after = ramification_profile(&g)?;
    let expected_degree = f.degree() + p - e_inf;
    if g.degree() != expected_degree {
        return Err(Error::ConditionViolated(format!("lift has degree {}, expected {expected_degree}", g.degree())));
    }
    if after.at_infinity().map(|r| r.e) != Some(p) {
        return Err(Error::ConditionViolated("lift is not wildly ramified of index p at infinity".into()));
    }
    if finite_points(&after) != before_finite {
        return Err(Error::ConditionViolated("lift changed the finite ramification".into()));
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionStep {
    /// Subtract a polynomial in `x^p` (constants included).
    SubtractInseparable(Poly),
    /// Replace `f` by `1/f`.
    InvertTarget,
}

impl ReductionStep {
    pub fn apply(&self, f: &RatMap) -> Result<RatMap> {
        match self {
            ReductionStep::SubtractInseparable(q) => f.add_poly(&-q),
            ReductionStep::InvertTarget => Ok(f.invert_target()),
        }
    }

    /// Inverse of [`ReductionStep::apply`].
    pub fn undo(&self, f: &RatMap) -> Result<RatMap> {
        match self {
            ReductionStep::SubtractInseparable(q) => f.add_poly(q),
            ReductionStep::InvertTarget => Ok(f.invert_target()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTranscript {
    pub initial: RatMap,
    pub steps: Vec<ReductionStep>,
    pub result: RatMap,
}

impl ReductionTranscript {
    /// Applies the steps to the initial map.
    pub fn replay(&self) -> Result<RatMap> {
        self.steps.iter().try_fold(self.initial.clone(), |f, s| s.apply(&f))
    }

    /// Undoes the steps, starting from `tame` instead of the recorded result.
    pub fn unwind(&self, tame: &RatMap) -> Result<RatMap> {
        self.steps.iter().rev().try_fold(tame.clone(), |f, s| s.undo(&f))
    }
}

fn infinity_is_tame(f: &RatMap) -> Result<bool> {
    let p = f.field().characteristic() as usize;
    let e = crate::ramify::local_data(f, &ClosedPoint::Infinity)?.0;
    Ok(e % p != 0)
}

/// Splits a polynomial into the monomials with exponent divisible by `p`
/// and the rest.
fn split_inseparable(q: &Poly) -> (Poly, Poly) {
    let field = q.field();
    let p = field.characteristic() as usize;
    let mut ins = vec![Fe::ZERO; q.coeffs().len()];
    let mut sep = ins.clone();
    for (i, &c) in q.coeffs().iter().enumerate() {
        if i % p == 0 {
            ins[i] = c;
        } else {
            sep[i] = c;
        }
    }
    (Poly::new(field, ins), Poly::new(field, sep))
}

/// Strips wild ramification at infinity by subtracting inseparable
/// polynomials and inverting the target when only a proper fraction
/// remains. The result is defined only up to target automorphisms; the
/// transcript records which representative was chosen.
pub fn reduce_wild_to_tame(f: &RatMap) -> Result<(RatMap, ReductionTranscript)> {
    if !f.is_separable() {
        return Err(Error::InseparableMap);
    }
    if pole_order_at_infinity(f).is_none() {
        return Err(Error::PreconditionViolated("the map must send infinity to infinity".into()));
    }
    let profile = ramification_profile(f)?;
    if let Some(r) = finite_points(&profile).iter().find(|r| r.wild) {
        return Err(Error::PreconditionViolated(format!("wild ramification at the finite point {}", r.point.render())));
    }
    let mut cur = f.clone();
    let mut steps = Vec::new();
    while !infinity_is_tame(&cur)? {
        let start_degree = cur.degree();
        let (q, _) = cur.polynomial_part();
        let (ins, sep) = split_inseparable(&q);
        if ins.is_zero() {
            return Err(Error::Internal("wild pole at infinity without an inseparable term".into()));
        }
        let step = ReductionStep::SubtractInseparable(ins);
        cur = step.apply(&cur).map_err(|_| Error::Internal("reduction reached a constant map".into()))?;
        steps.push(step);
        if !infinity_is_tame(&cur)? && sep.is_zero() {
            cur = ReductionStep::InvertTarget.apply(&cur)?;
            steps.push(ReductionStep::InvertTarget);
        }
        // Every round starts with a pole at infinity whose order is
        // divisible by p, so the leading term is removed.
        assert!(cur.degree() < start_degree, "reduction round did not lower the degree");
    }
    let transcript = ReductionTranscript { initial: f.clone(), steps, result: cur.clone() };
    Ok((cur, transcript))
}

/// The degree-`p` polynomial with derivative `c·Π(x − P_i)^{e_i − 1}` and
/// leading term `c_p·x^p`: ramified of index `p` at infinity, exactly `e_i`
/// at each `P_i`, and nowhere else.
pub fn construct_wild_polynomial(field: &Field, conds: &[(Fe, usize)], c: Fe, c_p: Fe) -> Result<RatMap> {
    let p = field.characteristic() as usize;
    if c.is_zero() || c_p.is_zero() {
        return Err(Error::InvalidArgument("scale factors must be nonzero".into()));
    }
    for (i, &(pt, e)) in conds.iter().enumerate() {
        if e == 0 || e >= p {
            return Err(Error::PreconditionViolated(format!("index {e} must satisfy 1 <= e < p = {p}")));
        }
        if conds[..i].iter().any(|&(q, _)| q == pt) {
            return Err(Error::InvalidArgument("condition points must be distinct".into()));
        }
    }
    let excess: usize = conds.iter().map(|&(_, e)| e - 1).sum();
    if excess + 2 > p {
        return Err(Error::TooMuchRamification(format!("sum of (e_i - 1) is {excess}, above p - 2 = {}", p as i64 - 2)));
    }
    let mut deriv = Poly::constant(field, c);
    for &(pt, e) in conds {
        deriv = &deriv * &Poly::linear(field, pt).pow((e - 1) as u64);
    }
    let mut coeffs = vec![Fe::ZERO; p + 1];
    for (k, &a) in deriv.coeffs().iter().enumerate() {
        coeffs[k + 1] = field.div(a, field.from_u64(k as u64 + 1))?;
    }
    coeffs[p] = c_p;
    RatMap::from_poly(&Poly::new(field, coeffs))
}

/// `(x^{2p} + t₁x^{p+1} + t₂)/(x^p + t₁x)`.
pub fn example_family_member(field: &Field, t1: Fe, t2: Fe) -> (Poly, Poly) {
    let p = field.characteristic() as usize;
    let mut num = vec![Fe::ZERO; 2 * p + 1];
    num[2 * p] = Fe::ONE;
    num[p + 1] = t1;
    num[0] = t2;
    let mut den = vec![Fe::ZERO; p + 1];
    den[p] = Fe::ONE;
    den[1] = t1;
    (Poly::new(field, num), Poly::new(field, den))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SampleVerdict {
    Pass,
    /// Numerator and denominator share a factor for these parameters.
    Degenerate(String),
    Fail(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySample {
    pub t1: Fe,
    pub t2: Fe,
    pub map: String,
    pub verdict: SampleVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub p: u32,
    pub samples: Vec<FamilySample>,
}

impl FamilyReport {
    pub fn all_pass(&self) -> bool {
        self.samples.iter().all(|s| !matches!(s.verdict, SampleVerdict::Fail(_)))
    }

    pub fn degenerate_count(&self) -> usize {
        self.samples.iter().filter(|s| matches!(s.verdict, SampleVerdict::Degenerate(_))).count()
    }
}

fn check_family_member(field: &Field, t1: Fe, t2: Fe) -> FamilySample {
    let p = field.characteristic() as usize;
    let (num, den) = example_family_member(field, t1, t2);
    let raw = format!("({})/({})", num.render(), den.render());
    let sample = |map: String, verdict| FamilySample { t1, t2, map, verdict };
    if num.gcd(&den).deg0() > 0 {
        return sample(raw, SampleVerdict::Degenerate("numerator and denominator are not coprime".into()));
    }
    let f = match reduce_map(&num, &den) {
        Ok(f) => f,
        Err(e) => return sample(raw, SampleVerdict::Fail(e.to_string())),
    };
    let map = f.render();
    if f.degree() != 2 * p {
        return sample(map, SampleVerdict::Fail(format!("degree {} instead of {}", f.degree(), 2 * p)));
    }
    if !f.is_separable() {
        return sample(map, SampleVerdict::Fail("inseparable".into()));
    }
    let profile = match ramification_profile(&f) {
        Ok(pr) => pr,
        Err(e) => return sample(map, SampleVerdict::Fail(e.to_string())),
    };
    let summary: Vec<String> =
        profile.points.iter().map(|r| format!("{}: e={} d={}", r.point.render(), r.e, r.different)).collect();
    let ok = profile.points.len() == 1
        && profile.points[0].point == ClosedPoint::Infinity
        && profile.points[0].e == p
        && profile.points[0].different == 4 * p - 2;
    if ok {
        sample(map, SampleVerdict::Pass)
    } else {
        sample(map, SampleVerdict::Fail(format!("profile {{{}}}", summary.join(", "))))
    }
}

/// Checks each sampled member of the two-parameter family for degree `2p`,
/// separability and ramification only at infinity, of index `p`. Samples
/// are reported in input order.
pub fn verify_example_family(field: &Field, samples: &[(Fe, Fe)], workers: usize) -> Result<FamilyReport> {
    if let Some(&(t1, t2)) = samples.iter().find(|(a, b)| a.is_zero() || b.is_zero()) {
        return Err(Error::InvalidArgument(format!(
            "family parameters must be nonzero, got ({}, {})",
            field.format(t1),
            field.format(t2)
        )));
    }
    let workers = workers.clamp(1, samples.len().max(1));
    let chunk = samples.len().div_ceil(workers).max(1);
    let results: Vec<FamilySample> = thread::scope(|s| {
        let handles: Vec<_> = samples
            .chunks(chunk)
            .map(|part| s.spawn(move || part.iter().map(|&(a, b)| check_family_member(field, a, b)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    Ok(FamilyReport { p: field.characteristic(), samples: results })
}

/// All pairs of nonzero elements, in index order.
pub fn nonzero_pairs(field: &Field) -> Vec<(Fe, Fe)> {
    let nz: Vec<Fe> = field.elements().skip(1).collect();
    nz.iter().flat_map(|&a| nz.iter().map(move |&b| (a, b))).collect()
}

/// The two degree-15 maps over `F_5` with wild ramification at infinity and
/// the tame maps the reduction produces from them.
pub const REDUCTION_EXAMPLES: [(&str, &str); 2] = [
    ("(x^5*(x^10+x^7-2*x)+1)/(x^10+x^7-2*x)", "x^7-2*x"),
    (
        "(x^5*(x^5*(x^5+x^4-x^3+2*x)+x^2+2*x+1)+x^5+x^4-x^3+2*x)/(x^5*(x^5+x^4-x^3+2*x)+x^2+2*x+1)",
        "(x^2+2*x+1)/(x^5+x^4-x^3+2*x)",
    ),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    /// Samples left out of the verdict, with the reason.
    pub skipped: Vec<String>,
}

fn check(name: &str, result: Result<String>) -> GoldenCheck {
    match result {
        Ok(detail) => GoldenCheck { name: name.into(), passed: true, detail, skipped: Vec::new() },
        Err(e) => GoldenCheck { name: name.into(), passed: false, detail: e.to_string(), skipped: Vec::new() },
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ConditionViolated(msg()))
    }
}

/// Degree 15, index 5 at infinity and simple ramification exactly at the
/// sixth roots of unity, i.e. the factors of `x^6 − 1` over `F_5`.
pub fn check_reduction_input(f: &RatMap) -> Result<String> {
    let field = f.field();
    ensure(f.degree() == 15, || format!("degree {}", f.degree()))?;
    let profile = ramification_profile(f)?;
    let inf = profile.at_infinity().map(|r| r.e);
    ensure(inf == Some(5), || format!("index {inf:?} at infinity"))?;
    let finite = finite_points(&profile);
    let roots = crate::poly::distinct_irreducible_factors(&Poly::from_ints(field, &[-1, 0, 0, 0, 0, 0, 1]));
    let got: Vec<Poly> = finite
        .iter()
        .map(|r| match &r.point {
            ClosedPoint::Finite(phi) => phi.clone(),
            ClosedPoint::Infinity => unreachable!(),
        })
        .collect();
    ensure(got == roots, || "finite ramification is not at the sixth roots of unity".into())?;
    ensure(finite.iter().all(|r| r.e == 2 && r.different == 1), || "finite ramification is not simple".into())?;
    Ok(format!("degree 15, e_inf = 5, d_inf = {}, simple at x^6 = 1", profile.at_infinity().unwrap().different))
}

fn golden_reduction(index: usize) -> Result<String> {
    let f5 = Field::prime(5)?;
    let (input, expected) = REDUCTION_EXAMPLES[index];
    let f = parse_map(input, &f5)?;
    let info = check_reduction_input(&f)?;
    let (tame, transcript) = reduce_wild_to_tame(&f)?;
    ensure(tame.render() == expected, || format!("reduced to {}, expected {expected}", tame.render()))?;
    ensure(transcript.replay()? == tame, || "transcript replay differs".into())?;
    ensure(transcript.unwind(&tame)? == f, || "unwinding the transcript does not recover the input".into())?;
    Ok(format!("{info}; reduces to {expected} in {} steps", transcript.steps.len()))
}

/// `x^5 + t·x^3 + x` over `F_3`: every member has the same ramification
/// divisor, index 2 at the fourth roots of unity and 5 at infinity.
pub fn check_special_family() -> Result<String> {
    let f3 = Field::prime(3)?;
    let mut profiles = Vec::new();
    for t in 0..3 {
        let f = parse_map(&format!("x^5+{t}*x^3+x"), &f3)?;
        let pr = ramification_profile(&f)?;
        let pts: Vec<(String, usize)> = pr.points.iter().map(|r| (r.point.render(), r.e)).collect();
        profiles.push(pts);
    }
    let expected: Vec<(String, usize)> =
        vec![("2".into(), 2), ("1".into(), 2), ("x^2+1=0".into(), 2), ("inf".into(), 5)];
    for (t, pr) in profiles.iter().enumerate() {
        ensure(pr == &expected, || format!("t = {t}: profile {pr:?}"))?;
    }
    Ok("identical divisor {1, -1, x^2+1=0 (e=2), inf (e=5)} for t = 0, 1, 2".into())
}

/// Constructor checks: every admissible condition set at rational points
/// with `Σ(e_i − 1) ≤ p − 2` (points taken as `1, 2, ...`) gives the exact
/// profile.
pub fn check_constructor(p: u64) -> Result<String> {
    let field = Field::prime(p)?;
    let sets = admissible_index_sets(p as usize);
    for es in &sets {
        let conds: Vec<(Fe, usize)> = es.iter().enumerate().map(|(i, &e)| (field.from_u64(i as u64 + 1), e)).collect();
        let f = construct_wild_polynomial(&field, &conds, Fe::ONE, Fe::ONE)?;
        verify_constructed(&f, &conds)?;
    }
    Ok(format!("{} condition sets", sets.len()))
}

/// Nonincreasing lists of indices in `2..p` with `Σ(e_i − 1) ≤ p − 2`,
/// starting with the empty list.
pub fn admissible_index_sets(p: usize) -> Vec<Vec<usize>> {
    fn rec(max: usize, budget: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for e in (2..=max).rev() {
            if e - 1 <= budget {
                cur.push(e);
                rec(e, budget - (e - 1), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if p >= 2 {
        rec(p - 1, p - 2, &mut Vec::new(), &mut out);
    }
    out.sort_by_key(|s| (s.len(), s.clone()));
    out
}

/// Profile of a constructed polynomial is exactly `{∞: p, P_i: e_i}`.
pub fn verify_constructed(f: &RatMap, conds: &[(Fe, usize)]) -> Result<()> {
    let field = f.field();
    let p = field.characteristic() as usize;
    let profile = ramification_profile(f)?;
    ensure(f.degree() == p, || format!("degree {}", f.degree()))?;
    ensure(profile.at_infinity().map(|r| r.e) == Some(p), || "index at infinity is not p".into())?;
    let mut expected: Vec<(Poly, usize)> =
        conds.iter().filter(|c| c.1 >= 2).map(|&(pt, e)| (Poly::linear(field, pt), e)).collect();
    expected.sort_by_key(|(phi, _)| phi.coeffs().iter().map(|&c| field.index(c)).collect::<Vec<_>>());
    let got: Vec<(Poly, usize)> = finite_points(&profile)
        .into_iter()
        .map(|r| match r.point {
            ClosedPoint::Finite(phi) => (phi, r.e),
            ClosedPoint::Infinity => unreachable!(),
        })
        .collect();
    ensure(got == expected, || format!("finite profile of {} differs from the conditions", f.render()))
}

/// The worked-example verification suite for characteristic `p`: both
/// reductions over `F_5`, the two-parameter family over `F_p`, the special
/// family over `F_3` and the constructor over `F_p`.
pub fn golden_suite(p: u64, workers: usize) -> Vec<GoldenCheck> {
    let mut out = vec![
        check("reduction of the first degree-15 map", golden_reduction(0)),
        check("reduction of the second degree-15 map", golden_reduction(1)),
    ];
    let family = Field::prime(p).and_then(|f| verify_example_family(&f, &nonzero_pairs(&f), workers));
    let skipped: Vec<String> = family
        .iter()
        .flat_map(|r| &r.samples)
        .filter_map(|s| match &s.verdict {
            SampleVerdict::Degenerate(why) => Some(format!("{}: {why}", s.map)),
            _ => None,
        })
        .collect();
    let mut fam = check(
        "two-parameter family ramified only at infinity",
        family.and_then(|r| {
            let fails: Vec<String> = r
                .samples
                .iter()
                .filter_map(|s| match &s.verdict {
                    SampleVerdict::Fail(why) => Some(format!("{}: {why}", s.map)),
                    _ => None,
                })
                .collect();
            ensure(fails.is_empty(), || fails.join("; "))?;
            Ok(format!("{} samples, {} degenerate", r.samples.len(), r.degenerate_count()))
        }),
    );
    fam.skipped = skipped;
    out.push(fam);
    out.push(check("x^5+t*x^3+x has a fixed ramification divisor", check_special_family()));
    out.push(check("degree-p constructor", check_constructor(p)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn lift_square() {
        let f = f5();
        let g = lift_tame_to_wild(&parse_map("x^2", &f).unwrap(), Fe::ONE).unwrap();
        assert_eq!(g.render(), "x^5+x^2");
        assert_eq!(g.degree(), 5);
    }

    #[test]
    fn lift_rejects_wild_or_large_indices() {
        let f = f5();
        let m = parse_map("x^7-2*x", &f).unwrap();
        assert!(matches!(lift_tame_to_wild(&m, Fe::ONE), Err(Error::PreconditionViolated(_))));
        let m = parse_map("1/x", &f).unwrap();
        assert!(matches!(lift_tame_to_wild(&m, Fe::ONE), Err(Error::PreconditionViolated(_))));
        let m = parse_map("x^6+x^2", &f).unwrap();
        assert!(matches!(lift_tame_to_wild(&m, Fe::ONE), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn reductions() {
        for i in 0..2 {
            let r = golden_reduction(i);
            assert!(r.is_ok(), "{r:?}");
        }
        let f = parse_map("x^3", &f5()).unwrap();
        let (g, t) = reduce_wild_to_tame(&f).unwrap();
        assert_eq!(g, f);
        assert!(t.steps.is_empty());
    }

    #[test]
    fn constructor_examples() {
        let f = f5();
        let m = construct_wild_polynomial(&f, &[(Fe::ONE, 2)], Fe::ONE, Fe::ONE).unwrap();
        assert_eq!(m.render(), "x^5-2*x^2-x");
        let f3 = Field::prime(3).unwrap();
        assert_eq!(construct_wild_polynomial(&f3, &[], Fe::ONE, Fe::ONE).unwrap().render(), "x^3+x");
        let two = f3.from_int(1);
        assert!(matches!(
            construct_wild_polynomial(&f3, &[(Fe::ZERO, 2), (two, 2)], Fe::ONE, Fe::ONE),
            Err(Error::TooMuchRamification(_))
        ));
        assert_eq!(admissible_index_sets(5).len(), 7);
    }

    #[test]
    fn suite_passes() {
        for p in [2, 3, 5] {
            for c in golden_suite(p, 2) {
                assert!(c.passed, "p = {p}: {} failed: {}", c.name, c.detail);
            }
        }
    }
}
