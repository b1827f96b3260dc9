//! Truncated power series and local expansions of rational maps, generic
//! over [`FieldOps`] so the same code runs over residue fields of closed
//! points.

use crate::field::{Fe, FieldOps};

/// A point of the projective line over some field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Place<E> {
    Finite(E),
    Infinity,
}

/// Coefficients `a_0..=a_order` of a truncated power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSeries<E = Fe> {
    pub coeffs: Vec<E>,
    pub order: usize,
}

impl<E: Clone + PartialEq + std::fmt::Debug> LocalSeries<E> {
    /// Smallest `j >= 1` with `a_j != 0`, if visible at this truncation.
    pub fn valuation<F: FieldOps<Elem = E>>(&self, f: &F) -> Option<usize> {
        (1..=self.order).find(|&j| !f.is_zero(&self.coeffs[j]))
    }

    /// Smallest `j >= 1` with `a_j != 0` and `p ∤ j`.
    pub fn first_unit_exponent<F: FieldOps<Elem = E>>(&self, f: &F) -> Option<usize> {
        let p = f.characteristic() as usize;
        (1..=self.order).find(|&j| j % p != 0 && !f.is_zero(&self.coeffs[j]))
    }
}

/// Coefficients of `c(x + a)`.
pub fn shift_slice<F: FieldOps>(f: &F, c: &[F::Elem], a: &F::Elem) -> Vec<F::Elem> {
    let mut res: Vec<F::Elem> = Vec::with_capacity(c.len());
    for ci in c.iter().rev() {
        // res <- res * (x + a) + ci
        res.push(f.zero());
        for j in (1..res.len()).rev() {
            let t = f.mul(a, &res[j]);
            res[j] = f.add(&res[j - 1], &t);
        }
        res[0] = f.add(&f.mul(a, &res[0]), ci);
    }
    res
}

/// Coefficients of `x^n c(1/x)`.
pub fn reverse_slice<E: Clone>(zero: E, c: &[E], n: usize) -> Vec<E> {
    let mut v = vec![zero; n + 1];
    for (i, ci) in c.iter().enumerate() {
        v[n - i] = ci.clone();
    }
    v
}

/// Power series `num / den` up to and including `s^order`; `None` when the
/// constant term of `den` vanishes.
pub fn series_div<F: FieldOps>(f: &F, num: &[F::Elem], den: &[F::Elem], order: usize) -> Option<Vec<F::Elem>> {
    let zero = f.zero();
    let d0 = den.first().unwrap_or(&zero);
    let inv = f.inv(d0)?;
    let mut out: Vec<F::Elem> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = num.get(n).cloned().unwrap_or_else(|| f.zero());
        for j in 1..=n.min(den.len().saturating_sub(1)) {
            acc = f.sub(&acc, &f.mul(&den[j], &out[n - j]));
        }
        out.push(f.mul(&acc, &inv));
    }
    Some(out)
}

/// Expansion of the map `num/den` (of the given degree) around `place`.
///
/// The source coordinate is `s = x - a` at a finite point and `s = 1/x` at
/// infinity. The target coordinate is `t = y - f(P)` when the value is
/// finite and `t = 1/y` at a pole. Returns the value `f(P)` together with
/// the series of `t` in `s`, whose constant term is always zero.
pub fn local_expansion<F: FieldOps>(
    f: &F,
    num: &[F::Elem],
    den: &[F::Elem],
    degree: usize,
    place: &Place<F::Elem>,
    order: usize,
) -> (Place<F::Elem>, LocalSeries<F::Elem>) {
    let (ns, ds) = match place {
        Place::Finite(a) => (shift_slice(f, num, a), shift_slice(f, den, a)),
        Place::Infinity => (reverse_slice(f.zero(), num, degree), reverse_slice(f.zero(), den, degree)),
    };
    let zero = f.zero();
    let d0 = ds.first().unwrap_or(&zero);
    if !f.is_zero(d0) {
        let n0 = ns.first().cloned().unwrap_or_else(|| f.zero());
        let c = f.mul(&n0, &f.inv(d0).expect("nonzero"));
        let mut s = series_div(f, &ns, &ds, order).expect("unit denominator");
        s[0] = f.zero();
        (Place::Finite(c), LocalSeries { coeffs: s, order })
    } else {
        let mut s = series_div(f, &ds, &ns, order).expect("coprime numerator and denominator");
        s[0] = f.zero();
        (Place::Infinity, LocalSeries { coeffs: s, order })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn geometric_series() {
        let f = Field::prime(7).unwrap();
        let one = [Fe::ONE];
        let den = [Fe::ONE, f.neg(Fe::ONE)];
        let s = series_div(&f, &one, &den, 5).unwrap();
        assert!(s.iter().all(|&c| c == Fe::ONE));
    }

    #[test]
    fn inverse_map_at_zero_flips_target() {
        let f = Field::prime(5).unwrap();
        let (v, s) = local_expansion(&f, &[Fe::ONE], &[Fe::ZERO, Fe::ONE], 1, &Place::Finite(Fe::ZERO), 2);
        assert_eq!(v, Place::Infinity);
        assert_eq!(s.coeffs, vec![Fe::ZERO, Fe::ONE, Fe::ZERO]);
    }
}
