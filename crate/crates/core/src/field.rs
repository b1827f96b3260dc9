//! Finite fields `F_p` and `F_{p^k}`.
//!
//! A [`Field`] is an immutable handle that is cheap to clone and safe to share
//! between threads. Elements are plain [`Fe`] values which only make sense
//! together with the field that produced them.
//!
//! Three internal representations are used:
//!
//! * prime fields store residues directly;
//! * extension fields with at most 2^20 elements store Zech logarithms, so
//!   addition and multiplication are both table lookups;
//! * larger extension fields store the power-basis index and multiply by
//!   reducing modulo the defining polynomial.
//!
//! Whatever the representation, [`Field::index`] gives the power-basis
//! encoding `c_0 + c_1 p + ... + c_{k-1} p^{k-1}` of an element, and that
//! encoding defines the canonical ordering of elements.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field the library will construct.
pub const MAX_FIELD_SIZE: u64 = 10_000_000;

const TABLE_LIMIT: u32 = 1 << 20;
const NO_ZECH: u32 = u32::MAX;
const MAX_K: usize = 24;

/// An element of some [`Field`].
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Fe(pub(crate) u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// The raw handle. Raw values of a field with `q` elements are exactly
    /// `0..q`, with 0 the zero element and 1 the unit.
    pub fn raw(self) -> u32 {
        self.0
    }
}

enum Repr {
    Prime,
    Zech {
        exp: Vec<u32>,
        log: Vec<u32>,
        zech: Vec<u32>,
    },
    Slow,
}

struct Inner {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    repr: Repr,
}

/// The finite field `F_p[x]/(modulus)`.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)?;
        if self.0.k > 1 {
            write!(f, " (modulus {:?})", self.0.modulus)?;
        }
        Ok(())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Remainder of `f` modulo the monic `g`, both over `F_p`, low degree first.
fn rem_fp(p: u64, f: &[u32], g: &[u32]) -> Vec<u64> {
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    for i in (dg..r.len()).rev() {
        let c = r[i] % p;
        if c == 0 {
            continue;
        }
        for j in 0..=dg {
            let t = c * g[j] as u64 % p;
            r[i - dg + j] = (r[i - dg + j] + p - t) % p;
        }
    }
    r.truncate(dg);
    r
}

/// Irreducibility over `F_p` of a monic polynomial (low degree first), by
/// trial division against every monic polynomial of degree at most half.
pub fn is_irreducible_fp(p: u32, f: &[u32]) -> bool {
    let k = f.len().saturating_sub(1);
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let pp = p as u64;
    for a in 0..pp {
        let v = f.iter().rev().fold(0u64, |acc, &c| (acc * a + c as u64) % pp);
        if v == 0 {
            return false;
        }
    }
    for deg in 2..=k / 2 {
        let count = pp.pow(deg as u32);
        let mut g = vec![0u32; deg + 1];
        g[deg] = 1;
        for n in 0..count {
            let mut m = n;
            for c in g.iter_mut().take(deg) {
                *c = (m % pp) as u32;
                m /= pp;
            }
            if rem_fp(pp, f, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The smallest monic irreducible polynomial of degree `k` over `F_p`, where
/// candidates are ordered by the integer `sum c_i p^i` of their lower
/// coefficients. For `k = 1` the convention is `x + 1`.
pub fn default_modulus(p: u32, k: u32) -> Vec<u32> {
    if k == 1 {
        return vec![1 % p, 1];
    }
    let pp = p as u64;
    let count = pp.pow(k);
    let mut f = vec![0u32; k as usize + 1];
    f[k as usize] = 1;
    for n in 0..count {
        let mut m = n;
        for c in f.iter_mut().take(k as usize) {
            *c = (m % pp) as u32;
            m /= pp;
        }
        if is_irreducible_fp(p, &f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field {
    /// Builds `F_{p^k}`. Without a modulus the lexicographically smallest
    /// monic irreducible polynomial of degree `k` is used.
    pub fn new(p: u64, k: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if k == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let size = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
        if size > MAX_FIELD_SIZE as u128 {
            return Err(Error::FieldTooLarge { size, cap: MAX_FIELD_SIZE });
        }
        let p32 = p as u32;
        let modulus = match modulus {
            Some(m) => {
                if m.len() != k as usize + 1 {
                    return Err(Error::InvalidField(format!(
                        "modulus must have degree {k}, got {} coefficients",
                        m.len()
                    )));
                }
                let m: Vec<u32> = m.iter().map(|&c| c % p32).collect();
                if m[k as usize] != 1 {
                    return Err(Error::InvalidField("modulus must be monic".into()));
                }
                if !is_irreducible_fp(p32, &m) {
                    return Err(Error::NotIrreducible { p: p32 });
                }
                m
            }
            None => default_modulus(p32, k),
        };
        let q = size as u32;
        let mut inner = Inner { p: p32, k, q, modulus, repr: Repr::Slow };
        inner.repr = if k == 1 {
            Repr::Prime
        } else if q <= TABLE_LIMIT {
            build_zech(&inner)
        } else {
            Repr::Slow
        };
        Ok(Field(Arc::new(inner)))
    }

    /// Shorthand for the prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn size(&self) -> u32 {
        self.0.q
    }

    /// Defining polynomial over `F_p`, lowest coefficient first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn same_as(&self, other: &Field) -> bool {
        self == other
    }

    // ---- power-basis index arithmetic (used by table construction and by
    // the slow representation) ----

    fn digits(&self, mut idx: u32, out: &mut [u32; MAX_K]) {
        let p = self.0.p;
        for d in out.iter_mut().take(self.0.k as usize) {
            *d = idx % p;
            idx /= p;
        }
    }

    fn undigits(&self, d: &[u32]) -> u32 {
        let p = self.0.p;
        d.iter().take(self.0.k as usize).rev().fold(0u32, |acc, &c| acc * p + c)
    }

    fn idx_add(&self, a: u32, b: u32) -> u32 {
        idx_add(&self.0, a, b)
    }

    fn idx_neg(&self, a: u32) -> u32 {
        let p = self.0.p;
        let mut da = [0u32; MAX_K];
        self.digits(a, &mut da);
        for d in da.iter_mut().take(self.0.k as usize) {
            *d = (p - *d) % p;
        }
        self.undigits(&da)
    }

    fn idx_mul(&self, a: u32, b: u32) -> u32 {
        idx_mul(&self.0, a, b)
    }

    fn idx_pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.idx_mul(acc, base);
            }
            base = self.idx_mul(base, base);
            e >>= 1;
        }
        acc
    }

    // ---- element API ----

    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    pub fn one(&self) -> Fe {
        Fe::ONE
    }

    /// Element with the given power-basis index.
    pub fn from_index(&self, idx: u32) -> Fe {
        debug_assert!(idx < self.0.q);
        match &self.0.repr {
            Repr::Prime | Repr::Slow => Fe(idx),
            Repr::Zech { log, .. } => {
                if idx == 0 {
                    Fe(0)
                } else {
                    Fe(log[idx as usize] + 1)
                }
            }
        }
    }

    /// Power-basis index of an element; the canonical ordering key.
    pub fn index(&self, a: Fe) -> u32 {
        match &self.0.repr {
            Repr::Prime | Repr::Slow => a.0,
            Repr::Zech { exp, .. } => {
                if a.0 == 0 {
                    0
                } else {
                    exp[a.0 as usize - 1]
                }
            }
        }
    }

    pub fn from_int(&self, n: i64) -> Fe {
        let r = n.rem_euclid(self.0.p as i64) as u32;
        self.from_index(r)
    }

    pub fn from_u64(&self, n: u64) -> Fe {
        self.from_index((n % self.0.p as u64) as u32)
    }

    /// Coefficients of `a` in the power basis `1, g, ..., g^{k-1}`.
    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        let mut d = [0u32; MAX_K];
        self.digits(self.index(a), &mut d);
        d[..self.0.k as usize].to_vec()
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Result<Fe> {
        if c.len() > self.0.k as usize {
            return Err(Error::InvalidArgument(format!(
                "{} coefficients given for a degree-{} field",
                c.len(),
                self.0.k
            )));
        }
        let mut d = [0u32; MAX_K];
        for (i, &x) in c.iter().enumerate() {
            d[i] = x % self.0.p;
        }
        Ok(self.from_index(self.undigits(&d)))
    }

    /// The class of `x` modulo the defining polynomial (for `k = 1`, the root
    /// of the linear modulus).
    pub fn generator(&self) -> Fe {
        if self.0.k == 1 {
            self.from_int(-(self.0.modulus[0] as i64))
        } else {
            self.from_index(self.0.p)
        }
    }

    /// All elements in canonical (index) order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.0.q).map(move |i| self.from_index(i))
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        match &self.0.repr {
            Repr::Prime => {
                let s = a.0 + b.0;
                if s >= self.0.p {
                    Fe(s - self.0.p)
                } else {
                    Fe(s)
                }
            }
            Repr::Zech { zech, .. } => {
                if a.0 == 0 {
                    return b;
                }
                if b.0 == 0 {
                    return a;
                }
                let n = self.0.q - 1;
                let (la, lb) = (a.0 - 1, b.0 - 1);
                let diff = if lb >= la { lb - la } else { lb + n - la };
                let z = zech[diff as usize];
                if z == NO_ZECH {
                    Fe(0)
                } else {
                    let s = la + z;
                    Fe(if s >= n { s - n } else { s } + 1)
                }
            }
            Repr::Slow => Fe(self.idx_add(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        if a.0 == 0 {
            return a;
        }
        match &self.0.repr {
            Repr::Prime => Fe(self.0.p - a.0),
            Repr::Zech { .. } => {
                if self.0.p == 2 {
                    return a;
                }
                let n = self.0.q - 1;
                let s = a.0 - 1 + n / 2;
                Fe(if s >= n { s - n } else { s } + 1)
            }
            Repr::Slow => Fe(self.idx_neg(a.0)),
        }
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe(0);
        }
        match &self.0.repr {
            Repr::Prime => Fe((a.0 as u64 * b.0 as u64 % self.0.p as u64) as u32),
            Repr::Zech { .. } => {
                let n = self.0.q - 1;
                let s = (a.0 - 1) + (b.0 - 1);
                Fe(if s >= n { s - n } else { s } + 1)
            }
            Repr::Slow => Fe(self.idx_mul(a.0, b.0)),
        }
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0.repr {
            Repr::Prime => self.pow(a, self.0.p as u64 - 2),
            Repr::Zech { .. } => {
                let n = self.0.q - 1;
                Fe((n - (a.0 - 1)) % n + 1)
            }
            Repr::Slow => Fe(self.idx_pow(a.0, self.0.q as u64 - 2)),
        })
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^p`.
    pub fn frobenius(&self, a: Fe) -> Fe {
        self.pow(a, self.0.p as u64)
    }

    /// `n · a` for an integer `n`.
    pub fn mul_int(&self, a: Fe, n: i64) -> Fe {
        self.mul(a, self.from_int(n))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Fe) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let mut ord = self.0.q as u64 - 1;
        for r in prime_factors(ord) {
            while ord % r == 0 && self.pow(a, ord / r) == Fe::ONE {
                ord /= r;
            }
        }
        Some(ord)
    }

    /// Smallest (by index) generator of the multiplicative group.
    pub fn primitive_element(&self) -> Fe {
        let n = self.0.q as u64 - 1;
        self.elements()
            .skip(1)
            .find(|&a| self.order(a) == Some(n))
            .expect("multiplicative group is cyclic")
    }

    /// Human-readable form that the expression parser accepts back.
    pub fn format(&self, a: Fe) -> String {
        let c = self.coeffs(a);
        if self.0.k == 1 {
            return c[0].to_string();
        }
        let mut terms = Vec::new();
        for (i, &ci) in c.iter().enumerate().rev() {
            if ci == 0 {
                continue;
            }
            let g = match i {
                0 => String::new(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            };
            terms.push(match (ci, i) {
                (_, 0) => ci.to_string(),
                (1, _) => g,
                _ => format!("{ci}*{g}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// Builds `F_{q^m}` (with its default modulus) and the embedding of this
    /// field into it.
    pub fn extension(&self, m: u32) -> Result<(Field, Embedding)> {
        if m == 1 {
            return Ok((self.clone(), Embedding::identity(self)));
        }
        let big = Field::new(self.0.p as u64, self.0.k * m, None)?;
        let emb = self.embedding_into(&big)?;
        Ok((big, emb))
    }

    /// An embedding of this field into `big`, sending the generator to the
    /// smallest root of the modulus in `big`.
    pub fn embedding_into(&self, big: &Field) -> Result<Embedding> {
        if big.0.p != self.0.p || big.0.k % self.0.k != 0 {
            return Err(Error::FieldMismatch);
        }
        if big == self {
            return Ok(Embedding::identity(self));
        }
        let mut table = vec![Fe::ZERO; self.0.q as usize];
        if self.0.k == 1 {
            for (r, slot) in table.iter_mut().enumerate() {
                *slot = big.from_index(r as u32);
            }
            return Ok(Embedding { table });
        }
        let modulus: Vec<Fe> = self.0.modulus.iter().map(|&c| big.from_index(c)).collect();
        let root = big
            .elements()
            .find(|&z| modulus.iter().rev().fold(Fe::ZERO, |acc, &c| big.add(big.mul(acc, z), c)).is_zero())
            .ok_or(Error::FieldMismatch)?;
        let mut powers = Vec::with_capacity(self.0.k as usize);
        let mut acc = Fe::ONE;
        for _ in 0..self.0.k {
            powers.push(acc);
            acc = big.mul(acc, root);
        }
        for (r, slot) in table.iter_mut().enumerate() {
            let c = self.coeffs(Fe(r as u32));
            *slot = c.iter().zip(&powers).fold(Fe::ZERO, |s, (&ci, &pw)| {
                big.add(s, big.mul(big.from_index(ci), pw))
            });
        }
        Ok(Embedding { table })
    }
}

fn idx_add(f: &Inner, a: u32, b: u32) -> u32 {
    let p = f.p;
    let (mut a, mut b) = (a, b);
    let mut out = 0u32;
    let mut scale = 1u32;
    for _ in 0..f.k {
        let s = (a % p + b % p) % p;
        out += s * scale;
        a /= p;
        b /= p;
        scale = scale.wrapping_mul(p);
    }
    out
}

fn idx_mul(f: &Inner, a: u32, b: u32) -> u32 {
    let p = f.p as u64;
    let k = f.k as usize;
    let mut da = [0u64; MAX_K];
    let mut db = [0u64; MAX_K];
    let (mut x, mut y) = (a, b);
    for i in 0..k {
        da[i] = (x % f.p) as u64;
        db[i] = (y % f.p) as u64;
        x /= f.p;
        y /= f.p;
    }
    let mut prod = [0u64; 2 * MAX_K];
    for i in 0..k {
        if da[i] == 0 {
            continue;
        }
        for j in 0..k {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    for i in (k..2 * k - 1).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for j in 0..k {
            let t = c * f.modulus[j] as u64 % p;
            prod[i - k + j] = (prod[i - k + j] + p - t) % p;
        }
    }
    prod[..k].iter().rev().fold(0u32, |acc, &c| acc * f.p + c as u32)
}

fn build_zech(inner: &Inner) -> Repr {
    let q = inner.q;
    let n = (q - 1) as u64;
    let pow = |a: u32, mut e: u64| {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = idx_mul(inner, acc, base);
            }
            base = idx_mul(inner, base, base);
            e >>= 1;
        }
        acc
    };
    let factors = prime_factors(n);
    let g = (1..q)
        .find(|&c| factors.iter().all(|&r| pow(c, n / r) != 1))
        .expect("multiplicative group is cyclic");
    let mut exp = vec![0u32; n as usize];
    let mut log = vec![0u32; q as usize];
    let mut acc = 1u32;
    for (i, slot) in exp.iter_mut().enumerate() {
        *slot = acc;
        log[acc as usize] = i as u32;
        acc = idx_mul(inner, acc, g);
    }
    let zech = exp
        .iter()
        .map(|&e| {
            let s = idx_add(inner, e, 1);
            if s == 0 {
                NO_ZECH
            } else {
                log[s as usize]
            }
        })
        .collect();
    Repr::Zech { exp, log, zech }
}

/// A field embedding `F_q -> F_{q^m}`, stored as a lookup table.
#[derive(Clone, Debug)]
pub struct Embedding {
    table: Vec<Fe>,
}

impl Embedding {
    pub fn identity(field: &Field) -> Embedding {
        Embedding { table: (0..field.size()).map(Fe).collect() }
    }

    #[inline]
    pub fn apply(&self, a: Fe) -> Fe {
        self.table[a.0 as usize]
    }
}

/// Field operations shared by [`Field`] and the residue fields used for
/// local computations at closed points.
pub trait FieldOps {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn characteristic(&self) -> u32;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }
}

impl FieldOps for Field {
    type Elem = Fe;

    fn characteristic(&self) -> u32 {
        self.0.p
    }
    fn zero(&self) -> Fe {
        Fe::ZERO
    }
    fn one(&self) -> Fe {
        Fe::ONE
    }
    fn from_int(&self, n: i64) -> Fe {
        Field::from_int(self, n)
    }
    fn is_zero(&self, a: &Fe) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Fe, b: &Fe) -> Fe {
        Field::add(self, *a, *b)
    }
    fn sub(&self, a: &Fe, b: &Fe) -> Fe {
        Field::sub(self, *a, *b)
    }
    fn mul(&self, a: &Fe, b: &Fe) -> Fe {
        Field::mul(self, *a, *b)
    }
    fn inv(&self, a: &Fe) -> Option<Fe> {
        Field::inv(self, *a).ok()
    }
    fn neg(&self, a: &Fe) -> Fe {
        Field::neg(self, *a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_field_uses_x_plus_one() {
        let f = Field::new(2, 1, None).unwrap();
        assert_eq!(f.modulus(), &[1, 1]);
        assert_eq!(f.size(), 2);
    }

    #[test]
    fn f25_modulus_is_smallest_irreducible() {
        // Oracle: a monic quadratic is irreducible over F_5 iff it has no
        // root; scan all 25 candidates in index order.
        let mut expected = None;
        'outer: for n in 0..25u32 {
            let (c0, c1) = (n % 5, n / 5);
            for a in 0..5u32 {
                if (a * a + c1 * a + c0) % 5 == 0 {
                    continue 'outer;
                }
            }
            expected = Some(vec![c0, c1, 1]);
            break;
        }
        let f = Field::new(5, 2, None).unwrap();
        assert_eq!(Some(f.modulus().to_vec()), expected);
        assert_eq!(f.modulus(), &[2, 0, 1]);
    }

    #[test]
    fn rejects_composite_and_reducible() {
        assert_eq!(Field::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::new(5, 2, Some(&[1, 0, 1])).unwrap_err(), Error::NotIrreducible { p: 5 });
        assert!(matches!(Field::new(2, 30, None), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn inversion_examples() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.inv(Fe::ONE).unwrap(), Fe::ONE);
        assert_eq!(f.inv(f.from_int(2)).unwrap(), f.from_int(3));
        assert_eq!(f.inv(Fe::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn frobenius_in_f9() {
        let f = Field::new(3, 2, None).unwrap();
        let g = f.primitive_element();
        assert_eq!(f.order(g), Some(8));
        let mut cube = Fe::ONE;
        for _ in 0..3 {
            cube = f.mul(cube, g);
        }
        assert_eq!(f.frobenius(g), cube);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let a = f.from_index(rng.gen_range(0..9));
            let b = f.from_index(rng.gen_range(0..9));
            assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
        }
        for a in Field::prime(7).unwrap().elements() {
            assert_eq!(Field::prime(7).unwrap().frobenius(a), a);
        }
    }

    #[test]
    fn representations_agree_with_index_arithmetic() {
        for (p, k) in [(2u64, 3u32), (3, 2), (5, 2), (7, 3), (2, 8)] {
            let f = Field::new(p, k, None).unwrap();
            let q = f.size();
            let mut rng = ChaCha8Rng::seed_from_u64(p * 100 + k as u64);
            for _ in 0..500 {
                let (ia, ib) = (rng.gen_range(0..q), rng.gen_range(0..q));
                let (a, b) = (f.from_index(ia), f.from_index(ib));
                assert_eq!(f.index(f.add(a, b)), f.idx_add(ia, ib));
                assert_eq!(f.index(f.mul(a, b)), f.idx_mul(ia, ib));
                assert_eq!(f.index(f.neg(a)), f.idx_neg(ia));
            }
        }
    }

    #[test]
    fn slow_representation_works() {
        // 2^21 exceeds the table limit.
        let f = Field::new(2, 21, None).unwrap();
        let a = f.from_index(123_456);
        let b = f.from_index(1_999_999);
        let ab = f.mul(a, b);
        assert_eq!(f.mul(ab, f.inv(b).unwrap()), a);
        assert_eq!(f.pow(a, f.size() as u64 - 1), Fe::ONE);
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let small = Field::new(3, 2, None).unwrap();
        let (big, emb) = small.extension(2).unwrap();
        assert_eq!(big.size(), 81);
        for a in small.elements() {
            for b in small.elements() {
                assert_eq!(emb.apply(small.add(a, b)), big.add(emb.apply(a), emb.apply(b)));
                assert_eq!(emb.apply(small.mul(a, b)), big.mul(emb.apply(a), emb.apply(b)));
            }
        }
    }
}
