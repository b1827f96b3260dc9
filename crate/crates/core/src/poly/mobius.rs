use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

use super::ratmap::PointP1;

/// The transformation `x ↦ (a x + b)/(c x + d)` with `ad − bc ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mobius {
    field: Field,
    a: Fe,
    b: Fe,
    c: Fe,
    d: Fe,
}

impl Mobius {
    pub fn new(field: &Field, a: Fe, b: Fe, c: Fe, d: Fe) -> Result<Mobius> {
        let det = field.sub(field.mul(a, d), field.mul(b, c));
        if det.is_zero() {
            return Err(Error::InvalidArgument("singular Möbius matrix".into()));
        }
        Ok(Mobius { field: field.clone(), a, b, c, d })
    }

    pub fn identity(field: &Field) -> Mobius {
        Mobius { field: field.clone(), a: Fe::ONE, b: Fe::ZERO, c: Fe::ZERO, d: Fe::ONE }
    }

    /// `x ↦ 1/x`.
    pub fn inversion(field: &Field) -> Mobius {
        Mobius { field: field.clone(), a: Fe::ZERO, b: Fe::ONE, c: Fe::ONE, d: Fe::ZERO }
    }

    /// `x ↦ x + t`.
    pub fn translation(field: &Field, t: Fe) -> Mobius {
        Mobius { field: field.clone(), a: Fe::ONE, b: t, c: Fe::ZERO, d: Fe::ONE }
    }

    /// Uniformly random invertible matrix.
    pub fn random<R: Rng>(field: &Field, rng: &mut R) -> Mobius {
        let q = field.size();
        loop {
            let mut e = || field.from_index(rng.gen_range(0..q));
            if let Ok(m) = Mobius::new(field, e(), e(), e(), e()) {
                return m;
            }
        }
    }

    pub fn entries(&self) -> (Fe, Fe, Fe, Fe) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn apply(&self, p: &PointP1) -> PointP1 {
        let f = &self.field;
        match *p {
            PointP1::Infinity => {
                if self.c.is_zero() {
                    PointP1::Infinity
                } else {
                    PointP1::Affine(f.div(self.a, self.c).expect("nonzero"))
                }
            }
            PointP1::Affine(x) => {
                let den = f.add(f.mul(self.c, x), self.d);
                if den.is_zero() {
                    PointP1::Infinity
                } else {
                    let num = f.add(f.mul(self.a, x), self.b);
                    PointP1::Affine(f.div(num, den).expect("nonzero"))
                }
            }
        }
    }

    pub fn inverse(&self) -> Mobius {
        let f = &self.field;
        Mobius { field: f.clone(), a: self.d, b: f.neg(self.b), c: f.neg(self.c), d: self.a }
    }

    /// `self ∘ other`.
    pub fn compose(&self, o: &Mobius) -> Mobius {
        let f = &self.field;
        let m = |x: Fe, y: Fe, z: Fe, w: Fe| f.add(f.mul(x, y), f.mul(z, w));
        Mobius {
            field: f.clone(),
            a: m(self.a, o.a, self.b, o.c),
            b: m(self.a, o.b, self.b, o.d),
            c: m(self.c, o.a, self.d, o.c),
            d: m(self.c, o.b, self.d, o.d),
        }
    }
}
