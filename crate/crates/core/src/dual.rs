//! Dual numbers `F[ε]/(ε²)`.

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

/// The value `re + ε·eps` with `ε² = 0`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DualNumber {
    pub re: Fe,
    pub eps: Fe,
}

impl DualNumber {
    pub fn new(re: Fe, eps: Fe) -> Self {
        DualNumber { re, eps }
    }

    pub fn constant(re: Fe) -> Self {
        DualNumber { re, eps: Fe::ZERO }
    }

    /// `ε` itself.
    pub fn epsilon() -> Self {
        DualNumber { re: Fe::ZERO, eps: Fe::ONE }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.eps.is_zero()
    }

    pub fn add(self, f: &Field, o: Self) -> Self {
        DualNumber { re: f.add(self.re, o.re), eps: f.add(self.eps, o.eps) }
    }

    pub fn sub(self, f: &Field, o: Self) -> Self {
        DualNumber { re: f.sub(self.re, o.re), eps: f.sub(self.eps, o.eps) }
    }

    pub fn neg(self, f: &Field) -> Self {
        DualNumber { re: f.neg(self.re), eps: f.neg(self.eps) }
    }

    pub fn mul(self, f: &Field, o: Self) -> Self {
        DualNumber {
            re: f.mul(self.re, o.re),
            eps: f.add(f.mul(self.re, o.eps), f.mul(self.eps, o.re)),
        }
    }

    /// `(a + εb)⁻¹ = a⁻¹ − ε·b·a⁻²`.
    pub fn inv(self, f: &Field) -> Result<Self> {
        if self.re.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ai = f.inv(self.re)?;
        Ok(DualNumber { re: ai, eps: f.neg(f.mul(self.eps, f.mul(ai, ai))) })
    }

    pub fn pow(self, f: &Field, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = DualNumber::constant(Fe::ONE);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, base);
            }
            base = base.mul(f, base);
            e >>= 1;
        }
        acc
    }
}
