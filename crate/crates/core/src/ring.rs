//! Arithmetic in the local ring `F_r + uF_r` with `u^2 = 0`.
//!
//! An element `a + ub` is a unit exactly when `a != 0`; the non-units form the
//! maximal ideal `<u>`. Elements of the base ring `F_q + uF_q` are represented
//! as elements of the extension whose components lie in the subfield, so the
//! crate carries a single arithmetic core.

use crate::error::{Error, Result};
use crate::gf::{Fel, Field};

/// `a + ub` over the field the components belong to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RingElement {
    pub a: Fel,
    pub b: Fel,
}

/// Operations on `F_r + uF_r` for a fixed field `F_r`.
#[derive(Clone, Copy)]
pub struct Ring<'f> {
    field: &'f Field,
}

impl<'f> Ring<'f> {
    pub fn new(field: &'f Field) -> Self {
        Ring { field }
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn element(&self, a: Fel, b: Fel) -> RingElement {
        assert!(
            self.field.owns(a) && self.field.owns(b),
            "component belongs to a different field"
        );
        RingElement { a, b }
    }

    pub fn zero(&self) -> RingElement {
        self.element(self.field.zero(), self.field.zero())
    }

    pub fn one(&self) -> RingElement {
        self.element(self.field.one(), self.field.zero())
    }

    /// The nilpotent generator `u`.
    pub fn u(&self) -> RingElement {
        self.element(self.field.zero(), self.field.one())
    }

    /// Embed a field element as `a + u*0`.
    pub fn from_field(&self, a: Fel) -> RingElement {
        self.element(a, self.field.zero())
    }

    pub fn add(&self, x: RingElement, y: RingElement) -> RingElement {
        self.element(self.field.add(x.a, y.a), self.field.add(x.b, y.b))
    }

    pub fn sub(&self, x: RingElement, y: RingElement) -> RingElement {
        self.element(self.field.sub(x.a, y.a), self.field.sub(x.b, y.b))
    }

    pub fn neg(&self, x: RingElement) -> RingElement {
        self.element(self.field.neg(x.a), self.field.neg(x.b))
    }

    /// `(a + ub)(c + ud) = ac + u(ad + bc)`; the `u^2` term vanishes.
    pub fn mul(&self, x: RingElement, y: RingElement) -> RingElement {
        let f = self.field;
        let a = f.mul(x.a, y.a);
        let b = f.add(f.mul(x.a, y.b), f.mul(x.b, y.a));
        self.element(a, b)
    }

    /// Units are exactly the elements with nonzero first component.
    pub fn is_unit(&self, x: RingElement) -> bool {
        x.a != self.field.zero()
    }

    /// `(a + ub)^-1 = a^-1 - u b a^-2` for a unit.
    pub fn inv(&self, x: RingElement) -> Result<RingElement> {
        if !self.is_unit(x) {
            return Err(Error::NotAUnit);
        }
        let f = self.field;
        let ai = f.inv(x.a)?;
        let b = f.neg(f.mul(x.b, f.mul(ai, ai)));
        Ok(self.element(ai, b))
    }

    /// The Frobenius operator `a + ub -> a^q + ub^q`; `q` must be a power of
    /// the field characteristic.
    pub fn frobenius(&self, x: RingElement, q: u64) -> Result<RingElement> {
        if !is_power_of(q, self.field.p()) {
            return Err(Error::NotAPowerOfP {
                q,
                p: self.field.p(),
            });
        }
        let f = self.field;
        Ok(self.element(f.pow(x.a, q), f.pow(x.b, q)))
    }

    /// Ring trace down to `F_{p^s} + uF_{p^s}`: the sum of the first `k/s`
    /// iterates of the `p^s`-Frobenius.
    pub fn trace(&self, x: RingElement, s: u32) -> Result<RingElement> {
        let k = self.field.k();
        if s == 0 || !k.is_multiple_of(s) {
            return Err(Error::BadTowerSplit { s, k });
        }
        let q = crate::arith::checked_pow(self.field.p(), s).expect("subfield size fits");
        let m = k / s;
        let mut acc = x;
        let mut y = x;
        for _ in 1..m {
            y = self.frobenius(y, q)?;
            acc = self.add(acc, y);
        }
        Ok(acc)
    }

    /// All `r^2` elements, nilpotent part fastest.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + 'f {
        let ring = *self;
        let f = self.field;
        f.elements()
            .flat_map(move |a| f.elements().map(move |b| ring.element(a, b)))
    }
}

fn is_power_of(q: u64, p: u64) -> bool {
    let mut q = q;
    if q < p {
        return false;
    }
    while q.is_multiple_of(p) {
        q /= p;
    }
    q == 1
}
