//! Finite chain rings of order `2^t` with residue field `F_2`.
//!
//! Two concrete families realize every nilpotency index `t`:
//!
//! * `Z/2^t` with uniformizer `s = 2` (designators `z2`, `z4`, `z8`, ...),
//! * `F_2[u]/(u^t)` with uniformizer `s = u` (designators `f2u1`, `f2u2`, ...).
//!
//! Elements are small `Copy` values carrying their ring handle, so values from
//! different rings can coexist; mixing them in one operation is an error.
//! `t = 1` is allowed and gives `F_2` with `s = 0`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported nilpotency index. Payloads are `u32`.
pub const MAX_NILPOTENCY: u32 = 30;

/// Largest `t` for which [`RingHandle::enumerate_elements`] will list the ring.
pub const MAX_ENUMERABLE_NILPOTENCY: u32 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingFamily {
    /// `Z/2^t`.
    IntegerModular,
    /// `F_2[u]/(u^t)`.
    BinaryPolynomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingHandle {
    family: RingFamily,
    t: u32,
}

impl RingHandle {
    pub fn new(family: RingFamily, t: u32) -> Result<Self> {
        if t == 0 || t > MAX_NILPOTENCY {
            return Err(Error::NilpotencyOutOfRange {
                t,
                max: MAX_NILPOTENCY,
            });
        }
        Ok(Self { family, t })
    }

    /// `Z/2^t`.
    pub fn integers_mod_pow2(t: u32) -> Result<Self> {
        Self::new(RingFamily::IntegerModular, t)
    }

    /// `F_2[u]/(u^t)`.
    pub fn binary_polynomial(t: u32) -> Result<Self> {
        Self::new(RingFamily::BinaryPolynomial, t)
    }

    /// The residue field, represented as `Z/2`.
    pub fn f2() -> Self {
        Self {
            family: RingFamily::IntegerModular,
            t: 1,
        }
    }

    /// Parses `z<2^t>` (`z2`, `z4`, `z8`, also `z2^3`) or `f2u<t>` (`f2u2`, also `f2u^2`).
    pub fn parse(designator: &str) -> Result<Self> {
        let d = designator.trim().to_ascii_lowercase();
        let bad = || Error::Parse(format!("unknown ring designator {designator:?}"));
        if let Some(rest) = d.strip_prefix("f2u") {
            let t: u32 = rest.trim_start_matches('^').parse().map_err(|_| bad())?;
            return Self::binary_polynomial(t).map_err(|e| Error::Parse(e.to_string()));
        }
        if let Some(rest) = d.strip_prefix('z') {
            let t = if let Some(exp) = rest.strip_prefix("2^") {
                exp.parse::<u32>().map_err(|_| bad())?
            } else {
                let order: u64 = rest.parse().map_err(|_| bad())?;
                if order < 2 || !order.is_power_of_two() {
                    return Err(Error::Parse(format!(
                        "{designator:?}: ring order must be a power of two"
                    )));
                }
                order.trailing_zeros()
            };
            return Self::integers_mod_pow2(t).map_err(|e| Error::Parse(e.to_string()));
        }
        Err(bad())
    }

    pub fn designator(&self) -> String {
        match self.family {
            RingFamily::IntegerModular => format!("z{}", 1u64 << self.t),
            RingFamily::BinaryPolynomial => format!("f2u{}", self.t),
        }
    }

    pub fn family(&self) -> RingFamily {
        self.family
    }

    /// Nilpotency index of the uniformizer; `|R| = 2^t`.
    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn order(&self) -> u64 {
        1u64 << self.t
    }

    pub(crate) fn mask(&self) -> u32 {
        ((1u64 << self.t) - 1) as u32
    }

    fn elem(&self, payload: u32) -> RingElem {
        RingElem {
            ring: *self,
            payload: payload & self.mask(),
        }
    }

    pub fn zero(&self) -> RingElem {
        self.elem(0)
    }

    pub fn one(&self) -> RingElem {
        self.elem(1)
    }

    /// Generator `s` of the maximal ideal; `s^t = 0`, and `s = 0` when `t = 1`.
    pub fn uniformizer(&self) -> RingElem {
        self.elem(2)
    }

    /// Image of the integer `k` under `Z -> R`.
    pub fn from_int(&self, k: i64) -> RingElem {
        match self.family {
            RingFamily::IntegerModular => self.elem(k.rem_euclid(self.order() as i64) as u32),
            RingFamily::BinaryPolynomial => self.elem(k.rem_euclid(2) as u32),
        }
    }

    /// Section `F_2 -> R` of the residue map: `0 -> 0`, `1 -> 1`.
    pub fn lift_bit(&self, bit: bool) -> RingElem {
        self.elem(bit as u32)
    }

    /// Builds an element from its canonical payload: the residue for `Z/2^t`,
    /// the coefficient bit-vector of `1, u, ..., u^{t-1}` for `F_2[u]/(u^t)`.
    pub fn from_payload(&self, payload: u32) -> Result<RingElem> {
        if payload > self.mask() {
            return Err(Error::Parse(format!(
                "payload {payload} out of range for {}",
                self.designator()
            )));
        }
        Ok(self.elem(payload))
    }

    /// All `2^t` elements, in increasing payload order.
    pub fn enumerate_elements(&self) -> Result<Vec<RingElem>> {
        if self.t > MAX_ENUMERABLE_NILPOTENCY {
            return Err(Error::EnumerationGuard {
                t: self.t,
                max: MAX_ENUMERABLE_NILPOTENCY,
            });
        }
        Ok((0..self.order() as u32).map(|p| self.elem(p)).collect())
    }

    /// Elements of the ideal `s^i R`, in increasing payload order (zero first).
    pub fn ideal_elements(&self, i: u32) -> Result<Vec<RingElem>> {
        Ok(self
            .enumerate_elements()?
            .into_iter()
            .filter(|x| x.valuation() >= i)
            .collect())
    }

    // Raw payload arithmetic, shared with the dense algebra kernels.

    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        match self.family {
            RingFamily::IntegerModular => a.wrapping_add(b) & self.mask(),
            RingFamily::BinaryPolynomial => a ^ b,
        }
    }

    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        match self.family {
            RingFamily::IntegerModular => a.wrapping_neg() & self.mask(),
            RingFamily::BinaryPolynomial => a,
        }
    }

    pub(crate) fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        match self.family {
            RingFamily::IntegerModular => ((a as u64 * b as u64) & self.mask() as u64) as u32,
            RingFamily::BinaryPolynomial => clmul_truncated(a, b, self.mask()),
        }
    }
}

impl fmt::Display for RingHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.designator())
    }
}

/// Carry-less product of two bit-polynomials, truncated to `mask`.
pub(crate) fn clmul_truncated(a: u32, b: u32, mask: u32) -> u32 {
    let mut acc = 0u64;
    let mut a = a;
    let mut shift = 0;
    while a != 0 {
        if a & 1 == 1 {
            acc ^= (b as u64) << shift;
        }
        a >>= 1;
        shift += 1;
    }
    (acc as u32) & mask
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElem {
    ring: RingHandle,
    payload: u32,
}

impl RingElem {
    pub fn ring(&self) -> RingHandle {
        self.ring
    }

    pub fn payload(&self) -> u32 {
        self.payload
    }

    pub fn is_zero(&self) -> bool {
        self.payload == 0
    }

    fn same_ring(&self, other: &RingElem) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::MixedRings {
                left: self.ring.designator(),
                right: other.ring.designator(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &RingElem) -> Result<RingElem> {
        self.same_ring(other)?;
        Ok(self.ring.elem(self.ring.add_raw(self.payload, other.payload)))
    }

    pub fn sub(&self, other: &RingElem) -> Result<RingElem> {
        self.same_ring(other)?;
        Ok(self.ring.elem(self.ring.sub_raw(self.payload, other.payload)))
    }

    pub fn mul(&self, other: &RingElem) -> Result<RingElem> {
        self.same_ring(other)?;
        Ok(self.ring.elem(self.ring.mul_raw(self.payload, other.payload)))
    }

    pub fn neg(&self) -> RingElem {
        self.ring.elem(self.ring.neg_raw(self.payload))
    }

    pub fn pow(&self, mut exp: u64) -> RingElem {
        let ring = self.ring;
        let mut base = self.payload;
        let mut acc = 1u32 & ring.mask();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = ring.mul_raw(acc, base);
            }
            base = ring.mul_raw(base, base);
            exp >>= 1;
        }
        ring.elem(acc)
    }

    /// Image in `R/M = F_2`.
    pub fn residue(&self) -> bool {
        self.payload & 1 == 1
    }

    pub fn is_unit(&self) -> bool {
        self.residue()
    }

    /// Largest `i` with `self` in `s^i R`; `t` for zero.
    pub fn valuation(&self) -> u32 {
        if self.payload == 0 {
            self.ring.t
        } else {
            self.payload.trailing_zeros()
        }
    }

    pub fn invert_unit(&self) -> Result<RingElem> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        let ring = self.ring;
        let inv = match ring.family {
            RingFamily::IntegerModular => {
                // Newton iteration x <- x(2 - ax); a*a = 1 mod 8 for odd a.
                let a = self.payload as u64;
                let mut x = a;
                for _ in 0..5 {
                    x = x.wrapping_mul(2u64.wrapping_sub(a.wrapping_mul(x)));
                }
                (x & ring.mask() as u64) as u32
            }
            RingFamily::BinaryPolynomial => {
                // (1 + m)^{-1} = 1 + m + m^2 + ... with m nilpotent of index <= t.
                let m = self.payload ^ 1;
                let mut term = 1u32;
                let mut acc = 0u32;
                for _ in 0..ring.t {
                    acc ^= term;
                    term = ring.mul_raw(term, m);
                }
                acc
            }
        };
        Ok(ring.elem(inv))
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ring.family {
            RingFamily::IntegerModular => write!(f, "{}", self.payload),
            RingFamily::BinaryPolynomial => {
                if self.payload == 0 {
                    return f.write_str("0");
                }
                let mut first = true;
                for i in 0..self.ring.t {
                    if self.payload >> i & 1 == 0 {
                        continue;
                    }
                    if !first {
                        f.write_str("+")?;
                    }
                    first = false;
                    match i {
                        0 => f.write_str("1")?,
                        1 => f.write_str("u")?,
                        _ => write!(f, "u^{i}")?,
                    }
                }
                Ok(())
            }
        }
    }
}
