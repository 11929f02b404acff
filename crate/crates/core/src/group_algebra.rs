//! The group algebra `RG` of a finite abelian group of odd order
//! `G = <a_1> x ... x <a_r>` with `|a_i| = p_i^{n_i}` pairwise coprime.
//!
//! `G` is identified with the cyclic group `<a>` of order `n`, with
//! `a_i = a^{n / p_i^{n_i}}`, so an element of `RG` is a dense vector of
//! `n` ring payloads indexed by the exponent of `a`. Multi-indices
//! `(e_1, ..., e_r)` are converted on the way in and out.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::arith::GroupSpec;
use crate::chain_ring::{RingElem, RingFamily, RingHandle};
use crate::error::{Error, Result};

/// Shared handle to a group. Cheap to clone.
#[derive(Clone)]
pub struct CyclicGroup(Arc<GroupInner>);

struct GroupInner {
    spec: GroupSpec,
    n: usize,
}

impl CyclicGroup {
    /// Accepts any spec whose factor orders are odd and pairwise coprime.
    /// The stronger hypotheses are checked by [`crate::arith::validate_group`].
    pub fn new(spec: GroupSpec) -> Result<Self> {
        if spec.order().is_multiple_of(2) {
            return Err(Error::MalformedGroup(format!(
                "{spec} has even order {}",
                spec.order()
            )));
        }
        // crt_index rejects factors that are not pairwise coprime.
        spec.crt_index(&vec![0; spec.rank()])?;
        let n = spec.order() as usize;
        Ok(Self(Arc::new(GroupInner { spec, n })))
    }

    pub fn parse(designator: &str) -> Result<Self> {
        Self::new(GroupSpec::parse(designator)?)
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.0.spec
    }

    pub fn order(&self) -> usize {
        self.0.n
    }

    pub fn rank(&self) -> usize {
        self.0.spec.rank()
    }

    pub fn identity(&self) -> GroupElem {
        GroupElem {
            group: self.clone(),
            exponent: 0,
        }
    }

    pub fn element(&self, multi: &[u64]) -> Result<GroupElem> {
        Ok(GroupElem {
            group: self.clone(),
            exponent: self.spec().crt_index(multi)?,
        })
    }

    /// `a^k` for the fixed generator `a` of the whole group.
    pub fn from_exponent(&self, k: u64) -> GroupElem {
        GroupElem {
            group: self.clone(),
            exponent: k % self.0.n as u64,
        }
    }

    /// `a_i^e` as an exponent of `a`.
    pub(crate) fn factor_power_exponent(&self, i: usize, e: u64) -> u64 {
        let n = self.0.n as u64;
        let q = self.spec().factor_order(i);
        ((e % q) as u128 * self.spec().cofactor(i) as u128 % n as u128) as u64
    }

    pub(crate) fn multi_index(&self, k: u64) -> Vec<u64> {
        self.spec().crt_inverse(k).expect("exponent in range")
    }

    fn same(&self, other: &CyclicGroup) -> Result<()> {
        if Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec {
            Ok(())
        } else {
            Err(Error::MixedGroups {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl PartialEq for CyclicGroup {
    fn eq(&self, other: &Self) -> bool {
        self.same(other).is_ok()
    }
}

impl Eq for CyclicGroup {}

impl fmt::Debug for CyclicGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicGroup({})", self.0.spec)
    }
}

impl fmt::Display for CyclicGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.spec)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupElem {
    group: CyclicGroup,
    exponent: u64,
}

impl GroupElem {
    /// Exponent `k` with `self = a^k`.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn multi_index(&self) -> Vec<u64> {
        self.group.multi_index(self.exponent)
    }

    pub fn is_identity(&self) -> bool {
        self.exponent == 0
    }

    pub fn mul(&self, other: &GroupElem) -> Result<GroupElem> {
        self.group.same(&other.group)?;
        Ok(self.group.from_exponent(self.exponent + other.exponent))
    }

    pub fn inverse(&self) -> GroupElem {
        let n = self.group.order() as u64;
        self.group.from_exponent(n - self.exponent)
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, &self.multi_index())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, multi: &[u64]) -> fmt::Result {
    let mut first = true;
    for (i, &e) in multi.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "a{}", i + 1)?;
        } else {
            write!(f, "a{}^{e}", i + 1)?;
        }
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

/// The subgroup `<a_1^{d_1}> x ... x <a_r^{d_r}>`, each `d_i` a power of
/// `p_i` dividing `p_i^{n_i}`. `d_i = p_i^{n_i}` makes the factor trivial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubgroupSpec {
    steps: Vec<u64>,
}

impl SubgroupSpec {
    pub fn new(group: &CyclicGroup, steps: &[u64]) -> Result<Self> {
        if steps.len() != group.rank() {
            return Err(Error::Arity {
                expected: group.rank(),
                got: steps.len(),
            });
        }
        for (i, &d) in steps.iter().enumerate() {
            let f = group.spec().factors()[i];
            let ok = (0..=f.exponent).any(|j| f.prime.pow(j) == d);
            if !ok {
                return Err(Error::InvalidSubgroup(format!(
                    "step {d} for factor {i} is not a power of {} dividing {}",
                    f.prime,
                    f.value()
                )));
            }
        }
        Ok(Self {
            steps: steps.to_vec(),
        })
    }

    pub fn whole(group: &CyclicGroup) -> Self {
        Self {
            steps: vec![1; group.rank()],
        }
    }

    pub fn trivial(group: &CyclicGroup) -> Self {
        Self {
            steps: (0..group.rank())
                .map(|i| group.spec().factor_order(i))
                .collect(),
        }
    }

    /// `<a_i^{p_i^j}>` inside the `i`-th factor, trivial elsewhere.
    pub fn in_factor(group: &CyclicGroup, i: usize, j: u32) -> Result<Self> {
        let mut steps: Vec<u64> = Self::trivial(group).steps;
        if i >= group.rank() {
            return Err(Error::IndexOutOfRange {
                factor: i,
                value: i as u64,
                order: group.rank() as u64,
            });
        }
        let f = group.spec().factors()[i];
        if j > f.exponent {
            return Err(Error::InvalidSubgroup(format!(
                "level {j} exceeds exponent {} of factor {i}",
                f.exponent
            )));
        }
        steps[i] = f.prime.pow(j);
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[u64] {
        &self.steps
    }

    pub fn order(&self, group: &CyclicGroup) -> u64 {
        self.steps
            .iter()
            .enumerate()
            .map(|(i, d)| group.spec().factor_order(i) / d)
            .product()
    }

    /// Exponents (of `a`) of all elements, unsorted.
    pub fn exponents(&self, group: &CyclicGroup) -> Vec<u64> {
        let n = group.order() as u64;
        let mut out = vec![0u64];
        for (i, &d) in self.steps.iter().enumerate() {
            let q = group.spec().factor_order(i);
            let mut next = Vec::with_capacity(out.len() * (q / d) as usize);
            for &k in &out {
                let mut e = 0;
                while e < q {
                    next.push((k + group.factor_power_exponent(i, e)) % n);
                    e += d;
                }
            }
            out = next;
        }
        out
    }
}

/// An element of `RG` as a dense coefficient vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElem {
    ring: RingHandle,
    group: CyclicGroup,
    coeffs: Vec<u32>,
}

impl AlgebraElem {
    pub fn zero(ring: RingHandle, group: &CyclicGroup) -> Self {
        Self {
            ring,
            group: group.clone(),
            coeffs: vec![0; group.order()],
        }
    }

    pub fn one(ring: RingHandle, group: &CyclicGroup) -> Self {
        Self::scalar(ring.one(), group)
    }

    /// `c * 1`.
    pub fn scalar(c: RingElem, group: &CyclicGroup) -> Self {
        let mut x = Self::zero(c.ring(), group);
        x.coeffs[0] = c.payload();
        x
    }

    /// The basis element `g`.
    pub fn monomial(ring: RingHandle, g: &GroupElem) -> Self {
        let mut x = Self::zero(ring, &g.group);
        x.coeffs[g.exponent as usize] = 1;
        x
    }

    /// The generator `a_i` of the `i`-th factor (0-based).
    pub fn group_gen(ring: RingHandle, group: &CyclicGroup, i: usize) -> Result<Self> {
        if i >= group.rank() {
            return Err(Error::IndexOutOfRange {
                factor: i,
                value: i as u64,
                order: group.rank() as u64,
            });
        }
        Ok(Self::factor_power(ring, group, i, 1))
    }

    /// `a_i^e`.
    pub fn factor_power(ring: RingHandle, group: &CyclicGroup, i: usize, e: u64) -> Self {
        Self::monomial(ring, &group.from_exponent(group.factor_power_exponent(i, e)))
    }

    /// Builds an element from `(multi-index, coefficient)` pairs; repeated
    /// indices are summed.
    pub fn from_terms(
        ring: RingHandle,
        group: &CyclicGroup,
        terms: &[(Vec<u64>, RingElem)],
    ) -> Result<Self> {
        let mut x = Self::zero(ring, group);
        for (multi, c) in terms {
            if c.ring() != ring {
                return Err(Error::MixedRings {
                    left: ring.designator(),
                    right: c.ring().designator(),
                });
            }
            let k = group.spec().crt_index(multi)? as usize;
            x.coeffs[k] = ring.add_raw(x.coeffs[k], c.payload());
        }
        Ok(x)
    }

    /// Builds an element from payloads indexed by the exponent of `a`.
    pub fn from_payloads(ring: RingHandle, group: &CyclicGroup, coeffs: Vec<u32>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::Arity {
                expected: group.order(),
                got: coeffs.len(),
            });
        }
        let mask = ring.mask();
        Ok(Self {
            ring,
            group: group.clone(),
            coeffs: coeffs.into_iter().map(|c| c & mask).collect(),
        })
    }

    /// `|H|^{-1} * sum of the elements of H`.
    pub fn hat(ring: RingHandle, group: &CyclicGroup, h: &SubgroupSpec) -> Self {
        let inv = ring
            .from_int(h.order(group) as i64)
            .invert_unit()
            .expect("subgroups of an odd-order group have odd order");
        let mut x = Self::zero(ring, group);
        for k in h.exponents(group) {
            x.coeffs[k as usize] = inv.payload();
        }
        x
    }

    pub fn ring(&self) -> RingHandle {
        self.ring
    }

    pub fn group(&self) -> &CyclicGroup {
        &self.group
    }

    /// Coefficient payloads indexed by the exponent of `a`.
    pub fn payloads(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, g: &GroupElem) -> RingElem {
        self.ring
            .from_payload(self.coeffs[g.exponent as usize])
            .expect("canonical payload")
    }

    pub fn coeff_at(&self, multi: &[u64]) -> Result<RingElem> {
        Ok(self.coeff(&self.group.element(multi)?))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check(&self, other: &AlgebraElem) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::MixedRings {
                left: self.ring.designator(),
                right: other.ring.designator(),
            });
        }
        self.group.same(&other.group)
    }

    fn with_coeffs(&self, coeffs: Vec<u32>) -> Self {
        Self {
            ring: self.ring,
            group: self.group.clone(),
            coeffs,
        }
    }

    pub fn try_add(&self, other: &AlgebraElem) -> Result<Self> {
        self.check(other)?;
        let r = self.ring;
        Ok(self.with_coeffs(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| r.add_raw(a, b))
                .collect(),
        ))
    }

    pub fn try_sub(&self, other: &AlgebraElem) -> Result<Self> {
        self.check(other)?;
        let r = self.ring;
        Ok(self.with_coeffs(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| r.sub_raw(a, b))
                .collect(),
        ))
    }

    pub fn negate(&self) -> Self {
        let r = self.ring;
        self.with_coeffs(self.coeffs.iter().map(|&a| r.neg_raw(a)).collect())
    }

    pub fn scalar_mul(&self, c: &RingElem) -> Result<Self> {
        if c.ring() != self.ring {
            return Err(Error::MixedRings {
                left: self.ring.designator(),
                right: c.ring().designator(),
            });
        }
        let r = self.ring;
        let c = c.payload();
        Ok(self.with_coeffs(self.coeffs.iter().map(|&a| r.mul_raw(c, a)).collect()))
    }

    /// Product in `RG`: `(xy)_g = sum_h x_h y_{h^{-1} g}`.
    pub fn convolve(&self, other: &AlgebraElem) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_coeffs(convolve_payloads(
            self.ring,
            &self.coeffs,
            &other.coeffs,
        )))
    }

    pub fn square(&self) -> Self {
        self.with_coeffs(convolve_payloads(self.ring, &self.coeffs, &self.coeffs))
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = Self::one(self.ring, &self.group);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Right translation by `g`: a permutation of coefficients.
    pub fn mul_group(&self, g: &GroupElem) -> Result<Self> {
        self.group.same(&g.group)?;
        Ok(self.shifted(g.exponent as usize))
    }

    pub(crate) fn shifted(&self, by: usize) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![0; n];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[(k + by) % n] = c;
        }
        self.with_coeffs(out)
    }

    /// The image of `x` under the automorphism `g -> g^2`. Over `F_2` this
    /// is the square of `x`.
    pub fn frobenius(&self) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![0; n];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[2 * k % n] = c;
        }
        self.with_coeffs(out)
    }

    pub fn is_idempotent(&self) -> bool {
        self.square() == *self
    }

    /// Exponents of `a` where the coefficient is nonzero, increasing.
    pub fn support_exponents(&self) -> Vec<u64> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, _)| k as u64)
            .collect()
    }

    pub fn support(&self) -> Vec<GroupElem> {
        self.support_exponents()
            .into_iter()
            .map(|k| self.group.from_exponent(k))
            .collect()
    }

    /// Hamming weight: the number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    /// Coefficientwise residue map `RG -> F_2 G`.
    pub fn reduce_to_f2(&self) -> Self {
        Self {
            ring: RingHandle::f2(),
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|&c| c & 1).collect(),
        }
    }

    /// Coefficientwise section `F_2 G -> RG` (`0 -> 0`, `1 -> 1`).
    pub fn lift_from_f2(&self, ring: RingHandle) -> Self {
        Self {
            ring,
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|&c| c & 1).collect(),
        }
    }

    /// Nonzero terms as `(multi-index, coefficient)`, ordered by multi-index.
    pub fn terms(&self) -> Vec<(Vec<u64>, RingElem)> {
        let mut terms: Vec<_> = self
            .support_exponents()
            .into_iter()
            .map(|k| {
                (
                    self.group.multi_index(k),
                    self.ring.from_payload(self.coeffs[k as usize]).unwrap(),
                )
            })
            .collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        terms
    }
}

/// Dense cyclic convolution of two payload vectors of equal length.
pub(crate) fn convolve_payloads(ring: RingHandle, x: &[u32], y: &[u32]) -> Vec<u32> {
    let n = x.len();
    let mut acc = vec![0u64; n];
    let nz: Vec<(usize, u64)> = y
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| (k, c as u64))
        .collect();
    match ring.family() {
        RingFamily::IntegerModular => {
            for (i, &a) in x.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let a = a as u64;
                for &(j, b) in &nz {
                    let k = if i + j >= n { i + j - n } else { i + j };
                    acc[k] = acc[k].wrapping_add(a.wrapping_mul(b));
                }
            }
            let mask = ring.mask() as u64;
            acc.into_iter().map(|v| (v & mask) as u32).collect()
        }
        RingFamily::BinaryPolynomial => {
            for (i, &a) in x.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for &(j, b) in &nz {
                    let k = if i + j >= n { i + j - n } else { i + j };
                    acc[k] ^= clmul64(a as u64, b);
                }
            }
            let mask = ring.mask() as u64;
            acc.into_iter().map(|v| (v & mask) as u32).collect()
        }
    }
}

fn clmul64(a: u64, b: u64) -> u64 {
    let mut acc = 0u64;
    let mut a = a;
    let mut shift = 0;
    while a != 0 {
        if a & 1 == 1 {
            acc ^= b << shift;
        }
        a >>= 1;
        shift += 1;
    }
    acc
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&AlgebraElem> for &AlgebraElem {
            type Output = AlgebraElem;

            /// Panics when the operands live in different rings or groups.
            fn $method(self, rhs: &AlgebraElem) -> AlgebraElem {
                self.$inner(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait<AlgebraElem> for AlgebraElem {
            type Output = AlgebraElem;

            fn $method(self, rhs: AlgebraElem) -> AlgebraElem {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, convolve);

impl Neg for &AlgebraElem {
    type Output = AlgebraElem;

    fn neg(self) -> AlgebraElem {
        self.negate()
    }
}

impl Neg for AlgebraElem {
    type Output = AlgebraElem;

    fn neg(self) -> AlgebraElem {
        self.negate()
    }
}

impl fmt::Display for AlgebraElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (multi, c)) in terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            let is_identity = multi.iter().all(|&e| e == 0);
            let coeff = c.to_string();
            if is_identity {
                if coeff.contains('+') {
                    write!(f, "({coeff})")?;
                } else {
                    f.write_str(&coeff)?;
                }
                continue;
            }
            if coeff != "1" {
                if coeff.contains('+') {
                    write!(f, "({coeff})*")?;
                } else {
                    write!(f, "{coeff}*")?;
                }
            }
            write_monomial(f, multi)?;
        }
        Ok(())
    }
}

/// Serializes as `[[multi-index], "coefficient"]` pairs for the nonzero terms.
impl Serialize for AlgebraElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.terms();
        let mut seq = serializer.serialize_seq(Some(terms.len()))?;
        for (multi, c) in &terms {
            seq.serialize_element(&(multi, c.to_string()))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> RingHandle {
        RingHandle::parse("z4").unwrap()
    }

    fn c(d: &str) -> CyclicGroup {
        CyclicGroup::parse(d).unwrap()
    }

    /// `sum c_k g^k` for the generator `g = a_1` of a single-factor group.
    fn poly(ring: RingHandle, g: &CyclicGroup, cs: &[i64]) -> AlgebraElem {
        let terms: Vec<_> = cs
            .iter()
            .enumerate()
            .map(|(k, &v)| (vec![k as u64], ring.from_int(v)))
            .collect();
        AlgebraElem::from_terms(ring, g, &terms).unwrap()
    }

    /// Schoolbook product in `R[x]/(x^n - 1)` using only ring-element ops.
    fn reference_product(x: &AlgebraElem, y: &AlgebraElem) -> Vec<RingElem> {
        let r = x.ring();
        let n = x.payloads().len();
        let xs: Vec<_> = x.payloads().iter().map(|&p| r.from_payload(p).unwrap()).collect();
        let ys: Vec<_> = y.payloads().iter().map(|&p| r.from_payload(p).unwrap()).collect();
        let mut out = vec![r.zero(); n];
        for i in 0..n {
            for j in 0..n {
                let k = (i + j) % n;
                out[k] = out[k].add(&xs[i].mul(&ys[j]).unwrap()).unwrap();
            }
        }
        out
    }

    #[test]
    fn convolution_examples() {
        let g = c("3^1");
        let x = poly(z4(), &g, &[1, 1]);
        assert_eq!(x.square(), poly(z4(), &g, &[1, 2, 1]));
        let f2 = RingHandle::f2();
        let all = poly(f2, &g, &[1, 1, 1]);
        assert_eq!(&all * &all, all);
        assert_eq!(&x * &AlgebraElem::one(z4(), &g), x);
    }

    #[test]
    fn module_examples() {
        let g = c("3^1");
        let x = poly(z4(), &g, &[2, 2]);
        assert!((&x + &x).is_zero());
        assert!(x.scalar_mul(&z4().zero()).unwrap().is_zero());
        assert_eq!(&x + &AlgebraElem::zero(z4(), &g), x);
        assert_eq!(x.weight(), 2);
    }

    #[test]
    fn mismatched_operands_rejected() {
        let x = AlgebraElem::one(z4(), &c("3^1"));
        let y = AlgebraElem::one(RingHandle::f2(), &c("3^1"));
        let z = AlgebraElem::one(z4(), &c("5^1"));
        assert!(matches!(x.try_add(&y), Err(Error::MixedRings { .. })));
        assert!(matches!(x.convolve(&z), Err(Error::MixedGroups { .. })));
    }

    #[test]
    fn hat_examples() {
        let g = c("3^1");
        let h = AlgebraElem::hat(z4(), &g, &SubgroupSpec::whole(&g));
        assert_eq!(h, poly(z4(), &g, &[3, 3, 3]));
        assert!(h.is_idempotent());
        let hf = AlgebraElem::hat(RingHandle::f2(), &g, &SubgroupSpec::whole(&g));
        assert_eq!(hf, poly(RingHandle::f2(), &g, &[1, 1, 1]));
        let one = AlgebraElem::hat(z4(), &g, &SubgroupSpec::trivial(&g));
        assert_eq!(one, AlgebraElem::one(z4(), &g));

        let g15 = c("3^1,5^1");
        let h15 = AlgebraElem::hat(z4(), &g15, &SubgroupSpec::whole(&g15));
        assert_eq!(h15.weight(), 15);
        assert!(h15.payloads().iter().all(|&p| p == 3));
    }

    #[test]
    fn hats_are_idempotent_and_nest() {
        let rings = ["z4", "z8", "f2u2", "f2u3"].map(|d| RingHandle::parse(d).unwrap());
        for d in ["3^1", "3^2", "3^1,5^1", "3^2,5^1", "3^1,5^1,11^1"] {
            let g = c(d);
            let spec = g.spec().clone();
            for ring in rings {
                for i in 0..g.rank() {
                    let ni = spec.exponents()[i];
                    let mut prev = AlgebraElem::hat(ring, &g, &SubgroupSpec::in_factor(&g, i, 0).unwrap());
                    assert!(prev.is_idempotent());
                    for j in 1..=ni {
                        let cur = AlgebraElem::hat(ring, &g, &SubgroupSpec::in_factor(&g, i, j).unwrap());
                        assert!(cur.is_idempotent(), "{d} {ring} {i} {j}");
                        // The larger subgroup's hat absorbs the smaller one.
                        assert_eq!(&prev * &cur, prev);
                        let diff = &cur - &prev;
                        assert!((&diff * &prev).is_zero());
                        prev = cur;
                    }
                }
            }
        }
    }

    #[test]
    fn convolution_matches_reference_polynomial_product() {
        let rings = ["z4", "z8", "f2u3", "z2"].map(|d| RingHandle::parse(d).unwrap());
        for d in ["3^1", "3^1,5^1", "3^2,5^1"] {
            let g = c(d);
            let n = g.order();
            for ring in rings {
                let mask = ring.mask();
                let mut state = 0x2545_f491_4f6c_dd1du64 ^ n as u64;
                let mut next = || {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    state as u32 & mask
                };
                let x = AlgebraElem::from_payloads(ring, &g, (0..n).map(|_| next()).collect()).unwrap();
                let y = AlgebraElem::from_payloads(ring, &g, (0..n).map(|_| next()).collect()).unwrap();
                let want: Vec<u32> = reference_product(&x, &y).iter().map(|c| c.payload()).collect();
                assert_eq!((&x * &y).payloads(), &want[..], "{d} {ring}");
            }
        }
    }

    #[test]
    fn translation_and_generators() {
        let g = c("3^1");
        let x = poly(z4(), &g, &[1, 1]);
        let a = g.element(&[1]).unwrap();
        assert_eq!(x.mul_group(&a).unwrap(), poly(z4(), &g, &[0, 1, 1]));
        assert_eq!(x.mul_group(&g.identity()).unwrap(), x);

        let g15 = c("3^1,5^1");
        let a1 = AlgebraElem::group_gen(z4(), &g15, 0).unwrap();
        let a2 = AlgebraElem::group_gen(z4(), &g15, 1).unwrap();
        assert_eq!(a1.pow(3), AlgebraElem::one(z4(), &g15));
        assert_eq!(a2.pow(5), AlgebraElem::one(z4(), &g15));
        assert_eq!((&a1 * &a2).terms()[0].0, vec![1, 1]);
        assert!(AlgebraElem::group_gen(z4(), &g15, 2).is_err());
    }

    #[test]
    fn reduction_and_lift() {
        let g = c("3^1");
        let x = poly(z4(), &g, &[2, 3]);
        assert_eq!(x.reduce_to_f2(), poly(RingHandle::f2(), &g, &[0, 1]));
        let y = poly(RingHandle::f2(), &g, &[1, 1]);
        assert_eq!(y.lift_from_f2(z4()), poly(z4(), &g, &[1, 1]));
        for bits in 0..8u32 {
            let f = AlgebraElem::from_payloads(
                RingHandle::f2(),
                &g,
                (0..3).map(|k| bits >> k & 1).collect(),
            )
            .unwrap();
            assert_eq!(f.lift_from_f2(z4()).reduce_to_f2(), f);
        }
    }

    #[test]
    fn frobenius_is_squaring_over_f2() {
        let g = c("3^1,5^1");
        let f2 = RingHandle::f2();
        let x = AlgebraElem::from_payloads(f2, &g, (0..15).map(|k| (k * 7 % 3 == 0) as u32).collect()).unwrap();
        assert_eq!(x.frobenius(), x.square());
    }

    #[test]
    fn json_and_display() {
        let g = c("3^1,5^1");
        let r = RingHandle::parse("f2u2").unwrap();
        let x = AlgebraElem::from_terms(
            r,
            &g,
            &[
                (vec![0, 0], r.one()),
                (vec![1, 2], r.from_payload(3).unwrap()),
            ],
        )
        .unwrap();
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"[[[0,0],"1"],[[1,2],"1+u"]]"#);
        assert_eq!(x.to_string(), "1 + (1+u)*a1*a2^2");
        assert_eq!(AlgebraElem::zero(r, &g).to_string(), "0");
    }

    #[test]
    fn subgroup_validation() {
        let g = c("3^2,5^1");
        assert!(SubgroupSpec::new(&g, &[3, 5]).is_ok());
        assert!(SubgroupSpec::new(&g, &[2, 5]).is_err());
        assert!(SubgroupSpec::new(&g, &[27, 1]).is_err());
        assert_eq!(SubgroupSpec::new(&g, &[3, 1]).unwrap().order(&g), 15);
    }
}
