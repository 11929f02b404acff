//! Explicit idempotents of `RG` and the complete primitive family.
//!
//! A block `(j_1, ..., j_r)` with `0 <= j_i <= n_i` names the idempotent
//! `prod_i eps_i`, where `eps_i = hat(a_i)` for `j_i = 0` and
//! `eps_i = hat(a_i^{p_i^{j_i}}) - hat(a_i^{p_i^{j_i - 1}})` otherwise. A block
//! with `m` nonzero entries is the sum of `2^{m-1}` primitive idempotents
//! (one when `m = 0`); the closed forms below produce them for `m <= 3`.
//!
//! Idempotents over `R` come from idempotents over `F_2` by lifting
//! coefficientwise and raising to the power `2^{t-1}`. Any two lifts that
//! agree modulo `s` have the same `2^{t-1}`-th power, so the closed forms may
//! be evaluated directly over `R`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::arith::{mod_pow, validate_group, GroupSpec};
use crate::chain_ring::RingHandle;
use crate::error::{Error, Result};
use crate::f2_oracle::{component_count_formula, primitive_idempotents_of};
use crate::group_algebra::{AlgebraElem, CyclicGroup, SubgroupSpec};

/// Block label `(j_1, ..., j_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block(Vec<u32>);

impl Block {
    pub fn new(group: &CyclicGroup, levels: &[u32]) -> Result<Self> {
        if levels.len() != group.rank() {
            return Err(Error::InvalidBlock {
                block: levels.to_vec(),
                reason: format!("expected {} entries", group.rank()),
            });
        }
        for (i, (&j, n)) in levels.iter().zip(group.spec().exponents()).enumerate() {
            if j > n {
                return Err(Error::InvalidBlock {
                    block: levels.to_vec(),
                    reason: format!("entry {} exceeds exponent {n}", i + 1),
                });
            }
        }
        Ok(Self(levels.to_vec()))
    }

    pub fn parse(group: &CyclicGroup, text: &str) -> Result<Self> {
        let levels = text
            .trim_matches(|c| c == '(' || c == ')' || c == ' ')
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad block entry {s:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, &levels)
    }

    /// Every block of the group, in lexicographic order.
    pub fn all(group: &CyclicGroup) -> Vec<Block> {
        let mut out = vec![Vec::new()];
        for n in group.spec().exponents() {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=n).map(move |j| {
                        let mut v = prefix.clone();
                        v.push(j);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(Block).collect()
    }

    pub fn levels(&self) -> &[u32] {
        &self.0
    }

    /// Factor indices (0-based) with a nonzero level.
    pub fn nonzero_indices(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&j| j == 0)
    }

    /// Number of primitive idempotents below this block.
    pub fn split_count(&self) -> usize {
        match self.nonzero_indices().len() {
            0 => 1,
            m => 1 << (m - 1),
        }
    }

    /// `F_2`-dimension of each primitive component below this block.
    pub fn component_degree(&self, spec: &GroupSpec) -> u64 {
        let mut d = 1;
        for (f, &j) in spec.factors().iter().zip(&self.0) {
            if j > 0 {
                d *= f.prime.pow(j) - f.prime.pow(j - 1);
            }
        }
        d / self.split_count() as u64
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Block {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Which primitive summand of a block a record is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplitTag {
    /// `e^{(k)}` of the two- and three-index splittings.
    Numbered(u8),
    /// `A_i` of the alternative three-index splitting; 1-based factor index.
    A(usize),
    /// `B_i` of the alternative three-index splitting; 1-based factor index.
    B(usize),
    /// A summand without a closed form, numbered from 1 within its block.
    Complement(usize),
}

impl fmt::Display for SplitTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitTag::Numbered(k) => write!(f, "{k}"),
            SplitTag::A(i) => write!(f, "A{i}"),
            SplitTag::B(i) => write!(f, "B{i}"),
            SplitTag::Complement(k) => write!(f, "c{k}"),
        }
    }
}

impl FromStr for SplitTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_matches(|c| c == '(' || c == ')');
        let bad = || Error::Parse(format!("unknown split tag {s:?}"));
        let num = |rest: &str| rest.trim_start_matches('_').parse::<usize>().map_err(|_| bad());
        if let Some(rest) = s.strip_prefix(['A', 'a']) {
            return Ok(SplitTag::A(num(rest)?));
        }
        if let Some(rest) = s.strip_prefix(['B', 'b']) {
            return Ok(SplitTag::B(num(rest)?));
        }
        if let Some(rest) = s.strip_prefix("complement").or_else(|| s.strip_prefix('c')) {
            return Ok(SplitTag::Complement(num(rest)?));
        }
        let k: u8 = s.parse().map_err(|_| bad())?;
        Ok(SplitTag::Numbered(k))
    }
}

impl Serialize for SplitTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// The lifted oracle member coincides with a closed-form element.
    ClosedForm,
    /// Only available as a lift of an oracle idempotent.
    OracleLift,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdempotentRecord {
    pub block: Block,
    pub split: Option<SplitTag>,
    pub method: Method,
    pub element: AlgebraElem,
}

impl IdempotentRecord {
    /// `(1,1,0)` or `(1,1,0)/2`.
    pub fn label(&self) -> String {
        match &self.split {
            Some(tag) => format!("{}/{tag}", self.block),
            None => self.block.to_string(),
        }
    }
}

/// A unit-like element `u_i` with `u_i^3` equal, over `F_2`, to the
/// factor idempotent of level `j_i`.
#[derive(Debug, Clone)]
pub struct UElement {
    pub factor: usize,
    pub level: u32,
    pub element: AlgebraElem,
}

impl UElement {
    pub fn square(&self) -> AlgebraElem {
        self.element.square()
    }
}

fn hat_in_factor(ring: RingHandle, group: &CyclicGroup, i: usize, j: u32) -> Result<AlgebraElem> {
    Ok(AlgebraElem::hat(ring, group, &SubgroupSpec::in_factor(group, i, j)?))
}

/// `hat(a_i)` for `j = 0`, else `hat(a_i^{p^j}) - hat(a_i^{p^{j-1}})`.
pub fn factor_idempotent(
    ring: RingHandle,
    group: &CyclicGroup,
    i: usize,
    j: u32,
) -> Result<AlgebraElem> {
    let top = hat_in_factor(ring, group, i, j)?;
    if j == 0 {
        return Ok(top);
    }
    Ok(&top - &hat_in_factor(ring, group, i, j - 1)?)
}

pub fn block_idempotent(ring: RingHandle, group: &CyclicGroup, block: &Block) -> Result<AlgebraElem> {
    let mut acc = AlgebraElem::one(ring, group);
    for (i, &j) in block.levels().iter().enumerate() {
        acc = &acc * &factor_idempotent(ring, group, i, j)?;
    }
    Ok(acc)
}

/// Product of `hat(a_i)` over the factors whose level is zero.
fn hats_outside(ring: RingHandle, group: &CyclicGroup, block: &Block) -> Result<AlgebraElem> {
    let mut acc = AlgebraElem::one(ring, group);
    for (i, &j) in block.levels().iter().enumerate() {
        if j == 0 {
            acc = &acc * &hat_in_factor(ring, group, i, 0)?;
        }
    }
    Ok(acc)
}

/// `hat(a_i^{p^j}) (c + sum_{m = 0, 2, ..., p-3} a_i^{2^m p^{j-1}})`, with
/// `c = 1` when `p = 3 mod 4` and `c = 0` when `p = 1 mod 4`.
pub fn u_element(ring: RingHandle, group: &CyclicGroup, i: usize, j: u32) -> Result<UElement> {
    if i >= group.rank() {
        return Err(Error::IndexOutOfRange {
            factor: i,
            value: i as u64,
            order: group.rank() as u64,
        });
    }
    let f = group.spec().factors()[i];
    if j == 0 || j > f.exponent {
        return Err(Error::InvalidBlock {
            block: vec![j],
            reason: format!("u needs a level in 1..={} for factor {}", f.exponent, i + 1),
        });
    }
    let (p, q) = (f.prime, f.value());
    let step = p.pow(j - 1);
    let mut sum = if p % 4 == 3 {
        AlgebraElem::one(ring, group)
    } else {
        AlgebraElem::zero(ring, group)
    };
    for m in (0..=p - 3).step_by(2) {
        let e = mod_pow(2, m, q) * step % q;
        sum = &sum + &AlgebraElem::factor_power(ring, group, i, e);
    }
    Ok(UElement {
        factor: i,
        level: j,
        element: &hat_in_factor(ring, group, i, j)? * &sum,
    })
}

/// `x^{2^{t-1}}` by `t - 1` squarings.
fn frobenius_lift_power(x: &AlgebraElem) -> AlgebraElem {
    let mut y = x.clone();
    for _ in 1..x.ring().t() {
        y = y.square();
    }
    y
}

fn block_shape(block: &Block, m: usize) -> Result<Vec<usize>> {
    let idx = block.nonzero_indices();
    if idx.len() != m {
        return Err(Error::InvalidBlock {
            block: block.levels().to_vec(),
            reason: format!("expected exactly {m} nonzero entries"),
        });
    }
    Ok(idx)
}

fn u_elements(ring: RingHandle, group: &CyclicGroup, block: &Block, idx: &[usize]) -> Result<Vec<AlgebraElem>> {
    idx.iter()
        .map(|&i| Ok(u_element(ring, group, i, block.levels()[i])?.element))
        .collect()
}

fn product(ring: RingHandle, group: &CyclicGroup, xs: &[&AlgebraElem]) -> AlgebraElem {
    xs.iter()
        .fold(AlgebraElem::one(ring, group), |acc, x| &acc * *x)
}

/// The two summands of a block with exactly two nonzero levels:
/// `(u_1 u_2 + u_1^2 u_2^2)^{2^{t-1}}` and `(u_1^2 u_2 + u_1 u_2^2)^{2^{t-1}}`,
/// each times the hats of the remaining factors.
pub fn split_block_2(
    ring: RingHandle,
    group: &CyclicGroup,
    block: &Block,
) -> Result<(AlgebraElem, AlgebraElem)> {
    let idx = block_shape(block, 2)?;
    let u = u_elements(ring, group, block, &idx)?;
    let sq: Vec<_> = u.iter().map(AlgebraElem::square).collect();
    let hats = hats_outside(ring, group, block)?;
    let first = &(&u[0] * &u[1]) + &(&sq[0] * &sq[1]);
    let second = &(&sq[0] * &u[1]) + &(&u[0] * &sq[1]);
    Ok((
        &hats * &frobenius_lift_power(&first),
        &hats * &frobenius_lift_power(&second),
    ))
}

/// The four summands of a block with exactly three nonzero levels:
/// `(eps + y_k + y_k^2)^{2^{t-1}}` for `y_k` in
/// `u_1 u_2 u_3`, `u_1 u_2^2 u_3`, `u_1 u_2 u_3^2`, `u_1^2 u_2 u_3`, where
/// `eps` is the product of the three nonzero factor idempotents.
pub fn split_block_3(ring: RingHandle, group: &CyclicGroup, block: &Block) -> Result<[AlgebraElem; 4]> {
    let idx = block_shape(block, 3)?;
    let u = u_elements(ring, group, block, &idx)?;
    let sq: Vec<_> = u.iter().map(AlgebraElem::square).collect();
    let hats = hats_outside(ring, group, block)?;
    let mut eps = AlgebraElem::one(ring, group);
    for &i in &idx {
        eps = &eps * &factor_idempotent(ring, group, i, block.levels()[i])?;
    }
    let ys = [
        product(ring, group, &[&u[0], &u[1], &u[2]]),
        product(ring, group, &[&u[0], &sq[1], &u[2]]),
        product(ring, group, &[&u[0], &u[1], &sq[2]]),
        product(ring, group, &[&sq[0], &u[1], &u[2]]),
    ];
    Ok(ys.map(|y| {
        let base = &(&eps + &y) + &y.square();
        &hats * &frobenius_lift_power(&base)
    }))
}

/// The alternative splitting `[A_{i1}, A_{i2}, B_{i1}, B_{i2}]` of a block
/// with exactly three nonzero levels `i1 < i2 < i3`, where
/// `alpha = u1 u2 + u1^2 u2 + u1 u2^2`, `beta = u1 u2^2 + u1^2 u2^2 + u1 u2`,
/// `w = u3`, `A_{i1} = alpha w + alpha^2 w^2`, `A_{i2} = alpha^2 w + alpha w^2`
/// and likewise for `B` with `beta`.
pub fn split_block_ab(ring: RingHandle, group: &CyclicGroup, block: &Block) -> Result<[AlgebraElem; 4]> {
    let idx = block_shape(block, 3)?;
    let u = u_elements(ring, group, block, &idx)?;
    let sq: Vec<_> = u.iter().map(AlgebraElem::square).collect();
    let hats = hats_outside(ring, group, block)?;
    let u12 = &u[0] * &u[1];
    let alpha = &(&u12 + &(&sq[0] * &u[1])) + &(&u[0] * &sq[1]);
    let beta = &(&(&u[0] * &sq[1]) + &(&sq[0] * &sq[1])) + &u12;
    let (w, w2) = (&u[2], &sq[2]);
    let pair = |x: &AlgebraElem| {
        let x2 = x.square();
        (
            &(x * w) + &(&x2 * w2),
            &(&x2 * w) + &(x * w2),
        )
    };
    let (a1, a2) = pair(&alpha);
    let (b1, b2) = pair(&beta);
    Ok([a1, a2, b1, b2].map(|x| &hats * &frobenius_lift_power(&x)))
}

/// `(prod u_i + prod u_i^2)^{2^{t-1}}` over the nonzero levels, times the
/// remaining hats. Primitive when exactly two levels are nonzero; for three
/// or more it is idempotent but in general a sum of several primitives.
pub fn full_block_representative(
    ring: RingHandle,
    group: &CyclicGroup,
    block: &Block,
) -> Result<AlgebraElem> {
    let idx = block.nonzero_indices();
    if idx.len() < 2 {
        return Err(Error::InvalidBlock {
            block: block.levels().to_vec(),
            reason: "expected at least two nonzero entries".into(),
        });
    }
    let u = u_elements(ring, group, block, &idx)?;
    let prod_u = u.iter().fold(AlgebraElem::one(ring, group), |acc, x| &acc * x);
    let base = &prod_u + &prod_u.square();
    Ok(&hats_outside(ring, group, block)? * &frobenius_lift_power(&base))
}

/// A closed-form element tagged by the construction that produced it.
#[derive(Debug, Clone, Serialize)]
pub struct ClosedForm {
    /// `"1"` all-zero block, `"2"` one level, `"3a"`/`"3b"` two levels, `"4"` all levels.
    pub item: &'static str,
    pub block: Block,
    pub element: AlgebraElem,
}

/// Every closed-form primitive idempotent the constructions claim: the
/// all-zero block, every single-level block, both summands of every
/// two-level block, and the representative of every block with all levels
/// nonzero (`r >= 2`).
pub fn closed_form_elements(ring: RingHandle, group: &CyclicGroup) -> Result<Vec<ClosedForm>> {
    let mut out = Vec::new();
    let r = group.rank();
    for block in Block::all(group) {
        let m = block.nonzero_indices().len();
        match m {
            0 => out.push(ClosedForm {
                item: "1",
                element: block_idempotent(ring, group, &block)?,
                block: block.clone(),
            }),
            1 => out.push(ClosedForm {
                item: "2",
                element: block_idempotent(ring, group, &block)?,
                block: block.clone(),
            }),
            2 => {
                let (e1, e2) = split_block_2(ring, group, &block)?;
                out.push(ClosedForm { item: "3a", block: block.clone(), element: e1 });
                out.push(ClosedForm { item: "3b", block: block.clone(), element: e2 });
            }
            _ => {}
        }
        if r >= 2 && m == r {
            out.push(ClosedForm {
                item: "4",
                element: full_block_representative(ring, group, &block)?,
                block,
            });
        }
    }
    Ok(out)
}

/// Lifts an idempotent of `F_2 G` to `RG` as `lift(f)^{2^{t-1}}`.
pub fn lift_idempotent(f: &AlgebraElem, ring: RingHandle) -> Result<AlgebraElem> {
    if f.ring().t() != 1 || !f.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let e = frobenius_lift_power(&f.lift_from_f2(ring));
    debug_assert!(e.is_idempotent());
    Ok(e)
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyCheck {
    pub count: usize,
    pub expected_count: u64,
    pub count_matches: bool,
    pub all_idempotent: bool,
    pub pairwise_orthogonal: bool,
    pub sums_to_one: bool,
    pub reduces_to_oracle: bool,
}

impl FamilyCheck {
    pub fn all_pass(&self) -> bool {
        self.count_matches
            && self.all_idempotent
            && self.pairwise_orthogonal
            && self.sums_to_one
            && self.reduces_to_oracle
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimitiveFamily {
    pub ring: String,
    pub group: String,
    pub records: Vec<IdempotentRecord>,
    pub verification: FamilyCheck,
}

impl PrimitiveFamily {
    pub fn find(&self, block: &Block, split: Option<SplitTag>) -> Option<&IdempotentRecord> {
        self.records
            .iter()
            .find(|r| &r.block == block && r.split == split)
    }
}

/// The complete set of primitive idempotents of `RG`, labelled by block
/// and, where a closed form exists, by which summand of the block it is.
pub fn primitive_family(spec: &GroupSpec, ring: RingHandle) -> Result<PrimitiveFamily> {
    let report = validate_group(spec);
    if !report.is_valid() {
        return Err(Error::InvalidGroup(report));
    }
    let group = CyclicGroup::new(spec.clone())?;
    let f2 = RingHandle::f2();
    let oracle = primitive_idempotents_of(&group)?;

    let blocks = Block::all(&group);
    let block_f2: Vec<AlgebraElem> = blocks
        .iter()
        .map(|b| block_idempotent(f2, &group, b))
        .collect::<Result<_>>()?;

    let mut by_block: Vec<Vec<AlgebraElem>> = vec![Vec::new(); blocks.len()];
    for f in &oracle {
        let slot = block_f2
            .iter()
            .position(|b| &(f * b) == f)
            .expect("every primitive idempotent lies below exactly one block");
        by_block[slot].push(lift_idempotent(f, ring)?);
    }

    let mut records = Vec::with_capacity(oracle.len());
    for (block, members) in blocks.iter().zip(by_block) {
        records.extend(label_block(ring, &group, block, members)?);
    }

    let verification = verify_family(spec, &group, ring, &records, &oracle);
    Ok(PrimitiveFamily {
        ring: ring.designator(),
        group: spec.designator(),
        records,
        verification,
    })
}

fn label_block(
    ring: RingHandle,
    group: &CyclicGroup,
    block: &Block,
    members: Vec<AlgebraElem>,
) -> Result<Vec<IdempotentRecord>> {
    let m = block.nonzero_indices().len();
    let closed: Vec<(SplitTag, AlgebraElem)> = match m {
        0 | 1 => {
            let e = block_idempotent(ring, group, block)?;
            return Ok(members
                .into_iter()
                .map(|element| IdempotentRecord {
                    block: block.clone(),
                    split: None,
                    method: if element == e {
                        Method::ClosedForm
                    } else {
                        Method::OracleLift
                    },
                    element,
                })
                .collect());
        }
        2 => {
            let (e1, e2) = split_block_2(ring, group, block)?;
            vec![(SplitTag::Numbered(1), e1), (SplitTag::Numbered(2), e2)]
        }
        3 => split_block_3(ring, group, block)?
            .into_iter()
            .enumerate()
            .map(|(k, e)| (SplitTag::Numbered(k as u8 + 1), e))
            .collect(),
        _ => vec![(
            SplitTag::Numbered(1),
            full_block_representative(ring, group, block)?,
        )],
    };

    let mut labelled = Vec::new();
    let mut rest = Vec::new();
    for element in members {
        match closed.iter().find(|(_, e)| *e == element) {
            Some((tag, _)) => labelled.push(IdempotentRecord {
                block: block.clone(),
                split: Some(*tag),
                method: Method::ClosedForm,
                element,
            }),
            None => rest.push(element),
        }
    }
    labelled.sort_by_key(|r| r.split);
    labelled.extend(rest.into_iter().enumerate().map(|(k, element)| IdempotentRecord {
        block: block.clone(),
        split: Some(SplitTag::Complement(k + 1)),
        method: Method::OracleLift,
        element,
    }));
    Ok(labelled)
}

fn verify_family(
    spec: &GroupSpec,
    group: &CyclicGroup,
    ring: RingHandle,
    records: &[IdempotentRecord],
    oracle: &[AlgebraElem],
) -> FamilyCheck {
    let expected_count = component_count_formula(spec);
    let mut sum = AlgebraElem::zero(ring, group);
    let mut pairwise_orthogonal = true;
    for (i, r) in records.iter().enumerate() {
        sum = &sum + &r.element;
        for s in &records[i + 1..] {
            if !(&r.element * &s.element).is_zero() {
                pairwise_orthogonal = false;
            }
        }
    }
    let mut reduced: Vec<_> = records.iter().map(|r| r.element.reduce_to_f2()).collect();
    let mut want = oracle.to_vec();
    reduced.sort_by(|a, b| a.payloads().cmp(b.payloads()));
    want.sort_by(|a, b| a.payloads().cmp(b.payloads()));
    FamilyCheck {
        count: records.len(),
        expected_count,
        count_matches: records.len() as u64 == expected_count,
        all_idempotent: records.iter().all(|r| r.element.is_idempotent()),
        pairwise_orthogonal,
        sums_to_one: sum == AlgebraElem::one(ring, group),
        reduces_to_oracle: reduced == want,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(d: &str) -> CyclicGroup {
        CyclicGroup::parse(d).unwrap()
    }

    fn ring(d: &str) -> RingHandle {
        RingHandle::parse(d).unwrap()
    }

    fn poly(r: RingHandle, grp: &CyclicGroup, cs: &[i64]) -> AlgebraElem {
        let terms: Vec<_> = cs
            .iter()
            .enumerate()
            .map(|(k, &v)| (vec![k as u64], r.from_int(v)))
            .collect();
        AlgebraElem::from_terms(r, grp, &terms).unwrap()
    }

    #[test]
    fn block_idempotent_examples() {
        let c3 = g("3^1");
        let f2 = RingHandle::f2();
        let b1 = Block::new(&c3, &[1]).unwrap();
        assert_eq!(block_idempotent(f2, &c3, &b1).unwrap(), poly(f2, &c3, &[0, 1, 1]));
        let b0 = Block::new(&c3, &[0]).unwrap();
        assert_eq!(
            block_idempotent(ring("z4"), &c3, &b0).unwrap(),
            AlgebraElem::hat(ring("z4"), &c3, &SubgroupSpec::whole(&c3))
        );
        assert!(Block::new(&c3, &[2]).is_err());
        assert!(Block::new(&c3, &[1, 0]).is_err());
    }

    #[test]
    fn u_examples() {
        let f2 = RingHandle::f2();
        let c3 = g("3^1");
        let u = u_element(f2, &c3, 0, 1).unwrap().element;
        // hat(a^3) = 1 in C3, so u = 1 + a.
        assert_eq!(u, poly(f2, &c3, &[1, 1]));
        assert_eq!(u.pow(3), poly(f2, &c3, &[0, 1, 1]));

        let c5 = g("5^1");
        let u = u_element(f2, &c5, 0, 1).unwrap().element;
        assert_eq!(u, poly(f2, &c5, &[0, 1, 0, 0, 1]));
        assert_eq!(u.pow(3), poly(f2, &c5, &[0, 1, 1, 1, 1]));
        assert_ne!(u, u.pow(3));
    }

    #[test]
    fn u_cubes_to_factor_idempotent() {
        let f2 = RingHandle::f2();
        for d in ["3^2,5^1", "3^1,5^1,11^1", "5^2"] {
            let grp = g(d);
            for i in 0..grp.rank() {
                for j in 1..=grp.spec().exponents()[i] {
                    let u = u_element(f2, &grp, i, j).unwrap();
                    let eps = factor_idempotent(f2, &grp, i, j).unwrap();
                    assert_eq!(u.element.pow(3), eps, "{d} {i} {j}");
                    assert_ne!(u.element, eps);
                    assert_eq!(&u.element * &eps, u.element);
                }
            }
        }
        assert!(u_element(f2, &g("3^1"), 0, 0).is_err());
    }

    #[test]
    fn lift_examples() {
        let c3 = g("3^1");
        let f2 = RingHandle::f2();
        let z4 = ring("z4");
        let all = poly(f2, &c3, &[1, 1, 1]);
        assert_eq!(lift_idempotent(&all, z4).unwrap(), poly(z4, &c3, &[3, 3, 3]));
        assert!(lift_idempotent(&AlgebraElem::zero(f2, &c3), z4).unwrap().is_zero());
        assert_eq!(
            lift_idempotent(&AlgebraElem::one(f2, &c3), z4).unwrap(),
            AlgebraElem::one(z4, &c3)
        );
        let r = ring("f2u3");
        let e = lift_idempotent(&poly(f2, &c3, &[0, 1, 1]), r).unwrap();
        assert!(e.is_idempotent());
        assert_eq!(e.reduce_to_f2(), poly(f2, &c3, &[0, 1, 1]));
        assert!(matches!(
            lift_idempotent(&poly(f2, &c3, &[1, 1]), z4),
            Err(Error::NotIdempotent)
        ));
    }

    #[test]
    fn two_index_split_over_z4() {
        let c15 = g("3^1,5^1");
        let z4 = ring("z4");
        let b = Block::new(&c15, &[1, 1]).unwrap();
        let (e1, e2) = split_block_2(z4, &c15, &b).unwrap();
        assert!(e1.is_idempotent() && e2.is_idempotent());
        assert!((&e1 * &e2).is_zero());
        assert_eq!(&e1 + &e2, block_idempotent(z4, &c15, &b).unwrap());
        assert!(split_block_2(z4, &c15, &Block::new(&c15, &[1, 0]).unwrap()).is_err());
    }

    #[test]
    fn three_index_splits() {
        let grp = g("3^1,5^1,11^1");
        let f2 = RingHandle::f2();
        let b = Block::new(&grp, &[1, 1, 1]).unwrap();
        let oracle = primitive_idempotents_of(&grp).unwrap();
        let whole = block_idempotent(f2, &grp, &b).unwrap();
        for parts in [split_block_3(f2, &grp, &b).unwrap(), split_block_ab(f2, &grp, &b).unwrap()] {
            let mut sum = AlgebraElem::zero(f2, &grp);
            for (k, e) in parts.iter().enumerate() {
                assert!(oracle.contains(e), "summand {k}");
                for other in &parts[k + 1..] {
                    assert!((e * other).is_zero());
                }
                sum = &sum + e;
            }
            assert_eq!(sum, whole);
        }
        // The representative with every level nonzero covers three summands.
        let rep = full_block_representative(f2, &grp, &b).unwrap();
        assert!(rep.is_idempotent());
        let covered = oracle.iter().filter(|f| &(*f * &rep) == *f).count();
        assert_eq!(covered, 3);
    }

    #[test]
    fn c3_family_over_z4() {
        let fam = primitive_family(&GroupSpec::parse("3^1").unwrap(), ring("z4")).unwrap();
        assert!(fam.verification.all_pass());
        let shown: Vec<String> = fam.records.iter().map(|r| r.element.to_string()).collect();
        assert_eq!(shown, ["3 + 3*a1 + 3*a1^2", "2 + a1 + a1^2"]);
        assert!(fam.records.iter().all(|r| r.method == Method::ClosedForm));
    }

    #[test]
    fn families_verify() {
        for d in ["3^1,5^1", "3^2,5^1", "3^1,5^1,11^1"] {
            for r in ["z2", "z4", "z8", "f2u2", "f2u3"] {
                let spec = GroupSpec::parse(d).unwrap();
                let fam = primitive_family(&spec, ring(r)).unwrap();
                assert!(fam.verification.all_pass(), "{d} {r}: {:?}", fam.verification);
                // Blocks with at most three nonzero levels are fully closed-form.
                assert!(fam.records.iter().all(|x| x.method == Method::ClosedForm), "{d} {r}");
            }
        }
    }

    #[test]
    fn closed_forms_at_c15_are_members() {
        let spec = GroupSpec::parse("3^1,5^1").unwrap();
        let z4 = ring("z4");
        let fam = primitive_family(&spec, z4).unwrap();
        let grp = g("3^1,5^1");
        let items = closed_form_elements(z4, &grp).unwrap();
        let tags: Vec<_> = items.iter().map(|p| p.item).collect();
        assert_eq!(tags, ["1", "2", "2", "3a", "3b", "4"]);
        for p in items {
            assert!(fam.records.iter().any(|r| r.element == p.element), "{}", p.item);
        }
    }

    #[test]
    fn split_tags_parse() {
        for s in ["1", "4", "A1", "B3", "c2"] {
            assert_eq!(s.parse::<SplitTag>().unwrap().to_string(), s);
        }
        assert_eq!("A_2".parse::<SplitTag>().unwrap(), SplitTag::A(2));
        assert_eq!("complement3".parse::<SplitTag>().unwrap(), SplitTag::Complement(3));
        assert!("x".parse::<SplitTag>().is_err());
    }

    #[test]
    fn component_degrees_from_blocks() {
        let spec = GroupSpec::parse("3^1,5^1,11^1").unwrap();
        let grp = g("3^1,5^1,11^1");
        let total: u64 = Block::all(&grp)
            .iter()
            .map(|b| b.component_degree(&spec) * b.split_count() as u64)
            .sum();
        assert_eq!(total, 165);
        assert_eq!(Block::new(&grp, &[1, 1, 1]).unwrap().component_degree(&spec), 20);
    }
}
