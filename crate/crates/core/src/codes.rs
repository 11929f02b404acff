//! Cyclic codes `C = (+)_j RG s^{k_j} e_j` for pairwise orthogonal
//! idempotents `e_j`: sizes, exact minimum weights, closed-form weights and
//! bounds.
//!
//! Two independent brute-force routes exist. [`enumerate_codewords`] builds
//! the code as the additive closure of the translates `g s^k e`.
//! [`min_weight_exact`] never materializes the code: it walks every
//! codeword once along a reflected Gray code over an `R`-basis of the code,
//! updating the weight incrementally.

use std::cmp::Ordering;

use num_bigint::BigUint;
use serde::Serialize;

use crate::arith::GroupSpec;
use crate::chain_ring::{RingFamily, RingHandle};
use crate::error::{Error, Result};
use crate::f2_oracle::ideal_dimension_f2;
use crate::group_algebra::{AlgebraElem, CyclicGroup};
use crate::idempotents::{Block, SplitTag};

/// Default enumeration budget in codewords.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

/// Which family member a component is, when known.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentLabel {
    pub block: Block,
    /// `None` for the whole block idempotent.
    pub split: Option<SplitTag>,
}

impl ComponentLabel {
    /// `F_2`-dimension the label predicts for `F_2 G e`.
    pub fn degree(&self, spec: &GroupSpec) -> u64 {
        let d = self.block.component_degree(spec);
        match self.split {
            Some(_) => d,
            None => d * self.block.split_count() as u64,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CodeComponent {
    pub idempotent: AlgebraElem,
    /// Exponent of `s`; `k = t` gives the zero code.
    pub k: u32,
    pub label: Option<ComponentLabel>,
}

impl CodeComponent {
    pub fn new(idempotent: AlgebraElem, k: u32, label: Option<ComponentLabel>) -> Self {
        Self {
            idempotent,
            k,
            label,
        }
    }

    /// `s^k e`.
    pub fn generator(&self) -> AlgebraElem {
        let s = self.idempotent.ring().uniformizer().pow(self.k as u64);
        self.idempotent.scalar_mul(&s).expect("same ring")
    }

    /// `dim_{F_2} F_2 G e`.
    pub fn rank(&self) -> u64 {
        ideal_dimension_f2(&self.idempotent) as u64
    }

    fn size_log2(&self) -> u64 {
        (self.idempotent.ring().t() - self.k) as u64 * self.rank()
    }
}

/// A direct sum of components over one ring and group.
#[derive(Debug, Clone)]
pub struct CodeSpec {
    ring: RingHandle,
    group: CyclicGroup,
    components: Vec<CodeComponent>,
}

impl CodeSpec {
    pub fn new(ring: RingHandle, group: &CyclicGroup, components: Vec<CodeComponent>) -> Result<Self> {
        for c in &components {
            let e = &c.idempotent;
            if e.ring() != ring {
                return Err(Error::MixedRings {
                    left: ring.designator(),
                    right: e.ring().designator(),
                });
            }
            if e.group() != group {
                return Err(Error::MixedGroups {
                    left: group.to_string(),
                    right: e.group().to_string(),
                });
            }
            if c.k > ring.t() {
                return Err(Error::KOutOfRange { k: c.k, t: ring.t() });
            }
            if !e.is_idempotent() {
                return Err(Error::NotIdempotent);
            }
        }
        for i in 0..components.len() {
            for j in i + 1..components.len() {
                if !(&components[i].idempotent * &components[j].idempotent).is_zero() {
                    return Err(Error::NotOrthogonal(i, j));
                }
            }
        }
        Ok(Self {
            ring,
            group: group.clone(),
            components,
        })
    }

    /// `<s^k e>`.
    pub fn single(idempotent: AlgebraElem, k: u32, label: Option<ComponentLabel>) -> Result<Self> {
        let ring = idempotent.ring();
        let group = idempotent.group().clone();
        Self::new(ring, &group, vec![CodeComponent::new(idempotent, k, label)])
    }

    pub fn ring(&self) -> RingHandle {
        self.ring
    }

    pub fn group(&self) -> &CyclicGroup {
        &self.group
    }

    pub fn components(&self) -> &[CodeComponent] {
        &self.components
    }

    /// `log_2 |C| = sum_j (t - k_j) dim F_2 G e_j`.
    pub fn size_log2(&self) -> u64 {
        self.components.iter().map(CodeComponent::size_log2).sum()
    }

    pub fn is_zero_code(&self) -> bool {
        self.size_log2() == 0
    }

    fn check_budget(&self, budget: u64) -> Result<()> {
        let log2 = self.size_log2();
        if log2 >= 64 || (1u64 << log2) > budget {
            return Err(Error::BudgetExceeded {
                predicted_log2: log2,
                budget,
            });
        }
        Ok(())
    }
}

/// `|C| = 2^{log2}`, kept as an exponent because it overflows quickly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CodeSize {
    pub log2: u64,
}

impl CodeSize {
    pub fn exact(&self) -> BigUint {
        BigUint::from(1u8) << self.log2
    }

    pub fn as_u64(&self) -> Option<u64> {
        (self.log2 < 64).then(|| 1u64 << self.log2)
    }
}

/// `2^{(t-k) d}` with `d` the degree predicted by the label.
pub fn code_size_formula(
    label: &ComponentLabel,
    k: u32,
    ring: RingHandle,
    spec: &GroupSpec,
) -> Result<CodeSize> {
    if k > ring.t() {
        return Err(Error::KOutOfRange { k, t: ring.t() });
    }
    Ok(CodeSize {
        log2: (ring.t() - k) as u64 * label.degree(spec),
    })
}

/// Bit-packed codewords: `t` bits per coordinate, coordinates never straddle
/// a `u64`.
#[derive(Debug, Clone, Copy)]
struct Packing {
    ring: RingHandle,
    n: usize,
    per_word: usize,
    stride: usize,
    high: u64,
    low: u64,
}

impl Packing {
    fn new(ring: RingHandle, n: usize) -> Self {
        let t = ring.t() as usize;
        let per_word = 64 / t;
        let stride = n.div_ceil(per_word);
        let mut high = 0u64;
        let mut low = 0u64;
        for lane in 0..per_word {
            high |= 1 << (lane * t + t - 1);
            low |= (((1u64 << t) - 1) >> 1) << (lane * t);
        }
        Self {
            ring,
            n,
            per_word,
            stride,
            high,
            low,
        }
    }

    fn pack(&self, payloads: &[u32], out: &mut [u64]) {
        let t = self.ring.t() as usize;
        out.fill(0);
        for (k, &c) in payloads.iter().enumerate() {
            out[k / self.per_word] |= (c as u64) << ((k % self.per_word) * t);
        }
    }

    fn unpack(&self, word: &[u64]) -> Vec<u32> {
        let t = self.ring.t() as usize;
        let mask = self.ring.mask() as u64;
        (0..self.n)
            .map(|k| ((word[k / self.per_word] >> ((k % self.per_word) * t)) & mask) as u32)
            .collect()
    }

    fn add(&self, a: &[u64], b: &[u64], out: &mut [u64]) {
        match self.ring.family() {
            RingFamily::IntegerModular => {
                let h = self.high;
                for ((o, &x), &y) in out.iter_mut().zip(a).zip(b) {
                    *o = ((x & !h).wrapping_add(y & !h)) ^ ((x ^ y) & h);
                }
            }
            RingFamily::BinaryPolynomial => {
                for ((o, &x), &y) in out.iter_mut().zip(a).zip(b) {
                    *o = x ^ y;
                }
            }
        }
    }

    fn weight(&self, word: &[u64]) -> usize {
        word.iter()
            .map(|&x| ((((x & self.low).wrapping_add(self.low)) | x) & self.high).count_ones() as usize)
            .sum()
    }
}

/// The codewords of a code, sorted by packed representation.
#[derive(Debug, Clone)]
pub struct CodewordSet {
    packing: Packing,
    group: CyclicGroup,
    words: Vec<u64>,
}

impl CodewordSet {
    pub fn len(&self) -> usize {
        self.words.len() / self.packing.stride
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    fn word(&self, i: usize) -> &[u64] {
        let s = self.packing.stride;
        &self.words[i * s..(i + 1) * s]
    }

    fn element(&self, word: &[u64]) -> AlgebraElem {
        AlgebraElem::from_payloads(self.packing.ring, &self.group, self.packing.unpack(word))
            .expect("packed words have length n")
    }

    pub fn contains(&self, x: &AlgebraElem) -> bool {
        if x.ring() != self.packing.ring || x.group() != &self.group {
            return false;
        }
        let mut w = vec![0; self.packing.stride];
        self.packing.pack(x.payloads(), &mut w);
        self.find(&w).is_ok()
    }

    fn find(&self, w: &[u64]) -> std::result::Result<usize, usize> {
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.word(mid).cmp(w) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Ok(mid),
            }
        }
        Err(lo)
    }

    pub fn iter(&self) -> impl Iterator<Item = AlgebraElem> + '_ {
        (0..self.len()).map(move |i| self.element(self.word(i)))
    }

    /// Least weight over nonzero words and a word attaining it.
    pub fn min_weight(&self) -> Option<(usize, AlgebraElem)> {
        let mut best: Option<(usize, usize)> = None;
        for i in 0..self.len() {
            let w = self.packing.weight(self.word(i));
            if w > 0 && best.is_none_or(|(b, _)| w < b) {
                best = Some((w, i));
            }
        }
        best.map(|(w, i)| (w, self.element(self.word(i))))
    }

    fn sort_dedup(&mut self) {
        let s = self.packing.stride;
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_unstable_by(|&a, &b| self.words[a * s..(a + 1) * s].cmp(&self.words[b * s..(b + 1) * s]));
        let mut out: Vec<u64> = Vec::with_capacity(self.words.len());
        for i in idx {
            let w = &self.words[i * s..(i + 1) * s];
            if out.len() >= s && &out[out.len() - s..] == w {
                continue;
            }
            out.extend_from_slice(w);
        }
        self.words = out;
    }
}

/// The code as the additive closure of `{g s^k e : g in G}` over all
/// components. Refuses when the predicted size exceeds `budget`.
pub fn enumerate_codewords(code: &CodeSpec, budget: u64) -> Result<CodewordSet> {
    code.check_budget(budget)?;
    let ring = code.ring;
    let n = code.group.order();
    let packing = Packing::new(ring, n);
    let stride = packing.stride;
    let mut set = CodewordSet {
        packing,
        group: code.group.clone(),
        words: vec![0; stride],
    };
    let scalars: Vec<_> = ring.enumerate_elements()?;
    let mut packed = vec![0u64; stride];
    let mut sum = vec![0u64; stride];
    for comp in &code.components {
        if comp.k >= ring.t() {
            continue;
        }
        let base = comp.generator();
        for g in 0..n {
            let gen = base.shifted(g);
            // Smallest i with s^i gen already in the span; the new words are
            // span + c gen for c running over R / s^i R.
            let mut i = 0u32;
            while i < ring.t() {
                let probe = gen
                    .scalar_mul(&ring.uniformizer().pow(i as u64))
                    .expect("same ring");
                packing.pack(probe.payloads(), &mut packed);
                if set.find(&packed).is_ok() {
                    break;
                }
                i += 1;
            }
            if i == 0 {
                continue;
            }
            let old_len = set.len();
            let mut grown = Vec::with_capacity(set.words.len() << i);
            grown.extend_from_slice(&set.words);
            for c in scalars.iter().skip(1).take((1usize << i) - 1) {
                let cg = gen.scalar_mul(c).expect("same ring");
                packing.pack(cg.payloads(), &mut packed);
                for w in 0..old_len {
                    packing.add(set.word(w), &packed, &mut sum);
                    grown.extend_from_slice(&sum);
                }
            }
            set.words = grown;
            set.sort_dedup();
        }
    }
    Ok(set)
}

#[derive(Debug, Clone, Serialize)]
pub struct WeightWitness {
    pub weight: u64,
    pub witness: AlgebraElem,
}

/// Exact minimum weight by visiting every codeword once.
pub fn min_weight_exact(code: &CodeSpec, budget: u64) -> Result<WeightWitness> {
    if code.is_zero_code() {
        return Err(Error::ZeroCode);
    }
    code.check_budget(budget)?;
    let ring = code.ring;
    let n = code.group.order();

    // An R-basis: translates g e_j whose reductions mod s are independent.
    struct Digit {
        up: Vec<Vec<(u32, u32)>>,
        down: Vec<Vec<(u32, u32)>>,
    }
    let mut digits: Vec<Digit> = Vec::new();
    for comp in &code.components {
        if comp.k >= ring.t() {
            continue;
        }
        let ideal = ring.ideal_elements(comp.k)?;
        let rank = comp.rank() as usize;
        let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
        for g in 0..n {
            if pivots.len() == rank {
                break;
            }
            let v = comp.idempotent.shifted(g);
            let mut bits = crate::f2_oracle::pack_bits(v.payloads());
            for (col, row) in &pivots {
                if bits[col / 64] >> (col % 64) & 1 == 1 {
                    for (x, y) in bits.iter_mut().zip(row) {
                        *x ^= y;
                    }
                }
            }
            let Some(col) = (0..n).find(|&c| bits[c / 64] >> (c % 64) & 1 == 1) else {
                continue;
            };
            for (_, row) in pivots.iter_mut() {
                if row[col / 64] >> (col % 64) & 1 == 1 {
                    for (x, y) in row.iter_mut().zip(&bits) {
                        *x ^= y;
                    }
                }
            }
            pivots.push((col, bits));
            let sparse = |c: &crate::chain_ring::RingElem| -> Vec<(u32, u32)> {
                v.scalar_mul(c)
                    .expect("same ring")
                    .payloads()
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| p != 0)
                    .map(|(k, &p)| (k as u32, p))
                    .collect()
            };
            let steps: Vec<_> = ideal
                .windows(2)
                .map(|w| w[1].sub(&w[0]).expect("same ring"))
                .collect();
            digits.push(Digit {
                up: steps.iter().map(&sparse).collect(),
                down: steps.iter().map(|c| sparse(&c.neg())).collect(),
            });
        }
        debug_assert_eq!(pivots.len(), rank);
    }

    // Reflected mixed-radix Gray code (loopless, focus pointers).
    let m = digits.len();
    let radix: Vec<usize> = digits.iter().map(|d| d.up.len() + 1).collect();
    let mut a = vec![0usize; m];
    let mut dir = vec![true; m];
    let mut focus: Vec<usize> = (0..=m).collect();
    let mut word = vec![0u32; n];
    let mut weight = 0usize;
    let mut best: Option<(usize, Vec<u32>)> = None;
    loop {
        let j = focus[0];
        focus[0] = 0;
        if j == m {
            break;
        }
        let delta = if dir[j] {
            a[j] += 1;
            &digits[j].up[a[j] - 1]
        } else {
            a[j] -= 1;
            &digits[j].down[a[j]]
        };
        for &(k, d) in delta {
            let old = word[k as usize];
            let new = ring.add_raw(old, d);
            word[k as usize] = new;
            weight = weight + (new != 0) as usize - (old != 0) as usize;
        }
        if a[j] == 0 || a[j] == radix[j] - 1 {
            dir[j] = !dir[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
        if weight > 0 && best.as_ref().is_none_or(|(b, _)| weight < *b) {
            best = Some((weight, word.clone()));
        }
    }
    let (w, coeffs) = best.ok_or(Error::ZeroCode)?;
    Ok(WeightWitness {
        weight: w as u64,
        witness: AlgebraElem::from_payloads(ring, &code.group, coeffs)?,
    })
}

/// Closed-form minimum weight: `|G|` for the all-zero block and
/// `2 p_{i}^{n_i - j_i} prod_{l != i} p_l^{n_l}` for a single-level block.
/// `None` for split or multi-level components.
pub fn min_weight_formula(label: &ComponentLabel, spec: &GroupSpec) -> Option<u64> {
    if label.split.is_some() {
        return None;
    }
    let idx = label.block.nonzero_indices();
    match idx.len() {
        0 => Some(spec.order()),
        1 => {
            let i = idx[0];
            let f = spec.factors()[i];
            let j = label.block.levels()[i];
            Some(2 * spec.cofactor(i) * f.prime.pow(f.exponent - j))
        }
        _ => None,
    }
}

/// `c * prod_{i in S} p_i^{n_i - j_i} * prod_{i not in S} p_i^{n_i}` with
/// `c = 4` for two nonzero levels and `c = 2^{m-1}` for `m >= 3`.
pub fn min_weight_lower_bound(label: &ComponentLabel, spec: &GroupSpec) -> Result<u64> {
    let idx = label.block.nonzero_indices();
    let m = idx.len();
    if m < 2 {
        return Err(Error::InvalidBlock {
            block: label.block.levels().to_vec(),
            reason: "lower bound needs at least two nonzero entries".into(),
        });
    }
    let c = if m == 2 { 4 } else { 1u64 << (m - 1) };
    let mut prod = 1u64;
    for (i, f) in spec.factors().iter().enumerate() {
        let j = label.block.levels()[i];
        prod *= f.prime.pow(f.exponent - j);
    }
    Ok(c * prod)
}

#[derive(Debug, Clone, Serialize)]
pub struct UpperBound {
    pub weight: u64,
    pub witness: AlgebraElem,
    pub probe: String,
}

/// Largest number of `gamma` choices tried per component.
const MAX_PROBES: usize = 4096;

/// The least weight among a fixed set of verified codewords of `<s^k e>`:
/// `s^k e` itself and, for labelled components, the words
/// `s^k prod_{i in S} (1 - a_i^{c_i p_i^{j_i - 1}}) hat(H)` (or their
/// projections by `e`), with `H = prod_{i in S} <a_i^{p_i^{j_i}}> x prod_{i not in S} <a_i>`.
pub fn min_weight_upper_bound(component: &CodeComponent) -> Result<UpperBound> {
    let e = &component.idempotent;
    let ring = e.ring();
    let group = e.group();
    if component.k >= ring.t() {
        return Err(Error::KOutOfRange {
            k: component.k,
            t: ring.t(),
        });
    }
    let sk = ring.uniformizer().pow(component.k as u64);
    let generator = component.generator();
    let mut best = UpperBound {
        weight: generator.weight() as u64,
        witness: generator,
        probe: "s^k e".into(),
    };
    let Some(label) = &component.label else {
        return Ok(best);
    };
    let spec = group.spec();
    let idx = label.block.nonzero_indices();
    let mut steps: Vec<u64> = spec.factors().iter().map(|_| 1).collect();
    for &i in &idx {
        steps[i] = spec.factors()[i].prime.pow(label.block.levels()[i]);
    }
    let hat = AlgebraElem::hat(
        ring,
        group,
        &crate::group_algebra::SubgroupSpec::new(group, &steps)?,
    );
    let mut choice: Vec<u64> = vec![1; idx.len()];
    for _ in 0..MAX_PROBES {
        let mut probe = hat.scalar_mul(&sk)?;
        for (slot, &i) in idx.iter().enumerate() {
            let f = spec.factors()[i];
            let exp = choice[slot] * f.prime.pow(label.block.levels()[i] - 1);
            let one = AlgebraElem::one(ring, group);
            probe = &probe * &(&one - &AlgebraElem::factor_power(ring, group, i, exp));
        }
        let projected = &probe * e;
        let (word, how) = if projected == probe {
            (probe, "gamma probe")
        } else {
            (projected, "gamma probe times e")
        };
        let w = word.weight() as u64;
        if w > 0 && w < best.weight {
            let cs: Vec<String> = choice.iter().map(u64::to_string).collect();
            best = UpperBound {
                weight: w,
                witness: word,
                probe: format!("{how}, c = ({})", cs.join(",")),
            };
        }
        // Next choice of exponents c_i in 1..p_i - 1.
        let mut slot = 0;
        loop {
            if slot == idx.len() {
                return Ok(best);
            }
            let p = spec.factors()[idx[slot]].prime;
            choice[slot] += 1;
            if choice[slot] < p {
                break;
            }
            choice[slot] = 1;
            slot += 1;
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SizeMethod {
    Formula,
    Enumeration,
    BothAgree,
    /// `2^{sum (t - k) rank}` from the `F_2` rank of each idempotent.
    Dimension,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightMethod {
    Formula,
    Enumeration,
    BothAgree,
    BoundsOnly,
    /// The zero code has no nonzero word.
    Undefined,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentReport {
    pub block: Option<Block>,
    pub split: Option<SplitTag>,
    pub k: u32,
    pub size_log2: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CodeReport {
    pub ring: String,
    pub group: String,
    pub components: Vec<ComponentReport>,
    /// Decimal string; sizes overflow 64 bits quickly.
    pub size: String,
    pub size_log2: u64,
    pub size_method: SizeMethod,
    pub min_weight: Option<u64>,
    pub lower_bound: Option<u64>,
    pub upper_bound: Option<u64>,
    pub weight_method: WeightMethod,
    pub witness: Option<AlgebraElem>,
    /// `Some(true)` when the exact weight equals the lower bound.
    pub lower_bound_attained: Option<bool>,
    /// `lower_bound <= min_weight <= upper_bound` for whatever is present.
    pub bounds_consistent: bool,
}

/// Size and weight findings, recording which method produced each number.
pub fn analyze_code(code: &CodeSpec, budget: u64) -> Result<CodeReport> {
    let ring = code.ring;
    let spec = code.group.spec();
    let dim_log2 = code.size_log2();

    let formula_log2 = code
        .components
        .iter()
        .map(|c| match &c.label {
            Some(l) => code_size_formula(l, c.k, ring, spec).map(|s| Some(s.log2)),
            None => Ok(None),
        })
        .collect::<Result<Option<Vec<u64>>>>()?
        .map(|v| v.iter().sum::<u64>());
    if let Some(f) = formula_log2 {
        if f != dim_log2 {
            return Err(Error::FormulaMismatch {
                what: "code size".into(),
                formula: format!("2^{f}"),
                enumerated: format!("2^{dim_log2}"),
            });
        }
    }

    let in_budget = code.check_budget(budget).is_ok();
    let enumerated = if in_budget {
        let set = enumerate_codewords(code, budget)?;
        let len = set.len() as u64;
        if len != 1u64 << dim_log2 {
            return Err(Error::FormulaMismatch {
                what: "code size".into(),
                formula: format!("2^{dim_log2}"),
                enumerated: len.to_string(),
            });
        }
        true
    } else {
        false
    };
    let size_method = match (formula_log2.is_some(), enumerated) {
        (true, true) => SizeMethod::BothAgree,
        (true, false) => SizeMethod::Formula,
        (false, true) => SizeMethod::Enumeration,
        (false, false) => SizeMethod::Dimension,
    };

    let live: Vec<&CodeComponent> = code.components.iter().filter(|c| c.k < ring.t()).collect();
    let mut report = CodeReport {
        ring: ring.designator(),
        group: spec.designator(),
        components: code
            .components
            .iter()
            .map(|c| ComponentReport {
                block: c.label.as_ref().map(|l| l.block.clone()),
                split: c.label.as_ref().and_then(|l| l.split),
                k: c.k,
                size_log2: c.size_log2(),
            })
            .collect(),
        size: CodeSize { log2: dim_log2 }.exact().to_string(),
        size_log2: dim_log2,
        size_method,
        min_weight: None,
        lower_bound: None,
        upper_bound: None,
        weight_method: WeightMethod::Undefined,
        witness: None,
        lower_bound_attained: None,
        bounds_consistent: true,
    };
    if live.is_empty() {
        return Ok(report);
    }

    let mut formula_weight = None;
    if let [only] = live[..] {
        if let Some(l) = &only.label {
            formula_weight = min_weight_formula(l, spec);
            report.lower_bound = min_weight_lower_bound(l, spec).ok();
        }
    }
    let mut upper: Option<UpperBound> = None;
    for c in &live {
        let ub = min_weight_upper_bound(c)?;
        if upper.as_ref().is_none_or(|u| ub.weight < u.weight) {
            upper = Some(ub);
        }
    }
    let upper = upper.expect("at least one live component");
    report.upper_bound = Some(upper.weight);

    let exact = if in_budget {
        Some(min_weight_exact(code, budget)?)
    } else {
        None
    };
    match (formula_weight, exact) {
        (Some(f), Some(x)) => {
            if f != x.weight {
                return Err(Error::FormulaMismatch {
                    what: "minimum weight".into(),
                    formula: f.to_string(),
                    enumerated: x.weight.to_string(),
                });
            }
            report.min_weight = Some(f);
            report.weight_method = WeightMethod::BothAgree;
            report.witness = Some(x.witness);
        }
        (Some(f), None) => {
            report.min_weight = Some(f);
            report.weight_method = WeightMethod::Formula;
        }
        (None, Some(x)) => {
            report.min_weight = Some(x.weight);
            report.weight_method = WeightMethod::Enumeration;
            report.witness = Some(x.witness);
        }
        (None, None) => {
            report.weight_method = WeightMethod::BoundsOnly;
            report.witness = Some(upper.witness);
        }
    }
    if let (Some(lb), Some(w)) = (report.lower_bound, report.min_weight) {
        report.lower_bound_attained = Some(lb == w);
    }
    let lo = report.lower_bound.unwrap_or(0);
    let hi = report.upper_bound.unwrap_or(u64::MAX);
    report.bounds_consistent = lo <= hi && report.min_weight.is_none_or(|w| lo <= w && w <= hi);
    Ok(report)
}
