//! Ground truth over `F_2 G`, computed without any closed-form construction.
//!
//! Every idempotent of `F_2 G` is fixed by `x -> x^2`, hence constant on the
//! 2-cyclotomic cosets, and the coset sums span the Boolean algebra of all
//! idempotents. Refining `{1}` by every coset sum therefore ends at the atoms
//! of that algebra, which are the primitive idempotents.

use crate::arith::{cyclotomic_cosets, validate_group, GroupSpec};
use crate::chain_ring::RingHandle;
use crate::error::{Error, Result};
use crate::group_algebra::{AlgebraElem, CyclicGroup};

#[derive(Debug, Clone)]
pub struct CosetSum {
    /// Exponents of the fixed generator `a`, in orbit order starting at the minimum.
    pub coset: Vec<u64>,
    pub element: AlgebraElem,
}

/// One coset sum per 2-cyclotomic coset, ordered by minimal element.
pub fn coset_sums(group: &CyclicGroup) -> Result<Vec<CosetSum>> {
    let f2 = RingHandle::f2();
    cyclotomic_cosets(group.order() as u64)?
        .into_iter()
        .map(|coset| {
            let mut coeffs = vec![0u32; group.order()];
            for &k in &coset {
                coeffs[k as usize] = 1;
            }
            Ok(CosetSum {
                element: AlgebraElem::from_payloads(f2, group, coeffs)?,
                coset,
            })
        })
        .collect()
}

/// The primitive idempotents of `F_2 G` for a group meeting every hypothesis.
pub fn primitive_idempotents_f2(spec: &GroupSpec) -> Result<Vec<AlgebraElem>> {
    let report = validate_group(spec);
    if !report.is_valid() {
        return Err(Error::InvalidGroup(report));
    }
    primitive_idempotents_of(&CyclicGroup::new(spec.clone())?)
}

/// The primitive idempotents of `F_2 G` for any odd-order group, sorted by
/// minimal support exponent and then by coefficient vector.
pub fn primitive_idempotents_of(group: &CyclicGroup) -> Result<Vec<AlgebraElem>> {
    let f2 = RingHandle::f2();
    let one = AlgebraElem::one(f2, group);
    let mut working = vec![one.clone()];
    for c in coset_sums(group)? {
        let complement = &one + &c.element;
        let mut next = Vec::with_capacity(working.len() + 1);
        for e in &working {
            for part in [e * &c.element, e * &complement] {
                if !part.is_zero() {
                    next.push(part);
                }
            }
        }
        working = next;
    }
    working.sort_by(|x, y| {
        let kx = x.support_exponents().first().copied();
        let ky = y.support_exponents().first().copied();
        kx.cmp(&ky).then_with(|| x.payloads().cmp(y.payloads()))
    });
    Ok(working)
}

/// `1 + sum over nonempty S of 2^{|S|-1} prod_{i in S} n_i`.
pub fn component_count_formula(spec: &GroupSpec) -> u64 {
    let ns = spec.exponents();
    let r = ns.len();
    let mut total = 1u64;
    for mask in 1u32..(1 << r) {
        let size = mask.count_ones();
        let prod: u64 = (0..r)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| ns[i] as u64)
            .product();
        total += (1u64 << (size - 1)) * prod;
    }
    total
}

/// `dim_{F_2} F_2 G e` for each primitive idempotent, in oracle order.
pub fn component_degrees(spec: &GroupSpec) -> Result<Vec<usize>> {
    Ok(primitive_idempotents_f2(spec)?
        .iter()
        .map(ideal_dimension_f2)
        .collect())
}

/// `F_2`-rank of the translates of `x`, i.e. the dimension of the ideal it
/// generates. `x` is reduced mod 2 first.
pub fn ideal_dimension_f2(x: &AlgebraElem) -> usize {
    let n = x.payloads().len();
    let bits = pack_bits(x.reduce_to_f2().payloads());
    let rows = (0..n).map(|g| rotate_bits(&bits, n, g)).collect();
    f2_rank(rows)
}

pub(crate) fn pack_bits(payloads: &[u32]) -> Vec<u64> {
    let mut out = vec![0u64; payloads.len().div_ceil(64)];
    for (k, &c) in payloads.iter().enumerate() {
        if c & 1 == 1 {
            out[k / 64] |= 1 << (k % 64);
        }
    }
    out
}

fn rotate_bits(bits: &[u64], n: usize, by: usize) -> Vec<u64> {
    let mut out = vec![0u64; bits.len()];
    for k in 0..n {
        if bits[k / 64] >> (k % 64) & 1 == 1 {
            let j = (k + by) % n;
            out[j / 64] |= 1 << (j % 64);
        }
    }
    out
}

/// Rank over `F_2` of bit-packed rows of equal length.
pub fn f2_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let mut rank = 0;
    let words = rows.first().map_or(0, Vec::len);
    for col in 0..words * 64 {
        let (w, b) = (col / 64, col % 64);
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] >> b & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] >> b & 1 == 1 {
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(d: &str) -> GroupSpec {
        GroupSpec::parse(d).unwrap()
    }

    fn check_family(fam: &[AlgebraElem]) {
        let group = fam[0].group().clone();
        let mut sum = AlgebraElem::zero(RingHandle::f2(), &group);
        for (i, e) in fam.iter().enumerate() {
            assert!(!e.is_zero());
            assert!(e.is_idempotent());
            assert_eq!(e.frobenius(), *e);
            for f in &fam[i + 1..] {
                assert!((e * f).is_zero());
            }
            sum = &sum + e;
        }
        assert_eq!(sum, AlgebraElem::one(RingHandle::f2(), &group));
    }

    #[test]
    fn c3_family() {
        let fam = primitive_idempotents_f2(&spec("3^1")).unwrap();
        let shown: Vec<String> = fam.iter().map(|e| e.to_string()).collect();
        assert_eq!(shown, ["1 + a1 + a1^2", "a1 + a1^2"]);
    }

    #[test]
    fn families_are_complete_and_counted() {
        for d in [
            "3^1", "5^1", "11^1", "3^2", "3^1,5^1", "3^1,11^1", "5^1,11^1", "3^2,5^1",
            "3^1,5^1,11^1",
        ] {
            let s = spec(d);
            let fam = primitive_idempotents_f2(&s).unwrap();
            check_family(&fam);
            let cosets = cyclotomic_cosets(s.order()).unwrap().len();
            assert_eq!(fam.len(), cosets, "{d}");
            assert_eq!(fam.len() as u64, component_count_formula(&s), "{d}");
        }
    }

    #[test]
    fn count_formula_examples() {
        assert_eq!(component_count_formula(&spec("3^1")), 2);
        assert_eq!(component_count_formula(&spec("3^1,5^1")), 5);
        assert_eq!(component_count_formula(&spec("3^1,5^1,11^1")), 14);
    }

    #[test]
    fn degrees_match_coset_sizes() {
        for (d, want) in [("3^1", vec![1, 2]), ("3^1,5^1", vec![1, 2, 4, 4, 4])] {
            let mut got = component_degrees(&spec(d)).unwrap();
            got.sort();
            assert_eq!(got, want);
        }
        let s = spec("3^1,5^1,11^1");
        let mut got = component_degrees(&s).unwrap();
        got.sort();
        let mut sizes: Vec<usize> = cyclotomic_cosets(165).unwrap().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(got, sizes);
        assert_eq!(got.iter().sum::<usize>(), 165);
    }

    #[test]
    fn invalid_group_rejected() {
        assert!(matches!(
            primitive_idempotents_f2(&spec("7^1")),
            Err(Error::InvalidGroup(_))
        ));
        // The refinement itself does not need the hypotheses.
        let g = CyclicGroup::parse("7^1").unwrap();
        let fam = primitive_idempotents_of(&g).unwrap();
        assert_eq!(fam.len(), 3);
        check_family(&fam);
    }

    #[test]
    fn rank_helper() {
        assert_eq!(f2_rank(vec![vec![0b011], vec![0b110], vec![0b101]]), 2);
        assert_eq!(f2_rank(vec![vec![0], vec![0]]), 0);
        assert_eq!(f2_rank(vec![vec![1, 0], vec![0, 1]]), 2);
    }
}
