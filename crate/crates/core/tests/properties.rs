use proptest::prelude::*;
use ringcodes::arith::{euler_phi, gcd, mult_ord, validate_group, GroupSpec};
use ringcodes::codes::{CodeComponent, CodeSpec};
use ringcodes::f2_oracle::{component_count_formula, primitive_idempotents_f2};
use ringcodes::group_algebra::SubgroupSpec;
use ringcodes::idempotents::lift_idempotent;
use ringcodes::{primitive_family, AlgebraElem, CyclicGroup, RingHandle};

const RINGS: [&str; 6] = ["z2", "z4", "z8", "z16", "f2u2", "f2u3"];

fn ring() -> impl Strategy<Value = RingHandle> {
    prop::sample::select(&RINGS[..]).prop_map(|d| RingHandle::parse(d).unwrap())
}

fn group() -> CyclicGroup {
    CyclicGroup::parse("3^1,5^1").unwrap()
}

fn elem(ring: RingHandle, coeffs: &[u32]) -> AlgebraElem {
    let mask = ring.order() as u32 - 1;
    AlgebraElem::from_payloads(ring, &group(), coeffs.iter().map(|c| c & mask).collect()).unwrap()
}

fn triple() -> impl Strategy<Value = (RingHandle, Vec<u32>, Vec<u32>, Vec<u32>)> {
    let v = || prop::collection::vec(any::<u32>(), 15);
    (ring(), v(), v(), v())
}

/// The hypotheses on the primes do not stop `p_i` dividing `p_j - 1`, and
/// then the totients share more than 2.
#[test]
fn order_identity_fails_on_a_valid_group() {
    let spec = GroupSpec::parse("5^3,11^2").unwrap();
    assert!(validate_group(&spec).is_valid());
    assert_eq!(mult_ord(2, 25 * 11).unwrap(), 20);
    assert_eq!(euler_phi(25 * 11) / 2, 100);

    let spec = GroupSpec::parse("5^2,11^1").unwrap();
    assert!(validate_group(&spec).is_valid());
    assert_eq!(component_count_formula(&spec), 8);
    assert_eq!(primitive_idempotents_f2(&spec).unwrap().len(), 16);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn scalar_ring_axioms(r in ring(), x in any::<u32>(), y in any::<u32>(), z in any::<u32>()) {
        let m = r.order() as u32 - 1;
        let (a, b, c) = (r.from_payload(x & m).unwrap(), r.from_payload(y & m).unwrap(), r.from_payload(z & m).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.add(&a.neg()).unwrap(), r.zero());
        prop_assert_eq!(a.is_unit(), a.residue());
        if a.is_unit() {
            prop_assert_eq!(a.mul(&a.invert_unit().unwrap()).unwrap(), r.one());
        }
    }

    #[test]
    fn convolution_ring_axioms((r, x, y, z) in triple()) {
        let (a, b, c) = (elem(r, &x), elem(r, &y), elem(r, &z));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &AlgebraElem::one(r, &group()), a.clone());
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(a.square(), &a * &a);
    }

    #[test]
    fn frobenius_is_a_ring_map_over_f2(x in prop::collection::vec(any::<u32>(), 15), y in prop::collection::vec(any::<u32>(), 15)) {
        let f2 = RingHandle::f2();
        let (a, b) = (elem(f2, &x), elem(f2, &y));
        prop_assert_eq!(a.square(), a.frobenius());
        prop_assert_eq!((&a * &b).frobenius(), &a.frobenius() * &b.frobenius());
    }
}

fn subgroup_steps() -> impl Strategy<Value = (String, Vec<u32>)> {
    prop::sample::select(vec![("3^2,5^1", vec![2u32, 1]), ("3^1,5^1,11^1", vec![1, 1, 1]), ("5^2", vec![2])])
        .prop_flat_map(|(d, ns)| {
            let picks: Vec<_> = ns.iter().map(|&n| 0..=n).collect();
            (Just(d.to_string()), picks)
        })
}

proptest! {
    #[test]
    fn subgroup_averages_are_idempotent(r in ring(), (d, es) in subgroup_steps()) {
        let g = CyclicGroup::parse(&d).unwrap();
        let steps: Vec<u64> = g.spec().primes().iter().zip(&es).map(|(p, &e)| p.pow(e)).collect();
        let h = SubgroupSpec::new(&g, &steps).unwrap();
        let hat = AlgebraElem::hat(r, &g, &h);
        prop_assert!(hat.is_idempotent());
        prop_assert_eq!(hat.weight() as u64, h.order(&g));
    }

    #[test]
    fn sums_of_primitives_are_coset_constant_and_lift(mask in 1u32..(1 << 14), r in ring()) {
        let spec = GroupSpec::parse("3^1,5^1,11^1").unwrap();
        let fam = primitive_idempotents_f2(&spec).unwrap();
        let g = fam[0].group().clone();
        let mut e = AlgebraElem::zero(RingHandle::f2(), &g);
        for (i, f) in fam.iter().enumerate() {
            if mask >> i & 1 == 1 {
                e = &e + f;
            }
        }
        prop_assert_eq!(e.frobenius(), e.clone());
        prop_assert!(e.is_idempotent());
        let lifted = lift_idempotent(&e, r).unwrap();
        prop_assert!(lifted.is_idempotent());
        prop_assert_eq!(lifted.reduce_to_f2(), e);
    }

    #[test]
    fn order_of_two_matches_totient_identity_exactly_when_totients_meet_in_two(
        picks in prop::collection::vec((0u32..=3, 0u32..=3), 6)
    ) {
        let primes = [3u64, 5, 11, 13, 19, 29];
        let mut ps = Vec::new();
        let mut ns = Vec::new();
        let mut es = Vec::new();
        for (&p, &(n, drop)) in primes.iter().zip(&picks) {
            if n > 0 {
                ps.push(p);
                ns.push(n);
                es.push(n.saturating_sub(drop).max(1));
            }
        }
        prop_assume!(!ps.is_empty());
        let Ok(spec) = GroupSpec::new(&ps, &ns) else { return Ok(()) };
        prop_assume!(validate_group(&spec).is_valid());
        let parts: Vec<u64> = ps.iter().zip(&es).map(|(p, &e)| p.pow(e)).collect();
        let m: u64 = parts.iter().product();
        let phis: Vec<u64> = parts.iter().map(|&q| euler_phi(q)).collect();
        let meet_in_two = (0..phis.len())
            .all(|i| (i + 1..phis.len()).all(|j| gcd(phis[i], phis[j]) == 2));
        let identity = euler_phi(m) >> (ps.len() - 1);
        prop_assert_eq!(mult_ord(2, m).unwrap() == identity, meet_in_two);
    }

    #[test]
    fn crt_index_is_additive(a in prop::collection::vec(0u64..1000, 3), b in prop::collection::vec(0u64..1000, 3)) {
        let spec = GroupSpec::parse("3^2,5^1,11^1").unwrap();
        let reduce = |v: &[u64]| -> Vec<u64> {
            v.iter().enumerate().map(|(i, x)| x % spec.factor_order(i)).collect()
        };
        let sum: Vec<u64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let n = spec.order();
        let ka = spec.crt_index(&reduce(&a)).unwrap();
        let kb = spec.crt_index(&reduce(&b)).unwrap();
        prop_assert_eq!(spec.crt_index(&reduce(&sum)).unwrap(), (ka + kb) % n);
        prop_assert_eq!(spec.crt_inverse(ka).unwrap(), reduce(&a));
    }

    #[test]
    fn code_size_shrinks_with_k(idx in 0usize..5, d in prop::sample::select(vec!["z8", "f2u3", "z16"])) {
        let ring = RingHandle::parse(d).unwrap();
        let g = group();
        let fam = primitive_family(g.spec(), ring).unwrap();
        let e = fam.records[idx].element.clone();
        let sizes: Vec<u64> = (0..=ring.t())
            .map(|k| CodeSpec::new(ring, &g, vec![CodeComponent::new(e.clone(), k, None)]).unwrap().size_log2())
            .collect();
        prop_assert!(sizes.windows(2).all(|w| w[0] > w[1]));
        prop_assert_eq!(*sizes.last().unwrap(), 0);
    }
}
