//! Number-theoretic helpers: Euler's phi, multiplicative orders, 2-cyclotomic
//! cosets, the CRT identification of `C_{p1^n1} x ... x C_{pr^nr}` with `C_n`,
//! and the checks a group order has to pass before the explicit idempotent
//! constructions apply.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest group order accepted anywhere in the crate. Everything is dense
/// and exact, so this is a memory bound rather than a correctness one.
pub const MAX_GROUP_ORDER: u64 = 1_000_000;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Trial-division factorization, primes in increasing order.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && factorize(p) == [(p, 1)]
}

pub fn euler_phi(m: u64) -> u64 {
    assert!(m >= 1, "euler_phi is defined for m >= 1");
    factorize(m)
        .into_iter()
        .fold(m, |acc, (p, _)| acc / p * (p - 1))
}

/// Smallest `h >= 1` with `b^h = 1 (mod m)`.
pub fn mult_ord(b: i64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::ModulusTooSmall { m, min: 2 });
    }
    let base = b.rem_euclid(m as i64) as u64;
    if gcd(base, m) != 1 {
        return Err(Error::NotCoprime { b, m });
    }
    // The order divides phi(m); strip prime factors while the power stays 1.
    let mut ord = euler_phi(m);
    for (q, _) in factorize(ord) {
        while ord.is_multiple_of(q) && mod_pow(base, ord / q, m) == 1 {
            ord /= q;
        }
    }
    Ok(ord)
}

/// Orbits of `i -> 2i (mod n)` on `{0, ..., n-1}`.
///
/// Each coset is listed in orbit order starting from its least element, and
/// cosets are sorted by that least element.
pub fn cyclotomic_cosets(n: u64) -> Result<Vec<Vec<u64>>> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenModulus(n));
    }
    if n > MAX_GROUP_ORDER {
        return Err(Error::MalformedGroup(format!(
            "order {n} exceeds the limit {MAX_GROUP_ORDER}"
        )));
    }
    let mut seen = vec![false; n as usize];
    let mut cosets = Vec::new();
    for start in 0..n {
        if seen[start as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut x = start;
        while !seen[x as usize] {
            seen[x as usize] = true;
            coset.push(x);
            x = 2 * x % n;
        }
        cosets.push(coset);
    }
    Ok(cosets)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

impl PrimePower {
    pub fn value(&self) -> u64 {
        self.prime.pow(self.exponent)
    }
}

/// The group `C_{p1^n1} x ... x C_{pr^nr}` as raw data.
///
/// Construction only checks that the data describes some finite product of
/// prime-power cyclic groups; whether it satisfies the hypotheses needed for
/// the explicit constructions is decided by [`validate_group`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    factors: Vec<PrimePower>,
    order: u64,
}

impl GroupSpec {
    pub fn new(primes: &[u64], exponents: &[u32]) -> Result<Self> {
        if primes.is_empty() {
            return Err(Error::MalformedGroup("at least one factor is required".into()));
        }
        if primes.len() != exponents.len() {
            return Err(Error::MalformedGroup(format!(
                "{} primes but {} exponents",
                primes.len(),
                exponents.len()
            )));
        }
        let mut order: u64 = 1;
        let mut factors = Vec::with_capacity(primes.len());
        for (&prime, &exponent) in primes.iter().zip(exponents) {
            if prime < 2 {
                return Err(Error::MalformedGroup(format!("{prime} is not a prime base")));
            }
            if exponent == 0 {
                return Err(Error::MalformedGroup(format!("exponent of {prime} must be positive")));
            }
            let q = prime
                .checked_pow(exponent)
                .filter(|q| *q <= MAX_GROUP_ORDER)
                .ok_or_else(|| {
                    Error::MalformedGroup(format!("{prime}^{exponent} exceeds {MAX_GROUP_ORDER}"))
                })?;
            order = order
                .checked_mul(q)
                .filter(|n| *n <= MAX_GROUP_ORDER)
                .ok_or_else(|| {
                    Error::MalformedGroup(format!("group order exceeds {MAX_GROUP_ORDER}"))
                })?;
            factors.push(PrimePower { prime, exponent });
        }
        Ok(Self { factors, order })
    }

    /// Parses the `p^n,q^m,...` designator. Bases must be odd primes listed
    /// in strictly increasing order.
    pub fn parse(designator: &str) -> Result<Self> {
        let mut primes = Vec::new();
        let mut exponents = Vec::new();
        for token in designator.split(',') {
            let token = token.trim();
            let (p, e) = token
                .split_once('^')
                .ok_or_else(|| Error::Parse(format!("expected p^n, got {token:?}")))?;
            let p: u64 = p
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime in {token:?}")))?;
            let e: u32 = e
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?;
            if p.is_multiple_of(2) || !is_prime(p) {
                return Err(Error::Parse(format!("{p} is not an odd prime")));
            }
            if e == 0 {
                return Err(Error::Parse(format!("exponent in {token:?} must be positive")));
            }
            if let Some(&last) = primes.last() {
                if p <= last {
                    return Err(Error::Parse(format!(
                        "primes must be strictly increasing ({last} then {p})"
                    )));
                }
            }
            primes.push(p);
            exponents.push(e);
        }
        Self::new(&primes, &exponents).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn designator(&self) -> String {
        self.factors
            .iter()
            .map(|f| format!("{}^{}", f.prime, f.exponent))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    pub fn primes(&self) -> Vec<u64> {
        self.factors.iter().map(|f| f.prime).collect()
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.factors.iter().map(|f| f.exponent).collect()
    }

    /// Number of prime factors `r`.
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// `|G| = n`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// `p_i^{n_i}`.
    pub fn factor_order(&self, i: usize) -> u64 {
        self.factors[i].value()
    }

    /// `n / p_i^{n_i}`: the exponent of the fixed generator `a` of `C_n`
    /// with `a_i = a^{n / p_i^{n_i}}`.
    pub fn cofactor(&self, i: usize) -> u64 {
        self.order / self.factor_order(i)
    }

    fn ensure_coprime_factors(&self) -> Result<()> {
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                if gcd(self.factor_order(i), self.factor_order(j)) != 1 {
                    return Err(Error::MalformedGroup(format!(
                        "factors {} and {} are not coprime",
                        self.factor_order(i),
                        self.factor_order(j)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Exponent `k` with `a_1^{e_1} ... a_r^{e_r} = a^k`, where
    /// `a_i = a^{n / p_i^{n_i}}`.
    pub fn crt_index(&self, multi: &[u64]) -> Result<u64> {
        self.ensure_coprime_factors()?;
        if multi.len() != self.rank() {
            return Err(Error::Arity {
                expected: self.rank(),
                got: multi.len(),
            });
        }
        let n = self.order as u128;
        let mut k: u128 = 0;
        for (i, &e) in multi.iter().enumerate() {
            let q = self.factor_order(i);
            if e >= q {
                return Err(Error::IndexOutOfRange {
                    factor: i,
                    value: e,
                    order: q,
                });
            }
            k = (k + e as u128 * self.cofactor(i) as u128) % n;
        }
        Ok(k as u64)
    }

    /// Inverse of [`GroupSpec::crt_index`].
    pub fn crt_inverse(&self, k: u64) -> Result<Vec<u64>> {
        self.ensure_coprime_factors()?;
        if k >= self.order {
            return Err(Error::IndexOutOfRange {
                factor: 0,
                value: k,
                order: self.order,
            });
        }
        Ok((0..self.rank())
            .map(|i| {
                let q = self.factor_order(i);
                // a^k restricted to the i-th factor is a_i^{k * c^{-1}} with c the cofactor.
                let inv = mod_inverse(self.cofactor(i) % q, q).expect("coprime factors");
                ((k % q) as u128 * inv as u128 % q as u128) as u64
            })
            .collect())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.designator())
    }
}

/// One failed hypothesis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NotPrime { base: u64 },
    EvenPrime { prime: u64 },
    DuplicatePrime { prime: u64 },
    /// 2 does not generate the units modulo `modulus`.
    NotPrimitiveRoot { modulus: u64, order: u64, phi: u64 },
    GcdCondition { p: u64, q: u64, gcd: u64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotPrime { base } => write!(f, "{base} is not prime"),
            Violation::EvenPrime { prime } => write!(f, "{prime} is even"),
            Violation::DuplicatePrime { prime } => write!(f, "prime {prime} repeated"),
            Violation::NotPrimitiveRoot { modulus, order, phi } => write!(
                f,
                "2 has order {order} modulo {modulus}, not phi({modulus}) = {phi}"
            ),
            Violation::GcdCondition { p, q, gcd } => {
                write!(f, "gcd({} - 1, {} - 1) = {gcd}, expected 2", p, q)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub group: String,
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.valid
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return write!(f, "{}: valid", self.group);
        }
        write!(f, "{}: ", self.group)?;
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks every hypothesis on the group: odd distinct primes, 2 a primitive
/// root modulo `p_i^2` and modulo `p_i^{n_i}`, and `gcd(p_i - 1, p_j - 1) = 2`.
pub fn validate_group(spec: &GroupSpec) -> ValidationReport {
    let mut violations = Vec::new();
    let primes = spec.primes();
    for (i, f) in spec.factors().iter().enumerate() {
        let p = f.prime;
        if primes[..i].contains(&p) {
            violations.push(Violation::DuplicatePrime { prime: p });
            continue;
        }
        if !is_prime(p) {
            violations.push(Violation::NotPrime { base: p });
            continue;
        }
        if p == 2 {
            violations.push(Violation::EvenPrime { prime: p });
            continue;
        }
        let mut moduli = vec![p * p];
        if f.exponent > 2 {
            moduli.push(f.value());
        }
        for m in moduli {
            let order = mult_ord(2, m).expect("odd modulus");
            let phi = euler_phi(m);
            if order != phi {
                violations.push(Violation::NotPrimitiveRoot {
                    modulus: m,
                    order,
                    phi,
                });
                // Failing mod p^2 already settles it; skip the redundant p^n report.
                break;
            }
        }
    }
    for i in 0..primes.len() {
        for j in i + 1..primes.len() {
            let (p, q) = (primes[i], primes[j]);
            if p == q || p < 3 || q < 3 {
                continue;
            }
            let g = gcd(p - 1, q - 1);
            if g != 2 {
                violations.push(Violation::GcdCondition { p, q, gcd: g });
            }
        }
    }
    ValidationReport {
        group: spec.designator(),
        valid: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_phi(m: u64) -> u64 {
        (1..=m).filter(|&k| gcd(k, m) == 1).count() as u64
    }

    fn brute_ord(b: u64, m: u64) -> u64 {
        let mut x = b % m;
        let mut h = 1;
        while x != 1 {
            x = x * b % m;
            h += 1;
        }
        h
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(brute_phi(15), 8);
        assert_eq!(euler_phi(15), 8);
        assert_eq!(brute_phi(165), 80);
        assert_eq!(euler_phi(165), 80);
        for m in 1..500 {
            assert_eq!(euler_phi(m), brute_phi(m), "m = {m}");
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(mult_ord(2, 3).unwrap(), 2);
        assert_eq!(brute_ord(2, 15), 4);
        assert_eq!(mult_ord(2, 15).unwrap(), 4);
        assert_eq!(brute_ord(2, 165), 20);
        assert_eq!(mult_ord(2, 165).unwrap(), 20);
        for m in (3..400).step_by(2) {
            assert_eq!(mult_ord(2, m).unwrap(), brute_ord(2, m), "m = {m}");
        }
        assert_eq!(mult_ord(-1, 7).unwrap(), 2);
    }

    #[test]
    fn order_rejects_non_units() {
        assert!(matches!(mult_ord(2, 6), Err(Error::NotCoprime { .. })));
        assert!(matches!(mult_ord(3, 1), Err(Error::ModulusTooSmall { .. })));
    }

    #[test]
    fn cosets_examples() {
        assert_eq!(cyclotomic_cosets(1).unwrap(), vec![vec![0]]);
        assert_eq!(
            cyclotomic_cosets(15).unwrap(),
            vec![
                vec![0],
                vec![1, 2, 4, 8],
                vec![3, 6, 12, 9],
                vec![5, 10],
                vec![7, 14, 13, 11]
            ]
        );
        assert_eq!(cyclotomic_cosets(165).unwrap().len(), 14);
        assert!(matches!(cyclotomic_cosets(12), Err(Error::EvenModulus(12))));
    }

    #[test]
    fn coset_count_matches_divisor_sum() {
        for n in (1..300u64).step_by(2) {
            let expected: u64 = (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| if d == 1 { 1 } else { euler_phi(d) / mult_ord(2, d).unwrap() })
                .sum();
            assert_eq!(cyclotomic_cosets(n).unwrap().len() as u64, expected, "n = {n}");
        }
    }

    #[test]
    fn validation_examples() {
        let ok = GroupSpec::new(&[3, 5], &[1, 1]).unwrap();
        assert!(validate_group(&ok).is_valid());

        let seven = GroupSpec::new(&[7], &[1]).unwrap();
        let report = validate_group(&seven);
        assert!(!report.is_valid());
        assert_eq!(
            report.violations,
            vec![Violation::NotPrimitiveRoot { modulus: 49, order: 21, phi: 42 }]
        );

        let dup = GroupSpec::new(&[3, 3], &[1, 1]).unwrap();
        assert!(validate_group(&dup)
            .violations
            .contains(&Violation::DuplicatePrime { prime: 3 }));

        let bad_gcd = GroupSpec::new(&[5, 13], &[1, 1]).unwrap();
        assert!(validate_group(&bad_gcd)
            .violations
            .contains(&Violation::GcdCondition { p: 5, q: 13, gcd: 4 }));
    }

    #[test]
    fn crt_round_trip_and_homomorphism() {
        let spec = GroupSpec::new(&[3, 5], &[1, 1]).unwrap();
        assert_eq!(spec.crt_index(&[0, 0]).unwrap(), 0);
        assert_eq!(spec.crt_index(&[1, 0]).unwrap(), 5);
        assert_eq!(spec.crt_inverse(spec.crt_index(&[2, 4]).unwrap()).unwrap(), vec![2, 4]);
        let mut seen = std::collections::HashSet::new();
        for k in 0..15 {
            let m = spec.crt_inverse(k).unwrap();
            assert_eq!(spec.crt_index(&m).unwrap(), k);
            seen.insert(m);
        }
        assert_eq!(seen.len(), 15);

        let spec = GroupSpec::new(&[3, 5, 11], &[2, 1, 1]).unwrap();
        for x in 0..spec.order() {
            for y in (0..spec.order()).step_by(37) {
                let mx = spec.crt_inverse(x).unwrap();
                let my = spec.crt_inverse(y).unwrap();
                let sum: Vec<u64> = (0..3)
                    .map(|i| (mx[i] + my[i]) % spec.factor_order(i))
                    .collect();
                assert_eq!(spec.crt_index(&sum).unwrap(), (x + y) % spec.order());
            }
        }
        assert!(matches!(spec.crt_index(&[9, 0, 0]), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn parse_designators() {
        let g = GroupSpec::parse("3^1,5^1,11^1").unwrap();
        assert_eq!(g.order(), 165);
        assert_eq!(g.designator(), "3^1,5^1,11^1");
        assert!(GroupSpec::parse("4^1").is_err());
        assert!(GroupSpec::parse("5^1,3^1").is_err());
        assert!(GroupSpec::parse("3^0").is_err());
        assert!(GroupSpec::parse("3").is_err());
        assert!(GroupSpec::parse("1009^2").is_err());
    }
}
