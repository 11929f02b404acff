//! The acceptance checks, runnable from the library, the bin and the test suite.

use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{cyclotomic_cosets, euler_phi, factorize, mult_ord, GroupSpec};
use crate::chain_ring::RingHandle;
use crate::cli::{self, RunConfig};
use crate::codes::{
    code_size_formula, enumerate_codewords, min_weight_exact, min_weight_lower_bound,
    min_weight_upper_bound, CodeComponent, CodeSpec, ComponentLabel, DEFAULT_BUDGET,
};
use crate::error::Result;
use crate::f2_oracle::{component_count_formula, primitive_idempotents_f2, primitive_idempotents_of};
use crate::group_algebra::{AlgebraElem, CyclicGroup, SubgroupSpec};
use crate::idempotents::{lift_idempotent, closed_form_elements, primitive_family, Block, SplitTag};

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed_ms: u128,
    pub limit_ms: Option<u128>,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} [{}] {}: {} ({} ms", self.id, self.name, self.detail, self.elapsed_ms)?;
        if let Some(limit) = self.limit_ms {
            write!(f, ", limit {limit} ms")?;
        }
        write!(f, ")")
    }
}

fn timed<F>(id: u8, name: &str, limit_ms: Option<u128>, body: F) -> CriterionResult
where
    F: FnOnce() -> anyhow::Result<(bool, String)>,
{
    let start = Instant::now();
    let outcome = body();
    let elapsed_ms = start.elapsed().as_millis();
    let (mut passed, mut detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e:#}")));
    if let Some(limit) = limit_ms {
        if elapsed_ms > limit {
            passed = false;
            detail.push_str("; over time limit");
        }
    }
    CriterionResult {
        id,
        name: name.to_string(),
        passed,
        detail,
        elapsed_ms,
        limit_ms,
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    vec![
        component_counts(),
        idempotent_lifting(),
        closed_forms_in_family(),
        word_counts(),
        minimum_weights(),
        bound_sandwich(),
        multiplicative_order(),
        weight_table(),
        properties(),
    ]
}

fn spec(d: &str) -> GroupSpec {
    GroupSpec::parse(d).expect("fixed designator")
}

/// Idempotent, pairwise orthogonal, nonzero, summing to one.
pub fn is_complete_family(fam: &[AlgebraElem]) -> bool {
    let Some(first) = fam.first() else {
        return false;
    };
    let (ring, group) = (first.ring(), first.group().clone());
    let mut sum = AlgebraElem::zero(ring, &group);
    for (i, e) in fam.iter().enumerate() {
        if e.is_zero() || !e.is_idempotent() {
            return false;
        }
        if fam[i + 1..].iter().any(|f| !(e * f).is_zero()) {
            return false;
        }
        sum = &sum + e;
    }
    sum == AlgebraElem::one(ring, &group)
}

pub const COUNT_SPECS: [&str; 9] = [
    "3^1", "5^1", "11^1", "3^2", "3^1,5^1", "3^1,11^1", "5^1,11^1", "3^2,5^1", "3^1,5^1,11^1",
];

pub fn component_counts() -> CriterionResult {
    timed(1, "component counts", Some(5_000), || {
        let mut ok = true;
        let mut parts = Vec::new();
        for d in COUNT_SPECS {
            let s = spec(d);
            let fam = primitive_idempotents_f2(&s)?;
            let formula = component_count_formula(&s);
            let cosets = cyclotomic_cosets(s.order())?.len();
            let good = fam.len() as u64 == formula && fam.len() == cosets && is_complete_family(&fam);
            ok &= good;
            parts.push(format!("{d}:{}{}", fam.len(), if good { "" } else { "!" }));
        }
        Ok((ok, parts.join(" ")))
    })
}

pub const LIFT_SPECS: [&str; 4] = ["3^1", "3^1,5^1", "3^2,5^1", "3^1,5^1,11^1"];
pub const LIFT_RINGS: [&str; 4] = ["z4", "z8", "f2u2", "f2u3"];

pub fn idempotent_lifting() -> CriterionResult {
    timed(2, "idempotent lifting", Some(30_000), || {
        let mut checked = 0;
        let mut bad = Vec::new();
        for d in LIFT_SPECS {
            let s = spec(d);
            let oracle = primitive_idempotents_f2(&s)?;
            for r in LIFT_RINGS {
                let ring = RingHandle::parse(r)?;
                let lifted = oracle
                    .iter()
                    .map(|f| lift_idempotent(f, ring))
                    .collect::<Result<Vec<_>>>()?;
                let back = lifted.iter().zip(&oracle).all(|(e, f)| e.reduce_to_f2() == *f);
                if !(back && is_complete_family(&lifted)) {
                    bad.push(format!("{d}/{r}"));
                }
                checked += lifted.len();
            }
        }
        let detail = if bad.is_empty() {
            format!("{checked} lifts idempotent, reduce back, orthogonal, sum to 1")
        } else {
            format!("failed at {}", bad.join(", "))
        };
        Ok((bad.is_empty(), detail))
    })
}

pub fn closed_forms_in_family() -> CriterionResult {
    timed(3, "closed forms are family members", Some(10_000), || {
        let ring = RingHandle::integers_mod_pow2(2)?;
        let mut total = 0;
        let mut misses = Vec::new();
        for d in ["3^1,5^1", "3^1,5^1,11^1"] {
            let group = CyclicGroup::new(spec(d))?;
            let family = primitive_idempotents_of(&group)?
                .iter()
                .map(|f| lift_idempotent(f, ring))
                .collect::<Result<Vec<_>>>()?;
            for p in closed_form_elements(ring, &group)? {
                total += 1;
                if !family.contains(&p.element) {
                    let covered = family.iter().filter(|e| &(*e * &p.element) == *e).count();
                    misses.push(format!(
                        "{d} item {} block {}: not primitive, covers {covered} members",
                        p.item, p.block
                    ));
                }
            }
        }
        let detail = if misses.is_empty() {
            format!("{total} closed forms found in the lifted family")
        } else {
            format!("{}/{total} members; {}", total - misses.len(), misses.join("; "))
        };
        Ok((misses.is_empty(), detail))
    })
}

fn family_15() -> anyhow::Result<(GroupSpec, CyclicGroup, RingHandle, crate::idempotents::PrimitiveFamily)> {
    let s = spec("3^1,5^1");
    let ring = RingHandle::integers_mod_pow2(2)?;
    let family = primitive_family(&s, ring)?;
    let group = CyclicGroup::new(s.clone())?;
    Ok((s, group, ring, family))
}

pub fn word_counts() -> CriterionResult {
    timed(4, "word counts", Some(60_000), || {
        let (s, group, ring, family) = family_15()?;
        let mut ok = true;
        let mut parts = Vec::new();
        let mut degrees = Vec::new();
        for rec in &family.records {
            let label = ComponentLabel {
                block: rec.block.clone(),
                split: rec.split,
            };
            degrees.push(label.degree(&s));
            for k in 0..ring.t() {
                let comp = CodeComponent::new(rec.element.clone(), k, Some(label.clone()));
                let code = CodeSpec::new(ring, &group, vec![comp])?;
                let formula = code_size_formula(&label, k, ring, &s)?;
                let count = enumerate_codewords(&code, DEFAULT_BUDGET)?.len() as u64;
                let good = formula.as_u64() == Some(count);
                ok &= good;
                parts.push(format!("{}@k{k}:{count}{}", rec.label(), if good { "" } else { "!" }));
            }
        }
        degrees.sort();
        ok &= degrees == [1, 2, 4, 4, 4];
        Ok((ok, parts.join(" ")))
    })
}

pub fn minimum_weights() -> CriterionResult {
    timed(5, "minimum weights", None, || {
        let (_, group, ring, family) = family_15()?;
        let mut ok = true;
        let mut parts = Vec::new();
        for (levels, want) in [([0, 0], 15), ([1, 0], 10), ([0, 1], 6)] {
            let block = Block::new(&group, &levels)?;
            let rec = family
                .find(&block, None)
                .ok_or_else(|| anyhow::anyhow!("no record for {block}"))?;
            let mut seen = Vec::new();
            for k in 0..ring.t() {
                let code = CodeSpec::single(rec.element.clone(), k, None)?;
                seen.push(min_weight_exact(&code, DEFAULT_BUDGET)?.weight);
            }
            let good = seen.iter().all(|&w| w == want);
            ok &= good;
            parts.push(format!("{block}:{seen:?}"));
        }
        Ok((ok, parts.join(" ")))
    })
}

pub fn bound_sandwich() -> CriterionResult {
    timed(6, "bound sandwich", None, || {
        let (s, group, ring, family) = family_15()?;
        let block = Block::new(&group, &[1, 1])?;
        let split = Some(SplitTag::Numbered(1));
        let rec = family
            .find(&block, split)
            .ok_or_else(|| anyhow::anyhow!("no record for {block}/1"))?;
        let label = ComponentLabel { block, split };
        let lower = min_weight_lower_bound(&label, &s)?;
        let mut ok = true;
        let mut parts = Vec::new();
        for k in 0..ring.t() {
            let comp = CodeComponent::new(rec.element.clone(), k, Some(label.clone()));
            let upper = min_weight_upper_bound(&comp)?.weight;
            let code = CodeSpec::new(ring, &group, vec![comp])?;
            let exact = min_weight_exact(&code, DEFAULT_BUDGET)?.weight;
            ok &= lower <= exact && exact <= upper;
            parts.push(format!(
                "k={k}: {lower} <= {exact} <= {upper}, lower bound attained: {}",
                exact == lower
            ));
        }
        Ok((ok, parts.join("; ")))
    })
}

pub const ORDER_MODULI: [u64; 6] = [15, 33, 55, 165, 45, 99];

pub fn multiplicative_order() -> CriterionResult {
    timed(7, "multiplicative order of 2", None, || {
        let mut ok = true;
        let mut parts = Vec::new();
        for m in ORDER_MODULI {
            let r = factorize(m).len() as u32;
            let want = euler_phi(m) / (1 << (r - 1));
            let got = mult_ord(2, m)?;
            ok &= got == want;
            parts.push(format!("{m}:{got}"));
        }
        Ok((ok, parts.join(" ")))
    })
}

pub fn weight_table() -> CriterionResult {
    timed(8, "weight table", Some(300_000), || {
        let rows = cli::table_rows(
            &spec("3^1,5^1,11^1"),
            RingHandle::integers_mod_pow2(2)?,
            &[1, 1, 1],
            1,
            DEFAULT_BUDGET,
        )?;
        let want_words = [1u64, 2, 4, 10];
        let want_weight = [165u64, 110, 66, 30];
        let mut ok = true;
        let mut parts = Vec::new();
        for (i, r) in rows.iter().take(4).enumerate() {
            let good = r.words_log2 == want_words[i]
                && r.words_match
                && r.min_weight == Some(want_weight[i])
                && r.weight_formula == Some(want_weight[i]);
            ok &= good;
            parts.push(format!("row {}: 2^{} w{}", r.row, r.words_log2, r.min_weight.unwrap_or(0)));
        }
        for r in rows.iter().filter(|r| r.formula_blank) {
            let filled = r.min_weight.is_some() || r.upper_bound.is_some();
            ok &= filled;
            let w = match r.min_weight {
                Some(w) => w.to_string(),
                None => format!("[{},{}]", opt(r.lower_bound), opt(r.upper_bound)),
            };
            parts.push(format!(
                "row {}: 2^{} (formula {}) w{w}",
                r.row, r.words_log2, r.words_formula
            ));
        }
        Ok((ok, parts.join("; ")))
    })
}

fn opt(x: Option<u64>) -> String {
    x.map_or("-".into(), |v| v.to_string())
}

/// Randomized ring-axiom cases in [`properties`].
pub const RANDOM_CASES: usize = 1000;

pub fn properties() -> CriterionResult {
    timed(9, "properties", None, || {
        let mut parts = Vec::new();

        let mut hats_ok = true;
        let mut hats = 0;
        for d in ["3^1,5^1", "3^2,5^1"] {
            let group = CyclicGroup::new(spec(d))?;
            let ns = group.spec().exponents();
            let ps = group.spec().primes();
            for r in ["z4", "z8", "f2u2"] {
                let ring = RingHandle::parse(r)?;
                for_each_steps(&ps, &ns, &mut |steps| {
                    let h = AlgebraElem::hat(ring, &group, &SubgroupSpec::new(&group, steps)?);
                    hats_ok &= h.is_idempotent();
                    hats += 1;
                    Ok(())
                })?;
            }
        }
        parts.push(format!("{hats} hats idempotent: {hats_ok}"));

        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let group = CyclicGroup::new(spec("3^1,5^1"))?;
        let rings: Vec<RingHandle> = ["z2", "z4", "z8", "f2u2", "f2u3"]
            .iter()
            .map(|r| RingHandle::parse(r))
            .collect::<Result<_>>()?;
        let mut axioms_ok = true;
        for case in 0..RANDOM_CASES {
            let ring = rings[case % rings.len()];
            let mut draw = || {
                let coeffs = (0..group.order())
                    .map(|_| rng.gen_range(0..ring.order() as u32))
                    .collect();
                AlgebraElem::from_payloads(ring, &group, coeffs)
            };
            let (a, b, c) = (draw()?, draw()?, draw()?);
            let one = AlgebraElem::one(ring, &group);
            axioms_ok &= &(&a * &b) * &c == &a * &(&b * &c)
                && &a * &b == &b * &a
                && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
                && &a * &one == a
                && &(&a + &b) - &b == a;
        }
        parts.push(format!("{RANDOM_CASES} ring-axiom cases: {axioms_ok}"));

        let mut frob_ok = true;
        for d in COUNT_SPECS {
            let s = spec(d);
            let cosets = cyclotomic_cosets(s.order())?;
            for f in primitive_idempotents_f2(&s)? {
                frob_ok &= f.frobenius() == f;
                frob_ok &= cosets.iter().all(|c| {
                    let first = f.payloads()[c[0] as usize];
                    c.iter().all(|&k| f.payloads()[k as usize] == first)
                });
            }
        }
        parts.push(format!("oracle idempotents coset-constant: {frob_ok}"));

        let mut deterministic = true;
        for args in [
            &["idempotents", "--ring", "z4", "--group", "3^1,5^1"][..],
            &["code", "--ring", "z4", "--group", "3^1,5^1", "--block", "1,1", "--split", "1"][..],
        ] {
            let argv = std::iter::once("ringcodes").chain(args.iter().copied());
            let config = RunConfig::try_parse_from_args(argv)?;
            let first = cli::run(&config)?.body;
            let second = cli::run(&config)?.body;
            deterministic &= first == second;
        }
        parts.push(format!("JSON deterministic: {deterministic}"));

        Ok((hats_ok && axioms_ok && frob_ok && deterministic, parts.join("; ")))
    })
}

/// Calls `f` with the steps of every subgroup `prod <a_i^{p_i^{e_i}}>`.
fn for_each_steps<F>(primes: &[u64], exps: &[u32], f: &mut F) -> Result<()>
where
    F: FnMut(&[u64]) -> Result<()>,
{
    let mut e = vec![0u32; primes.len()];
    loop {
        let steps: Vec<u64> = primes.iter().zip(&e).map(|(p, &x)| p.pow(x)).collect();
        f(&steps)?;
        let mut i = 0;
        loop {
            if i == e.len() {
                return Ok(());
            }
            e[i] += 1;
            if e[i] <= exps[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}
