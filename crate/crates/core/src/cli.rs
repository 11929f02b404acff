//! Command-line front end. `main.rs` only forwards `argv` here.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arith::{validate_group, GroupSpec, ValidationReport};
use crate::chain_ring::RingHandle;
use crate::codes::{
    analyze_code, CodeComponent, CodeReport,
    CodeSpec, ComponentLabel, WeightMethod, DEFAULT_BUDGET,
};
use crate::error::Error;
use crate::group_algebra::CyclicGroup;
use crate::idempotents::{
    block_idempotent, full_block_representative, primitive_family, split_block_2, split_block_3,
    Block, PrimitiveFamily, SplitTag,
};
use crate::selftest;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "ringcodes", version, about = "Idempotents of RG and cyclic codes over chain rings of order 2^t")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Ring designator: z2, z4, z8, ..., f2u2, f2u3, ...
    #[arg(long, global = true, default_value = "z4")]
    pub ring: String,
    /// Group designator: comma-separated p^n, primes increasing, e.g. 3^1,5^1
    #[arg(long, global = true)]
    pub group: Option<String>,
    /// Exponent of s; one value, or one per --block
    #[arg(long, global = true, value_delimiter = ';')]
    pub k: Vec<u32>,
    /// Block levels j_1,...,j_r; repeat for a direct sum
    #[arg(long, global = true)]
    pub block: Vec<String>,
    /// Split tag per block (1, 2, 3, 4, A1, B2, c1, or - for the whole block)
    #[arg(long, global = true)]
    pub split: Vec<String>,
    /// Largest number of codewords to enumerate
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

impl RunConfig {
    /// Like `try_parse_from`, with clap errors turned into [`Error::Parse`].
    pub fn try_parse_from_args<I, T>(args: I) -> anyhow::Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        Self::try_parse_from(args).map_err(|e| Error::Parse(e.to_string()).into())
    }
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum Command {
    /// Check the hypotheses on the group
    Validate,
    /// List the primitive idempotents of RG
    Idempotents,
    /// Size and minimum weight of a code built from family members
    Code,
    /// The length-3^n1 5^n2 11^n3 weight table over Z4
    Table,
    /// Run the acceptance checks
    Selftest,
}

/// Parses `args` (including the program name), runs, and maps failures to
/// exit codes: 1 usage or parse, 2 validation, 3 budget.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&config) {
        Ok(outcome) => {
            if let Err(e) = emit(&config, &outcome.body) {
                eprintln!("error: {e:#}");
                return ExitCode::from(1);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

pub fn exit_code_for(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::InvalidGroup(_)) | Some(Error::FormulaMismatch { .. }) => 2,
        Some(Error::BudgetExceeded { .. }) => 3,
        _ => 1,
    }
}

pub struct Outcome {
    pub body: String,
    pub code: u8,
}

fn emit(config: &RunConfig, body: &str) -> anyhow::Result<()> {
    match &config.out {
        Some(path) => std::fs::write(path, body).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

pub fn run(config: &RunConfig) -> anyhow::Result<Outcome> {
    match config.command {
        Command::Validate => cmd_validate(config),
        Command::Idempotents => cmd_idempotents(config),
        Command::Code => cmd_code(config),
        Command::Table => cmd_table(config),
        Command::Selftest => cmd_selftest(config),
    }
}

fn group_arg(config: &RunConfig) -> anyhow::Result<GroupSpec> {
    let text = config
        .group
        .as_deref()
        .ok_or_else(|| Error::Parse("--group is required".into()))?;
    Ok(GroupSpec::parse(text)?)
}

fn ring_arg(config: &RunConfig) -> anyhow::Result<RingHandle> {
    Ok(RingHandle::parse(&config.ring)?)
}

fn json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn csv_string<F>(write_rows: F) -> anyhow::Result<String>
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> anyhow::Result<()>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    write_rows(&mut w)?;
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn cmd_validate(config: &RunConfig) -> anyhow::Result<Outcome> {
    let spec = group_arg(config)?;
    ring_arg(config)?;
    let report = validate_group(&spec);
    let body = render_validation(&report, config.format)?;
    Ok(Outcome {
        body,
        code: if report.is_valid() { 0 } else { 2 },
    })
}

fn render_validation(report: &ValidationReport, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => json(report),
        Format::Text => Ok(format!("{report}\n")),
        Format::Csv => csv_string(|w| {
            w.write_record(["group", "valid", "violations"])?;
            let v: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
            w.write_record([report.group.clone(), report.valid.to_string(), v.join("; ")])?;
            Ok(())
        }),
    }
}

pub fn cmd_idempotents(config: &RunConfig) -> anyhow::Result<Outcome> {
    let family = primitive_family(&group_arg(config)?, ring_arg(config)?)?;
    let body = render_family(&family, config.format)?;
    let code = if family.verification.all_pass() { 0 } else { 2 };
    Ok(Outcome { body, code })
}

fn render_family(family: &PrimitiveFamily, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => json(family),
        Format::Csv => csv_string(|w| {
            w.write_record(["block", "split", "method", "weight", "element"])?;
            for r in &family.records {
                w.write_record([
                    r.block.to_string(),
                    r.split.map(|s| s.to_string()).unwrap_or_default(),
                    serde_json::to_value(r.method)?.as_str().unwrap_or_default().to_string(),
                    r.element.weight().to_string(),
                    r.element.to_string(),
                ])?;
            }
            Ok(())
        }),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "{} primitive idempotents of {}[{}]", family.records.len(), family.ring, family.group)?;
            for r in &family.records {
                writeln!(s, "{:<14} weight {:>5}  {}", r.label(), r.element.weight(), r.element)?;
            }
            let v = &family.verification;
            writeln!(
                s,
                "count {} (expected {}), idempotent {}, orthogonal {}, sum 1 {}, reduces to oracle {}",
                v.count, v.expected_count, v.all_idempotent, v.pairwise_orthogonal, v.sums_to_one, v.reduces_to_oracle
            )?;
            Ok(s)
        }
    }
}

fn parse_split(text: &str) -> anyhow::Result<Option<SplitTag>> {
    let t = text.trim();
    if t.is_empty() || t == "-" || t.eq_ignore_ascii_case("none") {
        return Ok(None);
    }
    Ok(Some(t.parse()?))
}

/// The component named by `block` and `split`. Without a split tag a block
/// with several summands stands for its whole block idempotent.
pub fn select_component(
    family: &PrimitiveFamily,
    group: &CyclicGroup,
    ring: RingHandle,
    block: &str,
    split: Option<SplitTag>,
    k: u32,
) -> anyhow::Result<CodeComponent> {
    let block = Block::parse(group, block)?;
    let element = match split {
        None if block.split_count() > 1 => block_idempotent(ring, group, &block)?,
        _ => {
            let record = family
                .find(&block, split)
                .ok_or_else(|| Error::UnknownSelector(match split {
                    Some(s) => format!("{block}/{s}"),
                    None => block.to_string(),
                }))?;
            record.element.clone()
        }
    };
    Ok(CodeComponent::new(element, k, Some(ComponentLabel { block, split })))
}

pub fn cmd_code(config: &RunConfig) -> anyhow::Result<Outcome> {
    let spec = group_arg(config)?;
    let ring = ring_arg(config)?;
    if config.block.is_empty() {
        return Err(Error::Parse("--block is required".into()).into());
    }
    let family = primitive_family(&spec, ring)?;
    let group = CyclicGroup::new(spec)?;
    let mut components = Vec::new();
    for (i, block) in config.block.iter().enumerate() {
        let split = match config.split.len() {
            0 => None,
            1 if config.block.len() == 1 => parse_split(&config.split[0])?,
            _ => parse_split(config.split.get(i).ok_or_else(|| {
                Error::Parse("give one --split per --block".into())
            })?)?,
        };
        let k = match config.k.len() {
            0 => 0,
            1 => config.k[0],
            _ => *config
                .k
                .get(i)
                .ok_or_else(|| Error::Parse("give one --k per --block".into()))?,
        };
        components.push(select_component(&family, &group, ring, block, split, k)?);
    }
    let code = CodeSpec::new(ring, &group, components)?;
    let report = analyze_code(&code, config.budget)?;
    let over_budget = report.weight_method == WeightMethod::BoundsOnly;
    Ok(Outcome {
        body: render_code(&report, config.format)?,
        code: if over_budget { 3 } else { 0 },
    })
}

fn opt(x: Option<u64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn render_code(report: &CodeReport, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => json(report),
        Format::Csv => csv_string(|w| {
            w.write_record([
                "ring", "group", "block", "split", "k", "component_size_log2", "size", "size_method",
                "min_weight", "lower_bound", "upper_bound", "weight_method",
            ])?;
            for c in &report.components {
                w.write_record([
                    report.ring.clone(),
                    report.group.clone(),
                    c.block.as_ref().map(|b| b.to_string()).unwrap_or_default(),
                    c.split.map(|s| s.to_string()).unwrap_or_default(),
                    c.k.to_string(),
                    c.size_log2.to_string(),
                    report.size.clone(),
                    serde_json::to_value(report.size_method)?.as_str().unwrap_or_default().into(),
                    opt(report.min_weight),
                    opt(report.lower_bound),
                    opt(report.upper_bound),
                    serde_json::to_value(report.weight_method)?.as_str().unwrap_or_default().into(),
                ])?;
            }
            Ok(())
        }),
        Format::Text => {
            let mut s = String::new();
            let comps: Vec<String> = report
                .components
                .iter()
                .map(|c| {
                    let b = c.block.as_ref().map(|b| b.to_string()).unwrap_or_else(|| "?".into());
                    match c.split {
                        Some(t) => format!("s^{} e{b}/{t}", c.k),
                        None => format!("s^{} e{b}", c.k),
                    }
                })
                .collect();
            writeln!(s, "code <{}> over {}[{}]", comps.join(" + "), report.ring, report.group)?;
            writeln!(s, "size        2^{} = {} ({:?})", report.size_log2, report.size, report.size_method)?;
            writeln!(s, "min weight  {} ({:?})", report.min_weight.map_or("-".into(), |w| w.to_string()), report.weight_method)?;
            writeln!(s, "bounds      [{}, {}]", opt(report.lower_bound), opt(report.upper_bound))?;
            if let Some(w) = &report.witness {
                writeln!(s, "witness     {w}")?;
            }
            Ok(s)
        }
    }
}

/// One row of the weight table for `G = C_{3^n1} x C_{5^n2} x C_{11^n3}`.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub row: u8,
    pub code: String,
    pub k: u32,
    /// Word count from the row's tabulated formula, `2^{words_formula_log2}`.
    pub words_formula_log2: u64,
    pub words_formula: String,
    pub words_log2: u64,
    pub words: String,
    pub words_match: bool,
    /// Tabulated weight; `None` where the table leaves the cell blank.
    pub weight_formula: Option<u64>,
    pub min_weight: Option<u64>,
    pub weight_method: WeightMethod,
    pub lower_bound: Option<u64>,
    pub upper_bound: Option<u64>,
    pub weight_match: Option<bool>,
    pub formula_blank: bool,
    /// Not a tabulated row: the primitive summand row 6 stands for.
    pub supplementary: bool,
    /// Weight of the generating idempotent itself.
    pub generator_weight: u64,
}

/// Rows 1-6 of the table plus a supplementary row 7, evaluated at the given
/// levels `j` and exponent `k`.
pub fn table_rows(
    spec: &GroupSpec,
    ring: RingHandle,
    j: &[u32],
    k: u32,
    budget: u64,
) -> anyhow::Result<Vec<TableRow>> {
    if spec.primes() != [3, 5, 11] {
        return Err(Error::Parse(format!(
            "the table needs a group 3^n1,5^n2,11^n3, got {spec}"
        ))
        .into());
    }
    let group = CyclicGroup::new(spec.clone())?;
    let n = spec.exponents();
    if j.len() != 3 || j.iter().zip(&n).any(|(&ji, &ni)| ji == 0 || ji > ni) {
        return Err(Error::InvalidBlock {
            block: j.to_vec(),
            reason: "table levels must satisfy 1 <= j_i <= n_i".into(),
        }
        .into());
    }
    let t = ring.t();
    if k >= t {
        return Err(Error::KOutOfRange { k, t }.into());
    }
    let tk = (t - k) as u64;
    let phi = |p: u64, ji: u32| p.pow(ji) - p.pow(ji - 1);
    let pw = |p: u64, e: u32| p.pow(e);
    let (p3, p5, p11) = (phi(3, j[0]), phi(5, j[1]), phi(11, j[2]));
    let order = spec.order();

    let block = |levels: [u32; 3]| Block::new(&group, &levels);
    let mut rows = Vec::new();
    let mut push = |row: u8,
                    code: &str,
                    component: CodeComponent,
                    formula_log2: u64,
                    weight_formula: Option<u64>,
                    supplementary: bool|
     -> anyhow::Result<()> {
        let generator_weight = component.idempotent.weight() as u64;
        let report = analyze_code(&CodeSpec::new(ring, &group, vec![component])?, budget)?;
        rows.push(TableRow {
            row,
            code: code.to_string(),
            k,
            words_formula_log2: formula_log2,
            words_formula: format!("2^{formula_log2}"),
            words_log2: report.size_log2,
            words: report.size.clone(),
            words_match: formula_log2 == report.size_log2,
            weight_formula,
            min_weight: report.min_weight,
            weight_method: report.weight_method,
            lower_bound: report.lower_bound,
            upper_bound: report.upper_bound,
            weight_match: weight_formula.zip(report.min_weight).map(|(a, b)| a == b),
            formula_blank: weight_formula.is_none() && !supplementary,
            supplementary,
            generator_weight,
        });
        Ok(())
    };

    let whole = |levels: [u32; 3]| -> anyhow::Result<CodeComponent> {
        let b = block(levels)?;
        Ok(CodeComponent::new(
            block_idempotent(ring, &group, &b)?,
            k,
            Some(ComponentLabel { block: b, split: None }),
        ))
    };
    push(1, "<s^k hat(a1) hat(a2) hat(a3)>", whole([0, 0, 0])?, tk, Some(order), false)?;
    push(
        2,
        "<s^k (hat(a1^{3^j1}) - hat(a1^{3^{j1-1}})) hat(a2) hat(a3)>",
        whole([j[0], 0, 0])?,
        tk * p3,
        Some(2 * pw(3, n[0] - j[0]) * pw(5, n[1]) * pw(11, n[2])),
        false,
    )?;
    push(
        3,
        "<s^k hat(a1) (hat(a2^{5^j2}) - hat(a2^{5^{j2-1}})) hat(a3)>",
        whole([0, j[1], 0])?,
        tk * p5,
        Some(2 * pw(3, n[0]) * pw(5, n[1] - j[1]) * pw(11, n[2])),
        false,
    )?;
    push(
        4,
        "<s^k hat(a1) hat(a2) (hat(a3^{11^j3}) - hat(a3^{11^{j3-1}}))>",
        whole([0, 0, j[2]])?,
        tk * p11,
        Some(2 * pw(3, n[0]) * pw(5, n[1]) * pw(11, n[2] - j[2])),
        false,
    )?;

    let b5 = block([j[0], j[1], 0])?;
    let (e1, _) = split_block_2(ring, &group, &b5)?;
    push(
        5,
        "<s^k (u1 u2 + u1^2 u2^2) hat(a3)>",
        CodeComponent::new(
            e1,
            k,
            Some(ComponentLabel {
                block: b5,
                split: Some(SplitTag::Numbered(1)),
            }),
        ),
        tk * p3 * p5 / 2,
        None,
        false,
    )?;

    let b6 = block([j[0], j[1], j[2]])?;
    // The tabulated count has no factor from C_{3^n1}.
    push(
        6,
        "<s^k (u1 u2 u3 + u1^2 u2^2 u3^2)>",
        CodeComponent::new(full_block_representative(ring, &group, &b6)?, k, None),
        tk * p5 * p11 / 4,
        None,
        false,
    )?;
    let [f1, ..] = split_block_3(ring, &group, &b6)?;
    push(
        7,
        "<s^k (eps + y + y^2)>, y = u1 u2 u3, eps = e_{j1 j2 j3}",
        CodeComponent::new(
            f1,
            k,
            Some(ComponentLabel {
                block: b6,
                split: Some(SplitTag::Numbered(1)),
            }),
        ),
        tk * p3 * p5 * p11 / 4,
        None,
        true,
    )?;
    Ok(rows)
}

pub fn cmd_table(config: &RunConfig) -> anyhow::Result<Outcome> {
    let spec = group_arg(config)?;
    let ring = ring_arg(config)?;
    let report = validate_group(&spec);
    if !report.is_valid() {
        return Err(Error::InvalidGroup(report).into());
    }
    let j = match config.block.as_slice() {
        [] => vec![1, 1, 1],
        [b] => b
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad level {x:?}"))))
            .collect::<Result<Vec<_>, _>>()?,
        _ => return Err(Error::Parse("table takes one --block".into()).into()),
    };
    let k = config.k.first().copied().unwrap_or(0);
    let rows = table_rows(&spec, ring, &j, k, config.budget)?;
    let body = match config.format {
        Format::Json => json(&rows)?,
        Format::Csv => csv_string(|w| {
            for r in &rows {
                w.serialize(r)?;
            }
            Ok(())
        })?,
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "{:<3} {:<62} {:>10} {:>10} {:>7} {:>7} {:>9}", "row", "code", "words*", "words", "weight*", "weight", "bounds")?;
            for r in &rows {
                let bounds = format!("[{},{}]", opt(r.lower_bound), opt(r.upper_bound));
                writeln!(
                    s,
                    "{:<3} {:<62} {:>10} {:>10} {:>7} {:>7} {:>9}",
                    r.row,
                    r.code,
                    r.words_formula,
                    format!("2^{}", r.words_log2),
                    r.weight_formula.map_or("".into(), |w| w.to_string()),
                    r.min_weight.map_or("-".into(), |w| w.to_string()),
                    bounds
                )?;
            }
            writeln!(s, "* tabulated formula")?;
            s
        }
    };
    Ok(Outcome { body, code: 0 })
}

pub fn cmd_selftest(config: &RunConfig) -> anyhow::Result<Outcome> {
    let results = selftest::run_all();
    let all = results.iter().all(|r| r.passed);
    let body = match config.format {
        Format::Json => json(&results)?,
        Format::Csv => csv_string(|w| {
            for r in &results {
                w.serialize(r)?;
            }
            Ok(())
        })?,
        Format::Text => {
            let mut s = String::new();
            for r in &results {
                writeln!(s, "{r}")?;
            }
            let passed = results.iter().filter(|r| r.passed).count();
            writeln!(s, "{passed}/{} criteria passed", results.len())?;
            s
        }
    };
    Ok(Outcome {
        body,
        code: if all { 0 } else { 2 },
    })
}
