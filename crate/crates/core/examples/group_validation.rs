//! Which groups qualify, and the 2-cyclotomic cosets behind the count.
use ringcodes::arith::{cyclotomic_cosets, validate_group, GroupSpec};
use ringcodes::f2_oracle::component_count_formula;

fn main() -> ringcodes::Result<()> {
    for d in ["3^1,5^1", "3^2,5^1,11^1", "7^1", "3^1,13^1"] {
        let spec = GroupSpec::parse(d)?;
        let report = validate_group(&spec);
        if report.is_valid() {
            let cosets = cyclotomic_cosets(spec.order())?;
            println!("{report}; {} cosets, formula {}", cosets.len(), component_count_formula(&spec));
        } else {
            println!("{report}");
        }
    }
    let spec = GroupSpec::parse("3^1,5^1")?;
    for c in cyclotomic_cosets(spec.order())? {
        let multi: Vec<Vec<u64>> = c.iter().map(|&k| spec.crt_inverse(k)).collect::<Result<_, _>>()?;
        println!("{c:?} -> {multi:?}");
    }
    Ok(())
}
