//! Size and minimum weight of every single-component code of length 15 over Z_4.
use ringcodes::codes::{ComponentLabel, DEFAULT_BUDGET};
use ringcodes::{analyze_code, primitive_family, CodeComponent, CodeSpec, CyclicGroup, RingHandle};

fn main() -> ringcodes::Result<()> {
    let ring = RingHandle::parse("z4")?;
    let group = CyclicGroup::parse("3^1,5^1")?;
    let family = primitive_family(group.spec(), ring)?;
    for rec in &family.records {
        for k in 0..ring.t() {
            let label = ComponentLabel { block: rec.block.clone(), split: rec.split };
            let comp = CodeComponent::new(rec.element.clone(), k, Some(label));
            let report = analyze_code(&CodeSpec::new(ring, &group, vec![comp])?, DEFAULT_BUDGET)?;
            println!(
                "{:<8} k={k}  size {:>4}  min weight {:?}  bounds [{:?}, {:?}]",
                rec.label(),
                report.size,
                report.min_weight,
                report.lower_bound,
                report.upper_bound
            );
        }
    }
    Ok(())
}
