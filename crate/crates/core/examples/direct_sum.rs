//! A code built from two orthogonal components at different powers of s.
use ringcodes::codes::{ComponentLabel, DEFAULT_BUDGET};
use ringcodes::{analyze_code, primitive_family, Block, CodeComponent, CodeSpec, CyclicGroup, RingHandle};

fn main() -> ringcodes::Result<()> {
    let ring = RingHandle::parse("z4")?;
    let group = CyclicGroup::parse("3^1,5^1")?;
    let family = primitive_family(group.spec(), ring)?;
    let mut components = Vec::new();
    for (levels, k) in [([1, 0], 0), ([0, 1], 1)] {
        let block = Block::new(&group, &levels)?;
        let rec = family.find(&block, None).expect("single-summand block");
        components.push(CodeComponent::new(
            rec.element.clone(),
            k,
            Some(ComponentLabel { block, split: None }),
        ));
    }
    let report = analyze_code(&CodeSpec::new(ring, &group, components)?, DEFAULT_BUDGET)?;
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(())
}
