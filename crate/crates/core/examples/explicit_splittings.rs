//! Closed-form summands of a block, checked against the complete family.
use ringcodes::idempotents::{split_block_2, split_block_ab, u_element};
use ringcodes::{primitive_family, Block, CyclicGroup, RingHandle};

fn main() -> ringcodes::Result<()> {
    let ring = RingHandle::parse("z4")?;
    let group = CyclicGroup::parse("3^1,5^1")?;
    let u1 = u_element(ring, &group, 0, 1)?;
    println!("u1 = {}", u1.element);

    let block = Block::new(&group, &[1, 1])?;
    let (e1, e2) = split_block_2(ring, &group, &block)?;
    let family = primitive_family(group.spec(), ring)?;
    for (name, e) in [("e1", &e1), ("e2", &e2)] {
        let member = family.records.iter().any(|r| &r.element == e);
        println!("{name} = {e}\n  in family: {member}");
    }

    let group = CyclicGroup::parse("3^1,5^1,11^1")?;
    let block = Block::new(&group, &[1, 1, 1])?;
    for e in split_block_ab(ring, &group, &block)? {
        println!("A/B summand: weight {}, idempotent {}", e.weight(), e.is_idempotent());
    }
    Ok(())
}
