//! Elements of Z_4[C_3 x C_5]: products, subgroup averages and Frobenius.
use ringcodes::group_algebra::SubgroupSpec;
use ringcodes::{AlgebraElem, CyclicGroup, RingHandle};

fn main() -> ringcodes::Result<()> {
    let ring = RingHandle::parse("z4")?;
    let group = CyclicGroup::parse("3^1,5^1")?;
    let a1 = AlgebraElem::group_gen(ring, &group, 0)?;
    let a2 = AlgebraElem::group_gen(ring, &group, 1)?;
    let x = &AlgebraElem::one(ring, &group) + &(&a1 * &a2);
    println!("x = {x}");
    println!("x^2 = {}", x.square());
    println!("frobenius(x) = {}", x.frobenius());

    let h = SubgroupSpec::in_factor(&group, 1, 0)?;
    let hat = AlgebraElem::hat(ring, &group, &h);
    println!("hat(<a2>) = {hat}");
    println!("idempotent: {}", hat.is_idempotent());
    println!("{}", serde_json::to_string(&hat).unwrap());
    Ok(())
}
