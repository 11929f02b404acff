//! Primitive idempotents of F_2 G by coset-sum refinement.
use ringcodes::arith::GroupSpec;
use ringcodes::f2_oracle::{ideal_dimension_f2, primitive_idempotents_f2};

fn main() -> ringcodes::Result<()> {
    let spec = GroupSpec::parse("3^1,5^1")?;
    for e in primitive_idempotents_f2(&spec)? {
        println!("dim {:>2}  weight {:>2}  {e}", ideal_dimension_f2(&e), e.weight());
    }
    Ok(())
}
