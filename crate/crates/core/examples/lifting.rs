//! Lifting F_2 idempotents to Z_8 G and F_2[u]/(u^2) G.
use ringcodes::arith::GroupSpec;
use ringcodes::f2_oracle::primitive_idempotents_f2;
use ringcodes::idempotents::lift_idempotent;
use ringcodes::RingHandle;

fn main() -> ringcodes::Result<()> {
    let spec = GroupSpec::parse("3^1")?;
    for ring in [RingHandle::parse("z8")?, RingHandle::parse("f2u2")?] {
        for f in primitive_idempotents_f2(&spec)? {
            let e = lift_idempotent(&f, ring)?;
            println!("{}: {f}  ->  {e}  (idempotent {})", ring.designator(), e.is_idempotent());
        }
    }
    Ok(())
}
