//! Arithmetic in Z_8 and F_2[u]/(u^3).
use ringcodes::RingHandle;

fn main() -> ringcodes::Result<()> {
    for designator in ["z8", "f2u3"] {
        let ring = RingHandle::parse(designator)?;
        let s = ring.uniformizer();
        let x = ring.from_payload(3)?;
        println!("{}: order {}, s = {s}, s^{} = {}", ring.designator(), ring.order(), ring.t(), s.pow(ring.t() as u64));
        println!("  x = {x}, x^-1 = {}, x*s = {}", x.invert_unit()?, x.mul(&s)?);
        let valuations: Vec<u32> = ring.enumerate_elements()?.iter().map(|e| e.valuation()).collect();
        println!("  valuations {valuations:?}");
    }
    Ok(())
}
