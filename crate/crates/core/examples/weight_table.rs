//! The length-165 weight table over Z_4 at k = 1.
use ringcodes::arith::GroupSpec;
use ringcodes::cli::table_rows;
use ringcodes::codes::DEFAULT_BUDGET;
use ringcodes::RingHandle;

fn main() -> anyhow::Result<()> {
    let spec = GroupSpec::parse("3^1,5^1,11^1")?;
    let rows = table_rows(&spec, RingHandle::parse("z4")?, &[1, 1, 1], 1, DEFAULT_BUDGET)?;
    for r in rows {
        println!(
            "{} {:<50} words 2^{:<3} (formula {:<5}) weight {:?} formula {:?}",
            r.row, r.code, r.words_log2, r.words_formula, r.min_weight, r.weight_formula
        );
    }
    Ok(())
}
