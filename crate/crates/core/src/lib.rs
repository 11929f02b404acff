//! Primitive idempotents of `RG` for a chain ring `R` of order `2^t` and an
//! abelian group `G` of odd order, and the cyclic codes they generate.
//!
//! ```
//! use ringcodes::codes::{ComponentLabel, DEFAULT_BUDGET};
//! use ringcodes::{analyze_code, primitive_family, Block, CodeComponent, CodeSpec, CyclicGroup, RingHandle};
//!
//! # fn main() -> ringcodes::Result<()> {
//! let ring = RingHandle::parse("z4")?;
//! let group = CyclicGroup::parse("3^1,5^1")?;
//! let family = primitive_family(group.spec(), ring)?;
//! let block = Block::new(&group, &[1, 0])?;
//! let e = family.find(&block, None).unwrap().element.clone();
//! let comp = CodeComponent::new(e, 1, Some(ComponentLabel { block, split: None }));
//! let report = analyze_code(&CodeSpec::new(ring, &group, vec![comp])?, DEFAULT_BUDGET)?;
//! assert_eq!((report.size.as_str(), report.min_weight), ("4", Some(10)));
//! # Ok(())
//! # }
//! ```

pub mod arith;
pub mod chain_ring;
pub mod error;
pub mod group_algebra;
pub mod f2_oracle;
pub mod idempotents;
pub mod codes;
pub mod cli;
pub mod selftest;

pub use chain_ring::{RingElem, RingHandle};
pub use codes::{analyze_code, CodeComponent, CodeReport, CodeSpec};
pub use error::{Error, Result};
pub use group_algebra::{AlgebraElem, CyclicGroup};
pub use idempotents::{primitive_family, Block, PrimitiveFamily, SplitTag};
