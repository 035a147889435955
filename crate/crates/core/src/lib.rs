//! Wedderburn decomposition of twisted group algebras of metacyclic groups
//! `C_p x| C_m` over prime fields, with a brute-force oracle that rebuilds
//! the algebra from its multiplication table.
//!
//! ```
//! use wedderburn_core::{validate_spec, wedderburn, CocycleClass, SimpleBlock};
//!
//! let spec = validate_spec(7, 3, 2).unwrap();
//! let cls = CocycleClass::from_integer(13, 3, 2).unwrap();
//! let dec = wedderburn(&spec, &cls).unwrap();
//! assert_eq!(dec.all_blocks(), vec![SimpleBlock::new(3, 2), SimpleBlock::new(1, 3)]);
//! ```

pub mod arith;
pub mod cohomology;
pub mod decomposition;
pub mod error;
pub mod ff;
pub mod linalg;
pub mod oracle;
pub mod orbits;
pub mod par;
pub mod report;
pub mod scan;

pub use cohomology::{validate_spec, CocycleClass, GroupSpec};
pub use decomposition::{wedderburn, Decomposition, SimpleBlock};
pub use error::{Error, Result};
pub use par::Execution;
