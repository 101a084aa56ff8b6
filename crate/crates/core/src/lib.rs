//! Order bounds and improved-code redundancy for one-point algebraic
//! geometry codes, computed from the Weierstrass semigroup alone.
//!
//! The closed forms for Arf semigroups live next to brute-force counterparts
//! that work for any numerical semigroup:
//!
//! * [`semigroup`]: canonical representation and elementary queries.
//! * [`arf`]: the Arf property, Arf closure, and the sets `A[rho]`.
//! * [`bounds`]: Goppa and order bounds, `R_d`, `S_d`, stability, dimension
//!   gains of improved codes.
//! * [`towers`]: inductive sequences and the Garcia–Stichtenoth tower.
//!
//! ```
//! use arfcodes_core::{breakpoints, dimension_improvement, NumericalSemigroup};
//!
//! let klein: NumericalSemigroup = "S = <3, 5, 7>".parse()?;
//! assert_eq!(breakpoints(&klein)?.breakpoints, vec![0, 4, 6]);
//! assert_eq!(dimension_improvement(&klein, 6, 10)?.delta, 1);
//! # Ok::<(), arfcodes_core::Error>(())
//! ```

pub mod arf;
pub mod bounds;
pub mod error;
pub mod sample;
pub mod semigroup;
pub mod towers;

pub use arf::{arf_closure, aset, is_arf, is_arf_via_full_definition, p_index, ASetReport};
pub use bounds::{
    breakpoints, code_profile, dimension_improvement, goppa_bound, is_stable, order_bound_arf,
    order_bound_bruteforce, r_card_arf, r_set, s_set, CodeProfileRow, DimensionImprovement,
    OrderBoundProfile,
};
pub use error::{Error, Result};
pub use semigroup::NumericalSemigroup;
pub use towers::{InductiveSpec, LevelParams, TowerParams};
