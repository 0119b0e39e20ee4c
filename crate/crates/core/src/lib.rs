//! Exact computation over numerical semigroups and their relative ideals.
//!
//! * [`semigroup`]: construction, membership, Apéry sets, Frobenius numbers.
//! * [`ideal`]: relative ideals, duals, sums and brick checks.
//! * [`balanced`]: balanced and unitary quadruples and their closed forms.
//! * [`brickhunt`]: exhaustive brick search, the 2×2 lift, report formats.

pub mod arith;
pub mod balanced;
pub mod brickhunt;
pub mod error;
pub mod ideal;
pub mod semigroup;

pub use balanced::{classify, BalancedProfile, Classification};
pub use brickhunt::{search, BrickReport, SearchConfig};
pub use error::{Error, Result};
pub use ideal::{brick_check, BrickCheck, RelativeIdeal};
pub use semigroup::NumericalSemigroup;
