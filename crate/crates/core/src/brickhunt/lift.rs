//! Lifting a 2×2 brick `(S, (0, n))` with dual `(a1, a3)` to the semigroup
//! `<a1, a1 + n, a3, a3 + n>` and the ideal `(0, n)`.
//!
//! Whether the lifted pair is always a perfect brick is open; the outcome is
//! reported, never assumed.

use serde::Serialize;

use crate::balanced::{classify, Classification};
use crate::error::{Error, Result};
use crate::ideal::{brick_check, BrickCheck, RelativeIdeal};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftOutcome {
    /// `a1, a1 + n, a3, a3 + n`, ascending.
    pub quadruple: [i64; 4],
    /// Minimal generators of the lifted semigroup; fewer than four when the
    /// quadruple is redundant.
    pub semigroup_gens: Vec<i64>,
    pub ideal_gens: Vec<i64>,
    pub check: BrickCheck,
    pub classification: Classification,
}

impl LiftOutcome {
    pub fn is_perfect_two_by_two(&self) -> bool {
        self.check.is_perfect && self.check.dims() == (2, 2)
    }
}

pub fn lift(s: &NumericalSemigroup, i: &RelativeIdeal<'_>) -> Result<LiftOutcome> {
    if i.min() != 0 {
        return Err(Error::ZeroNotGenerator(i.min()));
    }
    let original = brick_check(s, i)?;
    if !original.is_brick || original.dims() != (2, 2) {
        return Err(Error::NotTwoByTwo {
            k: original.mu_ideal,
            m: original.mu_dual,
            is_brick: original.is_brick,
        });
    }
    let n = i.generators()[1];
    let (a1, a3) = (original.dual_gens[0], original.dual_gens[1]);
    let overflow = || Error::Overflow("lifted quadruple");
    let mut quadruple = [
        a1,
        a1.checked_add(n).ok_or_else(overflow)?,
        a3,
        a3.checked_add(n).ok_or_else(overflow)?,
    ];
    quadruple.sort_unstable();

    let lifted = NumericalSemigroup::new(&quadruple)?;
    let ideal = RelativeIdeal::new(&lifted, &[0, n])?;
    let check = brick_check(&lifted, &ideal)?;
    Ok(LiftOutcome {
        quadruple,
        semigroup_gens: lifted.generators().to_vec(),
        ideal_gens: ideal.generators().to_vec(),
        check,
        classification: classify(&quadruple)?,
    })
}
