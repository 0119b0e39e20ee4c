//! Balanced and unitary four-generator semigroups.
//!
//! A set `a1 < a2 < a3 < a4` is balanced when it has overall gcd 1, no
//! element divides another, and `a1 + a4 = a2 + a3`. Writing `D = gcd(a1, a4)`
//! and `E = gcd(a2, a3)`, the common sum is divisible by `D·E`; the set is
//! unitary when the quotient is 1. Unitary semigroups are symmetric, have
//! closed-form Frobenius numbers and carry a perfect 2×2 brick `(0, a2 - a1)`.

use std::fmt;

use serde::Serialize;

use crate::arith::{gcd, gcd_all};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// The `(D, E, q1..q4, CS, CQ)` decomposition of a balanced quadruple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BalancedProfile {
    /// Generators `a1 < a2 < a3 < a4`.
    pub a: [i64; 4],
    /// `gcd(a1, a4)`.
    pub d: i64,
    /// `gcd(a2, a3)`.
    pub e: i64,
    /// `a1 = q1·D, a2 = q2·E, a3 = q3·E, a4 = q4·D`.
    pub q: [i64; 4],
    pub common_sum: i64,
    pub common_quotient: i64,
    /// `a2 - a1 = a4 - a3`.
    pub shift: i64,
}

impl BalancedProfile {
    pub fn is_unitary(&self) -> bool {
        self.common_quotient == 1
    }

    fn require_unitary(&self) -> Result<()> {
        if self.is_unitary() {
            Ok(())
        } else {
            Err(Error::NotUnitary)
        }
    }

    /// The full semigroup `<a1, a2, a3, a4>`.
    pub fn semigroup(&self) -> Result<NumericalSemigroup> {
        NumericalSemigroup::new(&self.a)
    }

    /// The subsemigroup `T = <a1, a2, a3>`.
    pub fn sub_semigroup(&self) -> Result<NumericalSemigroup> {
        NumericalSemigroup::new(&self.a[..3])
    }
}

/// Which defining condition a quadruple failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RejectReason {
    NonPositive,
    /// Two values coincide, so no strict ordering exists.
    NotDistinct,
    NotCoprime,
    /// `divisor | multiple` for two distinct members.
    Divides {
        divisor: i64,
        multiple: i64,
    },
    /// `a1 + a4 != a2 + a3`.
    UnequalSums,
    /// The four values do not minimally generate their semigroup.
    NotMinimal {
        redundant: i64,
    },
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::NonPositive => write!(f, "values must be positive"),
            RejectReason::NotDistinct => write!(f, "values are not distinct"),
            RejectReason::NotCoprime => write!(f, "gcd of the values is not 1"),
            RejectReason::Divides { divisor, multiple } => {
                write!(f, "{divisor} divides {multiple}")
            }
            RejectReason::UnequalSums => write!(f, "a1 + a4 != a2 + a3"),
            RejectReason::NotMinimal { redundant } => {
                write!(f, "{redundant} is generated by the others")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Classification {
    NotBalanced(RejectReason),
    Balanced(BalancedProfile),
    Unitary(BalancedProfile),
}

impl Classification {
    pub fn profile(&self) -> Option<&BalancedProfile> {
        match self {
            Classification::NotBalanced(_) => None,
            Classification::Balanced(p) | Classification::Unitary(p) => Some(p),
        }
    }

    pub fn is_unitary(&self) -> bool {
        matches!(self, Classification::Unitary(_))
    }
}

/// Classifies four values as not balanced, balanced, or unitary.
///
/// Input order is irrelevant. Conditions are checked in the order: ordering,
/// gcd, divisibility, equal sums, then minimal generation.
pub fn classify(gens: &[i64]) -> Result<Classification> {
    let a: [i64; 4] = gens.try_into().map_err(|_| Error::WrongArity(gens.len()))?;
    let mut a = a;
    a.sort_unstable();
    classify_sorted(a)
}

fn classify_sorted(a: [i64; 4]) -> Result<Classification> {
    use Classification::NotBalanced;

    if a[0] < 1 {
        return Ok(NotBalanced(RejectReason::NonPositive));
    }
    if a.windows(2).any(|w| w[0] == w[1]) {
        return Ok(NotBalanced(RejectReason::NotDistinct));
    }
    if gcd_all(&a) != 1 {
        return Ok(NotBalanced(RejectReason::NotCoprime));
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if a[j] % a[i] == 0 {
                return Ok(NotBalanced(RejectReason::Divides {
                    divisor: a[i],
                    multiple: a[j],
                }));
            }
        }
    }
    let common_sum = match (a[0].checked_add(a[3]), a[1].checked_add(a[2])) {
        (Some(x), Some(y)) if x == y => x,
        (Some(_), Some(_)) => return Ok(NotBalanced(RejectReason::UnequalSums)),
        _ => return Err(Error::Overflow("common sum")),
    };
    let s = NumericalSemigroup::new(&a)?;
    if let Some(&redundant) = a.iter().find(|x| !s.generators().contains(x)) {
        return Ok(NotBalanced(RejectReason::NotMinimal { redundant }));
    }

    let profile = profile_of(a, common_sum);
    Ok(if profile.is_unitary() {
        Classification::Unitary(profile)
    } else {
        Classification::Balanced(profile)
    })
}

fn profile_of(a: [i64; 4], common_sum: i64) -> BalancedProfile {
    let d = gcd(a[0], a[3]);
    let e = gcd(a[1], a[2]);
    BalancedProfile {
        a,
        d,
        e,
        q: [a[0] / d, a[1] / e, a[2] / e, a[3] / d],
        common_sum,
        // gcd(D, E) = 1 and both divide the common sum.
        common_quotient: common_sum / d / e,
        shift: a[1] - a[0],
    }
}

/// A value `t1·a1 + t2·a2 + t3·a3 + t4·a4` together with its coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Combination {
    pub value: i64,
    pub coeffs: [i64; 4],
}

impl Combination {
    fn new(a: &[i64; 4], coeffs: [i64; 4]) -> Self {
        let value = coeffs.iter().zip(a).map(|(t, x)| t * x).sum();
        Self { value, coeffs }
    }
}

/// Three labeled families of combinations, e.g. `A1, A2, A3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition3 {
    pub parts: [Vec<Combination>; 3],
}

impl Partition3 {
    pub fn total_len(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    /// All values, ascending, duplicates kept.
    pub fn values(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.parts.iter().flatten().map(|c| c.value).collect();
        v.sort_unstable();
        v
    }

    pub fn contains_value(&self, x: i64) -> bool {
        self.parts.iter().flatten().any(|c| c.value == x)
    }
}

/// The candidate Apéry sets of a balanced semigroup:
///
/// * `A1 = {t4·a4 : 0 ≤ t4 < q1}`
/// * `A2 = {t2·a2 + t4·a4 : 1 ≤ t2 ≤ q3, 0 ≤ t4 < q1}`
/// * `A3 = {t3·a3 + t4·a4 : 1 ≤ t3 < q2, 0 ≤ t4 < q1}`
///
/// Every Apéry element lies in the union; for unitary profiles the union is
/// exactly the Apéry set, and this can fail otherwise.
pub fn apery_partition(profile: &BalancedProfile) -> Partition3 {
    let [q1, q2, q3, _] = profile.q;
    let a = &profile.a;
    let a1 = (0..q1)
        .map(|t4| Combination::new(a, [0, 0, 0, t4]))
        .collect();
    let a2 = (1..=q3)
        .flat_map(|t2| (0..q1).map(move |t4| [0, t2, 0, t4]))
        .map(|c| Combination::new(a, c))
        .collect();
    let a3 = (1..q2)
        .flat_map(|t3| (0..q1).map(move |t4| [0, 0, t3, t4]))
        .map(|c| Combination::new(a, c))
        .collect();
    Partition3 {
        parts: [a1, a2, a3],
    }
}

/// The sets `B1, B2, B3` that make up `S \ T` for a unitary semigroup,
/// `T = <a1, a2, a3>`:
///
/// * `B1 = {t1·a1 + t4·a4 : 1 ≤ t4 < q1, 0 ≤ t1 < t4}`
/// * `B2 = {t1·a1 + t2·a2 + t4·a4 : 1 ≤ t2 ≤ q3, ...}`
/// * `B3 = {t1·a1 + t3·a3 + t4·a4 : 1 ≤ t3 < q2, ...}`
pub fn boundary_sets(profile: &BalancedProfile) -> Result<Partition3> {
    profile.require_unitary()?;
    let [q1, q2, q3, _] = profile.q;
    let a = &profile.a;
    let lower = move |t4: i64| (0..t4).map(move |t1| (t1, t4));
    let ladder = move || (1..q1).flat_map(lower);
    let b1 = ladder()
        .map(|(t1, t4)| Combination::new(a, [t1, 0, 0, t4]))
        .collect();
    let b2 = (1..=q3)
        .flat_map(|t2| ladder().map(move |(t1, t4)| [t1, t2, 0, t4]))
        .map(|c| Combination::new(a, c))
        .collect();
    let b3 = (1..q2)
        .flat_map(|t3| ladder().map(move |(t1, t4)| [t1, 0, t3, t4]))
        .map(|c| Combination::new(a, c))
        .collect();
    Ok(Partition3 {
        parts: [b1, b2, b3],
    })
}

/// `((q1 - 1) / 2)·a1`, the size of `S \ T` for unitary profiles.
pub fn boundary_size(profile: &BalancedProfile) -> i64 {
    let q1 = profile.q[0];
    // (q1 - 1)·q1 is even, so divide after multiplying.
    (q1 - 1) * q1 / 2 * profile.d
}

fn frobenius_t_formula(profile: &BalancedProfile) -> i64 {
    let [a1, _, a3, a4] = profile.a;
    let [q1, q2, ..] = profile.q;
    (q1 - 2) * a1 + q2 * a3 + (q1 - 1) * a4
}

fn frobenius_t_alternate(profile: &BalancedProfile) -> i64 {
    let [a1, a2, _, a4] = profile.a;
    let [q1, _, q3, _] = profile.q;
    (q1 - 2) * a1 + q3 * a2 + (q1 - 1) * a4
}

/// Frobenius number of `T = <a1, a2, a3>` for a unitary profile:
/// `(q1 - 2)·a1 + q2·a3 + (q1 - 1)·a4`.
pub fn frobenius_t(profile: &BalancedProfile) -> Result<i64> {
    profile.require_unitary()?;
    let g = frobenius_t_formula(profile);
    debug_assert_eq!(g, frobenius_t_alternate(profile));
    Ok(g)
}

/// Frobenius number of `S = <a1, a2, a3, a4>` for a unitary profile:
/// `g(T) - (q1 - 1)·a1`.
pub fn frobenius_s(profile: &BalancedProfile) -> Result<i64> {
    Ok(frobenius_t(profile)? - (profile.q[0] - 1) * profile.a[0])
}

/// Closed-form Frobenius values next to the exact ones, for any balanced
/// profile. Outside the unitary case the formulas carry no guarantee; this
/// exists to measure how they behave there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FormulaProbe {
    pub formula_t: i64,
    pub actual_t: i64,
    pub formula_s: i64,
    pub actual_s: i64,
}

impl FormulaProbe {
    pub fn agrees(&self) -> bool {
        self.formula_t == self.actual_t && self.formula_s == self.actual_s
    }
}

pub fn probe_frobenius_formulas(profile: &BalancedProfile) -> Result<FormulaProbe> {
    let formula_t = frobenius_t_formula(profile);
    Ok(FormulaProbe {
        formula_t,
        actual_t: profile.sub_semigroup()?.frobenius(),
        formula_s: formula_t - (profile.q[0] - 1) * profile.a[0],
        actual_s: profile.semigroup()?.frobenius(),
    })
}

/// The ideal `(0, n)` with `n = a2 - a1` and its predicted dual `(a1, a3)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalBrick {
    pub ideal_gens: [i64; 2],
    pub dual_gens: [i64; 2],
}

pub fn canonical_brick(profile: &BalancedProfile) -> Result<CanonicalBrick> {
    profile.require_unitary()?;
    Ok(CanonicalBrick {
        ideal_gens: [0, profile.shift],
        dual_gens: [profile.a[0], profile.a[2]],
    })
}

/// `{2(2z+1), 5z, 5(z+1), 3(2z+1)}` sorted, for `z ≥ 3` with `5 ∤ 2z+1`.
pub fn unitary_family(z: i64) -> Option<[i64; 4]> {
    if z < 3 {
        return None;
    }
    let odd = z.checked_mul(2)?.checked_add(1)?;
    if odd % 5 == 0 {
        return None;
    }
    let mut quad = [
        odd.checked_mul(2)?,
        z.checked_mul(5)?,
        z.checked_add(1)?.checked_mul(5)?,
        odd.checked_mul(3)?,
    ];
    quad.sort_unstable();
    Some(quad)
}

/// All balanced profiles with `a4 ≤ a4_max`, in lexicographic order of the
/// quadruple.
///
/// Only quadruples with equal sums can pass, so `a4 = a2 + a3 - a1` is
/// derived rather than searched.
pub fn balanced_profiles(a4_max: i64) -> Vec<Classification> {
    let mut out = Vec::new();
    for a1 in 1..=a4_max {
        for a2 in a1 + 1..=a4_max {
            for a3 in a2 + 1..=a4_max {
                let a4 = a2 + a3 - a1;
                if a4 > a4_max {
                    break;
                }
                let c =
                    classify_sorted([a1, a2, a3, a4]).expect("small quadruples cannot overflow");
                if c.profile().is_some() {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// Unitary profiles with `a4 ≤ a4_max`, lexicographic.
pub fn unitary_profiles(a4_max: i64) -> Vec<BalancedProfile> {
    balanced_profiles(a4_max)
        .into_iter()
        .filter_map(|c| match c {
            Classification::Unitary(p) => Some(p),
            _ => None,
        })
        .collect()
}
