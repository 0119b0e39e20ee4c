//! Relative ideals of a numerical semigroup.
//!
//! A relative ideal is a finite union of cosets `z + S`. It is stored as its
//! minimal generators in ascending order, which is a canonical form: two
//! ideals of the same semigroup are equal exactly when their generator lists
//! are.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{write_list, NumericalSemigroup};

#[derive(Debug, Clone)]
pub struct RelativeIdeal<'s> {
    parent: &'s NumericalSemigroup,
    min_gens: Vec<i64>,
}

impl<'s> RelativeIdeal<'s> {
    /// Builds the ideal `(gens) = ∪ (z + S)`, keeping only the minimal
    /// generators.
    pub fn new(parent: &'s NumericalSemigroup, gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self {
            parent,
            min_gens: minimalize(parent, gens),
        })
    }

    /// Principal ideal `z + S`.
    pub fn principal(parent: &'s NumericalSemigroup, z: i64) -> Self {
        Self {
            parent,
            min_gens: vec![z],
        }
    }

    /// Caller guarantees `gens` is ascending and already minimal.
    pub(crate) fn from_minimal(parent: &'s NumericalSemigroup, gens: Vec<i64>) -> Self {
        debug_assert!(!gens.is_empty());
        debug_assert_eq!(minimalize(parent, &gens), gens);
        Self {
            parent,
            min_gens: gens,
        }
    }

    pub fn parent(&self) -> &'s NumericalSemigroup {
        self.parent
    }

    /// Minimal generators, ascending.
    pub fn generators(&self) -> &[i64] {
        &self.min_gens
    }

    /// `μ_S(I)`, the number of minimal generators.
    pub fn mu(&self) -> usize {
        self.min_gens.len()
    }

    pub fn is_principal(&self) -> bool {
        self.min_gens.len() == 1
    }

    /// Smallest element of the ideal.
    pub fn min(&self) -> i64 {
        self.min_gens[0]
    }

    pub fn contains(&self, x: i64) -> bool {
        self.min_gens
            .iter()
            .any(|&z| self.parent.contains_difference(x, z))
    }

    /// Elements in `[lo, hi]`, ascending.
    pub fn elements_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).filter(|&x| self.contains(x)).collect()
    }

    /// The dual `S - I = {z : z + I ⊆ S}`.
    pub fn dual(&self) -> Result<RelativeIdeal<'s>> {
        let s = self.parent;
        let min = self.min();
        // z + min(I) < 0 rules z out; beyond g(S) - min(I) every z + I lies
        // above the Frobenius number.
        let lo = min.checked_neg().ok_or(Error::Overflow("dual window"))?;
        let hi = s
            .frobenius()
            .checked_sub(min)
            .ok_or(Error::Overflow("dual window"))?;
        let mut members = Vec::with_capacity((hi - lo + 1).max(0) as usize);
        for z in lo..=hi {
            // -zi is safe: every zi >= min > i64::MIN.
            members.push(
                self.min_gens
                    .iter()
                    .all(|&zi| s.contains_difference(z, -zi)),
            );
        }
        let window = CofiniteWindow { start: lo, members };
        Ok(Self::from_minimal(s, window.minimal_generators(s)?))
    }

    /// The sum `I + J = {i + j}`.
    pub fn add(&self, other: &RelativeIdeal<'s>) -> Result<RelativeIdeal<'s>> {
        check_parent(self, other)?;
        let mut sums = Vec::with_capacity(self.mu() * other.mu());
        for &a in &self.min_gens {
            for &b in &other.min_gens {
                sums.push(a.checked_add(b).ok_or(Error::Overflow("ideal sum"))?);
            }
        }
        RelativeIdeal::new(self.parent, &sums)
    }
}

impl PartialEq for RelativeIdeal<'_> {
    fn eq(&self, other: &Self) -> bool {
        same_parent(self.parent, other.parent) && self.min_gens == other.min_gens
    }
}

impl Eq for RelativeIdeal<'_> {}

impl fmt::Display for RelativeIdeal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        write_list(f, &self.min_gens)?;
        write!(f, ")")
    }
}

/// Membership set of the form "explicit bits on `[start, start + len)`,
/// nothing below, everything above".
struct CofiniteWindow {
    start: i64,
    members: Vec<bool>,
}

impl CofiniteWindow {
    fn contains(&self, x: i64) -> bool {
        if x < self.start {
            return false;
        }
        let offset = x - self.start;
        offset >= self.members.len() as i64 || self.members[offset as usize]
    }

    fn first_member(&self) -> i64 {
        let offset = self
            .members
            .iter()
            .position(|&b| b)
            .unwrap_or(self.members.len());
        self.start + offset as i64
    }

    /// z is a minimal generator iff z is a member and z - a is not, for every
    /// minimal generator a of S. All of them lie in `[first, first + g + m]`.
    fn minimal_generators(&self, s: &NumericalSemigroup) -> Result<Vec<i64>> {
        let first = self.first_member();
        let last = first
            .checked_add(s.frobenius() + s.multiplicity())
            .ok_or(Error::Overflow("minimal generators"))?;
        Ok((first..=last)
            .filter(|&z| self.contains(z) && s.generators().iter().all(|&a| !self.contains(z - a)))
            .collect())
    }
}

/// Ascending minimal subset of `gens` generating the same coset union.
fn minimalize(s: &NumericalSemigroup, gens: &[i64]) -> Vec<i64> {
    let mut sorted = gens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    // A coset z + S can only be swallowed by a coset with a smaller offset,
    // and containment is transitive, so one ascending pass suffices.
    let mut kept: Vec<i64> = Vec::with_capacity(sorted.len());
    for z in sorted {
        if !kept.iter().any(|&k| s.contains_difference(z, k)) {
            kept.push(z);
        }
    }
    kept
}

fn same_parent(a: &NumericalSemigroup, b: &NumericalSemigroup) -> bool {
    std::ptr::eq(a, b) || a == b
}

fn check_parent(i: &RelativeIdeal<'_>, j: &RelativeIdeal<'_>) -> Result<()> {
    if same_parent(i.parent, j.parent) {
        Ok(())
    } else {
        Err(Error::ParentMismatch)
    }
}

fn check_owner(s: &NumericalSemigroup, i: &RelativeIdeal<'_>) -> Result<()> {
    if same_parent(s, i.parent) {
        Ok(())
    } else {
        Err(Error::ParentMismatch)
    }
}

/// `S - I`, checking that `I` is an ideal of `S`.
pub fn dual<'s>(s: &NumericalSemigroup, i: &RelativeIdeal<'s>) -> Result<RelativeIdeal<'s>> {
    check_owner(s, i)?;
    i.dual()
}

pub fn add<'s>(i: &RelativeIdeal<'s>, j: &RelativeIdeal<'s>) -> Result<RelativeIdeal<'s>> {
    i.add(j)
}

/// Canonical-form equality; errors when the parents differ.
pub fn equals(i: &RelativeIdeal<'_>, j: &RelativeIdeal<'_>) -> Result<bool> {
    check_parent(i, j)?;
    Ok(i.min_gens == j.min_gens)
}

/// The maximal ideal `S \ {0}`, minimally generated by the generators of `S`.
pub fn maximal_ideal(s: &NumericalSemigroup) -> RelativeIdeal<'_> {
    RelativeIdeal {
        parent: s,
        min_gens: s.generators().to_vec(),
    }
}

/// Outcome of comparing `μ(I)·μ(S−I)` with `μ(I + (S−I))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BrickCheck {
    pub mu_ideal: usize,
    pub mu_dual: usize,
    pub mu_sum: usize,
    pub is_brick: bool,
    pub is_perfect: bool,
    /// Minimal generators of `S - I`.
    pub dual_gens: Vec<i64>,
    /// Minimal generators of `I + (S - I)`.
    pub sum_gens: Vec<i64>,
}

impl BrickCheck {
    /// Dimensions `k × m` of the pair.
    pub fn dims(&self) -> (usize, usize) {
        (self.mu_ideal, self.mu_dual)
    }
}

impl fmt::Display for BrickCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match (self.is_brick, self.is_perfect) {
            (true, true) => "perfect brick",
            (true, false) => "brick, not perfect",
            _ => "not a brick",
        };
        write!(
            f,
            "{}x{}: mu(I)={} mu(S-I)={} mu(I+(S-I))={} ({kind})",
            self.mu_ideal, self.mu_dual, self.mu_ideal, self.mu_dual, self.mu_sum
        )
    }
}

/// Computes `S - I` and `I + (S - I)` and classifies the pair.
///
/// Both `I` and its dual must be non-principal for a brick: with a principal
/// side the product `μ(I)·μ(S−I)` is attained trivially.
pub fn brick_check(s: &NumericalSemigroup, i: &RelativeIdeal<'_>) -> Result<BrickCheck> {
    check_owner(s, i)?;
    let j = i.dual()?;
    let k = i.add(&j)?;
    let (mu_ideal, mu_dual, mu_sum) = (i.mu(), j.mu(), k.mu());
    let is_brick = mu_ideal >= 2 && mu_dual >= 2 && mu_ideal * mu_dual == mu_sum;
    let is_perfect = is_brick && k.min_gens == s.generators();
    Ok(BrickCheck {
        mu_ideal,
        mu_dual,
        mu_sum,
        is_brick,
        is_perfect,
        dual_gens: j.min_gens,
        sum_gens: k.min_gens,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gcd_all;
    use proptest::prelude::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    /// Coset-union membership straight from the definition, using a sieve for S.
    fn in_union(s_gens: &[i64], gens: &[i64], x: i64) -> bool {
        gens.iter().any(|&z| {
            let d = x - z;
            d >= 0 && representable(s_gens, d)
        })
    }

    fn representable(s_gens: &[i64], x: i64) -> bool {
        let mut reach = vec![false; x as usize + 1];
        reach[0] = true;
        for y in 1..=x as usize {
            reach[y] = s_gens
                .iter()
                .any(|&g| g as usize <= y && reach[y - g as usize]);
        }
        reach[x as usize]
    }

    #[test]
    fn worked_example_pipeline() {
        let s = sg(&[10, 11, 13, 17, 19]);
        let i = RelativeIdeal::new(&s, &[2, 5]).unwrap();
        assert_eq!(i.generators(), &[2, 5]);
        assert_eq!(i.mu(), 2);
        assert_eq!(i.elements_in(0, 21), vec![2, 5, 12, 13, 15, 16, 18, 19, 21]);
        assert!((21..80).all(|x| i.contains(x)));

        let d = dual(&s, &i).unwrap();
        assert_eq!(d.generators(), &[8, 15, 17, 22, 24]);
        assert_eq!(d.mu(), 5);
        assert_eq!(d.elements_in(0, 24), vec![8, 15, 17, 18, 19, 21, 22, 24]);

        let sum = add(&i, &d).unwrap();
        assert_eq!(sum.generators(), &[10, 13, 17, 19, 22]);

        let raw = RelativeIdeal::new(&s, &[10, 13, 17, 20, 19, 22, 24, 27, 26, 29]).unwrap();
        assert_eq!(raw.generators(), &[10, 13, 17, 19, 22]);

        let check = brick_check(&s, &i).unwrap();
        assert_eq!((check.mu_ideal, check.mu_dual, check.mu_sum), (2, 5, 5));
        assert!(!check.is_brick);
        assert!(!check.is_perfect);
    }

    #[test]
    fn duplicates_collapse() {
        let s = sg(&[3, 5]);
        assert_eq!(RelativeIdeal::new(&s, &[7, 7]).unwrap().generators(), &[7]);
        assert!(matches!(
            RelativeIdeal::new(&s, &[]),
            Err(Error::EmptyInput)
        ));
    }

    #[test]
    fn principal_dual_is_negation() {
        let s = sg(&[10, 11, 13, 17, 19]);
        for z in [-7, 0, 3, 40] {
            let i = RelativeIdeal::principal(&s, z);
            assert_eq!(i.mu(), 1);
            assert_eq!(i.dual().unwrap().generators(), &[-z]);
        }
        let whole = sg(&[1]);
        let i = RelativeIdeal::principal(&whole, 5);
        assert_eq!(i.dual().unwrap().generators(), &[-5]);
    }

    #[test]
    fn unitary_dual_and_sum() {
        let s = sg(&[14, 15, 20, 21]);
        let i = RelativeIdeal::new(&s, &[0, 1]).unwrap();
        let d = i.dual().unwrap();
        assert_eq!(d.generators(), &[14, 20]);
        assert_eq!(i.add(&d).unwrap().generators(), &[14, 15, 20, 21]);
        assert_eq!(i.add(&d).unwrap(), maximal_ideal(&s));
    }

    #[test]
    fn zero_plus_zero() {
        let s = sg(&[2, 3]);
        let z = RelativeIdeal::principal(&s, 0);
        assert_eq!(z.add(&z).unwrap().generators(), &[0]);
    }

    #[test]
    fn equality_is_canonical() {
        let s = sg(&[10, 11, 13, 17, 19]);
        let a = RelativeIdeal::new(&s, &[2, 5]).unwrap();
        let b = RelativeIdeal::new(&s, &[5, 2, 12]).unwrap();
        assert!(equals(&a, &b).unwrap());

        let t = sg(&[14, 15, 20, 21]);
        let c = RelativeIdeal::new(&t, &[0, 1]).unwrap();
        let d = RelativeIdeal::new(&t, &[0, 2]).unwrap();
        assert!(!equals(&c, &d).unwrap());
        // 2 separates them: 2 - 0 and 2 - 1 are both gaps.
        assert!(d.contains(2) && !c.contains(2));
        assert!(matches!(equals(&a, &c), Err(Error::ParentMismatch)));
    }

    #[test]
    fn parent_mismatch() {
        let s = sg(&[2, 3]);
        let t = sg(&[3, 5]);
        let i = RelativeIdeal::new(&s, &[0, 1]).unwrap();
        let j = RelativeIdeal::new(&t, &[0, 1]).unwrap();
        assert!(matches!(dual(&t, &i), Err(Error::ParentMismatch)));
        assert!(matches!(add(&i, &j), Err(Error::ParentMismatch)));
        assert!(matches!(brick_check(&t, &i), Err(Error::ParentMismatch)));
        // Structurally equal parents are the same semigroup.
        let s2 = sg(&[3, 2]);
        assert!(dual(&s2, &i).is_ok());
    }

    #[test]
    fn maximal_ideals() {
        for gens in [&[14, 15, 20, 21][..], &[2, 3], &[10, 11, 13, 17, 19]] {
            let s = sg(gens);
            let m = maximal_ideal(&s);
            assert_eq!(m.generators(), gens);
            assert!(!m.contains(0));
            assert!((1..60).all(|x| m.contains(x) == s.contains(x)));
        }
    }

    #[test]
    fn known_bricks() {
        let s = sg(&[14, 15, 20, 21]);
        let c = brick_check(&s, &RelativeIdeal::new(&s, &[0, 1]).unwrap()).unwrap();
        assert!(c.is_brick && c.is_perfect);
        assert_eq!(c.dims(), (2, 2));

        for gens in [&[10, 14, 15, 21][..], &[14, 15, 20, 21, 25]] {
            let s = sg(gens);
            let c = brick_check(&s, &RelativeIdeal::new(&s, &[0, 1]).unwrap()).unwrap();
            assert!(c.is_brick && !c.is_perfect, "{gens:?}: {c}");
            assert_eq!(c.dims(), (2, 2));
        }
    }

    #[test]
    fn cited_search_duals() {
        let cases: [(&[i64], &[i64], &[i64]); 5] = [
            (&[10, 15, 18, 27], &[0, 2], &[18, 25]),
            (&[21, 28, 36, 48], &[0, 13], &[36, 56, 63]),
            (&[15, 17, 21, 24, 27], &[0, 8], &[24, 30, 34, 36]),
            (&[21, 24, 38, 39], &[0, 4, 6], &[72, 77, 80]),
            (&[27, 30, 36, 44], &[0, 1, 6], &[87, 98, 101, 110]),
        ];
        for (sgens, igens, expected) in cases {
            let s = sg(sgens);
            let i = RelativeIdeal::new(&s, igens).unwrap();
            let c = brick_check(&s, &i).unwrap();
            assert_eq!(c.dual_gens, expected, "{sgens:?}");
            assert!(c.is_brick);
            assert_eq!(c.mu_sum, igens.len() * expected.len());
        }
    }

    #[test]
    fn dual_with_extreme_generator_overflows() {
        let s = sg(&[2, 3]);
        let i = RelativeIdeal::new(&s, &[i64::MIN]).unwrap();
        assert!(matches!(i.dual(), Err(Error::Overflow(_))));
    }

    fn semigroup_and_ideal() -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
        prop::collection::vec(2i64..=25, 2..5)
            .prop_filter("gcd 1", |g| gcd_all(g) == 1)
            .prop_flat_map(|gens| {
                let ideal = prop::collection::vec(-15i64..60, 1..5);
                (Just(gens), ideal)
            })
    }

    proptest! {
        #[test]
        fn minimalization_preserves_elements((sgens, igens) in semigroup_and_ideal()) {
            let s = NumericalSemigroup::new(&sgens).unwrap();
            let i = RelativeIdeal::new(&s, &igens).unwrap();
            let lo = *igens.iter().min().unwrap();
            let hi = s.frobenius() + igens.iter().max().unwrap() + 1;
            for x in lo - 2..=hi {
                prop_assert_eq!(i.contains(x), in_union(&sgens, &igens, x), "x = {}", x);
            }
            let g = i.generators();
            for a in g {
                for b in g {
                    if a != b {
                        prop_assert!(!s.contains(b - a));
                    }
                }
            }
        }

        #[test]
        fn dual_matches_definition((sgens, igens) in semigroup_and_ideal()) {
            let s = NumericalSemigroup::new(&sgens).unwrap();
            let i = RelativeIdeal::new(&s, &igens).unwrap();
            let d = i.dual().unwrap();
            let lo = -i.min() - 5;
            let hi = s.frobenius() - i.min() + s.multiplicity() + 5;
            for z in lo..=hi {
                let by_definition = igens.iter().all(|&zi| {
                    let v = z + zi;
                    v >= 0 && representable(&sgens, v)
                });
                prop_assert_eq!(d.contains(z), by_definition, "z = {}", z);
            }
        }

        #[test]
        fn mu_inequality_and_double_dual((sgens, igens) in semigroup_and_ideal()) {
            let s = NumericalSemigroup::new(&sgens).unwrap();
            let i = RelativeIdeal::new(&s, &igens).unwrap();
            let c = brick_check(&s, &i).unwrap();
            prop_assert!(c.mu_ideal * c.mu_dual >= c.mu_sum);
            prop_assert!(c.mu_sum as i64 <= s.multiplicity());
            if c.is_perfect { prop_assert!(c.is_brick); }
            let dd = i.dual().unwrap().dual().unwrap();
            for &z in i.generators() {
                prop_assert!(dd.contains(z));
            }
        }
    }
}
