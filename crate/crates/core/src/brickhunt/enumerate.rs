//! Enumerators for the search space: semigroups by minimal generating set,
//! and relative ideals `(0, u1, ..., ul)` of a fixed semigroup.
//!
//! Both walk ascending tuples depth-first and emit a tuple before its
//! extensions, which is ascending lexicographic order. Minimality of a prefix
//! never changes when it is extended, so non-minimal prefixes are pruned
//! together with their whole subtree.

use crate::arith::gcd;
use crate::ideal::RelativeIdeal;
use crate::semigroup::{NumericalSemigroup, ResidueTable};

use super::SearchConfig;

struct SemigroupFrame {
    gens: Vec<i64>,
    gcd: i64,
    table: Option<ResidueTable>,
    next: i64,
}

/// Every numerical semigroup whose minimal generating set has between
/// `t_min` and `t_max` elements, all in `[2, gen_max]`.
pub struct Semigroups {
    t_min: usize,
    t_max: usize,
    gen_max: i64,
    stack: Vec<SemigroupFrame>,
}

impl Semigroups {
    pub fn new(t_min: usize, t_max: usize, gen_max: i64) -> Self {
        let root = SemigroupFrame {
            gens: Vec::new(),
            gcd: 0,
            table: None,
            next: 2,
        };
        Self {
            t_min,
            t_max,
            gen_max,
            stack: vec![root],
        }
    }
}

impl Iterator for Semigroups {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        loop {
            let top = self.stack.last_mut()?;
            if top.next > self.gen_max || top.gens.len() >= self.t_max {
                self.stack.pop();
                continue;
            }
            let c = top.next;
            top.next += 1;

            let table = match &top.table {
                None => match ResidueTable::new(c) {
                    Ok(t) => t,
                    Err(err) => {
                        log::warn!("skipping generators starting at {c}: {err}");
                        continue;
                    }
                },
                Some(t) if t.spans(c) => continue,
                Some(t) => {
                    let mut t = t.clone();
                    if let Err(err) = t.add_generator(c) {
                        log::warn!("skipping {:?} + {c}: {err}", top.gens);
                        continue;
                    }
                    t
                }
            };
            let mut gens = top.gens.clone();
            gens.push(c);
            let d = gcd(top.gcd, c);

            let emit = d == 1 && gens.len() >= self.t_min;
            let semigroup = if emit {
                match NumericalSemigroup::from_parts(gens.clone(), table.clone()) {
                    Ok(s) => Some(s),
                    Err(err) => {
                        log::warn!("skipping {gens:?}: {err}");
                        None
                    }
                }
            } else {
                None
            };
            if gens.len() < self.t_max {
                self.stack.push(SemigroupFrame {
                    gens,
                    gcd: d,
                    table: Some(table),
                    next: c + 1,
                });
            }
            if semigroup.is_some() {
                return semigroup;
            }
        }
    }
}

/// Semigroups of the search space described by `config`.
pub fn enumerate_semigroups(config: &SearchConfig) -> Semigroups {
    Semigroups::new(config.t_min, config.t_max, config.gen_max)
}

/// Minimal generating tuples `(0, u1, ..., ul)` with `0 < u_j ≤ g(S) - m(S)`
/// and `2 ≤ l + 1 ≤ cap`.
///
/// Use [`IdealTuples::next_tuple`] to borrow tuples without allocating.
pub struct IdealTuples<'s> {
    semigroup: &'s NumericalSemigroup,
    candidates: Vec<i64>,
    cap: usize,
    current: Vec<i64>,
    chosen: Vec<usize>,
    next: usize,
}

impl<'s> IdealTuples<'s> {
    pub fn new(semigroup: &'s NumericalSemigroup, cap: usize) -> Self {
        let bound = semigroup.frobenius() - semigroup.multiplicity();
        // u - 0 must not lie in S, so only gaps qualify.
        let candidates = (1..=bound).filter(|&u| !semigroup.contains(u)).collect();
        Self {
            semigroup,
            candidates,
            cap,
            current: vec![0],
            chosen: Vec::new(),
            next: 0,
        }
    }

    pub fn semigroup(&self) -> &'s NumericalSemigroup {
        self.semigroup
    }

    fn compatible(&self, u: i64) -> bool {
        self.current[1..]
            .iter()
            .all(|&prev| !self.semigroup.contains(u - prev))
    }

    pub fn next_tuple(&mut self) -> Option<&[i64]> {
        loop {
            if self.current.len() < self.cap {
                while self.next < self.candidates.len() {
                    let idx = self.next;
                    self.next += 1;
                    let u = self.candidates[idx];
                    if self.compatible(u) {
                        self.current.push(u);
                        self.chosen.push(idx);
                        return Some(&self.current);
                    }
                }
            }
            let idx = self.chosen.pop()?;
            self.current.pop();
            self.next = idx + 1;
        }
    }
}

impl Iterator for IdealTuples<'_> {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        self.next_tuple().map(<[i64]>::to_vec)
    }
}

/// Ideals of `semigroup` in the search space, already minimal, ascending.
pub fn enumerate_ideals<'s>(
    semigroup: &'s NumericalSemigroup,
    config: &SearchConfig,
) -> impl Iterator<Item = RelativeIdeal<'s>> + 's {
    let cap = config
        .ideal_cap
        .for_generator_count(semigroup.embedding_dimension());
    IdealTuples::new(semigroup, cap).map(move |t| RelativeIdeal::from_minimal(semigroup, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gcd_all;
    use crate::brickhunt::IdealSizeCap;
    use std::collections::BTreeSet;

    fn gens_of(it: impl Iterator<Item = NumericalSemigroup>) -> Vec<Vec<i64>> {
        it.map(|s| s.generators().to_vec()).collect()
    }

    #[test]
    fn tiny_spaces() {
        assert_eq!(
            gens_of(Semigroups::new(2, 2, 4)),
            vec![vec![2, 3], vec![3, 4]]
        );
        assert!(gens_of(Semigroups::new(2, 5, 2)).is_empty());
    }

    #[test]
    fn matches_brute_force_and_is_sorted() {
        for (t_min, t_max, gen_max) in [(2, 3, 14), (2, 4, 12), (3, 4, 13), (4, 5, 11)] {
            let got = gens_of(Semigroups::new(t_min, t_max, gen_max));
            assert!(got.windows(2).all(|w| w[0] < w[1]), "not strictly sorted");

            // Brute force: minimal generating sets of every subset.
            let mut expected = BTreeSet::new();
            let n = (gen_max - 1) as u32;
            for mask in 1u32..(1 << n) {
                let subset: Vec<i64> = (0..n)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| b as i64 + 2)
                    .collect();
                if subset.len() < t_min || subset.len() > t_max || gcd_all(&subset) != 1 {
                    continue;
                }
                let s = NumericalSemigroup::new(&subset).unwrap();
                if s.generators() == subset {
                    expected.insert(subset);
                }
            }
            assert_eq!(got, expected.into_iter().collect::<Vec<_>>());
        }
    }

    #[test]
    fn contains_cited_semigroup() {
        let found = Semigroups::new(4, 4, 27).any(|s| s.generators() == [10, 15, 18, 27]);
        assert!(found);
    }

    #[test]
    fn ideal_tuples_examples() {
        let config = SearchConfig::default();
        let s = NumericalSemigroup::new(&[10, 15, 18, 27]).unwrap();
        let ideals: Vec<Vec<i64>> = enumerate_ideals(&s, &config)
            .map(|i| i.generators().to_vec())
            .collect();
        assert!(ideals.contains(&vec![0, 2]));
        assert!(ideals.iter().all(|t| t.len() >= 2 && t.len() <= 3));

        let s = NumericalSemigroup::new(&[21, 24, 38, 39]).unwrap();
        assert!(enumerate_ideals(&s, &config).any(|i| i.generators() == [0, 4, 6]));

        let s = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(enumerate_ideals(&s, &config).count(), 0);
    }

    #[test]
    fn ideal_tuples_match_brute_force() {
        for gens in [
            &[5, 7, 9][..],
            &[6, 7, 15],
            &[7, 9, 11, 13],
            &[10, 15, 18, 27],
        ] {
            let s = NumericalSemigroup::new(gens).unwrap();
            for cap in 2..=4 {
                let got: Vec<Vec<i64>> = IdealTuples::new(&s, cap).collect();
                assert!(got.windows(2).all(|w| w[0] < w[1]));
                let bound = s.frobenius() - s.multiplicity();
                let mut expected = BTreeSet::new();
                let pool: Vec<i64> = (1..=bound).collect();
                // All subsets of size 1..cap-1, kept when {0} ∪ subset is minimal.
                fn rec(
                    pool: &[i64],
                    start: usize,
                    cur: &mut Vec<i64>,
                    cap: usize,
                    s: &NumericalSemigroup,
                    out: &mut BTreeSet<Vec<i64>>,
                ) {
                    if cur.len() >= 2 {
                        let ideal = RelativeIdeal::new(s, cur).unwrap();
                        if ideal.generators() == cur.as_slice() {
                            out.insert(cur.clone());
                        }
                    }
                    if cur.len() == cap {
                        return;
                    }
                    for i in start..pool.len() {
                        cur.push(pool[i]);
                        rec(pool, i + 1, cur, cap, s, out);
                        cur.pop();
                    }
                }
                rec(&pool, 0, &mut vec![0], cap, &s, &mut expected);
                assert_eq!(
                    got,
                    expected.into_iter().collect::<Vec<_>>(),
                    "{gens:?} cap {cap}"
                );
            }
        }
    }

    #[test]
    fn fixed_cap_overrides_rule() {
        let s = NumericalSemigroup::new(&[7, 9, 11, 13]).unwrap();
        let config = SearchConfig {
            ideal_cap: IdealSizeCap::Fixed(2),
            ..SearchConfig::default()
        };
        assert!(enumerate_ideals(&s, &config).all(|i| i.mu() == 2));
    }
}
