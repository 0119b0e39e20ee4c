//! Exhaustive search for bricks.
//!
//! The search space is every semigroup `<s1, ..., st>` with `t_min ≤ t ≤ t_max`
//! minimal generators, each at most `gen_max`, paired with every ideal
//! `(0, u1, ..., ul)` of size `2..=cap(t)` whose generators are at most
//! `g(S) - m(S)`. Each semigroup is one unit of work; the merged output is
//! sorted by `(s_gens, i_gens)` so it does not depend on the worker count.

mod enumerate;
mod format;
mod kernel;
mod lift;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{brick_check, RelativeIdeal};
use crate::semigroup::NumericalSemigroup;

pub use enumerate::{enumerate_ideals, enumerate_semigroups, IdealTuples, Semigroups};
pub use format::{read_reports, write_reports, RecordFormat};
pub use kernel::{MuTriple, Screen};
pub use lift::{lift, LiftOutcome};

/// Upper bound on `μ(I)` for ideals of a semigroup with `t` generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IdealSizeCap {
    /// `floor(1 + t / 2)`.
    #[default]
    HalfPlusOne,
    Fixed(usize),
}

impl IdealSizeCap {
    pub fn for_generator_count(self, t: usize) -> usize {
        match self {
            IdealSizeCap::HalfPlusOne => 1 + t / 2,
            IdealSizeCap::Fixed(cap) => cap,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub t_min: usize,
    pub t_max: usize,
    pub gen_max: i64,
    pub ideal_cap: IdealSizeCap,
    pub perfect_only: bool,
    pub worker_count: usize,
}

impl Default for SearchConfig {
    /// The full published search space: `2 ≤ t ≤ 5`, generators up to 50.
    /// Expect that to run for a long time.
    fn default() -> Self {
        Self {
            t_min: 2,
            t_max: 5,
            gen_max: 50,
            ideal_cap: IdealSizeCap::HalfPlusOne,
            perfect_only: false,
            worker_count: 1,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidConfig(msg));
        if self.t_min < 2 {
            return fail(format!("t_min must be at least 2, got {}", self.t_min));
        }
        if self.t_max < self.t_min {
            return fail(format!("t_max {} < t_min {}", self.t_max, self.t_min));
        }
        if self.gen_max < 2 {
            return fail(format!("gen_max must be at least 2, got {}", self.gen_max));
        }
        if self.worker_count == 0 {
            return fail("worker_count must be positive".into());
        }
        if self.ideal_cap == IdealSizeCap::Fixed(0) {
            return fail("ideal size cap must be positive".into());
        }
        Ok(())
    }
}

/// One brick found by the search.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BrickReport {
    #[serde(rename = "s")]
    pub s_gens: Vec<i64>,
    #[serde(rename = "i")]
    pub i_gens: Vec<i64>,
    #[serde(rename = "dual")]
    pub dual_gens: Vec<i64>,
    pub k: usize,
    pub m: usize,
    pub perfect: bool,
    #[serde(rename = "mult")]
    pub multiplicity: i64,
    #[serde(rename = "frob")]
    pub frobenius: i64,
}

impl BrickReport {
    /// Report for `(S, I)` if it is a brick.
    pub fn from_pair(s: &NumericalSemigroup, i: &RelativeIdeal<'_>) -> Result<Option<Self>> {
        let check = brick_check(s, i)?;
        if !check.is_brick {
            return Ok(None);
        }
        Ok(Some(BrickReport {
            s_gens: s.generators().to_vec(),
            i_gens: i.generators().to_vec(),
            k: check.mu_ideal,
            m: check.mu_dual,
            perfect: check.is_perfect,
            dual_gens: check.dual_gens,
            multiplicity: s.multiplicity(),
            frobenius: s.frobenius(),
        }))
    }
}

impl fmt::Display for BrickReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(
            f,
            "S=<{}> I=({}) S-I=({}) {}x{} {}",
            join(&self.s_gens),
            join(&self.i_gens),
            join(&self.dual_gens),
            self.k,
            self.m,
            if self.perfect {
                "perfect brick"
            } else {
                "brick"
            }
        )
    }
}

/// Reports plus counters describing how much work the search did.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchOutcome {
    pub reports: Vec<BrickReport>,
    pub semigroups: u64,
    pub pairs: u64,
    pub skipped_pairs: u64,
}

/// Runs the search and returns the bricks in canonical order.
pub fn search(config: &SearchConfig) -> Result<Vec<BrickReport>> {
    Ok(search_with_stats(config)?.reports)
}

pub fn search_with_stats(config: &SearchConfig) -> Result<SearchOutcome> {
    config.validate()?;
    let semigroups: Vec<NumericalSemigroup> = enumerate_semigroups(config).collect();
    log::info!(
        "searching {} semigroups with {} workers",
        semigroups.len(),
        config.worker_count
    );
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.worker_count)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("worker pool: {e}")))?;

    let partials: Vec<SearchOutcome> = pool.install(|| {
        use rayon::prelude::*;
        semigroups
            .par_iter()
            .map(|s| hunt_semigroup(s, config))
            .collect()
    });

    let mut outcome = SearchOutcome {
        semigroups: semigroups.len() as u64,
        ..SearchOutcome::default()
    };
    for part in partials {
        outcome.pairs += part.pairs;
        outcome.skipped_pairs += part.skipped_pairs;
        outcome.reports.extend(part.reports);
    }
    outcome.reports.sort();
    log::info!(
        "searched {} pairs, found {} bricks",
        outcome.pairs,
        outcome.reports.len()
    );
    Ok(outcome)
}

/// All bricks `(S, I)` for one semigroup.
fn hunt_semigroup(s: &NumericalSemigroup, config: &SearchConfig) -> SearchOutcome {
    let mut out = SearchOutcome::default();
    let Some(mut screen) = Screen::new(s) else {
        return out;
    };
    let cap = config
        .ideal_cap
        .for_generator_count(s.embedding_dimension());
    let mut tuples = IdealTuples::new(s, cap);
    while let Some(tuple) = tuples.next_tuple() {
        out.pairs += 1;
        if !screen.mu(tuple).is_brick() {
            continue;
        }
        let ideal = RelativeIdeal::from_minimal(s, tuple.to_vec());
        match BrickReport::from_pair(s, &ideal) {
            Ok(Some(report)) => {
                if report.perfect || !config.perfect_only {
                    out.reports.push(report);
                }
            }
            Ok(None) => {
                log::error!("screen reported a brick the set computation rejects: {s} {ideal}");
            }
            Err(err) => {
                out.skipped_pairs += 1;
                log::warn!("skipping {s} {ideal}: {err}");
            }
        }
    }
    out
}

/// Aggregate counts over a list of reports.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchSummary {
    pub pairs: usize,
    pub distinct_semigroups: usize,
    pub perfect: usize,
    pub by_dims: BTreeMap<(usize, usize), (usize, usize)>,
    pub by_multiplicity: BTreeMap<i64, usize>,
}

impl SearchSummary {
    pub fn from_reports(reports: &[BrickReport]) -> Self {
        let mut summary = SearchSummary {
            pairs: reports.len(),
            ..Self::default()
        };
        let mut semigroups: Vec<&[i64]> = reports.iter().map(|r| r.s_gens.as_slice()).collect();
        semigroups.sort_unstable();
        semigroups.dedup();
        summary.distinct_semigroups = semigroups.len();
        for r in reports {
            let entry = summary.by_dims.entry((r.k, r.m)).or_default();
            entry.0 += 1;
            if r.perfect {
                entry.1 += 1;
                summary.perfect += 1;
            }
            *summary.by_multiplicity.entry(r.multiplicity).or_default() += 1;
        }
        summary
    }

    /// Dimensions other than 2×2 with at least one perfect brick.
    pub fn perfect_beyond_two_by_two(&self) -> Vec<(usize, usize)> {
        self.by_dims
            .iter()
            .filter(|&(&dims, &(_, perfect))| dims != (2, 2) && perfect > 0)
            .map(|(&dims, _)| dims)
            .collect()
    }
}

impl fmt::Display for SearchSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "bricks: {} pairs, {} distinct semigroups, {} perfect",
            self.pairs, self.distinct_semigroups, self.perfect
        )?;
        for (&(k, m), &(count, perfect)) in &self.by_dims {
            writeln!(f, "  {k}x{m}: {count} ({perfect} perfect)")?;
        }
        let mults: Vec<String> = self
            .by_multiplicity
            .iter()
            .map(|(m, c)| format!("{m}:{c}"))
            .collect();
        write!(f, "  by multiplicity: {}", mults.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(t: usize, gen_max: i64) -> SearchConfig {
        SearchConfig {
            t_min: t,
            t_max: t,
            gen_max,
            ..SearchConfig::default()
        }
    }

    #[test]
    fn validation() {
        assert!(SearchConfig::default().validate().is_ok());
        for bad in [
            SearchConfig {
                t_min: 1,
                ..SearchConfig::default()
            },
            SearchConfig {
                t_max: 1,
                t_min: 2,
                ..SearchConfig::default()
            },
            SearchConfig {
                gen_max: 1,
                ..SearchConfig::default()
            },
            SearchConfig {
                worker_count: 0,
                ..SearchConfig::default()
            },
            SearchConfig {
                ideal_cap: IdealSizeCap::Fixed(0),
                ..SearchConfig::default()
            },
        ] {
            assert!(
                matches!(search(&bad), Err(Error::InvalidConfig(_))),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn cap_rule() {
        let rule = IdealSizeCap::HalfPlusOne;
        assert_eq!(
            (2..=5)
                .map(|t| rule.for_generator_count(t))
                .collect::<Vec<_>>(),
            vec![2, 2, 3, 3]
        );
        assert_eq!(IdealSizeCap::Fixed(4).for_generator_count(2), 4);
    }

    #[test]
    fn small_multiplicity_has_no_bricks() {
        let c = SearchConfig {
            t_min: 2,
            t_max: 5,
            gen_max: 8,
            ..SearchConfig::default()
        };
        assert!(search(&c).unwrap().is_empty());
    }

    #[test]
    fn finds_first_cited_brick() {
        let reports = search(&config(4, 27)).unwrap();
        let hit = reports
            .iter()
            .find(|r| r.s_gens == [10, 15, 18, 27] && r.i_gens == [0, 2])
            .expect("brick present");
        assert_eq!(hit.dual_gens, vec![18, 25]);
        assert_eq!((hit.k, hit.m, hit.perfect), (2, 2, false));
        assert_eq!((hit.multiplicity, hit.frobenius), (10, 59));
        assert!(reports.windows(2).all(|w| w[0] < w[1]));
        for r in &reports {
            let s = NumericalSemigroup::new(&r.s_gens).unwrap();
            let i = RelativeIdeal::new(&s, &r.i_gens).unwrap();
            assert_eq!(BrickReport::from_pair(&s, &i).unwrap().as_ref(), Some(r));
        }
    }

    #[test]
    fn perfect_only_filter() {
        let all = search(&config(4, 27)).unwrap();
        let perfect = search(&SearchConfig {
            perfect_only: true,
            ..config(4, 27)
        })
        .unwrap();
        let expected: Vec<_> = all.into_iter().filter(|r| r.perfect).collect();
        assert_eq!(perfect, expected);
        assert!(perfect.iter().any(|r| r.s_gens == [14, 15, 20, 21]));
        for r in &perfect {
            assert_eq!((r.k, r.m), (2, 2));
        }
    }

    #[test]
    fn summary_counts() {
        let reports = search(&config(4, 27)).unwrap();
        let summary = SearchSummary::from_reports(&reports);
        assert_eq!(summary.pairs, reports.len());
        assert_eq!(
            summary.by_dims.values().map(|v| v.0).sum::<usize>(),
            reports.len()
        );
        assert!(summary.by_multiplicity.keys().all(|&m| m > 8));
        let text = summary.to_string();
        assert!(text.contains("2x2"));
    }
}
