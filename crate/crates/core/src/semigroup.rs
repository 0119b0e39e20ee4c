//! Numerical semigroups: construction from generators, membership, Apéry
//! set, Frobenius number and symmetry.
//!
//! A semigroup is stored through its Apéry table with respect to the
//! multiplicity `m`: entry `r` is the least element congruent to `r` mod `m`.
//! Every other quantity follows from that table, and membership becomes a
//! single comparison.

use std::fmt;

use crate::arith::gcd_all;
use crate::error::{Error, Result};

/// Largest multiplicity for which an Apéry table is allocated.
pub const MAX_MULTIPLICITY: i64 = 1 << 24;

const UNREACHED: i64 = i64::MAX;

/// Least representatives per residue class modulo a fixed modulus for the
/// monoid spanned by the generators added so far.
///
/// Generators are added with the round-robin relaxation: the residues visited
/// by repeatedly adding `g` form `gcd(g, m)` cycles; starting each walk at the
/// cycle's current minimum, one pass around the cycle reaches the fixed point.
#[derive(Debug, Clone)]
pub(crate) struct ResidueTable {
    entries: Vec<i64>,
}

impl ResidueTable {
    pub(crate) fn new(modulus: i64) -> Result<Self> {
        if modulus < 1 {
            return Err(Error::NonPositiveGenerator(modulus));
        }
        if modulus > MAX_MULTIPLICITY {
            return Err(Error::MultiplicityTooLarge(modulus));
        }
        let mut entries = vec![UNREACHED; modulus as usize];
        entries[0] = 0;
        Ok(Self { entries })
    }

    pub(crate) fn modulus(&self) -> i64 {
        self.entries.len() as i64
    }

    /// True when `g` is already a non-negative combination of the generators
    /// added so far.
    pub(crate) fn spans(&self, g: i64) -> bool {
        g >= 0 && self.entries[(g % self.modulus()) as usize] <= g
    }

    pub(crate) fn add_generator(&mut self, g: i64) -> Result<()> {
        let m = self.entries.len();
        let step = (g % m as i64) as usize;
        if step == 0 {
            return Ok(());
        }
        let cycles = gcd_all(&[step as i64, m as i64]) as usize;
        let cycle_len = m / cycles;
        for start in 0..cycles {
            // Locate the minimum of this cycle; it cannot improve.
            let mut best = start;
            let mut r = start;
            for _ in 0..cycle_len {
                if self.entries[r] < self.entries[best] {
                    best = r;
                }
                r = (r + step) % m;
            }
            if self.entries[best] == UNREACHED {
                continue;
            }
            let mut r = best;
            for _ in 0..cycle_len {
                let next = (r + step) % m;
                if self.entries[r] != UNREACHED {
                    let candidate = self.entries[r]
                        .checked_add(g)
                        .ok_or(Error::Overflow("Apery table"))?;
                    if candidate < self.entries[next] {
                        self.entries[next] = candidate;
                    }
                }
                r = next;
            }
        }
        Ok(())
    }

    pub(crate) fn is_complete(&self) -> bool {
        self.entries.iter().all(|&e| e != UNREACHED)
    }

    pub(crate) fn into_entries(self) -> Vec<i64> {
        self.entries
    }
}

/// A numerical semigroup, kept as its minimal generators plus Apéry table.
///
/// Immutable after construction; all derived quantities are precomputed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    min_gens: Vec<i64>,
    apery: Vec<i64>,
    frobenius: i64,
    n_count: i64,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`.
    ///
    /// Duplicates and redundant generators are dropped; the stored generating
    /// set is the minimal one, in ascending order.
    pub fn new(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g < 1) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let d = gcd_all(&sorted);
        if d != 1 {
            return Err(Error::NonCoprime(d));
        }

        let mut table = ResidueTable::new(sorted[0])?;
        let mut min_gens = vec![sorted[0]];
        for &g in &sorted[1..] {
            // Only smaller generators can express g, so an ascending scan
            // decides minimality once and for all.
            if table.spans(g) {
                continue;
            }
            table.add_generator(g)?;
            min_gens.push(g);
        }
        Self::from_parts(min_gens, table)
    }

    /// Assembles a semigroup from already-minimal ascending generators and
    /// their completed residue table.
    pub(crate) fn from_parts(min_gens: Vec<i64>, table: ResidueTable) -> Result<Self> {
        debug_assert!(table.is_complete());
        let m = table.modulus();
        let apery = table.into_entries();
        let max_entry = *apery.iter().max().expect("table is non-empty");
        let frobenius = max_entry - m;

        // Elements below g in class r are w, w + m, ..., up to g - 1.
        let mut n_count: i64 = 0;
        for &w in &apery {
            if w < frobenius {
                n_count = n_count
                    .checked_add((frobenius - 1 - w) / m + 1)
                    .ok_or(Error::Overflow("n(S)"))?;
            }
        }

        Ok(Self {
            min_gens,
            apery,
            frobenius,
            n_count,
        })
    }

    /// The minimal generating set, ascending.
    pub fn generators(&self) -> &[i64] {
        &self.min_gens
    }

    /// Number of minimal generators (embedding dimension).
    pub fn embedding_dimension(&self) -> usize {
        self.min_gens.len()
    }

    /// Smallest positive element, `m(S)`.
    pub fn multiplicity(&self) -> i64 {
        self.min_gens[0]
    }

    /// Largest integer not in the semigroup; `-1` when the semigroup is all of N.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Number of elements of the semigroup strictly below the Frobenius number.
    pub fn n_count(&self) -> i64 {
        self.n_count
    }

    /// Number of gaps (non-negative integers outside the semigroup).
    pub fn genus(&self) -> i64 {
        let m = self.multiplicity();
        self.apery
            .iter()
            .enumerate()
            .map(|(r, &w)| (w - r as i64) / m)
            .sum()
    }

    /// Apéry table indexed by residue modulo the multiplicity.
    pub fn apery_table(&self) -> &[i64] {
        &self.apery
    }

    /// The Apéry set with respect to the multiplicity, ascending.
    pub fn apery_set(&self) -> Vec<i64> {
        let mut set = self.apery.clone();
        set.sort_unstable();
        set
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && x >= self.apery[(x % self.multiplicity()) as usize]
    }

    /// Membership of `x - y`, exact for every pair of `i64` values.
    pub(crate) fn contains_difference(&self, x: i64, y: i64) -> bool {
        match x.checked_sub(y) {
            Some(d) => self.contains(d),
            // Overflow only happens far outside the gap range.
            None => x > y,
        }
    }

    /// `g(S)` odd and `n(S) = (g(S) + 1) / 2`. False for the semigroup N.
    pub fn is_symmetric(&self) -> bool {
        let g = self.frobenius;
        g >= 1 && g % 2 == 1 && self.n_count == (g + 1) / 2
    }

    /// Gaps of the semigroup, ascending.
    pub fn gaps(&self) -> Vec<i64> {
        (0..=self.frobenius)
            .filter(|&x| !self.contains(x))
            .collect()
    }

    /// Elements of the semigroup in `[0, limit]`, ascending.
    pub fn elements_up_to(&self, limit: i64) -> Vec<i64> {
        (0..=limit).filter(|&x| self.contains(x)).collect()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        write_list(f, &self.min_gens)?;
        write!(f, ">")
    }
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, values: &[i64]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}
