//! Word-parallel μ computation for ideals of the form `(0, u1, ..., ul)`.
//!
//! For such an ideal the dual lies inside `S` and contains everything above
//! `g(S)`, and so does `I + (S - I)`. All minimal generators of either lie in
//! `[0, g + m]`, so both sets fit in one bit window of that length with the
//! bits above `g` set. Then
//!
//! * `S - I = S ∩ (S - u1) ∩ ... ∩ (S - ul)`, a chain of shifted ANDs;
//! * `I + (S - I)` is a union of shifted copies of the dual;
//! * the minimal generators of a set `X` are `X ∖ ∪_a (X + a)` over the
//!   generators `a` of `S`.
//!
//! The search uses this to screen pairs and re-runs the set-based
//! [`crate::ideal::brick_check`] only on hits.

use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MuTriple {
    pub ideal: usize,
    pub dual: usize,
    pub sum: usize,
}

impl MuTriple {
    pub fn is_brick(&self) -> bool {
        self.ideal >= 2 && self.dual >= 2 && self.ideal * self.dual == self.sum
    }
}

pub struct Screen<'s> {
    semigroup: &'s NumericalSemigroup,
    bits: usize,
    words: usize,
    /// `S` on `[0, bits)`.
    members: Vec<u64>,
    scratch: [Vec<u64>; 4],
}

impl<'s> Screen<'s> {
    /// `None` when `g(S) < 0`, where no ideal of the searched form exists.
    pub fn new(semigroup: &'s NumericalSemigroup) -> Option<Self> {
        let g = semigroup.frobenius();
        if g < 0 {
            return None;
        }
        let bits = (g + semigroup.multiplicity() + 1) as usize;
        let words = bits.div_ceil(64);
        let mut members = vec![0u64; words];
        for x in 0..bits {
            if semigroup.contains(x as i64) {
                members[x / 64] |= 1 << (x % 64);
            }
        }
        Some(Self {
            semigroup,
            bits,
            words,
            members,
            scratch: [
                vec![0; words],
                vec![0; words],
                vec![0; words],
                vec![0; words],
            ],
        })
    }

    /// μ of `I`, `S - I` and `I + (S - I)` for the minimal tuple `(0, u1, ...)`.
    ///
    /// Stops early with `sum = 0` once the pair provably is not a brick.
    pub fn mu(&mut self, tuple: &[i64]) -> MuTriple {
        debug_assert_eq!(tuple.first(), Some(&0));
        let k = tuple.len();
        let [dual, shifted, sum, minimal] = &mut self.scratch;

        dual.copy_from_slice(&self.members);
        for &u in &tuple[1..] {
            shift_down_fill_ones(&self.members, u as usize, self.bits, shifted);
            and_assign(dual, shifted);
        }
        let gens = self.semigroup.generators();
        let mu_dual = count_minimal(dual, gens, self.bits, shifted, minimal);

        // μ of any relative ideal is at most m(S).
        let bound = self.semigroup.multiplicity() as usize;
        if mu_dual < 2 || k * mu_dual > bound {
            return MuTriple {
                ideal: k,
                dual: mu_dual,
                sum: 0,
            };
        }

        sum.copy_from_slice(dual);
        for &u in &tuple[1..] {
            shift_up(dual, u as usize, self.bits, shifted);
            or_assign(sum, shifted);
        }
        let mu_sum = count_minimal(sum, gens, self.bits, shifted, minimal);
        debug_assert_eq!(self.words, sum.len());
        MuTriple {
            ideal: k,
            dual: mu_dual,
            sum: mu_sum,
        }
    }
}

fn and_assign(dst: &mut [u64], src: &[u64]) {
    dst.iter_mut().zip(src).for_each(|(d, s)| *d &= s);
}

fn or_assign(dst: &mut [u64], src: &[u64]) {
    dst.iter_mut().zip(src).for_each(|(d, s)| *d |= s);
}

/// `dst[z] = src[z + shift]`, reading ones past the window end.
fn shift_down_fill_ones(src: &[u64], shift: usize, bits: usize, dst: &mut [u64]) {
    let (wshift, bshift) = (shift / 64, shift % 64);
    let n = src.len();
    let tail_word = bits / 64;
    let tail_bit = bits % 64;
    // Window word i with every bit at or past `bits` forced to one.
    let word = |i: usize| -> u64 {
        if i >= n {
            !0
        } else if i == tail_word {
            src[i] | (!0u64 << tail_bit)
        } else {
            src[i]
        }
    };
    for (i, d) in dst.iter_mut().enumerate() {
        let lo = word(i + wshift);
        *d = if bshift == 0 {
            lo
        } else {
            (lo >> bshift) | (word(i + wshift + 1) << (64 - bshift))
        };
    }
}

/// `dst[z] = src[z - shift]`, zero below `shift`, truncated to the window.
fn shift_up(src: &[u64], shift: usize, bits: usize, dst: &mut [u64]) {
    let (wshift, bshift) = (shift / 64, shift % 64);
    for (i, d) in dst.iter_mut().enumerate() {
        let hi = if i >= wshift { src[i - wshift] } else { 0 };
        *d = if bshift == 0 {
            hi
        } else {
            let lo = if i > wshift { src[i - wshift - 1] } else { 0 };
            (hi << bshift) | (lo >> (64 - bshift))
        };
    }
    mask_tail(dst, bits);
}

fn mask_tail(words: &mut [u64], bits: usize) {
    let rem = bits % 64;
    if rem != 0 {
        if let Some(last) = words.last_mut() {
            *last &= (1u64 << rem) - 1;
        }
    }
}

/// Number of `z` in the window with `z ∈ X` and `z - a ∉ X` for all `a`.
fn count_minimal(
    set: &[u64],
    gens: &[i64],
    bits: usize,
    scratch: &mut [u64],
    minimal: &mut [u64],
) -> usize {
    minimal.copy_from_slice(set);
    for &a in gens {
        let a = a as usize;
        if a >= bits {
            // Everything below `bits` minus a is below zero, hence absent.
            continue;
        }
        shift_up(set, a, bits, scratch);
        minimal
            .iter_mut()
            .zip(scratch.iter())
            .for_each(|(m, s)| *m &= !s);
    }
    mask_tail(minimal, bits);
    minimal.iter().map(|w| w.count_ones() as usize).sum()
}
