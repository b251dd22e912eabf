//! Brute-force ground truth for small lengths.
//!
//! Codes are expanded into explicit codeword sets, duals are found by scanning
//! all of Z4^N, and hulls are counted directly. None of this touches the hull
//! formula in [`crate::codes`], which is what it is used to check.
//!
//! Codewords are bit-sliced: entry `k` is `lo_k + 2 hi_k`, with `lo` and `hi`
//! packed into one machine word each. Addition is a 2-bit ripple and the dot
//! product mod 4 is three popcounts.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::codes::{CodeSpec, DivisorSet};
use crate::cyclotomic::FactorTable;
use crate::error::{Error, Result};
use crate::z4poly::Z4Poly;

/// Default largest length the oracle accepts.
pub const DEFAULT_BOUND: u64 = 9;
/// Largest length any override may raise the bound to.
pub const MAX_BOUND: u64 = 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Codeword {
    len: u32,
    lo: u32,
    hi: u32,
}

impl Codeword {
    pub fn zero(len: u32) -> Self {
        Codeword { len, lo: 0, hi: 0 }
    }

    pub fn from_entries(entries: &[u8]) -> Self {
        let mut w = Codeword::zero(entries.len() as u32);
        for (k, &e) in entries.iter().enumerate() {
            w.lo |= u32::from(e & 1) << k;
            w.hi |= u32::from(e >> 1 & 1) << k;
        }
        w
    }

    /// Coefficient vector of `p mod (X^N - 1)`.
    pub fn from_poly(p: &Z4Poly, len: u32) -> Self {
        let mut entries = vec![0u8; len as usize];
        for (k, &c) in p.coeffs().iter().enumerate() {
            let slot = &mut entries[k % len as usize];
            *slot = (*slot + c) % 4;
        }
        Codeword::from_entries(&entries)
    }

    fn from_key(key: u32, len: u32) -> Self {
        let mask = (1u32 << len) - 1;
        Codeword { len, lo: key & mask, hi: key >> len }
    }

    fn key(&self) -> u32 {
        self.lo | self.hi << self.len
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.lo == 0 && self.hi == 0
    }

    pub fn entries(&self) -> Vec<u8> {
        (0..self.len)
            .map(|k| (self.lo >> k & 1) as u8 | ((self.hi >> k & 1) as u8) << 1)
            .collect()
    }

    pub fn add(&self, other: &Codeword) -> Codeword {
        let carry = self.lo & other.lo;
        Codeword { len: self.len, lo: self.lo ^ other.lo, hi: self.hi ^ other.hi ^ carry }
    }

    /// Multiplication by `x`: entry `k` moves to `k + 1 mod N`.
    pub fn shift(&self) -> Codeword {
        let mask = (1u32 << self.len) - 1;
        let rot = |v: u32| ((v << 1) | (v >> (self.len - 1))) & mask;
        Codeword { len: self.len, lo: rot(self.lo), hi: rot(self.hi) }
    }

    /// Standard inner product mod 4.
    pub fn dot(&self, other: &Codeword) -> u8 {
        let ones = (self.lo & other.lo).count_ones();
        let twos = (self.lo & other.hi).count_ones() + (self.hi & other.lo).count_ones();
        ((ones + 2 * twos) % 4) as u8
    }
}

/// Order in which [`expand_code_with`] drains its work list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Traversal {
    /// Adjoin one generator at a time, extending the set by the cosets of
    /// its multiples.
    Incremental,
    /// Breadth-first work list over all spanning vectors.
    Fifo,
    /// Depth-first work list over all spanning vectors.
    Lifo,
}

/// An explicit set of codewords of one length.
#[derive(Debug, Clone)]
pub struct CodeSet {
    len: u32,
    members: Vec<u64>,
    /// Packed `lo | hi << len` keys, in insertion order.
    words: Vec<u32>,
    /// Generators of the set as a Z4-module; `None` means the words themselves.
    spanning: Option<Vec<Codeword>>,
}

impl CodeSet {
    fn empty(len: u32, spanning: Option<Vec<Codeword>>) -> Self {
        let bits = 1usize << (2 * len);
        CodeSet { len, members: vec![0; bits.div_ceil(64)], words: Vec::new(), spanning }
    }

    fn insert(&mut self, w: Codeword) -> bool {
        let key = w.key() as usize;
        let (slot, bit) = (key / 64, 1u64 << (key % 64));
        if self.members[slot] & bit != 0 {
            return false;
        }
        self.members[slot] |= bit;
        self.words.push(key as u32);
        true
    }

    pub fn length(&self) -> u64 {
        u64::from(self.len)
    }

    pub fn contains(&self, w: &Codeword) -> bool {
        let key = w.key() as usize;
        self.members[key / 64] >> (key % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> impl Iterator<Item = Codeword> + '_ {
        self.words.iter().map(|&k| Codeword::from_key(k, self.len))
    }

    /// Words in ascending order, for set comparison.
    pub fn sorted_words(&self) -> Vec<Codeword> {
        let mut w: Vec<Codeword> = self.words().collect();
        w.sort_unstable();
        w
    }

    /// A set whose additive and cyclic span is this set.
    pub fn spanning(&self) -> alloc::boxed::Box<dyn Iterator<Item = Codeword> + '_> {
        match &self.spanning {
            Some(gens) => alloc::boxed::Box::new(gens.iter().copied()),
            None => alloc::boxed::Box::new(self.words()),
        }
    }

    pub fn is_subset(&self, other: &CodeSet) -> bool {
        self.words().all(|w| other.contains(&w))
    }

    pub fn intersection_len(&self, other: &CodeSet) -> usize {
        self.words().filter(|w| other.contains(w)).count()
    }

    pub fn is_cyclic_submodule(&self) -> bool {
        self.contains(&Codeword::zero(self.len))
            && self.words().all(|w| self.contains(&w.shift()))
            && self.spanning().all(|s| self.words().all(|w| self.contains(&w.add(&s))))
    }
}

fn check_bound(length: u64, bound: u64) -> Result<u32> {
    let bound = bound.min(MAX_BOUND);
    if length > bound {
        return Err(Error::BoundExceeded { n: length, bound });
    }
    Ok(length as u32)
}

/// Smallest set containing `generators`, closed under addition and cyclic
/// shift.
pub fn span_of(len: u32, generators: &[Codeword], order: Traversal) -> CodeSet {
    let mut spanning: Vec<Codeword> = Vec::new();
    for g in generators {
        let mut s = *g;
        for _ in 0..len {
            if !s.is_zero() && !spanning.contains(&s) {
                spanning.push(s);
            }
            s = s.shift();
        }
    }
    let mut set = CodeSet::empty(len, Some(spanning.clone()));
    set.insert(Codeword::zero(len));
    match order {
        Traversal::Incremental => adjoin_each(&mut set, &spanning),
        Traversal::Fifo | Traversal::Lifo => close_worklist(&mut set, &spanning, order),
    }
    set
}

/// `set` is a group throughout; adjoining `s` adds the cosets `set + k s`
/// until some multiple of `s` already lies in `set`.
fn adjoin_each(set: &mut CodeSet, spanning: &[Codeword]) {
    for s in spanning {
        let base = set.words.len();
        let mut step = *s;
        while !set.contains(&step) {
            for idx in 0..base {
                let w = Codeword::from_key(set.words[idx], set.len);
                set.insert(w.add(&step));
            }
            step = step.add(s);
        }
    }
}

fn close_worklist(set: &mut CodeSet, spanning: &[Codeword], order: Traversal) {
    let mut work: VecDeque<u32> = set.words.iter().copied().collect();
    while let Some(key) = if order == Traversal::Lifo {
        work.pop_back()
    } else {
        work.pop_front()
    } {
        let w = Codeword::from_key(key, set.len);
        for s in spanning {
            let next = w.add(s);
            if set.insert(next) {
                work.push_back(next.key());
            }
        }
    }
}

/// The code `(f g, 2 f)` as an explicit set.
pub fn expand_code(spec: &CodeSpec<'_>, bound: u64) -> Result<CodeSet> {
    expand_code_with(spec, bound, Traversal::Incremental)
}

pub fn expand_code_with(spec: &CodeSpec<'_>, bound: u64, order: Traversal) -> Result<CodeSet> {
    let len = check_bound(spec.table().length(), bound)?;
    let (fg, two_f) = spec.generators();
    let gens = [Codeword::from_poly(&fg, len), Codeword::from_poly(&two_f, len)];
    Ok(span_of(len, &gens, order))
}

/// Every vector of Z4^N orthogonal to the spanning set of `code`, found by
/// scanning the whole ambient space.
pub fn dual_bruteforce(code: &CodeSet, bound: u64) -> Result<CodeSet> {
    let len = check_bound(code.length(), bound)?;
    let gens: Vec<Codeword> = code.spanning().collect();
    let mut dual = CodeSet::empty(len, None);
    for key in 0..(1u64 << (2 * len)) as u32 {
        let v = Codeword::from_key(key, len);
        if gens.iter().all(|s| v.dot(s) == 0) {
            dual.insert(v);
        }
    }
    Ok(dual)
}

/// `|C ∩ C^perp|` by explicit expansion.
pub fn hull_bruteforce(spec: &CodeSpec<'_>, bound: u64) -> Result<u128> {
    let code = expand_code(spec, bound)?;
    let dual = dual_bruteforce(&code, bound)?;
    Ok(code.intersection_len(&dual) as u128)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    HullSize,
    CodeSize,
    LcdCriterion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub f: DivisorSet,
    pub g: DivisorSet,
    pub h: DivisorSet,
    pub check: Check,
    /// Brute-force value (0/1 for the criterion check).
    pub expected: u128,
    /// Closed-form value.
    pub got: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub length: u64,
    pub partitions: u64,
    pub lcd_count: u64,
    pub mismatches: Vec<Mismatch>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks the hull formula, the code size formula and the LCD
/// characterization against brute force for every partition of the table.
pub fn sweep_verify(length: u64, bound: u64) -> Result<SweepReport> {
    check_bound(length, bound)?;
    let table = FactorTable::build(length)?;
    let mut report = SweepReport { length, partitions: 0, lcd_count: 0, mismatches: Vec::new() };
    for spec in CodeSpec::all(&table) {
        report.partitions += 1;
        let code = expand_code(&spec, bound)?;
        let dual = dual_bruteforce(&code, bound)?;
        let hull = code.intersection_len(&dual) as u128;
        let formula = spec.hull_report();
        let mut flag = |check, expected: u128, got: u128| {
            if expected != got {
                report.mismatches.push(Mismatch {
                    f: spec.f().clone(),
                    g: spec.g().clone(),
                    h: spec.h().clone(),
                    check,
                    expected,
                    got,
                });
            }
        };
        flag(Check::HullSize, hull, formula.hull_size().unwrap_or(0));
        flag(Check::CodeSize, code.len() as u128, spec.code_size().unwrap_or(0));
        flag(
            Check::LcdCriterion,
            u128::from(spec.is_self_reciprocal_principal()),
            u128::from(formula.lcd),
        );
        if hull == 1 {
            report.lcd_count += 1;
        }
    }
    Ok(report)
}
