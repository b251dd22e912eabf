//! Enumeration and counting of cyclic LCD codes.
//!
//! A cyclic code of odd length over Z4 is LCD exactly when it is `(f)` for a
//! self-reciprocal monic divisor `f` of `X^N - 1`. Such divisors are unions of
//! reciprocal-closed atoms: a single self-reciprocal factor, or a reciprocal
//! pair `{f, f*}`. With `nsrf` atoms there are `2^nsrf` LCD codes.

use alloc::string::String;
use alloc::vec::Vec;

use crate::codes::{CodeSpec, DivisorSet};
use crate::cyclotomic::{FactorKind, FactorTable};
use crate::error::Result;
use crate::numtheory::{classify_pair, divisors};
use crate::z4poly::Z4Poly;

/// `nsrf = sum over n | N of gamma(n) (good) or beta(n) (bad)`.
pub fn count_nsrf(length: u64) -> Result<u64> {
    crate::numtheory::mult_order_of_2(length)?;
    divisors(length)
        .into_iter()
        .map(|n| classify_pair(n).map(|c| c.atoms()))
        .sum()
}

/// Reciprocal-closed atoms of the table, ordered by smallest id.
pub fn atoms(table: &FactorTable) -> Vec<DivisorSet> {
    table
        .records()
        .iter()
        .filter_map(|r| match r.kind {
            FactorKind::SelfReciprocal => Some(DivisorSet::from([r.id])),
            FactorKind::PairFirst => Some(DivisorSet::from([r.id, r.partner])),
            FactorKind::PairSecond => None,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcdEntry {
    pub f: DivisorSet,
    pub generator: Z4Poly,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcdCatalog {
    pub length: u64,
    pub nsrf: u64,
    pub entries: Vec<LcdEntry>,
}

/// Display label of the principal code `(f)`: `(1)`, `(0)` or the product of
/// factor labels such as `(f[1,7]f*[1,7])`.
pub fn code_label(table: &FactorTable, f: &DivisorSet) -> String {
    if f.is_empty() {
        return "(1)".into();
    }
    if f.len() == table.len() {
        return "(0)".into();
    }
    let mut out = String::from("(");
    for id in f.ids() {
        out.push_str(&table.records()[id].label());
    }
    out.push(')');
    out
}

/// All cyclic LCD codes of the table's length, sorted by number of factors in
/// `f` and then by the id list.
pub fn enumerate_lcd_in(table: &FactorTable) -> LcdCatalog {
    let atoms = atoms(table);
    let mut entries: Vec<LcdEntry> = (0u64..1 << atoms.len())
        .map(|mask| {
            let f = atoms
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .fold(DivisorSet::empty(), |acc, (_, a)| acc.union(a));
            let generator = table.divisor_poly(&f).expect("table ids");
            let label = code_label(table, &f);
            LcdEntry { f, generator, label }
        })
        .collect();
    entries.sort_by_key(|e| (e.f.len(), e.f.to_vec()));
    LcdCatalog { length: table.length(), nsrf: atoms.len() as u64, entries }
}

pub fn enumerate_lcd(length: u64) -> Result<LcdCatalog> {
    Ok(enumerate_lcd_in(&FactorTable::build(length)?))
}

/// Three independent LCD counts for one length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Census {
    /// `2^nsrf` from the divisor sum.
    pub formula: u128,
    /// Size of the enumerated catalog.
    pub enumerated: u128,
    /// Partitions `(f, g, h)` whose hull formula gives size 1; `None` when
    /// `3^#factors` exceeds the sweep budget.
    pub swept: Option<u128>,
}

impl Census {
    pub fn consistent(&self) -> bool {
        self.formula == self.enumerated && self.swept.is_none_or(|s| s == self.formula)
    }
}

/// Default cap on the number of partitions the census sweep visits.
pub const DEFAULT_SWEEP_BUDGET: u64 = 1 << 20;

pub fn lcd_census(length: u64, sweep_budget: u64) -> Result<Census> {
    let nsrf = count_nsrf(length)?;
    let table = FactorTable::build(length)?;
    let catalog = enumerate_lcd_in(&table);
    let partitions = 3u64.checked_pow(table.len() as u32);
    let swept = match partitions {
        Some(p) if p <= sweep_budget => {
            Some(CodeSpec::all(&table).filter(CodeSpec::is_lcd).count() as u128)
        }
        _ => None,
    };
    Ok(Census {
        formula: 1u128 << nsrf,
        enumerated: catalog.entries.len() as u128,
        swept,
    })
}
