//! Cyclic codes `C = (f g, 2 f)` with `f g h = X^N - 1`, and their hulls.
//!
//! The factors in a [`FactorTable`] are pairwise coprime basic irreducibles, so
//! every monic divisor of `X^N - 1` is a set of factor ids and gcd / lcm are
//! intersection / union of those sets. No Euclidean algorithm over Z4 is
//! needed (or possible).

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::cyclotomic::FactorTable;
use crate::error::{Error, Result};
use crate::z4poly::Z4Poly;

/// A monic divisor of `X^N - 1`, as the set of table ids of its factors.
/// The empty set is the divisor 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DivisorSet(BTreeSet<usize>);

impl DivisorSet {
    pub fn empty() -> Self {
        DivisorSet(BTreeSet::new())
    }

    pub fn ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.ids().collect()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.0.contains(&id)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn union(&self, other: &DivisorSet) -> DivisorSet {
        DivisorSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &DivisorSet) -> DivisorSet {
        DivisorSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &DivisorSet) -> DivisorSet {
        DivisorSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn is_disjoint(&self, other: &DivisorSet) -> bool {
        self.0.is_disjoint(&other.0)
    }
}

impl FromIterator<usize> for DivisorSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        DivisorSet(iter.into_iter().collect())
    }
}

impl<const K: usize> From<[usize; K]> for DivisorSet {
    fn from(ids: [usize; K]) -> Self {
        ids.into_iter().collect()
    }
}

impl FactorTable {
    /// Every id; represents `X^N - 1` itself.
    pub fn all_ids(&self) -> DivisorSet {
        (0..self.len()).collect()
    }

    pub fn check_set(&self, d: &DivisorSet) -> Result<()> {
        match d.ids().find(|&id| id >= self.len()) {
            Some(id) => Err(Error::UnknownFactor(id)),
            None => Ok(()),
        }
    }

    /// Product of the member factors; 1 for the empty set.
    pub fn divisor_poly(&self, d: &DivisorSet) -> Result<Z4Poly> {
        self.check_set(d)?;
        Ok(d.ids().map(|id| self.records()[id].poly.clone()).product())
    }

    pub fn divisor_degree(&self, d: &DivisorSet) -> Result<usize> {
        self.check_set(d)?;
        Ok(d.ids().map(|id| self.records()[id].degree()).sum())
    }

    /// The divisor set of the reciprocal polynomial: each id replaced by its
    /// reciprocal partner.
    pub fn reciprocal_set(&self, d: &DivisorSet) -> Result<DivisorSet> {
        self.check_set(d)?;
        Ok(d.ids().map(|id| self.records()[id].partner).collect())
    }

    /// Whether `reciprocal_set(d) == d`, i.e. the divisor is self-reciprocal.
    pub fn is_reciprocal_closed(&self, d: &DivisorSet) -> Result<bool> {
        Ok(self.reciprocal_set(d)? == *d)
    }

    /// Splits a monic divisor of `X^N - 1` into table factors by trial
    /// division.
    pub fn factor_divisor(&self, p: &Z4Poly) -> Result<DivisorSet> {
        if !p.is_monic() {
            return Err(Error::NotADivisor);
        }
        let mut residual = p.clone();
        let mut members = DivisorSet::empty();
        for r in self.records() {
            let (q, rem) = residual.divmod_monic(&r.poly)?;
            if rem.is_zero() {
                residual = q;
                members.0.insert(r.id);
            }
        }
        if residual == Z4Poly::one() {
            Ok(members)
        } else {
            Err(Error::NotADivisor)
        }
    }
}

/// A cyclic code in the form `C = (f g, 2 f)`, `f g h = X^N - 1`, given by a
/// partition of the factor table into `f`, `g` and `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec<'t> {
    table: &'t FactorTable,
    f: DivisorSet,
    g: DivisorSet,
    h: DivisorSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullReport {
    /// `H = gcd(h, f*)`.
    pub h_set: DivisorSet,
    /// `lcm(f, h*)`.
    pub lcm_set: DivisorSet,
    /// `G = (X^N - 1) / (H * lcm(f, h*))`.
    pub g_set: DivisorSet,
    pub deg_h: usize,
    pub deg_g: usize,
    pub lcd: bool,
}

impl HullReport {
    /// `log2 |Hull(C)| = 2 deg H + deg G`.
    pub fn hull_log2(&self) -> u32 {
        (2 * self.deg_h + self.deg_g) as u32
    }

    /// `|Hull(C)| = 4^deg H * 2^deg G`, or `None` if it overflows `u128`.
    pub fn hull_size(&self) -> Option<u128> {
        1u128.checked_shl(self.hull_log2())
    }
}

impl<'t> CodeSpec<'t> {
    pub fn new(table: &'t FactorTable, f: DivisorSet, g: DivisorSet, h: DivisorSet) -> Result<Self> {
        for d in [&f, &g, &h] {
            table.check_set(d)?;
        }
        if !f.is_disjoint(&g) || !f.is_disjoint(&h) || !g.is_disjoint(&h) {
            return Err(Error::InvalidPartition("f, g, h overlap"));
        }
        if f.len() + g.len() + h.len() != table.len() {
            return Err(Error::InvalidPartition("f, g, h do not cover every factor"));
        }
        Ok(CodeSpec { table, f, g, h })
    }

    /// `h` taken as the complement of `f` and `g`.
    pub fn from_f_g(table: &'t FactorTable, f: DivisorSet, g: DivisorSet) -> Result<Self> {
        let h = table.all_ids().difference(&f.union(&g));
        Self::new(table, f, g, h)
    }

    /// The code `(f)`: `g = 1`, `h = (X^N - 1)/f`.
    pub fn principal(table: &'t FactorTable, f: DivisorSet) -> Result<Self> {
        Self::from_f_g(table, f, DivisorSet::empty())
    }

    /// All `3^k` partitions of a `k`-factor table, in base-3 counting order
    /// (digit of id `j`: 0 = f, 1 = g, 2 = h).
    pub fn all(table: &'t FactorTable) -> impl Iterator<Item = CodeSpec<'t>> + 't {
        let k = table.len() as u32;
        (0..3u64.pow(k)).map(move |mut idx| {
            let mut parts = [DivisorSet::empty(), DivisorSet::empty(), DivisorSet::empty()];
            for id in 0..table.len() {
                parts[(idx % 3) as usize].0.insert(id);
                idx /= 3;
            }
            let [f, g, h] = parts;
            CodeSpec { table, f, g, h }
        })
    }

    pub fn table(&self) -> &'t FactorTable {
        self.table
    }

    pub fn f(&self) -> &DivisorSet {
        &self.f
    }

    pub fn g(&self) -> &DivisorSet {
        &self.g
    }

    pub fn h(&self) -> &DivisorSet {
        &self.h
    }

    fn degree(&self, d: &DivisorSet) -> usize {
        d.ids().map(|id| self.table.records()[id].degree()).sum()
    }

    fn partners(&self, d: &DivisorSet) -> DivisorSet {
        d.ids().map(|id| self.table.records()[id].partner).collect()
    }

    pub fn hull_report(&self) -> HullReport {
        let h_set = self.h.intersection(&self.partners(&self.f));
        let lcm_set = self.f.union(&self.partners(&self.h));
        let g_set = self.table.all_ids().difference(&h_set.union(&lcm_set));
        let deg_h = self.degree(&h_set);
        let deg_g = self.degree(&g_set);
        HullReport { lcd: deg_h == 0 && deg_g == 0, h_set, lcm_set, g_set, deg_h, deg_g }
    }

    /// `log2 |C| = 2 deg h + deg g`.
    pub fn code_log2(&self) -> u32 {
        (2 * self.degree(&self.h) + self.degree(&self.g)) as u32
    }

    /// `|C| = 4^deg h * 2^deg g`, or `None` if it overflows `u128`.
    pub fn code_size(&self) -> Option<u128> {
        1u128.checked_shl(self.code_log2())
    }

    pub fn is_lcd(&self) -> bool {
        self.hull_report().lcd
    }

    /// `g = 1` and `f` self-reciprocal: the characterization of LCD codes.
    pub fn is_self_reciprocal_principal(&self) -> bool {
        self.g.is_empty() && self.partners(&self.f) == self.f
    }

    /// The spec with every part replaced by its reciprocal.
    pub fn reciprocal(&self) -> CodeSpec<'t> {
        CodeSpec {
            table: self.table,
            f: self.partners(&self.f),
            g: self.partners(&self.g),
            h: self.partners(&self.h),
        }
    }

    /// The two generators `f g` and `2 f` as polynomials.
    pub fn generators(&self) -> (Z4Poly, Z4Poly) {
        let f = self.table.divisor_poly(&self.f).expect("validated");
        let g = self.table.divisor_poly(&self.g).expect("validated");
        (&f * &g, f.scale(2))
    }
}
