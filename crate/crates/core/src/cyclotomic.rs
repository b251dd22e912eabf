//! Factorization of `X^N - 1` over Z4 for odd `N`.
//!
//! The mod-2 factors come from minimal polynomials over a splitting field, one
//! per 2-cyclotomic coset; each is then lifted to Z4 with a single Graeffe
//! step. The resulting [`FactorTable`] labels every factor by the divisor `n`
//! of `N` it belongs to and its reciprocal partner.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::f2poly::F2Poly;
use crate::gf2m::{Gf2m, MAX_DEGREE};
use crate::numtheory::{self, classify_pair, divisors, mult_order_of_2, PairClass};
use crate::z4poly::Z4Poly;

fn check_length(n: u64) -> Result<()> {
    match n {
        0 => Err(Error::ZeroArgument),
        n if n % 2 == 0 => Err(Error::EvenLength(n)),
        _ => Ok(()),
    }
}

/// Orbits of `s -> 2s (mod N)` on `0..N`. Each coset is sorted ascending and
/// the list is sorted by minimal element.
pub fn cyclotomic_cosets(n: u64) -> Result<Vec<Vec<u64>>> {
    check_length(n)?;
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut t = s;
        while !seen[t as usize] {
            seen[t as usize] = true;
            coset.push(t);
            t = t * 2 % n;
        }
        coset.sort_unstable();
        out.push(coset);
    }
    Ok(out)
}

/// Monic irreducible factors of `X^N + 1` over F2, one per cyclotomic coset and
/// in the same order as [`cyclotomic_cosets`].
///
/// The splitting field is GF(2^m), `m = ord_N(2)`, built on the least
/// irreducible of degree `m`. With `b` the least primitive element,
/// `a = b^((2^m - 1)/N)` has order `N` and the factor for coset `S` is
/// `prod_{j in S} (X - a^j)`.
pub fn factor_mod2(n: u64) -> Result<Vec<F2Poly>> {
    let cosets = cyclotomic_cosets(n)?;
    let m = mult_order_of_2(n)?;
    if m > MAX_DEGREE {
        return Err(Error::FieldTooLarge { n, degree: m });
    }
    let field = Gf2m::smallest(m);
    let generator = field.first_primitive();
    let alpha = field.pow(generator, ((1u64 << m) - 1) / n);
    Ok(cosets
        .iter()
        .map(|coset| {
            let roots: Vec<u64> = coset.iter().map(|&j| field.pow(alpha, j)).collect();
            let coeffs = field.poly_from_roots(&roots);
            debug_assert!(coeffs.iter().all(|&c| c <= 1), "minimal polynomial not over F2");
            let bits: Vec<u8> = coeffs.iter().map(|&c| c as u8).collect();
            F2Poly::new(&bits)
        })
        .collect())
}

/// One Graeffe step from a mod-2 factor of `X^N + 1` (odd `N`) to the monic
/// basic irreducible divisor of `X^N - 1` over Z4 that reduces to it.
///
/// Writing `f = e(X^2) + X o(X^2)`, the lift is `(-1)^deg f (e^2 - X o^2)`.
pub fn graeffe_lift(f2: &F2Poly) -> Result<Z4Poly> {
    let d = f2.degree().ok_or(Error::NotMonic)?;
    if f2.coeff(0) == 0 {
        return Err(Error::NonUnitConstant);
    }
    let part = |offset: usize| -> Z4Poly {
        let c: Vec<i64> = f2.coeffs().iter().skip(offset).step_by(2).map(|&b| i64::from(b)).collect();
        Z4Poly::new(&c)
    };
    let (even, odd) = (part(0), part(1));
    let lifted = &(&even * &even) - &(&Z4Poly::monomial(1) * &(&odd * &odd));
    Ok(if d % 2 == 1 { -&lifted } else { lifted })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FactorKind {
    SelfReciprocal,
    PairFirst,
    PairSecond,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorRecord {
    pub id: usize,
    pub poly: Z4Poly,
    /// Divisor of `N` this factor belongs to: the order of its roots.
    pub n: u64,
    /// 1-based index within the `n`-block; both members of a pair share it.
    pub i: usize,
    pub kind: FactorKind,
    pub partner: usize,
    pub coset: Vec<u64>,
}

impl FactorRecord {
    pub fn degree(&self) -> usize {
        self.coset.len()
    }

    /// `g[i,n]`, `f[i,n]` or `f*[i,n]`.
    pub fn label(&self) -> String {
        let head = match self.kind {
            FactorKind::SelfReciprocal => "g",
            FactorKind::PairFirst => "f",
            FactorKind::PairSecond => "f*",
        };
        format!("{head}[{},{}]", self.i, self.n)
    }
}

/// The complete factorization of `X^N - 1` over Z4 for one odd length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorTable {
    length: u64,
    records: Vec<FactorRecord>,
}

impl FactorTable {
    pub fn build(length: u64) -> Result<FactorTable> {
        let cosets = cyclotomic_cosets(length)?;
        let mod2 = factor_mod2(length)?;
        let polys = mod2.iter().map(graeffe_lift).collect::<Result<Vec<_>>>()?;
        let recips = polys.iter().map(Z4Poly::reciprocal).collect::<Result<Vec<_>>>()?;

        let mut records: Vec<FactorRecord> = Vec::with_capacity(polys.len());
        let mut next_index: Vec<(u64, usize)> = Vec::new();
        for (id, (poly, coset)) in polys.iter().zip(cosets).enumerate() {
            let partner = polys
                .iter()
                .position(|q| *q == recips[id])
                .expect("the reciprocal of a factor of X^N-1 is a factor");
            let kind = match partner.cmp(&id) {
                core::cmp::Ordering::Equal => FactorKind::SelfReciprocal,
                core::cmp::Ordering::Greater => FactorKind::PairFirst,
                core::cmp::Ordering::Less => FactorKind::PairSecond,
            };
            let n = length / numtheory::gcd(length, coset[0]);
            let i = if kind == FactorKind::PairSecond {
                records[partner].i
            } else {
                match next_index.iter_mut().find(|(m, _)| *m == n) {
                    Some((_, c)) => {
                        *c += 1;
                        *c
                    }
                    None => {
                        next_index.push((n, 1));
                        1
                    }
                }
            };
            records.push(FactorRecord { id, poly: poly.clone(), n, i, kind, partner, coset });
        }
        Ok(FactorTable { length, records })
    }

    /// The code length `N`.
    pub fn length(&self) -> u64 {
        self.length
    }

    pub fn records(&self) -> &[FactorRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn record(&self, id: usize) -> Result<&FactorRecord> {
        self.records.get(id).ok_or(Error::UnknownFactor(id))
    }

    /// Classification of `(n, 2)` for every divisor `n` of `N`.
    pub fn pair_classes(&self) -> Vec<PairClass> {
        divisors(self.length)
            .into_iter()
            .map(|n| classify_pair(n).expect("divisors of an odd length are odd"))
            .collect()
    }

    /// Number of reciprocal pairs in the table.
    pub fn pair_count(&self) -> usize {
        self.records.iter().filter(|r| r.kind == FactorKind::PairFirst).count()
    }
}
