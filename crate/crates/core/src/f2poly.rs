//! Polynomials over F2, ascending coefficient order, zero as the empty vector.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct F2Poly {
    coeffs: Vec<u8>,
}

impl F2Poly {
    /// Reduces each coefficient mod 2.
    pub fn new(coeffs: &[u8]) -> Self {
        Self::from_bits(coeffs.iter().map(|c| c & 1).collect())
    }

    pub(crate) fn from_bits(mut coeffs: Vec<u8>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        F2Poly { coeffs }
    }

    pub fn zero() -> Self {
        F2Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        F2Poly { coeffs: vec![1] }
    }

    /// `X^n + 1`.
    pub fn x_n_plus_one(n: usize) -> Self {
        let mut c = vec![0u8; n + 1];
        c[0] ^= 1;
        c[n] ^= 1;
        Self::from_bits(c)
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u8 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Euclidean division. The divisor must be nonzero (every nonzero F2
    /// polynomial is monic).
    pub fn divmod(&self, d: &F2Poly) -> Result<(F2Poly, F2Poly)> {
        let dd = d.degree().ok_or(Error::NotMonic)?;
        if self.coeffs.len() <= dd {
            return Ok((F2Poly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u8; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            if rem[k + dd] == 0 {
                continue;
            }
            quot[k] = 1;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[k + j] ^= dc;
            }
        }
        rem.truncate(dd);
        Ok((Self::from_bits(quot), Self::from_bits(rem)))
    }

    pub fn gcd(&self, other: &F2Poly) -> F2Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divmod(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a
    }
}

impl fmt::Debug for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Poly{:?}", self.coeffs)
    }
}

impl Add for &F2Poly {
    type Output = F2Poly;

    fn add(self, rhs: &F2Poly) -> F2Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        F2Poly::from_bits((0..len).map(|k| self.coeff(k) ^ rhs.coeff(k)).collect())
    }
}

impl Mul for &F2Poly {
    type Output = F2Poly;

    fn mul(self, rhs: &F2Poly) -> F2Poly {
        if self.is_zero() || rhs.is_zero() {
            return F2Poly::zero();
        }
        let mut out = vec![0u8; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] ^= b;
            }
        }
        F2Poly::from_bits(out)
    }
}

impl core::iter::Product for F2Poly {
    fn product<I: Iterator<Item = F2Poly>>(iter: I) -> F2Poly {
        iter.fold(F2Poly::one(), |acc, p| &acc * &p)
    }
}
