//! Polynomials over Z4.
//!
//! Coefficients are stored in ascending order of degree (`coeffs[k]` is the
//! coefficient of `X^k`) as canonical residues in `0..4`. The zero polynomial
//! is the empty vector, so equality of normalized values is equality of
//! polynomials.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::f2poly::F2Poly;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Z4Poly {
    coeffs: Vec<u8>,
}

fn residue(c: i64) -> u8 {
    c.rem_euclid(4) as u8
}

impl Z4Poly {
    /// Builds a polynomial from arbitrary integer coefficients, reducing each
    /// mod 4. `-1` and `3` are the same coefficient.
    pub fn new(coeffs: &[i64]) -> Self {
        Self::from_residues(coeffs.iter().map(|&c| residue(c)).collect())
    }

    fn from_residues(mut coeffs: Vec<u8>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Z4Poly { coeffs }
    }

    pub fn zero() -> Self {
        Z4Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Z4Poly { coeffs: vec![1] }
    }

    /// `X^n - 1`, i.e. `[3, 0, ..., 0, 1]`.
    pub fn x_n_minus_one(n: usize) -> Self {
        let mut coeffs = vec![0u8; n + 1];
        coeffs[0] = 3;
        coeffs[n] = 1;
        Self::from_residues(coeffs)
    }

    /// `X^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0u8; k + 1];
        coeffs[k] = 1;
        Z4Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    /// Coefficient of `X^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> u8 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u8 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn has_unit_constant(&self) -> bool {
        self.coeff(0) % 2 == 1
    }

    /// Multiplies every coefficient by `s`.
    pub fn scale(&self, s: u8) -> Self {
        Self::from_residues(self.coeffs.iter().map(|&c| (c * (s % 4)) % 4).collect())
    }

    /// Division by a monic divisor. Returns `(q, r)` with `self = q*d + r` and
    /// `deg r < deg d`.
    pub fn divmod_monic(&self, d: &Z4Poly) -> Result<(Z4Poly, Z4Poly)> {
        if !d.is_monic() {
            return Err(Error::NotMonic);
        }
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Z4Poly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u8; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let lead = rem[k + dd];
            if lead == 0 {
                continue;
            }
            quot[k] = lead;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = (rem[k + j] + 4 - (lead * dc) % 4) % 4;
            }
        }
        rem.truncate(dd);
        Ok((Self::from_residues(quot), Self::from_residues(rem)))
    }

    /// The reciprocal `a0^{-1} X^deg f(1/X)` of a monic polynomial with unit
    /// constant term. Units of Z4 are self-inverse, so `a0^{-1} = a0`.
    pub fn reciprocal(&self) -> Result<Z4Poly> {
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let a0 = self.coeff(0);
        if a0.is_multiple_of(2) {
            return Err(Error::NonUnitConstant);
        }
        let rev: Vec<u8> = self.coeffs.iter().rev().map(|&c| (c * a0) % 4).collect();
        Ok(Self::from_residues(rev))
    }

    pub fn is_self_reciprocal(&self) -> Result<bool> {
        Ok(self.reciprocal()? == *self)
    }

    pub fn reduce_mod2(&self) -> F2Poly {
        F2Poly::from_bits(self.coeffs.iter().map(|&c| c & 1).collect())
    }

    /// Canonical text form: comma-separated ascending residues, empty for zero.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        parts.join(",")
    }

    /// Parses the comma-separated ascending coefficient form. Any integer is
    /// accepted and reduced mod 4, so `"-1,1"` and `"3,1"` agree.
    pub fn parse(text: &str) -> Result<Z4Poly> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Z4Poly::zero());
        }
        let mut coeffs = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            let c: i64 = part
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad coefficient {part:?}")))?;
            coeffs.push(c);
        }
        Ok(Z4Poly::new(&coeffs))
    }

    /// Signed symbolic rendering, highest degree first, with 3 shown as -1:
    /// `[3,2,3,1]` renders as `X^3-X^2+2X-1`.
    pub fn to_symbolic(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for k in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[k];
            if c == 0 {
                continue;
            }
            let (neg, mag) = if c == 3 { (true, 1) } else { (false, c) };
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mono = match k {
                0 => String::new(),
                1 => "X".to_string(),
                _ => alloc::format!("X^{k}"),
            };
            if mag != 1 || k == 0 {
                out.push_str(&mag.to_string());
            }
            out.push_str(&mono);
        }
        out
    }
}

impl fmt::Debug for Z4Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Poly[{}]", self.to_text())
    }
}

impl fmt::Display for Z4Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_symbolic())
    }
}

impl Add for &Z4Poly {
    type Output = Z4Poly;

    fn add(self, rhs: &Z4Poly) -> Z4Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Z4Poly::from_residues(
            (0..len)
                .map(|k| (self.coeff(k) + rhs.coeff(k)) % 4)
                .collect(),
        )
    }
}

impl Neg for &Z4Poly {
    type Output = Z4Poly;

    fn neg(self) -> Z4Poly {
        Z4Poly::from_residues(self.coeffs.iter().map(|&c| (4 - c) % 4).collect())
    }
}

impl Sub for &Z4Poly {
    type Output = Z4Poly;

    fn sub(self, rhs: &Z4Poly) -> Z4Poly {
        self + &(-rhs)
    }
}

impl Mul for &Z4Poly {
    type Output = Z4Poly;

    fn mul(self, rhs: &Z4Poly) -> Z4Poly {
        if self.is_zero() || rhs.is_zero() {
            return Z4Poly::zero();
        }
        let mut out = vec![0u8; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % 4;
            }
        }
        Z4Poly::from_residues(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Z4Poly {
            type Output = Z4Poly;
            fn $m(self, rhs: Z4Poly) -> Z4Poly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl core::iter::Product for Z4Poly {
    fn product<I: Iterator<Item = Z4Poly>>(iter: I) -> Z4Poly {
        iter.fold(Z4Poly::one(), |acc, p| &acc * &p)
    }
}
