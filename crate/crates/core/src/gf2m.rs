//! Arithmetic in GF(2^m) = F2[Y]/(p(Y)), elements packed as bit vectors.
//!
//! Used only to build a splitting field for `X^N + 1` and read off minimal
//! polynomials, so the field degree is small (bounded by [`MAX_DEGREE`]).

use alloc::vec;
use alloc::vec::Vec;

use crate::numtheory::prime_factors;

/// Largest supported extension degree. `2^m - 1` is factored by trial division.
pub(crate) const MAX_DEGREE: u32 = 40;

fn deg(a: u128) -> i32 {
    127 - a.leading_zeros() as i32
}

/// `a mod p` for bit-packed F2 polynomials.
fn poly_rem(mut a: u128, p: u128) -> u128 {
    let dp = deg(p);
    while deg(a) >= dp {
        a ^= p << (deg(a) - dp);
    }
    a
}

fn poly_gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, poly_rem(a, b));
    }
    a
}

/// `a * b mod p` with `a`, `b` already reduced.
fn mulmod(a: u128, b: u128, p: u128, m: u32) -> u128 {
    let mut acc = 0u128;
    for i in (0..m).rev() {
        acc <<= 1;
        if acc >> m & 1 == 1 {
            acc ^= p;
        }
        if b >> i & 1 == 1 {
            acc ^= a;
        }
    }
    acc
}

/// `X^(2^k) mod p`.
fn x_pow_2k(k: u32, p: u128, m: u32) -> u128 {
    let mut x = poly_rem(0b10, p);
    for _ in 0..k {
        x = mulmod(x, x, p, m);
    }
    x
}

/// Rabin's test: `p` of degree `m` is irreducible iff `X^(2^m) = X (mod p)`
/// and `gcd(X^(2^(m/q)) - X, p) = 1` for every prime `q | m`.
fn is_irreducible(p: u128, m: u32) -> bool {
    let x = poly_rem(0b10, p);
    if x_pow_2k(m, p, m) != x {
        return false;
    }
    prime_factors(u64::from(m)).into_iter().all(|q| {
        let t = x_pow_2k(m / q as u32, p, m) ^ x;
        poly_gcd(p, t) == 1
    })
}

#[derive(Debug, Clone)]
pub(crate) struct Gf2m {
    modulus: u128,
    degree: u32,
}

impl Gf2m {
    /// The field built on the least irreducible of degree `m`, ordering
    /// candidates by their bit-packed integer value.
    pub(crate) fn smallest(m: u32) -> Gf2m {
        assert!((1..=MAX_DEGREE).contains(&m));
        let start = 1u128 << m;
        let modulus = (start..start << 1)
            .find(|&p| is_irreducible(p, m))
            .expect("irreducible polynomials exist in every degree");
        Gf2m { modulus, degree: m }
    }

    #[cfg(test)]
    pub(crate) fn modulus(&self) -> u128 {
        self.modulus
    }

    pub(crate) fn mul(&self, a: u64, b: u64) -> u64 {
        mulmod(u128::from(a), u128::from(b), self.modulus, self.degree) as u64
    }

    pub(crate) fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Least nonzero element (by integer value) of multiplicative order
    /// `2^m - 1`.
    pub(crate) fn first_primitive(&self) -> u64 {
        let group = (1u64 << self.degree) - 1;
        let cofactors: Vec<u64> = prime_factors(group).into_iter().map(|q| group / q).collect();
        (1..=group)
            .find(|&b| cofactors.iter().all(|&c| self.pow(b, c) != 1))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    /// Coefficients (ascending, in the field) of `prod_j (Z - root_j)`.
    pub(crate) fn poly_from_roots(&self, roots: &[u64]) -> Vec<u64> {
        let mut acc = vec![1u64];
        for &r in roots {
            let mut next = vec![0u64; acc.len() + 1];
            for (k, &c) in acc.iter().enumerate() {
                next[k + 1] ^= c;
                next[k] ^= self.mul(c, r);
            }
            acc = next;
        }
        acc
    }
}
