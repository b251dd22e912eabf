//! Elementary number theory behind the block structure of `X^N - 1`.

use alloc::vec::Vec;

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime factors of `n`, without multiplicity, ascending.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(prime_factors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1)))
}

fn check_odd(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroArgument)
    } else if n.is_multiple_of(2) {
        Err(Error::EvenLength(n))
    } else {
        Ok(())
    }
}

/// Least `k >= 1` with `2^k = 1 (mod n)`; 1 for `n = 1`.
pub fn mult_order_of_2(n: u64) -> Result<u32> {
    check_odd(n)?;
    if n == 1 {
        return Ok(1);
    }
    let mut k = 1;
    let mut pow = 2 % n;
    while pow != 1 {
        pow = pow * 2 % n;
        k += 1;
    }
    Ok(k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    Good,
    Bad,
}

/// Classification of the pair `(n, 2)` for an odd `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairClass {
    pub n: u64,
    pub order2: u32,
    pub phi: u64,
    pub kind: PairKind,
}

impl PairClass {
    /// Number of self-reciprocal factors in the `n`-block (good pairs only).
    pub fn gamma(&self) -> Option<u64> {
        (self.kind == PairKind::Good).then(|| self.phi / u64::from(self.order2))
    }

    /// Number of reciprocal pairs in the `n`-block (bad pairs only).
    pub fn beta(&self) -> Option<u64> {
        (self.kind == PairKind::Bad).then(|| self.phi / (2 * u64::from(self.order2)))
    }

    /// Reciprocal-closed atoms contributed by this block: gamma or beta.
    pub fn atoms(&self) -> u64 {
        self.gamma().or(self.beta()).unwrap_or(0)
    }
}

/// `(n, 2)` is good when `n | 2^k + 1` for some `k >= 1`. Powers of 2 mod `n`
/// repeat with period `ord_n(2)`, so only `k <= ord_n(2)` are searched.
pub fn classify_pair(n: u64) -> Result<PairClass> {
    let order2 = mult_order_of_2(n)?;
    let phi = euler_phi(n)?;
    let good = n == 1 || {
        let mut pow = 1u64;
        (1..=order2).any(|_| {
            pow = pow * 2 % n;
            pow == n - 1
        })
    };
    Ok(PairClass {
        n,
        order2,
        phi,
        kind: if good { PairKind::Good } else { PairKind::Bad },
    })
}
