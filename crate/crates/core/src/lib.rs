//! Cyclic codes of odd length over Z4 with complementary dual.
//!
//! The crate factors `X^N - 1` over Z4 into basic irreducible polynomials,
//! represents cyclic codes as partitions `(f, g, h)` of that factor set,
//! computes hull cardinalities in closed form, and enumerates every cyclic
//! LCD code of a given length. A brute-force module expands codes into
//! explicit codeword sets so the closed forms can be checked against ground
//! truth at small lengths.
//!
//! Everything here is exact integer arithmetic and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod codes;
pub mod cyclotomic;
mod error;
pub mod f2poly;
mod gf2m;
pub mod lcdenum;
pub mod numtheory;
pub mod oracle;
pub mod z4poly;

pub use codes::{CodeSpec, DivisorSet, HullReport};
pub use cyclotomic::{FactorKind, FactorRecord, FactorTable};
pub use error::{Error, Result};
pub use f2poly::F2Poly;
pub use lcdenum::{Census, LcdCatalog, LcdEntry};
pub use numtheory::{PairClass, PairKind};
pub use z4poly::Z4Poly;
