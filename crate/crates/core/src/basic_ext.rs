//! Graded tables of the basic Ext spaces between a twisted identity and a
//! twisted symmetric, exterior or divided power.
//!
//! With `P = p^(r-j)`, `V_j` has one slot in each degree `2Pm`, `m < p^j`.
//! `W_j` is `V_j` moved up by `P - 1`; `∂: W_j → V_j` raises degree by `P + 1`
//! and sends slot `m` to slot `m + 1`. It kills exactly the `W_j` slots with
//! `m ≡ p - 1 (mod p)` and misses exactly the `V_j` slots with `m ≡ 0`.

use alloc::vec::Vec;

use crate::arith;
use crate::error::{invalid, Result};
use crate::graded::GradedDims;
use crate::hopf::{GeneratorWord, Token};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasicSpace {
    V,
    W,
    U,
    Vtilde,
    /// Kernel of `∂` on `W_j`.
    K,
    /// Cokernel of `∂` into `V_j`.
    C,
}

impl BasicSpace {
    pub const ALL: [BasicSpace; 6] =
        [BasicSpace::V, BasicSpace::W, BasicSpace::U, BasicSpace::Vtilde, BasicSpace::K, BasicSpace::C];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasicSpaceQuery {
    pub kind: BasicSpace,
    pub p: u64,
    pub r: u64,
    pub j: u64,
}

impl BasicSpaceQuery {
    pub fn new(kind: BasicSpace, p: u64, r: u64, j: u64) -> Self {
        Self { kind, p, r, j }
    }
}

pub fn basic_space(q: &BasicSpaceQuery) -> Result<GradedDims> {
    let BasicSpaceQuery { kind, p, r, j } = *q;
    arith::require_prime(p)?;
    if j > r {
        return Err(invalid(alloc::format!("j = {j} exceeds r = {r}")));
    }
    if matches!(kind, BasicSpace::K | BasicSpace::C) && j == 0 {
        return Err(invalid("kernel and cokernel tables need j >= 1"));
    }
    let big = arith::pow(p, r - j)?;
    let count = arith::pow(p, j)?;
    let offset = match kind {
        BasicSpace::V | BasicSpace::U | BasicSpace::C => 0,
        BasicSpace::W | BasicSpace::K => big - 1,
        BasicSpace::Vtilde => 2 * big - 2,
    };
    let keep = |m: u64| match kind {
        BasicSpace::K => m % p == p - 1,
        BasicSpace::C => m.is_multiple_of(p),
        _ => true,
    };
    let mut slots = Vec::new();
    for m in (0..count).filter(|&m| keep(m)) {
        slots.push(arith::add(arith::mul(arith::mul(2, big)?, m)?, offset)?);
    }
    GradedDims::from_slots(slots)
}

/// Name and cohomological degree of the basis class `e_r(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EClassName {
    pub word: GeneratorWord,
    pub degree: u64,
}

/// Product of powers of `e_1, ..., e_r` read off the base-`p` digits of `m`.
/// Factor `e_k` carries the twist `r - k`.
pub fn e_name(p: u64, r: u64, m: u64) -> Result<EClassName> {
    arith::require_prime(p)?;
    if r == 0 {
        return Err(invalid("e_r(m) needs r >= 1"));
    }
    if m >= arith::pow(p, r)? {
        return Err(invalid(alloc::format!("m = {m} is not below {p}^{r}")));
    }
    let tokens = arith::digits(m, p)
        .into_iter()
        .enumerate()
        .filter(|&(_, digit)| digit > 0)
        .map(|(i, digit)| {
            let level = i as u64 + 1;
            Token::EPower { level, power: digit, twist: r - level }
        })
        .collect();
    Ok(EClassName { word: GeneratorWord(tokens), degree: arith::mul(2, m)? })
}
