//! Stable Ext (the colimit over simultaneous Frobenius twists) and the twist,
//! field-size and rank thresholds beyond which comparison maps are
//! isomorphisms.

use alloc::vec::Vec;

use crate::arith;
use crate::error::Result;
use crate::families::{ExtPair, FunctorKind, TwistSide};
use crate::hopf::HopfPresentation;

/// Stable Ext between `src^*` and `tgt^*` where one side carries `h` more
/// twists than the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StableFamily {
    pub p: u64,
    pub pair: ExtPair,
    pub h: u64,
    pub direction: TwistSide,
}

impl StableFamily {
    pub fn new(p: u64, src: FunctorKind, tgt: FunctorKind, h: u64, direction: TwistSide) -> Result<Self> {
        arith::require_prime(p)?;
        Ok(Self { p, pair: ExtPair::from_kinds(src, tgt)?, h, direction })
    }

    /// `dim Ext^c` at star-indices `(src, tgt)` for `c = 0..=max_coh`.
    pub fn series(&self, src: u64, tgt: u64, max_coh: u64) -> Result<Vec<u64>> {
        ext_pair_stable(self, max_coh)?.coefficient_series(src, tgt, max_coh)
    }
}

/// The family's presentation, keeping the generators of cohomological degree
/// at most `max_coh`. The full list is infinite; every coefficient with
/// `coh <= max_coh` is exact.
pub fn ext_pair_stable(f: &StableFamily, max_coh: u64) -> Result<HopfPresentation> {
    let gens = f.pair.generators_up_to(f.direction, f.p, f.h, max_coh, None, 0)?;
    HopfPresentation::new(f.pair.algebra(), gens)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct BoundsArgs {
    pub i: u64,
    pub s: u64,
    pub d: u64,
    pub m: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoundsReport {
    /// Twists needed before `Ext^i` into a degree-`d` functor vanishes.
    pub vanish_h: u64,
    /// Twists needed before twisting is an isomorphism on `Ext^s`.
    pub weak_m0: u64,
    /// Field size beyond which `Ext^s_P` agrees with `Ext^s_F` (weak form).
    pub weak_q: u64,
    /// Twist threshold for `Γ^(m)` to `S^(m)` style comparison (strong form).
    pub strong_m: u64,
    /// Field size gate of the strong comparison.
    pub strong_q: u64,
    /// Rank beyond which the general linear group comparison holds.
    pub gl_n: u64,
}

pub fn bounds(p: u64, args: BoundsArgs) -> Result<BoundsReport> {
    arith::require_prime(p)?;
    let BoundsArgs { i, s, d, m } = args;
    Ok(BoundsReport {
        vanish_h: vanish_h(p, i, d),
        weak_m0: weak_m0(p, s, d),
        weak_q: weak_q(p, s, d)?,
        strong_m: strong_m(p, s),
        strong_q: strong_q(d),
        gl_n: gl_n(m, d)?,
    })
}

fn twist_term(p: u64, d: u64) -> u64 {
    arith::ceil_div(d.saturating_sub(1), p - 1)
}

/// Least `h >= log_p((i + 2) / 2) + ceil((d - 1) / (p - 1))`.
pub fn vanish_h(p: u64, i: u64, d: u64) -> u64 {
    arith::log_ceil(p, i + 2, 2) + twist_term(p, d)
}

/// Least `m >= log_p((s + 2) / 2) + ceil((d - 1) / (p - 1))`.
pub fn weak_m0(p: u64, s: u64, d: u64) -> u64 {
    vanish_h(p, s, d)
}

/// `d * p^m0`.
pub fn weak_q(p: u64, s: u64, d: u64) -> Result<u64> {
    arith::mul(d, arith::pow(p, weak_m0(p, s, d))?)
}

/// Least `m >= log_p((s + 1) / 2)`, and at least zero.
pub fn strong_m(p: u64, s: u64) -> u64 {
    arith::log_ceil(p, s + 1, 2)
}

pub fn strong_q(d: u64) -> u64 {
    d
}

/// `2m + 2d`.
pub fn gl_n(m: u64, d: u64) -> Result<u64> {
    arith::add(arith::mul(2, m)?, arith::mul(2, d)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use FunctorKind::*;

    #[test]
    fn bound_examples() {
        assert_eq!(strong_m(2, 5), 2);
        assert_eq!(vanish_h(2, 6, 3), 4);
        assert_eq!(gl_n(2, 3).unwrap(), 10);
        assert_eq!(weak_q(3, 1, 1).unwrap(), 3);
    }

    #[test]
    fn strong_m_at_zero() {
        assert_eq!(strong_m(2, 0), 0);
        assert_eq!(strong_m(2, 1), 0);
        assert_eq!(strong_m(2, 2), 1);
    }

    #[test]
    fn gamma_sym_untwisted() {
        let f = StableFamily::new(2, Gamma, Sym, 0, TwistSide::Source).unwrap();
        let s = f.series(1, 1, 31).unwrap();
        for (c, x) in s.iter().enumerate() {
            assert_eq!(*x, u64::from(c % 2 == 0), "coh {c}");
        }
    }

    #[test]
    fn gamma_lambda_twisted_target() {
        let f = StableFamily::new(2, Gamma, Lambda, 1, TwistSide::Target).unwrap();
        assert_eq!(f.series(4, 2, 4).unwrap()[4], 1);
        // pairs of distinct generators of degree 4m: {0,1} and {0,2}
        assert_eq!(f.series(4, 2, 10).unwrap(), [0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0]);
    }

    #[test]
    fn unsupported() {
        for h in 0..3 {
            assert!(StableFamily::new(3, Lambda, Gamma, h, TwistSide::Source).is_err());
        }
    }
}
