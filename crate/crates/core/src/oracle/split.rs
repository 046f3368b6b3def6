use alloc::vec::Vec;

use crate::arith;
use crate::error::Result;
use crate::graded::Flavor;
use crate::oracle::basis::functor_basis;
use crate::oracle::fp::FpMatrix;
use crate::pcalc::splitting_criterion;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitCheck {
    /// The composite is `C(n, m) mod p` times the identity, and it is
    /// invertible exactly when the digit criterion says so.
    pub holds: bool,
    /// The scalar, when the composite is a scalar matrix.
    pub scalar: Option<u64>,
}

/// Matrix of `S^n → S^m ⊗ S^(n-m) → S^n` on `S^n(F_p^2)`.
pub fn split_composite(p: u64, n: u64, m: u64) -> Result<FpMatrix> {
    let top = functor_basis(Flavor::Sym, 2, n, p)?;
    let left = functor_basis(Flavor::Sym, 2, m, p)?;
    let right = functor_basis(Flavor::Sym, 2, n - m, p)?;
    let mut comult = FpMatrix::zeros(p, left.len() * right.len(), top.len())?;
    let mut mult = FpMatrix::zeros(p, top.len(), left.len() * right.len())?;
    for (c, alpha) in top.monomials.iter().enumerate() {
        for (x, beta) in left.monomials.iter().enumerate() {
            if beta.iter().zip(alpha).any(|(b, a)| b > a) {
                continue;
            }
            let gamma: Vec<u64> = alpha.iter().zip(beta).map(|(a, b)| a - b).collect();
            let y = right.index_of(&gamma).expect("complement in basis");
            let mut coeff = 1u64;
            for (a, b) in alpha.iter().zip(beta) {
                coeff = coeff * (arith::binomial(*a, *b)? % p) % p;
            }
            comult.set(x * right.len() + y, c, coeff);
        }
    }
    for (x, beta) in left.monomials.iter().enumerate() {
        for (y, gamma) in right.monomials.iter().enumerate() {
            let prod: Vec<u64> = beta.iter().zip(gamma).map(|(b, g)| b + g).collect();
            mult.set(top.index_of(&prod).expect("product in basis"), x * right.len() + y, 1);
        }
    }
    mult.mul(&comult)
}

/// Checks that the composite `S^n → S^m ⊗ S^(n-m) → S^n` is a scalar and
/// reports it; `S^m ⊗ S^(n-m)` splits off `S^n` exactly when it is nonzero.
pub fn split_check(p: u64, n: u64, m: u64) -> Result<SplitCheck> {
    if m > n {
        return Err(crate::error::invalid("need m <= n"));
    }
    let scalar = split_composite(p, n, m)?.scalar_value();
    let expected = arith::binomial(n, m)? % p;
    let holds = scalar == Some(expected) && (expected != 0) == splitting_criterion(p, n, m);
    Ok(SplitCheck { holds, scalar })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(split_check(2, 3, 1).unwrap(), SplitCheck { holds: true, scalar: Some(1) });
        assert_eq!(split_check(2, 2, 1).unwrap(), SplitCheck { holds: true, scalar: Some(0) });
        assert_eq!(split_check(5, 7, 0).unwrap(), SplitCheck { holds: true, scalar: Some(1) });
        assert!(split_check(2, 1, 2).is_err());
    }
}
