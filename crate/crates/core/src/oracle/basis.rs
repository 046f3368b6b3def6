use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::graded::Flavor;
use crate::oracle::fp::check_field;

/// Monomial basis of `S^d`, `Λ^d` or `Γ^d` of `F_p^n`, as exponent vectors in
/// ascending lexicographic order. Exterior monomials have 0/1 exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    pub flavor: Flavor,
    pub n: usize,
    pub d: u64,
    pub p: u64,
    pub monomials: Vec<Vec<u64>>,
    index: BTreeMap<Vec<u64>, usize>,
}

impl MonomialBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, exponents: &[u64]) -> Option<usize> {
        self.index.get(exponents).copied()
    }

    /// Indices with exponent 1, ascending. Meaningful for exterior bases.
    pub fn subset(&self, i: usize) -> Vec<usize> {
        self.monomials[i].iter().enumerate().filter(|(_, &e)| e > 0).map(|(k, _)| k).collect()
    }
}

pub fn functor_basis(flavor: Flavor, n: usize, d: u64, p: u64) -> Result<MonomialBasis> {
    check_field(p)?;
    let cap = if flavor == Flavor::Ext { 1 } else { d };
    let mut monomials = Vec::new();
    let mut current = vec![0u64; n];
    fill(&mut current, 0, d, cap, &mut monomials);
    let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    Ok(MonomialBasis { flavor, n, d, p, monomials, index })
}

fn fill(current: &mut Vec<u64>, k: usize, left: u64, cap: u64, out: &mut Vec<Vec<u64>>) {
    if k == current.len() {
        if left == 0 {
            out.push(current.clone());
        }
        return;
    }
    for e in 0..=left.min(cap) {
        current[k] = e;
        fill(current, k + 1, left - e, cap, out);
    }
    current[k] = 0;
}
