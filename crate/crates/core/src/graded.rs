//! Graded dimension tables and the power functors applied to them.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::error::Result;

/// Finitely supported map from degree to dimension. Zero dimensions are never
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedDims {
    entries: BTreeMap<u64, u64>,
}

/// Which power functor to apply to a graded space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Sym,
    Ext,
    Gamma,
}

impl GradedDims {
    pub fn new() -> Self {
        Self::default()
    }

    /// One dimension in degree zero.
    pub fn unit() -> Self {
        Self::from_pairs([(0, 1)]).expect("unit cannot overflow")
    }

    /// Builds a table from `(degree, dim)` pairs. Repeated degrees add up.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u64)>) -> Result<Self> {
        let mut out = Self::new();
        for (deg, dim) in pairs {
            out.add_at(deg, dim)?;
        }
        Ok(out)
    }

    /// One slot in each listed degree.
    pub fn from_slots(degrees: impl IntoIterator<Item = u64>) -> Result<Self> {
        Self::from_pairs(degrees.into_iter().map(|d| (d, 1)))
    }

    pub fn add_at(&mut self, deg: u64, dim: u64) -> Result<()> {
        if dim == 0 {
            return Ok(());
        }
        let slot = self.entries.entry(deg).or_insert(0);
        *slot = arith::add(*slot, dim)?;
        Ok(())
    }

    pub fn get(&self, deg: u64) -> u64 {
        self.entries.get(&deg).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.entries.iter().map(|(&d, &n)| (d, n))
    }

    /// Degrees listed once per slot, ascending.
    pub fn slots(&self) -> Vec<u64> {
        self.iter()
            .flat_map(|(d, n)| core::iter::repeat_n(d, n as usize))
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> Result<u64> {
        self.entries.values().try_fold(0, |acc, &n| arith::add(acc, n))
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.entries.keys().next_back().copied()
    }

    pub fn shift_up(&self, by: u64) -> Result<Self> {
        let mut out = Self::new();
        for (d, n) in self.iter() {
            out.add_at(arith::add(d, by)?, n)?;
        }
        Ok(out)
    }

    /// Keeps only the slots selected by `keep(degree)`.
    pub fn filter(&self, mut keep: impl FnMut(u64) -> bool) -> Self {
        Self {
            entries: self.entries.iter().filter(|(d, _)| keep(**d)).map(|(&d, &n)| (d, n)).collect(),
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (d, n) in other.iter() {
            out.add_at(d, n)?;
        }
        Ok(out)
    }

    pub fn convolve(&self, other: &Self) -> Result<Self> {
        graded_convolve(self, other)
    }

    pub fn power(&self, d: u64, flavor: Flavor) -> Result<Self> {
        power_dims(self, d, flavor)
    }
}

/// Graded dimension of a tensor product.
pub fn graded_convolve(a: &GradedDims, b: &GradedDims) -> Result<GradedDims> {
    let mut out = GradedDims::new();
    for (da, na) in a.iter() {
        for (db, nb) in b.iter() {
            out.add_at(arith::add(da, db)?, arith::mul(na, nb)?)?;
        }
    }
    Ok(out)
}

/// Graded dimension of `S^d`, `Λ^d` or `Γ^d` of a graded space. Symmetric and
/// divided powers count multisets of slots, exterior powers count subsets.
pub fn power_dims(space: &GradedDims, d: u64, flavor: Flavor) -> Result<GradedDims> {
    let d = usize::try_from(d).map_err(|_| crate::Error::Overflow)?;
    // table[k] = graded dimension of the k-th power of the slots seen so far
    let mut table = vec![GradedDims::new(); d + 1];
    table[0] = GradedDims::unit();
    for slot in space.slots() {
        let ks: Vec<usize> = match flavor {
            Flavor::Sym | Flavor::Gamma => (1..=d).collect(),
            Flavor::Ext => (1..=d).rev().collect(),
        };
        for k in ks {
            let shifted = table[k - 1].shift_up(slot)?;
            table[k] = table[k].sum(&shifted)?;
        }
    }
    Ok(table.swap_remove(d))
}
