use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{invalid, Result};
use crate::graded::{graded_convolve, power_dims, Flavor, GradedDims};
use crate::oracle::complex::{build_complex, graded_homology, ComplexSpec};
use crate::oracle::fp::FpMatrix;

/// Degree-`shift` linear map `f: W → V` between graded spaces with explicit
/// basis slots. `source[c]` is the degree of the `c`-th slot of `W`,
/// `target[r]` that of the `r`-th slot of `V`; `matrix` has one row per
/// target slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedLinearMap {
    pub source: Vec<u64>,
    pub target: Vec<u64>,
    pub shift: i64,
    pub matrix: FpMatrix,
}

impl GradedLinearMap {
    pub fn new(source: Vec<u64>, target: Vec<u64>, shift: i64, matrix: FpMatrix) -> Result<Self> {
        if matrix.rows() != target.len() || matrix.cols() != source.len() {
            return Err(invalid("matrix shape must be (target slots) x (source slots)"));
        }
        let f = Self { source, target, shift, matrix };
        let shifted = f.shifted_source_degrees()?;
        for (r, &tgt) in f.target.iter().enumerate() {
            for (c, &deg) in shifted.iter().enumerate() {
                if f.matrix.get(r, c) != 0 && tgt != deg {
                    return Err(invalid(alloc::format!(
                        "entry ({r}, {c}) maps degree {} to degree {tgt}",
                        f.source[c]
                    )));
                }
            }
        }
        Ok(f)
    }

    pub fn p(&self) -> u64 {
        self.matrix.p()
    }

    /// Source slot degrees moved by `shift`, so that `f` preserves degree.
    pub fn shifted_source_degrees(&self) -> Result<Vec<u64>> {
        self.source
            .iter()
            .map(|&d| {
                u64::try_from(d as i64 + self.shift)
                    .map_err(|_| invalid(alloc::format!("slot of degree {d} shifted below zero")))
            })
            .collect()
    }

    pub fn source_dims(&self) -> Result<GradedDims> {
        GradedDims::from_slots(self.source.iter().copied())
    }

    pub fn target_dims(&self) -> Result<GradedDims> {
        GradedDims::from_slots(self.target.iter().copied())
    }

    fn slots_of(degrees: &[u64], deg: u64) -> Vec<usize> {
        degrees.iter().enumerate().filter(|(_, &d)| d == deg).map(|(i, _)| i).collect()
    }

    /// Rank of `f` in each shifted degree.
    fn ranks(&self) -> Result<Vec<(u64, u64)>> {
        let shifted = self.shifted_source_degrees()?;
        let degrees: BTreeSet<u64> = shifted.iter().copied().collect();
        Ok(degrees
            .into_iter()
            .map(|deg| {
                let cols = Self::slots_of(&shifted, deg);
                let rows = Self::slots_of(&self.target, deg);
                (deg, self.matrix.submatrix(&rows, &cols).rank() as u64)
            })
            .collect())
    }

    /// Kernel dimensions, in shifted degrees.
    pub fn kernel_dims(&self) -> Result<GradedDims> {
        let src = GradedDims::from_slots(self.shifted_source_degrees()?)?;
        let mut out = GradedDims::new();
        for (deg, rank) in self.ranks()? {
            out.add_at(deg, src.get(deg) - rank)?;
        }
        Ok(out)
    }

    pub fn cokernel_dims(&self) -> Result<GradedDims> {
        let tgt = self.target_dims()?;
        let ranks = self.ranks()?;
        let mut out = GradedDims::new();
        for (deg, n) in tgt.iter() {
            let rank = ranks.iter().find(|(d, _)| *d == deg).map_or(0, |&(_, r)| r);
            out.add_at(deg, n - rank)?;
        }
        Ok(out)
    }
}

/// Expected homology of the generalized Koszul complex of total degree `d`:
/// entry `k` is `S^k(coker f) ⊗ Λ^(d-k)(ker f)`.
pub fn koszul_homology_formula(f: &GradedLinearMap, d: u64) -> Result<Vec<GradedDims>> {
    let (ker, coker) = (f.kernel_dims()?, f.cokernel_dims()?);
    (0..=d)
        .map(|k| graded_convolve(&power_dims(&coker, k, Flavor::Sym)?, &power_dims(&ker, d - k, Flavor::Ext)?))
        .collect()
}

/// Compares the rank-computed homology of the generalized Koszul complex with
/// `S^*(coker f) ⊗ Λ^*(ker f)` in every total degree up to `d`, term by term
/// and weight by weight.
pub fn genkoszul_check(f: &GradedLinearMap, d: u64) -> Result<bool> {
    for total in 0..=d {
        let c = build_complex(&ComplexSpec::GenKoszul { map: f.clone(), d: total })?;
        if graded_homology(&c)? != koszul_homology_formula(f, total)? {
            return Ok(false);
        }
    }
    Ok(true)
}
