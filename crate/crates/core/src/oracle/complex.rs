use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{invalid, Error, Result};
use crate::graded::{Flavor, GradedDims};
use crate::oracle::basis::{functor_basis, MonomialBasis};
use crate::oracle::fp::FpMatrix;
use crate::oracle::genkoszul::GradedLinearMap;

/// A based vector space in a complex. Each basis vector carries an internal
/// weight that every differential preserves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub label: String,
    pub weights: Vec<u64>,
}

impl Term {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }
}

/// Cochain complex over `F_p`; `differentials[k]` maps term `k` to term
/// `k + 1`, columns indexed by the basis of term `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplexFp {
    pub p: u64,
    pub terms: Vec<Term>,
    pub differentials: Vec<FpMatrix>,
}

impl ChainComplexFp {
    /// Checks shapes, weight preservation and `d ∘ d = 0`.
    pub fn new(p: u64, terms: Vec<Term>, differentials: Vec<FpMatrix>) -> Result<Self> {
        if differentials.len() + 1 != terms.len().max(1) {
            return Err(invalid("need one differential between each pair of adjacent terms"));
        }
        for (k, d) in differentials.iter().enumerate() {
            let (src, tgt) = (&terms[k], &terms[k + 1]);
            if d.p() != p || d.cols() != src.dim() || d.rows() != tgt.dim() {
                return Err(invalid(alloc::format!("differential {k} has the wrong shape")));
            }
            for r in 0..d.rows() {
                for c in 0..d.cols() {
                    if d.get(r, c) != 0 && tgt.weights[r] != src.weights[c] {
                        return Err(invalid(alloc::format!("differential {k} does not preserve weight")));
                    }
                }
            }
        }
        for k in 1..differentials.len() {
            if !differentials[k].mul(&differentials[k - 1])?.is_zero() {
                return Err(Error::NotAComplex { position: k - 1 });
            }
        }
        Ok(Self { p, terms, differentials })
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Term::dim).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating(self.dims().into_iter().map(|d| d as u64))
    }
}

pub fn alternating(values: impl IntoIterator<Item = u64>) -> i64 {
    values.into_iter().enumerate().map(|(i, x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum()
}

/// `dim H^k` for every term `k`, by rank-nullity.
pub fn homology_dims(c: &ChainComplexFp) -> Vec<u64> {
    let ranks: Vec<usize> = c.differentials.iter().map(FpMatrix::rank).collect();
    (0..c.terms.len())
        .map(|k| {
            let out = ranks.get(k).copied().unwrap_or(0);
            let inc = if k > 0 { ranks[k - 1] } else { 0 };
            (c.terms[k].dim() - out - inc) as u64
        })
        .collect()
}

/// Homology of every term split by internal weight.
pub fn graded_homology(c: &ChainComplexFp) -> Result<Vec<GradedDims>> {
    let by_weight: Vec<BTreeMap<u64, Vec<usize>>> = c
        .terms
        .iter()
        .map(|t| {
            let mut map: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
            for (i, &w) in t.weights.iter().enumerate() {
                map.entry(w).or_default().push(i);
            }
            map
        })
        .collect();
    let empty = Vec::new();
    let mut out = Vec::with_capacity(c.terms.len());
    for k in 0..c.terms.len() {
        let mut dims = GradedDims::new();
        for (&w, idx) in &by_weight[k] {
            let out_rank = match c.differentials.get(k) {
                Some(d) => d.submatrix(by_weight[k + 1].get(&w).unwrap_or(&empty), idx).rank(),
                None => 0,
            };
            let in_rank = if k > 0 {
                let prev = by_weight[k - 1].get(&w).unwrap_or(&empty);
                c.differentials[k - 1].submatrix(idx, prev).rank()
            } else {
                0
            };
            dims.add_at(w, (idx.len() - out_rank - in_rank) as u64)?;
        }
        out.push(dims);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexSpec {
    /// `Λ^D → Λ^(D-1) ⊗ S^1 → … → S^D` on `F_p^n`.
    Koszul { p: u64, n: usize, total: u64 },
    /// `Γ^D → Γ^(D-1) ⊗ Λ^1 → … → Λ^D` on `F_p^n`.
    DualKoszul { p: u64, n: usize, total: u64 },
    /// `S^D → S^(D-1) ⊗ Λ^1 → … → Λ^D` on `F_p^n`.
    DeRham { p: u64, n: usize, total: u64 },
    /// `Λ^d(W) → S^1(V) ⊗ Λ^(d-1)(W) → … → S^d(V)` built from `f: W → V`.
    GenKoszul { map: GradedLinearMap, d: u64 },
}

pub fn build_complex(spec: &ComplexSpec) -> Result<ChainComplexFp> {
    match spec {
        ComplexSpec::Koszul { p, n, total } => koszul(*p, *n, *total),
        ComplexSpec::DualKoszul { p, n, total } => dual_koszul(*p, *n, *total),
        ComplexSpec::DeRham { p, n, total } => de_rham(*p, *n, *total),
        ComplexSpec::GenKoszul { map, d } => gen_koszul(map, *d),
    }
}

/// Sign of moving a new factor `u` past the factors of `set` below it, or
/// `None` when `u` is already present.
pub(crate) fn wedge_in(set: &[u64], u: usize) -> Option<(Vec<u64>, i64)> {
    if set[u] > 0 {
        return None;
    }
    let below = set[..u].iter().filter(|&&e| e > 0).count();
    let mut out = set.to_vec();
    out[u] = 1;
    Some((out, if below % 2 == 0 { 1 } else { -1 }))
}

pub(crate) fn plus(v: &[u64], u: usize) -> Vec<u64> {
    let mut out = v.to_vec();
    out[u] += 1;
    out
}

pub(crate) fn minus(v: &[u64], u: usize) -> Vec<u64> {
    let mut out = v.to_vec();
    out[u] -= 1;
    out
}

fn flavor_letter(f: Flavor) -> char {
    match f {
        Flavor::Sym => 'S',
        Flavor::Ext => 'L',
        Flavor::Gamma => 'G',
    }
}

/// Terms `A^(D-i) ⊗ B^i` for `i = 0..=D`, all of weight zero.
fn classical_terms(p: u64, n: usize, total: u64, a: Flavor, b: Flavor) -> Result<Vec<(MonomialBasis, MonomialBasis, Term)>> {
    (0..=total)
        .map(|i| {
            let left = functor_basis(a, n, total - i, p)?;
            let right = functor_basis(b, n, i, p)?;
            let label = alloc::format!("{}^{} x {}^{}", flavor_letter(a), total - i, flavor_letter(b), i);
            let term = Term { label, weights: alloc::vec![0; left.len() * right.len()] };
            Ok((left, right, term))
        })
        .collect()
}

/// Assembles a complex from a rule giving the image of each basis tensor
/// `left[x] ⊗ right[y]` as signed coefficients on the next term's tensors.
fn classical<F>(p: u64, n: usize, total: u64, a: Flavor, b: Flavor, image: F) -> Result<ChainComplexFp>
where
    F: Fn(&[u64], &[u64]) -> Vec<(Vec<u64>, Vec<u64>, i64)>,
{
    let terms = classical_terms(p, n, total, a, b)?;
    let mut diffs = Vec::new();
    for k in 0..terms.len().saturating_sub(1) {
        let (l0, r0, t0) = &terms[k];
        let (l1, r1, t1) = &terms[k + 1];
        let mut d = FpMatrix::zeros(p, t1.dim(), t0.dim())?;
        for (x, lm) in l0.monomials.iter().enumerate() {
            for (y, rm) in r0.monomials.iter().enumerate() {
                for (lt, rt, coeff) in image(lm, rm) {
                    let row = l1.index_of(&lt).expect("left image in basis") * r1.len()
                        + r1.index_of(&rt).expect("right image in basis");
                    d.add_signed(row, x * r0.len() + y, coeff);
                }
            }
        }
        diffs.push(d);
    }
    ChainComplexFp::new(p, terms.into_iter().map(|(_, _, t)| t).collect(), diffs)
}

fn koszul(p: u64, n: usize, total: u64) -> Result<ChainComplexFp> {
    classical(p, n, total, Flavor::Ext, Flavor::Sym, |omega, m| {
        let mut out = Vec::new();
        let mut above = omega.iter().filter(|&&e| e > 0).count();
        for u in 0..omega.len() {
            if omega[u] > 0 {
                above -= 1;
                let sign = if above % 2 == 0 { 1 } else { -1 };
                out.push((minus(omega, u), plus(m, u), sign));
            }
        }
        out
    })
}

fn dual_koszul(p: u64, n: usize, total: u64) -> Result<ChainComplexFp> {
    classical(p, n, total, Flavor::Gamma, Flavor::Ext, |gamma, omega| {
        let mut out = Vec::new();
        for u in 0..gamma.len() {
            if gamma[u] > 0 {
                if let Some((w, sign)) = wedge_in(omega, u) {
                    out.push((minus(gamma, u), w, sign));
                }
            }
        }
        out
    })
}

fn de_rham(p: u64, n: usize, total: u64) -> Result<ChainComplexFp> {
    classical(p, n, total, Flavor::Sym, Flavor::Ext, |m, omega| {
        let mut out = Vec::new();
        for u in 0..m.len() {
            if m[u] > 0 {
                if let Some((w, sign)) = wedge_in(omega, u) {
                    out.push((minus(m, u), w, sign * m[u] as i64));
                }
            }
        }
        out
    })
}

fn gen_koszul(f: &GradedLinearMap, d: u64) -> Result<ChainComplexFp> {
    let p = f.p();
    let (nv, nw) = (f.target.len(), f.source.len());
    let w_weights = f.shifted_source_degrees()?;
    // term k is S^k(V) ⊗ Λ^(d-k)(W)
    let mut bases = Vec::new();
    let mut terms = Vec::new();
    for k in 0..=d {
        let s = functor_basis(Flavor::Sym, nv, k, p)?;
        let l = functor_basis(Flavor::Ext, nw, d - k, p)?;
        let mut weights = Vec::with_capacity(s.len() * l.len());
        for sm in &s.monomials {
            let sw: u64 = sm.iter().zip(&f.target).map(|(e, g)| e * g).sum();
            for lm in &l.monomials {
                let lw: u64 = lm.iter().zip(&w_weights).map(|(e, g)| e * g).sum();
                weights.push(sw + lw);
            }
        }
        terms.push(Term { label: alloc::format!("S^{k}(V) x L^{}(W)", d - k), weights });
        bases.push((s, l));
    }
    let mut diffs = Vec::new();
    for k in 0..d as usize {
        let ((s0, l0), (s1, l1)) = (&bases[k], &bases[k + 1]);
        let mut m = FpMatrix::zeros(p, terms[k + 1].dim(), terms[k].dim())?;
        for (x, sm) in s0.monomials.iter().enumerate() {
            for (y, lm) in l0.monomials.iter().enumerate() {
                let col = x * l0.len() + y;
                let mut below = 0;
                for w in 0..nw {
                    if lm[w] == 0 {
                        continue;
                    }
                    let sign = if below % 2 == 0 { 1 } else { -1 };
                    below += 1;
                    let rest = l1.index_of(&minus(lm, w)).expect("wedge in basis");
                    for v in 0..nv {
                        let coeff = f.matrix.get(v, w);
                        if coeff != 0 {
                            let prod = s1.index_of(&plus(sm, v)).expect("monomial in basis");
                            m.add_signed(prod * l1.len() + rest, col, sign * coeff as i64);
                        }
                    }
                }
            }
        }
        diffs.push(m);
    }
    ChainComplexFp::new(p, terms, diffs)
}
