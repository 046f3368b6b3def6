//! Ext in the category of strict polynomial functors between tensor words of
//! twisted Γ, Λ, S and I.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::error::{invalid, Error, Result};
use crate::families::{ExtPair, FunctorKind, TwistSide};
use crate::hopf::HopfPresentation;

/// `kind^star` precomposed with `twist` Frobenius twists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FunctorAtom {
    pub kind: FunctorKind,
    pub star: u64,
    pub twist: u64,
}

impl FunctorAtom {
    pub fn new(kind: FunctorKind, star: u64, twist: u64) -> Result<Self> {
        if kind == FunctorKind::Id && star != 1 {
            return Err(invalid("the identity functor has star-index 1"));
        }
        Ok(Self { kind, star, twist })
    }

    /// Polynomial degree `star * p^twist`.
    pub fn degree(&self, p: u64) -> Result<u64> {
        arith::mul(self.star, arith::pow(p, self.twist)?)
    }

    pub fn dual(self) -> Self {
        Self { kind: self.kind.dual(), ..self }
    }
}

/// Tensor product of atoms, in order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FunctorWord {
    pub factors: Vec<FunctorAtom>,
}

impl FunctorWord {
    pub fn new(factors: Vec<FunctorAtom>) -> Self {
        Self { factors }
    }

    pub fn degree(&self, p: u64) -> Result<u64> {
        self.factors.iter().try_fold(0, |acc, a| arith::add(acc, a.degree(p)?))
    }

    pub fn dual(&self) -> Self {
        Self { factors: self.factors.iter().rev().map(|a| a.dual()).collect() }
    }
}

impl From<FunctorAtom> for FunctorWord {
    fn from(atom: FunctorAtom) -> Self {
        Self { factors: vec![atom] }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Category {
    P,
    StableP,
    F,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtQuery {
    pub category: Category,
    pub p: u64,
    /// Field exponent `N` with `q = p^N`; only meaningful for `F`.
    pub n_exp: Option<u64>,
    pub source: FunctorWord,
    pub target: FunctorWord,
}

/// Presentation of `Ext_P(src^*, tgt^*)` for the twists of `src` and `tgt`.
/// Star-indices are ignored: the presentation covers the whole family.
pub fn ext_pair_p(p: u64, src: &FunctorAtom, tgt: &FunctorAtom) -> Result<HopfPresentation> {
    arith::require_prime(p)?;
    let pair = ExtPair::from_kinds(src.kind, tgt.kind)?;
    let (lo, hi) = (src.twist.min(tgt.twist), src.twist.max(tgt.twist));
    let side = if src.twist >= tgt.twist { TwistSide::Source } else { TwistSide::Target };
    let count = arith::pow(p, lo)?;
    let mut gens = Vec::with_capacity(count as usize);
    for m in 0..count {
        gens.push(pair.generator(side, p, hi - lo, m, 0)?);
    }
    HopfPresentation::new(pair.algebra(), gens)
}

/// `dim Ext^s_P(src, tgt)` for `s = 0..=max_coh`.
pub fn ext_atom_series(p: u64, src: &FunctorAtom, tgt: &FunctorAtom, max_coh: u64) -> Result<Vec<u64>> {
    ext_word_series(p, &FunctorWord::from(*src), &FunctorWord::from(*tgt), max_coh)
}

/// Fails with `UnsupportedPair` if some source factor and target factor of
/// nonzero degree have no closed form, even when the degrees rule out every
/// nonzero Ext group.
pub fn check_word_pair(src: &FunctorWord, tgt: &FunctorWord) -> Result<()> {
    for a in src.factors.iter().filter(|a| a.star > 0) {
        for b in tgt.factors.iter().filter(|b| b.star > 0) {
            ExtPair::from_kinds(a.kind, b.kind)?;
        }
    }
    Ok(())
}

/// `dim Ext^s_P(src, tgt)` between tensor words.
pub fn ext_word_p(p: u64, src: &FunctorWord, tgt: &FunctorWord, s: u64) -> Result<u64> {
    Ok(ext_word_series(p, src, tgt, s)?[s as usize])
}

/// `dim Ext^s_P(src, tgt)` for `s = 0..=max_coh`, summing over all ways of
/// splitting each source factor across the target factors.
pub fn ext_word_series(p: u64, src: &FunctorWord, tgt: &FunctorWord, max_coh: u64) -> Result<Vec<u64>> {
    arith::require_prime(p)?;
    let len = usize::try_from(max_coh).ok().and_then(|x| x.checked_add(1)).ok_or(Error::Overflow)?;
    let rows: Vec<FunctorAtom> = src.factors.iter().copied().filter(|a| a.star > 0).collect();
    let cols: Vec<FunctorAtom> = tgt.factors.iter().copied().filter(|a| a.star > 0).collect();
    let mut out = vec![0u64; len];
    if src.degree(p)? != tgt.degree(p)? {
        return Ok(out);
    }
    if rows.is_empty() && cols.is_empty() {
        out[0] = 1;
        return Ok(out);
    }
    let mut search = Kunneth {
        p,
        rows: &rows,
        cols: &cols,
        len,
        cells: Vec::new(),
        col_sums: vec![0; cols.len()],
        cache: BTreeMap::new(),
        total: out,
    };
    search.row(0)?;
    Ok(search.total)
}

struct Kunneth<'a> {
    p: u64,
    rows: &'a [FunctorAtom],
    cols: &'a [FunctorAtom],
    len: usize,
    /// `(row, col, source index, target index)` of every nonzero cell chosen so far
    cells: Vec<(usize, usize, u64, u64)>,
    col_sums: Vec<u64>,
    cache: BTreeMap<(FunctorAtom, FunctorAtom), Vec<u64>>,
    total: Vec<u64>,
}

impl Kunneth<'_> {
    fn row(&mut self, s: usize) -> Result<()> {
        if s == self.rows.len() {
            if self.col_sums.iter().zip(self.cols).all(|(&b, c)| b == c.star) {
                self.accumulate()?;
            }
            return Ok(());
        }
        self.cell(s, 0, self.rows[s].star)
    }

    fn cell(&mut self, s: usize, t: usize, left: u64) -> Result<()> {
        if t + 1 == self.cols.len() {
            return self.place(s, t, left, |me| me.row(s + 1));
        }
        for a in 0..=left {
            self.place(s, t, a, |me| me.cell(s, t + 1, left - a))?;
        }
        Ok(())
    }

    /// Puts `a` in cell `(s, t)` if the forced target index is integral and
    /// fits, then continues with `next`.
    fn place(&mut self, s: usize, t: usize, a: u64, next: impl FnOnce(&mut Self) -> Result<()>) -> Result<()> {
        if a == 0 {
            return next(self);
        }
        let deg = arith::mul(a, arith::pow(self.p, self.rows[s].twist)?)?;
        let unit = arith::pow(self.p, self.cols[t].twist)?;
        if deg % unit != 0 {
            return Ok(());
        }
        let b = deg / unit;
        if self.col_sums[t] + b > self.cols[t].star {
            return Ok(());
        }
        self.col_sums[t] += b;
        self.cells.push((s, t, a, b));
        let res = next(self);
        self.cells.pop();
        self.col_sums[t] -= b;
        res
    }

    fn accumulate(&mut self) -> Result<()> {
        let mut acc = vec![0u64; self.len];
        acc[0] = 1;
        for i in 0..self.cells.len() {
            let (s, t, a, b) = self.cells[i];
            let src = FunctorAtom { star: a, ..self.rows[s] };
            let tgt = FunctorAtom { star: b, ..self.cols[t] };
            if !self.cache.contains_key(&(src, tgt)) {
                let pres = ext_pair_p(self.p, &src, &tgt)?;
                let series = pres.coefficient_series(a, b, self.len as u64 - 1)?;
                self.cache.insert((src, tgt), series);
            }
            acc = truncated_product(&acc, &self.cache[&(src, tgt)])?;
        }
        for (slot, x) in self.total.iter_mut().zip(acc) {
            *slot = arith::add(*slot, x)?;
        }
        Ok(())
    }
}

/// Product of two power series truncated to the length of `a`.
pub(crate) fn truncated_product(a: &[u64], b: &[u64]) -> Result<Vec<u64>> {
    let mut out = vec![0u64; a.len()];
    for (i, &x) in a.iter().enumerate().filter(|(_, &x)| x != 0) {
        for (j, &y) in b.iter().enumerate().take(a.len() - i) {
            out[i + j] = arith::add(out[i + j], arith::mul(x, y)?)?;
        }
    }
    Ok(out)
}

/// Swaps source and target, reverses each word and dualizes every atom.
pub fn dualize(q: &ExtQuery) -> ExtQuery {
    ExtQuery { source: q.target.dual(), target: q.source.dual(), ..q.clone() }
}

/// Whether `S^n` splits off `S^m ⊗ S^(n-m)`: every base-`p` digit of `m` is at
/// most the matching digit of `n`.
pub fn splitting_criterion(p: u64, n: u64, m: u64) -> bool {
    let (dn, dm) = (arith::digits(n, p), arith::digits(m, p));
    m <= n && dm.iter().enumerate().all(|(i, &x)| x <= dn.get(i).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use FunctorKind::*;

    fn atom(kind: FunctorKind, star: u64, twist: u64) -> FunctorAtom {
        FunctorAtom::new(kind, star, twist).unwrap()
    }

    fn word(atoms: &[FunctorAtom]) -> FunctorWord {
        FunctorWord::new(atoms.to_vec())
    }

    #[test]
    fn word_pair_check_ignores_degrees() {
        let s1 = word(&[atom(Sym, 1, 0)]);
        let g = word(&[atom(Gamma, 2, 1)]);
        assert_eq!(check_word_pair(&s1, &g), Err(Error::UnsupportedPair { source: Sym, target: Gamma }));
        assert!(check_word_pair(&g, &word(&[atom(Sym, 2, 1), atom(Gamma, 0, 0)])).is_ok());
    }

    #[test]
    fn gamma_to_sym_twisted() {
        let s = ext_atom_series(2, &atom(Gamma, 2, 1), &atom(Sym, 2, 1), 8).unwrap();
        assert_eq!(s, [1, 0, 1, 0, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn gamma_to_twisted_lambda() {
        let pres = ext_pair_p(2, &atom(Gamma, 2, 0), &atom(Lambda, 1, 1)).unwrap();
        assert_eq!(pres.generators.len(), 1);
        assert_eq!(pres.coefficient(crate::TriDegree::new(0, 2, 1)).unwrap(), 1);
        let s = ext_atom_series(2, &atom(Gamma, 2, 1), &atom(Lambda, 4, 0), 20).unwrap();
        assert!(s.iter().all(|&x| x == 0));
    }

    #[test]
    fn unsupported() {
        let err = ext_pair_p(2, &atom(Sym, 1, 0), &atom(Gamma, 2, 1)).unwrap_err();
        assert_eq!(err, Error::UnsupportedPair { source: Sym, target: Gamma });
    }

    #[test]
    fn word_convolution() {
        let src = word(&[atom(Gamma, 1, 1), atom(Gamma, 1, 1)]);
        let tgt = word(&[atom(Sym, 2, 1)]);
        assert_eq!(ext_word_p(2, &src, &tgt, 2).unwrap(), 2);
        assert_eq!(ext_word_series(2, &src, &tgt, 4).unwrap(), [1, 0, 2, 0, 1]);
    }

    #[test]
    fn degree_mismatch_is_zero() {
        let s = ext_word_series(3, &word(&[atom(Gamma, 2, 0)]), &word(&[atom(Sym, 1, 1)]), 5).unwrap();
        assert_eq!(s, [0; 6]);
        // an unsupported pair of unequal degree is zero rather than an error
        let s = ext_word_series(2, &word(&[atom(Sym, 1, 0)]), &word(&[atom(Gamma, 1, 1)]), 5).unwrap();
        assert_eq!(s, [0; 6]);
    }

    #[test]
    fn zero_star_atoms_drop_out() {
        let src = word(&[atom(Gamma, 0, 3), atom(Gamma, 2, 1)]);
        let tgt = word(&[atom(Sym, 2, 1), atom(Lambda, 0, 0)]);
        assert_eq!(ext_word_series(2, &src, &tgt, 8).unwrap(), [1, 0, 1, 0, 1, 0, 0, 0, 0]);
        let empty = FunctorWord::default();
        assert_eq!(ext_word_series(2, &empty, &word(&[atom(Sym, 0, 1)]), 2).unwrap(), [1, 0, 0]);
    }

    #[test]
    fn unsupported_cell_propagates() {
        let src = word(&[atom(Sym, 1, 0), atom(Gamma, 1, 0)]);
        let tgt = word(&[atom(Gamma, 2, 0)]);
        assert!(matches!(ext_word_series(3, &src, &tgt, 3), Err(Error::UnsupportedPair { .. })));
    }

    #[test]
    fn dualize_examples() {
        let q = ExtQuery {
            category: Category::P,
            p: 2,
            n_exp: None,
            source: word(&[atom(Gamma, 2, 1)]),
            target: word(&[atom(Sym, 3, 0)]),
        };
        let d = dualize(&q);
        assert_eq!(d.source, word(&[atom(Gamma, 3, 0)]));
        assert_eq!(d.target, word(&[atom(Sym, 2, 1)]));
        let q = ExtQuery { source: word(&[atom(Lambda, 2, 1)]), target: word(&[atom(Lambda, 1, 2)]), ..q };
        let d = dualize(&q);
        assert_eq!(d.source, word(&[atom(Lambda, 1, 2)]));
        assert_eq!(d.target, word(&[atom(Lambda, 2, 1)]));
    }

    #[test]
    fn splitting() {
        assert!(splitting_criterion(2, 3, 1));
        assert!(!splitting_criterion(2, 2, 1));
        assert!(splitting_criterion(5, 17, 0));
        for n in 0..40 {
            for m in 0..=n {
                let odd = !arith::binomial(n, m).unwrap().is_multiple_of(3);
                assert_eq!(splitting_criterion(3, n, m), odd, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn identity_atom_needs_star_one() {
        assert!(FunctorAtom::new(Id, 2, 0).is_err());
    }
}
