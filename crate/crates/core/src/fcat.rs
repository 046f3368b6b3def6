//! Ext in the category of all functors on vector spaces over `F_q`,
//! `q = p^N`, assembled from stable Ext.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::error::{invalid, Error, Result};
use crate::families::{ExtPair, FunctorKind, TwistSide};
use crate::hopf::{GeneratorSpec, HopfPresentation};
use crate::pcalc::truncated_product;
use crate::stable::{ext_pair_stable, StableFamily};

/// One way of distributing `(j, l)` over the stable pieces. `js[s]` feeds the
/// piece with the source twisted `sN + h` times, `ls[t - 1]` the piece with
/// the target twisted `tN - h` times. Trailing zeros are trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrSequence {
    pub js: Vec<u64>,
    pub ls: Vec<u64>,
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn check_twist(n_exp: u64, h: u64) -> Result<()> {
    if n_exp == 0 {
        return Err(invalid("field exponent N must be at least 1"));
    }
    if h >= n_exp {
        return Err(invalid(alloc::format!("twist h = {h} must be below N = {n_exp}")));
    }
    Ok(())
}

/// Least `n >= 1` with `p^((n+1)N - h) > j` and `p^(nN + h) > l`; sequences
/// of that length already contain every solution.
pub fn pr_length(p: u64, n_exp: u64, h: u64, j: u64, l: u64) -> Result<u64> {
    check_twist(n_exp, h)?;
    let mut n = 1;
    loop {
        let a = pow_capped(p, (n + 1) * n_exp - h);
        let b = pow_capped(p, n * n_exp + h);
        if a > j && b > l {
            return Ok(n);
        }
        n += 1;
    }
}

/// `p^e`, saturating instead of overflowing. Only compared against bounds.
fn pow_capped(p: u64, e: u64) -> u64 {
    u32::try_from(e).ok().and_then(|e| p.checked_pow(e)).unwrap_or(u64::MAX)
}

pub fn pr_enumerate(p: u64, n_exp: u64, h: u64, j: u64, l: u64) -> Result<Vec<PrSequence>> {
    arith::require_prime(p)?;
    let n = pr_length(p, n_exp, h, j, l)?;
    pr_enumerate_with_length(p, n_exp, h, j, l, n)
}

/// Exhaustive solutions with `n` source pieces and `n` target pieces.
pub fn pr_enumerate_with_length(p: u64, n_exp: u64, h: u64, j: u64, l: u64, n: u64) -> Result<Vec<PrSequence>> {
    check_twist(n_exp, h)?;
    // weights (contribution to j, contribution to l) of each variable
    let mut weights = Vec::new();
    for s in 0..n {
        weights.push((1, pow_capped(p, s * n_exp + h)));
    }
    for t in 1..=n {
        weights.push((pow_capped(p, t * n_exp - h), 1));
    }
    let mut out = Vec::new();
    let mut current = vec![0u64; weights.len()];
    search(&weights, 0, j, l, &mut current, &mut out);
    let n = n as usize;
    let mut seqs: Vec<PrSequence> = out
        .into_iter()
        .map(|v| PrSequence { js: trim(v[..n].to_vec()), ls: trim(v[n..].to_vec()) })
        .collect();
    seqs.sort();
    Ok(seqs)
}

fn search(weights: &[(u64, u64)], k: usize, rj: u64, rl: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if k == weights.len() {
        if rj == 0 && rl == 0 {
            out.push(current.clone());
        }
        return;
    }
    let (wj, wl) = weights[k];
    let most = (rj / wj).min(rl / wl);
    for x in 0..=most {
        current[k] = x;
        search(weights, k + 1, rj - x * wj, rl - x * wl, current, out);
    }
    current[k] = 0;
}

/// A stable piece: relative twist and which side carries it.
type PieceKey = (u64, bool);

struct Pieces {
    p: u64,
    pair: ExtPair,
    max_coh: u64,
    cache: BTreeMap<PieceKey, HopfPresentation>,
}

impl Pieces {
    fn series(&mut self, twist: u64, side: TwistSide, src: u64, tgt: u64) -> Result<Vec<u64>> {
        let key = (twist, side == TwistSide::Source);
        if !self.cache.contains_key(&key) {
            let fam = StableFamily { p: self.p, pair: self.pair, h: twist, direction: side };
            self.cache.insert(key, ext_pair_stable(&fam, self.max_coh)?);
        }
        self.cache[&key].coefficient_series(src, tgt, self.max_coh)
    }
}

fn resolve_kinds(src: FunctorKind, j: u64, tgt: FunctorKind, l: u64) -> Result<ExtPair> {
    if (src == FunctorKind::Id && j != 1) || (tgt == FunctorKind::Id && l != 1) {
        return Err(invalid("the identity functor has star-index 1"));
    }
    ExtPair::from_kinds(src, tgt)
}

/// `dim Ext^c_F(A^{j(h)}, B^l)` over `F_{p^N}` for `c = 0..=max_coh`.
#[allow(clippy::too_many_arguments)]
pub fn ext_f_series(
    p: u64,
    n_exp: u64,
    h: u64,
    src: FunctorKind,
    j: u64,
    tgt: FunctorKind,
    l: u64,
    max_coh: u64,
) -> Result<Vec<u64>> {
    arith::require_prime(p)?;
    check_twist(n_exp, h)?;
    let pair = resolve_kinds(src, j, tgt, l)?;
    let len = usize::try_from(max_coh).ok().and_then(|x| x.checked_add(1)).ok_or(Error::Overflow)?;
    let mut pieces = Pieces { p, pair, max_coh, cache: BTreeMap::new() };
    let mut total = vec![0u64; len];
    for seq in pr_enumerate(p, n_exp, h, j, l)? {
        let mut acc = vec![0u64; len];
        acc[0] = 1;
        for (s, &js) in seq.js.iter().enumerate().filter(|(_, &x)| x > 0) {
            let twist = s as u64 * n_exp + h;
            let big = arith::pow(p, twist)?;
            let piece = pieces.series(twist, TwistSide::Source, js, arith::mul(js, big)?)?;
            acc = truncated_product(&acc, &piece)?;
        }
        for (i, &lt) in seq.ls.iter().enumerate().filter(|(_, &x)| x > 0) {
            let twist = (i as u64 + 1) * n_exp - h;
            let big = arith::pow(p, twist)?;
            let piece = pieces.series(twist, TwistSide::Target, arith::mul(lt, big)?, lt)?;
            acc = truncated_product(&acc, &piece)?;
        }
        for (slot, x) in total.iter_mut().zip(acc) {
            *slot = arith::add(*slot, x)?;
        }
    }
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
pub fn ext_f(p: u64, n_exp: u64, h: u64, src: FunctorKind, j: u64, tgt: FunctorKind, l: u64, s: u64) -> Result<u64> {
    Ok(ext_f_series(p, n_exp, h, src, j, tgt, l, s)?[s as usize])
}

/// Generators of the whole algebra `Ext_F(A^{*(h)}, B^*)` with cohomological
/// degree at most `max_coh` and both star-indices at most `max_index`.
pub fn ext_f_family(
    p: u64,
    n_exp: u64,
    h: u64,
    src: FunctorKind,
    tgt: FunctorKind,
    max_coh: u64,
    max_index: u64,
) -> Result<Vec<GeneratorSpec>> {
    arith::require_prime(p)?;
    check_twist(n_exp, h)?;
    let pair = ExtPair::from_kinds(src, tgt)?;
    if !matches!(
        pair,
        ExtPair::GammaSym | ExtPair::GammaLambda | ExtPair::GammaGamma | ExtPair::LambdaLambda
    ) {
        return Err(Error::UnsupportedPair { source: src, target: tgt });
    }
    let mut out = Vec::new();
    for s in 0.. {
        let twist = s * n_exp + h;
        if pow_capped(p, twist) > max_index {
            break;
        }
        out.extend(pair.generators_up_to(TwistSide::Source, p, twist, max_coh, None, 0)?);
    }
    for t in 1.. {
        let twist = t * n_exp - h;
        if pow_capped(p, twist) > max_index {
            break;
        }
        out.extend(pair.generators_up_to(TwistSide::Target, p, twist, max_coh, None, h)?);
    }
    Ok(out)
}

pub fn ext_f_presentation(
    p: u64,
    n_exp: u64,
    h: u64,
    src: FunctorKind,
    tgt: FunctorKind,
    max_coh: u64,
    max_index: u64,
) -> Result<HopfPresentation> {
    let gens = ext_f_family(p, n_exp, h, src, tgt, max_coh, max_index)?;
    HopfPresentation::new(ExtPair::from_kinds(src, tgt)?.algebra(), gens)
}

/// `false` exactly when the degrees differ mod `q - 1`, which forces every
/// Ext group between functors of those degrees to vanish.
pub fn congruence_gate(q: u64, deg_src: u64, deg_tgt: u64) -> bool {
    if q <= 2 {
        return true;
    }
    deg_src % (q - 1) == deg_tgt % (q - 1)
}

/// Number of `k`-dimensional subspaces of `F_q^n`.
pub fn gauss_binom(n: u64, k: u64, q: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let q = u128::from(q);
    let mut acc: u128 = 1;
    for i in 0..k {
        let e = u32::try_from(n - i).map_err(|_| Error::Overflow)?;
        let num = q.checked_pow(e).ok_or(Error::Overflow)? - 1;
        let den = q.pow(i as u32 + 1) - 1;
        // each partial product is itself a Gaussian binomial, so this divides
        acc = acc.checked_mul(num).ok_or(Error::Overflow)? / den;
    }
    u64::try_from(acc).map_err(|_| Error::Overflow)
}

/// Gaussian binomials `[n choose k]_q` for `n <= max_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceCountTable {
    pub q: u64,
    pub entries: Vec<Vec<u64>>,
}

impl SubspaceCountTable {
    pub fn new(q: u64, max_n: u64) -> Result<Self> {
        let mut entries = Vec::new();
        for n in 0..=max_n {
            entries.push((0..=n).map(|k| gauss_binom(n, k, q)).collect::<Result<Vec<_>>>()?);
        }
        Ok(Self { q, entries })
    }

    pub fn get(&self, n: u64, k: u64) -> u64 {
        self.entries.get(n as usize).and_then(|row| row.get(k as usize)).copied().unwrap_or(0)
    }
}

/// `dim (aB)(F_q^n)`: the sum over subspaces `W` of `dim B(F_q^n / W)`.
/// `dims_of_b[m]` is `dim B(F_q^m)`.
pub fn a_dim(dims_of_b: &[u64], q: u64, n: u64) -> Result<u64> {
    if dims_of_b.len() as u64 <= n {
        return Err(invalid(alloc::format!("need dim B(F_q^m) for m = 0..={n}")));
    }
    let mut total = 0u64;
    for k in 0..=n {
        let term = arith::mul(gauss_binom(n, k, q)?, dims_of_b[(n - k) as usize])?;
        total = arith::add(total, term)?;
    }
    Ok(total)
}
