use std::collections::BTreeMap;

use extcalc_core::basic_ext::{basic_space, BasicSpace, BasicSpaceQuery};
use extcalc_core::pcalc::{
    dualize, ext_atom_series, ext_pair_p, ext_word_series, Category, ExtQuery, FunctorAtom, FunctorWord,
};
use extcalc_core::{power_dims, AlgebraFamily, ExtPair, Flavor, FunctorKind, GradedDims};
use proptest::prelude::*;
use FunctorKind::*;

fn atom(kind: FunctorKind, star: u64, twist: u64) -> FunctorAtom {
    FunctorAtom::new(kind, star, twist).unwrap()
}

fn as_table(series: &[u64]) -> GradedDims {
    GradedDims::from_pairs(series.iter().enumerate().map(|(c, &x)| (c as u64, x))).unwrap()
}

fn grid() -> impl Iterator<Item = (u64, u64, u64, u64)> {
    [2u64, 3].into_iter().flat_map(|p| {
        (0..=3u64).flat_map(move |r| (0..=r).flat_map(move |j| (1..=4u64).map(move |d| (p, r, j, d))))
    })
}

#[test]
fn twisted_gamma_matches_power_of_basic_space() {
    for (p, r, j, d) in grid() {
        let big = p.pow((r - j) as u32);
        for (tgt, kind, flavor) in [
            (Sym, BasicSpace::V, Flavor::Sym),
            (Lambda, BasicSpace::W, Flavor::Ext),
            (Gamma, BasicSpace::Vtilde, Flavor::Gamma),
        ] {
            let basic = basic_space(&BasicSpaceQuery::new(kind, p, r, j)).unwrap();
            let expected = power_dims(&basic, d, flavor).unwrap();
            let top = d * basic.max_degree().unwrap() + 2;
            let got = ext_atom_series(p, &atom(Gamma, d, r), &atom(tgt, d * big, j), top).unwrap();
            assert_eq!(as_table(&got), expected, "p={p} r={r} j={j} d={d} {tgt:?}");
        }
    }
}

#[test]
fn derham_and_kernel_sides_agree_degreewise() {
    let dims = |k, p, r, j| basic_space(&BasicSpaceQuery::new(k, p, r, j)).unwrap();
    for (p, r, j, d) in grid().filter(|&(_, _, j, _)| j >= 1) {
        let (v, w) = (dims(BasicSpace::V, p, r, j - 1), dims(BasicSpace::W, p, r, j - 1));
        let (c, k) = (dims(BasicSpace::C, p, r, j), dims(BasicSpace::K, p, r, j));
        let lhs_shift = p.pow((r - j + 1) as u32);
        let rhs_shift = p.pow((r - j) as u32);
        let term = |a: &GradedDims, b: &GradedDims, s: u64| {
            power_dims(a, d - s, Flavor::Sym).unwrap().convolve(&power_dims(b, s, Flavor::Ext).unwrap()).unwrap()
        };
        for n in 0..=40u64 {
            let mut lhs = 0;
            let mut rhs = 0;
            for s in 0..=d {
                if let Some(at) = n.checked_sub(s * lhs_shift) {
                    lhs += term(&v, &w, s).get(at);
                }
                if let Some(at) = n.checked_sub(s * rhs_shift) {
                    rhs += term(&c, &k, s).get(at);
                }
            }
            assert_eq!(lhs, rhs, "p={p} r={r} j={j} d={d} n={n}");
        }
    }
}

#[test]
fn koszul_resolution_has_zero_euler_characteristic() {
    for (p, r, j, d) in grid() {
        let big = p.pow((r - j) as u32);
        let total = d * big;
        let top = d * 2 * big * p.pow(j as u32);
        let src = FunctorWord::from(atom(Gamma, d, r));
        let mut chi: i64 = 0;
        for m in 0..=total {
            let tgt = FunctorWord::new(vec![atom(Sym, m, j), atom(Lambda, total - m, j)]);
            let series = ext_word_series(p, &src, &tgt, top).unwrap();
            for (s, &x) in series.iter().enumerate() {
                let sign = if (m as usize + s).is_multiple_of(2) { 1 } else { -1 };
                chi += sign * x as i64;
            }
        }
        assert_eq!(chi, 0, "p={p} r={r} j={j} d={d}");
    }
}

fn dual_pair_grid() -> Vec<(u64, FunctorAtom, FunctorAtom)> {
    let mut out = Vec::new();
    for p in [2u64, 3] {
        for pair in ExtPair::ALL {
            let (sk, tk) = pair.kinds();
            for x in 0..=3u64 {
                for y in 0..=3u64 {
                    for d in 1..=3u64 {
                        let (a, b) = if x >= y { (d, d * p.pow((x - y) as u32)) } else { (d * p.pow((y - x) as u32), d) };
                        out.push((p, atom(sk, a, x), atom(tk, b, y)));
                    }
                }
            }
        }
    }
    out
}

#[test]
fn duality_on_single_atoms() {
    for (p, src, tgt) in dual_pair_grid() {
        let q = ExtQuery { category: Category::P, p, n_exp: None, source: src.into(), target: tgt.into() };
        let d = dualize(&q);
        let a = ext_word_series(p, &q.source, &q.target, 30).unwrap();
        let b = ext_word_series(p, &d.source, &d.target, 30).unwrap();
        assert_eq!(a, b, "{q:?}");
    }
}

#[test]
fn untwisted_pairs_are_hom_only() {
    for p in [2u64, 3, 5] {
        for pair in ExtPair::ALL {
            let (sk, tk) = pair.kinds();
            for d in 0..=5u64 {
                let series = ext_atom_series(p, &atom(sk, d, 0), &atom(tk, d, 0), 20).unwrap();
                // Hom(Γ^d, Λ^d) = Λ^d(k) and its dual vanish once d >= 2
                let hom = if pair.algebra() == AlgebraFamily::Exterior && d >= 2 { 0 } else { 1 };
                assert_eq!(series[0], hom, "p={p} {pair:?} d={d}");
                assert!(series[1..].iter().all(|&x| x == 0), "p={p} {pair:?} d={d}");
            }
        }
    }
}

/// Independent Künneth sum: every pair of splitting matrices (sources by
/// rows, targets by columns), cells computed by enumerating monomials in the
/// pair's generators.
fn kunneth_oracle(p: u64, src: &[FunctorAtom], tgt: &[FunctorAtom], top: usize) -> Vec<u64> {
    fn splits(total: u64, parts: usize) -> Vec<Vec<u64>> {
        if parts == 0 {
            return if total == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in 0..=total {
            for mut rest in splits(total - first, parts - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    fn matrices(stars: &[u64], width: usize) -> Vec<Vec<Vec<u64>>> {
        let mut acc: Vec<Vec<Vec<u64>>> = vec![vec![]];
        for &k in stars {
            let mut next = Vec::new();
            for m in &acc {
                for row in splits(k, width) {
                    let mut m = m.clone();
                    m.push(row);
                    next.push(m);
                }
            }
            acc = next;
        }
        acc
    }
    fn cell(p: u64, s: FunctorAtom, t: FunctorAtom, top: usize) -> Vec<u64> {
        let mut out = vec![0u64; top + 1];
        if s.star * p.pow(s.twist as u32) != t.star * p.pow(t.twist as u32) {
            return out;
        }
        let pres = ext_pair_p(p, &s, &t).unwrap();
        let exterior = pres.family == AlgebraFamily::Exterior;
        let gens: Vec<(u64, u64, u64)> =
            pres.generators.iter().map(|g| (g.degree.coh, g.degree.src, g.degree.tgt)).collect();
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        let mut stack = vec![(0usize, 0u64, 0u64, 0u64)];
        while let Some((k, c, a, b)) = stack.pop() {
            if k == gens.len() {
                if a == s.star && b == t.star {
                    *counts.entry(c).or_default() += 1;
                }
                continue;
            }
            let (gc, ga, gb) = gens[k];
            let mut e = 0;
            while a + e * ga <= s.star && b + e * gb <= t.star && !(exterior && e > 1) {
                stack.push((k + 1, c + e * gc, a + e * ga, b + e * gb));
                e += 1;
            }
        }
        for (c, x) in counts {
            if (c as usize) <= top {
                out[c as usize] = x;
            }
        }
        out
    }
    let src: Vec<FunctorAtom> = src.iter().copied().filter(|a| a.star > 0).collect();
    let tgt: Vec<FunctorAtom> = tgt.iter().copied().filter(|a| a.star > 0).collect();
    let mut total = vec![0u64; top + 1];
    let src_stars: Vec<u64> = src.iter().map(|a| a.star).collect();
    let tgt_stars: Vec<u64> = tgt.iter().map(|a| a.star).collect();
    for a in matrices(&src_stars, tgt.len()) {
        // b is indexed [target][source]
        for b in matrices(&tgt_stars, src.len()) {
            let mut acc = vec![0u64; top + 1];
            acc[0] = 1;
            for (s, sa) in src.iter().enumerate() {
                for (t, ta) in tgt.iter().enumerate() {
                    let (x, y) = (a[s][t], b[t][s]);
                    let piece = match (x, y) {
                        (0, 0) => continue,
                        (0, _) | (_, 0) => vec![0; top + 1],
                        _ => cell(p, FunctorAtom { star: x, ..*sa }, FunctorAtom { star: y, ..*ta }, top),
                    };
                    let mut next = vec![0u64; top + 1];
                    for i in 0..=top {
                        for j in 0..=top - i {
                            next[i + j] += acc[i] * piece[j];
                        }
                    }
                    acc = next;
                }
            }
            for i in 0..=top {
                total[i] += acc[i];
            }
        }
    }
    if src.is_empty() && tgt.is_empty() {
        total[0] = 1;
    }
    total
}

fn v_p(mut n: u64, p: u64) -> u64 {
    let mut v = 0;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

prop_compose! {
    /// A source word and a target word of the same polynomial degree, with
    /// kinds drawn so that every cell is a supported pair.
    fn matched_words()(
        p in prop::sample::select(vec![2u64, 3]),
        src in prop::collection::vec((0usize..3, 1u64..3, 0u64..3), 1..3),
        cuts in prop::collection::vec(any::<u64>(), 0..2),
        tgt_picks in prop::collection::vec((0usize..3, any::<u64>()), 3),
        gamma_gamma in any::<bool>(),
    ) -> (u64, Vec<FunctorAtom>, Vec<FunctorAtom>) {
        let (src_kinds, tgt_kinds) = if gamma_gamma {
            ([Gamma, Gamma, Gamma], [Gamma, Gamma, Gamma])
        } else {
            ([Gamma, Lambda, Id], [Sym, Lambda, Id])
        };
        let src: Vec<FunctorAtom> = src
            .iter()
            .map(|&(k, star, twist)| {
                let kind = src_kinds[k];
                atom(kind, if kind == Id { 1 } else { star }, twist)
            })
            .collect();
        let total: u64 = src.iter().map(|a| a.star * p.pow(a.twist as u32)).sum();
        let mut pieces = vec![total];
        for c in cuts {
            let last = pieces.pop().unwrap();
            if last > 1 {
                let first = 1 + c % (last - 1);
                pieces.push(first);
                pieces.push(last - first);
            } else {
                pieces.push(last);
            }
        }
        let tgt = pieces
            .iter()
            .zip(&tgt_picks)
            .map(|(&deg, &(k, seed))| {
                let twist = seed % (v_p(deg, p) + 1);
                let star = deg / p.pow(twist as u32);
                let kind = if star == 1 || tgt_kinds[k] != Id { tgt_kinds[k] } else { Sym };
                atom(kind, star, twist)
            })
            .collect();
        (p, src, tgt)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn words_match_independent_kunneth((p, src, tgt) in matched_words()) {
        let got = ext_word_series(p, &FunctorWord::new(src.clone()), &FunctorWord::new(tgt.clone()), 24).unwrap();
        prop_assert_eq!(got, kunneth_oracle(p, &src, &tgt, 24));
    }

    #[test]
    fn words_survive_dualization((p, src, tgt) in matched_words()) {
        let q = ExtQuery { category: Category::P, p, n_exp: None, source: FunctorWord::new(src), target: FunctorWord::new(tgt) };
        let d = dualize(&q);
        prop_assert_eq!(dualize(&d), q.clone());
        let a = ext_word_series(p, &q.source, &q.target, 24);
        let b = ext_word_series(p, &d.source, &d.target, 24);
        prop_assert_eq!(a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn single_atom_words_match_presentation(
        p in prop::sample::select(vec![2u64, 3]),
        pair in prop::sample::select(ExtPair::ALL.to_vec()),
        x in 0u64..3,
        y in 0u64..3,
        d in 1u64..4,
    ) {
        let (sk, tk) = pair.kinds();
        let (a, b) = if x >= y { (d, d * p.pow((x - y) as u32)) } else { (d * p.pow((y - x) as u32), d) };
        let (src, tgt) = (atom(sk, a, x), atom(tk, b, y));
        let pres = ext_pair_p(p, &src, &tgt).unwrap();
        let direct = pres.coefficient_series(a, b, 30).unwrap();
        prop_assert_eq!(ext_atom_series(p, &src, &tgt, 30).unwrap(), direct);
    }
}
