//! Verification suites: exact cross-checks between the closed forms and the
//! finite-field oracle, each reporting how many checks ran and which failed.

use extcalc_core::arith::binomial;
use extcalc_core::basic_ext::{basic_space, BasicSpace, BasicSpaceQuery};
use extcalc_core::fcat::{ext_f_presentation, ext_f_series};
use extcalc_core::oracle::{build_complex, homology_dims, genkoszul_check, ComplexSpec, FpMatrix, GradedLinearMap};
use extcalc_core::pcalc::{dualize, ext_word_series, Category, ExtQuery, FunctorAtom, FunctorWord};
use extcalc_core::{power_dims, ExtPair, Flavor, FunctorKind, GradedDims, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::document::{SuiteReport, VerificationReport};

pub const SUITES: [&str; 6] = ["koszul", "derham", "genkoszul", "cor47", "duality", "family-vs-assembly"];

/// Default size parameter of `--max`.
pub const DEFAULT_MAX: u64 = 6;

const MAX_LISTED_FAILURES: usize = 20;

struct Tally {
    name: &'static str,
    checks: u64,
    failed: u64,
    failures: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, checks: 0, failed: 0, failures: Vec::new() }
    }

    fn check(&mut self, outcome: Result<bool>, what: impl FnOnce() -> String) {
        self.checks += 1;
        let msg = match outcome {
            Ok(true) => return,
            Ok(false) => what(),
            Err(e) => format!("{}: {e}", what()),
        };
        self.failed += 1;
        if self.failures.len() < MAX_LISTED_FAILURES {
            self.failures.push(msg);
        }
    }

    fn finish(mut self) -> SuiteReport {
        let unlisted = self.failed.saturating_sub(self.failures.len() as u64);
        if unlisted > 0 {
            self.failures.push(format!("{unlisted} more failures"));
        }
        SuiteReport { checks: self.checks, failures: self.failures, name: self.name.to_string(), passed: self.failed == 0 }
    }
}

fn koszul(max: u64) -> SuiteReport {
    let mut t = Tally::new("koszul");
    for p in [2u64, 3] {
        for n in 1..=3usize {
            for total in 0..=max {
                for spec in [ComplexSpec::Koszul { p, n, total }, ComplexSpec::DualKoszul { p, n, total }] {
                    let exact = build_complex(&spec).map(|c| homology_dims(&c).iter().all(|&x| x == 0));
                    // the degree-0 complex is the ground field in one spot
                    let outcome = if total == 0 { exact.map(|e| !e) } else { exact };
                    t.check(outcome, || format!("{spec:?}"));
                }
            }
        }
    }
    t.finish()
}

fn derham(max: u64) -> SuiteReport {
    let mut t = Tally::new("derham");
    for p in [2u64, 3] {
        for n in 1..=3u64 {
            for total in 0..=max {
                let spec = ComplexSpec::DeRham { p, n: n as usize, total };
                let outcome = build_complex(&spec).and_then(|c| {
                    let h = homology_dims(&c);
                    let mut ok = true;
                    for (i, &x) in h.iter().enumerate() {
                        let i = i as u64;
                        let expected = if total % p == 0 && i <= total / p {
                            let m = total / p;
                            binomial(n + m - i - 1, m - i)? * binomial(n, i)?
                        } else {
                            0
                        };
                        ok &= x == expected;
                    }
                    Ok(ok)
                });
                t.check(outcome, || format!("{spec:?}"));
            }
        }
    }
    t.finish()
}

/// A random graded map over F_2 or F_3 whose matrix respects the grading.
pub fn random_graded_map(rng: &mut ChaCha8Rng) -> GradedLinearMap {
    let p = if rng.gen_bool(0.5) { 2 } else { 3 };
    let shift: i64 = rng.gen_range(-1..=2);
    let source: Vec<u64> = (0..rng.gen_range(1..=4)).map(|_| rng.gen_range(1..=3)).collect();
    let shifted: Vec<u64> = source.iter().map(|&d| (d as i64 + shift) as u64).collect();
    let target: Vec<u64> = (0..rng.gen_range(1..=4))
        .map(|_| if rng.gen_bool(0.75) { shifted[rng.gen_range(0..shifted.len())] } else { rng.gen_range(0..=5) })
        .collect();
    let mut m = FpMatrix::zeros(p, target.len(), source.len()).expect("2 and 3 are prime");
    for (r, &a) in target.iter().enumerate() {
        for (c, &b) in shifted.iter().enumerate() {
            if a == b {
                m.set(r, c, rng.gen_range(0..p));
            }
        }
    }
    GradedLinearMap::new(source, target, shift, m).expect("degrees match by construction")
}

fn genkoszul(max: u64) -> SuiteReport {
    let mut t = Tally::new("genkoszul");
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b6f_737a);
    for i in 0..4 * max.max(5) {
        let f = random_graded_map(&mut rng);
        let d = 1 + i % 3;
        t.check(genkoszul_check(&f, d), || format!("map {i}: {f:?}, d={d}"));
    }
    t.finish()
}

fn basic(kind: BasicSpace, p: u64, r: u64, j: u64) -> Result<GradedDims> {
    basic_space(&BasicSpaceQuery::new(kind, p, r, j))
}

/// Sum over `s` of the degree-`n` part of `S^(d-s)(a) ⊗ Λ^s(b)`, the
/// `s`-th summand raised by `s * step`.
fn graded_sum(a: &GradedDims, b: &GradedDims, d: u64, step: u64, max_n: u64) -> Result<Vec<u64>> {
    let mut out = vec![0u64; max_n as usize + 1];
    for s in 0..=d {
        let term = power_dims(a, d - s, Flavor::Sym)?.convolve(&power_dims(b, s, Flavor::Ext)?)?;
        for (deg, dim) in term.iter() {
            if let Some(slot) = deg.checked_add(s * step).and_then(|n| out.get_mut(n as usize)) {
                *slot += dim;
            }
        }
    }
    Ok(out)
}

fn component_identity(max: u64) -> SuiteReport {
    let mut t = Tally::new("cor47");
    for p in [2u64, 3] {
        for r in 1..=3u64 {
            for j in 1..=r {
                for d in 1..=max {
                    let outcome = (|| {
                        let (v, w) = (basic(BasicSpace::V, p, r, j - 1)?, basic(BasicSpace::W, p, r, j - 1)?);
                        let (c, k) = (basic(BasicSpace::C, p, r, j)?, basic(BasicSpace::K, p, r, j)?);
                        let lhs = graded_sum(&v, &w, d, p.pow((r - j + 1) as u32), 40)?;
                        let rhs = graded_sum(&c, &k, d, p.pow((r - j) as u32), 40)?;
                        Ok(lhs == rhs)
                    })();
                    t.check(outcome, || format!("p={p} r={r} j={j} d={d}"));
                }
            }
        }
    }
    t.finish()
}

fn duality(max: u64) -> SuiteReport {
    let mut t = Tally::new("duality");
    let max_coh = 5 * max;
    for p in [2u64, 3] {
        for pair in ExtPair::ALL {
            let (sk, tk) = pair.kinds();
            for x in 0..=3u64 {
                for y in 0..=3u64 {
                    for d in 1..=4u64 {
                        let (a, b) = if x >= y { (d, d * p.pow((x - y) as u32)) } else { (d * p.pow((y - x) as u32), d) };
                        let outcome = (|| {
                            let q = ExtQuery {
                                category: Category::P,
                                p,
                                n_exp: None,
                                source: FunctorWord::from(FunctorAtom::new(sk, a, x)?),
                                target: FunctorWord::from(FunctorAtom::new(tk, b, y)?),
                            };
                            let dq = dualize(&q);
                            Ok(ext_word_series(p, &q.source, &q.target, max_coh)?
                                == ext_word_series(p, &dq.source, &dq.target, max_coh)?)
                        })();
                        t.check(outcome, || format!("p={p} {pair:?} twists ({x},{y}) indices ({a},{b})"));
                    }
                }
            }
        }
    }
    t.finish()
}

fn family_vs_assembly(max: u64) -> SuiteReport {
    use FunctorKind::*;
    let mut t = Tally::new("family-vs-assembly");
    let max_coh = 20;
    for n_exp in [1u64, 2] {
        for h in 0..n_exp {
            for (a, b) in [(Gamma, Sym), (Gamma, Lambda), (Gamma, Gamma), (Lambda, Lambda)] {
                let pres = ext_f_presentation(2, n_exp, h, a, b, max_coh, max);
                for j in 0..=max {
                    for l in 0..=max {
                        let outcome = pres.as_ref().map_err(Clone::clone).and_then(|pres| {
                            Ok(ext_f_series(2, n_exp, h, a, j, b, l, max_coh)? == pres.coefficient_series(j, l, max_coh)?)
                        });
                        t.check(outcome, || format!("N={n_exp} h={h} ({},{}) j={j} l={l}", a.letter(), b.letter()));
                    }
                }
            }
        }
    }
    t.finish()
}

pub fn run_suite(name: &str, max: u64) -> Option<SuiteReport> {
    Some(match name {
        "koszul" => koszul(max),
        "derham" => derham(max),
        "genkoszul" => genkoszul(max),
        "cor47" => component_identity(max),
        "duality" => duality(max),
        "family-vs-assembly" => family_vs_assembly(max),
        _ => return None,
    })
}

/// Runs one suite, or every suite for `all`.
pub fn run(name: &str, max: u64) -> Option<VerificationReport> {
    let suites: Vec<SuiteReport> = if name == "all" {
        SUITES.iter().map(|s| run_suite(s, max).expect("listed suites exist")).collect()
    } else {
        vec![run_suite(name, max)?]
    };
    Some(VerificationReport { passed: suites.iter().all(|s| s.passed), suites })
}
