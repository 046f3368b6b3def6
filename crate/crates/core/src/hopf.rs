//! Tri-graded Hopf presentations and coefficient extraction.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith;
use crate::error::{invalid, Result};

/// (cohomological degree, source star-index, target star-index).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriDegree {
    pub coh: u64,
    pub src: u64,
    pub tgt: u64,
}

impl TriDegree {
    pub const fn new(coh: u64, src: u64, tgt: u64) -> Self {
        Self { coh, src, tgt }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// One letter of a generator word. `twist` is the Frobenius twist annotation
/// carried by the token; zero prints nothing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    /// Basis class of `Ext^{2m}(I^(r), I^(r))`.
    E { m: u64 },
    /// `e_level` raised to `power`.
    EPower { level: u64, power: u64, twist: u64 },
    Phi { h: u64, twist: u64 },
    PhiDual { h: u64, twist: u64 },
    Kz { h: u64, twist: u64 },
    KzDual { h: u64, twist: u64 },
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, h, twist) = match *self {
            Token::E { m } => return write!(f, "e({m})"),
            Token::EPower { level, power, twist } => {
                write!(f, "e_{level}^{power}")?;
                return if twist > 0 { write!(f, "({twist})") } else { Ok(()) };
            }
            Token::Phi { h, twist } => ("phi", h, twist),
            Token::PhiDual { h, twist } => ("phi#", h, twist),
            Token::Kz { h, twist } => ("kz", h, twist),
            Token::KzDual { h, twist } => ("kz#", h, twist),
        };
        write!(f, "{name}_{h}")?;
        if twist > 0 {
            write!(f, "({twist})")?;
        }
        Ok(())
    }
}

/// Ordered product of tokens. The empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorWord(pub Vec<Token>);

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub word: GeneratorWord,
    pub degree: TriDegree,
}

impl GeneratorSpec {
    pub fn parity(&self) -> Parity {
        if self.degree.coh.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraFamily {
    Polynomial,
    Exterior,
    DividedPower,
}

impl AlgebraFamily {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraFamily::Polynomial => "polynomial",
            AlgebraFamily::Exterior => "exterior",
            AlgebraFamily::DividedPower => "divided-power",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfPresentation {
    pub family: AlgebraFamily,
    pub generators: Vec<GeneratorSpec>,
    pub primitively_generated: bool,
}

impl HopfPresentation {
    /// Rejects generators with a zero star-index, which would make the
    /// monomial count at a fixed tri-degree infinite.
    pub fn new(family: AlgebraFamily, generators: Vec<GeneratorSpec>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree.src == 0 || g.degree.tgt == 0) {
            return Err(invalid(alloc::format!(
                "generator {} has a zero star-index",
                g.word
            )));
        }
        Ok(Self { family, generators, primitively_generated: true })
    }

    pub fn coefficient(&self, t: TriDegree) -> Result<u64> {
        Ok(self.coefficient_series(t.src, t.tgt, t.coh)?[t.coh as usize])
    }

    /// Monomial counts at `(c, src, tgt)` for `c = 0..=max_coh`.
    pub fn coefficient_series(&self, src: u64, tgt: u64, max_coh: u64) -> Result<Vec<u64>> {
        let (na, nb, nc) = (dim(src)?, dim(tgt)?, dim(max_coh)?);
        let cells = na.checked_mul(nb).and_then(|x| x.checked_mul(nc)).ok_or(crate::Error::Overflow)?;
        let idx = |a: usize, b: usize, c: usize| (a * nb + b) * nc + c;
        let mut dp = vec![0u64; cells];
        dp[0] = 1;
        let exterior = self.family == AlgebraFamily::Exterior;
        for g in &self.generators {
            let TriDegree { coh: gc, src: ga, tgt: gb } = g.degree;
            if ga > src || gb > tgt || gc > max_coh {
                continue;
            }
            let (ga, gb, gc) = (ga as usize, gb as usize, gc as usize);
            let mut states: Vec<(usize, usize, usize)> = Vec::new();
            for a in 0..na - ga {
                for b in 0..nb - gb {
                    for c in 0..nc - gc {
                        states.push((a, b, c));
                    }
                }
            }
            // ascending order reuses the generator freely, descending at most once
            if exterior {
                states.reverse();
            }
            for (a, b, c) in states {
                let from = dp[idx(a, b, c)];
                if from != 0 {
                    let to = idx(a + ga, b + gb, c + gc);
                    dp[to] = arith::add(dp[to], from)?;
                }
            }
        }
        let (a, b) = (na - 1, nb - 1);
        Ok((0..nc).map(|c| dp[idx(a, b, c)]).collect())
    }
}

fn dim(x: u64) -> Result<usize> {
    usize::try_from(x).ok().and_then(|x| x.checked_add(1)).ok_or(crate::Error::Overflow)
}

/// Number of monomials in the generators with tri-degree `t`.
pub fn presentation_coefficient(pres: &HopfPresentation, t: TriDegree) -> Result<u64> {
    pres.coefficient(t)
}
