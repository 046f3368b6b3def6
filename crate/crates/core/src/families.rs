//! The six functor pairs with closed-form Ext algebras, and their generators.
//!
//! For a pair with relative twist `e` and `P = p^e`, generator `m` has
//! cohomological degree `2Pm + offset` and star-indices `(1, P)` when the
//! source carries the extra twist, `(P, 1)` when the target does. The offset
//! is `0`, `P - 1` (one Koszul shift) or `2P - 2` (two).

use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::error::{Error, Result};
use crate::hopf::{AlgebraFamily, GeneratorSpec, GeneratorWord, Token, TriDegree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctorKind {
    Gamma,
    Lambda,
    Sym,
    Id,
}

impl FunctorKind {
    pub fn letter(self) -> char {
        match self {
            FunctorKind::Gamma => 'G',
            FunctorKind::Lambda => 'L',
            FunctorKind::Sym => 'S',
            FunctorKind::Id => 'I',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c {
            'G' => FunctorKind::Gamma,
            'L' => FunctorKind::Lambda,
            'S' => FunctorKind::Sym,
            'I' => FunctorKind::Id,
            _ => return None,
        })
    }

    /// Kind of the dual functor.
    pub fn dual(self) -> Self {
        match self {
            FunctorKind::Gamma => FunctorKind::Sym,
            FunctorKind::Sym => FunctorKind::Gamma,
            k => k,
        }
    }
}

/// Which side of the pair carries the larger Frobenius twist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwistSide {
    Source,
    Target,
}

impl TwistSide {
    pub fn flip(self) -> Self {
        match self {
            TwistSide::Source => TwistSide::Target,
            TwistSide::Target => TwistSide::Source,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtPair {
    GammaSym,
    GammaLambda,
    LambdaSym,
    GammaGamma,
    SymSym,
    LambdaLambda,
}

impl ExtPair {
    pub const ALL: [ExtPair; 6] = [
        ExtPair::GammaSym,
        ExtPair::GammaLambda,
        ExtPair::LambdaSym,
        ExtPair::GammaGamma,
        ExtPair::SymSym,
        ExtPair::LambdaLambda,
    ];

    /// Resolves a kind pair. `Id` becomes `Gamma` as a source and `Sym` as a
    /// target.
    pub fn from_kinds(source: FunctorKind, target: FunctorKind) -> Result<Self> {
        use FunctorKind::*;
        let s = if source == Id { Gamma } else { source };
        let t = if target == Id { Sym } else { target };
        Ok(match (s, t) {
            (Gamma, Sym) => ExtPair::GammaSym,
            (Gamma, Lambda) => ExtPair::GammaLambda,
            (Lambda, Sym) => ExtPair::LambdaSym,
            (Gamma, Gamma) => ExtPair::GammaGamma,
            (Sym, Sym) => ExtPair::SymSym,
            (Lambda, Lambda) => ExtPair::LambdaLambda,
            _ => return Err(Error::UnsupportedPair { source, target }),
        })
    }

    pub fn kinds(self) -> (FunctorKind, FunctorKind) {
        use FunctorKind::*;
        match self {
            ExtPair::GammaSym => (Gamma, Sym),
            ExtPair::GammaLambda => (Gamma, Lambda),
            ExtPair::LambdaSym => (Lambda, Sym),
            ExtPair::GammaGamma => (Gamma, Gamma),
            ExtPair::SymSym => (Sym, Sym),
            ExtPair::LambdaLambda => (Lambda, Lambda),
        }
    }

    /// Pair of the dual query: source and target swap and each kind is
    /// dualized.
    pub fn dual(self) -> Self {
        let (s, t) = self.kinds();
        Self::from_kinds(t.dual(), s.dual()).expect("duals of supported pairs are supported")
    }

    pub fn algebra(self) -> AlgebraFamily {
        match self {
            ExtPair::GammaSym => AlgebraFamily::Polynomial,
            ExtPair::GammaLambda | ExtPair::LambdaSym => AlgebraFamily::Exterior,
            _ => AlgebraFamily::DividedPower,
        }
    }

    /// Number of Koszul shifts (`0`, `1` or `2`) in the degree offset.
    fn koszul_shifts(self, side: TwistSide) -> u64 {
        use ExtPair::*;
        match (self, side) {
            (GammaSym, _) => 0,
            (GammaLambda, TwistSide::Source) | (LambdaSym, TwistSide::Target) => 1,
            (GammaLambda, TwistSide::Target) | (LambdaSym, TwistSide::Source) => 0,
            (GammaGamma, TwistSide::Source) | (SymSym, TwistSide::Target) => 2,
            (GammaGamma, TwistSide::Target) | (SymSym, TwistSide::Source) => 0,
            (LambdaLambda, _) => 1,
        }
    }

    /// Generator `m` of the algebra with relative twist `e`. `twist` is the
    /// annotation carried by the dual tokens.
    pub fn generator(self, side: TwistSide, p: u64, e: u64, m: u64, twist: u64) -> Result<GeneratorSpec> {
        let big = arith::pow(p, e)?;
        let base = arith::mul(arith::mul(2, big)?, m)?;
        let coh = arith::add(base, arith::mul(self.koszul_shifts(side), big - 1)?)?;
        let degree = match side {
            TwistSide::Source => TriDegree::new(coh, 1, big),
            TwistSide::Target => TriDegree::new(coh, big, 1),
        };
        let e_tok = Token::E { m: arith::mul(m, big)? };
        let word = match side {
            TwistSide::Source => {
                let mut w = vec![Token::Phi { h: e, twist: 0 }, e_tok];
                match self {
                    ExtPair::GammaLambda | ExtPair::LambdaLambda => {
                        w.insert(0, Token::Kz { h: e, twist: 0 });
                    }
                    ExtPair::GammaGamma => {
                        w.insert(0, Token::Kz { h: e, twist: 0 });
                        w.insert(0, Token::KzDual { h: e, twist: 0 });
                    }
                    _ => {}
                }
                w
            }
            TwistSide::Target => {
                let mut w = vec![e_tok, Token::PhiDual { h: e, twist }];
                match self {
                    ExtPair::LambdaSym | ExtPair::LambdaLambda => {
                        w.push(Token::KzDual { h: e, twist });
                    }
                    ExtPair::SymSym => {
                        w.push(Token::KzDual { h: e, twist });
                        w.push(Token::Kz { h: e, twist });
                    }
                    _ => {}
                }
                w
            }
        };
        Ok(GeneratorSpec { word: GeneratorWord(word), degree })
    }

    /// Generators `m = 0, 1, ...` whose cohomological degree is at most
    /// `max_coh`, optionally also bounded by `m < m_limit`.
    pub fn generators_up_to(
        self,
        side: TwistSide,
        p: u64,
        e: u64,
        max_coh: u64,
        m_limit: Option<u64>,
        twist: u64,
    ) -> Result<Vec<GeneratorSpec>> {
        let mut out = Vec::new();
        let mut m = 0;
        while m_limit.is_none_or(|lim| m < lim) {
            let g = self.generator(side, p, e, m, twist)?;
            if g.degree.coh > max_coh {
                break;
            }
            out.push(g);
            m += 1;
        }
        Ok(out)
    }
}
