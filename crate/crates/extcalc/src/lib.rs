//! Command-line front end for `extcalc-core`: functor-expression queries,
//! generator lists, bounds, verification suites and complex dumps, emitted
//! as JSON, a plain table or LaTeX.

pub mod config;
pub mod document;
pub mod dump;
pub mod error;
pub mod expr;
pub mod render;
pub mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use extcalc_core::fcat::{ext_f_family, ext_f_series};
use extcalc_core::oracle::{build_complex, ComplexSpec};
use extcalc_core::pcalc::{check_word_pair, ext_pair_p, ext_word_series, FunctorAtom, FunctorWord};
use extcalc_core::stable::{bounds, ext_pair_stable, BoundsArgs, StableFamily};
use extcalc_core::{arith, ExtPair, FunctorKind, GeneratorSpec, TwistSide};

use config::Config;
use document::{BoundsBlock, ErrorBlock, GeneratorEntry, ResultDocument};
use error::CliError;

pub const DEFAULT_MAX_COH: u64 = 20;
pub const DEFAULT_MAX_INDEX: u64 = 8;

#[derive(Debug, Parser)]
#[command(name = "extcalc", version, about = "Ext groups between twisted classical functors over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension table of Ext between two functor expressions.
    Ext(ExtArgs),
    /// Generators of the Ext algebra of a functor pair.
    Generators(GeneratorArgs),
    /// Twist, field-size and rank thresholds.
    Bounds(BoundsCmd),
    /// Run verification suites against the finite-field oracle.
    Verify(VerifyArgs),
    /// Dump the differentials of an oracle complex as plain-text matrices.
    Complex(ComplexArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CategoryArg {
    #[value(name = "P")]
    P,
    #[value(name = "stable")]
    Stable,
    #[value(name = "F")]
    F,
}

impl CategoryArg {
    fn name(self) -> &'static str {
        match self {
            CategoryArg::P => "P",
            CategoryArg::Stable => "stable",
            CategoryArg::F => "F",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Latex,
}

#[derive(Debug, Args)]
pub struct ExtArgs {
    #[arg(long, value_enum)]
    pub category: CategoryArg,
    #[arg(long)]
    pub p: Option<u64>,
    /// Field exponent: the field has p^N elements (category F only).
    #[arg(long = "N")]
    pub n_exp: Option<u64>,
    #[arg(long)]
    pub source: String,
    #[arg(long)]
    pub target: String,
    #[arg(long)]
    pub max_coh: Option<u64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct GeneratorArgs {
    #[arg(long, value_enum)]
    pub category: CategoryArg,
    /// Two kind letters, e.g. `G,S`.
    #[arg(long)]
    pub pair: String,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long = "N")]
    pub n_exp: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub source_twist: u64,
    #[arg(long, default_value_t = 0)]
    pub target_twist: u64,
    #[arg(long)]
    pub max_coh: Option<u64>,
    /// Largest star-index kept (category F only).
    #[arg(long)]
    pub max_index: Option<u64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct BoundsCmd {
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub s: u64,
    #[arg(long)]
    pub d: u64,
    #[arg(long, default_value_t = 0)]
    pub m: u64,
    /// Degree for the vanishing bound; defaults to `s`.
    #[arg(long)]
    pub i: Option<u64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Koszul,
    Derham,
    Genkoszul,
    #[value(name = "cor47")]
    ComponentIdentity,
    Duality,
    FamilyVsAssembly,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: SuiteArg,
    /// Size parameter of the suites.
    #[arg(long, default_value_t = verify::DEFAULT_MAX)]
    pub max: u64,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComplexKind {
    Koszul,
    DualKoszul,
    Derham,
}

#[derive(Debug, Args)]
pub struct ComplexArgs {
    #[arg(long, value_enum)]
    pub kind: ComplexKind,
    #[arg(long)]
    pub p: Option<u64>,
    /// Dimension of the underlying space.
    #[arg(long)]
    pub n: usize,
    /// Total polynomial degree.
    #[arg(long)]
    pub total: u64,
}

/// Exit status and the text destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I, cfg: &Config) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, cfg),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: 3, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            }
        }
    }
}

pub fn run(cli: &Cli, cfg: &Config) -> Outcome {
    let (format, title, result) = match &cli.command {
        Command::Ext(a) => (a.format, ext_title(a), ext(a, cfg)),
        Command::Generators(a) => (a.format, None, generators(a, cfg)),
        Command::Bounds(a) => (a.format, None, bounds_cmd(a, cfg)),
        Command::Verify(a) => (a.format, None, Ok(verify_cmd(a))),
        Command::Complex(a) => {
            return match complex(a, cfg) {
                Ok(text) => Outcome { code: 0, stdout: text, stderr: String::new() },
                Err(e) => failure(&e),
            }
        }
    };
    let format = match resolve_format(format, cfg) {
        Ok(f) => f,
        Err(e) => return failure(&e),
    };
    match result {
        Ok(doc) => {
            let failed = doc.verification.as_ref().is_some_and(|v| !v.passed);
            Outcome { code: u8::from(failed), stdout: emit(&doc, format, title.as_deref()), stderr: String::new() }
        }
        Err((Some(doc), e)) if e.exit_code() == 2 => {
            let mut out = failure(&e);
            out.stdout = emit(&doc, format, title.as_deref());
            out
        }
        Err((_, e)) => failure(&e),
    }
}

fn failure(e: &CliError) -> Outcome {
    Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") }
}

fn emit(doc: &ResultDocument, format: Format, title: Option<&str>) -> String {
    match format {
        Format::Json => doc.to_json(),
        Format::Table => render::table(doc),
        Format::Latex => render::latex(doc, title),
    }
}

fn resolve_format(flag: Option<Format>, cfg: &Config) -> Result<Format, CliError> {
    if let Some(f) = flag {
        return Ok(f);
    }
    match &cfg.format {
        None => Ok(Format::Json),
        Some(name) => Format::from_str(name, true).map_err(|_| CliError::Param(format!("config: unknown format '{name}'"))),
    }
}

/// A failed command, with the partial document when it should still be shown.
type Failed = (Option<Box<ResultDocument>>, CliError);

fn plain<E: Into<CliError>>(e: E) -> Failed {
    (None, e.into())
}

fn with_doc(doc: &ResultDocument, e: CliError) -> Failed {
    let mut doc = Box::new(doc.clone());
    doc.error = Some(ErrorBlock { kind: e.kind().to_string(), reason: e.to_string() });
    (Some(doc), e)
}

fn prime(flag: Option<u64>, cfg: &Config) -> Result<u64, CliError> {
    let p = flag.or(cfg.p).ok_or_else(|| CliError::Param("--p is required (flag or config)".into()))?;
    arith::require_prime(p)?;
    Ok(p)
}

fn field_exponent(flag: Option<u64>, cfg: &Config) -> Result<u64, CliError> {
    match flag.or(cfg.n_exp).unwrap_or(1) {
        0 => Err(CliError::Param("--N must be at least 1".into())),
        n => Ok(n),
    }
}

fn parse_flag(flag: &'static str, text: &str) -> Result<FunctorWord, CliError> {
    expr::parse_word(text).map_err(|err| CliError::Parse { flag, err })
}

fn single_atom(w: &FunctorWord, flag: &str, category: CategoryArg) -> Result<FunctorAtom, CliError> {
    match w.factors[..] {
        [a] => Ok(a),
        _ => Err(CliError::Param(format!("--{flag}: category {} takes a single atom", category.name()))),
    }
}

/// Larger twist, side carrying it, and the difference.
fn relative_twist(src_twist: u64, tgt_twist: u64) -> (TwistSide, u64) {
    if src_twist >= tgt_twist {
        (TwistSide::Source, src_twist - tgt_twist)
    } else {
        (TwistSide::Target, tgt_twist - src_twist)
    }
}

/// Twist of the source relative to the target, modulo `N`: over `F_{p^N}`
/// the `N`-fold Frobenius twist is the identity.
fn twist_mod(src_twist: u64, tgt_twist: u64, n_exp: u64) -> u64 {
    (src_twist % n_exp + n_exp - tgt_twist % n_exp) % n_exp
}

fn entries(gens: &[GeneratorSpec], family: &str, max_coh: u64) -> Vec<GeneratorEntry> {
    gens.iter()
        .filter(|g| g.degree.coh <= max_coh)
        .map(|g| GeneratorEntry {
            degree: [g.degree.coh, g.degree.src, g.degree.tgt],
            family: family.to_string(),
            word: g.word.to_string(),
        })
        .collect()
}

fn ext_title(a: &ExtArgs) -> Option<String> {
    let src = expr::parse_word(&a.source).ok()?;
    let tgt = expr::parse_word(&a.target).ok()?;
    Some(format!(
        "\\mathrm{{Ext}}^{{*}}_{{\\mathrm{{{}}}}}({}, {})",
        a.category.name(),
        expr::latex_word(&src),
        expr::latex_word(&tgt)
    ))
}

fn ext(a: &ExtArgs, cfg: &Config) -> Result<ResultDocument, Failed> {
    let p = prime(a.p, cfg).map_err(plain)?;
    let max_coh = a.max_coh.or(cfg.max_coh).unwrap_or(DEFAULT_MAX_COH);
    let src = parse_flag("source", &a.source).map_err(plain)?;
    let tgt = parse_flag("target", &a.target).map_err(plain)?;
    let mut doc = ResultDocument::new("ext");
    doc.category = Some(a.category.name().to_string());
    doc.p = Some(p);
    doc.echo("source", &a.source);
    doc.echo("target", &a.target);
    doc.echo("max_coh", max_coh);
    let stars = |w: &FunctorWord| w.factors.iter().map(|f| f.star).sum::<u64>();
    let (i, l) = (stars(&src), stars(&tgt));
    let fail = |doc: &ResultDocument, e: extcalc_core::Error| with_doc(doc, e.into());
    let (series, gens) = match a.category {
        CategoryArg::P => {
            check_word_pair(&src, &tgt).map_err(|e| fail(&doc, e))?;
            let series = ext_word_series(p, &src, &tgt, max_coh).map_err(|e| fail(&doc, e))?;
            let gens = match (&src.factors[..], &tgt.factors[..]) {
                ([x], [y]) => {
                    let pres = ext_pair_p(p, x, y).map_err(|e| fail(&doc, e))?;
                    entries(&pres.generators, pres.family.name(), max_coh)
                }
                _ => Vec::new(),
            };
            (series, gens)
        }
        CategoryArg::Stable => {
            let x = single_atom(&src, "source", a.category).map_err(plain)?;
            let y = single_atom(&tgt, "target", a.category).map_err(plain)?;
            let (side, h) = relative_twist(x.twist, y.twist);
            doc.echo("h", h);
            let fam = StableFamily::new(p, x.kind, y.kind, h, side).map_err(|e| fail(&doc, e))?;
            let pres = ext_pair_stable(&fam, max_coh).map_err(|e| fail(&doc, e))?;
            let series = pres.coefficient_series(x.star, y.star, max_coh).map_err(|e| fail(&doc, e))?;
            (series, entries(&pres.generators, pres.family.name(), max_coh))
        }
        CategoryArg::F => {
            let n_exp = field_exponent(a.n_exp, cfg).map_err(plain)?;
            let x = single_atom(&src, "source", a.category).map_err(plain)?;
            let y = single_atom(&tgt, "target", a.category).map_err(plain)?;
            let h = twist_mod(x.twist, y.twist, n_exp);
            doc.q = Some(arith::pow(p, n_exp).map_err(plain)?);
            doc.echo("N", n_exp);
            doc.echo("h", h);
            let series = ext_f_series(p, n_exp, h, x.kind, x.star, y.kind, y.star, max_coh).map_err(|e| fail(&doc, e))?;
            let pair = ExtPair::from_kinds(x.kind, y.kind).map_err(|e| fail(&doc, e))?;
            let gens = if matches!(pair, ExtPair::GammaSym | ExtPair::GammaLambda | ExtPair::GammaGamma | ExtPair::LambdaLambda) {
                let max_index = x.star.max(y.star);
                let list = ext_f_family(p, n_exp, h, x.kind, y.kind, max_coh, max_index).map_err(|e| fail(&doc, e))?;
                entries(&list, pair.algebra().name(), max_coh)
            } else {
                Vec::new()
            };
            (series, gens)
        }
    };
    doc.coefficients =
        series.iter().enumerate().filter(|(_, &d)| d > 0).map(|(s, &d)| [s as u64, i, l, d]).collect();
    doc.generators = gens;
    Ok(doc)
}

fn parse_pair(text: &str) -> Result<(FunctorKind, FunctorKind), CliError> {
    let letters: Vec<char> = text.chars().filter(|c| !matches!(c, ',' | ':' | '/' | ' ')).collect();
    let bad = || CliError::Param(format!("--pair: expected two of G, L, S, I, got '{text}'"));
    match letters[..] {
        [a, b] => Ok((FunctorKind::from_letter(a).ok_or_else(bad)?, FunctorKind::from_letter(b).ok_or_else(bad)?)),
        _ => Err(bad()),
    }
}

fn generators(a: &GeneratorArgs, cfg: &Config) -> Result<ResultDocument, Failed> {
    let p = prime(a.p, cfg).map_err(plain)?;
    let (sk, tk) = parse_pair(&a.pair).map_err(plain)?;
    let max_coh = a.max_coh.or(cfg.max_coh).unwrap_or(DEFAULT_MAX_COH);
    let mut doc = ResultDocument::new("generators");
    doc.category = Some(a.category.name().to_string());
    doc.p = Some(p);
    doc.echo("pair", format!("{},{}", sk.letter(), tk.letter()));
    doc.echo("source_twist", a.source_twist);
    doc.echo("target_twist", a.target_twist);
    doc.echo("max_coh", max_coh);
    let fail = |doc: &ResultDocument, e: extcalc_core::Error| with_doc(doc, e.into());
    let pair = ExtPair::from_kinds(sk, tk).map_err(|e| fail(&doc, e))?;
    let family = pair.algebra().name();
    doc.generators = match a.category {
        CategoryArg::P => {
            let x = FunctorAtom::new(sk, 1, a.source_twist).map_err(plain)?;
            let y = FunctorAtom::new(tk, 1, a.target_twist).map_err(plain)?;
            entries(&ext_pair_p(p, &x, &y).map_err(|e| fail(&doc, e))?.generators, family, max_coh)
        }
        CategoryArg::Stable => {
            let (side, h) = relative_twist(a.source_twist, a.target_twist);
            doc.echo("h", h);
            let fam = StableFamily::new(p, sk, tk, h, side).map_err(|e| fail(&doc, e))?;
            entries(&ext_pair_stable(&fam, max_coh).map_err(|e| fail(&doc, e))?.generators, family, max_coh)
        }
        CategoryArg::F => {
            let n_exp = field_exponent(a.n_exp, cfg).map_err(plain)?;
            let h = twist_mod(a.source_twist, a.target_twist, n_exp);
            let max_index = a.max_index.or(cfg.max_index).unwrap_or(DEFAULT_MAX_INDEX);
            doc.q = Some(arith::pow(p, n_exp).map_err(plain)?);
            doc.echo("N", n_exp);
            doc.echo("h", h);
            doc.echo("max_index", max_index);
            let list = ext_f_family(p, n_exp, h, sk, tk, max_coh, max_index).map_err(|e| fail(&doc, e))?;
            entries(&list, family, max_coh)
        }
    };
    Ok(doc)
}

fn bounds_cmd(a: &BoundsCmd, cfg: &Config) -> Result<ResultDocument, Failed> {
    let p = prime(a.p, cfg).map_err(plain)?;
    let i = a.i.unwrap_or(a.s);
    let r = bounds(p, BoundsArgs { i, s: a.s, d: a.d, m: a.m }).map_err(plain)?;
    let mut doc = ResultDocument::new("bounds");
    doc.p = Some(p);
    for (k, v) in [("i", i), ("s", a.s), ("d", a.d), ("m", a.m)] {
        doc.echo(k, v);
    }
    doc.bounds = Some(BoundsBlock {
        gl_n: r.gl_n,
        strong_m: r.strong_m,
        strong_q: r.strong_q,
        vanish_h: r.vanish_h,
        weak_m0: r.weak_m0,
        weak_q: r.weak_q,
    });
    Ok(doc)
}

fn verify_cmd(a: &VerifyArgs) -> ResultDocument {
    let name = a.suite.to_possible_value().expect("no skipped variants").get_name().to_string();
    let mut doc = ResultDocument::new("verify");
    doc.echo("suite", &name);
    doc.echo("max", a.max);
    doc.verification = Some(verify::run(&name, a.max).expect("every suite argument names a suite"));
    doc
}

fn complex(a: &ComplexArgs, cfg: &Config) -> Result<String, CliError> {
    let p = prime(a.p, cfg)?;
    let (n, total) = (a.n, a.total);
    let spec = match a.kind {
        ComplexKind::Koszul => ComplexSpec::Koszul { p, n, total },
        ComplexKind::DualKoszul => ComplexSpec::DualKoszul { p, n, total },
        ComplexKind::Derham => ComplexSpec::DeRham { p, n, total },
    };
    Ok(dump::dump_complex(&build_complex(&spec)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twist_reduction() {
        assert_eq!(twist_mod(0, 0, 1), 0);
        assert_eq!(twist_mod(1, 0, 2), 1);
        assert_eq!(twist_mod(0, 1, 2), 1);
        assert_eq!(twist_mod(5, 1, 3), 1);
        assert_eq!(relative_twist(1, 3), (TwistSide::Target, 2));
        assert_eq!(relative_twist(2, 2), (TwistSide::Source, 0));
    }

    #[test]
    fn pair_spellings() {
        use FunctorKind::*;
        for text in ["G,S", "GS", "G:S", "G / S"] {
            assert_eq!(parse_pair(text).unwrap(), (Gamma, Sym));
        }
        assert!(parse_pair("G").is_err());
        assert!(parse_pair("GX").is_err());
    }
}
