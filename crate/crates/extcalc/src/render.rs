//! Plain-text table and LaTeX renderings of a result document.

use std::fmt::Write;

use crate::document::ResultDocument;

pub const TABLE_HEADER: &str = "s\ti\tl\tdim";

fn header_lines(doc: &ResultDocument) -> Vec<String> {
    let mut out = vec![format!("# {}", doc.command)];
    if let Some(c) = &doc.category {
        out.push(format!("# category {c}"));
    }
    if let Some(p) = doc.p {
        out.push(format!("# p {p}"));
    }
    if let Some(q) = doc.q {
        out.push(format!("# q {q}"));
    }
    for (k, v) in &doc.query {
        out.push(format!("# {k} {v}"));
    }
    out
}

/// Comment lines start with `#`; the coefficient block is the header line
/// followed by one tab-separated row per entry of `coefficients`.
pub fn table(doc: &ResultDocument) -> String {
    let mut out = String::new();
    for line in header_lines(doc) {
        writeln!(out, "{line}").unwrap();
    }
    if let Some(err) = &doc.error {
        writeln!(out, "# error {}: {}", err.kind, err.reason).unwrap();
        return out;
    }
    if doc.command == "ext" {
        writeln!(out, "{TABLE_HEADER}").unwrap();
        for [s, i, l, d] in &doc.coefficients {
            writeln!(out, "{s}\t{i}\t{l}\t{d}").unwrap();
        }
    }
    if !doc.generators.is_empty() {
        if doc.command == "ext" {
            out.push('\n');
        }
        writeln!(out, "generator\tcoh\tsrc\ttgt\tfamily").unwrap();
        for g in &doc.generators {
            let [c, a, b] = g.degree;
            writeln!(out, "{}\t{c}\t{a}\t{b}\t{}", g.word, g.family).unwrap();
        }
    }
    if let Some(b) = &doc.bounds {
        for (name, value) in [
            ("vanish_h", b.vanish_h),
            ("weak_m0", b.weak_m0),
            ("weak_q", b.weak_q),
            ("strong_m", b.strong_m),
            ("strong_q", b.strong_q),
            ("gl_n", b.gl_n),
        ] {
            writeln!(out, "{name}\t{value}").unwrap();
        }
    }
    if let Some(v) = &doc.verification {
        for s in &v.suites {
            let mark = if s.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{mark}\t{}\t{} checks", s.name, s.checks).unwrap();
            for f in &s.failures {
                writeln!(out, "\t{f}").unwrap();
            }
        }
        writeln!(out, "{}", if v.passed { "all suites passed" } else { "some suites failed" }).unwrap();
    }
    out
}

/// `title` is the math-mode description of the query, if there is one.
pub fn latex(doc: &ResultDocument, title: Option<&str>) -> String {
    let mut out = String::new();
    for line in header_lines(doc) {
        writeln!(out, "%{}", &line[1..]).unwrap();
    }
    if let Some(t) = title {
        writeln!(out, "${t}$").unwrap();
    }
    if let Some(err) = &doc.error {
        writeln!(out, "% error {}: {}", err.kind, err.reason).unwrap();
        return out;
    }
    if doc.command == "ext" {
        out.push_str("\\begin{tabular}{rrrr}\n$s$ & $i$ & $l$ & $\\dim$ \\\\\n\\hline\n");
        for [s, i, l, d] in &doc.coefficients {
            writeln!(out, "{s} & {i} & {l} & {d} \\\\").unwrap();
        }
        out.push_str("\\end{tabular}\n");
    }
    if !doc.generators.is_empty() {
        out.push_str("\\begin{tabular}{lrrrl}\ngenerator & coh & src & tgt & family \\\\\n\\hline\n");
        for g in &doc.generators {
            let [c, a, b] = g.degree;
            writeln!(out, "\\texttt{{{}}} & {c} & {a} & {b} & {} \\\\", latex_escape(&g.word), g.family).unwrap();
        }
        out.push_str("\\end{tabular}\n");
    }
    if let Some(b) = &doc.bounds {
        out.push_str("\\begin{tabular}{lr}\n");
        for (name, value) in [
            ("vanish_h", b.vanish_h),
            ("weak_m0", b.weak_m0),
            ("weak_q", b.weak_q),
            ("strong_m", b.strong_m),
            ("strong_q", b.strong_q),
            ("gl_n", b.gl_n),
        ] {
            writeln!(out, "\\texttt{{{}}} & {value} \\\\", latex_escape(name)).unwrap();
        }
        out.push_str("\\end{tabular}\n");
    }
    if let Some(v) = &doc.verification {
        out.push_str("\\begin{tabular}{llr}\n");
        for s in &v.suites {
            let mark = if s.passed { "pass" } else { "fail" };
            writeln!(out, "{} & {mark} & {} \\\\", latex_escape(&s.name), s.checks).unwrap();
        }
        out.push_str("\\end{tabular}\n");
    }
    out
}

fn latex_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '_' | '#' | '%' | '&' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(c);
            }
            '^' => out.push_str("\\^{}"),
            _ => out.push(c),
        }
    }
    out
}

/// Coefficient rows of a table rendering.
pub fn parse_table_rows(text: &str) -> Vec<[u64; 4]> {
    let mut rows = Vec::new();
    let mut inside = false;
    for line in text.lines() {
        if line == TABLE_HEADER {
            inside = true;
            continue;
        }
        if !inside {
            continue;
        }
        let cells: Vec<u64> = match line.split('\t').map(str::parse).collect() {
            Ok(c) => c,
            Err(_) => break,
        };
        match cells[..] {
            [s, i, l, d] => rows.push([s, i, l, d]),
            _ => break,
        }
    }
    rows
}
