//! Line-oriented text format for recurrence specifications.
//!
//! ```text
//! # Fibonacci numbers
//! mode = fixed-order
//! ring = rational
//! order = 2
//! initial = [1, 1]
//! coeff p1(k) = 1
//! coeff p2(k) = 1
//! ```
//!
//! Fixed-order files name their coefficients `p1(k)..pm(k)`; full-history
//! files give a single `p(k,i)`. Besides the arithmetic operators, `delta(a, b)`
//! is `1` when `a = b` and `0` otherwise, which is how sparse coefficient
//! tables are written. An optional `coeff perturb(k,i)` is added to matrix
//! entry `(i, k)` during verification only.

mod ast;
mod eval;
mod parser;
mod render;

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

pub use ast::{Expr, Mode, SpecDocument, Var};
pub use eval::{eval_expr, Bindings, EvalError};
pub use parser::parse_expr;
pub use render::{render, render_expr};

use parser::{LineParser, Tok};
use crate::recurrence::{AnySpec, BandFn, CoeffFn, FixedOrderSpec, FullHistorySpec, RecurrenceError};
use crate::ring::RingKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {col}: expected {expected}")]
    Syntax { line: usize, col: usize, expected: String },
    #[error("line {line}, column {col}: {message}")]
    Semantic { line: usize, col: usize, message: String },
}

impl ParseError {
    pub fn position(&self) -> (usize, usize) {
        match self {
            ParseError::Syntax { line, col, .. } | ParseError::Semantic { line, col, .. } => (*line, *col),
        }
    }
}

fn semantic(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError::Semantic {
        line,
        col,
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    col: usize,
}

enum Value {
    Word(String),
    Int(u64),
    List(Vec<Expr>),
    Expr(Expr),
}

struct Entry {
    key: Pos,
    value_pos: Pos,
    value: Value,
}

/// Reads one `key = value` line. Returns the canonical key (`coeff p1`,
/// `mode`, ...), the variable list for coefficient keys, and the value.
fn parse_line(text: &str, line: usize) -> Result<(String, Vec<String>, Entry), ParseError> {
    let mut p = LineParser::new(text, line);
    let (word, key_col) = p.ident("a key (mode, ring, order, initial, first_valid_k or coeff)")?;
    let mut vars = Vec::new();
    let key = match word.as_str() {
        "mode" | "ring" | "order" | "initial" | "first_valid_k" => word.clone(),
        "coeff" => {
            let (name, _) = p.ident("a coefficient name")?;
            p.expect(Tok::LParen)?;
            vars.push(p.ident("a variable name")?.0);
            while p.at(&Tok::Comma)? {
                p.expect(Tok::Comma)?;
                vars.push(p.ident("a variable name")?.0);
            }
            p.expect(Tok::RParen)?;
            format!("coeff {name}")
        }
        other => {
            return Err(p.syntax(
                key_col,
                format!("a key (mode, ring, order, initial, first_valid_k or coeff), found '{other}'"),
            ))
        }
    };
    p.expect(Tok::Eq)?;
    let value_col = p.next_col();
    let value = match word.as_str() {
        "mode" => Value::Word(p.word("'fixed-order' or 'full-history'")?.0),
        "ring" => Value::Word(p.word("'rational' or 'poly'")?.0),
        "order" | "first_valid_k" => {
            let (v, c) = p.uint("a non-negative integer")?;
            Value::Int(u64::try_from(v).map_err(|_| semantic(line, c, format!("{word} is too large")))?)
        }
        _ if p.at(&Tok::LBracket)? => Value::List(p.list()?),
        _ => Value::Expr(p.expr()?),
    };
    p.end()?;
    Ok((
        key,
        vars,
        Entry {
            key: Pos { line, col: key_col },
            value_pos: Pos { line, col: value_col },
            value,
        },
    ))
}

/// Parses a document and checks it is complete and well formed.
pub fn parse(text: &str) -> Result<SpecDocument, ParseError> {
    let mut entries: HashMap<String, Entry> = HashMap::new();
    let mut coeff_vars: HashMap<String, Vec<String>> = HashMap::new();
    let mut coeff_order: Vec<String> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, vars, entry) = parse_line(raw, line)?;
        if let Some(prev) = entries.get(&key) {
            return Err(semantic(
                line,
                entry.key.col,
                format!("duplicate key '{key}' (first given on line {})", prev.key.line),
            ));
        }
        if key.starts_with("coeff ") {
            coeff_vars.insert(key.clone(), vars);
            coeff_order.push(key.clone());
        }
        entries.insert(key, entry);
    }
    let eof = Pos {
        line: last_line + 1,
        col: 1,
    };
    let missing = |what: &str| semantic(eof.line, eof.col, format!("missing {what}"));

    let mode = match entries.get("mode") {
        None => return Err(missing("'mode'")),
        Some(Entry {
            value: Value::Word(w),
            value_pos,
            ..
        }) => match w.as_str() {
            "fixed-order" => Mode::FixedOrder,
            "full-history" => Mode::FullHistory,
            other => {
                return Err(semantic(
                    value_pos.line,
                    value_pos.col,
                    format!("unknown mode '{other}' (expected fixed-order or full-history)"),
                ))
            }
        },
        Some(_) => unreachable!("mode is read as a word"),
    };
    let ring = match entries.get("ring") {
        None => RingKind::Rational,
        Some(Entry {
            value: Value::Word(w),
            value_pos,
            ..
        }) => w.parse::<RingKind>().map_err(|_| {
            semantic(
                value_pos.line,
                value_pos.col,
                format!("unknown ring '{w}' (expected rational or poly)"),
            )
        })?,
        Some(_) => unreachable!("ring is read as a word"),
    };

    let initials = match entries.get("initial") {
        None => return Err(missing("'initial'")),
        Some(e) => match &e.value {
            Value::List(items) => items.clone(),
            Value::Expr(x) => vec![x.clone()],
            _ => unreachable!("initial is read as an expression"),
        },
    };
    let initial_pos = entries["initial"].value_pos;

    for key in &coeff_order {
        if matches!(entries[key].value, Value::List(_)) {
            let p = entries[key].value_pos;
            return Err(semantic(p.line, p.col, format!("'{key}' takes an expression, not a list")));
        }
    }
    let expr_of = |key: &str| -> Option<(Expr, Pos)> {
        entries.get(key).map(|e| match &e.value {
            Value::Expr(x) => (x.clone(), e.value_pos),
            _ => unreachable!("coefficients are read as expressions"),
        })
    };

    let int_of = |key: &str| {
        entries.get(key).map(|e| match e.value {
            Value::Int(v) => (v, e.value_pos),
            _ => unreachable!("{key} is read as an integer"),
        })
    };

    let allowed: &[&str];
    let mut coeffs = Vec::new();
    let mut coeff_pos = Vec::new();
    let first_valid_k;
    match mode {
        Mode::FixedOrder => {
            let (m, m_pos) = int_of("order").ok_or_else(|| missing("'order'"))?;
            if m == 0 {
                return Err(semantic(m_pos.line, m_pos.col, "order must be at least 1"));
            }
            let m = m as usize;
            if initials.len() != m {
                return Err(semantic(
                    initial_pos.line,
                    initial_pos.col,
                    format!("order {m} needs {m} initial values, found {}", initials.len()),
                ));
            }
            let names: Vec<String> = (1..=m).map(|j| format!("coeff p{j}")).collect();
            allowed = &["coeff perturb"];
            for name in &names {
                let (e, pos) = expr_of(name).ok_or_else(|| missing(&format!("'{name}(k)'")))?;
                coeffs.push(e);
                coeff_pos.push(pos);
            }
            for key in &coeff_order {
                if !names.contains(key) && !allowed.contains(&key.as_str()) {
                    let p = entries[key].key;
                    return Err(semantic(
                        p.line,
                        p.col,
                        format!("unexpected '{key}' (order {m} uses p1..p{m})"),
                    ));
                }
            }
            first_valid_k = match int_of("first_valid_k") {
                None => m as u64 + 1,
                Some((v, pos)) if v <= m as u64 => {
                    return Err(semantic(
                        pos.line,
                        pos.col,
                        format!("first_valid_k must exceed the order {m}"),
                    ))
                }
                Some((v, _)) => v,
            };
        }
        Mode::FullHistory => {
            if let Some(e) = entries.get("order") {
                return Err(semantic(e.key.line, e.key.col, "'order' applies to fixed-order documents only"));
            }
            if initials.len() != 1 {
                return Err(semantic(
                    initial_pos.line,
                    initial_pos.col,
                    format!("full-history documents take one initial value, found {}", initials.len()),
                ));
            }
            allowed = &["coeff p", "coeff perturb"];
            for key in &coeff_order {
                if !allowed.contains(&key.as_str()) {
                    let p = entries[key].key;
                    return Err(semantic(p.line, p.col, format!("unexpected '{key}' (full-history uses p(k,i))")));
                }
            }
            let (e, pos) = expr_of("coeff p").ok_or_else(|| missing("'p(k,i)'"))?;
            coeffs.push(e);
            coeff_pos.push(pos);
            first_valid_k = match int_of("first_valid_k") {
                None | Some((1, _)) => 1,
                Some((_, pos)) => {
                    return Err(semantic(pos.line, pos.col, "full-history documents are valid from k = 1"))
                }
            };
        }
    }

    for key in &coeff_order {
        let want: &[&str] = match (mode, key.as_str()) {
            (Mode::FixedOrder, k) if k != "coeff perturb" => &["k"],
            _ => &["k", "i"],
        };
        if coeff_vars[key] != want {
            let p = entries[key].key;
            return Err(semantic(
                p.line,
                p.col,
                format!("'{}' takes the variables ({})", &key[6..], want.join(",")),
            ));
        }
    }

    let perturb = expr_of("coeff perturb");
    let doc = SpecDocument {
        mode,
        ring,
        initials,
        coeffs,
        perturb: perturb.as_ref().map(|(e, _)| e.clone()),
        first_valid_k,
    };

    // Variable scoping.
    let check_vars = |e: &Expr, pos: Pos, allow_k: bool, allow_i: bool| -> Result<(), ParseError> {
        if !allow_k && e.mentions(Var::K) {
            return Err(semantic(pos.line, pos.col, "'k' is not available in initial values"));
        }
        if !allow_i && e.mentions(Var::I) {
            let msg = if allow_k {
                "'i' is only available in full-history coefficients"
            } else {
                "'i' is not available in initial values"
            };
            return Err(semantic(pos.line, pos.col, msg));
        }
        if ring == RingKind::Rational && e.mentions(Var::X) {
            return Err(semantic(pos.line, pos.col, "'x' requires ring = poly"));
        }
        if e.x_free_positions().iter().any(|s| s.mentions(Var::X)) {
            return Err(semantic(
                pos.line,
                pos.col,
                "'x' may not appear in a denominator or delta argument",
            ));
        }
        Ok(())
    };
    for e in &doc.initials {
        check_vars(e, initial_pos, false, false)?;
    }
    for (e, pos) in doc.coeffs.iter().zip(&coeff_pos) {
        check_vars(e, *pos, true, mode == Mode::FullHistory)?;
    }
    if let Some((e, pos)) = &perturb {
        check_vars(e, *pos, true, true)?;
    }

    // Best-effort probe for denominators that vanish inside the validity range.
    let probe_err = |pos: Pos, err: EvalError| semantic(pos.line, pos.col, format!("{err}"));
    for e in &doc.initials {
        eval_expr(e, &Bindings::default()).map_err(|err| probe_err(initial_pos, err))?;
    }
    let ki_probe = |e: &Expr, pos: Pos| -> Result<(), ParseError> {
        for k in 1..=3 {
            for i in 1..=k {
                eval_expr(e, &Bindings::ki(k, i)).map_err(|err| probe_err(pos, err))?;
            }
        }
        Ok(())
    };
    match mode {
        Mode::FixedOrder => {
            let fvk = doc.first_valid_k as usize;
            let m = doc.coeffs.len();
            for (e, pos) in doc.coeffs.iter().zip(&coeff_pos) {
                for k in fvk..=fvk + 2 * m {
                    eval_expr(e, &Bindings::k(k)).map_err(|err| probe_err(*pos, err))?;
                }
            }
        }
        Mode::FullHistory => ki_probe(&doc.coeffs[0], coeff_pos[0])?,
    }
    if let Some((e, pos)) = &perturb {
        ki_probe(e, *pos)?;
    }
    Ok(doc)
}

/// A document turned into an evaluable specification.
#[derive(Clone)]
pub struct LoadedSpec {
    pub spec: AnySpec,
    /// Matrix-only additive term from `coeff perturb(k,i)`, called as `(k, i)`.
    pub perturbation: Option<CoeffFn>,
    pub ring: RingKind,
}

fn undefined(k: usize, err: EvalError) -> RecurrenceError {
    RecurrenceError::Undefined {
        k,
        detail: err.to_string(),
    }
}

fn coeff_closure(e: Expr) -> CoeffFn {
    let e = Arc::new(e);
    Arc::new(move |k: usize, i: usize| eval_expr(&e, &Bindings::ki(k, i)).map_err(|err| undefined(k, err)))
}

/// Builds the specification a document describes. Initial values are
/// represented in the document's ring.
pub fn to_spec(doc: &SpecDocument) -> Result<LoadedSpec, RecurrenceError> {
    let initials = doc
        .initials
        .iter()
        .map(|e| {
            eval_expr(e, &Bindings::default())
                .map_err(|err| undefined(0, err))?
                .into_kind(doc.ring)
                .map_err(RecurrenceError::from)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let spec = match doc.mode {
        Mode::FixedOrder => {
            let bands: Vec<BandFn> = doc
                .coeffs
                .iter()
                .map(|e| {
                    let e = Arc::new(e.clone());
                    let f: BandFn =
                        Arc::new(move |k: usize| eval_expr(&e, &Bindings::k(k)).map_err(|err| undefined(k, err)));
                    f
                })
                .collect();
            AnySpec::FixedOrder(FixedOrderSpec::new(initials, bands, doc.first_valid_k as usize)?)
        }
        Mode::FullHistory => {
            let initial = initials.into_iter().next().ok_or(RecurrenceError::EmptyRequest)?;
            AnySpec::FullHistory(FullHistorySpec::from_coeff_fn(initial, coeff_closure(doc.coeffs[0].clone())))
        }
    };
    Ok(LoadedSpec {
        spec,
        perturbation: doc.perturb.clone().map(coeff_closure),
        ring: doc.ring,
    })
}

/// [`parse`] followed by [`to_spec`].
pub fn load(text: &str) -> Result<LoadedSpec, LoadError> {
    let doc = parse(text)?;
    Ok(to_spec(&doc)?)
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Spec(#[from] RecurrenceError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hessenberg::DetMethod;
    use crate::recurrence::verify_spec_with;

    const FIB: &str = "mode = fixed-order\nring = rational\norder = 2\ninitial = [1, 1]\ncoeff p1(k) = 1\ncoeff p2(k) = 1\n";

    #[test]
    fn fibonacci_file() {
        let doc = parse(FIB).unwrap();
        assert_eq!(doc.mode, Mode::FixedOrder);
        assert_eq!(doc.order(), Some(2));
        assert_eq!(doc.initials, vec![Expr::int(1), Expr::int(1)]);
        assert_eq!(doc.coeffs, vec![Expr::int(1), Expr::int(1)]);
        assert_eq!(doc.first_valid_k, 3);
        let loaded = to_spec(&doc).unwrap();
        let terms: Vec<String> = loaded.spec.eval(7).unwrap().terms().iter().map(ToString::to_string).collect();
        assert_eq!(terms, ["1", "1", "2", "3", "5", "8", "13"]);
    }

    #[test]
    fn round_trip() {
        let doc = parse(FIB).unwrap();
        assert_eq!(parse(&render(&doc)).unwrap(), doc);
        assert_eq!(
            render(&doc),
            "mode = fixed-order\nring = rational\norder = 2\ninitial = [1, 1]\ncoeff p1(k) = 1\ncoeff p2(k) = 1\nfirst_valid_k = 3\n"
        );
    }

    #[test]
    fn smallest_full_history_document() {
        let doc = parse("mode = full-history\ninitial = 0\ncoeff p(k,i) = 0\n").unwrap();
        let text = render(&doc);
        assert_eq!(text.lines().count(), 5);
        assert_eq!(parse(&text).unwrap(), doc);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = format!("# Fibonacci\n\n   # indented\n{FIB}\n");
        assert_eq!(parse(&text).unwrap(), parse(FIB).unwrap());
    }

    #[test]
    fn incomplete_document() {
        let err = parse("order = 2").unwrap_err();
        assert!(matches!(err, ParseError::Semantic { line: 2, col: 1, .. }), "{err:?}");
    }

    #[test]
    fn probe_catches_vanishing_denominator() {
        let base = "mode = fixed-order\norder = 1\ninitial = [1]\ncoeff p1(k) = 1/(k-2)\n";
        let err = parse(&format!("{base}first_valid_k = 2\n")).unwrap_err();
        assert!(matches!(err, ParseError::Semantic { line: 4, .. }), "{err:?}");
        let err = parse(&format!("{base}first_valid_k = 3\n"));
        assert!(err.is_ok(), "{err:?}");
        let base2 = "mode = fixed-order\norder = 2\ninitial = [1, 1]\ncoeff p1(k) = 1/(k-2)\ncoeff p2(k) = 1\n";
        assert!(parse(&format!("{base2}first_valid_k = 3\n")).is_ok());
        let bad = "mode = fixed-order\norder = 2\ninitial = [1, 1]\ncoeff p1(k) = 1/(k-3)\ncoeff p2(k) = 1\n";
        assert!(matches!(parse(bad), Err(ParseError::Semantic { line: 4, .. })));
        assert!(parse(&format!("{bad}first_valid_k = 4\n")).is_ok());
    }

    #[test]
    fn semantic_errors() {
        let cases = [
            ("mode = fixed-order\nmode = fixed-order\n", 2),
            ("mode = fixed-order\norder = 1\ninitial = [1]\ncoeff p1(k) = i\n", 4),
            ("mode = fixed-order\norder = 1\ninitial = [1]\ncoeff p1(k,i) = 1\n", 4),
            ("mode = fixed-order\norder = 1\ninitial = [1]\ncoeff p1(k) = 1\ncoeff p2(k) = 1\n", 5),
            ("mode = fixed-order\norder = 2\ninitial = [1]\ncoeff p1(k) = 1\ncoeff p2(k) = 1\n", 3),
            ("mode = fixed-order\nring = poly\norder = 1\ninitial = [1]\ncoeff p1(k) = 1/x\n", 5),
            ("mode = fixed-order\norder = 1\ninitial = [1]\ncoeff p1(k) = x\n", 4),
            ("mode = full-history\ninitial = k\ncoeff p(k,i) = 1\n", 2),
            ("mode = full-history\ninitial = 1\ncoeff p(k,i) = 1\nfirst_valid_k = 3\n", 4),
            ("mode = full-history\ninitial = 1\ncoeff p(k,i) = 1/(i-2)\n", 3),
            ("mode = sideways\n", 1),
            ("mode = full-history\nring = complex\n", 2),
            ("mode = fixed-order\norder = 1\ninitial = [1]\ncoeff p1(k) = [1]\n", 4),
        ];
        for (text, line) in cases {
            match parse(text) {
                Err(ParseError::Semantic { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn syntax_errors() {
        let cases = [
            ("mode fixed-order\n", 1, 6),
            ("mode = fixed-order\norder = 2 # two\n", 2, 11),
            ("colour = red\n", 1, 1),
            ("mode = full-history\ninitial = [1, 2\n", 2, 16),
            ("order = -2\n", 1, 9),
        ];
        for (text, line, col) in cases {
            match parse(text) {
                Err(ParseError::Syntax { line: l, col: c, .. }) => assert_eq!((l, c), (line, col), "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn naturals_with_delta() {
        let text = "mode = full-history\ninitial = 1\ncoeff p(k,i) = delta(i, 1) + delta(i, k) - delta(k, 1)\n";
        let loaded = load(text).unwrap();
        let m = loaded.spec.matrix(3).unwrap();
        let rows: Vec<Vec<String>> = m.rows().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        assert_eq!(rows, [["1", "1", "1"], ["-1", "1", "0"], ["0", "-1", "1"]]);
        let report = crate::recurrence::verify_spec("naturals", &loaded.spec, 10, DetMethod::Fast).unwrap();
        assert!(report.pass);
    }

    #[test]
    fn perturbation_breaks_verification() {
        let text = format!("{FIB}coeff perturb(k,i) = delta(k, 4)*delta(i, 4)\n");
        let loaded = load(&text).unwrap();
        let report =
            verify_spec_with("bad", &loaded.spec, 6, DetMethod::Fast, loaded.perturbation.as_ref()).unwrap();
        assert!(!report.pass);
        assert_eq!(report.first_failure(), Some(4));
    }

    #[test]
    fn poly_ring_promotes_initials() {
        let text = "mode = fixed-order\nring = poly\norder = 2\ninitial = [1, x]\ncoeff p1(k) = 1\ncoeff p2(k) = x\n";
        let loaded = load(text).unwrap();
        assert_eq!(loaded.spec.ring_hint(), RingKind::Poly);
        assert_eq!(loaded.spec.eval(3).unwrap().term(3).unwrap().to_string(), "x^2 + 1");
    }
}
