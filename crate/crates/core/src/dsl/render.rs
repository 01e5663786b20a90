use std::fmt::Write;

use super::ast::{Expr, Mode, SpecDocument};

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Neg(_) => 3,
        Expr::Int(_) | Expr::Var(_) | Expr::Delta(..) => 4,
    }
}

fn operand(out: &mut String, e: &Expr, parens: bool) {
    if parens {
        out.push('(');
        write_expr(out, e);
        out.push(')');
    } else {
        write_expr(out, e);
    }
}

fn write_expr(out: &mut String, e: &Expr) {
    match e {
        Expr::Int(v) => write!(out, "{v}").expect("string write"),
        Expr::Var(v) => out.push_str(v.name()),
        Expr::Neg(inner) => {
            out.push('-');
            operand(out, inner, prec(inner) < 3);
        }
        Expr::Delta(a, b) => {
            out.push_str("delta(");
            write_expr(out, a);
            out.push_str(", ");
            write_expr(out, b);
            out.push(')');
        }
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
            let p = prec(e);
            let op = match e {
                Expr::Add(..) => " + ",
                Expr::Sub(..) => " - ",
                Expr::Mul(..) => "*",
                _ => "/",
            };
            // Left-associative: the right operand needs parens at equal
            // precedence, the left one only below it.
            operand(out, a, prec(a) < p);
            out.push_str(op);
            operand(out, b, prec(b) <= p);
        }
    }
}

/// Text form of an expression with the fewest parentheses that re-parse to
/// the same tree.
pub fn render_expr(e: &Expr) -> String {
    let mut out = String::new();
    write_expr(&mut out, e);
    out
}

/// Canonical document text; [`super::parse`] maps it back to `doc`.
pub fn render(doc: &SpecDocument) -> String {
    let mut out = String::new();
    writeln!(out, "mode = {}", doc.mode.as_str()).expect("string write");
    writeln!(out, "ring = {}", doc.ring.as_str()).expect("string write");
    if doc.mode == Mode::FixedOrder {
        writeln!(out, "order = {}", doc.coeffs.len()).expect("string write");
    }
    let initials: Vec<String> = doc.initials.iter().map(render_expr).collect();
    writeln!(out, "initial = [{}]", initials.join(", ")).expect("string write");
    match doc.mode {
        Mode::FixedOrder => {
            for (idx, c) in doc.coeffs.iter().enumerate() {
                writeln!(out, "coeff p{}(k) = {}", idx + 1, render_expr(c)).expect("string write");
            }
        }
        Mode::FullHistory => {
            for c in &doc.coeffs {
                writeln!(out, "coeff p(k,i) = {}", render_expr(c)).expect("string write");
            }
        }
    }
    if let Some(p) = &doc.perturb {
        writeln!(out, "coeff perturb(k,i) = {}", render_expr(p)).expect("string write");
    }
    writeln!(out, "first_valid_k = {}", doc.first_valid_k).expect("string write");
    out
}

#[cfg(test)]
mod tests {
    use super::super::parser::parse_expr;
    use super::*;

    #[test]
    fn minimal_parens() {
        for (src, want) in [
            ("1-2-3", "1 - 2 - 3"),
            ("1-(2-3)", "1 - (2 - 3)"),
            ("(2*k+1)/(k+1)", "(2*k + 1)/(k + 1)"),
            ("-1/((k-2)*(k-1))", "-1/((k - 2)*(k - 1))"),
            ("--k", "--k"),
            ("-(k+1)", "-(k + 1)"),
            ("-(k*2)", "-(k*2)"),
            ("k/(2/k)", "k/(2/k)"),
            ("(k/2)/k", "k/2/k"),
            ("delta(i,k-1)*x", "delta(i, k - 1)*x"),
        ] {
            let e = parse_expr(src).unwrap();
            assert_eq!(render_expr(&e), want, "{src}");
            assert_eq!(parse_expr(&render_expr(&e)).unwrap(), e, "{src}");
        }
    }
}
