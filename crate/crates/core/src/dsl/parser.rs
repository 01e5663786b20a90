//! Line-oriented `key = value` reader with a recursive-descent expression
//! parser.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := "-" factor | INT | "k" | "i" | "x"
//!         | "delta" "(" expr "," expr ")" | "(" expr ")"
//! ```

use num_bigint::BigUint;

use super::ast::{Expr, Var};
use super::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(BigUint),
    Ident(String),
    Eq,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("integer {v}"),
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Eq => "'='".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
        }
    }
}

/// Cursor over one line.
pub(crate) struct LineParser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl LineParser {
    pub fn new(src: &str, line: usize) -> Self {
        LineParser {
            chars: src.chars().collect(),
            pos: 0,
            line,
        }
    }

    /// 1-based column of the next unread character.
    pub fn col(&self) -> usize {
        self.pos + 1
    }

    /// Column of the next non-blank character.
    pub fn next_col(&mut self) -> usize {
        self.skip_ws();
        self.col()
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    pub fn syntax(&self, col: usize, expected: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            col,
            expected: expected.into(),
        }
    }

    /// Next token and its column, without consuming it.
    fn peek(&mut self) -> Result<Option<(Tok, usize)>, ParseError> {
        let save = self.pos;
        let out = self.next_tok();
        self.pos = save;
        out
    }

    fn next_tok(&mut self) -> Result<Option<(Tok, usize)>, ParseError> {
        self.skip_ws();
        let col = self.col();
        let Some(&c) = self.chars.get(self.pos) else {
            return Ok(None);
        };
        let single = match c {
            '=' => Some(Tok::Eq),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            _ => None,
        };
        if let Some(t) = single {
            self.pos += 1;
            return Ok(Some((t, col)));
        }
        if c.is_ascii_digit() {
            let start = self.pos;
            while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            let v = digits.parse::<BigUint>().expect("ASCII digits");
            return Ok(Some((Tok::Int(v), col)));
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = self.pos;
            while self
                .chars
                .get(self.pos)
                .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
            {
                self.pos += 1;
            }
            return Ok(Some((Tok::Ident(self.chars[start..self.pos].iter().collect()), col)));
        }
        Err(self.syntax(col, format!("a token, found {c:?}")))
    }

    pub fn expect(&mut self, want: Tok) -> Result<usize, ParseError> {
        let col = self.next_col();
        match self.next_tok()? {
            Some((t, c)) if t == want => Ok(c),
            Some((t, c)) => Err(self.syntax(c, format!("{}, found {}", want.describe(), t.describe()))),
            None => Err(self.syntax(col, format!("{}, found end of line", want.describe()))),
        }
    }

    pub fn ident(&mut self, what: &str) -> Result<(String, usize), ParseError> {
        let col = self.next_col();
        match self.next_tok()? {
            Some((Tok::Ident(s), c)) => Ok((s, c)),
            Some((t, c)) => Err(self.syntax(c, format!("{what}, found {}", t.describe()))),
            None => Err(self.syntax(col, format!("{what}, found end of line"))),
        }
    }

    /// A bare word such as `fixed-order`: letters, digits, `_` and `-`.
    pub fn word(&mut self, what: &str) -> Result<(String, usize), ParseError> {
        self.skip_ws();
        let col = self.col();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_' || *c == '-')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax(col, what));
        }
        Ok((self.chars[start..self.pos].iter().collect(), col))
    }

    pub fn uint(&mut self, what: &str) -> Result<(BigUint, usize), ParseError> {
        let col = self.next_col();
        match self.next_tok()? {
            Some((Tok::Int(v), c)) => Ok((v, c)),
            Some((t, c)) => Err(self.syntax(c, format!("{what}, found {}", t.describe()))),
            None => Err(self.syntax(col, format!("{what}, found end of line"))),
        }
    }

    pub fn at(&mut self, want: &Tok) -> Result<bool, ParseError> {
        Ok(self.peek()?.is_some_and(|(t, _)| &t == want))
    }

    pub fn end(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos < self.chars.len() {
            return Err(self.syntax(self.col(), "end of line"));
        }
        Ok(())
    }

    /// `"[" expr ("," expr)* "]"`
    pub fn list(&mut self) -> Result<Vec<Expr>, ParseError> {
        self.expect(Tok::LBracket)?;
        let mut items = vec![self.expr()?];
        loop {
            let col = self.next_col();
            match self.next_tok()? {
                Some((Tok::Comma, _)) => items.push(self.expr()?),
                Some((Tok::RBracket, _)) => return Ok(items),
                Some((t, c)) => return Err(self.syntax(c, format!("',' or ']', found {}", t.describe()))),
                None => return Err(self.syntax(col, "',' or ']', found end of line")),
            }
        }
    }

    pub fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek()? {
                Some((Tok::Plus, _)) => {
                    self.next_tok()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some((Tok::Minus, _)) => {
                    self.next_tok()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek()? {
                Some((Tok::Star, _)) => {
                    self.next_tok()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some((Tok::Slash, _)) => {
                    self.next_tok()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        const WANT: &str = "an expression (integer, k, i, x, delta, '(' or '-')";
        let col = self.next_col();
        match self.next_tok()? {
            Some((Tok::Minus, _)) => Ok(Expr::Neg(Box::new(self.factor()?))),
            Some((Tok::Int(v), _)) => Ok(Expr::Int(v)),
            Some((Tok::Ident(name), c)) => match name.as_str() {
                "k" => Ok(Expr::Var(Var::K)),
                "i" => Ok(Expr::Var(Var::I)),
                "x" => Ok(Expr::Var(Var::X)),
                "delta" => {
                    self.expect(Tok::LParen)?;
                    let a = self.expr()?;
                    self.expect(Tok::Comma)?;
                    let b = self.expr()?;
                    self.expect(Tok::RParen)?;
                    Ok(Expr::Delta(Box::new(a), Box::new(b)))
                }
                _ => Err(self.syntax(c, format!("{WANT}, found '{name}'"))),
            },
            Some((Tok::LParen, _)) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Some((t, c)) => Err(self.syntax(c, format!("{WANT}, found {}", t.describe()))),
            None => Err(self.syntax(col, format!("{WANT}, found end of line"))),
        }
    }
}

/// Parses a single expression (the whole string).
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = LineParser::new(src, 1);
    let e = p.expr()?;
    p.end()?;
    Ok(e)
}
