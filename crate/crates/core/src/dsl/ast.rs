use num_bigint::BigUint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    K,
    I,
    X,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::K => "k",
            Var::I => "i",
            Var::X => "x",
        }
    }
}

/// Expression tree. Literals are non-negative; a leading minus is always a
/// [`Expr::Neg`] node, which keeps parsing and rendering inverse to each other.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Int(BigUint),
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    /// Kronecker delta: `1` if both sides are equal, else `0`.
    Delta(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn int(v: u64) -> Expr {
        Expr::Int(BigUint::from(v))
    }

    pub fn var(v: Var) -> Expr {
        Expr::Var(v)
    }

    pub fn children(&self) -> Vec<&Expr> {
        match self {
            Expr::Int(_) | Expr::Var(_) => vec![],
            Expr::Neg(e) => vec![e],
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) | Expr::Delta(a, b) => {
                vec![a, b]
            }
        }
    }

    pub fn mentions(&self, var: Var) -> bool {
        match self {
            Expr::Var(v) => *v == var,
            _ => self.children().into_iter().any(|c| c.mentions(var)),
        }
    }

    /// Every subexpression that must be free of `x`: denominators and delta
    /// arguments.
    pub fn x_free_positions(&self) -> Vec<&Expr> {
        let mut out = Vec::new();
        self.collect_x_free(&mut out);
        out
    }

    fn collect_x_free<'a>(&'a self, out: &mut Vec<&'a Expr>) {
        match self {
            Expr::Div(_, d) => out.push(d),
            Expr::Delta(a, b) => {
                out.push(a);
                out.push(b);
            }
            _ => {}
        }
        for c in self.children() {
            c.collect_x_free(out);
        }
    }

    pub fn depth(&self) -> usize {
        1 + self.children().into_iter().map(Expr::depth).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    FixedOrder,
    FullHistory,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::FixedOrder => "fixed-order",
            Mode::FullHistory => "full-history",
        }
    }
}

/// A parsed recurrence file.
///
/// Fixed-order documents hold `order` initial values and coefficient
/// expressions `p1(k)..pm(k)`; full-history documents hold one initial value
/// and the single expression `p(k,i)`. `first_valid_k` is always resolved
/// (default `m + 1`, or `1` for full-history). The optional `perturb(k,i)`
/// expression is added to the determinant matrix only and exists to build
/// negative controls.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecDocument {
    pub mode: Mode,
    pub ring: crate::ring::RingKind,
    pub initials: Vec<Expr>,
    pub coeffs: Vec<Expr>,
    pub perturb: Option<Expr>,
    pub first_valid_k: u64,
}

impl SpecDocument {
    /// The recurrence order: number of coefficient expressions for fixed-order
    /// documents, `None` for full-history.
    pub fn order(&self) -> Option<usize> {
        match self.mode {
            Mode::FixedOrder => Some(self.coeffs.len()),
            Mode::FullHistory => None,
        }
    }
}
