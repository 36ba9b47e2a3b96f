//! Expressions over the plane generators `x, y`, the quantum-group
//! generators `a, b, c, d` and the scalar `q`.
//!
//! ```text
//! expr   := ('+' | '-')? term (('+' | '-') term)*
//! term   := factor (('*' | '·')? factor)*
//! factor := atom ('^' '-'? int)?
//! atom   := symbol | int | '(' expr ')'
//! ```

use std::fmt;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    X,
    Y,
    A,
    B,
    C,
    D,
    Q,
}

impl Symbol {
    fn from_char(c: char) -> Option<Symbol> {
        Some(match c {
            'x' => Symbol::X,
            'y' => Symbol::Y,
            'a' => Symbol::A,
            'b' => Symbol::B,
            'c' => Symbol::C,
            'd' => Symbol::D,
            'q' => Symbol::Q,
            _ => return None,
        })
    }

    pub fn as_char(self) -> char {
        match self {
            Symbol::X => 'x',
            Symbol::Y => 'y',
            Symbol::A => 'a',
            Symbol::B => 'b',
            Symbol::C => 'c',
            Symbol::D => 'd',
            Symbol::Q => 'q',
        }
    }

    pub fn algebra(self) -> Option<Algebra> {
        match self {
            Symbol::X | Symbol::Y => Some(Algebra::Plane),
            Symbol::A | Symbol::B | Symbol::C | Symbol::D => Some(Algebra::QuantumGroup),
            Symbol::Q => None,
        }
    }
}

/// Which algebra an expression lives in; scalar-only expressions default to the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    Plane,
    QuantumGroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Sym(Symbol),
    Pow(Box<Expr>, i64),
    Mul(Vec<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
}

impl Expr {
    /// The algebra implied by the symbols, or an error if plane and
    /// quantum-group generators are mixed.
    pub fn algebra(&self) -> Result<Algebra, ExprError> {
        let mut plane = None;
        let mut quantum = None;
        self.visit_symbols(&mut |s| match s.algebra() {
            Some(Algebra::Plane) => plane = plane.or(Some(s)),
            Some(Algebra::QuantumGroup) => quantum = quantum.or(Some(s)),
            None => {}
        });
        match (plane, quantum) {
            (Some(p), Some(f)) => Err(ExprError::MixedAlgebra { plane: p.as_char(), quantum: f.as_char() }),
            (None, Some(_)) => Ok(Algebra::QuantumGroup),
            _ => Ok(Algebra::Plane),
        }
    }

    fn visit_symbols(&self, f: &mut impl FnMut(Symbol)) {
        match self {
            Expr::Int(_) => {}
            Expr::Sym(s) => f(*s),
            Expr::Pow(b, _) | Expr::Neg(b) => b.visit_symbols(f),
            Expr::Mul(v) => v.iter().for_each(|e| e.visit_symbols(f)),
            Expr::Add(l, r) | Expr::Sub(l, r) => {
                l.visit_symbols(f);
                r.visit_symbols(f);
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(k) => write!(f, "{k}"),
            Expr::Sym(s) => write!(f, "{}", s.as_char()),
            Expr::Pow(base, e) => match **base {
                Expr::Int(_) | Expr::Sym(_) => write!(f, "{base}^{e}"),
                _ => write!(f, "({base})^{e}"),
            },
            Expr::Mul(factors) => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    match factor {
                        Expr::Int(_) | Expr::Sym(_) | Expr::Pow(..) => write!(f, "{factor}")?,
                        _ => write!(f, "({factor})")?,
                    }
                }
                Ok(())
            }
            Expr::Add(l, r) | Expr::Sub(l, r) => {
                let op = if matches!(self, Expr::Add(..)) { "+" } else { "-" };
                write!(f, "{l} {op} ")?;
                match **r {
                    Expr::Add(..) | Expr::Sub(..) | Expr::Neg(_) => write!(f, "({r})"),
                    _ => write!(f, "{r}"),
                }
            }
            Expr::Neg(inner) => match **inner {
                Expr::Add(..) | Expr::Sub(..) | Expr::Neg(_) => write!(f, "-({inner})"),
                _ => write!(f, "-{inner}"),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at position {position}: expected {}, found {found}", expected.join(" or "))]
    Syntax { position: usize, expected: Vec<&'static str>, found: String },

    #[error("cannot mix plane generator `{plane}` with quantum-group generator `{quantum}`")]
    MixedAlgebra { plane: char, quantum: char },

    #[error("negative exponent on a non-invertible factor `{0}`")]
    NonInvertible(String),

    #[error(transparent)]
    Algebra(#[from] crate::error::AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(i64),
    Sym(Symbol),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(k) => format!("integer {k}"),
            Token::Sym(s) => format!("symbol `{}`", s.as_char()),
            Token::Plus => "`+`".into(),
            Token::Minus => "`-`".into(),
            Token::Star => "`*`".into(),
            Token::Caret => "`^`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::End => "end of input".into(),
        }
    }
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ExprError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        i += 1;
        let tok = match c {
            c if c.is_whitespace() => continue,
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' | '·' => Token::Star,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '0'..='9' => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let value = text.parse().map_err(|_| ExprError::Syntax {
                    position: start,
                    expected: vec!["integer that fits in 64 bits"],
                    found: text.clone(),
                })?;
                Token::Int(value)
            }
            c => match Symbol::from_char(c) {
                Some(s) => Token::Sym(s),
                None => {
                    return Err(ExprError::Syntax {
                        position: start,
                        expected: vec!["symbol", "integer", "operator"],
                        found: format!("character `{c}`"),
                    })
                }
            },
        };
        out.push((start, tok));
    }
    out.push((chars.len(), Token::End));
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].1
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].1.clone();
        if t != Token::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: Vec<&'static str>) -> ExprError {
        let (position, tok) = &self.tokens[self.pos];
        ExprError::Syntax { position: *position, expected, found: tok.describe() }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = match self.peek() {
            Token::Minus => {
                self.bump();
                Expr::Neg(Box::new(self.term()?))
            }
            Token::Plus => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Token::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Token::Star => {
                    self.bump();
                    factors.push(self.factor()?);
                }
                Token::Int(_) | Token::Sym(_) | Token::LParen => factors.push(self.factor()?),
                _ => break,
            }
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Expr::Mul(factors) })
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if *self.peek() != Token::Caret {
            return Ok(base);
        }
        self.bump();
        let negative = if *self.peek() == Token::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.peek() {
            Token::Int(k) => {
                let k = *k;
                self.bump();
                Ok(Expr::Pow(Box::new(base), if negative { -k } else { k }))
            }
            _ => Err(self.error(if negative { vec!["integer"] } else { vec!["integer", "`-`"] })),
        }
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek().clone() {
            Token::Int(k) => {
                self.bump();
                Ok(Expr::Int(k))
            }
            Token::Sym(s) => {
                self.bump();
                Ok(Expr::Sym(s))
            }
            Token::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Token::RParen {
                    return Err(self.error(vec!["`)`", "`+`", "`-`", "`*`"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(vec!["symbol", "integer", "`(`"])),
        }
    }
}

/// Parses an expression and rejects mixed plane/quantum-group input.
pub fn parse(input: &str) -> Result<Expr, ExprError> {
    let mut p = Parser { tokens: tokenize(input)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Token::End {
        return Err(p.error(vec!["`+`", "`-`", "`*`", "end of input"]));
    }
    e.algebra()?;
    Ok(e)
}
