//! Observable expressions such as `0.5*(kron(P^2,I)+kron(I,P^2))+kron(X,X)`.
//!
//! Tokens: `X`, `P` (one qudit), `XG`, `PG` (whole system), `I`, `kron(a, b, ...)`,
//! real constants, `+`, `-`, `*`, `^` with a non-negative integer exponent,
//! and parentheses. `kron` puts its first argument on component 0. `I` and bare
//! constants take whatever dimension their context needs.

use num_complex::Complex64;
use qps_core::dynamics::{global_momentum, global_position, momentum_operator, position_operator};
use qps_core::linalg::{tensor_product, ComplexMatrix};
use qps_core::{QpsError, SystemShape};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExprError {
    #[error("parse error at column {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Eval(String),
    #[error(transparent)]
    Core(#[from] QpsError),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(f64),
    Ident(String),
    Op(char),
    LParen,
    RParen,
    Comma,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>, ExprError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            ' ' | '\t' | '\n' => {
                i += 1;
                continue;
            }
            '0'..='9' | '.' => {
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    i += 1;
                }
                if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                    let mut j = i + 1;
                    if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                        j += 1;
                    }
                    if j < chars.len() && chars[j].is_ascii_digit() {
                        i = j;
                        while i < chars.len() && chars[i].is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let text: String = chars[start..i].iter().collect();
                let v = text.parse().map_err(|_| ExprError::Parse {
                    pos: start + 1,
                    msg: format!("bad number {text:?}"),
                })?;
                out.push((start, Token::Num(v)));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((start, Token::Ident(chars[start..i].iter().collect())));
                continue;
            }
            '+' | '-' | '*' | '^' => out.push((start, Token::Op(c))),
            '(' => out.push((start, Token::LParen)),
            ')' => out.push((start, Token::RParen)),
            ',' => out.push((start, Token::Comma)),
            other => {
                return Err(ExprError::Parse {
                    pos: start + 1,
                    msg: format!("unexpected character {other:?}"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
enum Node {
    Num(f64),
    Atom(Atom),
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Pow(Box<Node>, u32),
    Kron(Vec<Node>),
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Atom {
    X,
    P,
    XG,
    PG,
    I,
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.len + 1, |(p, _)| p + 1)
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Parse {
            pos: self.column(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, t: Token, what: &str) -> Result<(), ExprError> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(format!("expected {what}"))
        }
    }

    fn sum(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.product()?;
        while let Some(Token::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.product()?;
            lhs = if c == '+' {
                Node::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Node::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.unary()?;
        while let Some(Token::Op('*')) = self.peek() {
            self.pos += 1;
            lhs = Node::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Node, ExprError> {
        if let Some(Token::Op('-')) = self.peek() {
            self.pos += 1;
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        if let Some(Token::Op('+')) = self.peek() {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node, ExprError> {
        let base = self.primary()?;
        if let Some(Token::Op('^')) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Token::Num(e)) if e >= 0.0 && e.fract() == 0.0 && e <= u32::MAX as f64 => {
                    self.pos += 1;
                    return Ok(Node::Pow(Box::new(base), e as u32));
                }
                _ => return self.fail("exponent must be a non-negative integer"),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Node, ExprError> {
        match self.peek().cloned() {
            Some(Token::Num(v)) => {
                self.pos += 1;
                Ok(Node::Num(v))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.sum()?;
                self.expect(Token::RParen, "')'")?;
                Ok(inner)
            }
            Some(Token::Ident(name)) => {
                let atom = match name.as_str() {
                    "X" => Atom::X,
                    "P" => Atom::P,
                    "XG" => Atom::XG,
                    "PG" => Atom::PG,
                    "I" => Atom::I,
                    "kron" => {
                        self.pos += 1;
                        self.expect(Token::LParen, "'(' after kron")?;
                        let mut args = vec![self.sum()?];
                        while self.peek() == Some(&Token::Comma) {
                            self.pos += 1;
                            args.push(self.sum()?);
                        }
                        self.expect(Token::RParen, "')' closing kron")?;
                        return Ok(Node::Kron(args));
                    }
                    _ => return self.fail(format!("unknown name {name:?}")),
                };
                self.pos += 1;
                Ok(Node::Atom(atom))
            }
            Some(_) => self.fail("expected a value"),
            None => self.fail("unexpected end of expression"),
        }
    }
}

/// A parsed expression, ready to evaluate on a system shape.
#[derive(Debug, Clone, PartialEq)]
pub struct Expr(Node);

pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let tokens = tokenize(src)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        len: src.chars().count(),
    };
    let node = p.sum()?;
    if p.pos != p.tokens.len() {
        return p.fail("unexpected trailing input");
    }
    Ok(Expr(node))
}

/// A scalar is a multiple of an identity whose size is fixed by context.
enum Value {
    Scalar(f64),
    Matrix(ComplexMatrix),
}

fn sized(v: Value, dim: usize) -> ComplexMatrix {
    match v {
        Value::Scalar(c) => ComplexMatrix::identity(dim).scale_real(c),
        Value::Matrix(m) => m,
    }
}

fn same_dim(a: &ComplexMatrix, b: &ComplexMatrix, op: &str) -> Result<(), ExprError> {
    if a.rows() == b.rows() {
        Ok(())
    } else {
        Err(ExprError::Eval(format!(
            "{op} of a {0}x{0} and a {1}x{1} operator",
            a.rows(),
            b.rows()
        )))
    }
}

fn eval(node: &Node, shape: &SystemShape) -> Result<Value, ExprError> {
    let d = shape.d();
    Ok(match node {
        Node::Num(v) => Value::Scalar(*v),
        Node::Atom(a) => match a {
            Atom::X => Value::Matrix(position_operator(d)?.matrix().clone()),
            Atom::P => Value::Matrix(momentum_operator(d)?.matrix().clone()),
            Atom::XG => Value::Matrix(global_position(shape)?.matrix().clone()),
            Atom::PG => Value::Matrix(global_momentum(shape)?.matrix().clone()),
            Atom::I => Value::Scalar(1.0),
        },
        Node::Neg(x) => match eval(x, shape)? {
            Value::Scalar(c) => Value::Scalar(-c),
            Value::Matrix(m) => Value::Matrix(m.scale_real(-1.0)),
        },
        Node::Add(a, b) | Node::Sub(a, b) => {
            let sign = if matches!(node, Node::Add(..)) { 1.0 } else { -1.0 };
            match (eval(a, shape)?, eval(b, shape)?) {
                (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + sign * y),
                (Value::Matrix(m), s @ Value::Scalar(_)) => {
                    let dim = m.rows();
                    Value::Matrix(&m + &sized(s, dim).scale_real(sign))
                }
                (s @ Value::Scalar(_), Value::Matrix(m)) => {
                    let dim = m.rows();
                    Value::Matrix(&sized(s, dim) + &m.scale_real(sign))
                }
                (Value::Matrix(x), Value::Matrix(y)) => {
                    same_dim(&x, &y, "sum")?;
                    Value::Matrix(&x + &y.scale_real(sign))
                }
            }
        }
        Node::Mul(a, b) => match (eval(a, shape)?, eval(b, shape)?) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
            (Value::Scalar(c), Value::Matrix(m)) | (Value::Matrix(m), Value::Scalar(c)) => {
                Value::Matrix(m.scale(Complex64::new(c, 0.0)))
            }
            (Value::Matrix(x), Value::Matrix(y)) => {
                same_dim(&x, &y, "product")?;
                Value::Matrix(&x * &y)
            }
        },
        Node::Pow(base, e) => match eval(base, shape)? {
            Value::Scalar(c) => Value::Scalar(c.powi(*e as i32)),
            Value::Matrix(m) => Value::Matrix(m.pow(*e)?),
        },
        Node::Kron(args) => {
            let factors = args
                .iter()
                .map(|a| eval(a, shape).map(|v| sized(v, d)))
                .collect::<Result<Vec<_>, _>>()?;
            Value::Matrix(tensor_product(&factors))
        }
    })
}

impl Expr {
    /// The operator on the whole system; the result must be `d^n x d^n`.
    pub fn evaluate(&self, shape: &SystemShape) -> Result<ComplexMatrix, ExprError> {
        let m = sized(eval(&self.0, shape)?, shape.dim());
        if m.rows() != shape.dim() {
            return Err(ExprError::Eval(format!(
                "expression is {0}x{0} but the system has dimension {1}",
                m.rows(),
                shape.dim()
            )));
        }
        Ok(m)
    }
}
