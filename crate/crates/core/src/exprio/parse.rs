use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::exactnum::{FieldDescriptor, FieldElement, Rational};
use crate::poly::{BiPoly, UniPoly, Var};
use crate::ratfunc::{ExtendedValue, RationalFunction};

/// Exponents above this are rejected rather than expanded.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError { offset, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = std::result::Result<T, ParseError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    Z,
    X,
    Y,
    /// `i`, the same as `zeta(4)`.
    I,
    Zeta(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Int(BigInt),
    Sym(Symbol),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// Syntax tree node; `offset` is where the node starts (for binary nodes,
/// where the operator is).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Punct(char),
    End,
}

fn tokenize(text: &str) -> PResult<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut k = 0;
    while k < bytes.len() {
        let c = bytes[k];
        if c.is_ascii_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < bytes.len() && bytes[k].is_ascii_digit() {
                k += 1;
            }
            let n: BigInt = text[start..k].parse().expect("ascii digits");
            out.push((Tok::Int(n), start));
        } else if c.is_ascii_alphabetic() {
            let start = k;
            while k < bytes.len() && bytes[k].is_ascii_alphanumeric() {
                k += 1;
            }
            out.push((Tok::Ident(text[start..k].to_string()), start));
        } else if b"+-*/^(),".contains(&c) {
            out.push((Tok::Punct(c as char), k));
            k += 1;
        } else {
            let ch = text[k..].chars().next().expect("non-empty");
            return Err(ParseError::new(k, format!("unexpected character '{ch}'")));
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        match self.peek() {
            Tok::Punct(p) if *p == c => {
                self.bump();
                Ok(())
            }
            _ => Err(self.unexpected(&format!("expected '{c}'"))),
        }
    }

    fn unexpected(&self, what: &str) -> ParseError {
        let found = match self.peek() {
            Tok::End => "end of input".to_string(),
            Tok::Int(n) => format!("'{n}'"),
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Punct(c) => format!("'{c}'"),
        };
        ParseError::new(self.offset(), format!("{what}, found {found}"))
    }

    fn uint(&mut self, what: &str) -> PResult<(u32, usize)> {
        match self.peek().clone() {
            Tok::Int(n) => {
                let (_, at) = self.bump();
                let v = n.to_u32().ok_or_else(|| ParseError::new(at, format!("{what} too large")))?;
                Ok((v, at))
            }
            _ => Err(self.unexpected(&format!("expected {what}"))),
        }
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Punct('+') => BinOp::Add,
                Tok::Punct('-') => BinOp::Sub,
                _ => return Ok(lhs),
            };
            let (_, at) = self.bump();
            let rhs = self.term()?;
            lhs = Expr { kind: ExprKind::Bin(op, Box::new(lhs), Box::new(rhs)), offset: at };
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Punct('*') => BinOp::Mul,
                Tok::Punct('/') => BinOp::Div,
                _ => return Ok(lhs),
            };
            let (_, at) = self.bump();
            let rhs = self.unary()?;
            lhs = Expr { kind: ExprKind::Bin(op, Box::new(lhs), Box::new(rhs)), offset: at };
        }
    }

    fn unary(&mut self) -> PResult<Expr> {
        if let Tok::Punct('-') = self.peek() {
            let (_, at) = self.bump();
            let inner = self.unary()?;
            return Ok(Expr { kind: ExprKind::Neg(Box::new(inner)), offset: at });
        }
        self.power()
    }

    fn power(&mut self) -> PResult<Expr> {
        let base = self.primary()?;
        if let Tok::Punct('^') = self.peek() {
            self.bump();
            let (e, at) = self.uint("nonnegative integer exponent")?;
            if e > MAX_EXPONENT {
                return Err(ParseError::new(at, format!("exponent {e} exceeds {MAX_EXPONENT}")));
            }
            let offset = base.offset;
            return Ok(Expr { kind: ExprKind::Pow(Box::new(base), e), offset });
        }
        Ok(base)
    }

    fn primary(&mut self) -> PResult<Expr> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr { kind: ExprKind::Int(n), offset: at })
            }
            Tok::Punct('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.bump();
                let sym = match name.as_str() {
                    "z" => Symbol::Z,
                    "X" => Symbol::X,
                    "Y" => Symbol::Y,
                    "i" => Symbol::I,
                    "zeta" => {
                        self.expect('(')?;
                        let (r, rat) = self.uint("root-of-unity order")?;
                        if r == 0 {
                            return Err(ParseError::new(rat, "zeta(0) is undefined"));
                        }
                        self.expect(')')?;
                        Symbol::Zeta(r)
                    }
                    _ => return Err(ParseError::new(at, format!("unknown symbol '{name}'"))),
                };
                Ok(Expr { kind: ExprKind::Sym(sym), offset: at })
            }
            _ => Err(self.unexpected("expected a number, symbol or '('")),
        }
    }
}

/// Parses text into a syntax tree without interpreting symbols.
pub fn parse_expr(text: &str) -> PResult<Expr> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0 };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        Tok::Int(_) | Tok::Ident(_) | Tok::Punct('(') => {
            Err(p.unexpected("implicit multiplication is not supported; use '*'"))
        }
        _ => Err(p.unexpected("expected an operator or end of input")),
    }
}

/// Values an expression can be elaborated into.
trait Algebra: Sized + Clone {
    fn scalar(c: FieldElement) -> Self;
    fn variable(field: &FieldDescriptor, s: Symbol, at: usize) -> PResult<Self>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self, at: usize) -> PResult<Self>;
    fn neg(&self) -> Self;
    fn pow(&self, e: u32) -> Self;
}

fn no_variable(s: Symbol, at: usize, what: &str) -> ParseError {
    let name = match s {
        Symbol::Z => "z",
        Symbol::X => "X",
        Symbol::Y => "Y",
        Symbol::I | Symbol::Zeta(_) => unreachable!("constants are not variables"),
    };
    ParseError::new(at, format!("variable '{name}' is not allowed in {what}"))
}

impl Algebra for FieldElement {
    fn scalar(c: FieldElement) -> Self {
        c
    }
    fn variable(_: &FieldDescriptor, s: Symbol, at: usize) -> PResult<Self> {
        Err(no_variable(s, at, "a field element"))
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self, at: usize) -> PResult<Self> {
        self.checked_div(o).map_err(|_| ParseError::new(at, "division by zero"))
    }
    fn neg(&self) -> Self {
        -self
    }
    fn pow(&self, e: u32) -> Self {
        FieldElement::pow(self, e)
    }
}

/// Unreduced quotient of polynomials in z.
#[derive(Clone)]
struct Frac {
    num: UniPoly,
    den: UniPoly,
}

impl Algebra for Frac {
    fn scalar(c: FieldElement) -> Self {
        let one = FieldElement::one(c.field());
        Frac { num: UniPoly::constant(c), den: UniPoly::constant(one) }
    }
    fn variable(field: &FieldDescriptor, s: Symbol, at: usize) -> PResult<Self> {
        match s {
            Symbol::Z => Ok(Frac { num: UniPoly::x(field), den: UniPoly::one(field) }),
            _ => Err(no_variable(s, at, "a function of z")),
        }
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Frac { num: &self.num + &o.num, den: self.den.clone() };
        }
        Frac { num: &(&self.num * &o.den) + &(&o.num * &self.den), den: &self.den * &o.den }
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        Frac { num: &self.num * &o.num, den: &self.den * &o.den }
    }
    fn div(&self, o: &Self, at: usize) -> PResult<Self> {
        if o.num.is_zero() {
            return Err(ParseError::new(at, "division by zero"));
        }
        Ok(Frac { num: &self.num * &o.den, den: &self.den * &o.num })
    }
    fn neg(&self) -> Self {
        Frac { num: -&self.num, den: self.den.clone() }
    }
    fn pow(&self, e: u32) -> Self {
        Frac { num: self.num.pow(e), den: self.den.pow(e) }
    }
}

impl Algebra for BiPoly {
    fn scalar(c: FieldElement) -> Self {
        BiPoly::constant(c)
    }
    fn variable(field: &FieldDescriptor, s: Symbol, at: usize) -> PResult<Self> {
        match s {
            Symbol::X => Ok(BiPoly::var(field, Var::X)),
            Symbol::Y => Ok(BiPoly::var(field, Var::Y)),
            _ => Err(no_variable(s, at, "a polynomial in X and Y")),
        }
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self, at: usize) -> PResult<Self> {
        match (o.total_degree(), o.coefficient(0, 0)) {
            (Some(0), c) => Ok(self.scale(&c.inverse().expect("nonzero constant"))),
            (None, _) => Err(ParseError::new(at, "division by zero")),
            _ => Err(ParseError::new(at, "only division by constants is allowed in X and Y")),
        }
    }
    fn neg(&self) -> Self {
        -self
    }
    fn pow(&self, e: u32) -> Self {
        BiPoly::pow(self, e)
    }
}

fn constant(field: &FieldDescriptor, s: Symbol, at: usize) -> PResult<FieldElement> {
    let order = match s {
        Symbol::I => 4,
        Symbol::Zeta(r) => r,
        _ => unreachable!("variables handled by the caller"),
    };
    FieldElement::root_of_unity(field, order).map_err(|_| {
        let name = if s == Symbol::I { "i".to_string() } else { format!("zeta({order})") };
        ParseError::new(at, format!("{name} does not lie in {field}"))
    })
}

fn elaborate<A: Algebra>(e: &Expr, field: &FieldDescriptor) -> PResult<A> {
    Ok(match &e.kind {
        ExprKind::Int(n) => A::scalar(FieldElement::from_rational(field, Rational::from_integer(n.clone()))),
        ExprKind::Sym(s @ (Symbol::I | Symbol::Zeta(_))) => A::scalar(constant(field, *s, e.offset)?),
        ExprKind::Sym(s) => A::variable(field, *s, e.offset)?,
        ExprKind::Neg(a) => elaborate::<A>(a, field)?.neg(),
        ExprKind::Pow(a, k) => elaborate::<A>(a, field)?.pow(*k),
        ExprKind::Bin(op, a, b) => {
            let x = elaborate::<A>(a, field)?;
            let y = elaborate::<A>(b, field)?;
            match op {
                BinOp::Add => x.add(&y),
                BinOp::Sub => x.sub(&y),
                BinOp::Mul => x.mul(&y),
                BinOp::Div => x.div(&y, e.offset)?,
            }
        }
    })
}

pub fn parse_element(text: &str, field: &FieldDescriptor) -> PResult<FieldElement> {
    elaborate(&parse_expr(text)?, field)
}

pub fn parse_ratfunc(text: &str, field: &FieldDescriptor) -> PResult<RationalFunction> {
    let f: Frac = elaborate(&parse_expr(text)?, field)?;
    Ok(RationalFunction::new(f.num, f.den).expect("denominators checked during elaboration"))
}

pub fn parse_poly(text: &str, field: &FieldDescriptor) -> PResult<UniPoly> {
    let f = parse_ratfunc(text, field)?;
    if !f.denominator().is_one() {
        return Err(ParseError::new(0, "expected a polynomial in z, got a proper quotient"));
    }
    Ok(f.numerator().clone())
}

pub fn parse_bipoly(text: &str, field: &FieldDescriptor) -> PResult<BiPoly> {
    elaborate(&parse_expr(text)?, field)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    Element,
    Univariate,
    Bivariate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Element(FieldElement),
    Univariate(RationalFunction),
    Bivariate(BiPoly),
}

pub fn parse(text: &str, expected: Expected, field: &FieldDescriptor) -> PResult<Parsed> {
    Ok(match expected {
        Expected::Element => Parsed::Element(parse_element(text, field)?),
        Expected::Univariate => Parsed::Univariate(parse_ratfunc(text, field)?),
        Expected::Bivariate => Parsed::Bivariate(parse_bipoly(text, field)?),
    })
}

/// Splits on commas outside parentheses, keeping each piece's offset.
fn split_top_level(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (k, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start, &text[start..k]));
                start = k + 1;
            }
            _ => {}
        }
    }
    out.push((start, &text[start..]));
    out
}

/// A comma-separated list of values; `inf` denotes ∞.
pub fn parse_values(text: &str, field: &FieldDescriptor) -> PResult<Vec<ExtendedValue>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_top_level(text)
        .into_iter()
        .map(|(start, piece)| {
            if piece.trim() == "inf" {
                return Ok(ExtendedValue::Infinity);
            }
            parse_element(piece, field).map(ExtendedValue::Finite).map_err(|mut e| {
                e.offset += start;
                e
            })
        })
        .collect()
}

/// Accepts `Q`, `zeta(r)`, `Q(zeta(r))` and a bare order `r`.
pub fn parse_field(text: &str, limit: u32) -> PResult<FieldDescriptor> {
    let t = text.trim();
    if t == "Q" || t == "QQ" {
        return Ok(FieldDescriptor::rationals());
    }
    let inner = t.strip_prefix("Q(").and_then(|s| s.strip_suffix(')')).unwrap_or(t);
    let digits = inner.strip_prefix("zeta(").and_then(|s| s.strip_suffix(')')).unwrap_or(inner);
    let r: u32 = digits
        .trim()
        .parse()
        .map_err(|_| ParseError::new(0, format!("unrecognized field '{t}'; use Q or zeta(r)")))?;
    if r <= 2 {
        return Ok(FieldDescriptor::rationals());
    }
    FieldDescriptor::cyclotomic_with_limit(r, limit).map_err(|e| ParseError::new(0, e.to_string()))
}

/// Smallest field containing every root of unity named in `texts`.
pub fn infer_field(texts: &[&str], limit: u32) -> PResult<FieldDescriptor> {
    let mut order = 1u32;
    for text in texts {
        let toks = tokenize(text)?;
        for (k, (tok, _)) in toks.iter().enumerate() {
            let r = match tok {
                Tok::Ident(s) if s == "i" => 4,
                Tok::Ident(s) if s == "zeta" => match toks.get(k + 2) {
                    Some((Tok::Int(n), at)) => {
                        n.to_u32().filter(|&r| r > 0).ok_or_else(|| ParseError::new(*at, "bad order"))?
                    }
                    _ => continue,
                },
                _ => continue,
            };
            order = order.lcm(&r);
        }
    }
    if order <= 2 {
        return Ok(FieldDescriptor::rationals());
    }
    FieldDescriptor::cyclotomic_with_limit(order, limit).map_err(|e| ParseError::new(0, e.to_string()))
}
