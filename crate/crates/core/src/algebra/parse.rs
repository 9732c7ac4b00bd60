//! Text syntax for algebra elements.
//!
//! ```text
//! expr    := ['-'] term (('+' | '-') term)*
//! term    := factor (['.'] factor)*
//! factor  := primary '*'*
//! primary := number ['/' number] | arrow-id | 'e(' vertex-id ')' | '(' expr ')'
//! ```
//!
//! Juxtaposition and `.` both denote the product; a trailing `*` is the involution.
//! Example: `2/3 a b* - e(v1)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{AlgebraError, Element, LeavittPathAlgebra, Letter, RawTerm, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Scalar(BigRational),
    Arrow(usize),
    Vertex(usize),
    Sum(Vec<Expr>),
    Neg(Box<Expr>),
    Product(Vec<Expr>),
    Star(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Vertex(String),
    Plus,
    Minus,
    Star,
    Dot,
    Slash,
    LParen,
    RParen,
}

fn syntax(column: usize, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Syntax {
        column,
        message: message.into(),
    }
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

/// Tokens with 1-based columns.
fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, AlgebraError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            _ if c.is_whitespace() => i += 1,
            '+' | '-' | '*' | '.' | '/' | '(' | ')' => {
                let t = match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '.' => Tok::Dot,
                    '/' => Tok::Slash,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                };
                out.push((col, t));
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((col, Tok::Num(digits.parse().expect("ascii digits"))));
            }
            _ if is_ident_char(c) => {
                let start = i;
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                if word == "e" && chars.get(i) == Some(&'(') {
                    let close = chars[i..]
                        .iter()
                        .position(|&c| c == ')')
                        .ok_or_else(|| syntax(col, "unclosed `e(`"))?;
                    let id: String = chars[i + 1..i + close]
                        .iter()
                        .collect::<String>()
                        .trim()
                        .to_string();
                    if id.is_empty() {
                        return Err(syntax(col, "empty vertex id"));
                    }
                    out.push((col, Tok::Vertex(id)));
                    i += close + 1;
                } else {
                    out.push((col, Tok::Ident(word)));
                }
            }
            _ => return Err(syntax(col, format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end_col: usize,
    alg: &'a LeavittPathAlgebra,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(c, _)| *c)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr, AlgebraError> {
        let mut terms = Vec::new();
        let first = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        terms.push(first);
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    terms.push(self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    terms.push(Expr::Neg(Box::new(self.term()?)));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            Expr::Sum(terms)
        })
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_) | Tok::Ident(_) | Tok::Vertex(_) | Tok::LParen)
        )
    }

    fn term(&mut self) -> Result<Expr, AlgebraError> {
        let mut factors = vec![self.factor()?];
        loop {
            if self.peek() == Some(&Tok::Dot) {
                self.bump();
                factors.push(self.factor()?);
            } else if self.starts_factor() {
                factors.push(self.factor()?);
            } else {
                break;
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            Expr::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<Expr, AlgebraError> {
        let mut e = self.primary()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            e = Expr::Star(Box::new(e));
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<Expr, AlgebraError> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Num(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let dcol = self.col();
                    match self.bump() {
                        Some(Tok::Num(d)) if !d.is_zero() => {
                            Ok(Expr::Scalar(BigRational::new(n, d)))
                        }
                        Some(Tok::Num(_)) => Err(syntax(dcol, "zero denominator")),
                        _ => Err(syntax(dcol, "expected denominator")),
                    }
                } else {
                    Ok(Expr::Scalar(BigRational::from_integer(n)))
                }
            }
            Some(Tok::Ident(id)) => self
                .alg
                .quiver()
                .arrow_index(&id)
                .map(Expr::Arrow)
                .ok_or(AlgebraError::UnknownArrow(id)),
            Some(Tok::Vertex(id)) => self
                .alg
                .quiver()
                .vertex_index(&id)
                .map(Expr::Vertex)
                .ok_or(AlgebraError::UnknownVertex(id)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let close = self.col();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(syntax(close, "expected `)`")),
                }
            }
            Some(_) => Err(syntax(col, "expected a scalar, arrow, vertex or `(`")),
            None => Err(syntax(col, "unexpected end of input")),
        }
    }
}

/// Parses `text` against the arrows and vertices of `alg`.
pub fn parse_expr(text: &str, alg: &LeavittPathAlgebra) -> Result<Expr, AlgebraError> {
    let toks = tokenize(text)?;
    let end_col = text.chars().count() + 1;
    let mut p = Parser {
        toks,
        pos: 0,
        end_col,
        alg,
    };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(syntax(p.col(), "unexpected trailing input"));
    }
    Ok(e)
}

fn scalar<S: Scalar>(r: &BigRational) -> Result<S, AlgebraError> {
    S::from_ratio(r.numer(), r.denom()).ok_or_else(|| AlgebraError::Scalar(r.to_string()))
}

impl Expr {
    /// Evaluates by multiplying normal forms bottom-up.
    pub fn evaluate<S: Scalar>(
        &self,
        alg: &LeavittPathAlgebra,
    ) -> Result<Element<S>, AlgebraError> {
        Ok(match self {
            Expr::Scalar(r) => alg.scalar(scalar(r)?),
            Expr::Arrow(a) => alg.arrow(*a),
            Expr::Vertex(v) => alg.vertex(*v),
            Expr::Sum(parts) => {
                let mut acc = alg.zero();
                for p in parts {
                    acc = acc.try_add(&p.evaluate(alg)?)?;
                }
                acc
            }
            Expr::Neg(e) => -&e.evaluate::<S>(alg)?,
            Expr::Product(parts) => {
                let mut acc = alg.one();
                for p in parts {
                    acc = acc.multiply(&p.evaluate(alg)?)?;
                }
                acc
            }
            Expr::Star(e) => e.evaluate::<S>(alg)?.star(),
        })
    }

    /// Expands into a sum of raw words without applying any relation.
    pub fn expand<S: Scalar>(&self) -> Result<Vec<RawTerm<S>>, AlgebraError> {
        Ok(match self {
            Expr::Scalar(r) => vec![RawTerm {
                coefficient: scalar(r)?,
                letters: Vec::new(),
            }],
            Expr::Arrow(a) => vec![RawTerm {
                coefficient: S::one(),
                letters: vec![Letter::Arrow(*a)],
            }],
            Expr::Vertex(v) => vec![RawTerm {
                coefficient: S::one(),
                letters: vec![Letter::Vertex(*v)],
            }],
            Expr::Sum(parts) => {
                let mut out = Vec::new();
                for p in parts {
                    out.extend(p.expand()?);
                }
                out
            }
            Expr::Neg(e) => e
                .expand::<S>()?
                .into_iter()
                .map(|t| RawTerm {
                    coefficient: -t.coefficient,
                    letters: t.letters,
                })
                .collect(),
            Expr::Product(parts) => {
                let mut acc = vec![RawTerm {
                    coefficient: S::one(),
                    letters: Vec::new(),
                }];
                for p in parts {
                    let rhs = p.expand::<S>()?;
                    let mut next = Vec::with_capacity(acc.len() * rhs.len());
                    for l in &acc {
                        for r in &rhs {
                            let mut letters = l.letters.clone();
                            letters.extend_from_slice(&r.letters);
                            next.push(RawTerm {
                                coefficient: l.coefficient.clone() * r.coefficient.clone(),
                                letters,
                            });
                        }
                    }
                    acc = next;
                }
                acc
            }
            Expr::Star(e) => e.expand::<S>()?.into_iter().map(star_word).collect(),
        })
    }
}

fn star_word<S: Scalar>(t: RawTerm<S>) -> RawTerm<S> {
    let letters = t
        .letters
        .into_iter()
        .rev()
        .map(|l| match l {
            Letter::Vertex(v) => Letter::Vertex(v),
            Letter::Arrow(a) => Letter::Ghost(a),
            Letter::Ghost(a) => Letter::Arrow(a),
        })
        .collect();
    RawTerm {
        coefficient: t.coefficient,
        letters,
    }
}

impl LeavittPathAlgebra {
    /// Parses and evaluates `text` in normal form.
    pub fn eval<S: Scalar>(&self, text: &str) -> Result<Element<S>, AlgebraError> {
        parse_expr(text, self)?.evaluate(self)
    }

    /// Parses `text`, expands it into raw words and reduces them with `strategy`.
    pub fn eval_by_rewriting<S: Scalar>(
        &self,
        text: &str,
        strategy: super::Strategy,
    ) -> Result<Element<S>, AlgebraError> {
        let terms = parse_expr(text, self)?.expand::<S>()?;
        self.reduce_words(&terms, strategy)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PrimeField, Rational, Strategy};
    use crate::quiver::Quiver;

    type Q = Rational;

    #[test]
    fn cli_examples() {
        let l1 = LeavittPathAlgebra::new(Quiver::rose(2));
        assert_eq!(l1.eval::<Q>("x* . x").unwrap().to_string(), "1");
        assert_eq!(l1.eval::<Q>("x . x*").unwrap().to_string(), "1 - y y*");
        let j0 = LeavittPathAlgebra::new(Quiver::toeplitz());
        assert_eq!(j0.eval::<Q>("(a* + b*).(a + b)").unwrap().to_string(), "1");
    }

    #[test]
    fn scalars_vertices_and_signs() {
        let q = Quiver::parse("vertices v1 v2\narrow a v1 v1\narrow b v1 v2").unwrap();
        let alg = LeavittPathAlgebra::new(q);
        let got = alg.eval::<Q>("2/3 a b b* - e(v1)").unwrap();
        assert_eq!(got.to_string(), "-e(v1) + 2/3 a b b*");
        assert_eq!(alg.eval::<Q>("-e(v1) - e(v2)").unwrap().to_string(), "-1");
        assert_eq!(
            alg.eval::<Q>("(a b)*").unwrap(),
            alg.eval::<Q>("b* a*").unwrap()
        );
    }

    #[test]
    fn rewriting_route_agrees() {
        let j0 = LeavittPathAlgebra::new(Quiver::toeplitz());
        for text in [
            "(a* + b*).(a + b)",
            "a a a* a* - 3 b b*",
            "(a + b)(a + b)*",
            "e(1) e(2)",
        ] {
            let direct = j0.eval::<Q>(text).unwrap();
            for s in [Strategy::Leftmost, Strategy::Rightmost, Strategy::Random(3)] {
                assert_eq!(
                    j0.eval_by_rewriting::<Q>(text, s).unwrap(),
                    direct,
                    "{text}"
                );
            }
        }
    }

    #[test]
    fn errors_have_columns() {
        let l1 = LeavittPathAlgebra::new(Quiver::rose(2));
        assert_eq!(
            l1.eval::<Q>("x + ").unwrap_err(),
            AlgebraError::Syntax {
                column: 5,
                message: "unexpected end of input".into()
            }
        );
        assert!(matches!(
            l1.eval::<Q>("x ) y"),
            Err(AlgebraError::Syntax { column: 3, .. })
        ));
        assert!(matches!(
            l1.eval::<Q>("x # y"),
            Err(AlgebraError::Syntax { column: 3, .. })
        ));
        assert_eq!(
            l1.eval::<Q>("z").unwrap_err(),
            AlgebraError::UnknownArrow("z".into())
        );
        assert_eq!(
            l1.eval::<Q>("e(q)").unwrap_err(),
            AlgebraError::UnknownVertex("q".into())
        );
        assert!(matches!(
            l1.eval::<PrimeField<5>>("1/5 x"),
            Err(AlgebraError::Scalar(_))
        ));
    }
}
