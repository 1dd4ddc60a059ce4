//! Recursive-descent parser with static checks. Beyond the grammar,
//! parsing enforces: every name is bound exactly once, every use
//! refers to an earlier binding of the right kind, intersection
//! indices are 0 or 1, and reserved words are not usable as names.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::ast::{Predicate, RadicalExpr, Script, Selector, Statement, StatementKind};
use super::lexer::{lex, Token, TokenKind};
use super::{NameKind, ScriptError, ScriptErrorKind};

const RESERVED: [&str; 15] = [
    "point",
    "line",
    "circle",
    "through",
    "radius",
    "intersect",
    "assert",
    "nearest",
    "farthest",
    "leftof",
    "rightof",
    "dist2",
    "on",
    "collinear",
    "sqrt",
];

/// Parses and statically checks a script. On success every statement
/// is well formed: names resolve to earlier bindings of the right
/// kind. What parsing cannot rule out (empty intersections, degenerate
/// objects, failing assertions) is left to interpretation.
pub fn parse(source: &str) -> Result<Script, ScriptError> {
    let tokens = lex(source)?;
    let mut parser = Parser { tokens, pos: 0, names: BTreeMap::new() };
    let mut statements = Vec::new();
    while parser.cur().kind != TokenKind::Eof {
        statements.push(parser.statement()?);
    }
    Ok(Script { statements })
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    names: BTreeMap<String, NameKind>,
}

impl Parser {
    fn cur(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let tok = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        tok
    }

    fn syntax<T>(&self, tok: &Token, msg: String) -> Result<T, ScriptError> {
        Err(ScriptError { line: tok.line, column: tok.column, kind: ScriptErrorKind::Syntax(msg) })
    }

    fn expect(&mut self, kind: TokenKind) -> Result<Token, ScriptError> {
        if self.cur().kind == kind {
            Ok(self.bump())
        } else {
            let cur = self.cur().clone();
            self.syntax(&cur, format!("expected {}, found {}", kind.describe(), cur.kind.describe()))
        }
    }

    fn expect_ident(&mut self) -> Result<(String, Token), ScriptError> {
        let cur = self.cur().clone();
        match &cur.kind {
            TokenKind::Ident(name) => {
                let name = name.clone();
                self.bump();
                Ok((name, cur))
            }
            other => self.syntax(&cur, format!("expected identifier, found {}", other.describe())),
        }
    }

    fn expect_keyword(&mut self, word: &str) -> Result<(), ScriptError> {
        let cur = self.cur().clone();
        match &cur.kind {
            TokenKind::Ident(name) if name == word => {
                self.bump();
                Ok(())
            }
            other => self.syntax(&cur, format!("expected '{word}', found {}", other.describe())),
        }
    }

    fn expect_int(&mut self) -> Result<(BigInt, Token), ScriptError> {
        let cur = self.cur().clone();
        match &cur.kind {
            TokenKind::Int(digits) => {
                let value = BigInt::parse_bytes(digits.as_bytes(), 10)
                    .expect("lexer only emits decimal digit runs");
                self.bump();
                Ok((value, cur))
            }
            other => self.syntax(&cur, format!("expected integer, found {}", other.describe())),
        }
    }

    fn bind(&mut self, name: String, kind: NameKind, tok: &Token) -> Result<(), ScriptError> {
        if RESERVED.contains(&name.as_str()) {
            return self.syntax(tok, format!("'{name}' is a reserved word and cannot name an object"));
        }
        if self.names.contains_key(&name) {
            return Err(ScriptError {
                line: tok.line,
                column: tok.column,
                kind: ScriptErrorKind::DuplicateBinding(name),
            });
        }
        self.names.insert(name, kind);
        Ok(())
    }

    fn lookup(&self, name: &str, tok: &Token) -> Result<NameKind, ScriptError> {
        self.names.get(name).copied().ok_or_else(|| ScriptError {
            line: tok.line,
            column: tok.column,
            kind: ScriptErrorKind::UndefinedName(name.to_owned()),
        })
    }

    fn point_ref(&mut self) -> Result<String, ScriptError> {
        let (name, tok) = self.expect_ident()?;
        match self.lookup(&name, &tok)? {
            NameKind::Point => Ok(name),
            actual => Err(ScriptError {
                line: tok.line,
                column: tok.column,
                kind: ScriptErrorKind::WrongKind { name, expected: "a point".to_owned(), actual },
            }),
        }
    }

    fn object_ref(&mut self) -> Result<String, ScriptError> {
        let (name, tok) = self.expect_ident()?;
        match self.lookup(&name, &tok)? {
            NameKind::Line | NameKind::Circle => Ok(name),
            actual => Err(ScriptError {
                line: tok.line,
                column: tok.column,
                kind: ScriptErrorKind::WrongKind {
                    name,
                    expected: "a line or a circle".to_owned(),
                    actual,
                },
            }),
        }
    }

    fn statement(&mut self) -> Result<Statement, ScriptError> {
        let tok = self.cur().clone();
        let kind = match &tok.kind {
            TokenKind::Ident(kw) if kw == "point" => self.point_statement()?,
            TokenKind::Ident(kw) if kw == "line" => self.line_statement()?,
            TokenKind::Ident(kw) if kw == "circle" => self.circle_statement()?,
            TokenKind::Ident(kw) if kw == "assert" => self.assert_statement()?,
            other => {
                return self.syntax(
                    &tok,
                    format!(
                        "expected 'point', 'line', 'circle', or 'assert', found {}",
                        other.describe()
                    ),
                )
            }
        };
        Ok(Statement { kind, line: tok.line, column: tok.column })
    }

    fn point_statement(&mut self) -> Result<StatementKind, ScriptError> {
        self.bump();
        let (name, name_tok) = self.expect_ident()?;
        self.expect(TokenKind::Equals)?;
        let cur = self.cur().clone();
        let kind = match &cur.kind {
            TokenKind::LParen => {
                self.bump();
                let x = self.rational()?;
                self.expect(TokenKind::Comma)?;
                let y = self.rational()?;
                self.expect(TokenKind::RParen)?;
                StatementKind::FreePoint { name: name.clone(), x, y }
            }
            TokenKind::Ident(kw) if kw == "intersect" => {
                self.bump();
                self.expect(TokenKind::LParen)?;
                let a = self.object_ref()?;
                self.expect(TokenKind::Comma)?;
                let b = self.object_ref()?;
                self.expect(TokenKind::RParen)?;
                let selector = self.selector()?;
                StatementKind::Intersect { name: name.clone(), a, b, selector }
            }
            other => {
                return self.syntax(
                    &cur,
                    format!("expected '(' or 'intersect', found {}", other.describe()),
                )
            }
        };
        self.bind(name, NameKind::Point, &name_tok)?;
        Ok(kind)
    }

    fn line_statement(&mut self) -> Result<StatementKind, ScriptError> {
        self.bump();
        let (name, name_tok) = self.expect_ident()?;
        self.expect(TokenKind::Equals)?;
        self.expect_keyword("line")?;
        self.expect(TokenKind::LParen)?;
        let p = self.point_ref()?;
        self.expect(TokenKind::Comma)?;
        let q = self.point_ref()?;
        self.expect(TokenKind::RParen)?;
        self.bind(name.clone(), NameKind::Line, &name_tok)?;
        Ok(StatementKind::LineThrough { name, p, q })
    }

    fn circle_statement(&mut self) -> Result<StatementKind, ScriptError> {
        self.bump();
        let (name, name_tok) = self.expect_ident()?;
        self.expect(TokenKind::Equals)?;
        let (kw, kw_tok) = self.expect_ident()?;
        let kind = match kw.as_str() {
            "through" => {
                self.expect(TokenKind::LParen)?;
                let center = self.point_ref()?;
                self.expect(TokenKind::Comma)?;
                let on = self.point_ref()?;
                self.expect(TokenKind::RParen)?;
                StatementKind::CircleThrough { name: name.clone(), center, on }
            }
            "radius" => {
                self.expect(TokenKind::LParen)?;
                let center = self.point_ref()?;
                self.expect(TokenKind::Semicolon)?;
                let from = self.point_ref()?;
                self.expect(TokenKind::Comma)?;
                let to = self.point_ref()?;
                self.expect(TokenKind::RParen)?;
                StatementKind::CircleRadius { name: name.clone(), center, from, to }
            }
            other => {
                return self
                    .syntax(&kw_tok, format!("expected 'through' or 'radius', found '{other}'"))
            }
        };
        self.bind(name, NameKind::Circle, &name_tok)?;
        Ok(kind)
    }

    fn assert_statement(&mut self) -> Result<StatementKind, ScriptError> {
        self.bump();
        let (kw, kw_tok) = self.expect_ident()?;
        let predicate = match kw.as_str() {
            "dist2" => {
                self.expect(TokenKind::LParen)?;
                let p = self.point_ref()?;
                self.expect(TokenKind::Comma)?;
                let q = self.point_ref()?;
                self.expect(TokenKind::RParen)?;
                self.expect(TokenKind::EqEq)?;
                let expr = self.radical_expr()?;
                Predicate::DistSqEquals { p, q, expr }
            }
            "on" => {
                self.expect(TokenKind::LParen)?;
                let point = self.point_ref()?;
                self.expect(TokenKind::Comma)?;
                let object = self.object_ref()?;
                self.expect(TokenKind::RParen)?;
                Predicate::On { point, object }
            }
            "collinear" => {
                self.expect(TokenKind::LParen)?;
                let a = self.point_ref()?;
                self.expect(TokenKind::Comma)?;
                let b = self.point_ref()?;
                self.expect(TokenKind::Comma)?;
                let c = self.point_ref()?;
                self.expect(TokenKind::RParen)?;
                Predicate::Collinear { a, b, c }
            }
            other => {
                return self.syntax(
                    &kw_tok,
                    format!("expected 'dist2', 'on', or 'collinear', found '{other}'"),
                )
            }
        };
        Ok(StatementKind::Assert { predicate })
    }

    fn selector(&mut self) -> Result<Selector, ScriptError> {
        let cur = self.cur().clone();
        match &cur.kind {
            TokenKind::LBracket => {
                self.bump();
                let (value, int_tok) = self.expect_int()?;
                self.expect(TokenKind::RBracket)?;
                if value == BigInt::from(0) {
                    Ok(Selector::Index(0))
                } else if value == BigInt::from(1) {
                    Ok(Selector::Index(1))
                } else {
                    self.syntax(&int_tok, format!("intersection index must be 0 or 1, got {value}"))
                }
            }
            TokenKind::Ident(kw) if kw == "nearest" => {
                self.bump();
                Ok(Selector::Nearest(self.point_ref()?))
            }
            TokenKind::Ident(kw) if kw == "farthest" => {
                self.bump();
                Ok(Selector::Farthest(self.point_ref()?))
            }
            TokenKind::Ident(kw) if kw == "leftof" => {
                self.bump();
                let a = self.point_ref()?;
                let b = self.point_ref()?;
                Ok(Selector::LeftOf(a, b))
            }
            TokenKind::Ident(kw) if kw == "rightof" => {
                self.bump();
                let a = self.point_ref()?;
                let b = self.point_ref()?;
                Ok(Selector::RightOf(a, b))
            }
            other => self.syntax(
                &cur,
                format!(
                    "expected a selector ('[0]', '[1]', 'nearest', 'farthest', 'leftof', or 'rightof'), found {}",
                    other.describe()
                ),
            ),
        }
    }

    fn rational(&mut self) -> Result<BigRational, ScriptError> {
        let negative = if self.cur().kind == TokenKind::Minus {
            self.bump();
            true
        } else {
            false
        };
        let (mut numer, _) = self.expect_int()?;
        if negative {
            numer = -numer;
        }
        if self.cur().kind == TokenKind::Slash {
            self.bump();
            let (denom, denom_tok) = self.expect_int()?;
            if denom.is_zero() {
                return self.syntax(&denom_tok, "denominator must not be zero".to_owned());
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }

    fn radical_expr(&mut self) -> Result<RadicalExpr, ScriptError> {
        let mut left = self.radical_term()?;
        loop {
            match self.cur().kind {
                TokenKind::Plus => {
                    self.bump();
                    let right = self.radical_term()?;
                    left = RadicalExpr::Add(left.into(), right.into());
                }
                TokenKind::Minus => {
                    self.bump();
                    let right = self.radical_term()?;
                    left = RadicalExpr::Sub(left.into(), right.into());
                }
                _ => return Ok(left),
            }
        }
    }

    fn radical_term(&mut self) -> Result<RadicalExpr, ScriptError> {
        let mut left = self.radical_factor()?;
        loop {
            match self.cur().kind {
                TokenKind::Star => {
                    self.bump();
                    let right = self.radical_factor()?;
                    left = RadicalExpr::Mul(left.into(), right.into());
                }
                TokenKind::Slash => {
                    self.bump();
                    let right = self.radical_factor()?;
                    left = RadicalExpr::Div(left.into(), right.into());
                }
                _ => return Ok(left),
            }
        }
    }

    fn radical_factor(&mut self) -> Result<RadicalExpr, ScriptError> {
        let cur = self.cur().clone();
        match &cur.kind {
            TokenKind::Minus => {
                self.bump();
                Ok(RadicalExpr::Neg(self.radical_factor()?.into()))
            }
            TokenKind::Ident(kw) if kw == "sqrt" => {
                self.bump();
                self.expect(TokenKind::LParen)?;
                let inner = self.radical_expr()?;
                self.expect(TokenKind::RParen)?;
                Ok(RadicalExpr::Sqrt(inner.into()))
            }
            TokenKind::LParen => {
                self.bump();
                let inner = self.radical_expr()?;
                self.expect(TokenKind::RParen)?;
                Ok(inner)
            }
            TokenKind::Int(_) => {
                let (value, _) = self.expect_int()?;
                Ok(RadicalExpr::Rational(BigRational::from_integer(value)))
            }
            other => self.syntax(
                &cur,
                format!("expected an integer, '(', '-', or 'sqrt', found {}", other.describe()),
            ),
        }
    }
}
