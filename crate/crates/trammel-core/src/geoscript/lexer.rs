//! Tokenizer for `.geo` scripts: identifiers, integers, punctuation.
//! Whitespace (including newlines) is insignificant; `#` starts a line
//! comment. Every token carries its 1-based line and column.

use alloc::string::String;
use alloc::vec::Vec;

use super::{ScriptError, ScriptErrorKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum TokenKind {
    Ident(String),
    Int(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semicolon,
    Equals,
    EqEq,
    Plus,
    Minus,
    Star,
    Slash,
    Eof,
}

impl TokenKind {
    pub(crate) fn describe(&self) -> &'static str {
        match self {
            TokenKind::Ident(_) => "identifier",
            TokenKind::Int(_) => "integer",
            TokenKind::LParen => "'('",
            TokenKind::RParen => "')'",
            TokenKind::LBracket => "'['",
            TokenKind::RBracket => "']'",
            TokenKind::Comma => "','",
            TokenKind::Semicolon => "';'",
            TokenKind::Equals => "'='",
            TokenKind::EqEq => "'=='",
            TokenKind::Plus => "'+'",
            TokenKind::Minus => "'-'",
            TokenKind::Star => "'*'",
            TokenKind::Slash => "'/'",
            TokenKind::Eof => "end of input",
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub kind: TokenKind,
    pub line: u32,
    pub column: u32,
}

struct Scanner {
    chars: Vec<char>,
    pos: usize,
    line: u32,
    column: u32,
}

impl Scanner {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) {
        if let Some(&c) = self.chars.get(self.pos) {
            self.pos += 1;
            if c == '\n' {
                self.line += 1;
                self.column = 1;
            } else {
                self.column += 1;
            }
        }
    }
}

pub(crate) fn lex(source: &str) -> Result<Vec<Token>, ScriptError> {
    let mut sc = Scanner { chars: source.chars().collect(), pos: 0, line: 1, column: 1 };
    let mut tokens = Vec::new();
    while let Some(ch) = sc.peek() {
        let (line, column) = (sc.line, sc.column);
        if ch.is_whitespace() {
            sc.bump();
            continue;
        }
        if ch == '#' {
            while let Some(c) = sc.peek() {
                if c == '\n' {
                    break;
                }
                sc.bump();
            }
            continue;
        }
        if ch.is_ascii_alphabetic() || ch == '_' {
            let mut name = String::new();
            while let Some(c) = sc.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    name.push(c);
                    sc.bump();
                } else {
                    break;
                }
            }
            tokens.push(Token { kind: TokenKind::Ident(name), line, column });
            continue;
        }
        if ch.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(c) = sc.peek() {
                if c.is_ascii_digit() {
                    digits.push(c);
                    sc.bump();
                } else {
                    break;
                }
            }
            tokens.push(Token { kind: TokenKind::Int(digits), line, column });
            continue;
        }
        let kind = match ch {
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            '[' => TokenKind::LBracket,
            ']' => TokenKind::RBracket,
            ',' => TokenKind::Comma,
            ';' => TokenKind::Semicolon,
            '+' => TokenKind::Plus,
            '-' => TokenKind::Minus,
            '*' => TokenKind::Star,
            '/' => TokenKind::Slash,
            '=' => {
                sc.bump();
                if sc.peek() == Some('=') {
                    sc.bump();
                    tokens.push(Token { kind: TokenKind::EqEq, line, column });
                } else {
                    tokens.push(Token { kind: TokenKind::Equals, line, column });
                }
                continue;
            }
            other => {
                return Err(ScriptError {
                    line,
                    column,
                    kind: ScriptErrorKind::Syntax(alloc::format!("unexpected character '{other}'")),
                });
            }
        };
        sc.bump();
        tokens.push(Token { kind, line, column });
    }
    tokens.push(Token { kind: TokenKind::Eof, line: sc.line, column: sc.column });
    Ok(tokens)
}
