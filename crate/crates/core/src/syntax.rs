//! Shared tokenizer for the two formula syntaxes.
//!
//! Both parsers work over the same token shapes: identifiers (which the
//! individual parsers classify as operators, `true`/`false`, or atoms) and
//! the punctuation `( ) ! & | ->`. Every token remembers its byte offset so
//! parse errors can point at the offending spot.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    LParen,
    RParen,
    Not,
    And,
    Or,
    Implies,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub pos: usize,
}

/// A formula failed to parse; `position` is a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at offset {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => {
                out.push(Spanned { tok: Tok::LParen, pos: i });
                i += 1;
            }
            ')' => {
                out.push(Spanned { tok: Tok::RParen, pos: i });
                i += 1;
            }
            '!' => {
                out.push(Spanned { tok: Tok::Not, pos: i });
                i += 1;
            }
            '&' => {
                out.push(Spanned { tok: Tok::And, pos: i });
                i += 1;
            }
            '|' => {
                out.push(Spanned { tok: Tok::Or, pos: i });
                i += 1;
            }
            '-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    out.push(Spanned { tok: Tok::Implies, pos: i });
                    i += 2;
                } else {
                    return Err(ParseError::new(i, "expected '->'".to_string()));
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push(Spanned {
                    tok: Tok::Ident(text[start..i].to_string()),
                    pos: start,
                });
            }
            other => {
                return Err(ParseError::new(i, format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(out)
}

/// Cursor over a token stream, shared by both recursive-descent parsers.
pub(crate) struct Tokens {
    toks: Vec<Spanned>,
    next: usize,
    end: usize,
}

impl Tokens {
    pub fn lex(text: &str) -> Result<Self, ParseError> {
        let toks = tokenize(text)?;
        Ok(Tokens {
            toks,
            next: 0,
            end: text.len(),
        })
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.next).map(|s| &s.tok)
    }

    pub fn pos(&self) -> usize {
        self.toks.get(self.next).map_or(self.end, |s| s.pos)
    }

    pub fn bump(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.next).cloned();
        if t.is_some() {
            self.next += 1;
        }
        t
    }

    pub fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.next += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, tok: &Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(ParseError::new(self.pos(), format!("expected {what}")))
        }
    }

    pub fn expect_end(&self) -> Result<(), ParseError> {
        if self.next == self.toks.len() {
            Ok(())
        } else {
            Err(ParseError::new(self.pos(), "unexpected trailing input"))
        }
    }
}

/// True when `name` is a plausible atom: an identifier that is not a single
/// capital letter (single capitals are reserved as operator names).
pub(crate) fn is_atom_name(name: &str) -> bool {
    !(name.len() == 1 && name.chars().next().unwrap().is_ascii_uppercase())
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => f.write_str(s),
            Tok::LParen => f.write_str("("),
            Tok::RParen => f.write_str(")"),
            Tok::Not => f.write_str("!"),
            Tok::And => f.write_str("&"),
            Tok::Or => f.write_str("|"),
            Tok::Implies => f.write_str("->"),
        }
    }
}
