//! Linear temporal logic over finite traces, with past operators.
//!
//! Formulas are evaluated over a [`Trace`] at a position `i`. The semantics
//! is the usual finite-trace one: `X φ` needs a successor position to exist,
//! `Y φ` needs a predecessor, `φ U ψ` needs a witness position inside the
//! trace, and the dual operators `R`/`T` are universally quantified (hence
//! vacuously true where their existential duals are false).
//!
//! The empty trace gets a structural convention: universally quantified
//! roots (`G`, `R`, `H`, `T`) hold, existential obligations (`F`, `U`, `O`,
//! `S`, atoms, `X`, `Y`) do not, and the boolean connectives compose. Under
//! this convention the empty log satisfies every built-in specification
//! formula, which is the reading we want for "nothing has happened yet".
//!
//! # Concrete syntax
//!
//! ```text
//! φ ::= true | false | atom | !φ | G φ | F φ | X φ | Y φ | O φ | H φ
//!     | φ U φ | φ S φ | φ R φ | φ T φ | φ & φ | φ | φ | φ -> φ | (φ)
//! ```
//!
//! Binding, tightest first: `!` and the prefix operators, then the temporal
//! infixes `U S R T` (right-associative), then `&`, `|`, `->` (the last
//! right-associative). Atoms are identifiers; single capital letters are
//! reserved for operators.

use std::collections::BTreeSet;
use std::fmt;

use crate::specs::{SpecError, SpecType};
use crate::syntax::{self, ParseError, Tok, Tokens};
use crate::trace::{Trace, REQ, RESP};

/// A temporal formula. Derived operators are kept as their own variants so
/// formulas print the way they were written.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    True,
    False,
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    /// `X φ` — φ holds at the next position (so never at the last one).
    Next(Box<Formula>),
    /// `Y φ` — φ held at the previous position (so never at the first one).
    Yesterday(Box<Formula>),
    /// `φ U ψ` — ψ eventually holds, with φ holding until then.
    Until(Box<Formula>, Box<Formula>),
    /// `φ S ψ` — ψ held at some earlier point, with φ holding since then.
    Since(Box<Formula>, Box<Formula>),
    /// `φ R ψ` — dual of `U`: ψ holds up to and including the first φ.
    Release(Box<Formula>, Box<Formula>),
    /// `φ T ψ` — dual of `S`.
    Trigger(Box<Formula>, Box<Formula>),
    /// `F φ = true U φ`.
    Finally(Box<Formula>),
    /// `G φ = false R φ`.
    Globally(Box<Formula>),
    /// `O φ = true S φ`.
    Once(Box<Formula>),
    /// `H φ = false T φ`.
    Historically(Box<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Self {
        Formula::Atom(name.to_string())
    }

    #[must_use]
    pub fn negate(self) -> Self {
        Formula::Not(Box::new(self))
    }

    #[must_use]
    pub fn and(self, rhs: Self) -> Self {
        Formula::And(Box::new(self), Box::new(rhs))
    }

    #[must_use]
    pub fn or(self, rhs: Self) -> Self {
        Formula::Or(Box::new(self), Box::new(rhs))
    }

    #[must_use]
    pub fn implies(self, rhs: Self) -> Self {
        Formula::Implies(Box::new(self), Box::new(rhs))
    }

    pub fn next(inner: Self) -> Self {
        Formula::Next(Box::new(inner))
    }

    pub fn yesterday(inner: Self) -> Self {
        Formula::Yesterday(Box::new(inner))
    }

    #[must_use]
    pub fn until(self, rhs: Self) -> Self {
        Formula::Until(Box::new(self), Box::new(rhs))
    }

    #[must_use]
    pub fn since(self, rhs: Self) -> Self {
        Formula::Since(Box::new(self), Box::new(rhs))
    }

    #[must_use]
    pub fn release(self, rhs: Self) -> Self {
        Formula::Release(Box::new(self), Box::new(rhs))
    }

    #[must_use]
    pub fn trigger(self, rhs: Self) -> Self {
        Formula::Trigger(Box::new(self), Box::new(rhs))
    }

    pub fn eventually(inner: Self) -> Self {
        Formula::Finally(Box::new(inner))
    }

    pub fn always(inner: Self) -> Self {
        Formula::Globally(Box::new(inner))
    }

    pub fn once(inner: Self) -> Self {
        Formula::Once(Box::new(inner))
    }

    pub fn historically(inner: Self) -> Self {
        Formula::Historically(Box::new(inner))
    }

    /// All atom names occurring in the formula.
    pub fn atoms(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        use Formula::*;
        match self {
            True | False => {}
            Atom(p) => {
                out.insert(p.as_str());
            }
            Not(g) | Next(g) | Yesterday(g) | Finally(g) | Globally(g) | Once(g)
            | Historically(g) => g.collect_atoms(out),
            And(a, b) | Or(a, b) | Implies(a, b) | Until(a, b) | Since(a, b) | Release(a, b)
            | Trigger(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }
}

/// Evaluation asked about a position outside the trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("position {index} is out of range for a trace of length {len}")]
pub struct EvalError {
    pub index: usize,
    pub len: usize,
}

/// Evaluates `f` at position `i` of `t`.
///
/// For the empty trace no position exists; use [`eval_trace`] instead.
pub fn eval(f: &Formula, t: &Trace, i: usize) -> Result<bool, EvalError> {
    if i >= t.len() {
        return Err(EvalError {
            index: i,
            len: t.len(),
        });
    }
    Ok(table(f, t)[i])
}

/// Whole-trace satisfaction: evaluation at position 0, with the structural
/// empty-trace convention for `t = ε`.
pub fn eval_trace(f: &Formula, t: &Trace) -> bool {
    if t.is_empty() {
        eval_empty(f)
    } else {
        table(f, t)[0]
    }
}

/// Truth of `f` at every position of `t`, computed bottom-up per subformula
/// (one linear pass each, so O(|f|·|t|) overall).
fn table(f: &Formula, t: &Trace) -> Vec<bool> {
    use Formula::*;
    let n = t.len();
    match f {
        True => vec![true; n],
        False => vec![false; n],
        Atom(p) => (0..n).map(|i| t.letter(i).contains(p)).collect(),
        Not(g) => {
            let mut v = table(g, t);
            for b in &mut v {
                *b = !*b;
            }
            v
        }
        And(a, b) => zip(table(a, t), table(b, t), |x, y| x && y),
        Or(a, b) => zip(table(a, t), table(b, t), |x, y| x || y),
        Implies(a, b) => zip(table(a, t), table(b, t), |x, y| !x || y),
        Next(g) => {
            let tg = table(g, t);
            (0..n).map(|i| i + 1 < n && tg[i + 1]).collect()
        }
        Yesterday(g) => {
            let tg = table(g, t);
            (0..n).map(|i| i > 0 && tg[i - 1]).collect()
        }
        Until(a, b) => {
            let (ta, tb) = (table(a, t), table(b, t));
            let mut v = vec![false; n];
            for i in (0..n).rev() {
                v[i] = tb[i] || (ta[i] && i + 1 < n && v[i + 1]);
            }
            v
        }
        Since(a, b) => {
            let (ta, tb) = (table(a, t), table(b, t));
            let mut v = vec![false; n];
            for i in 0..n {
                v[i] = tb[i] || (ta[i] && i > 0 && v[i - 1]);
            }
            v
        }
        Release(a, b) => {
            let (ta, tb) = (table(a, t), table(b, t));
            let mut v = vec![false; n];
            for i in (0..n).rev() {
                v[i] = tb[i] && (ta[i] || i + 1 == n || v[i + 1]);
            }
            v
        }
        Trigger(a, b) => {
            let (ta, tb) = (table(a, t), table(b, t));
            let mut v = vec![false; n];
            for i in 0..n {
                v[i] = tb[i] && (ta[i] || i == 0 || v[i - 1]);
            }
            v
        }
        Finally(g) => {
            let tg = table(g, t);
            let mut v = vec![false; n];
            for i in (0..n).rev() {
                v[i] = tg[i] || (i + 1 < n && v[i + 1]);
            }
            v
        }
        Globally(g) => {
            let tg = table(g, t);
            let mut v = vec![false; n];
            for i in (0..n).rev() {
                v[i] = tg[i] && (i + 1 == n || v[i + 1]);
            }
            v
        }
        Once(g) => {
            let tg = table(g, t);
            let mut v = vec![false; n];
            for i in 0..n {
                v[i] = tg[i] || (i > 0 && v[i - 1]);
            }
            v
        }
        Historically(g) => {
            let tg = table(g, t);
            let mut v = vec![false; n];
            for i in 0..n {
                v[i] = tg[i] && (i == 0 || v[i - 1]);
            }
            v
        }
    }
}

fn zip(a: Vec<bool>, b: Vec<bool>, f: impl Fn(bool, bool) -> bool) -> Vec<bool> {
    a.into_iter().zip(b).map(|(x, y)| f(x, y)).collect()
}

/// Structural satisfaction on the empty trace: universal quantifiers hold
/// over an empty position range, existential ones do not.
fn eval_empty(f: &Formula) -> bool {
    use Formula::*;
    match f {
        True => true,
        False | Atom(_) => false,
        Not(g) => !eval_empty(g),
        And(a, b) => eval_empty(a) && eval_empty(b),
        Or(a, b) => eval_empty(a) || eval_empty(b),
        Implies(a, b) => !eval_empty(a) || eval_empty(b),
        Next(_) | Yesterday(_) | Until(..) | Since(..) | Finally(_) | Once(_) => false,
        Release(..) | Trigger(..) | Globally(_) | Historically(_) => true,
    }
}

/// The temporal formula characterizing a regular specification type.
///
/// The two non-regular types have no such formula; asking for one is an
/// error rather than an approximation.
pub fn builtin_formula(s: SpecType) -> Result<Formula, SpecError> {
    let req = || Formula::atom(REQ);
    let resp = || Formula::atom(RESP);
    let baseline = || Formula::always(req().implies(Formula::eventually(resp())));
    let immediate = || Formula::always(req().implies(Formula::next(resp())));
    let no_spontaneous = || Formula::always(resp().implies(Formula::yesterday(req())));
    match s {
        SpecType::RR1 => Ok(baseline()),
        SpecType::RR2 => Ok(baseline().and(no_spontaneous())),
        SpecType::RR5 => Ok(immediate()),
        SpecType::RR6 => Ok(immediate().and(no_spontaneous())),
        SpecType::RR3 | SpecType::RR4 => Err(SpecError::NotRegular(s)),
    }
}

/// Candidate formulas for evaluating RR2 and RR5 directly on traces that may
/// contain `∅` letters, i.e. without projecting the quiet instants away.
///
/// - RR2: the `Y req` conjunct is replaced by `(¬resp) S req`, so a response
///   only needs a request somewhere behind it with no response in between;
///   the eventual-response baseline is kept alongside.
/// - RR5: `X resp` is replaced by `(¬req) U resp`, so the response may
///   arrive after quiet instants but before any further request.
pub fn alternative_formula(s: SpecType) -> Result<Formula, SpecError> {
    let req = || Formula::atom(REQ);
    let resp = || Formula::atom(RESP);
    match s {
        SpecType::RR2 => {
            let baseline = Formula::always(req().implies(Formula::eventually(resp())));
            let anchored = Formula::always(
                resp().implies(Formula::yesterday(resp().negate().since(req()))),
            );
            Ok(baseline.and(anchored))
        }
        SpecType::RR5 => Ok(Formula::always(
            req().implies(Formula::next(req().negate().until(resp()))),
        )),
        other => Err(SpecError::NoAlternative(other)),
    }
}

/// Parses the concrete syntax described in the module docs.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut toks = Tokens::lex(text)?;
    let f = parse_implies(&mut toks)?;
    toks.expect_end()?;
    Ok(f)
}

fn parse_implies(t: &mut Tokens) -> Result<Formula, ParseError> {
    let lhs = parse_or(t)?;
    if t.eat(&Tok::Implies) {
        let rhs = parse_implies(t)?;
        Ok(lhs.implies(rhs))
    } else {
        Ok(lhs)
    }
}

fn parse_or(t: &mut Tokens) -> Result<Formula, ParseError> {
    let mut lhs = parse_and(t)?;
    while t.eat(&Tok::Or) {
        lhs = lhs.or(parse_and(t)?);
    }
    Ok(lhs)
}

fn parse_and(t: &mut Tokens) -> Result<Formula, ParseError> {
    let mut lhs = parse_until(t)?;
    while t.eat(&Tok::And) {
        lhs = lhs.and(parse_until(t)?);
    }
    Ok(lhs)
}

fn parse_until(t: &mut Tokens) -> Result<Formula, ParseError> {
    let lhs = parse_unary(t)?;
    let op = match t.peek() {
        Some(Tok::Ident(s)) if matches!(s.as_str(), "U" | "S" | "R" | "T") => s.clone(),
        _ => return Ok(lhs),
    };
    t.bump();
    let rhs = parse_until(t)?;
    Ok(match op.as_str() {
        "U" => lhs.until(rhs),
        "S" => lhs.since(rhs),
        "R" => lhs.release(rhs),
        _ => lhs.trigger(rhs),
    })
}

fn parse_unary(t: &mut Tokens) -> Result<Formula, ParseError> {
    let pos = t.pos();
    match t.peek() {
        Some(Tok::Not) => {
            t.bump();
            Ok(parse_unary(t)?.negate())
        }
        Some(Tok::LParen) => {
            t.bump();
            let f = parse_implies(t)?;
            t.expect(&Tok::RParen, "')'")?;
            Ok(f)
        }
        Some(Tok::Ident(name)) => {
            let name = name.clone();
            match name.as_str() {
                "G" | "F" | "X" | "Y" | "O" | "H" => {
                    t.bump();
                    let inner = parse_unary(t)?;
                    Ok(match name.as_str() {
                        "G" => Formula::always(inner),
                        "F" => Formula::eventually(inner),
                        "X" => Formula::next(inner),
                        "Y" => Formula::yesterday(inner),
                        "O" => Formula::once(inner),
                        _ => Formula::historically(inner),
                    })
                }
                "U" | "S" | "R" | "T" => Err(ParseError::new(
                    pos,
                    format!("infix operator '{name}' is missing its left operand"),
                )),
                "true" => {
                    t.bump();
                    Ok(Formula::True)
                }
                "false" => {
                    t.bump();
                    Ok(Formula::False)
                }
                _ if syntax::is_atom_name(&name) => {
                    t.bump();
                    Ok(Formula::Atom(name))
                }
                _ => Err(ParseError::new(pos, format!("unknown operator '{name}'"))),
            }
        }
        _ => Err(ParseError::new(pos, "expected a formula")),
    }
}

// Binding strength used by the printer; mirrors the parser levels.
const LVL_IMPLIES: u8 = 0;
const LVL_OR: u8 = 1;
const LVL_AND: u8 = 2;
const LVL_UNTIL: u8 = 3;
const LVL_UNARY: u8 = 4;
const LVL_ATOM: u8 = 5;

fn level(f: &Formula) -> u8 {
    use Formula::*;
    match f {
        True | False | Atom(_) => LVL_ATOM,
        Not(_) | Next(_) | Yesterday(_) | Finally(_) | Globally(_) | Once(_)
        | Historically(_) => LVL_UNARY,
        Until(..) | Since(..) | Release(..) | Trigger(..) => LVL_UNTIL,
        And(..) => LVL_AND,
        Or(..) => LVL_OR,
        Implies(..) => LVL_IMPLIES,
    }
}

fn write_at(f: &Formula, min: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    use Formula::*;
    if level(f) < min {
        out.write_str("(")?;
        write_at(f, LVL_IMPLIES, out)?;
        return out.write_str(")");
    }
    match f {
        True => out.write_str("true"),
        False => out.write_str("false"),
        Atom(p) => out.write_str(p),
        Not(g) => {
            out.write_str("!")?;
            write_at(g, LVL_UNARY, out)
        }
        Next(g) => write_prefix("X", g, out),
        Yesterday(g) => write_prefix("Y", g, out),
        Finally(g) => write_prefix("F", g, out),
        Globally(g) => write_prefix("G", g, out),
        Once(g) => write_prefix("O", g, out),
        Historically(g) => write_prefix("H", g, out),
        Until(a, b) => write_infix(a, "U", b, LVL_UNTIL, out),
        Since(a, b) => write_infix(a, "S", b, LVL_UNTIL, out),
        Release(a, b) => write_infix(a, "R", b, LVL_UNTIL, out),
        Trigger(a, b) => write_infix(a, "T", b, LVL_UNTIL, out),
        And(a, b) => {
            write_at(a, LVL_AND, out)?;
            out.write_str(" & ")?;
            write_at(b, LVL_AND + 1, out)
        }
        Or(a, b) => {
            write_at(a, LVL_OR, out)?;
            out.write_str(" | ")?;
            write_at(b, LVL_OR + 1, out)
        }
        Implies(a, b) => {
            write_at(a, LVL_IMPLIES + 1, out)?;
            out.write_str(" -> ")?;
            write_at(b, LVL_IMPLIES, out)
        }
    }
}

fn write_prefix(op: &str, inner: &Formula, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    out.write_str(op)?;
    if level(inner) < LVL_UNARY {
        write_at(inner, LVL_UNARY, out)
    } else {
        out.write_str(" ")?;
        write_at(inner, LVL_UNARY, out)
    }
}

fn write_infix(
    a: &Formula,
    op: &str,
    b: &Formula,
    lvl: u8,
    out: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    // Right-associative: the left operand needs to bind tighter.
    write_at(a, lvl + 1, out)?;
    write!(out, " {op} ")?;
    write_at(b, lvl, out)
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_at(self, LVL_IMPLIES, f)
    }
}
