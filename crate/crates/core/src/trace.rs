//! Traces, words, and event logs.
//!
//! The whole crate works over two kinds of sequences:
//!
//! - A [`Word`] is a sequence over the two-symbol alphabet `{req, resp}`.
//!   All grammar, automaton, and counting engines consume words.
//! - A [`Trace`] is a sequence of letters, where each letter is a *set* of
//!   atomic propositions. Temporal formulas are evaluated over traces. A
//!   *strict* trace is one whose every letter is exactly `{req}` or `{resp}`;
//!   strict traces and words are interchangeable.
//!
//! General traces may contain the empty letter `∅` (an event that is neither
//! a request nor a response). A letter containing *both* `req` and `resp` is
//! rejected everywhere: a simultaneous request/response has no defined
//! reading, and silently choosing one would be worse than refusing.
//!
//! # Log formats
//!
//! [`parse_trace`] reads two textual formats:
//!
//! - **tokens**: whitespace-separated event names; lines starting with `#`
//!   are comments; the whole input is one trace.
//! - **jsonl**: one JSON object per line; the event name is taken from a
//!   configurable field (default `"event"`); blank lines are skipped.
//!
//! Event names are turned into letters through an [`EventMapping`], a list of
//! `name=req|resp|other` entries. Events mapped to `other` (or, outside of
//! strict mode, not mapped at all) become `∅` letters.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Atom name for requests.
pub const REQ: &str = "req";
/// Atom name for responses.
pub const RESP: &str = "resp";

/// One of the two symbols of the request-response alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Req,
    Resp,
}

impl Symbol {
    /// The full alphabet, in enumeration order (`req` before `resp`).
    pub const ALPHABET: [Symbol; 2] = [Symbol::Req, Symbol::Resp];

    /// Canonical lower-case name of the symbol.
    pub fn name(self) -> &'static str {
        match self {
            Symbol::Req => REQ,
            Symbol::Resp => RESP,
        }
    }

    /// Index of the symbol inside [`Symbol::ALPHABET`].
    pub fn index(self) -> usize {
        match self {
            Symbol::Req => 0,
            Symbol::Resp => 1,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finite word over `{req, resp}`.
///
/// The `Display` form is the space-separated symbol list, with `ε` for the
/// empty word; `FromStr` accepts the same shape (and an empty string).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Symbol>);

impl Word {
    /// The empty word.
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn from_symbols(symbols: impl IntoIterator<Item = Symbol>) -> Self {
        Word(symbols.into_iter().collect())
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.0.iter().copied()
    }

    pub fn push(&mut self, s: Symbol) {
        self.0.push(s);
    }

    pub fn pop(&mut self) -> Option<Symbol> {
        self.0.pop()
    }

    /// The word consisting of the first `n` symbols.
    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }

    /// Number of occurrences of `s`.
    pub fn count(&self, s: Symbol) -> usize {
        self.0.iter().filter(|&&x| x == s).count()
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<T: IntoIterator<Item = Symbol>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = TraceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            match tok {
                "req" => out.push(Symbol::Req),
                "resp" => out.push(Symbol::Resp),
                "ε" => {}
                other => {
                    return Err(TraceError::MalformedLine {
                        line: 1,
                        message: format!("unknown symbol '{other}' (expected req or resp)"),
                    })
                }
            }
        }
        Ok(Word(out))
    }
}

/// A letter: a finite set of atomic propositions that hold at one instant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Letter {
    atoms: BTreeSet<String>,
}

impl Letter {
    /// The empty letter `∅`.
    pub fn empty() -> Self {
        Letter::default()
    }

    pub fn singleton(atom: &str) -> Self {
        Letter {
            atoms: BTreeSet::from([atom.to_string()]),
        }
    }

    pub fn from_atoms<I, S>(atoms: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Letter {
            atoms: atoms.into_iter().map(Into::into).collect(),
        }
    }

    pub fn contains(&self, atom: &str) -> bool {
        self.atoms.contains(atom)
    }

    pub fn atoms(&self) -> impl Iterator<Item = &str> {
        self.atoms.iter().map(String::as_str)
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    /// The letter for a single alphabet symbol (`{req}` or `{resp}`).
    pub fn of_symbol(s: Symbol) -> Self {
        Letter::singleton(s.name())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.atoms.len() {
            0 => f.write_str("∅"),
            1 => f.write_str(self.atoms.iter().next().unwrap()),
            _ => {
                f.write_str("{")?;
                for (i, a) in self.atoms.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    f.write_str(a)?;
                }
                f.write_str("}")
            }
        }
    }
}

/// A finite trace: a declared proposition set and a sequence of letters.
///
/// `strict` records that every letter is exactly `{req}` or `{resp}`, i.e.
/// that the trace is just a [`Word`] in disguise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Trace {
    aps: BTreeSet<String>,
    letters: Vec<Letter>,
    strict: bool,
}

impl Trace {
    /// Builds a general trace, checking that every letter only uses declared
    /// propositions.
    pub fn new<I, S>(aps: I, letters: Vec<Letter>) -> Result<Self, TraceError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let aps: BTreeSet<String> = aps.into_iter().map(Into::into).collect();
        for (index, letter) in letters.iter().enumerate() {
            if let Some(atom) = letter.atoms().find(|a| !aps.contains(*a)) {
                return Err(TraceError::UndeclaredAtom {
                    index,
                    atom: atom.to_string(),
                });
            }
        }
        let strict = aps.len() == 2
            && aps.contains(REQ)
            && aps.contains(RESP)
            && letters
                .iter()
                .all(|l| l.len() == 1 && (l.contains(REQ) || l.contains(RESP)));
        Ok(Trace {
            aps,
            letters,
            strict,
        })
    }

    /// Builds a trace over `{req, resp}` from arbitrary letters.
    pub fn over_req_resp(letters: Vec<Letter>) -> Result<Self, TraceError> {
        Trace::new([REQ, RESP], letters)
    }

    /// The strict trace corresponding to a word.
    pub fn from_word(w: &Word) -> Self {
        let letters = w.iter().map(Letter::of_symbol).collect();
        Trace {
            aps: BTreeSet::from([REQ.to_string(), RESP.to_string()]),
            letters,
            strict: true,
        }
    }

    /// Converts a strict trace back into a word.
    ///
    /// Fails with [`TraceError::NotStrict`] on the first letter that is not
    /// exactly `{req}` or `{resp}`.
    pub fn to_word(&self) -> Result<Word, TraceError> {
        let mut out = Vec::with_capacity(self.letters.len());
        for (index, l) in self.letters.iter().enumerate() {
            if l.len() == 1 && l.contains(REQ) {
                out.push(Symbol::Req);
            } else if l.len() == 1 && l.contains(RESP) {
                out.push(Symbol::Resp);
            } else {
                return Err(TraceError::NotStrict { index });
            }
        }
        Ok(Word(out))
    }

    pub fn aps(&self) -> impl Iterator<Item = &str> {
        self.aps.iter().map(String::as_str)
    }

    pub fn declares(&self, atom: &str) -> bool {
        self.aps.contains(atom)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn letter(&self, i: usize) -> &Letter {
        &self.letters[i]
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    /// Renders a strict trace as a token line using the given event names.
    pub fn to_token_line(&self, req_name: &str, resp_name: &str) -> Result<String, TraceError> {
        let w = self.to_word()?;
        Ok(w.iter()
            .map(|s| match s {
                Symbol::Req => req_name,
                Symbol::Resp => resp_name,
            })
            .collect::<Vec<_>>()
            .join(" "))
    }

    fn check_req_resp_alphabet(&self) -> Result<(), TraceError> {
        if self.aps.len() != 2 || !self.aps.contains(REQ) || !self.aps.contains(RESP) {
            return Err(TraceError::AlphabetNotReqResp);
        }
        Ok(())
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("ε");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Drops every `∅` letter of a trace over `{req, resp}`, yielding the strict
/// trace of its proper events.
///
/// Letters equal to `{req, resp}` are rejected, not split.
pub fn project_nonempty(t: &Trace) -> Result<Trace, TraceError> {
    t.check_req_resp_alphabet()?;
    let mut letters = Vec::new();
    for (index, l) in t.letters().iter().enumerate() {
        if l.contains(REQ) && l.contains(RESP) {
            return Err(TraceError::MixedLetter { index });
        }
        if !l.is_empty() {
            letters.push(l.clone());
        }
    }
    Ok(Trace {
        aps: t.aps.clone(),
        letters,
        strict: true,
    })
}

/// Call/internal/return classification of a position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tag {
    Call,
    Internal,
    Return,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::Call => "call",
            Tag::Internal => "int",
            Tag::Return => "ret",
        })
    }
}

/// A letter together with its call/internal/return tag.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedLetter {
    base: Letter,
    tag: Tag,
}

impl ExtendedLetter {
    pub fn new(base: Letter, tag: Tag) -> Self {
        ExtendedLetter { base, tag }
    }

    pub fn base(&self) -> &Letter {
        &self.base
    }

    pub fn tag(&self) -> Tag {
        self.tag
    }
}

/// A trace whose positions carry call/internal/return tags, the shape the
/// nested-word operators work on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExtendedTrace {
    letters: Vec<ExtendedLetter>,
}

impl ExtendedTrace {
    pub fn new(letters: Vec<ExtendedLetter>) -> Self {
        ExtendedTrace { letters }
    }

    /// Builds a trace from bare tags, using the canonical base letters
    /// (`{req}` for calls, `{resp}` for returns, `∅` for internals).
    pub fn from_tags(tags: &[Tag]) -> Self {
        let letters = tags
            .iter()
            .map(|&tag| {
                let base = match tag {
                    Tag::Call => Letter::singleton(REQ),
                    Tag::Return => Letter::singleton(RESP),
                    Tag::Internal => Letter::empty(),
                };
                ExtendedLetter { base, tag }
            })
            .collect();
        ExtendedTrace { letters }
    }

    pub fn letters(&self) -> &[ExtendedLetter] {
        &self.letters
    }

    pub fn letter(&self, i: usize) -> &ExtendedLetter {
        &self.letters[i]
    }

    pub fn tag(&self, i: usize) -> Tag {
        self.letters[i].tag
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for ExtendedTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("ε");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.tag())?;
        }
        Ok(())
    }
}

/// Tags a trace over `{req, resp}`: `{req}` becomes a call, `{resp}` a
/// return, and `∅` an internal position.
///
/// The tagging preserves length and base letters. `{req, resp}` letters are
/// rejected.
pub fn tag_extended(t: &Trace) -> Result<ExtendedTrace, TraceError> {
    t.check_req_resp_alphabet()?;
    let mut letters = Vec::with_capacity(t.len());
    for (index, l) in t.letters().iter().enumerate() {
        let tag = match (l.contains(REQ), l.contains(RESP)) {
            (true, true) => return Err(TraceError::MixedLetter { index }),
            (true, false) => Tag::Call,
            (false, true) => Tag::Return,
            (false, false) => Tag::Internal,
        };
        letters.push(ExtendedLetter {
            base: l.clone(),
            tag,
        });
    }
    Ok(ExtendedTrace { letters })
}

/// How an event name is read by the monitors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventClass {
    Req,
    Resp,
    Other,
}

impl FromStr for EventClass {
    type Err = TraceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "req" => Ok(EventClass::Req),
            "resp" => Ok(EventClass::Resp),
            "other" => Ok(EventClass::Other),
            _ => Err(TraceError::MalformedLine {
                line: 1,
                message: format!("unknown event class '{s}' (expected req, resp or other)"),
            }),
        }
    }
}

/// Maps concrete event names (such as `send` or `ack`) onto the abstract
/// request/response alphabet.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EventMapping {
    entries: std::collections::BTreeMap<String, EventClass>,
}

impl EventMapping {
    pub fn new() -> Self {
        EventMapping::default()
    }

    /// The identity mapping `req=req, resp=resp`.
    pub fn identity() -> Self {
        let mut m = EventMapping::new();
        m.insert(REQ, EventClass::Req);
        m.insert(RESP, EventClass::Resp);
        m
    }

    /// Parses a mapping file: one `name=req|resp|other` entry per line, with
    /// `#` comments and blank lines allowed.
    pub fn parse(text: &str) -> Result<Self, TraceError> {
        let mut m = EventMapping::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (name, class) = line.split_once('=').ok_or(TraceError::MalformedLine {
                line: lineno + 1,
                message: format!("expected name=req|resp|other, got '{line}'"),
            })?;
            let class: EventClass =
                class.trim().parse().map_err(|_| TraceError::MalformedLine {
                    line: lineno + 1,
                    message: format!("unknown event class '{}'", class.trim()),
                })?;
            m.insert(name.trim(), class);
        }
        Ok(m)
    }

    pub fn insert(&mut self, name: &str, class: EventClass) {
        self.entries.insert(name.to_string(), class);
    }

    pub fn classify(&self, name: &str) -> Option<EventClass> {
        self.entries.get(name).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// A usable mapping names at least one request event and one response
    /// event; anything less cannot describe a request-response system.
    pub fn validate(&self) -> Result<(), TraceError> {
        let has_req = self.entries.values().any(|c| *c == EventClass::Req);
        let has_resp = self.entries.values().any(|c| *c == EventClass::Resp);
        if has_req && has_resp {
            Ok(())
        } else {
            Err(TraceError::EmptyMapping)
        }
    }
}

/// Input format accepted by [`parse_trace`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceFormat {
    /// Whitespace-separated event names; `#` lines are comments.
    Tokens,
    /// One JSON object per line; the event name sits in `event_field`.
    Jsonl { event_field: String },
}

impl TraceFormat {
    /// JSONL with the default `"event"` field.
    pub fn jsonl() -> Self {
        TraceFormat::Jsonl {
            event_field: "event".to_string(),
        }
    }
}

/// Parses a textual event log into a trace over `{req, resp}`.
///
/// Each event contributes one letter: `{req}` or `{resp}` if its name maps
/// there, `∅` otherwise. With `strict` set, events that do not map to `req`
/// or `resp` are errors instead; the returned trace is then strict.
pub fn parse_trace(
    text: &str,
    format: &TraceFormat,
    mapping: &EventMapping,
    strict: bool,
) -> Result<Trace, TraceError> {
    mapping.validate()?;
    let events = match format {
        TraceFormat::Tokens => tokenize_events(text),
        TraceFormat::Jsonl { event_field } => jsonl_events(text, event_field)?,
    };
    let mut letters = Vec::with_capacity(events.len());
    for (line, name) in events {
        let letter = match mapping.classify(&name) {
            Some(EventClass::Req) => Letter::singleton(REQ),
            Some(EventClass::Resp) => Letter::singleton(RESP),
            Some(EventClass::Other) | None if !strict => Letter::empty(),
            _ => return Err(TraceError::UnmappedEvent { line, event: name }),
        };
        letters.push(letter);
    }
    Trace::over_req_resp(letters)
}

/// Splits a token log into `(line number, event name)` pairs.
fn tokenize_events(text: &str) -> Vec<(usize, String)> {
    let mut events = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        for tok in line.split_whitespace() {
            events.push((lineno + 1, tok.to_string()));
        }
    }
    events
}

/// Extracts `(line number, event name)` pairs from a JSONL log.
fn jsonl_events(text: &str, field: &str) -> Result<Vec<(usize, String)>, TraceError> {
    let mut events = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let value: serde_json::Value =
            serde_json::from_str(line).map_err(|e| TraceError::MalformedLine {
                line: lineno + 1,
                message: format!("invalid JSON: {e}"),
            })?;
        let event = value
            .get(field)
            .ok_or_else(|| TraceError::MalformedLine {
                line: lineno + 1,
                message: format!("missing event field '{field}'"),
            })?
            .as_str()
            .ok_or_else(|| TraceError::MalformedLine {
                line: lineno + 1,
                message: format!("event field '{field}' is not a string"),
            })?;
        events.push((lineno + 1, event.to_string()));
    }
    Ok(events)
}

/// Errors raised while building or parsing traces.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TraceError {
    #[error("line {line}: {message}")]
    MalformedLine { line: usize, message: String },
    #[error("line {line}: event '{event}' does not map to req or resp (strict mode)")]
    UnmappedEvent { line: usize, event: String },
    #[error("mapping must assign at least one event name to req and one to resp")]
    EmptyMapping,
    #[error("letter {index} contains both req and resp, which has no defined reading")]
    MixedLetter { index: usize },
    #[error("expected a trace over exactly {{req, resp}}")]
    AlphabetNotReqResp,
    #[error("letter {index} uses atom '{atom}' outside the declared proposition set")]
    UndeclaredAtom { index: usize, atom: String },
    #[error("letter {index} is not exactly req or resp")]
    NotStrict { index: usize },
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn tokens_with_mapping() {
        let mut m = EventMapping::new();
        m.insert("send", EventClass::Req);
        m.insert("ack", EventClass::Resp);
        let t = parse_trace("send send ack", &TraceFormat::Tokens, &m, true).unwrap();
        assert!(t.is_strict());
        assert_eq!(t.to_word().unwrap(), word("req req resp"));
    }

    #[test]
    fn empty_text_is_empty_trace() {
        let t = parse_trace("", &TraceFormat::Tokens, &EventMapping::identity(), true).unwrap();
        assert!(t.is_empty());
        assert!(t.is_strict());
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# a comment\nreq resp\n\n# another\nresp";
        let t = parse_trace(text, &TraceFormat::Tokens, &EventMapping::identity(), true).unwrap();
        assert_eq!(t.to_word().unwrap(), word("req resp resp"));
    }

    #[test]
    fn jsonl_other_becomes_empty_letter() {
        let mut m = EventMapping::identity();
        m.insert("ping", EventClass::Other);
        let t = parse_trace(
            r#"{"event":"ping"}"#,
            &TraceFormat::jsonl(),
            &m,
            false,
        )
        .unwrap();
        assert_eq!(t.len(), 1);
        assert!(t.letter(0).is_empty());
        assert!(!t.is_strict());
    }

    #[test]
    fn jsonl_reports_malformed_line_number() {
        let text = "{\"event\":\"req\"}\nnot json";
        let err = parse_trace(text, &TraceFormat::jsonl(), &EventMapping::identity(), false)
            .unwrap_err();
        match err {
            TraceError::MalformedLine { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn jsonl_custom_field() {
        let format = TraceFormat::Jsonl {
            event_field: "kind".to_string(),
        };
        let t = parse_trace(
            "{\"kind\":\"req\"}\n{\"kind\":\"resp\"}",
            &format,
            &EventMapping::identity(),
            true,
        )
        .unwrap();
        assert_eq!(t.to_word().unwrap(), word("req resp"));
    }

    #[test]
    fn unmapped_event_in_strict_mode_is_an_error() {
        let err = parse_trace(
            "req noise resp",
            &TraceFormat::Tokens,
            &EventMapping::identity(),
            true,
        )
        .unwrap_err();
        assert_eq!(
            err,
            TraceError::UnmappedEvent {
                line: 1,
                event: "noise".to_string()
            }
        );
    }

    #[test]
    fn unmapped_event_in_tolerant_mode_is_empty_letter() {
        let t = parse_trace(
            "req noise resp",
            &TraceFormat::Tokens,
            &EventMapping::identity(),
            false,
        )
        .unwrap();
        assert_eq!(t.len(), 3);
        assert!(t.letter(1).is_empty());
    }

    #[test]
    fn mapping_without_resp_is_rejected() {
        let mut m = EventMapping::new();
        m.insert("send", EventClass::Req);
        let err = parse_trace("send", &TraceFormat::Tokens, &m, false).unwrap_err();
        assert_eq!(err, TraceError::EmptyMapping);
    }

    #[test]
    fn mapping_file_roundtrip() {
        let m = EventMapping::parse("# demo\nsend=req\nack = resp\nping=other\n").unwrap();
        assert_eq!(m.classify("send"), Some(EventClass::Req));
        assert_eq!(m.classify("ack"), Some(EventClass::Resp));
        assert_eq!(m.classify("ping"), Some(EventClass::Other));
        assert_eq!(m.classify("pong"), None);
    }

    #[test]
    fn project_drops_empty_letters() {
        let t = Trace::over_req_resp(vec![
            Letter::singleton(REQ),
            Letter::empty(),
            Letter::singleton(RESP),
        ])
        .unwrap();
        let p = project_nonempty(&t).unwrap();
        assert!(p.is_strict());
        assert_eq!(p.to_word().unwrap(), word("req resp"));
    }

    #[test]
    fn project_of_all_empty_is_empty_strict() {
        let t = Trace::over_req_resp(vec![Letter::empty(), Letter::empty()]).unwrap();
        let p = project_nonempty(&t).unwrap();
        assert!(p.is_empty());
        assert!(p.is_strict());
    }

    #[test]
    fn project_rejects_mixed_letter() {
        let t = Trace::over_req_resp(vec![Letter::from_atoms([REQ, RESP])]).unwrap();
        assert_eq!(
            project_nonempty(&t).unwrap_err(),
            TraceError::MixedLetter { index: 0 }
        );
    }

    #[test]
    fn project_is_idempotent() {
        // Exhaustive over all traces with letters in {∅, {req}, {resp}} up to length 5.
        let choices = [
            Letter::empty(),
            Letter::singleton(REQ),
            Letter::singleton(RESP),
        ];
        for len in 0..=5usize {
            for code in 0..3usize.pow(len as u32) {
                let mut c = code;
                let mut letters = Vec::new();
                for _ in 0..len {
                    letters.push(choices[c % 3].clone());
                    c /= 3;
                }
                let t = Trace::over_req_resp(letters).unwrap();
                let once = project_nonempty(&t).unwrap();
                let twice = project_nonempty(&once).unwrap();
                assert_eq!(once, twice);
            }
        }
    }

    #[test]
    fn tagging_matches_letters() {
        let t = Trace::over_req_resp(vec![
            Letter::singleton(REQ),
            Letter::empty(),
            Letter::singleton(RESP),
        ])
        .unwrap();
        let e = tag_extended(&t).unwrap();
        assert_eq!(e.tag(0), Tag::Call);
        assert_eq!(e.tag(1), Tag::Internal);
        assert_eq!(e.tag(2), Tag::Return);
        assert_eq!(e.letter(1).base(), &Letter::empty());
    }

    #[test]
    fn tagging_rejects_mixed_letter() {
        let t = Trace::over_req_resp(vec![Letter::from_atoms([REQ, RESP])]).unwrap();
        assert_eq!(
            tag_extended(&t).unwrap_err(),
            TraceError::MixedLetter { index: 0 }
        );
    }

    #[test]
    fn strict_word_token_roundtrip() {
        for text in ["", "req", "resp", "req resp resp", "req req resp"] {
            let w = word(text);
            let t = Trace::from_word(&w);
            let line = t.to_token_line("req", "resp").unwrap();
            let back = parse_trace(&line, &TraceFormat::Tokens, &EventMapping::identity(), true)
                .unwrap();
            assert_eq!(back, t);
        }
    }

    #[test]
    fn undeclared_atom_is_rejected() {
        let err = Trace::new(["req"], vec![Letter::singleton("resp")]).unwrap_err();
        assert_eq!(
            err,
            TraceError::UndeclaredAtom {
                index: 0,
                atom: "resp".to_string()
            }
        );
    }

    #[test]
    fn word_display_and_parse() {
        assert_eq!(word("req resp").to_string(), "req resp");
        assert_eq!(Word::new().to_string(), "ε");
        assert_eq!("ε".parse::<Word>().unwrap(), Word::new());
        assert!("req x".parse::<Word>().is_err());
    }
}
