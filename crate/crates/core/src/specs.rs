//! The semantic layer tying the engines together: the six specification
//! types, counting characterizations, correspondence witnesses, online
//! verdicts, the answers-to-type classifier, and the implication table.
//!
//! Membership in RR3 and RR4 has a counting characterization — suffix
//! balanced for RR3, prefix-balanced with equal totals for RR4 — and an
//! equivalent witness form: an injective (RR3) or bijective (RR4) forward
//! correspondence from request indices to response indices. The canonical
//! witness built here binds responses to the most recent pending request
//! (LIFO), which makes witnesses deterministic and nests links innermost.
//!
//! [`member`] dispatches a membership query to any of the five engines so
//! they can be played against each other; the engines share no code beyond
//! the word type.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::automata::{machine_for, Machine};
use crate::caret::{builtin_caret, eval_caret_trace, QMode};
use crate::grammars::{cfg_for, cyk_member, regex_for, regex_match};
use crate::ltl::{builtin_formula, eval_trace};
use crate::oracle::{backtracking_match, brute_correspondence, OracleError};
use crate::trace::{tag_extended, ExtendedTrace, Symbol, Trace, Word};

/// The six request-response specification types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpecType {
    RR1,
    RR2,
    RR3,
    RR4,
    RR5,
    RR6,
}

impl SpecType {
    pub const ALL: [SpecType; 6] = [
        SpecType::RR1,
        SpecType::RR2,
        SpecType::RR3,
        SpecType::RR4,
        SpecType::RR5,
        SpecType::RR6,
    ];

    /// One-line behavioral summary.
    pub fn description(self) -> &'static str {
        match self {
            SpecType::RR1 => {
                "pending requests may pile up; one response resolves all of them; \
                 responses may also arrive unrequested"
            }
            SpecType::RR2 => {
                "pending requests may pile up; one response resolves all of them; \
                 every response needs a pending request"
            }
            SpecType::RR3 => {
                "pending requests may pile up; each response resolves exactly one; \
                 responses may also arrive unrequested"
            }
            SpecType::RR4 => {
                "pending requests may pile up; each response resolves exactly one; \
                 requests and responses balance exactly"
            }
            SpecType::RR5 => {
                "at most one request pending at a time; responses may also arrive \
                 unrequested"
            }
            SpecType::RR6 => "requests and responses strictly alternate, request first",
        }
    }

    /// A real-world situation the type fits.
    pub fn example_name(self) -> &'static str {
        match self {
            SpecType::RR1 => "calling a waiter",
            SpecType::RR2 => "send/ack in communication",
            SpecType::RR3 => "an MQTT QoS 1 broker",
            SpecType::RR4 => "a vending machine",
            SpecType::RR5 => "a reception desk with numbered tickets",
            SpecType::RR6 => "a toggle light switch",
        }
    }
}

impl fmt::Display for SpecType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpecType::RR1 => "RR1",
            SpecType::RR2 => "RR2",
            SpecType::RR3 => "RR3",
            SpecType::RR4 => "RR4",
            SpecType::RR5 => "RR5",
            SpecType::RR6 => "RR6",
        })
    }
}

impl FromStr for SpecType {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        match s.to_ascii_uppercase().as_str() {
            "RR1" => Ok(SpecType::RR1),
            "RR2" => Ok(SpecType::RR2),
            "RR3" => Ok(SpecType::RR3),
            "RR4" => Ok(SpecType::RR4),
            "RR5" => Ok(SpecType::RR5),
            "RR6" => Ok(SpecType::RR6),
            _ => Err(SpecError::UnknownSpec(s.to_string())),
        }
    }
}

/// The membership engines that can decide a specification type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formalism {
    /// Regular expression (RR1/2/5/6) or context-free grammar via CYK
    /// (RR3/4).
    Grammar,
    /// Temporal formula: plain linear-time logic for the regular types,
    /// call-matching logic for the counting ones.
    Logic,
    /// Finite automaton or one-counter automaton.
    Automaton,
    /// Direct counting conditions; RR3 and RR4 only.
    Counting,
    /// Brute force: naive regex backtracking or exhaustive correspondence
    /// search.
    Oracle,
}

impl Formalism {
    pub const ALL: [Formalism; 5] = [
        Formalism::Grammar,
        Formalism::Logic,
        Formalism::Automaton,
        Formalism::Counting,
        Formalism::Oracle,
    ];
}

impl fmt::Display for Formalism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Formalism::Grammar => "grammar",
            Formalism::Logic => "logic",
            Formalism::Automaton => "automaton",
            Formalism::Counting => "counting",
            Formalism::Oracle => "oracle",
        })
    }
}

impl FromStr for Formalism {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        match s.to_ascii_lowercase().as_str() {
            "grammar" => Ok(Formalism::Grammar),
            "logic" => Ok(Formalism::Logic),
            "automaton" => Ok(Formalism::Automaton),
            "counting" => Ok(Formalism::Counting),
            "oracle" => Ok(Formalism::Oracle),
            _ => Err(SpecError::UnknownFormalism(s.to_string())),
        }
    }
}

/// Errors from asking a question that does not apply to a type, or from
/// malformed classifier answers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("{0} has no regular-expression characterization")]
    NotRegular(SpecType),
    #[error("{0} has no counting characterization")]
    NotCounting(SpecType),
    #[error("no alternative temporal formula is on record for {0}")]
    NoAlternative(SpecType),
    #[error("invalid answers: {0}")]
    InvalidAnswers(&'static str),
    #[error("unknown specification type '{0}' (expected RR1..RR6)")]
    UnknownSpec(String),
    #[error("unknown formalism '{0}' (expected grammar, logic, automaton, counting, or oracle)")]
    UnknownFormalism(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// The counting characterization of RR3 (every suffix has `#req ≤ #resp`)
/// or RR4 (every prefix has `#req ≥ #resp`, with equal totals). Single
/// linear pass. Errors on the other four types.
pub fn counting_member(s: SpecType, w: &Word) -> Result<bool, SpecError> {
    match s {
        SpecType::RR3 => {
            let mut reqs = 0usize;
            let mut resps = 0usize;
            for i in (0..w.len()).rev() {
                match w.symbols()[i] {
                    Symbol::Req => reqs += 1,
                    Symbol::Resp => resps += 1,
                }
                if reqs > resps {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        SpecType::RR4 => {
            let mut balance = 0i64;
            for sym in w.iter() {
                match sym {
                    Symbol::Req => balance += 1,
                    Symbol::Resp => balance -= 1,
                }
                if balance < 0 {
                    return Ok(false);
                }
            }
            Ok(balance == 0)
        }
        other => Err(SpecError::NotCounting(other)),
    }
}

fn tagged(w: &Word) -> ExtendedTrace {
    tag_extended(&Trace::from_word(w)).expect("strict words tag cleanly")
}

/// Decides membership of `w` in type `s` using the selected engine. All
/// engines agree on every word; offering them separately is what makes the
/// cross-validation meaningful.
pub fn member(s: SpecType, w: &Word, formalism: Formalism) -> Result<bool, SpecError> {
    let regular = matches!(
        s,
        SpecType::RR1 | SpecType::RR2 | SpecType::RR5 | SpecType::RR6
    );
    match formalism {
        Formalism::Grammar => {
            if regular {
                Ok(regex_match(&regex_for(s)?, w))
            } else {
                Ok(cyk_member(&cfg_for(s)?, w))
            }
        }
        Formalism::Logic => {
            if regular {
                Ok(eval_trace(&builtin_formula(s)?, &Trace::from_word(w)))
            } else {
                Ok(eval_caret_trace(&builtin_caret(s)?, &tagged(w), QMode::Variant))
            }
        }
        Formalism::Automaton => {
            let run = machine_for(s)
                .run(w)
                .expect("counter bounded by word length");
            Ok(run.accepted)
        }
        Formalism::Counting => counting_member(s, w),
        Formalism::Oracle => {
            if regular {
                Ok(backtracking_match(&regex_for(s)?, w))
            } else {
                let kind = if s == SpecType::RR3 {
                    CorrespondenceKind::Injective
                } else {
                    CorrespondenceKind::Bijective
                };
                Ok(brute_correspondence(w, kind)?.is_some())
            }
        }
    }
}

/// Whether a correspondence must also hit every response index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrespondenceKind {
    Injective,
    Bijective,
}

impl fmt::Display for CorrespondenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CorrespondenceKind::Injective => "injective",
            CorrespondenceKind::Bijective => "bijective",
        })
    }
}

/// A forward, value-distinct assignment of request indices to response
/// indices: the witness form of RR3 (injective) and RR4 (bijective)
/// membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correspondence {
    pairs: BTreeMap<usize, usize>,
    kind: CorrespondenceKind,
}

impl Correspondence {
    pub fn new(pairs: BTreeMap<usize, usize>, kind: CorrespondenceKind) -> Self {
        Correspondence { pairs, kind }
    }

    pub fn pairs(&self) -> &BTreeMap<usize, usize> {
        &self.pairs
    }

    pub fn kind(&self) -> CorrespondenceKind {
        self.kind
    }

    /// Pairs ordered by response index — the order the links are usually
    /// drawn and printed in.
    pub fn pairs_by_response(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self.pairs.iter().map(|(&i, &j)| (i, j)).collect();
        v.sort_by_key(|&(_, j)| j);
        v
    }
}

impl fmt::Display for Correspondence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return f.write_str("(empty)");
        }
        let rendered: Vec<String> = self
            .pairs_by_response()
            .iter()
            .map(|(i, j)| format!("{i}->{j}"))
            .collect();
        f.write_str(&rendered.join(" "))
    }
}

/// Builds the canonical correspondence for `w`, if one exists: requests are
/// stacked, and each response resolves the most recently pending request.
/// In injective mode a response with nothing pending is skipped; in
/// bijective mode it is fatal. Either way, a request left pending at the
/// end means no correspondence exists.
pub fn build_correspondence(w: &Word, kind: CorrespondenceKind) -> Option<Correspondence> {
    let mut pending: Vec<usize> = Vec::new();
    let mut pairs = BTreeMap::new();
    for (j, sym) in w.iter().enumerate() {
        match sym {
            Symbol::Req => pending.push(j),
            Symbol::Resp => match pending.pop() {
                Some(i) => {
                    pairs.insert(i, j);
                }
                None => {
                    if kind == CorrespondenceKind::Bijective {
                        return None;
                    }
                }
            },
        }
    }
    if pending.is_empty() {
        Some(Correspondence { pairs, kind })
    } else {
        None
    }
}

/// Checks every invariant of `rho` against `w`, independently of how the
/// correspondence was produced: keys are exactly the request indices,
/// values are distinct response indices strictly after their requests, and
/// a bijective correspondence covers every response index.
pub fn verify_correspondence(w: &Word, rho: &Correspondence) -> bool {
    let requests: BTreeSet<usize> = (0..w.len())
        .filter(|&i| w.symbols()[i] == Symbol::Req)
        .collect();
    let responses: BTreeSet<usize> = (0..w.len())
        .filter(|&j| w.symbols()[j] == Symbol::Resp)
        .collect();

    let keys: BTreeSet<usize> = rho.pairs.keys().copied().collect();
    if keys != requests {
        return false;
    }
    let values: BTreeSet<usize> = rho.pairs.values().copied().collect();
    if values.len() != rho.pairs.len() || !values.is_subset(&responses) {
        return false;
    }
    if rho.pairs.iter().any(|(&i, &j)| i >= j) {
        return false;
    }
    match rho.kind {
        CorrespondenceKind::Injective => true,
        CorrespondenceKind::Bijective => values == responses,
    }
}

/// An online judgment about a prefix: membership now, and whether any
/// extension could still be a member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    /// The prefix itself is in the language.
    pub in_language: bool,
    /// No extension of the prefix is in the language; permanent by
    /// construction (a stuck automaton never recovers).
    pub doomed: bool,
}

/// Judges a prefix with the automaton engine: membership from acceptance,
/// doom from stuckness.
pub fn verdict(s: SpecType, prefix: &Word) -> Verdict {
    let run = machine_for(s)
        .run(prefix)
        .expect("counter bounded by word length");
    Verdict {
        in_language: run.accepted,
        doomed: run.stuck_at.is_some(),
    }
}

/// Incremental form of [`verdict`] for event streams: feed one symbol at a
/// time and read the verdict after each.
#[derive(Debug, Clone)]
pub struct MonitorSession {
    machine: Machine,
    config: crate::automata::Config,
}

impl MonitorSession {
    pub fn new(s: SpecType) -> Self {
        let machine = machine_for(s);
        let config = machine.initial_config();
        MonitorSession { machine, config }
    }

    /// Consumes one event and returns the verdict for the prefix so far.
    pub fn feed(&mut self, s: Symbol) -> Verdict {
        self.config = self
            .machine
            .step(self.config, s)
            .expect("counter overflow needs 2^64 events");
        self.current()
    }

    /// The verdict for the prefix consumed so far.
    pub fn current(&self) -> Verdict {
        Verdict {
            in_language: self.machine.accepts_config(self.config),
            doomed: self.config.stuck,
        }
    }
}

/// Answers to the three classification questions. The second question is
/// only asked — and only meaningful — when the first answer is yes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Answers {
    /// May several requests be pending at once?
    pub c1: bool,
    /// Does one response resolve all pending requests (rather than exactly
    /// one)? Present exactly when `c1` is true.
    pub c2: Option<bool>,
    /// May a response occur with no pending request?
    pub c3: bool,
}

/// The decision tree mapping answers to a type.
pub fn classify(a: &Answers) -> Result<SpecType, SpecError> {
    match (a.c1, a.c2, a.c3) {
        (true, Some(true), true) => Ok(SpecType::RR1),
        (true, Some(true), false) => Ok(SpecType::RR2),
        (true, Some(false), true) => Ok(SpecType::RR3),
        (true, Some(false), false) => Ok(SpecType::RR4),
        (false, None, true) => Ok(SpecType::RR5),
        (false, None, false) => Ok(SpecType::RR6),
        (true, None, _) => Err(SpecError::InvalidAnswers(
            "the second answer is required when the first is yes",
        )),
        (false, Some(_), _) => Err(SpecError::InvalidAnswers(
            "the second answer only applies when the first is yes",
        )),
    }
}

/// The types a word is guaranteed to satisfy given that it satisfies `s`
/// (reflexive). Confirmed against exhaustive enumeration by the acceptance
/// suite before being trusted.
pub fn implications(s: SpecType) -> BTreeSet<SpecType> {
    let types: &[SpecType] = match s {
        SpecType::RR1 => &[SpecType::RR1],
        SpecType::RR2 => &[SpecType::RR1, SpecType::RR2],
        SpecType::RR3 => &[SpecType::RR1, SpecType::RR3],
        SpecType::RR4 => &[SpecType::RR1, SpecType::RR3, SpecType::RR4],
        SpecType::RR5 => &[SpecType::RR1, SpecType::RR3, SpecType::RR5],
        SpecType::RR6 => &SpecType::ALL,
    };
    types.iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::enumerate_words;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn spec_type_parses_case_insensitively() {
        assert_eq!("rr4".parse::<SpecType>().unwrap(), SpecType::RR4);
        assert_eq!("RR1".parse::<SpecType>().unwrap(), SpecType::RR1);
        assert!(matches!(
            "RR7".parse::<SpecType>(),
            Err(SpecError::UnknownSpec(_))
        ));
        assert_eq!(SpecType::RR3.to_string(), "RR3");
    }

    #[test]
    fn counting_examples() {
        assert!(!counting_member(SpecType::RR3, &word("req req resp")).unwrap());
        assert!(counting_member(SpecType::RR4, &word("req resp req req resp resp")).unwrap());
        assert!(counting_member(SpecType::RR4, &Word::new()).unwrap());
        assert!(counting_member(SpecType::RR3, &word("req resp resp")).unwrap());
        assert!(!counting_member(SpecType::RR4, &word("req resp resp")).unwrap());
        assert_eq!(
            counting_member(SpecType::RR1, &Word::new()).unwrap_err(),
            SpecError::NotCounting(SpecType::RR1)
        );
    }

    #[test]
    fn member_agrees_across_engines_on_inline_examples() {
        for f in Formalism::ALL {
            if f == Formalism::Counting {
                continue; // only RR3/RR4 have a counting engine
            }
            assert!(
                member(SpecType::RR1, &word("req resp resp"), f).unwrap(),
                "{f}"
            );
            assert!(
                !member(SpecType::RR2, &word("req resp resp"), f).unwrap(),
                "{f}"
            );
            assert!(
                member(SpecType::RR6, &word("req resp req resp"), f).unwrap(),
                "{f}"
            );
        }
        // Counting only exists for RR3/RR4.
        assert_eq!(
            member(SpecType::RR1, &Word::new(), Formalism::Counting).unwrap_err(),
            SpecError::NotCounting(SpecType::RR1)
        );
    }

    #[test]
    fn canonical_witness_matches_the_drawn_links() {
        let rho = build_correspondence(
            &word("req resp req req resp resp"),
            CorrespondenceKind::Bijective,
        )
        .unwrap();
        let expected: BTreeMap<usize, usize> = [(0, 1), (3, 4), (2, 5)].into_iter().collect();
        assert_eq!(rho.pairs(), &expected);
        assert_eq!(rho.to_string(), "0->1 3->4 2->5");
    }

    #[test]
    fn correspondence_edge_cases() {
        assert!(build_correspondence(&word("req req resp"), CorrespondenceKind::Injective)
            .is_none());
        let empty = build_correspondence(&Word::new(), CorrespondenceKind::Bijective).unwrap();
        assert!(empty.pairs().is_empty());
        assert_eq!(empty.to_string(), "(empty)");

        // An unmatched response is tolerated injectively, fatal bijectively.
        let inj =
            build_correspondence(&word("req resp resp"), CorrespondenceKind::Injective).unwrap();
        assert_eq!(inj.pairs_by_response(), vec![(0, 1)]);
        assert!(
            build_correspondence(&word("req resp resp"), CorrespondenceKind::Bijective).is_none()
        );
    }

    #[test]
    fn verify_checks_each_invariant() {
        let w = word("req resp");
        let ok = Correspondence::new(
            [(0, 1)].into_iter().collect(),
            CorrespondenceKind::Injective,
        );
        assert!(verify_correspondence(&w, &ok));

        // Forwardness violated.
        let backwards =
            Correspondence::new([(0, 0)].into_iter().collect(), CorrespondenceKind::Injective);
        assert!(!verify_correspondence(&w, &backwards));

        // Totality violated: request 0 is unmapped.
        let partial = Correspondence::new(BTreeMap::new(), CorrespondenceKind::Injective);
        assert!(!verify_correspondence(&w, &partial));

        // Distinctness violated.
        let doubled = Correspondence::new(
            [(0, 2), (1, 2)].into_iter().collect(),
            CorrespondenceKind::Injective,
        );
        assert!(!verify_correspondence(&word("req req resp resp"), &doubled));

        // Bijectivity violated: response 3 is not covered.
        let short = Correspondence::new(
            [(0, 2), (1, 2)].into_iter().collect(),
            CorrespondenceKind::Bijective,
        );
        assert!(!verify_correspondence(&word("req req resp resp"), &short));
        let full = Correspondence::new(
            [(0, 3), (1, 2)].into_iter().collect(),
            CorrespondenceKind::Bijective,
        );
        assert!(verify_correspondence(&word("req req resp resp"), &full));
    }

    #[test]
    fn built_witnesses_always_verify() {
        for w in enumerate_words(&Symbol::ALPHABET, 9).unwrap() {
            for kind in [CorrespondenceKind::Injective, CorrespondenceKind::Bijective] {
                if let Some(rho) = build_correspondence(&w, kind) {
                    assert!(verify_correspondence(&w, &rho), "{w} ({kind})");
                }
            }
        }
    }

    #[test]
    fn witness_existence_matches_counting() {
        for w in enumerate_words(&Symbol::ALPHABET, 9).unwrap() {
            assert_eq!(
                build_correspondence(&w, CorrespondenceKind::Injective).is_some(),
                counting_member(SpecType::RR3, &w).unwrap(),
                "{w}"
            );
            assert_eq!(
                build_correspondence(&w, CorrespondenceKind::Bijective).is_some(),
                counting_member(SpecType::RR4, &w).unwrap(),
                "{w}"
            );
        }
    }

    #[test]
    fn verdict_examples() {
        assert_eq!(
            verdict(SpecType::RR5, &word("req req")),
            Verdict {
                in_language: false,
                doomed: true
            }
        );
        assert_eq!(
            verdict(SpecType::RR3, &word("req req resp")),
            Verdict {
                in_language: false,
                doomed: false
            }
        );
        assert_eq!(
            verdict(SpecType::RR4, &word("resp")),
            Verdict {
                in_language: false,
                doomed: true
            }
        );
        assert_eq!(
            verdict(SpecType::RR6, &Word::new()),
            Verdict {
                in_language: true,
                doomed: false
            }
        );
    }

    #[test]
    fn membership_precludes_doom() {
        for s in SpecType::ALL {
            for w in enumerate_words(&Symbol::ALPHABET, 8).unwrap() {
                let v = verdict(s, &w);
                if v.in_language {
                    assert!(!v.doomed, "{s} on {w}");
                }
            }
        }
    }

    #[test]
    fn monitor_session_streams_verdicts() {
        let mut session = MonitorSession::new(SpecType::RR4);
        assert_eq!(
            session.current(),
            Verdict {
                in_language: true,
                doomed: false
            }
        );
        assert_eq!(
            session.feed(Symbol::Req),
            Verdict {
                in_language: false,
                doomed: false
            }
        );
        assert_eq!(
            session.feed(Symbol::Resp),
            Verdict {
                in_language: true,
                doomed: false
            }
        );
        // One response too many: permanently dead from here on.
        assert_eq!(
            session.feed(Symbol::Resp),
            Verdict {
                in_language: false,
                doomed: true
            }
        );
        assert_eq!(
            session.feed(Symbol::Req),
            Verdict {
                in_language: false,
                doomed: true
            }
        );
    }

    #[test]
    fn session_agrees_with_batch_verdict() {
        for s in SpecType::ALL {
            for w in enumerate_words(&Symbol::ALPHABET, 7).unwrap() {
                let mut session = MonitorSession::new(s);
                let mut last = session.current();
                for sym in w.iter() {
                    last = session.feed(sym);
                }
                assert_eq!(last, verdict(s, &w), "{s} on {w}");
            }
        }
    }

    #[test]
    fn classifier_hits_all_six_leaves() {
        let cases = [
            (true, Some(true), true, SpecType::RR1),
            (true, Some(true), false, SpecType::RR2),
            (true, Some(false), true, SpecType::RR3),
            (true, Some(false), false, SpecType::RR4),
            (false, None, true, SpecType::RR5),
            (false, None, false, SpecType::RR6),
        ];
        let mut seen = BTreeSet::new();
        for (c1, c2, c3, expected) in cases {
            let got = classify(&Answers { c1, c2, c3 }).unwrap();
            assert_eq!(got, expected);
            seen.insert(got);
        }
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn classifier_rejects_inconsistent_answers() {
        assert!(matches!(
            classify(&Answers {
                c1: true,
                c2: None,
                c3: true
            }),
            Err(SpecError::InvalidAnswers(_))
        ));
        assert!(matches!(
            classify(&Answers {
                c1: false,
                c2: Some(true),
                c3: false
            }),
            Err(SpecError::InvalidAnswers(_))
        ));
    }

    #[test]
    fn implication_table() {
        assert!(implications(SpecType::RR2).contains(&SpecType::RR1));
        assert!(implications(SpecType::RR4).contains(&SpecType::RR3));
        assert_eq!(implications(SpecType::RR6).len(), 6);
        assert_eq!(
            implications(SpecType::RR1),
            [SpecType::RR1].into_iter().collect()
        );
        // Implication is reflexive and transitively closed as tabulated.
        for s in SpecType::ALL {
            let imp = implications(s);
            assert!(imp.contains(&s));
            for t in &imp {
                assert!(implications(*t).is_subset(&imp), "{s} -> {t}");
            }
        }
    }
}
