//! Request-response trace specifications, decided five independent ways.
//!
//! A *request-response* requirement says every request event is eventually
//! answered by a response event. That one sentence hides real design
//! choices: may several requests be pending at once? does one response
//! resolve all pending requests or exactly one? may a response arrive with
//! nothing pending? Fixing the three answers yields six distinct
//! specification types, `RR1`–`RR6`, over the two-letter alphabet
//! `{req, resp}`:
//!
//! | type | pending requests | one response resolves | spontaneous responses |
//! |------|------------------|-----------------------|-----------------------|
//! | RR1  | many             | all pending           | allowed               |
//! | RR2  | many             | all pending           | forbidden             |
//! | RR3  | many             | exactly one           | allowed               |
//! | RR4  | many             | exactly one           | forbidden             |
//! | RR5  | at most one      | —                     | allowed               |
//! | RR6  | at most one      | —                     | forbidden             |
//!
//! RR1, RR2, RR5, and RR6 are regular languages; RR3 and RR4 are not (they
//! count pending requests), but are context-free with simple counting
//! characterizations. This crate implements each type in every formalism
//! that can express it —
//!
//! * regular expressions with a linear position-set matcher ([`grammars`]),
//! * context-free grammars with CYK membership ([`grammars`]),
//! * finite-trace temporal logic with past operators ([`ltl`]),
//! * a call-matching temporal logic for the counting types ([`caret`]),
//! * finite and one-counter automata for online monitoring ([`automata`]),
//! * direct counting conditions and correspondence witnesses ([`specs`]),
//! * deliberately naive brute-force oracles ([`oracle`]) —
//!
//! and cross-validates them against each other exhaustively at desk scale.
//! [`specs::member`] is the uniform entry point; [`specs::verdict`] and
//! [`specs::MonitorSession`] give anticipatory online verdicts;
//! [`specs::classify`] maps the three design answers to a type; and
//! [`trace`] parses event logs into the two-letter world.

pub mod automata;
pub mod caret;
pub mod grammars;
pub mod ltl;
pub mod oracle;
pub mod specs;
mod syntax;
pub mod trace;

pub use automata::{
    counter_automaton_for, dfa_for, machine_for, AutomatonError, Config, CounterAction, Dfa,
    Machine, OneCounterAutomaton, RunResult,
};
pub use caret::{
    builtin_caret, eval_caret, eval_caret_trace, innermost_call, matching_return,
    parse_caret_formula, successor, CaretError, CaretFormula, QMode, SuccessorKind,
};
pub use grammars::{
    cfg_for, cyk_member, regex_for, regex_match, Cfg, CfgSymbol, CnfGrammar, CompiledRegex,
    GrammarError, MatchState, Production, Regex,
};
pub use ltl::{
    alternative_formula, builtin_formula, eval, eval_trace, parse_formula, EvalError, Formula,
};
pub use oracle::{
    backtracking_match, brute_correspondence, enumerate_words, extendable, OracleError, WordIter,
};
pub use specs::{
    build_correspondence, classify, counting_member, implications, member, verdict,
    verify_correspondence, Answers, Correspondence, CorrespondenceKind, Formalism, MonitorSession,
    SpecError, SpecType, Verdict,
};
pub use syntax::ParseError;
pub use trace::{
    parse_trace, project_nonempty, tag_extended, EventClass, EventMapping, ExtendedLetter,
    ExtendedTrace, Letter, Symbol, Tag, Trace, TraceError, TraceFormat, Word, REQ, RESP,
};
