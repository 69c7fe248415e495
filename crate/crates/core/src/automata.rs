//! Finite automata and one-counter automata for the six specification
//! types, with step-at-a-time execution suitable for online monitoring.
//!
//! A missing transition is modeled as a *stuck* configuration rather than an
//! error: stuck is absorbing, a stuck run can never accept, and the index of
//! the first stuck step is reported so callers can explain rejections. The
//! counter of a [`OneCounterAutomaton`] is a `u64` that never wraps; an
//! increment past `u64::MAX` is a distinct error instead.
//!
//! The counter machines built here are *visibly* counting: requests
//! increment, responses decrement (saturating for the machine that tolerates
//! unmatched responses), and nothing else touches the counter.
//! [`OneCounterAutomaton::is_visibly_counting`] checks that shape for
//! hand-built machines.

use crate::specs::SpecType;
use crate::trace::{Symbol, Word};

/// How a transition changes the counter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CounterAction {
    Increment,
    /// Subtract one; only allowed when the counter is known positive.
    Decrement,
    /// Subtract one, stopping at zero.
    SaturatingDecrement,
    Keep,
}

/// Execution failures that are not ordinary rejection.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AutomatonError {
    #[error("counter overflow: the counter exceeded u64::MAX")]
    CounterOverflow,
    #[error("state {state} decrements on a zero counter")]
    DecrementAtZero { state: usize },
}

/// A deterministic finite automaton over `{req, resp}`; absent entries in
/// `delta` mean the word is rejected outright (stuck).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    state_names: Vec<String>,
    initial: usize,
    accepting: Vec<bool>,
    delta: Vec<[Option<usize>; 2]>,
}

impl Dfa {
    pub fn new(
        state_names: Vec<String>,
        initial: usize,
        accepting: Vec<bool>,
        delta: Vec<[Option<usize>; 2]>,
    ) -> Self {
        assert_eq!(state_names.len(), accepting.len());
        assert_eq!(state_names.len(), delta.len());
        assert!(initial < state_names.len());
        Dfa {
            state_names,
            initial,
            accepting,
            delta,
        }
    }

    pub fn state_name(&self, state: usize) -> &str {
        &self.state_names[state]
    }

    pub fn transition(&self, state: usize, s: Symbol) -> Option<usize> {
        self.delta[state][s.index()]
    }
}

/// Per-state, per-symbol transitions of a one-counter automaton, split by
/// the counter test: index 0 applies when the counter is zero, index 1 when
/// it is positive.
pub type CounterRule = [Option<(CounterAction, usize)>; 2];

/// A deterministic one-counter automaton over `{req, resp}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneCounterAutomaton {
    state_names: Vec<String>,
    initial: usize,
    accepting: Vec<bool>,
    rules: Vec<[CounterRule; 2]>,
    accept_requires_zero: bool,
}

impl OneCounterAutomaton {
    /// Builds a machine, rejecting rules that would decrement a zero
    /// counter.
    pub fn new(
        state_names: Vec<String>,
        initial: usize,
        accepting: Vec<bool>,
        rules: Vec<[CounterRule; 2]>,
        accept_requires_zero: bool,
    ) -> Result<Self, AutomatonError> {
        assert_eq!(state_names.len(), accepting.len());
        assert_eq!(state_names.len(), rules.len());
        assert!(initial < state_names.len());
        for (state, by_symbol) in rules.iter().enumerate() {
            for rule in by_symbol {
                if let Some((CounterAction::Decrement, _)) = rule[0] {
                    return Err(AutomatonError::DecrementAtZero { state });
                }
            }
        }
        Ok(OneCounterAutomaton {
            state_names,
            initial,
            accepting,
            rules,
            accept_requires_zero,
        })
    }

    pub fn state_name(&self, state: usize) -> &str {
        &self.state_names[state]
    }

    /// True when requests only ever increment and responses only ever
    /// decrement (hard or saturating, with saturation or no-op at zero).
    pub fn is_visibly_counting(&self) -> bool {
        self.rules.iter().all(|by_symbol| {
            let req_ok = by_symbol[Symbol::Req.index()]
                .iter()
                .flatten()
                .all(|(action, _)| *action == CounterAction::Increment);
            let resp = &by_symbol[Symbol::Resp.index()];
            let resp_zero_ok = resp[0].iter().all(|(action, _)| {
                matches!(
                    action,
                    CounterAction::SaturatingDecrement | CounterAction::Keep
                )
            });
            let resp_pos_ok = resp[1].iter().all(|(action, _)| {
                matches!(
                    action,
                    CounterAction::Decrement | CounterAction::SaturatingDecrement
                )
            });
            req_ok && resp_zero_ok && resp_pos_ok
        })
    }
}

/// A point in a run: current state, counter value, and whether the run has
/// fallen off the transition relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub state: usize,
    pub counter: u64,
    pub stuck: bool,
}

/// Outcome of running a whole word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunResult {
    pub accepted: bool,
    /// Index of the symbol on which the run got stuck, if any.
    pub stuck_at: Option<usize>,
    pub final_config: Config,
}

/// Either kind of acceptor, behind one stepping interface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Machine {
    Dfa(Dfa),
    Counter(OneCounterAutomaton),
}

impl Machine {
    pub fn initial_config(&self) -> Config {
        let state = match self {
            Machine::Dfa(d) => d.initial,
            Machine::Counter(c) => c.initial,
        };
        Config {
            state,
            counter: 0,
            stuck: false,
        }
    }

    /// Advances one symbol. Stuck configurations are absorbing: stepping
    /// them returns them unchanged.
    pub fn step(&self, config: Config, s: Symbol) -> Result<Config, AutomatonError> {
        if config.stuck {
            return Ok(config);
        }
        match self {
            Machine::Dfa(d) => Ok(match d.delta[config.state][s.index()] {
                Some(next) => Config {
                    state: next,
                    ..config
                },
                None => Config {
                    stuck: true,
                    ..config
                },
            }),
            Machine::Counter(c) => {
                let slot = usize::from(config.counter > 0);
                match c.rules[config.state][s.index()][slot] {
                    None => Ok(Config {
                        stuck: true,
                        ..config
                    }),
                    Some((action, next)) => {
                        let counter = match action {
                            CounterAction::Increment => config
                                .counter
                                .checked_add(1)
                                .ok_or(AutomatonError::CounterOverflow)?,
                            CounterAction::Decrement => config.counter - 1,
                            CounterAction::SaturatingDecrement => config.counter.saturating_sub(1),
                            CounterAction::Keep => config.counter,
                        };
                        Ok(Config {
                            state: next,
                            counter,
                            stuck: false,
                        })
                    }
                }
            }
        }
    }

    /// Would stopping here accept?
    pub fn accepts_config(&self, config: Config) -> bool {
        if config.stuck {
            return false;
        }
        match self {
            Machine::Dfa(d) => d.accepting[config.state],
            Machine::Counter(c) => {
                c.accepting[config.state] && (!c.accept_requires_zero || config.counter == 0)
            }
        }
    }

    pub fn state_name(&self, config: Config) -> &str {
        match self {
            Machine::Dfa(d) => d.state_name(config.state),
            Machine::Counter(c) => c.state_name(config.state),
        }
    }

    /// Runs the whole word from the initial configuration.
    pub fn run(&self, w: &Word) -> Result<RunResult, AutomatonError> {
        let mut config = self.initial_config();
        let mut stuck_at = None;
        for (i, s) in w.iter().enumerate() {
            config = self.step(config, s)?;
            if config.stuck && stuck_at.is_none() {
                stuck_at = Some(i);
            }
        }
        Ok(RunResult {
            accepted: self.accepts_config(config),
            stuck_at,
            final_config: config,
        })
    }
}

/// The two-state acceptor for a regular specification type.
pub fn dfa_for(s: SpecType) -> Result<Dfa, crate::specs::SpecError> {
    let q0 = 0;
    let q1 = 1;
    // Start from the most permissive machine and remove the loop(s) the
    // stricter types forbid: the resp loop at q0 admits spontaneous
    // responses, the req loop at q1 admits overlapping requests.
    let mut delta = vec![
        [Some(q1), Some(q0)], // q0: req -> q1, resp -> q0
        [Some(q1), Some(q0)], // q1: req -> q1, resp -> q0
    ];
    match s {
        SpecType::RR1 => {}
        SpecType::RR2 => delta[q0][Symbol::Resp.index()] = None,
        SpecType::RR5 => delta[q1][Symbol::Req.index()] = None,
        SpecType::RR6 => {
            delta[q0][Symbol::Resp.index()] = None;
            delta[q1][Symbol::Req.index()] = None;
        }
        SpecType::RR3 | SpecType::RR4 => return Err(crate::specs::SpecError::NotRegular(s)),
    }
    Ok(Dfa::new(
        vec!["q0".to_string(), "q1".to_string()],
        q0,
        vec![true, false],
        delta,
    ))
}

/// The one-counter acceptor for RR3 or RR4.
pub fn counter_automaton_for(s: SpecType) -> Result<OneCounterAutomaton, crate::specs::SpecError> {
    let q0 = 0;
    let q1 = 1;
    let inc = CounterAction::Increment;
    let rules = match s {
        SpecType::RR3 => {
            // Unmatched responses are tolerated: decrementing saturates, so
            // the machine is never stuck and acceptance is decided by where
            // the run ends and whether the counter drained.
            let sat = CounterAction::SaturatingDecrement;
            vec![
                [
                    [Some((inc, q1)), Some((inc, q1))],
                    [Some((sat, q0)), Some((sat, q0))],
                ],
                [
                    [Some((inc, q1)), Some((inc, q1))],
                    [Some((sat, q0)), Some((sat, q0))],
                ],
            ]
        }
        SpecType::RR4 => {
            // A response with nothing pending has no transition: the run
            // gets stuck, and no extension can recover.
            let dec = CounterAction::Decrement;
            vec![
                [[Some((inc, q1)), Some((inc, q1))], [None, Some((dec, q0))]],
                [[Some((inc, q1)), Some((inc, q1))], [None, Some((dec, q0))]],
            ]
        }
        other => return Err(crate::specs::SpecError::NotCounting(other)),
    };
    Ok(OneCounterAutomaton::new(
        vec!["q0".to_string(), "q1".to_string()],
        q0,
        vec![true, false],
        rules,
        true,
    )
    .expect("fixed machines never decrement at zero"))
}

/// The acceptor for any specification type, behind the uniform [`Machine`]
/// interface.
pub fn machine_for(s: SpecType) -> Machine {
    match s {
        SpecType::RR1 | SpecType::RR2 | SpecType::RR5 | SpecType::RR6 => {
            Machine::Dfa(dfa_for(s).expect("regular type"))
        }
        SpecType::RR3 | SpecType::RR4 => {
            Machine::Counter(counter_automaton_for(s).expect("counting type"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::enumerate_words;
    use crate::specs::SpecError;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn dfa_shapes() {
        let rr1 = dfa_for(SpecType::RR1).unwrap();
        assert_eq!(rr1.transition(0, Symbol::Resp), Some(0));
        assert_eq!(rr1.transition(1, Symbol::Req), Some(1));

        let rr2 = dfa_for(SpecType::RR2).unwrap();
        assert_eq!(rr2.transition(0, Symbol::Resp), None);
        assert_eq!(rr2.transition(1, Symbol::Req), Some(1));

        let rr6 = dfa_for(SpecType::RR6).unwrap();
        assert_eq!(rr6.transition(0, Symbol::Resp), None);
        assert_eq!(rr6.transition(1, Symbol::Req), None);

        assert_eq!(
            dfa_for(SpecType::RR3).unwrap_err(),
            SpecError::NotRegular(SpecType::RR3)
        );
        assert_eq!(
            counter_automaton_for(SpecType::RR1).unwrap_err(),
            SpecError::NotCounting(SpecType::RR1)
        );
    }

    #[test]
    fn dfa_runs() {
        let rr1 = machine_for(SpecType::RR1);
        let rr5 = machine_for(SpecType::RR5);
        let rr6 = machine_for(SpecType::RR6);

        let r = rr1.run(&word("req req resp")).unwrap();
        assert!(r.accepted);
        assert_eq!(r.stuck_at, None);

        let r = rr5.run(&word("req req")).unwrap();
        assert!(!r.accepted);
        assert_eq!(r.stuck_at, Some(1));

        let r = rr6.run(&word("resp")).unwrap();
        assert!(!r.accepted);
        assert_eq!(r.stuck_at, Some(0));

        assert!(rr6.run(&Word::new()).unwrap().accepted);
        assert!(rr6.run(&word("req resp")).unwrap().accepted);
        assert!(!rr6.run(&word("req")).unwrap().accepted);
    }

    #[test]
    fn counter_runs() {
        let rr3 = machine_for(SpecType::RR3);
        let rr4 = machine_for(SpecType::RR4);

        // The lenient machine is never stuck but still demands a drained
        // counter in q0.
        let r = rr3.run(&word("req req resp")).unwrap();
        assert!(!r.accepted);
        assert_eq!(r.stuck_at, None);
        assert_eq!(r.final_config.counter, 1);

        assert!(rr3.run(&word("resp req resp")).unwrap().accepted);
        assert!(rr3.run(&word("req req resp resp resp")).unwrap().accepted);

        let r = rr4.run(&word("req resp resp")).unwrap();
        assert!(!r.accepted);
        assert_eq!(r.stuck_at, Some(2));

        assert_eq!(rr4.run(&word("resp")).unwrap().stuck_at, Some(0));
        assert!(rr4.run(&word("req resp req req resp resp")).unwrap().accepted);
        assert!(!rr4.run(&word("req req resp")).unwrap().accepted);
    }

    #[test]
    fn decrement_at_zero_is_rejected_at_construction() {
        let dec = CounterAction::Decrement;
        let err = OneCounterAutomaton::new(
            vec!["q0".to_string()],
            0,
            vec![true],
            vec![[[Some((dec, 0)), Some((dec, 0))], [None, None]]],
            true,
        )
        .unwrap_err();
        assert_eq!(err, AutomatonError::DecrementAtZero { state: 0 });
    }

    #[test]
    fn built_in_counter_machines_are_visibly_counting() {
        assert!(counter_automaton_for(SpecType::RR3)
            .unwrap()
            .is_visibly_counting());
        assert!(counter_automaton_for(SpecType::RR4)
            .unwrap()
            .is_visibly_counting());

        // A machine that increments on responses is not.
        let inc = CounterAction::Increment;
        let bad = OneCounterAutomaton::new(
            vec!["q0".to_string()],
            0,
            vec![true],
            vec![[
                [Some((inc, 0)), Some((inc, 0))],
                [Some((inc, 0)), Some((inc, 0))],
            ]],
            true,
        )
        .unwrap();
        assert!(!bad.is_visibly_counting());
    }

    #[test]
    fn run_agrees_with_manual_stepping_and_stuck_is_absorbing() {
        for s in SpecType::ALL {
            let m = machine_for(s);
            for w in enumerate_words(&Symbol::ALPHABET, 6).unwrap() {
                let by_run = m.run(&w).unwrap();
                let mut config = m.initial_config();
                let mut stuck_at = None;
                for (i, sym) in w.iter().enumerate() {
                    let was_stuck = config.stuck;
                    config = m.step(config, sym).unwrap();
                    if was_stuck {
                        assert!(config.stuck, "{s} on {w}: stuck must be absorbing");
                    }
                    if config.stuck && stuck_at.is_none() {
                        stuck_at = Some(i);
                    }
                }
                assert_eq!(by_run.accepted, m.accepts_config(config), "{s} on {w}");
                assert_eq!(by_run.stuck_at, stuck_at, "{s} on {w}");
                assert_eq!(by_run.final_config, config, "{s} on {w}");
                if by_run.stuck_at.is_some() {
                    assert!(!by_run.accepted, "{s} on {w}: stuck runs never accept");
                }
            }
        }
    }

    #[test]
    fn counters_track_request_response_imbalance() {
        let rr3 = machine_for(SpecType::RR3);
        let rr4 = machine_for(SpecType::RR4);
        for w in enumerate_words(&Symbol::ALPHABET, 8).unwrap() {
            // Lenient machine: the counter is the fold of saturating
            // decrements and increments.
            let expected = w.iter().fold(0u64, |c, s| match s {
                Symbol::Req => c + 1,
                Symbol::Resp => c.saturating_sub(1),
            });
            assert_eq!(rr3.run(&w).unwrap().final_config.counter, expected, "{w}");

            // Strict machine: while unstuck, the counter is exactly
            // requests minus responses.
            let r = rr4.run(&w).unwrap();
            if r.stuck_at.is_none() {
                let reqs = w.count(Symbol::Req) as u64;
                let resps = w.count(Symbol::Resp) as u64;
                assert_eq!(r.final_config.counter, reqs - resps, "{w}");
            }
        }
    }
}
