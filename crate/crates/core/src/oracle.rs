//! Independent brute-force ground truth: exhaustive word enumeration,
//! exhaustive correspondence search, naive regex backtracking, and bounded
//! extension search.
//!
//! Everything here is deliberately the *slow, obvious* algorithm, sharing
//! no machinery with the production engines: the backtracking matcher
//! interprets the same regex syntax tree but tries splits recursively
//! instead of simulating positions, and the correspondence search tries
//! assignments instead of running the stack construction. Oracles that
//! could fail for the same reason as the code under test would prove
//! nothing. Guards keep the exponential searches at desk scale.

use std::collections::BTreeMap;

use crate::grammars::{regex_for, CompiledRegex, Regex};
use crate::specs::{
    counting_member, verify_correspondence, Correspondence, CorrespondenceKind, SpecType,
};
use crate::trace::{Symbol, Word};

const BRUTE_MAX_LEN: usize = 20;
const ENUMERATE_MAX_LEN: usize = 24;

/// Guard violations of the brute-force searches.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("word of length {len} exceeds the brute-force guard ({max})")]
    LengthGuard { len: usize, max: usize },
    #[error("enumeration bounds out of range: {message}")]
    BadBounds { message: &'static str },
}

/// Yields every word over a fixed alphabet up to a length bound, each
/// exactly once, in length-lexicographic order.
#[derive(Debug, Clone)]
pub struct WordIter {
    alphabet: Vec<Symbol>,
    max_len: usize,
    len: usize,
    /// Digits of the current word, most significant first; indices into
    /// `alphabet`.
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for WordIter {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let word: Word = self.digits.iter().map(|&d| self.alphabet[d]).collect();

        // Advance: increment the least significant digit with carry; on
        // overflow move to the next length.
        let base = self.alphabet.len();
        let mut pos = self.len;
        loop {
            if pos == 0 {
                self.len += 1;
                if self.len > self.max_len {
                    self.done = true;
                } else {
                    self.digits = vec![0; self.len];
                }
                break;
            }
            pos -= 1;
            self.digits[pos] += 1;
            if self.digits[pos] < base {
                break;
            }
            self.digits[pos] = 0;
        }
        Some(word)
    }
}

/// All words over `alphabet` of length at most `max_len`, length-lex
/// ordered; `Σ_{k ≤ max_len} |alphabet|^k` words in total.
pub fn enumerate_words(alphabet: &[Symbol], max_len: usize) -> Result<WordIter, OracleError> {
    if alphabet.is_empty() {
        return Err(OracleError::BadBounds {
            message: "alphabet must not be empty",
        });
    }
    if max_len > ENUMERATE_MAX_LEN {
        return Err(OracleError::BadBounds {
            message: "max_len must be at most 24",
        });
    }
    Ok(WordIter {
        alphabet: alphabet.to_vec(),
        max_len,
        len: 0,
        digits: Vec::new(),
        done: false,
    })
}

/// Finds a correspondence for `w` by exhaustive search: request indices in
/// ascending order, each assigned the smallest unused later response that
/// lets the rest succeed. The first assignment found (lexicographic order)
/// is returned, so results are deterministic; any result is re-checked
/// with [`verify_correspondence`] before being handed out.
pub fn brute_correspondence(
    w: &Word,
    kind: CorrespondenceKind,
) -> Result<Option<Correspondence>, OracleError> {
    if w.len() > BRUTE_MAX_LEN {
        return Err(OracleError::LengthGuard {
            len: w.len(),
            max: BRUTE_MAX_LEN,
        });
    }
    let requests: Vec<usize> = (0..w.len())
        .filter(|&i| w.symbols()[i] == Symbol::Req)
        .collect();
    let responses: Vec<usize> = (0..w.len())
        .filter(|&j| w.symbols()[j] == Symbol::Resp)
        .collect();
    // A bijection needs equally many of each; every assignment is injective
    // with distinct values, so matching counts is also sufficient for
    // surjectivity.
    if kind == CorrespondenceKind::Bijective && requests.len() != responses.len() {
        return Ok(None);
    }

    let mut used = vec![false; w.len()];
    let mut pairs = BTreeMap::new();
    if !assign(&requests, 0, &responses, &mut used, &mut pairs) {
        return Ok(None);
    }
    let rho = Correspondence::new(pairs, kind);
    assert!(
        verify_correspondence(w, &rho),
        "brute-force search produced an invalid correspondence for {w}"
    );
    Ok(Some(rho))
}

fn assign(
    requests: &[usize],
    idx: usize,
    responses: &[usize],
    used: &mut [bool],
    pairs: &mut BTreeMap<usize, usize>,
) -> bool {
    let Some(&i) = requests.get(idx) else {
        return true;
    };
    for &j in responses {
        if j > i && !used[j] {
            used[j] = true;
            pairs.insert(i, j);
            if assign(requests, idx + 1, responses, used, pairs) {
                return true;
            }
            pairs.remove(&i);
            used[j] = false;
        }
    }
    false
}

/// Naive backtracking interpretation of a regex syntax tree: try every
/// split point recursively. Exponential and proud of it — this is the
/// oracle the linear matcher is judged against.
pub fn backtracking_match(r: &Regex, w: &Word) -> bool {
    split_match(r, w.symbols(), 0, w.len())
}

fn split_match(r: &Regex, w: &[Symbol], lo: usize, hi: usize) -> bool {
    match r {
        Regex::Empty => false,
        Regex::Epsilon => lo == hi,
        Regex::Symbol(s) => hi == lo + 1 && w[lo] == *s,
        Regex::Alt(a, b) => split_match(a, w, lo, hi) || split_match(b, w, lo, hi),
        Regex::Concat(a, b) => {
            (lo..=hi).any(|mid| split_match(a, w, lo, mid) && split_match(b, w, mid, hi))
        }
        // Each unrolled iteration consumes at least one symbol, so the
        // recursion terminates even for nullable bodies.
        Regex::Star(a) => {
            lo == hi
                || (lo + 1..=hi).any(|mid| split_match(a, w, lo, mid) && split_match(r, w, mid, hi))
        }
        Regex::Plus(a) => {
            split_match(a, w, lo, hi)
                || (lo + 1..hi).any(|mid| split_match(a, w, lo, mid) && split_match(r, w, mid, hi))
        }
    }
}

/// Is there an extension `u` with `|u| ≤ depth` making `prefix·u` a
/// member of `s`? Membership along the search is judged by the regex and
/// counting engines — never the automata — so this can back the
/// automaton-derived doomed flag independently. The empty extension
/// counts.
pub fn extendable(s: SpecType, prefix: &Word, depth: usize) -> bool {
    match s {
        SpecType::RR1 | SpecType::RR2 | SpecType::RR5 | SpecType::RR6 => {
            let re = CompiledRegex::compile(&regex_for(s).expect("regular type"));
            let mut state = re.start();
            for sym in prefix.iter() {
                state = re.step(state, sym);
            }
            extend_regex(&re, state, depth)
        }
        SpecType::RR3 => {
            let mut w = prefix.clone();
            extend_rr3(&mut w, depth)
        }
        SpecType::RR4 => {
            // A prefix that ever dips below zero is beyond repair; otherwise
            // only the final imbalance matters.
            let mut balance: u64 = 0;
            for sym in prefix.iter() {
                match sym {
                    Symbol::Req => balance += 1,
                    Symbol::Resp => match balance.checked_sub(1) {
                        Some(b) => balance = b,
                        None => return false,
                    },
                }
            }
            extend_rr4(balance, depth)
        }
    }
}

fn extend_regex(re: &CompiledRegex, state: crate::grammars::MatchState, depth: usize) -> bool {
    if re.accepting(state) {
        return true;
    }
    if depth == 0 || re.dead(state) {
        return false;
    }
    // Responses first: they are what usually repairs a pending request.
    extend_regex(re, re.step(state, Symbol::Resp), depth - 1)
        || extend_regex(re, re.step(state, Symbol::Req), depth - 1)
}

fn extend_rr3(w: &mut Word, depth: usize) -> bool {
    if counting_member(SpecType::RR3, w).expect("RR3 has a counting characterization") {
        return true;
    }
    if depth == 0 {
        return false;
    }
    for sym in [Symbol::Resp, Symbol::Req] {
        w.push(sym);
        let ok = extend_rr3(w, depth - 1);
        w.pop();
        if ok {
            return true;
        }
    }
    false
}

fn extend_rr4(balance: u64, depth: usize) -> bool {
    if balance == 0 {
        return true;
    }
    if depth == 0 {
        return false;
    }
    // Appending a response lowers the imbalance (it cannot dip negative:
    // balance is positive here); a request raises it.
    extend_rr4(balance - 1, depth - 1) || extend_rr4(balance + 1, depth - 1)
}
