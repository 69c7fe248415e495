//! Word-level grammars: regular expressions for the four regular
//! specification types and context-free grammars for the two others.
//!
//! The regular expression matcher is position-based set simulation (no
//! backtracking): [`CompiledRegex`] assigns a position to every symbol
//! occurrence, precomputes first/last/follow sets, and a match is a single
//! left-to-right sweep carrying a position set. The compiled form also
//! exposes its state so callers can step a prefix incrementally and observe
//! when the set runs dry (no extension can match any more).
//!
//! Context-free membership goes through Chomsky normal form and CYK. The
//! normal form pipeline is the textbook START → TERM → BIN → DEL → UNIT
//! sequence; the empty word is answered separately by the nullability of the
//! *original* start symbol, so the DEL step can drop ε-productions wholesale.

use std::fmt;

use crate::specs::{SpecError, SpecType};
use crate::trace::{Symbol, Word};

/// A regular expression over `{req, resp}`. `0` is the empty language, `1`
/// the empty word; `Plus` is kept as its own node so expressions print the
/// way they are usually written.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Regex {
    Empty,
    Epsilon,
    Symbol(Symbol),
    Alt(Box<Regex>, Box<Regex>),
    Concat(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
    Plus(Box<Regex>),
}

impl Regex {
    pub fn symbol(s: Symbol) -> Self {
        Regex::Symbol(s)
    }

    pub fn req() -> Self {
        Regex::Symbol(Symbol::Req)
    }

    pub fn resp() -> Self {
        Regex::Symbol(Symbol::Resp)
    }

    #[must_use]
    pub fn alt(self, rhs: Self) -> Self {
        Regex::Alt(Box::new(self), Box::new(rhs))
    }

    #[must_use]
    pub fn then(self, rhs: Self) -> Self {
        Regex::Concat(Box::new(self), Box::new(rhs))
    }

    #[must_use]
    pub fn star(self) -> Self {
        Regex::Star(Box::new(self))
    }

    #[must_use]
    pub fn plus(self) -> Self {
        Regex::Plus(Box::new(self))
    }
}

/// The regular expression characterizing a regular specification type.
pub fn regex_for(s: SpecType) -> Result<Regex, SpecError> {
    let req = Regex::req;
    let resp = Regex::resp;
    match s {
        // resp* (req+ resp+)*
        SpecType::RR1 => Ok(resp()
            .star()
            .then(req().plus().then(resp().plus()).star())),
        // (req+ resp)*
        SpecType::RR2 => Ok(req().plus().then(resp()).star()),
        // resp* (req resp+)*
        SpecType::RR5 => Ok(resp().star().then(req().then(resp().plus()).star())),
        // (req resp)*
        SpecType::RR6 => Ok(req().then(resp()).star()),
        SpecType::RR3 | SpecType::RR4 => Err(SpecError::NotRegular(s)),
    }
}

/// Whole-word match of `w` against `r`.
pub fn regex_match(r: &Regex, w: &Word) -> bool {
    CompiledRegex::compile(r).matches(w)
}

/// Position-set form of a regular expression, ready for linear matching.
#[derive(Debug, Clone)]
pub struct CompiledRegex {
    nullable: bool,
    first: u128,
    last: u128,
    follow: Vec<u128>,
    sym_mask: [u128; 2],
}

/// A prefix's worth of matching progress; advance it with
/// [`CompiledRegex::step`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchState {
    mask: u128,
    started: bool,
}

impl CompiledRegex {
    /// Compiles `r`. Supports up to 128 symbol occurrences, far beyond any
    /// expression this crate builds.
    pub fn compile(r: &Regex) -> Self {
        let mut syms = Vec::new();
        let mut follow = Vec::new();
        let glu = build(r, &mut syms, &mut follow);
        assert!(syms.len() <= 128, "regular expression too large to compile");
        let mut sym_mask = [0u128; 2];
        for (p, s) in syms.iter().enumerate() {
            sym_mask[s.index()] |= 1 << p;
        }
        CompiledRegex {
            nullable: glu.nullable,
            first: glu.first,
            last: glu.last,
            follow,
            sym_mask,
        }
    }

    /// State before any symbol has been consumed.
    pub fn start(&self) -> MatchState {
        MatchState {
            mask: 0,
            started: false,
        }
    }

    /// Consumes one symbol.
    pub fn step(&self, state: MatchState, s: Symbol) -> MatchState {
        let reachable = if state.started {
            let mut acc = 0u128;
            let mut m = state.mask;
            while m != 0 {
                let p = m.trailing_zeros() as usize;
                m &= m - 1;
                acc |= self.follow[p];
            }
            acc
        } else {
            self.first
        };
        MatchState {
            mask: reachable & self.sym_mask[s.index()],
            started: true,
        }
    }

    /// Does the prefix consumed so far form a full match?
    pub fn accepting(&self, state: MatchState) -> bool {
        if state.started {
            state.mask & self.last != 0
        } else {
            self.nullable
        }
    }

    /// True when no extension of the consumed prefix can match.
    pub fn dead(&self, state: MatchState) -> bool {
        state.started && state.mask == 0
    }

    pub fn matches(&self, w: &Word) -> bool {
        let mut state = self.start();
        for s in w.iter() {
            state = self.step(state, s);
            if self.dead(state) {
                return false;
            }
        }
        self.accepting(state)
    }
}

struct Glu {
    nullable: bool,
    first: u128,
    last: u128,
}

fn build(r: &Regex, syms: &mut Vec<Symbol>, follow: &mut Vec<u128>) -> Glu {
    match r {
        Regex::Empty => Glu {
            nullable: false,
            first: 0,
            last: 0,
        },
        Regex::Epsilon => Glu {
            nullable: true,
            first: 0,
            last: 0,
        },
        Regex::Symbol(s) => {
            let p = syms.len();
            syms.push(*s);
            follow.push(0);
            Glu {
                nullable: false,
                first: 1 << p,
                last: 1 << p,
            }
        }
        Regex::Alt(a, b) => {
            let ga = build(a, syms, follow);
            let gb = build(b, syms, follow);
            Glu {
                nullable: ga.nullable || gb.nullable,
                first: ga.first | gb.first,
                last: ga.last | gb.last,
            }
        }
        Regex::Concat(a, b) => {
            let ga = build(a, syms, follow);
            let gb = build(b, syms, follow);
            link(ga.last, gb.first, follow);
            Glu {
                nullable: ga.nullable && gb.nullable,
                first: ga.first | if ga.nullable { gb.first } else { 0 },
                last: gb.last | if gb.nullable { ga.last } else { 0 },
            }
        }
        Regex::Star(a) => {
            let ga = build(a, syms, follow);
            link(ga.last, ga.first, follow);
            Glu {
                nullable: true,
                first: ga.first,
                last: ga.last,
            }
        }
        Regex::Plus(a) => {
            let ga = build(a, syms, follow);
            link(ga.last, ga.first, follow);
            Glu {
                nullable: ga.nullable,
                first: ga.first,
                last: ga.last,
            }
        }
    }
}

fn link(from: u128, to: u128, follow: &mut [u128]) {
    let mut m = from;
    while m != 0 {
        let p = m.trailing_zeros() as usize;
        m &= m - 1;
        follow[p] |= to;
    }
}

// Printing levels: alternation, concatenation, postfix, atom.
fn regex_level(r: &Regex) -> u8 {
    match r {
        Regex::Alt(..) => 0,
        Regex::Concat(..) => 1,
        Regex::Star(_) | Regex::Plus(_) => 2,
        _ => 3,
    }
}

fn write_regex(r: &Regex, min: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    if regex_level(r) < min {
        out.write_str("(")?;
        write_regex(r, 0, out)?;
        return out.write_str(")");
    }
    match r {
        Regex::Empty => out.write_str("0"),
        Regex::Epsilon => out.write_str("1"),
        Regex::Symbol(s) => write!(out, "{s}"),
        Regex::Alt(a, b) => {
            write_regex(a, 0, out)?;
            out.write_str(" | ")?;
            write_regex(b, 0, out)
        }
        Regex::Concat(a, b) => {
            write_regex(a, 1, out)?;
            out.write_str(" ")?;
            write_regex(b, 1, out)
        }
        Regex::Star(a) => {
            write_regex(a, 3, out)?;
            out.write_str("*")
        }
        Regex::Plus(a) => {
            write_regex(a, 3, out)?;
            out.write_str("+")
        }
    }
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_regex(self, 0, f)
    }
}

/// A symbol in a production body.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CfgSymbol {
    Terminal(Symbol),
    Nonterminal(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Production {
    pub head: usize,
    pub body: Vec<CfgSymbol>,
}

/// A context-free grammar over `{req, resp}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cfg {
    nonterminals: Vec<String>,
    start: usize,
    productions: Vec<Production>,
}

/// A malformed grammar description.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GrammarError {
    #[error("production body uses '{name}', which is neither a terminal nor a rule head")]
    UndeclaredSymbol { name: String },
}

impl Cfg {
    /// Builds a grammar from named rules. `req` and `resp` in bodies are
    /// terminals; every other name must appear as some rule's head (or be
    /// the start symbol).
    pub fn new<'a>(
        start: &str,
        rules: impl IntoIterator<Item = (&'a str, Vec<&'a str>)>,
    ) -> Result<Cfg, GrammarError> {
        let rules: Vec<(&str, Vec<&str>)> = rules.into_iter().collect();
        let mut nonterminals: Vec<String> = vec![start.to_string()];
        for (head, _) in &rules {
            if !nonterminals.iter().any(|n| n == head) {
                nonterminals.push(head.to_string());
            }
        }
        let find = |name: &str| nonterminals.iter().position(|n| n == name);
        let mut productions = Vec::new();
        for (head, body) in &rules {
            let head = find(head).expect("heads were just registered");
            let mut out = Vec::with_capacity(body.len());
            for name in body {
                let sym = match *name {
                    "req" => CfgSymbol::Terminal(Symbol::Req),
                    "resp" => CfgSymbol::Terminal(Symbol::Resp),
                    other => CfgSymbol::Nonterminal(find(other).ok_or_else(|| {
                        GrammarError::UndeclaredSymbol {
                            name: other.to_string(),
                        }
                    })?),
                };
                out.push(sym);
            }
            productions.push(Production { head, body: out });
        }
        Ok(Cfg {
            nonterminals,
            start: 0,
            productions,
        })
    }

    pub fn start_name(&self) -> &str {
        &self.nonterminals[self.start]
    }

    pub fn productions(&self) -> &[Production] {
        &self.productions
    }

    /// Least fixpoint of "derives ε" over the nonterminals.
    fn nullable_set(&self) -> Vec<bool> {
        let mut nullable = vec![false; self.nonterminals.len()];
        loop {
            let mut changed = false;
            for p in &self.productions {
                if nullable[p.head] {
                    continue;
                }
                let all = p.body.iter().all(|s| match s {
                    CfgSymbol::Terminal(_) => false,
                    CfgSymbol::Nonterminal(n) => nullable[*n],
                });
                if all {
                    nullable[p.head] = true;
                    changed = true;
                }
            }
            if !changed {
                return nullable;
            }
        }
    }

    /// Converts to Chomsky normal form.
    pub fn to_cnf(&self) -> CnfGrammar {
        let accepts_empty = self.nullable_set()[self.start];

        let mut names: Vec<String> = self.nonterminals.clone();
        let mut rules: Vec<(usize, Vec<CfgSymbol>)> = self
            .productions
            .iter()
            .map(|p| (p.head, p.body.clone()))
            .collect();

        // START: a fresh start symbol never occurs on a right-hand side.
        let start = names.len();
        names.push("S0".to_string());
        rules.push((start, vec![CfgSymbol::Nonterminal(self.start)]));

        // TERM: terminals in long bodies become dedicated nonterminals.
        let mut term_nt = [usize::MAX; 2];
        let mut term_for = |sym: Symbol, names: &mut Vec<String>| {
            let slot = &mut term_nt[sym.index()];
            if *slot == usize::MAX {
                *slot = names.len();
                names.push(format!("T_{sym}"));
            }
            *slot
        };
        let mut extra = Vec::new();
        for (_, body) in &mut rules {
            if body.len() < 2 {
                continue;
            }
            for s in body.iter_mut() {
                if let CfgSymbol::Terminal(sym) = *s {
                    let nt = term_for(sym, &mut names);
                    *s = CfgSymbol::Nonterminal(nt);
                }
            }
        }
        for (i, slot) in term_nt.iter().enumerate() {
            if *slot != usize::MAX {
                extra.push((*slot, vec![CfgSymbol::Terminal(Symbol::ALPHABET[i])]));
            }
        }
        rules.extend(extra);

        // BIN: bodies longer than two are chained through fresh symbols.
        let mut binned = Vec::new();
        for (head, body) in rules {
            if body.len() <= 2 {
                binned.push((head, body));
                continue;
            }
            let mut current = head;
            for &sym in &body[..body.len() - 2] {
                let fresh = names.len();
                names.push(format!("B{}", names.len()));
                binned.push((current, vec![sym, CfgSymbol::Nonterminal(fresh)]));
                current = fresh;
            }
            binned.push((current, body[body.len() - 2..].to_vec()));
        }
        let mut rules = binned;

        // DEL: drop ε-productions, compensating with shortened variants.
        let nullable = {
            let mut nullable = vec![false; names.len()];
            loop {
                let mut changed = false;
                for (head, body) in &rules {
                    if !nullable[*head]
                        && body.iter().all(|s| match s {
                            CfgSymbol::Terminal(_) => false,
                            CfgSymbol::Nonterminal(n) => nullable[*n],
                        })
                    {
                        nullable[*head] = true;
                        changed = true;
                    }
                }
                if !changed {
                    break nullable;
                }
            }
        };
        let mut deleted: Vec<(usize, Vec<CfgSymbol>)> = Vec::new();
        for (head, body) in &rules {
            let options: Vec<Vec<CfgSymbol>> = body.iter().fold(vec![Vec::new()], |acc, s| {
                let mut next = Vec::new();
                for prefix in &acc {
                    let mut keep = prefix.clone();
                    keep.push(*s);
                    next.push(keep);
                    if matches!(s, CfgSymbol::Nonterminal(n) if nullable[*n]) {
                        next.push(prefix.clone());
                    }
                }
                next
            });
            for opt in options {
                if !opt.is_empty() && !deleted.contains(&(*head, opt.clone())) {
                    deleted.push((*head, opt));
                }
            }
        }
        rules = deleted;

        // UNIT: inline chains of single-nonterminal productions.
        let n = names.len();
        let mut unit = vec![vec![false; n]; n];
        for (i, row) in unit.iter_mut().enumerate() {
            row[i] = true;
        }
        loop {
            let mut changed = false;
            for (head, body) in &rules {
                if let [CfgSymbol::Nonterminal(b)] = body[..] {
                    let reach = unit[b].clone();
                    for (c, reached) in reach.into_iter().enumerate() {
                        if reached && !unit[*head][c] {
                            unit[*head][c] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut binary = Vec::new();
        let mut terminal = Vec::new();
        for (a, reach) in unit.iter().enumerate() {
            for (head, body) in &rules {
                if !reach[*head] {
                    continue;
                }
                match body[..] {
                    [CfgSymbol::Terminal(s)] => {
                        if !terminal.contains(&(a, s)) {
                            terminal.push((a, s));
                        }
                    }
                    [x, y] => {
                        let (b, c) = match (x, y) {
                            (CfgSymbol::Nonterminal(b), CfgSymbol::Nonterminal(c)) => (b, c),
                            _ => unreachable!("TERM left terminals only in unit bodies"),
                        };
                        if !binary.contains(&(a, b, c)) {
                            binary.push((a, b, c));
                        }
                    }
                    _ => {}
                }
            }
        }

        assert!(n <= 64, "CNF grammar too large for the CYK bitmask table");
        CnfGrammar {
            names,
            start,
            binary,
            terminal,
            accepts_empty,
        }
    }
}

impl fmt::Display for Cfg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, name) in self.nonterminals.iter().enumerate() {
            let bodies: Vec<String> = self
                .productions
                .iter()
                .filter(|p| p.head == i)
                .map(|p| {
                    if p.body.is_empty() {
                        "ε".to_string()
                    } else {
                        p.body
                            .iter()
                            .map(|s| match s {
                                CfgSymbol::Terminal(t) => t.name().to_string(),
                                CfgSymbol::Nonterminal(n) => self.nonterminals[*n].clone(),
                            })
                            .collect::<Vec<_>>()
                            .join(" ")
                    }
                })
                .collect();
            if !bodies.is_empty() {
                writeln!(f, "{} -> {}", name, bodies.join(" | "))?;
            }
        }
        Ok(())
    }
}

/// A grammar in Chomsky normal form plus the original grammar's answer for
/// the empty word.
#[derive(Debug, Clone)]
pub struct CnfGrammar {
    #[allow(dead_code)]
    names: Vec<String>,
    start: usize,
    binary: Vec<(usize, usize, usize)>,
    terminal: Vec<(usize, Symbol)>,
    accepts_empty: bool,
}

impl CnfGrammar {
    /// CYK membership over the normal form.
    pub fn member(&self, w: &Word) -> bool {
        if w.is_empty() {
            return self.accepts_empty;
        }
        let n = w.len();
        // tab[len - 1][start]: bitmask of nonterminals deriving w[start..start + len].
        let mut tab = vec![vec![0u64; n]; n];
        for (i, sym) in w.iter().enumerate() {
            for &(a, s) in &self.terminal {
                if s == sym {
                    tab[0][i] |= 1 << a;
                }
            }
        }
        // every substring length, every start, every split
        for len in 2..=n {
            for start in 0..=n - len {
                let mut mask = 0u64;
                for split in 1..len {
                    let left = tab[split - 1][start];
                    let right = tab[len - split - 1][start + split];
                    if left == 0 || right == 0 {
                        continue;
                    }
                    for &(a, b, c) in &self.binary {
                        if left >> b & 1 == 1 && right >> c & 1 == 1 {
                            mask |= 1 << a;
                        }
                    }
                }
                tab[len - 1][start] = mask;
            }
        }
        tab[n - 1][0] >> self.start & 1 == 1
    }
}

/// The context-free grammar characterizing RR3 or RR4.
pub fn cfg_for(s: SpecType) -> Result<Cfg, SpecError> {
    match s {
        SpecType::RR3 => Ok(Cfg::new(
            "S",
            [
                ("S", vec!["S", "req", "S", "resp"]),
                ("S", vec!["S", "resp"]),
                ("S", vec![]),
            ],
        )
        .expect("fixed grammar is well formed")),
        SpecType::RR4 => Ok(Cfg::new(
            "S",
            [("S", vec!["S", "req", "S", "resp"]), ("S", vec![])],
        )
        .expect("fixed grammar is well formed")),
        other => Err(SpecError::NotCounting(other)),
    }
}

/// CYK membership for `w` in the language of `g`.
pub fn cyk_member(g: &Cfg, w: &Word) -> bool {
    g.to_cnf().member(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::enumerate_words;
    use crate::specs::counting_member;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn regex_shapes() {
        assert_eq!(
            regex_for(SpecType::RR2).unwrap(),
            Regex::req().plus().then(Regex::resp()).star()
        );
        assert_eq!(
            regex_for(SpecType::RR6).unwrap(),
            Regex::req().then(Regex::resp()).star()
        );
        assert_eq!(
            regex_for(SpecType::RR3).unwrap_err(),
            SpecError::NotRegular(SpecType::RR3)
        );
    }

    #[test]
    fn regex_display() {
        assert_eq!(
            regex_for(SpecType::RR1).unwrap().to_string(),
            "resp* (req+ resp+)*"
        );
        assert_eq!(regex_for(SpecType::RR2).unwrap().to_string(), "(req+ resp)*");
    }

    #[test]
    fn regex_match_examples() {
        let rr1 = regex_for(SpecType::RR1).unwrap();
        let rr2 = regex_for(SpecType::RR2).unwrap();
        let rr5 = regex_for(SpecType::RR5).unwrap();
        let rr6 = regex_for(SpecType::RR6).unwrap();

        assert!(regex_match(&rr1, &word("req resp resp")));
        assert!(!regex_match(&rr2, &word("req resp resp")));
        assert!(regex_match(&rr2, &word("req req resp")));
        assert!(regex_match(&rr5, &word("resp req resp")));
        assert!(!regex_match(&rr5, &word("req req resp resp")));
        assert!(regex_match(&rr6, &Word::new()));
        assert!(!regex_match(&rr6, &word("resp")));
    }

    #[test]
    fn compiled_regex_exposes_dead_states() {
        let rr6 = CompiledRegex::compile(&regex_for(SpecType::RR6).unwrap());
        let mut state = rr6.start();
        assert!(rr6.accepting(state));
        state = rr6.step(state, Symbol::Req);
        assert!(!rr6.accepting(state));
        assert!(!rr6.dead(state));
        state = rr6.step(state, Symbol::Req);
        assert!(rr6.dead(state));
        // Dead is absorbing.
        state = rr6.step(state, Symbol::Resp);
        assert!(rr6.dead(state));
    }

    #[test]
    fn cfg_shapes() {
        let rr3 = cfg_for(SpecType::RR3).unwrap();
        let expected = Cfg::new(
            "S",
            [
                ("S", vec!["S", "req", "S", "resp"]),
                ("S", vec!["S", "resp"]),
                ("S", vec![]),
            ],
        )
        .unwrap();
        assert_eq!(rr3, expected);
        assert_eq!(rr3.productions().len(), 3);
        assert_eq!(cfg_for(SpecType::RR4).unwrap().productions().len(), 2);
        assert_eq!(
            cfg_for(SpecType::RR1).unwrap_err(),
            SpecError::NotCounting(SpecType::RR1)
        );
    }

    #[test]
    fn cyk_examples() {
        let rr3 = cfg_for(SpecType::RR3).unwrap();
        let rr4 = cfg_for(SpecType::RR4).unwrap();
        assert!(cyk_member(&rr3, &word("resp")));
        assert!(cyk_member(&rr4, &word("req resp")));
        assert!(cyk_member(&rr3, &Word::new()));
        assert!(cyk_member(&rr4, &Word::new()));
        assert!(!cyk_member(&rr4, &word("resp")));
        assert!(!cyk_member(&rr3, &word("req req resp")));
        assert!(cyk_member(&rr3, &word("req req resp resp resp")));
    }

    #[test]
    fn unit_chains_survive_normalization() {
        let g = Cfg::new("A", [("A", vec!["B"]), ("B", vec!["req"])]).unwrap();
        let cnf = g.to_cnf();
        assert!(cnf.member(&word("req")));
        assert!(!cnf.member(&Word::new()));
        assert!(!cnf.member(&word("resp")));
    }

    #[test]
    fn undeclared_symbol_is_rejected() {
        let err = Cfg::new("S", [("S", vec!["Q", "req"])]).unwrap_err();
        assert_eq!(
            err,
            GrammarError::UndeclaredSymbol {
                name: "Q".to_string()
            }
        );
    }

    #[test]
    fn cyk_agrees_with_counting_up_to_nine() {
        let rr3 = cfg_for(SpecType::RR3).unwrap().to_cnf();
        let rr4 = cfg_for(SpecType::RR4).unwrap().to_cnf();
        for w in enumerate_words(&Symbol::ALPHABET, 9).unwrap() {
            assert_eq!(
                rr3.member(&w),
                counting_member(SpecType::RR3, &w).unwrap(),
                "RR3 on {w}"
            );
            assert_eq!(
                rr4.member(&w),
                counting_member(SpecType::RR4, &w).unwrap(),
                "RR4 on {w}"
            );
        }
    }

    #[test]
    fn rr4_language_is_contained_in_rr3() {
        let rr3 = cfg_for(SpecType::RR3).unwrap().to_cnf();
        let rr4 = cfg_for(SpecType::RR4).unwrap().to_cnf();
        for w in enumerate_words(&Symbol::ALPHABET, 10).unwrap() {
            if rr4.member(&w) {
                assert!(rr3.member(&w), "{w}");
            }
        }
    }
}
