// Compile-and-run check for the usage example shown in the README.
use rrmon_core::{member, verdict, Formalism, SpecType, Symbol, Word};

#[test]
fn readme_example_holds() {
    let w = Word::from_symbols([Symbol::Req, Symbol::Resp, Symbol::Resp]);
    assert!(member(SpecType::RR3, &w, Formalism::Counting).unwrap());

    // Under RR4 the stray response is fatal, not just "not yet accepted".
    let v = verdict(SpecType::RR4, &w);
    assert!(!v.in_language && v.doomed);
}
