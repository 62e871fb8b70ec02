mod common;

use std::path::PathBuf;

use asquare::corpus::{builtin, desk_corpus_jsonl, load_corpus, run_suite, RunOptions};
use asquare::{format_cycles, parse_cycles, Group};

fn shipped() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus/desk.jsonl")
}

#[test]
fn shipped_corpus_matches_builtins() {
    let on_disk = std::fs::read_to_string(shipped()).unwrap();
    assert_eq!(on_disk, desk_corpus_jsonl().unwrap());
}

#[test]
fn cycle_text_round_trip_preserves_groups() {
    for entry in load_corpus(shipped()).unwrap() {
        let g = builtin(&entry.name).unwrap();
        let gens = g
            .generators()
            .iter()
            .map(|x| parse_cycles(&format_cycles(x), g.degree()).unwrap())
            .collect();
        let back = Group::new(g.degree(), gens).unwrap();
        assert_eq!(back.order(), g.order(), "{}", entry.name);
        assert_eq!(
            common::table(&back).sizes(),
            common::table(&g).sizes(),
            "{}",
            entry.name
        );
    }
}

#[test]
fn shipped_pins_pass() {
    let report = run_suite(&load_corpus(shipped()).unwrap(), &RunOptions::default()).unwrap();
    for e in &report.entries {
        assert!(e.error.is_none(), "{}: {:?}", e.name, e.error);
        assert!(!e.pins.is_empty());
        assert!(e.pins.iter().all(|p| p.ok), "{}: {:?}", e.name, e.pins);
        assert!(e.appendix.as_ref().unwrap().agrees, "{}", e.name);
        // verdict counts reconcile with subset counts
        for s in &e.primes {
            let holding = s
                .subsets
                .iter()
                .filter(|v| v.verdict.hypothesis.holds)
                .count();
            assert_eq!(holding, s.hypothesis_holding);
            if s.skipped.is_none() {
                assert_eq!(s.subsets.len(), (1usize << s.order_p_classes) - 1);
            }
        }
    }
    assert_eq!(report.exit_code(), 0);
}
