//! Group corpus: builtin constructors, corpus files and the batch runner.

mod builtin;
mod file;
mod run;

use std::collections::BTreeMap;

pub use builtin::{
    alternating, builtin, builtin_with_limits, cyclic, diag_alt4_cubed, dicyclic, dihedral,
    extraspecial_27, frobenius_21, psl2, symmetric,
};
pub use file::{load_corpus, parse_corpus, CorpusEntry, Expected};
pub use run::{
    holding_counts, run_entry, run_suite, AppendixResult, ClassSummary, EntryReport, PinCheck,
    PrimeSweep, RunOptions, RunReport, SubsetVerdict, TOOL_VERSION,
};

use crate::error::Result;

/// The shipped corpus: name, order, soluble, class count, and hypothesis
/// counts per prime where known independently.
type DeskRow = (&'static str, u128, bool, Option<usize>, &'static [(u64, usize)]);

const DESK: &[DeskRow] = &[
    ("sym:3", 6, true, Some(3), &[]),
    ("sym:4", 24, true, Some(5), &[]),
    ("sym:5", 120, false, Some(7), &[]),
    ("sym:6", 720, false, Some(11), &[]),
    ("alt:4", 12, true, Some(4), &[(3, 2)]),
    ("alt:5", 60, false, Some(5), &[(2, 0), (3, 0), (5, 0)]),
    ("alt:6", 360, false, Some(7), &[(2, 0), (3, 0), (5, 0)]),
    ("cyclic:6", 6, true, Some(6), &[]),
    ("dihedral:8", 8, true, Some(5), &[]),
    ("dihedral:10", 10, true, Some(4), &[]),
    ("dihedral:16", 16, true, Some(7), &[]),
    ("quaternion:8", 8, true, Some(5), &[]),
    ("frobenius:21", 21, true, Some(5), &[]),
    ("psl2:7", 168, false, Some(6), &[(2, 0), (3, 0), (7, 0)]),
    (
        "psl2:11",
        660,
        false,
        Some(8),
        &[(2, 0), (3, 0), (5, 0), (11, 0)],
    ),
    (
        "psl2:13",
        1092,
        false,
        Some(9),
        &[(2, 0), (3, 0), (7, 0), (13, 0)],
    ),
    ("extraspecial:27:+", 27, true, Some(11), &[]),
    ("extraspecial:27:-", 27, true, Some(11), &[]),
    ("wr:cyclic:3:3", 81, true, None, &[]),
    ("prod:sym:3:2", 36, true, Some(9), &[]),
    ("wr:sym:3:2", 72, true, None, &[]),
    ("diag-alt4cubed", 576, true, None, &[]),
    ("prod:alt:4:3", 1728, true, Some(64), &[]),
];

/// Simple groups whose normal subsets should all fail the hypothesis.
pub const SIMPLE_BUILTINS: &[&str] = &["alt:5", "alt:6", "psl2:7", "psl2:11", "psl2:13"];

pub fn desk_corpus() -> Result<Vec<CorpusEntry>> {
    DESK.iter()
        .map(|&(name, order, soluble, classes, holding)| {
            let expected = Expected {
                order: Some(order),
                soluble: Some(soluble),
                class_count: classes,
                appendix_passes: SIMPLE_BUILTINS.contains(&name).then_some(true),
                hypothesis_holding: (!holding.is_empty())
                    .then(|| holding.iter().copied().collect::<BTreeMap<_, _>>()),
            };
            Ok(CorpusEntry::from_group(
                name,
                &builtin(name)?,
                Some(expected),
            ))
        })
        .collect()
}

/// The shipped corpus as line-delimited JSON.
pub fn desk_corpus_jsonl() -> Result<String> {
    Ok(desk_corpus()?
        .iter()
        .map(|e| e.to_json_line() + "\n")
        .collect())
}
