//! Batch sweep over a corpus: class table, every normal subset of every
//! prime, the class-square test and regression pins, one entry at a time.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::Prime;
use crate::corpus::file::CorpusEntry;
use crate::error::{Error, Result};
use crate::group::Limits;
use crate::perm::format_cycles;
use crate::structure::{normal_subsets_of_order_p, series_report, NormalSubset, SeriesReport};
use crate::theorems::{
    appendix_class_square_test, check_hypothesis, sweep_primes, verify_theorem_a,
    verify_theorem_gn, ClassSquareOutcome, GnReport, GroupContext, Status, VerdictReport,
    DEFAULT_SEED,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub limits: Limits,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            limits: Limits::default(),
            seed: DEFAULT_SEED,
            jobs: 1,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassSummary {
    pub representative: String,
    pub size: usize,
    pub element_order: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubsetVerdict {
    pub class_ids: Vec<usize>,
    pub verdict: VerdictReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimeSweep {
    pub p: Prime,
    pub order_p_classes: usize,
    /// Set when the unions were not enumerated.
    pub skipped: Option<String>,
    pub subsets: Vec<SubsetVerdict>,
    pub hypothesis_holding: usize,
    pub theorem_gn: Option<GnReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PinCheck {
    pub field: String,
    pub expected: Value,
    pub actual: Value,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AppendixResult {
    pub outcome: ClassSquareOutcome,
    /// Single classes (odd prime order) satisfying the hypothesis, found by
    /// scanning `A²` directly.
    pub hypothesis_classes: Vec<usize>,
    /// The class-square test flags exactly those classes.
    pub agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub degree: usize,
    pub error: Option<String>,
    pub order: Option<u128>,
    pub series: Option<SeriesReport>,
    pub classes: Vec<ClassSummary>,
    pub primes: Vec<PrimeSweep>,
    pub appendix: Option<AppendixResult>,
    pub pins: Vec<PinCheck>,
    pub pin_mismatches: usize,
    pub violations: usize,
    /// Wall-clock time; not covered by the determinism contract.
    pub elapsed_ms: u64,
}

impl EntryReport {
    fn failed(entry: &CorpusEntry, e: Error) -> Self {
        EntryReport {
            name: entry.name.clone(),
            degree: entry.degree,
            error: Some(e.to_string()),
            order: None,
            series: None,
            classes: Vec::new(),
            primes: Vec::new(),
            appendix: None,
            pins: Vec::new(),
            pin_mismatches: 0,
            violations: 0,
            elapsed_ms: 0,
        }
    }

    pub fn subsets_tested(&self) -> usize {
        self.primes.iter().map(|s| s.subsets.len()).sum()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub tool_version: String,
    pub seed: u64,
    pub entries: Vec<EntryReport>,
    pub violations: usize,
    pub pin_mismatches: usize,
    pub failed_entries: usize,
}

impl RunReport {
    /// 0 when clean, 1 on a pin mismatch or violation.
    pub fn exit_code(&self) -> i32 {
        if self.violations > 0 || self.pin_mismatches > 0 {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }
}

fn sweep_prime(ctx: &GroupContext, p: Prime, seed: u64) -> Result<PrimeSweep> {
    let table = ctx.table();
    let order_p_classes = crate::structure::classes_of_order(table, p).len();
    let theorem_gn = Some(verify_theorem_gn(ctx, p)?);
    let mut sweep = PrimeSweep {
        p,
        order_p_classes,
        skipped: None,
        subsets: Vec::new(),
        hypothesis_holding: 0,
        theorem_gn,
    };
    let subsets = match normal_subsets_of_order_p(table, p) {
        Ok(s) => s,
        Err(e @ Error::SubsetCap { .. }) => {
            sweep.skipped = Some(e.to_string());
            return Ok(sweep);
        }
        Err(e) => return Err(e),
    };
    for subset in subsets {
        let verdict = verify_theorem_a(ctx, &subset, seed)?;
        if verdict.hypothesis.holds {
            sweep.hypothesis_holding += 1;
        }
        sweep.subsets.push(SubsetVerdict {
            class_ids: subset.class_ids().to_vec(),
            verdict,
        });
    }
    Ok(sweep)
}

fn appendix(ctx: &GroupContext) -> Result<AppendixResult> {
    let table = ctx.table();
    let outcome = appendix_class_square_test(table)?;
    let mut hypothesis_classes = Vec::new();
    for &i in &outcome.tested {
        let subset = NormalSubset::from_classes(table, &[i])?;
        if check_hypothesis(&subset).holds {
            hypothesis_classes.push(i);
        }
    }
    let agrees = hypothesis_classes == outcome.offending;
    Ok(AppendixResult {
        outcome,
        hypothesis_classes,
        agrees,
    })
}

fn pin(report: &mut EntryReport, field: &str, expected: Value, actual: Value) {
    let ok = expected == actual;
    if !ok {
        report.pin_mismatches += 1;
    }
    report.pins.push(PinCheck {
        field: field.to_string(),
        expected,
        actual,
        ok,
    });
}

fn check_pins(entry: &CorpusEntry, report: &mut EntryReport) {
    let Some(exp) = &entry.expected else { return };
    if let Some(o) = exp.order {
        pin(report, "order", json!(o), json!(report.order));
    }
    if let Some(s) = exp.soluble {
        let actual = report.series.as_ref().map(|r| r.soluble);
        pin(report, "soluble", json!(s), json!(actual));
    }
    if let Some(c) = exp.class_count {
        pin(report, "class_count", json!(c), json!(report.classes.len()));
    }
    if let Some(a) = exp.appendix_passes {
        let actual = report.appendix.as_ref().map(|r| r.outcome.passes);
        pin(report, "appendix_passes", json!(a), json!(actual));
    }
    if let Some(counts) = &exp.hypothesis_holding {
        for (&p, &n) in counts {
            let actual = report
                .primes
                .iter()
                .find(|s| s.p.get() == p && s.skipped.is_none())
                .map(|s| s.hypothesis_holding);
            pin(
                report,
                &format!("hypothesis_holding.{p}"),
                json!(n),
                json!(actual),
            );
        }
    }
}

fn analyse(entry: &CorpusEntry, options: &RunOptions, report: &mut EntryReport) -> Result<()> {
    let group = entry.group(options.limits)?;
    report.order = Some(group.order());
    group.check_enumerable()?;
    report.series = Some(series_report(&group)?);
    let ctx = GroupContext::new(group)?;
    report.classes = ctx
        .table()
        .classes()
        .iter()
        .map(|c| ClassSummary {
            representative: format_cycles(c.representative()),
            size: c.size(),
            element_order: c.element_order(),
        })
        .collect();
    for p in sweep_primes(ctx.group()) {
        let sweep = sweep_prime(&ctx, p, options.seed)?;
        report.violations += sweep
            .subsets
            .iter()
            .filter(|s| s.verdict.status == Status::TheoremViolation)
            .count();
        if sweep
            .theorem_gn
            .as_ref()
            .is_some_and(|g| g.check == crate::theorems::Check::Fails)
        {
            report.violations += 1;
        }
        report.primes.push(sweep);
    }
    let app = appendix(&ctx)?;
    if !app.agrees {
        report.violations += 1;
    }
    report.appendix = Some(app);
    Ok(())
}

/// Runs one entry; errors are recorded in the report rather than returned.
pub fn run_entry(entry: &CorpusEntry, options: &RunOptions) -> EntryReport {
    let start = Instant::now();
    let mut report = EntryReport::failed(entry, Error::Consistency(String::new()));
    report.error = None;
    if let Err(e) = analyse(entry, options, &mut report) {
        let order = report.order;
        report = EntryReport::failed(entry, e);
        report.order = order;
    }
    check_pins(entry, &mut report);
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

/// Entries run in parallel across `jobs` threads; the report keeps corpus
/// order.
pub fn run_suite(entries: &[CorpusEntry], options: &RunOptions) -> Result<RunReport> {
    let reports: Vec<EntryReport> = if options.jobs <= 1 {
        entries.iter().map(|e| run_entry(e, options)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .map_err(|e| Error::Consistency(e.to_string()))?;
        pool.install(|| entries.par_iter().map(|e| run_entry(e, options)).collect())
    };
    Ok(RunReport {
        tool_version: TOOL_VERSION.to_string(),
        seed: options.seed,
        violations: reports.iter().map(|r| r.violations).sum(),
        pin_mismatches: reports.iter().map(|r| r.pin_mismatches).sum(),
        failed_entries: reports.iter().filter(|r| r.error.is_some()).count(),
        entries: reports,
    })
}

/// Subset counts per prime, for summaries.
pub fn holding_counts(report: &EntryReport) -> BTreeMap<u64, usize> {
    report
        .primes
        .iter()
        .map(|s| (s.p.get(), s.hypothesis_holding))
        .collect()
}
