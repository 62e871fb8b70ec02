use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use asquare::corpus::{builtin_with_limits, load_corpus, run_suite, RunOptions, RunReport};
use asquare::group::block_cycle;
use asquare::structure::conjugacy_classes;
use asquare::theorems::{
    appendix_class_square_test, verify_pgroup_lemma_abundant, verify_pgroup_lemma_gen_abelian,
    verify_theorem_a, wreath_witness_search, GroupContext, Status, DEFAULT_SEED,
};
use asquare::{format_cycles, parse_cycles, Error, Group, Limits, Prime};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser)]
#[command(
    name = "asquare",
    version,
    about = "Normal sets of p-elements with p-element squares"
)]
struct Cli {
    /// Largest group order that may be enumerated.
    #[arg(long, global = true, default_value_t = asquare::group::DEFAULT_ENUMERATION_BOUND)]
    max_order: u128,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for `check` (one corpus entry per task).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep every group of a corpus file.
    Check { corpus: String },
    /// Class-square test on a builtin group.
    AppendixTest { group: String },
    /// Verdict for the union of the classes of the given elements.
    TheoremA {
        group: String,
        /// Class representative in cycle text; repeat for a union.
        #[arg(long = "class", required = true)]
        classes: Vec<String>,
    },
    /// Conjugacy class table.
    Classes { group: String },
    /// Witness in H wr C_p; `x` defaults to the block cycle.
    WreathLemma {
        builtin: String,
        p: u64,
        #[arg(long)]
        x: Option<String>,
    },
    /// Both p-group lemmas.
    PgroupLemmas { group: String },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn print_json(value: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serialisable")
    );
}

fn load_group(name: &str, limits: Limits) -> Result<Group, Failure> {
    Ok(builtin_with_limits(name, limits)?)
}

fn check(cli: &Cli, path: &str, limits: Limits) -> Result<u8, Failure> {
    let entries = load_corpus(path)?;
    let options = RunOptions {
        limits,
        seed: cli.seed,
        jobs: cli.jobs.max(1),
    };
    let report = run_suite(&entries, &options)?;
    match cli.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print_report(&report),
    }
    Ok(report.exit_code() as u8)
}

fn print_report(report: &RunReport) {
    println!(
        "{:<22} {:>7} {:>7} {:>8} {:>8} {:>5} {:>6}  notes",
        "group", "order", "classes", "subsets", "holding", "viol", "ms"
    );
    for e in &report.entries {
        let holding: usize = e.primes.iter().map(|s| s.hypothesis_holding).sum();
        let mut notes: Vec<String> = Vec::new();
        if let Some(err) = &e.error {
            notes.push(format!("error: {err}"));
        }
        for s in e.primes.iter().filter(|s| s.skipped.is_some()) {
            notes.push(format!("p={} skipped", s.p));
        }
        for p in e.pins.iter().filter(|p| !p.ok) {
            notes.push(format!(
                "pin {} expected {} got {}",
                p.field, p.expected, p.actual
            ));
        }
        println!(
            "{:<22} {:>7} {:>7} {:>8} {:>8} {:>5} {:>6}  {}",
            e.name,
            e.order.map_or("-".into(), |o| o.to_string()),
            e.classes.len(),
            e.subsets_tested(),
            holding,
            e.violations,
            e.elapsed_ms,
            notes.join("; ")
        );
    }
    println!(
        "violations: {}  pin mismatches: {}  failed entries: {}",
        report.violations, report.pin_mismatches, report.failed_entries
    );
}

fn classes(cli: &Cli, name: &str, limits: Limits) -> Result<u8, Failure> {
    let g = load_group(name, limits)?;
    let table = conjugacy_classes(&g)?;
    let rows: Vec<_> = table
        .classes()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            (
                i,
                format_cycles(c.representative()),
                c.size(),
                c.element_order(),
            )
        })
        .collect();
    match cli.format {
        Format::Json => print_json(&json!({
            "group": name,
            "order": g.order(),
            "classes": rows.iter().map(|(i, r, s, o)| json!({
                "id": i, "representative": r, "size": s, "element_order": o
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            println!("{name}: order {}, {} classes", g.order(), rows.len());
            println!("{:>3} {:>6} {:>6}  representative", "id", "size", "order");
            for (i, r, s, o) in rows {
                println!("{i:>3} {s:>6} {o:>6}  {r}");
            }
        }
    }
    Ok(0)
}

fn appendix(cli: &Cli, name: &str, limits: Limits) -> Result<u8, Failure> {
    let g = load_group(name, limits)?;
    let table = conjugacy_classes(&g)?;
    let out = appendix_class_square_test(&table)?;
    match cli.format {
        Format::Json => print_json(&json!({ "group": name, "outcome": out })),
        Format::Text => {
            println!("{name}: {}", if out.passes { "true" } else { "false" });
            println!("tested classes: {:?}", out.tested);
            for &i in &out.offending {
                let c = &table.classes()[i];
                println!(
                    "square of class {i} ({}) consists of p-elements",
                    format_cycles(c.representative())
                );
            }
        }
    }
    Ok(0)
}

fn theorem_a(cli: &Cli, name: &str, reps: &[String], limits: Limits) -> Result<u8, Failure> {
    let g = load_group(name, limits)?;
    let reps = reps
        .iter()
        .map(|r| parse_cycles(r, g.degree()))
        .collect::<Result<Vec<_>, _>>()?;
    let ctx = GroupContext::new(g)?;
    let subset = ctx.subset_of_classes(&reps)?;
    let v = verify_theorem_a(&ctx, &subset, cli.seed)?;
    match cli.format {
        Format::Json => print_json(&v),
        Format::Text => {
            println!(
                "A = classes {:?}, p = {}, |A| = {}",
                subset.class_ids(),
                subset.prime(),
                subset.len()
            );
            println!("hypothesis: {}", v.hypothesis.holds);
            if let Some(c) = &v.hypothesis.counterexample {
                println!("  {} * {} has order {}", c.a, c.b, c.product_order);
            }
            println!("status: {:?}", v.status);
            let opt = |o: Option<u128>| o.map_or("-".to_string(), |o| o.to_string());
            println!("|<A>| = {}  soluble: {:?}", opt(v.q_order), v.q_soluble);
            println!("O_p(G) = 1: {:?}  p odd: {:?}", v.op_trivial, v.p_odd);
            println!(
                "|F(<A>)| = {}  nontrivial p'-group: {:?}",
                opt(v.fitting_order),
                v.fitting_nontrivial_p_prime
            );
            println!(
                "|<A>/F(<A>)| = {}  elementary abelian: {:?}",
                opt(v.quotient_order),
                v.quotient_elementary_abelian
            );
            println!("A^2 of order p: {:?}", v.square_orders_exactly_p);
            println!(
                "Frobenius: {:?}{}",
                v.frobenius.check,
                v.frobenius
                    .kernel_order
                    .map_or(String::new(), |k| format!(" (kernel order {k})"))
            );
            for viol in &v.violations {
                println!("VIOLATION: {viol}");
            }
        }
    }
    Ok(if v.status == Status::TheoremViolation {
        1
    } else {
        0
    })
}

fn wreath(cli: &Cli, name: &str, p: u64, x: Option<&str>, limits: Limits) -> Result<u8, Failure> {
    let h = load_group(name, limits)?;
    let p = Prime::new(p)?;
    let degree = h.degree() * p.get() as usize;
    let x = match x {
        Some(text) => parse_cycles(text, degree)?,
        None => block_cycle(h.degree(), p.get() as usize),
    };
    let r = wreath_witness_search(&h, p, &x, cli.seed)?;
    match cli.format {
        Format::Json => print_json(&r),
        Format::Text => {
            println!("witness w = {}", r.witness);
            println!("x^w x = {} (order {})", r.product, r.product_order);
            println!("explicit form: {}  attempts: {}", r.via_proof, r.attempts);
            println!("identity check: {:?}", r.proof_identity);
            println!("a = b gives p-element: {:?}", r.commuting_case_p_element);
        }
    }
    Ok(0)
}

fn pgroup(cli: &Cli, name: &str, limits: Limits) -> Result<u8, Failure> {
    let g = load_group(name, limits)?;
    let abundant = verify_pgroup_lemma_abundant(&g)?;
    let generation = verify_pgroup_lemma_gen_abelian(&g)?;
    let holds = abundant.holds && generation.holds;
    match cli.format {
        Format::Json => print_json(&json!({ "abundant": abundant, "generation": generation })),
        Format::Text => {
            println!(
                "{name}: p = {}, {} elementary abelian subgroups",
                abundant.p, abundant.elementary_abelian_subgroups
            );
            println!(
                "witness lemma: {} ({} of {} elements witnessed)",
                abundant.holds, abundant.witnessed, abundant.applicable
            );
            println!(
                "generation lemma: {} ({} subsets over classes {:?})",
                generation.holds, generation.subsets_checked, generation.qualifying_classes
            );
        }
    }
    Ok(if holds { 0 } else { 1 })
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let limits = Limits {
        enumeration_bound: cli.max_order,
        ..Limits::default()
    };
    match &cli.command {
        Command::Check { corpus } => check(cli, corpus, limits),
        Command::AppendixTest { group } => appendix(cli, group, limits),
        Command::TheoremA { group, classes } => theorem_a(cli, group, classes, limits),
        Command::Classes { group } => classes(cli, group, limits),
        Command::WreathLemma { builtin, p, x } => wreath(cli, builtin, *p, x.as_deref(), limits),
        Command::PgroupLemmas { group } => pgroup(cli, group, limits),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
