//! The square hypothesis on a normal subset and the structural conclusions
//! it forces on the subgroup the subset generates.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Mutex;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::arith::{gcd, prime_divisors, Prime};
use crate::error::Result;
use crate::group::{closure, closure_of, quotient_by, Group};
use crate::perm::Permutation;
use crate::structure::{
    classes_of_order, conjugacy_classes, fitting_subgroup, is_elementary_abelian,
    is_frobenius_with_complement, is_soluble, p_core, ConjClassTable, NormalSubset,
};

pub const DEFAULT_SEED: u64 = 0x5eed_a2a2;

/// Outcome of one conclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Holds,
    Fails,
    NotApplicable,
}

impl Check {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Check::Holds
        } else {
            Check::Fails
        }
    }
}

/// A group with its class table and memoised `|O_p(G)|`.
pub struct GroupContext {
    group: Group,
    table: ConjClassTable,
    cores: Mutex<BTreeMap<u64, u128>>,
}

impl GroupContext {
    pub fn new(group: Group) -> Result<Self> {
        let table = conjugacy_classes(&group)?;
        Ok(GroupContext {
            group,
            table,
            cores: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn table(&self) -> &ConjClassTable {
        &self.table
    }

    pub fn p_core_order(&self, p: Prime) -> Result<u128> {
        if let Some(&o) = self.cores.lock().unwrap().get(&p.get()) {
            return Ok(o);
        }
        let o = p_core(&self.group, p)?.order();
        self.cores.lock().unwrap().insert(p.get(), o);
        Ok(o)
    }

    /// The normal subset made of the classes of the given elements.
    pub fn subset_of_classes(&self, reps: &[Permutation]) -> Result<NormalSubset> {
        let ids = reps
            .iter()
            .map(|x| {
                self.table
                    .class_of(x)
                    .ok_or(crate::error::Error::NotAMember)
            })
            .collect::<Result<Vec<_>>>()?;
        NormalSubset::from_classes(&self.table, &ids)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub a: Permutation,
    pub b: Permutation,
    pub product_order: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub class_ids: Vec<usize>,
    pub p: Prime,
    pub subset_size: usize,
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

/// Exhaustive scan of `A × A` for a product that is not a `p`-element.
pub fn check_hypothesis(subset: &NormalSubset) -> HypothesisCheck {
    let p = subset.prime();
    let elems = subset.elements();
    let counterexample = elems.iter().find_map(|a| {
        elems.iter().find_map(|b| {
            let ab = a * b;
            (!ab.is_p_element(p)).then(|| Counterexample {
                a: a.clone(),
                b: b.clone(),
                product_order: ab.order(),
            })
        })
    });
    HypothesisCheck {
        class_ids: subset.class_ids().to_vec(),
        p,
        subset_size: elems.len(),
        holds: counterexample.is_none(),
        counterexample,
    }
}

/// Element orders occurring in `A²`.
pub fn square_orders(subset: &NormalSubset) -> BTreeSet<u128> {
    let elems = subset.elements();
    elems
        .iter()
        .flat_map(|a| elems.iter().map(move |b| (a * b).order()))
        .collect()
}

/// The set `A²`.
pub fn square_set(subset: &NormalSubset) -> BTreeSet<Permutation> {
    let elems = subset.elements();
    elems
        .iter()
        .flat_map(|a| elems.iter().map(move |b| a * b))
        .collect()
}

/// Every product `ab` with `a, b ∈ A` has order exactly `p`.
pub fn verify_corollary_orders(subset: &NormalSubset) -> bool {
    let p = subset.prime().get() as u128;
    let elems = subset.elements();
    elems
        .iter()
        .all(|a| elems.iter().all(|b| (a * b).order() == p))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusVerdict {
    pub check: Check,
    pub reason: Option<String>,
    pub kernel_order: Option<u128>,
    pub complements_checked: usize,
}

impl FrobeniusVerdict {
    fn not_applicable(reason: &str) -> Self {
        FrobeniusVerdict {
            check: Check::NotApplicable,
            reason: Some(reason.to_string()),
            kernel_order: None,
            complements_checked: 0,
        }
    }
}

/// For a single class `A` generating `G` with `O_p(G) = 1` and the square
/// hypothesis holding: `G` is Frobenius with complement `⟨a⟩`, checked for
/// the representative and three seeded random members of `A`.
pub fn verify_corollary_frobenius(
    ctx: &GroupContext,
    subset: &NormalSubset,
    seed: u64,
) -> Result<FrobeniusVerdict> {
    let g = ctx.group();
    let p = subset.prime();
    if subset.class_ids().len() != 1 {
        return Ok(FrobeniusVerdict::not_applicable("A is not a single class"));
    }
    if ctx.p_core_order(p)? != 1 {
        return Ok(FrobeniusVerdict::not_applicable("O_p(G) is non-trivial"));
    }
    if !check_hypothesis(subset).holds {
        return Ok(FrobeniusVerdict::not_applicable("hypothesis fails"));
    }
    if closure_of(g.degree(), g.limits(), subset.elements())?.order() != g.order() {
        return Ok(FrobeniusVerdict::not_applicable("A does not generate G"));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let elems = subset.elements();
    let mut picks = vec![&elems[0]];
    for _ in 0..3 {
        picks.push(&elems[rng.gen_range(0..elems.len())]);
    }
    let mut kernel_order = None;
    for a in &picks {
        let h = closure(g, [*a])?.into_group();
        let check = is_frobenius_with_complement(g, &h)?;
        if !check.is_frobenius {
            return Ok(FrobeniusVerdict {
                check: Check::Fails,
                reason: Some(format!("⟨{a}⟩ meets a conjugate non-trivially")),
                kernel_order: None,
                complements_checked: picks.len(),
            });
        }
        kernel_order = check.kernel.map(|k| k.order());
    }
    Ok(FrobeniusVerdict {
        check: Check::Holds,
        reason: None,
        kernel_order,
        complements_checked: picks.len(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    HypothesisFailed,
    Consistent,
    TheoremViolation,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictReport {
    pub hypothesis: HypothesisCheck,
    pub status: Status,
    pub q_order: Option<u128>,
    pub q_soluble: Check,
    pub op_trivial: Option<bool>,
    pub p_odd: Check,
    pub fitting_order: Option<u128>,
    pub fitting_nontrivial_p_prime: Check,
    pub quotient_order: Option<u128>,
    pub quotient_elementary_abelian: Check,
    pub square_orders_exactly_p: Check,
    pub frobenius: FrobeniusVerdict,
    pub violations: Vec<String>,
}

impl VerdictReport {
    fn record(&mut self, what: &str, check: Check) -> Check {
        if check == Check::Fails {
            self.violations.push(what.to_string());
            self.status = Status::TheoremViolation;
        }
        check
    }
}

/// Runs the hypothesis scan and, when it holds, every conclusion: `⟨A⟩`
/// soluble; and if `O_p(G) = 1`, `p` odd, `F(⟨A⟩)` a non-trivial
/// `p'`-group, `⟨A⟩/F(⟨A⟩)` elementary abelian of exponent `p`, every
/// element of `A²` of order `p`, and the Frobenius conclusion for a single
/// generating class. Conclusions gated on `O_p(G) = 1` are marked not
/// applicable otherwise.
pub fn verify_theorem_a(
    ctx: &GroupContext,
    subset: &NormalSubset,
    seed: u64,
) -> Result<VerdictReport> {
    let hypothesis = check_hypothesis(subset);
    let mut report = VerdictReport {
        status: if hypothesis.holds {
            Status::Consistent
        } else {
            Status::HypothesisFailed
        },
        hypothesis,
        q_order: None,
        q_soluble: Check::NotApplicable,
        op_trivial: None,
        p_odd: Check::NotApplicable,
        fitting_order: None,
        fitting_nontrivial_p_prime: Check::NotApplicable,
        quotient_order: None,
        quotient_elementary_abelian: Check::NotApplicable,
        square_orders_exactly_p: Check::NotApplicable,
        frobenius: FrobeniusVerdict::not_applicable("hypothesis fails"),
        violations: Vec::new(),
    };
    if !report.hypothesis.holds {
        return Ok(report);
    }
    let g = ctx.group();
    let p = subset.prime();
    let q = closure(g, subset.elements())?.into_group();
    report.q_order = Some(q.order());
    report.q_soluble = report.record("<A> is not soluble", Check::from_bool(is_soluble(&q)?));

    let op_trivial = ctx.p_core_order(p)? == 1;
    report.op_trivial = Some(op_trivial);
    if !op_trivial {
        report.frobenius = FrobeniusVerdict::not_applicable("O_p(G) is non-trivial");
        return Ok(report);
    }
    report.p_odd = report.record("p = 2 with O_p(G) = 1", Check::from_bool(p.is_odd()));

    let fitting = fitting_subgroup(&q)?;
    let f_order = fitting.order();
    report.fitting_order = Some(f_order);
    report.fitting_nontrivial_p_prime = report.record(
        "F(<A>) is trivial or has order divisible by p",
        Check::from_bool(f_order > 1 && gcd(f_order, p.get() as u128) == 1),
    );

    let quotient = quotient_by(&q, &fitting)?;
    report.quotient_order = Some(quotient.group().order());
    report.quotient_elementary_abelian = report.record(
        "<A>/F(<A>) is not elementary abelian of exponent p",
        Check::from_bool(is_elementary_abelian(quotient.group(), p)),
    );

    report.square_orders_exactly_p = report.record(
        "some element of A^2 does not have order p",
        Check::from_bool(verify_corollary_orders(subset)),
    );

    report.frobenius = verify_corollary_frobenius(ctx, subset, seed)?;
    report.record(
        "G is not Frobenius with complement <a>",
        report.frobenius.check,
    );
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct GnReport {
    pub check: Check,
    pub reason: Option<String>,
    pub normal_subgroup_order: Option<u128>,
    pub classes_checked: Vec<usize>,
}

/// For `G` with a Sylow `p`-subgroup of order `p` and a normal subgroup of
/// index `p`: every class `A = a^G` of order-`p` elements satisfying the
/// square hypothesis generates a Frobenius group with complement `⟨a⟩`.
///
/// The normal subgroup is located as the subgroup generated by all
/// `p'`-elements, which is the only candidate.
pub fn verify_theorem_gn(ctx: &GroupContext, p: Prime) -> Result<GnReport> {
    let g = ctx.group();
    let na = |reason: String| GnReport {
        check: Check::NotApplicable,
        reason: Some(reason),
        normal_subgroup_order: None,
        classes_checked: Vec::new(),
    };
    let part = p.part_of(g.order());
    if part != p.get() as u128 {
        return Ok(na(format!("Sylow {p}-subgroup has order {part}, not {p}")));
    }
    let p_prime: Vec<&Permutation> = ctx
        .table()
        .elements()
        .iter()
        .filter(|x| !p.divides(x.order()))
        .collect();
    let n = closure(g, p_prime)?;
    if !g.is_normal(&n) || n.index() != p.get() as u128 {
        return Ok(na(format!("no normal subgroup of index {p}")));
    }
    let mut report = GnReport {
        check: Check::NotApplicable,
        reason: Some("hypothesis fails for every class".into()),
        normal_subgroup_order: Some(n.order()),
        classes_checked: Vec::new(),
    };
    for id in classes_of_order(ctx.table(), p) {
        let subset = NormalSubset::from_classes(ctx.table(), &[id])?;
        if !check_hypothesis(&subset).holds {
            continue;
        }
        report.classes_checked.push(id);
        let x = closure_of(g.degree(), g.limits(), subset.elements())?;
        let a = &subset.elements()[0];
        let h = closure(&x, [a])?.into_group();
        if h.order() == x.order() {
            // ⟨A⟩ = ⟨a⟩: a centralises N and there is no proper complement
            if report.check != Check::Fails {
                report.check = Check::NotApplicable;
                report.reason = Some(format!("class {id} is central: <A> = <a>"));
            }
            continue;
        }
        let frob = is_frobenius_with_complement(&x, &h)?;
        if frob.is_frobenius {
            if report.check == Check::NotApplicable {
                report.check = Check::Holds;
                report.reason = None;
            }
        } else {
            report.check = Check::Fails;
            report.reason = Some(format!(
                "class {id}: <A> is not Frobenius with complement <a>"
            ));
        }
    }
    Ok(report)
}

/// Primes dividing `|G|`, as swept by the corpus runner.
pub fn sweep_primes(g: &Group) -> Vec<Prime> {
    prime_divisors(g.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::parse_cycles;

    fn ctx(n: usize, gens: &[&str]) -> GroupContext {
        GroupContext::new(Group::from_cycles(n, gens).unwrap()).unwrap()
    }

    fn subset(ctx: &GroupContext, reps: &[&str]) -> NormalSubset {
        let n = ctx.group().degree();
        let reps: Vec<_> = reps.iter().map(|r| parse_cycles(r, n).unwrap()).collect();
        ctx.subset_of_classes(&reps).unwrap()
    }

    fn alt4() -> GroupContext {
        ctx(4, &["(1,2,3)", "(2,3,4)"])
    }

    fn f21() -> GroupContext {
        // x ↦ x+1 and x ↦ 2x on Z/7, points 1..7 standing for 0..6
        ctx(7, &["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"])
    }

    #[test]
    fn alt4_hypothesis_holds() {
        let c = alt4();
        let a = subset(&c, &["(1,2,3)"]);
        assert!(check_hypothesis(&a).holds);
        let other = subset(&c, &["(1,3,2)"]);
        let sq = square_set(&a);
        let other_set: BTreeSet<Permutation> = other.elements().iter().cloned().collect();
        assert_eq!(sq, other_set);
    }

    #[test]
    fn sym4_transpositions_fail() {
        let c = ctx(4, &["(1,2)", "(1,2,3,4)"]);
        let a = subset(&c, &["(1,2)"]);
        let h = check_hypothesis(&a);
        assert!(!h.holds);
        let ce = h.counterexample.unwrap();
        assert_eq!(ce.product_order, 3);
        assert!(!(&ce.a * &ce.b).is_p_element(Prime::new(2).unwrap()));
    }

    #[test]
    fn alt5_five_cycles_fail() {
        let c = ctx(5, &["(1,2,3)", "(1,2,3,4,5)"]);
        let a = subset(&c, &["(1,2,3,4,5)"]);
        assert!(!check_hypothesis(&a).holds);
    }

    #[test]
    fn alt4_theorem_a() {
        let c = alt4();
        let a = subset(&c, &["(1,2,3)"]);
        let r = verify_theorem_a(&c, &a, DEFAULT_SEED).unwrap();
        assert_eq!(r.status, Status::Consistent);
        assert_eq!(r.q_order, Some(12));
        assert_eq!(r.q_soluble, Check::Holds);
        assert_eq!(r.op_trivial, Some(true));
        assert_eq!(r.fitting_order, Some(4));
        assert_eq!(r.quotient_order, Some(3));
        assert_eq!(r.quotient_elementary_abelian, Check::Holds);
        assert_eq!(r.square_orders_exactly_p, Check::Holds);
        assert_eq!(r.frobenius.check, Check::Holds);
        assert_eq!(r.frobenius.kernel_order, Some(4));
    }

    #[test]
    fn f21_theorem_a() {
        let c = f21();
        assert_eq!(c.group().order(), 21);
        let a = subset(&c, &["(2,3,5)(4,7,6)"]);
        let r = verify_theorem_a(&c, &a, DEFAULT_SEED).unwrap();
        assert_eq!(r.status, Status::Consistent);
        assert_eq!(r.q_order, Some(21));
        assert_eq!(r.fitting_order, Some(7));
        assert_eq!(r.quotient_order, Some(3));
        assert!(verify_corollary_orders(&a));
        assert_eq!(r.frobenius.check, Check::Holds);
        assert_eq!(r.frobenius.kernel_order, Some(7));
    }

    #[test]
    fn hypothesis_failure_short_circuits() {
        let c = ctx(4, &["(1,2)", "(1,2,3,4)"]);
        let a = subset(&c, &["(1,2)"]);
        let r = verify_theorem_a(&c, &a, DEFAULT_SEED).unwrap();
        assert_eq!(r.status, Status::HypothesisFailed);
        assert_eq!(r.q_order, None);
        assert_eq!(r.q_soluble, Check::NotApplicable);
    }

    #[test]
    fn nontrivial_core_marks_branch_not_applicable() {
        // D8 with its central involution: O_2 = D8
        let c = ctx(4, &["(1,2,3,4)", "(1,3)"]);
        let a = subset(&c, &["(1,3)(2,4)"]);
        let r = verify_theorem_a(&c, &a, DEFAULT_SEED).unwrap();
        assert_eq!(r.status, Status::Consistent);
        assert_eq!(r.op_trivial, Some(false));
        assert_eq!(r.q_soluble, Check::Holds);
        assert_eq!(r.p_odd, Check::NotApplicable);
        assert_eq!(r.fitting_nontrivial_p_prime, Check::NotApplicable);
        assert_eq!(r.quotient_elementary_abelian, Check::NotApplicable);
    }

    #[test]
    fn frobenius_corollary_preconditions() {
        let c3 = ctx(3, &["(1,2,3)"]);
        let a = subset(&c3, &["(1,2,3)"]);
        let v = verify_corollary_frobenius(&c3, &a, DEFAULT_SEED).unwrap();
        assert_eq!(v.check, Check::NotApplicable);
    }

    #[test]
    fn gn_examples() {
        let three = Prime::new(3).unwrap();
        let r = verify_theorem_gn(&f21(), three).unwrap();
        assert_eq!(r.check, Check::Holds);
        assert_eq!(r.normal_subgroup_order, Some(7));

        // Sym(3), p = 2: products of two transpositions are 3-cycles or 1
        let s3 = ctx(3, &["(1,2)", "(1,2,3)"]);
        let t = subset(&s3, &["(1,2)"]);
        assert!(!check_hypothesis(&t).holds);
        let r = verify_theorem_gn(&s3, Prime::new(2).unwrap()).unwrap();
        assert_eq!(r.check, Check::NotApplicable);
        assert_eq!(r.normal_subgroup_order, Some(3));

        let c3c3 = ctx(6, &["(1,2,3)", "(4,5,6)"]);
        assert_eq!(
            verify_theorem_gn(&c3c3, three).unwrap().check,
            Check::NotApplicable
        );
    }
}
