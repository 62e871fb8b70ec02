//! Brute-force checks of two facts about `p`-groups: the existence of a
//! small elementary abelian witness `X` for elements acting non-trivially on
//! some elementary abelian subgroup, and elementary abelian generation when
//! no element of `A` acts that way.

use std::collections::HashSet;

use serde::Serialize;

use crate::arith::Prime;
use crate::error::{Error, Result};
use crate::group::{closure_of, Group};
use crate::perm::Permutation;
use crate::structure::{
    classes_of_order, conjugacy_classes, derived_subgroup, is_elementary_abelian, ConjClassTable,
    NormalSubset, SUBSET_CLASS_CAP,
};

pub const PGROUP_ORDER_BOUND: u128 = 512;

/// An elementary abelian subgroup as a sorted list of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementaryAbelian {
    pub members: Vec<usize>,
    pub generators: Vec<usize>,
}

impl ElementaryAbelian {
    pub fn order(&self) -> usize {
        self.members.len()
    }
}

fn check_p_group(p: &Group) -> Result<Prime> {
    let order = p.order();
    if order > PGROUP_ORDER_BOUND {
        return Err(Error::EnumerationBound {
            order,
            bound: PGROUP_ORDER_BOUND,
        });
    }
    let primes = crate::arith::prime_divisors(order);
    match primes.as_slice() {
        [q] => Ok(*q),
        _ => Err(Error::Precondition(format!(
            "order {order} is not a prime power"
        ))),
    }
}

/// All non-trivial elementary abelian subgroups, grown one commuting
/// order-`p` element at a time.
pub fn elementary_abelian_subgroups(table: &ConjClassTable, p: Prime) -> Vec<ElementaryAbelian> {
    let elems = table.elements();
    let order_p: Vec<usize> = (0..elems.len())
        .filter(|&i| elems[i].order() == p.get() as u128)
        .collect();
    let identity = table
        .element_index(&Permutation::identity(elems[0].degree()))
        .unwrap();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut frontier = vec![ElementaryAbelian {
        members: vec![identity],
        generators: Vec::new(),
    }];
    let mut out = Vec::new();
    while let Some(e) = frontier.pop() {
        for &x in &order_p {
            if e.members.binary_search(&x).is_ok() {
                continue;
            }
            let xe = &elems[x];
            if !e
                .generators
                .iter()
                .all(|&s| &elems[s] * xe == xe * &elems[s])
            {
                continue;
            }
            let mut members = e.members.clone();
            let mut power = xe.clone();
            for _ in 1..p.get() {
                members.extend(
                    e.members
                        .iter()
                        .map(|&m| table.element_index(&(&elems[m] * &power)).unwrap()),
                );
                power = &power * xe;
            }
            members.sort_unstable();
            if seen.insert(members.clone()) {
                let mut generators = e.generators.clone();
                generators.push(x);
                let next = ElementaryAbelian {
                    members,
                    generators,
                };
                out.push(next.clone());
                frontier.push(next);
            }
        }
    }
    out.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
    out
}

fn normalizes(table: &ConjClassTable, a: &Permutation, e: &ElementaryAbelian) -> bool {
    e.generators.iter().all(|&s| {
        let c = table
            .element_index(&table.elements()[s].conjugate_by(a))
            .unwrap();
        e.members.binary_search(&c).is_ok()
    })
}

fn centralizes(table: &ConjClassTable, a: &Permutation, e: &ElementaryAbelian) -> bool {
    e.generators.iter().all(|&s| {
        let x = &table.elements()[s];
        x * a == a * x
    })
}

/// Some elementary abelian subgroup is normalised but not centralised by `a`.
fn acts_nontrivially(
    table: &ConjClassTable,
    subgroups: &[ElementaryAbelian],
    a: &Permutation,
) -> bool {
    subgroups
        .iter()
        .any(|e| normalizes(table, a, e) && !centralizes(table, a, e))
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub p: Prime,
    pub group_order: u128,
    pub elementary_abelian_subgroups: usize,
    pub applicable: usize,
    pub witnessed: usize,
    pub failures: Vec<Permutation>,
    pub holds: bool,
}

/// For every `a` of order `p` acting non-trivially on some elementary
/// abelian subgroup, finds `X` elementary abelian of order `p²` with
/// `|a^P ∩ X| = p` and `X ∩ P' ≠ 1`.
pub fn verify_pgroup_lemma_abundant(group: &Group) -> Result<LemmaReport> {
    let p = check_p_group(group)?;
    let table = conjugacy_classes(group)?;
    let subgroups = elementary_abelian_subgroups(&table, p);
    let derived = derived_subgroup(group)?;
    let squares: Vec<&ElementaryAbelian> = subgroups
        .iter()
        .filter(|e| e.order() as u64 == p.get() * p.get())
        .collect();
    let elems = table.elements();
    let mut report = LemmaReport {
        p,
        group_order: group.order(),
        elementary_abelian_subgroups: subgroups.len(),
        applicable: 0,
        witnessed: 0,
        failures: Vec::new(),
        holds: true,
    };
    for (i, a) in elems.iter().enumerate() {
        if a.order() != p.get() as u128 || !acts_nontrivially(&table, &subgroups, a) {
            continue;
        }
        report.applicable += 1;
        let class = table.class_of_index(i);
        let found = squares.iter().any(|x| {
            let in_class = x
                .members
                .iter()
                .filter(|&&m| table.class_of_index(m) == class)
                .count();
            let meets_derived = x
                .members
                .iter()
                .any(|&m| !elems[m].is_identity() && derived.chain().contains(&elems[m]));
            in_class as u64 == p.get() && meets_derived
        });
        if found {
            report.witnessed += 1;
        } else {
            report.failures.push(a.clone());
        }
    }
    report.holds = report.failures.is_empty();
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct GenerationReport {
    pub p: Prime,
    pub group_order: u128,
    /// Order-`p` classes none of whose elements act non-trivially on an
    /// elementary abelian subgroup.
    pub qualifying_classes: Vec<usize>,
    pub subsets_checked: usize,
    pub failures: Vec<Vec<usize>>,
    pub holds: bool,
}

/// For every non-empty normal subset `A` of order-`p` elements, each of
/// which centralises every elementary abelian subgroup it normalises,
/// `⟨A⟩` is elementary abelian and normal.
pub fn verify_pgroup_lemma_gen_abelian(group: &Group) -> Result<GenerationReport> {
    let p = check_p_group(group)?;
    let table = conjugacy_classes(group)?;
    let subgroups = elementary_abelian_subgroups(&table, p);
    let qualifying: Vec<usize> = classes_of_order(&table, p)
        .into_iter()
        .filter(|&c| {
            table
                .class_elements(c)
                .all(|a| !acts_nontrivially(&table, &subgroups, a))
        })
        .collect();
    if qualifying.len() > SUBSET_CLASS_CAP {
        return Err(Error::SubsetCap {
            p: p.get(),
            count: qualifying.len(),
            cap: SUBSET_CLASS_CAP,
        });
    }
    let mut report = GenerationReport {
        p,
        group_order: group.order(),
        qualifying_classes: qualifying.clone(),
        subsets_checked: 0,
        failures: Vec::new(),
        holds: true,
    };
    for mask in 1u32..1 << qualifying.len() {
        let ids: Vec<usize> = qualifying
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask & (1 << bit) != 0)
            .map(|(_, &c)| c)
            .collect();
        let subset = NormalSubset::from_classes(&table, &ids)?;
        let generated = closure_of(group.degree(), group.limits(), subset.elements())?;
        report.subsets_checked += 1;
        if !(is_elementary_abelian(&generated, p) && group.is_normal(&generated)) {
            report.failures.push(ids);
        }
    }
    report.holds = report.failures.is_empty();
    Ok(report)
}
