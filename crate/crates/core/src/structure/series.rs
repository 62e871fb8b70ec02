//! Derived series, Sylow subgroups, p-cores and the Fitting subgroup.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::arith::{prime_divisors, Prime};
use crate::error::{Error, Result};
use crate::group::{closure, closure_of, normal_closure, Group, Subgroup};
use crate::perm::Permutation;

/// `G'`, the normal closure of the commutators of generator pairs.
pub fn derived_subgroup(g: &Group) -> Result<Subgroup> {
    let gens = g.generators();
    let mut commutators = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = a.commutator(b);
            if !c.is_identity() {
                commutators.push(c);
            }
        }
    }
    normal_closure(g, &commutators)
}

/// `G = G^(0) ≥ G^(1) ≥ …` up to the first repeated term.
pub fn derived_series(g: &Group) -> Result<Vec<Group>> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().unwrap();
        let next = derived_subgroup(last)?.into_group();
        if next.order() == last.order() {
            return Ok(series);
        }
        series.push(next);
    }
}

pub fn is_soluble(g: &Group) -> Result<bool> {
    Ok(derived_series(g)?.last().unwrap().is_trivial())
}

/// Abelian with every non-identity element of order `p`.
pub fn is_elementary_abelian(h: &Group, p: Prime) -> bool {
    let p = p.get() as u128;
    h.is_abelian()
        && h.generators()
            .iter()
            .all(|x| matches!(x.order(), o if o == 1 || o == p))
}

/// True iff `g` is a `p`-group (the trivial group counts).
pub fn is_p_group(g: &Group, p: Prime) -> bool {
    p.is_power(g.order())
}

fn is_normalized_by(h: &Group, x: &Permutation) -> bool {
    h.generators()
        .iter()
        .all(|s| h.chain().contains(&s.conjugate_by(x)))
}

/// A Sylow `p`-subgroup, found by normalizer ascent from a cyclic `p`-subgroup.
pub fn sylow_subgroup(g: &Group, p: Prime) -> Result<Subgroup> {
    let target = p.part_of(g.order());
    let elems = g.enumerate()?;
    if target == 1 {
        return Subgroup::of(g, Group::trivial(g.degree())?);
    }
    let start = elems
        .iter()
        .find(|x| !x.is_identity() && x.is_p_element(p))
        .ok_or_else(|| Error::Consistency(format!("no {p}-element despite {p} | |G|")))?;
    let mut sylow = closure(g, [start])?.into_group();
    while sylow.order() < target {
        let chain = sylow.chain();
        let next = elems
            .iter()
            .find(|y| y.is_p_element(p) && !chain.contains(y) && is_normalized_by(&sylow, y))
            .ok_or_else(|| {
                Error::Consistency(format!(
                    "normalizer ascent stalled at order {} below {target}",
                    sylow.order()
                ))
            })?;
        let mut gens = sylow.generators().to_vec();
        gens.push(next.clone());
        sylow = closure_of(g.degree(), g.limits(), &gens)?;
    }
    Subgroup::of(g, sylow)
}

/// `O_p(G)`: the elements of a Sylow `p`-subgroup whose whole class lies
/// inside it, i.e. the intersection of all Sylow conjugates.
pub fn p_core(g: &Group, p: Prime) -> Result<Subgroup> {
    let sylow = sylow_subgroup(g, p)?;
    let mut core: HashSet<Permutation> = sylow.enumerate()?.iter().cloned().collect();
    loop {
        let before = core.len();
        let keep: HashSet<Permutation> = core
            .iter()
            .filter(|x| {
                g.generators()
                    .iter()
                    .all(|s| core.contains(&x.conjugate_by(s)))
            })
            .cloned()
            .collect();
        core = keep;
        if core.len() == before {
            break;
        }
    }
    let mut members: Vec<Permutation> = core.into_iter().collect();
    members.sort_unstable();
    let group = closure_of(g.degree(), g.limits(), &members)?;
    if group.order() != members.len() as u128 {
        return Err(Error::Consistency(format!(
            "core of a Sylow {p}-subgroup is not closed"
        )));
    }
    Subgroup::of(g, group)
}

/// True iff every Sylow subgroup is normal and their orders multiply to `|G|`.
pub fn is_nilpotent(g: &Group) -> Result<bool> {
    let mut product = 1u128;
    for p in prime_divisors(g.order()) {
        let sylow = sylow_subgroup(g, p)?;
        if !g.is_normal(&sylow) {
            return Ok(false);
        }
        product *= sylow.order();
    }
    Ok(product == g.order())
}

/// `F(G)`, the subgroup generated by all `p`-cores.
pub fn fitting_subgroup(g: &Group) -> Result<Subgroup> {
    let mut gens = Vec::new();
    for p in prime_divisors(g.order()) {
        gens.extend(p_core(g, p)?.generators().iter().cloned());
    }
    let fitting = closure(g, &gens)?;
    if !g.is_normal(&fitting) || !is_nilpotent(&fitting)? {
        return Err(Error::Consistency(
            "product of p-cores is not a nilpotent normal subgroup".into(),
        ));
    }
    Ok(fitting)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub derived_orders: Vec<u128>,
    pub soluble: bool,
    pub fitting_order: u128,
    pub p_core_orders: BTreeMap<u64, u128>,
}

pub fn series_report(g: &Group) -> Result<SeriesReport> {
    let series = derived_series(g)?;
    let derived_orders: Vec<u128> = series.iter().map(Group::order).collect();
    let soluble = *derived_orders.last().unwrap() == 1;
    let mut p_core_orders = BTreeMap::new();
    for p in prime_divisors(g.order()) {
        p_core_orders.insert(p.get(), p_core(g, p)?.order());
    }
    Ok(SeriesReport {
        derived_orders,
        soluble,
        fitting_order: fitting_subgroup(g)?.order(),
        p_core_orders,
    })
}
