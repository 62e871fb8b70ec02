#![allow(dead_code)]

use asquare::arith::prime_divisors;
use asquare::corpus::desk_corpus;
use asquare::group::{centralizer, quotient_by, Subgroup};
use asquare::structure::{
    conjugacy_classes, derived_subgroup, fitting_subgroup, p_core, sylow_subgroup, ConjClassTable,
};
use asquare::{Group, Limits, Permutation};
use rand::rngs::StdRng;
use rand::SeedableRng;

/// Every group of the shipped corpus, rebuilt from its cycle text.
pub fn corpus_groups() -> Vec<(String, Group)> {
    desk_corpus()
        .unwrap()
        .into_iter()
        .map(|e| {
            let g = e.group(Limits::default()).unwrap();
            (e.name, g)
        })
        .collect()
}

/// `|{(x, y) ∈ C_i × C_j : xy = z}|` by scanning all pairs.
pub fn brute_coefficient(table: &ConjClassTable, i: usize, j: usize, z: &Permutation) -> usize {
    let cj: Vec<&Permutation> = table.class_elements(j).collect();
    table
        .class_elements(i)
        .map(|x| cj.iter().filter(|y| &(x * **y) == z).count())
        .sum()
}

/// Breaches of the class equation and of `|x^G| = |G : C_G(x)|`.
pub fn class_invariant_failures(g: &Group, table: &ConjClassTable) -> Vec<String> {
    let mut out = Vec::new();
    let total: usize = table.sizes().iter().sum();
    if total as u128 != g.order() {
        out.push(format!("class sizes sum to {total}, |G| = {}", g.order()));
    }
    for (i, c) in table.classes().iter().enumerate() {
        let cent = centralizer(g, c.representative()).unwrap();
        if cent.index() != c.size() as u128 {
            out.push(format!(
                "class {i}: size {} but centralizer index {}",
                c.size(),
                cent.index()
            ));
        }
        if !g.order().is_multiple_of(c.size() as u128) {
            out.push(format!("class {i}: size does not divide |G|"));
        }
    }
    out
}

fn lagrange(s: &Subgroup) -> bool {
    s.parent_order().is_multiple_of(s.order()) && s.index() * s.order() == s.parent_order()
}

/// Lagrange for the subgroups built from `g`, plus the homomorphism
/// property of each proper quotient on `pairs` random pairs.
pub fn subgroup_failures(g: &Group, pairs: usize, seed: u64) -> (usize, Vec<String>) {
    let mut failures = Vec::new();
    let mut subgroups: Vec<(String, Subgroup)> = vec![
        ("derived".into(), derived_subgroup(g).unwrap()),
        ("fitting".into(), fitting_subgroup(g).unwrap()),
    ];
    for p in prime_divisors(g.order()) {
        subgroups.push((format!("sylow {p}"), sylow_subgroup(g, p).unwrap()));
        subgroups.push((format!("O_{p}"), p_core(g, p).unwrap()));
    }
    for (name, s) in &subgroups {
        if !lagrange(s) {
            failures.push(format!("{name}: Lagrange fails"));
        }
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut quotients = 0;
    for (name, s) in subgroups {
        if !g.is_normal(&s) || s.order() == g.order() || s.order() == 1 {
            continue;
        }
        let q = quotient_by(g, &s).unwrap();
        quotients += 1;
        if q.group().order() != g.order() / s.order() {
            failures.push(format!("G/{name}: order {}", q.group().order()));
        }
        for _ in 0..pairs {
            let x = g.random_element(&mut rng);
            let y = g.random_element(&mut rng);
            if q.map(&(&x * &y)) != &q.map(&x) * &q.map(&y) {
                failures.push(format!("G/{name}: not a homomorphism at ({x}, {y})"));
                break;
            }
        }
    }
    (quotients, failures)
}

pub fn table(g: &Group) -> ConjClassTable {
    conjugacy_classes(g).unwrap()
}
