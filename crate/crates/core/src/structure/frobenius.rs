use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::{closure_of, Group, Subgroup};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct FrobeniusCheck {
    pub is_frobenius: bool,
    /// Some `g ∉ H` with `H ∩ H^g ≠ 1`, when the check fails.
    pub obstruction: Option<Permutation>,
    /// The kernel, verified to be a normal subgroup complementing `H`.
    pub kernel: Option<Subgroup>,
}

/// Tests whether `H ∩ H^g = 1` for every `g ∈ G ∖ H`. On success the kernel
/// `G ∖ ⋃ (H^g ∖ 1)` is extracted as a set and then checked to be a normal
/// subgroup of order `|G:H|` meeting `H` trivially.
pub fn is_frobenius_with_complement(g: &Group, h: &Group) -> Result<FrobeniusCheck> {
    let (order, h_order) = (g.order(), h.order());
    if h_order <= 1 || h_order >= order {
        return Err(Error::Precondition(format!(
            "complement order {h_order} must lie strictly between 1 and {order}"
        )));
    }
    if !g.contains_group(h) {
        return Err(Error::NotAMember);
    }
    let elems = g.enumerate()?;
    let h_elems: Vec<Permutation> = h
        .enumerate()?
        .iter()
        .filter(|x| !x.is_identity())
        .cloned()
        .collect();
    let h_chain = h.chain();
    for x in elems {
        if h_chain.contains(x) {
            continue;
        }
        if h_elems.iter().any(|y| h_chain.contains(&y.conjugate_by(x))) {
            return Ok(FrobeniusCheck {
                is_frobenius: false,
                obstruction: Some(x.clone()),
                kernel: None,
            });
        }
    }

    let mut covered: HashSet<Permutation> = HashSet::new();
    for x in elems {
        for y in &h_elems {
            covered.insert(y.conjugate_by(x));
        }
    }
    let kernel_set: Vec<Permutation> = elems
        .iter()
        .filter(|x| !covered.contains(*x))
        .cloned()
        .collect();
    if kernel_set.len() as u128 * h_order != order {
        return Err(Error::Consistency(format!(
            "kernel set has {} elements, expected {}",
            kernel_set.len(),
            order / h_order
        )));
    }
    let kernel = closure_of(g.degree(), g.limits(), &kernel_set)?;
    if kernel.order() != kernel_set.len() as u128 {
        return Err(Error::Consistency("kernel set is not closed".into()));
    }
    if !g.is_normal(&kernel) {
        return Err(Error::Consistency("kernel is not normal".into()));
    }
    if h_elems.iter().any(|y| kernel.chain().contains(y)) {
        return Err(Error::Consistency("kernel meets the complement".into()));
    }
    Ok(FrobeniusCheck {
        is_frobenius: true,
        obstruction: None,
        kernel: Some(Subgroup::of(g, kernel)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alt4_with_three_cycle() {
        let g = Group::from_cycles(4, &["(1,2,3)", "(2,3,4)"]).unwrap();
        let h = Group::from_cycles(4, &["(1,2,3)"]).unwrap();
        let check = is_frobenius_with_complement(&g, &h).unwrap();
        assert!(check.is_frobenius);
        assert_eq!(check.kernel.unwrap().order(), 4);
    }

    #[test]
    fn sym3_with_transposition() {
        let g = Group::from_cycles(3, &["(1,2)", "(1,2,3)"]).unwrap();
        let h = Group::from_cycles(3, &["(1,2)"]).unwrap();
        let check = is_frobenius_with_complement(&g, &h).unwrap();
        assert!(check.is_frobenius);
        assert_eq!(check.kernel.unwrap().order(), 3);
    }

    #[test]
    fn cyclic_six_is_not_frobenius() {
        let g = Group::from_cycles(5, &["(1,2,3)(4,5)"]).unwrap();
        let h = Group::from_cycles(5, &["(4,5)"]).unwrap();
        let check = is_frobenius_with_complement(&g, &h).unwrap();
        assert!(!check.is_frobenius);
        assert!(check.obstruction.is_some());
        assert!(check.kernel.is_none());
    }

    #[test]
    fn rejects_degenerate_complements() {
        let g = Group::from_cycles(3, &["(1,2)", "(1,2,3)"]).unwrap();
        assert!(matches!(
            is_frobenius_with_complement(&g, &g),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            is_frobenius_with_complement(&g, &Group::trivial(3).unwrap()),
            Err(Error::Precondition(_))
        ));
    }
}
