use std::collections::HashMap;

use super::{Group, Subgroup};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `G/N` realised as the action of `G` on the right cosets of `N`.
///
/// Cosets are numbered breadth-first from `N` itself by applying the
/// generators of `G` in order.
#[derive(Clone, Debug)]
pub struct Quotient {
    image: Group,
    kernel: Vec<Permutation>,
    reps: Vec<Permutation>,
    index_of: HashMap<Permutation, usize>,
}

impl Quotient {
    pub fn group(&self) -> &Group {
        &self.image
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn coset_representatives(&self) -> &[Permutation] {
        &self.reps
    }

    // least element of the coset N·g
    fn key(&self, g: &Permutation) -> Permutation {
        key(&self.kernel, g)
    }

    /// Index of the coset `N·g`.
    pub fn coset_of(&self, g: &Permutation) -> usize {
        self.index_of[&self.key(g)]
    }

    /// Image of `x` in the quotient.
    pub fn map(&self, x: &Permutation) -> Permutation {
        let images = self
            .reps
            .iter()
            .map(|r| self.coset_of(&r.mul_unchecked(x)))
            .collect();
        Permutation::from_images(images).expect("coset action is a bijection")
    }
}

fn key(kernel: &[Permutation], g: &Permutation) -> Permutation {
    kernel
        .iter()
        .map(|n| n.mul_unchecked(g))
        .min()
        .expect("kernel contains the identity")
}

pub fn quotient_by(g: &Group, n: &Subgroup) -> Result<Quotient> {
    if !g.is_normal(n) {
        return Err(Error::NotNormal);
    }
    let index = g.order() / n.order();
    let max = g.limits().max_degree;
    if index > max as u128 {
        return Err(Error::IndexTooLarge { index, max });
    }
    let kernel = n.enumerate()?.to_vec();
    let mut reps = vec![g.identity()];
    let mut index_of = HashMap::new();
    index_of.insert(key(&kernel, &reps[0]), 0);
    let mut k = 0;
    while k < reps.len() {
        for s in g.generators() {
            let r = reps[k].mul_unchecked(s);
            let kr = key(&kernel, &r);
            if let std::collections::hash_map::Entry::Vacant(e) = index_of.entry(kr) {
                e.insert(reps.len());
                reps.push(r);
            }
        }
        k += 1;
    }
    if reps.len() as u128 != index {
        return Err(Error::Consistency(format!(
            "found {} cosets, expected {index}",
            reps.len()
        )));
    }
    let mut q = Quotient {
        image: Group::trivial(1)?,
        kernel,
        reps,
        index_of,
    };
    let gens = g.generators().iter().map(|s| q.map(s)).collect();
    q.image = Group::with_limits(q.index(), gens, g.limits())?;
    Ok(q)
}
