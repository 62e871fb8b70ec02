//! Permutation groups given by generators.

mod chain;
mod construct;
mod ops;
mod quotient;

use std::fmt;
use std::ops::Deref;
use std::sync::{Arc, OnceLock};

use rand::Rng;

pub use chain::StabChain;
pub use construct::{base_element, block_cycle, direct_power, direct_product, wreath_product};
pub use ops::{centralizer, closure, closure_of, normal_closure, normalizer};
pub use quotient::{quotient_by, Quotient};

use crate::error::{Error, Result};
use crate::perm::{parse_cycles, Permutation};

pub const DEFAULT_MAX_DEGREE: usize = 1024;
pub const DEFAULT_ENUMERATION_BOUND: u128 = 200_000;

/// Size limits carried by every group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_degree: usize,
    pub enumeration_bound: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: DEFAULT_MAX_DEGREE,
            enumeration_bound: DEFAULT_ENUMERATION_BOUND,
        }
    }
}

/// A permutation group. The stabilizer chain and the element list are
/// built on first use and cached; both caches are safe to share.
#[derive(Clone)]
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    limits: Limits,
    chain: OnceLock<Arc<StabChain>>,
    elements: OnceLock<Arc<[Permutation]>>,
}

impl Group {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::with_limits(degree, generators, Limits::default())
    }

    pub fn with_limits(
        degree: usize,
        generators: Vec<Permutation>,
        limits: Limits,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if degree > limits.max_degree {
            return Err(Error::DegreeTooLarge {
                degree,
                max: limits.max_degree,
            });
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        Ok(Group {
            degree,
            generators,
            limits,
            chain: OnceLock::new(),
            elements: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Result<Self> {
        Self::new(degree, Vec::new())
    }

    /// Parses generators in cycle notation.
    pub fn from_cycles(degree: usize, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| parse_cycles(g, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    pub(crate) fn from_chain(
        degree: usize,
        generators: Vec<Permutation>,
        chain: StabChain,
        limits: Limits,
    ) -> Self {
        let group = Group {
            degree,
            generators,
            limits,
            chain: OnceLock::new(),
            elements: OnceLock::new(),
        };
        let _ = group.chain.set(Arc::new(chain));
        group
    }

    /// Same group with different limits; caches are kept.
    pub fn relimited(&self, limits: Limits) -> Self {
        let mut g = self.clone();
        g.limits = limits;
        g
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| Arc::new(StabChain::from_generators(self.degree, &self.generators)))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, x: &Permutation) -> Result<bool> {
        self.check_degree(x)?;
        Ok(self.chain().contains(x))
    }

    pub(crate) fn check_degree(&self, x: &Permutation) -> Result<()> {
        if x.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: x.degree(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_enumerable(&self) -> Result<()> {
        let order = self.order();
        if order > self.limits.enumeration_bound {
            return Err(Error::EnumerationBound {
                order,
                bound: self.limits.enumeration_bound,
            });
        }
        Ok(())
    }

    /// All elements in lexicographic order of their image arrays.
    pub fn enumerate(&self) -> Result<&[Permutation]> {
        self.check_enumerable()?;
        Ok(self.elements.get_or_init(|| {
            let mut out = Vec::with_capacity(self.order() as usize);
            self.chain().for_each_element(|g| out.push(g.clone()));
            out.sort_unstable();
            out.into()
        }))
    }

    /// Shared handle to the cached element list.
    pub fn element_list(&self) -> Result<Arc<[Permutation]>> {
        self.enumerate()?;
        Ok(Arc::clone(
            self.elements.get().expect("populated by enumerate"),
        ))
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        self.chain().random_element(rng)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter().enumerate().all(|(i, a)| {
            gens[i + 1..]
                .iter()
                .all(|b| a.mul_unchecked(b) == b.mul_unchecked(a))
        })
    }

    /// True iff `h^g ∈ self` for every generator `h` of `other` and `g` of `self`.
    pub fn normalizes(&self, other: &Group) -> bool {
        other.generators.iter().all(|h| {
            self.generators
                .iter()
                .all(|g| other.chain().contains(&h.conjugate_by(g)))
        })
    }

    /// True iff `other ≤ self`.
    pub fn contains_group(&self, other: &Group) -> bool {
        other.degree == self.degree && other.generators.iter().all(|g| self.chain().contains(g))
    }

    /// Normality of `h` in `self`, tested on generators only.
    pub fn is_normal(&self, h: &Group) -> bool {
        self.contains_group(h) && self.normalizes(h)
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

/// A group together with the order of a parent it was checked against.
#[derive(Clone, Debug)]
pub struct Subgroup {
    group: Group,
    parent_order: u128,
}

impl Subgroup {
    /// Checks inclusion generator by generator, then Lagrange.
    pub fn of(parent: &Group, group: Group) -> Result<Self> {
        for g in group.generators() {
            if !parent.contains(g)? {
                return Err(Error::NotAMember);
            }
        }
        let parent_order = parent.order();
        if !parent_order.is_multiple_of(group.order()) {
            return Err(Error::Consistency(format!(
                "subgroup order {} does not divide {}",
                group.order(),
                parent_order
            )));
        }
        Ok(Subgroup {
            group,
            parent_order,
        })
    }

    pub fn whole(parent: &Group) -> Self {
        Subgroup {
            group: parent.clone(),
            parent_order: parent.order(),
        }
    }

    pub fn parent_order(&self) -> u128 {
        self.parent_order
    }

    pub fn index(&self) -> u128 {
        self.parent_order / self.group.order()
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn into_group(self) -> Group {
        self.group
    }
}

impl Deref for Subgroup {
    type Target = Group;

    fn deref(&self) -> &Group {
        &self.group
    }
}
