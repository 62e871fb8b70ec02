use super::{Group, Limits, StabChain, Subgroup};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Subgroup generated by `seed`, with no parent check. Seeds already in the
/// group generated so far are dropped from the generator list.
pub fn closure_of<'a>(
    degree: usize,
    limits: Limits,
    seed: impl IntoIterator<Item = &'a Permutation>,
) -> Result<Group> {
    let mut chain = StabChain::new(degree);
    let mut gens = Vec::new();
    for s in seed {
        if s.degree() != degree {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: s.degree(),
            });
        }
        if chain.extend(s) {
            gens.push(s.clone());
        }
    }
    Ok(Group::from_chain(degree, gens, chain, limits))
}

/// Smallest subgroup of `parent` containing `seed`.
pub fn closure<'a>(
    parent: &Group,
    seed: impl IntoIterator<Item = &'a Permutation>,
) -> Result<Subgroup> {
    let seed: Vec<&Permutation> = seed.into_iter().collect();
    for s in &seed {
        if !parent.contains(s)? {
            return Err(Error::NotAMember);
        }
    }
    let group = closure_of(parent.degree(), parent.limits(), seed)?;
    Subgroup::of(parent, group)
}

/// Smallest normal subgroup of `parent` containing `seed`.
pub fn normal_closure<'a>(
    parent: &Group,
    seed: impl IntoIterator<Item = &'a Permutation>,
) -> Result<Subgroup> {
    let start = closure(parent, seed)?.into_group();
    let degree = parent.degree();
    let mut chain = start.chain().clone();
    let mut gens = start.generators().to_vec();
    let mut k = 0;
    while k < gens.len() {
        for g in parent.generators() {
            let c = gens[k].conjugate_by(g);
            if chain.extend(&c) {
                gens.push(c);
            }
        }
        k += 1;
    }
    let group = Group::from_chain(degree, gens, chain, parent.limits());
    Subgroup::of(parent, group)
}

/// `C_G(x)`, by filtering the element list.
pub fn centralizer(g: &Group, x: &Permutation) -> Result<Subgroup> {
    g.check_degree(x)?;
    let elems = g.enumerate()?;
    if x.is_identity() {
        return Ok(Subgroup::whole(g));
    }
    let xs = elems
        .iter()
        .filter(|h| h.mul_unchecked(x) == x.mul_unchecked(h));
    let group = closure_of(g.degree(), g.limits(), xs)?;
    Subgroup::of(g, group)
}

/// `N_G(H)`, by filtering the element list.
pub fn normalizer(g: &Group, h: &Group) -> Result<Subgroup> {
    let elems = g.enumerate()?;
    let chain = h.chain();
    let ns = elems.iter().filter(|x| {
        h.generators()
            .iter()
            .all(|s| chain.contains(&s.conjugate_by(x)))
    });
    let group = closure_of(g.degree(), g.limits(), ns)?;
    Subgroup::of(g, group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn s(n: usize) -> Group {
        let cycle: Vec<usize> = (1..=n).collect();
        Group::new(
            n,
            vec![
                Permutation::from_cycles(&[vec![1, 2]], n).unwrap(),
                Permutation::from_cycles(&[cycle], n).unwrap(),
            ],
        )
        .unwrap()
    }

    fn p(text: &str, n: usize) -> Permutation {
        parse_cycles(text, n).unwrap()
    }

    // brute-force subgroup generated by a set: multiply until closed
    fn brute_closure(seed: &[Permutation], degree: usize) -> usize {
        let mut set: std::collections::HashSet<Permutation> =
            std::iter::once(Permutation::identity(degree)).collect();
        loop {
            let mut next = set.clone();
            for a in &set {
                for b in seed {
                    next.insert(a.mul_unchecked(b));
                }
            }
            if next.len() == set.len() {
                return set.len();
            }
            set = next;
        }
    }

    #[test]
    fn closure_examples() {
        let s4 = s(4);
        assert_eq!(closure(&s4, &[p("(1,2,3)", 4)]).unwrap().order(), 3);
        let three_cycles: Vec<Permutation> = s4
            .enumerate()
            .unwrap()
            .iter()
            .filter(|x| x.cycle_type() == vec![1, 3])
            .cloned()
            .collect();
        assert_eq!(three_cycles.len(), 8);
        let q = closure(&s4, &three_cycles).unwrap();
        assert_eq!(q.order() as usize, brute_closure(&three_cycles, 4));
        assert_eq!(q.order(), 12);
        assert!(q.generators().len() < three_cycles.len());
        assert_eq!(
            closure(&q, &[p("(1,2)", 4)]).unwrap_err(),
            Error::NotAMember
        );
    }

    #[test]
    fn closure_is_idempotent() {
        let s4 = s(4);
        let q = closure(&s4, &[p("(1,2,3)", 4), p("(1,2)(3,4)", 4)]).unwrap();
        let again = closure(&s4, q.generators()).unwrap();
        assert_eq!(q.order(), again.order());
    }

    #[test]
    fn centralizer_examples() {
        let s3 = s(3);
        assert_eq!(centralizer(&s3, &p("(1,2,3)", 3)).unwrap().order(), 3);
        assert_eq!(centralizer(&s3, &s3.identity()).unwrap().order(), 6);
        let s4 = s(4);
        let c = centralizer(&s4, &p("(1,2)", 4)).unwrap();
        let brute = s4
            .enumerate()
            .unwrap()
            .iter()
            .filter(|h| h.mul_unchecked(&p("(1,2)", 4)) == p("(1,2)", 4).mul_unchecked(h))
            .count();
        assert_eq!(c.order() as usize, brute);
        assert_eq!(c.order(), 4);
    }

    #[test]
    fn normal_closure_examples() {
        let s3 = s(3);
        assert_eq!(normal_closure(&s3, &[p("(1,2,3)", 3)]).unwrap().order(), 3);
        assert_eq!(normal_closure(&s3, s3.generators()).unwrap().order(), 6);
        let s4 = s(4);
        let v = normal_closure(&s4, &[p("(1,2)(3,4)", 4)]).unwrap();
        assert_eq!(v.order(), 4);
        assert!(s4.is_normal(&v));
        // brute force: all conjugates of (1,2)(3,4) plus identity close to order 4
        let conj: Vec<_> = s4
            .enumerate()
            .unwrap()
            .iter()
            .map(|g| p("(1,2)(3,4)", 4).conjugate_by(g))
            .collect();
        assert_eq!(brute_closure(&conj, 4), 4);
    }

    #[test]
    fn normalizer_of_sylow_three_in_s4() {
        let s4 = s(4);
        let h = Group::from_cycles(4, &["(1,2,3)"]).unwrap();
        assert_eq!(normalizer(&s4, &h).unwrap().order(), 6);
    }
}
