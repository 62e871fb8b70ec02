use std::collections::HashMap;
use std::sync::Arc;

use crate::error::Result;
use crate::group::Group;
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct ConjClass {
    representative: Permutation,
    members: Vec<usize>,
    element_order: u128,
}

impl ConjClass {
    /// Lexicographically least element of the class.
    pub fn representative(&self) -> &Permutation {
        &self.representative
    }

    /// Indices into [`ConjClassTable::elements`], increasing.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn element_order(&self) -> u128 {
        self.element_order
    }
}

/// Conjugacy classes of an enumerable group with stable indices.
///
/// Classes are discovered by scanning elements in lexicographic order, so
/// class 0 is always the identity and each representative is the least
/// element of its class.
#[derive(Clone, Debug)]
pub struct ConjClassTable {
    elements: Arc<[Permutation]>,
    index: HashMap<Permutation, usize>,
    class_of: Vec<usize>,
    classes: Vec<ConjClass>,
}

impl ConjClassTable {
    pub fn group_order(&self) -> usize {
        self.elements.len()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> Option<&ConjClass> {
        self.classes.get(i)
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element_index(&self, x: &Permutation) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn class_of(&self, x: &Permutation) -> Option<usize> {
        self.element_index(x).map(|i| self.class_of[i])
    }

    pub fn class_of_index(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn class_elements(&self, i: usize) -> impl Iterator<Item = &Permutation> + '_ {
        self.classes[i].members.iter().map(|&e| &self.elements[e])
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ConjClass::size).collect()
    }
}

pub fn conjugacy_classes(g: &Group) -> Result<ConjClassTable> {
    let elements = g.element_list()?;
    let index: HashMap<Permutation, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, x)| (x.clone(), i))
        .collect();
    const UNSEEN: usize = usize::MAX;
    let mut class_of = vec![UNSEEN; elements.len()];
    let mut classes = Vec::new();
    for start in 0..elements.len() {
        if class_of[start] != UNSEEN {
            continue;
        }
        let id = classes.len();
        class_of[start] = id;
        let mut members = vec![start];
        let mut k = 0;
        while k < members.len() {
            let x = &elements[members[k]];
            for s in g.generators() {
                let y = index[&x.conjugate_by(s)];
                if class_of[y] == UNSEEN {
                    class_of[y] = id;
                    members.push(y);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        classes.push(ConjClass {
            representative: elements[start].clone(),
            element_order: elements[start].order(),
            members,
        });
    }
    Ok(ConjClassTable {
        elements,
        index,
        class_of,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // partition by pairwise conjugacy: x ~ y iff y = x^g for some g
    fn brute_sizes(g: &Group) -> Vec<usize> {
        let elems = g.enumerate().unwrap();
        let mut assigned = vec![false; elems.len()];
        let mut sizes = Vec::new();
        for i in 0..elems.len() {
            if assigned[i] {
                continue;
            }
            let mut size = 0;
            for j in i..elems.len() {
                if !assigned[j] && elems.iter().any(|w| elems[i].conjugate_by(w) == elems[j]) {
                    assigned[j] = true;
                    size += 1;
                }
            }
            sizes.push(size);
        }
        sizes.sort_unstable();
        sizes
    }

    fn sorted(mut v: Vec<usize>) -> Vec<usize> {
        v.sort_unstable();
        v
    }

    #[test]
    fn alt4_classes() {
        let g = Group::from_cycles(4, &["(1,2,3)", "(2,3,4)"]).unwrap();
        let t = conjugacy_classes(&g).unwrap();
        assert_eq!(sorted(t.sizes()), brute_sizes(&g));
        assert_eq!(sorted(t.sizes()), vec![1, 3, 4, 4]);
    }

    #[test]
    fn sym3_classes() {
        let g = Group::from_cycles(3, &["(1,2)", "(1,2,3)"]).unwrap();
        let t = conjugacy_classes(&g).unwrap();
        assert_eq!(sorted(t.sizes()), brute_sizes(&g));
        assert_eq!(sorted(t.sizes()), vec![1, 2, 3]);
    }

    #[test]
    fn abelian_groups_have_singleton_classes() {
        let g = Group::from_cycles(5, &["(1,2,3)", "(4,5)"]).unwrap();
        let t = conjugacy_classes(&g).unwrap();
        assert_eq!(t.len(), 6);
    }

    #[test]
    fn representatives_are_least() {
        let g = Group::from_cycles(5, &["(1,2,3,4,5)", "(1,2)"]).unwrap();
        let t = conjugacy_classes(&g).unwrap();
        assert!(t.class(0).unwrap().representative().is_identity());
        for (i, c) in t.classes().iter().enumerate() {
            assert!(t.class_elements(i).all(|x| x >= c.representative()));
            assert!(t
                .class_elements(i)
                .all(|x| x.cycle_type() == c.representative().cycle_type()));
        }
        assert_eq!(t.sizes().iter().sum::<usize>(), 120);
    }
}
