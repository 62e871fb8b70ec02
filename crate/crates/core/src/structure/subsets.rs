use crate::arith::Prime;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::structure::ConjClassTable;

/// Largest number of order-`p` classes whose unions are enumerated.
pub const SUBSET_CLASS_CAP: usize = 12;

/// A non-empty union of conjugacy classes of elements of one prime order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalSubset {
    class_ids: Vec<usize>,
    p: Prime,
    elements: Vec<Permutation>,
}

impl NormalSubset {
    /// The prime is read off the classes' common element order.
    pub fn from_classes(table: &ConjClassTable, ids: &[usize]) -> Result<Self> {
        if ids.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut class_ids = ids.to_vec();
        class_ids.sort_unstable();
        class_ids.dedup();
        let mut order = None;
        for &i in &class_ids {
            let class = table.class(i).ok_or(Error::BadClassIndex(i))?;
            match order {
                None => order = Some(class.element_order()),
                Some(o) if o != class.element_order() => return Err(Error::MixedOrders),
                _ => {}
            }
        }
        let order = order.unwrap();
        let p = u64::try_from(order)
            .ok()
            .and_then(|o| Prime::new(o).ok())
            .ok_or(Error::MixedOrders)?;
        let elements = class_ids
            .iter()
            .flat_map(|&i| table.class_elements(i).cloned())
            .collect();
        Ok(NormalSubset {
            class_ids,
            p,
            elements,
        })
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.class_ids
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Ids of the classes whose elements have order exactly `p`.
pub fn classes_of_order(table: &ConjClassTable, p: Prime) -> Vec<usize> {
    table
        .classes()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.element_order() == p.get() as u128)
        .map(|(i, _)| i)
        .collect()
}

/// Every non-empty union of order-`p` classes, in bitmask order over the
/// increasing class ids.
pub fn normal_subsets_of_order_p(table: &ConjClassTable, p: Prime) -> Result<Vec<NormalSubset>> {
    let ids = classes_of_order(table, p);
    if ids.len() > SUBSET_CLASS_CAP {
        return Err(Error::SubsetCap {
            p: p.get(),
            count: ids.len(),
            cap: SUBSET_CLASS_CAP,
        });
    }
    (1u32..1 << ids.len())
        .map(|mask| {
            let chosen: Vec<usize> = ids
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask & (1 << bit) != 0)
                .map(|(_, &i)| i)
                .collect();
            NormalSubset::from_classes(table, &chosen)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::structure::conjugacy_classes;

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn alt4_order_three() {
        let g = Group::from_cycles(4, &["(1,2,3)", "(2,3,4)"]).unwrap();
        let t = conjugacy_classes(&g).unwrap();
        let subsets = normal_subsets_of_order_p(&t, prime(3)).unwrap();
        assert_eq!(subsets.len(), 3);
        let sizes: Vec<usize> = subsets.iter().map(NormalSubset::len).collect();
        assert_eq!(sizes, vec![4, 4, 8]);
    }

    #[test]
    fn sym3_has_no_order_five() {
        let g = Group::from_cycles(3, &["(1,2)", "(1,2,3)"]).unwrap();
        let t = conjugacy_classes(&g).unwrap();
        assert!(normal_subsets_of_order_p(&t, prime(5)).unwrap().is_empty());
    }

    #[test]
    fn alt5_order_five() {
        let g = Group::from_cycles(5, &["(1,2,3)", "(1,2,3,4,5)"]).unwrap();
        let t = conjugacy_classes(&g).unwrap();
        assert_eq!(classes_of_order(&t, prime(5)).len(), 2);
        assert_eq!(normal_subsets_of_order_p(&t, prime(5)).unwrap().len(), 3);
    }

    #[test]
    fn constructor_rejects_bad_input() {
        let g = Group::from_cycles(4, &["(1,2)", "(1,2,3,4)"]).unwrap();
        let t = conjugacy_classes(&g).unwrap();
        assert_eq!(NormalSubset::from_classes(&t, &[]), Err(Error::EmptySubset));
        assert_eq!(
            NormalSubset::from_classes(&t, &[99]),
            Err(Error::BadClassIndex(99))
        );
        let four_cycle = t
            .class_of(&crate::parse_cycles("(1,2,3,4)", 4).unwrap())
            .unwrap();
        assert_eq!(
            NormalSubset::from_classes(&t, &[four_cycle]),
            Err(Error::MixedOrders)
        );
        let three_cycle = t
            .class_of(&crate::parse_cycles("(1,2,3)", 4).unwrap())
            .unwrap();
        let transposition = t
            .class_of(&crate::parse_cycles("(1,2)", 4).unwrap())
            .unwrap();
        assert_eq!(
            NormalSubset::from_classes(&t, &[three_cycle, transposition]),
            Err(Error::MixedOrders)
        );
    }

    #[test]
    fn cap_is_enforced() {
        // C3^3 has 26 classes of order 3
        let g = Group::from_cycles(9, &["(1,2,3)", "(4,5,6)", "(7,8,9)"]).unwrap();
        let t = conjugacy_classes(&g).unwrap();
        assert_eq!(
            normal_subsets_of_order_p(&t, prime(3)),
            Err(Error::SubsetCap {
                p: 3,
                count: 26,
                cap: 12
            })
        );
    }
}
