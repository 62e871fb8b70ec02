//! Class multiplication coefficients, counted directly from the class
//! table, and the class-square test built on them.

use serde::Serialize;

use crate::arith::Prime;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::structure::ConjClassTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassMultCoefficient {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub count: usize,
}

fn check_index(table: &ConjClassTable, i: usize) -> Result<()> {
    if i >= table.len() {
        return Err(Error::BadClassIndex(i));
    }
    Ok(())
}

/// `|{(x, y) ∈ C_i × C_j : xy = z}|` for a given `z`.
pub fn class_mult_count_at(
    table: &ConjClassTable,
    i: usize,
    j: usize,
    z: &Permutation,
) -> Result<usize> {
    check_index(table, i)?;
    check_index(table, j)?;
    table.class_of(z).ok_or(Error::NotAMember)?;
    Ok(table
        .class_elements(i)
        .filter(|x| table.class_of(&(&x.inverse() * z)) == Some(j))
        .count())
}

/// The coefficient with `z` the representative of `C_k`.
pub fn class_mult_coefficient(
    table: &ConjClassTable,
    i: usize,
    j: usize,
    k: usize,
) -> Result<ClassMultCoefficient> {
    check_index(table, k)?;
    let z = table.classes()[k].representative();
    Ok(ClassMultCoefficient {
        i,
        j,
        k,
        count: class_mult_count_at(table, i, j, z)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSquareOutcome {
    /// True iff every tested class has a non-`p`-element in its square.
    pub passes: bool,
    /// Classes of odd prime order that were tested.
    pub tested: Vec<usize>,
    /// Tested classes whose square consists of `p`-elements only.
    pub offending: Vec<usize>,
}

/// For each class `C` of odd prime order `p`, looks for a class `C_k` of
/// elements that are not `p`-elements with a non-zero coefficient
/// `(C, C, k)`. The identity counts as a `p`-element.
pub fn appendix_class_square_test(table: &ConjClassTable) -> Result<ClassSquareOutcome> {
    let mut tested = Vec::new();
    let mut offending = Vec::new();
    for (i, class) in table.classes().iter().enumerate() {
        let order = class.element_order();
        let Some(p) = u64::try_from(order).ok().and_then(|o| Prime::new(o).ok()) else {
            continue;
        };
        if !p.is_odd() {
            continue;
        }
        tested.push(i);
        let non_p: Vec<usize> = (0..table.len())
            .filter(|&k| !p.is_power(table.classes()[k].element_order()))
            .collect();
        let mut hits = false;
        for k in non_p {
            if class_mult_coefficient(table, i, i, k)?.count > 0 {
                hits = true;
                break;
            }
        }
        if !hits {
            offending.push(i);
        }
    }
    Ok(ClassSquareOutcome {
        passes: offending.is_empty(),
        tested,
        offending,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::parse_cycles;
    use crate::structure::conjugacy_classes;

    fn table(n: usize, gens: &[&str]) -> ConjClassTable {
        conjugacy_classes(&Group::from_cycles(n, gens).unwrap()).unwrap()
    }

    fn id_of(t: &ConjClassTable, text: &str, n: usize) -> usize {
        t.class_of(&parse_cycles(text, n).unwrap()).unwrap()
    }

    #[test]
    fn sym3_coefficients() {
        let t = table(3, &["(1,2)", "(1,2,3)"]);
        let tr = id_of(&t, "(1,2)", 3);
        let three = id_of(&t, "(1,2,3)", 3);
        assert_eq!(class_mult_coefficient(&t, tr, tr, three).unwrap().count, 3);
        assert_eq!(class_mult_coefficient(&t, tr, tr, 0).unwrap().count, 3);
        for j in 0..t.len() {
            assert_eq!(class_mult_coefficient(&t, 0, j, j).unwrap().count, 1);
        }
        assert_eq!(
            class_mult_coefficient(&t, 0, 9, 0).unwrap_err(),
            Error::BadClassIndex(9)
        );
    }

    #[test]
    fn appendix_examples() {
        let a5 = table(5, &["(1,2,3)", "(1,2,3,4,5)"]);
        assert!(appendix_class_square_test(&a5).unwrap().passes);

        let a4 = table(4, &["(1,2,3)", "(2,3,4)"]);
        let out = appendix_class_square_test(&a4).unwrap();
        assert!(!out.passes);
        let mut expected = vec![id_of(&a4, "(1,2,3)", 4), id_of(&a4, "(1,3,2)", 4)];
        expected.sort_unstable();
        assert_eq!(out.offending, expected);

        let s3 = table(3, &["(1,2)", "(1,2,3)"]);
        let out = appendix_class_square_test(&s3).unwrap();
        assert!(!out.passes);
        assert_eq!(out.offending, vec![id_of(&s3, "(1,2,3)", 3)]);
    }
}
