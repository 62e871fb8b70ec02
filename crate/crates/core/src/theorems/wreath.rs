//! Witnesses in `W = H ≀ C_p` for non-abelian `p'`-groups `H`: an element
//! `w` with `x^w x` not a `p`-element.

use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;

use crate::arith::Prime;
use crate::error::{Error, Result};
use crate::group::{base_element, block_cycle, wreath_product, Group};
use crate::perm::Permutation;
use crate::theorems::Check;

pub const RANDOM_ATTEMPTS: usize = 100_000;

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub witness: Permutation,
    pub product: Permutation,
    pub product_order: u128,
    /// The witness is `(a, b⁻¹, 1, …, 1)` for a non-commuting pair.
    pub via_proof: bool,
    /// `x^w x = (a⁻¹b⁻¹, b, 1, …, 1, a) x²` for the explicit witness.
    pub proof_identity: Check,
    /// With `a = b` the explicit form gives a `p`-element.
    pub commuting_case_p_element: Check,
    pub attempts: usize,
}

fn non_commuting_pair(h: &Group) -> Result<Option<(Permutation, Permutation)>> {
    let gens = h.generators();
    for a in gens {
        for b in gens {
            if a * b != b * a {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    let elems = h.enumerate()?;
    for a in elems {
        for b in elems {
            if a * b != b * a {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}

/// `x^w · x`.
pub fn twisted_square(x: &Permutation, w: &Permutation) -> Permutation {
    &x.conjugate_by(w) * x
}

/// The explicit witness `(a, b⁻¹, 1, …, 1)` and the predicted value of `x^w x`.
pub fn proof_witness(a: &Permutation, b: &Permutation, p: usize) -> (Permutation, Permutation) {
    let id = Permutation::identity(a.degree());
    let mut w = vec![id.clone(); p];
    w[0] = a.clone();
    w[1] = b.inverse();
    let mut predicted = vec![id; p];
    predicted[0] = &a.inverse() * &b.inverse();
    predicted[1] = b.clone();
    predicted[p - 1] = a.clone();
    let x = block_cycle(a.degree(), p);
    let predicted = &base_element(&predicted) * &x.pow(2);
    (base_element(&w), predicted)
}

/// Finds `w ∈ H ≀ C_p` with `x^w x` not a `p`-element. When `x` is the
/// block cycle and `p` is odd the explicit witness is tried first; otherwise
/// (or if it fails) seeded random elements of `W` are tried.
pub fn wreath_witness_search(
    h: &Group,
    p: Prime,
    x: &Permutation,
    seed: u64,
) -> Result<WitnessReport> {
    if h.is_abelian() {
        return Err(Error::Precondition("H must be non-abelian".into()));
    }
    if p.divides(h.order()) {
        return Err(Error::Precondition(format!(
            "{p} divides |H| = {}",
            h.order()
        )));
    }
    let w_group = wreath_product(h, p)?;
    if !w_group.contains(x)? || x.order() != p.get() as u128 {
        return Err(Error::Precondition(format!(
            "x must be an element of W of order {p}"
        )));
    }
    let pn = p.get() as usize;

    let mut proof_identity = Check::NotApplicable;
    let mut commuting = Check::NotApplicable;
    if p.is_odd() && *x == block_cycle(h.degree(), pn) {
        if let Some((a, b)) = non_commuting_pair(h)? {
            let (w, predicted) = proof_witness(&a, &b, pn);
            let product = twisted_square(x, &w);
            proof_identity = Check::from_bool(product == predicted);
            let (w_comm, _) = proof_witness(&a, &a, pn);
            commuting = Check::from_bool(twisted_square(x, &w_comm).is_p_element(p));
            if !product.is_p_element(p) {
                return Ok(WitnessReport {
                    witness: w,
                    product_order: product.order(),
                    product,
                    via_proof: true,
                    proof_identity,
                    commuting_case_p_element: commuting,
                    attempts: 1,
                });
            }
        }
    }

    let mut rng = StdRng::seed_from_u64(seed);
    for attempt in 1..=RANDOM_ATTEMPTS {
        let w = w_group.random_element(&mut rng);
        let product = twisted_square(x, &w);
        if !product.is_p_element(p) {
            return Ok(WitnessReport {
                witness: w,
                product_order: product.order(),
                product,
                via_proof: false,
                proof_identity,
                commuting_case_p_element: commuting,
                attempts: attempt,
            });
        }
    }
    Err(Error::SearchExhausted(RANDOM_ATTEMPTS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::DEFAULT_SEED;

    fn s3() -> Group {
        Group::from_cycles(3, &["(1,2)", "(1,2,3)"]).unwrap()
    }

    #[test]
    fn sym3_wr_c5() {
        let five = Prime::new(5).unwrap();
        let x = block_cycle(3, 5);
        let r = wreath_witness_search(&s3(), five, &x, DEFAULT_SEED).unwrap();
        assert!(r.via_proof);
        assert_eq!(r.proof_identity, Check::Holds);
        assert_eq!(r.commuting_case_p_element, Check::Holds);
        assert!(!r.product.is_p_element(five));
        assert!(r.product_order.is_multiple_of(2) || r.product_order.is_multiple_of(3));
    }

    #[test]
    fn commuting_pair_gives_p_element() {
        let a = crate::parse_cycles("(1,2)", 3).unwrap();
        let x = block_cycle(3, 5);
        let (w, predicted) = proof_witness(&a, &a, 5);
        let product = twisted_square(&x, &w);
        assert_eq!(product, predicted);
        assert!(product.is_p_element(Prime::new(5).unwrap()));
    }

    #[test]
    fn random_fallback_for_other_elements() {
        let five = Prime::new(5).unwrap();
        let x = block_cycle(3, 5);
        let id = Permutation::identity(3);
        let mut coords = vec![id; 5];
        coords[0] = crate::parse_cycles("(1,2,3)", 3).unwrap();
        let h = base_element(&coords);
        let y = x.conjugate_by(&h);
        assert_ne!(y, x);
        let r = wreath_witness_search(&s3(), five, &y, DEFAULT_SEED).unwrap();
        assert!(!r.via_proof);
        assert!(!r.product.is_p_element(five));
    }

    #[test]
    fn preconditions() {
        let three = Prime::new(3).unwrap();
        let x = block_cycle(3, 3);
        assert!(matches!(
            wreath_witness_search(&s3(), three, &x, DEFAULT_SEED),
            Err(Error::Precondition(_))
        ));
        let c5 = Group::from_cycles(5, &["(1,2,3,4,5)"]).unwrap();
        let x = block_cycle(5, 3);
        assert!(matches!(
            wreath_witness_search(&c5, three, &x, DEFAULT_SEED),
            Err(Error::Precondition(_))
        ));
    }
}
