use super::{Group, Limits};
use crate::arith::Prime;
use crate::error::{Error, Result};
use crate::perm::Permutation;

fn check_degree(degree: usize, limits: Limits) -> Result<()> {
    if degree > limits.max_degree {
        return Err(Error::DegreeTooLarge {
            degree,
            max: limits.max_degree,
        });
    }
    Ok(())
}

/// `G × H` acting on the disjoint union of their point sets, `G` first.
pub fn direct_product(g: &Group, h: &Group) -> Result<Group> {
    let degree = g.degree() + h.degree();
    check_degree(degree, g.limits())?;
    let gens = g
        .generators()
        .iter()
        .map(|x| x.shifted(0, degree))
        .chain(h.generators().iter().map(|x| x.shifted(g.degree(), degree)))
        .collect();
    Group::with_limits(degree, gens, g.limits())
}

/// `G^copies` on `copies` disjoint blocks.
pub fn direct_power(g: &Group, copies: usize) -> Result<Group> {
    if copies == 0 {
        return Err(Error::BadParameter {
            name: "copies".into(),
            reason: "must be at least 1".into(),
        });
    }
    let degree = g.degree() * copies;
    check_degree(degree, g.limits())?;
    let gens = (0..copies)
        .flat_map(|k| {
            g.generators()
                .iter()
                .map(move |x| x.shifted(k * g.degree(), degree))
        })
        .collect();
    Group::with_limits(degree, gens, g.limits())
}

/// Permutation of the `p` blocks of size `block` sending block `i` to block `i+1`.
pub fn block_cycle(block: usize, p: usize) -> Permutation {
    let degree = block * p;
    let images = (0..degree)
        .map(|pt| {
            let (b, j) = (pt / block, pt % block);
            ((b + 1) % p) * block + j
        })
        .collect();
    Permutation::from_images(images).expect("block cycle is a bijection")
}

/// Embeds `(h_1, …, h_p)` into the base group of `H ≀ C_p`.
pub fn base_element(coords: &[Permutation]) -> Permutation {
    let block = coords[0].degree();
    let degree = block * coords.len();
    let mut images = Vec::with_capacity(degree);
    for (b, h) in coords.iter().enumerate() {
        images.extend(h.images().iter().map(|&j| b * block + j as usize));
    }
    Permutation::from_images(images).expect("base element is a bijection")
}

/// `H ≀ C_p`: base group `H^p` on `p` blocks plus the block `p`-cycle.
///
/// The top generator `x` sends block `i` to block `i+1`, so conjugation
/// shifts coordinates: `(h_1, …, h_p)^x = (h_p, h_1, …, h_{p-1})`.
pub fn wreath_product(h: &Group, p: Prime) -> Result<Group> {
    let p = p.get() as usize;
    let degree = h.degree() * p;
    check_degree(degree, h.limits())?;
    let mut gens: Vec<Permutation> = (0..p)
        .flat_map(|k| {
            h.generators()
                .iter()
                .map(move |x| x.shifted(k * h.degree(), degree))
        })
        .collect();
    gens.push(block_cycle(h.degree(), p));
    Group::with_limits(degree, gens, h.limits())
}
