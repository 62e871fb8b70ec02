//! Named constructors for the groups the suite runs on.
//!
//! Grammar: `sym:n`, `alt:n`, `cyclic:n`, `dihedral:2n`, `quaternion:4m`,
//! `frobenius:21`, `psl2:q`, `wr:<name>:<p>`, `prod:<name>:<k>`,
//! `diag-alt4cubed`, `extraspecial:27:+`, `extraspecial:27:-`.

use crate::arith::{is_prime, Prime};
use crate::error::{Error, Result};
use crate::group::{closure_of, direct_power, wreath_product, Group, Limits};
use crate::perm::Permutation;

const MAX_SYMMETRIC: usize = 30;

fn bad(name: &str, reason: impl Into<String>) -> Error {
    Error::BadParameter {
        name: name.to_string(),
        reason: reason.into(),
    }
}

fn param(name: &str, text: &str) -> Result<usize> {
    text.parse()
        .map_err(|_| bad(name, format!("`{text}` is not a non-negative integer")))
}

fn perm(images: Vec<usize>) -> Permutation {
    Permutation::from_images(images).expect("constructor images form a bijection")
}

fn cycle(points: impl IntoIterator<Item = usize>, degree: usize) -> Permutation {
    let cycle: Vec<usize> = points.into_iter().collect();
    Permutation::from_cycles(&[cycle], degree).expect("constructor cycle is valid")
}

pub fn symmetric(n: usize, limits: Limits) -> Result<Group> {
    let gens = if n < 2 {
        vec![]
    } else {
        vec![cycle([1, 2], n), cycle(1..=n, n)]
    };
    Group::with_limits(n.max(1), gens, limits)
}

pub fn alternating(n: usize, limits: Limits) -> Result<Group> {
    // (1,2,3) and (1,…,n) or (2,…,n), whichever is even
    let gens = if n < 3 {
        vec![]
    } else if n % 2 == 1 {
        vec![cycle([1, 2, 3], n), cycle(1..=n, n)]
    } else {
        vec![cycle([1, 2, 3], n), cycle(2..=n, n)]
    };
    Group::with_limits(n.max(1), gens, limits)
}

pub fn cyclic(n: usize, limits: Limits) -> Result<Group> {
    let gens = if n < 2 { vec![] } else { vec![cycle(1..=n, n)] };
    Group::with_limits(n.max(1), gens, limits)
}

/// Dihedral group of order `2n` acting on the `n`-gon.
pub fn dihedral(n: usize, limits: Limits) -> Result<Group> {
    let rotation = perm((0..n).map(|i| (i + 1) % n).collect());
    let reflection = perm((0..n).map(|i| (n - i) % n).collect());
    Group::with_limits(n, vec![rotation, reflection], limits)
}

/// Dicyclic group `⟨x, y | x^{2m}, y² = x^m, x^y = x⁻¹⟩` of order `4m` in its
/// right regular representation; quaternion when `m` is a power of two.
pub fn dicyclic(m: usize, limits: Limits) -> Result<Group> {
    let n = 2 * m;
    // point i + n·j stands for x^i y^j
    let idx = |i: usize, j: usize| (i % n) + n * j;
    let mut by_x = vec![0; 2 * n];
    let mut by_y = vec![0; 2 * n];
    for i in 0..n {
        by_x[idx(i, 0)] = idx(i + 1, 0);
        by_x[idx(i, 1)] = idx(i + n - 1, 1);
        by_y[idx(i, 0)] = idx(i, 1);
        by_y[idx(i, 1)] = idx(i + m, 0);
    }
    Group::with_limits(2 * n, vec![perm(by_x), perm(by_y)], limits)
}

/// `x ↦ x+1` and `x ↦ 2x` on `Z/7`.
pub fn frobenius_21(limits: Limits) -> Result<Group> {
    let translate = perm((0..7).map(|x| (x + 1) % 7).collect());
    let scale = perm((0..7).map(|x| (2 * x) % 7).collect());
    Group::with_limits(7, vec![translate, scale], limits)
}

/// `PSL(2, q)` on the projective line `{0, …, q−1, ∞}` (∞ is the last
/// point), generated by `x ↦ x+1` and `x ↦ −1/x`.
pub fn psl2(q: usize, limits: Limits) -> Result<Group> {
    let inf = q;
    let translate = perm(
        (0..=q)
            .map(|x| if x == inf { inf } else { (x + 1) % q })
            .collect(),
    );
    let inv = |x: usize| (1..q).find(|y| (x * y) % q == 1).unwrap();
    let invert = perm(
        (0..=q)
            .map(|x| match x {
                _ if x == inf => 0,
                0 => inf,
                _ => (q - inv(x)) % q,
            })
            .collect(),
    );
    Group::with_limits(q + 1, vec![translate, invert], limits)
}

/// Heisenberg group of `F₃²` affine maps (exponent 3) for `+`; `C₉ ⋊ C₃`
/// (exponent 9) for `-`.
pub fn extraspecial_27(plus: bool, limits: Limits) -> Result<Group> {
    if plus {
        // point 3u + v stands for (u, v)
        let idx = |u: usize, v: usize| 3 * (u % 3) + v % 3;
        let mut shift = vec![0; 9];
        let mut shear = vec![0; 9];
        for u in 0..3 {
            for v in 0..3 {
                shift[idx(u, v)] = idx(u + 1, v);
                shear[idx(u, v)] = idx(u, v + u);
            }
        }
        Group::with_limits(9, vec![perm(shift), perm(shear)], limits)
    } else {
        let translate = perm((0..9).map(|x| (x + 1) % 9).collect());
        let scale = perm((0..9).map(|x| (4 * x) % 9).collect());
        Group::with_limits(9, vec![translate, scale], limits)
    }
}

/// `ψ: Alt(4) → Z/3` with kernel the Klein group and `ψ((1,2,3)) = 1`.
fn alt4_character(a: &Permutation) -> usize {
    let t = cycle([1, 2, 3], 4);
    let t_inv = t.inverse();
    let mut x = a.clone();
    for k in 0..3 {
        if x.cycle_type() != vec![1, 3] {
            return k;
        }
        x = &x * &t_inv;
    }
    unreachable!("some a·t^-k lies in the Klein group")
}

/// `{(a, b, c) ∈ Alt(4)³ : ψ(a) + ψ(b) + ψ(c) = 0}`, of index 3.
pub fn diag_alt4_cubed(limits: Limits) -> Result<Group> {
    let alt4 = alternating(4, limits)?;
    let elems = alt4.enumerate()?;
    let mut members = Vec::new();
    for a in elems {
        for b in elems {
            for c in elems {
                if (alt4_character(a) + alt4_character(b) + alt4_character(c)).is_multiple_of(3) {
                    members.push(crate::group::base_element(&[
                        a.clone(),
                        b.clone(),
                        c.clone(),
                    ]));
                }
            }
        }
    }
    members.sort_unstable();
    closure_of(12, limits, &members)
}

fn split_last<'a>(name: &'a str, rest: &'a str) -> Result<(&'a str, &'a str)> {
    rest.rsplit_once(':')
        .ok_or_else(|| bad(name, "expected `<group>:<n>`"))
}

pub fn builtin(name: &str) -> Result<Group> {
    builtin_with_limits(name, Limits::default())
}

pub fn builtin_with_limits(name: &str, limits: Limits) -> Result<Group> {
    let name = name.trim();
    if name == "diag-alt4cubed" {
        return diag_alt4_cubed(limits);
    }
    let (kind, rest) = name
        .split_once(':')
        .ok_or_else(|| Error::UnknownBuiltin(name.to_string()))?;
    match kind {
        "sym" | "alt" | "cyclic" => {
            let n = param(name, rest)?;
            if n == 0 {
                return Err(bad(name, "must be positive"));
            }
            if n > MAX_SYMMETRIC && kind != "cyclic" {
                return Err(bad(name, format!("degree must be at most {MAX_SYMMETRIC}")));
            }
            match kind {
                "sym" => symmetric(n, limits),
                "alt" => alternating(n, limits),
                _ => cyclic(n, limits),
            }
        }
        "dihedral" => {
            let order = param(name, rest)?;
            if order % 2 != 0 || order < 6 {
                return Err(bad(name, "order must be even and at least 6"));
            }
            dihedral(order / 2, limits)
        }
        "quaternion" => {
            let order = param(name, rest)?;
            if order < 8 || !order.is_power_of_two() {
                return Err(bad(name, "order must be a power of two, at least 8"));
            }
            dicyclic(order / 4, limits)
        }
        "frobenius" => match rest {
            "21" => frobenius_21(limits),
            _ => Err(bad(name, "only frobenius:21 is available")),
        },
        "psl2" => {
            let q = param(name, rest)?;
            if !is_prime(q as u64) || q > 23 {
                return Err(bad(name, "q must be a prime at most 23"));
            }
            psl2(q, limits)
        }
        "extraspecial" => match rest {
            "27:+" => extraspecial_27(true, limits),
            "27:-" => extraspecial_27(false, limits),
            _ => Err(bad(name, "expected extraspecial:27:+ or extraspecial:27:-")),
        },
        "wr" => {
            let (inner, p) = split_last(name, rest)?;
            let p = Prime::new(param(name, p)? as u64).map_err(|e| bad(name, e.to_string()))?;
            wreath_product(&builtin_with_limits(inner, limits)?, p)
        }
        "prod" => {
            let (inner, k) = split_last(name, rest)?;
            direct_power(&builtin_with_limits(inner, limits)?, param(name, k)?)
        }
        _ => Err(Error::UnknownBuiltin(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{is_soluble, sylow_subgroup};

    fn order(name: &str) -> u128 {
        builtin(name).unwrap().order()
    }

    #[test]
    fn orders() {
        assert_eq!(order("sym:4"), 24);
        assert_eq!(order("alt:4"), 12);
        assert_eq!(order("alt:5"), 60);
        assert_eq!(order("alt:6"), 360);
        assert_eq!(order("cyclic:7"), 7);
        assert_eq!(order("dihedral:8"), 8);
        assert_eq!(order("dihedral:16"), 16);
        assert_eq!(order("quaternion:8"), 8);
        assert_eq!(order("quaternion:16"), 16);
        assert_eq!(order("frobenius:21"), 21);
        assert_eq!(order("psl2:7"), 168);
        assert_eq!(order("psl2:11"), 660);
        assert_eq!(order("psl2:13"), 1092);
        assert_eq!(order("psl2:23"), 6072);
        assert_eq!(order("prod:alt:4:3"), 1728);
        assert_eq!(order("wr:sym:3:5"), 38880);
        assert_eq!(order("wr:cyclic:3:3"), 81);
        assert_eq!(order("extraspecial:27:+"), 27);
        assert_eq!(order("extraspecial:27:-"), 27);
        assert_eq!(order("sym:1"), 1);
    }

    #[test]
    fn diag_is_index_three() {
        let g = builtin("diag-alt4cubed").unwrap();
        assert_eq!(g.order(), 1728 / 3);
        let cube = builtin("prod:alt:4:3").unwrap();
        assert!(cube.is_normal(&g));
    }

    #[test]
    fn frobenius_21_shape() {
        let g = builtin("frobenius:21").unwrap();
        let orders: Vec<u128> = g.generators().iter().map(Permutation::order).collect();
        assert_eq!(orders, vec![7, 3]);
        // the order-3 generator fixes only 0, and no non-identity element fixes two points
        let scale = &g.generators()[1];
        assert_eq!(scale.cycle_type(), vec![1, 3, 3]);
        assert!(g
            .enumerate()
            .unwrap()
            .iter()
            .filter(|x| !x.is_identity())
            .all(|x| x.cycle_lengths().iter().filter(|&&l| l == 1).count() <= 1));
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q8 = builtin("quaternion:8").unwrap();
        let involutions = q8
            .enumerate()
            .unwrap()
            .iter()
            .filter(|x| x.order() == 2)
            .count();
        assert_eq!(involutions, 1);
        assert!(!q8.is_abelian());
    }

    #[test]
    fn extraspecial_exponents() {
        for (name, exponent) in [("extraspecial:27:+", 3), ("extraspecial:27:-", 9)] {
            let g = builtin(name).unwrap();
            let max = g
                .enumerate()
                .unwrap()
                .iter()
                .map(Permutation::order)
                .max()
                .unwrap();
            assert_eq!(max, exponent, "{name}");
            assert!(!g.is_abelian());
        }
    }

    #[test]
    fn psl2_is_simple_looking() {
        let g = builtin("psl2:7").unwrap();
        assert!(!is_soluble(&g).unwrap());
        assert_eq!(
            sylow_subgroup(&g, Prime::new(7).unwrap()).unwrap().order(),
            7
        );
    }

    #[test]
    fn bad_names() {
        assert_eq!(
            builtin("foo:3").unwrap_err(),
            Error::UnknownBuiltin("foo:3".into())
        );
        assert!(matches!(builtin("psl2:9"), Err(Error::BadParameter { .. })));
        assert!(matches!(
            builtin("psl2:29"),
            Err(Error::BadParameter { .. })
        ));
        assert!(matches!(
            builtin("dihedral:7"),
            Err(Error::BadParameter { .. })
        ));
        assert!(matches!(
            builtin("wr:sym:3:4"),
            Err(Error::BadParameter { .. })
        ));
        assert!(matches!(builtin("sym:x"), Err(Error::BadParameter { .. })));
        assert!(matches!(builtin("sym:0"), Err(Error::BadParameter { .. })));
        assert!(matches!(builtin("nonsense"), Err(Error::UnknownBuiltin(_))));
    }
}
