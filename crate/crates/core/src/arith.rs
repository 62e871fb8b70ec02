//! Small integer helpers: primes, factorisations, lcm.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A rational prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 != 2
    }

    /// True iff `n` is `p^k` for some `k >= 0`.
    pub fn is_power(self, mut n: u128) -> bool {
        if n == 0 {
            return false;
        }
        let p = self.0 as u128;
        while n.is_multiple_of(p) {
            n /= p;
        }
        n == 1
    }

    /// Largest power of `p` dividing `n`.
    pub fn part_of(self, mut n: u128) -> u128 {
        let p = self.0 as u128;
        let mut part = 1;
        while n > 0 && n.is_multiple_of(p) {
            n /= p;
            part *= p;
        }
        part
    }

    pub fn divides(self, n: u128) -> bool {
        n.is_multiple_of(self.0 as u128)
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u128) -> Vec<Prime> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(Prime(d as u64));
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(Prime(n as u64));
    }
    out
}

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Panics if the result overflows `u128`.
pub fn lcm(a: u128, b: u128) -> u128 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b)).checked_mul(b).expect("lcm overflows u128")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(23).is_ok());
        assert_eq!(Prime::new(1), Err(Error::NotPrime(1)));
        assert_eq!(Prime::new(9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn powers_and_parts() {
        let two = Prime::new(2).unwrap();
        assert!(two.is_power(1));
        assert!(two.is_power(8));
        assert!(!two.is_power(6));
        assert_eq!(two.part_of(24), 8);
        assert_eq!(Prime::new(3).unwrap().part_of(1728), 27);
    }

    #[test]
    fn divisors() {
        let ps: Vec<u64> = prime_divisors(1092).into_iter().map(Prime::get).collect();
        assert_eq!(ps, vec![2, 3, 7, 13]);
        assert!(prime_divisors(1).is_empty());
        assert_eq!(lcm(4, 6), 12);
    }
}
