//! Deterministic Schreier–Sims.
//!
//! Each level stores its base point, the strong generators fixing all
//! earlier base points, and an explicit transversal `u_β` with
//! `base^u_β = β`. Base points are the smallest points moved by the first
//! element that needs a new level.

use std::collections::HashSet;

use rand::Rng;

use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    transversal: Vec<Option<(Permutation, Permutation)>>,
    checked: HashSet<(usize, usize)>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        let id = Permutation::identity(degree);
        transversal[base] = Some((id.clone(), id));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
            checked: HashSet::new(),
        }
    }

    fn extend_orbit(&mut self) {
        let mut k = 0;
        while k < self.orbit.len() {
            let beta = self.orbit[k];
            for s in &self.gens {
                let image = s.apply(beta);
                if self.transversal[image].is_none() {
                    let (u, _) = self.transversal[beta].as_ref().unwrap();
                    let v = u.mul_unchecked(s);
                    let v_inv = v.inverse();
                    self.transversal[image] = Some((v, v_inv));
                    self.orbit.push(image);
                }
            }
            k += 1;
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
        }
    }

    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = StabChain::new(degree);
        for g in gens {
            chain.extend(g);
        }
        chain
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        self.levels.first().map(|l| &l.gens[..]).unwrap_or(&[])
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().fold(1u128, |acc, l| {
            acc.checked_mul(l.orbit.len() as u128)
                .expect("group order overflows u128")
        })
    }

    /// Strips `g` through the chain from `from`; returns the residue and the
    /// level at which sifting stopped (`levels.len()` if it ran through).
    fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (k, level) in self.levels.iter().enumerate().skip(from) {
            let beta = h.apply(level.base);
            match &level.transversal[beta] {
                Some((_, u_inv)) => h = h.mul_unchecked(u_inv),
                None => return (h, k),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g, 0).0.is_identity()
    }

    /// Adds `g` as a new generator. Returns false if it was already a member.
    pub fn extend(&mut self, g: &Permutation) -> bool {
        let (residue, level) = self.sift(g, 0);
        if residue.is_identity() {
            return false;
        }
        self.add_strong(residue, level);
        self.complete(level);
        true
    }

    fn add_strong(&mut self, g: Permutation, level: usize) {
        if level == self.levels.len() {
            let base = g
                .first_moved()
                .expect("identity is never added as a strong generator");
            self.levels.push(Level::new(base, self.degree));
        }
        for l in &mut self.levels[..=level] {
            l.gens.push(g.clone());
            l.extend_orbit();
        }
    }

    /// Restores the chain property for all levels `<= start`.
    fn complete(&mut self, start: usize) {
        let mut k = start as isize;
        while k >= 0 {
            let level = k as usize;
            match self.find_schreier_failure(level) {
                Some((residue, at)) => {
                    self.add_strong(residue, at);
                    k = at as isize;
                }
                None => k -= 1,
            }
        }
    }

    fn find_schreier_failure(&mut self, level: usize) -> Option<(Permutation, usize)> {
        let mut i = 0;
        while i < self.levels[level].orbit.len() {
            let beta = self.levels[level].orbit[i];
            for s_idx in 0..self.levels[level].gens.len() {
                if !self.levels[level].checked.insert((beta, s_idx)) {
                    continue;
                }
                let l = &self.levels[level];
                let s = &l.gens[s_idx];
                let (u, _) = l.transversal[beta].as_ref().unwrap();
                let (_, v_inv) = l.transversal[s.apply(beta)].as_ref().unwrap();
                let schreier = u.mul_unchecked(s).mul_unchecked(v_inv);
                let (residue, at) = self.sift(&schreier, level + 1);
                if !residue.is_identity() {
                    return Some((residue, at));
                }
            }
            i += 1;
        }
        None
    }

    /// Calls `f` on every element exactly once.
    pub fn for_each_element(&self, mut f: impl FnMut(&Permutation)) {
        let id = Permutation::identity(self.degree);
        self.walk(self.levels.len(), &id, &mut f);
    }

    // g = u_{n-1} ⋯ u_1 u_0, built from the deepest level outwards.
    fn walk(&self, depth: usize, prefix: &Permutation, f: &mut impl FnMut(&Permutation)) {
        if depth == 0 {
            f(prefix);
            return;
        }
        let level = &self.levels[depth - 1];
        for &beta in &level.orbit {
            let (u, _) = level.transversal[beta].as_ref().unwrap();
            let next = prefix.mul_unchecked(u);
            self.walk(depth - 1, &next, f);
        }
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let beta = level.orbit[rng.gen_range(0..level.orbit.len())];
            let (u, _) = level.transversal[beta].as_ref().unwrap();
            g = g.mul_unchecked(u);
        }
        g
    }
}
