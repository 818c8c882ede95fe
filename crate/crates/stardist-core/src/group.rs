//! Permutation groups given by generators, with a deterministic
//! Schreier-Sims stabilizer chain for order counting, membership tests and
//! element enumeration.

use crate::perm::Permutation;

/// A permutation group on `0..n` described by generators. The order is
/// computed once via a stabilizer chain on those generators.
#[derive(Debug, Clone)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Permutation>,
    order: u128,
}

impl PermGroup {
    pub fn from_generators(n: usize, generators: Vec<Permutation>) -> PermGroup {
        debug_assert!(generators.iter().all(|g| g.degree() == n));
        let generators: Vec<_> = generators.into_iter().filter(|g| !g.is_identity()).collect();
        let order = StabChain::build(n, &generators).order();
        PermGroup {
            n,
            generators,
            order,
        }
    }

    pub fn trivial(n: usize) -> PermGroup {
        PermGroup {
            n,
            generators: Vec::new(),
            order: 1,
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Orbit partition of `0..n` under the group, classes sorted.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let orbit = self.orbit_of(start);
            for &v in &orbit {
                seen[v] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn orbit_of(&self, v: usize) -> Vec<usize> {
        orbit_closure(self.n, &self.generators, &[v])
    }

    /// One representative per orbit, the least vertex of each.
    pub fn orbit_representatives(&self) -> Vec<usize> {
        self.orbits().iter().map(|o| o[0]).collect()
    }

    /// Vertices fixed by every group element.
    pub fn fixed_vertices(&self) -> Vec<usize> {
        self.orbits()
            .iter()
            .filter(|o| o.len() == 1)
            .map(|o| o[0])
            .collect()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        StabChain::build(self.n, &self.generators).contains(p)
    }

    /// Visits every group element exactly once (identity included).
    /// Intended for small groups; the cap guards against misuse.
    pub fn for_each_element(&self, cap: u128, mut f: impl FnMut(&Permutation)) {
        assert!(
            self.order <= cap,
            "group of order {} exceeds enumeration cap {cap}",
            self.order
        );
        let chain = StabChain::build(self.n, &self.generators);
        chain.for_each_element(&mut f);
    }

    /// All elements of a small group, identity included.
    pub fn elements(&self, cap: u128) -> Vec<Permutation> {
        let mut out = Vec::new();
        self.for_each_element(cap, |p| out.push(p.clone()));
        out
    }
}

fn orbit_closure(n: usize, gens: &[Permutation], seed: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; n];
    let mut queue: Vec<usize> = Vec::new();
    for &v in seed {
        if !seen[v] {
            seen[v] = true;
            queue.push(v);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for g in gens {
            let w = g.apply(v);
            if !seen[w] {
                seen[w] = true;
                queue.push(w);
            }
        }
    }
    queue.sort_unstable();
    queue
}

/// Deterministic Schreier-Sims stabilizer chain with natural base 0..n-1.
/// Levels with trivial orbits are elided.
pub struct StabChain {
    n: usize,
    levels: Vec<ChainLevel>,
}

struct ChainLevel {
    point: usize,
    /// transversal[v] = Some(g) with g(point) = v
    transversal: Vec<Option<Permutation>>,
    /// strong generators lying in this level's subgroup
    gens: Vec<Permutation>,
}

impl ChainLevel {
    fn orbit_size(&self) -> usize {
        self.transversal.iter().filter(|t| t.is_some()).count()
    }
}

impl StabChain {
    /// Builds the chain by iterating Schreier verification to a fixpoint:
    /// rebuild the chain from the current strong generators, sift every
    /// Schreier product, and add any non-identity residue as a new strong
    /// generator. Each added residue strictly grows some basic orbit, so
    /// the loop terminates with a verified strong generating set.
    pub fn build(n: usize, gens: &[Permutation]) -> StabChain {
        let mut strong: Vec<Permutation> =
            gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        strong.sort();
        strong.dedup();
        loop {
            let chain = StabChain::from_strong(n, &strong);
            match chain.verify() {
                None => return chain,
                Some(residue) => {
                    debug_assert!(!residue.is_identity());
                    strong.push(residue);
                }
            }
        }
    }

    /// Plain chain from a candidate strong generating set: level l uses the
    /// generators fixing all earlier base points.
    fn from_strong(n: usize, strong: &[Permutation]) -> StabChain {
        let mut levels = Vec::new();
        let mut remaining: Vec<Permutation> = strong.to_vec();
        for point in 0..n {
            if remaining.is_empty() {
                break;
            }
            if remaining.iter().all(|g| g.apply(point) == point) {
                continue;
            }
            let mut transversal: Vec<Option<Permutation>> = vec![None; n];
            transversal[point] = Some(Permutation::identity(n));
            let mut queue = vec![point];
            let mut head = 0;
            while head < queue.len() {
                let v = queue[head];
                head += 1;
                let rep = transversal[v].clone().unwrap();
                for g in &remaining {
                    let w = g.apply(v);
                    if transversal[w].is_none() {
                        transversal[w] = Some(g.compose(&rep));
                        queue.push(w);
                    }
                }
            }
            let gens = remaining.clone();
            remaining.retain(|g| g.apply(point) == point);
            levels.push(ChainLevel {
                point,
                transversal,
                gens,
            });
        }
        StabChain { n, levels }
    }

    /// Schreier verification: returns a sifted residue witnessing
    /// incompleteness (adding it to the strong set strictly grows a basic
    /// orbit), or None when every Schreier product sifts to the identity.
    fn verify(&self) -> Option<Permutation> {
        for (l, level) in self.levels.iter().enumerate() {
            for rep in level.transversal.iter().flatten() {
                for gen in &level.gens {
                    let prod = gen.compose(rep);
                    let img = prod.apply(level.point);
                    let canon = level.transversal[img]
                        .as_ref()
                        .expect("orbit closed under level generators");
                    let schreier = canon.inverse().compose(&prod);
                    if let Some(residue) = self.sift_residue(schreier, l + 1) {
                        return Some(residue);
                    }
                }
            }
        }
        None
    }

    /// Sifts from `from_level` down; returns the residue at the first
    /// failure (image outside a basic orbit, or a non-identity leftover).
    fn sift_residue(&self, p: Permutation, from_level: usize) -> Option<Permutation> {
        let mut g = p;
        for level in &self.levels[from_level.min(self.levels.len())..] {
            if g.is_identity() {
                return None;
            }
            let img = g.apply(level.point);
            match &level.transversal[img] {
                Some(rep) => g = rep.inverse().compose(&g),
                None => return Some(g),
            }
        }
        if g.is_identity() {
            None
        } else {
            Some(g)
        }
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.orbit_size() as u128)
            .product()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        let mut g = p.clone();
        for level in &self.levels {
            if g.is_identity() {
                return true;
            }
            let img = g.apply(level.point);
            match &level.transversal[img] {
                Some(rep) => g = rep.inverse().compose(&g),
                None => return false,
            }
        }
        g.is_identity()
    }

    fn for_each_element(&self, f: &mut impl FnMut(&Permutation)) {
        fn rec(
            chain: &StabChain,
            level: usize,
            acc: Permutation,
            f: &mut impl FnMut(&Permutation),
        ) {
            if level == chain.levels.len() {
                f(&acc);
                return;
            }
            for rep in chain.levels[level].transversal.iter().flatten() {
                rec(chain, level + 1, acc.compose(rep), f);
            }
        }
        rec(self, 0, Permutation::identity(self.n), f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_gen(n: usize) -> Permutation {
        Permutation::from_image((0..n).map(|i| (i + 1) % n).collect()).unwrap()
    }

    #[test]
    fn symmetric_group_order() {
        // S5 from a transposition and a 5-cycle
        let t = Permutation::from_image(vec![1, 0, 2, 3, 4]).unwrap();
        let c = cyclic_gen(5);
        let g = PermGroup::from_generators(5, vec![t.clone(), c.clone()]);
        assert_eq!(g.order(), 120);
        assert!(g.contains(&t.compose(&c)));
        assert_eq!(g.orbits().len(), 1);
    }

    #[test]
    fn dihedral_group() {
        let rot = cyclic_gen(5);
        let refl = Permutation::from_image(vec![0, 4, 3, 2, 1]).unwrap();
        let g = PermGroup::from_generators(5, vec![rot, refl]);
        assert_eq!(g.order(), 10);
        let els = g.elements(100);
        assert_eq!(els.len(), 10);
        // all elements distinct
        let mut sorted = els.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 10);
    }

    #[test]
    fn trivial_and_fixed() {
        let g = PermGroup::trivial(4);
        assert_eq!(g.order(), 1);
        assert_eq!(g.fixed_vertices(), vec![0, 1, 2, 3]);
        assert!(g.contains(&Permutation::identity(4)));
        assert!(!g.contains(&Permutation::from_image(vec![1, 0, 2, 3]).unwrap()));
    }

    #[test]
    fn klein_four() {
        let a = Permutation::from_image(vec![1, 0, 3, 2]).unwrap();
        let b = Permutation::from_image(vec![2, 3, 0, 1]).unwrap();
        let g = PermGroup::from_generators(4, vec![a, b]);
        assert_eq!(g.order(), 4);
    }
}
