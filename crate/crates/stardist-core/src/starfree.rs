//! K_{1,n}-free recognition and classification of the exceptional graphs.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StarFreeError {
    #[error("graph must be connected")]
    Disconnected,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An induced star K_{1,n}: a centre adjacent to n pairwise non-adjacent
/// leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarWitness {
    pub centre: usize,
    pub leaves: Vec<usize>,
}

impl StarWitness {
    /// Checks the witness against the graph it claims to live in.
    pub fn validate(&self, g: &Graph) -> bool {
        self.leaves.iter().all(|&l| g.has_edge(self.centre, l))
            && self
                .leaves
                .iter()
                .enumerate()
                .all(|(i, &a)| self.leaves[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
    }
}

/// Searches for an induced K_{1,n}. Centres are scanned in ascending order
/// and the leaf set returned is the lexicographically least independent set
/// of size n in that neighbourhood, so outputs are deterministic.
pub fn find_induced_star(g: &Graph, n: usize) -> Option<StarWitness> {
    assert!(n >= 1);
    for centre in g.vertices() {
        let nbrs = g.neighbours(centre);
        if nbrs.len() < n {
            continue;
        }
        let mut chosen = Vec::with_capacity(n);
        if independent_set(g, nbrs, 0, n, &mut chosen) {
            return Some(StarWitness {
                centre,
                leaves: chosen,
            });
        }
    }
    None
}

/// Branch and bound for a lexicographically least independent set of size
/// `need` among `candidates[from..]`, extending `chosen`.
fn independent_set(
    g: &Graph,
    candidates: &[usize],
    from: usize,
    need: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == need {
        return true;
    }
    for i in from..candidates.len() {
        // not enough candidates left to finish
        if candidates.len() - i < need - chosen.len() {
            return false;
        }
        let v = candidates[i];
        if chosen.iter().any(|&u| g.has_edge(u, v)) {
            continue;
        }
        chosen.push(v);
        if independent_set(g, candidates, i + 1, need, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

pub fn is_k1n_free(g: &Graph, n: usize) -> bool {
    find_induced_star(g, n).is_none()
}

/// The fixed list of graphs handled specially by the small-graph theory.
/// K3 is reported as C3. Star(m) requires m >= 2 so K2 stays K2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialKind {
    K1,
    K2,
    C3,
    C4,
    C5,
    K4,
    K5,
    /// K_{1,m} with m >= 2; carries the centre.
    Star(usize),
    /// Two triangles glued at the degree-4 centre.
    Hourglass,
    None,
}

impl SpecialKind {
    pub fn centre(self, g: &Graph) -> Option<usize> {
        match self {
            SpecialKind::Star(m) => g.vertices().find(|&v| g.degree(v) == m),
            SpecialKind::Hourglass => g.vertices().find(|&v| g.degree(v) == 4),
            _ => None,
        }
    }
}

/// Exact isomorphism-type classification of a connected graph against the
/// fixed list.
pub fn classify_special(g: &Graph) -> Result<SpecialKind, StarFreeError> {
    if !g.is_connected() {
        return Err(StarFreeError::Disconnected);
    }
    let n = g.n();
    let m = g.edge_count();
    let kind = match (n, m) {
        (1, 0) => SpecialKind::K1,
        (2, 1) => SpecialKind::K2,
        (3, 3) => SpecialKind::C3,
        (4, 4) if g.vertices().all(|v| g.degree(v) == 2) => SpecialKind::C4,
        (5, 5) if g.vertices().all(|v| g.degree(v) == 2) => SpecialKind::C5,
        (4, 6) => SpecialKind::K4,
        (5, 10) => SpecialKind::K5,
        (5, 6) => {
            // hourglass: a degree-4 centre whose neighbourhood induces 2K2
            match g.vertices().find(|&v| g.degree(v) == 4) {
                Some(c) if is_hourglass_centre(g, c) => SpecialKind::Hourglass,
                _ => SpecialKind::None,
            }
        }
        _ => SpecialKind::None,
    };
    if kind != SpecialKind::None {
        return Ok(kind);
    }
    // K_{1,m}: one centre of degree m, m leaves of degree 1
    if n >= 3 && m == n - 1 {
        let centre_count = g.vertices().filter(|&v| g.degree(v) == n - 1).count();
        let leaf_count = g.vertices().filter(|&v| g.degree(v) == 1).count();
        if centre_count == 1 && leaf_count == n - 1 {
            return Ok(SpecialKind::Star(n - 1));
        }
    }
    Ok(SpecialKind::None)
}

fn is_hourglass_centre(g: &Graph, c: usize) -> bool {
    let nbrs = g.neighbours(c);
    if nbrs.len() != 4 {
        return false;
    }
    // neighbourhood must induce a perfect matching on 4 vertices
    let mut matched = 0;
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if g.has_edge(a, b) {
                matched += 1;
            }
        }
    }
    matched == 2 && nbrs.iter().all(|&v| g.degree(v) == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::is_isomorphic;
    use crate::graph::families::*;

    #[test]
    fn star_witnesses() {
        let w = find_induced_star(&star(3), 3).unwrap();
        assert_eq!(w.centre, 0);
        assert_eq!(w.leaves, vec![1, 2, 3]);
        assert!(w.validate(&star(3)));

        assert!(find_induced_star(&cycle(5), 3).is_none());

        // every Petersen vertex is the centre of an induced claw
        let p = petersen();
        let w = find_induced_star(&p, 3).unwrap();
        assert!(w.validate(&p));
        for v in p.vertices() {
            let nbrs = p.neighbours(v);
            assert!(!p.has_edge(nbrs[0], nbrs[1]));
            assert!(!p.has_edge(nbrs[0], nbrs[2]));
            assert!(!p.has_edge(nbrs[1], nbrs[2]));
        }
    }

    #[test]
    fn freeness_examples() {
        assert!(is_k1n_free(&hourglass(), 3));
        assert!(!is_k1n_free(&star(3), 3));
        for n in 2..=5 {
            assert!(is_k1n_free(&complete(n), 2));
        }
        assert!(!is_k1n_free(&petersen(), 3));
    }

    #[test]
    fn max_degree_bound() {
        for g in [path(5), cycle(6), star(4), hourglass(), petersen(), net()] {
            assert!(is_k1n_free(&g, g.max_degree() + 1));
        }
    }

    #[test]
    fn classification() {
        assert_eq!(classify_special(&cycle(4)).unwrap(), SpecialKind::C4);
        assert_eq!(classify_special(&cycle(5)).unwrap(), SpecialKind::C5);
        assert_eq!(classify_special(&complete(3)).unwrap(), SpecialKind::C3);
        assert_eq!(classify_special(&complete(4)).unwrap(), SpecialKind::K4);
        assert_eq!(classify_special(&complete(5)).unwrap(), SpecialKind::K5);
        assert_eq!(classify_special(&complete(1)).unwrap(), SpecialKind::K1);
        assert_eq!(classify_special(&complete(2)).unwrap(), SpecialKind::K2);

        let p3 = path(3);
        let kind = classify_special(&p3).unwrap();
        assert_eq!(kind, SpecialKind::Star(2));
        assert_eq!(kind.centre(&p3), Some(1));

        let hg = hourglass();
        let kind = classify_special(&hg).unwrap();
        assert_eq!(kind, SpecialKind::Hourglass);
        assert_eq!(kind.centre(&hg), Some(0));

        assert_eq!(classify_special(&net()).unwrap(), SpecialKind::None);
        assert_eq!(classify_special(&path(5)).unwrap(), SpecialKind::None);
        assert!(classify_special(&Graph::empty(2)).is_err());

        // C5 and the bull both have 5 vertices and 5 edges
        let bull =
            Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]).unwrap();
        assert_eq!(classify_special(&bull).unwrap(), SpecialKind::None);
    }

    #[test]
    fn classification_matches_reference_isomorphism() {
        let refs: Vec<(Graph, SpecialKind)> = vec![
            (complete(1), SpecialKind::K1),
            (complete(2), SpecialKind::K2),
            (complete(3), SpecialKind::C3),
            (cycle(4), SpecialKind::C4),
            (cycle(5), SpecialKind::C5),
            (complete(4), SpecialKind::K4),
            (complete(5), SpecialKind::K5),
            (star(2), SpecialKind::Star(2)),
            (star(3), SpecialKind::Star(3)),
            (hourglass(), SpecialKind::Hourglass),
        ];
        for g in [
            complete(1),
            complete(2),
            complete(3),
            complete(4),
            complete(5),
            cycle(4),
            cycle(5),
            star(2),
            star(3),
            star(4),
            hourglass(),
            net(),
            path(4),
        ] {
            let kind = classify_special(&g).unwrap();
            for (r, rkind) in &refs {
                assert_eq!(is_isomorphic(&g, r), kind == *rkind, "graph {g:?} vs {rkind:?}");
            }
        }
    }

    #[test]
    fn antitone_in_n() {
        let graphs = [net(), petersen(), star(4), hourglass(), cycle(6)];
        for g in &graphs {
            for n in 1..6 {
                if is_k1n_free(g, n) {
                    assert!(is_k1n_free(g, n + 1));
                }
            }
        }
    }
}
