//! Automorphism groups, stabilizers, orbits and colour-preserving
//! automorphisms of finite graphs.
//!
//! Generators are found by a backtracking search pruned by iterated
//! partition refinement: for each base vertex in turn, the orbit under the
//! stabilizer of the previous base points is grown by searching for one
//! automorphism per new orbit point (the transversal witnesses generate the
//! group, and the product of orbit sizes is its order). The reported order
//! comes from a Schreier-Sims chain over the found generators; in debug
//! builds the two counts are cross-checked.

use crate::colouring::EdgeColouring;
use crate::graph::Graph;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::search::{classes_with_fixed, EdgeColours, IsoSearch, SideSpec};

/// The full automorphism group of `g`.
pub fn automorphism_group(g: &Graph) -> PermGroup {
    group_search(g, &[], EdgeColours::Plain)
}

/// All automorphisms fixing every vertex of `fixed` pointwise.
pub fn pointwise_stabilizer(g: &Graph, fixed: &[usize]) -> PermGroup {
    group_search(g, fixed, EdgeColours::Plain)
}

/// Automorphisms fixing `fixed` pointwise, stabilizing `setwise` as a set,
/// and preserving the (total) colouring `c`. Used by truncation rigidity
/// checks.
pub fn constrained_colour_group(
    g: &Graph,
    c: &EdgeColouring,
    fixed: &[usize],
    setwise: &[usize],
) -> PermGroup {
    debug_assert!(c.is_total_on(g));
    let mut classes = classes_with_fixed(g.n(), fixed);
    let marker = g.n() as u32 + 1;
    for &v in setwise {
        if classes[v] == 0 {
            classes[v] = marker;
        }
    }
    group_search_with_classes(g, classes, EdgeColours::Total(c))
}

fn group_search(g: &Graph, fixed: &[usize], colours: EdgeColours<'_>) -> PermGroup {
    group_search_with_classes(g, classes_with_fixed(g.n(), fixed), colours)
}

fn group_search_with_classes(g: &Graph, classes: Vec<u32>, colours: EdgeColours<'_>) -> PermGroup {
    let n = g.n();
    let side = SideSpec {
        graph: g,
        classes: Some(&classes),
        colours,
    };
    let mut gens: Vec<Permutation> = Vec::new();
    let mut chain_order: u128 = 1;
    let mut forced: Vec<(usize, usize)> = Vec::new();
    for b in 0..n {
        let mut level_gens: Vec<Permutation> = Vec::new();
        let mut orbit = vec![false; n];
        orbit[b] = true;
        let mut orbit_size = 1u128;
        for w in (b + 1)..n {
            // only vertices sharing b's initial class can be images of b
            if orbit[w] || classes[w] != classes[b] {
                continue;
            }
            let mut attempt = forced.clone();
            attempt.push((b, w));
            if let Some(phi) = IsoSearch::new(side, side)
                .with_forced(&attempt)
                .find_first(false)
            {
                level_gens.push(phi);
                // close the orbit under the witnesses found at this level
                let mut queue: Vec<usize> = (0..n).filter(|&v| orbit[v]).collect();
                let mut head = 0;
                while head < queue.len() {
                    let v = queue[head];
                    head += 1;
                    for gen in &level_gens {
                        let x = gen.apply(v);
                        if !orbit[x] {
                            orbit[x] = true;
                            orbit_size += 1;
                            queue.push(x);
                        }
                    }
                }
            }
        }
        chain_order *= orbit_size;
        gens.extend(level_gens);
        forced.push((b, b));
    }
    let group = PermGroup::from_generators(n, gens);
    debug_assert_eq!(group.order(), chain_order);
    group
}

/// Finds a non-identity automorphism of `g` that fixes `fixed` pointwise and
/// preserves the (possibly partial) colouring `c`: for every edge where both
/// `c(e)` and `c(phi(e))` are defined they agree. Returns `None` iff no such
/// automorphism exists.
pub fn find_colour_preserving(
    g: &Graph,
    c: &EdgeColouring,
    fixed: &[usize],
) -> Option<Permutation> {
    debug_assert!(c.domain_within(g));
    let classes = classes_with_fixed(g.n(), fixed);
    let side = SideSpec {
        graph: g,
        classes: Some(&classes),
        colours: EdgeColours::for_colouring(g, c),
    };
    IsoSearch::new(side, side).find_first(true)
}

/// True iff only the identity among the `fixed`-pointwise automorphisms
/// preserves `c`.
pub fn is_distinguishing(g: &Graph, c: &EdgeColouring, fixed: &[usize]) -> bool {
    find_colour_preserving(g, c, fixed).is_none()
}

/// True iff some automorphism fixing `fixed` pointwise carries `c` onto `d`,
/// i.e. `d(phi(e)) = c(e)` for every edge. Both colourings must be total.
pub fn are_colourings_isomorphic(
    g: &Graph,
    fixed: &[usize],
    c: &EdgeColouring,
    d: &EdgeColouring,
) -> bool {
    debug_assert!(c.is_total_on(g) && d.is_total_on(g));
    let classes = classes_with_fixed(g.n(), fixed);
    let a = SideSpec {
        graph: g,
        classes: Some(&classes),
        colours: EdgeColours::Total(c),
    };
    let b = SideSpec {
        graph: g,
        classes: Some(&classes),
        colours: EdgeColours::Total(d),
    };
    IsoSearch::new(a, b).exists()
}

/// Isomorphism test for plain graphs.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    IsoSearch::new(SideSpec::plain(a), SideSpec::plain(b)).exists()
}

/// Components of `g - f` partitioned into orbits of `Aut(g, f pointwise)`.
/// Two components are in the same class iff some isomorphism between them
/// preserves, for every vertex, its exact neighbour set inside `f`; such a
/// map extends by the identity to an automorphism of `g` fixing `f`, and
/// conversely.
#[derive(Debug, Clone)]
pub struct ComponentOrbits {
    /// Sorted vertex sets, ordered by least vertex.
    pub components: Vec<Vec<usize>>,
    /// Orbit classes as indices into `components`.
    pub classes: Vec<Vec<usize>>,
}

pub fn component_orbits(g: &Graph, f: &[usize]) -> ComponentOrbits {
    let mut fset: Vec<usize> = f.to_vec();
    fset.sort_unstable();
    fset.dedup();
    let rest: Vec<usize> = g
        .vertices()
        .filter(|v| fset.binary_search(v).is_err())
        .collect();
    let (outside, old_ids) = g
        .induced_subgraph(&rest)
        .expect("vertex set is within range");
    let components: Vec<Vec<usize>> = outside
        .components()
        .into_iter()
        .map(|comp| comp.into_iter().map(|v| old_ids[v]).collect())
        .collect();

    // attachment label of each component vertex: its neighbour set inside f
    let attachment = |v: usize| -> Vec<usize> {
        g.neighbours(v)
            .iter()
            .copied()
            .filter(|w| fset.binary_search(w).is_ok())
            .collect()
    };
    let mut dict: Vec<Vec<usize>> = components
        .iter()
        .flat_map(|comp| comp.iter().map(|&v| attachment(v)))
        .collect();
    dict.sort();
    dict.dedup();

    struct Labelled {
        graph: Graph,
        classes: Vec<u32>,
    }
    let labelled: Vec<Labelled> = components
        .iter()
        .map(|comp| {
            let (graph, ids) = g.induced_subgraph(comp).expect("component in range");
            let classes = ids
                .iter()
                .map(|&v| dict.binary_search(&attachment(v)).unwrap() as u32)
                .collect();
            Labelled { graph, classes }
        })
        .collect();

    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..components.len() {
        let found = classes.iter_mut().find(|class| {
            let rep = class[0];
            let a = SideSpec {
                graph: &labelled[rep].graph,
                classes: Some(&labelled[rep].classes),
                colours: EdgeColours::Plain,
            };
            let b = SideSpec {
                graph: &labelled[i].graph,
                classes: Some(&labelled[i].classes),
                colours: EdgeColours::Plain,
            };
            IsoSearch::new(a, b).exists()
        });
        match found {
            Some(class) => class.push(i),
            None => classes.push(vec![i]),
        }
    }
    ComponentOrbits {
        components,
        classes,
    }
}

/// Exhaustive n!-style reference implementations. Independent of the
/// refinement search; used as ground truth by tests and by the oracle on
/// small instances.
pub mod brute {
    use super::*;

    /// All automorphisms of `g` fixing `fixed` pointwise, by filtering every
    /// vertex bijection. Guarded to n <= 10.
    pub fn all_automorphisms(g: &Graph, fixed: &[usize]) -> Vec<Permutation> {
        let n = g.n();
        assert!(n <= 10, "brute-force automorphism search is capped at n = 10");
        let mut fixed: Vec<usize> = fixed.to_vec();
        fixed.sort_unstable();
        fixed.dedup();
        let mut out = Vec::new();
        let mut image: Vec<usize> = (0..n).collect();
        permute(&mut image, 0, &mut |image| {
            if fixed.iter().any(|&v| image[v] != v) {
                return;
            }
            if preserves_adjacency(g, image) {
                out.push(Permutation::from_image(image.to_vec()).unwrap());
            }
        });
        out.sort();
        out
    }

    fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
        if k == items.len() {
            visit(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, visit);
            items.swap(k, i);
        }
    }

    fn preserves_adjacency(g: &Graph, image: &[usize]) -> bool {
        for u in 0..g.n() {
            for &v in g.neighbours(u) {
                if v > u && !g.has_edge(image[u], image[v]) {
                    return false;
                }
            }
        }
        true
    }

    /// The automorphisms among `all` that preserve `c` in the partial sense.
    pub fn preserving(g: &Graph, c: &EdgeColouring, all: &[Permutation]) -> Vec<Permutation> {
        all.iter()
            .filter(|phi| {
                g.edges().iter().all(|&e| {
                    match (c.get(e), c.get(e.mapped(phi.image()))) {
                        (Some(x), Some(y)) => x == y,
                        _ => true,
                    }
                })
            })
            .cloned()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::Edge;

    #[test]
    fn cycle_group_is_dihedral() {
        let g = cycle(5);
        let grp = automorphism_group(&g);
        assert_eq!(grp.order(), 10);
        for gen in grp.generators() {
            assert!(brute::all_automorphisms(&g, &[])
                .iter()
                .any(|p| p == gen));
        }
    }

    #[test]
    fn star_and_petersen_orders() {
        assert_eq!(automorphism_group(&star(3)).order(), 6);
        assert_eq!(automorphism_group(&petersen()).order(), 120);
    }

    #[test]
    fn pointwise_stabilizer_examples() {
        let k13 = star(3);
        assert_eq!(pointwise_stabilizer(&k13, &[0]).order(), 6);
        assert_eq!(pointwise_stabilizer(&k13, &[1]).order(), 2);
        assert_eq!(pointwise_stabilizer(&cycle(5), &[0]).order(), 2);
    }

    #[test]
    fn colour_preserving_on_paths() {
        let p4 = path(4);
        let mono = EdgeColouring::from_vector(&p4, 1, &[1, 1, 1]);
        let phi = find_colour_preserving(&p4, &mono, &[]).unwrap();
        assert_eq!(phi.image(), &[3, 2, 1, 0]);

        let broken = EdgeColouring::from_vector(&p4, 2, &[1, 1, 2]);
        assert!(find_colour_preserving(&p4, &broken, &[]).is_none());
        assert!(is_distinguishing(&p4, &broken, &[]));
    }

    #[test]
    fn rainbow_star_is_distinguishing() {
        let g = star(3);
        let c = EdgeColouring::from_vector(&g, 3, &[1, 2, 3]);
        assert!(find_colour_preserving(&g, &c, &[]).is_none());
    }

    #[test]
    fn partial_colourings_break_only_when_both_defined() {
        let p4 = path(4);
        // colour only the first edge: the reflection maps it onto an
        // uncoloured edge, which does not break it
        let mut c = EdgeColouring::new(2);
        c.set(Edge::new(0, 1), 2);
        let phi = find_colour_preserving(&p4, &c, &[]).unwrap();
        assert!(!phi.is_identity());
        // colouring both end edges differently breaks the reflection
        c.set(Edge::new(2, 3), 1);
        assert!(find_colour_preserving(&p4, &c, &[]).is_none());
    }

    #[test]
    fn cycle_distinguishing_examples() {
        let c5 = cycle(5);
        // no 2-colouring of C5 distinguishes it (D'(C5) = 3); in particular
        // two adjacent 2-edges leave the reflection through the far vertex
        let c = EdgeColouring::from_vector(&c5, 2, &[1, 2, 1, 1, 2]);
        let phi = find_colour_preserving(&c5, &c, &[]).unwrap();
        assert!(!phi.is_identity());
        // with a third colour the cycle is easy to pin down
        let good = EdgeColouring::from_vector(&c5, 3, &[1, 1, 2, 2, 3]);
        assert!(is_distinguishing(&c5, &good, &[]));
        // brute-force agreement over all 2-colourings of C5
        let all = brute::all_automorphisms(&c5, &[]);
        for bits in 0..(1u32 << 5) {
            let vector: Vec<u32> = (0..5).map(|i| 1 + ((bits >> i) & 1)).collect();
            let c = EdgeColouring::from_vector(&c5, 2, &vector);
            let survivors = brute::preserving(&c5, &c, &all);
            assert_eq!(is_distinguishing(&c5, &c, &[]), survivors.len() == 1);
            assert!(survivors.len() > 1);
        }
    }

    #[test]
    fn k2_never_distinguishing() {
        let k2 = complete(2);
        for colour in 1..=2 {
            let c = EdgeColouring::from_vector(&k2, 2, &[colour]);
            assert!(!is_distinguishing(&k2, &c, &[]));
        }
    }

    #[test]
    fn colouring_isomorphism_examples() {
        let g = star(3);
        let c = EdgeColouring::from_vector(&g, 3, &[1, 2, 3]);
        assert!(are_colourings_isomorphic(&g, &[0], &c, &c));
        let rotated = EdgeColouring::from_vector(&g, 3, &[2, 3, 1]);
        assert!(are_colourings_isomorphic(&g, &[0], &c, &rotated));
        let c112 = EdgeColouring::from_vector(&g, 2, &[1, 1, 2]);
        let c122 = EdgeColouring::from_vector(&g, 2, &[1, 2, 2]);
        assert!(!are_colourings_isomorphic(&g, &[0], &c112, &c122));
    }

    #[test]
    fn component_orbit_examples() {
        // two triangles sharing an apex: one class of two K2 components
        let g = hourglass();
        let orbits = component_orbits(&g, &[0]);
        assert_eq!(orbits.components.len(), 2);
        assert_eq!(orbits.classes.len(), 1);

        // star: three K1 components in one class
        let orbits = component_orbits(&star(3), &[0]);
        assert_eq!(orbits.components.len(), 3);
        assert_eq!(orbits.classes.len(), 1);

        // path a-v-b with a pendant triangle at v: K1s fall in one class,
        // the K2 of the triangle in another
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (1, 4), (3, 4)]).unwrap();
        let orbits = component_orbits(&g, &[1]);
        assert_eq!(orbits.components.len(), 3);
        assert_eq!(orbits.classes.len(), 2);
    }

    #[test]
    fn group_matches_brute_force_on_small_graphs() {
        for g in [path(4), cycle(6), star(4), hourglass(), net(), complete(4)] {
            let expected = brute::all_automorphisms(&g, &[]).len() as u128;
            assert_eq!(automorphism_group(&g).order(), expected);
        }
    }
}
