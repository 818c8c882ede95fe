//! Edge colourings: finite mappings from normalized edges to colours `1..=k`.
//!
//! Partial colourings are first-class; an automorphism is broken only by an
//! edge pair where both colours are defined.

use std::collections::BTreeMap;
use std::fmt;

use crate::graph::{Edge, Graph};

/// A (possibly partial) edge colouring with palette `1..=palette`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColouring {
    assignment: BTreeMap<Edge, u32>,
    palette: u32,
}

impl EdgeColouring {
    pub fn new(palette: u32) -> EdgeColouring {
        EdgeColouring {
            assignment: BTreeMap::new(),
            palette,
        }
    }

    /// Builds a total colouring of `g.edges()` from the colour vector over
    /// sorted edges.
    pub fn from_vector(g: &Graph, palette: u32, colours: &[u32]) -> EdgeColouring {
        let edges = g.edges();
        assert_eq!(edges.len(), colours.len());
        let mut c = EdgeColouring::new(palette);
        for (e, &col) in edges.iter().zip(colours) {
            c.set(*e, col);
        }
        c
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn set(&mut self, e: Edge, colour: u32) {
        assert!(
            colour >= 1 && colour <= self.palette,
            "colour {colour} outside palette 1..={}",
            self.palette
        );
        self.assignment.insert(e, colour);
    }

    pub fn unset(&mut self, e: Edge) {
        self.assignment.remove(&e);
    }

    pub fn get(&self, e: Edge) -> Option<u32> {
        self.assignment.get(&e).copied()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, u32)> + '_ {
        self.assignment.iter().map(|(e, c)| (*e, *c))
    }

    /// True when every edge of `g` is coloured.
    pub fn is_total_on(&self, g: &Graph) -> bool {
        g.edges().iter().all(|e| self.assignment.contains_key(e))
    }

    /// True when the domain is a subset of E(g).
    pub fn domain_within(&self, g: &Graph) -> bool {
        self.assignment.keys().all(|e| g.has_edge(e.u(), e.v()))
    }

    /// Colour vector over the sorted edges of `g` (total colourings only).
    pub fn vector_on(&self, g: &Graph) -> Vec<u32> {
        g.edges()
            .iter()
            .map(|e| self.get(*e).expect("colouring must be total"))
            .collect()
    }

    /// The colouring with every edge pushed through a vertex bijection.
    pub fn mapped(&self, image: &[usize]) -> EdgeColouring {
        let mut out = EdgeColouring::new(self.palette);
        for (e, c) in self.iter() {
            out.set(e.mapped(image), c);
        }
        out
    }

    /// Applies `sigma` (a map on colours, 1-based) to every assigned colour.
    pub fn recoloured(&self, sigma: impl Fn(u32) -> u32) -> EdgeColouring {
        let mut out = EdgeColouring::new(self.palette);
        for (e, c) in self.iter() {
            out.set(e, sigma(c));
        }
        out
    }

    /// Number of distinct colours actually used.
    pub fn colours_used(&self) -> usize {
        let mut cols: Vec<u32> = self.assignment.values().copied().collect();
        cols.sort_unstable();
        cols.dedup();
        cols.len()
    }
}

impl fmt::Display for EdgeColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{}:{}", e, c)?;
        }
        Ok(())
    }
}
