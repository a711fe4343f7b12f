//! Immutable simple undirected graphs over dense vertex ids `0..n`, with the
//! vertex subsets used to describe game positions, K-sets, covers, and
//! modules.
//!
//! Graphs are capped at [`MAX_VERTICES`] vertices so every vertex subset fits
//! in one `u64` mask.

use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};

/// Hard limit on the vertex universe; subsets are single `u64` masks.
pub const MAX_VERTICES: usize = 64;

/// A subset of the vertices `0..n` of some graph, stored as a bit mask.
///
/// Iteration is always in ascending id order, which downstream code relies on
/// for deterministic tie-breaking.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// The full universe `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint_from(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement relative to `universe`.
    #[inline]
    pub fn complement_within(self, universe: Self) -> Self {
        VertexSet(universe.0 & !self.0)
    }

    /// Smallest member, if any.
    #[inline]
    pub fn min_member(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending id order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!(v < MAX_VERTICES, "vertex id {v} out of range");
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// An immutable simple undirected graph on vertices `0..n`, `n <= 64`.
///
/// Adjacency is one neighbor mask per vertex; symmetry and loop-freeness are
/// enforced on construction, so shared references are always consistent.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::CapExceeded {
                what: "graph construction",
                n,
                cap: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    ///
    /// # Panics
    /// Panics on out-of-range endpoints or self-loops; use the parsers in
    /// [`crate::format`] for untrusted input.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u},{v}) out of range for n={n}");
            assert!(u != v, "self-loop at vertex {u}");
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph directly from neighbor masks, validating the
    /// representation invariants.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::CapExceeded {
                what: "graph construction",
                n,
                cap: MAX_VERTICES,
            });
        }
        let universe = VertexSet::full(n).bits();
        for (v, &mask) in adj.iter().enumerate() {
            assert!(mask & !universe == 0, "adjacency of {v} leaves the universe");
            assert!(mask >> v & 1 == 0, "self-loop at vertex {v}");
        }
        for v in 0..n {
            let mut rest = adj[v];
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                assert!(
                    adj[u] >> v & 1 == 1,
                    "adjacency not symmetric between {u} and {v}"
                );
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// The full vertex set `{0, .., n-1}`.
    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Open neighborhood of a single vertex.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood of a single vertex.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    fn check_subset(&self, s: VertexSet) {
        assert!(
            s.is_subset_of(self.vertex_set()),
            "vertex set {s} leaves the universe of a {}-vertex graph",
            self.n
        );
    }

    /// Open neighborhood of a set: vertices outside `s` with a neighbor in it.
    pub fn open_neighborhood(&self, s: VertexSet) -> VertexSet {
        self.check_subset(s);
        let mut out = 0u64;
        for v in s.iter() {
            out |= self.adj[v];
        }
        VertexSet(out & !s.bits())
    }

    /// Closed neighborhood of a set; the empty set maps to the empty set.
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        self.check_subset(s);
        let mut out = s.bits();
        for v in s.iter() {
            out |= self.adj[v];
        }
        VertexSet(out)
    }

    /// True iff no edge has both endpoints in `s`.
    pub fn is_independent_set(&self, s: VertexSet) -> bool {
        self.check_subset(s);
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    /// True iff `s` induces a clique.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        self.check_subset(s);
        s.iter().all(|v| s.bits() & !(self.adj[v] | 1 << v) == 0)
    }

    /// Connected components of the whole graph, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertex_set())
    }

    /// Connected components of the subgraph induced by `s`, ordered by
    /// smallest member.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        self.check_subset(s);
        let mut remaining = s.bits();
        let mut comps = Vec::new();
        while remaining != 0 {
            let seed = remaining & remaining.wrapping_neg();
            let mut comp = seed;
            loop {
                let mut grown = comp;
                let mut frontier = comp;
                while frontier != 0 {
                    let v = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    grown |= self.adj[v] & remaining;
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            comps.push(VertexSet(comp));
            remaining &= !comp;
        }
        comps
    }

    /// True iff `s` induces a connected graph; the empty set is not connected.
    pub fn is_connected_within(&self, s: VertexSet) -> bool {
        if s.is_empty() {
            return false;
        }
        self.components_within(s).len() == 1
    }

    /// The subgraph induced by `s`, plus the map from new ids back to the
    /// originals (`map[new] = old`, ascending).
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        self.check_subset(s);
        let map: Vec<usize> = s.iter().collect();
        let mut adj = vec![0u64; map.len()];
        for (new_u, &old_u) in map.iter().enumerate() {
            let mut row = self.adj[old_u] & s.bits();
            while row != 0 {
                let old_v = row.trailing_zeros() as usize;
                row &= row - 1;
                // compress: rank of old_v within s
                let new_v = (s.bits() & ((1u64 << old_v) - 1)).count_ones() as usize;
                adj[new_u] |= 1 << new_v;
            }
        }
        (Graph { n: map.len(), adj }, map)
    }

    /// Complement graph (no self-loops).
    pub fn complement(&self) -> Graph {
        let universe = self.vertex_set().bits();
        let adj = (0..self.n)
            .map(|v| universe & !(self.adj[v] | 1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union; vertices of `other` are shifted up by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::CapExceeded {
                what: "disjoint union",
                n,
                cap: MAX_VERTICES,
            });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|m| m << self.n));
        Ok(Graph { n, adj })
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut rest = self.adj[u] & !((1u64 << u) | ((1u64 << u) - 1));
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.push((u, v));
            }
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.edge_count(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = [4, 1, 7].into_iter().collect();
        assert_eq!(s.to_vec(), vec![1, 4, 7]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(4) && !s.contains(0));
        assert_eq!(s.min_member(), Some(1));
        assert_eq!(s.to_string(), "{1,4,7}");
        assert_eq!(VertexSet::EMPTY.min_member(), None);
        assert_eq!(VertexSet::full(3), [0, 1, 2].into_iter().collect());
        assert_eq!(VertexSet::full(64).len(), 64);
    }

    #[test]
    fn vertex_set_algebra() {
        let a = VertexSet::from_bits(0b0111);
        let b = VertexSet::from_bits(0b1100);
        assert_eq!(a.union(b).bits(), 0b1111);
        assert_eq!(a.intersection(b).bits(), 0b0100);
        assert_eq!(a.difference(b).bits(), 0b0011);
        assert!(a.intersection(b).is_subset_of(a));
        assert!(!a.is_disjoint_from(b));
        assert_eq!(a.complement_within(VertexSet::full(4)).bits(), 0b1000);
    }

    #[test]
    fn closed_neighborhood_cases() {
        let p3 = path(3);
        assert_eq!(
            p3.closed_neighborhood(VertexSet::singleton(1)),
            VertexSet::full(3)
        );
        assert_eq!(p3.closed_neighborhood(VertexSet::EMPTY), VertexSet::EMPTY);
        // star with center 0: N[leaf] = {leaf, center}
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            star.closed_neighborhood(VertexSet::singleton(2)),
            [0, 2].into_iter().collect()
        );
    }

    #[test]
    fn closed_neighborhood_of_singleton_matches_adjacency() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        for v in g.vertices() {
            assert_eq!(
                g.closed_neighborhood(VertexSet::singleton(v)),
                g.neighbors(v).union(VertexSet::singleton(v))
            );
        }
    }

    #[test]
    fn components_are_a_partition() {
        let g = Graph::from_edges(6, [(0, 1), (2, 3), (3, 4)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0].to_vec(), vec![0, 1]);
        assert_eq!(comps[1].to_vec(), vec![2, 3, 4]);
        assert_eq!(comps[2].to_vec(), vec![5]);
        let mut seen = VertexSet::EMPTY;
        for c in &comps {
            assert!(seen.is_disjoint_from(*c));
            seen = seen.union(*c);
        }
        assert_eq!(seen, g.vertex_set());
    }

    #[test]
    fn components_edge_cases() {
        assert!(Graph::empty(0).unwrap().connected_components().is_empty());
        let two = Graph::empty(2).unwrap();
        assert_eq!(
            two.connected_components(),
            vec![VertexSet::singleton(0), VertexSet::singleton(1)]
        );
        assert_eq!(path(3).connected_components().len(), 1);
    }

    #[test]
    fn independence() {
        let p3 = path(3);
        assert!(p3.is_independent_set([0, 2].into_iter().collect()));
        assert!(p3.is_independent_set(VertexSet::EMPTY));
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(!k2.is_independent_set(VertexSet::full(2)));
    }

    #[test]
    fn induced_subgraph_cases() {
        let p3 = path(3);
        let (sub, map) = p3.induced_subgraph([0, 2].into_iter().collect());
        assert_eq!(sub.vertex_count(), 2);
        assert_eq!(sub.edge_count(), 0);
        assert_eq!(map, vec![0, 2]);

        let k3 = Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let (sub, _) = k3.induced_subgraph([0, 1].into_iter().collect());
        assert_eq!(sub.edges(), vec![(0, 1)]);

        let (whole, map) = p3.induced_subgraph(p3.vertex_set());
        assert_eq!(whole, p3);
        assert_eq!(map, vec![0, 1, 2]);
    }

    #[test]
    fn complement_and_union() {
        let p3 = path(3);
        let c = p3.complement();
        assert_eq!(c.edges(), vec![(0, 2)]);
        let u = p3.disjoint_union(&p3).unwrap();
        assert_eq!(u.vertex_count(), 6);
        assert_eq!(u.edges(), vec![(0, 1), (1, 2), (3, 4), (4, 5)]);
    }

    #[test]
    fn construction_caps() {
        assert!(Graph::empty(65).is_err());
        assert!(Graph::empty(64).is_ok());
    }

    #[test]
    #[should_panic(expected = "self-loop")]
    fn from_edges_rejects_loop() {
        let _ = Graph::from_edges(2, [(1, 1)]);
    }

    #[test]
    #[should_panic(expected = "not symmetric")]
    fn from_adjacency_rejects_asymmetry() {
        let _ = Graph::from_adjacency(vec![0b10, 0b00]);
    }
}
