//! Tope graphs as partial cubes embedded in the hypercube on the ground set.
//!
//! Θ-classes are the coordinates themselves: an edge joins two topes whose
//! separator is a single element, and that element labels the edge.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result, MAX_ELEMENTS};
use crate::sign::{ElementSet, SignVector};
use crate::system::SignSystem;

/// Vertex count above which [`DistanceTable`] refuses to build.
pub const DISTANCE_TABLE_CAP: usize = 1 << 12;

#[derive(Clone)]
pub struct TopeGraph {
    labels: Arc<[String]>,
    ground: ElementSet,
    vertices: Vec<SignVector>,
    index: HashMap<SignVector, usize>,
    adj: Vec<Vec<(usize, usize)>>,
}

/// How a Θ-class sits relative to a vertex subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ThetaRelation {
    Crosses,
    Osculates,
    Disjoint,
}

/// The convex subgraph `[S]` of topes above a sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexRegion {
    pub sample: SignVector,
    pub vertices: Vec<SignVector>,
    /// One entry per ground element, in ground order.
    pub theta: Vec<(usize, ThetaRelation)>,
    pub lower: SignVector,
    pub upper: SignVector,
}

impl ConvexRegion {
    fn with_relation(&self, r: ThetaRelation) -> ElementSet {
        self.theta
            .iter()
            .filter(|(_, t)| *t == r)
            .map(|(e, _)| *e)
            .collect()
    }

    pub fn osc(&self) -> ElementSet {
        self.with_relation(ThetaRelation::Osculates)
    }

    pub fn cross(&self) -> ElementSet {
        self.with_relation(ThetaRelation::Crosses)
    }

    pub fn disjoint(&self) -> ElementSet {
        self.with_relation(ThetaRelation::Disjoint)
    }
}

impl TopeGraph {
    /// Tope graph of a COM.
    pub fn build(m: &SignSystem) -> Result<TopeGraph> {
        if !m.classify().com {
            return Err(Error::precondition("tope graph requires a COM"));
        }
        Ok(Self::of_system(m))
    }

    /// Tope graph of any system, skipping the axiom check.
    pub(crate) fn of_system(m: &SignSystem) -> TopeGraph {
        Self::from_parts(m.shared_labels(), m.ground(), m.topes())
    }

    /// The subgraph of the hypercube induced by arbitrary `{+,-}` vectors.
    pub fn from_vertices(labels: Vec<String>, vertices: Vec<SignVector>) -> Result<TopeGraph> {
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::input("too many elements"));
        }
        let ground = ElementSet::full(labels.len());
        for v in &vertices {
            if v.len() != labels.len() {
                return Err(Error::Dimension {
                    expected: labels.len(),
                    found: v.len(),
                });
            }
            if v.support() != ground {
                return Err(Error::input(format!("vertex {v} has a zero entry")));
            }
        }
        Ok(Self::from_parts(labels.into(), ground, vertices))
    }

    pub(crate) fn from_parts(
        labels: Arc<[String]>,
        ground: ElementSet,
        mut vertices: Vec<SignVector>,
    ) -> TopeGraph {
        vertices.sort_unstable();
        vertices.dedup();
        let index: HashMap<SignVector, usize> =
            vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let adj = vertices
            .iter()
            .map(|v| {
                let mut nbrs: Vec<(usize, usize)> = ground
                    .iter()
                    .filter_map(|e| index.get(&v.flip(e)).map(|&j| (j, e)))
                    .collect();
                nbrs.sort_unstable();
                nbrs
            })
            .collect();
        TopeGraph {
            labels,
            ground,
            vertices,
            index,
            adj,
        }
    }

    pub fn ground(&self) -> ElementSet {
        self.ground
    }

    pub fn universe_len(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> &[SignVector] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn index_of(&self, v: &SignVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn contains(&self, v: &SignVector) -> bool {
        self.index.contains_key(v)
    }

    /// Neighbors of vertex `i` with the label of the joining edge.
    pub fn neighbors(&self, i: usize) -> &[(usize, usize)] {
        &self.adj[i]
    }

    /// Every edge once as `(u, v, e)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &(v, e) in nbrs {
                if u < v {
                    out.push((u, v, e));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn bfs(&self, src: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.vertices.len()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &(v, _) in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Graph distance equals separator size for every pair.
    pub fn is_partial_cube(&self) -> bool {
        (0..self.vertices.len()).all(|s| {
            let dist = self.bfs(s);
            self.vertices
                .iter()
                .zip(&dist)
                .all(|(v, d)| *d == Some(self.vertices[s].separator(v).len() as u32))
        })
    }

    /// Both halfspaces of every Θ-class are convex: each shortest path
    /// between two vertices on one side stays on that side.
    pub fn halfspaces_convex(&self) -> bool {
        let n = self.vertices.len();
        let rows: Vec<Vec<Option<u32>>> = (0..n).map(|s| self.bfs(s)).collect();
        for e in self.ground.iter() {
            for u in 0..n {
                for v in 0..n {
                    let side = self.vertices[u].get(e);
                    if self.vertices[v].get(e) != side {
                        continue;
                    }
                    let Some(duv) = rows[u][v] else { return false };
                    for (w, row) in rows.iter().enumerate() {
                        if self.vertices[w].get(e) == side {
                            continue;
                        }
                        if let (Some(a), Some(b)) = (rows[u][w], row[v]) {
                            if a + b == duv {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// `π_A`: restricts every vertex to `ground \ A`.
    pub fn contract(&self, a: ElementSet) -> Result<TopeGraph> {
        if !a.is_subset(self.ground) {
            return Err(Error::input(format!(
                "element set {a:?} is not contained in the ground set"
            )));
        }
        let keep = self.ground.difference(a);
        let vertices = self.vertices.iter().map(|v| v.restrict(keep)).collect();
        Ok(Self::from_parts(Arc::clone(&self.labels), keep, vertices))
    }

    /// Classifies every ground element relative to an arbitrary vertex
    /// subset, given as a membership mask over vertex indices.
    pub fn theta_partition(&self, members: &[bool]) -> Vec<(usize, ThetaRelation)> {
        let mut inside = ElementSet::EMPTY;
        let mut touching = ElementSet::EMPTY;
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &(v, e) in nbrs {
                match (members[u], members[v]) {
                    (true, true) => inside = inside.with(e),
                    (true, false) | (false, true) => touching = touching.with(e),
                    _ => {}
                }
            }
        }
        self.ground
            .iter()
            .map(|e| {
                let r = if inside.contains(e) {
                    ThetaRelation::Crosses
                } else if touching.contains(e) {
                    ThetaRelation::Osculates
                } else {
                    ThetaRelation::Disjoint
                };
                (e, r)
            })
            .collect()
    }

    /// Osculating classes of the subgraph induced by `vertices`.
    pub fn osc_of(&self, vertices: &[SignVector]) -> ElementSet {
        let mut members = vec![false; self.vertices.len()];
        for v in vertices {
            if let Some(i) = self.index_of(v) {
                members[i] = true;
            }
        }
        self.theta_partition(&members)
            .into_iter()
            .filter(|(_, r)| *r == ThetaRelation::Osculates)
            .map(|(e, _)| e)
            .collect()
    }

    /// Topes above `s`.
    pub fn region_vertices(&self, s: &SignVector) -> Vec<SignVector> {
        self.vertices
            .iter()
            .filter(|t| s.below(t))
            .copied()
            .collect()
    }

    /// `[S]` with its Θ-partition and canonical bounds.
    pub fn region(&self, s: &SignVector) -> Result<ConvexRegion> {
        if s.len() != self.labels.len() {
            return Err(Error::Dimension {
                expected: self.labels.len(),
                found: s.len(),
            });
        }
        let members: Vec<bool> = self.vertices.iter().map(|t| s.below(t)).collect();
        let vertices: Vec<SignVector> = self
            .vertices
            .iter()
            .zip(&members)
            .filter(|(_, m)| **m)
            .map(|(t, _)| *t)
            .collect();
        let Some(first) = vertices.first().copied() else {
            return Err(Error::NotRealizable(s.format_on(self.ground)));
        };
        let theta = self.theta_partition(&members);
        let mut lower = SignVector::zero(self.labels.len());
        let mut upper = lower;
        for &(e, r) in &theta {
            // Outside the crossing classes the region lies in one halfspace.
            if r != ThetaRelation::Crosses {
                upper = upper.with(e, first.get(e));
            }
            if r == ThetaRelation::Osculates {
                lower = lower.with(e, first.get(e));
            }
        }
        Ok(ConvexRegion {
            sample: *s,
            vertices,
            theta,
            lower,
            upper,
        })
    }

    /// The gate `X∘T` of tope `t` in the face `[X]`.
    pub fn gate(&self, m: &SignSystem, x: &SignVector, t: &SignVector) -> Result<SignVector> {
        if !m.contains(x) {
            return Err(Error::input(format!(
                "{} is not a covector",
                m.format_vector(x)
            )));
        }
        if !self.contains(t) {
            return Err(Error::input(format!(
                "{} is not a tope",
                m.format_vector(t)
            )));
        }
        Ok(x.compose(t))
    }

    /// Checks that `g` lies in `[X]` and on a shortest path from `t` to
    /// every vertex of `[X]`.
    pub fn is_metric_gate(
        &self,
        table: &mut DistanceTable,
        x: &SignVector,
        t: &SignVector,
        g: &SignVector,
    ) -> bool {
        if !x.below(g) {
            return false;
        }
        let (Some(ti), Some(gi)) = (self.index_of(t), self.index_of(g)) else {
            return false;
        };
        let Some(dtg) = table.distance(self, ti, gi) else {
            return false;
        };
        self.vertices.iter().enumerate().all(|(vi, v)| {
            if !x.below(v) {
                return true;
            }
            match (table.distance(self, ti, vi), table.distance(self, gi, vi)) {
                (Some(a), Some(b)) => a == dtg + b,
                _ => false,
            }
        })
    }

    /// Every vertex has its negation in the graph and lies on a geodesic
    /// between any antipodal pair.
    pub fn is_antipodal(&self) -> bool {
        if self.vertices.is_empty() {
            return false;
        }
        let n = self.vertices.len();
        (0..n).all(|s| {
            let v = self.vertices[s];
            let Some(w) = self.index_of(&-v) else {
                return false;
            };
            let ds = self.bfs(s);
            let dw = self.bfs(w);
            let Some(dvw) = ds[w] else { return false };
            (0..n).all(|u| match (ds[u], dw[u]) {
                (Some(a), Some(b)) => a + b == dvw,
                _ => false,
            })
        })
    }

    /// Lines `T1 T2 e`, topes as sign strings in ground order.
    pub fn edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v, e) in self.edges() {
            let _ = writeln!(
                out,
                "{} {} {}",
                self.vertices[u].format_on(self.ground),
                self.vertices[v].format_on(self.ground),
                self.labels[e]
            );
        }
        out
    }
}

impl std::fmt::Debug for TopeGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let vs: Vec<String> = self
            .vertices
            .iter()
            .map(|v| v.format_on(self.ground))
            .collect();
        f.debug_struct("TopeGraph")
            .field("vertices", &vs)
            .field("edges", &self.edge_count())
            .finish()
    }
}

impl PartialEq for TopeGraph {
    fn eq(&self, other: &Self) -> bool {
        let fmt = |g: &TopeGraph| -> (Vec<String>, Vec<String>) {
            (
                g.ground.iter().map(|e| g.labels[e].clone()).collect(),
                g.vertices.iter().map(|v| v.format_on(g.ground)).collect(),
            )
        };
        fmt(self) == fmt(other)
    }
}

impl Eq for TopeGraph {}

/// Lazily filled BFS rows, one per source vertex.
pub struct DistanceTable {
    rows: Vec<Option<Vec<Option<u32>>>>,
}

impl DistanceTable {
    pub fn new(g: &TopeGraph) -> Result<DistanceTable> {
        if g.vertex_count() > DISTANCE_TABLE_CAP {
            return Err(Error::Resource {
                what: "distance table",
                size: g.vertex_count(),
                limit: DISTANCE_TABLE_CAP,
            });
        }
        Ok(DistanceTable {
            rows: vec![None; g.vertex_count()],
        })
    }

    pub fn distance(&mut self, g: &TopeGraph, u: usize, v: usize) -> Option<u32> {
        self.rows[u].get_or_insert_with(|| g.bfs(u))[v]
    }

    /// Distance between two vertex sets.
    pub fn set_distance(&mut self, g: &TopeGraph, a: &[usize], b: &[usize]) -> Option<u32> {
        let mut best = None;
        for &u in a {
            for &v in b {
                if let Some(d) = self.distance(g, u, v) {
                    best = Some(best.map_or(d, |b: u32| b.min(d)));
                }
            }
        }
        best
    }
}
