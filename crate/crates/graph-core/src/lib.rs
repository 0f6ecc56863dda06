//! Finite simple undirected graphs over dense ids 0..n-1, plus the distance,
//! ball, connectivity and path-enumeration primitives everything else builds on.
//!
//! All iteration orders are deterministic: adjacency lists are kept sorted and
//! sets are handled in increasing vertex order, so search traces and golden
//! files are reproducible.

use std::collections::{BTreeMap, VecDeque};

pub mod io;

pub type Vertex = u32;

/// Hop-count distance; unreachable is explicit, never a sentinel integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Dist {
    Finite(u32),
    Infinite,
}

impl Dist {
    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }

    /// The finite value, if any.
    pub fn finite(self) -> Option<u32> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Infinite => None,
        }
    }
}

impl PartialOrd for Dist {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dist {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (Dist::Finite(a), Dist::Finite(b)) => a.cmp(b),
            (Dist::Finite(_), Dist::Infinite) => std::cmp::Ordering::Less,
            (Dist::Infinite, Dist::Finite(_)) => std::cmp::Ordering::Greater,
            (Dist::Infinite, Dist::Infinite) => std::cmp::Ordering::Equal,
        }
    }
}

impl std::fmt::Display for Dist {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("empty source set")]
    EmptySourceSet,
    #[error("empty set")]
    EmptySet,
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(Vertex, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("path cap must be positive")]
    ZeroCap,
    #[error("source and target sets must be disjoint")]
    SetsOverlap,
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid separation: {0}")]
    InvalidSeparation(String),
}

pub type Result<T> = std::result::Result<T, GraphError>;

/// Immutable after construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    labels: BTreeMap<Vertex, String>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: BTreeMap::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n as Vertex {
            for v in (u + 1)..n as Vertex {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Complete bipartite K_{a,b}: side A = 0..a, side B = a..a+b.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for u in 0..a as Vertex {
            for v in a as Vertex..(a + b) as Vertex {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n as Vertex {
            g.add_edge(u, (u + 1) % n as Vertex).unwrap();
        }
        g
    }

    pub fn path_graph(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 1..n as Vertex {
            g.add_edge(u - 1, u).unwrap();
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if (v as usize) < self.adj.len() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange(v, self.adj.len()))
        }
    }

    fn check_set(&self, set: &[Vertex]) -> Result<()> {
        for &v in set {
            self.check_vertex(v)?;
        }
        Ok(())
    }

    /// Idempotent; keeps adjacency sorted.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let a = &mut self.adj[u as usize];
        if let Err(pos) = a.binary_search(&v) {
            a.insert(pos, v);
        }
        let a = &mut self.adj[v as usize];
        if let Err(pos) = a.binary_search(&u) {
            a.insert(pos, u);
        }
        Ok(())
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        (u as usize) < self.adj.len() && self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    /// Edges as (min, max) pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.adj.len() as Vertex {
            for &v in &self.adj[u as usize] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        0..self.adj.len() as Vertex
    }

    pub fn set_label(&mut self, v: Vertex, label: impl Into<String>) {
        self.labels.insert(v, label.into());
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(|s| s.as_str())
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    /// Multi-source BFS distances from `sources` to every vertex.
    pub fn distances(&self, sources: &[Vertex]) -> Result<Vec<Dist>> {
        if sources.is_empty() {
            return Err(GraphError::EmptySourceSet);
        }
        self.check_set(sources)?;
        Ok(self.bfs(sources, u32::MAX))
    }

    /// BFS truncated at depth `limit`; vertices beyond it report Infinite.
    fn bfs(&self, sources: &[Vertex], limit: u32) -> Vec<Dist> {
        let mut dist = vec![Dist::Infinite; self.adj.len()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s as usize] == Dist::Infinite {
                dist[s as usize] = Dist::Finite(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = match dist[u as usize] {
                Dist::Finite(d) => d,
                Dist::Infinite => unreachable!(),
            };
            if du == limit {
                continue;
            }
            for &v in &self.adj[u as usize] {
                if dist[v as usize] == Dist::Infinite {
                    dist[v as usize] = Dist::Finite(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// B(u, r) = { v : d(u, v) <= r }, sorted.
    pub fn ball(&self, u: &[Vertex], r: u32) -> Result<Vec<Vertex>> {
        if u.is_empty() {
            return Err(GraphError::EmptySet);
        }
        self.check_set(u)?;
        let dist = self.bfs(u, r);
        Ok((0..self.adj.len() as Vertex)
            .filter(|&v| matches!(dist[v as usize], Dist::Finite(d) if d <= r))
            .collect())
    }

    /// min over pairs (a, b); Finite(0) iff the sets intersect.
    pub fn set_distance(&self, a: &[Vertex], b: &[Vertex]) -> Result<Dist> {
        if a.is_empty() || b.is_empty() {
            return Err(GraphError::EmptySet);
        }
        self.check_set(a)?;
        self.check_set(b)?;
        let mut in_b = vec![false; self.adj.len()];
        for &v in b {
            in_b[v as usize] = true;
        }
        // BFS from a, stop at the first vertex of b.
        let mut dist = vec![Dist::Infinite; self.adj.len()];
        let mut queue = VecDeque::new();
        for &s in a {
            if in_b[s as usize] {
                return Ok(Dist::Finite(0));
            }
            if dist[s as usize] == Dist::Infinite {
                dist[s as usize] = Dist::Finite(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize].finite().unwrap();
            for &v in &self.adj[u as usize] {
                if dist[v as usize] == Dist::Infinite {
                    if in_b[v as usize] {
                        return Ok(Dist::Finite(du + 1));
                    }
                    dist[v as usize] = Dist::Finite(du + 1);
                    queue.push_back(v);
                }
            }
        }
        Ok(Dist::Infinite)
    }

    /// min over centers v in V of max over x in u of d(v, x).
    pub fn radius_of_set(&self, u: &[Vertex]) -> Result<Dist> {
        if u.is_empty() {
            return Err(GraphError::EmptySet);
        }
        self.check_set(u)?;
        // Eccentricity wrt u per candidate center, one BFS per element of u.
        let mut ecc = vec![Dist::Finite(0); self.adj.len()];
        for &x in u {
            let dist = self.bfs(&[x], u32::MAX);
            for v in 0..self.adj.len() {
                ecc[v] = ecc[v].max(dist[v]);
            }
        }
        Ok(ecc.into_iter().min().unwrap_or(Dist::Infinite))
    }

    /// Is the induced subgraph g[u] connected? Singletons are connected.
    pub fn is_connected(&self, u: &[Vertex]) -> Result<bool> {
        if u.is_empty() {
            return Err(GraphError::EmptySet);
        }
        self.check_set(u)?;
        let mut in_u = vec![false; self.adj.len()];
        for &v in u {
            in_u[v as usize] = true;
        }
        let mut seen = vec![false; self.adj.len()];
        let mut queue = VecDeque::new();
        seen[u[0] as usize] = true;
        queue.push_back(u[0]);
        let mut count = 1usize;
        while let Some(w) = queue.pop_front() {
            for &v in &self.adj[w as usize] {
                if in_u[v as usize] && !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        let distinct = u.iter().collect::<std::collections::BTreeSet<_>>().len();
        Ok(count == distinct)
    }

    /// Whole-graph connectivity (false for the empty graph with n = 0).
    pub fn connected(&self) -> bool {
        if self.adj.is_empty() {
            return false;
        }
        let all: Vec<Vertex> = self.vertices().collect();
        self.is_connected(&all).unwrap()
    }

    /// True iff every y-z path meets x, i.e. y and z fall apart in g - x.
    /// A vertex shared by y and z outside x counts as a (trivial) path.
    pub fn separates(&self, x: &[Vertex], y: &[Vertex], z: &[Vertex]) -> Result<bool> {
        self.check_set(x)?;
        self.check_set(y)?;
        self.check_set(z)?;
        let mut blocked = vec![false; self.adj.len()];
        for &v in x {
            blocked[v as usize] = true;
        }
        let mut in_z = vec![false; self.adj.len()];
        for &v in z {
            if !blocked[v as usize] {
                in_z[v as usize] = true;
            }
        }
        let mut seen = vec![false; self.adj.len()];
        let mut queue = VecDeque::new();
        for &s in y {
            if !blocked[s as usize] && !seen[s as usize] {
                if in_z[s as usize] {
                    return Ok(false);
                }
                seen[s as usize] = true;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u as usize] {
                if !blocked[v as usize] && !seen[v as usize] {
                    if in_z[v as usize] {
                        return Ok(false);
                    }
                    seen[v as usize] = true;
                    queue.push_back(v);
                }
            }
        }
        Ok(true)
    }

    /// All s-t paths meeting s only in the first vertex and t only in the
    /// last, in lexicographic order, truncated at `cap`.
    pub fn enumerate_paths(&self, s: &[Vertex], t: &[Vertex], cap: usize) -> Result<PathEnumeration> {
        if cap == 0 {
            return Err(GraphError::ZeroCap);
        }
        if s.is_empty() || t.is_empty() {
            return Err(GraphError::EmptySet);
        }
        self.check_set(s)?;
        self.check_set(t)?;
        let mut in_s = vec![false; self.adj.len()];
        let mut in_t = vec![false; self.adj.len()];
        for &v in s {
            in_s[v as usize] = true;
        }
        for &v in t {
            if in_s[v as usize] {
                return Err(GraphError::SetsOverlap);
            }
            in_t[v as usize] = true;
        }
        let mut starts: Vec<Vertex> = s.to_vec();
        starts.sort_unstable();
        starts.dedup();
        let mut state = PathDfs {
            g: self,
            in_s: &in_s,
            in_t: &in_t,
            on_path: vec![false; self.adj.len()],
            current: Vec::new(),
            paths: Vec::new(),
            cap,
            overflow: false,
        };
        for &v in &starts {
            if state.overflow {
                break;
            }
            state.visit(v);
        }
        Ok(PathEnumeration {
            paths: state.paths,
            overflow: state.overflow,
        })
    }

    /// Induced subgraph on `verts` (sorted, deduped); returns the subgraph and
    /// the new-id -> old-id table. Labels carry over.
    pub fn induced(&self, verts: &[Vertex]) -> Result<(Graph, Vec<Vertex>)> {
        self.check_set(verts)?;
        let mut old: Vec<Vertex> = verts.to_vec();
        old.sort_unstable();
        old.dedup();
        let mut new_of = BTreeMap::new();
        for (i, &v) in old.iter().enumerate() {
            new_of.insert(v, i as Vertex);
        }
        let mut g = Graph::new(old.len());
        for (i, &v) in old.iter().enumerate() {
            for &w in &self.adj[v as usize] {
                if let Some(&j) = new_of.get(&w) {
                    if (i as Vertex) < j {
                        g.add_edge(i as Vertex, j).unwrap();
                    }
                }
            }
            if let Some(l) = self.labels.get(&v) {
                g.set_label(i as Vertex, l.clone());
            }
        }
        Ok((g, old))
    }
}

struct PathDfs<'a> {
    g: &'a Graph,
    in_s: &'a [bool],
    in_t: &'a [bool],
    on_path: Vec<bool>,
    current: Vec<Vertex>,
    paths: Vec<Path>,
    cap: usize,
    overflow: bool,
}

impl PathDfs<'_> {
    fn visit(&mut self, v: Vertex) {
        if self.overflow {
            return;
        }
        self.current.push(v);
        self.on_path[v as usize] = true;
        if self.in_t[v as usize] {
            // t reached; by construction internal vertices avoid s and t.
            if self.paths.len() == self.cap {
                self.overflow = true;
            } else {
                self.paths.push(Path {
                    vertices: self.current.clone(),
                });
            }
        } else {
            let neighbors = self.g.adj[v as usize].clone();
            for w in neighbors {
                if self.overflow {
                    break;
                }
                // Internal vertices may not revisit or re-enter s.
                if !self.on_path[w as usize] && !self.in_s[w as usize] {
                    self.visit(w);
                }
            }
        }
        self.on_path[v as usize] = false;
        self.current.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathEnumeration {
    pub paths: Vec<Path>,
    pub overflow: bool,
}

/// Nonempty, consecutive vertices adjacent, no repeats.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    vertices: Vec<Vertex>,
}

impl Path {
    pub fn new(g: &Graph, vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(GraphError::InvalidPath("empty vertex sequence".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for &v in &vertices {
            g.check_vertex(v)?;
            if !seen.insert(v) {
                return Err(GraphError::InvalidPath(format!("repeated vertex {v}")));
            }
        }
        for w in vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(GraphError::InvalidPath(format!(
                    "consecutive vertices {} and {} are not adjacent",
                    w[0], w[1]
                )));
            }
        }
        Ok(Path { vertices })
    }

    /// Caller guarantees the path invariants (used by generators whose output
    /// is validated wholesale afterwards).
    pub fn from_vertices_unchecked(vertices: Vec<Vertex>) -> Self {
        Path { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false // nonempty by construction
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Path { vertices }
    }

    pub fn interior(&self) -> &[Vertex] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }
}

/// A separation: two sides covering V(G) with no edge between the strict sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub side_a: Vec<Vertex>,
    pub side_b: Vec<Vertex>,
}

impl Separation {
    /// Order of the separation: |A intersect B|.
    pub fn order(&self) -> usize {
        self.separator().len()
    }

    pub fn separator(&self) -> Vec<Vertex> {
        let b: std::collections::BTreeSet<_> = self.side_b.iter().copied().collect();
        let mut sep: Vec<Vertex> = self.side_a.iter().copied().filter(|v| b.contains(v)).collect();
        sep.sort_unstable();
        sep.dedup();
        sep
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut side = vec![0u8; g.n()]; // bit 0: in A, bit 1: in B
        for &v in &self.side_a {
            g.check_vertex(v)?;
            side[v as usize] |= 1;
        }
        for &v in &self.side_b {
            g.check_vertex(v)?;
            side[v as usize] |= 2;
        }
        if let Some(v) = side.iter().position(|&s| s == 0) {
            return Err(GraphError::InvalidSeparation(format!(
                "vertex {v} lies on neither side"
            )));
        }
        for (u, v) in g.edges() {
            if side[u as usize] == 1 && side[v as usize] == 2
                || side[u as usize] == 2 && side[v as usize] == 1
            {
                return Err(GraphError::InvalidSeparation(format!(
                    "edge {u}-{v} crosses the separation"
                )));
            }
        }
        Ok(())
    }
}

/// Sorted union of two vertex sets.
pub fn union(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = a.iter().chain(b.iter()).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Sorted a minus b.
pub fn difference(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let bs: std::collections::BTreeSet<_> = b.iter().copied().collect();
    let mut out: Vec<Vertex> = a.iter().copied().filter(|v| !bs.contains(v)).collect();
    out.sort_unstable();
    out.dedup();
    out
}
