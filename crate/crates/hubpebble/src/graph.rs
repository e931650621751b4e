//! Small simple connected graphs over bitset adjacency, with the built-in
//! families (path, star, book, cycle), edge-list parsing, BFS distances,
//! and exhaustive automorphism enumeration.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard cap on vertex count; everything here is desk-scale exhaustive search
/// and the bitsets are 32 bits wide.
pub const MAX_VERTICES: usize = 32;

/// A subset of the vertices of an ambient graph, packed into a `u32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet {
    bits: u32,
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { bits: 0 };

    pub fn from_bits(bits: u32) -> Self {
        VertexSet { bits }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }

    /// The full vertex set {0, .., n-1}.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 32 {
            VertexSet { bits: u32::MAX }
        } else {
            VertexSet {
                bits: (1u32 << n) - 1,
            }
        }
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn contains(self, v: usize) -> bool {
        self.bits & (1 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.bits |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.bits &= !(1 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet {
            bits: self.bits | (1 << v),
        }
    }

    pub fn card(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet {
            bits: self.bits | other.bits,
        }
    }

    pub fn intersect(self, other: VertexSet) -> Self {
        VertexSet {
            bits: self.bits & other.bits,
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
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

    /// Image of this set under a vertex permutation `perm` (perm[i] = image of i).
    pub fn apply_perm(self, perm: &[usize]) -> Self {
        VertexSet::from_iter(self.iter().map(|v| perm[v]))
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let indices: Vec<usize> = Vec::deserialize(de)?;
        for &v in &indices {
            if v >= MAX_VERTICES {
                return Err(serde::de::Error::custom(format!(
                    "vertex index {v} out of range"
                )));
            }
        }
        Ok(VertexSet::from_iter(indices))
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

/// Which built-in family a graph was generated from, with its parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyTag {
    Path(usize),
    Star(usize),
    Book(usize),
    Cycle(usize),
    Custom,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::Path(n) => write!(f, "path:{n}"),
            FamilyTag::Star(n) => write!(f, "star:{n}"),
            FamilyTag::Book(n) => write!(f, "book:{n}"),
            FamilyTag::Cycle(n) => write!(f, "cycle:{n}"),
            FamilyTag::Custom => write!(f, "custom"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count must be between 1 and {MAX_VERTICES}, got {0}")]
    BadVertexCount(usize),
    #[error("family parameter out of range: {0}")]
    BadFamilyParameter(String),
    #[error("line {line}: malformed edge line: {text:?}")]
    MalformedLine { line: usize, text: String },
    #[error("line {line}: vertex index {index} out of range (n = {n})")]
    IndexOutOfRange { line: usize, index: usize, n: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("missing vertex count line")]
    MissingHeader,
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
}

/// A simple connected undirected graph on at most [`MAX_VERTICES`] vertices.
///
/// Immutable after construction; cheap to clone and safe to share across
/// threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adjacency: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    family_tag: FamilyTag,
}

impl Graph {
    /// Builds a graph from an edge list, validating simplicity and
    /// connectivity. Edges are normalized to (min, max) order.
    pub fn from_edges(
        n: usize,
        edges: &[(usize, usize)],
        family_tag: FamilyTag,
    ) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadVertexCount(n));
        }
        let mut adjacency = vec![VertexSet::EMPTY; n];
        let mut norm_edges = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            let line = norm_edges.len() + 2; // header is line 1 in file form
            if u >= n {
                return Err(GraphError::IndexOutOfRange { line, index: u, n });
            }
            if v >= n {
                return Err(GraphError::IndexOutOfRange { line, index: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { line, vertex: u });
            }
            let (a, b) = (u.min(v), u.max(v));
            if adjacency[a].contains(b) {
                return Err(GraphError::DuplicateEdge { line, u: a, v: b });
            }
            adjacency[a].insert(b);
            adjacency[b].insert(a);
            norm_edges.push((a, b));
        }
        let g = Graph {
            n,
            adjacency,
            edges: norm_edges,
            family_tag,
        };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn family_tag(&self) -> FamilyTag {
        self.family_tag
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].card()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    fn is_connected(&self) -> bool {
        self.component_of(0, VertexSet::full(self.n)).card() == self.n
    }

    /// Vertices reachable from `start` inside the induced subgraph on `allowed`.
    /// `start` must be in `allowed`.
    pub fn component_of(&self, start: usize, allowed: VertexSet) -> VertexSet {
        debug_assert!(allowed.contains(start));
        let mut seen = VertexSet::EMPTY.with(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adjacency[v].intersect(allowed));
            }
            next = VertexSet::from_bits(next.bits() & !seen.bits());
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// BFS distances from `source`.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[source] = 0;
        let mut frontier = VertexSet::EMPTY.with(source);
        let mut seen = frontier;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adjacency[v]);
            }
            next = VertexSet::from_bits(next.bits() & !seen.bits());
            for v in next.iter() {
                dist[v] = d;
            }
            seen = seen.union(next);
            frontier = next;
        }
        dist
    }

    /// All-pairs distance matrix.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.distances_from(v)).collect()
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() == self.n - 1
    }

    /// The full automorphism group, by backtracking over degree-compatible
    /// vertex images. Intended for n up to ~16; the identity is always first.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut out = Vec::new();
        let mut image = vec![usize::MAX; self.n];
        let mut used = VertexSet::EMPTY;
        self.automorphism_search(0, &degrees, &mut image, &mut used, &mut out);
        // Backtracking emits the identity first because candidates are tried
        // in ascending order, but sort for a stable contract anyway.
        out.sort();
        out
    }

    fn automorphism_search(
        &self,
        v: usize,
        degrees: &[usize],
        image: &mut Vec<usize>,
        used: &mut VertexSet,
        out: &mut Vec<Vec<usize>>,
    ) {
        if v == self.n {
            out.push(image.clone());
            return;
        }
        for w in 0..self.n {
            if used.contains(w) || degrees[w] != degrees[v] {
                continue;
            }
            // Adjacency with all previously mapped vertices must be preserved.
            let ok = (0..v).all(|u| self.has_edge(u, v) == self.has_edge(image[u], w));
            if !ok {
                continue;
            }
            image[v] = w;
            used.insert(w);
            self.automorphism_search(v + 1, degrees, image, used, out);
            used.remove(w);
            image[v] = usize::MAX;
        }
    }

    /// Serializes to the plain edge-list text format accepted by
    /// [`parse_graph`].
    pub fn render(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// The path P_n with vertices v_1..v_n mapped to indices 0..n-1.
pub fn make_path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::BadFamilyParameter(format!(
            "path requires n >= 1, got {n}"
        )));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges, FamilyTag::Path(n))
}

/// The star S_n: center at index 0, leaves at 1..=n.
pub fn make_star(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::BadFamilyParameter(format!(
            "star requires n >= 2, got {n}"
        )));
    }
    let edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    Graph::from_edges(n + 1, &edges, FamilyTag::Star(n))
}

/// The book B_n: two stars with centers a (index 0) and b (index 1),
/// pages u_i at 1+i and v_i at n+1+i, with {a,b} and the matching {u_i,v_i}.
pub fn make_book(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::BadFamilyParameter(format!(
            "book requires n >= 2, got {n}"
        )));
    }
    let mut edges = vec![(0, 1)];
    for i in 1..=n {
        edges.push((0, 1 + i)); // a - u_i
        edges.push((1, n + 1 + i)); // b - v_i
        edges.push((1 + i, n + 1 + i)); // u_i - v_i
    }
    Graph::from_edges(2 * n + 2, &edges, FamilyTag::Book(n))
}

/// The cycle C_n with v_i at index i-1 and edges (i, i+1 mod n).
pub fn make_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadFamilyParameter(format!(
            "cycle requires n >= 3, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges, FamilyTag::Cycle(n))
}

/// Parses the plain edge-list format: first nonblank line is the vertex
/// count, each following nonblank line is "u v", and '#' starts a comment.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut adjacency: Vec<VertexSet> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        match n {
            None => {
                let count: usize =
                    content.parse().map_err(|_| GraphError::MalformedLine {
                        line,
                        text: raw.to_string(),
                    })?;
                if count == 0 || count > MAX_VERTICES {
                    return Err(GraphError::BadVertexCount(count));
                }
                adjacency = vec![VertexSet::EMPTY; count];
                n = Some(count);
            }
            Some(count) => {
                let mut parts = content.split_whitespace();
                let (u, v) = match (parts.next(), parts.next(), parts.next()) {
                    (Some(a), Some(b), None) => {
                        let u = a.parse().map_err(|_| GraphError::MalformedLine {
                            line,
                            text: raw.to_string(),
                        })?;
                        let v = b.parse().map_err(|_| GraphError::MalformedLine {
                            line,
                            text: raw.to_string(),
                        })?;
                        (u, v)
                    }
                    _ => {
                        return Err(GraphError::MalformedLine {
                            line,
                            text: raw.to_string(),
                        })
                    }
                };
                if u >= count {
                    return Err(GraphError::IndexOutOfRange {
                        line,
                        index: u,
                        n: count,
                    });
                }
                if v >= count {
                    return Err(GraphError::IndexOutOfRange {
                        line,
                        index: v,
                        n: count,
                    });
                }
                if u == v {
                    return Err(GraphError::SelfLoop { line, vertex: u });
                }
                let (a, b) = (u.min(v), u.max(v));
                if adjacency[a].contains(b) {
                    return Err(GraphError::DuplicateEdge { line, u: a, v: b });
                }
                adjacency[a].insert(b);
                adjacency[b].insert(a);
                edges.push((a, b));
            }
        }
    }
    let n = n.ok_or(GraphError::MissingHeader)?;
    Graph::from_edges(n, &edges, FamilyTag::Custom)
}

/// Resolves a family-style vertex label (`v3`, `u1`, `a`, `b`) or a bare
/// index against the graph's family labeling.
pub fn label_to_index(g: &Graph, label: &str) -> Result<usize, GraphError> {
    let label = label.trim();
    if let Ok(idx) = label.parse::<usize>() {
        if idx < g.n() {
            return Ok(idx);
        }
        return Err(GraphError::UnknownLabel(label.to_string()));
    }
    let err = || GraphError::UnknownLabel(label.to_string());
    let numbered = |l: &str, prefix: char| -> Option<usize> {
        l.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok())
    };
    let idx = match g.family_tag() {
        FamilyTag::Path(n) | FamilyTag::Cycle(n) => match numbered(label, 'v') {
            Some(i) if (1..=n).contains(&i) => i - 1,
            _ => return Err(err()),
        },
        FamilyTag::Star(n) => match label {
            "center" | "c" => 0,
            _ => match numbered(label, 'v').or_else(|| numbered(label, 'u')) {
                // leaves are u_1..u_n or v_1..v_n interchangeably
                Some(i) if (1..=n).contains(&i) => i,
                _ => return Err(err()),
            },
        },
        FamilyTag::Book(n) => match label {
            "a" => 0,
            "b" => 1,
            _ => match (numbered(label, 'u'), numbered(label, 'v')) {
                (Some(i), _) if (1..=n).contains(&i) => 1 + i,
                (_, Some(i)) if (1..=n).contains(&i) => n + 1 + i,
                _ => return Err(err()),
            },
        },
        FamilyTag::Custom => return Err(err()),
    };
    Ok(idx)
}

/// The display label of a vertex index under the graph's family labeling.
pub fn index_to_label(g: &Graph, idx: usize) -> String {
    match g.family_tag() {
        FamilyTag::Path(_) | FamilyTag::Cycle(_) => format!("v{}", idx + 1),
        FamilyTag::Star(_) => {
            if idx == 0 {
                "center".to_string()
            } else {
                format!("u{idx}")
            }
        }
        FamilyTag::Book(n) => match idx {
            0 => "a".to_string(),
            1 => "b".to_string(),
            i if i <= n + 1 => format!("u{}", i - 1),
            i => format!("v{}", i - n - 1),
        },
        FamilyTag::Custom => idx.to_string(),
    }
}

/// Parses a graph descriptor: `path:N`, `star:N`, `book:N`, `cycle:N`, or
/// raw edge-list text.
pub fn parse_descriptor(desc: &str) -> Result<Graph, GraphError> {
    if let Some((family, param)) = desc.split_once(':') {
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| GraphError::BadFamilyParameter(format!("{desc:?}")))
        };
        return match family.trim() {
            "path" => make_path(parse(param)?),
            "star" => make_star(parse(param)?),
            "book" => make_book(parse(param)?),
            "cycle" => make_cycle(parse(param)?),
            _ => Err(GraphError::BadFamilyParameter(format!("{desc:?}"))),
        };
    }
    parse_graph(desc)
}
