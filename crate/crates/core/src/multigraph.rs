//! Loopless multigraphs without isolated vertices, up to isomorphism.
//!
//! A [`Multigraph`] always stores its canonical representative: isolated
//! vertices are dropped, the remaining vertices are relabeled `0..|V|`, and
//! the labeling is the one maximizing the adjacency encoding among all
//! labelings compatible with a degree refinement. Two values compare equal
//! exactly when the underlying multigraphs are isomorphic.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use crate::combinatorics::set_partitions;
use crate::error::{Error, Result};

/// Canonical isomorphism-class representative of a loopless multigraph
/// with no isolated vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multigraph {
    vertex_count: usize,
    canonical: Vec<u8>,
    /// Edges of the canonical labeling as `(u, v, multiplicity)`, `u < v`, sorted.
    edges: Vec<(usize, usize, u32)>,
}

/// A set partition of the vertices of a multigraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// Builds a partition from a block label per element.
    pub fn from_labels(labels: &[usize]) -> Self {
        let count = labels.iter().map(|&b| b + 1).max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); count];
        for (v, &b) in labels.iter().enumerate() {
            blocks[b].push(v);
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        VertexPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }
}

impl Multigraph {
    /// The multigraph with no vertices and no edges.
    pub fn empty() -> Self {
        Multigraph {
            vertex_count: 0,
            canonical: encode(0, &[]),
            edges: Vec::new(),
        }
    }

    /// Canonicalizes a raw edge multiset on vertices `0..vertex_count`.
    ///
    /// Repeated pairs accumulate multiplicity. Isolated vertices are dropped.
    pub fn canonicalize(vertex_count: usize, raw_edges: &[(usize, usize, u32)]) -> Result<Self> {
        let mut merged: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for &(u, v, m) in raw_edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w + 1,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u + 1 });
            }
            if m == 0 {
                return Err(Error::ZeroMultiplicity { u: u + 1, v: v + 1 });
            }
            *merged.entry((u.min(v), u.max(v))).or_insert(0) += m;
        }

        // Drop isolated vertices, keeping relative order.
        let mut used = vec![false; vertex_count];
        for &(u, v) in merged.keys() {
            used[u] = true;
            used[v] = true;
        }
        let mut relabel = vec![usize::MAX; vertex_count];
        let mut n = 0;
        for v in 0..vertex_count {
            if used[v] {
                relabel[v] = n;
                n += 1;
            }
        }
        let mut adjacency = vec![vec![0u32; n]; n];
        for (&(u, v), &m) in &merged {
            let (a, b) = (relabel[u], relabel[v]);
            adjacency[a][b] = m;
            adjacency[b][a] = m;
        }
        Ok(Self::from_adjacency(adjacency))
    }

    /// Convenience constructor from a list of simple pairs; repeated pairs
    /// become multi-edges.
    pub fn from_pairs(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let raw: Vec<_> = pairs.iter().map(|&(u, v)| (u, v, 1)).collect();
        Self::canonicalize(vertex_count, &raw)
    }

    fn from_adjacency(adjacency: Vec<Vec<u32>>) -> Self {
        let n = adjacency.len();
        let order = best_labeling(&adjacency);
        // order[p] = original vertex placed at canonical position p
        let mut edges = Vec::new();
        let mut entries = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for j in 1..n {
            for i in 0..j {
                let m = adjacency[order[i]][order[j]];
                entries.push(m);
                if m > 0 {
                    edges.push((i, j, m));
                }
            }
        }
        edges.sort_unstable();
        Multigraph {
            vertex_count: n,
            canonical: encode(n, &entries),
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u32 {
        self.edges.iter().map(|e| e.2).sum()
    }

    /// Edges of the canonical labeling as `(u, v, multiplicity)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize, u32)] {
        &self.edges
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        let key = (u.min(v), u.max(v));
        self.edges
            .iter()
            .find(|e| (e.0, e.1) == key)
            .map_or(0, |e| e.2)
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count == 0
    }

    pub fn is_simple(&self) -> bool {
        self.edges.iter().all(|e| e.2 == 1)
    }

    pub fn canonical_form(&self) -> &[u8] {
        &self.canonical
    }

    /// Canonical form as lowercase hex.
    pub fn canonical_hex(&self) -> String {
        self.canonical.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![vec![0u32; self.vertex_count]; self.vertex_count];
        for &(u, v, m) in &self.edges {
            adj[u][v] = m;
            adj[v][u] = m;
        }
        adj
    }

    /// Number of vertex bijections preserving every edge multiplicity.
    pub fn automorphism_count(&self) -> u64 {
        let adj = self.adjacency();
        let n = self.vertex_count;
        let mut image = Vec::with_capacity(n);
        let mut used = vec![false; n];
        count_automorphisms(&adj, &mut image, &mut used)
    }

    /// All vertex partitions with no block containing two adjacent
    /// vertices, paired with the quotient multigraph (merged pairs add
    /// their multiplicities).
    pub fn loopless_quotients(&self) -> Vec<(VertexPartition, Multigraph)> {
        let mut out = Vec::new();
        for labels in set_partitions(self.vertex_count) {
            let independent = self.edges.iter().all(|&(u, v, _)| labels[u] != labels[v]);
            if !independent {
                continue;
            }
            let blocks = labels.iter().map(|&b| b + 1).max().unwrap_or(0);
            let raw: Vec<_> = self
                .edges
                .iter()
                .map(|&(u, v, m)| (labels[u], labels[v], m))
                .collect();
            let quotient =
                Self::canonicalize(blocks, &raw).expect("independent blocks never create loops");
            debug_assert_eq!(quotient.vertex_count, blocks);
            out.push((VertexPartition::from_labels(&labels), quotient));
        }
        out
    }

    /// Collapses every multi-edge to a single edge.
    pub fn collapse_simple(&self) -> Multigraph {
        let raw: Vec<_> = self.edges.iter().map(|&(u, v, _)| (u, v, 1)).collect();
        Self::canonicalize(self.vertex_count, &raw).expect("canonical edges are valid")
    }

    /// Disjoint union `self ⊔ other`.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let shift = self.vertex_count;
        let raw: Vec<_> = self
            .edges
            .iter()
            .copied()
            .chain(
                other
                    .edges
                    .iter()
                    .map(|&(u, v, m)| (u + shift, v + shift, m)),
            )
            .collect();
        Self::canonicalize(shift + other.vertex_count, &raw).expect("union of valid edges")
    }

    /// Text form: `V E` followed by `E` lines `u v m` with 1-based endpoints.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count, self.edges.len());
        for &(u, v, m) in &self.edges {
            out.push_str(&format!("{} {} {}\n", u + 1, v + 1, m));
        }
        out
    }

    /// Parses the text form. Blank lines and `#` comments are ignored.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing `V E` header".into(),
        })?;
        let header = parse_numbers(header_line, header, 2)?;
        let (vertex_count, edge_lines) = (header[0], header[1]);
        let mut raw = Vec::with_capacity(edge_lines);
        for _ in 0..edge_lines {
            let (line, content) = lines.next().ok_or(Error::Parse {
                line: header_line,
                message: format!("expected {edge_lines} edge lines"),
            })?;
            let nums = parse_numbers(line, content, 3)?;
            let (u, v) = (nums[0], nums[1]);
            if u == 0 || v == 0 {
                return Err(Error::Parse {
                    line,
                    message: "vertices are 1-based".into(),
                });
            }
            let m = u32::try_from(nums[2]).map_err(|_| Error::Parse {
                line,
                message: "multiplicity too large".into(),
            })?;
            raw.push((u - 1, v - 1, m));
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse {
                line,
                message: "unexpected trailing content".into(),
            });
        }
        Self::canonicalize(vertex_count, &raw)
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(v={}, [", self.vertex_count)?;
        for (k, &(u, v, m)) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            if m == 1 {
                write!(f, "{}-{}", u + 1, v + 1)?;
            } else {
                write!(f, "{}-{}x{}", u + 1, v + 1, m)?;
            }
        }
        write!(f, "])")
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn parse_numbers(line: usize, content: &str, expected: usize) -> Result<Vec<usize>> {
    let nums: Vec<usize> = content
        .split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("`{tok}` is not a nonnegative integer"),
            })
        })
        .collect::<Result<_>>()?;
    if nums.len() != expected {
        return Err(Error::Parse {
            line,
            message: format!("expected {expected} integers, found {}", nums.len()),
        });
    }
    Ok(nums)
}

/// LEB128 encoding of the vertex count followed by the adjacency entries.
fn encode(n: usize, entries: &[u32]) -> Vec<u8> {
    let mut out = Vec::new();
    push_varint(&mut out, n as u64);
    for &m in entries {
        push_varint(&mut out, m as u64);
    }
    out
}

fn push_varint(out: &mut Vec<u8>, mut value: u64) {
    loop {
        let byte = (value & 0x7f) as u8;
        value >>= 7;
        if value == 0 {
            out.push(byte);
            return;
        }
        out.push(byte | 0x80);
    }
}

/// Labeling maximizing the adjacency vector read in the order
/// `(0,1), (0,2), (1,2), (0,3), ...`, restricted to labelings that place
/// vertices in decreasing order of a degree invariant.
fn best_labeling(adjacency: &[Vec<u32>]) -> Vec<usize> {
    let n = adjacency.len();
    if n == 0 {
        return Vec::new();
    }
    let invariant: Vec<(u32, Vec<u32>)> = adjacency
        .iter()
        .map(|row| {
            let mut mults: Vec<u32> = row.iter().copied().filter(|&m| m > 0).collect();
            mults.sort_unstable_by(|a, b| b.cmp(a));
            (row.iter().sum(), mults)
        })
        .collect();
    let mut sorted: Vec<usize> = (0..n).collect();
    sorted.sort_by(|&a, &b| invariant[b].cmp(&invariant[a]));
    // class_of_position[p] = invariant required at position p
    let class_of_position: Vec<&(u32, Vec<u32>)> = sorted.iter().map(|&v| &invariant[v]).collect();

    let mut search = LabelSearch {
        adjacency,
        invariant: &invariant,
        class_of_position: &class_of_position,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        vector: Vec::new(),
        best_vector: None,
        best_order: Vec::new(),
    };
    search.run();
    search.best_order
}

struct LabelSearch<'a> {
    adjacency: &'a [Vec<u32>],
    invariant: &'a [(u32, Vec<u32>)],
    class_of_position: &'a [&'a (u32, Vec<u32>)],
    order: Vec<usize>,
    used: Vec<bool>,
    vector: Vec<u32>,
    best_vector: Option<Vec<u32>>,
    best_order: Vec<usize>,
}

impl LabelSearch<'_> {
    fn run(&mut self) {
        let n = self.adjacency.len();
        let p = self.order.len();
        if p == n {
            let better = match &self.best_vector {
                None => true,
                Some(best) => self.vector > *best,
            };
            if better {
                self.best_vector = Some(self.vector.clone());
                self.best_order = self.order.clone();
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.invariant[v] != *self.class_of_position[p] {
                continue;
            }
            let mark = self.vector.len();
            for i in 0..p {
                self.vector.push(self.adjacency[self.order[i]][v]);
            }
            let prune = match &self.best_vector {
                Some(best) => self.vector[..] < best[..self.vector.len()],
                None => false,
            };
            if !prune {
                self.used[v] = true;
                self.order.push(v);
                self.run();
                self.order.pop();
                self.used[v] = false;
            }
            self.vector.truncate(mark);
        }
    }
}

fn count_automorphisms(adj: &[Vec<u32>], image: &mut Vec<usize>, used: &mut [bool]) -> u64 {
    let n = adj.len();
    let p = image.len();
    if p == n {
        return 1;
    }
    let mut total = 0;
    for w in 0..n {
        if used[w] {
            continue;
        }
        let consistent = (0..p).all(|i| adj[i][p] == adj[image[i]][w]);
        if consistent {
            used[w] = true;
            image.push(w);
            total += count_automorphisms(adj, image, used);
            image.pop();
            used[w] = false;
        }
    }
    total
}

/// The isomorphism classes with exactly `edge_count` edges, optionally
/// restricted to at most `max_vertices` vertices, sorted by vertex count
/// and then canonical form.
pub fn enumerate(edge_count: u32, max_vertices: Option<usize>) -> Vec<Multigraph> {
    let mut level: BTreeSet<Multigraph> = BTreeSet::from([Multigraph::empty()]);
    for _ in 0..edge_count {
        let mut next = BTreeSet::new();
        for graph in &level {
            let v = graph.vertex_count;
            let base: Vec<_> = graph.edges.to_vec();
            let mut candidates = Vec::new();
            for j in 0..v {
                for i in 0..j {
                    candidates.push((i, j));
                }
            }
            for i in 0..v {
                candidates.push((i, v));
            }
            candidates.push((v, v + 1));
            for (a, b) in candidates {
                let mut raw = base.clone();
                raw.push((a, b, 1));
                let grown = Multigraph::canonicalize(v + 2, &raw).expect("valid extension");
                next.insert(grown);
            }
        }
        level = next;
    }
    level
        .into_iter()
        .filter(|g| max_vertices.is_none_or(|cap| g.vertex_count <= cap))
        .collect()
}

/// All classes with at most `max_edges` edges, grouped by edge count.
pub fn enumerate_up_to(max_edges: u32) -> Vec<Multigraph> {
    (0..=max_edges).flat_map(|d| enumerate(d, None)).collect()
}

/// `enumerate_up_to` re-sorted by vertex count (stable within equal counts),
/// the order in which the t / t^inj transform is unit lower triangular.
pub fn basis_up_to(max_edges: u32) -> Vec<Multigraph> {
    let mut basis = enumerate_up_to(max_edges);
    basis.sort_by_key(|g| g.vertex_count);
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{factorial, permutations};

    fn path2() -> Multigraph {
        Multigraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn relabels_and_drops_isolated() {
        let g = Multigraph::canonicalize(6, &[(1, 4, 1)]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), &[(0, 1, 1)]);
    }

    #[test]
    fn isomorphic_paths_agree() {
        let a = Multigraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Multigraph::from_pairs(3, &[(0, 2), (2, 1)]).unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_eq!(a, b);
    }

    #[test]
    fn double_edge_differs_from_single() {
        let single = Multigraph::from_pairs(2, &[(0, 1)]).unwrap();
        let double = Multigraph::canonicalize(2, &[(0, 1, 2)]).unwrap();
        assert_ne!(single.canonical_form(), double.canonical_form());
        // brute force: no bijection of {0,1} maps multiplicity 2 onto 1
        for perm in permutations(2) {
            assert_ne!(
                double.multiplicity(perm[0], perm[1]),
                single.multiplicity(0, 1)
            );
        }
    }

    #[test]
    fn rejects_loops_and_bad_vertices() {
        assert_eq!(
            Multigraph::canonicalize(3, &[(1, 1, 1)]),
            Err(Error::SelfLoop { vertex: 2 })
        );
        assert!(matches!(
            Multigraph::canonicalize(2, &[(0, 2, 1)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            Multigraph::canonicalize(2, &[(0, 1, 0)]),
            Err(Error::ZeroMultiplicity { .. })
        ));
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate(0, None), vec![Multigraph::empty()]);
        assert_eq!(enumerate(1, None).len(), 1);
        let two = enumerate(2, None);
        assert_eq!(two.len(), 3);
        assert!(two.contains(&Multigraph::canonicalize(2, &[(0, 1, 2)]).unwrap()));
        assert!(two.contains(&path2()));
        assert!(two.contains(&Multigraph::from_pairs(4, &[(0, 1), (2, 3)]).unwrap()));
        assert_eq!(enumerate_up_to(0).len(), 1);
        assert_eq!(enumerate_up_to(1).len(), 2);
        assert_eq!(enumerate_up_to(2).len(), 5);
        assert_eq!(enumerate(3, None).len(), 8);
    }

    #[test]
    fn enumeration_is_sorted() {
        let three = enumerate(3, None);
        for pair in three.windows(2) {
            assert!(pair[0].vertex_count() <= pair[1].vertex_count());
            assert!(pair[0] < pair[1]);
        }
        let basis = basis_up_to(3);
        for pair in basis.windows(2) {
            assert!(pair[0].vertex_count() <= pair[1].vertex_count());
        }
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(
            Multigraph::from_pairs(2, &[(0, 1)])
                .unwrap()
                .automorphism_count(),
            2
        );
        let triangle = Multigraph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(triangle.automorphism_count(), 6);
        assert_eq!(path2().automorphism_count(), 2);
        assert_eq!(Multigraph::empty().automorphism_count(), 1);
    }

    #[test]
    fn automorphism_count_matches_brute_force() {
        for g in enumerate_up_to(4) {
            let adj = g.adjacency();
            let n = g.vertex_count();
            let brute = permutations(n)
                .filter(|p| (0..n).all(|i| (0..n).all(|j| adj[i][j] == adj[p[i]][p[j]])))
                .count() as u64;
            assert_eq!(g.automorphism_count(), brute, "{g:?}");
            assert_eq!(factorial(n) % brute, 0);
        }
    }

    #[test]
    fn quotient_examples() {
        let edge = Multigraph::from_pairs(2, &[(0, 1)]).unwrap();
        let q = edge.loopless_quotients();
        assert_eq!(q.len(), 1);
        assert!(q[0].0.is_identity());

        let q = path2().loopless_quotients();
        assert_eq!(q.len(), 2);
        let graphs: BTreeSet<_> = q.iter().map(|(_, g)| g.clone()).collect();
        assert!(graphs.contains(&path2()));
        assert!(graphs.contains(&Multigraph::canonicalize(2, &[(0, 1, 2)]).unwrap()));

        let matching = Multigraph::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        let q = matching.loopless_quotients();
        assert_eq!(q.len(), 7);
        let graphs: BTreeSet<_> = q.iter().map(|(_, g)| g.clone()).collect();
        assert!(graphs.contains(&path2()));
        assert!(graphs.contains(&Multigraph::canonicalize(2, &[(0, 1, 2)]).unwrap()));
    }

    #[test]
    fn collapse_examples() {
        let double = Multigraph::canonicalize(2, &[(0, 1, 2)]).unwrap();
        assert_eq!(
            double.collapse_simple(),
            Multigraph::from_pairs(2, &[(0, 1)]).unwrap()
        );
        let triangle = Multigraph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(triangle.collapse_simple(), triangle);
        let fat = Multigraph::canonicalize(3, &[(0, 1, 2), (1, 2, 1), (0, 2, 1)]).unwrap();
        assert_eq!(fat.collapse_simple(), triangle);
    }

    #[test]
    fn text_roundtrip_and_errors() {
        let g = Multigraph::canonicalize(4, &[(0, 1, 2), (1, 2, 1), (2, 3, 1)]).unwrap();
        assert_eq!(Multigraph::from_text(&g.to_text()).unwrap(), g);
        let parsed = Multigraph::from_text("# path\n3 2\n1 2 1\n2 3 1\n").unwrap();
        assert_eq!(parsed, path2());
        assert!(matches!(
            Multigraph::from_text("2 1\n1 1 1\n"),
            Err(Error::SelfLoop { vertex: 1 })
        ));
        assert!(matches!(
            Multigraph::from_text("3 2\n1 2 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Multigraph::from_text("3 1\n1 x 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert_eq!(Multigraph::from_text("0 0\n").unwrap(), Multigraph::empty());
    }

    #[test]
    fn disjoint_union_counts() {
        let e = Multigraph::from_pairs(2, &[(0, 1)]).unwrap();
        let u = e.disjoint_union(&e);
        assert_eq!(u, Multigraph::from_pairs(4, &[(0, 1), (2, 3)]).unwrap());
        assert_eq!(Multigraph::empty().disjoint_union(&e), e);
    }
}
