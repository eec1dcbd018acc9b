//! Trees on dense vertex ids, their rooted orientations, and the edge-list
//! text format.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest vertex id accepted by the text parser.
const MAX_PARSED_VERTEX: usize = 1 << 20;

/// An undirected tree on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Tree {
    /// The tree with one vertex and no edges.
    pub fn singleton() -> Self {
        Self {
            n: 1,
            edges: Vec::new(),
            adjacency: vec![Vec::new()],
        }
    }

    /// Builds a tree after checking it has `n - 1` distinct edges, no loops,
    /// and is connected.
    pub fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidTree(
                "a tree needs at least one vertex".into(),
            ));
        }
        if edges.len() != n - 1 {
            return Err(Error::InvalidTree(format!(
                "{} edges on {n} vertices, expected {}",
                edges.len(),
                n - 1
            )));
        }
        let mut components = UnionFind::new(n);
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in &edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::InvalidTree(format!("self-loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidTree(format!("duplicate edge {u} {v}")));
            }
            if !components.union(u, v) {
                return Err(Error::InvalidTree(format!("edge {u} {v} closes a cycle")));
            }
        }
        Ok(Self::from_checked_edges(n, edges))
    }

    fn from_checked_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Self {
            n,
            edges,
            adjacency,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Same tree with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidTree(format!(
                "permutation has {} entries for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Self::from_edges(self.n, edges)
    }

    /// Breadth-first distances from `source`.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u)[v])
    }

    /// Number of edges on a longest path.
    pub fn diameter(&self) -> usize {
        let first = self.distances_from(0);
        let far = argmax(&first);
        *self.distances_from(far).iter().max().unwrap_or(&0)
    }

    /// A tree with at most one vertex of degree three or more. Paths count.
    pub fn is_spider(&self) -> bool {
        (0..self.n).filter(|&v| self.degree(v) >= 3).count() <= 1
    }

    pub fn is_path(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) <= 2)
    }

    /// Leg lengths of a spider, read from its branch vertex (or from an end of
    /// a path). `None` for non-spiders and for the single vertex.
    pub fn spider_legs(&self) -> Option<SpiderSpec> {
        if self.n == 1 || !self.is_spider() {
            return None;
        }
        let center = (0..self.n)
            .find(|&v| self.degree(v) >= 3)
            .or_else(|| (0..self.n).find(|&v| self.degree(v) == 1))?;
        let mut legs = Vec::with_capacity(self.degree(center));
        for &first in &self.adjacency[center] {
            let (mut prev, mut cur, mut len) = (center, first, 1);
            while self.degree(cur) == 2 {
                let next = self.adjacency[cur].iter().copied().find(|&w| w != prev)?;
                prev = cur;
                cur = next;
                len += 1;
            }
            legs.push(len);
        }
        legs.sort_unstable_by(|a, b| b.cmp(a));
        SpiderSpec::new(legs).ok()
    }

    /// Isomorphism-class invariant: the parenthesis encoding of the tree
    /// rooted at its center, minimized over both centers when bicentral.
    pub fn canonical_form(&self) -> String {
        self.centers()
            .into_iter()
            .map(|c| rooted_encoding(&self.adjacency, c))
            .min()
            .unwrap_or_default()
    }

    /// One or two vertices minimizing eccentricity.
    pub fn centers(&self) -> Vec<usize> {
        if self.n <= 2 {
            return (0..self.n).collect();
        }
        let mut degree: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut layer: Vec<usize> = (0..self.n).filter(|&v| degree[v] == 1).collect();
        let mut remaining = self.n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &leaf in &layer {
                for &w in &self.adjacency[leaf] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
            layer = next;
        }
        layer.sort_unstable();
        layer
    }

    /// Edge-list text, one `u v` pair per line.
    pub fn to_edge_list(&self) -> String {
        self.edges
            .iter()
            .map(|(u, v)| format!("{u} {v}\n"))
            .collect()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_tree(s)
    }
}

fn argmax(values: &[usize]) -> usize {
    values
        .iter()
        .enumerate()
        .max_by_key(|&(_, d)| *d)
        .map(|(i, _)| i)
        .unwrap_or(0)
}

fn rooted_encoding(adjacency: &[Vec<usize>], root: usize) -> String {
    fn encode(adjacency: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut parts: Vec<String> = adjacency[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| encode(adjacency, w, v))
            .collect();
        parts.sort_unstable();
        format!("({})", parts.concat())
    }
    encode(adjacency, root, usize::MAX)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn grow(&mut self, n: usize) {
        while self.parent.len() < n {
            self.parent.push(self.parent.len());
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Parses the edge-list format: one edge per line as two whitespace-separated
/// decimal vertex ids. Blank lines and `#` comments are skipped. Empty input
/// is the single-vertex tree.
pub fn parse_tree(text: &str) -> Result<Tree> {
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    let mut seen = HashSet::new();
    let mut components = UnionFind::new(0);

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fail = |reason: String| Error::Parse { line, reason };
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(fail(format!(
                "expected two vertex ids, found {} tokens",
                tokens.len()
            )));
        }
        let mut ids = [0usize; 2];
        for (slot, token) in ids.iter_mut().zip(&tokens) {
            *slot = token
                .parse()
                .map_err(|_| fail(format!("`{token}` is not a nonnegative integer")))?;
            if *slot > MAX_PARSED_VERTEX {
                return Err(fail(format!(
                    "vertex id {slot} exceeds the limit {MAX_PARSED_VERTEX}"
                )));
            }
        }
        let [u, v] = ids;
        if u == v {
            return Err(fail(format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(fail(format!("duplicate edge {u} {v}")));
        }
        components.grow(u.max(v) + 1);
        if !components.union(u, v) {
            return Err(fail(format!("edge {u} {v} closes a cycle")));
        }
        edges.push((u, v));
        edge_lines.push(line);
    }

    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(1);
    if edges.len() != n - 1 {
        // Acyclic but short of n - 1 edges: some vertex is cut off from 0.
        components.grow(n);
        let root = components.find(0);
        let covered: HashSet<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        if let Some(missing) = (0..n).find(|v| !covered.contains(v)) {
            return Err(Error::InvalidTree(format!(
                "vertex ids must be exactly 0..{n}, but {missing} never appears"
            )));
        }
        let line = edges
            .iter()
            .zip(&edge_lines)
            .find(|((u, _), _)| components.find(*u) != root)
            .map(|(_, &line)| line)
            .unwrap_or(0);
        return Err(Error::Parse {
            line,
            reason: "edge is disconnected from vertex 0".into(),
        });
    }
    Ok(Tree::from_checked_edges(n, edges))
}

/// A tree oriented away from a chosen root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    tree: Tree,
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    // Breadth-first: every vertex appears after its parent.
    order: Vec<usize>,
}

impl RootedTree {
    pub fn new(tree: Tree, root: usize) -> Result<Self> {
        tree.check_vertex(root)?;
        let n = tree.n();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut order = Vec::with_capacity(n);
        let mut visited = vec![false; n];
        visited[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in tree.neighbors(u) {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = Some(u);
                    children[u].push(w);
                    queue.push_back(w);
                }
            }
        }
        Ok(Self {
            tree,
            root,
            parent,
            children,
            order,
        })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn into_tree(self) -> Tree {
        self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn n(&self) -> usize {
        self.tree.n()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Vertices with each parent listed before its children.
    pub fn top_down(&self) -> &[usize] {
        &self.order
    }

    /// The tree obtained by identifying the root of `other` with the root of
    /// `self`. Vertices of `self` keep their ids.
    pub fn glue(&self, other: &RootedTree) -> RootedTree {
        let offset = self.n();
        let mut rename = vec![0; other.n()];
        let mut next = offset;
        for (v, slot) in rename.iter_mut().enumerate() {
            if v == other.root {
                *slot = self.root;
            } else {
                *slot = next;
                next += 1;
            }
        }
        let mut edges = self.tree.edges.clone();
        edges.extend(
            other
                .tree
                .edges
                .iter()
                .map(|&(u, v)| (rename[u], rename[v])),
        );
        let tree = Tree::from_checked_edges(next, edges);
        RootedTree::new(tree, self.root).expect("root is kept")
    }

    /// Rooted-isomorphism invariant.
    pub fn canonical_form(&self) -> String {
        rooted_encoding(&self.tree.adjacency, self.root)
    }

    /// Depth-first preorder depths.
    pub fn level_sequence(&self) -> LevelSequence {
        let mut depths = Vec::with_capacity(self.n());
        let mut stack = vec![(self.root, 0usize)];
        while let Some((v, depth)) = stack.pop() {
            depths.push(depth);
            for &c in self.children[v].iter().rev() {
                stack.push((c, depth + 1));
            }
        }
        LevelSequence(depths)
    }
}

/// Re-orients `tree` away from `root`.
pub fn reroot(tree: &Tree, root: usize) -> Result<RootedTree> {
    RootedTree::new(tree.clone(), root)
}

/// The path `p_0 - p_1 - ... - p_a` rooted at `p_0`.
pub fn make_path(edges: usize) -> RootedTree {
    let tree = Tree::from_checked_edges(edges + 1, (0..edges).map(|i| (i, i + 1)).collect());
    RootedTree::new(tree, 0).expect("vertex 0 exists")
}

/// Leg lengths (in edges) of a spider.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpiderSpec {
    legs: Vec<usize>,
}

impl SpiderSpec {
    pub fn new(legs: Vec<usize>) -> Result<Self> {
        if legs.is_empty() {
            return Err(Error::EmptySpider);
        }
        if let Some(index) = legs.iter().position(|&a| a == 0) {
            return Err(Error::ZeroLengthLeg { index });
        }
        Ok(Self { legs })
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.legs.iter().sum::<usize>()
    }

    /// The spider with its first two legs joined into one.
    pub fn merge_first_two(&self) -> Result<Self> {
        if self.legs.len() < 2 {
            return Err(Error::TooFewLegs {
                needed: 2,
                got: self.legs.len(),
            });
        }
        let mut legs = vec![self.legs[0] + self.legs[1]];
        legs.extend_from_slice(&self.legs[2..]);
        Ok(Self { legs })
    }
}

impl fmt::Display for SpiderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.legs.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Root is vertex 0; each leg's vertices are numbered consecutively outward.
pub fn make_spider(spec: &SpiderSpec) -> RootedTree {
    let n = spec.vertex_count();
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for &len in spec.legs() {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    RootedTree::new(Tree::from_checked_edges(n, edges), 0).expect("vertex 0 exists")
}

/// Depths of a rooted tree listed in preorder.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LevelSequence(Vec<usize>);

impl LevelSequence {
    pub fn new(depths: Vec<usize>) -> Result<Self> {
        match depths.first() {
            None => return Err(Error::LevelSequence("empty sequence".into())),
            Some(&d) if d != 0 => {
                return Err(Error::LevelSequence(format!("first depth is {d}, not 0")))
            }
            _ => {}
        }
        for (i, pair) in depths.windows(2).enumerate() {
            if pair[1] == 0 || pair[1] > pair[0] + 1 {
                return Err(Error::LevelSequence(format!(
                    "depth {} at position {} after depth {}",
                    pair[1],
                    i + 1,
                    pair[0]
                )));
            }
        }
        Ok(Self(depths))
    }

    pub(crate) fn from_raw(depths: Vec<usize>) -> Self {
        Self(depths)
    }

    pub fn depths(&self) -> &[usize] {
        &self.0
    }

    /// Vertex `i` of the result is the `i`-th entry; its parent is the most
    /// recent earlier vertex one level up.
    pub fn to_rooted_tree(&self) -> RootedTree {
        let n = self.0.len();
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        let mut last_at_depth: Vec<usize> = Vec::new();
        for (v, &depth) in self.0.iter().enumerate() {
            last_at_depth.truncate(depth);
            if let Some(&parent) = last_at_depth.last() {
                edges.push((parent, v));
            }
            last_at_depth.push(v);
        }
        RootedTree::new(Tree::from_checked_edges(n, edges), 0).expect("vertex 0 exists")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const DOUBLE_BROOM: &str = "0 1\n1 2\n2 3\n0 4\n0 5\n3 6\n3 7";

    #[test]
    fn parses_small_trees() {
        let path = parse_tree("0 1\n1 2").unwrap();
        assert_eq!(path.n(), 3);
        assert!(path.is_path());
        assert_eq!(path.diameter(), 2);

        let star = parse_tree("0 1\n0 2\n0 3").unwrap();
        assert_eq!(star.degree(0), 3);
        assert_eq!(star.diameter(), 2);

        let broom = parse_tree(DOUBLE_BROOM).unwrap();
        assert_eq!(broom.n(), 8);
        assert_eq!(broom.edges().len(), 7);
        assert_eq!(broom.degree(0), 3);
        assert_eq!(broom.degree(3), 3);
        assert_eq!(broom.diameter(), 5);
        assert!(!broom.is_spider());
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let t = parse_tree("# a star\n\n0 1   # first\n0 2\n\n").unwrap();
        assert_eq!(t.n(), 3);
        assert_eq!(parse_tree("").unwrap(), Tree::singleton());
    }

    #[test]
    fn parse_errors_name_the_line() {
        let cases = [
            ("0 1\n1 2\n2 0", 3),
            ("0 1\n1 0", 2),
            ("0 1\n1 1", 2),
            ("0 1\n1 x", 2),
            ("0 1\n1 -2", 2),
            ("0 1 2", 1),
            ("0 1\n2 3", 2),
        ];
        for (text, expected_line) in cases {
            match parse_tree(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, expected_line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
        assert!(matches!(parse_tree("0 1\n1 3"), Err(Error::InvalidTree(_))));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Tree::from_edges(3, vec![(0, 1)]).is_err());
        assert!(Tree::from_edges(3, vec![(0, 1), (0, 1)]).is_err());
        assert!(Tree::from_edges(3, vec![(0, 1), (1, 3)]).is_err());
        assert!(Tree::from_edges(4, vec![(0, 1), (1, 2), (2, 0)]).is_err());
        assert!(Tree::from_edges(0, vec![]).is_err());
    }

    #[test]
    fn paths_and_spiders() {
        assert_eq!(make_path(0).n(), 1);
        let p1 = make_path(1);
        assert_eq!((p1.n(), p1.root()), (2, 0));
        let p3 = make_path(3);
        assert!(p3.tree().is_path());
        assert_eq!(p3.tree().degree(0), 1);

        let one_leg = make_spider(&SpiderSpec::new(vec![3]).unwrap());
        assert_eq!(one_leg, p3);

        let star = make_spider(&SpiderSpec::new(vec![1, 1, 1]).unwrap());
        assert_eq!(star.tree().degree(star.root()), 3);
        assert_eq!(star.n(), 4);

        let bent = make_spider(&SpiderSpec::new(vec![2, 1]).unwrap());
        assert!(bent.tree().is_path());
        assert_eq!(bent.tree().degree(bent.root()), 2);
        assert_eq!(
            bent.tree().distances_from(bent.root()).iter().max(),
            Some(&2)
        );

        assert_eq!(SpiderSpec::new(vec![]), Err(Error::EmptySpider));
        assert_eq!(
            SpiderSpec::new(vec![2, 0]),
            Err(Error::ZeroLengthLeg { index: 1 })
        );
    }

    #[test]
    fn spider_legs_round_trip() {
        for legs in [vec![3, 2, 1], vec![4], vec![2, 2, 2, 1]] {
            let spec = SpiderSpec::new(legs).unwrap();
            let tree = make_spider(&spec).into_tree();
            let mut expected = spec.legs().to_vec();
            expected.sort_unstable_by(|a, b| b.cmp(a));
            let found = tree.spider_legs().unwrap();
            if expected.len() == 1 {
                assert_eq!(found.legs(), &[tree.n() - 1]);
            } else {
                assert_eq!(found.legs(), expected.as_slice());
            }
        }
        assert!(parse_tree(DOUBLE_BROOM).unwrap().spider_legs().is_none());
    }

    #[test]
    fn rerooting_keeps_the_tree() {
        let t = parse_tree(DOUBLE_BROOM).unwrap();
        for r in 0..t.n() {
            let rooted = reroot(&t, r).unwrap();
            assert_eq!(rooted.tree(), &t);
            assert_eq!(rooted.parent(r), None);
            let non_roots = (0..t.n()).filter(|&v| rooted.parent(v).is_some()).count();
            assert_eq!(non_roots, t.n() - 1);
            assert_eq!(rooted.top_down().len(), t.n());
        }
        assert_eq!(
            reroot(&t, 8).unwrap_err(),
            Error::VertexOutOfRange { vertex: 8, n: 8 }
        );
    }

    #[test]
    fn level_sequences() {
        assert!(LevelSequence::new(vec![]).is_err());
        assert!(LevelSequence::new(vec![1]).is_err());
        assert!(LevelSequence::new(vec![0, 2]).is_err());
        assert!(LevelSequence::new(vec![0, 1, 0]).is_err());
        let seq = LevelSequence::new(vec![0, 1, 2, 1, 1]).unwrap();
        let rooted = seq.to_rooted_tree();
        assert_eq!(rooted.children(0), &[1, 3, 4]);
        assert_eq!(rooted.level_sequence(), seq);
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = parse_tree("0 1\n1 2\n1 3\n3 4").unwrap();
        let b = parse_tree("2 4\n4 0\n4 3\n3 1").unwrap();
        let c = parse_tree("0 1\n1 2\n2 3\n3 4").unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_ne!(a.canonical_form(), c.canonical_form());
        assert_eq!(make_path(3).tree().centers(), vec![1, 2]);
    }

    #[test]
    fn edge_list_round_trip() {
        let t = parse_tree(DOUBLE_BROOM).unwrap();
        assert_eq!(parse_tree(&t.to_edge_list()).unwrap(), t);
    }
}
