//! Bipartite multigraphs and configuration graphs.
//!
//! For a primitive substitution that is prefix free and postfix free, the
//! configuration graph is read off the basic generators of its least
//! subfixing power: a basic generator is special when another basic shares
//! its left or right wing, left vertices are the distinct left wings of
//! specials, right vertices the distinct right wings, and every special
//! contributes one edge. Substitutions outside that class are refused.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::generators::{enumerate_basic, Generator};
use crate::letter_graphs::subfixing_power;
use crate::words::{Substitution, Word};
use crate::Side;

/// Search bounds shared by the analysis pipeline.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Bounds {
    /// Largest power tried when looking for subfixed letter graphs.
    pub power: usize,
    /// Largest segregating number tried.
    pub segregating: usize,
    /// Longest right/left extension chain in the general tail search.
    pub max_ext: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            power: 64,
            segregating: 8,
            max_ext: 32,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vertex {
    pub side: Side,
    pub id: String,
}

/// A bipartite multigraph. Vertices keep their declaration order across
/// both sides; edges are `(left vertex, right vertex)` index pairs into
/// [`vertices`](Self::vertices), repeated for parallel edges.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BipartiteMultigraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
}

impl BipartiteMultigraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, side: Side, id: impl Into<String>) -> Result<usize> {
        let id = id.into();
        if id.is_empty() || id.chars().any(char::is_whitespace) {
            return Err(Error::Malformed {
                line: 0,
                message: format!("invalid vertex id `{id}`"),
            });
        }
        if self.find(side, &id).is_some() {
            return Err(Error::DuplicateVertex { line: 0, id });
        }
        self.vertices.push(Vertex { side, id });
        Ok(self.vertices.len() - 1)
    }

    /// Adds an edge between two vertex indices; `left` must be a left vertex
    /// and `right` a right vertex.
    pub fn add_edge(&mut self, left: usize, right: usize) -> Result<()> {
        let ok = self.vertices.get(left).is_some_and(|v| v.side == Side::Left)
            && self.vertices.get(right).is_some_and(|v| v.side == Side::Right);
        if !ok {
            return Err(Error::Precondition(format!(
                "edge ({left}, {right}) does not join a left vertex to a right vertex"
            )));
        }
        self.edges.push((left, right));
        Ok(())
    }

    pub fn add_edge_by_id(&mut self, left: &str, right: &str) -> Result<()> {
        let l = self.find(Side::Left, left).ok_or_else(|| Error::UnknownVertex {
            line: 0,
            side: "left",
            id: left.to_string(),
        })?;
        let r = self.find(Side::Right, right).ok_or_else(|| Error::UnknownVertex {
            line: 0,
            side: "right",
            id: right.to_string(),
        })?;
        self.add_edge(l, r)
    }

    /// A graph with `lefts` left vertices `l1..` and `rights` right vertices
    /// `r1..`, declared lefts first, with `counts[i][j]` parallel edges
    /// between left `i` and right `j`.
    pub fn from_multiplicities(counts: &[Vec<usize>]) -> Self {
        let lefts = counts.len();
        let rights = counts.first().map_or(0, Vec::len);
        let mut g = Self::new();
        for i in 0..lefts {
            g.add_vertex(Side::Left, format!("l{}", i + 1)).unwrap();
        }
        for j in 0..rights {
            g.add_vertex(Side::Right, format!("r{}", j + 1)).unwrap();
        }
        for (i, row) in counts.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                for _ in 0..m {
                    g.edges.push((i, lefts + j));
                }
            }
        }
        g
    }

    pub fn find(&self, side: Side, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.side == side && v.id == id)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vertex {
        &self.vertices[i]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Indices of the vertices on one side, in declaration order.
    pub fn side(&self, side: Side) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&i| self.vertices[i].side == side)
            .collect()
    }

    /// Number of edges at `v`, counting parallel edges.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(l, r)| l == v || r == v).count()
    }

    pub fn multiplicity(&self, left: usize, right: usize) -> usize {
        self.edges.iter().filter(|&&e| e == (left, right)).count()
    }

    /// Distinct neighbors of `v`, in declaration order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(l, r)| {
                if l == v {
                    Some(r)
                } else if r == v {
                    Some(l)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Distinct adjacent `(left, right)` pairs with their multiplicities,
    /// in order of first appearance.
    pub fn edge_multiplicities(&self) -> Vec<((usize, usize), usize)> {
        let mut out: Vec<((usize, usize), usize)> = Vec::new();
        for &e in &self.edges {
            match out.iter_mut().find(|(pair, _)| *pair == e) {
                Some((_, m)) => *m += 1,
                None => out.push((e, 1)),
            }
        }
        out
    }

    /// First violated clause of the undecided definition, if any.
    pub fn undecided_violation(&self) -> Option<UndecidedViolation> {
        for v in &self.vertices {
            let i = self.find(v.side, &v.id).unwrap();
            if self.degree(i) == 0 {
                return Some(UndecidedViolation::LonelyVertex {
                    side: v.side,
                    id: v.id.clone(),
                });
            }
        }
        for &(l, r) in &self.edges {
            if self.degree(l) == 1 && self.degree(r) == 1 {
                return Some(UndecidedViolation::LonelyEdge {
                    left: self.vertices[l].id.clone(),
                    right: self.vertices[r].id.clone(),
                });
            }
        }
        for side in [Side::Left, Side::Right] {
            if !self.side(side).iter().any(|&v| self.degree(v) >= 2) {
                return Some(UndecidedViolation::NoBranching(side));
            }
        }
        None
    }

    pub fn is_undecided(&self) -> bool {
        self.undecided_violation().is_none()
    }

    /// Parses the graph file format: `left <id>`, `right <id>` and
    /// `edge <left-id> <right-id>` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut g = Self::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            let relabel = |e: Error| match e {
                Error::DuplicateVertex { id, .. } => Error::DuplicateVertex { line, id },
                Error::UnknownVertex { side, id, .. } => Error::UnknownVertex { line, side, id },
                Error::Malformed { message, .. } => Error::Malformed { line, message },
                other => other,
            };
            match fields.as_slice() {
                ["left", id] => {
                    g.add_vertex(Side::Left, *id).map_err(relabel)?;
                }
                ["right", id] => {
                    g.add_vertex(Side::Right, *id).map_err(relabel)?;
                }
                ["edge", l, r] => g.add_edge_by_id(l, r).map_err(relabel)?,
                _ => {
                    return Err(Error::Malformed {
                        line,
                        message: format!("expected `left ID`, `right ID` or `edge LEFT RIGHT`, got `{content}`"),
                    })
                }
            }
        }
        Ok(g)
    }

    /// Renders in the graph file format, preserving declaration order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            out.push_str(&format!("{} {}\n", v.side, v.id));
        }
        for &(l, r) in &self.edges {
            out.push_str(&format!("edge {} {}\n", self.vertices[l].id, self.vertices[r].id));
        }
        out
    }
}

/// A violated clause of the undecided definition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum UndecidedViolation {
    /// (i) a vertex without edges.
    LonelyVertex { side: Side, id: String },
    /// (ii) an edge sharing no endpoint with another edge.
    LonelyEdge { left: String, right: String },
    /// (iii)/(iv) no vertex on this side has two or more edges.
    NoBranching(Side),
}

impl UndecidedViolation {
    /// The clause number, `"i"` to `"iv"`.
    pub fn clause(&self) -> &'static str {
        match self {
            UndecidedViolation::LonelyVertex { .. } => "i",
            UndecidedViolation::LonelyEdge { .. } => "ii",
            UndecidedViolation::NoBranching(Side::Left) => "iii",
            UndecidedViolation::NoBranching(Side::Right) => "iv",
        }
    }
}

impl fmt::Display for UndecidedViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UndecidedViolation::LonelyVertex { side, id } => {
                write!(f, "clause (i): lonely {side} vertex `{id}`")
            }
            UndecidedViolation::LonelyEdge { left, right } => {
                write!(f, "clause (ii): lonely edge `{left}`-`{right}`")
            }
            UndecidedViolation::NoBranching(side) => write!(
                f,
                "clause ({}): no {side} vertex with two or more edges",
                self.clause()
            ),
        }
    }
}

/// A side-preserving vertex bijection: `mapping[i]` is the image of vertex
/// `i` of the first graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Isomorphism {
    pub mapping: Vec<usize>,
}

/// Finds a side-preserving bijection carrying the edge multiset of `g1`
/// onto that of `g2`, by backtracking with degree pruning.
pub fn isomorphic(g1: &BipartiteMultigraph, g2: &BipartiteMultigraph) -> Option<Isomorphism> {
    let n = g1.vertices.len();
    if n != g2.vertices.len() || g1.edges.len() != g2.edges.len() {
        return None;
    }
    let m1 = multiplicity_matrix(g1);
    let m2 = multiplicity_matrix(g2);
    let sig1: Vec<Signature> = (0..n).map(|v| signature(g1, &m1, v)).collect();
    let sig2: Vec<Signature> = (0..n).map(|v| signature(g2, &m2, v)).collect();
    let mut sorted1 = sig1.clone();
    let mut sorted2 = sig2.clone();
    sorted1.sort();
    sorted2.sort();
    if sorted1 != sorted2 {
        return None;
    }

    // Most constrained first: high degree, then declaration order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(sig1[v].1), v));
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&w| sig1[v] == sig2[w]).collect())
        .collect();

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let search = Search {
        order: &order,
        candidates: &candidates,
        m1: &m1,
        m2: &m2,
    };
    if search.extend(0, &mut mapping, &mut used) {
        Some(Isomorphism { mapping })
    } else {
        None
    }
}

/// (side, degree, sorted edge multiplicities)
type Signature = (Side, usize, Vec<usize>);

fn signature(g: &BipartiteMultigraph, m: &[Vec<usize>], v: usize) -> Signature {
    let mut mults: Vec<usize> = m[v].iter().copied().filter(|&x| x > 0).collect();
    mults.sort_unstable();
    (g.vertices[v].side, mults.iter().sum(), mults)
}

fn multiplicity_matrix(g: &BipartiteMultigraph) -> Vec<Vec<usize>> {
    let n = g.vertices.len();
    let mut m = vec![vec![0; n]; n];
    for &(l, r) in &g.edges {
        m[l][r] += 1;
        m[r][l] += 1;
    }
    m
}

struct Search<'a> {
    order: &'a [usize],
    candidates: &'a [Vec<usize>],
    m1: &'a [Vec<usize>],
    m2: &'a [Vec<usize>],
}

impl Search<'_> {
    fn extend(&self, depth: usize, mapping: &mut [usize], used: &mut [bool]) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for &w in &self.candidates[v] {
            if used[w] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.m1[v][u] == self.m2[w][mapping[u]]);
            if !consistent {
                continue;
            }
            mapping[v] = w;
            used[w] = true;
            if self.extend(depth + 1, mapping, used) {
                return true;
            }
            used[w] = false;
            mapping[v] = usize::MAX;
        }
        false
    }
}

/// A configuration graph with the data it was read from.
#[derive(Clone, Debug)]
pub struct ConfigurationGraph {
    /// The power of the input substitution whose generators were used.
    pub power: usize,
    pub substitution: Substitution,
    pub basics: Vec<Generator>,
    pub graph: BipartiteMultigraph,
    /// Left wing labelling each left vertex, in vertex order.
    pub left_labels: Vec<Word>,
    /// Right wing labelling each right vertex, in vertex order.
    pub right_labels: Vec<Word>,
    /// The special basic generator behind each edge, in edge order.
    pub edge_generators: Vec<Generator>,
}

impl ConfigurationGraph {
    /// Wing label of a vertex of [`graph`](Self::graph).
    pub fn label(&self, v: usize) -> &Word {
        let side = self.graph.vertex(v).side;
        let k = self.graph.side(side).iter().position(|&x| x == v).unwrap();
        match side {
            Side::Left => &self.left_labels[k],
            Side::Right => &self.right_labels[k],
        }
    }
}

/// Checks the pipeline preconditions and returns the least subfixing power.
fn supported_power(sub: &Substitution, bounds: &Bounds) -> Result<(usize, Substitution)> {
    if sub.len() < 2 {
        return Err(Error::DegenerateAlphabet);
    }
    if !sub.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    for prefix in [true, false] {
        if let Some(e) = sub.conflict_error(prefix) {
            return Err(e);
        }
    }
    let p = subfixing_power(sub, bounds.power, bounds.segregating)?;
    let q = sub.power(p)?;
    for prefix in [true, false] {
        if let Some(e) = q.conflict_error(prefix) {
            return Err(e);
        }
    }
    Ok((p, q))
}

/// Index pairs `(i, j)`, `i < j`, of basics sharing a left or right wing.
fn wing_sharing_pairs(basics: &[Generator]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..basics.len() {
        for j in i + 1..basics.len() {
            if basics[i].left == basics[j].left || basics[i].right == basics[j].right {
                out.push((i, j));
            }
        }
    }
    out
}

fn wing_id(sub: &Substitution, wing: &Word) -> String {
    if sub.alphabet().is_compact() {
        sub.render(wing)
    } else {
        wing.iter()
            .map(|&l| sub.alphabet().token(l))
            .collect::<Vec<_>>()
            .join(".")
    }
}

pub fn configuration_graph(sub: &Substitution, bounds: &Bounds) -> Result<ConfigurationGraph> {
    let (power, q) = supported_power(sub, bounds)?;
    let basics = enumerate_basic(&q)?;
    let mut special = vec![false; basics.len()];
    for (i, j) in wing_sharing_pairs(&basics) {
        special[i] = true;
        special[j] = true;
    }

    let mut graph = BipartiteMultigraph::new();
    let mut left_labels: Vec<Word> = Vec::new();
    let mut right_labels: Vec<Word> = Vec::new();
    let mut left_index: HashMap<Word, usize> = HashMap::new();
    let mut right_index: HashMap<Word, usize> = HashMap::new();
    let specials: Vec<&Generator> = basics
        .iter()
        .zip(&special)
        .filter_map(|(g, &s)| s.then_some(g))
        .collect();
    for g in &specials {
        if !left_index.contains_key(&g.left) {
            let v = graph.add_vertex(Side::Left, wing_id(&q, &g.left))?;
            left_index.insert(g.left.clone(), v);
            left_labels.push(g.left.clone());
        }
    }
    for g in &specials {
        if !right_index.contains_key(&g.right) {
            let v = graph.add_vertex(Side::Right, wing_id(&q, &g.right))?;
            right_index.insert(g.right.clone(), v);
            right_labels.push(g.right.clone());
        }
    }
    for g in &specials {
        graph.add_edge(left_index[&g.left], right_index[&g.right])?;
    }
    Ok(ConfigurationGraph {
        power,
        substitution: q,
        edge_generators: specials.into_iter().cloned().collect(),
        basics,
        graph,
        left_labels,
        right_labels,
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PeriodicityVerdict {
    Periodic,
    /// Two distinct basic generators of `τ^power` sharing a wing; their
    /// completions are special, so the substitution is aperiodic.
    Aperiodic {
        power: usize,
        certificate: (Generator, Generator),
    },
    Unsupported(Error),
}

pub fn classify(sub: &Substitution, bounds: &Bounds) -> PeriodicityVerdict {
    let (power, q) = match supported_power(sub, bounds) {
        Ok(x) => x,
        Err(e) => return PeriodicityVerdict::Unsupported(e),
    };
    let basics = match enumerate_basic(&q) {
        Ok(b) => b,
        Err(e) => return PeriodicityVerdict::Unsupported(e),
    };
    match wing_sharing_pairs(&basics).first() {
        Some(&(i, j)) => PeriodicityVerdict::Aperiodic {
            power,
            certificate: (basics[i].clone(), basics[j].clone()),
        },
        None => PeriodicityVerdict::Periodic,
    }
}
