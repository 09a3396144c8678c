//! Edge-colored signed graphs: hypercubes, quotients by codes, validation of
//! the Adinkra conditions and vertex switching.

mod iso;
mod json;
mod signature;

use std::collections::HashMap;
use std::fmt;

use crate::codes::{BinaryCode, BitVector, CosetLabeling};
use crate::error::{Error, Result};
use crate::limits;

pub use iso::{cayley_graph, color_isomorphism, is_generic};
pub use json::{AdinkraDoc, EdgeDoc};
pub use signature::{parity_system, signature_classes, solve_totally_odd};

/// An edge `u < v` of color `color` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub color: usize,
}

impl Edge {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A graph whose vertices carry binary labels and whose edges carry colors.
/// It need not satisfy the Adinkra conditions; [`validate`] reports on those.
#[derive(Clone, Debug)]
pub struct ColoredGraph {
    n_colors: usize,
    labels: Vec<BitVector>,
    edges: Vec<Edge>,
    incidence: Vec<Vec<Option<usize>>>,
    degree_defects: Vec<(usize, usize, usize)>,
    index: HashMap<BitVector, usize>,
}

impl PartialEq for ColoredGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n_colors == other.n_colors && self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for ColoredGraph {}

impl ColoredGraph {
    pub fn new(n_colors: usize, labels: Vec<BitVector>, edges: Vec<Edge>) -> Result<Self> {
        if n_colors == 0 {
            return Err(Error::InvalidParameter("a colored graph needs at least one color".into()));
        }
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidParameter(format!("duplicate vertex label {l}")));
            }
        }
        let mut counts = vec![vec![0usize; n_colors]; n];
        let mut incidence = vec![vec![None; n_colors]; n];
        let mut normalized = Vec::with_capacity(edges.len());
        for (idx, e) in edges.into_iter().enumerate() {
            if e.u >= n || e.v >= n {
                return Err(Error::InvalidParameter(format!("edge {idx} refers to a missing vertex")));
            }
            if e.u == e.v {
                return Err(Error::InvalidParameter(format!("edge {idx} is a loop at vertex {}", e.u)));
            }
            if e.color >= n_colors {
                return Err(Error::InvalidParameter(format!(
                    "edge {idx} has color {} but there are {n_colors} colors",
                    e.color + 1
                )));
            }
            let e = Edge { u: e.u.min(e.v), v: e.u.max(e.v), color: e.color };
            for x in [e.u, e.v] {
                counts[x][e.color] += 1;
                incidence[x][e.color].get_or_insert(idx);
            }
            normalized.push(e);
        }
        let degree_defects = counts
            .iter()
            .enumerate()
            .flat_map(|(v, row)| {
                row.iter().enumerate().filter(|(_, &c)| c != 1).map(move |(color, &c)| (v, color, c))
            })
            .collect();
        Ok(ColoredGraph { n_colors, labels, edges: normalized, incidence, degree_defects, index })
    }

    #[inline]
    pub fn n_colors(&self) -> usize {
        self.n_colors
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[BitVector] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &BitVector {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &BitVector) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Index of the edge of color `color` at `v`, if there is exactly one.
    #[inline]
    pub fn edge_at(&self, v: usize, color: usize) -> Option<usize> {
        self.incidence[v][color]
    }

    #[inline]
    pub fn neighbor(&self, v: usize, color: usize) -> Option<usize> {
        self.incidence[v][color].map(|e| self.edges[e].other(v))
    }

    pub fn is_color_regular(&self) -> bool {
        self.degree_defects.is_empty()
    }

    /// Fermions are the odd-weight labels.
    #[inline]
    pub fn is_fermion(&self, v: usize) -> bool {
        self.labels[v].weight() % 2 == 1
    }

    pub fn boson_count(&self) -> usize {
        (0..self.num_vertices()).filter(|&v| !self.is_fermion(v)).count()
    }

    pub fn is_boson_first(&self) -> bool {
        let b = self.boson_count();
        (0..self.num_vertices()).all(|v| self.is_fermion(v) == (v >= b))
    }

    /// Vertex indices sorted bosons first, each block by label.
    pub fn canonical_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.num_vertices()).collect();
        order.sort_by(|&a, &b| (self.is_fermion(a), &self.labels[a]).cmp(&(self.is_fermion(b), &self.labels[b])));
        order
    }

    /// Relabels so that new vertex `i` is old vertex `order[i]`. Returns the
    /// graph together with the permutation applied to the edge list, so that
    /// new edge `j` is old edge `perm[j]`. Edges are sorted by color, then endpoints.
    fn permuted(&self, order: &[usize]) -> Result<(ColoredGraph, Vec<usize>)> {
        let n = self.num_vertices();
        let mut position = vec![usize::MAX; n];
        for (new, &old) in order.iter().enumerate() {
            if old >= n || position[old] != usize::MAX {
                return Err(Error::InvalidParameter("vertex order is not a permutation".into()));
            }
            position[old] = new;
        }
        if order.len() != n {
            return Err(Error::InvalidParameter("vertex order is not a permutation".into()));
        }
        let mut moved: Vec<(Edge, usize)> = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let (a, b) = (position[e.u], position[e.v]);
                (Edge { u: a.min(b), v: a.max(b), color: e.color }, i)
            })
            .collect();
        moved.sort_by_key(|(e, _)| (e.color, e.u, e.v));
        let labels = order.iter().map(|&o| self.labels[o].clone()).collect();
        let perm = moved.iter().map(|&(_, i)| i).collect();
        let graph = ColoredGraph::new(self.n_colors, labels, moved.into_iter().map(|(e, _)| e).collect())?;
        Ok((graph, perm))
    }

    pub fn canonicalized(&self) -> ColoredGraph {
        self.permuted(&self.canonical_order()).expect("canonical order is a permutation").0
    }
}

/// An edge-colored graph together with a sign on every edge.
#[derive(Clone, Debug)]
pub struct Adinkra {
    graph: ColoredGraph,
    signs: Vec<i8>,
}

impl PartialEq for Adinkra {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.signs == other.signs
    }
}

impl Eq for Adinkra {}

impl Adinkra {
    pub fn new(graph: ColoredGraph, signs: Vec<i8>) -> Result<Self> {
        if signs.len() != graph.edges().len() {
            return Err(Error::Dimension(format!(
                "{} signs for {} edges",
                signs.len(),
                graph.edges().len()
            )));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidParameter("signs must be +1 or -1".into()));
        }
        Ok(Adinkra { graph, signs })
    }

    /// Builds the quotient of the N-cube by `code` and solves for a totally
    /// odd signature. Fails with [`Error::Infeasible`] when none exists.
    pub fn from_code(code: &BinaryCode) -> Result<Self> {
        Self::from_code_labeled(code, CosetLabeling::LexMin)
    }

    pub fn from_code_labeled(code: &BinaryCode, labeling: CosetLabeling) -> Result<Self> {
        let infeasible = || {
            Error::Infeasible(format!(
                "{} is not doubly even: a quotient of the cube by a code admits a totally odd signature if and only if the code is doubly even",
                code.name()
            ))
        };
        if !code.generators_doubly_even() {
            return Err(infeasible());
        }
        let graph = quotient_graph_labeled(code.length(), code, labeling)?;
        match solve_totally_odd(&graph)? {
            Some(signs) => Adinkra::new(graph, signs),
            None => Err(infeasible()),
        }
    }

    pub fn graph(&self) -> &ColoredGraph {
        &self.graph
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn n_colors(&self) -> usize {
        self.graph.n_colors()
    }

    pub fn num_vertices(&self) -> usize {
        self.graph.num_vertices()
    }

    pub fn sign(&self, edge: usize) -> i8 {
        self.signs[edge]
    }

    /// Same Adinkra with vertices rearranged into the given label order.
    pub fn with_vertex_order(&self, labels: &[BitVector]) -> Result<Adinkra> {
        let order = labels
            .iter()
            .map(|l| {
                self.graph
                    .index_of(l)
                    .ok_or_else(|| Error::InvalidParameter(format!("no vertex labeled {l}")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.permuted(&order)
    }

    fn permuted(&self, order: &[usize]) -> Result<Adinkra> {
        let (graph, perm) = self.graph.permuted(order)?;
        let signs = perm.iter().map(|&i| self.signs[i]).collect();
        Ok(Adinkra { graph, signs })
    }

    /// Bosons first, each block sorted by label.
    pub fn canonicalized(&self) -> Adinkra {
        self.permuted(&self.graph.canonical_order()).expect("canonical order is a permutation")
    }

    /// Flips the sign of every edge with exactly one endpoint in `switch`.
    pub fn vertex_switch(&self, switch: &[usize]) -> Result<Adinkra> {
        let mut inside = vec![false; self.num_vertices()];
        for &v in switch {
            if v >= inside.len() {
                return Err(Error::InvalidParameter(format!("switch set names missing vertex {v}")));
            }
            inside[v] = true;
        }
        let signs = self
            .graph
            .edges()
            .iter()
            .zip(&self.signs)
            .map(|(e, &s)| if inside[e.u] != inside[e.v] { -s } else { s })
            .collect();
        Ok(Adinkra { graph: self.graph.clone(), signs })
    }

    /// Signed count of length-2 walks from `u` to `v`: the `(u, v)` entry of `A^2`.
    pub fn walk2_balance(&self, u: usize, v: usize) -> i64 {
        let g = &self.graph;
        let mut total = 0i64;
        for c1 in 0..g.n_colors() {
            let Some(e1) = g.edge_at(u, c1) else { continue };
            let w = g.edges()[e1].other(u);
            for c2 in 0..g.n_colors() {
                let Some(e2) = g.edge_at(w, c2) else { continue };
                if g.edges()[e2].other(w) == v {
                    total += (self.signs[e1] * self.signs[e2]) as i64;
                }
            }
        }
        total
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }
}

/// The Adinkra on the 1-cube: vertices `0` (boson) and `1` (fermion), one solid edge.
pub fn one_cube() -> Adinkra {
    let labels = vec![BitVector::from_bits([false]), BitVector::from_bits([true])];
    let graph = ColoredGraph::new(1, labels, vec![Edge { u: 0, v: 1, color: 0 }]).expect("1-cube");
    Adinkra { graph, signs: vec![1] }
}

/// The prism: two copies of `a` joined by edges of a new color, solid at
/// fermions and dashed at bosons. Labels get a trailing 0 or 1.
pub fn prism(a: &Adinkra) -> Adinkra {
    let g = &a.graph;
    let n = g.num_vertices();
    let zero = BitVector::from_bits([false]);
    let one = BitVector::from_bits([true]);
    let labels: Vec<BitVector> = g
        .labels()
        .iter()
        .map(|l| l.concat(&zero))
        .chain(g.labels().iter().map(|l| l.concat(&one)))
        .collect();
    let mut edges = Vec::with_capacity(2 * g.edges().len() + n);
    let mut signs = Vec::with_capacity(edges.capacity());
    for shift in [0, n] {
        for (e, &s) in g.edges().iter().zip(&a.signs) {
            edges.push(Edge { u: e.u + shift, v: e.v + shift, color: e.color });
            signs.push(s);
        }
    }
    for v in 0..n {
        edges.push(Edge { u: v, v: v + n, color: g.n_colors() });
        signs.push(if g.is_fermion(v) { 1 } else { -1 });
    }
    let graph = ColoredGraph::new(g.n_colors() + 1, labels, edges).expect("prism of a valid graph");
    Adinkra { graph, signs }.canonicalized()
}

/// The N-cube with the signature obtained by iterating [`prism`] from the 1-cube.
pub fn hypercube_adinkra(n: usize) -> Result<Adinkra> {
    if n == 0 {
        return Err(Error::InvalidParameter("the cube needs at least one color".into()));
    }
    limits::check(n as u128, limits::MAX_CUBE_DIM as u128, "cube dimension")?;
    let mut a = one_cube();
    for _ in 1..n {
        a = prism(&a);
    }
    Ok(a)
}

/// The quotient of the `n`-cube by `code`, vertices labeled by lex-min coset representatives.
pub fn quotient_graph(n: usize, code: &BinaryCode) -> Result<ColoredGraph> {
    quotient_graph_labeled(n, code, CosetLabeling::LexMin)
}

pub fn quotient_graph_labeled(n: usize, code: &BinaryCode, labeling: CosetLabeling) -> Result<ColoredGraph> {
    if let Some(w) = code_min_weight(n, code)? {
        if w <= 2 {
            return Err(Error::InvalidParameter(format!(
                "{} has a word of weight {w}; the quotient would have loops or parallel edges",
                code.name()
            )));
        }
    }
    build_quotient(n, code, labeling)
}

/// Like [`quotient_graph`] but allows weight-2 words, which produce pairs of
/// parallel edges of different colors. Weight-1 words (loops) are still rejected.
pub fn quotient_multigraph(n: usize, code: &BinaryCode) -> Result<ColoredGraph> {
    if code_min_weight(n, code)? == Some(1) {
        return Err(Error::InvalidParameter(format!("{} has a word of weight 1", code.name())));
    }
    build_quotient(n, code, CosetLabeling::LexMin)
}

fn code_min_weight(n: usize, code: &BinaryCode) -> Result<Option<usize>> {
    if code.length() != n {
        return Err(Error::Dimension(format!("code of length {} used with {n} colors", code.length())));
    }
    code.min_weight()
}

fn build_quotient(n: usize, code: &BinaryCode, labeling: CosetLabeling) -> Result<ColoredGraph> {
    let reps = code.cosets(labeling)?;
    let (bosons, fermions): (Vec<BitVector>, Vec<BitVector>) = reps.into_iter().partition(|r| r.weight() % 2 == 0);
    let labels: Vec<BitVector> = bosons.into_iter().chain(fermions).collect();
    let index: HashMap<&BitVector, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let mut edges = Vec::with_capacity(n * labels.len() / 2);
    for color in 0..n {
        for (i, l) in labels.iter().enumerate() {
            let mut w = l.clone();
            w.flip(color);
            let j = index[&code.coset_rep(&w, labeling)];
            if i < j {
                edges.push(Edge { u: i, v: j, color });
            }
        }
    }
    ColoredGraph::new(n, labels, edges)
}

/// Fewest vertices an Adinkra with `n` colors can have, by `n mod 8`.
pub fn min_vertices(n: usize) -> u128 {
    let (m, p) = (n / 8, n % 8);
    let e = 4 * m
        + match p {
            0 => 0,
            1 => 1,
            2 => 2,
            3 | 4 => 3,
            _ => 4,
        };
    1u128 << e
}

/// One failure of the Adinkra conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A vertex without exactly one edge of some color.
    ColorDegree { vertex: usize, color: usize, count: usize },
    /// A two-colored component that is not a 4-cycle.
    NotFourCycle { colors: (usize, usize), vertices: Vec<usize> },
    /// A two-colored 4-cycle with an even number of dashed edges.
    EvenCycle { colors: (usize, usize), vertices: Vec<usize>, dashed: usize },
    /// An edge joining two vertices of the same parity.
    NotBipartite { edge: usize, u: usize, v: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ColorDegree { vertex, color, count } => {
                write!(f, "vertex {vertex} has {count} edges of color {}", color + 1)
            }
            Violation::NotFourCycle { colors, vertices } => write!(
                f,
                "colors {} and {} form a cycle of length {} through {:?}",
                colors.0 + 1,
                colors.1 + 1,
                vertices.len(),
                vertices
            ),
            Violation::EvenCycle { colors, vertices, dashed } => write!(
                f,
                "4-cycle {:?} in colors {} and {} has {dashed} dashed edges",
                vertices,
                colors.0 + 1,
                colors.1 + 1
            ),
            Violation::NotBipartite { edge, u, v } => {
                write!(f, "edge {edge} joins vertices {u} and {v} of the same parity")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// Walks the two-colored component through `start`, alternating colors `i`
/// then `j`. Returns the vertices and edges visited, or `None` if an edge is missing.
fn bicolor_walk(g: &ColoredGraph, start: usize, i: usize, j: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut vertices = vec![start];
    let mut edges = Vec::new();
    let mut x = start;
    loop {
        let color = if edges.len() % 2 == 0 { i } else { j };
        let e = g.edge_at(x, color)?;
        edges.push(e);
        x = g.edges()[e].other(x);
        if x == start && edges.len() % 2 == 0 {
            return Some((vertices, edges));
        }
        if edges.len() > 2 * g.num_vertices() {
            return None;
        }
        vertices.push(x);
    }
}

/// Checks color regularity, the 4-cycle partition of every pair of colors,
/// odd dashing of every such cycle, and bipartiteness by label parity.
pub fn validate(a: &Adinkra) -> ValidationReport {
    let g = &a.graph;
    let mut violations: Vec<Violation> = g
        .degree_defects
        .iter()
        .map(|&(vertex, color, count)| Violation::ColorDegree { vertex, color, count })
        .collect();
    let n = g.num_vertices();
    for i in 0..g.n_colors() {
        for j in i + 1..g.n_colors() {
            let mut seen = vec![false; n];
            for start in 0..n {
                if seen[start] {
                    continue;
                }
                let Some((vertices, edges)) = bicolor_walk(g, start, i, j) else {
                    seen[start] = true;
                    continue;
                };
                for &v in &vertices {
                    seen[v] = true;
                }
                let distinct = {
                    let mut s = vertices.clone();
                    s.sort_unstable();
                    s.dedup();
                    s.len()
                };
                if edges.len() != 4 || distinct != 4 {
                    violations.push(Violation::NotFourCycle { colors: (i, j), vertices });
                    continue;
                }
                let dashed = edges.iter().filter(|&&e| a.signs[e] < 0).count();
                if dashed % 2 == 0 {
                    violations.push(Violation::EvenCycle { colors: (i, j), vertices, dashed });
                }
            }
        }
    }
    for (idx, e) in g.edges().iter().enumerate() {
        if g.is_fermion(e.u) == g.is_fermion(e.v) {
            violations.push(Violation::NotBipartite { edge: idx, u: e.u, v: e.v });
        }
    }
    ValidationReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::standard_code;

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    #[test]
    fn one_cube_shape() {
        let a = hypercube_adinkra(1).unwrap();
        assert_eq!(a.num_vertices(), 2);
        assert_eq!(a.signs(), &[1]);
        assert!(a.validate().is_clean());
        assert_eq!(a.walk2_balance(0, 0), 1);
    }

    #[test]
    fn two_cube_has_one_dashed_edge() {
        let a = prism(&one_cube());
        assert_eq!(a.graph().edges().len(), 4);
        assert_eq!(a.signs().iter().filter(|&&s| s < 0).count(), 1);
        assert!(a.validate().is_clean());
    }

    #[test]
    fn prism_counts() {
        let a = hypercube_adinkra(3).unwrap();
        let p = prism(&a);
        assert_eq!(p.num_vertices(), 2 * a.num_vertices());
        assert_eq!(p.graph().edges().len(), 2 * a.graph().edges().len() + a.num_vertices());
    }

    #[test]
    fn three_cube_faces_are_odd() {
        let a = hypercube_adinkra(3).unwrap();
        assert_eq!(a.num_vertices(), 8);
        assert_eq!(a.graph().edges().len(), 12);
        assert!(a.validate().is_clean());
        assert!(a.graph().is_boson_first());
    }

    #[test]
    fn four_cube_bicolor_cycles_by_brute_force() {
        let a = hypercube_adinkra(4).unwrap();
        let g = a.graph();
        // enumerate 4-cycles directly from the edge list, per color pair
        let mut odd = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                let mut cycles = std::collections::BTreeSet::new();
                for v in 0..16 {
                    let e1 = g.edge_at(v, i).unwrap();
                    let w = g.edges()[e1].other(v);
                    let e2 = g.edge_at(w, j).unwrap();
                    let x = g.edges()[e2].other(w);
                    let e3 = g.edge_at(x, i).unwrap();
                    let y = g.edges()[e3].other(x);
                    let e4 = g.edge_at(y, j).unwrap();
                    assert_eq!(g.edges()[e4].other(y), v);
                    let mut es = vec![e1, e2, e3, e4];
                    es.sort();
                    cycles.insert(es);
                }
                assert_eq!(cycles.len(), 4);
                for es in cycles {
                    let dashed = es.iter().filter(|&&e| a.sign(e) < 0).count();
                    assert_eq!(dashed % 2, 1);
                    odd += 1;
                }
            }
        }
        assert_eq!(odd, 24);
    }

    #[test]
    fn flipping_one_edge_flags_n_minus_one_cycles() {
        let a = hypercube_adinkra(4).unwrap();
        let mut signs = a.signs().to_vec();
        signs[5] = -signs[5];
        let broken = Adinkra::new(a.graph().clone(), signs).unwrap();
        let report = broken.validate();
        assert_eq!(report.violations.len(), 3);
        assert!(report.violations.iter().all(|v| matches!(v, Violation::EvenCycle { .. })));
    }

    #[test]
    fn six_cycle_is_reported() {
        let labels: Vec<BitVector> = ["000", "001", "011", "010", "110", "111"].iter().map(|s| bv(s)).collect();
        let edges = (0..6).map(|i| Edge { u: i, v: (i + 1) % 6, color: i % 2 }).collect();
        let g = ColoredGraph::new(2, labels, edges).unwrap();
        let a = Adinkra::new(g, vec![-1, 1, 1, 1, 1, 1]).unwrap();
        let report = a.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::NotFourCycle { vertices, .. } if vertices.len() == 6)));
    }

    #[test]
    fn d4_quotient_is_k44() {
        let g = quotient_graph(4, &standard_code("d4").unwrap()).unwrap();
        assert_eq!(g.num_vertices(), 8);
        assert_eq!(g.edges().len(), 16);
        for b in 0..4 {
            for f in 4..8 {
                assert_eq!(g.edges().iter().filter(|e| e.u == b && e.v == f).count(), 1);
            }
        }
    }

    #[test]
    fn e8_quotient_is_k88() {
        let g = quotient_graph(8, &standard_code("e8").unwrap()).unwrap();
        assert_eq!(g.num_vertices(), 16);
        assert_eq!(g.edges().len(), 64);
        assert!(g.edges().iter().all(|e| e.u < 8 && e.v >= 8));
    }

    #[test]
    fn trivial_quotient_is_cube() {
        let g = quotient_graph(3, &BinaryCode::trivial(3)).unwrap();
        let cube = hypercube_adinkra(3).unwrap();
        assert_eq!(g.labels(), cube.graph().labels());
        assert_eq!(g.edges(), cube.graph().edges());
    }

    #[test]
    fn weight_two_words_rejected() {
        let c = BinaryCode::from_rows(4, &["1100"]).unwrap();
        assert!(quotient_graph(4, &c).is_err());
        let g = quotient_multigraph(4, &c).unwrap();
        assert_eq!(g.num_vertices(), 8);
        assert!(g.is_color_regular());
    }

    #[test]
    fn switching() {
        let a = hypercube_adinkra(3).unwrap();
        assert_eq!(a.vertex_switch(&[]).unwrap(), a);
        let all: Vec<usize> = (0..8).collect();
        assert_eq!(a.vertex_switch(&all).unwrap(), a);
        let s = a.vertex_switch(&[2]).unwrap();
        let flipped = a.signs().iter().zip(s.signs()).filter(|(x, y)| x != y).count();
        assert_eq!(flipped, 3);
        assert!(s.validate().is_clean());
    }

    #[test]
    fn walk_balance_is_n_times_identity() {
        let a = Adinkra::from_code(&standard_code("d4+t2").unwrap()).unwrap();
        for u in 0..a.num_vertices() {
            for v in 0..a.num_vertices() {
                let expected = if u == v { 6 } else { 0 };
                assert_eq!(a.walk2_balance(u, v), expected);
            }
        }
    }

    #[test]
    fn min_vertex_cases() {
        assert_eq!(min_vertices(5), 16);
        assert_eq!(min_vertices(4), 8);
        assert_eq!(min_vertices(8), 16);
        for n in 1..=32 {
            let k = crate::codes::max_doubly_even_dimension(n);
            assert_eq!(min_vertices(n), 1u128 << (n - k), "N = {n}");
        }
    }

    #[test]
    fn prism_of_d4_matches_d4_plus_t() {
        let d4 = Adinkra::from_code(&standard_code("d4").unwrap()).unwrap();
        let p = prism(&d4);
        let q = quotient_graph(5, &standard_code("d4+t").unwrap()).unwrap();
        assert!(p.validate().is_clean());
        assert_eq!(p.graph().labels(), q.labels());
        assert!(color_isomorphism(p.graph(), &q).is_some());
    }

    #[test]
    fn reorder_round_trip() {
        let a = Adinkra::from_code(&standard_code("d4").unwrap()).unwrap();
        let mut labels = a.graph().labels().to_vec();
        labels.reverse();
        let b = a.with_vertex_order(&labels).unwrap();
        assert!(b.validate().is_clean());
        assert_eq!(b.canonicalized(), a.canonicalized());
    }
}
