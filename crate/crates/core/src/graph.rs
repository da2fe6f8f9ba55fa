//! Four-colored graphs stored as four fixed-point-free involutions on the
//! vertex set, together with the basic combinatorics the rest of the crate
//! needs: connectivity, bipartition, bicolored cycles, residues and color
//! isomorphism.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type Color = usize;

pub const COLORS: [Color; 4] = [0, 1, 2, 3];

/// The six unordered color pairs, lower color first.
pub const COLOR_PAIRS: [(Color, Color); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// All 24 permutations of the color set, in lexicographic order.
pub fn color_permutations() -> Vec<[Color; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j])) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// A 4-regular multigraph with a proper edge coloring by `{0,1,2,3}`.
///
/// `adj[v][c]` is the vertex joined to `v` by its `c`-colored edge. Each
/// color map is a fixed-point-free involution; multiple edges between the
/// same pair of vertices are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    adj: Vec<[usize; 4]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub color: Color,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicoloredCycle {
    /// Color pair, lower color first. Traversal from `vertices[0]` uses
    /// `colors.0` first and then alternates.
    pub colors: (Color, Color),
    pub vertices: Vec<usize>,
}

impl BicoloredCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The colors used by each step of the traversal, paired with the
    /// vertex the step leaves from.
    pub fn steps(&self) -> impl Iterator<Item = (usize, Color)> + '_ {
        let (a, b) = self.colors;
        self.vertices
            .iter()
            .enumerate()
            .map(move |(k, &v)| (v, if k % 2 == 0 { a } else { b }))
    }
}

/// A connected component of the graph with one color deleted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residue {
    pub missing_color: Color,
    /// Sorted vertex indices of the ambient graph.
    pub vertices: Vec<usize>,
}

impl Residue {
    pub fn colors(&self) -> [Color; 3] {
        let mut out = [0; 3];
        let mut k = 0;
        for c in COLORS {
            if c != self.missing_color {
                out[k] = c;
                k += 1;
            }
        }
        out
    }

    /// The induced 3-colored graph on local indices `0..vertices.len()`,
    /// colors listed in increasing order with the missing one skipped.
    pub fn induced(&self, g: &ColoredGraph) -> Vec<[usize; 3]> {
        let colors = self.colors();
        self.vertices
            .iter()
            .map(|&v| {
                colors.map(|c| {
                    let w = g.neighbor(v, c);
                    self.vertices
                        .binary_search(&w)
                        .expect("residue is closed under its colors")
                })
            })
            .collect()
    }
}

impl ColoredGraph {
    /// Build from per-vertex adjacency rows, checking every color is a
    /// fixed-point-free involution.
    pub fn from_adjacency(adj: Vec<[usize; 4]>) -> Result<Self> {
        let n = adj.len();
        for (v, row) in adj.iter().enumerate() {
            for c in COLORS {
                let w = row[c];
                if w >= n || w == v || adj[w][c] != v {
                    return Err(Error::InvalidInvolution { color: c, vertex: v });
                }
            }
        }
        Ok(ColoredGraph { adj })
    }

    /// Build from four involutions given as vertex maps.
    pub fn from_involutions(inv: [Vec<usize>; 4]) -> Result<Self> {
        let n = inv[0].len();
        if inv.iter().any(|m| m.len() != n) {
            return Err(Error::InvalidInvolution { color: 0, vertex: n });
        }
        let adj = (0..n)
            .map(|v| [inv[0][v], inv[1][v], inv[2][v], inv[3][v]])
            .collect();
        Self::from_adjacency(adj)
    }

    /// The graph on two vertices joined by one edge of every color.
    pub fn dipole() -> Self {
        ColoredGraph {
            adj: vec![[1; 4], [0; 4]],
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.adj.len()
    }

    #[inline]
    pub fn neighbor(&self, v: usize, c: Color) -> usize {
        self.adj[v][c]
    }

    pub fn adjacency(&self) -> &[[usize; 4]] {
        &self.adj
    }

    pub fn involution(&self, c: Color) -> Vec<usize> {
        self.adj.iter().map(|row| row[c]).collect()
    }

    /// Component index of every vertex, numbered in order of first vertex.
    pub fn components(&self) -> (usize, Vec<usize>) {
        self.components_in(&COLORS)
    }

    fn components_in(&self, colors: &[Color]) -> (usize, Vec<usize>) {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &c in colors {
                    let w = self.adj[v][c];
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.components().0 == 1
    }

    /// Two-coloring witness: `Some(side)` with `side[v] == false` on the class
    /// of the lowest vertex of each component, or `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        self.bipartition_in(&COLORS, 0..self.order())
    }

    fn bipartition_in(
        &self,
        colors: &[Color],
        vertices: impl Iterator<Item = usize>,
    ) -> Option<Vec<bool>> {
        let n = self.order();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut stack = Vec::new();
        for s in vertices {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            stack.push(s);
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap();
                for &c in colors {
                    let w = self.adj[v][c];
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            stack.push(w);
                        }
                        Some(sw) if sw == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// The `{a,b}`-colored cycles, each starting at its lowest vertex and
    /// listed in order of that vertex.
    pub fn bicolored_cycles(&self, a: Color, b: Color) -> Vec<BicoloredCycle> {
        assert!(a != b && a < 4 && b < 4, "need two distinct colors");
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut vertices = Vec::new();
            let mut v = s;
            let mut step = 0;
            loop {
                seen[v] = true;
                vertices.push(v);
                v = self.adj[v][if step % 2 == 0 { a } else { b }];
                step += 1;
                if v == s && step % 2 == 0 {
                    break;
                }
            }
            out.push(BicoloredCycle {
                colors: (a, b),
                vertices,
            });
        }
        out
    }

    /// All bicolored cycles over the six color pairs.
    pub fn all_bicolored_cycles(&self) -> Vec<BicoloredCycle> {
        COLOR_PAIRS
            .iter()
            .flat_map(|&(a, b)| self.bicolored_cycles(a, b))
            .collect()
    }

    pub fn residues(&self, missing_color: Color) -> Vec<Residue> {
        assert!(missing_color < 4);
        let colors: Vec<Color> = COLORS.into_iter().filter(|&c| c != missing_color).collect();
        let (count, comp) = self.components_in(&colors);
        let mut buckets = vec![Vec::new(); count];
        for (v, &k) in comp.iter().enumerate() {
            buckets[k].push(v);
        }
        buckets
            .into_iter()
            .map(|vertices| Residue {
                missing_color,
                vertices,
            })
            .collect()
    }

    /// Whether the residue is bipartite in its own three colors.
    pub fn residue_is_bipartite(&self, r: &Residue) -> bool {
        self.bipartition_in(&r.colors(), r.vertices.iter().copied())
            .is_some()
    }

    pub fn disjoint_union(&self, other: &ColoredGraph) -> ColoredGraph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|row| row.map(|w| w + shift)));
        ColoredGraph { adj }
    }

    /// Rename vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> ColoredGraph {
        assert_eq!(perm.len(), self.order());
        let mut adj = vec![[0; 4]; self.order()];
        for (v, row) in self.adj.iter().enumerate() {
            adj[perm[v]] = row.map(|w| perm[w]);
        }
        ColoredGraph { adj }
    }

    /// The graph whose color `c` is this graph's color `perm[c]`.
    pub fn permute_colors(&self, perm: [Color; 4]) -> ColoredGraph {
        ColoredGraph {
            adj: self
                .adj
                .iter()
                .map(|row| [row[perm[0]], row[perm[1]], row[perm[2]], row[perm[3]]])
                .collect(),
        }
    }

    /// Every edge once, oriented from the class of vertex 0 to the other
    /// class when bipartite, otherwise from lower to higher index. Ordered
    /// by (tail, color).
    pub fn oriented_edges(&self) -> Vec<Edge> {
        let side = self.bipartition();
        let mut out = Vec::with_capacity(self.edge_count());
        for (v, row) in self.adj.iter().enumerate() {
            for c in COLORS {
                let w = row[c];
                let is_tail = match &side {
                    Some(side) if side[v] != side[w] => !side[v],
                    _ => v < w,
                };
                if is_tail {
                    out.push(Edge {
                        tail: v,
                        head: w,
                        color: c,
                    });
                }
            }
        }
        out.sort_by_key(|e| (e.tail, e.color));
        out
    }

    /// Breadth-first spanning forest; `true` marks edges (indices into
    /// `edges`) that belong to the forest.
    pub fn spanning_forest(&self, edges: &[Edge]) -> Vec<bool> {
        let n = self.order();
        let mut edge_of = vec![[usize::MAX; 4]; n];
        for (k, e) in edges.iter().enumerate() {
            edge_of[e.tail][e.color] = k;
            edge_of[e.head][e.color] = k;
        }
        let mut in_tree = vec![false; edges.len()];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for c in COLORS {
                    let w = self.adj[v][c];
                    if !seen[w] {
                        seen[w] = true;
                        in_tree[edge_of[v][c]] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        in_tree
    }
}

/// Try to extend `start1 -> start2` to a color-preserving bijection between
/// connected graphs, with `g2`'s colors read through `perm`.
fn extend_isomorphism(
    g1: &ColoredGraph,
    g2: &ColoredGraph,
    start1: usize,
    start2: usize,
    perm: [Color; 4],
) -> bool {
    let n = g1.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[start1] = start2;
    used[start2] = true;
    let mut stack = vec![start1];
    while let Some(v) = stack.pop() {
        let image = map[v];
        for c in COLORS {
            let w = g1.neighbor(v, c);
            let target = g2.neighbor(image, perm[c]);
            if map[w] == usize::MAX {
                if used[target] {
                    return false;
                }
                map[w] = target;
                used[target] = true;
                stack.push(w);
            } else if map[w] != target {
                return false;
            }
        }
    }
    true
}

/// Color isomorphism test: a vertex bijection together with a permutation of
/// the colors carrying `g1` onto `g2`.
pub fn are_isomorphic(g1: &ColoredGraph, g2: &ColoredGraph) -> Result<bool> {
    if !g1.is_connected() || !g2.is_connected() {
        return Err(Error::NotConnected);
    }
    if g1.order() != g2.order() {
        return Ok(false);
    }
    let perms = color_permutations();
    Ok((0..g2.order()).any(|s2| {
        perms
            .iter()
            .any(|&perm| extend_isomorphism(g1, g2, 0, s2, perm))
    }))
}
