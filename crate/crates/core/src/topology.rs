//! Invariants of the compact 3-manifold a 4-colored graph represents.
//!
//! Each residue missing color `c` is dual to a `c`-labeled vertex of the
//! associated pseudocomplex and, read as a 3-colored graph, represents that
//! vertex's link. Links other than spheres mark singular vertices, whose
//! removed neighborhoods form the boundary.
//!
//! First homology is read off the dual 2-complex: one 0-cell per graph
//! vertex, one 1-cell per edge and one 2-cell per bicolored cycle. The
//! manifold minus finitely many points deformation retracts onto it.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Residue, COLORS, COLOR_PAIRS};
use crate::snf::{smith_normal_form, IntMatrix};

/// A closed surface, classified by orientability and Euler characteristic.
/// `genus` counts handles when orientable and crosscaps otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SurfaceType {
    pub orientable: bool,
    pub euler: i64,
    pub genus: u64,
}

impl SurfaceType {
    pub fn from_euler(orientable: bool, euler: i64) -> Self {
        assert!(euler <= 2, "closed surfaces have euler characteristic <= 2");
        let genus = if orientable {
            assert!(euler % 2 == 0, "orientable surfaces have even euler characteristic");
            (2 - euler) / 2
        } else {
            assert!(euler < 2, "the sphere is orientable");
            2 - euler
        };
        SurfaceType {
            orientable,
            euler,
            genus: genus as u64,
        }
    }

    pub fn sphere() -> Self {
        Self::from_euler(true, 2)
    }

    pub fn torus() -> Self {
        Self::from_euler(true, 0)
    }

    pub fn is_sphere(&self) -> bool {
        self.euler == 2
    }

    pub fn is_torus(&self) -> bool {
        self.orientable && self.euler == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryProfile {
    /// One surface per singular vertex, in residue order (missing color,
    /// then lowest vertex).
    pub components: Vec<SurfaceType>,
    pub closed: bool,
}

impl BoundaryProfile {
    pub fn all_tori(&self) -> bool {
        self.components.iter().all(SurfaceType::is_torus)
    }
}

/// A finitely generated abelian group `Z^rank + Z/d1 + ... + Z/dk` with
/// `d1 | d2 | ... | dk`, every `di >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn trivial() -> Self {
        HomologyGroup {
            rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        HomologyGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        HomologyGroup {
            rank: 0,
            torsion: vec![order],
        }
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl std::fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// The closed surface a residue represents as a 2-dimensional colored graph:
/// Euler characteristic is (bicolored cycles) - (vertices)/2, orientable iff
/// the residue is bipartite.
pub fn link_surface(g: &ColoredGraph, r: &Residue) -> SurfaceType {
    let local = r.induced(g);
    let m = local.len();
    let mut cycles = 0i64;
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let mut seen = vec![false; m];
        for s in 0..m {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut v = s;
            loop {
                seen[v] = true;
                let w = local[v][a];
                seen[w] = true;
                v = local[w][b];
                if v == s {
                    break;
                }
            }
        }
    }
    SurfaceType::from_euler(g.residue_is_bipartite(r), cycles - m as i64 / 2)
}

/// Link surfaces of every residue, grouped by missing color.
pub fn vertex_links(g: &ColoredGraph) -> Vec<(Residue, SurfaceType)> {
    COLORS
        .iter()
        .flat_map(|&c| g.residues(c))
        .map(|r| {
            let s = link_surface(g, &r);
            (r, s)
        })
        .collect()
}

pub fn boundary_profile(g: &ColoredGraph) -> Result<BoundaryProfile> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let components: Vec<SurfaceType> = vertex_links(g)
        .into_iter()
        .map(|(_, s)| s)
        .filter(|s| !s.is_sphere())
        .collect();
    Ok(BoundaryProfile {
        closed: components.is_empty(),
        components,
    })
}

/// Rows are bicolored cycles, columns are edges off a spanning tree of the
/// graph; entry is the signed number of traversals of that edge.
pub(crate) fn cycle_relation_matrix(g: &ColoredGraph) -> (IntMatrix, Vec<usize>) {
    let edges = g.oriented_edges();
    let in_tree = g.spanning_forest(&edges);
    let mut column = vec![[usize::MAX; 4]; g.order()];
    let mut free_edges = Vec::new();
    for (k, e) in edges.iter().enumerate() {
        if !in_tree[k] {
            column[e.tail][e.color] = free_edges.len();
            free_edges.push(k);
        }
    }
    let cycles = g.all_bicolored_cycles();
    let mut m = IntMatrix::zeros(cycles.len(), free_edges.len());
    for (row, cyc) in cycles.iter().enumerate() {
        for (v, c) in cyc.steps() {
            let w = g.neighbor(v, c);
            let (tail, sign) = if column[v][c] != usize::MAX {
                (v, 1)
            } else {
                (w, -1)
            };
            let col = column[tail][c];
            if col != usize::MAX {
                m[(row, col)] += sign;
            }
        }
    }
    (m, free_edges)
}

pub fn first_homology(g: &ColoredGraph) -> Result<HomologyGroup> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let (m, _) = cycle_relation_matrix(g);
    let form = smith_normal_form(&m);
    let torsion = form
        .factors
        .iter()
        .filter(|d| !num_traits::One::is_one(*d))
        .map(|d| d.to_u64().expect("torsion coefficient fits in u64"))
        .collect();
    Ok(HomologyGroup {
        rank: m.cols() - form.rank,
        torsion,
    })
}

/// Every bicolored cycle has length exactly six.
pub fn is_six_regular(g: &ColoredGraph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(COLOR_PAIRS
        .iter()
        .all(|&(a, b)| g.bicolored_cycles(a, b).iter().all(|c| c.len() == 6)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GemComplexityReport {
    pub order: usize,
    pub closed: bool,
    /// `(order - 2) / 2`, an upper bound on the gem-complexity of a closed
    /// manifold.
    pub gem_complexity: Option<usize>,
    /// The order itself bounds the graph complexity from above.
    pub graph_complexity_upper: usize,
}

pub fn gem_complexity_report(g: &ColoredGraph) -> Result<GemComplexityReport> {
    let profile = boundary_profile(g)?;
    Ok(GemComplexityReport {
        order: g.order(),
        closed: profile.closed,
        gem_complexity: profile.closed.then(|| (g.order() - 2) / 2),
        graph_complexity_upper: g.order(),
    })
}

/// Combinatorial and homological summary of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub order: usize,
    pub bipartite: bool,
    pub closed: bool,
    pub boundary: Vec<SurfaceType>,
    pub h1: HomologyGroup,
    pub six_regular: bool,
}

pub fn invariants(g: &ColoredGraph) -> Result<Invariants> {
    let profile = boundary_profile(g)?;
    Ok(Invariants {
        order: g.order(),
        bipartite: g.is_bipartite(),
        closed: profile.closed,
        boundary: profile.components,
        h1: first_homology(g)?,
        six_regular: is_six_regular(g)?,
    })
}

/// One JSON line of the `invariants` report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub name: String,
    pub code: String,
    #[serde(flatten)]
    pub invariants: Invariants,
}

/// Euler characteristic of the pseudocomplex: residues - bicolored cycles
/// + edges - vertices of the graph (0-, 1-, 2-, 3-simplices respectively).
pub fn pseudocomplex_euler(g: &ColoredGraph) -> i64 {
    let residues: usize = COLORS.iter().map(|&c| g.residues(c).len()).sum();
    let cycles = g.all_bicolored_cycles().len();
    residues as i64 - cycles as i64 + g.edge_count() as i64 - g.order() as i64
}
