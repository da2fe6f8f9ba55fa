//! Cyclic coverings of 4-colored graphs built from voltage assignments.
//!
//! A voltage assignment puts an element of `Z_n` on every oriented edge of a
//! base graph. The derived graph has vertex set `V x Z_n`, with `(v, i)`
//! `c`-adjacent to `(inv_c(v), i + volt(v, c))`, and projects onto the base.
//! The projection is admissible (bijective on bicolored cycles) exactly
//! when every bicolored cycle of the base has zero holonomy.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BicoloredCycle, Color, ColoredGraph, COLORS, COLOR_PAIRS};
use crate::snf::smith_decomposition;
use crate::topology::cycle_relation_matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoltageAssignment {
    base: ColoredGraph,
    n: u32,
    volt: Vec<[u32; 4]>,
}

/// `(vertex, color, value)`: the voltage read leaving `vertex` along its
/// `color` edge.
pub type VoltageTriple = (usize, Color, u32);

impl VoltageAssignment {
    /// All voltages zero.
    pub fn trivial(base: ColoredGraph, n: u32) -> Self {
        assert!(n >= 1, "covering degree must be positive");
        let volt = vec![[0; 4]; base.order()];
        VoltageAssignment { base, n, volt }
    }

    /// Per-vertex voltages; must satisfy `volt(v,c) = -volt(inv_c(v), c)`
    /// modulo `n`, with every value reduced.
    pub fn new(base: ColoredGraph, n: u32, volt: Vec<[u32; 4]>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidVoltage("degree must be positive".into()));
        }
        if volt.len() != base.order() {
            return Err(Error::InvalidVoltage(format!(
                "expected {} rows, got {}",
                base.order(),
                volt.len()
            )));
        }
        for (v, row) in volt.iter().enumerate() {
            for c in COLORS {
                let w = base.neighbor(v, c);
                if row[c] >= n {
                    return Err(Error::InvalidVoltage(format!(
                        "value {} at ({v},{c}) not reduced mod {n}",
                        row[c]
                    )));
                }
                if (row[c] + volt[w][c]) % n != 0 {
                    return Err(Error::InvalidVoltage(format!(
                        "({v},{c}) and ({w},{c}) are not opposite"
                    )));
                }
            }
        }
        Ok(VoltageAssignment { base, n, volt })
    }

    /// Zero everywhere except the listed edges; each triple also fixes the
    /// reverse direction to the negated value.
    pub fn from_triples(base: ColoredGraph, n: u32, triples: &[VoltageTriple]) -> Result<Self> {
        let mut va = Self::trivial(base, n);
        for &(v, c, value) in triples {
            if v >= va.base.order() || c >= 4 {
                return Err(Error::InvalidVoltage(format!("no edge ({v},{c})")));
            }
            let value = value % n;
            let w = va.base.neighbor(v, c);
            va.volt[v][c] = value;
            va.volt[w][c] = (n - value) % n;
        }
        Ok(va)
    }

    pub fn base(&self) -> &ColoredGraph {
        &self.base
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn voltage(&self, v: usize, c: Color) -> u32 {
        self.volt[v][c]
    }

    /// One triple per edge of the base, oriented as
    /// [`ColoredGraph::oriented_edges`].
    pub fn edge_triples(&self) -> Vec<VoltageTriple> {
        self.base
            .oriented_edges()
            .into_iter()
            .map(|e| (e.tail, e.color, self.volt[e.tail][e.color]))
            .collect()
    }
}

/// Sum of voltages along one traversal of the cycle from its first vertex,
/// lower color first.
pub fn holonomy(va: &VoltageAssignment, cyc: &BicoloredCycle) -> u32 {
    let n = va.n as u64;
    let sum: u64 = cyc.steps().map(|(v, c)| va.volt[v][c] as u64).sum();
    (sum % n) as u32
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringMap {
    pub total: ColoredGraph,
    pub base: ColoredGraph,
    /// `projection[x]` is the base vertex under total vertex `x`.
    pub projection: Vec<usize>,
}

impl CoveringMap {
    pub fn identity(g: &ColoredGraph) -> Self {
        CoveringMap {
            total: g.clone(),
            base: g.clone(),
            projection: (0..g.order()).collect(),
        }
    }
}

/// Total vertex `(v, i)` has index `i * |V(base)| + v`.
pub fn derived_graph(va: &VoltageAssignment) -> (ColoredGraph, CoveringMap) {
    let k = va.base.order();
    let n = va.n as usize;
    let mut adj = vec![[0usize; 4]; k * n];
    for i in 0..n {
        for v in 0..k {
            for c in COLORS {
                let w = va.base.neighbor(v, c);
                let j = (i + va.volt[v][c] as usize) % n;
                adj[i * k + v][c] = j * k + w;
            }
        }
    }
    let total = ColoredGraph::from_adjacency(adj).expect("voltages are antisymmetric");
    let projection = (0..k * n).map(|x| x % k).collect();
    let map = CoveringMap {
        total: total.clone(),
        base: va.base.clone(),
        projection,
    };
    (total, map)
}

/// Checks adjacency preservation and uniform fibers, returning the degree.
pub fn verify_covering(cm: &CoveringMap) -> Result<usize> {
    let k = cm.base.order();
    if k == 0 || cm.projection.len() != cm.total.order() || cm.total.order() % k != 0 {
        return Err(Error::NonUniformFiber);
    }
    if cm.projection.iter().any(|&v| v >= k) {
        return Err(Error::NonUniformFiber);
    }
    for x in 0..cm.total.order() {
        for c in COLORS {
            let y = cm.total.neighbor(x, c);
            if cm.projection[y] != cm.base.neighbor(cm.projection[x], c) {
                return Err(Error::NotAdjacencyPreserving { vertex: x, color: c });
            }
        }
    }
    let degree = cm.total.order() / k;
    let mut fiber = vec![0usize; k];
    for &v in &cm.projection {
        fiber[v] += 1;
    }
    if fiber.iter().any(|&f| f != degree) {
        return Err(Error::NonUniformFiber);
    }
    Ok(degree)
}

/// Every bicolored cycle of the total graph has the length of its image.
pub fn is_admissible(cm: &CoveringMap) -> Result<bool> {
    verify_covering(cm)?;
    let mut base_len = vec![[0usize; 6]; cm.base.order()];
    for (k, &(a, b)) in COLOR_PAIRS.iter().enumerate() {
        for cyc in cm.base.bicolored_cycles(a, b) {
            for &v in &cyc.vertices {
                base_len[v][k] = cyc.len();
            }
        }
    }
    for (k, &(a, b)) in COLOR_PAIRS.iter().enumerate() {
        for cyc in cm.total.bicolored_cycles(a, b) {
            if cyc.len() != base_len[cm.projection[cyc.vertices[0]]][k] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Voltage assignments on `base` with zero holonomy around every bicolored
/// cycle and a connected derived graph, at most `limit` of them.
///
/// Spanning-tree edges carry voltage zero. The free voltages `x` solve
/// `R x = 0 (mod n)` for the cycle/edge relation matrix `R`; with
/// `U R V = D` in Smith form, `x = V y` where `d_i y_i = 0 (mod n)`.
/// Solutions are produced in lexicographic order of `y` and kept when their
/// values generate `Z_n`.
pub fn find_admissible_cyclic_coverings(
    base: &ColoredGraph,
    n: u32,
    limit: usize,
) -> Result<Vec<VoltageAssignment>> {
    if !base.is_connected() {
        return Err(Error::NotConnected);
    }
    if n == 0 {
        return Err(Error::InvalidVoltage("degree must be positive".into()));
    }
    let (relations, free_edges) = cycle_relation_matrix(base);
    let edges = base.oriented_edges();
    let dec = smith_decomposition(&relations);
    let m = free_edges.len();
    let nn = BigInt::from(n);
    // y_i ranges over multiples of step_i below n
    let steps: Vec<u64> = (0..m)
        .map(|i| match dec.form.factors.get(i) {
            Some(d) => (&nn / d.gcd(&nn)).to_u64().unwrap(),
            None => 1,
        })
        .collect();
    let v_mod: Vec<Vec<u64>> = (0..m)
        .map(|r| {
            (0..m)
                .map(|c| dec.col_transform[(r, c)].mod_floor(&nn).to_u64().unwrap())
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut counter = vec![0u64; m];
    let n64 = n as u64;
    loop {
        if out.len() >= limit {
            break;
        }
        let values: Vec<u64> = (0..m)
            .map(|r| {
                (0..m)
                    .map(|c| v_mod[r][c] * ((counter[c] * steps[c]) % n64) % n64)
                    .sum::<u64>()
                    % n64
            })
            .collect();
        let generated = values.iter().fold(n64, |g, &x| g.gcd(&x));
        if generated == 1 {
            let triples: Vec<VoltageTriple> = free_edges
                .iter()
                .zip(&values)
                .map(|(&k, &x)| (edges[k].tail, edges[k].color, x as u32))
                .collect();
            out.push(VoltageAssignment::from_triples(base.clone(), n, &triples)?);
        }
        // odometer, last coordinate fastest
        let mut pos = m;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            counter[pos] += 1;
            if counter[pos] * steps[pos] < n64 {
                break;
            }
            counter[pos] = 0;
        }
    }
    Ok(out)
}

/// Voltages on the edges off the base's spanning tree, the serialization
/// used in reports.
pub fn free_edge_triples(va: &VoltageAssignment) -> Vec<VoltageTriple> {
    let edges = va.base.oriented_edges();
    let in_tree = va.base.spanning_forest(&edges);
    edges
        .iter()
        .zip(in_tree)
        .filter(|(_, t)| !t)
        .map(|(e, _)| (e.tail, e.color, va.volt[e.tail][e.color]))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityBounds {
    pub degree: u32,
    pub tetrahedra: usize,
    pub base_order: usize,
    pub lower: usize,
    pub upper: usize,
    /// Order of the derived graph witnessing `upper`.
    pub witness_order: usize,
}

/// Two-sided graph complexity bounds `n*d <= c_g <= n*k` for an admissible
/// `n`-fold covering of a `k`-vertex graph whose manifold interior is built
/// from `d` regular ideal tetrahedra. The upper bound is witnessed by an
/// explicit covering found with [`find_admissible_cyclic_coverings`].
pub fn complexity_bounds_report(
    base: &ColoredGraph,
    tetrahedra: usize,
    n: u32,
) -> Result<ComplexityBounds> {
    let va = find_admissible_cyclic_coverings(base, n, 1)?
        .into_iter()
        .next()
        .ok_or(Error::NoAdmissibleCovering(n))?;
    let (total, map) = derived_graph(&va);
    let degree = verify_covering(&map)?;
    if !is_admissible(&map)? || !total.is_connected() {
        return Err(Error::NoAdmissibleCovering(n));
    }
    Ok(ComplexityBounds {
        degree: n,
        tetrahedra,
        base_order: base.order(),
        lower: degree * tetrahedra,
        upper: degree * base.order(),
        witness_order: total.order(),
    })
}
