//! The string code of a bipartite 4-colored graph with `2p` vertices.
//!
//! Vertices are labeled `-p..-1` and `+1..+p`, with `-i` and `+i` joined by
//! color 0. For `c` in `1..=3` and `i` in `1..=p`, entry `(c-1)p + i` of the
//! code is the positive label of the vertex `c`-adjacent to `-i`. Up to 26
//! positive labels are written as the capitals `A..Z`; larger graphs use
//! comma-separated decimal labels with the same block layout.
//!
//! Parsed graphs put `-i` at index `i-1` and `+i` at index `p+i-1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{color_permutations, Color, ColoredGraph};

/// Largest `p` representable with letter codes.
pub const LETTER_CAP: usize = 26;

/// A code as its sequence of 1-based positive labels, length `3p`.
///
/// Ordering is lexicographic on the labels, which for letter codes of equal
/// length agrees with string ordering.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GemCode {
    entries: Vec<u32>,
}

impl GemCode {
    pub fn from_entries(entries: Vec<u32>) -> Result<Self> {
        let p = entries.len() / 3;
        if entries.is_empty() || entries.len() % 3 != 0 {
            return Err(Error::BadLength(entries.len()));
        }
        if let Some(pos) = entries.iter().position(|&e| e == 0 || e as usize > p) {
            return Err(Error::BadChar {
                pos,
                ch: char::from_digit(entries[pos] % 10, 10).unwrap_or('?'),
            });
        }
        for block in 0..3 {
            let mut seen = vec![false; p + 1];
            for &e in &entries[block * p..(block + 1) * p] {
                if std::mem::replace(&mut seen[e as usize], true) {
                    return Err(Error::NotInvolution { block: block + 1 });
                }
            }
        }
        Ok(GemCode { entries })
    }

    /// Half the graph order.
    pub fn p(&self) -> usize {
        self.entries.len() / 3
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Block `c` (1..=3) as a 0-based permutation `i -> j` meaning `-(i+1)`
    /// is `c`-adjacent to `+(j+1)`.
    pub fn block(&self, c: Color) -> impl Iterator<Item = usize> + '_ {
        let p = self.p();
        self.entries[(c - 1) * p..c * p]
            .iter()
            .map(|&e| e as usize - 1)
    }

    pub fn to_graph(&self) -> ColoredGraph {
        let p = self.p();
        let mut adj = vec![[0usize; 4]; 2 * p];
        for i in 0..p {
            adj[i][0] = p + i;
            adj[p + i][0] = i;
        }
        for c in 1..4 {
            for (i, j) in self.block(c).enumerate() {
                adj[i][c] = p + j;
                adj[p + j][c] = i;
            }
        }
        ColoredGraph::from_adjacency(adj).expect("blocks are permutations")
    }
}

impl fmt::Display for GemCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p() <= LETTER_CAP {
            for &e in &self.entries {
                write!(f, "{}", (b'A' + (e - 1) as u8) as char)?;
            }
        } else {
            for (k, e) in self.entries.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for GemCode {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        if text.contains(',') {
            return parse_numeric(text);
        }
        let len = text.chars().count();
        if len == 0 || len % 3 != 0 {
            return Err(Error::BadLength(len));
        }
        let p = len / 3;
        let mut entries = Vec::with_capacity(len);
        for (pos, ch) in text.chars().enumerate() {
            // lower case names a negative vertex, which only occurs in codes
            // of non-bipartite graphs
            if !ch.is_ascii_uppercase() || (ch as usize - 'A' as usize) >= p {
                return Err(Error::BadChar { pos, ch });
            }
            entries.push(ch as u32 - 'A' as u32 + 1);
        }
        GemCode::from_entries(entries)
    }
}

fn parse_numeric(text: &str) -> Result<GemCode> {
    let fields: Vec<&str> = text.split(',').collect();
    if fields.len() % 3 != 0 {
        return Err(Error::BadLength(fields.len()));
    }
    let p = fields.len() / 3;
    let mut entries = Vec::with_capacity(fields.len());
    let mut pos = 0;
    for field in fields {
        match field.parse::<u32>() {
            Ok(e) if e >= 1 && e as usize <= p => entries.push(e),
            _ => {
                let ch = field.chars().next().unwrap_or(',');
                return Err(Error::BadChar { pos, ch });
            }
        }
        pos += field.len() + 1;
    }
    GemCode::from_entries(entries)
}

/// Parse a letter or numeric code into its bipartite graph.
pub fn parse_code(text: &str) -> Result<ColoredGraph> {
    Ok(text.parse::<GemCode>()?.to_graph())
}

/// Signed vertex labels: `labels[v]` is in `-p..=-1` or `1..=p`.
pub type Labeling = Vec<i32>;

/// The labeling a parsed graph carries: index `i < p` is `-(i+1)`,
/// index `p + i` is `+(i+1)`.
pub fn identity_labeling(order: usize) -> Labeling {
    let p = (order / 2) as i32;
    (0..order as i32)
        .map(|v| if v < p { -(v + 1) } else { v - p + 1 })
        .collect()
}

/// Write the code of `g` under `labels`.
pub fn emit_code(g: &ColoredGraph, labels: &[i32]) -> Result<GemCode> {
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let n = g.order();
    if labels.len() != n || n % 2 != 0 || n == 0 {
        return Err(Error::LabelingInvalid(format!(
            "expected {n} labels for an even order graph"
        )));
    }
    let p = n / 2;
    let mut neg_vertex = vec![usize::MAX; p];
    let mut pos_seen = vec![false; p];
    for (v, &l) in labels.iter().enumerate() {
        let idx = l.unsigned_abs() as usize;
        if l == 0 || idx > p {
            return Err(Error::LabelingInvalid(format!("label {l} out of range")));
        }
        let reused = if l < 0 {
            std::mem::replace(&mut neg_vertex[idx - 1], v) != usize::MAX
        } else {
            std::mem::replace(&mut pos_seen[idx - 1], true)
        };
        if reused {
            return Err(Error::LabelingInvalid(format!("label {l} used twice")));
        }
    }
    for (i, &v) in neg_vertex.iter().enumerate() {
        if (0..4).any(|c| labels[g.neighbor(v, c)] < 0) {
            return Err(Error::LabelingInvalid(format!(
                "-{} is adjacent to a negative label",
                i + 1
            )));
        }
        if labels[g.neighbor(v, 0)] != i as i32 + 1 {
            return Err(Error::LabelingInvalid(format!(
                "-{} and +{} are not 0-adjacent",
                i + 1,
                i + 1
            )));
        }
    }
    let mut entries = Vec::with_capacity(3 * p);
    for c in 1..4 {
        for &v in &neg_vertex {
            entries.push(labels[g.neighbor(v, c)] as u32);
        }
    }
    GemCode::from_entries(entries)
}

/// Breadth-first labeling from `start` (which becomes `-1`) with colors read
/// through `perm`, written straight into `out` as a code. Returns `false`
/// if the traversal does not reach every vertex or meets an edge inside one
/// class.
///
/// `label`, `negs` are scratch buffers of length at least `g.order()`.
pub(crate) fn bfs_code_into(
    g: &ColoredGraph,
    start: usize,
    perm: &[Color; 4],
    label: &mut [i32],
    negs: &mut Vec<usize>,
    out: &mut [u32],
) -> bool {
    let n = g.order();
    let p = n / 2;
    label[..n].iter_mut().for_each(|l| *l = 0);
    negs.clear();
    let adj = g.adjacency();
    label[start] = -1;
    label[adj[start][perm[0]]] = 1;
    negs.push(start);
    let mut next = 2;
    let mut i = 0;
    while i < negs.len() {
        let v = negs[i];
        for &pc in &perm[1..] {
            let u = adj[v][pc];
            match label[u] {
                0 => {
                    let partner = adj[u][perm[0]];
                    label[u] = next;
                    label[partner] = -next;
                    negs.push(partner);
                    next += 1;
                }
                l if l < 0 => return false,
                _ => {}
            }
        }
        i += 1;
    }
    if negs.len() != p {
        return false;
    }
    for c in 1..4 {
        let pc = perm[c];
        for (i, &v) in negs.iter().enumerate() {
            out[(c - 1) * p + i] = label[adj[v][pc]] as u32;
        }
    }
    true
}

/// Lexicographically least code over every breadth-first labeling (each
/// vertex as `-1`) and every permutation of the colors. Two connected
/// bipartite graphs are color-isomorphic iff their canonical codes agree.
pub fn canonical_code(g: &ColoredGraph) -> Result<GemCode> {
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.order();
    let p = n / 2;
    let mut label = vec![0; n];
    let mut negs = Vec::with_capacity(p);
    let mut best = vec![u32::MAX; 3 * p];
    let mut cand = vec![0; 3 * p];
    for perm in color_permutations() {
        for start in 0..n {
            if bfs_code_into(g, start, &perm, &mut label, &mut negs, &mut cand) && cand < best {
                best.copy_from_slice(&cand);
            }
        }
    }
    Ok(GemCode { entries: best })
}

/// Whether `code` is its own canonical code. Stops at the first labeling
/// that beats it.
pub fn is_canonical(code: &GemCode) -> bool {
    let g = code.to_graph();
    let n = g.order();
    let p = n / 2;
    let mut label = vec![0; n];
    let mut negs = Vec::with_capacity(p);
    let mut cand = vec![0; 3 * p];
    for perm in color_permutations() {
        for start in 0..n {
            if bfs_code_into(&g, start, &perm, &mut label, &mut negs, &mut cand)
                && cand.as_slice() < code.entries()
            {
                return false;
            }
        }
    }
    true
}

/// One record of a code file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeRecord {
    /// 1-based line number in the source text.
    pub line: usize,
    pub name: Option<String>,
    pub code: String,
}

/// Split code-file text into records: one code per line with an optional
/// `name<TAB>` prefix; blank lines and lines starting with `#` are skipped.
/// Codes are returned unparsed so callers can report per-line errors.
pub fn read_code_records(text: &str) -> Vec<CodeRecord> {
    text.lines()
        .enumerate()
        .filter_map(|(k, raw)| {
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if line.trim().is_empty() || line.starts_with('#') {
                return None;
            }
            let (name, code) = match line.split_once('\t') {
                Some((name, code)) => (Some(name.to_string()), code),
                None => (None, line),
            };
            Some(CodeRecord {
                line: k + 1,
                name,
                code: code.to_string(),
            })
        })
        .collect()
}
