//! Censuses of connected bipartite 4-colored graphs up to color isomorphism.
//!
//! Every canonical code is produced by a breadth-first labeling, so it is
//! reproduced by the breadth-first labeling from `-1` with the colors in
//! their own order. The generator walks exactly those codes: processing
//! `-1, -2, ...` in turn and colors 1, 2, 3 for each, the `c`-neighbor is
//! either an already labeled positive vertex not yet used in block `c` or
//! the next fresh label. Leaves are kept when they are canonical.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{canonical_code, is_canonical, parse_code, GemCode};
use crate::corpus::Table1Row;
use crate::error::{Error, Result};
use crate::topology::{boundary_profile, first_homology, invariants, HomologyGroup, Invariants, SurfaceType};

pub const CENSUS_FORMAT_HEADER: &str = "#gemkit-census v1";

/// Exhaustive enumeration is capped at this order unless the long run is
/// requested.
pub const DEFAULT_ORDER_CAP: usize = 10;
pub const LONG_RUN_ORDER_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CensusOptions {
    /// Allow order 12.
    pub long_run: bool,
}

impl CensusOptions {
    pub fn order_cap(&self) -> usize {
        if self.long_run {
            LONG_RUN_ORDER_CAP
        } else {
            DEFAULT_ORDER_CAP
        }
    }
}

impl fmt::Display for CensusOptions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("bipartite,connected")?;
        if self.long_run {
            f.write_str(",long-run")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub canonical: String,
    pub order: usize,
    pub invariants: Invariants,
}

struct Search {
    p: usize,
    blocks: [Vec<u32>; 3],
    used: [Vec<bool>; 3],
    /// Whether the choice at each position introduced a fresh label.
    fresh: Vec<bool>,
    next: usize,
}

impl Search {
    fn new(p: usize) -> Self {
        Search {
            p,
            blocks: std::array::from_fn(|_| vec![0; p]),
            used: std::array::from_fn(|_| vec![false; p]),
            fresh: vec![false; 3 * p],
            next: 1,
        }
    }

    /// Choices for code position `pos` (vertex `pos / 3`, color
    /// `pos % 3 + 1`), or none if the vertex has not been reached.
    fn choices(&self, pos: usize) -> Vec<usize> {
        let (i, b) = (pos / 3, pos % 3);
        if i >= self.next {
            return Vec::new();
        }
        let mut out: Vec<usize> = (0..self.next).filter(|&j| !self.used[b][j]).collect();
        if self.next < self.p {
            out.push(self.next);
        }
        out
    }

    fn push(&mut self, pos: usize, j: usize) {
        let (i, b) = (pos / 3, pos % 3);
        self.blocks[b][i] = j as u32 + 1;
        self.used[b][j] = true;
        self.fresh[pos] = j == self.next;
        if self.fresh[pos] {
            self.next += 1;
        }
    }

    fn pop(&mut self, pos: usize, j: usize) {
        let (i, b) = (pos / 3, pos % 3);
        self.blocks[b][i] = 0;
        self.used[b][j] = false;
        if std::mem::take(&mut self.fresh[pos]) {
            self.next -= 1;
        }
    }

    fn code(&self) -> GemCode {
        let entries = self.blocks.iter().flatten().copied().collect();
        GemCode::from_entries(entries).expect("search fills permutations")
    }

    fn walk(&mut self, pos: usize, out: &mut Vec<GemCode>) {
        if pos == 3 * self.p {
            let code = self.code();
            if is_canonical(&code) {
                out.push(code);
            }
            return;
        }
        for j in self.choices(pos) {
            self.push(pos, j);
            self.walk(pos + 1, out);
            self.pop(pos, j);
        }
    }
}

/// All `(prefix choices)` for the first `depth` positions.
fn prefixes(p: usize, depth: usize) -> Vec<Vec<usize>> {
    fn go(s: &mut Search, pos: usize, depth: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == depth.min(3 * s.p) {
            out.push(cur.clone());
            return;
        }
        for j in s.choices(pos) {
            s.push(pos, j);
            cur.push(j);
            go(s, pos + 1, depth, cur, out);
            cur.pop();
            s.pop(pos, j);
        }
    }
    let mut out = Vec::new();
    go(&mut Search::new(p), 0, depth, &mut Vec::new(), &mut out);
    out
}

fn check_order(order: usize, opts: CensusOptions) -> Result<usize> {
    if order == 0 || order % 2 != 0 {
        return Err(Error::BadOrder(order));
    }
    if order > opts.order_cap() {
        return Err(Error::CapExceeded {
            order,
            cap: opts.order_cap(),
        });
    }
    Ok(order / 2)
}

/// Canonical codes of every connected bipartite 4-colored graph of the
/// given order, one per color-isomorphism class, sorted.
pub fn enumerate_codes(order: usize, opts: CensusOptions) -> Result<Vec<GemCode>> {
    let p = check_order(order, opts)?;
    let work = prefixes(p, 6);
    let mut codes: Vec<GemCode> = work
        .par_iter()
        .flat_map_iter(|prefix| {
            let mut s = Search::new(p);
            for (pos, &j) in prefix.iter().enumerate() {
                s.push(pos, j);
            }
            let mut out = Vec::new();
            s.walk(prefix.len(), &mut out);
            out
        })
        .collect();
    codes.sort();
    Ok(codes)
}

/// [`enumerate_codes`] with every entry classified.
pub fn enumerate_gems(order: usize, opts: CensusOptions) -> Result<Vec<CensusEntry>> {
    enumerate_codes(order, opts)?
        .par_iter()
        .map(classify)
        .collect()
}

pub fn classify(code: &GemCode) -> Result<CensusEntry> {
    let g = code.to_graph();
    Ok(CensusEntry {
        canonical: code.to_string(),
        order: g.order(),
        invariants: invariants(&g)?,
    })
}

pub fn census_header(order: usize, opts: CensusOptions) -> String {
    format!("{CENSUS_FORMAT_HEADER}\n#order={order}\n#opts={opts}\n")
}

pub fn census_line(entry: &CensusEntry) -> String {
    let json = serde_json::to_string(&entry.invariants).expect("invariants serialize");
    format!("{}\t{json}", entry.canonical)
}

/// Parse the body lines of a census file (header lines are skipped).
pub fn parse_census_lines(text: &str) -> std::result::Result<Vec<CensusEntry>, String> {
    text.lines()
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (code, json) = l.split_once('\t').ok_or_else(|| format!("missing tab: {l}"))?;
            let invariants: Invariants = serde_json::from_str(json).map_err(|e| e.to_string())?;
            Ok(CensusEntry {
                canonical: code.to_string(),
                order: invariants.order,
                invariants,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowCheck {
    pub name: String,
    pub code: String,
    pub passed: bool,
    pub boundary_components: usize,
    pub all_tori: bool,
    pub h1: Option<HomologyGroup>,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Report {
    pub rows: Vec<RowCheck>,
    pub distinct_canonical: usize,
    pub passed: bool,
}

fn check_row(row: &Table1Row) -> (RowCheck, Option<GemCode>) {
    let mut check = RowCheck {
        name: row.name.clone(),
        code: row.code.clone(),
        passed: false,
        boundary_components: 0,
        all_tori: false,
        h1: None,
        failures: Vec::new(),
    };
    let g = match parse_code(&row.code) {
        Ok(g) => g,
        Err(e) => {
            check.failures.push(format!("parse: {e}"));
            return (check, None);
        }
    };
    if g.order() != 14 {
        check.failures.push(format!("order {} != 14", g.order()));
    }
    if !g.is_bipartite() {
        check.failures.push("not bipartite".into());
    }
    if !g.is_connected() {
        check.failures.push("not connected".into());
        return (check, None);
    }
    let profile = boundary_profile(&g).expect("connected");
    check.boundary_components = profile.components.len();
    check.all_tori = profile.all_tori();
    if check.boundary_components != row.boundary_components {
        check.failures.push(format!(
            "{} boundary components, expected {}",
            check.boundary_components, row.boundary_components
        ));
    }
    if !check.all_tori {
        check.failures.push("boundary component other than a torus".into());
    }
    let h1 = first_homology(&g).expect("connected");
    if row.is_link_complement() && h1 != HomologyGroup::free(row.boundary_components) {
        check.failures.push(format!(
            "H1 = {h1}, expected Z^{} for a link exterior",
            row.boundary_components
        ));
    }
    check.h1 = Some(h1);
    let canon = canonical_code(&g).ok();
    check.passed = check.failures.is_empty();
    (check, canon)
}

/// Check each row's order, bipartiteness, connectivity, toric boundary
/// count and (for link complements) free first homology of rank `k`, and
/// that all canonical codes are distinct.
pub fn verify_table1(rows: &[Table1Row]) -> Table1Report {
    let checked: Vec<(RowCheck, Option<GemCode>)> = rows.par_iter().map(check_row).collect();
    let distinct: HashSet<&GemCode> = checked.iter().filter_map(|(_, c)| c.as_ref()).collect();
    let distinct_canonical = distinct.len();
    let rows: Vec<RowCheck> = checked.into_iter().map(|(r, _)| r).collect();
    let passed = rows.iter().all(|r| r.passed) && distinct_canonical == rows.len();
    Table1Report {
        rows,
        distinct_canonical,
        passed,
    }
}

/// Invariants a probe searches for. An empty boundary means closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantTarget {
    pub boundary: Vec<SurfaceType>,
    pub h1: HomologyGroup,
}

impl InvariantTarget {
    pub fn closed(h1: HomologyGroup) -> Self {
        InvariantTarget {
            boundary: Vec::new(),
            h1,
        }
    }

    pub fn matches(&self, inv: &Invariants) -> bool {
        if inv.h1 != self.h1 || inv.boundary.len() != self.boundary.len() {
            return false;
        }
        let mut a = inv.boundary.clone();
        let mut b = self.boundary.clone();
        a.sort();
        b.sort();
        a == b
    }
}

/// Smallest order at most `max_order` with a census entry matching
/// `target`. Homeomorphic manifolds share these invariants, so `None`
/// proves the graph complexity of any manifold with them exceeds
/// `max_order`.
pub fn minimality_probe(
    target: &InvariantTarget,
    max_order: usize,
    opts: CensusOptions,
) -> Result<Option<usize>> {
    if max_order > opts.order_cap() {
        return Err(Error::CapExceeded {
            order: max_order,
            cap: opts.order_cap(),
        });
    }
    for order in (2..=max_order).step_by(2) {
        let found = enumerate_gems(order, opts)?
            .iter()
            .any(|e| target.matches(&e.invariants));
        if found {
            return Ok(Some(order));
        }
    }
    Ok(None)
}
