//! Oracles shared by the integration tests. None of these go through the
//! library paths they are used to check.

#![allow(dead_code)]

use std::collections::BTreeMap;

use gemkit::code::{canonical_code, GemCode};
use gemkit::graph::ColoredGraph;
use rand::seq::SliceRandom;
use rand::Rng;

pub const GAMMA1: &str = "DABCFEFEABDCCDEFAB";
pub const GAMMA2: &str = "FABCDEDEFABCCDEFAB";
pub const GAMMA3: &str = "DABCFEFEDABCBCFEDA";

/// All permutations of `1..=p` as label vectors.
pub fn permutations(p: usize) -> Vec<Vec<u32>> {
    fn go(cur: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for j in 0..used.len() {
            if !used[j] {
                used[j] = true;
                cur.push(j as u32 + 1);
                go(cur, used, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; p], &mut out);
    out
}

/// Naive census: every block triple, connected ones bucketed by canonical
/// code. Returns class -> number of labeled codes in it.
pub fn naive_census(order: usize) -> BTreeMap<GemCode, usize> {
    let p = order / 2;
    let perms = permutations(p);
    let mut classes = BTreeMap::new();
    for a in &perms {
        for b in &perms {
            for c in &perms {
                let entries = a.iter().chain(b).chain(c).copied().collect();
                let g = GemCode::from_entries(entries).unwrap().to_graph();
                if !connected_by_union_find(&g) {
                    continue;
                }
                *classes.entry(canonical_code(&g).unwrap()).or_insert(0) += 1;
            }
        }
    }
    classes
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Number of connected components of the subgraph using only `colors`.
pub fn count_components(g: &ColoredGraph, colors: &[usize]) -> usize {
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    for v in 0..n {
        for &c in colors {
            let (a, b) = (find(&mut parent, v), find(&mut parent, g.neighbor(v, c)));
            parent[a] = b;
        }
    }
    (0..n).filter(|&v| find(&mut parent, v) == v).count()
}

pub fn connected_by_union_find(g: &ColoredGraph) -> bool {
    count_components(g, &[0, 1, 2, 3]) == 1
}

/// A uniformly random vertex relabeling composed with a random color
/// permutation.
pub fn random_relabel<R: Rng>(g: &ColoredGraph, rng: &mut R) -> ColoredGraph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    let mut colors = [0, 1, 2, 3];
    colors.shuffle(rng);
    g.relabel(&perm).permute_colors(colors)
}

fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Invariant factors from determinantal divisors: `D_k` is the gcd of all
/// `k x k` minors and `d_k = D_k / D_{k-1}`.
pub fn invariant_factors_by_minors(m: &[Vec<i64>]) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = 1i128;
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut dk = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| m[i][j] as i128).collect())
                    .collect();
                dk = gcd(dk, det(&minor));
            }
        }
        if dk == 0 {
            break;
        }
        out.push(dk / prev);
        prev = dk;
    }
    out
}

/// Rank over the rationals by fraction-free elimination.
pub fn rational_rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let (x, y) = (a[rank][c], a[r][c]);
                for k in 0..cols {
                    a[r][k] = a[r][k] * x - a[rank][k] * y;
                }
                let g = a[r].iter().fold(0, |g, &v| gcd(g, v));
                if g > 1 {
                    a[r].iter_mut().for_each(|v| *v /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn determinant(m: &[Vec<i64>]) -> i128 {
    let m: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    det(&m)
}

pub fn random_matrix<R: Rng>(rng: &mut R) -> Vec<Vec<i64>> {
    let rows = rng.gen_range(1..=4);
    let cols = rng.gen_range(1..=4);
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-5..=5)).collect())
        .collect()
}

/// Rank of an integer matrix over `GF(q)`, `q` prime.
pub fn rank_mod(m: &[Vec<i64>], q: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(q)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let inverse = |x: i64| {
        // Fermat
        let (mut base, mut e, mut acc) = (x as i128, q - 2, 1i128);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % q as i128;
            }
            base = base * base % q as i128;
            e >>= 1;
        }
        acc as i64
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let inv = inverse(a[rank][c]);
        for k in 0..cols {
            a[rank][k] = (a[rank][k] as i128 * inv as i128 % q as i128) as i64;
        }
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                for k in 0..cols {
                    let t = (a[r][k] as i128 - f as i128 * a[rank][k] as i128).rem_euclid(q as i128);
                    a[r][k] = t as i64;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Boundary matrices of the dual 2-complex (vertices, edges, bicolored
/// cycles), every edge oriented from its lower endpoint (ties broken by
/// color). Returns (d1: V x E, d2: E x F).
pub fn dual_boundaries(g: &ColoredGraph) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = g.order();
    let mut edges = Vec::new();
    let mut index = vec![[usize::MAX; 4]; n];
    for v in 0..n {
        for c in 0..4 {
            let w = g.neighbor(v, c);
            if v < w {
                index[v][c] = edges.len();
                index[w][c] = edges.len();
                edges.push((v, w));
            }
        }
    }
    let mut d1 = vec![vec![0i64; edges.len()]; n];
    for (k, &(v, w)) in edges.iter().enumerate() {
        d1[v][k] -= 1;
        d1[w][k] += 1;
    }
    let mut cols: Vec<Vec<i64>> = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            let mut seen = vec![false; n];
            for s in 0..n {
                if seen[s] {
                    continue;
                }
                let mut col = vec![0i64; edges.len()];
                let (mut v, mut color) = (s, a);
                loop {
                    seen[v] = true;
                    let w = g.neighbor(v, color);
                    let k = index[v][color];
                    col[k] += if v < w { 1 } else { -1 };
                    v = w;
                    color = if color == a { b } else { a };
                    if v == s && color == a {
                        break;
                    }
                }
                cols.push(col);
            }
        }
    }
    let d2 = (0..edges.len())
        .map(|k| cols.iter().map(|c| c[k]).collect())
        .collect();
    (d1, d2)
}

/// `dim H_1(X; GF(q))` of the dual 2-complex.
pub fn h1_dimension_mod(g: &ColoredGraph, q: i64) -> usize {
    let (d1, d2) = dual_boundaries(g);
    let e = d1.first().map_or(0, Vec::len);
    e - rank_mod(&d1, q) - rank_mod(&d2, q)
}
