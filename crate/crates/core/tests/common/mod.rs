//! Brute-force reference implementations over dense adjacency matrices.
//! They share no code path with the library beyond `Graph` accessors.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use topolens::Graph;

pub type Matrix = Vec<Vec<bool>>;

/// Seeded G(n, p) edge list built directly from coin flips.
pub fn random_edges(seed: u64, max_n: usize) -> (usize, Vec<(usize, usize)>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_n);
    let p = rng.gen_range(0.05..0.6);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    (n, edges)
}

pub fn matrix(n: usize, edges: &[(usize, usize)]) -> Matrix {
    let mut m = vec![vec![false; n]; n];
    for &(u, v) in edges {
        if u != v {
            m[u][v] = true;
            m[v][u] = true;
        }
    }
    m
}

pub fn matrix_of(g: &Graph) -> Matrix {
    let edges: Vec<_> = g.edges().collect();
    matrix(g.node_count(), &edges)
}

pub fn degrees(m: &Matrix) -> Vec<usize> {
    m.iter().map(|row| row.iter().filter(|&&b| b).count()).collect()
}

/// Literal term-by-term evaluation of the assortativity formula.
pub fn assortativity(m: &Matrix) -> Option<f64> {
    let k = degrees(m);
    let n = m.len();
    let mut terms = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if m[i][j] {
                terms.push((k[i] as f64, k[j] as f64));
            }
        }
    }
    if terms.is_empty() {
        return None;
    }
    let l = terms.len() as f64;
    let a: f64 = terms.iter().map(|(j, k)| j * k).sum::<f64>() / l;
    let b: f64 = terms.iter().map(|(j, k)| 0.5 * (j + k)).sum::<f64>() / l;
    let c: f64 = terms.iter().map(|(j, k)| 0.5 * (j * j + k * k)).sum::<f64>() / l;
    let den = c - b * b;
    if den.abs() < 1e-12 {
        None
    } else {
        Some((a - b * b) / den)
    }
}

/// k -> mean over k-degree nodes of their mean neighbour degree.
pub fn knn(m: &Matrix) -> BTreeMap<usize, f64> {
    let k = degrees(m);
    let mut acc: BTreeMap<usize, (f64, usize)> = BTreeMap::new();
    for i in 0..m.len() {
        if k[i] == 0 {
            continue;
        }
        let total: usize = (0..m.len()).filter(|&j| m[i][j]).map(|j| k[j]).sum();
        let e = acc.entry(k[i]).or_insert((0.0, 0));
        e.0 += total as f64 / k[i] as f64;
        e.1 += 1;
    }
    acc.into_iter().map(|(k, (s, c))| (k, s / c as f64)).collect()
}

/// Local clustering by explicit triangle enumeration.
pub fn clustering(m: &Matrix) -> Vec<Option<f64>> {
    let k = degrees(m);
    let n = m.len();
    (0..n)
        .map(|v| {
            if k[v] < 2 {
                return None;
            }
            let mut t = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if m[v][a] && m[v][b] && m[a][b] {
                        t += 1;
                    }
                }
            }
            Some(2.0 * t as f64 / (k[v] * (k[v] - 1)) as f64)
        })
        .collect()
}

/// (N>=k, E>=k, phi) for every observed degree k.
pub fn rich_club(m: &Matrix) -> BTreeMap<usize, (usize, usize, Option<f64>)> {
    let k = degrees(m);
    let n = m.len();
    let mut out = BTreeMap::new();
    for &kk in &k {
        let members: Vec<usize> = (0..n).filter(|&i| k[i] >= kk).collect();
        let links = link_count(m, &members);
        let nn = members.len();
        let phi = (nn > 1).then(|| 2.0 * links as f64 / (nn * (nn - 1)) as f64);
        out.insert(kk, (nn, links, phi));
    }
    out
}

/// Links with both endpoints in `set`, by double loop.
pub fn link_count(m: &Matrix, set: &[usize]) -> usize {
    let mut c = 0;
    for (a, &u) in set.iter().enumerate() {
        for &v in &set[a + 1..] {
            if m[u][v] {
                c += 1;
            }
        }
    }
    c
}

pub const INF: usize = usize::MAX / 4;

pub fn floyd_warshall(m: &Matrix) -> Vec<Vec<usize>> {
    let n = m.len();
    let mut d = vec![vec![INF; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for j in 0..n {
            if m[i][j] {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Nodes of the largest component (ties: the one holding the smallest id),
/// read off the all-pairs distance matrix.
pub fn giant_nodes(d: &[Vec<usize>], alive: &[bool]) -> Vec<usize> {
    let n = d.len();
    let mut best: Vec<usize> = Vec::new();
    let mut seen = vec![false; n];
    for s in 0..n {
        if !alive[s] || seen[s] {
            continue;
        }
        let comp: Vec<usize> = (0..n).filter(|&t| alive[t] && d[s][t] < INF).collect();
        for &t in &comp {
            seen[t] = true;
        }
        if comp.len() > best.len() {
            best = comp;
        }
    }
    best
}

/// Histogram of pairwise distances among `nodes`, each unordered pair once.
pub fn distance_histogram(d: &[Vec<usize>], nodes: &[usize]) -> BTreeMap<u32, u64> {
    let mut h = BTreeMap::new();
    for (a, &u) in nodes.iter().enumerate() {
        for &v in &nodes[a + 1..] {
            *h.entry(d[u][v] as u32).or_insert(0) += 1;
        }
    }
    h
}

/// Matrix restricted to surviving nodes (removed nodes lose every link).
pub fn without_nodes(m: &Matrix, alive: &[bool]) -> Matrix {
    let n = m.len();
    (0..n)
        .map(|i| (0..n).map(|j| alive[i] && alive[j] && m[i][j]).collect())
        .collect()
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}
