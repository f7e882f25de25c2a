//! Brute-force oracles shared by the integration suites.
//!
//! Everything here recomputes quantities by direct enumeration, independent
//! of the library's DP/BFS code paths, so disagreement means a real bug.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::binomial;
use qnchroma::{Colouring, Rational, Vertex};

/// Minimum colour changes over all simple paths from `x` to every target,
/// by exhaustive depth-first search. `result[v] = u32::MAX` is unreachable
/// (never happens on the cube).
pub fn brute_path_min_all(c: &Colouring, x: Vertex) -> Vec<u32> {
    let dim = c.dim();
    let n = dim.n();
    let mut best = vec![u32::MAX; dim.vertex_count() as usize];
    struct Dfs<'a> {
        c: &'a Colouring,
        n: u32,
        best: &'a mut [u32],
    }
    impl Dfs<'_> {
        fn go(&mut self, v: Vertex, visited: u64, last: Option<u8>, changes: u32) {
            if changes < self.best[v as usize] {
                self.best[v as usize] = changes;
            }
            if changes > self.n {
                return; // any optimum is at most n
            }
            for i in 0..self.n {
                let w = v ^ (1 << i);
                if visited & (1u64 << w) != 0 {
                    continue;
                }
                let colour = self.c.edge_colour(v & !(1 << i), i);
                let step = match last {
                    Some(p) if p != colour => 1,
                    _ => 0,
                };
                self.go(w, visited | (1u64 << w), Some(colour), changes + step);
            }
        }
    }
    Dfs { c, n, best: &mut best }.go(x, 1u64 << x, None, 0);
    best
}

pub fn brute_path_min_cc(c: &Colouring, x: Vertex, y: Vertex) -> u32 {
    brute_path_min_all(c, x)[y as usize]
}

/// Changes along the geodesic from `x` that flips the given dimensions in
/// order, declared to end in `final_colour` if given.
fn ordering_cost(c: &Colouring, x: Vertex, order: &[u32], final_colour: Option<u8>) -> u32 {
    let mut v = x;
    let mut changes = 0;
    let mut last: Option<u8> = None;
    for &i in order {
        let colour = c.edge_colour(v & !(1 << i), i);
        if let Some(p) = last {
            if p != colour {
                changes += 1;
            }
        }
        last = Some(colour);
        v ^= 1 << i;
    }
    if let (Some(p), Some(f)) = (last, final_colour) {
        if p != f {
            changes += 1;
        }
    }
    changes
}

/// Minimum over all `d!` geodesic orderings from `x` to `y`; with
/// `final_colour` set this is the `f_c` oracle (relabelling at `y` costs 1).
pub fn brute_geodesic_min(c: &Colouring, x: Vertex, y: Vertex, final_colour: Option<u8>) -> u32 {
    let mut dims: Vec<u32> = (0..c.dim().n()).filter(|i| (x ^ y) & (1 << i) != 0).collect();
    if dims.is_empty() {
        return 0;
    }
    let mut best = u32::MAX;
    // Heap's algorithm over the dimension multiset.
    fn heaps(
        k: usize,
        dims: &mut Vec<u32>,
        c: &Colouring,
        x: Vertex,
        final_colour: Option<u8>,
        best: &mut u32,
    ) {
        if k == 1 {
            *best = (*best).min(ordering_cost(c, x, dims, final_colour));
            return;
        }
        for i in 0..k {
            heaps(k - 1, dims, c, x, final_colour, best);
            if k.is_multiple_of(2) {
                dims.swap(i, k - 1);
            } else {
                dims.swap(0, k - 1);
            }
        }
    }
    let len = dims.len();
    heaps(len, &mut dims, c, x, final_colour, &mut best);
    best
}

pub fn brute_geodesic_min_cc(c: &Colouring, x: Vertex, y: Vertex) -> u32 {
    brute_geodesic_min(c, x, y, None)
}

pub fn brute_fc(c: &Colouring, x: Vertex, y: Vertex, colour: u8) -> u32 {
    brute_geodesic_min(c, x, y, Some(colour))
}

/// Exact hypergeometric mean and variance by enumerating the density.
pub fn enum_hypergeom_moments(n: u64, k: u64, r: u64) -> (Rational, Rational) {
    let total = binomial(BigInt::from(n), BigInt::from(k));
    let rat = |num: BigInt, den: BigInt| Rational::new(num, den);
    let mut mean = rat(BigInt::from(0), BigInt::from(1));
    let mut second = mean.clone();
    for i in 0..=k.min(r) {
        if k - i > n - r {
            continue;
        }
        let ways = binomial(BigInt::from(r), BigInt::from(i))
            * binomial(BigInt::from(n - r), BigInt::from(k - i));
        let p = rat(ways, total.clone());
        mean += p.clone() * rat(BigInt::from(i), BigInt::from(1u8));
        second += p * rat(BigInt::from(i * i), BigInt::from(1u8));
    }
    let variance = second - mean.clone() * mean.clone();
    (mean, variance)
}

/// Minimum colour changes over all Hamilton paths, by depth-first search.
pub fn brute_hamilton_min(c: &Colouring) -> u32 {
    let dim = c.dim();
    let n = dim.n();
    let nv = dim.vertex_count() as u32;
    let full = (1u64 << nv) - 1;
    let mut best = u32::MAX;
    struct Dfs<'a> {
        c: &'a Colouring,
        n: u32,
        full: u64,
        best: &'a mut u32,
    }
    impl Dfs<'_> {
        fn go(&mut self, v: Vertex, visited: u64, last: Option<u8>, changes: u32) {
            if changes >= *self.best {
                return;
            }
            if visited == self.full {
                *self.best = changes;
                return;
            }
            for i in 0..self.n {
                let w = v ^ (1 << i);
                if visited & (1u64 << w) != 0 {
                    continue;
                }
                let colour = self.c.edge_colour(v & !(1 << i), i);
                let step = match last {
                    Some(p) if p != colour => 1,
                    _ => 0,
                };
                self.go(w, visited | (1u64 << w), Some(colour), changes + step);
            }
        }
    }
    for start in dim.vertices() {
        Dfs { c, n, full, best: &mut best }.go(start, 1u64 << start, None, 0);
    }
    best
}

/// Colour changes along an explicit vertex path.
pub fn vertex_path_changes(c: &Colouring, path: &[Vertex]) -> u32 {
    let mut changes = 0;
    let mut last: Option<u8> = None;
    for pair in path.windows(2) {
        let i = (pair[0] ^ pair[1]).trailing_zeros();
        let colour = c.edge_colour(pair[0] & !(1 << i), i);
        if last.is_some_and(|p| p != colour) {
            changes += 1;
        }
        last = Some(colour);
    }
    changes
}

/// Walk an edge-id witness from `x`, checking adjacency; returns the final
/// vertex and the change count.
pub fn walk_witness(c: &Colouring, x: Vertex, edges: &[qnchroma::EdgeId]) -> (Vertex, u32) {
    let dim = c.dim();
    let mut v = x;
    let mut last: Option<u8> = None;
    let mut changes = 0;
    for &e in edges {
        let (lo, i) = dim.edge_from_id(e).expect("edge id in range");
        let hi = lo | (1 << i);
        assert!(v == lo || v == hi, "witness edge {e} does not touch {v}");
        let colour = c.colour_of(e).expect("edge id in range");
        if last.is_some_and(|p| p != colour) {
            changes += 1;
        }
        last = Some(colour);
        v ^= 1 << i;
    }
    (v, changes)
}
