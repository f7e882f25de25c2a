//! Minimum colour-change Hamilton paths, the Gray-code upper bound, and
//! monochromatic component counts of spanning trees.
//!
//! A monochromatic component of an edge-coloured tree is a maximal subtree
//! whose edges all carry one colour: vertices `v, w` belong to a common
//! component exactly when the unique tree path between them is
//! monochromatic. A vertex incident to edges of several colours sits in
//! several components. Because any subset of tree edges is a forest, the
//! count is simply `sum over colours of (touched vertices - edges)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::colouring::Colouring;
use crate::cube::{CubeDim, Vertex};
use crate::error::Error;
use crate::rng::{split_seed, task_rng};
use rand::Rng;

pub const HAMILTON_MAX_DIM: u32 = 4;
pub const GRAY_MAX_DIM: u32 = 24;
pub const TREE_MAX_DIM: u32 = 16;
pub const SPANNING_TREE_MAX_DIM: u32 = 20;

/// A spanning tree of `Q_n` as a parent array; the root points to itself.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    dim: CubeDim,
    root: Vertex,
    parent: Vec<Vertex>,
}

impl SpanningTree {
    /// Validate and wrap a parent array: every parent edge must be a cube
    /// edge and every vertex must reach the root.
    pub fn new(dim: CubeDim, root: Vertex, parent: Vec<Vertex>) -> Result<Self, Error> {
        if dim.n() > SPANNING_TREE_MAX_DIM {
            return Err(Error::GateExceeded {
                what: "spanning tree",
                limit: SPANNING_TREE_MAX_DIM,
                n: dim.n(),
            });
        }
        dim.check_vertex(root)?;
        if parent.len() as u64 != dim.vertex_count() {
            return Err(Error::MalformedTree(format!(
                "parent array has {} entries, expected {}",
                parent.len(),
                dim.vertex_count()
            )));
        }
        if parent[root as usize] != root {
            return Err(Error::MalformedTree("root does not point to itself".into()));
        }
        for v in dim.vertices() {
            let p = parent[v as usize];
            if v == root {
                continue;
            }
            if !dim.contains(p) || dim.distance(v, p) != 1 {
                return Err(Error::MalformedTree(format!(
                    "parent edge {v} -> {p} is not a cube edge"
                )));
            }
        }
        // Reachability: every vertex must climb to the root without cycles.
        let mut state = vec![0u8; parent.len()]; // 0 unseen, 1 in progress, 2 done
        state[root as usize] = 2;
        let mut stack = Vec::new();
        for start in dim.vertices() {
            if state[start as usize] != 0 {
                continue;
            }
            let mut v = start;
            while state[v as usize] == 0 {
                state[v as usize] = 1;
                stack.push(v);
                v = parent[v as usize];
            }
            if state[v as usize] == 1 {
                return Err(Error::MalformedTree(format!("cycle through {v}")));
            }
            for &w in &stack {
                state[w as usize] = 2;
            }
            stack.clear();
        }
        Ok(SpanningTree { dim, root, parent })
    }

    /// Tree induced by a Hamilton path (or any vertex path covering the
    /// cube): each vertex's parent is its predecessor.
    pub fn from_vertex_path(dim: CubeDim, path: &[Vertex]) -> Result<Self, Error> {
        if path.len() as u64 != dim.vertex_count() {
            return Err(Error::MalformedTree(format!(
                "path covers {} of {} vertices",
                path.len(),
                dim.vertex_count()
            )));
        }
        let mut parent = vec![u32::MAX; path.len()];
        parent[path[0] as usize] = path[0];
        for pair in path.windows(2) {
            parent[pair[1] as usize] = pair[0];
        }
        Self::new(dim, path[0], parent)
    }

    #[inline]
    pub fn dim(&self) -> CubeDim {
        self.dim
    }

    #[inline]
    pub fn root(&self) -> Vertex {
        self.root
    }

    #[inline]
    pub fn parent_of(&self, v: Vertex) -> Vertex {
        self.parent[v as usize]
    }

    /// All `(child, parent)` edges; `2^n - 1` of them.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let root = self.root;
        self.dim
            .vertices()
            .filter(move |&v| v != root)
            .map(move |v| (v, self.parent[v as usize]))
    }

    fn depths(&self) -> Vec<u32> {
        let mut depth = vec![u32::MAX; self.parent.len()];
        depth[self.root as usize] = 0;
        let mut stack = Vec::new();
        for start in self.dim.vertices() {
            let mut v = start;
            while depth[v as usize] == u32::MAX {
                stack.push(v);
                v = self.parent[v as usize];
            }
            let mut d = depth[v as usize];
            while let Some(w) = stack.pop() {
                d += 1;
                depth[w as usize] = d;
            }
        }
        depth
    }
}

/// Exact minimum colour changes over all Hamilton paths of `Q_n`, `n <= 4`,
/// by DP over `(visited set, last vertex, last edge colour)`. Returns the
/// cost and one optimal path as a vertex sequence.
pub fn hamilton_min_cc(c: &Colouring) -> Result<(u32, Vec<Vertex>), Error> {
    let dim = c.dim();
    let n = dim.n();
    if n > HAMILTON_MAX_DIM {
        return Err(Error::GateExceeded {
            what: "exact Hamilton search",
            limit: HAMILTON_MAX_DIM,
            n,
        });
    }
    let nv = dim.vertex_count() as usize;
    let r = c.colours() as usize;
    let full = (1usize << nv) - 1;
    const INF: u8 = u8::MAX;
    // dp[(mask * nv + last) * r + colour]
    let mut dp = vec![INF; (full + 1) * nv * r];
    let idx = |mask: usize, last: usize, colour: usize| (mask * nv + last) * r + colour;

    for v in 0..nv {
        for i in 0..n {
            let w = v ^ (1 << i);
            let colour = c.edge_colour(v as Vertex & !(1 << i), i) as usize;
            let mask = (1 << v) | (1 << w);
            dp[idx(mask, w, colour)] = 0;
        }
    }

    for mask in 0..=full {
        for last in 0..nv {
            if mask & (1 << last) == 0 {
                continue;
            }
            for colour in 0..r {
                let cur = dp[idx(mask, last, colour)];
                if cur == INF {
                    continue;
                }
                for i in 0..n {
                    let next = last ^ (1 << i);
                    if mask & (1 << next) != 0 {
                        continue;
                    }
                    let edge_colour =
                        c.edge_colour(last as Vertex & !(1 << i), i) as usize;
                    let cost = cur + u8::from(edge_colour != colour);
                    let slot = &mut dp[idx(mask | (1 << next), next, edge_colour)];
                    if cost < *slot {
                        *slot = cost;
                    }
                }
            }
        }
    }

    let mut best = (INF, 0usize, 0usize);
    for last in 0..nv {
        for colour in 0..r {
            let v = dp[idx(full, last, colour)];
            if v < best.0 {
                best = (v, last, colour);
            }
        }
    }

    // Walk the DP backwards to recover a path.
    let (cost, mut last, mut colour) = best;
    let mut mask = full;
    let mut path = vec![last as Vertex];
    'outer: while mask.count_ones() > 2 {
        let want = dp[idx(mask, last, colour)];
        for i in 0..n {
            let prev = last ^ (1 << i);
            if mask & (1 << prev) == 0 || prev == last {
                continue;
            }
            let edge_colour = c.edge_colour(last as Vertex & !(1 << i), i) as usize;
            if edge_colour != colour {
                continue; // arriving at `last` fixed the state colour
            }
            let pmask = mask & !(1 << last);
            for pcolour in 0..r {
                let pv = dp[idx(pmask, prev, pcolour)];
                if pv != INF && pv + u8::from(colour != pcolour) == want {
                    path.push(prev as Vertex);
                    mask = pmask;
                    last = prev;
                    colour = pcolour;
                    continue 'outer;
                }
            }
        }
        unreachable!("DP admits a predecessor");
    }
    // The two-vertex base state: the remaining neighbour of `last`.
    let other = mask & !(1 << last);
    path.push(other.trailing_zeros() as Vertex);
    path.reverse();
    Ok((u32::from(cost), path))
}

/// Colour changes along the reflected binary Gray code Hamilton path.
pub fn gray_code_cc(c: &Colouring) -> Result<u32, Error> {
    let dim = c.dim();
    if dim.n() > GRAY_MAX_DIM {
        return Err(Error::GateExceeded {
            what: "Gray-code walk",
            limit: GRAY_MAX_DIM,
            n: dim.n(),
        });
    }
    let mut changes = 0u32;
    let mut prev: Option<u8> = None;
    for step in 1..dim.vertex_count() {
        let v = (step - 1) ^ ((step - 1) >> 1);
        let i = step.trailing_zeros();
        let colour = c.edge_colour(v as Vertex & !(1 << i), i);
        if prev.is_some_and(|p| p != colour) {
            changes += 1;
        }
        prev = Some(colour);
    }
    Ok(changes)
}

/// Count the monochromatic components of the tree under the colouring:
/// per colour, the edge-induced subforest has `touched - edges` components.
pub fn mono_components(c: &Colouring, tree: &SpanningTree) -> Result<u64, Error> {
    if c.dim() != tree.dim() {
        return Err(Error::MalformedTree(format!(
            "tree is over n={}, colouring over n={}",
            tree.dim().n(),
            c.dim().n()
        )));
    }
    let dim = c.dim();
    let mut incident = vec![0u16; dim.vertex_count() as usize];
    let mut edge_count = [0u64; 16];
    for (child, parent) in tree.edges() {
        let i = (child ^ parent).trailing_zeros();
        let colour = c.edge_colour(child & !(1 << i), i);
        incident[child as usize] |= 1 << colour;
        incident[parent as usize] |= 1 << colour;
        edge_count[colour as usize] += 1;
    }
    let mut touched = [0u64; 16];
    for &mask in &incident {
        let mut m = mask;
        while m != 0 {
            touched[m.trailing_zeros() as usize] += 1;
            m &= m - 1;
        }
    }
    Ok((0..16).map(|c| touched[c] - edge_count[c]).sum())
}

/// Is the unique tree path between `u` and `w` monochromatic?
pub fn tree_path_monochromatic(
    c: &Colouring,
    tree: &SpanningTree,
    u: Vertex,
    w: Vertex,
) -> Result<bool, Error> {
    if c.dim() != tree.dim() {
        return Err(Error::MalformedTree("dimension mismatch".into()));
    }
    let depths = tree.depths();
    let edge_colour = |child: Vertex| {
        let parent = tree.parent_of(child);
        let i = (child ^ parent).trailing_zeros();
        c.edge_colour(child & !(1 << i), i)
    };
    let mut seen: Option<u8> = None;
    let mut record = |colour: u8| -> bool {
        match seen {
            None => {
                seen = Some(colour);
                true
            }
            Some(p) => p == colour,
        }
    };
    let (mut a, mut b) = (u, w);
    while a != b {
        if depths[a as usize] >= depths[b as usize] {
            if !record(edge_colour(a)) {
                return Ok(false);
            }
            a = tree.parent_of(a);
        } else {
            if !record(edge_colour(b)) {
                return Ok(false);
            }
            b = tree.parent_of(b);
        }
    }
    Ok(true)
}

/// Uniform spanning tree by Wilson's loop-erased random walk, rooted at 0.
/// Deterministic in the seed.
pub fn random_spanning_tree(dim: CubeDim, seed: u64) -> Result<SpanningTree, Error> {
    let n = dim.n();
    if n > TREE_MAX_DIM {
        return Err(Error::GateExceeded {
            what: "random spanning tree",
            limit: TREE_MAX_DIM,
            n,
        });
    }
    let nv = dim.vertex_count() as usize;
    let mut rng = task_rng(seed, 0);
    let mut in_tree = vec![false; nv];
    let mut next = vec![0 as Vertex; nv];
    let mut parent = vec![0 as Vertex; nv];
    in_tree[0] = true;
    for start in 1..nv as u32 {
        if in_tree[start as usize] {
            continue;
        }
        // Random walk with loop erasure via pointer overwrite.
        let mut v = start;
        while !in_tree[v as usize] {
            let step = v ^ (1 << rng.random_range(0..n));
            next[v as usize] = step;
            v = step;
        }
        let mut v = start;
        while !in_tree[v as usize] {
            in_tree[v as usize] = true;
            parent[v as usize] = next[v as usize];
            v = next[v as usize];
        }
    }
    SpanningTree::new(dim, 0, parent)
}

/// Report for the perfect-code component bound.
#[derive(Clone, Debug, Serialize)]
pub struct HammingComponentReport {
    pub n: u32,
    pub trials: u64,
    #[serde(rename = "minComponents")]
    pub min_components: u64,
    /// `2^n / (n+1)`: one component per codeword.
    pub bound: u64,
    pub violations: Vec<String>,
}

/// For `n in {3, 7}`: on `trials` uniform spanning trees, check that the
/// perfect-code colouring splits every tree into at least `2^n / (n+1)`
/// monochromatic components and that distinct codewords never share one.
pub fn hamming_component_bound(
    n: u32,
    trials: u64,
    seed: u64,
) -> Result<HammingComponentReport, Error> {
    if n != 3 && n != 7 {
        return Err(Error::UnsupportedHammingBound(n));
    }
    let dim = CubeDim::new(n)?;
    let (colouring, code) = Colouring::hamming(dim)?;
    let bound = dim.vertex_count() / (u64::from(n) + 1);

    let results: Vec<(u64, Vec<String>)> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let tree = random_spanning_tree(dim, split_seed(seed, trial))
                .expect("n within tree gate");
            let components = mono_components(&colouring, &tree).expect("matching dims");
            let mut violations = Vec::new();
            if components < bound {
                violations.push(format!(
                    "trial {trial}: {components} components, below bound {bound}"
                ));
            }
            for (a, &u) in code.iter().enumerate() {
                for &w in &code[a + 1..] {
                    if tree_path_monochromatic(&colouring, &tree, u, w)
                        .expect("matching dims")
                    {
                        violations.push(format!(
                            "trial {trial}: codewords {u} and {w} share a component"
                        ));
                    }
                }
            }
            (components, violations)
        })
        .collect();

    let min_components = results.iter().map(|(c, _)| *c).min().unwrap_or(0);
    let violations: Vec<String> = results.into_iter().flat_map(|(_, v)| v).collect();
    Ok(HammingComponentReport {
        n,
        trials,
        min_components,
        bound,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::RED;

    fn dim(n: u32) -> CubeDim {
        CubeDim::new(n).unwrap()
    }

    #[test]
    fn hamilton_all_red_is_free() {
        let c = Colouring::solid(dim(3), 2, RED).unwrap();
        let (cost, path) = hamilton_min_cc(&c).unwrap();
        assert_eq!(cost, 0);
        assert_eq!(path.len(), 8);
        assert_path_valid(&c, &path);
    }

    #[test]
    fn hamilton_square_needs_one_change() {
        // Two red edges at 00, two blue at 11: three path edges cannot be
        // monochromatic.
        let c = Colouring::from_fn(dim(2), 2, |v, _| u8::from(v != 0b00)).unwrap();
        let (cost, path) = hamilton_min_cc(&c).unwrap();
        assert_eq!(cost, 1);
        assert_path_valid(&c, &path);
        assert_eq!(count_changes(&c, &path), 1);
    }

    #[test]
    fn hamilton_witness_recounts() {
        let c = Colouring::layered(dim(3), 0).unwrap();
        let (cost, path) = hamilton_min_cc(&c).unwrap();
        assert_path_valid(&c, &path);
        assert_eq!(count_changes(&c, &path), cost);
        assert!(hamilton_min_cc(&Colouring::solid(dim(5), 2, RED).unwrap()).is_err());
    }

    fn assert_path_valid(c: &Colouring, path: &[Vertex]) {
        let dim = c.dim();
        assert_eq!(path.len() as u64, dim.vertex_count());
        let mut seen = vec![false; path.len()];
        for &v in path {
            assert!(!seen[v as usize]);
            seen[v as usize] = true;
        }
        for pair in path.windows(2) {
            assert_eq!(dim.distance(pair[0], pair[1]), 1);
        }
    }

    fn count_changes(c: &Colouring, path: &[Vertex]) -> u32 {
        let mut prev: Option<u8> = None;
        let mut changes = 0;
        for pair in path.windows(2) {
            let i = (pair[0] ^ pair[1]).trailing_zeros();
            let colour = c.edge_colour(pair[0] & !(1 << i), i);
            if prev.is_some_and(|p| p != colour) {
                changes += 1;
            }
            prev = Some(colour);
        }
        changes
    }

    #[test]
    fn hamilton_handles_more_colours() {
        // Direction colouring of Q_3 with three colours: a Hamilton path
        // has 7 edges over 3 dimensions, so at least two changes; the
        // standard Gray order achieves more, the optimum less.
        let c = Colouring::direction(dim(3), 3).unwrap();
        let (cost, path) = hamilton_min_cc(&c).unwrap();
        assert!(cost >= 2);
        assert!(cost <= gray_code_cc(&c).unwrap());
        assert_eq!(count_changes(&c, &path), cost);
    }

    #[test]
    fn gray_code_dominates_exact() {
        for seed in 0..20 {
            let c = Colouring::random(dim(4), 2, seed).unwrap();
            let gray = gray_code_cc(&c).unwrap();
            let (exact, _) = hamilton_min_cc(&c).unwrap();
            assert!(gray >= exact, "seed {seed}");
            assert_eq!(gray, gray_code_cc(&c).unwrap());
        }
        assert_eq!(gray_code_cc(&Colouring::solid(dim(6), 2, RED).unwrap()).unwrap(), 0);
    }

    #[test]
    fn mono_components_examples() {
        let q = dim(2);
        // Direction colouring makes the path 00-01-11-10 alternate.
        let c = Colouring::direction(q, 2).unwrap();
        let path_tree = SpanningTree::from_vertex_path(q, &[0b00, 0b01, 0b11, 0b10]).unwrap();
        assert_eq!(mono_components(&c, &path_tree).unwrap(), 3);

        let all_red = Colouring::solid(q, 2, RED).unwrap();
        assert_eq!(mono_components(&all_red, &path_tree).unwrap(), 1);
    }

    #[test]
    fn path_tree_components_equal_changes_plus_one() {
        for n in [3u32, 4] {
            for seed in 0..10 {
                let c = Colouring::random(dim(n), 2, seed).unwrap();
                let (cost, path) = hamilton_min_cc(&c).unwrap();
                let tree = SpanningTree::from_vertex_path(c.dim(), &path).unwrap();
                assert_eq!(mono_components(&c, &tree).unwrap(), u64::from(cost) + 1);
            }
        }
    }

    #[test]
    fn spanning_tree_validation() {
        let q = dim(2);
        assert!(SpanningTree::new(q, 0, vec![0, 0, 0, 1]).is_ok());
        // Non-cube parent edge.
        assert!(SpanningTree::new(q, 0, vec![0, 0, 0, 0]).is_err());
        // Cycle.
        assert!(SpanningTree::new(q, 0, vec![0, 3, 0, 1]).is_err());
        // Wrong length.
        assert!(SpanningTree::new(q, 0, vec![0, 0]).is_err());
    }

    #[test]
    fn wilson_trees_are_uniform_ish_and_deterministic() {
        let q = dim(4);
        let a = random_spanning_tree(q, 3).unwrap();
        let b = random_spanning_tree(q, 3).unwrap();
        let c = random_spanning_tree(q, 4).unwrap();
        assert_eq!(a.parent, b.parent);
        assert_ne!(a.parent, c.parent);
        assert_eq!(a.edges().count() as u64, q.vertex_count() - 1);
        for (child, parent) in a.edges() {
            assert_eq!(q.distance(child, parent), 1);
        }
    }

    #[test]
    fn hamming_bound_small() {
        let report = hamming_component_bound(3, 50, 0).unwrap();
        assert!(report.violations.is_empty(), "{:?}", report.violations);
        assert!(report.min_components >= 2);
        assert_eq!(report.bound, 2);
        assert!(hamming_component_bound(5, 1, 0).is_err());
    }

    #[test]
    fn hamming_far_vertices_are_all_blue() {
        for n in [3u32, 7] {
            let q = dim(n);
            let (c, code) = Colouring::hamming(q).unwrap();
            for v in q.vertices() {
                let dist = code.iter().map(|&w| q.distance(v, w)).min().unwrap();
                if dist >= 2 {
                    for i in 0..n {
                        assert_eq!(c.edge_colour(v & !(1 << i), i), 1, "v={v} i={i}");
                    }
                }
            }
        }
    }
}
