//! Vertex arithmetic, neighbourhood and interval enumeration, and the
//! canonical edge-indexing scheme for the hypercube `Q_n`.
//!
//! Vertices are plain `u32` bit strings rather than wrapped records so the
//! hot loops stay allocation-free; [`CubeDim`] carries the dimension and
//! performs the n-bit checks at the API boundary. Edges get contiguous ids
//! so a colouring can live in a single dense array.

use crate::error::Error;

/// A vertex of `Q_n`: the low `n` bits of a `u32`.
pub type Vertex = u32;

/// Canonical index of an edge of `Q_n`, in `[0, n * 2^(n-1))`.
///
/// The edge `{v, v ^ (1 << i)}` (with bit `i` clear in `v`) has id
/// `i * 2^(n-1) + squeeze(v, i)`, where `squeeze` deletes bit `i` from `v`
/// and closes the gap. The map `(i, v) <-> id` is a bijection.
pub type EdgeId = u64;

/// Largest supported dimension. Everything exact here is `O(2^n)` or worse,
/// so there is no point pretending to handle more.
pub const MAX_DIM: u32 = 30;

/// The fixed dimension of the cube under consideration.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubeDim {
    n: u32,
}

impl CubeDim {
    pub fn new(n: u32) -> Result<Self, Error> {
        if n == 0 || n > MAX_DIM {
            return Err(Error::DimOutOfRange(n));
        }
        Ok(CubeDim { n })
    }

    #[inline]
    pub fn n(self) -> u32 {
        self.n
    }

    #[inline]
    pub fn vertex_count(self) -> u64 {
        1u64 << self.n
    }

    #[inline]
    pub fn edge_count(self) -> u64 {
        u64::from(self.n) << (self.n - 1)
    }

    #[inline]
    pub fn full_mask(self) -> Vertex {
        ((1u64 << self.n) - 1) as Vertex
    }

    #[inline]
    pub fn contains(self, v: Vertex) -> bool {
        u64::from(v) < self.vertex_count()
    }

    pub fn check_vertex(self, v: Vertex) -> Result<(), Error> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n })
        }
    }

    /// Hamming distance, i.e. the graph distance in `Q_n`.
    #[inline]
    pub fn distance(self, x: Vertex, y: Vertex) -> u32 {
        (x ^ y).count_ones()
    }

    /// The vertex with every coordinate flipped. Involutive.
    #[inline]
    pub fn antipode(self, x: Vertex) -> Vertex {
        x ^ self.full_mask()
    }

    pub fn vertices(self) -> impl Iterator<Item = Vertex> {
        (0..self.vertex_count()).map(|v| v as Vertex)
    }

    pub fn edge_ids(self) -> impl Iterator<Item = EdgeId> {
        0..self.edge_count()
    }

    /// The vertices at distance exactly `k` from `x`, each once, in
    /// ascending order of the xor mask.
    pub fn neighbourhood(self, x: Vertex, k: u32) -> Result<NeighbourhoodIter, Error> {
        self.check_vertex(x)?;
        if k > self.n {
            return Err(Error::RadiusOutOfRange { k, n: self.n });
        }
        Ok(NeighbourhoodIter {
            x,
            cur: if k == 0 { 0 } else { (1u64 << k) - 1 },
            end: self.vertex_count(),
            done: false,
        })
    }

    /// Every vertex `z` with `d(x,z) + d(z,y) = d(x,y)` — the sub-cube
    /// between `x` and `y` — as `(layer, vertex)` pairs, grouped by the
    /// distance from `x` with layers ascending. Yields `2^d(x,y)` vertices.
    pub fn interval(self, x: Vertex, y: Vertex) -> IntervalIter {
        let diff = x ^ y;
        let mut dims = [0u32; MAX_DIM as usize];
        let mut d = 0usize;
        let mut m = diff;
        while m != 0 {
            dims[d] = m.trailing_zeros();
            d += 1;
            m &= m - 1;
        }
        IntervalIter {
            x,
            dims,
            d: d as u32,
            layer: 0,
            sub: 0,
            done: false,
        }
    }

    /// Canonical id of the edge `{u, u ^ (1 << i)}`. Either endpoint may be
    /// passed; it is normalised to the one with bit `i` clear.
    pub fn edge_id(self, u: Vertex, i: u32) -> Result<EdgeId, Error> {
        if i >= self.n {
            return Err(Error::DirOutOfRange { dir: i, n: self.n });
        }
        self.check_vertex(u)?;
        Ok(self.edge_id_fast(u, i))
    }

    #[inline]
    pub(crate) fn edge_id_fast(self, u: Vertex, i: u32) -> EdgeId {
        let v = u & !(1 << i);
        (u64::from(i) << (self.n - 1)) + u64::from(squeeze(v, i))
    }

    /// Inverse of [`CubeDim::edge_id`]: the clear-bit endpoint and the
    /// dimension of the edge.
    pub fn edge_from_id(self, id: EdgeId) -> Result<(Vertex, u32), Error> {
        if id >= self.edge_count() {
            return Err(Error::EdgeOutOfRange { id, n: self.n });
        }
        let half = 1u64 << (self.n - 1);
        let i = (id / half) as u32;
        let s = (id % half) as Vertex;
        Ok((unsqueeze(s, i), i))
    }

    /// Both endpoints of an edge; the first has the edge's bit clear.
    pub fn edge_endpoints(self, id: EdgeId) -> Result<(Vertex, Vertex), Error> {
        let (v, i) = self.edge_from_id(id)?;
        Ok((v, v | (1 << i)))
    }

    /// The antipodal edge of `id`: the image of the edge under flipping
    /// every coordinate. It lies in the same dimension.
    pub fn antipodal_edge(self, id: EdgeId) -> Result<EdgeId, Error> {
        let (v, i) = self.edge_from_id(id)?;
        let partner = v ^ (self.full_mask() & !(1 << i));
        Ok(self.edge_id_fast(partner, i))
    }
}

/// Delete bit `i` from `v` and close the gap.
#[inline]
pub(crate) fn squeeze(v: Vertex, i: u32) -> Vertex {
    (v & ((1 << i) - 1)) | ((v >> (i + 1)) << i)
}

/// Inverse of [`squeeze`]: insert a zero bit at position `i`.
#[inline]
pub(crate) fn unsqueeze(s: Vertex, i: u32) -> Vertex {
    (s & ((1 << i) - 1)) | ((s >> i) << (i + 1))
}

/// Iterator over a fixed-distance neighbourhood, ascending xor-mask order.
pub struct NeighbourhoodIter {
    x: Vertex,
    cur: u64,
    end: u64,
    done: bool,
}

impl Iterator for NeighbourhoodIter {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        if self.done {
            return None;
        }
        let mask = self.cur;
        // Gosper's hack: next mask with the same popcount.
        if mask == 0 {
            self.done = true;
        } else {
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            self.cur = (((mask ^ r) >> 2) / c) | r;
            if self.cur >= self.end {
                self.done = true;
            }
        }
        Some(self.x ^ mask as Vertex)
    }
}

/// Iterator over the interval sub-cube, layer by layer.
pub struct IntervalIter {
    x: Vertex,
    dims: [u32; MAX_DIM as usize],
    d: u32,
    layer: u32,
    sub: u64,
    done: bool,
}

impl Iterator for IntervalIter {
    type Item = (u32, Vertex);

    fn next(&mut self) -> Option<(u32, Vertex)> {
        if self.done {
            return None;
        }
        // Expand the compressed j-subset into cube coordinates.
        let mut v = self.x;
        let mut m = self.sub;
        while m != 0 {
            v ^= 1 << self.dims[m.trailing_zeros() as usize];
            m &= m - 1;
        }
        let item = (self.layer, v);

        // Advance: Gosper within the layer, then the next layer.
        let last_of_layer = if self.layer == 0 {
            0
        } else {
            ((1u64 << self.layer) - 1) << (self.d - self.layer)
        };
        if self.sub == last_of_layer {
            if self.layer == self.d {
                self.done = true;
            } else {
                self.layer += 1;
                self.sub = (1u64 << self.layer) - 1;
            }
        } else {
            let c = self.sub & self.sub.wrapping_neg();
            let r = self.sub + c;
            self.sub = (((self.sub ^ r) >> 2) / c) | r;
        }
        Some(item)
    }
}
