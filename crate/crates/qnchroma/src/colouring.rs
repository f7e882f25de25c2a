//! Immutable edge colourings of `Q_n` and the `QNCOL` file format.
//!
//! A [`Colouring`] maps every [`EdgeId`] to a colour index in `[0, r)` with
//! `2 <= r <= 16`, stored as one hex nibble per edge. Colour `0` is called
//! red and colour `1` blue throughout the crate, so files and reports are
//! comparable across runs.
//!
//! # File format (`ColourFileV1`)
//!
//! ```text
//! QNCOL 1 <n> <r>
//! <hex digits, one per edge in ascending EdgeId order, 64 per line>
//! ```
//!
//! UTF-8, LF line endings, lowercase hex. Lines starting with `#` after the
//! header are comments and are ignored by the parser; the generators use
//! them to record construction conventions. `parse(serialise(c)) == c`
//! bit-exactly.

use std::fmt;
use std::path::Path;

use rand::Rng;

use crate::cube::{CubeDim, EdgeId, Vertex};
use crate::error::Error;
use crate::rng::task_rng;

/// Colour index 0.
pub const RED: u8 = 0;
/// Colour index 1.
pub const BLUE: u8 = 1;

pub const MAX_COLOURS: u8 = 16;

/// An immutable map `EdgeId -> [0, r)`, one nibble per edge.
#[derive(Clone, PartialEq, Eq)]
pub struct Colouring {
    dim: CubeDim,
    r: u8,
    data: Vec<u8>,
}

impl fmt::Debug for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Colouring(n={}, r={})", self.dim.n(), self.r)
    }
}

#[inline]
fn get_nibble(data: &[u8], e: EdgeId) -> u8 {
    let byte = data[(e >> 1) as usize];
    if e & 1 == 0 {
        byte & 0x0f
    } else {
        byte >> 4
    }
}

#[inline]
fn set_nibble(data: &mut [u8], e: EdgeId, col: u8) {
    let slot = &mut data[(e >> 1) as usize];
    if e & 1 == 0 {
        *slot = (*slot & 0xf0) | col;
    } else {
        *slot = (*slot & 0x0f) | (col << 4);
    }
}

fn check_colour_count(r: u8) -> Result<(), Error> {
    if !(2..=MAX_COLOURS).contains(&r) {
        return Err(Error::ColourCountOutOfRange(r));
    }
    Ok(())
}

impl Colouring {
    /// Build a colouring by evaluating `f(edge id)` for every edge.
    pub fn from_edge_fn(
        dim: CubeDim,
        r: u8,
        mut f: impl FnMut(EdgeId) -> u8,
    ) -> Result<Self, Error> {
        check_colour_count(r)?;
        let edges = dim.edge_count();
        let mut data = vec![0u8; edges.div_ceil(2) as usize];
        for e in 0..edges {
            let col = f(e);
            if col >= r {
                return Err(Error::ColourOutOfRange);
            }
            set_nibble(&mut data, e, col);
        }
        Ok(Colouring { dim, r, data })
    }

    /// Build a colouring from `f(clear-bit endpoint, dimension)`.
    pub fn from_fn(
        dim: CubeDim,
        r: u8,
        mut f: impl FnMut(Vertex, u32) -> u8,
    ) -> Result<Self, Error> {
        Self::from_edge_fn(dim, r, |e| {
            let (v, i) = dim.edge_from_id(e).expect("edge id in range");
            f(v, i)
        })
    }

    /// Every edge the same colour.
    pub fn solid(dim: CubeDim, r: u8, colour: u8) -> Result<Self, Error> {
        Self::from_edge_fn(dim, r, |_| colour)
    }

    /// Layer colouring around a base vertex `x0`: the edge `{u, w}` with
    /// `d(x0, u) = d(x0, w) - 1` is red when `d(x0, u)` is even and blue
    /// when it is odd. Middle-layer vertices then reach their antipodes
    /// monochromatically.
    pub fn layered(dim: CubeDim, x0: Vertex) -> Result<Self, Error> {
        dim.check_vertex(x0)?;
        Self::from_fn(dim, 2, |v, i| {
            // Lower layer of the edge relative to x0. The clear-bit endpoint
            // v is the nearer one exactly when x0 has bit i clear.
            let lower = dim.distance(x0, v) - ((x0 >> i) & 1);
            (lower & 1) as u8
        })
    }

    /// The perfect-code colouring for `n = 2^k - 1`: an edge is red iff it
    /// is incident to a codeword of the Hamming code, blue otherwise.
    /// Returns the colouring together with the codeword set (the kernel of
    /// the parity-check matrix whose columns are all nonzero k-bit vectors).
    pub fn hamming(dim: CubeDim) -> Result<(Self, Vec<Vertex>), Error> {
        let n = dim.n();
        if !(n + 1).is_power_of_two() || n < 3 {
            return Err(Error::NotHammingDimension(n));
        }
        // syndrome(v) = xor of (j+1) over set bits j; codewords have syndrome 0.
        let mut syndrome = vec![0u32; dim.vertex_count() as usize];
        for v in 1..dim.vertex_count() as usize {
            let low = v.trailing_zeros();
            syndrome[v] = syndrome[v & (v - 1)] ^ (low + 1);
        }
        let code: Vec<Vertex> = dim.vertices().filter(|&v| syndrome[v as usize] == 0).collect();
        let colouring = Self::from_fn(dim, 2, |v, i| {
            let s = syndrome[v as usize];
            if s == 0 || s == i + 1 {
                RED
            } else {
                BLUE
            }
        })?;
        Ok((colouring, code))
    }

    /// Colour each edge by its dimension, `i mod r`.
    pub fn direction(dim: CubeDim, r: u8) -> Result<Self, Error> {
        check_colour_count(r)?;
        if u32::from(r) > dim.n() {
            return Err(Error::TooManyDirections { r, n: dim.n() });
        }
        Self::from_fn(dim, r, |_, i| (i % u32::from(r)) as u8)
    }

    /// Uniform random colouring, deterministic in the seed.
    pub fn random(dim: CubeDim, r: u8, seed: u64) -> Result<Self, Error> {
        check_colour_count(r)?;
        let mut rng = task_rng(seed, 0);
        Self::from_edge_fn(dim, r, |_| rng.random_range(0..r))
    }

    /// Random 2-colouring in which antipodal edges receive different
    /// colours. Deterministic in the seed. Needs `n >= 2`: in `Q_1` the one
    /// edge is its own antipodal image.
    pub fn antipodal_random(dim: CubeDim, seed: u64) -> Result<Self, Error> {
        if dim.n() < 2 {
            return Err(Error::AntipodalNeedsN2);
        }
        let mut rng = task_rng(seed, 0);
        let edges = dim.edge_count();
        let mut cols = vec![u8::MAX; edges as usize];
        for e in 0..edges {
            if cols[e as usize] != u8::MAX {
                continue;
            }
            let partner = dim.antipodal_edge(e).expect("edge id in range");
            let c: u8 = rng.random_range(0..2);
            cols[e as usize] = c;
            cols[partner as usize] = 1 - c;
        }
        Self::from_edge_fn(dim, 2, |e| cols[e as usize])
    }

    #[inline]
    pub fn dim(&self) -> CubeDim {
        self.dim
    }

    /// Number of colours `r`.
    #[inline]
    pub fn colours(&self) -> u8 {
        self.r
    }

    /// The stored colour of an edge.
    pub fn colour_of(&self, e: EdgeId) -> Result<u8, Error> {
        if e >= self.dim.edge_count() {
            return Err(Error::EdgeOutOfRange { id: e, n: self.dim.n() });
        }
        Ok(get_nibble(&self.data, e))
    }

    #[inline]
    pub(crate) fn colour_fast(&self, e: EdgeId) -> u8 {
        debug_assert!(e < self.dim.edge_count());
        get_nibble(&self.data, e)
    }

    /// Colour of the edge `{u, u ^ (1 << i)}`; either endpoint works.
    #[inline]
    pub fn edge_colour(&self, u: Vertex, i: u32) -> u8 {
        self.colour_fast(self.dim.edge_id_fast(u, i))
    }

    /// How many edges carry the given colour.
    pub fn count_colour(&self, colour: u8) -> u64 {
        self.dim
            .edge_ids()
            .filter(|&e| self.colour_fast(e) == colour)
            .count() as u64
    }

    /// A copy with one edge recoloured. The receiver is unchanged.
    pub fn with_colour(&self, e: EdgeId, colour: u8) -> Result<Self, Error> {
        if e >= self.dim.edge_count() {
            return Err(Error::EdgeOutOfRange { id: e, n: self.dim.n() });
        }
        if colour >= self.r {
            return Err(Error::ColourOutOfRange);
        }
        let mut out = self.clone();
        set_nibble(&mut out.data, e, colour);
        Ok(out)
    }

    /// The induced colouring of the sub-cube obtained by fixing the
    /// coordinates in `mask` to the bits given in `values`. Edge ids are
    /// re-canonicalised for the smaller cube.
    pub fn restrict_subcube(&self, mask: Vertex, values: Vertex) -> Result<Self, Error> {
        let n = self.dim.n();
        self.dim.check_vertex(mask)?;
        if values & !mask != 0 {
            return Err(Error::InconsistentSubcube { mask, values });
        }
        let m = n - mask.count_ones();
        let sub_dim = CubeDim::new(m)?; // m = 0 reports DimOutOfRange
        let free: Vec<u32> = (0..n).filter(|i| mask & (1 << i) == 0).collect();
        let expand = |s: Vertex| -> Vertex {
            let mut v = values;
            for (j, &pos) in free.iter().enumerate() {
                v |= ((s >> j) & 1) << pos;
            }
            v
        };
        Self::from_fn(sub_dim, self.r, |s, j| {
            self.edge_colour(expand(s), free[j as usize])
        })
    }

    /// Serialise to the `ColourFileV1` text format.
    pub fn to_file_string(&self) -> String {
        self.to_file_string_with_comments(&[])
    }

    /// Serialise with `#` comment lines placed after the header.
    pub fn to_file_string_with_comments(&self, comments: &[&str]) -> String {
        let edges = self.dim.edge_count();
        let mut out = String::with_capacity(edges as usize + edges as usize / 64 + 64);
        out.push_str(&format!("QNCOL 1 {} {}\n", self.dim.n(), self.r));
        for c in comments {
            out.push('#');
            if !c.is_empty() {
                out.push(' ');
                out.push_str(c);
            }
            out.push('\n');
        }
        for e in 0..edges {
            out.push(char::from_digit(u32::from(self.colour_fast(e)), 16).unwrap());
            if e % 64 == 63 || e == edges - 1 {
                out.push('\n');
            }
        }
        out
    }

    /// Parse the `ColourFileV1` text format.
    pub fn from_file_str(s: &str) -> Result<Self, Error> {
        let mut lines = s.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::MalformedColourFile("empty file".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 4 || fields[0] != "QNCOL" {
            return Err(Error::MalformedColourFile(format!(
                "bad header {header:?}, expected \"QNCOL 1 <n> <r>\""
            )));
        }
        if fields[1] != "1" {
            return Err(Error::MalformedColourFile(format!(
                "unsupported version {}",
                fields[1]
            )));
        }
        let n: u32 = fields[2]
            .parse()
            .map_err(|_| Error::MalformedColourFile(format!("bad n {:?}", fields[2])))?;
        let r: u8 = fields[3]
            .parse()
            .map_err(|_| Error::MalformedColourFile(format!("bad r {:?}", fields[3])))?;
        let dim = CubeDim::new(n)?;
        check_colour_count(r)?;

        let edges = dim.edge_count();
        let mut data = vec![0u8; edges.div_ceil(2) as usize];
        let mut count: u64 = 0;
        for line in lines {
            if line.starts_with('#') {
                continue;
            }
            for ch in line.trim_end().chars() {
                let digit = ch
                    .to_digit(16)
                    .ok_or_else(|| Error::MalformedColourFile(format!("bad digit {ch:?}")))?;
                if digit >= u32::from(r) {
                    return Err(Error::ColourOutOfRange);
                }
                if count >= edges {
                    return Err(Error::MalformedColourFile(format!(
                        "too many digits, expected {edges}"
                    )));
                }
                set_nibble(&mut data, count, digit as u8);
                count += 1;
            }
        }
        if count != edges {
            return Err(Error::MalformedColourFile(format!(
                "expected {edges} digits, found {count}"
            )));
        }
        Ok(Colouring { dim, r, data })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), Error> {
        std::fs::write(path, self.to_file_string())?;
        Ok(())
    }

    pub fn save_with_comments(
        &self,
        path: impl AsRef<Path>,
        comments: &[&str],
    ) -> Result<(), Error> {
        std::fs::write(path, self.to_file_string_with_comments(comments))?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, Error> {
        Self::from_file_str(&std::fs::read_to_string(path)?)
    }
}
