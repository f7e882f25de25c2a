//! Local edge statistics around a vertex pair, weighted averages of the
//! per-colour geodesic change counts, and exact or sampled expectations
//! over uniform random pairs at a fixed distance.
//!
//! All exact expectations are integer work under the hood: each quantity at
//! a pair `(u, v)` with `d(u, v) = k` has a small fixed denominator
//! (`n-k`, `k`, `k(n-k)`, or 1), so per-`k` sums accumulate in `i128` and
//! one [`Rational`] is built at the end. Verification therefore compares
//! exact integers, never floats.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use crate::colouring::Colouring;
use crate::cube::Vertex;
use crate::error::Error;
use crate::geodesic::{FcTable, Scope};
use crate::rng::task_rng;

/// Exact fraction used for all expectation arithmetic.
pub type Rational = num_rational::BigRational;

/// Exact-mode gate for unconditioned expectations (one DP table per source).
pub const EXACT_UNCOND_MAX_DIM: u32 = 12;
/// Exact-mode gate for expectations conditioned on one endpoint.
pub const EXACT_COND_MAX_DIM: u32 = 20;

pub fn rational(num: i128, den: i128) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Render as `num/den` in lowest terms.
pub fn rational_str(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Edge counts at `y`, split by colour and by direction relative to `x`:
/// `i_*` count edges to neighbours one step closer to `x`, `j_*` one step
/// further. `i_red + i_blue = d(x, y)` and `j_red + j_blue = n - d(x, y)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct IjCounts {
    pub i_red: u32,
    pub i_blue: u32,
    pub j_red: u32,
    pub j_blue: u32,
}

/// Count the in/out edges at `y` by colour, relative to source `x`.
/// Requires a 2-colouring.
pub fn ij_counts(c: &Colouring, x: Vertex, y: Vertex) -> Result<IjCounts, Error> {
    if c.colours() != 2 {
        return Err(Error::TwoColoursRequired(c.colours()));
    }
    let dim = c.dim();
    dim.check_vertex(x)?;
    dim.check_vertex(y)?;
    let rel = x ^ y;
    let mut counts = IjCounts {
        i_red: 0,
        i_blue: 0,
        j_red: 0,
        j_blue: 0,
    };
    for i in 0..dim.n() {
        let red = c.edge_colour(y & !(1 << i), i) == 0;
        let towards = rel & (1 << i) != 0;
        match (towards, red) {
            (true, true) => counts.i_red += 1,
            (true, false) => counts.i_blue += 1,
            (false, true) => counts.j_red += 1,
            (false, false) => counts.j_blue += 1,
        }
    }
    Ok(counts)
}

/// The deviation statistic
/// `S^x(y) = | j_red/(n-d) - i_red/d |` (the blue form gives the same
/// value). Defined for `1 <= d(x,y) <= n-1`.
pub fn s_value(c: &Colouring, x: Vertex, y: Vertex) -> Result<Rational, Error> {
    let dim = c.dim();
    let n = dim.n();
    let d = dim.distance(x, y);
    if d == 0 || d == n {
        return Err(Error::DistanceUndefined { d, lo: 1, hi: n - 1 });
    }
    let counts = ij_counts(c, x, y)?;
    let num = (i128::from(counts.j_red) * i128::from(d)
        - i128::from(counts.i_red) * i128::from(n - d))
    .abs();
    Ok(rational(num, i128::from(d) * i128::from(n - d)))
}

/// The three weighted averages of `f_c(x, .)` at the pair `(x, y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Fgh {
    /// Average over edges at `y` pointing away from `x`, weighting
    /// `f_{colour}(x, y)`. At antipodal distance this average is undefined
    /// and the optimum `min_c f_c(x, y)` is reported instead.
    pub f: Rational,
    /// Average over edges at `y` pointing towards `x` of `f_{colour}(x, z)`
    /// evaluated at the nearer endpoint `z`.
    pub g: Rational,
    /// As `g`, but evaluated at `y` itself.
    pub h: Rational,
}

/// Compute `f`, `g`, `h` at `(x, y)` from a table rooted at `x` whose scope
/// contains the interval between `x` and `y`. Requires `d(x, y) >= 1`.
pub fn fgh_averages(
    c: &Colouring,
    x: Vertex,
    y: Vertex,
    table: &FcTable,
) -> Result<Fgh, Error> {
    let dim = c.dim();
    let n = dim.n();
    let d = dim.distance(x, y);
    if d == 0 {
        return Err(Error::DistanceUndefined { d, lo: 1, hi: n });
    }
    assert_eq!(table.source(), x, "table rooted elsewhere");
    if !table.contains(y) {
        return Err(Error::OutOfScope { y });
    }
    let r = c.colours() as usize;
    let fv = table.values_at(y).to_vec();
    let rel = x ^ y;
    let mut f_num: i128 = 0;
    let mut g_num: i128 = 0;
    let mut h_num: i128 = 0;
    for i in 0..n {
        let colour = c.edge_colour(y & !(1 << i), i) as usize;
        if rel & (1 << i) != 0 {
            h_num += i128::from(fv[colour]);
            g_num += i128::from(table.value(y ^ (1 << i), colour as u8));
        } else {
            f_num += i128::from(fv[colour]);
        }
    }
    let f = if d < n {
        rational(f_num, i128::from(n - d))
    } else {
        rational(i128::from(fv[..r].iter().copied().min().unwrap()), 1)
    };
    Ok(Fgh {
        f,
        g: rational(g_num, i128::from(d)),
        h: rational(h_num, i128::from(d)),
    })
}

/// Which averaged quantity an expectation refers to.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Quantity {
    /// The away-weighted average; at `k = n` the optimum is substituted.
    F,
    G,
    H,
    S,
    /// `min_c f_c(u, v)` — the optimal geodesic change count.
    Opt,
}

/// Conditioning of the random pair `(u, v)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Condition {
    None,
    GivenU(Vertex),
    GivenV(Vertex),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ExpectMode {
    Exact,
    Sample { count: u64, seed: u64 },
}

#[derive(Clone, Debug)]
pub enum Expectation {
    Exact(Rational),
    Sampled { mean: f64, stderr: f64, count: u64 },
}

impl Expectation {
    pub fn as_f64(&self) -> f64 {
        match self {
            Expectation::Exact(x) => x.to_f64().unwrap_or(f64::NAN),
            Expectation::Sampled { mean, .. } => *mean,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Expectation::Exact(x) => Some(x),
            Expectation::Sampled { .. } => None,
        }
    }
}

/// Per-`k` integer numerators of the pair sums, one slot per distance.
///
/// Denominators are reattached when a [`Rational`] is extracted: `f` by
/// `n-k`, `g` and `h` by `k`, `s` by `k(n-k)`, `opt` by 1, and every
/// quantity by the pair count.
#[derive(Clone)]
pub(crate) struct PairSums {
    pub n: u32,
    pub f: Vec<i128>,
    pub g: Vec<i128>,
    pub h: Vec<i128>,
    pub s: Vec<i128>,
    pub opt: Vec<i128>,
    pub pairs: Vec<u64>,
}

impl PairSums {
    pub fn new(n: u32) -> Self {
        let len = (n + 1) as usize;
        PairSums {
            n,
            f: vec![0; len],
            g: vec![0; len],
            h: vec![0; len],
            s: vec![0; len],
            opt: vec![0; len],
            pairs: vec![0; len],
        }
    }

    pub fn merge(mut self, other: PairSums) -> Self {
        for k in 0..self.f.len() {
            self.f[k] += other.f[k];
            self.g[k] += other.g[k];
            self.h[k] += other.h[k];
            self.s[k] += other.s[k];
            self.opt[k] += other.opt[k];
            self.pairs[k] += other.pairs[k];
        }
        self
    }
}

/// Accumulate every pair `(u, v)` for a fixed source `u` into `sums`,
/// reading `f_c(u, .)` from a whole-cube table rooted at `u`.
pub(crate) fn accumulate_from_source(
    c: &Colouring,
    u: Vertex,
    table: &FcTable,
    sums: &mut PairSums,
) {
    let dim = c.dim();
    let n = dim.n();
    let r = c.colours() as usize;
    let two_colours = r == 2;
    for v in dim.vertices() {
        let rel = u ^ v;
        let k = rel.count_ones();
        let fv = table.values_at(v);
        let mut i_cnt = [0i128; 16];
        let mut j_cnt = [0i128; 16];
        let mut g_num: i128 = 0;
        for i in 0..n {
            let colour = c.edge_colour(v & !(1 << i), i) as usize;
            if rel & (1 << i) != 0 {
                i_cnt[colour] += 1;
                g_num += i128::from(table.value(v ^ (1 << i), colour as u8));
            } else {
                j_cnt[colour] += 1;
            }
        }
        let mut f_num = 0i128;
        let mut h_num = 0i128;
        let mut opt = u8::MAX;
        for (colour, &val) in fv.iter().enumerate() {
            f_num += j_cnt[colour] * i128::from(val);
            h_num += i_cnt[colour] * i128::from(val);
            opt = opt.min(val);
        }
        let ku = k as usize;
        sums.f[ku] += f_num;
        sums.g[ku] += g_num;
        sums.h[ku] += h_num;
        if two_colours && k >= 1 && k < n {
            sums.s[ku] += (j_cnt[0] * i128::from(k) - i_cnt[0] * i128::from(n - k)).abs();
        }
        sums.opt[ku] += i128::from(opt);
        sums.pairs[ku] += 1;
    }
}

/// `f_c(u, v)` for every `u` and `c`, as a flat `2^n * r` array, computed by
/// a DP outward from the fixed target `v`: reading a geodesic backwards
/// turns "ending in colour c" into a charge on the first edge.
pub(crate) fn reverse_fc_values(c: &Colouring, v: Vertex) -> Vec<u8> {
    let dim = c.dim();
    let n = dim.n();
    let r = c.colours() as usize;
    let verts = dim.vertex_count() as usize;
    let mut out = vec![u8::MAX; verts * r];
    let mut dp = vec![u8::MAX; verts * r];
    let mut best = vec![u8::MAX; verts];
    for declared in 0..r {
        dp.fill(u8::MAX);
        best.fill(u8::MAX);
        best[v as usize] = 0;
        for layer in 1..=n {
            let mut mask: u64 = (1 << layer) - 1;
            loop {
                let w = v ^ (mask as Vertex);
                let mut m = mask as Vertex;
                let mut w_best = u8::MAX;
                while m != 0 {
                    let i = m.trailing_zeros();
                    m &= m - 1;
                    let z = w ^ (1 << i);
                    let colour = c.edge_colour(w & !(1 << i), i) as usize;
                    let val = if z == v {
                        u8::from(colour != declared)
                    } else {
                        dp[z as usize * r + colour].min(best[z as usize].saturating_add(1))
                    };
                    let slot = &mut dp[w as usize * r + colour];
                    if val < *slot {
                        *slot = val;
                    }
                    w_best = w_best.min(*slot);
                }
                best[w as usize] = w_best;

                if mask == ((1u64 << layer) - 1) << (n - layer) {
                    break;
                }
                let c0 = mask & mask.wrapping_neg();
                let rr = mask + c0;
                mask = (((mask ^ rr) >> 2) / c0) | rr;
            }
        }
        for u in 0..verts {
            out[u * r + declared] = best[u];
        }
    }
    out
}

/// As [`accumulate_from_source`] but with the second coordinate fixed:
/// accumulates every `(u, v)` for the given `v`, reading `f_c(u, v)` from a
/// reverse table and, when `with_g` is set, `f_c(u, z)` for the neighbours
/// `z` of `v` from per-neighbour reverse tables.
pub(crate) fn accumulate_to_target(
    c: &Colouring,
    v: Vertex,
    rev: &[u8],
    rev_neighbours: Option<&[Vec<u8>]>,
    sums: &mut PairSums,
) {
    let dim = c.dim();
    let n = dim.n();
    let r = c.colours() as usize;
    let two_colours = r == 2;
    // Colours of the n edges at v are the same for every u.
    let colours_at_v: Vec<usize> = (0..n)
        .map(|i| c.edge_colour(v & !(1 << i), i) as usize)
        .collect();
    for u in dim.vertices() {
        let rel = u ^ v;
        let k = rel.count_ones();
        let fv = &rev[u as usize * r..u as usize * r + r];
        let mut i_cnt = [0i128; 16];
        let mut j_cnt = [0i128; 16];
        let mut g_num: i128 = 0;
        for (i, &colour) in colours_at_v.iter().enumerate() {
            if rel & (1 << i) != 0 {
                i_cnt[colour] += 1;
                if let Some(tables) = rev_neighbours {
                    g_num += i128::from(tables[i][u as usize * r + colour]);
                }
            } else {
                j_cnt[colour] += 1;
            }
        }
        let mut f_num = 0i128;
        let mut h_num = 0i128;
        let mut opt = u8::MAX;
        for (colour, &val) in fv.iter().enumerate() {
            f_num += j_cnt[colour] * i128::from(val);
            h_num += i_cnt[colour] * i128::from(val);
            opt = opt.min(val);
        }
        let ku = k as usize;
        sums.f[ku] += f_num;
        sums.g[ku] += g_num;
        sums.h[ku] += h_num;
        if two_colours && k >= 1 && k < n {
            sums.s[ku] += (j_cnt[0] * i128::from(k) - i_cnt[0] * i128::from(n - k)).abs();
        }
        sums.opt[ku] += i128::from(opt);
        sums.pairs[ku] += 1;
    }
}

/// Sums over all ordered pairs, one whole-cube table per source, in
/// parallel. The reduction is integer addition, so the result is identical
/// for any thread count.
pub(crate) fn pair_sums_all_sources(c: &Colouring) -> PairSums {
    let dim = c.dim();
    dim.vertices()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|u| {
            let table = FcTable::build(c, u, Scope::WholeCube);
            let mut sums = PairSums::new(dim.n());
            accumulate_from_source(c, u, &table, &mut sums);
            sums
        })
        .reduce(|| PairSums::new(dim.n()), PairSums::merge)
}

pub(crate) fn pair_sums_given_u(c: &Colouring, u: Vertex) -> PairSums {
    let table = FcTable::build(c, u, Scope::WholeCube);
    let mut sums = PairSums::new(c.dim().n());
    accumulate_from_source(c, u, &table, &mut sums);
    sums
}

pub(crate) fn pair_sums_given_v(c: &Colouring, v: Vertex, with_g: bool) -> PairSums {
    let dim = c.dim();
    let rev = reverse_fc_values(c, v);
    let rev_neighbours: Option<Vec<Vec<u8>>> = if with_g {
        Some(
            (0..dim.n())
                .into_par_iter()
                .map(|i| reverse_fc_values(c, v ^ (1 << i)))
                .collect(),
        )
    } else {
        None
    };
    let mut sums = PairSums::new(dim.n());
    accumulate_to_target(c, v, &rev, rev_neighbours.as_deref(), &mut sums);
    sums
}

impl PairSums {
    /// The exact expectation of `q` at distance `k`, in lowest terms.
    pub fn expectation(&self, q: Quantity, k: u32) -> Rational {
        let n = self.n;
        let ku = k as usize;
        let cnt = i128::from(self.pairs[ku]);
        match q {
            Quantity::F if k == n => rational(self.opt[ku], cnt),
            Quantity::F => rational(self.f[ku], cnt * i128::from(n - k)),
            Quantity::G => rational(self.g[ku], cnt * i128::from(k)),
            Quantity::H => rational(self.h[ku], cnt * i128::from(k)),
            Quantity::S => rational(self.s[ku], cnt * i128::from(k) * i128::from(n - k)),
            Quantity::Opt => rational(self.opt[ku], cnt),
        }
    }
}

fn check_k_range(q: Quantity, k: u32, n: u32) -> Result<(), Error> {
    let (lo, hi) = match q {
        Quantity::F | Quantity::Opt => (0, n),
        Quantity::G | Quantity::H => (1, n),
        Quantity::S => (1, n - 1),
    };
    if k < lo || k > hi {
        return Err(Error::KOutOfRange { k, lo, hi });
    }
    Ok(())
}

/// `E_k[q]`: expectation of the quantity over uniform ordered pairs at
/// distance `k`, optionally conditioned on one endpoint.
///
/// Exact mode is gated at `n <= 12` unconditioned and `n <= 20`
/// conditioned. Sample mode draws `(u, mask)` pairs — a uniform vertex and
/// a uniform k-subset of directions — so the conditioning is unbiased.
pub fn expect_k(
    c: &Colouring,
    q: Quantity,
    k: u32,
    cond: Condition,
    mode: ExpectMode,
) -> Result<Expectation, Error> {
    let dim = c.dim();
    let n = dim.n();
    check_k_range(q, k, n)?;
    if q == Quantity::S && c.colours() != 2 {
        return Err(Error::TwoColoursRequired(c.colours()));
    }
    match cond {
        Condition::GivenU(u) => dim.check_vertex(u)?,
        Condition::GivenV(v) => dim.check_vertex(v)?,
        Condition::None => {}
    }

    match mode {
        ExpectMode::Exact => {
            let gate = match cond {
                Condition::None => EXACT_UNCOND_MAX_DIM,
                _ => EXACT_COND_MAX_DIM,
            };
            if n > gate {
                return Err(Error::GateExceeded {
                    what: "exact expectation",
                    limit: gate,
                    n,
                });
            }
            let sums = match cond {
                Condition::None => pair_sums_all_sources(c),
                Condition::GivenU(u) => pair_sums_given_u(c, u),
                Condition::GivenV(v) => pair_sums_given_v(c, v, q == Quantity::G),
            };
            Ok(Expectation::Exact(sums.expectation(q, k)))
        }
        ExpectMode::Sample { count, seed } => {
            let values: Vec<f64> = (0..count)
                .into_par_iter()
                .map(|probe| sample_one(c, q, k, cond, seed, probe))
                .collect();
            let (mean, stderr) = crate::geodesic::mean_and_stderr(values.into_iter());
            Ok(Expectation::Sampled {
                mean,
                stderr,
                count,
            })
        }
    }
}

/// One sampled pair: value of the quantity at a uniformly drawn pair.
fn sample_one(c: &Colouring, q: Quantity, k: u32, cond: Condition, seed: u64, probe: u64) -> f64 {
    let dim = c.dim();
    let n = dim.n();
    let mut rng = task_rng(seed, probe);
    // Uniform k-subset of directions.
    let mut dirs: Vec<u32> = (0..n).collect();
    let (chosen, _) = dirs.partial_shuffle(&mut rng, k as usize);
    let mask: Vertex = chosen.iter().fold(0, |m, &i| m | (1 << i));
    let (u, v) = match cond {
        Condition::None => {
            let u = rng.random::<u32>() & dim.full_mask();
            (u, u ^ mask)
        }
        Condition::GivenU(u0) => (u0, u0 ^ mask),
        Condition::GivenV(v0) => (v0 ^ mask, v0),
    };
    let table = FcTable::build(c, u, Scope::Interval(v));
    let fv = table.values_at(v);
    let rel = u ^ v;
    let mut i_cnt = [0i64; 16];
    let mut j_cnt = [0i64; 16];
    let mut g_num = 0i64;
    for i in 0..n {
        let colour = c.edge_colour(v & !(1 << i), i) as usize;
        if rel & (1 << i) != 0 {
            i_cnt[colour] += 1;
            g_num += i64::from(table.value(v ^ (1 << i), colour as u8));
        } else {
            j_cnt[colour] += 1;
        }
    }
    let weighted = |cnt: &[i64; 16]| -> i64 {
        fv.iter()
            .enumerate()
            .map(|(colour, &val)| cnt[colour] * i64::from(val))
            .sum()
    };
    match q {
        Quantity::F if k == n => f64::from(fv.iter().copied().min().unwrap()),
        Quantity::F => weighted(&j_cnt) as f64 / f64::from(n - k),
        Quantity::G => g_num as f64 / f64::from(k),
        Quantity::H => weighted(&i_cnt) as f64 / f64::from(k),
        Quantity::S => {
            let num = (j_cnt[0] * i64::from(k) - i_cnt[0] * i64::from(n - k)).abs();
            num as f64 / (f64::from(k) * f64::from(n - k))
        }
        Quantity::Opt => f64::from(fv.iter().copied().min().unwrap()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::RED;
    use crate::cube::CubeDim;
    use num_traits::Signed;

    fn dim(n: u32) -> CubeDim {
        CubeDim::new(n).unwrap()
    }

    /// Square with both edges at 00 red, both at 11 blue.
    fn square() -> Colouring {
        Colouring::from_fn(dim(2), 2, |v, _| u8::from(v != 0b00)).unwrap()
    }

    #[test]
    fn square_counts_and_s() {
        let c = square();
        let counts = ij_counts(&c, 0b00, 0b01).unwrap();
        assert_eq!(
            counts,
            IjCounts { i_red: 1, i_blue: 0, j_red: 0, j_blue: 1 }
        );
        assert_eq!(s_value(&c, 0b00, 0b01).unwrap(), rational(1, 1));
        assert!(s_value(&c, 0b00, 0b00).is_err());
        assert!(s_value(&c, 0b00, 0b11).is_err());
    }

    #[test]
    fn all_red_s_is_zero() {
        let c = Colouring::solid(dim(5), 2, RED).unwrap();
        for y in [0b00001u32, 0b00111, 0b11110] {
            assert_eq!(s_value(&c, 0, y).unwrap(), rational(0, 1));
        }
    }

    #[test]
    fn red_and_blue_forms_agree() {
        // |jR/(n-d) - iR/d| == |jB/(n-d) - iB/d| on 10^4 random probes.
        for n in 3..=10u32 {
            let q = dim(n);
            for seed in 0..5 {
                let c = Colouring::random(q, 2, seed).unwrap();
                let mut rng = task_rng(seed, 99);
                for _ in 0..250 {
                    let x: Vertex = rng.random::<u32>() & q.full_mask();
                    let y: Vertex = rng.random::<u32>() & q.full_mask();
                    let d = q.distance(x, y);
                    if d == 0 || d == q.n() {
                        continue;
                    }
                    let ct = ij_counts(&c, x, y).unwrap();
                    assert_eq!(ct.i_red + ct.i_blue, d);
                    assert_eq!(ct.j_red + ct.j_blue, q.n() - d);
                    let red = s_value(&c, x, y).unwrap();
                    let blue = (rational(i128::from(ct.j_blue), i128::from(q.n() - d))
                        - rational(i128::from(ct.i_blue), i128::from(d)))
                    .abs();
                    assert_eq!(red, blue);
                }
            }
        }
    }

    #[test]
    fn square_fgh() {
        let c = square();
        let table = FcTable::build(&c, 0b00, Scope::WholeCube);
        let at11 = fgh_averages(&c, 0b00, 0b11, &table).unwrap();
        assert_eq!(at11.g, rational(1, 1));
        assert_eq!(at11.h, rational(1, 1));
        // d = n: f falls back to the optimum.
        assert_eq!(at11.f, rational(1, 1));

        let at01 = fgh_averages(&c, 0b00, 0b01, &table).unwrap();
        assert_eq!(at01.f, rational(1, 1));
        assert!(fgh_averages(&c, 0b00, 0b00, &table).is_err());
    }

    #[test]
    fn all_red_fgh_vanish() {
        let q = dim(4);
        let c = Colouring::solid(q, 2, RED).unwrap();
        let table = FcTable::build(&c, 0, Scope::WholeCube);
        for y in q.vertices().skip(1) {
            let fgh = fgh_averages(&c, 0, y, &table).unwrap();
            assert_eq!(fgh.f, rational(0, 1));
            assert_eq!(fgh.g, rational(0, 1));
            assert_eq!(fgh.h, rational(0, 1));
        }
    }

    #[test]
    fn square_expectations() {
        let c = square();
        // E_1[f | u = 00] = 1, E_2[g | u = 00] = 1.
        let e1f = expect_k(&c, Quantity::F, 1, Condition::GivenU(0), ExpectMode::Exact).unwrap();
        assert_eq!(*e1f.exact().unwrap(), rational(1, 1));
        let e2g = expect_k(&c, Quantity::G, 2, Condition::GivenU(0), ExpectMode::Exact).unwrap();
        assert_eq!(*e2g.exact().unwrap(), rational(1, 1));
        // E_0[f] = 0 for any colouring.
        let e0 = expect_k(&c, Quantity::F, 0, Condition::None, ExpectMode::Exact).unwrap();
        assert_eq!(*e0.exact().unwrap(), rational(0, 1));
    }

    #[test]
    fn reverse_table_matches_forward() {
        let q = dim(5);
        for seed in 0..5 {
            let c = Colouring::random(q, 2, seed).unwrap();
            let v = 0b10110 & q.full_mask();
            let rev = reverse_fc_values(&c, v);
            for u in q.vertices() {
                let fwd = FcTable::build(&c, u, Scope::Interval(v));
                for colour in 0..2u8 {
                    assert_eq!(
                        rev[u as usize * 2 + colour as usize],
                        fwd.value(v, colour),
                        "seed={seed} u={u:05b} c={colour}"
                    );
                }
            }
        }
    }

    #[test]
    fn reverse_table_matches_forward_three_colours() {
        let q = dim(4);
        let c = Colouring::random(q, 3, 8).unwrap();
        for v in [0u32, 0b1011] {
            let rev = reverse_fc_values(&c, v);
            for u in q.vertices() {
                let fwd = FcTable::build(&c, u, Scope::Interval(v));
                for colour in 0..3u8 {
                    assert_eq!(rev[u as usize * 3 + colour as usize], fwd.value(v, colour));
                }
            }
        }
    }

    #[test]
    fn given_v_matches_unconditioned_totals() {
        // Summing the conditioned sums over all v must reproduce the
        // unconditioned sums.
        let q = dim(4);
        let c = Colouring::random(q, 2, 2).unwrap();
        let total = pair_sums_all_sources(&c);
        let mut recombined = PairSums::new(q.n());
        for v in q.vertices() {
            recombined = recombined.merge(pair_sums_given_v(&c, v, true));
        }
        for k in 0..=q.n() as usize {
            assert_eq!(total.f[k], recombined.f[k]);
            assert_eq!(total.g[k], recombined.g[k]);
            assert_eq!(total.h[k], recombined.h[k]);
            assert_eq!(total.s[k], recombined.s[k]);
            assert_eq!(total.opt[k], recombined.opt[k]);
            assert_eq!(total.pairs[k], recombined.pairs[k]);
        }
    }

    #[test]
    fn sampled_matches_exact_within_stderr() {
        let q = dim(8);
        let c = Colouring::random(q, 2, 7).unwrap();
        let exact = expect_k(&c, Quantity::F, 4, Condition::None, ExpectMode::Exact)
            .unwrap()
            .as_f64();
        let sampled = expect_k(
            &c,
            Quantity::F,
            4,
            Condition::None,
            ExpectMode::Sample { count: 4000, seed: 3 },
        )
        .unwrap();
        if let Expectation::Sampled { mean, stderr, .. } = sampled {
            assert!((mean - exact).abs() <= 4.0 * stderr.max(1e-9),
                    "mean {mean}, exact {exact}, stderr {stderr}");
        } else {
            panic!("expected sampled result");
        }
    }

    #[test]
    fn gates_and_ranges() {
        let c = Colouring::random(dim(13), 2, 0).unwrap();
        assert!(matches!(
            expect_k(&c, Quantity::F, 3, Condition::None, ExpectMode::Exact),
            Err(Error::GateExceeded { .. })
        ));
        let c4 = Colouring::random(dim(4), 2, 0).unwrap();
        assert!(expect_k(&c4, Quantity::S, 4, Condition::None, ExpectMode::Exact).is_err());
        assert!(expect_k(&c4, Quantity::G, 0, Condition::None, ExpectMode::Exact).is_err());
        assert!(expect_k(&c4, Quantity::F, 5, Condition::None, ExpectMode::Exact).is_err());
    }
}
