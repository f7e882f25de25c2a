//! Certificate-producing verification of the averaged-quantity identities
//! and inequalities, plus the full per-distance chain report.
//!
//! Everything that can be checked exactly is checked with integer
//! arithmetic at zero tolerance: step1 is an equality of integer sums,
//! step2 and step3's pointwise form compare integer numerators over common
//! denominators. Floating point only enters where a closed-form bound with
//! a square root is evaluated.

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::averages::{
    pair_sums_all_sources, pair_sums_given_u, pair_sums_given_v, rational, rational_str,
    reverse_fc_values, Quantity, Rational,
};
use crate::bounds::{s_bound, VarianceMode};
use crate::colouring::Colouring;
use crate::cube::Vertex;
use crate::error::Error;
use crate::geodesic::{FcTable, Scope};
use crate::rng::task_rng;
use rand::Rng;

/// Exhaustive pair scans are one DP table per source.
pub const EXHAUSTIVE_MAX_DIM: u32 = 12;
/// Conditioned scans build reverse tables over the whole cube.
pub const CONDITIONED_MAX_DIM: u32 = 20;

const SAMPLED_PAIRS: u64 = 2_000;
const SAMPLED_SEED: u64 = 0x5742;

/// Outcome of one verification run.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub claim: String,
    pub holds: bool,
    /// Number of pairs (or `(k, u)` combinations) examined.
    pub checked: u64,
    /// For equality/inequality claims about expectations: the two sides.
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
    /// Human-readable description of the first failure, if any.
    pub counterexample: Option<String>,
}

impl Certificate {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "claim": self.claim,
            "holds": self.holds,
            "checked": self.checked,
            "lhs": self.lhs.as_ref().map(rational_str),
            "rhs": self.rhs.as_ref().map(rational_str),
            "counterexample": self.counterexample,
        })
    }
}

fn check_gate(n: u32, limit: u32, what: &'static str) -> Result<(), Error> {
    if n > limit {
        Err(Error::GateExceeded { what, limit, n })
    } else {
        Ok(())
    }
}

/// step1: the shell identity `E_{k-1}[f] = E_k[g]`, exact. With `u` given,
/// the conditioned form — both sides average the same edge sum between the
/// (k-1)-th and k-th neighbourhoods of `u`, so the integer numerators must
/// match outright.
pub fn verify_step1(c: &Colouring, k: u32, u: Option<Vertex>) -> Result<Certificate, Error> {
    let n = c.dim().n();
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, lo: 1, hi: n });
    }
    let sums = match u {
        Some(u) => {
            check_gate(n, CONDITIONED_MAX_DIM, "conditioned step1")?;
            c.dim().check_vertex(u)?;
            pair_sums_given_u(c, u)
        }
        None => {
            check_gate(n, EXHAUSTIVE_MAX_DIM, "exhaustive step1")?;
            pair_sums_all_sources(c)
        }
    };
    let lhs = sums.expectation(Quantity::F, k - 1);
    let rhs = sums.expectation(Quantity::G, k);
    let holds = lhs == rhs;
    let scope = match u {
        Some(u) => format!("u={u}"),
        None => "unconditioned".into(),
    };
    Ok(Certificate {
        claim: format!("step1: E_{}[f] == E_{}[g] ({scope})", k - 1, k),
        holds,
        checked: sums.pairs[(k - 1) as usize] + sums.pairs[k as usize],
        counterexample: (!holds).then(|| {
            format!(
                "k={k} {scope}: E_{}[f] = {} but E_{}[g] = {}",
                k - 1,
                rational_str(&lhs),
                k,
                rational_str(&rhs)
            )
        }),
        lhs: Some(lhs),
        rhs: Some(rhs),
    })
}

/// step1 for every `k` and every conditioning vertex `u` in one sweep.
pub fn verify_step1_exhaustive(c: &Colouring) -> Result<Certificate, Error> {
    let dim = c.dim();
    let n = dim.n();
    check_gate(n, EXHAUSTIVE_MAX_DIM, "exhaustive step1")?;
    let failures: Vec<String> = dim
        .vertices()
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter_map(|u| {
            let sums = pair_sums_given_u(c, u);
            for k in 1..=n {
                let lhs = sums.expectation(Quantity::F, k - 1);
                let rhs = sums.expectation(Quantity::G, k);
                if lhs != rhs {
                    return Some(format!(
                        "u={u}, k={k}: E_{}[f] = {} != E_{}[g] = {}",
                        k - 1,
                        rational_str(&lhs),
                        k,
                        rational_str(&rhs)
                    ));
                }
            }
            None
        })
        .collect();
    let checked = dim.vertex_count() * u64::from(n);
    Ok(Certificate {
        claim: format!("step1: E_{{k-1}}[f] == E_k[g] for all k in [1,{n}], all u"),
        holds: failures.is_empty(),
        checked,
        lhs: None,
        rhs: None,
        counterexample: failures.into_iter().next(),
    })
}

/// step2: `h(x, y) <= g(x, y)` for every pair with `d >= 1` — extending a
/// geodesic along an equal-coloured edge never costs a change. Exhaustive
/// up to the gate, sampled beyond it.
pub fn verify_step2(c: &Colouring) -> Result<Certificate, Error> {
    let dim = c.dim();
    let n = dim.n();
    if n <= EXHAUSTIVE_MAX_DIM {
        let violations: Vec<String> = dim
            .vertices()
            .collect::<Vec<_>>()
            .into_par_iter()
            .filter_map(|x| {
                let table = FcTable::build(c, x, Scope::WholeCube);
                for y in dim.vertices() {
                    if x == y {
                        continue;
                    }
                    if let Some(msg) = step2_violation_at(c, x, y, &table) {
                        return Some(msg);
                    }
                }
                None
            })
            .collect();
        let checked = dim.vertex_count() * (dim.vertex_count() - 1);
        Ok(Certificate {
            claim: format!("step2: h <= g pointwise (exhaustive, n={n})"),
            holds: violations.is_empty(),
            checked,
            lhs: None,
            rhs: None,
            counterexample: violations.into_iter().next(),
        })
    } else {
        let violations: Vec<String> = (0..SAMPLED_PAIRS)
            .into_par_iter()
            .filter_map(|probe| {
                let mut rng = task_rng(SAMPLED_SEED, probe);
                let x = rng.random::<u32>() & dim.full_mask();
                let rel = 1 + (rng.random::<u32>() & (dim.full_mask() - 1));
                let y = x ^ rel;
                let table = FcTable::build(c, x, Scope::Interval(y));
                step2_violation_at(c, x, y, &table)
            })
            .collect();
        Ok(Certificate {
            claim: format!("step2: h <= g pointwise (sampled {SAMPLED_PAIRS} pairs, n={n})"),
            holds: violations.is_empty(),
            checked: SAMPLED_PAIRS,
            lhs: None,
            rhs: None,
            counterexample: violations.into_iter().next(),
        })
    }
}

/// Integer form of `h(x,y) <= g(x,y)`: both sides share the denominator d.
fn step2_violation_at(c: &Colouring, x: Vertex, y: Vertex, table: &FcTable) -> Option<String> {
    let n = c.dim().n();
    let rel = x ^ y;
    let fv = table.values_at(y);
    let mut h_num: i64 = 0;
    let mut g_num: i64 = 0;
    for i in 0..n {
        if rel & (1 << i) == 0 {
            continue;
        }
        let colour = c.edge_colour(y & !(1 << i), i);
        h_num += i64::from(fv[colour as usize]);
        g_num += i64::from(table.value(y ^ (1 << i), colour));
    }
    (h_num > g_num).then(|| {
        let d = i128::from(rel.count_ones());
        format!(
            "pair ({x}, {y}): h = {} > g = {}",
            rational_str(&rational(i128::from(h_num), d)),
            rational_str(&rational(i128::from(g_num), d))
        )
    })
}

/// Integer form of the pointwise bound `|f - h| <= S` at one pair, both
/// sides multiplied by `k(n-k)`. Requires a 2-colouring.
fn step3_pointwise_violation(
    c: &Colouring,
    x: Vertex,
    y: Vertex,
    table_values: &[u8],
    at_y_colours: impl Iterator<Item = u8>,
) -> Option<String> {
    let n = c.dim().n();
    let rel = x ^ y;
    let k = rel.count_ones();
    let mut diff: i64 = 0; // sum_c (j_c k - i_c (n-k)) f_c
    let mut j_red: i64 = 0;
    let mut i_red: i64 = 0;
    for (i, colour) in at_y_colours.enumerate() {
        let fv = i64::from(table_values[colour as usize]);
        if rel & (1 << i) != 0 {
            diff -= fv * i64::from(n - k);
            if colour == 0 {
                i_red += 1;
            }
        } else {
            diff += fv * i64::from(k);
            if colour == 0 {
                j_red += 1;
            }
        }
    }
    let s_num = (j_red * i64::from(k) - i_red * i64::from(n - k)).abs();
    (diff.abs() > s_num).then(|| {
        let den = i128::from(k) * i128::from(n - k);
        format!(
            "pair ({x}, {y}): |f - h| = {} > S = {}",
            rational_str(&rational(i128::from(diff.abs()), den)),
            rational_str(&rational(i128::from(s_num), den))
        )
    })
}

/// step3: `E_k[f] <= E_k[h] + E_k[S]`, exact, plus the pointwise form
/// `|f - h| <= S` over the same universe. Optionally conditioned on the
/// target vertex `v`.
pub fn verify_step3(c: &Colouring, k: u32, v: Option<Vertex>) -> Result<Certificate, Error> {
    let dim = c.dim();
    let n = dim.n();
    if c.colours() != 2 {
        return Err(Error::TwoColoursRequired(c.colours()));
    }
    if k < 1 || k >= n {
        return Err(Error::KOutOfRange { k, lo: 1, hi: n - 1 });
    }

    let (sums, pointwise_violation, scope) = match v {
        Some(v) => {
            check_gate(n, CONDITIONED_MAX_DIM, "conditioned step3")?;
            dim.check_vertex(v)?;
            let rev = reverse_fc_values(c, v);
            let colours_at_v: Vec<u8> =
                (0..n).map(|i| c.edge_colour(v & !(1 << i), i)).collect();
            let mut violation = None;
            for u in dim.vertices() {
                if dim.distance(u, v) != k {
                    continue;
                }
                let fv = &rev[u as usize * 2..u as usize * 2 + 2];
                if let Some(msg) =
                    step3_pointwise_violation(c, u, v, fv, colours_at_v.iter().copied())
                {
                    violation = Some(msg);
                    break;
                }
            }
            (pair_sums_given_v(c, v, false), violation, format!("v={v}"))
        }
        None => {
            check_gate(n, EXHAUSTIVE_MAX_DIM, "exhaustive step3")?;
            let violations: Vec<String> = dim
                .vertices()
                .collect::<Vec<_>>()
                .into_par_iter()
                .filter_map(|u| {
                    let table = FcTable::build(c, u, Scope::WholeCube);
                    for y in dim.vertices() {
                        if dim.distance(u, y) != k {
                            continue;
                        }
                        let colours = (0..n).map(|i| c.edge_colour(y & !(1 << i), i));
                        if let Some(msg) =
                            step3_pointwise_violation(c, u, y, table.values_at(y), colours)
                        {
                            return Some(msg);
                        }
                    }
                    None
                })
                .collect();
            (
                pair_sums_all_sources(c),
                violations.into_iter().next(),
                "unconditioned".into(),
            )
        }
    };

    // E_k[f] <= E_k[h] + E_k[S], cleared to k(n-k) times the pair count.
    let ku = k as usize;
    let expectation_holds =
        sums.f[ku] * i128::from(k) <= sums.h[ku] * i128::from(n - k) + sums.s[ku];
    let lhs = sums.expectation(Quantity::F, k);
    let rhs = sums.expectation(Quantity::H, k) + sums.expectation(Quantity::S, k);
    let holds = expectation_holds && pointwise_violation.is_none();
    let counterexample = if !expectation_holds {
        Some(format!(
            "k={k} {scope}: E_k[f] = {} > E_k[h] + E_k[S] = {}",
            rational_str(&lhs),
            rational_str(&rhs)
        ))
    } else {
        pointwise_violation
    };
    Ok(Certificate {
        claim: format!("step3: E_{k}[f] <= E_{k}[h] + E_{k}[S] and |f-h| <= S ({scope})"),
        holds,
        checked: sums.pairs[ku],
        lhs: Some(lhs),
        rhs: Some(rhs),
        counterexample,
    })
}

/// step3 for every `k` in `[1, n-1]`, expectations and pointwise form,
/// unconditioned, in one sweep.
pub fn verify_step3_exhaustive(c: &Colouring) -> Result<Certificate, Error> {
    let dim = c.dim();
    let n = dim.n();
    if c.colours() != 2 {
        return Err(Error::TwoColoursRequired(c.colours()));
    }
    check_gate(n, EXHAUSTIVE_MAX_DIM, "exhaustive step3")?;

    let pointwise: Vec<String> = dim
        .vertices()
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter_map(|u| {
            let table = FcTable::build(c, u, Scope::WholeCube);
            for y in dim.vertices() {
                let d = dim.distance(u, y);
                if d == 0 || d == n {
                    continue;
                }
                let colours = (0..n).map(|i| c.edge_colour(y & !(1 << i), i));
                if let Some(msg) =
                    step3_pointwise_violation(c, u, y, table.values_at(y), colours)
                {
                    return Some(msg);
                }
            }
            None
        })
        .collect();

    let sums = pair_sums_all_sources(c);
    let mut counterexample = pointwise.into_iter().next();
    if counterexample.is_none() {
        for k in 1..n {
            let ku = k as usize;
            if sums.f[ku] * i128::from(k) > sums.h[ku] * i128::from(n - k) + sums.s[ku] {
                counterexample = Some(format!(
                    "k={k}: E_k[f] = {} > E_k[h] + E_k[S] = {}",
                    rational_str(&sums.expectation(Quantity::F, k)),
                    rational_str(
                        &(sums.expectation(Quantity::H, k) + sums.expectation(Quantity::S, k))
                    ),
                ));
                break;
            }
        }
    }
    Ok(Certificate {
        claim: format!("step3: expectation and pointwise forms, all k in [1,{}]", n - 1),
        holds: counterexample.is_none(),
        checked: dim.vertex_count() * (dim.vertex_count() - 2),
        lhs: None,
        rhs: None,
        counterexample,
    })
}

/// One row of the chain report.
#[derive(Clone, Debug)]
pub struct ChainRow {
    pub k: u32,
    pub ef: Rational,
    pub eg: Rational,
    pub eh: Rational,
    pub es: Rational,
    /// Closed-form bound on `E_k[S]` (exact-variance mode).
    pub bound: f64,
    /// Prefix sum of the bounds up to this `k`.
    pub cumulative_bound: f64,
}

/// The full verification record for one colouring: exact per-`k`
/// expectations, the closed-form bound column, and every chain inequality.
#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub n: u32,
    pub rows: Vec<ChainRow>,
    /// `E_n[opt]`: expected optimal change count at antipodal distance.
    pub antipodal_opt: Rational,
    pub holds: bool,
    pub violations: Vec<String>,
}

/// Verify the combined chain on a 2-colouring:
/// `E_k[f] <= E_{k-1}[f] + E_k[S]` exactly for every `k` in `[1, n-1]`,
/// `E_k[f]` below the prefix-summed closed-form bound, `E_k[S]` below its
/// per-`k` bound, and `E_n[opt] <= E_{n-1}[f]`.
pub fn verify_corollary_chain(c: &Colouring) -> Result<LemmaReport, Error> {
    let dim = c.dim();
    let n = dim.n();
    if c.colours() != 2 {
        return Err(Error::TwoColoursRequired(c.colours()));
    }
    if n < 3 {
        // s_bound needs n >= 3; surface its error shape.
        s_bound(u64::from(n), 1, VarianceMode::Exact)?;
    }
    check_gate(n, EXHAUSTIVE_MAX_DIM, "chain verification")?;

    let sums = pair_sums_all_sources(c);
    let mut rows = Vec::with_capacity((n - 1) as usize);
    let mut violations = Vec::new();
    let mut cumulative = 0.0;
    let mut prev_ef = rational(0, 1);
    for k in 1..n {
        let ef = sums.expectation(Quantity::F, k);
        let eg = sums.expectation(Quantity::G, k);
        let eh = sums.expectation(Quantity::H, k);
        let es = sums.expectation(Quantity::S, k);
        let bound = s_bound(u64::from(n), u64::from(k), VarianceMode::Exact)?;
        cumulative += bound;

        if ef > prev_ef.clone() + es.clone() {
            violations.push(format!(
                "k={k}: E_k[f] = {} > E_{{k-1}}[f] + E_k[S] = {}",
                rational_str(&ef),
                rational_str(&(prev_ef.clone() + es.clone()))
            ));
        }
        let ef_f64 = ef.to_f64().unwrap_or(f64::INFINITY);
        if ef_f64 > cumulative {
            violations.push(format!(
                "k={k}: E_k[f] = {ef_f64} exceeds cumulative bound {cumulative}"
            ));
        }
        let es_f64 = es.to_f64().unwrap_or(f64::INFINITY);
        if es_f64 > bound {
            violations.push(format!(
                "k={k}: E_k[S] = {es_f64} exceeds per-k bound {bound}"
            ));
        }
        rows.push(ChainRow {
            k,
            ef: ef.clone(),
            eg,
            eh,
            es,
            bound,
            cumulative_bound: cumulative,
        });
        prev_ef = ef;
    }

    let antipodal_opt = sums.expectation(Quantity::Opt, n);
    if antipodal_opt > prev_ef {
        violations.push(format!(
            "E_n[opt] = {} > E_{{n-1}}[f] = {}",
            rational_str(&antipodal_opt),
            rational_str(&prev_ef)
        ));
    }

    Ok(LemmaReport {
        n,
        rows,
        antipodal_opt,
        holds: violations.is_empty(),
        violations,
    })
}

/// Run every verification on one colouring.
pub fn verify_all(c: &Colouring) -> Result<(Vec<Certificate>, LemmaReport), Error> {
    let certs = vec![
        verify_step1_exhaustive(c)?,
        verify_step2(c)?,
        verify_step3_exhaustive(c)?,
    ];
    let report = verify_corollary_chain(c)?;
    Ok((certs, report))
}
