//! Search over the space of colourings: exhaustive scanning of every
//! 2-colouring at tiny `n`, seeded random scanning above that, and
//! single-edge-flip hill climbing that tries to push the mean antipodal
//! cost up.

use rayon::prelude::*;
use serde::Serialize;

use crate::colouring::Colouring;
use crate::cube::CubeDim;
use crate::error::Error;
use crate::geodesic::{antipodal_cost, antipodal_profile, CostMode};
use crate::rng::{split_seed, task_rng};
use rand::Rng;

/// Exhaustive scans enumerate `2^(n 2^(n-1))` colourings.
pub const EXHAUSTIVE_SCAN_MAX_DIM: u32 = 3;
/// Sampled scans and climbing recompute antipodal costs per colouring.
pub const SAMPLED_SCAN_MAX_DIM: u32 = 10;

/// The set of colourings a scan covered.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Universe {
    Exhaustive { count: u64, symmetry_reduced: bool },
    Sampled { count: u64, seed: u64 },
}

/// Result of a scan: the largest over scanned colourings of the smallest
/// antipodal cost, with the colouring achieving it.
#[derive(Clone, Debug, Serialize)]
pub struct ScanResult {
    pub n: u32,
    pub mode: CostMode,
    pub universe: Universe,
    pub worst_min_cost: u32,
    /// `ColourFileV1` payload of the colouring attaining `worst_min_cost`.
    pub argmax: String,
    /// Payloads of any colourings whose minimum antipodal cost reaches 2 —
    /// counterexample candidates, persisted for independent re-checking.
    pub refuting: Vec<String>,
}

/// Deterministic reduce step: larger cost wins, ties go to the smaller
/// index. Associative and commutative, so any parallel grouping agrees.
fn max_cost_min_index(a: (u32, u64), b: (u32, u64)) -> (u32, u64) {
    if a.0 != b.0 {
        if a.0 > b.0 {
            a
        } else {
            b
        }
    } else if a.1 <= b.1 {
        a
    } else {
        b
    }
}

/// The smallest antipodal cost over all antipodal pairs of the colouring.
pub fn min_antipodal_cost(c: &Colouring, mode: CostMode) -> u32 {
    let dim = c.dim();
    let reps = 1u32 << (dim.n() - 1);
    let mut best = u32::MAX;
    for v in 0..reps {
        best = best.min(antipodal_cost(c, v, mode));
        if best == 0 {
            break;
        }
    }
    best
}

fn colouring_from_code(dim: CubeDim, code: u64) -> Colouring {
    Colouring::from_edge_fn(dim, 2, |e| ((code >> e) & 1) as u8).expect("valid code")
}

/// Visit every 2-colouring of `Q_n` (n <= 3) and report the maximum over
/// colourings of the minimum antipodal cost. With `symmetry_reduce`, the
/// colour of edge 0 is fixed, halving the universe; the global colour swap
/// preserves every cost.
pub fn conjecture_scan(
    n: u32,
    mode: CostMode,
    symmetry_reduce: bool,
) -> Result<ScanResult, Error> {
    if n > EXHAUSTIVE_SCAN_MAX_DIM {
        return Err(Error::ExhaustiveScanTooLarge(n));
    }
    let dim = CubeDim::new(n)?;
    let edges = dim.edge_count();
    let total: u64 = 1 << edges;
    let count = if symmetry_reduce { total / 2 } else { total };
    // With symmetry reduction only codes with edge 0 red (bit 0 clear).
    let code_of = |idx: u64| if symmetry_reduce { idx << 1 } else { idx };

    let (worst, argmax_code) = (0..count)
        .into_par_iter()
        .map(|idx| {
            let code = code_of(idx);
            let c = colouring_from_code(dim, code);
            (min_antipodal_cost(&c, mode), code)
        })
        .reduce(|| (0, u64::MAX), max_cost_min_index);

    let refuting: Vec<String> = (0..count)
        .into_par_iter()
        .filter_map(|idx| {
            let code = code_of(idx);
            let c = colouring_from_code(dim, code);
            (min_antipodal_cost(&c, mode) >= 2).then(|| c.to_file_string())
        })
        .collect();

    Ok(ScanResult {
        n,
        mode,
        universe: Universe::Exhaustive {
            count,
            symmetry_reduced: symmetry_reduce,
        },
        worst_min_cost: worst,
        argmax: colouring_from_code(dim, argmax_code).to_file_string(),
        refuting,
    })
}

/// Scan `count` seeded random 2-colourings. Deterministic in the seed.
pub fn sampled_scan(n: u32, count: u64, seed: u64, mode: CostMode) -> Result<ScanResult, Error> {
    if n > SAMPLED_SCAN_MAX_DIM {
        return Err(Error::GateExceeded {
            what: "sampled scan",
            limit: SAMPLED_SCAN_MAX_DIM,
            n,
        });
    }
    if count == 0 {
        return Err(Error::Usage("sampled scan needs at least one sample".into()));
    }
    let dim = CubeDim::new(n)?;
    let colouring_at = |i: u64| Colouring::random(dim, 2, split_seed(seed, i)).expect("r = 2");

    let (worst, argmax_idx) = (0..count)
        .into_par_iter()
        .map(|i| (min_antipodal_cost(&colouring_at(i), mode), i))
        .reduce(|| (0, u64::MAX), max_cost_min_index);

    let refuting: Vec<String> = (0..count)
        .into_par_iter()
        .filter_map(|i| {
            let c = colouring_at(i);
            (min_antipodal_cost(&c, mode) >= 2).then(|| c.to_file_string())
        })
        .collect();

    Ok(ScanResult {
        n,
        mode,
        universe: Universe::Sampled { count, seed },
        worst_min_cost: worst,
        argmax: colouring_at(argmax_idx).to_file_string(),
        refuting,
    })
}

/// What the climber maximises: the mean antipodal cost over all vertices.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClimbObjective {
    MeanPathCost,
    MeanGeodesicCost,
}

impl ClimbObjective {
    fn mode(self) -> CostMode {
        match self {
            ClimbObjective::MeanPathCost => CostMode::Path,
            ClimbObjective::MeanGeodesicCost => CostMode::Geodesic,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClimbOutcome {
    pub best: Colouring,
    pub objective: f64,
    pub start_objective: f64,
    pub evaluations: u64,
    /// Best objective seen after each evaluation; non-decreasing.
    pub best_trace: Vec<f64>,
}

/// Objective is exact for `n <= 8`; above that a fixed sample of vertices
/// (drawn once from the seed) keeps evaluations comparable across steps.
const EXACT_OBJECTIVE_MAX_DIM: u32 = 8;
const OBJECTIVE_SAMPLES: usize = 1024;
const STALL_LIMIT: u64 = 200;

/// Single-edge-flip hill climbing from `start`, restarting from random
/// colourings when stuck. Accepts any proposal that does not lower the
/// objective, so the best value never decreases. Deterministic in the seed.
pub fn adversary_climb(
    objective: ClimbObjective,
    budget: u64,
    seed: u64,
    start: &Colouring,
) -> Result<ClimbOutcome, Error> {
    let dim = start.dim();
    let n = dim.n();
    if n > SAMPLED_SCAN_MAX_DIM {
        return Err(Error::GateExceeded {
            what: "adversary climb",
            limit: SAMPLED_SCAN_MAX_DIM,
            n,
        });
    }
    let mode = objective.mode();
    let r = start.colours();

    // Fixed evaluation vertex set for n above the exact gate.
    let sample_set: Option<Vec<u32>> = (n > EXACT_OBJECTIVE_MAX_DIM).then(|| {
        let mut rng = task_rng(seed, u64::MAX);
        (0..OBJECTIVE_SAMPLES)
            .map(|_| rng.random::<u32>() & dim.full_mask())
            .collect()
    });
    let eval = |c: &Colouring| -> f64 {
        match &sample_set {
            None => {
                let profile = antipodal_profile(c, mode).expect("within profile gate");
                profile.iter().map(|&x| f64::from(x)).sum::<f64>() / profile.len() as f64
            }
            Some(set) => {
                let total: u64 = set
                    .par_iter()
                    .map(|&v| u64::from(antipodal_cost(c, v, mode)))
                    .sum();
                total as f64 / set.len() as f64
            }
        }
    };

    let mut rng = task_rng(seed, 0);
    let mut current = start.clone();
    let mut current_obj = eval(&current);
    let start_objective = current_obj;
    let mut best = current.clone();
    let mut best_obj = current_obj;
    let mut best_trace = vec![best_obj];
    let mut stall = 0u64;
    let mut restarts = 0u64;
    let mut evaluations = 1u64;

    for _ in 0..budget {
        let e = rng.random_range(0..dim.edge_count());
        let old = current.colour_of(e).expect("edge in range");
        let new = if r == 2 {
            1 - old
        } else {
            (old + 1 + rng.random_range(0..r - 1)) % r
        };
        let candidate = current.with_colour(e, new).expect("valid recolouring");
        let cand_obj = eval(&candidate);
        evaluations += 1;
        if cand_obj >= current_obj {
            current = candidate;
            current_obj = cand_obj;
            if cand_obj > best_obj {
                best = current.clone();
                best_obj = cand_obj;
                stall = 0;
            } else {
                stall += 1;
            }
        } else {
            stall += 1;
        }
        if stall > STALL_LIMIT {
            restarts += 1;
            current = Colouring::random(dim, r, split_seed(seed, 1_000_000 + restarts))?;
            current_obj = eval(&current);
            evaluations += 1;
            stall = 0;
        }
        best_trace.push(best_obj);
    }

    Ok(ClimbOutcome {
        best,
        objective: best_obj,
        start_objective,
        evaluations,
        best_trace,
    })
}
