//! Hill climbing on the mean antipodal path cost, starting from the
//! layered colouring.

use qnchroma::{adversary_climb, antipodal_profile, ClimbObjective, Colouring, CostMode, CubeDim};

fn main() {
    let q = CubeDim::new(6).unwrap();
    let layered = Colouring::layered(q, 0).unwrap();
    let profile = antipodal_profile(&layered, CostMode::Path).unwrap();
    let baseline =
        profile.iter().map(|&x| f64::from(x)).sum::<f64>() / profile.len() as f64;
    println!("layered Q_6 baseline mean path cost: {baseline:.5}");

    let outcome = adversary_climb(ClimbObjective::MeanPathCost, 400, 1, &layered).unwrap();
    println!(
        "after {} evaluations: best objective {:.5} (start {:.5})",
        outcome.evaluations, outcome.objective, outcome.start_objective
    );
    let trace = &outcome.best_trace;
    for (i, window) in trace.windows(2).enumerate() {
        if window[1] > window[0] {
            println!("  improved to {:.5} at evaluation {}", window[1], i + 1);
        }
    }
    println!(
        "trace is non-decreasing: {}",
        trace.windows(2).all(|w| w[1] >= w[0])
    );
}
