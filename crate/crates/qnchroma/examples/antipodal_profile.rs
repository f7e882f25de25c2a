//! Exact antipodal cost profiles and how their means sit under the bound.

use qnchroma::{antipodal_profile, master_bound, Colouring, CostMode, CubeDim, VarianceMode};

fn main() {
    let n = 10;
    let q = CubeDim::new(n).unwrap();
    let bound = master_bound(u64::from(n), VarianceMode::Exact).unwrap();
    println!("n = {n}, B(n) = {bound:.4}\n");

    for (label, colouring) in [
        ("layered", Colouring::layered(q, 0).unwrap()),
        ("direction r=2", Colouring::direction(q, 2).unwrap()),
        ("random seed 0", Colouring::random(q, 2, 0).unwrap()),
    ] {
        for mode in [CostMode::Geodesic, CostMode::Path] {
            let profile = antipodal_profile(&colouring, mode).unwrap();
            let mut hist = std::collections::BTreeMap::new();
            for &cost in &profile {
                *hist.entry(cost).or_insert(0u32) += 1;
            }
            let mean = profile.iter().map(|&x| f64::from(x)).sum::<f64>()
                / profile.len() as f64;
            println!(
                "{label:<14} {mode:?}: mean {mean:.4} (<= {bound:.4}), histogram {:?}",
                hist.into_iter().collect::<Vec<_>>()
            );
        }
        println!();
    }
}
