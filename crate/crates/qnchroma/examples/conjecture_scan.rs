//! Exhaustive and sampled scans for colourings that force many antipodal
//! colour changes.

use qnchroma::{conjecture_scan, sampled_scan, CostMode};

fn main() {
    for n in [2u32, 3] {
        let result = conjecture_scan(n, CostMode::Path, false).unwrap();
        println!(
            "n = {n}: worst min antipodal cost over {:?} = {} ({} refuting candidates)",
            result.universe,
            result.worst_min_cost,
            result.refuting.len()
        );
    }

    // With the colour of edge 0 fixed, half the universe suffices.
    let reduced = conjecture_scan(3, CostMode::Path, true).unwrap();
    println!("n = 3 with symmetry reduction: {:?}", reduced.universe);

    // Above n = 3 the space is astronomical; sample instead.
    let sampled = sampled_scan(6, 2_000, 0, CostMode::Path).unwrap();
    println!(
        "n = 6, 2000 random colourings: worst min cost = {} ({} refuting)",
        sampled.worst_min_cost,
        sampled.refuting.len()
    );
    println!("\nargmax colouring at n = 3 (QNCOL payload):\n{}", {
        let full = conjecture_scan(3, CostMode::Path, false).unwrap();
        full.argmax
    });
}
