//! Hamilton paths with few colour changes and monochromatic components of
//! spanning trees.

use qnchroma::{
    gray_code_cc, hamilton_min_cc, hamming_component_bound, mono_components,
    random_spanning_tree, Colouring, CubeDim,
};

fn main() {
    let q3 = CubeDim::new(3).unwrap();
    for (label, colouring) in [
        ("layered", Colouring::layered(q3, 0).unwrap()),
        ("perfect-code", Colouring::hamming(q3).unwrap().0),
        ("random seed 5", Colouring::random(q3, 2, 5).unwrap()),
    ] {
        let (exact, path) = hamilton_min_cc(&colouring).unwrap();
        let gray = gray_code_cc(&colouring).unwrap();
        println!("{label:<14}: exact Hamilton minimum {exact} (Gray-code walk {gray})");
        println!(
            "  witness: {}",
            path.iter().map(|v| format!("{v:03b}")).collect::<Vec<_>>().join(" -> ")
        );
    }

    // Random spanning trees of Q_7 under the perfect-code colouring always
    // split into at least 2^7/8 = 16 monochromatic components.
    let report = hamming_component_bound(7, 25, 0).unwrap();
    println!(
        "\nperfect-code colouring on Q_7: min components over {} trees = {} (bound {}), violations: {}",
        report.trials,
        report.min_components,
        report.bound,
        report.violations.len()
    );

    // Component counts for a few individual trees.
    let (c7, _) = Colouring::hamming(CubeDim::new(7).unwrap()).unwrap();
    for seed in 0..3 {
        let tree = random_spanning_tree(CubeDim::new(7).unwrap(), seed).unwrap();
        println!(
            "  tree (seed {seed}): {} monochromatic components",
            mono_components(&c7, &tree).unwrap()
        );
    }
}
