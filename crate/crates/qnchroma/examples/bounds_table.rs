//! The per-distance deviation bound, its prefix sums, and the limiting
//! constant pi/2.

use qnchroma::{hypergeom_moments, master_bound, s_bound, VarianceMode};

fn main() {
    let n = 16u64;
    println!("per-k bound at n = {n} (exact-variance mode):");
    println!("{:>4} {:>10} {:>12}", "k", "bound", "cumulative");
    let mut cumulative = 0.0;
    for k in 1..n {
        let b = s_bound(n, k, VarianceMode::Exact).unwrap();
        cumulative += b;
        println!("{k:>4} {b:>10.5} {cumulative:>12.5}");
    }

    println!("\nB(n)/sqrt(n) climbs to pi/2 = {:.6}:", std::f64::consts::FRAC_PI_2);
    for exp in 1..=6u32 {
        let n = 10u64.pow(exp);
        let scaled = master_bound(n, VarianceMode::Exact).unwrap() / (n as f64).sqrt();
        println!("  n = 10^{exp}: {scaled:.6}");
    }

    // The two variance conventions behind the bound.
    let (mean, exact) = hypergeom_moments(12, 5, 4, VarianceMode::Exact).unwrap();
    let (_, paper) = hypergeom_moments(12, 5, 4, VarianceMode::Paper).unwrap();
    println!("\nhypergeometric(n=12, k=5, r=4): mean {mean}, variance {exact} (exact) vs {paper} (looser mode)");
}
