//! Exact and sampled conditional expectations of the averaged quantities.

use qnchroma::{
    expect_k, fgh_averages, ij_counts, s_value, Colouring, Condition, CubeDim, ExpectMode,
    Expectation, FcTable, Quantity, Scope,
};

fn main() {
    let q = CubeDim::new(8).unwrap();
    let colouring = Colouring::random(q, 2, 3).unwrap();

    // Local statistics at one pair.
    let (x, y) = (0b0000_0000, 0b0011_0101);
    let counts = ij_counts(&colouring, x, y).unwrap();
    println!("at ({x:08b}, {y:08b}): {counts:?}, S = {}", s_value(&colouring, x, y).unwrap());
    let table = FcTable::build(&colouring, x, Scope::WholeCube);
    let fgh = fgh_averages(&colouring, x, y, &table).unwrap();
    println!("f = {}, g = {}, h = {}", fgh.f, fgh.g, fgh.h);

    // Exact expectations per distance: f tracks the chain, S stays small.
    println!("\nexact E_k over uniform pairs:");
    for k in 1..q.n() {
        let ef = expect_k(&colouring, Quantity::F, k, Condition::None, ExpectMode::Exact).unwrap();
        let es = expect_k(&colouring, Quantity::S, k, Condition::None, ExpectMode::Exact).unwrap();
        println!(
            "  k = {k}: E_k[f] = {} ({:.4}), E_k[S] = {:.4}",
            es_str(&ef),
            ef.as_f64(),
            es.as_f64()
        );
    }

    // Sampling agrees with exact within its standard error.
    let exact = expect_k(&colouring, Quantity::F, 4, Condition::None, ExpectMode::Exact)
        .unwrap()
        .as_f64();
    let sampled = expect_k(
        &colouring,
        Quantity::F,
        4,
        Condition::None,
        ExpectMode::Sample { count: 5000, seed: 7 },
    )
    .unwrap();
    if let Expectation::Sampled { mean, stderr, count } = sampled {
        println!("\nE_4[f]: exact {exact:.5}, sampled {mean:.5} +/- {stderr:.5} ({count} probes)");
    }

    // Conditioning on either endpoint is exact too.
    let given_u = expect_k(&colouring, Quantity::G, 3, Condition::GivenU(0), ExpectMode::Exact);
    let given_v = expect_k(&colouring, Quantity::H, 3, Condition::GivenV(255), ExpectMode::Exact);
    println!(
        "E_3[g | u = 0] = {}, E_3[h | v = 255] = {}",
        es_str(&given_u.unwrap()),
        es_str(&given_v.unwrap())
    );
}

fn es_str(e: &Expectation) -> String {
    match e {
        Expectation::Exact(x) => format!("{x}"),
        Expectation::Sampled { mean, .. } => format!("~{mean:.5}"),
    }
}
