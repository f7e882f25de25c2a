//! Zero-tolerance verification of the averaged identities on a random
//! colouring, plus the full chain report.

use qnchroma::report::lemma_report_csv;
use qnchroma::{verify_all, Colouring, CubeDim};

fn main() {
    let q = CubeDim::new(8).unwrap();
    let colouring = Colouring::random(q, 2, 1).unwrap();

    let (certificates, report) = verify_all(&colouring).unwrap();
    for cert in &certificates {
        println!(
            "{} [{} checks] -> {}",
            cert.claim,
            cert.checked,
            if cert.holds { "ok" } else { "FAILED" }
        );
        if let Some(ce) = &cert.counterexample {
            println!("  counterexample: {ce}");
        }
    }

    println!(
        "\nchain report (holds: {}), E_n[opt] = {}:\n",
        report.holds, report.antipodal_opt
    );
    print!("{}", lemma_report_csv(&report));
}
