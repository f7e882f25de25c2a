//! The named colouring constructions, saved in the QNCOL format.

use qnchroma::{Colouring, CubeDim, RED};

fn main() -> Result<(), qnchroma::Error> {
    let out_dir = std::env::temp_dir().join("qnchroma-constructions");
    std::fs::create_dir_all(&out_dir)?;

    let q4 = CubeDim::new(4).unwrap();

    let layered = Colouring::layered(q4, 0)?;
    println!(
        "layered n=4: {} red edges of {}",
        layered.count_colour(RED),
        q4.edge_count()
    );
    layered.save_with_comments(
        out_dir.join("layered-4.qncol"),
        &["layered colouring: colour = parity of d(x0, nearer endpoint), x0 = 0"],
    )?;

    let (hamming, code) = Colouring::hamming(CubeDim::new(7).unwrap())?;
    println!(
        "perfect-code n=7: {} codewords, {} red edges",
        code.len(),
        hamming.count_colour(RED)
    );
    hamming.save(out_dir.join("hamming-7.qncol"))?;

    // Restricting to a sub-cube keeps the structure: red iff incident to a
    // surviving codeword.
    let restricted = hamming.restrict_subcube(0b1100000, 0)?;
    let survivors = code.iter().filter(|&&c| c & 0b1100000 == 0).count();
    println!(
        "restricted to Q_{} (coords 5,6 fixed to 0): {survivors} codewords survive, {} red edges",
        restricted.dim().n(),
        restricted.count_colour(RED)
    );

    let direction = Colouring::direction(q4, 4)?;
    println!("direction n=4 r=4: colour class sizes: {:?}",
        (0..4).map(|c| direction.count_colour(c)).collect::<Vec<_>>());

    let random = Colouring::random(q4, 2, 42)?;
    let antipodal = Colouring::antipodal_random(q4, 42)?;
    println!(
        "random seed 42: {} red; antipodal-random: every edge differs from its antipodal image: {}",
        random.count_colour(RED),
        q4.edge_ids().all(|e| {
            let partner = q4.antipodal_edge(e).unwrap();
            antipodal.colour_of(e).unwrap() != antipodal.colour_of(partner).unwrap()
        })
    );

    // Round trip through the file format is bit-exact.
    let path = out_dir.join("random-4.qncol");
    random.save(&path)?;
    assert_eq!(Colouring::load(&path)?, random);
    println!("files written under {}", out_dir.display());
    Ok(())
}
