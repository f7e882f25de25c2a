//! Per-colour change counts, witnesses, and geodesic vs unrestricted paths.

use qnchroma::{
    min_geodesic_cc, min_path_cc, min_path_cc_with_witness, path_changes, witness_geodesic,
    Colouring, CubeDim, FcTable, Scope,
};

fn main() {
    // The square with both edges at 00 red and both edges at 11 blue.
    let q = CubeDim::new(2).unwrap();
    let square = Colouring::from_fn(q, 2, |v, _| u8::from(v != 0b00)).unwrap();

    let table = FcTable::build(&square, 0b00, Scope::WholeCube);
    for y in q.vertices() {
        println!(
            "f_red(00, {y:02b}) = {}, f_blue(00, {y:02b}) = {}",
            table.value(y, 0),
            table.value(y, 1)
        );
    }
    let witness = witness_geodesic(&square, &table, 0b11).unwrap();
    println!(
        "optimal geodesic 00 -> 11: {} change(s), edge ids {witness:?}",
        path_changes(&square, &witness).unwrap()
    );

    // On the layered colouring of Q_6, paths can undercut geodesics from
    // off-middle layers, and the base vertex pays n - 1.
    let q6 = CubeDim::new(6).unwrap();
    let layered = Colouring::layered(q6, 0).unwrap();
    for v in [0b000000u32, 0b000001, 0b000111] {
        let y = q6.antipode(v);
        let geo = min_geodesic_cc(&layered, v, y).cost;
        let path = min_path_cc(&layered, v, y).cost;
        println!("layered Q_6, layer {}: geodesic {geo}, any-path {path}", v.count_ones());
    }
    let pc = min_path_cc_with_witness(&layered, 0, q6.antipode(0));
    println!(
        "witness path for the base vertex has {} edges and {} changes",
        pc.witness.as_ref().unwrap().len(),
        pc.cost
    );
}
