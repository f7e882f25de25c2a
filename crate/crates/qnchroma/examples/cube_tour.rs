//! A quick tour of vertex arithmetic and edge indexing on `Q_n`.

use qnchroma::CubeDim;

fn main() {
    let q = CubeDim::new(4).unwrap();
    println!(
        "Q_{}: {} vertices, {} edges",
        q.n(),
        q.vertex_count(),
        q.edge_count()
    );

    let x = 0b0011;
    let y = 0b0101;
    println!("d({x:04b}, {y:04b}) = {}", q.distance(x, y));
    println!("antipode({x:04b}) = {:04b}", q.antipode(x));

    for k in 0..=q.n() {
        let shell: Vec<String> = q
            .neighbourhood(x, k)
            .unwrap()
            .map(|v| format!("{v:04b}"))
            .collect();
        println!("distance-{k} shell around {x:04b}: {}", shell.join(" "));
    }

    println!("interval sub-cube between {x:04b} and {y:04b}:");
    for (layer, z) in q.interval(x, y) {
        println!("  layer {layer}: {z:04b}");
    }

    // Edges get contiguous ids: dimension-major, then the squeezed endpoint.
    for (u, i) in [(0b0000u32, 0u32), (0b0101, 1), (0b0111, 3)] {
        let id = q.edge_id(u, i).unwrap();
        let (lo, dim) = q.edge_from_id(id).unwrap();
        println!("edge {{{u:04b}, {:04b}}} -> id {id} -> ({lo:04b}, dim {dim})", u ^ (1 << i));
    }
}
