//! Build the hopping graph of a level sector and print it as DOT.
//!
//! Vertices are the basis labels of the sector; a directed edge labelled
//! `a_j` means the hopping generator moves one particle from site `j+1` to
//! site `j+2` (cyclically), i.e. adds one box in row `j+1` of the label.
//! The wrapping generator `a_0` is drawn dashed.
//!
//! Run with: `cargo run --example crystal_graph`

use verlinde::phase::CrystalGraph;

fn main() {
    let graph = CrystalGraph::new(4, 2);
    println!(
        "sector n=4, k=2: {} vertices, {} edges",
        graph.vertices.len(),
        graph.edges.len()
    );
    for (i, m) in graph.vertices.iter().enumerate() {
        println!("  vertex {i}: occupation {:?} = partition {}", m.0, m.to_partition());
    }
    println!();
    print!("{}", graph.to_dot());
}
