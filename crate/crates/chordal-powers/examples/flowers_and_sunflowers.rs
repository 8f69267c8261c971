//! Flowers and sunflowers: certificates for induced cycles in a squared
//! graph, the withered test, and sunflower suspension.
//!
//! Run with `cargo run --example flowers_and_sunflowers`.

use chordal_powers::graph::{Graph, Vertex};
use chordal_powers::structures;

fn main() {
    // the octagon: its square has an induced 4-cycle on alternate vertices
    let c8 = Graph::cycle(8);
    let flower = structures::find_flower(&c8, 4).unwrap().expect("flower of size 4");
    println!("octagon flower: U = {:?}, W = {:?}", flower.u_vertices, flower.w_vertices);
    let report = structures::validate_flower(&c8, &flower);
    println!("valid: {}, spanning cycle: {:?}", report.valid, report.spanning_cycle);
    println!("withered: {}", structures::is_withered(&c8, &flower).unwrap());

    // a sun: complete inner pentagon, stable outer pentagon
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for i in 0..5u32 {
        for j in i + 1..5 {
            edges.push((5 + i, 5 + j));
        }
        edges.push((i, 5 + i));
        edges.push((i, 5 + (i + 1) % 5));
    }
    let sun = Graph::from_edges(10, &edges).unwrap();
    let sunflower = structures::find_sunflower(&sun, 5).unwrap().expect("the sun is a sunflower");
    println!(
        "sun sunflower: outer {:?}, inner {:?}, suspended by {:?}",
        sunflower.u_vertices, sunflower.w_vertices, sunflower.suspended_by
    );
    println!("unsuspended sunflower present: {}", structures::has_unsuspended_sunflower(&sun).unwrap());

    // hanging an apex over two opposite outer vertices suspends every
    // witness and the square turns chordal
    let mut suspended_edges = edges.clone();
    suspended_edges.push((10, 0));
    suspended_edges.push((10, 2));
    let suspended = Graph::from_edges(11, &suspended_edges).unwrap();
    println!(
        "after adding the apex: unsuspended sunflower present: {}",
        structures::has_unsuspended_sunflower(&suspended).unwrap()
    );
}
