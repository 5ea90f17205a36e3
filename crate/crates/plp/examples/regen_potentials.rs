//! Regenerate the PCA potentials from scratch: run the search on the
//! assembled vertex-NAND and edge-NAND systems, decode the potential block,
//! sanity-check it with the negative-cycle oracle at sample points, and
//! print the JSON entries for data/potentials.json.

use plp::automata::{
    assemble_pca_plp, decode_potential, negative_cycle_check, pca_edge_weights, Pattern,
    TransitionTable,
};
use plp::json::potential_to_value;
use plp::plp::{solve_side, SearchCaps, Side};
use plp::poly::rat;

fn main() {
    env_logger::init();
    for (name, table, s0, cap) in [
        ("pca-nand-vertex", TransitionTable::vertex_nand(), "01", 2usize),
        ("pca-nand-edge", TransitionTable::edge_nand(), "10", 2),
    ] {
        let s0 = Pattern::parse(s0).unwrap();
        let inst = assemble_pca_plp(&table, 3, &s0).unwrap();
        let t = std::time::Instant::now();
        let cert = solve_side(&inst, Side::Positive, &SearchCaps::capped(cap));
        eprintln!(
            "{name}: {:?} c={:?} deg={:?} in {:.1?}",
            cert.verdict,
            cert.c_used,
            cert.degrees_used,
            t.elapsed()
        );
        let Some(sol) = &cert.solution else {
            eprintln!("{name}: no solution at cap {cap}, skipping");
            continue;
        };
        let w = decode_potential(sol, 3).unwrap();
        for p in [rat(1, 100), rat(1, 1000)] {
            let weights = pca_edge_weights(&table, 3, &s0, &w, &p).unwrap();
            assert!(negative_cycle_check(&weights, 3), "{name}: negative cycle at p={p}");
        }
        eprintln!("{name}: negative-cycle oracle passed at p=1/100, 1/1000");
        println!("\"{name}\": {}", potential_to_value(&w));
    }
}
