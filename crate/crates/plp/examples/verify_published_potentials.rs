//! Verify the four potentials shipped in data/potentials.json against the
//! systems they certify, then double-check the induced edge weights with a
//! Bellman-Ford negative-cycle search at fixed noise levels.

use plp::automata::{
    broadcast_edge_weights, negative_cycle_check, pca_edge_weights, preset, verify_potential, Kind,
};
use plp::json::builtin_potentials;
use plp::plp::{SearchCaps, Verdict};
use plp::poly::rat;

fn main() {
    env_logger::init();
    let caps = SearchCaps::capped_default();
    for (name, w) in builtin_potentials().expect("data file parses") {
        let (kind, table, ell, s0) = preset(&name).expect("preset exists");
        let start = std::time::Instant::now();
        let cert = verify_potential(kind, &table, ell, s0.as_ref(), &w, &caps)
            .expect("well-formed potential");
        println!(
            "{name}: verdict {:?} (c={:?}, degrees={:?}) in {:.1?}",
            cert.verdict,
            cert.c_used,
            cert.degrees_used,
            start.elapsed()
        );
        assert_eq!(cert.verdict, Verdict::Feasible, "{name} must verify");

        for p in [rat(1, 100), rat(1, 1000)] {
            let ok = match kind {
                Kind::Pca => {
                    let weights =
                        pca_edge_weights(&table, ell, s0.as_ref().unwrap(), &w, &p).unwrap();
                    negative_cycle_check(&weights, ell)
                }
                Kind::Broadcast => {
                    let (a, b) = broadcast_edge_weights(&table, ell, &w, &p).unwrap();
                    negative_cycle_check(&a, ell) && negative_cycle_check(&b, ell)
                }
            };
            assert!(ok, "{name}: negative cycle at p = {p}");
            println!("{name}: no negative cycle at p = {p}");
        }
    }
    println!("all published potentials verified");
}
