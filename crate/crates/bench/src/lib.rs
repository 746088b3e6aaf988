//! Benchmark inputs. The benches themselves live in `benches/`.

use cellres::samples::{self, example_ideal};
use cellres::MonomialIdeal;

/// Named ideals of increasing size, fixed by seed.
pub fn workloads() -> Vec<(String, MonomialIdeal)> {
    let mut rng = samples::rng(7);
    let mut out = vec![("example".to_string(), example_ideal())];
    for gens in [4, 8] {
        out.push((format!("staircase-{gens}"), samples::random_staircase(&mut rng, gens, 10)));
    }
    out.push(("generic3".to_string(), samples::random_generic(&mut rng, 3, 5, 5)));
    out
}
