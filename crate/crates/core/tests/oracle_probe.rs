// temporary probe, replaced by the acceptance suite
mod common;

use rand::SeedableRng;
use rcn_core::construction::{count_formula, synthesize};
use rcn_core::crossings::count_crossings_brute;

#[test]
fn probe_formula_vs_synthesis() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    for case in 0..10 {
        let spec = common::random_spec(&mut rng, 30);
        let formula = count_formula(&spec).unwrap().total;
        let points = synthesize(&spec, &common::unit_scale()).unwrap();
        let brute = count_crossings_brute(&points).unwrap().total;
        assert_eq!(formula, brute, "case {case}: sizes {:?}", spec.sizes);
        println!("case {case}: n={} formula={formula} ok", spec.total_points());
    }
}
