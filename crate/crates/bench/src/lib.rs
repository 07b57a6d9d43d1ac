//! Synthetic inputs for the benchmarks.

use ifsoft::{IfSoftSet, IfValue, ParameterSet, Universe};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random IFS-set with `m` parameters, `n` elements and full support,
/// grades on a 0.01 grid.
pub fn random_set(m: usize, n: usize, seed: u64) -> IfSoftSet {
    let universe = Universe::new((1..=n).map(|j| format!("u{j}"))).unwrap();
    let parameters = ParameterSet::new((1..=m).map(|i| format!("x{i}"))).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..m)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let mu = rng.gen_range(0..=100u32);
                    let nu = rng.gen_range(0..=100 - mu);
                    IfValue::new(mu as f64 / 100.0, nu as f64 / 100.0).unwrap()
                })
                .collect()
        })
        .collect();
    IfSoftSet::from_parts_unchecked(
        &universe,
        &parameters,
        vec![true; m],
        rows,
        Default::default(),
    )
    .unwrap()
}

/// Dataset text holding `sets` random sets over `m` parameters and `n`
/// elements.
pub fn dataset_text(m: usize, n: usize, sets: usize, seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names = |prefix: &str, k: usize| (1..=k).map(|i| format!("{prefix}{i}")).collect::<Vec<_>>().join(" ");
    let mut text = format!("universe: {}\nparameters: {}\n", names("u", n), names("x", m));
    for s in 0..sets {
        text.push_str(&format!("\nset s{s}\n  support: {}\n", names("x", m)));
        for i in 1..=m {
            text.push_str(&format!("  x{i}:"));
            for j in 1..=n {
                let mu = rng.gen_range(0..=100u32);
                let nu = rng.gen_range(0..=100 - mu);
                text.push_str(&format!(" (u{j}, {}, {})", mu as f64 / 100.0, nu as f64 / 100.0));
            }
            text.push('\n');
        }
        text.push_str("end\n");
    }
    text
}
