mod common;

use common::*;
use nearbip::lists::Mode;
use nearbip::oracle;
use nearbip::stats::Stats;
use nearbip::trouble::{analyse, TroubleAnalysis};
use rand::Rng;

#[test]
fn compressed_options_match_enumeration() {
    let mut stats = Stats::default();
    let mut solvable = 0;
    for seed in 0..1500u64 {
        let n = rng(seed).gen_range(1..=11);
        let a = random_compressed(seed, n);
        let all = aux_colourings(&a);
        let mut sizes: Vec<usize> = all.iter().map(|c| weight_of_ones(&a, c)).collect();
        sizes.sort_unstable();
        sizes.dedup();
        let got = TroubleAnalysis::of_compressed(a.clone(), &mut stats).unwrap();
        let Some(got) = got else {
            assert!(all.is_empty(), "seed {seed}: {}", a.to_dot());
            continue;
        };
        solvable += 1;
        assert_eq!(got.achievable(), sizes, "seed {seed}: {}", a.to_dot());
        for (ones, col) in [got.min(), got.max()] {
            assert!(a.is_feasible(&col.0), "seed {seed}");
            assert_eq!(weight_of_ones(&a, &col.0), ones, "seed {seed}");
        }
        for (ones, col) in got.all_sizes() {
            assert!(a.is_feasible(&col.0), "seed {seed}");
            assert_eq!(weight_of_ones(&a, &col.0), ones, "seed {seed}");
        }
    }
    assert!(solvable > 500);
    assert!(
        stats.trouble_rules[3] > 0 && stats.trouble_rules[7] > 0,
        "{stats:?}"
    );
}

#[test]
fn colouring_counts_match_dense_instances() {
    let mut count = 0;
    for seed in 0..1500u64 {
        let Some(inst) = troublesome(seed, 12) else {
            continue;
        };
        count += 1;
        for mode in [Mode::SemiAcyclic, Mode::Proper] {
            let got = analyse(&inst, mode, &mut Stats::default()).unwrap();
            let want = oracle::brute_trouble_free_mode(&inst, mode).unwrap();
            assert_eq!(
                got.as_ref().map(|a| a.min().0),
                want.map(|w| w.0),
                "seed {seed}"
            );
            if let Some(a) = got {
                let counts = oracle::brute_trouble_free_counts(&inst, mode).unwrap();
                let sizes: Vec<usize> = (0..counts.len()).filter(|&s| counts[s] > 0).collect();
                assert_eq!(a.achievable(), sizes, "seed {seed} {mode:?}");
                for (s, c) in a.all_sizes() {
                    assert!(inst.is_trouble_free(&c, mode), "seed {seed}");
                    assert_eq!(c.class(1).len(), s);
                }
            }
        }
    }
    assert!(count > 500);
}
