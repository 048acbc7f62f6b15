mod common;

use common::{brute_interval_count, brute_rough_p_divisible, random_group, random_positive, rat};
use nipval::oag::{GroupElement, OAGDesc};
use num_traits::Signed;
use rand::rngs::StdRng;
use rand::SeedableRng;

/// Whether every coordinate of `gamma` is a grid point for `bound`.
fn on_grid(gamma: &GroupElement, bound: i64) -> bool {
    gamma.coords().iter().all(|c| {
        c.denom() <= &bound.into() && c.abs() <= rat(bound, 1)
    })
}

fn samples(seed: u64, n: usize, bound: i64) -> Vec<(OAGDesc, GroupElement)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < n {
        let g = random_group(&mut rng, 2);
        let gamma = random_positive(&mut rng, &g);
        if on_grid(&gamma, bound) {
            out.push((g, gamma));
        }
    }
    out
}

#[test]
fn rough_p_divisibility_matches_grid() {
    for (g, gamma) in samples(21, 60, 4) {
        for p in [2, 3, 5, 7] {
            assert_eq!(
                g.rough_p_divisible(&gamma, p).unwrap(),
                brute_rough_p_divisible(&g, &gamma, p, 4),
                "{g} {gamma} p={p}"
            );
        }
    }
}

#[test]
fn interval_finiteness_matches_grid_growth() {
    for (g, gamma) in samples(23, 40, 4) {
        let small = brute_interval_count(&g, &gamma, 4);
        let large = brute_interval_count(&g, &gamma, 9);
        assert_eq!(g.interval_finite(&gamma).unwrap(), small == large, "{g} {gamma}");
        assert!(g.interval_finite(&g.zero()).unwrap());
    }
}

#[test]
fn relative_hull_matches_membership() {
    for (g, gamma) in samples(24, 40, 9) {
        let hull = g.rel_div_hull(&gamma).unwrap();
        for n in -50i64..=50 {
            for d in 1i64..=50 {
                let r = rat(n, d);
                assert_eq!(
                    hull.contains(&r).unwrap(),
                    g.contains(&gamma.scale(&r)),
                    "{g} {gamma} r={r}"
                );
            }
        }
    }
}
