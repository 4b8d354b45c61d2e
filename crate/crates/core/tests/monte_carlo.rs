use besselhit::monte_carlo::{ks_statistic, sample_hitting_times, MCConfig, MCSampleSet, TabulatedCdf};
use besselhit::HittingTime;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn brownian(x: f64) -> HittingTime {
    HittingTime::new(-0.5, x).unwrap()
}

#[test]
fn same_seed_same_sample() {
    let cfg = MCConfig::new(-1.0, 1.5, 1e-3, 500, 11)
        .unwrap()
        .with_t_max(3.0)
        .unwrap();
    let a = sample_hitting_times(&cfg).unwrap();
    let b = sample_hitting_times(&cfg).unwrap();
    assert_eq!(a, b);
    let other = sample_hitting_times(&MCConfig { seed: 12, ..cfg }).unwrap();
    assert_ne!(a.hitting_times, other.hitting_times);
}

#[test]
fn longer_horizon_only_adds_late_hits() {
    let short = MCConfig::new(0.0, 2.0, 1e-3, 800, 3).unwrap().with_t_max(0.5).unwrap();
    let long = short.with_t_max(4.0).unwrap();
    let s = sample_hitting_times(&short).unwrap();
    let l = sample_hitting_times(&long).unwrap();
    assert!(l.censored_count <= s.censored_count);
    let early: Vec<f64> = l.hitting_times.iter().copied().filter(|&t| t < 0.5).collect();
    assert_eq!(early, s.hitting_times);
    assert!(s.hitting_times.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn brownian_sample_matches_the_closed_form() {
    let x = 2.0;
    let cfg = MCConfig::new(-0.5, x, 1e-4, 4_000, 2024)
        .unwrap()
        .with_t_max(2.0)
        .unwrap();
    assert!(cfg.step_is_recommended());
    let s = sample_hitting_times(&cfg).unwrap();
    let law = brownian(x);
    let d = ks_statistic(&s, |t| law.cdf(t).unwrap().value);
    let m = s.hitting_times.len() as f64;
    assert!(d < 1.63 / m.sqrt(), "KS {d} over {m} hits");

    // Censoring agrees with the survival function within four standard errors.
    let p = law.survival(2.0).unwrap().value;
    let se = (p * (1.0 - p) / 4_000.0).sqrt();
    assert!((s.censored_fraction() - p).abs() < 4.0 * se);
}

#[test]
fn tabulated_oracle_matches_direct_evaluation() {
    let law = HittingTime::new(-1.0, 2.0).unwrap();
    let tab = TabulatedCdf::new(|t| Ok(law.cdf(t)?.value), 1e-3, 2.0, 600).unwrap();
    for t in [0.01, 0.1, 0.37, 1.0, 1.9] {
        let exact = law.cdf(t).unwrap().value;
        assert!((tab.eval(t) - exact).abs() < 1e-4, "t = {t}");
    }
}

fn exact_sample(n: usize, seed: u64) -> MCSampleSet {
    // Inversion sampling of the unit exponential truncated to [0, 1].
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mass = 1.0 - (-1.0f64).exp();
    let mut ts: Vec<f64> = (0..n).map(|_| -(1.0 - mass * rng.gen::<f64>()).ln()).collect();
    ts.sort_by(f64::total_cmp);
    let config = MCConfig::new(-0.5, 2.0, 1e-3, n, 0).unwrap().with_t_max(1.0).unwrap();
    MCSampleSet {
        hitting_times: ts,
        censored_count: 0,
        config,
    }
}

#[test]
fn ks_detects_the_right_and_wrong_law() {
    let s = exact_sample(20_000, 5);
    let right = ks_statistic(&s, |t| 1.0 - (-t).exp());
    let wrong = ks_statistic(&s, |t| 1.0 - (-2.0 * t).exp());
    assert!(right < 1.36 / (20_000f64).sqrt(), "{right}");
    assert!(wrong > 0.05, "{wrong}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn ks_lies_in_the_unit_interval(seed in any::<u64>(), n in 1usize..200, rate in 0.1f64..10.0) {
        let s = exact_sample(n, seed);
        let d = ks_statistic(&s, |t| 1.0 - (-rate * t).exp());
        prop_assert!((0.0..=1.0).contains(&d));
        prop_assert!(d >= 0.5 / n as f64);
    }

    #[test]
    fn quantiles_are_order_statistics(seed in any::<u64>(), p in 0.0f64..=1.0) {
        let s = exact_sample(50, seed);
        let q = s.quantile(p).unwrap();
        prop_assert!(s.hitting_times.contains(&q));
        let below = s.hitting_times.iter().filter(|&&t| t < q).count() as f64;
        prop_assert!(below <= p * 50.0);
    }
}
