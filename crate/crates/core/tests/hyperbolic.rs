use besselhit::hyperbolic::*;
use besselhit::special::gamma;
use proptest::prelude::*;
use std::f64::consts::{E, PI};

fn point(y_tilde: &[f64], y_n: f64) -> HyperPoint {
    HyperPoint::new(y_tilde.to_vec(), y_n).unwrap()
}

#[test]
fn vertical_geodesic_has_log_length() {
    let d = hyperbolic_distance(&point(&[0.0], 1.0), &point(&[0.0], E)).unwrap();
    assert!((d - 1.0).abs() < 1e-15);
    let d = hyperbolic_distance(&point(&[3.0, 4.0], 2.0), &point(&[3.0, 4.0], 2e6)).unwrap();
    assert!((d - 1e6f64.ln()).abs() < 1e-12);
    // Nearby points keep full relative precision.
    let d = hyperbolic_distance(&point(&[0.0], 1.0), &point(&[1e-12], 1.0)).unwrap();
    assert!((d / 1e-12 - 1.0).abs() < 1e-12);
}

#[test]
fn half_drift_gives_the_euclidean_kernel() {
    for n in 2..=5usize {
        for (y_n, r) in [(2.0, 0.0), (2.0, 0.7), (1.1, 1e-2), (10.0, 3.0), (1.5, 1e3)] {
            let mut z = vec![0.0; n - 1];
            z[0] = r;
            let y = point(&vec![0.0; n - 1], y_n);
            let p = poisson_kernel(0.5, n, &y, &z).unwrap();
            let e = euclidean_poisson_kernel(n, &y, &z).unwrap();
            assert!((p / e - 1.0).abs() < 1e-8, "n={n} y_n={y_n} r={r}: {p} vs {e}");
            // The comparison function is the same kernel without Γ(n/2)/π^{n/2}.
            let env = poisson_envelope(0.5, n, &y, &z).unwrap();
            let c = gamma(n as f64 / 2.0) / PI.powf(n as f64 / 2.0);
            assert!((e / env / c - 1.0).abs() < 1e-13);
        }
    }
}

#[test]
fn kernel_depends_on_the_horizontal_offset_only() {
    let a = poisson_kernel(1.5, 3, &point(&[0.0, 0.0], 2.0), &[0.6, 0.8]).unwrap();
    let b = poisson_kernel(1.5, 3, &point(&[5.0, -2.0], 2.0), &[5.0, -1.0]).unwrap();
    let c = poisson_kernel(1.5, 3, &point(&[5.0, -2.0], 2.0), &[5.6, -1.2]).unwrap();
    assert!((a / b - 1.0).abs() < 1e-12 && (a / c - 1.0).abs() < 1e-12);
}

#[test]
fn exit_position_is_a_probability_distribution() {
    // The vertical coordinate is a Bessel process of index −μ and hits 1
    // almost surely, so the kernel has unit mass for every drift.
    for (mu, y_n) in [(0.5, 1.1), (1.0, 2.0), (1.5, 10.0), (0.75, 3.0)] {
        for n in [2, 3] {
            let m = PoissonKernel::new(mu, n, y_n).unwrap().mass().unwrap().value;
            assert!((m - 1.0).abs() < 1e-6, "mu={mu} n={n} y_n={y_n}: {m}");
        }
    }
}

#[test]
fn far_field_decay() {
    for mu in [1.0, 1.5] {
        let k = PoissonKernel::new(mu, 2, 2.0).unwrap();
        // P ~ r^{−(n − 1 + 2μ)}.
        let slope = (k.at_distance(1e5).unwrap().value / k.at_distance(1e4).unwrap().value).log10();
        assert!((slope + 1.0 + 2.0 * mu).abs() < 1e-3, "mu={mu}: {slope}");
        // The comparison function picks up (2y_n²/|z − y|²)^{μ−1/2}.
        let r: f64 = 1e4;
        let rho2 = r * r + 1.0;
        let far = 1.0 / rho2 * (8.0 / rho2).powf(mu - 0.5);
        assert!((k.envelope(r) / far - 1.0).abs() < 1e-6);
    }
}

#[test]
fn envelope_ratio_is_bounded() {
    for r in poisson_envelope_scan(1.5, &[2, 3, 4], &SCAN_HEIGHTS, &SCAN_DISTANCES).unwrap() {
        assert!(r.passes(), "n={}: {:?}", r.n, r.refinement);
        assert!(r.max_ratio / r.min_ratio < 10.0);
    }
    let r = &poisson_envelope_scan(1.0, &[2], &[2.0], &SCAN_DISTANCES).unwrap()[0];
    assert!(r.passes() && r.max_ratio / r.min_ratio < 10.0, "{:?}", r.refinement);
    let json = serde_json::to_string(r).unwrap();
    assert!(json.contains("\"refinement\""));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn distance_is_a_symmetric_positive_function(
        a in prop::collection::vec(-10.0f64..10.0, 2),
        b in prop::collection::vec(-10.0f64..10.0, 2),
        ha in 0.01f64..100.0,
        hb in 0.01f64..100.0,
    ) {
        let (y, z) = (point(&a, ha), point(&b, hb));
        let d = hyperbolic_distance(&y, &z).unwrap();
        prop_assert_eq!(d, hyperbolic_distance(&z, &y).unwrap());
        prop_assert!(d >= 0.0);
        prop_assert!(d > 0.0 || (a == b && ha == hb));
    }

    #[test]
    fn kernel_is_positive(r in 0.0f64..1e3, y_n in 1.01f64..20.0, n in 2usize..=5) {
        let k = PoissonKernel::new(1.5, n, y_n).unwrap();
        let p = k.at_distance(r).unwrap().value;
        prop_assert!(p > 0.0 && p.is_finite());
        let ratio = p / k.envelope(r);
        prop_assert!(ratio > 0.05 && ratio < 2.0, "{}", ratio);
    }
}
