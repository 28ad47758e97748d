mod common;

use std::f64::consts::PI;

use gravibox_core::classical::{
    classify_orbit, moments_y, simulate, unfolded_state, LaunchSpec, OrbitClass, Period, WallHit,
};
use gravibox_core::numerics::AdaptiveSimpson;
use gravibox_core::quantum::{exact_spectrum, qm_moments_quadrature, qm_moments_y, QuantumConfig};
use gravibox_core::specialfn::{airy_antideriv, airy_eval, AntiderivKind};
use proptest::prelude::*;

use common::{density_mass, spec_with_ratio, substituted_moments};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn wronskian_is_one_over_pi(z in -1.0e3f64..60.0) {
        let e = airy_eval(z).unwrap();
        // relative to the size of the two products
        let scale = (e.ai * e.bi_prime).abs() + (e.ai_prime * e.bi).abs();
        prop_assert!((e.wronskian() - 1.0 / PI).abs() <= 1e-10 * scale.max(1.0 / PI));
    }

    #[test]
    fn antiderivatives_differentiate_to_integrands(z in -40.0f64..6.0, kind in 0usize..9) {
        let kind = AntiderivKind::ALL[kind];
        let h = 1e-3;
        let f = |d: f64| airy_antideriv(kind, z + d * h).unwrap();
        let fd = (f(-2.0) - 8.0 * f(-1.0) + 8.0 * f(1.0) - f(2.0)) / (12.0 * h);
        let exact = kind.integrand(z, &airy_eval(z).unwrap());
        let scale = airy_antideriv(kind, z).unwrap().abs().max(exact.abs()).max(1.0);
        prop_assert!((fd - exact).abs() < 1e-6 * scale, "{kind:?} at {z}: {fd} vs {exact}");
    }

    #[test]
    fn simulation_follows_unfolded_motion(
        x0 in 0.01f64..0.99,
        energy in 0.05f64..6.0,
        phi in 0.1f64..3.04,
    ) {
        let spec = LaunchSpec::natural(x0, energy, phi).unwrap();
        let tr = simulate(&spec, 60).unwrap();
        for (seg, t) in tr.segments.iter().zip(tr.event_times()) {
            let ((x, y), _) = unfolded_state(&spec, t);
            prop_assert!((x - seg.end.0).abs() < 1e-8 && (y - seg.end.1).abs() < 1e-8);
        }
        let e0 = tr.energies()[0];
        for e in tr.energies() {
            prop_assert!((e - e0).abs() < 1e-11 * e0);
        }
    }

    #[test]
    fn periodic_verdicts_close_the_orbit(
        p in 1u64..12,
        q in 1u64..12,
        x0 in 0.02f64..0.98,
        phi in 0.15f64..1.4,
    ) {
        let spec = spec_with_ratio(x0, phi, q as f64 / p as f64);
        prop_assume!(spec.is_some());
        let spec = spec.unwrap();
        match classify_orbit(&spec, 10_000) {
            OrbitClass::Periodic(Period::Commensurate { p: pp, q: qq }) => {
                let g = gcd(p, q);
                prop_assert_eq!((pp, qq), (p / g, q / g));
                let tr = simulate(&spec, (4 * qq + 6 * pp + 8) as usize).unwrap();
                let floors = tr.floor_events();
                let seg = &tr.segments[floors[pp as usize - 1]];
                prop_assert!((seg.end.0 - x0).abs() < 1e-8);
                prop_assert_eq!(seg.end.1, 0.0);
                prop_assert_eq!(seg.end_velocity.0.signum(), spec.angle.cos().signum());
                prop_assert!(floors.len() > pp as usize);
            }
            OrbitClass::CornerHit { .. } => {}
            other => prop_assert!(false, "unexpected verdict {other:?}"),
        }
    }

    #[test]
    fn classical_density_integrates_to_one(h in 0.01f64..1e3, side in 0.1f64..10.0) {
        prop_assert!((density_mass(h, side) - 1.0).abs() < 1e-8);
    }

    #[test]
    fn classical_moments_match_substituted_quadrature(h in 0.01f64..1e3, side in 0.1f64..10.0) {
        let (m1, m2) = substituted_moments(h, side);
        let cf = moments_y(h, side).unwrap();
        prop_assert!(((cf.mean - m1) / m1).abs() < 1e-8);
        prop_assert!(((cf.second_moment - m2) / m2).abs() < 1e-8);
        prop_assert!(cf.mean > 0.0 && cf.mean <= side && cf.stddev >= 0.0);
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

#[test]
fn vertical_launch_has_two_events_per_period_when_ceiling_reached() {
    let spec = LaunchSpec::natural(0.4, 2.0, PI / 2.0).unwrap();
    let tr = simulate(&spec, 6).unwrap();
    let walls: Vec<_> = tr.segments.iter().map(|s| s.wall_hit).collect();
    assert_eq!(walls, [WallHit::Ceiling, WallHit::Floor].repeat(3));
}

#[test]
fn exact_modes_orthogonal_and_moments_consistent() {
    let c = QuantumConfig::from_scale(0.15, 1.3).unwrap();
    let modes = exact_spectrum(&c, 45.0).unwrap();
    assert!(modes.len() > 8);
    let quad = AdaptiveSimpson::new(1e-11).panels(64);
    for (i, a) in modes.iter().enumerate() {
        assert_eq!(a.interior_zeros(5000).unwrap(), i);
        for b in &modes[i + 1..] {
            let overlap = quad
                .integrate(|y| a.value(y).unwrap() * b.value(y).unwrap(), 0.0, c.side)
                .unwrap()
                .value;
            assert!(overlap.abs() < 1e-6);
        }
        let cf = qm_moments_y(&c, a).unwrap();
        let qd = qm_moments_quadrature(&c, a).unwrap();
        assert!(((cf.mean - qd.mean) / qd.mean).abs() < 1e-5);
        assert!(((cf.stddev - qd.stddev) / qd.stddev).abs() < 1e-5);
    }
}
