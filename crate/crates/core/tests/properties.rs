use minmotion_core::curve::{curves_equal_projective, is_normalized, normalize_at_infinity};
use minmotion_core::exact::{rat, Rational, RealPoly};
use minmotion_core::motion::{
    change_coordinates, degree_report, is_motion_polynomial, reparameterize_motion,
    spherical_defect, trajectory, CoordinateChange, MotionPoly,
};
use minmotion_core::qpoly::{
    euclid_remainders, factor_by_norm, left_gcd, mrpf, norm_poly, QuatPoly,
};
use minmotion_core::quat::{act_on_point, DualQuaternion, ProjectivePoint};
use minmotion_core::synthesis::{synthesize, synthesize_normalized};
use minmotion_core::testing as gen;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small() -> impl Strategy<Value = Rational> {
    (-10i64..=10, 1i64..=10).prop_map(|(n, d)| rat(n, d))
}

fn real_poly(max_deg: usize) -> impl Strategy<Value = RealPoly> {
    prop::collection::vec(small(), 0..=max_deg + 1).prop_map(RealPoly::new)
}

fn moebius() -> impl Strategy<Value = [[Rational; 2]; 2]> {
    (small(), small(), small(), small())
        .prop_filter("invertible", |(a, b, c, d)| a * d != b * c)
        .prop_map(|(a, b, c, d)| [[a, b], [c, d]])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn real_divrem_reconstructs(a in real_poly(6), b in real_poly(4)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree() < b.degree());
    }

    #[test]
    fn real_gcd_divides_and_is_symmetric(a in real_poly(4), b in real_poly(4), c in real_poly(2)) {
        prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
        let (ac, bc) = (&a * &c, &b * &c);
        let g = ac.gcd(&bc).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(g.divides(&ac) && g.divides(&bc));
        prop_assert!(c.monic().divides(&g));
        prop_assert_eq!(g, bc.gcd(&ac).unwrap());
    }

    #[test]
    fn moebius_composes(f in real_poly(4), a in moebius(), b in moebius()) {
        let n = 4;
        let ab = [
            [&a[0][0] * &b[0][0] + &a[0][1] * &b[1][0], &a[0][0] * &b[0][1] + &a[0][1] * &b[1][1]],
            [&a[1][0] * &b[0][0] + &a[1][1] * &b[1][0], &a[1][0] * &b[0][1] + &a[1][1] * &b[1][1]],
        ];
        prop_assert_eq!(f.moebius(&a, n).moebius(&b, n), f.moebius(&ab, n));
    }

    #[test]
    fn quaternion_algebra(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b, c) = (gen::quaternion(&mut r), gen::quaternion(&mut r), gen::quaternion(&mut r));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!((&a * &b).conj(), &b.conj() * &a.conj());
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn point_action_composes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (h1, h2) = (gen::displacement(&mut r), gen::displacement(&mut r));
        let x = gen::affine_point(&mut r);
        let once = act_on_point(&(&h2 * &h1), &x).unwrap();
        let twice = act_on_point(&h2, &act_on_point(&h1, &x).unwrap()).unwrap();
        prop_assert_eq!(&once, &twice);
        let back = act_on_point(&h1.inverse().unwrap(), &act_on_point(&h1, &x).unwrap()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn quat_poly_norm_is_multiplicative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = gen::quat_poly(&mut r, 3);
        let b = gen::quat_poly(&mut r, 2);
        prop_assert_eq!(norm_poly(&(&a * &b)), &norm_poly(&a) * &norm_poly(&b));
        prop_assert_eq!(&a * &a.conj(), QuatPoly::from_real(&norm_poly(&a)));
    }

    #[test]
    fn right_division_reconstructs(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = gen::quat_poly(&mut r, 5);
        let b = gen::quat_poly_exact(&mut r, 2);
        let (q, rem) = a.right_divrem(&b).unwrap();
        prop_assert_eq!(&(&b * &q) + &rem, a);
        prop_assert!(rem.degree() < b.degree());
    }

    #[test]
    fn euclid_degrees_decrease(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = gen::quat_poly_exact(&mut r, 4);
        let g = gen::quat_poly_exact(&mut r, 3);
        let seq = euclid_remainders(&f, &g).unwrap();
        for w in seq.windows(2).skip(1) {
            prop_assert!(w[1].degree() < w[0].degree());
        }
    }

    #[test]
    fn left_gcd_recovers_common_left_factor(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = gen::quat_poly_exact(&mut r, 2).make_monic();
        let f = &l * &gen::quat_poly_exact(&mut r, 2);
        let g = &l * &gen::quat_poly_exact(&mut r, 1);
        let h = left_gcd(&f, &g).unwrap();
        prop_assert!(h.is_monic());
        prop_assert!(h.left_divides(&f) && h.left_divides(&g));
        prop_assert!(l.left_divides(&h));
    }

    #[test]
    fn factor_by_norm_postconditions(seed in any::<u64>()) {
        let mut r = rng(seed);
        // C = P0 Q with P0 conj(P0) = r and r coprime to mrpf(C)
        let p0 = gen::quat_poly_exact(&mut r, 2).make_monic();
        let norm = norm_poly(&p0);
        let c = &p0 * &gen::quat_poly_exact(&mut r, 2);
        prop_assume!(norm.gcd(&mrpf(&c).unwrap()).unwrap().is_one());
        let (p, q) = factor_by_norm(&c, &norm).unwrap();
        prop_assert_eq!(norm_poly(&p), norm);
        prop_assert_eq!(&p * &q, c);
        prop_assert_eq!(p, p0);
    }

    #[test]
    fn mrpf_divides_components(seed in any::<u64>()) {
        let mut r = rng(seed);
        let w = gen::monic_real_poly(&mut r, 2);
        let p = gen::quat_poly_exact(&mut r, 2).mul_real(&w);
        let m = mrpf(&p).unwrap();
        prop_assert!(w.divides(&m));
        for part in p.components() {
            prop_assert!(m.divides(&part));
        }
    }

    #[test]
    fn circularity_is_moebius_invariant(seed in any::<u64>(), m in moebius()) {
        let mut r = rng(seed);
        let c = gen::reduced_motion(&mut r, 2);
        let x = trajectory(&c, &ProjectivePoint::origin()).unwrap();
        let y = x.reparameterize(&m).unwrap();
        prop_assert_eq!(x.degree(), y.degree());
        prop_assert_eq!(x.circularity().unwrap(), y.circularity().unwrap());
    }

    #[test]
    fn normalization_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = gen::curve(&mut r, 3);
        let (n, t) = normalize_at_infinity(&x).unwrap();
        prop_assert!(is_normalized(&n));
        prop_assert!(curves_equal_projective(&t.invert(&n).unwrap(), &x));
        prop_assert_eq!(n.circularity().unwrap(), x.circularity().unwrap());
    }

    #[test]
    fn degree_bounds_hold(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = rng(seed);
        let c = gen::reduced_motion(&mut r, n);
        let pt = gen::affine_point(&mut r);
        let rep = degree_report(&c, &pt).unwrap();
        prop_assert!(rep.degree_bound_holds() && rep.circularity_bound_holds(), "{:?}", rep);
    }

    #[test]
    fn synthesis_round_trip(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = rng(seed);
        let c = gen::reduced_motion(&mut r, n);
        let x = trajectory(&c, &ProjectivePoint::origin()).unwrap();
        let res = synthesize(&x).unwrap();
        let (d, circ) = (x.degree(), x.circularity().unwrap());
        prop_assert_eq!(res.motion.degree(), Some(d - circ));
        prop_assert!(d - circ <= n);
        prop_assert_eq!(spherical_defect(&res.motion).unwrap(), d - 2 * circ);
        prop_assert!(curves_equal_projective(&trajectory(&res.motion, &ProjectivePoint::origin()).unwrap(), &x));
        let s = &res.normalized_motion;
        prop_assert!(is_motion_polynomial(&s.primal, &s.dual).is_empty());
    }

    #[test]
    fn minimal_motion_is_recovered(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = rng(seed);
        let c = gen::minimal_motion(&mut r, n);
        let x = trajectory(&c, &ProjectivePoint::origin()).unwrap();
        let (normal, _) = normalize_at_infinity(&x).unwrap();
        let res = synthesize_normalized(&normal).unwrap();
        prop_assert_eq!(&res.motion, &c);
        prop_assert_eq!(res, synthesize_normalized(&normal).unwrap());
    }

    #[test]
    fn moved_curve_gives_moved_motion(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = rng(seed);
        let c = gen::minimal_motion(&mut r, n);
        let h = gen::displacement(&mut r);
        let moved = change_coordinates(&c, &h, CoordinateChange::LeftCompose).unwrap();
        let xm = trajectory(&moved, &ProjectivePoint::origin()).unwrap();
        // right factor p^-1 fixes the origin and makes the value at infinity a translation
        let p_inv = DualQuaternion::from_primal(h.primal.inverse().unwrap());
        let expected = &moved * &MotionPoly::constant(&p_inv);
        let res = synthesize(&xm).unwrap();
        prop_assert_eq!(res.motion, expected);
    }

    #[test]
    fn reparameterized_motion_traces_reparameterized_curve(seed in any::<u64>(), m in moebius()) {
        let mut r = rng(seed);
        let c = gen::reduced_motion(&mut r, 2);
        let x = trajectory(&c, &ProjectivePoint::origin()).unwrap();
        let cm = reparameterize_motion(&c, &m).unwrap();
        let xm = trajectory(&cm, &ProjectivePoint::origin()).unwrap();
        prop_assert!(curves_equal_projective(&xm, &x.reparameterize(&m).unwrap()));
    }

    #[test]
    fn motion_product_stays_on_study_quadric(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = gen::reduced_motion(&mut r, 1);
        let b = gen::reduced_motion(&mut r, 2);
        let ab: MotionPoly = &a * &b;
        prop_assert!(is_motion_polynomial(&ab.primal, &ab.dual).is_empty());
    }
}
