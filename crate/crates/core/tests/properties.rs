mod common;

use common::*;
use planemap::algebra::{gcd, squarefree_part};
use planemap::cli::corpus::{random_automorphism, CorpusConfig};
use planemap::cli::parse_polynomial;
use planemap::maps::{compose, invert, jacobian, monicize, PolyMap2};
use planemap::resultants::{power_structure, resultant, sylvester_matrix};
use planemap::{QPoly, Var};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const XY: &[Var] = &[Var::X, Var::Y];
const XYU: &[Var] = &[Var::X, Var::Y, Var::U];

fn divides(d: &QPoly, p: &QPoly) -> bool {
    p.is_zero() || p.div_exact(d).is_some()
}

fn sign(k: u32) -> QPoly {
    if k.is_multiple_of(2) {
        QPoly::one()
    } else {
        QPoly::int(-1)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(XYU, 2, 4), b in poly(XYU, 2, 4), c in poly(XYU, 2, 4)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &QPoly::one(), a.clone());
    }

    #[test]
    fn leibniz_rule(a in poly(XYU, 3, 4), b in poly(XYU, 3, 4)) {
        for w in [Var::X, Var::Y, Var::U] {
            let lhs = (&a * &b).derivative(w);
            let rhs = &(&a.derivative(w) * &b) + &(&a * &b.derivative(w));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(
        a in poly(XY, 3, 4),
        b in poly(XY, 3, 4),
        s1 in poly(XYU, 2, 3),
        s2 in poly(XYU, 2, 3),
    ) {
        let sub = [(Var::X, s1), (Var::Y, s2)];
        prop_assert_eq!((&a * &b).substitute(&sub), &a.substitute(&sub) * &b.substitute(&sub));
        prop_assert_eq!((&a + &b).substitute(&sub), &a.substitute(&sub) + &b.substitute(&sub));
    }

    #[test]
    fn gcd_contains_common_factor(
        a in nonzero_poly(XY, 2, 3),
        b in nonzero_poly(XY, 2, 3),
        c in nonzero_poly(XY, 2, 3),
    ) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = gcd(&ac, &bc);
        prop_assert!(divides(&g, &ac) && divides(&g, &bc));
        prop_assert!(divides(&c, &g));
    }

    #[test]
    fn squarefree_part_properties(a in nonzero_poly(XY, 2, 3), b in nonzero_poly(XY, 2, 3)) {
        let p = &a.pow(2) * &b;
        prop_assume!(!p.is_constant());
        let s = squarefree_part(&p).unwrap();
        let ab = &a * &b;
        prop_assert!(divides(&s, &p) && divides(&s, &ab));
        prop_assert_eq!(squarefree_part(&ab).unwrap(), s.clone());
        let again = squarefree_part(&s).unwrap();
        prop_assert_eq!(again.normalize(), s.normalize());
    }

    #[test]
    fn resultant_matches_cofactor_determinant(f in nonzero_poly(XY, 3, 4), g in nonzero_poly(XY, 3, 4)) {
        prop_assume!(f.degree_in(Var::Y).unwrap_or(0) + g.degree_in(Var::Y).unwrap_or(0) >= 1);
        let r = resultant(&f, &g, Var::Y).unwrap();
        let det = sylvester_matrix(&f, &g, Var::Y).unwrap().determinant_cofactor();
        prop_assert_eq!(r, det);
    }

    #[test]
    fn resultant_antisymmetry(f in nonzero_poly(XY, 3, 4), g in nonzero_poly(XY, 3, 4)) {
        let (m, n) = (f.degree_in(Var::Y).unwrap(), g.degree_in(Var::Y).unwrap());
        let fg = resultant(&f, &g, Var::Y).unwrap();
        let gf = resultant(&g, &f, Var::Y).unwrap();
        prop_assert_eq!(gf, &sign(m * n) * &fg);
    }

    #[test]
    fn resultant_multiplicativity(
        f in nonzero_poly(XY, 2, 3),
        h in nonzero_poly(XY, 2, 3),
        g in nonzero_poly(XY, 2, 3),
    ) {
        let lhs = resultant(&(&f * &h), &g, Var::Y).unwrap();
        let rhs = &resultant(&f, &g, Var::Y).unwrap() * &resultant(&h, &g, Var::Y).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn specialization_commutes_for_monic_inputs(
        f in monic_in_y(3),
        g in monic_in_y(3),
        c in small_rat(),
    ) {
        let r = resultant(&f, &g, Var::Y).unwrap();
        let at = |p: &QPoly| p.evaluate(&[(Var::X, c.clone())]);
        prop_assert_eq!(at(&r), resultant(&at(&f), &at(&g), Var::Y).unwrap());
    }

    #[test]
    fn curve_resultant_exponent_divides_degree_gcd(
        f in univariate(Var::T, 4),
        g in univariate(Var::T, 4),
    ) {
        let r = resultant(&(&f - &u()), &(&g - &v()), Var::T).unwrap();
        let ps = power_structure(&r).unwrap();
        prop_assert_eq!(ps.expand(), r);
        let (m, n) = (f.degree_in(Var::T).unwrap(), g.degree_in(Var::T).unwrap());
        prop_assert_eq!(num_integer::gcd(m, n) % ps.exponent, 0);
    }

    #[test]
    fn jacobian_chain_rule(
        p1 in nonzero_poly(XY, 2, 3),
        q1 in nonzero_poly(XY, 2, 3),
        p2 in nonzero_poly(XY, 2, 3),
        q2 in nonzero_poly(XY, 2, 3),
    ) {
        let f = PolyMap2::new(p1, q1).unwrap();
        let g = PolyMap2::new(p2, q2).unwrap();
        let lhs = jacobian(&compose(&f, &g)).jac;
        let outer = jacobian(&f).jac.substitute(&[(Var::X, g.p().clone()), (Var::Y, g.q().clone())]);
        prop_assert_eq!(lhs, &outer * &jacobian(&g).jac);
    }

    #[test]
    fn monicize_is_idempotent(p in nonzero_poly(XY, 3, 4), q in nonzero_poly(XY, 3, 4)) {
        prop_assume!(!p.is_constant() && !q.is_constant());
        let f = PolyMap2::new(p, q).unwrap();
        let (g, cert) = monicize(&f).unwrap();
        prop_assert_eq!(cert.apply(&f), g.clone());
        let (h, again) = monicize(&g).unwrap();
        prop_assert!(again.is_trivial());
        prop_assert_eq!(h, g);
    }

    #[test]
    fn printed_polynomials_reparse(p in poly(&[Var::X, Var::Y, Var::U, Var::V], 3, 6)) {
        prop_assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tame_automorphisms_invert(seed in any::<u64>()) {
        let cfg = CorpusConfig { depth: 3, max_degree: 6, ..CorpusConfig::default() };
        let f = random_automorphism(&mut ChaCha8Rng::seed_from_u64(seed), &cfg);
        let inv = invert(&f).unwrap();
        let c = inv.certificate().expect("tame maps are invertible");
        prop_assert!(compose(&f, &c.as_map()).is_identity());
        prop_assert!(compose(&c.as_map(), &f).is_identity());
    }
}
