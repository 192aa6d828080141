//! Property tests over random polynomials, matrices, ideals and divisor
//! classes.

use proptest::prelude::*;

use resurgence::algebra::{Field, Matrix, PrimeField, RationalField};
use resurgence::closedform::{contains_conic, contains_general, q_power, q_power_closed_odd};
use resurgence::divisors::{cremona_reduce, DivClass, ReductionStep};
use resurgence::groebner::{buchberger, ideal_member};
use resurgence::ideals::Ideal;
use resurgence::poly::{monomials_xyz, Monomial, MonomialOrder, Poly, Ring, X, Y, Z};

fn ring7() -> Ring<PrimeField> {
    Ring::plane(PrimeField::new(7).unwrap())
}

fn ring_big() -> Ring<PrimeField> {
    Ring::plane(PrimeField::default_prime())
}

fn poly_from<F: Field>(ring: &Ring<F>, terms: &[(u16, u16, u16, i64)]) -> Poly<F> {
    let f = ring.field();
    Poly::from_terms(ring, terms.iter().map(|&(a, b, c, k)| (Monomial::xyz(a, b, c), f.from_i64(k))))
}

fn terms(max_deg: u16, max_len: usize) -> impl Strategy<Value = Vec<(u16, u16, u16, i64)>> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, 0..=max_deg, -20i64..=20), 0..=max_len)
}

fn form(t: u32) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, monomials_xyz(t).len())
}

fn form_poly<F: Field>(ring: &Ring<F>, t: u32, coeffs: &[i64]) -> Poly<F> {
    let f = ring.field();
    let c: Vec<F::Elem> = coeffs.iter().map(|&k| f.from_i64(k)).collect();
    Poly::from_coefficients(ring, t, &c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in terms(3, 5), b in terms(3, 5), c in terms(3, 5)) {
        let r = ring_big();
        let (a, b, c) = (poly_from(&r, &a), poly_from(&r, &b), poly_from(&r, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn rational_ring_axioms(a in terms(2, 4), b in terms(2, 4), c in terms(2, 4)) {
        let r = Ring::plane(RationalField);
        let (a, b, c) = (poly_from(&r, &a), poly_from(&r, &b), poly_from(&r, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn hasse_leibniz(a in terms(4, 4), b in terms(4, 4), d in (0u16..3, 0u16..3, 0u16..3)) {
        // characteristic 7 exercises the Hasse (not ordinary) derivative
        let r = ring7();
        let (f, g) = (poly_from(&r, &a), poly_from(&r, &b));
        let target = Monomial::xyz(d.0, d.1, d.2);
        let lhs = (&f * &g).hasse_derivative(&target);
        let mut rhs = Poly::zero(&r);
        for i in 0..=d.0 {
            for j in 0..=d.1 {
                for k in 0..=d.2 {
                    let b1 = Monomial::xyz(i, j, k);
                    let b2 = Monomial::xyz(d.0 - i, d.1 - j, d.2 - k);
                    rhs = &rhs + &(&f.hasse_derivative(&b1) * &g.hasse_derivative(&b2));
                }
            }
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn parse_print_roundtrip(a in terms(5, 8)) {
        for p in [poly_from(&ring_big(), &a)] {
            let text = p.to_string();
            prop_assert_eq!(Poly::parse(&text, p.ring()).unwrap(), p);
        }
        let q = poly_from(&Ring::plane(RationalField), &a);
        prop_assert_eq!(Poly::parse(&q.to_string(), q.ring()).unwrap(), q);
    }

    #[test]
    fn matrix_rank_kernel_rref(rows in 1usize..6, cols in 1usize..6, seed in prop::collection::vec(-3i64..=3, 36)) {
        let f = PrimeField::new(7).unwrap();
        let data: Vec<Vec<u64>> = (0..rows).map(|i| (0..cols).map(|j| f.from_i64(seed[i * 6 + j])).collect()).collect();
        let m = Matrix::from_rows(&f, cols, data);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        let kernel = m.kernel_basis();
        prop_assert_eq!(kernel.len(), cols - m.rank());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(|x| f.is_zero(x)));
        }
        let once = m.rref().matrix;
        prop_assert_eq!(once.rref().matrix, once);
    }

    #[test]
    fn normal_form_idempotent_and_membership(g1 in form(2), g2 in form(3), q1 in form(2), q2 in form(1), h in form(4)) {
        let r = ring_big();
        let gens: Vec<_> = [form_poly(&r, 2, &g1), form_poly(&r, 3, &g2)].into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let full = buchberger(&r, &gens, MonomialOrder::GrevLex, None).unwrap();
        prop_assert!(full.verify());
        let h = form_poly(&r, 4, &h);
        let nf = full.normal_form(&h).unwrap();
        prop_assert_eq!(full.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(full.contains(&(&h - &nf)).unwrap());
        // f = Σ qᵢ gᵢ is a member
        let mut f = Poly::zero(&r);
        for (g, q) in gens.iter().zip([form_poly(&r, 2, &q1), form_poly(&r, 1, &q2)]) {
            f = &f + &(&q * g);
        }
        prop_assert!(ideal_member(&f, &gens).unwrap());
        // truncated and complete bases agree on degree-4 forms
        let trunc = buchberger(&r, &gens, MonomialOrder::GrevLex, Some(4)).unwrap();
        prop_assert!(trunc.verify());
        prop_assert_eq!(trunc.contains(&h).unwrap(), full.contains(&h).unwrap());
        // and with graded linear algebra
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        let span = ideal.graded_span(4).unwrap();
        prop_assert_eq!(span.contains(&h.coefficients(4).unwrap()), full.contains(&h).unwrap());
    }

    #[test]
    fn truncate_pieces(g1 in form(2), g2 in form(2), d in 0u32..5) {
        let r = ring_big();
        let gens: Vec<_> = [form_poly(&r, 2, &g1), form_poly(&r, 2, &g2)].into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let i = Ideal::new(&r, gens).unwrap();
        let t = i.truncate(d).unwrap();
        for deg in 0..6 {
            let expect = if deg < d { 0 } else { i.graded_dim(deg).unwrap() };
            prop_assert_eq!(t.graded_dim(deg).unwrap(), expect);
        }
    }

    #[test]
    fn cremona_isometry(a in 0i64..30, m in prop::collection::vec(-2i64..12, 3..=8)) {
        let f = DivClass::new(a, m);
        let red = cremona_reduce(&f).unwrap();
        for step in &red.transcript {
            if let ReductionStep::Cremona { before, after, .. } = step {
                prop_assert_eq!(before.square(), after.square());
                prop_assert_eq!(before.dot_canonical(), after.dot_canonical());
            }
        }
        let x = f.cremona_at(0, 1, 2);
        prop_assert_eq!(x.square(), f.square());
        prop_assert_eq!(x.dot_canonical(), f.dot_canonical());
        prop_assert_eq!(x.cremona_at(0, 1, 2), f);
    }

    #[test]
    fn predictor_monotone(n in 1u32..10, m in 1u32..30, r in 1u32..30) {
        let v = contains_general(n, m, r).unwrap();
        if v.contains == Some(true) {
            prop_assert!(m >= r);
            prop_assert_eq!(contains_general(n, m + 1, r).unwrap().contains, Some(true));
            if r > 1 {
                prop_assert_eq!(contains_general(n, m, r - 1).unwrap().contains, Some(true));
            }
        }
        let c = contains_conic(n + 4, m, r).unwrap();
        if c.contains == Some(true) {
            prop_assert!(m >= r);
            prop_assert_eq!(contains_conic(n + 4, m + 1, r).unwrap().contains, Some(true));
        }
    }

    #[test]
    fn odd_closed_form(k in 2u32..6, r in 1u32..7, dt in 0u32..60) {
        let n = 2 * k + 1;
        let t = 2 * r + dt % (r * (n + 3) - 2 * r + 1);
        prop_assert_eq!(q_power(n, r, t, 1).unwrap() as i64, q_power_closed_odd(n, r, t).unwrap());
    }
}

#[test]
fn leading_variables_are_xyz() {
    // sanity: the three plane variables are the slots the tests build on
    let r = ring_big();
    for (c, s) in [('x', X), ('y', Y), ('z', Z)] {
        assert_eq!(r.slot_of(c), Some(s));
    }
}
