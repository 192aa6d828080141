//! Invariants of fat point ideals, divisor classes and the oracle, checked on
//! the configurations the acceptance run uses.

use std::sync::Arc;

use resurgence::algebra::{PrimeField, RationalField};
use resurgence::closedform::{alpha_symbolic, hilbert_conic, q_power, q_single, ConfigKind};
use resurgence::divisors::{h0_general, is_nef, DivClass, NefContext};
use resurgence::fatpoints::{FatPointScheme, PointConfig, PointSpec};
use resurgence::ideals::{power_products, Ideal};
use resurgence::oracle::{contains_bruteforce, power_spaces, OracleOptions};
use resurgence::poly::{forms_dim, MonomialOrder};

fn conic(n: usize) -> FatPointScheme<PrimeField> {
    FatPointScheme::uniform(Arc::new(PointConfig::new(PointSpec::conic(n), PrimeField::default_prime()).unwrap()), 1)
}

fn general(n: usize) -> FatPointScheme<PrimeField> {
    let cfg = PointConfig::new(PointSpec::generic(n, 42), PrimeField::default_prime()).unwrap();
    FatPointScheme::uniform(Arc::new(cfg), 1)
}

#[test]
fn hilbert_function_stabilizes_at_degree() {
    for z in [conic(5), conic(7), general(6), general(8)] {
        for m in 1..=3 {
            let fi = z.scaled(m).fat_ideal().unwrap();
            let colength = z.scaled(m).colength();
            for t in fi.reg - 1..fi.reg + 3 {
                assert_eq!(fi.ideal.hilbert_function(t).unwrap(), colength);
            }
            assert!(fi.ideal.hilbert_function(fi.reg - 2).unwrap() < colength);
        }
    }
}

#[test]
fn route_a_equals_route_b() {
    for z in [conic(5), general(6), general(4)] {
        for m in 1..=2 {
            let a = z.symbolic_power_by_intersection(m).unwrap();
            let b = z.symbolic_power(m).unwrap();
            for t in 0..=b.reg + 2 {
                assert_eq!(a.graded_dim(t).unwrap(), z.scaled(m).graded_dim(t), "t={t}");
            }
            let ga = a.basis(MonomialOrder::GrevLex, None).unwrap().polys();
            let gb = b.ideal.basis(MonomialOrder::GrevLex, None).unwrap().polys();
            assert_eq!(ga, gb);
        }
    }
}

#[test]
fn route_a_equals_route_b_over_rationals() {
    let cfg = Arc::new(PointConfig::new(PointSpec::conic(5), RationalField).unwrap());
    let z = FatPointScheme::uniform(cfg, 1);
    let a = z.symbolic_power_by_intersection(2).unwrap();
    assert!(a.equals(&z.symbolic_power(2).unwrap().ideal).unwrap());
}

#[test]
fn conic_alpha_and_hilbert() {
    for n in [5usize, 6, 7, 9] {
        let z = conic(n);
        for m in 1..=4u32 {
            let mz = z.scaled(m);
            assert_eq!(mz.alpha().unwrap(), 2 * m);
            for t in 2 * m..=2 * m + 2 * n as u32 {
                assert_eq!(mz.graded_dim(t) as i64, hilbert_conic(n as u32, m, t).unwrap(), "n={n} m={m} t={t}");
            }
        }
    }
}

#[test]
fn genericity_is_deterministic() {
    let f = PrimeField::default_prime();
    let a = PointConfig::new(PointSpec::generic(8, 5), f).unwrap();
    let b = PointConfig::new(PointSpec::generic(8, 5), f).unwrap();
    assert_eq!(a.points(), b.points());
    let c = PointConfig::new(PointSpec::generic(8, 6), f).unwrap();
    assert_ne!(a.points(), c.points());
}

#[test]
fn powers_have_expected_alpha() {
    for z in [conic(5), general(6), general(7), general(3)] {
        let fi = z.fat_ideal().unwrap();
        for r in 1..=3 {
            let spaces = power_spaces(z.config().field(), fi.gens(), r, r * fi.alpha()).unwrap();
            let first = spaces.iter().position(|s| s.rank() > 0).unwrap() as u32;
            assert_eq!(first, r * fi.alpha());
        }
    }
}

#[test]
fn ordinary_power_inside_symbolic_power() {
    for z in [conic(5), general(7), general(9)] {
        let fi = z.fat_ideal().unwrap();
        for r in 2..=3 {
            for g in power_products(fi.gens(), r) {
                assert!(z.scaled(r).contains(&g).unwrap());
            }
        }
    }
}

#[test]
fn nef_classes_are_effective() {
    for n in 1..=8usize {
        let z = general(n);
        for m in 1..=3i64 {
            for t in 0..=3 * m + 1 {
                let f = DivClass::uniform(n, t, m);
                if n >= 2 && is_nef(&f, NefContext::General).unwrap() {
                    assert!(z.scaled(m as u32).graded_dim(t as u32) > 0, "n={n} t={t} m={m}");
                }
                assert_eq!(z.scaled(m as u32).graded_dim(t as u32) as i64, h0_general(&f).unwrap());
            }
        }
    }
}

#[test]
fn conic_graded_containment_matches_conic_factors() {
    // I^(m)_t ⊆ (I^r)_t iff q((I^r)_t) ≤ q(I^(m)_t), multiplicity s
    for n in [5u32, 7] {
        let z = conic(n as usize);
        for s in 1..=2u32 {
            let base = z.scaled(s).fat_ideal().unwrap();
            for r in 1..=2u32 {
                for m in r..=r + 1 {
                    let top = 2 * m * s + n + 2;
                    let spaces = power_spaces(z.config().field(), base.gens(), r, top).unwrap();
                    for t in 2 * m * s..=top {
                        let piece = z.scaled(m * s).graded_piece(t);
                        let inside = piece.basis.iter().all(|g| spaces[t as usize].contains(&g.coefficients(t).unwrap()));
                        let by_q = q_power(n, r, t, s).unwrap() <= q_single(n, m * s, t).unwrap();
                        assert_eq!(inside, by_q, "n={n} s={s} m={m} r={r} t={t}");
                    }
                }
            }
        }
    }
}

#[test]
fn oracle_grid_is_monotone_and_matches_bounds() {
    let opts = OracleOptions::default();
    for (z, kind) in [
        (conic(5), ConfigKind::ConicUniform { n: 5, s: 1 }),
        (general(7), ConfigKind::GeneralSimple { n: 7 }),
    ] {
        let mut grid = [[false; 4]; 5];
        for m in 1..=4u32 {
            for r in 1..=3u32 {
                grid[m as usize][r as usize] = contains_bruteforce(&z, m, r, &opts).unwrap().holds().unwrap();
                if m >= 2 * r {
                    assert!(grid[m as usize][r as usize]);
                }
            }
            assert_eq!(resurgence::oracle::alpha_bruteforce(&z, m).unwrap(), alpha_symbolic(kind, m).unwrap());
        }
        for m in 1..=3usize {
            for r in 1..=3usize {
                if grid[m][r] {
                    assert!(grid[m + 1][r]);
                    if r > 1 {
                        assert!(grid[m][r - 1]);
                    }
                }
            }
        }
    }
}

#[test]
fn generator_ideal_matches_vanishing_dims() {
    let z = general(6);
    let fi = z.scaled(2).fat_ideal().unwrap();
    let copy = Ideal::new(z.ring(), fi.gens().to_vec()).unwrap();
    copy.basis(MonomialOrder::GrevLex, None).unwrap();
    for t in 0..12 {
        assert_eq!(copy.graded_dim(t).unwrap(), forms_dim(t) - z.scaled(2).hilbert(t));
    }
}
