use serde::{Deserialize, Serialize};

use super::monomial::{Monomial, SLOTS};

/// Monomial orders over the ring variables (`[aux..., x, y, z]`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    /// Block order eliminating the first `k` ring variables: those are
    /// compared first (grevlex within the block), then the rest (grevlex).
    Elimination(usize),
}

/// Packed sort key: comparing keys as integers compares monomials.
pub type OrderKey = u128;

const MAX: u128 = u16::MAX as u128;

fn push(acc: u128, field: u128) -> u128 {
    (acc << 16) | field
}

impl MonomialOrder {
    /// Sort key of `m` in a ring whose first variable sits at `first_slot`.
    /// Unused slots are always zero, so they never affect comparisons.
    pub fn key(&self, m: &Monomial, first_slot: usize) -> OrderKey {
        let e = m.exps();
        match *self {
            MonomialOrder::GrevLex => grevlex_block(e, 0..SLOTS),
            MonomialOrder::Lex => e.iter().fold(0, |acc, &x| push(acc, x as u128)),
            MonomialOrder::Elimination(k) => {
                let split = (first_slot + k).min(SLOTS);
                let hi = grevlex_block(e, 0..split);
                let lo = grevlex_block(e, split..SLOTS);
                let lo_width = 16 * (SLOTS - split + 1);
                (hi << lo_width) | lo
            }
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial, first_slot: usize) -> std::cmp::Ordering {
        self.key(a, first_slot).cmp(&self.key(b, first_slot))
    }
}

fn grevlex_block(e: &[u16; SLOTS], range: std::ops::Range<usize>) -> u128 {
    let deg: u128 = e[range.clone()].iter().map(|&x| x as u128).sum();
    range.rev().fold(deg, |acc, i| push(acc, MAX - e[i] as u128))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::monomial::monomials_xyz;
    use std::cmp::Ordering::*;

    #[test]
    fn grevlex_matches_enumeration_order() {
        for t in 1..6 {
            let ms = monomials_xyz(t);
            for w in ms.windows(2) {
                assert_eq!(MonomialOrder::GrevLex.cmp(&w[0], &w[1], 2), Greater);
            }
        }
    }

    #[test]
    fn grevlex_vs_lex() {
        // x*z vs y^2: lex says x*z > y^2, grevlex says y^2 > x*z
        let xz = Monomial::xyz(1, 0, 1);
        let yy = Monomial::xyz(0, 2, 0);
        assert_eq!(MonomialOrder::Lex.cmp(&xz, &yy, 2), Greater);
        assert_eq!(MonomialOrder::GrevLex.cmp(&xz, &yy, 2), Less);
    }

    #[test]
    fn elimination_puts_aux_first() {
        // ring [t, x, y, z]: first slot is 1
        let t = Monomial::var(1);
        let x5 = Monomial::xyz(5, 0, 0);
        assert_eq!(MonomialOrder::Elimination(1).cmp(&t, &x5, 1), Greater);
        assert_eq!(MonomialOrder::GrevLex.cmp(&t, &x5, 1), Less);
        // inside the second block it is grevlex
        let a = Monomial::xyz(0, 2, 0);
        let b = Monomial::xyz(1, 0, 1);
        assert_eq!(MonomialOrder::Elimination(1).cmp(&a, &b, 1), Greater);
    }

    #[test]
    fn multiplicative() {
        let a = Monomial::xyz(2, 0, 1);
        let b = Monomial::xyz(0, 3, 0);
        let c = Monomial([0, 2, 1, 1, 0]);
        for o in [MonomialOrder::GrevLex, MonomialOrder::Lex, MonomialOrder::Elimination(1)] {
            assert_eq!(o.cmp(&a, &b, 1), o.cmp(&a.mul(&c), &b.mul(&c), 1));
        }
    }
}
