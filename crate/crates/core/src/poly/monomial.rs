use std::fmt;

/// Number of exponent slots. Slots 0 and 1 hold the auxiliary elimination
/// variables `s`, `t`; slots 2..5 hold `x`, `y`, `z`.
pub const SLOTS: usize = 5;
pub const X: usize = 2;
pub const Y: usize = 3;
pub const Z: usize = 4;
pub const SLOT_NAMES: [char; SLOTS] = ['s', 't', 'x', 'y', 'z'];

/// A monomial as an exponent vector over the fixed slots.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub [u16; SLOTS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; SLOTS]);

    pub fn xyz(a: u16, b: u16, c: u16) -> Self {
        Monomial([0, 0, a, b, c])
    }

    pub fn var(slot: usize) -> Self {
        let mut e = [0; SLOTS];
        e[slot] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u16; SLOTS] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Degree in x, y, z only; auxiliary variables have weight zero.
    pub fn xyz_degree(&self) -> u32 {
        self.0[X..].iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; SLOTS]
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(&other.0) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        Monomial(e)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(&other.0) {
            *a = a.checked_sub(*b)?;
        }
        Some(Monomial(e))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(&other.0) {
            *a = (*a).max(*b);
        }
        Monomial(e)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// True when every slot in `slots` has exponent zero.
    pub fn free_of_slots(&self, slots: std::ops::Range<usize>) -> bool {
        self.0[slots].iter().all(|&e| e == 0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (slot, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", SLOT_NAMES[slot])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of degree `t` in x, y, z, in descending graded reverse
/// lexicographic order. This fixes the column order of every coefficient
/// vector in the crate.
pub fn monomials_xyz(t: u32) -> Vec<Monomial> {
    let t = t as u16;
    let mut out = Vec::with_capacity(((t as usize + 1) * (t as usize + 2)) / 2);
    // grevlex descending: smallest z exponent first, then smallest y exponent
    for c in 0..=t {
        for b in 0..=(t - c) {
            out.push(Monomial::xyz(t - b - c, b, c));
        }
    }
    out
}

/// Index of a degree-t monomial in `monomials_xyz(t)`.
pub fn xyz_index(m: &Monomial) -> usize {
    let e = m.exps();
    let t = (e[X] + e[Y] + e[Z]) as usize;
    let (b, c) = (e[Y] as usize, e[Z] as usize);
    // rows for z-exponents < c contribute (t - c' + 1) each
    let before: usize = (0..c).map(|cc| t - cc + 1).sum();
    before + b
}

/// C(t + 2, 2), the dimension of the degree-t forms in three variables.
pub fn forms_dim(t: u32) -> usize {
    let t = t as usize;
    (t + 1) * (t + 2) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_matches_enumeration() {
        for t in 0..8 {
            let ms = monomials_xyz(t);
            assert_eq!(ms.len(), forms_dim(t));
            for (i, m) in ms.iter().enumerate() {
                assert_eq!(xyz_index(m), i);
                assert_eq!(m.degree(), t);
            }
        }
    }

    #[test]
    fn lcm_and_division() {
        let a = Monomial::xyz(2, 1, 0);
        let b = Monomial::xyz(0, 3, 1);
        assert_eq!(a.lcm(&b), Monomial::xyz(2, 3, 1));
        assert_eq!(a.lcm(&b).div(&a), Some(Monomial::xyz(0, 2, 1)));
        assert_eq!(a.div(&b), None);
        assert!(!a.is_coprime(&b));
        assert!(Monomial::xyz(1, 0, 0).is_coprime(&Monomial::xyz(0, 0, 4)));
    }
}
