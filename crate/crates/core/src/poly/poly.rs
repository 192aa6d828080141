use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::Field;
use crate::error::{Error, Result};

use super::monomial::{forms_dim, monomials_xyz, xyz_index, Monomial, SLOTS, SLOT_NAMES, X, Y, Z};
use super::order::{MonomialOrder, OrderKey};

/// Polynomial ring over `field` in `aux` auxiliary variables followed by
/// `x, y, z`. The auxiliary variables (at most two) exist only for
/// elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring<F: Field> {
    field: F,
    aux: usize,
}

impl<F: Field> Ring<F> {
    /// The plane ring `k[x, y, z]`.
    pub fn plane(field: F) -> Self {
        Ring { field, aux: 0 }
    }

    pub fn with_aux(field: F, aux: usize) -> Result<Self> {
        if aux > 2 {
            return Err(Error::InvalidArgument(format!("at most 2 auxiliary variables, got {aux}")));
        }
        Ok(Ring { field, aux })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn aux(&self) -> usize {
        self.aux
    }

    /// Slot index of the first ring variable.
    pub fn first_slot(&self) -> usize {
        X - self.aux
    }

    pub fn nvars(&self) -> usize {
        self.aux + 3
    }

    pub fn var_names(&self) -> Vec<char> {
        SLOT_NAMES[self.first_slot()..].to_vec()
    }

    pub fn slot_of(&self, name: char) -> Option<usize> {
        let first = self.first_slot();
        SLOT_NAMES[first..].iter().position(|&c| c == name).map(|i| i + first)
    }

    /// The same field without auxiliary variables.
    pub fn plane_ring(&self) -> Ring<F> {
        Ring::plane(self.field.clone())
    }

    pub fn order_key(&self, order: MonomialOrder, m: &Monomial) -> OrderKey {
        order.key(m, self.first_slot())
    }
}

/// A polynomial: nonzero terms sorted by descending grevlex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<F: Field> {
    ring: Ring<F>,
    terms: Vec<(Monomial, F::Elem)>,
}

fn canonical_key(m: &Monomial) -> OrderKey {
    MonomialOrder::GrevLex.key(m, 0)
}

impl<F: Field> Poly<F> {
    pub fn zero(ring: &Ring<F>) -> Self {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring<F>, c: F::Elem) -> Self {
        Self::monomial(ring, Monomial::ONE, c)
    }

    pub fn one(ring: &Ring<F>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn monomial(ring: &Ring<F>, m: Monomial, c: F::Elem) -> Self {
        let terms = if ring.field.is_zero(&c) { vec![] } else { vec![(m, c)] };
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// The ring variable named `name` (one of s, t, x, y, z).
    pub fn var(ring: &Ring<F>, name: char) -> Result<Self> {
        let slot = ring.slot_of(name).ok_or_else(|| Error::UnknownVariable {
            name: name.to_string(),
            pos: 0,
        })?;
        Ok(Self::monomial(ring, Monomial::var(slot), ring.field.one()))
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms(ring: &Ring<F>, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Self {
        let f = &ring.field;
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in terms {
            debug_assert!(m.free_of_slots(0..ring.first_slot()), "monomial outside ring");
            match acc.get_mut(&m) {
                Some(v) => *v = f.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        terms.sort_by_key(|(m, _)| std::cmp::Reverse(canonical_key(m)));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Degree-t form whose coefficients follow `monomials_xyz(t)`.
    pub fn from_coefficients(ring: &Ring<F>, t: u32, coeffs: &[F::Elem]) -> Self {
        assert_eq!(coeffs.len(), forms_dim(t));
        let terms = monomials_xyz(t)
            .into_iter()
            .zip(coeffs.iter().cloned())
            .filter(|(_, c)| !ring.field.is_zero(c))
            .collect();
        // monomials_xyz is already in canonical order
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Coefficient vector of a degree-t form in the `monomials_xyz(t)` basis.
    pub fn coefficients(&self, t: u32) -> Result<Vec<F::Elem>> {
        let mut v = vec![self.ring.field.zero(); forms_dim(t)];
        for (m, c) in &self.terms {
            if m.degree() != t || !m.free_of_slots(0..X) {
                return Err(Error::NotHomogeneous);
            }
            v[xyz_index(m)] = c.clone();
        }
        Ok(v)
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        &self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn coefficient(&self, m: &Monomial) -> F::Elem {
        self.terms
            .iter()
            .find(|(n, _)| n == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field.zero())
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<&(Monomial, F::Elem)> {
        if order == MonomialOrder::GrevLex {
            return self.terms.first();
        }
        self.terms.iter().max_by_key(|(m, _)| self.ring.order_key(order, m))
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "{:?}/{} aux vs {:?}/{} aux",
                self.ring.field.spec(),
                self.ring.aux,
                other.ring.field.spec(),
                other.ring.aux
            )));
        }
        Ok(())
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let f = &self.ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let take_b = |c: &F::Elem| if negate_other { f.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            let (ka, kb) = (canonical_key(&a[i].0), canonical_key(&b[j].0));
            match ka.cmp(&kb) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0, take_b(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other { f.sub(&a[i].1, &b[j].1) } else { f.add(&a[i].1, &b[j].1) };
                    if !f.is_zero(&c) {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, take_b(c))));
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let f = &self.ring.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let p = f.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = f.add(v, &p),
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        terms.sort_by_key(|(m, _)| std::cmp::Reverse(canonical_key(m)));
        Ok(Poly {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.ring.field;
        if f.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, f.mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales so that the grevlex-leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&self.ring.field.inv(c)),
        }
    }

    /// Hasse derivative with multi-index `a`: each term `c x^b` contributes
    /// `c * prod C(b_i, a_i) x^(b - a)`.
    pub fn hasse_derivative(&self, a: &Monomial) -> Self {
        let f = &self.ring.field;
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let rest = m.div(a)?;
            let mut coef = c.clone();
            for (bi, ai) in m.exps().iter().zip(a.exps()) {
                if *ai > 0 {
                    coef = f.mul(&coef, &f.binomial(*bi as u32, *ai as u32));
                }
            }
            (!f.is_zero(&coef)).then_some((rest, coef))
        });
        Self::from_terms(&self.ring, terms.collect::<Vec<_>>())
    }

    /// Value at a point given by (x, y, z); auxiliary variables must be absent.
    pub fn eval(&self, p: &[F::Elem; 3]) -> F::Elem {
        let f = &self.ring.field;
        self.terms.iter().fold(f.zero(), |acc, (m, c)| {
            let e = m.exps();
            debug_assert!(m.free_of_slots(0..X));
            let v = f.mul(
                c,
                &f.mul(
                    &f.pow(&p[0], e[X] as u64),
                    &f.mul(&f.pow(&p[1], e[Y] as u64), &f.pow(&p[2], e[Z] as u64)),
                ),
            );
            f.add(&acc, &v)
        })
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide `self`.
    pub fn div_exact(&self, g: &Self) -> Option<Self> {
        assert!(!g.is_zero(), "division by zero polynomial");
        let f = &self.ring.field;
        let (lm, lc) = g.terms[0].clone();
        let lc_inv = f.inv(&lc);
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let q = m.div(&lm)?;
            let qc = f.mul(&c, &lc_inv);
            rem = &rem - &g.mul_monomial(&q).scale(&qc);
            quot.push((q, qc));
        }
        Some(Self::from_terms(&self.ring, quot))
    }

    /// Moves the polynomial into `target`, which must have at least as many
    /// auxiliary variables over the same field.
    pub fn embed(&self, target: &Ring<F>) -> Result<Self> {
        if target.field != self.ring.field || target.aux < self.ring.aux {
            return Err(Error::RingMismatch("cannot embed into a smaller ring".into()));
        }
        Ok(Poly {
            ring: target.clone(),
            terms: self.terms.clone(),
        })
    }

    /// Moves the polynomial into `target` when it does not involve the
    /// variables `target` lacks.
    pub fn contract(&self, target: &Ring<F>) -> Result<Self> {
        if target.field != self.ring.field {
            return Err(Error::RingMismatch("field differs".into()));
        }
        if !self.terms.iter().all(|(m, _)| m.free_of_slots(0..target.first_slot())) {
            return Err(Error::RingMismatch("polynomial uses eliminated variables".into()));
        }
        Ok(Poly {
            ring: target.clone(),
            terms: self.terms.clone(),
        })
    }

    pub fn uses_slot(&self, slot: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exps()[slot] > 0)
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Self) -> Poly<F> {
        self.checked_add(rhs).expect("ring mismatch in +")
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Self) -> Poly<F> {
        self.checked_sub(rhs).expect("ring mismatch in -")
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Self) -> Poly<F> {
        self.checked_mul(rhs).expect("ring mismatch in *")
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        let f = &self.ring.field;
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, f.neg(c))).collect(),
        }
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        let f = &self.ring.field;
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let text = f.format(c);
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (i, neg) {
                (0, true) => write!(out, "-")?,
                (0, false) => {}
                (_, true) => write!(out, " - ")?,
                (_, false) => write!(out, " + ")?,
            }
            if m.is_one() {
                write!(out, "{mag}")?;
            } else if mag == "1" {
                write!(out, "{m}")?;
            } else {
                write!(out, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Slots used by ring variables, for iteration helpers.
pub fn ring_slots<F: Field>(ring: &Ring<F>) -> std::ops::Range<usize> {
    ring.first_slot()..SLOTS
}
