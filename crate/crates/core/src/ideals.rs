//! Homogeneous ideals of `k[x, y, z]`: arithmetic, intersection, quotients,
//! saturation, graded pieces and the numeric invariants α, ω and reg.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::algebra::{Field, RowSpace};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, eliminate, GroebnerBasis};
use crate::poly::{forms_dim, monomials_xyz, Monomial, MonomialOrder, Poly, Ring, X, Y, Z};

type BasisCache<F> = HashMap<MonomialOrder, Arc<GroebnerBasis<F>>>;

/// A homogeneous ideal given by nonzero homogeneous generators. The unit
/// ideal is a flag, never a constant generator.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    ring: Ring<F>,
    gens: Vec<Poly<F>>,
    unit: bool,
    bases: Arc<Mutex<BasisCache<F>>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Ring<F>, gens: Vec<Poly<F>>) -> Result<Self> {
        if ring.aux() != 0 {
            return Err(Error::RingMismatch("ideals live in k[x, y, z]".into()));
        }
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch("generator in a different ring".into()));
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
            if g.degree() == Some(0) {
                return Err(Error::UnitGenerator);
            }
            kept.push(g);
        }
        Ok(Self::from_parts(ring, kept, false))
    }

    /// Parses each generator with [`Poly::parse`].
    pub fn parse(ring: &Ring<F>, gens: &[&str]) -> Result<Self> {
        let polys = gens.iter().map(|s| Poly::parse(s, ring)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, polys)
    }

    pub fn unit(ring: &Ring<F>) -> Self {
        Self::from_parts(ring, Vec::new(), true)
    }

    pub fn zero(ring: &Ring<F>) -> Self {
        Self::from_parts(ring, Vec::new(), false)
    }

    /// The irrelevant ideal ⟨x, y, z⟩.
    pub fn irrelevant(ring: &Ring<F>) -> Self {
        let vars = [X, Y, Z]
            .iter()
            .map(|&s| Poly::monomial(ring, Monomial::var(s), ring.field().one()))
            .collect();
        Self::from_parts(ring, vars, false)
    }

    fn from_parts(ring: &Ring<F>, gens: Vec<Poly<F>>, unit: bool) -> Self {
        Ideal {
            ring: ring.clone(),
            gens,
            unit,
            bases: Arc::default(),
        }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn gens(&self) -> &[Poly<F>] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    pub fn is_zero(&self) -> bool {
        !self.unit && self.gens.is_empty()
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.iter().filter_map(|g| g.degree()).max()
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch("ideals over different rings".into()));
        }
        Ok(())
    }

    /// Gröbner basis for `order`, valid at least through degree `truncation`
    /// (`None` for a complete basis). Bases are cached per order.
    pub fn basis(&self, order: MonomialOrder, truncation: Option<u32>) -> Result<Arc<GroebnerBasis<F>>> {
        let covers = |have: Option<u32>| match (have, truncation) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(h), Some(w)) => h >= w,
        };
        if let Some(gb) = self.bases.lock().expect("cache lock").get(&order) {
            if covers(gb.truncation()) {
                return Ok(gb.clone());
            }
        }
        let gb = Arc::new(buchberger(&self.ring, &self.gens, order, truncation)?);
        let mut cache = self.bases.lock().expect("cache lock");
        let replace = match cache.get(&order) {
            None => true,
            Some(old) => match (old.truncation(), gb.truncation()) {
                (None, _) => false,
                (_, None) => true,
                (Some(a), Some(b)) => b > a,
            },
        };
        if replace {
            cache.insert(order, gb.clone());
        }
        Ok(gb)
    }

    fn grevlex(&self, degree: u32) -> Result<Arc<GroebnerBasis<F>>> {
        self.basis(MonomialOrder::GrevLex, Some(degree))
    }

    /// Membership of a homogeneous form.
    pub fn contains(&self, f: &Poly<F>) -> Result<bool> {
        if f.is_zero() || self.unit {
            return Ok(true);
        }
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch("form in a different ring".into()));
        }
        let d = f.degree().expect("nonzero");
        self.grevlex(d)?.contains(f)
    }

    /// True when every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Self) -> Result<bool> {
        self.check_ring(other)?;
        if other.unit {
            return Ok(self.unit);
        }
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.unit || other.unit {
            return Ok(Self::unit(&self.ring));
        }
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_parts(&self.ring, gens, false))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.unit {
            return Ok(other.clone());
        }
        if other.unit {
            return Ok(self.clone());
        }
        let gens = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a * b)).collect();
        Ok(Self::from_parts(&self.ring, gens, false))
    }

    /// Ordinary power with generators the `e`-fold products (multisets) of
    /// the generators of `self`.
    pub fn power(&self, e: u32) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidArgument("power exponent must be at least 1".into()));
        }
        if self.unit {
            return Ok(self.clone());
        }
        Ok(Self::from_parts(&self.ring, power_products(&self.gens, e), false))
    }

    /// `self ∩ other` through the auxiliary-variable construction
    /// `t*I + (1 - t)*J` followed by elimination of `t`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.unit {
            return Ok(other.clone());
        }
        if other.unit {
            return Ok(self.clone());
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let aux = Ring::with_aux(self.field().clone(), 1)?;
        let t = Poly::var(&aux, 't')?;
        let one_minus_t = &Poly::one(&aux) - &t;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(&t * &g.embed(&aux)?);
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &g.embed(&aux)?);
        }
        let out = eliminate(&aux, &gens, 1)?
            .into_iter()
            .map(|p| p.contract(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(&self.ring, out, false))
    }

    /// `self : ⟨v⟩` for a nonzero form `v`.
    pub fn quotient(&self, v: &Poly<F>) -> Result<Self> {
        if self.unit {
            return Ok(self.clone());
        }
        let principal = Self::new(&self.ring, vec![v.clone()])?;
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(meet.gens.len());
        for g in &meet.gens {
            let q = g
                .div_exact(v)
                .ok_or_else(|| Error::Internal("intersection with ⟨v⟩ not divisible by v".into()))?;
            if q.degree() == Some(0) {
                return Ok(Self::unit(&self.ring));
            }
            gens.push(q);
        }
        Ok(Self::from_parts(&self.ring, gens, false))
    }

    /// `self : M^∞` for the irrelevant ideal `M`, iterating `I ↦ I : M` until
    /// the ideal stops growing.
    pub fn saturate_irrelevant(&self) -> Result<Self> {
        let mut cur = self.clone();
        loop {
            if cur.unit || cur.is_zero() {
                return Ok(cur);
            }
            let mut next: Option<Self> = None;
            for slot in [X, Y, Z] {
                let v = Poly::monomial(&self.ring, Monomial::var(slot), self.field().one());
                let q = cur.quotient(&v)?;
                next = Some(match next {
                    None => q,
                    Some(acc) => acc.intersect(&q)?,
                });
            }
            let next = next.expect("three quotients");
            if cur.contains_ideal(&next)? {
                return Ok(cur);
            }
            cur = next.minimalize()?;
        }
    }

    /// Drops generators lying in the ideal of the earlier (lower-degree) ones.
    pub fn minimalize(&self) -> Result<Self> {
        if self.unit {
            return Ok(self.clone());
        }
        let mut gens = self.gens.clone();
        gens.sort_by_key(|g| g.degree());
        let mut kept: Vec<Poly<F>> = Vec::new();
        for g in gens {
            let d = g.degree().expect("nonzero");
            let gb = buchberger(&self.ring, &kept, MonomialOrder::GrevLex, Some(d))?;
            if !gb.contains(&g)? {
                kept.push(g);
            }
        }
        Ok(Self::from_parts(&self.ring, kept, false))
    }

    /// `dim I_t`, from standard monomials of a truncated basis.
    pub fn graded_dim(&self, t: u32) -> Result<usize> {
        if self.unit {
            return Ok(forms_dim(t));
        }
        if self.is_zero() {
            return Ok(0);
        }
        let lms = self.grevlex(t)?.leading_monomials();
        let standard = monomials_xyz(t)
            .into_iter()
            .filter(|m| !lms.iter().any(|l| l.divides(m)))
            .count();
        Ok(forms_dim(t) - standard)
    }

    /// `dim (R/I)_t`.
    pub fn hilbert_function(&self, t: u32) -> Result<usize> {
        Ok(forms_dim(t) - self.graded_dim(t)?)
    }

    /// Basis of `I_t`: `μ - NF(μ)` for each nonstandard monomial `μ`.
    pub fn graded_basis(&self, t: u32) -> Result<Vec<Poly<F>>> {
        if self.unit {
            let one = self.field().one();
            return Ok(monomials_xyz(t)
                .into_iter()
                .map(|m| Poly::monomial(&self.ring, m, one.clone()))
                .collect());
        }
        if self.is_zero() {
            return Ok(Vec::new());
        }
        let gb = self.grevlex(t)?;
        let lms = gb.leading_monomials();
        let mut out = Vec::new();
        for m in monomials_xyz(t) {
            if lms.iter().any(|l| l.divides(&m)) {
                let mu = Poly::monomial(&self.ring, m, self.field().one());
                out.push(&mu - &gb.normal_form(&mu)?);
            }
        }
        Ok(out)
    }

    /// Span of `R_{t - deg g} * g` over the generators, by linear algebra
    /// only (no Gröbner basis).
    pub fn graded_span(&self, t: u32) -> Result<RowSpace<F>> {
        let mut space = RowSpace::new(self.field(), forms_dim(t));
        if self.unit {
            for m in monomials_xyz(t) {
                let p = Poly::monomial(&self.ring, m, self.field().one());
                space.insert(p.coefficients(t)?);
            }
            return Ok(space);
        }
        for g in &self.gens {
            let d = g.degree().expect("nonzero");
            if d > t {
                continue;
            }
            for m in monomials_xyz(t - d) {
                if space.is_full() {
                    return Ok(space);
                }
                space.insert(g.mul_monomial(&m).coefficients(t)?);
            }
        }
        Ok(space)
    }

    /// Least degree of a nonzero form in the ideal.
    pub fn alpha(&self) -> Result<u32> {
        if self.unit {
            return Ok(0);
        }
        self.gens.iter().filter_map(|g| g.degree()).min().ok_or(Error::ZeroIdeal("alpha"))
    }

    /// Number of minimal generators in degree `t`:
    /// `dim I_t - dim (R_1 * I_{t-1})`.
    pub fn minimal_generator_count(&self, t: u32) -> Result<usize> {
        if self.unit {
            return Ok(usize::from(t == 0));
        }
        let dim_t = self.graded_dim(t)?;
        if t == 0 {
            return Ok(dim_t);
        }
        let lower = self.graded_basis(t - 1)?;
        let mut space = RowSpace::new(self.field(), forms_dim(t));
        for g in &lower {
            for s in [X, Y, Z] {
                space.insert(g.mul_monomial(&Monomial::var(s)).coefficients(t)?);
            }
        }
        Ok(dim_t - space.rank())
    }

    /// Degrees of a minimal generating set, with multiplicity, searching
    /// through `bound` (defaults to the largest given generator degree).
    pub fn minimal_generator_degrees(&self, bound: Option<u32>) -> Result<Vec<u32>> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal("minimal generators"));
        }
        let bound = bound.or(self.max_generator_degree()).unwrap_or(0);
        let mut out = Vec::new();
        for t in self.alpha()?..=bound {
            out.extend(std::iter::repeat_n(t, self.minimal_generator_count(t)?));
        }
        Ok(out)
    }

    /// Largest degree of a minimal homogeneous generator.
    pub fn omega(&self) -> Result<u32> {
        self.minimal_generator_degrees(None)?
            .last()
            .copied()
            .ok_or(Error::ZeroIdeal("omega"))
    }

    /// Least `t > 0` with `dim (R/I)_t = dim (R/I)_{t-1}`, for ideals
    /// defining a nonempty zero-dimensional subscheme of the plane.
    pub fn reg_points(&self) -> Result<u32> {
        if self.unit || self.is_zero() {
            return Err(Error::NotZeroDimensional("unit or zero ideal".into()));
        }
        let gb = self.basis(MonomialOrder::GrevLex, None)?;
        let lms = gb.leading_monomials();
        let pure_in = |slots: &[usize]| {
            lms.iter().any(|m| {
                (X..=Z).all(|s| slots.contains(&s) || m.exps()[s] == 0)
            })
        };
        for pair in [[X, Y], [X, Z], [Y, Z]] {
            if !pure_in(&pair) {
                return Err(Error::NotZeroDimensional("Hilbert polynomial has positive degree".into()));
            }
        }
        if [X, Y, Z].iter().all(|s| pure_in(&[*s])) {
            return Err(Error::NotZeroDimensional("empty scheme".into()));
        }
        let cap = 3 * lms.iter().map(|m| m.degree()).max().unwrap_or(0) + 3;
        let mut prev = self.hilbert_function(0)?;
        for t in 1..=cap {
            let h = self.hilbert_function(t)?;
            if h == prev {
                return Ok(t);
            }
            prev = h;
        }
        Err(Error::NotZeroDimensional(format!("Hilbert function not stable by degree {cap}")))
    }

    /// The ideal of all forms of degree at least `d`: `I ∩ M^d`.
    pub fn truncate(&self, d: u32) -> Result<Self> {
        if self.unit {
            let gens = monomials_xyz(d)
                .into_iter()
                .map(|m| Poly::monomial(&self.ring, m, self.field().one()))
                .collect();
            return if d == 0 { Ok(self.clone()) } else { Ok(Self::from_parts(&self.ring, gens, false)) };
        }
        let mut gens = self.graded_basis(d)?;
        gens.extend(self.gens.iter().filter(|g| g.degree() > Some(d)).cloned());
        let low = self.gens.iter().any(|g| g.degree() < Some(d));
        if !low {
            return Ok(self.clone());
        }
        Ok(Self::from_parts(&self.ring, gens, false))
    }

    /// Compares `I_t` and `J_t` for every `t ≤ bound`; returns the first
    /// degree where they differ.
    pub fn first_graded_difference(&self, other: &Self, bound: u32) -> Result<Option<u32>> {
        self.check_ring(other)?;
        for t in 0..=bound {
            if self.graded_dim(t)? != other.graded_dim(t)? {
                return Ok(Some(t));
            }
            for g in other.graded_basis(t)? {
                if !self.contains(&g)? {
                    return Ok(Some(t));
                }
            }
        }
        Ok(None)
    }
}

/// All `e`-fold products of `gens` taken as multisets.
pub fn power_products<F: Field>(gens: &[Poly<F>], e: u32) -> Vec<Poly<F>> {
    fn rec<F: Field>(gens: &[Poly<F>], start: usize, left: u32, acc: &Poly<F>, out: &mut Vec<Poly<F>>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for i in start..gens.len() {
            rec(gens, i, left - 1, &(acc * &gens[i]), out);
        }
    }
    let mut out = Vec::new();
    if let Some(g) = gens.first() {
        rec(gens, 0, e, &Poly::one(g.ring()), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PrimeField, RationalField};

    fn q() -> Ring<RationalField> {
        Ring::plane(RationalField)
    }

    fn ideal(gens: &[&str]) -> Ideal<RationalField> {
        Ideal::parse(&q(), gens).unwrap()
    }

    #[test]
    fn powers_and_products() {
        let i = ideal(&["y", "z"]).power(2).unwrap();
        assert!(i.equals(&ideal(&["y^2", "y*z", "z^2"])).unwrap());
        assert_eq!(i.gens().len(), 3);
        assert!(ideal(&["x"]).power(0).is_err());
        assert_eq!(Ideal::parse(&q(), &["x", "1"]).unwrap_err(), Error::UnitGenerator);
        assert_eq!(Ideal::parse(&q(), &["x + y^2"]).unwrap_err(), Error::NotHomogeneous);
        let u = Ideal::unit(&q());
        assert!(u.product(&ideal(&["x"])).unwrap().equals(&ideal(&["x"])).unwrap());
        assert!(u.sum(&ideal(&["x"])).unwrap().is_unit());
    }

    #[test]
    fn intersection_of_two_points() {
        let p = ideal(&["y", "z"]);
        let q_ = ideal(&["x", "z"]);
        let meet = p.intersect(&q_).unwrap();
        assert!(meet.equals(&ideal(&["z", "x*y"])).unwrap());
        assert!(p.intersect(&p).unwrap().equals(&p).unwrap());
        let xy = ideal(&["x"]).intersect(&ideal(&["y"])).unwrap();
        assert!(xy.equals(&ideal(&["x*y"])).unwrap());
    }

    #[test]
    fn saturation() {
        let i = ideal(&["x^2", "x*y", "x*z"]);
        assert!(i.saturate_irrelevant().unwrap().equals(&ideal(&["x"])).unwrap());
        let m2 = Ideal::irrelevant(&q()).power(2).unwrap();
        assert!(m2.saturate_irrelevant().unwrap().is_unit());
        let pts = ideal(&["z", "x*y"]);
        assert!(pts.saturate_irrelevant().unwrap().equals(&pts).unwrap());
    }

    #[test]
    fn graded_dimensions_and_alpha() {
        let x = ideal(&["x"]);
        assert_eq!(x.graded_dim(2).unwrap(), 3);
        assert_eq!(x.alpha().unwrap(), 1);
        assert_eq!(x.graded_basis(2).unwrap().len(), 3);
        assert_eq!(x.graded_span(2).unwrap().rank(), 3);
        assert_eq!(Ideal::zero(&q()).alpha(), Err(Error::ZeroIdeal("alpha")));
    }

    #[test]
    fn omega_of_monomial_ideal() {
        assert_eq!(ideal(&["x", "y^2"]).omega().unwrap(), 2);
        // redundant generator of degree 3 does not count
        assert_eq!(ideal(&["x", "y^2", "x*z^2"]).omega().unwrap(), 2);
    }

    #[test]
    fn regularity_of_simple_cases() {
        assert_eq!(ideal(&["y", "z"]).reg_points().unwrap(), 1);
        assert_eq!(ideal(&["z", "x*y"]).reg_points().unwrap(), 2);
        assert!(matches!(ideal(&["x"]).reg_points(), Err(Error::NotZeroDimensional(_))));
        assert!(matches!(
            Ideal::irrelevant(&q()).reg_points(),
            Err(Error::NotZeroDimensional(_))
        ));
    }

    #[test]
    fn truncation() {
        let x = ideal(&["x"]);
        assert!(x.truncate(0).unwrap().equals(&x).unwrap());
        assert!(x.truncate(2).unwrap().equals(&ideal(&["x^2", "x*y", "x*z"])).unwrap());
        let t = ideal(&["x", "y^3"]).truncate(2).unwrap();
        for d in 0..6 {
            let expect = if d < 2 { 0 } else { ideal(&["x", "y^3"]).graded_dim(d).unwrap() };
            assert_eq!(t.graded_dim(d).unwrap(), expect);
        }
    }

    #[test]
    fn quotient_by_variable() {
        let i = ideal(&["x*y", "x*z"]);
        assert!(i.quotient(&Poly::parse("x", &q()).unwrap()).unwrap().equals(&ideal(&["y", "z"])).unwrap());
        let r = Ring::plane(PrimeField::default_prime());
        let j = Ideal::parse(&r, &["x", "y"]).unwrap();
        assert!(j.quotient(&Poly::parse("x", &r).unwrap()).unwrap().is_unit());
    }
}
