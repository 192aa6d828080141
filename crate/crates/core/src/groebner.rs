//! Buchberger's algorithm with optional degree truncation, normal forms,
//! ideal membership and elimination.
//!
//! Degrees here are taken in `x, y, z` only: auxiliary variables have weight
//! zero, so `t*f + (1 - t)*g` stays homogeneous when `f` and `g` are, and
//! truncation stays sound for elimination problems too.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, OrderKey, Poly, Ring};

type Term<F> = (OrderKey, Monomial, <F as Field>::Elem);

/// Degree of a polynomial in the x, y, z grading, if it is homogeneous there.
pub fn xyz_homogeneous_degree<F: Field>(f: &Poly<F>) -> Option<u32> {
    let mut it = f.terms().iter().map(|(m, _)| m.xyz_degree());
    let d = it.next()?;
    it.all(|e| e == d).then_some(d)
}

/// A Gröbner basis, possibly truncated at a degree bound.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: Ring<F>,
    order: MonomialOrder,
    truncation: Option<u32>,
    elems: Vec<Vec<Term<F>>>,
}

struct Engine<'a, F: Field> {
    ring: &'a Ring<F>,
    order: MonomialOrder,
    first_slot: usize,
    one_key: OrderKey,
}

impl<'a, F: Field> Engine<'a, F> {
    fn new(ring: &'a Ring<F>, order: MonomialOrder) -> Self {
        let first_slot = ring.first_slot();
        Engine {
            ring,
            order,
            first_slot,
            one_key: order.key(&Monomial::ONE, first_slot),
        }
    }

    fn key(&self, m: &Monomial) -> OrderKey {
        self.order.key(m, self.first_slot)
    }

    fn internal(&self, f: &Poly<F>) -> Vec<Term<F>> {
        let mut v: Vec<Term<F>> = f.terms().iter().map(|(m, c)| (self.key(m), *m, c.clone())).collect();
        v.sort_by(|a, b| b.0.cmp(&a.0));
        v
    }

    fn external(&self, f: &[Term<F>]) -> Poly<F> {
        Poly::from_terms(self.ring, f.iter().map(|(_, m, c)| (*m, c.clone())).collect::<Vec<_>>())
    }

    /// Keys are affine in the exponent vector, so shifting by `q` adds a
    /// constant offset.
    fn shift_delta(&self, q: &Monomial) -> OrderKey {
        self.key(q).wrapping_sub(self.one_key)
    }

    /// `a - c * q * b`, both inputs sorted by descending key.
    fn sub_mul(&self, a: &[Term<F>], c: &F::Elem, q: &Monomial, b: &[Term<F>]) -> Vec<Term<F>> {
        let f = self.ring.field();
        let delta = self.shift_delta(q);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let kb = (j < b.len()).then(|| b[j].0.wrapping_add(delta));
            match (i < a.len(), kb) {
                (true, Some(kb)) if a[i].0 == kb => {
                    let mut v = a[i].2.clone();
                    f.sub_mul_assign(&mut v, c, &b[j].2);
                    if !f.is_zero(&v) {
                        out.push((kb, a[i].1, v));
                    }
                    i += 1;
                    j += 1;
                }
                (true, Some(kb)) if a[i].0 > kb => {
                    out.push(a[i].clone());
                    i += 1;
                }
                (_, Some(kb)) => {
                    out.push((kb, b[j].1.mul(q), f.neg(&f.mul(c, &b[j].2))));
                    j += 1;
                }
                (true, None) => {
                    out.push(a[i].clone());
                    i += 1;
                }
                (false, None) => unreachable!(),
            }
        }
        out
    }

    fn find_reducer(&self, m: &Monomial, basis: &[Vec<Term<F>>]) -> Option<usize> {
        basis.iter().position(|g| g[0].1.divides(m))
    }

    /// Reduces until the leading term is irreducible (basis elements monic).
    fn top_reduce(&self, mut f: Vec<Term<F>>, basis: &[Vec<Term<F>>]) -> Vec<Term<F>> {
        while let Some((_, m, c)) = f.first() {
            let Some(k) = self.find_reducer(m, basis) else { break };
            let q = m.div(&basis[k][0].1).expect("divisor");
            let c = c.clone();
            f = self.sub_mul(&f, &c, &q, &basis[k]);
        }
        f
    }

    /// Full reduction: no term of the result is divisible by a leading monomial.
    fn full_reduce(&self, mut f: Vec<Term<F>>, basis: &[Vec<Term<F>>]) -> Vec<Term<F>> {
        let mut i = 0;
        while i < f.len() {
            let m = f[i].1;
            match self.find_reducer(&m, basis) {
                Some(k) => {
                    let q = m.div(&basis[k][0].1).expect("divisor");
                    let c = f[i].2.clone();
                    let tail = self.sub_mul(&f[i..], &c, &q, &basis[k]);
                    f.truncate(i);
                    f.extend(tail);
                }
                None => i += 1,
            }
        }
        f
    }

    fn monic(&self, f: &mut [Term<F>]) {
        let field = self.ring.field();
        if let Some((_, _, c)) = f.first() {
            if !field.is_one(c) {
                let inv = field.inv(c);
                for t in f.iter_mut() {
                    t.2 = field.mul(&t.2, &inv);
                }
            }
        }
    }

    fn s_poly(&self, a: &[Term<F>], b: &[Term<F>]) -> Vec<Term<F>> {
        let l = a[0].1.lcm(&b[0].1);
        let qa = l.div(&a[0].1).expect("lcm");
        let qb = l.div(&b[0].1).expect("lcm");
        let field = self.ring.field();
        let shifted_a = self.sub_mul(&[], &field.neg(&field.one()), &qa, a);
        self.sub_mul(&shifted_a, &field.one(), &qb, b)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Job {
    Generator(usize),
    Pair(usize, usize),
}

/// Computes a Gröbner basis of `gens` under `order`. With `truncation = Some(D)`
/// every input must be homogeneous in x, y, z and only the part of the
/// computation in degree at most D is carried out; the result then decides
/// membership for elements of degree at most D.
pub fn buchberger<F: Field>(
    ring: &Ring<F>,
    gens: &[Poly<F>],
    order: MonomialOrder,
    truncation: Option<u32>,
) -> Result<GroebnerBasis<F>> {
    for g in gens {
        if g.ring() != ring {
            return Err(Error::RingMismatch("generator in a different ring".into()));
        }
        if truncation.is_some() && !g.is_zero() && xyz_homogeneous_degree(g).is_none() {
            return Err(Error::NotHomogeneous);
        }
    }
    let eng = Engine::new(ring, order);
    let inputs: Vec<Vec<Term<F>>> = gens.iter().filter(|g| !g.is_zero()).map(|g| eng.internal(g)).collect();
    let within = |d: u32| truncation.is_none_or(|bound| d <= bound);

    let mut queue: BinaryHeap<Reverse<(u32, Job)>> = BinaryHeap::new();
    for (i, g) in inputs.iter().enumerate() {
        let d = g.iter().map(|t| t.1.xyz_degree()).max().unwrap_or(0);
        if within(d) {
            queue.push(Reverse((d, Job::Generator(i))));
        }
    }

    let mut basis: Vec<Vec<Term<F>>> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    while let Some(Reverse((_, job))) = queue.pop() {
        let candidate = match job {
            Job::Generator(i) => inputs[i].clone(),
            Job::Pair(i, j) => {
                pending.remove(&(i, j));
                let l = basis[i][0].1.lcm(&basis[j][0].1);
                let chain = (0..basis.len()).any(|k| {
                    k != i
                        && k != j
                        && basis[k][0].1.divides(&l)
                        && !pending.contains(&(i.min(k), i.max(k)))
                        && !pending.contains(&(j.min(k), j.max(k)))
                });
                if chain {
                    continue;
                }
                eng.s_poly(&basis[i], &basis[j])
            }
        };
        let mut h = eng.top_reduce(candidate, &basis);
        if h.is_empty() {
            continue;
        }
        eng.monic(&mut h);
        let new = basis.len();
        for (i, g) in basis.iter().enumerate() {
            if g[0].1.is_coprime(&h[0].1) {
                continue;
            }
            let d = g[0].1.lcm(&h[0].1).xyz_degree();
            if within(d) {
                pending.insert((i, new));
                queue.push(Reverse((d, Job::Pair(i, new))));
            }
        }
        basis.push(h);
    }

    // minimalize, then interreduce
    let mut keep: Vec<Vec<Term<F>>> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != i && h[0].1.divides(&g[0].1) && (h[0].1 != g[0].1 || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let (lead, tail) = keep[i].split_at(1);
        let others: Vec<Vec<Term<F>>> = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let mut g = lead.to_vec();
        g.extend(eng.full_reduce(tail.to_vec(), &others));
        reduced.push(g);
    }
    reduced.sort_by(|a, b| a[0].0.cmp(&b[0].0));
    Ok(GroebnerBasis {
        ring: ring.clone(),
        order,
        truncation,
        elems: reduced,
    })
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn truncation(&self) -> Option<u32> {
        self.truncation
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Basis elements, sorted by increasing leading monomial.
    pub fn polys(&self) -> Vec<Poly<F>> {
        let eng = Engine::new(&self.ring, self.order);
        self.elems.iter().map(|g| eng.external(g)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|g| g[0].1).collect()
    }

    /// True when the basis contains a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.elems.iter().any(|g| g[0].1.is_one())
    }

    /// Remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Poly<F>) -> Result<Poly<F>> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch("normal form in a different ring".into()));
        }
        if let (Some(bound), Some(d)) = (self.truncation, f.terms().iter().map(|(m, _)| m.xyz_degree()).max()) {
            if d > bound {
                return Err(Error::TruncationExceeded { degree: d, bound });
            }
        }
        let eng = Engine::new(&self.ring, self.order);
        Ok(eng.external(&eng.full_reduce(eng.internal(f), &self.elems)))
    }

    pub fn contains(&self, f: &Poly<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks that every S-polynomial within the truncation reduces to zero.
    pub fn verify(&self) -> bool {
        let eng = Engine::new(&self.ring, self.order);
        for i in 0..self.elems.len() {
            for j in i + 1..self.elems.len() {
                let (a, b) = (&self.elems[i], &self.elems[j]);
                let l = a[0].1.lcm(&b[0].1);
                if self.truncation.is_some_and(|d| l.xyz_degree() > d) {
                    continue;
                }
                if !eng.full_reduce(eng.s_poly(a, b), &self.elems).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// Decides `f ∈ ⟨gens⟩`, truncating at `deg f` when everything is homogeneous.
pub fn ideal_member<F: Field>(f: &Poly<F>, gens: &[Poly<F>]) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let homogeneous = xyz_homogeneous_degree(f).is_some()
        && gens.iter().all(|g| g.is_zero() || xyz_homogeneous_degree(g).is_some());
    let bound = if homogeneous { xyz_homogeneous_degree(f) } else { None };
    let gb = buchberger(f.ring(), gens, MonomialOrder::GrevLex, bound)?;
    gb.contains(f)
}

/// Generators of `⟨gens⟩` intersected with the subring free of the first `k`
/// ring variables. The results stay in `ring`.
pub fn eliminate<F: Field>(ring: &Ring<F>, gens: &[Poly<F>], k: usize) -> Result<Vec<Poly<F>>> {
    if k > ring.nvars() {
        return Err(Error::InvalidArgument(format!("cannot eliminate {k} of {} variables", ring.nvars())));
    }
    let gb = buchberger(ring, gens, MonomialOrder::Elimination(k), None)?;
    let first = ring.first_slot();
    Ok(gb
        .polys()
        .into_iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.free_of_slots(first..first + k)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PrimeField, RationalField};

    fn q() -> Ring<RationalField> {
        Ring::plane(RationalField)
    }

    fn polys<F: Field>(ring: &Ring<F>, s: &[&str]) -> Vec<Poly<F>> {
        s.iter().map(|t| Poly::parse(t, ring).unwrap()).collect()
    }

    #[test]
    fn variables_are_a_basis() {
        let gb = buchberger(&q(), &polys(&q(), &["x", "y"]), MonomialOrder::GrevLex, None).unwrap();
        let mut got: Vec<String> = gb.polys().iter().map(|p| p.to_string()).collect();
        got.sort();
        assert_eq!(got, ["x", "y"]);
        assert!(gb.verify());
    }

    #[test]
    fn conic_and_line() {
        let gb = buchberger(&q(), &polys(&q(), &["y^2 - x*z", "x"]), MonomialOrder::GrevLex, None).unwrap();
        let got: Vec<String> = gb.polys().iter().map(|p| p.to_string()).collect();
        assert!(got.contains(&"x".to_string()));
        assert!(got.contains(&"y^2".to_string()));
        assert!(gb.verify());
    }

    #[test]
    fn normal_forms() {
        let gb = buchberger(&q(), &polys(&q(), &["x"]), MonomialOrder::GrevLex, None).unwrap();
        assert!(gb.normal_form(&Poly::parse("x^2 + x*y", &q()).unwrap()).unwrap().is_zero());
        let y2 = Poly::parse("y^2", &q()).unwrap();
        assert_eq!(gb.normal_form(&y2).unwrap(), y2);
    }

    #[test]
    fn truncation_is_enforced() {
        let gb = buchberger(&q(), &polys(&q(), &["x^2", "y^2"]), MonomialOrder::GrevLex, Some(2)).unwrap();
        let f = Poly::parse("x^2*y", &q()).unwrap();
        assert_eq!(
            gb.normal_form(&f),
            Err(Error::TruncationExceeded { degree: 3, bound: 2 })
        );
        let inhom = polys(&q(), &["x^2 + y"]);
        assert_eq!(
            buchberger(&q(), &inhom, MonomialOrder::GrevLex, Some(3)).unwrap_err(),
            Error::NotHomogeneous
        );
    }

    #[test]
    fn membership() {
        let g = polys(&q(), &["x", "y"]);
        assert!(ideal_member(&Poly::parse("x^2 + y^2", &q()).unwrap(), &g).unwrap());
        assert!(!ideal_member(&Poly::parse("z", &q()).unwrap(), &g).unwrap());
        assert!(ideal_member(&Poly::zero(&q()), &[]).unwrap());
    }

    #[test]
    fn elimination_of_t() {
        let r = Ring::with_aux(RationalField, 1).unwrap();
        let out = eliminate(&r, &polys(&r, &["t*x - 1", "t*y - 1"]), 1).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].to_string(), "x - y");
        assert!(eliminate(&r, &polys(&r, &["t"]), 1).unwrap().is_empty());
    }

    #[test]
    fn empty_input() {
        let gb = buchberger(&q(), &[], MonomialOrder::GrevLex, None).unwrap();
        assert!(gb.is_empty());
        assert!(gb.normal_form(&Poly::parse("x", &q()).unwrap()).unwrap() == Poly::parse("x", &q()).unwrap());
    }

    #[test]
    fn bases_over_prime_field_in_two_orders() {
        let r = Ring::plane(PrimeField::default_prime());
        let g = polys(&r, &["x*z - y^2", "x^3 - y*z^2", "x^2*y - z^3"]);
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            let gb = buchberger(&r, &g, order, None).unwrap();
            assert!(gb.verify());
            for f in &g {
                assert!(gb.contains(f).unwrap());
            }
        }
    }
}
