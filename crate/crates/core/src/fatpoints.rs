//! Point configurations in the plane, fat point schemes `Z = Σ mᵢpᵢ`, their
//! graded pieces (via Hasse-derivative vanishing conditions), fat point
//! ideals and symbolic powers.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{parse_rational, Field, Matrix, RowSpace};
use crate::divisors::{h0_general, DivClass};
use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::poly::{forms_dim, monomials_xyz, Monomial, Poly, Ring, X, Y, Z};

/// Resampling attempts for general configurations.
pub const GENERIC_ATTEMPTS: usize = 32;

/// Field-independent description of a point configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PointSpec {
    /// Points `(1 : t : t²)` on the conic `y² - xz`.
    OnConic { params: Vec<i64> },
    /// Seeded pseudorandom points passing the genericity battery, whose
    /// Hilbert-function check covers multiplicities up to `m_max`.
    Generic { n: usize, seed: u64, m_max: u32 },
    /// Projective coordinates given as integers or fractions.
    Explicit { points: Vec<[String; 3]> },
}

impl PointSpec {
    /// `n` conic points with parameters `0, 1, …, n-1`.
    pub fn conic(n: usize) -> Self {
        PointSpec::OnConic {
            params: (0..n as i64).collect(),
        }
    }

    pub fn generic(n: usize, seed: u64) -> Self {
        PointSpec::Generic { n, seed, m_max: 4 }
    }

    pub fn n(&self) -> usize {
        match self {
            PointSpec::OnConic { params } => params.len(),
            PointSpec::Generic { n, .. } => *n,
            PointSpec::Explicit { points } => points.len(),
        }
    }
}

/// A resolved, validated configuration over a concrete field.
#[derive(Clone, Debug)]
pub struct PointConfig<F: Field> {
    spec: PointSpec,
    ring: Ring<F>,
    points: Vec<[F::Elem; 3]>,
    attempts: usize,
}

fn det2<F: Field>(f: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem, d: &F::Elem) -> F::Elem {
    f.sub(&f.mul(a, d), &f.mul(b, c))
}

fn same_point<F: Field>(f: &F, p: &[F::Elem; 3], q: &[F::Elem; 3]) -> bool {
    f.is_zero(&det2(f, &p[0], &p[1], &q[0], &q[1]))
        && f.is_zero(&det2(f, &p[0], &p[2], &q[0], &q[2]))
        && f.is_zero(&det2(f, &p[1], &p[2], &q[1], &q[2]))
}

fn check_distinct<F: Field>(f: &F, pts: &[[F::Elem; 3]]) -> Result<()> {
    for (i, p) in pts.iter().enumerate() {
        if p.iter().all(|c| f.is_zero(c)) {
            return Err(Error::InvalidArgument(format!("point {i} has all coordinates zero")));
        }
        for (j, q) in pts.iter().enumerate().take(i) {
            if same_point(f, p, q) {
                return Err(Error::DuplicatePoints(j, i));
            }
        }
    }
    Ok(())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Rank of the evaluation matrix of degree-`t` monomials at `pts`.
fn evaluation_rank<F: Field>(f: &F, pts: &[&[F::Elem; 3]], t: u32) -> usize {
    let monos = monomials_xyz(t);
    let rows = pts
        .iter()
        .map(|p| monos.iter().map(|m| eval_monomial(f, m, p)).collect())
        .collect();
    Matrix::from_rows(f, monos.len(), rows).rank()
}

fn eval_monomial<F: Field>(f: &F, m: &Monomial, p: &[F::Elem; 3]) -> F::Elem {
    let e = m.exps();
    f.mul(
        &f.pow(&p[0], e[X] as u64),
        &f.mul(&f.pow(&p[1], e[Y] as u64), &f.pow(&p[2], e[Z] as u64)),
    )
}

impl<F: Field> PointConfig<F> {
    /// Resolves `spec` over `field`, validating it; general configurations
    /// are resampled until the genericity battery passes.
    pub fn new(spec: PointSpec, field: F) -> Result<Self> {
        let ring = Ring::plane(field.clone());
        let f = &field;
        match &spec {
            PointSpec::OnConic { params } => {
                if params.is_empty() {
                    return Err(Error::InvalidArgument("configuration needs at least one point".into()));
                }
                let points: Vec<_> = params
                    .iter()
                    .map(|&t| {
                        let t = f.from_i64(t);
                        [f.one(), t.clone(), f.mul(&t, &t)]
                    })
                    .collect();
                check_distinct(f, &points)?;
                Ok(PointConfig {
                    spec,
                    ring,
                    points,
                    attempts: 1,
                })
            }
            PointSpec::Explicit { points: text } => {
                if text.is_empty() {
                    return Err(Error::InvalidArgument("configuration needs at least one point".into()));
                }
                let mut points = Vec::with_capacity(text.len());
                for coords in text {
                    let mut p = [f.zero(), f.zero(), f.zero()];
                    for (slot, s) in p.iter_mut().zip(coords) {
                        let q = parse_rational(s)?;
                        *slot = f.from_ratio(q.numer(), q.denom())?;
                    }
                    points.push(p);
                }
                check_distinct(f, &points)?;
                Ok(PointConfig {
                    spec,
                    ring,
                    points,
                    attempts: 1,
                })
            }
            PointSpec::Generic { n, seed, m_max } => {
                if *n == 0 {
                    return Err(Error::InvalidArgument("configuration needs at least one point".into()));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut last = String::new();
                for attempt in 1..=GENERIC_ATTEMPTS {
                    let points: Vec<[F::Elem; 3]> =
                        (0..*n).map(|_| [f.sample(&mut rng), f.sample(&mut rng), f.sample(&mut rng)]).collect();
                    let cfg = PointConfig {
                        spec: spec.clone(),
                        ring: ring.clone(),
                        points,
                        attempts: attempt,
                    };
                    match cfg.genericity_battery(*m_max) {
                        Ok(()) => return Ok(cfg),
                        Err(reason) => last = reason,
                    }
                }
                Err(Error::GenericityExhausted {
                    attempts: GENERIC_ATTEMPTS,
                    reason: last,
                })
            }
        }
    }

    /// Distinctness, no three collinear, no six on a conic, and (for `n ≤ 9`)
    /// the expected Hilbert function of `I(mZ)` for `m ≤ m_max`.
    pub fn genericity_battery(&self, m_max: u32) -> std::result::Result<(), String> {
        let f = self.field();
        let n = self.points.len();
        check_distinct(f, &self.points).map_err(|e| e.to_string())?;
        for (k, t) in [(3, 1), (6, 2)] {
            for s in subsets(n, k) {
                let pts: Vec<&[F::Elem; 3]> = s.iter().map(|&i| &self.points[i]).collect();
                if evaluation_rank(f, &pts, t) < k {
                    return Err(format!("points {s:?} lie on a curve of degree {t}"));
                }
            }
        }
        if n > 9 {
            return Ok(());
        }
        let cfg = Arc::new(self.clone());
        for m in 1..=m_max {
            let z = FatPointScheme::uniform(cfg.clone(), m);
            let colength = z.colength() as i64;
            let mut t = 0u32;
            loop {
                let expect = h0_general(&DivClass::uniform(n, t as i64, m as i64)).map_err(|e| e.to_string())?;
                let got = z.graded_dim(t) as i64;
                if got != expect {
                    return Err(format!("dim I({m}Z)_{t} = {got}, expected {expect}"));
                }
                if expect == forms_dim(t) as i64 - colength && t > 0 {
                    break;
                }
                t += 1;
            }
        }
        Ok(())
    }

    pub fn spec(&self) -> &PointSpec {
        &self.spec
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn points(&self) -> &[[F::Elem; 3]] {
        &self.points
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// Number of samples drawn before the battery passed (1 for fixed kinds).
    pub fn attempts(&self) -> usize {
        self.attempts
    }

    pub fn is_conic(&self) -> bool {
        matches!(self.spec, PointSpec::OnConic { .. })
    }

    /// The conic `y² - xz` through a conic configuration.
    pub fn conic_form(&self) -> Option<Poly<F>> {
        self.is_conic()
            .then(|| Poly::parse("y^2 - x*z", &self.ring).expect("fixed conic"))
    }

    /// The ideal of the single point `i`: two independent linear forms.
    pub fn point_ideal(&self, i: usize) -> Ideal<F> {
        let f = self.field();
        let p = &self.points[i];
        let m = Matrix::from_rows(f, 3, vec![p.to_vec()]);
        let gens = m
            .kernel_basis()
            .into_iter()
            .map(|v| Poly::from_coefficients(&self.ring, 1, &v))
            .collect();
        Ideal::new(&self.ring, gens).expect("linear forms")
    }
}

/// How vanishing to order `m` at a point is imposed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConditionMode {
    /// Hasse derivatives in the two affine coordinates of a chart containing
    /// the point: exactly `C(m+1, 2)` conditions.
    Affine,
    /// All Hasse derivatives of order below `m` in x, y, z.
    Full,
}

/// `Z = Σ mᵢpᵢ` over a shared configuration.
#[derive(Clone, Debug)]
pub struct FatPointScheme<F: Field> {
    config: Arc<PointConfig<F>>,
    mults: Vec<u32>,
}

/// A basis of `I(Z)_t`.
#[derive(Clone, Debug)]
pub struct GradedPiece<F: Field> {
    pub degree: u32,
    pub basis: Vec<Poly<F>>,
}

impl<F: Field> GradedPiece<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }
}

impl<F: Field> FatPointScheme<F> {
    pub fn new(config: Arc<PointConfig<F>>, mults: Vec<u32>) -> Result<Self> {
        if mults.len() != config.n() {
            return Err(Error::InvalidArgument(format!(
                "{} multiplicities for {} points",
                mults.len(),
                config.n()
            )));
        }
        Ok(FatPointScheme { config, mults })
    }

    pub fn uniform(config: Arc<PointConfig<F>>, m: u32) -> Self {
        let mults = vec![m; config.n()];
        FatPointScheme { config, mults }
    }

    pub fn config(&self) -> &Arc<PointConfig<F>> {
        &self.config
    }

    pub fn ring(&self) -> &Ring<F> {
        self.config.ring()
    }

    pub fn mults(&self) -> &[u32] {
        &self.mults
    }

    pub fn is_uniform(&self) -> bool {
        self.mults.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_zero(&self) -> bool {
        self.mults.iter().all(|&m| m == 0)
    }

    /// `kZ`.
    pub fn scaled(&self, k: u32) -> Self {
        FatPointScheme {
            config: self.config.clone(),
            mults: self.mults.iter().map(|m| m * k).collect(),
        }
    }

    /// `Z + W` over the same configuration.
    pub fn plus(&self, other: &Self) -> Result<Self> {
        if !Arc::ptr_eq(&self.config, &other.config) {
            return Err(Error::InvalidArgument("schemes over different configurations".into()));
        }
        Ok(FatPointScheme {
            config: self.config.clone(),
            mults: self.mults.iter().zip(&other.mults).map(|(a, b)| a + b).collect(),
        })
    }

    /// Degree of the scheme: `Σ C(mᵢ+1, 2)`.
    pub fn colength(&self) -> usize {
        self.mults.iter().map(|&m| (m as usize) * (m as usize + 1) / 2).sum()
    }

    /// The class `tL - Σ mᵢEᵢ`.
    pub fn class_of(&self, t: u32) -> DivClass {
        DivClass::of_scheme(t as i64, &self.mults)
    }

    /// Vanishing conditions in degree `t`, one row per condition, columns
    /// indexed by `monomials_xyz(t)`.
    pub fn conditions(&self, t: u32, mode: ConditionMode) -> Vec<Vec<F::Elem>> {
        let f = self.config.field();
        let monos = monomials_xyz(t);
        let mut rows = Vec::new();
        for (p, &m) in self.config.points().iter().zip(&self.mults) {
            if m == 0 {
                continue;
            }
            let chart = p.iter().position(|c| !f.is_zero(c)).expect("nonzero point");
            let mut orders = Vec::new();
            for total in 0..m as u16 {
                for a in 0..=total {
                    for b in 0..=total - a {
                        let e = [a, b, total - a - b];
                        if mode == ConditionMode::Affine && e[chart] != 0 {
                            continue;
                        }
                        orders.push(e);
                    }
                }
            }
            for e in orders {
                let row = monos
                    .iter()
                    .map(|mono| {
                        let x = mono.exps();
                        let ex = [x[X], x[Y], x[Z]];
                        if ex.iter().zip(&e).any(|(a, b)| a < b) {
                            return f.zero();
                        }
                        let mut c = f.one();
                        for k in 0..3 {
                            if e[k] > 0 {
                                c = f.mul(&c, &f.binomial(ex[k] as u32, e[k] as u32));
                            }
                            c = f.mul(&c, &f.pow(&p[k], (ex[k] - e[k]) as u64));
                        }
                        c
                    })
                    .collect();
                rows.push(row);
            }
        }
        rows
    }

    /// `dim I(Z)_t`.
    pub fn graded_dim(&self, t: u32) -> usize {
        self.graded_dim_with(t, ConditionMode::Affine)
    }

    pub fn graded_dim_with(&self, t: u32, mode: ConditionMode) -> usize {
        let space = RowSpace::from_rows(self.config.field(), forms_dim(t), self.conditions(t, mode));
        forms_dim(t) - space.rank()
    }

    /// A basis of `I(Z)_t` as the kernel of the conditions matrix.
    pub fn graded_piece(&self, t: u32) -> GradedPiece<F> {
        self.graded_piece_with(t, ConditionMode::Affine)
    }

    pub fn graded_piece_with(&self, t: u32, mode: ConditionMode) -> GradedPiece<F> {
        let f = self.config.field();
        let m = Matrix::from_rows(f, forms_dim(t), self.conditions(t, mode));
        let basis = m
            .kernel_basis()
            .into_iter()
            .map(|v| Poly::from_coefficients(self.ring(), t, &v))
            .collect();
        GradedPiece { degree: t, basis }
    }

    /// True when the form vanishes to the required orders at every point.
    pub fn contains(&self, g: &Poly<F>) -> Result<bool> {
        if g.is_zero() {
            return Ok(true);
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let t = g.degree().expect("nonzero");
        let v = g.coefficients(t)?;
        let f = self.config.field();
        Ok(self.conditions(t, ConditionMode::Affine).iter().all(|row| {
            let s = row.iter().zip(&v).fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)));
            f.is_zero(&s)
        }))
    }

    /// `dim (R/I(Z))_t`.
    pub fn hilbert(&self, t: u32) -> usize {
        forms_dim(t) - self.graded_dim(t)
    }

    /// Least `t` with a nonzero form of degree `t` in `I(Z)`.
    pub fn alpha(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal("alpha"));
        }
        Ok((0..).find(|&t| self.graded_dim(t) > 0).expect("fat point ideals are nonzero"))
    }

    /// Least `t > 0` with `dim (R/I)_t = dim (R/I)_{t-1}`.
    pub fn reg(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal("regularity"));
        }
        let colength = self.colength();
        let bound = self.mults.iter().sum::<u32>() + 2;
        let mut prev = self.hilbert(0);
        for t in 1..=bound {
            let h = self.hilbert(t);
            if h == prev {
                if h != colength {
                    return Err(Error::NotZeroDimensional(format!(
                        "Hilbert function stalls at {h} below the degree {colength}"
                    )));
                }
                return Ok(t);
            }
            prev = h;
        }
        Err(Error::NotZeroDimensional(format!("Hilbert function not stable by degree {bound}")))
    }

    /// Minimal generators of `I(Z)`, degree by degree: in each degree a
    /// complement of `R₁·I_{t-1}` inside `I_t`.
    pub fn fat_ideal(&self) -> Result<FatIdeal<F>> {
        let reg = self.reg()?;
        let f = self.config.field();
        let mut gens: Vec<Poly<F>> = Vec::new();
        let mut degrees = Vec::new();
        let mut prev: Vec<Poly<F>> = Vec::new();
        for t in 1..=reg + 1 {
            let piece = self.graded_piece(t);
            let mut span = RowSpace::new(f, forms_dim(t));
            for g in &prev {
                for s in [X, Y, Z] {
                    span.insert(g.mul_monomial(&Monomial::var(s)).coefficients(t)?);
                }
            }
            for b in &piece.basis {
                if span.insert(b.coefficients(t)?) {
                    if t == reg + 1 {
                        return Err(Error::Internal(format!("minimal generator in degree reg + 1 = {t}")));
                    }
                    gens.push(b.clone());
                    degrees.push(t);
                }
            }
            prev = piece.basis;
        }
        let ideal = Ideal::new(self.ring(), gens)?;
        for t in [reg, reg + 1] {
            let via_basis = ideal.graded_dim(t)?;
            if via_basis != self.graded_dim(t) {
                return Err(Error::Internal(format!(
                    "generators span {via_basis} forms in degree {t}, expected {}",
                    self.graded_dim(t)
                )));
            }
        }
        Ok(FatIdeal {
            scheme: self.clone(),
            ideal,
            reg,
            generator_degrees: degrees,
        })
    }

    /// `I^(m) = I(mZ)`.
    pub fn symbolic_power(&self, m: u32) -> Result<FatIdeal<F>> {
        if m == 0 {
            return Err(Error::InvalidArgument("symbolic power exponent must be at least 1".into()));
        }
        self.scaled(m).fat_ideal()
    }

    /// `∩ᵢ I(pᵢ)^{m·mᵢ}` through ideal intersections.
    pub fn symbolic_power_by_intersection(&self, m: u32) -> Result<Ideal<F>> {
        let mut acc: Option<Ideal<F>> = None;
        for (i, &mi) in self.mults.iter().enumerate() {
            if mi == 0 {
                continue;
            }
            let p = self.config.point_ideal(i).power(m * mi)?;
            acc = Some(match acc {
                None => p,
                Some(a) => a.intersect(&p)?.minimalize()?,
            });
        }
        acc.ok_or(Error::ZeroIdeal("symbolic power"))
    }
}

/// A fat point ideal with its minimal generators and regularity.
#[derive(Clone, Debug)]
pub struct FatIdeal<F: Field> {
    pub scheme: FatPointScheme<F>,
    pub ideal: Ideal<F>,
    pub reg: u32,
    pub generator_degrees: Vec<u32>,
}

impl<F: Field> FatIdeal<F> {
    pub fn alpha(&self) -> u32 {
        self.generator_degrees[0]
    }

    pub fn omega(&self) -> u32 {
        *self.generator_degrees.last().expect("nonzero ideal")
    }

    pub fn gens(&self) -> &[Poly<F>] {
        self.ideal.gens()
    }
}

/// Largest `e` with `f^e` dividing every element of `piece`, and the
/// quotients by `f^e`.
pub fn strip_conic_factor<F: Field>(piece: &GradedPiece<F>, conic: &Poly<F>) -> Result<(u32, GradedPiece<F>)> {
    if piece.is_empty() {
        return Err(Error::InvalidArgument("empty graded piece".into()));
    }
    let conic_deg = conic.degree().ok_or(Error::InvalidArgument("zero conic".into()))?;
    let mut current = piece.basis.clone();
    let mut e = 0;
    loop {
        let divided: Option<Vec<Poly<F>>> = current.iter().map(|g| g.div_exact(conic)).collect();
        match divided {
            Some(next) if next.iter().all(|g| !g.is_zero()) => {
                current = next;
                e += 1;
            }
            _ => break,
        }
    }
    let degree = piece
        .degree
        .checked_sub(conic_deg * e)
        .ok_or_else(|| Error::Internal("conic factor exceeds degree".into()))?;
    for (g, h) in piece.basis.iter().zip(&current) {
        if &(&h.clone() * &conic.pow(e)) != g || h.degree() != Some(degree) {
            return Err(Error::Internal("conic factor bookkeeping".into()));
        }
    }
    Ok((e, GradedPiece { degree, basis: current }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PrimeField, RationalField};

    fn conic(n: usize) -> Arc<PointConfig<PrimeField>> {
        Arc::new(PointConfig::new(PointSpec::conic(n), PrimeField::default_prime()).unwrap())
    }

    fn general(n: usize) -> Arc<PointConfig<PrimeField>> {
        Arc::new(PointConfig::new(PointSpec::generic(n, 7), PrimeField::default_prime()).unwrap())
    }

    #[test]
    fn conic_parametrization() {
        let cfg = PointConfig::new(PointSpec::conic(5), RationalField).unwrap();
        let f = RationalField;
        let expect = [[1, 0, 0], [1, 1, 1], [1, 2, 4], [1, 3, 9], [1, 4, 16]];
        for (p, e) in cfg.points().iter().zip(expect) {
            for (a, b) in p.iter().zip(e) {
                assert_eq!(*a, f.from_i64(b));
            }
        }
        let q = cfg.conic_form().unwrap();
        for p in cfg.points() {
            assert!(f.is_zero(&q.eval(p)));
        }
    }

    #[test]
    fn duplicate_points_are_rejected() {
        let spec = PointSpec::Explicit {
            points: vec![
                ["1".into(), "2".into(), "3".into()],
                ["0".into(), "1".into(), "0".into()],
                ["2".into(), "4".into(), "6".into()],
            ],
        };
        assert_eq!(PointConfig::new(spec, RationalField).unwrap_err(), Error::DuplicatePoints(0, 2));
        let spec = PointSpec::OnConic { params: vec![1, 8] };
        assert!(matches!(
            PointConfig::new(spec, PrimeField::new(7).unwrap()),
            Err(Error::DuplicatePoints(0, 1))
        ));
    }

    #[test]
    fn six_general_points() {
        let cfg = general(6);
        assert!(cfg.genericity_battery(2).is_ok());
        let z = FatPointScheme::uniform(cfg, 1);
        assert_eq!(z.graded_dim(2), 0);
        assert_eq!(z.graded_dim(3), 4);
        let fi = z.fat_ideal().unwrap();
        assert_eq!(fi.generator_degrees, vec![3, 3, 3, 3]);
        assert_eq!(fi.reg, 3);
        assert_eq!(z.symbolic_power(3).unwrap().alpha(), 8);
    }

    #[test]
    fn conic_pieces() {
        let cfg = conic(5);
        let z = FatPointScheme::uniform(cfg.clone(), 1);
        let q = cfg.conic_form().unwrap();
        let p2 = z.graded_piece(2);
        assert_eq!(p2.dim(), 1);
        assert_eq!(p2.basis[0].monic(), q.monic());
        assert_eq!(z.graded_dim(3), 5);
        let z2 = z.scaled(2);
        let p4 = z2.graded_piece(4);
        assert_eq!(p4.dim(), 1);
        assert_eq!(p4.basis[0].monic(), q.pow(2).monic());
        let (e, rest) = strip_conic_factor(&p4, &q).unwrap();
        assert_eq!((e, rest.degree, rest.dim()), (2, 0, 1));
        let (e, _) = strip_conic_factor(&z.graded_piece(3), &q).unwrap();
        assert_eq!(e, 0);
        let r = cfg.ring();
        let v = GradedPiece {
            degree: 3,
            basis: vec![&q * &Poly::var(r, 'x').unwrap(), &q * &Poly::var(r, 'y').unwrap()],
        };
        assert_eq!(strip_conic_factor(&v, &q).unwrap().0, 1);
    }

    #[test]
    fn single_point_and_conditions_modes() {
        let cfg = general(1);
        let z = FatPointScheme::uniform(cfg.clone(), 1);
        assert_eq!(z.fat_ideal().unwrap().generator_degrees, vec![1, 1]);
        let z = FatPointScheme::uniform(general(4), 3);
        for t in 0..9 {
            assert_eq!(z.graded_dim_with(t, ConditionMode::Affine), z.graded_dim_with(t, ConditionMode::Full));
        }
    }

    #[test]
    fn characteristic_seven_vanishing() {
        // x^7 - y^7 over F_7 vanishes to order 7 at (1:1:0): (x - y)^7
        let f = PrimeField::new(7).unwrap();
        let spec = PointSpec::Explicit {
            points: vec![["1".into(), "1".into(), "0".into()]],
        };
        let cfg = Arc::new(PointConfig::new(spec, f).unwrap());
        let g = Poly::parse("x^7 - y^7", cfg.ring()).unwrap();
        let z7 = FatPointScheme::uniform(cfg.clone(), 7);
        let z8 = FatPointScheme::uniform(cfg.clone(), 8);
        assert!(z7.contains(&g).unwrap());
        assert!(!z8.contains(&g).unwrap());
        for t in 0..10 {
            assert_eq!(z7.graded_dim_with(t, ConditionMode::Affine), z7.graded_dim_with(t, ConditionMode::Full));
        }
    }

    #[test]
    fn routes_agree_for_three_points() {
        let cfg = Arc::new(PointConfig::new(PointSpec::generic(3, 1), RationalField).unwrap());
        let z = FatPointScheme::uniform(cfg, 1);
        let a = z.symbolic_power_by_intersection(2).unwrap();
        let b = z.symbolic_power(2).unwrap();
        assert!(a.equals(&b.ideal).unwrap());
        for t in 0..7 {
            assert_eq!(a.graded_dim(t).unwrap(), z.scaled(2).graded_dim(t));
        }
    }
}
