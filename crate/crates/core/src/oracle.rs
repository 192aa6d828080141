//! Brute-force verification of containment claims and structural
//! identities, using Gröbner bases and graded linear algebra only.

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{Field, FieldSpec, RationalField, RowSpace};
use crate::closedform::{self, ConfigKind};
use crate::divisors::{is_nef, DivClass, NefContext};
use crate::error::{Error, Result};
use crate::fatpoints::{FatPointScheme, PointConfig, PointSpec};
use crate::ideals::{power_products, Ideal};
use crate::poly::{forms_dim, Monomial, MonomialOrder, Poly, X, Y, Z};

/// Work budget used when neither the caller nor the environment sets one.
pub const DEFAULT_BUDGET: u64 = 100_000;
/// Environment variable overriding the default budget.
pub const BUDGET_ENV: &str = "RESURGENCE_BUDGET";

/// Budget in force: `RESURGENCE_BUDGET` if set and valid, else the default.
pub fn default_budget() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleOptions {
    pub budget: u64,
    /// Run even when the estimate exceeds the budget.
    pub ignore_budget: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            budget: default_budget(),
            ignore_budget: false,
        }
    }
}

impl OracleOptions {
    pub fn unlimited() -> Self {
        OracleOptions {
            budget: u64::MAX,
            ignore_budget: true,
        }
    }

    fn guard(&self, estimate: u64) -> Result<()> {
        if !self.ignore_budget && estimate > self.budget {
            return Err(Error::BudgetExceeded {
                estimate,
                budget: self.budget,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
pub enum Outcome {
    Holds(bool),
    Degree(u32),
    /// A graded piece involved was zero.
    Vacuous,
}

impl Outcome {
    pub fn holds(&self) -> Option<bool> {
        match self {
            Outcome::Holds(b) => Some(*b),
            _ => None,
        }
    }
}

/// One row of a dimension comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimRow {
    pub degree: u32,
    pub left: usize,
    pub right: usize,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// A form in `I^(m)` outside `I^r`, with both facts re-checked without
    /// Gröbner bases.
    Form {
        degree: u32,
        poly: String,
        in_symbolic_power: bool,
        in_ordinary_power: bool,
    },
    Table { rows: Vec<DimRow> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub check: String,
    pub query: String,
    pub outcome: Outcome,
    pub witness: Option<Witness>,
    pub field: FieldSpec,
    pub seed: Option<u64>,
    pub notes: Vec<String>,
    pub elapsed_ms: f64,
}

impl OracleReport {
    fn new<F: Field>(check: &str, query: String, cfg: &PointConfig<F>, started: Instant) -> Self {
        let seed = match cfg.spec() {
            PointSpec::Generic { seed, .. } => Some(*seed),
            _ => None,
        };
        OracleReport {
            check: check.into(),
            query,
            outcome: Outcome::Vacuous,
            witness: None,
            field: cfg.field().spec(),
            seed,
            notes: Vec::new(),
            elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
        }
    }

    fn finish(mut self, started: Instant) -> Self {
        self.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
        self
    }

    pub fn holds(&self) -> Option<bool> {
        self.outcome.holds()
    }
}

fn describe<F: Field>(z: &FatPointScheme<F>) -> String {
    let kind = match z.config().spec() {
        PointSpec::OnConic { .. } => "conic",
        PointSpec::Generic { .. } => "general",
        PointSpec::Explicit { .. } => "explicit",
    };
    if z.is_uniform() {
        format!("{kind} n={} mult={}", z.config().n(), z.mults()[0])
    } else {
        format!("{kind} n={} mults={:?}", z.config().n(), z.mults())
    }
}

/// Graded pieces `(I^r)_t` for `t ≤ t_max`, as row spaces over
/// `monomials_xyz(t)`: `(I^r)_t = R₁·(I^r)_{t-1} + span of r-fold products
/// of generators of degree t`.
pub fn power_spaces<F: Field>(field: &F, gens: &[Poly<F>], r: u32, t_max: u32) -> Result<Vec<RowSpace<F>>> {
    let products = power_products(gens, r);
    let ring = gens.first().map(|g| g.ring().clone());
    let mut out: Vec<RowSpace<F>> = Vec::with_capacity(t_max as usize + 1);
    for t in 0..=t_max {
        let mut space = RowSpace::new(field, forms_dim(t));
        if t > 0 {
            let ring = ring.as_ref().expect("nonempty when spaces are nonzero");
            for row in out[t as usize - 1].basis() {
                if space.is_full() {
                    break;
                }
                let p = Poly::from_coefficients(ring, t - 1, &row);
                for s in [X, Y, Z] {
                    space.insert(p.mul_monomial(&Monomial::var(s)).coefficients(t)?);
                }
            }
        }
        for p in products.iter().filter(|p| p.degree() == Some(t)) {
            if space.is_full() {
                break;
            }
            space.insert(p.coefficients(t)?);
        }
        out.push(space);
    }
    Ok(out)
}

fn binomial_u64(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Work estimate for `I^(m) ⊆ I^r`: number of generators of `I^r` times the
/// number of monomials at the largest degree to be reached.
pub fn containment_estimate(generators: usize, r: u32, degree: u32) -> u64 {
    let products = binomial_u64(generators as u64 + r as u64 - 1, r as u64);
    products.saturating_mul(forms_dim(degree) as u64).saturating_mul(degree as u64)
}

/// Decides `I(mZ) ⊆ I(Z)^r` by testing each minimal generator of `I(mZ)`
/// against a truncated Gröbner basis of `I(Z)^r`.
pub fn contains_bruteforce<F: Field>(z: &FatPointScheme<F>, m: u32, r: u32, opts: &OracleOptions) -> Result<OracleReport> {
    let started = Instant::now();
    if m == 0 || r == 0 {
        return Err(Error::InvalidArgument("m and r must be at least 1".into()));
    }
    let base = z.fat_ideal()?;
    let mz = z.scaled(m);
    let top = mz.reg()?;
    let estimate = containment_estimate(base.gens().len(), r, top);
    opts.guard(estimate)?;

    let query = format!("I^({m}) in I^{r} for {}", describe(z));
    let mut report = OracleReport::new("contains", query, z.config(), started);
    report.notes.push(format!("work estimate {estimate}"));
    if m == 1 && r == 1 {
        report.outcome = Outcome::Holds(true);
        report.notes.push("I is contained in itself".into());
        return Ok(report.finish(started));
    }

    let symbolic = mz.fat_ideal()?;
    let gens_r = power_products(base.gens(), r);
    let power = Ideal::new(z.ring(), gens_r)?;
    power.basis(MonomialOrder::GrevLex, Some(symbolic.omega()))?;
    report.notes.push(format!(
        "{} generators of I^({m}) in degrees {}..={}; I^{r} basis truncated at degree {}",
        symbolic.gens().len(),
        symbolic.alpha(),
        symbolic.omega(),
        symbolic.omega()
    ));
    for g in symbolic.gens() {
        if !power.contains(g)? {
            let witness = verify_witness(z, m, r, &base.ideal, g)?;
            report.outcome = Outcome::Holds(false);
            report.witness = Some(witness);
            return Ok(report.finish(started));
        }
    }
    report.outcome = Outcome::Holds(true);
    Ok(report.finish(started))
}

/// Re-checks a non-containment witness without Gröbner bases: vanishing
/// conditions for `I(mZ)`, graded linear algebra for `I^r`.
fn verify_witness<F: Field>(z: &FatPointScheme<F>, m: u32, r: u32, base: &Ideal<F>, g: &Poly<F>) -> Result<Witness> {
    let d = g.degree().expect("nonzero generator");
    let in_symbolic = z.scaled(m).contains(g)?;
    let spaces = power_spaces(z.config().field(), base.gens(), r, d)?;
    let in_power = spaces[d as usize].contains(&g.coefficients(d)?);
    if !in_symbolic || in_power {
        return Err(Error::Internal(format!(
            "witness of degree {d} failed re-verification (in I^(m): {in_symbolic}, in I^r: {in_power})"
        )));
    }
    Ok(Witness::Form {
        degree: d,
        poly: g.to_string(),
        in_symbolic_power: in_symbolic,
        in_ordinary_power: in_power,
    })
}

/// Lower bound for `α(I(mZ))` from pairing with a nef class, when one is
/// known for the configuration.
pub fn alpha_lower_bound<F: Field>(z: &FatPointScheme<F>, m: u32) -> Option<u32> {
    if !z.is_uniform() {
        return None;
    }
    let n = z.config().n();
    let mult = z.mults()[0] as i64 * m as i64;
    let (class, ctx) = match z.config().spec() {
        PointSpec::OnConic { .. } if n >= 5 => (DivClass::uniform(n, n as i64, 2), NefContext::Conic),
        PointSpec::Generic { .. } => {
            let (a, b) = match n {
                1..=5 => (2, 1),
                6 => (5, 2),
                7 => (8, 3),
                8 => (17, 6),
                9 => (3, 1),
                _ => return None,
            };
            (DivClass::uniform(n, a, b), NefContext::General)
        }
        _ => return None,
    };
    if !is_nef(&class, ctx).ok()? {
        return None;
    }
    // (tL - mΣE)·(aL - bΣE) = ta - nmb ≥ 0
    let (a, b) = (class.a, class.m[0]);
    let need = n as i64 * mult * b;
    Some(((need + a - 1) / a).max(0) as u32)
}

/// Least `t` with `I(mZ)_t ≠ 0`, scanning upward from a nef-pairing bound
/// (checked against the piece just below it) or from 1.
pub fn alpha_bruteforce<F: Field>(z: &FatPointScheme<F>, m: u32) -> Result<u32> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let mz = z.scaled(m);
    if mz.is_zero() {
        return Err(Error::ZeroIdeal("alpha"));
    }
    let start = match alpha_lower_bound(z, m) {
        Some(lb) if lb == 0 || mz.graded_dim(lb - 1) == 0 => lb,
        _ => 1,
    };
    Ok((start..).find(|&t| mz.graded_dim(t) > 0).expect("fat point ideals are nonzero"))
}

fn span_of<F: Field>(field: &F, t: u32, polys: &[Poly<F>]) -> Result<RowSpace<F>> {
    let mut s = RowSpace::new(field, forms_dim(t));
    for p in polys {
        s.insert(p.coefficients(t)?);
    }
    Ok(s)
}

fn mutual<F: Field>(a: &RowSpace<F>, b: &RowSpace<F>) -> bool {
    a.rank() == b.rank() && a.basis().all(|v| b.contains(v)) && b.basis().all(|v| a.contains(v))
}

/// For `n ≥ 5` simple points on the conic `f`, compares
/// `(I(mZ)^r)_t` with `f^q · I((rm - q)Z)_{t-2q}`, `q = q_power(n, r, t, m)`,
/// for every `t` in `ts` (each `t ≥ 2mr`).
pub fn check_conic_power_structure<F: Field>(
    config: &Arc<PointConfig<F>>,
    m: u32,
    r: u32,
    ts: std::ops::RangeInclusive<u32>,
) -> Result<Vec<OracleReport>> {
    let started = Instant::now();
    let conic = config
        .conic_form()
        .ok_or_else(|| Error::Hypothesis("configuration is not on the conic".into()))?;
    let n = config.n() as u32;
    if n < 5 {
        return Err(Error::Hypothesis(format!("needs at least 5 conic points, got {n}")));
    }
    if *ts.start() < 2 * m * r {
        return Err(Error::Hypothesis(format!("t = {} < 2mr = {}", ts.start(), 2 * m * r)));
    }
    let z = FatPointScheme::uniform(config.clone(), 1);
    let base = z.scaled(m).fat_ideal()?;
    let spaces = power_spaces(config.field(), base.gens(), r, *ts.end())?;
    let mut out = Vec::new();
    for t in ts {
        let q = closedform::q_power(n, r, t, m)?;
        let rest = z.scaled(r * m - q).graded_piece(t - 2 * q);
        let fq = conic.pow(q);
        let right: Vec<Poly<F>> = rest.basis.iter().map(|g| &fq * g).collect();
        let right = span_of(config.field(), t, &right)?;
        let left = &spaces[t as usize];
        let equal = mutual(left, &right);
        let query = format!("(I^{r})_{t} = f^{q} I({}Z)_{} for conic n={n} mult={m}", r * m - q, t - 2 * q);
        let mut rep = OracleReport::new("conic_power_structure", query, config, started);
        rep.outcome = Outcome::Holds(equal);
        rep.witness = Some(Witness::Table {
            rows: vec![DimRow {
                degree: t,
                left: left.rank(),
                right: right.rank(),
                equal,
            }],
        });
        rep.notes.push(format!("q = {q}"));
        out.push(rep.finish(started));
    }
    Ok(out)
}

/// Compares the span of products `I(Z₁)_a · I(Z₂)_b` with `I(Z₁+Z₂)_{a+b}`.
pub fn check_mult_map_surjectivity<F: Field>(
    z1: &FatPointScheme<F>,
    a: u32,
    z2: &FatPointScheme<F>,
    b: u32,
) -> Result<OracleReport> {
    let started = Instant::now();
    let field = z1.config().field();
    let v1 = z1.graded_piece(a);
    let v2 = z2.graded_piece(b);
    let target = z1.plus(z2)?.graded_dim(a + b);
    let query = format!("I({})_{a} x I({})_{b} -> I(sum)_{}", describe(z1), describe(z2), a + b);
    let mut rep = OracleReport::new("mult_map_surjectivity", query, z1.config(), started);
    if v1.is_empty() || v2.is_empty() {
        rep.outcome = Outcome::Vacuous;
        rep.notes.push(format!("a graded piece is zero; target dimension {target}"));
        rep.witness = Some(Witness::Table {
            rows: vec![DimRow {
                degree: a + b,
                left: 0,
                right: target,
                equal: target == 0,
            }],
        });
        return Ok(rep.finish(started));
    }
    let mut span = RowSpace::new(field, forms_dim(a + b));
    'outer: for g in &v1.basis {
        for h in &v2.basis {
            if span.rank() == target {
                break 'outer;
            }
            span.insert((g * h).coefficients(a + b)?);
        }
    }
    let equal = span.rank() == target;
    rep.outcome = Outcome::Holds(equal);
    rep.witness = Some(Witness::Table {
        rows: vec![DimRow {
            degree: a + b,
            left: span.rank(),
            right: target,
            equal,
        }],
    });
    Ok(rep.finish(started))
}

/// `Z = (d-1)p₁ + p₂ + … + p_{2d}` for `2d` general points: checks
/// `α(I(Z)) = d`, generator degrees (two of degree `d`, `d - 2` of degree
/// `d + 1`), `dim I(mZ)_{md} = m + 1`, and `(I(Z)^m)_t = I(mZ)_t` for
/// `t ≤ md + d`.
pub fn check_rational_pencil_family<F: Field>(field: F, d: u32, m: u32, seed: u64, opts: &OracleOptions) -> Result<OracleReport> {
    let started = Instant::now();
    if d < 3 || m == 0 {
        return Err(Error::InvalidArgument("needs d >= 3 and m >= 1".into()));
    }
    let n = 2 * d as usize;
    let top = m * d + d;
    opts.guard(containment_estimate(d as usize, m, top))?;
    let config = Arc::new(PointConfig::new(
        PointSpec::Generic {
            n,
            seed,
            m_max: 1,
        },
        field,
    )?);
    let mut mults = vec![1u32; n];
    mults[0] = d - 1;
    let z = FatPointScheme::new(config.clone(), mults)?;
    let fi = z.fat_ideal()?;
    let mz = z.scaled(m);
    let query = format!("I(Z)^{m} = I({m}Z) for Z = {}p1 + p2 + ... + p{n}", d - 1);
    let mut rep = OracleReport::new("rational_pencil_family", query, &config, started);

    let mut expect_degrees = vec![d, d];
    expect_degrees.extend(std::iter::repeat_n(d + 1, d as usize - 2));
    let alpha_ok = fi.alpha() == d;
    let degrees_ok = fi.generator_degrees == expect_degrees;
    let pencil_dim = mz.graded_dim(m * d);
    let pencil_ok = pencil_dim == m as usize + 1;
    rep.notes.push(format!("alpha = {}", fi.alpha()));
    rep.notes.push(format!("generator degrees {:?}", fi.generator_degrees));
    rep.notes.push(format!("dim I({m}Z)_{} = {pencil_dim}", m * d));
    rep.notes.push(format!("graded comparison through degree {top}"));

    let spaces = power_spaces(config.field(), fi.gens(), m, top)?;
    let mut rows = Vec::new();
    let mut graded_ok = true;
    for t in 0..=top {
        let piece = mz.graded_piece(t);
        let right = span_of(config.field(), t, &piece.basis)?;
        let equal = mutual(&spaces[t as usize], &right);
        graded_ok &= equal;
        rows.push(DimRow {
            degree: t,
            left: spaces[t as usize].rank(),
            right: right.rank(),
            equal,
        });
    }
    rep.outcome = Outcome::Holds(alpha_ok && degrees_ok && pencil_ok && graded_ok);
    rep.witness = Some(Witness::Table { rows });
    Ok(rep.finish(started))
}

/// When `α(I) = reg(I)`: `(I^r)_t = (I^(r) ∩ M^{rα})_t` for
/// `t ≤ rα + reg + 1`.
pub fn check_truncation_identity<F: Field>(z: &FatPointScheme<F>, r: u32, opts: &OracleOptions) -> Result<OracleReport> {
    let started = Instant::now();
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let fi = z.fat_ideal()?;
    let (alpha, reg) = (fi.alpha(), fi.reg);
    if alpha != reg {
        return Err(Error::Hypothesis(format!("alpha = {alpha} differs from reg = {reg}")));
    }
    let top = r * alpha + reg + 1;
    opts.guard(containment_estimate(fi.gens().len(), r, top))?;
    let rz = z.scaled(r);
    let spaces = power_spaces(z.config().field(), fi.gens(), r, top)?;
    let mut rows = Vec::new();
    let mut ok = true;
    for t in 0..=top {
        let right = if t < r * alpha {
            RowSpace::new(z.config().field(), forms_dim(t))
        } else {
            span_of(z.config().field(), t, &rz.graded_piece(t).basis)?
        };
        let equal = mutual(&spaces[t as usize], &right);
        ok &= equal;
        rows.push(DimRow {
            degree: t,
            left: spaces[t as usize].rank(),
            right: right.rank(),
            equal,
        });
    }
    let query = format!("I^{r} = I^({r}) ∩ M^{} for {}", r * alpha, describe(z));
    let mut rep = OracleReport::new("truncation_identity", query, z.config(), started);
    rep.outcome = Outcome::Holds(ok);
    rep.witness = Some(Witness::Table { rows });
    rep.notes.push(format!("alpha = reg = {alpha}; graded comparison through degree {top}"));
    Ok(rep.finish(started))
}

/// The closed-form family matching a configuration, if any.
pub fn config_kind(spec: &PointSpec) -> Option<ConfigKind> {
    match spec {
        PointSpec::OnConic { params } => Some(ConfigKind::ConicUniform {
            n: params.len() as u32,
            s: 1,
        }),
        PointSpec::Generic { n, .. } if *n <= 9 => Some(ConfigKind::GeneralSimple { n: *n as u32 }),
        _ => None,
    }
}

/// One cell of a predictor/oracle comparison.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossRow {
    pub m: u32,
    pub r: u32,
    pub predicted: Option<bool>,
    pub method: Option<String>,
    pub oracle: Option<bool>,
    /// Oracle verdict over ℚ, present when the first run disagreed.
    pub oracle_rational: Option<bool>,
    pub agree: bool,
    pub witness: Option<Witness>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossTable {
    pub spec: PointSpec,
    pub field: FieldSpec,
    pub rows: Vec<CrossRow>,
}

impl CrossTable {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agree)
    }
}

/// Compares predictor and oracle on every `(m, r) ∈ [1, m_max] × [1, r_max]`,
/// cells in parallel. Disagreeing cells are re-run over ℚ.
pub fn crossvalidate<F: Field>(spec: &PointSpec, field: F, m_max: u32, r_max: u32, opts: &OracleOptions) -> Result<CrossTable>
where
    F::Elem: Send + Sync,
{
    let config = Arc::new(PointConfig::new(spec.clone(), field.clone())?);
    let z = FatPointScheme::uniform(config, 1);
    let kind = config_kind(spec);
    let cells: Vec<(u32, u32)> = (1..=m_max).flat_map(|m| (1..=r_max).map(move |r| (m, r))).collect();
    // fail fast on the budget before any work
    if !cells.is_empty() {
        let base = z.fat_ideal()?;
        for &(m, r) in &cells {
            opts.guard(containment_estimate(base.gens().len(), r, z.scaled(m).reg()?))?;
        }
    }
    let rows = cells
        .par_iter()
        .map(|&(m, r)| -> Result<CrossRow> {
            let verdict = kind.map(|k| closedform::predict(k, m, r));
            let (predicted, method) = match &verdict {
                Some(Ok(v)) => (v.contains, Some(v.method.id().to_string())),
                _ => (None, None),
            };
            let rep = contains_bruteforce(&z, m, r, opts)?;
            let oracle = rep.holds();
            let mut row = CrossRow {
                m,
                r,
                predicted,
                method,
                oracle,
                oracle_rational: None,
                agree: predicted.is_some() && predicted == oracle,
                witness: rep.witness,
                error: match verdict {
                    Some(Err(e)) => Some(e.to_string()),
                    None => Some("no closed form for this configuration".into()),
                    _ => None,
                },
            };
            if predicted.is_some() && !row.agree && field.spec() != FieldSpec::Rational {
                let cfg = Arc::new(PointConfig::new(spec.clone(), RationalField)?);
                let rep = contains_bruteforce(&FatPointScheme::uniform(cfg, 1), m, r, opts)?;
                row.oracle_rational = rep.holds();
                row.agree = predicted == row.oracle_rational;
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CrossTable {
        spec: spec.clone(),
        field: field.spec(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;

    fn conic(n: usize) -> FatPointScheme<PrimeField> {
        let cfg = PointConfig::new(PointSpec::conic(n), PrimeField::default_prime()).unwrap();
        FatPointScheme::uniform(Arc::new(cfg), 1)
    }

    fn general(n: usize) -> FatPointScheme<PrimeField> {
        let cfg = PointConfig::new(PointSpec::generic(n, 42), PrimeField::default_prime()).unwrap();
        FatPointScheme::uniform(Arc::new(cfg), 1)
    }

    #[test]
    fn conic_five_square_fails() {
        let rep = contains_bruteforce(&conic(5), 2, 2, &OracleOptions::unlimited()).unwrap();
        assert_eq!(rep.holds(), Some(false));
        match rep.witness.unwrap() {
            Witness::Form { degree, poly, .. } => {
                // f² lies in I², so the gap is in degree 5: dim I(2Z)_5 = 6 > 5 = dim f·I_3
                assert_eq!(degree, 5);
                let ring = conic(5).ring().clone();
                let w = Poly::parse(&poly, &ring).unwrap();
                assert!(conic(5).scaled(2).contains(&w).unwrap());
                assert_eq!(conic(5).scaled(2).graded_dim(5), 6);
                assert_eq!(conic(5).graded_dim(3), 5);
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn trivial_and_general_containments() {
        let opts = OracleOptions::unlimited();
        assert_eq!(contains_bruteforce(&general(4), 1, 1, &opts).unwrap().holds(), Some(true));
        assert_eq!(contains_bruteforce(&general(9), 3, 2, &opts).unwrap().holds(), Some(true));
    }

    #[test]
    fn budget_guard() {
        let opts = OracleOptions {
            budget: 10,
            ignore_budget: false,
        };
        assert!(matches!(
            contains_bruteforce(&conic(5), 2, 2, &opts),
            Err(Error::BudgetExceeded { budget: 10, .. })
        ));
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha_bruteforce(&general(7), 3).unwrap(), 8);
        assert_eq!(alpha_bruteforce(&general(8), 1).unwrap(), 3);
        assert_eq!(alpha_bruteforce(&conic(5), 4).unwrap(), 8);
        assert_eq!(alpha_lower_bound(&conic(5), 4), Some(8));
    }

    #[test]
    fn structure_and_surjectivity() {
        let z = conic(5);
        let reps = check_conic_power_structure(z.config(), 1, 2, 4..=6).unwrap();
        assert!(reps.iter().all(|r| r.holds() == Some(true)));
        let rep = check_mult_map_surjectivity(&z, 3, &z, 3).unwrap();
        assert_eq!(rep.holds(), Some(true));
        let zero = z.scaled(0);
        assert_eq!(check_mult_map_surjectivity(&z, 3, &zero, 1).unwrap().holds(), Some(true));
        assert_eq!(check_mult_map_surjectivity(&z, 1, &z, 3).unwrap().outcome, Outcome::Vacuous);
    }

    #[test]
    fn truncation_identity_needs_alpha_equal_reg() {
        let opts = OracleOptions::unlimited();
        assert_eq!(check_truncation_identity(&general(3), 2, &opts).unwrap().holds(), Some(true));
        assert!(matches!(check_truncation_identity(&general(8), 2, &opts), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn small_crossvalidation() {
        let t = crossvalidate(&PointSpec::conic(5), PrimeField::default_prime(), 2, 2, &OracleOptions::unlimited()).unwrap();
        assert_eq!(t.rows.len(), 4);
        assert!(t.all_agree());
    }
}
