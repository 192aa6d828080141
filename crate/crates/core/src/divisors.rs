//! Divisor classes `aL - Σ mᵢEᵢ` on the blowup of the plane at n points:
//! intersection pairing, canonical class, (−1)-classes, quadratic Cremona
//! reduction, nefness and effectivity.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The class `a L - m₁E₁ - … - m_nE_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DivClass {
    pub a: i64,
    pub m: Vec<i64>,
}

impl DivClass {
    pub fn new(a: i64, m: Vec<i64>) -> Self {
        DivClass { a, m }
    }

    /// `tL - m(E₁ + … + E_n)`.
    pub fn uniform(n: usize, t: i64, m: i64) -> Self {
        DivClass { a: t, m: vec![m; n] }
    }

    pub fn line(n: usize) -> Self {
        Self::uniform(n, 1, 0)
    }

    /// `E_i` (0-based `i`).
    pub fn exceptional(n: usize, i: usize) -> Self {
        let mut m = vec![0; n];
        m[i] = -1;
        DivClass { a: 0, m }
    }

    /// `K = -3L + ΣEᵢ`.
    pub fn canonical(n: usize) -> Self {
        Self::uniform(n, -3, -1)
    }

    /// The class of a fat point scheme in degree `t`: `tL - Σ mᵢEᵢ`.
    pub fn of_scheme(t: i64, mults: &[u32]) -> Self {
        DivClass {
            a: t,
            m: mults.iter().map(|&x| x as i64).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.m.len()
    }

    pub fn is_uniform(&self) -> bool {
        self.m.windows(2).all(|w| w[0] == w[1])
    }

    pub fn pair(&self, other: &Self) -> Result<i64> {
        if self.n() != other.n() {
            return Err(Error::InvalidArgument(format!(
                "pairing classes on {} and {} points",
                self.n(),
                other.n()
            )));
        }
        Ok(self.a * other.a - self.m.iter().zip(&other.m).map(|(x, y)| x * y).sum::<i64>())
    }

    pub fn square(&self) -> i64 {
        self.pair(self).expect("same n")
    }

    pub fn dot_canonical(&self) -> i64 {
        self.pair(&Self::canonical(self.n())).expect("same n")
    }

    /// Riemann–Roch: `χ(F) = (F² - F·K)/2 + 1`.
    pub fn chi(&self) -> i64 {
        (self.square() - self.dot_canonical()) / 2 + 1
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        DivClass {
            a: self.a + other.a,
            m: self.m.iter().zip(&other.m).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        DivClass {
            a: self.a * k,
            m: self.m.iter().map(|x| x * k).collect(),
        }
    }

    /// Copy with `n` entries, padding with zero multiplicities.
    pub fn padded(&self, n: usize) -> Self {
        let mut m = self.m.clone();
        m.resize(n.max(self.n()), 0);
        DivClass { a: self.a, m }
    }

    /// The quadratic transformation based at the points `i, j, k`.
    pub fn cremona_at(&self, i: usize, j: usize, k: usize) -> Self {
        let d = self.a - self.m[i] - self.m[j] - self.m[k];
        let mut out = self.clone();
        out.a += d;
        for idx in [i, j, k] {
            out.m[idx] += d;
        }
        out
    }

    fn sorted_desc(&self) -> Self {
        let mut m = self.m.clone();
        m.sort_unstable_by(|x, y| y.cmp(x));
        DivClass { a: self.a, m }
    }
}

impl fmt::Display for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.a)?;
        for (i, x) in self.m.iter().enumerate() {
            write!(f, "{}{}", if i == 0 { " " } else { ", " }, x)?;
        }
        write!(f, ")")
    }
}

/// One recorded move of a Cremona reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReductionStep {
    /// Quadratic transformation at the three largest multiplicities.
    Cremona { before: DivClass, after: DivClass, k: i64 },
    /// Negative multiplicities set to zero (fixed exceptional components).
    Zeroed { before: DivClass, after: DivClass },
}

/// Result of [`cremona_reduce`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reduction {
    pub reduced: DivClass,
    pub transcript: Vec<ReductionStep>,
}

impl Reduction {
    /// True when the reduction stopped in standard form with `a ≥ 0`.
    pub fn effective(&self) -> bool {
        self.reduced.a >= 0
    }
}

/// Repeatedly sorts multiplicities in decreasing order and applies the quadratic
/// transformation while `k = a - m₁ - m₂ - m₃ < 0`, zeroing negative
/// multiplicities as they appear. Stops early once `a < 0`.
pub fn cremona_reduce(f: &DivClass) -> Result<Reduction> {
    if f.n() < 3 {
        return Err(Error::InvalidArgument("Cremona reduction needs at least 3 points".into()));
    }
    let mut cur = f.clone();
    let mut transcript = Vec::new();
    loop {
        cur = cur.sorted_desc();
        if cur.m.iter().any(|&x| x < 0) {
            let mut after = cur.clone();
            for x in after.m.iter_mut() {
                *x = (*x).max(0);
            }
            after = after.sorted_desc();
            transcript.push(ReductionStep::Zeroed {
                before: cur,
                after: after.clone(),
            });
            cur = after;
        }
        if cur.a < 0 {
            break;
        }
        let k = cur.a - cur.m[0] - cur.m[1] - cur.m[2];
        if k >= 0 {
            break;
        }
        let after = cur.cremona_at(0, 1, 2);
        transcript.push(ReductionStep::Cremona {
            before: cur,
            after: after.clone(),
            k,
        });
        cur = after;
    }
    Ok(Reduction {
        reduced: cur,
        transcript,
    })
}

/// All classes `E` with `E² = E·K = -1` on the blowup at `n ≤ 8` general
/// points, as the orbit of the `Eᵢ` under permutations and quadratic
/// transformations.
pub fn minus_one_classes(n: usize) -> Result<Vec<DivClass>> {
    if !(1..=8).contains(&n) {
        return Err(Error::InvalidArgument(format!("(-1)-classes need 1 <= n <= 8, got {n}")));
    }
    let big = n.max(3);
    let mut seen: BTreeSet<DivClass> = (0..big).map(|i| DivClass::exceptional(big, i)).collect();
    let mut queue: VecDeque<DivClass> = seen.iter().cloned().collect();
    while let Some(c) = queue.pop_front() {
        let mut next = Vec::new();
        for i in 0..big {
            for j in i + 1..big {
                let mut s = c.clone();
                s.m.swap(i, j);
                next.push(s);
                for k in j + 1..big {
                    next.push(c.cremona_at(i, j, k));
                }
            }
        }
        for s in next {
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    Ok(seen
        .into_iter()
        .filter(|c| c.m[n..].iter().all(|&x| x == 0))
        .map(|mut c| {
            c.m.truncate(n);
            c
        })
        .collect())
}

/// Point configuration a nefness question refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NefContext {
    /// General points (n ≤ 8, or uniform classes at n = 9).
    General,
    /// Points on a smooth conic (n ≥ 5).
    Conic,
}

pub fn is_nef(f: &DivClass, ctx: NefContext) -> Result<bool> {
    let n = f.n();
    match ctx {
        NefContext::General => match n {
            0 => Ok(f.a >= 0),
            1 => Ok(f.m[0] >= 0 && f.a - f.m[0] >= 0),
            2..=8 => {
                for e in minus_one_classes(n)? {
                    if f.pair(&e)? < 0 {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            9 if f.is_uniform() => Ok(f.m[0] >= 0 && f.a >= 3 * f.m[0]),
            9 => Err(Error::Unsupported("nefness at 9 general points is only decided for uniform classes".into())),
            _ => Err(Error::Unsupported(format!("nefness at {n} general points"))),
        },
        NefContext::Conic => {
            if n < 5 {
                return Err(Error::Unsupported("the conic context needs at least 5 points".into()));
            }
            if f.m.iter().any(|&x| x < 0) {
                return Ok(false);
            }
            for i in 0..n {
                for j in i + 1..n {
                    if f.a - f.m[i] - f.m[j] < 0 {
                        return Ok(false);
                    }
                }
            }
            Ok(2 * f.a - f.m.iter().sum::<i64>() >= 0)
        }
    }
}

/// Least `t` with `tL - mΣEᵢ` nef, for `n` points in the given context.
pub fn nef_threshold(n: usize, m: u32, ctx: NefContext) -> Result<u32> {
    let m = m as i64;
    // tL - mΣE meets L - E₁ - E₂ nonnegatively only from t = 2m; 3mn is past every wall
    for t in 0..=(3 * m * n.max(1) as i64) {
        if is_nef(&DivClass::uniform(n, t, m), ctx)? {
            return Ok(t as u32);
        }
    }
    Err(Error::Internal(format!("no nef threshold found for n = {n}, m = {m}")))
}

/// Effectivity at `n ≤ 8` general points, with the reduction as certificate.
pub fn is_effective_general(f: &DivClass) -> Result<(bool, Reduction)> {
    let n = f.n();
    if !(1..=8).contains(&n) {
        return Err(Error::InvalidArgument(format!("effectivity needs 1 <= n <= 8, got {n}")));
    }
    let red = cremona_reduce(&f.padded(3))?;
    Ok((red.effective(), red))
}

/// `h⁰` of a class at general points: `n ≤ 8` through Cremona reduction, and
/// uniform classes at `n = 9`.
pub fn h0_general(f: &DivClass) -> Result<i64> {
    let n = f.n();
    match n {
        0 => Ok(if f.a < 0 { 0 } else { (f.a + 1) * (f.a + 2) / 2 }),
        1..=8 => {
            let (eff, red) = is_effective_general(f)?;
            Ok(if eff { red.reduced.chi() } else { 0 })
        }
        9 if f.is_uniform() => {
            let (t, m) = (f.a, f.m[0]);
            if m < 0 {
                return Err(Error::Unsupported("negative multiplicity at 9 points".into()));
            }
            Ok(if t < 3 * m { 0 } else { f.chi() })
        }
        _ => Err(Error::Unsupported(format!("h0 at {n} general points"))),
    }
}

/// `h⁰` at `n ≤ 8` general points by peeling off (−1)-classes that meet the
/// class negatively until it is nef. Independent of [`cremona_reduce`].
pub fn h0_by_peeling(f: &DivClass) -> Result<i64> {
    let n = f.n();
    let classes = if n >= 2 { minus_one_classes(n)? } else { Vec::new() };
    let mut cur = f.clone();
    loop {
        if cur.a < 0 {
            return Ok(0);
        }
        let negative = if n == 1 {
            if cur.m[0] < 0 {
                Some(DivClass::exceptional(1, 0))
            } else {
                None
            }
        } else {
            classes.iter().find(|e| cur.pair(e).expect("same n") < 0).cloned()
        };
        match negative {
            Some(e) => cur = cur.sub(&e),
            None if n == 1 && cur.a < cur.m[0] => return Ok(0),
            None => return Ok(cur.chi()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_relations() {
        let l = DivClass::line(3);
        let e = DivClass::exceptional(3, 1);
        assert_eq!(l.pair(&l).unwrap(), 1);
        assert_eq!(e.pair(&e).unwrap(), -1);
        assert_eq!(l.pair(&e).unwrap(), 0);
        for n in 0..10 {
            assert_eq!(DivClass::canonical(n).square(), 9 - n as i64);
        }
        assert!(l.pair(&DivClass::line(4)).is_err());
    }

    #[test]
    fn conic_pairing_is_negative() {
        let q = DivClass::uniform(5, 2, 1);
        for m in 1..6 {
            let f = DivClass::uniform(5, 2 * m - 1, m);
            assert_eq!(q.pair(&f).unwrap(), 2 * (2 * m - 1) - 5 * m);
            assert!(q.pair(&f).unwrap() < 0);
        }
    }

    #[test]
    fn reduction_of_degree_seventeen() {
        let f = DivClass::uniform(8, 17, 6);
        let red = cremona_reduce(&f).unwrap();
        match &red.transcript[0] {
            ReductionStep::Cremona { after, k, .. } => {
                assert_eq!(*k, -1);
                assert_eq!(after, &DivClass::new(16, vec![5, 5, 5, 6, 6, 6, 6, 6]));
            }
            other => panic!("unexpected first step {other:?}"),
        }
        assert_eq!(red.reduced, DivClass::new(1, vec![0; 8]));
        let anti = DivClass::uniform(9, 3, 1);
        assert!(cremona_reduce(&anti).unwrap().transcript.is_empty());
    }

    #[test]
    fn minus_one_counts() {
        let expect = [1, 3, 6, 10, 16, 27, 56, 240];
        for n in 1..=8 {
            let cls = minus_one_classes(n).unwrap();
            assert_eq!(cls.len(), expect[n - 1], "n = {n}");
            for c in &cls {
                assert_eq!(c.square(), -1);
                assert_eq!(c.dot_canonical(), -1);
            }
        }
        assert_eq!(
            minus_one_classes(2).unwrap(),
            vec![DivClass::new(0, vec![-1, 0]), DivClass::new(0, vec![0, -1]), DivClass::new(1, vec![1, 1])]
        );
        assert!(minus_one_classes(9).is_err());
    }

    #[test]
    fn nefness() {
        assert!(is_nef(&DivClass::uniform(6, 5, 2), NefContext::General).unwrap());
        assert!(is_nef(&DivClass::uniform(7, 8, 3), NefContext::General).unwrap());
        assert!(!is_nef(&DivClass::uniform(6, 5, 3), NefContext::General).unwrap());
        for m in 1..=4 {
            assert!(!is_nef(&DivClass::uniform(5, 2 * m - 1, m), NefContext::Conic).unwrap());
            assert!(is_nef(&DivClass::uniform(5, 3 * m, m), NefContext::Conic).unwrap());
        }
        assert!(is_nef(&DivClass::uniform(9, 3, 1), NefContext::General).unwrap());
        assert!(!is_nef(&DivClass::uniform(9, 5, 2), NefContext::General).unwrap());
        assert!(is_nef(&DivClass::new(3, vec![1; 8].into_iter().chain([2]).collect()), NefContext::General).is_err());
    }

    #[test]
    fn effectivity() {
        assert!(is_effective_general(&DivClass::uniform(8, 48, 17)).unwrap().0);
        assert!(is_effective_general(&DivClass::uniform(6, 12, 5)).unwrap().0);
        assert!(!is_effective_general(&DivClass::new(-1, vec![0; 3])).unwrap().0);
        assert!(!is_effective_general(&DivClass::uniform(8, 16, 6)).unwrap().0);
    }

    #[test]
    fn h0_routes_agree() {
        for n in 1..=8usize {
            for t in 0..10 {
                for m in 0..5 {
                    let f = DivClass::uniform(n, t, m);
                    assert_eq!(h0_general(&f).unwrap(), h0_by_peeling(&f).unwrap(), "{f}");
                }
            }
        }
        // cubics through six general points: 10 - 6
        assert_eq!(h0_general(&DivClass::uniform(6, 3, 1)).unwrap(), 4);
        assert_eq!(h0_general(&DivClass::uniform(9, 6, 2)).unwrap(), 1);
        assert_eq!(h0_general(&DivClass::uniform(9, 5, 2)).unwrap(), 0);
    }

    #[test]
    fn scheme_classes() {
        let f = DivClass::of_scheme(3, &[2, 1, 1, 1, 1, 1]);
        assert_eq!(f.square(), 0);
        assert_eq!(DivClass::of_scheme(2, &[1; 5]), DivClass::uniform(5, 2, 1));
    }

    #[test]
    fn nef_thresholds() {
        assert_eq!(nef_threshold(5, 1, NefContext::Conic).unwrap(), 3);
        assert_eq!(nef_threshold(6, 1, NefContext::Conic).unwrap(), 3);
        assert_eq!(nef_threshold(7, 2, NefContext::Conic).unwrap(), 7);
        assert_eq!(nef_threshold(6, 2, NefContext::General).unwrap(), 5);
        assert_eq!(nef_threshold(9, 2, NefContext::General).unwrap(), 6);
    }
}
