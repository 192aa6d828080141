//! Closed-form containment criteria and invariant values for points on a
//! smooth conic and for up to nine general points. All rational inequalities
//! are evaluated in integers after clearing denominators.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which family of configurations a closed-form question is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConfigKind {
    /// `n` points on a smooth conic, each with multiplicity `s`.
    ConicUniform { n: u32, s: u32 },
    /// `n ≤ 9` general simple points.
    GeneralSimple { n: u32 },
}

/// The rule that decided a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Conic, `n` even or `n = 1`: contains iff `m ≥ r`.
    ConicEvenOrSingle,
    /// Conic, odd `n > 1`: contains iff `(n+1)r - 1 ≤ nm`.
    ConicOdd,
    /// At most five general points lie on a smooth conic.
    GeneralViaConicEvenOrSingle,
    GeneralViaConicOdd,
    /// Six general points: `12m ≥ 15r - 5`.
    GeneralSix,
    /// Seven general points: `m = r = 1` or `7m ≥ 8r`.
    GeneralSeven,
    /// Eight general points: `m = r = 1` or `12m ≥ 17r - 4`.
    GeneralEight,
    /// Nine general points: `3m ≥ 4r - 1`.
    GeneralNine,
    /// `α(I) = reg(I)`: contains iff `α(I^(m)) ≥ rα(I)`.
    AlphaReg,
    /// `α(I) < reg(I)`: only the two one-sided bounds apply.
    BoundOnly,
    /// Brute-force computation.
    Oracle,
}

impl Method {
    pub fn id(&self) -> &'static str {
        match self {
            Method::ConicEvenOrSingle => "conic_even_or_single",
            Method::ConicOdd => "conic_odd",
            Method::GeneralViaConicEvenOrSingle => "general_via_conic_even_or_single",
            Method::GeneralViaConicOdd => "general_via_conic_odd",
            Method::GeneralSix => "general_six",
            Method::GeneralSeven => "general_seven",
            Method::GeneralEight => "general_eight",
            Method::GeneralNine => "general_nine",
            Method::AlphaReg => "alpha_reg",
            Method::BoundOnly => "bound_only",
            Method::Oracle => "oracle",
        }
    }
}

/// Evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    /// `lhs ≥ rhs` (or its failure) decided the query.
    Inequality { statement: String, lhs: i64, rhs: i64 },
    /// The exceptional pair `m = r = 1`.
    Trivial { statement: String },
    /// Comparison of `α(I^(m))` with `rα(I)` and `r·reg(I)`.
    Alpha { alpha_symbolic: u32, r: u32, alpha: u32, reg: u32 },
}

/// Outcome of a containment question `I^(m) ⊆ I^r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    /// `None` when the rule leaves the question open.
    pub contains: Option<bool>,
    pub method: Method,
    pub certificate: Certificate,
}

fn inequality(contains: bool, method: Method, statement: String, lhs: i64, rhs: i64) -> Verdict {
    Verdict {
        contains: Some(contains),
        method,
        certificate: Certificate::Inequality { statement, lhs, rhs },
    }
}

fn require_positive(pairs: &[(&str, u32)]) -> Result<()> {
    for (name, v) in pairs {
        if *v == 0 {
            return Err(Error::InvalidArgument(format!("{name} must be at least 1")));
        }
    }
    Ok(())
}

fn ceil_div(a: i64, b: i64) -> i64 {
    assert!(b > 0);
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

/// Least `s ≥ 0` with `2(t - 2s) ≥ (m - s)n`: the power of the conic
/// dividing every element of `I(mZ)_t` for `n ≥ 5` points on the conic.
pub fn q_single(n: u32, m: u32, t: u32) -> Result<u32> {
    if n < 5 {
        return Err(Error::InvalidArgument(format!("conic factor counts need n >= 5, got {n}")));
    }
    if t < 2 * m {
        return Err(Error::Hypothesis(format!("t = {t} < 2m = {}: the graded piece is zero", 2 * m)));
    }
    let (n, m, t) = (n as i64, m as i64, t as i64);
    let s = (0..=m).find(|s| 2 * (t - 2 * s) >= (m - s) * n).expect("s = m always works");
    Ok(s as u32)
}

/// `max(0, ⌈(mn - 2t)/(n - 4)⌉)`.
pub fn q_single_closed(n: u32, m: u32, t: u32) -> i64 {
    let (n, m, t) = (n as i64, m as i64, t as i64);
    ceil_div(m * n - 2 * t, n - 4).max(0)
}

/// Minimum of `Σ q_single(n, m, tᵢ)` over `t = t₁ + … + t_r`, `tᵢ ≥ 2m`:
/// the power of the conic dividing every element of `(I(mZ)^r)_t`.
pub fn q_power(n: u32, r: u32, t: u32, m: u32) -> Result<u32> {
    require_positive(&[("r", r), ("m", m)])?;
    if t < 2 * m * r {
        return Err(Error::Hypothesis(format!("t = {t} < 2mr = {}", 2 * m * r)));
    }
    let t = t as usize;
    let lo = 2 * m as usize;
    let single: Vec<u32> = (0..=t).map(|u| if u < lo { u32::MAX } else { q_single(n, m, u as u32).unwrap() }).collect();
    // best[k][u]: minimum over compositions of u into k parts
    let mut best = vec![u32::MAX; t + 1];
    best[0] = 0;
    for _ in 0..r {
        let mut next = vec![u32::MAX; t + 1];
        for (u, slot) in next.iter_mut().enumerate() {
            for part in lo..=u {
                let (a, b) = (best[u - part], single[part]);
                if a != u32::MAX && b != u32::MAX {
                    *slot = (*slot).min(a + b);
                }
            }
        }
        best = next;
    }
    Ok(best[t])
}

/// `max(0, ⌈(r(n+1) - 2t)/(n - 3)⌉)`, the simple-point value of
/// [`q_power`] for odd `n`.
pub fn q_power_closed_odd(n: u32, r: u32, t: u32) -> Result<i64> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::InvalidArgument(format!("closed form needs odd n >= 5, got {n}")));
    }
    let (n, r, t) = (n as i64, r as i64, t as i64);
    Ok(ceil_div(r * (n + 1) - 2 * t, n - 3).max(0))
}

/// Containment `I^(m) ⊆ I^r` for `n` points on a smooth conic.
pub fn contains_conic(n: u32, m: u32, r: u32) -> Result<Verdict> {
    require_positive(&[("n", n), ("m", m), ("r", r)])?;
    let (ni, mi, ri) = (n as i64, m as i64, r as i64);
    if n % 2 == 0 || n == 1 {
        Ok(inequality(m >= r, Method::ConicEvenOrSingle, "m >= r".into(), mi, ri))
    } else {
        let lhs = ni * mi;
        let rhs = (ni + 1) * ri - 1;
        Ok(inequality(lhs >= rhs, Method::ConicOdd, "n*m >= (n+1)*r - 1".into(), lhs, rhs))
    }
}

/// Containment `I^(m) ⊆ I^r` for `n ≤ 9` general points.
pub fn contains_general(n: u32, m: u32, r: u32) -> Result<Verdict> {
    require_positive(&[("n", n), ("m", m), ("r", r)])?;
    let (mi, ri) = (m as i64, r as i64);
    let one_one = m == 1 && r == 1;
    let trivial = |method| Verdict {
        contains: Some(true),
        method,
        certificate: Certificate::Trivial {
            statement: "m = r = 1".into(),
        },
    };
    match n {
        1..=5 => {
            let mut v = contains_conic(n, m, r)?;
            v.method = match v.method {
                Method::ConicOdd => Method::GeneralViaConicOdd,
                _ => Method::GeneralViaConicEvenOrSingle,
            };
            Ok(v)
        }
        6 => Ok(inequality(12 * mi >= 15 * ri - 5, Method::GeneralSix, "12m >= 15r - 5".into(), 12 * mi, 15 * ri - 5)),
        7 if one_one => Ok(trivial(Method::GeneralSeven)),
        7 => Ok(inequality(7 * mi >= 8 * ri, Method::GeneralSeven, "7m >= 8r".into(), 7 * mi, 8 * ri)),
        8 if one_one => Ok(trivial(Method::GeneralEight)),
        8 => Ok(inequality(12 * mi >= 17 * ri - 4, Method::GeneralEight, "12m >= 17r - 4".into(), 12 * mi, 17 * ri - 4)),
        9 => Ok(inequality(3 * mi >= 4 * ri - 1, Method::GeneralNine, "3m >= 4r - 1".into(), 3 * mi, 4 * ri - 1)),
        _ => Err(Error::Unsupported(format!("no closed form for {n} general points"))),
    }
}

/// Dispatches to [`contains_conic`] or [`contains_general`].
pub fn predict(kind: ConfigKind, m: u32, r: u32) -> Result<Verdict> {
    match kind {
        ConfigKind::ConicUniform { n, s: 1 } => contains_conic(n, m, r),
        ConfigKind::ConicUniform { .. } => Err(Error::Unsupported(
            "containment criteria are stated for reduced conic configurations".into(),
        )),
        ConfigKind::GeneralSimple { n } => contains_general(n, m, r),
    }
}

/// `α(I^(m))` for the supported families.
pub fn alpha_symbolic(kind: ConfigKind, m: u32) -> Result<u32> {
    let mi = m as i64;
    match kind {
        ConfigKind::ConicUniform { n, s } if n >= 5 => Ok(2 * m * s),
        ConfigKind::ConicUniform { n, s: 1 } => alpha_symbolic(ConfigKind::GeneralSimple { n }, m),
        ConfigKind::ConicUniform { n, .. } => {
            Err(Error::Unsupported(format!("α for {n} non-reduced conic points")))
        }
        ConfigKind::GeneralSimple { n } => {
            let v = match n {
                1 | 2 => mi,
                3 => ceil_div(3 * mi, 2),
                4 | 5 => 2 * mi,
                6 => ceil_div(12 * mi, 5),
                7 => ceil_div(21 * mi, 8),
                8 => ceil_div(48 * mi, 17),
                9 => 3 * mi,
                _ => return Err(Error::Unsupported(format!("α for {n} general points"))),
            };
            Ok(v as u32)
        }
    }
}

/// `γ(I) = lim α(I^(m))/m`.
pub fn gamma_value(kind: ConfigKind) -> Result<Rational64> {
    match kind {
        ConfigKind::ConicUniform { n, s } if n >= 5 => Ok(Rational64::from_integer(2 * s as i64)),
        ConfigKind::ConicUniform { n, s: 1 } => gamma_value(ConfigKind::GeneralSimple { n }),
        ConfigKind::ConicUniform { n, .. } => Err(Error::Unsupported(format!("γ for {n} non-reduced conic points"))),
        ConfigKind::GeneralSimple { n } => {
            let (a, b) = match n {
                1 | 2 => (1, 1),
                3 => (3, 2),
                4 | 5 => (2, 1),
                6 => (12, 5),
                7 => (21, 8),
                8 => (48, 17),
                9 => (3, 1),
                _ => return Err(Error::Unsupported(format!("γ for {n} general points"))),
            };
            Ok(Rational64::new(a, b))
        }
    }
}

/// The resurgence `ρ(I)`.
pub fn resurgence(kind: ConfigKind) -> Result<Rational64> {
    let conic = |n: u32| {
        if n % 2 == 0 || n == 1 {
            Rational64::from_integer(1)
        } else {
            Rational64::new(n as i64 + 1, n as i64)
        }
    };
    match kind {
        ConfigKind::ConicUniform { n, s: 1 } if n >= 1 => Ok(conic(n)),
        ConfigKind::ConicUniform { .. } => Err(Error::Unsupported("resurgence of non-reduced or empty conic configurations".into())),
        ConfigKind::GeneralSimple { n } => match n {
            1..=5 => Ok(conic(n)),
            6 => Ok(Rational64::new(5, 4)),
            7 => Ok(Rational64::new(8, 7)),
            8 => Ok(Rational64::new(17, 12)),
            9 => Ok(Rational64::new(4, 3)),
            _ => Err(Error::Unsupported(format!("resurgence for {n} general points"))),
        },
    }
}

/// `α(I)` of the reduced configuration.
pub fn alpha_of_ideal(kind: ConfigKind) -> Result<u32> {
    match kind {
        ConfigKind::ConicUniform { s, .. } if s != 1 => Err(Error::Unsupported("α of non-reduced configurations".into())),
        ConfigKind::ConicUniform { n, .. } | ConfigKind::GeneralSimple { n } if n > 0 => alpha_symbolic(kind, 1),
        _ => Err(Error::InvalidArgument("empty configuration".into())),
    }
}

/// `reg(I)` of the reduced configuration: least `t > 0` with
/// `dim (R/I)_t = dim (R/I)_{t-1}`.
pub fn reg_of_ideal(kind: ConfigKind) -> Result<u32> {
    let hilbert: Box<dyn Fn(u32) -> u32> = match kind {
        ConfigKind::ConicUniform { n, s: 1 } if n > 0 => {
            Box::new(move |t| if t == 0 { 1 } else { n.min(2 * t + 1) })
        }
        ConfigKind::GeneralSimple { n } if (1..=9).contains(&n) => Box::new(move |t| n.min((t + 1) * (t + 2) / 2)),
        _ => return Err(Error::Unsupported("reg for this configuration".into())),
    };
    Ok((1..).find(|&t| hilbert(t) == hilbert(t - 1)).expect("Hilbert function stabilizes"))
}

/// `(α/γ, reg/γ)`, the bounds `α(I)/γ(I) ≤ ρ(I) ≤ reg(I)/γ(I)`.
pub fn rho_bounds(alpha: u32, gamma: Rational64, reg: u32) -> Result<(Rational64, Rational64)> {
    if gamma <= Rational64::from_integer(0) {
        return Err(Error::InvalidArgument("γ must be positive".into()));
    }
    Ok((Rational64::from_integer(alpha as i64) / gamma, Rational64::from_integer(reg as i64) / gamma))
}

/// Decides `I^(m) ⊆ I^r` from `α(I)`, `reg(I)` and `α(I^(m))` alone.
pub fn alpha_reg_rule(alpha_i: u32, reg_i: u32, alpha_sym_m: u32, r: u32) -> Verdict {
    let certificate = Certificate::Alpha {
        alpha_symbolic: alpha_sym_m,
        r,
        alpha: alpha_i,
        reg: reg_i,
    };
    let (a, rr) = (alpha_sym_m as u64, r as u64);
    if alpha_i == reg_i {
        return Verdict {
            contains: Some(a >= rr * alpha_i as u64),
            method: Method::AlphaReg,
            certificate,
        };
    }
    let contains = if a >= rr * reg_i as u64 {
        Some(true)
    } else if a < rr * alpha_i as u64 {
        Some(false)
    } else {
        None
    };
    Verdict {
        contains,
        method: Method::BoundOnly,
        certificate,
    }
}

/// `dim I(mZ)_t` for `n ≥ 5` points on the conic.
pub fn hilbert_conic(n: u32, m: u32, t: u32) -> Result<i64> {
    if n < 5 {
        return Err(Error::InvalidArgument(format!("hilbert_conic needs n >= 5, got {n}")));
    }
    if t < 2 * m {
        return Ok(0);
    }
    let q = q_single(n, m, t)? as i64;
    let (n, m, t) = (n as i64, m as i64, t as i64);
    let binom2 = |x: i64| x * (x - 1) / 2;
    Ok(binom2(t - 2 * q + 2) - n * binom2(m - q + 1))
}

/// Two sufficient conditions for `I^(m) ⊆ I^r` in the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SufficiencyBounds {
    /// `m ≥ 2r`, or `r = 1` where `I^(m) ⊆ I` holds for every `m`.
    pub proven: bool,
    /// `m ≥ 2r - 1`: conjectured to be sufficient.
    pub conjectured: bool,
}

pub fn sufficiency_bounds(m: u32, r: u32) -> Result<SufficiencyBounds> {
    require_positive(&[("m", m), ("r", r)])?;
    Ok(SufficiencyBounds {
        proven: m >= 2 * r || r == 1,
        conjectured: m + 1 >= 2 * r,
    })
}

/// Pairs `(m_s, r_s)` with `m_s/r_s` increasing to `ρ` from below, each a
/// non-containment for the given family: `r = q·s`, `m = p·s - 1` where
/// `ρ = p/q`.
pub fn below_threshold_sequence(kind: ConfigKind, len: u32) -> Result<Vec<(u32, u32)>> {
    let rho = resurgence(kind)?;
    let (p, q) = (*rho.numer() as u32, *rho.denom() as u32);
    Ok((2..len + 2).map(|s| (p * s - 1, q * s)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conic_factor_counts() {
        assert_eq!(q_single(5, 2, 4).unwrap(), 2);
        assert_eq!(q_single(5, 1, 3).unwrap(), 0);
        assert_eq!(q_single(7, 1, 3).unwrap(), 1);
        assert!(matches!(q_single(5, 2, 3), Err(Error::Hypothesis(_))));
        assert_eq!(q_power(5, 2, 5, 1).unwrap(), 1);
        assert_eq!(q_power(7, 2, 8, 1).unwrap(), 0);
        assert_eq!(q_power(7, 3, 12, 1).unwrap(), 0);
        for n in 5..12 {
            for m in 1..5 {
                for t in 2 * m..2 * m + 2 * n {
                    assert_eq!(q_single(n, m, t).unwrap() as i64, q_single_closed(n, m, t));
                }
            }
        }
    }

    #[test]
    fn conic_criteria() {
        assert_eq!(contains_conic(4, 3, 2).unwrap().contains, Some(true));
        assert_eq!(contains_conic(5, 2, 2).unwrap().contains, Some(false));
        assert_eq!(contains_conic(5, 5, 4).unwrap().contains, Some(true));
        assert_eq!(contains_conic(5, 2, 2).unwrap().method, Method::ConicOdd);
    }

    #[test]
    fn general_criteria() {
        assert_eq!(contains_general(9, 2, 2).unwrap().contains, Some(false));
        assert_eq!(contains_general(7, 8, 7).unwrap().contains, Some(true));
        assert_eq!(contains_general(8, 1, 1).unwrap().contains, Some(true));
        assert_eq!(contains_general(7, 1, 1).unwrap().method, Method::GeneralSeven);
        assert_eq!(contains_general(3, 2, 2).unwrap().method, Method::GeneralViaConicOdd);
        assert!(matches!(contains_general(12, 1, 1), Err(Error::Unsupported(_))));
    }

    #[test]
    fn alpha_gamma_rho() {
        let g = |n| ConfigKind::GeneralSimple { n };
        assert_eq!(alpha_symbolic(g(6), 3).unwrap(), 8);
        assert_eq!(alpha_symbolic(g(8), 2).unwrap(), 6);
        assert_eq!(alpha_symbolic(g(2), 3).unwrap(), 3);
        assert_eq!(gamma_value(g(6)).unwrap(), Rational64::new(12, 5));
        assert_eq!(gamma_value(g(9)).unwrap(), Rational64::from_integer(3));
        assert_eq!(gamma_value(g(1)).unwrap(), Rational64::from_integer(1));
        assert_eq!(resurgence(ConfigKind::ConicUniform { n: 7, s: 1 }).unwrap(), Rational64::new(8, 7));
        assert_eq!(resurgence(g(8)).unwrap(), Rational64::new(17, 12));
        assert_eq!(resurgence(ConfigKind::ConicUniform { n: 6, s: 1 }).unwrap(), Rational64::from_integer(1));
        assert_eq!(alpha_symbolic(ConfigKind::ConicUniform { n: 6, s: 2 }, 3).unwrap(), 12);
    }

    #[test]
    fn ideal_invariants() {
        let g = |n| ConfigKind::GeneralSimple { n };
        assert_eq!(reg_of_ideal(g(6)).unwrap(), 3);
        assert_eq!(reg_of_ideal(g(8)).unwrap(), 4);
        assert_eq!(reg_of_ideal(g(1)).unwrap(), 1);
        assert_eq!(alpha_of_ideal(g(8)).unwrap(), 3);
        assert_eq!(reg_of_ideal(ConfigKind::ConicUniform { n: 5, s: 1 }).unwrap(), 3);
        let gamma6 = gamma_value(g(6)).unwrap();
        assert_eq!(rho_bounds(3, gamma6, 3).unwrap(), (Rational64::new(5, 4), Rational64::new(5, 4)));
        let gamma8 = gamma_value(g(8)).unwrap();
        assert_eq!(rho_bounds(3, gamma8, 4).unwrap(), (Rational64::new(17, 16), Rational64::new(17, 12)));
    }

    #[test]
    fn alpha_reg() {
        assert_eq!(alpha_reg_rule(3, 3, 8, 2).contains, Some(true));
        assert_eq!(alpha_reg_rule(3, 4, 3, 2).contains, Some(false));
        let v = alpha_reg_rule(3, 4, 7, 2);
        assert_eq!((v.contains, v.method), (None, Method::BoundOnly));
    }

    #[test]
    fn conic_hilbert_values() {
        assert_eq!(hilbert_conic(5, 2, 4).unwrap(), 1);
        assert_eq!(hilbert_conic(5, 1, 3).unwrap(), 5);
        assert_eq!(hilbert_conic(5, 1, 2).unwrap(), 1);
        assert_eq!(hilbert_conic(5, 2, 3).unwrap(), 0);
    }

    #[test]
    fn sufficiency() {
        let b = sufficiency_bounds(4, 2).unwrap();
        assert!(b.proven && b.conjectured);
        let b = sufficiency_bounds(3, 2).unwrap();
        assert!(!b.proven && b.conjectured);
        let b = sufficiency_bounds(1, 1).unwrap();
        assert!(b.proven && b.conjectured);
    }
}
