//! Weighted generalized power (Hölder) means and their companions.
//!
//! `M_r(w, x) = (Σ ŵ_i x_i^r)^(1/r)` with `ŵ_i = w_i / Σ w`, extended to
//! `r = 0` (weighted geometric mean) and `r = ±∞` (max / min). Entries with
//! zero weight are dropped before anything else is computed, so `0 · ∞`
//! never appears.
//!
//! Finite non-zero orders are evaluated in the log domain, which keeps
//! orders like `±50` on probabilities from under- or overflowing.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Order of a power mean on the extended real line.
///
/// The derived ordering is the natural one: `NegInfinity < Finite(_) < PosInfinity`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub enum ExtendedOrder {
    NegInfinity,
    Finite(f64),
    PosInfinity,
}

impl ExtendedOrder {
    /// Builds a finite order; rejects NaN and infinities.
    pub fn finite(r: f64) -> Result<Self> {
        if r.is_finite() {
            Ok(ExtendedOrder::Finite(r))
        } else {
            Err(Error::InvalidOrder(r))
        }
    }

    /// Maps `±inf` onto the infinite tags; rejects NaN.
    pub fn from_f64(r: f64) -> Result<Self> {
        if r.is_nan() {
            Err(Error::InvalidOrder(r))
        } else if r == f64::INFINITY {
            Ok(ExtendedOrder::PosInfinity)
        } else if r == f64::NEG_INFINITY {
            Ok(ExtendedOrder::NegInfinity)
        } else {
            Ok(ExtendedOrder::Finite(r))
        }
    }

    pub fn value(self) -> f64 {
        match self {
            ExtendedOrder::NegInfinity => f64::NEG_INFINITY,
            ExtendedOrder::Finite(r) => r,
            ExtendedOrder::PosInfinity => f64::INFINITY,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedOrder::Finite(_))
    }

    /// The finite value, if any.
    pub fn as_finite(self) -> Option<f64> {
        match self {
            ExtendedOrder::Finite(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for ExtendedOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedOrder::NegInfinity => f.write_str("-inf"),
            ExtendedOrder::PosInfinity => f.write_str("inf"),
            ExtendedOrder::Finite(r) => write!(f, "{r}"),
        }
    }
}

impl FromStr for ExtendedOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t.to_ascii_lowercase().as_str() {
            "inf" | "+inf" | "infinity" | "+infinity" => Ok(ExtendedOrder::PosInfinity),
            "-inf" | "-infinity" => Ok(ExtendedOrder::NegInfinity),
            _ => {
                let r: f64 = t.parse().map_err(|_| Error::InvalidOrder(f64::NAN))?;
                ExtendedOrder::from_f64(r)
            }
        }
    }
}

/// A non-empty vector with entries in `[0, +∞]`.
#[derive(Debug, Clone, PartialEq)]
pub struct NonNegativeVector(Vec<f64>);

impl NonNegativeVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty);
        }
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, v)| v.is_nan() || **v < 0.0) {
            return Err(Error::InvalidValue { index, value });
        }
        Ok(NonNegativeVector(values))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl Deref for NonNegativeVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for NonNegativeVector {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        NonNegativeVector::new(values)
    }
}

impl TryFrom<&[f64]> for NonNegativeVector {
    type Error = Error;

    fn try_from(values: &[f64]) -> Result<Self> {
        NonNegativeVector::new(values.to_vec())
    }
}

/// Weights and values restricted to the support of the weights.
#[derive(Debug, Clone)]
pub(crate) struct Support {
    /// Original index of each retained entry.
    pub index: Vec<usize>,
    /// `ln(w_i / Σw)`.
    pub log_w: Vec<f64>,
    /// `w_i / Σw`.
    pub w_hat: Vec<f64>,
    pub x: Vec<f64>,
}

impl Support {
    /// Validates raw slices and drops zero-weight entries.
    pub fn new(w: &[f64], x: &[f64]) -> Result<Self> {
        if w.len() != x.len() {
            return Err(Error::LengthMismatch {
                left: w.len(),
                right: x.len(),
            });
        }
        if w.is_empty() {
            return Err(Error::Empty);
        }
        for (index, (&wi, &xi)) in w.iter().zip(x).enumerate() {
            if wi.is_nan() || wi < 0.0 {
                return Err(Error::InvalidValue { index, value: wi });
            }
            if wi.is_infinite() {
                return Err(Error::NonFiniteWeight { index });
            }
            if xi.is_nan() || xi < 0.0 {
                return Err(Error::InvalidValue { index, value: xi });
            }
        }
        let total: f64 = w.iter().sum();
        if total <= 0.0 {
            return Err(Error::ZeroTotalWeight);
        }
        let ln_total = total.ln();
        let mut s = Support {
            index: Vec::new(),
            log_w: Vec::new(),
            w_hat: Vec::new(),
            x: Vec::new(),
        };
        for (i, (&wi, &xi)) in w.iter().zip(x).enumerate() {
            if wi > 0.0 {
                s.index.push(i);
                s.log_w.push(wi.ln() - ln_total);
                s.w_hat.push(wi / total);
                s.x.push(xi);
            }
        }
        Ok(s)
    }

    pub fn max_x(&self) -> f64 {
        self.x.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min_x(&self) -> f64 {
        self.x.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Natural logarithm of `M_r` over this support.
    pub fn log_mean(&self, r: ExtendedOrder) -> Result<f64> {
        let r = match r {
            ExtendedOrder::PosInfinity => return Ok(self.max_x().ln()),
            ExtendedOrder::NegInfinity => return Ok(self.min_x().ln()),
            ExtendedOrder::Finite(r) if r.is_finite() => r,
            ExtendedOrder::Finite(r) => return Err(Error::InvalidOrder(r)),
        };
        let has_zero = self.x.contains(&0.0);
        let has_inf = self.x.contains(&f64::INFINITY);

        if r == 0.0 {
            return match (has_zero, has_inf) {
                (true, true) => Err(Error::Discontinuity),
                (true, false) => Ok(f64::NEG_INFINITY),
                (false, true) => Ok(f64::INFINITY),
                (false, false) => Ok(self.w_hat.iter().zip(&self.x).map(|(w, x)| w * x.ln()).sum()),
            };
        }
        if r < 0.0 && has_zero {
            return Ok(f64::NEG_INFINITY);
        }
        if r > 0.0 && has_inf {
            return Ok(f64::INFINITY);
        }

        let t: Vec<f64> = self.x.iter().map(|x| r * x.ln()).collect();
        // Near r = 0 the sum Σŵ e^t sits next to 1; expm1/ln_1p keep the
        // leading digits that logsumexp would cancel away.
        if t.iter().all(|v| v.abs() <= 0.5) {
            let s: f64 = self.w_hat.iter().zip(&t).map(|(w, ti)| w * ti.exp_m1()).sum();
            return Ok(s.ln_1p() / r);
        }
        let a: Vec<f64> = self.log_w.iter().zip(&t).map(|(lw, ti)| lw + ti).collect();
        Ok(log_sum_exp(&a) / r)
    }
}

/// `ln Σ exp(a_i)` with the usual max shift.
pub fn log_sum_exp(a: &[f64]) -> f64 {
    let m = a.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if m.is_infinite() {
        return m;
    }
    m + a.iter().map(|v| (v - m).exp()).sum::<f64>().ln()
}

/// Natural logarithm of the weighted power mean on raw slices.
pub(crate) fn log_power_mean(w: &[f64], x: &[f64], r: ExtendedOrder) -> Result<f64> {
    Support::new(w, x)?.log_mean(r)
}

/// Weighted generalized power mean `M_r(w, x)`.
///
/// `r = ±∞` return the max / min of `x` over the support of `w`; `r = 0`
/// is the weighted geometric mean. A zero value with `r ≤ 0` drives the
/// mean to 0, an infinite value with `r ≥ 0` drives it to `+∞`, and the
/// order-0 mean of a vector holding both is reported as
/// [`Error::Discontinuity`].
pub fn power_mean(w: &NonNegativeVector, x: &NonNegativeVector, r: ExtendedOrder) -> Result<f64> {
    let s = Support::new(w, x)?;
    match r {
        ExtendedOrder::PosInfinity => Ok(s.max_x()),
        ExtendedOrder::NegInfinity => Ok(s.min_x()),
        ExtendedOrder::Finite(_) => Ok(s.log_mean(r)?.exp()),
    }
}

/// Closed, open or half-open real interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lower: f64,
    pub upper: f64,
    pub lower_open: bool,
    pub upper_open: bool,
}

impl Interval {
    pub fn closed(lower: f64, upper: f64) -> Self {
        Interval {
            lower,
            upper,
            lower_open: false,
            upper_open: false,
        }
    }

    pub fn open(lower: f64, upper: f64) -> Self {
        Interval {
            lower,
            upper,
            lower_open: true,
            upper_open: true,
        }
    }

    pub fn contains(&self, v: f64) -> bool {
        let above = if self.lower_open {
            v > self.lower
        } else {
            v >= self.lower
        };
        let below = if self.upper_open {
            v < self.upper
        } else {
            v <= self.upper
        };
        above && below
    }
}

type RealFn = Box<dyn Fn(f64) -> f64 + Send + Sync>;

/// A strictly monotone averaging function with its inverse, for
/// Kolmogorov–Nagumo (quasi-arithmetic) means.
pub struct KnFunctionPair {
    f: RealFn,
    f_inv: RealFn,
    domain: Interval,
}

impl fmt::Debug for KnFunctionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("KnFunctionPair")
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}

impl KnFunctionPair {
    pub fn new(
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
        f_inv: impl Fn(f64) -> f64 + Send + Sync + 'static,
        domain: Interval,
    ) -> Self {
        KnFunctionPair {
            f: Box::new(f),
            f_inv: Box::new(f_inv),
            domain,
        }
    }

    pub fn identity() -> Self {
        Self::new(|x| x, |y| y, Interval::closed(f64::NEG_INFINITY, f64::INFINITY))
    }

    /// `ln` / `exp`: yields the weighted geometric mean.
    pub fn logarithmic() -> Self {
        Self::new(f64::ln, f64::exp, Interval::open(0.0, f64::INFINITY))
    }

    /// `x^r` / `y^(1/r)`; `r = 0` falls back to [`KnFunctionPair::logarithmic`].
    pub fn power(r: f64) -> Result<Self> {
        if !r.is_finite() {
            return Err(Error::InvalidOrder(r));
        }
        if r == 0.0 {
            return Ok(Self::logarithmic());
        }
        let domain = if r > 0.0 {
            Interval {
                lower: 0.0,
                upper: f64::INFINITY,
                lower_open: false,
                upper_open: true,
            }
        } else {
            Interval::open(0.0, f64::INFINITY)
        };
        Ok(Self::new(move |x| x.powf(r), move |y| y.powf(1.0 / r), domain))
    }

    pub fn apply(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    pub fn invert(&self, y: f64) -> f64 {
        (self.f_inv)(y)
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    /// Checks `f_inv(f(x)) ≈ x` (relative) on the in-domain samples.
    pub fn verify_inverse(&self, samples: &[f64], tol: f64) -> bool {
        samples.iter().filter(|&&x| self.domain.contains(x)).all(|&x| {
            let back = self.invert(self.apply(x));
            (back - x).abs() <= tol * x.abs().max(1.0)
        })
    }
}

/// Weighted `f`-mean `f⁻¹(Σ ŵ_i f(x_i))`.
pub fn kn_mean(w: &NonNegativeVector, x: &NonNegativeVector, f: &KnFunctionPair) -> Result<f64> {
    let s = Support::new(w, x)?;
    if let Some((&index, &value)) = s.index.iter().zip(&s.x).find(|(_, &v)| !f.domain.contains(v)) {
        return Err(Error::OutsideDomain { index, value });
    }
    let acc: f64 = s.w_hat.iter().zip(&s.x).map(|(w, &x)| w * f.apply(x)).sum();
    Ok(f.invert(acc))
}

/// Probability vector `ρ_r(w, x)`; entries outside the support of `w` are 0.
#[derive(Debug, Clone, PartialEq)]
pub struct EscortDistribution(Vec<f64>);

impl EscortDistribution {
    pub fn probabilities(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl Deref for EscortDistribution {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

pub(crate) fn escort_raw(w: &[f64], x: &[f64], r: ExtendedOrder) -> Result<Vec<f64>> {
    let s = Support::new(w, x)?;
    let mut out = vec![0.0; w.len()];
    match r {
        ExtendedOrder::PosInfinity | ExtendedOrder::NegInfinity => {
            let target = if r == ExtendedOrder::PosInfinity {
                s.max_x()
            } else {
                s.min_x()
            };
            let ties: Vec<usize> = s
                .index
                .iter()
                .zip(&s.x)
                .filter(|(_, &v)| v == target)
                .map(|(&i, _)| i)
                .collect();
            let mass = 1.0 / ties.len() as f64;
            for i in ties {
                out[i] = mass;
            }
        }
        ExtendedOrder::Finite(r) if !r.is_finite() => return Err(Error::InvalidOrder(r)),
        ExtendedOrder::Finite(0.0) => {
            for (&i, &wh) in s.index.iter().zip(&s.w_hat) {
                out[i] = wh;
            }
        }
        ExtendedOrder::Finite(r) => {
            if let Some(&value) =
                s.x.iter()
                    .find(|&&v| (r < 0.0 && v == 0.0) || (r > 0.0 && v == f64::INFINITY))
            {
                return Err(Error::DivergentEscort { order: r, value });
            }
            let a: Vec<f64> = s.log_w.iter().zip(&s.x).map(|(lw, x)| lw + r * x.ln()).collect();
            let lse = log_sum_exp(&a);
            if lse == f64::NEG_INFINITY {
                return Err(Error::DegenerateEscort);
            }
            let mut total = 0.0;
            for (&i, ai) in s.index.iter().zip(&a) {
                out[i] = (ai - lse).exp();
                total += out[i];
            }
            for v in &mut out {
                *v /= total;
            }
        }
    }
    Ok(out)
}

/// Escort distribution `ρ_r(w, x) = {w_k x_k^r / Σ_i w_i x_i^r}`.
///
/// At `r = ±∞` the mass is spread uniformly over the arg-max / arg-min of
/// `x` on the support.
pub fn escort_distribution(
    w: &NonNegativeVector,
    x: &NonNegativeVector,
    r: ExtendedOrder,
) -> Result<EscortDistribution> {
    escort_raw(w, x, r).map(EscortDistribution)
}

/// `dM_r/dr = (1/r) · M_r · ln(M_0(ρ_r, x) / M_r)` for finite `r ≠ 0`.
pub fn power_mean_derivative(w: &NonNegativeVector, x: &NonNegativeVector, r: f64) -> Result<f64> {
    if !r.is_finite() {
        return Err(Error::InvalidOrder(r));
    }
    if r == 0.0 {
        return Err(Error::ZeroOrder);
    }
    let s = Support::new(w, x)?;
    if let Some((&index, &value)) = s.index.iter().zip(&s.x).find(|(_, &v)| v == 0.0 || v.is_infinite()) {
        return Err(Error::NonPositiveValue { index, value });
    }
    let order = ExtendedOrder::Finite(r);
    let ln_mr = s.log_mean(order)?;
    let rho = escort_raw(w, x, order)?;
    let ln_m0: f64 = s.index.iter().zip(&s.x).map(|(&i, x)| rho[i] * x.ln()).sum();
    Ok(ln_mr.exp() * (ln_m0 - ln_mr) / r)
}
