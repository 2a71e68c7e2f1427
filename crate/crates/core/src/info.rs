//! Shifted Rényi entropy, divergence and cross-entropy, plus the quantities
//! that hang off them: the equivalent probability function, the information
//! potential and the derivative of the spectrum in the order.
//!
//! The order `r` is the shifted one, `r = α − 1`: `r = 0` is Shannon,
//! `r = 1` is Rényi's quadratic entropy, `r = −1` is Hartley. Every quantity
//! is a logarithm of a weighted power mean, so the whole extended line
//! `r ∈ [−∞, +∞]` is covered without special cases.
//!
//! Values are returned in the caller's [`LogBase`]; natural logarithms are
//! used internally and converted on output.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::means::{escort_raw, log_power_mean, ExtendedOrder, Support};
use crate::measures::{align, Distribution, MassMeasure};

/// Base of the logarithm used to report information values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogBase(f64);

impl LogBase {
    pub const BITS: LogBase = LogBase(2.0);
    pub const NATS: LogBase = LogBase(std::f64::consts::E);

    pub fn new(b: f64) -> Result<Self> {
        if b.is_finite() && b > 1.0 {
            Ok(LogBase(b))
        } else {
            Err(Error::InvalidBase(b))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `ln b`.
    pub fn ln(self) -> f64 {
        if self.0 == 2.0 {
            std::f64::consts::LN_2
        } else {
            self.0.ln()
        }
    }

    /// Converts a value in nats into this base.
    pub fn from_nats(self, v: f64) -> f64 {
        v / self.ln()
    }

    /// `b^x`.
    pub fn pow(self, x: f64) -> f64 {
        (x * self.ln()).exp()
    }
}

impl Default for LogBase {
    fn default() -> Self {
        LogBase::BITS
    }
}

impl fmt::Display for LogBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == std::f64::consts::E {
            f.write_str("e")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl FromStr for LogBase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "e" | "E" => Ok(LogBase::NATS),
            t => LogBase::new(t.parse().map_err(|_| Error::InvalidBase(f64::NAN))?),
        }
    }
}

/// An information value (entropy, divergence or cross-entropy), possibly `±∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyValue {
    pub value: f64,
    pub base: LogBase,
    pub order: ExtendedOrder,
}

impl EntropyValue {
    fn from_nats(nats: f64, base: LogBase, order: ExtendedOrder) -> Self {
        EntropyValue {
            value: base.from_nats(nats),
            base,
            order,
        }
    }
}

/// `ln M_r(m, m)` for a validated measure; cannot fail since the weights are
/// positive and finite on the support.
fn ln_self_mean(m: &MassMeasure, r: ExtendedOrder) -> f64 {
    log_power_mean(m.weights(), m.weights(), r).expect("mass measure weights are valid power-mean inputs")
}

fn nonzero_finite(r: f64) -> Result<f64> {
    if !r.is_finite() {
        Err(Error::InvalidOrder(r))
    } else if r == 0.0 {
        Err(Error::ZeroOrder)
    } else {
        Ok(r)
    }
}

/// Shifted Rényi entropy `H̃_r(m) = −log_b M_r(m, m)`.
///
/// For a measure of total mass `M ≠ 1` the result is displaced by
/// `−log_b M` relative to the entropy of the normalized distribution.
pub fn shifted_entropy(m: &MassMeasure, r: ExtendedOrder, base: LogBase) -> EntropyValue {
    EntropyValue::from_nats(-ln_self_mean(m, r), base, r)
}

/// Shifted Rényi divergence `D̃_r(p‖q) = log_b M_r(p, p/q)`.
///
/// The ratio is taken over `supp(p)` with outcomes matched by label; it
/// fails if `q` vanishes where `p` does not. `r = 0` is the Kullback–Leibler
/// divergence when both arguments are distributions.
pub fn shifted_divergence(p: &MassMeasure, q: &MassMeasure, r: ExtendedOrder, base: LogBase) -> Result<EntropyValue> {
    let mut w = Vec::new();
    let mut x = Vec::new();
    for e in align(p, q)?.into_iter().filter(|e| e.p > 0.0) {
        if e.q == 0.0 {
            return Err(Error::SupportViolation {
                label: e.label.to_string(),
            });
        }
        w.push(e.p);
        x.push(e.p / e.q);
    }
    let nats = log_power_mean(&w, &x, r)?;
    Ok(EntropyValue::from_nats(nats, base, r))
}

/// Shifted Rényi cross-entropy `X̃_r(p, q) = −log_b M_r(p, q)`.
///
/// Zeros of `q` on `supp(p)` are allowed and may yield `+∞`.
pub fn shifted_cross_entropy(
    p: &MassMeasure,
    q: &MassMeasure,
    r: ExtendedOrder,
    base: LogBase,
) -> Result<EntropyValue> {
    let (w, x): (Vec<f64>, Vec<f64>) = align(p, q)?
        .into_iter()
        .filter(|e| e.p > 0.0)
        .map(|e| (e.p, e.q))
        .unzip();
    if x.iter().all(|&v| v == 0.0) {
        return Err(Error::DegenerateCrossEntropy);
    }
    let nats = -log_power_mean(&w, &x, r)?;
    Ok(EntropyValue::from_nats(nats, base, r))
}

fn alpha_to_order(alpha: f64) -> Result<ExtendedOrder> {
    if alpha.is_nan() {
        return Err(Error::InvalidOrder(alpha));
    }
    ExtendedOrder::from_f64(alpha - 1.0)
}

/// Classic Rényi entropy of order `α`; identical to [`shifted_entropy`] at `r = α − 1`.
pub fn standard_entropy(m: &MassMeasure, alpha: f64, base: LogBase) -> Result<EntropyValue> {
    Ok(shifted_entropy(m, alpha_to_order(alpha)?, base))
}

/// Classic Rényi divergence of order `α`; identical to [`shifted_divergence`] at `r = α − 1`.
pub fn standard_divergence(p: &MassMeasure, q: &MassMeasure, alpha: f64, base: LogBase) -> Result<EntropyValue> {
    shifted_divergence(p, q, alpha_to_order(alpha)?, base)
}

/// Equivalent probability `π_r = b^(−H̃_r) = M_r(m, m)`; independent of the base.
pub fn equivalent_probability(m: &MassMeasure, r: ExtendedOrder) -> f64 {
    match r {
        ExtendedOrder::PosInfinity => m.support_extremes().1,
        ExtendedOrder::NegInfinity => m.support_extremes().0,
        ExtendedOrder::Finite(_) => ln_self_mean(m, r).exp(),
    }
}

/// Information potential `Ṽ_r = Σ ŵ_i w_i^r = M_r(m, m)^r = b^(−r·H̃_r)`.
///
/// For a distribution this is the `r`-th moment `E{P^r}`. Only finite
/// orders are accepted.
pub fn information_potential(m: &MassMeasure, r: ExtendedOrder) -> Result<f64> {
    match r {
        ExtendedOrder::Finite(v) if v.is_finite() => Ok((v * ln_self_mean(m, r)).exp()),
        other => Err(Error::InvalidOrder(other.value())),
    }
}

/// Step used by the central difference at `r = 0`.
pub const DERIVATIVE_STEP: f64 = 1e-5;

/// `dH̃_r/dr`, always `≤ 0`.
///
/// For `r ≠ 0` this is `−D̃_0(ρ_r ‖ P) / r²` with `ρ_r` the escort of the
/// normalized measure. At `r = 0` a central difference with step
/// [`DERIVATIVE_STEP`] refined by one Richardson level is returned.
pub fn entropy_derivative(m: &MassMeasure, r: f64, base: LogBase) -> Result<f64> {
    if !r.is_finite() {
        return Err(Error::InvalidOrder(r));
    }
    if r == 0.0 {
        let h_at = |t: f64| shifted_entropy(m, ExtendedOrder::Finite(t), base).value;
        let h = DERIVATIVE_STEP;
        let coarse = (h_at(h) - h_at(-h)) / (2.0 * h);
        let fine = (h_at(h / 2.0) - h_at(-h / 2.0)) / h;
        return Ok(((4.0 * fine - coarse) / 3.0).min(0.0));
    }
    let w = m.weights();
    let s = Support::new(w, w)?;
    let rho = escort_raw(w, w, ExtendedOrder::Finite(r))?;
    let kl: f64 = s
        .index
        .iter()
        .zip(&s.log_w)
        .filter(|(&i, _)| rho[i] > 0.0)
        .map(|(&i, lp)| rho[i] * (rho[i].ln() - lp))
        .sum();
    Ok(-base.from_nats(kl.max(0.0)) / (r * r))
}

/// The escort distribution `ρ_r(m)` as a measure with the same labels.
pub fn escort_measure(m: &MassMeasure, r: ExtendedOrder) -> Result<MassMeasure> {
    m.with_weights(escort_raw(m.weights(), m.weights(), r)?)
}

/// Rewrites `H̃_r` through Shannon quantities of the escort `ρ_r`:
///
/// * `(1/r)·D̃_0(ρ_r‖P) + X̃_0(ρ_r, P)`
/// * `(−1/r)·H̃_0(ρ_r) + ((r+1)/r)·X̃_0(ρ_r, P)`
///
/// `P` is the normalized measure; for `M ≠ 1` both are shifted by
/// `−log_b M` so they remain comparable with [`shifted_entropy`] of `m`.
pub fn entropy_via_escort_rewrite(m: &MassMeasure, r: f64, base: LogBase) -> Result<(EntropyValue, EntropyValue)> {
    let r = nonzero_finite(r)?;
    let order = ExtendedOrder::Finite(r);
    let shannon = ExtendedOrder::Finite(0.0);
    let p = m.normalize();
    let rho = escort_measure(&p, order)?;
    let kl = shifted_divergence(&rho, &p, shannon, base)?.value;
    let cross = shifted_cross_entropy(&rho, &p, shannon, base)?.value;
    let h0 = shifted_entropy(&rho, shannon, base).value;
    let displacement = base.from_nats(m.total_mass().ln());

    let by_divergence = kl / r + cross - displacement;
    let by_entropy = -h0 / r + (r + 1.0) / r * cross - displacement;
    Ok((
        EntropyValue {
            value: by_divergence,
            base,
            order,
        },
        EntropyValue {
            value: by_entropy,
            base,
            order,
        },
    ))
}

/// `−((r+1)/r) · D̃_{−(r+1)}(q‖p)`, which equals `D̃_r(p‖q)` for
/// distributions sharing the same support.
pub fn skew_symmetric_divergence(p: &MassMeasure, q: &MassMeasure, r: f64, base: LogBase) -> Result<EntropyValue> {
    let r = nonzero_finite(r)?;
    if let Some(e) = align(p, q)?.into_iter().find(|e| (e.p > 0.0) != (e.q > 0.0)) {
        return Err(Error::SupportMismatch {
            label: e.label.to_string(),
        });
    }
    let reverse = shifted_divergence(q, p, ExtendedOrder::Finite(-(r + 1.0)), base)?.value;
    let factor = -(r + 1.0) / r;
    // factor is exactly 0 at r = -1; keep 0·(finite) from turning into -0.
    let value = if factor == 0.0 { 0.0 } else { factor * reverse };
    Ok(EntropyValue {
        value,
        base,
        order: ExtendedOrder::Finite(r),
    })
}

/// Returns `(H̃_r(P), D̃_{−r}(P ‖ P·P))` where `P·P` is the entry-wise square.
pub fn self_information_check(p: &Distribution, r: f64, base: LogBase) -> Result<(EntropyValue, EntropyValue)> {
    let order = ExtendedOrder::finite(r)?;
    let squared = p.with_weights(p.weights().iter().map(|v| v * v).collect())?;
    let entropy = shifted_entropy(p, order, base);
    let divergence = shifted_divergence(p, &squared, ExtendedOrder::Finite(-r), base)?;
    Ok((entropy, divergence))
}

/// Returns `(H̃_r(normalize(m)), H̃_r(m) + log_b M)`.
pub fn mass_displacement_check(m: &MassMeasure, r: ExtendedOrder, base: LogBase) -> (EntropyValue, EntropyValue) {
    let normalized = shifted_entropy(&m.normalize(), r, base);
    let mut displaced = shifted_entropy(m, r, base);
    displaced.value += base.from_nats(m.total_mass().ln());
    (normalized, displaced)
}

/// `D̃_r(p‖q) − (X̃_r(p, q) − H̃_r(p))`.
///
/// Zero at `r = 0` (the Shannon decomposition); generally non-zero otherwise.
pub fn decomposition_gap(p: &MassMeasure, q: &MassMeasure, r: ExtendedOrder, base: LogBase) -> Result<f64> {
    let d = shifted_divergence(p, q, r, base)?.value;
    let x = shifted_cross_entropy(p, q, r, base)?.value;
    let h = shifted_entropy(p, r, base).value;
    Ok(d - (x - h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::from_counts;

    const UCB: [u64; 6] = [933, 585, 918, 792, 584, 714];
    const LOG2_6: f64 = 2.584_962_500_721_156_181_453_738_943_947_816_5;

    fn ucb() -> Distribution {
        from_counts(["A", "B", "C", "D", "E", "F"], &UCB).unwrap().normalize()
    }

    fn fin(r: f64) -> ExtendedOrder {
        ExtendedOrder::Finite(r)
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
    }

    const B: LogBase = LogBase::BITS;

    #[test]
    fn uniform_spectrum_is_flat() {
        let u = Distribution::uniform(6).unwrap();
        for r in [
            ExtendedOrder::NegInfinity,
            fin(-7.0),
            fin(-1.0),
            fin(0.0),
            fin(0.3),
            fin(1.0),
            fin(40.0),
            ExtendedOrder::PosInfinity,
        ] {
            assert!(close(shifted_entropy(&u, r, B).value, LOG2_6, 1e-12), "{r}");
            assert!(close(equivalent_probability(&u, r), 1.0 / 6.0, 1e-12));
        }
    }

    #[test]
    fn ucb_named_orders() {
        let p = ucb();
        // extended-precision values
        let cases = [
            (fin(-1.0), LOG2_6),
            (ExtendedOrder::PosInfinity, 2.278_287_598_415_133_6),
            (ExtendedOrder::NegInfinity, 2.954_196_310_386_875_4),
            (fin(1.0), 2.535_353_212_679_922_3),
            (fin(0.0), 2.559_538_070_453_432),
        ];
        for (r, expected) in cases {
            let h = shifted_entropy(&p, r, B).value;
            assert!((h - expected).abs() < 1e-12, "{r}: {h} vs {expected}");
        }
        let pi_inf = equivalent_probability(&p, ExtendedOrder::PosInfinity);
        assert!((pi_inf - 933.0 / 4526.0).abs() < 1e-15);
        let pi_neg = equivalent_probability(&p, ExtendedOrder::NegInfinity);
        assert!((pi_neg - 584.0 / 4526.0).abs() < 1e-15);
    }

    #[test]
    fn base_change_is_a_scalar() {
        let p = ucb();
        let bits = shifted_entropy(&p, fin(0.7), B).value;
        let nats = shifted_entropy(&p, fin(0.7), LogBase::NATS).value;
        assert!(close(nats / bits, std::f64::consts::LN_2, 1e-12));
        assert_eq!("e".parse::<LogBase>().unwrap(), LogBase::NATS);
        assert!(LogBase::new(1.0).is_err());
        assert!(LogBase::new(f64::INFINITY).is_err());
    }

    #[test]
    fn divergence_examples() {
        let p = Distribution::from_probabilities(vec![0.5, 0.5]).unwrap();
        let q = Distribution::from_probabilities(vec![0.25, 0.75]).unwrap();
        let kl = shifted_divergence(&p, &q, fin(0.0), B).unwrap().value;
        assert!((kl - 0.207_518_749_639_421_9).abs() < 1e-14);
        for r in [-3.0, -1.0, 0.0, 0.5, 2.0] {
            assert_eq!(shifted_divergence(&p, &p, fin(r), B).unwrap().value, 0.0);
        }
        let u = Distribution::uniform(6).unwrap();
        let ucb = ucb().into_measure();
        let u = MassMeasure::new(ucb.labels().to_vec(), u.weights().to_vec()).unwrap();
        for r in [-2.0, -0.5, 0.0, 1.0, 3.0] {
            let d = shifted_divergence(&ucb, &u, fin(r), B).unwrap().value;
            let h = shifted_entropy(&ucb, fin(r), B).value;
            assert!((d + h - LOG2_6).abs() < 1e-12);
        }
    }

    #[test]
    fn divergence_support_violation() {
        let p = Distribution::from_probabilities(vec![0.5, 0.5]).unwrap();
        let q = Distribution::from_probabilities(vec![1.0, 0.0]).unwrap();
        assert_eq!(
            shifted_divergence(&p, &q, fin(1.0), B),
            Err(Error::SupportViolation { label: "x2".into() })
        );
    }

    #[test]
    fn cross_entropy_examples() {
        let p = Distribution::from_probabilities(vec![1.0, 0.0]).unwrap();
        let q = Distribution::from_probabilities(vec![0.5, 0.5]).unwrap();
        assert!((shifted_cross_entropy(&p, &q, fin(0.0), B).unwrap().value - 1.0).abs() < 1e-15);

        let u = ucb();
        for r in [-2.0, 0.0, 1.5] {
            let x = shifted_cross_entropy(&u, &u, fin(r), B).unwrap().value;
            assert!((x - shifted_entropy(&u, fin(r), B).value).abs() < 1e-12);
        }

        // zero of q on supp(p): infinite for r <= 0
        let q0 = Distribution::from_probabilities(vec![0.0, 1.0]).unwrap();
        assert_eq!(
            shifted_cross_entropy(&q, &q0, fin(0.0), B).unwrap().value,
            f64::INFINITY
        );
        assert_eq!(
            shifted_cross_entropy(&q, &q0, fin(-1.0), B).unwrap().value,
            f64::INFINITY
        );
        assert!(shifted_cross_entropy(&q, &q0, fin(1.0), B).unwrap().value.is_finite());
        assert_eq!(
            shifted_cross_entropy(&p, &q0, fin(1.0), B),
            Err(Error::DegenerateCrossEntropy)
        );
    }

    #[test]
    fn standard_forms() {
        let p = ucb();
        let shannon = standard_entropy(&p, 1.0, B).unwrap();
        assert_eq!(shannon, shifted_entropy(&p, fin(0.0), B));
        assert!((standard_entropy(&p, 0.0, B).unwrap().value - LOG2_6).abs() < 1e-12);
        assert_eq!(standard_entropy(&p, 2.0, B).unwrap(), shifted_entropy(&p, fin(1.0), B));
        assert_eq!(
            standard_entropy(&p, f64::INFINITY, B).unwrap(),
            shifted_entropy(&p, ExtendedOrder::PosInfinity, B)
        );
        assert!(standard_entropy(&p, f64::NAN, B).is_err());

        let q = Distribution::from_probabilities(vec![0.5, 0.5]).unwrap();
        let r = Distribution::from_probabilities(vec![0.25, 0.75]).unwrap();
        let kl = standard_divergence(&q, &r, 1.0, B).unwrap();
        assert_eq!(kl, shifted_divergence(&q, &r, fin(0.0), B).unwrap());
        assert_eq!(standard_divergence(&q, &q, 2.0, B).unwrap().value, 0.0);
        // direct Σ p^α q^(1−α) at α = 0.5
        let direct = (0.5f64.sqrt() * 0.25f64.sqrt() + 0.5f64.sqrt() * 0.75f64.sqrt()).log2() / (0.5 - 1.0);
        assert!((standard_divergence(&q, &r, 0.5, B).unwrap().value - direct).abs() < 1e-14);
    }

    #[test]
    fn potential_examples() {
        let p = ucb();
        assert!((information_potential(&p, fin(0.0)).unwrap() - 1.0).abs() < 1e-15);
        let u = Distribution::uniform(6).unwrap();
        assert!((information_potential(&u, fin(1.0)).unwrap() - 1.0 / 6.0).abs() < 1e-15);
        let sum_sq: f64 = p.weights().iter().map(|v| v * v).sum();
        assert!((information_potential(&p, fin(1.0)).unwrap() - sum_sq).abs() < 1e-15);
        assert!((sum_sq - 0.172_497_431_738_729_97).abs() < 1e-15);
        assert!(information_potential(&p, ExtendedOrder::PosInfinity).is_err());
    }

    #[test]
    fn derivative_examples() {
        let u = Distribution::uniform(5).unwrap();
        for r in [-3.0, 0.0, 0.5, 10.0] {
            assert!(entropy_derivative(&u, r, B).unwrap().abs() < 1e-10);
        }
        let p = ucb();
        // −KL(ρ_1 ‖ P) in bits, extended precision
        let d1 = entropy_derivative(&p, 1.0, B).unwrap();
        assert!((d1 + 0.023_384_708_713_736_036).abs() < 1e-14);
        let h = 1e-5;
        let fd = (shifted_entropy(&p, fin(1.0 + h), B).value - shifted_entropy(&p, fin(1.0 - h), B).value) / (2.0 * h);
        assert!((d1 - fd).abs() <= 1e-4 * d1.abs());
    }

    #[test]
    fn derivative_at_zero_matches_half_variance() {
        // limit r -> 0: −Var_P(ln p) / (2 ln b)
        let d0 = entropy_derivative(&ucb(), 0.0, B).unwrap();
        let expected = -0.024_902_510_864_325_315;
        assert!((d0 - expected).abs() <= 1e-6 * expected.abs(), "{d0}");
    }

    #[test]
    fn escort_rewrites() {
        let p = ucb();
        for r in [-2.0, -0.5, 0.5, 1.0, 2.0] {
            let h = shifted_entropy(&p, fin(r), B).value;
            let (a, b) = entropy_via_escort_rewrite(&p, r, B).unwrap();
            assert!(close(a.value, h, 1e-12) && close(b.value, h, 1e-12), "{r}");
        }
        let u = Distribution::uniform(4).unwrap();
        let (a, b) = entropy_via_escort_rewrite(&u, 1.0, B).unwrap();
        assert!(close(a.value, 2.0, 1e-12) && close(b.value, 2.0, 1e-12));

        let two = Distribution::from_probabilities(vec![0.75, 0.25]).unwrap();
        let (a, b) = entropy_via_escort_rewrite(&two, 1.0, B).unwrap();
        let expected = 0.678_071_905_112_637_7;
        assert!((a.value - expected).abs() < 1e-14 && (b.value - expected).abs() < 1e-14);

        assert_eq!(entropy_via_escort_rewrite(&two, 0.0, B), Err(Error::ZeroOrder));

        let counts = from_counts(["A", "B", "C", "D", "E", "F"], &UCB).unwrap();
        let (a, _) = entropy_via_escort_rewrite(&counts, 1.5, B).unwrap();
        assert!(close(a.value, shifted_entropy(&counts, fin(1.5), B).value, 1e-12));
    }

    #[test]
    fn skew_symmetry() {
        let p = Distribution::from_probabilities(vec![0.2, 0.5, 0.3]).unwrap();
        let q = Distribution::from_probabilities(vec![0.4, 0.4, 0.2]).unwrap();
        for r in [0.5, 1.0, -0.3, -2.0] {
            let lhs = shifted_divergence(&p, &q, fin(r), B).unwrap().value;
            let rhs = skew_symmetric_divergence(&p, &q, r, B).unwrap().value;
            assert!(close(lhs, rhs, 1e-12), "{r}: {lhs} vs {rhs}");
        }
        assert_eq!(skew_symmetric_divergence(&p, &p, 0.5, B).unwrap().value, 0.0);
        // r = -1: both sides vanish
        assert!(shifted_divergence(&p, &q, fin(-1.0), B).unwrap().value.abs() < 1e-15);
        assert_eq!(skew_symmetric_divergence(&p, &q, -1.0, B).unwrap().value, 0.0);

        let q0 = Distribution::from_probabilities(vec![0.5, 0.5, 0.0]).unwrap();
        assert!(matches!(
            skew_symmetric_divergence(&p, &q0, 0.5, B),
            Err(Error::SupportMismatch { .. })
        ));
        assert_eq!(skew_symmetric_divergence(&p, &q, 0.0, B), Err(Error::ZeroOrder));
    }

    #[test]
    fn self_information() {
        let u = Distribution::uniform(8).unwrap();
        let (h, d) = self_information_check(&u, 2.0, B).unwrap();
        assert!(close(h.value, 3.0, 1e-12) && close(d.value, 3.0, 1e-12));

        let p = ucb();
        let (h, d) = self_information_check(&p, 1.0, B).unwrap();
        assert!((h.value - 2.535_353_212_679_922_3).abs() < 1e-12);
        assert!(close(h.value, d.value, 1e-12));

        let two = Distribution::from_probabilities(vec![0.9, 0.1]).unwrap();
        let (h, d) = self_information_check(&two, -2.0, B).unwrap();
        assert!((h.value - 1.736_965_594_166_206).abs() < 1e-12);
        assert!(close(h.value, d.value, 1e-9));
    }

    #[test]
    fn mass_displacement() {
        let counts = from_counts(["A", "B", "C", "D", "E", "F"], &UCB).unwrap();
        let raw = shifted_entropy(&counts, fin(-1.0), B).value;
        assert!((raw - (-9.559_058_368_545_736)).abs() < 1e-12);
        let (n, d) = mass_displacement_check(&counts, fin(-1.0), B);
        assert!(close(n.value, d.value, 1e-12));
        assert!((n.value - LOG2_6).abs() < 1e-12);

        let p = ucb();
        let (n, d) = mass_displacement_check(&p, fin(1.0), B);
        assert!(close(n.value, d.value, 1e-12));

        let doubled = p.scaled(2.0).unwrap();
        let shift = shifted_entropy(&p, fin(1.0), B).value - shifted_entropy(&doubled, fin(1.0), B).value;
        assert!((shift - 1.0).abs() < 1e-12);
    }

    #[test]
    fn shannon_decomposition_only_at_zero() {
        let p = Distribution::from_probabilities(vec![0.7, 0.2, 0.1]).unwrap();
        let q = Distribution::from_probabilities(vec![0.2, 0.3, 0.5]).unwrap();
        assert!(decomposition_gap(&p, &q, fin(0.0), B).unwrap().abs() < 1e-12);
        assert!(decomposition_gap(&p, &q, fin(1.0), B).unwrap().abs() > 1e-3);
    }
}
