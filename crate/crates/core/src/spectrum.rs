//! The Rényi information spectrum `r ↦ H̃_r` sampled over order grids, and
//! the inversion of the equivalent probability function.

use crate::error::{Error, Result};
use crate::info::{entropy_derivative, equivalent_probability, information_potential, shifted_entropy, LogBase};
use crate::means::ExtendedOrder;
use crate::measures::MassMeasure;

/// Strictly increasing finite orders, optionally flanked by `−∞` and `+∞`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderGrid {
    finite_orders: Vec<f64>,
    include_neg_inf: bool,
    include_pos_inf: bool,
}

impl OrderGrid {
    pub fn new(finite_orders: Vec<f64>, include_neg_inf: bool, include_pos_inf: bool) -> Result<Self> {
        if let Some(r) = finite_orders.iter().find(|r| !r.is_finite()) {
            return Err(Error::InvalidGrid(format!("order {r} is not finite")));
        }
        if let Some(w) = finite_orders.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGrid(format!(
                "orders must be strictly increasing ({} then {})",
                w[0], w[1]
            )));
        }
        if finite_orders.is_empty() && !include_neg_inf && !include_pos_inf {
            return Err(Error::InvalidGrid("grid is empty".into()));
        }
        Ok(OrderGrid {
            finite_orders,
            include_neg_inf,
            include_pos_inf,
        })
    }

    /// Builds a grid from arbitrary extended orders; they are sorted and must be distinct.
    pub fn from_orders(orders: &[ExtendedOrder]) -> Result<Self> {
        let mut finite = Vec::new();
        let (mut neg, mut pos) = (false, false);
        for &o in orders {
            match o {
                ExtendedOrder::NegInfinity if neg => return Err(Error::InvalidGrid("duplicate -inf".into())),
                ExtendedOrder::PosInfinity if pos => return Err(Error::InvalidGrid("duplicate inf".into())),
                ExtendedOrder::NegInfinity => neg = true,
                ExtendedOrder::PosInfinity => pos = true,
                ExtendedOrder::Finite(r) => finite.push(r),
            }
        }
        if finite.iter().any(|r| r.is_nan()) {
            return Err(Error::InvalidGrid("NaN order".into()));
        }
        finite.sort_by(|a, b| a.total_cmp(b));
        if let Some(w) = finite.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGrid(format!("duplicate order {}", w[0])));
        }
        Self::new(finite, neg, pos)
    }

    /// `n` evenly spaced orders from `a` to `b` inclusive.
    pub fn linear(a: f64, b: f64, n: usize) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::InvalidGrid("linear grid bounds must be finite".into()));
        }
        let orders = match n {
            0 => return Err(Error::InvalidGrid("linear grid needs at least one point".into())),
            1 if a == b => vec![a],
            1 => return Err(Error::InvalidGrid("a single point needs a == b".into())),
            _ => (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect(),
        };
        Self::new(orders, false, false)
    }

    /// `{−∞, −1, 0, 1, +∞}`: min-entropy, Hartley, Shannon, quadratic, max-entropy.
    pub fn named() -> Self {
        OrderGrid {
            finite_orders: vec![-1.0, 0.0, 1.0],
            include_neg_inf: true,
            include_pos_inf: true,
        }
    }

    /// 101 orders log-spaced in magnitude over `[−50, 50]` (50 per sign plus
    /// 0), merged with `{−1, 0, 1}` and flanked by `±∞`.
    pub fn default_dense() -> Self {
        let per_side = 50;
        let (lo, hi) = (1e-2f64.log10(), 50f64.log10());
        let mags: Vec<f64> = (0..per_side)
            .map(|i| match i {
                0 => 1e-2,
                i if i == per_side - 1 => 50.0,
                i => 10f64.powf(lo + (hi - lo) * i as f64 / (per_side - 1) as f64),
            })
            .collect();
        let mut orders: Vec<f64> = mags.iter().map(|m| -m).collect();
        orders.extend([0.0, -1.0, 1.0]);
        orders.extend(&mags);
        orders.sort_by(|a, b| a.total_cmp(b));
        orders.dedup();
        OrderGrid {
            finite_orders: orders,
            include_neg_inf: true,
            include_pos_inf: true,
        }
    }

    pub fn finite_orders(&self) -> &[f64] {
        &self.finite_orders
    }

    pub fn includes_neg_inf(&self) -> bool {
        self.include_neg_inf
    }

    pub fn includes_pos_inf(&self) -> bool {
        self.include_pos_inf
    }

    /// All orders, increasing.
    pub fn orders(&self) -> impl Iterator<Item = ExtendedOrder> + '_ {
        let neg = self.include_neg_inf.then_some(ExtendedOrder::NegInfinity);
        let pos = self.include_pos_inf.then_some(ExtendedOrder::PosInfinity);
        neg.into_iter()
            .chain(self.finite_orders.iter().map(|&r| ExtendedOrder::Finite(r)))
            .chain(pos)
    }

    pub fn len(&self) -> usize {
        self.finite_orders.len() + self.include_neg_inf as usize + self.include_pos_inf as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumRow {
    pub order: ExtendedOrder,
    pub entropy: f64,
    pub equiv_prob: f64,
    /// Absent at `±∞`.
    pub potential: Option<f64>,
    /// Absent at `±∞`.
    pub derivative: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumTable {
    pub rows: Vec<SpectrumRow>,
    pub base: LogBase,
    pub source_total_mass: f64,
}

impl SpectrumTable {
    /// Entropy non-increasing and equivalent probability non-decreasing
    /// along the rows, each up to `slack`.
    pub fn is_monotone(&self, slack: f64) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[1].entropy <= w[0].entropy + slack && w[1].equiv_prob + slack >= w[0].equiv_prob)
    }

    pub fn entropies(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.entropy).collect()
    }
}

/// Evaluates the spectrum of `m` at every order of `grid`.
pub fn sample_spectrum(m: &MassMeasure, grid: &OrderGrid, base: LogBase) -> Result<SpectrumTable> {
    let rows = grid
        .orders()
        .map(|order| {
            let (potential, derivative) = match order {
                ExtendedOrder::Finite(r) => (
                    Some(information_potential(m, order)?),
                    Some(entropy_derivative(m, r, base)?),
                ),
                _ => (None, None),
            };
            Ok(SpectrumRow {
                order,
                entropy: shifted_entropy(m, order, base).value,
                equiv_prob: equivalent_probability(m, order),
                potential,
                derivative,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectrumTable {
        rows,
        base,
        source_total_mass: m.total_mass(),
    })
}

/// Orders beyond this magnitude are reported as `±∞`.
pub const BRACKET_CAP: f64 = 1e6;
pub const MAX_BISECTION_STEPS: usize = 200;

/// Finds an order `r` with `|π_r − target| ≤ tol` for the normalized `m`.
///
/// The search starts on `[−search_bound, search_bound]` and doubles the
/// bracket until it straddles the target; past [`BRACKET_CAP`] the
/// corresponding infinite order is returned. Targets equal to the largest
/// (smallest) probability give `+∞` (`−∞`), which is where they are
/// attained. A uniform distribution returns `Finite(0)`.
pub fn invert_probability(m: &MassMeasure, target: f64, search_bound: f64, tol: f64) -> Result<ExtendedOrder> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    if !(search_bound > 0.0 && search_bound.is_finite()) {
        return Err(Error::InvalidGrid(format!(
            "search bound {search_bound} must be positive"
        )));
    }
    let p = m.normalize();
    let (min, max) = p.support_extremes();
    if target.is_nan() || target < min - tol || target > max + tol {
        return Err(Error::TargetOutOfRange { target, min, max });
    }
    if min == max {
        return Ok(ExtendedOrder::Finite(0.0));
    }
    if target >= max {
        return Ok(ExtendedOrder::PosInfinity);
    }
    if target <= min {
        return Ok(ExtendedOrder::NegInfinity);
    }

    let pi = |r: f64| equivalent_probability(&p, ExtendedOrder::Finite(r));
    let (mut lo, mut hi) = (-search_bound, search_bound);
    while pi(hi) < target - tol {
        if hi > BRACKET_CAP {
            return Ok(ExtendedOrder::PosInfinity);
        }
        lo = hi;
        hi *= 2.0;
    }
    while pi(lo) > target + tol {
        if lo < -BRACKET_CAP {
            return Ok(ExtendedOrder::NegInfinity);
        }
        hi = lo;
        lo *= 2.0;
    }
    for _ in 0..MAX_BISECTION_STEPS {
        let mid = 0.5 * (lo + hi);
        let v = pi(mid);
        if (v - target).abs() <= tol {
            return Ok(ExtendedOrder::Finite(mid));
        }
        if v < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::NoConvergence(MAX_BISECTION_STEPS))
}

/// One recovered probability value.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeRow {
    /// Every outcome carrying this probability.
    pub labels: Vec<String>,
    pub probability: f64,
    pub order: ExtendedOrder,
    /// `π` at the recovered order.
    pub achieved: f64,
}

/// For each distinct probability of `normalize(m)` (increasing), the order
/// at which the equivalent probability function takes that value.
///
/// Probabilities closer than `tol` are treated as one value.
pub fn recover_distribution_probe(m: &MassMeasure, tol: f64) -> Result<Vec<ProbeRow>> {
    let p = m.normalize();
    let mut entries: Vec<(f64, &str)> = p
        .weights()
        .iter()
        .zip(p.labels())
        .filter(|(&w, _)| w > 0.0)
        .map(|(&w, l)| (w, l.as_str()))
        .collect();
    entries.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(b.1)));

    let mut groups: Vec<(f64, Vec<String>)> = Vec::new();
    for (w, label) in entries {
        match groups.last_mut() {
            Some((v, labels)) if (w - *v).abs() <= tol => labels.push(label.to_string()),
            _ => groups.push((w, vec![label.to_string()])),
        }
    }

    groups
        .into_iter()
        .map(|(probability, labels)| {
            let order = invert_probability(&p, probability, 1.0, tol)?;
            Ok(ProbeRow {
                labels,
                probability,
                order,
                achieved: equivalent_probability(&p, order),
            })
        })
        .collect()
}
