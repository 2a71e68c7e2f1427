//! Labeled discrete mass measures and probability distributions.

use std::collections::HashSet;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::means::NonNegativeVector;

/// Tolerance on the total mass of a [`Distribution`].
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

/// Non-negative, finite weights attached to unique outcome labels.
///
/// The total mass need not be 1; at least one weight must be positive.
#[derive(Debug, Clone, PartialEq)]
pub struct MassMeasure {
    labels: Vec<String>,
    weights: NonNegativeVector,
}

impl MassMeasure {
    pub fn new<L: Into<String>>(labels: impl IntoIterator<Item = L>, weights: Vec<f64>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != weights.len() {
            return Err(Error::LengthMismatch {
                left: labels.len(),
                right: weights.len(),
            });
        }
        let weights = NonNegativeVector::new(weights)?;
        if let Some(index) = weights.iter().position(|w| !w.is_finite()) {
            return Err(Error::NonFiniteWeight { index });
        }
        if weights.iter().all(|&w| w == 0.0) {
            return Err(Error::AllZero);
        }
        let mut seen = HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(MassMeasure { labels, weights })
    }

    /// Measure with generated labels `x1, x2, …`.
    pub fn from_weights(weights: Vec<f64>) -> Result<Self> {
        let labels = (1..=weights.len()).map(|i| format!("x{i}"));
        Self::new(labels, weights)
    }

    /// Measure from integer counts.
    pub fn from_counts<L: Into<String>>(labels: impl IntoIterator<Item = L>, counts: &[u64]) -> Result<Self> {
        Self::new(labels, counts.iter().map(|&c| c as f64).collect())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn total_mass(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Number of outcomes with positive weight.
    pub fn support_size(&self) -> usize {
        self.weights.iter().filter(|&&w| w > 0.0).count()
    }

    /// Smallest and largest weight on the support.
    pub fn support_extremes(&self) -> (f64, f64) {
        self.weights
            .iter()
            .filter(|&&w| w > 0.0)
            .fold((f64::INFINITY, 0.0_f64), |(lo, hi), &w| (lo.min(w), hi.max(w)))
    }

    pub fn is_uniform(&self) -> bool {
        let first = self.weights[0];
        first > 0.0 && self.weights.iter().all(|&w| w == first)
    }

    /// Divides every weight by the total mass.
    pub fn normalize(&self) -> Distribution {
        let total = self.total_mass();
        let weights = self.weights.iter().map(|w| w / total).collect();
        Distribution(MassMeasure {
            labels: self.labels.clone(),
            weights: NonNegativeVector::new(weights).expect("scaled weights stay non-negative"),
        })
    }

    /// Same labels, weights replaced. Used for escorts and entry-wise transforms.
    pub fn with_weights(&self, weights: Vec<f64>) -> Result<Self> {
        Self::new(self.labels.clone(), weights)
    }

    /// Same labels, every weight multiplied by `k > 0`.
    pub fn scaled(&self, k: f64) -> Result<Self> {
        self.with_weights(self.weights.iter().map(|w| w * k).collect())
    }

    /// Indices sorted by label.
    fn sorted_indices(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
        idx
    }
}

/// Free-function form of [`MassMeasure::from_counts`].
pub fn from_counts<L: Into<String>>(labels: impl IntoIterator<Item = L>, counts: &[u64]) -> Result<MassMeasure> {
    MassMeasure::from_counts(labels, counts)
}

pub fn normalize(m: &MassMeasure) -> Distribution {
    m.normalize()
}

pub fn total_mass(m: &MassMeasure) -> f64 {
    m.total_mass()
}

/// A mass measure whose total mass is 1 within [`NORMALIZATION_TOLERANCE`].
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution(MassMeasure);

impl Distribution {
    pub fn new(m: MassMeasure) -> Result<Self> {
        let total = m.total_mass();
        if (total - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(Error::NotNormalized(total));
        }
        Ok(Distribution(m))
    }

    pub fn from_probabilities(p: Vec<f64>) -> Result<Self> {
        Self::new(MassMeasure::from_weights(p)?)
    }

    /// The uniform distribution over `x1..xn`.
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        Ok(MassMeasure::from_weights(vec![1.0; n])?.normalize())
    }

    pub fn as_measure(&self) -> &MassMeasure {
        &self.0
    }

    pub fn into_measure(self) -> MassMeasure {
        self.0
    }
}

impl Deref for Distribution {
    type Target = MassMeasure;

    fn deref(&self) -> &MassMeasure {
        &self.0
    }
}

impl AsRef<MassMeasure> for Distribution {
    fn as_ref(&self) -> &MassMeasure {
        &self.0
    }
}

impl AsRef<MassMeasure> for MassMeasure {
    fn as_ref(&self) -> &MassMeasure {
        self
    }
}

/// One outcome of two measures matched by label.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct AlignedEntry<'a> {
    pub label: &'a str,
    pub p: f64,
    pub q: f64,
}

/// Matches outcomes of `p` and `q` by label, sorted lexicographically.
pub(crate) fn align<'a>(p: &'a MassMeasure, q: &'a MassMeasure) -> Result<Vec<AlignedEntry<'a>>> {
    let (ip, iq) = (p.sorted_indices(), q.sorted_indices());
    let mut out = Vec::with_capacity(ip.len());
    let (mut a, mut b) = (0, 0);
    while a < ip.len() || b < iq.len() {
        let lp = ip.get(a).map(|&i| p.labels[i].as_str());
        let lq = iq.get(b).map(|&i| q.labels[i].as_str());
        match (lp, lq) {
            (Some(x), Some(y)) if x == y => {
                out.push(AlignedEntry {
                    label: x,
                    p: p.weights[ip[a]],
                    q: q.weights[iq[b]],
                });
                a += 1;
                b += 1;
            }
            (Some(x), Some(y)) => return Err(Error::LabelMismatch(x.min(y).to_string())),
            (Some(x), None) | (None, Some(x)) => return Err(Error::LabelMismatch(x.to_string())),
            (None, None) => unreachable!(),
        }
    }
    Ok(out)
}

/// Entry-wise `p_i / q_i` over `supp(p)`, outcomes in label order.
///
/// Fails with [`Error::SupportViolation`] if some `p_i > 0` meets `q_i = 0`.
pub fn ratio(p: &MassMeasure, q: &MassMeasure) -> Result<NonNegativeVector> {
    let values = align(p, q)?
        .into_iter()
        .filter(|e| e.p > 0.0)
        .map(|e| {
            if e.q == 0.0 {
                Err(Error::SupportViolation {
                    label: e.label.to_string(),
                })
            } else {
                Ok(e.p / e.q)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    NonNegativeVector::new(values)
}
