//! Intuitionistic fuzzy values: membership/non-membership pairs with
//! `mu + nu <= 1`, their classical set operations, the four t-norm-induced
//! operational laws, score/accuracy/L-value metrics, and the Xu and
//! Zhang-Xu total orders.

use std::cmp::Ordering;

use thiserror::Error;

use crate::tnorm::{DomainError, TNormSpec, UNIT_SLACK};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum IfvError {
    #[error("membership degree {0} is outside [0, 1]")]
    MuOutOfRange(f64),
    #[error("non-membership degree {0} is outside [0, 1]")]
    NuOutOfRange(f64),
    #[error("mu + nu = {0} exceeds 1")]
    SumExceedsOne(f64),
}

/// An intuitionistic fuzzy value `<mu, nu>`.
///
/// Construction clamps components and the `mu + nu <= 1` constraint by at
/// most [`UNIT_SLACK`] and rejects anything beyond; the stored pair always
/// satisfies the constraint exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ifv {
    mu: f64,
    nu: f64,
}

impl Ifv {
    pub fn new(mu: f64, nu: f64) -> Result<Ifv, IfvError> {
        let clamp = |x: f64, err: fn(f64) -> IfvError| {
            if (0.0..=1.0).contains(&x) {
                Ok(x)
            } else if x > -UNIT_SLACK && x < 1.0 + UNIT_SLACK {
                Ok(x.clamp(0.0, 1.0))
            } else {
                Err(err(x))
            }
        };
        let mu = clamp(mu, IfvError::MuOutOfRange)?;
        let nu = clamp(nu, IfvError::NuOutOfRange)?;
        if mu + nu > 1.0 + UNIT_SLACK {
            return Err(IfvError::SumExceedsOne(mu + nu));
        }
        Ok(Ifv::clamped(mu, nu))
    }

    /// Internal constructor for components already in `[0, 1]` whose sum
    /// may overshoot 1 by rounding. The overshoot is split evenly between
    /// the components so that clamping commutes with `complement`.
    pub(crate) fn clamped(mu: f64, nu: f64) -> Ifv {
        debug_assert!((-1e-12..=1.0 + 1e-12).contains(&mu), "mu = {mu}");
        debug_assert!((-1e-12..=1.0 + 1e-12).contains(&nu), "nu = {nu}");
        let mu = mu.clamp(0.0, 1.0);
        let nu = nu.clamp(0.0, 1.0);
        let over = mu + nu - 1.0;
        if over > 0.0 {
            Ifv { mu: mu - over / 2.0, nu: nu - over / 2.0 }
        } else {
            Ifv { mu, nu }
        }
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Score degree `mu - nu`.
    pub fn score(&self) -> f64 {
        self.mu - self.nu
    }

    /// Accuracy degree `mu + nu`.
    pub fn accuracy(&self) -> f64 {
        self.mu + self.nu
    }

    /// Hesitancy degree `1 - mu - nu`.
    pub fn hesitancy(&self) -> f64 {
        1.0 - self.mu - self.nu
    }

    /// Closeness to the ideal point: `(1 - nu) / ((1 - mu) + (1 - nu))`.
    /// The denominator is `1 + hesitancy >= 1`, so this is always defined.
    pub fn l_value(&self) -> f64 {
        (1.0 - self.nu) / ((1.0 - self.mu) + (1.0 - self.nu))
    }

    pub fn metrics(&self) -> IfvMetrics {
        IfvMetrics {
            score: self.score(),
            accuracy: self.accuracy(),
            hesitancy: self.hesitancy(),
            l_value: self.l_value(),
        }
    }

    /// `<nu, mu>`.
    pub fn complement(self) -> Ifv {
        Ifv { mu: self.nu, nu: self.mu }
    }

    /// Componentwise `<max mu, min nu>`.
    pub fn union(self, other: Ifv) -> Ifv {
        Ifv { mu: self.mu.max(other.mu), nu: self.nu.min(other.nu) }
    }

    /// Componentwise `<min mu, max nu>`.
    pub fn intersection(self, other: Ifv) -> Ifv {
        Ifv { mu: self.mu.min(other.mu), nu: self.nu.max(other.nu) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IfvMetrics {
    pub score: f64,
    pub accuracy: f64,
    pub hesitancy: f64,
    pub l_value: f64,
}

/// The two total orders on IFVs: primary key, then accuracy degree.
/// `Xu` orders by score degree, `Zx` by L-value. Equality of both keys
/// forces componentwise equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IfvOrder {
    Xu,
    Zx,
}

impl IfvOrder {
    pub fn compare(self, a: Ifv, b: Ifv) -> Ordering {
        let primary = match self {
            IfvOrder::Xu => a.score().total_cmp(&b.score()),
            IfvOrder::Zx => a.l_value().total_cmp(&b.l_value()),
        };
        primary.then_with(|| a.accuracy().total_cmp(&b.accuracy()))
    }
}

/// `a (+)_T b = <S(mu_a, mu_b), T(nu_a, nu_b)>` for the dual t-conorm `S`.
pub fn oplus(spec: &TNormSpec, a: Ifv, b: Ifv) -> Ifv {
    Ifv::clamped(spec.conorm_raw(a.mu, b.mu), spec.eval_raw(a.nu, b.nu))
}

/// `a (x)_T b = <T(mu_a, mu_b), S(nu_a, nu_b)>`.
pub fn otimes(spec: &TNormSpec, a: Ifv, b: Ifv) -> Ifv {
    Ifv::clamped(spec.eval_raw(a.mu, b.mu), spec.conorm_raw(a.nu, b.nu))
}

/// `lambda_T a = <(mu_a)_S^(lambda), (nu_a)_T^(lambda)>`, `lambda > 0`.
///
/// `lambda = 0` is rejected: the zeroth-power convention would produce
/// `<1, 1>`, which is not an IFV.
pub fn scalar_mul(spec: &TNormSpec, lambda: f64, a: Ifv) -> Result<Ifv, DomainError> {
    if !(lambda > 0.0) {
        return Err(DomainError::NonPositiveScalar(lambda));
    }
    Ok(Ifv::clamped(
        spec.power_s_raw(a.mu, lambda),
        spec.power_t_raw(a.nu, lambda),
    ))
}

/// `a^(lambda_T) = <(mu_a)_T^(lambda), (nu_a)_S^(lambda)>`, `lambda > 0`.
pub fn ifv_power(spec: &TNormSpec, lambda: f64, a: Ifv) -> Result<Ifv, DomainError> {
    if !(lambda > 0.0) {
        return Err(DomainError::NonPositiveScalar(lambda));
    }
    Ok(Ifv::clamped(
        spec.power_t_raw(a.mu, lambda),
        spec.power_s_raw(a.nu, lambda),
    ))
}
