//! Continuous t-norms: additive-generator families, ordinal sums, dual
//! t-conorms, n-ary extension, and structural classification.
//!
//! Every continuous t-norm is either the minimum, a continuous Archimedean
//! t-norm represented by an additive generator `G` with
//! `T(x, y) = G^(-1)(G(x) + G(y))`, or an ordinal sum of Archimedean
//! summands rescaled into disjoint subintervals (minimum elsewhere).
//! [`TNormSpec`] stores that structure; evaluation goes through the
//! closed-form generators and their closed-form inverses.

use thiserror::Error;

/// Inputs this far outside `[0, 1]` are clamped; anything further is a
/// domain error. Aggregation chains of duals accumulate last-bit rounding,
/// so a strict check would reject values that are valid for every caller.
pub const UNIT_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum DomainError {
    #[error("{name} = {value} is outside [0, 1]")]
    OutOfUnit { name: &'static str, value: f64 },
    #[error("exponent t = {0} must be nonnegative")]
    NegativeExponent(f64),
    #[error("scalar {0} must be strictly positive")]
    NonPositiveScalar(f64),
    #[error("empty input list")]
    EmptyInput,
}

/// Clamp a unit-interval argument, tolerating `UNIT_SLACK` of overshoot.
pub(crate) fn clamp_unit(name: &'static str, x: f64) -> Result<f64, DomainError> {
    if (0.0..=1.0).contains(&x) {
        Ok(x)
    } else if x > -UNIT_SLACK && x < 1.0 + UNIT_SLACK {
        Ok(x.clamp(0.0, 1.0))
    } else {
        // NaN also lands here: both comparisons above are false for it.
        Err(DomainError::OutOfUnit { name, value: x })
    }
}

/// Errors raised while building a [`TNormSpec`].
#[derive(Debug, Clone, Error, PartialEq)]
pub enum SpecError {
    #[error("hamacher parameter {0} must be finite and >= 0")]
    BadHamacherParameter(f64),
    #[error("aczel-alsina parameter {0} must be finite and > 0")]
    BadAczelAlsinaParameter(f64),
    #[error("ordinal sum needs at least one summand")]
    EmptyOrdinalSum,
    #[error("summand interval ({lo}, {hi}) is not a subinterval of [0, 1] with lo < hi")]
    BadSummandInterval { lo: f64, hi: f64 },
    #[error("summand intervals ({0}, {1}) and ({2}, {3}) overlap")]
    OverlappingSummands(f64, f64, f64, f64),
}

/// Value of an additive generator: a nonnegative real or `+inf`.
///
/// Kept as an explicit two-case type so that `x + inf = inf` and
/// `t * inf = inf` (t > 0) are deliberate rules rather than accidents of
/// IEEE arithmetic, and so the pseudo-inverse clamp against `G(0)` is a
/// visible comparison.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub enum ExtReal {
    Finite(f64),
    Infinite,
}

impl ExtReal {
    pub fn is_infinite(self) -> bool {
        matches!(self, ExtReal::Infinite)
    }

    /// Total addition: anything plus infinity is infinity.
    pub fn add(self, other: ExtReal) -> ExtReal {
        match (self, other) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => ExtReal::Finite(a + b),
            _ => ExtReal::Infinite,
        }
    }

    /// Scale by a strictly positive factor; `t * inf = inf`.
    pub fn scale(self, t: f64) -> ExtReal {
        debug_assert!(t > 0.0);
        match self {
            ExtReal::Finite(v) => ExtReal::Finite(t * v),
            ExtReal::Infinite => ExtReal::Infinite,
        }
    }
}

impl std::ops::Add for ExtReal {
    type Output = ExtReal;
    fn add(self, rhs: ExtReal) -> ExtReal {
        ExtReal::add(self, rhs)
    }
}

/// A named additive generator with closed-form forward and inverse
/// evaluation.
///
/// * `Product` — `G(u) = -ln u`, the algebraic product.
/// * `Lukasiewicz` — `G(u) = 1 - u`, the one shipped nilpotent family.
/// * `Hamacher(l)` — `G(u) = (1-u)/u` for `l = 0`, else
///   `G(u) = ln((l + (1-l)u)/u)`; `l = 1` coincides with `Product`,
///   `l = 2` is the Einstein product.
/// * `AczelAlsina(l)` — `G(u) = (-ln u)^l`, `l > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeneratorFamily {
    Product,
    Lukasiewicz,
    Hamacher(f64),
    AczelAlsina(f64),
}

impl GeneratorFamily {
    pub fn validate(self) -> Result<Self, SpecError> {
        match self {
            GeneratorFamily::Hamacher(l) if !(l.is_finite() && l >= 0.0) => {
                Err(SpecError::BadHamacherParameter(l))
            }
            GeneratorFamily::AczelAlsina(l) if !(l.is_finite() && l > 0.0) => {
                Err(SpecError::BadAczelAlsinaParameter(l))
            }
            f => Ok(f),
        }
    }

    /// `G(0)`, finite only for nilpotent families.
    pub fn value_at_zero(self) -> ExtReal {
        match self {
            GeneratorFamily::Lukasiewicz => ExtReal::Finite(1.0),
            _ => ExtReal::Infinite,
        }
    }

    /// A family is strict exactly when `G(0) = +inf`.
    pub fn is_strict(self) -> bool {
        self.value_at_zero().is_infinite()
    }

    /// Evaluate the generator at `u in [0, 1]`.
    pub fn eval(self, u: f64) -> Result<ExtReal, DomainError> {
        Ok(self.eval_raw(clamp_unit("u", u)?))
    }

    pub(crate) fn eval_raw(self, u: f64) -> ExtReal {
        debug_assert!((0.0..=1.0).contains(&u));
        if u == 0.0 {
            return self.value_at_zero();
        }
        ExtReal::Finite(match self {
            GeneratorFamily::Product => -u.ln(),
            GeneratorFamily::Lukasiewicz => 1.0 - u,
            GeneratorFamily::Hamacher(l) => {
                if l == 0.0 {
                    (1.0 - u) / u
                } else {
                    // (l + (1-l)u)/u = 1 + l(1-u)/u; ln_1p keeps precision near u = 1
                    (l * (1.0 - u) / u).ln_1p()
                }
            }
            GeneratorFamily::AczelAlsina(l) => (-u.ln()).powf(l),
        })
    }

    /// Pseudo-inverse `G^(-1)(y) = G^{-1}(min{y, G(0)})`, total on
    /// `[0, +inf]` and clamped into `[0, 1]`.
    pub fn pseudo_inverse(self, y: ExtReal) -> f64 {
        if y >= self.value_at_zero() {
            return 0.0;
        }
        let y = match y {
            ExtReal::Finite(v) => v,
            ExtReal::Infinite => unreachable!("infinite y is at least G(0)"),
        };
        debug_assert!(y >= 0.0);
        let u = match self {
            GeneratorFamily::Product => (-y).exp(),
            GeneratorFamily::Lukasiewicz => 1.0 - y,
            GeneratorFamily::Hamacher(l) => {
                if l == 0.0 {
                    1.0 / (1.0 + y)
                } else {
                    // inverse of y = ln(1 + l(1-u)/u); exp_m1 is exact for small y
                    l / (y.exp_m1() + l)
                }
            }
            GeneratorFamily::AczelAlsina(l) => (-y.powf(1.0 / l)).exp(),
        };
        u.clamp(0.0, 1.0)
    }
}

/// One ordinal-sum summand `(lo, hi, family)`: the family's t-norm rescaled
/// onto the square `[lo, hi]^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Summand {
    pub lo: f64,
    pub hi: f64,
    pub family: GeneratorFamily,
}

impl Summand {
    pub fn new(lo: f64, hi: f64, family: GeneratorFamily) -> Result<Summand, SpecError> {
        if !(lo.is_finite() && hi.is_finite() && (0.0..1.0).contains(&lo) && hi <= 1.0 && lo < hi)
        {
            return Err(SpecError::BadSummandInterval { lo, hi });
        }
        Ok(Summand { lo, hi, family: family.validate()? })
    }

    fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Structural description of a continuous t-norm.
///
/// Build through the constructors; `ordinal_sum` sorts its summands,
/// rejects overlapping intervals, and canonicalizes a single full-range
/// summand `(0, 1, F)` to `Archimedean(F)`, so equal structures compare
/// equal.
#[derive(Debug, Clone, PartialEq)]
pub enum TNormSpec {
    Min,
    Archimedean(GeneratorFamily),
    OrdinalSum(Vec<Summand>),
}

impl TNormSpec {
    pub fn min() -> TNormSpec {
        TNormSpec::Min
    }

    pub fn product() -> TNormSpec {
        TNormSpec::Archimedean(GeneratorFamily::Product)
    }

    pub fn lukasiewicz() -> TNormSpec {
        TNormSpec::Archimedean(GeneratorFamily::Lukasiewicz)
    }

    pub fn hamacher(lambda: f64) -> Result<TNormSpec, SpecError> {
        Ok(TNormSpec::Archimedean(GeneratorFamily::Hamacher(lambda).validate()?))
    }

    /// Einstein product, the Hamacher family at lambda = 2.
    pub fn einstein() -> TNormSpec {
        TNormSpec::Archimedean(GeneratorFamily::Hamacher(2.0))
    }

    pub fn aczel_alsina(lambda: f64) -> Result<TNormSpec, SpecError> {
        Ok(TNormSpec::Archimedean(GeneratorFamily::AczelAlsina(lambda).validate()?))
    }

    pub fn archimedean(family: GeneratorFamily) -> Result<TNormSpec, SpecError> {
        Ok(TNormSpec::Archimedean(family.validate()?))
    }

    pub fn ordinal_sum(mut summands: Vec<Summand>) -> Result<TNormSpec, SpecError> {
        if summands.is_empty() {
            return Err(SpecError::EmptyOrdinalSum);
        }
        for s in &summands {
            Summand::new(s.lo, s.hi, s.family)?;
        }
        summands.sort_by(|a, b| a.lo.partial_cmp(&b.lo).expect("finite bounds"));
        for pair in summands.windows(2) {
            if pair[1].lo < pair[0].hi {
                return Err(SpecError::OverlappingSummands(
                    pair[0].lo, pair[0].hi, pair[1].lo, pair[1].hi,
                ));
            }
        }
        if summands.len() == 1 && summands[0].lo == 0.0 && summands[0].hi == 1.0 {
            return Ok(TNormSpec::Archimedean(summands[0].family));
        }
        Ok(TNormSpec::OrdinalSum(summands))
    }

    /// `T(u, v)`.
    pub fn eval(&self, u: f64, v: f64) -> Result<f64, DomainError> {
        Ok(self.eval_raw(clamp_unit("u", u)?, clamp_unit("v", v)?))
    }

    pub(crate) fn eval_raw(&self, u: f64, v: f64) -> f64 {
        match self {
            TNormSpec::Min => u.min(v),
            TNormSpec::Archimedean(f) => f.pseudo_inverse(f.eval_raw(u) + f.eval_raw(v)),
            TNormSpec::OrdinalSum(summands) => {
                for s in summands {
                    // closed squares: a shared endpoint is idempotent either way
                    if s.lo <= u && u <= s.hi && s.lo <= v && v <= s.hi {
                        let w = s.width();
                        let f = s.family;
                        let t = f.pseudo_inverse(
                            f.eval_raw((u - s.lo) / w) + f.eval_raw((v - s.lo) / w),
                        );
                        return s.lo + w * t;
                    }
                }
                u.min(v)
            }
        }
    }

    /// The dual t-conorm `S(u, v) = 1 - T(1-u, 1-v)`.
    pub fn conorm(&self, u: f64, v: f64) -> Result<f64, DomainError> {
        Ok(self.conorm_raw(clamp_unit("u", u)?, clamp_unit("v", v)?))
    }

    pub(crate) fn conorm_raw(&self, u: f64, v: f64) -> f64 {
        1.0 - self.eval_raw(1.0 - u, 1.0 - v)
    }

    /// Left fold of `T` over a nonempty list (the m-ary extension).
    pub fn eval_many(&self, values: &[f64]) -> Result<f64, DomainError> {
        let mut iter = values.iter();
        let first = *iter.next().ok_or(DomainError::EmptyInput)?;
        let mut acc = clamp_unit("values[0]", first)?;
        for &v in iter {
            acc = self.eval_raw(acc, clamp_unit("values[i]", v)?);
        }
        Ok(acc)
    }

    /// Left fold of the dual t-conorm over a nonempty list.
    pub fn conorm_many(&self, values: &[f64]) -> Result<f64, DomainError> {
        let mut iter = values.iter();
        let first = *iter.next().ok_or(DomainError::EmptyInput)?;
        let mut acc = clamp_unit("values[0]", first)?;
        for &v in iter {
            acc = self.conorm_raw(acc, clamp_unit("values[i]", v)?);
        }
        Ok(acc)
    }

    pub fn classify(&self) -> Classification {
        match self {
            TNormSpec::Min => Classification { is_min: true, ..Classification::default() },
            TNormSpec::Archimedean(f) => {
                if f.is_strict() {
                    Classification { is_strict: true, ..Classification::default() }
                } else {
                    Classification { is_nilpotent: true, ..Classification::default() }
                }
            }
            TNormSpec::OrdinalSum(summands) => Classification {
                is_ordinal_sum: true,
                is_ordinal_sum_of_strict: summands.iter().all(|s| s.family.is_strict()),
                ..Classification::default()
            },
        }
    }
}

/// Structural class of a spec. Exactly one of `is_min`, `is_strict`,
/// `is_nilpotent`, `is_ordinal_sum` is set; `is_ordinal_sum_of_strict`
/// refines the last.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Classification {
    pub is_min: bool,
    pub is_strict: bool,
    pub is_nilpotent: bool,
    pub is_ordinal_sum: bool,
    pub is_ordinal_sum_of_strict: bool,
}

/// The specs exercised by the verification suites: every shipped family at
/// representative parameters plus the two reference ordinal sums.
pub fn catalogue() -> Vec<(String, TNormSpec)> {
    let os = |a: Vec<(f64, f64, GeneratorFamily)>| {
        TNormSpec::ordinal_sum(
            a.into_iter()
                .map(|(lo, hi, f)| Summand::new(lo, hi, f).expect("valid summand"))
                .collect(),
        )
        .expect("valid ordinal sum")
    };
    vec![
        ("min".into(), TNormSpec::min()),
        ("product".into(), TNormSpec::product()),
        ("lukasiewicz".into(), TNormSpec::lukasiewicz()),
        ("hamacher:0".into(), TNormSpec::hamacher(0.0).unwrap()),
        ("hamacher:1".into(), TNormSpec::hamacher(1.0).unwrap()),
        ("hamacher:2".into(), TNormSpec::einstein()),
        ("hamacher:5".into(), TNormSpec::hamacher(5.0).unwrap()),
        ("aczel-alsina:1".into(), TNormSpec::aczel_alsina(1.0).unwrap()),
        ("aczel-alsina:2".into(), TNormSpec::aczel_alsina(2.0).unwrap()),
        (
            "ordinal[(0,0.5,product),(0.5,1,hamacher:2)]".into(),
            os(vec![
                (0.0, 0.5, GeneratorFamily::Product),
                (0.5, 1.0, GeneratorFamily::Hamacher(2.0)),
            ]),
        ),
        (
            "ordinal[(0,0.5,hamacher:2),(0.5,1,product)]".into(),
            os(vec![
                (0.0, 0.5, GeneratorFamily::Hamacher(2.0)),
                (0.5, 1.0, GeneratorFamily::Product),
            ]),
        ),
    ]
}
