//! Real-exponent powers `u_T^(t)` and `u_S^(t)` of a continuous t-norm and
//! its dual t-conorm, plus the structural power-stability decision.
//!
//! The defining infimum over rational exponents is never evaluated here;
//! it coincides with closed forms that this module uses directly:
//!
//! * minimum: every point is idempotent, `u^(t) = u`;
//! * Archimedean with generator `G`: `u^(t) = G^(-1)(t * G(u))` for
//!   `u > 0`, and `0^(t) = 0`;
//! * ordinal sum: the scaled summand power strictly inside a summand
//!   interval, identity elsewhere.
//!
//! The [`crate::oracle`] module recomputes the same powers from the
//! definition for cross-checking.

use crate::tnorm::{clamp_unit, DomainError, GeneratorFamily, TNormSpec};

fn archimedean_power(family: GeneratorFamily, u: f64, t: f64) -> f64 {
    // 0^(t) = 0 for every t > 0; the generator formula only covers u > 0
    // (for nilpotent families it would wrongly revive zero).
    if u == 0.0 {
        return 0.0;
    }
    family.pseudo_inverse(family.eval_raw(u).scale(t))
}

impl TNormSpec {
    /// `u_T^(t)` for `u in [0, 1]` and `t >= 0`.
    ///
    /// `t = 0` returns 1 by the zeroth-power convention, including for
    /// `u = 0`; the `t > 0` theory excludes that corner.
    pub fn power_t(&self, u: f64, t: f64) -> Result<f64, DomainError> {
        let u = clamp_unit("u", u)?;
        if !(t >= 0.0) {
            return Err(DomainError::NegativeExponent(t));
        }
        if t == 0.0 {
            return Ok(1.0);
        }
        Ok(self.power_t_raw(u, t))
    }

    pub(crate) fn power_t_raw(&self, u: f64, t: f64) -> f64 {
        match self {
            TNormSpec::Min => u,
            TNormSpec::Archimedean(f) => archimedean_power(*f, u, t),
            TNormSpec::OrdinalSum(summands) => {
                for s in summands {
                    // strictly inside: interval endpoints are idempotent
                    if s.lo < u && u < s.hi {
                        let w = s.hi - s.lo;
                        return s.lo + w * archimedean_power(s.family, (u - s.lo) / w, t);
                    }
                }
                u
            }
        }
    }

    /// `u_S^(t)` for the dual t-conorm, computed through the duality
    /// `u_S^(t) = 1 - (1-u)_T^(t)`.
    pub fn power_s(&self, u: f64, t: f64) -> Result<f64, DomainError> {
        let u = clamp_unit("u", u)?;
        if !(t >= 0.0) {
            return Err(DomainError::NegativeExponent(t));
        }
        if t == 0.0 {
            return Ok(0.0);
        }
        Ok(self.power_s_raw(u, t))
    }

    pub(crate) fn power_s_raw(&self, u: f64, t: f64) -> f64 {
        1.0 - self.power_t_raw(1.0 - u, t)
    }

    /// `u_T^(n)`, the n-fold self-composition (`n = 0` gives the neutral
    /// element 1). Computed by squaring, which associativity makes exact.
    pub fn iterate_power(&self, u: f64, n: u64) -> Result<f64, DomainError> {
        let u = clamp_unit("u", u)?;
        Ok(self.iterate_power_raw(u, n))
    }

    pub(crate) fn iterate_power_raw(&self, u: f64, n: u64) -> f64 {
        let mut acc: Option<f64> = None;
        let mut base = u;
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base,
                    Some(a) => self.eval_raw(a, base),
                });
            }
            k >>= 1;
            if k > 0 {
                base = self.eval_raw(base, base);
            }
        }
        acc.unwrap_or(1.0)
    }

    /// Whether `(T(u, v))_T^(t) = T(u_T^(t), v_T^(t))` holds identically.
    ///
    /// Purely structural: true exactly for the minimum, strict t-norms,
    /// and ordinal sums whose summands are all strict.
    pub fn is_power_stable(&self) -> bool {
        let c = self.classify();
        c.is_min || c.is_strict || c.is_ordinal_sum_of_strict
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tnorm::{catalogue, Summand};

    fn case1() -> TNormSpec {
        TNormSpec::ordinal_sum(vec![
            Summand::new(0.0, 0.5, GeneratorFamily::Product).unwrap(),
            Summand::new(0.5, 1.0, GeneratorFamily::Hamacher(2.0)).unwrap(),
        ])
        .unwrap()
    }

    fn case2() -> TNormSpec {
        TNormSpec::ordinal_sum(vec![
            Summand::new(0.0, 0.5, GeneratorFamily::Hamacher(2.0)).unwrap(),
            Summand::new(0.5, 1.0, GeneratorFamily::Product).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn power_t_examples() {
        assert_eq!(TNormSpec::lukasiewicz().power_t(0.5, 0.5).unwrap(), 0.75);
        let r = TNormSpec::product().power_t(0.4, 0.1).unwrap();
        assert!((r - 0.4f64.powf(0.1)).abs() < 1e-15);
        // lower summand: 2^(t-1) * u^t
        let r = case1().power_t(0.4, 0.1).unwrap();
        assert!((r - 2f64.powf(-0.9) * 0.4f64.powf(0.1)).abs() < 1e-12);
        assert!((r - 0.488966).abs() < 1e-6);
        // upper summand: 1/2 + 1/2 (2u - 1)^t
        let r = case2().power_t(0.8, 0.4).unwrap();
        assert!((r - (0.5 + 0.5 * 0.6f64.powf(0.4))).abs() < 1e-12);
        assert!((r - 0.907597).abs() < 1e-6);
    }

    #[test]
    fn power_t_edge_cases() {
        for (_, spec) in catalogue() {
            assert_eq!(spec.power_t(0.7, 0.0).unwrap(), 1.0, "zeroth power");
            assert_eq!(spec.power_t(0.0, 0.0).unwrap(), 1.0, "zeroth power of zero");
            assert_eq!(spec.power_t(0.0, 2.5).unwrap(), 0.0, "zero is fixed");
            assert_eq!(spec.power_t(1.0, 2.5).unwrap(), 1.0, "one is fixed");
            let u = spec.power_t(0.37, 1.0).unwrap();
            assert!((u - 0.37).abs() < 1e-15, "unit exponent for {spec:?}");
        }
        assert!(TNormSpec::product().power_t(0.5, -1.0).is_err());
        assert!(TNormSpec::product().power_t(0.5, f64::NAN).is_err());
        assert!(TNormSpec::product().power_t(1.2, 1.0).is_err());
    }

    #[test]
    fn nilpotent_powers_clamp() {
        // t * G(u) beyond G(0) pins the power at zero
        assert_eq!(TNormSpec::lukasiewicz().power_t(0.9, 12.0).unwrap(), 0.0);
        assert_eq!(TNormSpec::lukasiewicz().power_t(0.5, 2.0).unwrap(), 0.0);
    }

    #[test]
    fn ordinal_sum_endpoints_are_idempotent() {
        let spec = case1();
        for t in [0.25, 1.0, 3.0] {
            assert_eq!(spec.power_t(0.5, t).unwrap(), 0.5);
            assert_eq!(spec.power_t(0.0, t).unwrap(), 0.0);
            assert_eq!(spec.power_t(1.0, t).unwrap(), 1.0);
        }
    }

    #[test]
    fn power_s_examples() {
        let r = TNormSpec::product().power_s(0.1, 0.2).unwrap();
        assert!((r - (1.0 - 0.9f64.powf(0.2))).abs() < 1e-15);
        assert!((r - 0.020852).abs() < 1e-6);
        assert_eq!(TNormSpec::min().power_s(0.42, 7.3).unwrap(), 0.42);
        for (_, spec) in catalogue() {
            assert_eq!(spec.power_s(1.0, 3.3).unwrap(), 1.0);
        }
    }

    #[test]
    fn power_s_duality_is_exact() {
        for (_, spec) in catalogue() {
            for u in [0.0, 0.1, 0.37, 0.5, 0.73, 0.95, 1.0] {
                for t in [0.2, 0.5, 1.0, 2.0, 5.5] {
                    let s = spec.power_s(u, t).unwrap();
                    let t_ = spec.power_t(1.0 - u, t).unwrap();
                    assert_eq!(s + t_, 1.0, "duality for {spec:?} u={u} t={t}");
                }
            }
        }
    }

    #[test]
    fn iterate_power_examples() {
        assert_eq!(TNormSpec::lukasiewicz().iterate_power(0.5, 2).unwrap(), 0.0);
        let r = TNormSpec::product().iterate_power(0.9, 3).unwrap();
        assert!((r - 0.729).abs() < 1e-15);
        assert_eq!(TNormSpec::min().iterate_power(0.3, 100).unwrap(), 0.3);
        for (_, spec) in catalogue() {
            assert_eq!(spec.iterate_power(0.42, 0).unwrap(), 1.0);
            assert_eq!(spec.iterate_power(0.42, 1).unwrap(), 0.42);
        }
    }

    #[test]
    fn integer_exponent_consistency() {
        for (_, spec) in catalogue() {
            for u in [0.05, 0.3, 0.5, 0.62, 0.9] {
                for n in 1..=6u64 {
                    let a = spec.power_t(u, n as f64).unwrap();
                    let b = spec.iterate_power(u, n).unwrap();
                    assert!((a - b).abs() < 1e-12, "{spec:?} u={u} n={n}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn stability_classification() {
        assert!(TNormSpec::min().is_power_stable());
        assert!(TNormSpec::product().is_power_stable());
        assert!(!TNormSpec::lukasiewicz().is_power_stable());
        assert!(case1().is_power_stable());
        assert!(case2().is_power_stable());
        let mixed = TNormSpec::ordinal_sum(vec![
            Summand::new(0.0, 0.5, GeneratorFamily::Lukasiewicz).unwrap(),
            Summand::new(0.5, 1.0, GeneratorFamily::Product).unwrap(),
        ])
        .unwrap();
        assert!(!mixed.is_power_stable());
    }

    #[test]
    fn archimedean_powers_vanish_for_large_t() {
        for (name, spec) in catalogue() {
            if !spec.classify().is_strict && !spec.classify().is_nilpotent {
                continue;
            }
            for u in [0.05, 0.35, 0.65, 0.95] {
                let r = spec.power_t(u, 1e6).unwrap();
                assert!(r < 1e-3, "{name} u={u}: {r}");
            }
        }
    }

    #[test]
    fn power_t_monotone_in_both_arguments() {
        for (_, spec) in catalogue() {
            for i in 0..20 {
                let u = i as f64 / 20.0;
                let v = u + 0.05;
                for t in [0.3, 1.0, 2.7] {
                    let a = spec.power_t(u, t).unwrap();
                    let b = spec.power_t(v, t).unwrap();
                    assert!(a <= b + 1e-12, "increasing in u: {spec:?}");
                }
                if u > 0.0 {
                    let a = spec.power_t(u, 0.7).unwrap();
                    let b = spec.power_t(u, 1.9).unwrap();
                    assert!(b <= a + 1e-12, "decreasing in t: {spec:?}");
                }
            }
        }
    }
}
