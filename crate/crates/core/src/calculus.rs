//! Conformable fractional derivative and integral of order alpha in (0, 1].
//!
//! The derivative of order alpha of f at t > 0 is the limit of
//! (f(t + eps t^(1-alpha)) - f(t)) / eps as eps -> 0, which for
//! differentiable f equals t^(1-alpha) f'(t). At t = 0 the derivative is
//! defined as the limit of the derivative from the right. The fractional
//! integral from a is the weighted integral of f(x) x^(alpha-1) over [a, t].
//!
//! Numerically the derivative is evaluated through the algebraic identity
//! (central differences plus Richardson extrapolation for f'), the t -> 0+
//! limit by extrapolating a geometric sample sequence, and the integral by
//! the substitution u = x^alpha followed by adaptive Gauss-Legendre
//! quadrature, which removes the x = 0 endpoint singularity exactly.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::quadrature::integrate_adaptive;
use crate::scalar::{real, Real};

/// The fractional order alpha, restricted to (0, 1].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlphaOrder<T>(T);

impl<T: Real> AlphaOrder<T> {
    pub fn new(value: T) -> Result<Self> {
        if value.is_finite() && value > T::zero() && value <= T::one() {
            Ok(AlphaOrder(value))
        } else {
            Err(Error::Domain(format!(
                "alpha must be in (0,1], got {value}"
            )))
        }
    }

    /// The classical order alpha = 1.
    pub fn one() -> Self {
        AlphaOrder(T::one())
    }

    #[inline]
    pub fn value(self) -> T {
        self.0
    }
}

/// A real-valued function of a nonnegative real, evaluable at arbitrary
/// points of its declared domain [0, t_max]. Evaluation must be
/// deterministic and re-entrant; handles are cheap to clone and safe to
/// share across threads.
#[derive(Clone)]
pub struct FunctionHandle<T> {
    eval: Arc<dyn Fn(T) -> T + Send + Sync>,
    t_max: T,
}

impl<T: Real> FunctionHandle<T> {
    /// A function declared on [0, t_max].
    pub fn new<F>(t_max: T, f: F) -> Result<Self>
    where
        F: Fn(T) -> T + Send + Sync + 'static,
    {
        if !(t_max > T::zero()) {
            return Err(Error::Domain(format!(
                "function domain [0, t_max] needs t_max > 0, got {t_max}"
            )));
        }
        Ok(FunctionHandle {
            eval: Arc::new(f),
            t_max,
        })
    }

    /// A function declared on all of [0, infinity).
    pub fn unbounded<F>(f: F) -> Self
    where
        F: Fn(T) -> T + Send + Sync + 'static,
    {
        FunctionHandle {
            eval: Arc::new(f),
            t_max: T::infinity(),
        }
    }

    #[inline]
    pub fn eval(&self, t: T) -> T {
        (self.eval)(t)
    }

    /// Upper end of the declared domain (may be infinite).
    #[inline]
    pub fn t_max(&self) -> T {
        self.t_max
    }
}

impl<T: fmt::Debug> fmt::Debug for FunctionHandle<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FunctionHandle")
            .field("t_max", &self.t_max)
            .finish_non_exhaustive()
    }
}

/// A numerical conformable-derivative estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DerivativeResult<T> {
    /// The derivative estimate.
    pub value: T,
    /// The final difference step (for the t -> 0+ limit, the final sample
    /// abscissa of the sequence).
    pub step_used: T,
    /// Nonnegative a-posteriori error estimate (Richardson residual, or the
    /// last increment of the extrapolated limit sequence).
    pub estimated_error: T,
}

/// Conformable derivative of order alpha at t > 0.
///
/// Computed as t^(1-alpha) times a central-difference estimate of f'(t)
/// with two-level Richardson extrapolation, nominal step
/// max(t, 1) * eps^(1/3), shrunk when necessary so the stencil stays inside
/// the declared domain.
pub fn conformable_derivative<T: Real>(
    f: &FunctionHandle<T>,
    t: T,
    alpha: AlphaOrder<T>,
) -> Result<DerivativeResult<T>> {
    derivative_with(|x| f.eval(x), f.t_max(), t, alpha)
}

/// Debug-mode evaluation of the raw definitional quotient
/// (f(t + eps t^(1-alpha)) - f(t)) / eps at eps = max(t, 1) * eps_mach^(1/3),
/// for cross-checking the identity-based path.
pub fn conformable_derivative_quotient<T: Real>(
    f: &FunctionHandle<T>,
    t: T,
    alpha: AlphaOrder<T>,
) -> Result<T> {
    if !(t > T::zero()) {
        return Err(Error::Domain(format!("derivative needs t > 0, got {t}")));
    }
    let eps = t.max(T::one()) * T::epsilon().cbrt();
    let shift = eps * t.powf(T::one() - alpha.value());
    if t + shift > f.t_max() {
        return Err(Error::Domain(format!(
            "definitional stencil exits the domain at t = {t}"
        )));
    }
    let hi = f.eval(t + shift);
    let lo = f.eval(t);
    if !(hi.is_finite() && lo.is_finite()) {
        return Err(Error::NonFinite(format!(
            "function returned a non-finite value near t = {t}"
        )));
    }
    Ok((hi - lo) / eps)
}

/// Closure-based core of [`conformable_derivative`]; `t_max` bounds the
/// evaluable domain.
pub(crate) fn derivative_with<T: Real, F: Fn(T) -> T>(
    f: F,
    t_max: T,
    t: T,
    alpha: AlphaOrder<T>,
) -> Result<DerivativeResult<T>> {
    if !(t > T::zero() && t.is_finite()) {
        return Err(Error::Domain(format!("derivative needs t > 0, got {t}")));
    }
    if t >= t_max {
        return Err(Error::Domain(format!(
            "stencil around t = {t} exits the domain [0, {t_max}]"
        )));
    }
    let two = real::<T>(2.0);
    let nominal = t.max(T::one()) * T::epsilon().cbrt();
    // Keep [t - h, t + h] inside (0, t_max].
    let h = nominal.min(t / two).min((t_max - t) / two);
    if !(h > T::zero()) {
        return Err(Error::Domain(format!(
            "stencil around t = {t} exits the domain [0, {t_max}]"
        )));
    }

    let central = |step: T| -> Result<T> {
        let hi = f(t + step);
        let lo = f(t - step);
        if !(hi.is_finite() && lo.is_finite()) {
            return Err(Error::NonFinite(format!(
                "function returned a non-finite value near t = {t}"
            )));
        }
        Ok((hi - lo) / (two * step))
    };

    let coarse = central(h)?;
    let fine = central(h / two)?;
    // One Richardson level removes the h^2 term of the central difference.
    let extrapolated = (real::<T>(4.0) * fine - coarse) / real(3.0);
    let weight = t.powf(T::one() - alpha.value());
    Ok(DerivativeResult {
        value: weight * extrapolated,
        step_used: h / two,
        estimated_error: weight * ((fine - coarse).abs() / real(3.0)),
    })
}

/// Sequence length budget of the t -> 0+ limit detector.
const LIMIT_MAX_TERMS: usize = 40;
/// Cauchy tolerance of the limit detector.
const LIMIT_TOLERANCE: f64 = 1e-7;
/// Depth cap of the extrapolation table.
const LIMIT_TABLE_DEPTH: usize = 6;
/// Relative step of the one-sided stencil used along the limit sequence.
const LIMIT_STENCIL_STEP: f64 = 1e-3;

/// Conformable derivative at t = 0, defined as lim_{t->0+} f^(alpha)(t).
///
/// The derivative is sampled along the geometric sequence
/// t_k = b 2^(-k), b = min(1, t_max) / 2, and the samples are accelerated by
/// Richardson extrapolation; the iteration stops once two successive
/// extrapolated values agree to 1e-7. Returns `NoLimit` if the sequence has
/// not settled after 40 terms, which signals that f is not
/// alpha-differentiable at zero.
pub fn conformable_derivative_at_zero<T: Real>(
    f: &FunctionHandle<T>,
    alpha: AlphaOrder<T>,
) -> Result<DerivativeResult<T>> {
    derivative_at_zero_with(|x| f.eval(x), f.t_max(), alpha)
}

/// Closure-based core of [`conformable_derivative_at_zero`].
///
/// Each sample f^(alpha)(t_k) is evaluated through the reparametrization
/// g(tau) = f((alpha tau)^(1/alpha)), for which f^(alpha)(t) = g'(tau) at
/// tau = t^alpha / alpha exactly; a one-sided five-point stencil in tau
/// keeps full accuracy arbitrarily close to zero, where a stencil in t
/// cannot resolve the t^alpha variation scale. In the tau variable the
/// samples of a smooth function form geometric series with known ratios
/// 2^(-alpha j), which the extrapolation table removes level by level.
pub(crate) fn derivative_at_zero_with<T: Real, F: Fn(T) -> T>(
    f: F,
    t_max: T,
    alpha: AlphaOrder<T>,
) -> Result<DerivativeResult<T>> {
    let a = alpha.value();
    let one = T::one();
    let two = real::<T>(2.0);
    let start = t_max.min(one) / two;
    if !(start > T::zero()) {
        return Err(Error::Domain(
            "limit detection needs a positive domain width".into(),
        ));
    }
    let tol = real::<T>(LIMIT_TOLERANCE);
    let delta0 = real::<T>(LIMIT_STENCIL_STEP);
    let tau_max = if t_max.is_finite() {
        t_max.powf(a) / a
    } else {
        T::infinity()
    };
    let t_of_tau = |tau: T| (a * tau).powf(one / a);

    // g'(tau) by the one-sided five-point rule; all abscissas stay >= tau,
    // so the stencil never leaves [0, tau_max] on the left.
    let slope_at = |tau: T| -> T {
        let mut delta = delta0 * tau;
        if tau_max.is_finite() {
            delta = delta.min((tau_max - tau) / real(4.0));
        }
        let g = |j: f64| f(t_of_tau(tau + real::<T>(j) * delta));
        (real::<T>(-25.0) * g(0.0) + real::<T>(48.0) * g(1.0) - real::<T>(36.0) * g(2.0)
            + real::<T>(16.0) * g(3.0)
            - real::<T>(3.0) * g(4.0))
            / (real::<T>(12.0) * delta)
    };

    // ratios[j] = 2^(-alpha (j+1)), the per-halving decay of the tau^(j+1)
    // series component.
    let ratios: Vec<T> = (1..=LIMIT_TABLE_DEPTH)
        .map(|j| two.powf(-a * real::<T>(j as f64)))
        .collect();

    let mut prev_row: Vec<T> = Vec::new();
    let mut prev_diag = T::zero();
    let mut t_k = start;
    for k in 0..=LIMIT_MAX_TERMS {
        let tau_k = t_k.powf(a) / a;
        let sample = slope_at(tau_k);
        if !sample.is_finite() {
            return Err(Error::NonFinite(format!(
                "derivative sample at t = {t_k} is not finite"
            )));
        }
        let depth = k.min(LIMIT_TABLE_DEPTH);
        let mut row = Vec::with_capacity(depth + 1);
        row.push(sample);
        for j in 1..=depth {
            let q = ratios[j - 1];
            let accelerated = (row[j - 1] - q * prev_row[j - 1]) / (one - q);
            row.push(accelerated);
        }
        let diag = *row.last().expect("row is never empty");
        if k >= 2 {
            let increment = (diag - prev_diag).abs();
            if increment <= tol {
                return Ok(DerivativeResult {
                    value: diag,
                    step_used: t_k,
                    estimated_error: increment,
                });
            }
        }
        prev_diag = diag;
        prev_row = row;
        t_k /= two;
    }
    Err(Error::NoLimit(format!(
        "f^(alpha) did not settle to {LIMIT_TOLERANCE} within {LIMIT_MAX_TERMS} halvings of t"
    )))
}

/// Absolute tolerance of the fractional integral.
const INTEGRAL_TOLERANCE: f64 = 1e-12;

/// Fractional integral of order alpha starting from a >= 0:
/// the integral of f(x) x^(alpha - 1) over [a, t].
///
/// The substitution u = x^alpha maps this to (1/alpha) times the integral
/// of f(u^(1/alpha)) over [a^alpha, t^alpha], removing the x = 0 endpoint
/// singularity; the transformed integral is evaluated by adaptive
/// Gauss-Legendre quadrature to 1e-12 absolute.
pub fn fractional_integral<T: Real>(
    f: &FunctionHandle<T>,
    a: T,
    t: T,
    alpha: AlphaOrder<T>,
) -> Result<T> {
    if !(a >= T::zero() && a.is_finite()) {
        return Err(Error::Domain(format!(
            "integral start must satisfy a >= 0, got {a}"
        )));
    }
    if !(t > a && t.is_finite()) {
        return Err(Error::Domain(format!(
            "integral needs t > a, got a = {a}, t = {t}"
        )));
    }
    if t > f.t_max() {
        return Err(Error::Domain(format!(
            "integration interval [{a}, {t}] exits the domain [0, {}]",
            f.t_max()
        )));
    }
    let alpha = alpha.value();
    let lo = a.powf(alpha);
    let hi = t.powf(alpha);
    let transformed = integrate_adaptive(
        |u: T| f.eval(u.powf(T::one() / alpha)),
        lo,
        hi,
        real(INTEGRAL_TOLERANCE),
    )?;
    Ok(transformed / alpha)
}

/// e^(t^alpha / alpha), the eigenfunction of the conformable derivative.
pub fn ref_exp_alpha<T: Real>(t: T, alpha: AlphaOrder<T>) -> T {
    (t.powf(alpha.value()) / alpha.value()).exp()
}

/// sin(t^alpha / alpha); its conformable derivative is [`ref_cos_alpha`].
pub fn ref_sin_alpha<T: Real>(t: T, alpha: AlphaOrder<T>) -> T {
    (t.powf(alpha.value()) / alpha.value()).sin()
}

/// cos(t^alpha / alpha); its conformable derivative is -[`ref_sin_alpha`].
pub fn ref_cos_alpha<T: Real>(t: T, alpha: AlphaOrder<T>) -> T {
    (t.powf(alpha.value()) / alpha.value()).cos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn alpha(a: f64) -> AlphaOrder<f64> {
        AlphaOrder::new(a).unwrap()
    }

    fn rel_err(got: f64, want: f64) -> f64 {
        (got - want).abs() / want.abs().max(1.0)
    }

    #[test]
    fn alpha_order_rejects_out_of_range() {
        assert!(AlphaOrder::new(0.0).is_err());
        assert!(AlphaOrder::new(-0.3).is_err());
        assert!(AlphaOrder::new(1.5).is_err());
        assert!(AlphaOrder::new(f64::NAN).is_err());
        assert!(AlphaOrder::new(1.0).is_ok());
        assert!(AlphaOrder::new(1e-6).is_ok());
    }

    #[test]
    fn derivative_of_square_matches_power_rule() {
        let f = FunctionHandle::unbounded(|t: f64| t * t);
        let d = conformable_derivative(&f, 1.0, alpha(0.5)).unwrap();
        assert!(rel_err(d.value, 2.0) < 1e-9, "got {}", d.value);
        assert!(d.estimated_error >= 0.0);
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        let f = FunctionHandle::unbounded(|_| 4.25);
        let d = conformable_derivative(&f, 2.0, alpha(0.3)).unwrap();
        assert!(d.value.abs() < 1e-12);
    }

    #[test]
    fn exp_alpha_is_an_eigenfunction() {
        let al = alpha(0.4);
        let f = FunctionHandle::unbounded(move |t: f64| ref_exp_alpha(t, al));
        let d = conformable_derivative(&f, 1.7, al).unwrap();
        let want = ref_exp_alpha(1.7, al);
        assert!(rel_err(d.value, want) < 1e-9, "got {} want {want}", d.value);
    }

    #[test]
    fn derivative_rejects_bad_abscissas() {
        let f = FunctionHandle::new(1.0, |t: f64| t).unwrap();
        assert!(matches!(
            conformable_derivative(&f, 0.0, alpha(0.5)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            conformable_derivative(&f, -1.0, alpha(0.5)),
            Err(Error::Domain(_))
        ));
        // t on the domain boundary: the stencil cannot fit.
        assert!(matches!(
            conformable_derivative(&f, 1.0, alpha(0.5)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn derivative_reports_non_finite_samples() {
        let f = FunctionHandle::unbounded(|t: f64| if t > 1.0 { f64::NAN } else { t });
        assert!(matches!(
            conformable_derivative(&f, 1.0, alpha(0.5)),
            Err(Error::NonFinite(_))
        ));
    }

    #[test]
    fn quotient_mode_agrees_with_identity_path() {
        let al = alpha(0.6);
        let f = FunctionHandle::unbounded(|t: f64| t.powf(1.7) + t.sin());
        let d = conformable_derivative(&f, 1.3, al).unwrap();
        let q = conformable_derivative_quotient(&f, 1.3, al).unwrap();
        // The one-sided quotient is only first-order accurate.
        assert!(
            (d.value - q).abs() < 1e-4,
            "identity {} quotient {q}",
            d.value
        );
    }

    #[test]
    fn limit_at_zero_of_linear_function_is_zero() {
        let f = FunctionHandle::new(1.0, |t: f64| t).unwrap();
        let d = conformable_derivative_at_zero(&f, alpha(0.5)).unwrap();
        assert!(d.value.abs() < 1e-9, "got {}", d.value);
    }

    #[test]
    fn limit_at_zero_diverges_for_low_power() {
        let f = FunctionHandle::new(1.0, |t: f64| t.powf(0.25)).unwrap();
        assert!(matches!(
            conformable_derivative_at_zero(&f, alpha(0.5)),
            Err(Error::NoLimit(_))
        ));
    }

    #[test]
    fn limit_at_zero_of_sin_alpha_is_one() {
        let al = alpha(0.6);
        let f = FunctionHandle::new(1.0, move |t: f64| ref_sin_alpha(t, al)).unwrap();
        let d = conformable_derivative_at_zero(&f, al).unwrap();
        assert!((d.value - 1.0).abs() < 1e-7, "got {}", d.value);
    }

    #[test]
    fn limit_at_zero_of_constant_is_zero() {
        let f = FunctionHandle::new(2.0, |_| 7.0).unwrap();
        let d = conformable_derivative_at_zero(&f, alpha(0.9)).unwrap();
        assert!(d.value.abs() < 1e-10, "got {}", d.value);
    }

    #[test]
    fn limit_at_zero_of_power_equal_to_alpha() {
        // f = t^p with p = alpha: f^(alpha)(t) = p exactly, for every t.
        let f = FunctionHandle::new(1.0, |t: f64| t.powf(0.5)).unwrap();
        let d = conformable_derivative_at_zero(&f, alpha(0.5)).unwrap();
        assert!((d.value - 0.5).abs() < 1e-9, "got {}", d.value);
    }

    #[test]
    fn integral_of_one_has_closed_form() {
        let f = FunctionHandle::unbounded(|_| 1.0);
        let got = fractional_integral(&f, 0.0, 2.0, alpha(0.5)).unwrap();
        let want = 2.0f64.powf(0.5) / 0.5; // t^alpha / alpha = 2 sqrt(2)
        assert!((got - want).abs() < 1e-12, "got {got} want {want}");
    }

    #[test]
    fn integral_rejects_empty_or_reversed_intervals() {
        let f = FunctionHandle::unbounded(|_| 1.0);
        assert!(matches!(
            fractional_integral(&f, 0.5, 0.5, alpha(0.5)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            fractional_integral(&f, 1.0, 0.5, alpha(0.5)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            fractional_integral(&f, -0.1, 0.5, alpha(0.5)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn integral_of_cos_alpha_is_sin_alpha() {
        // Fundamental theorem fixture: integrating the conformable
        // derivative of sin(t^alpha/alpha) recovers the function.
        let al = alpha(0.7);
        let f = FunctionHandle::unbounded(move |x: f64| ref_cos_alpha(x, al));
        let got = fractional_integral(&f, 0.0, 1.0, al).unwrap();
        let want = (1.0f64 / 0.7).sin();
        assert!((got - want).abs() < 1e-11, "got {got} want {want}");
    }

    /// Raw improper Riemann quadrature in the x variable: dyadic panels
    /// accumulating toward x = 0 without any substitution. Independent
    /// cross-check of the u = x^alpha path.
    fn raw_improper_integral(f: impl Fn(f64) -> f64, t: f64, al: f64) -> f64 {
        let weighted = |x: f64| f(x) * x.powf(al - 1.0);
        let mut total = 0.0;
        let mut hi = t;
        for _ in 0..200 {
            let lo = hi / 2.0;
            let piece = integrate_adaptive(weighted, lo, hi, 1e-15).unwrap();
            total += piece;
            if piece.abs() < 1e-14 && hi < 1e-6 {
                break;
            }
            hi = lo;
        }
        total
    }

    #[test]
    fn substitution_path_matches_raw_improper_quadrature() {
        for &(al, t) in &[(0.25, 1.0), (0.5, 2.0), (0.75, 0.8)] {
            let f = FunctionHandle::unbounded(|x: f64| (1.0 + x).ln() + 1.0);
            let got = fractional_integral(&f, 0.0, t, alpha(al)).unwrap();
            let raw = raw_improper_integral(|x| (1.0 + x).ln() + 1.0, t, al);
            assert!(
                (got - raw).abs() < 1e-9,
                "alpha {al} t {t}: substitution {got} raw {raw}"
            );
        }
    }

    #[test]
    fn reference_functions_at_zero() {
        assert_eq!(ref_exp_alpha(0.0, alpha(0.5)), 1.0);
        assert_eq!(ref_cos_alpha(0.0, alpha(0.3)), 1.0);
        assert_eq!(ref_sin_alpha(0.0, alpha(0.8)), 0.0);
        // alpha = 1 reduces to the classical functions.
        assert!((ref_sin_alpha(1.0, alpha(1.0)) - 1.0f64.sin()).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn derivative_is_linear(
            a in -3.0f64..3.0,
            b in -3.0f64..3.0,
            t in 0.3f64..2.5,
            al in 0.2f64..1.0,
        ) {
            let al = alpha(al);
            let f = |x: f64| x * x + x.sin();
            let g = |x: f64| (0.5 * x).exp();
            let combo = FunctionHandle::unbounded(move |x| a * f(x) + b * g(x));
            let fh = FunctionHandle::unbounded(f);
            let gh = FunctionHandle::unbounded(g);
            let lhs = conformable_derivative(&combo, t, al).unwrap().value;
            let rhs = a * conformable_derivative(&fh, t, al).unwrap().value
                + b * conformable_derivative(&gh, t, al).unwrap().value;
            prop_assert!((lhs - rhs).abs() < 1e-9 * (1.0 + lhs.abs()));
        }

        #[test]
        fn derivative_satisfies_product_rule(
            t in 0.3f64..2.5,
            al in 0.2f64..1.0,
        ) {
            let al = alpha(al);
            let f = |x: f64| 1.0 + x * x;
            let g = |x: f64| (x + 0.5).ln();
            let prod = FunctionHandle::unbounded(move |x| f(x) * g(x));
            let fh = FunctionHandle::unbounded(f);
            let gh = FunctionHandle::unbounded(g);
            let lhs = conformable_derivative(&prod, t, al).unwrap().value;
            let rhs = f(t) * conformable_derivative(&gh, t, al).unwrap().value
                + g(t) * conformable_derivative(&fh, t, al).unwrap().value;
            prop_assert!(rel_err(lhs, rhs) < 1e-7);
        }

        #[test]
        fn integral_then_derivative_recovers_integrand(
            t in 0.4f64..2.0,
            al in 0.25f64..1.0,
        ) {
            let al = alpha(al);
            let f = FunctionHandle::unbounded(|x: f64| 1.5 + (0.7 * x).cos());
            let fi = f.clone();
            let integral = FunctionHandle::unbounded(move |s: f64| {
                if s == 0.0 {
                    0.0
                } else {
                    fractional_integral(&fi, 0.0, s, al).unwrap()
                }
            });
            let d = conformable_derivative(&integral, t, al).unwrap();
            prop_assert!(rel_err(d.value, f.eval(t)) < 1e-6);
        }
    }
}
