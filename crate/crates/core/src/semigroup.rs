//! Finite-dimensional fractional alpha-semigroups.
//!
//! For a matrix generator A the family T(t) = exp((t^alpha / alpha) A)
//! satisfies T(0) = I and the alpha-semigroup law
//! T((s+t)^(1/alpha)) = T(s^(1/alpha)) T(t^(1/alpha)); at alpha = 1 it is
//! the classical semigroup exp(tA). The generator is the conformable
//! alpha-derivative of t -> T(t) at t = 0, which this module can recover
//! from the family treated as a black box, and the commutation identity
//! T^(alpha)(t) x = A T(t) x = T(t) A x can be checked numerically.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::calculus::{derivative_at_zero_with, derivative_with, AlphaOrder};
use crate::error::{Error, Result};
use crate::matrix::{matrix_exponential, DenseMatrix, StateVector};
use crate::scalar::Real;

/// The matrix alpha-semigroup T(t) = exp((t^alpha / alpha) A).
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaSemigroup<T> {
    generator: DenseMatrix<T>,
    alpha: AlphaOrder<T>,
}

impl<T: Real> AlphaSemigroup<T> {
    pub fn new(generator: DenseMatrix<T>, alpha: AlphaOrder<T>) -> Self {
        AlphaSemigroup { generator, alpha }
    }

    pub fn generator(&self) -> &DenseMatrix<T> {
        &self.generator
    }

    pub fn alpha(&self) -> AlphaOrder<T> {
        self.alpha
    }

    pub fn dim(&self) -> usize {
        self.generator.dim()
    }

    /// T(t) for t >= 0. At t = 0 the identity is returned exactly, without
    /// going through the exponential.
    pub fn evaluate(&self, t: T) -> Result<DenseMatrix<T>> {
        if !(t >= T::zero()) {
            return Err(Error::Domain(format!(
                "semigroup evaluation needs t >= 0, got {t}"
            )));
        }
        if t == T::zero() {
            return Ok(DenseMatrix::identity(self.dim()));
        }
        let a = self.alpha.value();
        let factor = t.powf(a) / a;
        matrix_exponential(&self.generator.scale(factor))
    }

    /// T(t) x.
    pub fn apply(&self, t: T, x: &StateVector<T>) -> Result<StateVector<T>> {
        self.evaluate(t)?.apply(x)
    }

    /// Recovers the generator from this family treated as a black box;
    /// see [`estimate_generator`].
    pub fn recover_generator(&self, horizon: T) -> Result<DenseMatrix<T>> {
        estimate_generator(|t| self.evaluate(t), self.dim(), self.alpha, horizon)
    }
}

/// Frobenius norm of T((s+t)^(1/alpha)) - T(s^(1/alpha)) T(t^(1/alpha)),
/// the defect of the alpha-semigroup law at (s, t).
///
/// The exponent 1/alpha applies to the time argument: the law composes the
/// family at the times s^(1/alpha) and t^(1/alpha), which is the reading
/// under which T(t^alpha)^(1/alpha) collapses to T(t).
pub fn semigroup_law_residual<T: Real>(semigroup: &AlphaSemigroup<T>, s: T, t: T) -> Result<T> {
    if !(s >= T::zero() && t >= T::zero()) {
        return Err(Error::Domain(format!(
            "the semigroup law needs s, t >= 0, got s = {s}, t = {t}"
        )));
    }
    let inv = T::one() / semigroup.alpha().value();
    let combined = semigroup.evaluate((s + t).powf(inv))?;
    let left = semigroup.evaluate(s.powf(inv))?;
    let right = semigroup.evaluate(t.powf(inv))?;
    Ok(combined.sub(&left.matmul(&right)).norm_frobenius())
}

/// Estimates the generator of a black-box alpha-semigroup family.
///
/// The family is probed along the canonical basis: entry (i, j) of the
/// estimate is the conformable alpha-derivative at t = 0 of
/// t -> (T(t) e_j)_i, detected by the limit machinery of the calculus
/// module over evaluations on [0, horizon]. For the exp((t^alpha/alpha) A)
/// family the estimate converges to A.
///
/// A `NoLimit` error from any entry is propagated with the entry named.
pub fn estimate_generator<T, F>(
    family: F,
    dim: usize,
    alpha: AlphaOrder<T>,
    horizon: T,
) -> Result<DenseMatrix<T>>
where
    T: Real,
    F: Fn(T) -> Result<DenseMatrix<T>>,
{
    if !(horizon > T::zero() && horizon.is_finite()) {
        return Err(Error::Domain(format!(
            "generator estimation needs a finite horizon > 0, got {horizon}"
        )));
    }
    // Every entry probes the family at the same abscissas, so one shared
    // memo table removes an n^2 factor of black-box evaluations.
    let cache: RefCell<HashMap<u64, Option<DenseMatrix<T>>>> = RefCell::new(HashMap::new());
    let sample = |t: T| -> Option<DenseMatrix<T>> {
        let key = num_traits::ToPrimitive::to_f64(&t)
            .unwrap_or(f64::NAN)
            .to_bits();
        cache
            .borrow_mut()
            .entry(key)
            .or_insert_with(|| family(t).ok())
            .clone()
    };
    let mut out = DenseMatrix::zeros(dim);
    for j in 0..dim {
        for i in 0..dim {
            // Evaluation failures surface as NaN samples and are reported
            // by the limit detector as NonFinite.
            let entry = |t: T| match sample(t) {
                Some(m) => m[(i, j)],
                None => T::nan(),
            };
            let d = derivative_at_zero_with(entry, horizon, alpha).map_err(|e| match e {
                Error::NoLimit(msg) => {
                    Error::NoLimit(format!("entry ({i}, {j}) of the generator: {msg}"))
                }
                other => other,
            })?;
            out[(i, j)] = d.value;
        }
    }
    Ok(out)
}

/// Residuals of the commutation identity at (t, x):
/// (|D - A T(t) x|, |D - T(t) A x|) in the Euclidean norm, where D is the
/// numerical conformable alpha-derivative of t -> T(t) x.
pub fn commutation_residual<T: Real>(
    semigroup: &AlphaSemigroup<T>,
    t: T,
    x: &StateVector<T>,
) -> Result<(T, T)> {
    if !(t > T::zero()) {
        return Err(Error::Domain(format!(
            "commutation check needs t > 0, got {t}"
        )));
    }
    let n = semigroup.dim();
    if x.dim() != n {
        return Err(Error::Dimension(format!(
            "state has length {}, generator is {n}x{n}",
            x.dim()
        )));
    }
    // Differencing stays well inside the domain with a doubled horizon.
    let t_max = t + t.max(T::one());
    let mut derivative = Vec::with_capacity(n);
    for i in 0..n {
        let entry = |s: T| match semigroup.apply(s, x) {
            Ok(v) => v[i],
            Err(_) => T::nan(),
        };
        derivative.push(derivative_with(entry, t_max, t, semigroup.alpha())?.value);
    }
    let d = StateVector::new(derivative)?;

    let evolved = semigroup.apply(t, x)?;
    let generator_after = semigroup.generator().apply(&evolved)?;
    let pushed = semigroup.generator().apply(x)?;
    let generator_before = semigroup.evaluate(t)?.apply(&pushed)?;
    Ok((
        d.sub(&generator_after).norm(),
        d.sub(&generator_before).norm(),
    ))
}
