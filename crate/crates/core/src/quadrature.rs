//! Composite Gauss-Legendre quadrature with adaptive panel refinement.
//!
//! Nodes and weights are generated at call time by Newton iteration on the
//! Legendre polynomial recurrence, so no tabulated constants are needed and
//! the rule is computed directly in the working scalar type.

use crate::error::{Error, Result};
use crate::scalar::{real, Real};

/// Order of the per-panel rule. A 15-point rule integrates polynomials up
/// to degree 29 exactly, which keeps the adaptive tree shallow for the
/// smooth integrands produced by the u = x^alpha substitution.
const PANEL_POINTS: usize = 15;

/// Hard cap on bisection depth; reaching it means the local tolerance is
/// finer than the scalar type can resolve and the panel is accepted as is.
const MAX_DEPTH: usize = 48;

/// Gauss-Legendre nodes and weights on [-1, 1].
pub fn gauss_legendre_rule<T: Real>(n: usize) -> (Vec<T>, Vec<T>) {
    assert!(n >= 2, "rule order must be at least 2");
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    let pi = real::<T>(std::f64::consts::PI);
    let nf = real::<T>(n as f64);
    for i in 0..n {
        // Tricomi-style initial guess, then Newton on P_n(x) = 0.
        let k = real::<T>(i as f64);
        let mut x = (pi * (k + real(0.75))) / (nf + real(0.5));
        x = x.cos();
        let mut dp = T::zero();
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let step = p / d;
            x -= step;
            if step.abs() <= T::epsilon() * (x.abs() + T::one()) {
                let (_, d2) = legendre_with_derivative(n, x);
                dp = d2;
                break;
            }
        }
        nodes[i] = x;
        weights[i] = real::<T>(2.0) / ((T::one() - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// P_n(x) and P_n'(x) from the three-term recurrence.
fn legendre_with_derivative<T: Real>(n: usize, x: T) -> (T, T) {
    let mut p_prev = T::one();
    let mut p = x;
    for m in 2..=n {
        let mf = real::<T>(m as f64);
        let next = ((real::<T>(2.0) * mf - T::one()) * x * p - (mf - T::one()) * p_prev) / mf;
        p_prev = p;
        p = next;
    }
    // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    let nf = real::<T>(n as f64);
    let dp = nf * (x * p - p_prev) / (x * x - T::one());
    (p, dp)
}

fn panel<T: Real, F: Fn(T) -> T>(f: &F, a: T, b: T, nodes: &[T], weights: &[T]) -> T {
    let half = (b - a) / real(2.0);
    let mid = (a + b) / real(2.0);
    let mut acc = T::zero();
    for (&x, &w) in nodes.iter().zip(weights) {
        acc += w * f(mid + half * x);
    }
    acc * half
}

/// Integrates `f` over [a, b] to the requested absolute tolerance by
/// recursive panel bisection, comparing each panel against the sum of its
/// halves. Returns `NonFinite` if any panel evaluates to NaN or infinity.
pub fn integrate_adaptive<T: Real, F: Fn(T) -> T>(f: F, a: T, b: T, abs_tol: T) -> Result<T> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain("integration bounds must be finite".into()));
    }
    if b == a {
        return Ok(T::zero());
    }
    let (nodes, weights) = gauss_legendre_rule::<T>(PANEL_POINTS);
    // Floor the per-panel tolerance so f32 instantiations terminate.
    let tol = abs_tol.max(real::<T>(4.0) * T::epsilon());
    let whole = panel(&f, a, b, &nodes, &weights);
    if !whole.is_finite() {
        return Err(Error::NonFinite(format!(
            "integrand produced a non-finite panel value on [{a}, {b}]"
        )));
    }
    refine(&f, a, b, whole, tol, 0, &nodes, &weights)
}

#[allow(clippy::too_many_arguments)]
fn refine<T: Real, F: Fn(T) -> T>(
    f: &F,
    a: T,
    b: T,
    coarse: T,
    tol: T,
    depth: usize,
    nodes: &[T],
    weights: &[T],
) -> Result<T> {
    let mid = (a + b) / real(2.0);
    let left = panel(f, a, mid, nodes, weights);
    let right = panel(f, mid, b, nodes, weights);
    if !(left.is_finite() && right.is_finite()) {
        return Err(Error::NonFinite(format!(
            "integrand produced a non-finite panel value on [{a}, {b}]"
        )));
    }
    let fine = left + right;
    if (fine - coarse).abs() <= tol || depth >= MAX_DEPTH {
        return Ok(fine);
    }
    let half_tol = tol / real(2.0);
    let l = refine(f, a, mid, left, half_tol, depth + 1, nodes, weights)?;
    let r = refine(f, mid, b, right, half_tol, depth + 1, nodes, weights)?;
    Ok(l + r)
}
