//! The alpha-abstract Cauchy problem u^(alpha)(t) = A u(t), u(0) = u0.
//!
//! The unique solution is u(t) = T(t) u0 with T the alpha-semigroup
//! generated by A; [`solve_exact`] evaluates it through the matrix
//! exponential. [`solve_numeric`] is an independent cross-validation
//! oracle: the substitution tau = t^alpha / alpha turns the equation into
//! the classical linear system du/dtau = A u, which is integrated by
//! fixed-step fourth-order Runge-Kutta. [`residual_check`] measures how
//! well a sampled trajectory satisfies the differential equation itself.

use crate::calculus::{derivative_with, AlphaOrder};
use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, StateVector};
use crate::scalar::{real, Real};
use crate::semigroup::AlphaSemigroup;

/// Generator, initial state, order and time horizon of one problem.
#[derive(Clone, Debug)]
pub struct CauchyProblem<T> {
    generator: DenseMatrix<T>,
    initial: StateVector<T>,
    alpha: AlphaOrder<T>,
    horizon: T,
}

impl<T: Real> CauchyProblem<T> {
    pub fn new(
        generator: DenseMatrix<T>,
        initial: StateVector<T>,
        alpha: AlphaOrder<T>,
        horizon: T,
    ) -> Result<Self> {
        if initial.dim() != generator.dim() {
            return Err(Error::Dimension(format!(
                "initial state has length {}, generator is {1}x{1}",
                initial.dim(),
                generator.dim()
            )));
        }
        if !(horizon > T::zero() && horizon.is_finite()) {
            return Err(Error::Domain(format!(
                "horizon must be positive and finite, got {horizon}"
            )));
        }
        Ok(CauchyProblem {
            generator,
            initial,
            alpha,
            horizon,
        })
    }

    pub fn generator(&self) -> &DenseMatrix<T> {
        &self.generator
    }

    pub fn initial(&self) -> &StateVector<T> {
        &self.initial
    }

    pub fn alpha(&self) -> AlphaOrder<T> {
        self.alpha
    }

    pub fn horizon(&self) -> T {
        self.horizon
    }

    pub fn semigroup(&self) -> AlphaSemigroup<T> {
        AlphaSemigroup::new(self.generator.clone(), self.alpha)
    }
}

/// A sampled solution path: strictly increasing times starting at 0 and
/// one finite state per time.
#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory<T> {
    times: Vec<T>,
    states: Vec<StateVector<T>>,
}

impl<T: Real> Trajectory<T> {
    pub fn new(times: Vec<T>, states: Vec<StateVector<T>>) -> Result<Self> {
        if times.len() != states.len() {
            return Err(Error::Dimension(format!(
                "{} times but {} states",
                times.len(),
                states.len()
            )));
        }
        if times.is_empty() || times[0] != T::zero() {
            return Err(Error::Domain("trajectory times must start at 0".into()));
        }
        if times.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::Domain(
                "trajectory times must be strictly increasing".into(),
            ));
        }
        let dim = states[0].dim();
        if states.iter().any(|s| s.dim() != dim) {
            return Err(Error::Dimension(
                "all trajectory states must have the same length".into(),
            ));
        }
        if states.iter().any(|s| !s.is_finite()) {
            return Err(Error::NonFinite("trajectory states must be finite".into()));
        }
        Ok(Trajectory { times, states })
    }

    pub fn times(&self) -> &[T] {
        &self.times
    }

    pub fn states(&self) -> &[StateVector<T>] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn last_state(&self) -> &StateVector<T> {
        self.states.last().expect("trajectories are never empty")
    }
}

/// Evaluates u(t_k) = T(t_k) u0 at the requested times.
///
/// The times must be sorted strictly increasing, start at 0 and stay within
/// the problem horizon. The first state is the initial state bitwise.
pub fn solve_exact<T: Real>(problem: &CauchyProblem<T>, times: &[T]) -> Result<Trajectory<T>> {
    if times.is_empty() || times[0] != T::zero() {
        return Err(Error::Domain("sample times must start at 0".into()));
    }
    if times.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Domain(
            "sample times must be strictly increasing".into(),
        ));
    }
    if *times.last().unwrap() > problem.horizon() {
        return Err(Error::Domain(format!(
            "sample times exceed the horizon {}",
            problem.horizon()
        )));
    }
    let semigroup = problem.semigroup();
    let mut states = Vec::with_capacity(times.len());
    for &t in times {
        states.push(semigroup.apply(t, problem.initial())?);
    }
    Trajectory::new(times.to_vec(), states)
}

/// Integrates du/dtau = A u by classical fourth-order Runge-Kutta on a
/// uniform grid in tau = t^alpha / alpha over [0, horizon^alpha / alpha],
/// reporting states at the corresponding t values. Global error is
/// O(n_steps^-4). Entirely independent of the matrix-exponential path.
pub fn solve_numeric<T: Real>(problem: &CauchyProblem<T>, n_steps: usize) -> Result<Trajectory<T>> {
    if n_steps == 0 {
        return Err(Error::Domain("n_steps must be at least 1".into()));
    }
    let a = problem.alpha().value();
    let one = T::one();
    let tau_max = problem.horizon().powf(a) / a;
    let dtau = tau_max / real(n_steps as f64);
    let generator = problem.generator();
    let n = generator.dim();

    let mut u: Vec<T> = problem.initial().values().to_vec();
    let mut times = Vec::with_capacity(n_steps + 1);
    let mut states = Vec::with_capacity(n_steps + 1);
    times.push(T::zero());
    states.push(problem.initial().clone());

    let matvec = |v: &[T]| -> Vec<T> {
        let mut out = vec![T::zero(); n];
        for i in 0..n {
            let mut acc = T::zero();
            for j in 0..n {
                acc += generator[(i, j)] * v[j];
            }
            out[i] = acc;
        }
        out
    };
    let shifted = |v: &[T], k: &[T], factor: T| -> Vec<T> {
        v.iter().zip(k).map(|(&vi, &ki)| vi + factor * ki).collect()
    };

    let half = dtau / real(2.0);
    let sixth = dtau / real(6.0);
    for step in 1..=n_steps {
        let k1 = matvec(&u);
        let k2 = matvec(&shifted(&u, &k1, half));
        let k3 = matvec(&shifted(&u, &k2, half));
        let k4 = matvec(&shifted(&u, &k3, dtau));
        for i in 0..n {
            u[i] += sixth * (k1[i] + real::<T>(2.0) * (k2[i] + k3[i]) + k4[i]);
        }
        if u.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite(format!(
                "state overflowed at integration step {step}"
            )));
        }
        // Mapping tau back through the power can round the endpoint just
        // past the horizon; pin it.
        let t = if step == n_steps {
            problem.horizon()
        } else {
            (a * dtau * real(step as f64)).powf(one / a)
        };
        times.push(t);
        states.push(StateVector::new(u.clone())?);
    }
    Trajectory::new(times, states)
}

/// Minimum number of interior samples required by [`residual_check`].
const MIN_INTERIOR_SAMPLES: usize = 5;

/// Maximum over interior sample times of |D^alpha u(t) - A u(t)| in the
/// Euclidean norm, where D^alpha is the numerical conformable derivative of
/// a cubic interpolant through the four samples nearest each query point.
///
/// The interpolant is built on the tau = t^alpha / alpha parametrization of
/// the samples, in which the conformable derivative is the classical slope;
/// interpolating in raw t instead would lose several digits near the origin
/// for alpha < 1, where the solution's higher t-derivatives blow up.
///
/// t = 0 is excluded: there the conformable derivative exists only as a
/// limit, and the solution is only required to be alpha-differentiable on
/// the open half-line.
pub fn residual_check<T: Real>(
    problem: &CauchyProblem<T>,
    trajectory: &Trajectory<T>,
) -> Result<T> {
    let len = trajectory.len();
    if len < MIN_INTERIOR_SAMPLES + 2 {
        return Err(Error::InsufficientSamples(format!(
            "need at least {} samples ({MIN_INTERIOR_SAMPLES} interior), got {len}",
            MIN_INTERIOR_SAMPLES + 2
        )));
    }
    let n = problem.generator().dim();
    if trajectory.states()[0].dim() != n {
        return Err(Error::Dimension(
            "trajectory dimension does not match the generator".into(),
        ));
    }
    let a = problem.alpha().value();
    let taus: Vec<T> = trajectory.times().iter().map(|&t| t.powf(a) / a).collect();
    let tau_end = *taus.last().unwrap();
    let mut worst = T::zero();
    for m in 1..len - 1 {
        if !(trajectory.times()[m] > T::zero()) {
            continue;
        }
        let mut derivative = Vec::with_capacity(n);
        for i in 0..n {
            let interpolant = |s: T| interpolate_component(&taus, trajectory, i, s);
            derivative
                .push(derivative_with(interpolant, tau_end, taus[m], AlphaOrder::one())?.value);
        }
        let lhs = StateVector::new(derivative)?;
        let rhs = problem.generator().apply(&trajectory.states()[m])?;
        worst = worst.max(lhs.sub(&rhs).norm());
    }
    Ok(worst)
}

/// Cubic Lagrange interpolation of component `i` through the four samples
/// nearest to the abscissa `s`, with sample abscissas `xs`.
fn interpolate_component<T: Real>(xs: &[T], trajectory: &Trajectory<T>, i: usize, s: T) -> T {
    let len = xs.len();
    // Grow the window outward from the bracketing pair, always taking the
    // closer neighbour, so a distant node (the origin, say) is only used
    // when nothing nearer is left.
    let anchor = xs.partition_point(|&x| x <= s).saturating_sub(1);
    let mut lo = anchor;
    let mut hi = anchor;
    while hi - lo < 3 {
        let left_gap = if lo > 0 {
            s - xs[lo - 1]
        } else {
            T::infinity()
        };
        let right_gap = if hi + 1 < len {
            xs[hi + 1] - s
        } else {
            T::infinity()
        };
        if left_gap <= right_gap {
            lo -= 1;
        } else {
            hi += 1;
        }
    }
    let start = lo;
    let window = &xs[start..start + 4];
    let mut acc = T::zero();
    for (a, &xa) in window.iter().enumerate() {
        let mut basis = T::one();
        for (b, &xb) in window.iter().enumerate() {
            if a != b {
                basis = basis * (s - xb) / (xa - xb);
            }
        }
        acc += basis * trajectory.states()[start + a][i];
    }
    acc
}
