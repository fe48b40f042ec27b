//! The translation alpha-semigroup on sampled function spaces and the
//! fractional transport equation.
//!
//! On functions, (T(t) f)(x) = f(x + t^alpha / alpha): the graph moves left
//! by t^alpha / alpha, and the generator of the family is d/dx. The same
//! shift solves the fractional transport problem: u(x, t) = g(x + t^alpha /
//! alpha) is the unique solution of d^alpha u / dt^alpha = du/dx with
//! initial profile g. The module carries both this characteristic solution
//! and an independent first-order upwind scheme marching in the stretched
//! time tau = t^alpha / alpha, in which the equation is classical
//! left-moving advection with no singular coefficient.

use crate::calculus::{derivative_with, AlphaOrder, FunctionHandle};
use crate::error::{Error, Result};
use crate::scalar::{real, Real};

/// Uniform grid on [0, L] with at least three points.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid1D<T> {
    x_max: T,
    n_points: usize,
}

impl<T: Real> Grid1D<T> {
    pub fn new(x_max: T, n_points: usize) -> Result<Self> {
        if !(x_max > T::zero() && x_max.is_finite()) {
            return Err(Error::Domain(format!(
                "grid length must be positive and finite, got {x_max}"
            )));
        }
        if n_points < 3 {
            return Err(Error::Domain(format!(
                "grid needs at least 3 points, got {n_points}"
            )));
        }
        Ok(Grid1D { x_max, n_points })
    }

    #[inline]
    pub fn x_min(&self) -> T {
        T::zero()
    }

    #[inline]
    pub fn x_max(&self) -> T {
        self.x_max
    }

    #[inline]
    pub fn n_points(&self) -> usize {
        self.n_points
    }

    #[inline]
    pub fn spacing(&self) -> T {
        self.x_max / real((self.n_points - 1) as f64)
    }

    #[inline]
    pub fn point(&self, i: usize) -> T {
        // Computed as a fraction of the length so the last point is x_max
        // up to one rounding.
        self.x_max * real::<T>(i as f64) / real((self.n_points - 1) as f64)
    }

    pub fn points(&self) -> impl Iterator<Item = T> + '_ {
        (0..self.n_points).map(move |i| self.point(i))
    }

    /// Grid samples of a scalar function.
    pub fn sample<F: Fn(T) -> T>(&self, f: F) -> Result<GridFunction<T>> {
        GridFunction::new(*self, self.points().map(f).collect())
    }
}

/// Real values on a [`Grid1D`].
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction<T> {
    grid: Grid1D<T>,
    values: Vec<T>,
}

impl<T: Real> GridFunction<T> {
    pub fn new(grid: Grid1D<T>, values: Vec<T>) -> Result<Self> {
        if values.len() != grid.n_points() {
            return Err(Error::Dimension(format!(
                "grid has {} points but {} values were given",
                grid.n_points(),
                values.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("grid values must be finite".into()));
        }
        Ok(GridFunction { grid, values })
    }

    pub fn grid(&self) -> &Grid1D<T> {
        &self.grid
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn sup_norm(&self) -> T {
        self.values
            .iter()
            .fold(T::zero(), |acc, &v| acc.max(v.abs()))
    }

    /// Largest absolute pointwise difference.
    pub fn sup_distance(&self, other: &Self) -> Result<T> {
        if self.grid != other.grid {
            return Err(Error::Dimension(
                "grid functions live on different grids".into(),
            ));
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .fold(T::zero(), |acc, (&a, &b)| acc.max((a - b).abs())))
    }
}

/// Initial profile, order, spatial grid and time horizon of one transport
/// problem. The profile must be evaluable on the full characteristic reach
/// [0, x_max + horizon^alpha / alpha].
#[derive(Clone, Debug)]
pub struct TransportProblem<T> {
    profile: FunctionHandle<T>,
    alpha: AlphaOrder<T>,
    grid: Grid1D<T>,
    horizon: T,
}

impl<T: Real> TransportProblem<T> {
    pub fn new(
        profile: FunctionHandle<T>,
        alpha: AlphaOrder<T>,
        grid: Grid1D<T>,
        horizon: T,
    ) -> Result<Self> {
        if !(horizon > T::zero() && horizon.is_finite()) {
            return Err(Error::Domain(format!(
                "horizon must be positive and finite, got {horizon}"
            )));
        }
        let reach = grid.x_max() + horizon.powf(alpha.value()) / alpha.value();
        if profile.t_max() < reach {
            return Err(Error::Domain(format!(
                "profile domain [0, {}] does not cover the characteristic reach [0, {reach}]",
                profile.t_max()
            )));
        }
        Ok(TransportProblem {
            profile,
            alpha,
            grid,
            horizon,
        })
    }

    pub fn profile(&self) -> &FunctionHandle<T> {
        &self.profile
    }

    pub fn alpha(&self) -> AlphaOrder<T> {
        self.alpha
    }

    pub fn grid(&self) -> &Grid1D<T> {
        &self.grid
    }

    pub fn horizon(&self) -> T {
        self.horizon
    }
}

/// Applies the translation semigroup: values[i] = g(x_i + t^alpha / alpha).
pub fn translation_apply<T: Real>(
    g: &FunctionHandle<T>,
    t: T,
    alpha: AlphaOrder<T>,
    grid: &Grid1D<T>,
) -> Result<GridFunction<T>> {
    if !(t >= T::zero()) {
        return Err(Error::Domain(format!("translation needs t >= 0, got {t}")));
    }
    let shift = if t == T::zero() {
        T::zero()
    } else {
        t.powf(alpha.value()) / alpha.value()
    };
    if grid.x_max() + shift > g.t_max() {
        return Err(Error::Domain(format!(
            "shift {shift} pushes the grid outside the profile domain [0, {}]",
            g.t_max()
        )));
    }
    grid.sample(|x| g.eval(x + shift))
}

/// Applies the generator of the translation family, d/dx: second-order
/// central differences inside, second-order one-sided stencils at the two
/// boundary points. Smoothness failures show up as large downstream
/// residuals rather than errors.
pub fn translation_generator_apply<T: Real>(f: &GridFunction<T>) -> GridFunction<T> {
    let n = f.grid().n_points();
    let dx = f.grid().spacing();
    let v = f.values();
    let two = real::<T>(2.0);
    let mut out = vec![T::zero(); n];
    out[0] = (real::<T>(-3.0) * v[0] + real::<T>(4.0) * v[1] - v[2]) / (two * dx);
    for i in 1..n - 1 {
        out[i] = (v[i + 1] - v[i - 1]) / (two * dx);
    }
    out[n - 1] = (real::<T>(3.0) * v[n - 1] - real::<T>(4.0) * v[n - 2] + v[n - 3]) / (two * dx);
    GridFunction {
        grid: *f.grid(),
        values: out,
    }
}

/// The characteristic solution u(x, t) = g(x + t^alpha / alpha) on the grid.
pub fn solve_transport_exact<T: Real>(
    problem: &TransportProblem<T>,
    t: T,
) -> Result<GridFunction<T>> {
    if t > problem.horizon() {
        return Err(Error::Domain(format!(
            "t = {t} exceeds the horizon {}",
            problem.horizon()
        )));
    }
    translation_apply(problem.profile(), t, problem.alpha(), problem.grid())
}

/// First-order upwind solution at time t with `n_steps` uniform steps in
/// tau = t^alpha / alpha.
///
/// The characteristic moves leftward, so the scheme uses the forward
/// spatial difference; the right boundary takes the exact inflow value
/// g(x_max + tau) at each new time level. Requires the CFL bound
/// dtau <= dx.
pub fn solve_transport_fd<T: Real>(
    problem: &TransportProblem<T>,
    t: T,
    n_steps: usize,
) -> Result<GridFunction<T>> {
    if !(t >= T::zero()) {
        return Err(Error::Domain(format!("time must be nonnegative, got {t}")));
    }
    if t > problem.horizon() {
        return Err(Error::Domain(format!(
            "t = {t} exceeds the horizon {}",
            problem.horizon()
        )));
    }
    if n_steps == 0 {
        return Err(Error::Domain("n_steps must be at least 1".into()));
    }
    let alpha = problem.alpha().value();
    let grid = problem.grid();
    let g = problem.profile();
    let tau_final = if t == T::zero() {
        T::zero()
    } else {
        t.powf(alpha) / alpha
    };
    let dtau = tau_final / real(n_steps as f64);
    let dx = grid.spacing();
    if dtau > dx {
        return Err(Error::CflViolation(format!(
            "dtau = {dtau} exceeds dx = {dx}; increase n_steps or refine in time"
        )));
    }
    if grid.x_max() + tau_final > g.t_max() {
        return Err(Error::Domain(format!(
            "profile domain [0, {}] cannot supply inflow data up to {}",
            g.t_max(),
            grid.x_max() + tau_final
        )));
    }

    let n = grid.n_points();
    let ratio = dtau / dx;
    let mut u: Vec<T> = grid.points().map(|x| g.eval(x)).collect();
    for step in 1..=n_steps {
        let tau = dtau * real(step as f64);
        for i in 0..n - 1 {
            u[i] = u[i] + ratio * (u[i + 1] - u[i]);
        }
        u[n - 1] = g.eval(grid.x_max() + tau);
        if u.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite(format!(
                "upwind state became non-finite at step {step}"
            )));
        }
    }
    GridFunction::new(*grid, u)
}

/// Maximum over interior grid points of the defect
/// |D^alpha_t u(x, t) - D_x u(x, t)| of the exact solution, with the time
/// derivative from the conformable differencing of t -> u(x, t) and the
/// space derivative from [`translation_generator_apply`].
pub fn pde_residual<T: Real>(problem: &TransportProblem<T>, t: T) -> Result<T> {
    if !(t > T::zero() && t <= problem.horizon()) {
        return Err(Error::Domain(format!(
            "residual check needs 0 < t <= horizon, got {t}"
        )));
    }
    let alpha = problem.alpha();
    let grid = problem.grid();
    let g = problem.profile();
    let space = translation_generator_apply(&solve_transport_exact(problem, t)?);
    let mut worst = T::zero();
    for i in 1..grid.n_points() - 1 {
        let x = grid.point(i);
        let along_time = |s: T| {
            let shift = s.powf(alpha.value()) / alpha.value();
            g.eval(x + shift)
        };
        // The time stencil may reach past the horizon as long as the
        // profile can supply the shifted values.
        let t_available = if g.t_max().is_finite() {
            ((g.t_max() - x) * alpha.value()).powf(T::one() / alpha.value())
        } else {
            T::infinity()
        };
        let time_derivative = derivative_with(along_time, t_available, t, alpha)?.value;
        worst = worst.max((time_derivative - space.values()[i]).abs());
    }
    Ok(worst)
}
