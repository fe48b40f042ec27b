//! Dispatch from a validated [`JobSpec`] to the library operations.

use conformable::calculus::{
    conformable_derivative, conformable_derivative_at_zero, fractional_integral,
};
use conformable::cauchy::{solve_exact, solve_numeric};
use conformable::semigroup::semigroup_law_residual;
use conformable::transport::{solve_transport_exact, solve_transport_fd};
use conformable::{
    AlphaOrder64, AlphaSemigroup64, CauchyProblem64, DenseMatrix64, Grid1D64, StateVector64,
    TransportProblem64,
};

use crate::report::{Check, ResultReport};
use crate::spec::{CauchyMethod, JobSpec, TransportMethod};
use crate::{suite, CliError};

pub fn run(spec: &JobSpec) -> Result<ResultReport, CliError> {
    match spec {
        JobSpec::Deriv {
            alpha,
            profile,
            t,
            domain,
        } => {
            let alpha = AlphaOrder64::new(*alpha).map_err(CliError::Core)?;
            let f = profile.build(alpha, *domain)?;
            let result = if *t == 0.0 {
                conformable_derivative_at_zero(&f, alpha)
            } else {
                conformable_derivative(&f, *t, alpha)
            }
            .map_err(CliError::Core)?;
            Ok(ResultReport::new("deriv")
                .scalar("value", result.value)
                .scalar("step_used", result.step_used)
                .scalar("estimated_error", result.estimated_error)
                .table(
                    &["value", "step_used", "estimated_error"],
                    vec![vec![result.value, result.step_used, result.estimated_error]],
                ))
        }
        JobSpec::Integrate {
            alpha,
            profile,
            a,
            t,
        } => {
            let alpha = AlphaOrder64::new(*alpha).map_err(CliError::Core)?;
            let f = profile.build(alpha, None)?;
            let value = fractional_integral(&f, *a, *t, alpha).map_err(CliError::Core)?;
            Ok(ResultReport::new("integrate")
                .scalar("value", value)
                .table(&["value"], vec![vec![value]]))
        }
        JobSpec::SemigroupCheck {
            alpha,
            generator,
            s,
            t,
        } => {
            let alpha = AlphaOrder64::new(*alpha).map_err(CliError::Core)?;
            let a = DenseMatrix64::from_rows(generator).map_err(CliError::Core)?;
            let sg = AlphaSemigroup64::new(a.clone(), alpha);
            let identity_exact =
                sg.evaluate(0.0).map_err(CliError::Core)? == DenseMatrix64::identity(a.dim());
            let mut rows = Vec::new();
            let mut max_residual: f64 = 0.0;
            for &sv in s {
                for &tv in t {
                    let residual = semigroup_law_residual(&sg, sv, tv).map_err(CliError::Core)?;
                    max_residual = max_residual.max(residual);
                    rows.push(vec![sv, tv, residual]);
                }
            }
            Ok(ResultReport::new("semigroup-check")
                .scalar("max_residual", max_residual)
                .table(&["s", "t", "residual"], rows)
                .checks(vec![Check {
                    case: "identity_at_zero".into(),
                    passed: identity_exact,
                    residual: if identity_exact { 0.0 } else { f64::NAN },
                }]))
        }
        JobSpec::GenEstimate {
            alpha,
            generator,
            horizon,
        } => {
            let alpha = AlphaOrder64::new(*alpha).map_err(CliError::Core)?;
            let a = DenseMatrix64::from_rows(generator).map_err(CliError::Core)?;
            let sg = AlphaSemigroup64::new(a.clone(), alpha);
            let estimate = sg.recover_generator(*horizon).map_err(CliError::Core)?;
            let error = estimate.sub(&a).norm_frobenius();
            let n = estimate.dim();
            let header: Vec<String> = (1..=n).map(|j| format!("a_{j}")).collect();
            let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
            let rows: Vec<Vec<f64>> = (0..n)
                .map(|i| (0..n).map(|j| estimate[(i, j)]).collect())
                .collect();
            Ok(ResultReport::new("gen-estimate")
                .scalar("frobenius_error", error)
                .table(&header_refs, rows))
        }
        JobSpec::SolveCauchy {
            alpha,
            generator,
            u0,
            times,
            method,
            horizon,
            n_steps,
        } => {
            let alpha = AlphaOrder64::new(*alpha).map_err(CliError::Core)?;
            let a = DenseMatrix64::from_rows(generator).map_err(CliError::Core)?;
            let initial = StateVector64::new(u0.clone()).map_err(CliError::Core)?;
            let trajectory = match method {
                CauchyMethod::Exact => {
                    let times = times.as_ref().expect("validated");
                    let horizon = horizon.unwrap_or(*times.last().unwrap());
                    let problem =
                        CauchyProblem64::new(a, initial, alpha, horizon).map_err(CliError::Core)?;
                    solve_exact(&problem, times).map_err(CliError::Core)?
                }
                CauchyMethod::Rk4 => {
                    let problem =
                        CauchyProblem64::new(a, initial, alpha, horizon.expect("validated"))
                            .map_err(CliError::Core)?;
                    solve_numeric(&problem, n_steps.expect("validated")).map_err(CliError::Core)?
                }
            };
            let n = trajectory.states()[0].dim();
            let mut header = vec!["t".to_string()];
            header.extend((1..=n).map(|j| format!("u_{j}")));
            let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
            let rows: Vec<Vec<f64>> = trajectory
                .times()
                .iter()
                .zip(trajectory.states())
                .map(|(&t, state)| {
                    let mut row = vec![t];
                    row.extend_from_slice(state.values());
                    row
                })
                .collect();
            Ok(ResultReport::new("solve-cauchy").table(&header_refs, rows))
        }
        JobSpec::SolveTransport {
            alpha,
            profile,
            x_max,
            n_points,
            t,
            method,
            n_steps,
            horizon,
        } => {
            let alpha = AlphaOrder64::new(*alpha).map_err(CliError::Core)?;
            let f = profile.build(alpha, None)?;
            let grid = Grid1D64::new(*x_max, *n_points).map_err(CliError::Core)?;
            let horizon = horizon.unwrap_or(if *t > 0.0 { *t } else { 1.0 });
            let problem =
                TransportProblem64::new(f, alpha, grid, horizon).map_err(CliError::Core)?;
            let (solution, report) = match method {
                TransportMethod::Exact => (
                    solve_transport_exact(&problem, *t).map_err(CliError::Core)?,
                    ResultReport::new("solve-transport"),
                ),
                TransportMethod::Upwind => {
                    let fd = solve_transport_fd(&problem, *t, n_steps.expect("validated"))
                        .map_err(CliError::Core)?;
                    let exact = solve_transport_exact(&problem, *t).map_err(CliError::Core)?;
                    let gap = fd.sup_distance(&exact).map_err(CliError::Core)?;
                    (
                        fd,
                        ResultReport::new("solve-transport").scalar("sup_error_vs_exact", gap),
                    )
                }
            };
            let rows: Vec<Vec<f64>> = grid
                .points()
                .zip(solution.values())
                .map(|(x, &u)| vec![x, u])
                .collect();
            Ok(report.table(&["x", "u"], rows))
        }
        JobSpec::Properties {} => {
            let checks = suite::run_all();
            Ok(ResultReport::new("properties").checks(checks))
        }
    }
}
