//! JSON job specifications: parsing, validation and the built-in profile
//! library.

use conformable::{AlphaOrder64, DenseMatrix64, FunctionHandle64};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// A validated job specification. Matrices are row-major arrays of arrays
/// under the key `A`; times are arrays of numbers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum JobSpec {
    Deriv {
        alpha: f64,
        #[serde(flatten)]
        profile: ProfileSpec,
        t: f64,
        /// Optional declared domain [0, domain] of the profile.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        domain: Option<f64>,
    },
    Integrate {
        alpha: f64,
        #[serde(flatten)]
        profile: ProfileSpec,
        a: f64,
        t: f64,
    },
    SemigroupCheck {
        alpha: f64,
        #[serde(rename = "A")]
        generator: Vec<Vec<f64>>,
        s: Vec<f64>,
        t: Vec<f64>,
    },
    GenEstimate {
        alpha: f64,
        #[serde(rename = "A")]
        generator: Vec<Vec<f64>>,
        #[serde(default = "default_horizon")]
        horizon: f64,
    },
    SolveCauchy {
        alpha: f64,
        #[serde(rename = "A")]
        generator: Vec<Vec<f64>>,
        u0: Vec<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        times: Option<Vec<f64>>,
        #[serde(default)]
        method: CauchyMethod,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        horizon: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n_steps: Option<usize>,
    },
    SolveTransport {
        alpha: f64,
        #[serde(flatten)]
        profile: ProfileSpec,
        x_max: f64,
        n_points: usize,
        t: f64,
        #[serde(default)]
        method: TransportMethod,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n_steps: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        horizon: Option<f64>,
    },
    Properties {},
}

fn default_horizon() -> f64 {
    1.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CauchyMethod {
    #[default]
    Exact,
    Rk4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TransportMethod {
    #[default]
    Exact,
    Upwind,
}

/// Selector plus parameters of a built-in profile.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileSpec {
    pub profile: String,
    /// Exponent of the `power` profile t^p.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    /// Level of the `constant` profile.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    /// Center of the `gaussian` profile.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<f64>,
    /// Width of the `gaussian` profile.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub width: Option<f64>,
}

pub const PROFILE_NAMES: [&str; 7] = [
    "power",
    "exp_alpha",
    "sin_alpha",
    "cos_alpha",
    "exp_decay",
    "constant",
    "gaussian",
];

impl ProfileSpec {
    /// Builds the callable profile; `domain` bounds it when given.
    pub fn build(
        &self,
        alpha: AlphaOrder64,
        domain: Option<f64>,
    ) -> Result<FunctionHandle64, CliError> {
        let f: Box<dyn Fn(f64) -> f64 + Send + Sync> = match self.profile.as_str() {
            "power" => {
                let p = self
                    .p
                    .ok_or_else(|| CliError::schema("profile \"power\" needs the exponent p"))?;
                Box::new(move |t: f64| t.powf(p))
            }
            "exp_alpha" => Box::new(move |t: f64| (t.powf(alpha.value()) / alpha.value()).exp()),
            "sin_alpha" => Box::new(move |t: f64| (t.powf(alpha.value()) / alpha.value()).sin()),
            "cos_alpha" => Box::new(move |t: f64| (t.powf(alpha.value()) / alpha.value()).cos()),
            "exp_decay" => Box::new(|t: f64| (-t).exp()),
            "constant" => {
                let c = self.value.unwrap_or(1.0);
                Box::new(move |_| c)
            }
            "gaussian" => {
                let center = self.center.unwrap_or(0.0);
                let width = self.width.unwrap_or(1.0);
                if !(width > 0.0) {
                    return Err(CliError::schema("gaussian width must be positive"));
                }
                Box::new(move |t: f64| (-((t - center) / width).powi(2)).exp())
            }
            other => {
                return Err(CliError::schema(format!(
                    "unknown profile \"{other}\"; available: {}",
                    PROFILE_NAMES.join(", ")
                )))
            }
        };
        let handle = match domain {
            Some(d) => FunctionHandle64::new(d, f).map_err(CliError::Core)?,
            None => FunctionHandle64::unbounded(f),
        };
        Ok(handle)
    }

    fn validate(&self) -> Result<(), CliError> {
        if !PROFILE_NAMES.contains(&self.profile.as_str()) {
            return Err(CliError::schema(format!(
                "unknown profile \"{}\"; available: {}",
                self.profile,
                PROFILE_NAMES.join(", ")
            )));
        }
        if self.profile == "power" && self.p.is_none() {
            return Err(CliError::schema("profile \"power\" needs the exponent p"));
        }
        Ok(())
    }
}

/// Parses and validates a job specification from JSON text.
pub fn parse_spec(text: &str) -> Result<JobSpec, CliError> {
    let spec: JobSpec =
        serde_json::from_str(text).map_err(|e| CliError::schema(format!("malformed spec: {e}")))?;
    validate(&spec)?;
    Ok(spec)
}

/// Canonical JSON serialization; `parse_spec` followed by this function is
/// the identity on its own output.
pub fn to_canonical_json(spec: &JobSpec) -> String {
    serde_json::to_string(spec).expect("job specs always serialize")
}

fn check_alpha(alpha: f64) -> Result<AlphaOrder64, CliError> {
    AlphaOrder64::new(alpha).map_err(|_| CliError::schema("alpha must be in (0,1]"))
}

fn check_generator(generator: &[Vec<f64>]) -> Result<DenseMatrix64, CliError> {
    if generator.is_empty() || generator.iter().any(|row| row.len() != generator.len()) {
        return Err(CliError::schema("generator must be square"));
    }
    DenseMatrix64::from_rows(generator).map_err(|e| CliError::schema(e.to_string()))
}

fn check_times(times: &[f64]) -> Result<(), CliError> {
    if times.first() != Some(&0.0) {
        return Err(CliError::schema("times must start at 0"));
    }
    if times.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(CliError::schema("times must be strictly increasing"));
    }
    if times.len() < 2 {
        return Err(CliError::schema("times must contain a positive final time"));
    }
    Ok(())
}

fn validate(spec: &JobSpec) -> Result<(), CliError> {
    match spec {
        JobSpec::Deriv {
            alpha,
            profile,
            t,
            domain,
        } => {
            check_alpha(*alpha)?;
            profile.validate()?;
            if !t.is_finite() || *t < 0.0 {
                return Err(CliError::schema("t must be finite and nonnegative"));
            }
            if let Some(d) = domain {
                if !(*d > 0.0) {
                    return Err(CliError::schema("domain must be positive"));
                }
            }
            Ok(())
        }
        JobSpec::Integrate {
            alpha,
            profile,
            a,
            t,
        } => {
            check_alpha(*alpha)?;
            profile.validate()?;
            if !a.is_finite() || !t.is_finite() {
                return Err(CliError::schema("integration bounds must be finite"));
            }
            Ok(())
        }
        JobSpec::SemigroupCheck {
            alpha,
            generator,
            s,
            t,
        } => {
            check_alpha(*alpha)?;
            check_generator(generator)?;
            if s.is_empty() || t.is_empty() {
                return Err(CliError::schema("s and t grids must be non-empty"));
            }
            if s.iter().chain(t).any(|v| !v.is_finite() || *v < 0.0) {
                return Err(CliError::schema("s and t values must be nonnegative"));
            }
            Ok(())
        }
        JobSpec::GenEstimate {
            alpha,
            generator,
            horizon,
        } => {
            check_alpha(*alpha)?;
            check_generator(generator)?;
            if !(*horizon > 0.0) {
                return Err(CliError::schema("horizon must be positive"));
            }
            Ok(())
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
            check_alpha(*alpha)?;
            let a = check_generator(generator)?;
            if u0.len() != a.dim() {
                return Err(CliError::schema(
                    "u0 length must match the generator dimension",
                ));
            }
            match method {
                CauchyMethod::Exact => {
                    let times = times
                        .as_ref()
                        .ok_or_else(|| CliError::schema("method \"exact\" needs times"))?;
                    check_times(times)
                }
                CauchyMethod::Rk4 => {
                    if !horizon.map(|h| h > 0.0).unwrap_or(false) {
                        return Err(CliError::schema("method \"rk4\" needs a positive horizon"));
                    }
                    if !n_steps.map(|n| n >= 1).unwrap_or(false) {
                        return Err(CliError::schema("method \"rk4\" needs n_steps >= 1"));
                    }
                    Ok(())
                }
            }
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
            check_alpha(*alpha)?;
            profile.validate()?;
            if !(*x_max > 0.0) {
                return Err(CliError::schema("x_max must be positive"));
            }
            if *n_points < 3 {
                return Err(CliError::schema("n_points must be at least 3"));
            }
            if !t.is_finite() || *t < 0.0 {
                return Err(CliError::schema("t must be finite and nonnegative"));
            }
            if let Some(h) = horizon {
                if !(*h >= *t) {
                    return Err(CliError::schema("horizon must be at least t"));
                }
            }
            if *method == TransportMethod::Upwind && !n_steps.map(|n| n >= 1).unwrap_or(false) {
                return Err(CliError::schema("method \"upwind\" needs n_steps >= 1"));
            }
            Ok(())
        }
        JobSpec::Properties {} => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_out_of_range_is_a_schema_error() {
        let err =
            parse_spec(r#"{"command":"deriv","alpha":1.5,"profile":"power","p":2.0,"t":1.0}"#)
                .unwrap_err();
        assert!(err.to_string().contains("alpha must be in (0,1]"), "{err}");
    }

    #[test]
    fn non_square_matrix_is_a_schema_error() {
        let err = parse_spec(
            r#"{"command":"solve-cauchy","alpha":0.5,"A":[[0.0,1.0]],"u0":[3.0],"times":[0.0,1.0]}"#,
        )
        .unwrap_err();
        assert!(
            err.to_string().contains("generator must be square"),
            "{err}"
        );
    }

    #[test]
    fn valid_spec_round_trips_to_identical_json() {
        let text = r#"{"command":"deriv","alpha":0.5,"profile":"power","p":2.0,"t":1.0}"#;
        let spec = parse_spec(text).unwrap();
        let canonical = to_canonical_json(&spec);
        let reparsed = parse_spec(&canonical).unwrap();
        assert_eq!(spec, reparsed);
        assert_eq!(canonical, to_canonical_json(&reparsed));
    }

    #[test]
    fn unknown_profile_is_rejected() {
        let err = parse_spec(r#"{"command":"deriv","alpha":0.5,"profile":"sawtooth","t":1.0}"#)
            .unwrap_err();
        assert!(err.to_string().contains("unknown profile"), "{err}");
    }

    #[test]
    fn rk4_requires_horizon_and_steps() {
        let err = parse_spec(
            r#"{"command":"solve-cauchy","alpha":0.5,"A":[[1.0]],"u0":[1.0],"method":"rk4"}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("horizon"), "{err}");
    }

    #[test]
    fn properties_spec_is_minimal() {
        let spec = parse_spec(r#"{"command":"properties"}"#).unwrap();
        assert_eq!(spec, JobSpec::Properties {});
    }
}
