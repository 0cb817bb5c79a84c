//! Resolution of command-line function specifications into evaluators.

use clap::ValueEnum;
use jamesian::{
    logit, piecewise_identity, salzmann_loop, scaled_logit, JamesianFunction, OddHomeomorphism,
};

use crate::CliError;

/// Which construction to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// The classical closed form.
    Adams,
    /// Quasi-difference over the transfer map given by `--f`.
    Representable,
    /// Salzmann-loop transfer through the map given by `--f`.
    SalzmannTransfer,
}

/// Shared `--kind` / `--f` / `--tolerance` flags.
#[derive(Debug, Clone, clap::Args)]
pub struct SpecArgs {
    /// Function construction
    #[arg(long, value_enum, default_value = "adams")]
    pub kind: Kind,

    /// Transfer map: `logit`, `scaled-logit:K`, or `piecewise:EPS`
    /// (ignored for `--kind adams`)
    #[arg(long, default_value = "logit")]
    pub f: String,

    /// Override the construction's certification tolerance
    #[arg(long)]
    pub tolerance: Option<f64>,
}

fn parse_transfer(s: &str) -> Result<OddHomeomorphism, CliError> {
    if s == "logit" {
        return Ok(logit());
    }
    if let Some(k) = s.strip_prefix("scaled-logit:") {
        let k: f64 = k
            .parse()
            .map_err(|_| CliError::usage(format!("bad scale in --f {s}")))?;
        return Ok(scaled_logit(k)?);
    }
    if let Some(eps) = s.strip_prefix("piecewise:") {
        let eps: f64 = eps
            .parse()
            .map_err(|_| CliError::usage(format!("bad epsilon in --f {s}")))?;
        return Ok(piecewise_identity(eps)?);
    }
    Err(CliError::usage(format!(
        "unknown transfer map `{s}`; expected logit, scaled-logit:K or piecewise:EPS"
    )))
}

impl SpecArgs {
    /// Build the evaluator this spec names.
    pub fn resolve(&self) -> Result<JamesianFunction, CliError> {
        let j = match self.kind {
            Kind::Adams => JamesianFunction::adams(),
            Kind::Representable => JamesianFunction::representable(parse_transfer(&self.f)?),
            Kind::SalzmannTransfer => {
                JamesianFunction::loop_transfer(salzmann_loop(), parse_transfer(&self.f)?)?
            }
        };
        if let Some(tol) = self.tolerance {
            if !tol.is_finite() || tol <= 0.0 {
                return Err(CliError::usage(format!(
                    "--tolerance must be positive and finite, got {tol}"
                )));
            }
        }
        Ok(j)
    }

    /// Tolerance to certify at: the override if given, otherwise the
    /// construction's own.
    pub fn tolerance_for(&self, j: &JamesianFunction) -> f64 {
        self.tolerance.unwrap_or_else(|| j.tolerance())
    }
}
