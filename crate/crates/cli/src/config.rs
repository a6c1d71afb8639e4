//! TOML configuration of the periodic families.

use antilinear_core::periodic::{
    Assignment, Family, FourierPotentialSpec, GridSpec, Potential, SinCosPreset,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Shipped configurations, by name.
pub const PRESETS: &[(&str, &str)] = &[("paper-sin-cos", include_str!("../presets/paper-sin-cos.toml"))];

/// Looks up a shipped configuration.
pub fn preset(name: &str) -> Result<&'static str, CliError> {
    PRESETS.iter().find(|(n, _)| *n == name).map(|(_, text)| *text).ok_or_else(|| {
        let known: Vec<&str> = PRESETS.iter().map(|(n, _)| *n).collect();
        CliError::Usage(format!("unknown preset {name:?}; available: {}", known.join(", ")))
    })
}

/// Family selector in the file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyConfig {
    /// Weak pseudo-Hermiticity under the half-cell translation.
    Wph,
    /// `QT`-symmetry under the half-cell translation.
    Qt,
}

/// `[grid]` table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    /// Even number of points, at least 8.
    pub points: usize,
    /// Half-period `ℓ`.
    pub ell: f64,
    /// Mass, default 1/2.
    #[serde(default = "half")]
    pub mass: f64,
    /// `ħ`, default 1.
    #[serde(default = "one")]
    pub hbar: f64,
}

fn half() -> f64 {
    0.5
}

fn one() -> f64 {
    1.0
}

/// Which series carries the real part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AssignmentConfig {
    /// Real part periodic.
    RealPeriodic,
    /// Real part antiperiodic.
    RealAntiperiodic,
}

/// `[scalar]` / `[vector]` tables.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum PotentialConfig {
    /// Identically zero.
    Zero,
    /// `λ₁ sin(2kx) + iλ₂ cos(5kx)`.
    SinCos {
        /// Real amplitude.
        lambda1: f64,
        /// Imaginary amplitude.
        lambda2: f64,
        /// Wave number.
        #[serde(default = "one")]
        k: f64,
    },
    /// Fourier series on `2nπ/ℓ` (periodic) and `(2n+1)π/ℓ` (antiperiodic).
    Fourier {
        /// Real/imaginary assignment.
        assignment: AssignmentConfig,
        /// `[cos, sin]` coefficient pairs of the periodic series.
        #[serde(default)]
        periodic: Vec<[f64; 2]>,
        /// `[cos, sin]` coefficient pairs of the antiperiodic series.
        #[serde(default)]
        antiperiodic: Vec<[f64; 2]>,
    },
}

/// Whole configuration file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PeriodicConfig {
    /// Family to verify.
    pub family: FamilyConfig,
    /// Discretization.
    pub grid: GridConfig,
    /// Scalar potential `v`.
    pub scalar: PotentialConfig,
    /// Vector potential `a`, zero when omitted.
    #[serde(default = "zero_potential")]
    pub vector: PotentialConfig,
}

fn zero_potential() -> PotentialConfig {
    PotentialConfig::Zero
}

/// Validated configuration in core types.
#[derive(Debug, Clone)]
pub struct PeriodicModel {
    /// Family.
    pub family: Family,
    /// Grid.
    pub grid: GridSpec,
    /// Scalar potential.
    pub scalar: Potential,
    /// Vector potential.
    pub vector: Potential,
}

impl PeriodicConfig {
    /// Parses TOML text; errors name the offending key.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Config(e.to_string().trim_end().to_owned()))
    }

    /// Converts to core types, reporting the first invalid key.
    pub fn to_model(&self) -> Result<PeriodicModel, CliError> {
        let g = &self.grid;
        let grid = GridSpec::new(g.points, g.ell, g.mass, g.hbar).map_err(|e| CliError::Config(format!("grid: {e}")))?;
        let family = match self.family {
            FamilyConfig::Wph => Family::WeakPseudoHermitian,
            FamilyConfig::Qt => Family::QtSymmetric,
        };
        Ok(PeriodicModel {
            family,
            grid,
            scalar: potential("scalar", &self.scalar, g.ell)?,
            vector: potential("vector", &self.vector, g.ell)?,
        })
    }
}

fn potential(key: &str, cfg: &PotentialConfig, ell: f64) -> Result<Potential, CliError> {
    match cfg {
        PotentialConfig::Zero => Ok(Potential::Zero),
        PotentialConfig::SinCos { lambda1, lambda2, k } => {
            if ![*lambda1, *lambda2, *k].iter().all(|x| x.is_finite()) || *k <= 0.0 {
                return Err(CliError::Config(format!("{key}: lambda1, lambda2 must be finite and k positive")));
            }
            Ok(Potential::SinCos(SinCosPreset { lambda1: *lambda1, lambda2: *lambda2, k: *k }))
        }
        PotentialConfig::Fourier { assignment, periodic, antiperiodic } => {
            let assignment = match assignment {
                AssignmentConfig::RealPeriodic => Assignment::RealPeriodic,
                AssignmentConfig::RealAntiperiodic => Assignment::RealAntiperiodic,
            };
            let pairs = |v: &[[f64; 2]]| v.iter().map(|[c, d]| (*c, *d)).collect::<Vec<_>>();
            FourierPotentialSpec::new(ell, pairs(periodic), pairs(antiperiodic), assignment)
                .map(Potential::Fourier)
                .map_err(|e| CliError::Config(format!("{key}: {e}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_preset_parses() {
        let cfg = PeriodicConfig::parse(preset("paper-sin-cos").unwrap()).unwrap();
        let model = cfg.to_model().unwrap();
        assert_eq!(model.grid.points(), 128);
        assert_eq!(model.scalar, Potential::SinCos(SinCosPreset::DEFAULT));
        assert_eq!(model.vector, Potential::Zero);
        assert!(preset("nope").is_err());
    }

    #[test]
    fn errors_name_the_key() {
        let text = "family = \"wph\"\n[grid]\npoints = 128\nell = 1.0\nmas = 2.0\n[scalar]\nkind = \"zero\"\n";
        let err = PeriodicConfig::parse(text).unwrap_err().to_string();
        assert!(err.contains("mas"), "{err}");

        let text = "family = \"wph\"\n[grid]\npoints = 7\nell = 1.0\n[scalar]\nkind = \"zero\"\n";
        let err = PeriodicConfig::parse(text).unwrap().to_model().unwrap_err().to_string();
        assert!(err.contains("grid"), "{err}");

        let text = "family = \"wph\"\n[grid]\npoints = 8\nell = 1.0\n[scalar]\nkind = \"fourier\"\nassignment = \"sideways\"\n";
        let err = PeriodicConfig::parse(text).unwrap_err().to_string();
        assert!(err.contains("sideways"), "{err}");
    }

    #[test]
    fn fourier_tables_convert() {
        let text = r#"
family = "qt"
[grid]
points = 16
ell = 2.0
[scalar]
kind = "fourier"
assignment = "real-periodic"
periodic = [[0.1, 0.0], [0.0, 0.5]]
antiperiodic = [[0.3, -0.2]]
[vector]
kind = "fourier"
assignment = "real-antiperiodic"
antiperiodic = [[0.4, 0.0]]
"#;
        let model = PeriodicConfig::parse(text).unwrap().to_model().unwrap();
        assert_eq!(model.family, Family::QtSymmetric);
        match model.scalar {
            Potential::Fourier(s) => assert_eq!(s.periodic(), &[(0.1, 0.0), (0.0, 0.5)]),
            other => panic!("{other:?}"),
        }
    }
}
