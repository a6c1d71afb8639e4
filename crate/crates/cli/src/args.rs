//! Command-line grammar.

use std::path::PathBuf;
use std::str::FromStr;

use antilinear_core::Complex64;
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Antilinear-symmetry verification for non-Hermitian Hamiltonians.
#[derive(Debug, Parser)]
#[command(name = "antilinear", version, about)]
pub struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub report: Option<PathBuf>,

    /// Write the spectrum (or scan table) as CSV here.
    #[arg(long, global = true, value_name = "PATH")]
    pub csv: Option<PathBuf>,

    /// Override every verification tolerance.
    #[arg(long, global = true, value_name = "X", value_parser = positive_f64)]
    pub tol: Option<f64>,

    /// Seed for randomized property runs.
    #[arg(long, global = true, value_name = "N", default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Two-level families and their exceptional points.
    Twolevel(TwoLevelArgs),
    /// One-dimensional periodic families on a spectral grid.
    Periodic(PeriodicArgs),
    /// Quadratic Fock-space models.
    Fock(FockArgs),
    /// Parameter scans and randomized closed-form checks of two-level families.
    Scan(ScanArgs),
}

impl Command {
    /// Short name used for default report file names.
    pub fn name(&self) -> &'static str {
        match self {
            Self::Twolevel(_) => "twolevel",
            Self::Periodic(_) => "periodic",
            Self::Fock(_) => "fock",
            Self::Scan(_) => "scan",
        }
    }
}

/// Two-level family selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// `[[a, 0], [c, a]]` with real 𝔮.
    QtReal,
    /// `QT`-symmetric family with imaginary 𝔮 = iq.
    QtImag,
    /// Hermitian family (𝔮 = 0).
    Hermitian,
    /// Weakly pseudo-Hermitian family with 𝔮 ≠ 0.
    Wph,
}

/// Parameter varied by a `QT`-family scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanParam {
    /// `a`
    A,
    /// `b`
    B,
    /// `c`
    C,
    /// `d`
    D,
    /// `q`
    Q,
}

/// Parameters shared by every two-level family.
#[derive(Debug, Clone, Args)]
pub struct TwoLevelParams {
    /// Family to build.
    #[arg(long, value_enum)]
    pub family: Family,
    /// Diagonal parameter `a`.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub a: f64,
    /// Off-diagonal `b`.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub b: f64,
    /// Off-diagonal `c`.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub c: f64,
    /// Diagonal parameter `d`.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub d: f64,
    /// Real part of the Hermitian off-diagonal.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub b1: f64,
    /// Imaginary part of the Hermitian off-diagonal.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub b2: f64,
    /// Real diagonal part of the weakly pseudo-Hermitian family.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub a1: f64,
    /// Imaginary diagonal part of the weakly pseudo-Hermitian family.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub a2: f64,
    /// 𝔮: real for qt-real, the real `q` of 𝔮 = iq for qt-imag, complex for wph.
    #[arg(long, default_value = "1", value_parser = parse_complex, allow_hyphen_values = true)]
    pub q: Complex64,
}

/// `twolevel` arguments.
#[derive(Debug, Args)]
pub struct TwoLevelArgs {
    #[command(flatten)]
    pub params: TwoLevelParams,
    /// Locate an exceptional point in `LO:HI` of the scanned parameter.
    #[arg(long, value_name = "LO:HI", value_parser = parse_range, allow_hyphen_values = true)]
    pub ep_scan: Option<(f64, f64)>,
    /// Parameter scanned for the qt-imag family.
    #[arg(long, value_enum, default_value_t = ScanParam::Q)]
    pub ep_param: ScanParam,
}

/// `periodic` arguments.
#[derive(Debug, Args)]
pub struct PeriodicArgs {
    /// TOML configuration file.
    #[arg(value_name = "CONFIG", required_unless_present = "preset", conflicts_with = "preset")]
    pub config: Option<PathBuf>,
    /// Shipped configuration to run instead of a file.
    #[arg(long, value_name = "NAME")]
    pub preset: Option<String>,
}

/// `fock` arguments.
#[derive(Debug, Args)]
pub struct FockArgs {
    /// Reduced `QT`-symmetric model (real α, γ, μ, q).
    #[arg(long, conflicts_with = "general", required_unless_present = "general")]
    pub reduced: bool,
    /// General quadratic model with complex coefficients.
    #[arg(long)]
    pub general: bool,
    /// Coefficient of `a²`.
    #[arg(long, default_value = "0", value_parser = parse_complex, allow_hyphen_values = true)]
    pub alpha: Complex64,
    /// Coefficient of `a†²` (general model).
    #[arg(long, default_value = "0", value_parser = parse_complex, allow_hyphen_values = true)]
    pub beta: Complex64,
    /// Coefficient of `{a, a†}`.
    #[arg(long, default_value = "1", value_parser = parse_complex, allow_hyphen_values = true)]
    pub gamma: Complex64,
    /// `μ = Re 𝔪` (reduced model).
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub mu: f64,
    /// Real `q` with 𝔮 = iq (reduced model).
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub q: f64,
    /// Coefficient 𝔪 of `a` (general model).
    #[arg(long = "m", default_value = "0", value_parser = parse_complex, allow_hyphen_values = true)]
    pub mfr: Complex64,
    /// Coefficient 𝔫 of `a†` (general model).
    #[arg(long = "n", default_value = "0", value_parser = parse_complex, allow_hyphen_values = true)]
    pub nfr: Complex64,
    /// Exponent 𝔮 of `Q = e^{𝔮a}` (general model).
    #[arg(long, default_value = "0+1i", value_parser = parse_complex, allow_hyphen_values = true)]
    pub qfr: Complex64,
    /// Number of retained number states.
    #[arg(long = "N", visible_alias = "truncation", default_value_t = 16)]
    pub truncation: usize,
}

/// `scan` arguments.
#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub params: TwoLevelParams,
    /// Scan range `LO:HI` (|𝔮| for wph, `--param` for qt-imag).
    #[arg(long, value_name = "LO:HI", value_parser = parse_range, allow_hyphen_values = true)]
    pub range: Option<(f64, f64)>,
    /// Number of equally spaced scan points.
    #[arg(long, default_value_t = 101, value_parser = clap::value_parser!(u32).range(2..=100_000))]
    pub points: u32,
    /// Scanned parameter of the qt-imag family.
    #[arg(long, value_enum, default_value_t = ScanParam::Q)]
    pub param: ScanParam,
    /// Instead of scanning, compare closed forms with numerics on this many
    /// seeded random draws.
    #[arg(long, value_name = "DRAWS", conflicts_with = "range")]
    pub random: Option<usize>,
}

/// Parses `1`, `-2.5`, `0+1i`, `3-2i`, `2i`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let z = Complex64::from_str(s.trim()).map_err(|_| format!("not a complex number: {s:?}"))?;
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(format!("complex number must be finite: {s:?}"))
    }
}

/// Parses `LO:HI` with `LO < HI`.
pub fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| format!("expected LO:HI, got {s:?}"))?;
    let lo: f64 = lo.trim().parse().map_err(|_| format!("bad lower bound in {s:?}"))?;
    let hi: f64 = hi.trim().parse().map_err(|_| format!("bad upper bound in {s:?}"))?;
    if lo.is_finite() && hi.is_finite() && lo < hi {
        Ok((lo, hi))
    } else {
        Err(format!("range must be finite with LO < HI, got {s:?}"))
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && x > 0.0 => Ok(x),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}
