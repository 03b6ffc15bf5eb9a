use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperaug::geo::BorderPolicy;
use hyperaug::AugmentConfig;

#[derive(Debug, Parser)]
#[command(name = "hyperaug", version, about = "Hyperspectral patch augmentation, batching and extraction")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write augmented copies of every .hsb patch under a directory.
    Augment(AugmentCmd),
    /// Crop patches around shapefile points from a geo-referenced raster.
    Extract(ExtractCmd),
    /// Write augmented batches for a number of epochs.
    Generate(GenerateCmd),
    /// Convert between .hsb and .npy (direction chosen by file extension).
    Convert(ConvertCmd),
    /// Measure end-to-end batch throughput on a dataset.
    Bench(BenchCmd),
}

fn non_negative(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !v.is_finite() || v < 0.0 {
        return Err(format!("must be a finite value >= 0, got {s}"));
    }
    Ok(v)
}

fn zoom_factor(s: &str) -> Result<f64, String> {
    let v = non_negative(s)?;
    if v < 1.0 {
        return Err(format!("zoom must be >= 1, got {s}"));
    }
    Ok(v)
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be >= 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// Augmentation ranges. Names follow the technique list one-to-one.
#[derive(Debug, Clone, Args)]
pub struct AugmentFlags {
    /// Enable random horizontal flips (p = 0.5).
    #[arg(long)]
    pub flip_h: bool,
    /// Enable random vertical flips (p = 0.5).
    #[arg(long)]
    pub flip_v: bool,
    /// Maximum rotation in degrees.
    #[arg(long, default_value_t = 0.0, value_parser = non_negative)]
    pub rotation: f64,
    /// Maximum per-axis translation as a fraction of image size.
    #[arg(long, default_value_t = 0.0, value_parser = non_negative)]
    pub translation: f64,
    /// Maximum zoom factor; scales are drawn from [1/zoom, zoom].
    #[arg(long, default_value_t = 1.0, value_parser = zoom_factor)]
    pub zoom: f64,
    /// Maximum shear coefficient.
    #[arg(long, default_value_t = 0.0, value_parser = non_negative)]
    pub shear: f64,
    /// Variance of the multiplicative speckle noise.
    #[arg(long, default_value_t = 0.0, value_parser = non_negative)]
    pub speckle_variance: f64,
}

impl AugmentFlags {
    pub fn config(&self) -> AugmentConfig {
        AugmentConfig {
            flip_horizontal: self.flip_h,
            flip_vertical: self.flip_v,
            max_rotation: self.rotation,
            max_translation: self.translation,
            max_zoom: self.zoom,
            max_shear: self.shear,
            speckle_variance: self.speckle_variance,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct RunFlags {
    /// Master seed; every random draw derives from it.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (default: available parallelism). Output does not depend on it.
    #[arg(long, value_parser = positive)]
    pub workers: Option<usize>,
}

impl RunFlags {
    pub fn workers(&self) -> usize {
        self.workers.unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
    }
}

#[derive(Debug, Args)]
pub struct AugmentCmd {
    #[command(flatten)]
    pub aug: AugmentFlags,
    #[command(flatten)]
    pub run: RunFlags,
    /// Augmented copies written per input patch.
    #[arg(long, default_value_t = 1, value_parser = positive)]
    pub copies: usize,
    /// Input directory, searched recursively for .hsb files.
    pub input: PathBuf,
    /// Output directory; the input's relative layout is mirrored.
    pub output: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    Skip,
    EdgePad,
}

impl From<PolicyArg> for BorderPolicy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::Skip => BorderPolicy::Skip,
            PolicyArg::EdgePad => BorderPolicy::EdgePad,
        }
    }
}

#[derive(Debug, Args)]
pub struct ExtractCmd {
    /// Point (or PointZ) .shp file with patch centers, in the raster's CRS.
    #[arg(long)]
    pub shp: PathBuf,
    /// JSON sidecar with the geotransform and band files.
    #[arg(long)]
    pub raster: PathBuf,
    /// Patch side in pixels.
    #[arg(long, value_parser = positive)]
    pub size: usize,
    #[arg(long, value_enum, default_value_t = PolicyArg::Skip)]
    pub policy: PolicyArg,
    /// CSV with header `record,label`; labeled patches go to per-label folders.
    #[arg(long)]
    pub labels: Option<PathBuf>,
    /// External command that decodes one band: invoked as `<cmd...> <band> <out.hsb>`.
    #[arg(long)]
    pub band_decoder: Option<String>,
    #[arg(long, value_parser = positive)]
    pub workers: Option<usize>,
    /// Output directory.
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct GenerateCmd {
    #[command(flatten)]
    pub aug: AugmentFlags,
    #[command(flatten)]
    pub run: RunFlags,
    #[arg(long, default_value_t = 128, value_parser = positive)]
    pub batch_size: usize,
    /// Batches per epoch.
    #[arg(long, default_value_t = 500, value_parser = positive)]
    pub batches: usize,
    #[arg(long, default_value_t = 1, value_parser = positive)]
    pub epochs: usize,
    /// Dataset root laid out as <root>/<Class>/<patch>.hsb.
    pub dataset: PathBuf,
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct ConvertCmd {
    pub input: PathBuf,
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct BenchCmd {
    #[command(flatten)]
    pub aug: AugmentFlags,
    #[command(flatten)]
    pub run: RunFlags,
    #[arg(long, default_value_t = 128, value_parser = positive)]
    pub batch_size: usize,
    /// Batches to produce.
    #[arg(long, default_value_t = 20, value_parser = positive)]
    pub batches: usize,
    pub dataset: PathBuf,
}
