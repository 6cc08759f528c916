use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Default seed for randomized components; fixed so reruns are
/// byte-identical without extra flags.
pub const DEFAULT_SEED: u64 = 1_000_003;

#[derive(Parser)]
#[command(
    name = "ifslab",
    version,
    about = "Computational laboratory for overlapping iterated function systems",
    arg_required_else_help = true
)]
pub struct Cli {
    /// Worker threads; 0 uses machine parallelism. Outputs do not depend
    /// on this value.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    /// Seed for randomized components.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Continued-fraction convergents of a parameter, as CSV.
    Cf(CfArgs),
    /// Overlap, dichotomy, and collapse reports for the four-map halving
    /// family at a parameter t, as JSON.
    Phit(PhitArgs),
    /// Separated-set profile of image clouds, as CSV plus a JSON verdict.
    Separation(SeparationArgs),
    /// Coverage statistics of shrinking-ball unions, as JSON.
    Coverage(CoverageArgs),
    /// Separated-fraction sweep across a family's parameter window, as CSV.
    Sweep(SweepArgs),
    /// Family constants: separation scans, bound tables, dimensions.
    Families(FamiliesArgs),
    /// Pushforward histogram of a measure under an IFS, as CSV.
    Pushforward(PushforwardArgs),
}

#[derive(Args)]
#[command(after_help = "CSV columns: m, quotient, p, q, value")]
pub struct CfArgs {
    /// Parameter spec: rational:a/b, cf:[pre;period], or cftable:[z1,z2,...].
    #[arg(long)]
    pub t: String,
    /// Number of convergents to emit.
    #[arg(long, default_value_t = 12)]
    pub depth: usize,
    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PhitReport {
    /// Exact-overlap detection via the reduced-fraction criterion.
    Overlap,
    /// Per-level gaps, optimality flags, and good-level predictions.
    Dichotomy,
    /// Collapse levels built from large partial quotients.
    Collapse,
}

#[derive(Args)]
pub struct PhitArgs {
    /// Parameter spec: rational:a/b, cf:[pre;period], or cftable:[z1,z2,...].
    #[arg(long)]
    pub t: String,
    /// Largest level to examine.
    #[arg(long, default_value_t = 8)]
    pub levels: u32,
    /// Which report to produce.
    #[arg(long, value_enum, default_value_t = PhitReport::Dichotomy)]
    pub report: PhitReport,
    /// Number of collapse levels for the collapse report.
    #[arg(long, default_value_t = 3)]
    pub kmax: u32,
    /// Output JSON path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
#[command(after_help = "CSV columns: n, cardinality, separated, ratio, min_gap, near_pairs, radius")]
pub struct SeparationArgs {
    /// IFS spec: similarity1d(lambda=0.5, digits=[-1,1]) or phit(t=...).
    #[arg(long)]
    pub ifs: String,
    /// Measure: "uniform" or a comma list of probabilities.
    #[arg(long, default_value = "uniform")]
    pub measure: String,
    /// Anchor point for the image clouds.
    #[arg(long, default_value_t = 0.0)]
    pub z: f64,
    /// Separation scale; the level-n radius is s times the cloud scale.
    #[arg(long, default_value_t = 0.125)]
    pub s: f64,
    /// Inclusive level range, written a..b.
    #[arg(long)]
    pub levels: String,
    /// Ratio threshold below which a level witnesses collapse.
    #[arg(long, default_value_t = separation::DEFAULT_COLLAPSE_THRESHOLD)]
    pub threshold: f64,
    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Optional JSON verdict path.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Args)]
#[command(after_help = "Hit-count CSV columns: cell, count")]
pub struct CoverageArgs {
    /// IFS spec: similarity1d(lambda=0.5, digits=[-1,1]) or phit(t=...).
    #[arg(long)]
    pub ifs: String,
    /// Measure: "uniform" or a comma list of probabilities.
    #[arg(long, default_value = "uniform")]
    pub measure: String,
    /// Rate function: constant(c), reciprocal, reciprocal-square,
    /// geometric(rho), or table(path).
    #[arg(long)]
    pub h: String,
    /// Anchor point for the ball centers.
    #[arg(long, default_value_t = 0.0)]
    pub z: f64,
    /// Inclusive level range, written a..b.
    #[arg(long)]
    pub levels: String,
    /// Grid resolution for hit counts: 2^-k or a positive float.
    #[arg(long)]
    pub grid: Option<String>,
    /// Deepest overlap order reported by the k-fold measures.
    #[arg(long, default_value_t = 3)]
    pub kmax: usize,
    /// Cap on ball radii: scale of the radius clamp.
    #[arg(long)]
    pub clamp: Option<f64>,
    /// Exponent for a volume sum over the same rate function; repeatable.
    #[arg(long)]
    pub sigma: Vec<f64>,
    /// Horizon for volume-sum partial sums.
    #[arg(long = "vol-horizon", default_value_t = 1000)]
    pub vol_horizon: u32,
    /// Optional per-cell hit-count CSV path; requires --grid.
    #[arg(long = "hits-csv")]
    pub hits_csv: Option<PathBuf>,
    /// Output JSON path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
#[command(after_help = "CSV columns: lambda, ratio, delta")]
pub struct SweepArgs {
    /// Family: bc (digits -1,1), 013 (digits 0,1,3), or custom.
    #[arg(long)]
    pub family: String,
    /// Digit list for --family custom, e.g. 0,1,5.
    #[arg(long)]
    pub digits: Option<String>,
    /// Contraction-ratio grid, written lo:hi:steps.
    #[arg(long)]
    pub lambda: String,
    /// Separation scale; the level-n radius is s * lambda^n.
    #[arg(long, default_value_t = 0.1)]
    pub s: f64,
    /// Cloud level.
    #[arg(long, default_value_t = 8)]
    pub n: u32,
    /// Required slack between the grid and the admissible window.
    #[arg(long, default_value_t = 0.0)]
    pub margin: f64,
    /// Comma list of thresholds for the fraction summary.
    #[arg(long = "c-grid", default_value = "0.25,0.5,0.75")]
    pub c_grid: String,
    /// Measure: "uniform" or a comma list of probabilities.
    #[arg(long, default_value = "uniform")]
    pub measure: String,
    /// Anchor word; its composed map's fixed point anchors each cloud.
    #[arg(long = "z-word", default_value = "1")]
    pub z_word: String,
    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Optional JSON threshold-summary path.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Args)]
pub struct FamiliesArgs {
    #[command(subcommand)]
    pub action: FamiliesAction,
}

#[derive(Subcommand)]
pub enum FamiliesAction {
    /// Signed-sum separation scan at a contraction ratio, as JSON.
    Scan {
        /// inv-sqrt2, inv-golden, or a numeric ratio in (1/2, 1).
        #[arg(long)]
        lambda: String,
        /// Deepest level to scan.
        #[arg(long = "n-max", default_value_t = 14)]
        n_max: u32,
        /// Output JSON path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Separation-exponent lower bound for a digit set, as JSON.
    Alpha {
        /// Comma list of digits, e.g. -1,1.
        #[arg(long)]
        digits: String,
        /// Output JSON path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Similarity dimension of a contraction-ratio list, as JSON.
    Dimension {
        /// Comma list of ratios in (0, 1).
        #[arg(long)]
        ratios: String,
        /// Output JSON path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form constants of the eight-map cover family, as JSON.
    EightMap {
        /// Output JSON path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[command(after_help = "CSV columns: bin, lo, hi, mass")]
pub struct PushforwardArgs {
    /// IFS spec: similarity1d(lambda=0.5, digits=[-1,1]) or phit(t=...).
    #[arg(long)]
    pub ifs: String,
    /// Measure: "uniform" or a comma list of probabilities.
    #[arg(long, default_value = "uniform")]
    pub measure: String,
    /// Cloud level.
    #[arg(long, default_value_t = 8)]
    pub n: u32,
    /// Anchor point.
    #[arg(long, default_value_t = 0.0)]
    pub z: f64,
    /// Number of histogram bins over the attractor bounds.
    #[arg(long, default_value_t = 64)]
    pub bins: usize,
    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
