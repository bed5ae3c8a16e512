use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Simultaneous core partitions, gap posets and generalized Dyck paths.
#[derive(Debug, Parser)]
#[command(name = "multicore", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Dot,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gaps and cover relation of the poset P_S.
    Poset {
        #[command(flatten)]
        gens: GensArg,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        /// Drop covers implied by longer chains (DOT only).
        #[arg(long)]
        reduce: bool,
    },
    /// Lower ideals of P_S.
    Ideals {
        #[command(flatten)]
        gens: ListedGensArg,
        #[command(flatten)]
        listing: ListingArgs,
    },
    /// S-cores, obtained from the lower ideals of P_S.
    Cores {
        #[command(flatten)]
        gens: ListedGensArg,
        #[command(flatten)]
        listing: ListingArgs,
        /// Print the sum of the sizes of all S-cores.
        #[arg(long, conflicts_with_all = ["count_only", "list", "from_file"])]
        total_size: bool,
    },
    /// Lattice path enumeration.
    Paths {
        #[command(subcommand)]
        kind: PathKind,
    },
    /// Closed-form and recursive counts.
    Count {
        #[command(subcommand)]
        what: CountKind,
    },
    /// Coarea polynomial sum_{mu <= lambda} q^|mu| from the q-determinant.
    Qdet {
        /// Shape lambda, e.g. 2,1.
        #[arg(long, value_delimiter = ',', required_unless_present_all = ["s", "t"], conflicts_with_all = ["s", "t"])]
        shape: Option<Vec<usize>>,
        /// Use the diagonal partition of the s x t rectangle instead of --shape.
        #[arg(long, requires = "t")]
        s: Option<u64>,
        #[arg(long, requires = "s")]
        t: Option<u64>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Ferrers diagram annotated with hook lengths.
    Hooks {
        #[arg(long, value_delimiter = ',', required = true)]
        shape: Vec<usize>,
        /// Draw the longest row at the top.
        #[arg(long)]
        english: bool,
        /// Also report whether the partition is a core for these values.
        #[arg(long, value_delimiter = ',')]
        core_for: Vec<usize>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Check the counting statements against independent oracles.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct GensArg {
    /// Generator set S, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub gens: Vec<u64>,
}

#[derive(Debug, Args)]
pub struct ListedGensArg {
    /// Generator set S, comma separated.
    #[arg(long, value_delimiter = ',', required_unless_present = "from_file")]
    pub gens: Vec<u64>,
}

#[derive(Debug, Args)]
pub struct ListingArgs {
    /// Print only the number of items.
    #[arg(long, conflicts_with = "list")]
    pub count_only: bool,
    /// List every item (the default).
    #[arg(long)]
    pub list: bool,
    /// Refuse to materialize more than this many items [default: 1000000
    /// when listing, 10000000 when summing].
    #[arg(long)]
    pub max_items: Option<usize>,
    /// Check a previously emitted JSON listing instead of enumerating.
    #[arg(long, conflicts_with_all = ["count_only", "list"])]
    pub from_file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum PathKind {
    /// (s,t)-Dyck paths in the t-wide, s-tall rectangle.
    Rect {
        #[arg(long, required_unless_present = "from_file")]
        s: Option<u64>,
        #[arg(long, required_unless_present = "from_file")]
        t: Option<u64>,
        #[command(flatten)]
        listing: ListingArgs,
        #[command(flatten)]
        svg: SvgArgs,
    },
    /// Generalized Dyck paths with steps Nk, Ek, D1..D(k-1).
    Gd {
        #[arg(long, required_unless_present = "from_file")]
        n: Option<u64>,
        #[arg(long, required_unless_present = "from_file")]
        k: Option<u64>,
        #[command(flatten)]
        listing: ListingArgs,
        #[command(flatten)]
        svg: SvgArgs,
        /// Show the lower ideal of T_{n,k} each path maps to.
        #[arg(long)]
        ideals: bool,
    },
}

#[derive(Debug, Args)]
pub struct SvgArgs {
    /// Write an SVG drawing to this file.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Draw only the path with this 0-based index instead of all panels.
    #[arg(long, requires = "svg")]
    pub index: Option<usize>,
    /// Annotate labeled cells.
    #[arg(long, requires = "svg")]
    pub labels: bool,
}

#[derive(Debug, Subcommand)]
pub enum CountKind {
    /// C_s^(p), the number of lower ideals of T_{s,p}.
    MultiCatalan {
        #[arg(long, allow_negative_numbers = true)]
        s: i64,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Number of (s,t)-Dyck paths, C(s+t, s)/(s+t).
    Rect {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        t: u64,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// GD_{n,k} from the first-return recursion.
    Gd {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    All,
    Symmetry,
    Popoviciu,
    Identity,
    Gf,
    Conjecture,
    Equinumerous,
    Kreweras,
    Qdet,
    MultiCatalan,
    Gd,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub target: VerifyTarget,
    /// Upper bound on s (symmetry, conjecture, multi-catalan, motzkin).
    #[arg(long)]
    pub max_s: Option<u64>,
    /// Upper bound on t (popoviciu, frobenius).
    #[arg(long)]
    pub max_t: Option<u64>,
    /// Upper bound on n (identity, generalized paths, consecutive equinumerosity).
    #[arg(long)]
    pub max_n: Option<u64>,
    /// Upper bound on k (generalized paths, consecutive equinumerosity).
    #[arg(long)]
    pub max_k: Option<u64>,
    /// Upper bound on p (multi-catalan).
    #[arg(long)]
    pub max_p: Option<u64>,
    /// Upper bound on s + t (pair equinumerosity, coarea).
    #[arg(long)]
    pub max_sum: Option<u64>,
    /// Side of the box of shapes (kreweras, qdet).
    #[arg(long = "box")]
    pub box_side: Option<usize>,
    /// Values of p for the generating function.
    #[arg(long, value_delimiter = ',')]
    pub p: Option<Vec<u64>>,
    /// Number of generating-function coefficients.
    #[arg(long)]
    pub terms: Option<usize>,
    /// Upper bound on n for the Hessenberg determinant check.
    #[arg(long)]
    pub hessenberg_max_n: Option<u64>,
    /// Upper bounds on (n, k) for the path-to-ideal bijection check.
    #[arg(long)]
    pub bijection_max_n: Option<u64>,
    #[arg(long)]
    pub bijection_max_k: Option<u64>,
    /// Worker threads; output does not depend on it.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    /// Print only the per-suite summary lines.
    #[arg(long)]
    pub quiet: bool,
    /// Include wall-clock durations (makes output nondeterministic).
    #[arg(long)]
    pub timings: bool,
}
