use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "chowstab", version, about = "Exact Hilbert-Mumford stability certificates")]
pub struct Cli {
    /// Emit the JSON certificate document instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Record wall-clock time in `timing_ms` (leaves output non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Polynomial input: inline with `--poly` or from a file with a header line.
#[derive(Debug, Clone, Args)]
pub struct PolyArgs {
    /// Coefficient field: `q`, `z` or `fp:P`.
    #[arg(long, default_value = "q")]
    pub field: String,
    /// Number of variables x0..x{N-1}.
    #[arg(long)]
    pub nvars: Option<usize>,
    #[arg(long, conflicts_with = "input")]
    pub poly: Option<String>,
    /// File whose first line is `vars=N field=F`.
    #[arg(long = "in", value_name = "FILE")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SecondPoly {
    #[arg(long, conflicts_with = "input2")]
    pub poly2: Option<String>,
    #[arg(long = "in2", value_name = "FILE")]
    pub input2: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct BracketArgs {
    /// Ambient dimension n of P^n.
    #[arg(long)]
    pub n: usize,
    /// Dimension r of the cycle.
    #[arg(long)]
    pub dim: usize,
    /// Tuples separated by `;`, subsets by `|`, indices by `,`.
    #[arg(long)]
    pub support: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Numerical function of a hypersurface for a weight vector.
    Mu {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    /// Numerical function of a bracket-monomial support.
    MuBracket {
        #[command(flatten)]
        bracket: BracketArgs,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    /// Weighted-multiplicity ratio in the chart X0 = 1.
    LeeRatio {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    /// Checks d*sum(w) - (n+1)*w(f) + (n+1)*mu = 0.
    IdentityCheck {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    /// Decides stability against the diagonal torus.
    CertifyTorus {
        #[command(flatten)]
        poly: PolyArgs,
        /// Bracket support instead of a polynomial (needs --n and --dim).
        #[arg(long, requires_all = ["n", "dim"], conflicts_with_all = ["poly", "input"])]
        support: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Bounded search for a destabilizing coordinate change.
    SearchDestab {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, default_value_t = 2000)]
        random: usize,
        #[arg(long, default_value_t = 100_000)]
        max_candidates: usize,
        /// Transvection scalars, comma separated.
        #[arg(long, default_value = "1,-1", allow_hyphen_values = true)]
        scalars: String,
    },
    /// Sum of cycles (product of equations).
    Sum {
        #[command(flatten)]
        poly: PolyArgs,
        #[command(flatten)]
        second: SecondPoly,
    },
    /// m-fold multiple of a cycle.
    Power {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        m: u64,
    },
    /// Support-preserving lift from F_p to Z and a sampled mu comparison.
    LiftCheck {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Upper bound sum(w)/w(f) for the log canonical threshold at the origin.
    LctBound {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        w: String,
    },
    /// Minimizes the bound over primitive weights in [0, max-weight]^n.
    LctOptimize {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        max_weight: u64,
    },
    /// Discrepancy -1 + sum(w) - c*w(f) of the weighted blow-up.
    BlowupA {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        w: String,
        #[arg(long)]
        c: String,
    },
    /// F-pure threshold interval from Frobenius powers.
    Fpt {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        e: u32,
    },
    /// Verdict from a certified lower bound for the threshold.
    LeeVerdict {
        /// Dimension n of P^n (defaults to nvars - 1 with --points).
        #[arg(long)]
        n: Option<i64>,
        /// Degree (defaults to the polynomial's degree with --points).
        #[arg(long)]
        d: Option<i64>,
        /// Certified lower bound, e.g. `1` or `3/4`.
        #[arg(long, conflicts_with = "points")]
        bound: Option<String>,
        /// `lct` or `fpt`.
        #[arg(long, default_value = "lct")]
        kind: String,
        /// Points of P^n over F_p, `;`-separated; the bound becomes the least
        /// fpt lower end over the charts centred there.
        #[arg(long, requires = "e")]
        points: Option<String>,
        #[arg(long)]
        e: Option<u32>,
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// Sylvester resultant of two binary forms given by coefficient lists.
    Resultant {
        #[arg(long, default_value = "q")]
        field: String,
        /// Coefficients of P, highest power of X0 first.
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Resultant of the two partials of a binary form.
    Disc {
        #[arg(long)]
        d: usize,
        /// Indeterminate coefficients a_k, printed as x_k.
        #[arg(long, conflicts_with_all = ["poly", "input"])]
        generic: bool,
        /// Reduce a generic result mod this prime.
        #[arg(long = "mod")]
        modulus: Option<u64>,
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// Invariants S, T and D = 4S^3 - T^2 of a binary quartic.
    QuarticSt {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "generic")]
        coeffs: Option<String>,
        #[arg(long)]
        generic: bool,
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// Whether a binary form is squarefree.
    SmoothBinary {
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// Points of P^n(F_{p^e}) where all partials vanish.
    SingularPoints {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, default_value_t = 1)]
        e: u32,
        /// Require F to vanish as well.
        #[arg(long)]
        include_f: bool,
    },
    /// 1 - (1 - d)^(n+1).
    CyclicExponent {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u64,
    },
}
