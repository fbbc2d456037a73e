//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "posetfree",
    version,
    about = "Forbidden subposets in the Boolean lattice: exact solvers, blow-ups, containers, supersaturation finders and random experiments",
    long_about = "Forbidden subposets in the Boolean lattice.\n\n\
        Patterns are named shorthands (chain:t, antichain, wedge, vee, y, yd, s, splus, spp, n, fork:t, tree:t,h, \
        diamond:k) or JSON poset files; an existing file always wins over a shorthand. Families are text files with \
        an `n=<k>` header and one set per line.\n\n\
        Exit status: 0 success, 1 domain or usage error, 2 capacity exceeded, 3 I/O error. Data goes to standard \
        output (or --output), diagnostics to standard error."
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Write data here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Worker threads for parallel commands; defaults to $POSETFREE_JOBS, then all cores.
    #[arg(long, global = true, value_name = "K")]
    pub jobs: Option<usize>,
    /// Output format; each command accepts the formats it documents.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Report wall-clock seconds in `runtime` (otherwise null, so reruns are byte-identical).
    #[arg(long, global = true)]
    pub timing: bool,
    /// Acknowledge a capacity override; required by every --max-* flag.
    #[arg(long = "i-know", global = true)]
    pub i_know: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact La(n, P): the largest P-free family in 2^[n].
    #[command(long_about = "Exact La(n, P), the largest P-free family in 2^[n], with a witness.\n\n\
        Arbitrary patterns use branch-and-bound over the canonical order (size, then value), pruned by the \
        Lubell-mass budget |P| - 1 of the LYM inequality. Chains with n above the search limit go through the \
        Greene-Kleitman minimum-cost flow on the full lattice.")]
    La(LaArgs),
    /// Count all P-free families in 2^[n] (Dedekind numbers for chain:2).
    #[command(long_about = "Number of P-free families in 2^[n], the empty family included.\n\n\
        Depth-first enumeration adding sets in increasing canonical position; freeness is inherited by \
        subfamilies, so each family is reached once. chain:2 gives the Dedekind numbers 2, 3, 6, 20, 168, 7581.")]
    Count(CountArgs),
    /// Largest P-free subfamily of a given family.
    #[command(long_about = "Largest P-free subfamily of an explicit family.\n\n\
        chain:2 uses Dilworth's theorem through a maximum bipartite matching and Konig's theorem; chain:t uses \
        the Greene-Kleitman maximum (t-1)-antichain by minimum-cost flow; other patterns use branch-and-bound \
        on small families.")]
    Maxfree(MaxfreeArgs),
    /// Find a copy of a pattern, or of its blow-up P(x, t), in a family.
    #[command(long_about = "Weak (or induced) subposet search by backtracking with containment pruning, or a copy of \
        the d-blow-up P(x, t) searched group by group with leaf replicas assigned by bipartite matching.\n\n\
        Prints the assignment as JSON, or NONE when there is no copy.")]
    Embed(EmbedArgs),
    /// Build the d-blow-up P(x, d) of a tree poset, or just its size.
    #[command(long_about = "The d-blow-up P(x, d): every element at distance r from the root x is replicated d^r \
        times, replicas fanning out group by group along the Hasse tree. Replicas are named label[i.j...] by \
        their path of group indices.")]
    Blowup(BlowupArgs),
    /// Supersaturation finders and the fork-type size bounds.
    #[command(subcommand)]
    Super(SuperCommand),
    /// Fingerprints and containers for P-free families.
    #[command(subcommand)]
    Containers(ContainersCommand),
    /// Random subfamilies P(n, p): experiments, the diamond construction, the union bound.
    #[command(subcommand)]
    Random(RandomCommand),
}

#[derive(Debug, Args)]
pub struct LaArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub pattern: String,
    /// Raise the branch-and-bound ground-set limit (needs --i-know).
    #[arg(long, value_name = "N")]
    pub max_n: Option<u32>,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub pattern: String,
    /// Raise the enumeration ground-set limit (needs --i-know).
    #[arg(long, value_name = "N")]
    pub max_n: Option<u32>,
}

#[derive(Debug, Args)]
pub struct MaxfreeArgs {
    #[arg(long)]
    pub family: PathBuf,
    #[arg(long)]
    pub pattern: String,
}

#[derive(Debug, Args)]
pub struct EmbedArgs {
    #[arg(long)]
    pub pattern: String,
    #[arg(long)]
    pub family: PathBuf,
    /// Require comparabilities exactly as in the pattern.
    #[arg(long)]
    pub induced: bool,
    /// Search for P(x, t) instead: a width, or `max` for the widest.
    #[arg(long, value_name = "t|max")]
    pub blowup: Option<String>,
    /// Root label for --blowup; defaults to the pattern's own root.
    #[arg(long)]
    pub root: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Poset,
    Size,
}

#[derive(Debug, Args)]
pub struct BlowupArgs {
    /// Poset file or shorthand.
    #[arg(long)]
    pub poset: String,
    #[arg(long)]
    pub root: Option<String>,
    #[arg(long)]
    pub d: usize,
    #[arg(long, value_enum, default_value = "size")]
    pub emit: Emit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuperPattern {
    Wedge,
    Yd,
    S,
    Splus,
    Spp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DensePattern {
    Wedge,
    Vee,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Down,
    Up,
}

#[derive(Debug, Subcommand)]
pub enum SuperCommand {
    /// Find a blow-up in a family larger than the extremal size.
    #[command(long_about = "Constructive supersaturation. The family is restricted to the middle band \
        |size - n/2| <= n^(2/3) and trimmed to the size the argument starts from: (1+eps)m for wedge, (2+eps)m \
        for yd, (h-1+eps)m for s, splus and spp, with m the middle binomial coefficient.\n\n\
        Members are classified by their relatives one level away or farther; a hub of maximum degree towards \
        classified members supplies same-type neighbours, and each neighbour its own distinct relatives. yd \
        halves a wedge of double width, mono-types it and exchanges roles until no leg contains a first-level \
        set. s, splus and spp join a lower and an upper copy at a common hub and run three filter steps that \
        make them disjoint.\n\n\
        Prints a JSON witness; the `ledger` field (or --format text) lists every step.")]
    Find(SuperFindArgs),
    /// The dense-case wedge or vee finder for families of at least 4(1+eps)m members.
    #[command(long_about = "Dense case: members with at least eps*n^4/500 subsets at some distance j >= 4 form the \
        dense part; a hub of maximum degree towards it yields first-level sets, each with distinct subsets \
        picked greedily or by matching. The width grows until the first failure. vee runs on complements.")]
    Dense(SuperDenseArgs),
    /// Type 1 / 2 / 3 classification of the band part of a family.
    #[command(long_about = "Type 1: at least eps*n/30 relatives one level away. Type 2: at least eps*n^2/30 at \
        some distance j >= 2. Type 3: neither. `down` counts subsets, `up` supersets. Members outside the \
        middle band are dropped and counted.")]
    Classify(SuperClassifyArgs),
    /// Check the (1 + 15 eps) m bound for families with few supersets at each distance.
    #[command(name = "check-fork", long_about = "Hypotheses: every member lies in the middle band and has at most \
        eps*n supersets one level up and at most eps*n^2 at each distance j >= 2. Conclusion: |F| <= (1+15eps)m. \
        Reports both, the Lubell mass and the largest per-member chain mass.")]
    CheckFork(SuperCheckArgs),
    /// Check the (4 + 400 eps) m bound for families with few supersets four or more levels up.
    #[command(name = "check-fork-plus", long_about = "Hypotheses: every member lies in the middle band and has at \
        most eps*n^4 supersets at each distance j >= 4. Conclusion: |F| <= (4+400eps)m.")]
    CheckForkPlus(SuperCheckArgs),
}

#[derive(Debug, Args)]
pub struct SuperFindArgs {
    #[arg(long, value_enum)]
    pub pattern: SuperPattern,
    #[arg(long)]
    pub family: PathBuf,
    #[arg(long)]
    pub epsilon: f64,
    /// Width to aim for; without it the widest reachable width is reported.
    #[arg(long)]
    pub target_t: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SuperDenseArgs {
    #[arg(long, value_enum)]
    pub pattern: DensePattern,
    #[arg(long)]
    pub family: PathBuf,
    #[arg(long)]
    pub epsilon: f64,
}

#[derive(Debug, Args)]
pub struct SuperClassifyArgs {
    #[arg(long)]
    pub family: PathBuf,
    #[arg(long)]
    pub epsilon: f64,
    #[arg(long, value_enum, default_value = "down")]
    pub direction: DirectionArg,
}

#[derive(Debug, Args)]
pub struct SuperCheckArgs {
    #[arg(long)]
    pub family: PathBuf,
    #[arg(long)]
    pub epsilon: f64,
}

#[derive(Debug, Subcommand)]
pub enum ContainersCommand {
    /// Run the container algorithm and emit its trace as JSON lines.
    #[command(long_about = "Graph-container iteration on 2^[n]. Each step takes the widest copy of P(x, t) left \
        in G. A root outside F is deleted. A root in F with t >= t* goes to the fingerprint H and starts the \
        subphases: walk the pattern breadth-first, scan the group under the chosen parent in canonical order, \
        move the first member of F to H and delete what was scanned, or delete the whole group. Below t* the \
        run stops; what is left of G is the container f(H).\n\n\
        With --t1 the run has two stages: threshold t1 from the whole lattice, then t* from the first container.\n\n\
        One JSON object per step, then a summary line. --all-pfree --n k runs every P-free family in 2^[k] and \
        prints one summary line each.")]
    Run(ContainersRunArgs),
    /// Rebuild a container from its fingerprint alone.
    #[command(long_about = "Replays the container iteration with membership in H as the only oracle, which \
        repeats the original run step for step. --check compares the result with the summary line of a saved \
        run trace.")]
    Replay(ContainersReplayArgs),
    /// Group the containers of many families by fingerprint.
    #[command(long_about = "Runs the single-stage algorithm on every input family and groups the results by \
        fingerprint; one fingerprint producing two containers is reported as an error. Reports the largest \
        container, La(n, P) where it is computable and the slack between them.")]
    Census(ContainersCensusArgs),
}

#[derive(Debug, Args)]
pub struct ContainerShape {
    #[arg(long)]
    pub pattern: String,
    #[arg(long)]
    pub root: Option<String>,
    #[arg(long = "t-star")]
    pub t_star: usize,
    /// First-stage threshold of a two-stage run; must exceed --t-star.
    #[arg(long)]
    pub t1: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ContainersRunArgs {
    #[command(flatten)]
    pub shape: ContainerShape,
    #[arg(long, conflicts_with = "all_pfree")]
    pub family: Option<PathBuf>,
    #[arg(long, requires = "n")]
    pub all_pfree: bool,
    #[arg(long)]
    pub n: Option<u32>,
}

#[derive(Debug, Args)]
pub struct ContainersReplayArgs {
    #[command(flatten)]
    pub shape: ContainerShape,
    /// Fingerprint H (H₁ for two stages).
    #[arg(long)]
    pub fingerprint: PathBuf,
    /// Second-stage fingerprint H₂.
    #[arg(long)]
    pub fingerprint2: Option<PathBuf>,
    /// Saved `containers run` output to compare against.
    #[arg(long)]
    pub check: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ContainersCensusArgs {
    #[arg(long)]
    pub pattern: String,
    #[arg(long)]
    pub root: Option<String>,
    #[arg(long = "t-star")]
    pub t_star: usize,
    /// Family files to include.
    #[arg(long = "family", conflicts_with = "all_pfree")]
    pub families: Vec<PathBuf>,
    #[arg(long, requires = "n")]
    pub all_pfree: bool,
    #[arg(long)]
    pub n: Option<u32>,
    /// List every container, not only the totals.
    #[arg(long)]
    pub entries: bool,
}

#[derive(Debug, Subcommand)]
pub enum RandomCommand {
    /// Largest P-free subfamily of P(n, p) over a grid; CSV per cell.
    #[command(long_about = "Monte Carlo over P(n, p): each cell (n, p) runs independent trials with seeds derived \
        from the master seed by SplitMix64, samples with ChaCha8 and estimates the largest P-free subfamily \
        (exact, Dilworth matching, Greene-Kleitman flow, or a heuristic with a chain-free upper bound). Sizes are \
        normalized by p*C(n, n/2); for chain:2 the reference curve 1 + e^(-pn/2) is included. Trials run in \
        parallel and are folded in order, so output does not depend on --jobs.\n\n\
        The config is JSON: {\"pattern\": \"chain:2\", \"n\": [10, 12], \"p\": [0.5] or \"c\": [...] for p = c/n, \
        \"trials\": 50, \"seed\": 1, \"mode\": \"dilworth\", \"epsilon\": 0.1}. Columns are described in \
        schema/random.md.")]
    Experiment(ExperimentArgs),
    /// Diamond-free families from P(n, p) by deleting one set of every diamond.
    #[command(long_about = "Samples P(n, p), keeps the middle three layers, removes one set from every diamond \
        copy and certifies the result diamond-free. Compares the size with 3pm and the diamond census of the \
        middle layers with (n^2/8)m.")]
    Diamond(DiamondArgs),
    /// The union-bound quantity Pi and its three factor bounds, in log space.
    #[command(long_about = "Evaluates the union bound over container fingerprints for P(n, p) in log space, \
        scaled by m = C(n, n/2): the fingerprint count, the probability of a large intersection with one \
        container, and the Chernoff factor e^(-eps^2 pm/(100h^2)), each checked against e^(eps^2 pm/(400h^2)). \
        Pass --p several times for a grid.")]
    Pi(PiArgs),
    /// Print one sample of P(n, p) as a family file.
    Sample(SampleArgs),
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    #[arg(long)]
    pub config: PathBuf,
}

#[derive(Debug, Args)]
pub struct DiamondArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
}

#[derive(Debug, Args)]
pub struct PiArgs {
    #[arg(long)]
    pub n: f64,
    /// Height of the pattern.
    #[arg(long)]
    pub h: u32,
    /// Number of elements of the pattern.
    #[arg(long, default_value_t = 3)]
    pub size: u32,
    #[arg(long, default_value_t = 1.0)]
    pub delta: f64,
    #[arg(long, default_value_t = 0.2)]
    pub epsilon: f64,
    #[arg(long = "p", required = true)]
    pub p: Vec<f64>,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
