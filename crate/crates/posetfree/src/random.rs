//! Random subfamilies `P(n, p)` and the experiments built on them.
//!
//! Randomness is pinned: a 64-bit seed is expanded by SplitMix64 into a
//! 32-byte ChaCha8 key, and every subset of `[n]` is visited in numeric mask
//! order and kept iff the next 53-bit uniform is below `p`. Per-trial seeds
//! are SplitMix64 mixes of the master seed with the cell and trial indices,
//! so each trial is reproducible on its own and independent of scheduling.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::embed::{find_subposet, PatternProbe};
use crate::error::{Error, Result};
use crate::extremal::{is_chain_pattern, longest_chain, max_antichain, max_ct_free, max_pfree_subfamily};
use crate::lattice::{binomial, binomial_u128, is_strict_subset, layer_sets, Set, SetFamily};
use crate::poset::{catalog, CatalogName, Poset};

/// Largest ground set for sampling.
pub const SAMPLE_CAP: u32 = 24;
/// Largest ground set for the diamond construction.
pub const DIAMOND_CAP: u32 = 18;

/// One step of SplitMix64.
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for trial `trial` of grid cell `cell` under master seed `seed`.
pub fn trial_seed(seed: u64, cell: u64, trial: u64) -> u64 {
    let mut s = seed;
    let a = splitmix64(&mut s);
    let mut s = a ^ cell.wrapping_mul(0xd1b5_4a32_d192_ed03);
    let b = splitmix64(&mut s);
    let mut s = b ^ trial.wrapping_mul(0xaef1_7502_108e_f2d9);
    splitmix64(&mut s)
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    let mut state = seed;
    let mut key = [0u8; 32];
    for chunk in key.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    ChaCha8Rng::from_seed(key)
}

/// A reproducible draw of `P(n, p)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RandomFamilySample {
    pub n: u32,
    pub p: f64,
    pub seed: u64,
    pub family: SetFamily,
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("probability {p} outside [0, 1]")));
    }
    Ok(())
}

/// Keeps each subset of `[n]` independently with probability `p`.
pub fn sample(n: u32, p: f64, seed: u64) -> Result<RandomFamilySample> {
    if n > SAMPLE_CAP {
        return Err(Error::capacity("ground set for sampling", n as u64, SAMPLE_CAP as u64));
    }
    check_p(p)?;
    let mut rng = rng_for(seed);
    let scale = 1.0 / (1u64 << 53) as f64;
    let mut members = Vec::new();
    for s in 0..1u64 << n {
        let u = (rng.next_u64() >> 11) as f64 * scale;
        if u < p {
            members.push(s);
        }
    }
    Ok(RandomFamilySample {
        n,
        p,
        seed,
        family: SetFamily::new(n, members)?,
    })
}

/// A random `P`-free family: a draw of `P(n, p)` visited in a seeded random
/// order, keeping each set that completes no copy of `pattern`.
pub fn random_pfree_family(n: u32, pattern: &Poset, p: f64, seed: u64) -> Result<SetFamily> {
    let drawn = sample(n, p, seed)?;
    let mut order = drawn.family.into_members();
    let mut rng = rng_for(splitmix64(&mut seed.clone()));
    for i in (1..order.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        order.swap(i, j);
    }
    let probe = PatternProbe::new(pattern)?;
    let mut kept: Vec<Set> = Vec::new();
    for s in order {
        if !probe.copy_through(&kept, s) {
            kept.push(s);
        }
    }
    SetFamily::new(n, kept)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EstimatorMode {
    /// Branch-and-bound; at most [`SUBFAMILY_CAP`] members.
    Exact,
    /// Largest antichain by matching; pattern must be `C_2`.
    Dilworth,
    /// Largest `C_t`-free subfamily by flow; pattern must be a chain.
    GreeneKleitman,
    /// Certified lower bound and flow upper bound for any pattern.
    Heuristic,
}

impl EstimatorMode {
    pub fn as_str(self) -> &'static str {
        match self {
            EstimatorMode::Exact => "exact",
            EstimatorMode::Dilworth => "dilworth",
            EstimatorMode::GreeneKleitman => "greene-kleitman",
            EstimatorMode::Heuristic => "heuristic",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "exact" => EstimatorMode::Exact,
            "dilworth" => EstimatorMode::Dilworth,
            "greene-kleitman" | "gk" => EstimatorMode::GreeneKleitman,
            "heuristic" | "greedy-heuristic" => EstimatorMode::Heuristic,
            _ => return Err(Error::InvalidParameter(format!("unknown estimator mode `{s}`"))),
        })
    }
}

/// Bracket on the largest `P`-free subfamily; `lower == upper` when certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Estimate {
    pub lower: usize,
    pub upper: usize,
    pub certified: bool,
    /// A `P`-free subfamily of size `lower`.
    pub witness: SetFamily,
    pub mode: EstimatorMode,
}

/// Largest `P`-free subfamily of a sample, exactly or as a bracket.
///
/// The heuristic lower bound takes the best window of `h − 1` consecutive
/// layers (no chain of `h`, hence free), then greedily adds the remaining
/// members nearest the window first whenever no copy appears. Its upper
/// bound is the largest `C_{|P|}`-free subfamily, valid because a chain of
/// `|P|` sets contains every poset on `|P|` elements.
pub fn largest_pfree_in_sample(family: &SetFamily, pattern: &Poset, mode: EstimatorMode) -> Result<Estimate> {
    let chain = is_chain_pattern(pattern);
    let mismatch = |what: &str| Err(Error::InvalidParameter(format!("{} mode needs {what}", mode.as_str())));
    match mode {
        EstimatorMode::Exact => {
            let r = max_pfree_subfamily(family, pattern)?;
            Ok(certified(r.witness, mode))
        }
        EstimatorMode::Dilworth => {
            if !(chain && pattern.len() == 2) {
                return mismatch("the two-element chain");
            }
            Ok(certified(max_antichain(family)?.witness, mode))
        }
        EstimatorMode::GreeneKleitman => {
            if !chain || pattern.len() < 2 {
                return mismatch("a chain of at least two elements");
            }
            Ok(certified(max_ct_free(family, pattern.len())?.witness, mode))
        }
        EstimatorMode::Heuristic => heuristic(family, pattern),
    }
}

fn certified(witness: SetFamily, mode: EstimatorMode) -> Estimate {
    Estimate {
        lower: witness.len(),
        upper: witness.len(),
        certified: true,
        witness,
        mode,
    }
}

/// Members reachable from `s` within `hops` comparability steps.
fn neighbourhood(current: &[Set], s: Set, hops: usize) -> Vec<Set> {
    let mut taken = vec![false; current.len()];
    let mut frontier = vec![s];
    let mut out = Vec::new();
    for _ in 0..hops {
        let mut next = Vec::new();
        for (i, &c) in current.iter().enumerate() {
            if !taken[i] && frontier.iter().any(|&f| is_strict_subset(f, c) || is_strict_subset(c, f)) {
                taken[i] = true;
                next.push(c);
            }
        }
        if next.is_empty() {
            break;
        }
        out.extend_from_slice(&next);
        frontier = next;
    }
    out
}

fn heuristic(family: &SetFamily, pattern: &Poset) -> Result<Estimate> {
    let n = family.n();
    let h = pattern.height().max(1);
    let width = h - 1;
    let profile = family.layer_profile();
    let mut best_lo = 0usize;
    let mut best_size = 0usize;
    if width > 0 {
        for lo in 0..=(n as usize + 1).saturating_sub(width) {
            let size: usize = profile[lo..(lo + width).min(profile.len())].iter().sum();
            if size > best_size {
                best_size = size;
                best_lo = lo;
            }
        }
    }
    let in_window = |s: Set| {
        let k = s.count_ones() as usize;
        width > 0 && k >= best_lo && k < best_lo + width
    };
    let mut current: Vec<Set> = family.iter().filter(|&s| in_window(s)).collect();
    // An antichain-or-less window never needs the probe; larger patterns do.
    let mut rest: Vec<Set> = family.iter().filter(|&s| !in_window(s)).collect();
    let centre = best_lo as i64 * 2 + width as i64 - 1;
    rest.sort_by_key(|&s| ((2 * s.count_ones() as i64 - centre).abs(), s.count_ones(), s));
    if pattern.len() > 1 && pattern.len() <= crate::embed::SUBPOSET_CAP {
        let probe = PatternProbe::new(pattern)?;
        let hops = if pattern.is_connected() {
            pattern.distance_matrix().into_iter().flatten().flatten().max().unwrap_or(0).max(1)
        } else {
            pattern.len()
        };
        for s in rest {
            let local = neighbourhood(&current, s, hops);
            if !probe.copy_through(&local, s) {
                current.push(s);
            }
        }
    }
    let witness = SetFamily::new(n, current)?;
    if find_subposet(pattern, &witness, false)?.is_some() {
        return Err(Error::Certificate(String::from("heuristic witness contains the pattern")));
    }
    let upper = if pattern.len() < 2 {
        0
    } else {
        max_ct_free(family, pattern.len())?.value
    };
    Ok(Estimate {
        lower: witness.len(),
        upper,
        certified: witness.len() == upper,
        witness,
        mode: EstimatorMode::Heuristic,
    })
}

/// Probability grid: absolute values, or `p = c / n` per ground set size.
#[derive(Debug, Clone, PartialEq)]
pub enum PGrid {
    Absolute(Vec<f64>),
    OverN(Vec<f64>),
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub pattern: Poset,
    pub pattern_name: String,
    pub ns: Vec<u32>,
    pub grid: PGrid,
    pub trials: usize,
    pub epsilon: f64,
    pub seed: u64,
    pub mode: EstimatorMode,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidParameter(String::from("trials must be at least 1")));
        }
        if self.ns.is_empty() {
            return Err(Error::InvalidParameter(String::from("no ground set sizes")));
        }
        for (_, p) in self.cells() {
            if !(p > 0.0 && p <= 1.0) {
                return Err(Error::InvalidParameter(format!("grid value {p} outside (0, 1]")));
            }
        }
        Ok(())
    }

    /// `(n, p)` for every cell in row-major order.
    pub fn cells(&self) -> Vec<(u32, f64)> {
        let mut out = Vec::new();
        for &n in &self.ns {
            match &self.grid {
                PGrid::Absolute(ps) => out.extend(ps.iter().map(|&p| (n, p))),
                PGrid::OverN(cs) => out.extend(cs.iter().map(|&c| (n, c / n.max(1) as f64))),
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialResult {
    pub trial: usize,
    pub seed: u64,
    pub sample_size: usize,
    pub lower: usize,
    pub upper: usize,
    pub certified: bool,
}

/// Runs trial `trial` of cell `cell` (index into [`ExperimentConfig::cells`]).
pub fn run_trial(config: &ExperimentConfig, cell: usize, trial: usize) -> Result<TrialResult> {
    let (n, p) = config.cells()[cell];
    let seed = trial_seed(config.seed, cell as u64, trial as u64);
    let s = sample(n, p, seed)?;
    let est = largest_pfree_in_sample(&s.family, &config.pattern, config.mode)?;
    Ok(TrialResult {
        trial,
        seed,
        sample_size: s.family.len(),
        lower: est.lower,
        upper: est.upper,
        certified: est.certified,
    })
}

/// Per-cell statistics, normalized by `p · C(n, ⌊n/2⌋)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CellStats {
    pub n: u32,
    pub p: f64,
    pub trials: usize,
    pub mean: f64,
    pub min: f64,
    pub max: f64,
    pub upper_mean: f64,
    pub certified: bool,
    /// `1 + e^{−c/2}` with `c = p n`, reported for the two-element chain.
    pub reference: Option<f64>,
    /// Error message when the cell could not be computed.
    pub error: Option<String>,
}

pub fn middle_binomial_f64(n: u32) -> f64 {
    match binomial_u128(n as u64, (n / 2) as u64) {
        Some(v) => v as f64,
        None => f64::INFINITY,
    }
}

/// Folds trial results in trial order.
pub fn aggregate(config: &ExperimentConfig, cell: usize, results: &Result<Vec<TrialResult>>) -> CellStats {
    let (n, p) = config.cells()[cell];
    let reference = (is_chain_pattern(&config.pattern) && config.pattern.len() == 2)
        .then(|| 1.0 + libm::exp(-(p * n as f64) / 2.0));
    let scale = p * middle_binomial_f64(n);
    match results {
        Err(e) => CellStats {
            n,
            p,
            trials: 0,
            mean: f64::NAN,
            min: f64::NAN,
            max: f64::NAN,
            upper_mean: f64::NAN,
            certified: false,
            reference,
            error: Some(format!("{e}")),
        },
        Ok(rs) => {
            let norm: Vec<f64> = rs.iter().map(|r| r.lower as f64 / scale).collect();
            let k = norm.len().max(1) as f64;
            CellStats {
                n,
                p,
                trials: rs.len(),
                mean: norm.iter().sum::<f64>() / k,
                min: norm.iter().copied().fold(f64::INFINITY, f64::min),
                max: norm.iter().copied().fold(f64::NEG_INFINITY, f64::max),
                upper_mean: rs.iter().map(|r| r.upper as f64 / scale).sum::<f64>() / k,
                certified: rs.iter().all(|r| r.certified),
                reference,
                error: None,
            }
        }
    }
}

/// Sequential experiment; front ends may run trials in parallel and fold
/// them with [`aggregate`] in the same order.
pub fn experiment(config: &ExperimentConfig) -> Result<Vec<CellStats>> {
    config.validate()?;
    let cells = config.cells();
    Ok((0..cells.len())
        .map(|c| {
            let rs: Result<Vec<TrialResult>> = (0..config.trials).map(|t| run_trial(config, c, t)).collect();
            aggregate(config, c, &rs)
        })
        .collect())
}

/// Outcome of removing one set from every diamond in the middle three layers.
#[derive(Debug, Clone, PartialEq)]
pub struct DiamondReport {
    pub n: u32,
    pub p: f64,
    pub seed: u64,
    /// Members of the sample in the middle three layers.
    pub sampled: usize,
    /// Diamond copies among them before any removal.
    pub copies: usize,
    pub removed: usize,
    pub family: SetFamily,
    /// `3 p m`.
    pub target: f64,
    /// Exact diamond count of the full middle three layers.
    pub census: u128,
    /// `(n² / 8) m`.
    pub census_formula: f64,
}

/// Diamonds in the full layers `k − 1, k, k + 1` with `k = ⌊n/2⌋`: a bottom
/// and a top two sizes up determine both middles.
pub fn diamond_census(n: u32) -> u128 {
    let k = (n / 2) as u64;
    if k == 0 || k + 1 > n as u64 {
        return 0;
    }
    let n = n as u64;
    binomial_u128(n, k - 1).unwrap_or(0) * binomial_u128(n - k + 1, 2).unwrap_or(0)
}

pub fn diamond_lower_bound_run(n: u32, p: f64, seed: u64) -> Result<DiamondReport> {
    if n > DIAMOND_CAP {
        return Err(Error::capacity("ground set for the diamond run", n as u64, DIAMOND_CAP as u64));
    }
    if n < 2 {
        return Err(Error::InvalidParameter(String::from("diamond run needs n ≥ 2")));
    }
    let k = n / 2;
    let s = sample(n, p, seed)?;
    let mut alive = vec![false; 1usize << n];
    let mut sampled = 0;
    for m in s.family.iter() {
        let size = m.count_ones();
        if size + 1 >= k && size <= k + 1 {
            alive[m as usize] = true;
            sampled += 1;
        }
    }
    let mut copies = 0;
    let mut removed = 0;
    let full = (1u64 << n) - 1;
    let bottoms = layer_sets(n, k - 1);
    // Count first so the census is taken before removals interfere.
    let live = |alive: &[bool], b: Set, i: usize, j: usize| {
        let (mi, mj, t) = (b | 1 << i, b | 1 << j, b | 1 << i | 1 << j);
        alive[b as usize] && alive[mi as usize] && alive[mj as usize] && alive[t as usize]
    };
    let pairs = |b: Set| {
        let free = full & !b;
        let bits: Vec<usize> = (0..n as usize).filter(|&i| free >> i & 1 == 1).collect();
        let mut out = Vec::new();
        for a in 0..bits.len() {
            for c in a + 1..bits.len() {
                out.push((bits[a], bits[c]));
            }
        }
        out
    };
    for &b in &bottoms {
        for (i, j) in pairs(b) {
            if live(&alive, b, i, j) {
                copies += 1;
            }
        }
    }
    for &b in &bottoms {
        for (i, j) in pairs(b) {
            if live(&alive, b, i, j) {
                alive[(b | 1 << i | 1 << j) as usize] = false;
                removed += 1;
            }
        }
    }
    let members: Vec<Set> = (0..1u64 << n).filter(|&m| alive[m as usize]).collect();
    let family = SetFamily::new(n, members)?;
    let diamond = catalog(CatalogName::Diamond(2))?.poset;
    if longest_chain(&family) > 3 || find_subposet(&diamond, &family, false)?.is_some() {
        return Err(Error::Certificate(String::from("diamond run output is not diamond-free")));
    }
    let m = middle_binomial_f64(n);
    Ok(DiamondReport {
        n,
        p,
        seed,
        sampled,
        copies,
        removed,
        family,
        target: 3.0 * p * m,
        census: diamond_census(n),
        census_formula: (n as f64 * n as f64 / 8.0) * m,
    })
}

/// Natural log of `C(n, ⌊n/2⌋)`: exact below 1000, Stirling beyond.
pub fn ln_middle_binomial(n: f64) -> f64 {
    if n < 1000.0 && n == libm::floor(n) {
        let b = binomial(n as u64, (n as u64) / 2);
        return ln_biguint(&b);
    }
    ln_choose(n, libm::floor(n / 2.0))
}

fn ln_biguint(b: &num_bigint::BigUint) -> f64 {
    let bits = b.bits();
    if bits <= 1000 {
        let digits = b.to_u64_digits();
        let mut v = 0.0f64;
        for &d in digits.iter().rev() {
            v = v * 18446744073709551616.0 + d as f64;
        }
        return libm::log(v);
    }
    let shift = bits - 64;
    let top = b >> shift;
    libm::log(top.to_u64_digits()[0] as f64) + shift as f64 * core::f64::consts::LN_2
}

/// `ln C(N, k)` for real `0 ≤ k ≤ N` with the Stirling series through the
/// `1/12x` terms; exact enough for the log-space bounds below.
pub fn ln_choose(big_n: f64, k: f64) -> f64 {
    if k <= 0.0 || k >= big_n {
        return 0.0;
    }
    if big_n < 1.0e6 {
        return libm::lgamma(big_n + 1.0) - libm::lgamma(k + 1.0) - libm::lgamma(big_n - k + 1.0);
    }
    let rest = big_n - k;
    let q = k / big_n;
    let main = -k * libm::log(q) - rest * libm::log1p(-q);
    let half = 0.5 * libm::log(big_n / (2.0 * core::f64::consts::PI * k * rest));
    let corr = 1.0 / (12.0 * big_n) - 1.0 / (12.0 * k) - 1.0 / (12.0 * rest);
    main + half + corr
}

/// The displayed union bound with its factors, all divided by `m` so huge
/// `n` stays representable.
#[derive(Debug, Clone, PartialEq)]
pub struct PiReport {
    pub ln_m: f64,
    /// Fingerprint bound for the first stage, `|P| n^{-1.9} 2^n`, over `m`.
    pub first_scaled: f64,
    /// Fingerprint bound for the second stage, `|P|(4h−3)m/(δn)`, over `m`.
    pub second_scaled: f64,
    /// The second bound exceeded `(4h−3)m` and was clamped.
    pub degenerate: bool,
    /// `ln((A+1)(B+1)) / m`.
    pub count_factor: f64,
    /// `(ln C(2^n, A) + A ln p) / m`.
    pub first_factor: f64,
    /// `(ln C((4h−3)m, B) + B ln p) / m`.
    pub second_factor: f64,
    /// `ε² p / (100 h²)`: the Chernoff exponent over `m`.
    pub chernoff: f64,
    /// `ε² p / (400 h²)`: the per-factor allowance over `m`.
    pub allowance: f64,
    pub count_ok: bool,
    pub first_ok: bool,
    pub second_ok: bool,
    /// `ln Π / m`.
    pub log_pi_scaled: f64,
    /// `ln Π`, when finite.
    pub log_pi: Option<f64>,
    pub vacuous: bool,
    /// `10^10 |P| (4h−3) h⁴ ε^{-5} δ^{-1}`.
    pub threshold_constant: f64,
    pub above_threshold: bool,
}

/// Evaluates the union bound `Π` in log space.
pub fn union_bound_pi(n: f64, h: u32, pattern_size: u32, delta: f64, epsilon: f64, p: f64) -> Result<PiReport> {
    let positive = [n, h as f64, pattern_size as f64, delta, epsilon];
    if positive.iter().any(|&v| !(v > 0.0)) || !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidParameter(String::from("parameters must be positive and p in (0, 1]")));
    }
    let hf = h as f64;
    let size = pattern_size as f64;
    let ln_m = ln_middle_binomial(n);
    let ln_two_n = n * core::f64::consts::LN_2;
    // 2^n / m and its log.
    let ln_ratio = ln_two_n - ln_m;
    let ratio = libm::exp(ln_ratio);
    let q1 = size * libm::pow(n, -1.9);
    let first_scaled = q1 * ratio;
    let factor = 4.0 * hf - 3.0;
    let mut second_scaled = size * factor / (delta * n);
    let degenerate = second_scaled > factor;
    if degenerate {
        second_scaled = factor;
    }
    let m = libm::exp(ln_m);
    let ln_a = libm::log(size) - 1.9 * libm::log(n) + ln_two_n;
    let ln_b = libm::log(second_scaled) + ln_m;
    let ln_plus_one = |ln_x: f64| if ln_x > 40.0 { ln_x } else { libm::log1p(libm::exp(ln_x)) };
    let count_factor = if m.is_finite() {
        (ln_plus_one(ln_a) + ln_plus_one(ln_b)) / m
    } else {
        libm::exp(libm::log(ln_plus_one(ln_a) + ln_plus_one(ln_b)) - ln_m)
    };
    // ln C(N, qN) / m with N/m = scale, from the leading Stirling terms.
    let scaled_choose = |scale: f64, q: f64, big_n: f64| {
        if q >= 1.0 {
            return 0.0;
        }
        if m.is_finite() && big_n.is_finite() {
            return ln_choose(big_n, q * big_n) / m;
        }
        scale * (-q * libm::log(q) - (1.0 - q) * libm::log1p(-q))
    };
    let first_factor = scaled_choose(ratio, q1.min(1.0), libm::exp(ln_two_n)) + first_scaled * libm::log(p);
    let q2 = second_scaled / factor;
    let second_factor = scaled_choose(factor, q2, factor * m) + second_scaled * libm::log(p);
    let chernoff = epsilon * epsilon * p / (100.0 * hf * hf);
    let allowance = chernoff / 4.0;
    let log_pi_scaled = count_factor + first_factor + second_factor - chernoff;
    let log_pi = if m.is_finite() {
        Some(log_pi_scaled * m).filter(|v| v.is_finite())
    } else {
        None
    };
    let threshold_constant =
        1.0e10 * size * factor * libm::pow(hf, 4.0) * libm::pow(epsilon, -5.0) / delta;
    Ok(PiReport {
        ln_m,
        first_scaled,
        second_scaled,
        degenerate,
        count_factor,
        first_factor,
        second_factor,
        chernoff,
        allowance,
        count_ok: count_factor <= allowance,
        first_ok: first_factor <= allowance,
        second_ok: second_factor <= allowance,
        log_pi_scaled,
        log_pi,
        vacuous: log_pi_scaled >= 0.0,
        threshold_constant,
        above_threshold: p > threshold_constant / n,
    })
}
