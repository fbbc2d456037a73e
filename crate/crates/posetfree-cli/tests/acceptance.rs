//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Every check runs the library end to end against an independent oracle
//! (brute force, a closed formula, or a second algorithm). Criteria that
//! cannot hold at this scale fail here and say why.

use std::process::ExitCode;
use std::time::Instant;

use posetfree::blowup::{blow_up, blow_up_size};
use posetfree::containers::{container_census, run_single_stage, verify_run};
use posetfree::extremal::{
    count_pfree, is_antichain, is_pattern_free, la_exact, longest_chain, max_antichain, max_ct_free,
    mirsky_partition, pfree_families, Method,
};
use posetfree::lattice::{binomial_u128, is_strict_subset, is_subset, layer_sets, middle_band_sizes, Set, SetFamily};
use posetfree::random::{
    aggregate, diamond_census, diamond_lower_bound_run, ln_middle_binomial, random_pfree_family, run_trial,
    splitmix64, trial_seed, union_bound_pi, EstimatorMode, ExperimentConfig, PGrid, TrialResult,
};
use posetfree::supersat::{
    asymptotic_constants, check_fork_bound, check_fork_plus_bound, find_radius2_blowup, find_wedge_blowup,
};
use posetfree::{catalog, CatalogName, Error, Poset};
use rayon::prelude::*;

struct Outcome {
    pass: bool,
    summary: String,
    /// Extra lines printed under the verdict.
    notes: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, summary: String) -> Self {
        Outcome { pass, summary, notes: Vec::new() }
    }
}

type Check = fn() -> Result<Outcome, Error>;

fn pattern(name: CatalogName) -> (Poset, usize) {
    let e = catalog(name).expect("catalog entry");
    let root = e.root.expect("catalog root");
    (e.poset, root)
}

fn middle(n: u32) -> u128 {
    binomial_u128(n as u64, (n / 2) as u64).expect("fits")
}

/// Sum of the `k` largest binomial coefficients of row `n`.
fn top_binomials(n: u32, k: usize) -> u128 {
    let mut row: Vec<u128> = (0..=n).map(|i| binomial_u128(n as u64, i as u64).unwrap()).collect();
    row.sort_unstable_by(|a, b| b.cmp(a));
    row.iter().take(k).sum()
}

fn to_family(n: u32, mask: u64) -> Vec<Set> {
    (0..1u64 << n).filter(|&s| mask >> s & 1 == 1).collect()
}

fn sperner() -> Result<Outcome, Error> {
    let c2 = catalog(CatalogName::Chain(2))?.poset;
    let mut bad = Vec::new();
    for n in 1..=5 {
        let r = la_exact(n, &c2)?;
        if r.value as u128 != middle(n) || r.method != Method::BranchAndBound || !is_antichain(&r.witness) {
            bad.push(format!("la_exact({n}) = {}", r.value));
        }
    }
    for n in 6..=12 {
        let r = max_antichain(&SetFamily::full(n)?)?;
        if r.value as u128 != middle(n) || !is_antichain(&r.witness) {
            bad.push(format!("max_antichain({n}) = {}", r.value));
        }
    }
    Ok(Outcome::new(
        bad.is_empty(),
        if bad.is_empty() {
            String::from("search for n = 1..5 and matching for n = 6..12 both give C(n, n/2)")
        } else {
            bad.join("; ")
        },
    ))
}

/// Antichains among all `2^(2^n)` families, by pairwise comparison.
fn brute_antichains(n: u32) -> u128 {
    let sets = 1u32 << n;
    (0..1u64 << sets)
        .into_par_iter()
        .filter(|&mask| {
            let f = to_family(n, mask);
            f.iter().all(|&a| f.iter().all(|&b| a == b || !is_subset(a, b)))
        })
        .count() as u128
}

fn dedekind() -> Result<Outcome, Error> {
    let c2 = catalog(CatalogName::Chain(2))?.poset;
    let expected = [2u128, 3, 6, 20, 168];
    let mut got = Vec::new();
    let mut pass = true;
    for n in 0..=4u32 {
        let lib = count_pfree(n, &c2)?;
        let oracle = brute_antichains(n);
        pass &= lib == oracle && lib == expected[n as usize];
        got.push(format!("{lib}/{oracle}"));
    }
    Ok(Outcome::new(pass, format!("library/brute force for n = 0..4: {}", got.join(", "))))
}

fn chains() -> Result<Outcome, Error> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for t in 2..=4usize {
        let ct = catalog(CatalogName::Chain(t))?.poset;
        for n in 1..=5u32 {
            let r = la_exact(n, &ct)?;
            checked += 1;
            if r.value as u128 != top_binomials(n, t - 1) || longest_chain(&r.witness) >= t {
                bad.push(format!("la_exact({n}, C{t}) = {}", r.value));
            }
        }
        for n in 1..=10u32 {
            let r = max_ct_free(&SetFamily::full(n)?, t)?;
            checked += 1;
            if r.value as u128 != top_binomials(n, t - 1) || longest_chain(&r.witness) >= t {
                bad.push(format!("max_ct_free({n}, {t}) = {}", r.value));
            }
        }
    }
    Ok(Outcome::new(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{checked} values equal the sum of the t - 1 largest binomials, witnesses C_t-free")
        } else {
            bad.join("; ")
        },
    ))
}

fn blowups() -> Result<Outcome, Error> {
    use CatalogName::*;
    let figure = Poset::build(&["x", "p1", "p2", "q2", "r"], &[("p1", "x"), ("p2", "x"), ("p2", "q2"), ("q2", "r")])?;
    let (splus, sx) = pattern(SPlus);
    let sizes = (blow_up_size(&figure, 0, 2)?, blow_up_size(&splus, sx, 2)?);
    let mut bad = Vec::new();
    if sizes.0 != 17u32.into() || sizes.1 != 17u32.into() || blow_up(&figure, 0, 2)?.len() != 17 {
        bad.push(format!("sizes {} and {}", sizes.0, sizes.1));
    }
    // Every tree in the catalog; the diamond has a cycle and no blow-up.
    let names = [
        Chain(1), Chain(2), Chain(3), Chain(4), Wedge, Vee, Y, Yd, S, SPlus, SPlusPlus, N, Fork(2), Fork(3),
        MonotoneTree(2, 2), MonotoneTree(3, 2), MonotoneTree(2, 3),
    ];
    let mut cases = 0;
    for name in names {
        let p = catalog(name)?.poset;
        for root in 0..p.len() {
            for d in 1..=3 {
                let b = blow_up(&p, root, d)?;
                cases += 1;
                let size_ok = blow_up_size(&p, root, d)? == b.len().into();
                let identity_ok = d > 1 || (b.len() == p.len() && b.poset.is_isomorphic(&p));
                if !size_ok || !identity_ok || b.poset.height() != p.height() || !b.poset.is_tree() {
                    bad.push(format!("{name:?} root {} d {d}", p.label(root)));
                }
            }
        }
    }
    Ok(Outcome::new(
        bad.is_empty(),
        if bad.is_empty() {
            format!("P(x,2) has 17 elements; {cases} (poset, root, d <= 3) cases keep size, identity and height")
        } else {
            bad.join("; ")
        },
    ))
}

fn container_fuzz() -> Result<Outcome, Error> {
    use CatalogName::*;
    let cases: Vec<(u32, CatalogName, &str)> = [5, 6]
        .into_iter()
        .flat_map(|n| [(n, Wedge, "wedge"), (n, Yd, "yd"), (n, Chain(3), "chain:3"), (n, N, "n")])
        .collect();
    let mut failures = Vec::new();
    let mut parts = Vec::new();
    for (cell, &(n, name, label)) in cases.iter().enumerate() {
        let (p, root) = pattern(name);
        let results: Vec<Result<usize, String>> = (0..500u64)
            .into_par_iter()
            .map(|i| {
                let density = 0.15 + 0.85 * (i % 12) as f64 / 11.0;
                let seed = trial_seed(0xc047, cell as u64, i);
                let fam = random_pfree_family(n, &p, density, seed).map_err(|e| e.to_string())?;
                let run = run_single_stage(&fam, &p, root, 2).map_err(|e| format!("run: {e}"))?;
                verify_run(&run, &fam).map_err(|e| format!("seed {seed}: {e}"))?;
                Ok(run.container().len())
            })
            .collect();
        let ok = results.iter().filter(|r| r.is_ok()).count();
        let widest = results.iter().filter_map(|r| r.as_ref().ok()).max().copied().unwrap_or(0);
        failures.extend(results.into_iter().filter_map(Result::err).map(|e| format!("n={n} {label}: {e}")));
        parts.push(format!("n={n} {label} {ok}/500 (max container {widest})"));
    }
    let mut o = Outcome::new(failures.is_empty(), parts.join(", "));
    o.notes = failures.into_iter().take(5).collect();
    Ok(o)
}

/// Wedge-free iff no member has two strict subsets in the family.
fn brute_wedge_free(f: &[Set]) -> bool {
    f.iter().all(|&c| f.iter().filter(|&&a| is_strict_subset(a, c)).count() <= 1)
}

fn census_coverage() -> Result<Outcome, Error> {
    let (wedge, root) = pattern(CatalogName::Wedge);
    let mut brute: Vec<Vec<Set>> = (0..1u64 << 16)
        .into_par_iter()
        .map(|mask| to_family(4, mask))
        .filter(|f| brute_wedge_free(f))
        .collect();
    let families = pfree_families(4, &wedge)?;
    let mut enumerated: Vec<Vec<Set>> = families.iter().map(|f| {
        let mut v = f.members().to_vec();
        v.sort_unstable();
        v
    }).collect();
    brute.sort();
    enumerated.sort();
    let census = container_census(4, &wedge, root, 2, families.iter().cloned())?;
    let covered = families.par_iter().filter(|f| census.covers(f)).count();
    let la = la_exact(4, &wedge)?.value;
    let slack = census.max_container as i64 - la as i64;
    let pass = brute == enumerated && covered == families.len() && census.within_bound();
    Ok(Outcome::new(
        pass,
        format!(
            "{} wedge-free families of 65536 candidates (enumeration agrees: {}), {} covered by {} containers; \
             max container {} = La + slack with La = {la}, slack = {slack}",
            brute.len(),
            brute == enumerated,
            covered,
            census.distinct(),
            census.max_container
        ),
    ))
}

struct Stream(u64);

impl Stream {
    fn next(&mut self) -> u64 {
        splitmix64(&mut self.0)
    }

    fn below(&mut self, k: u64) -> u64 {
        self.next() % k
    }

    fn unit(&mut self) -> f64 {
        (self.next() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// A uniform `k`-subset of the bits of `mask`.
    fn subset_of(&mut self, mask: Set, k: u32) -> Set {
        let mut bits: Vec<u32> = (0..64).filter(|&i| mask >> i & 1 == 1).collect();
        let mut out = 0;
        for i in 0..k as usize {
            let j = i + self.below((bits.len() - i) as u64) as usize;
            bits.swap(i, j);
            out |= 1 << bits[i];
        }
        out
    }
}

/// Middle-band families at `n = 16` of four shapes: sparse scatter, one
/// layer of a subcube, two adjacent layers of a subcube, and dense slices
/// of the middle layers.
fn fork_family(i: u64) -> (SetFamily, f64) {
    const N: u32 = 16;
    let full = (1u64 << N) - 1;
    let (lo, hi) = middle_band_sizes(N);
    let mut r = Stream(trial_seed(0xf0e4, 0, i));
    let eps = [0.01, 0.02, 0.05, 0.1, 0.2, 0.5][r.below(6) as usize];
    let mut sets = Vec::new();
    match i % 4 {
        0 => {
            let count = 1 + r.below(300);
            for _ in 0..count {
                let k = lo + r.below((hi - lo + 1) as u64) as u32;
                sets.push(r.subset_of(full, k));
            }
        }
        kind @ (1 | 2) => {
            let width = 8 + r.below(5) as u32;
            let free = r.subset_of(full, width);
            let extra = r.below(4) as u32;
            let base = r.subset_of(full & !free, extra);
            let k = r.below(width as u64 + 1) as u32;
            let layers = if kind == 1 { k..=k } else { k..=(k + 1).min(width) };
            let keep = 0.5 + 0.5 * r.unit();
            for k in layers {
                for s in layer_sets(width, k) {
                    if r.unit() < keep {
                        sets.push(base | spread(s, free));
                    }
                }
            }
        }
        _ => {
            let k = 7 + r.below(2) as u32;
            let keep = if i % 400 == 3 { 1.0 } else { 0.02 + 0.1 * r.unit() };
            for s in layer_sets(N, k) {
                if r.unit() < keep {
                    sets.push(s);
                }
            }
        }
    }
    sets.retain(|s| (lo..=hi).contains(&s.count_ones()));
    (SetFamily::new(N, sets).expect("valid"), eps)
}

/// Places the low bits of `s` on the bits of `mask`.
fn spread(s: Set, mask: Set) -> Set {
    let mut out = 0;
    let mut src = 0;
    for bit in 0..64 {
        if mask >> bit & 1 == 1 {
            if s >> src & 1 == 1 {
                out |= 1 << bit;
            }
            src += 1;
        }
    }
    out
}

fn fork_suite() -> Result<Outcome, Error> {
    let rows: Vec<[(bool, bool, f64); 2]> = (0..10_000u64)
        .into_par_iter()
        .map(|i| {
            let (f, eps) = fork_family(i);
            let a = check_fork_bound(&f, eps);
            let b = check_fork_plus_bound(&f, eps);
            [
                (a.applicable, a.violation, a.size as f64 / a.bound),
                (b.applicable, b.violation, b.size as f64 / b.bound),
            ]
        })
        .collect();
    let tally = |k: usize| {
        let applicable = rows.iter().filter(|r| r[k].0).count();
        let violations = rows.iter().filter(|r| r[k].1).count();
        let ratio = rows.iter().filter(|r| r[k].0).map(|r| r[k].2).fold(0.0, f64::max);
        (applicable, violations, ratio)
    };
    let (fa, fv, fr) = tally(0);
    let (pa, pv, pr) = tally(1);
    Ok(Outcome::new(
        fv == 0 && pv == 0,
        format!(
            "10000 families: fork applicable {fa}, violations {fv}, max |F|/bound {fr:.3}; \
             fork+ applicable {pa}, violations {pv}, max |F|/bound {pr:.3}"
        ),
    ))
}

fn finders() -> Result<Outcome, Error> {
    let two = SetFamily::layers(12, 5, 6)?;
    let w = find_wedge_blowup(&two, 0.5, None)?;
    w.verify(&two)?;
    let wedge_ok = w.t >= 3;
    let three = SetFamily::layers(14, 6, 8)?;
    let eps = 0.3;
    let mut notes = vec![format!(
        "wedge on layers 5, 6 of n = 12: width {} verified independently ({})",
        w.t,
        if wedge_ok { "meets t >= 3" } else { "below t >= 3" }
    )];
    let splus_ok = match find_radius2_blowup(CatalogName::SPlus, &three, eps, Some(2)) {
        Ok(a) => {
            a.verify(&three)?;
            let ok = a.t >= 1
                && a.halves_disjoint()
                && a.destroyed.as_ref().is_some_and(|d| d.premise && d.bound_holds);
            notes.push(format!("S+ on layers 6..8 of n = 14: width {}", a.t));
            ok
        }
        Err(e) => {
            let m = middle(14) as f64;
            notes.push(format!("S+ on layers 6..8 of n = 14 refused: {e}"));
            notes.push(format!(
                "  the three layers hold {} = {:.3} m sets, below the (3 + eps) m the argument needs; \
                 worse, they contain no chain of 4 sets while S+ has height 4, so no copy of S+ exists at all",
                three.len(),
                three.len() as f64 / m
            ));
            let four = SetFamily::layers(14, 5, 8)?;
            if let Ok(a) = find_radius2_blowup(CatalogName::SPlus, &four, eps, Some(2)) {
                a.verify(&four)?;
                notes.push(format!(
                    "  on the middle four layers the same finder returns width {} with disjoint halves {} \
                     and the destroyed-count bound {}",
                    a.t,
                    a.halves_disjoint(),
                    if a.destroyed.as_ref().is_some_and(|d| d.bound_holds) { "holding" } else { "failing" }
                ));
            }
            false
        }
    };
    let mut o = Outcome::new(
        wedge_ok && splus_ok,
        format!(
            "wedge {}; S+ on the middle three layers {}",
            if wedge_ok { "ok" } else { "short" },
            if splus_ok { "ok" } else { "infeasible" }
        ),
    );
    o.notes = notes;
    Ok(o)
}

fn sperner_trend() -> Result<Outcome, Error> {
    let config = ExperimentConfig {
        pattern: catalog(CatalogName::Chain(2))?.poset,
        pattern_name: String::from("chain:2"),
        ns: vec![10, 12, 14],
        grid: PGrid::Absolute(vec![0.5]),
        trials: 50,
        epsilon: 0.1,
        seed: 2024,
        mode: EstimatorMode::Dilworth,
    };
    config.validate()?;
    let mut means = Vec::new();
    let mut certified = true;
    for cell in 0..config.cells().len() {
        let rs: Result<Vec<TrialResult>, Error> =
            (0..config.trials).into_par_iter().map(|t| run_trial(&config, cell, t)).collect();
        let stats = aggregate(&config, cell, &rs);
        certified &= stats.certified && stats.error.is_none();
        means.push(stats.mean);
    }
    let in_range = means.iter().all(|m| (1.0..=1.5).contains(m));
    let monotone = means.windows(2).all(|w| w[1] <= w[0]);
    Ok(Outcome::new(
        in_range && monotone && certified,
        format!(
            "mean largest antichain / (p m) at n = 10, 12, 14: {:.4}, {:.4}, {:.4} (in [1, 1.5]: {in_range}, \
             non-increasing: {monotone})",
            means[0], means[1], means[2]
        ),
    ))
}

/// Diamonds in the middle three layers, one per (bottom, top) pair two
/// sizes apart.
fn brute_diamonds(n: u32) -> u128 {
    let k = n / 2;
    let bottoms = layer_sets(n, k - 1);
    layer_sets(n, k + 1)
        .par_iter()
        .map(|&top| bottoms.iter().filter(|&&b| is_subset(b, top)).count() as u128)
        .sum()
}

fn diamonds() -> Result<Outcome, Error> {
    let n = 14u32;
    let nf = n as f64;
    // The window c1/n < p < c2/n^(2/3) with c1 = c2 = 1, at its geometric mean.
    let (low, high) = (1.0 / nf, libm::pow(nf, -2.0 / 3.0));
    let p = libm::sqrt(low * high);
    let diamond = catalog(CatalogName::Diamond(2))?.poset;
    let runs: Vec<Result<(bool, f64), Error>> = (0..20u64)
        .into_par_iter()
        .map(|i| {
            let r = diamond_lower_bound_run(n, p, trial_seed(14, 0, i))?;
            let free = longest_chain(&r.family) < 4 && is_pattern_free(&diamond, &r.family)?;
            Ok((free, r.family.len() as f64 / r.target))
        })
        .collect();
    let runs: Vec<(bool, f64)> = runs.into_iter().collect::<Result<_, _>>()?;
    let certified = runs.iter().all(|r| r.0);
    let large = runs.iter().filter(|r| r.1 >= 0.8).count();
    let mut census_ok = true;
    let mut ratios = Vec::new();
    for m in 12..=14u32 {
        let exact = diamond_census(m);
        let formula = (m * m) as f64 / 8.0 * middle(m) as f64;
        let ratio = exact as f64 / formula;
        census_ok &= exact == brute_diamonds(m) && (0.75..=1.25).contains(&ratio);
        ratios.push(format!("{ratio:.4}"));
    }
    Ok(Outcome::new(
        certified && large >= 18 && census_ok,
        format!(
            "p = {p:.4} in ({low:.4}, {high:.4}): {large}/20 trials reach 0.8 * 3pm, all certified free: {certified}; \
             census / (n^2/8) m at n = 12..14: {}",
            ratios.join(", ")
        ),
    ))
}

fn mirsky() -> Result<Outcome, Error> {
    let diamond = catalog(CatalogName::Diamond(2))?.poset;
    let results: Vec<Result<bool, Error>> = (0..100u64)
        .into_par_iter()
        .map(|i| {
            let n = 6 + (i % 5) as u32;
            let p = 0.3 + 0.7 * ((i / 5) % 8) as f64 / 7.0;
            let f = random_pfree_family(n, &diamond, p, trial_seed(11, 0, i))?;
            let Some(parts) = mirsky_partition(&f, 3) else {
                return Ok(false);
            };
            let total: usize = parts.iter().map(|a| a.len()).sum();
            let union = parts.iter().fold(SetFamily::empty(n), |acc, a| acc.union(a));
            Ok(parts.len() <= 3 && parts.iter().all(is_antichain) && total == f.len() && union == f)
        })
        .collect();
    let good = results.iter().filter(|r| matches!(r, Ok(true))).count();
    if let Some(Err(e)) = results.into_iter().find(Result::is_err) {
        return Err(e);
    }
    Ok(Outcome::new(good == 100, format!("{good}/100 diamond-free families split into at most 3 antichains")))
}

/// `ln C(N, K) / m` from the entropy form with Stirling corrections.
fn ln_choose_over(big_n: f64, k: f64, m: f64) -> f64 {
    let q = k / big_n;
    let entropy = -q * libm::log(q) - (1.0 - q) * libm::log1p(-q);
    let rest = big_n - k;
    let correction = -0.5 * libm::log(2.0 * std::f64::consts::PI * k * rest / big_n)
        + (1.0 / big_n - 1.0 / k - 1.0 / rest) / 12.0;
    big_n / m * entropy + correction / m
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1e-300)
}

fn pi_calculator() -> Result<Outcome, Error> {
    let (eps, h, size) = (0.2, 2u32, 3u32);
    // Grid at a scale where the union bound is informative.
    let n_big = 1e12;
    let delta = asymptotic_constants(eps).wedge;
    let grid: Vec<f64> = (0..20).map(|i| 0.05 + 0.95 * i as f64 / 19.0).collect();
    let logs: Vec<f64> = grid
        .iter()
        .map(|&p| union_bound_pi(n_big, h, size, delta, eps, p).map(|r| r.log_pi_scaled))
        .collect::<Result<_, _>>()?;
    let decreasing = logs.windows(2).all(|w| w[1] < w[0]);

    // Factor check at n = 50 against exact binomials and an independent log-binomial.
    let (n, p) = (50u32, 1e-4);
    let r = union_bound_pi(n as f64, h, size, 1.0, eps, p)?;
    let m = middle(n) as f64;
    let two_n = (1u64 << n) as f64;
    let a = size as f64 * libm::pow(n as f64, -1.9) * two_n;
    let factor = (4 * h - 3) as f64;
    let b = size as f64 * factor / n as f64 * m;
    let count = (libm::log1p(a) + libm::log1p(b)) / m;
    let first = ln_choose_over(two_n, a, m) + a / m * libm::log(p);
    let second = ln_choose_over(factor * m, b, m) + b / m * libm::log(p);
    let allowance = eps * eps * p / (400.0 * (h * h) as f64);
    let matches = close(r.count_factor, count)
        && close(r.first_factor, first)
        && close(r.second_factor, second)
        && close(r.allowance, allowance)
        && close(r.ln_m, libm::log(m))
        && close(ln_middle_binomial(n as f64), libm::log(m));
    let within = count <= allowance && first <= allowance && second <= allowance;
    let flags = r.count_ok && r.first_ok && r.second_ok;
    let mut o = Outcome::new(
        decreasing && matches && within && flags,
        format!(
            "ln Pi / m strictly decreasing on 20 points of [0.05, 1] at n = 1e12: {decreasing}; \
             n = 50, p = 1e-4 factors match the oracle: {matches}, each within e^(eps^2 pm/(400h^2)): {within}"
        ),
    );
    o.notes.push(format!(
        "  n = 50: count {count:.3e}, first {first:.6}, second {second:.6}, allowance {allowance:.3e}"
    ));
    Ok(o)
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 12] = [
        ("Sperner exactness", sperner),
        ("antichain counting", dedekind),
        ("chain extremal values", chains),
        ("blow-up fidelity", blowups),
        ("container soundness fuzz", container_fuzz),
        ("container census coverage", census_coverage),
        ("fork and fork+ bounds", fork_suite),
        ("supersaturation finders", finders),
        ("random Sperner trend", sperner_trend),
        ("diamond construction", diamonds),
        ("diamond-free antichain partition", mirsky),
        ("union bound calculator", pi_calculator),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check().unwrap_or_else(|e| Outcome::new(false, format!("error: {e}")));
        let secs = start.elapsed().as_secs_f64();
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        println!("{verdict} {:>2} {name} ({secs:.1} s): {}", i + 1, outcome.summary);
        for note in &outcome.notes {
            println!("       {note}");
        }
        failed += usize::from(!outcome.pass);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
