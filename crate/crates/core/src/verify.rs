//! The acceptance checklist: thirteen machine-checkable criteria covering
//! the stripe geometry, the counting engine, the dyadic series and the
//! height-profile machinery. The CLI `verify` subcommand and the
//! `acceptance` integration test both run exactly these checks.
//!
//! Check 6 contains a growth claim about consecutive ratios of `g` that
//! the exact values refute (the ratios oscillate above 2 at n = 3 and
//! n = 5 before settling below 2 from n = 6). The check states the claim
//! as given and reports the measured violations, so it fails by design;
//! the other twelve are green.

use num::integer::Roots;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use crate::census::{
    count_sum_free, count_sum_free_naive, max_sum_free, sample_sum_free, BigCount, SearchBudget,
};
use crate::error::Result;
use crate::fibers::{
    ground_134, lambda_rl, s_brute, s_formula, triple_set, verify_partition,
};
use crate::geometry::{self, big_stripe, lattice_points, rat, Bounds, LatticePoint};
use crate::gseries::{
    fraks, fraks_sequence, g_exact, g_k, g_k_range, g_oracle, g_tilde, path_reflection_graph,
    path_reflection_tilde, DyadicRational,
};
use crate::profiles::{
    discrepancy, extract_profile, profile_second_difference_sum, verify_delta2_identities,
};
use crate::schur::{
    fiber_embedding, is_sum_free, schur_hypergraph_stats, verify_schur_embedding, PointSet,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Provenance {
    Paper,
    Trivial,
    Derived,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub runtime_ms: u64,
    pub provenance: Provenance,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Optional cap that shrinks the slow check ranges for smoke runs;
    /// `None` runs the full suite.
    pub n_max: Option<u32>,
    pub budget: SearchBudget,
    /// Discrepancy samples per size in check 12.
    pub samples: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { n_max: None, budget: SearchBudget::default(), samples: 8 }
    }
}

impl VerifyConfig {
    fn cap(&self, n: u32) -> u32 {
        self.n_max.map_or(n, |m| m.min(n))
    }
}

/// Outcome of one check body: expected description, actual description,
/// and whether they agree.
struct Outcome {
    ok: bool,
    expected: String,
    actual: String,
}

fn ok(expected: impl Into<String>, actual: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { ok: true, expected: expected.into(), actual: actual.into() })
}

fn fail(expected: impl Into<String>, actual: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { ok: false, expected: expected.into(), actual: actual.into() })
}

pub const CHECK_IDS: [&str; 13] = [
    "c01-stripe-lattice-count",
    "c02-stripe-sum-free",
    "c03-fraks-values",
    "c04-fraks-recursion-vs-brute",
    "c05-fraks-induction-bounds",
    "c06-g-series",
    "c07-s-counts",
    "c08-count-oracle-equivalence",
    "c09-extremal-values",
    "c10-embeddings-and-partition",
    "c11-hypergraph-stats",
    "c12-delta2-identities",
    "c13-global-scaling-table",
];

fn provenance_of(id: &str) -> Provenance {
    match id {
        "c01-stripe-lattice-count"
        | "c02-stripe-sum-free"
        | "c03-fraks-values"
        | "c05-fraks-induction-bounds"
        | "c09-extremal-values" => Provenance::Paper,
        _ => Provenance::Derived,
    }
}

/// Runs a single check by id.
pub fn run_check(id: &str, cfg: &VerifyConfig) -> VerificationReport {
    let start = Instant::now();
    let body = || -> Result<Outcome> {
        match id {
            "c01-stripe-lattice-count" => c01(cfg),
            "c02-stripe-sum-free" => c02(cfg),
            "c03-fraks-values" => c03(cfg),
            "c04-fraks-recursion-vs-brute" => c04(cfg),
            "c05-fraks-induction-bounds" => c05(cfg),
            "c06-g-series" => c06(cfg),
            "c07-s-counts" => c07(cfg),
            "c08-count-oracle-equivalence" => c08(cfg),
            "c09-extremal-values" => c09(cfg),
            "c10-embeddings-and-partition" => c10(cfg),
            "c11-hypergraph-stats" => c11(cfg),
            "c12-delta2-identities" => c12(cfg),
            "c13-global-scaling-table" => c13(cfg),
            other => return fail("known check id", format!("unknown check id {other:?}")),
        }
    };
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let (status, expected, actual) = match outcome {
        Ok(Ok(o)) => (if o.ok { Status::Pass } else { Status::Fail }, o.expected, o.actual),
        Ok(Err(e)) => (Status::Fail, "check to run to completion".into(), format!("error: {e}")),
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            (Status::Fail, "check to run to completion".into(), format!("panic: {msg}"))
        }
    };
    VerificationReport {
        check_id: id.to_string(),
        status,
        expected,
        actual,
        runtime_ms: start.elapsed().as_millis() as u64,
        provenance: provenance_of(id),
    }
}

/// Runs the whole checklist in order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<VerificationReport> {
    CHECK_IDS.iter().map(|id| run_check(id, cfg)).collect()
}

pub fn all_pass(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.status != Status::Fail)
}

// --- the individual criteria ---------------------------------------------

/// Stripe lattice count `0.6 n^2 + 0.6 n - 2` inside `[1,n]^2` for n
/// divisible by 5.
fn c01(cfg: &VerifyConfig) -> Result<Outcome> {
    let ns: Vec<u32> = [5u32, 10, 15, 20, 25, 50]
        .into_iter()
        .filter(|&n| n <= cfg.cap(50))
        .collect();
    let mut actuals = Vec::new();
    for &n in &ns {
        let count = lattice_points(&big_stripe(n), Bounds::square(1, n as i64))?.len() as i64;
        let expected = (6 * (n as i64) * (n as i64) + 6 * n as i64) / 10 - 2;
        actuals.push(format!("n={n}: {count}"));
        if count != expected {
            return fail(
                format!("n={n}: 0.6n^2+0.6n-2 = {expected}"),
                format!("n={n}: {count}"),
            );
        }
    }
    ok(
        format!("counts 0.6n^2+0.6n-2 at n in {ns:?}"),
        actuals.join(", "),
    )
}

/// The stripe's lattice points form a sum-free set for every n up to 60.
fn c02(cfg: &VerifyConfig) -> Result<Outcome> {
    let hi = cfg.cap(60);
    for n in 1..=hi {
        let pts = lattice_points(&big_stripe(n), Bounds::square(1, n as i64))?;
        if !is_sum_free(&pts) {
            return fail(format!("sum-free stripe at n={n}"), "a solution a+b=c exists".into());
        }
    }
    ok(format!("stripe sum-free for all n <= {hi}"), format!("verified for n = 1..={hi}"))
}

/// Seed values and reported decimals of the path-graph sums.
fn c03(_cfg: &VerifyConfig) -> Result<Outcome> {
    let seq = fraks_sequence(9);
    let checks: [(&str, &DyadicRational, &str); 3] = [
        ("S(G_8)", &seq[8].0, "250.5"),
        ("S(G_9)", &seq[9].0, "487.8"),
        ("S(G~_9)", seq[9].1.as_ref().unwrap(), "337.0"),
    ];
    if seq[0].0 != DyadicRational::one()
        || seq[1].0 != DyadicRational::new(5, 1)
        || seq[1].1 != Some(DyadicRational::new(3, 1))
    {
        return fail("S(G_0)=1, S(G_1)=5/2, S(G~_1)=3/2", format!("{} {}", seq[0].0, seq[1].0));
    }
    let mut shown = vec!["S(G_0)=1".into(), "S(G_1)=2.5".into(), "S(G~_1)=1.5".into()];
    for (name, value, prefix) in checks {
        let dec = value.to_decimal_string();
        if !dec.starts_with(prefix) {
            return fail(format!("{name} begins {prefix}"), format!("{name} = {dec}"));
        }
        shown.push(format!("{name}={dec}"));
    }
    ok("seed values exact; decimals begin 250.5 / 487.8 / 337.0", shown.join(", "))
}

/// Recursion versus direct enumeration of the path-graph sums, n <= 7.
fn c04(cfg: &VerifyConfig) -> Result<Outcome> {
    let seq = fraks_sequence(7);
    let hi = cfg.cap(7);
    for n in 0..=hi {
        let brute = fraks(&path_reflection_graph(n), &cfg.budget)?;
        if brute != seq[n as usize].0 {
            return fail(
                format!("S(G_{n}) recursion = enumeration"),
                format!("{} vs {brute}", seq[n as usize].0),
            );
        }
        if n >= 1 {
            let brute_t = fraks(&path_reflection_tilde(n)?, &cfg.budget)?;
            if Some(&brute_t) != seq[n as usize].1.as_ref() {
                return fail(
                    format!("S(G~_{n}) recursion = enumeration"),
                    format!("{:?} vs {brute_t}", seq[n as usize].1),
                );
            }
        }
    }
    ok(
        format!("exact dyadic equality for n <= {hi}"),
        format!("all {} path sums agree", 2 * hi + 1),
    )
}

/// `S(G_n) < 2^n` for 8..64 and `S(G~_n) < (2/3) 2^n` for 9..64.
fn c05(_cfg: &VerifyConfig) -> Result<Outcome> {
    let seq = fraks_sequence(64);
    for n in 8..=64u32 {
        if seq[n as usize].0 >= DyadicRational::pow2(n) {
            return fail(format!("S(G_{n}) < 2^{n}"), seq[n as usize].0.to_string());
        }
    }
    for n in 9..=64u32 {
        let t = seq[n as usize].1.as_ref().unwrap();
        if t.mul_int(3) >= DyadicRational::pow2(n + 1) {
            return fail(format!("S(G~_{n}) < (2/3) 2^{n}"), t.to_string());
        }
    }
    let margin = DyadicRational::pow2(64).sub(&seq[64].0);
    ok(
        "both induction bounds strict up to n = 64",
        format!("hold; final margin 2^64 - S(G_64) = {}", margin.to_decimal_string()),
    )
}

/// The g series: oracle agreement, pinned small values, union-in-sum-set
/// assertion, and the stated (false) consecutive-ratio bound.
fn c06(cfg: &VerifyConfig) -> Result<Outcome> {
    let oracle_hi = cfg.cap(10);
    for n in 1..=oracle_hi {
        let fast = g_exact(n as i64)?;
        let slow = g_oracle(n, None, false);
        if fast != slow {
            return fail(format!("g({n}) = oracle value"), format!("{fast} vs {slow}"));
        }
    }
    if g_exact(1)? != DyadicRational::one() || g_exact(2)? != DyadicRational::new(17, 3) {
        return fail("g(1) = 1 and g(2) = 17/8", "pinned values differ".into());
    }
    // The union containment is asserted on every enumerated pair inside the
    // enumeration itself; a violation would have panicked above.
    let table_hi = cfg.cap(14);
    let g: Vec<DyadicRational> = (0..=table_hi).map(|n| g_exact(n as i64)).collect::<Result<_>>()?;
    let mut violations = Vec::new();
    for n in 2..table_hi as usize {
        if g[n + 1] >= g[n].mul_int(2) {
            // Render the offending ratio with a few exact decimals.
            let num = &g[n + 1];
            let den = &g[n];
            violations.push(format!(
                "g({})/g({n}) = {}/{} >= 2",
                n + 1,
                num.to_decimal_string(),
                den.to_decimal_string()
            ));
        }
    }
    if violations.is_empty() {
        ok(
            format!("oracle match to n={oracle_hi}; g(1)=1, g(2)=17/8; ratios < 2 for 2 <= n < {table_hi}"),
            "all sub-checks hold".to_string(),
        )
    } else {
        // The ratio claim is refuted by the exact values; everything else
        // above already passed. Reported as stated, with the measured
        // counterexamples.
        fail(
            format!("g(n+1)/g(n) < 2 for 2 <= n < {table_hi}"),
            format!(
                "oracle match to n={oracle_hi} and pinned values hold, but the ratio bound is false: {}; \
                 ratios stay below 2 only from n = 6 on",
                violations.join("; ")
            ),
        )
    }
}

/// s(n) both routes, pinned small values, and the empirical ratio band.
fn c07(cfg: &VerifyConfig) -> Result<Outcome> {
    let brute_hi = cfg.cap(10);
    for n in 0..=brute_hi {
        let a = s_brute(n, &cfg.budget)?.count;
        let b = s_formula(n)?;
        if a != b {
            return fail(format!("s({n}) identical via both routes"), format!("{a} vs {b}"));
        }
    }
    if s_formula(1)? != BigCount::from_u128(8) || s_formula(2)? != BigCount::from_u128(56) {
        return fail("s(1) = 8 and s(2) = 56", "pinned values differ".into());
    }
    // Empirical band recorded from the exact table: s(n) / (n^2 4^n) stays
    // within [7/16, 9/16] for 4 <= n <= 14 (observed range 0.4682..0.5436).
    let band_hi = cfg.cap(14);
    let mut ratios = Vec::new();
    for n in 4..=band_hi {
        let s = s_formula(n)?;
        let scale = num::BigUint::from(n) * n * (num::BigUint::from(1u32) << (2 * n));
        let lhs = &s.0 << 4;
        if lhs < &scale * 7u32 || lhs > &scale * 9u32 {
            return fail(
                format!("16 s({n}) within [7, 9] * n^2 4^n"),
                format!("s({n}) = {s} outside the recorded band"),
            );
        }
        let ratio = s.0.to_string().parse::<f64>().unwrap_or(f64::NAN)
            / ((n as f64).powi(2) * 4f64.powi(n as i32));
        ratios.push(format!("{ratio:.4}"));
    }
    ok(
        format!("both routes agree to n={brute_hi}; band [7/16, 9/16] over 4..={band_hi}"),
        format!("ratios {}", ratios.join(", ")),
    )
}

/// Engine versus all-subsets oracle on random sets and intervals, plus the
/// lower bound through the maximum.
fn c08(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let sets = if cfg.n_max.is_some() { 60 } else { 500 };
    for trial in 0..sets {
        let d = 1 + (trial % 2);
        let size = rng.gen_range(0..=18);
        let mut pts = Vec::new();
        for _ in 0..size {
            let p = match d {
                1 => LatticePoint::new(vec![rng.gen_range(-10..=30)]),
                _ => LatticePoint::xy(rng.gen_range(-4..=10), rng.gen_range(-4..=10)),
            };
            pts.push(p);
        }
        let s = PointSet::from_points(d as usize, pts);
        let fast = count_sum_free(&s, &cfg.budget)?.count;
        let naive = count_sum_free_naive(&s)?;
        if fast != naive {
            return fail(
                format!("trial {trial}: engine = oracle"),
                format!("{fast} vs {naive} on {} points", s.len()),
            );
        }
        let max = max_sum_free(&s, &cfg.budget)?;
        if fast < BigCount::pow2(max.size) {
            return fail(
                format!("trial {trial}: count >= 2^max"),
                format!("{fast} < 2^{}", max.size),
            );
        }
    }
    let hi = cfg.cap(20);
    for n in 1..=hi {
        let s = PointSet::interval(n);
        let fast = count_sum_free(&s, &cfg.budget)?.count;
        let naive = count_sum_free_naive(&s)?;
        if fast != naive {
            return fail(format!("interval n={n}: engine = oracle"), format!("{fast} vs {naive}"));
        }
    }
    ok(
        format!("{sets} random sets (|S| <= 18, d in 1..2) and intervals to {hi}"),
        "engine, oracle and 2^max bound all consistent".into(),
    )
}

/// Extremal sizes: intervals exactly ceil(n/2); squares at least the
/// stripe count, with the equality status reported.
fn c09(cfg: &VerifyConfig) -> Result<Outcome> {
    let hi = cfg.cap(20);
    for n in 1..=hi {
        let m = max_sum_free(&PointSet::interval(n), &cfg.budget)?;
        if m.size as i64 != (n as i64 + 1) / 2 {
            return fail(format!("M([{n}]) = ceil(n/2)"), format!("{}", m.size));
        }
    }
    let grid_hi = cfg.cap(6);
    let mut statuses = Vec::new();
    for n in 1..=grid_hi {
        let m = max_sum_free(&PointSet::grid(n, 2), &cfg.budget)?;
        let stripe = lattice_points(&big_stripe(n), Bounds::square(1, n as i64))?.len() as u32;
        if m.size < stripe {
            return fail(
                format!("M([{n}]^2) >= stripe count {stripe}"),
                format!("{}", m.size),
            );
        }
        statuses.push(format!(
            "n={n}: M={} vs stripe {} ({})",
            m.size,
            stripe,
            if m.size == stripe { "equal" } else { "strictly larger" }
        ));
    }
    ok(
        format!("intervals to {hi} exact; squares to {grid_hi} dominate the stripe"),
        statuses.join("; "),
    )
}

/// Fiber embeddings verify over the whole triple family, and the fiber
/// partition covers all but O(n) points with no overlaps.
fn c10(cfg: &VerifyConfig) -> Result<Outcome> {
    for n in [10u32, 20, 40] {
        if n > cfg.cap(40) {
            continue;
        }
        for &(i, j, k) in &triple_set(n)?.triples {
            let e = fiber_embedding(i, j, k, n)?;
            if !verify_schur_embedding(&e) {
                return fail(
                    format!("embedding of ({i},{j},{k}) at n={n} verifies"),
                    "relation not preserved".into(),
                );
            }
        }
    }
    let hi = cfg.cap(200);
    let mut worst = (0u32, 0u64);
    for n in 3..=hi {
        let rep = verify_partition(n)?;
        if rep.overlaps != 0 {
            return fail(format!("0 overlaps at n={n}"), format!("{}", rep.overlaps));
        }
        if rep.uncovered > 5 * n as u64 {
            return fail(
                format!("uncovered <= 5n at n={n}"),
                format!("{} > {}", rep.uncovered, 5 * n),
            );
        }
        if rep.uncovered * (worst.0 as u64).max(1) > (worst.1) * n as u64 {
            worst = (n, rep.uncovered);
        }
    }
    ok(
        format!("embeddings verified at n in {{10,20,40}}; partition clean for n <= {hi}"),
        format!("worst uncovered/n ratio at n={}: {} points", worst.0, worst.1),
    )
}

/// Codegree bounds on the Schur hypergraph and the scaled container
/// functional staying bounded.
fn c11(cfg: &VerifyConfig) -> Result<Outcome> {
    for d in 1..=2u32 {
        let hi = cfg.cap(30);
        for n in 2..=hi {
            let st = schur_hypergraph_stats(n, d)?;
            if st.delta2 > 3 || st.delta3 > 1 {
                return fail(
                    format!("delta2 <= 3, delta3 <= 1 at n={n}, d={d}"),
                    format!("delta2={}, delta3={}", st.delta2, st.delta3),
                );
            }
        }
    }
    // Rational over-approximation of Delta(H, n^{-1/4}) * sqrt(n): use
    // tau_hat <= n^{-1/4} and sqrt_hat >= sqrt(n), so the product bounds
    // the true value from above. Recorded bound: 12 (observed max 10.84
    // at n = 10, decreasing in n).
    let hi = cfg.cap(200);
    let mut worst = rat(0, 1);
    for n in 10..=hi {
        let st = schur_hypergraph_stats(n, 1)?;
        let quarter = (((n as u128) << 80).nth_root(4) + 1) as i128;
        let tau = rat(1 << 20, quarter);
        let sqrt_hi = (((n as u128) << 40).sqrt() + 1) as i128;
        let value = st
            .delta_of_tau(tau)
            .expect("hypergraph has edges for n >= 10")
            * rat(sqrt_hi, 1 << 20);
        if value > worst {
            worst = value;
        }
        if value > rat(12, 1) {
            return fail(
                format!("Delta(H, n^-1/4) sqrt(n) <= 12 at n={n}"),
                format!("{}/{}", value.numer(), value.denom()),
            );
        }
    }
    ok(
        format!("codegrees bounded for n <= {}, scaled functional <= 12 for n <= {hi}", cfg.cap(30)),
        format!("largest scaled value ~{}/{}", worst.numer(), worst.denom()),
    )
}

/// The second-difference identities on random total maps, and the spec
/// sum bound on sampled sum-free subsets.
fn c12(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd15c);
    for n in [10u32, 20, 40] {
        if n > cfg.cap(40) {
            continue;
        }
        let w = geometry::w(n);
        for _ in 0..1000 {
            let m: Vec<i64> = (0..4 * w + 1).map(|_| rng.gen_range(-100..=100)).collect();
            let mm: Vec<i64> = (0..2 * w + 1).map(|_| rng.gen_range(-100..=100)).collect();
            if !verify_delta2_identities(&m, &mm, n)? {
                return fail(format!("identities hold at n={n}"), "mismatch on random maps".into());
            }
        }
    }
    let mut checked = 0u32;
    for n in [8u32, 10, 12] {
        if n > cfg.cap(12) {
            continue;
        }
        let points = lambda_rl(n)?;
        for t in 0..cfg.samples {
            let s = sample_sum_free(&points, 9000 + t as u64, &cfg.budget)?;
            let profile = extract_profile(&s, n)?;
            let lhs = profile_second_difference_sum(&profile);
            let d = discrepancy(&profile, n)?.d;
            if lhs > 8 * d + 10 * n as u64 {
                return fail(
                    format!("sum |D2m| <= 8D + 10n at n={n}"),
                    format!("{lhs} > 8*{d} + {}", 10 * n),
                );
            }
            checked += 1;
        }
    }
    ok(
        "identities on 1000 random maps per size; sum bound on every sample",
        format!("3000 random maps and {checked} samples clean"),
    )
}

/// Exact counts for the squares with the scaling table reported; no limit
/// is asserted.
fn c13(cfg: &VerifyConfig) -> Result<Outcome> {
    // Frozen exact values; n <= 4 cross-checked against the all-subsets
    // oracle whenever this runs.
    let frozen: [u128; 6] = [2, 12, 292, 10476, 1377728, 233000108];
    let hi = cfg.cap(6);
    let mut rows = Vec::new();
    for n in 1..=hi {
        let s = PointSet::grid(n, 2);
        let count = count_sum_free(&s, &cfg.budget)?.count;
        if n <= 4 && count != count_sum_free_naive(&s)? {
            return fail(format!("sf([{n}]^2) matches the oracle"), count.to_string());
        }
        if count != BigCount::from_u128(frozen[n as usize - 1]) {
            return fail(
                format!("sf([{n}]^2) = {}", frozen[n as usize - 1]),
                count.to_string(),
            );
        }
        let log2 = (count.0.to_string().parse::<f64>().unwrap_or(f64::NAN)).log2();
        rows.push(format!("n={n}: log2(sf)/n^2 = {:.4}", log2 / (n as f64).powi(2)));
    }
    ok(
        format!("exact counts for n <= {hi}; scaling reported, no limit asserted"),
        rows.join("; "),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smoke_run_is_green_except_the_growth_check() {
        let cfg = VerifyConfig {
            n_max: Some(8),
            budget: SearchBudget::new(100_000_000, 120),
            samples: 2,
        };
        let reports = run_all(&cfg);
        assert_eq!(reports.len(), CHECK_IDS.len());
        for r in &reports {
            if r.check_id == "c06-g-series" {
                // The ratio claim is already false within the smoke range.
                assert_eq!(r.status, Status::Fail, "{}", r.actual);
            } else {
                assert_eq!(r.status, Status::Pass, "{}: {}", r.check_id, r.actual);
            }
        }
    }

    #[test]
    fn unknown_check_id_reports_failure() {
        let r = run_check("c99-nope", &VerifyConfig::default());
        assert_eq!(r.status, Status::Fail);
    }
}
