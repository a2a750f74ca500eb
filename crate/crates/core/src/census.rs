//! Exact counting, extremal search and uniform sampling over the sum-free
//! subsets of an arbitrary finite point set.
//!
//! The counter is a propagation-driven backtracking search over subset
//! exclusion constraints: every solution of `a + b = c` inside the ground
//! set yields a set of at most three points that a sum-free subset cannot
//! contain entirely. The search factors out unconstrained points, splits
//! into connected components of the live constraint graph, and branches on
//! the most constrained point with lexicographic tie-breaking, so node
//! counts are reproducible run to run.
//!
//! Budgets are mandatory: exceeding one is an error carrying the node
//! statistics, never a silent approximation.

use num::bigint::BigUint;
use num::One;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::schur::PointSet;

/// Arbitrary-precision nonnegative count; serializes as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BigCount(pub BigUint);

impl BigCount {
    pub fn from_u128(v: u128) -> Self {
        BigCount(BigUint::from(v))
    }

    pub fn zero() -> Self {
        BigCount(BigUint::default())
    }

    pub fn one() -> Self {
        BigCount(BigUint::one())
    }

    /// `2^k`.
    pub fn pow2(k: u32) -> Self {
        BigCount(BigUint::one() << k)
    }

    pub fn bits(&self) -> u64 {
        self.0.bits()
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for BigCount {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        BigUint::parse_bytes(s.as_bytes(), 10)
            .map(BigCount)
            .ok_or_else(|| serde::de::Error::custom(format!("bad count {s:?}")))
    }
}

/// Node and time limits for the exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_seconds: u64,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_seconds: u64) -> Self {
        assert!(max_nodes > 0 && max_seconds > 0, "budgets must be positive");
        SearchBudget { max_nodes, max_seconds }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 400_000_000, max_seconds: 600 }
    }
}

/// Search effort counters reported alongside every result.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub max_depth: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct CountResult {
    pub count: BigCount,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, Serialize)]
pub struct MaxResult {
    pub size: u32,
    pub witness: PointSet,
    pub stats: SearchStats,
}

/// Points handled by one engine instance; counts then fit in `u128`.
pub const ENGINE_POINT_LIMIT: usize = 120;
/// Ground-set cap for the all-subsets oracle.
pub const NAIVE_POINT_LIMIT: usize = 28;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Undecided,
    In,
    Out,
}

/// One forbidden subset: a sum-free set may not contain all its members.
struct Constraint {
    members: Vec<u16>,
}

enum TrailEntry {
    Decided(u16),
    Killed(u32),
    Bumped(u32),
}

struct Engine {
    m: usize,
    constraints: Vec<Constraint>,
    point_constraints: Vec<Vec<u32>>,
    status: Vec<Status>,
    dead: Vec<bool>,
    in_cnt: Vec<u8>,
    live_deg: Vec<u32>,
    trail: Vec<TrailEntry>,
    nodes: u64,
    max_depth: u32,
    deadline: Instant,
    max_nodes: u64,
}

/// Builds the forbidden-subset table: one constraint per distinct member
/// set of a solution `p_i + p_j = p_k`, `i <= j`.
fn build_constraints(s: &PointSet) -> Vec<Constraint> {
    let pts = s.points();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in i..pts.len() {
            if let Some(k) = s.index_of_sum(&pts[i], &pts[j]) {
                let mut members = vec![i as u16, j as u16, k as u16];
                members.sort_unstable();
                members.dedup();
                let key: u128 = members.iter().fold(0u128, |acc, &b| acc | (1u128 << b));
                if seen.insert(key) {
                    out.push(Constraint { members });
                }
            }
        }
    }
    out
}

impl Engine {
    fn new(s: &PointSet, budget: &SearchBudget) -> Result<Engine> {
        let m = s.len();
        if m > ENGINE_POINT_LIMIT {
            return Err(Error::TooLarge {
                what: "point set size",
                got: m as u64,
                limit: ENGINE_POINT_LIMIT as u64,
            });
        }
        let constraints = build_constraints(s);
        let mut point_constraints = vec![Vec::new(); m];
        for (ci, c) in constraints.iter().enumerate() {
            for &p in &c.members {
                point_constraints[p as usize].push(ci as u32);
            }
        }
        let live_deg = point_constraints.iter().map(|v| v.len() as u32).collect();
        let dead = vec![false; constraints.len()];
        let in_cnt = vec![0u8; constraints.len()];
        Ok(Engine {
            m,
            constraints,
            point_constraints,
            status: vec![Status::Undecided; m],
            dead,
            in_cnt,
            live_deg,
            trail: Vec::new(),
            nodes: 0,
            max_depth: 0,
            deadline: Instant::now() + Duration::from_secs(budget.max_seconds),
            max_nodes: budget.max_nodes,
        })
    }

    fn stats(&self) -> SearchStats {
        SearchStats { nodes: self.nodes, max_depth: self.max_depth }
    }

    fn budget_error(&self) -> Error {
        Error::BudgetExceeded { stats: self.stats(), best_so_far: None }
    }

    fn set_out(&mut self, p: u16) {
        debug_assert!(self.status[p as usize] == Status::Undecided);
        self.status[p as usize] = Status::Out;
        self.trail.push(TrailEntry::Decided(p));
        for ci in 0..self.point_constraints[p as usize].len() {
            let c = self.point_constraints[p as usize][ci];
            if !self.dead[c as usize] {
                self.dead[c as usize] = true;
                self.trail.push(TrailEntry::Killed(c));
                for &q in &self.constraints[c as usize].members {
                    self.live_deg[q as usize] -= 1;
                }
            }
        }
    }

    /// Marks `p` as chosen and excludes every point that would now complete
    /// a forbidden subset. Returns false when a constraint is already fully
    /// chosen, i.e. the inclusion is inconsistent.
    fn set_in(&mut self, p: u16) -> bool {
        debug_assert!(self.status[p as usize] == Status::Undecided);
        self.status[p as usize] = Status::In;
        self.trail.push(TrailEntry::Decided(p));
        let mut forced: Vec<u16> = Vec::new();
        for ci in 0..self.point_constraints[p as usize].len() {
            let c = self.point_constraints[p as usize][ci];
            if self.dead[c as usize] {
                continue;
            }
            self.in_cnt[c as usize] += 1;
            self.trail.push(TrailEntry::Bumped(c));
            let size = self.constraints[c as usize].members.len() as u8;
            if self.in_cnt[c as usize] == size {
                return false;
            }
            if self.in_cnt[c as usize] == size - 1 {
                // A live constraint has no Out member, so the single
                // non-chosen member is undecided: it must go out.
                for &q in &self.constraints[c as usize].members {
                    if self.status[q as usize] == Status::Undecided {
                        forced.push(q);
                    }
                }
            }
        }
        for q in forced {
            if self.status[q as usize] == Status::Undecided {
                self.set_out(q);
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                TrailEntry::Decided(p) => self.status[p as usize] = Status::Undecided,
                TrailEntry::Killed(c) => {
                    self.dead[c as usize] = false;
                    for &q in &self.constraints[c as usize].members {
                        self.live_deg[q as usize] += 1;
                    }
                }
                TrailEntry::Bumped(c) => self.in_cnt[c as usize] -= 1,
            }
        }
    }

    /// Excludes up front every point carried by a singleton constraint
    /// (only the zero point produces one).
    fn exclude_singletons(&mut self) {
        for ci in 0..self.constraints.len() {
            if self.constraints[ci].members.len() == 1 && !self.dead[ci] {
                let p = self.constraints[ci].members[0];
                if self.status[p as usize] == Status::Undecided {
                    self.set_out(p);
                }
            }
        }
    }

    /// Number of valid completions of the current partial assignment over
    /// the given scope. Factors out free points and multiplies over the
    /// connected components of the live constraint graph.
    fn count_scope(&mut self, scope: &[u16], depth: u32) -> Result<u128> {
        self.max_depth = self.max_depth.max(depth);
        let mut free = 0u32;
        let mut active: Vec<u16> = Vec::with_capacity(scope.len());
        for &p in scope {
            if self.status[p as usize] != Status::Undecided {
                continue;
            }
            if self.live_deg[p as usize] == 0 {
                free += 1;
            } else {
                active.push(p);
            }
        }
        if active.is_empty() {
            return Ok(1u128 << free);
        }
        let mut result: u128 = 1u128 << free;
        // Component split via BFS over shared live constraints.
        let mut visited = vec![false; active.len()];
        let pos: std::collections::HashMap<u16, usize> =
            active.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        for start in 0..active.len() {
            if visited[start] {
                continue;
            }
            let mut comp = vec![active[start]];
            visited[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let p = comp[head];
                head += 1;
                for &c in &self.point_constraints[p as usize] {
                    if self.dead[c as usize] {
                        continue;
                    }
                    for &q in &self.constraints[c as usize].members {
                        if let Some(&qi) = pos.get(&q) {
                            if !visited[qi] {
                                visited[qi] = true;
                                comp.push(q);
                            }
                        }
                    }
                }
            }
            result *= self.count_component(&comp, depth)?;
        }
        Ok(result)
    }

    /// Branches on the most constrained point of one component.
    fn count_component(&mut self, comp: &[u16], depth: u32) -> Result<u128> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(self.budget_error());
        }
        if self.nodes & 0x3ff == 0 && Instant::now() > self.deadline {
            return Err(self.budget_error());
        }
        let v = *comp
            .iter()
            .max_by_key(|&&p| (self.live_deg[p as usize], std::cmp::Reverse(p)))
            .expect("component is nonempty");

        let mark = self.trail.len();
        self.set_out(v);
        let excluded = self.count_scope(comp, depth + 1)?;
        self.undo_to(mark);

        let mark = self.trail.len();
        let included = if self.set_in(v) {
            self.count_scope(comp, depth + 1)?
        } else {
            0
        };
        self.undo_to(mark);

        Ok(excluded + included)
    }

    fn count_all(&mut self) -> Result<u128> {
        self.exclude_singletons();
        let scope: Vec<u16> = (0..self.m as u16).collect();
        self.count_scope(&scope, 0)
    }
}

/// Exact number of sum-free subsets of `S`, the empty set included.
pub fn count_sum_free(s: &PointSet, budget: &SearchBudget) -> Result<CountResult> {
    let mut eng = Engine::new(s, budget)?;
    let count = eng.count_all()?;
    Ok(CountResult { count: BigCount::from_u128(count), stats: eng.stats() })
}

/// Conditional count used by the sampler: completions with the listed
/// point indices forced in or out.
fn count_assigned(
    s: &PointSet,
    forced_in: &[u16],
    forced_out: &[u16],
    budget: &SearchBudget,
) -> Result<(u128, SearchStats)> {
    let mut eng = Engine::new(s, budget)?;
    eng.exclude_singletons();
    for &p in forced_out {
        if eng.status[p as usize] == Status::In {
            return Ok((0, eng.stats()));
        }
        if eng.status[p as usize] == Status::Undecided {
            eng.set_out(p);
        }
    }
    for &p in forced_in {
        match eng.status[p as usize] {
            Status::Out => return Ok((0, eng.stats())),
            Status::In => {}
            Status::Undecided => {
                if !eng.set_in(p) {
                    return Ok((0, eng.stats()));
                }
            }
        }
    }
    // Forced exclusions may have cascaded onto later forced-in points.
    if forced_in.iter().any(|&p| eng.status[p as usize] != Status::In) {
        return Ok((0, eng.stats()));
    }
    let scope: Vec<u16> = (0..s.len() as u16).collect();
    let count = eng.count_scope(&scope, 0)?;
    Ok((count, eng.stats()))
}

/// All-subsets oracle: walks every one of the `2^|S|` subsets and tests
/// the defining property directly against the solution table.
pub fn count_sum_free_naive(s: &PointSet) -> Result<BigCount> {
    let m = s.len();
    if m > NAIVE_POINT_LIMIT {
        return Err(Error::TooLarge {
            what: "point set size (naive oracle)",
            got: m as u64,
            limit: NAIVE_POINT_LIMIT as u64,
        });
    }
    // Forbidden masks straight from the public solution list, so this path
    // shares nothing with the search engine's constraint propagation.
    let mut masks: Vec<u32> = crate::schur::schur_solutions(s)
        .iter()
        .map(|(a, b, c)| {
            let ia = s.index_of(a).unwrap() as u32;
            let ib = s.index_of(b).unwrap() as u32;
            let ic = s.index_of(c).unwrap() as u32;
            (1u32 << ia) | (1u32 << ib) | (1u32 << ic)
        })
        .collect();
    masks.sort_unstable();
    masks.dedup();
    let mut count: u64 = 0;
    for subset in 0u32..(1u32 << m) {
        if masks.iter().all(|&f| subset & f != f) {
            count += 1;
        }
    }
    Ok(BigCount(BigUint::from(count)))
}

/// Exact maximum sum-free subset via branch and bound. The bound is the
/// chosen-set size plus the number of still-addable points, tightened by
/// greedily matched disjoint conflict pairs; the incumbent is seeded with
/// a descending-coordinate-sum greedy pass.
pub fn max_sum_free(s: &PointSet, budget: &SearchBudget) -> Result<MaxResult> {
    let mut eng = Engine::new(s, budget)?;
    eng.exclude_singletons();
    let baseline_mark = eng.trail.len();

    // Greedy seed: take points by descending coordinate sum where possible.
    let mut order: Vec<u16> = (0..s.len() as u16).collect();
    order.sort_by_key(|&p| (-s.points()[p as usize].coord_sum(), p));
    let mut best: Vec<u16> = Vec::new();
    for &p in &order {
        if eng.status[p as usize] == Status::Undecided {
            let mark = eng.trail.len();
            if eng.set_in(p) {
                best.push(p);
            } else {
                eng.undo_to(mark);
            }
        }
    }
    eng.undo_to(baseline_mark);

    struct Search<'a> {
        eng: &'a mut Engine,
        best: Vec<u16>,
        chosen: Vec<u16>,
    }

    impl Search<'_> {
        /// Upper bound on what the current branch can still reach.
        fn bound(&self) -> u32 {
            let undecided = self
                .eng
                .status
                .iter()
                .filter(|&&st| st == Status::Undecided)
                .count() as u32;
            // Constraints with every member chosen except two undecided
            // ones forbid that pair; disjoint such pairs each cost a point.
            let mut matched = vec![false; self.eng.m];
            let mut pairs = 0u32;
            for (ci, c) in self.eng.constraints.iter().enumerate() {
                if self.eng.dead[ci] {
                    continue;
                }
                let size = c.members.len() as u8;
                if self.eng.in_cnt[ci] + 2 != size {
                    continue;
                }
                let free: Vec<u16> = c
                    .members
                    .iter()
                    .copied()
                    .filter(|&q| self.eng.status[q as usize] == Status::Undecided)
                    .collect();
                if free.len() == 2
                    && !matched[free[0] as usize]
                    && !matched[free[1] as usize]
                {
                    matched[free[0] as usize] = true;
                    matched[free[1] as usize] = true;
                    pairs += 1;
                }
            }
            self.chosen.len() as u32 + undecided - pairs
        }

        fn run(&mut self, depth: u32) -> Result<()> {
            self.eng.nodes += 1;
            self.eng.max_depth = self.eng.max_depth.max(depth);
            if self.eng.nodes > self.eng.max_nodes
                || (self.eng.nodes & 0x3ff == 0 && Instant::now() > self.eng.deadline)
            {
                return Err(Error::BudgetExceeded {
                    stats: self.eng.stats(),
                    best_so_far: Some(self.best.len() as u32),
                });
            }
            if self.chosen.len() > self.best.len() {
                self.best = self.chosen.clone();
            }
            if self.bound() <= self.best.len() as u32 {
                return Ok(());
            }
            let v = match (0..self.eng.m as u16)
                .filter(|&p| self.eng.status[p as usize] == Status::Undecided)
                .max_by_key(|&p| (self.eng.live_deg[p as usize], std::cmp::Reverse(p)))
            {
                Some(v) => v,
                None => return Ok(()),
            };
            let mark = self.eng.trail.len();
            if self.eng.set_in(v) {
                self.chosen.push(v);
                self.run(depth + 1)?;
                self.chosen.pop();
            }
            self.eng.undo_to(mark);

            let mark = self.eng.trail.len();
            self.eng.set_out(v);
            self.run(depth + 1)?;
            self.eng.undo_to(mark);
            Ok(())
        }
    }

    let mut search = Search { eng: &mut eng, best, chosen: Vec::new() };
    search.run(0)?;
    let best = search.best;
    let witness = PointSet::from_points(
        s.dim(),
        best.iter().map(|&p| s.points()[p as usize].clone()).collect(),
    );
    debug_assert!(crate::schur::is_sum_free(&witness));
    Ok(MaxResult { size: best.len() as u32, witness, stats: eng.stats() })
}

/// Exactly uniform sample over the sum-free subsets of `S`.
///
/// Walks the points in canonical order; at each point the number of
/// sum-free completions with the point included is counted exactly and an
/// integer draw with those exact odds decides membership. Deterministic
/// given the seed.
pub fn sample_sum_free(s: &PointSet, seed: u64, budget: &SearchBudget) -> Result<PointSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let deadline = Instant::now() + Duration::from_secs(budget.max_seconds);
    let mut nodes_left = budget.max_nodes;

    fn sub_budget(nodes_left: u64, deadline: Instant) -> SearchBudget {
        SearchBudget {
            max_nodes: nodes_left.max(1),
            max_seconds: deadline
                .saturating_duration_since(Instant::now())
                .as_secs()
                .max(1),
        }
    }
    fn spend(nodes_left: &mut u64, deadline: Instant, stats: SearchStats) -> Result<()> {
        *nodes_left = nodes_left.saturating_sub(stats.nodes);
        if *nodes_left == 0 || Instant::now() > deadline {
            Err(Error::BudgetExceeded { stats, best_so_far: None })
        } else {
            Ok(())
        }
    }

    let mut forced_in: Vec<u16> = Vec::new();
    let mut forced_out: Vec<u16> = Vec::new();

    let (mut remaining, stats) =
        count_assigned(s, &forced_in, &forced_out, &sub_budget(nodes_left, deadline))?;
    spend(&mut nodes_left, deadline, stats)?;

    for p in 0..s.len() as u16 {
        forced_in.push(p);
        let (with_p, stats) =
            count_assigned(s, &forced_in, &forced_out, &sub_budget(nodes_left, deadline))?;
        spend(&mut nodes_left, deadline, stats)?;
        let draw = rng.gen_range(0..remaining);
        if draw < with_p {
            remaining = with_p;
        } else {
            forced_in.pop();
            forced_out.push(p);
            remaining -= with_p;
        }
    }
    debug_assert_eq!(remaining, 1);
    Ok(PointSet::from_points(
        s.dim(),
        forced_in
            .iter()
            .map(|&p| s.points()[p as usize].clone())
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::LatticePoint;
    use proptest::prelude::*;

    fn budget() -> SearchBudget {
        SearchBudget::new(50_000_000, 120)
    }

    fn zset(vals: &[i64]) -> PointSet {
        PointSet::from_points(1, vals.iter().map(|v| LatticePoint::new(vec![*v])).collect())
    }

    #[test]
    fn naive_small_values() {
        assert_eq!(count_sum_free_naive(&PointSet::empty(1)).unwrap(), BigCount::one());
        assert_eq!(count_sum_free_naive(&zset(&[1])).unwrap(), BigCount::from_u128(2));
        assert_eq!(count_sum_free_naive(&PointSet::interval(2)).unwrap(), BigCount::from_u128(3));
        assert_eq!(count_sum_free_naive(&PointSet::interval(3)).unwrap(), BigCount::from_u128(6));
        assert_eq!(count_sum_free_naive(&PointSet::interval(4)).unwrap(), BigCount::from_u128(9));
        assert_eq!(count_sum_free_naive(&PointSet::grid(2, 2)).unwrap(), BigCount::from_u128(12));
    }

    #[test]
    fn search_matches_naive_on_intervals_and_grids() {
        for n in 1..=16u32 {
            let s = PointSet::interval(n);
            assert_eq!(
                count_sum_free(&s, &budget()).unwrap().count,
                count_sum_free_naive(&s).unwrap(),
                "interval n={n}"
            );
        }
        for n in 1..=4u32 {
            let s = PointSet::grid(n, 2);
            assert_eq!(
                count_sum_free(&s, &budget()).unwrap().count,
                count_sum_free_naive(&s).unwrap(),
                "grid n={n}"
            );
        }
    }

    #[test]
    fn zero_point_is_never_free() {
        // 0 + p = p kills every superset of {0, p}; 0 + 0 = 0 kills {0}.
        let s = zset(&[0, 3, 5]);
        let expected = count_sum_free_naive(&s).unwrap();
        assert_eq!(count_sum_free(&s, &budget()).unwrap().count, expected);
        // Only subsets of {3, 5} qualify: all four are sum-free.
        assert_eq!(expected, BigCount::from_u128(4));
    }

    #[test]
    fn count_exceeds_two_to_the_max() {
        for s in [PointSet::interval(9), PointSet::grid(3, 2), zset(&[-2, 1, 3, 4])] {
            let count = count_sum_free(&s, &budget()).unwrap().count;
            let max = max_sum_free(&s, &budget()).unwrap();
            assert!(count >= BigCount::pow2(max.size));
        }
    }

    #[test]
    fn max_examples() {
        let m = max_sum_free(&PointSet::interval(4), &budget()).unwrap();
        assert_eq!(m.size, 2);
        let m = max_sum_free(&PointSet::interval(5), &budget()).unwrap();
        assert_eq!(m.size, 3);
        let m = max_sum_free(&PointSet::grid(1, 2), &budget()).unwrap();
        assert_eq!(m.size, 1);
        for n in 1..=12u32 {
            let m = max_sum_free(&PointSet::interval(n), &budget()).unwrap();
            assert_eq!(m.size as i64, (n as i64 + 1) / 2, "interval n={n}");
            assert!(crate::schur::is_sum_free(&m.witness));
            assert_eq!(m.witness.len() as u32, m.size);
        }
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let tiny = SearchBudget::new(5, 60);
        match count_sum_free(&PointSet::grid(4, 2), &tiny) {
            Err(Error::BudgetExceeded { stats, .. }) => assert!(stats.nodes >= 5),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn count_is_insertion_order_independent() {
        let fwd = zset(&[1, 3, 4, 7, 8]);
        let rev = PointSet::from_points(
            1,
            [8i64, 7, 4, 3, 1].iter().map(|v| LatticePoint::new(vec![*v])).collect(),
        );
        let a = count_sum_free(&fwd, &budget()).unwrap();
        let b = count_sum_free(&rev, &budget()).unwrap();
        assert_eq!(a.count, b.count);
        assert_eq!(a.stats, b.stats);
    }

    #[test]
    fn sampler_degenerate_cases() {
        let empty = sample_sum_free(&PointSet::empty(2), 7, &budget()).unwrap();
        assert!(empty.is_empty());
        let mut ones = 0;
        for seed in 0..1000u64 {
            let s = sample_sum_free(&zset(&[1]), seed, &budget()).unwrap();
            if s.len() == 1 {
                ones += 1;
            }
        }
        // Two equally weighted outcomes.
        assert!((ones as i64 - 500).abs() <= 50, "got {ones} singletons");
    }

    #[test]
    fn sampler_is_deterministic_per_seed() {
        let s = PointSet::interval(8);
        let a = sample_sum_free(&s, 42, &budget()).unwrap();
        let b = sample_sum_free(&s, 42, &budget()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sampler_outputs_are_sum_free() {
        let s = PointSet::grid(3, 2);
        for seed in 0..40u64 {
            let t = sample_sum_free(&s, seed, &budget()).unwrap();
            assert!(crate::schur::is_sum_free(&t));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn search_matches_naive_on_random_sets(
            vals in proptest::collection::btree_set(-6i64..14, 0..11),
        ) {
            let s = zset(&vals.iter().copied().collect::<Vec<_>>());
            let naive = count_sum_free_naive(&s).unwrap();
            let fast = count_sum_free(&s, &budget()).unwrap().count;
            prop_assert_eq!(naive, fast);
        }

        #[test]
        fn counting_is_monotone_under_inclusion(
            vals in proptest::collection::btree_set(1i64..16, 0..10),
            keep in proptest::collection::vec(any::<bool>(), 10),
        ) {
            let all: Vec<i64> = vals.iter().copied().collect();
            let sub: Vec<i64> = all
                .iter()
                .zip(keep.iter().chain(std::iter::repeat(&true)))
                .filter_map(|(v, k)| k.then_some(*v))
                .collect();
            let big = count_sum_free(&zset(&all), &budget()).unwrap().count;
            let small = count_sum_free(&zset(&sub), &budget()).unwrap().count;
            prop_assert!(small <= big);
        }
    }
}
