//! Exact dyadic-rational series: the pair-sum function `g` and its
//! restricted variants, the weighted independent-pair sum over labeled
//! bipartite graphs, the path/reflection recursion that evaluates it in
//! closed form, and the two-diagonal graph `H(k)` with its decomposition
//! into maximal paths.
//!
//! Every value is an exact `m / 2^e`; decimal output is rendering only.

use num::bigint::{BigInt, BigUint, Sign};
use num::{Integer, One, Signed, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use crate::census::SearchBudget;
use crate::error::{Error, Result};

/// An exact rational with power-of-two denominator, `num / 2^exp`, kept
/// canonical: `num` odd, or zero with `exp = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadicRational {
    num: BigInt,
    exp: u32,
}

impl DyadicRational {
    pub fn new(num: impl Into<BigInt>, exp: u32) -> Self {
        let mut d = DyadicRational { num: num.into(), exp };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.exp = 0;
            return;
        }
        while self.exp > 0 && self.num.is_even() {
            self.num /= 2;
            self.exp -= 1;
        }
    }

    pub fn zero() -> Self {
        DyadicRational { num: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        DyadicRational { num: BigInt::one(), exp: 0 }
    }

    pub fn from_int(v: i64) -> Self {
        DyadicRational { num: BigInt::from(v), exp: 0 }
    }

    /// `2^k`.
    pub fn pow2(k: u32) -> Self {
        DyadicRational { num: BigInt::one() << k, exp: 0 }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn half(&self) -> Self {
        DyadicRational::new(self.num.clone(), self.exp + 1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let e = self.exp.max(other.exp);
        let a = &self.num << (e - self.exp);
        let b = &other.num << (e - other.exp);
        DyadicRational::new(a + b, e)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let e = self.exp.max(other.exp);
        let a = &self.num << (e - self.exp);
        let b = &other.num << (e - other.exp);
        DyadicRational::new(a - b, e)
    }

    pub fn mul(&self, other: &Self) -> Self {
        DyadicRational::new(&self.num * &other.num, self.exp + other.exp)
    }

    pub fn mul_int(&self, k: i64) -> Self {
        DyadicRational::new(&self.num * k, self.exp)
    }

    /// Exact finite decimal rendering (every dyadic has one).
    pub fn to_decimal_string(&self) -> String {
        if self.exp == 0 {
            return self.num.to_string();
        }
        let scaled: BigInt = &self.num * BigInt::from(5u32).pow(self.exp);
        let neg = scaled.is_negative();
        let digits = scaled.abs().to_string();
        let e = self.exp as usize;
        let whole_len = digits.len().saturating_sub(e);
        let (whole, frac) = if whole_len == 0 {
            ("0".to_string(), format!("{:0>width$}", digits, width = e))
        } else {
            (digits[..whole_len].to_string(), digits[whole_len..].to_string())
        };
        format!("{}{}.{}", if neg { "-" } else { "" }, whole, frac)
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = &self.num << other.exp;
        let b = &other.num << self.exp;
        a.cmp(&b)
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

impl Serialize for DyadicRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DyadicRational", 3)?;
        st.serialize_field("num", &self.num.to_string())?;
        st.serialize_field("exp", &self.exp)?;
        st.serialize_field("decimal", &self.to_decimal_string())?;
        st.end()
    }
}

// --- the g family --------------------------------------------------------

/// Hard cap on the enumeration branch: `4^(n+1)` pairs with pruning.
pub const G_LIMIT: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GVariant {
    Plain,
    /// Additionally require every integer in `[3n/4 + 1, 15n/16]` to be a
    /// pairwise sum.
    Tilde,
    /// Additionally forbid the sum `n + 1 - k`.
    WithK(u32),
}

/// Integer window `[ceil(3n/4 + 1), floor(15n/16)]` of the tilde variant;
/// empty when the bounds cross.
fn tilde_window(n: u32) -> (u32, u32) {
    ((3 * n + 7) / 4, 15 * n / 16)
}

/// Inner enumeration over `S2` for a fixed `S1`, accumulating the scaled
/// weights `2^(n+1-|sum set restricted to [n]_0|)`. Subsets are bit masks
/// with bit `i` standing for the element `i`; both sets contain 0. The
/// partial sum set only grows along the recursion, so a forbidden sum
/// prunes the whole inclusion subtree.
fn g_inner(n: u32, mask1: u64, variant: GVariant) -> u64 {
    let forbidden: u64 = match variant {
        GVariant::Plain | GVariant::Tilde => 1 << (n + 1),
        GVariant::WithK(k) => (1 << (n + 1)) | (1 << (n + 1 - k)),
    };
    let (wlo, whi) = match variant {
        GVariant::Tilde => tilde_window(n),
        _ => (1, 0),
    };
    let wmask: u64 = if wlo <= whi {
        ((1u64 << (whi + 1)) - 1) ^ ((1u64 << wlo) - 1)
    } else {
        0
    };
    let low_mask: u64 = (1 << (n + 1)) - 1;

    // The sum set for S2 = {0} is S1 itself (3 and both sets contain 0).
    if mask1 & forbidden != 0 {
        return 0;
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        b: u32,
        n: u32,
        mask1: u64,
        mask2: u64,
        sums: u64,
        forbidden: u64,
        wmask: u64,
        low_mask: u64,
    ) -> u64 {
        if b > n {
            if sums & wmask != wmask {
                return 0;
            }
            let union = mask1 | mask2;
            assert!(union & !sums == 0, "a pairwise sum set must cover the union");
            return 1 << (n + 1 - (sums & low_mask).count_ones());
        }
        let mut total = rec(b + 1, n, mask1, mask2, sums, forbidden, wmask, low_mask);
        let with_b = sums | (mask1 << b);
        if with_b & forbidden == 0 {
            total += rec(b + 1, n, mask1, mask2 | (1 << b), with_b, forbidden, wmask, low_mask);
        }
        total
    }
    rec(1, n, mask1, 1, mask1, forbidden, wmask, low_mask)
}

fn g_sum(n: u32, variant: GVariant) -> Result<DyadicRational> {
    if n > G_LIMIT {
        return Err(Error::TooLarge {
            what: "g enumeration order n",
            got: n as u64,
            limit: G_LIMIT as u64,
        });
    }
    let total: u64 = (0u64..(1 << n))
        .into_par_iter()
        .map(|s1| g_inner(n, (s1 << 1) | 1, variant))
        .sum();
    Ok(DyadicRational::new(BigInt::from(total), n + 1))
}

/// `g(n)`: the sum of `2^(-|(S1+S2) cap [n]_0|)` over pairs of subsets of
/// `[n]_0` that both contain 0 and whose pairwise sums avoid `n + 1`.
/// For `n <= 0` the value is 1 by convention (the natural numbers start
/// at 1 here, so 0 falls under the fallback clause; the raw sum-formula
/// value at 0 is exposed separately as [`g_sum_at_zero`]).
pub fn g_exact(n: i64) -> Result<DyadicRational> {
    if n <= 0 {
        return Ok(DyadicRational::one());
    }
    if n > G_LIMIT as i64 {
        return Err(Error::TooLarge {
            what: "g enumeration order n",
            got: n as u64,
            limit: G_LIMIT as u64,
        });
    }
    g_sum(n as u32, GVariant::Plain)
}

/// The summation formula evaluated at `n = 0`: a single admissible pair
/// `({0}, {0})` of weight 1/2.
pub fn g_sum_at_zero() -> DyadicRational {
    DyadicRational::new(1, 1)
}

/// `g~(n)`: as `g(n)` but requiring every integer in `[3n/4+1, 15n/16]`
/// to appear among the pairwise sums. A window without integers leaves
/// the condition vacuous.
pub fn g_tilde(n: u32) -> Result<DyadicRational> {
    if n == 0 {
        return Err(Error::invalid("g~ needs n >= 1"));
    }
    g_sum(n, GVariant::Tilde)
}

/// `g_k(n)`: as `g(n)` but additionally forbidding the sum `n + 1 - k`.
/// The interesting range is `n/16 <= k <= n/4`; out-of-range `k` are
/// allowed for exploration as long as `1 <= k <= n`.
pub fn g_k(n: u32, k: u32) -> Result<DyadicRational> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::invalid(format!("g_k needs 1 <= k <= n, got n={n}, k={k}")));
    }
    g_sum(n, GVariant::WithK(k))
}

/// Integer `k` range of the case split: `[ceil(n/16), floor(n/4)]`.
pub fn g_k_range(n: u32) -> (u32, u32) {
    ((n + 15) / 16, n / 4)
}

/// Slow reference evaluation of the same sums, used as the independent
/// oracle by the test and acceptance suites: explicit element lists, an
/// array-backed sum set, no pruning and no bit-level shortcuts.
pub fn g_oracle(n: u32, k: Option<u32>, tilde: bool) -> DyadicRational {
    assert!(n >= 1 && n <= 12, "oracle is for desk-size n only");
    let elems: Vec<u32> = (1..=n).collect();
    let mut total = BigUint::zero();
    let scale = n + 1;
    let (wlo, whi) = if tilde { tilde_window(n) } else { (1, 0) };
    for pick1 in 0u32..(1 << n) {
        for pick2 in 0u32..(1 << n) {
            let mut s1 = vec![0u32];
            let mut s2 = vec![0u32];
            for (i, e) in elems.iter().enumerate() {
                if pick1 >> i & 1 == 1 {
                    s1.push(*e);
                }
                if pick2 >> i & 1 == 1 {
                    s2.push(*e);
                }
            }
            let mut in_sums = vec![false; 2 * n as usize + 1];
            for a in &s1 {
                for b in &s2 {
                    in_sums[(a + b) as usize] = true;
                }
            }
            if in_sums[n as usize + 1] {
                continue;
            }
            if let Some(k) = k {
                if in_sums[(n + 1 - k) as usize] {
                    continue;
                }
            }
            if tilde && wlo <= whi && (wlo..=whi).any(|t| !in_sums[t as usize]) {
                continue;
            }
            let weight = in_sums[..=n as usize].iter().filter(|b| **b).count() as u32;
            total += BigUint::one() << (scale - weight);
        }
    }
    DyadicRational::new(BigInt::from_biguint(Sign::Plus, total), scale)
}

// --- weighted independent pairs on labeled bipartite graphs --------------

/// A bipartite graph whose parts are the integer label ranges `[1..n1]`
/// and `[1..n2]`. The parts may share labels; the weight exponent
/// `|S1 u S2|` is computed on labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledBipartiteGraph {
    pub n1: u32,
    pub n2: u32,
    pub edges: BTreeSet<(u32, u32)>,
}

impl LabeledBipartiteGraph {
    pub fn new(n1: u32, n2: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let edges: BTreeSet<(u32, u32)> = edges.into_iter().collect();
        for &(a, b) in &edges {
            if a == 0 || a > n1 || b == 0 || b > n2 {
                return Err(Error::invalid(format!(
                    "edge ({a},{b}) outside label ranges [1..{n1}] x [1..{n2}]"
                )));
            }
        }
        Ok(LabeledBipartiteGraph { n1, n2, edges })
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree_left(&self, a: u32) -> usize {
        self.edges.iter().filter(|(x, _)| *x == a).count()
    }
}

const FRAKS_LEFT_LIMIT: u32 = 26;

/// The exact sum of `2^(-|S1 u S2|)` over all pairs `S1 <= [n1]`,
/// `S2 <= [n2]` with no edge between them. For fixed `S1` the inner sum
/// over `S2` factors over the allowed right labels: a label already in
/// `S1` contributes 2 and a fresh one 3/2, so the whole computation is a
/// single pass over the `2^n1` left subsets.
pub fn fraks(g: &LabeledBipartiteGraph, budget: &SearchBudget) -> Result<DyadicRational> {
    if g.n1 > FRAKS_LEFT_LIMIT {
        return Err(Error::TooLarge {
            what: "left part size",
            got: g.n1 as u64,
            limit: FRAKS_LEFT_LIMIT as u64,
        });
    }
    let deadline = Instant::now() + Duration::from_secs(budget.max_seconds);
    let mut nbr = vec![0u64; g.n1 as usize + 1];
    for &(a, b) in &g.edges {
        nbr[a as usize] |= 1 << (b - 1);
    }
    let full_right: u64 = if g.n2 == 0 { 0 } else { (1 << g.n2) - 1 };
    let pow3: Vec<BigUint> = (0..=g.n2)
        .scan(BigUint::one(), |acc, _| {
            let v = acc.clone();
            *acc *= 3u32;
            Some(v)
        })
        .collect();
    let scale = g.n1 + g.n2;
    let mut total = BigUint::zero();
    for s1 in 0u64..(1u64 << g.n1) {
        if s1 & 0xfff == 0 && Instant::now() > deadline {
            return Err(Error::BudgetExceeded { stats: Default::default(), best_so_far: None });
        }
        let mut blocked = 0u64;
        let mut bits = s1;
        while bits != 0 {
            let a = bits.trailing_zeros() + 1;
            blocked |= nbr[a as usize];
            bits &= bits - 1;
        }
        let allowed = full_right & !blocked;
        let s1_as_right = s1 & full_right;
        let shared = (allowed & s1_as_right).count_ones();
        let fresh = (allowed & !s1_as_right).count_ones();
        // Scaled term: 3^fresh * 2^(scale + shared - fresh - |S1|).
        let shift = scale + shared - fresh - s1.count_ones();
        total += &pow3[fresh as usize] << shift;
    }
    Ok(DyadicRational::new(BigInt::from_biguint(Sign::Plus, total), scale))
}

/// A path on `n` vertices together with its vertex-disjoint reflection:
/// parts `[n]` and `[n]`, edges `|a - b| = 1`.
pub fn path_reflection_graph(n: u32) -> LabeledBipartiteGraph {
    let mut edges = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            if a.abs_diff(b) == 1 {
                edges.push((a, b));
            }
        }
    }
    LabeledBipartiteGraph::new(n, n, edges).expect("edges in range by construction")
}

/// The truncated variant with parts `[n]` and `[n-1]`.
pub fn path_reflection_tilde(n: u32) -> Result<LabeledBipartiteGraph> {
    if n == 0 {
        return Err(Error::invalid("the truncated path graph needs n >= 1"));
    }
    let mut edges = Vec::new();
    for a in 1..=n {
        for b in 1..n {
            if a.abs_diff(b) == 1 {
                edges.push((a, b));
            }
        }
    }
    LabeledBipartiteGraph::new(n, n - 1, edges)
}

/// Values of the weighted sum on the path graphs and their truncations,
/// for indices `0..=n_max`, computed by the linear recursion
///
/// ```text
/// S(G_n)  = S(G_{n-2})/2 + S(G_{n-1}) + S(G~_{n-1})
/// S(G~_n) = S(G_{n-1}) + S(G~_{n-1})/2
/// ```
///
/// from the initial values `S(G_0) = 1`, `S(G_1) = 5/2`, `S(G~_1) = 3/2`.
/// The truncated value at index 0 does not exist and is `None`.
pub fn fraks_sequence(n_max: u32) -> Vec<(DyadicRational, Option<DyadicRational>)> {
    let mut out: Vec<(DyadicRational, Option<DyadicRational>)> = Vec::with_capacity(n_max as usize + 1);
    out.push((DyadicRational::one(), None));
    if n_max == 0 {
        return out;
    }
    out.push((DyadicRational::new(5, 1), Some(DyadicRational::new(3, 1))));
    for n in 2..=n_max {
        let (g1, t1) = &out[n as usize - 1];
        let t1 = t1.as_ref().expect("tilde defined from index 1 on");
        let (g2, _) = &out[n as usize - 2];
        let gn = g2.half().add(g1).add(t1);
        let tn = g1.add(&t1.half());
        out.push((gn, Some(tn)));
    }
    out
}

/// `(S(G_n), S(G~_n))` by recursion; defined for `n >= 2`.
pub fn fraks_recursive(n: u32) -> Result<(DyadicRational, DyadicRational)> {
    if n < 2 {
        return Err(Error::invalid("the recursion starts at n = 2"));
    }
    let seq = fraks_sequence(n);
    let (g, t) = &seq[n as usize];
    Ok((g.clone(), t.clone().expect("tilde defined for n >= 1")))
}

// --- the two-diagonal graph H(k) and its path decomposition --------------

/// Bipartite graph on `[n] | [n]` with edges `a + b = n + 1` and
/// `a + b = n + 1 - k`.
pub fn h_graph(n: u32, k: u32) -> Result<LabeledBipartiteGraph> {
    if k == 0 || k >= n {
        return Err(Error::invalid(format!("h_graph needs 1 <= k < n, got n={n}, k={k}")));
    }
    let mut edges = Vec::new();
    for a in 1..=n {
        let b = n + 1 - a;
        edges.push((a, b));
        if n + 1 - k > a {
            edges.push((a, n + 1 - k - a));
        }
    }
    LabeledBipartiteGraph::new(n, n, edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// One maximal path of `H(k)`: starting at left label `a > n - k`, it
/// alternates `a, b, a-k, b+k, ...` with `b = n + 1 - a` and has
/// `q = floor((a-1)/k) + 1` vertices on each side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberPath {
    pub start: u32,
    pub q: u32,
    /// Interleaved label sequence, alternating left/right from `start`.
    pub labels: Vec<u32>,
}

impl FiberPath {
    pub fn vertices(&self) -> impl Iterator<Item = (Side, u32)> + '_ {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (if i % 2 == 0 { Side::Left } else { Side::Right }, l))
    }

    fn left_labels(&self) -> BTreeSet<u32> {
        self.labels.iter().step_by(2).copied().collect()
    }

    fn right_labels(&self) -> BTreeSet<u32> {
        self.labels.iter().skip(1).step_by(2).copied().collect()
    }

    /// A path is exceptional when some label appears on both of its sides;
    /// equivalently it coincides with its own reflection.
    pub fn is_exceptional(&self) -> bool {
        !self.left_labels().is_disjoint(&self.right_labels())
    }
}

/// Decomposition of `H(k)` into vertex-disjoint maximal paths, with the
/// self-reflective ones split off as exceptional.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathDecomposition {
    pub components: Vec<FiberPath>,
    pub exceptional: Vec<FiberPath>,
}

impl PathDecomposition {
    pub fn exceptional_vertices(&self) -> Vec<(Side, u32)> {
        self.exceptional
            .iter()
            .flat_map(|p| p.vertices().collect::<Vec<_>>())
            .collect()
    }
}

/// Decomposes a graph built by [`h_graph`] into its maximal paths, one per
/// left start label `a in (n-k, n]`. Errors when the graph does not have
/// the exact two-diagonal edge set.
pub fn path_decompose(h: &LabeledBipartiteGraph, n: u32, k: u32) -> Result<PathDecomposition> {
    let expected = h_graph(n, k)?;
    if *h != expected {
        return Err(Error::NotHGraphShape(format!("edges differ from h_graph({n},{k})")));
    }
    let mut components = Vec::new();
    let mut exceptional = Vec::new();
    for a in (n - k + 1)..=n {
        let q = (a - 1) / k + 1;
        let b = n + 1 - a;
        let mut labels = Vec::with_capacity(2 * q as usize);
        for m in 0..q {
            labels.push(a - m * k);
            labels.push(b + m * k);
        }
        let path = FiberPath { start: a, q, labels };
        if path.is_exceptional() {
            exceptional.push(path);
        } else {
            components.push(path);
        }
    }
    Ok(PathDecomposition { components, exceptional })
}
