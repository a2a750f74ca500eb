//! The triple family that tiles the stripe fibers, the partition check on
//! `Lambda(R) u Lambda(L)`, and the count `s(n)` of sum-free subsets of
//! `{1,3,4} x [n]` computed by two independent routes: generic constraint
//! search and a closed-form pair sum with bitwise sum sets.

use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;

use crate::census::{count_sum_free, BigCount, CountResult, SearchBudget};
use crate::error::{Error, Result};
use crate::geometry::{self, FiberKind, LatticePoint};
use crate::schur::PointSet;

/// The family of `2w` index triples `(i, j, k)` with `i + j = k` whose
/// fibers `R_i, R_j, L_k` tile the two stripe quadrilaterals up to `O(n)`
/// points: `(-t, 2t, t)` and `(-w-t, 2t-1, t-w-1)` for `t in [w]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleFamily {
    pub n: u32,
    pub w: i64,
    pub triples: Vec<(i64, i64, i64)>,
}

pub fn triple_set(n: u32) -> Result<TripleFamily> {
    if n < 3 {
        return Err(Error::invalid(format!("triple family needs n >= 3, got {n}")));
    }
    let w = geometry::w(n);
    let mut triples = Vec::with_capacity(2 * w as usize);
    for t in 1..=w {
        triples.push((-t, 2 * t, t));
    }
    for t in 1..=w {
        triples.push((-w - t, 2 * t - 1, t - w - 1));
    }
    Ok(TripleFamily { n, w, triples })
}

impl TripleFamily {
    /// The triple with first component `i`, when `i` is a family index.
    pub fn by_first(&self, i: i64) -> Option<(i64, i64, i64)> {
        if i >= -self.w && i <= -1 {
            let t = -i;
            Some((-t, 2 * t, t))
        } else if i >= -2 * self.w && i <= -self.w - 1 {
            let t = -i - self.w;
            Some((-self.w - t, 2 * t - 1, t - self.w - 1))
        } else {
            None
        }
    }
}

/// Coverage of `Lambda(R) u Lambda(L)` by the family's fibers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    /// Points covered by exactly one fiber of the family.
    pub covered: u64,
    /// Points of the two quadrilaterals no fiber covers.
    pub uncovered: u64,
    /// Points covered more than once; always 0 for this family.
    pub overlaps: u64,
}

/// Counts how the fibers named by the triple family cover the lattice
/// points of `R u L`. The two zero fibers and, for `n = 2, 4 (mod 5)`,
/// the stray diagonals `|x-y| = 2w+1` stay uncovered; that accounts for
/// every uncovered point.
pub fn verify_partition(n: u32) -> Result<PartitionReport> {
    let fam = triple_set(n)?;
    let lam_r = geometry::lattice_points_all(&geometry::region_r(n))?;
    let lam_l = geometry::lattice_points_all(&geometry::region_l(n))?;
    let mut multiplicity: HashMap<&LatticePoint, u32> = HashMap::new();
    let mut fiber_hits = |kind: FiberKind, index: i64| -> Result<()> {
        let f = geometry::fiber(kind, index, n)?;
        let lam = match kind {
            FiberKind::R => &lam_r,
            FiberKind::L => &lam_l,
        };
        for p in f.points.iter() {
            let idx = lam
                .index_of(p)
                .expect("fiber points lie in the lattice of their region");
            *multiplicity.entry(&lam.points()[idx]).or_insert(0) += 1;
        }
        Ok(())
    };
    for &(i, j, k) in &fam.triples {
        fiber_hits(FiberKind::R, i)?;
        fiber_hits(FiberKind::R, j)?;
        fiber_hits(FiberKind::L, k)?;
    }
    let covered = multiplicity.values().filter(|&&m| m == 1).count() as u64;
    let overlaps = multiplicity.values().filter(|&&m| m > 1).count() as u64;
    let total = (lam_r.len() + lam_l.len()) as u64;
    Ok(PartitionReport { covered, uncovered: total - covered - overlaps, overlaps })
}

/// The lattice points of `R u L` as one point set.
pub fn lambda_rl(n: u32) -> Result<PointSet> {
    let r = geometry::lattice_points_all(&geometry::region_r(n))?;
    let l = geometry::lattice_points_all(&geometry::region_l(n))?;
    Ok(r.union(&l))
}

/// The ground set `{1,3,4} x [n]`.
pub fn ground_134(n: u32) -> PointSet {
    let mut pts = Vec::with_capacity(3 * n as usize);
    for x in [1i64, 3, 4] {
        for y in 1..=n as i64 {
            pts.push(LatticePoint::xy(x, y));
        }
    }
    PointSet::from_points(2, pts)
}

/// `s(n)`: the number of sum-free subsets of `{1,3,4} x [n]`, by the
/// generic counting engine.
pub fn s_brute(n: u32, budget: &SearchBudget) -> Result<CountResult> {
    count_sum_free(&ground_134(n), budget)
}

pub const S_FORMULA_LIMIT: u32 = 15;

fn s_formula_inner(n: u32, mask_a: u64) -> u64 {
    // Sum over B <= [n] of 2^(n - |(A+B) cap [n]|), sums tracked as a
    // growing bit set; bits above n never matter for the weight.
    let low_mask: u64 = if n == 0 { 0 } else { ((1 << (n + 1)) - 1) & !1 };
    fn rec(b: u32, n: u32, mask_a: u64, sums: u64, low_mask: u64) -> u64 {
        if b > n {
            return 1 << (n - (sums & low_mask).count_ones());
        }
        let skip = rec(b + 1, n, mask_a, sums, low_mask);
        skip + rec(b + 1, n, mask_a, sums | (mask_a << b), low_mask)
    }
    rec(1, n, mask_a, 0, low_mask)
}

/// `s(n)` in closed form: the only additive pattern in `{1,3,4} x [n]` is
/// `(1,a) + (3,b) = (4,a+b)`, so with `A` and `B` the first two columns,
/// the third column freely avoids `(A+B) cap [n]`:
/// `s(n) = sum over A, B of 2^(n - |(A+B) cap [n]|)`.
pub fn s_formula(n: u32) -> Result<BigCount> {
    if n > S_FORMULA_LIMIT {
        return Err(Error::TooLarge {
            what: "s closed-form order n",
            got: n as u64,
            limit: S_FORMULA_LIMIT as u64,
        });
    }
    let total: u64 = (0u64..(1 << n))
        .into_par_iter()
        .map(|a| s_formula_inner(n, a << 1))
        .sum();
    Ok(BigCount::from_u128(total as u128))
}

/// Exact `sf(R_i u R_j u L_k)` for a legal fiber triple.
pub fn per_triple_count(i: i64, j: i64, k: i64, n: u32, budget: &SearchBudget) -> Result<CountResult> {
    let w = geometry::w(n);
    if i == j || k != i + j || i.abs() > 2 * w || j.abs() > 2 * w || k.abs() > w {
        return Err(Error::invalid(format!(
            "illegal fiber triple ({i},{j},{k}) at n={n} (w={w})"
        )));
    }
    let fi = geometry::fiber(FiberKind::R, i, n)?;
    let fj = geometry::fiber(FiberKind::R, j, n)?;
    let fk = geometry::fiber(FiberKind::L, k, n)?;
    let pts = fi.points.union(&fj.points).union(&fk.points);
    count_sum_free(&pts, budget)
}

/// `ceil(0.15 n)`, the nominal height range of the embedding target.
pub fn ceil_015n(n: u32) -> i64 {
    (3 * n as i64 + 19) / 20
}

/// Maximum over the triple family of the excess of the embedding-target
/// height range beyond `ceil(0.15 n)`; the additive constant the target
/// `{1,3,4} x [0, 0.15n + c]` actually needs.
pub fn embedding_height_margin(n: u32) -> Result<i64> {
    let fam = triple_set(n)?;
    let mut margin = 0i64;
    for &(i, j, k) in &fam.triples {
        let e = crate::schur::fiber_embedding(i, j, k, n)?;
        let max_y = e.map.iter().map(|(_, t)| t.y()).max().unwrap_or(0);
        margin = margin.max(max_y - ceil_015n(n));
    }
    Ok(margin)
}
