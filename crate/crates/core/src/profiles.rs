//! Height profiles of sum-free subsets of the two stripe quadrilaterals:
//! per-fiber minimum heights on `R` and maximum heights on `L`, the
//! discrepancy functional over the triple family, the forward second
//! difference, and the exact algebraic identities that tie the two
//! together.

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

use crate::census::{sample_sum_free, SearchBudget};
use crate::error::{Error, Result};
use crate::fibers::{lambda_rl, triple_set};
use crate::geometry::{self, FiberKind};
use crate::schur::PointSet;

/// Partial height maps of a subset of `Lambda(R u L)`: `m(i)` is the
/// minimum height on the fiber `R_i`, `M(k)` the maximum height on `L_k`,
/// each defined only where the subset meets the fiber.
///
/// Points on the stray diagonals `|x-y| = 2w+1` (present in `Lambda(R)`
/// for `n = 2, 4 (mod 5)`) belong to no indexed fiber and do not
/// contribute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightProfile {
    pub n: u32,
    pub w: i64,
    r_min: BTreeMap<i64, u32>,
    l_max: BTreeMap<i64, u32>,
}

impl HeightProfile {
    pub fn empty(n: u32) -> Self {
        HeightProfile { n, w: geometry::w(n), r_min: BTreeMap::new(), l_max: BTreeMap::new() }
    }

    /// Builds a profile from explicit entries; indices must be fiber-legal.
    pub fn from_entries(
        n: u32,
        m_entries: impl IntoIterator<Item = (i64, u32)>,
        max_entries: impl IntoIterator<Item = (i64, u32)>,
    ) -> Result<Self> {
        let w = geometry::w(n);
        let mut p = HeightProfile::empty(n);
        for (i, h) in m_entries {
            if i.abs() > 2 * w {
                return Err(Error::RangeMismatch(format!("m index {i} beyond 2w = {}", 2 * w)));
            }
            p.r_min.insert(i, h);
        }
        for (k, h) in max_entries {
            if k.abs() > w {
                return Err(Error::RangeMismatch(format!("M index {k} beyond w = {w}")));
            }
            p.l_max.insert(k, h);
        }
        Ok(p)
    }

    /// `m(i)`: minimum height met on `R_i`, if any.
    pub fn m(&self, i: i64) -> Option<u32> {
        self.r_min.get(&i).copied()
    }

    /// `M(k)`: maximum height met on `L_k`, if any.
    pub fn m_max(&self, k: i64) -> Option<u32> {
        self.l_max.get(&k).copied()
    }

    pub fn defined_m(&self) -> usize {
        self.r_min.len()
    }

    pub fn defined_m_max(&self) -> usize {
        self.l_max.len()
    }
}

impl Serialize for HeightProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // Sorted index -> value arrays over the full ranges, null where
        // undefined.
        let m: Vec<(i64, Option<u32>)> =
            (-2 * self.w..=2 * self.w).map(|i| (i, self.m(i))).collect();
        let mm: Vec<(i64, Option<u32>)> =
            (-self.w..=self.w).map(|k| (k, self.m_max(k))).collect();
        let mut st = s.serialize_struct("HeightProfile", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("w", &self.w)?;
        st.serialize_field("m", &m)?;
        st.serialize_field("M", &mm)?;
        st.end()
    }
}

/// Per-fiber height extrema of `S`, which must lie inside `R u L`.
pub fn extract_profile(s: &PointSet, n: u32) -> Result<HeightProfile> {
    let region_r = geometry::region_r(n);
    let region_l = geometry::region_l(n);
    let w = geometry::w(n);
    let mut profile = HeightProfile::empty(n);
    for p in s.iter() {
        let (kind, limit) = if region_r.contains_lattice(p) {
            (FiberKind::R, 2 * w)
        } else if region_l.contains_lattice(p) {
            (FiberKind::L, w)
        } else {
            return Err(Error::PointOutsideRegion { point: p.to_string(), region: "R u L" });
        };
        let idx = p.x() - p.y();
        if idx.abs() > limit {
            continue; // stray diagonal, not part of any indexed fiber
        }
        let h = geometry::height(p, kind, n)?;
        match kind {
            FiberKind::R => {
                profile
                    .r_min
                    .entry(idx)
                    .and_modify(|cur| *cur = (*cur).min(h))
                    .or_insert(h);
            }
            FiberKind::L => {
                profile
                    .l_max
                    .entry(idx)
                    .and_modify(|cur| *cur = (*cur).max(h))
                    .or_insert(h);
            }
        }
    }
    Ok(profile)
}

/// One defined discrepancy term `d_s(i) = M(k+s) - m(j+s) - m(i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiscrepancyTerm {
    pub s: i8,
    pub i: i64,
    pub value: i64,
}

/// The discrepancy functional of a height profile over the triple family:
/// for each shift `s` the sum of `|d_s(i)|` over the family, undefined
/// summands contributing zero, and the maximum over the three shifts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancyReport {
    pub terms: Vec<DiscrepancyTerm>,
    pub d_minus1: u64,
    pub d_zero: u64,
    pub d_plus1: u64,
    pub d: u64,
}

pub fn discrepancy(profile: &HeightProfile, n: u32) -> Result<DiscrepancyReport> {
    let fam = triple_set(n)?;
    let w = fam.w;
    let mut terms = Vec::new();
    let mut sums = [0u64; 3];
    for (si, s) in [(-1i64, 0usize), (0, 1), (1, 2)] {
        for &(i, j, k) in &fam.triples {
            if (k + si).abs() > w || (j + si).abs() > 2 * w {
                continue;
            }
            let (mk, mj, mi) = match (
                profile.m_max(k + si),
                profile.m(j + si),
                profile.m(i),
            ) {
                (Some(a), Some(b), Some(c)) => (a as i64, b as i64, c as i64),
                _ => continue,
            };
            let value = mk - mj - mi;
            terms.push(DiscrepancyTerm { s: si as i8, i, value });
            sums[s] += value.unsigned_abs();
        }
    }
    Ok(DiscrepancyReport {
        terms,
        d_minus1: sums[0],
        d_zero: sums[1],
        d_plus1: sums[2],
        d: sums.into_iter().max().unwrap(),
    })
}

/// Forward second difference `m(i+2) - 2 m(i+1) + m(i)`.
pub fn second_difference(m: &[i64]) -> Result<Vec<i64>> {
    if m.len() < 3 {
        return Err(Error::invalid(format!(
            "second difference needs at least 3 values, got {}",
            m.len()
        )));
    }
    Ok(m.windows(3).map(|win| win[2] - 2 * win[1] + win[0]).collect())
}

/// Total integer maps `m` on `[-2w, 2w]` and `M` on `[-w, w]`, slice-backed.
struct TotalMaps<'a> {
    w: i64,
    m: &'a [i64],
    mm: &'a [i64],
}

impl TotalMaps<'_> {
    fn m(&self, i: i64) -> i64 {
        self.m[(i + 2 * self.w) as usize]
    }

    fn mm(&self, k: i64) -> i64 {
        self.mm[(k + self.w) as usize]
    }

    /// `d_s(i)` under the triple family, using the family that owns `i`.
    fn d(&self, s: i64, i: i64) -> i64 {
        let w = self.w;
        let (j, k) = if (-w..=-1).contains(&i) {
            let t = -i;
            (2 * t, t)
        } else if (-2 * w..=-w - 1).contains(&i) {
            let t = -i - w;
            (2 * t - 1, t - w - 1)
        } else {
            panic!("d_s index {i} outside the triple family");
        };
        self.mm(k + s) - self.m(j + s) - self.m(i)
    }
}

/// Verifies the four second-difference identities on total integer maps.
///
/// With `d_s(i)` the discrepancy terms of the triple family, for
/// `t in [1, w-1]`:
///
/// ```text
/// D2m(2t)   = -d0(-t) - d0(-t-1) + d-1(-t-1) + d1(-t)
/// D2m(2t-1) = -d0(-w-t-1) - d0(-w-t) + d-1(-w-t-1) + d1(-w-t)
/// ```
///
/// and for `t in [2, w-1]` (at `t = 1` these reference terms that do not
/// exist, so the maximal legal subrange starts at 2):
///
/// ```text
/// D2m(-t-1)   = 2 d0(-t) + d0(-w-t) + d0(-w-t-1) - d-1(-t-1)
///               - d-1(-w-t-1) - d1(-t+1) - d1(-w-t)
/// D2m(-w-t-1) = d0(-t) + 2 d0(-w-t) + d0(-t+1) - d1(-t+1)
///               - d-1(-w-t-1) - d-1(-t) - d1(-w-t+1)
/// ```
///
/// The identities are algebraic, so arbitrary integer values are legal
/// inputs. `m` must have length `4w + 1` and `big_m` length `2w + 1`.
pub fn verify_delta2_identities(m: &[i64], big_m: &[i64], n: u32) -> Result<bool> {
    let w = geometry::w(n);
    if m.len() as i64 != 4 * w + 1 {
        return Err(Error::RangeMismatch(format!(
            "m must cover [-2w, 2w]: expected {} values, got {}",
            4 * w + 1,
            m.len()
        )));
    }
    if big_m.len() as i64 != 2 * w + 1 {
        return Err(Error::RangeMismatch(format!(
            "M must cover [-w, w]: expected {} values, got {}",
            2 * w + 1,
            big_m.len()
        )));
    }
    let maps = TotalMaps { w, m, mm: big_m };
    let d2 = |i: i64| maps.m(i + 2) - 2 * maps.m(i + 1) + maps.m(i);
    for t in 1..=w - 1 {
        let lhs1 = d2(2 * t);
        let rhs1 = -maps.d(0, -t) - maps.d(0, -t - 1) + maps.d(-1, -t - 1) + maps.d(1, -t);
        if lhs1 != rhs1 {
            return Ok(false);
        }
        let lhs2 = d2(2 * t - 1);
        let rhs2 = -maps.d(0, -w - t - 1) - maps.d(0, -w - t)
            + maps.d(-1, -w - t - 1)
            + maps.d(1, -w - t);
        if lhs2 != rhs2 {
            return Ok(false);
        }
    }
    for t in 2..=w - 1 {
        let lhs3 = d2(-t - 1);
        let rhs3 = 2 * maps.d(0, -t) + maps.d(0, -w - t) + maps.d(0, -w - t - 1)
            - maps.d(-1, -t - 1)
            - maps.d(-1, -w - t - 1)
            - maps.d(1, -t + 1)
            - maps.d(1, -w - t);
        if lhs3 != rhs3 {
            return Ok(false);
        }
        let lhs4 = d2(-w - t - 1);
        let rhs4 = maps.d(0, -t) + 2 * maps.d(0, -w - t) + maps.d(0, -t + 1)
            - maps.d(1, -t + 1)
            - maps.d(-1, -w - t - 1)
            - maps.d(-1, -t)
            - maps.d(1, -w - t + 1);
        if lhs4 != rhs4 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Discrepancy sums of total maps with the partial-map zero rule applied
/// at the index boundaries; used by the sum-bound checks.
pub fn total_map_discrepancy_sums(m: &[i64], big_m: &[i64], n: u32) -> Result<[u64; 3]> {
    let w = geometry::w(n);
    if m.len() as i64 != 4 * w + 1 || big_m.len() as i64 != 2 * w + 1 {
        return Err(Error::RangeMismatch("map lengths must match the fiber ranges".into()));
    }
    let maps = TotalMaps { w, m, mm: big_m };
    let fam = triple_set(n)?;
    let mut sums = [0u64; 3];
    for (si, slot) in [(-1i64, 0usize), (0, 1), (1, 2)] {
        for &(i, j, k) in &fam.triples {
            if (k + si).abs() > w || (j + si).abs() > 2 * w {
                continue;
            }
            sums[slot] += (maps.mm(k + si) - maps.m(j + si) - maps.m(i)).unsigned_abs();
        }
    }
    Ok(sums)
}

/// Sum of `|D2m(i)|` over the identity-covered indices of a total map.
pub fn covered_second_difference_sum(m: &[i64], n: u32) -> Result<u64> {
    let w = geometry::w(n);
    if m.len() as i64 != 4 * w + 1 {
        return Err(Error::RangeMismatch("m length must be 4w + 1".into()));
    }
    let get = |i: i64| m[(i + 2 * w) as usize];
    let d2 = |i: i64| (get(i + 2) - 2 * get(i + 1) + get(i)).unsigned_abs();
    let mut total = 0u64;
    for t in 1..=w - 1 {
        total += d2(2 * t) + d2(2 * t - 1);
    }
    for t in 2..=w - 1 {
        total += d2(-t - 1) + d2(-w - t - 1);
    }
    Ok(total)
}

/// Σ|D2m| over every window of the profile where three consecutive `m`
/// values are defined, plus the profile's discrepancy report. Partial
/// windows contribute zero, mirroring the summand rule.
pub fn profile_second_difference_sum(profile: &HeightProfile) -> u64 {
    let w = profile.w;
    let mut total = 0u64;
    for i in -2 * w..=2 * w - 2 {
        if let (Some(a), Some(b), Some(c)) = (profile.m(i), profile.m(i + 1), profile.m(i + 2)) {
            total += (c as i64 - 2 * b as i64 + a as i64).unsigned_abs();
        }
    }
    total
}

/// Frequency table of the discrepancy `D` over exact uniform samples of
/// sum-free subsets of `Lambda(R u L)`. Deterministic given the seed;
/// sample `t` uses stream `seed + t`.
pub fn discrepancy_histogram(
    n: u32,
    samples: u32,
    seed: u64,
    budget: &SearchBudget,
) -> Result<Vec<(u64, u32)>> {
    let points = lambda_rl(n)?;
    let ds: Vec<u64> = (0..samples)
        .into_par_iter()
        .map(|t| -> Result<u64> {
            let s = sample_sum_free(&points, seed.wrapping_add(t as u64), budget)?;
            let profile = extract_profile(&s, n)?;
            Ok(discrepancy(&profile, n)?.d)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut table: BTreeMap<u64, u32> = BTreeMap::new();
    for d in ds {
        *table.entry(d).or_insert(0) += 1;
    }
    Ok(table.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::LatticePoint;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn budget() -> SearchBudget {
        SearchBudget::new(200_000_000, 300)
    }

    fn pset(coords: &[(i64, i64)]) -> PointSet {
        PointSet::from_points(2, coords.iter().map(|&(x, y)| LatticePoint::xy(x, y)).collect())
    }

    #[test]
    fn extract_profile_examples() {
        let p = extract_profile(&pset(&[(3, 4)]), 10).unwrap();
        assert_eq!(p.m(-1), Some(0));
        assert_eq!(p.defined_m(), 1);
        assert_eq!(p.defined_m_max(), 0);

        let p = extract_profile(&pset(&[(3, 4), (6, 4)]), 10).unwrap();
        assert_eq!(p.m(-1), Some(0));
        assert_eq!(p.m(2), Some(1));

        let p = extract_profile(&PointSet::empty(2), 10).unwrap();
        assert_eq!(p.defined_m() + p.defined_m_max(), 0);

        assert!(extract_profile(&pset(&[(0, 0)]), 10).is_err());

        // Min/max semantics on a shared fiber.
        let p = extract_profile(&pset(&[(5, 3), (6, 4)]), 10).unwrap();
        assert_eq!(p.m(2), Some(0));
        let p = extract_profile(&pset(&[(8, 7), (9, 8)]), 10).unwrap();
        assert_eq!(p.m_max(1), Some(1));
    }

    #[test]
    fn discrepancy_examples() {
        let p = HeightProfile::from_entries(10, [(-1, 3), (2, 4)], [(1, 7)]).unwrap();
        let rep = discrepancy(&p, 10).unwrap();
        assert_eq!(rep.d_zero, 0);
        assert_eq!(rep.d, 0);
        assert_eq!(rep.terms.len(), 1);

        let p = HeightProfile::from_entries(10, [(-1, 3), (2, 4)], [(1, 9)]).unwrap();
        let rep = discrepancy(&p, 10).unwrap();
        assert_eq!(rep.d_zero, 2);
        assert_eq!(rep.d_minus1, 0);
        assert_eq!(rep.d_plus1, 0);
        assert_eq!(rep.d, 2);

        let rep = discrepancy(&HeightProfile::empty(10), 10).unwrap();
        assert_eq!(rep.d, 0);
        assert!(rep.terms.is_empty());

        assert!(HeightProfile::from_entries(10, [(9, 0)], []).is_err());
    }

    #[test]
    fn second_difference_examples() {
        assert_eq!(second_difference(&[5, 5, 5, 5]).unwrap(), vec![0, 0]);
        assert_eq!(second_difference(&[1, 3, 5, 7]).unwrap(), vec![0, 0]);
        assert_eq!(second_difference(&[0, 1, 4, 9, 16]).unwrap(), vec![2, 2, 2]);
        assert!(second_difference(&[1, 2]).is_err());
    }

    fn random_maps(n: u32, rng: &mut impl Rng) -> (Vec<i64>, Vec<i64>) {
        let w = geometry::w(n);
        let m: Vec<i64> = (0..4 * w + 1).map(|_| rng.gen_range(-50..=50)).collect();
        let mm: Vec<i64> = (0..2 * w + 1).map(|_| rng.gen_range(-50..=50)).collect();
        (m, mm)
    }

    #[test]
    fn identities_hold_on_random_total_maps() {
        let mut rng = ChaCha8Rng::seed_from_u64(20260810);
        for n in [10u32, 20, 40] {
            for _ in 0..1000 {
                let (m, mm) = random_maps(n, &mut rng);
                assert!(verify_delta2_identities(&m, &mm, n).unwrap());
            }
        }
        assert!(verify_delta2_identities(&[0; 9], &[0; 5], 5).unwrap());
        assert!(verify_delta2_identities(&[0; 8], &[0; 5], 5).is_err());
    }

    #[test]
    fn corrupted_identity_fails_on_random_input() {
        // Re-derive the first identity with one sign flipped; random maps
        // must expose the corruption.
        let n = 20;
        let w = geometry::w(n);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut found_mismatch = false;
        for _ in 0..50 {
            let (m, mm) = random_maps(n, &mut rng);
            let maps = TotalMaps { w, m: &m, mm: &mm };
            let d2 = |i: i64| maps.m(i + 2) - 2 * maps.m(i + 1) + maps.m(i);
            for t in 1..=w - 1 {
                let lhs = d2(2 * t);
                // Correct sign on the first term would be negative.
                let corrupted =
                    maps.d(0, -t) - maps.d(0, -t - 1) + maps.d(-1, -t - 1) + maps.d(1, -t);
                if lhs != corrupted {
                    found_mismatch = true;
                }
            }
        }
        assert!(found_mismatch);
    }

    #[test]
    fn covered_second_difference_bounded_by_weighted_sums() {
        // Triangle inequality over the four identities: each d0 term is
        // referenced at most 6 times, each d+-1 term at most 3 times.
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for n in [10u32, 20, 40] {
            for _ in 0..300 {
                let (m, mm) = random_maps(n, &mut rng);
                let lhs = covered_second_difference_sum(&m, n).unwrap();
                let [dm1, d0, dp1] = total_map_discrepancy_sums(&m, &mm, n).unwrap();
                assert!(
                    lhs <= 6 * d0 + 3 * dm1 + 3 * dp1,
                    "n={n}: {lhs} > 6*{d0} + 3*{dm1} + 3*{dp1}"
                );
            }
        }
    }

    #[test]
    fn sampled_profiles_meet_spec_sum_bound() {
        // The literal acceptance form with its pinned constant: for sampled
        // sum-free subsets, partial windows contributing zero.
        for n in [8u32, 10] {
            for seed in 0..3u64 {
                let s = sample_sum_free(&lambda_rl(n).unwrap(), seed, &budget()).unwrap();
                let profile = extract_profile(&s, n).unwrap();
                let lhs = profile_second_difference_sum(&profile);
                let d = discrepancy(&profile, n).unwrap().d;
                assert!(lhs <= 8 * d + 10 * n as u64, "n={n} seed={seed}: {lhs} vs D={d}");
            }
        }
    }

    #[test]
    fn stripe_profile_has_linear_discrepancy() {
        // The extremal configuration: minimum R heights and maximum L
        // heights nearly cancel, so every defined term is O(1).
        for n in [10u32, 20, 40, 60] {
            let stripe = geometry::lattice_points_all(&geometry::big_stripe(n)).unwrap();
            let rl = lambda_rl(n).unwrap();
            let restricted: PointSet =
                stripe.iter().filter(|p| rl.contains(p)).cloned().collect();
            let profile = extract_profile(&restricted, n).unwrap();
            let rep = discrepancy(&profile, n).unwrap();
            assert!(rep.d <= 3 * n as u64, "n={n}: D = {}", rep.d);
        }
    }

    #[test]
    fn histogram_is_deterministic_and_respects_sample_count() {
        let empty = discrepancy_histogram(8, 0, 1, &budget()).unwrap();
        assert!(empty.is_empty());
        let a = discrepancy_histogram(8, 6, 42, &budget()).unwrap();
        let b = discrepancy_histogram(8, 6, 42, &budget()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.iter().map(|(_, c)| *c).sum::<u32>(), 6);
    }
}
