//! Schur triples (`a + b = c`) and everything built directly on them:
//! the sum-free predicate, the solution list, codegree statistics of the
//! triple hypergraph on `[n]^d`, and Schur embeddings between point sets
//! together with a brute-force verifier.
//!
//! Two triple conventions coexist and are never mixed: *ordered solutions*
//! with `a = b` allowed (these define sum-freeness) and *3-element sets of
//! distinct points* (these are the hypergraph edges).

use serde::{Deserialize, Serialize, Serializer};
use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::geometry::{self, rational_to_string, FiberKind, LatticePoint, Rational};

/// A finite subset of `Z^d`: deduplicated, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSet {
    dim: usize,
    points: Vec<LatticePoint>,
}

impl PointSet {
    pub fn empty(dim: usize) -> Self {
        PointSet { dim, points: Vec::new() }
    }

    /// Canonicalizes: sorts lexicographically and removes duplicates.
    pub fn from_points(dim: usize, mut points: Vec<LatticePoint>) -> Self {
        for p in &points {
            assert_eq!(p.dim(), dim, "mixed dimensions in point set");
        }
        points.sort();
        points.dedup();
        PointSet { dim, points }
    }

    /// One-dimensional interval `{1, ..., n}`.
    pub fn interval(n: u32) -> Self {
        PointSet::from_points(1, (1..=n as i64).map(|v| LatticePoint::new(vec![v])).collect())
    }

    /// The box `[n]^d` under coordinatewise addition.
    pub fn grid(n: u32, d: u32) -> Self {
        let mut pts = vec![Vec::new()];
        for _ in 0..d {
            pts = pts
                .into_iter()
                .flat_map(|p: Vec<i64>| {
                    (1..=n as i64).map(move |v| {
                        let mut q = p.clone();
                        q.push(v);
                        q
                    })
                })
                .collect();
        }
        PointSet::from_points(d as usize, pts.into_iter().map(LatticePoint::new).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LatticePoint> {
        self.points.iter()
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn index_of(&self, p: &LatticePoint) -> Option<usize> {
        self.points.binary_search(p).ok()
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        assert_eq!(self.dim, other.dim);
        let mut pts = self.points.clone();
        pts.extend(other.points.iter().cloned());
        PointSet::from_points(self.dim, pts)
    }

    /// Index of the point equal to `a + b`, if present. Sums are formed in
    /// `i128` so no intermediate overflow can occur.
    pub fn index_of_sum(&self, a: &LatticePoint, b: &LatticePoint) -> Option<usize> {
        let sum: Vec<i128> = a
            .coords()
            .iter()
            .zip(b.coords())
            .map(|(u, v)| *u as i128 + *v as i128)
            .collect();
        self.points
            .binary_search_by(|q| {
                for (qc, sc) in q.coords().iter().zip(&sum) {
                    match (*qc as i128).cmp(sc) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            })
            .ok()
    }
}

impl FromIterator<LatticePoint> for PointSet {
    fn from_iter<I: IntoIterator<Item = LatticePoint>>(iter: I) -> Self {
        let pts: Vec<_> = iter.into_iter().collect();
        let dim = pts.first().map(|p| p.dim()).unwrap_or(1);
        PointSet::from_points(dim, pts)
    }
}

/// True iff no `a, b in S` (equality allowed) have `a + b in S`.
pub fn is_sum_free(s: &PointSet) -> bool {
    let pts = s.points();
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i..] {
            if s.index_of_sum(a, b).is_some() {
                return false;
            }
        }
    }
    true
}

/// All ordered solutions `(a, b, c)` to `a + b = c` within `S`, with
/// `a = b` allowed. The length of this list is the canonical ordered
/// Schur-solution count.
pub fn schur_solutions(s: &PointSet) -> Vec<(LatticePoint, LatticePoint, LatticePoint)> {
    let pts = s.points();
    let mut out = Vec::new();
    for a in pts {
        for b in pts {
            if let Some(k) = s.index_of_sum(a, b) {
                out.push((a.clone(), b.clone(), pts[k].clone()));
            }
        }
    }
    out
}

/// Codegree statistics of the 3-uniform hypergraph on `[n]^d` whose edges
/// are the 3-element sets `{a, b, c}` of distinct points with `a + b = c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurHypergraphStats {
    pub vertex_count: u64,
    pub edge_count: u64,
    /// `3 * edge_count / vertex_count`.
    pub avg_degree: Rational,
    /// Maximum number of edges through a fixed pair of vertices.
    pub delta2: u32,
    /// Maximum number of edges through a fixed triple; 0 or 1.
    pub delta3: u32,
}

impl SchurHypergraphStats {
    /// The container functional `4*d2/(dbar*tau) + 2*d3/(dbar*tau^2)` for
    /// uniformity 3. `None` when the hypergraph has no edges.
    pub fn delta_of_tau(&self, tau: Rational) -> Option<Rational> {
        if self.edge_count == 0 || tau == Rational::from_integer(0) {
            return None;
        }
        let four = Rational::from_integer(4);
        let two = Rational::from_integer(2);
        let d2 = Rational::from_integer(self.delta2 as i128);
        let d3 = Rational::from_integer(self.delta3 as i128);
        Some(four * d2 / (self.avg_degree * tau) + two * d3 / (self.avg_degree * tau * tau))
    }
}

impl Serialize for SchurHypergraphStats {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SchurHypergraphStats", 5)?;
        st.serialize_field("vertex_count", &self.vertex_count)?;
        st.serialize_field("edge_count", &self.edge_count)?;
        st.serialize_field("avg_degree", &rational_to_string(&self.avg_degree))?;
        st.serialize_field("delta2", &self.delta2)?;
        st.serialize_field("delta3", &self.delta3)?;
        st.end()
    }
}

const STATS_PAIR_LIMIT: u64 = 200_000_000;

/// Exact statistics of the Schur hypergraph on `[n]^d`. Enumeration is
/// quadratic in `n^d`; inputs with `(n^d)^2` beyond 2e8 are rejected.
pub fn schur_hypergraph_stats(n: u32, d: u32) -> Result<SchurHypergraphStats> {
    if d == 0 || n == 0 {
        return Err(Error::invalid("need n >= 1 and d >= 1"));
    }
    let v = (n as u64).checked_pow(d).filter(|v| *v <= 2_000_000);
    let v = v.ok_or(Error::TooLarge { what: "n^d", got: u64::MAX, limit: 2_000_000 })?;
    if v * v > STATS_PAIR_LIMIT {
        return Err(Error::TooLarge { what: "(n^d)^2", got: v * v, limit: STATS_PAIR_LIMIT });
    }
    let grid = PointSet::grid(n, d);
    let pts = grid.points();
    let mut edge_count: u64 = 0;
    let mut pair_codegree: HashMap<(u32, u32), u32> = HashMap::new();
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            if let Some(k) = grid.index_of_sum(&pts[i], &pts[j]) {
                // Coordinates are positive, so c is distinct from a and b.
                edge_count += 1;
                let mut tri = [i as u32, j as u32, k as u32];
                tri.sort_unstable();
                for (u, v) in [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])] {
                    *pair_codegree.entry((u, v)).or_insert(0) += 1;
                }
            }
        }
    }
    let delta2 = pair_codegree.values().copied().max().unwrap_or(0);
    Ok(SchurHypergraphStats {
        vertex_count: v,
        edge_count,
        avg_degree: Rational::new(3 * edge_count as i128, v as i128),
        delta2,
        delta3: u32::from(edge_count > 0),
    })
}

/// An explicit injection between point sets claimed to preserve the
/// relation `a + b = c` in both directions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchurEmbedding {
    pub source: PointSet,
    pub target: PointSet,
    /// Explicit (source point, target point) pairs, total on the source.
    pub map: Vec<(LatticePoint, LatticePoint)>,
}

impl SchurEmbedding {
    pub fn identity(s: &PointSet) -> Self {
        SchurEmbedding {
            source: s.clone(),
            target: s.clone(),
            map: s.iter().map(|p| (p.clone(), p.clone())).collect(),
        }
    }

    pub fn image(&self) -> PointSet {
        PointSet::from_points(
            self.target.dim(),
            self.map.iter().map(|(_, t)| t.clone()).collect(),
        )
    }
}

/// Brute-force check that `e` is injective, total on its source, and that
/// for all `a, b, c` in the source (`a = b` allowed) `a + b = c` holds iff
/// `f(a) + f(b) = f(c)`. Quadratic in the source size via hashing.
pub fn verify_schur_embedding(e: &SchurEmbedding) -> bool {
    let mut fwd: HashMap<&LatticePoint, &LatticePoint> = HashMap::new();
    for (s, t) in &e.map {
        if !e.source.contains(s) || fwd.insert(s, t).is_some() {
            return false;
        }
    }
    if fwd.len() != e.source.len() {
        return false; // not total
    }
    let image: HashSet<&LatticePoint> = fwd.values().copied().collect();
    if image.len() != fwd.len() {
        return false; // not injective
    }
    if e.map.iter().any(|(_, t)| !e.target.contains(t)) {
        return false;
    }
    let pts = e.source.points();
    for a in pts {
        for b in pts {
            let t = fwd[a].add(fwd[b]);
            match e.source.index_of_sum(a, b) {
                Some(k) => {
                    if fwd[&pts[k]] != &t {
                        return false;
                    }
                }
                None => {
                    if image.contains(&t) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Embeds `R_i u R_j u L_k` (with `k = i + j`) into the three vertical
/// fibers `x = 1, 3, 4`. The only additive relations on either side are
/// cross relations `R_i + R_j = L_k` and `1 + 3 = 4`, and the shifted
/// height map aligns them exactly.
///
/// Writing `c0 = ceil(0.7 n)` and `rho = (index - c0) mod 2` for the two
/// lower fibers, the image of a point of height `h` is `(1, h + 1)`,
/// `(3, h + 1)` and `(4, h - o + 2)` respectively, where `o = 1` when
/// `rho_i = rho_j = 1` and `o = 0` otherwise. The shift keeps all target
/// heights nonnegative; correctness is enforced by the verifier rather
/// than assumed.
pub fn fiber_embedding(i: i64, j: i64, k: i64, n: u32) -> Result<SchurEmbedding> {
    let w = geometry::w(n);
    if i == j {
        return Err(Error::invalid(format!("fiber indices must differ, got i = j = {i}")));
    }
    if k != i + j {
        return Err(Error::invalid(format!("need k = i + j, got ({i}, {j}, {k})")));
    }
    if i.abs() > 2 * w || j.abs() > 2 * w || k.abs() > w {
        return Err(Error::invalid(format!(
            "fiber indices out of range at n={n}: (i,j,k)=({i},{j},{k}), w={w}"
        )));
    }
    let fi = geometry::fiber(FiberKind::R, i, n)?;
    let fj = geometry::fiber(FiberKind::R, j, n)?;
    let fk = geometry::fiber(FiberKind::L, k, n)?;
    let c0 = geometry::ceil_07n(n);
    let rho_i = (i - c0).rem_euclid(2);
    let rho_j = (j - c0).rem_euclid(2);
    let o = i64::from(rho_i == 1 && rho_j == 1);

    let mut map = Vec::new();
    for p in fi.points.iter() {
        let h = geometry::height(p, FiberKind::R, n)? as i64;
        map.push((p.clone(), LatticePoint::xy(1, h + 1)));
    }
    for p in fj.points.iter() {
        let h = geometry::height(p, FiberKind::R, n)? as i64;
        map.push((p.clone(), LatticePoint::xy(3, h + 1)));
    }
    for p in fk.points.iter() {
        let h = geometry::height(p, FiberKind::L, n)? as i64;
        map.push((p.clone(), LatticePoint::xy(4, h - o + 2)));
    }
    map.sort_by(|(a, _), (b, _)| a.cmp(b));
    let source = fi.points.union(&fj.points).union(&fk.points);
    let target = PointSet::from_points(2, map.iter().map(|(_, t)| t.clone()).collect());
    Ok(SchurEmbedding { source, target, map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{big_stripe, lattice_points, Bounds};
    use proptest::prelude::*;

    fn zset(vals: &[i64]) -> PointSet {
        PointSet::from_points(1, vals.iter().map(|v| LatticePoint::new(vec![*v])).collect())
    }

    #[test]
    fn sum_free_basics() {
        assert!(is_sum_free(&PointSet::empty(1)));
        assert!(!is_sum_free(&zset(&[1, 2])));
        assert!(is_sum_free(&zset(&[1, 3])));
        // 0 + 0 = 0, so any set containing 0 fails.
        assert!(!is_sum_free(&zset(&[0])));
        assert!(!is_sum_free(&zset(&[0, 7])));
        // Negative elements participate too: -1 + 3 = 2.
        assert!(!is_sum_free(&zset(&[-1, 2, 3])));
    }

    #[test]
    fn stripe_lattice_points_are_sum_free() {
        for n in [5u32, 12, 20] {
            let pts = lattice_points(&big_stripe(n), Bounds::square(1, n as i64)).unwrap();
            assert!(is_sum_free(&pts), "stripe at n={n}");
        }
    }

    #[test]
    fn solutions_examples() {
        assert_eq!(schur_solutions(&zset(&[1, 2])).len(), 1);
        let grid2 = PointSet::grid(2, 2);
        let sols = schur_solutions(&grid2);
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].2, LatticePoint::xy(2, 2));
        assert!(schur_solutions(&zset(&[4, 5, 6])).is_empty());
    }

    #[test]
    fn sum_free_iff_no_solutions() {
        for vals in [vec![1, 2, 3], vec![2, 3, 4], vec![5, 8], vec![], vec![1, 4, 5]] {
            let s = zset(&vals);
            assert_eq!(is_sum_free(&s), schur_solutions(&s).is_empty());
        }
    }

    #[test]
    fn hypergraph_stats_small() {
        let st = schur_hypergraph_stats(4, 1).unwrap();
        assert_eq!(st.edge_count, 2); // {1,2,3} and {1,3,4}
        assert_eq!(st.delta2, 2); // the pair {1,3} sits in both
        assert_eq!(st.delta3, 1);
        assert_eq!(st.avg_degree, Rational::new(3, 2));

        let st = schur_hypergraph_stats(2, 1).unwrap();
        assert_eq!(st.edge_count, 0);
        assert_eq!(st.delta3, 0);
        assert!(st.delta_of_tau(Rational::new(1, 2)).is_none());
    }

    #[test]
    fn codegrees_stay_constant() {
        for d in 1..=2u32 {
            for n in (2..=30u32).step_by(7) {
                let st = schur_hypergraph_stats(n, d).unwrap();
                assert!(st.delta2 <= 3, "delta2 = {} at n={n}, d={d}", st.delta2);
                assert!(st.delta3 <= 1);
            }
        }
    }

    #[test]
    fn embedding_verifier_basics() {
        let s = zset(&[1, 3, 4]);
        assert!(verify_schur_embedding(&SchurEmbedding::identity(&s)));

        // Collapsing two source points must fail injectivity.
        let bad = SchurEmbedding {
            source: zset(&[1, 3]),
            target: zset(&[5]),
            map: vec![
                (LatticePoint::new(vec![1]), LatticePoint::new(vec![5])),
                (LatticePoint::new(vec![3]), LatticePoint::new(vec![5])),
            ],
        };
        assert!(!verify_schur_embedding(&bad));

        // Doubling preserves a+b=c in both directions on {1,3,4}.
        let doubled = SchurEmbedding {
            source: zset(&[1, 3, 4]),
            target: zset(&[2, 6, 8]),
            map: [1i64, 3, 4]
                .iter()
                .map(|v| (LatticePoint::new(vec![*v]), LatticePoint::new(vec![2 * v])))
                .collect(),
        };
        assert!(verify_schur_embedding(&doubled));

        // A shift destroys the relation: 1+3=4 but f=x+1 gives 2+4 != 5.
        let shifted = SchurEmbedding {
            source: zset(&[1, 3, 4]),
            target: zset(&[2, 4, 5]),
            map: [1i64, 3, 4]
                .iter()
                .map(|v| (LatticePoint::new(vec![*v]), LatticePoint::new(vec![v + 1])))
                .collect(),
        };
        assert!(!verify_schur_embedding(&shifted));
    }

    #[test]
    fn fiber_embedding_examples() {
        let e = fiber_embedding(-1, 2, 1, 20).unwrap();
        assert!(verify_schur_embedding(&e));
        assert!(fiber_embedding(3, 3, 6, 20).is_err());
        assert!(fiber_embedding(-1, 2, 0, 20).is_err());
        let w = geometry::w(20);
        assert!(fiber_embedding(2 * w + 1, -2 * w, 1, 20).is_err());
    }

    #[test]
    fn fiber_embedding_covers_triple_family_n25() {
        let fam = crate::fibers::triple_set(25).unwrap();
        for &(i, j, k) in &fam.triples {
            let e = fiber_embedding(i, j, k, 25).unwrap();
            assert!(verify_schur_embedding(&e), "triple ({i},{j},{k})");
            // Image stays inside {1,3,4} x [0, 0.15n + 2].
            let cap = (3 * 25_i64) / 20 + 2;
            for (_, t) in &e.map {
                assert!(t.x() == 1 || t.x() == 3 || t.x() == 4);
                assert!(t.y() >= 0 && t.y() <= cap, "target height {} beyond {cap}", t.y());
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn random_legal_fiber_embeddings_verify(n in 5u32..=60, seed in 0u64..1000) {
            let w = geometry::w(n);
            prop_assume!(w >= 1);
            // Derive a pseudo-random legal triple from the seed.
            let k_abs = 1 + (seed % w as u64) as i64;
            let sign = if seed % 2 == 0 { 1 } else { -1 };
            let k = sign * k_abs;
            let i = -(((seed / 7) % (2 * w as u64)) as i64 + 1).min(2 * w);
            let j = k - i;
            prop_assume!(i != j && j.abs() <= 2 * w);
            let e = fiber_embedding(i, j, k, n).unwrap();
            prop_assert!(verify_schur_embedding(&e));
        }
    }
}
