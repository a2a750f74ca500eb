//! Exact rational geometry for the planar regions whose lattice points
//! carry the sum-free structure: the half-open big stripe, the band `R0`,
//! the two quadrilaterals `R` and `L`, their diagonal fibers and the
//! height function along a fiber.
//!
//! All coordinates, constraint data and areas are `Ratio<i128>`; strict
//! versus non-strict boundaries are kept first-class because the big
//! stripe is half-open at its upper edge. No floating point is used
//! anywhere in this module.

use num::rational::Ratio;
use num::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};
use crate::schur::PointSet;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator (enforced by `Ratio`).
pub type Rational = Ratio<i128>;

pub fn rat(num: i128, den: i128) -> Rational {
    Ratio::new(num, den)
}

pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_from_str(s: &str) -> Result<Rational> {
    let parse = |t: &str| {
        t.trim()
            .parse::<i128>()
            .map_err(|e| Error::invalid(format!("bad rational {s:?}: {e}")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let q = parse(q)?;
            if q == 0 {
                return Err(Error::invalid(format!("bad rational {s:?}: zero denominator")));
            }
            Ok(Ratio::new(parse(p)?, q))
        }
        None => Ok(Ratio::from_integer(parse(s)?)),
    }
}

/// A point of `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint {
    coords: Vec<i64>,
}

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        assert!(!coords.is_empty(), "points must have dimension >= 1");
        LatticePoint { coords }
    }

    pub fn xy(x: i64, y: i64) -> Self {
        LatticePoint { coords: vec![x, y] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn x(&self) -> i64 {
        self.coords[0]
    }

    /// Second coordinate; panics for 1-dimensional points.
    pub fn y(&self) -> i64 {
        self.coords[1]
    }

    /// Coordinatewise sum. Defined only between equal-dimension points.
    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in point addition");
        LatticePoint {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in point subtraction");
        LatticePoint {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Coordinate sum `x + y + ...` .
    pub fn coord_sum(&self) -> i64 {
        self.coords.iter().sum()
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A single half-plane constraint `a*x + b*y <= c` (or `< c` when strict).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfPlane {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub strict: bool,
}

impl HalfPlane {
    pub fn le(a: Rational, b: Rational, c: Rational) -> Self {
        HalfPlane { a, b, c, strict: false }
    }

    pub fn lt(a: Rational, b: Rational, c: Rational) -> Self {
        HalfPlane { a, b, c, strict: true }
    }

    fn satisfied_rational(&self, x: &Rational, y: &Rational) -> bool {
        let lhs = self.a * x + self.b * y;
        if self.strict {
            lhs < self.c
        } else {
            lhs <= self.c
        }
    }

    /// Same constraint with integer coefficients (scaled by the lcm of the
    /// three denominators), for fast lattice-point tests.
    fn integerized(&self) -> (i128, i128, i128, bool) {
        let l1 = num::integer::lcm(*self.a.denom(), *self.b.denom());
        let l = num::integer::lcm(l1, *self.c.denom());
        let scale = |r: &Rational| r.numer() * (l / r.denom());
        (scale(&self.a), scale(&self.b), scale(&self.c), self.strict)
    }
}

impl Serialize for HalfPlane {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("HalfPlane", 4)?;
        st.serialize_field("a", &rational_to_string(&self.a))?;
        st.serialize_field("b", &rational_to_string(&self.b))?;
        st.serialize_field("c", &rational_to_string(&self.c))?;
        st.serialize_field("strict", &self.strict)?;
        st.end()
    }
}

/// Intersection of half-planes. Used only through [`Region`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConvexPolygon {
    pub constraints: Vec<HalfPlane>,
}

impl ConvexPolygon {
    pub fn new(constraints: Vec<HalfPlane>) -> Self {
        ConvexPolygon { constraints }
    }

    fn contains_rational(&self, x: &Rational, y: &Rational) -> bool {
        self.constraints.iter().all(|h| h.satisfied_rational(x, y))
    }

    /// All pairwise constraint intersections that satisfy every constraint
    /// with its closure (strict boundaries treated as closed). These are the
    /// vertices when the polygon is bounded and full-dimensional.
    fn closure_vertices(&self) -> Vec<(Rational, Rational)> {
        let n = self.constraints.len();
        let mut vs: Vec<(Rational, Rational)> = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let (h1, h2) = (&self.constraints[i], &self.constraints[j]);
                let det = h1.a * h2.b - h2.a * h1.b;
                if det.is_zero() {
                    continue;
                }
                let x = (h1.c * h2.b - h2.c * h1.b) / det;
                let y = (h1.a * h2.c - h2.a * h1.c) / det;
                let ok = self
                    .constraints
                    .iter()
                    .all(|h| h.a * x + h.b * y <= h.c);
                if ok && !vs.contains(&(x, y)) {
                    vs.push((x, y));
                }
            }
        }
        vs
    }

    /// True when the polygon admits a nonzero recession direction, i.e. a
    /// direction `d` with `a.d <= 0` for every constraint. Candidate
    /// directions are the boundary directions of the constraints.
    fn has_recession_direction(&self) -> bool {
        if self.constraints.is_empty() {
            return true;
        }
        let dirs = self.constraints.iter().flat_map(|h| {
            [(h.b, -h.a), (-h.b, h.a)]
        });
        for (dx, dy) in dirs {
            if dx.is_zero() && dy.is_zero() {
                continue;
            }
            if self
                .constraints
                .iter()
                .all(|h| h.a * dx + h.b * dy <= Rational::zero())
            {
                return true;
            }
        }
        false
    }

    /// Feasibility test used for the unbounded-vs-empty distinction when no
    /// vertex exists: all constraint normals are pairwise parallel, so the
    /// polygon is a (possibly empty) slab. Projects onto the common normal.
    fn parallel_slab_nonempty(&self) -> bool {
        // Normals all parallel to (a0, b0); constraint h bounds t = a0*x+b0*y
        // by c*h scaled. Interval intersection on t.
        let h0 = &self.constraints[0];
        let (a0, b0) = (h0.a, h0.b);
        if a0.is_zero() && b0.is_zero() {
            return h0.c >= Rational::zero();
        }
        let norm2 = a0 * a0 + b0 * b0;
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for h in &self.constraints {
            // h.a = k*a0, h.b = k*b0 for some rational k.
            let k = (h.a * a0 + h.b * b0) / norm2;
            if k.is_zero() {
                if h.c < Rational::zero() || (h.strict && h.c.is_zero()) {
                    return false;
                }
                continue;
            }
            let bound = h.c / k;
            if k.is_positive() {
                hi = Some(match hi {
                    Some(v) if v < bound => v,
                    _ => bound,
                });
            } else {
                lo = Some(match lo {
                    Some(v) if v > bound => v,
                    _ => bound,
                });
            }
        }
        match (lo, hi) {
            (Some(l), Some(h)) => l <= h,
            _ => true,
        }
    }

    fn is_bounded(&self) -> Result<()> {
        let vs = self.closure_vertices();
        if !vs.is_empty() {
            if self.has_recession_direction() {
                return Err(Error::UnboundedRegion);
            }
            return Ok(());
        }
        // No vertex: the polygon is either empty (bounded, trivially) or an
        // unbounded slab / half-plane / plane.
        let any_crossing = self.constraints.iter().enumerate().any(|(i, h1)| {
            self.constraints[i + 1..]
                .iter()
                .any(|h2| !(h1.a * h2.b - h2.a * h1.b).is_zero())
        });
        if any_crossing {
            // Non-parallel constraints but no feasible vertex: empty.
            return Ok(());
        }
        if self.constraints.is_empty() || self.parallel_slab_nonempty() {
            return Err(Error::UnboundedRegion);
        }
        Ok(())
    }

    /// Exact area by the shoelace formula over the angularly sorted
    /// vertices (degenerate polygons give zero).
    fn area(&self) -> Result<Rational> {
        self.is_bounded()?;
        let mut vs = self.closure_vertices();
        if vs.len() < 3 {
            return Ok(Rational::zero());
        }
        let n = Rational::from_integer(vs.len() as i128);
        let cx = vs.iter().map(|v| v.0).sum::<Rational>() / n;
        let cy = vs.iter().map(|v| v.1).sum::<Rational>() / n;
        // Counterclockwise sort around the centroid: split at the upward
        // half-line, then order by cross product. Exact in rationals.
        let half = |p: &(Rational, Rational)| -> u8 {
            if p.1 > cy || (p.1 == cy && p.0 >= cx) {
                0
            } else {
                1
            }
        };
        vs.sort_by(|p, q| {
            half(p).cmp(&half(q)).then_with(|| {
                let cross = (p.0 - cx) * (q.1 - cy) - (q.0 - cx) * (p.1 - cy);
                Rational::zero().cmp(&cross)
            })
        });
        let mut twice = Rational::zero();
        for i in 0..vs.len() {
            let (x1, y1) = vs[i];
            let (x2, y2) = vs[(i + 1) % vs.len()];
            twice += x1 * y2 - x2 * y1;
        }
        Ok(twice.abs() / rat(2, 1))
    }

    fn bbox(&self) -> Option<(Rational, Rational, Rational, Rational)> {
        let vs = self.closure_vertices();
        let xs: Vec<_> = vs.iter().map(|v| v.0).collect();
        let ys: Vec<_> = vs.iter().map(|v| v.1).collect();
        Some((
            *xs.iter().min()?,
            *xs.iter().max()?,
            *ys.iter().min()?,
            *ys.iter().max()?,
        ))
    }
}

/// A finite union of convex polygons of the plane; the polygons of one
/// region never overlap in the interior (true of every constructor here).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Region {
    pub polygons: Vec<ConvexPolygon>,
}

impl Region {
    pub fn new(polygons: Vec<ConvexPolygon>) -> Self {
        Region { polygons }
    }

    pub fn contains_rational(&self, x: &Rational, y: &Rational) -> bool {
        self.polygons.iter().any(|p| p.contains_rational(x, y))
    }

    pub fn contains_lattice(&self, p: &LatticePoint) -> bool {
        assert_eq!(p.dim(), 2, "regions live in the plane");
        self.contains_xy(p.x(), p.y())
    }

    pub fn contains_xy(&self, x: i64, y: i64) -> bool {
        self.polygons.iter().any(|poly| {
            poly.constraints.iter().all(|h| {
                let (a, b, c, strict) = h.integerized();
                let lhs = a * x as i128 + b * y as i128;
                if strict {
                    lhs < c
                } else {
                    lhs <= c
                }
            })
        })
    }

    /// Exact area as the sum over the constituent polygons.
    pub fn area(&self) -> Result<Rational> {
        let mut total = Rational::zero();
        for p in &self.polygons {
            total += p.area()?;
        }
        Ok(total)
    }

    /// Smallest integer box containing the region, as (xmin, xmax, ymin, ymax).
    /// Empty regions yield `None`.
    pub fn integral_bbox(&self) -> Result<Option<(i64, i64, i64, i64)>> {
        for p in &self.polygons {
            p.is_bounded()?;
        }
        let mut acc: Option<(Rational, Rational, Rational, Rational)> = None;
        for p in &self.polygons {
            if let Some((x0, x1, y0, y1)) = p.bbox() {
                acc = Some(match acc {
                    None => (x0, x1, y0, y1),
                    Some((a0, a1, b0, b1)) => {
                        (a0.min(x0), a1.max(x1), b0.min(y0), b1.max(y1))
                    }
                });
            }
        }
        Ok(acc.map(|(x0, x1, y0, y1)| {
            (
                x0.ceil().to_integer() as i64,
                x1.floor().to_integer() as i64,
                y0.ceil().to_integer() as i64,
                y1.floor().to_integer() as i64,
            )
        }))
    }
}

/// Inclusive coordinate bounds for lattice enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub xmin: i64,
    pub xmax: i64,
    pub ymin: i64,
    pub ymax: i64,
}

impl Bounds {
    pub fn square(lo: i64, hi: i64) -> Self {
        Bounds { xmin: lo, xmax: hi, ymin: lo, ymax: hi }
    }
}

/// Integer points of a bounded region intersected with the given box, in
/// lexicographic order.
pub fn lattice_points(region: &Region, bounds: Bounds) -> Result<PointSet> {
    let bbox = region.integral_bbox()?;
    let mut pts = Vec::new();
    if let Some((rx0, rx1, ry0, ry1)) = bbox {
        let x0 = rx0.max(bounds.xmin);
        let x1 = rx1.min(bounds.xmax);
        let y0 = ry0.max(bounds.ymin);
        let y1 = ry1.min(bounds.ymax);
        for x in x0..=x1 {
            for y in y0..=y1 {
                if region.contains_xy(x, y) {
                    pts.push(LatticePoint::xy(x, y));
                }
            }
        }
    }
    Ok(PointSet::from_points(2, pts))
}

/// Integer points of a bounded region with no extra box constraint.
pub fn lattice_points_all(region: &Region) -> Result<PointSet> {
    match region.integral_bbox()? {
        None => Ok(PointSet::empty(2)),
        Some((x0, x1, y0, y1)) => lattice_points(
            region,
            Bounds { xmin: x0, xmax: x1, ymin: y0, ymax: y1 },
        ),
    }
}

// --- the fixed regions -------------------------------------------------

fn nr(n: u32) -> Rational {
    Rational::from_integer(n as i128)
}

/// `w = floor(0.4 n)`, the fiber index scale.
pub fn w(n: u32) -> i64 {
    (2 * n as i64) / 5
}

/// `ceil(0.7 n)`, the base offset of the height function.
pub fn ceil_07n(n: u32) -> i64 {
    (7 * n as i64 + 9) / 10
}

/// The half-open band `0.8n <= x+y < 1.6n` inside `[0,n]^2`. Its lattice
/// points form a sum-free set: any two coordinate sums land at or beyond
/// the strict upper edge.
pub fn big_stripe(n: u32) -> Region {
    let one = Rational::one();
    let poly = ConvexPolygon::new(vec![
        HalfPlane::le(-one, -one, -rat(4, 5) * nr(n)),
        HalfPlane::lt(one, one, rat(8, 5) * nr(n)),
        HalfPlane::le(-one, Rational::zero(), Rational::zero()),
        HalfPlane::le(one, Rational::zero(), nr(n)),
        HalfPlane::le(Rational::zero(), -one, Rational::zero()),
        HalfPlane::le(Rational::zero(), one, nr(n)),
    ]);
    Region::new(vec![poly])
}

/// The closed band `0.7n <= x+y <= 1.7n` inside `[0,n]^2`.
pub fn region_r0(n: u32) -> Region {
    let one = Rational::one();
    let poly = ConvexPolygon::new(vec![
        HalfPlane::le(-one, -one, -rat(7, 10) * nr(n)),
        HalfPlane::le(one, one, rat(17, 10) * nr(n)),
        HalfPlane::le(-one, Rational::zero(), Rational::zero()),
        HalfPlane::le(one, Rational::zero(), nr(n)),
        HalfPlane::le(Rational::zero(), -one, Rational::zero()),
        HalfPlane::le(Rational::zero(), one, nr(n)),
    ]);
    Region::new(vec![poly])
}

fn square_constraints(n: u32) -> Vec<HalfPlane> {
    let one = Rational::one();
    vec![
        HalfPlane::le(-one, Rational::zero(), Rational::zero()),
        HalfPlane::le(one, Rational::zero(), nr(n)),
        HalfPlane::le(Rational::zero(), -one, Rational::zero()),
        HalfPlane::le(Rational::zero(), one, nr(n)),
    ]
}

/// Lower quadrilateral: `0.7n <= x+y <= n`, `|x-y| <= 0.8n`, within `[0,n]^2`.
pub fn region_r(n: u32) -> Region {
    let one = Rational::one();
    let mut cs = vec![
        HalfPlane::le(-one, -one, -rat(7, 10) * nr(n)),
        HalfPlane::le(one, one, nr(n)),
        HalfPlane::le(one, -one, rat(4, 5) * nr(n)),
        HalfPlane::le(-one, one, rat(4, 5) * nr(n)),
    ];
    cs.extend(square_constraints(n));
    Region::new(vec![ConvexPolygon::new(cs)])
}

/// Upper quadrilateral: `2*ceil(0.7n) <= x+y <= 1.7n`, `|x-y| <= 0.4n`,
/// within `[0,n]^2`.
pub fn region_l(n: u32) -> Region {
    let one = Rational::one();
    let lo = Rational::from_integer(2 * ceil_07n(n) as i128);
    let mut cs = vec![
        HalfPlane::le(-one, -one, -lo),
        HalfPlane::le(one, one, rat(17, 10) * nr(n)),
        HalfPlane::le(one, -one, rat(2, 5) * nr(n)),
        HalfPlane::le(-one, one, rat(2, 5) * nr(n)),
    ];
    cs.extend(square_constraints(n));
    Region::new(vec![ConvexPolygon::new(cs)])
}

/// The complement `R0 \ (R u L)` as five explicit convex pieces: the middle
/// band between the two quadrilaterals and the four side wings. The pieces
/// overlap `R`, `L` and each other only in boundary segments, so areas add
/// exactly.
pub fn region_r0_minus_rl(n: u32) -> Region {
    let one = Rational::one();
    let z = Rational::zero();
    let lo_l = Rational::from_integer(2 * ceil_07n(n) as i128);
    let s_07 = rat(7, 10) * nr(n);
    let s_17 = rat(17, 10) * nr(n);
    let mid = ConvexPolygon::new(vec![
        HalfPlane::le(-one, -one, -nr(n)),
        HalfPlane::le(one, one, lo_l),
        HalfPlane::le(one, one, s_17),
        HalfPlane::le(one, z, nr(n)),
        HalfPlane::le(z, one, nr(n)),
    ]);
    // Side wings of the lower band, beyond |x-y| = 0.8n.
    let wing_r_plus = ConvexPolygon::new(vec![
        HalfPlane::le(-one, -one, -s_07),
        HalfPlane::le(one, one, nr(n)),
        HalfPlane::le(-one, one, -rat(4, 5) * nr(n)),
        HalfPlane::le(z, -one, z),
    ]);
    let wing_r_minus = ConvexPolygon::new(vec![
        HalfPlane::le(-one, -one, -s_07),
        HalfPlane::le(one, one, nr(n)),
        HalfPlane::le(one, -one, -rat(4, 5) * nr(n)),
        HalfPlane::le(-one, z, z),
    ]);
    // Side wings of the upper band, beyond |x-y| = 0.4n.
    let wing_l_plus = ConvexPolygon::new(vec![
        HalfPlane::le(-one, -one, -lo_l),
        HalfPlane::le(one, one, s_17),
        HalfPlane::le(-one, one, -rat(2, 5) * nr(n)),
        HalfPlane::le(one, z, nr(n)),
    ]);
    let wing_l_minus = ConvexPolygon::new(vec![
        HalfPlane::le(-one, -one, -lo_l),
        HalfPlane::le(one, one, s_17),
        HalfPlane::le(one, -one, -rat(2, 5) * nr(n)),
        HalfPlane::le(z, one, nr(n)),
    ]);
    Region::new(vec![mid, wing_r_plus, wing_r_minus, wing_l_plus, wing_l_minus])
}

// --- fibers and heights -------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FiberKind {
    R,
    L,
}

impl FiberKind {
    pub fn name(self) -> &'static str {
        match self {
            FiberKind::R => "R",
            FiberKind::L => "L",
        }
    }
}

/// Lattice points of one diagonal `x - y = index` of `R` or `L`, sorted by
/// coordinate sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fiber {
    pub kind: FiberKind,
    pub index: i64,
    pub n: u32,
    pub points: PointSet,
}

/// The diagonal fiber `R_j` (`|j| <= 2w`) or `L_k` (`|k| <= w`).
pub fn fiber(kind: FiberKind, index: i64, n: u32) -> Result<Fiber> {
    let limit = match kind {
        FiberKind::R => 2 * w(n),
        FiberKind::L => w(n),
    };
    if index.abs() > limit {
        return Err(Error::FiberIndexOutOfRange { kind: kind.name(), index, n, limit });
    }
    let region = match kind {
        FiberKind::R => region_r(n),
        FiberKind::L => region_l(n),
    };
    let (s_lo, s_hi) = match kind {
        FiberKind::R => (ceil_07n(n), n as i64),
        FiberKind::L => (2 * ceil_07n(n), (17 * n as i64) / 10),
    };
    let mut pts = Vec::new();
    // x - y = index forces x + y = s with s = index (mod 2).
    let mut s = s_lo;
    if (s - index).rem_euclid(2) != 0 {
        s += 1;
    }
    while s <= s_hi {
        let x = (s + index) / 2;
        let y = (s - index) / 2;
        if region.contains_xy(x, y) {
            pts.push(LatticePoint::xy(x, y));
        }
        s += 2;
    }
    // On a fixed diagonal, lexicographic order coincides with coordinate-sum
    // order, so the canonical PointSet ordering is already the fiber order.
    Ok(Fiber { kind, index, n, points: PointSet::from_points(2, pts) })
}

/// Height of a point along its fiber: `floor((x+y-ceil(0.7n))/2)` on `R`,
/// `floor((x+y-2*ceil(0.7n))/2)` on `L`. Errors when the point is outside
/// the named region.
pub fn height(p: &LatticePoint, kind: FiberKind, n: u32) -> Result<u32> {
    let region = match kind {
        FiberKind::R => region_r(n),
        FiberKind::L => region_l(n),
    };
    if !region.contains_lattice(p) {
        return Err(Error::PointOutsideRegion { point: p.to_string(), region: kind.name() });
    }
    let offset = match kind {
        FiberKind::R => ceil_07n(n),
        FiberKind::L => 2 * ceil_07n(n),
    };
    let h = (p.coord_sum() - offset).div_euclid(2);
    debug_assert!(h >= 0);
    Ok(h as u32)
}

/// True when every point of `S` satisfies
/// `(0.8 - gamma) n <= x + y <= (1.6 + gamma) n`.
pub fn close_to_stripe(s: &PointSet, gamma: Rational, n: u32) -> bool {
    let lo = (rat(4, 5) - gamma) * nr(n);
    let hi = (rat(8, 5) + gamma) * nr(n);
    s.iter().all(|p| {
        let sum = Rational::from_integer(p.coord_sum() as i128);
        lo <= sum && sum <= hi
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent shoelace oracle over an explicit vertex list.
    fn shoelace(vs: &[(Rational, Rational)]) -> Rational {
        let mut twice = Rational::zero();
        for i in 0..vs.len() {
            let (x1, y1) = vs[i];
            let (x2, y2) = vs[(i + 1) % vs.len()];
            twice += x1 * y2 - x2 * y1;
        }
        twice.abs() / rat(2, 1)
    }

    fn nq(v: i128) -> Rational {
        Rational::from_integer(v)
    }

    #[test]
    fn unit_square_area() {
        let one = Rational::one();
        let z = Rational::zero();
        let sq = Region::new(vec![ConvexPolygon::new(vec![
            HalfPlane::le(-one, z, z),
            HalfPlane::le(one, z, one),
            HalfPlane::le(z, -one, z),
            HalfPlane::le(z, one, one),
        ])]);
        assert_eq!(sq.area().unwrap(), Rational::one());
    }

    #[test]
    fn unbounded_region_errors() {
        let one = Rational::one();
        let z = Rational::zero();
        let half = Region::new(vec![ConvexPolygon::new(vec![HalfPlane::le(-one, z, z)])]);
        assert!(matches!(half.area(), Err(Error::UnboundedRegion)));
        let slab = Region::new(vec![ConvexPolygon::new(vec![
            HalfPlane::le(-one, z, z),
            HalfPlane::le(one, z, one),
        ])]);
        assert!(matches!(slab.area(), Err(Error::UnboundedRegion)));
    }

    #[test]
    fn empty_polygon_is_bounded_with_zero_area() {
        let one = Rational::one();
        let z = Rational::zero();
        // x >= 1 and x <= 0 with crossing constraints on y.
        let empty = Region::new(vec![ConvexPolygon::new(vec![
            HalfPlane::le(-one, z, -one),
            HalfPlane::le(one, z, z),
            HalfPlane::le(z, one, one),
            HalfPlane::le(z, -one, z),
        ])]);
        assert_eq!(empty.area().unwrap(), Rational::zero());
    }

    #[test]
    fn stripe_membership_boundaries() {
        let st = big_stripe(5);
        // On the closed lower edge: sum = 4 = 0.8 * 5.
        assert!(st.contains_xy(1, 3));
        // On the open upper edge: sum = 8 = 1.6 * 5 is excluded.
        assert!(!st.contains_xy(4, 4));
    }

    #[test]
    fn stripe_lattice_count_matches_closed_form() {
        // 0.6 n^2 + 0.6 n - 2 inside [1,n]^2, for n divisible by 5.
        for n in [5u32, 10, 15, 20, 25, 30, 35, 40, 45, 50] {
            let pts = lattice_points(&big_stripe(n), Bounds::square(1, n as i64)).unwrap();
            let expected = (6 * (n as i64) * (n as i64) + 6 * n as i64) / 10 - 2;
            assert_eq!(pts.len() as i64, expected, "n={n}");
        }
        let pts = lattice_points(&big_stripe(10), Bounds::square(1, 10)).unwrap();
        assert_eq!(pts.len(), 64);
    }

    #[test]
    fn stripe_area_is_three_fifths_n_squared() {
        for n in [1u32, 2, 5, 7, 10, 33] {
            assert_eq!(big_stripe(n).area().unwrap(), rat(3, 5) * nq(n as i128) * nq(n as i128));
        }
    }

    #[test]
    fn r0_area_matches_hand_hexagon() {
        for n in [10u32, 20, 50] {
            let nn = nq(n as i128);
            // Hexagon vertices of the band inside the square, oracle first.
            let c = rat(7, 10) * nn;
            let vs = [
                (c, Rational::zero()),
                (nn, Rational::zero()),
                (nn, rat(7, 10) * nn),
                (rat(7, 10) * nn, nn),
                (Rational::zero(), nn),
                (Rational::zero(), c),
            ];
            let oracle = shoelace(&vs);
            assert_eq!(oracle, rat(71, 100) * nn * nn);
            assert_eq!(region_r0(n).area().unwrap(), oracle);
        }
    }

    #[test]
    fn r_and_l_areas() {
        for n in [10u32, 20, 40, 100] {
            let nn = nq(n as i128);
            assert_eq!(region_r(n).area().unwrap(), rat(47, 200) * nn * nn, "R at n={n}");
        }
        // L carries the ceil(0.7n) offset: area = 0.4n(1.6n - 2c) + 0.035n^2.
        for n in [10u32, 13, 20, 27, 40] {
            let nn = nq(n as i128);
            let c = nq(ceil_07n(n) as i128);
            let expected = rat(2, 5) * nn * (rat(8, 5) * nn - rat(2, 1) * c)
                + rat(7, 200) * nn * nn;
            assert_eq!(region_l(n).area().unwrap(), expected, "L at n={n}");
        }
    }

    #[test]
    fn r0_decomposition_area_identity() {
        // R0 = R + L + (R0 \ (R u L)) exactly, and the difference equals
        // (9/25) n^2 + (4/5) n (ceil(0.7n) - 0.7n).
        for n in [3u32, 5, 7, 10, 11, 12, 13, 20, 37, 50] {
            let a0 = region_r0(n).area().unwrap();
            let ar = region_r(n).area().unwrap();
            let al = region_l(n).area().unwrap();
            let ad = region_r0_minus_rl(n).area().unwrap();
            assert_eq!(a0, ar + al + ad, "n={n}");
            // Closed form for the ceil correction; needs 2*ceil(0.7n) <= 1.6n,
            // which holds from n = 9 on.
            if n >= 9 {
                let nn = nq(n as i128);
                let corr = nq(ceil_07n(n) as i128) - rat(7, 10) * nn;
                assert_eq!(ad, rat(9, 25) * nn * nn + rat(4, 5) * nn * corr, "n={n}");
            }
        }
    }

    #[test]
    fn lattice_count_tracks_area_linearly() {
        // |lambda(region) - area| <= 10 n for the fixed constructors.
        for n in [2u32, 5, 9, 17, 50, 113, 500] {
            for (name, reg) in [
                ("stripe", big_stripe(n)),
                ("r0", region_r0(n)),
                ("r", region_r(n)),
                ("l", region_l(n)),
                ("diff", region_r0_minus_rl(n)),
            ] {
                let pts =
                    lattice_points(&reg, Bounds::square(-2 * n as i64, 2 * n as i64)).unwrap();
                let area = reg.area().unwrap();
                let diff = (Rational::from_integer(pts.len() as i128) - area).abs();
                assert!(
                    diff <= nq(10 * n as i128),
                    "{name} n={n}: |{} - {}| too large",
                    pts.len(),
                    area
                );
            }
        }
    }

    #[test]
    fn fiber_examples() {
        let f = fiber(FiberKind::R, 0, 10).unwrap();
        let pts: Vec<_> = f.points.iter().map(|p| (p.x(), p.y())).collect();
        assert_eq!(pts, vec![(4, 4), (5, 5)]);

        let f = fiber(FiberKind::L, 1, 10).unwrap();
        let pts: Vec<_> = f.points.iter().map(|p| (p.x(), p.y())).collect();
        assert_eq!(pts, vec![(8, 7), (9, 8)]);

        let w = w(10);
        assert!(fiber(FiberKind::R, 2 * w + 1, 10).is_err());
        assert!(fiber(FiberKind::L, w + 1, 10).is_err());
    }

    #[test]
    fn fibers_partition_lambda_r_and_l() {
        // R fibers for |j| <= 2w are disjoint and exhaust Lambda(R) except,
        // for n = 2 or 4 mod 5, the stray diagonals |x-y| = 2w+1 that fall
        // outside every fiber index. L fibers always exhaust Lambda(L).
        for n in 3u32..=40 {
            let ww = w(n);
            let lam_r = lattice_points_all(&region_r(n)).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            let mut total = 0usize;
            for j in -2 * ww..=2 * ww {
                let f = fiber(FiberKind::R, j, n).unwrap();
                for p in f.points.iter() {
                    assert!(lam_r.contains(p), "fiber point outside Lambda(R)");
                    assert!(seen.insert(p.clone()), "overlapping fibers at n={n}");
                }
                total += f.points.len();
            }
            let leftovers: Vec<_> = lam_r
                .iter()
                .filter(|p| !seen.contains(*p))
                .collect();
            if n % 5 == 2 || n % 5 == 4 {
                assert!(leftovers.iter().all(|p| (p.x() - p.y()).abs() == 2 * ww + 1));
            } else {
                assert_eq!(total, lam_r.len(), "R fibers must cover Lambda(R) at n={n}");
            }

            let lam_l = lattice_points_all(&region_l(n)).unwrap();
            let mut count_l = 0;
            for k in -ww..=ww {
                count_l += fiber(FiberKind::L, k, n).unwrap().points.len();
            }
            assert_eq!(count_l, lam_l.len(), "L fibers must cover Lambda(L) at n={n}");
        }
    }

    #[test]
    fn height_examples() {
        assert_eq!(height(&LatticePoint::xy(5, 3), FiberKind::R, 10).unwrap(), 0);
        assert_eq!(height(&LatticePoint::xy(7, 8), FiberKind::L, 10).unwrap(), 0);
        assert_eq!(height(&LatticePoint::xy(6, 4), FiberKind::R, 10).unwrap(), 1);
        assert!(height(&LatticePoint::xy(0, 0), FiberKind::R, 10).is_err());
        assert!(height(&LatticePoint::xy(5, 3), FiberKind::L, 10).is_err());
    }

    #[test]
    fn close_to_stripe_examples() {
        let n = 10;
        let stripe_pts = lattice_points(&big_stripe(n), Bounds::square(1, 10)).unwrap();
        assert!(close_to_stripe(&stripe_pts, Rational::zero(), n));
        let low = PointSet::from_points(2, vec![LatticePoint::xy(1, 1)]);
        assert!(!close_to_stripe(&low, Rational::zero(), n));
        assert!(close_to_stripe(&PointSet::empty(2), Rational::zero(), n));
        // A generous gamma admits the whole square.
        assert!(close_to_stripe(&low, rat(4, 5), n));
    }

    #[test]
    fn rational_string_round_trip() {
        for r in [rat(7, 10), rat(-3, 4), nq(5), Rational::zero()] {
            assert_eq!(rational_from_str(&rational_to_string(&r)).unwrap(), r);
        }
        assert!(rational_from_str("1/0").is_err());
    }
}
