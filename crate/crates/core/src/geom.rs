//! Points, point sets, and exact orientation predicates over Q(sqrt 3).

use crate::scalar::{Rat, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::collections::HashSet;
use std::fmt;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("duplicate label {0}")]
    DuplicateLabel(u32),
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(u32, u32),
    #[error("points {0}, {1}, {2} are collinear")]
    CollinearTriple(u32, u32, u32),
    #[error("degenerate quadruple {0:?}: three of its points are collinear")]
    DegenerateQuadruple([u32; 4]),
    #[error("spanned lines {0:?} and {1:?} are parallel")]
    ParallelSpannedLines((u32, u32), (u32, u32)),
    #[error("wing is empty")]
    EmptyWing,
    #[error("unknown label {0}")]
    UnknownLabel(u32),
}

/// A labeled point with exact coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
    pub label: u32,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar, label: u32) -> Self {
        Point { x, y, label }
    }

    pub fn from_ints(x: i64, y: i64, label: u32) -> Self {
        Point::new(Scalar::from_int(x), Scalar::from_int(y), label)
    }

    pub fn coords(&self) -> (&Scalar, &Scalar) {
        (&self.x, &self.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}=({}, {})", self.label, self.x, self.y)
    }
}

/// A finite labeled point set. Labels are unique; validity checks
/// (general position, distinct spanned slopes) are separate predicates so
/// that construction never hides an expensive scan.
#[derive(Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.points.iter()).finish()
    }
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self, GeomError> {
        let mut seen = HashSet::new();
        for p in &points {
            if !seen.insert(p.label) {
                return Err(GeomError::DuplicateLabel(p.label));
            }
        }
        Ok(PointSet { points })
    }

    /// Builds a set from bare coordinates, labeling 1..=n in order.
    pub fn from_coords(coords: Vec<(Scalar, Scalar)>) -> Self {
        let points = coords
            .into_iter()
            .enumerate()
            .map(|(i, (x, y))| Point::new(x, y, (i + 1) as u32))
            .collect();
        PointSet { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, index: usize) -> &Point {
        &self.points[index]
    }

    pub fn by_label(&self, label: u32) -> Result<&Point, GeomError> {
        self.points
            .iter()
            .find(|p| p.label == label)
            .ok_or(GeomError::UnknownLabel(label))
    }

    /// Exhaustive collinearity scan. Errors with the first offending triple.
    pub fn check_general_position(&self) -> Result<(), GeomError> {
        let pts = clear_denominators(self);
        let n = pts.len();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if orient_ipts(&pts[i], &pts[j], &pts[k]) == 0 {
                        return Err(GeomError::CollinearTriple(
                            pts[i].label,
                            pts[j].label,
                            pts[k].label,
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks that no two lines spanned by point pairs are parallel
    /// (coincident included). Required by circular-sequence construction.
    pub fn check_distinct_spanned_slopes(&self) -> Result<(), GeomError> {
        let pts = clear_denominators(self);
        let n = pts.len();
        let mut dirs: Vec<(Q3, Q3, (u32, u32))> = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let (dx, dy) = canonical_direction(&pts[i], &pts[j]);
                dirs.push((dx, dy, (pts[i].label, pts[j].label)));
            }
        }
        dirs.sort_by(|a, b| compare_slopes(&a.0, &a.1, &b.0, &b.1));
        for w in dirs.windows(2) {
            if cross_sign(&w[0].0, &w[0].1, &w[1].0, &w[1].1) == 0 {
                return Err(GeomError::ParallelSpannedLines(w[0].2, w[1].2));
            }
        }
        Ok(())
    }
}

/// Orientation of the triple (p, q, r): sign of the cross product
/// (q - p) x (r - p). +1 is counterclockwise, 0 collinear.
pub fn orient(p: &Point, q: &Point, r: &Point) -> i32 {
    let ux = &q.x - &p.x;
    let uy = &q.y - &p.y;
    let vx = &r.x - &p.x;
    let vy = &r.y - &p.y;
    (&(&ux * &vy) - &(&uy * &vx)).signum()
}

/// True iff the four points are in convex position: none of them lies
/// strictly inside the triangle of the other three. Errors on any
/// collinear triple among the four.
///
/// With the four triple orientations o(abc), o(abd), o(acd), o(bcd), the
/// quadruple is convex exactly when the positive count is 0, 2, or 4; a
/// 3-to-1 split certifies one point interior to the others' triangle.
pub fn is_convex_quadruple(
    a: &Point,
    b: &Point,
    c: &Point,
    d: &Point,
) -> Result<bool, GeomError> {
    let signs = [
        orient(a, b, c),
        orient(a, b, d),
        orient(a, c, d),
        orient(b, c, d),
    ];
    if signs.iter().any(|&s| s == 0) {
        return Err(GeomError::DegenerateQuadruple([
            a.label, b.label, c.label, d.label,
        ]));
    }
    let positives = signs.iter().filter(|&&s| s > 0).count();
    Ok(positives % 2 == 0)
}

/// Counterclockwise rotation by 120 degrees about the origin, exact in
/// Q(sqrt 3): (x, y) -> (-x/2 - (sqrt3/2) y, (sqrt3/2) x - y/2).
pub fn rotate120_xy(x: &Scalar, y: &Scalar) -> (Scalar, Scalar) {
    let half = Scalar::new(Rat::new(BigInt::from(1), BigInt::from(2)), Rat::zero());
    let root_half = Scalar::new(Rat::zero(), Rat::new(BigInt::from(1), BigInt::from(2)));
    (
        -&(x * &half) - (y * &root_half),
        &(x * &root_half) - &(y * &half),
    )
}

pub fn rotate240_xy(x: &Scalar, y: &Scalar) -> (Scalar, Scalar) {
    let (rx, ry) = rotate120_xy(x, y);
    rotate120_xy(&rx, &ry)
}

pub fn rotate120(p: &Point) -> Point {
    let (x, y) = rotate120_xy(&p.x, &p.y);
    Point::new(x, y, p.label)
}

/// wing union theta(wing) union theta^2(wing), labeled so the wing keeps
/// labels 1..w, its first rotation w+1..2w, and the second 2w+1..3w.
/// Fails if any two of the 3w points coincide (a wing point at the
/// rotation center always does).
pub fn expand_wing(wing: &PointSet) -> Result<PointSet, GeomError> {
    if wing.is_empty() {
        return Err(GeomError::EmptyWing);
    }
    let w = wing.len();
    let mut points = Vec::with_capacity(3 * w);
    for (i, p) in wing.points().iter().enumerate() {
        points.push(Point::new(p.x.clone(), p.y.clone(), (i + 1) as u32));
    }
    for (i, p) in wing.points().iter().enumerate() {
        let (x, y) = rotate120_xy(&p.x, &p.y);
        points.push(Point::new(x, y, (w + i + 1) as u32));
    }
    for (i, p) in wing.points().iter().enumerate() {
        let (x, y) = rotate240_xy(&p.x, &p.y);
        points.push(Point::new(x, y, (2 * w + i + 1) as u32));
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i].x == points[j].x && points[i].y == points[j].y {
                return Err(GeomError::DuplicatePoint(
                    points[i].label,
                    points[j].label,
                ));
            }
        }
    }
    PointSet::new(points)
}

/// True iff rotation by 120 degrees about `center` maps the set onto
/// itself (as a set of coordinates; labels are ignored).
pub fn verify_3_symmetric(set: &PointSet, center: (&Scalar, &Scalar)) -> bool {
    let mut original: Vec<(Scalar, Scalar)> = set
        .points()
        .iter()
        .map(|p| (p.x.clone(), p.y.clone()))
        .collect();
    let mut rotated: Vec<(Scalar, Scalar)> = set
        .points()
        .iter()
        .map(|p| {
            let dx = &p.x - center.0;
            let dy = &p.y - center.1;
            let (rx, ry) = rotate120_xy(&dx, &dy);
            (&rx + center.0, &ry + center.1)
        })
        .collect();
    original.sort();
    rotated.sort();
    original == rotated
}

// ---------------------------------------------------------------------------
// Integer fast path: coordinates with denominators cleared, entries in
// Z[sqrt 3]. The heavy counting loops run here so that no gcd
// normalization happens per predicate.
// ---------------------------------------------------------------------------

/// `a + b * sqrt(3)` with integer parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Q3 {
    pub a: BigInt,
    pub b: BigInt,
}

impl Q3 {
    pub fn zero() -> Self {
        Q3 {
            a: BigInt::zero(),
            b: BigInt::zero(),
        }
    }

    pub fn add(&self, rhs: &Q3) -> Q3 {
        Q3 {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }

    pub fn sub(&self, rhs: &Q3) -> Q3 {
        Q3 {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }

    pub fn mul(&self, rhs: &Q3) -> Q3 {
        Q3 {
            a: &self.a * &rhs.a + (&self.b * &rhs.b) * BigInt::from(3),
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }

    pub fn neg(&self) -> Q3 {
        Q3 {
            a: -&self.a,
            b: -&self.b,
        }
    }

    /// Exact sign of `a + b sqrt3`.
    pub fn sign(&self) -> i32 {
        let sa = int_sign(&self.a);
        let sb = int_sign(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (0, _) => sb,
            (_, 0) => sa,
            _ if sa == sb => sa,
            _ => {
                let diff = &self.a * &self.a - (&self.b * &self.b) * BigInt::from(3);
                sa * int_sign(&diff)
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

fn int_sign(n: &BigInt) -> i32 {
    if n.is_zero() {
        0
    } else if n.is_positive() {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug)]
pub(crate) struct IPt {
    pub x: Q3,
    pub y: Q3,
    pub label: u32,
}

/// Scales all coordinates by the common denominator (signs of all
/// orientation predicates are invariant under uniform positive scaling).
pub(crate) fn clear_denominators(set: &PointSet) -> Vec<IPt> {
    let mut lcm = BigInt::from(1);
    for p in set.points() {
        for part in [
            p.x.rat_part(),
            p.x.root_part(),
            p.y.rat_part(),
            p.y.root_part(),
        ] {
            lcm = lcm.lcm(part.denom());
        }
    }
    let to_q3 = |s: &Scalar| Q3 {
        a: s.rat_part().numer() * (&lcm / s.rat_part().denom()),
        b: s.root_part().numer() * (&lcm / s.root_part().denom()),
    };
    set.points()
        .iter()
        .map(|p| IPt {
            x: to_q3(&p.x),
            y: to_q3(&p.y),
            label: p.label,
        })
        .collect()
}

/// Sign of the 2x2 determinant | ux vx ; uy vy | over Z[sqrt 3].
pub(crate) fn cross_sign(ux: &Q3, uy: &Q3, vx: &Q3, vy: &Q3) -> i32 {
    ux.mul(vy).sub(&uy.mul(vx)).sign()
}

pub(crate) fn orient_ipts(p: &IPt, q: &IPt, r: &IPt) -> i32 {
    let ux = q.x.sub(&p.x);
    let uy = q.y.sub(&p.y);
    let vx = r.x.sub(&p.x);
    let vy = r.y.sub(&p.y);
    cross_sign(&ux, &uy, &vx, &vy)
}

/// Canonical direction of the line through two points: the vector q - p
/// normalized so that it points into the upper half plane (or rightward if
/// horizontal). Angle lies in [0, pi).
pub(crate) fn canonical_direction(p: &IPt, q: &IPt) -> (Q3, Q3) {
    let dx = q.x.sub(&p.x);
    let dy = q.y.sub(&p.y);
    let sy = dy.sign();
    if sy < 0 || (sy == 0 && dx.sign() < 0) {
        (dx.neg(), dy.neg())
    } else {
        (dx, dy)
    }
}

/// Total order on canonical directions by angle in [0, pi).
pub(crate) fn compare_slopes(ax: &Q3, ay: &Q3, bx: &Q3, by: &Q3) -> std::cmp::Ordering {
    match cross_sign(ax, ay, bx, by) {
        s if s > 0 => std::cmp::Ordering::Less,
        0 => std::cmp::Ordering::Equal,
        _ => std::cmp::Ordering::Greater,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_scalar;

    fn pt(x: i64, y: i64, label: u32) -> Point {
        Point::from_ints(x, y, label)
    }

    #[test]
    fn orient_basic() {
        assert_eq!(orient(&pt(0, 0, 1), &pt(1, 0, 2), &pt(2, 0, 3)), 0);
        assert_eq!(orient(&pt(0, 0, 1), &pt(1, 0, 2), &pt(0, 1, 3)), 1);
        assert_eq!(orient(&pt(0, 0, 1), &pt(0, 1, 2), &pt(1, 0, 3)), -1);
    }

    #[test]
    fn orient_antisymmetric_under_swaps() {
        let (a, b, c) = (pt(3, -2, 1), pt(7, 5, 2), pt(-4, 9, 3));
        let o = orient(&a, &b, &c);
        assert_eq!(orient(&b, &a, &c), -o);
        assert_eq!(orient(&a, &c, &b), -o);
        assert_eq!(orient(&c, &b, &a), -o);
    }

    #[test]
    fn convex_quadruple_cases() {
        // unit square
        assert!(
            is_convex_quadruple(&pt(0, 0, 1), &pt(1, 0, 2), &pt(1, 1, 3), &pt(0, 1, 4)).unwrap()
        );
        // crossed labeling of the same square is still convex position
        assert!(
            is_convex_quadruple(&pt(0, 0, 1), &pt(1, 1, 2), &pt(1, 0, 3), &pt(0, 1, 4)).unwrap()
        );
        // triangle with interior point
        assert!(
            !is_convex_quadruple(&pt(0, 0, 1), &pt(3, 0, 2), &pt(0, 3, 3), &pt(1, 1, 4)).unwrap()
        );
        // (2,1) sits inside the triangle (0,0),(4,0),(2,5)
        assert!(
            !is_convex_quadruple(&pt(0, 0, 1), &pt(4, 0, 2), &pt(2, 1, 3), &pt(2, 5, 4)).unwrap()
        );
        // degenerate input reported
        assert!(is_convex_quadruple(&pt(0, 0, 1), &pt(1, 0, 2), &pt(2, 0, 3), &pt(0, 1, 4))
            .is_err());
    }

    #[test]
    fn rotation_is_exact_and_order_three() {
        let p = Point::new(
            parse_scalar("3716.08787").unwrap(),
            parse_scalar("1847.16703").unwrap(),
            1,
        );
        let r3 = rotate120(&rotate120(&rotate120(&p)));
        assert_eq!((r3.x, r3.y), (p.x.clone(), p.y.clone()));

        let unit = pt(1, 0, 1);
        let r = rotate120(&unit);
        assert_eq!(r.x, parse_scalar("-1/2").unwrap());
        assert_eq!(r.y, parse_scalar("0+1/2*s3").unwrap());

        let origin = pt(0, 0, 1);
        let ro = rotate120(&origin);
        assert!(ro.x.is_zero() && ro.y.is_zero());
    }

    #[test]
    fn rotation_preserves_orientation() {
        let (a, b, c) = (pt(3, -2, 1), pt(7, 5, 2), pt(-4, 9, 3));
        let o = orient(&a, &b, &c);
        assert_eq!(orient(&rotate120(&a), &rotate120(&b), &rotate120(&c)), o);
    }

    #[test]
    fn expand_wing_basic() {
        let wing = PointSet::from_coords(vec![(Scalar::from_int(1), Scalar::from_int(0))]);
        let full = expand_wing(&wing).unwrap();
        assert_eq!(full.len(), 3);
        assert_eq!(full.point(1).x, parse_scalar("-1/2").unwrap());
        assert!(verify_3_symmetric(&full, (&Scalar::zero(), &Scalar::zero())));

        // a wing containing the origin collapses onto itself
        let bad = PointSet::from_coords(vec![(Scalar::zero(), Scalar::zero())]);
        assert_eq!(expand_wing(&bad), Err(GeomError::DuplicatePoint(1, 2)));

        let empty = PointSet::from_coords(vec![]);
        assert_eq!(expand_wing(&empty), Err(GeomError::EmptyWing));
    }

    #[test]
    fn square_is_not_3_symmetric() {
        let square = PointSet::from_coords(
            [(1, 1), (-1, 1), (-1, -1), (1, -1)]
                .iter()
                .map(|&(x, y)| (Scalar::from_int(x), Scalar::from_int(y)))
                .collect(),
        );
        assert!(!verify_3_symmetric(&square, (&Scalar::zero(), &Scalar::zero())));
    }

    #[test]
    fn general_position_and_slope_checks() {
        let good = PointSet::from_coords(
            [(0, 0), (5, 1), (2, 7), (-3, 4)]
                .iter()
                .map(|&(x, y)| (Scalar::from_int(x), Scalar::from_int(y)))
                .collect(),
        );
        assert!(good.check_general_position().is_ok());

        let collinear = PointSet::from_coords(
            [(0, 0), (1, 1), (2, 2), (5, 0)]
                .iter()
                .map(|&(x, y)| (Scalar::from_int(x), Scalar::from_int(y)))
                .collect(),
        );
        assert_eq!(
            collinear.check_general_position(),
            Err(GeomError::CollinearTriple(1, 2, 3))
        );

        // axis-aligned square: opposite sides are parallel
        let square = PointSet::from_coords(
            [(0, 0), (1, 0), (0, 1), (1, 1)]
                .iter()
                .map(|&(x, y)| (Scalar::from_int(x), Scalar::from_int(y)))
                .collect(),
        );
        assert!(square.check_distinct_spanned_slopes().is_err());
        assert!(good.check_distinct_spanned_slopes().is_ok());
    }

    #[test]
    fn duplicate_labels_rejected() {
        let pts = vec![pt(0, 0, 1), pt(1, 0, 1)];
        assert_eq!(
            PointSet::new(pts).err(),
            Some(GeomError::DuplicateLabel(1))
        );
    }
}
