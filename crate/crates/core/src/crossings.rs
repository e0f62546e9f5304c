//! Exact crossing counts: the number of crossings of the complete
//! straight-line graph on a point set equals the number of convex
//! quadrilaterals, counted here by two independent algorithms.

use crate::geom::{
    clear_denominators, cross_sign, orient_ipts, GeomError, IPt, PointSet, Q3,
};
use rayon::prelude::*;
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    /// All C(n,4) quadruples tested for convex position.
    Brute,
    /// C(n,4) minus, for every point, the number of triangles containing it
    /// (angular sweep, O(n^2 log n) in total).
    Triangle,
}

#[derive(Clone, Debug)]
pub struct CrossingReport {
    pub total: u64,
    pub method: CountMethod,
    pub elapsed: Duration,
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Counts convex quadruples by exhausting all quadruples.
pub fn count_crossings_brute(set: &PointSet) -> Result<CrossingReport, GeomError> {
    let start = Instant::now();
    let pts = clear_denominators(set);
    let n = pts.len();
    let total = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut count = 0u64;
            for j in i + 1..n {
                for k in j + 1..n {
                    let o_ijk = orient_ipts(&pts[i], &pts[j], &pts[k]);
                    if o_ijk == 0 {
                        return Err(GeomError::CollinearTriple(
                            pts[i].label,
                            pts[j].label,
                            pts[k].label,
                        ));
                    }
                    for l in k + 1..n {
                        if convex_with(&pts, i, j, k, l, o_ijk)? {
                            count += 1;
                        }
                    }
                }
            }
            Ok(count)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(CrossingReport {
        total,
        method: CountMethod::Brute,
        elapsed: start.elapsed(),
    })
}

fn convex_with(
    pts: &[IPt],
    i: usize,
    j: usize,
    k: usize,
    l: usize,
    o_ijk: i32,
) -> Result<bool, GeomError> {
    let signs = [
        o_ijk,
        orient_ipts(&pts[i], &pts[j], &pts[l]),
        orient_ipts(&pts[i], &pts[k], &pts[l]),
        orient_ipts(&pts[j], &pts[k], &pts[l]),
    ];
    if signs.iter().any(|&s| s == 0) {
        return Err(GeomError::DegenerateQuadruple([
            pts[i].label,
            pts[j].label,
            pts[k].label,
            pts[l].label,
        ]));
    }
    Ok(signs.iter().filter(|&&s| s > 0).count() % 2 == 0)
}

/// Counts convex quadruples as C(n,4) minus the number of (point, triangle)
/// incidences: every non-convex quadruple has exactly one point interior to
/// the triangle of the other three.
pub fn count_crossings_fast(set: &PointSet) -> Result<CrossingReport, GeomError> {
    let start = Instant::now();
    let pts = clear_denominators(set);
    let n = pts.len();
    if n < 4 {
        return Ok(CrossingReport {
            total: 0,
            method: CountMethod::Triangle,
            elapsed: start.elapsed(),
        });
    }
    let interior: u64 = (0..n)
        .into_par_iter()
        .map(|c| triangles_containing(&pts, c))
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(CrossingReport {
        total: binom(n as u64, 4) - interior,
        method: CountMethod::Triangle,
        elapsed: start.elapsed(),
    })
}

/// Number of triangles of `pts \ {center}` that strictly contain the
/// center point, via an exact angular sweep.
fn triangles_containing(pts: &[IPt], center: usize) -> Result<u64, GeomError> {
    let p = &pts[center];
    let mut dirs: Vec<(Q3, Q3, u32)> = Vec::with_capacity(pts.len() - 1);
    for (qi, q) in pts.iter().enumerate() {
        if qi == center {
            continue;
        }
        dirs.push((q.x.sub(&p.x), q.y.sub(&p.y), q.label));
    }
    let m = dirs.len();

    // Any two directions that are parallel (same or opposite) witness a
    // collinear triple through the center.
    let mut canon: Vec<(Q3, Q3, u32)> = dirs
        .iter()
        .map(|(dx, dy, label)| {
            let sy = dy.sign();
            if sy < 0 || (sy == 0 && dx.sign() < 0) {
                (dx.neg(), dy.neg(), *label)
            } else {
                (dx.clone(), dy.clone(), *label)
            }
        })
        .collect();
    canon.sort_by(|a, b| crate::geom::compare_slopes(&a.0, &a.1, &b.0, &b.1));
    for w in canon.windows(2) {
        if cross_sign(&w[0].0, &w[0].1, &w[1].0, &w[1].1) == 0 {
            return Err(GeomError::CollinearTriple(p.label, w[0].2, w[1].2));
        }
    }

    // Full-circle angular order: upper half plane first, then lower.
    dirs.sort_by(|a, b| {
        let ha = half_of(&a.0, &a.1);
        let hb = half_of(&b.0, &b.1);
        ha.cmp(&hb).then_with(|| {
            match cross_sign(&a.0, &a.1, &b.0, &b.1) {
                s if s > 0 => std::cmp::Ordering::Less,
                0 => std::cmp::Ordering::Equal,
                _ => std::cmp::Ordering::Greater,
            }
        })
    });

    // For each direction, count the others strictly within the open half
    // turn counterclockwise after it. Triples not containing p are exactly
    // those inside an open half plane through p, counted once at their
    // angularly first member.
    let mut outside: u64 = 0;
    let mut t = 0usize;
    for a in 0..m {
        if t < a + 1 {
            t = a + 1;
        }
        while t - a < m
            && cross_sign(&dirs[a].0, &dirs[a].1, &dirs[t % m].0, &dirs[t % m].1) > 0
        {
            t += 1;
        }
        outside += binom((t - a - 1) as u64, 2);
    }
    Ok(binom(m as u64, 3) - outside)
}

fn half_of(dx: &Q3, dy: &Q3) -> u8 {
    let sy = dy.sign();
    if sy > 0 || (sy == 0 && dx.sign() > 0) {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;
    use crate::scalar::Scalar;

    fn set_of(coords: &[(i64, i64)]) -> PointSet {
        PointSet::from_coords(
            coords
                .iter()
                .map(|&(x, y)| (Scalar::from_int(x), Scalar::from_int(y)))
                .collect(),
        )
    }

    fn convex_pentagon() -> PointSet {
        set_of(&[(0, 0), (10, 1), (14, 9), (5, 15), (-4, 8)])
    }

    #[test]
    fn four_points_convex_position() {
        let s = set_of(&[(0, 0), (5, 0), (6, 4), (1, 5)]);
        assert_eq!(count_crossings_brute(&s).unwrap().total, 1);
        assert_eq!(count_crossings_fast(&s).unwrap().total, 1);
    }

    #[test]
    fn pentagon_has_five() {
        let s = convex_pentagon();
        assert_eq!(count_crossings_brute(&s).unwrap().total, 5);
        assert_eq!(count_crossings_fast(&s).unwrap().total, 5);
    }

    #[test]
    fn interior_point_reduces_count() {
        let s = set_of(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)]);
        let brute = count_crossings_brute(&s).unwrap().total;
        assert_eq!(brute, count_crossings_fast(&s).unwrap().total);
        assert!(brute < 5);
    }

    #[test]
    fn collinear_input_is_reported() {
        let s = set_of(&[(0, 0), (1, 1), (2, 2), (5, 0), (9, 4)]);
        assert!(count_crossings_brute(&s).is_err());
        assert!(count_crossings_fast(&s).is_err());
    }

    #[test]
    fn counts_agree_on_seeded_random_sets() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        let mut done = 0;
        while done < 100 {
            let n = rng.gen_range(5..=15);
            let mut coords: Vec<(i64, i64)> = Vec::new();
            while coords.len() < n {
                let c = (rng.gen_range(-50i64..=50), rng.gen_range(-50i64..=50));
                if !coords.contains(&c) {
                    coords.push(c);
                }
            }
            let s = set_of(&coords);
            if s.check_general_position().is_err() {
                continue;
            }
            let b = count_crossings_brute(&s).unwrap().total;
            let f = count_crossings_fast(&s).unwrap().total;
            assert_eq!(b, f, "mismatch on {:?}", coords);
            done += 1;
        }
    }

    #[test]
    fn invariant_under_rotation_translation_scaling() {
        let s = convex_pentagon();
        let base = count_crossings_brute(&s).unwrap().total;

        let rotated = PointSet::from_coords(
            s.points()
                .iter()
                .map(|p| {
                    let r = crate::geom::rotate120(p);
                    (r.x, r.y)
                })
                .collect(),
        );
        assert_eq!(count_crossings_brute(&rotated).unwrap().total, base);

        let offset = Scalar::from_int(1000);
        let scale = crate::scalar::parse_scalar("7/3").unwrap();
        let moved = PointSet::from_coords(
            s.points()
                .iter()
                .map(|p| ((&p.x + &offset) * &scale, (&p.y - &offset) * &scale))
                .collect(),
        );
        assert_eq!(count_crossings_brute(&moved).unwrap().total, base);
    }

    #[test]
    fn monotone_under_point_addition() {
        let s = convex_pentagon();
        let base = count_crossings_fast(&s).unwrap().total;
        let mut coords: Vec<(Scalar, Scalar)> = s
            .points()
            .iter()
            .map(|p| (p.x.clone(), p.y.clone()))
            .collect();
        coords.push((Scalar::from_int(7), Scalar::from_int(6)));
        let bigger = PointSet::from_coords(coords);
        bigger.check_general_position().unwrap();
        assert!(count_crossings_fast(&bigger).unwrap().total >= base);
    }

    #[test]
    fn errors_carry_input_labels() {
        let pts = vec![
            Point::from_ints(0, 0, 10),
            Point::from_ints(1, 0, 20),
            Point::from_ints(2, 0, 30),
            Point::from_ints(0, 5, 40),
        ];
        let s = PointSet::new(pts).unwrap();
        match count_crossings_brute(&s) {
            Err(GeomError::CollinearTriple(a, b, c)) => {
                assert_eq!((a, b, c), (10, 20, 30));
            }
            other => panic!("expected collinear error, got {:?}", other),
        }
    }
}
