//! Doubling a point set with an odd number of points: every point becomes
//! a 2-point cluster along a halving line, which multiplies the crossing
//! count by 16 plus an explicit cubic term. Iterating the construction
//! yields upper bounds on the rectilinear crossing number constant.

use crate::construction::{
    count_formula, find_weighted_halving_direction, synthesize, ConstructionError,
    ConstructionSpec, PreHalvingLine, SynthesisError,
};
use crate::crossings::count_crossings_fast;
use crate::geom::{GeomError, PointSet};
use crate::scalar::Rat;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, HashSet};

#[derive(Debug, thiserror::Error)]
pub enum DoublingError {
    #[error("point count {0} must be odd and at least 3")]
    BadSize(usize),
    #[error("no halving direction through point {index}")]
    NoHalvingDirection { index: usize },
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Synthesis(#[from] SynthesisError),
    #[error("formula count {formula} disagrees with doubling prediction {predicted}")]
    FormulaMismatch { formula: u64, predicted: u64 },
    #[error("halving matching failed: {0}")]
    MatchingFailed(String),
}

/// A simple line through point `index` leaving (m-1)/2 points on each
/// side, aimed strictly inside an angular gap.
pub fn find_halving_line(set: &PointSet, index: usize) -> Result<PreHalvingLine, DoublingError> {
    let m = set.len();
    if m < 3 || m % 2 == 0 {
        return Err(DoublingError::BadSize(m));
    }
    let weights = vec![1u64; m];
    let dir = find_weighted_halving_direction(set, index, &weights, (m as u64 - 1) / 2)
        .ok_or(DoublingError::NoHalvingDirection { index })?;
    Ok(PreHalvingLine::simple(index, dir))
}

/// The crossing count gained by doubling: 16 cr + (m/2)(2m^2 - 7m + 5).
pub fn doubling_prediction(m: u64, crossings: u64) -> u64 {
    16 * crossings + m * (m - 1) / 2 * (2 * m - 5)
}

/// Builds the all-pairs doubling spec of an odd set and its predicted
/// crossing count; the count formula is evaluated and must agree.
pub fn double(set: &PointSet) -> Result<(ConstructionSpec, u64), DoublingError> {
    let m = set.len();
    if m < 3 || m % 2 == 0 {
        return Err(DoublingError::BadSize(m));
    }
    let crossings = count_crossings_fast(set)?.total;
    let mut lines = BTreeMap::new();
    for i in 1..=m {
        lines.insert(i, find_halving_line(set, i)?);
    }
    let spec = ConstructionSpec {
        base: set.clone(),
        sizes: vec![2; m],
        models: BTreeMap::new(),
        lines,
    };
    let predicted = doubling_prediction(m as u64, crossings);
    let formula = count_formula(&spec)?.total;
    if formula != predicted {
        return Err(DoublingError::FormulaMismatch { formula, predicted });
    }
    Ok((spec, predicted))
}

/// Upper bound on the rectilinear crossing number constant obtained by
/// iterated doubling of an m-point drawing with the given crossing count:
/// (24 cr + 3m^3 - 7m^2 + (30/7) m) / m^4, exact.
pub fn crossing_constant_bound(m: u64, crossings: u64) -> Rat {
    let m = BigInt::from(m);
    let num = BigInt::from(168u32) * BigInt::from(crossings)
        + 21 * m.pow(3)
        - 49 * m.pow(2)
        + 30 * &m;
    Rat::new(num, BigInt::from(7) * m.pow(4))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerStep {
    pub step: u32,
    pub n: u64,
    pub crossings: BigInt,
}

/// Crossing counts along the doubling iteration n = 2^k m, computed by
/// the step recursion and certified against the closed form
/// Q n^4 - n^3/8 + 7 n^2/24 - 5 n/28 at every step.
#[derive(Clone, Debug)]
pub struct IterationLedger {
    pub base_m: u64,
    pub base_crossings: u64,
    pub steps: Vec<LedgerStep>,
}

pub fn iteration_ledger(
    m: u64,
    crossings: u64,
    steps: u32,
) -> Result<IterationLedger, DoublingError> {
    if m < 3 || m % 2 == 0 {
        return Err(DoublingError::BadSize(m as usize));
    }
    let q = crossing_constant_bound(m, crossings) / Rat::from_integer(BigInt::from(24));
    let closed_form = |n: u64| -> Rat {
        let n = Rat::from_integer(BigInt::from(n));
        &q * &n * &n * &n * &n - &n * &n * &n / Rat::from_integer(BigInt::from(8))
            + Rat::new(BigInt::from(7), BigInt::from(24)) * &n * &n
            - Rat::new(BigInt::from(5), BigInt::from(28)) * &n
    };

    let mut ledger = IterationLedger {
        base_m: m,
        base_crossings: crossings,
        steps: vec![LedgerStep {
            step: 0,
            n: m,
            crossings: BigInt::from(crossings),
        }],
    };
    let mut cur = BigInt::from(crossings);
    let mut size = BigInt::from(m);
    for k in 1..=steps {
        let gain = &size * (&size - 1u32) / 2u32 * (2u32 * &size - 5u32);
        cur = 16u32 * cur + gain;
        size *= 2u32;
        let n_u64 = u64::try_from(&size).expect("ledger size fits in u64");
        let check = closed_form(n_u64);
        debug_assert!(check.is_integer());
        if check != Rat::from_integer(cur.clone()) {
            return Err(DoublingError::MatchingFailed(format!(
                "closed form disagreed with recursion at step {k}"
            )));
        }
        ledger.steps.push(LedgerStep {
            step: k,
            n: n_u64,
            crossings: cur.clone(),
        });
    }
    Ok(ledger)
}

/// A halving matching of a doubled set: every point is assigned a
/// distinct halving line through it, named by the two point labels that
/// span the line.
#[derive(Clone, Debug)]
pub struct HalvingMatching {
    pub assignments: Vec<(u32, (u32, u32))>,
}

/// Certifies the halving matching of a synthesized doubled set whose
/// clusters are the given label pairs. The second halving line of each
/// pair is found by rotating the cluster line about its first point until
/// it meets another point.
pub fn halving_matching(
    set: &PointSet,
    cluster_pairs: &[(u32, u32)],
) -> Result<HalvingMatching, DoublingError> {
    let n = set.len();
    let half = (n - 2) as u64 / 2;
    let fail = |msg: String| Err(DoublingError::MatchingFailed(msg));
    let mut assignments: Vec<(u32, (u32, u32))> = Vec::with_capacity(n);

    for &(la, lb) in cluster_pairs {
        let a = set.by_label(la)?;
        let b = set.by_label(lb)?;
        // direct the cluster line to an angle in [0, pi)
        let mut d = (&b.x - &a.x, &b.y - &a.y);
        let flipped = {
            let sy = d.1.signum();
            sy < 0 || (sy == 0 && d.0.signum() < 0)
        };
        if flipped {
            d = (-&d.0, -&d.1);
        }
        let (first, second) = if flipped { (b, a) } else { (a, b) };

        // angular successor around `first`: smallest positive rotation of
        // the full line (angles mod pi)
        let mut best: Option<((crate::scalar::Scalar, crate::scalar::Scalar), u32)> = None;
        for q in set.points() {
            if q.label == la || q.label == lb {
                continue;
            }
            let w = (&q.x - &first.x, &q.y - &first.y);
            let cross = (&d.0 * &w.1 - &d.1 * &w.0).signum();
            if cross == 0 {
                return fail(format!(
                    "point {} collinear with cluster pair ({la},{lb})",
                    q.label
                ));
            }
            let w = if cross > 0 { w } else { (-&w.0, -&w.1) };
            match &best {
                None => best = Some((w, q.label)),
                Some((bw, _)) => {
                    let c = (&w.0 * &bw.1 - &w.1 * &bw.0).signum();
                    if c > 0 {
                        best = Some((w, q.label));
                    } else if c == 0 {
                        return fail("two candidates at the same rotation angle".to_string());
                    }
                }
            }
        }
        let (w, q_label) = best.ok_or_else(|| {
            DoublingError::MatchingFailed("no rotation candidate".to_string())
        })?;
        let q = set.by_label(q_label)?;

        // is q before `first` in the rotated line?
        let ahead = (&w.0 * &(&q.x - &first.x) + &w.1 * &(&q.y - &first.y)).signum();
        let (line_owner, partner) = if ahead < 0 {
            (first.label, q_label)
        } else {
            (second.label, q_label)
        };
        let other = if line_owner == first.label {
            second.label
        } else {
            first.label
        };
        assignments.push((line_owner, (line_owner.min(partner), line_owner.max(partner))));
        assignments.push((other, (la.min(lb), la.max(lb))));
    }

    // verify: each line passes through its point, halves the rest, and no
    // two points share a line
    let mut seen: HashSet<(u32, u32)> = HashSet::new();
    for &(label, (pa, pb)) in &assignments {
        if !seen.insert((pa, pb)) {
            return fail(format!("line ({pa},{pb}) assigned twice"));
        }
        if label != pa && label != pb {
            return fail(format!("line ({pa},{pb}) does not pass through {label}"));
        }
        let a = set.by_label(pa)?;
        let b = set.by_label(pb)?;
        let d = (&b.x - &a.x, &b.y - &a.y);
        let mut left = 0u64;
        let mut right = 0u64;
        for q in set.points() {
            if q.label == pa || q.label == pb {
                continue;
            }
            let w = (&q.x - &a.x, &q.y - &a.y);
            match (&d.0 * &w.1 - &d.1 * &w.0).signum() {
                s if s > 0 => left += 1,
                0 => return fail(format!("third point {} on line ({pa},{pb})", q.label)),
                _ => right += 1,
            }
        }
        if left != half || right != half {
            return fail(format!(
                "line ({pa},{pb}) splits {left}/{right}, want {half}/{half}"
            ));
        }
    }
    Ok(HalvingMatching { assignments })
}

/// Doubles an odd set, synthesizes coordinates, and returns the point
/// set together with its cluster label pairs (labels 2i-1, 2i).
pub fn double_with_coordinates(
    set: &PointSet,
    scale: &Rat,
) -> Result<(PointSet, Vec<(u32, u32)>, u64), DoublingError> {
    let (spec, predicted) = double(set)?;
    let doubled = synthesize(&spec, scale)?;
    let pairs: Vec<(u32, u32)> = (1..=set.len() as u32)
        .map(|i| (2 * i - 1, 2 * i))
        .collect();
    Ok((doubled, pairs, predicted))
}

pub fn rat_less_than(r: &Rat, num: i64, den: i64) -> bool {
    r - Rat::new(BigInt::from(num), BigInt::from(den)) < Rat::from_integer(BigInt::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossings::count_crossings_brute;
    use crate::scalar::Scalar;

    fn set_of(coords: &[(i64, i64)]) -> PointSet {
        PointSet::from_coords(
            coords
                .iter()
                .map(|&(x, y)| (Scalar::from_int(x), Scalar::from_int(y)))
                .collect(),
        )
    }

    fn triangle() -> PointSet {
        set_of(&[(0, 0), (10, 1), (4, 9)])
    }

    fn convex_pentagon() -> PointSet {
        set_of(&[(0, 0), (10, 1), (14, 9), (5, 15), (-4, 8)])
    }

    #[test]
    fn halving_line_splits_evenly() {
        for set in [triangle(), convex_pentagon()] {
            let m = set.len();
            for i in 1..=m {
                let line = find_halving_line(&set, i).unwrap();
                let anchor = set.point(i - 1);
                let mut left = 0;
                let mut right = 0;
                for (j, q) in set.points().iter().enumerate() {
                    if j + 1 == i {
                        continue;
                    }
                    let w = (&q.x - &anchor.x, &q.y - &anchor.y);
                    match (&line.dir.0 * &w.1 - &line.dir.1 * &w.0).signum() {
                        s if s > 0 => left += 1,
                        0 => panic!("halving line through a second point"),
                        _ => right += 1,
                    }
                }
                assert_eq!(left, (m - 1) / 2);
                assert_eq!(right, (m - 1) / 2);
            }
        }
    }

    #[test]
    fn doubling_predictions() {
        assert_eq!(doubling_prediction(3, 0), 3);
        assert_eq!(doubling_prediction(5, 5), 130);
        // m = 51 with 91452 crossings: 16 * 91452 + 1275 * 97
        assert_eq!(doubling_prediction(51, 91452), 1586907);
    }

    #[test]
    fn double_triangle_and_count() {
        let (_, predicted) = double(&triangle()).unwrap();
        assert_eq!(predicted, 3);
        let (doubled, pairs, _) =
            double_with_coordinates(&triangle(), &Rat::from_integer(1.into())).unwrap();
        assert_eq!(doubled.len(), 6);
        assert_eq!(count_crossings_brute(&doubled).unwrap().total, 3);
        let matching = halving_matching(&doubled, &pairs).unwrap();
        assert_eq!(matching.assignments.len(), 6);
    }

    #[test]
    fn double_pentagon_and_count() {
        let (doubled, pairs, predicted) =
            double_with_coordinates(&convex_pentagon(), &Rat::from_integer(1.into())).unwrap();
        assert_eq!(predicted, 130);
        assert_eq!(count_crossings_brute(&doubled).unwrap().total, 130);
        halving_matching(&doubled, &pairs).unwrap();
    }

    #[test]
    fn constant_bound_values() {
        // the record base: exact fraction and strict decimal bound
        let q = crossing_constant_bound(315, 152210640);
        assert_eq!(
            q,
            Rat::new(BigInt::from(83247328u64), BigInt::from(218791125u64))
        );
        assert!(rat_less_than(&q, 380488, 1_000_000));

        // a triangle gives (81 - 63 + 90/7) / 81 = 8/21
        assert_eq!(
            crossing_constant_bound(3, 0),
            Rat::new(BigInt::from(8), BigInt::from(21))
        );

        // monotone in the crossing count
        assert!(crossing_constant_bound(7, 10) > crossing_constant_bound(7, 9));
    }

    #[test]
    fn ledger_matches_closed_form() {
        let ledger = iteration_ledger(3, 0, 5).unwrap();
        let ns: Vec<u64> = ledger.steps.iter().map(|s| s.n).collect();
        assert_eq!(ns, vec![3, 6, 12, 24, 48, 96]);
        let crossings: Vec<u64> = ledger
            .steps
            .iter()
            .map(|s| u64::try_from(&s.crossings).unwrap())
            .collect();
        // K6 and K12 doubled from the triangle hit the known optima
        assert_eq!(&crossings[..3], &[0, 3, 153]);

        // the normalized count climbs toward the limit coefficient from
        // below, and the recomputed bound is exactly invariant: applying
        // the bound formula to any ledger row returns the base bound
        let q = crossing_constant_bound(3, 0);
        let mut prev: Option<Rat> = None;
        for step in &ledger.steps[1..] {
            let n = step.n;
            let quads = Rat::from_integer(
                BigInt::from(n) * BigInt::from(n - 1) * BigInt::from(n - 2)
                    * BigInt::from(n - 3)
                    / BigInt::from(24),
            );
            let ratio = Rat::from_integer(step.crossings.clone()) / quads;
            assert!(ratio < q);
            if let Some(p) = prev {
                assert!(ratio > p);
            }
            prev = Some(ratio);
            let cr = u64::try_from(&step.crossings).unwrap();
            assert_eq!(crossing_constant_bound(n, cr), q);
        }
    }

    #[test]
    fn even_sizes_rejected() {
        let square = set_of(&[(0, 0), (10, 1), (11, 12), (1, 9)]);
        assert!(matches!(double(&square), Err(DoublingError::BadSize(4))));
        assert!(iteration_ledger(4, 1, 2).is_err());
    }
}
