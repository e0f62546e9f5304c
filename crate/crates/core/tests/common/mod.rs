//! Shared test support: seeded random point sets and construction specs.

use rand::Rng;
use rcn_core::construction::{
    find_weighted_halving_direction, validate, ClusterModel, ConstructionSpec, PreHalvingLine,
};
use rcn_core::geom::PointSet;
use rcn_core::scalar::{Rat, Scalar};
use std::collections::BTreeMap;

pub fn int_set(coords: &[(i64, i64)]) -> PointSet {
    PointSet::from_coords(
        coords
            .iter()
            .map(|&(x, y)| (Scalar::from_int(x), Scalar::from_int(y)))
            .collect(),
    )
}

/// Random integer point set in general position.
pub fn random_general_position_set(rng: &mut impl Rng, n: usize, span: i64) -> PointSet {
    loop {
        let mut coords: Vec<(i64, i64)> = Vec::new();
        while coords.len() < n {
            let c = (rng.gen_range(-span..=span), rng.gen_range(-span..=span));
            if !coords.contains(&c) {
                coords.push(c);
            }
        }
        let set = int_set(&coords);
        if set.check_general_position().is_ok() {
            return set;
        }
    }
}

fn random_model(rng: &mut impl Rng, size: usize) -> ClusterModel {
    loop {
        let mut coords: Vec<(i64, i64)> = Vec::new();
        while coords.len() < size {
            let c = (rng.gen_range(0..=40i64), rng.gen_range(0..=40i64));
            if !coords.iter().any(|&(x, _)| x == c.0) {
                coords.push(c);
            }
        }
        let model = ClusterModel::from_ints("rand", &coords);
        let set = int_set(&coords);
        if size < 3 || set.check_general_position().is_ok() {
            return model;
        }
    }
}

/// A random valid construction spec: base of 4..=8 points, cluster sizes
/// up to 4, a mix of simple and splitting lines (no two clusters split
/// each other), total size at most `max_n`.
pub fn random_spec(rng: &mut impl Rng, max_n: usize) -> ConstructionSpec {
    'outer: loop {
        let m = rng.gen_range(4..=8usize);
        let base = random_general_position_set(rng, m, 200);
        let mut sizes: Vec<usize> = (0..m)
            .map(|_| *[1, 1, 2, 2, 3, 4].get(rng.gen_range(0..6)).unwrap())
            .collect();
        while sizes.iter().sum::<usize>() > max_n {
            let i = rng.gen_range(0..m);
            if sizes[i] > 1 {
                sizes[i] -= 1;
            }
        }
        if !sizes.iter().any(|&s| s > 1) {
            continue;
        }
        let n: usize = sizes.iter().sum();

        let mut models = BTreeMap::new();
        for (i, &s) in sizes.iter().enumerate() {
            if s == 4 || (s == 3 && rng.gen_bool(0.5)) {
                models.insert(i + 1, random_model(rng, s));
            }
        }

        let mut lines: BTreeMap<usize, PreHalvingLine> = BTreeMap::new();
        let mut sigma: BTreeMap<usize, usize> = BTreeMap::new();
        let weights: Vec<u64> = sizes.iter().map(|&s| s as u64).collect();
        for i in 1..=m {
            if sizes[i - 1] <= 1 {
                continue;
            }
            let anchor = base.point(i - 1);
            // candidate split targets: sized >= 2, balance within bounds,
            // and never mutual
            let mut split_candidates: Vec<usize> = Vec::new();
            for j in 1..=m {
                if j == i || sizes[j - 1] < 2 || sigma.get(&j) == Some(&i) {
                    continue;
                }
                let target = base.point(j - 1);
                let dir = (&target.x - &anchor.x, &target.y - &anchor.y);
                let mut imbalance = 0i64;
                let mut clean = true;
                for l in 1..=m {
                    if l == i || l == j {
                        continue;
                    }
                    let q = base.point(l - 1);
                    let w = (&q.x - &anchor.x, &q.y - &anchor.y);
                    match (&dir.0 * &w.1 - &dir.1 * &w.0).signum() {
                        s if s > 0 => imbalance += sizes[l - 1] as i64,
                        0 => clean = false,
                        _ => imbalance -= sizes[l - 1] as i64,
                    }
                }
                if clean && imbalance.unsigned_abs() + 1 <= sizes[j - 1] as u64 {
                    split_candidates.push(j);
                }
            }
            let use_split = !split_candidates.is_empty() && rng.gen_bool(0.5);
            if use_split {
                let j = split_candidates[rng.gen_range(0..split_candidates.len())];
                let target = base.point(j - 1);
                let dir = (&target.x - &anchor.x, &target.y - &anchor.y);
                lines.insert(i, PreHalvingLine::splitting(i, dir, j));
                sigma.insert(i, j);
            } else {
                let rest = (n - sizes[i - 1]) as u64;
                match find_weighted_halving_direction(&base, i, &weights, rest.div_ceil(2)) {
                    Some(dir) => {
                        lines.insert(i, PreHalvingLine::simple(i, dir));
                    }
                    None => continue 'outer,
                }
            }
        }
        let spec = ConstructionSpec {
            base,
            sizes,
            models,
            lines,
        };
        if validate(&spec).is_empty() {
            return spec;
        }
    }
}

pub fn unit_scale() -> Rat {
    Rat::from_integer(1.into())
}
