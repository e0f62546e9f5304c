//! Embedded record point sets and construction recipes, with loaders and
//! integrity verification against their published crossing counts.

mod data;

use crate::construction::{
    count_formula, validate, ClusterModel, ConstructionSpec, PreHalvingLine,
};
use crate::crossings::count_crossings_fast;
use crate::geom::{expand_wing, rotate120_xy, rotate240_xy, verify_3_symmetric, Point, PointSet};
use crate::scalar::{parse_rat, parse_scalar, Scalar};
use data::{BaseId, LineSpec, RecipeData};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryKind {
    Wing,
    FullSet,
    Recipe,
}

#[derive(Clone, Debug)]
pub enum Payload {
    /// A wing together with its 3-symmetric expansion.
    Wing { wing: PointSet, expanded: PointSet },
    FullSet(PointSet),
    Recipe(ConstructionSpec),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub kind: EntryKind,
    pub expected_crossings: Option<u64>,
    pub payload: Payload,
}

impl CatalogEntry {
    /// The point set an entry denotes (the expanded set for wings); none
    /// for recipes.
    pub fn point_set(&self) -> Option<&PointSet> {
        match &self.payload {
            Payload::Wing { expanded, .. } => Some(expanded),
            Payload::FullSet(set) => Some(set),
            Payload::Recipe(_) => None,
        }
    }

    pub fn spec(&self) -> Option<&ConstructionSpec> {
        match &self.payload {
            Payload::Recipe(spec) => Some(spec),
            _ => None,
        }
    }

    pub fn n(&self) -> usize {
        match &self.payload {
            Payload::Wing { expanded, .. } => expanded.len(),
            Payload::FullSet(set) => set.len(),
            Payload::Recipe(spec) => spec.total_points(),
        }
    }
}

fn wing_point_set(coords: &[(&str, &str)]) -> PointSet {
    PointSet::from_coords(
        coords
            .iter()
            .map(|&(x, y)| {
                (
                    parse_scalar(x).expect("catalog wing coordinate"),
                    parse_scalar(y).expect("catalog wing coordinate"),
                )
            })
            .collect(),
    )
}

fn base_point_set(base: &data::BaseData) -> PointSet {
    let mut coords: BTreeMap<usize, (Scalar, Scalar)> = BTreeMap::new();
    for &(label, x, y) in base.given {
        coords.insert(
            label,
            (
                parse_scalar(x).expect("catalog base coordinate"),
                parse_scalar(y).expect("catalog base coordinate"),
            ),
        );
    }
    for &(label, source, power) in base.rotated {
        let (sx, sy) = coords.get(&source).expect("rotation source defined first");
        let rotated = match power {
            1 => rotate120_xy(sx, sy),
            _ => rotate240_xy(sx, sy),
        };
        coords.insert(label, rotated);
    }
    let n = coords.len();
    let points = (1..=n)
        .map(|label| {
            let (x, y) = coords.remove(&label).expect("contiguous labels");
            Point::new(x, y, label as u32)
        })
        .collect();
    PointSet::new(points).expect("unique labels")
}

fn model_by_id(id: &str) -> ClusterModel {
    let (_, coords) = data::MODELS
        .iter()
        .find(|(name, _)| *name == id)
        .expect("known model id");
    orient_for_fewest_crossings(ClusterModel::from_ints(id, coords))
}

/// Cluster copies may enter the construction mirrored; the published
/// counts use the orientation that sends the smaller concavity class
/// toward the bigger semiplane, so models are normalized to have at most
/// as many concave-up triples as concave-down ones.
fn orient_for_fewest_crossings(model: ClusterModel) -> ClusterModel {
    let (up, down) = crate::construction::concavity_counts(&model).expect("catalog model");
    if up <= down {
        model
    } else {
        ClusterModel::new(
            model.id.clone(),
            model.points.into_iter().map(|(x, y)| (x, -y)).collect(),
        )
    }
}

/// The wing classes of a base configuration: given points form one class,
/// their first rotations the second, the second rotations the third.
pub fn base_wing_partition(name: &str) -> Result<crate::sequence::Partition3, CatalogError> {
    let base = match name {
        "base30" => &data::BASE30,
        "base51" => &data::BASE51,
        _ => return Err(CatalogError::UnknownName(name.to_string())),
    };
    let a: Vec<u32> = base.given.iter().map(|&(l, _, _)| l as u32).collect();
    let b: Vec<u32> = base
        .rotated
        .iter()
        .filter(|&&(_, _, p)| p == 1)
        .map(|&(l, _, _)| l as u32)
        .collect();
    let c: Vec<u32> = base
        .rotated
        .iter()
        .filter(|&&(_, _, p)| p == 2)
        .map(|&(l, _, _)| l as u32)
        .collect();
    Ok(crate::sequence::Partition3::from_classes(&a, &b, &c).expect("balanced wing classes"))
}

fn recipe_spec(recipe: &RecipeData) -> ConstructionSpec {
    let base = match recipe.base {
        BaseId::Base30 => base_point_set(&data::BASE30),
        BaseId::Base51 => base_point_set(&data::BASE51),
    };
    let m = base.len();
    let mut sizes = vec![1usize; m];
    for &(i, s) in recipe.sizes {
        sizes[i - 1] = s;
    }
    let mut models = BTreeMap::new();
    for &(i, id) in recipe.models {
        let model = model_by_id(id);
        assert_eq!(model.len(), sizes[i - 1], "model size for cluster {i}");
        models.insert(i, model);
    }

    let side_sum = |anchor: &Point, dir: &(Scalar, Scalar)| -> i64 {
        let mut sum = 0i64;
        for (j, q) in base.points().iter().enumerate() {
            if std::ptr::eq(q, anchor) {
                continue;
            }
            let w = (&q.x - &anchor.x, &q.y - &anchor.y);
            match (&dir.0 * &w.1 - &dir.1 * &w.0).signum() {
                s if s > 0 => sum += sizes[j] as i64,
                s if s < 0 => sum -= sizes[j] as i64,
                _ => {}
            }
        }
        sum
    };

    let mut lines: BTreeMap<usize, PreHalvingLine> = BTreeMap::new();
    // direct lines first, rotated images second (they may reference
    // lines that appear later in the list)
    for spec in recipe.lines {
        match *spec {
            LineSpec::Slope(i, slope) => {
                let anchor = base.point(i - 1);
                let mut dir = (
                    Scalar::one(),
                    Scalar::from_rat(parse_rat(slope).expect("catalog slope")),
                );
                if side_sum(anchor, &dir) < 0 {
                    dir = (-&dir.0, -&dir.1);
                }
                lines.insert(i, PreHalvingLine::simple(i, dir));
            }
            LineSpec::Through(i, j) => {
                let a = base.point(i - 1);
                let b = base.point(j - 1);
                let dir = (&b.x - &a.x, &b.y - &a.y);
                lines.insert(i, PreHalvingLine::splitting(i, dir, j));
            }
            LineSpec::Rot(..) => {}
        }
    }
    let coord_label: BTreeMap<(Scalar, Scalar), usize> = base
        .points()
        .iter()
        .map(|p| ((p.x.clone(), p.y.clone()), p.label as usize))
        .collect();
    for spec in recipe.lines {
        if let LineSpec::Rot(i, of, power) = *spec {
            let source = lines.get(&of).expect("rotation source resolved").clone();
            let rotate_xy = |x: &Scalar, y: &Scalar| match power {
                1 => rotate120_xy(x, y),
                _ => rotate240_xy(x, y),
            };
            let src_anchor = base.point(of - 1);
            let anchor_image = rotate_xy(&src_anchor.x, &src_anchor.y);
            assert_eq!(
                coord_label.get(&anchor_image),
                Some(&i),
                "{}: rotated line {of} is anchored at {i}",
                recipe.name
            );
            let dir = {
                let (dx, dy) = rotate_xy(&source.dir.0, &source.dir.1);
                (dx, dy)
            };
            let line = match source.target() {
                None => PreHalvingLine::simple(i, dir),
                Some(t) => {
                    let tp = base.point(t - 1);
                    let t_image = rotate_xy(&tp.x, &tp.y);
                    let target = *coord_label
                        .get(&t_image)
                        .expect("rotated split target is a base point");
                    PreHalvingLine::splitting(i, dir, target)
                }
            };
            lines.insert(i, line);
        }
    }

    let spec = ConstructionSpec {
        base,
        sizes,
        models,
        lines,
    };
    debug_assert_eq!(
        spec.total_points(),
        recipe.name[1..].parse::<usize>().expect("recipe name Kn"),
        "cluster sizes of {} sum to its n",
        recipe.name
    );
    spec
}

fn wing_names() -> Vec<(&'static str, usize, Option<u64>)> {
    let mut out = Vec::new();
    for (i, &count) in data::K24_PREFIX_CROSSINGS.iter().enumerate() {
        let name: &'static str = match i + 1 {
            1 => "K3",
            2 => "K6",
            3 => "K9",
            4 => "K12",
            5 => "K15",
            6 => "K18",
            7 => "K21",
            _ => "K24",
        };
        out.push((name, i + 1, Some(count)));
    }
    out
}

/// All entry names, in report order.
pub fn names() -> Vec<&'static str> {
    let mut out: Vec<&'static str> = wing_names().iter().map(|&(n, _, _)| n).collect();
    out.extend(["K42", "K48", "K51", "K54", "K57", "base30", "base51"]);
    out.extend(data::RECIPES.iter().map(|r| r.name));
    out
}

pub fn load(name: &str) -> Result<CatalogEntry, CatalogError> {
    for (prefix_name, len, expected) in wing_names() {
        if prefix_name == name {
            let wing = wing_point_set(&data::K24_WING[..len]);
            let expanded = expand_wing(&wing).expect("catalog wing expands");
            return Ok(CatalogEntry {
                name: prefix_name,
                kind: EntryKind::Wing,
                expected_crossings: expected,
                payload: Payload::Wing { wing, expanded },
            });
        }
    }
    let full_wing = |name: &'static str,
                     coords: &[(&str, &str)],
                     expected: u64|
     -> CatalogEntry {
        let wing = wing_point_set(coords);
        let expanded = expand_wing(&wing).expect("catalog wing expands");
        CatalogEntry {
            name,
            kind: EntryKind::Wing,
            expected_crossings: Some(expected),
            payload: Payload::Wing { wing, expanded },
        }
    };
    match name {
        "K42" => return Ok(full_wing("K42", data::K42_WING, 40593)),
        "K48" => return Ok(full_wing("K48", data::K48_WING, 71022)),
        "K51" => return Ok(full_wing("K51", data::K51_WING, 91452)),
        "K54" => return Ok(full_wing("K54", data::K54_WING, 115977)),
        "K57" => return Ok(full_wing("K57", data::K57_WING, 145176)),
        "base30" => {
            return Ok(CatalogEntry {
                name: "base30",
                kind: EntryKind::FullSet,
                expected_crossings: Some(9726),
                payload: Payload::FullSet(base_point_set(&data::BASE30)),
            })
        }
        "base51" => {
            return Ok(CatalogEntry {
                name: "base51",
                kind: EntryKind::FullSet,
                expected_crossings: None,
                payload: Payload::FullSet(base_point_set(&data::BASE51)),
            })
        }
        _ => {}
    }
    if let Some(recipe) = data::RECIPES.iter().find(|r| r.name == name) {
        return Ok(CatalogEntry {
            name: recipe.name,
            kind: EntryKind::Recipe,
            expected_crossings: Some(recipe.expected),
            payload: Payload::Recipe(recipe_spec(recipe)),
        });
    }
    Err(CatalogError::UnknownName(name.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyStatus {
    Ok,
    Mismatch,
    Failed(String),
}

#[derive(Clone, Debug)]
pub struct EntryReport {
    pub name: String,
    pub n: usize,
    pub expected: Option<u64>,
    pub computed: Option<u64>,
    pub status: VerifyStatus,
    pub elapsed: Duration,
}

/// Verifies one entry: point sets are counted (and checked for general
/// position; wing expansions additionally for 3-symmetry), recipes are
/// validated and evaluated through the crossing-count formula.
pub fn verify(name: &str) -> Result<EntryReport, CatalogError> {
    let entry = load(name)?;
    let start = Instant::now();
    let mut computed = None;
    let status = (|| {
        match &entry.payload {
            Payload::Wing { expanded, .. } | Payload::FullSet(expanded) => {
                if let Err(e) = expanded.check_general_position() {
                    return VerifyStatus::Failed(format!("general position: {e}"));
                }
                if matches!(entry.kind, EntryKind::Wing)
                    && !verify_3_symmetric(expanded, (&Scalar::zero(), &Scalar::zero()))
                {
                    return VerifyStatus::Failed("expansion is not 3-symmetric".to_string());
                }
                match count_crossings_fast(expanded) {
                    Ok(report) => computed = Some(report.total),
                    Err(e) => return VerifyStatus::Failed(e.to_string()),
                }
            }
            Payload::Recipe(spec) => {
                let violations = validate(spec);
                if !violations.is_empty() {
                    return VerifyStatus::Failed(format!("{} violations", violations.len()));
                }
                match count_formula(spec) {
                    Ok(report) => computed = Some(report.total),
                    Err(e) => return VerifyStatus::Failed(e.to_string()),
                }
            }
        }
        match (entry.expected_crossings, computed) {
            (Some(expected), Some(got)) if expected != got => VerifyStatus::Mismatch,
            _ => VerifyStatus::Ok,
        }
    })();
    Ok(EntryReport {
        name: entry.name.to_string(),
        n: entry.n(),
        expected: entry.expected_crossings,
        computed,
        status,
        elapsed: start.elapsed(),
    })
}

/// Verifies every catalog entry, in parallel.
pub fn verify_all() -> Vec<EntryReport> {
    let all = names();
    all.par_iter()
        .map(|name| verify(name).expect("listed names load"))
        .collect()
}

/// One row of the record table: the best known 3-symmetric crossing count
/// for each n. Rows whose coordinates were never published in machine
/// readable form carry no entry and cannot be reproduced.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub n: u32,
    pub entry: Option<&'static str>,
    pub report: Option<EntryReport>,
}

pub const TABLE: &[(u32, Option<&str>)] = &[
    (24, Some("K24")),
    (27, None),
    (30, Some("base30")),
    (33, Some("K33")),
    (36, None),
    (39, None),
    (42, Some("K42")),
    (45, None),
    (48, Some("K48")),
    (51, Some("K51")),
    (54, Some("K54")),
    (57, Some("K57")),
    (60, Some("K60")),
    (63, Some("K63")),
    (66, Some("K66")),
    (69, Some("K69")),
    (72, Some("K72")),
    (75, Some("K75")),
    (78, Some("K78")),
    (81, Some("K81")),
    (84, Some("K84")),
    (87, Some("K87")),
    (90, Some("K90")),
    (93, Some("K93")),
    (96, Some("K96")),
    (99, Some("K99")),
    (315, Some("K315")),
];

/// Reproduces the record table; `only` restricts to a single n.
pub fn reproduce_table(only: Option<u32>) -> Vec<TableRow> {
    TABLE
        .par_iter()
        .filter(|(n, _)| only.is_none() || only == Some(*n))
        .map(|&(n, entry)| TableRow {
            n,
            entry: entry.map(|e| {
                // keep the static name
                names()
                    .into_iter()
                    .find(|&x| x == e)
                    .expect("table entries are catalog names")
            }),
            report: entry.map(|e| verify(e).expect("table entries load")),
        })
        .collect()
}
