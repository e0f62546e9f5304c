//! Explicit coordinate synthesis for the replacing-by-clusters
//! construction.
//!
//! The process mirrors the abstract construction: every base point gets a
//! disc small enough that representatives preserve the base order type;
//! clusters are first laid out as collinear sets on their pre-halving
//! lines; the lines are then rotated (and once per cyclic dependency
//! component, a cluster is translated) until every line halves the
//! remaining points exactly; finally the clusters are flattened toward
//! their lines by a power-of-two factor found by exact search. Every
//! property the crossing-count formula relies on is certified on the
//! output with exact predicates, so a returned point set is correct by
//! construction.

use super::{side_of, split_sizes, ConstructionError, ConstructionSpec, LineKind};
use crate::geom::{Point, PointSet};
use crate::scalar::{Rat, Scalar};
use num_bigint::BigInt;
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error)]
pub enum SynthesisError {
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("synthesis failed: {0}")]
    Failed(String),
}

struct ClusterState {
    /// current line direction (the line passes through the base point)
    dir: (Scalar, Scalar),
    /// similarity scale applied to model coordinates
    scale: Scalar,
    /// translation along the line (nonzero only for one cluster per
    /// cyclic dependency component)
    shift: Scalar,
    /// model coordinates
    xs: Vec<Rat>,
    ys: Vec<Rat>,
    /// max of x^2 + y^2 over the model, for fitting into the disc
    extent_sq: Rat,
    /// squared layout budget: (disc radius / 4)^2
    budget_sq: Scalar,
}

impl ClusterState {
    fn positions_on_line(&self, anchor: &Point) -> Vec<(Scalar, Scalar, Scalar)> {
        // (tau, x, y): parameter along the line and the projected point
        self.xs
            .iter()
            .map(|qx| {
                let tau = &(&self.scale * &Scalar::from_rat(qx.clone())) + &self.shift;
                (
                    tau.clone(),
                    &anchor.x + &(&tau * &self.dir.0),
                    &anchor.y + &(&tau * &self.dir.1),
                )
            })
            .collect()
    }
}

fn dot(a: &(Scalar, Scalar), b: &(Scalar, Scalar)) -> Scalar {
    &(&a.0 * &b.0) + &(&a.1 * &b.1)
}

fn norm_sq(a: &(Scalar, Scalar)) -> Scalar {
    dot(a, a)
}

/// Largest scale c with c <= sqrt(budget_sq / (extent_sq * |dir|^2)),
/// computed without square roots via c = min(1, ratio).
fn fit_scale(budget_sq: &Scalar, extent_sq: &Rat, dir: &(Scalar, Scalar)) -> Scalar {
    let denom = &Scalar::from_rat(extent_sq.clone()) * &norm_sq(dir);
    let ratio = budget_sq / &denom;
    ratio.min(Scalar::one())
}

/// Squared distance from a point to the line through `anchor` with
/// direction `dir`.
fn dist_sq_to_line(p: &Point, anchor: &Point, dir: &(Scalar, Scalar)) -> Scalar {
    let w = (&p.x - &anchor.x, &p.y - &anchor.y);
    let cross = &(&dir.0 * &w.1) - &(&dir.1 * &w.0);
    &(&cross * &cross) / &norm_sq(dir)
}

/// Builds an explicit augmented point set realizing the spec. `scale`
/// bounds the disc radii from above; any small positive rational works
/// and only changes the coordinates, never the order type.
pub fn synthesize(spec: &ConstructionSpec, scale: &Rat) -> Result<PointSet, SynthesisError> {
    let splits = split_sizes(spec)?;
    let m = spec.base.len();
    let n = spec.total_points();

    // cluster-of-label map and label ranges (labels are assigned per
    // cluster, in base order)
    let mut cluster_of = Vec::with_capacity(n);
    for i in 1..=m {
        cluster_of.extend(std::iter::repeat(i).take(spec.size(i)));
    }

    let user_scale = Scalar::from_rat(scale.clone()).min(Scalar::one());
    let gap_fractions = [
        Rat::new(BigInt::from(1), BigInt::from(2)),
        Rat::new(BigInt::from(1), BigInt::from(3)),
        Rat::new(BigInt::from(2), BigInt::from(5)),
        Rat::new(BigInt::from(3), BigInt::from(7)),
    ];

    let mut last_failure = String::new();
    for attempt in 0..4u32 {
        let shrink = Scalar::from_rat(Rat::new(
            BigInt::from(1),
            BigInt::from(16u64.pow(attempt)),
        ));
        let fraction = Scalar::from_rat(gap_fractions[attempt as usize].clone());
        match synthesize_attempt(
            spec,
            &splits,
            &cluster_of,
            &(&user_scale * &shrink),
            &fraction,
        ) {
            Ok(points) => return Ok(points),
            Err(reason) => last_failure = reason,
        }
    }
    Err(SynthesisError::Failed(last_failure))
}

fn synthesize_attempt(
    spec: &ConstructionSpec,
    splits: &super::SplitSizes,
    cluster_of: &[usize],
    radius_cap: &Scalar,
    gap_fraction: &Scalar,
) -> Result<PointSet, String> {
    let m = spec.base.len();
    let augmented = spec.augmented_indices();

    // Step 1: disc radii. Each radius stays below a quarter of the
    // distance from its base point to every spanned base line and to
    // every pre-halving line not meant to cut its disc.
    let sixteen = Scalar::from_int(16);
    let mut radius_sq: Vec<Scalar> = Vec::with_capacity(m + 1);
    radius_sq.push(Scalar::zero()); // index 0 unused
    for i in 1..=m {
        let p = spec.base.point(i - 1);
        let mut min_d2: Option<Scalar> = None;
        let mut consider = |d2: Scalar| {
            min_d2 = Some(match min_d2.take() {
                None => d2,
                Some(cur) => cur.min(d2),
            });
        };
        for j in 1..=m {
            for k in j + 1..=m {
                if j == i || k == i {
                    continue;
                }
                let a = spec.base.point(j - 1);
                let b = spec.base.point(k - 1);
                let dir = (&b.x - &a.x, &b.y - &a.y);
                consider(dist_sq_to_line(p, a, &dir));
            }
        }
        for (&j, line) in &spec.lines {
            if j == i || line.target() == Some(i) {
                continue;
            }
            consider(dist_sq_to_line(p, spec.base.point(j - 1), &line.dir));
        }
        let d2 = min_d2.expect("base has at least 3 points");
        let r = (&d2 / &sixteen).min(Scalar::one()) * radius_cap;
        radius_sq.push(&r * &r);
    }

    // Step 2: initial collinear layouts on the pre-halving lines.
    // The scale budget is (r/4)^2, which leaves room for one translation.
    let mut states: BTreeMap<usize, ClusterState> = BTreeMap::new();
    for &i in &augmented {
        let model = spec.effective_model(i).expect("validated spec");
        let xs: Vec<Rat> = model.points.iter().map(|(x, _)| x.clone()).collect();
        let ys: Vec<Rat> = model.points.iter().map(|(_, y)| y.clone()).collect();
        let extent_sq = model
            .points
            .iter()
            .map(|(x, y)| x * x + y * y)
            .max()
            .expect("nonempty model");
        let dir = spec.lines[&i].dir.clone();
        let budget_sq = &radius_sq[i] / &sixteen;
        let scale = fit_scale(&budget_sq, &extent_sq, &dir);
        states.insert(
            i,
            ClusterState {
                dir,
                scale,
                shift: Scalar::zero(),
                xs,
                ys,
                extent_sq,
                budget_sq,
            },
        );
    }

    // Step 3: process the splitting dependency digraph. Each component
    // has a unique terminal: either a simple cluster (whose line already
    // halves) or a directed cycle, whose chosen root keeps its line still
    // and regains balance through one translation of its target cluster.
    let sigma: BTreeMap<usize, usize> = spec
        .lines
        .iter()
        .filter_map(|(&i, l)| l.target().map(|t| (i, t)))
        .collect();

    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Grey,
        Black,
    }
    let mut color: BTreeMap<usize, Color> =
        augmented.iter().map(|&i| (i, Color::White)).collect();
    let mut grey_root: BTreeMap<usize, usize> = BTreeMap::new(); // grey cluster -> cycle root

    for &start in &augmented {
        if color[&start] != Color::White {
            continue;
        }
        // walk forward to the component terminal
        let mut seen = vec![start];
        let mut cur = start;
        let terminal = loop {
            match sigma.get(&cur) {
                None => break None, // simple sink
                Some(&next) => {
                    if color[&next] == Color::Black || grey_root.contains_key(&next) {
                        // joins an already processed component
                        break Some(None);
                    }
                    if let Some(pos) = seen.iter().position(|&x| x == next) {
                        break Some(Some(seen[pos..].to_vec()));
                    }
                    seen.push(next);
                    cur = next;
                }
            }
        };
        match terminal {
            None => {
                color.insert(cur, Color::Black); // simple root: line stays
            }
            Some(None) => {} // handled when its component terminal was found
            Some(Some(cycle)) => {
                let root = *cycle.iter().min().expect("nonempty cycle");
                color.insert(root, Color::Black);
                let g = sigma[&root];
                color.insert(g, Color::Grey);
                grey_root.insert(g, root);
            }
        }
    }

    loop {
        // ready white clusters rotate once their split target is final
        let ready_white = augmented.iter().copied().find(|&i| {
            color[&i] == Color::White && sigma.get(&i).map_or(false, |t| color[t] == Color::Black)
        });
        if let Some(i) = ready_white {
            rotate_to_balance(spec, splits, &mut states, i, gap_fraction)?;
            color.insert(i, Color::Black);
            continue;
        }
        let ready_grey = augmented.iter().copied().find(|&i| {
            color[&i] == Color::Grey && sigma.get(&i).map_or(false, |t| color[t] == Color::Black)
        });
        if let Some(g) = ready_grey {
            rotate_to_balance(spec, splits, &mut states, g, gap_fraction)?;
            translate_to_balance(spec, splits, &mut states, g, grey_root[&g])?;
            color.insert(g, Color::Black);
            continue;
        }
        if color.values().all(|&c| c == Color::Black) {
            break;
        }
        return Err("dependency processing stalled".to_string());
    }

    // Step 4: flatten each cluster toward its line, halving the factor
    // until all exact side conditions hold simultaneously.
    let mut eps = Scalar::one();
    for _ in 0..=64 {
        match build_and_check(spec, splits, cluster_of, &states, &eps) {
            Ok(points) => return Ok(points),
            Err(reason) => {
                if !reason.eps_sensitive {
                    return Err(reason.message);
                }
            }
        }
        eps = &eps / &Scalar::from_int(2);
    }
    Err("flattening search exhausted 64 halvings".to_string())
}

/// Re-aims the line of cluster `i` through a point in the gap of its
/// (already final) split cluster so that exactly |L_i| of that cluster's
/// points lie on the left, then refits the layout scale.
fn rotate_to_balance(
    spec: &ConstructionSpec,
    splits: &super::SplitSizes,
    states: &mut BTreeMap<usize, ClusterState>,
    i: usize,
    gap_fraction: &Scalar,
) -> Result<(), String> {
    let target = match spec.lines[&i].kind {
        LineKind::Simple => return Ok(()),
        LineKind::Splitting { target } => target,
    };
    let anchor = spec.base.point(i - 1);
    let target_anchor = spec.base.point(target - 1);
    let want_left = splits.per_line[&i].left_in_target as usize;
    let s = spec.size(target);

    let mut posed = states[&target].positions_on_line(target_anchor);
    posed.sort_by(|a, b| a.0.cmp(&b.0));

    let old_dir = states[&i].dir.clone();
    for &gap_after in &[want_left, s - want_left] {
        debug_assert!(gap_after >= 1 && gap_after <= s - 1);
        let (ax, ay) = (&posed[gap_after - 1].1, &posed[gap_after - 1].2);
        let (bx, by) = (&posed[gap_after].1, &posed[gap_after].2);
        let aim = (
            ax + &(gap_fraction * &(bx - ax)),
            ay + &(gap_fraction * &(by - ay)),
        );
        let new_dir = (&aim.0 - &anchor.x, &aim.1 - &anchor.y);
        if dot(&new_dir, &old_dir).signum() <= 0 {
            continue;
        }
        let mut left = 0usize;
        let mut degenerate = false;
        for (_, ux, uy) in &posed {
            let w = (ux - &anchor.x, uy - &anchor.y);
            match (&(&new_dir.0 * &w.1) - &(&new_dir.1 * &w.0)).signum() {
                s if s > 0 => left += 1,
                0 => degenerate = true,
                _ => {}
            }
        }
        if degenerate || left != want_left {
            continue;
        }
        let state = states.get_mut(&i).expect("cluster state");
        state.dir = new_dir;
        // refit the scale for the new (much longer) direction vector
        state.scale = fit_scale(&state.budget_sq.clone(), &state.extent_sq.clone(), &state.dir.clone());
        return Ok(());
    }
    Err(format!("could not re-aim line {i} across its split cluster"))
}

/// Slides the grey cluster along its own line until the cycle root's
/// still line splits it with the required left count.
fn translate_to_balance(
    spec: &ConstructionSpec,
    splits: &super::SplitSizes,
    states: &mut BTreeMap<usize, ClusterState>,
    g: usize,
    root: usize,
) -> Result<(), String> {
    let root_anchor = spec.base.point(root - 1);
    let root_dir = spec.lines[&root].dir.clone();
    let g_anchor = spec.base.point(g - 1);
    let want_left = splits.per_line[&root].left_in_target as usize;
    let s = spec.size(g);

    let state = &states[&g];
    // Side of a translated cluster point with respect to the root line:
    // sign(w) * sign(tau + delta), where w is the cross of the two line
    // directions (the root line passes through the g anchor exactly).
    let w = (&(&root_dir.0 * &state.dir.1) - &(&root_dir.1 * &state.dir.0)).signum();
    if w == 0 {
        return Err(format!(
            "rotated line of cluster {g} became parallel to the root line {root}"
        ));
    }
    debug_assert_eq!(
        side_of(root_anchor, &spec.lines[&root].dir, g_anchor),
        0,
        "root line must pass through its split anchor"
    );
    let mut taus: Vec<Scalar> = state
        .xs
        .iter()
        .map(|qx| &state.scale * &Scalar::from_rat(qx.clone()))
        .collect();
    taus.sort();
    // exactly want_left of (tau + delta) must have sign w
    let gap_after = if w > 0 { s - want_left } else { want_left };
    debug_assert!(gap_after >= 1 && gap_after <= s - 1);
    let mid = &(&taus[gap_after - 1] + &taus[gap_after]) / &Scalar::from_int(2);
    let delta = -&mid;
    states.get_mut(&g).expect("state").shift = delta;
    Ok(())
}

struct CheckFailure {
    message: String,
    /// failures that shrink away as the flattening factor decreases
    eps_sensitive: bool,
}

fn fail(message: impl Into<String>, eps_sensitive: bool) -> CheckFailure {
    CheckFailure {
        message: message.into(),
        eps_sensitive,
    }
}

/// Materializes the candidate point set for a flattening factor and runs
/// every exact certificate: pairwise distinctness, general position,
/// inherited cross-cluster order types, and the halving property of every
/// pre-halving line and every line spanned inside a cluster.
fn build_and_check(
    spec: &ConstructionSpec,
    splits: &super::SplitSizes,
    cluster_of: &[usize],
    states: &BTreeMap<usize, ClusterState>,
    eps: &Scalar,
) -> Result<PointSet, CheckFailure> {
    let m = spec.base.len();
    let n = spec.total_points();
    let mut coords: Vec<(Scalar, Scalar)> = Vec::with_capacity(n);
    for i in 1..=m {
        let p = spec.base.point(i - 1);
        if spec.size(i) == 1 {
            coords.push((p.x.clone(), p.y.clone()));
            continue;
        }
        let state = &states[&i];
        let perp = (-&state.dir.1, state.dir.0.clone());
        for (qx, qy) in state.xs.iter().zip(&state.ys) {
            let tau = &(&state.scale * &Scalar::from_rat(qx.clone())) + &state.shift;
            let h = &(&state.scale * &Scalar::from_rat(qy.clone())) * eps;
            coords.push((
                &(&p.x + &(&tau * &state.dir.0)) + &(&h * &perp.0),
                &(&p.y + &(&tau * &state.dir.1)) + &(&h * &perp.1),
            ));
        }
    }
    let points = PointSet::from_coords(coords);

    // general position plus inherited order types, one triple loop
    let pts = points.points();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let o = crate::geom::orient(&pts[a], &pts[b], &pts[c]);
                if o == 0 {
                    return Err(fail(
                        format!("collinear triple {} {} {}", a + 1, b + 1, c + 1),
                        true,
                    ));
                }
                let (ca, cb, cc) = (cluster_of[a], cluster_of[b], cluster_of[c]);
                if ca != cb && cb != cc && ca != cc {
                    let base_o = crate::geom::orient(
                        spec.base.point(ca - 1),
                        spec.base.point(cb - 1),
                        spec.base.point(cc - 1),
                    );
                    if o != base_o {
                        return Err(fail(
                            format!(
                                "order type of clusters {ca},{cb},{cc} not inherited"
                            ),
                            true,
                        ));
                    }
                }
            }
        }
    }

    // halving properties
    for &i in &spec.augmented_indices() {
        let anchor = spec.base.point(i - 1);
        let state = &states[&i];
        let s_i = spec.size(i);
        let rest = n - s_i;
        let mut line_left = vec![false; n];
        let mut left_count = 0usize;
        for (idx, q) in pts.iter().enumerate() {
            if cluster_of[idx] == i {
                continue;
            }
            match side_of(anchor, &state.dir, q) {
                s if s > 0 => {
                    line_left[idx] = true;
                    left_count += 1;
                }
                0 => {
                    return Err(fail(
                        format!("point {} lies on line {}", idx + 1, i),
                        true,
                    ))
                }
                _ => {}
            }
        }
        if left_count != rest.div_ceil(2) {
            return Err(fail(
                format!(
                    "line {i} does not halve: {left_count} left of {rest}"
                ),
                true,
            ));
        }
        // verify the split of the target cluster
        if let Some(t) = spec.lines[&i].target() {
            let want = splits.per_line[&i].left_in_target as usize;
            let got = (0..n)
                .filter(|&idx| cluster_of[idx] == t && line_left[idx])
                .count();
            if got != want {
                return Err(fail(
                    format!("line {i} splits cluster {t} as {got}, want {want}"),
                    true,
                ));
            }
        }
        // every line spanned inside the cluster halves the same way
        let members: Vec<usize> = (0..n).filter(|&idx| cluster_of[idx] == i).collect();
        for (pos, &a) in members.iter().enumerate() {
            for &b in &members[pos + 1..] {
                let mut g = (&pts[b].x - &pts[a].x, &pts[b].y - &pts[a].y);
                let orientation = dot(&g, &state.dir).signum();
                if orientation == 0 {
                    return Err(fail(
                        format!("spanned line in cluster {i} orthogonal to its axis"),
                        true,
                    ));
                }
                if orientation < 0 {
                    g = (-&g.0, -&g.1);
                }
                for (idx, q) in pts.iter().enumerate() {
                    if cluster_of[idx] == i {
                        continue;
                    }
                    let side = side_of(&pts[a], &g, q);
                    if side == 0 || (side > 0) != line_left[idx] {
                        return Err(fail(
                            format!(
                                "spanned line in cluster {i} misclassifies point {}",
                                idx + 1
                            ),
                            true,
                        ));
                    }
                }
            }
        }
    }
    Ok(points)
}
