//! Circular sequences of point sets: halfperiods, (<=k)-critical
//! transposition counts, chromatic classification against a balanced
//! 3-partition, and the center transposition digraph with its degree
//! bound.
//!
//! A halfperiod records the C(n,2)+1 projection orders seen while the
//! projection direction sweeps half a turn; consecutive orders differ by
//! one adjacent transposition and the last order is the reverse of the
//! first. Everything here is exact: the sweep order is obtained by
//! sorting the spanned directions with integer cross products.

use crate::digraph::ForwardDigraph;
use crate::geom::{
    canonical_direction, clear_denominators, compare_slopes, cross_sign, GeomError, PointSet, Q3,
};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SeqError {
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error("need at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("k = {k} out of range for n = {n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("partition classes must have equal sizes")]
    UnbalancedPartition,
    #[error("partition labels do not match the sequence labels")]
    PartitionLabelMismatch,
    #[error("no permutation in the sequence has class {0:?} as its leading block")]
    NoSeparatedPermutation(ClassId),
    #[error("degree bound violated at vertex {vertex} of the {class:?} digraph")]
    DegreeBoundViolation { vertex: usize, class: ClassId },
    #[error("invalid halfperiod: {0}")]
    InvalidHalfperiod(String),
}

/// One adjacent swap: the two labels exchanged and the 1-based site
/// (positions site, site+1 of the permutation).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Transposition {
    pub site: usize,
    pub labels: (u32, u32),
}

impl Transposition {
    /// i-criticality index: min(site, n - site).
    pub fn criticality(&self, n: usize) -> usize {
        self.site.min(n - self.site)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Halfperiod {
    n: usize,
    perms: Vec<Vec<u32>>,
    transpositions: Vec<Transposition>,
}

impl fmt::Debug for Halfperiod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Halfperiod(n={}, {} transpositions)",
            self.n,
            self.transpositions.len()
        )
    }
}

/// The three classes of a balanced partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassId {
    A,
    B,
    C,
}

impl ClassId {
    pub const ALL: [ClassId; 3] = [ClassId::A, ClassId::B, ClassId::C];
}

/// A partition of the labels into three equal-size classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition3 {
    class_of: BTreeMap<u32, ClassId>,
    class_size: usize,
}

impl Partition3 {
    pub fn new(class_of: BTreeMap<u32, ClassId>) -> Result<Self, SeqError> {
        let mut sizes = [0usize; 3];
        for class in class_of.values() {
            sizes[*class as usize] += 1;
        }
        if sizes[0] != sizes[1] || sizes[1] != sizes[2] || sizes[0] == 0 {
            return Err(SeqError::UnbalancedPartition);
        }
        Ok(Partition3 {
            class_size: sizes[0],
            class_of,
        })
    }

    /// Consecutive blocks: labels 1..n/3 in A, then B, then C. This is the
    /// labeling produced by wing expansion.
    pub fn wings(n: usize) -> Result<Self, SeqError> {
        if n == 0 || n % 3 != 0 {
            return Err(SeqError::UnbalancedPartition);
        }
        let third = n / 3;
        let mut map = BTreeMap::new();
        for label in 1..=n as u32 {
            let class = match (label as usize - 1) / third {
                0 => ClassId::A,
                1 => ClassId::B,
                _ => ClassId::C,
            };
            map.insert(label, class);
        }
        Partition3::new(map)
    }

    /// Builds a partition from explicit label lists.
    pub fn from_classes(a: &[u32], b: &[u32], c: &[u32]) -> Result<Self, SeqError> {
        let mut map = BTreeMap::new();
        for (labels, class) in [(a, ClassId::A), (b, ClassId::B), (c, ClassId::C)] {
            for &label in labels {
                if map.insert(label, class).is_some() {
                    return Err(SeqError::PartitionLabelMismatch);
                }
            }
        }
        Partition3::new(map)
    }

    pub fn class_of(&self, label: u32) -> Option<ClassId> {
        self.class_of.get(&label).copied()
    }

    pub fn class_size(&self) -> usize {
        self.class_size
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = (u32, ClassId)> + '_ {
        self.class_of.iter().map(|(&l, &c)| (l, c))
    }

    fn matches_labels(&self, perm: &[u32]) -> bool {
        perm.len() == self.class_of.len()
            && perm.iter().all(|l| self.class_of.contains_key(l))
    }
}

impl Halfperiod {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn permutations(&self) -> &[Vec<u32>] {
        &self.perms
    }

    pub fn transpositions(&self) -> &[Transposition] {
        &self.transpositions
    }

    pub fn initial(&self) -> &[u32] {
        &self.perms[0]
    }

    /// Reconstructs a halfperiod from a bare permutation list, validating
    /// every invariant: adjacent-transposition steps, reversed final
    /// permutation, and one swap per unordered pair.
    pub fn from_permutations(perms: Vec<Vec<u32>>) -> Result<Self, SeqError> {
        let bad = |msg: &str| Err(SeqError::InvalidHalfperiod(msg.to_string()));
        let Some(first) = perms.first() else {
            return bad("empty permutation list");
        };
        let n = first.len();
        if n < 2 {
            return bad("permutations too short");
        }
        if perms.len() != n * (n - 1) / 2 + 1 {
            return bad("wrong number of permutations");
        }
        let mut transpositions = Vec::with_capacity(perms.len() - 1);
        let mut seen = std::collections::HashSet::new();
        for w in perms.windows(2) {
            let (prev, next) = (&w[0], &w[1]);
            if prev.len() != n || next.len() != n {
                return bad("ragged permutation list");
            }
            let diff: Vec<usize> = (0..n).filter(|&i| prev[i] != next[i]).collect();
            if diff.len() != 2 || diff[1] != diff[0] + 1 {
                return bad("consecutive permutations must differ by one adjacent swap");
            }
            if prev[diff[0]] != next[diff[1]] || prev[diff[1]] != next[diff[0]] {
                return bad("step is not a transposition");
            }
            let pair = (
                prev[diff[0]].min(prev[diff[1]]),
                prev[diff[0]].max(prev[diff[1]]),
            );
            if !seen.insert(pair) {
                return bad("pair swapped more than once");
            }
            transpositions.push(Transposition {
                site: diff[0] + 1,
                labels: (prev[diff[0]], prev[diff[1]]),
            });
        }
        let reversed: Vec<u32> = perms[0].iter().rev().copied().collect();
        if perms.last().unwrap() != &reversed {
            return bad("last permutation is not the reverse of the first");
        }
        Ok(Halfperiod {
            n,
            perms,
            transpositions,
        })
    }

    /// The permutation at doubled-period index r in 0..n(n-1): the second
    /// half consists of the reversed permutations.
    pub fn doubled_perm(&self, r: usize) -> Vec<u32> {
        let period = 2 * self.transpositions.len();
        let r = r % period;
        if r <= self.transpositions.len() {
            self.perms[r].clone()
        } else {
            self.perms[r - self.transpositions.len()]
                .iter()
                .rev()
                .copied()
                .collect()
        }
    }

    fn doubled_pair(&self, step: usize) -> (u32, u32) {
        let half = self.transpositions.len();
        self.transpositions[step % half].labels
    }

    /// A new halfperiod of the same circular sequence starting at doubled
    /// index `offset`.
    pub fn rebase(&self, offset: usize) -> Halfperiod {
        let half = self.transpositions.len();
        let period = 2 * half;
        let offset = offset % period;
        let mut perm = self.doubled_perm(offset);
        let n = self.n;
        let mut pos: BTreeMap<u32, usize> = BTreeMap::new();
        for (i, &l) in perm.iter().enumerate() {
            pos.insert(l, i);
        }
        let mut perms = Vec::with_capacity(half + 1);
        let mut transpositions = Vec::with_capacity(half);
        perms.push(perm.clone());
        for step in offset..offset + half {
            let (a, b) = self.doubled_pair(step);
            let (ia, ib) = (pos[&a], pos[&b]);
            debug_assert!(ia.abs_diff(ib) == 1, "rebase produced non-adjacent swap");
            perm.swap(ia, ib);
            pos.insert(a, ib);
            pos.insert(b, ia);
            transpositions.push(Transposition {
                site: ia.min(ib) + 1,
                labels: (a, b),
            });
            perms.push(perm.clone());
        }
        debug_assert_eq!(
            perms.last().unwrap(),
            &perms[0].iter().rev().copied().collect::<Vec<_>>()
        );
        Halfperiod {
            n,
            perms,
            transpositions,
        }
    }
}

/// Builds the halfperiod of a point set by sorting all spanned directions
/// and replaying the swaps from an exactly chosen initial projection
/// direction. Errors if two spanned lines are parallel (which includes
/// collinear triples).
pub fn build_halfperiod(set: &PointSet) -> Result<Halfperiod, SeqError> {
    let n = set.len();
    if n < 3 {
        return Err(SeqError::TooFewPoints(n));
    }
    let pts = clear_denominators(set);

    // Every unordered pair, keyed by its canonical direction (angle in [0, pi)).
    let mut pairs: Vec<(Q3, Q3, usize, usize)> = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let (dx, dy) = canonical_direction(&pts[i], &pts[j]);
            pairs.push((dx, dy, i, j));
        }
    }
    pairs.sort_by(|a, b| compare_slopes(&a.0, &a.1, &b.0, &b.1));
    for w in pairs.windows(2) {
        if cross_sign(&w[0].0, &w[0].1, &w[1].0, &w[1].1) == 0 {
            return Err(GeomError::ParallelSpannedLines(
                (pts[w[0].2].label, pts[w[0].3].label),
                (pts[w[1].2].label, pts[w[1].3].label),
            )
            .into());
        }
    }

    // Initial direction: strictly between the perpendiculars of the last
    // and first swap directions, so the sweep meets the sorted swaps in
    // order and the initial projection has no ties.
    let (first, last) = (&pairs[0], &pairs[pairs.len() - 1]);
    let a = Q3 {
        // last direction rotated clockwise by 90 degrees
        a: last.1.a.clone(),
        b: last.1.b.clone(),
    };
    let a = (a, last.0.neg());
    let b = (first.1.neg(), first.0.clone());
    let u0 = (a.0.add(&b.0), a.1.add(&b.1));

    // Initial permutation: ascending projection onto u0.
    let keys: Vec<Q3> = pts
        .iter()
        .map(|p| p.x.mul(&u0.0).add(&p.y.mul(&u0.1)))
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| match keys[i].sub(&keys[j]).sign() {
        s if s < 0 => std::cmp::Ordering::Less,
        0 => std::cmp::Ordering::Equal,
        _ => std::cmp::Ordering::Greater,
    });
    for w in order.windows(2) {
        if keys[w[0]].sub(&keys[w[1]]).sign() == 0 {
            return Err(SeqError::InvalidHalfperiod(
                "tie in initial projection".to_string(),
            ));
        }
    }

    let mut perm: Vec<u32> = order.iter().map(|&i| pts[i].label).collect();
    let mut pos = vec![0usize; n];
    for (slot, &i) in order.iter().enumerate() {
        pos[i] = slot;
    }
    let mut perms = Vec::with_capacity(pairs.len() + 1);
    let mut transpositions = Vec::with_capacity(pairs.len());
    perms.push(perm.clone());
    for (_, _, i, j) in &pairs {
        let (ia, ib) = (pos[*i], pos[*j]);
        if ia.abs_diff(ib) != 1 {
            return Err(SeqError::InvalidHalfperiod(format!(
                "swap of {} and {} is not adjacent",
                pts[*i].label, pts[*j].label
            )));
        }
        perm.swap(ia, ib);
        pos[*i] = ib;
        pos[*j] = ia;
        transpositions.push(Transposition {
            site: ia.min(ib) + 1,
            labels: (pts[*i].label, pts[*j].label),
        });
        perms.push(perm.clone());
    }
    debug_assert_eq!(
        perms.last().unwrap(),
        &perms[0].iter().rev().copied().collect::<Vec<_>>()
    );
    Ok(Halfperiod {
        n,
        perms,
        transpositions,
    })
}

fn check_k(k: usize, n: usize) -> Result<(), SeqError> {
    if k < 1 || 2 * k >= n {
        return Err(SeqError::KOutOfRange { k, n });
    }
    Ok(())
}

/// Number of (<=k)-critical transpositions, which equals the number of
/// (<=k)-sets of the underlying point set.
pub fn count_leq_k_sets(h: &Halfperiod, k: usize) -> Result<u64, SeqError> {
    check_k(k, h.n)?;
    Ok(h
        .transpositions
        .iter()
        .filter(|t| t.criticality(h.n) <= k)
        .count() as u64)
}

/// Splits the (<=k)-critical transpositions into bichromatic and
/// monochromatic counts with respect to a balanced 3-partition.
pub fn classify_transpositions(
    h: &Halfperiod,
    partition: &Partition3,
    k: usize,
) -> Result<(u64, u64), SeqError> {
    check_k(k, h.n)?;
    if !partition.matches_labels(h.initial()) {
        return Err(SeqError::PartitionLabelMismatch);
    }
    let mut bi = 0;
    let mut mono = 0;
    for t in &h.transpositions {
        if t.criticality(h.n) <= k {
            let ca = partition.class_of(t.labels.0);
            let cb = partition.class_of(t.labels.1);
            if ca == cb {
                mono += 1;
            } else {
                bi += 1;
            }
        }
    }
    Ok((bi, mono))
}

/// Outcome of the 3-decomposability scan: for each of the three block
/// patterns (A,B,C), (B,A,C), (B,C,A), the first doubled-period index
/// whose projection order shows that pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposability {
    pub witness_abc: Option<usize>,
    pub witness_bac: Option<usize>,
    pub witness_bca: Option<usize>,
}

impl Decomposability {
    pub fn is_decomposable(&self) -> bool {
        self.witness_abc.is_some() && self.witness_bac.is_some() && self.witness_bca.is_some()
    }
}

fn block_pattern(perm: &[u32], partition: &Partition3) -> Option<[ClassId; 3]> {
    let third = perm.len() / 3;
    let mut blocks = [ClassId::A; 3];
    for b in 0..3 {
        let class = partition.class_of(perm[b * third])?;
        for &l in &perm[b * third..(b + 1) * third] {
            if partition.class_of(l) != Some(class) {
                return None;
            }
        }
        blocks[b] = class;
    }
    Some(blocks)
}

/// Scans the full period (all n(n-1)+1 projection orders) for the three
/// separated block patterns that certify 3-decomposability of the point
/// set with respect to the given partition.
pub fn verify_3_decomposable(
    set: &PointSet,
    partition: &Partition3,
) -> Result<Decomposability, SeqError> {
    let h = build_halfperiod(set)?;
    verify_3_decomposable_halfperiod(&h, partition)
}

pub fn verify_3_decomposable_halfperiod(
    h: &Halfperiod,
    partition: &Partition3,
) -> Result<Decomposability, SeqError> {
    if h.n % 3 != 0 || !partition.matches_labels(h.initial()) {
        return Err(SeqError::PartitionLabelMismatch);
    }
    let period = 2 * h.transpositions.len();
    let mut out = Decomposability {
        witness_abc: None,
        witness_bac: None,
        witness_bca: None,
    };
    for r in 0..=period {
        let perm = h.doubled_perm(r);
        if let Some(blocks) = block_pattern(&perm, partition) {
            use ClassId::*;
            let slot = match blocks {
                [A, B, C] => &mut out.witness_abc,
                [B, A, C] => &mut out.witness_bac,
                [B, C, A] => &mut out.witness_bca,
                _ => continue,
            };
            if slot.is_none() {
                *slot = Some(r);
            }
        }
    }
    Ok(out)
}

/// Builds the digraph of monochromatic center transpositions for one
/// class: the halfperiod is rebased so the class occupies the leading
/// block, vertices are the class elements indexed by initial position,
/// and there is an edge i -> j (i < j) when the swap of elements i and j
/// happens at a site strictly between k and n-k. The degree bound
/// out(i) <= min(n-2k-1+in(i), n/3-i) is checked for every vertex.
pub fn build_center_digraph(
    h: &Halfperiod,
    partition: &Partition3,
    k: usize,
    class: ClassId,
) -> Result<ForwardDigraph, SeqError> {
    let n = h.n;
    check_k(k, n)?;
    if !partition.matches_labels(h.initial()) {
        return Err(SeqError::PartitionLabelMismatch);
    }
    let v = n / 3;
    let period = 2 * h.transpositions.len();
    let offset = (0..period)
        .find(|&r| {
            let perm = h.doubled_perm(r);
            perm[..v]
                .iter()
                .all(|&l| partition.class_of(l) == Some(class))
        })
        .ok_or(SeqError::NoSeparatedPermutation(class))?;
    let rebased = h.rebase(offset);

    let mut index_of: BTreeMap<u32, usize> = BTreeMap::new();
    for (i, &l) in rebased.initial()[..v].iter().enumerate() {
        index_of.insert(l, i + 1);
    }
    let mut g = ForwardDigraph::new(v);
    for t in &rebased.transpositions {
        if t.site > k && t.site < n - k {
            if let (Some(&i), Some(&j)) = (index_of.get(&t.labels.0), index_of.get(&t.labels.1))
            {
                g.add_edge(i.min(j), i.max(j));
            }
        }
    }
    let m = (n - 2 * k - 1) as u64;
    for i in 1..=v {
        if g.out_degree(i) > (m + g.in_degree(i)).min((v - i) as u64) {
            return Err(SeqError::DegreeBoundViolation { vertex: i, class });
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::expand_wing;
    use crate::scalar::Scalar;

    fn set_of(coords: &[(i64, i64)]) -> PointSet {
        PointSet::from_coords(
            coords
                .iter()
                .map(|&(x, y)| (Scalar::from_int(x), Scalar::from_int(y)))
                .collect(),
        )
    }

    fn convex_hexagon() -> PointSet {
        set_of(&[(0, 0), (9, 1), (14, 7), (11, 15), (3, 14), (-3, 6)])
    }

    #[test]
    fn triangle_halfperiod_shape() {
        let h = build_halfperiod(&set_of(&[(0, 0), (5, 1), (2, 7)])).unwrap();
        assert_eq!(h.permutations().len(), 4);
        assert_eq!(h.transpositions().len(), 3);
        let first = h.initial().to_vec();
        let last: Vec<u32> = h.permutations().last().unwrap().clone();
        assert_eq!(last, first.iter().rev().copied().collect::<Vec<_>>());
    }

    #[test]
    fn each_pair_swaps_once() {
        let h = build_halfperiod(&convex_hexagon()).unwrap();
        assert_eq!(h.transpositions().len(), 15);
        let mut seen = std::collections::HashSet::new();
        for t in h.transpositions() {
            let key = (t.labels.0.min(t.labels.1), t.labels.0.max(t.labels.1));
            assert!(seen.insert(key));
        }
    }

    #[test]
    fn parallel_lines_rejected_with_witness() {
        let square = set_of(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        match build_halfperiod(&square) {
            Err(SeqError::Geometry(GeomError::ParallelSpannedLines(_, _))) => {}
            other => panic!("expected parallel error, got {other:?}"),
        }
    }

    #[test]
    fn kset_counts_convex_hexagon() {
        // every j-set of a convex polygon is an arc: n of each size
        let h = build_halfperiod(&convex_hexagon()).unwrap();
        assert_eq!(count_leq_k_sets(&h, 1).unwrap(), 6);
        assert_eq!(count_leq_k_sets(&h, 2).unwrap(), 12);
        assert!(count_leq_k_sets(&h, 3).is_err()); // k = n/2
        assert!(count_leq_k_sets(&h, 0).is_err());
    }

    fn random_clean_set(rng: &mut impl rand::Rng, n: usize) -> PointSet {
        loop {
            let mut coords: Vec<(i64, i64)> = Vec::new();
            while coords.len() < n {
                let c = (rng.gen_range(-400i64..=400), rng.gen_range(-400i64..=400));
                if !coords.contains(&c) {
                    coords.push(c);
                }
            }
            let s = set_of(&coords);
            if s.check_distinct_spanned_slopes().is_ok() {
                return s;
            }
        }
    }

    #[test]
    fn at_least_three_extreme_changes() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for n in [3usize, 5, 7, 11] {
            let set = random_clean_set(&mut rng, n);
            let h = build_halfperiod(&set).unwrap();
            assert!(count_leq_k_sets(&h, 1).unwrap() >= 3);
        }
    }

    #[test]
    fn classification_partitions_the_count() {
        let h = build_halfperiod(&convex_hexagon()).unwrap();
        let p = Partition3::from_classes(&[1, 4], &[2, 5], &[3, 6]).unwrap();
        let (bi, mono) = classify_transpositions(&h, &p, 1).unwrap();
        assert_eq!(bi + mono, count_leq_k_sets(&h, 1).unwrap());
        let (bi2, mono2) = classify_transpositions(&h, &p, 2).unwrap();
        assert_eq!(bi2 + mono2, 12);
    }

    #[test]
    fn rebase_preserves_kset_counts() {
        let h = build_halfperiod(&convex_hexagon()).unwrap();
        for offset in [1, 5, 14, 17, 29] {
            let r = h.rebase(offset);
            assert_eq!(r.transpositions().len(), h.transpositions().len());
            for k in 1..3 {
                assert_eq!(
                    count_leq_k_sets(&r, k).unwrap(),
                    count_leq_k_sets(&h, k).unwrap(),
                    "offset {offset} k {k}"
                );
            }
        }
    }

    #[test]
    fn from_permutations_validates() {
        let h = build_halfperiod(&set_of(&[(0, 0), (5, 1), (2, 7)])).unwrap();
        let rebuilt = Halfperiod::from_permutations(h.permutations().to_vec()).unwrap();
        assert_eq!(rebuilt, h);

        let mut broken = h.permutations().to_vec();
        broken[1] = broken[0].clone();
        assert!(Halfperiod::from_permutations(broken).is_err());
        assert!(Halfperiod::from_permutations(vec![]).is_err());
    }

    #[test]
    fn triangle_is_3_decomposable() {
        let set = set_of(&[(0, 0), (10, 1), (4, 9)]);
        let p = Partition3::from_classes(&[1], &[2], &[3]).unwrap();
        let d = verify_3_decomposable(&set, &p).unwrap();
        assert!(d.is_decomposable());
    }

    #[test]
    fn negative_control_is_rejected() {
        // random asymmetric 9-point sets with an arbitrary partition are
        // typically not 3-decomposable; the checker must be able to say no
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let p = Partition3::from_classes(&[1, 5, 9], &[2, 4, 8], &[3, 6, 7]).unwrap();
        let mut rejected = 0;
        for _ in 0..5 {
            let set = random_clean_set(&mut rng, 9);
            let d = verify_3_decomposable(&set, &p).unwrap();
            if !d.is_decomposable() {
                rejected += 1;
            }
        }
        assert!(rejected > 0);
    }

    #[test]
    fn expanded_wing_is_3_symmetric_and_decomposable() {
        let wing = set_of(&[(100, 10), (120, 40), (90, 70)]);
        let full = expand_wing(&wing).unwrap();
        full.check_general_position().unwrap();
        let p = Partition3::wings(9).unwrap();
        let d = verify_3_decomposable(&full, &p).unwrap();
        assert!(d.is_decomposable());
    }

    #[test]
    fn center_digraph_degrees_and_complement() {
        let wing = set_of(&[(100, 10), (120, 40), (90, 70)]);
        let full = expand_wing(&wing).unwrap();
        let h = build_halfperiod(&full).unwrap();
        let p = Partition3::wings(9).unwrap();
        let (n, v) = (9usize, 3usize);
        for k in [4usize] {
            for class in ClassId::ALL {
                let g = build_center_digraph(&h, &p, k, class).unwrap();
                // complement identity on the rebased halfperiod: center
                // edges + critical class-internal swaps = C(n/3, 2)
                let offset = (0..2 * h.transpositions().len())
                    .find(|&r| {
                        h.doubled_perm(r)[..v]
                            .iter()
                            .all(|&l| p.class_of(l) == Some(class))
                    })
                    .unwrap();
                let rebased = h.rebase(offset);
                let critical: u64 = rebased
                    .transpositions()
                    .iter()
                    .filter(|t| {
                        p.class_of(t.labels.0) == Some(class)
                            && p.class_of(t.labels.1) == Some(class)
                            && t.criticality(n) <= k
                    })
                    .count() as u64;
                assert_eq!(g.edge_count() + critical, 3);
            }
        }
    }

    #[test]
    fn six_points_two_per_class_center_digraph() {
        let set = convex_hexagon();
        let h = build_halfperiod(&set).unwrap();
        let p = Partition3::from_classes(&[1, 2], &[3, 4], &[5, 6]).unwrap();
        // n = 6, k = 2: at most one edge possible per class (v = 2)
        if let Ok(g) = build_center_digraph(&h, &p, 2, ClassId::A) {
            assert!(g.edge_count() <= 1);
        }
    }
}
