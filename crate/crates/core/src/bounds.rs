//! Closed-form bound calculators in exact rational arithmetic: the
//! (<=k)-set lower bound for 3-decomposable sets, the extremal
//! transposition digraph and its exact edge count, and the constants
//! bounding the rectilinear crossing number.

use crate::digraph::ForwardDigraph;
use crate::scalar::Rat;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("n = {0} must be a positive multiple of 3")]
    NotMultipleOf3(u64),
    #[error("k = {k} out of range for n = {n}: need 1 <= k < n/2")]
    KOutOfRange { k: u64, n: u64 },
    #[error("k = {k} out of range for n = {n}: need 1 <= k and n-2k-1 >= 1")]
    SlackRequired { k: u64, n: u64 },
}

fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

fn rat_u(n: u64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Formal binomial coefficient C(r, 2) = r(r-1)/2 for real r >= 2, and 0
/// for r < 2.
pub fn formal_binom2(r: &Rat) -> Rat {
    if *r < rat(2) {
        Rat::zero()
    } else {
        r * (r - Rat::one()) / rat(2)
    }
}

fn check_n(n: u64) -> Result<(), BoundsError> {
    if n == 0 || n % 3 != 0 {
        return Err(BoundsError::NotMultipleOf3(n));
    }
    Ok(())
}

/// The truncation index s = s(k,n): the unique integer with
/// C(s,2) < n / (3(n-2k-1)) <= C(s+1,2). Requires n-2k-1 >= 1.
pub fn cutoff_index(k: u64, n: u64) -> Result<u64, BoundsError> {
    check_n(n)?;
    if k < 1 || 2 * k + 1 >= n {
        return Err(BoundsError::KOutOfRange { k, n });
    }
    let m = n - 2 * k - 1;
    let x = Rat::new(BigInt::from(n), BigInt::from(3 * m));
    let mut s = 1u64;
    while Rat::new(BigInt::from((s + 1) * s), BigInt::from(2)) < x {
        s += 1;
    }
    Ok(s)
}

/// The lower bound B(k, n) on the number of (<=k)-sets of a
/// 3-decomposable n-point set:
/// 3 C(k+1,2) + 3 C(k+1-n/3,2) + 3 sum_{j=2}^{s-1} j(j+1) C(k+1-c_j n, 2)
/// with c_j = 1/2 - 1/(3j(j+1)) and the formal binomial convention.
/// At the boundary k = (n-1)/2 the truncation index is unbounded and the
/// sum simply runs until its terms vanish.
pub fn kset_lower_bound(k: u64, n: u64) -> Result<Rat, BoundsError> {
    check_n(n)?;
    if k < 1 || 2 * k >= n {
        return Err(BoundsError::KOutOfRange { k, n });
    }
    let third = rat_u(n / 3);
    let kp1 = rat_u(k + 1);
    let mut total = rat(3) * formal_binom2(&kp1) + rat(3) * formal_binom2(&(&kp1 - &third));

    let m = n - 2 * k - 1;
    let series_term = |j: u64| -> Rat {
        let c_j = Rat::new(BigInt::one(), BigInt::from(2))
            - Rat::new(BigInt::one(), BigInt::from(3 * j * (j + 1)));
        let r = &kp1 - c_j * rat_u(n);
        rat_u(j * (j + 1)) * formal_binom2(&r)
    };
    if m >= 1 {
        let s = cutoff_index(k, n)?;
        for j in 2..s {
            total = total + rat(3) * series_term(j);
        }
    } else {
        // m = 0: terms are added while the formal binomial is live; the
        // coefficients c_j increase toward 1/2, so once a term dies every
        // later term is dead too.
        let mut j = 2u64;
        loop {
            let c_j = Rat::new(BigInt::one(), BigInt::from(2))
                - Rat::new(BigInt::one(), BigInt::from(3 * j * (j + 1)));
            let r = &kp1 - c_j * rat_u(n);
            if r < rat(2) {
                break;
            }
            total = total + rat(3) * rat_u(j * (j + 1)) * formal_binom2(&r);
            j += 1;
        }
    }
    Ok(total)
}

/// Decomposition of i >= 1 against triangular blocks of width m:
/// i = 1 + m*C(s,2) + s*t + u with C(s,2) < i/m <= C(s+1,2),
/// 0 <= t <= m-1, 0 <= u <= s-1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TriangularDecomposition {
    pub s: u64,
    pub t: u64,
    pub u: u64,
}

impl TriangularDecomposition {
    /// Inverse map, for checking bijectivity.
    pub fn recompose(&self, m: u64) -> u64 {
        1 + m * self.s * (self.s - 1) / 2 + self.s * self.t + self.u
    }
}

pub fn triangular_decomposition(i: u64, m: u64) -> TriangularDecomposition {
    assert!(i >= 1 && m >= 1);
    let mut s = 1u64;
    while m * (s + 1) * s / 2 < i {
        s += 1;
    }
    let r = i - 1 - m * s * (s - 1) / 2;
    let t = r / s;
    let u = r % s;
    debug_assert!(t <= m - 1 && u <= s - 1);
    TriangularDecomposition { s, t, u }
}

/// The extremal digraph on v vertices for slack m: indegree of vertex 1 is
/// 0, every vertex saturates its outdegree cap min(indegree + m, v - i),
/// and edges go to the immediately following vertices.
pub fn extremal_digraph(v: usize, m: u64) -> ForwardDigraph {
    let mut g = ForwardDigraph::new(v);
    for i in 1..=v {
        let cap = (g.in_degree(i) + m).min((v - i) as u64);
        for j in i + 1..=i + cap as usize {
            g.add_edge(i, j);
        }
    }
    g
}

/// Closed-form indegree of vertex i in the extremal digraph with slack m:
/// m(s-1) + t from the triangular decomposition of i.
pub fn extremal_indegree(i: u64, m: u64) -> u64 {
    let d = triangular_decomposition(i, m);
    m * (d.s - 1) + d.t
}

/// Exact edge count E(k,n) of the extremal digraph on v = n/3 vertices
/// with slack m = n-2k-1, evaluated in closed form.
pub fn extremal_edge_count(k: u64, n: u64) -> Result<u64, BoundsError> {
    check_n(n)?;
    let v = n / 3;
    if k < 1 || n < 2 * k + 2 {
        return Err(BoundsError::SlackRequired { k, n });
    }
    let m = n - 2 * k - 1;
    let d = triangular_decomposition(v, m);
    let (s, t, u) = (d.s, d.t, d.u);
    let c3 = |x: u64| if x >= 3 { x * (x - 1) * (x - 2) / 6 } else { 0 };
    let c2 = |x: u64| if x >= 2 { x * (x - 1) / 2 } else { 0 };
    Ok(2 * m * m * c3(s)
        + c2(m) * c2(s)
        + 2 * m * t * c2(s)
        + c2(t) * s
        + (u + 1) * (m * (s - 1) + t))
}

/// E(k,n) + (B(k,n) - kn)/3: nonpositive whenever n/3 < k < n/2, which is
/// what makes B a valid lower bound in the center range.
pub fn edge_bound_margin(k: u64, n: u64) -> Result<Rat, BoundsError> {
    let e = extremal_edge_count(k, n)?;
    let b = kset_lower_bound(k, n)?;
    Ok(rat_u(e) + (b - rat_u(k * n)) / rat(3))
}

/// The lower-bound constant (2/27)(15 - pi^2) for the crossing count of
/// 3-decomposable sets, as an exact symbolic pair plus a float value.
#[derive(Clone, Debug)]
pub struct LowerBoundConstant {
    /// 2/27
    pub coefficient: Rat,
    /// 15 (the constant is coefficient * (offset - pi^2))
    pub offset: Rat,
    pub value: f64,
}

pub fn crossing_constant_lower_bound() -> LowerBoundConstant {
    let coefficient = Rat::new(BigInt::from(2), BigInt::from(27));
    let offset = rat(15);
    let pi = std::f64::consts::PI;
    LowerBoundConstant {
        value: 2.0 / 27.0 * (15.0 - pi * pi),
        coefficient,
        offset,
    }
}

/// Partial sum of sum_{j=2}^{j_max} 1/(j^3 (j+1)^3), which converges to
/// 79/8 - pi^2.
pub fn reciprocal_cube_series_f64(j_max: u64) -> f64 {
    let mut acc = 0.0;
    for j in 2..=j_max {
        let j = j as f64;
        acc += 1.0 / (j * j * j * (j + 1.0) * (j + 1.0) * (j + 1.0));
    }
    acc
}

/// Exact partial sum of the same series; denominators grow quickly, so
/// this is only meant for small j_max.
pub fn reciprocal_cube_series_exact(j_max: u64) -> Rat {
    let mut acc = Rat::zero();
    for j in 2..=j_max {
        let d = BigInt::from(j).pow(3) * BigInt::from(j + 1).pow(3);
        acc = acc + Rat::new(BigInt::one(), d);
    }
    acc
}

/// Iterator over the valid center range n/3 < k < n/2 with slack >= 1.
pub fn center_range(n: u64) -> impl Iterator<Item = u64> {
    let lo = n / 3 + 1;
    (lo..n.div_ceil(2)).filter(move |k| n >= 2 * k + 2)
}

pub fn rat_is_nonpositive(r: &Rat) -> bool {
    !r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(r: &Rat) -> i64 {
        assert!(r.is_integer(), "expected integer, got {r}");
        let (s, digits) = r.numer().to_u32_digits();
        let v = digits.first().copied().unwrap_or(0) as i64;
        match s {
            num_bigint::Sign::Minus => -v,
            _ => v,
        }
    }

    #[test]
    fn formal_binomial_convention() {
        assert_eq!(formal_binom2(&rat(5)), rat(10));
        assert_eq!(formal_binom2(&Rat::new(BigInt::from(3), BigInt::from(2))), rat(0));
        assert_eq!(formal_binom2(&rat(2)), rat(1));
        // 5/2 >= 2: (5/2)(3/2)/2 = 15/8
        assert_eq!(
            formal_binom2(&Rat::new(BigInt::from(5), BigInt::from(2))),
            Rat::new(BigInt::from(15), BigInt::from(8))
        );
    }

    #[test]
    fn cutoff_index_examples() {
        assert_eq!(cutoff_index(3, 12).unwrap(), 1);
        assert_eq!(cutoff_index(5, 12).unwrap(), 3);
        // 90/(3*29) = 30/29 lies in (C(2,2), C(3,2)] = (1, 3]
        assert_eq!(cutoff_index(30, 90).unwrap(), 2);
        assert_eq!(cutoff_index(14, 30).unwrap(), 4);
    }

    #[test]
    fn kset_bound_examples() {
        assert_eq!(int(&kset_lower_bound(3, 12).unwrap()), 18);
        assert_eq!(int(&kset_lower_bound(5, 12).unwrap()), 48);
        assert_eq!(int(&kset_lower_bound(2, 12).unwrap()), 9);
    }

    #[test]
    fn kset_bound_at_m_zero_boundary() {
        // n = 33, k = 16 has n-2k-1 = 0; the bound must still evaluate.
        let b = kset_lower_bound(16, 33).unwrap();
        assert!(b > rat(0));
        // and the bound is monotone right up to the boundary
        assert!(kset_lower_bound(15, 33).unwrap() <= b);
    }

    #[test]
    fn kset_bound_monotone_in_k() {
        for n in [12u64, 30, 45, 90] {
            let mut prev = Rat::zero();
            for k in 1..n.div_ceil(2) {
                let b = kset_lower_bound(k, n).unwrap();
                assert!(b >= prev, "B({k},{n}) not monotone");
                prev = b;
            }
        }
    }

    #[test]
    fn triangular_decomposition_examples() {
        let d = triangular_decomposition(1, 1);
        assert_eq!((d.s, d.t, d.u), (1, 0, 0));
        let d = triangular_decomposition(3, 1);
        assert_eq!((d.s, d.t, d.u), (2, 0, 1));
        let d = triangular_decomposition(4, 1);
        assert_eq!((d.s, d.t, d.u), (3, 0, 0));
    }

    #[test]
    fn triangular_decomposition_is_bijective() {
        for m in 1..=50 {
            for i in 1..=10_000u64 {
                let d = triangular_decomposition(i, m);
                assert!(d.t <= m - 1 && d.u <= d.s - 1);
                assert_eq!(d.recompose(m), i, "i={i}, m={m}");
            }
        }
    }

    #[test]
    fn extremal_digraph_examples() {
        let g = extremal_digraph(4, 1);
        assert_eq!(g.edges(), &[(1, 2), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(
            (1..=4).map(|i| g.in_degree(i)).collect::<Vec<_>>(),
            vec![0, 1, 1, 2]
        );

        let g = extremal_digraph(1, 7);
        assert_eq!(g.edge_count(), 0);

        // outdegrees capped by v - i
        let g = extremal_digraph(3, 5);
        assert_eq!(g.edges(), &[(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn edge_count_formula_examples() {
        // n=12, k=5 gives v=4, m=1 and the digraph above
        assert_eq!(extremal_edge_count(5, 12).unwrap(), 4);
        // n=12, k=4: v=4, m=3; compare against the simulation
        let g = extremal_digraph(4, 3);
        assert_eq!(extremal_edge_count(4, 12).unwrap(), g.edge_count());
        // zero slack (m = 0) is rejected
        assert!(extremal_edge_count(16, 33).is_err());
        assert!(extremal_edge_count(0, 12).is_err());
    }

    #[test]
    fn margin_examples() {
        assert_eq!(edge_bound_margin(5, 12).unwrap(), rat(0));
        assert!(rat_is_nonpositive(&edge_bound_margin(12, 30).unwrap()));
        assert!(rat_is_nonpositive(&edge_bound_margin(149, 300).unwrap()));
    }

    #[test]
    fn lower_bound_constant_value() {
        let c = crossing_constant_lower_bound();
        assert!(c.value > 0.380029);
        assert!(c.value < 0.380030);
        assert_eq!(c.coefficient, Rat::new(BigInt::from(2), BigInt::from(27)));
        assert_eq!(c.offset, rat(15));
    }

    #[test]
    fn series_first_term_and_convergence() {
        assert_eq!(
            reciprocal_cube_series_exact(2),
            Rat::new(BigInt::one(), BigInt::from(216))
        );
        let target = 79.0 / 8.0 - std::f64::consts::PI * std::f64::consts::PI;
        assert!((reciprocal_cube_series_f64(10_000) - target).abs() < 1e-9);
    }

    #[test]
    fn center_range_respects_slack() {
        // n=33: k in (11, 16.5) but k=16 has m=0
        let ks: Vec<u64> = center_range(33).collect();
        assert_eq!(ks, vec![12, 13, 14, 15]);
        let ks: Vec<u64> = center_range(12).collect();
        assert_eq!(ks, vec![5]);
    }
}
