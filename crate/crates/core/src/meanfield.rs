//! Ensemble theory for random bipartite graphs with Poisson degrees:
//! giant component, coverage-requirement probabilities, coverage and the
//! backbone / unfrozen fractions, all as fixed points of coupled exponential
//! maps.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const MAX_ITERATIONS: usize = 1_000_000;

/// Solved ensemble observables for mean degrees `(c1, c2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanFieldSolution<T> {
    pub c1: T,
    pub c2: T,
    /// Giant-component fractions of X1, X2 and the whole graph.
    pub giant1: T,
    pub giant2: T,
    pub giant: T,
    /// Probability that an edge entering an X1 (X2) node carries a coverage
    /// requirement.
    pub pi1: T,
    pub pi2: T,
    pub x1: T,
    pub x2: T,
    pub x: T,
    pub q1_plus: T,
    pub q2_plus: T,
    pub q_plus: T,
    pub q1_zero: T,
    pub q2_zero: T,
    pub q_zero: T,
    /// Largest fixed-point defect `|F(v) - v|` over all iterated components.
    pub residual: T,
    pub iterations: usize,
}

impl<T: Scalar> MeanFieldSolution<T> {
    /// Coverage from the backbone route, `1 - q_plus - q_zero / 2`.
    pub fn x_from_backbones(&self) -> T {
        T::one() - self.q_plus - self.q_zero / T::of(2.0)
    }

    pub fn q_minus(&self) -> T {
        T::one() - self.q_plus - self.q_zero
    }

    /// Same solution with the roles of X1 and X2 exchanged.
    pub fn swapped(&self) -> Self {
        MeanFieldSolution {
            c1: self.c2,
            c2: self.c1,
            giant1: self.giant2,
            giant2: self.giant1,
            pi1: self.pi2,
            pi2: self.pi1,
            x1: self.x2,
            x2: self.x1,
            q1_plus: self.q2_plus,
            q2_plus: self.q1_plus,
            q1_zero: self.q2_zero,
            q2_zero: self.q1_zero,
            ..*self
        }
    }
}

/// Damped Jacobi iteration of `(a, b) <- (a, b)/2 + F(a, b)/2` until every
/// component moves by less than the tolerance.
fn damped<T: Scalar>(
    start: (T, T),
    map: impl Fn(T, T) -> (T, T),
) -> Result<((T, T), usize)> {
    let half = T::of(0.5);
    let tol = T::fixed_point_tolerance();
    let (mut a, mut b) = start;
    for it in 1..=MAX_ITERATIONS {
        let (fa, fb) = map(a, b);
        let (na, nb) = (half * a + half * fa, half * b + half * fb);
        let delta = (na - a).abs().max((nb - b).abs());
        a = na;
        b = nb;
        if delta < tol {
            return Ok(((a, b), it));
        }
    }
    let (fa, fb) = map(a, b);
    let residual = (fa - a).abs().max((fb - b).abs());
    Err(Error::NoConvergence {
        iterations: MAX_ITERATIONS,
        residual: residual.to_f64().unwrap_or(f64::NAN),
    })
}

/// Solves the coupled maps for mean degrees `c1` (X1) and `c2` (X2).
pub fn solve_fixed_point<T: Scalar>(c1: T, c2: T) -> Result<MeanFieldSolution<T>> {
    if !(c1 >= T::zero() && c2 >= T::zero()) || !c1.is_finite() || !c2.is_finite() {
        return Err(Error::Config(format!("mean degrees must be finite and >= 0, got {c1}, {c2}")));
    }
    let one = T::one();
    let half = T::of(0.5);

    let requirement = |a: T, b: T| ((-c1 * b).exp(), (-c2 * a).exp());
    let ((pi1, pi2), it_pi) = damped((one, one), requirement)?;
    // Positive backbones obey the same map from the same start.
    let ((q1_plus, q2_plus), it_q) = damped((one, one), requirement)?;

    let giant_map = |a: T, b: T| (one - (-c1 * b).exp(), one - (-c2 * a).exp());
    let ((giant1, giant2), it_giant) = if c1 * c2 <= one {
        // the only fixed point in [0, 1] is the origin
        ((T::zero(), T::zero()), 0)
    } else {
        damped((half, half), giant_map)?
    };

    let (w1, w2) = if c1 + c2 > T::zero() {
        (c2 / (c1 + c2), c1 / (c1 + c2))
    } else {
        (half, half)
    };

    let x1 = one - (-c1 * pi2).exp() - c1 * pi2 * half * (-c1 * pi2).exp();
    let x2 = one - (-c2 * pi1).exp() - c2 * pi1 * half * (-c2 * pi1).exp();
    let q1_zero = c1 * q2_plus * (-c1 * q2_plus).exp();
    let q2_zero = c2 * q1_plus * (-c2 * q1_plus).exp();

    let defect = |(a, b): (T, T), (fa, fb): (T, T)| (fa - a).abs().max((fb - b).abs());
    let mut residual = defect((pi1, pi2), requirement(pi1, pi2))
        .max(defect((q1_plus, q2_plus), requirement(q1_plus, q2_plus)));
    if it_giant > 0 {
        residual = residual.max(defect((giant1, giant2), giant_map(giant1, giant2)));
    }

    Ok(MeanFieldSolution {
        c1,
        c2,
        giant1,
        giant2,
        giant: w1 * giant1 + w2 * giant2,
        pi1,
        pi2,
        x1,
        x2,
        x: w1 * x1 + w2 * x2,
        q1_plus,
        q2_plus,
        q_plus: w1 * q1_plus + w2 * q2_plus,
        q1_zero,
        q2_zero,
        q_zero: w1 * q1_zero + w2 * q2_zero,
        residual,
        iterations: it_pi.max(it_q).max(it_giant),
    })
}

/// Side-size ratio `n1 : n2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SizeRatio {
    pub n1: u32,
    pub n2: u32,
}

impl SizeRatio {
    pub fn new(n1: u32, n2: u32) -> Result<Self> {
        if n1 == 0 || n2 == 0 {
            return Err(Error::Config(format!("ratio parts must be positive, got {n1}:{n2}")));
        }
        Ok(SizeRatio { n1, n2 })
    }

    /// Side mean degrees for whole-graph mean degree `c`, using
    /// `c1 n1 = c2 n2` and `c = 2 c1 c2 / (c1 + c2)`.
    pub fn side_degrees<T: Scalar>(&self, c: T) -> (T, T) {
        let total = T::of((self.n1 + self.n2) as f64);
        let two = T::of(2.0);
        (c * total / (two * T::of(self.n1 as f64)), c * total / (two * T::of(self.n2 as f64)))
    }
}

impl std::fmt::Display for SizeRatio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.n1, self.n2)
    }
}

impl std::str::FromStr for SizeRatio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("ratio must look like `4:1`, got `{s}`"));
        let (a, b) = s.split_once(':').ok_or_else(bad)?;
        SizeRatio::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoryRow<T> {
    pub ratio: SizeRatio,
    pub c: T,
    pub solution: MeanFieldSolution<T>,
}

/// One solved row per whole-graph mean degree in `c_grid`.
pub fn theory_curve<T: Scalar>(ratio: SizeRatio, c_grid: &[T]) -> Result<Vec<TheoryRow<T>>> {
    c_grid
        .iter()
        .map(|&c| {
            if !(c >= T::zero()) {
                return Err(Error::Config(format!("mean degree must be >= 0, got {c}")));
            }
            let (c1, c2) = ratio.side_degrees(c);
            Ok(TheoryRow { ratio, c, solution: solve_fixed_point(c1, c2)? })
        })
        .collect()
}

/// Poisson probability `c^k e^{-c} / k!`, evaluated in log space.
pub fn poisson_pmf<T: Scalar>(c: T, k: u32) -> T {
    if c == T::zero() {
        return if k == 0 { T::one() } else { T::zero() };
    }
    let ln_fact: T = (2..=k).fold(T::zero(), |acc, i| acc + T::of(i as f64).ln());
    (T::of(k as f64) * c.ln() - c - ln_fact).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_degree() {
        let s = solve_fixed_point(0.0f64, 0.0).unwrap();
        assert_eq!((s.pi1, s.pi2), (1.0, 1.0));
        assert_eq!((s.giant, s.x, s.q_plus, s.q_zero), (0.0, 0.0, 1.0, 0.0));
    }

    #[test]
    fn omega_constant_at_unit_degree() {
        // Oracle: Newton on w e^w = 1, independent of the damped iteration.
        let mut w = 0.5f64;
        for _ in 0..50 {
            w -= (w * w.exp() - 1.0) / ((w + 1.0) * w.exp());
        }
        let s = solve_fixed_point(1.0f64, 1.0).unwrap();
        assert!((s.pi1 - w).abs() < 1e-12 && (s.pi2 - w).abs() < 1e-12);
        assert!((w - 0.567143).abs() < 1e-6);
    }

    #[test]
    fn giant_component_at_degree_two() {
        // bisection oracle on Q = 1 - exp(-2Q)
        let (mut lo, mut hi) = (0.1f64, 1.0f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if 1.0 - (-2.0 * mid).exp() > mid {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let s = solve_fixed_point(2.0f64, 2.0).unwrap();
        assert!((s.giant - lo).abs() < 1e-10);
        assert!((lo - 0.7968).abs() < 1e-4);
    }

    #[test]
    fn subcritical_giant_is_zero() {
        assert_eq!(solve_fixed_point(0.5f64, 1.5).unwrap().giant, 0.0);
    }

    #[test]
    fn unequal_plateau() {
        let ratio: SizeRatio = "4:1".parse().unwrap();
        let rows = theory_curve(ratio, &[6.0f64]).unwrap();
        assert!((rows[0].solution.x - 0.2).abs() < 1e-3);
    }

    #[test]
    fn single_precision_agrees() {
        let a = solve_fixed_point(1.3f32, 2.1).unwrap();
        let b = solve_fixed_point(1.3f64, 2.1).unwrap();
        assert!((a.x as f64 - b.x).abs() < 1e-5);
    }

    #[test]
    fn ratio_parsing() {
        assert_eq!("4:3".parse::<SizeRatio>().unwrap(), SizeRatio { n1: 4, n2: 3 });
        assert!("4".parse::<SizeRatio>().is_err());
        assert!("0:1".parse::<SizeRatio>().is_err());
        let (c1, c2) = SizeRatio::new(4, 1).unwrap().side_degrees(2.0f64);
        assert!((2.0 * c1 * c2 / (c1 + c2) - 2.0).abs() < 1e-12);
        assert!((c1 * 4.0 - c2).abs() < 1e-12);
    }

    #[test]
    fn negative_degree_rejected() {
        assert!(solve_fixed_point(-1.0f64, 1.0).is_err());
        assert!(theory_curve(SizeRatio::new(1, 1).unwrap(), &[-0.5f64]).is_err());
    }

    #[test]
    fn poisson_values() {
        assert_eq!(poisson_pmf(0.0f64, 0), 1.0);
        assert!((poisson_pmf(1.0f64, 1) - (-1.0f64).exp()).abs() < 1e-15);
        let total: f64 = (0..=50).map(|k| poisson_pmf(4.0f64, k)).sum();
        assert!((total - 1.0).abs() < 1e-9);
    }
}
