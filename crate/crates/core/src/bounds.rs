//! Spectral radius bounds for the power graphs of `C_n`, `D_2n` and `Q_4n`,
//! the characteristic cubics of `Z_pq`, and the earlier bounds they are
//! compared against.
//!
//! Every lower bound here is the spectral radius of a 2×2 quotient matrix
//! over the canonical `{V1, V2}` split. Upper bounds come from bounding the
//! Perron vector componentwise on each block. Reports carry the Jacobi radius
//! of the actual graph so each bound can be checked on the spot.

use serde::Serialize;

use crate::group::{euler_phi, Family, GroupSpec};
use crate::powergraph::{
    ratio_to_f64, subset_degree_stats, subset_transmission_stats, MatrixKind, PowerGraph, Rational,
};
use crate::spectra::{largest_cubic_root, symmetric_eigenvalues, TOL_RADIUS_EQ};
use crate::{Error, Result};

/// Degree and transmission statistics of `P(C_n)` feeding the bound formulas.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundInputs {
    pub n: usize,
    /// `φ(n) + 1`, the size of `V1`.
    pub l: usize,
    /// Average/minimum whole-graph degree over `V2`; `None` when `V2` is empty.
    pub d_avg: Option<Rational>,
    pub d_min: Option<Rational>,
    /// Average degree of `P(C_n)`.
    pub degree_avg: Rational,
    /// Average/maximum transmission over `V2`.
    pub tr_avg: Option<Rational>,
    pub tr_max: Option<Rational>,
    /// Average/maximum transmission over all of `P(C_n)`.
    pub transmission_avg: Rational,
    pub transmission_max: Rational,
}

impl BoundInputs {
    pub fn for_cyclic(n: usize) -> Result<Self> {
        let graph = PowerGraph::new(GroupSpec::cyclic(n)?)?;
        let l = euler_phi(n)? + 1;
        let v2 = graph.ordering.block(1);
        let all: Vec<usize> = (0..n).collect();
        let (d_avg, d_min, tr_avg, tr_max) = if v2.is_empty() {
            (None, None, None, None)
        } else {
            let deg = subset_degree_stats(&graph.adjacency, &v2)?;
            let tr = subset_transmission_stats(&graph.distance, &v2)?;
            (Some(deg.avg), Some(deg.min), Some(tr.avg), Some(tr.max))
        };
        let deg_all = subset_degree_stats(&graph.adjacency, &all)?;
        let tr_all = subset_transmission_stats(&graph.distance, &all)?;
        Ok(BoundInputs {
            n,
            l,
            d_avg,
            d_min,
            degree_avg: deg_all.avg,
            tr_avg,
            tr_max,
            transmission_avg: tr_all.avg,
            transmission_max: tr_all.max,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    AdjacencyRadius,
    DistanceRadius,
}

impl From<MatrixKind> for BoundKind {
    fn from(k: MatrixKind) -> Self {
        match k {
            MatrixKind::Adjacency => BoundKind::AdjacencyRadius,
            MatrixKind::Distance => BoundKind::DistanceRadius,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub family: Family,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    pub kind: BoundKind,
    pub lower: f64,
    pub upper: Option<f64>,
    pub radius: f64,
    pub lower_tight: bool,
    pub upper_tight: bool,
    pub prior_lower: Option<f64>,
    pub prior_upper: Option<f64>,
    /// The earlier lower bound is strict (`<`).
    pub prior_lower_open: bool,
    /// The earlier upper bound is strict (`<`); false means `≤`.
    pub prior_upper_open: bool,
    /// `V2` was empty and the complete-graph value was used.
    pub degenerate: bool,
}

impl BoundReport {
    fn new(g: &GroupSpec, kind: BoundKind, lower: f64, upper: Option<f64>, radius: f64) -> Self {
        let (p, q) = g.primes().map_or((None, None), |(p, q)| (Some(p), Some(q)));
        BoundReport {
            family: g.family(),
            n: g.n(),
            p,
            q,
            kind,
            lower,
            upper,
            radius,
            lower_tight: (lower - radius).abs() <= TOL_RADIUS_EQ,
            upper_tight: upper.is_some_and(|u| (u - radius).abs() <= TOL_RADIUS_EQ),
            prior_lower: None,
            prior_upper: None,
            prior_lower_open: false,
            prior_upper_open: false,
            degenerate: false,
        }
    }

    /// `lower − tol ≤ radius ≤ upper + tol`, the upper side only when present.
    pub fn sandwich_holds(&self) -> bool {
        self.lower <= self.radius + TOL_RADIUS_EQ && self.upper.is_none_or(|u| self.radius <= u + TOL_RADIUS_EQ)
    }

    pub fn lower_gap(&self) -> f64 {
        self.radius - self.lower
    }

    pub fn upper_gap(&self) -> Option<f64> {
        self.upper.map(|u| u - self.radius)
    }

    pub fn comparison(&self) -> Comparison {
        compare(self, self.prior_lower, self.prior_upper)
    }
}

/// Radius of `[[l−1, n−l], [l, s−l]]`: `½[(s−1) + √((s+1−2l)² + 4l(n−l))]`.
/// With `s` a `V2` degree statistic it is the cyclic adjacency bound; with a
/// `V2` transmission statistic it is the cyclic distance bound.
pub fn cyclic_two_block_radius(s: f64, l: usize, n: usize) -> f64 {
    let (l, n) = (l as f64, n as f64);
    0.5 * ((s - 1.0) + ((s + 1.0 - 2.0 * l).powi(2) + 4.0 * l * (n - l)).sqrt())
}

fn jacobi_radius(graph: &PowerGraph, kind: MatrixKind) -> Result<f64> {
    Ok(symmetric_eigenvalues(graph.matrix(kind))?.radius)
}

fn complete_graph_report(g: &GroupSpec, kind: BoundKind, radius: f64) -> BoundReport {
    let value = (g.order() - 1) as f64;
    let mut r = BoundReport::new(g, kind, value, Some(value), radius);
    r.degenerate = true;
    r
}

/// Improved lower bound on `λ_1(P(C_n))` from the average `V2` degree.
pub fn adjacency_lower_cyclic(n: usize) -> Result<BoundReport> {
    if n < 3 {
        return Err(Error::domain(format!("cyclic adjacency bound needs n >= 3, got {n}")));
    }
    let g = GroupSpec::cyclic(n)?;
    let graph = PowerGraph::new(g)?;
    let radius = jacobi_radius(&graph, MatrixKind::Adjacency)?;
    let inputs = BoundInputs::for_cyclic(n)?;
    let kind = BoundKind::AdjacencyRadius;
    let mut report = match (inputs.d_avg, inputs.d_min) {
        (Some(d_avg), Some(_)) => BoundReport::new(&g, kind, cyclic_two_block_radius(ratio_to_f64(d_avg), inputs.l, n), None, radius),
        _ => complete_graph_report(&g, kind, radius),
    };
    report.prior_lower = Some(prior_from_inputs(&inputs));
    Ok(report)
}

fn prior_from_inputs(inputs: &BoundInputs) -> f64 {
    match inputs.d_min {
        Some(d_min) => cyclic_two_block_radius(ratio_to_f64(d_min), inputs.l, inputs.n),
        None => (inputs.n - 1) as f64,
    }
}

/// The earlier lower bound on `λ_1(P(C_n))`, built from the minimum `V2` degree.
pub fn prior_adjacency_lower_cyclic(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::domain(format!("cyclic adjacency bound needs n >= 3, got {n}")));
    }
    Ok(prior_from_inputs(&BoundInputs::for_cyclic(n)?))
}

/// `½[D + √(D² + 4)] ≤ λ_1(P(D_2n)) ≤ n`, `D` the average degree of `P(C_n)`.
/// The earlier interval `(λ_1(P(C_n)), λ_1(P(C_n)) + √n]` is attached.
pub fn adjacency_bounds_dihedral(n: usize) -> Result<BoundReport> {
    let g = GroupSpec::dihedral(n)?;
    let graph = PowerGraph::new(g)?;
    let radius = jacobi_radius(&graph, MatrixKind::Adjacency)?;
    let d = ratio_to_f64(BoundInputs::for_cyclic(n)?.degree_avg);
    let lower = 0.5 * (d + (d * d + 4.0).sqrt());
    let mut report = BoundReport::new(&g, BoundKind::AdjacencyRadius, lower, Some(n as f64), radius);
    let core = jacobi_radius(&PowerGraph::new(GroupSpec::cyclic(n)?)?, MatrixKind::Adjacency)?;
    report.prior_lower = Some(core);
    report.prior_upper = Some(core + (n as f64).sqrt());
    report.prior_lower_open = true;
    Ok(report)
}

/// `½[(D+1) + √((D−1)² + 16)] ≤ λ_1(P(Q_4n)) ≤ 2n+1`, `D` the average degree
/// of `P(C_2n)`. The earlier interval `(λ_1(P(C_2n)), λ_1(P(C_2n)) + 2√n]` is attached.
pub fn adjacency_bounds_dicyclic(n: usize) -> Result<BoundReport> {
    let g = GroupSpec::dicyclic(n)?;
    let graph = PowerGraph::new(g)?;
    let radius = jacobi_radius(&graph, MatrixKind::Adjacency)?;
    let d = ratio_to_f64(BoundInputs::for_cyclic(2 * n)?.degree_avg);
    let lower = 0.5 * ((d + 1.0) + ((d - 1.0).powi(2) + 16.0).sqrt());
    let mut report = BoundReport::new(&g, BoundKind::AdjacencyRadius, lower, Some((2 * n + 1) as f64), radius);
    let core = jacobi_radius(&PowerGraph::new(GroupSpec::cyclic(2 * n)?)?, MatrixKind::Adjacency)?;
    report.prior_lower = Some(core);
    report.prior_upper = Some(core + 2.0 * (n as f64).sqrt());
    report.prior_lower_open = true;
    Ok(report)
}

/// Monic cubic `x³ + c2 x² + c1 x + c0` and its largest root.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CubicResult {
    pub c2: i64,
    pub c1: i64,
    pub c0: i64,
    pub root: f64,
}

impl CubicResult {
    fn from_coefficients(c2: i64, c1: i64, c0: i64) -> Self {
        CubicResult { c2, c1, c0, root: largest_cubic_root(c2 as f64, c1 as f64, c0 as f64) }
    }

    pub fn eval(&self, x: f64) -> f64 {
        ((x + self.c2 as f64) * x + self.c1 as f64) * x + self.c0 as f64
    }
}

fn semiprime_params(p: usize, q: usize) -> Result<(i64, i64)> {
    GroupSpec::semiprime(p, q)?;
    Ok((p as i64, q as i64))
}

/// `x³ − (pq−3)x² − (pq+p+q−4)x + (p²q² − 2p²q − 2pq² + p² + 5pq + q² − 4p − 4q + 4)`,
/// whose largest root is `λ_1(P(Z_pq))`.
pub fn adjacency_cubic_semiprime(p: usize, q: usize) -> Result<CubicResult> {
    let (p, q) = semiprime_params(p, q)?;
    let pq = p * q;
    Ok(CubicResult::from_coefficients(
        -(pq - 3),
        -(pq + p + q - 4),
        pq * pq - 2 * p * p * q - 2 * p * q * q + p * p + 5 * pq + q * q - 4 * p - 4 * q + 4,
    ))
}

/// `x³ − (pq−3)x² − (5pq−3p−3q)x + (p²q² − 2p²q − 2pq² + p² + pq + q²)`,
/// whose largest root is `ρ_1(P(Z_pq))`.
pub fn distance_cubic_semiprime(p: usize, q: usize) -> Result<CubicResult> {
    let (p, q) = semiprime_params(p, q)?;
    let pq = p * q;
    Ok(CubicResult::from_coefficients(
        -(pq - 3),
        -(5 * pq - 3 * p - 3 * q),
        pq * pq - 2 * p * p * q - 2 * p * q * q + p * p + pq + q * q,
    ))
}

/// Report for `Z_pq`: lower and upper are both the cubic's largest root.
pub fn semiprime_report(p: usize, q: usize, kind: MatrixKind) -> Result<BoundReport> {
    let g = GroupSpec::semiprime(p, q)?;
    let graph = PowerGraph::new(g)?;
    let radius = jacobi_radius(&graph, kind)?;
    let cubic = match kind {
        MatrixKind::Adjacency => adjacency_cubic_semiprime(p, q)?,
        MatrixKind::Distance => distance_cubic_semiprime(p, q)?,
    };
    Ok(BoundReport::new(&g, kind.into(), cubic.root, Some(cubic.root), radius))
}

/// Lower bound from the average and upper bound from the maximum `V2`
/// transmission of `P(C_n)`. Both coincide with `ρ_1` exactly when `n` is a
/// prime power.
pub fn distance_bounds_cyclic(n: usize) -> Result<BoundReport> {
    let g = GroupSpec::cyclic(n)?;
    let graph = PowerGraph::new(g)?;
    let radius = jacobi_radius(&graph, MatrixKind::Distance)?;
    let inputs = BoundInputs::for_cyclic(n)?;
    let kind = BoundKind::DistanceRadius;
    Ok(match (inputs.tr_avg, inputs.tr_max) {
        (Some(avg), Some(max)) => BoundReport::new(
            &g,
            kind,
            cyclic_two_block_radius(ratio_to_f64(avg), inputs.l, n),
            Some(cyclic_two_block_radius(ratio_to_f64(max), inputs.l, n)),
            radius,
        ),
        _ => complete_graph_report(&g, kind, radius),
    })
}

/// `T_avg`, `T_max` are transmissions of `P(C_n)` as a graph on its own.
pub fn distance_bounds_dihedral(n: usize) -> Result<BoundReport> {
    let g = GroupSpec::dihedral(n)?;
    let graph = PowerGraph::new(g)?;
    let radius = jacobi_radius(&graph, MatrixKind::Distance)?;
    let inputs = BoundInputs::for_cyclic(n)?;
    let t_avg = ratio_to_f64(inputs.transmission_avg);
    let t_max = ratio_to_f64(inputs.transmission_max);
    let m = 2.0 * n as f64 - 2.0;
    let w = 2.0 * n as f64 - 1.0;
    let lower = 0.5 * ((t_avg + m) + ((t_avg - m).powi(2) + 4.0 * w * w).sqrt());
    let upper = 0.5 * ((t_max + m) + ((t_max - m).powi(2) + 8.0 * n as f64 * w).sqrt());
    Ok(BoundReport::new(&g, BoundKind::DistanceRadius, lower, Some(upper), radius))
}

/// `T_avg`, `T_max` are transmissions of `P(C_2n)` as a graph on its own.
pub fn distance_bounds_dicyclic(n: usize) -> Result<BoundReport> {
    let g = GroupSpec::dicyclic(n)?;
    let graph = PowerGraph::new(g)?;
    let radius = jacobi_radius(&graph, MatrixKind::Distance)?;
    let inputs = BoundInputs::for_cyclic(2 * n)?;
    let t_avg = ratio_to_f64(inputs.transmission_avg);
    let t_max = ratio_to_f64(inputs.transmission_max);
    let m = 4.0 * n as f64 - 3.0;
    let w = 2.0 * n as f64 - 1.0;
    let lower = 0.5 * ((t_avg + m) + ((t_avg - m).powi(2) + 16.0 * w * w).sqrt());
    let upper = 0.5 * ((t_max + m) + ((t_max - m).powi(2) + 32.0 * n as f64 * w).sqrt());
    Ok(BoundReport::new(&g, BoundKind::DistanceRadius, lower, Some(upper), radius))
}

/// The report for any supported instance and matrix kind.
pub fn bound_report(g: &GroupSpec, kind: MatrixKind) -> Result<BoundReport> {
    match (g.family(), kind) {
        (Family::Cyclic, MatrixKind::Adjacency) => adjacency_lower_cyclic(g.n()),
        (Family::Cyclic, MatrixKind::Distance) => distance_bounds_cyclic(g.n()),
        (Family::Dihedral, MatrixKind::Adjacency) => adjacency_bounds_dihedral(g.n()),
        (Family::Dihedral, MatrixKind::Distance) => distance_bounds_dihedral(g.n()),
        (Family::Dicyclic, MatrixKind::Adjacency) => adjacency_bounds_dicyclic(g.n()),
        (Family::Dicyclic, MatrixKind::Distance) => distance_bounds_dicyclic(g.n()),
        (Family::SemiprimeCyclic, kind) => {
            let (p, q) = g.primes().expect("semiprime spec carries primes");
            semiprime_report(p, q, kind)
        }
    }
}

/// How a new interval relates to an earlier one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Comparison {
    /// `new.lower − prior_lower`; positive means the new lower bound is higher.
    pub lower_delta: Option<f64>,
    /// `prior_upper − new.upper`; positive means the new upper bound is lower.
    pub upper_delta: Option<f64>,
    /// Every available delta is `≥ −tol`.
    pub improved: bool,
}

impl Comparison {
    /// The new interval lies inside the earlier one (within tolerance).
    pub fn is_subset(&self) -> bool {
        self.lower_delta.is_some() && self.upper_delta.is_some() && self.improved
    }

    /// At least one endpoint is strictly better.
    pub fn improves_an_endpoint(&self) -> bool {
        self.lower_delta.is_some_and(|d| d > TOL_RADIUS_EQ) || self.upper_delta.is_some_and(|d| d > TOL_RADIUS_EQ)
    }
}

pub fn compare(new: &BoundReport, prior_lower: Option<f64>, prior_upper: Option<f64>) -> Comparison {
    let lower_delta = prior_lower.map(|p| new.lower - p);
    let upper_delta = match (prior_upper, new.upper) {
        (Some(p), Some(u)) => Some(p - u),
        _ => None,
    };
    let improved = [lower_delta, upper_delta].iter().flatten().all(|&d| d >= -TOL_RADIUS_EQ);
    Comparison { lower_delta, upper_delta, improved }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn cyclic_adjacency_n6() {
        let r = adjacency_lower_cyclic(6).unwrap();
        // ½[8/3 + √(16/9 + 36)]
        let expect = 0.5 * (8.0 / 3.0 + (16.0f64 / 9.0 + 36.0).sqrt());
        assert!(close(r.lower, expect, 1e-12));
        assert!(close(r.lower, 4.406515, 1e-6));
        assert!(close(r.radius, 4.42788, 1e-5));
        assert!(r.sandwich_holds());
        assert!(!r.lower_tight && !r.degenerate);
        assert!(close(prior_adjacency_lower_cyclic(6).unwrap(), 0.5 * (2.0 + 40f64.sqrt()), 1e-12));
        assert!(close(r.prior_lower.unwrap(), 4.16228, 1e-5));
    }

    #[test]
    fn cyclic_adjacency_prime_powers_and_primes() {
        for n in [4usize, 8, 9, 16, 25, 27] {
            let r = adjacency_lower_cyclic(n).unwrap();
            assert!(close(r.lower, (n - 1) as f64, 1e-9), "n={n}");
            assert!(r.lower_tight);
            assert!(close(prior_adjacency_lower_cyclic(n).unwrap(), (n - 1) as f64, 1e-9));
        }
        let r = adjacency_lower_cyclic(5).unwrap();
        assert!(r.degenerate);
        assert_eq!(r.lower, 4.0);
        assert!(adjacency_lower_cyclic(2).is_err());
        assert!(prior_adjacency_lower_cyclic(2).is_err());
    }

    #[test]
    fn dihedral_d12() {
        let r = adjacency_bounds_dihedral(6).unwrap();
        assert!(close(r.lower, 4.55297, 1e-5));
        assert_eq!(r.upper, Some(6.0));
        assert!(close(r.prior_lower.unwrap(), 4.42788, 1e-5));
        assert!(close(r.prior_upper.unwrap(), 6.87737, 1e-5));
        assert!(r.prior_lower_open && !r.prior_upper_open);
        assert!(r.sandwich_holds());
        assert!(adjacency_bounds_dihedral(2).is_err());
    }

    #[test]
    fn dihedral_prime_power_closed_form() {
        for pm in [3usize, 4, 5, 7, 8, 9] {
            let r = adjacency_bounds_dihedral(pm).unwrap();
            let x = (pm - 1) as f64;
            assert!(close(r.lower, 0.5 * (x + (x * x + 4.0).sqrt()), 1e-9));
            assert_eq!(r.upper, Some(pm as f64));
            assert!(close(r.prior_lower.unwrap(), x, 1e-9));
            assert!(close(r.prior_upper.unwrap(), pm as f64 + (pm as f64).sqrt() - 1.0, 1e-9));
        }
    }

    #[test]
    fn dicyclic_q12_and_powers_of_two() {
        let r = adjacency_bounds_dicyclic(3).unwrap();
        assert!(close(r.lower, 5.27008, 1e-5));
        assert_eq!(r.upper, Some(7.0));
        assert!(close(r.prior_lower.unwrap(), 4.42788, 1e-5));
        assert!(close(r.prior_upper.unwrap(), 7.89198, 1e-5));
        assert!(r.sandwich_holds());
        for m in 1..5u32 {
            let n = 2usize.pow(m);
            let r = adjacency_bounds_dicyclic(n).unwrap();
            let x = n as f64;
            assert!(close(r.lower, x + ((x - 1.0).powi(2) + 4.0).sqrt(), 1e-9));
        }
        assert!(adjacency_bounds_dicyclic(1).is_err());
    }

    #[test]
    fn semiprime_cubics() {
        let c = adjacency_cubic_semiprime(2, 3).unwrap();
        assert_eq!((c.c2, c.c1, c.c0), (-3, -7, 3));
        assert!(close(c.root, 4.42788, 1e-5));
        let c = adjacency_cubic_semiprime(3, 5).unwrap();
        assert_eq!((c.c2, c.c1, c.c0), (-12, -19, 66));
        let d = distance_cubic_semiprime(2, 3).unwrap();
        assert_eq!((d.c2, d.c1, d.c0), (-3, -15, -5));
        assert!(adjacency_cubic_semiprime(3, 3).is_err());
        assert!(distance_cubic_semiprime(4, 7).is_err());
        for (p, q) in [(2, 3), (3, 5), (2, 5)] {
            for kind in [MatrixKind::Adjacency, MatrixKind::Distance] {
                let r = semiprime_report(p, q, kind).unwrap();
                assert!(close(r.lower, r.radius, 1e-8), "{p}x{q} {kind}");
            }
        }
    }

    #[test]
    fn distance_cyclic_examples() {
        let r = distance_bounds_cyclic(6).unwrap();
        assert!(close(r.lower, 5.739848, 1e-6));
        assert!(close(r.upper.unwrap(), 6.16228, 1e-5));
        assert!(r.sandwich_holds());
        let root = distance_cubic_semiprime(2, 3).unwrap().root;
        assert!(r.lower <= root && root <= r.upper.unwrap());

        for n in [4usize, 8, 9] {
            let r = distance_bounds_cyclic(n).unwrap();
            assert!(close(r.lower, (n - 1) as f64, 1e-9));
            assert!(close(r.upper.unwrap(), (n - 1) as f64, 1e-9));
            assert!(r.lower_tight && r.upper_tight);
        }
        let r = distance_bounds_cyclic(2).unwrap();
        assert!(r.degenerate && r.lower_tight && r.upper_tight);
    }

    #[test]
    fn distance_dihedral_and_dicyclic_small() {
        let r = distance_bounds_dihedral(3).unwrap();
        assert!(close(r.lower, 0.5 * (6.0 + 104f64.sqrt()), 1e-12));
        assert!(close(r.upper.unwrap(), 0.5 * (6.0 + 124f64.sqrt()), 1e-12));
        assert!(r.sandwich_holds());
        assert!(distance_bounds_dihedral(6).unwrap().sandwich_holds());

        let r = distance_bounds_dicyclic(2).unwrap();
        assert!(close(r.lower, 0.5 * (8.0 + 148f64.sqrt()), 1e-12));
        assert!(close(r.upper.unwrap(), 0.5 * (8.0 + 196f64.sqrt()), 1e-12));
        assert!(r.sandwich_holds());
        assert!(distance_bounds_dicyclic(3).unwrap().sandwich_holds());
        assert!(distance_bounds_dicyclic(1).is_err());
        assert!(distance_bounds_dihedral(2).is_err());
    }

    #[test]
    fn comparisons_from_examples() {
        let c = adjacency_bounds_dihedral(6).unwrap().comparison();
        assert!(close(c.lower_delta.unwrap(), 4.55297 - 4.42788, 1e-4));
        assert!(close(c.upper_delta.unwrap(), 6.87737 - 6.0, 1e-4));
        assert!(c.improved && c.is_subset());
        let c = adjacency_bounds_dicyclic(3).unwrap().comparison();
        assert!(close(c.upper_delta.unwrap(), 7.89198 - 7.0, 1e-4));
        let c = adjacency_lower_cyclic(8).unwrap().comparison();
        assert!(c.improved && c.upper_delta.is_none());
    }

    #[test]
    fn report_json_schema() {
        let r = adjacency_bounds_dihedral(6).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        for key in [
            "family", "n", "kind", "lower", "upper", "radius", "lower_tight", "upper_tight", "prior_lower",
            "prior_upper", "degenerate",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["family"], "dihedral");
        assert_eq!(v["kind"], "adjacency_radius");
    }
}
