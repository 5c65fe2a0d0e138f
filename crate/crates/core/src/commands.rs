//! Logic behind the `power-spectra` binary: parameter parsing helpers,
//! sweeps, CSV/JSON emitters, the example reproduction table and the
//! invariant verifier.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{self, bound_report, BoundReport};
use crate::group::{is_prime, prime_power_decompose, Family, GroupSpec};
use crate::powergraph::{
    build_definitional, build_structural, ratio_to_f64, MatrixKind, PowerGraph,
};
use crate::spectra::{
    interlacing_holds, is_equitable, quotient_matrix, spectral_radius_power_iteration,
    symmetric_eigenvalues, TOL_POWER, TOL_RADIUS_EQ,
};
use crate::{Error, Result};

/// Failure classes of the command line, each with its own exit code.
#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error("{0}")]
    Usage(String),
    #[error("bound verification failed: {0}")]
    Verification(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("reproduction mismatch: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Library(#[from] Error),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Usage(_) => 2,
            CommandError::Verification(_) => 3,
            CommandError::Io(_) => 4,
            CommandError::Mismatch(_) => 5,
            CommandError::Library(Error::Domain(_) | Error::OrderTooLarge { .. } | Error::InvalidElement { .. }) => 2,
            CommandError::Library(_) => 3,
        }
    }
}

/// An inclusive parameter range written as `N` or `A..B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NRange(pub RangeInclusive<usize>);

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad integer '{t}': {e}"));
        let range = match s.split_once("..") {
            Some((a, b)) => parse(a)?..=parse(b.trim_start_matches('='))?,
            None => {
                let v = parse(s)?;
                v..=v
            }
        };
        if range.is_empty() {
            return Err(format!("empty range '{s}'"));
        }
        Ok(NRange(range))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format '{other}' (expected csv or json)")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub family: Family,
    /// Parameter `n`; for the semiprime family, the range of orders `pq`.
    pub range: RangeInclusive<usize>,
    pub kind: MatrixKind,
    pub format: OutputFormat,
}

impl SweepSpec {
    /// The instances covered, in output order.
    pub fn instances(&self) -> std::result::Result<Vec<GroupSpec>, CommandError> {
        let out: Vec<GroupSpec> = match self.family {
            Family::SemiprimeCyclic => semiprimes_in(self.range.clone())
                .into_iter()
                .map(|(p, q)| GroupSpec::semiprime(p, q))
                .collect::<Result<_>>()?,
            family => {
                let lo = *self.range.start();
                let min = match (family, self.kind) {
                    (Family::Cyclic, MatrixKind::Adjacency) => 3,
                    _ => family.min_n(),
                };
                if lo < min {
                    return Err(CommandError::Usage(format!("{family} sweeps need n >= {min}, got {lo}")));
                }
                self.range
                    .clone()
                    .map(|n| GroupSpec::from_parts(family, Some(n), None, None))
                    .collect::<Result<_>>()?
            }
        };
        if out.is_empty() {
            return Err(CommandError::Usage("sweep range contains no instances".into()));
        }
        let max = crate::max_order();
        if let Some(g) = out.iter().find(|g| g.order() > max) {
            return Err(Error::OrderTooLarge { order: g.order(), max }.into());
        }
        Ok(out)
    }
}

/// Pairs `p < q` of primes with `pq` in `orders`, ordered by `pq`.
pub fn semiprimes_in(orders: RangeInclusive<usize>) -> Vec<(usize, usize)> {
    let hi = *orders.end();
    let mut out = Vec::new();
    for p in (2..=hi).filter(|&p| is_prime(p)) {
        if p * p > hi {
            break;
        }
        for q in (p + 1..=hi / p).filter(|&q| is_prime(q)) {
            if orders.contains(&(p * q)) {
                out.push((p, q));
            }
        }
    }
    out.sort_by_key(|&(p, q)| (p * q, p));
    out
}

/// One report per instance, computed in parallel and returned in input order.
pub fn run_reports(instances: &[GroupSpec], kind: MatrixKind) -> Result<Vec<BoundReport>> {
    instances.par_iter().map(|g| bound_report(g, kind)).collect()
}

pub fn sweep(spec: &SweepSpec) -> std::result::Result<Vec<BoundReport>, CommandError> {
    let instances = spec.instances()?;
    Ok(run_reports(&instances, spec.kind)?)
}

/// `x` with 10 significant digits, `.` as decimal separator.
pub fn sig10(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-4..10).contains(&magnitude) {
        return format!("{x:.9e}");
    }
    let decimals = (9 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

pub const CSV_HEADER: &str = "family,n,p,q,kind,radius,lower,upper,prior_lower,prior_upper,lower_gap,upper_gap,lower_tight,upper_tight,degenerate,sandwich,cubic_error";

pub fn to_csv(reports: &[BoundReport]) -> String {
    let opt = |v: Option<f64>| v.map(sig10).unwrap_or_default();
    let mut s = String::new();
    let _ = writeln!(s, "{CSV_HEADER}");
    for r in reports {
        let kind = match r.kind {
            bounds::BoundKind::AdjacencyRadius => "adjacency",
            bounds::BoundKind::DistanceRadius => "distance",
        };
        let cubic_error = (r.family == Family::SemiprimeCyclic).then(|| (r.lower - r.radius).abs());
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.family,
            r.n,
            r.p.map(|p| p.to_string()).unwrap_or_default(),
            r.q.map(|q| q.to_string()).unwrap_or_default(),
            kind,
            sig10(r.radius),
            sig10(r.lower),
            opt(r.upper),
            opt(r.prior_lower),
            opt(r.prior_upper),
            sig10(r.lower_gap()),
            opt(r.upper_gap()),
            r.lower_tight,
            r.upper_tight,
            r.degenerate,
            r.sandwich_holds(),
            cubic_error.map(|e| format!("{e:.3e}")).unwrap_or_default(),
        );
    }
    s
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize") + "\n"
}

/// Reports whose sandwich fails, as a printable list.
pub fn sandwich_failures(reports: &[BoundReport]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !r.sandwich_holds())
        .map(|r| {
            format!(
                "{} n={} {:?}: lower={} radius={} upper={:?}",
                r.family, r.n, r.kind, r.lower, r.radius, r.upper
            )
        })
        .collect()
}

/// One line of the example-reproduction table.
#[derive(Debug, Clone, Serialize)]
pub struct ReproLine {
    pub label: String,
    pub expected: f64,
    pub computed: f64,
    pub pass: bool,
}

/// Printed values agree to five decimals.
pub const REPRO_TOL: f64 = 1e-4;

fn repro(label: impl Into<String>, expected: f64, computed: f64) -> ReproLine {
    ReproLine { label: label.into(), expected, computed, pass: (expected - computed).abs() <= REPRO_TOL }
}

/// Recomputes every number in the worked examples.
pub fn reproduce() -> Result<Vec<ReproLine>> {
    let mut out = Vec::new();
    let z6 = PowerGraph::new(GroupSpec::cyclic(6)?)?;
    out.push(repro("lambda_1(P(Z_6))", 4.42788, symmetric_eigenvalues(&z6.adjacency)?.radius));
    out.push(repro("largest root of x^3-3x^2-7x+3", 4.42788, bounds::adjacency_cubic_semiprime(2, 3)?.root));
    out.push(repro("D_avg(P(Z_6)) = 13/3", 13.0 / 3.0, ratio_to_f64(z6.average_row_sum(MatrixKind::Adjacency))));

    let d12 = bounds::adjacency_bounds_dihedral(6)?;
    out.push(repro("D_12 prior lower", 4.42788, d12.prior_lower.unwrap_or(f64::NAN)));
    out.push(repro("D_12 prior upper", 6.87737, d12.prior_upper.unwrap_or(f64::NAN)));
    out.push(repro("D_12 lower", 4.55297, d12.lower));
    out.push(repro("D_12 upper", 6.0, d12.upper.unwrap_or(f64::NAN)));

    for pm in [4usize, 5, 8, 9] {
        let r = bounds::adjacency_bounds_dihedral(pm)?;
        let x = pm as f64;
        out.push(repro(format!("D_{} prior lower p^m-1", 2 * pm), x - 1.0, r.prior_lower.unwrap_or(f64::NAN)));
        out.push(repro(
            format!("D_{} prior upper p^m+sqrt(p^m)-1", 2 * pm),
            x + x.sqrt() - 1.0,
            r.prior_upper.unwrap_or(f64::NAN),
        ));
        out.push(repro(
            format!("D_{} lower (p^m-1+sqrt((p^m-1)^2+4))/2", 2 * pm),
            0.5 * (x - 1.0 + ((x - 1.0).powi(2) + 4.0).sqrt()),
            r.lower,
        ));
        out.push(repro(format!("D_{} upper p^m", 2 * pm), x, r.upper.unwrap_or(f64::NAN)));
    }

    let q12 = bounds::adjacency_bounds_dicyclic(3)?;
    out.push(repro("Q_12 prior lower", 4.42788, q12.prior_lower.unwrap_or(f64::NAN)));
    out.push(repro("Q_12 prior upper", 7.89198, q12.prior_upper.unwrap_or(f64::NAN)));
    out.push(repro("Q_12 lower", 5.27008, q12.lower));
    out.push(repro("Q_12 upper", 7.0, q12.upper.unwrap_or(f64::NAN)));

    for m in 2..=4u32 {
        let n = 2usize.pow(m);
        let r = bounds::adjacency_bounds_dicyclic(n)?;
        let x = n as f64;
        let order = 4 * n;
        out.push(repro(format!("Q_{order} prior lower 2^(m+1)-1"), 2.0 * x - 1.0, r.prior_lower.unwrap_or(f64::NAN)));
        out.push(repro(
            format!("Q_{order} prior upper 2^(m+1)+2sqrt(2^m)-1"),
            2.0 * x + 2.0 * x.sqrt() - 1.0,
            r.prior_upper.unwrap_or(f64::NAN),
        ));
        out.push(repro(format!("Q_{order} lower 2^m+sqrt((2^m-1)^2+4)"), x + ((x - 1.0).powi(2) + 4.0).sqrt(), r.lower));
        out.push(repro(format!("Q_{order} upper 2^(m+1)+1"), 2.0 * x + 1.0, r.upper.unwrap_or(f64::NAN)));
    }
    Ok(out)
}

pub fn format_repro(lines: &[ReproLine]) -> String {
    let mut s = String::new();
    for l in lines {
        let _ = writeln!(
            s,
            "{:<4} {:<48} expected {:>12.5}  computed {:>12.5}",
            if l.pass { "PASS" } else { "FAIL" },
            l.label,
            l.expected,
            l.computed
        );
    }
    s
}

/// Outcome of one invariant family in [`verify`].
#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Parameter ranges used by [`verify`].
#[derive(Debug, Clone)]
pub struct VerifyRanges {
    pub cyclic: RangeInclusive<usize>,
    pub dihedral: RangeInclusive<usize>,
    pub dicyclic: RangeInclusive<usize>,
    pub semiprime_orders: RangeInclusive<usize>,
    pub structural_max_order: usize,
}

impl VerifyRanges {
    pub fn full() -> Self {
        VerifyRanges { cyclic: 3..=200, dihedral: 3..=100, dicyclic: 2..=50, semiprime_orders: 6..=200, structural_max_order: 96 }
    }

    pub fn quick() -> Self {
        VerifyRanges { cyclic: 3..=40, dihedral: 3..=20, dicyclic: 2..=10, semiprime_orders: 6..=60, structural_max_order: 40 }
    }

    fn all_groups(&self) -> Result<Vec<GroupSpec>> {
        let mut out = Vec::new();
        for n in self.cyclic.clone() {
            out.push(GroupSpec::cyclic(n)?);
        }
        for n in self.dihedral.clone() {
            out.push(GroupSpec::dihedral(n)?);
        }
        for n in self.dicyclic.clone() {
            out.push(GroupSpec::dicyclic(n)?);
        }
        for (p, q) in semiprimes_in(self.semiprime_orders.clone()) {
            out.push(GroupSpec::semiprime(p, q)?);
        }
        Ok(out)
    }
}

fn check<T: Sync>(name: &'static str, cases: &[T], f: impl Fn(&T) -> Result<Option<String>> + Sync) -> CheckOutcome {
    let failures: Vec<String> = cases
        .par_iter()
        .map(|c| match f(c) {
            Ok(v) => v,
            Err(e) => Some(format!("error: {e}")),
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    CheckOutcome { name, cases: cases.len(), failures }
}

/// Runs the invariant suite over `ranges`.
pub fn verify(ranges: &VerifyRanges) -> Result<Vec<CheckOutcome>> {
    let groups = ranges.all_groups()?;
    let small: Vec<GroupSpec> = groups.iter().copied().filter(|g| g.order() <= ranges.structural_max_order).collect();
    let mut out = Vec::new();

    out.push(check("element orders divide the group order", &small, |g| {
        for a in g.elements() {
            if g.order() % g.elem_order(a)? != 0 {
                return Ok(Some(format!("{g}: order of {} does not divide {}", g.label(a), g.order())));
            }
        }
        Ok(None)
    }));

    out.push(check("power agrees with repeated multiplication", &small, |g| {
        for a in g.elements() {
            let mut acc = g.identity();
            for k in 0..=g.order() {
                if g.power(a, k as u64)? != acc {
                    return Ok(Some(format!("{g}: {}^{k}", g.label(a))));
                }
                acc = g.multiply(acc, a)?;
            }
        }
        Ok(None)
    }));

    out.push(check("structural builder equals definitional builder", &small, |g| {
        Ok((build_structural(g)? != build_definitional(g)?).then(|| format!("{g}")))
    }));

    out.push(check("transmission = 2(order-1) - degree", &groups, |g| {
        let pg = PowerGraph::new(*g)?;
        let deg = pg.adjacency.row_sums();
        let tr = pg.distance.row_sums();
        let two = 2 * (g.order() as u64 - 1);
        Ok(deg.iter().zip(&tr).position(|(d, t)| d + t != two).map(|v| format!("{g}: vertex {v}")))
    }));

    let cyclic: Vec<usize> = (2..=*ranges.cyclic.end()).collect();
    out.push(check("P(C_n) complete iff n is a prime power", &cyclic, |&n| {
        let a = build_structural(&GroupSpec::cyclic(n)?)?;
        let complete = a.row_sums().iter().all(|&d| d == n as u64 - 1);
        Ok((complete != prime_power_decompose(n).is_some()).then(|| format!("n={n}")))
    }));

    out.push(check("identity vertex is universal", &groups, |g| {
        let a = build_structural(g)?;
        Ok((a.row_sum(0) != g.order() as u64 - 1).then(|| format!("{g}")))
    }));

    let mut report_cases = Vec::new();
    for g in &groups {
        for kind in [MatrixKind::Adjacency, MatrixKind::Distance] {
            if !(g.family() == Family::Cyclic && kind == MatrixKind::Adjacency && g.n() < 3) {
                report_cases.push((*g, kind));
            }
        }
    }
    out.push(check("bounds sandwich the Jacobi radius", &report_cases, |(g, kind)| {
        let r = bound_report(g, *kind)?;
        Ok((!r.sandwich_holds()).then(|| format!("{g} {kind}: lower={} radius={} upper={:?}", r.lower, r.radius, r.upper)))
    }));

    out.push(check("lower bound equals the two-block quotient radius", &report_cases, |(g, kind)| {
        if g.family() == Family::SemiprimeCyclic {
            return Ok(None);
        }
        let r = bound_report(g, *kind)?;
        if r.degenerate {
            return Ok(None);
        }
        let pg = PowerGraph::new(*g)?;
        let q = quotient_matrix(pg.matrix(*kind), &pg.ordering.partition())?.radius()?;
        Ok(((q - r.lower).abs() > 1e-9).then(|| format!("{g} {kind}: quotient {q} vs bound {}", r.lower)))
    }));

    let semis: Vec<GroupSpec> = groups.iter().copied().filter(|g| g.family() == Family::SemiprimeCyclic).collect();
    out.push(check("cubic largest roots equal Jacobi radii", &semis, |g| {
        let (p, q) = g.primes().expect("semiprime");
        let pg = PowerGraph::new(*g)?;
        let a = bounds::adjacency_cubic_semiprime(p, q)?.root;
        let d = bounds::distance_cubic_semiprime(p, q)?.root;
        let ra = symmetric_eigenvalues(&pg.adjacency)?.radius;
        let rd = symmetric_eigenvalues(&pg.distance)?.radius;
        Ok(((a - ra).abs() > TOL_RADIUS_EQ || (d - rd).abs() > TOL_RADIUS_EQ).then(|| format!("{g}: {a} vs {ra}, {d} vs {rd}")))
    }));

    out.push(check("equitable semiprime partition preserves the radius", &semis, |g| {
        let pg = PowerGraph::new(*g)?;
        let pi = pg.ordering.partition();
        for kind in [MatrixKind::Adjacency, MatrixKind::Distance] {
            let m = pg.matrix(kind);
            if !is_equitable(m, &pi) || !crate::spectra::equitable_radius_equality(m, &pi)? {
                return Ok(Some(format!("{g} {kind}")));
            }
        }
        Ok(None)
    }));

    out.push(check("quotient eigenvalues interlace", &report_cases, |(g, kind)| {
        let pg = PowerGraph::new(*g)?;
        let m = pg.matrix(*kind);
        let big = symmetric_eigenvalues(m)?.eigenvalues;
        let small = quotient_matrix(m, &pg.ordering.partition())?.eigenvalues()?;
        Ok((!interlacing_holds(&big, &small)?).then(|| format!("{g} {kind}")))
    }));

    out.push(check("Perron radius is simple and matches power iteration", &report_cases, |(g, kind)| {
        let pg = PowerGraph::new(*g)?;
        let m = pg.matrix(*kind);
        let jac = symmetric_eigenvalues(m)?;
        let pow = spectral_radius_power_iteration(m)?;
        Ok((jac.radius_multiplicity != 1 || (jac.radius - pow.radius).abs() > 10.0 * TOL_POWER)
            .then(|| format!("{g} {kind}: multiplicity {} jacobi {} power {}", jac.radius_multiplicity, jac.radius, pow.radius)))
    }));

    let cyc_adj: Vec<usize> = ranges.cyclic.clone().collect();
    out.push(check("cyclic average-degree bound >= minimum-degree bound", &cyc_adj, |&n| {
        let r = bounds::adjacency_lower_cyclic(n)?;
        let prior = r.prior_lower.unwrap_or(f64::NAN);
        Ok((r.lower < prior - 1e-12).then(|| format!("n={n}: {} < {prior}", r.lower)))
    }));

    let cyc_dist: Vec<usize> = (2..=*ranges.cyclic.end()).collect();
    out.push(check("cyclic distance bounds tight iff n is a prime power", &cyc_dist, |&n| {
        let r = bounds::distance_bounds_cyclic(n)?;
        let tight = r.lower_tight && r.upper_tight;
        Ok((tight != prime_power_decompose(n).is_some()).then(|| format!("n={n}: tight={tight}")))
    }));

    Ok(out)
}

pub fn format_verify(outcomes: &[CheckOutcome]) -> String {
    let mut s = String::new();
    for o in outcomes {
        let _ = writeln!(s, "{:<4} {:<56} {:>5} cases", if o.passed() { "PASS" } else { "FAIL" }, o.name, o.cases);
        for f in o.failures.iter().take(5) {
            let _ = writeln!(s, "       {f}");
        }
    }
    s
}
