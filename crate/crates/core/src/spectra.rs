//! Numerical core: symmetric eigenvalues, Perron radius, quotient matrices,
//! equitable partitions, interlacing and cubic roots.

use serde::Serialize;

use crate::powergraph::{ratio_to_f64, Rational, SquareMatrix};
use crate::{Error, Result};

/// Off-diagonal Frobenius norm target for Jacobi, relative to the matrix norm.
pub const TOL_JACOBI: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 64;
/// Successive Rayleigh quotients closer than this stop power iteration.
pub const TOL_POWER: f64 = 1e-10;
pub const MAX_POWER_ITERATIONS: usize = 200_000;
/// Eigenvalues closer than this are counted as one cluster.
pub const TOL_CLUSTER: f64 = 1e-7;
/// Agreement required between two routes to the same spectral radius.
pub const TOL_RADIUS_EQ: f64 = 1e-7;
pub const TOL_ROOT: f64 = 1e-10;

/// Ordered list of disjoint, non-empty vertex blocks covering `0..dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    dim: usize,
}

impl Partition {
    pub fn new(blocks: Vec<Vec<usize>>, dim: usize) -> Result<Self> {
        let mut seen = vec![false; dim];
        for (k, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::domain(format!("partition block {k} is empty")));
            }
            for &v in block {
                if v >= dim {
                    return Err(Error::domain(format!("vertex {v} out of range for dimension {dim}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::domain(format!("vertex {v} appears in more than one block")));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::domain(format!("vertex {missing} is not covered by the partition")));
        }
        Ok(Partition { blocks, dim })
    }

    pub fn singletons(dim: usize) -> Self {
        Partition { blocks: (0..dim).map(|v| vec![v]).collect(), dim }
    }

    /// Consecutive blocks of the given sizes.
    pub fn consecutive(sizes: &[usize]) -> Result<Self> {
        let mut start = 0;
        let blocks = sizes
            .iter()
            .map(|&s| {
                let b: Vec<usize> = (start..start + s).collect();
                start += s;
                b
            })
            .collect();
        Partition::new(blocks, start)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumResult {
    /// Non-increasing.
    pub eigenvalues: Vec<f64>,
    pub radius: f64,
    #[serde(rename = "multiplicity")]
    pub radius_multiplicity: usize,
    #[serde(skip)]
    pub iterations: usize,
    #[serde(skip)]
    pub residual: f64,
    /// Unit-norm Perron vector; only filled by power iteration.
    #[serde(skip)]
    pub perron_vector: Option<Vec<f64>>,
}

fn cluster_count(sorted: &[f64]) -> usize {
    match sorted.first() {
        Some(&top) => sorted.iter().take_while(|&&x| top - x <= TOL_CLUSTER).count(),
        None => 0,
    }
}

/// All eigenvalues of an integer symmetric matrix by cyclic Jacobi rotations.
pub fn symmetric_eigenvalues(m: &SquareMatrix) -> Result<SpectrumResult> {
    jacobi_eigenvalues(m.to_f64())
}

/// Cyclic Jacobi on a dense real symmetric matrix given as rows.
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Result<SpectrumResult> {
    let n = a.len();
    if n == 0 {
        return Err(Error::domain("empty matrix"));
    }
    let frob = {
        let mut s = 0.0;
        for (i, row) in a.iter().enumerate() {
            if row.len() != n {
                return Err(Error::domain("matrix is not square"));
            }
            for (j, &x) in row.iter().enumerate() {
                if (x - a[j][i]).abs() > 1e-12 * (1.0 + x.abs()) {
                    return Err(Error::domain(format!("matrix is not symmetric at ({i},{j})")));
                }
                s += x * x;
            }
        }
        s.sqrt()
    };
    let target = TOL_JACOBI * frob.max(1.0);
    let off_norm = |a: &Vec<Vec<f64>>| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    let mut off = off_norm(&a);
    while off > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::Numeric(format!(
                "Jacobi did not converge in {MAX_SWEEPS} sweeps (off-diagonal norm {off:e})"
            )));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k][p];
                    let akq = a[k][q];
                    let new_kp = akp - s * (akq + tau * akp);
                    let new_kq = akq + s * (akp - tau * akq);
                    a[k][p] = new_kp;
                    a[p][k] = new_kp;
                    a[k][q] = new_kq;
                    a[q][k] = new_kq;
                }
            }
        }
        off = off_norm(&a);
    }

    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    Ok(SpectrumResult {
        radius: eigenvalues[0],
        radius_multiplicity: cluster_count(&eigenvalues),
        eigenvalues,
        iterations: sweeps,
        residual: off,
        perron_vector: None,
    })
}

/// Dominant eigenvalue of a non-negative irreducible matrix by power
/// iteration from the all-ones vector.
pub fn spectral_radius_power_iteration(m: &SquareMatrix) -> Result<SpectrumResult> {
    let n = m.dim();
    if m.max_entry() == 0 {
        return Err(Error::domain("power iteration needs a non-zero matrix"));
    }
    let rows = m.to_f64();
    let apply = |x: &[f64]| -> Vec<f64> {
        rows.iter().map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    };
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut prev = f64::NAN;
    for it in 1..=MAX_POWER_ITERATIONS {
        let y = apply(&x);
        let rq: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::Numeric("power iteration collapsed to the zero vector".into()));
        }
        if (rq - prev).abs() < TOL_POWER {
            let residual = y.iter().zip(&x).map(|(yi, xi)| (yi - rq * xi).powi(2)).sum::<f64>().sqrt();
            return Ok(SpectrumResult {
                eigenvalues: vec![rq],
                radius: rq,
                radius_multiplicity: 1,
                iterations: it,
                residual,
                perron_vector: Some(x),
            });
        }
        prev = rq;
        x = y.into_iter().map(|v| v / norm).collect();
    }
    Err(Error::Numeric(format!("power iteration did not converge in {MAX_POWER_ITERATIONS} steps")))
}

/// Matrix of average block row sums, held exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub entries: Vec<Vec<Rational>>,
    pub block_sizes: Vec<usize>,
}

impl QuotientMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.entries.iter().map(|r| r.iter().map(|&q| ratio_to_f64(q)).collect()).collect()
    }

    /// `S = N^{1/2} Q N^{-1/2}` with `N = diag(block sizes)`. For a quotient of
    /// a symmetric matrix `S_ij` is the block sum over `sqrt(n_i n_j)`, so `S`
    /// is symmetric and shares the eigenvalues of `Q`.
    pub fn symmetrized(&self) -> Vec<Vec<f64>> {
        let k = self.dim();
        let mut s = vec![vec![0.0; k]; k];
        for i in 0..k {
            for j in 0..k {
                let ni = self.block_sizes[i] as f64;
                let nj = self.block_sizes[j] as f64;
                s[i][j] = ratio_to_f64(self.entries[i][j]) * (ni / nj).sqrt();
            }
        }
        s
    }

    /// Characteristic polynomial `x^k + c_{k-1} x^{k-1} + … + c_0`, exact, for
    /// `k ≤ 3`; coefficients listed from `c_{k-1}` down to `c_0`.
    pub fn characteristic_polynomial(&self) -> Option<Vec<Rational>> {
        let q = &self.entries;
        match self.dim() {
            1 => Some(vec![-q[0][0]]),
            2 => Some(vec![-(q[0][0] + q[1][1]), q[0][0] * q[1][1] - q[0][1] * q[1][0]]),
            3 => {
                let tr = q[0][0] + q[1][1] + q[2][2];
                let minors = (q[0][0] * q[1][1] - q[0][1] * q[1][0])
                    + (q[0][0] * q[2][2] - q[0][2] * q[2][0])
                    + (q[1][1] * q[2][2] - q[1][2] * q[2][1]);
                let det = q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1])
                    - q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0])
                    + q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]);
                Some(vec![-tr, minors, -det])
            }
            _ => None,
        }
    }

    /// Eigenvalues, non-increasing. Up to 3 blocks they come from the
    /// characteristic polynomial in closed form; larger quotients go through
    /// Jacobi on [`Self::symmetrized`].
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let mut eigs = match self.characteristic_polynomial() {
            Some(c) => {
                let c: Vec<f64> = c.into_iter().map(ratio_to_f64).collect();
                match c.len() {
                    1 => vec![-c[0]],
                    2 => quadratic_roots_real_spectrum(c[0], c[1]).to_vec(),
                    _ => cubic_roots_real_spectrum(c[0], c[1], c[2]).to_vec(),
                }
            }
            None => jacobi_eigenvalues(self.symmetrized())?.eigenvalues,
        };
        eigs.sort_by(|x, y| y.total_cmp(x));
        Ok(eigs)
    }

    pub fn radius(&self) -> Result<f64> {
        Ok(self.eigenvalues()?[0])
    }
}

/// Quotient matrix of `m` for `partition`: entry `(i, j)` is the average row
/// sum of the block `m[X_i, X_j]`.
pub fn quotient_matrix(m: &SquareMatrix, partition: &Partition) -> Result<QuotientMatrix> {
    if partition.dim() != m.dim() {
        return Err(Error::domain(format!(
            "partition covers {} vertices but the matrix has dimension {}",
            partition.dim(),
            m.dim()
        )));
    }
    let blocks = partition.blocks();
    let entries = blocks
        .iter()
        .map(|bi| {
            blocks
                .iter()
                .map(|bj| {
                    let total: u64 = bi.iter().map(|&r| bj.iter().map(|&c| u64::from(m.get(r, c))).sum::<u64>()).sum();
                    Rational::new(total as i64, bi.len() as i64)
                })
                .collect()
        })
        .collect();
    Ok(QuotientMatrix { entries, block_sizes: blocks.iter().map(Vec::len).collect() })
}

/// True iff every block `m[X_i, X_j]` has constant row sums.
pub fn is_equitable(m: &SquareMatrix, partition: &Partition) -> bool {
    if partition.dim() != m.dim() {
        return false;
    }
    let blocks = partition.blocks();
    blocks.iter().all(|bi| {
        blocks.iter().all(|bj| {
            let sum = |r: usize| bj.iter().map(|&c| u64::from(m.get(r, c))).sum::<u64>();
            let first = sum(bi[0]);
            bi.iter().all(|&r| sum(r) == first)
        })
    })
}

/// Checks `λ_i ≥ μ_i ≥ λ_{n−m+i}` for both lists non-increasing, with
/// [`TOL_CLUSTER`] slack on every comparison.
pub fn interlacing_holds(big: &[f64], small: &[f64]) -> Result<bool> {
    let (n, m) = (big.len(), small.len());
    if m == 0 || m > n {
        return Err(Error::domain(format!("cannot interlace {m} values into {n}")));
    }
    Ok(small
        .iter()
        .enumerate()
        .all(|(i, &mu)| big[i] + TOL_CLUSTER >= mu && mu + TOL_CLUSTER >= big[n - m + i]))
}

/// For an equitable partition, compares the radius of `m` with the radius of
/// its quotient.
pub fn equitable_radius_equality(m: &SquareMatrix, partition: &Partition) -> Result<bool> {
    if !is_equitable(m, partition) {
        return Err(Error::Precondition("partition is not equitable".into()));
    }
    let full = symmetric_eigenvalues(m)?.radius;
    let quotient = quotient_matrix(m, partition)?.radius()?;
    Ok((full - quotient).abs() <= TOL_RADIUS_EQ)
}

fn cubic_eval(c2: f64, c1: f64, c0: f64, x: f64) -> f64 {
    ((x + c2) * x + c1) * x + c0
}

/// Newton steps that are kept only while they shrink `|p(x)|`.
fn polish(c2: f64, c1: f64, c0: f64, mut x: f64, steps: usize) -> f64 {
    for _ in 0..steps {
        let fx = cubic_eval(c2, c1, c0, x);
        let dfx = (3.0 * x + 2.0 * c2) * x + c1;
        if dfx == 0.0 {
            break;
        }
        let next = x - fx / dfx;
        if cubic_eval(c2, c1, c0, next).abs() < fx.abs() {
            x = next;
        } else {
            break;
        }
    }
    x
}

/// Roots of `x² + b x + c` when they are known to be real; a slightly
/// negative discriminant from rounding is clamped to zero.
pub fn quadratic_roots_real_spectrum(b: f64, c: f64) -> [f64; 2] {
    let disc = (b * b - 4.0 * c).max(0.0).sqrt();
    let big = if b <= 0.0 { (-b + disc) / 2.0 } else { (-b - disc) / 2.0 };
    let other = if big != 0.0 { c / big } else { -b - big };
    if big >= other {
        [big, other]
    } else {
        [other, big]
    }
}

/// Depressed form `t³ + p t + q` of `x³ + c2 x² + c1 x + c0`, with `x = t − c2/3`.
fn depress(c2: f64, c1: f64, c0: f64) -> (f64, f64, f64) {
    let shift = c2 / 3.0;
    let p = c1 - c2 * c2 / 3.0;
    let q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
    (p, q, shift)
}

/// All three roots of a monic cubic whose roots are known to be real (the
/// characteristic polynomial of a matrix similar to a symmetric one),
/// non-increasing. When rounding pushes the discriminant positive, the
/// near-double root is recovered from the real part of the complex pair.
pub fn cubic_roots_real_spectrum(c2: f64, c1: f64, c0: f64) -> [f64; 3] {
    let (p, q, shift) = depress(c2, c1, c0);
    let mut roots = if p < 0.0 && (q / 2.0).powi(2) + (p / 3.0).powi(3) < 0.0 {
        let r = (-p / 3.0).sqrt();
        let cos_arg = (-q / 2.0 / (r * r * r)).clamp(-1.0, 1.0);
        let phi = cos_arg.acos();
        let tau = std::f64::consts::TAU;
        [0.0, 1.0, 2.0].map(|k| 2.0 * r * ((phi - tau * k) / 3.0).cos() - shift)
    } else {
        let disc = ((q / 2.0).powi(2) + (p / 3.0).powi(3)).max(0.0).sqrt();
        let t = (-q / 2.0 + disc).cbrt() + (-q / 2.0 - disc).cbrt();
        [t - shift, -t / 2.0 - shift, -t / 2.0 - shift]
    };
    for r in roots.iter_mut() {
        *r = polish(c2, c1, c0, *r, 2);
    }
    roots.sort_by(|x, y| y.total_cmp(x));
    roots
}

/// Greatest real root of `x³ + c2 x² + c1 x + c0` by the trigonometric form
/// (three real roots) or Cardano's formula (one real root), then two
/// Newton polish steps.
pub fn largest_cubic_root(c2: f64, c1: f64, c0: f64) -> f64 {
    let (p, q, shift) = depress(c2, c1, c0);
    let disc = (q / 2.0).powi(2) + (p / 3.0).powi(3);
    let root = if disc < 0.0 {
        let r = (-p / 3.0).sqrt();
        let phi = (-q / 2.0 / (r * r * r)).clamp(-1.0, 1.0).acos();
        2.0 * r * (phi / 3.0).cos() - shift
    } else {
        let s = disc.sqrt();
        let t = (-q / 2.0 + s).cbrt() + (-q / 2.0 - s).cbrt();
        let single = t - shift;
        // near disc = 0 the complex pair collapses onto a real double root at -t/2
        let double = -t / 2.0 - shift;
        if cubic_eval(c2, c1, c0, double).abs() <= 1e-8 * double.abs().powi(3).max(1.0) {
            single.max(double)
        } else {
            single
        }
    };
    polish(c2, c1, c0, root, 2)
}
