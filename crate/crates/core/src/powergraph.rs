//! Adjacency and distance matrices of power graphs.
//!
//! Two independent construction routes are provided for every family:
//! [`build_definitional`] enumerates cyclic subgroups with the group
//! arithmetic, while the `build_structural_*` functions assemble the known
//! block forms directly. Both emit rows in the [`CanonicalOrdering`] of the
//! family, so their outputs can be compared entrywise.

use std::fmt::Write as _;

use num_rational::Ratio;
use num_traits::Zero;

use crate::group::{cyclic_generators, euler_phi, gcd, is_prime, Element, Family, GroupSpec};
use crate::spectra::Partition;
use crate::{max_order, Error, Result};

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    Adjacency,
    Distance,
}

impl std::str::FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "adjacency" | "a" => Ok(MatrixKind::Adjacency),
            "distance" | "d" => Ok(MatrixKind::Distance),
            other => Err(Error::domain(format!("unknown matrix kind '{other}'"))),
        }
    }
}

impl std::fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Distance => "distance",
        })
    }
}

/// Dense symmetric matrix with non-negative integer entries and zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    dim: usize,
    data: Vec<u32>,
}

impl SquareMatrix {
    pub fn zeros(dim: usize) -> Self {
        SquareMatrix { dim, data: vec![0; dim * dim] }
    }

    /// Row-major constructor; rejects non-square data, asymmetry and a
    /// non-zero diagonal.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::domain("matrix must have at least one row"));
        }
        let mut data = Vec::with_capacity(dim * dim);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::domain(format!("row {i} has {} entries, expected {dim}", row.len())));
            }
            data.extend(row);
        }
        let m = SquareMatrix { dim, data };
        for i in 0..dim {
            if m.get(i, i) != 0 {
                return Err(Error::domain(format!("diagonal entry ({i},{i}) is non-zero")));
            }
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::domain(format!("matrix is not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.dim + j]
    }

    fn set_sym(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.dim + j] = v;
        self.data[j * self.dim + i] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn row_sum(&self, i: usize) -> u64 {
        self.row(i).iter().map(|&x| u64::from(x)).sum()
    }

    /// All row sums: degrees of an adjacency matrix, transmissions of a
    /// distance matrix.
    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.dim).map(|i| self.row_sum(i)).collect()
    }

    pub fn max_entry(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }

    pub fn is_adjacency(&self) -> bool {
        self.data.iter().all(|&x| x <= 1)
    }

    /// Entries as `f64` rows, for the numerical routines.
    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.dim).map(|i| self.row(i).iter().map(|&x| f64::from(x)).collect()).collect()
    }

    /// `out[i][j] = self[order[i]][order[j]]`. `order` must be a permutation
    /// of a subset of the indices; a proper subset gives the principal submatrix.
    pub fn reindexed(&self, order: &[usize]) -> SquareMatrix {
        let k = order.len();
        let mut data = Vec::with_capacity(k * k);
        for &r in order {
            for &c in order {
                data.push(self.get(r, c));
            }
        }
        SquareMatrix { dim: k, data }
    }

    /// Text export: the dimension on the first line, then one
    /// whitespace-separated row per line.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.dim * self.dim * 2 + 8);
        let _ = writeln!(s, "{}", self.dim);
        for i in 0..self.dim {
            let row: Vec<String> = self.row(i).iter().map(u32::to_string).collect();
            let _ = writeln!(s, "{}", row.join(" "));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let dim: usize = lines
            .next()
            .ok_or_else(|| Error::domain("empty matrix text"))?
            .parse()
            .map_err(|e| Error::domain(format!("bad dimension line: {e}")))?;
        let mut rows = Vec::with_capacity(dim);
        for (i, line) in lines.enumerate() {
            if i >= dim {
                return Err(Error::domain(format!("more than {dim} rows")));
            }
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<u32>().map_err(|e| Error::domain(format!("row {i}: bad entry '{t}': {e}"))))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.len() != dim {
            return Err(Error::domain(format!("expected {dim} rows, found {}", rows.len())));
        }
        SquareMatrix::from_rows(rows)
    }
}

/// Fixed vertex order of a power graph, grouped into the blocks used by the
/// quotient-matrix arguments.
///
/// * cyclic: `V1 = {e} ∪ generators`, then `V2` = remaining residues ascending;
/// * dihedral: `V1 = {e, a, …, a^{n-1}}`, `V2 = {b, ab, …, a^{n-1}b}`;
/// * dicyclic: `V1 = {e, a^n, a, …, a^{n-1}, a^{n+1}, …, a^{2n-1}}`, `V2 = {b, ab, …, a^{2n-1}b}`;
/// * semiprime: `V1 = {e} ∪ generators`, `V2 = {p, 2p, …, (q-1)p}`, `V3 = {q, 2q, …, (p-1)q}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalOrdering {
    family: Family,
    vertices: Vec<Element>,
    block_sizes: Vec<usize>,
}

impl CanonicalOrdering {
    pub fn for_group(g: &GroupSpec) -> Self {
        let elems = |ids: Vec<usize>| ids.into_iter().map(|i| g.element(i).expect("index within order")).collect::<Vec<_>>();
        let (vertices, block_sizes) = match g.family() {
            Family::Cyclic => {
                let n = g.n();
                let v1 = cyclic_v1(n);
                let v2: Vec<usize> = (1..n).filter(|&k| gcd(k, n) != 1).collect();
                let sizes = vec![v1.len(), v2.len()];
                (elems([v1, v2].concat()), sizes)
            }
            Family::SemiprimeCyclic => {
                let (p, q) = g.primes().expect("semiprime spec carries primes");
                let v1 = cyclic_v1(p * q);
                let v2: Vec<usize> = (1..q).map(|k| k * p).collect();
                let v3: Vec<usize> = (1..p).map(|k| k * q).collect();
                let sizes = vec![v1.len(), v2.len(), v3.len()];
                (elems([v1, v2, v3].concat()), sizes)
            }
            Family::Dihedral | Family::Dicyclic => {
                let r = g.rotation_order();
                let v1 = if g.family() == Family::Dicyclic {
                    dicyclic_v1(g.n())
                } else {
                    (0..r).collect()
                };
                let v2: Vec<usize> = (0..r).map(|i| r + i).collect();
                (elems([v1, v2].concat()), vec![r, r])
            }
        };
        CanonicalOrdering { family: g.family(), vertices, block_sizes }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn vertices(&self) -> &[Element] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Sizes of `V1, V2[, V3]`; a block may be empty (cyclic `V2` for prime `n`).
    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    /// Vertex positions of block `k` (0-based: `block(1)` is `V2`).
    pub fn block(&self, k: usize) -> Vec<usize> {
        let start: usize = self.block_sizes[..k].iter().sum();
        (start..start + self.block_sizes[k]).collect()
    }

    /// The block partition with empty blocks dropped.
    pub fn partition(&self) -> Partition {
        let blocks = (0..self.block_sizes.len()).map(|k| self.block(k)).filter(|b| !b.is_empty()).collect();
        Partition::new(blocks, self.len()).expect("canonical blocks form a partition")
    }

    /// Map from element index to vertex position.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.vertices.len()];
        for (v, e) in self.vertices.iter().enumerate() {
            pos[e.index()] = v;
        }
        pos
    }
}

fn cyclic_v1(n: usize) -> Vec<usize> {
    std::iter::once(0)
        .chain(cyclic_generators(n).expect("n >= 2").into_iter().map(Element::index))
        .collect()
}

fn dicyclic_v1(n: usize) -> Vec<usize> {
    let mut v = vec![0, n];
    v.extend((1..2 * n).filter(|&i| i != n));
    v
}

fn guard(order: usize) -> Result<()> {
    let max = max_order();
    if order > max {
        Err(Error::OrderTooLarge { order, max })
    } else {
        Ok(())
    }
}

/// Power graph straight from the definition: `u ~ v` iff `u ≠ v` and one lies
/// in the cyclic subgroup generated by the other.
pub fn build_definitional(g: &GroupSpec) -> Result<SquareMatrix> {
    guard(g.order())?;
    let ordering = CanonicalOrdering::for_group(g);
    let pos = ordering.positions();
    let mut m = SquareMatrix::zeros(g.order());
    for u in g.elements() {
        for v in g.cyclic_subgroup(u)? {
            if v != u {
                m.set_sym(pos[u.index()], pos[v.index()], 1);
            }
        }
    }
    Ok(m)
}

/// `P(C_n)` assembled as `[[J−I, J], [J, A(P(V2))]]` with `l = φ(n)+1`.
///
/// Inside `V2`, residues `u ≠ v` are adjacent iff `gcd(u,n) | gcd(v,n)` or the
/// reverse, since `⟨u⟩` is the unique subgroup of order `n / gcd(u,n)`.
pub fn build_structural_cyclic(n: usize) -> Result<SquareMatrix> {
    let g = GroupSpec::cyclic(n)?;
    guard(n)?;
    let ordering = CanonicalOrdering::for_group(&g);
    let l = euler_phi(n)? + 1;
    let mut m = SquareMatrix::zeros(n);
    for i in 0..n {
        for j in 0..i {
            let adjacent = if i < l || j < l {
                true
            } else {
                let gi = gcd(ordering.vertices[i].index(), n);
                let gj = gcd(ordering.vertices[j].index(), n);
                gi.is_multiple_of(gj) || gj.is_multiple_of(gi)
            };
            if adjacent {
                m.set_sym(i, j, 1);
            }
        }
    }
    Ok(m)
}

/// `P(C_r)` reordered so that row `k` is the rotation `a^{order[k]}`.
fn cyclic_core_in_order(r: usize, order: &[usize]) -> Result<SquareMatrix> {
    let core = build_structural_cyclic(r)?;
    let pos = CanonicalOrdering::for_group(&GroupSpec::cyclic(r)?).positions();
    let idx: Vec<usize> = order.iter().map(|&k| pos[k]).collect();
    Ok(core.reindexed(&idx))
}

/// `P(D_2n)` as `[[A(P(C_n)), E_n], [E_nᵀ, O_n]]`; `E_n` has its identity row
/// set to ones.
pub fn build_structural_dihedral(n: usize) -> Result<SquareMatrix> {
    GroupSpec::dihedral(n)?;
    guard(2 * n)?;
    let core = cyclic_core_in_order(n, &(0..n).collect::<Vec<_>>())?;
    let mut m = SquareMatrix::zeros(2 * n);
    copy_block(&mut m, &core);
    for j in 0..n {
        m.set_sym(0, n + j, 1);
    }
    Ok(m)
}

/// `P(Q_4n)` as `[[A(P(C_2n)), F], [Fᵀ, P]]`: `F` has the rows of `e` and
/// `a^n` set to ones, and `P = [[O, I], [I, O]]` pairs `a^i b` with `a^{n+i} b`.
pub fn build_structural_dicyclic(n: usize) -> Result<SquareMatrix> {
    GroupSpec::dicyclic(n)?;
    guard(4 * n)?;
    let r = 2 * n;
    let core = cyclic_core_in_order(r, &dicyclic_v1(n))?;
    let mut m = SquareMatrix::zeros(2 * r);
    copy_block(&mut m, &core);
    for j in 0..r {
        m.set_sym(0, r + j, 1);
        m.set_sym(1, r + j, 1);
    }
    for i in 0..n {
        m.set_sym(r + i, r + n + i, 1);
    }
    Ok(m)
}

/// `P(Z_pq)` in three blocks: `V1` is complete and joined to everything,
/// `V2` and `V3` are cliques of sizes `q−1` and `p−1` with no edges between them.
pub fn build_structural_semiprime(p: usize, q: usize) -> Result<SquareMatrix> {
    if !is_prime(p) || !is_prime(q) || p == q {
        return Err(Error::domain(format!("semiprime builder needs distinct primes, got p={p}, q={q}")));
    }
    let order = p * q;
    guard(order)?;
    let l = (p - 1) * (q - 1) + 1;
    let v2_end = l + q - 1;
    let mut m = SquareMatrix::zeros(order);
    for i in 0..order {
        for j in 0..i {
            let cross = (l..v2_end).contains(&j) && i >= v2_end;
            if !cross {
                m.set_sym(i, j, 1);
            }
        }
    }
    Ok(m)
}

/// Structural builder for any spec.
pub fn build_structural(g: &GroupSpec) -> Result<SquareMatrix> {
    match g.family() {
        Family::Cyclic => build_structural_cyclic(g.n()),
        Family::Dihedral => build_structural_dihedral(g.n()),
        Family::Dicyclic => build_structural_dicyclic(g.n()),
        Family::SemiprimeCyclic => {
            let (p, q) = g.primes().expect("semiprime spec carries primes");
            build_structural_semiprime(p, q)
        }
    }
}

fn copy_block(dst: &mut SquareMatrix, src: &SquareMatrix) {
    for i in 0..src.dim() {
        for j in 0..i {
            dst.set_sym(i, j, src.get(i, j));
        }
    }
}

/// Distance matrix of a graph of diameter at most two: `D = 2(J − I) − A`.
///
/// Every non-adjacent pair is checked for a common neighbour first; a pair
/// without one means the input is disconnected or has diameter > 2.
pub fn distance_matrix(adj: &SquareMatrix) -> Result<SquareMatrix> {
    if !adj.is_adjacency() {
        return Err(Error::Structure("distance_matrix expects a 0/1 adjacency matrix".into()));
    }
    let n = adj.dim();
    let words = n.div_ceil(64);
    let bits: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut row = vec![0u64; words];
            for j in 0..n {
                if adj.get(i, j) == 1 {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect();
    let mut d = SquareMatrix::zeros(n);
    for i in 0..n {
        for j in 0..i {
            if adj.get(i, j) == 1 {
                d.set_sym(i, j, 1);
            } else if bits[i].iter().zip(&bits[j]).any(|(a, b)| a & b != 0) {
                d.set_sym(i, j, 2);
            } else {
                return Err(Error::Structure(format!(
                    "vertices {j} and {i} are at distance > 2; not a power graph"
                )));
            }
        }
    }
    Ok(d)
}

/// Exact min/max/average of full-matrix row sums over a vertex subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetStats {
    pub min: Rational,
    pub max: Rational,
    pub avg: Rational,
    pub subset: Vec<usize>,
}

impl SubsetStats {
    pub fn avg_f64(&self) -> f64 {
        ratio_to_f64(self.avg)
    }
    pub fn min_f64(&self) -> f64 {
        ratio_to_f64(self.min)
    }
    pub fn max_f64(&self) -> f64 {
        ratio_to_f64(self.max)
    }
}

pub fn ratio_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn row_sum_stats(m: &SquareMatrix, subset: &[usize]) -> Result<SubsetStats> {
    if subset.is_empty() {
        return Err(Error::DegenerateSubset("vertex subset is empty".into()));
    }
    if let Some(&bad) = subset.iter().find(|&&v| v >= m.dim()) {
        return Err(Error::domain(format!("vertex {bad} out of range for dimension {}", m.dim())));
    }
    let sums: Vec<i64> = subset.iter().map(|&v| m.row_sum(v) as i64).collect();
    let total: i64 = sums.iter().sum();
    Ok(SubsetStats {
        min: Rational::from_integer(*sums.iter().min().expect("non-empty")),
        max: Rational::from_integer(*sums.iter().max().expect("non-empty")),
        avg: Rational::new(total, subset.len() as i64),
        subset: subset.to_vec(),
    })
}

/// Degree statistics of `subset`, counting each vertex's degree in the whole graph.
pub fn subset_degree_stats(adj: &SquareMatrix, subset: &[usize]) -> Result<SubsetStats> {
    row_sum_stats(adj, subset)
}

/// Transmission statistics of `subset` in the whole graph.
pub fn subset_transmission_stats(dist: &SquareMatrix, subset: &[usize]) -> Result<SubsetStats> {
    row_sum_stats(dist, subset)
}

/// A power graph with its canonical ordering and both matrices.
#[derive(Debug, Clone)]
pub struct PowerGraph {
    pub group: GroupSpec,
    pub ordering: CanonicalOrdering,
    pub adjacency: SquareMatrix,
    pub distance: SquareMatrix,
}

impl PowerGraph {
    pub fn new(group: GroupSpec) -> Result<Self> {
        let adjacency = build_structural(&group)?;
        let distance = distance_matrix(&adjacency)?;
        Ok(PowerGraph { ordering: CanonicalOrdering::for_group(&group), group, adjacency, distance })
    }

    pub fn matrix(&self, kind: MatrixKind) -> &SquareMatrix {
        match kind {
            MatrixKind::Adjacency => &self.adjacency,
            MatrixKind::Distance => &self.distance,
        }
    }

    /// Average row sum over all vertices, exact.
    pub fn average_row_sum(&self, kind: MatrixKind) -> Rational {
        let m = self.matrix(kind);
        let all: Vec<usize> = (0..m.dim()).collect();
        row_sum_stats(m, &all).map(|s| s.avg).unwrap_or_else(|_| Rational::zero())
    }
}
