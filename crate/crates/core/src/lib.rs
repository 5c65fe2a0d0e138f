//! Power graphs of small finite groups and their spectra.
//!
//! The crate builds the power graph of the cyclic group `C_n`, the dihedral
//! group `D_2n`, the dicyclic group `Q_4n` and the semiprime cyclic group
//! `Z_pq`, computes adjacency and distance spectra, and evaluates spectral
//! radius bounds obtained from quotient matrices of two- and three-block
//! vertex partitions.
//!
//! | Module | Purpose |
//! |--------|---------|
//! | [`group`] | element arithmetic for the four families |
//! | [`powergraph`] | adjacency/distance matrices, canonical vertex order, degree and transmission stats |
//! | [`spectra`] | Jacobi eigenvalues, power iteration, quotient matrices, interlacing, cubic roots |
//! | [`bounds`] | bound formulas, characteristic cubics, prior bounds and comparisons |
//! | [`commands`] | the logic behind the `power-spectra` binary |
//!
//! ```
//! use power_spectra::{bounds, GroupSpec};
//!
//! let report = bounds::adjacency_bounds_dihedral(6).unwrap();
//! assert!((report.lower - 4.55297).abs() < 1e-5);
//! assert_eq!(report.upper, Some(6.0));
//! assert!(report.sandwich_holds());
//! # let _ = GroupSpec::cyclic(6).unwrap();
//! ```

pub mod bounds;
pub mod commands;
mod error;
pub mod group;
pub mod powergraph;
pub mod spectra;

pub use error::{Error, Result};
pub use group::{Element, Family, GroupSpec};
pub use powergraph::{CanonicalOrdering, MatrixKind, SquareMatrix, SubsetStats};
pub use spectra::{Partition, SpectrumResult};

/// Largest group order accepted by the dense builders unless overridden.
pub const DEFAULT_MAX_ORDER: usize = 4096;

/// Environment variable that overrides [`DEFAULT_MAX_ORDER`].
pub const MAX_ORDER_ENV: &str = "POWER_SPECTRA_MAX_ORDER";

/// The active order guard: `POWER_SPECTRA_MAX_ORDER` when set to a positive
/// integer, otherwise [`DEFAULT_MAX_ORDER`].
pub fn max_order() -> usize {
    std::env::var(MAX_ORDER_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_MAX_ORDER)
}
