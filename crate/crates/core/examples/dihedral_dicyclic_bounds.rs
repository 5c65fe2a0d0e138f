//! Adjacency and distance radius bounds for D_2n and Q_4n, with the earlier
//! adjacency intervals for comparison.

use power_spectra::bounds::{self, BoundReport};

fn line(name: String, r: &BoundReport) {
    let c = r.comparison();
    println!(
        "{name:>6} [{:>9.5}, {:>9.5}] radius {:>9.5}  earlier [{:>9.5}, {:>9.5}]  subset {}",
        r.lower,
        r.upper.unwrap_or(f64::NAN),
        r.radius,
        r.prior_lower.unwrap_or(f64::NAN),
        r.prior_upper.unwrap_or(f64::NAN),
        c.is_subset()
    );
}

fn main() -> power_spectra::Result<()> {
    println!("adjacency");
    for n in [3, 4, 6, 8, 9, 10, 12, 30] {
        line(format!("D_{}", 2 * n), &bounds::adjacency_bounds_dihedral(n)?);
    }
    for n in [2, 3, 4, 6, 8, 30] {
        line(format!("Q_{}", 4 * n), &bounds::adjacency_bounds_dicyclic(n)?);
    }
    println!("distance");
    for n in [3, 6, 12] {
        let r = bounds::distance_bounds_dihedral(n)?;
        println!("D_{:<4} [{:.5}, {:.5}] radius {:.5}", 2 * n, r.lower, r.upper.unwrap_or(f64::NAN), r.radius);
        let r = bounds::distance_bounds_dicyclic(n)?;
        println!("Q_{:<4} [{:.5}, {:.5}] radius {:.5}", 4 * n, r.lower, r.upper.unwrap_or(f64::NAN), r.radius);
    }
    Ok(())
}
