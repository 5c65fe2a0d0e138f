//! Average-degree lower bound on the adjacency radius of P(C_n) against the
//! minimum-degree bound, and the transmission bounds on the distance radius.

use power_spectra::bounds::{adjacency_lower_cyclic, distance_bounds_cyclic};

fn main() -> power_spectra::Result<()> {
    println!("{:>4} {:>10} {:>10} {:>10} | {:>10} {:>10} {:>10} tight", "n", "min-deg", "avg-deg", "lambda_1", "lower", "rho_1", "upper");
    for n in [6, 10, 12, 15, 16, 30, 36, 60, 105] {
        let a = adjacency_lower_cyclic(n)?;
        let d = distance_bounds_cyclic(n)?;
        println!(
            "{n:>4} {:>10.5} {:>10.5} {:>10.5} | {:>10.5} {:>10.5} {:>10.5} {}",
            a.prior_lower.unwrap_or(f64::NAN),
            a.lower,
            a.radius,
            d.lower,
            d.radius,
            d.upper.unwrap_or(f64::NAN),
            d.lower_tight && d.upper_tight
        );
    }
    Ok(())
}
