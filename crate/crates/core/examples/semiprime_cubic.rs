//! Characteristic cubics of the three-block quotients of P(Z_pq); their
//! largest roots are the adjacency and distance radii.

use power_spectra::bounds::{adjacency_cubic_semiprime, distance_cubic_semiprime};
use power_spectra::powergraph::PowerGraph;
use power_spectra::spectra::symmetric_eigenvalues;
use power_spectra::GroupSpec;

fn main() -> power_spectra::Result<()> {
    for (p, q) in [(2, 3), (2, 5), (3, 5), (5, 7), (7, 11)] {
        let pg = PowerGraph::new(GroupSpec::semiprime(p, q)?)?;
        let a = adjacency_cubic_semiprime(p, q)?;
        let d = distance_cubic_semiprime(p, q)?;
        println!(
            "Z_{:<3} x^3{:+}x^2{:+}x{:+}: {:.8} (Jacobi {:.8}) | x^3{:+}x^2{:+}x{:+}: {:.8} (Jacobi {:.8})",
            p * q,
            a.c2,
            a.c1,
            a.c0,
            a.root,
            symmetric_eigenvalues(&pg.adjacency)?.radius,
            d.c2,
            d.c1,
            d.c0,
            d.root,
            symmetric_eigenvalues(&pg.distance)?.radius
        );
    }
    Ok(())
}
