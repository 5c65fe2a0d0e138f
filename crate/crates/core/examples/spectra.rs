//! Adjacency and distance spectra of D_12 by Jacobi, with the spectral
//! radius cross-checked by power iteration.

use power_spectra::powergraph::PowerGraph;
use power_spectra::spectra::{spectral_radius_power_iteration, symmetric_eigenvalues};
use power_spectra::{GroupSpec, MatrixKind};

fn main() -> power_spectra::Result<()> {
    let pg = PowerGraph::new(GroupSpec::dihedral(6)?)?;
    for kind in [MatrixKind::Adjacency, MatrixKind::Distance] {
        let m = pg.matrix(kind);
        let jac = symmetric_eigenvalues(m)?;
        let pow = spectral_radius_power_iteration(m)?;
        let eig: Vec<String> = jac.eigenvalues.iter().map(|x| format!("{x:.5}")).collect();
        println!("{kind}: [{}]", eig.join(", "));
        println!(
            "  radius {:.10} (multiplicity {}), power iteration {:.10} after {} steps",
            jac.radius, jac.radius_multiplicity, pow.radius, pow.iterations
        );
    }
    Ok(())
}
