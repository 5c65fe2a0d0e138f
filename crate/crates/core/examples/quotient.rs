//! Quotient matrices of the canonical partitions: equitability, exact
//! entries, interlacing and radius preservation.

use power_spectra::powergraph::PowerGraph;
use power_spectra::spectra::{equitable_radius_equality, interlacing_holds, is_equitable, quotient_matrix, symmetric_eigenvalues};
use power_spectra::{GroupSpec, MatrixKind};

fn show(g: GroupSpec, kind: MatrixKind) -> power_spectra::Result<()> {
    let pg = PowerGraph::new(g)?;
    let m = pg.matrix(kind);
    let pi = pg.ordering.partition();
    let q = quotient_matrix(m, &pi)?;
    let rows: Vec<String> = q
        .entries
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    let small = q.eigenvalues()?;
    let big = symmetric_eigenvalues(m)?.eigenvalues;
    println!("{g} {kind}: blocks {:?}", pi.blocks().iter().map(Vec::len).collect::<Vec<_>>());
    println!("  quotient [{}]", rows.join("; "));
    println!("  quotient eigenvalues {small:.5?}");
    println!("  interlaces: {}", interlacing_holds(&big, &small)?);
    if is_equitable(m, &pi) {
        println!("  equitable; radius preserved: {}", equitable_radius_equality(m, &pi)?);
    } else {
        println!("  not equitable; quotient radius {:.5} <= {:.5}", q.radius()?, big[0]);
    }
    Ok(())
}

fn main() -> power_spectra::Result<()> {
    show(GroupSpec::cyclic(6)?, MatrixKind::Adjacency)?;
    show(GroupSpec::semiprime(3, 5)?, MatrixKind::Adjacency)?;
    show(GroupSpec::semiprime(3, 5)?, MatrixKind::Distance)?;
    show(GroupSpec::dihedral(6)?, MatrixKind::Adjacency)?;
    show(GroupSpec::dicyclic(3)?, MatrixKind::Distance)?;
    Ok(())
}
