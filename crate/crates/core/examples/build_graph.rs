//! Build the power graph of C_6 in canonical order, both ways, and print
//! the adjacency and distance matrices with degree and transmission data.

use power_spectra::powergraph::{build_definitional, subset_degree_stats, subset_transmission_stats, PowerGraph};
use power_spectra::GroupSpec;

fn main() -> power_spectra::Result<()> {
    let g = GroupSpec::cyclic(6)?;
    let pg = PowerGraph::new(g)?;
    let labels: Vec<String> = pg.ordering.vertices().iter().map(|&v| g.label(v)).collect();
    println!("vertices: {}", labels.join(" "));
    println!("blocks:   {:?}", pg.ordering.block_sizes());
    assert_eq!(pg.adjacency, build_definitional(&g)?);

    print!("adjacency\n{}", pg.adjacency.to_text());
    print!("distance\n{}", pg.distance.to_text());

    let v2 = pg.ordering.block(1);
    let deg = subset_degree_stats(&pg.adjacency, &v2)?;
    let tr = subset_transmission_stats(&pg.distance, &v2)?;
    println!("V2 degrees:       min {} max {} avg {}", deg.min, deg.max, deg.avg);
    println!("V2 transmissions: min {} max {} avg {}", tr.min, tr.max, tr.avg);
    Ok(())
}
