//! Element arithmetic in the dicyclic group Q_12 = <a, b | a^6 = e, b^2 = a^3, b a b^-1 = a^-1>.

use power_spectra::GroupSpec;

fn main() -> power_spectra::Result<()> {
    let g = GroupSpec::dicyclic(3)?;
    println!("{g}: order {}", g.order());
    for a in g.elements() {
        let sub: Vec<String> = g.cyclic_subgroup(a)?.into_iter().map(|e| g.label(e)).collect();
        println!("{:>6}  order {}  <{}> = {{{}}}", g.label(a), g.elem_order(a)?, g.label(a), sub.join(", "));
    }
    let b = g.reflection(0)?;
    println!("b^2 = {}", g.label(g.multiply(b, b)?));
    Ok(())
}
