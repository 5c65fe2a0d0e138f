//! Recompute the worked example values and compare them to five decimals.

use power_spectra::commands;

fn main() -> power_spectra::Result<()> {
    let lines = commands::reproduce()?;
    print!("{}", commands::format_repro(&lines));
    let failed = lines.iter().filter(|l| !l.pass).count();
    println!("{} of {} values reproduced", lines.len() - failed, lines.len());
    Ok(())
}
