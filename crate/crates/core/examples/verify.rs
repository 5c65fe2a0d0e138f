//! Run the invariant suite over the small parameter ranges.

use power_spectra::commands::{format_verify, verify, VerifyRanges};

fn main() -> power_spectra::Result<()> {
    print!("{}", format_verify(&verify(&VerifyRanges::quick())?));
    Ok(())
}
