//! Parallel bound sweep over a range of n, written as CSV.

use power_spectra::commands::{self, OutputFormat, SweepSpec};
use power_spectra::{Family, MatrixKind};

fn main() {
    let spec = SweepSpec { family: Family::Cyclic, range: 3..=30, kind: MatrixKind::Distance, format: OutputFormat::Csv };
    let reports = commands::sweep(&spec).expect("valid range");
    print!("{}", commands::to_csv(&reports));
    let failing = commands::sandwich_failures(&reports);
    eprintln!("{} instances, {} sandwich failures", reports.len(), failing.len());
}
