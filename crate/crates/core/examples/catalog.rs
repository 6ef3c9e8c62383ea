//! Runs the worked-example catalog and prints the text report.

use vsl::cli::catalog::{entries, CatalogParams};
use vsl::cli::{render, run_entries};

fn main() {
    let all = entries();
    for e in &all {
        println!("{:>7}  {}", e.id, e.summary);
    }
    let report = match run_entries(&all, &CatalogParams::default(), 64) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e:?}");
            std::process::exit(2);
        }
    };
    print!("{}", render(&report, false));
    std::process::exit(report.exit);
}
