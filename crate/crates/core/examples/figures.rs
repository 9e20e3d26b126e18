//! Writes the data behind every figure as CSV.
//!
//! Usage: `cargo run --example figures -- [out_dir]` (default `figures/`).

use std::path::PathBuf;

use cascade_squeezing::figures::Figure;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    std::fs::create_dir_all(&dir)?;
    for figure in Figure::ALL {
        let table = figure.table()?;
        let path = dir.join(format!("{}.csv", figure.id()));
        std::fs::write(&path, table.to_csv())?;
        println!(
            "{} -> {} ({})",
            figure.id(),
            path.display(),
            table.columns.join(", ")
        );
    }
    Ok(())
}
