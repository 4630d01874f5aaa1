//! Writes the two curve families as CSV and reports the interior maxima.
//!
//! `cargo run --example bound_curves -- [out_dir]`

use std::path::PathBuf;

use clonebound::harness::{cmd_sweep, interior_maxima, SweepSpec};

fn main() -> clonebound::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&dir)?;
    for (name, spec) in [
        ("re_lower.csv", SweepSpec::re_lower_family()),
        ("f_diff.csv", SweepSpec::f_diff_family()),
    ] {
        let path = dir.join(name);
        let table = cmd_sweep(&spec, &path)?;
        println!(
            "{} ({} points) -> {}",
            spec.curve,
            table.z.len(),
            path.display()
        );
        for (l, col) in spec.l_values.iter().zip(&table.columns) {
            let peaks = interior_maxima(col);
            let (k, v) = peaks.first().copied().unwrap_or((0, f64::NAN));
            println!(
                "  L = {l:>2}: {} interior max, at z = {:.4} value {:.6}; value at z = 1: {:.6}",
                peaks.len(),
                table.z[k],
                v,
                col[col.len() - 1]
            );
        }
    }
    Ok(())
}
