//! Predictor against oracle over a grid of (m, r), cells in parallel.
//!
//! ```shell
//! cargo run --release --example crossvalidate_grid -- 7 4
//! ```

use resurgence::algebra::PrimeField;
use resurgence::fatpoints::PointSpec;
use resurgence::oracle::{crossvalidate, OracleOptions};

fn main() -> resurgence::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let n = args.first().copied().unwrap_or(7);
    let size = args.get(1).copied().unwrap_or(4) as u32;
    for spec in [PointSpec::conic(n), PointSpec::generic(n, 42)] {
        let table = crossvalidate(&spec, PrimeField::default_prime(), size, size, &OracleOptions::default())?;
        println!("{spec:?}");
        println!("  m r predicted oracle agree");
        for row in &table.rows {
            println!("  {} {} {:?} {:?} {}", row.m, row.r, row.predicted, row.oracle, row.agree);
        }
        println!("  all agree: {}", table.all_agree());
    }
    Ok(())
}
