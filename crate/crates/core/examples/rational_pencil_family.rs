//! Z = (d-1)p1 + p2 + ... + p2d for general points: ordinary and symbolic
//! powers coincide.
//!
//! ```shell
//! cargo run --release --example rational_pencil_family
//! ```

use resurgence::algebra::PrimeField;
use resurgence::oracle::{check_rational_pencil_family, OracleOptions, Witness};

fn main() -> resurgence::Result<()> {
    for m in 1..=3 {
        let rep = check_rational_pencil_family(PrimeField::default_prime(), 3, m, 42, &OracleOptions::default())?;
        println!("{}: {:?}", rep.query, rep.outcome);
        for note in &rep.notes {
            println!("  {note}");
        }
        if let Some(Witness::Table { rows }) = &rep.witness {
            let dims: Vec<String> = rows.iter().map(|r| format!("{}:{}", r.degree, r.left)).collect();
            println!("  dims {}", dims.join(" "));
        }
    }
    Ok(())
}
