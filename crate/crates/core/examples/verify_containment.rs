//! Brute-force containment checks with witnesses.
//!
//! ```shell
//! cargo run --release --example verify_containment
//! ```

use std::sync::Arc;

use resurgence::algebra::PrimeField;
use resurgence::fatpoints::{FatPointScheme, PointConfig, PointSpec};
use resurgence::oracle::{contains_bruteforce, OracleOptions};

fn main() -> resurgence::Result<()> {
    let field = PrimeField::default_prime();
    let opts = OracleOptions::default();
    let cases = [
        (PointSpec::conic(5), 2, 2),
        (PointSpec::generic(9, 42), 2, 2),
        (PointSpec::generic(9, 42), 3, 2),
        (PointSpec::generic(7, 42), 3, 3),
        (PointSpec::generic(8, 42), 4, 3),
    ];
    for (spec, m, r) in cases {
        let z = FatPointScheme::uniform(Arc::new(PointConfig::new(spec, field)?), 1);
        let rep = contains_bruteforce(&z, m, r, &opts)?;
        println!("{}: {:?} ({:.0} ms)", rep.query, rep.outcome, rep.elapsed_ms);
        if let Some(w) = rep.witness {
            println!("  witness {}", serde_json::to_string(&w).expect("json"));
        }
    }
    Ok(())
}
