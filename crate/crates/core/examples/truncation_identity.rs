//! When alpha(I) = reg(I), the ordinary power is the symbolic power cut off
//! below degree r*alpha.
//!
//! ```shell
//! cargo run --release --example truncation_identity
//! ```

use std::sync::Arc;

use resurgence::algebra::PrimeField;
use resurgence::fatpoints::{FatPointScheme, PointConfig, PointSpec};
use resurgence::oracle::{check_truncation_identity, OracleOptions};

fn main() -> resurgence::Result<()> {
    let opts = OracleOptions::default();
    for n in [3, 6, 8] {
        let cfg = Arc::new(PointConfig::new(PointSpec::generic(n, 42), PrimeField::default_prime())?);
        let z = FatPointScheme::uniform(cfg, 1);
        for r in [2, 3] {
            match check_truncation_identity(&z, r, &opts) {
                Ok(rep) => println!("{}: {:?}; {}", rep.query, rep.outcome, rep.notes.join("; ")),
                Err(e) => println!("n = {n}, r = {r}: {e}"),
            }
        }
    }
    Ok(())
}
