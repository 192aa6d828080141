//! Surjectivity of I(Z1)_a x I(Z2)_b -> I(Z1 + Z2)_{a+b} on the conic.
//!
//! ```shell
//! cargo run --release --example multiplication_maps
//! ```

use std::sync::Arc;

use resurgence::algebra::PrimeField;
use resurgence::fatpoints::{FatPointScheme, PointConfig, PointSpec};
use resurgence::oracle::check_mult_map_surjectivity;

fn main() -> resurgence::Result<()> {
    let cfg = Arc::new(PointConfig::new(PointSpec::conic(5), PrimeField::default_prime())?);
    let z = FatPointScheme::uniform(cfg, 1);
    let none = z.scaled(0);
    for (z1, a, z2, b) in [(&z, 3, &z, 3), (&z, 3, &none, 1), (&z.scaled(2), 5, &z, 3), (&z, 2, &z, 2), (&z, 1, &z, 3)] {
        let rep = check_mult_map_surjectivity(z1, a, z2, b)?;
        println!("{}: {:?} {}", rep.query, rep.outcome, serde_json::to_string(&rep.witness).expect("json"));
    }
    Ok(())
}
