//! Powers of conic fat point ideals: (I^r)_t is f^q times a graded piece of a
//! smaller fat point ideal.
//!
//! ```shell
//! cargo run --release --example conic_power_structure
//! ```

use std::sync::Arc;

use resurgence::algebra::PrimeField;
use resurgence::fatpoints::{PointConfig, PointSpec};
use resurgence::oracle::check_conic_power_structure;

fn main() -> resurgence::Result<()> {
    let cfg = Arc::new(PointConfig::new(PointSpec::conic(7), PrimeField::default_prime())?);
    for (m, r) in [(1, 2), (2, 2), (1, 3)] {
        let lo = 2 * m * r;
        for rep in check_conic_power_structure(&cfg, m, r, lo..=lo + 6)? {
            println!("{}: {:?} {}", rep.query, rep.outcome, serde_json::to_string(&rep.witness).expect("json"));
        }
    }
    Ok(())
}
