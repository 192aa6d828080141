//! Fat point ideals: graded pieces from vanishing conditions, minimal
//! generators, symbolic powers computed two ways.
//!
//! ```shell
//! cargo run --release --example fat_point_ideals
//! ```

use std::sync::Arc;

use resurgence::algebra::PrimeField;
use resurgence::fatpoints::{strip_conic_factor, FatPointScheme, PointConfig, PointSpec};

fn main() -> resurgence::Result<()> {
    let field = PrimeField::default_prime();

    let six = Arc::new(PointConfig::new(PointSpec::generic(6, 42), field)?);
    println!("6 general points (seed 42, {} sample(s))", six.attempts());
    let z = FatPointScheme::uniform(six, 1);
    for m in 1..=4 {
        let fi = z.symbolic_power(m)?;
        println!(
            "  I^({m}): alpha {}, reg {}, generators in degrees {:?}",
            fi.alpha(),
            fi.reg,
            fi.generator_degrees
        );
    }
    let by_intersection = z.symbolic_power_by_intersection(2)?;
    println!("  I^(2) by intersecting point ideals agrees: {}", by_intersection.equals(&z.symbolic_power(2)?.ideal)?);

    let conic = Arc::new(PointConfig::new(PointSpec::conic(5), field)?);
    let f = conic.conic_form().expect("conic configuration");
    let z = FatPointScheme::uniform(conic, 1);
    println!("5 points on {f}");
    for (m, t) in [(1, 2), (1, 3), (2, 4), (2, 5)] {
        let piece = z.scaled(m).graded_piece(t);
        let (e, rest) = strip_conic_factor(&piece, &f)?;
        println!("  dim I({m}Z)_{t} = {}, conic factor f^{e}, residual degree {}", piece.dim(), rest.degree);
    }
    Ok(())
}
