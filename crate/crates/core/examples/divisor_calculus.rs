//! Divisor classes on the blow-up of the plane: (-1)-classes, Cremona
//! reduction, nefness.
//!
//! ```shell
//! cargo run --example divisor_calculus
//! ```

use resurgence::divisors::{cremona_reduce, h0_general, is_nef, minus_one_classes, nef_threshold, DivClass, NefContext};

fn main() -> resurgence::Result<()> {
    for n in 1..=8 {
        println!("n = {n}: {} (-1)-classes", minus_one_classes(n)?.len());
    }

    let f = DivClass::uniform(8, 17, 6);
    let red = cremona_reduce(&f)?;
    println!("{f}: F^2 = {}, F.K = {}", f.square(), f.dot_canonical());
    for step in &red.transcript {
        println!("  {}", serde_json::to_string(step).expect("json"));
    }
    println!("  reduces to {}", red.reduced);

    for (n, t, m) in [(6, 5, 2), (7, 8, 3), (8, 17, 6), (5, 3, 2)] {
        let c = DivClass::uniform(n, t, m);
        println!("{c}: nef {}, h0 {}", is_nef(&c, NefContext::General)?, h0_general(&c)?);
    }
    for n in 5..=7 {
        println!("conic n = {n}: tL - E nef from t = {}", nef_threshold(n, 1, NefContext::Conic)?);
    }
    Ok(())
}
