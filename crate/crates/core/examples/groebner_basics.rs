//! Gröbner bases, membership and intersection in k[x, y, z].
//!
//! ```shell
//! cargo run --example groebner_basics
//! ```

use resurgence::algebra::RationalField;
use resurgence::groebner::buchberger;
use resurgence::ideals::Ideal;
use resurgence::poly::{MonomialOrder, Poly, Ring};

fn main() -> resurgence::Result<()> {
    let ring = Ring::plane(RationalField);
    let gens = vec![Poly::parse("x^2 - y*z", &ring)?, Poly::parse("x*y - z^2", &ring)?];

    let gb = buchberger(&ring, &gens, MonomialOrder::GrevLex, None)?;
    println!("reduced grevlex basis:");
    for g in gb.polys() {
        println!("  {g}");
    }

    let f = Poly::parse("x^3*y - x*y*z^2", &ring)?;
    println!("{f} reduces to {}", gb.normal_form(&f)?);

    let i = Ideal::parse(&ring, &["x", "y"])?;
    let j = Ideal::parse(&ring, &["y", "z"])?;
    let meet = i.intersect(&j)?.minimalize()?;
    println!("(x, y) ∩ (y, z) = ({})", meet.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "));
    println!("hilbert function of (x, y)·(y, z): {:?}", (0..6).map(|t| i.product(&j).and_then(|p| p.hilbert_function(t))).collect::<Result<Vec<_>, _>>()?);
    Ok(())
}
