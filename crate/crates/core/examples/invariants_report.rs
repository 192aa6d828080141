//! alpha, omega, reg, gamma and resurgence bounds, closed form next to
//! computed values.
//!
//! ```shell
//! cargo run --release --example invariants_report
//! ```

use std::sync::Arc;

use resurgence::algebra::PrimeField;
use resurgence::closedform::{alpha_of_ideal, gamma_value, reg_of_ideal, resurgence, rho_bounds, ConfigKind};
use resurgence::fatpoints::{FatPointScheme, PointConfig, PointSpec};

fn main() -> resurgence::Result<()> {
    let field = PrimeField::default_prime();
    for n in [6u32, 7, 8, 9] {
        let kind = ConfigKind::GeneralSimple { n };
        let (alpha, reg, gamma) = (alpha_of_ideal(kind)?, reg_of_ideal(kind)?, gamma_value(kind)?);
        let (lo, hi) = rho_bounds(alpha, gamma, reg)?;
        let z = FatPointScheme::uniform(Arc::new(PointConfig::new(PointSpec::generic(n as usize, 42), field)?), 1);
        let fi = z.fat_ideal()?;
        println!(
            "{n} general points: alpha {alpha} (computed {}), reg {reg} (computed {}), omega {}, gamma {gamma}, rho {} in [{lo}, {hi}]",
            fi.alpha(),
            fi.reg,
            fi.omega(),
            resurgence(kind)?
        );
    }
    Ok(())
}
