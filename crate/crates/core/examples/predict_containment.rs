//! Closed-form verdicts for I^(m) ⊆ I^r and the resurgence of each family.
//!
//! ```shell
//! cargo run --example predict_containment
//! ```

use resurgence::closedform::{predict, resurgence, ConfigKind};

fn main() -> resurgence::Result<()> {
    let kinds = [
        ConfigKind::ConicUniform { n: 5, s: 1 },
        ConfigKind::ConicUniform { n: 7, s: 1 },
        ConfigKind::GeneralSimple { n: 6 },
        ConfigKind::GeneralSimple { n: 8 },
        ConfigKind::GeneralSimple { n: 9 },
    ];
    for kind in kinds {
        println!("{kind:?}: rho = {}", resurgence(kind)?);
        for m in 1..=6 {
            let row: Vec<&str> = (1..=6)
                .map(|r| match predict(kind, m, r).map(|v| v.contains) {
                    Ok(Some(true)) => "+",
                    Ok(Some(false)) => ".",
                    _ => "?",
                })
                .collect();
            println!("  m = {m}: {}", row.join(" "));
        }
    }
    let v = predict(ConfigKind::GeneralSimple { n: 8 }, 4, 3)?;
    println!("8 general points, (4, 3): {}", serde_json::to_string(&v).expect("json"));
    Ok(())
}
