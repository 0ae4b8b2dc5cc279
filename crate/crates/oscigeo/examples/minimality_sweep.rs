//! Sweep the unit sphere of e-block fields on three two-block groups
//! whose frequency patterns put them on different sides of the
//! minimality criterion:
//!
//! * λ = (1, 1): equal frequencies — every e-block field is minimal;
//! * λ = (1, -1): equal squares, opposite signs — minimal exactly on the
//!   balanced fields (equal mass in both blocks);
//! * λ = (1, 2): distinct squares — minimal only when one block carries
//!   all the mass.
//!
//! Run with `cargo run --example minimality_sweep`.

use oscigeo::report::{run_check, run_scan, CheckConfig, FamilyConfig, ScanConfig, Subspace};

fn sweep(label: &str, lambda: [f64; 2]) -> oscigeo::Result<()> {
    let doc = run_scan(&ScanConfig {
        family: FamilyConfig::Oscillator {
            n: 2,
            lambda: lambda.to_vec(),
        },
        samples: 400,
        seed: 2024,
        subspace: Subspace::XY,
        tolerance: 1e-9,
    })?;
    let s = &doc.summary;
    println!(
        "{label}: {} samples — minimal {}, harmonic {}, harmonic map {}, conflicts {}",
        doc.samples, s.minimal, s.harmonic, s.harmonic_map, s.conflicts
    );
    Ok(())
}

fn main() -> oscigeo::Result<()> {
    sweep("G₂(1,  1)", [1.0, 1.0])?;
    sweep("G₂(1, -1)", [1.0, -1.0])?;
    sweep("G₂(1,  2)", [1.0, 2.0])?;

    // On G₂(1,-1) the random sweep finds no minimal fields because the
    // minimal ones form a measure-zero set: the balanced fields. Check
    // one balanced and one unbalanced field directly.
    println!();
    let family = FamilyConfig::Oscillator {
        n: 2,
        lambda: vec![1.0, -1.0],
    };
    for (label, mass) in [("balanced", 0.5f64), ("unbalanced", 0.55)] {
        // Mass split between the two blocks: x-coordinates e1 and e2.
        let doc = run_check(&CheckConfig {
            family: family.clone(),
            field: vec![mass.sqrt(), (1.0 - mass).sqrt(), 0.0, 0.0, 0.0, 0.0],
            tolerance: 1e-9,
        })?;
        println!(
            "G₂(1,-1) {label} field (mass {mass}): minimal {}, harmonic {}, harmonic map {}, \
             mean-curvature residual {:.3e}",
            doc.verdicts.minimal,
            doc.verdicts.harmonic,
            doc.verdicts.harmonic_map,
            doc.residuals.mean_curvature
        );
    }

    // The same comparison on G₂(1,2): single-block fields are minimal,
    // fields spread across both blocks are not.
    let family = FamilyConfig::Oscillator {
        n: 2,
        lambda: vec![1.0, 2.0],
    };
    for (label, field) in [
        ("single-block", vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0]),
        ("mixed-block", vec![0.8, 0.6, 0.0, 0.0, 0.0, 0.0]),
    ] {
        let doc = run_check(&CheckConfig {
            family: family.clone(),
            field,
            tolerance: 1e-9,
        })?;
        println!(
            "G₂(1,2) {label} field: minimal {}, mean-curvature residual {:.3e}",
            doc.verdicts.minimal, doc.residuals.mean_curvature
        );
    }
    Ok(())
}
