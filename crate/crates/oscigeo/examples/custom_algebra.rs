//! The engine is not tied to the built-in families: any metric Lie
//! algebra given by structure constants (and optionally a non-identity
//! metric) works. This example loads the compact algebra with cyclic
//! brackets [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2 — the bi-invariant
//! round 3-sphere — from the same JSON document the CLI accepts via
//! `--family custom --algebra PATH`.
//!
//! Run with `cargo run --example custom_algebra`.

use oscigeo::report::{describe_text, run_check, CheckConfig, FamilyConfig};
use oscigeo::MetricLieAlgebra;

const CYCLIC: &str = r#"{
    "dim": 3,
    "structure": [
        [1, 2, 3, 1.0],
        [2, 3, 1, 1.0],
        [3, 1, 2, 1.0]
    ]
}"#;

fn main() -> oscigeo::Result<()> {
    // Tables first. With a bi-invariant metric the connection is half the
    // bracket and all mixed curvature components vanish: constant
    // sectional curvature 1/4.
    let alg = MetricLieAlgebra::from_json(CYCLIC)?;
    let names: Vec<String> = (1..=3).map(|i| format!("e{i}")).collect();
    println!("{}", describe_text("cyclic bracket algebra", &alg, &names)?);

    // Any unit field here has the same geometry (the isometry group acts
    // transitively on directions): minimal and harmonic, but not totally
    // geodesic — the image curls inside the unit tangent bundle.
    let doc = run_check(&CheckConfig {
        family: FamilyConfig::Custom {
            json: CYCLIC.to_string(),
        },
        field: vec![0.0, 0.0, 1.0],
        tolerance: 1e-9,
    })?;
    println!("unit field e3:");
    println!("  singular values: {:?}", doc.singular_values);
    println!(
        "  minimal {}, harmonic {}, harmonic map {}, totally geodesic {}",
        doc.verdicts.minimal,
        doc.verdicts.harmonic,
        doc.verdicts.harmonic_map,
        doc.verdicts.totally_geodesic
    );
    println!(
        "  mean-curvature residual {:.3e}, totally-geodesic residual {:.6}",
        doc.residuals.mean_curvature, doc.residuals.tgf
    );

    // The closed-form verdicts are oscillator-specific, so for a custom
    // algebra they stay empty rather than guessing.
    assert_eq!(doc.closed_form.minimal_xy, None);
    assert_eq!(doc.closed_form.harmonic_map_member, None);

    // A squashed left-invariant metric diag(1, 1, 4) on the same brackets
    // (a Berger-sphere-like deformation) changes the verdicts' numbers
    // but the pipeline is identical.
    let squashed = r#"{
        "dim": 3,
        "structure": [
            [1, 2, 3, 1.0],
            [2, 3, 1, 1.0],
            [3, 1, 2, 1.0]
        ],
        "metric": [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 4.0]]
    }"#;
    let doc = run_check(&CheckConfig {
        family: FamilyConfig::Custom {
            json: squashed.to_string(),
        },
        field: vec![0.0, 0.0, 1.0],
        tolerance: 1e-9,
    })?;
    println!("\nsquashed metric diag(1,1,4), field e3/2:");
    println!("  input norm recorded: {}", doc.input_norm);
    println!("  singular values: {:?}", doc.singular_values);
    println!(
        "  minimal {}, harmonic {}, mean-curvature residual {:.3e}",
        doc.verdicts.minimal, doc.verdicts.harmonic, doc.residuals.mean_curvature
    );
    Ok(())
}
