//! Classify individual unit fields: residuals, singular values, and the
//! minimal / harmonic / harmonic-map / totally-geodesic verdicts.
//!
//! Run with `cargo run --example classify_field`.

use oscigeo::report::{
    build_family, distinguished_fields, run_check, CheckConfig, FamilyConfig,
};

fn print_report(label: &str, cfg: &CheckConfig) -> oscigeo::Result<()> {
    let doc = run_check(cfg)?;
    let r = &doc.residuals;
    let v = &doc.verdicts;
    println!("{label}");
    println!("  field (normalized): {:?}", doc.field);
    println!(
        "  residuals: mean curvature {:.3e}, totally-geodesic {:.3e}, laplacian defect {:.3e}, \
         hm trace {:.3e}, geodesic {:.3e}",
        r.mean_curvature, r.tgf, r.laplacian_defect, r.hm_trace, r.geodesic_defect
    );
    println!("  singular values: {:?}", doc.singular_values);
    println!(
        "  verdicts: minimal {} | harmonic {} | harmonic map {} | totally geodesic {} | geodesic {}",
        v.minimal, v.harmonic, v.harmonic_map, v.totally_geodesic, v.geodesic
    );
    println!();
    Ok(())
}

fn main() -> oscigeo::Result<()> {
    let family = FamilyConfig::Oscillator {
        n: 1,
        lambda: vec![1.0],
    };

    // The two distinguished directions first: the central field ξ and the
    // frequency direction ζ. ζ is parallel (A = 0), so every residual is
    // literally zero; ξ is minimal and harmonic but not totally geodesic.
    let data = build_family(&family)?;
    for (name, coeffs) in distinguished_fields(&data) {
        print_report(
            &format!("G₁(1), field {name}"),
            &CheckConfig {
                family: family.clone(),
                field: coeffs,
                tolerance: 1e-9,
            },
        )?;
    }

    // A field inside the e-block. Still minimal, with a richer singular
    // spectrum: one direction of the graph tilts with σ² = 5/4.
    print_report(
        "G₁(1), field e1",
        &CheckConfig {
            family: family.clone(),
            field: vec![1.0, 0.0, 0.0, 0.0],
            tolerance: 1e-9,
        },
    )?;

    // Tilt ξ toward the block and minimality degrades smoothly.
    print_report(
        "G₁(1), field (e1 + ξ)/√2",
        &CheckConfig {
            family,
            field: vec![1.0, 0.0, 1.0, 0.0],
            tolerance: 1e-9,
        },
    )?;

    Ok(())
}
