//! The image of a unit field V is a submanifold V(G) of the unit tangent
//! bundle with its Sasaki metric. This example builds the adapted
//! orthonormal framing of that submanifold — tangents ẽ_α and normals
//! ñ_α as horizontal/vertical pairs — and assembles the mean-curvature
//! vector from the second fundamental form.
//!
//! Run with `cargo run --example sasaki_framing`.

use oscigeo::field::{mean_curvature, singular_frame, tangent_normal_framing};
use oscigeo::oscillator::oscillator_algebra;
use oscigeo::{AlgebraVector, AmbientGeometry, OscillatorSpec, UnitField};

fn main() -> oscigeo::Result<()> {
    let spec = OscillatorSpec::new(1, vec![1.0])?;
    let geom = AmbientGeometry::new(oscillator_algebra(&spec)?)?;
    let names = ["e1", "e2", "ξ", "ζ"];

    let v = AlgebraVector::new(vec![1.0, 0.0, 0.0, 0.0]);
    let field = UnitField::new(geom.algebra(), v)?;
    let nd = geom.nomizu(&field)?;
    let frame = singular_frame(&geom, &nd)?;
    let framing = tangent_normal_framing(&frame);

    println!("V = e1 on G₁(1) — adapted framing of V(G) ⊂ T₁G:");
    for (alpha, (t, nrm)) in framing.tangents.iter().zip(&framing.normals).enumerate() {
        println!(
            "  ẽ_{} = ({}; {})",
            alpha + 1,
            t.horizontal.display_in_frame(&names),
            t.vertical.display_in_frame(&names)
        );
        println!(
            "  ñ_{} = ({}; {})",
            alpha + 1,
            nrm.horizontal.display_in_frame(&names),
            nrm.vertical.display_in_frame(&names)
        );
    }

    // Orthonormality of the 2·dim frame vectors under the Sasaki inner
    // product (block-diagonal: horizontal + vertical).
    let alg = geom.algebra();
    let all: Vec<_> = framing.tangents.iter().chain(&framing.normals).collect();
    let mut max_defect: f64 = 0.0;
    for (i, a) in all.iter().enumerate() {
        for (j, b) in all.iter().enumerate() {
            let expected = if i == j { 1.0 } else { 0.0 };
            max_defect = max_defect.max((a.inner(b, alg) - expected).abs());
        }
    }
    println!("\nlargest orthonormality defect over all {} pairs: {max_defect:.3e}", all.len() * all.len());

    // The mean-curvature vector in this framing. Its component along V is
    // forced to Σ σ²/(1+σ²) by the sphere fibres; minimality is the
    // vanishing of everything orthogonal to V.
    let mc = mean_curvature(&geom, &nd, &frame)?;
    println!("\nmean curvature Ȟ = {}", mc.vector.display_in_frame(&names));
    println!("  forced tangent component ⟨Ȟ, V⟩ = {:.6}", mc.tangent_component);
    println!("  normal coefficients: {:?}", mc.coefficients);
    println!("  minimality residual: {:.3e}", mc.residual);
    println!("  (V = e1 is minimal although Ȟ ≠ 0: the full vector is 34/45 · e1, all of it tangent)");
    Ok(())
}
