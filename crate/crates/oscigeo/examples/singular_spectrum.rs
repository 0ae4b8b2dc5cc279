//! Singular frames of the shape operator A_V, and the quadratic that
//! pins down its nonzero singular values for fields orthogonal to ξ and ζ.
//!
//! Run with `cargo run --example singular_spectrum`.

use oscigeo::field::singular_frame;
use oscigeo::oscillator::{oscillator_algebra, singular_poly};
use oscigeo::{AlgebraVector, AmbientGeometry, OscillatorSpec, UnitField};

fn main() -> oscigeo::Result<()> {
    // V = e1 on the four-dimensional group: the graph of V tilts in one
    // direction with σ² = 5/4, twists in another with σ² = 1/4, and is
    // flat in the remaining two.
    let spec = OscillatorSpec::new(1, vec![1.0])?;
    let geom = AmbientGeometry::new(oscillator_algebra(&spec)?)?;
    let v = AlgebraVector::new(vec![1.0, 0.0, 0.0, 0.0]);
    let field = UnitField::new(geom.algebra(), v.clone())?;
    let nd = geom.nomizu(&field)?;
    let frame = singular_frame(&geom, &nd)?;
    let names = ["e1", "e2", "ξ", "ζ"];

    println!("V = e1 on G₁(1):");
    println!("  singular values: {:?}", frame.sigma);
    println!("  rank of A: {}", frame.rank);
    for (alpha, sigma) in frame.sigma.iter().enumerate() {
        println!(
            "  σ_{} = {:.6}:  u = {}   f = {}",
            alpha + 1,
            sigma,
            frame.right[alpha].display_in_frame(&names),
            frame.left[alpha].display_in_frame(&names)
        );
    }

    // For unit fields with no ξ or ζ component the two nonzero σ² are the
    // roots of a quadratic in the block masses — no eigensolver needed.
    let poly = singular_poly(&spec, &v)?;
    let (hi, lo) = poly.roots_f64();
    println!("\n  quadratic roots: σ² = {hi} and {lo}");
    let spectrum = poly.sigma_sq_spectrum(spec.n());
    println!("  full σ² spectrum: {spectrum:?}");
    for (a, b) in frame.sigma.iter().zip(&spectrum) {
        assert!((a * a - b).abs() < 1e-9);
    }
    println!("  matches the spectral computation to 1e-9");

    // A two-block example with opposite frequencies: the balanced field
    // (mass 1/2 in each of the blocks e1 and e2) has a clean spectrum
    // {1, 1/4}.
    let spec2 = OscillatorSpec::new(2, vec![1.0, -1.0])?;
    let half = 0.5f64.sqrt();
    let balanced = AlgebraVector::new(vec![half, half, 0.0, 0.0, 0.0, 0.0]);
    let poly2 = singular_poly(&spec2, &balanced)?;
    println!("\nbalanced field on G₂(1,-1):");
    println!("  σ² spectrum: {:?}", poly2.sigma_sq_spectrum(spec2.n()));
    Ok(())
}
