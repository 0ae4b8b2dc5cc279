//! Trans-Sasakian structure detection and the Reeb-field criteria.
//!
//! A (2n+1)-dimensional almost-contact metric structure (φ, ξ, η) is
//! trans-Sasakian of type (α, β) when ∇φ satisfies one linear identity.
//! For the Heisenberg group that identity holds exactly at (α, β) = (1/2, 0),
//! and for the oscillator groups the same is true after restricting to the
//! kernel of θ (the ζ-free directions).
//!
//! Run with `cargo run --example sasakian_check`.

use oscigeo::contact::{
    reeb_mean_curvature_formula, reeb_tg_condition, trans_sasakian_residual, ContactData,
    TransSasakianCoeffs,
};
use oscigeo::oscillator::{heisenberg_algebra, oscillator_algebra};
use oscigeo::{OscillatorSpec, Rat, Scalar};

fn main() -> oscigeo::Result<()> {
    // Exact residuals on the Heisenberg groups: zero at (1/2, 0), visibly
    // nonzero at the Sasakian normalization (1, 0).
    println!("Heisenberg groups, exact trans-Sasakian residuals:");
    for n in 1..=3usize {
        let alg = heisenberg_algebra::<Rat>(n)?;
        let contact = ContactData::heisenberg(n);
        let at_half = trans_sasakian_residual(
            &alg,
            &contact,
            &TransSasakianCoeffs {
                alpha: Rat::from_ratio(1, 2),
                beta: Rat::from_int(0),
            },
        )?;
        let at_one = trans_sasakian_residual(
            &alg,
            &contact,
            &TransSasakianCoeffs {
                alpha: Rat::from_int(1),
                beta: Rat::from_int(0),
            },
        )?;
        println!("  H({n},1): residual at (1/2, 0) = {at_half}, at (1, 0) = {at_one}");
    }

    // The oscillator group restricted to ker θ reproduces the same
    // structure, independently of the frequencies.
    let spec = OscillatorSpec::new(2, vec![Rat::from_int(1), Rat::from_int(-3)])?;
    let alg = oscillator_algebra(&spec)?;
    let contact = ContactData::oscillator(2);
    let res = trans_sasakian_residual(
        &alg,
        &contact,
        &TransSasakianCoeffs {
            alpha: Rat::from_ratio(1, 2),
            beta: Rat::from_int(0),
        },
    )?;
    println!("\nG₂(1,-3) on ker θ: residual at (1/2, 0) = {res}");

    // Reeb-field criteria in terms of (α, β) alone. The characteristic
    // field is totally geodesic in the unit tangent bundle only in the
    // cosymplectic (α = 0) and Sasakian (α = 1) cases when β = 0.
    println!("\nReeb total-geodesy condition (β = 0):");
    for alpha in [0.0, 0.5, 1.0] {
        let ok = reeb_tg_condition(
            &TransSasakianCoeffs { alpha, beta: 0.0 },
            1e-9,
        );
        println!("  α = {alpha}: {}", if ok { "totally geodesic" } else { "not totally geodesic" });
    }

    // Mean-curvature magnitude of the Reeb field in the β-deformed
    // (α = 0) case: zero in dimension 3, and proportional to ‖Δ̄φ‖ with a
    // dimension-dependent prefactor above.
    println!("\nReeb mean curvature, α = 0 deformations:");
    for (dim, beta, phi_norm) in [(3usize, 2.0, 0.0), (5, 1.0, 2.0), (7, 2.0, 3.0)] {
        let h = reeb_mean_curvature_formula(
            dim,
            &TransSasakianCoeffs { alpha: 0.0, beta },
            Some(phi_norm),
        )?;
        println!("  dim {dim}, β = {beta}, ‖Δ̄φ‖ = {phi_norm}: |H| = {h:.6}");
    }
    Ok(())
}
