//! The curvature tensor of an oscillator group, two ways: the frame
//! component table derived from the connection, and the invariant
//! expression in the almost-contact operators (φ, ξ, η, θ). Both are
//! computed exactly and must agree to the last bit.
//!
//! Run with `cargo run --example curvature_components`.

use num::Zero;
use oscigeo::oscillator::{closed_curvature, oscillator_algebra};
use oscigeo::{AlgebraVector, OscillatorSpec, Rat, Scalar};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn main() -> oscigeo::Result<()> {
    // A two-block group with distinct frequencies so nothing degenerates.
    let spec = OscillatorSpec::new(2, vec![Rat::from_int(1), Rat::from_ratio(-5, 2)])?;
    let alg = oscillator_algebra(&spec)?;
    let conn = alg.koszul_connection()?;
    let cur = alg.curvature(&conn);
    let names: Vec<&str> = ["e1", "e2", "e3", "e4", "ξ", "ζ"].to_vec();

    // A few structurally interesting components. Note what is absent as
    // much as what is present: ζ never appears, and in particular
    // R(·,ζ)· = 0 although ∇ζ ≠ 0 — the frequencies cancel out of the
    // curvature entirely.
    println!("selected curvature components of G₂(1, -5/2):");
    for (i, j, k) in [
        (0usize, 2usize, 2usize), // R(e1, e3) e3: mixed block pair
        (0, 1, 1),                // R(e1, e2) e2: inside the x-block
        (0, 4, 4),                // R(e1, ξ) ξ
        (0, 5, 0),                // R(e1, ζ) e1 = 0
        (4, 5, 4),                // R(ξ, ζ) ξ = 0
    ] {
        let comp = cur.component(i, j, k);
        println!(
            "  R({}, {}) {} = {}",
            names[i],
            names[j],
            names[k],
            comp.display_in_frame(&names)
        );
    }

    // The same tensor as one invariant formula, evaluated on random
    // rational vectors and compared exactly — not to a tolerance.
    let mut rng = StdRng::seed_from_u64(23);
    let dim = spec.dim();
    let draw = |rng: &mut StdRng| {
        AlgebraVector::new(
            (0..dim)
                .map(|_| Rat::from_ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4)))
                .collect::<Vec<_>>(),
        )
    };
    let trials = 200;
    for _ in 0..trials {
        let (x, y, z) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
        let via_table = cur.evaluate(&x, &y, &z);
        let via_formula = closed_curvature(&spec, &x, &y, &z)?;
        assert!(via_table.sub(&via_formula).is_zero());
    }
    println!("\ninvariant formula matches the component table exactly on {trials} random triples");

    // The standard identities also hold exactly.
    assert!(cur.antisymmetry_residual().is_zero());
    assert!(cur.first_bianchi_residual().is_zero());
    assert!(cur.pair_symmetry_residual(&alg).is_zero());
    println!("antisymmetry, first Bianchi, and pair symmetry hold exactly");
    Ok(())
}
