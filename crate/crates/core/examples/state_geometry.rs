//! Angles between rays, Uhlmann fidelity and the probability deviation
//! inequalities on a few concrete states.

use clonebound::geometry::{
    angle, mixed_probability_bound_check, projector_deviation_check, spherical_triangle_check,
    uhlmann_fidelity,
};
use clonebound::hilbert::{
    random_density, random_projector, DensityOperator, Projector, Rng, StateVector,
};

fn main() -> clonebound::Result<()> {
    let a = StateVector::basis(2, 0)?;
    let b = StateVector::from_real(&[0.6, 0.8])?;
    let c = StateVector::from_real(&[0.0, 1.0])?;
    println!(
        "angle(|0>, 0.6|0>+0.8|1>) = {:.16}",
        angle(&a, &b)?.radians()
    );

    let p = Projector::rank_one(&a);
    let chk = projector_deviation_check(&a, &b, &p)?;
    println!(
        "|<a|P|a> - <b|P|b>| = {:.4} <= sin angle = {:.4}",
        chk.lhs, chk.rhs
    );

    let tri = spherical_triangle_check(&a, &c, &b)?;
    println!(
        "triangle through a coplanar point: {:.6} <= {:.6}",
        tri.lhs, tri.rhs
    );

    let mixed = DensityOperator::maximally_mixed(2)?;
    println!(
        "F(I/2, |0><0|) = {:.6}",
        uhlmann_fidelity(&mixed, &DensityOperator::pure(&a))?
    );

    let mut rng = Rng::new(3);
    let mut worst = f64::INFINITY;
    for _ in 0..1000 {
        let chi = random_density(3, &mut rng)?;
        let omega = random_density(3, &mut rng)?;
        let p = random_projector(3, 1, &mut rng)?;
        worst = worst.min(mixed_probability_bound_check(&chi, &omega, &p)?.margin);
    }
    println!("mixed-state bound over 1000 random triples: worst margin {worst:.3e}");
    Ok(())
}
