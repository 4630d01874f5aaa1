//! States, tensor products, partial traces and matrix square roots.

use clonebound::hilbert::{
    inner_product, matrix_sqrt_psd, max_abs_diff, partial_trace, random_density, random_unitary,
    tensor_power, unitarity_residual, DensityOperator, Rng, StateVector, Subsystem,
};

fn main() -> clonebound::Result<()> {
    let plus = StateVector::from_real(&[1.0, 1.0].map(|x| x / 2f64.sqrt()))?;
    let zero = StateVector::basis(2, 0)?;
    let ov = inner_product(&zero, &plus)?;
    println!("<0|+> = {:.6}", ov.re);

    // overlaps multiply under tensor powers
    for n in [1, 2, 4, 8] {
        let a = tensor_power(&zero, n)?;
        let b = tensor_power(&plus, n)?;
        println!(
            "n = {n}: <0^n|+^n> = {:.6}  (dim {})",
            inner_product(&a, &b)?.re,
            a.dim()
        );
    }

    let bell = StateVector::from_real(&[1.0, 0.0, 0.0, 1.0].map(|x| x / 2f64.sqrt()))?;
    let reduced = partial_trace(&DensityOperator::pure(&bell), (2, 2), Subsystem::A)?;
    println!("Tr_B |Bell><Bell| =\n{}", reduced.matrix().map(|c| c.re));

    let mut rng = Rng::new(7);
    let rho = random_density(4, &mut rng)?;
    let root = matrix_sqrt_psd(rho.matrix())?;
    let resid = max_abs_diff(&(&root * &root), rho.matrix());
    println!("random 4x4 density: |sqrt(rho)^2 - rho|_max = {resid:.2e}");

    let u = random_unitary(6, &mut rng)?;
    println!("Haar 6x6 unitary residual = {:.2e}", unitarity_residual(&u));
    Ok(())
}
