//! Single-particle statistics of every output slot stay within the error
//! size of the corresponding output.

use clonebound::cloner::{
    canonical_plane, measurement_deviation_checks, symmetric_cloner, CloneTask, PreparedPair,
};
use clonebound::hilbert::{random_projector, Rng};

fn main() -> clonebound::Result<()> {
    let mut rng = Rng::new(5);
    let pair = PreparedPair::random_with_overlap(0.7, 2, &mut rng)?;
    let task = CloneTask::new(pair, 3, 10)?;
    let frame = canonical_plane(&task)?;
    let cloner = symmetric_cloner(&task)?;
    println!(
        "3 -> 10 symmetric cloner, X_phi = {:.6}, X_psi = {:.6}",
        cloner.errors.x_phi, cloner.errors.x_psi
    );
    let mut worst = f64::INFINITY;
    let mut largest = 0.0f64;
    for _ in 0..200 {
        let p = random_projector(2, 1, &mut rng)?;
        for c in measurement_deviation_checks(&task, &frame, &cloner, &p)? {
            worst = worst.min(c.margin);
            largest = largest.max(c.lhs);
        }
    }
    println!("200 projectors x 10 slots x 2 states: largest deviation {largest:.6}, worst margin {worst:.3e}");
    Ok(())
}
