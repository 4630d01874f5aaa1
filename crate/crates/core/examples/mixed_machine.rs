//! A cloner driven by a mixed machine state, reported through the weighted
//! error definitions.

use clonebound::bounds::{ae_lower_bound, re_lower_bound};
use clonebound::cloner::{
    asymmetric_cloner, mixed_machine_report, sample_gram_preserving_cloner, symmetric_cloner,
    CloneTask, MachineEnsemble, PairMember, PreparedPair,
};
use clonebound::hilbert::Rng;

fn main() -> clonebound::Result<()> {
    let (z, n, l) = (0.6, 1, 3);
    let task = CloneTask::new(PreparedPair::with_overlap(z, 2)?, n, l)?;
    let mut rng = Rng::new(11);
    let ensemble = MachineEnsemble::new(
        vec![0.5, 0.3, 0.2],
        vec![
            asymmetric_cloner(&task, PairMember::Phi)?,
            symmetric_cloner(&task)?,
            sample_gram_preserving_cloner(&task, &mut rng)?,
        ],
    )?;
    for (mu, m) in ensemble.weights().iter().zip(ensemble.members()) {
        println!(
            "  weight {mu:.1}: AE {:.6}  RE {:.6}",
            m.errors.ae, m.errors.re
        );
    }
    let rep = mixed_machine_report(&ensemble)?;
    println!(
        "mixture: X_phi {:.6}  X_psi {:.6}  AE {:.6}  RE {:.6}",
        rep.x_phi, rep.x_psi, rep.ae, rep.re
    );
    println!(
        "bounds:  AE >= {:.6}  RE >= {:.6}",
        ae_lower_bound(z, n, l)?,
        re_lower_bound(z, n, l)?
    );
    Ok(())
}
