//! The symmetric cloner against the optimal asymmetric one, measured on
//! explicit outputs and compared with the closed forms.

use clonebound::bounds::{re_lower_bound, re_symmetric};
use clonebound::cloner::{
    asymmetric_cloner, ideal_angle_floor, symmetric_cloner, CloneTask, PairMember, PreparedPair,
};

fn main() -> clonebound::Result<()> {
    let (n, l) = (1, 3);
    println!("N = {n}, L = {l}");
    println!(
        "{:>5} {:>10} {:>10} {:>10} {:>10} {:>10}",
        "z", "floor", "AE_A", "RE_A", "AE_S", "RE_S"
    );
    for z in [0.1, 0.3, 0.5, 0.7, 0.9, 0.99] {
        let task = CloneTask::new(PreparedPair::with_overlap(z, 2)?, n, l)?;
        let asym = asymmetric_cloner(&task, PairMember::Phi)?;
        let sym = symmetric_cloner(&task)?;
        println!(
            "{z:>5} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {:>10.6}",
            ideal_angle_floor(&task).radians(),
            asym.errors.ae,
            asym.errors.re,
            sym.errors.ae,
            sym.errors.re
        );
        assert!((asym.errors.re - re_lower_bound(z, n, l)?).abs() < 1e-9);
        assert!((sym.errors.re - re_symmetric(z, n, l)?).abs() < 1e-9);
    }

    // which member is copied perfectly does not change the errors
    let task = CloneTask::new(PreparedPair::with_overlap(0.5, 2)?, 1, 2)?;
    let a = asymmetric_cloner(&task, PairMember::Phi)?;
    let b = asymmetric_cloner(&task, PairMember::Psi)?;
    println!(
        "z = 0.5, 1 -> 2: RE with phi perfect {:.12}, with psi perfect {:.12}",
        a.errors.re, b.errors.re
    );
    Ok(())
}
