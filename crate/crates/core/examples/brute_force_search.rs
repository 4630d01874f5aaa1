//! Scans coplanar and out-of-plane cloners and confirms that nothing beats
//! the closed-form relative-error bound.

use clonebound::bounds::re_lower_bound;
use clonebound::cloner::{
    brute_force_min_re_with, ideal_angle_floor, BruteForceConfig, CloneTask, PreparedPair,
};

fn main() -> clonebound::Result<()> {
    for (z, n, l) in [(0.5, 1, 2), (0.3, 2, 5), (0.8, 1, 6), (0.95, 3, 4)] {
        let task = CloneTask::new(PreparedPair::with_overlap(z, 2)?, n, l)?;
        let res = brute_force_min_re_with(&task, &BruteForceConfig::default())?;
        let f = re_lower_bound(z, n, l)?;
        let floor = ideal_angle_floor(&task).radians();
        println!(
            "z = {z}, {n} -> {l}: min RE {:.12} (bound {:.12}), argmin split {:.4} of [0, {:.4}], \
             sampled min {:.6}, {} cloners",
            res.min_re, f, res.argmin_split, floor, res.sampled_min_re, res.evaluated
        );
    }
    Ok(())
}
