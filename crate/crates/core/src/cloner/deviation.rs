use super::{CloneTask, ClonerResult, PairMember, PlaneFrame};
use crate::geometry::InequalityCheck;
use crate::hilbert::{local_expectation, Projector};
use crate::{Error, Result};

/// `|P(a for j | V^(s)) - p(a|s)| <= X^(s)` for both members and every
/// output slot `j`, evaluated on the full `L`-particle outputs.
///
/// `projector` acts on a single particle.
pub fn measurement_deviation_checks(
    task: &CloneTask,
    frame: &PlaneFrame,
    result: &ClonerResult,
    projector: &Projector,
) -> Result<Vec<InequalityCheck>> {
    if projector.dim() != task.pair().dim() {
        return Err(Error::DimensionMismatch(projector.dim(), task.pair().dim()));
    }
    let mut checks = Vec::with_capacity(2 * task.l());
    for which in [PairMember::Phi, PairMember::Psi] {
        let v = frame.embed(result.output(which))?;
        let target = projector.probability(task.pair().member(which))?;
        let bound = result.error_size(which);
        for slot in 0..task.l() {
            let p = local_expectation(&v, projector.matrix(), slot, task.l())?;
            checks.push(InequalityCheck::new((p - target).abs(), bound));
        }
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cloner::{asymmetric_cloner, canonical_plane, symmetric_cloner, PreparedPair};
    use crate::hilbert::{random_projector, Rng};

    #[test]
    fn deviations_stay_below_error_sizes() {
        let mut rng = Rng::new(5);
        let pair = PreparedPair::random_with_overlap(0.6, 2, &mut rng).unwrap();
        let task = CloneTask::new(pair, 2, 5).unwrap();
        let frame = canonical_plane(&task).unwrap();
        for res in [
            symmetric_cloner(&task).unwrap(),
            asymmetric_cloner(&task, PairMember::Phi).unwrap(),
        ] {
            for _ in 0..20 {
                let p = random_projector(2, 1, &mut rng).unwrap();
                let checks = measurement_deviation_checks(&task, &frame, &res, &p).unwrap();
                assert_eq!(checks.len(), 10);
                assert!(checks.iter().all(|c| c.passed));
            }
        }
    }

    #[test]
    fn perfect_branch_reproduces_statistics() {
        let mut rng = Rng::new(6);
        let task = CloneTask::new(PreparedPair::with_overlap(0.5, 2).unwrap(), 1, 3).unwrap();
        let frame = canonical_plane(&task).unwrap();
        let res = asymmetric_cloner(&task, PairMember::Phi).unwrap();
        let p = random_projector(2, 1, &mut rng).unwrap();
        let checks = measurement_deviation_checks(&task, &frame, &res, &p).unwrap();
        // phi slots come first
        assert!(checks[..3].iter().all(|c| c.lhs < 1e-12));
    }

    #[test]
    fn projector_dimension_must_match() {
        let task = CloneTask::new(PreparedPair::with_overlap(0.5, 2).unwrap(), 1, 2).unwrap();
        let frame = canonical_plane(&task).unwrap();
        let res = symmetric_cloner(&task).unwrap();
        let p = Projector::identity(3);
        assert!(measurement_deviation_checks(&task, &frame, &res, &p).is_err());
    }
}
