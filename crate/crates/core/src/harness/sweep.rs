use std::path::Path;

use rayon::prelude::*;

use super::format::sig9;
use crate::bounds::{curve_point, Curve};
use crate::error::invalid;
use crate::Result;

/// Default number of grid points per curve.
pub const DEFAULT_STEPS: usize = 401;

/// One family of curves on a uniform z grid, both endpoints included.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub curve: Curve,
    pub n: usize,
    pub l_values: Vec<usize>,
    pub z_min: f64,
    pub z_max: f64,
    pub steps: usize,
}

impl SweepSpec {
    /// `F(z|1,L)` for `L = 3, 5, 8, 13, 39` on `[0, 1]`.
    pub fn re_lower_family() -> Self {
        Self {
            curve: Curve::ReLower,
            n: 1,
            l_values: vec![3, 5, 8, 13, 39],
            z_min: 0.0,
            z_max: 1.0,
            steps: DEFAULT_STEPS,
        }
    }

    /// `f(z|1,L)` for `L = 3, 5, 7, 11, 17` on `[0, 1]`.
    pub fn f_diff_family() -> Self {
        Self {
            curve: Curve::FDiff,
            n: 1,
            l_values: vec![3, 5, 7, 11, 17],
            z_min: 0.0,
            z_max: 1.0,
            steps: DEFAULT_STEPS,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0 <= self.z_min && self.z_min < self.z_max && self.z_max <= 1.0) {
            return invalid(format!(
                "need 0 <= z_min < z_max <= 1, got [{}, {}]",
                self.z_min, self.z_max
            ));
        }
        if self.steps < 2 {
            return invalid(format!("need at least 2 steps, got {}", self.steps));
        }
        if self.n < 1 {
            return invalid("N must be at least 1");
        }
        if self.l_values.is_empty() {
            return invalid("no L values given");
        }
        if let Some(l) = self.l_values.iter().find(|&&l| l <= self.n) {
            return invalid(format!("L = {l} is not larger than N = {}", self.n));
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        let last = self.steps - 1;
        (0..self.steps)
            .map(|k| {
                if k == last {
                    self.z_max
                } else {
                    self.z_min + (self.z_max - self.z_min) * k as f64 / last as f64
                }
            })
            .collect()
    }
}

/// Evaluated sweep: one row per z, one column per L.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepTable {
    pub spec: SweepSpec,
    pub z: Vec<f64>,
    /// `columns[i][k]` is the curve for `l_values[i]` at `z[k]`.
    pub columns: Vec<Vec<f64>>,
}

impl SweepTable {
    pub fn column(&self, l: usize) -> Option<&[f64]> {
        self.spec
            .l_values
            .iter()
            .position(|&x| x == l)
            .map(|i| self.columns[i].as_slice())
    }

    /// Header `z,L<l1>,L<l2>,...`, LF line endings, [`sig9`] numbers.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("z");
        for l in &self.spec.l_values {
            out.push_str(&format!(",L{l}"));
        }
        out.push('\n');
        for (k, z) in self.z.iter().enumerate() {
            out.push_str(&sig9(*z));
            for col in &self.columns {
                out.push(',');
                out.push_str(&sig9(col[k]));
            }
            out.push('\n');
        }
        out
    }
}

pub fn run_sweep(spec: &SweepSpec) -> Result<SweepTable> {
    spec.validate()?;
    let z = spec.grid();
    let columns = spec
        .l_values
        .par_iter()
        .map(|&l| {
            z.iter()
                .map(|&zk| curve_point(spec.curve, zk, spec.n, l).map(|p| p.value))
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable {
        spec: spec.clone(),
        z,
        columns,
    })
}

/// Runs the sweep and writes it as CSV to `out`.
pub fn cmd_sweep(spec: &SweepSpec, out: &Path) -> Result<SweepTable> {
    let table = run_sweep(spec)?;
    std::fs::write(out, table.to_csv())?;
    Ok(table)
}

/// Interior local maxima of a sampled curve, as `(index, value)`. Runs of
/// equal values count once.
pub fn interior_maxima(values: &[f64]) -> Vec<(usize, f64)> {
    let mut out = Vec::new();
    let n = values.len();
    let mut k = 1;
    while k + 1 < n {
        let mut end = k;
        while end + 1 < n && values[end + 1] == values[k] {
            end += 1;
        }
        if end + 1 < n && values[k - 1] < values[k] && values[end + 1] < values[k] {
            out.push((k, values[k]));
        }
        k = end + 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ae_lower_endpoints_are_zero() {
        let spec = SweepSpec {
            curve: Curve::AeLower,
            n: 1,
            l_values: vec![2, 3],
            z_min: 0.0,
            z_max: 1.0,
            steps: 2,
        };
        let csv = run_sweep(&spec).unwrap().to_csv();
        assert_eq!(csv, "z,L2,L3\n0,0,0\n1.00000000,0,0\n");
    }

    #[test]
    fn invalid_specs() {
        let mut spec = SweepSpec::re_lower_family();
        spec.steps = 1;
        assert!(run_sweep(&spec).is_err());
        let mut spec = SweepSpec::re_lower_family();
        spec.z_min = 0.5;
        spec.z_max = 0.5;
        assert!(run_sweep(&spec).is_err());
        let mut spec = SweepSpec::re_lower_family();
        spec.l_values = vec![1];
        assert!(run_sweep(&spec).is_err());
        let mut spec = SweepSpec::re_lower_family();
        spec.z_max = 1.5;
        assert!(run_sweep(&spec).is_err());
    }

    #[test]
    fn grid_includes_both_endpoints() {
        let g = SweepSpec::re_lower_family().grid();
        assert_eq!(g.len(), 401);
        assert_eq!((g[0], g[400]), (0.0, 1.0));
        assert_eq!(g[200], 0.5);
    }

    #[test]
    fn maxima_detection() {
        assert_eq!(interior_maxima(&[0.0, 1.0, 0.5]), vec![(1, 1.0)]);
        assert_eq!(interior_maxima(&[0.0, 1.0, 1.0, 0.5]), vec![(1, 1.0)]);
        assert!(interior_maxima(&[0.0, 1.0, 2.0]).is_empty());
        assert_eq!(interior_maxima(&[0.0, 2.0, 1.0, 3.0, 0.0]).len(), 2);
    }
}
