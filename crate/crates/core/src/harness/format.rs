/// Formats `x` with 9 significant digits: fixed notation for
/// `|x| >= 1e-4`, scientific below that, and `0` for zero.
pub fn sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let ax = x.abs();
    if ax < 1e-4 {
        return format!("{x:.8e}");
    }
    let fixed = |exp: i32| {
        let decimals = (8 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    };
    let exp = ax.log10().floor() as i32;
    let s = fixed(exp);
    // rounding can carry into the next decade (9.9999999996 -> 10.0000000)
    match s.parse::<f64>() {
        Ok(v) if v.abs() >= 10f64.powi(exp + 1) => fixed(exp + 1),
        _ => s,
    }
}

#[cfg(test)]
mod tests {
    use super::sig9;

    #[test]
    fn nine_significant_digits() {
        assert_eq!(sig9(0.0), "0");
        assert_eq!(sig9(1.0), "1.00000000");
        assert_eq!(sig9(0.422_649_730_810_374_24), "0.422649731");
        assert_eq!(sig9(0.0025), "0.00250000000");
        assert_eq!(sig9(123.456), "123.456000");
        assert_eq!(sig9(-0.5), "-0.500000000");
        assert_eq!(sig9(1.5e-5), "1.50000000e-5");
        assert_eq!(sig9(9.999_999_999_6), "10.0000000");
        assert_eq!(sig9(0.000_999_999_999_96), "0.00100000000");
    }
}
