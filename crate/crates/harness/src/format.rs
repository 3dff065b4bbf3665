//! Fixed, platform-independent number formatting for output files.

/// Formats `x` with six significant digits, `%g` style: fixed notation for
/// magnitudes in `[1e-5, 1e6)`, scientific otherwise, trailing zeros
/// trimmed.
pub fn sig6(x: f64) -> String {
    if x.is_nan() {
        return "NaN".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "Inf".to_string() } else { "-Inf".to_string() };
    }
    if x == 0.0 {
        return "0".to_string();
    }
    // round first so the exponent reflects the rounded value (e.g. 999999.7)
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if (-5..6).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    } else {
        format!("{}e{}{:02}", trim_zeros(mantissa), if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// Rounds to six significant digits, for values serialized as JSON numbers.
pub fn round6(x: f64) -> f64 {
    if x.is_finite() {
        sig6(x).parse().unwrap_or(x)
    } else {
        x
    }
}
