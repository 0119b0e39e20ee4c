//! Small integer helpers shared across modules.

/// Greatest common divisor of the absolute values; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// Gcd of a whole slice; 0 for an empty slice.
pub fn gcd_all(values: &[i64]) -> i64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

/// Frobenius number of `<alpha, beta>` for coprime `alpha, beta >= 1`:
/// `alpha * beta - alpha - beta`.
///
/// Returns `None` when the pair is not coprime or the product overflows.
pub fn frobenius_two_generators(alpha: i64, beta: i64) -> Option<i64> {
    if alpha < 1 || beta < 1 || gcd(alpha, beta) != 1 {
        return None;
    }
    alpha
        .checked_mul(beta)?
        .checked_sub(alpha)?
        .checked_sub(beta)
}
