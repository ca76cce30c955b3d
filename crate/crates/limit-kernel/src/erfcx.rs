use libm::erfc;

/// Scaled complementary error function `exp(x^2) erfc(x)`.
pub fn erfcx(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x < 0.0 {
        // erfc(-y) = 2 - erfc(y)
        return 2.0 * (x * x).exp() - erfcx(-x);
    }
    if x < 20.0 {
        return (x * x).exp() * erfc(x);
    }
    // 1/(x sqrt(pi)) sum_k (-1)^k (2k-1)!! / (2x^2)^k
    let inv = 1.0 / (2.0 * x * x);
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..10 {
        term *= -((2 * k - 1) as f64) * inv;
        sum += term;
    }
    sum / (x * std::f64::consts::PI.sqrt())
}
