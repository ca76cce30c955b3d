use std::f64::consts::PI;

use crate::AiryError;

/// Range accepted by [`airy_ai`].
pub const AIRY_RANGE: (f64, f64) = (-15.0, 15.0);

const AI0: f64 = 0.355_028_053_887_817_2;
const AIP0: f64 = 0.258_819_403_792_806_8;

// Maclaurin series is used on [SERIES_LO, SERIES_HI]; beyond, asymptotics.
const SERIES_LO: f64 = -8.0;
const SERIES_HI: f64 = 5.0;

/// `(Ai(x), Ai'(x))` with absolute accuracy about 1e-10 on [`AIRY_RANGE`].
pub fn airy_ai(x: f64) -> Result<(f64, f64), AiryError> {
    let (lo, hi) = AIRY_RANGE;
    if !(lo..=hi).contains(&x) {
        return Err(AiryError::OutOfRange { x, lo, hi });
    }
    Ok(airy_pair(x))
}

/// Same as [`airy_ai`] without the range check; valid for any finite `x`
/// above about -1e3.
pub fn airy_pair(x: f64) -> (f64, f64) {
    if x > SERIES_HI {
        decaying(x)
    } else if x < SERIES_LO {
        oscillating(-x)
    } else {
        series(x)
    }
}

fn series(x: f64) -> (f64, f64) {
    let x3 = x * x * x;
    // f = sum a_k x^{3k}, g = sum b_k x^{3k+1}
    let (mut f, mut fp, mut g, mut gp) = (1.0, 0.0, x, 1.0);
    let (mut a, mut b) = (1.0, 1.0);
    let mut p3 = 1.0; // x^{3k}
    for k in 1..200 {
        let kf = k as f64;
        a /= (3.0 * kf - 1.0) * (3.0 * kf);
        b /= (3.0 * kf) * (3.0 * kf + 1.0);
        let prev = p3; // x^{3k-3}
        p3 *= x3;
        let tf = a * p3;
        let tfp = 3.0 * kf * a * prev * x * x;
        let tg = b * p3 * x;
        let tgp = (3.0 * kf + 1.0) * b * p3;
        f += tf;
        fp += tfp;
        g += tg;
        gp += tgp;
        let small = |t: f64, s: f64| t.abs() <= 1e-17 * s.abs().max(1e-300);
        if k > 3 && small(tf, f) && small(tfp, fp) && small(tg, g) && small(tgp, gp) {
            break;
        }
    }
    (AI0 * f - AIP0 * g, AI0 * fp - AIP0 * gp)
}

// Coefficients u_k of the Airy asymptotic series and v_k = -(6k+1)/(6k-1) u_k.
fn coefficients(terms: usize) -> (Vec<f64>, Vec<f64>) {
    let mut u = vec![1.0; terms];
    let mut v = vec![1.0; terms];
    for k in 1..terms {
        let kf = k as f64;
        u[k] = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / ((2.0 * kf - 1.0) * 216.0 * kf);
        v[k] = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u[k];
    }
    (u, v)
}

// Sum of c_k / zeta^k with sign (-1)^k, or for `parity = Some(p)` over
// k = p mod 2 with sign (-1)^{floor(k/2)}; stops at the smallest term.
fn truncated(c: &[f64], zeta: f64, parity: Option<usize>) -> f64 {
    let mut sum = 0.0;
    let mut last = f64::INFINITY;
    for (k, &ck) in c.iter().enumerate() {
        let negative = match parity {
            Some(p) if k % 2 != p => continue,
            Some(_) => (k / 2) % 2 == 1,
            None => k % 2 == 1,
        };
        let term = ck / zeta.powi(k as i32);
        if term.abs() > last {
            break;
        }
        last = term.abs();
        sum += if negative { -term } else { term };
    }
    sum
}

const TERMS: usize = 30;

fn decaying(x: f64) -> (f64, f64) {
    let (u, v) = coefficients(TERMS);
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    let q = x.powf(0.25);
    let e = (-zeta).exp() / (2.0 * PI.sqrt());
    let ai = e / q * truncated(&u, zeta, None);
    let aip = -e * q * truncated(&v, zeta, None);
    (ai, aip)
}

// Ai(-z), Ai'(-z) for large positive z.
fn oscillating(z: f64) -> (f64, f64) {
    let (u, v) = coefficients(TERMS);
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    let q = z.powf(0.25);
    let phase = zeta - PI / 4.0;
    let (s, c) = phase.sin_cos();
    let ue = truncated(&u, zeta, Some(0));
    let uo = truncated(&u, zeta, Some(1));
    let ve = truncated(&v, zeta, Some(0));
    let vo = truncated(&v, zeta, Some(1));
    let ai = (c * ue + s * uo) / (PI.sqrt() * q);
    let aip = q * (s * ve - c * vo) / PI.sqrt();
    (ai, aip)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_at_origin() {
        let (a, ap) = airy_ai(0.0).unwrap();
        assert!((a - 0.355_028_053_9).abs() < 1e-10);
        assert!((ap + 0.258_819_403_8).abs() < 1e-10);
    }

    #[test]
    fn reference_values() {
        // Ai(x), Ai'(x) to 15 digits
        let table = [
            (1.0, 0.135_292_416_312_881_4, -0.159_147_441_296_793_2),
            (-1.0, 0.535_560_883_292_352_1, -0.010_160_567_116_645_21),
            (3.0, 0.006_591_139_357_460_719, -0.011_912_976_705_951_32),
            (-5.0, 0.350_761_009_024_114_3, 0.327_192_818_554_443_1),
            (6.0, 9.947_694_360_252_89e-6, -2.476_520_039_703_495e-5),
            (-10.0, 0.040_241_238_486_443_19, 0.996_265_044_132_79),
            (10.0, 1.104_753_255_289_869e-10, -3.520_633_676_738_924e-10),
            (-12.5, -0.276_274_561_381_160_2, -0.419_331_330_419_505_2),
            (12.5, 2.396_827_826_078_05e-14, -8.521_346_564_673_856e-14),
        ];
        for (x, a, ap) in table {
            let (ga, gap) = airy_ai(x).unwrap();
            assert!((ga - a).abs() < 1e-10, "Ai({x}) = {ga} vs {a}");
            assert!((gap - ap).abs() < 1e-9, "Ai'({x}) = {gap} vs {ap}");
        }
    }

    #[test]
    fn methods_agree_at_switch_points() {
        let (a, ap) = series(SERIES_LO);
        let (b, bp) = oscillating(-SERIES_LO);
        assert!((a - b).abs() < 1e-11 && (ap - bp).abs() < 1e-10, "{:e} {:e}", a - b, ap - bp);
        let (a, ap) = series(SERIES_HI);
        let (b, bp) = decaying(SERIES_HI);
        assert!((a - b).abs() < 1e-11 && (ap - bp).abs() < 1e-10, "{:e} {:e}", a - b, ap - bp);
    }

    #[test]
    fn out_of_range() {
        assert!(airy_ai(15.5).is_err());
        assert!(airy_ai(-16.0).is_err());
        assert!(airy_ai(f64::NAN).is_err());
    }

    #[test]
    fn satisfies_airy_equation() {
        // Ai'' from a fourth-order difference of Ai'
        let h = 1e-2;
        let mut x = -14.9;
        while x <= 14.9 {
            let d = |t: f64| airy_pair(t).1;
            let second = (d(x - 2.0 * h) - 8.0 * d(x - h) + 8.0 * d(x + h) - d(x + 2.0 * h)) / (12.0 * h);
            let resid = (second - x * airy_pair(x).0).abs();
            assert!(resid < 1e-9 * (1.0 + x.abs()).powi(3), "x={x}: {resid:.2e}");
            x += 0.0917;
        }
    }
}
