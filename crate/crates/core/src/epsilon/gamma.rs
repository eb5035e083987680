//! Complex Gamma function (Lanczos, g = 7, n = 9) with reflection.

use num::Complex;

const G: f64 = 7.0;
const COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `Γ(z)`, or `None` at the poles `z = 0, -1, -2, ...`.
pub fn gamma(z: Complex<f64>) -> Option<Complex<f64>> {
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        return None;
    }
    Some(gamma_unchecked(z))
}

fn gamma_unchecked(z: Complex<f64>) -> Complex<f64> {
    let pi = std::f64::consts::PI;
    if z.re < 0.5 {
        // Γ(z) Γ(1 - z) = π / sin(πz)
        let s = (z * pi).sin();
        return Complex::new(pi, 0.0) / (s * gamma_unchecked(Complex::new(1.0, 0.0) - z));
    }
    let z = z - 1.0;
    let mut x = Complex::new(COEFFS[0], 0.0);
    for (i, c) in COEFFS.iter().enumerate().skip(1) {
        x += *c / (z + i as f64);
    }
    let t = z + G + 0.5;
    (2.0 * pi).sqrt() * t.powc(z + 0.5) * (-t).exp() * x
}
