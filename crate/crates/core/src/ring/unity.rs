use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{FromPrimitive, One, ToPrimitive};
use twofloat::TwoFloat;

use super::{ring_pow, Gaussian};

/// Complex number with double-double (about 106-bit) components.
pub type ComplexReal = Complex<TwoFloat>;

/// `ω^j` for `ω = e^{2πi/d}`.
///
/// When `ω^j` is one of `1, i, -1, -i` the exact Gaussian value is kept
/// alongside the floating approximation.
#[derive(Clone, Debug, PartialEq)]
pub struct RootOfUnity {
    order: usize,
    index: usize,
    exact: Option<Gaussian>,
    approx: ComplexReal,
}

impl RootOfUnity {
    pub fn new(order: usize, index: i64) -> Self {
        assert!(order > 0, "root of unity needs a positive order");
        let index = index.rem_euclid(order as i64) as usize;
        let exact = (4 * index).is_multiple_of(order).then(|| Gaussian::unit((4 * index / order) as i64));
        let approx = match &exact {
            Some(g) => Complex::new(
                TwoFloat::from(g.re.to_f64().expect("unit")),
                TwoFloat::from(g.im.to_f64().expect("unit")),
            ),
            None => refined_root(order, index),
        };
        RootOfUnity { order, index, exact, approx }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn exact(&self) -> Option<&Gaussian> {
        self.exact.as_ref()
    }

    pub fn approx(&self) -> ComplexReal {
        self.approx
    }

    pub fn approx_f64(&self) -> Complex<f64> {
        Complex::new(self.approx.re.hi(), self.approx.im.hi())
    }
}

/// Newton iteration on `z^d = 1` seeded from the `f64` value; each step
/// roughly doubles the number of correct bits, so three steps from 53 bits
/// saturate double-double precision.
fn refined_root(order: usize, index: usize) -> ComplexReal {
    let angle = std::f64::consts::TAU * index as f64 / order as f64;
    let mut z = Complex::new(TwoFloat::from(angle.cos()), TwoFloat::from(angle.sin()));
    let d = TwoFloat::from(order as f64);
    let one = ComplexReal::one();
    for _ in 0..3 {
        let z_d1 = ring_pow(&z, order as u64 - 1);
        let f = z_d1 * z - one;
        let df = z_d1 * Complex::new(d, TwoFloat::from(0.0));
        z -= f / df;
    }
    z
}

/// Rounds the real part to the nearest integer.
///
/// Returns the integer and the distance to it, where the distance also
/// accounts for any imaginary residue.
pub fn round_to_integer(z: ComplexReal) -> (BigInt, f64) {
    let x = z.re;
    let head = x.hi().round();
    let rest = x - TwoFloat::from(head);
    let rest_f = rest.hi() + rest.lo();
    let tail = rest_f.round();
    let frac = (rest - TwoFloat::from(tail)).abs();
    let distance = frac.hi().max(z.im.abs().hi());
    let value = BigInt::from_f64(head).expect("finite") + BigInt::from_f64(tail).expect("finite");
    (value, distance)
}

/// Rounds `z / d` to the nearest integer without dividing in floating
/// point: `z` is rounded first and the integer is divided exactly.
///
/// The distance is measured on the quotient scale, so a sum that lands on a
/// non-multiple of `d` reports how far the quotient is from an integer.
pub fn round_quotient(z: ComplexReal, d: u64) -> (BigInt, f64) {
    let (total, distance) = round_to_integer(z);
    let d_big = BigInt::from(d);
    let (mut q, mut rem) = total.div_mod_floor(&d_big);
    if &rem * 2 > d_big {
        q += 1;
        rem -= &d_big;
    }
    let off = rem.to_f64().expect("remainder below d").abs();
    (q, (off + distance) / d as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_forms_on_gaussian_units() {
        assert_eq!(RootOfUnity::new(4, 1).exact(), Some(&Gaussian::i()));
        assert_eq!(RootOfUnity::new(2, 1).exact(), Some(&Gaussian::new(-1, 0)));
        assert_eq!(RootOfUnity::new(8, 6).exact(), Some(&Gaussian::new(0, -1)));
        assert_eq!(RootOfUnity::new(1, 0).exact(), Some(&Gaussian::new(1, 0)));
        assert!(RootOfUnity::new(3, 1).exact().is_none());
        assert!(RootOfUnity::new(8, 1).exact().is_none());
    }

    #[test]
    fn approximations_are_on_the_unit_circle() {
        for d in 1..40 {
            for j in 0..d {
                let w = RootOfUnity::new(d, j as i64).approx();
                let norm = w.re * w.re + w.im * w.im - TwoFloat::from(1.0);
                assert!(norm.abs().hi() < 1e-28, "d={d} j={j}");
                let back = ring_pow(&w, d as u64) - ComplexReal::one();
                assert!(back.norm_sqr().hi() < 1e-50, "d={d} j={j}");
            }
        }
    }

    #[test]
    fn cube_root_matches_closed_form() {
        let w = RootOfUnity::new(3, 1).approx();
        let half_sqrt3 = TwoFloat::from(3.0).sqrt() / TwoFloat::from(2.0);
        assert!((w.re + TwoFloat::from(0.5)).abs().hi() < 1e-30);
        assert!((w.im - half_sqrt3).abs().hi() < 1e-30);
    }

    #[test]
    fn rounding_large_values() {
        let big = TwoFloat::from(2.0f64.powi(80)) + TwoFloat::from(12345.0);
        let (v, dist) = round_to_integer(Complex::new(big, TwoFloat::from(0.0)));
        assert_eq!(v, (BigInt::from(1) << 80) + 12345);
        assert!(dist < 1e-9);
        let (v, dist) = round_to_integer(Complex::new(TwoFloat::from(-2.75), TwoFloat::from(0.0)));
        assert_eq!(v, BigInt::from(-3));
        assert!((dist - 0.25).abs() < 1e-15);
    }

    #[test]
    fn quotients_avoid_float_division() {
        let t = TwoFloat::from(2.0f64.powi(60)) + TwoFloat::from(2.0);
        let (q, dist) = round_quotient(Complex::new(t, TwoFloat::from(0.0)), 3);
        assert_eq!(q, ((BigInt::from(1) << 60) + 2) / 3);
        assert!(dist < 1e-12);
        let (q, dist) = round_quotient(Complex::new(TwoFloat::from(-7.0), TwoFloat::from(0.0)), 3);
        assert_eq!(q, BigInt::from(-2));
        assert!((dist - 1.0 / 3.0).abs() < 1e-12);
    }
}
