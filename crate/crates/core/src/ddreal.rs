//! Double-double arithmetic (~31 significant digits) used to accumulate
//! alternating series without summation roundoff and by the high-precision
//! verification oracles in the test suites.
//!
//! A value is stored as an unevaluated sum `hi + lo` with |lo| <= ulp(hi)/2.
//! Products use FMA, so results are accurate to ~1e-32 relative.

/// Unevaluated double-double sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    fn renorm(hi: f64, lo: f64) -> Dd {
        let (s, e) = two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        Dd::renorm(s, e)
    }

    pub fn add_f64(self, x: f64) -> Dd {
        let (s, e) = two_sum(self.hi, x);
        Dd::renorm(s, e + self.lo)
    }

    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        Dd::renorm(p, e)
    }

    pub fn mul_f64(self, x: f64) -> Dd {
        let (p, e) = two_prod(self.hi, x);
        Dd::renorm(p, e + self.lo * x)
    }

    pub fn div(self, other: Dd) -> Dd {
        let q0 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q0));
        let q1 = r.hi / other.hi;
        let r2 = r.sub(other.mul_f64(q1));
        let q2 = r2.hi / other.hi;
        Dd::renorm(q0, q1).add_f64(q2)
    }

    pub fn sqrt(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::from(self.hi.sqrt());
        }
        // One Newton step on top of the f64 square root.
        let s = self.hi.sqrt();
        let sd = Dd::from(s);
        let diff = self.sub(sd.mul(sd));
        sd.add_f64(diff.hi / (2.0 * s))
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }
}

/// π as a double-double constant.
pub const DD_PI: Dd = Dd { hi: std::f64::consts::PI, lo: 1.2246467991473532e-16 };

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_catches_lost_bits() {
        let a = Dd::from(1.0);
        let b = a.add_f64(1e-20);
        assert_eq!(b.hi, 1.0);
        assert_eq!(b.lo, 1e-20);
        assert_eq!(b.sub(Dd::from(1.0)).to_f64(), 1e-20);
    }

    #[test]
    fn mul_and_div_roundtrip() {
        let x = Dd::from(std::f64::consts::SQRT_2);
        let y = x.mul(x); // ~2 but not exact: carries the f64 sqrt error
        let q = y.div(x);
        let err = q.sub(x).to_f64().abs();
        assert!(err < 1e-30, "err = {err:e}");
    }

    #[test]
    fn sqrt_of_pi() {
        let s = DD_PI.sqrt();
        // √π = 1.77245385090551602729816748334...
        assert!((s.hi - std::f64::consts::PI.sqrt()).abs() <= 2.0 * f64::EPSILON * s.hi);
        let resid = s.mul(s).sub(DD_PI).to_f64().abs();
        assert!(resid < 1e-31);
    }
}
