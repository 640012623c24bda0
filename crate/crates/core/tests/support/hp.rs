//! Fixed-point decimal arithmetic on big integers, used as an oracle that
//! shares no code path with the `f64` implementation.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

const DIGITS: u32 = 60;

fn scale() -> BigInt {
    BigInt::from(10u32).pow(DIGITS)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Hp(BigInt);

impl Hp {
    pub fn int(n: i64) -> Hp {
        Hp(BigInt::from(n) * scale())
    }

    /// Exact decimal `num / den`, truncated to the working precision.
    pub fn ratio(num: i64, den: i64) -> Hp {
        Hp(BigInt::from(num) * scale() / BigInt::from(den))
    }

    pub fn zero() -> Hp {
        Hp(BigInt::zero())
    }

    pub fn add(&self, o: &Hp) -> Hp {
        Hp(&self.0 + &o.0)
    }

    pub fn sub(&self, o: &Hp) -> Hp {
        Hp(&self.0 - &o.0)
    }

    pub fn mul(&self, o: &Hp) -> Hp {
        Hp(&self.0 * &o.0 / scale())
    }

    pub fn div(&self, o: &Hp) -> Hp {
        Hp(&self.0 * scale() / &o.0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn sqrt(&self) -> Hp {
        Hp((&self.0 * scale()).sqrt())
    }

    pub fn exp(&self) -> Hp {
        // halve until |x| < 1/2, Taylor, then square back
        let mut x = self.clone();
        let half = Hp::ratio(1, 2);
        let mut halvings = 0;
        while x.0.abs() > half.0 {
            x = Hp(x.0 / 2);
            halvings += 1;
        }
        let mut sum = Hp::int(1);
        let mut term = Hp::int(1);
        for k in 1..200 {
            term = Hp(term.mul(&x).0 / k);
            if term.is_zero() {
                break;
            }
            sum = sum.add(&term);
        }
        for _ in 0..halvings {
            sum = sum.mul(&sum);
        }
        sum
    }

    /// `ln x = 2 atanh((x-1)/(x+1))` after pulling out powers of two.
    pub fn ln(&self) -> Hp {
        assert!(self.0.is_positive(), "ln of non-positive value");
        let two = Hp::int(2);
        let mut x = self.clone();
        let mut twos = 0i64;
        while x > Hp::ratio(3, 2) {
            x = x.div(&two);
            twos += 1;
        }
        while x < Hp::ratio(3, 4) {
            x = x.mul(&two);
            twos -= 1;
        }
        let ln2 = atanh_series(&Hp::ratio(1, 3)).mul(&two);
        let z = x.sub(&Hp::int(1)).div(&x.add(&Hp::int(1)));
        let core = atanh_series(&z).mul(&two);
        core.add(&Hp(ln2.0 * BigInt::from(twos)))
    }

    pub fn to_f64(&self) -> f64 {
        let s = scale();
        let int = &self.0 / &s;
        let frac = &self.0 - &int * &s;
        int.to_f64().unwrap() + frac.to_f64().unwrap() / s.to_f64().unwrap()
    }
}

fn atanh_series(z: &Hp) -> Hp {
    let z2 = z.mul(z);
    let mut power = z.clone();
    let mut sum = Hp::zero();
    let mut k = 1i64;
    loop {
        let term = Hp(power.0.clone() / k);
        if term.is_zero() {
            break;
        }
        sum = sum.add(&term);
        power = power.mul(&z2);
        k += 2;
    }
    sum
}

/// `(n+1) ln(n+1) - n ln n` for an exactly representable ratio `n`.
pub fn thermal_entropy(n: &Hp) -> Hp {
    let n1 = n.add(&Hp::int(1));
    let head = n1.mul(&n1.ln());
    if n.is_zero() {
        head
    } else {
        head.sub(&n.mul(&n.ln()))
    }
}

/// `(e^{beta*omega*sqrt(1+4 eps^2)} - 1)^{-1}`.
pub fn bose_occupation(beta_omega: &Hp, eps: &Hp) -> Hp {
    let four_eps2 = Hp::int(4).mul(&eps.mul(eps));
    let mu = Hp::int(1).add(&four_eps2).sqrt();
    let x = beta_omega.mul(&mu);
    Hp::int(1).div(&x.exp().sub(&Hp::int(1)))
}

#[cfg(test)]
#[test]
fn oracle_self_check() {
    let e = Hp::int(1).exp().to_f64();
    assert!((e - std::f64::consts::E).abs() < 1e-15);
    assert!((Hp::int(10).ln().to_f64() - std::f64::consts::LN_10).abs() < 1e-15);
    assert!((Hp::int(2).sqrt().to_f64() - std::f64::consts::SQRT_2).abs() < 1e-15);
    assert!(Hp::ratio(1, 3).exp().ln().sub(&Hp::ratio(1, 3)).0.abs() < BigInt::from(10u32).pow(5));
}
